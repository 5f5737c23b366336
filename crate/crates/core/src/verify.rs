//! The acceptance checks, one function per criterion, at two budget tiers.
//!
//! `Desk` finishes in minutes on a laptop. `Extended` adds the larger cases
//! (the (3,7) count, graphs on [6], holes for n = 7, more Υ cases and the
//! positive-threshold LP for `H_7^3`).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    hierarchy_report, hypersimplex_family, hypersimplex_functional, is_degree_maximal, is_positive_threshold,
    is_threshold, satisfies_cc, satisfies_dcc,
};
use crate::cubes::{pi_subf, pi_vert, shifted_equivalence_check};
use crate::degseq::{
    count_degree_sequences, is_degree_sequence, merris_roby, partitions, ruch_gutman_graphical, strictly_majorizes,
    GraphClass,
};
use crate::error::{Error, Result};
use crate::families::{enumerate_shifted, is_shifted, shifted::parse_generators, shifted_generate, KFamily};
use crate::hwv::{hw_space_dimension, is_highest_weight};
use crate::symfunc::{
    check_symmetry_one, check_symmetry_two, count_families_with_degree, is_schur_positive, kostka, phi,
    plethysm_em_ek, signed_upsilon, upsilon, upsilon_series_with_budget,
};
use crate::zonotope::holes_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Desk,
    Extended,
}

impl FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tier> {
        match s {
            "desk" => Ok(Tier::Desk),
            "extended" => Ok(Tier::Extended),
            _ => Err(Error::Domain(format!("unknown tier {s:?} (desk or extended)"))),
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Desk => "desk",
            Tier::Extended => "extended",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub tier: Tier,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2}. {} ({:.2}s): {}", self.id, self.name, self.seconds, self.detail)
    }
}

type Check = fn(Tier) -> Result<String>;

pub const CRITERIA: [(&str, Check); 12] = [
    ("degree-sequence counts", degree_sequence_counts),
    ("Littlewood identity", littlewood),
    ("shifted lower bound for k = 3", lower_bound),
    ("Upsilon sign pattern", upsilon_signs),
    ("counterexample battery", counterexamples),
    ("k = 2 collapse", graph_collapse),
    ("cube characterizations", cube_characterizations),
    ("highest weights are shifted", highest_weights),
    ("cross-pipeline agreement", cross_pipeline),
    ("no holes for k = 3", no_holes),
    ("Merris-Roby", merris_roby_equivalence),
    ("complementation symmetries", symmetries),
];

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, tier: Tier) -> Result<Outcome> {
    let (name, check) = *CRITERIA
        .get(id.wrapping_sub(1))
        .ok_or_else(|| Error::Domain(format!("criteria are numbered 1..={}", CRITERIA.len())))?;
    let start = Instant::now();
    let result = check(tier);
    let seconds = start.elapsed().as_secs_f64();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    Ok(Outcome { id, name, tier, passed, detail, seconds })
}

pub fn run_all(tier: Tier) -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(|id| run_criterion(id, tier).expect("valid id")).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InternalConsistency(msg()))
    }
}

fn shifted(n: usize, gens: &str) -> Result<KFamily> {
    shifted_generate(n, 3, &parse_generators(gens)?)
}

fn degree_sequence_counts(tier: Tier) -> Result<String> {
    let mut table = vec![(1, 8, 256u128), (2, 5, 533), (2, 6, 6944), (2, 7, 111850), (3, 5, 533), (3, 6, 42175)];
    if tier == Tier::Extended {
        table.push((3, 7, 5554128));
    }
    for &(k, n, want) in &table {
        let got = count_degree_sequences(n, k)?;
        ensure(got == want, || format!("k={k} n={n}: {got} != {want}"))?;
    }
    Ok(format!("{} table entries", table.len()))
}

fn littlewood(_: Tier) -> Result<String> {
    for m in 0..=5 {
        let e = plethysm_em_ek(m, 2)?;
        let p = phi(2, m)?;
        ensure(e == p, || format!("m={m}: e_m[e_2] = {e} but Φ = {p}"))?;
        ensure(e.terms().all(|(_, c)| c.is_one()), || format!("m={m}: {e} is not multiplicity-free"))?;
    }
    Ok("m <= 5".into())
}

fn lower_bound(_: Tier) -> Result<String> {
    let mut compared = 0;
    for m in 0..=3 {
        let a = plethysm_em_ek(m, 3)?;
        let b = phi(3, m)?;
        for lambda in partitions(3 * m) {
            let (x, y) = (a.coeff(&lambda), b.coeff(&lambda));
            ensure(x >= y, || format!("a < a' at {lambda}: {x} < {y}"))?;
            ensure(lambda.len() > 5 || x == y, || format!("a != a' at {lambda} with length <= 5: {x} vs {y}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} coefficients"))
}

/// `(k, m)` pairs of the published table that fit `km <= 20`.
const EXTENDED_UPSILON: [(usize, usize); 10] =
    [(5, 3), (6, 3), (3, 4), (4, 4), (5, 4), (3, 5), (4, 5), (3, 6), (2, 7), (2, 8)];

fn upsilon_signs(tier: Tier) -> Result<String> {
    for k in 1..=6 {
        let u = upsilon(k, 1)?;
        ensure(u.is_zero(), || format!("Υ_{{{k},1}} = {u}"))?;
    }
    let mut cases: Vec<(usize, usize)> = (2..=5).map(|m| (2, m)).chain([(3, 2), (3, 3), (4, 2)]).collect();
    for &(k, m) in &cases {
        let u = signed_upsilon(k, m)?;
        ensure(is_schur_positive(&u), || format!("(-1)^{m} Υ_{{{k},{m}}} = {u}"))?;
    }
    if tier == Tier::Extended {
        for &(k, m) in &EXTENDED_UPSILON {
            let series = upsilon_series_with_budget(k, m, 20, 20)?;
            for (i, u) in series.iter().enumerate() {
                let signed = if (i + 1) % 2 == 0 { u.clone() } else { u.scale(&BigInt::from(-1)) };
                ensure(is_schur_positive(&signed), || format!("(-1)^{} Υ_{{{k},{}}} = {signed}", i + 1, i + 1))?;
            }
        }
        cases.extend(EXTENDED_UPSILON);
    }
    Ok(format!("Υ_{{k,1}} = 0 for k <= 6; {} sign checks", cases.len()))
}

fn counterexamples(tier: Tier) -> Result<String> {
    // (a) shifted but not degree-maximal
    let a = shifted(9, "178,239,456")?;
    ensure(is_shifted(&a), || "<178,239,456> is not shifted".into())?;
    ensure(a.degree_sequence() == vec![23, 16, 16, 12, 12, 12, 7, 7, 3], || format!("d = {:?}", a.degree_sequence()))?;
    let better = [23, 17, 15, 13, 12, 11, 8, 6, 3];
    ensure(is_degree_sequence(&better, 3), || "(23,17,15,13,12,11,8,6,3) is not realizable".into())?;
    ensure(strictly_majorizes(&better, &a.degree_sequence()), || "no strict majorization".into())?;
    ensure(!is_degree_maximal(&a).maximal, || "<178,239,456> reported degree-maximal".into())?;

    // (b) two shifted realizations of one degree sequence
    let d = vec![23, 19, 18, 17, 15, 12, 11, 7, 4];
    for gens in ["457,168,149,248,239", "456,357,348,267,159"] {
        let f = shifted(9, gens)?;
        ensure(is_shifted(&f) && f.degree_sequence() == d, || format!("<{gens}> has d = {:?}", f.degree_sequence()))?;
    }
    ensure(shifted(9, "457,168,149,248,239")? != shifted(9, "456,357,348,267,159")?, || "families coincide".into())?;

    // (c) cancellation up to 3 with DCC_2 failing
    let c = KFamily::from_digit_strings(5, 3, &["123", "134", "145"])?;
    ensure(satisfies_cc(&c, 3)? && satisfies_dcc(&c, 3)?, || "{123,134,145} fails CC_3 or DCC_3".into())?;
    ensure(!satisfies_dcc(&c, 2)?, || "{123,134,145} satisfies DCC_2".into())?;

    // (d) the hypersimplex family
    let h = hypersimplex_family(7, 3)?;
    ensure(hypersimplex_functional(7).certifies(&h), || "Σ i·x_i does not cut out H_7^3".into())?;
    ensure(is_threshold(&h).is_some(), || "H_7^3 is not threshold".into())?;
    if tier == Tier::Extended {
        let positive = is_positive_threshold(&h);
        ensure(positive.is_none(), || {
            format!("H_7^3 is positive threshold, certificate {}", serde_json::to_string(&positive).unwrap_or_default())
        })?;
        return Ok("(a)-(d) including the positive-threshold LP".into());
    }
    Ok("(a)-(c), (d) threshold part".into())
}

fn graph_collapse(tier: Tier) -> Result<String> {
    let top = if tier == Tier::Extended { 6 } else { 5 };
    let mut total = 0;
    for n in 5..=top {
        let graphs: Vec<KFamily> = KFamily::all(n, 2)?.collect();
        total += graphs.len();
        graphs.par_iter().try_for_each(|g| {
            let r = hierarchy_report(g, 0)?;
            let flags = [
                r.positive_threshold,
                r.threshold,
                r.uniquely_realizable,
                r.degree_maximal,
                r.shifted_isomorphic,
                r.vicinal_total,
                r.rrst,
            ];
            ensure(flags.iter().all(|&f| f == flags[0]), || format!("{g}: flags {flags:?}"))
        })?;
    }
    Ok(format!("{total} graphs"))
}

fn cube_characterizations(_: Tier) -> Result<String> {
    let families: Vec<KFamily> = KFamily::all(5, 3)?.collect();
    families.par_iter().try_for_each(|f| {
        shifted_equivalence_check(f)?;
        let (v, s) = (pi_vert(f)?, pi_subf(f)?);
        let d = f.degree_sequence();
        ensure((1..=5).all(|i| v.last_fiber(i) == d[i - 1]), || format!("{f}: vertex fibers"))?;
        for (t, deg) in f.i_degree_function(2)? {
            ensure(s.head_fiber(&t.elements()) == deg, || format!("{f}: subfacet fiber at {t}"))?;
        }
        Ok::<(), Error>(())
    })?;
    Ok(format!("{} families", families.len()))
}

fn highest_weights(_: Tier) -> Result<String> {
    let mut total = 0;
    for k in [2, 3] {
        let families: Vec<KFamily> = KFamily::all(5, k)?.collect();
        total += families.len();
        families.par_iter().try_for_each(|f| {
            let hw = is_highest_weight(f)?;
            ensure(hw == is_shifted(f), || format!("{f}: highest weight {hw}"))
        })?;
    }
    Ok(format!("{total} families"))
}

fn cross_pipeline(_: Tier) -> Result<String> {
    let mut checked = 0;
    for k in 1..=8 {
        for m in 1..=8 / k {
            let a = plethysm_em_ek(m, k)?;
            let lambdas = partitions(k * m);
            let mut dims = Vec::with_capacity(lambdas.len());
            for lambda in &lambdas {
                let dim = hw_space_dimension(lambda, k, lambda.len().max(k))?;
                let want = a.coeff(lambda);
                ensure(BigInt::from(dim) == want, || format!("k={k} λ={lambda}: hw dimension {dim}, a = {want}"))?;
                dims.push(dim as u128);
                checked += 1;
            }
            for mu in &lambdas {
                let mut sum = 0u128;
                for (lambda, &dim) in lambdas.iter().zip(&dims) {
                    if dim > 0 {
                        sum += dim * kostka(lambda, mu)?;
                    }
                }
                let c = count_families_with_degree(mu, k)?;
                ensure(sum == c, || format!("k={k} μ={mu}: Σ a K = {sum}, c = {c}"))?;
            }
        }
    }
    Ok(format!("{checked} multiplicities"))
}

fn no_holes(tier: Tier) -> Result<String> {
    let top = if tier == Tier::Extended { 7 } else { 6 };
    let mut candidates = 0;
    for n in 3..=top {
        let r = holes_report(n, 3)?;
        ensure(r.holes.is_empty(), || format!("n={n}: hole {:?}", r.holes[0].vector))?;
        candidates += r.candidates;
    }
    Ok(format!("n <= {top}, {candidates} sorted candidates"))
}

fn merris_roby_equivalence(_: Tier) -> Result<String> {
    let mut checked = 0;
    for m in 0..=6 {
        let shifted_degrees: HashSet<Vec<usize>> = enumerate_shifted(2, m)?
            .iter()
            .map(|g| {
                let mut d = g.degree_sequence();
                d.sort_unstable_by(|a, b| b.cmp(a));
                d.retain(|&x| x > 0);
                d
            })
            .collect();
        for d in partitions(2 * m) {
            let class = merris_roby(d.parts())?;
            let rg = ruch_gutman_graphical(d.parts())?;
            let brute = is_degree_sequence(d.parts(), 2);
            let graphical = class != GraphClass::NotGraphical;
            ensure(graphical == rg && rg == brute, || format!("{d}: {class:?}, Ruch-Gutman {rg}, search {brute}"))?;
            let sh = shifted_degrees.contains(d.parts());
            ensure((class == GraphClass::ShiftedDegree) == sh, || format!("{d}: {class:?} but shifted {sh}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions"))
}

fn symmetries(_: Tier) -> Result<String> {
    let mut comparisons = 0;
    for k in 1..=3 {
        for n in k..=6 {
            for report in [check_symmetry_one(k, n, usize::MAX)?, check_symmetry_two(k, n)?] {
                ensure(report.holds(), || format!("k={k} n={n}: {:?}", report.mismatches.first()))?;
                comparisons += report.comparisons;
            }
        }
    }
    Ok(format!("{comparisons} coefficient comparisons"))
}
