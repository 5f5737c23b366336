//! The `hyperdeg` command line: argument parsing, routing to the library and
//! output formatting. No mathematics lives here.

pub mod cache;

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::hierarchy_report;
use crate::cubes::{alpha_sets, pi_subf, pi_vert, shifted_equivalence_check};
use crate::degseq::partition::rearrangements;
use crate::degseq::realizable::check_degree_input;
use crate::degseq::{count_realizations, find_realizations, sorted_degree_sequences, Partition};
use crate::error::{Error, Result};
use crate::families::shifted::{enumerate_shifted_with_budget, parse_generators, shifted_generators, DEFAULT_NODE_BUDGET};
use crate::families::{binomial, is_shifted, shifted_generate, swing, KFamily, Subset};
use crate::hwv::{hw_space_dimension_with_limit, is_highest_weight, DEFAULT_WEIGHT_SPACE_LIMIT};
use crate::symfunc::{
    phi_with_budget, plethysm_em_ek_with_budget, plethysm_monomial, schur_negative_terms, upsilon_series_with_budget,
    SymPoly, DEFAULT_PHI_SUPPORT, DEFAULT_PLETHYSM_DEGREE,
};
use crate::verify::{run_criterion, Tier, CRITERIA};
use crate::zonotope::holes_report;
use cache::Cache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Everything one invocation needs.
#[derive(Debug, Parser)]
#[command(name = "hyperdeg", version, about = "Degree sequences, shifted families and plethysm e_m[e_k]")]
pub struct RunConfig {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// Cache directory (default: $HYPERDEG_CACHE, then ~/.cache/hyperdeg).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Print cache hits, misses and rebuilds to stderr.
    #[arg(long, global = true)]
    pub stats: bool,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// A family given as a JSON file, an explicit member list or shifted generators.
#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// JSON file `{"n":..,"k":..,"members":[[..],..]}`.
    #[arg(long, conflicts_with_all = ["sets", "generators"])]
    pub family: Option<PathBuf>,
    /// Members, e.g. `123,134,145` or `{1,2,10} {3,4,11}`.
    #[arg(long, conflicts_with = "generators")]
    pub sets: Option<String>,
    /// Generators of a shifted family, e.g. `235,146`.
    #[arg(long)]
    pub generators: Option<String>,
    /// Ground set size (default: the largest vertex named).
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Place a family in the threshold / shifted hierarchy, with certificates.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Check CC_t and DCC_t for t up to this.
        #[arg(long, default_value_t = 2)]
        budget_t: usize,
    },
    /// Count the distinct degree sequences of k-families on [n].
    CountDegseq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Decide whether a sequence is a degree sequence and show a realization.
    CheckDegseq {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<usize>,
        /// Also count realizations (labeled families), stopping at this cap.
        #[arg(long)]
        count_cap: Option<u128>,
    },
    /// List the shifted k-families with m members.
    EnumerateShifted {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        node_budget: u64,
    },
    /// Replace A∪{j} by A∪{i}.
    Swing {
        #[command(flatten)]
        family: FamilyArgs,
        /// The (k-1)-set A, e.g. `23`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Cube-stack images, the α-sets and the four shiftedness tests.
    Cubes {
        #[command(flatten)]
        family: FamilyArgs,
        /// Include the equivalence report.
        #[arg(long)]
        check: bool,
        /// Include the vert and subf cell lists.
        #[arg(long)]
        dump_cells: bool,
    },
    /// Lattice points of D_n(k) with sum divisible by k that are not degree sequences.
    Holes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// e_m[e_k] in the Schur or monomial basis.
    Plethysm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, default_value_t = DEFAULT_PLETHYSM_DEGREE, value_parser = budget)]
        max_degree: usize,
    },
    /// Φ_{k,m}: Schur functions of the degree sequences of shifted families.
    Phi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_PHI_SUPPORT, value_parser = budget)]
        max_support: usize,
    },
    /// The correction term Υ_{k,m}.
    Upsilon {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Fail (exit 3) unless (-1)^j Υ_{k,j} is Schur-positive for every j <= m.
        #[arg(long)]
        check_positivity: bool,
        #[arg(long, default_value_t = DEFAULT_PLETHYSM_DEGREE, value_parser = budget)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_PHI_SUPPORT, value_parser = budget)]
        max_support: usize,
    },
    /// Highest-weight multiplicity of λ in the exterior power, or the shifted sweep.
    Hwv {
        #[arg(long, value_delimiter = ',', required_unless_present = "verify_shifted")]
        lambda: Vec<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Check highest weight <=> shifted on every k-family on [n].
        #[arg(long)]
        verify_shifted: bool,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_SPACE_LIMIT)]
        limit: u128,
    },
    /// Run the acceptance criteria.
    Verify {
        #[arg(long, default_value = "desk")]
        tier: String,
        /// Only these criteria (1-based, repeatable).
        #[arg(long)]
        criterion: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Schur,
    Monomial,
}

fn budget(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("budgets must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Largest `C(n,k)` swept by `hwv --verify-shifted`.
const SWEEP_LIMIT: u64 = 16;

/// Rendered result: JSON value, text form and (for sequence sets) CSV.
struct Output {
    json: serde_json::Value,
    text: String,
    csv: Option<String>,
}

impl Output {
    fn new(value: impl Serialize, text: impl Into<String>) -> Result<Output> {
        Ok(Output { json: serde_json::to_value(value)?, text: text.into(), csv: None })
    }

    fn with_csv(mut self, csv: String) -> Output {
        self.csv = Some(csv);
        self
    }
}

/// Parses the process arguments and runs; returns the exit status.
pub fn run() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let config = RunConfig::parse();
    dispatch(config)
}

pub fn dispatch(config: RunConfig) -> i32 {
    match execute(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hyperdeg: {e}");
            e.exit_code()
        }
    }
}

fn execute(config: &RunConfig) -> Result<i32> {
    if let Some(t) = config.threads {
        // a second call in the same process keeps the first pool, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global();
    }
    let mut sink: Box<dyn Write> = match &config.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(std::io::stdout()),
    };
    let mut cache = if config.no_cache {
        Cache::disabled()
    } else {
        Cache::new(cache::default_dir(config.cache_dir.as_deref()))
    };
    let (output, code) = route(&config.command, &mut cache)?;
    let rendered = match config.format {
        Format::Json => serde_json::to_string_pretty(&output.json)? + "\n",
        Format::Text => {
            let mut t = output.text;
            if !t.is_empty() && !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
        Format::Csv => output.csv.ok_or_else(|| Error::Domain("csv output is only offered for sequence sets".into()))?,
    };
    sink.write_all(rendered.as_bytes())?;
    sink.flush()?;
    if config.stats {
        let s = cache.stats();
        eprintln!("cache: hits={} misses={} rebuilds={}", s.hits, s.misses, s.rebuilds);
    }
    Ok(code)
}

fn load_family(args: &FamilyArgs, k_hint: Option<usize>) -> Result<KFamily> {
    if let Some(path) = &args.family {
        let fam: KFamily = serde_json::from_reader(File::open(path)?)?;
        return match args.n {
            Some(n) if n != fam.n() => Err(Error::Domain(format!("--n {n} disagrees with n = {} in the file", fam.n()))),
            _ => Ok(fam),
        };
    }
    let (text, generated) = match (&args.sets, &args.generators) {
        (Some(s), None) => (s, false),
        (None, Some(g)) => (g, true),
        _ => return Err(Error::Domain("give one of --family, --sets or --generators".into())),
    };
    let sets = parse_generators(text)?;
    let k = match (sets.first(), k_hint) {
        (Some(s), _) => s.len(),
        (None, Some(k)) => k,
        (None, None) => return Err(Error::Domain("empty set list".into())),
    };
    let top = sets.iter().filter_map(|&s| Subset::max(s)).max().unwrap_or(k);
    let n = args.n.unwrap_or(top);
    if generated {
        shifted_generate(n, k, &sets)
    } else {
        if sets.iter().any(|s| s.len() != k) {
            return Err(Error::Domain("members have different sizes".into()));
        }
        KFamily::from_subsets(n, k, sets)
    }
}

fn route(command: &Command, cache: &mut Cache) -> Result<(Output, i32)> {
    let output = match command {
        Command::Classify { family, budget_t } => {
            let fam = load_family(family, None)?;
            let r = hierarchy_report(&fam, *budget_t)?;
            let mut text = format!("family: {}\ndegree sequence: {:?}\n", r.family, r.degree_sequence);
            let flags = [
                ("positive threshold", r.positive_threshold),
                ("threshold", r.threshold),
                ("zonotope vertex", r.zonotope_vertex),
                ("uniquely realizable", r.uniquely_realizable),
                ("degree-maximal", r.degree_maximal),
                ("vicinal total", r.vicinal_total),
                ("RRST", r.rrst),
                ("shifted", r.shifted),
                ("shifted-isomorphic", r.shifted_isomorphic),
            ];
            for (name, v) in flags {
                text += &format!("{name}: {v}\n");
            }
            for (c, d) in r.cc.iter().zip(&r.dcc) {
                text += &format!("CC_{}: {}  DCC_{}: {}\n", c.t, c.holds, d.t, d.holds);
            }
            Output::new(&r, text)?
        }
        Command::CountDegseq { n, k } => {
            let key = format!("degseq-n{n}-k{k}");
            let seqs: Vec<Vec<usize>> = cache.get_or_build(&key, || {
                let mut v: Vec<Vec<usize>> = sorted_degree_sequences(*n, *k)?.into_iter().collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                Ok(v)
            })?;
            let count: u128 = seqs.iter().map(|d| rearrangements(d)).sum();
            let mut csv = String::from("sequence,rearrangements\n");
            for d in &seqs {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                csv += &format!("{},{}\n", parts.join(" "), rearrangements(d));
            }
            Output::new(json!({"n": n, "k": k, "count": count.to_string(), "sorted": seqs.len()}), count.to_string())?
                .with_csv(csv)
        }
        Command::CheckDegseq { k, d, count_cap } => {
            check_degree_input(d, *k)?;
            let realization = if *k <= d.len() { find_realizations(d, *k, 1)?.into_iter().next() } else { None };
            let is_seq = realization.is_some() || d.iter().all(|&x| x == 0);
            let count = count_cap.map(|cap| if *k <= d.len() { count_realizations(d, *k, Some(cap)) } else { 1 });
            let mut text = format!("{}\n", if is_seq { "degree sequence" } else { "not a degree sequence" });
            if let Some(f) = &realization {
                text += &format!("realization: {f}\n");
            }
            if let Some(c) = count {
                text += &format!("realizations: {c}{}\n", if Some(c) == *count_cap { " (cap reached)" } else { "" });
            }
            let count = count.map(|c| c.to_string());
            Output::new(json!({"k": k, "d": d, "degree_sequence": is_seq, "realization": realization, "realizations": count}), text)?
        }
        Command::EnumerateShifted { k, m, node_budget } => {
            let key = format!("shifted-k{k}-m{m}");
            let families: Vec<KFamily> = cache.get_or_build(&key, || {
                let mut v = enumerate_shifted_with_budget(*k, *m, *node_budget)?;
                v.sort_by_key(|f| f.iter().map(|s| s.elements()).collect::<Vec<_>>());
                Ok(v)
            })?;
            let mut text = String::new();
            for f in &families {
                let gens: Vec<String> = shifted_generators(f).iter().map(|s| s.to_string()).collect();
                text += &format!("<{}>  {:?}\n", gens.join(","), f.degree_sequence());
            }
            text += &format!("{} shifted {k}-families with {m} members\n", families.len());
            let mut csv = String::from("generators,degrees\n");
            for f in &families {
                let gens: Vec<String> = shifted_generators(f).iter().map(|s| s.to_string()).collect();
                let d: Vec<String> = f.degree_sequence().iter().map(|x| x.to_string()).collect();
                csv += &format!("{},{}\n", gens.join(" "), d.join(" "));
            }
            Output::new(json!({"k": k, "m": m, "count": families.len(), "families": families}), text)?.with_csv(csv)
        }
        Command::Swing { family, a, i, j } => {
            let fam = load_family(family, None)?;
            let a = Subset::from_digits(a).or_else(|_| {
                parse_generators(a)?.into_iter().next().ok_or_else(|| Error::Domain("empty --a".into()))
            })?;
            let after = swing(&fam, a, *i, *j)?;
            let text = format!(
                "{fam}  {:?}\n{after}  {:?}\n",
                fam.degree_sequence(),
                after.degree_sequence()
            );
            Output::new(json!({"before": fam, "after": after, "degrees_before": fam.degree_sequence(), "degrees_after": after.degree_sequence()}), text)?
        }
        Command::Cubes { family, check, dump_cells } => {
            let fam = load_family(family, None)?;
            let alphas = alpha_sets(&fam)?;
            let (vert, subf) = (pi_vert(&fam)?, pi_subf(&fam)?);
            let mut value = json!({
                "family": fam,
                "cells": vert.len(),
                "alphas": alphas,
            });
            let mut text = format!("family: {fam}\ncells: {}\n", vert.len());
            for (j, a) in alphas.iter().enumerate() {
                text += &format!("alpha_{}: {a}\n", j + 1);
            }
            if *check {
                let report = shifted_equivalence_check(&fam)?;
                text += &format!(
                    "shifted: {}  subf ideal: {}  vert ideal: {}  all alphas equal K: {}\n",
                    report.shifted, report.subf_ideal, report.vert_ideal, report.alphas_equal
                );
                value["equivalence"] = serde_json::to_value(&report)?;
            }
            if *dump_cells {
                let cells = |c: &crate::cubes::CellSet| c.cells.iter().cloned().collect::<Vec<Vec<usize>>>();
                value["vert"] = serde_json::to_value(cells(&vert))?;
                value["subf"] = serde_json::to_value(cells(&subf))?;
                text += &format!("vert: {:?}\nsubf: {:?}\n", cells(&vert), cells(&subf));
            }
            Output { json: value, text, csv: None }
        }
        Command::Holes { n, k } => {
            let r = holes_report(*n, *k)?;
            let mut csv = String::new();
            for h in &r.holes {
                let parts: Vec<String> = h.vector.iter().map(|x| x.to_string()).collect();
                csv += &format!("{},true,false\n", parts.join(" "));
            }
            let text = if r.holes.is_empty() {
                format!("no holes among {} sorted candidates", r.candidates)
            } else {
                let list: Vec<String> = r.holes.iter().map(|h| format!("{:?}", h.vector)).collect();
                format!("{} holes: {}", r.holes.len(), list.join(" "))
            };
            Output::new(&r, text)?.with_csv(csv)
        }
        Command::Plethysm { m, k, basis, max_degree } => {
            let p = match basis {
                BasisArg::Schur => plethysm_em_ek_with_budget(*m, *k, *max_degree)?,
                BasisArg::Monomial => plethysm_monomial(*m, *k, *max_degree)?,
            };
            poly_output(&p)?
        }
        Command::Phi { k, m, max_support } => poly_output(&phi_with_budget(*k, *m, *max_support)?)?,
        Command::Upsilon { k, m, check_positivity, max_degree, max_support } => {
            let series = upsilon_series_with_budget(*k, *m, *max_degree, *max_support)?;
            if *check_positivity {
                for (i, u) in series.iter().enumerate() {
                    let j = i + 1;
                    let signed = if j % 2 == 0 { u.clone() } else { u.scale(&(-1).into()) };
                    if let Some((l, c)) = schur_negative_terms(&signed).into_iter().next() {
                        return Err(Error::InternalConsistency(format!(
                            "(-1)^{j} Υ_{{{k},{j}}} has coefficient {c} on s{l}"
                        )));
                    }
                }
            }
            poly_output(series.last().expect("m >= 1"))?
        }
        Command::Hwv { lambda, k, n, verify_shifted, limit } => {
            if *verify_shifted {
                if *k > *n || binomial(*n, *k) > SWEEP_LIMIT {
                    return Err(Error::Budget(format!("sweeping 2^C({n},{k}) families exceeds 2^{SWEEP_LIMIT}")));
                }
                let mut checked = 0u64;
                let mut shifted = 0u64;
                for f in KFamily::all(*n, *k)? {
                    let hw = is_highest_weight(&f)?;
                    if hw != is_shifted(&f) {
                        return Err(Error::InternalConsistency(format!("{f}: highest weight {hw}")));
                    }
                    checked += 1;
                    shifted += u64::from(hw);
                }
                let text = format!("{checked} families, {shifted} highest weight, all shifted exactly when highest weight");
                Output::new(json!({"n": n, "k": k, "families": checked, "highest_weight": shifted}), text)?
            } else {
                let l = Partition::new(lambda.clone())?;
                let dim = hw_space_dimension_with_limit(&l, *k, *n, *limit)?;
                Output::new(json!({"lambda": l.parts(), "k": k, "n": n, "multiplicity": dim}), dim.to_string())?
            }
        }
        Command::Verify { tier, criterion } => {
            let tier: Tier = tier.parse()?;
            let ids: Vec<usize> = if criterion.is_empty() { (1..=CRITERIA.len()).collect() } else { criterion.clone() };
            let outcomes: Vec<_> = ids.iter().map(|&id| run_criterion(id, tier)).collect::<Result<_>>()?;
            let text: Vec<String> = outcomes.iter().map(|o| o.to_string()).collect();
            let failed = outcomes.iter().any(|o| !o.passed);
            let out = Output::new(&outcomes, text.join("\n"))?;
            return Ok((out, if failed { 3 } else { 0 }));
        }
    };
    Ok((output, 0))
}

fn poly_output(p: &SymPoly) -> Result<Output> {
    let mut csv = String::from("partition,coeff\n");
    for (l, c) in p.terms() {
        let parts: Vec<String> = l.parts().iter().map(|x| x.to_string()).collect();
        csv += &format!("{},{c}\n", parts.join(" "));
    }
    Ok(Output::new(p, p.to_string())?.with_csv(csv))
}
