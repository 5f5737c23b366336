//! Classifies a handful of families and prints where each sits in the hierarchy.
//!
//! Usage: `cargo run --release --example classify_hierarchy`

use std::time::Instant;

use hyperdeg::classify::hierarchy_report;
use hyperdeg::families::{shifted::parse_generators, shifted_generate, KFamily};

fn main() -> hyperdeg::Result<()> {
    let families = vec![
        ("triangle", KFamily::from_digit_strings(3, 2, &["12", "13", "23"])?),
        ("staircase", KFamily::from_digit_strings(5, 3, &["123", "134", "145"])?),
        ("bipyramid", KFamily::from_digit_strings(5, 3, &["124", "125", "134", "135", "234", "235"])?),
        ("<235,146>", shifted_generate(6, 3, &parse_generators("235,146")?)?),
        ("<178,239,456>", shifted_generate(9, 3, &parse_generators("178,239,456")?)?),
        ("<457,168,149,248,239>", shifted_generate(9, 3, &parse_generators("457,168,149,248,239")?)?),
    ];
    println!("{:<24} {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}  degrees", "family", "pos", "thr", "uniq", "max", "shft", "iso");
    for (name, fam) in families {
        let start = Instant::now();
        let r = hierarchy_report(&fam, 2)?;
        let flag = |b: bool| if b { "yes" } else { "no" };
        println!(
            "{:<24} {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}  {:?}  ({:.1?})",
            name,
            flag(r.positive_threshold),
            flag(r.threshold),
            flag(r.uniquely_realizable),
            flag(r.degree_maximal),
            flag(r.shifted),
            flag(r.shifted_isomorphic),
            r.degree_sequence,
            start.elapsed()
        );
        if let Some(w) = &r.majorizing_family {
            println!("{:<24} majorized by {:?}", "", w.degree_sequence());
        }
        if let Some(o) = &r.other_realization {
            println!("{:<24} shares its degrees with {o}", "");
        }
    }
    Ok(())
}
