//! Enumerates shifted families, compares against brute force on a small
//! ground set, and shows the vicinal preorder of a non-shifted family.
//!
//! Usage: `cargo run --release --example shifted_families [k] [max_m]`

use std::time::Instant;

use hyperdeg::families::shifted::{shifted_families_brute_force, shifted_generators};
use hyperdeg::families::{enumerate_shifted, shifted_families_on, shifted_relabeling, vicinal_preorder, KFamily};

fn main() -> hyperdeg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let k = args.next().unwrap_or(3);
    let max_m = args.next().unwrap_or(8);

    for m in 0..=max_m {
        let start = Instant::now();
        let fams = enumerate_shifted(k, m)?;
        println!("k={k} m={m}: {:>6} shifted families  ({:.1?})", fams.len(), start.elapsed());
    }

    let on5 = shifted_families_on(5, 3)?;
    let brute = shifted_families_brute_force(5, 3)?;
    println!("shifted 3-families on [5]: {} by ideal walk, {} by brute force", on5.len(), brute.len());

    println!("shifted 3-families with 4 members:");
    for f in enumerate_shifted(3, 4)? {
        let gens: Vec<String> = shifted_generators(&f).iter().map(|s| s.to_string()).collect();
        println!("  <{}>  {}  d = {:?}", gens.join(","), f, f.degree_sequence());
    }

    // a shifted family with its vertices scrambled
    let scrambled = KFamily::from_digit_strings(5, 3, &["345", "245", "235", "145"])?;
    let p = vicinal_preorder(&scrambled);
    println!("{scrambled}: vicinal preorder total = {}", p.is_total());
    if let Some((perm, fam)) = shifted_relabeling(&scrambled) {
        println!("  relabeling {perm:?} gives the shifted family {fam}");
    }
    Ok(())
}
