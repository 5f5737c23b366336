//! The cube-stack images of a family, the alpha-sets, and the four equivalent
//! shiftedness tests, run over every 3-family on [5].
//!
//! Usage: `cargo run --release --example cube_decompositions`

use hyperdeg::cubes::{alpha_sets, generalized_weak_majorizes, pi_subf, pi_vert, pushdown, shifted_equivalence_check};
use hyperdeg::families::{shifted::parse_generators, shifted_generate, KFamily};

fn main() -> hyperdeg::Result<()> {
    let k = shifted_generate(6, 3, &parse_generators("235,146")?)?;
    let subf = pi_subf(&k)?;
    println!("K = {k}");
    println!("vert cells: {:?}", pi_vert(&k)?.cells);
    println!("subf cells: {:?}", subf.cells);
    println!("pushdown:   {:?}", pushdown(&subf)?.cells);

    let odd = KFamily::from_digit_strings(5, 3, &["124", "135", "234"])?;
    let report = shifted_equivalence_check(&odd)?;
    println!("{odd}: {report:?}");
    for (j, a) in alpha_sets(&odd)?.iter().enumerate() {
        println!("  alpha_{} = {a}", j + 1);
    }

    let mut shifted = 0;
    let all: Vec<KFamily> = KFamily::all(5, 3)?.collect();
    for f in &all {
        shifted += usize::from(shifted_equivalence_check(f)?.shifted);
    }
    println!("3-families on [5]: {} total, {shifted} shifted, all four tests agree", all.len());

    let a = KFamily::from_digit_strings(5, 3, &["145", "235"])?;
    let b = KFamily::from_digit_strings(5, 3, &["123", "145"])?;
    println!("{b} weakly majorizes {a} on ideals: {}", generalized_weak_majorizes(&a, &b)?);
    Ok(())
}
