//! Raising operators on wedge vectors E_K, highest-weight tests and
//! multiplicities read off as kernels.
//!
//! Usage: `cargo run --release --example highest_weight`

use hyperdeg::degseq::Partition;
use hyperdeg::families::{is_shifted, shifted::parse_generators, shifted_generate, KFamily};
use hyperdeg::hwv::{hw_space_dimension, is_highest_weight, raising, weight, ExteriorVector};
use hyperdeg::symfunc::plethysm_em_ek;

fn main() -> hyperdeg::Result<()> {
    let k = KFamily::from_digit_strings(4, 2, &["12", "34"])?;
    let e = ExteriorVector::basis(&k);
    println!("E_K = {e}, weight {:?}", weight(&e)?);
    println!("A_13 E_K = {}", raising(1, 3, &e)?);
    println!("A_12 E_K = {}", raising(1, 2, &e)?);

    let s = shifted_generate(6, 3, &parse_generators("235,146")?)?;
    println!("{s}: highest weight {}, shifted {}", is_highest_weight(&s)?, is_shifted(&s));

    for m in 2..=4 {
        let a = plethysm_em_ek(m, 2)?;
        for (lambda, c) in a.terms() {
            let dim = hw_space_dimension(lambda, 2, lambda.len())?;
            println!("m={m} lambda={lambda}: kernel dimension {dim}, Schur coefficient {c}");
        }
    }
    let lambda = Partition::new(vec![3, 3, 2, 1])?;
    println!("multiplicity of {lambda} in e_3[e_3]: {}", hw_space_dimension(&lambda, 3, 5)?);
    Ok(())
}
