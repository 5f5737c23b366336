//! Schur expansions of e_m[e_k] next to the shifted-family sums Phi_{k,m}.
//!
//! Usage: `cargo run --release --example plethysm [k] [max_m]`

use std::time::Instant;

use hyperdeg::symfunc::{phi, plethysm_em_ek};

fn main() -> hyperdeg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let k = args.next().unwrap_or(3);
    let max_m = args.next().unwrap_or(3);
    for m in 0..=max_m {
        let start = Instant::now();
        let e = plethysm_em_ek(m, k)?;
        let p = phi(k, m)?;
        println!("e_{m}[e_{k}] = {e}");
        println!("Phi_{{{k},{m}}} = {p}");
        println!("difference  = {}  ({:.1?})\n", e.sub(&p), start.elapsed());
    }
    Ok(())
}
