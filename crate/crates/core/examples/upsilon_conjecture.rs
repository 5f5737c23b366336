//! Computes the correction terms Upsilon_{k,m} and checks the alternating
//! Schur-positivity pattern.
//!
//! Usage: `cargo run --release --example upsilon_conjecture [max_k] [max_m]`

use std::time::Instant;

use hyperdeg::symfunc::{is_schur_positive, upsilon_series_with_budget};

fn main() -> hyperdeg::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let max_k = args.next().unwrap_or(4);
    let max_m = args.next().unwrap_or(4);
    for k in 2..=max_k {
        let start = Instant::now();
        let series = match upsilon_series_with_budget(k, max_m, 20, 20) {
            Ok(s) => s,
            Err(e) => {
                println!("k={k}: {e}");
                continue;
            }
        };
        for (i, u) in series.iter().enumerate() {
            let m = i + 1;
            let signed = if m % 2 == 0 { u.clone() } else { u.scale(&(-1).into()) };
            println!("k={k} m={m}: {} terms, sign pattern holds: {}", u.len(), is_schur_positive(&signed));
            if m <= 3 && !u.is_zero() {
                println!("  Upsilon = {u}");
            }
        }
        println!("  ({:.1?})", start.elapsed());
    }
    Ok(())
}
