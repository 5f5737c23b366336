//! Counts distinct degree sequences of k-families on [n] for a small table.
//!
//! Usage: `cargo run --release --example degree_sequence_counts [max_n]`

use std::time::Instant;

use hyperdeg::degseq::count_degree_sequences;

fn main() -> hyperdeg::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for k in 1..=max_n {
        for n in k..=max_n {
            let start = Instant::now();
            let count = count_degree_sequences(n, k)?;
            println!("k={k} n={n}: {count:>12}  ({:.2?})", start.elapsed());
        }
    }
    Ok(())
}
