//! Classifies every partition of 2m by the diagonal cut: not graphical,
//! graphical, or the degree sequence of a shifted graph.
//!
//! Usage: `cargo run --release --example merris_roby [m]`

use hyperdeg::degseq::{alpha_beta, merris_roby, partitions, ruch_gutman_graphical, GraphClass};

fn main() -> hyperdeg::Result<()> {
    let m: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let mut tally = [0usize; 3];
    for d in partitions(2 * m) {
        let class = merris_roby(d.parts())?;
        assert_eq!(class != GraphClass::NotGraphical, ruch_gutman_graphical(d.parts())?);
        let (alpha, beta) = alpha_beta(d.parts());
        println!("{:<24} alpha={alpha:?} beta={beta:?}  {class:?}", d.to_string());
        tally[class as usize] += 1;
    }
    println!("not graphical {}, graphical {}, shifted {}", tally[0], tally[1], tally[2]);
    Ok(())
}
