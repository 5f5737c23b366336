//! Membership and vertices of the degree-sequence polytope D_n(k), and the
//! search for lattice points that are not degree sequences.
//!
//! Usage: `cargo run --release --example zonotope_holes [max_n]`

use std::time::Instant;

use hyperdeg::zonotope::{holes_report, is_vertex, koren_system, membership};

fn main() -> hyperdeg::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for d in [vec![2, 2, 2, 2], vec![3, 1, 1, 1], vec![3, 3, 1, 1], vec![2, 2, 1, 1]] {
        println!("{d:?}: in D_4(2) {}, vertex {}, Koren {}", membership(&d, 2)?, is_vertex(&d, 2)?, koren_system(&d));
    }
    for k in [2, 3] {
        for n in k + 1..=max_n {
            let start = Instant::now();
            let r = holes_report(n, k)?;
            println!(
                "k={k} n={n}: {} sorted candidates, {} realizable, {} checked by LP, {} holes  ({:.1?})",
                r.candidates,
                r.realizable,
                r.lp_checked,
                r.holes.len(),
                start.elapsed()
            );
            for h in r.holes.iter().take(3) {
                println!("  hole {:?} (orbit {})", h.vector, h.orbit);
            }
        }
    }
    Ok(())
}
