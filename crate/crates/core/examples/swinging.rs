//! Swings push a family up in majorization until it is shifted; reverse
//! swings reach any majorized degree sequence.
//!
//! Usage: `cargo run --release --example swinging`

use hyperdeg::families::{is_shifted, legal_swings, realize_majorized, sort_by_degree, swing, KFamily};

fn main() -> hyperdeg::Result<()> {
    let mut fam = KFamily::from_digit_strings(6, 3, &["456", "345", "236", "126"])?;
    println!("start    {fam}  d = {:?}", fam.degree_sequence());
    while let Some(&(a, i, j)) = legal_swings(&fam).first() {
        let next = swing(&fam, a, i, j)?;
        println!("swing {a} {j}->{i}  {next}  d = {:?}", next.degree_sequence());
        fam = next;
    }
    println!("shifted: {}", is_shifted(&fam));

    let top = sort_by_degree(&KFamily::from_digit_strings(6, 3, &["123", "124", "125", "134", "135", "234"])?);
    let target = [3, 3, 3, 3, 3, 3];
    let low = realize_majorized(&top, &target)?;
    println!("{:?} realized below {:?} by {low}", target, top.degree_sequence());
    Ok(())
}
