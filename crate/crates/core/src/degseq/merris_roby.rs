//! Graphical (`k = 2`) degree sequences: the Ruch–Gutman inequalities and the
//! Merris–Roby diagonal cut.

use serde::Serialize;

use super::partition::{conjugate, trace, weakly_majorizes};
use crate::error::{domain, Result};

/// Strict partitions cut from a Ferrers diagram along the diagonal: `alpha`
/// holds the row lengths of boxes on or right of it, `beta` the column lengths
/// of boxes strictly below it. A trailing zero in `beta` is dropped.
pub fn alpha_beta(d: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let d = sorted(d);
    let t = trace(&d);
    let dt = conjugate(&d);
    let alpha: Vec<usize> = (0..t).map(|i| d[i] - i).collect();
    let mut beta: Vec<usize> = (0..t).map(|j| dt[j] - (j + 1)).collect();
    if beta.last() == Some(&0) {
        beta.pop();
    }
    (alpha, beta)
}

fn sorted(d: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = d.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn require_even(d: &[usize]) -> Result<()> {
    if d.iter().sum::<usize>() % 2 != 0 {
        return domain(format!("{d:?} has odd sum"));
    }
    Ok(())
}

/// `Σ_{i≤j} (d_i + 1) ≤ Σ_{i≤j} d^T_i` for every `j ≤ trace(d)`.
pub fn ruch_gutman_graphical(d: &[usize]) -> Result<bool> {
    require_even(d)?;
    let d = sorted(d);
    let dt = conjugate(&d);
    let (mut lhs, mut rhs) = (0usize, 0usize);
    for j in 0..trace(&d) {
        lhs += d[j] + 1;
        rhs += dt[j];
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    NotGraphical,
    Graphical,
    ShiftedDegree,
}

/// Graphical iff `beta` weakly majorizes `alpha`; the degree sequence of a
/// shifted graph iff they coincide.
pub fn merris_roby(d: &[usize]) -> Result<GraphClass> {
    require_even(d)?;
    let (alpha, beta) = alpha_beta(d);
    Ok(if alpha == beta {
        GraphClass::ShiftedDegree
    } else if weakly_majorizes(&beta, &alpha) {
        GraphClass::Graphical
    } else {
        GraphClass::NotGraphical
    })
}
