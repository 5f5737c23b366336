//! Exact rational linear programming: a dense two-phase simplex with Bland's rule.
//!
//! Everything is over `BigRational`, so feasibility verdicts and the returned
//! certificates are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Outcome of `{M x = r, x >= 0}`.
#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    /// A nonnegative solution.
    Feasible(Vec<Q>),
    /// A Farkas certificate `y` with `yᵀM <= 0` and `yᵀr > 0`.
    Infeasible(Vec<Q>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Optimum {
    Infeasible,
    Unbounded,
    /// Optimal value and an optimal vertex.
    Optimal(Q, Vec<Q>),
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
    /// reduced costs of the current objective, and minus its current value
    cost: Vec<Q>,
    neg_value: Q,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x /= &p;
                }
            }
            self.rhs[r] /= &p;
        }
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for &j in &nz {
                let delta = &f * &prow[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for &j in &nz {
                let delta = &f * &prow[j];
                self.cost[j] -= delta;
            }
            self.neg_value -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Bland's rule until optimal; `false` when unbounded.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let Some(c) = (0..self.cost.len()).find(|&j| allowed(j) && self.cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn primal(&self, nx: usize) -> Vec<Q> {
        let mut x = vec![Q::zero(); nx];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < nx {
                x[b] = self.rhs[i].clone();
            }
        }
        x
    }
}

/// Phase I on `{M x = r, x >= 0}` with one artificial per row. Returns the
/// tableau and the row signs used to make `r` nonnegative.
fn phase_one(m: &[Vec<Q>], r: &[Q], nx: usize) -> (Tableau, Vec<bool>) {
    let rows_n = m.len();
    let mut rows = Vec::with_capacity(rows_n);
    let mut rhs = Vec::with_capacity(rows_n);
    let mut flipped = Vec::with_capacity(rows_n);
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), nx, "ragged constraint matrix");
        let flip = r[i].is_negative();
        let mut full: Vec<Q> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        full.extend((0..rows_n).map(|j| if j == i { Q::one() } else { Q::zero() }));
        rows.push(full);
        rhs.push(if flip { -&r[i] } else { r[i].clone() });
        flipped.push(flip);
    }
    let mut cost = vec![Q::zero(); nx + rows_n];
    for j in 0..nx {
        let s: Q = rows.iter().map(|row| row[j].clone()).sum();
        cost[j] = -s;
    }
    let total: Q = rhs.iter().cloned().sum();
    let mut tab = Tableau { rows, rhs, basis: (nx..nx + rows_n).collect(), cost, neg_value: -total };
    let bounded = tab.run(|_| true);
    debug_assert!(bounded, "phase one is bounded below by zero");
    (tab, flipped)
}

/// Decides `{M x = r, x >= 0}`.
pub fn feasible(m: &[Vec<Q>], r: &[Q]) -> Feasibility {
    let nx = m.first().map_or(0, |row| row.len());
    let (tab, flipped) = phase_one(m, r, nx);
    if tab.neg_value.is_zero() {
        return Feasibility::Feasible(tab.primal(nx));
    }
    // the artificial column of row i has phase-one cost 1, so its reduced cost is 1 - y_i
    let y = (0..m.len())
        .map(|i| {
            let yi = Q::one() - &tab.cost[nx + i];
            if flipped[i] {
                -yi
            } else {
                yi
            }
        })
        .collect();
    Feasibility::Infeasible(y)
}

/// Maximizes `cᵀx` over `{M x = r, x >= 0}`.
pub fn maximize(m: &[Vec<Q>], r: &[Q], c: &[Q]) -> Optimum {
    let nx = c.len();
    let (mut tab, _) = phase_one(m, r, nx);
    if !tab.neg_value.is_zero() {
        return Optimum::Infeasible;
    }
    // drive zero-level artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= nx {
            match (0..nx).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.rhs.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    // phase two: minimize -c
    let width = tab.cost.len();
    let mut cost: Vec<Q> = (0..width).map(|j| if j < nx { -&c[j] } else { Q::zero() }).collect();
    let mut neg_value = Q::zero();
    for (row, &b) in tab.basis.iter().enumerate() {
        let cb = -&c[b];
        if cb.is_zero() {
            continue;
        }
        for j in 0..width {
            if !tab.rows[row][j].is_zero() {
                cost[j] -= &cb * &tab.rows[row][j];
            }
        }
        neg_value -= &cb * &tab.rhs[row];
    }
    tab.cost = cost;
    tab.neg_value = neg_value;
    if !tab.run(|j| j < nx) {
        return Optimum::Unbounded;
    }
    let x = tab.primal(nx);
    let value: Q = x.iter().zip(c).map(|(a, b)| a * b).sum();
    Optimum::Optimal(value, x)
}

/// Solves `A w >= b` with `w` free, through the alternative system
/// `{Aᵀ y = 0, bᵀ y = 1, y >= 0}`. Returns `Ok(w)` or `Err(y)`, where `y` is a
/// nonnegative combination of the rows with `yᵀA = 0` and `yᵀb = 1`.
pub fn solve_inequalities(a: &[Vec<Q>], b: &[Q]) -> std::result::Result<Vec<Q>, Vec<Q>> {
    let nw = a.first().map_or(0, |row| row.len());
    let rows_n = a.len();
    let mut m: Vec<Vec<Q>> = (0..nw).map(|j| (0..rows_n).map(|i| a[i][j].clone()).collect()).collect();
    m.push(b.to_vec());
    let mut r = vec![Q::zero(); nw];
    r.push(Q::one());
    match feasible(&m, &r) {
        Feasibility::Feasible(y) => Err(y),
        Feasibility::Infeasible(z) => {
            // zᵀM <= 0 and z_last > 0, so w = -z_head / z_last satisfies A w >= b
            let s = z[nw].clone();
            Ok(z[..nw].iter().map(|v| -(v / &s)).collect())
        }
    }
}

/// Formats a rational as `p/q` (always with a denominator).
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let (p, d) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (!d.is_zero()).then(|| Q::new(p, d))
}
