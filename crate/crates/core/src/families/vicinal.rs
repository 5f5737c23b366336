//! The vicinal preorder and the RRST configuration.

use std::collections::BTreeSet;

use super::codec::Subset;
use super::family::KFamily;
use super::shifted::is_shifted;

/// A reflexive, transitive relation on `[n]`, stored as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    n: usize,
    relation: Vec<Vec<bool>>,
}

impl Preorder {
    pub fn from_matrix(relation: Vec<Vec<bool>>) -> Preorder {
        Preorder { n: relation.len(), relation }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `i ≺ j` (vertices are 1-based).
    pub fn relates(&self, i: usize, j: usize) -> bool {
        self.relation[i - 1][j - 1]
    }

    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        self.relates(i, j) && self.relates(j, i)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.relation[i][i])
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| !self.relation[i][j] || (0..n).all(|l| !self.relation[j][l] || self.relation[i][l]))
        })
    }

    pub fn is_total(&self) -> bool {
        is_total(self)
    }

    /// Vertices listed so that earlier ones relate to later ones whenever the
    /// preorder is total. Ties keep increasing label order.
    pub fn linear_order(&self) -> Vec<usize> {
        let mut verts: Vec<usize> = (1..=self.n).collect();
        let reach = |v: usize| (1..=self.n).filter(|&w| self.relates(v, w)).count();
        verts.sort_by_key(|&v| std::cmp::Reverse(reach(v)));
        verts
    }
}

pub fn is_total(p: &Preorder) -> bool {
    (1..=p.n).all(|i| (i..=p.n).all(|j| p.relates(i, j) || p.relates(j, i)))
}

/// `i ≺ j` iff `N_K[i] ⊇ N_K(j)`.
pub fn vicinal_preorder(fam: &KFamily) -> Preorder {
    let n = fam.n();
    let closed: Vec<BTreeSet<Subset>> = (1..=n).map(|i| fam.closed_neighborhood(i).into_iter().collect()).collect();
    let open: Vec<Vec<Subset>> = (1..=n).map(|i| fam.open_neighborhood(i)).collect();
    let relation = (0..n).map(|i| (0..n).map(|j| open[j].iter().all(|a| closed[i].contains(a))).collect()).collect();
    Preorder { n, relation }
}

/// A relabelling that makes `fam` shifted, found by listing vertices along
/// the vicinal preorder, together with the relabelled family. `None` when no
/// relabelling works.
pub fn shifted_relabeling(fam: &KFamily) -> Option<(Vec<usize>, KFamily)> {
    let pre = vicinal_preorder(fam);
    if !pre.is_total() {
        return None;
    }
    let order = pre.linear_order();
    let mut perm = vec![0; fam.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v - 1] = pos + 1;
    }
    let image = fam.relabel(&perm).expect("a permutation of [n]");
    is_shifted(&image).then_some((perm, image))
}

/// A forbidden RRST configuration: `A∪{j}, B∪{i}` in the family while
/// `A∪{i}, B∪{j}` are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct RrstViolation {
    pub a: Subset,
    pub b: Subset,
    pub i: usize,
    pub j: usize,
}

pub fn rrst_violations(fam: &KFamily) -> Vec<RrstViolation> {
    let n = fam.n();
    // sets A with A∪{to} in K and A∪{from} outside, both vertices absent from A
    let one_way = |to: usize, from: usize| -> Vec<Subset> {
        fam.iter()
            .filter(|s| s.contains(to) && !s.contains(from))
            .map(|s| s.without(to))
            .filter(|a| !fam.contains(a.with(from)))
            .collect()
    };
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let a_sets = one_way(j, i);
            if a_sets.is_empty() {
                continue;
            }
            let b_sets = one_way(i, j);
            for &a in &a_sets {
                for &b in &b_sets {
                    out.push(RrstViolation { a, b, i, j });
                }
            }
        }
    }
    out
}
