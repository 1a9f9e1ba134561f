//! Sparse vectors and an incremental echelon basis.
//!
//! Structure-constant extraction and bracket-closure checks reduce thousands
//! of membership questions against one fixed span. Lie algebra generators
//! flatten to vectors with a handful of nonzeros, so an incremental sparse
//! echelon is orders of magnitude faster than dense RREF there.

use std::collections::BTreeMap;

use num::{One, Zero};

use super::{Rat, RatMatrix};

/// Sparse vector over Q, keyed by coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    terms: BTreeMap<usize, Rat>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        let mut v = Self::new();
        for (idx, e) in m.entries().iter().enumerate() {
            if !e.is_zero() {
                v.terms.insert(idx, e.clone());
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.terms.iter().next().map(|(k, v)| (*k, v))
    }

    pub fn get(&self, idx: usize) -> Option<&Rat> {
        self.terms.get(&idx)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    /// self += c * other
    pub fn axpy(&mut self, c: &Rat, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (&k, v) in &other.terms {
            let entry = self.terms.entry(k).or_insert_with(Rat::zero);
            *entry += c * v;
            if entry.is_zero() {
                self.terms.remove(&k);
            }
        }
    }
}

/// Incrementally built echelon basis of a subspace of R^dim.
///
/// Each stored vector is normalized to a distinct leading coordinate with
/// coefficient 1. `reduce` rewrites an arbitrary vector modulo the span and
/// reports the coefficients used, which is exactly a membership solve.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    pivots: BTreeMap<usize, (SparseVec, usize)>, // lead -> (vector, insertion index)
    count: usize,
}

impl SpanBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.count
    }

    /// Reduce `v` against the basis. Returns the residue and, for each
    /// eliminated pivot, the pair (insertion index, coefficient).
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, Rat)>) {
        let mut v = v.clone();
        let mut used = Vec::new();
        loop {
            let Some((lead, coeff)) = v.leading().map(|(k, c)| (k, c.clone())) else {
                break;
            };
            match self.pivots.get(&lead) {
                Some((basis_vec, idx)) => {
                    used.push((*idx, coeff.clone()));
                    let neg = -coeff;
                    v.axpy(&neg, basis_vec);
                }
                None => break,
            }
        }
        (v, used)
    }

    /// Insert `v` if independent of the current span. Returns true if the
    /// dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let (mut residue, _) = self.reduce(v);
        let Some((lead, coeff)) = residue.leading().map(|(k, c)| (k, c.clone())) else {
            return false;
        };
        let inv = Rat::one() / coeff;
        residue.scale(&inv);
        self.pivots.insert(lead, (residue, self.count));
        self.count += 1;
        true
    }

    /// Membership test: coefficients over the *inserted* vectors are not
    /// recoverable in general (stored vectors are reduced), so this returns
    /// only whether `v` lies in the span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_zero()
    }
}

/// Like `SpanBasis`, but remembers enough to express reductions in terms of
/// the original inserted generators. Used for structure constants: insert
/// the flattened generators, then `coordinates` of a bracket recovers its
/// expansion in the generator basis.
#[derive(Clone, Debug, Default)]
pub struct GeneratorSolver {
    // echelon vectors along with their expression in original generators
    pivots: BTreeMap<usize, (SparseVec, SparseVec, usize)>, // lead -> (vec, expr, idx)
    inserted: usize,
}

impl GeneratorSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert generator number `self.inserted`; returns false if dependent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let gen_idx = self.inserted;
        self.inserted += 1;
        let mut expr = SparseVec::new();
        expr.terms.insert(gen_idx, Rat::one());
        let (mut residue, mut rexpr) = (v.clone(), expr);
        loop {
            let Some((lead, coeff)) = residue.leading().map(|(k, c)| (k, c.clone())) else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some((bv, be, _)) => {
                    let neg = -coeff;
                    residue.axpy(&neg, bv);
                    rexpr.axpy(&neg, be);
                }
                None => {
                    let inv = Rat::one() / coeff;
                    residue.scale(&inv);
                    rexpr.scale(&inv);
                    let n = self.pivots.len();
                    self.pivots.insert(lead, (residue, rexpr, n));
                    return true;
                }
            }
        }
    }

    /// Coefficients of `v` over the inserted generators, or None if outside
    /// the span. Requires the generators to have been independent.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut residue = v.clone();
        let mut out = SparseVec::new();
        loop {
            let Some((lead, coeff)) = residue.leading().map(|(k, c)| (k, c.clone())) else {
                return Some(out);
            };
            match self.pivots.get(&lead) {
                Some((bv, be, _)) => {
                    let neg = -coeff.clone();
                    residue.axpy(&neg, bv);
                    out.axpy(&coeff, be);
                }
                None => return None,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        let mut v = SparseVec::new();
        for &(k, x) in entries {
            v.terms.insert(k, rat(x));
        }
        v
    }

    #[test]
    fn span_basis_counts_dimension() {
        let mut b = SpanBasis::new();
        assert!(b.insert(&sv(&[(0, 1), (1, 1)])));
        assert!(b.insert(&sv(&[(1, 1)])));
        assert!(!b.insert(&sv(&[(0, 2), (1, 3)])));
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&sv(&[(0, 5)])));
        assert!(!b.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn generator_solver_recovers_coordinates() {
        let mut g = GeneratorSolver::new();
        let a = sv(&[(0, 1), (2, 1)]);
        let b = sv(&[(1, 1)]);
        assert!(g.insert(&a));
        assert!(g.insert(&b));
        let mut target = a.clone();
        target.axpy(&rat(3), &b);
        let coords = g.coordinates(&target).unwrap();
        assert_eq!(coords.get(0), Some(&rat(1)));
        assert_eq!(coords.get(1), Some(&rat(3)));
        assert!(g.coordinates(&sv(&[(5, 1)])).is_none());
    }
}
