//! Symbolic root-system data for the simple types A-G and the Weyl
//! dimension formula.
//!
//! Roots are generated from hardcoded Cartan matrices by the standard root
//! string closure. The dimension formula is evaluated over the positive
//! coroots, where it only needs the coefficients of each coroot over the
//! simple coroots; those are the positive roots of the dual system.

mod roots;

pub use roots::cartan_matrix;

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::ratlin::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn parse(s: &str) -> Option<TypeLetter> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(TypeLetter::A),
            "B" => Some(TypeLetter::B),
            "C" => Some(TypeLetter::C),
            "D" => Some(TypeLetter::D),
            "E" => Some(TypeLetter::E),
            "F" => Some(TypeLetter::F),
            "G" => Some(TypeLetter::G),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum WeylError {
    #[error("unsupported type: {0}")]
    Unsupported(String),
    #[error("weight length {got} does not match rank {rank}")]
    WeightLength { got: usize, rank: usize },
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

/// Dominant integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight(pub Vec<u64>);

impl HighestWeight {
    pub fn zero(rank: usize) -> Self {
        HighestWeight(vec![0; rank])
    }
}

/// Frobenius-Schur class of an irreducible, decided symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsClass {
    Real,
    Complex,
    Quaternionic,
}

/// Root data of one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    letter: TypeLetter,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    pos_roots: Vec<Vec<i64>>,   // coefficients over simple roots
    pos_coroots: Vec<Vec<i64>>, // coefficients over simple coroots
}

impl RootSystem {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self, WeylError> {
        let cartan = cartan_matrix(letter, rank)?;
        let pos_roots = roots::positive_roots(&cartan);
        // coroots of X = roots of the dual system (transposed Cartan matrix)
        let cartan_t = transpose(&cartan);
        let pos_coroots = roots::positive_roots(&cartan_t);
        let rs = RootSystem {
            letter,
            rank,
            cartan,
            pos_roots,
            pos_coroots,
        };
        let expected = expected_positive_root_count(letter, rank);
        if rs.pos_roots.len() != expected || rs.pos_coroots.len() != expected {
            return Err(WeylError::Inconsistent(format!(
                "{letter:?}{rank}: generated {} roots / {} coroots, expected {expected}",
                rs.pos_roots.len(),
                rs.pos_coroots.len()
            )));
        }
        Ok(rs)
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots over the simple-root basis.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    /// Positive coroots over the simple-coroot basis.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.pos_coroots
    }

    /// Positive roots in the fundamental-weight basis: coordinates of a root
    /// are its pairings with the simple coroots.
    pub fn positive_roots_weight_basis(&self) -> Vec<Vec<i64>> {
        self.pos_roots
            .iter()
            .map(|r| {
                (0..self.rank)
                    .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * r[j]).sum())
                    .collect()
            })
            .collect()
    }

    /// rho = sum of fundamental weights: (1, ..., 1) in the weight basis.
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }

    /// The duality involution on fundamental weights (-w0 action).
    pub fn dual_weight(&self, w: &HighestWeight) -> HighestWeight {
        let mut c = w.0.clone();
        match (self.letter, self.rank) {
            (TypeLetter::A, n) if n >= 2 => c.reverse(),
            (TypeLetter::D, n) if n % 2 == 1 => c.swap(n - 2, n - 1),
            (TypeLetter::E, 6) => {
                c.swap(0, 5);
                c.swap(2, 4);
            }
            _ => {}
        }
        HighestWeight(c)
    }

    /// Sum over positive coroots of the i-th coordinate; `<w, 2 rho_check>`
    /// is the weighted sum of these against the weight coefficients.
    fn coroot_coordinate_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for c in &self.pos_coroots {
            for i in 0..self.rank {
                sums[i] += c[i];
            }
        }
        sums
    }

    /// Frobenius-Schur class of the irreducible with this highest weight:
    /// complex if not self-dual, otherwise real/quaternionic according to
    /// the parity of the pairing with the sum of the positive coroots.
    pub fn frobenius_schur(&self, w: &HighestWeight) -> Result<FsClass, WeylError> {
        self.check_weight(w)?;
        if self.dual_weight(w) != *w {
            return Ok(FsClass::Complex);
        }
        let sums = self.coroot_coordinate_sums();
        let pairing: i64 = w
            .0
            .iter()
            .zip(&sums)
            .map(|(&c, &s)| (c as i64) * s)
            .sum();
        Ok(if pairing % 2 == 0 {
            FsClass::Real
        } else {
            FsClass::Quaternionic
        })
    }

    fn check_weight(&self, w: &HighestWeight) -> Result<(), WeylError> {
        if w.0.len() != self.rank {
            return Err(WeylError::WeightLength {
                got: w.0.len(),
                rank: self.rank,
            });
        }
        Ok(())
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

fn expected_positive_root_count(letter: TypeLetter, rank: usize) -> usize {
    match letter {
        TypeLetter::A => rank * (rank + 1) / 2,
        TypeLetter::B | TypeLetter::C => rank * rank,
        TypeLetter::D => rank * (rank - 1),
        TypeLetter::G => 6,
        TypeLetter::F => 24,
        TypeLetter::E => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => 0,
        },
    }
}

/// Exact Weyl dimension formula: the product over positive roots of
/// `<lambda + rho, coroot> / <rho, coroot>`, which must come out an integer.
pub fn weyl_dim(rs: &RootSystem, w: &HighestWeight) -> Result<BigInt, WeylError> {
    rs.check_weight(w)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for coroot in rs.positive_coroots() {
        let mut top = 0i64;
        let mut bot = 0i64;
        for (i, &m) in coroot.iter().enumerate() {
            top += m * (w.0[i] as i64 + 1);
            bot += m;
        }
        num *= BigInt::from(top);
        den *= BigInt::from(bot);
    }
    let q = Rat::new(num, den);
    if !q.is_integer() {
        return Err(WeylError::Inconsistent(format!(
            "Weyl dimension is not an integer for {:?}: {q}",
            w
        )));
    }
    let d = q.to_integer();
    if !d.is_positive() {
        return Err(WeylError::Inconsistent(format!(
            "Weyl dimension is not positive for {:?}",
            w
        )));
    }
    Ok(d)
}

/// `weyl_dim` for callers that know the answer fits in u64.
pub fn weyl_dim_u64(rs: &RootSystem, w: &HighestWeight) -> Result<u64, WeylError> {
    weyl_dim(rs, w)?
        .to_u64()
        .ok_or_else(|| WeylError::Inconsistent("dimension overflows u64".into()))
}

/// All dominant weights with Weyl dimension at most `bound`, found by a
/// lattice search pruned with strict monotonicity of the dimension. The
/// output is sorted lexicographically; `bound = 0` is empty.
pub fn monotone_filter(rs: &RootSystem, bound: u64) -> Vec<(HighestWeight, u64)> {
    let mut out = Vec::new();
    if bound == 0 {
        return out;
    }
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut queue: Vec<Vec<u64>> = vec![vec![0; rs.rank()]];
    seen.insert(queue[0].clone());
    while let Some(c) = queue.pop() {
        let w = HighestWeight(c.clone());
        let d = weyl_dim(&rs, &w).expect("root data is consistent");
        match d.to_u64() {
            Some(d) if d <= bound => {
                out.push((w, d));
                for i in 0..rs.rank() {
                    let mut next = c.clone();
                    next[i] += 1;
                    if seen.insert(next.clone()) {
                        queue.push(next);
                    }
                }
            }
            // dimension exceeds the bound: monotonicity prunes all
            // coordinatewise-larger weights
            _ => {}
        }
    }
    out.sort();
    out
}

/// The necessary dimension condition `dim G + rk G >= dim M` for a vanishing
/// homogeneity rank action.
pub fn dim_condition(group_dim: i64, group_rank: i64, space_dim: i64) -> bool {
    group_dim + group_rank >= space_dim
}

/// Specialization to HP^{n-1}: the space dimension is 4(n-1).
pub fn dim_condition_hp(group_dim: i64, group_rank: i64, n: i64) -> bool {
    dim_condition(group_dim, group_rank, 4 * (n - 1))
}

/// Specialization for a quaternionic-type irreducible of complex degree d:
/// the group G = rho(H) acts on HP^{d/2 - 1}, giving dim H + rk H >= 2d - 4.
pub fn dim_condition_quaternionic_irreducible(dim_h: i64, rank_h: i64, degree: i64) -> bool {
    dim_h + rank_h >= 2 * degree - 4
}

/// Specialization for Z * rho(H) with rho of complex type and complex degree
/// d: dim H + rk H >= 4d - 6.
pub fn dim_condition_complex_type(dim_h: i64, rank_h: i64, degree: i64) -> bool {
    dim_h + rank_h >= 4 * degree - 6
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for (letter, rank) in [
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 4),
            (TypeLetter::G, 2),
            (TypeLetter::F, 4),
            (TypeLetter::E, 6),
        ] {
            let rs = RootSystem::new(letter, rank).unwrap();
            let mut halfsum = vec![0i64; rank];
            for r in rs.positive_roots_weight_basis() {
                for i in 0..rank {
                    halfsum[i] += r[i];
                }
            }
            for h in &mut halfsum {
                assert_eq!(*h % 2, 0);
                *h /= 2;
            }
            assert_eq!(halfsum, rs.rho(), "{letter:?}{rank}");
        }
    }

    #[test]
    fn zero_weight_has_dimension_one() {
        for (letter, rank) in [(TypeLetter::A, 5), (TypeLetter::C, 3), (TypeLetter::E, 7)] {
            let rs = RootSystem::new(letter, rank).unwrap();
            assert_eq!(weyl_dim_u64(&rs, &HighestWeight::zero(rank)).unwrap(), 1);
        }
    }

    #[test]
    fn key_dimensions() {
        let a5 = RootSystem::new(TypeLetter::A, 5).unwrap();
        assert_eq!(weyl_dim_u64(&a5, &HighestWeight(vec![0, 0, 1, 0, 0])).unwrap(), 20);
        let c3 = RootSystem::new(TypeLetter::C, 3).unwrap();
        assert_eq!(weyl_dim_u64(&c3, &HighestWeight(vec![0, 0, 1])).unwrap(), 14);
        let b5 = RootSystem::new(TypeLetter::B, 5).unwrap();
        assert_eq!(weyl_dim_u64(&b5, &HighestWeight(vec![0, 0, 0, 0, 1])).unwrap(), 32);
        let e7 = RootSystem::new(TypeLetter::E, 7).unwrap();
        assert_eq!(
            weyl_dim_u64(&e7, &HighestWeight(vec![0, 0, 0, 0, 0, 0, 1])).unwrap(),
            56
        );
        let e6 = RootSystem::new(TypeLetter::E, 6).unwrap();
        assert_eq!(
            weyl_dim_u64(&e6, &HighestWeight(vec![1, 0, 0, 0, 0, 0])).unwrap(),
            27
        );
    }

    #[test]
    fn monotone_filter_a1() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        let list = monotone_filter(&a1, 4);
        let dims: Vec<u64> = list.iter().map(|(_, d)| *d).collect();
        assert_eq!(dims, vec![1, 2, 3, 4]);
        assert!(monotone_filter(&a1, 0).is_empty());
    }

    #[test]
    fn monotone_filter_c3_includes_the_14() {
        let c3 = RootSystem::new(TypeLetter::C, 3).unwrap();
        let list = monotone_filter(&c3, 14);
        let weights: Vec<&HighestWeight> = list.iter().map(|(w, _)| w).collect();
        assert!(weights.iter().any(|w| w.0 == vec![0, 0, 1]));
        assert!(!weights.iter().any(|w| w.0 == vec![1, 0, 1]));
    }

    #[test]
    fn frobenius_schur_classes() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        assert_eq!(a1.frobenius_schur(&HighestWeight(vec![1])).unwrap(), FsClass::Quaternionic);
        assert_eq!(a1.frobenius_schur(&HighestWeight(vec![2])).unwrap(), FsClass::Real);
        let a2 = RootSystem::new(TypeLetter::A, 2).unwrap();
        assert_eq!(a2.frobenius_schur(&HighestWeight(vec![1, 0])).unwrap(), FsClass::Complex);
        assert_eq!(a2.frobenius_schur(&HighestWeight(vec![1, 1])).unwrap(), FsClass::Real);
        let c3 = RootSystem::new(TypeLetter::C, 3).unwrap();
        assert_eq!(c3.frobenius_schur(&HighestWeight(vec![0, 0, 1])).unwrap(), FsClass::Quaternionic);
        assert_eq!(c3.frobenius_schur(&HighestWeight(vec![0, 1, 0])).unwrap(), FsClass::Real);
        let b3 = RootSystem::new(TypeLetter::B, 3).unwrap();
        // Spin(7) spin representation is of real type
        assert_eq!(b3.frobenius_schur(&HighestWeight(vec![0, 0, 1])).unwrap(), FsClass::Real);
        let b5 = RootSystem::new(TypeLetter::B, 5).unwrap();
        // Spin(11) spin representation is quaternionic
        assert_eq!(b5.frobenius_schur(&HighestWeight(vec![0, 0, 0, 0, 1])).unwrap(), FsClass::Quaternionic);
        let a5 = RootSystem::new(TypeLetter::A, 5).unwrap();
        // Lambda^3 C^6 is quaternionic
        assert_eq!(a5.frobenius_schur(&HighestWeight(vec![0, 0, 1, 0, 0])).unwrap(), FsClass::Quaternionic);
        let e7 = RootSystem::new(TypeLetter::E, 7).unwrap();
        assert_eq!(
            e7.frobenius_schur(&HighestWeight(vec![0, 0, 0, 0, 0, 0, 1])).unwrap(),
            FsClass::Quaternionic
        );
    }

    #[test]
    fn dim_condition_paper_cases() {
        // SU(6) on Lambda^3 C^6: 35 + 5 >= 2*20 - 4
        assert!(dim_condition_quaternionic_irreducible(35, 5, 20));
        // Spin(11) spin: 55 + 5 >= 2*32 - 4 with equality
        assert!(dim_condition_quaternionic_irreducible(55, 5, 32));
        // su(2) weight (7): 3 + 1 < 2*8 - 4
        assert!(!dim_condition_quaternionic_irreducible(3, 1, 8));
    }
}
