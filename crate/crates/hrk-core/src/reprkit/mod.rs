//! Representations of products of compact classical (and spin) algebras.
//!
//! The abstract algebra of every representation built here is a direct sum
//! of standard factors (so/su/sp/u and one-dimensional centers); structure
//! constants are extracted once per factor from its defining realization.
//! Realizations are carried at their natural level - real, complex or
//! quaternionic matrices - and realified on demand with the fixed
//! interleaved conventions, so skewness and the right-scalar action are
//! never approximated.

mod combinators;
mod frame;
mod spin;
mod structure;

pub use combinators::{adjoin_center, adjoint_rep, complexify_quaternionic, complexify_real, dsum, dual, lambda_k, merge_factors, quaternionify, quaternionify_real, sym2, tprod};
pub use frame::standardize_quaternionic;
pub use spin::{spin_rep, SpinKind};
pub use structure::{structure_type, StructureTag, StructureType};

use std::ops::Range;

use thiserror::Error;

use crate::liealg::{
    so_generators, sp_quaternion_generators, su_complex_generators, u_complex_generators, Family,
};
use crate::ratlin::complex::CMatrix;
use crate::ratlin::quat::{right_quaternion_ops, QMatrix};
use crate::ratlin::sparse::{GeneratorSolver, SparseVec};
use crate::ratlin::{Rat, RatMatrix};

#[derive(Debug, Error)]
pub enum ReprError {
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("representation invariant violated: {0}")]
    InvariantViolated(String),
    #[error("incompatible ground fields: {0}")]
    FieldMismatch(String),
    #[error("factor identification mismatch: {0}")]
    FactorMismatch(String),
    #[error("not a quaternionic embedding: generator {generator} does not commute with the right scalar action")]
    NotQuaternionic { generator: usize },
}

/// Kind of one direct factor of an abstract algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorKind {
    Classical(Family, usize),
    /// One-dimensional center (a u(1) acting by some complex structure).
    Center,
}

impl FactorKind {
    pub fn dim(&self) -> usize {
        match self {
            FactorKind::Classical(f, n) => f.dim(*n),
            FactorKind::Center => 1,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            FactorKind::Classical(f, n) => f.rank(*n),
            FactorKind::Center => 1,
        }
    }

    pub fn name(&self) -> String {
        match self {
            FactorKind::Classical(f, n) => format!("{}({n})", f.name()),
            FactorKind::Center => "z".to_string(),
        }
    }
}

/// One direct-product factor of an abstract algebra.
#[derive(Clone, Debug)]
pub struct FactorMarker {
    pub name: String,
    pub kind: FactorKind,
    pub range: Range<usize>,
}

/// Abstract Lie algebra: exact structure constants over a chosen basis,
/// organized as a direct sum of standard factors. The bracket table is a
/// flat antisymmetric pair table so lookups borrow instead of cloning.
#[derive(Clone, Debug)]
pub struct AbstractLieAlgebra {
    dim: usize,
    pairs: Vec<Vec<(usize, Rat)>>, // index i * dim + j
    // the same table with entries doubled to integers (they are at worst
    // half-integral for the classical bases)
    pairs_int: Vec<Vec<(usize, i64)>>,
    factors: Vec<FactorMarker>,
}

impl AbstractLieAlgebra {
    /// Direct sum of standard factors; structure constants of each factor
    /// are extracted from its defining matrix realization.
    pub fn from_factors(kinds: &[(String, FactorKind)]) -> Self {
        let dim: usize = kinds.iter().map(|(_, k)| k.dim()).sum();
        let mut pairs: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); dim * dim];
        let mut factors = Vec::new();
        let mut offset = 0usize;
        for (name, kind) in kinds {
            let d = kind.dim();
            let table = factor_bracket_table(kind);
            for ((i, j), coeffs) in table {
                let shifted: Vec<(usize, Rat)> = coeffs
                    .iter()
                    .map(|(k, c)| (k + offset, c.clone()))
                    .collect();
                let negated: Vec<(usize, Rat)> = shifted
                    .iter()
                    .map(|(k, c)| (*k, -c.clone()))
                    .collect();
                pairs[(i + offset) * dim + (j + offset)] = shifted;
                pairs[(j + offset) * dim + (i + offset)] = negated;
            }
            factors.push(FactorMarker {
                name: name.clone(),
                kind: kind.clone(),
                range: offset..offset + d,
            });
            offset += d;
        }
        let pairs_int = pairs
            .iter()
            .map(|list| {
                list.iter()
                    .map(|(k, c)| {
                        let doubled = c * crate::ratlin::rat(2);
                        assert!(
                            doubled.is_integer(),
                            "structure constants are half-integral by construction"
                        );
                        use num::ToPrimitive;
                        (*k, doubled.to_integer().to_i64().expect("small constants"))
                    })
                    .collect()
            })
            .collect();
        AbstractLieAlgebra {
            dim,
            pairs,
            pairs_int,
            factors,
        }
    }

    pub fn trivial() -> Self {
        AbstractLieAlgebra {
            dim: 0,
            pairs: Vec::new(),
            pairs_int: Vec::new(),
            factors: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[FactorMarker] {
        &self.factors
    }

    /// Structure constants of [b_i, b_j] as a sparse coefficient list.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.pairs[i * self.dim + j]
    }

    /// Bracket of two coordinate vectors, as a coordinate vector. Both
    /// vectors are cleared to integers first; when everything fits in
    /// machine words the accumulation runs over i128.
    pub fn bracket_coords(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        if self.dim == 0 {
            return Vec::new();
        }
        let (dx, xi) = clear_vec(x);
        let (dy, yi) = clear_vec(y);
        let den = num::BigInt::from(2) * &dx * &dy; // tables are half-integral
        if let (Some(xs), Some(ys)) = (small_vec(&xi), small_vec(&yi)) {
            let mut out = vec![0i128; self.dim];
            for i in 0..self.dim {
                if xs[i] == 0 {
                    continue;
                }
                for j in 0..self.dim {
                    if i == j || ys[j] == 0 {
                        continue;
                    }
                    let table = &self.pairs_int[i * self.dim + j];
                    if table.is_empty() {
                        continue;
                    }
                    let scale = xs[i] as i128 * ys[j] as i128;
                    for (k, c) in table {
                        out[*k] += *c as i128 * scale;
                    }
                }
            }
            return out
                .into_iter()
                .map(|v| Rat::new(num::BigInt::from(v), den.clone()))
                .collect();
        }
        let mut out = vec![num::BigInt::from(0); self.dim];
        for i in 0..self.dim {
            if num::Zero::is_zero(&xi[i]) {
                continue;
            }
            for j in 0..self.dim {
                if i == j || num::Zero::is_zero(&yi[j]) {
                    continue;
                }
                let table = &self.pairs_int[i * self.dim + j];
                if table.is_empty() {
                    continue;
                }
                let scale = &xi[i] * &yi[j];
                for (k, c) in table {
                    out[*k] += num::BigInt::from(*c) * &scale;
                }
            }
        }
        out.into_iter()
            .map(|v| Rat::new(v, den.clone()))
            .collect()
    }

    /// Total rank: sum of factor ranks (the factors are compact).
    pub fn rank_by_factors(&self) -> usize {
        self.factors.iter().map(|f| f.kind.rank()).sum()
    }

    /// Verify antisymmetry (structural) and the Jacobi identity on all
    /// basis triples. Exact; intended for tests and small algebras.
    pub fn check_jacobi(&self) -> Result<(), ReprError> {
        let n = self.dim;
        let basis = |i: usize| -> Vec<Rat> {
            let mut v = vec![Rat::default(); n];
            v[i] = crate::ratlin::rat(1);
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (bi, bj, bk) = (basis(i), basis(j), basis(k));
                    let mut total = self.bracket_coords(&self.bracket_coords(&bi, &bj), &bk);
                    let t2 = self.bracket_coords(&self.bracket_coords(&bj, &bk), &bi);
                    let t3 = self.bracket_coords(&self.bracket_coords(&bk, &bi), &bj);
                    for l in 0..n {
                        total[l] += &t2[l] + &t3[l];
                        if !num::Zero::is_zero(&total[l]) {
                            return Err(ReprError::InvariantViolated(format!(
                                "Jacobi fails on basis triple ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Clear a rational vector to (denominator, integer entries).
fn clear_vec(x: &[Rat]) -> (num::BigInt, Vec<num::BigInt>) {
    use num::One;
    let mut den = num::BigInt::one();
    for e in x {
        den = num::integer::lcm(den, e.denom().clone());
    }
    let ints = x.iter().map(|e| e.numer() * (&den / e.denom())).collect();
    (den, ints)
}

/// The i64 image when all magnitudes stay under 2^40 (keeps the i128
/// accumulation in `bracket_coords` overflow-free).
fn small_vec(x: &[num::BigInt]) -> Option<Vec<i64>> {
    use num::ToPrimitive;
    const BOUND: i64 = 1 << 40;
    let mut out = Vec::with_capacity(x.len());
    for e in x {
        let v = e.to_i64()?;
        if v.abs() >= BOUND {
            return None;
        }
        out.push(v);
    }
    Some(out)
}

/// Structure constants of one standard factor, extracted from its defining
/// realization. Cached per kind: the extraction does a quadratic number of
/// small matrix brackets.
fn factor_bracket_table(
    kind: &FactorKind,
) -> std::collections::BTreeMap<(usize, usize), Vec<(usize, Rat)>> {
    use std::collections::BTreeMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<BTreeMap<FactorKind, BTreeMap<(usize, usize), Vec<(usize, Rat)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(table) = cache.lock().unwrap().get(kind) {
        return table.clone();
    }
    let table = match kind {
        FactorKind::Center => BTreeMap::new(),
        FactorKind::Classical(family, n) => {
            let (flat, brackets): (Vec<SparseVec>, Box<dyn Fn(usize, usize) -> SparseVec>) =
                match family {
                    Family::So => {
                        let gens = so_generators(*n);
                        let flat = gens.iter().map(SparseVec::from_matrix).collect();
                        let g = gens.clone();
                        (flat, Box::new(move |i, j| SparseVec::from_matrix(&g[i].bracket(&g[j]))))
                    }
                    Family::Su | Family::U => {
                        let gens = if *family == Family::Su {
                            su_complex_generators(*n)
                        } else {
                            u_complex_generators(*n)
                        };
                        let flat = gens.iter().map(|c| SparseVec::from_matrix(&c.realify())).collect();
                        let g = gens.clone();
                        (
                            flat,
                            Box::new(move |i, j| SparseVec::from_matrix(&g[i].bracket(&g[j]).realify())),
                        )
                    }
                    Family::Sp => {
                        let gens = sp_quaternion_generators(*n);
                        let flat = gens.iter().map(|q| SparseVec::from_matrix(&q.realify())).collect();
                        let g = gens.clone();
                        (
                            flat,
                            Box::new(move |i, j| SparseVec::from_matrix(&g[i].bracket(&g[j]).realify())),
                        )
                    }
                };
            let mut solver = GeneratorSolver::new();
            for v in &flat {
                assert!(solver.insert(v), "defining generators are independent");
            }
            let mut out = BTreeMap::new();
            let count = flat.len();
            for i in 0..count {
                for j in i + 1..count {
                    let coords = solver
                        .coordinates(&brackets(i, j))
                        .expect("classical algebras are bracket-closed");
                    let list: Vec<(usize, Rat)> = coords.iter().map(|(k, c)| (k, c.clone())).collect();
                    if !list.is_empty() {
                        out.insert((i, j), list);
                    }
                }
            }
            out
        }
    };
    cache.lock().unwrap().insert(kind.clone(), table.clone());
    table
}

/// Matrix realization of the generators, at its natural ground field.
#[derive(Clone, Debug)]
pub enum Realization {
    Real(Vec<RatMatrix>),
    Complex(Vec<CMatrix>),
    Quaternionic(Vec<QMatrix>),
}

impl Realization {
    pub fn len(&self) -> usize {
        match self {
            Realization::Real(v) => v.len(),
            Realization::Complex(v) => v.len(),
            Realization::Quaternionic(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn field_name(&self) -> &'static str {
        match self {
            Realization::Real(_) => "real",
            Realization::Complex(_) => "complex",
            Realization::Quaternionic(_) => "quaternionic",
        }
    }
}

/// Full homomorphism checks get quadratic in the generator count on big
/// ambient spaces; above this real degree only a sampled subset of bracket
/// pairs is verified at construction (module tests cover the rest).
const FULL_HOM_CHECK_LIMIT: usize = 48;

/// A linear representation: an abstract algebra together with skew matrices
/// realizing it, one per abstract basis element.
#[derive(Clone, Debug)]
pub struct LinearRep {
    algebra: AbstractLieAlgebra,
    realization: Realization,
    mats: Vec<RatMatrix>,
    degree: usize,
    /// For complex realizations that carry an invariant quaternionic
    /// structure: the antilinear operator on the realification.
    intrinsic_j: Option<RatMatrix>,
}

impl LinearRep {
    pub fn new(
        algebra: AbstractLieAlgebra,
        realization: Realization,
        degree_hint: usize,
    ) -> Result<Self, ReprError> {
        if realization.len() != algebra.dim() {
            return Err(ReprError::InvariantViolated(format!(
                "{} generators for an algebra of dimension {}",
                realization.len(),
                algebra.dim()
            )));
        }
        let mats: Vec<RatMatrix> = match &realization {
            Realization::Real(v) => v.clone(),
            Realization::Complex(v) => v.iter().map(|c| c.realify()).collect(),
            Realization::Quaternionic(v) => v.iter().map(|q| q.realify()).collect(),
        };
        let degree = mats.first().map_or(degree_hint, |m| m.rows());
        for (idx, m) in mats.iter().enumerate() {
            if m.rows() != degree || m.cols() != degree {
                return Err(ReprError::InvariantViolated(format!(
                    "generator {idx} has mismatched size"
                )));
            }
            if !m.is_skew_symmetric() {
                return Err(ReprError::InvariantViolated(format!(
                    "generator {idx} is not skew-symmetric after realification"
                )));
            }
        }
        let rep = LinearRep {
            algebra,
            realization,
            mats,
            degree,
            intrinsic_j: None,
        };
        rep.check_homomorphism(rep.degree <= FULL_HOM_CHECK_LIMIT)?;
        Ok(rep)
    }

    /// Extension constructor for appending generators to an already
    /// validated representation: only bracket pairs touching the appended
    /// range are re-verified.
    pub(crate) fn new_extension(
        algebra: AbstractLieAlgebra,
        realization: Realization,
        degree_hint: usize,
        first_new: usize,
    ) -> Result<Self, ReprError> {
        if realization.len() != algebra.dim() {
            return Err(ReprError::InvariantViolated(format!(
                "{} generators for an algebra of dimension {}",
                realization.len(),
                algebra.dim()
            )));
        }
        let mats: Vec<RatMatrix> = match &realization {
            Realization::Real(v) => v.clone(),
            Realization::Complex(v) => v.iter().map(|c| c.realify()).collect(),
            Realization::Quaternionic(v) => v.iter().map(|q| q.realify()).collect(),
        };
        let degree = mats.first().map_or(degree_hint, |m| m.rows());
        for (idx, m) in mats.iter().enumerate() {
            if m.rows() != degree || m.cols() != degree || !m.is_skew_symmetric() {
                return Err(ReprError::InvariantViolated(format!(
                    "generator {idx} is not skew of the right size"
                )));
            }
        }
        let rep = LinearRep {
            algebra,
            realization,
            mats,
            degree,
            intrinsic_j: None,
        };
        rep.check_homomorphism_from(first_new)?;
        Ok(rep)
    }

    /// Verify the homomorphism identity on pairs (i, j) with j >= first.
    pub(crate) fn check_homomorphism_from(&self, first: usize) -> Result<(), ReprError> {
        let n = self.algebra.dim();
        for j in first..n {
            for i in 0..j {
                let expected = self.algebra.bracket_basis(i, j);
                let mut acc = self.mats[i].bracket(&self.mats[j]);
                for (k, c) in expected {
                    acc.sub_assign(&self.mats[*k].scaled(c));
                }
                if !acc.is_zero() {
                    return Err(ReprError::InvariantViolated(format!(
                        "homomorphism identity fails on generators ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Verify [m_i, m_j] = sum_k c_ijk m_k, fully or on a sampled subset.
    pub fn check_homomorphism(&self, full: bool) -> Result<(), ReprError> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                if !full && i >= 4 {
                    break;
                }
                let expected: Vec<(usize, Rat)> =
                    self.algebra.bracket_basis(i, j).to_vec();
                let ok = match &self.realization {
                    Realization::Real(v) => {
                        let mut acc = v[i].bracket(&v[j]);
                        for (k, c) in &expected {
                            acc.sub_assign(&v[*k].scaled(c));
                        }
                        acc.is_zero()
                    }
                    Realization::Complex(v) => {
                        let mut acc = v[i].bracket(&v[j]);
                        for (k, c) in &expected {
                            acc = acc.sub(&v[*k].scale(&crate::ratlin::complex::Cplx::new(
                                c.clone(),
                                Rat::default(),
                            )));
                        }
                        acc.is_zero()
                    }
                    Realization::Quaternionic(v) => {
                        let mut acc = v[i].bracket(&v[j]);
                        for (k, c) in &expected {
                            let scalar = crate::ratlin::quat::Quat::new(
                                c.clone(),
                                Rat::default(),
                                Rat::default(),
                                Rat::default(),
                            );
                            acc = acc.sub(&v[*k].scale_left(&scalar));
                        }
                        acc.is_zero()
                    }
                };
                if !ok {
                    return Err(ReprError::InvariantViolated(format!(
                        "homomorphism identity fails on generators ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &AbstractLieAlgebra {
        &self.algebra
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    /// Realified generators on R^degree.
    pub fn mats(&self) -> &[RatMatrix] {
        &self.mats
    }

    /// Real degree of the representation space.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_algebra(&self) -> usize {
        self.algebra.dim()
    }

    pub fn intrinsic_quaternionic(&self) -> Option<&RatMatrix> {
        self.intrinsic_j.as_ref()
    }

    pub(crate) fn set_intrinsic_quaternionic(&mut self, j: RatMatrix) {
        self.intrinsic_j = Some(j);
    }

    /// Quaternionic degree n (degree = 4n) when the realization is
    /// quaternionic.
    pub fn quaternionic_dim(&self) -> Option<usize> {
        match self.realization {
            Realization::Quaternionic(_) => Some(self.degree / 4),
            _ => None,
        }
    }
}

/// The defining representation of a classical family.
pub fn std_rep(family: Family, n: usize) -> Result<LinearRep, ReprError> {
    let kind = FactorKind::Classical(family, n);
    let name = kind.name();
    if family == Family::So && n < 2 || n < 1 {
        return Err(ReprError::Unsupported(format!("std({name})")));
    }
    let algebra = AbstractLieAlgebra::from_factors(&[(name, kind)]);
    let realization = match family {
        Family::So => Realization::Real(so_generators(n)),
        Family::Su => Realization::Complex(su_complex_generators(n)),
        Family::U => Realization::Complex(u_complex_generators(n)),
        Family::Sp => Realization::Quaternionic(sp_quaternion_generators(n)),
    };
    LinearRep::new(algebra, realization, 0)
}

/// Trivial representation of the zero algebra on R^d (d may be 0).
pub fn trivial_rep(d: usize) -> LinearRep {
    LinearRep {
        algebra: AbstractLieAlgebra::trivial(),
        realization: Realization::Real(Vec::new()),
        mats: Vec::new(),
        degree: d,
        intrinsic_j: None,
    }
}

/// Every generator commutes with the three right scalar operators and the
/// degree is 4n: the representation lands in sp(n).
pub fn is_quaternionic_embedding(rep: &LinearRep, n: usize) -> Result<(), ReprError> {
    if rep.degree() != 4 * n {
        return Err(ReprError::InvariantViolated(format!(
            "degree {} is not 4x{n}",
            rep.degree()
        )));
    }
    if matches!(rep.realization(), Realization::Quaternionic(_)) {
        // left quaternion matrices commute with right scalars by construction
        return Ok(());
    }
    let ops = right_quaternion_ops(n);
    for (idx, m) in rep.mats().iter().enumerate() {
        for op in &ops {
            if !m.bracket(op).is_zero() {
                return Err(ReprError::NotQuaternionic { generator: idx });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn std_reps_have_expected_shapes() {
        let r = std_rep(Family::Sp, 1).unwrap();
        assert_eq!(r.degree(), 4);
        assert_eq!(r.dim_algebra(), 3);
        let r = std_rep(Family::Su, 2).unwrap();
        assert_eq!(r.degree(), 4);
        let r = std_rep(Family::So, 5).unwrap();
        assert_eq!(r.degree(), 5);
        assert_eq!(r.dim_algebra(), 10);
    }

    #[test]
    fn abstract_algebra_satisfies_jacobi() {
        let alg = AbstractLieAlgebra::from_factors(&[
            ("so(3)".into(), FactorKind::Classical(Family::So, 3)),
            ("z".into(), FactorKind::Center),
        ]);
        assert_eq!(alg.dim(), 4);
        alg.check_jacobi().unwrap();
        let alg = AbstractLieAlgebra::from_factors(&[(
            "sp(2)".into(),
            FactorKind::Classical(Family::Sp, 2),
        )]);
        alg.check_jacobi().unwrap();
    }

    #[test]
    fn quaternionic_embedding_detection() {
        let sp = std_rep(Family::Sp, 2).unwrap();
        assert!(is_quaternionic_embedding(&sp, 2).is_ok());
        // so(4) on R^4 with the quaternionic structure of H^1 is not an
        // embedding: exhibit a non-commuting generator
        let so4 = std_rep(Family::So, 4).unwrap();
        assert!(matches!(
            is_quaternionic_embedding(&so4, 1),
            Err(ReprError::NotQuaternionic { .. })
        ));
    }

    #[test]
    fn trivial_rep_is_degenerate_but_valid() {
        let t = trivial_rep(4);
        assert_eq!(t.degree(), 4);
        assert_eq!(t.dim_algebra(), 0);
    }
}
