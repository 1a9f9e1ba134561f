//! Representation combinators: direct sums, tensor products, duals,
//! exterior and symmetric powers, and factor identification.

use crate::liealg::Family;
use crate::ratlin::complex::{sym_square, wedge_power, CMatrix};
use crate::ratlin::quat::QMatrix;
use crate::ratlin::RatMatrix;

use super::{AbstractLieAlgebra, FactorKind, LinearRep, Realization, ReprError};

fn factor_list(rep: &LinearRep) -> Vec<(String, FactorKind)> {
    rep.algebra()
        .factors()
        .iter()
        .map(|f| (f.name.clone(), f.kind.clone()))
        .collect()
}

/// Block-diagonal direct sum over the product of the two algebras (all
/// factors kept distinct; use `merge_factors` afterwards to share factors).
pub fn dsum(r1: &LinearRep, r2: &LinearRep) -> Result<LinearRep, ReprError> {
    if r2.degree() == 0 && r2.dim_algebra() == 0 {
        return Ok(r1.clone());
    }
    if r1.degree() == 0 && r1.dim_algebra() == 0 {
        return Ok(r2.clone());
    }
    let mut kinds = factor_list(r1);
    kinds.extend(factor_list(r2));
    let algebra = AbstractLieAlgebra::from_factors(&kinds);
    let degree = r1.degree() + r2.degree();
    let realization = match (r1.realization(), r2.realization()) {
        (Realization::Real(a), Realization::Real(b)) => {
            Realization::Real(padded_blocks_real(a, r1.degree(), b, r2.degree()))
        }
        (Realization::Complex(a), Realization::Complex(b)) => {
            let za = CMatrix::zeros(r1.degree() / 2, r1.degree() / 2);
            let zb = CMatrix::zeros(r2.degree() / 2, r2.degree() / 2);
            let mut gens = Vec::new();
            for g in a {
                gens.push(CMatrix::block_diag(&[g, &zb]));
            }
            for g in b {
                gens.push(CMatrix::block_diag(&[&za, g]));
            }
            Realization::Complex(gens)
        }
        (Realization::Quaternionic(a), Realization::Quaternionic(b)) => {
            let za = QMatrix::zeros(r1.degree() / 4, r1.degree() / 4);
            let zb = QMatrix::zeros(r2.degree() / 4, r2.degree() / 4);
            let mut gens = Vec::new();
            for g in a {
                gens.push(QMatrix::block_diag(&[g, &zb]));
            }
            for g in b {
                gens.push(QMatrix::block_diag(&[&za, g]));
            }
            Realization::Quaternionic(gens)
        }
        // mixed fields: fall back to the common real realification
        _ => Realization::Real(padded_blocks_real(
            r1.mats(),
            r1.degree(),
            r2.mats(),
            r2.degree(),
        )),
    };
    LinearRep::new(algebra, realization, degree)
}

fn padded_blocks_real(
    a: &[RatMatrix],
    da: usize,
    b: &[RatMatrix],
    db: usize,
) -> Vec<RatMatrix> {
    let za = RatMatrix::zeros(da, da);
    let zb = RatMatrix::zeros(db, db);
    let mut gens = Vec::new();
    for g in a {
        gens.push(RatMatrix::block_diag(&[g, &zb]));
    }
    for g in b {
        gens.push(RatMatrix::block_diag(&[&za, g]));
    }
    gens
}

/// Identify factor `b` with factor `a` (indices into the factor list): the
/// identified generators act as the sum of both blocks. Factors must be of
/// identical kind; the identification is rejected otherwise because the
/// structure constants would clash.
pub fn merge_factors(rep: &LinearRep, pairs: &[(usize, usize)]) -> Result<LinearRep, ReprError> {
    if pairs.is_empty() {
        return Ok(rep.clone());
    }
    let factors = rep.algebra().factors();
    let mut target: Vec<usize> = (0..factors.len()).collect();
    for &(a, b) in pairs {
        if a >= factors.len() || b >= factors.len() || a == b {
            return Err(ReprError::FactorMismatch(format!(
                "bad factor pair ({a}, {b})"
            )));
        }
        if factors[a].kind != factors[b].kind {
            return Err(ReprError::FactorMismatch(format!(
                "cannot identify {} with {}",
                factors[a].name, factors[b].name
            )));
        }
        // route b (and anything already routed to b) to a's group
        let root = target[a];
        for t in target.iter_mut() {
            if *t == b {
                *t = root;
            }
        }
    }
    // surviving factors in original order
    let mut kept: Vec<usize> = target.clone();
    kept.sort_unstable();
    kept.dedup();
    let kinds: Vec<(String, FactorKind)> = kept
        .iter()
        .map(|&f| (factors[f].name.clone(), factors[f].kind.clone()))
        .collect();
    let algebra = AbstractLieAlgebra::from_factors(&kinds);

    // merged generator = sum over all source factors routed to the target
    let merge_generators = |count: usize, add: &mut dyn FnMut(usize, usize)| {
        for (slot, &f) in kept.iter().enumerate() {
            let dim = factors[f].kind.dim();
            for g in 0..dim {
                for (src_idx, src) in factors.iter().enumerate() {
                    if target[src_idx] == f {
                        add(slot_offset(&kinds, slot) + g, src.range.start + g);
                    }
                }
            }
        }
        let _ = count;
    };

    fn slot_offset(kinds: &[(String, FactorKind)], slot: usize) -> usize {
        kinds[..slot].iter().map(|(_, k)| k.dim()).sum()
    }

    let new_dim = algebra.dim();
    let realization = match rep.realization() {
        Realization::Real(v) => {
            let d = rep.degree();
            let mut gens = vec![RatMatrix::zeros(d, d); new_dim];
            merge_generators(new_dim, &mut |dst, src| gens[dst].add_assign(&v[src]));
            Realization::Real(gens)
        }
        Realization::Complex(v) => {
            let d = rep.degree() / 2;
            let mut gens = vec![CMatrix::zeros(d, d); new_dim];
            merge_generators(new_dim, &mut |dst, src| {
                gens[dst] = gens[dst].add(&v[src]);
            });
            Realization::Complex(gens)
        }
        Realization::Quaternionic(v) => {
            let d = rep.degree() / 4;
            let mut gens = vec![QMatrix::zeros(d, d); new_dim];
            merge_generators(new_dim, &mut |dst, src| {
                gens[dst] = gens[dst].add(&v[src]);
            });
            Realization::Quaternionic(gens)
        }
    };
    // a clash in identification surfaces here as a homomorphism failure
    LinearRep::new(algebra, realization, rep.degree())
}

/// Tensor product with the ground-field bookkeeping of the catalog:
/// real(x)real and real(x)quaternionic (either order), complex(x)complex,
/// complex with real on either side, complex(x)quaternionic through its
/// realification, and quaternionic(x)quaternionic over H (a real module).
pub fn tprod(r1: &LinearRep, r2: &LinearRep) -> Result<LinearRep, ReprError> {
    let mut kinds = factor_list(r1);
    kinds.extend(factor_list(r2));
    let algebra = AbstractLieAlgebra::from_factors(&kinds);
    match (r1.realization(), r2.realization()) {
        (Realization::Real(a), Realization::Real(b)) => {
            let (p, q) = (r1.degree(), r2.degree());
            let gens = tensor_generators_real(a, p, b, q);
            LinearRep::new(algebra, Realization::Real(gens), p * q)
        }
        (Realization::Complex(a), Realization::Complex(b)) => {
            let (p, q) = (r1.degree() / 2, r2.degree() / 2);
            let ia = CMatrix::identity(p);
            let ib = CMatrix::identity(q);
            let mut gens = Vec::new();
            for g in a {
                gens.push(g.kron(&ib));
            }
            for g in b {
                gens.push(ia.kron(g));
            }
            LinearRep::new(algebra, Realization::Complex(gens), 2 * p * q)
        }
        (Realization::Quaternionic(a), Realization::Quaternionic(b)) => {
            let (p, q) = (r1.degree() / 4, r2.degree() / 4);
            let gens = tensor_generators_quat_quat(a, p, b, q);
            LinearRep::new(algebra, Realization::Real(gens), 4 * p * q)
        }
        (Realization::Real(_), Realization::Quaternionic(b)) => {
            let (p, q) = (r1.degree(), r2.degree() / 4);
            let gens = tensor_real_quat(r1.mats(), p, b, q, &algebra);
            LinearRep::new(algebra, Realization::Quaternionic(gens), 4 * p * q)
        }
        (Realization::Quaternionic(a), Realization::Real(_)) => {
            let (p, q) = (r1.degree() / 4, r2.degree());
            let iq = QMatrix::identity(q);
            let ip = QMatrix::identity(p);
            let mut gens = Vec::new();
            for g in a {
                gens.push(g.kron(&iq));
            }
            for g in r2.mats() {
                gens.push(ip.kron(&QMatrix::from_real(g)));
            }
            LinearRep::new(algebra, Realization::Quaternionic(gens), 4 * p * q)
        }
        (Realization::Complex(a), Realization::Real(_)) => {
            let (p, q) = (r1.degree() / 2, r2.degree());
            let iq = CMatrix::identity(q);
            let ip = CMatrix::identity(p);
            let mut gens = Vec::new();
            for g in a {
                gens.push(g.kron(&iq));
            }
            for g in r2.mats() {
                gens.push(ip.kron(&CMatrix::from_real(g)));
            }
            LinearRep::new(algebra, Realization::Complex(gens), 2 * p * q)
        }
        (Realization::Real(a), Realization::Complex(b)) => {
            let (p, q) = (r1.degree(), r2.degree() / 2);
            let iq = CMatrix::identity(q);
            let ip = CMatrix::identity(p);
            let mut gens = Vec::new();
            for g in a {
                gens.push(CMatrix::from_real(g).kron(&iq));
            }
            for g in b {
                gens.push(ip.kron(g));
            }
            LinearRep::new(algebra, Realization::Complex(gens), 2 * p * q)
        }
        // complex factor enters a quaternionic tensor through its
        // realification (U(k) ⊗ Sp(q) sits inside SO(2k) ⊗ Sp(q))
        (Realization::Complex(_), Realization::Quaternionic(b)) => {
            let (p, q) = (r1.degree(), r2.degree() / 4);
            let gens = tensor_real_quat(r1.mats(), p, b, q, &algebra);
            LinearRep::new(algebra, Realization::Quaternionic(gens), 4 * p * q)
        }
        (Realization::Quaternionic(a), Realization::Complex(_)) => {
            let (p, q) = (r1.degree() / 4, r2.degree());
            let iq = QMatrix::identity(q);
            let ip = QMatrix::identity(p);
            let mut gens = Vec::new();
            for g in a {
                gens.push(g.kron(&iq));
            }
            for g in r2.mats() {
                gens.push(ip.kron(&QMatrix::from_real(g)));
            }
            LinearRep::new(algebra, Realization::Quaternionic(gens), 4 * p * q)
        }
    }
}

fn tensor_generators_real(
    a: &[RatMatrix],
    p: usize,
    b: &[RatMatrix],
    q: usize,
) -> Vec<RatMatrix> {
    let ip = RatMatrix::identity(p);
    let iq = RatMatrix::identity(q);
    let mut gens = Vec::new();
    for g in a {
        gens.push(g.kron(&iq));
    }
    for g in b {
        gens.push(ip.kron(g));
    }
    gens
}

fn tensor_real_quat(
    a_real: &[RatMatrix],
    p: usize,
    b: &[QMatrix],
    q: usize,
    _algebra: &AbstractLieAlgebra,
) -> Vec<QMatrix> {
    let iq = QMatrix::identity(q);
    let ip = QMatrix::identity(p);
    let mut gens = Vec::new();
    for g in a_real {
        gens.push(QMatrix::from_real(g).kron(&iq));
    }
    for g in b {
        gens.push(ip.kron(g));
    }
    gens
}

/// H^p (x)_H H^q as the real module M(p, q, H) = R^{4pq}: the left factor
/// acts by left multiplication, the right factor by X -> -X B. Entries of X
/// are flattened row-major with (1, i, j, k) components innermost.
fn tensor_generators_quat_quat(
    a: &[QMatrix],
    p: usize,
    b: &[QMatrix],
    q: usize,
) -> Vec<RatMatrix> {
    let mut gens = Vec::new();
    for g in a {
        gens.push(g.kron(&QMatrix::identity(q)).realify());
    }
    for g in b {
        // X -> -XB: block at rows (i*q + j), cols (i*q + l) is -R_{B[l][j]}
        let mut m = RatMatrix::zeros(4 * p * q, 4 * p * q);
        for i in 0..p {
            for j in 0..q {
                for l in 0..q {
                    let entry = g.get(l, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let block = entry.right_mult_block();
                    for r in 0..4 {
                        for c in 0..4 {
                            let v = block.get(r, c);
                            if !num::Zero::is_zero(v) {
                                m.set(4 * (i * q + j) + r, 4 * (i * q + l) + c, -v.clone());
                            }
                        }
                    }
                }
            }
        }
        gens.push(m);
    }
    gens
}

/// Dual representation. Real and quaternionic representations are self-dual
/// with the same matrices under our conventions; a complex representation
/// dualizes to its conjugate.
pub fn dual(rep: &LinearRep) -> LinearRep {
    match rep.realization() {
        Realization::Complex(v) => {
            let gens: Vec<CMatrix> = v.iter().map(|g| g.conj()).collect();
            LinearRep::new(rep.algebra().clone(), Realization::Complex(gens), rep.degree())
                .expect("conjugation preserves the homomorphism identity")
        }
        _ => rep.clone(),
    }
}

/// Induced action on the k-th exterior power of a complex representation.
/// When the power is half the complex degree and every generator is
/// traceless, the invariant complement pairing defines a quaternionic
/// structure; it is attached after an exact commutation check.
pub fn lambda_k(rep: &LinearRep, k: usize) -> Result<LinearRep, ReprError> {
    let Realization::Complex(v) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "exterior powers need a complex realization".into(),
        ));
    };
    let n = rep.degree() / 2;
    if k == 0 || k > n {
        return Err(ReprError::Unsupported(format!(
            "wedge degree {k} out of range for C^{n}"
        )));
    }
    let gens: Vec<CMatrix> = v.iter().map(|g| wedge_power(g, k)).collect();
    let d = crate::ratlin::complex::k_subsets(n, k).len();
    let mut out = LinearRep::new(rep.algebra().clone(), Realization::Complex(gens), 2 * d)?;
    if 2 * k == n {
        if let Some(j) = half_wedge_quaternionic_structure(&out, n, k) {
            out.set_intrinsic_quaternionic(j);
        }
    }
    Ok(out)
}

/// Antilinear complement map on Lambda^k C^{2k}: e_S -> sign(S, S^c) e_{S^c}
/// extended antilinearly. Returns its realification if it squares to -1 and
/// commutes with every generator (which requires traceless generators).
fn half_wedge_quaternionic_structure(rep: &LinearRep, n: usize, k: usize) -> Option<RatMatrix> {
    let subsets = crate::ratlin::complex::k_subsets(n, k);
    let index: std::collections::BTreeMap<Vec<usize>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let d = subsets.len();
    let mut j = RatMatrix::zeros(2 * d, 2 * d);
    for (si, s) in subsets.iter().enumerate() {
        let comp: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
        let ti = index[&comp];
        // sign of the permutation (s, comp) of (0..n)
        let mut concat: Vec<usize> = s.clone();
        concat.extend(&comp);
        let (_, sign) = crate::ratlin::complex::sort_with_sign(concat);
        let sgn = crate::ratlin::rat(sign as i64);
        // antilinear: z e_S -> conj(z) sign e_{S^c}
        j.set(2 * ti, 2 * si, sgn.clone());
        j.set(2 * ti + 1, 2 * si + 1, -sgn);
    }
    // must square to -1
    let mut sq = j.mul(&j);
    sq.add_assign(&RatMatrix::identity(2 * d));
    if !sq.is_zero() {
        return None;
    }
    for m in rep.mats() {
        if !m.bracket(&j).is_zero() {
            return None;
        }
    }
    Some(j)
}

/// Induced action on the symmetric square of a complex representation.
pub fn sym2(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    let Realization::Complex(v) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "symmetric squares need a complex realization".into(),
        ));
    };
    let n = rep.degree() / 2;
    let gens: Vec<CMatrix> = v.iter().map(sym_square).collect();
    let d = n * (n + 1) / 2;
    LinearRep::new(rep.algebra().clone(), Realization::Complex(gens), 2 * d)
}

/// Scalar extension of a complex representation to H^n = C^n (x) H.
pub fn quaternionify(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    let Realization::Complex(v) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "quaternionification needs a complex realization".into(),
        ));
    };
    let gens: Vec<QMatrix> = v.iter().map(QMatrix::from_complex).collect();
    LinearRep::new(
        rep.algebra().clone(),
        Realization::Quaternionic(gens),
        2 * rep.degree(),
    )
}

/// Scalar extension of a real representation to H^d = R^d (x) H.
pub fn quaternionify_real(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    match rep.realization() {
        Realization::Real(v) => {
            let gens: Vec<QMatrix> = v.iter().map(QMatrix::from_real).collect();
            LinearRep::new(
                rep.algebra().clone(),
                Realization::Quaternionic(gens),
                4 * rep.degree(),
            )
        }
        _ => Err(ReprError::FieldMismatch(
            "real scalar extension needs a real realization".into(),
        )),
    }
}

/// Complex scalar extension of a real representation: R^n inside C^n.
pub fn complexify_real(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    let Realization::Real(v) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "complex scalar extension needs a real realization".into(),
        ));
    };
    let gens: Vec<CMatrix> = v.iter().map(CMatrix::from_real).collect();
    LinearRep::new(
        rep.algebra().clone(),
        Realization::Complex(gens),
        2 * rep.degree(),
    )
}

/// Complexification of a quaternionic representation: H^n viewed as C^{2n},
/// the classical Sp(n) inside SU(2n).
pub fn complexify_quaternionic(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    let Realization::Quaternionic(v) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "complexification needs a quaternionic realization".into(),
        ));
    };
    let gens: Vec<CMatrix> = v.iter().map(|q| q.complexify()).collect();
    LinearRep::new(rep.algebra().clone(), Realization::Complex(gens), rep.degree())
}

/// Adjoin a central generator acting as multiplication by i on a complex
/// realization (the center of the ambient unitary group).
pub fn adjoin_center(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    let Realization::Complex(v) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "the center marker needs a complex realization".into(),
        ));
    };
    let n = rep.degree() / 2;
    // reject only when multiplication by i is already in the span
    let target = CMatrix::i_identity(n).realify().flatten();
    let flat: Vec<RatMatrix> = rep.mats().iter().map(|m| m.flatten()).collect();
    if crate::ratlin::solve_membership(&target, &flat).is_some() {
        return Err(ReprError::Unsupported(
            "center generator already present".into(),
        ));
    }
    let mut kinds = factor_list(rep);
    kinds.push(("z".into(), FactorKind::Center));
    let algebra = AbstractLieAlgebra::from_factors(&kinds);
    let mut gens = v.clone();
    gens.push(CMatrix::i_identity(n));
    LinearRep::new(algebra, Realization::Complex(gens), rep.degree())
}

/// The adjoint representation, realized on the algebra itself. Only exact
/// for families whose defining basis is orthogonal with equal norms under
/// the trace form (so(n), sp(1), su(2)); other families have no rational
/// orthonormal basis and are rejected.
pub fn adjoint_rep(family: Family, n: usize) -> Result<LinearRep, ReprError> {
    let ok = matches!(
        (family, n),
        (Family::So, _) | (Family::Sp, 1) | (Family::Su, 2) | (Family::U, 1)
    );
    if !ok {
        return Err(ReprError::Unsupported(format!(
            "adjoint of {}({n}) has no exact skew realization in this basis",
            family.name()
        )));
    }
    if family == Family::U && n == 1 {
        // abelian: the adjoint action is trivial on R^1
        let algebra = AbstractLieAlgebra::from_factors(&[(
            "u(1)".into(),
            FactorKind::Classical(Family::U, 1),
        )]);
        return LinearRep::new(algebra, Realization::Real(vec![RatMatrix::zeros(1, 1)]), 1);
    }
    let kind = FactorKind::Classical(family, n);
    let algebra = AbstractLieAlgebra::from_factors(&[(kind.name(), kind.clone())]);
    let dim = algebra.dim();
    // ad matrices from the structure constants: column j of ad(b_i) is the
    // coordinate vector of [b_i, b_j]
    let mut gens = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut m = RatMatrix::zeros(dim, dim);
        for j in 0..dim {
            for (k, c) in algebra.bracket_basis(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        gens.push(m);
    }
    LinearRep::new(algebra, Realization::Real(gens), dim)
}

#[cfg(test)]
mod tests {
    use super::super::{std_rep, trivial_rep};
    use super::*;

    #[test]
    fn dsum_degrees_add() {
        let a = std_rep(Family::Sp, 1).unwrap();
        let t = trivial_rep(4);
        let s = dsum(&a, &t).unwrap();
        assert_eq!(s.degree(), 8);
        assert_eq!(s.dim_algebra(), 3);
        // identity case
        let s2 = dsum(&a, &trivial_rep(0)).unwrap();
        assert_eq!(s2.degree(), 4);
    }

    #[test]
    fn shared_factor_sum() {
        let a = std_rep(Family::So, 3).unwrap();
        let b = std_rep(Family::So, 3).unwrap();
        let s = dsum(&a, &b).unwrap();
        assert_eq!(s.dim_algebra(), 6);
        let shared = merge_factors(&s, &[(0, 1)]).unwrap();
        assert_eq!(shared.dim_algebra(), 3);
        assert_eq!(shared.degree(), 6);
    }

    #[test]
    fn mismatched_identification_is_rejected() {
        let a = std_rep(Family::So, 3).unwrap();
        let b = std_rep(Family::Su, 2).unwrap();
        let s = dsum(&a, &b).unwrap();
        assert!(matches!(
            merge_factors(&s, &[(0, 1)]),
            Err(ReprError::FactorMismatch(_))
        ));
    }

    #[test]
    fn tensor_degrees() {
        let so3 = std_rep(Family::So, 3).unwrap();
        let sp1 = std_rep(Family::Sp, 1).unwrap();
        let t = tprod(&so3, &sp1).unwrap();
        assert_eq!(t.degree(), 12);
        assert_eq!(t.dim_algebra(), 6);
        // tensor with the trivial one-dimensional representation
        let t1 = tprod(&so3, &trivial_rep(1)).unwrap();
        assert_eq!(t1.degree(), 3);
    }

    #[test]
    fn quat_quat_tensor_is_so4_like() {
        let a = std_rep(Family::Sp, 1).unwrap();
        let b = std_rep(Family::Sp, 1).unwrap();
        let t = tprod(&a, &b).unwrap();
        assert_eq!(t.degree(), 4);
        assert_eq!(t.dim_algebra(), 6);
        // sp(1) + sp(1) acting on H is so(4): the image must span a
        // 6-dimensional space of skew matrices on R^4
        use crate::ratlin::sparse::{SparseVec, SpanBasis};
        let mut span = SpanBasis::new();
        for m in t.mats() {
            span.insert(&SparseVec::from_matrix(m));
        }
        assert_eq!(span.dim(), 6);
    }

    #[test]
    fn dual_is_an_involution() {
        let r = std_rep(Family::Su, 3).unwrap();
        let d = dual(&r);
        let dd = dual(&d);
        assert_eq!(dd.mats()[0], r.mats()[0]);
        assert_eq!(dd.mats()[5], r.mats()[5]);
    }

    #[test]
    fn wedge_and_sym_degrees() {
        let su2 = std_rep(Family::Su, 2).unwrap();
        let s = sym2(&su2).unwrap();
        assert_eq!(s.degree(), 6);
        let su6 = std_rep(Family::Su, 6).unwrap();
        let w = lambda_k(&su6, 3).unwrap();
        assert_eq!(w.degree(), 40);
        assert!(w.intrinsic_quaternionic().is_some());
        // u(6) has generators with nonzero trace: the complement pairing is not invariant
        let u6 = std_rep(Family::U, 6).unwrap();
        let wu = lambda_k(&u6, 3).unwrap();
        assert!(wu.intrinsic_quaternionic().is_none());
    }

    #[test]
    fn center_adjunction() {
        let sp2 = std_rep(Family::Sp, 2).unwrap();
        let c = complexify_quaternionic(&sp2).unwrap();
        // the real degree is unchanged: H^2 and C^4 are both R^8
        assert_eq!(c.degree(), 8);
        let zc = adjoin_center(&c).unwrap();
        assert_eq!(zc.dim_algebra(), 11);
        assert!(adjoin_center(&zc).is_err());
        let u2 = std_rep(Family::U, 2).unwrap();
        assert!(adjoin_center(&u2).is_err());
    }

    #[test]
    fn adjoint_cases() {
        let ad = adjoint_rep(Family::So, 4).unwrap();
        assert_eq!(ad.degree(), 6);
        let ad = adjoint_rep(Family::Sp, 1).unwrap();
        assert_eq!(ad.degree(), 3);
        assert!(adjoint_rep(Family::Su, 3).is_err());
    }

    #[test]
    fn quaternionification_degrees() {
        let u3 = std_rep(Family::U, 3).unwrap();
        let q = quaternionify(&u3).unwrap();
        assert_eq!(q.degree(), 12);
        let so3 = std_rep(Family::So, 3).unwrap();
        let q = quaternionify_real(&so3).unwrap();
        assert_eq!(q.degree(), 12);
    }
}
