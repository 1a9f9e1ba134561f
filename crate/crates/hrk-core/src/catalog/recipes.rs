//! Buildable recipes for the groups appearing in the subgroup catalog.
//!
//! A recipe is a small combinator tree over the reprkit constructors. Every
//! quaternionic-level recipe builds a representation realized inside sp(n)
//! (so it can be fed to the projective computation directly); complex-level
//! recipes build on C^m and are lifted by `QFromC`.

use crate::liealg::Family;
use crate::ratlin::complex::{gaussian_of_norm, CMatrix, Cplx};
use crate::ratlin::{rat, Rat, RatMatrix};
use crate::reprkit::{
    adjoin_center, complexify_quaternionic, dsum, dual, lambda_k, merge_factors, quaternionify,
    quaternionify_real, spin_rep, standardize_quaternionic, std_rep, sym2, tprod, trivial_rep,
    AbstractLieAlgebra, FactorKind, LinearRep, Realization, ReprError, SpinKind,
};

/// Combinator tree for catalog constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Trivial quaternionic module H^d.
    TrivialH(usize),
    /// Trivial real module R^d.
    TrivialR(usize),
    /// Real standard representations.
    So(usize),
    /// The 8-dimensional real spin module of so(7).
    Spin7,
    /// Real tensor product of two real recipes.
    TensorRR(Box<Recipe>, Box<Recipe>),
    /// H^p (x)_H H^q of two quaternionic recipes, a real module.
    TensorQQ(Box<Recipe>, Box<Recipe>),
    /// Complex standard representations.
    Su(usize),
    U(usize),
    /// s(u(k) x u(m)) on C^{k+m}.
    SUU(usize, usize),
    /// s(u(1)sp(k) x u(m)) on C^{2k+m}, m >= 1.
    SU1SpU(usize, usize),
    /// Exterior power of a complex recipe.
    Wedge(usize, Box<Recipe>),
    /// Symmetric square of a complex recipe.
    Sym2(Box<Recipe>),
    /// Conjugate (dual) of a complex recipe.
    DualC(Box<Recipe>),
    /// Complex tensor product.
    TensorCC(Box<Recipe>, Box<Recipe>),
    /// Adjoin the center i*I to a complex recipe.
    WithZ(Box<Recipe>),
    /// View a quaternionic recipe as complex on C^{2n}.
    FromQ(Box<Recipe>),
    /// View a real recipe as complex on C^n.
    FromR(Box<Recipe>),
    /// Quaternionic standard representation.
    Sp(usize),
    /// Quaternionic spin modules on H^16.
    Spin11,
    Spin12Plus,
    Spin12Minus,
    /// Scalar extension C^m -> H^m of a complex recipe.
    QFromC(Box<Recipe>),
    /// Scalar extension R^d -> H^d of a real recipe.
    QFromR(Box<Recipe>),
    /// Rewrite a complex recipe with intrinsic quaternionic structure in
    /// the standard frame.
    StandardizeQ(Box<Recipe>),
    /// The 14-dimensional primitive part of Lambda^3 C^6 under sp(3),
    /// realized on H^7.
    Sp3Wedge3Primitive,
    /// Real (x) quaternionic tensor.
    TensorRQ(Box<Recipe>, Box<Recipe>),
    /// Direct sum at the finest common level.
    Sum(Vec<Recipe>),
    /// Identify abstract factors of the inner recipe (pairs of factor
    /// indices).
    Shared(Box<Recipe>, Vec<(usize, usize)>),
}

impl Recipe {
    pub fn boxed(self) -> Box<Recipe> {
        Box::new(self)
    }

    /// Build the representation.
    pub fn build(&self) -> Result<LinearRep, ReprError> {
        match self {
            Recipe::TrivialH(d) => {
                // trivial action realized as a quaternionic zero matrix so
                // the right scalar conventions hold on the nose
                let alg = AbstractLieAlgebra::trivial();
                LinearRep::new(alg, Realization::Quaternionic(Vec::new()), 4 * d)
            }
            Recipe::TrivialR(d) => Ok(trivial_rep(*d)),
            Recipe::So(n) => std_rep(Family::So, *n),
            Recipe::Spin7 => spin_rep(SpinKind::Spin7),
            Recipe::TensorRR(a, b) => tprod(&a.build()?, &b.build()?),
            Recipe::TensorQQ(a, b) => tprod(&a.build()?, &b.build()?),
            Recipe::Su(n) => std_rep(Family::Su, *n),
            Recipe::U(n) => std_rep(Family::U, *n),
            Recipe::SUU(k, m) => build_suu(*k, *m),
            Recipe::SU1SpU(k, m) => build_su1spu(*k, *m),
            Recipe::Wedge(k, r) => lambda_k(&r.build()?, *k),
            Recipe::Sym2(r) => sym2(&r.build()?),
            Recipe::DualC(r) => Ok(dual(&r.build()?)),
            Recipe::TensorCC(a, b) => tprod(&a.build()?, &b.build()?),
            Recipe::WithZ(r) => adjoin_center(&r.build()?),
            Recipe::FromQ(r) => complexify_quaternionic(&r.build()?),
            Recipe::FromR(r) => crate::reprkit::complexify_real(&r.build()?),
            Recipe::Sp(n) => std_rep(Family::Sp, *n),
            Recipe::Spin11 => spin_rep(SpinKind::Spin11),
            Recipe::Spin12Plus => spin_rep(SpinKind::Spin12HalfPlus),
            Recipe::Spin12Minus => spin_rep(SpinKind::Spin12HalfMinus),
            Recipe::QFromC(r) => quaternionify(&r.build()?),
            Recipe::QFromR(r) => quaternionify_real(&r.build()?),
            Recipe::StandardizeQ(r) => standardize_quaternionic(&r.build()?),
            Recipe::Sp3Wedge3Primitive => build_sp3_wedge3_primitive(),
            Recipe::TensorRQ(a, b) => tprod(&a.build()?, &b.build()?),
            Recipe::Sum(parts) => {
                let mut acc: Option<LinearRep> = None;
                for p in parts {
                    let r = p.build()?;
                    acc = Some(match acc {
                        None => r,
                        Some(prev) => dsum(&prev, &r)?,
                    });
                }
                acc.ok_or_else(|| ReprError::Unsupported("empty sum".into()))
            }
            Recipe::Shared(inner, pairs) => merge_factors(&inner.build()?, pairs),
        }
    }
}

/// s(u(k) x u(m)) on C^{k+m}: the su blocks plus the traceless mixed
/// center i diag(m I_k, -k I_m).
fn build_suu(k: usize, m: usize) -> Result<LinearRep, ReprError> {
    assert!(k >= 1 && m >= 1);
    let n = k + m;
    let mut kinds: Vec<(String, FactorKind)> = Vec::new();
    let mut gens: Vec<CMatrix> = Vec::new();
    if k >= 2 {
        kinds.push((format!("su({k})"), FactorKind::Classical(Family::Su, k)));
        for g in crate::liealg::su_complex_generators(k) {
            gens.push(embed_block(&g, n, 0));
        }
    }
    if m >= 2 {
        kinds.push((format!("su({m})"), FactorKind::Classical(Family::Su, m)));
        for g in crate::liealg::su_complex_generators(m) {
            gens.push(embed_block(&g, n, k));
        }
    }
    kinds.push(("z".into(), FactorKind::Center));
    let mut center = CMatrix::zeros(n, n);
    for i in 0..k {
        center.set(i, i, Cplx::new(Rat::default(), rat(m as i64)));
    }
    for i in k..n {
        center.set(i, i, Cplx::new(Rat::default(), rat(-(k as i64))));
    }
    gens.push(center);
    let algebra = AbstractLieAlgebra::from_factors(&kinds);
    LinearRep::new(algebra, Realization::Complex(gens), 2 * n)
}

/// s(u(1)sp(k) x u(m)) on C^{2k+m}: the complexified sp(k) block, the su(m)
/// block, and the traceless mixed center i diag(m I_2k, -2k I_m).
fn build_su1spu(k: usize, m: usize) -> Result<LinearRep, ReprError> {
    assert!(k >= 1 && m >= 1);
    let n = 2 * k + m;
    let spc = complexify_quaternionic(&std_rep(Family::Sp, k)?)?;
    let Realization::Complex(sp_gens) = spc.realization() else {
        unreachable!()
    };
    let mut kinds: Vec<(String, FactorKind)> = vec![(
        format!("sp({k})"),
        FactorKind::Classical(Family::Sp, k),
    )];
    let mut gens: Vec<CMatrix> = sp_gens.iter().map(|g| embed_block(g, n, 0)).collect();
    if m >= 2 {
        kinds.push((format!("su({m})"), FactorKind::Classical(Family::Su, m)));
        for g in crate::liealg::su_complex_generators(m) {
            gens.push(embed_block(&g, n, 2 * k));
        }
    }
    kinds.push(("z".into(), FactorKind::Center));
    let mut center = CMatrix::zeros(n, n);
    for i in 0..2 * k {
        center.set(i, i, Cplx::new(Rat::default(), rat(m as i64)));
    }
    for i in 2 * k..n {
        center.set(i, i, Cplx::new(Rat::default(), rat(-2 * (k as i64))));
    }
    gens.push(center);
    let algebra = AbstractLieAlgebra::from_factors(&kinds);
    LinearRep::new(algebra, Realization::Complex(gens), 2 * n)
}

fn embed_block(g: &CMatrix, n: usize, offset: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            m.set(offset + i, offset + j, g.get(i, j).clone());
        }
    }
    m
}

/// The 14-dimensional sp(3)-module of highest weight (0,0,1): the kernel of
/// the symplectic contraction inside Lambda^3 C^6, restricted to an
/// orthogonal basis rescaled to unit Gram over the Gaussian rationals, then
/// rewritten in the standard quaternionic frame on H^7.
fn build_sp3_wedge3_primitive() -> Result<LinearRep, ReprError> {
    let sp3 = std_rep(Family::Sp, 3)?;
    let c6 = complexify_quaternionic(&sp3)?;
    let wedge = lambda_k(&c6, 3)?;
    let Realization::Complex(wgens) = wedge.realization() else {
        unreachable!()
    };
    let subsets = crate::ratlin::complex::k_subsets(6, 3);
    let _index: std::collections::BTreeMap<Vec<usize>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let d = subsets.len();

    // The invariant symplectic form on C^6 = complexified H^3 pairs
    // coordinates (l, l+3). Contraction with it maps e_a^e_b^e_c to
    // omega(a,b) e_c - omega(a,c) e_b + omega(b,c) e_a.
    let omega = |a: usize, b: usize| -> i64 {
        if b == a + 3 {
            1
        } else if a == b + 3 {
            -1
        } else {
            0
        }
    };
    // contraction matrix: C^20 -> C^6
    let mut contraction = CMatrix::zeros(6, d);
    for (si, s) in subsets.iter().enumerate() {
        let (a, b, c) = (s[0], s[1], s[2]);
        for (coef, target) in [(omega(a, b), c), (-omega(a, c), b), (omega(b, c), a)] {
            if coef != 0 {
                let v = contraction.get(target, si).add(&Cplx::from_int(coef));
                contraction.set(target, si, v);
            }
        }
    }
    // kernel basis over C, via the realified system
    let real_system = contraction.realify();
    let kernel = crate::ratlin::nullspace(&real_system);
    assert_eq!(kernel.len(), 28, "primitive part has complex dimension 14");
    // collect a complex basis: keep kernel vectors independent over C
    let mut cbasis: Vec<CMatrix> = Vec::new();
    {
        use crate::ratlin::sparse::{SparseVec, SpanBasis};
        let mut span = SpanBasis::new();
        let jmat = CMatrix::standard_j(d);
        for v in &kernel {
            if cbasis.len() == 14 {
                break;
            }
            // insert v and i*v together to count complex dimensions
            let before = span.dim();
            span.insert(&SparseVec::from_matrix(v));
            span.insert(&SparseVec::from_matrix(&jmat.mul(v)));
            if span.dim() == before + 2 {
                cbasis.push(complex_col_from_real(v, d));
            }
        }
    }
    assert_eq!(cbasis.len(), 14);

    // orthogonalize: the natural kernel basis here is already orthogonal
    // (checked), then rescale every vector to unit Hermitian norm with a
    // Gaussian rational factor.
    for i in 0..cbasis.len() {
        for j in i + 1..cbasis.len() {
            assert!(
                cbasis[i].hdot(&cbasis[j]).is_zero(),
                "kernel basis must be orthogonal"
            );
        }
    }
    let mut unit_basis: Vec<CMatrix> = Vec::new();
    for v in &cbasis {
        let norm = v.hdot(v);
        assert!(num::Zero::is_zero(&norm.im));
        let lam = gaussian_of_norm(&norm.re).ok_or_else(|| {
            ReprError::Unsupported("kernel vector norm is not a Gaussian norm".into())
        })?;
        unit_basis.push(v.scale(&lam.inv()));
    }
    let refs: Vec<&CMatrix> = unit_basis.iter().collect();
    let b = CMatrix::hstack(&refs);
    let bh = b.conj_transpose();
    // restricted generators: B^H X B, exactly skew-Hermitian since the Gram
    // of the basis is the identity
    let restricted: Vec<CMatrix> = wgens.iter().map(|g| bh.mul(&g.mul(&b))).collect();
    for (g, r) in wgens.iter().zip(&restricted) {
        // invariance: X B = B (B^H X B)
        assert_eq!(g.mul(&b), b.mul(r), "subspace must be invariant");
    }
    let mut rep = LinearRep::new(wedge.algebra().clone(), Realization::Complex(restricted), 28)?;

    // the quaternionic structure of the wedge restricts to the kernel:
    // transport it through the basis change
    let jq_ambient = wedge
        .intrinsic_quaternionic()
        .expect("half wedge of a symplectic algebra carries its structure");
    let breal = b.realify();
    let bt = breal.transpose();
    let jq = bt.mul(&jq_ambient.mul(&breal));
    // antilinear, squares to -1, commutes with the restricted action
    let mut sq = jq.mul(&jq);
    sq.add_assign(&RatMatrix::identity(28));
    assert!(sq.is_zero(), "restricted structure squares to -1");
    rep.set_intrinsic_quaternionic(jq);
    standardize_quaternionic(&rep)
}

fn complex_col_from_real(v: &RatMatrix, d: usize) -> CMatrix {
    let mut c = CMatrix::zeros(d, 1);
    for i in 0..d {
        c.set(
            i,
            0,
            Cplx::new(v.get(2 * i, 0).clone(), v.get(2 * i + 1, 0).clone()),
        );
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reprkit::is_quaternionic_embedding;

    #[test]
    fn suu_shapes() {
        let r = build_suu(3, 3).unwrap();
        assert_eq!(r.degree(), 12);
        assert_eq!(r.dim_algebra(), 17);
        assert_eq!(r.algebra().rank_by_factors(), 5);
        let r = build_suu(1, 1).unwrap();
        assert_eq!(r.dim_algebra(), 1);
    }

    #[test]
    fn su1spu_shapes() {
        let r = build_su1spu(2, 2).unwrap();
        assert_eq!(r.degree(), 12);
        assert_eq!(r.dim_algebra(), 14);
        assert_eq!(r.algebra().rank_by_factors(), 4);
    }

    #[test]
    fn sp3_primitive_wedge_is_a_quaternionic_h7() {
        let rep = Recipe::Sp3Wedge3Primitive.build().unwrap();
        assert_eq!(rep.degree(), 28);
        assert_eq!(rep.dim_algebra(), 21);
        is_quaternionic_embedding(&rep, 7).unwrap();
    }

    #[test]
    fn shared_diagonal_sp() {
        let recipe = Recipe::Shared(
            Recipe::Sum(vec![Recipe::Sp(2), Recipe::Sp(2)]).boxed(),
            vec![(0, 1)],
        );
        let rep = recipe.build().unwrap();
        assert_eq!(rep.degree(), 16);
        assert_eq!(rep.dim_algebra(), 10);
    }

    #[test]
    fn trivial_h_module() {
        let rep = Recipe::TrivialH(1).build().unwrap();
        assert_eq!(rep.degree(), 4);
        is_quaternionic_embedding(&rep, 1).unwrap();
    }
}
