//! Generators of the compact classical Lie algebras.
//!
//! Conventions: so(n) acts on R^n directly; su(n) and u(n) act on the
//! realification of C^n (interleaved coordinates); sp(n) acts on the
//! realification of H^n (1, i, j, k per coordinate). Every generator has
//! entries in {0, ±1} after realification.

use crate::ratlin::complex::{CMatrix, Cplx};
use crate::ratlin::quat::{QMatrix, Quat};
use crate::ratlin::RatMatrix;

use super::{Family, LieError, MatLieAlgebra};

/// so(n) generators E_ij - E_ji for i < j, in lexicographic order.
pub fn so_generators(n: usize) -> Vec<RatMatrix> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut m = RatMatrix::zeros(n, n);
            m.set(i, j, crate::ratlin::rat(1));
            m.set(j, i, crate::ratlin::rat(-1));
            out.push(m);
        }
    }
    out
}

/// su(n) generators as complex matrices: for i < j the pair
/// E_ij - E_ji and i(E_ij + E_ji), then the diagonal i(E_ll - E_{l+1,l+1}).
pub fn su_complex_generators(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut a = CMatrix::zeros(n, n);
            a.set(i, j, Cplx::one());
            a.set(j, i, Cplx::one().neg());
            out.push(a);
            let mut s = CMatrix::zeros(n, n);
            s.set(i, j, Cplx::i());
            s.set(j, i, Cplx::i());
            out.push(s);
        }
    }
    for l in 0..n.saturating_sub(1) {
        let mut d = CMatrix::zeros(n, n);
        d.set(l, l, Cplx::i());
        d.set(l + 1, l + 1, Cplx::i().neg());
        out.push(d);
    }
    out
}

/// u(n) generators: the su(n) off-diagonal pairs plus i E_ll for each l.
pub fn u_complex_generators(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let mut a = CMatrix::zeros(n, n);
            a.set(i, j, Cplx::one());
            a.set(j, i, Cplx::one().neg());
            out.push(a);
            let mut s = CMatrix::zeros(n, n);
            s.set(i, j, Cplx::i());
            s.set(j, i, Cplx::i());
            out.push(s);
        }
    }
    for l in 0..n {
        let mut d = CMatrix::zeros(n, n);
        d.set(l, l, Cplx::i());
        out.push(d);
    }
    out
}

/// sp(n) generators as quaternion matrices: for i < j the real pair
/// E_ij - E_ji and q(E_ij + E_ji) for q = i, j, k; then q E_ll on the
/// diagonal.
pub fn sp_quaternion_generators(n: usize) -> Vec<QMatrix> {
    let units = [Quat::i(), Quat::j(), Quat::k()];
    let mut out = Vec::with_capacity(n * (2 * n + 1));
    for i in 0..n {
        for j in i + 1..n {
            let mut a = QMatrix::zeros(n, n);
            a.set(i, j, Quat::one());
            a.set(j, i, Quat::one().neg());
            out.push(a);
            for q in &units {
                let mut s = QMatrix::zeros(n, n);
                s.set(i, j, q.clone());
                s.set(j, i, q.clone());
                out.push(s);
            }
        }
    }
    for l in 0..n {
        for q in &units {
            let mut d = QMatrix::zeros(n, n);
            d.set(l, l, q.clone());
            out.push(d);
        }
    }
    out
}

/// The compact real form of the given family, realized by skew-symmetric
/// matrices: so(n) on R^n, su(n)/u(n) on R^{2n}, sp(n) on R^{4n}.
pub fn classical(family: Family, n: usize) -> Result<MatLieAlgebra, LieError> {
    match family {
        Family::So if n < 2 => {
            return Err(LieError::Unsupported(format!("so({n}) needs n >= 2")))
        }
        _ if n < 1 => return Err(LieError::Unsupported(format!("{}({n}) needs n >= 1", family.name()))),
        _ => {}
    }
    let label = format!("{}({n})", family.name());
    let (ambient, basis): (usize, Vec<RatMatrix>) = match family {
        Family::So => (n, so_generators(n)),
        Family::Su => (2 * n, su_complex_generators(n).iter().map(|c| c.realify()).collect()),
        Family::U => (2 * n, u_complex_generators(n).iter().map(|c| c.realify()).collect()),
        Family::Sp => (4 * n, sp_quaternion_generators(n).iter().map(|q| q.realify()).collect()),
    };
    debug_assert_eq!(basis.len(), family.dim(n));
    MatLieAlgebra::new(ambient, basis, Some(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_the_tables() {
        assert_eq!(classical(Family::So, 3).unwrap().dim(), 3);
        assert_eq!(classical(Family::Su, 2).unwrap().dim(), 3);
        assert_eq!(classical(Family::Sp, 2).unwrap().dim(), 10);
        assert_eq!(classical(Family::U, 3).unwrap().dim(), 9);
        assert_eq!(classical(Family::So, 3).unwrap().ambient_dim(), 3);
        assert_eq!(classical(Family::Su, 2).unwrap().ambient_dim(), 4);
        assert_eq!(classical(Family::Sp, 2).unwrap().ambient_dim(), 8);
    }

    #[test]
    fn invalid_sizes_error() {
        assert!(classical(Family::So, 1).is_err());
        assert!(classical(Family::Sp, 0).is_err());
    }

    #[test]
    fn closure_holds_for_medium_sizes() {
        // above the automatic check limit, run it explicitly
        let alg = classical(Family::Sp, 3).unwrap();
        alg.check_bracket_closure().unwrap();
        let alg = classical(Family::Su, 4).unwrap();
        alg.check_bracket_closure().unwrap();
    }
}
