//! Spin representations from rational Clifford gamma matrices.
//!
//! Spin(7) acts on R^8 through left multiplications by imaginary octonion
//! units. The eleven-dimensional Clifford family is assembled on H^16 by
//! tensoring an eight-element real family on R^16 with the quaternion left
//! multiplications against the volume element, which keeps every gamma a
//! quaternion matrix: the spinor module of Spin(11) and the half-spinor
//! modules of Spin(12) then carry the standard right scalar action for free.
//! All entries stay in {0, +-1} (and +-1/2 after the spin construction).

use crate::liealg::Family;
use crate::ratlin::quat::{QMatrix, Quat};
use crate::ratlin::{rat, ratq, RatMatrix};

use super::{AbstractLieAlgebra, FactorKind, LinearRep, Realization, ReprError};

/// Supported spin modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinKind {
    Spin7,
    Spin11,
    Spin12HalfPlus,
    Spin12HalfMinus,
}

impl SpinKind {
    pub fn so_size(self) -> usize {
        match self {
            SpinKind::Spin7 => 7,
            SpinKind::Spin11 => 11,
            SpinKind::Spin12HalfPlus | SpinKind::Spin12HalfMinus => 12,
        }
    }
}

/// Octonion multiplication by Cayley-Dickson doubling of the quaternions:
/// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
fn octonion_mul(x: (&Quat, &Quat), y: (&Quat, &Quat)) -> (Quat, Quat) {
    let (a, b) = x;
    let (c, d) = y;
    (
        a.mul(c).sub(&d.conj().mul(b)),
        d.mul(a).add(&b.mul(&c.conj())),
    )
}

fn octonion_basis(i: usize) -> (Quat, Quat) {
    let units = [Quat::one(), Quat::i(), Quat::j(), Quat::k()];
    if i < 4 {
        (units[i].clone(), Quat::zero())
    } else {
        (Quat::zero(), units[i - 4].clone())
    }
}

/// Left multiplication by the a-th imaginary octonion unit (a = 1..7) as an
/// 8x8 real matrix. These seven matrices anticommute and square to -1.
fn octonion_left_mult(a: usize) -> RatMatrix {
    let ea = octonion_basis(a);
    let mut m = RatMatrix::zeros(8, 8);
    for b in 0..8 {
        let eb = octonion_basis(b);
        let (p, q) = octonion_mul((&ea.0, &ea.1), (&eb.0, &eb.1));
        let coords = [p.a, p.b, p.c, p.d, q.a, q.b, q.c, q.d];
        for (r, v) in coords.into_iter().enumerate() {
            if !num::Zero::is_zero(&v) {
                m.set(r, b, v);
            }
        }
    }
    m
}

/// The seven Clifford generators on R^8.
pub fn gamma7() -> Vec<RatMatrix> {
    (1..=7).map(octonion_left_mult).collect()
}

/// Eight Clifford generators on R^16: gamma_i (x) E for the seven octonion
/// multiplications plus I (x) G, with E = diag(1, -1) and G the rotation.
fn gamma8() -> Vec<RatMatrix> {
    let e = RatMatrix::from_rows(&[&[1, 0], &[0, -1]]);
    let g = RatMatrix::from_rows(&[&[0, -1], &[1, 0]]);
    let mut out: Vec<RatMatrix> = gamma7().iter().map(|ga| ga.kron(&e)).collect();
    out.push(RatMatrix::identity(8).kron(&g));
    out
}

/// Eleven anticommuting quaternion matrices on H^16 squaring to -1:
/// the eight real gammas viewed as quaternion matrices, plus the volume
/// element of the eight scaled by each quaternion unit.
pub fn gamma11() -> Vec<QMatrix> {
    let g8 = gamma8();
    let mut omega = RatMatrix::identity(16);
    for g in &g8 {
        omega = omega.mul(g);
    }
    let mut out: Vec<QMatrix> = g8.iter().map(QMatrix::from_real).collect();
    let omega_q = QMatrix::from_real(&omega);
    for unit in [Quat::i(), Quat::j(), Quat::k()] {
        out.push(omega_q.scale_left(&unit));
    }
    out
}

/// The spin representation of so(n) determined by a Clifford family:
/// the basis element E_ab - E_ba (a < b) acts by (1/2) gamma_b gamma_a,
/// and in the half-spin case the extra coordinate acts by -(1/2) gamma_a
/// (plus half) or (1/2) gamma_a (minus half).
pub fn spin_rep(kind: SpinKind) -> Result<LinearRep, ReprError> {
    let n = kind.so_size();
    let factor = FactorKind::Classical(Family::So, n);
    let algebra = AbstractLieAlgebra::from_factors(&[(format!("spin({n})"), factor)]);
    match kind {
        SpinKind::Spin7 => {
            let gamma = gamma7();
            let mut gens = Vec::new();
            for a in 0..7 {
                for b in a + 1..7 {
                    let m = gamma[b].mul(&gamma[a]).scaled(&ratq(1, 2));
                    gens.push(m);
                }
            }
            LinearRep::new(algebra, Realization::Real(gens), 8)
        }
        SpinKind::Spin11 => {
            let gamma = gamma11();
            let mut gens = Vec::new();
            for a in 0..11 {
                for b in a + 1..11 {
                    let m = scale_q(&gamma[b].mul(&gamma[a]));
                    gens.push(m);
                }
            }
            LinearRep::new(algebra, Realization::Quaternionic(gens), 64)
        }
        SpinKind::Spin12HalfPlus | SpinKind::Spin12HalfMinus => {
            let gamma = gamma11();
            let sign = if kind == SpinKind::Spin12HalfPlus {
                rat(-1)
            } else {
                rat(1)
            };
            let mut gens = Vec::new();
            for a in 0..12 {
                for b in a + 1..12 {
                    let m = if b < 11 {
                        scale_q(&gamma[b].mul(&gamma[a]))
                    } else {
                        // E_{a,12} acts through the even-odd identification
                        let half = Quat::new(&sign * ratq(1, 2), rat(0), rat(0), rat(0));
                        gamma[a].scale_left(&half)
                    };
                    gens.push(m);
                }
            }
            LinearRep::new(algebra, Realization::Quaternionic(gens), 64)
        }
    }
}

fn scale_q(m: &QMatrix) -> QMatrix {
    let half = Quat::new(ratq(1, 2), rat(0), rat(0), rat(0));
    m.scale_left(&half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_left_mults_satisfy_clifford_relations() {
        let gamma = gamma7();
        let minus = RatMatrix::identity(8).scaled(&rat(-1));
        for (i, a) in gamma.iter().enumerate() {
            assert!(a.is_skew_symmetric());
            assert_eq!(a.mul(a), minus, "gamma_{i} squared");
            for b in gamma.iter().skip(i + 1) {
                let mut anti = a.mul(b);
                anti.add_assign(&b.mul(a));
                assert!(anti.is_zero());
            }
        }
    }

    #[test]
    fn eleven_gammas_satisfy_clifford_relations() {
        let gamma = gamma11();
        assert_eq!(gamma.len(), 11);
        let minus = {
            let mut m = QMatrix::identity(16);
            m = m.scale_left(&Quat::new(rat(-1), rat(0), rat(0), rat(0)));
            m
        };
        for (i, a) in gamma.iter().enumerate() {
            assert_eq!(a.mul(a), minus, "gamma_{i} squared");
            for b in gamma.iter().skip(i + 1) {
                let anti = a.mul(b).add(&b.mul(a));
                assert!(anti.is_zero());
            }
        }
    }

    #[test]
    fn spin7_shape() {
        let rep = spin_rep(SpinKind::Spin7).unwrap();
        assert_eq!(rep.degree(), 8);
        assert_eq!(rep.dim_algebra(), 21);
        rep.check_homomorphism(true).unwrap();
    }

    #[test]
    fn half_spin_shapes() {
        let plus = spin_rep(SpinKind::Spin12HalfPlus).unwrap();
        assert_eq!(plus.degree(), 64);
        assert_eq!(plus.dim_algebra(), 66);
        let minus = spin_rep(SpinKind::Spin12HalfMinus).unwrap();
        // the two halves differ exactly on the generators touching the
        // last coordinate: (0, 11) is generator index 10 in lex order
        assert_ne!(plus.mats()[10], minus.mats()[10]);
        assert_eq!(plus.mats()[11], minus.mats()[11]);
    }
}
