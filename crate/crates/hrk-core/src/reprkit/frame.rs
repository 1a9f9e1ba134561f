//! Change of frame from a complex representation with an invariant
//! quaternionic structure to the standard quaternionic realization.
//!
//! Given the standard complex structureIc and an invariant antilinear Jq
//! with Jq^2 = -1, each seed vector u spans the H-line
//! (u, Ic u, Jq u, Jq Ic u); ordering those four as (1, i, j, k) per
//! coordinate matches the interleaved convention, so right scalar
//! multiplication becomes the standard block triple. Both Ic and Jq are
//! orthogonal and skew, which makes every quadruple orthogonal with equal
//! norms automatically; seeds are drawn greedily from the standard basis so
//! the change of basis stays orthogonal up to one global scale and
//! conjugation preserves exact skewness.

use crate::ratlin::complex::CMatrix;
use crate::ratlin::quat::{right_quaternion_ops, QMatrix, Quat};
use crate::ratlin::{Rat, RatMatrix};

use super::{LinearRep, Realization, ReprError};

/// Rewrite a complex representation carrying an intrinsic quaternionic
/// structure in the standard quaternionic frame. The result acts on H^n
/// with n = degree/4 and commutes with `right_quaternion_ops(n)`.
pub fn standardize_quaternionic(rep: &LinearRep) -> Result<LinearRep, ReprError> {
    let Realization::Complex(_) = rep.realization() else {
        return Err(ReprError::FieldMismatch(
            "frame standardization needs a complex realization".into(),
        ));
    };
    let Some(jq) = rep.intrinsic_quaternionic().cloned() else {
        return Err(ReprError::Unsupported(
            "no invariant quaternionic structure is attached".into(),
        ));
    };
    let degree = rep.degree();
    if degree % 4 != 0 {
        return Err(ReprError::InvariantViolated(format!(
            "degree {degree} is not divisible by 4"
        )));
    }
    let n = degree / 4;
    let jc = CMatrix::standard_j(degree / 2);

    // greedy seed selection from the standard basis, quadruple by quadruple
    let mut columns: Vec<RatMatrix> = Vec::with_capacity(degree);
    let mut picked = 0usize;
    for cand in 0..degree {
        if picked == n {
            break;
        }
        let u = RatMatrix::basis_col(degree, cand);
        let quad = [
            u.clone(),
            jc.mul(&u),
            jq.mul(&u),
            jq.mul(&jc.mul(&u)),
        ];
        let orthogonal = columns
            .iter()
            .all(|c| quad.iter().all(|q| num::Zero::is_zero(&c.dot(q))));
        if orthogonal {
            columns.extend(quad);
            picked += 1;
        }
    }
    if picked < n {
        return Err(ReprError::Unsupported(
            "no exact quaternionic frame found from the standard basis".into(),
        ));
    }
    let refs: Vec<&RatMatrix> = columns.iter().collect();
    let b = RatMatrix::hstack(&refs);
    // B^T B must be a positive multiple of the identity
    let gram = b.transpose().mul(&b);
    let scale = gram.get(0, 0).clone();
    let expected = RatMatrix::identity(degree).scaled(&scale);
    if gram != expected {
        return Err(ReprError::InvariantViolated(
            "quaternionic frame is not orthogonal with equal norms".into(),
        ));
    }
    let inv_scale = Rat::new(
        scale.denom().clone(),
        scale.numer().clone(),
    );

    let mut qgens: Vec<QMatrix> = Vec::with_capacity(rep.dim_algebra());
    for m in rep.mats() {
        let transformed = b.transpose().mul(&m.mul(&b)).scaled(&inv_scale);
        qgens.push(quaternion_entries(&transformed, n)?);
    }
    LinearRep::new(rep.algebra().clone(), Realization::Quaternionic(qgens), degree)
}

/// Read the quaternion entries off a real matrix commuting with the
/// standard right scalar action: block (i, j) is the left multiplication by
/// the quaternion in its first column.
fn quaternion_entries(m: &RatMatrix, n: usize) -> Result<QMatrix, ReprError> {
    let mut q = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            q.set(
                i,
                j,
                Quat::new(
                    m.get(4 * i, 4 * j).clone(),
                    m.get(4 * i + 1, 4 * j).clone(),
                    m.get(4 * i + 2, 4 * j).clone(),
                    m.get(4 * i + 3, 4 * j).clone(),
                ),
            );
        }
    }
    if &q.realify() != m {
        return Err(ReprError::InvariantViolated(
            "transformed generator is not quaternion-linear".into(),
        ));
    }
    // the right scalar triple is standard in the new frame by construction
    debug_assert!(right_quaternion_ops(n)
        .iter()
        .all(|op| m.bracket(op).is_zero()));
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::super::{lambda_k, std_rep};
    use super::*;
    use crate::liealg::Family;

    #[test]
    fn wedge3_of_su6_standardizes() {
        let su6 = std_rep(Family::Su, 6).unwrap();
        let w = lambda_k(&su6, 3).unwrap();
        assert!(w.intrinsic_quaternionic().is_some());
        let q = standardize_quaternionic(&w).unwrap();
        assert_eq!(q.degree(), 40);
        assert_eq!(q.quaternionic_dim(), Some(10));
        // all generators commute with the standard right scalar action
        let ops = right_quaternion_ops(10);
        for m in q.mats().iter().take(4) {
            for op in &ops {
                assert!(m.bracket(op).is_zero());
            }
        }
    }

    #[test]
    fn reps_without_structure_are_rejected() {
        let su3 = std_rep(Family::Su, 3).unwrap();
        assert!(standardize_quaternionic(&su3).is_err());
    }
}
