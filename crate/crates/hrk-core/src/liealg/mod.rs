//! Skew-symmetric matrix realizations of the compact classical Lie algebras
//! and the rank machinery built on generic-element centralizers.

mod classical;
mod genericity;
mod rank;

pub use classical::{classical, su_complex_generators, u_complex_generators, sp_quaternion_generators, so_generators};
pub use genericity::{establish_minimum, random_coefficients, GenericityError, SampleLog};
pub use rank::{algebra_rank, centralizer_in_span, common_kernel, fixed_space, CartanData};

use thiserror::Error;

use crate::ratlin::sparse::{SparseVec, SpanBasis};
use crate::ratlin::RatMatrix;

/// Compact classical family tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    So,
    Su,
    Sp,
    U,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::So => "so",
            Family::Su => "su",
            Family::Sp => "sp",
            Family::U => "u",
        }
    }

    /// Dimension of the compact real form of rank parameter n.
    pub fn dim(self, n: usize) -> usize {
        match self {
            Family::So => n * (n - 1) / 2,
            Family::Su => n * n - 1,
            Family::Sp => n * (2 * n + 1),
            Family::U => n * n,
        }
    }

    /// Rank of the compact real form.
    pub fn rank(self, n: usize) -> usize {
        match self {
            Family::So => n / 2,
            Family::Su => n - 1,
            Family::Sp => n,
            Family::U => n,
        }
    }
}

#[derive(Debug, Error)]
pub enum LieError {
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("algebra invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Genericity(#[from] GenericityError),
}

/// A Lie subalgebra of so(m) given by a basis of skew-symmetric matrices.
#[derive(Clone, Debug)]
pub struct MatLieAlgebra {
    ambient: usize,
    basis: Vec<RatMatrix>,
    label: Option<String>,
}

/// Bracket-closure checks become expensive around this ambient size; above
/// it construction checks skewness and independence only and closure is
/// covered by the module tests.
const FULL_CLOSURE_CHECK_LIMIT: usize = 16;

impl MatLieAlgebra {
    /// Build an algebra, asserting the type invariants: every basis matrix
    /// skew-symmetric of the right size, the basis linearly independent,
    /// and (up to the size limit above) the span closed under brackets.
    pub fn new(
        ambient: usize,
        basis: Vec<RatMatrix>,
        label: Option<String>,
    ) -> Result<Self, LieError> {
        let mut span = SpanBasis::new();
        for (idx, b) in basis.iter().enumerate() {
            if b.rows() != ambient || b.cols() != ambient {
                return Err(LieError::InvariantViolated(format!(
                    "basis matrix {idx} has size {}x{}, ambient is {ambient}",
                    b.rows(),
                    b.cols()
                )));
            }
            if !b.is_skew_symmetric() {
                return Err(LieError::InvariantViolated(format!(
                    "basis matrix {idx} is not skew-symmetric"
                )));
            }
            if !span.insert(&SparseVec::from_matrix(b)) {
                return Err(LieError::InvariantViolated(format!(
                    "basis matrix {idx} is linearly dependent on the previous ones"
                )));
            }
        }
        let alg = MatLieAlgebra {
            ambient,
            basis,
            label,
        };
        if ambient <= FULL_CLOSURE_CHECK_LIMIT {
            alg.check_bracket_closure()?;
        }
        Ok(alg)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Verify that all pairwise brackets stay in the span.
    pub fn check_bracket_closure(&self) -> Result<(), LieError> {
        let mut span = SpanBasis::new();
        for b in &self.basis {
            span.insert(&SparseVec::from_matrix(b));
        }
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let br = self.basis[i].bracket(&self.basis[j]);
                if !span.contains(&SparseVec::from_matrix(&br)) {
                    return Err(LieError::InvariantViolated(format!(
                        "bracket of basis elements {i}, {j} leaves the span"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// ab - ba. Panics on size mismatch (the operands come from one algebra).
pub fn bracket(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    assert!(a.is_square() && b.is_square(), "bracket of non-square matrices");
    assert_eq!(a.rows(), b.rows(), "bracket size mismatch");
    a.bracket(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::{rat, solve_membership};

    #[test]
    fn bracket_basics() {
        let alg = classical(Family::So, 3).unwrap();
        let x = &alg.basis()[0];
        assert!(bracket(x, x).is_zero());
        let id = RatMatrix::identity(3);
        assert!(bracket(&id, x).is_zero());
    }

    #[test]
    fn so3_brackets_stay_in_span() {
        // [L_x, L_y] lands back in the algebra (up to sign conventions)
        let alg = classical(Family::So, 3).unwrap();
        let br = bracket(&alg.basis()[0], &alg.basis()[1]);
        let flat: Vec<_> = alg.basis().iter().map(|b| b.flatten()).collect();
        let coeffs = solve_membership(&br.flatten(), &flat).unwrap();
        // exactly one nonzero coefficient of absolute value 1
        let nonzero: Vec<_> = coeffs.iter().filter(|c| !num::Zero::is_zero(*c)).collect();
        assert_eq!(nonzero.len(), 1);
        assert!(*nonzero[0] == rat(1) || *nonzero[0] == rat(-1));
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let alg = classical(Family::So, 3).unwrap();
        let mut basis = alg.basis().to_vec();
        basis.push(alg.basis()[0].clone());
        assert!(MatLieAlgebra::new(3, basis, None).is_err());
    }
}
