//! The core computation: principal isotropy algebras, cohomogeneity and the
//! homogeneity rank, for linear actions and for the induced actions on
//! quaternionic projective space.
//!
//! A principal point only ever shrinks the isotropy, so the minimum kernel
//! dimension over seeded integer draws is the principal value; the sampling
//! protocol from `liealg::genericity` turns persistent disagreement into an
//! error instead of a silent wrong answer. Ranks of isotropy subalgebras
//! are computed abstractly (through structure constants), which stays
//! correct even when the representation is far from faithful.

mod audits;
mod hrk;
mod isotropy;
mod slice;

pub use audits::{bredon_check, subadditivity_audit, BredonReport, SubadditivityReport};
pub use hrk::{adjoin_right_scalars, hrk_linear, hrk_projective};
pub use isotropy::{derived_series_dims as derived_series_dims_pub, generic_isotropy, subalgebra_rank, Isotropy};
pub use slice::{check_slice_identity, slice_at, SliceData};

use serde::Serialize;
use thiserror::Error;

use crate::liealg::GenericityError;
use crate::ratlin::{Rat, RatMatrix};
use crate::reprkit::ReprError;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Genericity(#[from] GenericityError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

/// The space a report refers to: R^m, or HP^{n-1} presented through H^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Space {
    #[serde(rename = "linear")]
    Linear(usize),
    #[serde(rename = "hp")]
    QuaternionicProjective(usize),
}

impl Space {
    pub fn dim(&self) -> usize {
        match self {
            Space::Linear(m) => *m,
            Space::QuaternionicProjective(n) => 4 * (n - 1),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Space::Linear(m) => format!("linear({m})"),
            Space::QuaternionicProjective(n) => format!("hp({n})"),
        }
    }
}

/// Full certificate of one homogeneity rank computation.
#[derive(Clone, Debug)]
pub struct HrkReport {
    pub space: Space,
    pub dim_g: i64,
    pub rank_g: i64,
    pub dim_isotropy: i64,
    pub rank_isotropy: i64,
    pub cohomogeneity: i64,
    pub hrk: i64,
    pub seeds: Vec<u64>,
    pub samples_agreed: bool,
    /// Coordinates of the principal isotropy basis over the abstract
    /// algebra of the computation (including the adjoined right sp(1) in
    /// the projective case).
    pub isotropy_coords: Vec<Vec<Rat>>,
    /// The same basis realized in the representation.
    pub isotropy_mats: Vec<RatMatrix>,
    /// Dimensions of the derived series of the isotropy algebra, an
    /// identification aid: [dim h, dim [h,h], ...] until stable.
    pub derived_series_dims: Vec<usize>,
}

impl HrkReport {
    /// The definition, recomputable from the fields.
    pub fn is_consistent(&self) -> bool {
        self.hrk == self.rank_g - self.rank_isotropy - self.cohomogeneity
            && self.cohomogeneity >= 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_labels() {
        assert_eq!(Space::Linear(12).label(), "linear(12)");
        assert_eq!(Space::QuaternionicProjective(6).label(), "hp(6)");
        assert_eq!(Space::QuaternionicProjective(6).dim(), 20);
    }
}
