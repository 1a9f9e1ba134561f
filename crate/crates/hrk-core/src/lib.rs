//! Exact-arithmetic toolkit for compact linear Lie group actions.
//!
//! Computes cohomogeneity, principal isotropy data and the homogeneity rank
//! of linear actions and of the induced actions on quaternionic projective
//! space, entirely over the rationals. The `catalog` module drives a
//! subgroup-lattice survey of `Sp(n)` and checks the classification of
//! vanishing homogeneity rank actions at desk scale.

pub mod liealg;
pub mod catalog;
pub mod hrkengine;
pub mod ratlin;
pub mod reprkit;
pub mod weyl;
