//! Frobenius-Schur type detection through the commutant.
//!
//! The commutant of a family of skew matrices is closed under transpose, so
//! any symmetric non-scalar element of it has a real eigenspace that is a
//! proper invariant subspace. Conversely every symmetric commuting operator
//! of an irreducible family is scalar. The dimension of the symmetric part
//! of the commutant is therefore an exact irreducibility witness: dimension
//! one certifies irreducibility, and the commutant is then a division
//! algebra of dimension 1, 2 or 4.

use serde::Serialize;

use crate::ratlin::{commutant, nullspace, RatMatrix};

use super::LinearRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureTag {
    Real,
    Complex,
    Quaternionic,
    ReducibleOrUndetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureType {
    pub tag: StructureTag,
    pub commutant_dim: usize,
}

/// Commutant dimension plus the type tag when irreducibility is certified.
pub fn structure_type(rep: &LinearRep) -> StructureType {
    let degree = rep.degree();
    let basis = commutant(rep.mats(), degree);
    let commutant_dim = basis.len();
    let tag = if symmetric_part_dim(&basis) == 1 {
        match commutant_dim {
            1 => StructureTag::Real,
            2 => StructureTag::Complex,
            4 => StructureTag::Quaternionic,
            _ => StructureTag::ReducibleOrUndetermined,
        }
    } else {
        StructureTag::ReducibleOrUndetermined
    };
    StructureType {
        tag,
        commutant_dim,
    }
}

/// Dimension of { X in span(basis) : X = X^T }.
fn symmetric_part_dim(basis: &[RatMatrix]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let cols: Vec<RatMatrix> = basis
        .iter()
        .map(|c| (&c.transpose() - c).flatten())
        .collect();
    let refs: Vec<&RatMatrix> = cols.iter().collect();
    nullspace(&RatMatrix::hstack(&refs)).len()
}
