//! Homogeneity rank reports for linear and quaternionic projective actions.

use crate::liealg::Family;
use crate::ratlin::quat::right_quaternion_ops;
use crate::reprkit::{
    is_quaternionic_embedding, AbstractLieAlgebra, FactorKind, LinearRep, Realization,
};

use super::isotropy::{derived_series_dims, generic_isotropy, subalgebra_rank};
use super::{EngineError, HrkReport, Space};

/// Homogeneity rank of the linear action on R^degree.
pub fn hrk_linear(rep: &LinearRep, seeds: &[u64]) -> Result<HrkReport, EngineError> {
    let m = rep.degree() as i64;
    let dim_g = rep.dim_algebra() as i64;
    let rank_g = rep.algebra().rank_by_factors() as i64;
    let iso = generic_isotropy(rep, seeds)?;
    let (rank_h, rank_log) = subalgebra_rank(rep.algebra(), &iso.coords, seeds)?;
    let dim_h = iso.dim() as i64;
    let cohomogeneity = m - (dim_g - dim_h);
    let hrk = rank_g - rank_h as i64 - cohomogeneity;
    let report = HrkReport {
        space: Space::Linear(rep.degree()),
        dim_g,
        rank_g,
        dim_isotropy: dim_h,
        rank_isotropy: rank_h as i64,
        cohomogeneity,
        hrk,
        seeds: seeds.to_vec(),
        samples_agreed: iso.log.agreed_first_try && rank_log.agreed_first_try,
        derived_series_dims: derived_series_dims(rep.algebra(), &iso.coords),
        isotropy_coords: iso.coords,
        isotropy_mats: iso.mats,
    };
    debug_assert!(report.is_consistent());
    Ok(report)
}

/// Adjoin the right scalar sp(1) (which commutes with every generator of a
/// quaternionic embedding) to a representation on H^n = R^{4n}.
pub fn adjoin_right_scalars(rep: &LinearRep) -> Result<LinearRep, EngineError> {
    let degree = rep.degree();
    if degree % 4 != 0 {
        return Err(EngineError::Degenerate(format!(
            "degree {degree} is not a multiple of 4"
        )));
    }
    let n = degree / 4;
    is_quaternionic_embedding(rep, n)?;
    let mut kinds: Vec<(String, FactorKind)> = rep
        .algebra()
        .factors()
        .iter()
        .map(|f| (f.name.clone(), f.kind.clone()))
        .collect();
    kinds.push(("sp(1)_r".into(), FactorKind::Classical(Family::Sp, 1)));
    let algebra = AbstractLieAlgebra::from_factors(&kinds);
    let first_new = rep.dim_algebra();
    let mut mats = rep.mats().to_vec();
    mats.extend(right_quaternion_ops(n));
    Ok(LinearRep::new_extension(
        algebra,
        Realization::Real(mats),
        degree,
        first_new,
    )?)
}

/// Homogeneity rank of the induced action on HP^{n-1}: run the linear
/// computation for G x Sp(1) on H^n; the cohomogeneity drops by one and the
/// homogeneity rank is unchanged (the right Sp(1) is transitive on the
/// fibers and contributes exactly one to the rank).
pub fn hrk_projective(rep: &LinearRep, seeds: &[u64]) -> Result<HrkReport, EngineError> {
    let extended = adjoin_right_scalars(rep)?;
    let n = rep.degree() / 4;
    let linear = hrk_linear(&extended, seeds)?;
    if linear.cohomogeneity < 1 {
        return Err(EngineError::Degenerate(
            "projective reduction needs a positive linear cohomogeneity".into(),
        ));
    }
    let dim_g = rep.dim_algebra() as i64;
    let rank_g = rep.algebra().rank_by_factors() as i64;
    let report = HrkReport {
        space: Space::QuaternionicProjective(n),
        dim_g,
        rank_g,
        dim_isotropy: linear.dim_isotropy,
        rank_isotropy: linear.rank_isotropy,
        cohomogeneity: linear.cohomogeneity - 1,
        hrk: linear.hrk,
        seeds: linear.seeds.clone(),
        samples_agreed: linear.samples_agreed,
        isotropy_coords: linear.isotropy_coords,
        isotropy_mats: linear.isotropy_mats,
        derived_series_dims: linear.derived_series_dims,
    };
    debug_assert!(report.is_consistent());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reprkit::{dsum, merge_factors, std_rep, trivial_rep};

    const SEEDS: [u64; 3] = [41, 42, 43];

    #[test]
    fn circle_on_the_plane() {
        let rep = std_rep(Family::So, 2).unwrap();
        let r = hrk_linear(&rep, &SEEDS).unwrap();
        assert_eq!(r.cohomogeneity, 1);
        assert_eq!(r.hrk, 0);
        assert!(r.is_consistent());
    }

    #[test]
    fn rotations_of_r3() {
        let rep = std_rep(Family::So, 3).unwrap();
        let r = hrk_linear(&rep, &SEEDS).unwrap();
        assert_eq!((r.rank_g, r.rank_isotropy, r.cohomogeneity), (1, 1, 1));
        assert_eq!(r.hrk, -1);
    }

    #[test]
    fn shared_so3_on_r6() {
        let a = std_rep(Family::So, 3).unwrap();
        let b = std_rep(Family::So, 3).unwrap();
        let rep = merge_factors(&dsum(&a, &b).unwrap(), &[(0, 1)]).unwrap();
        let r = hrk_linear(&rep, &SEEDS).unwrap();
        assert_eq!(r.hrk, -2);
        assert_eq!(r.cohomogeneity, 3);
    }

    #[test]
    fn trivial_action_cohomogeneity_is_the_degree() {
        let r = hrk_linear(&trivial_rep(4), &SEEDS).unwrap();
        assert_eq!(r.cohomogeneity, 4);
        assert_eq!(r.hrk, -4);
    }

    #[test]
    fn sp1_on_the_quaternionic_line() {
        let rep = std_rep(Family::Sp, 1).unwrap();
        let r = hrk_projective(&rep, &SEEDS).unwrap();
        assert_eq!(r.cohomogeneity, 0);
        assert_eq!(r.hrk, 0);
    }

    #[test]
    fn u2_on_hp1_is_cohomogeneity_one() {
        let rep = crate::reprkit::quaternionify(&std_rep(Family::U, 2).unwrap()).unwrap();
        let r = hrk_projective(&rep, &SEEDS).unwrap();
        assert_eq!(r.cohomogeneity, 1);
        assert_eq!(r.hrk, 0);
    }

    #[test]
    fn sp1_sp1_on_hp1_is_cohomogeneity_one() {
        let a = std_rep(Family::Sp, 1).unwrap();
        let b = std_rep(Family::Sp, 1).unwrap();
        let rep = dsum(&a, &b).unwrap();
        let r = hrk_projective(&rep, &SEEDS).unwrap();
        assert_eq!(r.cohomogeneity, 1);
        assert_eq!(r.hrk, 0);
    }
}
