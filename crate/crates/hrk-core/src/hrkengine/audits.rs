//! Subadditivity of the homogeneity rank over direct sums, and the torus
//! fixed-point inequality.

use crate::ratlin::Rat;
use crate::reprkit::{dsum, merge_factors, LinearRep};

use super::isotropy::subalgebra_rank;
use super::{hrk_linear, EngineError};

#[derive(Clone, Debug)]
pub struct SubadditivityReport {
    pub hrk_sum: i64,
    pub hrk_first: i64,
    pub hrk_second: i64,
    pub holds: bool,
}

/// hrk(G, V1 + V2) <= hrk(G, V1) + hrk(G, V2) for two representations of
/// the same algebra. The inputs must have identical factor lists; the sum
/// is formed with every factor shared.
pub fn subadditivity_audit(
    r1: &LinearRep,
    r2: &LinearRep,
    seeds: &[u64],
) -> Result<SubadditivityReport, EngineError> {
    let f1 = r1.algebra().factors();
    let f2 = r2.algebra().factors();
    if f1.len() != f2.len() || f1.iter().zip(f2).any(|(a, b)| a.kind != b.kind) {
        return Err(EngineError::Degenerate(
            "subadditivity needs two representations of the same algebra".into(),
        ));
    }
    let n = f1.len();
    let stacked = dsum(r1, r2)?;
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    let sum = merge_factors(&stacked, &pairs)?;
    let hrk_sum = hrk_linear(&sum, seeds)?.hrk;
    let hrk_first = hrk_linear(r1, seeds)?.hrk;
    let hrk_second = hrk_linear(r2, seeds)?.hrk;
    Ok(SubadditivityReport {
        hrk_sum,
        hrk_first,
        hrk_second,
        holds: hrk_sum <= hrk_first + hrk_second,
    })
}

#[derive(Clone, Debug)]
pub struct BredonReport {
    pub fixed_dim: i64,
    pub cohomogeneity: i64,
    pub rank_g: i64,
    pub rank_isotropy: i64,
    pub holds: bool,
}

/// The torus fixed-point inequality dim M^T <= c - rk G + rk H for a linear
/// action: M^T is the common kernel of a Cartan subalgebra, computed from a
/// generic-element centralizer.
pub fn bredon_check(rep: &LinearRep, seeds: &[u64]) -> Result<BredonReport, EngineError> {
    let report = hrk_linear(rep, seeds)?;
    let alg = rep.algebra();
    let n = alg.dim();
    let full: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut v = vec![Rat::default(); n];
            v[i] = crate::ratlin::rat(1);
            v
        })
        .collect();
    // a Cartan subalgebra as the centralizer of a generic element
    let cartan_coords: Vec<Vec<Rat>> = if n == 0 {
        Vec::new()
    } else {
        let (_, witness, _) = crate::liealg::establish_minimum(seeds, |seed| {
            let cs = crate::liealg::random_coefficients(seed, n);
            let mut x = vec![Rat::default(); n];
            for (c, basis) in cs.iter().zip(&full) {
                for (xi, bi) in x.iter_mut().zip(basis) {
                    *xi += crate::ratlin::rat(*c) * bi;
                }
            }
            let cols: Vec<crate::ratlin::RatMatrix> = full
                .iter()
                .map(|h| crate::ratlin::RatMatrix::col_from(alg.bracket_coords(&x, h)))
                .collect();
            let refs: Vec<&crate::ratlin::RatMatrix> = cols.iter().collect();
            let kernel: Vec<Vec<Rat>> = crate::ratlin::nullspace(&crate::ratlin::RatMatrix::hstack(&refs))
                .into_iter()
                .map(|k| k.entries().to_vec())
                .collect();
            (kernel.len(), kernel)
        })?;
        witness
    };
    let m = rep.degree();
    let realized: Vec<crate::ratlin::RatMatrix> = cartan_coords
        .iter()
        .map(|c| super::isotropy::combine_mats(c, rep.mats(), m))
        .collect();
    let fixed = crate::liealg::common_kernel(&realized, m);
    let fixed_dim = fixed.len() as i64;
    // internal consistency: the centralizer dimension is the factor rank
    let (sampled_rank, _) = subalgebra_rank(alg, &cartan_coords, seeds)?;
    debug_assert_eq!(sampled_rank, cartan_coords.len());
    Ok(BredonReport {
        fixed_dim,
        cohomogeneity: report.cohomogeneity,
        rank_g: report.rank_g,
        rank_isotropy: report.rank_isotropy,
        holds: fixed_dim <= report.cohomogeneity - report.rank_g + report.rank_isotropy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Family;
    use crate::reprkit::{std_rep, trivial_rep};

    const SEEDS: [u64; 3] = [201, 202, 203];

    #[test]
    fn so3_direct_sum_subadditivity() {
        let a = std_rep(Family::So, 3).unwrap();
        let b = std_rep(Family::So, 3).unwrap();
        let r = subadditivity_audit(&a, &b, &SEEDS).unwrap();
        assert_eq!((r.hrk_sum, r.hrk_first, r.hrk_second), (-2, -1, -1));
        assert!(r.holds);
    }

    #[test]
    fn su2_pair_subadditivity() {
        let a = std_rep(Family::Su, 2).unwrap();
        let b = std_rep(Family::Su, 2).unwrap();
        let r = subadditivity_audit(&a, &b, &SEEDS).unwrap();
        assert!(r.holds);
        assert!(r.hrk_sum <= 0);
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = std_rep(Family::So, 3).unwrap();
        let b = std_rep(Family::Su, 2).unwrap();
        assert!(subadditivity_audit(&a, &b, &SEEDS).is_err());
    }

    #[test]
    fn bredon_with_a_trivial_summand() {
        // u(2) on C^2 + R: the fixed space is the trivial summand
        let rep = crate::reprkit::dsum(&std_rep(Family::U, 2).unwrap(), &trivial_rep(1)).unwrap();
        let r = bredon_check(&rep, &SEEDS).unwrap();
        assert_eq!(r.fixed_dim, 1);
        assert_eq!(r.cohomogeneity, 2);
        assert_eq!(r.rank_g, 2);
        assert_eq!(r.rank_isotropy, 1);
        assert!(r.holds);
    }

    #[test]
    fn bredon_on_su2() {
        let rep = std_rep(Family::Su, 2).unwrap();
        let r = bredon_check(&rep, &SEEDS).unwrap();
        assert_eq!(r.fixed_dim, 0);
        assert!(r.holds);
    }

    #[test]
    fn bredon_equality_for_the_trivial_representation() {
        let r = bredon_check(&trivial_rep(3), &SEEDS).unwrap();
        assert_eq!(r.fixed_dim, 3);
        assert_eq!(r.cohomogeneity, 3);
        assert!(r.holds);
    }
}
