//! Slice representations and the slice identity
//! hrk(G, V) = hrk(G_p, Sigma) + (rk G - rk G_p).

use crate::liealg::{establish_minimum, random_coefficients};
use crate::ratlin::{nullspace, rat, rref, Rat, RatMatrix};
use crate::reprkit::LinearRep;

use super::isotropy::{combine_mats, subalgebra_rank};
use super::{hrk_linear, EngineError};

/// The slice data of a representation at a point.
#[derive(Clone, Debug)]
pub struct SliceData {
    pub point: RatMatrix,
    /// Isotropy subalgebra at the point, as coordinates over the algebra.
    pub isotropy_coords: Vec<Vec<Rat>>,
    /// Basis of the orthogonal complement of the orbit tangent space.
    pub slice_basis: Vec<RatMatrix>,
    /// Action of each isotropy generator, compressed to the slice: the
    /// ambient matrix P rho(X) P with P the orthogonal projection onto the
    /// slice (exactly skew-symmetric).
    pub slice_mats: Vec<RatMatrix>,
    /// rk G - rk G_p.
    pub delta: i64,
}

/// Exact isotropy at `v` (not a generic point; the actual kernel).
fn isotropy_coords_at(rep: &LinearRep, v: &RatMatrix) -> Vec<Vec<Rat>> {
    if rep.dim_algebra() == 0 {
        return Vec::new();
    }
    let cols: Vec<RatMatrix> = rep.mats().iter().map(|m| m.mul(v)).collect();
    let refs: Vec<&RatMatrix> = cols.iter().collect();
    let raw: Vec<Vec<Rat>> = nullspace(&RatMatrix::hstack(&refs))
        .into_iter()
        .map(|k| crate::ratlin::primitive_integer_form(k.entries()))
        .collect();
    crate::ratlin::size_reduce_rows(&raw)
}

/// Slice data at a nonzero point: exact isotropy, orthogonal complement of
/// the orbit tangent, the compressed slice action, and delta.
pub fn slice_at(rep: &LinearRep, v: &RatMatrix, seeds: &[u64]) -> Result<SliceData, EngineError> {
    assert!(!v.is_zero(), "slice point must be nonzero");
    let m = rep.degree();
    let iso = isotropy_coords_at(rep, v);

    // tangent space rows: (rho(b_i) v)^T; slice = common annihilator
    let slice_basis = if rep.dim_algebra() == 0 {
        (0..m).map(|j| RatMatrix::basis_col(m, j)).collect()
    } else {
        let rows: Vec<RatMatrix> = rep.mats().iter().map(|g| g.mul(v).transpose()).collect();
        let refs: Vec<&RatMatrix> = rows.iter().collect();
        nullspace(&RatMatrix::vstack(&refs))
    };

    // orthogonal projection onto the slice: P = S (S^T S)^{-1} S^T
    let slice_mats = if slice_basis.is_empty() {
        vec![RatMatrix::zeros(m, m); iso.len()]
    } else {
        let refs: Vec<&RatMatrix> = slice_basis.iter().collect();
        let s = RatMatrix::hstack(&refs);
        let st = s.transpose();
        let gram = st.mul(&s);
        let p = s.mul(&invert(&gram)).mul(&st);
        iso.iter()
            .map(|c| {
                let x = combine_mats(c, rep.mats(), m);
                p.mul(&x).mul(&p)
            })
            .collect()
    };

    let rank_g = rep.algebra().rank_by_factors() as i64;
    let (rank_iso, _) = subalgebra_rank(rep.algebra(), &iso, seeds)?;
    let data = SliceData {
        point: v.clone(),
        isotropy_coords: iso,
        slice_basis,
        slice_mats,
        delta: rank_g - rank_iso as i64,
    };
    // slice dimension = degree - orbit dimension
    debug_assert_eq!(
        data.slice_basis.len(),
        m - (rep.dim_algebra() - data.isotropy_coords.len())
    );
    debug_assert!(data.slice_mats.iter().all(|s| s.is_skew_symmetric()));
    Ok(data)
}

fn invert(m: &RatMatrix) -> RatMatrix {
    let n = m.rows();
    let mut aug = RatMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, rat(1));
    }
    let (r, pivots) = rref(&aug);
    assert_eq!(pivots.len(), n, "matrix is invertible");
    let mut inv = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    inv
}

/// Homogeneity rank of the slice representation (G_p, Sigma), computed
/// entirely in the ambient space: generic points of the slice are drawn as
/// integer combinations of the slice basis, and their isotropy inside the
/// point isotropy is an exact kernel.
fn hrk_of_slice(
    rep: &LinearRep,
    data: &SliceData,
    seeds: &[u64],
) -> Result<i64, EngineError> {
    let alg = rep.algebra();
    let h = &data.isotropy_coords;
    let dim_h = h.len() as i64;
    let slice_dim = data.slice_basis.len() as i64;
    let (rank_h, _) = subalgebra_rank(alg, h, seeds)?;

    if h.is_empty() {
        // trivial action of the trivial algebra on the slice
        return Ok(-slice_dim);
    }
    let m = rep.degree();
    let h_mats: Vec<RatMatrix> = h.iter().map(|c| combine_mats(c, rep.mats(), m)).collect();
    let (dim_hw, sub_coords, _) = establish_minimum(seeds, |seed| {
        let cs = random_coefficients(seed, data.slice_basis.len().max(1));
        let mut w = RatMatrix::zeros(m, 1);
        for (c, b) in cs.iter().zip(&data.slice_basis) {
            w.add_assign(&b.scaled(&rat(*c)));
        }
        let cols: Vec<RatMatrix> = h_mats.iter().map(|x| x.mul(&w)).collect();
        let refs: Vec<&RatMatrix> = cols.iter().collect();
        let kernel: Vec<Vec<Rat>> = nullspace(&RatMatrix::hstack(&refs))
            .into_iter()
            .map(|k| k.entries().to_vec())
            .collect();
        (kernel.len(), kernel)
    })?;
    // coordinates of the sub-isotropy over the ambient algebra
    let hw_coords: Vec<Vec<Rat>> = sub_coords
        .iter()
        .map(|hw| {
            let mut out = vec![Rat::default(); alg.dim()];
            for (c, basis) in hw.iter().zip(h) {
                for (o, b) in out.iter_mut().zip(basis) {
                    *o += c * b;
                }
            }
            out
        })
        .collect();
    let (rank_hw, _) = subalgebra_rank(alg, &hw_coords, seeds)?;
    let c_slice = slice_dim - (dim_h - dim_hw as i64);
    Ok(rank_h as i64 - rank_hw as i64 - c_slice)
}

/// Check Lemma-style slice identity at `v`:
/// hrk(G, V) = hrk(G_v, Sigma) + (rk G - rk G_v), both sides exact.
pub fn check_slice_identity(
    rep: &LinearRep,
    v: &RatMatrix,
    seeds: &[u64],
) -> Result<bool, EngineError> {
    let lhs = hrk_linear(rep, seeds)?.hrk;
    let data = slice_at(rep, v, seeds)?;
    let rhs = hrk_of_slice(rep, &data, seeds)? + data.delta;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Family;
    use crate::reprkit::{dsum, std_rep, trivial_rep};

    const SEEDS: [u64; 3] = [101, 102, 103];

    #[test]
    fn so3_slice_at_a_basis_vector() {
        let rep = std_rep(Family::So, 3).unwrap();
        let v = RatMatrix::basis_col(3, 2);
        let data = slice_at(&rep, &v, &SEEDS).unwrap();
        assert_eq!(data.isotropy_coords.len(), 1);
        assert_eq!(data.slice_basis.len(), 1);
        assert_eq!(data.delta, 0);
        assert!(check_slice_identity(&rep, &v, &SEEDS).unwrap());
    }

    #[test]
    fn u2_slice_at_a_unit_vector() {
        let rep = std_rep(Family::U, 2).unwrap();
        let v = RatMatrix::basis_col(4, 0);
        let data = slice_at(&rep, &v, &SEEDS).unwrap();
        // orbit is the 3-sphere: slice dimension 1... the isotropy of a
        // point in C^2 under u(2) is u(1), so slice dim = 4 - 3 = 1
        assert_eq!(data.isotropy_coords.len(), 1);
        assert_eq!(data.slice_basis.len(), 1);
        assert!(check_slice_identity(&rep, &v, &SEEDS).unwrap());
    }

    #[test]
    fn fixed_point_of_a_trivial_summand() {
        // so(3) + trivial R: at a point of the trivial summand the slice is
        // everything and delta = 0
        let rep = dsum(&std_rep(Family::So, 3).unwrap(), &trivial_rep(1)).unwrap();
        let v = RatMatrix::basis_col(4, 3);
        let data = slice_at(&rep, &v, &SEEDS).unwrap();
        assert_eq!(data.isotropy_coords.len(), 3);
        assert_eq!(data.slice_basis.len(), 4);
        assert_eq!(data.delta, 0);
        assert!(check_slice_identity(&rep, &v, &SEEDS).unwrap());
    }
}
