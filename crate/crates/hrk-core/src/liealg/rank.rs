//! Rank via generic-element centralizers.
//!
//! For a compact Lie algebra the centralizer of a generic element is a
//! Cartan subalgebra, so its dimension is the rank. Genericity is
//! established by the sampling protocol in `genericity`.

use crate::ratlin::{nullspace, Rat, RatMatrix};

use super::genericity::{establish_minimum, random_coefficients, GenericityError, SampleLog};
use super::MatLieAlgebra;

/// A Cartan subalgebra witness: coordinates over the algebra basis together
/// with the realized matrices.
#[derive(Clone, Debug)]
pub struct CartanData {
    coords: Vec<Vec<Rat>>,
    mats: Vec<RatMatrix>,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Coordinates of each Cartan element over the ambient algebra basis.
    pub fn coords(&self) -> &[Vec<Rat>] {
        &self.coords
    }

    pub fn mats(&self) -> &[RatMatrix] {
        &self.mats
    }

    /// Realize the Cartan elements in another representation indexed
    /// compatibly with the algebra basis.
    pub fn realize_in(&self, rep_mats: &[RatMatrix], degree: usize) -> Vec<RatMatrix> {
        self.coords
            .iter()
            .map(|c| combine(c, rep_mats, degree))
            .collect()
    }
}

/// Linear combination of matrices with rational coefficients.
pub fn combine(coeffs: &[Rat], mats: &[RatMatrix], size: usize) -> RatMatrix {
    assert_eq!(coeffs.len(), mats.len());
    let mut acc = RatMatrix::zeros(size, size);
    for (c, m) in coeffs.iter().zip(mats) {
        if !num::Zero::is_zero(c) {
            acc.add_scaled(c, m);
        }
    }
    acc
}

/// Coordinates (over `basis`) of the centralizer of `x` inside the span of
/// `basis`: the kernel of y -> [x, sum y_i basis_i].
pub fn centralizer_in_span(x: &RatMatrix, basis: &[RatMatrix]) -> Vec<Vec<Rat>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let cols: Vec<RatMatrix> = basis.iter().map(|b| x.bracket(b).flatten()).collect();
    let refs: Vec<&RatMatrix> = cols.iter().collect();
    let system = RatMatrix::hstack(&refs);
    nullspace(&system)
        .into_iter()
        .map(|v| v.entries().to_vec())
        .collect()
}

/// Rank of the algebra as the minimum centralizer dimension of generic
/// elements over the given seeds, with the returned centralizer as Cartan
/// data. The zero algebra has rank 0.
pub fn algebra_rank(
    alg: &MatLieAlgebra,
    seeds: &[u64],
) -> Result<(usize, CartanData, SampleLog), GenericityError> {
    let n = alg.dim();
    if n == 0 {
        return Ok((
            0,
            CartanData {
                coords: Vec::new(),
                mats: Vec::new(),
            },
            SampleLog {
                dims: vec![0; seeds.len()],
                agreed_first_try: true,
            },
        ));
    }
    let m = alg.ambient_dim();
    let (rank, coords, log) = establish_minimum(seeds, |seed| {
        let ints = random_coefficients(seed, n);
        let coeffs: Vec<Rat> = ints.iter().map(|&c| crate::ratlin::rat(c)).collect();
        let x = combine(&coeffs, alg.basis(), m);
        let cent = centralizer_in_span(&x, alg.basis());
        (cent.len(), cent)
    })?;
    let mats: Vec<RatMatrix> = coords.iter().map(|c| combine(c, alg.basis(), m)).collect();
    // Cartan invariant: the witness elements pairwise commute exactly.
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            assert!(
                mats[i].bracket(&mats[j]).is_zero(),
                "generic centralizer is not abelian; algebra is not compact-type"
            );
        }
    }
    Ok((rank, CartanData { coords, mats }, log))
}

/// Basis of the common kernel of the Cartan action in a representation:
/// the fixed space of the corresponding maximal torus. For the rank-zero
/// algebra this is the whole space.
pub fn fixed_space(cartan: &CartanData, rep_mats: &[RatMatrix], degree: usize) -> Vec<RatMatrix> {
    let realized = cartan.realize_in(rep_mats, degree);
    common_kernel(&realized, degree)
}

/// Common kernel of a list of m x m matrices; the empty list yields the
/// standard basis of R^m.
pub fn common_kernel(mats: &[RatMatrix], degree: usize) -> Vec<RatMatrix> {
    if mats.is_empty() {
        return (0..degree).map(|j| RatMatrix::basis_col(degree, j)).collect();
    }
    let refs: Vec<&RatMatrix> = mats.iter().collect();
    let stacked = RatMatrix::vstack(&refs);
    nullspace(&stacked)
}

#[cfg(test)]
mod tests {
    use super::super::{classical, Family};
    use super::*;

    const SEEDS: [u64; 3] = [11, 22, 33];

    #[test]
    fn classical_ranks_match_the_tables() {
        for (family, n, expected) in [
            (Family::So, 4, 2usize),
            (Family::So, 5, 2),
            (Family::Su, 3, 2),
            (Family::U, 2, 2),
            (Family::Sp, 2, 2),
        ] {
            let alg = classical(family, n).unwrap();
            let (rank, cartan, log) = algebra_rank(&alg, &SEEDS).unwrap();
            assert_eq!(rank, expected, "{}({n})", family.name());
            assert_eq!(cartan.rank(), expected);
            assert!(log.agreed_first_try || log.dims.iter().min() == Some(&expected));
        }
    }

    #[test]
    fn cartan_elements_commute_and_live_in_the_algebra() {
        let alg = classical(Family::Su, 3).unwrap();
        let (_, cartan, _) = algebra_rank(&alg, &SEEDS).unwrap();
        for (c, m) in cartan.coords().iter().zip(cartan.mats()) {
            assert_eq!(&combine(c, alg.basis(), alg.ambient_dim()), m);
        }
    }

    #[test]
    fn fixed_space_of_rotation_is_trivial() {
        // u(1) acting on R^2 by rotation: no fixed vectors
        let alg = classical(Family::U, 1).unwrap();
        let (rank, cartan, _) = algebra_rank(&alg, &SEEDS).unwrap();
        assert_eq!(rank, 1);
        let fixed = fixed_space(&cartan, alg.basis(), 2);
        assert!(fixed.is_empty());
    }

    #[test]
    fn fixed_space_sees_a_trivial_summand() {
        // u(2) on C^2 ⊕ R: pad every generator with a zero row/column
        let alg = classical(Family::U, 2).unwrap();
        let padded: Vec<RatMatrix> = alg
            .basis()
            .iter()
            .map(|b| RatMatrix::block_diag(&[b, &RatMatrix::zeros(1, 1)]))
            .collect();
        let (rank, cartan, _) = algebra_rank(&alg, &SEEDS).unwrap();
        assert_eq!(rank, 2);
        let fixed = fixed_space(&cartan, &padded, 5);
        assert_eq!(fixed.len(), 1);
    }

    #[test]
    fn fixed_space_of_so3_cartan_is_an_axis() {
        let alg = classical(Family::So, 3).unwrap();
        let (rank, cartan, _) = algebra_rank(&alg, &SEEDS).unwrap();
        assert_eq!(rank, 1);
        let fixed = fixed_space(&cartan, alg.basis(), 3);
        assert_eq!(fixed.len(), 1);
    }
}
