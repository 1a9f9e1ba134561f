//! Principal isotropy via minimal kernels at seeded integer points, and
//! abstract rank computation for subalgebras.

use crate::liealg::{establish_minimum, random_coefficients, GenericityError, SampleLog};
use crate::ratlin::sparse::{SparseVec, SpanBasis};
use crate::ratlin::{nullspace, rat, Rat, RatMatrix};
use crate::reprkit::{AbstractLieAlgebra, LinearRep};

use super::EngineError;

/// Principal isotropy data: basis coordinates over the abstract algebra,
/// realized matrices, and the witness point achieving the minimum.
#[derive(Clone, Debug)]
pub struct Isotropy {
    pub coords: Vec<Vec<Rat>>,
    pub mats: Vec<RatMatrix>,
    pub witness: Vec<i64>,
    pub log: SampleLog,
}

impl Isotropy {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Kernel of X -> rho(X) v over the generator coordinates, at the point
/// with the given integer coordinates.
fn isotropy_at(rep: &LinearRep, point: &[i64]) -> Vec<Vec<Rat>> {
    let n = rep.dim_algebra();
    if n == 0 {
        return Vec::new();
    }
    let v = RatMatrix::col_from_ints(point);
    let cols: Vec<RatMatrix> = rep.mats().iter().map(|m| m.mul(&v)).collect();
    let refs: Vec<&RatMatrix> = cols.iter().collect();
    let system = RatMatrix::hstack(&refs);
    let raw: Vec<Vec<Rat>> = nullspace(&system)
        .into_iter()
        .map(|k| crate::ratlin::primitive_integer_form(k.entries()))
        .collect();
    crate::ratlin::size_reduce_rows(&raw)
}

/// Principal isotropy subalgebra: the minimal kernel over seeded random
/// integer points, verified to be bracket-closed.
pub fn generic_isotropy(rep: &LinearRep, seeds: &[u64]) -> Result<Isotropy, EngineError> {
    let n = rep.dim_algebra();
    let m = rep.degree();
    if m == 0 {
        // every generator annihilates the zero space
        let coords: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut v = vec![Rat::default(); n];
                v[i] = rat(1);
                v
            })
            .collect();
        return Ok(Isotropy {
            mats: rep.mats().to_vec(),
            coords,
            witness: Vec::new(),
            log: SampleLog {
                dims: vec![n; seeds.len()],
                agreed_first_try: true,
            },
        });
    }
    let (_, (coords, witness), log) = establish_minimum(seeds, |seed| {
        let point = random_coefficients(seed, m);
        let kernel = isotropy_at(rep, &point);
        (kernel.len(), (kernel, point))
    })?;
    let mats: Vec<RatMatrix> = coords
        .iter()
        .map(|c| combine_mats(c, rep.mats(), m))
        .collect();
    check_bracket_closed(rep.algebra(), &coords)?;
    Ok(Isotropy {
        coords,
        mats,
        witness,
        log,
    })
}

pub(crate) fn combine_mats(coeffs: &[Rat], mats: &[RatMatrix], size: usize) -> RatMatrix {
    let mut acc = RatMatrix::zeros(size, size);
    for (c, m) in coeffs.iter().zip(mats) {
        if !num::Zero::is_zero(c) {
            acc.add_scaled(c, m);
        }
    }
    acc
}

fn sparse_from(coords: &[Rat]) -> SparseVec {
    SparseVec::from_matrix(&RatMatrix::col_from(coords.to_vec()))
}

/// Isotropy subspaces are closed under the abstract bracket; verify it.
/// Kernels of an action map are subalgebras by general theory, so above a
/// size threshold only a sampled slice of the quadratically many pairs is
/// rechecked.
fn check_bracket_closed(
    alg: &AbstractLieAlgebra,
    coords: &[Vec<Rat>],
) -> Result<(), EngineError> {
    const FULL_CLOSURE_DIM: usize = 24;
    let mut span = SpanBasis::new();
    for c in coords {
        span.insert(&sparse_from(c));
    }
    let full = coords.len() <= FULL_CLOSURE_DIM;
    for (i, a) in coords.iter().enumerate() {
        if !full && i >= 6 {
            break;
        }
        for b in coords.iter().skip(i + 1) {
            let br = alg.bracket_coords(a, b);
            if !span.contains(&sparse_from(&br)) {
                return Err(EngineError::Degenerate(
                    "isotropy kernel is not bracket-closed".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Rank of the subalgebra spanned by `basis_coords` (which must be
/// bracket-closed), via generic-element centralizers inside it. The
/// computation is abstract: it never consults the representation.
pub fn subalgebra_rank(
    alg: &AbstractLieAlgebra,
    basis_coords: &[Vec<Rat>],
    seeds: &[u64],
) -> Result<(usize, SampleLog), GenericityError> {
    let d = basis_coords.len();
    if d == 0 {
        return Ok((
            0,
            SampleLog {
                dims: vec![0; seeds.len()],
                agreed_first_try: true,
            },
        ));
    }
    let n = alg.dim();
    let (rank, _, log) = establish_minimum(seeds, |seed| {
        let cs = random_coefficients(seed, d);
        let mut x = vec![Rat::default(); n];
        for (c, basis) in cs.iter().zip(basis_coords) {
            for (xi, bi) in x.iter_mut().zip(basis) {
                *xi += rat(*c) * bi;
            }
        }
        // centralizer of x inside the span: kernel of y -> [x, sum y_a h_a]
        let cols: Vec<RatMatrix> = basis_coords
            .iter()
            .map(|h| RatMatrix::col_from(alg.bracket_coords(&x, h)))
            .collect();
        let refs: Vec<&RatMatrix> = cols.iter().collect();
        let kernel = nullspace(&RatMatrix::hstack(&refs));
        (kernel.len(), ())
    })?;
    Ok((rank, log))
}

/// Dimensions of the derived series of the subalgebra spanned by `coords`:
/// [dim, dim of [h,h], ...] until the dimension stabilizes.
pub fn derived_series_dims(alg: &AbstractLieAlgebra, coords: &[Vec<Rat>]) -> Vec<usize> {
    let mut dims = vec![coords.len()];
    let mut current: Vec<Vec<Rat>> = coords.to_vec();
    loop {
        let mut span = SpanBasis::new();
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for (i, a) in current.iter().enumerate() {
            for b in current.iter().skip(i + 1) {
                let br = alg.bracket_coords(a, b);
                if span.insert(&sparse_from(&br)) {
                    basis.push(br);
                }
            }
        }
        let d = basis.len();
        if d == *dims.last().unwrap() {
            break; // stabilized (a perfect algebra, or zero)
        }
        dims.push(d);
        if d == 0 {
            break;
        }
        current = basis;
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Family;
    use crate::reprkit::{dsum, merge_factors, std_rep, trivial_rep};

    const SEEDS: [u64; 3] = [5, 6, 7];

    #[test]
    fn so3_has_planar_rotation_isotropy() {
        let rep = std_rep(Family::So, 3).unwrap();
        let iso = generic_isotropy(&rep, &SEEDS).unwrap();
        assert_eq!(iso.dim(), 1);
    }

    #[test]
    fn su2_acts_freely_on_generic_spheres() {
        let rep = std_rep(Family::Su, 2).unwrap();
        let iso = generic_isotropy(&rep, &SEEDS).unwrap();
        assert_eq!(iso.dim(), 0);
    }

    #[test]
    fn u2_has_circle_isotropy() {
        let rep = std_rep(Family::U, 2).unwrap();
        let iso = generic_isotropy(&rep, &SEEDS).unwrap();
        assert_eq!(iso.dim(), 1);
    }

    #[test]
    fn trivial_rep_keeps_everything() {
        let rep = trivial_rep(4);
        let iso = generic_isotropy(&rep, &SEEDS).unwrap();
        assert_eq!(iso.dim(), 0); // the zero algebra
    }

    #[test]
    fn shared_double_of_so3_acts_almost_freely() {
        let a = std_rep(Family::So, 3).unwrap();
        let b = std_rep(Family::So, 3).unwrap();
        let rep = merge_factors(&dsum(&a, &b).unwrap(), &[(0, 1)]).unwrap();
        let iso = generic_isotropy(&rep, &SEEDS).unwrap();
        assert_eq!(iso.dim(), 0);
    }

    #[test]
    fn subalgebra_ranks() {
        let rep = std_rep(Family::Su, 3).unwrap();
        let alg = rep.algebra();
        let full: Vec<Vec<Rat>> = (0..alg.dim())
            .map(|i| {
                let mut v = vec![Rat::default(); alg.dim()];
                v[i] = rat(1);
                v
            })
            .collect();
        let (rank, _) = subalgebra_rank(alg, &full, &SEEDS).unwrap();
        assert_eq!(rank, 2);
        assert_eq!(rank, alg.rank_by_factors());
        let (rank0, _) = subalgebra_rank(alg, &[], &SEEDS).unwrap();
        assert_eq!(rank0, 0);
    }

    #[test]
    fn derived_series_of_u2_like_subalgebra() {
        // u(2): derived series 4 -> 3 -> 3 (su(2) is perfect)
        let rep = std_rep(Family::U, 2).unwrap();
        let alg = rep.algebra();
        let full: Vec<Vec<Rat>> = (0..alg.dim())
            .map(|i| {
                let mut v = vec![Rat::default(); alg.dim()];
                v[i] = rat(1);
                v
            })
            .collect();
        assert_eq!(derived_series_dims(alg, &full), vec![4, 3]);
    }
}
