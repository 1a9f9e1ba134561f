//! Gaussian elimination over Q.
//!
//! `rank` runs fraction-free (Bareiss) elimination on a denominator-cleared
//! integer copy, which keeps intermediate coefficients under control.
//! `rref`/`nullspace` run ordinary rational reduction; the reduced echelon
//! form is unique, so the kernel basis extracted from it is canonical.

use num::bigint::BigInt;
use num::{One, Zero};

use super::{Rat, RatMatrix};

/// Rank over the rationals via fraction-free elimination with canonical
/// pivoting (leftmost nonzero column, first usable row).
pub fn rank(m: &RatMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    if rows == 0 || cols == 0 {
        return 0;
    }
    let (_, ints) = m.clear_denominators();
    let mut a: Vec<BigInt> = ints;
    let mut prev = BigInt::one();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let found = (pivot_row..rows).find(|&r| !a[r * cols + col].is_zero());
        let Some(r) = found else { continue };
        if r != pivot_row {
            for j in 0..cols {
                a.swap(r * cols + j, pivot_row * cols + j);
            }
        }
        let pivot = a[pivot_row * cols + col].clone();
        for r2 in pivot_row + 1..rows {
            let lead = a[r2 * cols + col].clone();
            for j in 0..cols {
                let v = &a[r2 * cols + j] * &pivot - &lead * &a[pivot_row * cols + j];
                a[r2 * cols + j] = &v / &prev;
            }
        }
        prev = pivot;
        pivot_row += 1;
    }
    pivot_row
}

/// Reduced row echelon form plus the list of pivot columns.
///
/// The elimination itself is fraction-free: rows are cleared to integers,
/// updated by cross-multiplication, and stripped of their content after
/// each step, which keeps coefficients small. Rows are divided by their
/// pivots only at the end, so the output is the unique rational RREF.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    // integer rows, content-stripped
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row: Vec<Rat> = (0..cols).map(|j| m.get(i, j).clone()).collect();
            let mut den = BigInt::one();
            for e in &row {
                den = num::integer::lcm(den, e.denom().clone());
            }
            let mut ints: Vec<BigInt> =
                row.iter().map(|e| e.numer() * (&den / e.denom())).collect();
            strip_content(&mut ints);
            ints
        })
        .collect();
    fn strip_content(row: &mut [BigInt]) {
        use num::Signed;
        let mut content = BigInt::zero();
        for x in row.iter() {
            if !x.is_zero() {
                content = num::integer::gcd(content, x.abs());
                if content.is_one() {
                    return;
                }
            }
        }
        if content.is_zero() || content.is_one() {
            return;
        }
        for x in row.iter_mut() {
            *x = &*x / &content;
        }
    }
    // fraction-free Gauss-Jordan (Bareiss): every update divides exactly by
    // the previous pivot, so entries stay minor-sized
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if pr >= rows {
            break;
        }
        let found = (pr..rows).find(|&r| !a[r][col].is_zero());
        let Some(r) = found else { continue };
        a.swap(r, pr);
        let p = a[pr][col].clone();
        for r2 in 0..rows {
            if r2 == pr {
                continue;
            }
            let lead = a[r2][col].clone();
            if lead.is_zero() {
                // still rescale to keep the uniform pivot invariant
                for j in 0..cols {
                    if !a[r2][j].is_zero() {
                        let v = &a[r2][j] * &p;
                        a[r2][j] = &v / &prev;
                    }
                }
                continue;
            }
            for j in 0..cols {
                let v = &a[r2][j] * &p - &lead * &a[pr][j];
                a[r2][j] = &v / &prev;
            }
        }
        prev = p;
        pivots.push(col);
        pr += 1;
    }
    // rational normalization: pivot rows become monic
    let mut out = RatMatrix::zeros(rows, cols);
    for (i, &p) in pivots.iter().enumerate() {
        let pivot = a[i][p].clone();
        for j in 0..cols {
            if !a[i][j].is_zero() {
                out.set(i, j, Rat::new(a[i][j].clone(), pivot.clone()));
            }
        }
    }
    (out, pivots)
}

/// Canonical kernel basis: one column vector per free column, with 1 in the
/// free position and the negated reduced column in the pivot positions.
/// The zero (or empty) matrix returns the standard basis of R^cols.
pub fn nullspace(m: &RatMatrix) -> Vec<RatMatrix> {
    let cols = m.cols();
    if m.rows() == 0 {
        return (0..cols).map(|j| RatMatrix::basis_col(cols, j)).collect();
    }
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = RatMatrix::zeros(cols, 1);
        v.set(free, 0, Rat::one());
        for (i, &p) in pivots.iter().enumerate() {
            v.set(p, 0, -r.get(i, free).clone());
        }
        basis.push(v);
    }
    basis
}

/// Express column vector `v` in the span of `basis` (column vectors of equal
/// length). Returns the coefficient list, or None if `v` is not in the span.
/// Free coefficients (dependent basis vectors) are set to zero.
pub fn solve_membership(v: &RatMatrix, basis: &[RatMatrix]) -> Option<Vec<Rat>> {
    let n = v.rows();
    assert_eq!(v.cols(), 1);
    if basis.is_empty() {
        return if v.is_zero() { Some(Vec::new()) } else { None };
    }
    for b in basis {
        assert_eq!(b.rows(), n, "solve_membership: length mismatch");
        assert_eq!(b.cols(), 1);
    }
    let mut cols: Vec<&RatMatrix> = basis.iter().collect();
    cols.push(v);
    let aug = RatMatrix::hstack(&cols);
    let (r, pivots) = rref(&aug);
    // inconsistent iff the last column is a pivot
    if pivots.last() == Some(&basis.len()) {
        return None;
    }
    let mut coeffs = vec![Rat::zero(); basis.len()];
    for (i, &p) in pivots.iter().enumerate() {
        coeffs[p] = r.get(i, basis.len()).clone();
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    /// Straightforward rational Gauss-Jordan, used as an oracle for the
    /// fraction-free implementation.
    fn naive_rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
        let rows = m.rows();
        let cols = m.cols();
        let mut a = m.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..cols {
            if pr >= rows {
                break;
            }
            let Some(r) = (pr..rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            for j in 0..cols {
                let x = a.get(r, j).clone();
                let y = a.get(pr, j).clone();
                a.set(r, j, y);
                a.set(pr, j, x);
            }
            let inv = Rat::one() / a.get(pr, col).clone();
            for j in 0..cols {
                let v = a.get(pr, j) * &inv;
                a.set(pr, j, v);
            }
            for r2 in 0..rows {
                if r2 == pr || a.get(r2, col).is_zero() {
                    continue;
                }
                let f = a.get(r2, col).clone();
                for j in 0..cols {
                    let v = a.get(r2, j) - &(a.get(pr, j) * &f);
                    a.set(r2, j, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (a, pivots)
    }

    #[test]
    fn fraction_free_rref_matches_naive_gauss_jordan() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..60 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let mut m = RatMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    if rng.gen_bool(0.7) {
                        m.set(i, j, super::super::ratq(rng.gen_range(-6..=6), rng.gen_range(1..=3)));
                    }
                }
            }
            let (fast, piv_fast) = rref(&m);
            let (slow, piv_slow) = naive_rref(&m);
            assert_eq!(piv_fast, piv_slow);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(rank(&RatMatrix::identity(4)), 4);
        assert_eq!(rank(&RatMatrix::zeros(3, 5)), 0);
        assert_eq!(rank(&RatMatrix::from_rows(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_identity_is_empty() {
        assert!(nullspace(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn nullspace_zero_matrix_is_standard_basis() {
        let ns = nullspace(&RatMatrix::zeros(2, 3));
        assert_eq!(ns.len(), 3);
        for (j, v) in ns.iter().enumerate() {
            assert_eq!(v, &RatMatrix::basis_col(3, j));
        }
    }

    #[test]
    fn nullspace_hand_elimination_case() {
        // [[1,1,0],[0,0,1]] has kernel spanned by (1,-1,0); our canonical
        // form puts 1 at the free column (column 1): (-1, 1, 0).
        let m = RatMatrix::from_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(*v.get(0, 0), rat(-1));
        assert_eq!(*v.get(1, 0), rat(1));
        assert_eq!(*v.get(2, 0), rat(0));
        assert!(m.mul(v).is_zero());
        assert_eq!(rank(&m) + ns.len(), m.cols());
    }

    #[test]
    fn membership_basics() {
        let b0 = RatMatrix::col_from_ints(&[1, 0, 2]);
        let b1 = RatMatrix::col_from_ints(&[0, 1, 1]);
        let coeffs = solve_membership(&b0, &[b0.clone(), b1.clone()]).unwrap();
        assert_eq!(coeffs, vec![rat(1), rat(0)]);
        let zero = RatMatrix::zeros(3, 1);
        assert_eq!(
            solve_membership(&zero, &[b0.clone(), b1.clone()]).unwrap(),
            vec![rat(0), rat(0)]
        );
        // a vector orthogonal to a 1-dim span is not in it
        let v = RatMatrix::col_from_ints(&[0, 0, 1]);
        assert!(solve_membership(&v, &[b1]).is_none());
    }
}
