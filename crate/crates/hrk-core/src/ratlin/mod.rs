//! Exact rational dense linear algebra.
//!
//! Everything downstream (Lie algebra construction, isotropy kernels,
//! commutants) reduces to rank / nullspace / membership questions over Q.
//! All pivoting is canonical (leftmost nonzero column, first usable row),
//! so every output is reproducible bit for bit.

mod elim;
mod matrix;
pub mod complex;
pub mod quat;
pub mod sparse;

pub use elim::{nullspace, rank, rref, solve_membership};
pub use matrix::RatMatrix;

use num::BigRational;

/// Exact rational scalar. `num::BigRational` keeps values in canonical form
/// (reduced, positive denominator), which is exactly the invariant we need.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational from a numerator/denominator pair. Panics on zero denominator.
pub fn ratq(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(num.into(), den.into())
}

/// Scale a rational vector to primitive integer form: integer entries with
/// content one, first nonzero entry positive. Deterministic, and much
/// kinder to downstream exact arithmetic than raw elimination output.
pub fn primitive_integer_form(v: &[Rat]) -> Vec<Rat> {
    use num::bigint::BigInt;
    use num::{One, Signed, Zero};
    let mut den = BigInt::one();
    for e in v {
        den = num::integer::lcm(den, e.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|e| e.numer() * (&den / e.denom())).collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = num::integer::gcd(content, x.clone());
    }
    if content.is_zero() {
        return v.to_vec();
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| if x.is_negative() { -1 } else { 1 })
        .unwrap_or(1);
    let content = content * BigInt::from(sign);
    ints.into_iter()
        .map(|x| Rat::from_integer(x / &content))
        .collect()
}

/// Pairwise size-reduction of an integer lattice basis (Lagrange style):
/// repeatedly subtract rounded projections until stable. Exact and
/// deterministic; elimination bases with minor-sized entries typically
/// collapse to short vectors, which keeps all downstream arithmetic on
/// machine words.
pub fn size_reduce_rows(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    use num::bigint::BigInt;
    use num::{Integer, One, Zero};
    if vectors.is_empty() {
        return Vec::new();
    }
    let dim = vectors[0].len();
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let mut den = BigInt::one();
            for e in v {
                den = num::integer::lcm(den, e.denom().clone());
            }
            v.iter().map(|e| e.numer() * (&den / e.denom())).collect()
        })
        .collect();
    let dot = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        let mut acc = BigInt::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        acc
    };
    // q = nearest integer to a/b for b > 0
    let round_div = |a: &BigInt, b: &BigInt| -> BigInt {
        let two_b: BigInt = b * 2;
        let num: BigInt = a * 2 + b;
        num.div_floor(&two_b)
    };
    for _pass in 0..48 {
        let mut norms: Vec<BigInt> = rows.iter().map(|r| dot(r, r)).collect();
        // process against shorter vectors first
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by(|&i, &j| norms[i].cmp(&norms[j]).then(rows[i].cmp(&rows[j])));
        let mut changed = false;
        for &i in &order {
            if norms[i].is_zero() {
                continue;
            }
            for j in 0..rows.len() {
                if i == j {
                    continue;
                }
                let proj = dot(&rows[j], &rows[i]);
                if proj.is_zero() {
                    continue;
                }
                let q = round_div(&proj, &norms[i]);
                if q.is_zero() {
                    continue;
                }
                for k in 0..dim {
                    let v = &rows[j][k] - &q * &rows[i][k];
                    rows[j][k] = v;
                }
                norms[j] = dot(&rows[j], &rows[j]);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Vec<Rat>> = rows
        .into_iter()
        .map(|r| {
            let rats: Vec<Rat> = r.into_iter().map(Rat::from_integer).collect();
            primitive_integer_form(&rats)
        })
        .collect();
    out.sort();
    out
}

/// Basis of the space of all `X` commuting with every matrix in `mats`
/// (all square of side `size`). The result always contains the identity.
///
/// Each condition `XA - AX = 0` is linear in the entries of `X`; we stack
/// the conditions and take the common kernel. Generators that are (scaled)
/// signed permutation matrices get a cheap orbit-merging fast path, which is
/// what makes the 64-dimensional spin modules tractable.
pub fn commutant(mats: &[RatMatrix], size: usize) -> Vec<RatMatrix> {
    for a in mats {
        assert_eq!(a.rows(), size, "commutant: size mismatch");
        assert_eq!(a.cols(), size, "commutant: not square");
    }
    if mats.iter().all(|a| a.as_signed_permutation().is_some()) {
        return commutant_signed_perms(mats, size);
    }
    let n2 = size * size;
    // One Sylvester block per generator: row (i,j) of block says
    // sum_l X[i,l] A[l,j] - A[i,l] X[l,j] = 0, unknowns X row-major.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(mats.len() * n2);
    for a in mats {
        for i in 0..size {
            for j in 0..size {
                let mut row = vec![Rat::default(); n2];
                for l in 0..size {
                    row[i * size + l] += a.get(l, j);
                    row[l * size + j] -= a.get(i, l);
                }
                rows.push(row);
            }
        }
    }
    let system = RatMatrix::from_rat_rows(rows, n2);
    nullspace(&system)
        .into_iter()
        .map(|v| v.reshape(size, size))
        .collect()
}

/// Commutant fast path when every generator is a nonzero scalar times a
/// signed permutation. `[X, sP] = 0` forces `X[σ(i), σ(j)] = s_i s_j⁻¹-free`
/// sign-linked equality of entries, so the solution space is spanned by the
/// consistent orbits of entry positions.
fn commutant_signed_perms(mats: &[RatMatrix], size: usize) -> Vec<RatMatrix> {
    let n2 = size * size;
    // Union-find over entry positions with a sign relative to the root.
    let mut parent: Vec<usize> = (0..n2).collect();
    let mut sign: Vec<i8> = vec![1; n2]; // value = sign * value_at_root
    let mut dead: Vec<bool> = vec![false; n2];

    fn find(parent: &mut Vec<usize>, sign: &mut Vec<i8>, x: usize) -> (usize, i8) {
        if parent[x] == x {
            return (x, 1);
        }
        let (root, s) = find(parent, sign, parent[x]);
        parent[x] = root;
        sign[x] *= s;
        (root, sign[x])
    }

    let union = |parent: &mut Vec<usize>, sign: &mut Vec<i8>, dead: &mut Vec<bool>, a: usize, b: usize, rel: i8| {
        let (ra, sa) = find(parent, sign, a);
        let (rb, sb) = find(parent, sign, b);
        if ra == rb {
            if sa != rel * sb {
                dead[ra] = true;
            }
        } else {
            parent[rb] = ra;
            sign[rb] = sa * rel * sb;
            if dead[rb] {
                dead[ra] = true;
            }
        }
    };

    for a in mats {
        let (perm, signs) = a.as_signed_permutation().expect("checked by caller");
        // X[perm[i], perm[j]] * s_i s_j = X[i, j] ... derived from X A = A X
        // with A[perm[i], i] = s_i * scale; the scale cancels.
        for i in 0..size {
            for j in 0..size {
                let p = perm[i] * size + perm[j];
                let q = i * size + j;
                union(&mut parent, &mut sign, &mut dead, q, p, signs[i] * signs[j]);
            }
        }
    }

    let mut roots: Vec<usize> = Vec::new();
    for x in 0..n2 {
        let (r, _) = find(&mut parent, &mut sign, x);
        if !dead[r] && r == x {
            roots.push(x);
        }
    }
    let mut basis = Vec::with_capacity(roots.len());
    for r in roots {
        let mut m = RatMatrix::zeros(size, size);
        for x in 0..n2 {
            let (root, s) = find(&mut parent, &mut sign, x);
            if root == r {
                m.set(x / size, x % size, rat(s as i64));
            }
        }
        basis.push(m);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutant_of_nothing_is_everything() {
        let basis = commutant(&[], 2);
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn commutant_of_full_matrix_algebra_is_scalars() {
        // all elementary matrices of size 3
        let mut mats = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let mut m = RatMatrix::zeros(3, 3);
                m.set(i, j, rat(1));
                mats.push(m);
            }
        }
        let basis = commutant(&mats, 3);
        assert_eq!(basis.len(), 1);
        // the span contains the identity
        assert!(solve_membership(&RatMatrix::identity(3).flatten(), &[basis[0].flatten()]).is_some());
    }

    #[test]
    fn commutant_of_complex_structure_on_r2() {
        // multiplication by i on C = R^2
        let j = RatMatrix::from_rows(&[&[0, -1], &[1, 0]]);
        let basis = commutant(&[j], 2);
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn signed_perm_fast_path_agrees_with_dense() {
        let j = RatMatrix::from_rows(&[&[0, -1], &[1, 0]]);
        let f = RatMatrix::from_rows(&[&[0, 1], &[1, 0]]);
        let dense_sized: Vec<RatMatrix> = vec![j.clone(), f.clone()];
        let fast = commutant(&dense_sized, 2);
        // force the dense path with a non-permutation generator added: scale
        let mut half = j.clone();
        half.scale_assign(&ratq(1, 2));
        let mut sum = f.clone();
        sum.add_assign(&half);
        // {j, f} dense comparison: build via generic machinery on a copy that
        // defeats the fast path detection (sum is not a signed permutation).
        let dense = commutant(&[j.clone(), f.clone(), sum.clone()], 2);
        // sum is in span{j,f} up to the 1/2, so the commutant is the same.
        assert_eq!(fast.len(), dense.len());
    }
}
