use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, Zero};


use super::Rat;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, super::rat(x));
            }
        }
        m
    }

    pub fn from_rat_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        RatMatrix {
            rows: r,
            cols,
            entries,
        }
    }

    /// Column vector from rational entries.
    pub fn col_from(entries: Vec<Rat>) -> Self {
        let rows = entries.len();
        RatMatrix {
            rows,
            cols: 1,
            entries,
        }
    }

    /// Column vector with integer entries.
    pub fn col_from_ints(entries: &[i64]) -> Self {
        Self::col_from(entries.iter().map(|&x| super::rat(x)).collect())
    }

    /// Standard basis column vector e_i of length n.
    pub fn basis_col(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n, 1);
        v.set(i, 0, Rat::one());
        v
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != -self.get(j, i).clone() {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
    }

    pub fn scale_assign(&mut self, c: &Rat) {
        for a in self.entries.iter_mut() {
            *a *= c;
        }
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        let mut m = self.clone();
        m.scale_assign(c);
        m
    }

    /// self += c * other, touching only the nonzero entries of `other`
    /// (the generators this accumulates are sparse).
    pub fn add_scaled(&mut self, c: &Rat, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Matrix product. Denominators are cleared first so the inner loop
    /// runs on integers, with a machine-word fast path when every entry is
    /// small; this is the single hottest operation in the crate.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let (da, ai) = self.clear_denominators();
        let (db, bi) = other.clear_denominators();
        let n = self.rows;
        let k = self.cols;
        let m = other.cols;
        let den = da * db;
        if let (Some(sa), Some(sb)) = (to_small(&ai), to_small(&bi)) {
            // |accumulated| <= k * max|a| * max|b| < 2^127 is guaranteed by
            // the magnitude bound in to_small
            let mut out = vec![0i128; n * m];
            for i in 0..n {
                for l in 0..k {
                    let a = sa[i * k + l] as i128;
                    if a == 0 {
                        continue;
                    }
                    let brow = &sb[l * m..(l + 1) * m];
                    let orow = &mut out[i * m..(i + 1) * m];
                    for j in 0..m {
                        if brow[j] != 0 {
                            orow[j] += a * brow[j] as i128;
                        }
                    }
                }
            }
            let entries = out
                .into_iter()
                .map(|x| Rat::new(BigInt::from(x), den.clone()))
                .collect();
            return RatMatrix {
                rows: n,
                cols: m,
                entries,
            };
        }
        let mut out = vec![BigInt::zero(); n * m];
        for i in 0..n {
            for l in 0..k {
                let a = &ai[i * k + l];
                if a.is_zero() {
                    continue;
                }
                let brow = &bi[l * m..(l + 1) * m];
                let orow = &mut out[i * m..(i + 1) * m];
                for j in 0..m {
                    if !brow[j].is_zero() {
                        orow[j] += a * &brow[j];
                    }
                }
            }
        }
        let entries = out
            .into_iter()
            .map(|x| Rat::new(x, den.clone()))
            .collect();
        RatMatrix {
            rows: n,
            cols: m,
            entries,
        }
    }

    /// Commutator `self * other - other * self`.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut ab = self.mul(other);
        ab.sub_assign(&other.mul(self));
        ab
    }

    /// `(lcm of denominators, integer entries scaled by it)`.
    pub fn clear_denominators(&self) -> (BigInt, Vec<BigInt>) {
        let mut den = BigInt::one();
        for e in &self.entries {
            let d = e.denom();
            if !(d / num::integer::gcd(den.clone(), d.clone())).is_one() {
                den = num::integer::lcm(den, d.clone());
            }
        }
        let ints = self
            .entries
            .iter()
            .map(|e| e.numer() * (&den / e.denom()))
            .collect();
        (den, ints)
    }

    /// Row-major flattening as a column vector of length rows*cols.
    pub fn flatten(&self) -> Self {
        RatMatrix {
            rows: self.rows * self.cols,
            cols: 1,
            entries: self.entries.clone(),
        }
    }

    /// Inverse of `flatten` for a column vector.
    pub fn reshape(&self, rows: usize, cols: usize) -> Self {
        assert_eq!(self.cols, 1);
        assert_eq!(self.rows, rows * cols);
        RatMatrix {
            rows,
            cols,
            entries: self.entries.clone(),
        }
    }

    /// Horizontal concatenation of column blocks.
    pub fn hstack(blocks: &[&Self]) -> Self {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    m.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation of row blocks.
    pub fn vstack(blocks: &[&Self]) -> Self {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            entries.extend(b.entries.iter().cloned());
        }
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Block diagonal sum.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Kronecker product, index (i,j) ordered with the right factor innermost.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Column `j` as a column vector.
    pub fn col(&self, j: usize) -> Self {
        let mut v = Self::zeros(self.rows, 1);
        for i in 0..self.rows {
            v.set(i, 0, self.get(i, j).clone());
        }
        v
    }

    /// Standard inner product of two column vectors.
    pub fn dot(&self, other: &Self) -> Rat {
        assert_eq!(self.cols, 1);
        assert_eq!(other.cols, 1);
        assert_eq!(self.rows, other.rows);
        let mut acc = Rat::zero();
        for i in 0..self.rows {
            acc += self.get(i, 0) * other.get(i, 0);
        }
        acc
    }

    /// Decompose as `scale * signed permutation` if possible: exactly one
    /// nonzero per row and per column, all of the same absolute value.
    /// Returns `(perm, signs)` with column j mapping to row perm[j] and sign
    /// signs[j]. Zero and non-square matrices return None.
    pub fn as_signed_permutation(&self) -> Option<(Vec<usize>, Vec<i8>)> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let n = self.rows;
        let mut perm = vec![usize::MAX; n];
        let mut signs = vec![0i8; n];
        let mut hit_row = vec![false; n];
        let mut magnitude: Option<Rat> = None;
        for j in 0..n {
            let mut found = None;
            for i in 0..n {
                let e = self.get(i, j);
                if !e.is_zero() {
                    if found.is_some() {
                        return None;
                    }
                    found = Some((i, e));
                }
            }
            let (i, e) = found?;
            if hit_row[i] {
                return None;
            }
            hit_row[i] = true;
            let abs = e.abs();
            match &magnitude {
                None => magnitude = Some(abs),
                Some(m) => {
                    if *m != abs {
                        return None;
                    }
                }
            }
            perm[j] = i;
            signs[j] = if e.is_negative() { -1 } else { 1 };
        }
        Some((perm, signs))
    }
}

/// Convert to i64 entries if every magnitude stays below 2^56 (which keeps
/// i128 accumulation overflow-free for any dimension in use here).
fn to_small(ints: &[BigInt]) -> Option<Vec<i64>> {
    use num::ToPrimitive;
    const BOUND: i64 = 1 << 56;
    let mut out = Vec::with_capacity(ints.len());
    for x in ints {
        let v = x.to_i64()?;
        if v.abs() >= BOUND {
            return None;
        }
        out.push(v);
    }
    Some(out)
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        let mut m = self.clone();
        m.add_assign(rhs);
        m
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        let mut m = self.clone();
        m.sub_assign(rhs);
        m
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.mul(rhs)
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        let mut m = self.clone();
        m.scale_assign(&-Rat::one());
        m
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn product_and_bracket() {
        let a = RatMatrix::from_rows(&[&[0, -1], &[1, 0]]);
        let b = RatMatrix::from_rows(&[&[1, 0], &[0, -1]]);
        let ab = a.mul(&b);
        assert_eq!(ab, RatMatrix::from_rows(&[&[0, 1], &[1, 0]]));
        let br = a.bracket(&a);
        assert!(br.is_zero());
    }

    #[test]
    fn signed_permutation_detection() {
        let a = RatMatrix::from_rows(&[&[0, -1], &[1, 0]]);
        let (perm, signs) = a.as_signed_permutation().unwrap();
        assert_eq!(perm, vec![1, 0]);
        assert_eq!(signs, vec![1, -1]);
        let mut h = a.clone();
        h.scale_assign(&rat(3));
        assert!(h.as_signed_permutation().is_some());
        let not = RatMatrix::from_rows(&[&[1, 1], &[0, 1]]);
        assert!(not.as_signed_permutation().is_none());
    }

    #[test]
    fn kron_dimensions() {
        let a = RatMatrix::identity(2);
        let b = RatMatrix::from_rows(&[&[1, 2, 3]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
    }
}
