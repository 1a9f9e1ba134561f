//! Matrices over the Gaussian rationals and their realifications.
//!
//! Complex representations are carried as genuine complex matrices so that
//! exterior/symmetric powers and tensor products can be formed at the
//! complex level, then realified with the fixed interleaved convention
//! (x1, y1, x2, y2, ...). Realification of a skew-Hermitian matrix is
//! skew-symmetric, which is what keeps every representation orthogonal.

use num::{One, Zero};

use super::{rat, Rat, RatMatrix};

/// Gaussian rational scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cplx {
    pub re: Rat,
    pub im: Rat,
}

impl Cplx {
    pub fn new(re: Rat, im: Rat) -> Self {
        Cplx { re, im }
    }

    pub fn zero() -> Self {
        Cplx::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Cplx::new(Rat::one(), Rat::zero())
    }

    pub fn i() -> Self {
        Cplx::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Cplx::new(rat(n), Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Cplx::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Cplx::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Cplx::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn neg(&self) -> Self {
        Cplx::new(-self.re.clone(), -self.im.clone())
    }

    /// |z|^2, a rational.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero");
        Cplx::new(&self.re / &n, -(&self.im / &n))
    }
}

/// A Gaussian rational of the given norm, if one exists. Norms of Gaussian
/// rationals are exactly the rationals p/q with p*q a sum of two squares.
/// Used to rescale orthogonal bases to unit Gram, keeping restricted
/// representations exactly skew-Hermitian.
pub fn gaussian_of_norm(n: &Rat) -> Option<Cplx> {
    if n.is_zero() {
        return Some(Cplx::zero());
    }
    let p = n.numer().clone();
    let q = n.denom().clone();
    let target = &p * &q; // want a^2 + b^2 = p*q, result (a + bi)/q
    let t: u64 = target.to_string().parse().ok()?;
    let mut a = 0u64;
    while a * a <= t {
        let rem = t - a * a;
        let b = (rem as f64).sqrt() as u64;
        for bb in b.saturating_sub(1)..=b + 1 {
            if a * a + bb * bb == t {
                let den = Rat::from_integer(q);
                return Some(Cplx::new(
                    Rat::from_integer(a.into()) / den.clone(),
                    Rat::from_integer(bb.into()) / den,
                ));
            }
        }
        a += 1;
    }
    None
}

/// Dense matrix over the Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cplx>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            entries: vec![Cplx::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cplx::one());
        }
        m
    }

    /// i times the identity: the center generator of u(n).
    pub fn i_identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cplx::i());
        }
        m
    }

    pub fn from_real(m: &RatMatrix) -> Self {
        let mut c = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                c.set(i, j, Cplx::new(m.get(i, j).clone(), Rat::zero()));
            }
        }
        c
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cplx {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cplx) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, c: &Cplx) -> Self {
        let entries = self.entries.iter().map(|a| a.mul(c)).collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        let v = m.get(i, j).add(&a.mul(b));
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn conj(&self) -> Self {
        let entries = self.entries.iter().map(|a| a.conj()).collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).conj());
            }
        }
        m
    }

    pub fn is_skew_hermitian(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != self.get(j, i).conj().neg() {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> Cplx {
        assert_eq!(self.rows, self.cols);
        let mut t = Cplx::zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn kron(&self, o: &Self) -> Self {
        let mut m = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            m.set(i * o.rows + k, j * o.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        m
    }

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

    /// Hermitian inner product of column vectors: conj(self) . other.
    pub fn hdot(&self, o: &Self) -> Cplx {
        assert_eq!(self.cols, 1);
        assert_eq!(o.cols, 1);
        assert_eq!(self.rows, o.rows);
        let mut acc = Cplx::zero();
        for i in 0..self.rows {
            acc = acc.add(&self.get(i, 0).conj().mul(o.get(i, 0)));
        }
        acc
    }

    pub fn col(&self, j: usize) -> Self {
        let mut v = Self::zeros(self.rows, 1);
        for i in 0..self.rows {
            v.set(i, 0, self.get(i, j).clone());
        }
        v
    }

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

    /// Realification with the interleaved convention: complex coordinate l
    /// becomes real coordinates (2l, 2l+1) and the entry a+bi becomes the
    /// block [[a, -b], [b, a]].
    pub fn realify(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(2 * self.rows, 2 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                m.set(2 * i, 2 * j, e.re.clone());
                m.set(2 * i, 2 * j + 1, -e.im.clone());
                m.set(2 * i + 1, 2 * j, e.im.clone());
                m.set(2 * i + 1, 2 * j + 1, e.re.clone());
            }
        }
        m
    }

    /// The standard complex structure on R^{2n}: realify(i * I_n).
    pub fn standard_j(n: usize) -> RatMatrix {
        Self::i_identity(n).realify()
    }
}

/// Induced action on the k-th exterior power of C^n. Basis: k-subsets of
/// {0..n-1} in lexicographic order.
pub fn wedge_power(x: &CMatrix, k: usize) -> CMatrix {
    let n = x.rows();
    assert_eq!(x.cols(), n);
    assert!(k >= 1 && k <= n, "wedge degree out of range");
    let subsets = k_subsets(n, k);
    let index: std::collections::BTreeMap<Vec<usize>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let d = subsets.len();
    let mut m = CMatrix::zeros(d, d);
    for (si, s) in subsets.iter().enumerate() {
        for (pos, &elem) in s.iter().enumerate() {
            for t in 0..n {
                let c = x.get(t, elem);
                if c.is_zero() {
                    continue;
                }
                // replace s[pos] by t, skip if duplicated, sort and sign
                if s.iter().any(|&u| u == t && u != elem) {
                    continue;
                }
                let mut target: Vec<usize> = s.clone();
                target[pos] = t;
                let (sorted, sign) = sort_with_sign(target);
                let ti = index[&sorted];
                let signed = if sign < 0 { c.neg() } else { c.clone() };
                let v = m.get(ti, si).add(&signed);
                m.set(ti, si, v);
            }
        }
    }
    m
}

/// Induced action on the symmetric square of C^n, in the orthonormalized
/// basis { (1+i)/2 * e_i⊙e_i } ∪ { e_i⊙e_j : i < j }. The Gaussian factor
/// makes the invariant Hermitian form the identity in this basis, so images
/// of skew-Hermitian matrices stay exactly skew-Hermitian.
pub fn sym_square(x: &CMatrix) -> CMatrix {
    let n = x.rows();
    assert_eq!(x.cols(), n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let index: std::collections::BTreeMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, i))
        .collect();
    let d = pairs.len();
    // raw action in the monomial basis e_i⊙e_j
    let mut raw = CMatrix::zeros(d, d);
    for (si, &(i, j)) in pairs.iter().enumerate() {
        for t in 0..n {
            let c = x.get(t, i);
            if !c.is_zero() {
                let key = (t.min(j), t.max(j));
                let ti = index[&key];
                let v = raw.get(ti, si).add(c);
                raw.set(ti, si, v);
            }
            let c = x.get(t, j);
            if !c.is_zero() {
                let key = (t.min(i), t.max(i));
                let ti = index[&key];
                let v = raw.get(ti, si).add(c);
                raw.set(ti, si, v);
            }
        }
    }
    // conjugate by the diagonal rescaling D: e_ii -> (1+i)/2 e_ii.
    // new matrix = D^{-1} raw D.
    let lam = Cplx::new(super::ratq(1, 2), super::ratq(1, 2)); // (1+i)/2, norm 1/2
    let lam_inv = lam.inv();
    let mut m = raw;
    for (si, &(i, j)) in pairs.iter().enumerate() {
        if i == j {
            // column si scaled by lam
            for r in 0..d {
                let v = m.get(r, si).mul(&lam);
                m.set(r, si, v);
            }
        }
    }
    for (ti, &(i, j)) in pairs.iter().enumerate() {
        if i == j {
            for c in 0..d {
                let v = m.get(ti, c).mul(&lam_inv);
                m.set(ti, c, v);
            }
        }
    }
    m
}

/// All k-subsets of {0..n-1} in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Sort an index tuple, returning the permutation sign. Assumes no repeats.
pub fn sort_with_sign(mut v: Vec<usize>) -> (Vec<usize>, i32) {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realify_of_i_squares_to_minus_one() {
        let j = CMatrix::standard_j(3);
        let j2 = j.mul(&j);
        let mut minus = RatMatrix::identity(6);
        minus.scale_assign(&rat(-1));
        assert_eq!(j2, minus);
    }

    #[test]
    fn skew_hermitian_realifies_skew_symmetric() {
        let mut m = CMatrix::zeros(2, 2);
        m.set(0, 0, Cplx::i());
        m.set(0, 1, Cplx::new(rat(1), rat(2)));
        m.set(1, 0, Cplx::new(rat(-1), rat(2)));
        m.set(1, 1, Cplx::i().neg());
        assert!(m.is_skew_hermitian());
        assert!(m.realify().is_skew_symmetric());
    }

    #[test]
    fn wedge_degree_counts() {
        let x = CMatrix::identity(6);
        let w = wedge_power(&x, 3);
        assert_eq!(w.rows(), 20);
        // identity acts on wedge^3 as 3 * identity (derivation action)
        for i in 0..20 {
            assert_eq!(*w.get(i, i), Cplx::from_int(3));
        }
    }

    #[test]
    fn sym_square_of_skew_hermitian_is_skew_hermitian() {
        // generator of su(2): off-diagonal real skew
        let mut x = CMatrix::zeros(2, 2);
        x.set(0, 1, Cplx::from_int(-1));
        x.set(1, 0, Cplx::from_int(1));
        let s = sym_square(&x);
        assert_eq!(s.rows(), 3);
        assert!(s.is_skew_hermitian(), "{:?}", s);
        let mut y = CMatrix::zeros(2, 2);
        y.set(0, 1, Cplx::i());
        y.set(1, 0, Cplx::i());
        assert!(sym_square(&y).is_skew_hermitian());
        // homomorphism: sym([x,y]) = [sym x, sym y]
        assert_eq!(sym_square(&x.bracket(&y)), sym_square(&x).bracket(&sym_square(&y)));
    }

    #[test]
    fn gaussian_norms() {
        assert_eq!(gaussian_of_norm(&rat(2)).unwrap().norm(), rat(2));
        assert_eq!(gaussian_of_norm(&rat(5)).unwrap().norm(), rat(5));
        assert_eq!(gaussian_of_norm(&super::super::ratq(1, 2)).unwrap().norm(), super::super::ratq(1, 2));
        assert!(gaussian_of_norm(&rat(3)).is_none());
    }
}
