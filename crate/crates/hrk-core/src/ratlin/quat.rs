//! Matrices over the rational quaternions and their realifications.
//!
//! Quaternionic representations are carried as quaternion matrices acting on
//! H^n by left multiplication; scalar multiplication acts on the right and
//! commutes with them. Realification uses the interleaved convention
//! (1, i, j, k per coordinate), so the right scalar action is always the
//! same block-diagonal triple `right_quaternion_ops`.

use num::{One, Zero};

use super::complex::{CMatrix, Cplx};
use super::{Rat, RatMatrix};

/// Rational quaternion a + bi + cj + dk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quat {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Quat {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Quat { a, b, c, d }
    }

    pub fn zero() -> Self {
        Quat::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Quat::new(Rat::one(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn i() -> Self {
        Quat::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero())
    }

    pub fn j() -> Self {
        Quat::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn k() -> Self {
        Quat::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn from_complex(z: &Cplx) -> Self {
        Quat::new(z.re.clone(), z.im.clone(), Rat::zero(), Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quat::new(
            self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Quat::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quat::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    pub fn neg(&self) -> Self {
        Quat::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// Complex split q = z + j w with z, w in C(i): z = a+bi, w = c-di.
    pub fn complex_split(&self) -> (Cplx, Cplx) {
        (
            Cplx::new(self.a.clone(), self.b.clone()),
            Cplx::new(self.c.clone(), -self.d.clone()),
        )
    }

    /// 4x4 real matrix of left multiplication by q in the basis (1, i, j, k).
    pub fn left_mult_block(&self) -> RatMatrix {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let rows: Vec<Vec<Rat>> = vec![
            vec![a.clone(), -b.clone(), -c.clone(), -d.clone()],
            vec![b.clone(), a.clone(), -d.clone(), c.clone()],
            vec![c.clone(), d.clone(), a.clone(), -b.clone()],
            vec![d.clone(), -c.clone(), b.clone(), a.clone()],
        ];
        RatMatrix::from_rat_rows(rows, 4)
    }

    /// 4x4 real matrix of right multiplication by q.
    pub fn right_mult_block(&self) -> RatMatrix {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let rows: Vec<Vec<Rat>> = vec![
            vec![a.clone(), -b.clone(), -c.clone(), -d.clone()],
            vec![b.clone(), a.clone(), d.clone(), -c.clone()],
            vec![c.clone(), -d.clone(), a.clone(), b.clone()],
            vec![d.clone(), c.clone(), -b.clone(), a.clone()],
        ];
        RatMatrix::from_rat_rows(rows, 4)
    }
}

/// Dense matrix over the rational quaternions, row-major, acting on H^n by
/// left multiplication (hence commuting with right scalar multiplication).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Quat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Quat::one());
        }
        m
    }

    pub fn from_real(m: &RatMatrix) -> Self {
        let mut q = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                q.set(
                    i,
                    j,
                    Quat::new(m.get(i, j).clone(), Rat::zero(), Rat::zero(), Rat::zero()),
                );
            }
        }
        q
    }

    /// Scalar extension along C ⊂ H: a complex matrix acts H-linearly on
    /// H^n = C^n ⊗_C H.
    pub fn from_complex(m: &CMatrix) -> Self {
        let mut q = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                q.set(i, j, Quat::from_complex(m.get(i, j)));
            }
        }
        q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Quat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Quat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        QMatrix {
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
        QMatrix {
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

    /// Left scalar multiple q * M.
    pub fn scale_left(&self, q: &Quat) -> Self {
        let entries = self.entries.iter().map(|e| q.mul(e)).collect();
        QMatrix {
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

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
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

    /// Realification: quaternionic coordinate l becomes real coordinates
    /// (4l..4l+4) and each entry becomes its left-multiplication block.
    pub fn realify(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(4 * self.rows, 4 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let block = e.left_mult_block();
                for a in 0..4 {
                    for b in 0..4 {
                        let v = block.get(a, b);
                        if !v.is_zero() {
                            m.set(4 * i + a, 4 * j + b, v.clone());
                        }
                    }
                }
            }
        }
        m
    }

    /// The complex 2n x 2n form of a quaternion matrix under H^n = C^n ⊕ j C^n,
    /// written in [u; v] block coordinates: [[Z, -conj(W)], [W, conj(Z)]].
    pub fn complexify(&self) -> CMatrix {
        let n = self.rows;
        assert_eq!(self.cols, n);
        let mut m = CMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for jc in 0..n {
                let (z, w) = self.get(i, jc).complex_split();
                m.set(i, jc, z.clone());
                m.set(i, n + jc, w.conj().neg());
                m.set(n + i, jc, w);
                m.set(n + i, n + jc, z.conj());
            }
        }
        m
    }
}

/// The three right scalar multiplication operators J1 = R_i, J2 = R_j and
/// J3 = J1 J2 on the realification of H^n. They satisfy J^2 = -I, pairwise
/// anticommute, and commute with the realification of every quaternion
/// matrix.
pub fn right_quaternion_ops(n: usize) -> [RatMatrix; 3] {
    let ri = Quat::i().right_mult_block();
    let rj = Quat::j().right_mult_block();
    let blocks_i: Vec<&RatMatrix> = (0..n).map(|_| &ri).collect();
    let blocks_j: Vec<&RatMatrix> = (0..n).map(|_| &rj).collect();
    let j1 = RatMatrix::block_diag(&blocks_i);
    let j2 = RatMatrix::block_diag(&blocks_j);
    let j3 = j1.mul(&j2);
    [j1, j2, j3]
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn quaternion_relations() {
        let i = Quat::i();
        let j = Quat::j();
        let k = Quat::k();
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Quat::one().neg());
    }

    #[test]
    fn right_ops_satisfy_quaternion_relations() {
        let [j1, j2, j3] = right_quaternion_ops(2);
        let minus = RatMatrix::identity(8).scaled(&rat(-1));
        assert_eq!(j1.mul(&j1), minus);
        assert_eq!(j2.mul(&j2), minus);
        assert_eq!(j3.mul(&j3), minus);
        assert_eq!(j1.mul(&j2), j3);
        // anticommutation
        let mut anti = j1.mul(&j2);
        anti.add_assign(&j2.mul(&j1));
        assert!(anti.is_zero());
    }

    #[test]
    fn left_and_right_multiplication_commute() {
        let q = Quat::new(rat(1), rat(2), rat(-1), rat(3));
        let mut m = QMatrix::zeros(1, 1);
        m.set(0, 0, q);
        let real = m.realify();
        for op in right_quaternion_ops(1) {
            assert_eq!(real.mul(&op), op.mul(&real));
        }
    }

    #[test]
    fn skew_hermitian_realifies_skew_symmetric() {
        let mut m = QMatrix::zeros(2, 2);
        m.set(0, 0, Quat::i());
        m.set(0, 1, Quat::new(rat(1), rat(2), rat(3), rat(4)));
        m.set(1, 0, Quat::new(rat(-1), rat(2), rat(3), rat(4)));
        m.set(1, 1, Quat::k());
        assert!(m.is_skew_hermitian());
        assert!(m.realify().is_skew_symmetric());
    }

    #[test]
    fn complexify_is_a_homomorphism_into_skew_hermitians() {
        let mut x = QMatrix::zeros(2, 2);
        x.set(0, 1, Quat::j());
        x.set(1, 0, Quat::j());
        let mut y = QMatrix::zeros(2, 2);
        y.set(0, 0, Quat::i());
        y.set(1, 1, Quat::k());
        assert!(x.is_skew_hermitian() && y.is_skew_hermitian());
        let cx = x.complexify();
        let cy = y.complexify();
        assert!(cx.is_skew_hermitian());
        assert!(cy.is_skew_hermitian());
        assert_eq!(x.bracket(&y).complexify(), cx.bracket(&cy));
    }
}
