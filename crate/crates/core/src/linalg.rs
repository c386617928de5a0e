//! Dense exact linear algebra over a [`Field`].
//!
//! Matrices act on column vectors. Everything is exact, so "rank" and
//! "kernel" mean what they say.

use crate::field::Field;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        let cols = columns.len();
        for c in columns {
            assert_eq!(c.len(), rows);
        }
        Matrix::from_fn(rows, cols, |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        let idx = r * other.cols + c;
                        f.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                f.add_mul_assign(o, self.get(r, c), x);
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled<F: Field<Elem = E>>(&mut self, f: &F, s: &E, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if f.is_zero(s) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            f.add_mul_assign(a, s, b);
        }
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert!(self.is_square());
        let mut t = f.zero();
        for i in 0..self.rows {
            t = f.add(&t, self.get(i, i));
        }
        t
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        let mut s = Subspace::new(self.cols);
        for r in 0..self.rows {
            s.insert(f, self.row(r).to_vec());
        }
        s.dim()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut s = Subspace::new(self.cols);
        for r in 0..self.rows {
            s.insert(f, self.row(r).to_vec());
            if s.dim() == self.cols {
                return Vec::new();
            }
        }
        s.complement_kernel(f)
    }

    /// Basis of the column space.
    pub fn image<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut s = Subspace::new(self.rows);
        for c in 0..self.cols {
            s.insert(f, self.column(c));
        }
        s.basis().to_vec()
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &[E]) -> Option<Vec<E>> {
        assert_eq!(b.len(), self.rows);
        // Row-reduce the augmented matrix [A | b].
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let mut s = Subspace::new(self.cols + 1);
        for r in 0..aug.rows {
            s.insert(f, aug.row(r).to_vec());
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &p) in s.rows.iter().zip(&s.pivots) {
            if p == self.cols {
                return None;
            }
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let mut s = Subspace::new(2 * n);
        for r in 0..n {
            s.insert(f, aug.row(r).to_vec());
        }
        if s.dim() != n || s.pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| s.rows[r][n + c].clone()))
    }

    pub fn is_invertible<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        let mut out = Matrix::identity(f, self.rows);
        for _ in 0..k {
            out = out.mul(f, self);
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum<F: Field<Elem = E>>(f: &F, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

/// A subspace of `K^d` kept in reduced row echelon form.
///
/// Rows are sorted by pivot column and every pivot column is zero outside its
/// row, so membership tests and coordinates are read off directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone> Subspace<E> {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<F: Field<Elem = E>>(f: &F, ambient: usize, vs: impl IntoIterator<Item = Vec<E>>) -> Self {
        let mut s = Subspace::new(ambient);
        for v in vs {
            s.insert(f, v);
        }
        s
    }

    pub fn full<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit(f, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating all pivot columns.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &mut [E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = f.neg(&v[p]);
            for (x, y) in v.iter_mut().zip(row) {
                f.add_mul_assign(x, &c, y);
            }
        }
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` with respect to [`Self::basis`], if `v` lies in the span.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        let coords: Vec<E> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        if w.iter().all(|x| f.is_zero(x)) {
            Some(coords)
        } else {
            None
        }
    }

    /// Adds `v` to the span. Returns `true` if the dimension grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, f: &F, mut v: Vec<E>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.reduce(f, &mut v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = f.neg(&row[p]);
            for (x, y) in row.iter_mut().zip(&v) {
                f.add_mul_assign(x, &c, y);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn extend<F: Field<Elem = E>>(&mut self, f: &F, other: &Self) {
        for v in &other.rows {
            self.insert(f, v.clone());
        }
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        self.rows.iter().all(|v| other.contains(f, v))
    }

    /// Basis of the solution space of `row · x = 0` for every stored row.
    pub fn complement_kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.ambient).filter(|&c| !is_pivot[c]) {
            let mut x = vec![f.zero(); self.ambient];
            x[free] = f.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = f.neg(&row[free]);
            }
            out.push(x);
        }
        out
    }

    /// Vectors completing [`Self::basis`] to a basis of `K^d`, chosen among
    /// the standard unit vectors.
    pub fn unit_complement<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&c| !is_pivot[c])
            .map(|c| unit(f, self.ambient, c))
            .collect()
    }

    pub fn intersection<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        // Kernel of [A | -B] gives the common vectors.
        let a = self.dim();
        let b = other.dim();
        let m = Matrix::from_fn(self.ambient, a + b, |r, c| {
            if c < a {
                self.rows[c][r].clone()
            } else {
                f.neg(&other.rows[c - a][r])
            }
        });
        let mut out = Subspace::new(self.ambient);
        for k in m.kernel(f) {
            let mut v = vec![f.zero(); self.ambient];
            for (c, coef) in k.iter().take(a).enumerate() {
                if f.is_zero(coef) {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&self.rows[c]) {
                    f.add_mul_assign(x, coef, y);
                }
            }
            out.insert(f, v);
        }
        out
    }
}

pub fn unit<F: Field>(f: &F, len: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); len];
    v[i] = f.one();
    v
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

/// `acc += s * v`
pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], s: &F::Elem, v: &[F::Elem]) {
    if f.is_zero(s) {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        f.add_mul_assign(a, s, b);
    }
}

/// Linear combination `Σ coeffs[k] * vs[k]`.
pub fn combine<F: Field>(f: &F, len: usize, coeffs: &[F::Elem], vs: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); len];
    for (c, v) in coeffs.iter().zip(vs) {
        axpy(f, &mut out, c, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rational};
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|&x| Rational.from_i64(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = Rational;
        let m = Matrix::from_rows(2, 3, q(&[1, 2, 3, 2, 4, 6]));
        let k = m.kernel(&f);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&f, &m.apply(&f, v)));
        }
    }

    #[test]
    fn solve_inconsistent_system() {
        let f = Rational;
        let m = Matrix::from_rows(2, 1, q(&[1, 1]));
        assert!(m.solve(&f, &q(&[1, 2])).is_none());
        assert_eq!(m.solve(&f, &q(&[3, 3])).unwrap(), q(&[3]));
    }

    #[test]
    fn inverse_round_trip() {
        let f = Rational;
        let m = Matrix::from_rows(3, 3, q(&[2, 1, 0, 0, 1, 0, 1, 0, 1]));
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(&f, 3));
        let singular = Matrix::from_rows(2, 2, q(&[1, 2, 2, 4]));
        assert!(singular.inverse(&f).is_none());
    }

    #[test]
    fn subspace_coordinates_and_intersection() {
        let f = Rational;
        let s = Subspace::spanned_by(&f, 3, [q(&[1, 1, 0]), q(&[0, 1, 1])]);
        let c = s.coordinates(&f, &q(&[1, 2, 1])).unwrap();
        let back = combine(&f, 3, &c, s.basis());
        assert_eq!(back, q(&[1, 2, 1]));
        assert!(s.coordinates(&f, &q(&[1, 0, 0])).is_none());
        let t = Subspace::spanned_by(&f, 3, [q(&[1, 0, 0]), q(&[0, 0, 1])]);
        let i = s.intersection(&f, &t);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&f, &q(&[1, 0, -1])));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in prop::collection::vec(-3i64..=3, 12)) {
            let f = PrimeField::new(101).unwrap();
            let m = Matrix::from_rows(3, 4, entries.iter().map(|&x| f.from_i64(x)).collect());
            let r = m.rank(&f);
            let k = m.kernel(&f);
            prop_assert_eq!(r + k.len(), 4);
            for v in &k {
                prop_assert!(is_zero_vec(&f, &m.apply(&f, v)));
            }
            prop_assert_eq!(m.transpose().rank(&f), r);
        }
    }
}
