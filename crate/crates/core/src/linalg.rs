//! Dense exact linear algebra: matrices, rank, kernels and linear solves.
//!
//! Two independent elimination routines are provided. [`rank`] runs
//! fraction-free (Bareiss) elimination on integer-scaled rows, and
//! [`rank_gauss`] runs Gauss–Jordan reduction over the field. Kernels and
//! solutions come from the reduced row echelon form.

use std::fmt;

use crate::scalar::Scalar;

/// A dense row-major matrix. Linear maps act on column vectors, so a map
/// `k^n -> k^m` is an `m x n` matrix whose `j`-th column is the image of `e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn scalar(n: usize, s: T) -> Self {
        Self::identity(n).scale(&s)
    }

    /// Builds a matrix from a row-major entry list. Panics when the length
    /// disagrees with the shape.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows x cols");
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Self { rows: r, cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length must equal row count");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_i64(x)).collect()).collect(), cols)
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shapes must agree");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts must agree");
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Evaluates the polynomial `Σ coeffs[k] · self^k`.
    pub fn polynomial(&self, coeffs: &[T]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        let mut power = Self::identity(self.rows);
        for c in coeffs {
            out = out.add(&power.scale(c));
            power = power.mul(self);
        }
        out
    }
}

/// Rank by fraction-free elimination. Each row is first scaled to integer
/// entries, after which every intermediate entry is a minor of the input and
/// the divisions by the previous pivot are exact.
pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    let mut a: Vec<Vec<T>> = m
        .to_rows()
        .into_iter()
        .map(|row| {
            let l = T::denominator_lcm(&row);
            row.into_iter().map(|x| x * l.clone()).collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone()) / prev.clone();
                a[i][j] = v;
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form over the field, with the pivot columns.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = T::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                if !a[r][j].is_zero() {
                    let v = a[i][j].clone() - f.clone() * a[r][j].clone();
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix::from_rows(a, cols), pivots)
}

/// Rank by Gauss–Jordan reduction; independent of [`rank`].
pub fn rank_gauss<T: Scalar>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// A basis of the kernel, as the columns of the returned `cols x nullity` matrix.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let columns: Vec<Vec<T>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect();
    Matrix::from_columns(n, &columns)
}

/// Some `x` with `a · x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(b.len(), a.rows(), "right-hand side length must equal row count");
    let aug = a.hstack(&Matrix::from_columns(a.rows(), &[b.to_vec()]));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![T::zero(); a.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, a.cols()).clone();
    }
    Some(x)
}

/// The inverse of a square matrix, or `None` when it is singular.
pub fn inverse<T: Scalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    assert!(m.is_square(), "only square matrices have inverses");
    let n = m.rows();
    let (r, pivots) = rref(&m.hstack(&Matrix::identity(n)));
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return None;
    }
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, r.get(i, n + j).clone());
        }
    }
    Some(out)
}

/// True when `v` lies in the column span of `m`.
pub fn in_column_span<T: Scalar>(m: &Matrix<T>, v: &[T]) -> bool {
    solve(m, v).is_some()
}

/// Columns of `candidates` that extend a basis of the span of `base`,
/// chosen greedily in order. Used to pick cohomology representatives.
pub fn complement_columns<T: Scalar>(base: &Matrix<T>, candidates: &Matrix<T>) -> Vec<Vec<T>> {
    let mut span = base.clone();
    let mut current = rank_gauss(&span);
    let mut out = Vec::new();
    for j in 0..candidates.cols() {
        let c = candidates.column(j);
        let next = span.hstack(&Matrix::from_columns(span.rows(), std::slice::from_ref(&c)));
        let r = rank_gauss(&next);
        if r > current {
            span = next;
            current = r;
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigRational, Zero};
    use proptest::prelude::*;

    type Q = BigRational;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_i64_rows(rows)
    }

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn inverse_examples() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(inverse(&Matrix::<Q>::identity(0)), Some(Matrix::identity(0)));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Q>::identity(2)), 2);
        assert_eq!(rank(&Matrix::<Q>::zeros(2, 2)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_gauss(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::<Q>::identity(2)).cols(), 0);
        let k = kernel_basis(&m(&[&[1, 0]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![q(0), q(1)]);
        let a = m(&[&[1, 2], &[2, 4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert_eq!(v[0].clone() * q(-1), v[1].clone() * q(2));
        assert!(a.apply(&v).iter().all(|x| x == &q(0)));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve(&Matrix::<Q>::identity(2), &[q(3), q(5)]), Some(vec![q(3), q(5)]));
        assert_eq!(solve(&Matrix::<Q>::zeros(2, 2), &[q(0), q(0)]), Some(vec![q(0), q(0)]));
        assert_eq!(solve(&m(&[&[1, 2], &[2, 4]]), &[q(1), q(3)]), None);
    }

    #[test]
    fn empty_shapes() {
        let z = Matrix::<Q>::zeros(0, 3);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_basis(&z).cols(), 3);
        let z = Matrix::<Q>::zeros(3, 0);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_basis(&z).cols(), 0);
        assert_eq!(solve(&z, &[q(0), q(0), q(0)]), Some(vec![]));
        assert_eq!(solve(&z, &[q(0), q(1), q(0)]), None);
    }

    #[test]
    fn bareiss_keeps_integer_intermediates_exact() {
        // A Hilbert-like matrix with fractional entries is full rank.
        let h = Matrix::from_rows(
            (1..=4).map(|i| (1..=4).map(|j| Q::new(1.into(), (i + j - 1).into())).collect()).collect(),
            4,
        );
        assert_eq!(rank(&h), 4);
        assert_eq!(rank_gauss(&h), 4);
    }

    #[test]
    fn matrix_algebra() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.pow(2), m(&[&[7, 10], &[15, 22]]));
        assert_eq!(a.polynomial(&[q(1), q(0), q(1)]), m(&[&[8, 10], &[15, 23]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.direct_sum(&m(&[&[5]])).rows(), 3);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<Q>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c)
                .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(Q::from_i64).collect()))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            let k = kernel_basis(&a);
            prop_assert_eq!(rank(&a) + k.cols(), a.cols());
            for j in 0..k.cols() {
                prop_assert!(a.apply(&k.column(j)).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn eliminations_agree(a in small_matrix()) {
            prop_assert_eq!(rank(&a), rank_gauss(&a));
            prop_assert_eq!(rank(&a), rank(&a.transpose()));
        }

        #[test]
        fn solve_is_exact(a in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let x0: Vec<Q> = seed.iter().take(a.cols()).map(|&s| Q::from_i64(s)).collect();
            let x0 = if x0.len() < a.cols() { vec![Q::from_i64(1); a.cols()] } else { x0 };
            let b = a.apply(&x0);
            let x = solve(&a, &b).expect("consistent by construction");
            prop_assert_eq!(a.apply(&x), b);
        }
    }
}
