//! The standard small algebras and operators used throughout the tests and the CLI.

use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// The abelian plane.
pub fn a2() -> LieAlgebra<Rational> {
    LieAlgebra::abelian(2).with_labels(&["e1", "e2"])
}

/// `[e1, e2] = e2`.
pub fn aff1() -> LieAlgebra<Rational> {
    LieAlgebra::from_brackets(2, &[(0, 1, vec![q(0), q(1)])]).expect("fixture").with_labels(&["e1", "e2"])
}

/// The Heisenberg algebra, `[e1, e2] = e3`.
pub fn h3() -> LieAlgebra<Rational> {
    LieAlgebra::from_brackets(3, &[(0, 1, vec![q(0), q(0), q(1)])]).expect("fixture").with_labels(&["e1", "e2", "e3"])
}

/// `sl(2)` in the basis `(h, e, f)`.
pub fn sl2() -> LieAlgebra<Rational> {
    LieAlgebra::from_brackets(
        3,
        &[(0, 1, vec![q(0), q(2), q(0)]), (0, 2, vec![q(0), q(0), q(-2)]), (1, 2, vec![q(1), q(0), q(0)])],
    )
    .expect("fixture")
    .with_labels(&["h", "e", "f"])
}

/// `diag(a, b)`, a Nijenhuis operator on [`aff1`].
pub fn ndiag(a: Rational, b: Rational) -> Matrix<Rational> {
    Matrix::diagonal(&[a, b])
}

/// `e1 ↦ e3`, `e2, e3 ↦ 0` on [`h3`].
pub fn nnilp() -> Matrix<Rational> {
    Matrix::from_i64_rows(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]])
}

/// `e1⊗e2 - e2⊗e1` as the coefficient matrix `r[i][j]`.
pub fn r_aff() -> Matrix<Rational> {
    Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]])
}
