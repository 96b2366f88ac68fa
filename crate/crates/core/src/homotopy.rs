//! 2-term L∞-algebras with homotopy Nijenhuis operators, their
//! representations and semidirect products, homotopy relative Rota–Baxter
//! operators, and the passage to cone cocycles and crossed modules.
//!
//! The mixed part of `l2` is stored as `ρ_x h = l2(x, h)` for the basis of
//! `L0`, and `l2(h, x) = -ρ_x h`. On `L1 × L1` the bracket is zero.

use crate::combinat::{binomial, combination_index, combinations};
use crate::cone::{nlie_differential, ConeCochain};
use crate::error::{precondition, shape, Result};
use crate::lie::{
    check_lie, check_nijenhuis_rep, check_operator, check_representation, combine, deformed_rep, unit, vadd, vsub,
    LieAlgebra, NijenhuisRep, Representation,
};
use crate::linalg::Matrix;
use crate::multilinear::AltMap;
use crate::nijenhuis::{check_nijenhuis, deformed_bracket_unchecked, NijenhuisPair};
use crate::report::Report;
use crate::scalar::Scalar;

fn sum<T: Scalar>(terms: &[Vec<T>], len: usize) -> Vec<T> {
    terms.iter().fold(vec![T::zero(); len], |acc, t| vadd(&acc, t))
}

fn check_matrices<T: Scalar>(name: &str, ms: &[Matrix<T>], count: usize, rows: usize, cols: usize) -> Result<()> {
    if ms.len() != count {
        return shape(format!("{name} needs {count} matrices, got {}", ms.len()));
    }
    for (i, m) in ms.iter().enumerate() {
        check_operator(&format!("{name}[{i}]"), m, rows, cols)?;
    }
    Ok(())
}

fn check_alt<T: Scalar>(name: &str, f: &AltMap<T>, arity: usize, dim: usize, target: usize) -> Result<()> {
    if f.arity() != arity || f.dim() != dim || f.target() != target {
        return shape(format!(
            "{name} must be an alternating {arity}-form on k^{dim} with values in k^{target}, got a {}-form on k^{} into k^{}",
            f.arity(),
            f.dim(),
            f.target()
        ));
    }
    Ok(())
}

/// A 2-term L∞-algebra `L1 --∂--> L0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermL<T> {
    /// `∂`, a `dim0 × dim1` matrix.
    pub d: Matrix<T>,
    pub l2_00: AltMap<T>,
    /// `ρ_{e_i} = l2(e_i, ·)` on `L1`.
    pub l2_01: Vec<Matrix<T>>,
    pub l3: AltMap<T>,
}

impl<T: Scalar> TwoTermL<T> {
    pub fn new(d: Matrix<T>, l2_00: AltMap<T>, l2_01: Vec<Matrix<T>>, l3: AltMap<T>) -> Result<Self> {
        let t = Self { d, l2_00, l2_01, l3 };
        t.validate()?;
        Ok(t)
    }

    /// `0 → g`.
    pub fn from_lie(l: &LieAlgebra<T>) -> Self {
        Self::with_module(l, &Representation::trivial(l.dim(), 0))
    }

    /// `V --0--> g` with `l2` given by the bracket and the action, and `l3 = 0`.
    pub fn with_module(l: &LieAlgebra<T>, rep: &Representation<T>) -> Self {
        let (d, m) = (l.dim(), rep.dim_v());
        Self {
            d: Matrix::zeros(d, m),
            l2_00: AltMap::from_lie(l),
            l2_01: rep.matrices().to_vec(),
            l3: AltMap::zeros(3, d, m),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (d0, d1) = (self.dim0(), self.dim1());
        check_operator("d", &self.d, d0, d1)?;
        check_alt("l2_00", &self.l2_00, 2, d0, d0)?;
        check_matrices("l2_01", &self.l2_01, d0, d1, d1)?;
        check_alt("l3", &self.l3, 3, d0, d1)
    }

    pub fn dim0(&self) -> usize {
        self.l2_00.dim()
    }

    pub fn dim1(&self) -> usize {
        self.d.cols()
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    /// `(L0, l2)` as a bracket table, whether or not it is Lie.
    pub fn base(&self) -> LieAlgebra<T> {
        self.l2_00.to_lie()
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.l2_00.eval(&[x.to_vec(), y.to_vec()])
    }

    pub fn rho(&self, x: &[T]) -> Matrix<T> {
        combine(&self.l2_01, x, self.dim1())
    }

    /// `l2(x, h)`.
    pub fn act(&self, x: &[T], h: &[T]) -> Vec<T> {
        self.rho(x).apply(h)
    }

    pub fn ternary(&self, x: &[T], y: &[T], z: &[T]) -> Vec<T> {
        self.l3.eval(&[x.to_vec(), y.to_vec(), z.to_vec()])
    }

    pub fn boundary(&self, h: &[T]) -> Vec<T> {
        self.d.apply(h)
    }

    fn jacobiator(&self, x: &[T], y: &[T], z: &[T]) -> Vec<T> {
        let a = self.bracket(x, &self.bracket(y, z));
        let b = self.bracket(y, &self.bracket(z, x));
        let c = self.bracket(z, &self.bracket(x, y));
        vadd(&vadd(&a, &b), &c)
    }

    /// `l2(x, l2(y, h)) + l2(y, l2(h, x)) + l2(h, l2(x, y))`.
    fn mixed_jacobiator(&self, x: &[T], y: &[T], h: &[T]) -> Vec<T> {
        let a = self.act(x, &self.act(y, h));
        let b = self.act(y, &self.act(x, h));
        let c = self.act(&self.bracket(x, y), h);
        vsub(&vsub(&a, &b), &c)
    }
}

fn units<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n).map(|i| unit(n, i)).collect()
}

/// The left side of the quaternary identity as an alternating 4-form.
pub fn two_term5_residual<T: Scalar>(t: &TwoTermL<T>) -> Result<AltMap<T>> {
    t.validate()?;
    let e = units::<T>(t.dim0());
    Ok(AltMap::from_fn(4, t.dim0(), t.dim1(), |i| {
        let (x, y, z, w) = (&e[i[0]], &e[i[1]], &e[i[2]], &e[i[3]]);
        let br = |a: &[T], b: &[T]| t.bracket(a, b);
        let plus = [
            t.act(x, &t.ternary(y, z, w)),
            t.act(z, &t.ternary(x, y, w)),
            t.ternary(&br(x, z), y, w),
            t.ternary(&br(y, w), x, z),
        ];
        let minus = [
            t.act(y, &t.ternary(x, z, w)),
            t.act(w, &t.ternary(x, y, z)),
            t.ternary(&br(x, y), z, w),
            t.ternary(&br(x, w), y, z),
            t.ternary(&br(y, z), x, w),
            t.ternary(&br(z, w), x, y),
        ];
        vsub(&sum(&plus, t.dim1()), &sum(&minus, t.dim1()))
    }))
}

/// Residuals of the five defining identities, labeled `2term1` to `2term5`.
pub fn check_2term<T: Scalar>(t: &TwoTermL<T>) -> Result<Report> {
    t.validate()?;
    let (d0, d1) = (t.dim0(), t.dim1());
    let e = units::<T>(d0);
    let f = units::<T>(d1);
    let mut report = Report::new();
    for i in 0..d0 {
        for a in 0..d1 {
            let lhs = t.boundary(&t.act(&e[i], &f[a]));
            let rhs = t.bracket(&e[i], &t.boundary(&f[a]));
            report.check("2term1", &[i, a], &vsub(&lhs, &rhs));
        }
    }
    for a in 0..d1 {
        for b in a..d1 {
            // l2(∂h, k) - l2(h, ∂k) = ρ_{∂h} k + ρ_{∂k} h
            let lhs = t.act(&t.boundary(&f[a]), &f[b]);
            let rhs = t.act(&t.boundary(&f[b]), &f[a]);
            report.check("2term2", &[a, b], &vadd(&lhs, &rhs));
        }
    }
    for c in combinations(d0, 3) {
        let (x, y, z) = (&e[c[0]], &e[c[1]], &e[c[2]]);
        let lhs = t.boundary(&t.ternary(x, y, z));
        report.check("2term3", &c, &vsub(&lhs, &t.jacobiator(x, y, z)));
    }
    for c in combinations(d0, 2) {
        for a in 0..d1 {
            let lhs = t.ternary(&e[c[0]], &e[c[1]], &t.boundary(&f[a]));
            let rhs = t.mixed_jacobiator(&e[c[0]], &e[c[1]], &f[a]);
            report.check("2term4", &[c[0], c[1], a], &vsub(&lhs, &rhs));
        }
    }
    let r5 = two_term5_residual(t)?;
    for c in combinations(d0, 4) {
        report.check("2term5", &c, r5.get(&c));
    }
    Ok(report)
}

/// `(N0, N1, N2)` on a 2-term L∞-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyNijenhuis<T> {
    pub n0: Matrix<T>,
    pub n1: Matrix<T>,
    pub n2: AltMap<T>,
}

impl<T: Scalar> HomotopyNijenhuis<T> {
    pub fn zero(t: &TwoTermL<T>) -> Self {
        let (d0, d1) = (t.dim0(), t.dim1());
        Self { n0: Matrix::zeros(d0, d0), n1: Matrix::zeros(d1, d1), n2: AltMap::zeros(2, d0, d1) }
    }

    pub fn identity(t: &TwoTermL<T>) -> Self {
        let (d0, d1) = (t.dim0(), t.dim1());
        Self { n0: Matrix::identity(d0), n1: Matrix::identity(d1), n2: AltMap::zeros(2, d0, d1) }
    }

    fn validate(&self, t: &TwoTermL<T>) -> Result<()> {
        t.validate()?;
        let (d0, d1) = (t.dim0(), t.dim1());
        check_operator("N0", &self.n0, d0, d0)?;
        check_operator("N1", &self.n1, d1, d1)?;
        check_alt("N2", &self.n2, 2, d0, d1)
    }

    fn n2_of(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.n2.eval(&[x.to_vec(), y.to_vec()])
    }
}

/// `l2(N0 x, y) + l2(x, N0 y) - N0 l2(x, y)`.
fn deformed<T: Scalar>(t: &TwoTermL<T>, n0: &Matrix<T>, x: &[T], y: &[T]) -> Vec<T> {
    let a = t.bracket(&n0.apply(x), y);
    let b = t.bracket(x, &n0.apply(y));
    vsub(&vadd(&a, &b), &n0.apply(&t.bracket(x, y)))
}

/// Left side minus right side of the cubic identity, as an alternating 3-form.
pub fn hn4_residual<T: Scalar>(t: &TwoTermL<T>, hn: &HomotopyNijenhuis<T>) -> Result<AltMap<T>> {
    hn.validate(t)?;
    let (d0, d1) = (t.dim0(), t.dim1());
    let e = units::<T>(d0);
    let (n0, n1) = (&hn.n0, &hn.n1);
    let n1_2 = n1.pow(2);
    let n1_3 = n1.pow(3);
    Ok(AltMap::from_fn(3, d0, d1, |i| {
        let (x, y, z) = (&e[i[0]], &e[i[1]], &e[i[2]]);
        let cyc = [(x, y, z), (y, z, x), (z, x, y)];
        let mut lhs = vec![T::zero(); d1];
        let mut inner = vec![T::zero(); d1];
        for &(a, b, c) in &cyc {
            lhs = vadd(&lhs, &t.act(&n0.apply(a), &hn.n2_of(b, c)));
            lhs = vsub(&lhs, &hn.n2_of(&deformed(t, n0, a, b), c));
            inner = vadd(&inner, &t.act(a, &hn.n2_of(b, c)));
            inner = vsub(&inner, &hn.n2_of(&t.bracket(a, b), c));
        }
        lhs = vsub(&lhs, &n1.apply(&inner));
        let (nx, ny, nz) = (n0.apply(x), n0.apply(y), n0.apply(z));
        let two = sum(&[t.ternary(&nx, &ny, z), t.ternary(&nx, y, &nz), t.ternary(x, &ny, &nz)], d1);
        let one = sum(&[t.ternary(&nx, y, z), t.ternary(x, &ny, z), t.ternary(x, y, &nz)], d1);
        let rhs = sum(
            &[
                t.ternary(&nx, &ny, &nz),
                n1.apply(&two).into_iter().map(|v| -v).collect(),
                n1_2.apply(&one),
                n1_3.apply(&t.ternary(x, y, z)).into_iter().map(|v| -v).collect(),
            ],
            d1,
        );
        vsub(&lhs, &rhs)
    }))
}

/// Residuals of the four identities, labeled `hn1` to `hn4`.
pub fn check_homotopy_nijenhuis<T: Scalar>(t: &TwoTermL<T>, hn: &HomotopyNijenhuis<T>) -> Result<Report> {
    hn.validate(t)?;
    let (d0, d1) = (t.dim0(), t.dim1());
    let e = units::<T>(d0);
    let f = units::<T>(d1);
    let (n0, n1) = (&hn.n0, &hn.n1);
    let mut report = Report::new();
    let hn1 = t.d.mul(n1).sub(&n0.mul(&t.d));
    for a in 0..d1 {
        report.check("hn1", &[a], &hn1.column(a));
    }
    for c in combinations(d0, 2) {
        let (x, y) = (&e[c[0]], &e[c[1]]);
        let lhs = vsub(&n0.apply(&deformed(t, n0, x, y)), &t.bracket(&n0.apply(x), &n0.apply(y)));
        report.check("hn2", &c, &vsub(&lhs, &t.boundary(hn.n2.get(&c))));
    }
    for i in 0..d0 {
        let x = &e[i];
        let nx = n0.apply(x);
        for a in 0..d1 {
            let h = &f[a];
            let inner = vsub(&vadd(&t.act(&nx, h), &t.act(x, &n1.apply(h))), &n1.apply(&t.act(x, h)));
            let lhs = vsub(&n1.apply(&inner), &t.act(&nx, &n1.apply(h)));
            report.check("hn3", &[i, a], &vsub(&lhs, &hn.n2_of(x, &t.boundary(h))));
        }
    }
    let r4 = hn4_residual(t, hn)?;
    for c in combinations(d0, 3) {
        report.check("hn4", &c, r4.get(&c));
    }
    Ok(report)
}

/// A representation `V1 --∂̄--> V0` of a 2-term L∞-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermRep<T> {
    /// `∂̄`, a `dim_v0 × dim_v1` matrix.
    pub dbar: Matrix<T>,
    /// `m2(e_i, ·)` on `V0`.
    pub m2_0: Vec<Matrix<T>>,
    /// `m2(e_i, ·)` on `V1`.
    pub m2_1: Vec<Matrix<T>>,
    /// `m2(f_a, ·) : V0 → V1` for the basis of `L1`.
    pub m2_10: Vec<Matrix<T>>,
    /// `m3(e_i, e_j, ·) : V0 → V1` for each increasing pair `i < j`.
    pub m3: Vec<Matrix<T>>,
}

impl<T: Scalar> TwoTermRep<T> {
    pub fn zero(t: &TwoTermL<T>, dim_v0: usize, dim_v1: usize) -> Self {
        Self::trivial(t, Matrix::zeros(dim_v0, dim_v1))
    }

    /// All actions zero over the complex `dbar`.
    pub fn trivial(t: &TwoTermL<T>, dbar: Matrix<T>) -> Self {
        let (v0, v1) = (dbar.rows(), dbar.cols());
        Self {
            m2_0: vec![Matrix::zeros(v0, v0); t.dim0()],
            m2_1: vec![Matrix::zeros(v1, v1); t.dim0()],
            m2_10: vec![Matrix::zeros(v1, v0); t.dim1()],
            m3: vec![Matrix::zeros(v1, v0); binomial(t.dim0(), 2)],
            dbar,
        }
    }

    /// `V_i = L_i` with `m2 = l2` and `m3 = l3`.
    pub fn adjoint(t: &TwoTermL<T>) -> Self {
        let (d0, d1) = (t.dim0(), t.dim1());
        let e = units::<T>(d0);
        let f = units::<T>(d1);
        let m2_0 = (0..d0)
            .map(|i| Matrix::from_columns(d0, &e.iter().map(|y| t.bracket(&e[i], y)).collect::<Vec<_>>()))
            .collect();
        let m2_10 = (0..d1)
            .map(|a| {
                let cols: Vec<Vec<T>> = e.iter().map(|x| t.act(x, &f[a]).into_iter().map(|v| -v).collect()).collect();
                Matrix::from_columns(d1, &cols)
            })
            .collect();
        let m3 = combinations(d0, 2)
            .into_iter()
            .map(|c| Matrix::from_columns(d1, &e.iter().map(|z| t.ternary(&e[c[0]], &e[c[1]], z)).collect::<Vec<_>>()))
            .collect();
        Self { dbar: t.d.clone(), m2_0, m2_1: t.l2_01.clone(), m2_10, m3 }
    }

    pub fn dim_v0(&self) -> usize {
        self.dbar.rows()
    }

    pub fn dim_v1(&self) -> usize {
        self.dbar.cols()
    }

    pub fn validate(&self, t: &TwoTermL<T>) -> Result<()> {
        t.validate()?;
        let (v0, v1) = (self.dim_v0(), self.dim_v1());
        check_matrices("m2_0", &self.m2_0, t.dim0(), v0, v0)?;
        check_matrices("m2_1", &self.m2_1, t.dim0(), v1, v1)?;
        check_matrices("m2_10", &self.m2_10, t.dim1(), v1, v0)?;
        check_matrices("m3", &self.m3, binomial(t.dim0(), 2), v1, v0)
    }

    pub fn rho0(&self, x: &[T]) -> Matrix<T> {
        combine(&self.m2_0, x, self.dim_v0())
    }

    pub fn rho1(&self, x: &[T]) -> Matrix<T> {
        combine(&self.m2_1, x, self.dim_v1())
    }

    /// `m2(h, ·) : V0 → V1`.
    pub fn mu(&self, h: &[T]) -> Matrix<T> {
        let mut out = Matrix::zeros(self.dim_v1(), self.dim_v0());
        for (m, c) in self.m2_10.iter().zip(h) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// `m3(x, y, ·)`.
    pub fn m3_of(&self, x: &[T], y: &[T]) -> Matrix<T> {
        let d0 = x.len();
        let mut out = Matrix::zeros(self.dim_v1(), self.dim_v0());
        for (k, c) in combinations(d0, 2).into_iter().enumerate() {
            let w = x[c[0]].clone() * y[c[1]].clone() - x[c[1]].clone() * y[c[0]].clone();
            if !w.is_zero() {
                out = out.add(&self.m3[k].scale(&w));
            }
        }
        out
    }
}

/// Residuals of the representation identities, labeled `rep1` to `rep7`.
///
/// `rep1`–`rep5` are the identities in the definition. `rep6` is
/// `∂̄ m2(h, v) = m2(∂h, v)` and `rep7` is
/// `m3(∂h, x, v) = m2(l2(x, h), v) + m2(h, m2(x, v)) - m2(x, m2(h, v))`.
/// These two are what the semidirect product needs from the mixed arguments.
pub fn check_2term_rep<T: Scalar>(t: &TwoTermL<T>, r: &TwoTermRep<T>) -> Result<Report> {
    r.validate(t)?;
    let (d0, d1, v0, v1) = (t.dim0(), t.dim1(), r.dim_v0(), r.dim_v1());
    let e = units::<T>(d0);
    let f = units::<T>(d1);
    let mut report = Report::new();
    for i in 0..d0 {
        let m = r.dbar.mul(&r.rho1(&e[i])).sub(&r.rho0(&e[i]).mul(&r.dbar));
        for p in 0..v1 {
            report.check("rep1", &[i, p], &m.column(p));
        }
    }
    for a in 0..d1 {
        let m = r.rho1(&t.boundary(&f[a])).sub(&r.mu(&f[a]).mul(&r.dbar));
        for p in 0..v1 {
            report.check("rep2", &[a, p], &m.column(p));
        }
    }
    for c in combinations(d0, 2) {
        let (x, y) = (&e[c[0]], &e[c[1]]);
        let (a0, b0) = (r.rho0(x), r.rho0(y));
        let curv0 = a0.mul(&b0).sub(&b0.mul(&a0)).sub(&r.rho0(&t.bracket(x, y)));
        let m3 = r.m3_of(x, y);
        let rep3 = r.dbar.mul(&m3).sub(&curv0);
        for v in 0..v0 {
            report.check("rep3", &[c[0], c[1], v], &rep3.column(v));
        }
        let (a1, b1) = (r.rho1(x), r.rho1(y));
        let curv1 = a1.mul(&b1).sub(&b1.mul(&a1)).sub(&r.rho1(&t.bracket(x, y)));
        let rep4 = m3.mul(&r.dbar).sub(&curv1);
        for p in 0..v1 {
            report.check("rep4", &[c[0], c[1], p], &rep4.column(p));
        }
    }
    for c in combinations(d0, 3) {
        let (x, y, z) = (&e[c[0]], &e[c[1]], &e[c[2]]);
        let br = |a: &[T], b: &[T]| t.bracket(a, b);
        let plus = r
            .rho1(x)
            .mul(&r.m3_of(y, z))
            .add(&r.rho1(z).mul(&r.m3_of(x, y)))
            .add(&r.mu(&t.ternary(x, y, z)))
            .add(&r.m3_of(&br(x, z), y))
            .add(&r.m3_of(x, z).mul(&r.rho0(y)));
        let minus = r
            .rho1(y)
            .mul(&r.m3_of(x, z))
            .add(&r.m3_of(&br(x, y), z))
            .add(&r.m3_of(y, z).mul(&r.rho0(x)))
            .add(&r.m3_of(&br(y, z), x))
            .add(&r.m3_of(x, y).mul(&r.rho0(z)));
        let m = plus.sub(&minus);
        for v in 0..v0 {
            report.check("rep5", &[c[0], c[1], c[2], v], &m.column(v));
        }
    }
    for a in 0..d1 {
        let h = &f[a];
        let m = r.dbar.mul(&r.mu(h)).sub(&r.rho0(&t.boundary(h)));
        for v in 0..v0 {
            report.check("rep6", &[a, v], &m.column(v));
        }
        for i in 0..d0 {
            let x = &e[i];
            let rhs = r.mu(&t.act(x, h)).add(&r.mu(h).mul(&r.rho0(x))).sub(&r.rho1(x).mul(&r.mu(h)));
            let m = r.m3_of(&t.boundary(h), x).sub(&rhs);
            for v in 0..v0 {
                report.check("rep7", &[a, i, v], &m.column(v));
            }
        }
    }
    Ok(report)
}

/// `(L1 ⊕ V1 → L0 ⊕ V0, l2 ⋉ m2, l3 ⋉ m3)`, with `L_i` first in each basis.
pub fn semidirect_2term<T: Scalar>(t: &TwoTermL<T>, r: &TwoTermRep<T>) -> Result<TwoTermL<T>> {
    if !check_2term(t)?.is_ok() {
        return precondition("not a 2-term L∞-algebra");
    }
    if !check_2term_rep(t, r)?.is_ok() {
        return precondition("not a representation");
    }
    Ok(semidirect_2term_unchecked(t, r))
}

pub fn semidirect_2term_unchecked<T: Scalar>(t: &TwoTermL<T>, r: &TwoTermRep<T>) -> TwoTermL<T> {
    let (d0, d1, v0, v1) = (t.dim0(), t.dim1(), r.dim_v0(), r.dim_v1());
    let (n0, n1) = (d0 + v0, d1 + v1);
    let e = units::<T>(n0);
    let g = units::<T>(n1);
    let split0 = |a: &[T]| (a[..d0].to_vec(), a[d0..].to_vec());
    let split1 = |a: &[T]| (a[..d1].to_vec(), a[d1..].to_vec());
    let join = |mut a: Vec<T>, b: Vec<T>| {
        a.extend(b);
        a
    };
    let d = t.d.direct_sum(&r.dbar);
    let l2_00 = AltMap::from_fn(2, n0, n0, |i| {
        let ((x, u), (y, v)) = (split0(&e[i[0]]), split0(&e[i[1]]));
        join(t.bracket(&x, &y), vsub(&r.rho0(&x).apply(&v), &r.rho0(&y).apply(&u)))
    });
    let l2_01 = (0..n0)
        .map(|i| {
            let (x, u) = split0(&e[i]);
            let cols: Vec<Vec<T>> = g
                .iter()
                .map(|col| {
                    let (h, p) = split1(col);
                    join(t.act(&x, &h), vsub(&r.rho1(&x).apply(&p), &r.mu(&h).apply(&u)))
                })
                .collect();
            Matrix::from_columns(n1, &cols)
        })
        .collect();
    let l3 = AltMap::from_fn(3, n0, n1, |i| {
        let ((x, u), (y, v), (z, w)) = (split0(&e[i[0]]), split0(&e[i[1]]), split0(&e[i[2]]));
        let mixed = sum(&[r.m3_of(&x, &y).apply(&w), r.m3_of(&y, &z).apply(&u), r.m3_of(&z, &x).apply(&v)], v1);
        join(t.ternary(&x, &y, &z), mixed)
    });
    TwoTermL { d, l2_00, l2_01, l3 }
}

/// `(r0, r1, r2)` from a representation back into the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyRb<T> {
    /// `V0 → L0`.
    pub r0: Matrix<T>,
    /// `V1 → L1`.
    pub r1: Matrix<T>,
    /// `∧²V0 → L1`.
    pub r2: AltMap<T>,
}

impl<T: Scalar> HomotopyRb<T> {
    pub fn zero(t: &TwoTermL<T>, r: &TwoTermRep<T>) -> Self {
        Self {
            r0: Matrix::zeros(t.dim0(), r.dim_v0()),
            r1: Matrix::zeros(t.dim1(), r.dim_v1()),
            r2: AltMap::zeros(2, r.dim_v0(), t.dim1()),
        }
    }

    fn validate(&self, t: &TwoTermL<T>, r: &TwoTermRep<T>) -> Result<()> {
        r.validate(t)?;
        check_operator("r0", &self.r0, t.dim0(), r.dim_v0())?;
        check_operator("r1", &self.r1, t.dim1(), r.dim_v1())?;
        check_alt("r2", &self.r2, 2, r.dim_v0(), t.dim1())
    }

    fn r2_of(&self, u: &[T], v: &[T]) -> Vec<T> {
        self.r2.eval(&[u.to_vec(), v.to_vec()])
    }
}

/// Residuals of the four identities, labeled `hrb1` to `hrb4`. In the last
/// one the whole braced block is summed over the cyclic permutations of
/// `(u, v, w)`.
pub fn check_homotopy_rrb<T: Scalar>(t: &TwoTermL<T>, r: &TwoTermRep<T>, op: &HomotopyRb<T>) -> Result<Report> {
    op.validate(t, r)?;
    let (d1, v0, v1) = (t.dim1(), r.dim_v0(), r.dim_v1());
    let e = units::<T>(v0);
    let f = units::<T>(v1);
    let (r0, r1) = (&op.r0, &op.r1);
    // m2(r0 u, v) - m2(r0 v, u)
    let twisted = |u: &[T], v: &[T]| vsub(&r.rho0(&r0.apply(u)).apply(v), &r.rho0(&r0.apply(v)).apply(u));
    let mut report = Report::new();
    let m = t.d.mul(r1).sub(&r0.mul(&r.dbar));
    for p in 0..v1 {
        report.check("hrb1", &[p], &m.column(p));
    }
    for c in combinations(v0, 2) {
        let (u, v) = (&e[c[0]], &e[c[1]]);
        let lhs = vsub(&r0.apply(&twisted(u, v)), &t.bracket(&r0.apply(u), &r0.apply(v)));
        report.check("hrb2", &c, &vsub(&lhs, &t.boundary(op.r2.get(&c))));
    }
    for a in 0..v0 {
        let u = &e[a];
        let ru = r0.apply(u);
        for p in 0..v1 {
            let rp = r1.apply(&f[p]);
            let inner = vsub(&r.rho1(&ru).apply(&f[p]), &r.mu(&rp).apply(u));
            let lhs = vsub(&r1.apply(&inner), &t.act(&ru, &rp));
            report.check("hrb3", &[a, p], &vsub(&lhs, &op.r2_of(u, &r.dbar.column(p))));
        }
    }
    for c in combinations(v0, 3) {
        let (u, v, w) = (&e[c[0]], &e[c[1]], &e[c[2]]);
        let mut lhs = vec![T::zero(); d1];
        for (a, b, z) in [(u, v, w), (v, w, u), (w, u, v)] {
            let (ra, rb) = (r0.apply(a), r0.apply(b));
            lhs = vadd(&lhs, &t.act(&ra, &op.r2_of(b, z)));
            lhs = vsub(&lhs, &op.r2_of(&twisted(a, b), z));
            let inner = vadd(&r.mu(&op.r2_of(a, b)).apply(z), &r.m3_of(&ra, &rb).apply(z));
            lhs = vadd(&lhs, &r1.apply(&inner));
        }
        let rhs = t.ternary(&r0.apply(u), &r0.apply(v), &r0.apply(w));
        report.check("hrb4", &c, &vsub(&lhs, &rhs));
    }
    Ok(report)
}

/// `r̃0(x, u) = (r0 u, 0)`, `r̃1(h, p) = (r1 p, 0)` and
/// `r̃2((x, u), (y, v)) = (r2(u, v), 0)` on the semidirect product.
pub fn lift_homotopy_rb<T: Scalar>(
    t: &TwoTermL<T>,
    r: &TwoTermRep<T>,
    op: &HomotopyRb<T>,
) -> Result<HomotopyNijenhuis<T>> {
    op.validate(t, r)?;
    let (d0, d1, v0, v1) = (t.dim0(), t.dim1(), r.dim_v0(), r.dim_v1());
    let block = |m: &Matrix<T>, a: usize, b: usize| {
        let mut out = Matrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..b {
                out.set(i, a + j, m.get(i, j).clone());
            }
        }
        out
    };
    let n2 = AltMap::from_fn(2, d0 + v0, d1 + v1, |i| {
        let mut out = vec![T::zero(); d1 + v1];
        if i[0] >= d0 {
            out[..d1].clone_from_slice(op.r2.get(&[i[0] - d0, i[1] - d0]));
        }
        out
    });
    Ok(HomotopyNijenhuis { n0: block(&op.r0, d0, v0), n1: block(&op.r1, d1, v1), n2 })
}

/// The Nijenhuis Lie algebra, Nijenhuis representation and degree-3 cone
/// cocycle `(l3, N2)` of a skeletal 2-term Nijenhuis L∞-algebra.
pub fn skeletal_to_cocycle<T: Scalar>(
    t: &TwoTermL<T>,
    hn: &HomotopyNijenhuis<T>,
) -> Result<(NijenhuisPair<T>, NijenhuisRep<T>, ConeCochain<T>)> {
    hn.validate(t)?;
    if !t.is_skeletal() {
        return precondition("not skeletal: ∂ is nonzero");
    }
    if !check_2term(t)?.is_ok() {
        return precondition("not a 2-term L∞-algebra");
    }
    if !check_homotopy_nijenhuis(t, hn)?.is_ok() {
        return precondition("not a homotopy Nijenhuis operator");
    }
    let pair = NijenhuisPair::new(t.base(), hn.n0.clone())?;
    let nrep = NijenhuisRep::new(Representation::new(t.dim1(), t.l2_01.clone())?, hn.n1.clone())?;
    let cochain = ConeCochain::new(t.l3.clone(), Some(hn.n2.clone()))?;
    Ok((pair, nrep, cochain))
}

/// `(V --0--> g, [,] and ρ, χ)` with `(N, S, F)`, for a degree-3 cone cocycle `(χ, F)`.
pub fn cocycle_to_skeletal<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    chi: &AltMap<T>,
    f: &AltMap<T>,
) -> Result<(TwoTermL<T>, HomotopyNijenhuis<T>)> {
    let c = ConeCochain::new(chi.clone(), Some(f.clone()))?;
    if c.degree != 3 {
        return shape("expected a cochain of degree 3");
    }
    if !check_nijenhuis_rep(&pair.algebra, &pair.n, nrep)?.is_ok() {
        return precondition("not a Nijenhuis representation");
    }
    let image = nlie_differential(pair, nrep, &c)?;
    if !image.chi.is_zero() || !image.f.as_ref().is_some_and(AltMap::is_zero) {
        return precondition("not a cocycle");
    }
    let mut t = TwoTermL::with_module(&pair.algebra, &nrep.rep);
    t.l3 = chi.clone();
    let hn = HomotopyNijenhuis { n0: pair.n.clone(), n1: nrep.s.clone(), n2: f.clone() };
    Ok((t, hn))
}

/// A crossed module of Lie algebras `t : h → g` with `g` acting on `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCrossedModule<T> {
    pub g: LieAlgebra<T>,
    pub h: LieAlgebra<T>,
    pub t: Matrix<T>,
    pub rho: Vec<Matrix<T>>,
}

/// A crossed module of Lie algebras with operators `N` on `g` and `S` on `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule<T> {
    pub g: LieAlgebra<T>,
    pub n: Matrix<T>,
    pub h: LieAlgebra<T>,
    pub s: Matrix<T>,
    pub t: Matrix<T>,
    pub rho: Vec<Matrix<T>>,
}

impl<T: Scalar> LieCrossedModule<T> {
    fn validate(&self) -> Result<()> {
        let (dg, dh) = (self.g.dim(), self.h.dim());
        check_operator("t", &self.t, dg, dh)?;
        check_matrices("rho", &self.rho, dg, dh, dh)
    }
}

impl<T: Scalar> CrossedModule<T> {
    pub fn lie_part(&self) -> LieCrossedModule<T> {
        LieCrossedModule { g: self.g.clone(), h: self.h.clone(), t: self.t.clone(), rho: self.rho.clone() }
    }

    fn validate(&self) -> Result<()> {
        self.lie_part().validate()?;
        check_operator("N", &self.n, self.g.dim(), self.g.dim())?;
        check_operator("S", &self.s, self.h.dim(), self.h.dim())
    }

    pub fn nijenhuis_rep(&self) -> NijenhuisRep<T> {
        NijenhuisRep { rep: Representation::new(self.h.dim(), self.rho.clone()).expect("validated"), s: self.s.clone() }
    }

    /// `(g^{N^l}, h^{S^l}, t, ρ^l)`.
    pub fn deformed(&self, l: usize) -> Result<LieCrossedModule<T>> {
        self.validate()?;
        let rep = deformed_rep(&self.g, &self.n, &self.nijenhuis_rep(), 0, l)?;
        Ok(LieCrossedModule {
            g: deformed_bracket_unchecked(&self.g, &self.n.pow(l)),
            h: deformed_bracket_unchecked(&self.h, &self.s.pow(l)),
            t: self.t.clone(),
            rho: rep.rep.matrices().to_vec(),
        })
    }
}

/// Labels `g/`, `h/`, `t-bracket`, `rho/homomorphism`, `derivation`,
/// `equivariance` and `peiffer`.
pub fn check_lie_crossed_module<T: Scalar>(cm: &LieCrossedModule<T>) -> Result<Report> {
    cm.validate()?;
    let (g, h, t) = (&cm.g, &cm.h, &cm.t);
    let (dg, dh) = (g.dim(), h.dim());
    let f = units::<T>(dh);
    let rep = Representation::new(dh, cm.rho.clone())?;
    let mut report = Report::new();
    report.absorb_prefixed("g", check_lie(g));
    report.absorb_prefixed("h", check_lie(h));
    for c in combinations(dh, 2) {
        let lhs = t.apply(&h.bracket_basis(c[0], c[1]));
        let rhs = g.bracket(&t.column(c[0]), &t.column(c[1]));
        report.check("t-bracket", &c, &vsub(&lhs, &rhs));
    }
    report.absorb_prefixed("rho", check_representation(g, &rep)?);
    for i in 0..dg {
        let r = &cm.rho[i];
        for c in combinations(dh, 2) {
            let (a, b) = (&f[c[0]], &f[c[1]]);
            let lhs = r.apply(&h.bracket(a, b));
            let rhs = vadd(&h.bracket(&r.apply(a), b), &h.bracket(a, &r.apply(b)));
            report.check("derivation", &[i, c[0], c[1]], &vsub(&lhs, &rhs));
        }
        for a in 0..dh {
            let lhs = t.apply(&r.column(a));
            let rhs = g.bracket(&unit(dg, i), &t.column(a));
            report.check("equivariance", &[i, a], &vsub(&lhs, &rhs));
        }
    }
    for a in 0..dh {
        let act = rep.rho_of(&t.column(a));
        for b in 0..dh {
            report.check("peiffer", &[a, b], &vsub(&act.column(b), &h.bracket_basis(a, b)));
        }
    }
    Ok(report)
}

/// The Lie crossed-module checks plus `g-nijenhuis/`, `h-nijenhuis/`,
/// `t-operator` (`t S = N t`) and `rho-nijenhuis/`.
pub fn check_crossed_module<T: Scalar>(cm: &CrossedModule<T>) -> Result<Report> {
    cm.validate()?;
    let mut report = check_lie_crossed_module(&cm.lie_part())?;
    report.absorb_prefixed("g-nijenhuis", check_nijenhuis(&cm.g, &cm.n)?);
    report.absorb_prefixed("h-nijenhuis", check_nijenhuis(&cm.h, &cm.s)?);
    let m = cm.t.mul(&cm.s).sub(&cm.n.mul(&cm.t));
    for a in 0..cm.h.dim() {
        report.check("t-operator", &[a], &m.column(a));
    }
    report.absorb_prefixed("rho-nijenhuis", check_nijenhuis_rep(&cm.g, &cm.n, &cm.nijenhuis_rep())?);
    Ok(report)
}

/// `[h, k] = l2(∂h, k)`, `ρ_x h = l2(x, h)` and `t = ∂`.
pub fn strict_to_crossed<T: Scalar>(t: &TwoTermL<T>, hn: &HomotopyNijenhuis<T>) -> Result<CrossedModule<T>> {
    hn.validate(t)?;
    if !t.is_strict() || !hn.n2.is_zero() {
        return precondition("not strict: l3 or N2 is nonzero");
    }
    if !check_2term(t)?.is_ok() {
        return precondition("not a 2-term L∞-algebra");
    }
    if !check_homotopy_nijenhuis(t, hn)?.is_ok() {
        return precondition("not a homotopy Nijenhuis operator");
    }
    let d1 = t.dim1();
    let mut h = LieAlgebra::abelian(d1);
    for c in combinations(d1, 2) {
        h.set_bracket(c[0], c[1], &t.act(&t.d.column(c[0]), &unit(d1, c[1])));
    }
    Ok(CrossedModule { g: t.base(), n: hn.n0.clone(), h, s: hn.n1.clone(), t: t.d.clone(), rho: t.l2_01.clone() })
}

/// `(h --t--> g, l2 from the bracket and ρ, l3 = 0)` with `(N, S, 0)`.
pub fn crossed_to_strict<T: Scalar>(cm: &CrossedModule<T>) -> Result<(TwoTermL<T>, HomotopyNijenhuis<T>)> {
    if !check_crossed_module(cm)?.is_ok() {
        return precondition("not a crossed module of Nijenhuis Lie algebras");
    }
    let (dg, dh) = (cm.g.dim(), cm.h.dim());
    let t = TwoTermL {
        d: cm.t.clone(),
        l2_00: AltMap::from_lie(&cm.g),
        l2_01: cm.rho.clone(),
        l3: AltMap::zeros(3, dg, dh),
    };
    let hn = HomotopyNijenhuis { n0: cm.n.clone(), n1: cm.s.clone(), n2: AltMap::zeros(2, dg, dh) };
    Ok((t, hn))
}

/// Position of the pair `i < j` in [`TwoTermRep::m3`].
pub fn pair_index(dim0: usize, i: usize, j: usize) -> usize {
    combination_index(dim0, &[i, j])
}
