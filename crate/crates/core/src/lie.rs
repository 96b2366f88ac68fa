//! Lie algebras by structure constants and their representations.

use crate::error::{shape, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;

/// A finite-dimensional Lie algebra with basis `e_0..e_{dim-1}` and
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Both orders of every pair are stored. Antisymmetry and the Jacobi
/// identity are checked by [`check_lie`], never assumed or repaired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<T> {
    dim: usize,
    c: Vec<T>,
    pub labels: Option<Vec<String>>,
}

impl<T: Scalar> LieAlgebra<T> {
    pub fn abelian(dim: usize) -> Self {
        Self { dim, c: vec![T::zero(); dim * dim * dim], labels: None }
    }

    /// Builds an algebra from the full table `c[(i*dim + j)*dim + k]`.
    pub fn from_table(dim: usize, c: Vec<T>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return shape(format!("structure table has {} entries, expected {}", c.len(), dim.pow(3)));
        }
        Ok(Self { dim, c, labels: None })
    }

    /// Builds an algebra from brackets `[e_i, e_j]` for `i < j`, filling the
    /// opposite order by antisymmetry.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<T>)]) -> Result<Self> {
        let mut l = Self::abelian(dim);
        for (i, j, v) in brackets {
            if *i >= dim || *j >= dim || v.len() != dim {
                return shape(format!("bracket [{i},{j}] does not fit dimension {dim}"));
            }
            l.set_bracket(*i, *j, v);
        }
        Ok(l)
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[T]) {
        for (k, x) in v.iter().enumerate() {
            self.c[(i * self.dim + j) * self.dim + k] = x.clone();
            self.c[(j * self.dim + i) * self.dim + k] = -x.clone();
        }
    }

    /// Overwrites one structure constant without touching its mirror.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, x: T) {
        self.c[(i * self.dim + j) * self.dim + k] = x;
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        self.labels = Some(labels.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &T {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn table(&self) -> &[T] {
        &self.c
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<T> {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.dim, "vector length must equal dim");
        assert_eq!(y.len(), self.dim, "vector length must equal dim");
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o = o.clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Checked version of [`LieAlgebra::bracket`].
    pub fn try_bracket(&self, x: &[T], y: &[T]) -> Result<Vec<T>> {
        if x.len() != self.dim || y.len() != self.dim {
            return shape(format!("bracket arguments must have length {}", self.dim));
        }
        Ok(self.bracket(x, y))
    }

    /// The matrix of `ad_{e_i}`: entry `(k, j)` is `c[i][j][k]`.
    pub fn ad(&self, i: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.constant(i, j, k).clone());
            }
        }
        m
    }

    pub fn ad_of(&self, x: &[T]) -> Matrix<T> {
        combine(&(0..self.dim).map(|i| self.ad(i)).collect::<Vec<_>>(), x, self.dim)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(T::is_zero)
    }

    /// Structure constants after the change of basis `e'_a = Σ_b p[b][a] e_b`.
    pub fn change_basis(&self, p: &Matrix<T>, p_inv: &Matrix<T>) -> Self {
        let n = self.dim;
        let mut out = Self::abelian(n);
        for a in 0..n {
            for b in 0..n {
                let v = self.bracket(&p.column(a), &p.column(b));
                let w = p_inv.apply(&v);
                for (k, x) in w.into_iter().enumerate() {
                    out.set_constant(a, b, k, x);
                }
            }
        }
        out
    }
}

/// `Σ x_i · ms[i]`.
pub(crate) fn combine<T: Scalar>(ms: &[Matrix<T>], x: &[T], n: usize) -> Matrix<T> {
    let mut out = Matrix::zeros(n, n);
    for (m, xi) in ms.iter().zip(x) {
        if !xi.is_zero() {
            out = out.add(&m.scale(xi));
        }
    }
    out
}

pub(crate) fn unit<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

pub(crate) fn vsub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub(crate) fn vadd<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub(crate) fn vscale<T: Scalar>(a: &[T], s: &T) -> Vec<T> {
    a.iter().map(|x| x.clone() * s.clone()).collect()
}

/// Antisymmetry and Jacobi residuals over all basis pairs and triples.
pub fn check_lie<T: Scalar>(l: &LieAlgebra<T>) -> Report {
    let n = l.dim();
    let mut report = Report::new();
    for i in 0..n {
        for j in i..n {
            let r: Vec<T> = (0..n).map(|k| l.constant(i, j, k).clone() + l.constant(j, i, k).clone()).collect();
            report.check("antisymmetry", &[i, j], &r);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let a = l.bracket(&x, &l.bracket(&y, &z));
                let b = l.bracket(&y, &l.bracket(&z, &x));
                let c = l.bracket(&z, &l.bracket(&x, &y));
                report.check("jacobi", &[i, j, k], &vadd(&vadd(&a, &b), &c));
            }
        }
    }
    report
}

/// A linear action of a Lie algebra of dimension `dim_g` on `k^{dim_v}`,
/// stored as the matrices `ρ_{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<T> {
    dim_v: usize,
    rho: Vec<Matrix<T>>,
}

impl<T: Scalar> Representation<T> {
    pub fn new(dim_v: usize, rho: Vec<Matrix<T>>) -> Result<Self> {
        for (i, m) in rho.iter().enumerate() {
            if m.rows() != dim_v || m.cols() != dim_v {
                return shape(format!("rho[{i}] must be {dim_v}x{dim_v}"));
            }
        }
        Ok(Self { dim_v, rho })
    }

    pub fn trivial(dim_g: usize, dim_v: usize) -> Self {
        Self { dim_v, rho: vec![Matrix::zeros(dim_v, dim_v); dim_g] }
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_g(&self) -> usize {
        self.rho.len()
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.rho
    }

    pub fn rho(&self, i: usize) -> &Matrix<T> {
        &self.rho[i]
    }

    pub fn rho_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.rho, x, self.dim_v)
    }

    /// `ρ_x v`.
    pub fn act(&self, x: &[T], v: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim_v];
        for (m, xi) in self.rho.iter().zip(x) {
            if !xi.is_zero() {
                out = vadd(&out, &vscale(&m.apply(v), xi));
            }
        }
        out
    }

    /// Direct sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.dim_g(), other.dim_g(), "representations of different algebras");
        Self {
            dim_v: self.dim_v + other.dim_v,
            rho: self.rho.iter().zip(&other.rho).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }
}

pub(crate) fn check_rep_shape<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>) -> Result<()> {
    if rep.dim_g() != l.dim() {
        return shape(format!("representation has {} matrices, algebra has dimension {}", rep.dim_g(), l.dim()));
    }
    Ok(())
}

/// Basis pairs violating `ρ_{[x,y]} = ρ_x ρ_y - ρ_y ρ_x`.
pub fn check_representation<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>) -> Result<Report> {
    check_rep_shape(l, rep)?;
    let n = l.dim();
    let mut report = Report::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = rep.rho_of(&l.bracket_basis(i, j));
            let rhs = rep.rho(i).mul(rep.rho(j)).sub(&rep.rho(j).mul(rep.rho(i)));
            report.check("homomorphism", &[i, j], lhs.sub(&rhs).entries());
        }
    }
    Ok(report)
}

pub fn adjoint_rep<T: Scalar>(l: &LieAlgebra<T>) -> Representation<T> {
    Representation { dim_v: l.dim(), rho: (0..l.dim()).map(|i| l.ad(i)).collect() }
}

/// `ρ*_x = -ρ_x^T`.
pub fn dual_rep<T: Scalar>(rep: &Representation<T>) -> Representation<T> {
    Representation { dim_v: rep.dim_v, rho: rep.rho.iter().map(|m| m.transpose().neg()).collect() }
}

/// `g ⋉ V` with `[(x,u),(y,v)] = ([x,y], ρ_x v - ρ_y u)`; `g` comes first in the basis.
pub fn semidirect<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>) -> Result<LieAlgebra<T>> {
    check_rep_shape(l, rep)?;
    let (n, m) = (l.dim(), rep.dim_v());
    let mut out = LieAlgebra::abelian(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_constant(i, j, k, l.constant(i, j, k).clone());
            }
        }
        for a in 0..m {
            for b in 0..m {
                let x = rep.rho(i).get(b, a).clone();
                out.set_constant(i, n + a, n + b, x.clone());
                out.set_constant(n + a, i, n + b, -x);
            }
        }
    }
    Ok(out)
}

/// A representation together with an operator `S` on its space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisRep<T> {
    pub rep: Representation<T>,
    pub s: Matrix<T>,
}

impl<T: Scalar> NijenhuisRep<T> {
    pub fn new(rep: Representation<T>, s: Matrix<T>) -> Result<Self> {
        if s.rows() != rep.dim_v() || s.cols() != rep.dim_v() {
            return shape(format!("S must be {0}x{0}", rep.dim_v()));
        }
        Ok(Self { rep, s })
    }

    /// The adjoint representation with `S = N`.
    pub fn adjoint(l: &LieAlgebra<T>, n: &Matrix<T>) -> Self {
        Self { rep: adjoint_rep(l), s: n.clone() }
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim_v()
    }
}

pub(crate) fn check_operator<T: Scalar>(name: &str, m: &Matrix<T>, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return shape(format!("{name} must be {rows}x{cols}, got {}x{}", m.rows(), m.cols()));
    }
    Ok(())
}

/// Basis pairs `(x_i, v_j)` violating `ρ_{Nx} S v = S(ρ_{Nx} v + ρ_x S v - S ρ_x v)`.
pub fn check_nijenhuis_rep<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>, nrep: &NijenhuisRep<T>) -> Result<Report> {
    check_operator("N", n, l.dim(), l.dim())?;
    check_rep_shape(l, &nrep.rep)?;
    let s = &nrep.s;
    let mut report = Report::new();
    for i in 0..l.dim() {
        let rho_nx = nrep.rep.rho_of(&n.column(i));
        let rho_x = nrep.rep.rho(i);
        let lhs = rho_nx.mul(s);
        let inner = rho_nx.add(&rho_x.mul(s)).sub(&s.mul(rho_x));
        let diff = lhs.sub(&s.mul(&inner));
        for j in 0..nrep.dim_v() {
            report.check("nijenhuis-rep", &[i, j], &diff.column(j));
        }
    }
    Ok(report)
}

/// `(V, ρ^l, S^k)` with `ρ^l_x = ρ_{N^l x} + ρ_x S^l - S^l ρ_x`.
pub fn deformed_rep<T: Scalar>(
    l: &LieAlgebra<T>,
    n: &Matrix<T>,
    nrep: &NijenhuisRep<T>,
    k: usize,
    power: usize,
) -> Result<NijenhuisRep<T>> {
    check_operator("N", n, l.dim(), l.dim())?;
    check_rep_shape(l, &nrep.rep)?;
    if power == 0 {
        return Ok(NijenhuisRep { rep: nrep.rep.clone(), s: nrep.s.pow(k) });
    }
    let nl = n.pow(power);
    let sl = nrep.s.pow(power);
    let rho = (0..l.dim())
        .map(|i| {
            let rx = nrep.rep.rho(i);
            nrep.rep.rho_of(&nl.column(i)).add(&rx.mul(&sl)).sub(&sl.mul(rx))
        })
        .collect();
    Ok(NijenhuisRep { rep: Representation { dim_v: nrep.dim_v(), rho }, s: nrep.s.pow(k) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn fixtures_are_lie() {
        for l in [fixtures::a2(), fixtures::aff1(), fixtures::h3(), fixtures::sl2()] {
            assert!(check_lie(&l).is_ok());
        }
    }

    #[test]
    fn sl2_jacobi_by_hand() {
        // [h,[e,f]] + [e,[f,h]] + [f,[h,e]] = [h,h] + [e,2f] + [f,2e] = 0.
        let l = fixtures::sl2();
        let (h, e, f) = (unit::<Q>(3, 0), unit::<Q>(3, 1), unit::<Q>(3, 2));
        assert_eq!(l.bracket(&e, &f), h);
        assert_eq!(l.bracket(&h, &e), vscale(&e, &q(2)));
        assert_eq!(l.bracket(&h, &f), vscale(&f, &q(-2)));
    }

    #[test]
    fn swapped_aff1_is_still_lie() {
        let l = LieAlgebra::<Q>::from_brackets(2, &[(0, 1, vec![q(1), q(0)])]).unwrap();
        assert!(check_lie(&l).is_ok());
        assert_ne!(l, fixtures::aff1());
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        let mut l = fixtures::aff1();
        l.set_constant(1, 0, 1, q(0));
        let r = check_lie(&l);
        assert_eq!(r.count("antisymmetry"), 1);
        assert_eq!(r.witnesses[0].indices, vec![0, 1]);
    }

    #[test]
    fn jacobi_failure_is_located() {
        let mut l = LieAlgebra::<Q>::abelian(3);
        l.set_bracket(0, 1, &[q(0), q(1), q(0)]);
        l.set_bracket(1, 2, &[q(1), q(0), q(0)]);
        let r = check_lie(&l);
        assert_eq!(r.count("jacobi"), 1);
        assert_eq!(r.witnesses[0].indices, vec![0, 1, 2]);
    }

    #[test]
    fn bracket_examples() {
        let aff = fixtures::aff1();
        assert_eq!(aff.bracket(&unit(2, 0), &unit(2, 1)), unit::<Q>(2, 1));
        let x = vec![q(3), q(-2)];
        assert_eq!(aff.bracket(&x, &x), vec![q(0), q(0)]);
        assert!(aff.try_bracket(&[q(1)], &x).is_err());
    }

    #[test]
    fn adjoint_examples() {
        let aff = adjoint_rep(&fixtures::aff1());
        assert_eq!(aff.rho(0), &Matrix::from_i64_rows(&[&[0, 0], &[0, 1]]));
        assert_eq!(aff.rho(1), &Matrix::from_i64_rows(&[&[0, 0], &[-1, 0]]));
        let sl = adjoint_rep(&fixtures::sl2());
        assert_eq!(sl.rho(0), &Matrix::diagonal(&[q(0), q(2), q(-2)]));
        assert!(adjoint_rep(&fixtures::a2()).matrices().iter().all(Matrix::is_zero));
        assert!(check_representation(&fixtures::sl2(), &sl).unwrap().is_ok());
    }

    #[test]
    fn representation_failure() {
        let l = fixtures::aff1();
        let rep = Representation::new(1, vec![Matrix::identity(1), Matrix::identity(1)]).unwrap();
        let r = check_representation(&l, &rep).unwrap();
        assert_eq!(r.count("homomorphism"), 1);
        assert!(check_representation(&l, &Representation::trivial(2, 3)).unwrap().is_ok());
        assert!(check_representation(&l, &Representation::trivial(3, 3)).is_err());
    }

    #[test]
    fn dual_examples() {
        let d = dual_rep(&adjoint_rep(&fixtures::aff1()));
        assert_eq!(d.rho(0), &Matrix::from_i64_rows(&[&[0, 0], &[0, -1]]));
        assert_eq!(dual_rep(&d), adjoint_rep(&fixtures::aff1()));
        assert!(check_representation(&fixtures::aff1(), &d).unwrap().is_ok());
        let t = Representation::<Q>::trivial(2, 2);
        assert_eq!(dual_rep(&t), t);
    }

    #[test]
    fn semidirect_examples() {
        let s = semidirect(&fixtures::a2(), &Representation::trivial(2, 1)).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.is_abelian());
        let s = semidirect(&fixtures::aff1(), &adjoint_rep(&fixtures::aff1())).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_lie(&s).is_ok());
        // H3 ⊕ k has a 2-dimensional center.
        let s = semidirect(&fixtures::h3(), &Representation::trivial(3, 1)).unwrap();
        let ads: Vec<Vec<Q>> = (0..4).flat_map(|i| s.ad(i).to_rows()).collect();
        let stacked = Matrix::from_rows(ads, 4);
        assert_eq!(crate::linalg::kernel_basis(&stacked).cols(), 2);
    }

    #[test]
    fn nijenhuis_rep_examples() {
        let l = fixtures::aff1();
        let n = fixtures::ndiag(q(2), q(-3));
        let ad = NijenhuisRep::adjoint(&l, &n);
        assert!(check_nijenhuis_rep(&l, &n, &ad).unwrap().is_ok());
        for s in [Matrix::identity(2), Matrix::zeros(2, 2), Matrix::identity(2).neg()] {
            let r = NijenhuisRep::new(adjoint_rep(&l), s).unwrap();
            assert!(check_nijenhuis_rep(&l, &n, &r).unwrap().is_ok());
        }
        let bad = NijenhuisRep::new(adjoint_rep(&l), Matrix::from_i64_rows(&[&[0, 1], &[0, 0]])).unwrap();
        assert!(!check_nijenhuis_rep(&l, &fixtures::ndiag(q(1), q(0)), &bad).unwrap().is_ok());
    }

    #[test]
    fn deformed_rep_examples() {
        let l = fixtures::aff1();
        let n = fixtures::ndiag(q(2), q(5));
        let ad = NijenhuisRep::adjoint(&l, &n);
        assert_eq!(deformed_rep(&l, &n, &ad, 1, 0).unwrap(), ad);
        assert_eq!(deformed_rep(&l, &n, &ad, 0, 0).unwrap().s, Matrix::identity(2));
        // ρ¹ of the adjoint is the adjoint of the deformed bracket.
        let d = deformed_rep(&l, &n, &ad, 1, 1).unwrap();
        let deformed = crate::nijenhuis::deformed_bracket_unchecked(&l, &n);
        assert_eq!(d.rep, adjoint_rep(&deformed));
        let t = NijenhuisRep::new(Representation::trivial(2, 2), Matrix::from_i64_rows(&[&[1, 2], &[3, 4]])).unwrap();
        let d = deformed_rep(&fixtures::a2(), &n, &t, 1, 1).unwrap();
        assert!(d.rep.matrices().iter().all(Matrix::is_zero));
    }
}
