//! Antisymmetric multilinear maps and the brackets and differentials built on them.

use crate::combinat::{binomial, combination_index, combinations, shuffles, sort_with_sign};
use crate::error::{shape, Result};
use crate::lie::{vadd, vscale, vsub, LieAlgebra, Representation};
use crate::linalg::{complement_columns, kernel_basis, rank, rank_gauss, Matrix};
use crate::scalar::{parity_sign, Scalar};
use serde::Serialize;

/// An element of `Hom(∧ⁿ k^dim, k^target)`.
///
/// Coefficients are stored for strictly increasing index tuples in
/// lexicographic order, with the target coordinate varying fastest. Arity
/// zero stores a single vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AltMap<T> {
    arity: usize,
    dim: usize,
    target: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> AltMap<T> {
    pub fn zeros(arity: usize, dim: usize, target: usize) -> Self {
        Self { arity, dim, target, coeffs: vec![T::zero(); binomial(dim, arity) * target] }
    }

    /// Wraps a coefficient vector in the layout described on the type.
    pub fn from_coeffs(arity: usize, dim: usize, target: usize, coeffs: Vec<T>) -> Result<Self> {
        let want = binomial(dim, arity) * target;
        if coeffs.len() != want {
            return shape(format!("alternating map needs {want} coefficients, got {}", coeffs.len()));
        }
        Ok(Self { arity, dim, target, coeffs })
    }

    /// Builds a map from its values on increasing basis tuples.
    pub fn from_fn(arity: usize, dim: usize, target: usize, mut f: impl FnMut(&[usize]) -> Vec<T>) -> Self {
        let mut coeffs = Vec::with_capacity(binomial(dim, arity) * target);
        for t in combinations(dim, arity) {
            let v = f(&t);
            debug_assert_eq!(v.len(), target);
            coeffs.extend(v);
        }
        Self { arity, dim, target, coeffs }
    }

    /// The `idx`-th coordinate basis element of the space.
    pub fn basis_element(arity: usize, dim: usize, target: usize, idx: usize) -> Self {
        let mut m = Self::zeros(arity, dim, target);
        m.coeffs[idx] = T::one();
        m
    }

    pub fn from_vector(v: &[T], dim: usize) -> Self {
        Self { arity: 0, dim, target: v.len(), coeffs: v.to_vec() }
    }

    /// A linear map viewed as an arity-one map.
    pub fn from_matrix(m: &Matrix<T>) -> Self {
        Self::from_fn(1, m.cols(), m.rows(), |t| m.column(t[0]))
    }

    /// The bracket of `l` as an arity-two map.
    pub fn from_lie(l: &LieAlgebra<T>) -> Self {
        Self::from_fn(2, l.dim(), l.dim(), |t| l.bracket_basis(t[0], t[1]))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix(&Matrix::identity(dim))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn space_dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    /// Arity-one maps as matrices.
    pub fn to_matrix(&self) -> Matrix<T> {
        assert_eq!(self.arity, 1, "only arity-one maps are matrices");
        let cols: Vec<Vec<T>> = (0..self.dim).map(|j| self.get(&[j]).to_vec()).collect();
        Matrix::from_columns(self.target, &cols)
    }

    /// Arity-two maps with square target as Lie algebra tables (unchecked).
    pub fn to_lie(&self) -> LieAlgebra<T> {
        assert!(self.arity == 2 && self.target == self.dim, "not a bracket");
        let mut l = LieAlgebra::abelian(self.dim);
        for t in combinations(self.dim, 2) {
            l.set_bracket(t[0], t[1], self.get(&t));
        }
        l
    }

    /// Value on an increasing tuple.
    pub fn get(&self, tuple: &[usize]) -> &[T] {
        let start = combination_index(self.dim, tuple) * self.target;
        &self.coeffs[start..start + self.target]
    }

    pub fn set(&mut self, tuple: &[usize], value: &[T]) {
        let start = combination_index(self.dim, tuple) * self.target;
        self.coeffs[start..start + self.target].clone_from_slice(value);
    }

    /// Value on an arbitrary basis tuple, with the sign of its sorting.
    pub fn on_basis(&self, tuple: &[usize]) -> Vec<T> {
        let mut t = tuple.to_vec();
        match sort_with_sign(&mut t) {
            None => vec![T::zero(); self.target],
            Some(true) => self.get(&t).to_vec(),
            Some(false) => self.get(&t).iter().map(|x| -x.clone()).collect(),
        }
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[Vec<T>]) -> Vec<T> {
        assert_eq!(args.len(), self.arity, "argument count must equal arity");
        let mut out = vec![T::zero(); self.target];
        let mut idx = Vec::with_capacity(self.arity);
        self.expand(args, &mut idx, T::one(), &mut out);
        out
    }

    pub fn try_eval(&self, args: &[Vec<T>]) -> Result<Vec<T>> {
        if args.len() != self.arity || args.iter().any(|a| a.len() != self.dim) {
            return shape(format!("expected {} arguments of length {}", self.arity, self.dim));
        }
        Ok(self.eval(args))
    }

    fn expand(&self, args: &[Vec<T>], idx: &mut Vec<usize>, coeff: T, out: &mut Vec<T>) {
        let pos = idx.len();
        if pos == args.len() {
            let v = self.on_basis(idx);
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o = o.clone() + coeff.clone() * x;
                }
            }
            return;
        }
        for (k, a) in args[pos].iter().enumerate() {
            if a.is_zero() || idx.contains(&k) {
                continue;
            }
            idx.push(k);
            self.expand(args, idx, coeff.clone() * a.clone(), out);
            idx.pop();
        }
    }

    /// `f(v, e_{rest...})` for a vector `v` and basis indices `rest`.
    pub fn eval_first(&self, v: &[T], rest: &[usize]) -> Vec<T> {
        let mut out = vec![T::zero(); self.target];
        let mut t = Vec::with_capacity(rest.len() + 1);
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() || rest.contains(&k) {
                continue;
            }
            t.clear();
            t.push(k);
            t.extend_from_slice(rest);
            out = vadd(&out, &vscale(&self.on_basis(&t), vk));
        }
        out
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if (self.arity, self.dim, self.target) != (other.arity, other.dim, other.target) {
            return shape(format!(
                "maps live in different spaces: ({}, {}, {}) vs ({}, {}, {})",
                self.arity, self.dim, self.target, other.arity, other.dim, other.target
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_space(other).expect("add");
        Self { coeffs: vadd(&self.coeffs, &other.coeffs), ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_space(other).expect("sub");
        Self { coeffs: vsub(&self.coeffs, &other.coeffs), ..self.clone() }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { coeffs: vscale(&self.coeffs, s), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    /// `m ∘ f`.
    pub fn compose_left(&self, m: &Matrix<T>) -> Self {
        assert_eq!(m.cols(), self.target, "composition shape");
        let blocks = binomial(self.dim, self.arity);
        let mut coeffs = Vec::with_capacity(blocks * m.rows());
        for b in 0..blocks {
            coeffs.extend(m.apply(&self.coeffs[b * self.target..(b + 1) * self.target]));
        }
        Self { arity: self.arity, dim: self.dim, target: m.rows(), coeffs }
    }

    /// `f(p x_1, ..., p x_n)` where `p: k^new -> k^dim`.
    pub fn pullback(&self, p: &Matrix<T>) -> Self {
        assert_eq!(p.rows(), self.dim, "pullback shape");
        let cols: Vec<Vec<T>> = (0..p.cols()).map(|j| p.column(j)).collect();
        Self::from_fn(self.arity, p.cols(), self.target, |t| {
            let args: Vec<Vec<T>> = t.iter().map(|&i| cols[i].clone()).collect();
            self.eval(&args)
        })
    }
}

/// `(i_P Q)(x...) = Σ_{Sh(m, n-1)} ± Q(P(x_σ...), x_σ...)`.
pub fn insertion<T: Scalar>(p: &AltMap<T>, q: &AltMap<T>) -> Result<AltMap<T>> {
    if p.target != p.dim || q.target != q.dim || p.dim != q.dim {
        return shape("insertion needs maps valued in their own domain");
    }
    if q.arity == 0 {
        return shape("cannot insert into an arity-zero map");
    }
    let (m, n) = (p.arity, q.arity);
    let sh = shuffles(m, n - 1);
    Ok(AltMap::from_fn(m + n - 1, p.dim, p.dim, |x| {
        let mut out = vec![T::zero(); p.dim];
        for s in &sh {
            let first: Vec<usize> = s.first.iter().map(|&i| x[i]).collect();
            let rest: Vec<usize> = s.second.iter().map(|&i| x[i]).collect();
            let inner = p.get(&first).to_vec();
            let v = q.eval_first(&inner, &rest);
            out = if s.even { vadd(&out, &v) } else { vsub(&out, &v) };
        }
        out
    }))
}

/// `[P, Q]_NR = i_P Q - (-1)^{(m-1)(n-1)} i_Q P`.
pub fn nr_bracket<T: Scalar>(p: &AltMap<T>, q: &AltMap<T>) -> Result<AltMap<T>> {
    if p.arity == 0 || q.arity == 0 {
        return shape("the bracket is defined for positive arities");
    }
    let sign: T = parity_sign(((p.arity - 1) * (q.arity - 1)) as i64);
    Ok(insertion(p, q)?.sub(&insertion(q, p)?.scale(&sign)))
}

/// `(P ∨ Q)(x...) = Σ_{Sh(m, n)} ± [P(x_σ...), Q(x_σ...)]`.
///
/// With this sign convention `P ∨ Q = -(-1)^{mn} Q ∨ P`.
pub fn cup_product<T: Scalar>(l: &LieAlgebra<T>, p: &AltMap<T>, q: &AltMap<T>) -> Result<AltMap<T>> {
    let d = l.dim();
    if p.dim != d || q.dim != d || p.target != d || q.target != d {
        return shape("cup product needs maps valued in the algebra");
    }
    let sh = shuffles(p.arity, q.arity);
    Ok(AltMap::from_fn(p.arity + q.arity, d, d, |x| {
        let mut out = vec![T::zero(); d];
        for s in &sh {
            let a: Vec<usize> = s.first.iter().map(|&i| x[i]).collect();
            let b: Vec<usize> = s.second.iter().map(|&i| x[i]).collect();
            let v = l.bracket(p.get(&a), q.get(&b));
            out = if s.even { vadd(&out, &v) } else { vsub(&out, &v) };
        }
        out
    }))
}

/// The alternating differential shared by every complex in this crate:
///
/// `(Df)(x_0..x_n) = Σ_i (-1)^i act(x_i, f(..x̂_i..)) + Σ_{i<j} (-1)^{i+j} f(bracket(x_i, x_j), ..x̂_i..x̂_j..)`
///
/// on basis tuples, where `act(i, w)` and `bracket(i, j)` are supplied by the caller.
pub fn alternating_differential<T: Scalar>(
    f: &AltMap<T>,
    act: impl Fn(usize, &[T]) -> Vec<T>,
    bracket: impl Fn(usize, usize) -> Vec<T>,
) -> AltMap<T> {
    let n = f.arity;
    let d = f.dim;
    AltMap::from_fn(n + 1, d, f.target, |x| {
        let mut out = vec![T::zero(); f.target];
        let mut rest = Vec::with_capacity(n);
        for i in 0..=n {
            rest.clear();
            rest.extend(x.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v));
            let w = act(x[i], f.get(&rest));
            out = if i % 2 == 0 { vadd(&out, &w) } else { vsub(&out, &w) };
        }
        for i in 0..=n {
            for j in i + 1..=n {
                rest.clear();
                rest.extend(x.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &v)| v));
                let w = f.eval_first(&bracket(x[i], x[j]), &rest);
                out = if (i + j) % 2 == 0 { vadd(&out, &w) } else { vsub(&out, &w) };
            }
        }
        out
    })
}

/// The Chevalley–Eilenberg differential with coefficients in `rep`.
pub fn ce_differential<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    if f.dim != l.dim() || f.target != rep.dim_v() || rep.dim_g() != l.dim() {
        return shape("cochain does not match the algebra and representation");
    }
    Ok(alternating_differential(f, |i, w| rep.rho(i).apply(w), |i, j| l.bracket_basis(i, j)))
}

/// `δ_CE` with adjoint coefficients.
pub fn ce_adjoint<T: Scalar>(l: &LieAlgebra<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    if f.dim != l.dim() || f.target != l.dim() {
        return shape("cochain is not valued in the algebra");
    }
    Ok(alternating_differential(f, |i, w| l.ad(i).apply(w), |i, j| l.bracket_basis(i, j)))
}

/// `[P, Q]_FN = P ∨ Q + (-1)^m i_{δP} Q - (-1)^{(m+1)n} i_{δQ} P`.
pub fn fn_bracket<T: Scalar>(l: &LieAlgebra<T>, p: &AltMap<T>, q: &AltMap<T>) -> Result<AltMap<T>> {
    if p.arity == 0 || q.arity == 0 {
        return shape("the bracket is defined for positive arities");
    }
    let (m, n) = (p.arity as i64, q.arity as i64);
    let cup = cup_product(l, p, q)?;
    let a = insertion(&ce_adjoint(l, p)?, q)?.scale(&parity_sign(m));
    let b = insertion(&ce_adjoint(l, q)?, p)?.scale(&parity_sign((m + 1) * n));
    Ok(cup.add(&a).sub(&b))
}

/// The matrix of a linear map `Hom(∧ⁿ k^dim, k^target) -> W`, columns indexed
/// by the coordinate basis of the source.
pub fn operator_matrix<T: Scalar>(
    arity: usize,
    dim: usize,
    target: usize,
    out_len: usize,
    op: impl Fn(&AltMap<T>) -> Vec<T>,
) -> Matrix<T> {
    let n = binomial(dim, arity) * target;
    let cols: Vec<Vec<T>> = (0..n).map(|j| op(&AltMap::basis_element(arity, dim, target, j))).collect();
    Matrix::from_columns(out_len, &cols)
}

/// Kernel, image and cohomology dimensions of a finite cochain complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplexReport<T> {
    /// `dims[n] = dim C^n` for `n = 0..=up_to + 1`.
    pub dims: Vec<usize>,
    /// `differentials[n]: C^n -> C^{n+1}` for `n = 0..=up_to`.
    pub differentials: Vec<Matrix<T>>,
    /// Ranks by fraction-free elimination.
    pub ranks: Vec<usize>,
    /// Ranks by Gauss–Jordan reduction.
    pub ranks_gauss: Vec<usize>,
}

/// One row of a cohomology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

impl<T: Scalar> CochainComplexReport<T> {
    /// `dims` has one more entry than `differentials`.
    pub fn new(dims: Vec<usize>, differentials: Vec<Matrix<T>>) -> Self {
        assert_eq!(dims.len(), differentials.len() + 1, "one differential per degree");
        for (n, m) in differentials.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (dims[n + 1], dims[n]), "differential {n} shape");
        }
        let ranks = differentials.iter().map(rank).collect();
        let ranks_gauss = differentials.iter().map(rank_gauss).collect();
        Self { dims, differentials, ranks, ranks_gauss }
    }

    pub fn up_to(&self) -> usize {
        self.differentials.len() - 1
    }

    pub fn eliminations_agree(&self) -> bool {
        self.ranks == self.ranks_gauss
    }

    pub fn cocycles(&self, n: usize) -> usize {
        self.dims[n] - self.ranks[n]
    }

    pub fn coboundaries(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.ranks[n - 1]
        }
    }

    pub fn cohomology(&self, n: usize) -> usize {
        self.cocycles(n) - self.coboundaries(n)
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        (0..=self.up_to()).map(|n| self.cohomology(n)).collect()
    }

    pub fn table(&self) -> Vec<DegreeRow> {
        (0..=self.up_to())
            .map(|n| DegreeRow {
                degree: n,
                cochains: self.dims[n],
                cocycles: self.cocycles(n),
                coboundaries: self.coboundaries(n),
                cohomology: self.cohomology(n),
            })
            .collect()
    }

    /// Degrees `n` where `d_{n+1} d_n` is not exactly zero.
    pub fn square_failures(&self) -> Vec<usize> {
        self.differentials.windows(2).enumerate().filter(|(_, w)| !w[1].mul(&w[0]).is_zero()).map(|(n, _)| n).collect()
    }

    /// Cocycles spanning a complement of the coboundaries in degree `n`.
    /// The choice follows elimination order and is not canonical.
    pub fn representatives(&self, n: usize) -> Vec<Vec<T>> {
        let z = kernel_basis(&self.differentials[n]);
        let b = if n == 0 { Matrix::zeros(self.dims[0], 0) } else { self.differentials[n - 1].clone() };
        complement_columns(&b, &z)
    }
}

/// The matrices of `δ_CE` from degree 0 through `up_to`.
pub fn ce_cohomology<T: Scalar>(
    l: &LieAlgebra<T>,
    rep: &Representation<T>,
    up_to: usize,
) -> Result<CochainComplexReport<T>> {
    if rep.dim_g() != l.dim() {
        return shape("representation does not match the algebra");
    }
    let (d, v) = (l.dim(), rep.dim_v());
    let dims: Vec<usize> = (0..=up_to + 1).map(|n| binomial(d, n) * v).collect();
    let ds = (0..=up_to)
        .map(|n| {
            operator_matrix(n, d, v, dims[n + 1], |f| {
                ce_differential(l, rep, f).expect("shapes checked").coeffs().to_vec()
            })
        })
        .collect();
    Ok(CochainComplexReport::new(dims, ds))
}
