//! Nijenhuis operators, the complex they control, relative Rota–Baxter
//! operators and finite-order deformations.

use crate::combinat::binomial;
use crate::error::{precondition, shape, Result};
use crate::lie::{check_lie, check_operator, semidirect, unit, vadd, vsub, LieAlgebra, Representation};
use crate::linalg::{rank, solve, Matrix};
use crate::multilinear::{
    alternating_differential, ce_adjoint, fn_bracket, operator_matrix, AltMap, CochainComplexReport,
};
use crate::report::Report;
use crate::scalar::{parity_sign, Scalar};

/// A Lie algebra with an operator that has been verified to be Nijenhuis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisPair<T> {
    pub algebra: LieAlgebra<T>,
    pub n: Matrix<T>,
}

impl<T: Scalar> NijenhuisPair<T> {
    /// Fails unless `l` is a Lie algebra and `n` is Nijenhuis on it.
    pub fn new(algebra: LieAlgebra<T>, n: Matrix<T>) -> Result<Self> {
        if !check_lie(&algebra).is_ok() {
            return precondition("the bracket is not a Lie bracket");
        }
        if !check_nijenhuis(&algebra, &n)?.is_ok() {
            return precondition("the operator is not Nijenhuis");
        }
        Ok(Self { algebra, n })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// `[Nx, Ny] - N([Nx, y] + [x, Ny] - N[x, y])` as an arity-two map.
pub fn nijenhuis_torsion<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>) -> Result<AltMap<T>> {
    check_operator("N", n, l.dim(), l.dim())?;
    let d = l.dim();
    let deformed = deformed_bracket_unchecked(l, n);
    Ok(AltMap::from_fn(2, d, d, |t| {
        let (nx, ny) = (n.column(t[0]), n.column(t[1]));
        vsub(&l.bracket(&nx, &ny), &n.apply(&deformed.bracket_basis(t[0], t[1])))
    }))
}

/// Basis pairs where the Nijenhuis identity fails. A second section,
/// `maurer-cartan`, records any disagreement between the definition and the
/// vanishing of `[N, N]_FN`.
pub fn check_nijenhuis<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>) -> Result<Report> {
    let torsion = nijenhuis_torsion(l, n)?;
    let mut report = Report::new();
    for t in crate::combinat::combinations(l.dim(), 2) {
        report.check("nijenhuis", &t, torsion.get(&t));
    }
    let nn = AltMap::from_matrix(n);
    let fnb = fn_bracket(l, &nn, &nn)?;
    if fnb.is_zero() != torsion.is_zero() {
        report.fail("maurer-cartan", &[], "definition and [N,N]_FN disagree");
    }
    Ok(report)
}

/// `[x, y]^N = [Nx, y] + [x, Ny] - N[x, y]`, without checking `N`.
pub fn deformed_bracket_unchecked<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>) -> LieAlgebra<T> {
    let d = l.dim();
    let mut out = LieAlgebra::abelian(d);
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (unit(d, i), unit(d, j));
            let v =
                vsub(&vadd(&l.bracket(&n.apply(&x), &y), &l.bracket(&x, &n.apply(&y))), &n.apply(&l.bracket(&x, &y)));
            for (k, c) in v.into_iter().enumerate() {
                out.set_constant(i, j, k, c);
            }
        }
    }
    out
}

/// The deformed Lie algebra of a verified pair.
pub fn deformed_bracket<T: Scalar>(pair: &NijenhuisPair<T>) -> LieAlgebra<T> {
    deformed_bracket_unchecked(&pair.algebra, &pair.n)
}

/// Checks that `N^k` is Nijenhuis, that `N^l` is Nijenhuis on the `N^k`
/// deformation, and that deforming twice equals deforming by `N^{k+l}`.
pub fn iterated_deformation_check<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>, k: usize, lp: usize) -> Result<Report> {
    check_operator("N", n, l.dim(), l.dim())?;
    let (nk, nl) = (n.pow(k), n.pow(lp));
    let mut report = Report::new();
    report.absorb_prefixed("power", check_nijenhuis(l, &nk)?);
    let gk = deformed_bracket_unchecked(l, &nk);
    report.absorb_prefixed("power-on-deformed", check_nijenhuis(&gk, &nl)?);
    let twice = deformed_bracket_unchecked(&gk, &nl);
    let once = deformed_bracket_unchecked(l, &n.pow(k + lp));
    let d = l.dim();
    for i in 0..d {
        for j in i + 1..d {
            report.check("composition", &[i, j], &vsub(&twice.bracket_basis(i, j), &once.bracket_basis(i, j)));
        }
    }
    Ok(report)
}

fn check_cochain<T: Scalar>(l: &LieAlgebra<T>, f: &AltMap<T>) -> Result<()> {
    if f.dim() != l.dim() || f.target() != l.dim() {
        return shape("cochain is not valued in the algebra");
    }
    Ok(())
}

/// The differential `d_N` on `Hom(∧ⁿg, g)`, including degree zero.
pub fn d_n<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    check_operator("N", n, l.dim(), l.dim())?;
    check_cochain(l, f)?;
    let deformed = deformed_bracket_unchecked(l, n);
    let ads: Vec<Matrix<T>> = (0..l.dim()).map(|i| l.ad_of(&n.column(i))).collect();
    let twisted = alternating_differential(f, |i, w| ads[i].apply(w), |i, j| deformed.bracket_basis(i, j));
    let plain = alternating_differential(f, |i, w| l.ad(i).apply(w), |i, j| l.bracket_basis(i, j));
    Ok(twisted.sub(&plain.compose_left(n)))
}

/// Dimensions of `H^n(N)` for `n ≤ up_to`.
pub fn nijenhuis_cohomology<T: Scalar>(
    l: &LieAlgebra<T>,
    n: &Matrix<T>,
    up_to: usize,
) -> Result<CochainComplexReport<T>> {
    check_operator("N", n, l.dim(), l.dim())?;
    let d = l.dim();
    let dims: Vec<usize> = (0..=up_to + 1).map(|k| binomial(d, k) * d).collect();
    let ds = (0..=up_to)
        .map(|k| operator_matrix(k, d, d, dims[k + 1], |f| d_n(l, n, f).expect("shapes checked").coeffs().to_vec()))
        .collect();
    Ok(CochainComplexReport::new(dims, ds))
}

/// `Φ_n(f) = (-1)^{n+1} δ_CE f` with adjoint coefficients.
pub fn chain_map_phi<T: Scalar>(l: &LieAlgebra<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    Ok(ce_adjoint(l, f)?.scale(&parity_sign(f.arity() as i64 + 1)))
}

/// `δ^N_CE(Φ_n f) - Φ_{n+1}(d_N f)`; zero for every `f` when `N` is Nijenhuis.
pub fn chain_map_defect<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    let deformed = deformed_bracket_unchecked(l, n);
    let lhs = ce_adjoint(&deformed, &chain_map_phi(l, f)?)?;
    let rhs = chain_map_phi(l, &d_n(l, n, f)?)?;
    Ok(lhs.sub(&rhs))
}

/// Basis pairs violating `[ru, rv] = r(ρ_{ru} v - ρ_{rv} u)`.
pub fn check_relative_rb<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>, r: &Matrix<T>) -> Result<Report> {
    if rep.dim_g() != l.dim() {
        return shape("representation does not match the algebra");
    }
    check_operator("r", r, l.dim(), rep.dim_v())?;
    let m = rep.dim_v();
    let mut report = Report::new();
    for i in 0..m {
        for j in i + 1..m {
            let (u, v) = (unit(m, i), unit(m, j));
            let (ru, rv) = (r.apply(&u), r.apply(&v));
            let rhs = r.apply(&vsub(&rep.act(&ru, &v), &rep.act(&rv, &u)));
            report.check("relative-rota-baxter", &[i, j], &vsub(&l.bracket(&ru, &rv), &rhs));
        }
    }
    Ok(report)
}

/// The operator `r̃(x, v) = (r v, 0)` on `g ⋉ V`.
pub fn lift_operator<T: Scalar>(r: &Matrix<T>) -> Matrix<T> {
    let (d, m) = (r.rows(), r.cols());
    let mut out = Matrix::zeros(d + m, d + m);
    for i in 0..d {
        for j in 0..m {
            out.set(i, d + j, r.get(i, j).clone());
        }
    }
    out
}

/// The semidirect product together with the lifted operator. Fails unless
/// `r` is a relative Rota–Baxter operator.
pub fn lift_rb<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>, r: &Matrix<T>) -> Result<NijenhuisPair<T>> {
    if !check_relative_rb(l, rep, r)?.is_ok() {
        return precondition("r is not a relative Rota-Baxter operator");
    }
    NijenhuisPair::new(semidirect(l, rep)?, lift_operator(r))
}

/// The differential of the complex `Hom(∧ⁿV, g)` of a relative Rota–Baxter operator.
pub fn d_r<T: Scalar>(l: &LieAlgebra<T>, rep: &Representation<T>, r: &Matrix<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    check_operator("r", r, l.dim(), rep.dim_v())?;
    if f.dim() != rep.dim_v() || f.target() != l.dim() {
        return shape("cochain must map ∧ⁿV into g");
    }
    let m = rep.dim_v();
    let rv: Vec<Vec<T>> = (0..m).map(|i| r.column(i)).collect();
    let act = |i: usize, w: &[T]| {
        let v = unit(m, i);
        vadd(&l.bracket(&rv[i], w), &r.apply(&rep.act(w, &v)))
    };
    let bracket = |i: usize, j: usize| vsub(&rep.act(&rv[i], &unit(m, j)), &rep.act(&rv[j], &unit(m, i)));
    Ok(alternating_differential(f, act, bracket))
}

/// Projection `g ⊕ V -> V` and inclusion `g -> g ⊕ V` style block matrices.
pub(crate) fn block_maps<T: Scalar>(d: usize, m: usize) -> (Matrix<T>, Matrix<T>, Matrix<T>, Matrix<T>) {
    let mut pi_g = Matrix::zeros(d, d + m);
    let mut pi_v = Matrix::zeros(m, d + m);
    for i in 0..d {
        pi_g.set(i, i, T::one());
    }
    for i in 0..m {
        pi_v.set(i, d + i, T::one());
    }
    let (iota_g, iota_v) = (pi_g.transpose(), pi_v.transpose());
    (pi_g, pi_v, iota_g, iota_v)
}

/// Compares `d_{r̃}` on the embedded copy of `f` with `d_r f`. Returns the
/// part of `d_{r̃} f` outside `Hom(∧V, g)` and the difference on it.
pub fn lift_subcomplex_defect<T: Scalar>(
    l: &LieAlgebra<T>,
    rep: &Representation<T>,
    r: &Matrix<T>,
    f: &AltMap<T>,
) -> Result<(AltMap<T>, AltMap<T>)> {
    let (d, m) = (l.dim(), rep.dim_v());
    let big = semidirect(l, rep)?;
    let (pi_g, pi_v, iota_g, iota_v) = block_maps::<T>(d, m);
    let embedded = f.pullback(&pi_v).compose_left(&iota_g);
    let image = d_n(&big, &lift_operator(r), &embedded)?;
    let restricted = image.pullback(&iota_v).compose_left(&pi_g);
    let outside = image.sub(&restricted.pullback(&pi_v).compose_left(&iota_g));
    Ok((outside, restricted.sub(&d_r(l, rep, r, f)?)))
}

/// `N_t = N + t N_1 + ... + t^n N_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderNDeformation<T> {
    pub n: Matrix<T>,
    pub terms: Vec<Matrix<T>>,
}

impl<T: Scalar> OrderNDeformation<T> {
    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `N_i`, with `N_0 = N`.
    pub fn term(&self, i: usize) -> &Matrix<T> {
        if i == 0 {
            &self.n
        } else {
            &self.terms[i - 1]
        }
    }
}

/// `-½ Σ_{i+j=p, i,j≥1} [N_i, N_j]_FN` for the terms available.
fn half_sum<T: Scalar>(l: &LieAlgebra<T>, def: &OrderNDeformation<T>, p: usize) -> Result<AltMap<T>> {
    let d = l.dim();
    let mut acc = AltMap::zeros(2, d, d);
    for i in 1..p {
        let j = p - i;
        acc = acc.add(&fn_bracket(l, &AltMap::from_matrix(def.term(i)), &AltMap::from_matrix(def.term(j)))?);
    }
    Ok(acc.scale(&-T::half()))
}

/// Residuals of `d_N(N_p) = -½ Σ [N_i, N_j]_FN` for `1 ≤ p ≤ n`, plus the
/// Nijenhuis condition on `N` itself under the label `base`.
pub fn check_order_n<T: Scalar>(l: &LieAlgebra<T>, def: &OrderNDeformation<T>) -> Result<Report> {
    check_operator("N", &def.n, l.dim(), l.dim())?;
    for (i, t) in def.terms.iter().enumerate() {
        check_operator(&format!("N_{}", i + 1), t, l.dim(), l.dim())?;
    }
    let mut report = Report::new();
    report.absorb_prefixed("base", check_nijenhuis(l, &def.n)?);
    for p in 1..=def.order() {
        let lhs = d_n(l, &def.n, &AltMap::from_matrix(def.term(p)))?;
        let res = lhs.sub(&half_sum(l, def, p)?);
        report.check("order", &[p], res.coeffs());
    }
    Ok(report)
}

/// The obstruction to extending an order-`n` deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction<T> {
    pub ob: AltMap<T>,
    /// `d_N(Ob) = 0`.
    pub is_cocycle: bool,
    /// Some `N_{n+1}` with `d_N(N_{n+1}) = Ob`.
    pub witness: Option<Matrix<T>>,
    /// Whether a rank comparison by fraction-free elimination agrees with
    /// the outcome of the solve.
    pub rank_test_agrees: bool,
}

pub fn obstruction<T: Scalar>(l: &LieAlgebra<T>, def: &OrderNDeformation<T>) -> Result<Obstruction<T>> {
    if !check_order_n(l, def)?.is_ok() {
        return precondition("not a deformation of the stated order");
    }
    let d = l.dim();
    let ob = half_sum(l, def, def.order() + 1)?;
    let is_cocycle = d_n(l, &def.n, &ob)?.is_zero();
    let d1 = operator_matrix(1, d, d, binomial(d, 2) * d, |f| d_n(l, &def.n, f).expect("shapes").coeffs().to_vec());
    let witness =
        solve(&d1, ob.coeffs()).map(|x| AltMap::from_coeffs(1, d, d, x).expect("solution length").to_matrix());
    let aug = d1.hstack(&Matrix::from_columns(d1.rows(), &[ob.coeffs().to_vec()]));
    let rank_test_agrees = (rank(&aug) == rank(&d1)) == witness.is_some();
    Ok(Obstruction { ob, is_cocycle, witness, rank_test_agrees })
}
