//! The mapping-cone complex of a Nijenhuis Lie algebra with coefficients in a
//! Nijenhuis representation, and the long exact sequence around it.

use serde::Serialize;

use crate::combinat::{binomial, combinations};
use crate::error::{precondition, shape, Result};
use crate::lie::{check_nijenhuis_rep, check_operator, check_rep_shape, deformed_rep, semidirect, unit, NijenhuisRep};
use crate::linalg::{kernel_basis, rank, rank_gauss, solve, Matrix};
use crate::multilinear::{alternating_differential, ce_differential, operator_matrix, AltMap, CochainComplexReport};
use crate::nijenhuis::{block_maps, d_n, deformed_bracket_unchecked, NijenhuisPair};
use crate::report::Report;
use crate::scalar::{parity_sign, Scalar};

fn check_module<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>) -> Result<()> {
    check_rep_shape(&pair.algebra, &nrep.rep)?;
    check_operator("S", &nrep.s, nrep.dim_v(), nrep.dim_v())
}

fn check_valued<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>, f: &AltMap<T>) -> Result<()> {
    check_module(pair, nrep)?;
    if f.dim() != pair.dim() || f.target() != nrep.dim_v() {
        return shape(format!(
            "cochain must map ∧ⁿk^{} into k^{}, got k^{} -> k^{}",
            pair.dim(),
            nrep.dim_v(),
            f.dim(),
            f.target()
        ));
    }
    Ok(())
}

fn require_valid<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>) -> Result<()> {
    if !check_nijenhuis_rep(&pair.algebra, &pair.n, nrep)?.is_ok() {
        return precondition("not a Nijenhuis representation");
    }
    Ok(())
}

/// `∂^{N,S}` by summing over the subsets of arguments left untouched by `N`.
pub fn partial_ns<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    check_valued(pair, nrep, f)?;
    let (d, n) = (pair.dim(), f.arity());
    let ncols: Vec<Vec<T>> = (0..d).map(|i| pair.n.column(i)).collect();
    let s_pows: Vec<Matrix<T>> = (0..=n).map(|k| nrep.s.pow(k)).collect();
    Ok(AltMap::from_fn(n, d, f.target(), |x| {
        let mut out = vec![T::zero(); f.target()];
        for k in 0..=n {
            let sign: T = parity_sign(k as i64);
            for subset in combinations(n, k) {
                let args: Vec<Vec<T>> =
                    (0..n).map(|p| if subset.contains(&p) { unit(d, x[p]) } else { ncols[x[p]].clone() }).collect();
                let v = s_pows[k].apply(&f.eval(&args));
                for (o, vi) in out.iter_mut().zip(v) {
                    *o = o.clone() + sign.clone() * vi;
                }
            }
        }
        out
    }))
}

/// `∂^{N,S}` by the recursion `g_p = g_{p-1} ∘ (N in slot p) - S ∘ g_{p-1}`
/// on full (not yet alternating) tensors.
pub fn partial_ns_recursive<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    f: &AltMap<T>,
) -> Result<AltMap<T>> {
    check_valued(pair, nrep, f)?;
    let (d, n, m) = (pair.dim(), f.arity(), f.target());
    let size = d.pow(n as u32);
    let tuple = |mut idx: usize| -> Vec<usize> {
        let mut t = vec![0; n];
        for p in (0..n).rev() {
            t[p] = idx % d;
            idx /= d;
        }
        t
    };
    let index = |t: &[usize]| t.iter().fold(0, |acc, &i| acc * d + i);
    let mut g: Vec<Vec<T>> = (0..size).map(|i| f.on_basis(&tuple(i))).collect();
    for p in 0..n {
        let next: Vec<Vec<T>> = (0..size)
            .map(|i| {
                let t = tuple(i);
                let mut acc = vec![T::zero(); m];
                for r in 0..d {
                    let c = pair.n.get(r, t[p]);
                    if c.is_zero() {
                        continue;
                    }
                    let mut u = t.clone();
                    u[p] = r;
                    for (a, b) in acc.iter_mut().zip(&g[index(&u)]) {
                        *a = a.clone() + c.clone() * b.clone();
                    }
                }
                let sg = nrep.s.apply(&g[i]);
                acc.into_iter().zip(sg).map(|(a, b)| a - b).collect()
            })
            .collect();
        g = next;
    }
    Ok(AltMap::from_fn(n, d, m, |t| g[index(t)].clone()))
}

/// `d_{N,S} f`: the twisted alternating differential minus `S` applied to the
/// Chevalley–Eilenberg differential.
pub fn d_ns<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>, f: &AltMap<T>) -> Result<AltMap<T>> {
    check_valued(pair, nrep, f)?;
    let l = &pair.algebra;
    let deformed = deformed_bracket_unchecked(l, &pair.n);
    let rho_n: Vec<Matrix<T>> = (0..l.dim()).map(|i| nrep.rep.rho_of(&pair.n.column(i))).collect();
    let twisted = alternating_differential(f, |i, w| rho_n[i].apply(w), |i, j| deformed.bracket_basis(i, j));
    let plain = ce_differential(l, &nrep.rep, f)?;
    Ok(twisted.sub(&plain.compose_left(&nrep.s)))
}

/// Embeds `f` into the semidirect product, applies `d_{N⊕S}` there and
/// restricts. Returns the part of the image outside `Hom(∧g, V)` and the
/// restriction.
pub fn d_ns_via_semidirect<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    f: &AltMap<T>,
) -> Result<(AltMap<T>, AltMap<T>)> {
    check_valued(pair, nrep, f)?;
    let (d, m) = (pair.dim(), nrep.dim_v());
    let big = semidirect(&pair.algebra, &nrep.rep)?;
    let big_n = pair.n.direct_sum(&nrep.s);
    let (pi_g, pi_v, iota_g, iota_v) = block_maps::<T>(d, m);
    let embedded = f.pullback(&pi_g).compose_left(&iota_v);
    let image = d_n(&big, &big_n, &embedded)?;
    let restricted = image.pullback(&iota_g).compose_left(&pi_v);
    let outside = image.sub(&restricted.pullback(&pi_g).compose_left(&iota_v));
    Ok((outside, restricted))
}

/// `d_{N,S} ∂^{N,S} f - ∂^{N,S} δ_CE f`.
pub fn partial_chain_defect<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    f: &AltMap<T>,
) -> Result<AltMap<T>> {
    let lhs = d_ns(pair, nrep, &partial_ns(pair, nrep, f)?)?;
    let rhs = partial_ns(pair, nrep, &ce_differential(&pair.algebra, &nrep.rep, f)?)?;
    Ok(lhs.sub(&rhs))
}

/// `δ^{N,S}_CE Φ_n f - Φ_{n+1} d_{N,S} f`, where the first differential is
/// that of the deformed bracket acting through `ρ¹`.
pub fn ns_chain_map_defect<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    f: &AltMap<T>,
) -> Result<AltMap<T>> {
    check_valued(pair, nrep, f)?;
    let l = &pair.algebra;
    let phi = |g: &AltMap<T>| -> Result<AltMap<T>> {
        Ok(ce_differential(l, &nrep.rep, g)?.scale(&parity_sign(g.arity() as i64 + 1)))
    };
    let deformed = deformed_bracket_unchecked(l, &pair.n);
    let rho1 = deformed_rep(l, &pair.n, nrep, 1, 1)?.rep;
    let lhs = ce_differential(&deformed, &rho1, &phi(f)?)?;
    let rhs = phi(&d_ns(pair, nrep, f)?)?;
    Ok(lhs.sub(&rhs))
}

/// An element of `C^n_NLie`: `Hom(g, V)` in degree one and
/// `Hom(∧ⁿg, V) ⊕ Hom(∧ⁿ⁻¹g, V)` above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCochain<T> {
    pub degree: usize,
    pub chi: AltMap<T>,
    /// The lower-arity component, absent in degree one.
    pub f: Option<AltMap<T>>,
}

impl<T: Scalar> ConeCochain<T> {
    pub fn new(chi: AltMap<T>, f: Option<AltMap<T>>) -> Result<Self> {
        let degree = chi.arity();
        match (&f, degree) {
            (_, 0) => shape("the cone complex is zero in degree 0"),
            (None, 1) => Ok(Self { degree, chi, f }),
            (Some(_), 1) => shape("degree-one cochains have no second component"),
            (None, _) => shape("cochains of degree at least two need both components"),
            (Some(g), _) => {
                if g.arity() + 1 != degree || g.dim() != chi.dim() || g.target() != chi.target() {
                    return shape("components have inconsistent arities or spaces");
                }
                Ok(Self { degree, chi, f })
            }
        }
    }

    pub fn zeros(degree: usize, dim: usize, target: usize) -> Self {
        let f = (degree >= 2).then(|| AltMap::zeros(degree - 1, dim, target));
        Self { degree, chi: AltMap::zeros(degree, dim, target), f }
    }

    /// Coordinates `[χ..., F...]`.
    pub fn to_vec(&self) -> Vec<T> {
        let mut v = self.chi.coeffs().to_vec();
        if let Some(f) = &self.f {
            v.extend_from_slice(f.coeffs());
        }
        v
    }

    pub fn from_vec(degree: usize, dim: usize, target: usize, v: &[T]) -> Result<Self> {
        let split = binomial(dim, degree) * target;
        if v.len() != cone_dim(degree, dim, target) {
            return shape("coordinate vector has the wrong length");
        }
        let chi = AltMap::from_coeffs(degree, dim, target, v[..split].to_vec())?;
        let f =
            if degree >= 2 { Some(AltMap::from_coeffs(degree - 1, dim, target, v[split..].to_vec())?) } else { None };
        Ok(Self { degree, chi, f })
    }
}

/// `dim C^n_NLie`.
pub fn cone_dim(n: usize, dim: usize, target: usize) -> usize {
    match n {
        0 => 0,
        1 => dim * target,
        _ => (binomial(dim, n) + binomial(dim, n - 1)) * target,
    }
}

/// `δ_NLie`.
pub fn nlie_differential<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    c: &ConeCochain<T>,
) -> Result<ConeCochain<T>> {
    check_valued(pair, nrep, &c.chi)?;
    let l = &pair.algebra;
    let chi = ce_differential(l, &nrep.rep, &c.chi)?;
    let part = partial_ns(pair, nrep, &c.chi)?;
    let f = match &c.f {
        None if c.degree == 1 => part.neg(),
        Some(f) if c.degree >= 2 => d_ns(pair, nrep, f)?.add(&part.scale(&parity_sign(c.degree as i64))),
        _ => return shape("cochain components do not match its degree"),
    };
    Ok(ConeCochain { degree: c.degree + 1, chi, f: Some(f) })
}

/// The matrix of `δ_NLie: C^n -> C^{n+1}` in cochain coordinates.
pub fn nlie_differential_matrix<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>, n: usize) -> Matrix<T> {
    let (d, m) = (pair.dim(), nrep.dim_v());
    let cols: Vec<Vec<T>> = (0..cone_dim(n, d, m))
        .map(|j| {
            let mut e = vec![T::zero(); cone_dim(n, d, m)];
            e[j] = T::one();
            let c = ConeCochain::from_vec(n, d, m, &e).expect("length");
            nlie_differential(pair, nrep, &c).expect("shapes checked").to_vec()
        })
        .collect();
    Matrix::from_columns(cone_dim(n + 1, d, m), &cols)
}

/// Cohomology of the cone complex for degrees `0..=up_to`.
pub fn nlie_cohomology<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    up_to: usize,
) -> Result<CochainComplexReport<T>> {
    check_module(pair, nrep)?;
    require_valid(pair, nrep)?;
    let (d, m) = (pair.dim(), nrep.dim_v());
    let dims: Vec<usize> = (0..=up_to + 1).map(|n| cone_dim(n, d, m)).collect();
    let mut ds = vec![Matrix::zeros(dims[1], 0)];
    ds.extend((1..=up_to).map(|n| nlie_differential_matrix(pair, nrep, n)));
    Ok(CochainComplexReport::new(dims, ds))
}

fn ns_matrix<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>, n: usize) -> Matrix<T> {
    let (d, m) = (pair.dim(), nrep.dim_v());
    operator_matrix(n, d, m, binomial(d, n + 1) * m, |f| d_ns(pair, nrep, f).expect("shapes checked").coeffs().to_vec())
}

fn ce_matrix<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>, n: usize) -> Matrix<T> {
    let (d, m) = (pair.dim(), nrep.dim_v());
    operator_matrix(n, d, m, binomial(d, n + 1) * m, |f| {
        ce_differential(&pair.algebra, &nrep.rep, f).expect("shapes checked").coeffs().to_vec()
    })
}

/// Cohomology `H^n(N; S)` of `d_{N,S}` for `n ≤ up_to`.
pub fn ns_cohomology<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    up_to: usize,
) -> Result<CochainComplexReport<T>> {
    check_module(pair, nrep)?;
    require_valid(pair, nrep)?;
    let (d, m) = (pair.dim(), nrep.dim_v());
    let dims: Vec<usize> = (0..=up_to + 1).map(|n| binomial(d, n) * m).collect();
    let ds = (0..=up_to).map(|n| ns_matrix(pair, nrep, n)).collect();
    Ok(CochainComplexReport::new(dims, ds))
}

/// Residuals of the two 2-cocycle identities: `ce-closed` on basis triples
/// and `mixed` (`d_{N,S} F + ∂^{N,S} χ = 0`) on basis pairs.
pub fn certify_2cocycle<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    chi: &AltMap<T>,
    f: &AltMap<T>,
) -> Result<Report> {
    check_valued(pair, nrep, chi)?;
    check_valued(pair, nrep, f)?;
    if chi.arity() != 2 || f.arity() != 1 {
        return shape("a 2-cochain is a pair (arity 2, arity 1)");
    }
    let d = pair.dim();
    let closed = ce_differential(&pair.algebra, &nrep.rep, chi)?;
    let mixed = d_ns(pair, nrep, f)?.add(&partial_ns(pair, nrep, chi)?);
    let mut report = Report::new();
    for t in combinations(d, 3) {
        report.check("ce-closed", &t, closed.get(&t));
    }
    for t in combinations(d, 2) {
        report.check("mixed", &t, mixed.get(&t));
    }
    Ok(report)
}

/// The matrix of `φ ↦ δ_NLie φ` from `Hom(g, V)` into `C²_NLie`.
pub fn coboundary_matrix<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>) -> Result<Matrix<T>> {
    check_module(pair, nrep)?;
    Ok(nlie_differential_matrix(pair, nrep, 1))
}

/// Some `φ` with `χ = δ_CE φ` and `F = S∘φ - φ∘N`, or `None` when the class
/// of `(χ, F)` is nonzero.
pub fn certify_2coboundary<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    chi: &AltMap<T>,
    f: &AltMap<T>,
) -> Result<Option<Matrix<T>>> {
    if !certify_2cocycle(pair, nrep, chi, f)?.is_ok() {
        return precondition("not a 2-cocycle");
    }
    let (d, m) = (pair.dim(), nrep.dim_v());
    let target = ConeCochain::new(chi.clone(), Some(f.clone()))?.to_vec();
    Ok(solve(&nlie_differential_matrix(pair, nrep, 1), &target)
        .map(|x| AltMap::from_coeffs(1, d, m, x).expect("solution length").to_matrix()))
}

/// Exactness of `0 → A^n → C^n → B^n → 0` in one degree, where
/// `A^n = Hom(∧ⁿ⁻¹g, V)` and `B^n = Hom(∧ⁿg, V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortExactRow {
    pub degree: usize,
    pub i_injective: bool,
    pub p_surjective: bool,
    pub ker_p_is_im_i: bool,
    pub i_is_chain_map: bool,
    pub p_is_chain_map: bool,
}

/// The window `H^{n-1}(N;S) → H^n_NLie → H^n_CE → H^n(N;S)` of the long
/// exact sequence, with ranks of the induced maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowRow {
    pub degree: usize,
    pub h_ns_before: usize,
    pub h_nlie: usize,
    pub h_ce: usize,
    pub h_ns: usize,
    pub rank_i: usize,
    pub rank_p: usize,
    pub rank_connecting: usize,
    pub exact_at_nlie: bool,
    pub exact_at_ce: bool,
    pub compositions_vanish: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequenceReport {
    pub short_exact: Vec<ShortExactRow>,
    pub windows: Vec<WindowRow>,
    pub eliminations_agree: bool,
}

impl ExactSequenceReport {
    pub fn is_ok(&self) -> bool {
        self.eliminations_agree
            && self
                .short_exact
                .iter()
                .all(|r| r.i_injective && r.p_surjective && r.ker_p_is_im_i && r.i_is_chain_map && r.p_is_chain_map)
            && self.windows.iter().all(|w| w.exact_at_nlie && w.exact_at_ce && w.compositions_vanish)
    }
}

/// Rank of the map induced on cohomology by `f`, given a basis `z` of the
/// source cocycles and a spanning set `b` of the target coboundaries.
fn induced_rank<T: Scalar>(f: &Matrix<T>, z: &Matrix<T>, b: &Matrix<T>) -> usize {
    rank(&b.hstack(&f.mul(z))) - rank(b)
}

/// Builds `i`, `p` and the connecting map degreewise and checks exactness
/// for degrees `2..=up_to`, plus the cohomology windows for `3..=up_to`.
pub fn exact_sequence_report<T: Scalar>(
    pair: &NijenhuisPair<T>,
    nrep: &NijenhuisRep<T>,
    up_to: usize,
) -> Result<ExactSequenceReport> {
    check_module(pair, nrep)?;
    require_valid(pair, nrep)?;
    let (d, m) = (pair.dim(), nrep.dim_v());
    let b_dim = |n: usize| binomial(d, n) * m;
    let a_dim = |n: usize| if n == 0 { 0 } else { binomial(d, n - 1) * m };
    // Degree-indexed matrices for n in 0..=up_to+1 (differentials out of degree n).
    let top = up_to + 1;
    let dc: Vec<Matrix<T>> = (0..=top)
        .map(|n| if n == 0 { Matrix::zeros(cone_dim(1, d, m), 0) } else { nlie_differential_matrix(pair, nrep, n) })
        .collect();
    let db: Vec<Matrix<T>> = (0..=top).map(|n| ce_matrix(pair, nrep, n)).collect();
    let da: Vec<Matrix<T>> =
        (0..=top).map(|n| if n == 0 { Matrix::zeros(a_dim(1), 0) } else { ns_matrix(pair, nrep, n - 1) }).collect();
    let i_map = |n: usize| -> Matrix<T> {
        let mut out = Matrix::zeros(cone_dim(n, d, m), a_dim(n));
        if n >= 2 {
            for j in 0..a_dim(n) {
                out.set(b_dim(n) + j, j, T::one());
            }
        }
        out
    };
    let p_map = |n: usize| -> Matrix<T> {
        let mut out = Matrix::zeros(b_dim(n), cone_dim(n, d, m));
        if n >= 1 {
            for j in 0..b_dim(n) {
                out.set(j, j, T::one());
            }
        }
        out
    };
    let mut eliminations_agree = true;
    let mut short_exact = Vec::new();
    for n in 2..=up_to {
        let (i, p) = (i_map(n), p_map(n));
        let ri = rank(&i);
        let rp = rank(&p);
        eliminations_agree &= ri == rank_gauss(&i) && rp == rank_gauss(&p);
        let pi = p.mul(&i);
        let ker_p = cone_dim(n, d, m) - rp;
        short_exact.push(ShortExactRow {
            degree: n,
            i_injective: ri == a_dim(n),
            p_surjective: rp == b_dim(n),
            ker_p_is_im_i: pi.is_zero() && ker_p == ri,
            i_is_chain_map: dc[n].mul(&i).sub(&i_map(n + 1).mul(&da[n])).is_zero(),
            p_is_chain_map: p_map(n + 1).mul(&dc[n]).sub(&db[n].mul(&p)).is_zero(),
        });
    }
    let coboundaries = |ds: &Vec<Matrix<T>>, n: usize, rows: usize| -> Matrix<T> {
        if n == 0 {
            Matrix::zeros(rows, 0)
        } else {
            ds[n - 1].clone()
        }
    };
    let mut windows = Vec::new();
    for n in 3..=up_to {
        // Connecting map B^n → A^{n+1}: lift χ to (χ, 0), apply δ_NLie, read the F part.
        let lift = {
            let mut s = Matrix::zeros(cone_dim(n, d, m), b_dim(n));
            for j in 0..b_dim(n) {
                s.set(j, j, T::one());
            }
            s
        };
        let mut read_f = Matrix::zeros(a_dim(n + 1), cone_dim(n + 1, d, m));
        for j in 0..a_dim(n + 1) {
            read_f.set(j, b_dim(n + 1) + j, T::one());
        }
        let connecting = read_f.mul(&dc[n]).mul(&lift);

        let za_before = kernel_basis(&da[n]);
        let zc = kernel_basis(&dc[n]);
        let zb = kernel_basis(&db[n]);
        let za = kernel_basis(&da[n + 1]);
        let bc = coboundaries(&dc, n, cone_dim(n, d, m));
        let bb = coboundaries(&db, n, b_dim(n));
        let ba_next = da[n].clone();
        let ba = coboundaries(&da, n, a_dim(n));

        let h = |z: &Matrix<T>, b: &Matrix<T>| z.cols() - rank(b);
        let h_ns_before = h(&za_before, &ba);
        let h_nlie = h(&zc, &bc);
        let h_ce = h(&zb, &bb);
        let h_ns = h(&za, &ba_next);
        let rank_i = induced_rank(&i_map(n), &za_before, &bc);
        let rank_p = induced_rank(&p_map(n), &zc, &bb);
        let rank_connecting = induced_rank(&connecting, &zb, &ba_next);
        let in_span = |b: &Matrix<T>, v: &Matrix<T>| rank(&b.hstack(v)) == rank(b);
        let compositions_vanish = in_span(&bb, &p_map(n).mul(&i_map(n)).mul(&za_before))
            && in_span(&ba_next, &connecting.mul(&p_map(n)).mul(&zc));
        windows.push(WindowRow {
            degree: n,
            h_ns_before,
            h_nlie,
            h_ce,
            h_ns,
            rank_i,
            rank_p,
            rank_connecting,
            exact_at_nlie: rank_i + rank_p == h_nlie,
            exact_at_ce: rank_p + rank_connecting == h_ce,
            compositions_vanish,
        });
    }
    for ds in [&dc, &db, &da] {
        eliminations_agree &= ds.iter().all(|x| rank(x) == rank_gauss(x));
    }
    Ok(ExactSequenceReport { short_exact, windows, eliminations_agree })
}

/// Alternating sums of cohomology dimensions over the whole (finite) range:
/// `(cone, Chevalley–Eilenberg, d_{N,S})`.
pub fn euler_characteristics<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>) -> Result<(i64, i64, i64)> {
    let top = pair.dim() + 1;
    let chi = |r: &CochainComplexReport<T>| -> i64 {
        r.cohomology_dims().iter().enumerate().map(|(n, &h)| if n % 2 == 0 { h as i64 } else { -(h as i64) }).sum()
    };
    let c = nlie_cohomology(pair, nrep, top)?;
    let b = crate::multilinear::ce_cohomology(&pair.algebra, &nrep.rep, top)?;
    let a = ns_cohomology(pair, nrep, top)?;
    Ok((chi(&c), chi(&b), chi(&a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lie::{adjoint_rep, Representation};
    use crate::nijenhuis::nijenhuis_cohomology;
    use crate::samples;
    use num::{BigRational, Zero};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn adjoint(l: crate::lie::LieAlgebra<Q>, n: Matrix<Q>) -> (NijenhuisPair<Q>, NijenhuisRep<Q>) {
        let rep = NijenhuisRep::adjoint(&l, &n);
        (NijenhuisPair::new(l, n).unwrap(), rep)
    }

    #[test]
    fn partial_degree_one_and_trivial_cases() {
        let (p, r) = adjoint(fixtures::aff1(), Matrix::identity(2));
        let f = AltMap::from_matrix(&Matrix::from_i64_rows(&[&[1, 2], &[3, 4]]));
        assert!(partial_ns(&p, &r, &f).unwrap().is_zero());
        let v = AltMap::from_vector(&[q(3), q(-1)], 2);
        assert_eq!(partial_ns(&p, &r, &v).unwrap(), v);
        let (p0, r0) = adjoint(fixtures::a2(), Matrix::zeros(2, 2));
        for arity in 1..=2 {
            let f = AltMap::from_fn(arity, 2, 2, |t| vec![q(t[0] as i64 + 1), q(2)]);
            assert!(partial_ns(&p0, &r0, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn partial_on_aff1_by_hand() {
        // With S = N = diag(a, b), every f(e1, e2) on an eigenvector gives
        // ab - a(a + b) + a² = 0. A non-diagonal S on the trivial module does not.
        let (a, b) = (q(2), q(3));
        let (p, r) = adjoint(fixtures::aff1(), fixtures::ndiag(a.clone(), b.clone()));
        let f = AltMap::from_fn(2, 2, 2, |_| vec![q(1), q(0)]);
        assert!(partial_ns(&p, &r, &f).unwrap().is_zero());
        let pair = NijenhuisPair::new(fixtures::a2(), fixtures::ndiag(a.clone(), b.clone())).unwrap();
        let s = Matrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        let nrep = NijenhuisRep { rep: Representation::trivial(2, 2), s: s.clone() };
        let g = AltMap::from_fn(2, 2, 2, |_| vec![q(0), q(1)]);
        // ab e2 - S((a + b) e2) + S² e2 = ab e2 - (a + b) e1.
        let out = partial_ns(&pair, &nrep, &g).unwrap();
        assert_eq!(out.get(&[0, 1]), &[-(a.clone() + b.clone()), a * b][..]);
        assert_eq!(partial_ns_recursive(&pair, &nrep, &g).unwrap(), out);
    }

    #[test]
    fn d_ns_examples() {
        let (p, r) = adjoint(fixtures::aff1(), fixtures::ndiag(q(1), q(0)));
        let e2 = AltMap::from_vector(&[q(0), q(1)], 2);
        let direct = d_ns(&p, &r, &e2).unwrap();
        let (outside, restricted) = d_ns_via_semidirect(&p, &r, &e2).unwrap();
        assert!(outside.is_zero());
        assert_eq!(direct, restricted);
        // ρ_{N e1} e2 - S ρ_{e1} e2 = e2 - 0.
        assert_eq!(direct.get(&[0]), &[q(0), q(1)][..]);
        assert_eq!(direct.get(&[1]), &[q(0), q(0)][..]);
        assert_eq!(direct, d_n(&p.algebra, &p.n, &e2).unwrap());
        let ab = NijenhuisPair::new(fixtures::a2(), Matrix::identity(2)).unwrap();
        let triv = NijenhuisRep { rep: Representation::trivial(2, 3), s: Matrix::identity(3) };
        let f = AltMap::from_fn(1, 2, 3, |t| vec![q(t[0] as i64), q(1), q(-2)]);
        assert!(d_ns(&ab, &triv, &f).unwrap().is_zero());
    }

    #[test]
    fn adjoint_module_matches_nijenhuis_complex() {
        let (p, r) = adjoint(fixtures::h3(), fixtures::nnilp());
        let a = ns_cohomology(&p, &r, 3).unwrap();
        let b = nijenhuis_cohomology(&p.algebra, &p.n, 3).unwrap();
        assert_eq!(a.differentials, b.differentials);
    }

    #[test]
    fn degree_one_image_of_n() {
        let (p, r) = adjoint(fixtures::aff1(), fixtures::ndiag(q(2), q(-1)));
        let c = ConeCochain::new(AltMap::from_matrix(&p.n), None).unwrap();
        let out = nlie_differential(&p, &r, &c).unwrap();
        assert!(out.f.as_ref().unwrap().is_zero());
        assert_eq!(out.chi, crate::multilinear::ce_adjoint(&p.algebra, &c.chi).unwrap());
        let zero = ConeCochain::zeros(2, 2, 2);
        assert_eq!(nlie_differential(&p, &r, &zero).unwrap(), ConeCochain::zeros(3, 2, 2));
    }

    #[test]
    fn cochain_shapes() {
        assert!(ConeCochain::<Q>::new(AltMap::zeros(0, 2, 2), None).is_err());
        assert!(ConeCochain::<Q>::new(AltMap::zeros(2, 2, 2), None).is_err());
        assert!(ConeCochain::<Q>::new(AltMap::zeros(2, 2, 2), Some(AltMap::zeros(2, 2, 2))).is_err());
        assert!(ConeCochain::<Q>::new(AltMap::zeros(1, 2, 2), Some(AltMap::zeros(0, 2, 2))).is_err());
        let c = ConeCochain::<Q>::new(AltMap::zeros(2, 3, 2), Some(AltMap::zeros(1, 3, 2))).unwrap();
        assert_eq!(c.to_vec().len(), cone_dim(2, 3, 2));
        assert_eq!(cone_dim(0, 3, 2), 0);
        assert_eq!(cone_dim(1, 3, 2), 6);
        assert_eq!(cone_dim(3, 3, 1), 1 + 3);
    }

    #[test]
    fn abelian_zero_operator_cohomology() {
        // Every differential vanishes, so cohomology is the whole cochain space.
        let (p, _) = adjoint(fixtures::a2(), Matrix::zeros(2, 2));
        let r = NijenhuisRep { rep: Representation::trivial(2, 1), s: Matrix::zeros(1, 1) };
        let rep = nlie_cohomology(&p, &r, 3).unwrap();
        assert_eq!(rep.cohomology_dims(), vec![0, 2, 3, 1]);
        assert_eq!(rep.cohomology_dims(), rep.dims[..4].to_vec());
    }

    #[test]
    fn fixture_cohomology_tables() {
        for (l, n) in [
            (fixtures::aff1(), Matrix::identity(2)),
            (fixtures::aff1(), fixtures::ndiag(q(1), q(0))),
            (fixtures::h3(), fixtures::nnilp()),
        ] {
            let (p, r) = adjoint(l, n);
            let rep = nlie_cohomology(&p, &r, p.dim() + 1).unwrap();
            assert!(rep.eliminations_agree());
            assert!(rep.square_failures().is_empty());
            let (c, b, a) = euler_characteristics(&p, &r).unwrap();
            assert_eq!(c, b - a);
        }
        // With N = Id both d_N and ∂ vanish in positive arity, so the cone
        // splits as the CE complex without degree 0 plus Hom(∧ⁿ⁻¹g, g).
        // AFF1 has H_CE = 0 and two-dimensional derivations.
        let (p, r) = adjoint(fixtures::aff1(), Matrix::identity(2));
        let ce = crate::multilinear::ce_cohomology(&p.algebra, &adjoint_rep(&p.algebra), 2).unwrap();
        assert_eq!(ce.cohomology_dims(), vec![0, 0, 0]);
        let rep = nlie_cohomology(&p, &r, 3).unwrap();
        assert_eq!(rep.cohomology_dims(), vec![0, 2, 4, 2]);
    }

    #[test]
    fn cocycles_and_coboundaries() {
        let (p, r) = adjoint(fixtures::aff1(), fixtures::ndiag(q(1), q(0)));
        let z2 = AltMap::zeros(2, 2, 2);
        let z1 = AltMap::zeros(1, 2, 2);
        assert!(certify_2cocycle(&p, &r, &z2, &z1).unwrap().is_ok());
        assert_eq!(certify_2coboundary(&p, &r, &z2, &z1).unwrap(), Some(Matrix::zeros(2, 2)));
        let phi = Matrix::from_i64_rows(&[&[1, -2], &[3, 5]]);
        let chi = crate::multilinear::ce_adjoint(&p.algebra, &AltMap::from_matrix(&phi)).unwrap();
        let f = AltMap::from_matrix(&r.s.mul(&phi).sub(&phi.mul(&p.n)));
        assert!(certify_2cocycle(&p, &r, &chi, &f).unwrap().is_ok());
        let w = certify_2coboundary(&p, &r, &chi, &f).unwrap().unwrap();
        let back = nlie_differential(&p, &r, &ConeCochain::new(AltMap::from_matrix(&w), None).unwrap()).unwrap();
        assert_eq!((back.chi, back.f.unwrap()), (chi, f));
        // A nonzero class: H² has positive dimension here.
        let h = nlie_cohomology(&p, &r, 2).unwrap();
        assert!(h.cohomology(2) > 0);
        let reps = h.representatives(2);
        let c = ConeCochain::from_vec(2, 2, 2, &reps[0]).unwrap();
        assert_eq!(certify_2coboundary(&p, &r, &c.chi, c.f.as_ref().unwrap()).unwrap(), None);
        let (p, r) = adjoint(fixtures::sl2(), Matrix::identity(3));
        let chi = AltMap::from_fn(2, 3, 3, |t| if t == [0, 1] { vec![q(1), q(0), q(0)] } else { vec![q(0); 3] });
        let zero = AltMap::zeros(1, 3, 3);
        assert!(!certify_2cocycle(&p, &r, &chi, &zero).unwrap().holds("ce-closed"));
        assert!(certify_2coboundary(&p, &r, &chi, &zero).is_err());
    }

    #[test]
    fn exact_sequences_on_fixtures() {
        for (l, n) in [
            (fixtures::a2(), Matrix::zeros(2, 2)),
            (fixtures::aff1(), fixtures::ndiag(q(1), q(0))),
            (fixtures::h3(), fixtures::nnilp()),
        ] {
            let (p, r) = adjoint(l, n);
            let rep = exact_sequence_report(&p, &r, 4).unwrap();
            assert!(rep.is_ok(), "{rep:?}");
            assert!(!rep.windows.is_empty());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn two_partials_agree(seed in 0u64..10_000, arity in 0usize..=3) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            let f = samples::alt_map(seed, arity, p.dim(), r.dim_v());
            prop_assert_eq!(partial_ns(&p, &r, &f).unwrap(), partial_ns_recursive(&p, &r, &f).unwrap());
        }

        #[test]
        fn partial_is_a_chain_map(seed in 0u64..10_000, arity in 0usize..=2) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            let f = samples::alt_map(seed, arity, p.dim(), r.dim_v());
            prop_assert!(partial_chain_defect(&p, &r, &f).unwrap().is_zero());
        }

        #[test]
        fn d_ns_is_restricted_semidirect(seed in 0u64..10_000, arity in 0usize..=2) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            let f = samples::alt_map(seed, arity, p.dim(), r.dim_v());
            let (outside, restricted) = d_ns_via_semidirect(&p, &r, &f).unwrap();
            prop_assert!(outside.is_zero());
            prop_assert_eq!(restricted, d_ns(&p, &r, &f).unwrap());
            let dd = d_ns(&p, &r, &d_ns(&p, &r, &f).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }

        #[test]
        fn deformed_chain_map(seed in 0u64..10_000, arity in 0usize..=2) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            let f = samples::alt_map(seed, arity, p.dim(), r.dim_v());
            prop_assert!(ns_chain_map_defect(&p, &r, &f).unwrap().is_zero());
        }

        #[test]
        fn cone_squares_to_zero(seed in 0u64..10_000, degree in 1usize..=3) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            let (d, m) = (p.dim(), r.dim_v());
            let mut rng = samples::rng(seed);
            let v = samples::vector(&mut rng, cone_dim(degree, d, m), 2);
            let c = ConeCochain::from_vec(degree, d, m, &v).unwrap();
            let dd = nlie_differential(&p, &r, &nlie_differential(&p, &r, &c).unwrap()).unwrap();
            prop_assert!(dd.to_vec().iter().all(|x| x.is_zero()));
        }

        #[test]
        fn coboundaries_certify(seed in 0u64..10_000) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            let mut rng = samples::rng(seed);
            let phi = samples::matrix(&mut rng, r.dim_v(), p.dim(), 2);
            let c = nlie_differential(&p, &r, &ConeCochain::new(AltMap::from_matrix(&phi), None).unwrap()).unwrap();
            let f = c.f.clone().unwrap();
            prop_assert!(certify_2cocycle(&p, &r, &c.chi, &f).unwrap().is_ok());
            let w = certify_2coboundary(&p, &r, &c.chi, &f).unwrap().unwrap();
            let back = nlie_differential(&p, &r, &ConeCochain::new(AltMap::from_matrix(&w), None).unwrap()).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn random_exact_sequences(seed in 0u64..10_000) {
            let p = samples::nijenhuis_pair(seed, 3);
            let r = samples::nijenhuis_rep(seed, &p);
            prop_assert!(exact_sequence_report(&p, &r, 3).unwrap().is_ok());
            let (c, b, a) = euler_characteristics(&p, &r).unwrap();
            prop_assert_eq!(c, b - a);
        }
    }
}
