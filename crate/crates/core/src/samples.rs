//! Seeded generators of small valid (and deliberately invalid) instances.
//!
//! Every generator is a pure function of its seed, so failures reproduce.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{
    check_admissible, check_matched_pair, check_nijenhuis_bialgebra, coboundary_cobracket, dual_cobracket,
    dual_matched_pair, Cobracket, MatchedPairData,
};
use crate::combinat::binomial;
use crate::cone::{cone_dim, nlie_differential_matrix, ConeCochain};
use crate::fixtures;
use crate::homotopy::{
    check_crossed_module, cocycle_to_skeletal, crossed_to_strict, CrossedModule, HomotopyNijenhuis, HomotopyRb,
    TwoTermL, TwoTermRep,
};
use crate::lie::{adjoint_rep, check_nijenhuis_rep, dual_rep, LieAlgebra, NijenhuisRep, Representation};
use crate::linalg::{inverse, kernel_basis, Matrix};
use crate::multilinear::{operator_matrix, AltMap};
use crate::nijenhuis::{check_nijenhuis, d_n, NijenhuisPair, OrderNDeformation};
use crate::nslie::{induce_from_nijenhuis, rep_from_nijenhuis_rep, NSLie, NSRep};
use crate::scalar::Scalar;
use crate::Rational;

type Q = Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

/// A small integer, zero with probability about one half.
fn entry(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    if rng.gen_bool(0.5) {
        q(0)
    } else {
        q(rng.gen_range(-bound..=bound))
    }
}

pub fn matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix<Q> {
    Matrix::from_vec(rows, cols, (0..rows * cols).map(|_| entry(rng, bound)).collect())
}

pub fn vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<Q> {
    (0..len).map(|_| entry(rng, bound)).collect()
}

/// An invertible matrix with its inverse, as a product of unit triangular factors.
pub fn invertible(rng: &mut ChaCha8Rng, n: usize) -> (Matrix<Q>, Matrix<Q>) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, entry(rng, 1));
            upper.set(j, i, entry(rng, 1));
        }
    }
    let p = lower.mul(&upper);
    let inv = inverse(&p).expect("unit triangular factors are invertible");
    (p, inv)
}

pub fn alt_map(seed: u64, arity: usize, dim: usize, target: usize) -> AltMap<Q> {
    let mut r = rng(seed ^ 0x05ee_da17);
    alt_map_with(&mut r, arity, dim, target)
}

pub fn alt_map_with(rng: &mut ChaCha8Rng, arity: usize, dim: usize, target: usize) -> AltMap<Q> {
    let n = binomial(dim, arity) * target;
    AltMap::from_coeffs(arity, dim, target, vector(rng, n, 2)).expect("length")
}

/// `k ⋉ k^m` where `e_0` acts on the ideal by a random matrix.
pub fn solvable(rng: &mut ChaCha8Rng, m: usize) -> LieAlgebra<Q> {
    let dmat = matrix(rng, m, m, 2);
    let mut l = LieAlgebra::abelian(m + 1);
    for j in 0..m {
        let mut v = vec![q(0)];
        v.extend(dmat.column(j));
        l.set_bracket(0, j + 1, &v);
    }
    l
}

/// A two-step nilpotent algebra with one-dimensional center spanned by the last vector.
pub fn two_step(rng: &mut ChaCha8Rng, m: usize) -> LieAlgebra<Q> {
    let mut l = LieAlgebra::abelian(m + 1);
    for i in 0..m {
        for j in i + 1..m {
            let mut v = vec![q(0); m + 1];
            v[m] = entry(rng, 2);
            l.set_bracket(i, j, &v);
        }
    }
    l
}

pub fn direct_sum(a: &LieAlgebra<Q>, b: &LieAlgebra<Q>) -> LieAlgebra<Q> {
    let (n, m) = (a.dim(), b.dim());
    let mut out = LieAlgebra::abelian(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_constant(i, j, k, a.constant(i, j, k).clone());
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                out.set_constant(n + i, n + j, n + k, b.constant(i, j, k).clone());
            }
        }
    }
    out
}

/// A random valid Lie algebra of dimension at most `max_dim` (and at least 1).
pub fn lie_algebra(seed: u64, max_dim: usize) -> LieAlgebra<Q> {
    let mut r = rng(seed);
    lie_algebra_with(&mut r, max_dim)
}

pub fn lie_algebra_with(rng: &mut ChaCha8Rng, max_dim: usize) -> LieAlgebra<Q> {
    let max_dim = max_dim.max(1);
    let l = match rng.gen_range(0..5) {
        0 => {
            let mut all = vec![fixtures::a2(), fixtures::aff1(), fixtures::h3(), fixtures::sl2()];
            all.retain(|l| l.dim() <= max_dim);
            all.choose(rng).cloned().unwrap_or_else(|| LieAlgebra::abelian(max_dim))
        }
        1 => {
            let m = rng.gen_range(0..max_dim);
            solvable(rng, m)
        }
        2 if max_dim >= 3 => {
            let m = rng.gen_range(2..max_dim);
            two_step(rng, m)
        }
        3 if max_dim >= 4 => direct_sum(&fixtures::aff1(), &fixtures::aff1()),
        _ => solvable(rng, max_dim - 1),
    };
    let (p, inv) = invertible(rng, l.dim());
    let mut out = l.change_basis(&p, &inv);
    out.labels = None;
    out
}

/// Known Nijenhuis operators on the generated algebra, before a basis change.
fn base_pair(rng: &mut ChaCha8Rng, max_dim: usize) -> (LieAlgebra<Q>, Matrix<Q>) {
    match rng.gen_range(0..6) {
        0 => (fixtures::aff1(), fixtures::ndiag(entry(rng, 3), entry(rng, 3))),
        1 if max_dim >= 3 => (fixtures::h3(), fixtures::nnilp().scale(&entry(rng, 2))),
        2 if max_dim >= 3 => (fixtures::sl2(), Matrix::scalar(3, entry(rng, 3))),
        3 => {
            let d = rng.gen_range(1..=max_dim);
            (LieAlgebra::abelian(d), matrix(rng, d, d, 2))
        }
        4 if max_dim >= 2 => {
            // λ P_A + μ P_B for the splitting k ⊕ k^m into two subalgebras.
            let m = rng.gen_range(1..max_dim);
            let l = solvable(rng, m);
            let (a, b) = (entry(rng, 2), entry(rng, 2));
            let mut diag = vec![a];
            diag.extend(std::iter::repeat_n(b, m));
            (l, Matrix::diagonal(&diag))
        }
        _ => {
            let l = lie_algebra_with(rng, max_dim);
            let n = search_nijenhuis(rng, &l, 40).unwrap_or_else(|| Matrix::scalar(l.dim(), entry(rng, 2)));
            (l, n)
        }
    }
}

/// Tries sparse random operators until one is Nijenhuis.
pub fn search_nijenhuis(rng: &mut ChaCha8Rng, l: &LieAlgebra<Q>, tries: usize) -> Option<Matrix<Q>> {
    let d = l.dim();
    (0..tries)
        .map(|_| matrix(rng, d, d, 1))
        .find(|n| check_nijenhuis(l, n).map(|r| r.holds("nijenhuis")).unwrap_or(false))
}

/// A verified Nijenhuis pair of dimension at most `max_dim`.
pub fn nijenhuis_pair(seed: u64, max_dim: usize) -> NijenhuisPair<Q> {
    let mut r = rng(seed);
    nijenhuis_pair_with(&mut r, max_dim)
}

pub fn nijenhuis_pair_with(rng: &mut ChaCha8Rng, max_dim: usize) -> NijenhuisPair<Q> {
    let max_dim = max_dim.max(2);
    let (mut l, mut n) = base_pair(rng, max_dim);
    if l.dim() + 2 <= max_dim && rng.gen_bool(0.3) {
        let (l2, n2) = (fixtures::aff1(), fixtures::ndiag(entry(rng, 2), entry(rng, 2)));
        l = direct_sum(&l, &l2);
        n = n.direct_sum(&n2);
    }
    if rng.gen_bool(0.5) {
        // A polynomial in a Nijenhuis operator is again Nijenhuis.
        let coeffs = vector(rng, 3, 2);
        n = n.polynomial(&coeffs);
    }
    let (p, inv) = invertible(rng, l.dim());
    let l = l.change_basis(&p, &inv);
    let n = inv.mul(&n).mul(&p);
    NijenhuisPair::new(l, n).expect("generated pairs are Nijenhuis")
}

/// A Lie algebra and an operator that may or may not be Nijenhuis.
pub fn algebra_with_operator(seed: u64, max_dim: usize) -> (LieAlgebra<Q>, Matrix<Q>) {
    let mut r = rng(seed);
    if r.gen_bool(0.5) {
        let p = nijenhuis_pair_with(&mut r, max_dim);
        (p.algebra, p.n)
    } else {
        let l = lie_algebra_with(&mut r, max_dim);
        let d = l.dim();
        (l, matrix(&mut r, d, d, 2))
    }
}

/// A Nijenhuis representation of `pair`.
pub fn nijenhuis_rep(seed: u64, pair: &NijenhuisPair<Q>) -> NijenhuisRep<Q> {
    let mut r = rng(seed ^ 0x7e9);
    nijenhuis_rep_with(&mut r, pair)
}

pub fn nijenhuis_rep_with(rng: &mut ChaCha8Rng, pair: &NijenhuisPair<Q>) -> NijenhuisRep<Q> {
    let l = &pair.algebra;
    let d = l.dim();
    let out = match rng.gen_range(0..6) {
        0 => NijenhuisRep::adjoint(l, &pair.n),
        1 => {
            let s = [Matrix::identity(d), Matrix::zeros(d, d), Matrix::identity(d).neg()]
                .choose(rng)
                .cloned()
                .expect("nonempty");
            NijenhuisRep { rep: adjoint_rep(l), s }
        }
        2 => {
            let m = rng.gen_range(1..=2);
            NijenhuisRep { rep: Representation::trivial(d, m), s: matrix(rng, m, m, 2) }
        }
        3 => {
            let a = NijenhuisRep::adjoint(l, &pair.n);
            let m = rng.gen_range(1..=2);
            NijenhuisRep {
                rep: a.rep.direct_sum(&Representation::trivial(d, m)),
                s: a.s.direct_sum(&matrix(rng, m, m, 1)),
            }
        }
        4 => {
            let dual = dual_rep(&adjoint_rep(l));
            let found = (0..30)
                .map(|_| matrix(rng, d, d, 1))
                .map(|s| NijenhuisRep { rep: dual.clone(), s })
                .find(|nr| check_nijenhuis_rep(l, &pair.n, nr).map(|r| r.is_ok()).unwrap_or(false));
            found.unwrap_or_else(|| NijenhuisRep { rep: dual, s: Matrix::identity(d) })
        }
        _ => {
            let found = (0..30)
                .map(|_| matrix(rng, d, d, 1))
                .map(|s| NijenhuisRep { rep: adjoint_rep(l), s })
                .find(|nr| check_nijenhuis_rep(l, &pair.n, nr).map(|r| r.is_ok()).unwrap_or(false));
            found.unwrap_or_else(|| NijenhuisRep::adjoint(l, &pair.n))
        }
    };
    debug_assert!(check_nijenhuis_rep(l, &pair.n, &out).unwrap().is_ok());
    out
}

/// A random element of `ker d_N` in degree one.
pub fn d_n_cocycle(rng: &mut ChaCha8Rng, pair: &NijenhuisPair<Q>) -> Matrix<Q> {
    let d = pair.dim();
    let d1 = operator_matrix(1, d, d, binomial(d, 2) * d, |f| {
        d_n(&pair.algebra, &pair.n, f).expect("shapes").coeffs().to_vec()
    });
    let k = kernel_basis(&d1);
    let mut x = vec![q(0); d * d];
    for j in 0..k.cols() {
        let c = entry(rng, 2);
        for (xi, kj) in x.iter_mut().zip(k.column(j)) {
            *xi = xi.clone() + c.clone() * kj;
        }
    }
    AltMap::from_coeffs(1, d, d, x).expect("length").to_matrix()
}

/// A valid deformation of order one: `N_1` is any `d_N`-cocycle.
pub fn order_one_deformation(seed: u64, max_dim: usize) -> (LieAlgebra<Q>, OrderNDeformation<Q>) {
    let mut r = rng(seed);
    let pair = nijenhuis_pair_with(&mut r, max_dim);
    let n1 = d_n_cocycle(&mut r, &pair);
    (pair.algebra, OrderNDeformation { n: pair.n, terms: vec![n1] })
}

/// A cobracket dual to a random Lie algebra, so it satisfies co-Jacobi.
pub fn cobracket_with(rng: &mut ChaCha8Rng, max_dim: usize) -> Cobracket<Q> {
    dual_cobracket(&lie_algebra_with(rng, max_dim))
}

/// Tries sparse random operators until one is admissible for `(l, n)` and
/// the adjoint representation, falling back to the identity.
pub fn search_admissible(rng: &mut ChaCha8Rng, l: &LieAlgebra<Q>, n: &Matrix<Q>, tries: usize) -> Matrix<Q> {
    let d = l.dim();
    let ad = adjoint_rep(l);
    (0..tries)
        .map(|_| matrix(rng, d, d, 1))
        .find(|s| check_admissible(l, n, &ad, s).map(|r| r.is_ok()).unwrap_or(false))
        .unwrap_or_else(|| Matrix::identity(d))
}

/// A two-dimensional Nijenhuis Lie algebra `(l, n)`, an admissible `s` and
/// an element `r` of `l⊗l`, antisymmetric about half the time.
pub fn coboundary_instance(seed: u64) -> (LieAlgebra<Q>, Matrix<Q>, Matrix<Q>, Matrix<Q>) {
    let mut r = rng(seed ^ 0xb1a1);
    let l = if r.gen_bool(0.75) { fixtures::aff1() } else { fixtures::a2() };
    let n = match r.gen_range(0..3) {
        0 => fixtures::ndiag(entry(&mut r, 2), entry(&mut r, 2)),
        1 => Matrix::scalar(2, entry(&mut r, 2)),
        _ => search_nijenhuis(&mut r, &l, 40).unwrap_or_else(|| Matrix::identity(2)),
    };
    let (p, inv) = invertible(&mut r, 2);
    let l = l.change_basis(&p, &inv);
    let n = inv.mul(&n).mul(&p);
    let s = match r.gen_range(0..4) {
        0 => Matrix::identity(2),
        1 => Matrix::zeros(2, 2),
        2 if check_admissible(&l, &n, &adjoint_rep(&l), &n).map(|x| x.is_ok()).unwrap_or(false) => n.clone(),
        _ => search_admissible(&mut r, &l, &n, 40),
    };
    let t = if r.gen_bool(0.5) {
        let c = entry(&mut r, 3);
        Matrix::from_rows(vec![vec![q(0), c.clone()], vec![-c, q(0)]], 2)
    } else {
        matrix(&mut r, 2, 2, 2)
    };
    (l, n, s, t)
}

/// A random 2-cocycle of the cone complex with adjoint coefficients.
pub fn cone_2cocycle(seed: u64, pair: &NijenhuisPair<Q>) -> (AltMap<Q>, AltMap<Q>) {
    let mut r = rng(seed ^ 0xc0c1);
    let d = pair.dim();
    let nrep = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
    let k = kernel_basis(&nlie_differential_matrix(pair, &nrep, 2));
    let mut x = vec![q(0); cone_dim(2, d, d)];
    for j in 0..k.cols() {
        let c = entry(&mut r, 2);
        for (xi, kj) in x.iter_mut().zip(k.column(j)) {
            *xi = xi.clone() + c.clone() * kj;
        }
    }
    let c = ConeCochain::from_vec(2, d, d, &x).expect("length");
    (c.chi, c.f.expect("degree two"))
}

/// A random cocycle of the cone complex in degree `n`.
pub fn cone_cocycle_with(
    rng: &mut ChaCha8Rng,
    pair: &NijenhuisPair<Q>,
    nrep: &NijenhuisRep<Q>,
    n: usize,
) -> ConeCochain<Q> {
    let (d, m) = (pair.dim(), nrep.dim_v());
    let k = kernel_basis(&nlie_differential_matrix(pair, nrep, n));
    let mut x = vec![q(0); cone_dim(n, d, m)];
    for j in 0..k.cols() {
        let c = entry(rng, 2);
        for (xi, kj) in x.iter_mut().zip(k.column(j)) {
            *xi = xi.clone() + c.clone() * kj;
        }
    }
    ConeCochain::from_vec(n, d, m, &x).expect("length")
}

/// A skeletal 2-term Nijenhuis L∞-algebra built from a random degree-3 cone cocycle.
pub fn skeletal_2term(seed: u64) -> (TwoTermL<Q>, HomotopyNijenhuis<Q>) {
    let mut r = rng(seed ^ 0x5ce1);
    let pair = nijenhuis_pair_with(&mut r, 3);
    let nrep = nijenhuis_rep_with(&mut r, &pair);
    let c = cone_cocycle_with(&mut r, &pair, &nrep, 3);
    cocycle_to_skeletal(&pair, &nrep, &c.chi, c.f.as_ref().expect("degree three")).expect("cocycle")
}

/// A crossed module of Nijenhuis Lie algebras, after random changes of basis on both sides.
pub fn crossed_module(seed: u64) -> CrossedModule<Q> {
    let mut r = rng(seed ^ 0xc7055);
    let cm = match r.gen_range(0..3) {
        0 => {
            let pair = nijenhuis_pair_with(&mut r, 3);
            let d = pair.dim();
            let rho = (0..d).map(|i| pair.algebra.ad(i)).collect();
            CrossedModule {
                g: pair.algebra.clone(),
                n: pair.n.clone(),
                h: pair.algebra,
                s: pair.n,
                t: Matrix::identity(d),
                rho,
            }
        }
        1 => {
            let pair = nijenhuis_pair_with(&mut r, 3);
            let nrep = nijenhuis_rep_with(&mut r, &pair);
            let m = nrep.dim_v();
            CrossedModule {
                t: Matrix::zeros(pair.dim(), m),
                g: pair.algebra,
                n: pair.n,
                h: LieAlgebra::abelian(m),
                s: nrep.s,
                rho: nrep.rep.matrices().to_vec(),
            }
        }
        _ => {
            // The abelian ideal of k ⋉ k^m, with N = diag(a, b, ..., b) and S = b.
            let m = r.gen_range(1..=2);
            let g = solvable(&mut r, m);
            let (a, b) = (entry(&mut r, 2), entry(&mut r, 2));
            let mut diag = vec![a];
            diag.extend(std::iter::repeat_n(b.clone(), m));
            let t = Matrix::from_columns(
                m + 1,
                &(0..m)
                    .map(|j| {
                        let mut v = vec![q(0); m + 1];
                        v[j + 1] = q(1);
                        v
                    })
                    .collect::<Vec<_>>(),
            );
            let ad0 = g.ad(0);
            let d = Matrix::from_rows((1..=m).map(|i| (1..=m).map(|j| ad0.get(i, j).clone()).collect()).collect(), m);
            let mut rho = vec![Matrix::zeros(m, m); m + 1];
            rho[0] = d;
            CrossedModule { g, n: Matrix::diagonal(&diag), h: LieAlgebra::abelian(m), s: Matrix::scalar(m, b), t, rho }
        }
    };
    let (p, p_inv) = invertible(&mut r, cm.g.dim());
    let (u, u_inv) = invertible(&mut r, cm.h.dim());
    let rep = Representation::new(cm.h.dim(), cm.rho.clone()).expect("shapes");
    let out = CrossedModule {
        g: cm.g.change_basis(&p, &p_inv),
        n: p_inv.mul(&cm.n).mul(&p),
        h: cm.h.change_basis(&u, &u_inv),
        s: u_inv.mul(&cm.s).mul(&u),
        t: p_inv.mul(&cm.t).mul(&u),
        rho: (0..cm.g.dim()).map(|i| u_inv.mul(&rep.rho_of(&p.column(i))).mul(&u)).collect(),
    };
    debug_assert!(check_crossed_module(&out).unwrap().is_ok());
    out
}

/// A valid 2-term L∞-algebra together with a valid representation of it.
pub fn two_term_with_rep(seed: u64) -> (TwoTermL<Q>, TwoTermRep<Q>) {
    let mut r = rng(seed ^ 0x2e9);
    match r.gen_range(0..4) {
        0 => {
            let (t, _) = skeletal_2term(r.gen());
            let rep = TwoTermRep::adjoint(&t);
            (t, rep)
        }
        1 => {
            let (t, _) = crossed_to_strict(&crossed_module(r.gen())).expect("crossed module");
            let rep = TwoTermRep::adjoint(&t);
            (t, rep)
        }
        2 => {
            let t = if r.gen_bool(0.5) {
                skeletal_2term(r.gen()).0
            } else {
                crossed_to_strict(&crossed_module(r.gen())).expect("crossed module").0
            };
            let (v0, v1) = (r.gen_range(0..=2), r.gen_range(1..=2));
            let rep = TwoTermRep::trivial(&t, matrix(&mut r, v0, v1, 2));
            (t, rep)
        }
        _ => {
            // V --id--> V over 0 --> g.
            let pair = nijenhuis_pair_with(&mut r, 3);
            let nrep = nijenhuis_rep_with(&mut r, &pair);
            let t = TwoTermL::from_lie(&pair.algebra);
            let mut rep = TwoTermRep::trivial(&t, Matrix::identity(nrep.dim_v()));
            rep.m2_0 = nrep.rep.matrices().to_vec();
            rep.m2_1 = nrep.rep.matrices().to_vec();
            (t, rep)
        }
    }
}

/// Sparse random `(r0, r1, r2)`; each part is zero about a third of the time.
pub fn homotopy_rb_with(rng: &mut ChaCha8Rng, t: &TwoTermL<Q>, rep: &TwoTermRep<Q>) -> HomotopyRb<Q> {
    let mut op = HomotopyRb::zero(t, rep);
    if rng.gen_bool(0.67) {
        op.r0 = matrix(rng, t.dim0(), rep.dim_v0(), 1);
    }
    if rng.gen_bool(0.67) {
        op.r1 = matrix(rng, t.dim1(), rep.dim_v1(), 1);
    }
    if rng.gen_bool(0.67) {
        op.r2 = alt_map_with(rng, 2, rep.dim_v0(), t.dim1());
    }
    op
}

/// A valid NS-Lie algebra with a valid representation on a space of the returned dimension.
pub fn ns_lie_with_rep(seed: u64) -> (NSLie<Q>, NSRep<Q>, usize) {
    let mut r = rng(seed ^ 0x25);
    let pair = nijenhuis_pair_with(&mut r, 3);
    if r.gen_bool(0.2) {
        let p = NSLie::from_lie(&pair.algebra);
        let rep = NSRep { psi: adjoint_rep(&pair.algebra).matrices().to_vec(), ..NSRep::zero(p.dim(), p.dim()) };
        return (p, rep, pair.dim());
    }
    let p = induce_from_nijenhuis(&pair);
    if r.gen_bool(0.3) {
        let rep = p.adjoint();
        return (p, rep, pair.dim());
    }
    let nrep = nijenhuis_rep_with(&mut r, &pair);
    let rep = rep_from_nijenhuis_rep(&pair, &nrep).expect("Nijenhuis representation");
    (p, rep, nrep.dim_v())
}

/// A matched pair of Nijenhuis Lie algebras. Either `h` is abelian and
/// acts trivially, or the pair is the double of a coboundary bialgebra
/// with nonzero cobracket.
pub fn nijenhuis_matched_pair(seed: u64) -> MatchedPairData<Q> {
    let mut r = rng(seed ^ 0x3a7c);
    if r.gen_bool(0.5) {
        for _ in 0..60 {
            let (l, n, s, t) = coboundary_instance(r.gen());
            let Ok(co) = coboundary_cobracket(&l, &t) else { continue };
            if !co.is_zero() && check_nijenhuis_bialgebra(&l, &n, &co, &s).map(|x| x.is_ok()).unwrap_or(false) {
                let mp = dual_matched_pair(&l, &n, &co, &s);
                if check_matched_pair(&mp).map(|x| x.is_ok()).unwrap_or(false) {
                    return mp;
                }
            }
        }
    }
    let pair = nijenhuis_pair_with(&mut r, 3);
    let nrep = nijenhuis_rep_with(&mut r, &pair);
    let m = nrep.dim_v();
    MatchedPairData {
        g: pair.algebra,
        h: LieAlgebra::abelian(m),
        rho: nrep.rep,
        nu: Representation::trivial(m, pair.n.rows()),
        n: Some(pair.n),
        s: Some(nrep.s),
    }
}
