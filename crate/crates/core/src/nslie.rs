//! NS-Lie algebras, their representations, semidirect and bicrossed
//! products, and the structures induced by Nijenhuis operators.

use crate::bialgebra::{check_matched_pair, MatchedPairData};
use crate::combinat::combinations;
use crate::error::{precondition, shape, Result};
use crate::lie::{
    check_lie, check_nijenhuis_rep, check_operator, combine, unit, vadd, vsub, LieAlgebra, NijenhuisRep, Representation,
};
use crate::linalg::Matrix;
use crate::multilinear::AltMap;
use crate::nijenhuis::NijenhuisPair;
use crate::report::Report;
use crate::scalar::Scalar;

fn check_family<T: Scalar>(name: &str, ms: &[Matrix<T>], count: usize, size: usize) -> Result<()> {
    if ms.len() != count {
        return shape(format!("{name} needs {count} matrices, got {}", ms.len()));
    }
    for (i, m) in ms.iter().enumerate() {
        check_operator(&format!("{name}[{i}]"), m, size, size)?;
    }
    Ok(())
}

fn neg<T: Scalar>(v: Vec<T>) -> Vec<T> {
    v.into_iter().map(|x| -x).collect()
}

/// `(p, ◇, ⌊,⌋)`. The product `◇` is stored by left multiplications:
/// column `j` of `diamond[i]` is `e_i ◇ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSLie<T> {
    pub diamond: Vec<Matrix<T>>,
    pub floor: AltMap<T>,
}

impl<T: Scalar> NSLie<T> {
    pub fn new(diamond: Vec<Matrix<T>>, floor: AltMap<T>) -> Result<Self> {
        let p = Self { diamond, floor };
        p.validate()?;
        Ok(p)
    }

    /// Builds `◇` from its values `e_i ◇ e_j`.
    pub fn from_fn(dim: usize, mut diamond: impl FnMut(usize, usize) -> Vec<T>, floor: AltMap<T>) -> Result<Self> {
        let left =
            (0..dim).map(|i| Matrix::from_columns(dim, &(0..dim).map(|j| diamond(i, j)).collect::<Vec<_>>())).collect();
        Self::new(left, floor)
    }

    pub fn zeros(dim: usize) -> Self {
        Self { diamond: vec![Matrix::zeros(dim, dim); dim], floor: AltMap::zeros(2, dim, dim) }
    }

    /// `◇ = 0` and `⌊,⌋` the bracket of `l`.
    pub fn from_lie(l: &LieAlgebra<T>) -> Self {
        Self { diamond: vec![Matrix::zeros(l.dim(), l.dim()); l.dim()], floor: AltMap::from_lie(l) }
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.floor.arity() != 2 || self.floor.target() != d {
            return shape("the floor bracket must be an alternating 2-form on the space");
        }
        check_family("diamond", &self.diamond, d, d)
    }

    pub fn dim(&self) -> usize {
        self.floor.dim()
    }

    /// `x ◇ ·`.
    pub fn left(&self, x: &[T]) -> Matrix<T> {
        combine(&self.diamond, x, self.dim())
    }

    /// `· ◇ x`.
    pub fn right(&self, x: &[T]) -> Matrix<T> {
        let d = self.dim();
        Matrix::from_columns(d, &(0..d).map(|j| self.diamond[j].apply(x)).collect::<Vec<_>>())
    }

    /// `⌊x, ·⌋`.
    pub fn floor_left(&self, x: &[T]) -> Matrix<T> {
        let d = self.dim();
        Matrix::from_columns(d, &(0..d).map(|j| self.bracket_floor(x, &unit(d, j))).collect::<Vec<_>>())
    }

    pub fn product(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.left(x).apply(y)
    }

    pub fn bracket_floor(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.floor.eval(&[x.to_vec(), y.to_vec()])
    }

    /// `⟦x, y⟧ = x ◇ y - y ◇ x + ⌊x, y⌋`.
    pub fn subadjacent_bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        vadd(&vsub(&self.product(x, y), &self.product(y, x)), &self.bracket_floor(x, y))
    }

    /// The representation `(p, l, r, ψ)` on itself.
    pub fn adjoint(&self) -> NSRep<T> {
        let d = self.dim();
        let e: Vec<Vec<T>> = (0..d).map(|i| unit(d, i)).collect();
        NSRep {
            l: self.diamond.clone(),
            r: e.iter().map(|x| self.right(x)).collect(),
            psi: e.iter().map(|x| self.floor_left(x)).collect(),
        }
    }
}

/// Labels `nsl1` on pairs `i < j` and every `k`, and `nsl2` on triples.
pub fn check_nslie<T: Scalar>(p: &NSLie<T>) -> Result<Report> {
    p.validate()?;
    let d = p.dim();
    let e: Vec<Vec<T>> = (0..d).map(|i| unit(d, i)).collect();
    let m = |a: &[T], b: &[T]| p.product(a, b);
    let fl = |a: &[T], b: &[T]| p.bracket_floor(a, b);
    let sb = |a: &[T], b: &[T]| p.subadjacent_bracket(a, b);
    let mut report = Report::new();
    for c in combinations(d, 2) {
        let (x, y) = (&e[c[0]], &e[c[1]]);
        for (k, z) in e.iter().enumerate() {
            let lhs = vadd(&vsub(&m(&m(x, y), z), &m(x, &m(y, z))), &m(&fl(x, y), z));
            let rhs = vsub(&m(&m(y, x), z), &m(y, &m(x, z)));
            report.check("nsl1", &[c[0], c[1], k], &vsub(&lhs, &rhs));
        }
    }
    for c in combinations(d, 3) {
        let (x, y, z) = (&e[c[0]], &e[c[1]], &e[c[2]]);
        let mut out = vec![T::zero(); d];
        for (a, b, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            out = vadd(&out, &fl(a, &sb(b, w)));
            out = vadd(&out, &m(a, &fl(b, w)));
        }
        report.check("nsl2", &c, &out);
    }
    Ok(report)
}

/// `(p, ⟦,⟧)`.
pub fn subadjacent<T: Scalar>(p: &NSLie<T>) -> Result<LieAlgebra<T>> {
    if !check_nslie(p)?.is_ok() {
        return precondition("not an NS-Lie algebra");
    }
    Ok(subadjacent_unchecked(p))
}

pub fn subadjacent_unchecked<T: Scalar>(p: &NSLie<T>) -> LieAlgebra<T> {
    let d = p.dim();
    let mut l = LieAlgebra::abelian(d);
    for c in combinations(d, 2) {
        l.set_bracket(c[0], c[1], &p.subadjacent_bracket(&unit(d, c[0]), &unit(d, c[1])));
    }
    l
}

/// `x ◇ y = [Nx, y]` and `⌊x, y⌋ = -N[x, y]`.
pub fn induce_from_nijenhuis<T: Scalar>(pair: &NijenhuisPair<T>) -> NSLie<T> {
    induce_unchecked(&pair.algebra, &pair.n)
}

fn induce_unchecked<T: Scalar>(l: &LieAlgebra<T>, n: &Matrix<T>) -> NSLie<T> {
    let d = l.dim();
    let diamond = (0..d).map(|i| l.ad_of(&n.column(i))).collect();
    let floor = AltMap::from_fn(2, d, d, |t| neg(n.apply(&l.bracket_basis(t[0], t[1]))));
    NSLie { diamond, floor }
}

/// Maps `l, r, ψ : p → End(V)`, one matrix per basis vector of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSRep<T> {
    pub l: Vec<Matrix<T>>,
    pub r: Vec<Matrix<T>>,
    pub psi: Vec<Matrix<T>>,
}

impl<T: Scalar> NSRep<T> {
    pub fn zero(dim_p: usize, dim_v: usize) -> Self {
        let z = vec![Matrix::zeros(dim_v, dim_v); dim_p];
        Self { l: z.clone(), r: z.clone(), psi: z }
    }

    pub fn dim_p(&self) -> usize {
        self.l.len()
    }

    pub fn dim_v(&self) -> usize {
        self.l.first().map_or(0, Matrix::rows)
    }

    fn validate(&self, p: &NSLie<T>, dim_v: usize) -> Result<()> {
        check_family("l", &self.l, p.dim(), dim_v)?;
        check_family("r", &self.r, p.dim(), dim_v)?;
        check_family("psi", &self.psi, p.dim(), dim_v)
    }

    pub fn l_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.l, x, self.dim_v())
    }

    pub fn r_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.r, x, self.dim_v())
    }

    pub fn psi_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.psi, x, self.dim_v())
    }

    /// `l_x - r_x + ψ_x`.
    pub fn rho_of(&self, x: &[T]) -> Matrix<T> {
        self.l_of(x).sub(&self.r_of(x)).add(&self.psi_of(x))
    }

    /// `l - r + ψ` as a representation of the subadjacent Lie algebra.
    pub fn subadjacent_rep(&self) -> Representation<T> {
        let rho = (0..self.dim_p()).map(|i| self.l[i].sub(&self.r[i]).add(&self.psi[i])).collect();
        Representation::new(self.dim_v(), rho).expect("square matrices")
    }
}

/// Labels `nsrep1` and `nsrep3` on pairs `i < j`, `nsrep2` on all ordered pairs.
pub fn check_nsrep<T: Scalar>(p: &NSLie<T>, rep: &NSRep<T>, dim_v: usize) -> Result<Report> {
    p.validate()?;
    rep.validate(p, dim_v)?;
    let d = p.dim();
    let e: Vec<Vec<T>> = (0..d).map(|i| unit(d, i)).collect();
    let mut report = Report::new();
    let record = |report: &mut Report, label: &str, idx: &[usize], m: &Matrix<T>| {
        for v in 0..dim_v {
            let mut at = idx.to_vec();
            at.push(v);
            report.check(label, &at, &m.column(v));
        }
    };
    for c in combinations(d, 2) {
        let (x, y) = (&e[c[0]], &e[c[1]]);
        let (lx, ly) = (rep.l_of(x), rep.l_of(y));
        let lhs = rep.l_of(&p.product(x, y)).sub(&lx.mul(&ly)).add(&rep.l_of(&p.bracket_floor(x, y)));
        let rhs = rep.l_of(&p.product(y, x)).sub(&ly.mul(&lx));
        record(&mut report, "nsrep1", &c, &lhs.sub(&rhs));
        let (px, py) = (rep.psi_of(x), rep.psi_of(y));
        let lhs = rep.psi_of(&p.subadjacent_bracket(x, y)).sub(&rep.r_of(&p.bracket_floor(x, y)));
        let rhs = lx.mul(&py).sub(&ly.mul(&px)).add(&px.mul(&rep.rho_of(y))).sub(&py.mul(&rep.rho_of(x)));
        record(&mut report, "nsrep3", &c, &lhs.sub(&rhs));
    }
    for (i, x) in e.iter().enumerate() {
        for (j, y) in e.iter().enumerate() {
            let (rx, ry) = (rep.r_of(x), rep.r_of(y));
            let lhs = rep.r_of(&p.product(x, y)).sub(&ry.mul(&rx)).add(&ry.mul(&rep.psi_of(x)));
            let rhs = rep.l_of(x).mul(&ry).sub(&ry.mul(&rep.l_of(x)));
            record(&mut report, "nsrep2", &[i, j], &lhs.sub(&rhs));
        }
    }
    Ok(report)
}

/// `l_x = ρ_{Nx}`, `r_x = -ρ_x S` and `ψ_x = -S ρ_x`.
pub fn rep_from_nijenhuis_rep<T: Scalar>(pair: &NijenhuisPair<T>, nrep: &NijenhuisRep<T>) -> Result<NSRep<T>> {
    if !check_nijenhuis_rep(&pair.algebra, &pair.n, nrep)?.is_ok() {
        return precondition("not a Nijenhuis representation");
    }
    Ok(rep_from_parts(&pair.n, &nrep.rep, &nrep.s))
}

fn rep_from_parts<T: Scalar>(n: &Matrix<T>, rep: &Representation<T>, s: &Matrix<T>) -> NSRep<T> {
    let d = n.rows();
    NSRep {
        l: (0..d).map(|i| rep.rho_of(&n.column(i))).collect(),
        r: (0..d).map(|i| rep.rho(i).mul(s).neg()).collect(),
        psi: (0..d).map(|i| s.mul(rep.rho(i)).neg()).collect(),
    }
}

/// `(x,u) ◇ (y,v) = (x ◇ y, l_x v + r_y u)` and
/// `⌊(x,u), (y,v)⌋ = (⌊x,y⌋, ψ_x v - ψ_y u)` on `p ⊕ V`.
pub fn semidirect_nslie<T: Scalar>(p: &NSLie<T>, rep: &NSRep<T>, dim_v: usize) -> Result<NSLie<T>> {
    p.validate()?;
    rep.validate(p, dim_v)?;
    let mp = NSMatchedPair {
        p1: p.clone(),
        p2: NSLie::zeros(dim_v),
        on_p2: rep.clone(),
        on_p1: NSRep::zero(dim_v, p.dim()),
    };
    Ok(bicrossed_nslie_unchecked(&mp))
}

/// Two NS-Lie algebras acting on each other: `on_p2 = (l, r, ψ)` and
/// `on_p1 = (L, R, Ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSMatchedPair<T> {
    pub p1: NSLie<T>,
    pub p2: NSLie<T>,
    pub on_p2: NSRep<T>,
    pub on_p1: NSRep<T>,
}

impl<T: Scalar> NSMatchedPair<T> {
    fn validate(&self) -> Result<()> {
        self.p1.validate()?;
        self.p2.validate()?;
        self.on_p2.validate(&self.p1, self.p2.dim())?;
        self.on_p1.validate(&self.p2, self.p1.dim())
    }
}

/// Labels `p1/`, `p2/`, `on-p2/`, `on-p1/` and `mnsl1` to `mnsl6`.
pub fn check_matched_pair_nslie<T: Scalar>(mp: &NSMatchedPair<T>) -> Result<Report> {
    mp.validate()?;
    let (p1, p2) = (&mp.p1, &mp.p2);
    let (d1, d2) = (p1.dim(), p2.dim());
    let mut report = Report::new();
    report.absorb_prefixed("p1", check_nslie(p1)?);
    report.absorb_prefixed("p2", check_nslie(p2)?);
    report.absorb_prefixed("on-p2", check_nsrep(p1, &mp.on_p2, d2)?);
    report.absorb_prefixed("on-p1", check_nsrep(p2, &mp.on_p1, d1)?);
    compatibility(&mut report, p1, p2, &mp.on_p2, &mp.on_p1, ["mnsl1", "mnsl2", "mnsl5"]);
    compatibility(&mut report, p2, p1, &mp.on_p1, &mp.on_p2, ["mnsl3", "mnsl4", "mnsl6"]);
    Ok(report)
}

/// The three compatibility identities for `a` acting on `b` through `(l, r, ψ)`,
/// with `(L, R, Ψ)` the action back.
fn compatibility<T: Scalar>(
    report: &mut Report,
    a: &NSLie<T>,
    b: &NSLie<T>,
    on_b: &NSRep<T>,
    on_a: &NSRep<T>,
    labels: [&str; 3],
) {
    let (da, db) = (a.dim(), b.dim());
    let ea: Vec<Vec<T>> = (0..da).map(|i| unit(da, i)).collect();
    let eb: Vec<Vec<T>> = (0..db).map(|i| unit(db, i)).collect();
    let m = |u: &[T], v: &[T]| b.product(u, v);
    let fl = |u: &[T], v: &[T]| b.bracket_floor(u, v);
    for (i, x) in ea.iter().enumerate() {
        let (lx, rx, px) = (on_b.l_of(x), on_b.r_of(x), on_b.psi_of(x));
        let rho_x = on_b.rho_of(x);
        for (p, al) in eb.iter().enumerate() {
            for (q, be) in eb.iter().enumerate() {
                let sigma_al = on_a.rho_of(al).apply(x);
                let sigma_be = on_a.rho_of(be).apply(x);
                // l_x(α ◇ β)
                let lhs = lx.apply(&m(al, be));
                let rhs = [
                    m(&lx.apply(al), be),
                    m(al, &lx.apply(be)),
                    m(&px.apply(al), be),
                    neg(m(&rx.apply(al), be)),
                    on_b.r_of(&on_a.r_of(be).apply(x)).apply(al),
                    neg(on_b.l_of(&sigma_al).apply(be)),
                ];
                report.check(labels[0], &[i, p, q], &vsub(&lhs, &sum(&rhs, db)));
                // r_x⟦α, β⟧
                let lhs = rx.apply(&b.subadjacent_bracket(al, be));
                let rhs = [
                    m(al, &rx.apply(be)),
                    neg(m(be, &rx.apply(al))),
                    on_b.r_of(&on_a.l_of(be).apply(x)).apply(al),
                    neg(on_b.r_of(&on_a.l_of(al).apply(x)).apply(be)),
                ];
                report.check(labels[1], &[i, p, q], &vsub(&lhs, &sum(&rhs, db)));
                // l_x⌊α, β⌋
                let lhs = lx.apply(&fl(al, be));
                let rhs = [
                    fl(&rho_x.apply(al), be),
                    fl(al, &rho_x.apply(be)),
                    on_b.psi_of(&sigma_be).apply(al),
                    neg(on_b.psi_of(&sigma_al).apply(be)),
                    m(al, &px.apply(be)),
                    neg(m(be, &px.apply(al))),
                    on_b.r_of(&on_a.psi_of(al).apply(x)).apply(be),
                    neg(on_b.r_of(&on_a.psi_of(be).apply(x)).apply(al)),
                    neg(px.apply(&b.subadjacent_bracket(al, be))),
                ];
                report.check(labels[2], &[i, p, q], &vsub(&lhs, &sum(&rhs, db)));
            }
        }
    }
}

fn sum<T: Scalar>(terms: &[Vec<T>], len: usize) -> Vec<T> {
    terms.iter().fold(vec![T::zero(); len], |acc, t| vadd(&acc, t))
}

/// `p1 ⊕ p2` with the bicrossed product and bracket; `p1` comes first in the basis.
pub fn bicrossed_nslie<T: Scalar>(mp: &NSMatchedPair<T>) -> Result<NSLie<T>> {
    if !check_matched_pair_nslie(mp)?.is_ok() {
        return precondition("not a matched pair of NS-Lie algebras");
    }
    Ok(bicrossed_nslie_unchecked(mp))
}

pub fn bicrossed_nslie_unchecked<T: Scalar>(mp: &NSMatchedPair<T>) -> NSLie<T> {
    let (p1, p2) = (&mp.p1, &mp.p2);
    let (d1, d2) = (p1.dim(), p2.dim());
    let n = d1 + d2;
    let split = |j: usize| {
        let v: Vec<T> = unit(n, j);
        (v[..d1].to_vec(), v[d1..].to_vec())
    };
    let join = |mut a: Vec<T>, b: Vec<T>| {
        a.extend(b);
        a
    };
    let (a, b) = (&mp.on_p1, &mp.on_p2);
    let diamond = (0..n)
        .map(|i| {
            let (x, al) = split(i);
            let cols: Vec<Vec<T>> = (0..n)
                .map(|j| {
                    let (y, be) = split(j);
                    let first = sum(&[p1.product(&x, &y), a.l_of(&al).apply(&y), a.r_of(&be).apply(&x)], d1);
                    let second = sum(&[p2.product(&al, &be), b.l_of(&x).apply(&be), b.r_of(&y).apply(&al)], d2);
                    join(first, second)
                })
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    let floor = AltMap::from_fn(2, n, n, |t| {
        let ((x, al), (y, be)) = (split(t[0]), split(t[1]));
        let first = vsub(&vadd(&p1.bracket_floor(&x, &y), &a.psi_of(&al).apply(&y)), &a.psi_of(&be).apply(&x));
        let second = vsub(&vadd(&p2.bracket_floor(&al, &be), &b.psi_of(&x).apply(&be)), &b.psi_of(&y).apply(&al));
        join(first, second)
    });
    NSLie { diamond, floor }
}

/// The subadjacent matched pair `(l - r + ψ, L - R + Ψ)` of Lie algebras.
pub fn subadjacent_matched_pair<T: Scalar>(mp: &NSMatchedPair<T>) -> Result<MatchedPairData<T>> {
    mp.validate()?;
    Ok(MatchedPairData {
        g: subadjacent_unchecked(&mp.p1),
        h: subadjacent_unchecked(&mp.p2),
        rho: mp.on_p2.subadjacent_rep(),
        nu: mp.on_p1.subadjacent_rep(),
        n: None,
        s: None,
    })
}

/// Induced NS-Lie algebras on `g` and `h` acting on each other through
/// `l_x = ρ_{Nx}`, `r_x = -ρ_x S`, `ψ_x = -S ρ_x` and
/// `L_h = ν_{Sh}`, `R_h = -ν_h N`, `Ψ_h = -N ν_h`.
pub fn matched_pair_from_nijenhuis<T: Scalar>(mp: &MatchedPairData<T>) -> Result<NSMatchedPair<T>> {
    let (Some(n), Some(s)) = (&mp.n, &mp.s) else {
        return precondition("the matched pair carries no operators");
    };
    if !check_matched_pair(mp)?.is_ok() {
        return precondition("not a matched pair of Nijenhuis Lie algebras");
    }
    if !check_lie(&mp.g).is_ok() || !check_lie(&mp.h).is_ok() {
        return precondition("not Lie algebras");
    }
    Ok(NSMatchedPair {
        p1: induce_unchecked(&mp.g, n),
        p2: induce_unchecked(&mp.h, s),
        on_p2: rep_from_parts(n, &mp.rho, s),
        on_p1: rep_from_parts(s, &mp.nu, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{bicrossed, coboundary_cobracket, dual_matched_pair};
    use crate::fixtures::{aff1, ndiag, r_aff};
    use crate::lie::check_representation;
    use crate::nijenhuis::deformed_bracket_unchecked;
    use crate::samples::{self, nijenhuis_matched_pair, ns_lie_with_rep};
    use crate::Rational as Q;
    use proptest::prelude::*;
    use rand::Rng;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn aff1_pair(a: i64, b: i64) -> NijenhuisPair<Q> {
        NijenhuisPair::new(aff1(), ndiag(q(a), q(b))).unwrap()
    }

    #[test]
    fn aff1_table() {
        let p = induce_from_nijenhuis(&aff1_pair(2, 3));
        let (e1, e2) = (unit::<Q>(2, 0), unit::<Q>(2, 1));
        assert_eq!(p.product(&e1, &e2), vec![q(0), q(2)]);
        assert_eq!(p.product(&e2, &e1), vec![q(0), q(-3)]);
        assert_eq!(p.product(&e1, &e1), vec![q(0), q(0)]);
        assert_eq!(p.product(&e2, &e2), vec![q(0), q(0)]);
        assert_eq!(p.bracket_floor(&e1, &e2), vec![q(0), q(-3)]);
        assert!(check_nslie(&p).unwrap().is_ok());
        let sub = subadjacent(&p).unwrap();
        assert_eq!(sub.bracket(&e1, &e2), vec![q(0), q(2)]);
    }

    #[test]
    fn lie_algebras_and_zero_are_nslie() {
        let p = NSLie::from_lie(&crate::fixtures::sl2());
        assert!(check_nslie(&p).unwrap().is_ok());
        assert_eq!(subadjacent(&p).unwrap().table(), crate::fixtures::sl2().table());
        assert!(check_nslie(&NSLie::<Q>::zeros(3)).unwrap().is_ok());
    }

    #[test]
    fn broken_identities_are_located() {
        let mut p = NSLie::<Q>::zeros(2);
        p.floor.set(&[0, 1], &[q(1), q(0)]);
        p.diamond[0].set(0, 0, q(1));
        let r = check_nslie(&p).unwrap();
        assert!(!r.is_ok());
        assert!(subadjacent(&p).is_err());
        let p = NSLie::from_fn(
            2,
            |i, j| if (i, j) == (0, 1) { vec![q(1), q(0)] } else { vec![q(0), q(0)] },
            AltMap::zeros(2, 2, 2),
        )
        .unwrap();
        let r = check_nslie(&p).unwrap();
        assert!(!r.holds("nsl1"));
        assert!(r.holds("nsl2"));
    }

    #[test]
    fn shapes_are_rejected() {
        let bad = NSLie::new(vec![Matrix::<Q>::zeros(2, 2)], AltMap::zeros(2, 2, 2));
        assert!(matches!(bad, Err(crate::Error::Shape(_))));
        let p = induce_from_nijenhuis(&aff1_pair(1, 1));
        let rep = NSRep::<Q>::zero(3, 1);
        assert!(check_nsrep(&p, &rep, 1).is_err());
        assert!(semidirect_nslie(&p, &NSRep::zero(2, 2), 1).is_err());
    }

    #[test]
    fn adjoint_representations_are_valid() {
        for (a, b) in [(1, 0), (0, 1), (2, -1), (3, 3)] {
            let p = induce_from_nijenhuis(&aff1_pair(a, b));
            assert!(check_nsrep(&p, &p.adjoint(), 2).unwrap().is_ok());
        }
    }

    #[test]
    fn rep_from_adjoint_nijenhuis_rep_is_the_adjoint() {
        let pair = aff1_pair(2, -1);
        let nrep = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
        let rep = rep_from_nijenhuis_rep(&pair, &nrep).unwrap();
        assert_eq!(rep, induce_from_nijenhuis(&pair).adjoint());
    }

    #[test]
    fn matched_pair_from_the_coboundary_double() {
        let l = aff1();
        let co = coboundary_cobracket(&l, &r_aff()).unwrap();
        let id = Matrix::<Q>::identity(2);
        let mp = dual_matched_pair(&l, &id, &co, &id);
        let ns = matched_pair_from_nijenhuis(&mp).unwrap();
        assert!(check_matched_pair_nslie(&ns).unwrap().is_ok());
        let big = bicrossed_nslie(&ns).unwrap();
        let b = bicrossed(&mp).unwrap();
        let induced = induce_from_nijenhuis(&NijenhuisPair::new(b.algebra, b.operator.unwrap()).unwrap());
        assert_eq!(big, induced);
    }

    #[test]
    fn operators_are_required_for_the_matched_pair() {
        let mut mp = nijenhuis_matched_pair(1);
        mp.n = None;
        mp.s = None;
        assert!(matches!(matched_pair_from_nijenhuis(&mp), Err(crate::Error::Precondition(_))));
    }

    /// Changes one entry of one of the three families.
    fn perturb(rep: &NSRep<Q>, seed: u64) -> NSRep<Q> {
        let mut r = samples::rng(seed);
        let mut out = rep.clone();
        let fam = match r.gen_range(0..3) {
            0 => &mut out.l,
            1 => &mut out.r,
            _ => &mut out.psi,
        };
        let (dp, dv) = (fam.len(), fam[0].rows());
        let (i, a, b) = (r.gen_range(0..dp), r.gen_range(0..dv), r.gen_range(0..dv));
        let old = fam[i].get(a, b).clone();
        fam[i].set(a, b, old + q(r.gen_range(1..=2)));
        out
    }

    #[test]
    fn samples_cover_both_kinds() {
        let doubles = (0..40).filter(|&s| !nijenhuis_matched_pair(s).h.is_abelian()).count();
        assert!(doubles > 5 && doubles < 35, "{doubles}");
        let broken = (0..40)
            .filter(|&s| {
                let (p, rep, m) = ns_lie_with_rep(s);
                !check_nsrep(&p, &perturb(&rep, s), m).unwrap().is_ok()
            })
            .count();
        assert!(broken > 20, "{broken}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn induced_algebras_are_nslie(seed in 0u64..10_000) {
            let pair = samples::nijenhuis_pair(seed, 4);
            let p = induce_from_nijenhuis(&pair);
            prop_assert!(check_nslie(&p).unwrap().is_ok());
            prop_assert_eq!(subadjacent(&p).unwrap(), deformed_bracket_unchecked(&pair.algebra, &pair.n));
            prop_assert!(check_nsrep(&p, &p.adjoint(), p.dim()).unwrap().is_ok());
        }

        #[test]
        fn reps_and_their_semidirect_products(seed in 0u64..10_000) {
            let (p, rep, m) = ns_lie_with_rep(seed);
            prop_assert!(check_nsrep(&p, &rep, m).unwrap().is_ok());
            let sd = semidirect_nslie(&p, &rep, m).unwrap();
            prop_assert!(check_nslie(&sd).unwrap().is_ok());
            let sub = subadjacent(&p).unwrap();
            prop_assert!(check_representation(&sub, &rep.subadjacent_rep()).unwrap().is_ok());
        }

        #[test]
        fn semidirect_detects_representations(seed in 0u64..10_000) {
            let (p, rep, m) = ns_lie_with_rep(seed);
            let bad = perturb(&rep, seed);
            let is_rep = check_nsrep(&p, &bad, m).unwrap().is_ok();
            let sd = semidirect_nslie(&p, &bad, m).unwrap();
            prop_assert_eq!(check_nslie(&sd).unwrap().is_ok(), is_rep);
        }

        #[test]
        fn nijenhuis_matched_pairs_induce_ns_matched_pairs(seed in 0u64..10_000) {
            let mp = nijenhuis_matched_pair(seed);
            let ns = matched_pair_from_nijenhuis(&mp).unwrap();
            let report = check_matched_pair_nslie(&ns).unwrap();
            prop_assert!(report.is_ok(), "{:?}", report);
            let big = bicrossed_nslie(&ns).unwrap();
            let b = bicrossed(&mp).unwrap();
            let induced = induce_from_nijenhuis(&NijenhuisPair::new(b.algebra, b.operator.unwrap()).unwrap());
            prop_assert_eq!(&big, &induced);
            let sub = subadjacent_matched_pair(&ns).unwrap();
            prop_assert!(check_matched_pair(&sub).unwrap().is_ok());
            prop_assert_eq!(crate::bialgebra::bicrossed_bracket(&sub).unwrap(), subadjacent(&big).unwrap());
        }

        #[test]
        fn bicrossed_detects_matched_pairs(seed in 0u64..10_000) {
            let mp = nijenhuis_matched_pair(seed);
            let mut ns = matched_pair_from_nijenhuis(&mp).unwrap();
            if seed % 2 == 0 {
                ns.on_p2 = perturb(&ns.on_p2, seed);
            } else {
                ns.on_p1 = perturb(&ns.on_p1, seed);
            }
            let ok = check_matched_pair_nslie(&ns).unwrap().is_ok();
            prop_assert_eq!(check_nslie(&bicrossed_nslie_unchecked(&ns)).unwrap().is_ok(), ok);
        }
    }
}
