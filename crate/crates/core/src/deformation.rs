//! Truncated deformations of a Nijenhuis Lie algebra and their equivalences.
//!
//! A deformation of order `n` is `μ_t = Σ t^i μ_i`, `N_t = Σ t^i N_i` taken
//! modulo `t^{n+1}`, with `μ_0` the original bracket and `N_0 = N`.

use crate::cone::{certify_2coboundary, certify_2cocycle, ConeCochain};
use crate::error::{precondition, shape, Result};
use crate::lie::{check_operator, unit, vadd, vsub, NijenhuisRep};
use crate::linalg::Matrix;
use crate::multilinear::AltMap;
use crate::nijenhuis::NijenhuisPair;
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation<T> {
    pub base: NijenhuisPair<T>,
    /// `μ_1, ..., μ_n`.
    pub mu_terms: Vec<AltMap<T>>,
    /// `N_1, ..., N_n`.
    pub n_terms: Vec<Matrix<T>>,
}

impl<T: Scalar> TruncatedDeformation<T> {
    pub fn new(base: NijenhuisPair<T>, mu_terms: Vec<AltMap<T>>, n_terms: Vec<Matrix<T>>) -> Result<Self> {
        if mu_terms.len() != n_terms.len() {
            return shape("bracket and operator terms must have the same count");
        }
        let d = base.dim();
        for mu in &mu_terms {
            if (mu.arity(), mu.dim(), mu.target()) != (2, d, d) {
                return shape("bracket terms must be alternating bilinear maps on the algebra");
            }
        }
        for (i, n) in n_terms.iter().enumerate() {
            check_operator(&format!("N_{}", i + 1), n, d, d)?;
        }
        Ok(Self { base, mu_terms, n_terms })
    }

    /// The undeformed pair viewed as a deformation of the given order.
    pub fn trivial(base: NijenhuisPair<T>, order: usize) -> Self {
        let d = base.dim();
        Self { mu_terms: vec![AltMap::zeros(2, d, d); order], n_terms: vec![Matrix::zeros(d, d); order], base }
    }

    pub fn order(&self) -> usize {
        self.mu_terms.len()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `μ_i`, with `μ_0` the bracket.
    pub fn mu(&self, i: usize) -> AltMap<T> {
        if i == 0 {
            AltMap::from_lie(&self.base.algebra)
        } else {
            self.mu_terms[i - 1].clone()
        }
    }

    /// `N_i`, with `N_0 = N`.
    pub fn n(&self, i: usize) -> &Matrix<T> {
        if i == 0 {
            &self.base.n
        } else {
            &self.n_terms[i - 1]
        }
    }
}

/// `φ_t = Id + Σ t^i φ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedEquivalence<T> {
    pub phi_terms: Vec<Matrix<T>>,
}

impl<T: Scalar> TruncatedEquivalence<T> {
    pub fn phi(&self, i: usize, dim: usize) -> Matrix<T> {
        if i == 0 {
            Matrix::identity(dim)
        } else {
            self.phi_terms[i - 1].clone()
        }
    }
}

fn apply2<T: Scalar>(mu: &AltMap<T>, x: &[T], y: &[T]) -> Vec<T> {
    mu.eval(&[x.to_vec(), y.to_vec()])
}

/// Per-order residuals of the two convolution identities: `jacobi` on basis
/// triples with indices `[p, i, j, k]` and `nijenhuis` on basis pairs with
/// indices `[p, i, j]`, for `0 ≤ p ≤ order`.
pub fn check_truncated<T: Scalar>(def: &TruncatedDeformation<T>) -> Report {
    let d = def.dim();
    let mus: Vec<AltMap<T>> = (0..=def.order()).map(|i| def.mu(i)).collect();
    let mut report = Report::new();
    for p in 0..=def.order() {
        for t in crate::combinat::combinations(d, 3) {
            let (x, y, z) = (unit(d, t[0]), unit(d, t[1]), unit(d, t[2]));
            let mut acc = vec![T::zero(); d];
            for i in 0..=p {
                let (a, b) = (&mus[i], &mus[p - i]);
                for (u, v, w) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                    acc = vadd(&acc, &apply2(a, &apply2(b, u, v), w));
                }
            }
            report.check("jacobi", &[p, t[0], t[1], t[2]], &acc);
        }
        for t in crate::combinat::combinations(d, 2) {
            let (x, y) = (unit(d, t[0]), unit(d, t[1]));
            let mut acc = vec![T::zero(); d];
            for i in 0..=p {
                for j in 0..=p - i {
                    let k = p - i - j;
                    let (ni, nj, nk) = (def.n(i), def.n(j), def.n(k));
                    let lhs = apply2(&mus[i], &nj.apply(&x), &nk.apply(&y));
                    let inner = vsub(
                        &vadd(&apply2(&mus[j], &nk.apply(&x), &y), &apply2(&mus[j], &x, &nk.apply(&y))),
                        &nk.apply(&apply2(&mus[j], &x, &y)),
                    );
                    acc = vadd(&acc, &vsub(&lhs, &ni.apply(&inner)));
                }
            }
            report.check("nijenhuis", &[p, t[0], t[1]], &acc);
        }
    }
    report
}

/// `(μ_1, N_1)` as a cone 2-cochain with adjoint coefficients.
pub fn infinitesimal_to_cocycle<T: Scalar>(def: &TruncatedDeformation<T>) -> Result<ConeCochain<T>> {
    if def.order() != 1 {
        return precondition("an infinitesimal deformation has order one");
    }
    if !check_truncated(def).is_ok() {
        return precondition("not a deformation of order one");
    }
    ConeCochain::new(def.mu_terms[0].clone(), Some(AltMap::from_matrix(&def.n_terms[0])))
}

/// `(μ + tχ, N + tF)`; fails unless `(χ, F)` is a 2-cocycle.
pub fn cocycle_to_infinitesimal<T: Scalar>(
    pair: &NijenhuisPair<T>,
    chi: &AltMap<T>,
    f: &AltMap<T>,
) -> Result<TruncatedDeformation<T>> {
    let nrep = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
    if !certify_2cocycle(pair, &nrep, chi, f)?.is_ok() {
        return precondition("not a 2-cocycle");
    }
    TruncatedDeformation::new(pair.clone(), vec![chi.clone()], vec![f.to_matrix()])
}

/// Per-order residuals of `φ_t ∘ μ_t = μ'_t(φ_t, φ_t)` (`homomorphism`, on
/// basis pairs) and `N'_t ∘ φ_t = φ_t ∘ N_t` (`intertwining`, per basis
/// vector), for `φ_t` from `a` to `b`.
pub fn check_equivalence<T: Scalar>(
    a: &TruncatedDeformation<T>,
    b: &TruncatedDeformation<T>,
    eq: &TruncatedEquivalence<T>,
) -> Result<Report> {
    if a.order() != b.order() || eq.phi_terms.len() != a.order() {
        return shape("deformations and equivalence must have the same order");
    }
    if a.base != b.base {
        return shape("deformations of different Nijenhuis Lie algebras");
    }
    let d = a.dim();
    for (i, phi) in eq.phi_terms.iter().enumerate() {
        check_operator(&format!("phi_{}", i + 1), phi, d, d)?;
    }
    let order = a.order();
    let phis: Vec<Matrix<T>> = (0..=order).map(|i| eq.phi(i, d)).collect();
    let (mus_a, mus_b): (Vec<_>, Vec<_>) = (0..=order).map(|i| (a.mu(i), b.mu(i))).unzip();
    let mut report = Report::new();
    for p in 0..=order {
        for t in crate::combinat::combinations(d, 2) {
            let (x, y) = (unit(d, t[0]), unit(d, t[1]));
            let mut acc = vec![T::zero(); d];
            for i in 0..=p {
                acc = vadd(&acc, &phis[i].apply(&apply2(&mus_a[p - i], &x, &y)));
                for j in 0..=p - i {
                    let k = p - i - j;
                    acc = vsub(&acc, &apply2(&mus_b[i], &phis[j].apply(&x), &phis[k].apply(&y)));
                }
            }
            report.check("homomorphism", &[p, t[0], t[1]], &acc);
        }
        let mut m = Matrix::zeros(d, d);
        for i in 0..=p {
            m = m.add(&b.n(i).mul(&phis[p - i])).sub(&phis[i].mul(a.n(p - i)));
        }
        for j in 0..d {
            report.check("intertwining", &[p, j], &m.column(j));
        }
    }
    Ok(report)
}

/// Solves `(μ_1 - μ'_1, N_1 - N'_1) = δ_NLie φ_1`; `None` when the two
/// infinitesimal deformations are not equivalent.
pub fn equivalence_witness<T: Scalar>(
    a: &TruncatedDeformation<T>,
    b: &TruncatedDeformation<T>,
) -> Result<Option<TruncatedEquivalence<T>>> {
    if a.base != b.base {
        return shape("deformations of different Nijenhuis Lie algebras");
    }
    let (ca, cb) = (infinitesimal_to_cocycle(a)?, infinitesimal_to_cocycle(b)?);
    let nrep = NijenhuisRep::adjoint(&a.base.algebra, &a.base.n);
    let chi = ca.chi.sub(&cb.chi);
    let f = ca.f.expect("degree two").sub(&cb.f.expect("degree two"));
    Ok(certify_2coboundary(&a.base, &nrep, &chi, &f)?.map(|phi| TruncatedEquivalence { phi_terms: vec![phi] }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{nlie_cohomology, nlie_differential};
    use crate::fixtures;
    use crate::samples;
    use num::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn aff1_pair(a: i64, b: i64) -> NijenhuisPair<Q> {
        NijenhuisPair::new(fixtures::aff1(), fixtures::ndiag(q(a), q(b))).unwrap()
    }

    fn from_phi(pair: &NijenhuisPair<Q>, phi: &Matrix<Q>) -> TruncatedDeformation<Q> {
        let nrep = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
        let c = nlie_differential(pair, &nrep, &ConeCochain::new(AltMap::from_matrix(phi), None).unwrap()).unwrap();
        cocycle_to_infinitesimal(pair, &c.chi, c.f.as_ref().unwrap()).unwrap()
    }

    #[test]
    fn low_orders() {
        let p = aff1_pair(1, 0);
        assert!(check_truncated(&TruncatedDeformation::trivial(p.clone(), 0)).is_ok());
        assert!(check_truncated(&TruncatedDeformation::trivial(p.clone(), 3)).is_ok());
        let n_again = TruncatedDeformation::new(p.clone(), vec![AltMap::zeros(2, 2, 2)], vec![p.n.clone()]).unwrap();
        assert!(check_truncated(&n_again).is_ok());
        let c = infinitesimal_to_cocycle(&n_again).unwrap();
        assert_eq!(c.f.unwrap().to_matrix(), p.n);
        let phi = Matrix::from_i64_rows(&[&[2, 1], &[0, -1]]);
        assert!(check_truncated(&from_phi(&p, &phi)).is_ok());
    }

    #[test]
    fn non_deformation_is_located() {
        let p = NijenhuisPair::new(fixtures::sl2(), Matrix::identity(3)).unwrap();
        let mu = AltMap::from_fn(2, 3, 3, |t| if t == [0, 1] { vec![q(1), q(0), q(0)] } else { vec![q(0); 3] });
        let def = TruncatedDeformation::new(p, vec![mu], vec![Matrix::zeros(3, 3)]).unwrap();
        let r = check_truncated(&def);
        assert!(!r.holds("jacobi"));
        assert!(r.witnesses.iter().all(|w| w.indices[0] == 1));
        assert!(infinitesimal_to_cocycle(&def).is_err());
    }

    #[test]
    fn shapes_are_checked() {
        let p = aff1_pair(1, 0);
        assert!(TruncatedDeformation::new(p.clone(), vec![AltMap::zeros(2, 2, 2)], vec![]).is_err());
        assert!(TruncatedDeformation::new(p.clone(), vec![AltMap::zeros(1, 2, 2)], vec![Matrix::zeros(2, 2)]).is_err());
        let a = TruncatedDeformation::trivial(p.clone(), 1);
        let b = TruncatedDeformation::trivial(p, 2);
        assert!(check_equivalence(&a, &b, &TruncatedEquivalence { phi_terms: vec![] }).is_err());
    }

    #[test]
    fn equivalences() {
        let p = aff1_pair(1, 0);
        let triv = TruncatedDeformation::trivial(p.clone(), 1);
        let zero = TruncatedEquivalence { phi_terms: vec![Matrix::zeros(2, 2)] };
        assert!(check_equivalence(&triv, &triv, &zero).unwrap().is_ok());
        assert_eq!(equivalence_witness(&triv, &triv).unwrap(), Some(zero));
        let phi = Matrix::from_i64_rows(&[&[2, 1], &[0, -1]]);
        let def = from_phi(&p, &phi);
        let eq = TruncatedEquivalence { phi_terms: vec![phi.clone()] };
        assert!(check_equivalence(&def, &triv, &eq).unwrap().is_ok());
        let w = equivalence_witness(&def, &triv).unwrap().unwrap();
        assert!(check_equivalence(&def, &triv, &w).unwrap().is_ok());
    }

    #[test]
    fn nonzero_class_has_no_witness() {
        let p = aff1_pair(1, 0);
        let nrep = NijenhuisRep::adjoint(&p.algebra, &p.n);
        let h = nlie_cohomology(&p, &nrep, 2).unwrap();
        assert!(h.cohomology(2) > 0);
        let c = ConeCochain::from_vec(2, 2, 2, &h.representatives(2)[0]).unwrap();
        let def = cocycle_to_infinitesimal(&p, &c.chi, c.f.as_ref().unwrap()).unwrap();
        assert!(check_truncated(&def).is_ok());
        let triv = TruncatedDeformation::trivial(p, 1);
        assert_eq!(equivalence_witness(&def, &triv).unwrap(), None);
        // A naive guess fails the identities.
        let guess = TruncatedEquivalence { phi_terms: vec![Matrix::zeros(2, 2)] };
        assert!(!check_equivalence(&def, &triv, &guess).unwrap().is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn order_one_validity_is_the_cocycle_condition(seed in 0u64..10_000, valid in any::<bool>()) {
            let p = samples::nijenhuis_pair(seed, 3);
            let (chi, f) = if valid {
                samples::cone_2cocycle(seed, &p)
            } else {
                let d = p.dim();
                (samples::alt_map(seed, 2, d, d), samples::alt_map(seed + 1, 1, d, d))
            };
            let nrep = NijenhuisRep::adjoint(&p.algebra, &p.n);
            let certified = certify_2cocycle(&p, &nrep, &chi, &f).unwrap().is_ok();
            let def = TruncatedDeformation::new(p.clone(), vec![chi.clone()], vec![f.to_matrix()]).unwrap();
            prop_assert_eq!(check_truncated(&def).is_ok(), certified);
            if certified {
                let back = infinitesimal_to_cocycle(&cocycle_to_infinitesimal(&p, &chi, &f).unwrap()).unwrap();
                prop_assert_eq!(back, ConeCochain::new(chi, Some(f)).unwrap());
            }
        }

        #[test]
        fn witness_iff_coboundary(seed in 0u64..10_000, exact in any::<bool>()) {
            let p = samples::nijenhuis_pair(seed, 3);
            let nrep = NijenhuisRep::adjoint(&p.algebra, &p.n);
            let (chi, f) = samples::cone_2cocycle(seed, &p);
            let a = cocycle_to_infinitesimal(&p, &chi, &f).unwrap();
            let b = if exact {
                let mut rng = samples::rng(seed);
                let phi = samples::matrix(&mut rng, p.dim(), p.dim(), 2);
                let c = nlie_differential(&p, &nrep, &ConeCochain::new(AltMap::from_matrix(&phi), None).unwrap()).unwrap();
                cocycle_to_infinitesimal(&p, &chi.sub(&c.chi), &f.sub(c.f.as_ref().unwrap())).unwrap()
            } else {
                TruncatedDeformation::trivial(p.clone(), 1)
            };
            let is_coboundary = certify_2coboundary(&p, &nrep, &a.mu_terms[0].sub(&b.mu_terms[0]),
                &AltMap::from_matrix(&a.n_terms[0].sub(&b.n_terms[0]))).unwrap().is_some();
            let w = equivalence_witness(&a, &b).unwrap();
            prop_assert_eq!(w.is_some(), is_coboundary);
            if exact {
                prop_assert!(w.is_some());
            }
            if let Some(w) = w {
                prop_assert!(check_equivalence(&a, &b, &w).unwrap().is_ok());
            }
        }
    }
}
