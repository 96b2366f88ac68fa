//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::time::Instant;

use common::{construct_cases, f, run};
use nijenhuis_core::bialgebra::{
    check_admissible_cybe, check_general_coboundary, check_nijenhuis_bialgebra, coboundary_cobracket, cybe,
    equivalence_suite, is_antisymmetric,
};
use nijenhuis_core::combinat::binomial;
use nijenhuis_core::cone::{
    certify_2coboundary, nlie_cohomology, nlie_differential, ns_chain_map_defect, ns_cohomology, partial_chain_defect,
    ConeCochain,
};
use nijenhuis_core::deformation::{
    check_equivalence, cocycle_to_infinitesimal, equivalence_witness, infinitesimal_to_cocycle, TruncatedDeformation,
};
use nijenhuis_core::homotopy::{
    check_2term, check_homotopy_nijenhuis, check_homotopy_rrb, cocycle_to_skeletal, crossed_to_strict,
    lift_homotopy_rb, semidirect_2term, skeletal_to_cocycle, strict_to_crossed,
};
use nijenhuis_core::lie::{adjoint_rep, check_lie, LieAlgebra as Lie};
use nijenhuis_core::multilinear::{ce_adjoint, ce_cohomology, fn_bracket, nr_bracket};
use nijenhuis_core::nijenhuis::{
    chain_map_defect, check_nijenhuis, check_order_n, deformed_bracket, nijenhuis_cohomology, obstruction,
    NijenhuisPair, OrderNDeformation,
};
use nijenhuis_core::nslie::{
    check_matched_pair_nslie, check_nslie, induce_from_nijenhuis, matched_pair_from_nijenhuis, subadjacent,
};
use nijenhuis_core::{fixtures, samples, AltMap, LieAlgebra, Matrix, NijenhuisRep, Rational};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: nijenhuis_core::Error) -> String {
    e.to_string()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn named_fixtures() -> Vec<(&'static str, LieAlgebra)> {
    let a1 = Lie::abelian(1);
    vec![
        ("A2", fixtures::a2()),
        ("AFF1", fixtures::aff1()),
        ("H3", fixtures::h3()),
        ("SL2", fixtures::sl2()),
        ("AFF1+AFF1", samples::direct_sum(&fixtures::aff1(), &fixtures::aff1())),
        ("H3+A1", samples::direct_sum(&fixtures::h3(), &a1)),
        ("SL2+A1", samples::direct_sum(&fixtures::sl2(), &a1)),
    ]
}

fn fixture_pairs() -> Vec<(&'static str, NijenhuisPair<Rational>)> {
    let mut out = vec![
        ("AFF1/NDIAG", NijenhuisPair::new(fixtures::aff1(), fixtures::ndiag(q(2), q(3))).unwrap()),
        ("H3/NNILP", NijenhuisPair::new(fixtures::h3(), fixtures::nnilp()).unwrap()),
    ];
    for (name, l) in named_fixtures() {
        let d = l.dim();
        out.push((name, NijenhuisPair::new(l, Matrix::identity(d)).unwrap()));
    }
    out
}

fn maurer_cartan() -> Outcome {
    let (mut nijenhuis, mut other) = (0, 0);
    for seed in 0..60 {
        let (l, n) = samples::algebra_with_operator(seed, 4);
        let def = check_nijenhuis(&l, &n).map_err(err)?.is_ok();
        let fnb = fn_bracket(&l, &AltMap::from_matrix(&n), &AltMap::from_matrix(&n)).map_err(err)?;
        ensure(def == fnb.is_zero(), || format!("seed {seed}: definition {def}, [N,N] zero {}", fnb.is_zero()))?;
        if def {
            nijenhuis += 1;
        } else {
            other += 1;
        }
    }
    ensure(nijenhuis > 0 && other > 0, || "samples cover only one verdict".into())?;
    Ok(format!("60 samples, {nijenhuis} Nijenhuis, {other} not"))
}

fn identity_cohomology() -> Outcome {
    let mut names = Vec::new();
    for (name, l) in named_fixtures() {
        let d = l.dim();
        let dims = nijenhuis_cohomology(&l, &Matrix::identity(d), d).map_err(err)?.cohomology_dims();
        let expected: Vec<usize> = (0..=d).map(|n| binomial(d, n) * d).collect();
        ensure(dims == expected, || format!("{name}: {dims:?}, expected {expected:?}"))?;
        names.push(format!("{name} {dims:?}"));
    }
    Ok(names.join("; "))
}

fn squares_vanish(pair: &NijenhuisPair<Rational>, nrep: &NijenhuisRep) -> Result<(), String> {
    let l = &pair.algebra;
    let d = l.dim();
    let complexes = [
        ("ce", ce_cohomology(l, &nrep.rep, d).map_err(err)?),
        ("ce-adjoint", ce_cohomology(l, &adjoint_rep(l), d).map_err(err)?),
        ("d_N", nijenhuis_cohomology(l, &pair.n, d).map_err(err)?),
        ("d_NS", ns_cohomology(pair, nrep, d).map_err(err)?),
        ("nlie", nlie_cohomology(pair, nrep, d).map_err(err)?),
    ];
    for (name, c) in &complexes {
        ensure(c.square_failures().is_empty(), || {
            format!("{name} squares to nonzero in degrees {:?}", c.square_failures())
        })?;
    }
    Ok(())
}

fn differentials_square_to_zero() -> Outcome {
    let fixtures = fixture_pairs();
    for (name, pair) in &fixtures {
        let nrep = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
        squares_vanish(pair, &nrep).map_err(|e| format!("{name}: {e}"))?;
    }
    for seed in 0..25 {
        let p = samples::nijenhuis_pair(seed, 3);
        let r = samples::nijenhuis_rep(seed, &p);
        squares_vanish(&p, &r).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(format!("{} fixtures and 25 random instances", fixtures.len()))
}

fn compatibility_identities() -> Outcome {
    let mut checked = 0;
    for seed in 0..25 {
        let l = samples::lie_algebra(seed, 4);
        let d = l.dim();
        for (a, b) in [(1, 1), (1, 2), (2, 2)] {
            let p = samples::alt_map(seed, a, d, d);
            let r = samples::alt_map(seed + 1000, b, d, d);
            let lhs = ce_adjoint(&l, &fn_bracket(&l, &p, &r).map_err(err)?).map_err(err)?;
            let rhs = nr_bracket(&ce_adjoint(&l, &p).map_err(err)?, &ce_adjoint(&l, &r).map_err(err)?).map_err(err)?;
            ensure(lhs == rhs, || format!("seed {seed}: CE does not map FN to NR at arities {a},{b}"))?;
            checked += 1;
        }
        let pair = samples::nijenhuis_pair(seed, 3);
        let nrep = samples::nijenhuis_rep(seed, &pair);
        let adjoint = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
        let d = pair.dim();
        for arity in 0..=2 {
            let f = samples::alt_map(seed, arity, d, d);
            ensure(partial_chain_defect(&pair, &adjoint, &f).map_err(err)?.is_zero(), || {
                format!("seed {seed}: partial N is not a chain map in arity {arity}")
            })?;
            ensure(chain_map_defect(&pair.algebra, &pair.n, &f).map_err(err)?.is_zero(), || {
                format!("seed {seed}: Phi is not a chain map in arity {arity}")
            })?;
            let g = samples::alt_map(seed, arity, d, nrep.dim_v());
            ensure(partial_chain_defect(&pair, &nrep, &g).map_err(err)?.is_zero(), || {
                format!("seed {seed}: partial N,S is not a chain map in arity {arity}")
            })?;
            ensure(ns_chain_map_defect(&pair, &nrep, &g).map_err(err)?.is_zero(), || {
                format!("seed {seed}: Phi with S is not a chain map in arity {arity}")
            })?;
            checked += 4;
        }
    }
    Ok(format!("{checked} identities on 25 seeds"))
}

fn whitehead() -> Outcome {
    let l = fixtures::sl2();
    let c = ce_cohomology(&l, &adjoint_rep(&l), 3).map_err(err)?;
    ensure(c.eliminations_agree(), || "eliminations disagree".into())?;
    ensure(c.cohomology_dims() == vec![0, 0, 0, 0], || format!("dims {:?}", c.cohomology_dims()))?;
    Ok("dims [0, 0, 0, 0], eliminations agree".into())
}

fn obstructions() -> Outcome {
    let (mut extensible, mut blocked) = (0, 0);
    for seed in 0..25 {
        let (l, def) = samples::order_one_deformation(seed, 3);
        let ob = obstruction(&l, &def).map_err(err)?;
        ensure(ob.is_cocycle, || format!("seed {seed}: d_N(Ob) is nonzero"))?;
        ensure(ob.rank_test_agrees, || format!("seed {seed}: rank test disagrees with the solve"))?;
        match &ob.witness {
            Some(w) => {
                let mut terms = def.terms.clone();
                terms.push(w.clone());
                let next = OrderNDeformation { n: def.n.clone(), terms };
                ensure(check_order_n(&l, &next).map_err(err)?.is_ok(), || {
                    format!("seed {seed}: witness does not extend")
                })?;
                extensible += 1;
            }
            None => blocked += 1,
        }
    }
    Ok(format!("25 deformations, {extensible} extended by the witness, {blocked} obstructed"))
}

fn deformation_bijection() -> Outcome {
    let (mut equivalent, mut inequivalent) = (0, 0);
    for seed in 0..25 {
        let p = samples::nijenhuis_pair(seed, 3);
        let nrep = NijenhuisRep::adjoint(&p.algebra, &p.n);
        let (chi, f) = samples::cone_2cocycle(seed, &p);
        let a = cocycle_to_infinitesimal(&p, &chi, &f).map_err(err)?;
        let back = infinitesimal_to_cocycle(&a).map_err(err)?;
        ensure(back == ConeCochain::new(chi.clone(), Some(f.clone())).map_err(err)?, || {
            format!("seed {seed}: cocycle does not round trip")
        })?;
        let b = if seed % 2 == 0 {
            let mut rng = samples::rng(seed);
            let phi = samples::matrix(&mut rng, p.dim(), p.dim(), 2);
            let c = nlie_differential(&p, &nrep, &ConeCochain::new(AltMap::from_matrix(&phi), None).map_err(err)?)
                .map_err(err)?;
            let cf = c.f.as_ref().expect("degree two");
            cocycle_to_infinitesimal(&p, &chi.sub(&c.chi), &f.sub(cf)).map_err(err)?
        } else {
            TruncatedDeformation::trivial(p.clone(), 1)
        };
        let mu = a.mu_terms[0].sub(&b.mu_terms[0]);
        let n = AltMap::from_matrix(&a.n_terms[0].sub(&b.n_terms[0]));
        let coboundary = certify_2coboundary(&p, &nrep, &mu, &n).map_err(err)?.is_some();
        let w = equivalence_witness(&a, &b).map_err(err)?;
        ensure(w.is_some() == coboundary, || {
            format!("seed {seed}: witness {} but coboundary {coboundary}", w.is_some())
        })?;
        ensure(seed % 2 == 1 || coboundary, || format!("seed {seed}: a coboundary difference was not certified"))?;
        if let Some(w) = w {
            ensure(check_equivalence(&a, &b, &w).map_err(err)?.is_ok(), || format!("seed {seed}: witness fails"))?;
            equivalent += 1;
        } else {
            inequivalent += 1;
        }
    }
    ensure(inequivalent > 0, || "no inequivalent pair sampled".into())?;
    Ok(format!("25 instances, {equivalent} equivalent, {inequivalent} not"))
}

fn homotopy_round_trips() -> Outcome {
    let (mut valid, mut invalid) = (0, 0);
    for seed in 0..25 {
        let (t, hn) = samples::skeletal_2term(seed);
        let (pair, nrep, c) = skeletal_to_cocycle(&t, &hn).map_err(err)?;
        let cf = c.f.as_ref().expect("degree two");
        let (t2, hn2) = cocycle_to_skeletal(&pair, &nrep, &c.chi, cf).map_err(err)?;
        ensure(t2 == t && hn2 == hn, || format!("seed {seed}: skeletal round trip differs"))?;

        let cm = samples::crossed_module(seed);
        let (t, hn) = crossed_to_strict(&cm).map_err(err)?;
        ensure(check_2term(&t).map_err(err)?.is_ok(), || format!("seed {seed}: strict side is not 2-term"))?;
        ensure(check_homotopy_nijenhuis(&t, &hn).map_err(err)?.is_ok(), || {
            format!("seed {seed}: strict operator fails")
        })?;
        let back = strict_to_crossed(&t, &hn).map_err(err)?;
        let same = back.g.table() == cm.g.table()
            && back.h.table() == cm.h.table()
            && (&back.n, &back.s, &back.t, &back.rho) == (&cm.n, &cm.s, &cm.t, &cm.rho);
        ensure(same, || format!("seed {seed}: crossed module round trip differs"))?;
        ensure(crossed_to_strict(&back).map_err(err)? == (t, hn), || {
            format!("seed {seed}: strict round trip differs")
        })?;

        let (t, rep) = samples::two_term_with_rep(seed);
        let op = samples::homotopy_rb_with(&mut samples::rng(seed), &t, &rep);
        let direct = check_homotopy_rrb(&t, &rep, &op).map_err(err)?.is_ok();
        let s = semidirect_2term(&t, &rep).map_err(err)?;
        let lifted = check_homotopy_nijenhuis(&s, &lift_homotopy_rb(&t, &rep, &op).map_err(err)?).map_err(err)?.is_ok();
        ensure(direct == lifted, || format!("seed {seed}: operator {direct} but lift {lifted}"))?;
        if direct {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    Ok(format!("25 seeds each; lifts agree on {valid} operators and {invalid} non-operators"))
}

fn three_way() -> Outcome {
    let l = fixtures::aff1();
    let id = Matrix::identity(2);
    let co = coboundary_cobracket(&l, &fixtures::r_aff()).map_err(err)?;
    let suite = equivalence_suite(&l, &id, &co, &id).map_err(err)?;
    ensure(suite.verdicts() == [true; 3], || format!("fixture verdicts {:?}", suite.verdicts()))?;
    let mut holds = 0;
    for seed in 0..10 {
        let (l, n, s, r) = samples::coboundary_instance(seed);
        let co = coboundary_cobracket(&l, &r).map_err(err)?;
        let suite = equivalence_suite(&l, &n, &co, &s).map_err(err)?;
        ensure(suite.agree(), || format!("seed {seed}: verdicts {:?}", suite.verdicts()))?;
        holds += usize::from(suite.verdicts()[0]);
    }
    Ok(format!("fixture true three times; 10 seeds agree, {holds} bialgebras"))
}

fn cybe_fixture() -> Outcome {
    let l = fixtures::aff1();
    let r = fixtures::r_aff();
    let id = Matrix::identity(2);
    ensure(cybe(&l, &r).map_err(err)?.sum.is_zero(), || "CYBE sum is nonzero".into())?;
    ensure(is_antisymmetric(&r), || "r is not antisymmetric".into())?;
    ensure(check_admissible_cybe(&l, &id, &id, &r).map_err(err)?.is_ok(), || "admissible CYBE fails".into())?;
    let co = coboundary_cobracket(&l, &r).map_err(err)?;
    ensure(check_nijenhuis_bialgebra(&l, &id, &co, &id).map_err(err)?.is_ok(), || "not a Nijenhuis bialgebra".into())?;
    let g = check_general_coboundary(&l, &id, &id, &r).map_err(err)?;
    ensure(g.via_identities() && g.via_definition(), || format!("coboundary routes: {g:?}"))?;
    Ok("sum tensor zero, admissible, bialgebra verified".into())
}

fn ns_bridge() -> Outcome {
    for seed in 0..25 {
        let p = samples::nijenhuis_pair(seed, 4);
        let ns = induce_from_nijenhuis(&p);
        ensure(check_nslie(&ns).map_err(err)?.is_ok(), || format!("seed {seed}: induced NS-Lie fails"))?;
        let sub = subadjacent(&ns).map_err(err)?;
        ensure(sub.table() == deformed_bracket(&p).table(), || format!("seed {seed}: subadjacent differs"))?;
        ensure(check_lie(&sub).is_ok(), || format!("seed {seed}: subadjacent is not Lie"))?;
    }
    let mut nontrivial = 0;
    for seed in 0..25 {
        let mp = samples::nijenhuis_matched_pair(seed);
        let ns = matched_pair_from_nijenhuis(&mp).map_err(err)?;
        let report = check_matched_pair_nslie(&ns).map_err(err)?;
        for k in 1..=6 {
            let label = format!("mnsl{k}");
            ensure(report.holds(&label), || format!("seed {seed}: {label} fails {} times", report.count(&label)))?;
        }
        ensure(report.is_ok(), || format!("seed {seed}: {:?}", report.labels()))?;
        nontrivial += usize::from(!mp.nu.matrices().iter().all(Matrix::is_zero));
    }
    Ok(format!("25 pairs; 25 matched pairs, {nontrivial} with nonzero back action"))
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cases = construct_cases(dir.path());
    for (i, c) in cases.iter().enumerate() {
        let target = dir.path().join(format!("out{i}.json")).display().to_string();
        let mut args: Vec<&str> = vec!["--json", "construct"];
        args.extend(c.construct.iter().map(String::as_str));
        args.extend(["--out", &target]);
        let first = run(&args);
        let object = std::fs::read(&target).map_err(|e| e.to_string())?;
        let second = run(&args);
        let label = c.construct[0].as_str();
        ensure(first.code == 0, || format!("{label} exits {}: {}", first.code, first.stdout))?;
        ensure(first.stdout == second.stdout, || format!("{label}: reports differ"))?;
        ensure(std::fs::read(&target).map_err(|e| e.to_string())? == object, || format!("{label}: outputs differ"))?;
        let checks: Vec<_> = (0..2).map(|_| run(&["--json", "check", &c.check, &target])).collect();
        ensure(checks[0].code == 0, || format!("{label}: check {} fails: {}", c.check, checks[0].stdout))?;
        ensure(checks[0].stdout == checks[1].stdout, || format!("{label}: check reports differ"))?;
        let v: Value = serde_json::from_str(&checks[0].stdout).map_err(|e| e.to_string())?;
        ensure(v["status"] == "pass", || format!("{label}: status {}", v["status"]))?;
    }
    let (h3, nnilp, sl2) = (f("H3.json"), f("NNILP.json"), f("SL2.json"));
    let reports = [
        vec!["--json", "--witnesses", "cohomology", "nlie", &h3, &nnilp],
        vec!["--json", "--witnesses", "check", "nijenhuis", &sl2, &nnilp],
        vec!["--witnesses", "cohomology", "ce", &sl2],
    ];
    for args in &reports {
        let (a, b) = (run(args), run(args));
        ensure(a.stdout == b.stdout && a.code == b.code, || format!("{args:?}: reports differ"))?;
    }
    Ok(format!("{} constructions re-check; {} further reports repeat exactly", cases.len(), reports.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("Nijenhuis check agrees with [N,N]_FN = 0", maurer_cartan),
        ("identity operator cohomology is C(d,n)d", identity_cohomology),
        ("differentials square to zero", differentials_square_to_zero),
        ("compatibility identities", compatibility_identities),
        ("SL2 adjoint cohomology vanishes", whitehead),
        ("obstruction is a cocycle and decides extensibility", obstructions),
        ("deformations correspond to cohomology classes", deformation_bijection),
        ("skeletal and strict round trips, lift equivalence", homotopy_round_trips),
        ("bialgebra, matched pair and Manin triple agree", three_way),
        ("CYBE fixture gives a Nijenhuis Lie bialgebra", cybe_fixture),
        ("NS-Lie bridge", ns_bridge),
        ("CLI round trip and determinism", cli_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
