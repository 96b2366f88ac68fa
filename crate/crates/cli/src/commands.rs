use std::path::{Path, PathBuf};

use nijenhuis_core::bialgebra::{
    bicrossed, check_admissible_cybe, check_coalgebra, check_coalgebra_nijenhuis, check_matched_pair,
    check_nijenhuis_bialgebra, check_o_operator, coboundary_cobracket, cybe, deformed_cobracket, equivalence_suite,
    Cobracket, MatchedPairData,
};
use nijenhuis_core::cone::{nlie_cohomology, ConeCochain};
use nijenhuis_core::deformation::check_truncated;
use nijenhuis_core::error::Error;
use nijenhuis_core::homotopy::{
    check_2term, check_crossed_module, check_homotopy_nijenhuis, check_homotopy_rrb, cocycle_to_skeletal,
    lift_homotopy_rb, semidirect_2term, strict_to_crossed, CrossedModule, HomotopyNijenhuis, TwoTermL,
};
use nijenhuis_core::io::{self, Deformation, HomotopyRbData, Json, RMatrix, TwoTermWithOperator};
use nijenhuis_core::lie::{adjoint_rep, check_lie, check_nijenhuis_rep, check_representation, semidirect};
use nijenhuis_core::multilinear::ce_cohomology;
use nijenhuis_core::nijenhuis::{
    check_nijenhuis, check_order_n, check_relative_rb, deformed_bracket, lift_rb, nijenhuis_cohomology, NijenhuisPair,
};
use nijenhuis_core::nslie::{
    check_matched_pair_nslie, check_nslie, check_nsrep, induce_from_nijenhuis, NSLie, NSMatchedPair, NSRep,
};
use nijenhuis_core::{
    CochainComplexReport, LieAlgebra, Matrix, NijenhuisRep, Rational, Report, Representation, Result,
};

use crate::output::{RunReport, Table};
use crate::{CheckKind, Coeff, CohomologyKind, ConstructKind};

type Q = Rational;

fn input(message: impl Into<String>) -> Error {
    Error::Input { path: "arguments".to_string(), message: message.into() }
}

fn arity(files: &[PathBuf], allowed: &[usize], usage: &str) -> Result<()> {
    if allowed.contains(&files.len()) {
        Ok(())
    } else {
        Err(input(format!("expected {usage}")))
    }
}

fn load<T: Json>(p: &Path) -> Result<T> {
    io::load(p)
}

fn square(m: &Matrix, d: usize, what: &str) -> Result<()> {
    if m.rows() != d || m.cols() != d {
        return Err(input(format!("{what} must be {d}x{d}")));
    }
    Ok(())
}

/// A pair from `ALGEBRA N` or from one file holding both.
fn pair_files(files: &[PathBuf]) -> Result<(LieAlgebra, Matrix)> {
    match files {
        [p] => {
            let pair: NijenhuisPair<Q> = load(p)?;
            Ok((pair.algebra, pair.n))
        }
        [a, n] => {
            let l: LieAlgebra = load(a)?;
            let n: Matrix = load(n)?;
            square(&n, l.dim(), "N")?;
            Ok((l, n))
        }
        _ => Err(input("expected ALGEBRA N, or one file with \"algebra\" and \"N\"")),
    }
}

fn valid_pair(l: LieAlgebra, n: Matrix) -> Result<NijenhuisPair<Q>> {
    NijenhuisPair::new(l, n)
}

/// A 2-term algebra and a homotopy operator from `L HN` or one combined file.
fn two_term_files(files: &[PathBuf]) -> Result<(TwoTermL<Q>, HomotopyNijenhuis<Q>)> {
    match files {
        [p] => {
            let c: TwoTermWithOperator = load(p)?;
            Ok((c.l, c.hn))
        }
        [t, h] => Ok((load(t)?, load(h)?)),
        _ => Err(input("expected L HN, or one file with \"L\" and \"HN\"")),
    }
}

fn nijenhuis_report(l: &LieAlgebra, n: &Matrix) -> Result<Report> {
    let mut r = Report::new();
    r.absorb_prefixed("lie", check_lie(l));
    r.absorb(check_nijenhuis(l, n)?);
    Ok(r)
}

pub fn check(kind: CheckKind, files: &[PathBuf]) -> Result<RunReport> {
    let report = match kind {
        CheckKind::Lie => {
            arity(files, &[1], "ALGEBRA")?;
            check_lie(&load(&files[0])?)
        }
        CheckKind::Nijenhuis => {
            let (l, n) = pair_files(files)?;
            nijenhuis_report(&l, &n)?
        }
        CheckKind::Rep => {
            arity(files, &[2], "ALGEBRA REP")?;
            let l: LieAlgebra = load(&files[0])?;
            let rep: Representation = load(&files[1])?;
            let mut r = Report::new();
            r.absorb_prefixed("lie", check_lie(&l));
            r.absorb(check_representation(&l, &rep)?);
            r
        }
        CheckKind::NijenhuisRep => {
            arity(files, &[3], "ALGEBRA N NREP")?;
            let l: LieAlgebra = load(&files[0])?;
            let n: Matrix = load(&files[1])?;
            square(&n, l.dim(), "N")?;
            let nrep: NijenhuisRep = load(&files[2])?;
            let mut r = nijenhuis_report(&l, &n)?;
            r.absorb(check_nijenhuis_rep(&l, &n, &nrep)?);
            r
        }
        CheckKind::Coalgebra => {
            arity(files, &[1], "COBRACKET")?;
            check_coalgebra(&load(&files[0])?)
        }
        CheckKind::CoalgebraNijenhuis => {
            arity(files, &[2], "COBRACKET S")?;
            let co: Cobracket<Q> = load(&files[0])?;
            let s: Matrix = load(&files[1])?;
            square(&s, co.dim(), "S")?;
            let mut r = Report::new();
            r.absorb_prefixed("coalgebra", check_coalgebra(&co));
            r.absorb(check_coalgebra_nijenhuis(&co, &s)?);
            r
        }
        CheckKind::MatchedPair => {
            arity(files, &[1], "MATCHED_PAIR")?;
            check_matched_pair(&load::<MatchedPairData<Q>>(&files[0])?)?
        }
        CheckKind::Manin | CheckKind::Bialgebra => {
            arity(files, &[4], "ALGEBRA N COBRACKET S")?;
            let l: LieAlgebra = load(&files[0])?;
            let n: Matrix = load(&files[1])?;
            let co: Cobracket<Q> = load(&files[2])?;
            let s: Matrix = load(&files[3])?;
            square(&n, l.dim(), "N")?;
            if co.dim() != l.dim() {
                return Err(input("the cobracket and the algebra have different dimensions"));
            }
            square(&s, l.dim(), "S")?;
            if kind == CheckKind::Manin {
                equivalence_suite(&l, &n, &co, &s)?.manin_triple
            } else {
                check_nijenhuis_bialgebra(&l, &n, &co, &s)?
            }
        }
        CheckKind::Cybe => {
            arity(files, &[2], "ALGEBRA R")?;
            let l: LieAlgebra = load(&files[0])?;
            let r: RMatrix = load(&files[1])?;
            square(&r.0, l.dim(), "r")?;
            let sum = cybe(&l, &r.0)?.sum;
            let d = l.dim();
            let mut report = Report::new();
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        report.check("cybe", &[a, b, c], &[sum.get(a, b, c).clone()]);
                    }
                }
            }
            report
        }
        CheckKind::AdmissibleCybe => {
            arity(files, &[4], "ALGEBRA N S R")?;
            let l: LieAlgebra = load(&files[0])?;
            let n: Matrix = load(&files[1])?;
            let s: Matrix = load(&files[2])?;
            let r: RMatrix = load(&files[3])?;
            for (m, w) in [(&n, "N"), (&s, "S"), (&r.0, "r")] {
                square(m, l.dim(), w)?;
            }
            check_admissible_cybe(&l, &n, &s, &r.0)?
        }
        CheckKind::OOperator => {
            arity(files, &[4], "ALGEBRA N NREP R")?;
            let l: LieAlgebra = load(&files[0])?;
            let n: Matrix = load(&files[1])?;
            square(&n, l.dim(), "N")?;
            let nrep: NijenhuisRep = load(&files[2])?;
            let r: Matrix = load(&files[3])?;
            check_o_operator(&l, &n, &nrep, &r)?
        }
        CheckKind::Nslie => {
            arity(files, &[1], "NSLIE")?;
            check_nslie(&load::<NSLie<Q>>(&files[0])?)?
        }
        CheckKind::NsRep => {
            arity(files, &[2], "NSLIE NSREP")?;
            let p: NSLie<Q> = load(&files[0])?;
            let rep: NSRep<Q> = load(&files[1])?;
            let mut r = Report::new();
            r.absorb_prefixed("nslie", check_nslie(&p)?);
            r.absorb(check_nsrep(&p, &rep, rep.dim_v())?);
            r
        }
        CheckKind::NsMatchedPair => {
            arity(files, &[1], "NS_MATCHED_PAIR")?;
            check_matched_pair_nslie(&load::<NSMatchedPair<Q>>(&files[0])?)?
        }
        CheckKind::TwoTerm => {
            arity(files, &[1], "L")?;
            let t: TwoTermL<Q> = match load::<TwoTermWithOperator>(&files[0]) {
                Ok(c) => c.l,
                Err(_) => load(&files[0])?,
            };
            check_2term(&t)?
        }
        CheckKind::HomotopyNijenhuis => {
            let (t, hn) = two_term_files(files)?;
            let mut r = Report::new();
            r.absorb_prefixed("2term", check_2term(&t)?);
            r.absorb(check_homotopy_nijenhuis(&t, &hn)?);
            r
        }
        CheckKind::CrossedModule => {
            arity(files, &[1], "CROSSED_MODULE")?;
            check_crossed_module(&load::<CrossedModule<Q>>(&files[0])?)?
        }
        CheckKind::Deformation => {
            arity(files, &[1], "DEFORMATION")?;
            match load::<Deformation>(&files[0])? {
                Deformation::Operator { algebra, def } => {
                    let mut r = Report::new();
                    r.absorb_prefixed("lie", check_lie(&algebra));
                    r.absorb(check_order_n(&algebra, &def)?);
                    r
                }
                Deformation::Full(t) => check_truncated(&t),
            }
        }
    };
    Ok(RunReport::from_report(report))
}

fn table(name: &str, c: &CochainComplexReport, witnesses: bool, failures: &mut Report) -> Table {
    for n in c.square_failures() {
        failures.fail("square", &[n], "consecutive differentials do not compose to zero");
    }
    if !c.eliminations_agree() {
        failures.fail("elimination", &[], "the two elimination routines disagree on a rank");
    }
    let representatives = if witnesses {
        (0..=c.up_to())
            .map(|n| c.representatives(n).iter().map(|v| v.iter().map(ToString::to_string).collect()).collect())
            .collect()
    } else {
        Vec::new()
    };
    Table { name: name.to_string(), rows: c.table(), representatives }
}

pub fn cohomology(
    kind: CohomologyKind,
    files: &[PathBuf],
    up_to: Option<usize>,
    coeff: Coeff,
    witnesses: bool,
) -> Result<RunReport> {
    let mut failures = Report::new();
    let t = match kind {
        CohomologyKind::Ce => {
            arity(files, &[1, 2], "ALGEBRA [REP]")?;
            let l: LieAlgebra = load(&files[0])?;
            if !check_lie(&l).is_ok() {
                return Err(Error::Precondition("not a Lie algebra".into()));
            }
            let (rep, name) = match (files.get(1), coeff) {
                (Some(p), _) => (load::<Representation>(p)?, "H^n(g; V)"),
                (None, Coeff::Adjoint) => (adjoint_rep(&l), "H^n(g; g)"),
                (None, Coeff::Trivial) => (Representation::trivial(l.dim(), 1), "H^n(g; k)"),
            };
            if !check_representation(&l, &rep)?.is_ok() {
                return Err(Error::Precondition("not a representation".into()));
            }
            let c = ce_cohomology(&l, &rep, up_to.unwrap_or(l.dim()))?;
            table(name, &c, witnesses, &mut failures)
        }
        CohomologyKind::Nop => {
            let (l, n) = pair_files(files)?;
            if !check_lie(&l).is_ok() {
                return Err(Error::Precondition("not a Lie algebra".into()));
            }
            let c = nijenhuis_cohomology(&l, &n, up_to.unwrap_or(l.dim()))?;
            table("H^n(N)", &c, witnesses, &mut failures)
        }
        CohomologyKind::Nlie => {
            let (pair, nrep) = match files {
                [a, n, r] => {
                    let (l, n) = pair_files(&[a.clone(), n.clone()])?;
                    (valid_pair(l, n)?, load::<NijenhuisRep>(r)?)
                }
                _ => {
                    let (l, n) = pair_files(files)?;
                    let pair = valid_pair(l, n)?;
                    let nrep = match coeff {
                        Coeff::Adjoint => NijenhuisRep::adjoint(&pair.algebra, &pair.n),
                        Coeff::Trivial => {
                            NijenhuisRep { rep: Representation::trivial(pair.dim(), 1), s: Matrix::identity(1) }
                        }
                    };
                    (pair, nrep)
                }
            };
            let c = nlie_cohomology(&pair, &nrep, up_to.unwrap_or(pair.dim()))?;
            table("H^n_NLie", &c, witnesses, &mut failures)
        }
    };
    Ok(RunReport::tables(vec![t], failures))
}

fn emit<T: Json>(x: &T, out: Option<&Path>) -> Result<RunReport> {
    let text = io::to_string(x);
    match out {
        Some(p) => {
            std::fs::write(p, &text)
                .map_err(|e| Error::Input { path: p.display().to_string(), message: e.to_string() })?;
            Ok(RunReport::written(Some(p.display().to_string())))
        }
        None => {
            print!("{text}");
            Ok(RunReport::written(None))
        }
    }
}

pub fn construct(kind: ConstructKind, files: &[PathBuf], out: Option<&Path>) -> Result<RunReport> {
    match kind {
        ConstructKind::DeformedBracket => {
            let (l, n) = pair_files(files)?;
            emit(&deformed_bracket(&valid_pair(l, n)?), out)
        }
        ConstructKind::DeformedCobracket => {
            arity(files, &[2], "COBRACKET S")?;
            let co: Cobracket<Q> = load(&files[0])?;
            let s: Matrix = load(&files[1])?;
            square(&s, co.dim(), "S")?;
            emit(&deformed_cobracket(&co, &s)?, out)
        }
        ConstructKind::Semidirect => {
            arity(files, &[2], "ALGEBRA REP")?;
            let l: LieAlgebra = load(&files[0])?;
            let rep: Representation = load(&files[1])?;
            if !check_lie(&l).is_ok() || !check_representation(&l, &rep)?.is_ok() {
                return Err(Error::Precondition("not a representation of a Lie algebra".into()));
            }
            emit(&semidirect(&l, &rep)?, out)
        }
        ConstructKind::Bicrossed => {
            arity(files, &[1], "MATCHED_PAIR")?;
            let b = bicrossed(&load::<MatchedPairData<Q>>(&files[0])?)?;
            match b.operator {
                Some(n) => emit(&NijenhuisPair { algebra: b.algebra, n }, out),
                None => emit(&b.algebra, out),
            }
        }
        ConstructKind::InduceNslie => {
            let (l, n) = pair_files(files)?;
            emit(&induce_from_nijenhuis(&valid_pair(l, n)?), out)
        }
        ConstructKind::SkeletalFromCocycle => {
            arity(files, &[3, 4], "ALGEBRA N [NREP] COCHAIN")?;
            let (l, n) = pair_files(&files[..2])?;
            let pair = valid_pair(l, n)?;
            let nrep = match files.len() {
                4 => load::<NijenhuisRep>(&files[2])?,
                _ => NijenhuisRep::adjoint(&pair.algebra, &pair.n),
            };
            let c: ConeCochain<Q> = load(&files[files.len() - 1])?;
            let Some(f) = &c.f else {
                return Err(Error::Precondition("the cochain must have degree 3".into()));
            };
            let (l, hn) = cocycle_to_skeletal(&pair, &nrep, &c.chi, f)?;
            emit(&TwoTermWithOperator { l, hn }, out)
        }
        ConstructKind::CrossedFromStrict => {
            let (t, hn) = two_term_files(files)?;
            if !check_homotopy_nijenhuis(&t, &hn)?.is_ok() {
                return Err(Error::Precondition("not a homotopy Nijenhuis operator".into()));
            }
            emit(&strict_to_crossed(&t, &hn)?, out)
        }
        ConstructKind::CoboundaryCobracket => {
            arity(files, &[2], "ALGEBRA R")?;
            let l: LieAlgebra = load(&files[0])?;
            let r: RMatrix = load(&files[1])?;
            square(&r.0, l.dim(), "r")?;
            if !check_lie(&l).is_ok() {
                return Err(Error::Precondition("not a Lie algebra".into()));
            }
            emit(&coboundary_cobracket(&l, &r.0)?, out)
        }
        ConstructKind::LiftRb => match files {
            [d] => {
                let data: HomotopyRbData = load(d)?;
                if !check_homotopy_rrb(&data.l, &data.rep, &data.op)?.is_ok() {
                    return Err(Error::Precondition("not a homotopy relative Rota–Baxter operator".into()));
                }
                let l = semidirect_2term(&data.l, &data.rep)?;
                let hn = lift_homotopy_rb(&data.l, &data.rep, &data.op)?;
                emit(&TwoTermWithOperator { l, hn }, out)
            }
            [a, rep, r] => {
                let l: LieAlgebra = load(a)?;
                let rep: Representation = load(rep)?;
                let r: Matrix = load(r)?;
                if !check_lie(&l).is_ok() || !check_representation(&l, &rep)?.is_ok() {
                    return Err(Error::Precondition("not a representation of a Lie algebra".into()));
                }
                if !check_relative_rb(&l, &rep, &r)?.is_ok() {
                    return Err(Error::Precondition("not a relative Rota–Baxter operator".into()));
                }
                emit(&lift_rb(&l, &rep, &r)?, out)
            }
            _ => Err(input("expected ALGEBRA REP R, or one file with \"L\", \"rep\" and \"R\"")),
        },
    }
}
