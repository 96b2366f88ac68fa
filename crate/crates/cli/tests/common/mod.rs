#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use nijenhuis_core::homotopy::{check_homotopy_rrb, crossed_to_strict, HomotopyRb};
use nijenhuis_core::io::{self, HomotopyRbData, Json, TwoTermWithOperator};
use nijenhuis_core::lie::adjoint_rep;
use nijenhuis_core::{samples, LieAlgebra, Matrix, NijenhuisRep};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_nijenhuis")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

pub fn write<T: Json>(dir: &Path, name: &str, x: &T) -> String {
    let p = dir.join(name);
    std::fs::write(&p, io::to_string(x)).expect("temp file");
    p.display().to_string()
}

/// A construction and the `check` kind its output must pass.
pub struct Case {
    pub construct: Vec<String>,
    pub check: String,
}

/// One case per construction kind, with inputs written into `d`.
pub fn construct_cases(d: &Path) -> Vec<Case> {
    let case = |construct: Vec<String>, check: &str| Case { construct, check: check.to_string() };
    let s = |x: &str| x.to_string();
    let mut cases = vec![
        case(vec![s("deformed-bracket"), f("AFF1.json"), f("NDIAG.json")], "lie"),
        case(vec![s("deformed-cobracket"), f("AFF1_delta_r.json"), f("ID2.json")], "coalgebra"),
        case(vec![s("semidirect"), f("SL2.json"), f("SL2_adjoint.json")], "lie"),
        case(vec![s("induce-nslie"), f("H3.json"), f("NNILP.json")], "nslie"),
        case(vec![s("coboundary-cobracket"), f("AFF1.json"), f("r_aff.json")], "coalgebra"),
    ];

    let mp = write(d, "mp.json", &samples::nijenhuis_matched_pair(3));
    cases.push(case(vec![s("bicrossed"), mp], "nijenhuis"));

    let pair = samples::nijenhuis_pair(5, 3);
    let nrep = NijenhuisRep::adjoint(&pair.algebra, &pair.n);
    let c = samples::cone_cocycle_with(&mut samples::rng(5), &pair, &nrep, 3);
    let alg = write(d, "alg.json", &pair.algebra);
    let n = write(d, "n.json", &pair.n);
    let cochain = write(d, "cochain.json", &c);
    cases.push(case(vec![s("skeletal-from-cocycle"), alg, n, cochain], "homotopy-nijenhuis"));

    let (l, hn) = crossed_to_strict(&samples::crossed_module(2)).expect("valid sample");
    let strict = write(d, "strict.json", &TwoTermWithOperator { l, hn });
    cases.push(case(vec![s("crossed-from-strict"), strict], "crossed-module"));

    let data = (0..200)
        .find_map(|seed| {
            let (l, rep) = samples::two_term_with_rep(seed);
            let op = samples::homotopy_rb_with(&mut samples::rng(seed), &l, &rep);
            let nonzero = op != HomotopyRb::zero(&l, &rep);
            let valid = check_homotopy_rrb(&l, &rep, &op).map(|r| r.is_ok()).unwrap_or(false);
            (nonzero && valid).then_some(HomotopyRbData { l, rep, op })
        })
        .expect("a nonzero homotopy operator");
    let hrb = write(d, "hrb.json", &data);
    cases.push(case(vec![s("lift-rb"), hrb], "homotopy-nijenhuis"));

    let aff1: LieAlgebra = io::load(&fixture("AFF1.json")).expect("fixture");
    let ad = write(d, "ad.json", &adjoint_rep(&aff1));
    let rb = write(d, "rb.json", &Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]));
    cases.push(case(vec![s("lift-rb"), f("AFF1.json"), ad, rb], "nijenhuis"));
    cases
}
