//! JSON formats for every object the command-line tool reads or writes.
//!
//! Rationals are strings `"p/q"` or `"p"`; plain JSON integers are also
//! accepted on input. Indices are 0-based. Wherever an object is expected,
//! a string is read as a path to a file holding that object, relative to the
//! directory of the file being read.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::bialgebra::{Cobracket, MatchedPairData};
use crate::combinat::combinations;
use crate::cone::ConeCochain;
use crate::deformation::TruncatedDeformation;
use crate::error::Error;
use crate::homotopy::{CrossedModule, HomotopyNijenhuis, HomotopyRb, TwoTermL, TwoTermRep};
use crate::lie;
use crate::linalg;
use crate::multilinear;
use crate::nijenhuis::{NijenhuisPair, OrderNDeformation};
use crate::nslie::{NSLie, NSMatchedPair, NSRep};
use crate::{Rational, Result};

type Matrix = linalg::Matrix<Rational>;
type LieAlgebra = lie::LieAlgebra<Rational>;
type Representation = lie::Representation<Rational>;
type NijenhuisRep = lie::NijenhuisRep<Rational>;
type AltMap = multilinear::AltMap<Rational>;

/// Where a value came from, for error messages and relative paths.
#[derive(Clone, Debug)]
pub struct Ctx {
    file: String,
    dir: Option<PathBuf>,
    path: String,
}

impl Ctx {
    pub fn root(file: &str, dir: Option<PathBuf>) -> Self {
        Self { file: file.to_string(), dir, path: "$".to_string() }
    }

    fn key(&self, k: &str) -> Self {
        Self { path: format!("{}.{k}", self.path), ..self.clone() }
    }

    fn at(&self, i: usize) -> Self {
        Self { path: format!("{}[{i}]", self.path), ..self.clone() }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Input { path: format!("{}: {}", self.file, self.path), message: message.into() })
    }
}

/// Conversion to and from the documented JSON schema.
pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self>;
}

pub fn parse_str<T: Json>(text: &str, name: &str) -> Result<T> {
    let v = parse_value(text, name)?;
    T::from_json(&v, &Ctx::root(name, None))
}

pub fn load<T: Json>(path: &Path) -> Result<T> {
    let name = path.display().to_string();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Input { path: name.clone(), message: e.to_string() })?;
    let v = parse_value(&text, &name)?;
    T::from_json(&v, &Ctx::root(&name, path.parent().map(Path::to_path_buf)))
}

/// Indented JSON with arrays of scalars kept on one line, so matrices read row by row.
pub fn to_string<T: Json>(x: &T) -> String {
    let mut s = String::new();
    pretty(&x.to_json(), 0, &mut s);
    s.push('\n');
    s
}

fn pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize").replace(',', ", "));
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                pretty(x, indent + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                pretty(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn parse_value(text: &str, name: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Input {
        path: name.to_string(),
        message: format!("line {} column {}: {e}", e.line(), e.column()),
    })
}

/// Follows a string to the file it names.
fn resolve(v: &Value, ctx: &Ctx) -> Result<(Value, Ctx)> {
    match v {
        Value::String(s) => {
            let p = match &ctx.dir {
                Some(d) => d.join(s),
                None => PathBuf::from(s),
            };
            let name = p.display().to_string();
            let text = std::fs::read_to_string(&p).map_err(|e| Error::Input {
                path: format!("{}: {}", ctx.file, ctx.path),
                message: format!("{name}: {e}"),
            })?;
            let v = parse_value(&text, &name)?;
            Ok((v, Ctx::root(&name, p.parent().map(Path::to_path_buf))))
        }
        _ => Ok((v.clone(), ctx.clone())),
    }
}

fn object<'v>(v: &'v Value, ctx: &Ctx) -> Result<&'v Map<String, Value>> {
    v.as_object().map_or_else(|| ctx.err("expected an object"), Ok)
}

fn field<'v>(v: &'v Value, k: &str, ctx: &Ctx) -> Result<(&'v Value, Ctx)> {
    match object(v, ctx)?.get(k) {
        Some(x) => Ok((x, ctx.key(k))),
        None => ctx.err(format!("missing field \"{k}\"")),
    }
}

fn sub<T: Json>(v: &Value, k: &str, ctx: &Ctx) -> Result<T> {
    let (x, c) = field(v, k, ctx)?;
    let (x, c) = resolve(x, &c)?;
    T::from_json(&x, &c)
}

fn opt_sub<T: Json>(v: &Value, k: &str, ctx: &Ctx) -> Result<Option<T>> {
    match object(v, ctx)?.get(k) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => sub(v, k, ctx).map(Some),
    }
}

fn usize_field(v: &Value, k: &str, ctx: &Ctx) -> Result<usize> {
    let (x, c) = field(v, k, ctx)?;
    match x.as_u64() {
        Some(n) if n <= 64 => Ok(n as usize),
        Some(_) => c.err("dimension too large"),
        None => c.err("expected a non-negative integer"),
    }
}

fn list(v: &Value, k: &str, ctx: &Ctx) -> Result<(Vec<Value>, Ctx)> {
    let (x, c) = field(v, k, ctx)?;
    match x.as_array() {
        Some(a) => Ok((a.clone(), c)),
        None => c.err("expected an array"),
    }
}

fn operators(v: &Value, k: &str, ctx: &Ctx, count: usize, rows: usize, cols: usize) -> Result<Vec<Matrix>> {
    let (items, c) = list(v, k, ctx)?;
    if items.len() != count {
        return c.err(format!("expected {count} operators, got {}", items.len()));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let (x, ci) = resolve(x, &c.at(i))?;
            let m = Matrix::from_json(&x, &ci)?;
            if (m.rows(), m.cols()) != (rows, cols) {
                return ci.err(format!("expected a {rows}x{cols} operator"));
            }
            Ok(m)
        })
        .collect()
}

fn sized(m: Matrix, rows: usize, cols: usize, ctx: &Ctx) -> Result<Matrix> {
    if (m.rows(), m.cols()) != (rows, cols) {
        return ctx.err(format!("expected a {rows}x{cols} operator, got {}x{}", m.rows(), m.cols()));
    }
    Ok(m)
}

fn sized_field(v: &Value, k: &str, ctx: &Ctx, rows: usize, cols: usize) -> Result<Matrix> {
    sized(sub(v, k, ctx)?, rows, cols, &ctx.key(k))
}

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn parse_rational(v: &Value, ctx: &Ctx) -> Result<Rational> {
    match v {
        Value::String(s) => {
            let t = s.trim();
            if t.split('/').nth(1).is_some_and(|d| d.trim_start_matches(['+', '-']).chars().all(|c| c == '0')) {
                return ctx.err(format!("zero denominator in \"{s}\""));
            }
            Rational::from_str(t).map_or_else(|_| ctx.err(format!("not a rational: \"{s}\"")), Ok)
        }
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => ctx.err("numbers must be integers; write fractions as \"p/q\" strings"),
        },
        _ => ctx.err("expected a rational string"),
    }
}

fn vector(v: &Value, len: usize, ctx: &Ctx) -> Result<Vec<Rational>> {
    let Some(a) = v.as_array() else {
        return ctx.err("expected an array of rationals");
    };
    if a.len() != len {
        return ctx.err(format!("expected {len} entries, got {}", a.len()));
    }
    a.iter().enumerate().map(|(i, x)| parse_rational(x, &ctx.at(i))).collect()
}

fn key_of(idx: &[usize]) -> String {
    idx.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn parse_key(k: &str, len: usize, bound: usize, ctx: &Ctx) -> Result<Vec<usize>> {
    let parts: Vec<&str> = if k.is_empty() { Vec::new() } else { k.split(',').collect() };
    if parts.len() != len {
        return ctx.err(format!("key \"{k}\" must have {len} indices"));
    }
    let mut out = Vec::with_capacity(len);
    for p in parts {
        match p.trim().parse::<usize>() {
            Ok(i) if i < bound => out.push(i),
            _ => {
                return ctx.err(format!(
                    "bad index \"{p}\" in key \"{k}\"; indices run from 0 to {}",
                    bound.saturating_sub(1)
                ))
            }
        }
    }
    Ok(out)
}

/// `{"k": "p/q", ...}` with zero entries left out.
fn sparse_vector(v: &[Rational]) -> Value {
    let m: Map<String, Value> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !num::Zero::is_zero(*x))
        .map(|(k, x)| (k.to_string(), rational_to_json(x)))
        .collect();
    Value::Object(m)
}

fn parse_sparse(v: &Value, len: usize, ctx: &Ctx) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::from_integer(0.into()); len];
    for (k, x) in object(v, ctx)? {
        let c = ctx.key(k);
        let i = parse_key(k, 1, len, &c)?[0];
        out[i] = parse_rational(x, &c)?;
    }
    Ok(out)
}

/// `{"i,j": {"k": ...}}` tables for bilinear maps given on chosen index pairs.
fn pair_table(entries: impl Iterator<Item = (Vec<usize>, Vec<Rational>)>) -> Value {
    let m: Map<String, Value> = entries
        .filter(|(_, v)| v.iter().any(|x| !num::Zero::is_zero(x)))
        .map(|(k, v)| (key_of(&k), sparse_vector(&v)))
        .collect();
    Value::Object(m)
}

fn parse_pair_table(
    v: &Value,
    bounds: (usize, usize),
    target: usize,
    increasing: bool,
    ctx: &Ctx,
) -> Result<Vec<(usize, usize, Vec<Rational>)>> {
    let mut out = Vec::new();
    for (k, x) in object(v, ctx)? {
        let c = ctx.key(k);
        let idx = parse_key(k, 2, bounds.0.max(bounds.1), &c)?;
        if idx[0] >= bounds.0 || idx[1] >= bounds.1 {
            return c.err(format!("key \"{k}\" is out of range"));
        }
        if increasing && idx[0] >= idx[1] {
            return c.err(format!("key \"{k}\" must have i < j"));
        }
        out.push((idx[0], idx[1], parse_sparse(x, target, &c)?));
    }
    Ok(out)
}

impl Json for Rational {
    fn to_json(&self) -> Value {
        rational_to_json(self)
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        parse_rational(v, ctx)
    }
}

/// `{"rows": r, "cols": c, "entries": [[...], ...]}`.
impl Json for Matrix {
    fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.to_rows().iter().map(|r| Value::Array(r.iter().map(rational_to_json).collect())).collect();
        json!({"rows": self.rows(), "cols": self.cols(), "entries": entries})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let rows = usize_field(v, "rows", ctx)?;
        let cols = usize_field(v, "cols", ctx)?;
        let (items, c) = list(v, "entries", ctx)?;
        if items.len() != rows {
            return c.err(format!("expected {rows} rows, got {}", items.len()));
        }
        let rows_v = items.iter().enumerate().map(|(i, r)| vector(r, cols, &c.at(i))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(rows_v, cols))
    }
}

/// An element of `g⊗g` as `{"dim": d, "entries": [[...]]}`; the operator
/// format is also accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix(pub Matrix);

impl Json for RMatrix {
    fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.0.to_rows().iter().map(|r| Value::Array(r.iter().map(rational_to_json).collect())).collect();
        json!({"dim": self.0.rows(), "entries": entries})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        if object(v, ctx)?.contains_key("rows") {
            let m = Matrix::from_json(v, ctx)?;
            if !m.is_square() {
                return ctx.err("an r-matrix must be square");
            }
            return Ok(Self(m));
        }
        let d = usize_field(v, "dim", ctx)?;
        let (items, c) = list(v, "entries", ctx)?;
        if items.len() != d {
            return c.err(format!("expected {d} rows, got {}", items.len()));
        }
        let rows = items.iter().enumerate().map(|(i, r)| vector(r, d, &c.at(i))).collect::<Result<Vec<_>>>()?;
        Ok(Self(Matrix::from_rows(rows, d)))
    }
}

/// `{"dim": d, "bracket": {"i,j": {"k": "p/q"}}}` with `i < j`.
impl Json for LieAlgebra {
    fn to_json(&self) -> Value {
        let d = self.dim();
        let bracket = pair_table(combinations(d, 2).into_iter().map(|c| {
            let v = self.bracket_basis(c[0], c[1]);
            (c, v)
        }));
        let mut out = json!({"dim": d, "bracket": bracket});
        if let Some(labels) = &self.labels {
            out["labels"] = json!(labels);
        }
        out
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let d = usize_field(v, "dim", ctx)?;
        let (b, c) = field(v, "bracket", ctx)?;
        let brackets = parse_pair_table(b, (d, d), d, true, &c)?;
        let mut l = LieAlgebra::abelian(d);
        for (i, j, w) in brackets {
            l.set_bracket(i, j, &w);
        }
        if let Some(labels) = object(v, ctx)?.get("labels") {
            let c = ctx.key("labels");
            let names: Vec<String> = match labels.as_array() {
                Some(a) if a.len() == d && a.iter().all(Value::is_string) => {
                    a.iter().map(|x| x.as_str().unwrap_or_default().to_string()).collect()
                }
                _ => return c.err(format!("expected {d} label strings")),
            };
            l.labels = Some(names);
        }
        Ok(l)
    }
}

/// `{"arity": n, "dim": d, "targetDim": m, "coeffs": {"i1,..,in": [...]}}`
/// with strictly increasing keys.
impl Json for AltMap {
    fn to_json(&self) -> Value {
        let (n, d, m) = (self.arity(), self.dim(), self.target());
        let coeffs: Map<String, Value> = combinations(d, n)
            .into_iter()
            .filter_map(|t| {
                let v = self.get(&t);
                v.iter()
                    .any(|x| !num::Zero::is_zero(x))
                    .then(|| (key_of(&t), Value::Array(v.iter().map(rational_to_json).collect())))
            })
            .collect();
        json!({"arity": n, "dim": d, "targetDim": m, "coeffs": Value::Object(coeffs)})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let n = usize_field(v, "arity", ctx)?;
        let d = usize_field(v, "dim", ctx)?;
        let m = usize_field(v, "targetDim", ctx)?;
        let mut out = AltMap::zeros(n, d, m);
        let (co, c) = field(v, "coeffs", ctx)?;
        for (k, x) in object(co, &c)? {
            let ck = c.key(k);
            let t = parse_key(k, n, d, &ck)?;
            if t.windows(2).any(|w| w[0] >= w[1]) {
                return ck.err(format!("key \"{k}\" must be strictly increasing"));
            }
            out.set(&t, &vector(x, m, &ck)?);
        }
        Ok(out)
    }
}

/// `{"dimV": m, "rho": [<op>, ...]}`, one operator per basis vector.
impl Json for Representation {
    fn to_json(&self) -> Value {
        json!({"dimV": self.dim_v(), "rho": self.matrices().iter().map(Json::to_json).collect::<Vec<_>>()})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let m = usize_field(v, "dimV", ctx)?;
        let count = list(v, "rho", ctx)?.0.len();
        let rho = operators(v, "rho", ctx, count, m, m)?;
        Representation::new(m, rho).or_else(|e| ctx.err(e.to_string()))
    }
}

/// A representation with an extra `"S"` operator.
impl Json for NijenhuisRep {
    fn to_json(&self) -> Value {
        let mut out = self.rep.to_json();
        out["S"] = self.s.to_json();
        out
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let rep = Representation::from_json(v, ctx)?;
        let s = sized_field(v, "S", ctx, rep.dim_v(), rep.dim_v())?;
        Ok(NijenhuisRep { rep, s })
    }
}

/// `{"algebra": <algebra>, "N": <op>}`.
impl Json for NijenhuisPair<Rational> {
    fn to_json(&self) -> Value {
        json!({"algebra": self.algebra.to_json(), "N": self.n.to_json()})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let algebra: LieAlgebra = sub(v, "algebra", ctx)?;
        let d = algebra.dim();
        let n = sized_field(v, "N", ctx, d, d)?;
        Ok(NijenhuisPair { algebra, n })
    }
}

/// `{"dim": d, "delta": {"i": {"j,k": "p/q"}}}`. Keys with `j < k` only
/// describe an antisymmetric tensor; any key with `j ≥ k` makes the
/// component a full tensor.
impl Json for Cobracket<Rational> {
    fn to_json(&self) -> Value {
        let d = self.dim();
        let delta: Map<String, Value> = (0..d)
            .filter_map(|i| {
                let m = self.component(i);
                let anti = m.add(&m.transpose()).is_zero();
                let mut entries = Map::new();
                for j in 0..d {
                    for k in 0..d {
                        let x = m.get(j, k);
                        if (!anti || j < k) && !num::Zero::is_zero(x) {
                            entries.insert(key_of(&[j, k]), rational_to_json(x));
                        }
                    }
                }
                (!entries.is_empty()).then(|| (i.to_string(), Value::Object(entries)))
            })
            .collect();
        json!({"dim": d, "delta": Value::Object(delta)})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let d = usize_field(v, "dim", ctx)?;
        let (dv, c) = field(v, "delta", ctx)?;
        let mut delta = vec![Matrix::zeros(d, d); d];
        for (k, comp) in object(dv, &c)? {
            let ck = c.key(k);
            let i = parse_key(k, 1, d, &ck)?[0];
            let entries = parse_pair_table_flat(comp, d, &ck)?;
            let full = entries.iter().any(|(j, k, _)| j >= k);
            for (j, k, x) in entries {
                if !full {
                    delta[i].set(k, j, -x.clone());
                }
                delta[i].set(j, k, x);
            }
        }
        Cobracket::new(d, delta).or_else(|e| ctx.err(e.to_string()))
    }
}

fn parse_pair_table_flat(v: &Value, d: usize, ctx: &Ctx) -> Result<Vec<(usize, usize, Rational)>> {
    object(v, ctx)?
        .iter()
        .map(|(k, x)| {
            let c = ctx.key(k);
            let idx = parse_key(k, 2, d, &c)?;
            Ok((idx[0], idx[1], parse_rational(x, &c)?))
        })
        .collect()
}

/// `{"g", "h", "rho": [<op>], "nu": [<op>], "N"?, "S"?}`.
impl Json for MatchedPairData<Rational> {
    fn to_json(&self) -> Value {
        let mut out = json!({
            "g": self.g.to_json(),
            "h": self.h.to_json(),
            "rho": self.rho.matrices().iter().map(Json::to_json).collect::<Vec<_>>(),
            "nu": self.nu.matrices().iter().map(Json::to_json).collect::<Vec<_>>(),
        });
        if let (Some(n), Some(s)) = (&self.n, &self.s) {
            out["N"] = n.to_json();
            out["S"] = s.to_json();
        }
        out
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let g: LieAlgebra = sub(v, "g", ctx)?;
        let h: LieAlgebra = sub(v, "h", ctx)?;
        let (dg, dh) = (g.dim(), h.dim());
        let rho = Representation::new(dh, operators(v, "rho", ctx, dg, dh, dh)?).or_else(|e| ctx.err(e.to_string()))?;
        let nu = Representation::new(dg, operators(v, "nu", ctx, dh, dg, dg)?).or_else(|e| ctx.err(e.to_string()))?;
        let n = opt_sub::<Matrix>(v, "N", ctx)?.map(|m| sized(m, dg, dg, &ctx.key("N"))).transpose()?;
        let s = opt_sub::<Matrix>(v, "S", ctx)?.map(|m| sized(m, dh, dh, &ctx.key("S"))).transpose()?;
        if n.is_some() != s.is_some() {
            return ctx.err("\"N\" and \"S\" must be given together");
        }
        Ok(MatchedPairData { g, h, rho, nu, n, s })
    }
}

/// `{"dim": d, "diamond": {"i,j": {"k": ...}}, "floor": {"i,j": {"k": ...}}}`
/// with `i < j` in the floor table.
impl Json for NSLie<Rational> {
    fn to_json(&self) -> Value {
        let d = self.dim();
        let diamond = pair_table((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
            let v = self.diamond[i].column(j);
            (vec![i, j], v)
        }));
        let floor = pair_table(combinations(d, 2).into_iter().map(|c| {
            let v = self.floor.get(&c).to_vec();
            (c, v)
        }));
        json!({"dim": d, "diamond": diamond, "floor": floor})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let d = usize_field(v, "dim", ctx)?;
        let mut p = NSLie::zeros(d);
        let (dv, c) = field(v, "diamond", ctx)?;
        for (i, j, w) in parse_pair_table(dv, (d, d), d, false, &c)? {
            for (k, x) in w.into_iter().enumerate() {
                p.diamond[i].set(k, j, x);
            }
        }
        let (fv, c) = field(v, "floor", ctx)?;
        for (i, j, w) in parse_pair_table(fv, (d, d), d, true, &c)? {
            p.floor.set(&[i, j], &w);
        }
        Ok(p)
    }
}

fn op_list(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(Json::to_json).collect())
}

/// `{"dimV": m, "l": [<op>], "r": [<op>], "psi": [<op>]}`.
impl Json for NSRep<Rational> {
    fn to_json(&self) -> Value {
        json!({"dimV": self.dim_v(), "l": op_list(&self.l), "r": op_list(&self.r), "psi": op_list(&self.psi)})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let m = usize_field(v, "dimV", ctx)?;
        let count = list(v, "l", ctx)?.0.len();
        Ok(NSRep {
            l: operators(v, "l", ctx, count, m, m)?,
            r: operators(v, "r", ctx, count, m, m)?,
            psi: operators(v, "psi", ctx, count, m, m)?,
        })
    }
}

/// `{"p1", "p2", "on_p2": <ns-rep>, "on_p1": <ns-rep>}`.
impl Json for NSMatchedPair<Rational> {
    fn to_json(&self) -> Value {
        json!({
            "p1": self.p1.to_json(),
            "p2": self.p2.to_json(),
            "on_p2": self.on_p2.to_json(),
            "on_p1": self.on_p1.to_json(),
        })
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let p1: NSLie<Rational> = sub(v, "p1", ctx)?;
        let p2: NSLie<Rational> = sub(v, "p2", ctx)?;
        let on_p2: NSRep<Rational> = sub(v, "on_p2", ctx)?;
        let on_p1: NSRep<Rational> = sub(v, "on_p1", ctx)?;
        if on_p2.dim_p() != p1.dim() || on_p2.dim_v() != p2.dim() {
            return ctx.key("on_p2").err("the action of p1 on p2 has the wrong shape");
        }
        if on_p1.dim_p() != p2.dim() || on_p1.dim_v() != p1.dim() {
            return ctx.key("on_p1").err("the action of p2 on p1 has the wrong shape");
        }
        Ok(NSMatchedPair { p1, p2, on_p2, on_p1 })
    }
}

/// `{"dimL0", "dimL1", "d": <op>, "l2_00": <altmap>, "l2_01": {"i,a": {"b": ...}},
/// "l3": <altmap>}`, where the `l2_01` table gives `l2(e_i, f_a)`.
impl Json for TwoTermL<Rational> {
    fn to_json(&self) -> Value {
        let (d0, d1) = (self.dim0(), self.dim1());
        let l2_01 = pair_table((0..d0).flat_map(|i| (0..d1).map(move |a| (i, a))).map(|(i, a)| {
            let v = self.l2_01[i].column(a);
            (vec![i, a], v)
        }));
        json!({
            "dimL0": d0,
            "dimL1": d1,
            "d": self.d.to_json(),
            "l2_00": self.l2_00.to_json(),
            "l2_01": l2_01,
            "l3": self.l3.to_json(),
        })
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let d0 = usize_field(v, "dimL0", ctx)?;
        let d1 = usize_field(v, "dimL1", ctx)?;
        let d = sized_field(v, "d", ctx, d0, d1)?;
        let l2_00: AltMap = sub(v, "l2_00", ctx)?;
        let l3: AltMap = sub(v, "l3", ctx)?;
        let (tv, c) = field(v, "l2_01", ctx)?;
        let mut l2_01 = vec![Matrix::zeros(d1, d1); d0];
        for (i, a, w) in parse_pair_table(tv, (d0, d1), d1, false, &c)? {
            for (b, x) in w.into_iter().enumerate() {
                l2_01[i].set(b, a, x);
            }
        }
        TwoTermL::new(d, l2_00, l2_01, l3).or_else(|e| ctx.err(e.to_string()))
    }
}

/// `{"N0": <op>, "N1": <op>, "N2": <altmap>}`.
impl Json for HomotopyNijenhuis<Rational> {
    fn to_json(&self) -> Value {
        json!({"N0": self.n0.to_json(), "N1": self.n1.to_json(), "N2": self.n2.to_json()})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        Ok(HomotopyNijenhuis { n0: sub(v, "N0", ctx)?, n1: sub(v, "N1", ctx)?, n2: sub(v, "N2", ctx)? })
    }
}

/// A 2-term algebra with a homotopy operator: `{"L": <2-term>, "HN": <hn>}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermWithOperator {
    pub l: TwoTermL<Rational>,
    pub hn: HomotopyNijenhuis<Rational>,
}

impl Json for TwoTermWithOperator {
    fn to_json(&self) -> Value {
        json!({"L": self.l.to_json(), "HN": self.hn.to_json()})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        Ok(Self { l: sub(v, "L", ctx)?, hn: sub(v, "HN", ctx)? })
    }
}

/// `{"dimV0", "dimV1", "dbar", "m2_0", "m2_1", "m2_10", "m3"}`. `m3` has one
/// operator per increasing pair of basis indices of `L0`.
impl Json for TwoTermRep<Rational> {
    fn to_json(&self) -> Value {
        json!({
            "dimV0": self.dbar.rows(),
            "dimV1": self.dbar.cols(),
            "dbar": self.dbar.to_json(),
            "m2_0": op_list(&self.m2_0),
            "m2_1": op_list(&self.m2_1),
            "m2_10": op_list(&self.m2_10),
            "m3": op_list(&self.m3),
        })
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let v0 = usize_field(v, "dimV0", ctx)?;
        let v1 = usize_field(v, "dimV1", ctx)?;
        let dbar = sized_field(v, "dbar", ctx, v0, v1)?;
        let n0 = list(v, "m2_0", ctx)?.0.len();
        let n1 = list(v, "m2_10", ctx)?.0.len();
        let n3 = list(v, "m3", ctx)?.0.len();
        Ok(TwoTermRep {
            dbar,
            m2_0: operators(v, "m2_0", ctx, n0, v0, v0)?,
            m2_1: operators(v, "m2_1", ctx, n0, v1, v1)?,
            m2_10: operators(v, "m2_10", ctx, n1, v1, v0)?,
            m3: operators(v, "m3", ctx, n3, v1, v0)?,
        })
    }
}

/// `{"r0": <op>, "r1": <op>, "r2": <altmap>}`.
impl Json for HomotopyRb<Rational> {
    fn to_json(&self) -> Value {
        json!({"r0": self.r0.to_json(), "r1": self.r1.to_json(), "r2": self.r2.to_json()})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        Ok(HomotopyRb { r0: sub(v, "r0", ctx)?, r1: sub(v, "r1", ctx)?, r2: sub(v, "r2", ctx)? })
    }
}

/// `{"L": <2-term>, "rep": <2-term rep>, "R": <homotopy operator>}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyRbData {
    pub l: TwoTermL<Rational>,
    pub rep: TwoTermRep<Rational>,
    pub op: HomotopyRb<Rational>,
}

impl Json for HomotopyRbData {
    fn to_json(&self) -> Value {
        json!({"L": self.l.to_json(), "rep": self.rep.to_json(), "R": self.op.to_json()})
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        Ok(Self { l: sub(v, "L", ctx)?, rep: sub(v, "rep", ctx)?, op: sub(v, "R", ctx)? })
    }
}

/// `{"g", "N", "h", "S", "t": <op h → g>, "rho": [<op>]}`.
impl Json for CrossedModule<Rational> {
    fn to_json(&self) -> Value {
        json!({
            "g": self.g.to_json(),
            "N": self.n.to_json(),
            "h": self.h.to_json(),
            "S": self.s.to_json(),
            "t": self.t.to_json(),
            "rho": op_list(&self.rho),
        })
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let g: LieAlgebra = sub(v, "g", ctx)?;
        let h: LieAlgebra = sub(v, "h", ctx)?;
        let (dg, dh) = (g.dim(), h.dim());
        Ok(CrossedModule {
            n: sized_field(v, "N", ctx, dg, dg)?,
            s: sized_field(v, "S", ctx, dh, dh)?,
            t: sized_field(v, "t", ctx, dg, dh)?,
            rho: operators(v, "rho", ctx, dg, dh, dh)?,
            g,
            h,
        })
    }
}

/// `{"degree": n, "chi": <altmap>, "F": <altmap|null>}`.
impl Json for ConeCochain<Rational> {
    fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "chi": self.chi.to_json(),
            "F": self.f.as_ref().map_or(Value::Null, Json::to_json),
        })
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let degree = usize_field(v, "degree", ctx)?;
        let chi: AltMap = sub(v, "chi", ctx)?;
        let f: Option<AltMap> = opt_sub(v, "F", ctx)?;
        if chi.arity() != degree {
            return ctx.key("chi").err("arity must equal the degree");
        }
        ConeCochain::new(chi, f).or_else(|e| ctx.err(e.to_string()))
    }
}

/// `{"algebra": <algebra>, "N": <op>, "terms": [<op>], "mu_terms"?: [<altmap>]}`.
/// Without `mu_terms` only the operator is deformed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Deformation {
    Operator { algebra: LieAlgebra, def: OrderNDeformation<Rational> },
    Full(TruncatedDeformation<Rational>),
}

impl Json for Deformation {
    fn to_json(&self) -> Value {
        match self {
            Self::Operator { algebra, def } => json!({
                "algebra": algebra.to_json(),
                "N": def.n.to_json(),
                "terms": op_list(&def.terms),
            }),
            Self::Full(t) => json!({
                "algebra": t.base.algebra.to_json(),
                "N": t.base.n.to_json(),
                "terms": op_list(&t.n_terms),
                "mu_terms": t.mu_terms.iter().map(Json::to_json).collect::<Vec<_>>(),
            }),
        }
    }

    fn from_json(v: &Value, ctx: &Ctx) -> Result<Self> {
        let algebra: LieAlgebra = sub(v, "algebra", ctx)?;
        let d = algebra.dim();
        let n = sized_field(v, "N", ctx, d, d)?;
        let count = list(v, "terms", ctx)?.0.len();
        let terms = operators(v, "terms", ctx, count, d, d)?;
        if !object(v, ctx)?.contains_key("mu_terms") {
            return Ok(Self::Operator { algebra, def: OrderNDeformation { n, terms } });
        }
        let (items, c) = list(v, "mu_terms", ctx)?;
        let mu_terms = items
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let (x, ci) = resolve(x, &c.at(i))?;
                AltMap::from_json(&x, &ci)
            })
            .collect::<Result<Vec<_>>>()?;
        let base = NijenhuisPair { algebra, n };
        TruncatedDeformation::new(base, mu_terms, terms).map(Self::Full).or_else(|e| ctx.err(e.to_string()))
    }
}
