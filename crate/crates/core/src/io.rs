//! JSON file formats. Rationals are always the strings `"p/q"`.
//!
//! * polynomial: `[{"coeff": "p/q", "exps": [e1, …, en]}, …]`
//! * form: `{"dim": m, "degree": k, "terms": [{"axes": [..], "poly": poly}]}`
//! * singular cube: `{"dim_in": k, "dim_out": m, "components": [poly, …]}`
//! * pipe: `{"base": ["p/q", …] | {"symbolic": m}, "displacements":
//!   {"symbolic": n} | {"scaled": ["p/q", …]}}`
//! * Weil element: `{"base": coeff, "nil": [{"monomial": [[a, i], …],
//!   "coeff": coeff}]}` where `coeff` is `"p/q"` or, over auxiliary
//!   variables, a polynomial; inner-family pairs go under `"inner"`
//! * graph: `{"vertices": [..], "edges": [{"name", "source", "target"}]}`
//! * word: `[["edge", "+" | "-"], …]`, or `{"start": vertex, "word": …}`
//! * cube diagram: `{"graph": graph?, "edges": {"01": word, …}}`
//! * connection: `{"form": form | "path", "target": "M<n>Q"}`

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, Poly, Rational};
use crate::cubical::{InfPipeCell, SingularCube};
use crate::error::{Error, Result};
use crate::forms::ClassicalForm;
use crate::groupoid::{Arrow, FreeCell, FreeGroupoid, Graph, Letter};
use crate::holonomy::StokesRecord;
use crate::weil::{InfPoint, InfSimplex, NilMonomial, WeilContext, WeilElement};
use crate::algebra::PolyMap;

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value, at: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| parse_err(at, e.to_string()))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| {
        parse_err(
            format!("{}:{}:{}", path.display(), e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn rational_at(s: &str, at: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| match e {
        Error::Parse { message, .. } => parse_err(at, message),
        other => other,
    })
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    coeff: String,
    exps: Vec<u32>,
}

pub fn poly_to_json(p: &Poly) -> Value {
    let terms: Vec<TermFile> = p
        .terms()
        .map(|(e, c)| TermFile {
            coeff: format_rational(c),
            exps: e.to_vec(),
        })
        .collect();
    serde_json::to_value(terms).expect("plain data")
}

/// `nvars` fixes the ring; every exponent vector must have that length.
pub fn poly_from_json(v: &Value, nvars: usize, at: &str) -> Result<Poly> {
    let terms: Vec<TermFile> = from_value(v, at)?;
    let mut out = Vec::new();
    for (k, t) in terms.into_iter().enumerate() {
        let here = format!("{at}[{k}]");
        if t.exps.len() != nvars {
            return Err(parse_err(
                here,
                format!("expected {nvars} exponents, found {}", t.exps.len()),
            ));
        }
        out.push((t.exps, rational_at(&t.coeff, &here)?));
    }
    Poly::from_terms(nvars, out).map_err(|e| parse_err(at, e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct FormTermFile {
    axes: Vec<usize>,
    poly: Value,
}

#[derive(Serialize, Deserialize)]
struct FormFile {
    dim: usize,
    degree: usize,
    terms: Vec<FormTermFile>,
}

pub fn form_to_json(w: &ClassicalForm) -> Value {
    let f = FormFile {
        dim: w.dim(),
        degree: w.degree(),
        terms: w
            .terms()
            .map(|(axes, c)| FormTermFile {
                axes: axes.clone(),
                poly: poly_to_json(c),
            })
            .collect(),
    };
    serde_json::to_value(f).expect("plain data")
}

pub fn form_from_json(v: &Value, at: &str) -> Result<ClassicalForm> {
    let f: FormFile = from_value(v, at)?;
    let terms = f
        .terms
        .iter()
        .enumerate()
        .map(|(k, t)| Ok((t.axes.clone(), poly_from_json(&t.poly, f.dim, &format!("{at}.terms[{k}].poly"))?)))
        .collect::<Result<Vec<_>>>()?;
    ClassicalForm::new(f.dim, f.degree, terms).map_err(|e| parse_err(at, e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct CubeFile {
    dim_in: usize,
    dim_out: usize,
    components: Vec<Value>,
}

pub fn cube_to_json(f: &SingularCube) -> Value {
    let c = CubeFile {
        dim_in: f.dim(),
        dim_out: f.target_dim(),
        components: f.map().components().iter().map(poly_to_json).collect(),
    };
    serde_json::to_value(c).expect("plain data")
}

pub fn cube_from_json(v: &Value, at: &str) -> Result<SingularCube> {
    let c: CubeFile = from_value(v, at)?;
    if c.components.len() != c.dim_out {
        return Err(parse_err(
            at,
            format!("dim_out is {} but {} components given", c.dim_out, c.components.len()),
        ));
    }
    let comps = c
        .components
        .iter()
        .enumerate()
        .map(|(k, p)| poly_from_json(p, c.dim_in, &format!("{at}.components[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(SingularCube::new(
        PolyMap::new(c.dim_in, comps).map_err(|e| parse_err(at, e.to_string()))?,
    ))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BaseFile {
    Point(Vec<String>),
    Symbolic { symbolic: usize },
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum DisplacementFile {
    Symbolic(usize),
    Scaled(Vec<String>),
}

#[derive(Deserialize)]
struct PipeFile {
    base: BaseFile,
    displacements: DisplacementFile,
}

/// Builds the pipe `x_a = base + t_a·ε[a,·]` described by a pipe file.
pub fn pipe_from_json(v: &Value, at: &str) -> Result<InfPipeCell> {
    let p: PipeFile = from_value(v, at)?;
    let scales = match &p.displacements {
        DisplacementFile::Symbolic(n) => vec![crate::algebra::rational::one(); *n],
        DisplacementFile::Scaled(ts) => ts
            .iter()
            .enumerate()
            .map(|(k, t)| rational_at(t, &format!("{at}.displacements.scaled[{k}]")))
            .collect::<Result<_>>()?,
    };
    let wrap = |e: Error| parse_err(at, e.to_string());
    let base = match &p.base {
        BaseFile::Point(xs) => {
            let pt = xs
                .iter()
                .enumerate()
                .map(|(k, x)| rational_at(x, &format!("{at}.base[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            let ctx = WeilContext::new(scales.len(), pt.len()).map_err(wrap)?;
            InfPoint::from_rational(ctx, &pt)
        }
        BaseFile::Symbolic { symbolic } => {
            let ctx = WeilContext::new(scales.len(), *symbolic).map_err(wrap)?.with_aux(*symbolic);
            InfPoint::symbolic(ctx, *symbolic).map_err(wrap)?
        }
    };
    Ok(InfSimplex::generic_at(&base, 0, &scales).map_err(wrap)?.into())
}

fn coeff_json(p: &Poly) -> Value {
    match p.as_constant() {
        Some(r) if p.nvars() == 0 || p.len() <= 1 => rational_json(&r),
        _ => poly_to_json(p),
    }
}

pub fn weil_to_json(w: &WeilElement) -> Value {
    let base = w.base();
    let nil: Vec<Value> = w
        .terms()
        .filter(|(m, _)| !m.is_one())
        .map(|(m, c)| {
            let mut entry = json!({
                "monomial": m.pairs(0).iter().map(|&(a, i)| json!([a, i])).collect::<Vec<_>>(),
                "coeff": coeff_json(c),
            });
            let inner = m.pairs(1);
            if !inner.is_empty() {
                entry["inner"] = inner.iter().map(|&(a, i)| json!([a, i])).collect();
            }
            entry
        })
        .collect();
    json!({ "base": coeff_json(&base), "nil": nil })
}

fn coeff_from_json(v: &Value, nvars: usize, at: &str) -> Result<Poly> {
    match v {
        Value::String(s) => Ok(Poly::constant(nvars, rational_at(s, at)?)),
        _ => poly_from_json(v, nvars, at),
    }
}

pub fn weil_from_json(v: &Value, ctx: WeilContext, at: &str) -> Result<WeilElement> {
    let pairs = |v: Option<&Value>, here: &str| -> Result<(Vec<usize>, Vec<usize>)> {
        let list: Vec<(usize, usize)> = match v {
            Some(v) => from_value(v, here)?,
            None => vec![],
        };
        Ok(list.into_iter().unzip())
    };
    let base = coeff_from_json(
        v.get("base").ok_or_else(|| parse_err(at, "missing base"))?,
        ctx.aux(),
        &format!("{at}.base"),
    )?;
    let mut terms = vec![(NilMonomial::ONE, base)];
    let nil: Vec<Value> = from_value(v.get("nil").unwrap_or(&json!([])), &format!("{at}.nil"))?;
    for (k, t) in nil.iter().enumerate() {
        let here = format!("{at}.nil[{k}]");
        let (s0, c0) = pairs(t.get("monomial"), &here)?;
        let (s1, c1) = pairs(t.get("inner"), &here)?;
        let bad = || parse_err(&here, "not a normal monomial");
        let m0 = NilMonomial::from_sets(0, &s0, &c0).ok_or_else(bad)?;
        let m1 = NilMonomial::from_sets(1, &s1, &c1).ok_or_else(bad)?;
        let (m, neg) = m0.mul(&m1).ok_or_else(bad)?;
        debug_assert!(!neg);
        let c = coeff_from_json(t.get("coeff").ok_or_else(|| parse_err(&here, "missing coeff"))?, ctx.aux(), &here)?;
        terms.push((m, c));
    }
    WeilElement::from_terms(ctx, terms).map_err(|e| parse_err(at, e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
}

pub fn graph_to_json(g: &Graph) -> Value {
    let f = GraphFile {
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeFile {
                name: e.name.clone(),
                source: g.vertices()[e.source].clone(),
                target: g.vertices()[e.target].clone(),
            })
            .collect(),
    };
    serde_json::to_value(f).expect("plain data")
}

pub fn graph_from_json(v: &Value, at: &str) -> Result<Graph> {
    let f: GraphFile = from_value(v, at)?;
    let mut g = Graph::new(f.vertices);
    for (k, e) in f.edges.iter().enumerate() {
        let here = format!("{at}.edges[{k}]");
        let wrap = |e: Error| parse_err(&here, e.to_string());
        let s = g.vertex_index(&e.source).map_err(wrap)?;
        let t = g.vertex_index(&e.target).map_err(wrap)?;
        g.add_edge(&e.name, s, t).map_err(wrap)?;
    }
    Ok(g)
}

/// Words use `"+"` and `"-"`; the Unicode minus is accepted on input.
pub fn word_to_json(g: &FreeGroupoid, a: &Arrow) -> Value {
    let letters: Vec<Value> = a
        .word()
        .iter()
        .map(|l| json!([g.graph().edges()[l.edge].name, if l.inverse { "-" } else { "+" }]))
        .collect();
    if letters.is_empty() {
        json!({ "start": g.graph().vertices()[a.source()], "word": [] })
    } else {
        Value::Array(letters)
    }
}

pub fn word_from_json(g: &FreeGroupoid, v: &Value, at: &str) -> Result<Arrow> {
    let (start, list) = match v {
        Value::Object(o) => {
            let start: String = from_value(o.get("start").unwrap_or(&Value::Null), &format!("{at}.start"))?;
            let s = g
                .graph()
                .vertex_index(&start)
                .map_err(|e| parse_err(format!("{at}.start"), e.to_string()))?;
            (Some(s), o.get("word").cloned().unwrap_or(json!([])))
        }
        other => (None, other.clone()),
    };
    let raw: Vec<(String, String)> = from_value(&list, at)?;
    let letters = raw
        .iter()
        .enumerate()
        .map(|(k, (name, dir))| {
            let here = format!("{at}[{k}]");
            let edge = g
                .graph()
                .edge_index(name)
                .map_err(|e| parse_err(&here, e.to_string()))?;
            match dir.as_str() {
                "+" => Ok(Letter::fwd(edge)),
                "-" | "−" => Ok(Letter::inv(edge)),
                d => Err(parse_err(here, format!("direction {d:?} is not + or -"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let start = match (start, letters.first()) {
        (Some(s), _) => s,
        (None, Some(l)) => {
            let e = &g.graph().edges()[l.edge];
            if l.inverse {
                e.target
            } else {
                e.source
            }
        }
        (None, None) => return Err(parse_err(at, "an empty word needs a start vertex")),
    };
    g.word_reduce(start, &letters).map_err(|e| parse_err(at, e.to_string()))
}

/// A cube diagram file: the groupoid (the 3-cube graph unless given) and
/// its twelve edge arrows.
pub fn cube_diagram_from_json(v: &Value, at: &str) -> Result<(FreeGroupoid, BTreeMap<String, FreeCell>)> {
    let g = match v.get("graph") {
        Some(gv) => FreeGroupoid::new(graph_from_json(gv, &format!("{at}.graph"))?),
        None => FreeGroupoid::cube3(),
    };
    let edges: BTreeMap<String, Value> = from_value(
        v.get("edges").ok_or_else(|| parse_err(at, "missing edges"))?,
        &format!("{at}.edges"),
    )?;
    let mut out = BTreeMap::new();
    for name in crate::groupoid::CUBE_EDGES {
        let w = edges
            .get(name)
            .ok_or_else(|| parse_err(format!("{at}.edges"), format!("missing edge {name:?}")))?;
        out.insert(name.to_string(), FreeCell::Arrow(word_from_json(&g, w, &format!("{at}.edges.{name}"))?));
    }
    if let Some(extra) = edges.keys().find(|k| !crate::groupoid::CUBE_EDGES.contains(&k.as_str())) {
        return Err(parse_err(format!("{at}.edges"), format!("unknown cube edge {extra:?}")));
    }
    Ok((g, out))
}

/// The generic cube diagram: edge `"ab"` is the generator `ab` of the
/// free groupoid on the 3-cube graph.
pub fn generic_cube_diagram() -> Value {
    let edges: serde_json::Map<String, Value> = crate::groupoid::CUBE_EDGES
        .iter()
        .map(|n| (n.to_string(), json!([[n, "+"]])))
        .collect();
    json!({ "edges": edges })
}

/// A form connection into `M_n(Q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionSpec {
    pub form: ClassicalForm,
    pub n: usize,
}

/// A relative form path resolves against `dir`.
pub fn connection_from_json(v: &Value, dir: &Path, at: &str) -> Result<ConnectionSpec> {
    let target: String = from_value(
        v.get("target").ok_or_else(|| parse_err(at, "missing target"))?,
        &format!("{at}.target"),
    )?;
    let n = target
        .strip_prefix('M')
        .and_then(|r| r.strip_suffix('Q'))
        .and_then(|d| d.parse::<usize>().ok())
        .ok_or_else(|| parse_err(format!("{at}.target"), format!("unknown target {target:?}")))?;
    let fv = match v.get("form") {
        Some(Value::String(p)) => read_json(&dir.join(p))?,
        Some(other) => other.clone(),
        None => return Err(parse_err(at, "missing form")),
    };
    let form = form_from_json(&fv, &format!("{at}.form"))?;
    if form.degree() != n {
        return Err(parse_err(
            at,
            format!("target M{n}Q needs a {n}-form, found degree {}", form.degree()),
        ));
    }
    Ok(ConnectionSpec { form, n })
}

pub fn stokes_to_json(r: &StokesRecord) -> Value {
    json!({
        "case": r.case,
        "lhs": rational_json(&r.lhs),
        "rhs": rational_json(&r.rhs),
        "shell_fold": rational_json(&r.shell_fold),
        "pass": r.pass,
    })
}
