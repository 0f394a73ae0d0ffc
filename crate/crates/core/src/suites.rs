//! Named verification suites with deterministic JSON reports.
//!
//! Every case records the checks it ran, the names of those that failed,
//! and a witness (form, cube or pipe in the `io` formats) that replays it.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::rational::{int, one, rat};
use crate::algebra::{Poly, Rational};
use crate::connection::{
    check_morphism, cube_diagram_connection, verify_bianchi_free, connection_to_form, curvature_is_coboundary, form_to_connection,
    verify_bianchi_form, FormConnection,
};
use crate::cubical::relations::{all_relations, subdivision_relations};
use crate::cubical::{CubicalCell, InfPipeCell, RationalPipe, RelationCheck, SingularCube};
use crate::error::{Error, Result};
use crate::forms::{
    check_form_symmetries, d_cubical, d_cubical_hw, d_simplicial, eval_comb, orientation_sign,
    random_form, simplicial_coboundary, theta_hat, vol, ClassicalForm, Coboundary,
};
use crate::groupoid::{
    check_cr_trivial, folding_cube, verify_30_letter, AdditiveRationals, ConstantCell,
    ConstantGroupoid, FreeCell, FreeGroup, FreeGroupoid, Group, GroupPipe, Letter, CUBE_EDGES,
};
use crate::groupoid::pipe_compose;
use crate::holonomy::{
    check_boundary_subdivision, pre_stokes_commutes, verify_prop_ib, verify_stokes,
    verify_subdivision_and_alternation, FormIntegral,
};
use crate::io::{cube_to_json, form_to_json, rational_json, stokes_to_json};
use crate::random::{self, CaseRng};
use crate::weil::{InfPoint, InfSimplex, WeilContext};

pub const SUITES: [&str; 5] = ["identities", "bianchi", "stokes", "forms", "holonomy"];

/// Subdivision parameters always exercised before random ones.
pub fn fixed_subdivision_parameters() -> Vec<Rational> {
    vec![int(0), int(1), rat(1, 2), int(-1), int(2)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    /// Cap on cube and pipe dimensions, at most 4.
    pub max_dim: usize,
}

impl SuiteConfig {
    pub fn new(trials: usize, seed: u64, max_dim: usize) -> Result<Self> {
        if !(1..=4).contains(&max_dim) {
            return Err(Error::Unsupported(format!("dimension cap {max_dim} is not in 1..=4")));
        }
        Ok(SuiteConfig { trials, seed, max_dim })
    }

    fn rng(&self, salt: u64) -> CaseRng {
        random::rng(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { trials: 20, seed: 0, max_dim: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub checks: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<String>,
    pub witness: Value,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub values: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub max_dim: usize,
    pub cases: usize,
    pub failures: usize,
    pub pass: bool,
    pub results: Vec<CaseReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn failing(&self) -> impl Iterator<Item = &CaseReport> {
        self.results.iter().filter(|c| !c.pass)
    }

    /// Pass/fail counts per case group (the id up to the last `/`).
    pub fn groups(&self) -> BTreeMap<String, (usize, usize)> {
        let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for c in &self.results {
            let g = c.id.rsplit_once('/').map_or(c.id.as_str(), |(g, _)| g);
            let e = out.entry(g.to_string()).or_default();
            e.0 += usize::from(c.pass);
            e.1 += 1;
        }
        out
    }
}

struct Cases {
    out: Vec<CaseReport>,
    counters: BTreeMap<String, usize>,
}

impl Cases {
    fn new() -> Self {
        Cases { out: vec![], counters: BTreeMap::new() }
    }

    fn run<F>(&mut self, group: &str, witness: Value, body: F)
    where
        F: FnOnce() -> Result<(Vec<RelationCheck>, Value)>,
    {
        let k = self.counters.entry(group.to_string()).or_default();
        let id = format!("{group}/{k:03}");
        *k += 1;
        let (checks, failed, values) = match body() {
            Ok((checks, values)) => {
                let failed: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
                (checks.len(), failed, values)
            }
            Err(e) => (1, vec![format!("error: {e}")], Value::Null),
        };
        self.out.push(CaseReport {
            id,
            checks,
            pass: failed.is_empty(),
            failed,
            witness,
            values,
        });
    }

    fn finish(mut self, suite: &str, cfg: &SuiteConfig) -> Report {
        self.out.sort_by(|a, b| a.id.cmp(&b.id));
        let failures = self.out.iter().filter(|c| !c.pass).count();
        Report {
            suite: suite.to_string(),
            seed: cfg.seed,
            trials: cfg.trials,
            max_dim: cfg.max_dim,
            cases: self.out.len(),
            failures,
            pass: failures == 0,
            results: self.out,
        }
    }
}

fn check(name: impl Into<String>, pass: bool) -> RelationCheck {
    RelationCheck { name: name.into(), pass }
}

fn symbolic_pipe(m: usize, n: usize) -> Result<InfPipeCell> {
    Ok(InfSimplex::generic_symbolic(m, n)?.into())
}

fn pipe_witness(m: usize, n: usize) -> Value {
    json!({ "base": { "symbolic": m }, "displacements": { "symbolic": n } })
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    match name {
        "identities" => Ok(identities(cfg)),
        "bianchi" => Ok(bianchi(cfg)),
        "stokes" => Ok(stokes(cfg)),
        "forms" => Ok(forms(cfg)),
        "holonomy" => Ok(holonomy(cfg)),
        other => Err(Error::Unsupported(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

fn random_cube(rng: &mut CaseRng, max_dim: usize) -> SingularCube {
    let k = rng.gen_range(1..=max_dim.min(3));
    let m = rng.gen_range(1..=3);
    SingularCube::new(random::poly_map(rng, k, m, 3))
}

fn subdivision_parameter(rng: &mut CaseRng, t: usize) -> Rational {
    let fixed = fixed_subdivision_parameters();
    fixed.get(t).cloned().unwrap_or_else(|| random::rational(rng))
}

/// Cubical relations on generic pipes and random polynomial cubes, the
/// 30-letter cube identity with specializations, and the structural
/// groupoid checks.
pub fn identities(cfg: &SuiteConfig) -> Report {
    let mut cases = Cases::new();
    for n in 1..=cfg.max_dim {
        cases.run("pipe-relations", pipe_witness(2, n), || {
            Ok((all_relations(&symbolic_pipe(2, n)?), Value::Null))
        });
    }
    let mut rng = cfg.rng(1);
    for t in 0..cfg.trials {
        let f = random_cube(&mut rng, cfg.max_dim);
        let i = rng.gen_range(1..=f.dim());
        let s = subdivision_parameter(&mut rng, t);
        cases.run("cube-relations", json!({ "cube": cube_to_json(&f), "i": i, "s": rational_json(&s) }), || {
            let mut checks = all_relations(&f);
            checks.extend(subdivision_relations(&f, i, &s));
            Ok((checks, Value::Null))
        });
    }
    cube_identity_cases(&mut cases, cfg);
    structural_cases(&mut cases, cfg);
    cases.finish("identities", cfg)
}

fn cube_identity_cases(cases: &mut Cases, cfg: &SuiteConfig) {
    cases.run("cube-identity-generic", crate::io::generic_cube_diagram(), || {
        let g = FreeGroupoid::cube3();
        let edges = generic_edges(&g)?;
        let word = g.format_word(folding_cube(&g, &edges)?.arrow()?);
        Ok((vec![check("30-letter word reduces to id_7", verify_30_letter() && word == "id_7")], json!({ "word": word })))
    });
    let mut rng = cfg.rng(2);
    for _ in 0..cfg.trials {
        // abelian: random rationals on the edges of M_1(Q)
        let values: Vec<Rational> = CUBE_EDGES.iter().map(|_| random::rational(&mut rng)).collect();
        let witness = json!({
            "group": "Q",
            "edges": CUBE_EDGES.iter().zip(&values).map(|(n, v)| (n.to_string(), rational_json(v))).collect::<BTreeMap<_, _>>(),
        });
        cases.run("cube-identity-abelian", witness, || {
            let g = ConstantGroupoid::<u8, _>::new(1, AdditiveRationals)?;
            let edges = CUBE_EDGES
                .iter()
                .zip(&values)
                .map(|(n, v)| Ok((n.to_string(), g.top_cell(edge_ends(n), v.clone())?)))
                .collect::<Result<BTreeMap<String, ConstantCell<u8, Rational>>>>()?;
            let total = folding_cube(&g, &edges)?;
            let value = total.value().cloned().unwrap_or_else(|| int(0));
            Ok((vec![check("folded cube is zero", value == int(0))], json!({ "value": rational_json(&value) })))
        });
        // nonabelian: random words in the free group on two letters
        let fg = FreeGroup::new(&["a", "b"]);
        let words: Vec<Vec<Letter>> = CUBE_EDGES
            .iter()
            .map(|_| {
                let len = rng.gen_range(0..=4);
                (0..len)
                    .map(|_| {
                        let e = rng.gen_range(0..2);
                        if rng.gen_bool(0.5) {
                            Letter::fwd(e)
                        } else {
                            Letter::inv(e)
                        }
                    })
                    .collect()
            })
            .collect();
        let witness = json!({
            "group": "F(a,b)",
            "edges": CUBE_EDGES
                .iter()
                .zip(&words)
                .map(|(n, w)| Ok((n.to_string(), fg.format(&fg.word(w)?))))
                .collect::<Result<BTreeMap<_, _>>>()
                .unwrap_or_default(),
        });
        cases.run("cube-identity-free-group", witness, || {
            let g = ConstantGroupoid::<u8, _>::new(1, fg.clone())?;
            let edges = CUBE_EDGES
                .iter()
                .zip(&words)
                .map(|(n, w)| Ok((n.to_string(), g.top_cell(edge_ends(n), fg.word(w)?)?)))
                .collect::<Result<BTreeMap<String, _>>>()?;
            let total = folding_cube(&g, &edges)?;
            let word = total.value().map(|w| fg.format(w)).unwrap_or_default();
            let ok = total.value().is_some_and(|w| w.is_identity());
            Ok((vec![check("folded cube is the identity", ok)], json!({ "word": word })))
        });
    }
}

fn edge_ends(name: &str) -> Vec<u8> {
    name.bytes().map(|b| b - b'0').collect()
}

fn generic_edges(g: &FreeGroupoid) -> Result<BTreeMap<String, FreeCell>> {
    CUBE_EDGES
        .iter()
        .map(|n| Ok((n.to_string(), FreeCell::Arrow(g.edge_arrow(n)?))))
        .collect()
}

fn structural_cases(cases: &mut Cases, cfg: &SuiteConfig) {
    let mut rng = cfg.rng(3);
    for _ in 0..cfg.trials.clamp(1, 5) {
        let v = rng.gen_range(2..=5);
        let extra = rng.gen_range(1..=4);
        let g = random::random_graph(&mut rng, v, extra);
        let mut sample = vec![];
        for _ in 0..6 {
            let x = rng.gen_range(0..v);
            let y = rng.gen_range(0..v);
            sample.push(random::random_arrow(&mut rng, &g, x, y));
        }
        let witness = json!({
            "graph": crate::io::graph_to_json(g.graph()),
            "sample": sample.iter().map(|a| crate::io::word_to_json(&g, a)).collect::<Vec<_>>(),
        });
        cases.run("crossed-complex-trivial", witness, || {
            Ok((vec![check("Cr_3 of the shell groupoid is trivial", check_cr_trivial(&g, &sample)?)], Value::Null))
        });
    }
    cases.run("transposition-counterexample", json!({ "group": "F(a,b)", "vertices": ["1", "a", "b"] }), || {
        let fg = FreeGroup::new(&["a", "b"]);
        let p = GroupPipe::new(fg.clone(), vec![fg.identity(), fg.generator(0), fg.generator(1)]);
        let lhs = p.transposition(1)?.face(1, 1)?;
        let rhs = p.face(1, 2)?;
        let (l, r) = (fg.format(&lhs.vertices()[1]), fg.format(&rhs.vertices()[1]));
        Ok((
            vec![check("∂¹_1 s_1 P and ∂¹_2 P are distinct reduced words", l != r && lhs != rhs)],
            json!({ "transposed": l, "direct": r }),
        ))
    });
}

/// Bianchi identity for random 1-forms and for free cube diagrams, the
/// form/connection round trips and curvature versus coboundary.
pub fn bianchi(cfg: &SuiteConfig) -> Report {
    let mut cases = Cases::new();
    let mut rng = cfg.rng(4);
    for _ in 0..cfg.trials {
        let omega = random_form(&mut rng, 3, 1, 3);
        cases.run("bianchi-form", json!({ "form": form_to_json(&omega), "pipe": pipe_witness(3, 3) }), || {
            let conn = FormConnection::symbolic(omega.clone())?;
            let p = conn.generic_pipe(3)?;
            Ok((verify_bianchi_form(&conn, &p)?, Value::Null))
        });
    }
    let g = FreeGroupoid::cube3();
    match generic_edges(&g) {
        Ok(edges) => free_bianchi_case(&mut cases, g, (0..8).collect(), edges),
        Err(e) => cases.run("bianchi-free-cube", Value::Null, || Err(e)),
    }
    let mut rng = cfg.rng(12);
    for _ in 0..cfg.trials {
        let g = random::random_graph(&mut rng, 4, 3);
        let vs: Vec<usize> = (0..8).map(|_| rng.gen_range(0..4)).collect();
        let edges: BTreeMap<String, FreeCell> = CUBE_EDGES
            .iter()
            .map(|n| {
                let b = n.as_bytes();
                let (x, y) = (vs[(b[0] - b'0') as usize], vs[(b[1] - b'0') as usize]);
                (n.to_string(), FreeCell::Arrow(random::random_arrow(&mut rng, &g, x, y)))
            })
            .collect();
        free_bianchi_case(&mut cases, g, vs, edges);
    }
    let mut rng = cfg.rng(5);
    for t in 0..cfg.trials {
        let n = 1 + t % 2;
        let m = n + rng.gen_range(0..=1);
        let omega = random_form(&mut rng, m, n, 3);
        cases.run("round-trip", json!({ "form": form_to_json(&omega) }), || {
            let conn = form_to_connection(&omega)?;
            let back = connection_to_form(&conn, m)?;
            let mut checks = vec![check("form → connection → form", back == omega)];
            checks.extend(check_morphism(&conn, &conn.generic_pipe(n)?)?);
            let curv = FormConnection::symbolic(omega.clone())?;
            if m > n {
                checks.push(check(
                    "curvature folding equals d_c ω",
                    curvature_is_coboundary(&curv, &curv.generic_pipe(n + 1)?)?,
                ));
            }
            Ok((checks, Value::Null))
        });
    }
    cases.finish("bianchi", cfg)
}

/// The Bianchi checks for one given form connection.
pub fn bianchi_for(cfg: &SuiteConfig, omega: &ClassicalForm) -> Report {
    let mut cases = Cases::new();
    let k = omega.degree() + 2;
    cases.run("bianchi-form", json!({ "form": form_to_json(omega), "pipe": pipe_witness(omega.dim(), k) }), || {
        let conn = FormConnection::symbolic(omega.clone())?;
        Ok((verify_bianchi_form(&conn, &conn.generic_pipe(k)?)?, Value::Null))
    });
    cases.finish("bianchi", cfg)
}

fn free_bianchi_case(cases: &mut Cases, g: FreeGroupoid, vertices: Vec<usize>, edges: BTreeMap<String, FreeCell>) {
    let witness = json!({
        "graph": crate::io::graph_to_json(g.graph()),
        "corners": vertices.iter().map(|&v| g.graph().vertices()[v].clone()).collect::<Vec<_>>(),
        "edges": edges
            .iter()
            .map(|(n, c)| (n.clone(), c.arrow().map(|a| crate::io::word_to_json(&g, a)).unwrap_or(Value::Null)))
            .collect::<BTreeMap<_, _>>(),
    });
    cases.run("bianchi-free-cube", witness, || {
        let ctx = WeilContext::new(3, 3)?;
        let p: InfPipeCell = InfSimplex::generic_at(&InfPoint::from_rational(ctx, &[int(0), int(1), int(2)]), 0, &[one(), one(), one()])?.into();
        let cells = vertices.into_iter().map(FreeCell::Vertex).collect();
        let conn = cube_diagram_connection(&p, g, cells, &edges)?;
        Ok((vec![verify_bianchi_free(&conn, &p)?], Value::Null))
    });
}

/// Stokes on random (form, cube) pairs at n = 1 and n = 2 plus the worked
/// unit-square case.
pub fn stokes(cfg: &SuiteConfig) -> Report {
    let mut cases = Cases::new();
    let worked = ClassicalForm::new(2, 1, vec![(vec![2], Poly::var(2, 0))]).expect("x1 dx2");
    stokes_case(&mut cases, "stokes-worked", &worked, &SingularCube::identity(2), true);
    let mut rng = cfg.rng(6);
    for t in 0..cfg.trials {
        let m = rng.gen_range(2..=3);
        let omega = random_form(&mut rng, m, 1, 3);
        let f = SingularCube::new(random::poly_map(&mut rng, 2, m, if t % 2 == 0 { 1 } else { 2 }));
        stokes_case(&mut cases, "stokes-n1", &omega, &f, false);
    }
    if cfg.max_dim >= 3 {
        for t in 0..cfg.trials.div_ceil(2) {
            let omega = random_form(&mut rng, 3, 2, 2);
            let f = SingularCube::new(random::poly_map(&mut rng, 3, 3, if t % 2 == 0 { 1 } else { 2 }));
            stokes_case(&mut cases, "stokes-n2", &omega, &f, false);
        }
    }
    cases.finish("stokes", cfg)
}

/// Stokes for one given (form, cube) pair.
pub fn stokes_for(cfg: &SuiteConfig, omega: &ClassicalForm, f: &SingularCube) -> Report {
    let mut cases = Cases::new();
    stokes_case(&mut cases, "stokes", omega, f, false);
    cases.finish("stokes", cfg)
}

fn stokes_case(cases: &mut Cases, group: &str, omega: &ClassicalForm, f: &SingularCube, nonzero: bool) {
    let witness = json!({ "form": form_to_json(omega), "cube": cube_to_json(f) });
    cases.run(group, witness, || {
        let r = verify_stokes(omega, f, group)?;
        let mut checks = vec![
            check("∫_f dω equals the signed boundary sum", r.pass && r.lhs == r.rhs),
            check("shell folding equals the boundary sum", r.shell_fold == r.rhs),
        ];
        if nonzero {
            checks.push(check("both sides nonzero", r.lhs != int(0)));
        }
        Ok((checks, stokes_to_json(&r)))
    });
}

/// Combinatorial forms: coboundary relations, alternation, θ̂ and the
/// pullback identities.
pub fn forms(cfg: &SuiteConfig) -> Report {
    let mut cases = Cases::new();
    let mut rng = cfg.rng(7);
    let top = cfg.max_dim.min(3);
    for n in 1..=top {
        let omega = random_form(&mut rng, n + 1, n, 3);
        cases.run("coboundary-relation", json!({ "form": form_to_json(&omega), "pipe": pipe_witness(n + 1, n + 1) }), || {
            let s = InfSimplex::generic_symbolic(n + 1, n + 1)?;
            let p: InfPipeCell = s.clone().into();
            let n1 = Rational::from_integer((n + 1).into());
            let dc = d_cubical(&omega, &p)?;
            let ds = d_simplicial(&omega, &p)?;
            let cochain = simplicial_coboundary(&omega, &s)?;
            let sign = orientation_sign(n).ok_or_else(|| Error::Unsupported(format!("no sign for n={n}")))?;
            let dd = d_cubical(&Coboundary(&omega), &symbolic_pipe(n + 1, n + 2)?);
            Ok((
                vec![
                    check("d_s = d_c/(n+1)", ds.scale(&n1) == dc),
                    check("(n+1)·simplicial cochain = d_c (face-difference ω(∂⁰) - ω(∂¹))", cochain.scale(&n1) == d_cubical_hw(&omega, &p)?),
                    check("simplicial cochain = s(n)·d_s", cochain == ds.scale(&sign)),
                    check("d_c d_c ω = 0", dd?.is_zero()),
                ],
                json!({ "orientation_sign": rational_json(&sign) }),
            ))
        });
    }
    for n in 0..=top {
        for m in n.max(1)..=n + 1 {
            let omega = random_form(&mut rng, m, n, 3);
            cases.run("alternation", json!({ "form": form_to_json(&omega), "pipe": pipe_witness(m, n) }), || {
                Ok((check_form_symmetries(&omega, &symbolic_pipe(m, n)?)?, Value::Null))
            });
        }
    }
    let mut rng = cfg.rng(8);
    for t in 0..cfg.trials {
        let n = 1 + t % top;
        let theta = random_form(&mut rng, n, n, 3);
        let r = random::point(&mut rng, n);
        cases.run("theta-hat-and-pullback", json!({ "form": form_to_json(&theta), "inner_base": r.iter().map(rational_json).collect::<Vec<_>>() }), || {
            Ok((vec![theta_factorisation(&theta)?, pullback_identity(&theta, &r)?], Value::Null))
        });
    }
    let mut rng = cfg.rng(9);
    for _ in 0..cfg.trials {
        let k = rng.gen_range(1..=top);
        let m = rng.gen_range(1..=3);
        let f = random::poly_map(&mut rng, k, m, 2);
        let deg = rng.gen_range(0..=k.min(m).saturating_sub(1));
        let omega = random_form(&mut rng, m, deg, 2);
        cases.run("naturality", json!({ "form": form_to_json(&omega), "cube": cube_to_json(&SingularCube::new(f.clone())) }), || {
            let lhs = omega.d_classical().pullback(&f)?;
            let rhs = omega.pullback(&f)?.d_classical();
            let q = InfSimplex::generic_symbolic(k, omega.degree().min(k))?;
            let nat = eval_comb(&omega.pullback(&f)?, &q)? == eval_comb(&omega, &q.map(&f)?)?;
            Ok((vec![check("d f*ω = f* dω", lhs == rhs), check("f*ω on a pipe = ω on its image", nat)], Value::Null))
        });
    }
    cases.finish("forms", cfg)
}

/// `θ(P) = θ̂(x0)·Vol(P)` on the generic `n`-pipe.
pub fn theta_factorisation(theta: &ClassicalForm) -> Result<RelationCheck> {
    let n = theta.dim();
    let s = InfSimplex::generic_symbolic(n, n)?;
    let density = theta_hat(theta)?.eval_in(&s.context(), s.base().coords())?;
    Ok(check("θ(P) = θ̂(x0)·Vol(P)", eval_comb(theta, &s)? == &density * &vol(&s)?))
}

/// `ω` on the image of a fresh inner simplex `Q` (based at `r`) under the
/// infinitesimal cube `[[x0, …, xn]]` equals `ω(P)·Vol(Q)`.
pub fn pullback_identity(omega: &ClassicalForm, r: &[Rational]) -> Result<RelationCheck> {
    let (m, n) = (omega.dim(), omega.degree());
    let p = InfSimplex::generic_symbolic(m, n)?;
    let ctx = p.context().tensor(n, n)?;
    let p = p.embed(ctx)?;
    let q = InfSimplex::generic_at(&InfPoint::from_rational(ctx, r), 1, &vec![one(); n])?;
    let x0 = p.base();
    let image = q
        .vertices()
        .iter()
        .map(|t| {
            let mut y = x0.clone();
            for a in 1..=n {
                y = y.add(&p.displacement(a)?.scale_by(&t.coords()[a - 1])?)?;
            }
            Ok(y)
        })
        .collect::<Result<Vec<_>>>()?;
    let lhs = eval_comb(omega, &InfSimplex::new(image)?)?;
    let rhs = &eval_comb(omega, &p)? * &vol(&q)?;
    Ok(check("ω([[P]](Q)) = ω(P)·Vol(Q)", lhs == rhs))
}

/// Integration along infinitesimal pipes, subdivision additivity and
/// alternation of the surface integral, pipe recomposition and the
/// pre-Stokes diagram.
pub fn holonomy(cfg: &SuiteConfig) -> Report {
    let mut cases = Cases::new();
    let mut rng = cfg.rng(10);
    for t in 0..cfg.trials {
        let n = 1 + t % 2;
        let m = n + rng.gen_range(0..=1);
        let omega = random_form(&mut rng, m, n, 3);
        cases.run("integral-along-pipe", json!({ "form": form_to_json(&omega), "pipe": pipe_witness(m, n) }), || {
            Ok((vec![verify_prop_ib(&omega, &symbolic_pipe(m, n)?)?], Value::Null))
        });
    }
    let mut rng = cfg.rng(11);
    for t in 0..cfg.trials.max(5) {
        let k = 1 + t % cfg.max_dim.min(3);
        let m = k + rng.gen_range(0..=1);
        let f = SingularCube::new(random::poly_map(&mut rng, k, m, 2));
        let omega = random_form(&mut rng, m, k, 2);
        let i = rng.gen_range(1..=k);
        let s = subdivision_parameter(&mut rng, t);
        let witness = json!({ "form": form_to_json(&omega), "cube": cube_to_json(&f), "i": i, "s": rational_json(&s) });
        cases.run("subdivision-alternation", witness, || {
            let integral = FormIntegral(omega.clone());
            let mut checks = verify_subdivision_and_alternation(&integral, &f, i, &s)?;
            if k >= 2 {
                let lower = random_form(&mut random::rng(t as u64), m, k - 1, 2);
                checks.push(check(
                    "boundary functional is additive",
                    check_boundary_subdivision(&FormIntegral(lower), &f, i, &s)?,
                ));
            }
            Ok((checks, Value::Null))
        });
        let verts: Vec<Vec<Rational>> = (0..=k).map(|_| random::point(&mut rng, m)).collect();
        cases.run("pipe-recomposition", json!({ "vertices": verts.iter().map(|v| v.iter().map(rational_json).collect::<Vec<_>>()).collect::<Vec<_>>(), "i": i, "s": rational_json(&s) }), || {
            let p = RationalPipe::new(verts.clone());
            let (a, b) = p.subdivide(i, &s)?;
            let inf = symbolic_pipe(m, k)?;
            let (ia, ib) = inf.subdivide(i, &s)?;
            Ok((
                vec![
                    check("P = P' +_i P'' (rational)", pipe_compose(&a, &b, i)? == p),
                    check("P = P' +_i P'' (infinitesimal)", pipe_compose(&ia, &ib, i)? == inf),
                ],
                Value::Null,
            ))
        });
    }
    for n in 1..=2 {
        let omega = random_form(&mut rng, n + 1, n, 2);
        cases.run("pre-stokes", json!({ "form": form_to_json(&omega), "pipe": pipe_witness(n + 1, n + 1) }), || {
            let conn = FormConnection::symbolic(omega.clone())?;
            Ok((vec![check("face integrals match the curvature shell", pre_stokes_commutes(&conn, &conn.generic_pipe(n + 1)?)?)], Value::Null))
        });
    }
    cases.finish("holonomy", cfg)
}
