//! Acceptance criteria: one line per criterion, exit status 1 if any fails.
//! Case counts, tolerances (all checks are exact) and runtime limits are
//! pinned below.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::Rng;

use cubica::algebra::rational::int;
use cubica::algebra::{Poly, Rational};
use cubica::connection::{
    connection_to_form, curvature, curvature_is_coboundary, form_to_connection, verify_bianchi_form,
    FormConnection,
};
use cubica::cubical::relations::all_relations;
use cubica::cubical::{CubicalCell, InfPipeCell, RationalPipe, SingularCube};
use cubica::forms::{
    check_form_symmetries, d_cubical, d_cubical_hw, d_simplicial, eval_comb, orientation_sign,
    random_form, simplicial_coboundary, ClassicalForm, Coboundary,
};
use cubica::groupoid::{
    check_cr_trivial, folding_cube, verify_30_letter, AdditiveRationals, ConstantCell,
    ConstantGroupoid, FreeCell, FreeGroup, FreeGroupoid, Group, GroupPipe, Letter, CUBE_EDGES,
};
use cubica::groupoid::pipe_compose;
use cubica::holonomy::{integrate_form, verify_prop_ib, verify_stokes, verify_subdivision_and_alternation, FormIntegral};
use cubica::random;
use cubica::suites::{fixed_subdivision_parameters, pullback_identity, theta_factorisation};
use cubica::weil::InfSimplex;

const RANDOM_CUBES: usize = 50;
const CUBE_SPECIALIZATIONS: usize = 20;
const BIANCHI_FORMS: usize = 20;
const STOKES_N1: usize = 20;
const STOKES_N2: usize = 10;
const SUBDIVISION_TRIPLES: usize = 50;
const PIPE_INTEGRAL_FORMS: usize = 10;
const TOP_FORMS: usize = 10;
const NATURALITY_MAPS: usize = 10;

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn e(err: cubica::Error) -> String {
    err.to_string()
}

fn pipe(m: usize, n: usize) -> Result<InfPipeCell, String> {
    Ok(InfSimplex::generic_symbolic(m, n).map_err(e)?.into())
}

fn failed_names(checks: &[cubica::cubical::RelationCheck]) -> Vec<String> {
    checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect()
}

fn c1_cubical_identities() -> Outcome {
    let mut total = 0;
    for n in 1..=4 {
        let checks = all_relations(&pipe(2, n)?);
        total += checks.len();
        let bad = failed_names(&checks);
        ensure(bad.is_empty(), || format!("generic {n}-pipe: {bad:?}"))?;
    }
    let mut rng = random::rng(101);
    for t in 0..RANDOM_CUBES {
        let k = 1 + t % 3;
        let m = rng.gen_range(1..=3);
        let f = SingularCube::new(random::poly_map(&mut rng, k, m, 3));
        let checks = all_relations(&f);
        total += checks.len();
        let bad = failed_names(&checks);
        ensure(bad.is_empty(), || format!("cube {f}: {bad:?}"))?;
    }
    Ok(format!("{total} relations on 4 generic pipes and {RANDOM_CUBES} polynomial cubes"))
}

fn edge_ends(name: &str) -> Vec<u8> {
    name.bytes().map(|b| b - b'0').collect()
}

fn c2_thirty_letter() -> Outcome {
    ensure(verify_30_letter(), || "generic word does not reduce to id_7".into())?;
    let g = FreeGroupoid::cube3();
    let edges: BTreeMap<String, FreeCell> = CUBE_EDGES
        .iter()
        .map(|n| Ok((n.to_string(), FreeCell::Arrow(g.edge_arrow(n).map_err(e)?))))
        .collect::<Result<_, String>>()?;
    let word = g.format_word(folding_cube(&g, &edges).map_err(e)?.arrow().map_err(e)?);
    ensure(word == "id_7", || format!("generic cube folds to {word}"))?;

    let mut rng = random::rng(102);
    let fg = FreeGroup::new(&["a", "b"]);
    let free = ConstantGroupoid::<u8, _>::new(1, fg.clone()).map_err(e)?;
    let abelian = ConstantGroupoid::<u8, _>::new(1, AdditiveRationals).map_err(e)?;
    for _ in 0..CUBE_SPECIALIZATIONS {
        let mut words = BTreeMap::new();
        let mut numbers: BTreeMap<String, ConstantCell<u8, Rational>> = BTreeMap::new();
        for n in CUBE_EDGES {
            let len = rng.gen_range(0..=4);
            let w: Vec<Letter> = (0..len)
                .map(|_| {
                    let l = rng.gen_range(0..2);
                    if rng.gen_bool(0.5) {
                        Letter::fwd(l)
                    } else {
                        Letter::inv(l)
                    }
                })
                .collect();
            let value = fg.word(&w).map_err(e)?;
            words.insert(n.to_string(), free.top_cell(edge_ends(n), value).map_err(e)?);
            numbers.insert(n.to_string(), abelian.top_cell(edge_ends(n), random::rational(&mut rng)).map_err(e)?);
        }
        let w = folding_cube(&free, &words).map_err(e)?;
        let w = w.value().ok_or("no value")?;
        ensure(w.is_identity(), || format!("free-group specialization folds to {}", fg.format(w)))?;
        let q = folding_cube(&abelian, &numbers).map_err(e)?;
        ensure(q.value() == Some(&int(0)), || format!("rational specialization folds to {:?}", q.value()))?;
    }
    Ok(format!("generic word = id_7; {CUBE_SPECIALIZATIONS} free-group and {CUBE_SPECIALIZATIONS} rational specializations trivial"))
}

fn c3_bianchi() -> Outcome {
    let mut rng = random::rng(103);
    for _ in 0..BIANCHI_FORMS {
        let omega = random_form(&mut rng, 3, 1, 3);
        let conn = FormConnection::symbolic(omega.clone()).map_err(e)?;
        let checks = verify_bianchi_form(&conn, &conn.generic_pipe(3).map_err(e)?).map_err(e)?;
        let bad = failed_names(&checks);
        ensure(checks.len() == 2 && bad.is_empty(), || format!("{omega}: {bad:?}"))?;
    }
    Ok(format!("{BIANCHI_FORMS} random 1-forms on Q^3: face-curvature sum and d_c d_c ω are exactly zero"))
}

fn c4_stokes() -> Outcome {
    let worked = ClassicalForm::new(2, 1, vec![(vec![2], Poly::var(2, 0))]).map_err(e)?;
    let r = verify_stokes(&worked, &SingularCube::identity(2), "x1 dx2 on the unit square").map_err(e)?;
    // hand computation: the boundary sum is -(∫ x1 dx2 over x1 = 1) = -1
    ensure(r.pass && r.lhs == int(-1) && r.rhs == int(-1), || format!("worked case {r:?}"))?;

    let mut rng = random::rng(104);
    let mut quadratic = 0;
    for t in 0..STOKES_N1 + STOKES_N2 {
        let n = if t < STOKES_N1 { 1 } else { 2 };
        let m = if n == 1 { rng.gen_range(2..=3) } else { 3 };
        let degree = if t % 2 == 0 { 1 } else { 2 };
        let f = SingularCube::new(random::poly_map(&mut rng, n + 1, m, degree));
        quadratic += usize::from(f.map().total_degree() >= 2);
        let omega = random_form(&mut rng, m, n, if n == 1 { 3 } else { 2 });
        let r = verify_stokes(&omega, &f, "random").map_err(e)?;
        ensure(r.pass && r.lhs == r.rhs && r.shell_fold == r.rhs, || {
            format!("ω = {omega}, f = {f}: lhs {} rhs {}", r.lhs, r.rhs)
        })?;
    }
    ensure(quadratic > 0, || "no non-affine cube was drawn".into())?;
    Ok(format!(
        "worked case -1 = -1; {STOKES_N1} pairs at n=1 and {STOKES_N2} at n=2 ({quadratic} non-affine cubes) exact"
    ))
}

fn c5_subdivision() -> Outcome {
    let mut rng = random::rng(105);
    let fixed = fixed_subdivision_parameters();
    for t in 0..SUBDIVISION_TRIPLES {
        let k = 1 + t % 3;
        let m = k + rng.gen_range(0..=1);
        let f = SingularCube::new(random::poly_map(&mut rng, k, m, 2));
        let omega = random_form(&mut rng, m, k, 2);
        let i = rng.gen_range(1..=k);
        let s = fixed.get(t % 10).cloned().unwrap_or_else(|| random::rational(&mut rng));
        let checks = verify_subdivision_and_alternation(&FormIntegral(omega.clone()), &f, i, &s).map_err(e)?;
        ensure(checks[0].pass, || format!("Ω(f) ≠ Ω(f')+Ω(f'') for ω = {omega}, f = {f}, i = {i}, s = {s}"))?;
        // and against the integrals directly
        let (a, b) = f.subdivide(i, &s).map_err(e)?;
        let whole = integrate_form(&omega, &f).map_err(e)?.value;
        let parts = integrate_form(&omega, &a).map_err(e)?.value + integrate_form(&omega, &b).map_err(e)?.value;
        ensure(whole == parts, || format!("integrals {whole} vs {parts}"))?;

        let verts: Vec<Vec<Rational>> = (0..=k).map(|_| random::point(&mut rng, m)).collect();
        let p = RationalPipe::new(verts);
        let (p1, p2) = p.subdivide(i, &s).map_err(e)?;
        ensure(pipe_compose(&p1, &p2, i).map_err(e)? == p, || format!("rational pipe recomposition at i={i}, s={s}"))?;
        let inf = pipe(m, k)?;
        let (q1, q2) = inf.subdivide(i, &s).map_err(e)?;
        ensure(pipe_compose(&q1, &q2, i).map_err(e)? == inf, || format!("infinitesimal recomposition at i={i}, s={s}"))?;
    }
    Ok(format!("{SUBDIVISION_TRIPLES} (f, i, s) triples incl. s ∈ {{0, 1, 1/2, -1, 2}}; pipes recompose"))
}

fn c6_pipe_integral() -> Outcome {
    let mut rng = random::rng(106);
    for n in 1..=2 {
        for t in 0..PIPE_INTEGRAL_FORMS {
            let m = n + t % 2;
            let omega = random_form(&mut rng, m, n, 3);
            let c = verify_prop_ib(&omega, &pipe(m, n)?).map_err(e)?;
            ensure(c.pass, || format!("n={n}: {omega}"))?;
        }
    }
    Ok(format!("∫ along the generic pipe = ω(P) for {PIPE_INTEGRAL_FORMS} forms at n = 1 and at n = 2"))
}

fn c7_theta_and_pullback() -> Outcome {
    let mut rng = random::rng(107);
    for t in 0..TOP_FORMS {
        let n = 1 + t % 3;
        let theta = random_form(&mut rng, n, n, 3);
        let r = random::point(&mut rng, n);
        let a = theta_factorisation(&theta).map_err(e)?;
        let b = pullback_identity(&theta, &r).map_err(e)?;
        ensure(a.pass && b.pass, || format!("{theta}: factorisation {} pullback {}", a.pass, b.pass))?;
    }
    Ok(format!("θ̂ factorisation and pullback identity for {TOP_FORMS} top forms, n ≤ 3"))
}

fn c8_coboundary() -> Outcome {
    let mut rng = random::rng(108);
    let mut signs = vec![];
    for n in 1..=3 {
        let omega = random_form(&mut rng, n + 1, n, 3);
        let s = InfSimplex::generic_symbolic(n + 1, n + 1).map_err(e)?;
        let p: InfPipeCell = s.clone().into();
        let n1 = Rational::from_integer((n + 1).into());
        let dc = d_cubical(&omega, &p).map_err(e)?;
        let ds = d_simplicial(&omega, &p).map_err(e)?;
        ensure(ds.scale(&n1) == dc, || format!("d_s ≠ d_c/(n+1) at n={n}"))?;
        // the alternating vertex-deletion cochain, computed independently
        let cochain = simplicial_coboundary(&omega, &s).map_err(e)?;
        ensure(cochain.scale(&n1) == d_cubical_hw(&omega, &p).map_err(e)?, || {
            format!("(n+1)·cochain ≠ Σ(-1)^i(ω(∂⁰_i) - ω(∂¹_i)) at n={n}")
        })?;
        let sign = orientation_sign(n).ok_or("no sign")?;
        ensure(cochain == ds.scale(&sign), || format!("cochain ≠ s(n)·d_s at n={n}"))?;
        ensure(cochain.scale(&n1) == eval_comb(&omega.d_classical(), &s).map_err(e)?, || {
            format!("cochain ≠ dω/(n+1) at n={n}")
        })?;
        signs.push(sign);
    }
    for _ in 0..NATURALITY_MAPS {
        let k = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let f = random::poly_map(&mut rng, k, m, 2);
        let deg = rng.gen_range(0..k.min(m));
        let omega = random_form(&mut rng, m, deg, 2);
        let lhs = omega.d_classical().pullback(&f).map_err(e)?;
        let rhs = omega.pullback(&f).map_err(e)?.d_classical();
        ensure(lhs == rhs, || format!("d f* ≠ f* d for ω = {omega}"))?;
    }
    let signs: Vec<String> = signs.iter().map(|s| s.to_string()).collect();
    Ok(format!(
        "d_s = d_c/(n+1) exact for n = 1..3; the vertex-deletion cochain is \
         Σ(-1)^i(ω(∂⁰_i)-ω(∂¹_i))/(n+1) = s(n)·d_s with s(n) = [{}]; \
         d∘f* = f*∘d for {NATURALITY_MAPS} maps",
        signs.join(", ")
    ))
}

fn c9_alternation() -> Outcome {
    let mut rng = random::rng(109);
    let mut total = 0;
    for n in 0..=3 {
        for m in n.max(1)..=n + 1 {
            let omega = random_form(&mut rng, m, n, 3);
            let checks = check_form_symmetries(&omega, &pipe(m, n)?).map_err(e)?;
            ensure(checks.len() == 2 * n + n.saturating_sub(1), || format!("n={n}: {} checks", checks.len()))?;
            total += checks.len();
            let bad = failed_names(&checks);
            ensure(bad.is_empty(), || format!("n={n} m={m}: {bad:?}"))?;
        }
        if n >= 1 {
            let omega = random_form(&mut rng, n + 1, n - 1, 3);
            let checks = check_form_symmetries(&Coboundary(&omega), &pipe(n + 1, n)?).map_err(e)?;
            total += checks.len();
            let bad = failed_names(&checks);
            ensure(bad.is_empty(), || format!("coboundary n={n}: {bad:?}"))?;
        }
    }
    Ok(format!("{total} reversion/transposition/degeneracy checks, all directions, n ≤ 3"))
}

fn c10_structural() -> Outcome {
    let mut rng = random::rng(110);
    for _ in 0..3 {
        let g = random::random_graph(&mut rng, 3, 2);
        let sample: Vec<_> = (0..5)
            .map(|_| {
                let (x, y) = (rng.gen_range(0..3), rng.gen_range(0..3));
                random::random_arrow(&mut rng, &g, x, y)
            })
            .collect();
        ensure(check_cr_trivial(&g, &sample).map_err(e)?, || "Cr_3 not trivial".into())?;
    }

    let fg = FreeGroup::new(&["a", "b"]);
    let p = GroupPipe::new(fg.clone(), vec![fg.identity(), fg.generator(0), fg.generator(1)]);
    let lhs = p.transposition(1).map_err(e)?.face(1, 1).map_err(e)?;
    let rhs = p.face(1, 2).map_err(e)?;
    let (l, r) = (fg.format(&lhs.vertices()[1]), fg.format(&rhs.vertices()[1]));
    ensure(l != r && l == "b·a" && r == "a·b", || format!("transposition words {l} / {r}"))?;

    for t in 0..6 {
        let n = 1 + t % 2;
        let omega = random_form(&mut rng, n + 1, n, 3);
        let conn = form_to_connection(&omega).map_err(e)?;
        let back = connection_to_form(&conn, n + 1).map_err(e)?;
        ensure(back == omega, || format!("round trip of {omega} gave {back}"))?;
        let sym = FormConnection::symbolic(omega.clone()).map_err(e)?;
        let big = sym.generic_pipe(n + 1).map_err(e)?;
        ensure(curvature_is_coboundary(&sym, &big).map_err(e)?, || format!("hal ≠ d_c for {omega}"))?;
    }
    // the worked curvature: x1 dx2 folds to -2·ε11ε22 = d_c ω on the generic square
    let w = ClassicalForm::new(2, 1, vec![(vec![2], Poly::var(2, 0))]).map_err(e)?;
    let sym = FormConnection::symbolic(w.clone()).map_err(e)?;
    let sq = sym.generic_pipe(2).map_err(e)?;
    let hal = curvature(&sym, &sq).map_err(e)?;
    ensure(hal == d_cubical(&w, &sq).map_err(e)?, || "hal ≠ d_c for x1 dx2".into())?;
    ensure(!hal.is_zero(), || "x1 dx2 is unexpectedly flat".into())?;
    Ok(format!("Cr_3 trivial; transposition gives {l} ≠ {r}; form/connection round trips and hal = d_c exact"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 10] = [
        ("1 cubical identities", c1_cubical_identities, Some(Duration::from_secs(10))),
        ("2 30-letter cube identity", c2_thirty_letter, Some(Duration::from_secs(1))),
        ("3 Bianchi identity", c3_bianchi, Some(Duration::from_secs(30))),
        ("4 Stokes", c4_stokes, Some(Duration::from_secs(30))),
        ("5 subdivision additivity", c5_subdivision, None),
        ("6 integral along pipes", c6_pipe_integral, None),
        ("7 θ̂ factorisation and pullback", c7_theta_and_pullback, None),
        ("8 coboundary relation and naturality", c8_coboundary, None),
        ("9 alternation", c9_alternation, None),
        ("10 structural checks", c10_structural, None),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let late = limit.is_some_and(|l| elapsed > l);
        let budget = limit.map_or(String::new(), |l| format!(" / limit {:.0?}", l));
        match outcome {
            Ok(detail) if !late => println!("PASS [{name}] {detail} ({elapsed:.2?}{budget})"),
            Ok(detail) => {
                failures += 1;
                println!("FAIL [{name}] over time budget: {detail} ({elapsed:.2?}{budget})");
            }
            Err(why) => {
                failures += 1;
                println!("FAIL [{name}] {why} ({elapsed:.2?}{budget})");
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
