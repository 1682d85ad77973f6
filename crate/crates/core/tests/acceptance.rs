//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use poc_core::canon::canonical_form;
use poc_core::gadgets::{fix_tau, fix_tauc, full_reduction, solve_ab};
use poc_core::io::{emit_graph6, parse_graph6};
use poc_core::recognize::{build_special_tree, Characterization, Criticality, PatternName};
use poc_core::solver::{connected_vertex_cover_number, vertex_cover_number};
use poc_core::verify::{
    characterization_on, connected_chordal_graphs_up_to, connected_graphs_up_to,
    corollary_chordal_p7free_on, critical_chordal_on, gadgets_on, graphs_up_to, observation1_on,
    strongly_critical_structure_on, TheoremReport,
};
use poc_core::{Graph, Ratio, Solver};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

struct Fixture {
    solver: Solver,
    connected: Vec<Vec<Graph>>,
}

impl Fixture {
    fn connected_up_to(&self, n: usize) -> Vec<Graph> {
        self.connected[..n].iter().flatten().cloned().collect()
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report_ok(r: &TheoremReport) -> Result<(), String> {
    ensure(
        r.passed,
        format!(
            "{}: {} violations, first {:?}",
            r.theorem,
            r.violations.len(),
            r.violations.first()
        ),
    )
}

fn ratio(p: u64, q: u64) -> Ratio {
    Ratio::new(p, q).unwrap()
}

fn named_table(f: &Fixture) -> Outcome {
    let started = Instant::now();
    let table = [
        (PatternName::P5, ratio(3, 2)),
        (PatternName::C4, ratio(3, 2)),
        (PatternName::C5, ratio(4, 3)),
        (PatternName::P7, ratio(5, 3)),
        (PatternName::C6, ratio(5, 3)),
        (PatternName::Delta1, ratio(5, 3)),
        (PatternName::Delta2, ratio(5, 3)),
    ];
    for (p, want) in table {
        let got = f.solver.poc(&p.graph()).map_err(|e| e.to_string())?;
        ensure(got == want, format!("{p}: got {got}, want {want}"))?;
    }
    let elapsed = started.elapsed();
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("7 graphs in {elapsed:?}"))
}

fn observation_sweep(f: &Fixture) -> Outcome {
    let graphs = f.connected_up_to(8);
    let r = observation1_on(&graphs, &f.solver);
    report_ok(&r)?;
    let at8 = f.connected[7].len();
    ensure(at8 == 11117, format!("{at8} classes at n = 8"))?;
    ensure(r.elapsed_ms < 600_000, format!("{} ms", r.elapsed_ms))?;
    Ok(format!(
        "{} graphs, {} at n = 8, {} ms",
        r.scanned, at8, r.elapsed_ms
    ))
}

fn characterization(f: &Fixture, class: Characterization) -> Result<TheoremReport, String> {
    let r = characterization_on(&f.connected_up_to(8), class, &f.solver);
    report_ok(&r)?;
    Ok(r)
}

fn perfect_class(f: &Fixture) -> Outcome {
    let r = characterization(f, Characterization::PocPerfect)?;
    Ok(format!(
        "{} free graphs, equivalence held on all, {} ms",
        r.scanned, r.elapsed_ms
    ))
}

fn four_thirds(f: &Fixture) -> Outcome {
    let r = characterization(f, Characterization::NearPerfect43)?;
    let c5 = f.solver.poc(&Graph::cycle(5)).unwrap();
    ensure(c5 == ratio(4, 3), format!("C5 has PoC {c5}"))?;
    Ok(format!(
        "{} free graphs, C5 at 4/3, {} ms",
        r.scanned, r.elapsed_ms
    ))
}

fn three_halves(f: &Fixture) -> Outcome {
    let r = characterization(f, Characterization::NearPerfect32)?;
    let cor = corollary_chordal_p7free_on(&f.connected_up_to(8), &f.solver);
    report_ok(&cor)?;
    Ok(format!(
        "{} free graphs, {} chordal P7-free graphs, {} ms",
        r.scanned,
        cor.scanned,
        r.elapsed_ms + cor.elapsed_ms
    ))
}

fn critical_chordal(f: &Fixture) -> Outcome {
    let chordal: Vec<Graph> = connected_chordal_graphs_up_to(9)
        .map_err(|e| e.to_string())?
        .into_iter()
        .flatten()
        .collect();
    let r = critical_chordal_on(&chordal, 9, &f.solver);
    report_ok(&r)?;
    let crit = Criticality::new(&f.solver);
    let mut found: Vec<_> = chordal
        .iter()
        .filter(|g| g.n() >= 3 && g.m() > 0 && crit.is_critical(g).unwrap())
        .map(|g| {
            let c = f.solver.numbers(g);
            ensure(
                c.poc().unwrap() == Ratio::two_minus_reciprocal(c.tau as u64),
                format!("PoC of {:?} is not 2 - 1/tau", g),
            )
            .map(|_| canonical_form(g).unwrap())
        })
        .collect::<Result<_, _>>()?;
    found.sort();
    let mut expected: Vec<_> = [Graph::complete(2), Graph::path(3), Graph::path(4)]
        .iter()
        .map(|b| canonical_form(&build_special_tree(b).unwrap()).unwrap())
        .collect();
    expected.sort();
    ensure(found == expected, format!("critical graphs {found:?}"))?;
    let orders: Vec<usize> = found.iter().map(|c| c.n()).collect();
    Ok(format!(
        "{} chordal graphs, critical orders {orders:?}, {} ms",
        r.scanned, r.elapsed_ms
    ))
}

fn strongly_critical(f: &Fixture) -> Outcome {
    let r = strongly_critical_structure_on(&f.connected_up_to(7), &f.solver);
    report_ok(&r)?;
    let crit = Criticality::new(&f.solver);
    let c5 = Graph::cycle(5);
    ensure(
        crit.is_critical(&c5) == Ok(true) && crit.is_strongly_critical(&c5) == Ok(false),
        "C5 should be critical but not strongly critical",
    )?;
    let c5_code = canonical_form(&c5);
    let reported = r.notes.iter().any(|n| {
        n.strip_prefix("critical, not strongly critical: ")
            .map(|s| canonical_form(&parse_graph6(s).unwrap()) == c5_code)
            .unwrap_or(false)
    });
    ensure(reported, "C5 missing from the report")?;
    let strong = r.notes.iter().filter(|n| n.starts_with("strongly")).count();
    Ok(format!(
        "{} graphs, {strong} strongly critical, {} ms",
        r.scanned, r.elapsed_ms
    ))
}

fn gadget_formulas(f: &Fixture) -> Outcome {
    let graphs = f.connected_up_to(5);
    let mut checked = 0;
    for g in graphs.iter().filter(|g| g.m() > 0) {
        checked += 1;
        for out in [fix_tauc(g).unwrap(), fix_tau(g).unwrap()] {
            let tau = vertex_cover_number(&out.graph);
            let tauc = connected_vertex_cover_number(&out.graph);
            ensure(
                out.graph.is_vertex_cover(&tau.witness)
                    && out.graph.is_connected_vertex_cover(&tauc.witness),
                format!("{}: witness invalid", out.provenance),
            )?;
            ensure(
                tau.value == out.predicted_tau && Some(tauc.value) == out.predicted_tauc,
                format!(
                    "{}: predicted ({}, {:?}), exact ({}, {})",
                    out.provenance, out.predicted_tau, out.predicted_tauc, tau.value, tauc.value
                ),
            )?;
        }
    }
    ensure(checked == 30, format!("{checked} graphs, expected 30"))?;
    let full = gadgets_on(&graphs);
    report_ok(&full)?;
    Ok(format!("{checked} graphs, both constructions exact"))
}

fn solve_ab_suite(_: &Fixture) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (r1, r2) in [(4u64, 3u64), (3, 2), (7, 4)] {
        for _ in 0..1000 {
            let phi2 = rng.gen_range(2..=1_000_000u64);
            let phi1 = rng.gen_range(phi2 + 1..2 * phi2);
            let s = solve_ab(phi1, phi2, r1, r2).map_err(|e| e.to_string())?;
            let (a, b, c) = (s.a as i128, s.b as i128, s.c as i128);
            let (p1, p2, r1i, r2i) = (phi1 as i128, phi2 as i128, r1 as i128, r2 as i128);
            ensure(
                (a + 2 * b + p1) * r2i == (a + b + p2) * r1i,
                format!("ratio fails for {phi1}, {phi2}"),
            )?;
            ensure(
                a + 2 * b + p1 == r1i * c && a + b + p2 == r2i * c,
                "c does not scale both sides",
            )?;
            let bound = 2 * r2i * (p1 + p2 + 2);
            ensure(
                a <= bound && b <= bound,
                format!("a = {a}, b = {b} above {bound}"),
            )?;
            let prev_b = (r1i - r2i) * (c - 1) - (p1 - p2);
            let prev_a = (2 * r2i - r1i) * (c - 1) - (2 * p2 - p1);
            ensure(prev_a < 0 || prev_b < 0, format!("c = {c} not minimal"))?;
        }
    }
    Ok("3000 instances".to_string())
}

fn reduction_decisions(f: &Fixture) -> Outcome {
    let graphs = [
        Graph::complete(2),
        Graph::path(3),
        Graph::complete(3),
        Graph::path(4),
    ];
    let mut pieces = 0;
    for g in &graphs {
        for h in &graphs {
            let red = full_reduction(g, h, 3, 2, &f.solver).map_err(|e| e.to_string())?;
            let plan = &red.plan;
            ensure(
                plan.phi_identities_hold() && plan.equations_hold(),
                "plan algebra",
            )?;
            let tg = vertex_cover_number(g).value as u64;
            let th = vertex_cover_number(h).value as u64;
            ensure(
                plan.decision == (th <= tg),
                format!(
                    "decision {} for tau(G) = {tg}, tau(H) = {th}",
                    plan.decision
                ),
            )?;
            for stage in red.stages.iter().filter(|s| s.graph.n() <= 40) {
                pieces += 1;
                let exact = vertex_cover_number(&stage.graph).value;
                ensure(
                    exact == stage.predicted_tau,
                    format!(
                        "{}: tau {exact} vs {}",
                        stage.provenance, stage.predicted_tau
                    ),
                )?;
            }
        }
    }
    Ok(format!("16 pairs, {pieces} pieces solver-checked"))
}

fn oracle_equivalence(f: &Fixture) -> Outcome {
    let check = |g: &Graph| -> Result<(), String> {
        let tau = vertex_cover_number(g);
        let tauc = connected_vertex_cover_number(g);
        ensure(
            tau.value == common::naive_tau(g),
            format!("tau differs on {g:?}"),
        )?;
        ensure(
            tauc.value == common::naive_tauc(g),
            format!("tau_c differs on {g:?}"),
        )?;
        ensure(
            g.is_vertex_cover(&tauc.witness),
            "tau_c witness does not cover",
        )?;
        for part in &tauc.per_component {
            ensure(
                g.is_connected_set(&part.witness),
                format!("tau_c witness part {} disconnected", part.witness),
            )?;
        }
        Ok(())
    };
    let all = graphs_up_to(7).map_err(|e| e.to_string())?;
    let mut count = 0;
    for g in all.iter().flatten() {
        check(g)?;
        count += 1;
    }
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..1000 {
        let p: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..8)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        check(&Graph::from_edges(8, &edges).unwrap())?;
    }
    let _ = f;
    Ok(format!(
        "{count} graphs with n <= 7 and 1000 random with n = 8"
    ))
}

fn graph6_round_trip(f: &Fixture) -> Outcome {
    let graphs = f.connected_up_to(8);
    for g in &graphs {
        let s = emit_graph6(g).map_err(|e| e.to_string())?;
        let back = parse_graph6(&s).map_err(|e| e.to_string())?;
        ensure(&back == g, format!("{s} did not round-trip"))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

type Criterion = (&'static str, fn(&Fixture) -> Outcome);

fn main() {
    let fixture = Fixture {
        solver: Solver::new(),
        connected: connected_graphs_up_to(8).expect("within cap"),
    };
    let criteria: [Criterion; 12] = [
        ("named PoC table", named_table),
        ("tau_c <= 2 tau - 1 sweep, n <= 8", observation_sweep),
        ("PoC-perfect class, n <= 8", perfect_class),
        ("4/3 class, n <= 8", four_thirds),
        ("3/2 class and chordal P7-free, n <= 8", three_halves),
        ("critical chordal graphs, n <= 9", critical_chordal),
        ("strongly critical structure, n <= 7", strongly_critical),
        ("fixer formulas, n <= 5", gadget_formulas),
        ("solve_ab properties", solve_ab_suite),
        ("reduction decisions", reduction_decisions),
        ("solver against brute force", oracle_equivalence),
        ("graph6 round trip, n <= 8", graph6_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&fixture)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
