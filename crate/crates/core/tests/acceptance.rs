//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_FAILURES` are mathematically unattainable as
//! stated; they still print FAIL, and the run only goes red if one of them
//! starts passing or its analysed failure mode changes.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use pmh::constructions::{matching_meeting_clique, prop6_construct, remark1_reduction};
use pmh::cycles::{
    circumference, count_hamiltonian_cycles, find_hamiltonian_cycle, has_dominating_tour,
    is_hypohamiltonian,
};
use pmh::engine::{
    colouring_from_matching, count_pc_hamiltonian_cycles, extend_matching_arb_traceable,
    extend_matching_bipartite, extend_matching_complete, extend_matching_subcubic,
    haggkvist_condition, is_pmh, kotzig_partition, lasvergnas_condition,
};
use pmh::generate::{all_graphs, connected_graphs, GenOptions};
use pmh::graph::{are_isomorphic, make_named_graph};
use pmh::line_graph::build_line_graph;
use pmh::matching::{enumerate_perfect_matchings, find_perfect_matching, Matching};
use pmh::verify::{
    check_hamiltonian_containing, check_hamiltonian_decomposition, check_perfect_matching,
    check_walk,
};
use pmh::{Error, Graph, Meter};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Criteria whose failure is expected, with the reason printed alongside.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (
        9,
        "L(two squares sharing a vertex) has perfect matchings in no Hamiltonian cycle, so no construction can succeed on all of them",
    ),
    (
        11,
        "two 4-cycles sharing edge 45 meet the bipartite bound n/2 + 1, yet the matching {03, 12, 45} puts three cycle edges at vertex 5",
    ),
];

fn named(name: &str, p: &[usize]) -> Graph {
    make_named_graph(name, p).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() <= limit, || {
        format!("took {:?}, limit {limit:?}", start.elapsed())
    })
}

fn c1() -> Outcome {
    let t = Instant::now();
    for n in 3..=10 {
        let c = named("cycle", &[n]);
        let l = build_line_graph(&c).map_err(|e| e.to_string())?;
        ensure(are_isomorphic(l.lg(), &c).unwrap(), || {
            format!("L(C_{n}) is not C_{n}")
        })?;
    }
    within(t, Duration::from_secs(1))?;
    Ok("L(C_n) ≅ C_n for n = 3..10".into())
}

fn c2() -> Outcome {
    let t = Instant::now();
    let l = build_line_graph(&named("complete", &[4])).unwrap();
    let ms: Vec<Matching> = enumerate_perfect_matchings(l.lg()).collect();
    let oracle = common::count_perfect_matchings(l.lg());
    ensure(ms.len() == 8 && oracle == 8, || {
        format!("{} matchings, oracle {oracle}", ms.len())
    })?;
    let v = is_pmh(l.lg(), &mut Meter::unlimited()).unwrap();
    ensure(v.is_pmh && v.stats.matchings_tested == 8, || {
        format!("{v:?}")
    })?;
    for m in &ms {
        let h = find_hamiltonian_cycle(l.lg(), m.edges(), &mut Meter::unlimited())
            .unwrap()
            .ok_or("no extension")?;
        check_hamiltonian_containing(l.lg(), h.vertices(), m.edges()).map_err(|e| e.to_string())?;
        let s = extend_matching_subcubic(&l, m, &mut Meter::unlimited())
            .unwrap()
            .ok_or("subcubic found nothing")?;
        check_hamiltonian_containing(l.lg(), s.vertices(), m.edges()).map_err(|e| e.to_string())?;
    }
    within(t, Duration::from_secs(1))?;
    Ok("8 matchings, all extended by the oracle and by the dominating-cycle construction".into())
}

fn c3() -> Outcome {
    let t = Instant::now();
    let k5 = named("complete", &[5]);
    let ham = count_hamiltonian_cycles(&k5, &mut Meter::unlimited()).unwrap();
    let oracle = common::count_hamiltonian_cycles(&k5);
    ensure(ham == 12 && oracle == 12, || {
        format!("{ham} Hamiltonian cycles, oracle {oracle}")
    })?;
    let l = build_line_graph(&k5).unwrap();
    let mut count = 0;
    let mut fewest = u64::MAX;
    for m in enumerate_perfect_matchings(l.lg()) {
        let c = colouring_from_matching(&l, &m).unwrap();
        let pc = count_pc_hamiltonian_cycles(&k5, &c, &mut Meter::unlimited()).unwrap();
        let oracle = common::count_pc_cycles(&k5, |u, v| c.of(k5.edge_index(u, v).unwrap()));
        ensure(pc == oracle, || {
            format!("{pc} properly coloured cycles, oracle {oracle}")
        })?;
        fewest = fewest.min(pc);
        let h =
            extend_matching_complete(5, &m, &mut Meter::unlimited()).map_err(|e| e.to_string())?;
        check_hamiltonian_containing(l.lg(), h.vertices(), m.edges()).map_err(|e| e.to_string())?;
        count += 1;
    }
    ensure(fewest >= 2, || {
        format!("a colouring has only {fewest} properly coloured Hamiltonian cycles")
    })?;
    ensure(
        is_pmh(l.lg(), &mut Meter::unlimited()).unwrap().is_pmh,
        || "L(K5) is not PMH".into(),
    )?;
    within(t, Duration::from_secs(30))?;
    Ok(format!("12 Hamiltonian cycles; {count} matchings, each with ≥ {fewest} PC cycles and a validated extension"))
}

fn c4() -> Outcome {
    let t = Instant::now();
    let (mut graphs, mut matchings, mut extendable) = (0, 0, 0);
    for n in 3..=8 {
        for g in connected_graphs(
            n,
            GenOptions {
                max_degree: Some(3),
            },
        )
        .unwrap()
        {
            if g.size() % 2 == 1 {
                continue;
            }
            graphs += 1;
            let l = build_line_graph(&g).unwrap();
            for m in enumerate_perfect_matchings(l.lg()) {
                matchings += 1;
                let built = extend_matching_subcubic(&l, &m, &mut Meter::unlimited())
                    .map_err(|e| e.to_string())?;
                let forced =
                    find_hamiltonian_cycle(l.lg(), m.edges(), &mut Meter::unlimited()).unwrap();
                ensure(built.is_some() == forced.is_some(), || {
                    format!("mismatch on {g:?}, matching {m:?}")
                })?;
                if let Some(h) = built {
                    check_hamiltonian_containing(l.lg(), h.vertices(), m.edges())
                        .map_err(|e| e.to_string())?;
                    extendable += 1;
                }
            }
        }
    }
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "{graphs} graphs, {matchings} matchings ({extendable} extendable), zero mismatches"
    ))
}

fn c5() -> Outcome {
    let t = Instant::now();
    let mut notes = Vec::new();
    let cases = [
        ("K4", named("complete", &[4])),
        ("K3,3", named("bipartite", &[3])),
        ("prism", named("prism", &[])),
        ("cube", named("cube", &[])),
        ("hexagonal prism", named("prism", &[6])),
    ];
    for (name, g) in cases {
        ensure(g.is_cubic(), || format!("{name} is not cubic"))?;
        let l = build_line_graph(&g).unwrap();
        let mut count = 0;
        for m in enumerate_perfect_matchings(l.lg()) {
            let h = find_hamiltonian_cycle(l.lg(), m.edges(), &mut Meter::unlimited()).unwrap();
            ensure(h.is_some(), || {
                format!("{name}: matching {m:?} does not extend")
            })?;
            let (a, b) = kotzig_partition(&l, &m, &mut Meter::unlimited())
                .map_err(|e| format!("{name}: {e}"))?;
            check_hamiltonian_containing(l.lg(), a.vertices(), m.edges())
                .map_err(|e| e.to_string())?;
            check_hamiltonian_decomposition(l.lg(), a.vertices(), b.vertices())
                .map_err(|e| e.to_string())?;
            count += 1;
        }
        if g.size() % 2 == 1 {
            ensure(count == 0, || format!("{name} has odd size but matchings"))?;
            notes.push(format!("{name}: odd size, vacuous"));
        } else {
            notes.push(format!("{name}: {count}"));
        }
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!(
        "every matching extends and splits into two Hamiltonian cycles ({})",
        notes.join(", ")
    ))
}

fn c6() -> Outcome {
    let t = Instant::now();
    let mut tested = 0;
    for n in 3..=7 {
        for g in connected_graphs(n, GenOptions::default()).unwrap() {
            if g.size() < 3 {
                continue;
            }
            tested += 1;
            let tour = has_dominating_tour(&g).unwrap();
            let l = build_line_graph(&g).unwrap();
            let ham = find_hamiltonian_cycle(l.lg(), &[], &mut Meter::unlimited())
                .unwrap()
                .is_some();
            ensure(tour == ham, || {
                format!("mismatch on {g:?}: tour {tour}, L(G) Hamiltonian {ham}")
            })?;
        }
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!(
        "{tested} connected graphs with ≥ 3 edges, zero mismatches"
    ))
}

fn c7() -> Outcome {
    let t = Instant::now();
    let p = named("petersen", &[]);
    let r = prop6_construct(&p, 0, &mut Meter::unlimited()).map_err(|e| e.to_string())?;
    let g = &r.graph;
    ensure((g.order(), g.size()) == (28, 42), || {
        format!("{} vertices, {} edges", g.order(), g.size())
    })?;
    ensure(g.size() == p.size() + 3 * (p.order() - 1), || {
        "edge count identity fails".into()
    })?;
    let c = circumference(g, &mut Meter::unlimited()).unwrap();
    ensure(
        c.length == 27 && check_walk(g, c.witness.vertices()).cycle,
        || format!("circumference {}", c.length),
    )?;
    let l = build_line_graph(g).unwrap();
    let m = matching_meeting_clique(&l, r.keep)
        .unwrap()
        .ok_or("no perfect matching meets Q_v")?;
    check_perfect_matching(l.lg(), m.edges()).map_err(|e| e.to_string())?;
    let q: BTreeSet<usize> = g.incident_edges(r.keep).into_iter().collect();
    ensure(
        m.edges()
            .iter()
            .any(|&(x, y)| q.contains(&x) && q.contains(&y)),
        || "matching misses Q_v".into(),
    )?;
    let mut meter = Meter::unlimited();
    let h = find_hamiltonian_cycle(l.lg(), m.edges(), &mut meter).unwrap();
    ensure(h.is_none() && meter.nodes() > 0, || {
        "the matching extends".into()
    })?;
    let sub = extend_matching_subcubic(&l, &m, &mut Meter::unlimited()).unwrap();
    ensure(sub.is_none(), || {
        "the dominating-cycle route extends the matching".into()
    })?;
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "28 vertices, 42 edges, circumference 27; matching meeting Q_v certified non-extendable ({} nodes)",
        meter.nodes()
    ))
}

fn c8() -> Outcome {
    let t = Instant::now();
    let g = common::flower_snark_j5();
    ensure(g.is_cubic() && g.size().is_multiple_of(2), || {
        "J5 is not cubic of even size".into()
    })?;
    ensure(
        is_hypohamiltonian(&g, &mut Meter::unlimited()).unwrap(),
        || "J5 is not hypohamiltonian".into(),
    )?;
    for v in g.vertices() {
        let (h, _) = g.remove_vertex(v);
        let c = find_hamiltonian_cycle(&h, &[], &mut Meter::unlimited())
            .unwrap()
            .unwrap();
        ensure(check_walk(&h, c.vertices()).hamiltonian, || {
            format!("bad witness for J5 - {v}")
        })?;
    }
    let l = build_line_graph(&g).unwrap();
    let v = is_pmh(l.lg(), &mut Meter::unlimited()).unwrap();
    ensure(v.is_pmh && !v.vacuous, || format!("{v:?}"))?;
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "J5 (20 vertices, 30 edges) is hypohamiltonian; L(J5) is PMH over {} matchings",
        v.stats.matchings_tested
    ))
}

fn c9() -> Outcome {
    let t = Instant::now();
    let mut report = Vec::new();
    let mut all_built = true;
    for (name, g) in [
        ("bowtie", named("bowtie", &[])),
        ("two squares", common::two_squares()),
    ] {
        let l = build_line_graph(&g).unwrap();
        let (mut total, mut built) = (0, 0);
        for m in enumerate_perfect_matchings(l.lg()) {
            total += 1;
            let oracle = find_hamiltonian_cycle(l.lg(), m.edges(), &mut Meter::unlimited())
                .unwrap()
                .is_some();
            let brute = common::hamiltonian_through(l.lg(), m.edges());
            ensure(oracle == brute, || {
                "forced search disagrees with brute force".into()
            })?;
            match extend_matching_arb_traceable(&l, 0, &m) {
                Ok(h) => {
                    check_hamiltonian_containing(l.lg(), h.vertices(), m.edges())
                        .map_err(|e| e.to_string())?;
                    ensure(oracle, || "built an extension the oracle rules out".into())?;
                    built += 1;
                }
                Err(Error::Construction(_)) => {
                    ensure(!oracle, || format!("{name}: failed on extendable {m:?}"))?
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        all_built &= built == total;
        report.push(format!(
            "{name}: {built}/{total} extended, agreeing with the oracle"
        ));
    }
    within(t, Duration::from_secs(10))?;
    let summary = report.join("; ");
    if all_built {
        Ok(summary)
    } else {
        Err(format!("{summary} (KNOWN)"))
    }
}

fn c10() -> Outcome {
    let t = Instant::now();
    let mut notes = Vec::new();
    for (name, g) in [
        ("K4", named("complete", &[4])),
        ("prism", named("prism", &[])),
        ("cube", named("cube", &[])),
    ] {
        let l = build_line_graph(&g).unwrap();
        let mut count = 0;
        for m in enumerate_perfect_matchings(l.lg()) {
            let r = remark1_reduction(&g, &m).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.isomorphic, || {
                format!("{name}: reduction of {m:?} is not isomorphic")
            })?;
            count += 1;
        }
        notes.push(if g.size() % 2 == 1 {
            format!("{name}: odd size, vacuous")
        } else {
            format!("{name}: {count}")
        });
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!("every reduction isomorphic ({})", notes.join(", ")))
}

/// The bipartite bound with `slack` added to `n/2`, computed from scratch:
/// balanced sides of size ≥ 2 and the degree sum of every non-adjacent
/// cross pair at least `n/2 + slack`.
fn bipartite_bound(g: &Graph, slack: usize) -> bool {
    let Some(side) = g.bipartition() else {
        return false;
    };
    let u: Vec<usize> = g.vertices().filter(|&v| !side[v]).collect();
    let w: Vec<usize> = g.vertices().filter(|&v| side[v]).collect();
    if u.len() != w.len() || u.len() < 2 {
        return false;
    }
    u.iter().all(|&a| {
        w.iter()
            .all(|&b| g.has_edge(a, b) || g.degree(a) + g.degree(b) >= u.len() + slack)
    })
}

fn c11() -> Outcome {
    let t = Instant::now();
    let (mut hagg, mut lasv, mut strict) = (0, 0, 0);
    let mut hagg_bad = Vec::new();
    let mut lasv_bad = Vec::new();
    let mut strict_bad = 0;
    for n in [4, 6, 8] {
        for g in all_graphs(n, GenOptions::default()).unwrap() {
            let h = haggkvist_condition(&g).unwrap();
            let l = g.is_connected() && matches!(lasvergnas_condition(&g), Ok(true));
            ensure(l == (g.is_connected() && bipartite_bound(&g, 1)), || {
                format!("bound disagrees on {g:?}")
            })?;
            let s = g.is_connected() && bipartite_bound(&g, 2);
            if !(h || l || s) {
                continue;
            }
            let pmh = is_pmh(&g, &mut Meter::unlimited()).unwrap().is_pmh;
            hagg += h as usize;
            lasv += l as usize;
            strict += s as usize;
            if h && !pmh {
                hagg_bad.push(g.clone());
            }
            if l && !pmh {
                lasv_bad.push(g.clone());
            }
            strict_bad += (s && !pmh) as usize;
        }
    }
    within(t, Duration::from_secs(300))?;
    ensure(hagg_bad.is_empty(), || {
        format!(
            "{:?} meets the general condition but is not PMH",
            hagg_bad[0]
        )
    })?;
    ensure(strict_bad == 0, || {
        format!("{strict_bad} graphs meet the bipartite bound n/2 + 2 but are not PMH")
    })?;
    let summary = format!(
        "general condition: {hagg} graphs, all PMH; bipartite n/2 + 1: {lasv} graphs, {} not PMH; bipartite n/2 + 2: {strict} graphs, all PMH",
        lasv_bad.len()
    );
    if lasv_bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!(
            "{summary}; first violation {:?} (KNOWN)",
            lasv_bad[0]
        ))
    }
}

fn c12() -> Outcome {
    let t = Instant::now();
    let l2 = build_line_graph(&named("bipartite", &[2])).unwrap();
    let mut small = 0;
    for m in enumerate_perfect_matchings(l2.lg()) {
        let h =
            extend_matching_bipartite(2, &m, &mut Meter::unlimited()).map_err(|e| e.to_string())?;
        let h = h.ok_or("m = 2 reported inconclusive")?;
        check_hamiltonian_containing(l2.lg(), h.vertices(), m.edges())
            .map_err(|e| e.to_string())?;
        small += 1;
    }

    let l4 = build_line_graph(&named("bipartite", &[4])).unwrap();
    let lg = l4.lg();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut seen = BTreeSet::new();
    let (mut valid, mut inconclusive) = (0, 0);
    let mut tries = 0;
    while seen.len() < 100 && tries < 10_000 {
        tries += 1;
        let mut perm: Vec<usize> = lg.vertices().collect();
        perm.shuffle(&mut rng);
        let shuffled = lg.relabel(&perm).unwrap();
        let Some(pm) = find_perfect_matching(&shuffled, &[]).unwrap() else {
            return Err("no matching".into());
        };
        let mut back = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            back[p] = v;
        }
        let m = Matching::new(pm.edges().iter().map(|&(a, b)| (back[a], back[b]))).unwrap();
        if !seen.insert(m.clone()) {
            continue;
        }
        match extend_matching_bipartite(4, &m, &mut Meter::unlimited()) {
            Ok(Some(h)) => {
                check_hamiltonian_containing(lg, h.vertices(), m.edges())
                    .map_err(|e| format!("invalid output: {e}"))?;
                valid += 1;
            }
            Ok(None) => inconclusive += 1,
            Err(e) => return Err(format!("invalid output: {e}")),
        }
    }
    ensure(seen.len() >= 100, || {
        format!("only {} distinct samples", seen.len())
    })?;
    within(t, Duration::from_secs(120))?;
    Ok(format!(
        "m = 2: {small}/{small} valid; m = 4: {} sampled, {valid} valid, {inconclusive} inconclusive, 0 invalid",
        seen.len()
    ))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 12] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (8, c8),
        (9, c9),
        (10, c10),
        (11, c11),
        (12, c12),
    ];
    let handles: Vec<_> = criteria
        .into_iter()
        .map(|(id, f)| {
            (
                id,
                std::thread::spawn(move || {
                    let t = Instant::now();
                    let out =
                        std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (out, t.elapsed())
                }),
            )
        })
        .collect();
    let mut unexpected = 0;
    for (id, h) in handles {
        let (out, took) = h.join().unwrap();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        match (&out, known) {
            (Ok(msg), None) => println!("criterion {id:>2}: PASS  {msg}  [{took:.2?}]"),
            (Ok(msg), Some(_)) => {
                println!(
                    "criterion {id:>2}: PASS  {msg}  [{took:.2?}]  (listed as a known failure)"
                );
                unexpected += 1;
            }
            (Err(msg), Some((_, why))) if msg.ends_with("(KNOWN)") => {
                println!(
                    "criterion {id:>2}: FAIL  {msg}  [{took:.2?}]\n              known: {why}"
                );
            }
            (Err(msg), _) => {
                println!("criterion {id:>2}: FAIL  {msg}  [{took:.2?}]");
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} unexpected acceptance outcome(s)");
        std::process::exit(1);
    }
}
