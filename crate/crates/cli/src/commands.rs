use std::fs;
use std::path::Path;

use pmh::constructions::{prop6_construct, y_extension, y_reduction};
use pmh::cycles::{
    circumference, euler_tour, find_dominating_cycle, find_hamiltonian_cycle,
    is_arbitrarily_traceable, is_hypohamiltonian, CycleWalk,
};
use pmh::engine::{
    extend_matching_arb_traceable, extend_matching_bipartite, extend_matching_complete,
    extend_matching_subcubic, is_pmh, is_pmh_parallel, kotzig_partition,
};
use pmh::generate::{all_graphs, connected_graphs, GenOptions};
use pmh::graph::{make_named_graph, write_graph6};
use pmh::line_graph::{build_line_graph, LineGraphMap};
use pmh::matching::{enumerate_perfect_matchings, find_perfect_matching, Matching};
use pmh::verify::{check_hamiltonian_containing, check_hamiltonian_decomposition, check_walk};
use pmh::{Edge, Error, Graph, Meter, Result};
use serde_json::{json, Value};

use crate::{Command, ConstructCommand, CycleCommand, Method, Source};

/// Inputs shared by every graph of a run.
#[derive(Debug, Default)]
pub(crate) struct Context {
    matching: Option<Vec<Edge>>,
}

impl Context {
    pub(crate) fn load(cmd: &Command) -> Result<Context> {
        let path = match cmd {
            Command::Extend { matching, .. } | Command::Kotzig { matching, .. } => {
                matching.as_deref()
            }
            _ => None,
        };
        Ok(Context {
            matching: path.map(read_matching).transpose()?,
        })
    }
}

/// A matching file holds `[[x, y], ...]`, or an object with that list
/// under `"matching"` (as in `extend` output).
fn read_matching(path: &Path) -> Result<Vec<Edge>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))?;
    let bad =
        |e: serde_json::Error| Error::Parameter(format!("{}: not a matching: {e}", path.display()));
    let mut v: Value = serde_json::from_str(&text).map_err(bad)?;
    if let Some(inner) = v.get_mut("matching") {
        v = inner.take();
    }
    serde_json::from_value(v).map_err(bad)
}

pub(crate) fn name_and_source(cmd: &Command) -> (&'static str, &Source) {
    match cmd {
        Command::Lg(s) => ("lg", s),
        Command::PmEnum { source, .. } => ("pm-enum", source),
        Command::Cycles { which } => match which {
            CycleCommand::Ham(s) => ("cycles ham", s),
            CycleCommand::Domcycle { source, .. } => ("cycles domcycle", source),
            CycleCommand::Euler(s) => ("cycles euler", s),
            CycleCommand::Circ(s) => ("cycles circ", s),
            CycleCommand::Hypoham(s) => ("cycles hypoham", s),
            CycleCommand::Arbtrace { source, .. } => ("cycles arbtrace", source),
        },
        Command::PmhCheck { source, .. } => ("pmh-check", source),
        Command::Extend { source, .. } => ("extend", source),
        Command::Kotzig { source, .. } => ("kotzig", source),
        Command::Construct { which } => match which {
            ConstructCommand::Yext { source, .. } => ("construct yext", source),
            ConstructCommand::Yred { source, .. } => ("construct yred", source),
            ConstructCommand::Prop6 { source, .. } => ("construct prop6", source),
        },
        Command::Survey { .. } | Command::Gen { .. } => {
            unreachable!("handled before per-graph dispatch")
        }
    }
}

pub(crate) fn generate(
    name: &str,
    params: &[usize],
    max_degree: Option<usize>,
) -> Result<Vec<Graph>> {
    let opts = GenOptions { max_degree };
    let order = || match params {
        [n] => Ok(*n),
        _ => Err(Error::Parameter(format!(
            "`{name}` takes one parameter, the order"
        ))),
    };
    match name {
        "all" => all_graphs(order()?, opts),
        "connected" => connected_graphs(order()?, opts),
        _ => Ok(vec![make_named_graph(name, params)?]),
    }
}

pub(crate) fn execute(cmd: &Command, ctx: &Context, g: &Graph, meter: &mut Meter) -> Result<Value> {
    match cmd {
        Command::Lg(_) => {
            let l = build_line_graph(g)?;
            let table: Vec<Edge> = l.lg().vertices().map(|x| l.from_lg(x)).collect();
            Ok(
                json!({ "line_graph": write_graph6(l.lg()), "order": l.lg().order(), "size": l.lg().size(), "table": table }),
            )
        }
        Command::PmEnum {
            count_only,
            line_graph,
            ..
        } => {
            let l;
            let host = if *line_graph {
                l = build_line_graph(g)?;
                l.lg()
            } else {
                g
            };
            if *count_only {
                Ok(json!({ "count": enumerate_perfect_matchings(host).count() }))
            } else {
                let all: Vec<Matching> = enumerate_perfect_matchings(host).collect();
                Ok(json!({ "count": all.len(), "matchings": all }))
            }
        }
        Command::Cycles { which } => cycles(which, g, meter),
        Command::PmhCheck {
            line_graph,
            threads,
            ..
        } => {
            let l;
            let host = if *line_graph {
                l = build_line_graph(g)?;
                l.lg()
            } else {
                g
            };
            let v = if *threads > 1 {
                is_pmh_parallel(host, meter.budget(), *threads)?
            } else {
                is_pmh(host, meter)?
            };
            if let Some(w) = &v.witness {
                if find_hamiltonian_cycle(host, w.edges(), &mut Meter::unlimited())?.is_some() {
                    return Err(Error::Construction(
                        "reported witness extends after all".into(),
                    ));
                }
            }
            Ok(json!({
                "is_pmh": v.is_pmh,
                "vacuous": v.vacuous,
                "witness": v.witness,
                "matchings_tested": v.stats.matchings_tested,
            }))
        }
        Command::Extend { method, from, .. } => {
            let l = build_line_graph(g)?;
            let m = matching_for(ctx, &l)?;
            let walk = extend(*method, *from, g, &l, &m, meter)?;
            if let Some(w) = &walk {
                certify(l.lg(), w, &m)?;
            }
            Ok(
                json!({ "method": method_name(*method), "matching": m, "extended": walk.is_some(), "walk": walk }),
            )
        }
        Command::Kotzig { .. } => {
            let l = build_line_graph(g)?;
            let m = matching_for(ctx, &l)?;
            let (first, second) = kotzig_partition(&l, &m, meter)?;
            certify(l.lg(), &first, &m)?;
            check_hamiltonian_decomposition(l.lg(), first.vertices(), second.vertices()).map_err(
                |e| Error::Construction(format!("emitted cycles failed validation: {e}")),
            )?;
            Ok(json!({ "matching": m, "first": first, "second": second }))
        }
        Command::Construct { which } => construct(which, g, meter),
        Command::Survey { .. } | Command::Gen { .. } => {
            unreachable!("handled before per-graph dispatch")
        }
    }
}

fn cycles(which: &CycleCommand, g: &Graph, meter: &mut Meter) -> Result<Value> {
    match which {
        CycleCommand::Ham(_) => {
            let w = find_hamiltonian_cycle(g, &[], meter)?;
            require_all(&w, |w| check_walk(g, w.vertices()).hamiltonian)?;
            Ok(json!({ "hamiltonian": w.is_some(), "witness": w }))
        }
        CycleCommand::Domcycle { allow, .. } => {
            let w = find_dominating_cycle(g, allow, meter)?;
            require_all(&w, |w| {
                let c = check_walk(g, w.vertices());
                let touched = w.touched();
                c.cycle
                    && c.dominating
                    && g.vertices()
                        .all(|v| touched.contains(&v) || allow.contains(&v))
            })?;
            Ok(json!({ "found": w.is_some(), "allow": allow, "witness": w }))
        }
        CycleCommand::Euler(_) => {
            let w = euler_tour(g)?;
            require_all(&w, |w| g.size() == 0 || check_walk(g, w.vertices()).euler)?;
            Ok(json!({ "eulerian": w.is_some(), "witness": w }))
        }
        CycleCommand::Circ(_) => {
            let c = circumference(g, meter)?;
            require_all(&Some(&c), |c| {
                check_walk(g, c.witness.vertices()).cycle && c.witness.len() == c.length
            })?;
            Ok(json!({ "circumference": c.length, "witness": c.witness }))
        }
        CycleCommand::Hypoham(_) => {
            let h = is_hypohamiltonian(g, meter)?;
            Ok(json!({ "hypohamiltonian": h }))
        }
        CycleCommand::Arbtrace { from, .. } => {
            let t = is_arbitrarily_traceable(g, *from)?;
            Ok(json!({ "from": from, "traceable": t.is_traceable(), "detail": t }))
        }
    }
}

fn construct(which: &ConstructCommand, g: &Graph, meter: &mut Meter) -> Result<Value> {
    match which {
        ConstructCommand::Yext { at, .. } => {
            let (h, s) = y_extension(g, *at)?;
            Ok(json!({ "graph": write_graph6(&h), "surgery": s }))
        }
        ConstructCommand::Yred { triangle, .. } => {
            let t: [usize; 3] = triangle.as_slice().try_into().map_err(|_| {
                Error::Parameter(format!(
                    "--triangle needs 3 vertices, got {}",
                    triangle.len()
                ))
            })?;
            let (h, s) = y_reduction(g, t)?;
            Ok(json!({ "graph": write_graph6(&h), "surgery": s }))
        }
        ConstructCommand::Prop6 { keep, .. } => {
            let p = prop6_construct(g, *keep, meter)?;
            Ok(json!({
                "graph": write_graph6(&p.graph),
                "order": p.graph.order(),
                "size": p.graph.size(),
                "keep": p.keep,
                "origin": p.origin,
            }))
        }
    }
}

fn extend(
    method: Method,
    from: Option<usize>,
    g: &Graph,
    l: &LineGraphMap,
    m: &Matching,
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    match method {
        Method::Subcubic => extend_matching_subcubic(l, m, meter),
        Method::Complete => {
            let n = g.order();
            if g.size() != n * n.saturating_sub(1) / 2 {
                return Err(Error::Precondition(format!(
                    "method `complete` needs K_n, got {} edges on {n} vertices",
                    g.size()
                )));
            }
            extend_matching_complete(n, m, meter).map(Some)
        }
        Method::Bipartite => {
            let k = g.order() / 2;
            let canonical = (k > 0 && g.order().is_multiple_of(2))
                .then(|| make_named_graph("bipartite", &[k]))
                .transpose()?;
            if canonical.as_ref().map(|c| c.edges()) != Some(g.edges()) {
                return Err(Error::Precondition(
                    "method `bipartite` needs K_{k,k} with sides 0..k and k..2k (see `pmh gen bipartite k`)".into(),
                ));
            }
            extend_matching_bipartite(k, m, meter)
        }
        Method::Arbtrace => {
            let v = match from {
                Some(v) => v,
                None => g
                    .vertices()
                    .find(|&v| is_arbitrarily_traceable(g, v).is_ok_and(|t| t.is_traceable()))
                    .ok_or_else(|| {
                        Error::Precondition("G is arbitrarily traceable from no vertex".into())
                    })?,
            };
            extend_matching_arb_traceable(l, v, m).map(Some)
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Subcubic => "subcubic",
        Method::Complete => "complete",
        Method::Bipartite => "bipartite",
        Method::Arbtrace => "arbtrace",
    }
}

fn matching_for(ctx: &Context, l: &LineGraphMap) -> Result<Matching> {
    match &ctx.matching {
        Some(edges) => {
            let m = Matching::new(edges.iter().copied())?;
            m.require_perfect(l.lg())?;
            Ok(m)
        }
        None => find_perfect_matching(l.lg(), &[])?.ok_or_else(|| {
            Error::Parity(format!(
                "G has {} edges, so L(G) has no perfect matching",
                l.base().size()
            ))
        }),
    }
}

fn certify(host: &Graph, w: &CycleWalk, m: &Matching) -> Result<()> {
    check_hamiltonian_containing(host, w.vertices(), m.edges())
        .map_err(|e| Error::Construction(format!("emitted walk failed validation: {e}")))
}

fn require_all<T>(w: &Option<T>, ok: impl Fn(&T) -> bool) -> Result<()> {
    match w {
        Some(w) if !ok(w) => Err(Error::Construction(
            "emitted witness failed validation".into(),
        )),
        _ => Ok(()),
    }
}
