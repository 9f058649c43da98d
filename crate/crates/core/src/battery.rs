//! The acceptance battery: thirteen exact checks, each with a time limit.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::colourers::{
    binomial, check_colouring, defective_colour_rooted, defective_colour_via_col2,
    two_colour_fvn_girth7, two_colour_large_girth, KstCheck, LargeGirthOutcome,
};
use crate::constructions::{
    apex23_grid_girth8, apex_grid_girth5, extract_proper_copy, fvn1_gadget, fvn7_gadget,
    independent_set_tree, treedepth_amplification, OrderedHost,
};
use crate::corpus::{all_labelled_trees, girth5_graphs, random_graphs, random_tree, rng};
use crate::graph::named::{complete, cycle, heawood, path, petersen, star};
use crate::minors::{
    contract_model, mader_degree_bound, mader_extract, max_edges_between, verify_model,
};
use crate::oracle::{
    all_colourings, chromatic_number, is_colourable, min_clustering, min_defect,
    verify_equivalence_thm31, ColourabilityQuery, Mode, DEFAULT_BUDGET,
};
use crate::params::{
    circumference, degeneracy, feedback_vertex_number, hadwiger_number, is_feedback_vertex_set,
    pathwidth_exact, strong_colouring_number_exact, strong_colouring_number_greedy,
    treedepth_exact, treewidth_exact, RootedForestWitness,
};
use crate::{girth, Girth, Graph};

/// Seed of the 500-graph corpus used by criteria 11 and 12.
pub const SMALL_CORPUS_SEED: u64 = 0x5eed_0011;
/// Seed of the 200-graph girth-5 corpus used by criteria 5 and 6.
pub const GIRTH5_CORPUS_SEED: u64 = 0x5eed_0005;

type Check = fn() -> Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<44} {:>8.2}s / {:>4}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms as f64 / 1000.0,
            self.limit_ms / 1000,
            self.detail
        )
    }
}

const fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, limit, check| Criterion {
        id,
        name,
        limit,
        check,
    };
    vec![
        c(
            1,
            "standard example four-way equivalence",
            mins(5),
            criterion_1 as Check,
        ),
        c(2, "fvn-1 gadget resists defect d", mins(2), criterion_2),
        c(3, "fvn-7 gadget structure at c = 1", mins(1), criterion_3),
        c(
            4,
            "independent-set tree is 3-chromatic",
            mins(5),
            criterion_4,
        ),
        c(5, "2-reach colouring defect bound", mins(5), criterion_5),
        c(
            6,
            "rooted colouring keeps the root proper",
            mins(5),
            criterion_6,
        ),
        c(
            7,
            "feedback-set parity colouring clustering",
            mins(2),
            criterion_7,
        ),
        c(
            8,
            "large-girth peeling on trees and cycles",
            mins(1),
            criterion_8,
        ),
        c(
            9,
            "minor extraction on subdivided Heawood",
            mins(1),
            criterion_9,
        ),
        c(10, "apex grid edge counts and girth", mins(3), criterion_10),
        c(11, "parameter inequality chain", mins(10), criterion_11),
        c(12, "oracle self-consistency", mins(10), criterion_12),
        c(13, "proper copy extraction", mins(5), criterion_13),
    ]
}

pub fn run(criterion: &Criterion) -> CriterionResult {
    let start = Instant::now();
    let outcome =
        std::panic::catch_unwind(criterion.check).unwrap_or_else(|_| Err("check panicked".into()));
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if elapsed > criterion.limit {
        passed = false;
        detail = format!("over time limit; {detail}");
    }
    CriterionResult {
        id: criterion.id,
        name: criterion.name,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: criterion.limit.as_millis(),
    }
}

/// Runs the selected criteria (all when `only` is empty) in parallel and
/// returns the results ordered by id.
pub fn run_all(only: &[u8]) -> Vec<CriterionResult> {
    let list: Vec<Criterion> = criteria()
        .into_iter()
        .filter(|c| only.is_empty() || only.contains(&c.id))
        .collect();
    let mut results: Vec<CriterionResult> = list.par_iter().map(run).collect();
    results.sort_by_key(|r| r.id);
    results
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn colourable(g: &Graph, k: usize, mode: Mode) -> Result<bool, String> {
    let q = ColourabilityQuery::new(k, mode).map_err(err)?;
    Ok(is_colourable(g, q).map_err(err)?.colourable)
}

fn criterion_1() -> Result<String, String> {
    let hosts = [
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("P3", path(3)),
        ("C5", cycle(5)),
    ];
    let mut checked = 0;
    for (name, h) in hosts {
        let chi = chromatic_number(&h, DEFAULT_BUDGET).map_err(err)?;
        let host = OrderedHost::natural(h.clone());
        for d in 1..=2usize {
            let size = (0..h.vertex_count() as u32)
                .map(|i| d.pow(i))
                .sum::<usize>();
            if size > 400 {
                continue;
            }
            for k in 1..=3 {
                let r = verify_equivalence_thm31(&host, d, k, DEFAULT_BUDGET).map_err(err)?;
                ensure(r.agree(), || format!("{name}, d={d}, k={k}: {r:?}"))?;
                ensure(r.host_proper == (chi <= k), || {
                    format!(
                        "{name}, k={k}: host answer {} but chromatic number {chi}",
                        r.host_proper
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (H, d, k) triples agree"))
}

fn criterion_2() -> Result<String, String> {
    for d in 0..=1 {
        let (g, meta) = fvn1_gadget(d);
        let alpha = meta.named_vertices["alpha"].clone();
        ensure(g.find_triangle().is_none(), || {
            format!("d={d}: triangle found")
        })?;
        ensure(is_feedback_vertex_set(&g, &alpha), || {
            format!("d={d}: alpha is not a feedback set")
        })?;
        let fvn = feedback_vertex_number(&g).size();
        ensure(fvn == 1, || format!("d={d}: fvn = {fvn}"))?;
        ensure(!colourable(&g, 2, Mode::Defect(d))?, || {
            format!("d={d}: 2-colourable with defect {d}")
        })?;
    }
    Ok("d = 0, 1: triangle-free, fvn 1, not 2-colourable with defect d".into())
}

fn criterion_3() -> Result<String, String> {
    let (g, meta) = fvn7_gadget(1);
    ensure(g.vertex_count() == 357, || {
        format!("{} vertices", g.vertex_count())
    })?;
    let gi = girth(&g);
    ensure(gi == Girth::Finite(6), || format!("girth {gi}"))?;
    let v = &meta.named_vertices["V"];
    ensure(is_feedback_vertex_set(&g, v), || {
        "V is not a feedback set".into()
    })?;
    let (rest, _) = g.without(v);
    ensure(rest.is_forest() && rest.max_degree() <= 2, || {
        "G - V is not a union of paths".into()
    })?;
    ensure(!colourable(&g, 2, Mode::Proper)?, || {
        "properly 2-colourable".into()
    })?;
    Ok(format!(
        "357 vertices, girth 6, G - V = {} paths, not bipartite",
        rest.components().len()
    ))
}

fn criterion_4() -> Result<String, String> {
    let (g, _, forest) = independent_set_tree(3, 6, 100_000).map_err(err)?;
    ensure(g.is_triangle_free(), || "triangle found".into())?;
    ensure(!colourable(&g, 2, Mode::Proper)?, || "bipartite".into())?;
    ensure(forest.is_valid_for(&g), || {
        "tree is not a treedepth witness".into()
    })?;
    ensure(forest.depth() <= 6, || {
        format!("witness depth {}", forest.depth())
    })?;
    Ok(format!(
        "{} vertices, triangle-free, not bipartite, depth {}",
        g.vertex_count(),
        forest.depth()
    ))
}

fn criterion_5() -> Result<String, String> {
    let corpus = girth5_graphs(GIRTH5_CORPUS_SEED, 200, 30);
    let mut worst = 0;
    for (i, g) in corpus.iter().enumerate() {
        ensure(girth(g).at_least(5), || {
            format!("graph {i} has girth {}", girth(g))
        })?;
        let w = strong_colouring_number_greedy(g, 2).map_err(err)?;
        let report = defective_colour_via_col2(g, 2, 2, &w, KstCheck::Check).map_err(err)?;
        let defect = check_colouring(g, &report.colouring).map_err(err)?.defect;
        let b = w.bound as u128;
        let bound = b + binomial(b, 1);
        ensure(defect as u128 <= bound, || {
            format!("graph {i}: defect {defect} > {bound}")
        })?;
        worst = worst.max(defect);
    }
    Ok(format!("200 graphs, worst defect {worst}"))
}

fn criterion_6() -> Result<String, String> {
    let corpus = girth5_graphs(GIRTH5_CORPUS_SEED, 200, 30);
    let mut runs = 0;
    for (i, g) in corpus.iter().enumerate() {
        let w = strong_colouring_number_greedy(g, 2).map_err(err)?;
        for root in g.vertices() {
            let report =
                defective_colour_rooted(g, 2, 2, &w, root, KstCheck::Check).map_err(err)?;
            let c = &report.colouring;
            let clash = g
                .neighbors(root)
                .iter()
                .find(|&&u| c.colour(u) == c.colour(root));
            ensure(clash.is_none(), || {
                format!("graph {i}, root {root}: neighbour {clash:?} shares its colour")
            })?;
            runs += 1;
        }
    }
    Ok(format!(
        "200 graphs, {runs} roots, every root properly coloured"
    ))
}

fn criterion_7() -> Result<String, String> {
    let mut out = Vec::new();
    let heawood_sub = heawood().subdivided();
    let fvn = feedback_vertex_number(&heawood_sub);
    for (name, g, a) in [
        ("C14", cycle(14), vec![0]),
        (
            "subdivided Heawood",
            heawood_sub,
            fvn.set.as_slice().to_vec(),
        ),
    ] {
        let report = two_colour_fvn_girth7(&g, &a).map_err(err)?;
        let clustering = check_colouring(&g, &report.colouring)
            .map_err(err)?
            .clustering;
        let k = a.len() as u128;
        let bound = binomial(k, 2) + k + 1;
        ensure(clustering as u128 <= bound, || {
            format!("{name}: clustering {clustering} > {bound}")
        })?;
        out.push(format!(
            "{name} |A|={} clustering {clustering} <= {bound}",
            a.len()
        ));
    }
    Ok(out.join("; "))
}

fn criterion_8() -> Result<String, String> {
    let mut count = 0;
    let mut check = |label: &str, g: &Graph| -> Result<(), String> {
        match two_colour_large_girth(g) {
            LargeGirthOutcome::Coloured(r) => {
                let c = check_colouring(g, &r.colouring).map_err(err)?.clustering;
                ensure(c <= 2, || format!("{label}: clustering {c}"))?;
                count += 1;
                Ok(())
            }
            LargeGirthOutcome::Stuck(_) => Err(format!("{label}: stuck")),
        }
    };
    for n in 2..=7 {
        for (i, t) in all_labelled_trees(n).enumerate() {
            check(&format!("labelled tree {i} on {n}"), &t)?;
        }
    }
    let mut r = rng(8);
    for n in 1..=100 {
        check(&format!("path {n}"), &path(n))?;
        check(&format!("star {n}"), &star(n - 1))?;
        check(&format!("random tree {n}"), &random_tree(&mut r, n))?;
    }
    for n in 3..=100 {
        check(&format!("cycle {n}"), &cycle(n))?;
    }
    match two_colour_large_girth(&petersen()) {
        LargeGirthOutcome::Stuck(cert) => {
            let sub = cert.subgraph(&petersen());
            ensure(sub.min_degree() >= 2, || {
                "certificate has a vertex of degree < 2".into()
            })?;
        }
        LargeGirthOutcome::Coloured(_) => return Err("Petersen was coloured".into()),
    }
    Ok(format!(
        "{count} trees and cycles with clustering <= 2; Petersen stuck"
    ))
}

fn criterion_9() -> Result<String, String> {
    let g = heawood().subdivided();
    let model = mader_extract(&g, 1).map_err(err)?;
    let report = verify_model(&g, &model);
    ensure(report.valid, || {
        format!("invalid model: {:?}", report.problems)
    })?;
    ensure(report.covers_host, || {
        format!("uncovered: {:?}", report.uncovered)
    })?;
    let between = max_edges_between(&g, &model);
    ensure(between <= 1, || {
        format!("{between} edges between two branch sets")
    })?;
    let q = contract_model(&g, &model).map_err(err)?;
    let bound = mader_degree_bound(1);
    ensure(q.min_degree() >= bound, || {
        format!("minor min degree {} < {bound}", q.min_degree())
    })?;
    Ok(format!(
        "{} branch sets, minor min degree {}",
        model.branch_sets.len(),
        q.min_degree()
    ))
}

fn criterion_10() -> Result<String, String> {
    for m in 4..=10 {
        let (g, _) = apex_grid_girth5(m).map_err(err)?;
        let (v, e) = (g.vertex_count(), g.edge_count());
        let gi = girth(&g);
        ensure(gi == Girth::Finite(5), || {
            format!("apex grid m={m}: girth {gi}")
        })?;
        // gamma = 0, k = 1: |E| <= 8|V|/3 + 2 * C(1, 2)
        ensure(
            3 * e as u128 <= 8 * v as u128 + 3 * 2 * binomial(1, 2),
            || format!("apex grid m={m}: |E|={e}, |V|={v}"),
        )?;
    }
    for m in 5..=8 {
        let (g, _) = apex23_grid_girth8(m).map_err(err)?;
        let gi = girth(&g);
        ensure(gi == Girth::Finite(8), || {
            format!("apex23 grid m={m}: girth {gi}")
        })?;
        let (v, e) = (g.vertex_count() as u128, g.edge_count() as u128);
        ensure(3 * e <= 8 * v + 3 * 24 * binomial(23, 2), || {
            format!("apex23 grid m={m}: |E|={e}, |V|={v}")
        })?;
    }
    Ok("apex grids m = 4..10 girth 5 within 8|V|/3; apex23 grids m = 5..8 girth 8".into())
}

fn criterion_11() -> Result<String, String> {
    let corpus = random_graphs(SMALL_CORPUS_SEED, 500, 10);
    let failures: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| chain(g).err().map(|e| format!("graph {i}: {e}")))
        .collect();
    match failures.first() {
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
        None => Ok("500 graphs satisfy the chain".into()),
    }
}

fn chain(g: &Graph) -> Result<(), String> {
    let had = hadwiger_number(g, 12).map_err(err)?.0;
    let tw = treewidth_exact(g, 15).map_err(err)?.0;
    let pw = pathwidth_exact(g, 15).map_err(err)?.0;
    let td = treedepth_exact(g, 15).map_err(err)?.0;
    let fvn = feedback_vertex_number(g).size();
    let cir = circumference(g);
    let values = format!("had {had}, tw {tw}, pw {pw}, td {td}, fvn {fvn}, cir {cir}");
    ensure(had <= tw + 1 && tw <= pw && pw + 1 <= td, || values.clone())?;
    ensure(tw <= fvn + 1 && tw + 1 <= cir, || values.clone())?;
    let col1 = strong_colouring_number_exact(g, 1, 16).map_err(err)?.bound;
    let degen = degeneracy(g).degeneracy;
    ensure(col1 == degen + 1, || {
        format!("col_1 {col1}, degeneracy {degen}")
    })?;
    for r in 1..=3 {
        let col = strong_colouring_number_exact(g, r, 16).map_err(err)?.bound;
        ensure(col <= tw + 1, || {
            format!("col_{r} {col} > tw + 1 = {}", tw + 1)
        })?;
    }
    Ok(())
}

fn criterion_12() -> Result<String, String> {
    let corpus = random_graphs(SMALL_CORPUS_SEED, 500, 10);
    let failures: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| self_consistent(g).err().map(|e| format!("graph {i}: {e}")))
        .collect();
    match failures.first() {
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
        None => Ok("500 graphs: three proper queries agree, minima monotone in k".into()),
    }
}

fn self_consistent(g: &Graph) -> Result<(), String> {
    for k in 2..=3 {
        let p = colourable(g, k, Mode::Proper)?;
        let d = colourable(g, k, Mode::Defect(0))?;
        let c = colourable(g, k, Mode::Clustering(1))?;
        ensure(p == d && d == c, || {
            format!("k={k}: proper {p}, defect 0 {d}, clustering 1 {c}")
        })?;
    }
    let defects = (1..=3)
        .map(|k| min_defect(g, k, DEFAULT_BUDGET).map_err(err))
        .collect::<Result<Vec<_>, _>>()?;
    let clusters = (1..=3)
        .map(|k| min_clustering(g, k, DEFAULT_BUDGET).map_err(err))
        .collect::<Result<Vec<_>, _>>()?;
    ensure(defects.windows(2).all(|w| w[0] >= w[1]), || {
        format!("min defect by k: {defects:?}")
    })?;
    ensure(clusters.windows(2).all(|w| w[0] >= w[1]), || {
        format!("min clustering by k: {clusters:?}")
    })?;
    Ok(())
}

fn criterion_13() -> Result<String, String> {
    let hosts = [
        (
            "K2",
            complete(2),
            RootedForestWitness {
                parent: vec![None, Some(0)],
            },
        ),
        (
            "P3",
            path(3),
            RootedForestWitness {
                parent: vec![None, Some(0), Some(1)],
            },
        ),
    ];
    let mut total = 0;
    for (name, h, forest) in hosts {
        ensure(h.is_bipartite(), || format!("{name} is not 2-colourable"))?;
        for d in 1..=2 {
            let amp = treedepth_amplification(&h, &forest, d, 1_000_000).map_err(err)?;
            let q = ColourabilityQuery::new(2, Mode::Defect(d)).map_err(err)?;
            let all = all_colourings(&amp.graph, q, 1 << 20, DEFAULT_BUDGET).map_err(err)?;
            for c in &all {
                let rep =
                    extract_proper_copy(&amp, c).map_err(|e| format!("{name}, d={d}: {e}"))?;
                let embedded = h.vertices().all(|v| amp.origin[rep[v]] == v)
                    && h.edges().all(|(u, v)| {
                        amp.graph.has_edge(rep[u], rep[v]) && c.colour(rep[u]) != c.colour(rep[v])
                    });
                ensure(embedded, || format!("{name}, d={d}: bad embedding {rep:?}"))?;
            }
            total += all.len();
        }
    }
    Ok(format!(
        "{total} colourings, each with a properly coloured copy"
    ))
}
