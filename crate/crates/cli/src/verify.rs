//! Exhaustive invariant suites. Each suite runs a set of checks over a graph
//! family and collects the claims that failed.

use std::time::Instant;

use anyhow::{bail, Result};
use nglab_core::enumerate::{graph_from_mask, labeled_graph_count, random_labeled_graph};
use nglab_core::generators::{build_ng, complete_multipartite, integer_partitions, AShape, NgBlueprint};
use nglab_core::graph::VertexSet;
use nglab_core::graph6::{emit_graph6, parse_graph6};
use nglab_core::ngd::{
    ablm_partition, chi_d_type1, compute_x, compute_y, decide_ngd_with_limit, distinguishing_number_formula,
    gamma, ngd_oracle_values, x_oracle, y_oracle,
};
use nglab_core::oracle::{
    automorphisms, chromatic_number, coloring_isolating, distinguishing_chromatic_number,
    distinguishing_colorings, distinguishing_number, is_color_critical, restricted_automorphisms,
};
use nglab_core::recognition::{is_ng_oracle, passing_candidates, recognize_ng, NgType};
use nglab_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::class_representatives;

/// Counterexamples kept per suite; the failure count is always exact.
const MAX_KEPT: usize = 25;

/// Largest `n` for the full suite; the recognizer-only run goes one higher.
pub const MAX_FULL_N: usize = 6;
pub const MAX_RECOGNIZER_N: usize = 7;

/// Known numbers of isomorphism classes on `n` vertices.
const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub claim: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Observations that are not failures.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub max_n: usize,
    pub recognizer_only: bool,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
    pub seconds: f64,
}

/// Outcome of checking one graph: failed claims and informational notes.
#[derive(Default)]
pub struct Findings {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Findings {
    fn claim(&mut self, holds: bool, what: impl Into<String>) {
        if !holds {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

type Check = dyn Fn(&Graph, &mut Findings) -> nglab_core::Result<()> + Sync;

/// Runs `check` over `graphs` in parallel. An error from the check counts as
/// a failure.
pub fn run_suite(name: &str, graphs: impl IntoParallelIterator<Item = Graph>, check: &Check) -> SuiteResult {
    let start = Instant::now();
    let per_graph: Vec<(String, Findings)> = graphs
        .into_par_iter()
        .map(|g| {
            let mut f = Findings::default();
            if let Err(e) = check(&g, &mut f) {
                f.failures.push(format!("error: {e}"));
            }
            (emit_graph6(&g), f)
        })
        .collect();
    let mut r = SuiteResult {
        name: name.to_string(),
        checked: per_graph.len() as u64,
        passed: 0,
        failed: 0,
        counterexamples: Vec::new(),
        notes: Vec::new(),
        seconds: 0.0,
    };
    let mut notes: std::collections::BTreeMap<String, usize> = Default::default();
    for (g6, f) in per_graph {
        if f.failures.is_empty() {
            r.passed += 1;
        } else {
            r.failed += 1;
            for claim in f.failures {
                if r.counterexamples.len() < MAX_KEPT {
                    r.counterexamples.push(Counterexample { graph6: g6.clone(), claim });
                }
            }
        }
        for n in f.notes {
            *notes.entry(n).or_default() += 1;
        }
    }
    r.notes = notes.into_iter().map(|(n, count)| format!("{n} (count {count})")).collect();
    r.seconds = start.elapsed().as_secs_f64();
    r
}

/// Every labeled graph on `lo..=hi` vertices.
pub fn labeled_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| {
            let count = labeled_graph_count(n).expect("n within mask range");
            (0..count).map(move |m| graph_from_mask(n, m).expect("mask within range"))
        })
        .collect()
}

/// One representative per isomorphism class on `lo..=hi` vertices.
pub fn classes(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| class_representatives(n).expect("n within enumeration range"))
        .collect()
}

/// `count` labeled graphs on `n` vertices, each edge present with
/// probability 1/2, from a ChaCha8 stream seeded with `seed`.
pub fn sample_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_labeled_graph(n, &mut rng).expect("n within range"))
        .collect()
}

pub fn check_basics(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let h = g.complement();
    f.claim(h.complement() == *g, "complement is an involution");
    f.claim(
        (0..g.n()).all(|v| g.degree(v) + h.degree(v) + 1 == g.n()),
        "deg_G(v) + deg_complement(v) = n - 1",
    );
    f.claim(parse_graph6(&emit_graph6(g))? == *g, "graph6 round trip");
    Ok(())
}

/// Recognizer against the chromatic-number oracle, and uniqueness of the
/// accepted candidate.
pub fn check_recognizer(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let cls = recognize_ng(g);
    f.claim(cls.is_ng == is_ng_oracle(g)?, "recognizer membership = oracle membership");
    if cls.is_ng {
        f.claim(cls.k == Some(chromatic_number(g)?), "recognized k = chi(G)");
        let passing = passing_candidates(g);
        f.claim(passing.len() == 1, format!("exactly one k passes, got {passing:?}"));
    }
    Ok(())
}

pub fn check_bounds(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let n = g.n();
    let h = g.complement();
    let (c, cc) = (chromatic_number(g)?, chromatic_number(&h)?);
    f.claim(c + cc <= n + 1, "chi + chi_bar <= n + 1");
    f.claim((c + cc) * (c + cc) >= 4 * n, "chi + chi_bar >= 2 sqrt(n)");
    f.claim(c * cc >= n, "chi * chi_bar >= n");
    f.claim(4 * c * cc <= (n + 1) * (n + 1), "chi * chi_bar <= ((n + 1) / 2)^2");

    let auts = automorphisms(g)?;
    let auts_h = automorphisms(&h)?;
    f.claim(auts == auts_h, "Aut(G) = Aut(complement)");
    let d = distinguishing_number(g, &auts)?;
    f.claim(d == distinguishing_number(&h, &auts_h)?, "D(G) = D(complement)");
    let (xd, xdc) = (distinguishing_chromatic_number(g, &auts)?, distinguishing_chromatic_number(&h, &auts)?);
    f.claim(xd + xdc <= n + d, "chi_D + chi_D_bar <= n + D");
    f.claim(4 * xd * xdc <= (n + d) * (n + d), "chi_D * chi_D_bar <= ((n + D) / 2)^2");
    f.claim((xd + xdc) * (xd + xdc) >= 4 * n, "chi_D + chi_D_bar >= 2 sqrt(n)");
    f.claim(xd * xdc >= n, "chi_D * chi_D_bar >= n");
    f.claim(c <= xd && cc <= xdc, "chi <= chi_D");
    if d == 1 {
        f.claim(c == xd, "D = 1 implies chi = chi_D");
    }

    let complete = g.edge_count() == n * n.saturating_sub(1) / 2;
    let odd_cycle = n >= 3 && n % 2 == 1 && g.is_connected() && g.degrees().iter().all(|&d| d == 2);
    if n > 0 && g.is_connected() && !complete && !odd_cycle {
        f.claim(c <= g.max_degree(), "Brooks: chi <= max degree");
    }
    Ok(())
}

/// The bound for `Γ`-distinguishing colorings, over every fixed set `S`.
pub fn check_restricted_bound(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let n = g.n();
    let h = g.complement();
    for bits in 0..1u64 << n {
        let gamma = restricted_automorphisms(g, VertexSet::from_bits(bits))?;
        let lhs = distinguishing_chromatic_number(g, &gamma)? + distinguishing_chromatic_number(&h, &gamma)?;
        let rhs = n + distinguishing_number(g, &gamma)?;
        f.claim(lhs <= rhs, format!("chi_D^G + chi_D^G(bar) <= n + D^G for S = {bits:#b}"));
    }
    Ok(())
}

/// Complement closure, the critical-vertex and isolating-coloring lemmas,
/// and the color-class claim for NGD-graphs.
pub fn check_ng_structure(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let cls = recognize_ng(g);
    let n = g.n();
    if cls.is_ng {
        let h = g.complement();
        let ch = recognize_ng(&h);
        f.claim(ch.is_ng, "complement of an NG-graph is NG");
        f.claim(
            cls.has_type(NgType::One) == ch.has_type(NgType::Two)
                && cls.has_type(NgType::Two) == ch.has_type(NgType::One)
                && cls.has_type(NgType::Three) == ch.has_type(NgType::Three),
            "Type 1 <=> complement Type 2, Type 3 <=> complement Type 3",
        );
        if let (Some(p), Some(q)) = (cls.partition, ch.partition) {
            f.claim(p.a == q.a, "A_G = A_complement");
        }
        let k = cls.k.expect("NG-graphs carry k");
        for x in (0..n).filter(|&x| g.degree(x) + 1 > k) {
            f.claim(is_color_critical(g, x)?, format!("vertex {x} of degree > k - 1 is critical in G"));
            f.claim(!is_color_critical(&h, x)?, format!("vertex {x} of degree > k - 1 is not critical in the complement"));
        }
        if cls.has_type(NgType::One) {
            let p = cls.partition.expect("NG-graphs carry a partition");
            for x in p.a.union(p.b) {
                let ok = coloring_isolating(g, x, k)?.is_some_and(|c| c.is_proper(g) && c.class(c.colors()[x]).len() == 1);
                f.claim(ok, format!("some proper k-coloring gives {x} a color of its own"));
            }
        }
    }

    if n > 0 {
        let o = ngd_oracle_values(g)?;
        if o.is_ngd(n) {
            let auts = automorphisms(g)?;
            for c in distinguishing_colorings(g, &auts, o.d, false)? {
                for color in 1..=o.d {
                    let class = g.induced_subgraph(c.class(color))?;
                    f.claim(
                        recognize_ng(&class).is_ng,
                        format!("color class {color} of {:?} induces an NG-graph", c.colors()),
                    );
                }
            }
        }
    }
    Ok(())
}

/// The structural NGD decision against the definition.
pub fn check_ngd_decision(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    if g.n() == 0 {
        return Ok(());
    }
    let rep = decide_ngd_with_limit(g, usize::MAX)?;
    let o = ngd_oracle_values(g)?;
    f.claim(rep.is_ngd == o.is_ngd(g.n()), format!("decide_ngd ({:?}) = definition", rep.method));
    if let Some(t2) = rep.type2 {
        f.claim(t2.holds() == rep.is_ngd, "Type 2 criterion agrees with the decision");
        f.note(match (t2.d_equals_a, t2.d_equals_b_without_c) {
            (true, true) => "type 2: D = |A| and D = #B without C-neighbours",
            (true, false) => "type 2: only D = |A|",
            (false, true) => "type 2: only D = #B without C-neighbours",
            (false, false) => "type 2: neither equality",
        });
    }
    Ok(())
}

/// The closed forms for Type 1 NG-graphs against the oracles. Graphs that are
/// not Type 1 pass vacuously.
pub fn check_type_one(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let cls = recognize_ng(g);
    if !cls.has_type(NgType::One) {
        return Ok(());
    }
    let p = ablm_partition(g, &cls)?;
    let s = p.sizes();
    let (x, y) = (compute_x(g, &p)?, compute_y(g, &p)?);
    f.claim(x == x_oracle(g, &p)?, "x = chi_D^Gamma(G[B u M]) - b");
    f.claim(y == y_oracle(g, &p)?, "y = chi_D^Gamma(complement[B u M]) - m");

    let o = ngd_oracle_values(g)?;
    let d = distinguishing_number_formula(g, &p)?;
    f.claim(d == o.d, format!("D formula {d} = oracle {}", o.d));
    let pair = chi_d_type1(&p, x, y);
    f.claim(
        pair == (o.chi_d, o.chi_d_complement),
        format!("chi_D pair formula {pair:?} = oracle {:?}", (o.chi_d, o.chi_d_complement)),
    );
    f.claim(x + y <= o.d, "x + y <= D");
    f.claim(x < o.d, "x < D");
    if s.l == 0 {
        f.claim(y < o.d, "l = 0 implies y < D");
    }
    f.claim(o.d >= s.a.max(s.l), "D >= max(a, l)");

    let fact = |k: usize| (1..=k).product::<usize>();
    let auts = automorphisms(g)?;
    let gam = gamma(g, &p)?;
    f.claim(auts.order() == fact(s.a) * fact(s.l) * gam.order(), "|Aut| = a! l! |Gamma|");
    let decomposes = auts.iter().all(|sigma| {
        let blocks_kept = [p.a, p.l, p.b, p.m]
            .iter()
            .all(|part| part.iter().all(|v| part.contains(sigma[v] as usize)));
        let mut tau = sigma.to_vec();
        for v in p.fixed_part() {
            tau[v] = v as u8;
        }
        blocks_kept && gam.contains(&tau)
    });
    f.claim(decomposes, "every automorphism = (perm of A) x (perm of L) x (element of Gamma)");
    Ok(())
}

/// Complete multipartite graphs: `χ_D = n`, `χ_D(Ḡ) = D(Ḡ)`, and NGD.
pub fn check_multipartite(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    let h = g.complement();
    let auts = automorphisms(g)?;
    let o = ngd_oracle_values(g)?;
    f.claim(o.chi_d == g.n(), "chi_D = n");
    f.claim(o.chi_d_complement == distinguishing_number(&h, &auts)?, "chi_D(complement) = D(complement)");
    f.claim(o.is_ngd(g.n()), "NGD-graph");
    Ok(())
}

pub fn multipartite_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(integer_partitions)
        .map(|parts| complete_multipartite(&parts).expect("valid parts"))
        .collect()
}

/// Seeded random blueprints of every shape with `n <= max_n`.
pub fn blueprint_graphs(max_n: usize, per_shape: usize, seed: u64) -> Vec<Graph> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for shape in [AShape::CliqueA, AShape::IndependentA, AShape::FiveCycleA] {
        let min_a = if shape == AShape::FiveCycleA { 5 } else { 1 };
        if max_n < min_a {
            continue;
        }
        for _ in 0..per_shape {
            let a = if shape == AShape::FiveCycleA { 5 } else { rng.gen_range(1..=max_n) };
            let b = rng.gen_range(0..=max_n - a);
            let c = rng.gen_range(0..=max_n - a - b);
            let bp = NgBlueprint::random(shape, a, b, c, rng.gen());
            out.push(build_ng(&bp).expect("valid blueprint").graph);
        }
    }
    out
}

pub fn check_blueprint(g: &Graph, f: &mut Findings) -> nglab_core::Result<()> {
    f.claim(recognize_ng(g).is_ng, "builder output is recognized as NG");
    f.claim(is_ng_oracle(g)?, "builder output is NG by the oracle");
    Ok(())
}

/// Class counts, and pairwise non-isomorphism by permutation search.
pub fn enumeration_suite(max_n: usize) -> SuiteResult {
    let start = Instant::now();
    let mut r = SuiteResult {
        name: "enumeration".into(),
        checked: 0,
        passed: 0,
        failed: 0,
        counterexamples: Vec::new(),
        notes: Vec::new(),
        seconds: 0.0,
    };
    for (n, &expected) in CLASS_COUNTS.iter().enumerate().take(max_n + 1) {
        let reps = class_representatives(n).expect("n within enumeration range");
        r.checked += 1;
        let mut bad = Vec::new();
        if reps.len() != expected {
            bad.push(format!("{} classes on {n} vertices, expected {expected}", reps.len()));
        }
        if n <= 6 {
            let perms = permutations(n);
            for (i, g) in reps.iter().enumerate() {
                for h in &reps[..i] {
                    if g.edge_count() == h.edge_count() && perms.iter().any(|p| g.permuted(p) == *h) {
                        bad.push(format!("{} and {} are isomorphic", emit_graph6(g), emit_graph6(h)));
                    }
                }
            }
        }
        if bad.is_empty() {
            r.passed += 1;
        } else {
            r.failed += 1;
            r.counterexamples.extend(bad.into_iter().map(|claim| Counterexample { graph6: format!("n={n}"), claim }));
        }
    }
    r.seconds = start.elapsed().as_secs_f64();
    r
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Labeled graphs for the recognizer-only run at `n = 7`: a fixed-seed sample.
pub const RECOGNIZER_SAMPLE: usize = 100_000;
pub const RECOGNIZER_SEED: u64 = 0x006e_676c_6162;

/// Runs every suite up to `max_n` (or the recognizer suite alone).
///
/// The full suite needs `max_n <= 6`; recognizer-only mode accepts `max_n = 7`,
/// where it checks all labeled graphs up to 6 vertices plus a fixed-seed
/// sample on 7.
pub fn cmd_verify(max_n: usize, recognizer_only: bool) -> Result<VerificationReport> {
    let start = Instant::now();
    let limit = if recognizer_only { MAX_RECOGNIZER_N } else { MAX_FULL_N };
    if max_n > limit {
        bail!("max_n = {max_n} exceeds {limit} for this mode");
    }
    let mut suites = Vec::new();
    let exhaustive_n = max_n.min(MAX_FULL_N);
    let mut recognizer_graphs = labeled_graphs(0, exhaustive_n);
    if max_n > MAX_FULL_N {
        recognizer_graphs.extend(sample_graphs(max_n, RECOGNIZER_SAMPLE, RECOGNIZER_SEED));
    }
    suites.push(run_suite("recognizer vs chromatic oracle", recognizer_graphs, &check_recognizer));
    if !recognizer_only {
        suites.push(run_suite("graph basics", labeled_graphs(0, max_n), &check_basics));
        suites.push(enumeration_suite(max_n));
        suites.push(run_suite("chromatic bounds", labeled_graphs(0, max_n), &check_bounds));
        suites.push(run_suite("restricted group bound", classes(0, max_n.min(5)), &check_restricted_bound));
        suites.push(run_suite("NG structure", classes(1, max_n), &check_ng_structure));
        suites.push(run_suite("NGD decision", classes(1, max_n), &check_ngd_decision));
        suites.push(run_suite("Type 1 closed forms", classes(1, max_n), &check_type_one));
        suites.push(run_suite("complete multipartite", multipartite_graphs(max_n), &check_multipartite));
        suites.push(run_suite("NG builder", blueprint_graphs(max_n, 50, 7), &check_blueprint));
    }
    Ok(VerificationReport {
        max_n,
        recognizer_only,
        passed: suites.iter().all(SuiteResult::ok),
        suites,
        seconds: start.elapsed().as_secs_f64(),
    })
}
