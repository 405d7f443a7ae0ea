//! Named graph families and a builder for NG-graphs from their block form.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{recognize_ng, NgClassification};

/// `K_{parts[0], parts[1], ...}`; vertices are numbered part by part.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("complete multipartite graph needs at least one part".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidParameter("part sizes must be at least 1".into()));
    }
    let n: usize = parts.iter().sum();
    if n > Graph::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: Graph::MAX_VERTICES });
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    Graph::from_edges(n, edges.filter(|&(u, v)| part_of[u] != part_of[v]))
}

/// `K_t ∪ I_{t-1}`: vertices `0..t` form a clique, the other `t - 1` are isolated.
pub fn clique_plus_independent(t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    Graph::complete(t).disjoint_union(&Graph::empty(t - 1))
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Shape of the `A` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AShape {
    CliqueA,
    IndependentA,
    FiveCycleA,
}

/// Block description of an NG-graph: `A` of the given shape, a clique `B`
/// joined to all of `A`, an independent set `C` with no edges to `A`, and
/// `bc_edges[i][j]` saying whether the `i`-th vertex of `B` is adjacent to
/// the `j`-th vertex of `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgBlueprint {
    pub shape: AShape,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub bc_edges: Vec<Vec<bool>>,
}

impl NgBlueprint {
    /// A blueprint with no `B`-`C` edges.
    pub fn new(shape: AShape, a: usize, b: usize, c: usize) -> NgBlueprint {
        NgBlueprint {
            shape,
            a,
            b,
            c,
            bc_edges: vec![vec![false; c]; b],
        }
    }

    /// A blueprint whose `B`-`C` edges are independent fair coin flips from
    /// a ChaCha8 stream seeded with `seed`.
    pub fn random(shape: AShape, a: usize, b: usize, c: usize, seed: u64) -> NgBlueprint {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bc_edges = (0..b).map(|_| (0..c).map(|_| rng.gen_bool(0.5)).collect()).collect();
        NgBlueprint { shape, a, b, c, bc_edges }
    }

    pub fn n(&self) -> usize {
        self.a + self.b + self.c
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |why: String| Err(Error::InvalidBlueprint(why));
        if self.a == 0 {
            return fail("the A block must be nonempty".into());
        }
        if self.shape == AShape::FiveCycleA && self.a != 5 {
            return fail(format!("a five-cycle A block has 5 vertices, not {}", self.a));
        }
        if self.bc_edges.len() != self.b {
            return fail(format!("bc_edges has {} rows for b = {}", self.bc_edges.len(), self.b));
        }
        if let Some(row) = self.bc_edges.iter().find(|row| row.len() != self.c) {
            return fail(format!("bc_edges row has {} entries for c = {}", row.len(), self.c));
        }
        if self.n() > Graph::MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n(), max: Graph::MAX_VERTICES });
        }
        Ok(())
    }

    /// Vertex blocks of the built graph: `A = 0..a`, `B = a..a+b`, `C` after.
    pub fn blocks(&self) -> (VertexSet, VertexSet, VertexSet) {
        let a = VertexSet::full(self.a);
        let ab = VertexSet::full(self.a + self.b);
        (a, ab.difference(a), VertexSet::full(self.n()).difference(ab))
    }
}

/// An assembled NG-graph with the classification the recognizer gives it.
/// The recognized partition is degree-determined and can differ from the
/// blueprint blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltNg {
    pub graph: Graph,
    pub classification: NgClassification,
}

pub fn build_ng(bp: &NgBlueprint) -> Result<BuiltNg> {
    bp.validate()?;
    let mut g = Graph::empty(bp.n());
    let (a, b, _) = bp.blocks();
    match bp.shape {
        AShape::CliqueA => add_clique(&mut g, a),
        AShape::IndependentA => {}
        AShape::FiveCycleA => {
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
            }
        }
    }
    add_clique(&mut g, b);
    for u in a {
        for v in b {
            g.add_edge(u, v);
        }
    }
    let c0 = bp.a + bp.b;
    for (i, row) in bp.bc_edges.iter().enumerate() {
        for (j, _) in row.iter().enumerate().filter(|(_, &e)| e) {
            g.add_edge(bp.a + i, c0 + j);
        }
    }
    let classification = recognize_ng(&g);
    Ok(BuiltNg { graph: g, classification })
}

fn add_clique(g: &mut Graph, s: VertexSet) {
    for u in s {
        for v in s.iter().filter(|&v| v > u) {
            g.add_edge(u, v);
        }
    }
}

/// Every blueprint of the given shape on exactly `n` vertices, over all
/// `B`-`C` edge patterns. Labeled, so isomorphic outputs repeat.
pub fn all_blueprints(shape: AShape, n: usize) -> impl Iterator<Item = NgBlueprint> {
    let a_sizes: Vec<usize> = match shape {
        AShape::FiveCycleA if n >= 5 => vec![5],
        AShape::FiveCycleA => vec![],
        _ => (1..=n).collect(),
    };
    a_sizes.into_iter().flat_map(move |a| {
        (0..=n - a).flat_map(move |b| {
            let c = n - a - b;
            let pairs = b * c;
            (0..1u64 << pairs).map(move |mask| NgBlueprint {
                shape,
                a,
                b,
                c,
                bc_edges: (0..b)
                    .map(|i| (0..c).map(|j| mask >> (i * c + j) & 1 == 1).collect())
                    .collect(),
            })
        })
    })
}

/// The 11-vertex graph with `A = {0}`, `B = K_5` on `1..=5`, and five
/// pendant vertices `6..=10`, vertex `5 + i` hanging off `B` vertex `i`.
pub fn pendant_arms() -> Graph {
    let bc_edges = (0..5).map(|i| (0..5).map(|j| i == j).collect()).collect();
    let bp = NgBlueprint {
        shape: AShape::CliqueA,
        a: 1,
        b: 5,
        c: 5,
        bc_edges,
    };
    build_ng(&bp).expect("valid blueprint").graph
}

/// Named fixtures used throughout the tests and the command-line tables.
pub fn fixture_catalog() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Result<Graph>| out.push((name, g.expect("fixture parameters are valid")));
    for n in 1..=6 {
        push(format!("K{n}"), Ok(Graph::complete(n)));
    }
    push("K2,2".into(), complete_multipartite(&[2, 2]));
    for t in 2..=4 {
        push(format!("K{t}+I{}", t - 1), clique_plus_independent(t));
    }
    push("K3,1,1".into(), complete_multipartite(&[3, 1, 1]));
    push("K3,2".into(), complete_multipartite(&[3, 2]));
    push("C5".into(), cycle(5));
    push("C7".into(), cycle(7));
    push("pendant-arms".into(), Ok(pendant_arms()));
    out
}

/// Partitions of `n` into parts `>= 1`, non-increasing.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}
