//! Degree-based recognition of NG-graphs, the graphs with
//! `χ(G) + χ(Ḡ) = n + 1`.
//!
//! For each candidate `k = 1..=n` the vertices are split by degree into
//! `A` (`deg = k-1`), `B` (`deg > k-1`) and `C` (`deg < k-1`). The graph is an
//! NG-graph with `χ(G) = k` exactly when
//!
//! 1. `A` is nonempty and induces a clique, an independent set or a 5-cycle,
//! 2. `B` induces a clique,
//! 3. `C` induces an independent set,
//! 4. every `A`-`B` pair is an edge,
//! 5. no `A`-`C` pair is an edge, and
//! 6. `k` equals `|A| + |B|`, `|B| + 1` or `|B| + 3` for the clique,
//!    independent and 5-cycle shapes respectively.
//!
//! Each candidate costs `O(n^2)`, so the whole scan is `O(n^3)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, InducedShape, VertexSet};
use crate::oracle::chromatic_number;

/// The three forms an NG-graph's `A` part can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NgType {
    /// `G[A]` is a clique.
    One = 1,
    /// `G[A]` is an independent set.
    Two = 2,
    /// `G[A]` is a 5-cycle.
    Three = 3,
}

/// A subset of `{1, 2, 3}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TypeSet(u8);

impl TypeSet {
    pub const EMPTY: TypeSet = TypeSet(0);

    pub fn insert(&mut self, t: NgType) {
        self.0 |= 1 << t as u8;
    }

    pub fn contains(self, t: NgType) -> bool {
        self.0 >> t as u8 & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = NgType> {
        [NgType::One, NgType::Two, NgType::Three]
            .into_iter()
            .filter(move |&t| self.contains(t))
    }

    pub fn numbers(self) -> Vec<u8> {
        self.iter().map(|t| t as u8).collect()
    }
}

impl FromIterator<NgType> for TypeSet {
    fn from_iter<I: IntoIterator<Item = NgType>>(iter: I) -> Self {
        let mut s = TypeSet::EMPTY;
        for t in iter {
            s.insert(t);
        }
        s
    }
}

impl fmt::Debug for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.numbers()).finish()
    }
}

impl Serialize for TypeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.numbers().serialize(s)
    }
}

/// Degree partition for a candidate chromatic number `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbcPartition {
    pub k: usize,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

pub fn abc_candidate(g: &Graph, k: usize) -> Result<AbcPartition> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::CandidateOutOfRange { k, n });
    }
    let mut p = AbcPartition {
        k,
        a: VertexSet::EMPTY,
        b: VertexSet::EMPTY,
        c: VertexSet::EMPTY,
    };
    for v in 0..n {
        match g.degree(v).cmp(&(k - 1)) {
            std::cmp::Ordering::Equal => p.a.insert(v),
            std::cmp::Ordering::Greater => p.b.insert(v),
            std::cmp::Ordering::Less => p.c.insert(v),
        }
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// (i) `A` nonempty and a clique, independent set or 5-cycle.
    AShape,
    /// (ii)
    BClique,
    /// (iii)
    CIndependent,
    /// (iv)
    AbComplete,
    /// (v)
    AcEmpty,
    /// (vi) the shape-specific count equals `k`.
    CountMatchesK,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::AShape,
        Condition::BClique,
        Condition::CIndependent,
        Condition::AbComplete,
        Condition::AcEmpty,
        Condition::CountMatchesK,
    ];
}

/// Why a condition failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    EmptyA,
    /// `G[A]` is none of the allowed shapes.
    UnrecognisedShape,
    /// A pair that should be adjacent and is not, or vice versa.
    Pair { u: usize, v: usize },
    /// Count for each shape `G[A]` satisfies, none of which equals `k`.
    Counts { k: usize, counts: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub shape: InducedShape,
    pub results: Vec<ConditionResult>,
    /// Types whose count in (vi) matched; empty unless everything passed.
    pub types: TypeSet,
}

impl ConditionReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, c: Condition) -> &ConditionResult {
        self.results
            .iter()
            .find(|r| r.condition == c)
            .expect("every condition is reported")
    }
}

fn outcome(condition: Condition, witness: Option<Witness>) -> ConditionResult {
    ConditionResult {
        condition,
        passed: witness.is_none(),
        witness,
    }
}

fn first_edge_within(g: &Graph, s: VertexSet) -> Option<Witness> {
    s.iter().find_map(|u| {
        g.neighbors(u)
            .intersection(s)
            .iter()
            .find(|&v| v > u)
            .map(|v| Witness::Pair { u, v })
    })
}

fn first_non_edge_within(g: &Graph, s: VertexSet) -> Option<Witness> {
    s.iter().find_map(|u| {
        s.difference(g.neighbors(u))
            .iter()
            .find(|&v| v > u)
            .map(|v| Witness::Pair { u, v })
    })
}

/// Evaluates conditions (i)-(vi) for one candidate partition.
///
/// (vi) is tested for every shape `G[A]` satisfies, so a single `A` vertex
/// (both a clique and an independent set) can yield types 1 and 2 at once.
pub fn check_ng_conditions(g: &Graph, p: &AbcPartition) -> ConditionReport {
    let shape = g.classify_induced(p.a);
    let mut results = Vec::with_capacity(6);

    let shape_witness = if p.a.is_empty() {
        Some(Witness::EmptyA)
    } else if shape.is_other() {
        Some(Witness::UnrecognisedShape)
    } else {
        None
    };
    results.push(outcome(Condition::AShape, shape_witness.clone()));
    results.push(outcome(Condition::BClique, first_non_edge_within(g, p.b)));
    results.push(outcome(Condition::CIndependent, first_edge_within(g, p.c)));
    results.push(outcome(
        Condition::AbComplete,
        g.missing_cross_edge(p.a, p.b).map(|(u, v)| Witness::Pair { u, v }),
    ));
    results.push(outcome(
        Condition::AcEmpty,
        g.cross_edge(p.a, p.c).map(|(u, v)| Witness::Pair { u, v }),
    ));

    let (a, b) = (p.a.len(), p.b.len());
    let mut matching = TypeSet::EMPTY;
    let mut counts = Vec::new();
    if shape_witness.is_none() {
        let shaped = [
            (shape.clique, NgType::One, a + b),
            (shape.independent, NgType::Two, b + 1),
            (shape.five_cycle, NgType::Three, b + 3),
        ];
        for (holds, t, count) in shaped {
            if holds {
                counts.push(count);
                if count == p.k {
                    matching.insert(t);
                }
            }
        }
    }
    let count_witness = if shape_witness.is_some() {
        Some(Witness::UnrecognisedShape)
    } else if matching.is_empty() {
        Some(Witness::Counts { k: p.k, counts })
    } else {
        None
    };
    results.push(outcome(Condition::CountMatchesK, count_witness));

    let all = results.iter().all(|r| r.passed);
    ConditionReport {
        shape,
        results,
        types: if all { matching } else { TypeSet::EMPTY },
    }
}

/// Result of running the recognizer on a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgClassification {
    pub is_ng: bool,
    /// `χ(G)`, when an NG-graph.
    pub k: Option<usize>,
    /// `χ(Ḡ) = n + 1 - k`, when an NG-graph.
    pub chi_complement: Option<usize>,
    /// The accepted degree partition, when an NG-graph.
    pub partition: Option<AbcPartition>,
    pub types: TypeSet,
}

impl NgClassification {
    fn not_ng() -> NgClassification {
        NgClassification {
            is_ng: false,
            k: None,
            chi_complement: None,
            partition: None,
            types: TypeSet::EMPTY,
        }
    }

    pub fn has_type(&self, t: NgType) -> bool {
        self.types.contains(t)
    }
}

/// Runs the candidate loop and returns on the first `k` that passes every
/// condition. Graphs on zero vertices are not NG-graphs.
pub fn recognize_ng(g: &Graph) -> NgClassification {
    for k in 1..=g.n() {
        let p = abc_candidate(g, k).expect("k in range");
        let report = check_ng_conditions(g, &p);
        if report.all_passed() {
            return NgClassification {
                is_ng: true,
                k: Some(k),
                chi_complement: Some(g.n() + 1 - k),
                partition: Some(p),
                types: report.types,
            };
        }
    }
    NgClassification::not_ng()
}

/// Every candidate `k` passing all six conditions (the recognizer stops at
/// the first).
pub fn passing_candidates(g: &Graph) -> Vec<usize> {
    (1..=g.n())
        .filter(|&k| {
            let p = abc_candidate(g, k).expect("k in range");
            check_ng_conditions(g, &p).all_passed()
        })
        .collect()
}

/// The definition evaluated directly: `χ(G) + χ(Ḡ) = n + 1`.
pub fn is_ng_oracle(g: &Graph) -> Result<bool> {
    Ok(chromatic_number(g)? + chromatic_number(&g.complement())? == g.n() + 1)
}
