//! Deciding `χ_D(G) + χ_D(Ḡ) = n + D(G)` for NG-graphs.
//!
//! A Type 1 NG-graph (clique `A`) has its `C` part split further into `L`,
//! the vertices adjacent to all of `B`, and `M`, the rest. With
//! `a, b, ℓ, m` the part sizes:
//!
//! * `χ_D(G) = b + max{a, ℓ, x}` and `χ_D(Ḡ) = m + max{a + ℓ, y}`, where `x`
//!   and `y` count the colors needed beyond `b` (resp. `m`) to properly and
//!   distinguishingly color `G[B ∪ M]` (resp. `Ḡ[B ∪ M]`) under `Γ`, the
//!   automorphisms fixing `A ∪ L` pointwise;
//! * `D(G) = max{a, ℓ, D^Γ(G[B ∪ M])}`;
//! * `G` is an NGD-graph iff `D(G) = max{a, ℓ}`.
//!
//! Type 2 graphs are handled through their Type 1 complements, Type 3 graphs
//! are never NGD-graphs, and anything else falls back to the oracles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{
    automorphisms, distinguishing_chromatic_number, distinguishing_number,
    restricted_automorphisms, AutomorphismSet,
};
use crate::recognition::{recognize_ng, NgClassification, NgType};

/// Default size guard for the oracle fallback on non-NG graphs.
pub const DEFAULT_MAX_ORACLE_N: usize = 8;

/// Refinement of a Type 1 NG-graph's degree partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AblmPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    /// Vertices of `C` adjacent to every vertex of `B`.
    pub l: VertexSet,
    /// The remaining vertices of `C`.
    pub m: VertexSet,
}

/// `(a, b, ℓ, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AblmSizes {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub m: usize,
}

impl AblmPartition {
    pub fn sizes(&self) -> AblmSizes {
        AblmSizes {
            a: self.a.len(),
            b: self.b.len(),
            l: self.l.len(),
            m: self.m.len(),
        }
    }

    /// `A ∪ L`, the vertices `Γ` fixes.
    pub fn fixed_part(&self) -> VertexSet {
        self.a.union(self.l)
    }

    /// `B ∪ M`, where `Γ` acts.
    pub fn moving_part(&self) -> VertexSet {
        self.b.union(self.m)
    }

    /// Checks the structure the closed forms rely on: the four parts cover
    /// `V(G)` disjointly, `A ∪ B` is a clique joined completely, `L ∪ M` is
    /// independent with no edges to `A`, `L` is joined to all of `B`, and `A`
    /// is nonempty.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let parts = [self.a, self.b, self.l, self.m];
        let union = parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc.union(p));
        let total: usize = parts.iter().map(|p| p.len()).sum();
        let fail = |why: &str| Err(Error::InvalidParameter(format!("ABLM partition: {why}")));
        if union != g.vertices() || total != g.n() {
            return fail("parts do not partition the vertex set");
        }
        if self.a.is_empty() {
            return fail("A is empty");
        }
        let c = self.l.union(self.m);
        if !g.is_clique(self.a.union(self.b)) {
            return fail("A ∪ B is not a clique");
        }
        if !g.is_independent(c) || g.cross_edge(self.a, c).is_some() {
            return fail("C is not independent of itself and of A");
        }
        if g.missing_cross_edge(self.l, self.b).is_some() {
            return fail("some L vertex misses a B vertex");
        }
        if self.m.iter().any(|v| self.b.is_subset(g.neighbors(v))) {
            return fail("some M vertex is adjacent to all of B");
        }
        Ok(())
    }
}

/// The `A, B, L, M` split of a Type 1 NG-graph. For graphs that are only
/// Type 2, apply this to the complement instead.
pub fn ablm_partition(g: &Graph, cls: &NgClassification) -> Result<AblmPartition> {
    let p = match (&cls.partition, cls.has_type(NgType::One)) {
        (Some(p), true) => *p,
        _ => return Err(Error::NotTypeOne),
    };
    let mut l = VertexSet::EMPTY;
    for v in p.c {
        if p.b.is_subset(g.neighbors(v)) {
            l.insert(v);
        }
    }
    Ok(AblmPartition {
        a: p.a,
        b: p.b,
        l,
        m: p.c.difference(l),
    })
}

/// Colors needed beyond the `|clique_side|` forced ones so that each class
/// of `free_side` vertices with identical neighbourhoods gets distinct
/// colors avoiding its neighbours: `max(0, max_T |T| - (|clique_side| - |S_T|))`
/// with `S_T` the clique-side neighbours shared by the class.
fn extra_colors(g: &Graph, clique_side: VertexSet, free_side: VertexSet) -> usize {
    let mut remaining = free_side;
    let mut best = 0usize;
    while let Some(u) = remaining.first() {
        let nbhd = g.neighbors(u);
        let class: VertexSet = remaining.iter().filter(|&v| g.neighbors(v) == nbhd).collect();
        remaining = remaining.difference(class);
        let available = clique_side.len() - nbhd.intersection(clique_side).len();
        best = best.max(class.len().saturating_sub(available));
    }
    best
}

/// `x`: extra colors beyond `b` for `M` in a proper `Γ`-distinguishing
/// coloring of `G[B ∪ M]`.
pub fn compute_x(g: &Graph, p: &AblmPartition) -> Result<usize> {
    p.validate(g)?;
    Ok(extra_colors(g, p.b, p.m))
}

/// `y`: extra colors beyond `m` for `B` in a proper `Γ`-distinguishing
/// coloring of `Ḡ[B ∪ M]`. In the complement `M` is the clique and `B` the
/// independent side, so this is `x`'s count with the roles swapped.
pub fn compute_y(g: &Graph, p: &AblmPartition) -> Result<usize> {
    p.validate(g)?;
    Ok(extra_colors(&g.complement(), p.m, p.b))
}

/// `(χ_D(G), χ_D(Ḡ)) = (b + max{a, ℓ, x}, m + max{a + ℓ, y})`.
pub fn chi_d_type1(p: &AblmPartition, x: usize, y: usize) -> (usize, usize) {
    let s = p.sizes();
    (s.b + s.a.max(s.l).max(x), s.m + (s.a + s.l).max(y))
}

/// `Γ`: automorphisms of `g` fixing `A ∪ L` pointwise.
pub fn gamma(g: &Graph, p: &AblmPartition) -> Result<AutomorphismSet> {
    restricted_automorphisms(g, p.fixed_part())
}

/// `Γ` acting on `B ∪ M`, relabelled to match `G[B ∪ M]`.
pub fn gamma_on_moving_part(g: &Graph, p: &AblmPartition) -> Result<AutomorphismSet> {
    gamma(g, p)?.restrict_to(p.moving_part())
}

/// `D(G) = max{a, ℓ, D^Γ(G[B ∪ M])}`.
pub fn distinguishing_number_formula(g: &Graph, p: &AblmPartition) -> Result<usize> {
    p.validate(g)?;
    let s = p.sizes();
    let sub = g.induced_subgraph(p.moving_part())?;
    let restricted = gamma_on_moving_part(g, p)?;
    let d_gamma = distinguishing_number(&sub, &restricted)?;
    Ok(s.a.max(s.l).max(d_gamma))
}

/// `χ_D^Γ(G[B ∪ M]) - b`, the definition of `x` evaluated by search.
pub fn x_oracle(g: &Graph, p: &AblmPartition) -> Result<usize> {
    let sub = g.induced_subgraph(p.moving_part())?;
    let chi = distinguishing_chromatic_number(&sub, &gamma_on_moving_part(g, p)?)?;
    Ok(chi - p.b.len())
}

/// `χ_D^Γ(Ḡ[B ∪ M]) - m`, the definition of `y` evaluated by search.
pub fn y_oracle(g: &Graph, p: &AblmPartition) -> Result<usize> {
    let sub = g.induced_subgraph(p.moving_part())?.complement();
    let chi = distinguishing_chromatic_number(&sub, &gamma_on_moving_part(g, p)?)?;
    Ok(chi - p.m.len())
}

/// How [`decide_ngd`] reached its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NgdMethod {
    #[serde(rename = "type1-closed-form")]
    Type1ClosedForm,
    #[serde(rename = "type2-closed-form")]
    Type2ClosedForm,
    #[serde(rename = "type3-theorem")]
    Type3Theorem,
    #[serde(rename = "oracle")]
    Oracle,
}

/// Parameters of the Type 1 graph the closed form was evaluated on (the
/// graph itself, or its complement on the Type 2 path).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NgdParams {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub m: usize,
    pub x: usize,
    pub y: usize,
}

/// Which equalities of the Type 2 criterion hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Type2Criterion {
    /// `|A_G|`.
    pub a: usize,
    /// Vertices of `B_G` with no neighbour in `C_G`.
    pub b_without_c: usize,
    pub d_equals_a: bool,
    pub d_equals_b_without_c: bool,
}

impl Type2Criterion {
    pub fn holds(&self) -> bool {
        self.d_equals_a || self.d_equals_b_without_c
    }
}

/// Evaluates the Type 2 criterion on `g` directly, given `D(G)`.
pub fn type2_criterion(g: &Graph, cls: &NgClassification, d: usize) -> Option<Type2Criterion> {
    if !cls.has_type(NgType::Two) {
        return None;
    }
    let p = cls.partition?;
    let b_without_c = p
        .b
        .iter()
        .filter(|&v| g.neighbors(v).intersection(p.c).is_empty())
        .count();
    Some(Type2Criterion {
        a: p.a.len(),
        b_without_c,
        d_equals_a: d == p.a.len(),
        d_equals_b_without_c: d == b_without_c,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgdReport {
    pub is_ngd: bool,
    pub method: NgdMethod,
    pub classification: NgClassification,
    pub params: Option<NgdParams>,
    /// `D(G)`; absent on the Type 3 path, which does not need it.
    pub d: Option<usize>,
    pub chi_d: Option<usize>,
    pub chi_d_complement: Option<usize>,
    /// Set for every Type 2 graph, including `|A| = 1` graphs decided on the
    /// Type 1 path.
    pub type2: Option<Type2Criterion>,
}

struct TypeOneEvaluation {
    params: NgdParams,
    d: usize,
    chi_d: (usize, usize),
}

fn evaluate_type_one(g: &Graph, cls: &NgClassification) -> Result<TypeOneEvaluation> {
    let p = ablm_partition(g, cls)?;
    let x = compute_x(g, &p)?;
    let y = compute_y(g, &p)?;
    let d = distinguishing_number_formula(g, &p)?;
    let s = p.sizes();
    Ok(TypeOneEvaluation {
        params: NgdParams {
            a: s.a,
            b: s.b,
            l: s.l,
            m: s.m,
            x,
            y,
        },
        d,
        chi_d: chi_d_type1(&p, x, y),
    })
}

/// [`decide_ngd_with_limit`] with the default oracle guard.
pub fn decide_ngd(g: &Graph) -> Result<NgdReport> {
    decide_ngd_with_limit(g, DEFAULT_MAX_ORACLE_N)
}

/// Decides NGD membership.
///
/// * Type 3 (and neither 1 nor 2): never NGD.
/// * Type 1 (including `|A| = 1`, which is also Type 2): NGD iff
///   `D(G) = max{a, ℓ}`, with `D(G)` from the `Γ` decomposition.
/// * Type 2 only: NGD iff `D(G) = |A_G|` or `D(G)` equals the number of `B_G`
///   vertices with no `C_G` neighbours, via the Type 1 complement.
/// * Not NG: `χ_D(G) + χ_D(Ḡ) = n + D(G)` by exhaustive search, allowed only
///   for `n <= max_oracle_n`.
pub fn decide_ngd_with_limit(g: &Graph, max_oracle_n: usize) -> Result<NgdReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("NGD membership needs n >= 1".into()));
    }
    let cls = recognize_ng(g);

    if cls.has_type(NgType::One) {
        let e = evaluate_type_one(g, &cls)?;
        let is_ngd = e.d == e.params.a.max(e.params.l);
        // |A| = 1 graphs are Type 2 as well; the criterion is recorded so
        // callers can confirm both rules agree
        let type2 = type2_criterion(g, &cls, e.d);
        return Ok(NgdReport {
            is_ngd,
            method: NgdMethod::Type1ClosedForm,
            classification: cls,
            params: Some(e.params),
            d: Some(e.d),
            chi_d: Some(e.chi_d.0),
            chi_d_complement: Some(e.chi_d.1),
            type2,
        });
    }

    if cls.has_type(NgType::Two) {
        let h = g.complement();
        let cls_h = recognize_ng(&h);
        let e = evaluate_type_one(&h, &cls_h)?;
        let criterion = type2_criterion(g, &cls, e.d).expect("Type 2 classification");
        return Ok(NgdReport {
            is_ngd: criterion.holds(),
            method: NgdMethod::Type2ClosedForm,
            classification: cls,
            params: Some(e.params),
            d: Some(e.d),
            chi_d: Some(e.chi_d.1),
            chi_d_complement: Some(e.chi_d.0),
            type2: Some(criterion),
        });
    }

    if cls.has_type(NgType::Three) {
        return Ok(NgdReport {
            is_ngd: false,
            method: NgdMethod::Type3Theorem,
            classification: cls,
            params: None,
            d: None,
            chi_d: None,
            chi_d_complement: None,
            type2: None,
        });
    }

    if n > max_oracle_n {
        return Err(Error::GuardExceeded {
            operation: "NGD oracle fallback",
            n,
            max: max_oracle_n,
        });
    }
    let o = ngd_oracle_values(g)?;
    Ok(NgdReport {
        is_ngd: o.is_ngd(n),
        method: NgdMethod::Oracle,
        classification: cls,
        params: None,
        d: Some(o.d),
        chi_d: Some(o.chi_d),
        chi_d_complement: Some(o.chi_d_complement),
        type2: None,
    })
}

/// `D(G)`, `χ_D(G)` and `χ_D(Ḡ)` by exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NgdOracleValues {
    pub d: usize,
    pub chi_d: usize,
    pub chi_d_complement: usize,
}

impl NgdOracleValues {
    pub fn is_ngd(&self, n: usize) -> bool {
        self.chi_d + self.chi_d_complement == n + self.d
    }
}

pub fn ngd_oracle_values(g: &Graph) -> Result<NgdOracleValues> {
    let auts = automorphisms(g)?;
    let h = g.complement();
    Ok(NgdOracleValues {
        d: distinguishing_number(g, &auts)?,
        chi_d: distinguishing_chromatic_number(g, &auts)?,
        // Aut(Ḡ) = Aut(G)
        chi_d_complement: distinguishing_chromatic_number(&h, &auts)?,
    })
}

/// The definition evaluated directly: `χ_D(G) + χ_D(Ḡ) = n + D(G)`.
pub fn is_ngd_oracle(g: &Graph) -> Result<bool> {
    Ok(ngd_oracle_values(g)?.is_ngd(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{clique_plus_independent, complete_multipartite, cycle, pendant_arms};

    fn partition_of(g: &Graph) -> AblmPartition {
        ablm_partition(g, &recognize_ng(g)).unwrap()
    }

    #[test]
    fn clique_plus_independent_partition() {
        let g = clique_plus_independent(3).unwrap();
        let p = partition_of(&g);
        assert_eq!(p.sizes(), AblmSizes { a: 3, b: 0, l: 2, m: 0 });
        assert_eq!(compute_x(&g, &p).unwrap(), 0);
        assert_eq!(compute_y(&g, &p).unwrap(), 0);
        assert_eq!(chi_d_type1(&p, 0, 0), (3, 5));
        assert_eq!(distinguishing_number_formula(&g, &p).unwrap(), 3);
    }

    #[test]
    fn complete_graph_partition() {
        for n in 1..=6 {
            let g = Graph::complete(n);
            let p = partition_of(&g);
            assert_eq!(p.sizes(), AblmSizes { a: n, b: 0, l: 0, m: 0 });
            assert_eq!(chi_d_type1(&p, 0, 0), (n, n));
            assert_eq!(distinguishing_number_formula(&g, &p).unwrap(), n);
        }
    }

    #[test]
    fn pendant_arms_parameters() {
        let g = pendant_arms();
        let p = partition_of(&g);
        assert_eq!(p.sizes(), AblmSizes { a: 1, b: 5, l: 0, m: 5 });
        assert_eq!(compute_x(&g, &p).unwrap(), 0);
        assert_eq!(compute_y(&g, &p).unwrap(), 0);
        assert_eq!(chi_d_type1(&p, 0, 0), (6, 6));
        assert_eq!(gamma(&g, &p).unwrap().order(), 120);
        assert_eq!(distinguishing_number_formula(&g, &p).unwrap(), 3);
    }

    #[test]
    fn not_type_one() {
        let g = cycle(5).unwrap();
        assert_eq!(ablm_partition(&g, &recognize_ng(&g)).unwrap_err(), Error::NotTypeOne);
        let k32 = complete_multipartite(&[3, 2]).unwrap();
        assert_eq!(ablm_partition(&k32, &recognize_ng(&k32)).unwrap_err(), Error::NotTypeOne);
    }

    #[test]
    fn invalid_partition_is_rejected() {
        let g = pendant_arms();
        let mut p = partition_of(&g);
        // move an M vertex into L without it being adjacent to all of B
        let v = p.m.first().unwrap();
        p.m.remove(v);
        p.l.insert(v);
        assert!(matches!(compute_x(&g, &p), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn decisions_on_separating_examples() {
        let k311 = complete_multipartite(&[3, 1, 1]).unwrap();
        let r = decide_ngd(&k311).unwrap();
        assert!(r.is_ngd);
        assert_eq!(r.method, NgdMethod::Type2ClosedForm);
        assert_eq!(r.d, Some(3));
        assert!(r.type2.unwrap().d_equals_a);

        let r = decide_ngd(&cycle(5).unwrap()).unwrap();
        assert!(!r.is_ngd);
        assert_eq!(r.method, NgdMethod::Type3Theorem);

        let r = decide_ngd(&complete_multipartite(&[3, 2]).unwrap()).unwrap();
        assert!(r.is_ngd);
        assert_eq!(r.method, NgdMethod::Oracle);
        assert_eq!((r.chi_d, r.chi_d_complement, r.d), (Some(5), Some(3), Some(3)));

        let r = decide_ngd(&cycle(7).unwrap()).unwrap();
        assert!(!r.is_ngd);
        assert_eq!(r.method, NgdMethod::Oracle);
    }

    #[test]
    fn oracle_guard_on_fallback() {
        let c9 = cycle(9).unwrap();
        assert!(matches!(
            decide_ngd(&c9),
            Err(Error::GuardExceeded { n: 9, max: 8, .. })
        ));
        assert!(!decide_ngd_with_limit(&c9, 9).unwrap().is_ngd);
        assert!(decide_ngd(&Graph::empty(0)).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert!(!is_ngd_oracle(&cycle(7).unwrap()).unwrap());
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        let v = ngd_oracle_values(&k22).unwrap();
        assert_eq!((v.chi_d, v.chi_d_complement, v.d), (4, 3, 3));
        assert!(v.is_ngd(4));
    }

    #[test]
    fn single_vertex() {
        let r = decide_ngd(&Graph::empty(1)).unwrap();
        assert!(r.is_ngd);
        assert_eq!(r.method, NgdMethod::Type1ClosedForm);
        assert_eq!(r.d, Some(1));
        assert!(r.type2.unwrap().holds());
    }
}
