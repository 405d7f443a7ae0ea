use serde::{Deserialize, Serialize};

use super::{guard, MAX_CHROMATIC_N};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex coloring with colors `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        Ok(Coloring(colors))
    }

    /// From 0-based internal colors.
    pub(crate) fn from_zero_based(colors: &[u8]) -> Coloring {
        Coloring(colors.iter().map(|&c| c as usize + 1).collect())
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The largest color used, `r`.
    pub fn num_colors(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn class(&self, color: usize) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }
}

/// Size of a largest clique, by bitset branch and bound.
pub fn max_clique_size(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            if size + cand.len() <= *best {
                return;
            }
            cand.remove(v);
            grow(g, cand.intersection(g.neighbors(v)), size + 1, best);
        }
    }
    let mut best = 0;
    grow(g, g.vertices(), 0, &mut best);
    best
}

fn greedy_upper_bound(g: &Graph, order: &[usize]) -> usize {
    let mut colors = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in order {
        let mut taken = 0u64;
        for u in g.neighbors(v) {
            if colors[u] != usize::MAX {
                taken |= 1 << colors[u];
            }
        }
        let c = (!taken).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Tries to color `order` with at most `r` colors. Colors are introduced in
/// first-use order, so each coloring is visited once up to relabelling.
fn color_with(g: &Graph, order: &[usize], r: usize) -> Option<Vec<u8>> {
    fn go(g: &Graph, order: &[usize], r: usize, i: usize, used: usize, colors: &mut [u8]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let mut taken = 0u32;
        for u in g.neighbors(v) {
            if colors[u] != u8::MAX {
                taken |= 1 << colors[u];
            }
        }
        let limit = (used + 1).min(r);
        for c in 0..limit {
            if taken >> c & 1 == 1 {
                continue;
            }
            colors[v] = c as u8;
            if go(g, order, r, i + 1, used.max(c + 1), colors) {
                return true;
            }
        }
        colors[v] = u8::MAX;
        false
    }
    let mut colors = vec![u8::MAX; g.n()];
    go(g, order, r, 0, 0, &mut colors).then_some(colors)
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    // stable sort keeps lower indices first among equal degrees
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

/// A proper coloring with `χ(G)` colors.
///
/// Vertices are branched in descending-degree order; the search starts at the
/// clique number and stops early when a greedy coloring already matches it.
pub fn optimal_coloring(g: &Graph) -> Result<Coloring> {
    guard("chromatic number", g.n(), MAX_CHROMATIC_N)?;
    if g.n() == 0 {
        return Ok(Coloring(Vec::new()));
    }
    let order = degree_order(g);
    let lower = max_clique_size(g).max(1);
    let upper = greedy_upper_bound(g, &order);
    for r in lower..=upper {
        if let Some(colors) = color_with(g, &order, r) {
            return Ok(Coloring::from_zero_based(&colors));
        }
    }
    unreachable!("greedy coloring with {upper} colors exists")
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    optimal_coloring(g).map(|c| c.num_colors())
}

/// `χ(G - v) < χ(G)`.
pub fn is_color_critical(g: &Graph, v: usize) -> Result<bool> {
    guard("chromatic number", g.n(), MAX_CHROMATIC_N)?;
    Ok(chromatic_number(&g.remove_vertex(v)?)? < chromatic_number(g)?)
}

/// A proper coloring with at most `k` colors in which `x` is the only vertex
/// of its color, if one exists.
///
/// Such a coloring exists iff `G - x` is `(k-1)`-colorable: give `x` a color
/// of its own and color the rest from the remaining palette.
pub fn coloring_isolating(g: &Graph, x: usize, k: usize) -> Result<Option<Coloring>> {
    guard("chromatic number", g.n(), MAX_CHROMATIC_N)?;
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if k == 0 {
        return Ok(None);
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
    let h = g.remove_vertex(x)?;
    let order = degree_order(&h);
    let Some(sub) = color_with(&h, &order, k - 1) else {
        return Ok(None);
    };
    let mut colors = vec![1; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        colors[v] = sub[i] as usize + 2;
    }
    Ok(Some(Coloring(colors)))
}
