use std::collections::HashMap;

use super::{guard, MAX_AUTOMORPHISM_N};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Hard cap on the number of listed group elements.
pub const MAX_GROUP_ORDER: usize = 1 << 22;

/// An explicit list of vertex permutations forming a group.
///
/// Each element is stored as its image array (`perm[v]` is the image of `v`),
/// packed with stride `n`. Elements are kept in lexicographic order of their
/// image arrays, so the identity comes first.
#[derive(Clone, PartialEq, Eq)]
pub struct AutomorphismSet {
    n: usize,
    images: Vec<u8>,
}

impl std::fmt::Debug for AutomorphismSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AutomorphismSet(n={}, order={})", self.n, self.order())
    }
}

impl AutomorphismSet {
    pub fn identity(n: usize) -> AutomorphismSet {
        AutomorphismSet {
            n,
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a set from explicit permutations. Each must be a bijection on
    /// `0..n`; the list is sorted and deduplicated. Group closure is not
    /// checked here (see [`AutomorphismSet::is_group`]).
    pub fn from_perms(n: usize, perms: &[Vec<usize>]) -> Result<AutomorphismSet> {
        if n > u8::MAX as usize {
            return Err(Error::TooManyVertices { n, max: u8::MAX as usize });
        }
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(perms.len());
        for p in perms {
            let mut seen = VertexSet::EMPTY;
            if p.len() != n || p.iter().any(|&x| x >= n) {
                return Err(Error::InvalidParameter(format!("{p:?} is not a permutation of 0..{n}")));
            }
            for &x in p {
                seen.insert(x);
            }
            if seen.len() != n {
                return Err(Error::InvalidParameter(format!("{p:?} is not a permutation of 0..{n}")));
            }
            rows.push(p.iter().map(|&x| x as u8).collect());
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(AutomorphismSet {
            n,
            images: rows.concat(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.images.len().checked_div(self.n).unwrap_or(1)
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.images[i * self.n..(i + 1) * self.n]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.order()).map(move |i| self.get(i))
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.iter()
            .map(|p| p.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, perm: &[u8]) -> bool {
        if self.n == 0 {
            return perm.is_empty();
        }
        let (mut lo, mut hi) = (0, self.order());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(perm) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Every element maps edges to edges and non-edges to non-edges.
    pub fn preserves(&self, g: &Graph) -> bool {
        g.n() == self.n
            && self.iter().all(|p| {
                (0..self.n).all(|u| {
                    (u + 1..self.n).all(|v| g.has_edge(u, v) == g.has_edge(p[u] as usize, p[v] as usize))
                })
            })
    }

    /// Identity present and closed under composition and inverse.
    pub fn is_group(&self) -> bool {
        let id: Vec<u8> = (0..self.n as u8).collect();
        if !self.contains(&id) {
            return false;
        }
        let mut buf = vec![0u8; self.n];
        for p in self.iter() {
            for (v, &pv) in p.iter().enumerate() {
                buf[pv as usize] = v as u8;
            }
            if !self.contains(&buf) {
                return false;
            }
            for q in self.iter() {
                for v in 0..self.n {
                    buf[v] = p[q[v] as usize];
                }
                if !self.contains(&buf) {
                    return false;
                }
            }
        }
        true
    }

    /// Restricts every element to `s`, relabelling `s` as `0..|s|` in
    /// increasing order. Each element must map `s` onto itself.
    pub fn restrict_to(&self, s: VertexSet) -> Result<AutomorphismSet> {
        let verts = s.to_vec();
        if let Some(&v) = verts.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut index = vec![u8::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i as u8;
        }
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(self.order());
        for p in self.iter() {
            let mut row = Vec::with_capacity(verts.len());
            for &v in &verts {
                let img = index[p[v] as usize];
                if img == u8::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "group element {p:?} does not map the vertex set onto itself"
                    )));
                }
                row.push(img);
            }
            rows.push(row);
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(AutomorphismSet {
            n: verts.len(),
            images: rows.concat(),
        })
    }
}

/// Colour refinement: the coarsest equitable partition refining `initial`.
/// Returns a cell id per vertex; automorphisms preserving `initial` preserve it.
fn refine(g: &Graph, initial: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut cells = initial;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| cells[u]).collect();
                nb.sort_unstable();
                (cells[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let ids: HashMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let stable = distinct.len() == cells.iter().collect::<std::collections::HashSet<_>>().len();
        cells = next;
        if stable {
            return cells;
        }
    }
}

struct AutSearch<'a> {
    g: &'a Graph,
    n: usize,
    cells: Vec<usize>,
    image: Vec<u8>,
    found: Vec<u8>,
}

impl AutSearch<'_> {
    fn go(&mut self, v: usize, used: u64) -> Result<()> {
        if v == self.n {
            if self.found.len() / self.n.max(1) >= MAX_GROUP_ORDER {
                return Err(Error::GroupTooLarge { limit: MAX_GROUP_ORDER });
            }
            self.found.extend_from_slice(&self.image);
            return Ok(());
        }
        for w in 0..self.n {
            if used >> w & 1 == 1 || self.cells[w] != self.cells[v] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.g.has_edge(u, v) == self.g.has_edge(self.image[u] as usize, w)
            });
            if !consistent {
                continue;
            }
            self.image[v] = w as u8;
            self.go(v + 1, used | 1 << w)?;
        }
        Ok(())
    }
}

/// All automorphisms of `g` fixing each vertex of `fixed`: the pointwise
/// stabiliser of `fixed` in `Aut(g)`.
pub fn restricted_automorphisms(g: &Graph, fixed: VertexSet) -> Result<AutomorphismSet> {
    let n = g.n();
    guard("automorphism search", n, MAX_AUTOMORPHISM_N)?;
    if let Some(v) = fixed.last() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    // fixed vertices become singleton cells; others start by degree
    let initial = (0..n)
        .map(|v| if fixed.contains(v) { n + v } else { g.degree(v) })
        .collect();
    let cells = refine(g, initial);
    let mut s = AutSearch {
        g,
        n,
        cells,
        image: vec![0; n],
        found: Vec::new(),
    };
    s.go(0, 0)?;
    Ok(AutomorphismSet { n, images: s.found })
}

/// The full automorphism group `Aut(g)`.
pub fn automorphisms(g: &Graph) -> Result<AutomorphismSet> {
    restricted_automorphisms(g, VertexSet::EMPTY)
}
