//! Exhaustive small-graph enumeration.
//!
//! Labeled graphs on `n` vertices are identified with their *edge mask*: the
//! graph6 upper-triangle bit string `(0,1), (0,2), (1,2), (0,3), ...` read as
//! a big-endian binary number. The first pair is the most significant bit.
//!
//! The canonical form of a graph is the smallest edge mask over all vertex
//! relabellings, found by a branch-and-bound scan of the permutations.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_N: usize = 8;

/// Largest `n` whose edge mask fits in a `u64`.
pub const MAX_MASK_N: usize = 11;

/// `n (n - 1) / 2`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_mask_n(n: usize) -> Result<()> {
    if n > MAX_MASK_N {
        return Err(Error::GuardExceeded {
            operation: "edge masks",
            n,
            max: MAX_MASK_N,
        });
    }
    Ok(())
}

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> Result<u64> {
    check_mask_n(n)?;
    Ok(1u64 << pair_count(n))
}

pub fn graph_from_mask(n: usize, mask: u64) -> Result<Graph> {
    check_mask_n(n)?;
    let total = pair_count(n);
    if total < 64 && mask >> total != 0 {
        return Err(Error::InvalidParameter(format!(
            "edge mask {mask:#x} has bits beyond the {total} pairs of n = {n}"
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> (total - 1 - k) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn edge_mask(g: &Graph) -> Result<u64> {
    check_mask_n(g.n())?;
    let mut mask = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            mask = mask << 1 | g.has_edge(i, j) as u64;
        }
    }
    Ok(mask)
}

/// A uniformly random labeled graph (each pair an edge with probability 1/2).
pub fn random_labeled_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    check_mask_n(n)?;
    let total = pair_count(n);
    let mask = if total == 0 {
        0
    } else {
        rng.gen::<u64>() >> (64 - total)
    };
    graph_from_mask(n, mask)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    rows: Vec<u64>,
    best_order: Vec<usize>,
    best_rows: Vec<u64>,
    have_best: bool,
}

impl CanonSearch<'_> {
    fn row(&self, depth: usize, v: usize) -> u64 {
        let mut r = 0u64;
        for i in 0..depth {
            r = r << 1 | self.g.has_edge(self.order[i], v) as u64;
        }
        r
    }

    fn prefix_cmp(&self, depth: usize) -> std::cmp::Ordering {
        self.rows[..=depth].cmp(&self.best_rows[..=depth])
    }

    fn search(&mut self, depth: usize, used: u64) {
        if depth == self.n {
            if !self.have_best || self.rows < self.best_rows {
                self.best_rows.clone_from(&self.rows);
                self.best_order.clone_from(&self.order);
                self.have_best = true;
            }
            return;
        }
        let candidates: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| (self.row(depth, v), v))
            .collect();
        let min_row = candidates.iter().map(|&(r, _)| r).min().expect("unused vertex");
        self.rows[depth] = min_row;
        if self.have_best && self.prefix_cmp(depth).is_gt() {
            return;
        }
        for (r, v) in candidates {
            if r != min_row {
                continue;
            }
            // a sibling subtree may have improved the best in the meantime
            self.rows[depth] = min_row;
            if self.have_best && self.prefix_cmp(depth).is_gt() {
                return;
            }
            self.order[depth] = v;
            self.search(depth + 1, used | 1u64 << v);
        }
    }
}

/// Canonical labelling: returns the minimal edge mask and the vertex order
/// realising it (`order[position] = original vertex`).
pub fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    check_mask_n(n)?;
    let mut s = CanonSearch {
        g,
        n,
        order: vec![0; n],
        rows: vec![0; n],
        best_order: Vec::new(),
        best_rows: Vec::new(),
        have_best: false,
    };
    s.search(0, 0);
    let mut mask = 0u64;
    for (j, &r) in s.best_rows.iter().enumerate() {
        mask = mask << j | r;
    }
    Ok((mask, s.best_order))
}

pub fn canonical_form(g: &Graph) -> Result<u64> {
    canonical_labeling(g).map(|(m, _)| m)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g)? == canonical_form(h)?)
}

fn check_enumeration_n(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::GuardExceeded {
            operation: "graph enumeration",
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    Ok(())
}

/// Canonical masks of all isomorphism classes on `n` vertices, ascending.
///
/// Built by extending each class on `n - 1` vertices with a new vertex in
/// every possible way and canonicalising the results.
pub fn isomorphism_class_masks(n: usize) -> Result<Vec<u64>> {
    check_enumeration_n(n)?;
    let mut reps = vec![0u64];
    for k in 1..=n {
        let mut next = HashSet::new();
        for &m in &reps {
            let base = graph_from_mask(k - 1, m)?;
            for nbhd in 0u64..1 << (k - 1) {
                let mut adj = base.adjacency().to_vec();
                for (u, row) in adj.iter_mut().enumerate() {
                    *row |= (nbhd >> u & 1) << (k - 1);
                }
                adj.push(nbhd);
                let h = Graph::from_adjacency(adj)?;
                next.insert(canonical_form(&h)?);
            }
        }
        reps = next.into_iter().collect();
    }
    reps.sort_unstable();
    Ok(reps)
}

/// Streams graphs on `n <= 8` vertices.
///
/// With `dedup = false` every labeled graph is produced, in increasing
/// edge-mask order. With `dedup = true` one canonical representative per
/// isomorphism class is produced, in increasing canonical-mask order.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    check_enumeration_n(n)?;
    if dedup {
        let masks = isomorphism_class_masks(n)?;
        Ok(Box::new(masks.into_iter().map(move |m| {
            graph_from_mask(n, m).expect("mask within range")
        })))
    } else {
        let count = labeled_graph_count(n)?;
        Ok(Box::new(
            (0..count).map(move |m| graph_from_mask(n, m).expect("mask within range")),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip_matches_graph6_order() {
        // K_3 is all ones; the path 0-1-2 has (0,1) and (1,2) but not (0,2)
        assert_eq!(edge_mask(&Graph::complete(3)).unwrap(), 0b111);
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_mask(&p).unwrap(), 0b101);
        assert_eq!(graph_from_mask(3, 0b101).unwrap(), p);
        assert!(graph_from_mask(3, 0b1000).is_err());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(0, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(0, true).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(1, true).unwrap().count(), 1);
    }

    #[test]
    fn known_class_counts() {
        let counts: Vec<usize> = (0..=7)
            .map(|n| isomorphism_class_masks(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            enumerate_graphs(9, true),
            Err(Error::GuardExceeded { n: 9, max: 8, .. })
        ));
    }

    #[test]
    fn canonical_of_path_and_star() {
        // canonical form starts with as many zeros as possible
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), 0b011);
        let (m, order) = canonical_labeling(&p).unwrap();
        let mut relabel = vec![0; 3];
        for (pos, &v) in order.iter().enumerate() {
            relabel[v] = pos;
        }
        assert_eq!(edge_mask(&p.permuted(&relabel)).unwrap(), m);
    }

    #[test]
    fn random_graph_is_deterministic_per_seed() {
        use rand::SeedableRng;
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert_eq!(
            random_labeled_graph(7, &mut a).unwrap(),
            random_labeled_graph(7, &mut b).unwrap()
        );
    }
}
