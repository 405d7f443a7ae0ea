//! Brute-force reference implementations that share no code with the library
//! searches.
#![allow(dead_code)]

use nglab_core::Graph;
use proptest::prelude::*;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    let n = g.n();
    (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v])))
}

pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    permutations(g.n()).into_iter().filter(|p| is_automorphism(g, p)).collect()
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && permutations(g.n()).iter().any(|p| {
            (0..g.n()).all(|u| (0..u).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
        })
}

/// Calls `f` on every assignment of colors `0..r` to `n` vertices until it
/// returns true.
pub fn any_assignment(n: usize, r: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if r == 0 {
        return n == 0 && f(&[]);
    }
    let mut c = vec![0; n];
    loop {
        if f(&c) {
            return true;
        }
        let Some(i) = (0..n).find(|&i| c[i] + 1 < r) else {
            return false;
        };
        c[i] += 1;
        for slot in &mut c[..i] {
            *slot = 0;
        }
    }
}

pub fn proper(g: &Graph, c: &[usize]) -> bool {
    g.edges().all(|(u, v)| c[u] != c[v])
}

pub fn breaks_all(auts: &[Vec<usize>], c: &[usize]) -> bool {
    auts.iter()
        .all(|p| p.iter().enumerate().all(|(v, &pv)| pv == v) || (0..c.len()).any(|v| c[p[v]] != c[v]))
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.n()).find(|&r| any_assignment(g.n(), r, |c| proper(g, c))).unwrap()
}

pub fn brute_distinguishing(g: &Graph, auts: &[Vec<usize>], need_proper: bool) -> usize {
    (0..=g.n())
        .find(|&r| any_assignment(g.n(), r, |c| (!need_proper || proper(g, c)) && breaks_all(auts, c)))
        .unwrap()
}

/// Random labeled graph on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for v in 0..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}
