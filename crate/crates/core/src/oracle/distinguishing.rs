use std::ops::ControlFlow;

use super::{guard, AutomorphismSet, Coloring, MAX_DISTINGUISHING_N};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// True iff no non-identity element of `auts` preserves every color.
pub fn is_distinguishing(c: &Coloring, auts: &AutomorphismSet) -> bool {
    let colors = c.colors();
    assert_eq!(colors.len(), auts.n(), "coloring and group act on different vertex counts");
    auts.iter().all(|p| {
        let identity = p.iter().enumerate().all(|(v, &pv)| pv as usize == v);
        identity || p.iter().enumerate().any(|(v, &pv)| colors[pv as usize] != colors[v])
    })
}

/// Backtracking over colorings in vertex order.
///
/// Colors are introduced in first-use order, which removes the `r!`
/// relabelling symmetry; both properties searched for are invariant under
/// permuting colors. A group element is tested as soon as every vertex it
/// moves has a color: if it preserves the partial coloring it preserves every
/// extension, so the branch is cut. Reaching a leaf therefore means the
/// coloring is distinguishing.
struct Search<'a> {
    g: &'a Graph,
    r: usize,
    proper: bool,
    /// `checks[v]`: moved pairs `(u, σ(u))` of each non-identity element whose
    /// largest moved vertex is `v`, smallest supports first.
    checks: Vec<Vec<Vec<(u8, u8)>>>,
    colors: Vec<u8>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, auts: &AutomorphismSet, r: usize, proper: bool) -> Search<'a> {
        let n = g.n();
        let mut checks: Vec<Vec<Vec<(u8, u8)>>> = vec![Vec::new(); n];
        for p in auts.iter() {
            let moved: Vec<(u8, u8)> = p
                .iter()
                .enumerate()
                .filter(|&(v, &pv)| pv as usize != v)
                .map(|(v, &pv)| (v as u8, pv))
                .collect();
            if let Some(&(last, _)) = moved.last() {
                checks[last as usize].push(moved);
            }
        }
        for bucket in &mut checks {
            bucket.sort_by_key(|m| m.len());
        }
        Search {
            g,
            r,
            proper,
            checks,
            colors: vec![0; n],
        }
    }

    fn broken_at(&self, v: usize) -> bool {
        self.checks[v].iter().all(|moved| {
            moved
                .iter()
                .any(|&(u, w)| self.colors[u as usize] != self.colors[w as usize])
        })
    }

    fn go<F>(&mut self, v: usize, used: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        if v == self.g.n() {
            return visit(&self.colors);
        }
        let limit = (used + 1).min(self.r);
        for c in 0..limit {
            if self.proper && self.g.neighbors(v).iter().any(|u| u < v && self.colors[u] as usize == c) {
                continue;
            }
            self.colors[v] = c as u8;
            if self.broken_at(v) {
                self.go(v + 1, used.max(c + 1), visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn check_inputs(g: &Graph, auts: &AutomorphismSet) -> Result<()> {
    guard("distinguishing search", g.n(), MAX_DISTINGUISHING_N)?;
    if auts.n() != g.n() {
        return Err(Error::GroupMismatch {
            expected: auts.n(),
            found: g.n(),
        });
    }
    Ok(())
}

/// A coloring with the fewest colors that is distinguishing for `auts` (and
/// proper on `g` when `proper` is set). Empty for `n = 0`.
pub fn optimal_distinguishing_coloring(
    g: &Graph,
    auts: &AutomorphismSet,
    proper: bool,
) -> Result<Coloring> {
    check_inputs(g, auts)?;
    if g.n() == 0 {
        return Coloring::new(Vec::new());
    }
    for r in 1..=g.n() {
        let mut search = Search::new(g, auts, r, proper);
        let mut found = None;
        let _ = search.go(0, 0, &mut |c| {
            found = Some(Coloring::from_zero_based(c));
            ControlFlow::Break(())
        });
        if let Some(c) = found {
            return Ok(c);
        }
    }
    unreachable!("the all-distinct coloring is proper and distinguishing")
}

/// `D^Γ(G)` for `Γ = auts`; `D(G)` when `auts` is the full automorphism group.
pub fn distinguishing_number(g: &Graph, auts: &AutomorphismSet) -> Result<usize> {
    optimal_distinguishing_coloring(g, auts, false).map(|c| c.num_colors())
}

/// `χ_D^Γ(G)` for `Γ = auts`; `χ_D(G)` when `auts` is the full automorphism group.
pub fn distinguishing_chromatic_number(g: &Graph, auts: &AutomorphismSet) -> Result<usize> {
    optimal_distinguishing_coloring(g, auts, true).map(|c| c.num_colors())
}

/// Every distinguishing coloring with colors in `1..=r`, one per class of
/// color relabellings (colors numbered by first occurrence).
pub fn distinguishing_colorings(
    g: &Graph,
    auts: &AutomorphismSet,
    r: usize,
    proper: bool,
) -> Result<Vec<Coloring>> {
    check_inputs(g, auts)?;
    let mut out = Vec::new();
    if g.n() == 0 {
        out.push(Coloring::new(Vec::new())?);
        return Ok(out);
    }
    let mut search = Search::new(g, auts, r, proper);
    let _ = search.go(0, 0, &mut |c| {
        out.push(Coloring::from_zero_based(c));
        ControlFlow::Continue(())
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::automorphisms;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Tries every r^n coloring against every group element.
    fn brute_min(g: &Graph, auts: &AutomorphismSet, proper: bool) -> usize {
        let n = g.n();
        (1..=n)
            .find(|&r| {
                (0..r.pow(n as u32)).any(|mut code| {
                    let mut c = vec![0; n];
                    for slot in c.iter_mut() {
                        *slot = code % r + 1;
                        code /= r;
                    }
                    let c = Coloring::new(c).unwrap();
                    (!proper || c.is_proper(g)) && is_distinguishing(&c, auts)
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn membership() {
        let g = cycle(5);
        let auts = automorphisms(&g).unwrap();
        assert!(is_distinguishing(&Coloring::new(vec![1, 2, 3, 4, 5]).unwrap(), &auts));
        assert!(!is_distinguishing(&Coloring::new(vec![1; 5]).unwrap(), &auts));
        assert!(is_distinguishing(&Coloring::new(vec![1, 2, 1, 2, 3]).unwrap(), &auts));
    }

    #[test]
    fn small_values() {
        for n in 1..=6 {
            let k = Graph::complete(n);
            assert_eq!(distinguishing_number(&k, &automorphisms(&k).unwrap()).unwrap(), n);
        }
        let c5 = cycle(5);
        let a = automorphisms(&c5).unwrap();
        assert_eq!(distinguishing_number(&c5, &a).unwrap(), 3);
        assert_eq!(distinguishing_chromatic_number(&c5, &a).unwrap(), 3);

        let c4 = cycle(4); // K_{2,2}
        assert_eq!(distinguishing_chromatic_number(&c4, &automorphisms(&c4).unwrap()).unwrap(), 4);

        let k3i2 = Graph::complete(3).disjoint_union(&Graph::empty(2)).unwrap();
        assert_eq!(
            distinguishing_chromatic_number(&k3i2, &automorphisms(&k3i2).unwrap()).unwrap(),
            3
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in [cycle(6), cycle(4), Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap()] {
            let auts = automorphisms(&g).unwrap();
            assert_eq!(distinguishing_number(&g, &auts).unwrap(), brute_min(&g, &auts, false));
            assert_eq!(distinguishing_chromatic_number(&g, &auts).unwrap(), brute_min(&g, &auts, true));
        }
    }

    #[test]
    fn degenerate_inputs() {
        let e = Graph::empty(0);
        assert_eq!(distinguishing_number(&e, &AutomorphismSet::identity(0)).unwrap(), 0);
        assert_eq!(distinguishing_chromatic_number(&e, &AutomorphismSet::identity(0)).unwrap(), 0);
        let i3 = Graph::empty(3);
        assert_eq!(distinguishing_number(&i3, &AutomorphismSet::identity(3)).unwrap(), 1);
        assert!(matches!(
            distinguishing_number(&i3, &AutomorphismSet::identity(2)),
            Err(Error::GroupMismatch { .. })
        ));
    }

    #[test]
    fn coloring_listing() {
        let k2 = Graph::complete(2);
        let auts = automorphisms(&k2).unwrap();
        let all = distinguishing_colorings(&k2, &auts, 2, false).unwrap();
        assert_eq!(all, vec![Coloring::new(vec![1, 2]).unwrap()]);
    }
}
