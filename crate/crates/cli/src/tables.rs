//! Recomputes the two reference tables from the oracles.

use std::fmt::Write;

use anyhow::Result;
use nglab_core::generators::{clique_plus_independent, complete_multipartite, cycle};
use nglab_core::ngd::{is_ngd_oracle, ngd_oracle_values};
use nglab_core::recognition::is_ng_oracle;
use nglab_core::Graph;
use serde::Serialize;

/// `(χ_D(G), χ_D(Ḡ), sum, product, D(G))`.
pub type Quintuple = [usize; 5];

#[derive(Clone, Debug, Serialize)]
pub struct ValueRow {
    pub graph: String,
    pub computed: Quintuple,
    pub expected: Quintuple,
}

impl ValueRow {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationRow {
    pub graph: String,
    /// `(NG, NGD)` from the oracles.
    pub computed: (bool, bool),
    pub expected: (bool, bool),
}

impl SeparationRow {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Tables {
    pub values: Vec<ValueRow>,
    pub separations: Vec<SeparationRow>,
}

impl Tables {
    pub fn all_match(&self) -> bool {
        self.values.iter().all(ValueRow::matches) && self.separations.iter().all(SeparationRow::matches)
    }
}

fn quintuple(g: &Graph) -> Result<Quintuple> {
    let o = ngd_oracle_values(g)?;
    Ok([o.chi_d, o.chi_d_complement, o.chi_d + o.chi_d_complement, o.chi_d * o.chi_d_complement, o.d])
}

/// Rows for `K_n` (n = 1..6), `K_{q,...,q}` at q = 2, and `K_t ∪ I_{t-1}`
/// (t = 2, 3, 4), each with its formula values.
pub fn value_table() -> Result<Vec<ValueRow>> {
    let mut rows = Vec::new();
    for n in 1..=6 {
        rows.push(ValueRow {
            graph: format!("K{n}"),
            computed: quintuple(&Graph::complete(n))?,
            expected: [n, n, 2 * n, n * n, n],
        });
    }
    let q = 2;
    rows.push(ValueRow {
        graph: "K2,2".into(),
        computed: quintuple(&complete_multipartite(&vec![q; q])?)?,
        expected: [q * q, q + 1, q * q + q + 1, q * q * (q + 1), q + 1],
    });
    for t in 2..=4 {
        rows.push(ValueRow {
            graph: format!("K{t}+I{}", t - 1),
            computed: quintuple(&clique_plus_independent(t)?)?,
            expected: [t, 2 * t - 1, 3 * t - 1, (2 * t - 1) * t, t],
        });
    }
    Ok(rows)
}

/// The four graphs separating NG from NGD membership.
pub fn separation_table() -> Result<Vec<SeparationRow>> {
    let cases = [
        ("K3,1,1", complete_multipartite(&[3, 1, 1])?, (true, true)),
        ("K3,2", complete_multipartite(&[3, 2])?, (false, true)),
        ("C5", cycle(5)?, (true, false)),
        ("C7", cycle(7)?, (false, false)),
    ];
    cases
        .into_iter()
        .map(|(name, g, expected)| {
            Ok(SeparationRow {
                graph: name.into(),
                computed: (is_ng_oracle(&g)?, is_ngd_oracle(&g)?),
                expected,
            })
        })
        .collect()
}

pub fn cmd_tables() -> Result<Tables> {
    Ok(Tables {
        values: value_table()?,
        separations: separation_table()?,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Aligned text rendering with computed and expected values side by side.
pub fn render(t: &Tables) -> String {
    let mut out = String::new();
    let header = ["graph", "chi_D", "chi_D(bar)", "sum", "product", "D"];
    let _ = writeln!(out, "Distinguishing chromatic values (computed / expected)");
    let _ = writeln!(
        out,
        "{:<8} {:>9} {:>11} {:>9} {:>9} {:>7}  match",
        header[0], header[1], header[2], header[3], header[4], header[5]
    );
    for r in &t.values {
        let cell = |i: usize| format!("{}/{}", r.computed[i], r.expected[i]);
        let _ = writeln!(
            out,
            "{:<8} {:>9} {:>11} {:>9} {:>9} {:>7}  {}",
            r.graph,
            cell(0),
            cell(1),
            cell(2),
            cell(3),
            cell(4),
            yes_no(r.matches())
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "Class separations (computed / expected)");
    let _ = writeln!(out, "{:<8} {:>8} {:>8}  match", "graph", "NG", "NGD");
    for r in &t.separations {
        let _ = writeln!(
            out,
            "{:<8} {:>8} {:>8}  {}",
            r.graph,
            format!("{}/{}", yes_no(r.computed.0), yes_no(r.expected.0)),
            format!("{}/{}", yes_no(r.computed.1), yes_no(r.expected.1)),
            yes_no(r.matches())
        );
    }
    out
}
