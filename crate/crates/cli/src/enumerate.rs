use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use nglab_core::enumerate::{graph_from_mask, isomorphism_class_masks};
use nglab_core::Graph;
use rayon::prelude::*;

use crate::analyze::{analyze_graph, GraphReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    Ng,
    Ngd,
    NgNotNgd,
    NgdNotNg,
}

impl Filter {
    fn needs_ngd(self) -> bool {
        !matches!(self, Filter::All | Filter::Ng)
    }

    fn keeps(self, r: &GraphReport) -> bool {
        let ngd = r.is_ngd == Some(true);
        match self {
            Filter::All => true,
            Filter::Ng => r.is_ng,
            Filter::Ngd => ngd,
            Filter::NgNotNgd => r.is_ng && r.is_ngd == Some(false),
            Filter::NgdNotNg => !r.is_ng && ngd,
        }
    }
}

/// One representative per isomorphism class on `n` vertices, in ascending
/// canonical order.
pub fn class_representatives(n: usize) -> Result<Vec<Graph>> {
    isomorphism_class_masks(n)?
        .into_iter()
        .map(|m| graph_from_mask(n, m).map_err(Into::into))
        .collect()
}

/// Reports for the classes on `n` vertices that pass `filter`, in canonical
/// order. `jobs = 0` uses every core.
pub fn enumerate_reports(n: usize, filter: Filter, jobs: usize, max_oracle_n: usize) -> Result<Vec<GraphReport>> {
    if filter.needs_ngd() && n > max_oracle_n {
        bail!("NGD filters need n <= {max_oracle_n} (the oracle guard), got n = {n}");
    }
    let classes = class_representatives(n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("building the worker pool")?;
    Ok(pool.install(|| {
        classes
            .par_iter()
            .map(|g| analyze_graph(g, max_oracle_n))
            .filter(|r| filter.keeps(r))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nglab_core::generators::{complete_multipartite, cycle};
    use nglab_core::graph6::emit_graph6;

    fn codes(reports: &[GraphReport]) -> Vec<String> {
        reports.iter().map(|r| r.graph6.clone()).collect()
    }

    fn contains_class(reports: &[GraphReport], g: &Graph) -> bool {
        let canon = nglab_core::enumerate::canonical_form(g).unwrap();
        let g6 = emit_graph6(&graph_from_mask(g.n(), canon).unwrap());
        codes(reports).contains(&g6)
    }

    #[test]
    fn separations_at_five() {
        let ng_not_ngd = enumerate_reports(5, Filter::NgNotNgd, 2, 8).unwrap();
        assert!(contains_class(&ng_not_ngd, &cycle(5).unwrap()));
        let ngd_not_ng = enumerate_reports(5, Filter::NgdNotNg, 2, 8).unwrap();
        assert!(contains_class(&ngd_not_ng, &complete_multipartite(&[3, 2]).unwrap()));
    }

    #[test]
    fn single_vertex() {
        let all = enumerate_reports(1, Filter::All, 1, 8).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].graph6, "@");
    }

    #[test]
    fn order_does_not_depend_on_jobs() {
        let one = enumerate_reports(5, Filter::All, 1, 8).unwrap();
        let many = enumerate_reports(5, Filter::All, 4, 8).unwrap();
        assert_eq!(one, many);
        assert_eq!(one.len(), 34);
    }

    #[test]
    fn guards() {
        assert!(enumerate_reports(6, Filter::Ngd, 1, 5).is_err());
        assert!(enumerate_reports(9, Filter::All, 1, 8).is_err());
    }
}
