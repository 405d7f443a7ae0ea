//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
//!
//! Every numeric comparison is exact. Time limits are wall-clock and apply to
//! an optimized build.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nglab::analyze::analyze_graph;
use nglab::enumerate::{enumerate_reports, Filter};
use nglab::tables::{separation_table, value_table};
use nglab::verify::{
    check_bounds, check_multipartite, check_ngd_decision, check_recognizer, check_type_one,
    labeled_graphs, multipartite_graphs, run_suite, sample_graphs, SuiteResult, RECOGNIZER_SAMPLE,
    RECOGNIZER_SEED,
};
use nglab_core::enumerate::{graph_from_mask, labeled_graph_count};
use nglab_core::generators::{complete_multipartite, cycle, pendant_arms};
use nglab_core::graph6::parse_graph6;
use nglab_core::ngd::{
    ablm_partition, compute_x, compute_y, decide_ngd, distinguishing_number_formula, is_ngd_oracle,
};
use nglab_core::recognition::recognize_ng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn suites_outcome(suites: &[SuiteResult]) -> Outcome {
    let checked: u64 = suites.iter().map(|s| s.checked).sum();
    let failed: u64 = suites.iter().map(|s| s.failed).sum();
    let mut detail = format!("{checked} graphs checked, {failed} violations");
    if let Some(c) = suites.iter().flat_map(|s| &s.counterexamples).next() {
        detail.push_str(&format!("; first: {} ({})", c.graph6, c.claim));
    }
    Outcome { pass: failed == 0, detail }
}

fn criterion_1() -> Outcome {
    let cases = [
        ("K3,1,1", complete_multipartite(&[3, 1, 1]).unwrap(), (true, true)),
        ("K3,2", complete_multipartite(&[3, 2]).unwrap(), (false, true)),
        ("C5", cycle(5).unwrap(), (true, false)),
        ("C7", cycle(7).unwrap(), (false, false)),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, g, expected) in cases {
        let r = analyze_graph(&g, 8);
        let got = (r.is_ng, r.is_ngd.unwrap_or(!expected.1));
        pass &= got == expected && !r.has_disagreement();
        parts.push(format!("{name}={got:?}"));
    }
    let oracle_rows = separation_table().unwrap();
    pass &= oracle_rows.iter().all(|r| r.matches());
    Outcome { pass, detail: parts.join(" ") }
}

fn criterion_2() -> Outcome {
    let rows = value_table().unwrap();
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches())
        .map(|r| format!("{} computed {:?} expected {:?}", r.graph, r.computed, r.expected))
        .collect();
    Outcome {
        pass: bad.is_empty() && rows.len() == 10,
        detail: if bad.is_empty() { format!("{} rows match", rows.len()) } else { bad.join("; ") },
    }
}

fn criterion_3() -> Outcome {
    let exhaustive = run_suite("recognizer, all labeled n <= 6", labeled_graphs(0, 6), &check_recognizer);
    let sample = run_suite(
        "recognizer, n = 7 sample",
        sample_graphs(7, RECOGNIZER_SAMPLE, RECOGNIZER_SEED),
        &check_recognizer,
    );
    let mut o = suites_outcome(&[exhaustive, sample]);
    o.detail = format!("{} (includes {RECOGNIZER_SAMPLE} seeded samples at n = 7)", o.detail);
    o
}

fn criterion_4() -> Outcome {
    let ng: Vec<_> = (1..=7usize)
        .flat_map(|n| {
            (0..labeled_graph_count(n).unwrap())
                .into_par_iter()
                .map(move |m| graph_from_mask(n, m).unwrap())
                .filter(|g| recognize_ng(g).is_ng)
                .collect::<Vec<_>>()
        })
        .collect();
    let mut o = suites_outcome(&[run_suite("NGD decision on labeled NG-graphs n <= 7", ng, &check_ngd_decision)]);
    o.detail = format!("every labeled NG-graph: {}", o.detail);
    o
}

fn criterion_5() -> Outcome {
    suites_outcome(&[run_suite("bounds, all labeled n <= 6", labeled_graphs(0, 6), &check_bounds)])
}

fn criterion_6() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=8 {
        for r in enumerate_reports(n, Filter::Ng, 0, 8).unwrap() {
            if r.types.contains(&1) {
                graphs.push(parse_graph6(&r.graph6).unwrap());
            }
        }
    }
    suites_outcome(&[run_suite("Type 1 closed forms n <= 8", graphs, &check_type_one)])
}

fn criterion_7() -> Outcome {
    let g = pendant_arms();
    let cls = recognize_ng(&g);
    let p = ablm_partition(&g, &cls).unwrap();
    let s = p.sizes();
    let x = compute_x(&g, &p).unwrap();
    let y = compute_y(&g, &p).unwrap();
    let d = distinguishing_number_formula(&g, &p).unwrap();
    let got = (s.a, s.b, s.l, s.m, x, y, d);
    let decision = decide_ngd(&g).unwrap();
    let oracle = is_ngd_oracle(&g).unwrap();
    let pass = got == (1, 5, 0, 5, 0, 0, 3) && !decision.is_ngd && !oracle && s.a.max(s.l) == 1 && d == 3;
    Outcome {
        pass,
        detail: format!(
            "(a, b, l, m, x, y, D) = {got:?}, decide_ngd = {}, oracle = {oracle}, max(a, l) = {}",
            decision.is_ngd,
            s.a.max(s.l)
        ),
    }
}

fn criterion_8() -> Outcome {
    suites_outcome(&[run_suite("complete multipartite n <= 8", multipartite_graphs(8), &check_multipartite)])
}

fn main() -> ExitCode {
    type Criterion = (u8, &'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 8] = [
        (1, "class separations", criterion_1, Duration::from_secs(1)),
        (2, "distinguishing chromatic value table", criterion_2, Duration::from_secs(30)),
        (3, "recognizer vs chromatic oracle", criterion_3, Duration::from_secs(300)),
        (4, "NGD decision vs definition", criterion_4, Duration::from_secs(600)),
        (5, "bound suites", criterion_5, Duration::from_secs(600)),
        (6, "Type 1 lemma suite", criterion_6, Duration::from_secs(600)),
        (7, "eleven-vertex pendant example", criterion_7, Duration::from_secs(60)),
        (8, "complete multipartite claims", criterion_8, Duration::from_secs(600)),
    ];
    let mut all = true;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= limit;
        all &= pass;
        println!(
            "criterion {id} {}: {name}: {} [{:.2}s, limit {}s]",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {}", if all { "all criteria pass" } else { "FAILED" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
