use nglab_core::graph6::emit_graph6;
use nglab_core::ngd::{decide_ngd_with_limit, ngd_oracle_values, NgdMethod};
use nglab_core::oracle::chromatic_number;
use nglab_core::recognition::{is_ng_oracle, recognize_ng};
use nglab_core::Graph;
use serde::Serialize;

/// Everything `analyze` reports about one graph. Fields that would need an
/// exhaustive search beyond the oracle guard are left out and a note says so.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub is_ng: bool,
    pub types: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_complement: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_ngd: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<NgdMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_d_complement: Option<usize>,
    /// The exhaustive oracles were run on this graph.
    pub oracle_checked: bool,
    /// Whether the oracles confirmed the structural answers; absent when they
    /// were not run or when the answer came from the oracles in the first place.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl GraphReport {
    /// An oracle run contradicted the structural computation.
    pub fn has_disagreement(&self) -> bool {
        self.oracle_agrees == Some(false)
    }
}

/// Runs the recognizer and the NGD decision, and cross-checks both against
/// the oracles when `n <= max_oracle_n`.
pub fn analyze_graph(g: &Graph, max_oracle_n: usize) -> GraphReport {
    let n = g.n();
    let cls = recognize_ng(g);
    let within_guard = n <= max_oracle_n;
    let mut r = GraphReport {
        graph6: emit_graph6(g),
        n,
        is_ng: cls.is_ng,
        types: cls.types.numbers(),
        chi: cls.k,
        chi_complement: cls.chi_complement,
        is_ngd: None,
        method: None,
        a: None,
        b: None,
        l: None,
        m: None,
        x: None,
        y: None,
        d: None,
        chi_d: None,
        chi_d_complement: None,
        oracle_checked: false,
        oracle_agrees: None,
        notes: Vec::new(),
    };

    if !cls.is_ng {
        if within_guard {
            match (chromatic_number(g), chromatic_number(&g.complement())) {
                (Ok(c), Ok(cc)) => {
                    r.chi = Some(c);
                    r.chi_complement = Some(cc);
                }
                (Err(e), _) | (_, Err(e)) => r.notes.push(format!("chi omitted: {e}")),
            }
        } else {
            r.notes.push(format!("chi omitted: n = {n} exceeds the oracle guard {max_oracle_n}"));
        }
    }

    match decide_ngd_with_limit(g, max_oracle_n) {
        Ok(rep) => {
            r.is_ngd = Some(rep.is_ngd);
            r.method = Some(rep.method);
            if let Some(p) = rep.params {
                (r.a, r.b, r.l, r.m, r.x, r.y) = (Some(p.a), Some(p.b), Some(p.l), Some(p.m), Some(p.x), Some(p.y));
                if rep.method == NgdMethod::Type2ClosedForm {
                    r.notes.push("a, b, l, m, x, y describe the Type 1 complement".into());
                }
            }
            r.d = rep.d;
            r.chi_d = rep.chi_d;
            r.chi_d_complement = rep.chi_d_complement;
            if rep.method == NgdMethod::Oracle {
                r.oracle_checked = true;
            }
            if let Some(t2) = rep.type2 {
                if t2.d_equals_a != t2.d_equals_b_without_c {
                    r.notes.push(format!(
                        "type 2 criterion: D = |A| is {}, D = #B without C-neighbours is {}",
                        t2.d_equals_a, t2.d_equals_b_without_c
                    ));
                }
            }
        }
        Err(e) => r.notes.push(format!("NGD fields omitted: {e}")),
    }

    if cls.is_ng && within_guard {
        r.oracle_checked = true;
        let agrees = cross_check(g, &r);
        if let Err(why) = &agrees {
            r.notes.push(format!("oracle disagreement: {why}"));
        }
        r.oracle_agrees = Some(agrees.is_ok());
    }
    r
}

fn cross_check(g: &Graph, r: &GraphReport) -> Result<(), String> {
    let fail = |what: &str, ours: String, oracle: String| Err(format!("{what}: structural {ours}, oracle {oracle}"));
    let ng = is_ng_oracle(g).map_err(|e| e.to_string())?;
    if !ng {
        return fail("NG membership", "true".into(), "false".into());
    }
    let chi = chromatic_number(g).map_err(|e| e.to_string())?;
    if r.chi != Some(chi) {
        return fail("chi", format!("{:?}", r.chi), chi.to_string());
    }
    let o = ngd_oracle_values(g).map_err(|e| e.to_string())?;
    if r.is_ngd != Some(o.is_ngd(g.n())) {
        return fail("NGD membership", format!("{:?}", r.is_ngd), o.is_ngd(g.n()).to_string());
    }
    if let Some(d) = r.d {
        if d != o.d {
            return fail("D", d.to_string(), o.d.to_string());
        }
    }
    if r.chi_d.is_some() && (r.chi_d, r.chi_d_complement) != (Some(o.chi_d), Some(o.chi_d_complement)) {
        return fail(
            "chi_D pair",
            format!("{:?}", (r.chi_d, r.chi_d_complement)),
            format!("{:?}", (o.chi_d, o.chi_d_complement)),
        );
    }
    Ok(())
}
