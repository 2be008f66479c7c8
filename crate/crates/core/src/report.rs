//! Analysis documents and their human / machine renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::decomposition::DecompositionReport;
use crate::ideals::PropertyReport;
use crate::semigroup::{ElementId, LeSemigroup, PoeView};
use crate::theorems::{Context, TheoremId, TheoremReport};

pub const REPORT_FORMAT: &str = "lesgp-report 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Human,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureRef {
    pub source: Option<String>,
    pub n: usize,
    pub top: ElementId,
    pub bottom: ElementId,
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub representative: ElementId,
    pub members: Vec<ElementId>,
    pub green: bool,
    pub green_witness: Option<(ElementId, ElementId)>,
    pub subsemigroup: bool,
    pub subgroup: bool,
}

/// One record feeding both output modes. Field order is the machine format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisDocument {
    pub format: &'static str,
    pub structure: StructureRef,
    pub properties: PropertyReport,
    pub ideal_elements: Vec<ElementId>,
    pub closure: Vec<ElementId>,
    pub classes: Vec<ClassSummary>,
    pub decomposition: DecompositionReport,
    pub theorems: Vec<TheoremReport>,
}

impl AnalysisDocument {
    pub fn new(s: &LeSemigroup, source: Option<String>) -> Self {
        Self::with_theorems(s, source, &TheoremId::ALL)
    }

    pub fn with_theorems(s: &LeSemigroup, source: Option<String>, ids: &[TheoremId]) -> Self {
        let ctx = Context::new(s);
        let theorems = ids.iter().map(|&id| ctx.check(id)).collect();
        let classes = ctx
            .classes
            .classes
            .iter()
            .map(|c| ClassSummary {
                representative: c.representative,
                members: c.members.clone(),
                green: c.green,
                green_witness: c.green_witness,
                subsemigroup: c.subsemigroup,
                subgroup: c.subgroup,
            })
            .collect();
        AnalysisDocument {
            format: REPORT_FORMAT,
            structure: StructureRef {
                source,
                n: s.size(),
                top: s.top(),
                bottom: s.bottom(),
                names: s.names().map(<[String]>::to_vec),
            },
            ideal_elements: ctx.properties.ideal_elements.clone(),
            properties: ctx.properties,
            closure: ctx.classes.closure,
            classes,
            decomposition: ctx.decomposition,
            theorems,
        }
    }
}

fn elems(xs: &[ElementId]) -> String {
    let v: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

fn pair(p: Option<(ElementId, ElementId)>) -> String {
    p.map_or_else(|| "-".into(), |(a, b)| format!("({a}, {b})"))
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn yn(b: bool) -> &'static str {
    opt(Some(b))
}

fn human(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let st = &doc.structure;
    let p = &doc.properties;
    if let Some(src) = &st.source {
        let _ = writeln!(out, "structure  {src}");
    }
    let _ = writeln!(
        out,
        "order      {}   top {}   bottom {}",
        st.n, st.top, st.bottom
    );
    if let Some(names) = &st.names {
        let _ = writeln!(out, "names      {}", names.join(" "));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "property        value  witness");
    let _ = writeln!(
        out,
        "regular         {:<6} {}",
        yn(p.regular),
        p.regular_witness.map_or("-".into(), |x| x.to_string())
    );
    let _ = writeln!(
        out,
        "intra-regular   {:<6} {}",
        yn(p.intra_regular),
        p.intra_regular_witness
            .map_or("-".into(), |x| x.to_string())
    );
    let _ = writeln!(
        out,
        "semisimple      {:<6} {}",
        yn(p.semisimple),
        p.semisimple_witness.map_or("-".into(), |x| x.to_string())
    );
    let _ = writeln!(out, "left simple     {:<6} -", yn(p.left_simple));
    let _ = writeln!(
        out,
        "lambda          {:<6} {}",
        yn(p.lambda),
        pair(p.lambda_witness)
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "ideal elements       {}", elems(&doc.ideal_elements));
    let _ = writeln!(
        out,
        "left ideal elements  {}",
        elems(&p.left_ideal_elements)
    );
    let _ = writeln!(out, "closure t(x)         {}", elems(&doc.closure));
    let _ = writeln!(out);
    let _ = writeln!(out, "J-classes");
    let _ = writeln!(out, "  rep  green  subsemigroup  subgroup  members");
    for c in &doc.classes {
        let _ = writeln!(
            out,
            "  {:<4} {:<6} {:<13} {:<9} {}",
            c.representative.to_string(),
            yn(c.green),
            yn(c.subsemigroup),
            yn(c.subgroup),
            elems(&c.members)
        );
    }
    let _ = writeln!(out);
    out.push_str(&human_decomposition(&doc.decomposition));
    let _ = writeln!(out);
    out.push_str(&human_theorems(&doc.theorems));
    out
}

pub fn human_decomposition(d: &DecompositionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "decomposition  {}",
        if d.passes() { "passes" } else { "fails" }
    );
    let _ = writeln!(
        out,
        "  semilattice {} {}   disjoint {}   cover {}   containment {}",
        yn(d.semilattice),
        pair(d.semilattice_witness),
        yn(d.disjoint),
        yn(d.cover),
        yn(d.class_product_containment)
    );
    if let Some(w) = d.containment_witness {
        let _ = writeln!(
            out,
            "  containment witness: x={} in J_{}, y={} in J_{}, t(xy)={}",
            w.x, w.alpha, w.y, w.beta, w.closure_of_product
        );
    }
    let _ = writeln!(
        out,
        "  rep  subsg  joins  l-simple  semisimple  intra-reg  lambda"
    );
    for c in &d.classes {
        let _ = writeln!(
            out,
            "  {:<4} {:<6} {:<6} {:<9} {:<11} {:<10} {}",
            c.representative.to_string(),
            yn(c.subsemigroup),
            yn(c.join_closed),
            opt(c.left_simple),
            opt(c.semisimple),
            opt(c.intra_regular),
            opt(c.lambda)
        );
    }
    out
}

pub fn human_theorems(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "theorem   status     witnesses");
    for r in reports {
        let ws: Vec<String> = r
            .witnesses
            .iter()
            .map(|w| {
                let e: Vec<String> = w.elements.iter().map(ToString::to_string).collect();
                format!("{}({})", w.kind, e.join(","))
            })
            .collect();
        let _ = writeln!(
            out,
            "{:<9} {:<10} {}",
            r.id.as_str(),
            r.status.to_string(),
            if ws.is_empty() {
                "-".into()
            } else {
                ws.join(" ")
            }
        );
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_machine<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn emit_report(doc: &AnalysisDocument, mode: Mode) -> String {
    match mode {
        Mode::Human => human(doc),
        Mode::Machine => to_machine(doc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::theorems::Status;

    fn machine(s: &LeSemigroup) -> serde_json::Value {
        serde_json::from_str(&emit_report(&AnalysisDocument::new(s, None), Mode::Machine)).unwrap()
    }

    #[test]
    fn right_zero_pair_lambda_witness() {
        let v = machine(&fixtures::c2_rz());
        assert_eq!(v["properties"]["lambda"], false);
        assert_eq!(v["properties"]["lambda_witness"], serde_json::json!([0, 1]));
    }

    #[test]
    fn smallest_lists_thirteen_clean_theorems() {
        let doc = AnalysisDocument::new(&fixtures::s1(), None);
        assert_eq!(doc.theorems.len(), 13);
        assert!(doc.theorems.iter().all(|t| t.status != Status::Violation));
        let v = machine(&fixtures::s1());
        assert_eq!(v["theorems"].as_array().unwrap().len(), 13);
        assert!(v["theorems"][0]["id"].is_string());
        assert!(v["theorems"][0]["witnesses"].is_array());
    }

    #[test]
    fn constant_pair_single_class() {
        let v = machine(&fixtures::c2_const());
        let classes = v["classes"].as_array().unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0]["representative"], 1);
        assert_eq!(classes[0]["green"], true);
        assert_eq!(classes[0]["subsemigroup"], true);
        assert_eq!(classes[0]["subgroup"], false);
    }

    #[test]
    fn machine_report_is_stable() {
        for (_, s) in fixtures::all() {
            let a = emit_report(&AnalysisDocument::new(&s, None), Mode::Machine);
            let b = emit_report(&AnalysisDocument::new(&s.clone(), None), Mode::Machine);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn human_mode_mentions_every_theorem() {
        let text = emit_report(
            &AnalysisDocument::new(&fixtures::c3_null(), None),
            Mode::Human,
        );
        for id in TheoremId::ALL {
            assert!(text.contains(id.as_str()), "{id:?}");
        }
    }
}
