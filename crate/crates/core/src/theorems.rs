//! Hypothesis → conclusion checks for every result about 𝒥, run on one
//! concrete structure at a time.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decomposition::{decomposition_from, DecompositionReport};
use crate::error::Error;
use crate::green::{j_classes, relative_top_class, JClassification};
use crate::ideals::{self, ideal_closure, is_idempotent, PropertyReport};
use crate::semigroup::{ElementId, LeSemigroup, PoeView};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "t-least")]
    TLeast,
    #[serde(rename = "kp")]
    Kp,
    #[serde(rename = "t-idemp")]
    TIdemp,
    #[serde(rename = "lp")]
    Lp,
    #[serde(rename = "ir")]
    Ir,
    #[serde(rename = "gc")]
    Gc,
    #[serde(rename = "idp")]
    Idp,
    #[serde(rename = "main")]
    Main,
    #[serde(rename = "sd-fwd")]
    SdFwd,
    #[serde(rename = "sd-bwd")]
    SdBwd,
    #[serde(rename = "equiv")]
    Equiv,
    #[serde(rename = "ext9")]
    Ext9,
    #[serde(rename = "ext13")]
    Ext13,
}

impl TheoremId {
    /// Fixed evaluation order.
    pub const ALL: [TheoremId; 13] = [
        TheoremId::TLeast,
        TheoremId::Kp,
        TheoremId::TIdemp,
        TheoremId::Lp,
        TheoremId::Ir,
        TheoremId::Gc,
        TheoremId::Idp,
        TheoremId::Main,
        TheoremId::SdFwd,
        TheoremId::SdBwd,
        TheoremId::Equiv,
        TheoremId::Ext9,
        TheoremId::Ext13,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::TLeast => "t-least",
            TheoremId::Kp => "kp",
            TheoremId::TIdemp => "t-idemp",
            TheoremId::Lp => "lp",
            TheoremId::Ir => "ir",
            TheoremId::Gc => "gc",
            TheoremId::Idp => "idp",
            TheoremId::Main => "main",
            TheoremId::SdFwd => "sd-fwd",
            TheoremId::SdBwd => "sd-bwd",
            TheoremId::Equiv => "equiv",
            TheoremId::Ext9 => "ext9",
            TheoremId::Ext13 => "ext13",
        }
    }

    /// Imported results, checked empirically only.
    pub fn is_external(self) -> bool {
        matches!(self, TheoremId::Ext9 | TheoremId::Ext13)
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::TLeast => "t(x) is the least ideal element above x",
            TheoremId::Kp => "every J-class contains exactly one ideal element, t(a)",
            TheoremId::TIdemp => "a J-class satisfies the Green condition iff its representative is idempotent",
            TheoremId::Lp => "in a J-class that is a subsemigroup: txt = t = exe, txe = t = ext, te = t = et",
            TheoremId::Ir => "regular and intra-regular: the equalities of lp hold for t = t(x), every x",
            TheoremId::Gc => "a J-class is a subgroup iff it is a single idempotent",
            TheoremId::Idp => "under lambda, for an idempotent ideal element e, J_e in ]e] is a subsemigroup",
            TheoremId::Main => "under lambda, every J-class with the Green condition is a subsemigroup",
            TheoremId::SdFwd => "semisimple and lambda: J-classes form a semilattice of left simple, semisimple, intra-regular, lambda ve-semigroups",
            TheoremId::SdBwd => "J-classes form a semilattice of left simple ve-semigroups: semisimple and lambda",
            TheoremId::Equiv => "semisimple and lambda implies intra-regular; intra-regular implies semisimple",
            TheoremId::Ext9 => "semisimple: the ideal elements form a semilattice under multiplication",
            TheoremId::Ext13 => "every ideal element semiprime implies intra-regular",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Vacuous,
    Violation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Vacuous => "vacuous",
            Status::Violation => "violation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: &'static str,
    pub elements: Vec<ElementId>,
}

impl Witness {
    fn new(kind: &'static str, elements: &[ElementId]) -> Self {
        Witness {
            kind,
            elements: elements.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub hypothesis_holds: bool,
    pub conclusion_holds: Option<bool>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl TheoremReport {
    fn from_parts(id: TheoremId, hypothesis_holds: bool, witnesses: Vec<Witness>) -> Self {
        if !hypothesis_holds {
            return TheoremReport {
                id,
                hypothesis_holds,
                conclusion_holds: None,
                status: Status::Vacuous,
                witnesses: Vec::new(),
            };
        }
        let ok = witnesses.is_empty();
        TheoremReport {
            id,
            hypothesis_holds,
            conclusion_holds: Some(ok),
            status: if ok {
                Status::Verified
            } else {
                Status::Violation
            },
            witnesses,
        }
    }

    /// Verified with the hypothesis genuinely holding.
    pub fn non_vacuous(&self) -> bool {
        self.status == Status::Verified && self.hypothesis_holds
    }
}

/// Everything the checks need, computed once per structure.
#[derive(Debug, Clone)]
pub struct Context<'a> {
    pub s: &'a LeSemigroup,
    pub properties: PropertyReport,
    pub classes: JClassification,
    pub decomposition: DecompositionReport,
}

impl<'a> Context<'a> {
    pub fn new(s: &'a LeSemigroup) -> Self {
        let classes = j_classes(s);
        Context {
            s,
            properties: ideals::structure_flags(s),
            decomposition: decomposition_from(s, &classes),
            classes,
        }
    }

    pub fn check(&self, id: TheoremId) -> TheoremReport {
        let (hypothesis, witnesses) = match id {
            TheoremId::TLeast => (true, self.t_least()),
            TheoremId::Kp => (true, self.kp()),
            TheoremId::TIdemp => (true, self.t_idemp()),
            TheoremId::Lp => self.lp(),
            TheoremId::Ir => self.ir(),
            TheoremId::Gc => (true, self.gc()),
            TheoremId::Idp => self.idp(),
            TheoremId::Main => self.main(),
            TheoremId::SdFwd => self.sd_fwd(),
            TheoremId::SdBwd => self.sd_bwd(),
            TheoremId::Equiv => self.equiv(),
            TheoremId::Ext9 => self.ext9(),
            TheoremId::Ext13 => self.ext13(),
        };
        TheoremReport::from_parts(id, hypothesis, witnesses)
    }

    pub fn check_all(&self) -> Vec<TheoremReport> {
        TheoremId::ALL
            .into_iter()
            .map(|id| self.check(id))
            .collect()
    }

    fn t_least(&self) -> Vec<Witness> {
        let s = self.s;
        let ideal = &self.properties.ideal_elements;
        let mut out = Vec::new();
        for x in s.elements() {
            let t = ideal_closure(s, x);
            if ideal.binary_search(&t).is_err() {
                out.push(Witness::new("closure-not-ideal", &[x, t]));
            }
            if !s.leq(x, t) {
                out.push(Witness::new("closure-not-above", &[x, t]));
            }
            for &tau in ideal {
                if s.leq(x, tau) && !s.leq(t, tau) {
                    out.push(Witness::new("closure-not-least", &[x, t, tau]));
                }
            }
        }
        out
    }

    fn kp(&self) -> Vec<Witness> {
        let s = self.s;
        let mut out = Vec::new();
        for c in &self.classes.classes {
            let ideals_in: Vec<ElementId> = c
                .members
                .iter()
                .copied()
                .filter(|&x| ideals::is_ideal(s, x))
                .collect();
            if ideals_in != [c.representative] {
                let mut w = vec![c.representative];
                w.extend(ideals_in);
                out.push(Witness::new("ideal-elements-in-class", &w));
            }
            for &a in &c.members {
                if ideal_closure(s, a) != c.representative {
                    out.push(Witness::new(
                        "closure-not-representative",
                        &[c.representative, a],
                    ));
                }
            }
        }
        out
    }

    fn t_idemp(&self) -> Vec<Witness> {
        let mut out = Vec::new();
        for c in &self.classes.classes {
            let tau = c.representative;
            let idem = is_idempotent(self.s, tau);
            match (c.green_witness, idem) {
                (Some((b, cc)), false) => {
                    out.push(Witness::new("green-not-idempotent", &[tau, b, cc]))
                }
                (None, true) => out.push(Witness::new("idempotent-not-green", &[tau])),
                _ => {}
            }
        }
        out
    }

    /// Failing equalities among `τxτ = τ`, `exe = τ`, `τxe = τ`, `exτ = τ`,
    /// `τe = τ`, `eτ = τ`.
    fn lp_failures(&self, tau: ElementId, x: ElementId) -> Vec<Witness> {
        let s = self.s;
        let e = s.top();
        let checks: [(&'static str, ElementId); 6] = [
            ("txt", s.mul3(tau, x, tau)),
            ("exe", s.mul3(e, x, e)),
            ("txe", s.mul3(tau, x, e)),
            ("ext", s.mul3(e, x, tau)),
            ("te", s.mul(tau, e)),
            ("et", s.mul(e, tau)),
        ];
        checks
            .into_iter()
            .filter(|&(_, v)| v != tau)
            .map(|(kind, v)| Witness::new(kind, &[tau, x, v]))
            .collect()
    }

    fn lp(&self) -> (bool, Vec<Witness>) {
        let closed: Vec<_> = self
            .classes
            .classes
            .iter()
            .filter(|c| c.subsemigroup)
            .collect();
        let witnesses = closed
            .iter()
            .flat_map(|c| {
                c.members
                    .iter()
                    .flat_map(|&x| self.lp_failures(c.representative, x))
            })
            .collect();
        (!closed.is_empty(), witnesses)
    }

    fn ir(&self) -> (bool, Vec<Witness>) {
        let hyp = self.properties.regular && self.properties.intra_regular;
        let witnesses = self
            .s
            .elements()
            .flat_map(|x| self.lp_failures(self.classes.closure[x.index()], x))
            .collect();
        (hyp, witnesses)
    }

    fn gc(&self) -> Vec<Witness> {
        let s = self.s;
        let mut out = Vec::new();
        for c in &self.classes.classes {
            let single_idem = c.members.len() == 1 && is_idempotent(s, c.members[0]);
            if c.subgroup && !single_idem {
                let mut w = vec![c.representative];
                w.extend(&c.members);
                out.push(Witness::new("subgroup-not-single-idempotent", &w));
            }
            if single_idem && !c.subgroup {
                out.push(Witness::new(
                    "single-idempotent-not-subgroup",
                    &[c.representative],
                ));
            }
        }
        out
    }

    fn idempotent_ideals(&self) -> Vec<ElementId> {
        self.properties
            .ideal_elements
            .iter()
            .copied()
            .filter(|&e| is_idempotent(self.s, e))
            .collect()
    }

    fn idp(&self) -> (bool, Vec<Witness>) {
        let candidates = self.idempotent_ideals();
        let hyp = self.properties.lambda && !candidates.is_empty();
        let mut out = Vec::new();
        for e in candidates {
            let class = relative_top_class(self.s, e).expect("ideal element");
            if let Some((x, y)) = crate::green::subsemigroup_witness(self.s, &class) {
                out.push(Witness::new("relative-class-not-closed", &[e, x, y]));
            }
        }
        (hyp, out)
    }

    fn main(&self) -> (bool, Vec<Witness>) {
        let mut out = Vec::new();
        for c in self.classes.classes.iter().filter(|c| c.green) {
            let tau = c.representative;
            if let Some((x, y)) = c.subsemigroup_witness {
                out.push(Witness::new("green-class-not-closed", &[tau, x, y]));
            }
            let relative =
                relative_top_class(self.s, tau).expect("representative is an ideal element");
            for &x in &c.members {
                if relative.binary_search(&x).is_err() {
                    out.push(Witness::new("class-not-in-relative-class", &[tau, x]));
                }
            }
        }
        (self.properties.lambda, out)
    }

    fn decomposition_failures(&self) -> Vec<Witness> {
        let d = &self.decomposition;
        let mut out = Vec::new();
        if let Some((a, b)) = d.semilattice_witness {
            out.push(Witness::new("representatives-not-semilattice", &[a, b]));
        }
        if !d.disjoint || !d.cover {
            out.push(Witness::new("not-a-partition", &[]));
        }
        if let Some(w) = d.containment_witness {
            out.push(Witness::new(
                "class-product-outside",
                &[w.x, w.y, w.alpha, w.beta, w.closure_of_product],
            ));
        }
        for c in &d.classes {
            let tau = c.representative;
            let checks = [
                ("class-not-subsemigroup", Some(c.subsemigroup)),
                ("class-not-join-closed", Some(c.join_closed)),
                ("class-not-left-simple", c.left_simple),
                ("class-not-semisimple", c.semisimple),
                ("class-not-intra-regular", c.intra_regular),
                ("class-not-lambda", c.lambda),
            ];
            for (kind, v) in checks {
                // Per-class predicates are only meaningful on closed classes.
                if v == Some(false) {
                    out.push(Witness::new(kind, &[tau]));
                }
            }
        }
        out
    }

    fn sd_fwd(&self) -> (bool, Vec<Witness>) {
        let hyp = self.properties.semisimple && self.properties.lambda;
        (hyp, self.decomposition_failures())
    }

    fn sd_bwd(&self) -> (bool, Vec<Witness>) {
        let d = &self.decomposition;
        let hyp = d.class_product_containment
            && d.classes
                .iter()
                .all(|c| c.subsemigroup && c.left_simple == Some(true));
        let p = &self.properties;
        let mut out = Vec::new();
        if let Some(x) = p.semisimple_witness {
            out.push(Witness::new("not-semisimple", &[x]));
        }
        if let Some((a, b)) = p.lambda_witness {
            out.push(Witness::new("not-lambda", &[a, b]));
        }
        (hyp, out)
    }

    fn equiv(&self) -> (bool, Vec<Witness>) {
        let p = &self.properties;
        let fwd = p.semisimple && p.lambda;
        let bwd = p.intra_regular;
        let mut out = Vec::new();
        if fwd {
            if let Some(x) = p.intra_regular_witness {
                out.push(Witness::new("semisimple-lambda-not-intra-regular", &[x]));
            }
        }
        if bwd {
            if let Some(x) = p.semisimple_witness {
                out.push(Witness::new("intra-regular-not-semisimple", &[x]));
            }
        }
        (fwd || bwd, out)
    }

    fn ext9(&self) -> (bool, Vec<Witness>) {
        let w = crate::decomposition::semilattice_witness(self.s, &self.properties.ideal_elements);
        let out = w
            .map(|(a, b)| vec![Witness::new("ideal-elements-not-semilattice", &[a, b])])
            .unwrap_or_default();
        (self.properties.semisimple, out)
    }

    fn ext13(&self) -> (bool, Vec<Witness>) {
        let s = self.s;
        let hyp = self
            .properties
            .ideal_elements
            .iter()
            .all(|&t| ideals::is_semiprime(s, t));
        let out = self
            .properties
            .intra_regular_witness
            .map(|x| vec![Witness::new("not-intra-regular", &[x])])
            .unwrap_or_default();
        (hyp, out)
    }
}

pub fn check_theorem(s: &LeSemigroup, id: TheoremId) -> TheoremReport {
    Context::new(s).check(id)
}

pub fn check_all(s: &LeSemigroup) -> Vec<TheoremReport> {
    Context::new(s).check_all()
}

pub fn violation_free(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Violation)
}
