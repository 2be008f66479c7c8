//! The 𝒥-partition as a candidate semilattice decomposition.
//!
//! Each class is materialized as a ∨e-semigroup whose top is its
//! representative ideal element; per-class predicates only run when the
//! class is closed under multiplication and are `None` otherwise.

use serde::Serialize;

use crate::green::{j_classes, JClassification};
use crate::ideals::{self, ideal_closure};
use crate::semigroup::{ElementId, LeSemigroup, PoeView};

/// A 𝒥-class seen as a ∨e-semigroup with inherited `·`, `∨` and `≤`.
/// Meets are never used: a class need not be meet-closed.
#[derive(Debug, Clone)]
pub struct ClassView<'a> {
    parent: &'a LeSemigroup,
    members: Vec<ElementId>,
    top: ElementId,
}

impl<'a> ClassView<'a> {
    pub fn new(parent: &'a LeSemigroup, members: Vec<ElementId>, top: ElementId) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        ClassView {
            parent,
            members,
            top,
        }
    }

    pub fn is_join_closed(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.contains(self.parent.join(a, b)))
        })
    }
}

impl PoeView for ClassView<'_> {
    fn carrier(&self) -> &[ElementId] {
        &self.members
    }

    fn top(&self) -> ElementId {
        self.top
    }

    fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.parent.product(x, y)
    }

    fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.parent.leq(x, y)
    }

    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.parent.join(x, y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub representative: ElementId,
    pub members: Vec<ElementId>,
    pub subsemigroup: bool,
    pub join_closed: bool,
    pub left_simple: Option<bool>,
    pub semisimple: Option<bool>,
    pub intra_regular: Option<bool>,
    pub lambda: Option<bool>,
    /// Left ideal elements of the class as a ∨e-semigroup.
    pub left_ideal_elements: Option<Vec<ElementId>>,
}

impl ClassRecord {
    /// Subsemigroup, join-closed, and every per-class property holds.
    pub fn passes(&self) -> bool {
        self.subsemigroup
            && self.join_closed
            && self.left_simple == Some(true)
            && self.semisimple == Some(true)
            && self.intra_regular == Some(true)
            && self.lambda == Some(true)
    }
}

/// `x ∈ J_α`, `y ∈ J_β` with `t(xy) ≠ αβ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContainmentWitness {
    pub x: ElementId,
    pub y: ElementId,
    pub alpha: ElementId,
    pub beta: ElementId,
    pub closure_of_product: ElementId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    /// The representatives, i.e. the ideal elements.
    pub semilattice_elements: Vec<ElementId>,
    /// Representatives are closed under `·`, commute and are idempotent.
    pub semilattice: bool,
    pub semilattice_witness: Option<(ElementId, ElementId)>,
    pub classes: Vec<ClassRecord>,
    pub disjoint: bool,
    pub cover: bool,
    pub class_product_containment: bool,
    pub containment_witness: Option<ContainmentWitness>,
}

impl DecompositionReport {
    pub fn passes(&self) -> bool {
        self.semilattice
            && self.disjoint
            && self.cover
            && self.class_product_containment
            && self.classes.iter().all(ClassRecord::passes)
    }

    pub fn class(&self, representative: ElementId) -> Option<&ClassRecord> {
        self.classes
            .iter()
            .find(|c| c.representative == representative)
    }
}

/// First pair of the given ideal elements witnessing that they do not form
/// a semilattice under `·`: a product outside the set, a non-commuting pair,
/// or (for `(a, a)`) a non-idempotent element.
pub fn semilattice_witness(s: &LeSemigroup, elems: &[ElementId]) -> Option<(ElementId, ElementId)> {
    for &a in elems {
        for &b in elems {
            let ab = s.product(a, b);
            if elems.binary_search(&ab).is_err() || ab != s.product(b, a) || (a == b && ab != a) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn class_record(
    s: &LeSemigroup,
    members: &[ElementId],
    representative: ElementId,
    subsemigroup: bool,
) -> ClassRecord {
    let view = ClassView::new(s, members.to_vec(), representative);
    let join_closed = view.is_join_closed();
    let flags = subsemigroup.then(|| ideals::structure_flags(&view));
    ClassRecord {
        representative,
        members: members.to_vec(),
        subsemigroup,
        join_closed,
        left_simple: flags.as_ref().map(|f| f.left_simple),
        semisimple: flags.as_ref().map(|f| f.semisimple),
        intra_regular: flags.as_ref().map(|f| f.intra_regular),
        lambda: flags.as_ref().map(|f| f.lambda),
        left_ideal_elements: flags.map(|f| f.left_ideal_elements),
    }
}

pub fn check_decomposition(s: &LeSemigroup) -> DecompositionReport {
    decomposition_from(s, &j_classes(s))
}

pub fn decomposition_from(s: &LeSemigroup, jc: &JClassification) -> DecompositionReport {
    let reps: Vec<ElementId> = jc.classes.iter().map(|c| c.representative).collect();
    let classes: Vec<ClassRecord> = jc
        .classes
        .iter()
        .map(|c| class_record(s, &c.members, c.representative, c.subsemigroup))
        .collect();

    let mut seen = vec![0usize; s.size()];
    for c in &jc.classes {
        for m in &c.members {
            seen[m.index()] += 1;
        }
    }
    let disjoint = seen.iter().all(|&k| k <= 1);
    let cover = seen.iter().all(|&k| k >= 1);

    let containment_witness = s.elements().find_map(|x| {
        s.elements().find_map(|y| {
            let alpha = jc.closure[x.index()];
            let beta = jc.closure[y.index()];
            let closure_of_product = ideal_closure(s, s.product(x, y));
            (closure_of_product != s.product(alpha, beta)).then_some(ContainmentWitness {
                x,
                y,
                alpha,
                beta,
                closure_of_product,
            })
        })
    });
    let semilattice_witness = semilattice_witness(s, &reps);

    DecompositionReport {
        semilattice_elements: reps,
        semilattice: semilattice_witness.is_none(),
        semilattice_witness,
        classes,
        disjoint,
        cover,
        class_product_containment: containment_witness.is_none(),
        containment_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn single_element_passes() {
        let r = check_decomposition(&fixtures::s1());
        assert!(r.passes());
        assert_eq!(r.semilattice_elements, vec![e(0)]);
    }

    #[test]
    fn meet_chain_decomposes() {
        let r = check_decomposition(&fixtures::c2_meet());
        assert_eq!(r.semilattice_elements, vec![e(0), e(1)]);
        assert!(r.class_product_containment);
        for c in &r.classes {
            assert_eq!(c.left_simple, Some(true));
            assert_eq!(c.semisimple, Some(true));
            assert_eq!(c.intra_regular, Some(true));
            assert_eq!(c.lambda, Some(true));
        }
        assert!(r.passes());
    }

    /// Values from a full hand scan of the null 3-chain: every element is
    /// its own class, `t(xy) = t(0) = 0 = αβ` always, only `{0}` is closed.
    #[test]
    fn null_chain_record() {
        let r = check_decomposition(&fixtures::c3_null());
        assert_eq!(r.semilattice_elements, vec![e(0), e(1), e(2)]);
        assert!(r.class_product_containment);
        assert!(!r.semilattice);
        assert_eq!(r.semilattice_witness, Some((e(1), e(1))));
        let closed: Vec<bool> = r.classes.iter().map(|c| c.subsemigroup).collect();
        assert_eq!(closed, vec![true, false, false]);
        assert_eq!(r.classes[0].left_simple, Some(true));
        assert_eq!(r.classes[1].left_simple, None);
        assert!(!r.passes());
    }

    #[test]
    fn constant_chain_is_one_left_simple_class() {
        let r = check_decomposition(&fixtures::c2_const());
        assert_eq!(r.classes.len(), 1);
        let c = &r.classes[0];
        assert_eq!(c.left_ideal_elements.as_deref(), Some(&[e(1)][..]));
        assert!(c.passes());
    }

    #[test]
    fn right_zero_chain_is_one_class_without_lambda() {
        // e*0*e = 1, so t(0) = 1 and the whole chain is one class.
        let r = check_decomposition(&fixtures::c2_rz());
        assert_eq!(r.classes.len(), 1);
        let c = &r.classes[0];
        assert_eq!(c.lambda, Some(false));
        assert_eq!(c.left_simple, Some(false));
    }
}
