//! Ideal closure and the element/structure predicates.
//!
//! Everything here is generic over [`PoeView`], so the same code evaluates a
//! whole le-semigroup (top = greatest element) or a 𝒥-class seen as a
//! ∨e-semigroup (top = its representative ideal element).

use serde::Serialize;

use crate::semigroup::{ElementId, PoeView};

/// How intra-regularity is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IntraRegularity {
    /// `x <= e x^2 e`.
    #[default]
    Standard,
    /// `e <= e x^2 e`, kept only for experimentation.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementFlags {
    pub regular: bool,
    pub intra_regular: bool,
    pub semisimple: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub regular: bool,
    pub intra_regular: bool,
    pub semisimple: bool,
    pub left_simple: bool,
    pub lambda: bool,
    pub ideal_elements: Vec<ElementId>,
    pub left_ideal_elements: Vec<ElementId>,
    pub lambda_witness: Option<(ElementId, ElementId)>,
    pub regular_witness: Option<ElementId>,
    pub intra_regular_witness: Option<ElementId>,
    pub semisimple_witness: Option<ElementId>,
}

/// `t(x) = e x e ∨ x e ∨ e x ∨ x`: the least ideal element above `x`.
pub fn ideal_closure<V: PoeView + ?Sized>(s: &V, x: ElementId) -> ElementId {
    let e = s.top();
    let exe = s.mul3(e, x, e);
    let xe = s.mul(x, e);
    let ex = s.mul(e, x);
    s.join(s.join(s.join(exe, xe), ex), x)
}

pub fn is_left_ideal<V: PoeView + ?Sized>(s: &V, x: ElementId) -> bool {
    s.leq(s.mul(s.top(), x), x)
}

pub fn is_right_ideal<V: PoeView + ?Sized>(s: &V, x: ElementId) -> bool {
    s.leq(s.mul(x, s.top()), x)
}

pub fn is_ideal<V: PoeView + ?Sized>(s: &V, x: ElementId) -> bool {
    is_left_ideal(s, x) && is_right_ideal(s, x)
}

pub fn is_regular<V: PoeView + ?Sized>(s: &V, x: ElementId) -> bool {
    s.leq(x, s.mul3(x, s.top(), x))
}

pub fn is_intra_regular<V: PoeView + ?Sized>(s: &V, x: ElementId, mode: IntraRegularity) -> bool {
    let e = s.top();
    let ex2e = s.mul(s.mul3(e, x, x), e);
    match mode {
        IntraRegularity::Standard => s.leq(x, ex2e),
        IntraRegularity::Literal => s.leq(e, ex2e),
    }
}

pub fn is_semisimple_element<V: PoeView + ?Sized>(s: &V, x: ElementId) -> bool {
    let e = s.top();
    let exexe = s.mul(s.mul(s.mul3(e, x, e), x), e);
    s.leq(x, exexe)
}

pub fn is_idempotent<V: PoeView + ?Sized>(s: &V, x: ElementId) -> bool {
    s.mul(x, x) == x
}

pub fn element_flags<V: PoeView + ?Sized>(s: &V, x: ElementId) -> ElementFlags {
    element_flags_with(s, x, IntraRegularity::Standard)
}

pub fn element_flags_with<V: PoeView + ?Sized>(
    s: &V,
    x: ElementId,
    mode: IntraRegularity,
) -> ElementFlags {
    let left_ideal = is_left_ideal(s, x);
    let right_ideal = is_right_ideal(s, x);
    ElementFlags {
        regular: is_regular(s, x),
        intra_regular: is_intra_regular(s, x, mode),
        semisimple: is_semisimple_element(s, x),
        left_ideal,
        right_ideal,
        ideal: left_ideal && right_ideal,
    }
}

/// First `a` with `a*a <= t` but `a` not below `t`, if any.
pub fn semiprime_witness<V: PoeView + ?Sized>(s: &V, t: ElementId) -> Option<ElementId> {
    s.carrier()
        .iter()
        .copied()
        .find(|&a| s.leq(s.mul(a, a), t) && !s.leq(a, t))
}

pub fn is_semiprime<V: PoeView + ?Sized>(s: &V, t: ElementId) -> bool {
    semiprime_witness(s, t).is_none()
}

pub fn ideal_elements<V: PoeView + ?Sized>(s: &V) -> Vec<ElementId> {
    s.carrier()
        .iter()
        .copied()
        .filter(|&x| is_ideal(s, x))
        .collect()
}

pub fn left_ideal_elements<V: PoeView + ?Sized>(s: &V) -> Vec<ElementId> {
    s.carrier()
        .iter()
        .copied()
        .filter(|&x| is_left_ideal(s, x))
        .collect()
}

/// First pair of left ideal elements that do not commute.
pub fn lambda_witness<V: PoeView + ?Sized>(
    s: &V,
    left: &[ElementId],
) -> Option<(ElementId, ElementId)> {
    for (i, &a) in left.iter().enumerate() {
        for &b in &left[i + 1..] {
            if s.mul(a, b) != s.mul(b, a) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn structure_flags<V: PoeView + ?Sized>(s: &V) -> PropertyReport {
    structure_flags_with(s, IntraRegularity::Standard)
}

pub fn structure_flags_with<V: PoeView + ?Sized>(s: &V, mode: IntraRegularity) -> PropertyReport {
    let elems = s.carrier();
    let first_failing =
        |pred: &dyn Fn(ElementId) -> bool| elems.iter().copied().find(|&x| !pred(x));
    let regular_witness = first_failing(&|x| is_regular(s, x));
    let intra_regular_witness = first_failing(&|x| is_intra_regular(s, x, mode));
    let semisimple_witness = first_failing(&|x| is_semisimple_element(s, x));
    let left = left_ideal_elements(s);
    let lambda_witness = lambda_witness(s, &left);
    PropertyReport {
        regular: regular_witness.is_none(),
        intra_regular: intra_regular_witness.is_none(),
        semisimple: semisimple_witness.is_none(),
        left_simple: left.len() == 1 && left[0] == s.top(),
        lambda: lambda_witness.is_none(),
        ideal_elements: ideal_elements(s),
        left_ideal_elements: left,
        lambda_witness,
        regular_witness,
        intra_regular_witness,
        semisimple_witness,
    }
}
