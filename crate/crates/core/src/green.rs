//! The relation 𝒥 (`x 𝒥 y` iff `t(x) = t(y)`), its classes, and the
//! down-set construction `]e]` with the relative relation 𝒥⁽ᵉ⁾.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{ideal_closure, is_ideal};
use crate::lattice::build_lattice;
use crate::semigroup::{build_le_semigroup, ElementId, LeSemigroup, PoeView};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupWitness {
    pub identity: ElementId,
    /// `(x, x⁻¹)` for every member, ascending by `x`.
    pub inverses: Vec<(ElementId, ElementId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JClass {
    pub members: Vec<ElementId>,
    pub representative: ElementId,
    pub green: bool,
    pub green_witness: Option<(ElementId, ElementId)>,
    pub subsemigroup: bool,
    pub subsemigroup_witness: Option<(ElementId, ElementId)>,
    pub subgroup: bool,
    pub group_witness: Option<GroupWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JClassification {
    /// `closure[x] = t(x)`.
    pub closure: Vec<ElementId>,
    /// Ordered by representative.
    pub classes: Vec<JClass>,
}

impl JClassification {
    /// The class containing `x`.
    pub fn class_of(&self, x: ElementId) -> &JClass {
        let rep = self.closure[x.index()];
        self.classes
            .iter()
            .find(|c| c.representative == rep)
            .expect("every element lies in a class")
    }

    pub fn class_with_representative(&self, rep: ElementId) -> Option<&JClass> {
        self.classes.iter().find(|c| c.representative == rep)
    }
}

fn mask(n: usize, subset: &[ElementId]) -> Vec<bool> {
    let mut m = vec![false; n];
    for x in subset {
        m[x.index()] = true;
    }
    m
}

pub fn j_classes(s: &LeSemigroup) -> JClassification {
    let closure: Vec<ElementId> = s.elements().map(|x| ideal_closure(s, x)).collect();
    let mut reps: Vec<ElementId> = closure.clone();
    reps.sort();
    reps.dedup();
    let classes = reps
        .into_iter()
        .map(|rep| {
            let members: Vec<ElementId> =
                s.elements().filter(|x| closure[x.index()] == rep).collect();
            let green_witness = green_condition(s, &members);
            let subsemigroup_witness = subsemigroup_witness(s, &members);
            let group_witness = subgroup(s, &members);
            JClass {
                representative: rep,
                green: green_witness.is_some(),
                green_witness,
                subsemigroup: subsemigroup_witness.is_none(),
                subsemigroup_witness,
                subgroup: group_witness.is_some(),
                group_witness,
                members,
            }
        })
        .collect();
    JClassification { closure, classes }
}

/// First `(b, c)` in the class with `b*c` back in the class.
pub fn green_condition(s: &LeSemigroup, class: &[ElementId]) -> Option<(ElementId, ElementId)> {
    let inside = mask(s.size(), class);
    class
        .iter()
        .flat_map(|&b| class.iter().map(move |&c| (b, c)))
        .find(|&(b, c)| inside[s.product(b, c).index()])
}

/// First `(x, y)` in the subset whose product leaves it.
pub fn subsemigroup_witness(
    s: &LeSemigroup,
    subset: &[ElementId],
) -> Option<(ElementId, ElementId)> {
    let inside = mask(s.size(), subset);
    subset
        .iter()
        .flat_map(|&x| subset.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| !inside[s.product(x, y).index()])
}

pub fn is_subsemigroup(s: &LeSemigroup, subset: &[ElementId]) -> bool {
    subsemigroup_witness(s, subset).is_none()
}

/// Group structure of the subset under the restricted multiplication, if
/// any. The order plays no part.
pub fn subgroup(s: &LeSemigroup, subset: &[ElementId]) -> Option<GroupWitness> {
    if subset.is_empty() || !is_subsemigroup(s, subset) {
        return None;
    }
    let identity = subset.iter().copied().find(|&i| {
        subset
            .iter()
            .all(|&x| s.product(i, x) == x && s.product(x, i) == x)
    })?;
    let mut inverses = Vec::with_capacity(subset.len());
    for &x in subset {
        let inv = subset
            .iter()
            .copied()
            .find(|&y| s.product(x, y) == identity && s.product(y, x) == identity)?;
        inverses.push((x, inv));
    }
    Some(GroupWitness { identity, inverses })
}

pub fn is_subgroup(s: &LeSemigroup, subset: &[ElementId]) -> bool {
    subgroup(s, subset).is_some()
}

/// `]e] = {x : x <= e}` as an le-semigroup in its own right, with top `e`.
#[derive(Debug, Clone)]
pub struct DownSet<'a> {
    pub parent: &'a LeSemigroup,
    pub top: ElementId,
    /// Parent ids, ascending.
    pub members: Vec<ElementId>,
    /// Local structure; local id `i` is parent id `embed[i]`.
    pub structure: LeSemigroup,
    pub embed: Vec<ElementId>,
}

impl DownSet<'_> {
    pub fn to_parent(&self, local: ElementId) -> ElementId {
        self.embed[local.index()]
    }

    pub fn to_local(&self, parent: ElementId) -> Option<ElementId> {
        self.embed.binary_search(&parent).ok().map(ElementId::new)
    }
}

pub fn down_set(s: &LeSemigroup, e: ElementId) -> Result<DownSet<'_>> {
    s.element(e.index())?;
    if !is_ideal(s, e) {
        return Err(Error::NotIdealElement(e));
    }
    let members: Vec<ElementId> = s.elements().filter(|&x| s.leq(x, e)).collect();
    let local = |parent: ElementId| {
        members
            .binary_search(&parent)
            .expect("down-set is closed under the operations")
    };
    let leq: Vec<Vec<bool>> = members
        .iter()
        .map(|&a| members.iter().map(|&b| s.leq(a, b)).collect())
        .collect();
    let mul: Vec<Vec<usize>> = members
        .iter()
        .map(|&a| members.iter().map(|&b| local(s.product(a, b))).collect())
        .collect();
    let lattice = build_lattice(&leq)?;
    let structure = build_le_semigroup(lattice, &mul)?;
    Ok(DownSet {
        parent: s,
        top: e,
        embed: members.clone(),
        members,
        structure,
    })
}

/// The 𝒥⁽ᵉ⁾-class of `e` inside `]e]`, in parent ids.
pub fn relative_top_class(s: &LeSemigroup, e: ElementId) -> Result<Vec<ElementId>> {
    let ds = down_set(s, e)?;
    let local = &ds.structure;
    let top = local.top();
    Ok(local
        .elements()
        .filter(|&x| ideal_closure(local, x) == top)
        .map(|x| ds.to_parent(x))
        .collect())
}
