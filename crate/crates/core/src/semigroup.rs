use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result, Side};
use crate::lattice::FiniteLattice;

/// Index of an element in the carrier `{0, ..., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(usize);

impl ElementId {
    #[inline]
    pub const fn new(index: usize) -> Self {
        ElementId(index)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i)
    }
}

/// Multiplication, order and join on some subset of a carrier, with a
/// greatest element. Implemented by whole structures and by 𝒥-classes
/// viewed as ∨e-semigroups, so the element predicates can run on either.
pub trait PoeView {
    /// Members in ascending order.
    fn carrier(&self) -> &[ElementId];
    fn top(&self) -> ElementId;
    fn mul(&self, x: ElementId, y: ElementId) -> ElementId;
    fn leq(&self, x: ElementId, y: ElementId) -> bool;
    fn join(&self, x: ElementId, y: ElementId) -> ElementId;

    fn mul3(&self, x: ElementId, y: ElementId, z: ElementId) -> ElementId {
        self.mul(self.mul(x, y), z)
    }

    fn contains(&self, x: ElementId) -> bool {
        self.carrier().binary_search(&x).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicationTable {
    n: usize,
    mul: Vec<ElementId>,
}

impl MultiplicationTable {
    #[inline]
    pub fn get(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul[x.index() * self.n + y.index()]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.n)
            .map(|r| r.iter().map(|e| e.index()).collect())
            .collect()
    }
}

/// A validated finite le-semigroup. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeSemigroup {
    lattice: FiniteLattice,
    table: MultiplicationTable,
    names: Option<Vec<String>>,
    carrier: Vec<ElementId>,
}

impl LeSemigroup {
    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn table(&self) -> &MultiplicationTable {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone + '_ {
        self.carrier.iter().copied()
    }

    pub fn bottom(&self) -> ElementId {
        self.lattice.bottom()
    }

    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.lattice.meet(x, y)
    }

    #[inline]
    pub fn product(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table.get(x, y)
    }

    /// Attaches element labels. Returns `None` if the count is wrong.
    pub fn with_names(mut self, names: Vec<String>) -> Option<Self> {
        if names.len() != self.size() {
            return None;
        }
        self.names = Some(names);
        Some(self)
    }

    /// Checked conversion from a raw index.
    pub fn element(&self, index: usize) -> Result<ElementId> {
        if index < self.size() {
            Ok(ElementId::new(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                n: self.size(),
            })
        }
    }

    /// The isomorphic copy where old element `x` becomes `perm[x]`.
    /// `perm` must be a permutation of the carrier.
    pub fn relabel(&self, perm: &[usize]) -> Result<LeSemigroup> {
        let n = self.size();
        assert_eq!(perm.len(), n, "permutation length");
        let mut leq = vec![vec![false; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for x in self.elements() {
            for y in self.elements() {
                leq[perm[x.index()]][perm[y.index()]] = self.lattice.leq(x, y);
                mul[perm[x.index()]][perm[y.index()]] = perm[self.product(x, y).index()];
            }
        }
        let lattice = crate::lattice::build_lattice(&leq)?;
        let mut s = build_le_semigroup(lattice, &mul)?;
        if let Some(names) = &self.names {
            let mut relabelled = vec![String::new(); n];
            for (old, name) in names.iter().enumerate() {
                relabelled[perm[old]] = name.clone();
            }
            s.names = Some(relabelled);
        }
        Ok(s)
    }
}

impl PoeView for LeSemigroup {
    fn carrier(&self) -> &[ElementId] {
        &self.carrier
    }

    fn top(&self) -> ElementId {
        self.lattice.top()
    }

    #[inline]
    fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table.get(x, y)
    }

    #[inline]
    fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.lattice.leq(x, y)
    }

    #[inline]
    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.lattice.join(x, y)
    }

    fn contains(&self, x: ElementId) -> bool {
        x.index() < self.size()
    }
}

/// `product(S, x, y)`.
pub fn product(s: &LeSemigroup, x: ElementId, y: ElementId) -> ElementId {
    s.product(x, y)
}

/// Validates a multiplication table against a lattice: associativity, then
/// order compatibility, then two-sided distributivity over binary joins.
/// Each failure carries the lexicographically first witness.
pub fn build_le_semigroup(lattice: FiniteLattice, mul: &[Vec<usize>]) -> Result<LeSemigroup> {
    let n = lattice.size();
    if mul.len() != n {
        return Err(Error::RowCount { rows: mul.len(), n });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, r) in mul.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(Error::EntryOutOfRange { row, col, value, n });
            }
            flat.push(ElementId::new(value));
        }
    }
    let table = MultiplicationTable { n, mul: flat };
    let m = |x: ElementId, y: ElementId| table.get(x, y);
    let elems: Vec<ElementId> = lattice.elements().collect();

    for &x in &elems {
        for &y in &elems {
            for &z in &elems {
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return Err(Error::NotAssociative { witness: (x, y, z) });
                }
            }
        }
    }

    for &a in &elems {
        for &b in &elems {
            if !lattice.leq(a, b) {
                continue;
            }
            for &x in &elems {
                if !lattice.leq(m(x, a), m(x, b)) {
                    return Err(Error::NotCompatible {
                        pair: (a, b),
                        multiplier: x,
                        side: Side::Left,
                    });
                }
                if !lattice.leq(m(a, x), m(b, x)) {
                    return Err(Error::NotCompatible {
                        pair: (a, b),
                        multiplier: x,
                        side: Side::Right,
                    });
                }
            }
        }
    }

    for &x in &elems {
        for &y in &elems {
            for &z in &elems {
                let yz = lattice.join(y, z);
                if m(x, yz) != lattice.join(m(x, y), m(x, z)) {
                    return Err(Error::NotDistributive {
                        witness: (x, y, z),
                        side: Side::Left,
                    });
                }
                if m(yz, x) != lattice.join(m(y, x), m(z, x)) {
                    return Err(Error::NotDistributive {
                        witness: (x, y, z),
                        side: Side::Right,
                    });
                }
            }
        }
    }

    Ok(LeSemigroup {
        carrier: elems,
        lattice,
        table,
        names: None,
    })
}
