use crate::config;
use crate::error::{Error, OrderAxiom, Result};
use crate::semigroup::ElementId;

/// A finite lattice given by its full order relation, with precomputed
/// meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    top: ElementId,
    bottom: ElementId,
}

impl FiniteLattice {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.n).map(ElementId::new)
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        self.join[a.index() * self.n + b.index()]
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    /// The order relation as a row-major boolean matrix.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }

    /// Join of a nonempty set of elements.
    pub fn join_all<I: IntoIterator<Item = ElementId>>(&self, items: I) -> Option<ElementId> {
        items.into_iter().reduce(|a, b| self.join(a, b))
    }
}

/// Validates a reflexive-transitive order matrix and computes the lattice
/// operations. Witnesses are the lexicographically first failing tuple.
pub fn build_lattice(leq: &[Vec<bool>]) -> Result<FiniteLattice> {
    let n = leq.len();
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > config::max_order() {
        return Err(Error::OrderTooLarge {
            n,
            max: config::max_order(),
        });
    }
    for (row, r) in leq.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
    }
    let flat: Vec<bool> = leq.iter().flatten().copied().collect();
    let le = |a: usize, b: usize| flat[a * n + b];
    let id = ElementId::new;

    for x in 0..n {
        if !le(x, x) {
            return Err(Error::NotPartialOrder {
                axiom: OrderAxiom::Reflexivity,
                witness: (id(x), id(x), id(x)),
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && le(x, y) && le(y, x) {
                return Err(Error::NotPartialOrder {
                    axiom: OrderAxiom::Antisymmetry,
                    witness: (id(x), id(y), id(x)),
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !le(x, y) {
                continue;
            }
            for z in 0..n {
                if le(y, z) && !le(x, z) {
                    return Err(Error::NotPartialOrder {
                        axiom: OrderAxiom::Transitivity,
                        witness: (id(x), id(y), id(z)),
                    });
                }
            }
        }
    }

    let mut meet = vec![ElementId::new(0); n * n];
    let mut join = vec![ElementId::new(0); n * n];
    for a in 0..n {
        for b in 0..n {
            let lub = (0..n)
                .filter(|&c| le(a, c) && le(b, c))
                .find(|&c| (0..n).all(|d| !(le(a, d) && le(b, d)) || le(c, d)));
            let Some(lub) = lub else {
                return Err(Error::NotLattice {
                    pair: (id(a), id(b)),
                    missing_join: true,
                });
            };
            let glb = (0..n)
                .filter(|&c| le(c, a) && le(c, b))
                .find(|&c| (0..n).all(|d| !(le(d, a) && le(d, b)) || le(d, c)));
            let Some(glb) = glb else {
                return Err(Error::NotLattice {
                    pair: (id(a), id(b)),
                    missing_join: false,
                });
            };
            join[a * n + b] = id(lub);
            meet[a * n + b] = id(glb);
        }
    }

    // In a finite lattice the join of everything is the maximum.
    let top = (1..n).fold(0, |acc, x| join[acc * n + x].index());
    let bottom = (1..n).fold(0, |acc, x| meet[acc * n + x].index());

    Ok(FiniteLattice {
        n,
        leq: flat,
        meet,
        join,
        top: id(top),
        bottom: id(bottom),
    })
}

/// Convenience for building a total order `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Result<FiniteLattice> {
    let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
    build_lattice(&leq)
}
