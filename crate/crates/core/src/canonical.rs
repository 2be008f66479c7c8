//! Canonical labelings for lattices and le-semigroups.
//!
//! Every isomorphism of ordered structures carries linear extensions of the
//! order to linear extensions, so minimizing the relabeled encoding over all
//! linear extensions gives an isomorphism invariant. The order part is
//! compared first, the multiplication table second.

use std::fmt;

use crate::lattice::FiniteLattice;
use crate::semigroup::LeSemigroup;

/// `[n] ++ leq (n*n bytes of 0/1) ++ mul (n*n indices)`, minimized over
/// order-compatible relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex SHA-256 of the key bytes.
    pub fn digest_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        Sha256::digest(&self.0)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Calls `visit` with every linear extension of the order, as the sequence
/// of old elements in new-label order. Extensions are produced in
/// lexicographic order.
pub fn for_each_linear_extension(
    n: usize,
    leq: impl Fn(usize, usize) -> bool,
    mut visit: impl FnMut(&[usize]),
) {
    // below[x] = number of strict lower bounds of x not yet placed
    let mut below: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| y != x && leq(y, x)).count())
        .collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    fn go(
        n: usize,
        leq: &dyn Fn(usize, usize) -> bool,
        below: &mut [usize],
        placed: &mut [bool],
        order: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if order.len() == n {
            visit(order);
            return;
        }
        for x in 0..n {
            if placed[x] || below[x] != 0 {
                continue;
            }
            placed[x] = true;
            order.push(x);
            for (y, b) in below.iter_mut().enumerate() {
                if y != x && leq(x, y) {
                    *b -= 1;
                }
            }
            go(n, leq, below, placed, order, visit);
            for (y, b) in below.iter_mut().enumerate() {
                if y != x && leq(x, y) {
                    *b += 1;
                }
            }
            order.pop();
            placed[x] = false;
        }
    }
    go(n, &leq, &mut below, &mut placed, &mut order, &mut visit);
}

fn encode_leq(lattice: &FiniteLattice, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * n);
    for &a in order {
        for &b in order {
            out.push(lattice.leq(a.into(), b.into()) as u8);
        }
    }
    out
}

fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    pos
}

/// Linear extensions whose relabeled order encoding is minimal.
fn minimal_extensions(lattice: &FiniteLattice) -> (Vec<u8>, Vec<Vec<usize>>) {
    let n = lattice.size();
    let mut best: Option<Vec<u8>> = None;
    let mut orders: Vec<Vec<usize>> = Vec::new();
    for_each_linear_extension(
        n,
        |a, b| lattice.leq(a.into(), b.into()),
        |order| {
            let enc = encode_leq(lattice, order);
            match &best {
                Some(b) if enc > *b => {}
                Some(b) if enc == *b => orders.push(order.to_vec()),
                _ => {
                    best = Some(enc);
                    orders.clear();
                    orders.push(order.to_vec());
                }
            }
        },
    );
    (best.expect("a finite order has a linear extension"), orders)
}

/// The permutation `perm` (old -> new) putting the lattice into canonical
/// labeling, and whether it is already canonical.
pub fn canonical_lattice_permutation(lattice: &FiniteLattice) -> (Vec<usize>, bool) {
    let (best, orders) = minimal_extensions(lattice);
    let identity_enc = encode_leq(lattice, &(0..lattice.size()).collect::<Vec<_>>());
    (positions(&orders[0]), identity_enc == best)
}

/// Order automorphisms as old -> new maps, in lexicographic order; the
/// identity comes first.
pub fn lattice_automorphisms(lattice: &FiniteLattice) -> Vec<Vec<usize>> {
    fn go(l: &FiniteLattice, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = l.size();
        let a = image.len();
        if a == n {
            out.push(image.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let consistent = image.iter().enumerate().all(|(b, &img)| {
                l.leq(a.into(), b.into()) == l.leq(cand.into(), img.into())
                    && l.leq(b.into(), a.into()) == l.leq(img.into(), cand.into())
            });
            if consistent {
                used[cand] = true;
                image.push(cand);
                go(l, image, used, out);
                image.pop();
                used[cand] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        lattice,
        &mut Vec::new(),
        &mut vec![false; lattice.size()],
        &mut out,
    );
    out
}

pub fn canonical_key(s: &LeSemigroup) -> CanonicalKey {
    let n = s.size();
    let (leq_enc, orders) = minimal_extensions(s.lattice());
    let mut best_mul: Option<Vec<u8>> = None;
    for order in &orders {
        let pos = positions(order);
        let mut enc = Vec::with_capacity(n * n);
        for &a in order {
            for &b in order {
                enc.push(pos[s.product(a.into(), b.into()).index()] as u8);
            }
        }
        if best_mul.as_ref().is_none_or(|b| enc < *b) {
            best_mul = Some(enc);
        }
    }
    let mut bytes = Vec::with_capacity(1 + 2 * n * n);
    bytes.push(n as u8);
    bytes.extend(leq_enc);
    bytes.extend(best_mul.expect("at least one extension"));
    CanonicalKey(bytes)
}
