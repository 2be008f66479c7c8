//! The canonical small structures used throughout the tests and docs.

use crate::lattice::chain;
use crate::semigroup::{build_le_semigroup, LeSemigroup};

fn on_chain(n: usize, f: impl Fn(usize, usize) -> usize) -> LeSemigroup {
    let mul: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
    build_le_semigroup(chain(n).expect("chain"), &mul).expect("fixture is a valid le-semigroup")
}

/// One element, necessarily idempotent.
pub fn s1() -> LeSemigroup {
    on_chain(1, |_, _| 0)
}

/// 2-chain with multiplication = meet.
pub fn c2_meet() -> LeSemigroup {
    on_chain(2, |x, y| x.min(y))
}

/// 2-chain, every product is the top.
pub fn c2_const() -> LeSemigroup {
    on_chain(2, |_, _| 1)
}

/// 2-chain, right-zero: `x*y = y`.
pub fn c2_rz() -> LeSemigroup {
    on_chain(2, |_, y| y)
}

/// 3-chain, every product is the bottom.
pub fn c3_null() -> LeSemigroup {
    on_chain(3, |_, _| 0)
}

pub fn all() -> Vec<(&'static str, LeSemigroup)> {
    vec![
        ("S1", s1()),
        ("C2MEET", c2_meet()),
        ("C2CONST", c2_const()),
        ("C2RZ", c2_rz()),
        ("C3NULL", c3_null()),
    ]
}
