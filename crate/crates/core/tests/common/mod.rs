//! Naive full-scan oracles, written without the library's lattice or
//! semigroup code so they can judge it.
#![allow(dead_code)]

use std::sync::OnceLock;

use lesgp::{Dedupe, EnumerationTask, LeSemigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raw {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
    pub mul: Vec<Vec<usize>>,
}

impl Raw {
    pub fn of(s: &LeSemigroup) -> Raw {
        Raw {
            n: s.size(),
            leq: s.lattice().leq_matrix(),
            mul: s.table().rows(),
        }
    }

    pub fn top(&self) -> usize {
        (0..self.n)
            .find(|&t| (0..self.n).all(|x| self.leq[x][t]))
            .expect("top")
    }

    /// Least upper bound by scanning all upper bounds.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.n)
            .filter(|&c| self.leq[a][c] && self.leq[b][c])
            .collect();
        ub.iter()
            .copied()
            .find(|&c| ub.iter().all(|&d| self.leq[c][d]))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.n)
            .filter(|&c| self.leq[c][a] && self.leq[c][b])
            .collect();
        lb.iter()
            .copied()
            .find(|&c| lb.iter().all(|&d| self.leq[d][c]))
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| {
                (0..n)
                    .all(|b| (0..n).all(|c| !(self.leq[a][b] && self.leq[b][c]) || self.leq[a][c]))
            })
    }

    pub fn is_lattice(&self) -> bool {
        self.is_partial_order()
            && (0..self.n).all(|a| {
                (0..self.n).all(|b| self.join(a, b).is_some() && self.meet(a, b).is_some())
            })
    }

    /// Every axiom, every tuple, no shortcuts.
    pub fn is_le_semigroup(&self) -> bool {
        let n = self.n;
        if self.leq.len() != n
            || self.mul.len() != n
            || self
                .mul
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
        {
            return false;
        }
        if !self.is_lattice() {
            return false;
        }
        let m = &self.mul;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m[m[x][y]][z] != m[x][m[y][z]] {
                        return false;
                    }
                    if self.leq[x][y] && !(self.leq[m[z][x]][m[z][y]] && self.leq[m[x][z]][m[y][z]])
                    {
                        return false;
                    }
                    let yz = self.join(y, z).unwrap();
                    if m[x][yz] != self.join(m[x][y], m[x][z]).unwrap() {
                        return false;
                    }
                    if m[yz][x] != self.join(m[y][x], m[z][x]).unwrap() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_ideal(&self, x: usize) -> bool {
        let e = self.top();
        self.leq[self.mul[x][e]][x] && self.leq[self.mul[e][x]][x]
    }

    pub fn ideal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.is_ideal(x)).collect()
    }

    /// The minimum ideal element above `x`, found by scanning.
    pub fn min_ideal_above(&self, x: usize) -> usize {
        let above: Vec<usize> = self
            .ideal_elements()
            .into_iter()
            .filter(|&t| self.leq[x][t])
            .collect();
        above
            .iter()
            .copied()
            .find(|&t| above.iter().all(|&u| self.leq[t][u]))
            .expect("the ideal elements above x have a minimum")
    }

    pub fn relabel(&self, perm: &[usize]) -> Raw {
        let n = self.n;
        let mut leq = vec![vec![false; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                leq[perm[a]][perm[b]] = self.leq[a][b];
                mul[perm[a]][perm[b]] = perm[self.mul[a][b]];
            }
        }
        Raw { n, leq, mul }
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(a: &Raw, b: &Raw) -> bool {
    a.n == b.n && permutations(a.n).iter().any(|p| a.relabel(p) == *b)
}

/// Lattices of order `n` up to isomorphism, by filtering every reflexive
/// relation.
pub fn naive_lattice_count(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let perms = permutations(n);
    let mut reps: Vec<Vec<Vec<bool>>> = Vec::new();
    for bits in 0u64..(1u64 << off.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, &(a, b)) in off.iter().enumerate() {
            leq[a][b] = bits >> i & 1 == 1;
        }
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        let raw = Raw {
            n,
            leq,
            mul: vec![vec![0; n]; n],
        };
        if !raw.is_lattice() {
            continue;
        }
        let known = reps
            .iter()
            .any(|r| perms.iter().any(|p| raw.relabel(p).leq == *r));
        if !known {
            reps.push(raw.leq);
        }
    }
    reps.len()
}

/// Every table on `leq` accepted by the naive oracle, in row-major
/// lexicographic order.
pub fn naive_tables(leq: &[Vec<bool>]) -> Vec<Vec<Vec<usize>>> {
    let n = leq.len();
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut flat = vec![0; cells];
        for i in (0..cells).rev() {
            flat[i] = c % n;
            c /= n;
        }
        let raw = Raw {
            n,
            leq: leq.to_vec(),
            mul: flat.chunks(n).map(<[usize]>::to_vec).collect(),
        };
        if raw.is_le_semigroup() {
            out.push(raw.mul);
        }
    }
    out
}

/// The canonical corpus of order exactly `n`, cached.
pub fn canonical_corpus(n: usize) -> &'static [LeSemigroup] {
    static CACHE: [OnceLock<Vec<LeSemigroup>>; 5] = [const { OnceLock::new() }; 5];
    CACHE[n].get_or_init(|| lesgp::enumerate_le_semigroups(&EnumerationTask::new(n)).unwrap())
}

pub fn labeled_corpus(n: usize) -> Vec<LeSemigroup> {
    let mut task = EnumerationTask::new(n);
    task.dedupe = Dedupe::Labeled;
    lesgp::enumerate_le_semigroups(&task).unwrap()
}

/// Canonical structures of every order `1..=4`.
pub fn corpus_up_to_4() -> Vec<&'static LeSemigroup> {
    (1..=4).flat_map(|n| canonical_corpus(n).iter()).collect()
}
