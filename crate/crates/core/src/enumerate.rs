//! Exhaustive generation of small lattices and le-semigroups.
//!
//! Lattices come out in canonical labeling (bottom 0, top n-1, order
//! encoding minimal over linear extensions), sorted by that encoding.
//! Tables on each lattice are filled row-major by backtracking; every
//! constraint is checked as soon as its last cell is assigned.

use rayon::prelude::*;

use crate::canonical::{canonical_lattice_permutation, lattice_automorphisms};
use crate::config;
use crate::error::{Error, Result};
use crate::hunt::Constraint;
use crate::lattice::{build_lattice, FiniteLattice};
use crate::semigroup::{build_le_semigroup, LeSemigroup};
use crate::theorems::Context;

/// Prefix length (in table cells) at which the search tree is split into
/// independent subtrees.
pub const SPLIT_DEPTH: usize = 3;

/// Number of subtrees handed to the pool at a time; bounds wasted work once
/// a result limit is reached.
const BATCH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dedupe {
    /// Every table on every lattice representative.
    Labeled,
    /// One structure per isomorphism class.
    #[default]
    Canonical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    pub n: usize,
    pub dedupe: Dedupe,
    pub require: Vec<Constraint>,
    pub forbid: Vec<Constraint>,
    pub limit: Option<usize>,
    /// Worker threads; `None` uses the global pool. Results never depend on it.
    pub jobs: Option<usize>,
}

impl EnumerationTask {
    pub fn new(n: usize) -> Self {
        EnumerationTask {
            n,
            dedupe: Dedupe::Canonical,
            require: Vec::new(),
            forbid: Vec::new(),
            limit: None,
            jobs: None,
        }
    }

    pub fn labeled(mut self) -> Self {
        self.dedupe = Dedupe::Labeled;
        self
    }

    pub fn require(mut self, c: Constraint) -> Self {
        self.require.push(c);
        self
    }

    pub fn forbid(mut self, c: Constraint) -> Self {
        self.forbid.push(c);
        self
    }

    pub fn limit(mut self, k: usize) -> Self {
        self.limit = Some(k);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.n)?;
        if let Some(c) = self.require.iter().find(|c| self.forbid.contains(c)) {
            return Err(Error::ConflictingConstraint(c.name().to_string()));
        }
        Ok(())
    }

    fn accepts(&self, s: &LeSemigroup) -> bool {
        if self.require.is_empty() && self.forbid.is_empty() {
            return true;
        }
        let ctx = Context::new(s);
        self.require.iter().all(|c| c.holds(&ctx)) && !self.forbid.iter().any(|c| c.holds(&ctx))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let max = config::max_enum_order();
    if n > max {
        return Err(Error::OrderTooLarge { n, max });
    }
    Ok(())
}

/// One lattice per isomorphism class, in canonical labeling.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>> {
    check_order(n)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut out: Vec<(Vec<bool>, FiniteLattice)> = Vec::new();
    let mut leq = vec![vec![false; n]; n];
    // Labels follow a linear extension, so only pairs a < b can be related.
    // Transitivity and the lattice property are checked at the leaves.
    fn go(
        k: usize,
        pairs: &[(usize, usize)],
        leq: &mut Vec<Vec<bool>>,
        out: &mut Vec<(Vec<bool>, FiniteLattice)>,
    ) {
        if k == pairs.len() {
            let Ok(l) = build_lattice(leq) else { return };
            if canonical_lattice_permutation(&l).1 {
                out.push((leq.iter().flatten().copied().collect(), l));
            }
            return;
        }
        let (a, b) = pairs[k];
        for related in [false, true] {
            leq[a][b] = related;
            go(k + 1, pairs, leq, out);
        }
        leq[a][b] = false;
    }
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    go(0, &pairs, &mut leq, &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, l)| l).collect())
}

const UNSET: u8 = u8::MAX;

/// Backtracking search for multiplication tables on one lattice.
#[derive(Debug, Clone)]
pub struct TableSearch {
    n: usize,
    leq: Vec<bool>,
    join: Vec<u8>,
    /// Non-identity automorphisms; empty unless deduplicating.
    autos: Vec<Vec<u8>>,
}

impl TableSearch {
    pub fn new(lattice: &FiniteLattice, dedupe: Dedupe) -> Self {
        let n = lattice.size();
        let mut leq = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for a in lattice.elements() {
            for b in lattice.elements() {
                leq.push(lattice.leq(a, b));
                join.push(lattice.join(a, b).index() as u8);
            }
        }
        let autos = match dedupe {
            Dedupe::Labeled => Vec::new(),
            Dedupe::Canonical => lattice_automorphisms(lattice)
                .into_iter()
                .filter(|p| p.iter().enumerate().any(|(i, &v)| i != v))
                .map(|p| p.into_iter().map(|v| v as u8).collect())
                .collect(),
        };
        TableSearch {
            n,
            leq,
            join,
            autos,
        }
    }

    #[inline]
    fn le(&self, a: u8, b: u8) -> bool {
        self.leq[a as usize * self.n + b as usize]
    }

    #[inline]
    fn jn(&self, a: u8, b: u8) -> u8 {
        self.join[a as usize * self.n + b as usize]
    }

    /// Checks every constraint that mentions cell `(x, y)` and whose other
    /// cells are already assigned.
    fn consistent(&self, t: &[u8], x: usize, y: usize) -> bool {
        let n = self.n;
        let get = |a: usize, b: usize| t[a * n + b];
        let v = get(x, y);
        let (xu, yu) = (x as u8, y as u8);

        // order compatibility on both sides
        for a in 0..n {
            let au = a as u8;
            let r = get(x, a);
            if r != UNSET
                && ((self.le(au, yu) && !self.le(r, v)) || (self.le(yu, au) && !self.le(v, r)))
            {
                return false;
            }
            let c = get(a, y);
            if c != UNSET
                && ((self.le(au, xu) && !self.le(c, v)) || (self.le(xu, au) && !self.le(v, c)))
            {
                return false;
            }
        }

        // x(a v b) = xa v xb along row x, (a v b)y = ay v by along column y
        for a in 0..n {
            for b in a + 1..n {
                let j = self.jn(a as u8, b as u8) as usize;
                let (xa, xb, xj) = (get(x, a), get(x, b), get(x, j));
                if xa != UNSET && xb != UNSET && xj != UNSET && xj != self.jn(xa, xb) {
                    return false;
                }
                let (ay, by, jy) = (get(a, y), get(b, y), get(j, y));
                if ay != UNSET && by != UNSET && jy != UNSET && jy != self.jn(ay, by) {
                    return false;
                }
            }
        }

        // associativity, with (x, y) in each of the four cell roles
        for z in 0..n {
            let yz = get(y, z);
            if yz != UNSET {
                let (l, r) = (get(v as usize, z), get(x, yz as usize));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
            let wx = get(z, x);
            if wx != UNSET {
                let (l, r) = (get(wx as usize, y), get(z, v as usize));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if get(a, b) == xu {
                    let by = get(b, y);
                    if by != UNSET {
                        let r = get(a, by as usize);
                        if r != UNSET && r != v {
                            return false;
                        }
                    }
                }
                if get(a, b) == yu {
                    let xa = get(x, a);
                    if xa != UNSET {
                        let l = get(xa as usize, b);
                        if l != UNSET && l != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// No automorphism gives a lexicographically smaller table.
    fn is_canonical(&self, t: &[u8]) -> bool {
        let n = self.n;
        let mut image = vec![0u8; n * n];
        self.autos.iter().all(|p| {
            for a in 0..n {
                for b in 0..n {
                    image[p[a] as usize * n + p[b] as usize] = p[t[a * n + b] as usize];
                }
            }
            image.as_slice() >= t
        })
    }

    fn dfs(&self, t: &mut Vec<u8>, k: usize, stop: usize, out: &mut Vec<Vec<u8>>) {
        let cells = self.n * self.n;
        if k == stop {
            if k < cells || self.is_canonical(t) {
                out.push(t.clone());
            }
            return;
        }
        let (x, y) = (k / self.n, k % self.n);
        for v in 0..self.n as u8 {
            t[k] = v;
            if self.consistent(t, x, y) {
                self.dfs(t, k + 1, stop, out);
            }
        }
        t[k] = UNSET;
    }

    /// Consistent partial tables with the first `depth` cells assigned.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<u8>> {
        let depth = depth.min(self.n * self.n);
        let mut out = Vec::new();
        self.dfs(&mut vec![UNSET; self.n * self.n], 0, depth, &mut out);
        out
    }

    /// All complete tables extending `prefix`, in lexicographic order.
    pub fn complete(&self, prefix: &[u8]) -> Vec<Vec<u8>> {
        let depth = prefix.iter().take_while(|&&c| c != UNSET).count();
        let mut out = Vec::new();
        self.dfs(&mut prefix.to_vec(), depth, self.n * self.n, &mut out);
        out
    }

    pub fn all_tables(&self) -> Vec<Vec<u8>> {
        self.complete(&vec![UNSET; self.n * self.n])
    }
}

fn to_structure(lattice: &FiniteLattice, table: &[u8]) -> LeSemigroup {
    let n = lattice.size();
    let rows: Vec<Vec<usize>> = table
        .chunks(n)
        .map(|r| r.iter().map(|&v| v as usize).collect())
        .collect();
    build_le_semigroup(lattice.clone(), &rows).expect("search only yields valid tables")
}

/// Runs `f` inside a pool of `jobs` threads, or the global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// All le-semigroups of order `task.n` satisfying the task's constraints,
/// ordered by (lattice index, table encoding).
pub fn enumerate_le_semigroups(task: &EnumerationTask) -> Result<Vec<LeSemigroup>> {
    task.validate()?;
    let lattices = enumerate_lattices(task.n)?;
    Ok(with_jobs(task.jobs, || {
        let mut out = Vec::new();
        for lattice in &lattices {
            let search = TableSearch::new(lattice, task.dedupe);
            for batch in search.prefixes(SPLIT_DEPTH).chunks(BATCH) {
                let found: Vec<Vec<LeSemigroup>> = batch
                    .par_iter()
                    .map(|p| {
                        search
                            .complete(p)
                            .iter()
                            .map(|t| to_structure(lattice, t))
                            .filter(|s| task.accepts(s))
                            .collect()
                    })
                    .collect();
                out.extend(found.into_iter().flatten());
                if let Some(k) = task.limit {
                    if out.len() >= k {
                        out.truncate(k);
                        return out;
                    }
                }
            }
        }
        out
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_key;

    #[test]
    fn lattice_counts_small() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_lattices(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5]);
    }

    #[test]
    fn six_element_lattices() {
        assert_eq!(enumerate_lattices(6).unwrap().len(), 15);
    }

    #[test]
    fn lattices_are_canonically_labeled() {
        for n in 1..=5 {
            for l in enumerate_lattices(n).unwrap() {
                assert_eq!(l.bottom().index(), 0);
                assert_eq!(l.top().index(), n - 1);
                assert!(canonical_lattice_permutation(&l).1);
            }
        }
    }

    #[test]
    fn order_two_has_six() {
        let all = enumerate_le_semigroups(&EnumerationTask::new(2)).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn canonical_output_is_its_own_key() {
        for s in enumerate_le_semigroups(&EnumerationTask::new(4)).unwrap() {
            let key = canonical_key(&s);
            let n = s.size();
            let mut own = vec![n as u8];
            own.extend(s.lattice().leq_matrix().iter().flatten().map(|&b| b as u8));
            own.extend(s.table().rows().iter().flatten().map(|&v| v as u8));
            assert_eq!(key.as_bytes(), own.as_slice());
        }
    }

    #[test]
    fn order_caps() {
        assert_eq!(enumerate_lattices(0).unwrap_err(), Error::EmptyCarrier);
        assert!(matches!(
            enumerate_lattices(config::max_enum_order() + 1),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn limit_truncates_in_order() {
        let all = enumerate_le_semigroups(&EnumerationTask::new(3)).unwrap();
        let first = enumerate_le_semigroups(&EnumerationTask::new(3).limit(5)).unwrap();
        assert_eq!(first, all[..5].to_vec());
    }
}
