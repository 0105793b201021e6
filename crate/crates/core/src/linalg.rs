//! Exact sparse linear algebra over the rationals: rank, kernels, solving.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lincomb::LinComb;
use crate::scalar::Specialization;

pub type SparseVec = BTreeMap<usize, BigRational>;

/// Assigns dense column indices to arbitrary keys in order of first use.
#[derive(Debug, Clone)]
pub struct Indexer<K> {
    map: HashMap<K, usize>,
}

impl<K: Hash + Eq + Clone> Default for Indexer<K> {
    fn default() -> Self {
        Self { map: HashMap::new() }
    }
}

impl<K: Hash + Eq + Clone> Indexer<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn index(&mut self, k: &K) -> usize {
        let n = self.map.len();
        *self.map.entry(k.clone()).or_insert(n)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// The vector of values of `x` at `s0`, in the indexer's coordinates.
pub fn specialize<K: Ord + Clone + Hash>(x: &LinComb<K>, idx: &mut Indexer<K>, s0: &Specialization) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, c) in x.iter() {
        let v = s0.eval(c);
        if !v.is_zero() {
            out.insert(idx.index(k), v);
        }
    }
    out
}

fn axpy(y: &mut SparseVec, a: &BigRational, x: &SparseVec) {
    for (k, v) in x {
        let entry = y.entry(*k).or_insert_with(BigRational::zero);
        *entry += a * v;
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

struct Pivot {
    row: SparseVec,
    combo: SparseVec,
}

/// Incremental row echelon form that remembers how each pivot row was built.
#[derive(Default)]
pub struct Echelon {
    pivots: HashMap<usize, Pivot>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the pivots; returns the remainder and the combination
    /// of inserted rows that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut used = SparseVec::new();
        loop {
            let Some((&k, lead)) = v.iter().next() else {
                return (v, used);
            };
            let Some(p) = self.pivots.get(&k) else {
                return (v, used);
            };
            let f = lead.clone();
            axpy(&mut v, &-f.clone(), &p.row);
            axpy(&mut used, &f, &p.combo);
        }
    }

    /// Adds a row. Returns `Some(kernel vector)` when the row depends on earlier rows;
    /// the kernel vector is indexed by insertion order.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let (rest, used) = self.reduce(v);
        let mut combo = SparseVec::new();
        combo.insert(id, BigRational::one());
        axpy(&mut combo, &-BigRational::one(), &used);
        match rest.iter().next() {
            None => Some(combo),
            Some((&k, lead)) => {
                let inv = lead.recip();
                let row = rest.iter().map(|(c, x)| (*c, x * &inv)).collect();
                let combo = combo.into_iter().map(|(c, x)| (c, x * &inv)).collect();
                self.pivots.insert(k, Pivot { row, combo });
                None
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).0.is_empty()
    }

    /// Coefficients `x` (by insertion order) with `Σ x_i row_i = v`, if `v` is in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rest, used) = self.reduce(v.clone());
        rest.is_empty().then_some(used)
    }
}

pub fn rank(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// A basis of `{x : Σ x_i rows_i = 0}`.
pub fn left_kernel(rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    rows.iter().filter_map(|r| e.insert(r.clone())).collect()
}

/// `Σ x_i rows_i`.
pub fn combine(x: &SparseVec, rows: &[SparseVec]) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, c) in x {
        axpy(&mut out, c, &rows[*i]);
    }
    out
}

/// Whether two families span the same space.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return false;
    }
    let both: Vec<SparseVec> = a.iter().chain(b).cloned().collect();
    rank(&both) == ra
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, x)| (k, BigRational::from_integer(x.into()))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(1, 1)]), v(&[(0, 1)])];
        assert_eq!(rank(&rows), 2);
        let ker = left_kernel(&rows);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert!(combine(k, &rows).is_empty());
        }
    }

    #[test]
    fn solving() {
        let rows = vec![v(&[(0, 1), (2, 1)]), v(&[(1, 3)])];
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(r.clone());
        }
        let target = v(&[(0, 2), (1, 3), (2, 2)]);
        let x = e.solve(&target).unwrap();
        assert_eq!(combine(&x, &rows), target);
        assert!(e.solve(&v(&[(2, 1)])).is_none());
        assert!(same_span(&rows, &[v(&[(0, 1), (1, 3), (2, 1)]), v(&[(1, 1)])]));
    }
}
