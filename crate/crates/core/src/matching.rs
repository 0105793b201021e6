//! Planar matchings of boundary points on the bigon, the basis of Temperley–Lieb Hom-spaces.

use std::fmt;

use crate::diagram::{Slice, SliceWord};
use crate::error::{Error, Result};

/// Where a boundary point sits: west row `i` or east row `j`, rows counted from the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    West(usize),
    East(usize),
}

/// A non-crossing perfect matching of `n_west + n_east` points.
///
/// Points are numbered around the disk: west points top to bottom, then east points
/// bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n_west: usize,
    n_east: usize,
    partner: Vec<usize>,
}

impl Matching {
    /// Builds a matching from its pairs of circular point indices, checking planarity.
    pub fn from_pairs(n_west: usize, n_east: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let total = n_west + n_east;
        let mut partner = vec![usize::MAX; total];
        for &(x, y) in pairs {
            if x >= total || y >= total || x == y {
                return Err(Error::Invalid(format!("bad pair ({x}, {y})")));
            }
            if partner[x] != usize::MAX || partner[y] != usize::MAX {
                return Err(Error::Invalid(format!("point reused in pair ({x}, {y})")));
            }
            partner[x] = y;
            partner[y] = x;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::Invalid("matching is not perfect".into()));
        }
        let m = Self {
            n_west,
            n_east,
            partner,
        };
        if !m.is_planar() {
            return Err(Error::Invalid("matching is not planar".into()));
        }
        Ok(m)
    }

    pub fn n_west(&self) -> usize {
        self.n_west
    }

    pub fn n_east(&self) -> usize {
        self.n_east
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn west_point(&self, row: usize) -> usize {
        row
    }

    pub fn east_point(&self, row: usize) -> usize {
        self.n_west + self.n_east - 1 - row
    }

    pub fn endpoint(&self, p: usize) -> Endpoint {
        if p < self.n_west {
            Endpoint::West(p)
        } else {
            Endpoint::East(self.n_west + self.n_east - 1 - p)
        }
    }

    /// Pairs `(x, y)` with `x < y`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&x| x < self.partner[x])
            .map(|x| (x, self.partner[x]))
            .collect()
    }

    pub fn is_planar(&self) -> bool {
        let pairs = self.pairs();
        pairs.iter().all(|&(a, b)| {
            pairs
                .iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// Number of strands joining the two edges.
    pub fn through_strands(&self) -> usize {
        self.pairs()
            .iter()
            .filter(|&&(x, y)| matches!((self.endpoint(x), self.endpoint(y)), (Endpoint::West(_), Endpoint::East(_))))
            .count()
    }

    /// A crossingless slice word realizing the matching: west arcs are capped innermost
    /// first, then the east arcs are created by cups.
    pub fn canonical_word(&self) -> SliceWord {
        let mut slices = Vec::new();
        let mut west: Vec<usize> = (0..self.n_west).map(|r| self.west_point(r)).collect();
        while let Some(i) = (0..west.len().saturating_sub(1)).find(|&i| self.partner[west[i]] == west[i + 1]) {
            slices.push(Slice::Cap(i));
            west.drain(i..i + 2);
        }
        let mut east: Vec<usize> = (0..self.n_east).map(|r| self.east_point(r)).collect();
        let mut removed = Vec::new();
        while let Some(i) = (0..east.len().saturating_sub(1)).find(|&i| self.partner[east[i]] == east[i + 1]) {
            removed.push(i);
            east.drain(i..i + 2);
        }
        slices.extend(removed.into_iter().rev().map(Slice::Cup));
        SliceWord::new(self.n_west, slices).expect("canonical word is well formed")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matching({},{})[", self.n_west, self.n_east)?;
        for (k, (x, y)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let show = |p| match self.endpoint(p) {
                Endpoint::West(r) => format!("w{r}"),
                Endpoint::East(r) => format!("e{r}"),
            };
            write!(f, "{}-{}", show(x), show(y))?;
        }
        write!(f, "]")
    }
}

/// All planar matchings on `n_west + n_east` points.
pub fn enumerate_matchings(n_west: usize, n_east: usize) -> Result<Vec<Matching>> {
    let total = n_west + n_east;
    if total % 2 == 1 {
        return Err(Error::Arity(format!(
            "{n_west} + {n_east} boundary points cannot be matched"
        )));
    }
    let points: Vec<usize> = (0..total).collect();
    let mut out = Vec::new();
    for pairs in noncrossing(&points) {
        out.push(Matching::from_pairs(n_west, n_east, &pairs)?);
    }
    out.sort();
    Ok(out)
}

fn noncrossing(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..points.len()).step_by(2) {
        let inner = noncrossing(&points[1..k]);
        let outer = noncrossing(&points[k + 1..]);
        for i in &inner {
            for o in &outer {
                let mut m = vec![(points[0], points[k])];
                m.extend_from_slice(i);
                m.extend_from_slice(o);
                out.push(m);
            }
        }
    }
    out
}

pub fn catalan(m: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..m as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Traces a crossingless word, returning its matching and the number of closed loops.
pub fn trace(word: &SliceWord) -> Result<(Matching, usize)> {
    let n_west = word.west_arity();
    let n_east = word.east_arity();
    // Union-find over strand segments; boundary points remember their segment.
    let mut parent: Vec<usize> = (0..n_west).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rows: Vec<usize> = (0..n_west).collect();
    let mut loops = 0;
    for s in word.slices() {
        match *s {
            Slice::Cap(i) => {
                let x = find(&mut parent, rows[i]);
                let y = find(&mut parent, rows[i + 1]);
                if x == y {
                    loops += 1;
                } else {
                    parent[x] = y;
                }
                rows.drain(i..i + 2);
            }
            Slice::Cup(i) => {
                let id = parent.len();
                parent.push(id);
                rows.splice(i..i, [id, id]);
            }
            Slice::Cross(_) | Slice::CrossUnder(_) => {
                return Err(Error::Invalid("trace needs a crossingless word".into()));
            }
        }
    }
    let total = n_west + n_east;
    let mut seg_of: Vec<usize> = (0..total).map(|r| if r < n_west { r } else { 0 }).collect();
    for (r, &seg) in rows.iter().enumerate() {
        seg_of[n_west + n_east - 1 - r] = seg;
    }
    let mut first: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut pairs = Vec::new();
    for (p, &seg) in seg_of.iter().enumerate() {
        let root = find(&mut parent, seg);
        match first.remove(&root) {
            Some(o) => pairs.push((o, p)),
            None => {
                first.insert(root, p);
            }
        }
    }
    Ok((Matching::from_pairs(n_west, n_east, &pairs)?, loops))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        assert_eq!(enumerate_matchings(2, 0).unwrap().len(), 1);
        assert_eq!(enumerate_matchings(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_matchings(3, 3).unwrap().len(), 5);
        assert_eq!(enumerate_matchings(0, 8).unwrap().len(), 14);
        assert!(enumerate_matchings(1, 2).is_err());
        assert_eq!((0..6).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn canonical_word_traces_back() {
        for (w, e) in [(0, 0), (2, 0), (1, 1), (2, 2), (3, 1), (0, 6), (3, 3), (4, 2)] {
            for m in enumerate_matchings(w, e).unwrap() {
                let word = m.canonical_word();
                assert_eq!(word.east_arity(), e);
                let (back, loops) = trace(&word).unwrap();
                assert_eq!(back, m);
                assert_eq!(loops, 0);
            }
        }
    }

    #[test]
    fn closed_loop_counted() {
        let w = SliceWord::new(0, vec![Slice::Cup(0), Slice::Cup(0), Slice::Cap(1), Slice::Cap(0)]).unwrap();
        assert_eq!(trace(&w).unwrap().1, 1);
        let w = SliceWord::new(0, vec![Slice::Cup(0), Slice::Cup(0), Slice::Cap(0), Slice::Cap(0)]).unwrap();
        let (m, loops) = trace(&w).unwrap();
        assert!(m.pairs().is_empty());
        assert_eq!(loops, 2);
    }
}
