//! The St map from Temperley–Lieb Hom-spaces on the bigon to the stated skein algebra,
//! with checks of its intertwining, naturality and product properties.

use std::collections::{BTreeMap, BTreeSet};

use crate::bigon::{self, comul, TensorElement};
use crate::comodule::{multiplicity, rt_evaluate, Matrix};
use crate::diagram::{
    all_states, delta, fmt_signs, reduce, reduce_parallel, states_index, BasisTangle, Sign, SkeinElement, Slice, SliceWord,
    StatedWord,
};
use crate::linalg::{rank, specialize, Indexer, SparseVec};
use crate::lincomb::{as_tensor, tensor_product, LinComb};
use crate::matching::{catalan, enumerate_matchings, trace, Matching};
use crate::scalar::Specialization;
use crate::Result;

/// `St(M)` as a table indexed by (west states, east states).
pub type StTable = BTreeMap<(Vec<Sign>, Vec<Sign>), SkeinElement>;

pub fn st_entry(m: &Matching, west: &[Sign], east: &[Sign]) -> SkeinElement {
    let d = StatedWord::new(m.canonical_word(), west.to_vec(), east.to_vec()).expect("state arity matches the matching");
    reduce(&d)
}

pub fn st_map(m: &Matching) -> StTable {
    let mut out = StTable::new();
    for w in all_states(m.n_west()) {
        for e in all_states(m.n_east()) {
            let v = st_entry(m, &w, &e);
            out.insert((w.clone(), e), v);
        }
    }
    out
}

/// `St` of an arbitrary crossingless word, through its matching and loop count.
fn st_of_word(word: &SliceWord) -> StTable {
    let (m, loops) = trace(word).expect("crossingless word");
    let factor = delta().pow(loops as u32);
    st_map(&m).into_iter().map(|(k, v)| (k, v.scale(&factor))).collect()
}

fn witness(west: &[Sign], east: &[Sign], lhs: &impl std::fmt::Display, rhs: &impl std::fmt::Display) -> String {
    format!("states west={} east={}: {} != {}", fmt_signs(west), fmt_signs(east), lhs, rhs)
}

/// `Δ(St(ε;η)) = Σ_k St(ε;k) ⊗ β(k;η) = Σ_k β(ε;k) ⊗ St(k;η)`.
pub fn check_intertwiner(m: &Matching) -> std::result::Result<(), String> {
    let table = st_map(m);
    let east_states = all_states(m.n_east());
    let west_states = all_states(m.n_west());
    for ((w, e), v) in &table {
        let lhs = comul(v);
        let mut right = TensorElement::zero();
        for k in &east_states {
            right += &tensor_product(&as_tensor(&table[&(w.clone(), k.clone())]), &as_tensor(&reduce_parallel(k, e)));
        }
        if lhs != right {
            return Err(format!("east coaction, {}", witness(w, e, &lhs, &right)));
        }
        let mut left = TensorElement::zero();
        for k in &west_states {
            left += &tensor_product(&as_tensor(&reduce_parallel(w, k)), &as_tensor(&table[&(k.clone(), e.clone())]));
        }
        if lhs != left {
            return Err(format!("west coaction, {}", witness(w, e, &lhs, &left)));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    WestCap(usize),
    WestCup(usize),
    EastCap(usize),
    EastCup(usize),
}

impl std::fmt::Display for Insertion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Insertion::WestCap(i) => write!(f, "west cap{i}"),
            Insertion::WestCup(i) => write!(f, "west cup{i}"),
            Insertion::EastCap(i) => write!(f, "east cap{i}"),
            Insertion::EastCup(i) => write!(f, "east cup{i}"),
        }
    }
}

/// All cap and cup insertions compatible with the arities of `m`.
pub fn insertions(m: &Matching) -> Vec<Insertion> {
    let mut out = Vec::new();
    for i in 0..=m.n_west() {
        out.push(Insertion::WestCap(i));
    }
    for i in 0..m.n_west().saturating_sub(1) {
        out.push(Insertion::WestCup(i));
    }
    for i in 0..m.n_east().saturating_sub(1) {
        out.push(Insertion::EastCap(i));
    }
    for i in 0..=m.n_east() {
        out.push(Insertion::EastCup(i));
    }
    out
}

fn apply_matrix_west(table: &StTable, g: &Matrix, new_west: usize, n_east: usize) -> StTable {
    let mut out = StTable::new();
    let old_west: Vec<Vec<Sign>> = table.keys().map(|(w, _)| w.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    for w2 in all_states(new_west) {
        let col = states_index(&w2);
        for e in all_states(n_east) {
            let mut acc = SkeinElement::zero();
            for w in &old_west {
                let c = &g[states_index(w)][col];
                if !c.is_zero() {
                    acc.add_scaled(&table[&(w.clone(), e.clone())], c);
                }
            }
            out.insert((w2.clone(), e), acc);
        }
    }
    out
}

fn apply_matrix_east(table: &StTable, g: &Matrix, n_west: usize, new_east: usize) -> StTable {
    let old_east: Vec<Vec<Sign>> = table.keys().map(|(_, e)| e.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = StTable::new();
    for w in all_states(n_west) {
        for e2 in all_states(new_east) {
            let row = states_index(&e2);
            let mut acc = SkeinElement::zero();
            for e in &old_east {
                let c = &g[row][states_index(e)];
                if !c.is_zero() {
                    acc.add_scaled(&table[&(w.clone(), e.clone())], c);
                }
            }
            out.insert((w.clone(), e2), acc);
        }
    }
    out
}

/// `St(M ∘ g) = St(M) ∘ RT(g)` for a cap or cup `g` attached at one edge.
pub fn check_st_naturality(m: &Matching, ins: Insertion) -> std::result::Result<(), String> {
    let (nw, ne) = (m.n_west(), m.n_east());
    let base = m.canonical_word();
    let (composite, g_word) = match ins {
        Insertion::WestCap(i) => {
            let g = SliceWord::new(nw + 2, vec![Slice::Cap(i)]).map_err(|e| e.to_string())?;
            (g.then(&base), g)
        }
        Insertion::WestCup(i) => {
            let g = SliceWord::new(nw - 2, vec![Slice::Cup(i)]).map_err(|e| e.to_string())?;
            (g.then(&base), g)
        }
        Insertion::EastCap(i) => {
            let g = SliceWord::new(ne, vec![Slice::Cap(i)]).map_err(|e| e.to_string())?;
            (base.then(&g), g)
        }
        Insertion::EastCup(i) => {
            let g = SliceWord::new(ne, vec![Slice::Cup(i)]).map_err(|e| e.to_string())?;
            (base.then(&g), g)
        }
    };
    let composite = composite.map_err(|e| e.to_string())?;
    let lhs = st_of_word(&composite);
    let table = st_map(m);
    let rt = rt_evaluate(&g_word);
    let rhs = match ins {
        Insertion::WestCap(_) | Insertion::WestCup(_) => apply_matrix_west(&table, &rt, g_word.west_arity(), ne),
        Insertion::EastCap(_) | Insertion::EastCup(_) => apply_matrix_east(&table, &rt, nw, g_word.east_arity()),
    };
    for (k, v) in &lhs {
        let r = rhs.get(k).cloned().unwrap_or_else(SkeinElement::zero);
        if *v != r {
            return Err(format!("{m} with {ins}, {}", witness(&k.0, &k.1, v, &r)));
        }
    }
    if lhs.len() != rhs.len() {
        return Err(format!("{m} with {ins}: table sizes differ"));
    }
    Ok(())
}

/// `St(M1 ⊗ M2)(ε1 ε2; η1 η2) = St(M1)(ε1; η1) · St(M2)(ε2; η2)`.
pub fn check_product(m1: &Matching, m2: &Matching) -> std::result::Result<(), String> {
    let stacked = m1.canonical_word().stack(&m2.canonical_word());
    let lhs = st_of_word(&stacked);
    let t1 = st_map(m1);
    let t2 = st_map(m2);
    for ((w1, e1), v1) in &t1 {
        for ((w2, e2), v2) in &t2 {
            let w: Vec<Sign> = w1.iter().chain(w2).copied().collect();
            let e: Vec<Sign> = e1.iter().chain(e2).copied().collect();
            let rhs = bigon::mul(v1, v2);
            let l = &lhs[&(w.clone(), e.clone())];
            if *l != rhs {
                return Err(format!("{m1} above {m2}, {}", witness(&w, &e, l, &rhs)));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StRank {
    pub rank: usize,
    pub catalan: u64,
    pub peter_weyl: u64,
}

/// Rank of `St` on the Temperley–Lieb Hom-space at `s0`, with the Catalan and
/// Peter–Weyl counts it should equal.
pub fn st_rank(n_west: usize, n_east: usize, s0: &Specialization) -> Result<StRank> {
    let matchings = enumerate_matchings(n_west, n_east)?;
    let mut idx: Indexer<(Vec<Sign>, Vec<Sign>, BasisTangle)> = Indexer::new();
    let rows: Vec<SparseVec> = matchings
        .iter()
        .map(|m| {
            let mut flat = LinComb::zero();
            for ((w, e), v) in st_map(m) {
                for (b, c) in v.iter() {
                    flat.add_term((w.clone(), e.clone(), b.clone()), c.clone());
                }
            }
            specialize(&flat, &mut idx, s0)
        })
        .collect();
    let peter_weyl = (0..=n_west.max(n_east)).map(|k| multiplicity(k, n_west) * multiplicity(k, n_east)).sum();
    Ok(StRank { rank: rank(&rows), catalan: catalan((n_west + n_east) / 2), peter_weyl })
}

/// All `(n_west, n_east)` with an even total of at most `max_points`.
pub fn arities(max_points: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in (0..=max_points).step_by(2) {
        for nw in 0..=total {
            out.push((nw, total - nw));
        }
    }
    out
}

/// `m ∘ c` against the crossed-stacking diagram on basis pairs of at most `n` strands each.
pub fn check_braided_opposite(n: usize) -> std::result::Result<usize, String> {
    let basis = BasisTangle::up_to(n);
    let mut count = 0;
    for x in &basis {
        for y in &basis {
            let (ex, ey) = (SkeinElement::basis(x.clone()), SkeinElement::basis(y.clone()));
            let lhs = bigon::braided_opposite_mul(&ex, &ey);
            let rhs = bigon::crossed_stacking(&ex, &ey);
            if lhs != rhs {
                return Err(format!("x = {x}, y = {y}: {lhs} != {rhs}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::HalfLaurent;

    #[test]
    fn single_west_arc() {
        let m = &enumerate_matchings(2, 0).unwrap()[0];
        assert_eq!(st_entry(m, &[Sign::Plus, Sign::Minus], &[]), bigon::unit().scale(&-HalfLaurent::s_pow(5)));
    }

    #[test]
    fn small_ranks() {
        let s0 = &Specialization::defaults()[0];
        for (nw, ne, r) in [(0, 0, 1), (1, 1, 1), (2, 2, 2)] {
            let got = st_rank(nw, ne, s0).unwrap();
            assert_eq!(got, StRank { rank: r, catalan: r as u64, peter_weyl: r as u64 });
        }
    }
}
