//! A slow reference evaluator for stated diagrams: every crossing is expanded into its
//! two smoothings and each smoothing is rewritten by the defining relations one step at
//! a time. It shares no code with [`crate::diagram::reduce`].

use rand::Rng;

use crate::diagram::{BasisTangle, Sign, SkeinElement, Slice, SliceWord, StatedWord};
use crate::scalar::HalfLaurent;

fn expand(word: &SliceWord) -> Vec<(HalfLaurent, Vec<Slice>)> {
    let mut out = vec![(HalfLaurent::one(), Vec::new())];
    for s in word.slices() {
        let mut next = Vec::new();
        for (c, w) in out {
            let (i, keep, turn) = match *s {
                Slice::Cross(i) => (i, 1, -1),
                Slice::CrossUnder(i) => (i, -1, 1),
                other => {
                    let mut w = w;
                    w.push(other);
                    next.push((c, w));
                    continue;
                }
            };
            let mut turned = w.clone();
            turned.extend([Slice::Cap(i), Slice::Cup(i)]);
            next.push((&c * &HalfLaurent::q_pow(turn), turned));
            next.push((&c * &HalfLaurent::q_pow(keep), w));
        }
        out = next;
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Arc labels for the west and east endpoints of a crossingless slice list, and the
/// number of closed loops.
fn arcs(n_west: usize, slices: &[Slice]) -> (Vec<usize>, Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n_west).collect();
    let mut rows: Vec<usize> = (0..n_west).collect();
    let mut loops = 0;
    for s in slices {
        match *s {
            Slice::Cup(i) => {
                let a = parent.len();
                parent.push(a);
                parent.push(a);
                rows.splice(i..i, [a, a + 1]);
            }
            Slice::Cap(i) => {
                let (x, y) = (find(&mut parent, rows[i]), find(&mut parent, rows[i + 1]));
                if x == y {
                    loops += 1;
                } else {
                    parent[x] = y;
                }
                rows.drain(i..i + 2);
            }
            _ => unreachable!("smoothings have no crossings"),
        }
    }
    let west = (0..n_west).map(|p| find(&mut parent, p)).collect();
    let east = rows.iter().map(|&p| find(&mut parent, p)).collect();
    (west, east, loops)
}

fn c_east(upper: Sign, lower: Sign) -> HalfLaurent {
    match (upper, lower) {
        (Sign::Plus, Sign::Minus) => HalfLaurent::s_pow(-1),
        (Sign::Minus, Sign::Plus) => -HalfLaurent::s_pow(-5),
        _ => HalfLaurent::zero(),
    }
}

fn c_west(upper: Sign, lower: Sign) -> HalfLaurent {
    match (upper, lower) {
        (Sign::Plus, Sign::Minus) => -HalfLaurent::s_pow(5),
        (Sign::Minus, Sign::Plus) => HalfLaurent::s_pow(1),
        _ => HalfLaurent::zero(),
    }
}

type End = (Sign, usize);

fn adjacent_arc(side: &[End]) -> Option<usize> {
    side.windows(2).position(|w| w[0].1 == w[1].1)
}

fn bad_pair(side: &[End]) -> Option<usize> {
    side.windows(2).position(|w| w[0].0 == Sign::Minus && w[1].0 == Sign::Plus)
}

fn eval(west: Vec<End>, east: Vec<End>) -> SkeinElement {
    if let Some(i) = adjacent_arc(&west) {
        let c = c_west(west[i].0, west[i + 1].0);
        if c.is_zero() {
            return SkeinElement::zero();
        }
        let mut w = west;
        w.drain(i..i + 2);
        return eval(w, east).scale(&c);
    }
    if let Some(i) = adjacent_arc(&east) {
        let c = c_east(east[i].0, east[i + 1].0);
        if c.is_zero() {
            return SkeinElement::zero();
        }
        let mut e = east;
        e.drain(i..i + 2);
        return eval(west, e).scale(&c);
    }
    assert_eq!(west.len(), east.len(), "planar diagrams reduce to parallel strands");
    if let Some(i) = bad_pair(&east) {
        let mut swapped = east.clone();
        swapped[i].0 = east[i + 1].0;
        swapped[i + 1].0 = east[i].0;
        let mut joined_west = west.clone();
        joined_west[i + 1].1 = joined_west[i].1;
        let mut e = east;
        e.drain(i..i + 2);
        return &eval(west, swapped).scale(&HalfLaurent::q_pow(2)) + &eval(joined_west, e).scale(&HalfLaurent::s_pow(-1));
    }
    if let Some(i) = bad_pair(&west) {
        let mut swapped = west.clone();
        swapped[i].0 = west[i + 1].0;
        swapped[i + 1].0 = west[i].0;
        let mut joined_east = east.clone();
        joined_east[i + 1].1 = joined_east[i].1;
        let mut w = west;
        w.drain(i..i + 2);
        return &eval(swapped, east).scale(&HalfLaurent::q_pow(2)) - &eval(w, joined_east).scale(&HalfLaurent::s_pow(5));
    }
    let mu = west.iter().map(|e| e.0).collect();
    let nu = east.iter().map(|e| e.0).collect();
    SkeinElement::basis(BasisTangle::new(mu, nu).expect("sorted states"))
}

/// Reference evaluation of a stated diagram in the basis of the bigon.
pub fn naive_reduce(d: &StatedWord) -> SkeinElement {
    let loop_value = HalfLaurent::from_terms([(4, -1), (-4, -1)]);
    let mut out = SkeinElement::zero();
    for (c, slices) in expand(d.word()) {
        let (w, e, loops) = arcs(d.word().west_arity(), &slices);
        let west = d.west_states().iter().copied().zip(w).collect();
        let east = d.east_states().iter().copied().zip(e).collect();
        let coeff = &c * &loop_value.pow(loops as u32);
        out.add_scaled(&eval(west, east), &coeff);
    }
    out
}

/// A random stated word with at most `max_crossings` crossings and at most
/// `max_points` boundary points.
pub fn random_stated_word(rng: &mut impl Rng, max_crossings: usize, max_points: usize) -> StatedWord {
    let n_west = rng.gen_range(0..=max_points);
    let mut rows = n_west;
    let mut crossings = 0;
    let mut slices = Vec::new();
    for _ in 0..rng.gen_range(0..=8) {
        let mut moves = Vec::new();
        if rows >= 2 {
            let i = rng.gen_range(0..rows - 1);
            moves.push(Slice::Cap(i));
            if crossings < max_crossings {
                moves.push(Slice::Cross(i));
                moves.push(Slice::CrossUnder(i));
            }
        }
        if n_west + rows + 2 <= max_points {
            moves.push(Slice::Cup(rng.gen_range(0..=rows)));
        }
        if moves.is_empty() {
            break;
        }
        let s = moves[rng.gen_range(0..moves.len())];
        match s {
            Slice::Cap(_) => rows -= 2,
            Slice::Cup(_) => rows += 2,
            _ => crossings += 1,
        }
        slices.push(s);
    }
    let word = SliceWord::new(n_west, slices).expect("moves respect the row count");
    let west = (0..n_west).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect();
    let east = (0..rows).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect();
    StatedWord::new(word, west, east).expect("arity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    #[test]
    fn loop_and_arcs() {
        let d = parse_diagram("tangle(0){cup0;cap0}").unwrap();
        assert_eq!(naive_reduce(&d), SkeinElement::single(BasisTangle::unit(), HalfLaurent::from_terms([(4, -1), (-4, -1)])));
        let d = parse_diagram("tangle(0){cup0} east=+-").unwrap();
        assert_eq!(naive_reduce(&d), SkeinElement::single(BasisTangle::unit(), HalfLaurent::s_pow(-1)));
    }
}
