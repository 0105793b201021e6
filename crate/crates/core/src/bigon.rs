//! The stated skein algebra of the bigon as a half-coribbon Hopf algebra.

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::comodule::rt_entry;
use crate::diagram::{
    reduce, reduce_parallel, BasisTangle, BoundaryCoefficients, Sign, SkeinElement, Slice, SliceWord,
    StatedWord,
};
use crate::expr::ExprTarget;
use crate::lincomb::{as_tensor, tensor_product, LinComb, Tensor};
use crate::scalar::HalfLaurent;

/// Tensors of skein elements, keyed by tuples of basis tangles.
pub type TensorElement = Tensor<BasisTangle>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edge {
    West,
    East,
}

pub fn unit() -> SkeinElement {
    SkeinElement::basis(BasisTangle::unit())
}

/// The one-strand element with states `mu` (west) and `nu` (east).
pub fn generator(mu: Sign, nu: Sign) -> SkeinElement {
    SkeinElement::basis(BasisTangle::new_unchecked(vec![mu], vec![nu]))
}

pub fn gen_a() -> SkeinElement {
    generator(Sign::Plus, Sign::Plus)
}

pub fn gen_b() -> SkeinElement {
    generator(Sign::Plus, Sign::Minus)
}

pub fn gen_c() -> SkeinElement {
    generator(Sign::Minus, Sign::Plus)
}

pub fn gen_d() -> SkeinElement {
    generator(Sign::Minus, Sign::Minus)
}

fn concat(x: &[Sign], y: &[Sign]) -> Vec<Sign> {
    let mut v = x.to_vec();
    v.extend_from_slice(y);
    v
}

fn reversed_flipped(v: &[Sign]) -> Vec<Sign> {
    v.iter().rev().map(|s| s.flip()).collect()
}

fn all_middle_states(n: usize) -> impl Iterator<Item = Vec<Sign>> {
    (0..1usize << n).map(move |k| crate::diagram::states_from_index(k, n))
}

pub fn mul_basis(x: &BasisTangle, y: &BasisTangle) -> SkeinElement {
    reduce_parallel(&concat(x.mu(), y.mu()), &concat(x.nu(), y.nu()))
}

/// Stacks `x` above `y`.
pub fn mul(x: &SkeinElement, y: &SkeinElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (bx, cx) in x.iter() {
        for (by, cy) in y.iter() {
            out.add_scaled(&mul_basis(bx, by), &(cx * cy));
        }
    }
    out
}

pub fn comul_basis(x: &BasisTangle) -> TensorElement {
    let mut out = TensorElement::zero();
    for eta in all_middle_states(x.strands()) {
        let left = as_tensor(&reduce_parallel(x.mu(), &eta));
        if left.is_zero() {
            continue;
        }
        let right = as_tensor(&reduce_parallel(&eta, x.nu()));
        out += &tensor_product(&left, &right);
    }
    out
}

/// Splitting along a middle arc, summing over the middle states.
pub fn comul(x: &SkeinElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&comul_basis(b), c);
    }
    out
}

pub fn counit_basis(x: &BasisTangle) -> HalfLaurent {
    if x.mu() == x.nu() {
        HalfLaurent::one()
    } else {
        HalfLaurent::zero()
    }
}

pub fn counit(x: &SkeinElement) -> HalfLaurent {
    x.pair(counit_basis)
}

fn cfun_product(v: &[Sign]) -> HalfLaurent {
    let bc = BoundaryCoefficients::standard();
    v.iter().map(|&s| bc.cfun(s)).product()
}

fn invert(x: &HalfLaurent) -> HalfLaurent {
    x.inverse_monomial().expect("boundary coefficients are monomials")
}

pub fn antipode_basis(x: &BasisTangle) -> SkeinElement {
    let coeff = &cfun_product(x.nu()) * &invert(&cfun_product(x.mu()));
    reduce_parallel(&reversed_flipped(x.nu()), &reversed_flipped(x.mu())).scale(&coeff)
}

/// Rotation by a half turn with all states negated, weighted by `C(nu)/C(mu)`.
pub fn antipode(x: &SkeinElement) -> SkeinElement {
    x.flat_map(antipode_basis)
}

pub fn rot_star_basis(x: &BasisTangle) -> SkeinElement {
    SkeinElement::basis(BasisTangle::new_unchecked(x.nu().to_vec(), x.mu().to_vec()))
}

/// The planar half-turn rotation of the bigon. The rotation also reverses both edge
/// orientations, so the height order of the states is kept.
pub fn rot_star(x: &SkeinElement) -> SkeinElement {
    x.flat_map(rot_star_basis)
}

/// The positive half twist on `n` strands as a slice sequence of `gate`s.
fn half_twist(n: usize, gate: fn(usize) -> Slice) -> Vec<Slice> {
    let mut out = Vec::new();
    for k in (1..n).rev() {
        for j in 0..k {
            out.push(gate(j));
        }
    }
    out
}

/// The diagram and scalar of the east-edge inversion of a basis element.
pub fn inv_east_diagram(x: &BasisTangle, inverse: bool) -> (HalfLaurent, StatedWord) {
    let n = x.strands();
    let (coeff, slices) = if inverse {
        let flipped: Vec<Sign> = x.nu().iter().map(|s| s.flip()).collect();
        let mut braid = half_twist(n, Slice::Cross);
        braid.reverse();
        (invert(&cfun_product(&flipped)), braid)
    } else {
        (cfun_product(x.nu()), half_twist(n, Slice::CrossUnder))
    };
    let word = SliceWord::new(n, slices).expect("braid on n strands");
    let d = StatedWord::new(word, x.mu().to_vec(), reversed_flipped(x.nu())).expect("arity");
    (coeff, d)
}

fn inv_east_basis(x: &BasisTangle, inverse: bool) -> SkeinElement {
    let (coeff, d) = inv_east_diagram(x, inverse);
    reduce(&d).scale(&coeff)
}

/// Inversion along an edge: reverse the edge's height order and negate its states.
pub fn inv_edge(x: &SkeinElement, edge: Edge, inverse: bool) -> SkeinElement {
    match edge {
        Edge::East => x.flat_map(|b| inv_east_basis(b, inverse)),
        Edge::West => rot_star(&inv_edge(&rot_star(x), Edge::East, inverse)),
    }
}

static T_MEMO: Lazy<DashMap<(BasisTangle, bool), HalfLaurent>> = Lazy::new(DashMap::new);

/// `ε(inv^{-1}(x))` (or `ε(inv(x))` when `inverse` is set) on a basis element, read
/// off as a single state-sum matrix entry of the inversion diagram.
fn t_basis(x: &BasisTangle, inverse_form: bool) -> HalfLaurent {
    let key = (x.clone(), inverse_form);
    if let Some(v) = T_MEMO.get(&key) {
        return v.clone();
    }
    let (coeff, d) = inv_east_diagram(x, !inverse_form);
    let v = &coeff * &rt_entry(d.word(), d.west_states(), d.east_states());
    T_MEMO.insert(key, v.clone());
    v
}

/// Half-coribbon functional `t = ε ∘ inv^{-1}` at the east edge.
pub fn t_form(x: &SkeinElement) -> HalfLaurent {
    x.pair(|b| t_basis(b, false))
}

/// Its convolution inverse `ε ∘ inv` at the east edge.
pub fn t_inv_form(x: &SkeinElement) -> HalfLaurent {
    x.pair(|b| t_basis(b, true))
}

/// `(f ∗ g)(x) = f(x₁) g(x₂)`.
pub fn convolve(
    f: impl Fn(&SkeinElement) -> HalfLaurent,
    g: impl Fn(&SkeinElement) -> HalfLaurent,
    x: &SkeinElement,
) -> HalfLaurent {
    comul(x).pair(|k| {
        let l = f(&SkeinElement::basis(k[0].clone()));
        if l.is_zero() {
            return l;
        }
        &l * &g(&SkeinElement::basis(k[1].clone()))
    })
}

/// `θ = t ∗ t`.
pub fn theta_form(x: &SkeinElement) -> HalfLaurent {
    convolve(t_form, t_form, x)
}

/// `x ↦ x₁ t(x₂)`: the half twist acting on the regular comodule.
pub fn ht_coaction(x: &SkeinElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (k, c) in comul(x).iter() {
        let t = t_form(&SkeinElement::basis(k[1].clone()));
        if !t.is_zero() {
            out.add_term(k[0].clone(), c * &t);
        }
    }
    out
}

type Word = Vec<(Sign, Sign)>;

static R_MEMO: Lazy<DashMap<(Word, Word), HalfLaurent>> = Lazy::new(DashMap::new);

fn word_of(x: &BasisTangle) -> Word {
    x.mu().iter().copied().zip(x.nu().iter().copied()).collect()
}

fn word_counit(w: &[(Sign, Sign)]) -> HalfLaurent {
    if w.iter().all(|(m, n)| m == n) {
        HalfLaurent::one()
    } else {
        HalfLaurent::zero()
    }
}

/// Co-R-matrix values on pairs of generators `a = (+,+)`, `b = (+,-)`, `c = (-,+)`, `d = (-,-)`.
pub fn r_generator(x: (Sign, Sign), y: (Sign, Sign)) -> HalfLaurent {
    use Sign::{Minus as M, Plus as P};
    match (x, y) {
        ((P, P), (P, P)) | ((M, M), (M, M)) => HalfLaurent::q_pow(1),
        ((P, P), (M, M)) | ((M, M), (P, P)) => HalfLaurent::q_pow(-1),
        ((P, M), (M, P)) => HalfLaurent::from_terms([(2, 1), (-6, -1)]),
        _ => HalfLaurent::zero(),
    }
}

fn r_word(x: &[(Sign, Sign)], y: &[(Sign, Sign)]) -> HalfLaurent {
    if x.is_empty() {
        return word_counit(y);
    }
    if y.is_empty() {
        return word_counit(x);
    }
    if x.len() == 1 && y.len() == 1 {
        return r_generator(x[0], y[0]);
    }
    let key = (x.to_vec(), y.to_vec());
    if let Some(v) = R_MEMO.get(&key) {
        return v.clone();
    }
    let mut acc = HalfLaurent::zero();
    if x.len() > 1 {
        // R(x' x'' ⊗ y) = R(x' ⊗ y₁) R(x'' ⊗ y₂)
        for k in all_middle_states(y.len()) {
            let y1: Word = y.iter().zip(&k).map(|(&(m, _), &s)| (m, s)).collect();
            let left = r_word(&x[..1], &y1);
            if left.is_zero() {
                continue;
            }
            let y2: Word = y.iter().zip(&k).map(|(&(_, n), &s)| (s, n)).collect();
            acc += &(&left * &r_word(&x[1..], &y2));
        }
    } else {
        // R(x ⊗ y' y'') = R(x₁ ⊗ y'') R(x₂ ⊗ y')
        let (m, n) = x[0];
        for k in Sign::BOTH {
            let left = r_word(&[(m, k)], &y[1..]);
            if left.is_zero() {
                continue;
            }
            acc += &(&left * &r_word(&[(k, n)], &y[..1]));
        }
    }
    R_MEMO.insert(key, acc.clone());
    acc
}

/// The co-R-matrix as a bilinear form.
pub fn r_form(x: &SkeinElement, y: &SkeinElement) -> HalfLaurent {
    let mut acc = HalfLaurent::zero();
    for (bx, cx) in x.iter() {
        let wx = word_of(bx);
        for (by, cy) in y.iter() {
            let v = r_word(&wx, &word_of(by));
            if !v.is_zero() {
                acc += &(&(cx * cy) * &v);
            }
        }
    }
    acc
}

fn braided_opposite_basis(x: &BasisTangle, y: &BasisTangle) -> SkeinElement {
    let mut out = SkeinElement::zero();
    let wx: Vec<Vec<Sign>> = all_middle_states(x.strands()).collect();
    let wy: Vec<Vec<Sign>> = all_middle_states(y.strands()).collect();
    for ex in &wx {
        let x2: Word = ex.iter().copied().zip(x.nu().iter().copied()).collect();
        for ey in &wy {
            let y2: Word = ey.iter().copied().zip(y.nu().iter().copied()).collect();
            let r = r_word(&x2, &y2);
            if r.is_zero() {
                continue;
            }
            let prod = reduce_parallel(&concat(y.mu(), x.mu()), &concat(ey, ex));
            out.add_scaled(&prod, &r);
        }
    }
    out
}

/// `m ∘ c`: `y₁ x₁ R(x₂ ⊗ y₂)`.
pub fn braided_opposite_mul(x: &SkeinElement, y: &SkeinElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (bx, cx) in x.iter() {
        for (by, cy) in y.iter() {
            out.add_scaled(&braided_opposite_basis(bx, by), &(cx * cy));
        }
    }
    out
}

/// `y` entering above `x` on the west edge and leaving below it on the east edge,
/// passing over `x` in between.
pub fn crossed_stacking_diagram(x: &BasisTangle, y: &BasisTangle) -> StatedWord {
    let (m, n) = (x.strands(), y.strands());
    let mut slices = Vec::new();
    for j in 0..m {
        for i in (j..j + n).rev() {
            slices.push(Slice::Cross(i));
        }
    }
    let word = SliceWord::new(m + n, slices).expect("braid on m + n strands");
    StatedWord::new(word, concat(y.mu(), x.mu()), concat(x.nu(), y.nu())).expect("arity")
}

/// The crossed-stacking picture evaluated by the diagram engine.
pub fn crossed_stacking(x: &SkeinElement, y: &SkeinElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (bx, cx) in x.iter() {
        for (by, cy) in y.iter() {
            out.add_scaled(&reduce(&crossed_stacking_diagram(bx, by)), &(cx * cy));
        }
    }
    out
}

/// Applies a linear map slotwise to a tensor of skein elements.
pub fn map_tensor_slot(
    t: &TensorElement,
    slot: usize,
    f: impl Fn(&BasisTangle) -> SkeinElement,
) -> TensorElement {
    crate::lincomb::map_slot(t, slot, &|b: &BasisTangle| as_tensor(&f(b)))
}

/// `(Δ ⊗ Id)`-style expansion: applies `comul` to one slot.
pub fn comul_slot(t: &TensorElement, slot: usize) -> TensorElement {
    crate::lincomb::map_slot(t, slot, &comul_basis)
}

/// Multiplies the tensor factors `i` and `i + 1`.
pub fn mul_slots(t: &TensorElement, i: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k, c) in t.iter() {
        let prod = mul_basis(&k[i], &k[i + 1]);
        for (b, cb) in prod.iter() {
            let mut key = k[..i].to_vec();
            key.push(b.clone());
            key.extend(k[i + 2..].iter().cloned());
            out.add_term(key, c * cb);
        }
    }
    out
}

/// Collapses a one-factor tensor back to an element.
pub fn from_tensor1(t: &TensorElement) -> SkeinElement {
    t.iter().map(|(k, c)| (k[0].clone(), c.clone())).collect()
}

/// Clears the memo tables for `t` and `R`.
pub fn clear_functional_memo() {
    T_MEMO.clear();
    R_MEMO.clear();
}

impl ExprTarget for SkeinElement {
    fn from_scalar(c: HalfLaurent) -> Self {
        SkeinElement::single(BasisTangle::unit(), c)
    }
    fn generator(name: char) -> Result<Self, String> {
        Ok(match name {
            'a' => gen_a(),
            'b' => gen_b(),
            'c' => gen_c(),
            'd' => gen_d(),
            other => return Err(format!("unknown generator `{other}`")),
        })
    }
    fn beta(mu: Vec<Sign>, nu: Vec<Sign>) -> Result<Self, String> {
        if mu.len() != nu.len() {
            return Err(format!("beta needs equal state counts, found {} and {}", mu.len(), nu.len()));
        }
        Ok(reduce_parallel(&mu, &nu))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        mul(self, other)
    }
    fn scale(&self, c: &HalfLaurent) -> Self {
        LinComb::scale(self, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> HalfLaurent {
        HalfLaurent::q_pow(e)
    }

    #[test]
    fn presentation_relations() {
        let (a, b, c, d) = (gen_a(), gen_b(), gen_c(), gen_d());
        assert_eq!(&mul(&a, &d) - &mul(&b, &c).scale(&q(-2)), unit());
        assert_eq!(&mul(&d, &a) - &mul(&c, &b).scale(&q(2)), unit());
        assert!((&mul(&c, &a) - &mul(&a, &c).scale(&q(2))).is_zero());
        assert!((&mul(&b, &a) - &mul(&a, &b).scale(&q(2))).is_zero());
        assert!((&mul(&d, &b) - &mul(&b, &d).scale(&q(2))).is_zero());
        assert!((&mul(&d, &c) - &mul(&c, &d).scale(&q(2))).is_zero());
        assert_eq!(mul(&b, &c), mul(&c, &b));
    }

    #[test]
    fn coproduct_of_generators() {
        let got = comul(&gen_a());
        let mut want = TensorElement::zero();
        want.add_term(vec![BasisTangle::new_unchecked(vec![Sign::Plus], vec![Sign::Plus]); 2], HalfLaurent::one());
        want.add_term(
            vec![
                BasisTangle::new_unchecked(vec![Sign::Plus], vec![Sign::Minus]),
                BasisTangle::new_unchecked(vec![Sign::Minus], vec![Sign::Plus]),
            ],
            HalfLaurent::one(),
        );
        assert_eq!(got, want);
        assert_eq!(counit(&gen_b()), HalfLaurent::zero());
        assert_eq!(counit(&mul(&gen_a(), &gen_d())), HalfLaurent::one());
    }

    #[test]
    fn antipode_and_rotation_of_generators() {
        assert_eq!(antipode(&gen_a()), gen_d());
        assert_eq!(antipode(&gen_b()), gen_b().scale(&-q(2)));
        assert_eq!(antipode(&gen_c()), gen_c().scale(&-q(-2)));
        assert_eq!(antipode(&gen_d()), gen_a());
        assert_eq!(rot_star(&gen_b()), gen_c());
        assert_eq!(rot_star(&gen_a()), gen_a());
    }

    #[test]
    fn functional_generator_values() {
        assert_eq!(t_form(&gen_b()), -HalfLaurent::s_pow(5));
        assert_eq!(t_form(&gen_c()), HalfLaurent::s_pow(1));
        assert!(t_form(&gen_a()).is_zero());
        assert!(t_form(&gen_d()).is_zero());
        assert_eq!(theta_form(&gen_a()), -q(3));
        assert_eq!(theta_form(&gen_d()), -q(3));
        assert!(theta_form(&gen_b()).is_zero());
        assert_eq!(r_form(&gen_a(), &gen_a()), q(1));
        assert_eq!(r_form(&gen_b(), &gen_c()), HalfLaurent::from_terms([(2, 1), (-6, -1)]));
    }

    #[test]
    fn inversion_of_b() {
        assert_eq!(inv_edge(&gen_b(), Edge::East, false), gen_a().scale(&HalfLaurent::s_pow(-1)));
        assert_eq!(ht_coaction(&gen_a()), gen_b().scale(&HalfLaurent::s_pow(1)));
        assert_eq!(inv_edge(&unit(), Edge::East, false), unit());
    }

    #[test]
    fn braided_opposite_on_a() {
        let a = gen_a();
        assert_eq!(braided_opposite_mul(&a, &a), mul(&a, &a).scale(&q(1)));
        assert_eq!(crossed_stacking(&a, &a), mul(&a, &a).scale(&q(1)));
        assert_eq!(braided_opposite_mul(&unit(), &a), a);
    }
}
