//! `O_{q^2}(SL_2)` by generators and relations, in PBW normal form.
//!
//! The basis is `a^i b^j c^k` together with `d^l b^j c^k` for `l >= 1`.

use std::fmt;

use crate::bigon;
use crate::diagram::{reduce_parallel, BasisTangle, Sign, SkeinElement};
use crate::expr::ExprTarget;
use crate::lincomb::{tensor_mul, LinComb, Tensor};
use crate::scalar::HalfLaurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    /// The generator with west state `mu` and east state `nu`.
    pub fn from_states(mu: Sign, nu: Sign) -> Letter {
        match (mu, nu) {
            (Sign::Plus, Sign::Plus) => Letter::A,
            (Sign::Plus, Sign::Minus) => Letter::B,
            (Sign::Minus, Sign::Plus) => Letter::C,
            (Sign::Minus, Sign::Minus) => Letter::D,
        }
    }

    pub fn states(self) -> (Sign, Sign) {
        match self {
            Letter::A => (Sign::Plus, Sign::Plus),
            Letter::B => (Sign::Plus, Sign::Minus),
            Letter::C => (Sign::Minus, Sign::Plus),
            Letter::D => (Sign::Minus, Sign::Minus),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }
}

/// A PBW monomial `a^a d^d b^b c^c` with at most one of `a`, `d` nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pbw {
    a: u32,
    d: u32,
    b: u32,
    c: u32,
}

impl Pbw {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Option<Pbw> {
        if a > 0 && d > 0 {
            None
        } else {
            Some(Pbw { a, d, b, c })
        }
    }

    pub fn one() -> Pbw {
        Pbw { a: 0, d: 0, b: 0, c: 0 }
    }

    pub fn exponents(&self) -> (u32, u32, u32, u32) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// The letters in normal order `a.. b.. c.. d..`.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        out.extend(std::iter::repeat_n(Letter::A, self.a as usize));
        out.extend(std::iter::repeat_n(Letter::D, self.d as usize));
        out.extend(std::iter::repeat_n(Letter::B, self.b as usize));
        out.extend(std::iter::repeat_n(Letter::C, self.c as usize));
        out
    }

    /// All monomials of degree exactly `n`; there are `(n+1)^2` of them.
    pub fn of_degree(n: u32) -> Vec<Pbw> {
        let mut out = Vec::new();
        for b in 0..=n {
            for c in 0..=n - b {
                let rest = n - b - c;
                out.push(Pbw { a: rest, d: 0, b, c });
                if rest > 0 {
                    out.push(Pbw { a: 0, d: rest, b, c });
                }
            }
        }
        out.sort();
        out
    }

    pub fn up_to(n: u32) -> Vec<Pbw> {
        (0..=n).flat_map(Pbw::of_degree).collect()
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [('a', self.a), ('d', self.d), ('b', self.b), ('c', self.c)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|&(l, e)| if e == 1 { l.to_string() } else { format!("{l}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub type HopfElement = LinComb<Pbw>;

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::diagram::write_terms(f, self.iter())
    }
}

impl fmt::Display for Tensor<Pbw> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<(String, &HalfLaurent)> = self
            .iter()
            .map(|(k, c)| (k.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ⊗ "), c))
            .collect();
        crate::diagram::write_terms(f, keys.iter().map(|(k, c)| (k, *c)))
    }
}

pub fn hopf_unit() -> HopfElement {
    HopfElement::basis(Pbw::one())
}

pub fn letter(l: Letter) -> HopfElement {
    let m = match l {
        Letter::A => Pbw { a: 1, d: 0, b: 0, c: 0 },
        Letter::B => Pbw { a: 0, d: 0, b: 1, c: 0 },
        Letter::C => Pbw { a: 0, d: 0, b: 0, c: 1 },
        Letter::D => Pbw { a: 0, d: 1, b: 0, c: 0 },
    };
    HopfElement::basis(m)
}

fn q2(e: i64) -> HalfLaurent {
    HalfLaurent::q_pow(2 * e)
}

/// `m · l` in normal form.
pub fn mul_letter_right(m: Pbw, l: Letter) -> HopfElement {
    let bc = (m.b + m.c) as i64;
    match l {
        Letter::B => HopfElement::basis(Pbw { b: m.b + 1, ..m }),
        Letter::C => HopfElement::basis(Pbw { c: m.c + 1, ..m }),
        Letter::A if m.d == 0 => HopfElement::single(Pbw { a: m.a + 1, ..m }, q2(bc)),
        Letter::A => {
            // d^l a = d^{l-1} (1 + q^2 bc)
            let base = Pbw { d: m.d - 1, ..m };
            let mut out = HopfElement::single(base, q2(bc));
            out.add_term(Pbw { b: m.b + 1, c: m.c + 1, ..base }, q2(bc + 1));
            out
        }
        Letter::D if m.a == 0 => HopfElement::single(Pbw { d: m.d + 1, ..m }, q2(-bc)),
        Letter::D => {
            // a^i d = a^{i-1} (1 + q^-2 bc)
            let base = Pbw { a: m.a - 1, ..m };
            let mut out = HopfElement::single(base, q2(-bc));
            out.add_term(Pbw { b: m.b + 1, c: m.c + 1, ..base }, q2(-bc - 1));
            out
        }
    }
}

fn mul_right_letter(x: &HopfElement, l: Letter) -> HopfElement {
    x.flat_map(|m| mul_letter_right(*m, l))
}

/// Rewrites a free word in the generators to normal form.
pub fn normalize(word: &[Letter]) -> HopfElement {
    word.iter().fold(hopf_unit(), |acc, &l| mul_right_letter(&acc, l))
}

pub fn mul_pbw(x: &Pbw, y: &Pbw) -> HopfElement {
    y.letters()
        .into_iter()
        .fold(HopfElement::basis(*x), |acc, l| mul_right_letter(&acc, l))
}

pub fn mul(x: &HopfElement, y: &HopfElement) -> HopfElement {
    let mut out = HopfElement::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            out.add_scaled(&mul_pbw(mx, my), &(cx * cy));
        }
    }
    out
}

fn letter_comul(l: Letter) -> Tensor<Pbw> {
    use Letter::*;
    let pairs = match l {
        A => [(A, A), (B, C)],
        B => [(A, B), (B, D)],
        C => [(C, A), (D, C)],
        D => [(C, B), (D, D)],
    };
    let mut out = Tensor::zero();
    for (x, y) in pairs {
        let kx = *letter(x).keys().next().expect("letter");
        let ky = *letter(y).keys().next().expect("letter");
        out.add_term(vec![kx, ky], HalfLaurent::one());
    }
    out
}

pub fn comul_pbw(m: &Pbw) -> Tensor<Pbw> {
    let mut acc = Tensor::basis(vec![Pbw::one(), Pbw::one()]);
    for l in m.letters() {
        acc = tensor_mul(&acc, &letter_comul(l), &mul_pbw);
    }
    acc
}

/// The matrix coproduct, extended as an algebra map.
pub fn comul(x: &HopfElement) -> Tensor<Pbw> {
    let mut out = Tensor::zero();
    for (m, c) in x.iter() {
        out.add_scaled(&comul_pbw(m), c);
    }
    out
}

pub fn counit_pbw(m: &Pbw) -> HalfLaurent {
    if m.b == 0 && m.c == 0 {
        HalfLaurent::one()
    } else {
        HalfLaurent::zero()
    }
}

pub fn counit(x: &HopfElement) -> HalfLaurent {
    x.pair(counit_pbw)
}

fn letter_antipode(l: Letter) -> HopfElement {
    match l {
        Letter::A => letter(Letter::D),
        Letter::B => letter(Letter::B).scale(&-HalfLaurent::q_pow(2)),
        Letter::C => letter(Letter::C).scale(&-HalfLaurent::q_pow(-2)),
        Letter::D => letter(Letter::A),
    }
}

pub fn antipode_pbw(m: &Pbw) -> HopfElement {
    m.letters()
        .into_iter()
        .rev()
        .fold(hopf_unit(), |acc, l| mul(&acc, &letter_antipode(l)))
}

/// `S`, extended as an anti-algebra map.
pub fn antipode(x: &HopfElement) -> HopfElement {
    x.flat_map(antipode_pbw)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UGenerator {
    E,
    F,
    K,
    KInv,
}

impl UGenerator {
    pub const ALL: [UGenerator; 4] = [UGenerator::E, UGenerator::F, UGenerator::K, UGenerator::KInv];
}

impl fmt::Display for UGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UGenerator::E => "E",
            UGenerator::F => "F",
            UGenerator::K => "K",
            UGenerator::KInv => "K^-1",
        };
        write!(f, "{s}")
    }
}

fn pair_letter(g: UGenerator, l: Letter) -> HalfLaurent {
    match (g, l) {
        (UGenerator::K, Letter::A) | (UGenerator::KInv, Letter::D) => HalfLaurent::q_pow(2),
        (UGenerator::K, Letter::D) | (UGenerator::KInv, Letter::A) => HalfLaurent::q_pow(-2),
        (UGenerator::E, Letter::B) | (UGenerator::F, Letter::C) => HalfLaurent::one(),
        _ => HalfLaurent::zero(),
    }
}

fn letters_counit(w: &[Letter]) -> HalfLaurent {
    if w.iter().all(|l| matches!(l, Letter::A | Letter::D)) {
        HalfLaurent::one()
    } else {
        HalfLaurent::zero()
    }
}

fn pair_word(g: UGenerator, w: &[Letter]) -> HalfLaurent {
    match w.split_first() {
        None => match g {
            UGenerator::K | UGenerator::KInv => HalfLaurent::one(),
            UGenerator::E | UGenerator::F => HalfLaurent::zero(),
        },
        Some((&l, rest)) => match g {
            UGenerator::K | UGenerator::KInv => w.iter().map(|&l| pair_letter(g, l)).product(),
            UGenerator::E => {
                &(&letters_counit(&[l]) * &pair_word(g, rest))
                    + &(&pair_letter(g, l) * &pair_word(UGenerator::K, rest))
            }
            UGenerator::F => {
                &(&pair_letter(UGenerator::KInv, l) * &pair_word(g, rest))
                    + &(&pair_letter(g, l) * &letters_counit(rest))
            }
        },
    }
}

/// `<u, x>` for a word `u` in the generators of `U_{q^2}(sl_2)`.
pub fn pairing(u: &[UGenerator], x: &HopfElement) -> HalfLaurent {
    match u {
        [] => counit(x),
        [g] => x.pair(|m| pair_word(*g, &m.letters())),
        [g, rest @ ..] => comul(x).pair(|k| {
            let left = pair_word(*g, &k[0].letters());
            if left.is_zero() {
                return left;
            }
            &left * &pairing(rest, &HopfElement::basis(k[1]))
        }),
    }
}

pub fn to_skein_pbw(m: &Pbw) -> SkeinElement {
    let (mu, nu): (Vec<Sign>, Vec<Sign>) = m.letters().into_iter().map(Letter::states).unzip();
    reduce_parallel(&mu, &nu)
}

/// The Hopf isomorphism onto the stated skein algebra of the bigon.
pub fn to_skein(x: &HopfElement) -> SkeinElement {
    x.flat_map(to_skein_pbw)
}

pub fn from_skein_basis(b: &BasisTangle) -> HopfElement {
    let word: Vec<Letter> = b
        .mu()
        .iter()
        .zip(b.nu())
        .map(|(&m, &n)| Letter::from_states(m, n))
        .collect();
    normalize(&word)
}

pub fn from_skein(y: &SkeinElement) -> HopfElement {
    y.flat_map(from_skein_basis)
}

/// `t` on a PBW element, computed in the skein algebra.
pub fn t_form(x: &HopfElement) -> HalfLaurent {
    bigon::t_form(&to_skein(x))
}

pub fn theta_form(x: &HopfElement) -> HalfLaurent {
    bigon::theta_form(&to_skein(x))
}

pub fn r_form(x: &HopfElement, y: &HopfElement) -> HalfLaurent {
    bigon::r_form(&to_skein(x), &to_skein(y))
}

impl ExprTarget for HopfElement {
    fn from_scalar(c: HalfLaurent) -> Self {
        HopfElement::single(Pbw::one(), c)
    }
    fn generator(name: char) -> Result<Self, String> {
        Ok(match name {
            'a' => letter(Letter::A),
            'b' => letter(Letter::B),
            'c' => letter(Letter::C),
            'd' => letter(Letter::D),
            other => return Err(format!("unknown generator `{other}`")),
        })
    }
    fn beta(mu: Vec<Sign>, nu: Vec<Sign>) -> Result<Self, String> {
        if mu.len() != nu.len() {
            return Err(format!("beta needs equal state counts, found {} and {}", mu.len(), nu.len()));
        }
        let word: Vec<Letter> = mu.iter().zip(&nu).map(|(&m, &n)| Letter::from_states(m, n)).collect();
        Ok(normalize(&word))
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
    use Letter::*;

    fn q(e: i64) -> HalfLaurent {
        HalfLaurent::q_pow(e)
    }

    #[test]
    fn normal_form_examples() {
        let mut ad = hopf_unit();
        ad.add_term(Pbw::new(0, 1, 1, 0).unwrap(), q(-2));
        assert_eq!(normalize(&[A, D]), ad);
        assert_eq!(normalize(&[B, A]), HopfElement::single(Pbw::new(1, 1, 0, 0).unwrap(), q(2)));
        let mut da = hopf_unit();
        da.add_term(Pbw::new(0, 1, 1, 0).unwrap(), q(2));
        assert_eq!(normalize(&[D, A]), da);
    }

    #[test]
    fn monomial_counts() {
        for n in 0..5 {
            assert_eq!(Pbw::of_degree(n).len(), ((n + 1) * (n + 1)) as usize);
        }
    }

    #[test]
    fn hopf_generators() {
        let got = comul(&letter(B));
        let mut want = Tensor::zero();
        want.add_term(vec![Pbw::new(1, 0, 0, 0).unwrap(), Pbw::new(0, 1, 0, 0).unwrap()], HalfLaurent::one());
        want.add_term(vec![Pbw::new(0, 1, 0, 0).unwrap(), Pbw::new(0, 0, 0, 1).unwrap()], HalfLaurent::one());
        assert_eq!(got, want);
        assert_eq!(antipode(&letter(C)), letter(C).scale(&-q(-2)));
    }

    #[test]
    fn pairing_values() {
        assert_eq!(pairing(&[UGenerator::E], &letter(B)), HalfLaurent::one());
        assert_eq!(pairing(&[UGenerator::K], &normalize(&[A, D])), HalfLaurent::one());
        assert_eq!(pairing(&[UGenerator::K], &letter(A)), q(2));
    }

    #[test]
    fn transport_dictionary() {
        assert_eq!(to_skein(&letter(A)), bigon::gen_a());
        let ad = BasisTangle::new(vec![Sign::Plus, Sign::Minus], vec![Sign::Plus, Sign::Minus]).unwrap();
        let x = from_skein_basis(&ad);
        assert_eq!(x, normalize(&[A, D]));
        assert_eq!(to_skein(&x), SkeinElement::basis(ad));
    }
}
