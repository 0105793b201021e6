//! Named verification suites. Each suite is a list of independent cases; a case either
//! passes or fails with a witness.

use std::fmt::Display;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bigon::{self, antipode, antipode_basis, comul, comul_slot, counit, counit_basis, map_tensor_slot, rot_star, rot_star_basis, t_form, t_inv_form, theta_form, Edge, TensorElement};
use crate::comodule::{self, braiding_matrix, flip_matrix, ht_matrix, identity_matrix, kron, mat_mul, mat_scale, mat_sub, multiplicity, quantum_plane_vn, rt_entry, rt_evaluate, standard_v, tensor, tensor_power, u_action, Matrix};
use crate::diagram::{all_states, bracket, delta, reduce, reduce_parallel, BasisTangle, Sign, SkeinElement, Slice, SliceWord, StatedWord};
use crate::excision::{self, Variant};
use crate::internal;
use crate::lincomb::{as_tensor, contract_slot, swap_slots, tensor_product, Tensor};
use crate::matching::enumerate_matchings;
use crate::oracle::{naive_reduce, random_stated_word};
use crate::report::{CaseResult, Parameters, Report, Status};
use crate::scalar::{HalfLaurent, Specialization};
use crate::sl2::{self, Letter, Pbw, UGenerator};
use crate::{Error, Result};

pub const SUITES: [&str; 11] =
    ["hopf", "iso", "coquasi", "halfribbon", "leftright", "braidop", "rt", "comodule", "st", "excision", "all"];

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct Params {
    pub max_degree: usize,
    pub specializations: Vec<Specialization>,
    pub seed: Option<u64>,
}

impl Default for Params {
    fn default() -> Self {
        Self { max_degree: 3, specializations: Specialization::defaults(), seed: None }
    }
}

impl Params {
    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    fn to_parameters(&self) -> Parameters {
        Parameters {
            max_degree: self.max_degree,
            specializations: self.specializations.iter().map(|s| s.to_string()).collect(),
            seed: self.seed,
        }
    }
}

pub type Outcome = std::result::Result<(), String>;
type Check = Box<dyn Fn(&Params) -> Outcome + Send + Sync>;

pub struct Case {
    pub name: String,
    check: Check,
}

impl Case {
    fn new(name: &str, check: impl Fn(&Params) -> Outcome + Send + Sync + 'static) -> Self {
        Self { name: name.to_string(), check: Box::new(check) }
    }

    pub fn run(&self, p: &Params) -> Outcome {
        (self.check)(p)
    }
}

const WITNESS_LIMIT: usize = 600;

fn clip(s: String) -> String {
    if s.chars().count() <= WITNESS_LIMIT {
        return s;
    }
    let cut: String = s.chars().take(WITNESS_LIMIT).collect();
    format!("{cut} ...")
}

fn expect_eq<T: PartialEq + Display>(what: impl Display, lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn elem(b: &BasisTangle) -> SkeinElement {
    SkeinElement::basis(b.clone())
}

fn q(e: i64) -> HalfLaurent {
    HalfLaurent::q_pow(e)
}

fn s(e: i64) -> HalfLaurent {
    HalfLaurent::s_pow(e)
}

fn for_basis(n: usize, f: impl FnMut(&BasisTangle) -> Outcome) -> Outcome {
    BasisTangle::up_to(n).iter().try_for_each(f)
}

fn for_pairs(n: usize, mut f: impl FnMut(&BasisTangle, &BasisTangle) -> Outcome) -> Outcome {
    let basis = BasisTangle::up_to(n);
    for x in &basis {
        for y in &basis {
            f(x, y)?;
        }
    }
    Ok(())
}

fn sum_scaled(t: &TensorElement, f: impl Fn(&[BasisTangle]) -> (HalfLaurent, SkeinElement)) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (k, c) in t.iter() {
        let (scalar, e) = f(k);
        if scalar.is_zero() {
            continue;
        }
        out.add_scaled(&e, &(c * &scalar));
    }
    out
}

fn t_of(b: &BasisTangle) -> HalfLaurent {
    t_form(&elem(b))
}

fn r_of(x: &BasisTangle, y: &BasisTangle) -> HalfLaurent {
    bigon::r_form(&elem(x), &elem(y))
}

/// The full twist braid on `n` strands, built from `gate`.
fn full_twist(n: usize, gate: fn(usize) -> Slice) -> SliceWord {
    let mut slices = Vec::new();
    for _ in 0..2 {
        for k in (1..n).rev() {
            for j in 0..k {
                slices.push(gate(j));
            }
        }
    }
    SliceWord::new(n, slices).expect("braid")
}

/// `θ` on `β(μ;ν)` read off from the full twist and the framing of each strand.
pub fn theta_by_twist(mu: &[Sign], nu: &[Sign]) -> HalfLaurent {
    let n = mu.len();
    let kinks = (-q(3)).pow(n as u32);
    &kinks * &rt_entry(&full_twist(n, Slice::Cross), nu, mu)
}

fn suite_hopf() -> Vec<Case> {
    vec![
        Case::new("generators", |_| {
            let (a, b, c, d) = (bigon::gen_a(), bigon::gen_b(), bigon::gen_c(), bigon::gen_d());
            let unit = bigon::unit();
            expect_eq("ad - q^-2 bc", &(&bigon::mul(&a, &d) - &bigon::mul(&b, &c).scale(&q(-2))), &unit)?;
            expect_eq("da - q^2 cb", &(&bigon::mul(&d, &a) - &bigon::mul(&c, &b).scale(&q(2))), &unit)?;
            expect_eq("ca", &bigon::mul(&c, &a), &bigon::mul(&a, &c).scale(&q(2)))?;
            expect_eq("ba", &bigon::mul(&b, &a), &bigon::mul(&a, &b).scale(&q(2)))?;
            expect_eq("db", &bigon::mul(&d, &b), &bigon::mul(&b, &d).scale(&q(2)))?;
            expect_eq("dc", &bigon::mul(&d, &c), &bigon::mul(&c, &d).scale(&q(2)))?;
            expect_eq("bc", &bigon::mul(&b, &c), &bigon::mul(&c, &b))?;
            let t = |x: &SkeinElement| as_tensor(x);
            expect_eq("Δ(a)", &comul(&a), &(&tensor_product(&t(&a), &t(&a)) + &tensor_product(&t(&b), &t(&c))))?;
            expect_eq("Δ(b)", &comul(&b), &(&tensor_product(&t(&a), &t(&b)) + &tensor_product(&t(&b), &t(&d))))?;
            expect_eq("ε(b)", &counit(&b), &HalfLaurent::zero())?;
            expect_eq("ε(ad)", &counit(&bigon::mul(&a, &d)), &HalfLaurent::one())?;
            expect_eq("S(a)", &antipode(&a), &d)?;
            expect_eq("S(b)", &antipode(&b), &b.scale(&-q(2)))?;
            expect_eq("S(c)", &antipode(&c), &c.scale(&-q(-2)))?;
            expect_eq("S(d)", &antipode(&d), &a)
        }),
        Case::new("coassociativity", |p| {
            for_basis(p.max_degree, |x| {
                let d = comul(&elem(x));
                expect_eq(format!("x = {x}"), &comul_slot(&d, 0), &comul_slot(&d, 1))
            })
        }),
        Case::new("counit", |p| {
            for_basis(p.max_degree, |x| {
                let d = comul(&elem(x));
                let want = as_tensor(&elem(x));
                expect_eq(format!("(ε⊗Id)Δ({x})"), &contract_slot(&d, 0, &counit_basis), &want)?;
                expect_eq(format!("(Id⊗ε)Δ({x})"), &contract_slot(&d, 1, &counit_basis), &want)
            })
        }),
        Case::new("antipode", |p| {
            for_basis(p.max_degree, |x| {
                let d = comul(&elem(x));
                let want = bigon::unit().scale(&counit_basis(x));
                let left = sum_scaled(&d, |k| (HalfLaurent::one(), bigon::mul(&antipode_basis(&k[0]), &elem(&k[1]))));
                let right = sum_scaled(&d, |k| (HalfLaurent::one(), bigon::mul(&elem(&k[0]), &antipode_basis(&k[1]))));
                expect_eq(format!("S(x₁)x₂ for x = {x}"), &left, &want)?;
                expect_eq(format!("x₁S(x₂) for x = {x}"), &right, &want)
            })
        }),
        Case::new("comul_multiplicative", |p| {
            for_pairs(p.max_degree.min(2), |x, y| {
                let lhs = comul(&bigon::mul(&elem(x), &elem(y)));
                let rhs = crate::lincomb::tensor_mul(&comul(&elem(x)), &comul(&elem(y)), &bigon::mul_basis);
                expect_eq(format!("Δ({x} {y})"), &lhs, &rhs)?;
                expect_eq(
                    format!("ε({x} {y})"),
                    &counit(&bigon::mul(&elem(x), &elem(y))),
                    &(&counit_basis(x) * &counit_basis(y)),
                )
            })
        }),
        Case::new("antipode_anti_multiplicative", |p| {
            for_pairs(p.max_degree.min(2), |x, y| {
                let lhs = antipode(&bigon::mul(&elem(x), &elem(y)));
                let rhs = bigon::mul(&antipode_basis(y), &antipode_basis(x));
                expect_eq(format!("S({x} {y})"), &lhs, &rhs)
            })
        }),
        Case::new("rot_examples", |_| {
            expect_eq("rot(b)", &rot_star(&bigon::gen_b()), &bigon::gen_c())?;
            expect_eq("rot(c)", &rot_star(&bigon::gen_c()), &bigon::gen_b())?;
            expect_eq("rot(a)", &rot_star(&bigon::gen_a()), &bigon::gen_a())?;
            expect_eq("rot(d)", &rot_star(&bigon::gen_d()), &bigon::gen_d())
        }),
        Case::new("rot_algebra_map", |p| {
            for_pairs(p.max_degree.min(2), |x, y| {
                let lhs = rot_star(&bigon::mul(&elem(x), &elem(y)));
                let rhs = bigon::mul(&rot_star_basis(x), &rot_star_basis(y));
                expect_eq(format!("rot({x} {y})"), &lhs, &rhs)
            })
        }),
        Case::new("rot_involution", |p| {
            for_basis(p.max_degree, |x| expect_eq(format!("rot(rot({x}))"), &rot_star(&rot_star_basis(x)), &elem(x)))
        }),
        Case::new("rot_reverses_coproduct", |p| {
            for_basis(p.max_degree, |x| {
                let lhs = comul(&rot_star_basis(x));
                let d = comul(&elem(x));
                let rotated = map_tensor_slot(&map_tensor_slot(&d, 0, rot_star_basis), 1, rot_star_basis);
                expect_eq(format!("Δ(rot({x}))"), &lhs, &swap_slots(&rotated, 0, 1))?;
                expect_eq(format!("ε(rot({x}))"), &counit(&rot_star_basis(x)), &counit_basis(x))
            })
        }),
    ]
}

fn transport_tensor(t: &Tensor<Pbw>) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k, c) in t.iter() {
        let mut term = TensorElement::basis(Vec::new());
        for m in k {
            term = tensor_product(&term, &as_tensor(&sl2::to_skein_pbw(m)));
        }
        out.add_scaled(&term, c);
    }
    out
}

fn pbw(m: &Pbw) -> sl2::HopfElement {
    sl2::HopfElement::basis(*m)
}

fn suite_iso() -> Vec<Case> {
    vec![
        Case::new("dictionary", |_| {
            for l in [Letter::A, Letter::B, Letter::C, Letter::D] {
                let (mu, nu) = l.states();
                let want = bigon::generator(mu, nu);
                expect_eq(format!("φ({})", l.as_char()), &sl2::to_skein(&sl2::letter(l)), &want)?;
                expect_eq(format!("φ^-1({want})"), &sl2::from_skein(&want), &sl2::letter(l))?;
            }
            let ad = sl2::normalize(&[Letter::A, Letter::D]);
            let want = &sl2::hopf_unit() + &sl2::normalize(&[Letter::B, Letter::C]).scale(&q(-2));
            expect_eq("normalize(ad)", &ad, &want)?;
            let ba = sl2::normalize(&[Letter::B, Letter::A]);
            expect_eq("normalize(ba)", &ba, &sl2::normalize(&[Letter::A, Letter::B]).scale(&q(2)))
        }),
        Case::new("round_trip", |p| {
            for m in Pbw::up_to(p.max_degree as u32) {
                expect_eq(format!("φ^-1(φ({m}))"), &sl2::from_skein(&sl2::to_skein_pbw(&m)), &pbw(&m))?;
                let word = m.letters();
                expect_eq(format!("normalize({m})"), &sl2::normalize(&word), &pbw(&m))?;
            }
            for_basis(p.max_degree, |b| {
                expect_eq(format!("φ(φ^-1({b}))"), &sl2::to_skein(&sl2::from_skein_basis(b)), &elem(b))
            })
        }),
        Case::new("algebra_map", |p| {
            let n = p.max_degree as u32;
            for x in Pbw::up_to(n) {
                for y in Pbw::up_to(n - x.degree()) {
                    let lhs = sl2::to_skein(&sl2::mul_pbw(&x, &y));
                    let rhs = bigon::mul(&sl2::to_skein_pbw(&x), &sl2::to_skein_pbw(&y));
                    expect_eq(format!("φ({x} · {y})"), &lhs, &rhs)?;
                }
            }
            Ok(())
        }),
        Case::new("coalgebra_map", |p| {
            for m in Pbw::up_to(p.max_degree as u32) {
                let img = sl2::to_skein_pbw(&m);
                expect_eq(format!("Δ(φ({m}))"), &comul(&img), &transport_tensor(&sl2::comul_pbw(&m)))?;
                expect_eq(format!("ε(φ({m}))"), &counit(&img), &sl2::counit_pbw(&m))?;
                expect_eq(format!("S(φ({m}))"), &antipode(&img), &sl2::to_skein(&sl2::antipode_pbw(&m)))?;
            }
            Ok(())
        }),
        Case::new("pbw_hopf_axioms", |p| {
            let n = p.max_degree as u32;
            for m in Pbw::up_to(n) {
                let d = sl2::comul_pbw(&m);
                expect_eq(
                    format!("coassociativity on {m}"),
                    &crate::lincomb::map_slot(&d, 0, &sl2::comul_pbw),
                    &crate::lincomb::map_slot(&d, 1, &sl2::comul_pbw),
                )?;
                let mut left = sl2::HopfElement::zero();
                let mut right = sl2::HopfElement::zero();
                for (k, c) in d.iter() {
                    left.add_scaled(&sl2::mul(&sl2::antipode_pbw(&k[0]), &pbw(&k[1])), c);
                    right.add_scaled(&sl2::mul(&pbw(&k[0]), &sl2::antipode_pbw(&k[1])), c);
                }
                let want = sl2::hopf_unit().scale(&sl2::counit_pbw(&m));
                expect_eq(format!("S(x₁)x₂ on {m}"), &left, &want)?;
                expect_eq(format!("x₁S(x₂) on {m}"), &right, &want)?;
            }
            for x in Pbw::up_to(n) {
                for y in Pbw::up_to(n - x.degree()) {
                    let lhs = sl2::comul(&sl2::mul_pbw(&x, &y));
                    let rhs = crate::lincomb::tensor_mul(&sl2::comul_pbw(&x), &sl2::comul_pbw(&y), &sl2::mul_pbw);
                    expect_eq(format!("Δ({x} · {y})"), &lhs, &rhs)?;
                }
            }
            Ok(())
        }),
        Case::new("pairing", |p| {
            use UGenerator::{KInv, E, F, K};
            let gen = |l| sl2::letter(l);
            expect_eq("<E,b>", &sl2::pairing(&[E], &gen(Letter::B)), &HalfLaurent::one())?;
            expect_eq("<F,c>", &sl2::pairing(&[F], &gen(Letter::C)), &HalfLaurent::one())?;
            expect_eq("<K,a>", &sl2::pairing(&[K], &gen(Letter::A)), &q(2))?;
            expect_eq("<K,d>", &sl2::pairing(&[K], &gen(Letter::D)), &q(-2))?;
            let ad = sl2::normalize(&[Letter::A, Letter::D]);
            expect_eq("<K,ad>", &sl2::pairing(&[K], &ad), &HalfLaurent::one())?;
            let bound = (p.max_degree as u32).min(2);
            for m in Pbw::up_to(bound) {
                let x = pbw(&m);
                let pr = |u: &[UGenerator]| sl2::pairing(u, &x);
                let lhs = &(&pr(&[E, F]) - &pr(&[F, E])) * &(&q(2) - &q(-2));
                expect_eq(format!("<EF - FE, {m}>"), &lhs, &(&pr(&[K]) - &pr(&[KInv])))?;
                expect_eq(format!("<KE, {m}>"), &pr(&[K, E]), &(&q(4) * &pr(&[E, K])))?;
                expect_eq(format!("<KF, {m}>"), &pr(&[K, F]), &(&q(-4) * &pr(&[F, K])))?;
                expect_eq(format!("<K K^-1, {m}>"), &pr(&[K, KInv]), &sl2::counit(&x))?;
                let sx = sl2::antipode(&x);
                let ps = |u: &[UGenerator]| sl2::pairing(u, &sx);
                expect_eq(format!("<S(E), {m}>"), &-pr(&[E, KInv]), &ps(&[E]))?;
                expect_eq(format!("<S(F), {m}>"), &-pr(&[K, F]), &ps(&[F]))?;
                expect_eq(format!("<S(K), {m}>"), &pr(&[KInv]), &ps(&[K]))?;
            }
            Ok(())
        }),
        Case::new("transported_functionals", |_| {
            let g = |l| sl2::letter(l);
            expect_eq("t(b)", &sl2::t_form(&g(Letter::B)), &-s(5))?;
            expect_eq("t(c)", &sl2::t_form(&g(Letter::C)), &s(1))?;
            expect_eq("t(a)", &sl2::t_form(&g(Letter::A)), &HalfLaurent::zero())?;
            expect_eq("θ(a)", &sl2::theta_form(&g(Letter::A)), &-q(3))?;
            expect_eq("R(b,c)", &sl2::r_form(&g(Letter::B), &g(Letter::C)), &(&q(1) - &q(-3)))
        }),
    ]
}

fn expected_r(x: (Sign, Sign), y: (Sign, Sign)) -> HalfLaurent {
    use Sign::{Minus as M, Plus as P};
    match (x, y) {
        ((P, P), (P, P)) | ((M, M), (M, M)) => q(1),
        ((P, P), (M, M)) | ((M, M), (P, P)) => q(-1),
        ((P, M), (M, P)) => &q(1) - &q(-3),
        _ => HalfLaurent::zero(),
    }
}

fn generator_pairs() -> Vec<(Sign, Sign)> {
    let mut out = Vec::new();
    for m in Sign::BOTH {
        for n in Sign::BOTH {
            out.push((m, n));
        }
    }
    out
}

fn suite_coquasi() -> Vec<Case> {
    vec![
        Case::new("r_generators", |_| {
            for x in generator_pairs() {
                for y in generator_pairs() {
                    let got = bigon::r_form(&bigon::generator(x.0, x.1), &bigon::generator(y.0, y.1));
                    expect_eq(format!("R({x:?}, {y:?})"), &got, &expected_r(x, y))?;
                }
            }
            Ok(())
        }),
        Case::new("theta_generators", |_| {
            expect_eq("θ(a)", &theta_form(&bigon::gen_a()), &-q(3))?;
            expect_eq("θ(d)", &theta_form(&bigon::gen_d()), &-q(3))?;
            expect_eq("θ(b)", &theta_form(&bigon::gen_b()), &HalfLaurent::zero())?;
            expect_eq("θ(c)", &theta_form(&bigon::gen_c()), &HalfLaurent::zero())
        }),
        Case::new("exchange_law", |p| {
            for_pairs(p.max_degree.min(2), |x, y| {
                let lhs = bigon::braided_opposite_mul(&elem(x), &elem(y));
                let (dx, dy) = (comul(&elem(x)), comul(&elem(y)));
                let mut rhs = SkeinElement::zero();
                for (kx, cx) in dx.iter() {
                    for (ky, cy) in dy.iter() {
                        let r = r_of(&kx[0], &ky[0]);
                        if !r.is_zero() {
                            rhs.add_scaled(&bigon::mul_basis(&kx[1], &ky[1]), &(&(cx * cy) * &r));
                        }
                    }
                }
                expect_eq(format!("y₁x₁R(x₂⊗y₂) vs R(x₁⊗y₁)x₂y₂ for x = {x}, y = {y}"), &lhs, &rhs)
            })
        }),
        Case::new("theta_central", |p| {
            for_basis(p.max_degree, |x| {
                let d = comul(&elem(x));
                let left = sum_scaled(&d, |k| (theta_form(&elem(&k[0])), elem(&k[1])));
                let right = sum_scaled(&d, |k| (theta_form(&elem(&k[1])), elem(&k[0])));
                expect_eq(format!("θ(x₁)x₂ vs x₁θ(x₂) for x = {x}"), &left, &right)
            })
        }),
        Case::new("braiding_is_crossing", |_| {
            let v = standard_v();
            let word = SliceWord::new(2, vec![Slice::Cross(0)]).expect("crossing");
            let got = braiding_matrix(&v, &v);
            let want = rt_evaluate(&word);
            expect(got == want, || "braiding on V⊗V differs from the crossing matrix".to_string())
        }),
    ]
}

fn suite_halfribbon() -> Vec<Case> {
    vec![
        Case::new("t_generators", |_| {
            expect_eq("t(b)", &t_form(&bigon::gen_b()), &-s(5))?;
            expect_eq("t(c)", &t_form(&bigon::gen_c()), &s(1))?;
            expect_eq("t(a)", &t_form(&bigon::gen_a()), &HalfLaurent::zero())?;
            expect_eq("t(d)", &t_form(&bigon::gen_d()), &HalfLaurent::zero())
        }),
        Case::new("t_convolution_inverse", |p| {
            for_basis(p.max_degree, |x| {
                let e = elem(x);
                expect_eq(format!("t∗t⁻¹({x})"), &bigon::convolve(t_form, t_inv_form, &e), &counit_basis(x))?;
                expect_eq(format!("t⁻¹∗t({x})"), &bigon::convolve(t_inv_form, t_form, &e), &counit_basis(x))
            })
        }),
        Case::new("t_squares_to_twist", |p| {
            for_basis(p.max_degree, |x| {
                expect_eq(format!("t∗t({x}) vs full twist"), &bigon::convolve(t_form, t_form, &elem(x)), &theta_by_twist(x.mu(), x.nu()))
            })
        }),
        Case::new("t_product_law", |p| {
            let basis = BasisTangle::up_to(p.max_degree);
            for x in &basis {
                for y in &basis {
                    let lhs = t_form(&bigon::mul(&elem(x), &elem(y)));
                    let (dx, dy) = (comul(&elem(x)), comul(&elem(y)));
                    let mut rhs = HalfLaurent::zero();
                    for (kx, cx) in dx.iter() {
                        let tx = t_of(&kx[0]);
                        if tx.is_zero() {
                            continue;
                        }
                        for (ky, cy) in dy.iter() {
                            let ty = t_of(&ky[0]);
                            if ty.is_zero() {
                                continue;
                            }
                            let r = r_of(&kx[1], &ky[1]);
                            rhs += &(&(&(cx * cy) * &(&tx * &ty)) * &r);
                        }
                    }
                    expect_eq(format!("t({x} {y})"), &lhs, &rhs)?;
                }
            }
            Ok(())
        }),
        Case::new("t_is_counit_after_inversion", |p| {
            for_basis(p.max_degree, |x| {
                let e = elem(x);
                expect_eq(format!("ε(inv⁻¹({x}))"), &counit(&bigon::inv_edge(&e, Edge::East, true)), &t_form(&e))?;
                expect_eq(format!("ε(inv({x}))"), &counit(&bigon::inv_edge(&e, Edge::East, false)), &t_inv_form(&e))
            })
        }),
        Case::new("half_twist_inverts_inversion", |p| {
            for_basis(p.max_degree, |x| {
                let e = elem(x);
                expect_eq(format!("ht(inv({x}))"), &bigon::ht_coaction(&bigon::inv_edge(&e, Edge::East, false)), &e)?;
                let back = bigon::inv_edge(&bigon::inv_edge(&e, Edge::East, true), Edge::East, false);
                expect_eq(format!("inv(inv⁻¹({x}))"), &back, &e)?;
                let west = bigon::inv_edge(&bigon::inv_edge(&e, Edge::West, true), Edge::West, false);
                expect_eq(format!("west inv(inv⁻¹({x}))"), &west, &e)
            })
        }),
        Case::new("half_twist_squared", |p| {
            for_basis(p.max_degree.min(2), |x| {
                let e = elem(x);
                let lhs = bigon::ht_coaction(&bigon::ht_coaction(&e));
                let rhs = sum_scaled(&comul(&e), |k| (theta_form(&elem(&k[1])), elem(&k[0])));
                expect_eq(format!("ht(ht({x}))"), &lhs, &rhs)
            })
        }),
        Case::new("inversion_examples", |_| {
            expect_eq("inv(1)", &bigon::inv_edge(&bigon::unit(), Edge::East, false), &bigon::unit())?;
            expect_eq("inv(b)", &bigon::inv_edge(&bigon::gen_b(), Edge::East, false), &bigon::gen_a().scale(&s(-1)))?;
            expect_eq("ht(1)", &bigon::ht_coaction(&bigon::unit()), &bigon::unit())?;
            expect_eq("ht(a)", &bigon::ht_coaction(&bigon::gen_a()), &bigon::gen_b().scale(&s(1)))
        }),
    ]
}

fn suite_leftright() -> Vec<Case> {
    vec![
        Case::new("bridge", |p| {
            for_basis(p.max_degree, |x| {
                let d = comul(&elem(x));
                let lhs = sum_scaled(&d, |k| (t_of(&k[1]), antipode_basis(&k[0])));
                let rhs = sum_scaled(&d, |k| (t_of(&k[0]), rot_star_basis(&k[1])));
                expect_eq(format!("S(x₁)t(x₂) vs rot(x₂)t(x₁) for x = {x}"), &lhs, &rhs)
            })
        }),
        Case::new("antipode_from_rotation", |p| {
            for_basis(p.max_degree, |x| {
                let d3 = comul_slot(&comul(&elem(x)), 1);
                let rhs = sum_scaled(&d3, |k| (&t_of(&k[0]) * &t_inv_form(&elem(&k[2])), rot_star_basis(&k[1])));
                expect_eq(format!("S({x}) vs t(x₁)rot(x₂)t⁻¹(x₃)"), &antipode_basis(x), &rhs)
            })
        }),
    ]
}

fn suite_braidop() -> Vec<Case> {
    vec![
        Case::new("unit", |p| {
            for_basis(p.max_degree, |x| {
                expect_eq(format!("m∘c(1, {x})"), &bigon::braided_opposite_mul(&bigon::unit(), &elem(x)), &elem(x))?;
                expect_eq(format!("m∘c({x}, 1)"), &bigon::braided_opposite_mul(&elem(x), &bigon::unit()), &elem(x))
            })
        }),
        Case::new("generator_a", |_| {
            let a = bigon::gen_a();
            expect_eq("m∘c(a, a)", &bigon::braided_opposite_mul(&a, &a), &bigon::mul(&a, &a).scale(&q(1)))
        }),
        Case::new("crossed_stacking", |p| internal::check_braided_opposite(p.max_degree.min(2)).map(|_| ())),
    ]
}

fn one_sided_words(rng: &mut ChaCha8Rng, count: usize) -> Vec<SliceWord> {
    let mut out = Vec::new();
    for (nw, ne) in [(0, 0), (2, 0), (0, 2), (4, 0), (0, 4), (6, 0), (0, 6)] {
        for m in enumerate_matchings(nw, ne).expect("even") {
            out.push(m.canonical_word());
        }
    }
    while out.len() < count {
        let d = random_stated_word(rng, 3, 6);
        let w = d.word();
        if w.west_arity() == 0 || w.east_arity() == 0 {
            out.push(w.clone());
        }
    }
    out
}

fn compare_all_states(a: &SliceWord, b: &SliceWord, what: &str) -> Outcome {
    for w in all_states(a.west_arity()) {
        for e in all_states(a.east_arity()) {
            let l = reduce(&StatedWord::new(a.clone(), w.clone(), e.clone()).expect("arity"));
            let r = reduce(&StatedWord::new(b.clone(), w.clone(), e.clone()).expect("arity"));
            if l != r {
                return Err(format!("{what} with west={} east={}: {l} != {r}", crate::diagram::fmt_signs(&w), crate::diagram::fmt_signs(&e)));
            }
        }
    }
    Ok(())
}

fn word(n: usize, slices: &[Slice]) -> SliceWord {
    SliceWord::new(n, slices.to_vec()).expect("valid word")
}

fn suite_rt() -> Vec<Case> {
    use Slice::{Cross as X, CrossUnder as Xb};
    vec![
        Case::new("oracle_agreement", |p| {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed());
            for _ in 0..200 {
                let d = random_stated_word(&mut rng, 3, 6);
                expect_eq(format!("{d}"), &reduce(&d), &naive_reduce(&d))?;
            }
            Ok(())
        }),
        Case::new("reidemeister_ii", |_| {
            for n in 2..=3 {
                for i in 0..n - 1 {
                    compare_all_states(&word(n, &[X(i), Xb(i)]), &SliceWord::identity(n), "x;xb")?;
                    compare_all_states(&word(n, &[Xb(i), X(i)]), &SliceWord::identity(n), "xb;x")?;
                }
            }
            Ok(())
        }),
        Case::new("reidemeister_iii", |_| {
            compare_all_states(&word(3, &[X(0), X(1), X(0)]), &word(3, &[X(1), X(0), X(1)]), "x0 x1 x0")?;
            compare_all_states(&word(3, &[Xb(0), Xb(1), Xb(0)]), &word(3, &[Xb(1), Xb(0), Xb(1)]), "xb0 xb1 xb0")?;
            compare_all_states(&word(3, &[X(0), X(1), Xb(0)]), &word(3, &[Xb(1), X(0), X(1)]), "x0 x1 xb0")?;
            compare_all_states(&word(3, &[Xb(0), Xb(1), X(0)]), &word(3, &[X(1), Xb(0), Xb(1)]), "xb0 xb1 x0")
        }),
        Case::new("positive_kink", |_| {
            let kinked = word(1, &[Slice::Cup(1), X(0), Slice::Cap(1)]);
            for w in all_states(1) {
                for e in all_states(1) {
                    let got = reduce(&StatedWord::new(kinked.clone(), w.clone(), e.clone()).expect("arity"));
                    expect_eq("kink", &got, &reduce_parallel(&w, &e).scale(&-q(3)))?;
                }
            }
            Ok(())
        }),
        Case::new("zigzag", |_| {
            compare_all_states(&word(1, &[Slice::Cup(1), Slice::Cap(0)]), &SliceWord::identity(1), "cup1;cap0")?;
            compare_all_states(&word(1, &[Slice::Cup(0), Slice::Cap(1)]), &SliceWord::identity(1), "cup0;cap1")
        }),
        Case::new("rt_matches_reduce", |p| {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed() ^ 1);
            for w in one_sided_words(&mut rng, 80) {
                for west in all_states(w.west_arity()) {
                    for east in all_states(w.east_arity()) {
                        let d = StatedWord::new(w.clone(), west.clone(), east.clone()).expect("arity");
                        let got = reduce(&d).coefficient(&BasisTangle::unit());
                        expect_eq(format!("{d}"), &got, &rt_entry(&w, &west, &east))?;
                    }
                }
                if w.west_arity() == 0 && w.east_arity() == 0 {
                    let b = bracket(&w).map_err(|e| e.to_string())?;
                    expect_eq(format!("bracket of {w}"), &b, &rt_entry(&w, &[], &[]))?;
                }
            }
            Ok(())
        }),
        Case::new("cap_cup_values", |_| {
            let cap = word(2, &[Slice::Cap(0)]);
            use Sign::{Minus as M, Plus as P};
            expect_eq("cap(v₋⊗v₊)", &rt_entry(&cap, &[M, P], &[]), &s(1))?;
            expect_eq("cap(v₊⊗v₋)", &rt_entry(&cap, &[P, M], &[]), &-s(5))?;
            let cup = word(0, &[Slice::Cup(0)]);
            expect_eq("cup₊₋", &rt_entry(&cup, &[], &[P, M]), &s(-1))?;
            expect_eq("cup₋₊", &rt_entry(&cup, &[], &[M, P]), &-s(-5))?;
            expect_eq("loop", &rt_entry(&word(0, &[Slice::Cup(0), Slice::Cap(0)]), &[], &[]), &delta())
        }),
        Case::new("crossing_matrices", |_| {
            let turn = rt_evaluate(&word(2, &[Slice::Cap(0), Slice::Cup(0)]));
            let id = identity_matrix(4);
            let over = crate::comodule::mat_add(&mat_scale(&id, &q(1)), &mat_scale(&turn, &q(-1)));
            let under = crate::comodule::mat_add(&mat_scale(&id, &q(-1)), &mat_scale(&turn, &q(1)));
            expect(rt_evaluate(&word(2, &[X(0)])) == over, || "over-crossing matrix".to_string())?;
            expect(rt_evaluate(&word(2, &[Xb(0)])) == under, || "under-crossing matrix".to_string())?;
            expect(mat_mul(&over, &under) == id, || "crossing matrices are not inverse".to_string())
        }),
    ]
}

fn u_mat(g: UGenerator, w: &comodule::Comodule) -> Matrix {
    u_action(&[g], w)
}

fn suite_comodule() -> Vec<Case> {
    vec![
        Case::new("quantum_plane_axioms", |p| {
            for n in 0..=(p.max_degree as u32 + 1) {
                let v = quantum_plane_vn(n);
                v.check_coassociative().map_err(|e| format!("V_{n}: {e}"))?;
                v.check_counit().map_err(|e| format!("V_{n}: {e}"))?;
            }
            expect(quantum_plane_vn(0) == comodule::trivial(), || "V_0 is not trivial".to_string())?;
            expect(quantum_plane_vn(1) == standard_v(), || "V_1 differs from V".to_string())
        }),
        Case::new("tensor_coaction", |_| {
            let vv = tensor(&standard_v(), &standard_v());
            let aa = sl2::normalize(&[Letter::A, Letter::A]);
            expect_eq("entry (++,++)", vv.entry(0, 0), &aa)?;
            vv.check_coassociative()?;
            vv.check_counit()
        }),
        Case::new("u_relations", |p| {
            use UGenerator::{KInv, E, F, K};
            for n in 1..=p.max_degree {
                let w = tensor_power(n);
                let (e, f, k, ki) = (u_mat(E, &w), u_mat(F, &w), u_mat(K, &w), u_mat(KInv, &w));
                let dim = w.dim();
                expect(mat_mul(&k, &ki) == identity_matrix(dim), || format!("K K^-1 on V^{n}"))?;
                expect(mat_mul(&k, &e) == mat_scale(&mat_mul(&e, &k), &q(4)), || format!("KE = q^4 EK on V^{n}"))?;
                expect(mat_mul(&k, &f) == mat_scale(&mat_mul(&f, &k), &q(-4)), || format!("KF = q^-4 FK on V^{n}"))?;
                let comm = mat_scale(&mat_sub(&mat_mul(&e, &f), &mat_mul(&f, &e)), &(&q(2) - &q(-2)));
                expect(comm == mat_sub(&k, &ki), || format!("EF - FE on V^{n}"))?;
                expect(u_action(&[E, F], &w) == mat_mul(&e, &f), || format!("action of EF on V^{n}"))?;
            }
            let v = standard_v();
            let mut diag = identity_matrix(2);
            diag[0][0] = q(2);
            diag[1][1] = q(-2);
            expect(u_mat(K, &v) == diag, || "K on V".to_string())
        }),
        Case::new("half_twist_values", |_| {
            let ht = ht_matrix(&standard_v());
            expect_eq("ht(v₊) on v₋", &ht[1][0], &s(1))?;
            expect_eq("ht(v₊) on v₊", &ht[0][0], &HalfLaurent::zero())?;
            expect_eq("ht(v₋) on v₊", &ht[0][1], &-s(5))?;
            expect_eq("ht(v₋) on v₋", &ht[1][1], &HalfLaurent::zero())
        }),
        Case::new("half_twist_on_tensor", |_| {
            let v = standard_v();
            let ht = ht_matrix(&v);
            let lhs = ht_matrix(&tensor(&v, &v));
            let rhs = mat_mul(&mat_mul(&kron(&ht, &ht), &flip_matrix(2, 2)), &braiding_matrix(&v, &v));
            expect(lhs == rhs, || "ht(V⊗V) differs from (ht⊗ht)∘fl∘c".to_string())
        }),
        Case::new("multiplicities", |p| {
            expect_eq("m(0,2)", &multiplicity(0, 2), &1)?;
            expect_eq("m(2,2)", &multiplicity(2, 2), &1)?;
            expect_eq("m(1,1)", &multiplicity(1, 1), &1)?;
            expect_eq("m(0,4)", &multiplicity(0, 4), &2)?;
            for n in 0..=2 * p.max_degree {
                let total: u64 = (0..=n).map(|k| multiplicity(k, n) * (k as u64 + 1)).sum();
                expect_eq(format!("dim V^{n}"), &total, &(1u64 << n))?;
            }
            Ok(())
        }),
    ]
}

fn suite_st() -> Vec<Case> {
    vec![
        Case::new("examples", |_| {
            use Sign::{Minus as M, Plus as P};
            let arc = &enumerate_matchings(2, 0).expect("even")[0];
            expect_eq("west arc (+,-)", &internal::st_entry(arc, &[P, M], &[]), &bigon::unit().scale(&-s(5)))?;
            let through = &enumerate_matchings(1, 1).expect("even")[0];
            expect_eq("through strand (+;+)", &internal::st_entry(through, &[P], &[P]), &bigon::gen_a())?;
            let nested = enumerate_matchings(0, 4)
                .expect("even")
                .into_iter()
                .find(|m| m.pairs().len() == 2 && m.partner(m.east_point(0)) == m.east_point(3))
                .ok_or("no nested matching")?;
            expect_eq("nested east arcs (+,+,-,-)", &internal::st_entry(&nested, &[], &[P, P, M, M]), &bigon::unit().scale(&q(-1)))
        }),
        Case::new("intertwiner", |p| {
            for (nw, ne) in internal::arities(2 * p.max_degree) {
                for m in enumerate_matchings(nw, ne).expect("even") {
                    internal::check_intertwiner(&m).map_err(|e| format!("{m}: {e}"))?;
                }
            }
            Ok(())
        }),
        Case::new("naturality", |p| {
            for (nw, ne) in internal::arities(2 * p.max_degree) {
                for m in enumerate_matchings(nw, ne).expect("even") {
                    for ins in internal::insertions(&m) {
                        internal::check_st_naturality(&m, ins)?;
                    }
                }
            }
            Ok(())
        }),
        Case::new("rank", |p| {
            for s0 in &p.specializations {
                for (nw, ne) in internal::arities(2 * p.max_degree) {
                    let r = internal::st_rank(nw, ne, s0).map_err(|e| e.to_string())?;
                    expect(r.rank as u64 == r.catalan && r.catalan == r.peter_weyl, || {
                        format!("({nw},{ne}) at s0 = {s0}: rank {}, Catalan {}, Peter–Weyl {}", r.rank, r.catalan, r.peter_weyl)
                    })?;
                }
            }
            Ok(())
        }),
        Case::new("product", |p| {
            let mut small = Vec::new();
            for (nw, ne) in internal::arities(4.min(2 * p.max_degree)) {
                small.extend(enumerate_matchings(nw, ne).expect("even"));
            }
            for m1 in &small {
                for m2 in &small {
                    internal::check_product(m1, m2)?;
                }
            }
            Ok(())
        }),
    ]
}

fn suite_excision() -> Vec<Case> {
    vec![
        Case::new("cotensor_containment", |p| {
            (0..=p.max_degree).try_for_each(excision::check_cotensor_containment)
        }),
        Case::new("variant_containment", |p| {
            for n in 0..=p.max_degree as u32 {
                for v in Variant::ALL {
                    excision::check_variant_containment(n, v)?;
                }
            }
            Ok(())
        }),
        Case::new("dimensions", |p| {
            for s0 in &p.specializations {
                for n in 0..=p.max_degree.min(2) as u32 {
                    excision::gluing_excision_check(n, s0, p.seed()).map_err(|e| format!("s0 = {s0}: {e}"))?;
                }
            }
            Ok(())
        }),
    ]
}

fn suite_cases(name: &str) -> Option<Vec<Case>> {
    Some(match name {
        "hopf" => suite_hopf(),
        "iso" => suite_iso(),
        "coquasi" => suite_coquasi(),
        "halfribbon" => suite_halfribbon(),
        "leftright" => suite_leftright(),
        "braidop" => suite_braidop(),
        "rt" => suite_rt(),
        "comodule" => suite_comodule(),
        "st" => suite_st(),
        "excision" => suite_excision(),
        _ => return None,
    })
}

/// The cases of a suite; `all` concatenates every suite with prefixed names.
pub fn cases(suite: &str) -> Result<Vec<Case>> {
    if suite == "all" {
        let mut out = Vec::new();
        for name in &SUITES[..SUITES.len() - 1] {
            for mut c in suite_cases(name).expect("listed suite") {
                c.name = format!("{name}/{}", c.name);
                out.push(c);
            }
        }
        return Ok(out);
    }
    suite_cases(suite).ok_or_else(|| Error::UnknownSuite { name: suite.to_string(), available: SUITES.join(", ") })
}

/// Runs every case of a suite in parallel and collects a report.
pub fn run_suite(suite: &str, params: &Params) -> Result<Report> {
    let start = Instant::now();
    let cases = cases(suite)?;
    let results: Vec<CaseResult> = cases
        .par_iter()
        .map(|c| {
            let t = Instant::now();
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| c.run(params)))
                .unwrap_or_else(|e| Err(panic_message(e)));
            let (status, witness) = match outcome {
                Ok(()) => (Status::Pass, None),
                Err(w) => (Status::Fail, Some(clip(w))),
            };
            CaseResult { name: c.name.clone(), status, witness, wall_time_ms: t.elapsed().as_millis() as u64 }
        })
        .collect();
    Ok(Report::new(suite.to_string(), params.to_parameters(), results, start.elapsed().as_millis() as u64))
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = e.downcast_ref::<&str>() {
        format!("panicked: {s}")
    } else if let Some(s) = e.downcast_ref::<String>() {
        format!("panicked: {s}")
    } else {
        "panicked".to_string()
    }
}

/// A random extra specialization point drawn from `seed`.
pub fn random_specialization(seed: u64) -> Specialization {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n: i64 = rng.gen_range(2..=40);
        let d: i64 = rng.gen_range(2..=40);
        let v = num_rational::BigRational::new(n.into(), d.into());
        if let Ok(s0) = Specialization::new(v) {
            return s0;
        }
    }
}
