#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skeinlab::diagram::{BasisTangle, SkeinElement, StatedWord};
use skeinlab::oracle::random_stated_word;
use skeinlab::sl2::{HopfElement, Pbw};
use skeinlab::HalfLaurent;

pub fn scalar() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-12i64..=12, -9i64..=9, 1i64..=5), 0..5).prop_map(|terms| {
        let mut x = HalfLaurent::zero();
        for (e, n, d) in terms {
            x.add_term(e, BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
        x
    })
}

pub fn nonzero_scalar() -> impl Strategy<Value = HalfLaurent> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn basis_tangle() -> impl Strategy<Value = BasisTangle> {
    let all = BasisTangle::up_to(3);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

pub fn skein_element() -> impl Strategy<Value = SkeinElement> {
    prop::collection::vec((basis_tangle(), scalar()), 0..4).prop_map(|terms| {
        let mut x = SkeinElement::zero();
        for (b, c) in terms {
            x.add_term(b, c);
        }
        x
    })
}

pub fn pbw() -> impl Strategy<Value = Pbw> {
    let all = Pbw::up_to(3);
    (0..all.len()).prop_map(move |i| all[i])
}

pub fn hopf_element() -> impl Strategy<Value = HopfElement> {
    prop::collection::vec((pbw(), scalar()), 0..4).prop_map(|terms| {
        let mut x = HopfElement::zero();
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    })
}

pub fn stated_word() -> impl Strategy<Value = StatedWord> {
    any::<u64>().prop_map(|seed| random_stated_word(&mut ChaCha8Rng::seed_from_u64(seed), 3, 6))
}

/// Any of the printable objects, as a printed form and a re-parse check.
#[derive(Debug, Clone)]
pub enum Printable {
    Scalar(HalfLaurent),
    Skein(SkeinElement),
    Hopf(HopfElement),
    Diagram(StatedWord),
}

impl Printable {
    pub fn round_trips(&self) -> Result<(), String> {
        use skeinlab::expr::parse_element;
        let (text, ok) = match self {
            Printable::Scalar(x) => (x.to_string(), x.to_string().parse::<HalfLaurent>().ok().as_ref() == Some(x)),
            Printable::Skein(x) => (x.to_string(), parse_element::<SkeinElement>(&x.to_string()).ok().as_ref() == Some(x)),
            Printable::Hopf(x) => (x.to_string(), parse_element::<HopfElement>(&x.to_string()).ok().as_ref() == Some(x)),
            Printable::Diagram(x) => (x.to_string(), x.to_string().parse::<StatedWord>().ok().as_ref() == Some(x)),
        };
        if ok {
            Ok(())
        } else {
            Err(format!("`{text}` does not read back as {self:?}"))
        }
    }
}

pub fn printable() -> impl Strategy<Value = Printable> {
    prop_oneof![
        scalar().prop_map(Printable::Scalar),
        skein_element().prop_map(Printable::Skein),
        hopf_element().prop_map(Printable::Hopf),
        stated_word().prop_map(Printable::Diagram),
    ]
}
