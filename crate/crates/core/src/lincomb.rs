//! Finite formal linear combinations with [`HalfLaurent`] coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::scalar::HalfLaurent;

/// `sum c_k k` over an ordered key type, never storing a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, HalfLaurent>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: HalfLaurent) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::single(key, HalfLaurent::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &HalfLaurent)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coefficient(&self, key: &K) -> HalfLaurent {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: HalfLaurent) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Adds `coeff * other`.
    pub fn add_scaled(&mut self, other: &Self, coeff: &HalfLaurent) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: &HalfLaurent) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    /// Extends `f` linearly from keys to combinations.
    pub fn flat_map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Extends a scalar-valued `f` linearly.
    pub fn pair(&self, mut f: impl FnMut(&K) -> HalfLaurent) -> HalfLaurent {
        let mut acc = HalfLaurent::zero();
        for (k, c) in &self.terms {
            let v = f(k);
            if !v.is_zero() {
                acc += &(c * &v);
            }
        }
        acc
    }
}

impl<K: Ord + Clone> FromIterator<(K, HalfLaurent)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, HalfLaurent)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&HalfLaurent::from_int(-1))
    }
}

/// Tensors: combinations keyed by tuples of keys.
pub type Tensor<K> = LinComb<Vec<K>>;

/// `x ⊗ y` for combinations of k-fold and l-fold tensors.
pub fn tensor_product<K: Ord + Clone>(x: &Tensor<K>, y: &Tensor<K>) -> Tensor<K> {
    let mut out = Tensor::zero();
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            let mut key = kx.clone();
            key.extend(ky.iter().cloned());
            out.add_term(key, cx * cy);
        }
    }
    out
}

/// Embeds a plain combination as 1-fold tensors.
pub fn as_tensor<K: Ord + Clone>(x: &LinComb<K>) -> Tensor<K> {
    x.iter().map(|(k, c)| (vec![k.clone()], c.clone())).collect()
}

/// Componentwise product of two tensors of the same rank, given the product on keys.
pub fn tensor_mul<K: Ord + Clone>(
    x: &Tensor<K>,
    y: &Tensor<K>,
    mul: &impl Fn(&K, &K) -> LinComb<K>,
) -> Tensor<K> {
    let mut out = Tensor::zero();
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            assert_eq!(kx.len(), ky.len(), "tensor rank mismatch");
            let mut partial: Tensor<K> = Tensor::basis(Vec::new());
            for (a, b) in kx.iter().zip(ky) {
                partial = tensor_product(&partial, &as_tensor(&mul(a, b)));
                if partial.is_zero() {
                    break;
                }
            }
            out.add_scaled(&partial, &(cx * cy));
        }
    }
    out
}

/// Applies a linear map to one tensor slot.
pub fn map_slot<K: Ord + Clone>(
    x: &Tensor<K>,
    slot: usize,
    f: &impl Fn(&K) -> Tensor<K>,
) -> Tensor<K> {
    let mut out = Tensor::zero();
    for (key, c) in x.iter() {
        let image = f(&key[slot]);
        for (img, ci) in image.iter() {
            let mut k = key[..slot].to_vec();
            k.extend(img.iter().cloned());
            k.extend(key[slot + 1..].iter().cloned());
            out.add_term(k, c * ci);
        }
    }
    out
}

/// Applies a scalar functional to one slot, removing it.
pub fn contract_slot<K: Ord + Clone>(
    x: &Tensor<K>,
    slot: usize,
    f: &impl Fn(&K) -> HalfLaurent,
) -> Tensor<K> {
    let mut out = Tensor::zero();
    for (key, c) in x.iter() {
        let v = f(&key[slot]);
        if v.is_zero() {
            continue;
        }
        let mut k = key[..slot].to_vec();
        k.extend(key[slot + 1..].iter().cloned());
        out.add_term(k, c * &v);
    }
    out
}

/// Swaps two tensor slots.
pub fn swap_slots<K: Ord + Clone>(x: &Tensor<K>, i: usize, j: usize) -> Tensor<K> {
    x.iter()
        .map(|(k, c)| {
            let mut k = k.clone();
            k.swap(i, j);
            (k, c.clone())
        })
        .collect()
}
