//! Degreewise checks that splitting a bigon into two identifies its skein algebra with
//! the cotensor product, the `HH^0` spaces and the invariants of the two halves.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bigon::{self, antipode_basis, comul, comul_basis, comul_slot, rot_star_basis, t_form, t_inv_form, TensorElement};
use crate::comodule::quantum_plane_vn;
use crate::diagram::{BasisTangle, SkeinElement};
use crate::linalg::{combine, left_kernel, rank, same_span, specialize, Echelon, Indexer, SparseVec};
use crate::lincomb::{as_tensor, tensor_product};
use crate::scalar::{HalfLaurent, Specialization};
use crate::sl2::to_skein;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Fixed points of the merged coaction `a ⊗ b ↦ a₁ ⊗ b₂ ⊗ a₂ S(b₁)`.
    Inv,
    /// `HH^0` with the left coaction turned right by the antipode.
    Hh0L,
    /// `HH^0` with the left coaction turned right by rotation after the half twist.
    Hh0LHt,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Inv, Variant::Hh0L, Variant::Hh0LHt];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Inv => "inv",
            Variant::Hh0L => "hh0_L",
            Variant::Hh0LHt => "hh0_l_ht",
        })
    }
}

/// The matrix coefficients of `V_n`: a subcoalgebra of dimension `(n+1)^2` spanned by
/// elements with at most `n` strands.
pub fn coefficient_coalgebra(n: u32) -> Vec<SkeinElement> {
    let v = quantum_plane_vn(n);
    v.coaction().iter().flat_map(|row| row.iter().map(to_skein)).collect()
}

fn key3(a: &BasisTangle, b: &BasisTangle, c: &BasisTangle) -> Vec<BasisTangle> {
    vec![a.clone(), b.clone(), c.clone()]
}

fn cotensor_basis(a: &BasisTangle, b: &BasisTangle) -> TensorElement {
    let ta = as_tensor(&SkeinElement::basis(a.clone()));
    let tb = as_tensor(&SkeinElement::basis(b.clone()));
    &tensor_product(&comul_basis(a), &tb) - &tensor_product(&ta, &comul_basis(b))
}

fn inv_basis(a: &BasisTangle, b: &BasisTangle) -> TensorElement {
    let mut out = TensorElement::zero();
    let db = comul_basis(b);
    for (ka, ca) in comul_basis(a).iter() {
        for (kb, cb) in db.iter() {
            let s = antipode_basis(&kb[0]);
            let prod = bigon::mul(&SkeinElement::basis(ka[1].clone()), &s);
            let c = ca * cb;
            for (p, cp) in prod.iter() {
                out.add_term(key3(&ka[0], &kb[1], p), &c * cp);
            }
        }
    }
    out.add_term(key3(a, b, &BasisTangle::unit()), -HalfLaurent::one());
    out
}

fn right_leg_antipode(a: &BasisTangle, b: &BasisTangle) -> TensorElement {
    let mut out = TensorElement::zero();
    for (kb, cb) in comul_basis(b).iter() {
        for (p, cp) in antipode_basis(&kb[0]).iter() {
            out.add_term(key3(a, &kb[1], p), cb * cp);
        }
    }
    out
}

fn hh0_l_basis(a: &BasisTangle, b: &BasisTangle) -> TensorElement {
    let mut out = TensorElement::zero();
    for (ka, ca) in comul_basis(a).iter() {
        for (p, cp) in antipode_basis(&ka[1]).iter() {
            out.add_term(key3(&ka[0], b, p), ca * cp);
        }
    }
    &out - &right_leg_antipode(a, b)
}

fn hh0_l_ht_basis(a: &BasisTangle, b: &BasisTangle) -> TensorElement {
    let mut out = TensorElement::zero();
    let d4 = comul_slot(&comul_slot(&comul_basis(a), 1), 2);
    for (k, c) in d4.iter() {
        let t = t_form(&SkeinElement::basis(k[1].clone()));
        if t.is_zero() {
            continue;
        }
        let ti = t_inv_form(&SkeinElement::basis(k[3].clone()));
        if ti.is_zero() {
            continue;
        }
        let coeff = &(c * &t) * &ti;
        for (p, cp) in rot_star_basis(&k[2]).iter() {
            out.add_term(key3(&k[0], b, p), &coeff * cp);
        }
    }
    &out - &right_leg_antipode(a, b)
}

/// The map whose kernel on `C_n ⊗ C_n` is the cotensor product (`None`) or a variant.
fn defining_map(variant: Option<Variant>) -> fn(&BasisTangle, &BasisTangle) -> TensorElement {
    match variant {
        None => cotensor_basis,
        Some(Variant::Inv) => inv_basis,
        Some(Variant::Hh0L) => hh0_l_basis,
        Some(Variant::Hh0LHt) => hh0_l_ht_basis,
    }
}

fn apply_bilinear(
    f: fn(&BasisTangle, &BasisTangle) -> TensorElement,
    x: &SkeinElement,
    y: &SkeinElement,
    memo: &mut HashMap<(BasisTangle, BasisTangle), TensorElement>,
) -> TensorElement {
    let mut out = TensorElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let img = memo.entry((a.clone(), b.clone())).or_insert_with(|| f(a, b));
            out.add_scaled(img, &(ca * cb));
        }
    }
    out
}

/// Exact check that `(Δ ⊗ Id − Id ⊗ Δ) ∘ Δ` vanishes on every `n`-strand basis element.
pub fn check_cotensor_containment(n: usize) -> Result<(), String> {
    for x in BasisTangle::with_strands(n) {
        let d = comul_basis(&x);
        let diff = &comul_slot(&d, 0) - &comul_slot(&d, 1);
        if !diff.is_zero() {
            return Err(format!("{x}: (Δ⊗Id − Id⊗Δ)Δ = {diff}"));
        }
    }
    Ok(())
}

/// Exact check that the defining map of `variant` kills `Δ(C_n)`.
pub fn check_variant_containment(n: u32, variant: Variant) -> Result<(), String> {
    let f = defining_map(Some(variant));
    let mut memo = HashMap::new();
    for c in coefficient_coalgebra(n) {
        let mut img = TensorElement::zero();
        for (k, cc) in comul(&c).iter() {
            let x = SkeinElement::basis(k[0].clone());
            let y = SkeinElement::basis(k[1].clone());
            img.add_scaled(&apply_bilinear(f, &x, &y, &mut memo), cc);
        }
        if !img.is_zero() {
            return Err(format!("{variant}: image of Δ({c}) is {img}"));
        }
    }
    Ok(())
}

/// Degree-`n` data at one specialization, in shared coordinates on `A ⊗ A`.
struct Degree {
    /// Rows `c_i ⊗ c_j`, indexed `i * N + j`.
    domain: Vec<SparseVec>,
    /// Rows `Δ(c_k)`.
    image: Vec<SparseVec>,
    coalgebra: Vec<SkeinElement>,
}

impl Degree {
    fn new(n: u32, s0: &Specialization) -> Self {
        let coalgebra = coefficient_coalgebra(n);
        let mut pair_idx = Indexer::new();
        let mut domain = Vec::new();
        for x in &coalgebra {
            for y in &coalgebra {
                let t = tensor_product(&as_tensor(x), &as_tensor(y));
                domain.push(specialize(&t, &mut pair_idx, s0));
            }
        }
        let image = coalgebra.iter().map(|c| specialize(&comul(c), &mut pair_idx, s0)).collect();
        Self { domain, image, coalgebra }
    }

    /// Kernel of a defining map on `C_n ⊗ C_n`, as vectors in `A ⊗ A` coordinates.
    fn kernel(&self, variant: Option<Variant>, s0: &Specialization) -> Vec<SparseVec> {
        let f = defining_map(variant);
        let mut memo = HashMap::new();
        let mut idx = Indexer::new();
        let mut rows = Vec::new();
        for x in &self.coalgebra {
            for y in &self.coalgebra {
                rows.push(specialize(&apply_bilinear(f, x, y, &mut memo), &mut idx, s0));
            }
        }
        left_kernel(&rows).iter().map(|k| combine(k, &self.domain)).collect()
    }
}

/// Dimensions found in one degree at one specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDims {
    pub n: u32,
    pub expected: usize,
    pub basis_image_rank: usize,
    pub coalgebra_dim: usize,
    pub cotensor_dim: usize,
    pub variant_dims: Vec<(Variant, usize)>,
}

/// Injectivity of `Δ` on the `n`-strand basis and the cotensor kernel dimension,
/// with the kernel compared to `Δ(C_n)` as subspaces.
pub fn splitting_image_check(n: u32, s0: &Specialization) -> Result<(usize, usize), String> {
    let expected = ((n + 1) * (n + 1)) as usize;
    let mut idx = Indexer::new();
    let rows: Vec<SparseVec> =
        BasisTangle::with_strands(n as usize).iter().map(|b| specialize(&comul_basis(b), &mut idx, s0)).collect();
    let image_rank = rank(&rows);
    if image_rank != expected {
        return Err(format!("degree {n}: rank of Δ on the basis is {image_rank}, expected {expected}"));
    }
    let deg = Degree::new(n, s0);
    let ker = deg.kernel(None, s0);
    if ker.len() != expected {
        return Err(format!("degree {n}: cotensor kernel has dimension {}, expected {expected}", ker.len()));
    }
    if !same_span(&ker, &deg.image) {
        return Err(format!("degree {n}: cotensor kernel differs from Δ(C_{n})"));
    }
    Ok((image_rank, ker.len()))
}

/// A row basis at `s0` of the `variant` subspace of `C_n ⊗ C_n`, in `A ⊗ A` coordinates.
pub fn invariants_subspace(n: u32, variant: Variant, s0: &Specialization) -> Vec<SparseVec> {
    Degree::new(n, s0).kernel(Some(variant), s0)
}

/// Every dimension and subspace comparison in degree `n` at `s0`, plus a pullback of a
/// random invariant along `Δ`.
pub fn gluing_excision_check(n: u32, s0: &Specialization, seed: u64) -> Result<DegreeDims, String> {
    let expected = ((n + 1) * (n + 1)) as usize;
    let (basis_image_rank, cotensor_dim) = splitting_image_check(n, s0)?;
    let deg = Degree::new(n, s0);
    let coalgebra_dim = rank(&deg.image);
    if coalgebra_dim != expected {
        return Err(format!("degree {n}: Δ(C_{n}) has dimension {coalgebra_dim}, expected {expected}"));
    }
    let mut variant_dims = Vec::new();
    let mut inv_space = Vec::new();
    for v in Variant::ALL {
        let ker = deg.kernel(Some(v), s0);
        if ker.len() != expected {
            return Err(format!("degree {n}: {v} has dimension {}, expected {expected}", ker.len()));
        }
        if !same_span(&ker, &deg.image) {
            return Err(format!("degree {n}: {v} subspace differs from Δ(C_{n})"));
        }
        variant_dims.push((v, ker.len()));
        if v == Variant::Inv {
            inv_space = ker;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(n));
    let weights: SparseVec = (0..inv_space.len())
        .map(|i| (i, BigRational::from_integer(rng.gen_range(-5i64..=5).into())))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let target = combine(&weights, &inv_space);
    let mut e = Echelon::new();
    for r in &deg.image {
        e.insert(r.clone());
    }
    let x = e.solve(&target).ok_or_else(|| format!("degree {n}: a random invariant is not in the image of Δ"))?;
    if combine(&x, &deg.image) != target {
        return Err(format!("degree {n}: nonzero residual when pulling back an invariant"));
    }
    Ok(DegreeDims { n, expected, basis_image_rank, coalgebra_dim, cotensor_dim, variant_dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one() {
        let s0 = &Specialization::defaults()[0];
        let dims = gluing_excision_check(1, s0, 1).unwrap();
        assert_eq!(dims.cotensor_dim, 4);
        assert!(dims.variant_dims.iter().all(|(_, d)| *d == 4));
    }

    #[test]
    fn degree_zero_is_trivial() {
        let s0 = &Specialization::defaults()[1];
        assert_eq!(splitting_image_check(0, s0), Ok((1, 1)));
        for v in Variant::ALL {
            assert_eq!(invariants_subspace(0, v, s0).len(), 1);
        }
    }
}
