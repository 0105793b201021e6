//! Finite-dimensional right comodules over `O_{q^2}(SL_2)` and the
//! Reshetikhin–Turaev evaluation of slice words on tensor powers of `V`.

use crate::diagram::{all_states, states_index, BoundaryCoefficients, Sign, Slice, SliceWord};
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::HalfLaurent;
use crate::sl2::{self, HopfElement, Letter, Pbw, UGenerator};

/// A dense matrix of scalars, `m[row][col]`.
pub type Matrix = Vec<Vec<HalfLaurent>>;

pub fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![vec![HalfLaurent::zero(); cols]; rows]
}

pub fn identity_matrix(n: usize) -> Matrix {
    let mut m = zero_matrix(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = HalfLaurent::one();
    }
    m
}

pub fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    let inner = y.len();
    let cols = y.first().map_or(0, Vec::len);
    let mut out = zero_matrix(x.len(), cols);
    for (i, row) in x.iter().enumerate() {
        assert_eq!(row.len(), inner, "matrix shapes do not compose");
        for (k, xik) in row.iter().enumerate() {
            if xik.is_zero() {
                continue;
            }
            for (j, ykj) in y[k].iter().enumerate() {
                if !ykj.is_zero() {
                    out[i][j] += &(xik * ykj);
                }
            }
        }
    }
    out
}

pub fn mat_add(x: &Matrix, y: &Matrix) -> Matrix {
    x.iter()
        .zip(y)
        .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
        .collect()
}

pub fn mat_scale(x: &Matrix, c: &HalfLaurent) -> Matrix {
    x.iter().map(|r| r.iter().map(|a| a * c).collect()).collect()
}

pub fn mat_sub(x: &Matrix, y: &Matrix) -> Matrix {
    mat_add(x, &mat_scale(y, &HalfLaurent::from_int(-1)))
}

/// Kronecker product, first factor most significant.
pub fn kron(x: &Matrix, y: &Matrix) -> Matrix {
    let (yr, yc) = (y.len(), y.first().map_or(0, Vec::len));
    let xc = x.first().map_or(0, Vec::len);
    let mut out = zero_matrix(x.len() * yr, xc * yc);
    for (i, xr) in x.iter().enumerate() {
        for (j, a) in xr.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, row) in y.iter().enumerate() {
                for (l, b) in row.iter().enumerate() {
                    out[i * yr + k][j * yc + l] = a * b;
                }
            }
        }
    }
    out
}

/// A right comodule with `Δ(e_j) = Σ_i e_i ⊗ coaction[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    dim: usize,
    coaction: Vec<Vec<HopfElement>>,
}

impl Comodule {
    pub fn new(coaction: Vec<Vec<HopfElement>>) -> Self {
        let dim = coaction.len();
        assert!(coaction.iter().all(|r| r.len() == dim), "coaction must be square");
        Self { dim, coaction }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &[Vec<HopfElement>] {
        &self.coaction
    }

    pub fn entry(&self, i: usize, j: usize) -> &HopfElement {
        &self.coaction[i][j]
    }

    /// First failing entry of `Δ(M_ij) = Σ_k M_ik ⊗ M_kj`, if any.
    pub fn check_coassociative(&self) -> Result<(), String> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = sl2::comul(&self.coaction[i][j]);
                let mut rhs: Tensor<Pbw> = Tensor::zero();
                for k in 0..self.dim {
                    rhs += &crate::lincomb::tensor_product(
                        &crate::lincomb::as_tensor(&self.coaction[i][k]),
                        &crate::lincomb::as_tensor(&self.coaction[k][j]),
                    );
                }
                if lhs != rhs {
                    return Err(format!("coassociativity fails at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }

    /// First failing entry of `ε(M_ij) = δ_ij`, if any.
    pub fn check_counit(&self) -> Result<(), String> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let want = if i == j { HalfLaurent::one() } else { HalfLaurent::zero() };
                if sl2::counit(&self.coaction[i][j]) != want {
                    return Err(format!("counit fails at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }
}

/// `V` with basis `(v+, v-)` and coaction `(a b; c d)`.
pub fn standard_v() -> Comodule {
    let l = sl2::letter;
    Comodule::new(vec![vec![l(Letter::A), l(Letter::B)], vec![l(Letter::C), l(Letter::D)]])
}

pub fn trivial() -> Comodule {
    Comodule::new(vec![vec![sl2::hopf_unit()]])
}

/// `W1 ⊗ W2` with the coaction entries multiplied; index `i1 * dim2 + i2`.
pub fn tensor(w1: &Comodule, w2: &Comodule) -> Comodule {
    let n = w1.dim * w2.dim;
    let mut co = vec![vec![HopfElement::zero(); n]; n];
    for i1 in 0..w1.dim {
        for i2 in 0..w2.dim {
            for j1 in 0..w1.dim {
                for j2 in 0..w2.dim {
                    co[i1 * w2.dim + i2][j1 * w2.dim + j2] = sl2::mul(&w1.coaction[i1][j1], &w2.coaction[i2][j2]);
                }
            }
        }
    }
    Comodule::new(co)
}

pub fn tensor_power(n: usize) -> Comodule {
    (0..n).fold(trivial(), |acc, _| tensor(&acc, &standard_v()))
}

/// Polynomials `Σ h_{p,r} x^p y^r` over the quantum plane `yx = q^2 xy`, coefficients in O.
type PlaneTensor = std::collections::BTreeMap<(u32, u32), HopfElement>;

fn plane_mul(x: &PlaneTensor, y: &PlaneTensor) -> PlaneTensor {
    let mut out = PlaneTensor::new();
    for (&(p, r), h) in x {
        for (&(p2, r2), h2) in y {
            let swap = HalfLaurent::q_pow(2 * (r as i64) * (p2 as i64));
            let prod = sl2::mul(h, h2).scale(&swap);
            let slot = out.entry((p + p2, r + r2)).or_default();
            *slot += &prod;
        }
    }
    out.retain(|_, h| !h.is_zero());
    out
}

/// Degree-`n` part of the quantum plane, basis `x^{n-i} y^i`.
pub fn quantum_plane_vn(n: u32) -> Comodule {
    let l = sl2::letter;
    let dx: PlaneTensor = [((1, 0), l(Letter::A)), ((0, 1), l(Letter::C))].into_iter().collect();
    let dy: PlaneTensor = [((1, 0), l(Letter::B)), ((0, 1), l(Letter::D))].into_iter().collect();
    let dim = n as usize + 1;
    let mut co = vec![vec![HopfElement::zero(); dim]; dim];
    for j in 0..=n {
        let mut acc: PlaneTensor = [((0, 0), sl2::hopf_unit())].into_iter().collect();
        for _ in 0..n - j {
            acc = plane_mul(&acc, &dx);
        }
        for _ in 0..j {
            acc = plane_mul(&acc, &dy);
        }
        for ((p, r), h) in acc {
            debug_assert_eq!(p + r, n);
            co[r as usize][j as usize] = h;
        }
    }
    Comodule::new(co)
}

/// Applies the RT image of a slice word to the basis vector with the given west states.
pub fn rt_apply(word: &SliceWord, west: &[Sign]) -> LinComb<Vec<Sign>> {
    assert_eq!(west.len(), word.west_arity(), "state count");
    let bc = BoundaryCoefficients::standard();
    let cap = |v: &LinComb<Vec<Sign>>, i: usize| -> LinComb<Vec<Sign>> {
        let mut out = LinComb::zero();
        for (s, c) in v.iter() {
            let k = bc.cbar(s[i], s[i + 1]);
            if !k.is_zero() {
                let mut t = s[..i].to_vec();
                t.extend_from_slice(&s[i + 2..]);
                out.add_term(t, c * &k);
            }
        }
        out
    };
    let cup = |v: &LinComb<Vec<Sign>>, i: usize| -> LinComb<Vec<Sign>> {
        let mut out = LinComb::zero();
        for (s, c) in v.iter() {
            for (u, l) in [(Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
                let mut t = s[..i].to_vec();
                t.push(u);
                t.push(l);
                t.extend_from_slice(&s[i..]);
                out.add_term(t, c * &bc.c(u, l));
            }
        }
        out
    };
    let mut v = LinComb::basis(west.to_vec());
    for s in word.slices() {
        v = match *s {
            Slice::Cap(i) => cap(&v, i),
            Slice::Cup(i) => cup(&v, i),
            Slice::Cross(i) => {
                let mut out = v.scale(&HalfLaurent::q_pow(1));
                out.add_scaled(&cup(&cap(&v, i), i), &HalfLaurent::q_pow(-1));
                out
            }
            Slice::CrossUnder(i) => {
                let mut out = v.scale(&HalfLaurent::q_pow(-1));
                out.add_scaled(&cup(&cap(&v, i), i), &HalfLaurent::q_pow(1));
                out
            }
        };
    }
    v
}

/// One matrix entry `<east| RT(word) |west>`.
pub fn rt_entry(word: &SliceWord, west: &[Sign], east: &[Sign]) -> HalfLaurent {
    rt_apply(word, west).coefficient(&east.to_vec())
}

/// The RT matrix of a word, rows indexed by east states and columns by west states.
pub fn rt_evaluate(word: &SliceWord) -> Matrix {
    let mut m = zero_matrix(1 << word.east_arity(), 1 << word.west_arity());
    for (j, west) in all_states(word.west_arity()).into_iter().enumerate() {
        for (east, c) in rt_apply(word, &west).iter() {
            m[states_index(east)][j] = c.clone();
        }
    }
    m
}

/// `ht_W = (Id ⊗ t) ∘ Δ` as a matrix.
pub fn ht_matrix(w: &Comodule) -> Matrix {
    w.coaction.iter().map(|r| r.iter().map(sl2::t_form).collect()).collect()
}

/// The action `x · w = w₁ <x, w₂>` of a word in the generators of `U_{q^2}(sl_2)`.
pub fn u_action(u: &[UGenerator], w: &Comodule) -> Matrix {
    w.coaction.iter().map(|r| r.iter().map(|h| sl2::pairing(u, h)).collect()).collect()
}

/// The braiding `c: W1 ⊗ W2 → W2 ⊗ W1`, `e_j ⊗ f_l ↦ Σ f_k ⊗ e_i R(M_ij ⊗ N_kl)`.
pub fn braiding_matrix(w1: &Comodule, w2: &Comodule) -> Matrix {
    let (n1, n2) = (w1.dim, w2.dim);
    let mut m = zero_matrix(n1 * n2, n1 * n2);
    for i in 0..n1 {
        for j in 0..n1 {
            for k in 0..n2 {
                for l in 0..n2 {
                    m[k * n1 + i][j * n2 + l] = sl2::r_form(&w1.coaction[i][j], &w2.coaction[k][l]);
                }
            }
        }
    }
    m
}

/// The flip `W1 ⊗ W2 → W2 ⊗ W1` as a permutation matrix.
pub fn flip_matrix(n1: usize, n2: usize) -> Matrix {
    let mut m = zero_matrix(n1 * n2, n1 * n2);
    for i in 0..n1 {
        for k in 0..n2 {
            m[k * n1 + i][i * n2 + k] = HalfLaurent::one();
        }
    }
    m
}

/// Multiplicity of `V_k` in `V^{⊗n}` at generic `q`.
pub fn multiplicity(k: usize, n: usize) -> u64 {
    let mut row = vec![0u64; n + 2];
    row[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; n + 2];
        for (j, &m) in row.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if j > 0 {
                next[j - 1] += m;
            }
            if j + 1 < next.len() {
                next[j + 1] += m;
            }
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{delta, parse_slice_word};

    #[test]
    fn small_plane_comodules() {
        assert_eq!(quantum_plane_vn(0), trivial());
        assert_eq!(quantum_plane_vn(1), standard_v());
        let vv = tensor(&standard_v(), &standard_v());
        assert_eq!(vv.entry(0, 0), &sl2::normalize(&[Letter::A, Letter::A]));
        for n in 0..4 {
            let w = quantum_plane_vn(n);
            w.check_coassociative().unwrap();
            w.check_counit().unwrap();
        }
    }

    #[test]
    fn cap_and_cup_matrices() {
        let cap = rt_evaluate(&parse_slice_word("tangle(2){cap0}").unwrap());
        assert_eq!(cap[0][2], HalfLaurent::s_pow(1));
        assert_eq!(cap[0][1], -HalfLaurent::s_pow(5));
        let circle = rt_evaluate(&parse_slice_word("tangle(0){cup0;cap0}").unwrap());
        assert_eq!(circle, vec![vec![delta()]]);
        assert_eq!(rt_evaluate(&SliceWord::identity(1)), identity_matrix(2));
    }

    #[test]
    fn braiding_is_crossing() {
        let v = standard_v();
        let x = rt_evaluate(&parse_slice_word("tangle(2){x0}").unwrap());
        assert_eq!(braiding_matrix(&v, &v), x);
    }

    #[test]
    fn half_twist_and_actions() {
        let ht = ht_matrix(&standard_v());
        assert_eq!(ht[1][0], HalfLaurent::s_pow(1));
        assert!(ht[0][0].is_zero());
        let k = u_action(&[UGenerator::K], &standard_v());
        assert_eq!(k, vec![vec![HalfLaurent::q_pow(2), HalfLaurent::zero()], vec![HalfLaurent::zero(), HalfLaurent::q_pow(-2)]]);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(0, 2), 1);
        assert_eq!(multiplicity(2, 2), 1);
        assert_eq!(multiplicity(1, 1), 1);
        assert_eq!(multiplicity(0, 4), 2);
        assert_eq!(multiplicity(1, 2), 0);
    }
}
