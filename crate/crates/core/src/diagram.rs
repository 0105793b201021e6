//! Sliced stated tangle diagrams in the bigon and their reduction to the
//! decreasing-state basis.
//!
//! Rows are numbered from the top. A word is read from the west edge to the east edge;
//! `Cap(i)` ends rows `i, i+1` and `Cup(i)` starts two new rows at position `i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use once_cell::sync::Lazy;

use crate::cache;
use crate::error::{Error, Result};
use crate::expr::Cursor;
use crate::lincomb::LinComb;
use crate::matching::{trace, Endpoint, Matching};
use crate::scalar::HalfLaurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// `0` for `+`, `1` for `-`: the index of `v_±` in the basis of `V`.
    pub fn index(self) -> usize {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn from_index(i: usize) -> Sign {
        if i == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

pub fn parse_sign_run(s: &str) -> Result<Vec<Sign>> {
    s.chars()
        .enumerate()
        .map(|(k, c)| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            other => Err(Error::Parse {
                line: 1,
                column: k + 1,
                message: format!("`{other}` is not a state"),
            }),
        })
        .collect()
}

pub fn fmt_signs(s: &[Sign]) -> String {
    s.iter().map(|x| x.as_char()).collect()
}

/// All `+` before all `-`.
pub fn is_decreasing(s: &[Sign]) -> bool {
    s.windows(2).all(|w| w[0] <= w[1])
}

/// All sign vectors of length `n`, first entry most significant, `+` before `-`.
pub fn all_states(n: usize) -> Vec<Vec<Sign>> {
    (0..1usize << n).map(|k| states_from_index(k, n)).collect()
}

pub fn states_from_index(k: usize, n: usize) -> Vec<Sign> {
    (0..n).map(|i| Sign::from_index((k >> (n - 1 - i)) & 1)).collect()
}

pub fn states_index(s: &[Sign]) -> usize {
    s.iter().fold(0, |acc, x| (acc << 1) | x.index())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slice {
    /// Row `i` passes over row `i + 1`.
    Cross(usize),
    /// Row `i` passes under row `i + 1`.
    CrossUnder(usize),
    Cap(usize),
    Cup(usize),
}

impl Slice {
    fn rows_after(self, rows: usize) -> Result<usize> {
        match self {
            Slice::Cross(i) | Slice::CrossUnder(i) | Slice::Cap(i) if i + 1 >= rows => Err(Error::Arity(format!(
                "`{self}` needs at least {} rows, found {rows}",
                i + 2
            ))),
            Slice::Cross(_) | Slice::CrossUnder(_) => Ok(rows),
            Slice::Cap(_) => Ok(rows - 2),
            Slice::Cup(i) if i > rows => Err(Error::Arity(format!(
                "`{self}` needs at least {i} rows, found {rows}"
            ))),
            Slice::Cup(_) => Ok(rows + 2),
        }
    }

    fn shifted(self, k: usize) -> Slice {
        match self {
            Slice::Cross(i) => Slice::Cross(i + k),
            Slice::CrossUnder(i) => Slice::CrossUnder(i + k),
            Slice::Cap(i) => Slice::Cap(i + k),
            Slice::Cup(i) => Slice::Cup(i + k),
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Slice::Cross(_) | Slice::CrossUnder(_))
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Cross(i) => write!(f, "x{i}"),
            Slice::CrossUnder(i) => write!(f, "xb{i}"),
            Slice::Cap(i) => write!(f, "cap{i}"),
            Slice::Cup(i) => write!(f, "cup{i}"),
        }
    }
}

/// An unstated tangle diagram given as a sequence of elementary slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceWord {
    west_arity: usize,
    slices: Vec<Slice>,
    east_arity: usize,
}

impl SliceWord {
    pub fn new(west_arity: usize, slices: Vec<Slice>) -> Result<Self> {
        let mut rows = west_arity;
        for s in &slices {
            rows = s.rows_after(rows)?;
        }
        Ok(Self {
            west_arity,
            slices,
            east_arity: rows,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            west_arity: n,
            slices: Vec::new(),
            east_arity: n,
        }
    }

    pub fn west_arity(&self) -> usize {
        self.west_arity
    }

    pub fn east_arity(&self) -> usize {
        self.east_arity
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_crossing()).count()
    }

    /// `self` followed by `next` (horizontal composition).
    pub fn then(&self, next: &SliceWord) -> Result<SliceWord> {
        if self.east_arity != next.west_arity {
            return Err(Error::Arity(format!(
                "cannot attach {} rows to {} rows",
                next.west_arity, self.east_arity
            )));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&next.slices);
        Ok(Self {
            west_arity: self.west_arity,
            slices,
            east_arity: next.east_arity,
        })
    }

    /// `self` above `below` (vertical juxtaposition).
    pub fn stack(&self, below: &SliceWord) -> SliceWord {
        let mut slices = self.slices.clone();
        slices.extend(below.slices.iter().map(|s| s.shifted(self.east_arity)));
        Self {
            west_arity: self.west_arity + below.west_arity,
            slices,
            east_arity: self.east_arity + below.east_arity,
        }
    }
}

impl fmt::Display for SliceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tangle({}){{", self.west_arity)?;
        for (k, s) in self.slices.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// A slice word with states on both edges, listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StatedWord {
    word: SliceWord,
    west_states: Vec<Sign>,
    east_states: Vec<Sign>,
}

impl StatedWord {
    pub fn new(word: SliceWord, west_states: Vec<Sign>, east_states: Vec<Sign>) -> Result<Self> {
        if west_states.len() != word.west_arity {
            return Err(Error::Arity(format!(
                "west edge has {} points but {} states",
                word.west_arity,
                west_states.len()
            )));
        }
        if east_states.len() != word.east_arity {
            return Err(Error::Arity(format!(
                "east edge has {} points but {} states",
                word.east_arity,
                east_states.len()
            )));
        }
        Ok(Self {
            word,
            west_states,
            east_states,
        })
    }

    /// Parallel strands carrying the given states.
    pub fn parallel(mu: &[Sign], nu: &[Sign]) -> Result<Self> {
        Self::new(SliceWord::identity(mu.len()), mu.to_vec(), nu.to_vec())
    }

    pub fn word(&self) -> &SliceWord {
        &self.word
    }

    pub fn west_states(&self) -> &[Sign] {
        &self.west_states
    }

    pub fn east_states(&self) -> &[Sign] {
        &self.east_states
    }
}

impl fmt::Display for StatedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)?;
        if self.word.west_arity > 0 {
            write!(f, " west={}", fmt_signs(&self.west_states))?;
        }
        if self.word.east_arity > 0 {
            write!(f, " east={}", fmt_signs(&self.east_states))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for StatedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}

/// Parses `tangle(N){x0;xb1;cap0;cup0} west=+- east=+-`.
pub fn parse_diagram(text: &str) -> Result<StatedWord> {
    let mut cur = Cursor::new(text);
    let word = parse_word_at(&mut cur)?;
    let mut west = Vec::new();
    let mut east = Vec::new();
    if cur.eat_str("west") {
        cur.expect('=')?;
        west = cur.signs()?;
    }
    if cur.eat_str("east") {
        cur.expect('=')?;
        east = cur.signs()?;
    }
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    StatedWord::new(word, west, east)
}

/// Parses the unstated part `tangle(N){...}`.
pub fn parse_slice_word(text: &str) -> Result<SliceWord> {
    let mut cur = Cursor::new(text);
    let word = parse_word_at(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(word)
}

fn parse_word_at(cur: &mut Cursor) -> Result<SliceWord> {
    cur.expect_str("tangle")?;
    cur.expect('(')?;
    let west = cur.usize()?;
    cur.expect(')')?;
    cur.expect('{')?;
    let mut slices = Vec::new();
    let mut rows = west;
    if !cur.eat('}') {
        loop {
            let ctor: fn(usize) -> Slice = if cur.eat_str("xb") {
                Slice::CrossUnder
            } else if cur.eat_str("x") {
                Slice::Cross
            } else if cur.eat_str("cap") {
                Slice::Cap
            } else if cur.eat_str("cup") {
                Slice::Cup
            } else {
                return Err(cur.error("expected one of `x`, `xb`, `cap`, `cup`"));
            };
            let s = ctor(cur.usize()?);
            rows = s.rows_after(rows)?;
            slices.push(s);
            if cur.eat('}') {
                break;
            }
            cur.expect(';')?;
        }
    }
    SliceWord::new(west, slices)
}

/// A basis element: parallel strands with decreasing states `mu` (west) and `nu` (east).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisTangle {
    mu: Vec<Sign>,
    nu: Vec<Sign>,
}

impl BasisTangle {
    pub fn new(mu: Vec<Sign>, nu: Vec<Sign>) -> Result<Self> {
        if mu.len() != nu.len() {
            return Err(Error::Arity(format!(
                "basis tangle with {} west and {} east states",
                mu.len(),
                nu.len()
            )));
        }
        if !is_decreasing(&mu) || !is_decreasing(&nu) {
            return Err(Error::Invalid(format!(
                "states {};{} are not decreasing",
                fmt_signs(&mu),
                fmt_signs(&nu)
            )));
        }
        Ok(Self { mu, nu })
    }

    pub(crate) fn new_unchecked(mu: Vec<Sign>, nu: Vec<Sign>) -> Self {
        debug_assert!(mu.len() == nu.len() && is_decreasing(&mu) && is_decreasing(&nu));
        Self { mu, nu }
    }

    pub fn unit() -> Self {
        Self {
            mu: Vec::new(),
            nu: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[Sign] {
        &self.mu
    }

    pub fn nu(&self) -> &[Sign] {
        &self.nu
    }

    /// The `(n+1)^2` basis elements with `n` strands.
    pub fn with_strands(n: usize) -> Vec<BasisTangle> {
        let dec: Vec<Vec<Sign>> = (0..=n)
            .map(|p| {
                let mut v = vec![Sign::Plus; p];
                v.resize(n, Sign::Minus);
                v
            })
            .collect();
        let mut out = Vec::new();
        for mu in &dec {
            for nu in &dec {
                out.push(BasisTangle::new_unchecked(mu.clone(), nu.clone()));
            }
        }
        out
    }

    /// All basis elements with at most `n` strands.
    pub fn up_to(n: usize) -> Vec<BasisTangle> {
        (0..=n).flat_map(BasisTangle::with_strands).collect()
    }

    pub fn to_stated(&self) -> StatedWord {
        StatedWord::parallel(&self.mu, &self.nu).expect("equal lengths")
    }
}

impl PartialOrd for BasisTangle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisTangle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.mu.len(), &self.mu, &self.nu).cmp(&(other.mu.len(), &other.mu, &other.nu))
    }
}

impl fmt::Display for BasisTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "beta({};{})", fmt_signs(&self.mu), fmt_signs(&self.nu))
        }
    }
}

/// An element of the stated skein algebra of the bigon in the basis of [`BasisTangle`]s.
pub type SkeinElement = LinComb<BasisTangle>;

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter())
    }
}

impl fmt::Display for LinComb<Vec<BasisTangle>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<(String, &HalfLaurent)> = self
            .iter()
            .map(|(k, c)| (k.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ⊗ "), c))
            .collect();
        write_terms(f, keys.iter().map(|(k, c)| (k, *c)))
    }
}

pub(crate) fn write_terms<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a HalfLaurent)>,
) -> fmt::Result {
    let mut empty = true;
    for (k, c) in terms {
        if !empty {
            write!(f, " + ")?;
        }
        empty = false;
        if c.is_one() {
            write!(f, "{k}")?;
        } else {
            write!(f, "({c}) * {k}")?;
        }
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

/// Loop value `-q^2 - q^-2`.
pub fn delta() -> HalfLaurent {
    HalfLaurent::from_terms([(4, -1), (-4, -1)])
}

/// Boundary arc values and height-exchange scalars at the two edges.
#[derive(Clone, Debug)]
pub struct BoundaryCoefficients {
    c: [[HalfLaurent; 2]; 2],
    cbar: [[HalfLaurent; 2]; 2],
    east_exchange: (HalfLaurent, HalfLaurent),
    west_exchange: (HalfLaurent, HalfLaurent),
}

static COEFFS: Lazy<BoundaryCoefficients> = Lazy::new(BoundaryCoefficients::build);

impl BoundaryCoefficients {
    fn build() -> Self {
        let z = HalfLaurent::zero;
        let c = [
            [z(), HalfLaurent::s_pow(-1)],
            [-HalfLaurent::s_pow(-5), z()],
        ];
        let cbar = [
            [z(), -HalfLaurent::s_pow(5)],
            [HalfLaurent::s_pow(1), z()],
        ];
        let out = Self {
            c,
            cbar,
            east_exchange: (HalfLaurent::q_pow(2), HalfLaurent::s_pow(-1)),
            west_exchange: (HalfLaurent::q_pow(2), -HalfLaurent::s_pow(5)),
        };
        for s in Sign::BOTH {
            assert!(out.c(s, s).is_zero() && out.cbar(s, s).is_zero());
        }
        assert_eq!(out.c(Sign::Plus, Sign::Minus), HalfLaurent::s_pow(-1));
        assert_eq!(out.c(Sign::Minus, Sign::Plus), -HalfLaurent::s_pow(-5));
        assert_eq!(out.cbar(Sign::Plus, Sign::Minus), -HalfLaurent::s_pow(5));
        assert_eq!(out.cbar(Sign::Minus, Sign::Plus), HalfLaurent::s_pow(1));
        out
    }

    pub fn standard() -> &'static Self {
        &COEFFS
    }

    /// Value of an east returning arc with states `upper` above `lower`.
    pub fn c(&self, upper: Sign, lower: Sign) -> HalfLaurent {
        self.c[upper.index()][lower.index()].clone()
    }

    /// Value of a west returning arc with states `upper` above `lower`.
    pub fn cbar(&self, upper: Sign, lower: Sign) -> HalfLaurent {
        self.cbar[upper.index()][lower.index()].clone()
    }

    /// `C(nu) = C^{-nu}_{nu}`.
    pub fn cfun(&self, nu: Sign) -> HalfLaurent {
        self.c(nu.flip(), nu)
    }

    /// `(swapped, arc)` scalars for `-` above `+` on the east edge.
    pub fn east_exchange(&self) -> &(HalfLaurent, HalfLaurent) {
        &self.east_exchange
    }

    /// `(swapped, arc)` scalars for `-` above `+` on the west edge.
    pub fn west_exchange(&self) -> &(HalfLaurent, HalfLaurent) {
        &self.west_exchange
    }
}

/// Crossing-free resolutions `(coefficient, word)`, one per smoothing, loops kept.
pub fn smoothings(word: &SliceWord) -> Vec<(HalfLaurent, Vec<Slice>)> {
    let mut acc: Vec<(HalfLaurent, Vec<Slice>)> = vec![(HalfLaurent::one(), Vec::new())];
    for s in word.slices() {
        let (id_coeff, turn_coeff, i) = match *s {
            Slice::Cross(i) => (HalfLaurent::q_pow(1), HalfLaurent::q_pow(-1), i),
            Slice::CrossUnder(i) => (HalfLaurent::q_pow(-1), HalfLaurent::q_pow(1), i),
            other => {
                for (_, w) in acc.iter_mut() {
                    w.push(other);
                }
                continue;
            }
        };
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (c, w) in acc {
            let mut turned = w.clone();
            turned.push(Slice::Cap(i));
            turned.push(Slice::Cup(i));
            next.push((&c * &turn_coeff, turned));
            next.push((&c * &id_coeff, w));
        }
        acc = next;
    }
    acc
}

/// Matchings of all smoothings, loops already replaced by powers of the loop value.
///
/// Crossings are resolved one slice at a time and the partial diagrams are merged by
/// their matching, so the work grows with the number of matchings rather than `2^c`.
pub fn resolve_to_matchings(word: &SliceWord) -> BTreeMap<Matching, HalfLaurent> {
    let d = delta();
    let (start, _) = trace(&SliceWord::identity(word.west_arity())).expect("identity traces");
    let mut acc: BTreeMap<Matching, HalfLaurent> = BTreeMap::from([(start, HalfLaurent::one())]);
    for s in word.slices() {
        let options: Vec<(HalfLaurent, Vec<Slice>)> = match *s {
            Slice::Cross(i) => vec![
                (HalfLaurent::q_pow(1), Vec::new()),
                (HalfLaurent::q_pow(-1), vec![Slice::Cap(i), Slice::Cup(i)]),
            ],
            Slice::CrossUnder(i) => vec![
                (HalfLaurent::q_pow(-1), Vec::new()),
                (HalfLaurent::q_pow(1), vec![Slice::Cap(i), Slice::Cup(i)]),
            ],
            other => vec![(HalfLaurent::one(), vec![other])],
        };
        let mut next: BTreeMap<Matching, HalfLaurent> = BTreeMap::new();
        for (m, c) in &acc {
            let base = m.canonical_word();
            for (k, extra) in &options {
                let mut slices = base.slices().to_vec();
                slices.extend_from_slice(extra);
                let w = SliceWord::new(word.west_arity(), slices).expect("valid prefix");
                let (m2, loops) = trace(&w).expect("prefix is crossingless");
                let coeff = &(c * k) * &d.pow(loops as u32);
                *next.entry(m2).or_default() += &coeff;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// Kauffman-bracket resolution: a combination of canonical crossingless words.
pub fn resolve_crossings(word: &SliceWord) -> LinComb<SliceWord> {
    resolve_to_matchings(word)
        .into_iter()
        .map(|(m, c)| (m.canonical_word(), c))
        .collect()
}

/// Evaluates a crossingless diagram with the given matching and states.
pub fn evaluate_matching(m: &Matching, west: &[Sign], east: &[Sign]) -> SkeinElement {
    let bc = BoundaryCoefficients::standard();
    let mut scalar = HalfLaurent::one();
    let mut through_w = Vec::new();
    let mut through_e = Vec::new();
    for (x, y) in m.pairs() {
        match (m.endpoint(x), m.endpoint(y)) {
            (Endpoint::West(i), Endpoint::West(j)) => scalar = &scalar * &bc.cbar(west[i], west[j]),
            (Endpoint::East(i), Endpoint::East(j)) => {
                let (u, l) = (i.min(j), i.max(j));
                scalar = &scalar * &bc.c(east[u], east[l]);
            }
            (Endpoint::West(i), Endpoint::East(j)) => {
                through_w.push(i);
                through_e.push(j);
            }
            (Endpoint::East(_), Endpoint::West(_)) => unreachable!("west points come first"),
        }
        if scalar.is_zero() {
            return SkeinElement::zero();
        }
    }
    through_w.sort_unstable();
    through_e.sort_unstable();
    let mu: Vec<Sign> = through_w.iter().map(|&i| west[i]).collect();
    let nu: Vec<Sign> = through_e.iter().map(|&j| east[j]).collect();
    reduce_parallel(&mu, &nu).scale(&scalar)
}

/// Reduces any stated diagram to the decreasing-state basis.
pub fn reduce(d: &StatedWord) -> SkeinElement {
    if d.word.slices.is_empty() {
        return reduce_parallel(&d.west_states, &d.east_states);
    }
    let mut out = SkeinElement::zero();
    for (m, c) in resolve_to_matchings(&d.word) {
        out.add_scaled(&evaluate_matching(&m, &d.west_states, &d.east_states), &c);
    }
    out
}

/// The scalar value of a diagram with no boundary points.
pub fn bracket(word: &SliceWord) -> Result<HalfLaurent> {
    if word.west_arity() != 0 || word.east_arity() != 0 {
        return Err(Error::Arity(format!(
            "bracket needs a closed diagram, found {} west and {} east points",
            word.west_arity(),
            word.east_arity()
        )));
    }
    let d = StatedWord::new(word.clone(), Vec::new(), Vec::new())?;
    Ok(reduce(&d).coefficient(&BasisTangle::unit()))
}

fn without_pair(v: &[Sign], i: usize) -> Vec<Sign> {
    let mut out = v[..i].to_vec();
    out.extend_from_slice(&v[i + 2..]);
    out
}

/// Parallel strands with arbitrary states, sorted by the height-exchange relations.
pub fn reduce_parallel(mu: &[Sign], nu: &[Sign]) -> SkeinElement {
    assert_eq!(mu.len(), nu.len(), "parallel strands need equal state counts");
    if is_decreasing(mu) && is_decreasing(nu) {
        return SkeinElement::basis(BasisTangle::new_unchecked(mu.to_vec(), nu.to_vec()));
    }
    if let Some(hit) = cache::lookup_parallel(mu, nu) {
        return hit;
    }
    let bc = BoundaryCoefficients::standard();
    let bad = |v: &[Sign]| v.windows(2).position(|w| w[0] == Sign::Minus && w[1] == Sign::Plus);
    let out = if let Some(i) = bad(nu) {
        let (swap, arc) = bc.east_exchange();
        let mut swapped = nu.to_vec();
        swapped.swap(i, i + 1);
        let mut out = reduce_parallel(mu, &swapped).scale(swap);
        let joined = arc * &bc.cbar(mu[i], mu[i + 1]);
        if !joined.is_zero() {
            out.add_scaled(&reduce_parallel(&without_pair(mu, i), &without_pair(nu, i)), &joined);
        }
        out
    } else {
        let i = bad(mu).expect("unsorted states");
        let (swap, arc) = bc.west_exchange();
        let mut swapped = mu.to_vec();
        swapped.swap(i, i + 1);
        let mut out = reduce_parallel(&swapped, nu).scale(swap);
        let joined = arc * &bc.c(nu[i], nu[i + 1]);
        if !joined.is_zero() {
            out.add_scaled(&reduce_parallel(&without_pair(mu, i), &without_pair(nu, i)), &joined);
        }
        out
    };
    cache::store_parallel(mu, nu, &out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signs(s: &str) -> Vec<Sign> {
        parse_sign_run(s).unwrap()
    }

    fn stated(text: &str) -> StatedWord {
        parse_diagram(text).unwrap()
    }

    #[test]
    fn loop_value() {
        let d = stated("tangle(0){cup0;cap0}");
        assert_eq!(reduce(&d), SkeinElement::single(BasisTangle::unit(), delta()));
        let lc = resolve_crossings(d.word());
        assert_eq!(lc.coefficient(&SliceWord::identity(0)), delta());
    }

    #[test]
    fn east_arc_values() {
        let plus_minus = reduce(&stated("tangle(0){cup0} east=+-"));
        assert_eq!(plus_minus.coefficient(&BasisTangle::unit()), HalfLaurent::s_pow(-1));
        assert!(reduce(&stated("tangle(0){cup0} east=++")).is_zero());
        let west = reduce(&stated("tangle(2){cap0} west=+-"));
        assert_eq!(west.coefficient(&BasisTangle::unit()), -HalfLaurent::s_pow(5));
    }

    #[test]
    fn reidemeister_two() {
        let lc = resolve_crossings(&parse_slice_word("tangle(2){x0;xb0}").unwrap());
        assert_eq!(lc, LinComb::basis(SliceWord::identity(2)));
    }

    #[test]
    fn basis_is_fixed() {
        for b in BasisTangle::up_to(3) {
            assert_eq!(reduce(&b.to_stated()), SkeinElement::basis(b.clone()));
        }
    }

    #[test]
    fn exchange_example() {
        // - above + on the east edge: q^2 times the swap plus the joined term.
        let got = reduce_parallel(&signs("+-"), &signs("-+"));
        let mut want = SkeinElement::single(
            BasisTangle::new(signs("+-"), signs("+-")).unwrap(),
            HalfLaurent::q_pow(2),
        );
        want.add_term(BasisTangle::unit(), -HalfLaurent::q_pow(2));
        assert_eq!(got, want);
    }

    #[test]
    fn positive_kink() {
        let kinked = reduce(&stated("tangle(1){cup1;x0;cap1} west=+ east=+"));
        let plain = reduce(&stated("tangle(1){} west=+ east=+"));
        assert_eq!(kinked, plain.scale(&-HalfLaurent::q_pow(3)));
    }

    #[test]
    fn zigzag_is_identity() {
        for w in ["tangle(1){cup1;cap0}", "tangle(1){cup0;cap1}"] {
            let word = parse_slice_word(w).unwrap();
            assert_eq!(word.east_arity(), 1);
            for (m, e) in [("+", "+"), ("+", "-"), ("-", "+"), ("-", "-")] {
                let d = StatedWord::new(word.clone(), signs(m), signs(e)).unwrap();
                assert_eq!(reduce(&d), reduce_parallel(&signs(m), &signs(e)));
            }
        }
    }

    #[test]
    fn print_parse_round_trip() {
        for t in [
            "tangle(2){x0} west=+- east=+-",
            "tangle(0){cup0;cap0}",
            "tangle(3){xb1;cap0;cup1} west=-+- east=+-+",
            "tangle(2){} west=-+ east=+-",
        ] {
            let d = stated(t);
            assert_eq!(d.to_string(), t);
            assert_eq!(stated(&d.to_string()), d);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_diagram("tangle(1){cap0}"), Err(Error::Arity(_))));
        assert!(matches!(parse_diagram("tangle(2){x0} west=+"), Err(Error::Arity(_))));
        assert!(matches!(parse_diagram("tangle(2){y0}"), Err(Error::Parse { .. })));
        assert!(matches!(parse_diagram("tangle(2{x0}"), Err(Error::Parse { .. })));
    }
}
