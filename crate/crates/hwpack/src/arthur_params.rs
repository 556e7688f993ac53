//! Arthur parameters of `Sp(2n,ℝ)` with integral infinitesimal character.
//!
//! A parameter is a multiset of *unipotent* blocks `η ⊠ R[a′]` (`η` a
//! quadratic character, `a′` odd) and *discrete* blocks `δ_t ⊠ R[a]`
//! (`t ≥ 1`, `t + a` odd, a two-dimensional Weil-group piece), of total
//! dimension `2n + 1` and trivial determinant.
//!
//! ```
//! use hwpack::arthur_params::{ArthurParameter, UnipotentBlock, DiscreteBlock};
//! use hwpack::sign::Char;
//!
//! let psi = ArthurParameter::new(
//!     5,
//!     vec![UnipotentBlock::new(Char::Triv, 7)],
//!     vec![DiscreteBlock::new(1, 2)],
//! )
//! .unwrap();
//! assert_eq!(psi.inf_char().entries(), &[3, 2, 1, 1, 0, 0, 0, -1, -1, -2, -3]);
//! assert_eq!((psi.a_psi(), psi.a_psi_u()), (7, 7));
//! ```

use crate::error::{Error, Result};
use crate::sign::Char;
use crate::weights::InfinitesimalCharacter;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// `η ⊠ R[dim]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnipotentBlock {
    #[serde(rename = "char")]
    pub character: Char,
    pub dim: u32,
}

impl UnipotentBlock {
    pub fn new(character: Char, dim: u32) -> Self {
        UnipotentBlock { character, dim }
    }

    /// `sgn^k ⊠ R[dim]`.
    pub fn sgn_pow(k: i64, dim: u32) -> Self {
        UnipotentBlock { character: Char::sgn_pow(k), dim }
    }

    /// Half-length `(dim − 1)/2` of the centred segment.
    pub fn radius(&self) -> i64 {
        (self.dim as i64 - 1) / 2
    }
}

/// Dimension decreasing, then `triv` before `sgn`.
impl Ord for UnipotentBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        other.dim.cmp(&self.dim).then(self.character.cmp(&other.character))
    }
}

impl PartialOrd for UnipotentBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `δ_t ⊠ R[a]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscreteBlock {
    pub t: u32,
    pub a: u32,
}

impl DiscreteBlock {
    pub fn new(t: u32, a: u32) -> Self {
        DiscreteBlock { t, a }
    }

    /// Lower end `(t − a + 1)/2` of the segment.
    pub fn lo(&self) -> i64 {
        (self.t as i64 - self.a as i64 + 1).div_euclid(2)
    }

    /// Upper end `(t + a − 1)/2` of the segment.
    pub fn hi(&self) -> i64 {
        (self.t as i64 + self.a as i64 - 1).div_euclid(2)
    }

    /// The block whose segment is `[lo, hi]` (requires `lo + hi ≥ 1`).
    pub fn from_segment(lo: i64, hi: i64) -> Self {
        debug_assert!(lo <= hi && lo + hi >= 1);
        DiscreteBlock { t: (lo + hi) as u32, a: (hi - lo + 1) as u32 }
    }

    fn shape_ok(&self) -> bool {
        self.t >= 1 && self.a >= 1 && (self.t + self.a) % 2 == 1
    }
}

/// `t` decreasing, ties by `a` decreasing.
impl Ord for DiscreteBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        other.t.cmp(&self.t).then(other.a.cmp(&self.a))
    }
}

impl PartialOrd for DiscreteBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Either kind of block; used where blocks are handled uniformly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Block {
    Discrete(DiscreteBlock),
    Unipotent(UnipotentBlock),
}

impl fmt::Display for UnipotentBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊠R[{}]", self.character, self.dim)
    }
}

impl fmt::Display for DiscreteBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{}⊠R[{}]", self.t, self.a)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Discrete(d) => d.fmt(f),
            Block::Unipotent(u) => u.fmt(f),
        }
    }
}

/// Reasons a parameter fails validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Violation {
    /// `Σ a′ + 2 Σ a ≠ 2n + 1`
    DimSum,
    /// product of the `η_i` differs from `sgn^{#{j : a_j odd}}`
    ParityProduct,
    /// even or zero unipotent dimension, `t < 1`, `a < 1`, or `t + a` even
    BlockShape,
    /// blocks not listed in canonical order
    Order,
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::DimSum => "DIM_SUM",
            Violation::ParityProduct => "PARITY_PRODUCT",
            Violation::BlockShape => "BLOCK_SHAPE",
            Violation::Order => "ORDER",
        }
    }
}

/// An Arthur parameter for `Sp(2n,ℝ)`. Rank `0` is allowed so that block
/// removal can run all the way down; enumeration requires `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArthurParameter {
    pub n: usize,
    pub unipotent: Vec<UnipotentBlock>,
    pub discrete: Vec<DiscreteBlock>,
}

impl ArthurParameter {
    /// Canonicalizes the block order and validates.
    pub fn new(n: usize, unipotent: Vec<UnipotentBlock>, discrete: Vec<DiscreteBlock>) -> Result<Self> {
        let p = ArthurParameter { n, unipotent, discrete }.canonicalize();
        p.validate().map_err(Error::InvalidParameter)?;
        Ok(p)
    }

    /// `triv ⊠ R[2n+1]`, the parameter of the trivial representation.
    pub fn trivial(n: usize) -> Self {
        ArthurParameter {
            n,
            unipotent: vec![UnipotentBlock::new(Char::Triv, 2 * n as u32 + 1)],
            discrete: vec![],
        }
    }

    /// Sorts both block lists into canonical order.
    pub fn canonicalize(mut self) -> Self {
        self.unipotent.sort();
        self.discrete.sort();
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.unipotent.windows(2).all(|w| w[0] <= w[1]) && self.discrete.windows(2).all(|w| w[0] <= w[1])
    }

    /// All violated invariants, or `Ok(())`.
    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        let shape_ok = self.unipotent.iter().all(|b| b.dim % 2 == 1) && self.discrete.iter().all(|d| d.shape_ok());
        if !shape_ok {
            v.push(Violation::BlockShape);
        }
        if self.total_dim() != 2 * self.n as u64 + 1 {
            v.push(Violation::DimSum);
        }
        let odd = self.discrete.iter().filter(|d| d.a % 2 == 1).count() as i64;
        let prod = self.unipotent.iter().fold(Char::Triv, |acc, b| acc * b.character);
        if prod != Char::sgn_pow(odd) {
            v.push(Violation::ParityProduct);
        }
        if !self.is_canonical() {
            v.push(Violation::Order);
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub fn total_dim(&self) -> u64 {
        self.dim_unipotent() + self.dim_discrete()
    }

    /// `dim ψ_u`.
    pub fn dim_unipotent(&self) -> u64 {
        self.unipotent.iter().map(|b| b.dim as u64).sum()
    }

    /// `dim ψ_d = 2 Σ a_j`.
    pub fn dim_discrete(&self) -> u64 {
        2 * self.discrete.iter().map(|d| d.a as u64).sum::<u64>()
    }

    /// The union of the block segments, sorted decreasingly.
    pub fn inf_char(&self) -> InfinitesimalCharacter {
        let mut all = Vec::with_capacity(self.total_dim() as usize);
        for b in &self.unipotent {
            let r = b.radius();
            all.extend(-r..=r);
        }
        for d in &self.discrete {
            for x in d.lo()..=d.hi() {
                all.push(x);
                all.push(-x);
            }
        }
        InfinitesimalCharacter::new(all).expect("block segments are symmetric")
    }

    /// `a(ψ)`: the largest `SL_2` dimension over all blocks.
    pub fn a_psi(&self) -> u32 {
        let u = self.unipotent.iter().map(|b| b.dim).max().unwrap_or(0);
        let d = self.discrete.iter().map(|b| b.a).max().unwrap_or(0);
        u.max(d)
    }

    /// `a(ψ_u)`: the largest unipotent dimension. Valid parameters always
    /// have a unipotent block (the total dimension is odd).
    pub fn a_psi_u(&self) -> u32 {
        self.unipotent.iter().map(|b| b.dim).max().expect("valid parameters have a unipotent block")
    }

    pub fn contains_unipotent(&self, block: &UnipotentBlock) -> bool {
        self.unipotent.contains(block)
    }

    pub fn contains_block(&self, block: &Block) -> bool {
        match block {
            Block::Unipotent(u) => self.unipotent.contains(u),
            Block::Discrete(d) => self.discrete.contains(d),
        }
    }

    /// All blocks, discrete first (canonical order), then unipotent.
    pub fn blocks(&self) -> Vec<Block> {
        self.discrete
            .iter()
            .map(|&d| Block::Discrete(d))
            .chain(self.unipotent.iter().map(|&u| Block::Unipotent(u)))
            .collect()
    }

    /// Removes discrete block `j`: `ψ = (δ_t ⊠ R[a]) ⊕ (sgn^a ⊗ ψ′)` gives `ψ′`
    /// of rank `n − a`, whose unipotent characters are twisted by `sgn^a`.
    pub fn remove_block(&self, j: usize) -> Result<ArthurParameter> {
        let d = *self.discrete.get(j).ok_or_else(|| Error::OutOfRange {
            what: "discrete block index",
            detail: format!("{j} ≥ {}", self.discrete.len()),
        })?;
        if d.a as usize > self.n {
            return Err(Error::Precondition(format!("block {d} is larger than the rank")));
        }
        let mut discrete = self.discrete.clone();
        discrete.remove(j);
        let unipotent = twist_unipotent(&self.unipotent, d.a as i64);
        Ok(ArthurParameter { n: self.n - d.a as usize, unipotent, discrete }.canonicalize())
    }

    /// Inverse of [`remove_block`](Self::remove_block).
    pub fn insert_block(&self, d: DiscreteBlock) -> ArthurParameter {
        let mut discrete = self.discrete.clone();
        discrete.push(d);
        let unipotent = twist_unipotent(&self.unipotent, d.a as i64);
        ArthurParameter { n: self.n + d.a as usize, unipotent, discrete }.canonicalize()
    }

    /// The unipotent part twisted as a parameter of the unitary-group
    /// factor: `ψ′_u = sgn^{dim ψ_d / 2} ⊗ ψ_u`.
    pub fn twisted_unipotent(&self) -> Vec<UnipotentBlock> {
        twist_sgn(&self.unipotent, self.dim_discrete())
    }

    /// Parse the JSON wire format; unknown fields are rejected, and the
    /// result must validate (including canonical order).
    pub fn from_json(s: &str) -> std::result::Result<Self, ParseError> {
        let p: ArthurParameter = serde_json::from_str(s).map_err(|e| ParseError::Syntax(e.to_string()))?;
        p.validate().map_err(ParseError::Invalid)?;
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .unipotent
            .iter()
            .map(|b| b.to_string())
            .chain(self.discrete.iter().map(|d| d.to_string()))
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Failure to read a parameter from its wire format.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed parameter: {0}")]
    Syntax(String),
    #[error("invalid parameter: {0:?}")]
    Invalid(Vec<Violation>),
}

fn twist_unipotent(blocks: &[UnipotentBlock], k: i64) -> Vec<UnipotentBlock> {
    blocks.iter().map(|b| UnipotentBlock::new(b.character.twist(k), b.dim)).collect()
}

/// Multiplies every unipotent character by `sgn^{dim ψ_d / 2}`.
pub fn twist_sgn(blocks: &[UnipotentBlock], dim_psi_d: u64) -> Vec<UnipotentBlock> {
    twist_unipotent(blocks, (dim_psi_d / 2) as i64)
}

/// Structural constraints satisfied by parameters whose infinitesimal
/// character is that of a unitary highest weight module: `ψ_u` has one or
/// three blocks, one of dimension 1 if three; at most one discrete block has
/// `t − a + 1 ≤ 0`, and if one has `t − a + 1 < 0` then `ψ_u` is a single
/// block of dimension 1.
pub fn lemma43_check(psi: &ArthurParameter) -> bool {
    let r = psi.unipotent.len();
    let shape = r == 1 || (r == 3 && psi.unipotent.iter().any(|b| b.dim == 1));
    let low: Vec<i64> = psi.discrete.iter().map(|d| d.t as i64 - d.a as i64 + 1).collect();
    let nonpos = low.iter().filter(|&&x| x <= 0).count();
    let neg = low.iter().any(|&x| x < 0);
    let neg_ok = !neg || (r == 1 && psi.unipotent[0].dim == 1);
    shape && nonpos <= 1 && neg_ok
}

/// Rank bound above which [`enumerate_params`] refuses to run.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    Unipotent(u32),
    Discrete(DiscreteBlock),
}

struct Cover {
    offset: i64,
    counts: Vec<u32>,
    stack: Vec<Shape>,
    found: BTreeSet<Vec<Shape>>,
}

impl Cover {
    fn top(&self) -> Option<i64> {
        self.counts.iter().rposition(|&c| c > 0).map(|i| i as i64 - self.offset)
    }

    fn take(&mut self, lo: i64, hi: i64) -> bool {
        let ok = (lo..=hi).all(|x| self.counts[(x + self.offset) as usize] > 0);
        if ok {
            for x in lo..=hi {
                self.counts[(x + self.offset) as usize] -= 1;
            }
        }
        ok
    }

    fn give(&mut self, lo: i64, hi: i64) {
        for x in lo..=hi {
            self.counts[(x + self.offset) as usize] += 1;
        }
    }

    fn run(&mut self, floor: Option<(i64, Shape)>) {
        let Some(v) = self.top() else {
            let mut s = self.stack.clone();
            s.sort();
            self.found.insert(s);
            return;
        };
        // Every block covering the current maximum has it as its top; within
        // one top value blocks are chosen in increasing `Shape` order.
        let allowed = |s: Shape| match floor {
            Some((fv, fs)) if fv == v => s >= fs,
            _ => true,
        };
        let u = Shape::Unipotent(2 * v as u32 + 1);
        if allowed(u) && self.take(-v, v) {
            self.stack.push(u);
            self.run(Some((v, u)));
            self.stack.pop();
            self.give(-v, v);
        }
        for lo in (1 - v)..=v {
            let d = Shape::Discrete(DiscreteBlock::from_segment(lo, v));
            if !allowed(d) {
                continue;
            }
            if self.take(lo, v) {
                if self.take(-v, -lo) {
                    self.stack.push(d);
                    self.run(Some((v, d)));
                    self.stack.pop();
                    self.give(-v, -lo);
                }
                self.give(lo, v);
            }
        }
    }
}

/// All valid parameters of rank `n` with infinitesimal character `χ`,
/// canonicalized, duplicate-free and sorted.
pub fn enumerate_params(chi: &InfinitesimalCharacter, n: usize) -> Result<Vec<ArthurParameter>> {
    enumerate_params_with_limit(chi, n, DEFAULT_ENUMERATION_LIMIT)
}

/// [`enumerate_params`] with an explicit rank bound.
pub fn enumerate_params_with_limit(chi: &InfinitesimalCharacter, n: usize, limit: usize) -> Result<Vec<ArthurParameter>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if chi.rank() != n {
        return Err(Error::InfChar(format!("rank {} does not match n = {n}", chi.rank())));
    }
    if n > limit {
        return Err(Error::OutOfRange { what: "n", detail: format!("{n} exceeds the enumeration limit {limit}") });
    }
    let offset = chi.entries()[0].abs();
    let mut counts = vec![0u32; (2 * offset + 1) as usize];
    for &x in chi.entries() {
        counts[(x + offset) as usize] += 1;
    }
    let mut cover = Cover { offset, counts, stack: Vec::new(), found: BTreeSet::new() };
    cover.run(None);

    let mut out = BTreeSet::new();
    for shapes in cover.found {
        let mut dims = Vec::new();
        let mut discrete = Vec::new();
        for s in shapes {
            match s {
                Shape::Unipotent(d) => dims.push(d),
                Shape::Discrete(b) => discrete.push(b),
            }
        }
        let odd = discrete.iter().filter(|d| d.a % 2 == 1).count();
        for unipotent in character_assignments(&dims) {
            let sgns = unipotent.iter().filter(|b| b.character == Char::Sgn).count();
            if sgns % 2 == odd % 2 {
                out.insert(ArthurParameter { n, unipotent, discrete: discrete.clone() }.canonicalize());
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Distinct ways of attaching `triv`/`sgn` to a multiset of dimensions.
fn character_assignments(dims: &[u32]) -> Vec<Vec<UnipotentBlock>> {
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &d in dims {
        match groups.iter_mut().find(|g| g.0 == d) {
            Some(g) => g.1 += 1,
            None => groups.push((d, 1)),
        }
    }
    let mut acc: Vec<Vec<UnipotentBlock>> = vec![Vec::new()];
    for (d, k) in groups {
        let mut next = Vec::new();
        for base in &acc {
            for s in 0..=k {
                let mut v = base.clone();
                v.extend(std::iter::repeat(UnipotentBlock::new(Char::Triv, d)).take(k - s));
                v.extend(std::iter::repeat(UnipotentBlock::new(Char::Sgn, d)).take(s));
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::Char::{Sgn, Triv};

    fn ub(c: Char, d: u32) -> UnipotentBlock {
        UnipotentBlock::new(c, d)
    }

    #[test]
    fn validation_examples() {
        let p = ArthurParameter { n: 2, unipotent: vec![ub(Sgn, 3), ub(Triv, 1), ub(Sgn, 1)], discrete: vec![] };
        assert_eq!(p.validate(), Ok(()));

        let p = ArthurParameter { n: 2, unipotent: vec![ub(Triv, 3)], discrete: vec![DiscreteBlock::new(2, 1)] };
        assert_eq!(p.validate(), Err(vec![Violation::ParityProduct]));

        assert_eq!(ArthurParameter::trivial(1).validate(), Ok(()));

        let p = ArthurParameter { n: 2, unipotent: vec![ub(Triv, 1), ub(Sgn, 3), ub(Sgn, 1)], discrete: vec![] };
        assert_eq!(p.validate(), Err(vec![Violation::Order]));

        let p = ArthurParameter { n: 2, unipotent: vec![ub(Triv, 2)], discrete: vec![DiscreteBlock::new(2, 2)] };
        let v = p.validate().unwrap_err();
        assert!(v.contains(&Violation::BlockShape));
        assert!(v.contains(&Violation::DimSum));
    }

    #[test]
    fn inf_char_examples() {
        let p = ArthurParameter::new(5, vec![ub(Triv, 7)], vec![DiscreteBlock::new(1, 2)]).unwrap();
        assert_eq!(p.inf_char().entries(), &[3, 2, 1, 1, 0, 0, 0, -1, -1, -2, -3]);
        assert_eq!(ArthurParameter::trivial(3).inf_char().entries(), &[3, 2, 1, 0, -1, -2, -3]);
        let p = ArthurParameter::new(2, vec![ub(Sgn, 3), ub(Triv, 1), ub(Sgn, 1)], vec![]).unwrap();
        assert_eq!(p.inf_char().entries(), &[1, 0, 0, 0, -1]);
    }

    #[test]
    fn a_invariants() {
        let p = ArthurParameter::new(4, vec![ub(Triv, 1)], vec![DiscreteBlock::new(1, 4)]).unwrap();
        assert_eq!((p.a_psi(), p.a_psi_u()), (4, 1));
        let p = ArthurParameter::trivial(4);
        assert_eq!((p.a_psi(), p.a_psi_u()), (9, 9));
    }

    #[test]
    fn twisting() {
        assert_eq!(twist_sgn(&[ub(Triv, 3)], 4), vec![ub(Triv, 3)]);
        assert_eq!(twist_sgn(&[ub(Triv, 3)], 2), vec![ub(Sgn, 3)]);
        assert_eq!(twist_sgn(&[ub(Sgn, 1)], 6), vec![ub(Triv, 1)]);
    }

    #[test]
    fn structural_check_examples() {
        let p = ArthurParameter::new(2, vec![ub(Sgn, 3), ub(Triv, 1), ub(Sgn, 1)], vec![]).unwrap();
        assert!(lemma43_check(&p));
        let two = ArthurParameter { n: 2, unipotent: vec![ub(Triv, 3), ub(Triv, 1)], discrete: vec![] };
        assert!(!lemma43_check(&two));
        let big = ArthurParameter { n: 4, unipotent: vec![ub(Triv, 3), ub(Triv, 3), ub(Triv, 3)], discrete: vec![] };
        assert!(!lemma43_check(&big));
    }

    #[test]
    fn removal_examples() {
        let p = ArthurParameter::new(3, vec![ub(Triv, 3)], vec![DiscreteBlock::new(1, 2)]).unwrap();
        assert_eq!(p.remove_block(0).unwrap(), ArthurParameter::trivial(1));

        let p = ArthurParameter::new(2, vec![ub(Triv, 1), ub(Triv, 1), ub(Sgn, 1)], vec![DiscreteBlock::new(2, 1)])
            .unwrap();
        let q = p.remove_block(0).unwrap();
        assert_eq!(q.unipotent, vec![ub(Triv, 1), ub(Sgn, 1), ub(Sgn, 1)]);
        assert_eq!(q.validate(), Ok(()));
        assert_eq!(q.insert_block(DiscreteBlock::new(2, 1)), p);

        // Single discrete block of sgn^k R[2(n−k)+1] ⊕ δ_{k−1} R[k], n = 7, k = 3.
        let p = ArthurParameter::new(7, vec![ub(Sgn, 9)], vec![DiscreteBlock::new(2, 3)]).unwrap();
        let q = p.remove_block(0).unwrap();
        assert_eq!(q, ArthurParameter::trivial(4));
    }

    #[test]
    fn enumeration_small_case() {
        let chi = InfinitesimalCharacter::new(vec![1, 0, 0, 0, -1]).unwrap();
        let all = enumerate_params(&chi, 2).unwrap();
        assert_eq!(all.len(), 6);
        for p in &all {
            assert_eq!(p.validate(), Ok(()));
            assert_eq!(p.inf_char(), chi);
        }
        assert!(enumerate_params(&InfinitesimalCharacter::new(vec![0]).unwrap(), 0).is_err());
    }

    #[test]
    fn wire_format() {
        let p = ArthurParameter::new(5, vec![ub(Triv, 7)], vec![DiscreteBlock::new(1, 2)]).unwrap();
        let s = p.to_json();
        assert_eq!(s, r#"{"n":5,"unipotent":[{"char":"triv","dim":7}],"discrete":[{"t":1,"a":2}]}"#);
        assert_eq!(ArthurParameter::from_json(&s).unwrap(), p);
        assert!(matches!(
            ArthurParameter::from_json(r#"{"n":5,"unipotent":[],"discrete":[],"x":1}"#),
            Err(ParseError::Syntax(_))
        ));
        assert_eq!(
            ArthurParameter::from_json(r#"{"n":1,"unipotent":[{"char":"sgn","dim":3}],"discrete":[]}"#),
            Err(ParseError::Invalid(vec![Violation::ParityProduct]))
        );
    }
}
