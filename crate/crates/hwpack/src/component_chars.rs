//! Component groups `A(ψ)` and the sign characters `ρ_π` attached to the
//! scalar and near-scalar highest weight modules, relative to a Whittaker
//! datum `Wh_δ`, `δ ∈ {±1}`.
//!
//! A character is stored as one sign per listed block of `ψ` (equal on
//! equal blocks). Two sign vectors describe the same character of `A(ψ)`
//! exactly when they agree or differ by flipping every distinct block of
//! odd multiplicity; see [`char_equivalent`].
//!
//! ```
//! use hwpack::component_chars::{rho_theta, Side, ThetaSigns};
//!
//! assert_eq!(rho_theta(4, 2, 0, 0, 1, Side::Negative).unwrap(), ThetaSigns::Signs([1, -1, -1]));
//! ```

use crate::arthur_params::{ArthurParameter, Block, UnipotentBlock};
use crate::error::{Error, Result};
use crate::membership::{decide_pi, decide_sigma, Route};
use crate::sign::{floor_div, neg_one_pow, Char};
use serde::Serialize;
use std::fmt;

/// Distinct blocks of `ψ` with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentGroup {
    pub distinct_blocks: Vec<Block>,
    pub multiplicities: Vec<u32>,
}

impl ComponentGroup {
    /// `w_d = mult_d mod 2`; the group is `{ε : Π ε_d^{mult_d} = 1}`.
    pub fn relation(&self) -> Vec<u8> {
        self.multiplicities.iter().map(|m| (m % 2) as u8).collect()
    }

    /// `log₂ |A(ψ)|`.
    pub fn rank(&self) -> u32 {
        let odd = self.relation().iter().any(|&w| w == 1);
        self.distinct_blocks.len() as u32 - u32::from(odd)
    }

    pub fn order(&self) -> u64 {
        1u64 << self.rank()
    }

    fn index_of(&self, b: &Block) -> Option<usize> {
        self.distinct_blocks.iter().position(|x| x == b)
    }
}

pub fn component_group(psi: &ArthurParameter) -> ComponentGroup {
    let mut distinct_blocks: Vec<Block> = Vec::new();
    let mut multiplicities: Vec<u32> = Vec::new();
    for b in psi.blocks() {
        match distinct_blocks.iter().position(|x| *x == b) {
            Some(i) => multiplicities[i] += 1,
            None => {
                distinct_blocks.push(b);
                multiplicities.push(1);
            }
        }
    }
    ComponentGroup { distinct_blocks, multiplicities }
}

/// A representative sign vector over the listed blocks of a parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PacketCharacter {
    pub whittaker: i8,
    pub blocks: Vec<Block>,
    pub signs: Vec<i8>,
}

impl PacketCharacter {
    /// Signs agree on equal listed blocks.
    pub fn is_constant_on_equal_blocks(&self) -> bool {
        self.blocks.iter().enumerate().all(|(i, b)| {
            self.blocks.iter().enumerate().all(|(j, c)| b != c || self.signs[i] == self.signs[j])
        })
    }

    pub fn listed_product(&self) -> i8 {
        self.signs.iter().product()
    }

    /// Sign on a given block, if listed.
    pub fn sign_of(&self, b: &Block) -> Option<i8> {
        self.blocks.iter().position(|x| x == b).map(|i| self.signs[i])
    }
}

impl fmt::Display for PacketCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .zip(&self.signs)
            .map(|(b, s)| format!("{b} ↦ {}", if *s > 0 { "+1" } else { "-1" }))
            .collect();
        write!(f, "δ = {}: {}", self.whittaker, parts.join(", "))
    }
}

/// Distinct-block sign vector of `c`, or `None` if `c` is not a character
/// of `A(ψ)` (a block outside `ψ`, wrong block multiset, or unequal signs
/// on equal blocks).
fn distinct_signs(c: &PacketCharacter, g: &ComponentGroup) -> Option<Vec<i8>> {
    if c.blocks.len() != c.signs.len() {
        return None;
    }
    let mut signs: Vec<Option<i8>> = vec![None; g.distinct_blocks.len()];
    let mut counts = vec![0u32; g.distinct_blocks.len()];
    for (b, &s) in c.blocks.iter().zip(&c.signs) {
        let i = g.index_of(b)?;
        counts[i] += 1;
        match signs[i] {
            Some(t) if t != s => return None,
            _ => signs[i] = Some(s),
        }
    }
    if counts != g.multiplicities {
        return None;
    }
    signs.into_iter().collect()
}

/// Whether two sign vectors define the same character of `A(ψ)`.
pub fn char_equivalent(c1: &PacketCharacter, c2: &PacketCharacter, psi: &ArthurParameter) -> Result<bool> {
    let g = component_group(psi);
    let bad = |c: &PacketCharacter| Error::Precondition(format!("{c} is not a character of A({psi})"));
    let s1 = distinct_signs(c1, &g).ok_or_else(|| bad(c1))?;
    let s2 = distinct_signs(c2, &g).ok_or_else(|| bad(c2))?;
    if s1 == s2 {
        return Ok(true);
    }
    let w = g.relation();
    if w.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    Ok(s1.iter().zip(&s2).zip(&w).all(|((a, b), &wi)| if wi == 1 { a == &-b } else { a == b }))
}

/// Two sign vectors on the same listed blocks agree: identical, or
/// equivalent characters of `A(ψ)`. Vectors that are not characters (unequal
/// signs on equal blocks) agree only when identical.
pub fn signs_agree(c1: &PacketCharacter, c2: &PacketCharacter, psi: &ArthurParameter) -> bool {
    if c1.blocks == c2.blocks && c1.signs == c2.signs {
        return true;
    }
    char_equivalent(c1, c2, psi).unwrap_or(false)
}

/// Which of the two anisotropic orthogonal groups the module comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// `O(2m, 0)`: lowest weight modules `π_n(m)^*`, `σ_{n,m}^*`.
    #[serde(rename = "O(2m,0)")]
    Positive,
    /// `O(0, 2m)`: highest weight modules `π_n(m)`, `σ_{n,m}`.
    #[serde(rename = "O(0,2m)")]
    Negative,
}

/// Signs of a theta-lifted character on `(R[1], R[2m−1], R[2(n−m)+1])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaSigns {
    Signs([i8; 3]),
    /// `n = 2m − 1`, `τ = 1`, `τ′ = 0`: two equal blocks would receive
    /// different signs; the lift of `det` vanishes in this rank.
    Vanishing,
    /// The formula puts different signs on equal blocks but the lift does
    /// not vanish (only `n = m = 1`, `τ′ = 1`, `τ = 0` on `O(0,2)`); the
    /// triple is reported verbatim and does not define a character.
    Degenerate([i8; 3]),
}

fn check_delta(delta: i8) -> Result<()> {
    if delta == 1 || delta == -1 {
        Ok(())
    } else {
        Err(Error::OutOfRange { what: "δ", detail: format!("must be ±1, got {delta}") })
    }
}

/// `ρ_π` for the lift of `det^τ` from `O(2m,0)` (or `O(0,2m)`), on the
/// parameter `sgn^{τ′} ⊠ R[1] ⊕ sgn^{τ′+m} ⊠ R[2m−1] ⊕ sgn^m ⊠ R[2(n−m)+1]`:
/// `((−1)^{τ+τ′c}, (−1)^{τ+τ′c+f}, (−1)^f)` with `c = (1+δ)/2 + m` and
/// `f = ⌊δm/2⌋` (resp. `⌊−δm/2⌋`).
pub fn rho_theta(n: usize, m: i64, tau_prime: u8, tau: u8, delta: i8, side: Side) -> Result<ThetaSigns> {
    check_delta(delta)?;
    if m < 1 || tau > 1 || tau_prime > 1 {
        return Err(Error::OutOfRange { what: "rho_theta input", detail: format!("m={m}, τ={tau}, τ′={tau_prime}") });
    }
    let (ni, t, tp, d) = (n as i64, tau as i64, tau_prime as i64, delta as i64);
    if ni < 2 * m - 1 + t {
        if ni == 2 * m - 1 && t == 1 && tp == 0 {
            return Ok(ThetaSigns::Vanishing);
        }
        return Err(Error::Precondition(format!("need n ≥ 2m − 1 + τ, got n={n}, m={m}, τ={tau}")));
    }
    let f = match side {
        Side::Positive => floor_div(d * m, 2),
        Side::Negative => floor_div(-d * m, 2),
    };
    let c = (1 + d) / 2 + m;
    let e = t + tp * c;
    let s = [neg_one_pow(e), neg_one_pow(e + f), neg_one_pow(f)];
    let blocks = table_blocks(if tp == 0 { Form::First } else { Form::Second }, n, m)?;
    let consistent = (0..3).all(|i| (0..3).all(|j| blocks[i] != blocks[j] || s[i] == s[j]));
    Ok(if consistent { ThetaSigns::Signs(s) } else { ThetaSigns::Degenerate(s) })
}

/// The two unipotent parameters of the tabulated characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// `triv ⊠ R[1] ⊕ sgn^m ⊠ R[2m−1] ⊕ sgn^m ⊠ R[2(n−m)+1]`
    First,
    /// `sgn ⊠ R[1] ⊕ sgn^{m+1} ⊠ R[2m−1] ⊕ sgn^m ⊠ R[2(n−m)+1]`
    Second,
}

impl Form {
    pub fn tau_prime(self) -> u8 {
        match self {
            Form::First => 0,
            Form::Second => 1,
        }
    }
}

/// Which module of the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Column {
    #[serde(rename = "pi")]
    Pi,
    #[serde(rename = "sigma")]
    Sigma,
    #[serde(rename = "pi*")]
    PiStar,
    #[serde(rename = "sigma*")]
    SigmaStar,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::Pi, Column::Sigma, Column::PiStar, Column::SigmaStar];

    /// `(τ, side)` of the theta lift producing this module.
    pub fn theta_data(self) -> (u8, Side) {
        match self {
            Column::Pi => (0, Side::Negative),
            Column::Sigma => (1, Side::Negative),
            Column::PiStar => (0, Side::Positive),
            Column::SigmaStar => (1, Side::Positive),
        }
    }
}

/// The unipotent parameter of a table form (blocks canonicalized).
pub fn table_parameter(form: Form, n: usize, m: i64) -> Result<ArthurParameter> {
    let blocks = table_blocks(form, n, m)?;
    ArthurParameter::new(n, blocks.to_vec(), vec![])
}

/// `(η_1 ⊠ R[1], η_2 ⊠ R[2m−1], sgn^m ⊠ R[2(n−m)+1])` in this order.
fn table_blocks(form: Form, n: usize, m: i64) -> Result<[UnipotentBlock; 3]> {
    if m < 1 || 2 * m - 1 > n as i64 {
        return Err(Error::OutOfRange { what: "m", detail: format!("need 1 ≤ m and 2m − 1 ≤ n = {n}, got {m}") });
    }
    let tp = form.tau_prime() as i64;
    Ok([
        UnipotentBlock::sgn_pow(tp, 1),
        UnipotentBlock::sgn_pow(tp + m, (2 * m - 1) as u32),
        UnipotentBlock::sgn_pow(m, (2 * (n as i64 - m) + 1) as u32),
    ])
}

/// The tabulated character, verbatim, on `(R[1], R[2m−1], R[2(n−m)+1])`.
/// The `σ` columns need `n ≥ 2m`.
pub fn rho_unipotent_table(form: Form, n: usize, m: i64, which: Column, delta: i8) -> Result<PacketCharacter> {
    check_delta(delta)?;
    let blocks = table_blocks(form, n, m)?;
    if matches!(which, Column::Sigma | Column::SigmaStar) && (n as i64) < 2 * m {
        return Err(Error::Precondition(format!("σ_{{n,m}} needs n ≥ 2m, got n={n}, m={m}")));
    }
    let d = delta as i64;
    let g = floor_div(d * m, 2);
    let gm = floor_div(-d * m, 2);
    let c = (1 + d) / 2 + m;
    let e: [i64; 3] = match (form, which) {
        (Form::First, Column::Pi) => [0, gm, gm],
        (Form::First, Column::Sigma) => [0, 1 + gm, gm],
        (Form::First, Column::PiStar) => [0, g, g],
        (Form::First, Column::SigmaStar) => [0, 1 + g, g],
        (Form::Second, Column::Pi) => [c, c + gm, gm],
        (Form::Second, Column::Sigma) => [1 + c, 1 + c + gm, gm],
        (Form::Second, Column::PiStar) => [c, c + g, g],
        (Form::Second, Column::SigmaStar) => [1 + c, 1 + c + g, g],
    };
    Ok(PacketCharacter {
        whittaker: delta,
        blocks: blocks.iter().map(|&b| Block::Unipotent(b)).collect(),
        signs: e.iter().map(|&x| neg_one_pow(x)).collect(),
    })
}

/// [`rho_theta`] as a sign vector on the table parameter of the same form;
/// `None` when the lift vanishes.
pub fn rho_theta_character(form: Form, n: usize, m: i64, which: Column, delta: i8) -> Result<Option<PacketCharacter>> {
    let (tau, side) = which.theta_data();
    let blocks = table_blocks(form, n, m)?;
    match rho_theta(n, m, form.tau_prime(), tau, delta, side)? {
        ThetaSigns::Vanishing => Ok(None),
        ThetaSigns::Signs(s) | ThetaSigns::Degenerate(s) => Ok(Some(PacketCharacter {
            whittaker: delta,
            blocks: blocks.iter().map(|&b| Block::Unipotent(b)).collect(),
            signs: s.to_vec(),
        })),
    }
}

/// Which of the two unipotent blocks of dimension one plays the role of
/// `η_1 ⊠ R[1]` when both have dimension one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Roles {
    /// The later block in canonical order is `η_1`.
    #[default]
    Canonical,
    /// Swap `η_1` and `η_2` (only meaningful when `a = 1`).
    Swapped,
}

/// The pairwise relations on a three-block unipotent part.
struct Triple {
    eta1: UnipotentBlock,
    eta2: UnipotentBlock,
    big: UnipotentBlock,
    a: i64,
}

fn split_unipotent(psi: &ArthurParameter, big: UnipotentBlock, roles: Roles) -> Result<Triple> {
    let mut rest = psi.unipotent.clone();
    let i = rest
        .iter()
        .position(|b| *b == big)
        .ok_or_else(|| Error::Precondition(format!("{psi} lacks the block {big}")))?;
    rest.remove(i);
    if rest.len() != 2 || rest[1].dim != 1 {
        return Err(Error::Precondition(format!("unipotent part of {psi} is not big ⊕ η_2⊠R[2a−1] ⊕ η_1⊠R[1]")));
    }
    let (mut eta1, mut eta2) = (rest[1], rest[0]);
    if roles == Roles::Swapped {
        if eta2.dim != 1 {
            return Err(Error::Precondition("roles can only be swapped when a = 1".into()));
        }
        std::mem::swap(&mut eta1, &mut eta2);
    }
    Ok(Triple { eta1, eta2, big, a: (eta2.dim as i64 + 1) / 2 })
}

/// Discrete-block signs `(−1)^{⌊δ_i a_i/2⌋}` with `δ_i = δ(−1)^{a_{<i}}`,
/// and `δ′ = δ(−1)^{Σ a_i}`.
fn discrete_signs(psi: &ArthurParameter, delta: i64) -> (Vec<i8>, i64) {
    let mut before = 0i64;
    let mut out = Vec::with_capacity(psi.discrete.len());
    for d in &psi.discrete {
        let di = delta * neg_one_pow(before) as i64;
        out.push(neg_one_pow(floor_div(di * d.a as i64, 2)));
        before += d.a as i64;
    }
    (out, delta * neg_one_pow(before) as i64)
}

/// Assembles a representative from the discrete signs and, for three
/// unipotent blocks, `ε_1ε_2` and `ε_2ε_3`. The free global sign is fixed
/// so that the product over all listed blocks is `+1`.
fn assemble(
    psi: &ArthurParameter,
    delta: i8,
    disc: Vec<i8>,
    unip: Option<(&Triple, i8, i8)>,
) -> Result<PacketCharacter> {
    let dprod: i8 = disc.iter().product();
    let mut blocks: Vec<Block> = psi.discrete.iter().map(|&d| Block::Discrete(d)).collect();
    let mut signs = disc;
    match unip {
        None => {
            let [u] = psi.unipotent[..] else {
                return Err(Error::Precondition(format!("unipotent part of {psi} is not irreducible")));
            };
            blocks.push(Block::Unipotent(u));
            signs.push(dprod);
        }
        Some((t, e12, e23)) => {
            let e1 = e23 * dprod;
            let e2 = e12 * e1;
            let e3 = e23 * e2;
            blocks.extend([t.eta1, t.eta2, t.big].map(Block::Unipotent));
            signs.extend([e1, e2, e3]);
        }
    }
    let c = PacketCharacter { whittaker: delta, blocks, signs };
    if !c.is_constant_on_equal_blocks() {
        return Err(Error::Precondition(format!("formulas give unequal signs on equal blocks: {c}")));
    }
    Ok(c)
}

/// The character of `A(ψ)` given by the general formulas for a packet
/// containing `π_n(m)`. As printed, these formulas describe `ρ_{π_n(m)^*}`;
/// on unipotent parameters they reproduce the `π*` column of the table.
pub fn rho_pi_general(psi: &ArthurParameter, n: usize, m: i64, delta: i8) -> Result<PacketCharacter> {
    rho_pi_general_roles(psi, n, m, delta, Roles::Canonical)
}

/// [`rho_pi_general`] with an explicit role assignment for the two small
/// unipotent blocks.
pub fn rho_pi_general_roles(psi: &ArthurParameter, n: usize, m: i64, delta: i8, roles: Roles) -> Result<PacketCharacter> {
    check_delta(delta)?;
    let verdict = decide_pi(psi, n, m)?;
    if !verdict.member {
        return Err(Error::Precondition(format!("π_{n}({m}) is not in the packet of {psi}")));
    }
    let (disc, dprime) = discrete_signs(psi, delta as i64);
    if psi.unipotent.len() == 1 {
        return assemble(psi, delta, disc, None);
    }
    let ni = n as i64;
    let (big, case3) = match verdict.route {
        Some(Route::Thm71IIA1) => (UnipotentBlock::sgn_pow(m, (2 * (ni - m) + 1) as u32), false),
        Some(Route::Thm71IIA3) => (UnipotentBlock::sgn_pow(m - 1, (2 * (ni - m) + 3) as u32), true),
        r => return Err(Error::Precondition(format!("unexpected route {r:?} with reducible unipotent part"))),
    };
    let t = split_unipotent(psi, big, roles)?;
    let e12 = neg_one_pow(floor_div(dprime * t.a, 2));
    let eta2 = t.eta2.character;
    let e23 = if !case3 {
        if eta2 == Char::sgn_pow(m) {
            1
        } else {
            (dprime * neg_one_pow(t.a + 1) as i64) as i8
        }
    } else if eta2 == Char::sgn_pow(m - 1) {
        -1
    } else {
        (dprime * neg_one_pow(t.a) as i64) as i8
    };
    assemble(psi, delta, disc, Some((&t, e12, e23)))
}

/// `ρ_{σ_{n,k}^*}` for a packet containing `σ_{n,k}`. For `n = 2k` without
/// the block `sgn^k ⊠ R[2k+1]` this is `ρ_{π_{2k}(k+1)^*}`.
pub fn rho_sigma_general(psi: &ArthurParameter, n: usize, k: i64, delta: i8) -> Result<PacketCharacter> {
    check_delta(delta)?;
    if !decide_sigma(psi, n, k)?.member {
        return Err(Error::Precondition(format!("σ_{{{n},{k}}} is not in the packet of {psi}")));
    }
    let big = UnipotentBlock::sgn_pow(k, (2 * (n as i64 - k) + 1) as u32);
    if !psi.contains_unipotent(&big) {
        return rho_pi_general(psi, n, k + 1, delta);
    }
    let (disc, dprime) = discrete_signs(psi, delta as i64);
    if psi.unipotent.len() == 1 {
        return assemble(psi, delta, disc, None);
    }
    let t = split_unipotent(psi, big, Roles::Canonical)?;
    let e12 = neg_one_pow(floor_div(dprime * t.a, 2));
    let e23 = if t.eta2.character == Char::sgn_pow(k) { -1 } else { delta * neg_one_pow(k) };
    assemble(psi, delta, disc, Some((&t, e12, e23)))
}

/// Module whose character is requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Module {
    Pi,
    Sigma,
}

/// A tabulated row a computed character was compared against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub form: Form,
    pub column: Column,
    pub n: usize,
    /// the table's `m`
    pub m: i64,
    pub table: PacketCharacter,
    pub agrees: bool,
}

/// The table row a computed character should reproduce, if `ψ` is one of
/// the tabulated unipotent parameters: `π*` for `π_n(m)` via the
/// `sgn^m ⊠ R[2(n−m)+1]` block, `σ*` at `(n, m−1)` for `π_n(m)` via
/// `sgn^{m−1} ⊠ R[2(n−m)+3]`, and `σ*` for `σ_{n,k}`.
pub fn table_row_for(psi: &ArthurParameter, n: usize, module: Module, index: i64) -> Option<(Form, Column, i64)> {
    if !psi.discrete.is_empty() || psi.unipotent.len() != 3 {
        return None;
    }
    let candidates: &[(Column, i64)] = match module {
        Module::Pi => &[(Column::PiStar, index), (Column::SigmaStar, index - 1)],
        Module::Sigma => &[(Column::SigmaStar, index)],
    };
    for &(col, m) in candidates {
        for form in [Form::First, Form::Second] {
            if let Ok(p) = table_parameter(form, n, m) {
                let sigma_ok = col != Column::SigmaStar || n as i64 >= 2 * m;
                if p == *psi && sigma_ok {
                    return Some((form, col, m));
                }
            }
        }
    }
    None
}

/// Compares a computed character of a unipotent parameter with the
/// corresponding tabulated row.
pub fn cross_check_table(
    psi: &ArthurParameter,
    n: usize,
    module: Module,
    index: i64,
    computed: &PacketCharacter,
) -> Result<Option<TableComparison>> {
    let Some((form, column, m)) = table_row_for(psi, n, module, index) else {
        return Ok(None);
    };
    let table = rho_unipotent_table(form, n, m, column, computed.whittaker)?;
    let agrees = signs_agree(computed, &table, psi);
    Ok(Some(TableComparison { form, column, n, m, table, agrees }))
}

/// Rows of the table known to disagree with the theta-lift formula: the
/// `σ` and `σ*` rows of the first form (first component and listed product).
pub fn is_documented_discrepancy(form: Form, column: Column) -> bool {
    form == Form::First && matches!(column, Column::Sigma | Column::SigmaStar)
}
