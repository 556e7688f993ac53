//! Which Arthur packets contain `π_n(m)`, `σ_{n,k}` and the regular-case
//! modules `π_a`, together with a recursive block-peeling decider used to
//! cross-check the closed form.
//!
//! ```
//! use hwpack::arthur_params::{ArthurParameter, UnipotentBlock};
//! use hwpack::membership::{decide_pi, Route};
//! use hwpack::sign::Char::{Sgn, Triv};
//!
//! let psi = ArthurParameter::new(
//!     2,
//!     vec![UnipotentBlock::new(Sgn, 3), UnipotentBlock::new(Triv, 1), UnipotentBlock::new(Sgn, 1)],
//!     vec![],
//! )
//! .unwrap();
//! let v = decide_pi(&psi, 2, 1).unwrap();
//! assert!(v.member);
//! assert_eq!(v.route, Some(Route::Thm71IIA1));
//! ```

use crate::arthur_params::{enumerate_params, ArthurParameter, UnipotentBlock};
use crate::error::{Error, Result};
use crate::weights::{regular_a_max, InfinitesimalCharacter};
use serde::Serialize;

/// Which clause established membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    #[serde(rename = "THM71_I")]
    Thm71I,
    #[serde(rename = "THM71_II_A1")]
    Thm71IIA1,
    #[serde(rename = "THM71_II_A3")]
    Thm71IIA3,
    #[serde(rename = "UNIPOTENT")]
    Unipotent,
    #[serde(rename = "TRIVIAL")]
    Trivial,
    #[serde(rename = "REGULAR")]
    Regular,
    #[serde(rename = "SIGMA")]
    Sigma,
}

impl Route {
    pub fn tag(&self) -> &'static str {
        match self {
            Route::Thm71I => "THM71_I",
            Route::Thm71IIA1 => "THM71_II_A1",
            Route::Thm71IIA3 => "THM71_II_A3",
            Route::Unipotent => "UNIPOTENT",
            Route::Trivial => "TRIVIAL",
            Route::Regular => "REGULAR",
            Route::Sigma => "SIGMA",
        }
    }
}

/// Membership answer. Members always occur with multiplicity one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipVerdict {
    pub member: bool,
    pub route: Option<Route>,
    pub multiplicity: u32,
}

impl MembershipVerdict {
    pub fn yes(route: Route) -> Self {
        MembershipVerdict { member: true, route: Some(route), multiplicity: 1 }
    }

    pub fn no() -> Self {
        MembershipVerdict { member: false, route: None, multiplicity: 0 }
    }
}

/// Infinitesimal character `{m−1, …, m−n} ∪ negatives ∪ {0}` of `π_n(m)`;
/// defined for `n = 0` too.
pub fn pi_inf_char(n: usize, m: i64) -> InfinitesimalCharacter {
    let half: Vec<i64> = (1..=n as i64).map(|i| m - i).collect();
    InfinitesimalCharacter::from_half(&half)
}

/// Infinitesimal character of `σ_{n,k}` (equal to that of `π_n(k)`).
pub fn sigma_inf_char(n: usize, k: i64) -> InfinitesimalCharacter {
    pi_inf_char(n, k)
}

fn check_param(psi: &ArthurParameter, n: usize) -> Result<()> {
    psi.validate().map_err(Error::InvalidParameter)?;
    if psi.n != n {
        return Err(Error::Precondition(format!("parameter has rank {}, expected {n}", psi.n)));
    }
    Ok(())
}

fn check_m(n: usize, m: i64) -> Result<()> {
    if m < 0 || m > n as i64 {
        return Err(Error::OutOfRange { what: "m", detail: format!("need 0 ≤ m ≤ n = {n}, got {m}") });
    }
    Ok(())
}

/// Positive-side segments of the discrete blocks are pairwise disjoint.
pub fn segments_disjoint(psi: &ArthurParameter) -> bool {
    let mut segs: Vec<(i64, i64)> = psi.discrete.iter().map(|d| (d.lo(), d.hi())).collect();
    segs.sort();
    segs.windows(2).all(|w| w[0].1 < w[1].0)
}

fn has_big_block(psi: &ArthurParameter, exp: i64, dim: i64) -> bool {
    dim >= 1
        && psi.a_psi_u() as i64 == dim
        && psi.contains_unipotent(&UnipotentBlock::sgn_pow(exp, dim as u32))
}

/// Is `π_n(m)` in `Π(ψ)`? Clauses are tried in the order trivial, (i),
/// (ii) with `a(ψ_u) = 2(n−m)+1`, (ii) with `a(ψ_u) = 2(n−m)+3`.
pub fn decide_pi(psi: &ArthurParameter, n: usize, m: i64) -> Result<MembershipVerdict> {
    check_param(psi, n)?;
    check_m(n, m)?;
    Ok(decide_pi_unchecked(psi, n, m))
}

fn decide_pi_unchecked(psi: &ArthurParameter, n: usize, m: i64) -> MembershipVerdict {
    if psi.inf_char() != pi_inf_char(n, m) {
        return MembershipVerdict::no();
    }
    let ni = n as i64;
    if m == 0 && *psi == ArthurParameter::trivial(n) {
        return MembershipVerdict::yes(Route::Trivial);
    }
    if psi.dim_unipotent() == 1 && 2 * m > ni + 1 && segments_disjoint(psi) {
        return MembershipVerdict::yes(Route::Thm71I);
    }
    if has_big_block(psi, m, 2 * (ni - m) + 1) {
        return MembershipVerdict::yes(Route::Thm71IIA1);
    }
    if 2 * m >= ni + 2 && has_big_block(psi, m - 1, 2 * (ni - m) + 3) {
        return MembershipVerdict::yes(Route::Thm71IIA3);
    }
    MembershipVerdict::no()
}

/// Is `σ_{n,k}` in `Π(ψ)`? For `n = 2k` this is `π_{2k}(k+1)`.
pub fn decide_sigma(psi: &ArthurParameter, n: usize, k: i64) -> Result<MembershipVerdict> {
    check_param(psi, n)?;
    if k < 1 || 2 * k > n as i64 {
        return Err(Error::OutOfRange { what: "k", detail: format!("need 2 ≤ 2k ≤ n = {n}, got k = {k}") });
    }
    if 2 * k == n as i64 {
        return Ok(decide_pi_unchecked(psi, n, k + 1));
    }
    let dim = 2 * (n as i64 - k) + 1;
    if psi.inf_char() == sigma_inf_char(n, k) && has_big_block(psi, k, dim) {
        Ok(MembershipVerdict::yes(Route::Sigma))
    } else {
        Ok(MembershipVerdict::no())
    }
}

/// Regular infinitesimal character: `π_a ∈ Π(ψ)` iff the unique unipotent
/// block has dimension `2a + 1`.
pub fn decide_regular(psi: &ArthurParameter, a: usize) -> Result<bool> {
    psi.validate().map_err(Error::InvalidParameter)?;
    let chi = psi.inf_char();
    let a_max = regular_a_max(&chi)?;
    if a > a_max {
        return Err(Error::OutOfRange { what: "a", detail: format!("{a} exceeds a_max = {a_max}") });
    }
    Ok(psi.unipotent.len() == 1 && psi.unipotent[0].dim as usize == 2 * a + 1)
}

/// A module reported by [`decide_unipotent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "module", content = "index", rename_all = "lowercase")]
pub enum UnipotentMember {
    /// `π_n(m)`
    Pi(i64),
    /// `σ_{n,k}`
    Sigma(i64),
}

/// Modules among `π_n(m)`, `σ_{n,k}` lying in the packet of a parameter
/// with no discrete part. Irreducible `ψ_u` gives the trivial
/// representation; `ψ_u` with dimensions `a ≥ b ≥ 1` gives `π_n((b+1)/2)`
/// (and `σ_{n,(b+1)/2}` when `b + 1 ≤ n`) provided a block of dimension `a`
/// carries `sgn^{(b+1)/2}`.
pub fn decide_unipotent(psi: &ArthurParameter, n: usize) -> Result<Vec<UnipotentMember>> {
    psi.validate().map_err(Error::InvalidParameter)?;
    if psi.n != n {
        return Err(Error::Precondition(format!("parameter has rank {}, expected {n}", psi.n)));
    }
    if !psi.discrete.is_empty() {
        return Err(Error::Precondition("parameter has a discrete part".into()));
    }
    Ok(unipotent_members(psi))
}

fn unipotent_members(psi: &ArthurParameter) -> Vec<UnipotentMember> {
    let u = &psi.unipotent;
    match u.len() {
        1 => vec![UnipotentMember::Pi(0)],
        3 => {
            // canonical order sorts dimensions decreasingly
            let (a, b, c) = (u[0].dim, u[1].dim, u[2].dim);
            if c != 1 {
                return vec![];
            }
            let k = (b as i64 + 1) / 2;
            if !u.iter().any(|x| x.dim == a && x.character == crate::sign::Char::sgn_pow(k)) {
                return vec![];
            }
            let mut out = vec![UnipotentMember::Pi(k)];
            if b as usize + 1 <= psi.n {
                out.push(UnipotentMember::Sigma(k));
            }
            out
        }
        _ => vec![],
    }
}

/// Result of one peeling step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Peel {
    /// No discrete block reaches `m − 1` with `t − a + 1 ≥ 0`.
    None,
    /// The first such block ends beyond `m − 1`: `π_n(m)` cannot be in the packet.
    Reject { j0: usize },
    /// The first such block ends exactly at `m − 1`.
    Peeled { j0: usize, psi: ArthurParameter, n: usize, m: i64 },
}

/// Locates the first discrete block (in canonical order) with
/// `(t+a−1)/2 ≥ m−1` and `t−a+1 ≥ 0`, and removes it when it ends at `m−1`.
pub fn peel_step(psi: &ArthurParameter, n: usize, m: i64) -> Result<Peel> {
    if psi.n != n {
        return Err(Error::Precondition(format!("parameter has rank {}, expected {n}", psi.n)));
    }
    let found = psi
        .discrete
        .iter()
        .position(|d| d.hi() >= m - 1 && d.t as i64 - d.a as i64 + 1 >= 0);
    let Some(j0) = found else {
        return Ok(Peel::None);
    };
    let d = psi.discrete[j0];
    if d.hi() > m - 1 {
        return Ok(Peel::Reject { j0 });
    }
    let next = psi.remove_block(j0)?;
    Ok(Peel::Peeled { j0, n: next.n, m: m - d.a as i64, psi: next })
}

/// Recursive decider: peel discrete blocks ending at `m − 1`, then settle
/// the remaining parameter by the unipotent rule or the `dim ψ_u = 1`
/// construction.
pub fn decide_pi_recursive(psi: &ArthurParameter, n: usize, m: i64) -> Result<bool> {
    check_param(psi, n)?;
    check_m(n, m)?;
    let mut psi = psi.clone();
    let (mut n, mut m) = (n, m);
    loop {
        if psi.inf_char() != pi_inf_char(n, m) {
            return Ok(false);
        }
        match peel_step(&psi, n, m)? {
            Peel::Reject { .. } => return Ok(false),
            Peel::Peeled { psi: p, n: n2, m: m2, .. } => {
                psi = p;
                n = n2;
                m = m2;
            }
            Peel::None => return Ok(recursive_base(&psi, n, m)),
        }
    }
}

fn recursive_base(psi: &ArthurParameter, n: usize, m: i64) -> bool {
    let ni = n as i64;
    if psi.discrete.is_empty() {
        let found = unipotent_members(psi);
        return found.contains(&UnipotentMember::Pi(m))
            || (2 * (m - 1) == ni && found.contains(&UnipotentMember::Sigma(m - 1)));
    }
    if psi.dim_unipotent() == 1 {
        let top = psi.discrete.iter().map(|d| d.hi()).max().expect("nonempty");
        return 2 * m > ni + 1 && segments_disjoint(psi) && top == m - 1;
    }
    // `σ_{2k,k} = π_{2k}(k+1)` seen through its big block `sgn^k ⊠ R[2k+1]`.
    ni == 2 * (m - 1) && has_big_block(psi, ni / 2, ni + 1)
}

/// Necessary condition `a(ψ) ≥ 2(n−m)+1` for `π_n(m) ∈ Π(ψ)`, strict when
/// `a(ψ) > a(ψ_u)` or the block `sgn^m ⊠ R[2(n−m)+1]` is missing. Vacuous
/// for `m = n`.
pub fn necessary_cor93(psi: &ArthurParameter, n: usize, m: i64) -> Result<bool> {
    check_param(psi, n)?;
    check_m(n, m)?;
    if m == n as i64 {
        return Ok(true);
    }
    let bound = 2 * (n as i64 - m) + 1;
    let a = psi.a_psi() as i64;
    let strict = a > psi.a_psi_u() as i64 || !psi.contains_unipotent(&UnipotentBlock::sgn_pow(m, bound as u32));
    Ok(if strict { a > bound } else { a >= bound })
}

/// A packet containing the module, with the verdict that put it there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PacketEntry {
    pub psi: ArthurParameter,
    pub verdict: MembershipVerdict,
}

/// All parameters whose packet contains `π_n(m)`.
pub fn enumerate_packets_pi(n: usize, m: i64) -> Result<Vec<PacketEntry>> {
    check_m(n, m)?;
    let mut out = Vec::new();
    for psi in enumerate_params(&pi_inf_char(n, m), n)? {
        let verdict = decide_pi_unchecked(&psi, n, m);
        if verdict.member {
            out.push(PacketEntry { psi, verdict });
        }
    }
    Ok(out)
}

/// All parameters whose packet contains `σ_{n,k}`.
pub fn enumerate_packets_sigma(n: usize, k: i64) -> Result<Vec<PacketEntry>> {
    if k < 1 || 2 * k > n as i64 {
        return Err(Error::OutOfRange { what: "k", detail: format!("need 2 ≤ 2k ≤ n = {n}, got k = {k}") });
    }
    let mut out = Vec::new();
    for psi in enumerate_params(&sigma_inf_char(n, k), n)? {
        let verdict = decide_sigma(&psi, n, k)?;
        if verdict.member {
            out.push(PacketEntry { psi, verdict });
        }
    }
    Ok(out)
}
