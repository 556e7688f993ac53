//! Normalized invariants of real quadratic forms and the characters of
//! `O(p,q)` together with the `U(n)`-types of their Howe lifts to
//! `Sp(2n,ℝ)`.
//!
//! ```
//! use hwpack::quadratic_invariants::{hasse_normalized, hasse_from_diagonal};
//!
//! assert_eq!(hasse_normalized(2, 0, 1), 1);
//! assert_eq!(hasse_normalized(2, 0, -1), -1);
//! assert_eq!(hasse_from_diagonal(&[-1, -1], 1), hasse_normalized(0, 2, 1));
//! ```

use crate::error::{Error, Result};
use crate::sign::{floor_div, neg_one_pow, Char};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Signature `(p, q)` of a nondegenerate real quadratic form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub p: u32,
    pub q: u32,
}

/// Hilbert symbol over `ℝ` on signs: `−1` iff both are negative.
pub fn hilbert_symbol_real(a: i8, b: i8) -> i8 {
    if a < 0 && b < 0 {
        -1
    } else {
        1
    }
}

/// Determinant class `D = (−1)^q`.
pub fn det_class(_p: u32, q: u32) -> i8 {
    neg_one_pow(q as i64)
}

/// Normalized discriminant: `(−1)^{(p−q)/2}`, or `(−1)^{(p−q−1)/2}` for odd
/// dimension.
pub fn discriminant(p: u32, q: u32) -> i8 {
    let d = p as i64 - q as i64;
    if d.rem_euclid(2) == 0 {
        neg_one_pow(d / 2)
    } else {
        neg_one_pow((d - 1) / 2)
    }
}

/// Normalized Hasse invariant `ε_δ`: `(−1)^{⌊δ(p−q)/4⌋}`, or
/// `(−1)^{⌊δ(p−q−1)/4⌋}` for odd dimension.
pub fn hasse_normalized(p: u32, q: u32, delta: i8) -> i8 {
    let d = p as i64 - q as i64;
    let e = if d.rem_euclid(2) == 0 { d } else { d - 1 };
    neg_one_pow(floor_div(delta as i64 * e, 4))
}

/// `ε_δ(Q) = (−δ, η(Q)) (−1, D)^{N(N−1)/2} (−1,−1)^{⌊(⌊N/2⌋+1)/2⌋} E(Q)` for
/// the diagonal form with the given signs, where `E(Q) = Π_{i<j} (a_i, a_j)`
/// and `η(Q) = (−1)^{N(N−1)/2} D`.
pub fn hasse_from_diagonal(diag: &[i8], delta: i8) -> i8 {
    let n = diag.len() as i64;
    let d: i8 = diag.iter().map(|&a| if a < 0 { -1 } else { 1 }).product();
    let binom = n * (n - 1) / 2;
    let eta = neg_one_pow(binom) * d;
    let mut e = 1i8;
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            e *= hilbert_symbol_real(diag[i], diag[j]);
        }
    }
    let t1 = hilbert_symbol_real(-delta, eta);
    let t2 = if binom % 2 == 1 { hilbert_symbol_real(-1, d) } else { 1 };
    let t3 = neg_one_pow((n / 2 + 1) / 2);
    t1 * t2 * t3 * e
}

/// The diagonal `(+1^p, −1^q)`.
pub fn signature_diagonal(p: u32, q: u32) -> Vec<i8> {
    std::iter::repeat(1).take(p as usize).chain(std::iter::repeat(-1).take(q as usize)).collect()
}

/// Adds a hyperbolic plane.
pub fn add_hyperbolic(p: u32, q: u32) -> (u32, u32) {
    (p + 1, q + 1)
}

/// A character `η_δ(Q) ⊗ det^τ` of `O(p,q)`; for `η = triv` the token `δ`
/// is irrelevant and kept at `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrthCharacter {
    pub eta: Char,
    pub delta: i8,
    pub tau: u8,
}

impl OrthCharacter {
    pub const TRIV: OrthCharacter = OrthCharacter { eta: Char::Triv, delta: 1, tau: 0 };
    pub const DET: OrthCharacter = OrthCharacter { eta: Char::Triv, delta: 1, tau: 1 };

    pub fn sgn(delta: i8, tau: u8) -> Self {
        OrthCharacter { eta: Char::Sgn, delta, tau }
    }

    /// `self ⊗ det`.
    pub fn times_det(self) -> Self {
        OrthCharacter { tau: 1 - self.tau, ..self }
    }

    /// Exponents `(x_p, x_q) ∈ {0,1}²` of the restriction
    /// `det^{x_p} ⊠ det^{x_q}` to `O(p,0) × O(0,q)`.
    pub fn restriction(&self, p: u32, q: u32) -> Result<(u8, u8)> {
        let d = p as i64 - q as i64;
        if d.rem_euclid(2) != 0 {
            return Err(Error::Precondition(format!("O({p},{q}) needs p + q even")));
        }
        let s = d / 2;
        let (xp, xq) = match self.eta {
            Char::Triv => (0, 0),
            // sgn_1 ↦ (s+1, s); sgn_{−1} = sgn_1 ⊗ det
            Char::Sgn => (s + 1 + i64::from(self.delta < 0), s + i64::from(self.delta < 0)),
        };
        let t = self.tau as i64;
        Ok(((xp + t).rem_euclid(2) as u8, (xq + t).rem_euclid(2) as u8))
    }
}

impl fmt::Display for OrthCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.eta, self.tau) {
            (Char::Triv, 0) => f.write_str("triv"),
            (Char::Triv, _) => f.write_str("det"),
            (Char::Sgn, t) => {
                write!(f, "sgn{}", self.delta)?;
                if t == 1 {
                    f.write_str("det")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for OrthCharacter {
    type Err = Error;
    /// `triv`, `det`, `sgn1`, `sgn-1`, `sgn1det`, `sgn-1det`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "triv" => OrthCharacter::TRIV,
            "det" => OrthCharacter::DET,
            "sgn1" | "sgn+1" => OrthCharacter::sgn(1, 0),
            "sgn-1" => OrthCharacter::sgn(-1, 0),
            "sgn1det" | "sgn+1det" => OrthCharacter::sgn(1, 1),
            "sgn-1det" => OrthCharacter::sgn(-1, 1),
            _ => return Err(Error::OutOfRange { what: "character", detail: s.to_string() }),
        })
    }
}

/// A distinct character of `O(p,q)` with its restriction exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrthCharacterInfo {
    pub character: OrthCharacter,
    pub restriction: (u8, u8),
}

/// The distinct characters of `O(p,q)`: four when `pq ≠ 0`, otherwise two.
/// Characters are identified by their restriction to the maximal compact
/// subgroup (only the exponent of a nonzero factor counts).
pub fn o_characters(p: u32, q: u32) -> Result<Vec<OrthCharacterInfo>> {
    let candidates = [
        OrthCharacter::TRIV,
        OrthCharacter::DET,
        OrthCharacter::sgn(1, 0),
        OrthCharacter::sgn(1, 1),
        OrthCharacter::sgn(-1, 0),
        OrthCharacter::sgn(-1, 1),
    ];
    let mut out: Vec<OrthCharacterInfo> = Vec::new();
    let key = |r: (u8, u8)| (if p > 0 { r.0 } else { 0 }, if q > 0 { r.1 } else { 0 });
    for c in candidates {
        let r = c.restriction(p, q)?;
        if !out.iter().any(|o| key(o.restriction) == key(r)) {
            out.push(OrthCharacterInfo { character: c, restriction: r });
        }
    }
    Ok(out)
}

/// First occurrence `n₀ = x_p·p + x_q·q`: the smallest rank with a nonzero
/// Howe lift.
pub fn first_occurrence(c: &OrthCharacter, p: u32, q: u32) -> Result<u32> {
    let (xp, xq) = c.restriction(p, q)?;
    Ok(xp as u32 * p + xq as u32 * q)
}

/// The distinguished `U(n)`-type of the lift,
/// `(p−q)/2 + (1^{x_p p}, 0^{n − x_p p − x_q q}, (−1)^{x_q q})`, or `None`
/// below the first occurrence.
pub fn howe_ktype(c: &OrthCharacter, p: u32, q: u32, n: usize) -> Result<Option<Vec<i64>>> {
    let (xp, xq) = c.restriction(p, q)?;
    let (a, b) = (xp as usize * p as usize, xq as usize * q as usize);
    if n < a + b {
        return Ok(None);
    }
    let s = (p as i64 - q as i64) / 2;
    let mut w = vec![s + 1; a];
    w.extend(std::iter::repeat(s).take(n - a - b));
    w.extend(std::iter::repeat(s - 1).take(b));
    Ok(Some(w))
}

/// `Σ |w_i − (p−q)/2|`.
pub fn howe_degree(weight: &[i64], p: u32, q: u32) -> Result<u64> {
    let d = p as i64 - q as i64;
    if d.rem_euclid(2) != 0 {
        return Err(Error::Precondition(format!("O({p},{q}) needs p + q even")));
    }
    Ok(weight.iter().map(|w| (w - d / 2).unsigned_abs()).sum())
}
