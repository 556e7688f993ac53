//! Langlands data of `π_n(m)` and `σ_{n,k}`: the characters
//! `sgn^e |·|^s` on the `GL(1,ℝ)` factors of the standard module, and the
//! tempered module on the `Sp` factor it is induced from.
//!
//! The largest exponent bounds `a(ψ)` for any packet containing the module,
//! which gives a cheap necessary condition.
//!
//! ```
//! use hwpack::langlands_data::{standard_sigma, max_exponent};
//! let sm = standard_sigma(5, 2).unwrap();
//! assert_eq!(sm.exponents(), vec![3, 1]);
//! assert_eq!(max_exponent(&sm), 3);
//! assert_eq!(sm.base.to_string(), "π_3(3)");
//! ```

use crate::arthur_params::{ArthurParameter, UnipotentBlock};
use crate::error::{Error, Result};
use crate::sign::Char;
use serde::{Deserialize, Serialize};
use std::fmt;

/// One `GL(1,ℝ)` character `x ↦ sgn(x)^e |x|^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gl1Exponent {
    pub character: Char,
    pub exponent: i64,
}

/// The tempered module `π_r(r)` on the `Sp(2r,ℝ)` factor, kept as a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TemperedAnchor {
    pub rank: usize,
}

impl fmt::Display for TemperedAnchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "π_{0}({0})", self.rank)
    }
}

/// Which module the standard module belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "module", rename_all = "lowercase")]
pub enum Target {
    Pi { n: usize, m: i64 },
    Sigma { n: usize, k: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardModule {
    pub target: Target,
    /// Strictly decreasing exponents.
    pub gl1: Vec<Gl1Exponent>,
    pub base: TemperedAnchor,
}

impl StandardModule {
    pub fn exponents(&self) -> Vec<i64> {
        self.gl1.iter().map(|g| g.exponent).collect()
    }
}

impl fmt::Display for StandardModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ind(")?;
        for g in &self.gl1 {
            let c = match g.character {
                Char::Triv => "",
                Char::Sgn => "sgn",
            };
            write!(f, "{c}|·|^{} ⊠ ", g.exponent)?;
        }
        write!(f, "{})", self.base)
    }
}

fn gl1(character: Char, exps: impl Iterator<Item = i64>) -> Vec<Gl1Exponent> {
    exps.map(|exponent| Gl1Exponent { character, exponent }).collect()
}

/// `π_n(m)` is the Langlands quotient of
/// `Ind(sgn^m|·|^{n−m} ⊠ … ⊠ sgn^m|·| ⊠ π_m(m))`.
///
/// `m = n` is allowed and gives the tempered module itself.
pub fn standard_pi(n: usize, m: i64) -> Result<StandardModule> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if m < 1 || m > n as i64 {
        return Err(Error::OutOfRange { what: "m", detail: format!("need 1 ≤ m ≤ n = {n}, got {m}") });
    }
    Ok(StandardModule {
        target: Target::Pi { n, m },
        gl1: gl1(Char::sgn_pow(m), (1..=n as i64 - m).rev()),
        base: TemperedAnchor { rank: m as usize },
    })
}

/// `σ_{n,k}` is the Langlands quotient of
/// `Ind(sgn^k|·|^{n−k} ⊠ … ⊠ sgn^k|·|^{k+1} ⊠ sgn^k|·|^{k−1} ⊠ … ⊠ sgn^k|·| ⊠ π_{k+1}(k+1))`.
pub fn standard_sigma(n: usize, k: i64) -> Result<StandardModule> {
    if k < 1 || 2 * k > n as i64 {
        return Err(Error::OutOfRange { what: "k", detail: format!("need 2 ≤ 2k ≤ n = {n}, got k = {k}") });
    }
    let exps = (k + 1..=n as i64 - k).rev().chain((1..k).rev());
    Ok(StandardModule {
        target: Target::Sigma { n, k },
        gl1: gl1(Char::sgn_pow(k), exps),
        base: TemperedAnchor { rank: k as usize + 1 },
    })
}

/// Largest exponent, `0` for a tempered module.
pub fn max_exponent(sm: &StandardModule) -> i64 {
    sm.gl1.first().map_or(0, |g| g.exponent)
}

/// `(a(ψ) − 1)/2 ≥ max_exponent`, i.e. `a(ψ) ≥ 2e + 1`.
///
/// For `π_n(m)` with `m < n` the inequality is strict when `a(ψ) > a(ψ_u)`
/// or when `ψ` lacks the block `sgn^m ⊠ R[2(n−m)+1]`.
pub fn cor93_filter(psi: &ArthurParameter, sm: &StandardModule) -> bool {
    let e = max_exponent(sm);
    if e == 0 {
        return true;
    }
    let bound = 2 * e + 1;
    let a = psi.a_psi() as i64;
    let strict = match sm.target {
        Target::Pi { m, .. } => {
            a > psi.a_psi_u() as i64 || !psi.contains_unipotent(&UnipotentBlock::sgn_pow(m, bound as u32))
        }
        Target::Sigma { .. } => false,
    };
    if strict {
        a > bound
    } else {
        a >= bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arthur_params::DiscreteBlock;

    #[test]
    fn pi_examples() {
        let sm = standard_pi(3, 2).unwrap();
        assert_eq!(sm.exponents(), vec![1]);
        assert_eq!(sm.gl1[0].character, Char::Triv);
        assert_eq!(sm.base.rank, 2);
        let sm = standard_pi(4, 1).unwrap();
        assert_eq!(sm.exponents(), vec![3, 2, 1]);
        assert!(sm.gl1.iter().all(|g| g.character == Char::Sgn));
        assert_eq!(max_exponent(&standard_pi(5, 5).unwrap()), 0);
        assert!(standard_pi(3, 0).is_err());
        assert!(standard_pi(3, 4).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(standard_sigma(3, 1).unwrap().exponents(), vec![2]);
        assert_eq!(standard_sigma(6, 3).unwrap().exponents(), vec![2, 1]);
        assert_eq!(standard_sigma(7, 2).unwrap().exponents(), vec![5, 4, 3, 1]);
        assert!(standard_sigma(3, 2).is_err());
        assert!(standard_sigma(4, 0).is_err());
    }

    #[test]
    fn filter_needs_a_long_block() {
        let sm = standard_sigma(5, 2).unwrap();
        let short = ArthurParameter::new(
            5,
            vec![UnipotentBlock::new(Char::Sgn, 5)],
            vec![DiscreteBlock::new(6, 1), DiscreteBlock::new(4, 1), DiscreteBlock::new(2, 1)],
        )
        .unwrap();
        assert!(!cor93_filter(&short, &sm));
        let long = ArthurParameter::new(5, vec![UnipotentBlock::new(Char::Triv, 7)], vec![DiscreteBlock::new(1, 2)]).unwrap();
        assert!(cor93_filter(&long, &sm));
        // ψ = δ_t ⊠ R[n] ⊕ sgn ⊠ R[1] is rejected for π_n(m) when n < 2(n−m)+1.
        let psi = ArthurParameter::new(3, vec![UnipotentBlock::new(Char::Sgn, 1)], vec![DiscreteBlock::new(2, 3)]).unwrap();
        assert!(!cor93_filter(&psi, &standard_pi(3, 1).unwrap()));
    }

    #[test]
    fn display() {
        assert_eq!(standard_pi(3, 1).unwrap().to_string(), "Ind(sgn|·|^2 ⊠ sgn|·|^1 ⊠ π_1(1))");
    }
}
