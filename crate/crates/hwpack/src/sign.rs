//! Quadratic characters of the real Weil group and ±1 bookkeeping.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

/// A quadratic character of `W_ℝ`: the trivial character or `sgn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Char {
    Triv,
    Sgn,
}

impl Char {
    /// `sgn^k`, with the exponent read mod 2 (negative exponents allowed).
    pub fn sgn_pow(k: i64) -> Char {
        if k.rem_euclid(2) == 0 {
            Char::Triv
        } else {
            Char::Sgn
        }
    }

    /// Exponent `e ∈ {0,1}` with `self = sgn^e`.
    pub fn exponent(self) -> i64 {
        match self {
            Char::Triv => 0,
            Char::Sgn => 1,
        }
    }

    /// `self ⊗ sgn^k`.
    pub fn twist(self, k: i64) -> Char {
        Char::sgn_pow(self.exponent() + k)
    }
}

impl Mul for Char {
    type Output = Char;
    fn mul(self, rhs: Char) -> Char {
        self.twist(rhs.exponent())
    }
}

impl fmt::Display for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Char::Triv => "triv",
            Char::Sgn => "sgn",
        })
    }
}

/// `(-1)^e` as an `i8`.
pub fn neg_one_pow(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Mathematical floor of `num / den` for `den > 0` (so `⌊-1/2⌋ = -1`).
pub fn floor_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    num.div_euclid(den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sgn_powers_reduce_mod_two() {
        assert_eq!(Char::sgn_pow(0), Char::Triv);
        assert_eq!(Char::sgn_pow(3), Char::Sgn);
        assert_eq!(Char::sgn_pow(-1), Char::Sgn);
        assert_eq!(Char::Sgn * Char::Sgn, Char::Triv);
        assert_eq!(Char::Triv.twist(5), Char::Sgn);
    }

    #[test]
    fn floors_round_toward_minus_infinity() {
        assert_eq!(floor_div(-1, 2), -1);
        assert_eq!(floor_div(-2, 2), -1);
        assert_eq!(floor_div(-3, 4), -1);
        assert_eq!(floor_div(3, 2), 1);
        assert_eq!(neg_one_pow(-1), -1);
        assert_eq!(neg_one_pow(-2), 1);
    }
}
