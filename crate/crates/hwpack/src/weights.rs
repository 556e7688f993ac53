//! Highest weights of holomorphic modules, their unitarity, infinitesimal
//! characters, and the compact orthogonal representation each unitary module
//! comes from under the Howe correspondence.
//!
//! A highest weight is recorded as `μ = (m_1 ≥ … ≥ m_n)`; the module `π(μ)`
//! itself has highest weight `(−m_n, …, −m_1)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Weakly decreasing integer `n`-tuple `(m_1, …, m_n)`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HighestWeight {
    entries: Vec<i64>,
}

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroRank);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(HighestWeight { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Last entry `m_n`.
    pub fn last(&self) -> i64 {
        self.entries[self.entries.len() - 1]
    }

    /// The extreme `U(n)`-type `(−m_n, …, −m_1)` of `π(μ)`.
    pub fn ktype(&self) -> Vec<i64> {
        self.entries.iter().rev().map(|m| -m).collect()
    }
}

impl TryFrom<Vec<i64>> for HighestWeight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        HighestWeight::new(v)
    }
}

impl From<HighestWeight> for Vec<i64> {
    fn from(w: HighestWeight) -> Vec<i64> {
        w.entries
    }
}

/// Outcome of the unitarity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Unitarity {
    pub unitary: bool,
    /// `#{i : m_i = m_n}`
    pub u: usize,
    /// `#{i : m_i = m_n + 1}`
    pub v: usize,
}

/// Unitarity of the irreducible module of highest weight `(−m_n, …, −m_1)`:
/// unitary iff `m_n ≥ n − (u + v/2)`, compared as `2·m_n ≥ 2n − 2u − v`.
pub fn classify_unitary(mu: &HighestWeight) -> Unitarity {
    let last = mu.last();
    let u = mu.entries.iter().filter(|&&m| m == last).count();
    let v = mu.entries.iter().filter(|&&m| m == last + 1).count();
    let n = mu.n() as i64;
    Unitarity {
        unitary: 2 * last >= 2 * n - 2 * u as i64 - v as i64,
        u,
        v,
    }
}

/// Integral infinitesimal character of `Sp(2n,ℝ)`: a decreasing list of
/// `2n+1` integers, symmetric under negation, with `0` of odd multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct InfinitesimalCharacter {
    entries: Vec<i64>,
}

impl InfinitesimalCharacter {
    /// Sorts the entries decreasingly and checks the symmetry conditions.
    pub fn new(mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.len() % 2 == 0 {
            return Err(Error::InfChar(format!("even length {}", entries.len())));
        }
        let mut neg: Vec<i64> = entries.iter().map(|x| -x).collect();
        neg.reverse();
        if neg != entries {
            return Err(Error::InfChar(format!("{entries:?} is not symmetric")));
        }
        // Symmetry plus odd length already forces an odd number of zeros.
        debug_assert!(entries.iter().filter(|&&x| x == 0).count() % 2 == 1);
        Ok(InfinitesimalCharacter { entries })
    }

    /// Builds `{x_i} ∪ {−x_i} ∪ {0}` from `n` integers.
    pub fn from_half(half: &[i64]) -> Self {
        let mut all: Vec<i64> = half.iter().flat_map(|&x| [x, -x]).collect();
        all.push(0);
        InfinitesimalCharacter::new(all).expect("symmetric by construction")
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// The rank `n` with `2n + 1` entries.
    pub fn rank(&self) -> usize {
        (self.entries.len() - 1) / 2
    }

    /// `χ_1 ≥ … ≥ χ_n ≥ 0`, the first `n` entries.
    pub fn positive_part(&self) -> &[i64] {
        &self.entries[..self.rank()]
    }

    /// No repeated entries (equivalently `0` occurs once).
    pub fn is_regular(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] != w[1])
    }
}

impl TryFrom<Vec<i64>> for InfinitesimalCharacter {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        InfinitesimalCharacter::new(v)
    }
}

impl From<InfinitesimalCharacter> for Vec<i64> {
    fn from(c: InfinitesimalCharacter) -> Vec<i64> {
        c.entries
    }
}

/// Infinitesimal character of `π(μ)`: the integers `m_i − i`, their
/// opposites, and `0`.
pub fn inf_char_of_weight(mu: &HighestWeight) -> InfinitesimalCharacter {
    let half: Vec<i64> = mu
        .entries
        .iter()
        .enumerate()
        .map(|(i, m)| m - (i as i64 + 1))
        .collect();
    InfinitesimalCharacter::from_half(&half)
}

/// Scalar weight `(m, …, m)` of `π_n(m)`, `0 ≤ m ≤ n`.
pub fn pi_nm(n: usize, m: i64) -> Result<HighestWeight> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if m < 0 || m > n as i64 {
        return Err(Error::OutOfRange {
            what: "m",
            detail: format!("need 0 ≤ m ≤ n, got n={n}, m={m}"),
        });
    }
    HighestWeight::new(vec![m; n])
}

/// Weight `((k+1)^{2k}, k^{n−2k})` of `σ_{n,k}`, `2 ≤ 2k ≤ n`.
pub fn sigma_nk(n: usize, k: i64) -> Result<HighestWeight> {
    if k < 1 || 2 * k > n as i64 {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("need 2 ≤ 2k ≤ n, got n={n}, k={k}"),
        });
    }
    let mut e = vec![k + 1; 2 * k as usize];
    e.resize(n, k);
    HighestWeight::new(e)
}

/// Sign of an `O(0,2ℓ)` label `[ν]_±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrthSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Finite-dimensional representation `[ν_1, …, ν_ℓ]_±` of the compact group
/// `O(0,2ℓ)`, stored verbatim (`ν` weakly decreasing, nonnegative).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrthRepLabel {
    pub nu: Vec<i64>,
    pub sign: OrthSign,
}

impl OrthRepLabel {
    pub fn ell(&self) -> usize {
        self.nu.len()
    }

    /// `[0^ℓ]_+`, the trivial character.
    pub fn is_trivial(&self) -> bool {
        self.sign == OrthSign::Plus && self.nu.iter().all(|&x| x == 0)
    }

    /// `[0^ℓ]_−`, the determinant.
    pub fn is_det(&self) -> bool {
        self.sign == OrthSign::Minus && self.nu.iter().all(|&x| x == 0)
    }

    /// The weight `μ` of the holomorphic module attached to this label in
    /// `Sp(2n,ℝ)`, or `None` when the label does not occur at rank `n`.
    ///
    /// With `α_1 ≥ … ≥ α_x > 0` the nonzero part of `ν`:
    /// `[ν]_+ ↦ (α+ℓ, ℓ^{n−x})` and
    /// `[ν]_− ↦ (α+ℓ, (ℓ+1)^{2ℓ−2x}, ℓ^{n−2ℓ+x})`.
    pub fn howe_image(&self, n: usize) -> Option<HighestWeight> {
        let ell = self.ell() as i64;
        let alpha: Vec<i64> = self.nu.iter().copied().filter(|&x| x > 0).collect();
        let x = alpha.len() as i64;
        let n = n as i64;
        let mut out: Vec<i64> = alpha.iter().map(|a| a + ell).collect();
        match self.sign {
            OrthSign::Plus => {
                if n < x {
                    return None;
                }
                out.extend(std::iter::repeat(ell).take((n - x) as usize));
            }
            OrthSign::Minus => {
                let tail = n - 2 * ell + x;
                if tail < 0 {
                    return None;
                }
                out.extend(std::iter::repeat(ell + 1).take((2 * ell - 2 * x) as usize));
                out.extend(std::iter::repeat(ell).take(tail as usize));
            }
        }
        HighestWeight::new(out).ok()
    }
}

/// The cases of the Howe-source classification, refined so that the
/// unitary weights fall into disjoint cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HoweCase {
    /// `m_n > n`
    #[serde(rename = "a")]
    A,
    /// `m_n = n − u`
    #[serde(rename = "b'")]
    BPrime,
    /// `m_n = n − a` with `(u−1)/2 ≤ a < u`
    #[serde(rename = "b''")]
    BDoublePrime,
    /// `m_n = n − a` with `a ≤ u/2 − 1`
    #[serde(rename = "d")]
    D,
    /// `m_n = n − u − b` with `2 ≤ 2b ≤ v`
    #[serde(rename = "c")]
    C,
}

/// One reading of a module as a Howe image from `O(0,2ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoweReading {
    pub case: HoweCase,
    pub ell: usize,
    pub orep: OrthRepLabel,
}

/// Primary reading plus, in cell `d`, the alternative reading through the
/// undivided case `b` (both labels have the same image).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoweSource {
    #[serde(flatten)]
    pub primary: HoweReading,
    pub alternative: Option<HoweReading>,
}

fn shifted(entries: &[i64], count: usize, ell: i64) -> Vec<i64> {
    entries[..count].iter().map(|m| m - ell).collect()
}

/// The `O(0,2ℓ)` representation whose Howe image is the unitary module `π(μ)`.
pub fn howe_source(mu: &HighestWeight) -> Result<HoweSource> {
    let cls = classify_unitary(mu);
    if !cls.unitary {
        return Err(Error::NotUnitary(mu.entries.clone()));
    }
    let n = mu.n() as i64;
    let (u, v) = (cls.u as i64, cls.v as i64);
    let e = mu.entries();
    let last = mu.last();

    if last > n {
        let ell = n;
        let orep = OrthRepLabel { nu: shifted(e, n as usize, ell), sign: OrthSign::Plus };
        return Ok(HoweSource {
            primary: HoweReading { case: HoweCase::A, ell: ell as usize, orep },
            alternative: None,
        });
    }
    let a = n - last;
    if a <= u {
        let ell = last;
        let b_label = OrthRepLabel { nu: shifted(e, ell as usize, ell), sign: OrthSign::Plus };
        if a == u {
            return Ok(HoweSource {
                primary: HoweReading { case: HoweCase::BPrime, ell: ell as usize, orep: b_label },
                alternative: None,
            });
        }
        if 2 * a >= u - 1 {
            return Ok(HoweSource {
                primary: HoweReading {
                    case: HoweCase::BDoublePrime,
                    ell: ell as usize,
                    orep: b_label,
                },
                alternative: None,
            });
        }
        // a ≤ u/2 − 1
        let ell_d = last - 1;
        let mut nu = shifted(e, (2 * ell_d - n) as usize, ell_d);
        nu.extend(std::iter::repeat(0).take((n - ell_d) as usize));
        return Ok(HoweSource {
            primary: HoweReading {
                case: HoweCase::D,
                ell: ell_d as usize,
                orep: OrthRepLabel { nu, sign: OrthSign::Minus },
            },
            alternative: Some(HoweReading { case: HoweCase::BDoublePrime, ell: ell as usize, orep: b_label }),
        });
    }
    let b = a - u;
    debug_assert!(b >= 1 && 2 * b <= v);
    let ell = n - u - b;
    let mut nu = shifted(e, (n - u - 2 * b) as usize, ell);
    nu.extend(std::iter::repeat(0).take(b as usize));
    Ok(HoweSource {
        primary: HoweReading {
            case: HoweCase::C,
            ell: ell as usize,
            orep: OrthRepLabel { nu, sign: OrthSign::Minus },
        },
        alternative: None,
    })
}

/// Largest `a` such that the regular character `χ` ends in `(a, …, 1)`;
/// `0` when `χ_n ≠ 1`.
pub fn regular_a_max(chi: &InfinitesimalCharacter) -> Result<usize> {
    if !chi.is_regular() {
        return Err(Error::InfChar(format!("{:?} is not regular", chi.entries())));
    }
    let pos = chi.positive_part();
    let n = pos.len();
    let mut a = 0;
    while a < n && pos[n - 1 - a] == a as i64 + 1 {
        a += 1;
    }
    Ok(a)
}

/// The holomorphic module `π_a` with regular infinitesimal character `χ`:
/// `m_i = χ_i + i` for `i ≤ ℓ = n − a` and `m_i = ℓ` beyond.
pub fn regular_module(chi: &InfinitesimalCharacter, a: usize) -> Result<HighestWeight> {
    let a_max = regular_a_max(chi)?;
    if a > a_max {
        return Err(Error::OutOfRange {
            what: "a",
            detail: format!("need a ≤ a_max = {a_max}, got {a}"),
        });
    }
    let pos = chi.positive_part();
    let ell = pos.len() - a;
    let mut e: Vec<i64> = pos[..ell].iter().enumerate().map(|(i, c)| c + i as i64 + 1).collect();
    e.resize(pos.len(), ell as i64);
    HighestWeight::new(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(v: &[i64]) -> HighestWeight {
        HighestWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unitarity_examples() {
        assert_eq!(classify_unitary(&hw(&[3, 2, 2, 2])), Unitarity { unitary: true, u: 3, v: 1 });
        assert_eq!(classify_unitary(&hw(&[5, 5, 1, 1])), Unitarity { unitary: false, u: 2, v: 0 });
        assert!(classify_unitary(&hw(&[0, 0, 0])).unitary);
    }

    #[test]
    fn weights_reject_bad_shapes() {
        assert!(HighestWeight::new(vec![1, 2]).is_err());
        assert!(HighestWeight::new(vec![]).is_err());
        assert!(pi_nm(3, 4).is_err());
        assert!(sigma_nk(3, 2).is_err());
        assert!(sigma_nk(3, 0).is_err());
    }

    #[test]
    fn infinitesimal_characters() {
        assert_eq!(inf_char_of_weight(&hw(&[2, 2, 2])).entries(), &[1, 1, 0, 0, 0, -1, -1]);
        assert_eq!(
            inf_char_of_weight(&hw(&[3, 3, 3, 3, 2])).entries(),
            &[3, 2, 1, 1, 0, 0, 0, -1, -1, -2, -3]
        );
        assert_eq!(inf_char_of_weight(&hw(&[1])).entries(), &[0, 0, 0]);
        assert!(InfinitesimalCharacter::new(vec![1, 0]).is_err());
        assert!(InfinitesimalCharacter::new(vec![1, 0, 0]).is_err());
    }

    #[test]
    fn scalar_and_near_scalar_weights() {
        assert_eq!(pi_nm(3, 2).unwrap().entries(), &[2, 2, 2]);
        assert_eq!(pi_nm(2, 0).unwrap().entries(), &[0, 0]);
        assert_eq!(pi_nm(5, 5).unwrap().entries(), &[5; 5]);
        assert_eq!(sigma_nk(5, 2).unwrap().entries(), &[3, 3, 3, 3, 2]);
        assert_eq!(sigma_nk(4, 2).unwrap(), pi_nm(4, 3).unwrap());
        assert_eq!(sigma_nk(2, 1).unwrap().entries(), &[2, 2]);
    }

    #[test]
    fn howe_source_of_scalar_modules() {
        let s = howe_source(&pi_nm(5, 2).unwrap()).unwrap();
        assert_eq!(s.primary.case, HoweCase::BDoublePrime);
        assert_eq!(s.primary.ell, 2);
        assert!(s.primary.orep.is_trivial());

        let s = howe_source(&pi_nm(4, 0).unwrap()).unwrap();
        assert_eq!(s.primary.case, HoweCase::BPrime);
        assert_eq!(s.primary.ell, 0);

        // 2m ≥ n + 2: the divided cell is d, the b reading survives as an alternative.
        let s = howe_source(&pi_nm(4, 4).unwrap()).unwrap();
        assert_eq!(s.primary.case, HoweCase::D);
        assert_eq!(s.primary.ell, 3);
        assert_eq!(s.primary.orep, OrthRepLabel { nu: vec![1, 1, 0], sign: OrthSign::Minus });
        let alt = s.alternative.unwrap();
        assert_eq!(alt.ell, 4);
        assert!(alt.orep.is_trivial());
    }

    #[test]
    fn howe_source_of_sigma() {
        let s = howe_source(&sigma_nk(5, 2).unwrap()).unwrap();
        assert_eq!(s.primary.case, HoweCase::C);
        assert_eq!(s.primary.ell, 2);
        assert!(s.primary.orep.is_det());

        let s = howe_source(&sigma_nk(4, 2).unwrap()).unwrap();
        assert_eq!(s.primary.case, HoweCase::D);
        assert_eq!(s.primary.ell, 2);
        assert!(s.primary.orep.is_det());
    }

    #[test]
    fn howe_source_case_a() {
        let s = howe_source(&hw(&[6, 5, 4])).unwrap();
        assert_eq!(s.primary.case, HoweCase::A);
        assert_eq!(s.primary.orep.nu, vec![3, 2, 1]);
        assert!(howe_source(&hw(&[5, 5, 1, 1])).is_err());
    }

    #[test]
    fn regular_rule() {
        let chi = |v: &[i64]| InfinitesimalCharacter::from_half(v);
        assert_eq!(regular_a_max(&chi(&[5, 2, 1])).unwrap(), 2);
        assert_eq!(regular_a_max(&chi(&[3, 2, 1])).unwrap(), 3);
        assert_eq!(regular_a_max(&chi(&[7, 5, 3])).unwrap(), 0);
        assert!(regular_a_max(&chi(&[2, 2, 1])).is_err());
        assert_eq!(regular_module(&chi(&[5, 2, 1]), 2).unwrap().entries(), &[6, 1, 1]);
        assert_eq!(regular_module(&chi(&[3, 2, 1]), 3).unwrap().entries(), &[0, 0, 0]);
    }
}
