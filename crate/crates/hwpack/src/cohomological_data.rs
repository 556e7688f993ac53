//! Data attached to the maximal θ-stable parabolic pairs `(𝔮, L)` of
//! `Sp(2n,ℝ)` with `L ≅ Sp(2(n−p−q),ℝ) × U(p,q)`: half-sums of roots,
//! the character `λ(t)`, the weakly fair test and the K-type inequality,
//! plus the induction data used for holomorphic packets.
//!
//! Every vector is kept as doubled integers so half-integers stay exact.
//!
//! ```
//! use hwpack::cohomological_data::rho_vectors;
//! let r = rho_vectors(3, 1, 1).unwrap();
//! assert_eq!(r.delta_u, &r.delta_u_p + &r.delta_u_k);
//! assert_eq!(r.delta_pq.doubled(), &[4, -2, -6]);
//! ```

use crate::arthur_params::ArthurParameter;
use crate::error::{Error, Result};
use crate::weights::{regular_module, HighestWeight, InfinitesimalCharacter};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Sub};

/// A vector of half-integers, stored as twice its entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfIntVector {
    doubled: Vec<i64>,
    half: bool,
}

impl HalfIntVector {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        HalfIntVector { doubled, half: true }
    }

    pub fn from_integers(v: &[i64]) -> Self {
        Self::from_doubled(v.iter().map(|x| 2 * x).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_doubled(vec![0; n])
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    /// The entries as integers, if none is a proper half-integer.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.doubled.iter().map(|x| (x % 2 == 0).then_some(x / 2)).collect()
    }

    /// Pairing `⟨self, other⟩`, doubled twice (i.e. `4·⟨·,·⟩`).
    pub fn dot4(&self, other: &HalfIntVector) -> i64 {
        self.doubled.iter().zip(&other.doubled).map(|(a, b)| a * b).sum()
    }
}

impl Add for &HalfIntVector {
    type Output = HalfIntVector;
    fn add(self, o: &HalfIntVector) -> HalfIntVector {
        assert_eq!(self.len(), o.len(), "length mismatch");
        HalfIntVector::from_doubled(self.doubled.iter().zip(&o.doubled).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HalfIntVector {
    type Output = HalfIntVector;
    fn sub(self, o: &HalfIntVector) -> HalfIntVector {
        assert_eq!(self.len(), o.len(), "length mismatch");
        HalfIntVector::from_doubled(self.doubled.iter().zip(&o.doubled).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for HalfIntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .doubled
            .iter()
            .map(|x| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The pair attached to `t_{p,q} = (1^p, 0^{n−p−q}, (−1)^q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolicPair {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl ParabolicPair {
    pub fn new(n: usize, p: usize, q: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if p + q > n {
            return Err(Error::OutOfRange { what: "p + q", detail: format!("p + q = {} > n = {n}", p + q) });
        }
        Ok(ParabolicPair { n, p, q })
    }

    /// Rank of the symplectic factor of `L`.
    pub fn middle(&self) -> usize {
        self.n - self.p - self.q
    }

    pub fn t(&self) -> Vec<i64> {
        let mut v = vec![1; self.p];
        v.resize(self.p + self.middle(), 0);
        v.resize(self.n, -1);
        v
    }

    /// `S = dim(𝔲 ∩ 𝔨)`.
    pub fn s(&self) -> usize {
        self.p * (self.n - self.p) + self.middle() * self.q
    }

    /// `2n − p − q + 1`, the scale relating `δ(𝔲)` to `t_{p,q}`.
    fn scale(&self) -> i64 {
        (2 * self.n - self.p - self.q + 1) as i64
    }
}

/// The half-sums of roots of a parabolic pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoVectors {
    pub delta_l: HalfIntVector,
    pub delta_u_p: HalfIntVector,
    pub delta_u_k: HalfIntVector,
    pub delta_u: HalfIntVector,
    pub delta_pq: HalfIntVector,
    pub s: usize,
}

fn blocks(pp: &ParabolicPair, first: impl Fn(i64) -> i64, mid: impl Fn(i64) -> i64, last: impl Fn(i64) -> i64) -> HalfIntVector {
    let mut v: Vec<i64> = (1..=pp.p as i64).map(first).collect();
    v.extend((1..=pp.middle() as i64).map(mid));
    v.extend((1..=pp.q as i64).map(last));
    HalfIntVector::from_doubled(v)
}

/// `δ(𝔩)`, `δ(𝔲∩𝔭)`, `δ(𝔲∩𝔨)`, `δ(𝔲)`, `δ_{p,q} = δ(𝔩) + δ(𝔲)` and `S`.
pub fn rho_vectors(n: usize, p: usize, q: usize) -> Result<RhoVectors> {
    let pp = ParabolicPair::new(n, p, q)?;
    let (ni, pi, qi) = (n as i64, p as i64, q as i64);
    // Entries below are already doubled.
    let delta_l = blocks(&pp, |k| 2 * k - 1 - pi - qi, |r| -2 * r, |r| qi - pi + 1 - 2 * r);
    let delta_u_p = blocks(&pp, |_| ni - qi + 1, |_| pi - qi, |_| -ni + pi - 1);
    let delta_u_k = blocks(&pp, |_| ni - pi, |_| qi - pi, |_| -(ni - qi));
    let sc = pp.scale();
    let delta_u = HalfIntVector::from_doubled(pp.t().iter().map(|x| sc * x).collect());
    let delta_pq = blocks(&pp, |k| 2 * (ni - pi - qi + k), |r| -2 * r, |r| -2 * (ni - qi + r));
    Ok(RhoVectors { delta_l, delta_u_p, delta_u_k, delta_u, delta_pq, s: pp.s() })
}

/// `λ(t)`: `(t+p+q−1)/2 − n` on the first `p` slots, `0` in the middle and
/// the negative on the last `q`.
pub fn lambda_of(n: usize, p: usize, q: usize, t: i64) -> Result<HalfIntVector> {
    let pp = ParabolicPair::new(n, p, q)?;
    let y2 = y_doubled(&pp, t);
    Ok(HalfIntVector::from_doubled(pp.t().iter().map(|x| x * y2).collect()))
}

/// `2y` for the differential `λ = (y^p, 0, (−y)^q)` of parameter `t`.
fn y_doubled(pp: &ParabolicPair, t: i64) -> i64 {
    t + (pp.p + pp.q) as i64 - 1 - 2 * pp.n as i64
}

/// Inverse of [`lambda_of`]: the `t` with `λ(t) = (y^p, 0, (−y)^q)`,
/// given `2y`. This is `t = 2y + 2n + 1 − p − q`.
pub fn t_of_y(n: usize, p: usize, q: usize, y_doubled: i64) -> Result<i64> {
    let pp = ParabolicPair::new(n, p, q)?;
    Ok(y_doubled + 2 * pp.n as i64 + 1 - (pp.p + pp.q) as i64)
}

/// Induction from the pair is in the weakly fair range iff `t ≥ 0`.
pub fn weakly_fair(t: i64) -> bool {
    t >= 0
}

/// The fundamental K-type inequality for the scalar type `m_j = m`:
/// `m(q − p) ≥ (p + q)(t + p + q + 1)/2 − 2pq`, checked after doubling.
pub fn ktype_inequality_scalar(m: i64, p: i64, q: i64, t: i64) -> bool {
    2 * m * (q - p) >= (p + q) * (t + p + q + 1) - 4 * p * q
}

/// The K-type inequality for `μ = (m_1 ≥ … ≥ m_n)`:
/// `−Σ_{i≤p} m_{n−i+1} + Σ_{j≤q} m_j ≥ (p+q)(t+p+q+1)/2 − 2pq`.
///
/// The positive factor `2/(2n−p−q+1)` common to both sides of
/// `μ(h_𝔮) ≥ c + 2δ(𝔲∩𝔭)(h_𝔮)` has been cleared.
pub fn ktype_inequality_general(mu: &HighestWeight, n: usize, p: usize, q: usize, t: i64) -> Result<bool> {
    let pp = ParabolicPair::new(n, p, q)?;
    if mu.n() != n {
        return Err(Error::Precondition(format!("weight has rank {}, expected {n}", mu.n())));
    }
    let m = mu.entries();
    let lhs: i64 = -m[n - p..].iter().sum::<i64>() + m[..q].iter().sum::<i64>();
    let (pi, qi) = (p as i64, q as i64);
    // 2·RHS computed through c and δ(𝔲∩𝔭)(h_𝔮) before simplification.
    let rhs2 = (pi + qi) * y_doubled(&pp, t) + 2 * (pi * (n as i64 - qi + 1) + qi * (n as i64 - pi + 1));
    Ok(2 * lhs >= rhs2)
}

/// Which half-shift of a discrete block `δ_t ⊠ R[a]` enters its
/// `U(a, 0)` character: `(t − a + 1)/2` or `(t + a − 1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightShift {
    TMinusA,
    TPlusA,
}

/// One `U(a_j)` factor of the induction data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionWeight {
    pub t: u32,
    pub a: u32,
    /// The constant value of `λ_j`, repeated `a` times.
    pub value: i64,
}

impl InductionWeight {
    pub fn lambda(&self) -> Vec<i64> {
        vec![self.value; self.a as usize]
    }
}

/// `λ_j = n − Σ_{k<j} a_k − shift_j` for each discrete block in canonical
/// order, using `(t_j − a_j + 1)/2` as the shift.
pub fn induction_weights_thm72(psi: &ArthurParameter, n: usize) -> Result<Vec<InductionWeight>> {
    induction_weights_with(psi, n, WeightShift::TMinusA)
}

/// As [`induction_weights_thm72`] with an explicit choice of shift.
pub fn induction_weights_with(psi: &ArthurParameter, n: usize, shift: WeightShift) -> Result<Vec<InductionWeight>> {
    if psi.n != n {
        return Err(Error::Precondition(format!("parameter has rank {}, expected {n}", psi.n)));
    }
    let mut used = 0i64;
    let mut out = Vec::with_capacity(psi.discrete.len());
    for d in &psi.discrete {
        let (t, a) = (d.t as i64, d.a as i64);
        let s = match shift {
            WeightShift::TMinusA => (t - a + 1) / 2,
            WeightShift::TPlusA => (t + a - 1) / 2,
        };
        out.push(InductionWeight { t: d.t, a: d.a, value: n as i64 - used - s });
        used += a;
    }
    Ok(out)
}

/// `π_a = A_𝔮(λ)` for a regular infinitesimal character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AqLambda {
    pub a: usize,
    /// `μ = (m_1, …, m_n)` of `π_a`.
    pub mu: HighestWeight,
    pub rho_u_p: HalfIntVector,
    pub lambda: HalfIntVector,
    pub lambda_plus_rho: HalfIntVector,
}

/// `λ = μ_a − 2ρ(𝔲∩𝔭)` for `L ≅ Sp(2a,ℝ) × U(1,0)^ℓ`, `ℓ = n − a`, with
/// `ρ = (−1, …, −n)` and `ρ(𝔲∩𝔭) = ((−ℓ/2)^a, (−(n+1)/2)^ℓ)`.
pub fn aqlambda_regular(chi: &InfinitesimalCharacter, a: usize) -> Result<AqLambda> {
    let mu = regular_module(chi, a)?;
    let n = mu.n() as i64;
    let ell = n - a as i64;
    let mut rup = vec![-ell; a];
    rup.resize(mu.n(), -(n + 1));
    let rho_u_p = HalfIntVector::from_doubled(rup);
    let mu_a = HalfIntVector::from_integers(&mu.ktype());
    let two_rup = HalfIntVector::from_doubled(rho_u_p.doubled().iter().map(|x| 2 * x).collect());
    let lambda = &mu_a - &two_rup;
    let rho = HalfIntVector::from_integers(&(1..=n).map(|i| -i).collect::<Vec<_>>());
    let lambda_plus_rho = &lambda + &rho;
    Ok(AqLambda { a, mu, rho_u_p, lambda, lambda_plus_rho })
}

/// The closed forms `λ = (0^a, −m_ℓ+n+1, …, −m_1+n+1)` and
/// `λ + ρ = (−1, …, −a, −m_ℓ+ℓ, …, −m_1+1)`.
pub fn aqlambda_closed_form(mu: &HighestWeight, a: usize) -> (Vec<i64>, Vec<i64>) {
    let m = mu.entries();
    let n = m.len() as i64;
    let ell = m.len() - a;
    let mut lambda = vec![0; a];
    lambda.extend((0..ell).rev().map(|i| -m[i] + n + 1));
    let mut lpr: Vec<i64> = (1..=a as i64).map(|i| -i).collect();
    lpr.extend((0..ell).rev().map(|i| -m[i] + i as i64 + 1));
    (lambda, lpr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arthur_params::{DiscreteBlock, UnipotentBlock};
    use crate::sign::Char;

    #[test]
    fn rho_vectors_small() {
        let r = rho_vectors(2, 1, 0).unwrap();
        assert_eq!(r.delta_u.doubled(), &[4, 0]);
        assert_eq!(r.delta_pq.doubled(), &[4, -2]);
        assert_eq!(r.s, 1);
        let z = rho_vectors(4, 0, 0).unwrap();
        assert_eq!(z.delta_u, HalfIntVector::zeros(4));
        assert_eq!(z.delta_u_p, HalfIntVector::from_doubled(vec![0; 4]));
        assert_eq!(z.s, 0);
        assert!(rho_vectors(2, 2, 1).is_err());
    }

    #[test]
    fn lambda_and_fairness() {
        // n=3, p=1, q=1, t=1: (t+p+q−1)/2 − n = 1 − 3 = −2.
        assert_eq!(lambda_of(3, 1, 1, 1).unwrap().doubled(), &[-4, 0, 4]);
        for t in -3..6 {
            let y2 = lambda_of(5, 2, 1, t).unwrap().doubled()[0];
            assert_eq!(t_of_y(5, 2, 1, y2).unwrap(), t);
        }
        assert!(weakly_fair(0));
        assert!(!weakly_fair(-1));
    }

    #[test]
    fn scalar_inequality_examples() {
        assert!(ktype_inequality_scalar(2, 0, 2, 1));
        assert!(!ktype_inequality_scalar(1, 0, 2, 1));
        assert!(ktype_inequality_scalar(0, 3, 3, -7));
    }

    #[test]
    fn general_matches_scalar() {
        for n in 1..6usize {
            for p in 0..=n {
                for q in 0..=n - p {
                    for m in 0..5 {
                        for t in -2..8 {
                            let mu = HighestWeight::new(vec![m; n]).unwrap();
                            assert_eq!(
                                ktype_inequality_general(&mu, n, p, q, t).unwrap(),
                                ktype_inequality_scalar(m, p as i64, q as i64, t)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn induction_weights_both_shifts() {
        let psi = ArthurParameter::new(
            5,
            vec![UnipotentBlock::new(Char::Triv, 7)],
            vec![DiscreteBlock::new(1, 2)],
        )
        .unwrap();
        let w = induction_weights_thm72(&psi, 5).unwrap();
        assert_eq!(w[0].lambda(), vec![5, 5]);
        let w = induction_weights_with(&psi, 5, WeightShift::TPlusA).unwrap();
        assert_eq!(w[0].lambda(), vec![4, 4]);
        assert!(induction_weights_thm72(&ArthurParameter::trivial(3), 3).unwrap().is_empty());
    }

    #[test]
    fn aqlambda_matches_closed_form() {
        let chi = InfinitesimalCharacter::from_half(&[7, 4, 2, 1]);
        for a in 0..=2 {
            let aq = aqlambda_regular(&chi, a).unwrap();
            let (l, lpr) = aqlambda_closed_form(&aq.mu, a);
            assert_eq!(aq.lambda.to_integers().unwrap(), l);
            assert_eq!(aq.lambda_plus_rho.to_integers().unwrap(), lpr);
        }
        assert!(aqlambda_regular(&chi, 3).is_err());
    }

    #[test]
    fn display_and_json() {
        let v = HalfIntVector::from_doubled(vec![3, -2, 0]);
        assert_eq!(v.to_string(), "(3/2, -1, 0)");
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"doubled":[3,-2,0],"half":true}"#);
    }
}
