//! Signed Young tableaux for `K_ℂ`-orbits of nilpotent elements in `𝔭`
//! for `Sp(2n,ℝ)`, the linear chain of orbits inside `𝔭⁻`, and the
//! associated variety of `π_n(m)`.
//!
//! Rows are written as alternating strings such as `+-+`; a row is fixed by
//! its length and leading sign.
//!
//! ```
//! use hwpack::orbit_tableaux::{av_scalar, pminus_rank};
//! let t = av_scalar(3, 1).unwrap();
//! assert_eq!(t.to_string(), "+- +- + -");
//! assert_eq!(pminus_rank(&t), Some(2));
//! ```

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A row of alternating signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Row {
    pub length: usize,
    pub lead: Sign,
}

impl Row {
    pub fn new(length: usize, lead: Sign) -> Self {
        Row { length, lead }
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = self.lead;
        for _ in 0..self.length {
            write!(f, "{}", s.symbol())?;
            s = s.flip();
        }
        Ok(())
    }
}

impl FromStr for Row {
    type Err = Error;
    fn from_str(s: &str) -> Result<Row> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(Error::Precondition(format!("bad sign {c:?} in row {s:?}"))),
            })
            .collect::<Result<_>>()?;
        if signs.is_empty() {
            return Err(Error::Precondition("empty row".into()));
        }
        if signs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("signs do not alternate in {s:?}")));
        }
        Ok(Row::new(signs.len(), signs[0]))
    }
}

/// Rows sorted by length, longest first, `+`-led before `−`-led.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct SignedTableau {
    rows: Vec<Row>,
}

impl SignedTableau {
    pub fn new(mut rows: Vec<Row>) -> Self {
        rows.sort_by(|a, b| b.length.cmp(&a.length).then(a.lead.cmp(&b.lead)));
        SignedTableau { rows }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn total_boxes(&self) -> usize {
        self.rows.iter().map(|r| r.length).sum()
    }

    fn count(&self, length: usize, lead: Sign) -> usize {
        self.rows.iter().filter(|r| r.length == length && r.lead == lead).count()
    }
}

impl fmt::Display for SignedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(Row::to_string).collect();
        write!(f, "{}", rows.join(" "))
    }
}

impl FromStr for SignedTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|r| !r.is_empty());
        Ok(SignedTableau::new(rows.map(str::parse).collect::<Result<_>>()?))
    }
}

impl TryFrom<Vec<String>> for SignedTableau {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        Ok(SignedTableau::new(v.iter().map(|r| r.parse()).collect::<Result<_>>()?))
    }
}

impl From<SignedTableau> for Vec<String> {
    fn from(t: SignedTableau) -> Vec<String> {
        t.rows.iter().map(Row::to_string).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[serde(tag = "code")]
pub enum TableauViolation {
    #[error("expected {expected} boxes, found {found}")]
    BoxCount { expected: usize, found: usize },
    #[error("rows of odd length {length} must come in pairs")]
    OddMultiplicity { length: usize },
    #[error("rows of odd length {length} must split evenly between + and − leads")]
    OddBalance { length: usize },
}

impl TableauViolation {
    pub fn code(&self) -> &'static str {
        match self {
            TableauViolation::BoxCount { .. } => "BOX_COUNT",
            TableauViolation::OddMultiplicity { .. } => "ODD_MULTIPLICITY",
            TableauViolation::OddBalance { .. } => "ODD_BALANCE",
        }
    }
}

/// Checks that `t` labels a `K_ℂ`-orbit for `Sp(2n,ℝ)`.
pub fn validate_tableau(t: &SignedTableau, n: usize) -> std::result::Result<(), Vec<TableauViolation>> {
    let mut v = Vec::new();
    if t.total_boxes() != 2 * n {
        v.push(TableauViolation::BoxCount { expected: 2 * n, found: t.total_boxes() });
    }
    let mut lengths: Vec<usize> = t.rows.iter().map(|r| r.length).filter(|l| l % 2 == 1).collect();
    lengths.dedup();
    for length in lengths {
        let (plus, minus) = (t.count(length, Sign::Plus), t.count(length, Sign::Minus));
        if (plus + minus) % 2 == 1 {
            v.push(TableauViolation::OddMultiplicity { length });
        } else if plus != minus {
            v.push(TableauViolation::OddBalance { length });
        }
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// The orbit in `𝔭⁻` with `r` rows `+−` and `n − r` singletons of each sign.
pub fn pminus_tableau(n: usize, r: usize) -> Result<SignedTableau> {
    if r > n {
        return Err(Error::OutOfRange { what: "r", detail: format!("need r ≤ n = {n}, got {r}") });
    }
    let mut rows = vec![Row::new(2, Sign::Plus); r];
    rows.extend((0..n - r).flat_map(|_| [Row::new(1, Sign::Plus), Row::new(1, Sign::Minus)]));
    Ok(SignedTableau::new(rows))
}

/// The orbits in `𝔭⁻`, from `{0}` (`r = 0`) to the dense orbit (`r = n`).
pub fn pminus_orbits(n: usize) -> Vec<SignedTableau> {
    (0..=n).map(|r| pminus_tableau(n, r).expect("r ≤ n")).collect()
}

/// Position `r` of `t` in the `𝔭⁻` chain; `None` if `t` is invalid or has
/// a row longer than two or a two-row leading with `−`.
pub fn pminus_rank(t: &SignedTableau) -> Option<usize> {
    let n = t.total_boxes() / 2;
    if validate_tableau(t, n).is_err() {
        return None;
    }
    if t.rows.iter().any(|r| r.length > 2 || (r.length == 2 && r.lead == Sign::Minus)) {
        return None;
    }
    Some(t.count(2, Sign::Plus))
}

/// Associated variety of `π_n(m)`: dense in `𝔭⁻` when `2m ≥ n`, otherwise
/// `2m` rows `+−` and `n − 2m` singletons of each sign.
pub fn av_scalar(n: usize, m: i64) -> Result<SignedTableau> {
    if m < 0 || m > n as i64 {
        return Err(Error::OutOfRange { what: "m", detail: format!("need 0 ≤ m ≤ n = {n}, got {m}") });
    }
    pminus_tableau(n, (2 * m as usize).min(n))
}

/// Closure order on the `𝔭⁻` chain: `r_1 ≤ r_2`.
pub fn closure_leq(t1: &SignedTableau, t2: &SignedTableau) -> Result<bool> {
    if t1.total_boxes() != t2.total_boxes() {
        return Err(Error::Precondition("tableaux of different sizes".into()));
    }
    match (pminus_rank(t1), pminus_rank(t2)) {
        (Some(r1), Some(r2)) => Ok(r1 <= r2),
        _ => Err(Error::Precondition("closure order is only defined on the 𝔭⁻ chain".into())),
    }
}
