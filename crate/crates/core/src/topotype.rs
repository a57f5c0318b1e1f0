//! Topological types of real meromorphic functions.
//!
//! A type is `(g, n, 0 | I)` on a non-separating curve, `(g, n, 1 | I)` on a
//! separating curve, or the extended `(g, n, 1 | I, xi)` when the separating
//! type admits extension. `I` holds the oval indices (non-negative) or the
//! signed oval degrees. Values of [`TopType`] are always in normal form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Upper bound on `g`, `n`, `k` and `|i_j|`. Keeps every derived quantity
/// exact in 64-bit arithmetic.
pub const MAX_PARAM: u32 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    NonSep,
    Sep,
    SepExt,
}

impl Variant {
    /// The `eps` digit of the text form.
    pub fn eps(self) -> u8 {
        match self {
            Variant::NonSep => 0,
            Variant::Sep | Variant::SepExt => 1,
        }
    }

    pub fn is_separating(self) -> bool {
        self != Variant::NonSep
    }
}

/// A topological type in normal form.
///
/// Field order gives the derived ordering `(variant, g, n, I, xi)` used by
/// catalog sweeps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopType {
    variant: Variant,
    g: u32,
    n: u32,
    indices: Vec<i64>,
    xi: Option<u32>,
}

/// A named existence condition that a type failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// Non-separating: `k <= g`.
    OvalsAtMostGenus,
    /// Non-separating: `sum(I) <= n - 2`.
    IndexSumBound,
    /// Non-separating: `sum(I) = n (mod 2)`.
    IndexParity,
    /// Separating: `1 <= k <= g + 1`.
    OvalCountRange,
    /// Separating: `k = g + 1 (mod 2)`.
    OvalCountParity,
    /// Separating: `sum(I) = n (mod 2)`.
    DegreeParity,
    /// Separating: none of the four degree clauses holds.
    DegreeClause,
    /// Extended: the underlying separating type does not admit extension.
    NoExtension,
    /// Extended: `0 <= xi <= (g - k + 1) / 2`.
    XiRange,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::OvalsAtMostGenus => "k <= g",
            Condition::IndexSumBound => "sum(I) <= n-2",
            Condition::IndexParity => "sum(I) = n (mod 2)",
            Condition::OvalCountRange => "1 <= k <= g+1",
            Condition::OvalCountParity => "k = g+1 (mod 2)",
            Condition::DegreeParity => "sum(I) = n (mod 2)",
            Condition::DegreeClause => {
                "one of: n=1,g=0,I=(+-1) | n=2,k=g+1,I=0 | |sum(I)|=sum|I|=n,I!=0 | n>=3,sum|I|<=n-2"
            }
            Condition::NoExtension => "|sum(I)| < sum|I| = n-2",
            Condition::XiRange => "0 <= xi <= (g-k+1)/2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceReport {
    pub exists: bool,
    pub violated: Vec<Condition>,
}

impl ExistenceReport {
    fn from_violations(violated: Vec<Condition>) -> Self {
        ExistenceReport {
            exists: violated.is_empty(),
            violated,
        }
    }
}

fn check_range(what: &'static str, v: u64) -> Result<()> {
    if v > u64::from(MAX_PARAM) {
        Err(Error::OutOfRange(what))
    } else {
        Ok(())
    }
}

impl TopType {
    /// Builds the normal form of a raw type.
    ///
    /// `I` is sorted. For separating types the representative of the
    /// `{I, -I}` orbit is the lexicographically greater of
    /// `(sorted I, xi)` and `(sorted -I, (g-k+1)/2 - xi)`.
    pub fn normalize(
        variant: Variant,
        g: u32,
        n: u32,
        indices: &[i64],
        xi: Option<u32>,
    ) -> Result<Self> {
        check_range("g", g.into())?;
        check_range("n", n.into())?;
        check_range("k", indices.len() as u64)?;
        for &i in indices {
            check_range("index", i.unsigned_abs())?;
        }
        if n == 0 {
            return Err(Error::Precondition("n must be at least 1".into()));
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        match variant {
            Variant::NonSep => {
                if xi.is_some() {
                    return Err(Error::Precondition("xi is only defined for eps=1".into()));
                }
                if sorted.first().is_some_and(|&i| i < 0) {
                    return Err(Error::Precondition(
                        "indices of a non-separating type are non-negative".into(),
                    ));
                }
                Ok(TopType {
                    variant,
                    g,
                    n,
                    indices: sorted,
                    xi: None,
                })
            }
            Variant::Sep => {
                if xi.is_some() {
                    return Err(Error::Precondition(
                        "xi requires the extended variant".into(),
                    ));
                }
                let flipped = negated_sorted(&sorted);
                let indices = sorted.max(flipped);
                Ok(TopType {
                    variant,
                    g,
                    n,
                    indices,
                    xi: None,
                })
            }
            Variant::SepExt => {
                let xi = xi.ok_or_else(|| {
                    Error::Precondition("the extended variant requires xi".into())
                })?;
                check_range("xi", xi.into())?;
                let k = sorted.len();
                let top = i64::from(g) - k as i64 + 1;
                if top.rem_euclid(2) != 0 {
                    return Err(Error::IllFormedExtension { g, k });
                }
                let bound = top / 2;
                let flipped_xi = bound - i64::from(xi);
                let plain = (sorted, i64::from(xi));
                let (indices, xi) = if flipped_xi >= 0 {
                    let flipped = (negated_sorted(&plain.0), flipped_xi);
                    plain.max(flipped)
                } else {
                    plain
                };
                Ok(TopType {
                    variant,
                    g,
                    n,
                    indices,
                    xi: Some(xi as u32),
                })
            }
        }
    }

    pub fn non_sep(g: u32, n: u32, indices: &[i64]) -> Result<Self> {
        Self::normalize(Variant::NonSep, g, n, indices, None)
    }

    pub fn sep(g: u32, n: u32, degrees: &[i64]) -> Result<Self> {
        Self::normalize(Variant::Sep, g, n, degrees, None)
    }

    pub fn sep_ext(g: u32, n: u32, degrees: &[i64], xi: u32) -> Result<Self> {
        Self::normalize(Variant::SepExt, g, n, degrees, Some(xi))
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn xi(&self) -> Option<u32> {
        self.xi
    }

    pub fn index_sum(&self) -> i64 {
        self.indices.iter().sum()
    }

    pub fn abs_sum(&self) -> i64 {
        self.indices.iter().map(|i| i.abs()).sum()
    }

    pub fn has_zero_index(&self) -> bool {
        self.indices.contains(&0)
    }

    /// `(g - k + 1) / 2`, the largest admissible `xi`; `None` when the
    /// numerator is odd or negative.
    pub fn xi_bound(&self) -> Option<u32> {
        let top = i64::from(self.g) - self.k() as i64 + 1;
        (top >= 0 && top % 2 == 0).then_some((top / 2) as u32)
    }

    /// The plain separating type under an extended one. Identity on the
    /// other variants.
    pub fn underlying(&self) -> TopType {
        match self.variant {
            Variant::SepExt => TopType {
                variant: Variant::Sep,
                g: self.g,
                n: self.n,
                indices: self.indices.clone().max(negated_sorted(&self.indices)),
                xi: None,
            },
            _ => self.clone(),
        }
    }

    /// `|sum I| < sum |I| = n - 2`. Always false for non-separating types.
    pub fn admits_extension(&self) -> bool {
        if !self.variant.is_separating() {
            return false;
        }
        let abs = self.abs_sum();
        self.index_sum().abs() < abs && abs == i64::from(self.n) - 2
    }

    pub fn exists(&self) -> ExistenceReport {
        ExistenceReport::from_violations(self.violations())
    }

    fn violations(&self) -> Vec<Condition> {
        let g = i64::from(self.g);
        let n = i64::from(self.n);
        let k = self.k() as i64;
        let sum = self.index_sum();
        let mut v = Vec::new();
        match self.variant {
            Variant::NonSep => {
                if k > g {
                    v.push(Condition::OvalsAtMostGenus);
                }
                if sum > n - 2 {
                    v.push(Condition::IndexSumBound);
                }
                if (sum - n).rem_euclid(2) != 0 {
                    v.push(Condition::IndexParity);
                }
            }
            Variant::Sep => {
                if !(1..=g + 1).contains(&k) {
                    v.push(Condition::OvalCountRange);
                }
                if (k - g - 1).rem_euclid(2) != 0 {
                    v.push(Condition::OvalCountParity);
                }
                if (sum - n).rem_euclid(2) != 0 {
                    v.push(Condition::DegreeParity);
                }
                if !self.degree_clause_holds() {
                    v.push(Condition::DegreeClause);
                }
            }
            Variant::SepExt => {
                let base = self.underlying();
                v.extend(base.violations());
                if !base.admits_extension() {
                    v.push(Condition::NoExtension);
                }
                match (self.xi_bound(), self.xi) {
                    (Some(b), Some(xi)) if xi <= b => {}
                    _ => v.push(Condition::XiRange),
                }
            }
        }
        v
    }

    fn degree_clause_holds(&self) -> bool {
        let (g, n, k) = (self.g, i64::from(self.n), self.k());
        let sum = self.index_sum();
        let abs = self.abs_sum();
        let all_zero = self.indices.iter().all(|&i| i == 0);
        let none_zero = !self.has_zero_index();
        (n == 1 && g == 0 && self.indices.len() == 1 && self.indices[0].abs() == 1)
            || (n == 2 && k == g as usize + 1 && all_zero)
            || (n >= 2 && sum.abs() == abs && abs == n && none_zero)
            || (n >= 3 && abs <= n - 2)
    }

    /// `2(g + n - 1)`, the real dimension of the component and of its
    /// compactification.
    pub fn dimension(&self) -> Result<u64> {
        self.require_exists()?;
        Ok(2 * (u64::from(self.g) + u64::from(self.n) - 1))
    }

    pub(crate) fn require_exists(&self) -> Result<()> {
        let report = self.exists();
        if report.exists {
            Ok(())
        } else {
            Err(Error::Nonexistent {
                ty: self.to_string(),
                violated: report.violated,
            })
        }
    }

    /// Parses the text form `<g>,<n>,<eps>|<i1>,...[;<xi>]`.
    pub fn parse(text: &str) -> Result<Self> {
        Parser {
            s: text.as_bytes(),
            pos: 0,
        }
        .parse_type()
    }
}

fn negated_sorted(sorted: &[i64]) -> Vec<i64> {
    sorted.iter().rev().map(|i| -i).collect()
}

impl fmt::Display for TopType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}|", self.g, self.n, self.variant.eps())?;
        for (j, i) in self.indices.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        if let Some(xi) = self.xi {
            write!(f, ";{xi}")?;
        }
        Ok(())
    }
}

impl FromStr for TopType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TopType::parse(s)
    }
}

impl Serialize for TopType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TopType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos + 1,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn unsigned(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.err("expected a digit");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(v) if v <= u64::from(MAX_PARAM) => Ok(v),
            _ => {
                self.pos = start;
                self.err("number exceeds 65536")
            }
        }
    }

    fn signed(&mut self, allow_negative: bool) -> Result<i64> {
        if self.peek() == Some(b'-') {
            if !allow_negative {
                return self.err("negative index requires eps=1");
            }
            self.pos += 1;
            Ok(-(self.unsigned()? as i64))
        } else {
            Ok(self.unsigned()? as i64)
        }
    }

    fn parse_type(&mut self) -> Result<TopType> {
        let g = self.unsigned()? as u32;
        self.expect(b',')?;
        let n = self.unsigned()? as u32;
        self.expect(b',')?;
        let eps_pos = self.pos;
        let eps = self.unsigned()?;
        if eps > 1 {
            self.pos = eps_pos;
            return self.err("eps must be 0 or 1");
        }
        let separating = eps == 1;
        self.expect(b'|')?;
        let mut indices = Vec::new();
        if !matches!(self.peek(), None | Some(b';')) {
            loop {
                indices.push(self.signed(separating)?);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        let mut xi = None;
        if self.peek() == Some(b';') {
            if !separating {
                return self.err("xi requires eps=1");
            }
            self.pos += 1;
            xi = Some(self.unsigned()? as u32);
        }
        if self.pos != self.s.len() {
            return self.err("unexpected trailing input");
        }
        let variant = match (separating, xi) {
            (false, _) => Variant::NonSep,
            (true, None) => Variant::Sep,
            (true, Some(_)) => Variant::SepExt,
        };
        TopType::normalize(variant, g, n, &indices, xi)
    }
}
