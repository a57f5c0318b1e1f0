//! Euler characteristics of a component and of its compactification.
//!
//! The component's characteristic is 0 or 1 in closed form. The
//! compactification's characteristic equals the multiplicity of the
//! Lyashko-Looijenga map over the stratum of two conjugate points of
//! multiplicity `g + n - 1`, which in turn counts decorated graphs. Closed
//! forms cover full degree, zero indices and extended types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerator::{enum_nonsep, enum_sep, EnumOptions};
use crate::topotype::{TopType, Variant};
use crate::{Error, Result};

/// The case analysis that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Route {
    /// Genus zero component, characteristic 1.
    ComponentG0,
    /// Component with characteristic 0.
    ComponentZero,
    /// Separating type with `|sum I| = n`.
    SepFullDegree,
    /// Some index or degree is zero.
    ZeroIndex,
    GraphCountNonsep,
    GraphCountSep,
    /// Extended separating type with nonzero degrees.
    ExtOne,
}

impl Route {
    pub const ALL: [Route; 7] = [
        Route::ComponentG0,
        Route::ComponentZero,
        Route::SepFullDegree,
        Route::ZeroIndex,
        Route::GraphCountNonsep,
        Route::GraphCountSep,
        Route::ExtOne,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::ComponentG0 => "COMPONENT_G0",
            Route::ComponentZero => "COMPONENT_ZERO",
            Route::SepFullDegree => "SEP_FULL_DEGREE",
            Route::ZeroIndex => "ZERO_INDEX",
            Route::GraphCountNonsep => "GRAPH_COUNT_NONSEP",
            Route::GraphCountSep => "GRAPH_COUNT_SEP",
            Route::ExtOne => "EXT_ONE",
        }
    }

    pub fn is_graph_count(self) -> bool {
        matches!(self, Route::GraphCountNonsep | Route::GraphCountSep)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown route {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiResult {
    pub value: u64,
    pub route: Route,
    /// Set exactly when `route` is a graph count, and then equal to `value`.
    pub graph_count: Option<u64>,
}

impl ChiResult {
    fn closed(value: u64, route: Route) -> Self {
        ChiResult {
            value,
            route,
            graph_count: None,
        }
    }

    fn counted(count: usize, route: Route) -> Self {
        let count = count as u64;
        ChiResult {
            value: count,
            route,
            graph_count: Some(count),
        }
    }
}

impl fmt::Display for ChiResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "value={} route={}", self.value, self.route)?;
        if let Some(c) = self.graph_count {
            write!(f, " graphs={c}")?;
        }
        Ok(())
    }
}

/// A separating type that admits extension is a union of components, one per
/// `xi`; callers must name the component.
fn reject_unrefined(t: &TopType) -> Result<()> {
    if t.variant() == Variant::Sep && t.admits_extension() {
        return Err(Error::AdmitsExtension(t.to_string()));
    }
    Ok(())
}

/// Euler characteristic of the component of type `t`.
pub fn chi_component(t: &TopType) -> Result<ChiResult> {
    t.require_exists()?;
    reject_unrefined(t)?;
    let one = match t.variant() {
        Variant::NonSep => t.g() == 0,
        Variant::Sep => {
            t.g() == 0
                && t.indices()
                    .first()
                    .is_some_and(|i| i.unsigned_abs() == u64::from(t.n()))
        }
        Variant::SepExt => false,
    };
    Ok(if one {
        ChiResult::closed(1, Route::ComponentG0)
    } else {
        ChiResult::closed(0, Route::ComponentZero)
    })
}

/// Euler characteristic of the compactification of the component of type
/// `t`. Graph counts use `opts`; with the short-circuit disabled, separating
/// types of full degree are counted by enumeration as well.
pub fn chi_compactification(t: &TopType, opts: &EnumOptions) -> Result<ChiResult> {
    t.require_exists()?;
    reject_unrefined(t)?;
    match t.variant() {
        Variant::NonSep => {
            if t.has_zero_index() {
                return Ok(ChiResult::closed(0, Route::ZeroIndex));
            }
            Ok(ChiResult::counted(
                enum_nonsep(t, opts)?.len(),
                Route::GraphCountNonsep,
            ))
        }
        Variant::Sep => {
            let full = t.index_sum().unsigned_abs() == u64::from(t.n());
            if full && opts.shortcircuit {
                return Ok(ChiResult::closed(1, Route::SepFullDegree));
            }
            if t.has_zero_index() {
                return Ok(ChiResult::closed(0, Route::ZeroIndex));
            }
            Ok(ChiResult::counted(
                enum_sep(t, opts)?.len(),
                Route::GraphCountSep,
            ))
        }
        Variant::SepExt => {
            if t.has_zero_index() {
                Ok(ChiResult::closed(0, Route::ZeroIndex))
            } else {
                Ok(ChiResult::closed(1, Route::ExtOne))
            }
        }
    }
}
