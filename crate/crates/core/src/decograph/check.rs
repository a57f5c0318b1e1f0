use std::fmt;

use serde::Serialize;

use super::{Color, DecoratedGraph, GammaOrder};
use crate::topotype::{TopType, Variant};
use crate::{Error, Result};

/// A failed constraint of the graph definitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Violation {
    NotBipartite {
        edge: usize,
    },
    Disconnected,
    RootDegree {
        vertex: usize,
        degree: usize,
    },
    RootWeight {
        vertex: usize,
    },
    UnbalancedColors {
        white: usize,
        black: usize,
    },
    GenusEquation {
        expected: i64,
        actual: i64,
    },
    DegreeEquation {
        expected: i64,
        actual: i64,
    },
    RootCount {
        color: Color,
        expected: usize,
        actual: usize,
    },
    RootWeights {
        color: Color,
    },
    GammaMissing,
    GammaUnexpected,
    GammaNotInvolution,
    GammaColor {
        vertex: usize,
    },
    GammaVertexWeight {
        vertex: usize,
    },
    GammaRoot {
        vertex: usize,
    },
    GammaNotAutomorphism,
    GammaOddSwappedEdge {
        edge: usize,
    },
}

impl Violation {
    /// Short name of the violated clause.
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::NotBipartite { .. } => "bipartite",
            Violation::Disconnected => "connected",
            Violation::RootDegree { .. } => "root degree",
            Violation::RootWeight { .. } => "root weight",
            Violation::UnbalancedColors { .. } => "color balance",
            Violation::GenusEquation { .. } => "genus equation",
            Violation::DegreeEquation { .. } => "degree equation",
            Violation::RootCount { .. } => "root-color counts",
            Violation::RootWeights { .. } => "root edge weights",
            Violation::GammaMissing => "gamma present",
            Violation::GammaUnexpected => "gamma absent",
            Violation::GammaNotInvolution => "gamma involution",
            Violation::GammaColor { .. } => "gamma swaps colors",
            Violation::GammaVertexWeight { .. } => "gamma preserves vertex weights",
            Violation::GammaRoot { .. } => "gamma preserves roots",
            Violation::GammaNotAutomorphism => "gamma preserves edges",
            Violation::GammaOddSwappedEdge { .. } => "gamma even on swapped edges",
        }
    }

    pub(crate) fn is_gamma(&self) -> bool {
        matches!(
            self,
            Violation::GammaMissing
                | Violation::GammaUnexpected
                | Violation::GammaNotInvolution
                | Violation::GammaColor { .. }
                | Violation::GammaVertexWeight { .. }
                | Violation::GammaRoot { .. }
                | Violation::GammaNotAutomorphism
                | Violation::GammaOddSwappedEdge { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.clause())?;
        match self {
            Violation::NotBipartite { edge } => write!(f, ": edge {edge} joins equal colors"),
            Violation::RootDegree { vertex, degree } => {
                write!(f, ": root {vertex} has degree {degree}")
            }
            Violation::RootWeight { vertex } => write!(f, ": root {vertex} has nonzero weight"),
            Violation::UnbalancedColors { white, black } => {
                write!(f, ": {white} white vs {black} black")
            }
            Violation::GenusEquation { expected, actual }
            | Violation::DegreeEquation { expected, actual } => {
                write!(f, ": expected {expected}, graph gives {actual}")
            }
            Violation::RootCount {
                color,
                expected,
                actual,
            } => {
                write!(f, ": {color:?} roots {actual}, expected {expected}")
            }
            Violation::RootWeights { color } => write!(f, ": {color:?} root edges do not match I"),
            Violation::GammaColor { vertex }
            | Violation::GammaVertexWeight { vertex }
            | Violation::GammaRoot { vertex } => write!(f, ": at vertex {vertex}"),
            Violation::GammaOddSwappedEdge { edge } => write!(f, ": edge {edge}"),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ViolationList(pub Vec<Violation>);

impl ViolationList {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Violation> {
        self.0.iter()
    }

    pub fn contains_clause(&self, clause: &str) -> bool {
        self.0.iter().any(|v| v.clause() == clause)
    }

    fn push(&mut self, v: Violation) {
        self.0.push(v);
    }
}

impl fmt::Display for ViolationList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, v) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn require_graph_type(t: &TopType, variant: Variant) -> Result<()> {
    if t.variant() != variant {
        return Err(Error::Precondition(format!(
            "{t} is not a {variant:?} type"
        )));
    }
    t.require_exists()?;
    if t.has_zero_index() {
        return Err(Error::ZeroIndex(t.to_string()));
    }
    Ok(())
}

/// Bipartite, connected, and roots are weight-zero leaves.
fn check_structure(g: &DecoratedGraph, out: &mut ViolationList) {
    for (id, e) in g.edges().iter().enumerate() {
        if g.vertices()[e.u].color == g.vertices()[e.v].color {
            out.push(Violation::NotBipartite { edge: id });
        }
    }
    if !g.is_connected() {
        out.push(Violation::Disconnected);
    }
    let deg = g.degrees();
    for (id, v) in g.vertices().iter().enumerate() {
        if v.root {
            if deg[id] != 1 {
                out.push(Violation::RootDegree {
                    vertex: id,
                    degree: deg[id],
                });
            }
            if v.weight != 0 {
                out.push(Violation::RootWeight { vertex: id });
            }
        }
    }
}

/// For each root vertex of `color` that is a leaf, the weight of its edge.
fn root_edge_weights(g: &DecoratedGraph, color: Color) -> Vec<u32> {
    let adj = g.adjacency();
    let mut out: Vec<u32> = g
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.root && v.color == color)
        .filter_map(|(id, _)| match adj[id].as_slice() {
            [(_, w)] => Some(*w),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}

fn roots_of(g: &DecoratedGraph, color: Color) -> usize {
    g.vertices()
        .iter()
        .filter(|v| v.root && v.color == color)
        .count()
}

fn vertex_weight_sum(g: &DecoratedGraph) -> i64 {
    g.vertices().iter().map(|v| i64::from(v.weight)).sum()
}

fn edge_weight_sum(g: &DecoratedGraph) -> i64 {
    g.edges().iter().map(|e| i64::from(e.weight)).sum()
}

fn check_gamma(g: &DecoratedGraph, order: GammaOrder, out: &mut ViolationList) {
    let Some(gamma) = g.gamma() else {
        out.push(Violation::GammaMissing);
        return;
    };
    if order == GammaOrder::Involution && gamma.iter().enumerate().any(|(v, &w)| gamma[w] != v) {
        out.push(Violation::GammaNotInvolution);
    }
    for (id, v) in g.vertices().iter().enumerate() {
        let img = g.vertices()[gamma[id]];
        if img.color == v.color {
            out.push(Violation::GammaColor { vertex: id });
        }
        if img.weight != v.weight {
            out.push(Violation::GammaVertexWeight { vertex: id });
        }
        if img.root != v.root {
            out.push(Violation::GammaRoot { vertex: id });
        }
    }
    if g.mapped_edge_multiset(gamma) != g.edge_multiset() {
        out.push(Violation::GammaNotAutomorphism);
    }
    for (id, e) in g.edges().iter().enumerate() {
        if gamma[e.u] == e.v && gamma[e.v] == e.u && e.weight % 2 == 1 {
            out.push(Violation::GammaOddSwappedEdge { edge: id });
        }
    }
}

/// Checks `g` against the non-separating graph definition for type `t`,
/// requiring `gamma` to be an involution.
pub fn check_nonsep(g: &DecoratedGraph, t: &TopType) -> Result<ViolationList> {
    check_nonsep_with(g, t, GammaOrder::Involution)
}

pub fn check_nonsep_with(
    g: &DecoratedGraph,
    t: &TopType,
    order: GammaOrder,
) -> Result<ViolationList> {
    require_graph_type(t, Variant::NonSep)?;
    let mut out = ViolationList::default();
    check_structure(g, &mut out);

    let white = g.count_color(Color::White);
    let black = g.count_color(Color::Black);
    if white != black {
        out.push(Violation::UnbalancedColors { white, black });
    }

    let k = t.k() as i64;
    let genus = k + g.edge_count() as i64 - g.vertex_count() as i64 + 1 + vertex_weight_sum(g);
    if genus != i64::from(t.g()) {
        out.push(Violation::GenusEquation {
            expected: t.g().into(),
            actual: genus,
        });
    }
    let degree = edge_weight_sum(g) - t.index_sum();
    if degree != i64::from(t.n()) {
        out.push(Violation::DegreeEquation {
            expected: t.n().into(),
            actual: degree,
        });
    }

    let expected: Vec<u32> = t.indices().iter().map(|&i| i as u32).collect();
    for color in [Color::White, Color::Black] {
        let actual = roots_of(g, color);
        if actual != t.k() {
            out.push(Violation::RootCount {
                color,
                expected: t.k(),
                actual,
            });
        } else if root_edge_weights(g, color) != expected {
            out.push(Violation::RootWeights { color });
        }
    }

    check_gamma(g, order, &mut out);
    Ok(out)
}

/// Checks `g` against the separating graph definition for type `t`, reading
/// the degrees as stored in the normal form of `t`.
pub fn check_sep(g: &DecoratedGraph, t: &TopType) -> Result<ViolationList> {
    check_sep_against(g, t, t.indices().to_vec())
}

/// As [`check_sep`], but against the opposite orientation `-I`. Both
/// orientations name the same type; recoloring a graph moves it between them.
pub fn check_sep_negated(g: &DecoratedGraph, t: &TopType) -> Result<ViolationList> {
    let mut degrees: Vec<i64> = t.indices().iter().map(|i| -i).collect();
    degrees.sort_unstable();
    check_sep_against(g, t, degrees)
}

fn check_sep_against(g: &DecoratedGraph, t: &TopType, degrees: Vec<i64>) -> Result<ViolationList> {
    require_graph_type(t, Variant::Sep)?;
    let mut out = ViolationList::default();
    check_structure(g, &mut out);
    if g.gamma().is_some() {
        out.push(Violation::GammaUnexpected);
    }

    let k = t.k() as i64;
    let cycles = g.edge_count() as i64 - g.vertex_count() as i64 + 1;
    let genus = (k - 1) + 2 * cycles + 2 * vertex_weight_sum(g);
    if genus != i64::from(t.g()) {
        out.push(Violation::GenusEquation {
            expected: t.g().into(),
            actual: genus,
        });
    }
    let degree = 2 * edge_weight_sum(g) - t.abs_sum();
    if degree != i64::from(t.n()) {
        out.push(Violation::DegreeEquation {
            expected: t.n().into(),
            actual: degree,
        });
    }

    let white_expected: Vec<u32> = degrees
        .iter()
        .filter(|&&i| i < 0)
        .rev()
        .map(|&i| (-i) as u32)
        .collect();
    let black_expected: Vec<u32> = degrees
        .iter()
        .filter(|&&i| i > 0)
        .map(|&i| i as u32)
        .collect();
    for (color, expected) in [
        (Color::White, white_expected),
        (Color::Black, black_expected),
    ] {
        let actual = roots_of(g, color);
        if actual != expected.len() {
            out.push(Violation::RootCount {
                color,
                expected: expected.len(),
                actual,
            });
        } else if root_edge_weights(g, color) != expected {
            out.push(Violation::RootWeights { color });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::graph;
    use super::*;
    use Color::{Black as B, White as W};

    fn ns(g: u32, n: u32, i: &[i64]) -> TopType {
        TopType::non_sep(g, n, i).unwrap()
    }

    fn sp(g: u32, n: u32, i: &[i64]) -> TopType {
        TopType::sep(g, n, i).unwrap()
    }

    #[test]
    fn running_example_nonsep_path_is_valid() {
        let v = check_nonsep(&nonsep_path(), &ns(1, 3, &[1])).unwrap();
        assert!(v.is_empty(), "{v}");
    }

    #[test]
    fn heavier_middle_edge_breaks_degree_equation() {
        let g = graph(
            &[(W, 0, true), (B, 0, false), (W, 0, false), (B, 0, true)],
            &[(0, 1, 1), (1, 2, 3), (2, 3, 1)],
            Some(&[3, 2, 1, 0]),
        )
        .unwrap();
        let v = check_nonsep(&g, &ns(1, 3, &[1])).unwrap();
        assert_eq!(
            v.0,
            vec![
                Violation::DegreeEquation {
                    expected: 3,
                    actual: 4
                },
                Violation::GammaOddSwappedEdge { edge: 1 },
            ]
        );
    }

    #[test]
    fn even_single_edge_is_valid_for_empty_index_list() {
        let v = check_nonsep(&single_edge(2, true), &ns(0, 2, &[])).unwrap();
        assert!(v.is_empty(), "{v}");
        let odd = check_nonsep(&single_edge(3, true), &ns(0, 2, &[])).unwrap();
        assert!(odd.contains_clause("gamma even on swapped edges"));
        let bare = check_nonsep(&single_edge(2, false), &ns(0, 2, &[])).unwrap();
        assert_eq!(bare.0, vec![Violation::GammaMissing]);
    }

    #[test]
    fn worked_separating_graphs_are_valid() {
        let v = check_sep(&sep_path(), &sp(1, 3, &[1, 2])).unwrap();
        assert!(v.is_empty(), "{v}");
        let v = check_sep(&sep_edge(), &sp(0, 2, &[2])).unwrap();
        assert!(v.is_empty(), "{v}");
    }

    #[test]
    fn flipped_root_colors_are_rejected() {
        let g = sep_path().recolored();
        let v = check_sep(&g, &sp(1, 3, &[1, 2])).unwrap();
        assert!(v.contains_clause("root-color counts"), "{v}");
        assert!(check_sep_negated(&g, &sp(1, 3, &[1, 2]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn mixed_signs_match_root_colors() {
        // Path: white root -1- black -2- white -1- black root; degrees (-1, 1).
        let t = sp(1, 6, &[-1, 1]);
        let g = graph(
            &[(W, 0, true), (B, 0, false), (W, 0, false), (B, 0, true)],
            &[(0, 1, 1), (1, 2, 2), (2, 3, 1)],
            None,
        )
        .unwrap();
        assert!(check_sep(&g, &t).unwrap().is_empty());
        let heavy = graph(
            &[(W, 0, true), (B, 0, false), (W, 0, false), (B, 0, true)],
            &[(0, 1, 2), (1, 2, 1), (2, 3, 1)],
            None,
        )
        .unwrap();
        let v = check_sep(&heavy, &t).unwrap();
        assert!(v.contains_clause("root edge weights"), "{v}");
    }

    #[test]
    fn structural_violations() {
        let g = graph(
            &[(W, 1, true), (W, 0, false), (B, 0, false)],
            &[(0, 1, 1), (0, 2, 1)],
            None,
        )
        .unwrap();
        let v = check_sep(&g, &sp(0, 2, &[2])).unwrap();
        assert!(v.contains_clause("bipartite"));
        assert!(v.contains_clause("root degree"));
        assert!(v.contains_clause("root weight"));
        let disconnected = graph(&[(W, 0, false), (B, 0, true)], &[], None).unwrap();
        assert!(check_sep(&disconnected, &sp(0, 2, &[2]))
            .unwrap()
            .contains_clause("connected"));
    }

    #[test]
    fn gamma_must_be_an_involution_unless_relaxed() {
        // 4-cycle w0 b1 w2 b3 with gamma a rotation of order 4.
        let t = ns(1, 4, &[]);
        let g = graph(
            &[(W, 0, false), (B, 0, false), (W, 0, false), (B, 0, false)],
            &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)],
            Some(&[1, 2, 3, 0]),
        )
        .unwrap();
        let strict = check_nonsep(&g, &t).unwrap();
        assert_eq!(strict.0, vec![Violation::GammaNotInvolution]);
        assert!(check_nonsep_with(&g, &t, GammaOrder::Any)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            check_nonsep(&single_edge(2, true), &ns(2, 4, &[0, 0])),
            Err(Error::ZeroIndex(_))
        ));
        assert!(matches!(
            check_sep(&sep_edge(), &ns(1, 3, &[1])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_nonsep(&single_edge(2, true), &ns(0, 3, &[1])),
            Err(Error::Nonexistent { .. })
        ));
    }
}
