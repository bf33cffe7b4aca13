//! Orbifold-level data: singular-graph vertex and cusp rules, ambient
//! spaces, and the Gram-matrix hyperbolicity test.
//!
//! Singular sets and boundary components are drawn as finite 3-regular
//! graphs with fat vertices and fat edges. Edge labels are integers > 1,
//! `∞`, or `∞̄`; a fat edge has fat endpoints, and a non-fat vertex with
//! incident labels p, q, r needs `1/p + 1/q + 1/r > 1`. The graph machinery
//! here is generic over caller-supplied graphs — which graph belongs to
//! which family is pictorial information that is not reconstructed.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::ExtExp;
use crate::presentation::Schema;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbifoldError {
    #[error("cusp classification needs an inf label, got {0}")]
    NotACuspEdge(ExtExp),
    #[error("a rank-1 cusp neighbourhood carries 0 or 2 order-2 cone arcs, got {0}")]
    ConeArcCount(u8),
    #[error("cross-section {0} does not occur for class-D orbifolds")]
    ExcludedForClassD(CuspCrossSection),
    #[error("graph validation failed: {0}")]
    InvalidGraph(String),
    #[error("Gram matrix needs n, m, q >= 2, got ({0}, {1}, {2})")]
    GramRange(u32, u32, u32),
}

/// Finite local group at a singular vertex, determined by the label triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum LocalGroup {
    /// Triple (2, 2, n): dihedral of order 2n.
    Dihedral { order: u32 },
    /// Triple (2, 3, 3).
    A4,
    /// Triple (2, 3, 4).
    S4,
    /// Triple (2, 3, 5).
    A5,
}

/// What a fat vertex contributes to the orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexClass {
    /// All labels finite with angle sum above 2π: an interior singular
    /// point.
    FiniteVertex { local_group: LocalGroup },
    /// All labels finite with `1/p + 1/q + 1/r = 1`: a puncture whose cusp
    /// cross-section is the Euclidean triangle orbifold.
    RigidCusp { triangle: (u32, u32, u32) },
    /// One label `∞` against two 2s: a puncture.
    Puncture22Inf,
    /// Removed together with its open neighbourhood: a boundary component.
    BoundaryRemoved,
}

/// Classify a fat vertex from the labels on its three incident edges.
/// Symmetric in the three arguments.
pub fn classify_fat_vertex(p: ExtExp, q: ExtExp, r: ExtExp) -> VertexClass {
    let mut fin = Vec::new();
    let mut inf_count = 0usize;
    let mut barinf = false;
    for label in [p, q, r] {
        match label {
            ExtExp::Fin(k) => fin.push(u64::from(k)),
            ExtExp::Inf => inf_count += 1,
            ExtExp::BarInf => barinf = true,
        }
    }
    if barinf || inf_count >= 2 {
        return VertexClass::BoundaryRemoved;
    }
    if inf_count == 1 {
        // 1/∞ + 1/q + 1/r = 1 forces q = r = 2
        return if fin == [2, 2] {
            VertexClass::Puncture22Inf
        } else {
            VertexClass::BoundaryRemoved
        };
    }
    fin.sort_unstable();
    let (a, b, c) = (fin[0], fin[1], fin[2]);
    // compare 1/a + 1/b + 1/c with 1 exactly
    let lhs = b * c + a * c + a * b;
    let rhs = a * b * c;
    if lhs > rhs {
        let local_group = match (a, b, c) {
            (2, 2, n) => LocalGroup::Dihedral {
                order: 2 * n as u32,
            },
            (2, 3, 3) => LocalGroup::A4,
            (2, 3, 4) => LocalGroup::S4,
            (2, 3, 5) => LocalGroup::A5,
            _ => unreachable!("spherical triples with labels >= 2 are (2,2,n), (2,3,3..5)"),
        };
        VertexClass::FiniteVertex { local_group }
    } else if lhs == rhs {
        VertexClass::RigidCusp {
            triangle: (a as u32, b as u32, c as u32),
        }
    } else {
        VertexClass::BoundaryRemoved
    }
}

/// Cross-section of a cusp coming from an `∞`-labelled edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CuspCrossSection {
    /// Rank-1 cusp on an open edge with removed endpoints.
    Annulus,
    /// Rank-1 cusp whose neighbourhood carries two order-2 cone arcs.
    DiscTwoCone2,
    /// Non-rigid rank-2 cusp on a closed loop. Never occurs for class D.
    Torus,
    /// Non-rigid rank-2 cusp, loop with four order-2 cone arcs. Never
    /// occurs for class D.
    Pillow,
}

impl fmt::Display for CuspCrossSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CuspCrossSection::Annulus => "annulus",
            CuspCrossSection::DiscTwoCone2 => "disc with two cone points of order 2",
            CuspCrossSection::Torus => "torus",
            CuspCrossSection::Pillow => "pillow",
        };
        write!(f, "{s}")
    }
}

/// Local data around an `∞`-labelled fat edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspEdgeContext {
    /// The edge closes into a loop (rank-2 cusp) rather than running
    /// between removed vertices (rank 1).
    pub closed_loop: bool,
    /// Order-2 cone arcs in the regular neighbourhood.
    pub order_two_cone_arcs: u8,
    /// The graph arises from class-D census data: torus and pillow
    /// cross-sections are then rejected.
    pub class_d: bool,
}

/// Classify the cusp carried by an `∞`-labelled edge.
pub fn classify_cusp_edge(
    label: ExtExp,
    ctx: CuspEdgeContext,
) -> Result<CuspCrossSection, OrbifoldError> {
    if label != ExtExp::Inf {
        return Err(OrbifoldError::NotACuspEdge(label));
    }
    let section = if ctx.closed_loop {
        if ctx.order_two_cone_arcs == 0 {
            CuspCrossSection::Torus
        } else {
            CuspCrossSection::Pillow
        }
    } else {
        match ctx.order_two_cone_arcs {
            0 => CuspCrossSection::Annulus,
            2 => CuspCrossSection::DiscTwoCone2,
            k => return Err(OrbifoldError::ConeArcCount(k)),
        }
    };
    if ctx.class_d && matches!(section, CuspCrossSection::Torus | CuspCrossSection::Pillow) {
        return Err(OrbifoldError::ExcludedForClassD(section));
    }
    Ok(section)
}

/// Where the orbifold of a family embeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "snake_case")]
pub enum AmbientSpace {
    S3,
    RP3,
    /// The Seifert fibre space glued from two n-fibred solid tori,
    /// homeomorphic to S² × S¹; n ∈ {2, 3}. For the S2 family the singular
    /// edge of order m lies on a critical fibre and the order-n edge on a
    /// regular one, and the second presentation generator is π-loxodromic.
    SeifertS {
        n: u32,
    },
    S2xS1,
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientSpace::S3 => write!(f, "S^3"),
            AmbientSpace::RP3 => write!(f, "RP^3"),
            AmbientSpace::SeifertS { n } => write!(f, "S({n})"),
            AmbientSpace::S2xS1 => write!(f, "S^2 x S^1"),
        }
    }
}

/// Ambient space per presentation schema.
pub fn ambient_space(schema: Schema) -> AmbientSpace {
    match schema {
        Schema::GT | Schema::PH | Schema::H | Schema::P | Schema::Tet | Schema::Tet6 => {
            AmbientSpace::S3
        }
        Schema::S2 | Schema::GTet2 => AmbientSpace::SeifertS { n: 2 },
        Schema::S3 => AmbientSpace::SeifertS { n: 3 },
        Schema::GTet1 => AmbientSpace::S2xS1,
        Schema::R => AmbientSpace::RP3,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphVertex {
    pub id: String,
    #[serde(default)]
    pub fat: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub a: String,
    pub b: String,
    #[serde(with = "label_repr")]
    pub label: ExtExp,
    #[serde(default)]
    pub fat: bool,
}

/// Schematic singular-set diagram: a finite 3-regular labelled graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularGraph {
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
}

// Edge labels serialize as an integer, "inf", or "barinf".
mod label_repr {
    use super::*;
    use serde::de::Error as _;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(u32),
        Tag(String),
    }

    pub fn serialize<S: serde::Serializer>(label: &ExtExp, ser: S) -> Result<S::Ok, S::Error> {
        match label {
            ExtExp::Fin(k) => Repr::Int(*k).serialize(ser),
            ExtExp::Inf => Repr::Tag("inf".into()).serialize(ser),
            ExtExp::BarInf => Repr::Tag("barinf".into()).serialize(ser),
        }
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(de: D) -> Result<ExtExp, D::Error> {
        match Repr::deserialize(de)? {
            Repr::Int(k) if k > 1 => Ok(ExtExp::Fin(k)),
            Repr::Int(k) => Err(D::Error::custom(format!(
                "edge label must exceed 1, got {k}"
            ))),
            Repr::Tag(t) => t.parse().map_err(D::Error::custom),
        }
    }
}

impl SingularGraph {
    pub fn from_json(json: &str) -> Result<SingularGraph, OrbifoldError> {
        let graph: SingularGraph =
            serde_json::from_str(json).map_err(|e| OrbifoldError::InvalidGraph(e.to_string()))?;
        graph.validate()?;
        Ok(graph)
    }

    /// 3-regularity, fat-edge endpoints, labels, and the non-fat vertex
    /// angle condition.
    pub fn validate(&self) -> Result<(), OrbifoldError> {
        let fail = |msg: String| Err(OrbifoldError::InvalidGraph(msg));
        let mut fat: HashMap<&str, bool> = HashMap::new();
        for v in &self.vertices {
            if fat.insert(v.id.as_str(), v.fat).is_some() {
                return fail(format!("duplicate vertex id {:?}", v.id));
            }
        }
        let mut incident: HashMap<&str, Vec<ExtExp>> = HashMap::new();
        for e in &self.edges {
            for end in [&e.a, &e.b] {
                if !fat.contains_key(end.as_str()) {
                    return fail(format!("edge endpoint {end:?} is not a vertex"));
                }
                incident.entry(end.as_str()).or_default().push(e.label);
            }
            if let ExtExp::Fin(k) = e.label {
                if k < 2 {
                    return fail(format!("edge label must exceed 1, got {k}"));
                }
            }
            if e.fat && !(fat[e.a.as_str()] && fat[e.b.as_str()]) {
                return fail(format!("fat edge {}–{} has a non-fat endpoint", e.a, e.b));
            }
        }
        for v in &self.vertices {
            let labels = incident.remove(v.id.as_str()).unwrap_or_default();
            if labels.len() != 3 {
                return fail(format!(
                    "vertex {:?} has degree {}, the graph must be 3-regular",
                    v.id,
                    labels.len()
                ));
            }
            if !v.fat {
                // infinite labels contribute 0 to the angle sum
                let sum: f64 = labels.iter().map(|l| l.recip()).sum();
                let exact = labels.iter().all(|l| l.is_finite());
                let ok = if exact {
                    let f: Vec<u64> = labels
                        .iter()
                        .map(|l| u64::from(l.finite().unwrap()))
                        .collect();
                    f[1] * f[2] + f[0] * f[2] + f[0] * f[1] > f[0] * f[1] * f[2]
                } else {
                    sum > 1.0
                };
                if !ok {
                    return fail(format!(
                        "non-fat vertex {:?} has 1/p + 1/q + 1/r <= 1",
                        v.id
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Gram matrix of the one-relator lens family `R[n,m;q]`:
///
/// ```text
/// ⎡      1      −cos(π/q)       0      −cos(π/2m) ⎤
/// ⎢ −cos(π/q)       1      −cos(π/2m)      0      ⎥
/// ⎢      0      −cos(π/2m)      1      −cos(π/n)  ⎥
/// ⎣ −cos(π/2m)      0      −cos(π/n)       1      ⎦
/// ```
///
/// The quotient orbifold is hyperbolic whenever the determinant is
/// negative.
pub fn gram_matrix(n: u32, m: u32, q: u32) -> Result<[[f64; 4]; 4], OrbifoldError> {
    if n < 2 || m < 2 || q < 2 {
        return Err(OrbifoldError::GramRange(n, m, q));
    }
    let cq = (PI / f64::from(q)).cos();
    let cm = (PI / (2.0 * f64::from(m))).cos();
    let cn = (PI / f64::from(n)).cos();
    Ok([
        [1.0, -cq, 0.0, -cm],
        [-cq, 1.0, -cm, 0.0],
        [0.0, -cm, 1.0, -cn],
        [-cm, 0.0, -cn, 1.0],
    ])
}

/// Determinant of [`gram_matrix`], by expansion in 3×3 minors along the
/// first row.
pub fn gram_det(n: u32, m: u32, q: u32) -> Result<f64, OrbifoldError> {
    let g = gram_matrix(n, m, q)?;
    Ok(det4(&g))
}

/// `det Δ < 0` certifies hyperbolicity of the R-family orbifold.
pub fn gram_is_hyperbolic(n: u32, m: u32, q: u32) -> Result<bool, OrbifoldError> {
    Ok(gram_det(n, m, q)? < 0.0)
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut det = 0.0;
    for col in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for (i, row) in m[1..].iter().enumerate() {
            let mut k = 0;
            for (j, &x) in row.iter().enumerate() {
                if j != col {
                    minor[i][k] = x;
                    k += 1;
                }
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m[0][col] * det3(&minor);
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(k: u32) -> ExtExp {
        ExtExp::Fin(k)
    }

    #[test]
    fn vertex_rules() {
        assert_eq!(
            classify_fat_vertex(fin(2), fin(3), fin(5)),
            VertexClass::FiniteVertex {
                local_group: LocalGroup::A5
            }
        );
        assert_eq!(
            classify_fat_vertex(fin(2), fin(2), fin(7)),
            VertexClass::FiniteVertex {
                local_group: LocalGroup::Dihedral { order: 14 }
            }
        );
        assert_eq!(
            classify_fat_vertex(fin(2), fin(4), fin(4)),
            VertexClass::RigidCusp {
                triangle: (2, 4, 4)
            }
        );
        assert_eq!(
            classify_fat_vertex(fin(6), fin(3), fin(2)),
            VertexClass::RigidCusp {
                triangle: (2, 3, 6)
            }
        );
        assert_eq!(
            classify_fat_vertex(fin(2), fin(3), fin(7)),
            VertexClass::BoundaryRemoved
        );
        assert_eq!(
            classify_fat_vertex(ExtExp::Inf, fin(2), fin(2)),
            VertexClass::Puncture22Inf
        );
        assert_eq!(
            classify_fat_vertex(ExtExp::Inf, fin(2), fin(3)),
            VertexClass::BoundaryRemoved
        );
        assert_eq!(
            classify_fat_vertex(ExtExp::BarInf, fin(2), fin(2)),
            VertexClass::BoundaryRemoved
        );
        // symmetric in its arguments
        assert_eq!(
            classify_fat_vertex(fin(5), fin(2), fin(3)),
            classify_fat_vertex(fin(3), fin(5), fin(2))
        );
    }

    #[test]
    fn cusp_rules() {
        let rank1 = |arcs| CuspEdgeContext {
            closed_loop: false,
            order_two_cone_arcs: arcs,
            class_d: true,
        };
        assert_eq!(
            classify_cusp_edge(ExtExp::Inf, rank1(0)).unwrap(),
            CuspCrossSection::Annulus
        );
        assert_eq!(
            classify_cusp_edge(ExtExp::Inf, rank1(2)).unwrap(),
            CuspCrossSection::DiscTwoCone2
        );
        assert!(matches!(
            classify_cusp_edge(fin(3), rank1(0)),
            Err(OrbifoldError::NotACuspEdge(_))
        ));
        let loop_ctx = CuspEdgeContext {
            closed_loop: true,
            order_two_cone_arcs: 0,
            class_d: true,
        };
        assert!(matches!(
            classify_cusp_edge(ExtExp::Inf, loop_ctx),
            Err(OrbifoldError::ExcludedForClassD(CuspCrossSection::Torus))
        ));
        let outside = CuspEdgeContext {
            closed_loop: true,
            order_two_cone_arcs: 0,
            class_d: false,
        };
        assert_eq!(
            classify_cusp_edge(ExtExp::Inf, outside).unwrap(),
            CuspCrossSection::Torus
        );
    }

    #[test]
    fn ambient_registry() {
        assert_eq!(ambient_space(Schema::GT), AmbientSpace::S3);
        assert_eq!(ambient_space(Schema::S3), AmbientSpace::SeifertS { n: 3 });
        assert_eq!(
            ambient_space(Schema::GTet2),
            AmbientSpace::SeifertS { n: 2 }
        );
        assert_eq!(ambient_space(Schema::GTet1), AmbientSpace::S2xS1);
        assert_eq!(ambient_space(Schema::R), AmbientSpace::RP3);
    }

    #[test]
    fn graph_io() {
        let json = r#"{
            "vertices": [{"id": "a", "fat": true}, {"id": "b", "fat": true}],
            "edges": [
                {"a": "a", "b": "b", "label": 3},
                {"a": "a", "b": "b", "label": "inf"},
                {"a": "a", "b": "b", "label": 2, "fat": true}
            ]
        }"#;
        let g = SingularGraph::from_json(json).unwrap();
        assert_eq!(g.edges[1].label, ExtExp::Inf);
        // degree violation
        let bad = r#"{
            "vertices": [{"id": "a", "fat": true}, {"id": "b", "fat": true}],
            "edges": [{"a": "a", "b": "b", "label": 3}]
        }"#;
        assert!(SingularGraph::from_json(bad).is_err());
        // non-fat vertex with hyperbolic triple
        let bad2 = r#"{
            "vertices": [{"id": "a", "fat": false}, {"id": "b", "fat": true}],
            "edges": [
                {"a": "a", "b": "b", "label": 2},
                {"a": "a", "b": "b", "label": 3},
                {"a": "a", "b": "b", "label": 7}
            ]
        }"#;
        assert!(SingularGraph::from_json(bad2).is_err());
    }

    #[test]
    fn gram_small_case_degenerates() {
        // blocks of the (2,2,2) matrix make det = (1 − cos²(π/4))² = 1/4
        let d = gram_det(2, 2, 2).unwrap();
        assert!((d - 0.25).abs() < 1e-12);
        assert!(!gram_is_hyperbolic(2, 2, 2).unwrap());
        assert!(gram_det(1, 2, 2).is_err());
    }

    #[test]
    fn gram_assembly_order_stable() {
        let a = gram_det(7, 3, 4).unwrap();
        let b = gram_det(7, 3, 4).unwrap();
        assert!((a - b).abs() < 1e-14);
        assert!((a - (-1.798994244662335)).abs() < 1e-12);
    }
}
