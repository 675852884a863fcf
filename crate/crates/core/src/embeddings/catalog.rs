//! Built-in catalog of published unit-distance and (1,d) constructions:
//! the extremal-edge-count witnesses for 1..=16 vertices, the Moser
//! spindle, a UDR-but-not-faithful hexagon wheel, and eight 5-vertex
//! bicolored graphs with exact coordinates.

use super::{Embedding, EmbeddingError};
use crate::geometry::{dist2, Point, Scalar, Tolerance};
use crate::graphs::{BicoloredGraph, EdgeLabel, SimpleGraph};
use crate::symbolic::Expr;
use std::collections::BTreeMap;

/// The underlying combinatorial object of a catalog entry.
#[derive(Clone, Debug)]
pub enum CatalogGraph {
    Simple(SimpleGraph),
    Bicolored(BicoloredGraph),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: CatalogGraph,
    pub embedding: Embedding,
    /// Target length of D edges (bicolored entries only).
    pub d: Option<Scalar>,
    pub d_symbolic: Option<&'static str>,
    pub description: String,
    /// Provenance or discrepancy notes attached to this entry.
    pub notes: Vec<String>,
    pub vertex_names: Vec<String>,
}

impl CatalogEntry {
    /// The simple graph of this entry (panics on bicolored entries).
    pub fn simple(&self) -> &SimpleGraph {
        match &self.graph {
            CatalogGraph::Simple(g) => g,
            CatalogGraph::Bicolored(_) => panic!("{} is a bicolored entry", self.name),
        }
    }

    /// The bicolored graph of this entry (panics on simple entries).
    pub fn bicolored(&self) -> &BicoloredGraph {
        match &self.graph {
            CatalogGraph::Bicolored(g) => g,
            CatalogGraph::Simple(_) => panic!("{} is a simple entry", self.name),
        }
    }
}

/// Names of all catalog entries, in stable order.
pub fn catalog_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = (1..=16).map(schade_name).collect();
    names.push("moser-spindle");
    names.push("hexagon-nonfaithful");
    names.extend((1..=8).map(one_d_name));
    names
}

fn schade_name(n: usize) -> &'static str {
    const NAMES: [&str; 16] = [
        "schade-1", "schade-2", "schade-3", "schade-4", "schade-5", "schade-6", "schade-7",
        "schade-8", "schade-9", "schade-10", "schade-11", "schade-12", "schade-13", "schade-14",
        "schade-15", "schade-16",
    ];
    NAMES[n - 1]
}

fn one_d_name(k: usize) -> &'static str {
    const NAMES: [&str; 8] = [
        "one-d-1", "one-d-2", "one-d-3", "one-d-4", "one-d-5", "one-d-6", "one-d-7", "one-d-8",
    ];
    NAMES[k - 1]
}

/// Looks up a catalog entry by name.
pub fn catalog(name: &str) -> Result<CatalogEntry, EmbeddingError> {
    for n in 1..=16 {
        if name == schade_name(n) {
            return Ok(schade_entry(n));
        }
    }
    if name == "moser-spindle" {
        return Ok(moser_spindle());
    }
    if name == "hexagon-nonfaithful" {
        return Ok(hexagon_nonfaithful());
    }
    for k in 1..=8 {
        if name == one_d_name(k) {
            return Ok(one_d_entry(k));
        }
    }
    Err(EmbeddingError::UnknownName(name.into()))
}

fn eval_points(coords: &[(Expr, Expr)]) -> Embedding {
    Embedding::new(
        coords
            .iter()
            .map(|(x, y)| Point::new(x.eval(), y.eval()))
            .collect(),
    )
}

/// Derives the unit graph of an embedding; used for entries whose edge set
/// is defined as "all unit pairs" of the coordinate witness.
fn derive_unit_graph(emb: &Embedding) -> SimpleGraph {
    emb.unit_graph(&Tolerance::default())
}

/// Derives a bicolored graph by classifying every pair at distance 1 (UNIT)
/// or d (D); other pairs stay non-edges.
fn derive_bicolored(emb: &Embedding, d: &Scalar) -> BicoloredGraph {
    let tol = Tolerance::default();
    let one = Scalar::one();
    let d2 = d.clone().square();
    let mut base = SimpleGraph::new(emb.len());
    let mut labels = BTreeMap::new();
    for i in 0..emb.len() {
        for j in i + 1..emb.len() {
            let q = dist2(&emb.points[i], &emb.points[j]);
            if (&q - &one).abs() <= tol.eps2 {
                base.add_edge(i, j).unwrap();
                labels.insert((i, j), EdgeLabel::Unit);
            } else if (&q - &d2).abs() <= tol.eps2 {
                base.add_edge(i, j).unwrap();
                labels.insert((i, j), EdgeLabel::D);
            }
        }
    }
    BicoloredGraph::from_parts(base, labels).unwrap()
}

// ---------------------------------------------------------------------------
// The 16-vertex coordinate witness and its induced subgraphs.
// ---------------------------------------------------------------------------

/// Coordinates of the 16-point witness, vertex order A..P.
/// x and y are combinations of rationals and sqrt(3), sqrt(11), sqrt(33):
/// sqrt(11/48) = sqrt(33)/12, sqrt(11/16) = sqrt(11)/4, sqrt(1/48) = sqrt(3)/12.
fn sixteen_point_coords() -> Vec<(Expr, Expr)> {
    let r = Expr::rat;
    let t = Expr::term;
    let a2 = |u: Expr, v: Expr| Expr::add(vec![u, v]);
    vec![
        (r(-1, 2), r(0, 1)),                                        // A
        (r(1, 2), r(0, 1)),                                         // B
        (r(0, 1), t(1, 2, 11)),                                     // C
        (r(0, 1), t(-1, 2, 11)),                                    // D
        (a2(r(-1, 4), t(-1, 12, 33)), a2(t(-1, 4, 11), t(-1, 12, 3))), // E
        (a2(r(1, 4), t(-1, 12, 33)), a2(t(-1, 4, 11), t(1, 12, 3))),   // F
        (a2(r(-1, 4), t(1, 12, 33)), a2(t(-1, 4, 11), t(1, 12, 3))),   // G
        (a2(r(1, 4), t(1, 12, 33)), a2(t(-1, 4, 11), t(-1, 12, 3))),   // H
        (a2(r(1, 4), t(1, 12, 33)), a2(t(1, 4, 11), t(1, 12, 3))),     // I
        (a2(r(-1, 4), t(1, 12, 33)), a2(t(1, 4, 11), t(-1, 12, 3))),   // J
        (a2(r(1, 4), t(-1, 12, 33)), a2(t(1, 4, 11), t(-1, 12, 3))),   // K
        (a2(r(-1, 4), t(-1, 12, 33)), a2(t(1, 4, 11), t(1, 12, 3))),   // L
        (t(-1, 6, 33), r(0, 1)),                                    // M
        (t(1, 6, 33), r(0, 1)),                                     // N
        (r(0, 1), t(-1, 6, 3)),                                     // O
        (r(0, 1), t(1, 6, 3)),                                      // P
    ]
}

const SIXTEEN_NAMES: [&str; 16] = [
    "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N", "O", "P",
];

fn sixteen_indices(letters: &str) -> Vec<usize> {
    letters
        .chars()
        .map(|c| (c as u8 - b'A') as usize)
        .collect()
}

/// Triangular lattice point (i, j) -> i*(1,0) + j*(1/2, sqrt3/2).
fn tri(i: i64, j: i64) -> (Expr, Expr) {
    (
        Expr::add(vec![Expr::int(i), Expr::rat(j, 2)]),
        Expr::term(j, 2, 3),
    )
}

fn schade_entry(n: usize) -> CatalogEntry {
    // Triangular-grid witnesses for small n; induced subsets of the
    // 16-point witness elsewhere.
    let grid: Option<Vec<(i64, i64)>> = match n {
        1 => Some(vec![(0, 0)]),
        2 => Some(vec![(0, 0), (1, 0)]),
        3 => Some(vec![(0, 0), (1, 0), (0, 1)]),
        4 => Some(vec![(0, 0), (1, 0), (0, 1), (1, 1)]),
        5 => Some(vec![(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)]),
        7 => Some(vec![(0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]),
        _ => None,
    };
    let mut notes: Vec<String> = Vec::new();
    let (coords, vertex_names): (Vec<(Expr, Expr)>, Vec<String>) = if let Some(g) = grid {
        let names = (0..g.len()).map(|i| format!("v{i}")).collect();
        (g.into_iter().map(|(i, j)| tri(i, j)).collect(), names)
    } else {
        let letters = match n {
            6 => "CLJKMO",
            8 => "CLJKMAOE",
            9 => "CLIKJPMNO",
            10 => "CLIKJPMNOB",
            11 => "CLIKJPMNOBF",
            12 => "CLIKJPMNOBFH",
            13 => "CLIKJPMNOBFHA",
            14 => "LIKJPMNOBFHAGE",
            15 => "ABCEFGHIJKLMNOP",
            16 => "ABCDEFGHIJKLMNOP",
            _ => unreachable!(),
        };
        match n {
            6 => notes.push(
                "source prints the vertex set {C,L,J,K,M,D}, which induces only 6 unit pairs; \
                 O in place of D restores the tabulated 9 and is used here (discrepancy note)"
                    .into(),
            ),
            8 => notes.push("one of several extremal witnesses on 8 vertices".into()),
            11 | 14 => notes.push(format!(
                "one of two tabulated extremal witnesses on {n} vertices"
            )),
            15 | 16 => notes.push(
                "maximal known edge count, recorded as a lower-bound witness only".into(),
            ),
            _ => {}
        }
        let all = sixteen_point_coords();
        let idx = sixteen_indices(letters);
        (
            idx.iter().map(|&i| all[i].clone()).collect(),
            idx.iter().map(|&i| SIXTEEN_NAMES[i].to_string()).collect(),
        )
    };
    let embedding = eval_points(&coords);
    let graph = derive_unit_graph(&embedding);
    CatalogEntry {
        name: schade_name(n),
        graph: CatalogGraph::Simple(graph),
        embedding,
        d: None,
        d_symbolic: None,
        description: format!("extremal unit-distance witness on {n} vertices"),
        notes,
        vertex_names,
    }
}

fn moser_spindle() -> CatalogEntry {
    // Two unit rhombi sharing the vertex A; the second is the first rotated
    // about A by the angle with cos = 5/6, sin = sqrt(11)/6, which puts the
    // far tips D and G at distance exactly 1.
    let coords = vec![
        (Expr::int(0), Expr::int(0)),                                     // A
        (Expr::term(1, 2, 3), Expr::rat(1, 2)),                           // B
        (Expr::term(1, 2, 3), Expr::rat(-1, 2)),                          // C
        (Expr::sqrt_int(3), Expr::int(0)),                                // D
        (
            Expr::add(vec![Expr::term(5, 12, 3), Expr::term(-1, 12, 11)]),
            Expr::add(vec![Expr::term(1, 12, 33), Expr::rat(5, 12)]),
        ), // E
        (
            Expr::add(vec![Expr::term(5, 12, 3), Expr::term(1, 12, 11)]),
            Expr::add(vec![Expr::term(1, 12, 33), Expr::rat(-5, 12)]),
        ), // F
        (Expr::term(5, 6, 3), Expr::term(1, 6, 33)),                      // G
    ];
    let embedding = eval_points(&coords);
    let graph = SimpleGraph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (4, 5),
            (4, 6),
            (5, 6),
            (3, 6),
        ],
    )
    .unwrap();
    CatalogEntry {
        name: "moser-spindle",
        graph: CatalogGraph::Simple(graph),
        embedding,
        d: None,
        d_symbolic: None,
        description: "Moser spindle: 7 vertices, 11 edges, chromatic number 4".into(),
        notes: vec![],
        vertex_names: "ABCDEFG".chars().map(String::from).collect(),
    }
}

fn hexagon_nonfaithful() -> CatalogEntry {
    // Hexagon wheel with one spoke (A-G) removed from the edge set: the
    // embedding is forced to keep G at distance 1 from A, so the entry is a
    // UDR but not faithful.
    let coords = vec![
        (Expr::int(0), Expr::int(0)),            // A (center)
        (Expr::rat(1, 2), Expr::term(1, 2, 3)),  // B
        (Expr::rat(-1, 2), Expr::term(1, 2, 3)), // C
        (Expr::int(-1), Expr::int(0)),           // D
        (Expr::rat(-1, 2), Expr::term(-1, 2, 3)), // E
        (Expr::rat(1, 2), Expr::term(-1, 2, 3)), // F
        (Expr::int(1), Expr::int(0)),            // G
    ];
    let embedding = eval_points(&coords);
    let graph = SimpleGraph::from_edges(
        7,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 1),
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
        ],
    )
    .unwrap();
    CatalogEntry {
        name: "hexagon-nonfaithful",
        graph: CatalogGraph::Simple(graph),
        embedding,
        d: None,
        d_symbolic: None,
        description: "hexagon wheel without the A-G spoke: UDR but not faithful".into(),
        notes: vec!["any UDR of this graph places G at distance 1 from A".into()],
        vertex_names: "ABCDEFG".chars().map(String::from).collect(),
    }
}

fn scale_coords(coords: &[(Expr, Expr)], factor: &Expr) -> Vec<(Expr, Expr)> {
    coords
        .iter()
        .map(|(x, y)| {
            (
                Expr::mul(vec![factor.clone(), x.clone()]),
                Expr::mul(vec![factor.clone(), y.clone()]),
            )
        })
        .collect()
}

fn one_d_coords_1() -> Vec<(Expr, Expr)> {
    // Two unit triangles sharing apex A, symmetric about the y axis, with
    // arms at 15 and 75 degrees; the crossing distances are exactly sqrt 2.
    let c15 = Expr::add(vec![Expr::term(1, 4, 6), Expr::term(1, 4, 2)]); // cos 15
    let s15 = Expr::add(vec![Expr::term(1, 4, 6), Expr::term(-1, 4, 2)]); // sin 15
    vec![
        (Expr::int(0), Expr::int(0)),           // A
        (c15.clone(), s15.clone()),             // B
        (s15.clone(), c15.clone()),             // C
        (Expr::neg(s15.clone()), c15.clone()),  // D
        (Expr::neg(c15), s15),                  // E
    ]
}

fn one_d_coords_7() -> Vec<(Expr, Expr)> {
    // Regular pentagon with unit sides: circumradius R = sqrt((5+sqrt5)/10),
    // vertices at 90 + 72k degrees.
    let r = Expr::sqrt(Expr::mul(vec![
        Expr::rat(1, 10),
        Expr::add(vec![Expr::int(5), Expr::sqrt_int(5)]),
    ]));
    let c18 = Expr::mul(vec![
        Expr::rat(1, 4),
        Expr::sqrt(Expr::add(vec![Expr::int(10), Expr::term(2, 1, 5)])),
    ]);
    let s18 = Expr::add(vec![Expr::term(1, 4, 5), Expr::rat(-1, 4)]);
    let c54 = Expr::mul(vec![
        Expr::rat(1, 4),
        Expr::sqrt(Expr::add(vec![Expr::int(10), Expr::term(-2, 1, 5)])),
    ]);
    let s54 = Expr::add(vec![Expr::term(1, 4, 5), Expr::rat(1, 4)]);
    let m = |a: &Expr, b: &Expr| Expr::mul(vec![a.clone(), b.clone()]);
    vec![
        (Expr::int(0), r.clone()),
        (Expr::neg(m(&r, &c18)), m(&r, &s18)),
        (Expr::neg(m(&r, &c54)), Expr::neg(m(&r, &s54))),
        (m(&r, &c54), Expr::neg(m(&r, &s54))),
        (m(&r, &c18), m(&r, &s18)),
    ]
}

fn one_d_entry(k: usize) -> CatalogEntry {
    let sqrt3_half = || Expr::term(1, 2, 3);
    let mut notes: Vec<String> = Vec::new();
    let (coords, d_expr, d_symbolic, description): (Vec<(Expr, Expr)>, Expr, &'static str, &str) =
        match k {
            1 => (
                one_d_coords_1(),
                Expr::sqrt_int(2),
                "sqrt(2)",
                "two unit triangles sharing an apex; crossing pairs at sqrt 2",
            ),
            2 => (
                // Inverse of entry 1: same shape scaled by 1/sqrt2, labels swap.
                scale_coords(&one_d_coords_1(), &Expr::term(1, 2, 2)),
                Expr::term(1, 2, 2),
                "sqrt(2)/2",
                "inverse of entry 1: two d-triangles sharing an apex",
            ),
            3 => (
                vec![
                    (Expr::int(0), Expr::int(0)),
                    (Expr::int(1), Expr::int(0)),
                    (Expr::rat(1, 2), sqrt3_half()),
                    (
                        Expr::rat(1, 2),
                        Expr::add(vec![sqrt3_half(), Expr::rat(1, 2)]),
                    ),
                    (
                        Expr::add(vec![Expr::rat(-1, 2), Expr::term(-1, 4, 3)]),
                        Expr::add(vec![Expr::rat(1, 4), sqrt3_half()]),
                    ),
                ],
                Expr::mul(vec![
                    Expr::rat(1, 2),
                    Expr::sqrt(Expr::add(vec![Expr::int(5), Expr::term(2, 1, 3)])),
                ]),
                "sqrt(5+2*sqrt(3))/2",
                "unit triangle with a d-triangle hung above it",
            ),
            4 => (
                vec![
                    (Expr::int(0), Expr::int(0)),
                    (Expr::int(1), Expr::int(0)),
                    (Expr::rat(1, 2), sqrt3_half()),
                    (Expr::int(1), Expr::int(1)),
                    (
                        Expr::add(vec![Expr::rat(1, 2), Expr::term(-1, 2, 3)]),
                        Expr::add(vec![sqrt3_half(), Expr::rat(1, 2)]),
                    ),
                ],
                Expr::sqrt_int(2),
                "sqrt(2)",
                "unit triangle with a d-triangle at a shared vertex",
            ),
            5 => (
                vec![
                    (Expr::int(0), Expr::int(1)),
                    (Expr::int(0), Expr::int(0)),
                    (Expr::int(1), Expr::int(0)),
                    (
                        Expr::add(vec![Expr::rat(3, 4), Expr::term(1, 4, 7)]),
                        Expr::add(vec![Expr::rat(1, 4), Expr::term(1, 4, 7)]),
                    ),
                    (Expr::rat(1, 2), Expr::term(1, 2, 7)),
                ],
                Expr::sqrt_int(2),
                "sqrt(2)",
                "4-path of unit edges braced by four d diagonals",
            ),
            6 => (
                vec![
                    (Expr::int(0), Expr::int(0)),
                    (Expr::int(1), Expr::int(0)),
                    (Expr::rat(1, 2), sqrt3_half()),
                    (Expr::term(-1, 2, 3), Expr::rat(1, 2)),
                    (Expr::term(-1, 2, 3), Expr::rat(-1, 2)),
                ],
                Expr::add(vec![Expr::term(1, 2, 6), Expr::term(1, 2, 2)]),
                "(sqrt(6)+sqrt(2))/2",
                "four unit spokes with three 150-degree gaps; 6 unit, 3 d edges",
            ),
            7 => (
                one_d_coords_7(),
                Expr::add(vec![Expr::rat(1, 2), Expr::term(1, 2, 5)]),
                "(1+sqrt(5))/2",
                "unit pentagon with golden-ratio diagonals",
            ),
            8 => {
                notes.push(
                    "source prints d = (1-sqrt(5))/2, which is negative; the positive \
                     inverse ratio (sqrt(5)-1)/2 is stored (discrepancy note)"
                        .into(),
                );
                (
                    scale_coords(
                        &one_d_coords_7(),
                        &Expr::add(vec![Expr::term(1, 2, 5), Expr::rat(-1, 2)]),
                    ),
                    Expr::add(vec![Expr::term(1, 2, 5), Expr::rat(-1, 2)]),
                    "(sqrt(5)-1)/2",
                    "inverse of entry 7: unit pentagram over a d pentagon",
                )
            }
            _ => unreachable!(),
        };
    let embedding = eval_points(&coords);
    let d = d_expr.eval();
    let graph = derive_bicolored(&embedding, &d);
    CatalogEntry {
        name: one_d_name(k),
        graph: CatalogGraph::Bicolored(graph),
        embedding,
        d: Some(d),
        d_symbolic: Some(d_symbolic),
        description: description.into(),
        notes,
        vertex_names: "ABCDE".chars().map(String::from).collect(),
    }
}
