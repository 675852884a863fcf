//! Finite-graph colorability, coloring enumeration and statistics, DIMACS
//! CNF export, and the periodic hexagonal 7-coloring of the plane with a
//! sampling verifier.

use crate::geometry::{Point, Scalar};
use crate::graphs::SimpleGraph;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// A proper coloring: colors[v] in 0..k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn is_proper(&self, g: &SimpleGraph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "k": self.k, "colors": self.colors })
    }
}

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("input too large: {0}")]
    InputTooLarge(String),
    #[error("hexagon side must lie in [1/sqrt(7), 1/2]")]
    BadSideLength,
    #[error("need at least one sample")]
    NoSamples,
}

/// Enumeration guard: k^n must stay at or below this.
const ENUMERATION_GUARD: f64 = 1e7;

/// Backtracking search for a proper k-coloring. Vertices are processed by
/// (degree desc, index asc); colors are tried ascending, never exceeding
/// one past the largest color used so far (symmetry breaking). Deterministic.
pub fn k_colorable(g: &SimpleGraph, k: usize) -> Option<Coloring> {
    assert!(k >= 1, "k must be at least 1");
    let n = g.n();
    if n == 0 {
        return Some(Coloring { k, colors: vec![] });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];

    fn go(
        g: &SimpleGraph,
        order: &[usize],
        pos: usize,
        k: usize,
        max_used: usize,
        colors: &mut Vec<usize>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let cap = k.min(max_used + 2);
        for c in 0..cap {
            if g.neighbors(v).iter().any(|&u| colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if go(g, order, pos + 1, k, max_used.max(c + usize::from(c > max_used)), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }

    // max_used starts at -1; represent via the cap trick: first vertex may
    // only take color 0.
    let found = {
        let v = order[0];
        colors[v] = 0;
        go(g, &order, 1, k, 0, &mut colors)
    };
    if found {
        Some(Coloring { k, colors })
    } else {
        None
    }
}

/// Least k for which a proper k-coloring exists.
pub fn chromatic_number(g: &SimpleGraph) -> usize {
    assert!(g.n() >= 1, "graph must have at least one vertex");
    (1..=g.n())
        .find(|&k| k_colorable(g, k).is_some())
        .expect("n colors always suffice")
}

fn check_enumeration_guard(n: usize, k: usize) -> Result<(), ColoringError> {
    if (k as f64).powi(n as i32) > ENUMERATION_GUARD {
        return Err(ColoringError::InputTooLarge(format!(
            "{k}^{n} colorings exceed the enumeration guard"
        )));
    }
    Ok(())
}

/// All proper k-colorings in lexicographic order of the color vector.
pub fn enumerate_proper_colorings(
    g: &SimpleGraph,
    k: usize,
) -> Result<Vec<Coloring>, ColoringError> {
    check_enumeration_guard(g.n(), k)?;
    let n = g.n();
    let mut out = Vec::new();
    let mut colors = vec![0usize; n];

    fn go(g: &SimpleGraph, k: usize, v: usize, colors: &mut Vec<usize>, out: &mut Vec<Coloring>) {
        if v == g.n() {
            out.push(Coloring {
                k,
                colors: colors.clone(),
            });
            return;
        }
        for c in 0..k {
            if (0..v).any(|u| g.has_edge(u, v) && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            go(g, k, v + 1, colors, out);
        }
    }

    if n == 0 {
        out.push(Coloring { k, colors: vec![] });
    } else {
        go(g, k, 0, &mut colors, &mut out);
    }
    Ok(out)
}

/// Maximum size of a color class over all proper k-colorings (0 if none).
pub fn max_color_multiplicity(g: &SimpleGraph, k: usize) -> Result<usize, ColoringError> {
    let all = enumerate_proper_colorings(g, k)?;
    Ok(all
        .iter()
        .map(|col| {
            let mut counts = vec![0usize; k];
            for &c in &col.colors {
                counts[c] += 1;
            }
            counts.into_iter().max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0))
}

/// DIMACS CNF encoding of k-colorability: variable x_{v,c} = v*k + c + 1;
/// one at-least-one clause per vertex, pairwise at-most-one clauses per
/// vertex, and a conflict clause per (edge, color).
pub fn export_cnf(g: &SimpleGraph, k: usize) -> String {
    let n = g.n();
    let var = |v: usize, c: usize| (v * k + c + 1) as i64;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for v in 0..n {
        clauses.push((0..k).map(|c| var(v, c)).collect());
        for c1 in 0..k {
            for c2 in c1 + 1..k {
                clauses.push(vec![-var(v, c1), -var(v, c2)]);
            }
        }
    }
    for (u, v) in g.edges() {
        for c in 0..k {
            clauses.push(vec![-var(u, c), -var(v, c)]);
        }
    }
    let mut out = format!("p cnf {} {}\n", n * k, clauses.len());
    for cl in &clauses {
        for lit in cl {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

/// Minimal DPLL satisfiability check for the CNF sizes used in tests.
pub fn dpll_satisfiable(num_vars: usize, clauses: &[Vec<i64>]) -> bool {
    fn go(num_vars: usize, clauses: &[Vec<i64>], assign: &mut Vec<i8>) -> bool {
        // Unit propagation.
        loop {
            let mut unit: Option<i64> = None;
            for cl in clauses {
                let mut satisfied = false;
                let mut unassigned: Vec<i64> = Vec::new();
                for &lit in cl {
                    let v = lit.unsigned_abs() as usize - 1;
                    match assign[v] {
                        0 => unassigned.push(lit),
                        s => {
                            if (s > 0) == (lit > 0) {
                                satisfied = true;
                                break;
                            }
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match unassigned.len() {
                    0 => return false,
                    1 => {
                        unit = Some(unassigned[0]);
                        break;
                    }
                    _ => {}
                }
            }
            match unit {
                Some(lit) => {
                    assign[lit.unsigned_abs() as usize - 1] = if lit > 0 { 1 } else { -1 };
                }
                None => break,
            }
        }
        let Some(v) = assign.iter().position(|&s| s == 0) else {
            return true;
        };
        for s in [1i8, -1i8] {
            let saved = assign.clone();
            assign[v] = s;
            if go(num_vars, clauses, assign) {
                return true;
            }
            *assign = saved;
        }
        false
    }
    let mut assign = vec![0i8; num_vars];
    go(num_vars, clauses, &mut assign)
}

/// Parses the body of a DIMACS string produced by `export_cnf`.
pub fn parse_dimacs(text: &str) -> (usize, Vec<Vec<i64>>) {
    let mut num_vars = 0;
    let mut clauses = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("p cnf ") {
            num_vars = rest
                .split_whitespace()
                .next()
                .and_then(|t| t.parse().ok())
                .unwrap_or(0);
        } else if !line.starts_with('c') && !line.trim().is_empty() {
            let lits: Vec<i64> = line
                .split_whitespace()
                .filter_map(|t| t.parse().ok())
                .take_while(|&l| l != 0)
                .collect();
            clauses.push(lits);
        }
    }
    (num_vars, clauses)
}

// ---------------------------------------------------------------------------
// Hexagonal 7-coloring of the plane.
// ---------------------------------------------------------------------------

/// Side length of the hexagons of the plane 7-coloring.
#[derive(Clone, Debug)]
pub struct HexConfig {
    pub s: Scalar,
}

impl HexConfig {
    /// Validates 1/sqrt(7) <= s <= 1/2, the window in which no two points
    /// at distance exactly 1 share a color.
    pub fn new(s: Scalar) -> Result<Self, ColoringError> {
        let s2 = s.clone().square();
        let lo = Scalar::from_i64(1) / Scalar::from_i64(7); // (1/sqrt7)^2
        let hi = Scalar::from_i64(1) / Scalar::from_i64(4); // (1/2)^2
        // Slack of one f64 ulp so the endpoints survive a round trip
        // through double-precision literals.
        let slack = Scalar::from_f64(1e-15);
        if !s.is_positive() || s2 < lo - &slack || s2 > hi + &slack {
            return Err(ColoringError::BadSideLength);
        }
        Ok(HexConfig { s })
    }
}

/// Hexagon-lattice color assignment: the hexagon at axial coordinates (a, b)
/// has color (a + 3b) mod 7. The six neighbor offsets (±1,0), (0,±1), (±1,∓1)
/// map to the six distinct nonzero residues, and the closest same-colored
/// hexagons sit with center distance sqrt(21)·s, so their closest points are
/// at distance exactly sqrt(7)·s (vertex to vertex).
fn hex_lattice_color(a: i64, b: i64) -> u8 {
    (((a + 3 * b) % 7 + 7) % 7) as u8
}

/// Classification of a point against one hexagon (flat-top, circumradius s,
/// centered at the origin after shifting).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HexOwn {
    Outside,
    Interior,
    Owned,
    Disowned,
}

/// Boundary ownership rule: a hexagon owns its interior, its two uppermost
/// vertices (at 60 and 120 degrees), and the interiors of its three
/// uppermost sides (outward normals at 30, 90, 150 degrees).
fn classify_f64(rx: f64, ry: f64, s: f64, eps: f64) -> HexOwn {
    let apothem = 3f64.sqrt() / 2.0 * s;
    let h = 3f64.sqrt() / 2.0;
    // Outward normals at 30 + 60k degrees, k = 0..5.
    let normals = [
        (h, 0.5),
        (0.0, 1.0),
        (-h, 0.5),
        (-h, -0.5),
        (0.0, -1.0),
        (h, -0.5),
    ];
    let mut tight: Vec<usize> = Vec::new();
    for (k, &(nx, ny)) in normals.iter().enumerate() {
        let dot = nx * rx + ny * ry;
        if dot > apothem + eps {
            return HexOwn::Outside;
        }
        if dot > apothem - eps {
            tight.push(k);
        }
    }
    match tight.len() {
        0 => HexOwn::Interior,
        // Interior of one side: owned iff it is an uppermost side
        // (normal indices 0, 1, 2 point upward).
        1 => {
            if tight[0] <= 2 {
                HexOwn::Owned
            } else {
                HexOwn::Disowned
            }
        }
        // A vertex: the uppermost two are at 60 degrees (between normals
        // 0 and 1) and 120 degrees (between normals 1 and 2).
        _ => {
            if tight == [0, 1] || tight == [1, 2] {
                HexOwn::Owned
            } else {
                HexOwn::Disowned
            }
        }
    }
}

/// f64 color lookup shared by the verifier; eps controls how close to a
/// boundary a point must be to trigger the ownership rule.
fn hex_color_f64(x: f64, y: f64, s: f64, eps: f64) -> u8 {
    // Centers at a*(3s/2, sqrt3 s/2) + b*(0, sqrt3 s).
    let sqrt3 = 3f64.sqrt();
    let a0 = x / (1.5 * s);
    let b0 = y / (sqrt3 * s) - a0 / 2.0;
    let mut interior: Option<u8> = None;
    for da in -1..=1 {
        for db in -1..=1 {
            let a = a0.round() as i64 + da;
            let b = b0.round() as i64 + db;
            let cx = 1.5 * s * a as f64;
            let cy = sqrt3 * s * (a as f64 / 2.0 + b as f64);
            match classify_f64(x - cx, y - cy, s, eps) {
                HexOwn::Owned => return hex_lattice_color(a, b),
                HexOwn::Interior => interior = Some(hex_lattice_color(a, b)),
                _ => {}
            }
        }
    }
    // A strict-interior point has no tight boundary and exactly one
    // containing hexagon.
    interior.expect("point not owned by any candidate hexagon")
}

/// Color of a plane point under the periodic hexagonal 7-coloring.
pub fn hex_color(p: &Point, cfg: &HexConfig) -> u8 {
    // Full-precision reduction into the periodic cell would require exact
    // floor on Scalars; coordinates are reduced through f64 with a boundary
    // eps well below the sampling scales used by the callers.
    hex_color_f64(p.x.to_f64(), p.y.to_f64(), cfg.s.to_f64(), 1e-12)
}

#[derive(Clone, Debug, Serialize)]
pub struct HexReport {
    /// Sampled unit-distance pairs with equal colors.
    pub violations: u64,
    /// Minimum distance observed among sampled same-colored pairs
    /// (decimal string).
    pub min_same_color_dist_observed: String,
    pub samples: u64,
}

/// Samples random (point, unit-direction) pairs in the periodic cell and
/// counts same-colored pairs at distance exactly 1; also tracks the minimum
/// distance over random same-colored pairs.
pub fn hex_verify(cfg: &HexConfig, samples: u64, seed: u64) -> Result<HexReport, ColoringError> {
    if samples == 0 {
        return Err(ColoringError::NoSamples);
    }
    let s = cfg.s.to_f64();
    let eps = 1e-12;
    // Fundamental domain of the color-preserving sublattice, generously
    // covered by a rectangle of 7 hexagon pitches.
    let w = 7.0 * 1.5 * s;
    let h = 7.0 * 3f64.sqrt() * s;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0u64;
    let mut min_same: f64 = f64::INFINITY;
    for _ in 0..samples {
        let x = rng.random_range(0.0..w);
        let y = rng.random_range(0.0..h);
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let c1 = hex_color_f64(x, y, s, eps);
        let c2 = hex_color_f64(x + theta.cos(), y + theta.sin(), s, eps);
        if c1 == c2 {
            violations += 1;
        }
        // Independent same-color distance probe.
        let x2 = rng.random_range(-w..2.0 * w);
        let y2 = rng.random_range(-h..2.0 * h);
        if hex_color_f64(x2, y2, s, eps) == c1 {
            let d = ((x2 - x).powi(2) + (y2 - y).powi(2)).sqrt();
            if d > 0.0 && d < min_same {
                min_same = d;
            }
        }
    }
    Ok(HexReport {
        violations,
        min_same_color_dist_observed: Scalar::from_f64(min_same.min(1e9)).to_decimal_string(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::catalog::catalog;

    fn spindle() -> SimpleGraph {
        catalog("moser-spindle").unwrap().simple().clone()
    }

    #[test]
    fn spindle_chromatic_number_is_4() {
        let g = spindle();
        assert!(k_colorable(&g, 3).is_none());
        let col = k_colorable(&g, 4).unwrap();
        assert!(col.is_proper(&g));
        assert_eq!(chromatic_number(&g), 4);
    }

    #[test]
    fn odd_cycle_and_k4() {
        let c5 = SimpleGraph::cycle(5);
        assert!(k_colorable(&c5, 2).is_none());
        assert!(k_colorable(&c5, 3).is_some());
        assert_eq!(chromatic_number(&SimpleGraph::complete(4)), 4);
        assert_eq!(chromatic_number(&SimpleGraph::new(5)), 1);
    }

    #[test]
    fn enumeration_counts() {
        let triangle = SimpleGraph::complete(3);
        assert_eq!(enumerate_proper_colorings(&triangle, 3).unwrap().len(), 6);
        let edge = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_proper_colorings(&edge, 2).unwrap().len(), 2);
        // Lexicographic order.
        let cols = enumerate_proper_colorings(&edge, 2).unwrap();
        assert_eq!(cols[0].colors, vec![0, 1]);
        assert_eq!(cols[1].colors, vec![1, 0]);
        assert!(enumerate_proper_colorings(&SimpleGraph::new(20), 4).is_err());
    }

    #[test]
    fn spindle_color_multiplicity_is_2() {
        // Every proper 4-coloring of the spindle uses each color at most
        // twice.
        assert_eq!(max_color_multiplicity(&spindle(), 4).unwrap(), 2);
        assert_eq!(max_color_multiplicity(&SimpleGraph::complete(4), 4).unwrap(), 1);
        assert_eq!(max_color_multiplicity(&SimpleGraph::new(3), 1).unwrap(), 3);
        assert_eq!(max_color_multiplicity(&spindle(), 3).unwrap(), 0);
    }

    #[test]
    fn cnf_agrees_with_search() {
        for (g, k) in [
            (SimpleGraph::from_edges(2, &[(0, 1)]).unwrap(), 1),
            (SimpleGraph::complete(3), 3),
            (spindle(), 3),
            (spindle(), 4),
            (SimpleGraph::cycle(5), 2),
        ] {
            let text = export_cnf(&g, k);
            let (nv, clauses) = parse_dimacs(&text);
            assert_eq!(nv, g.n() * k);
            assert_eq!(
                dpll_satisfiable(nv, &clauses),
                k_colorable(&g, k).is_some(),
                "CNF/search disagreement at n={} k={k}",
                g.n()
            );
        }
    }

    #[test]
    fn cnf_header_shape() {
        let text = export_cnf(&SimpleGraph::complete(3), 3);
        assert!(text.starts_with("p cnf 9 "));
    }

    fn cfg(s: f64) -> HexConfig {
        HexConfig::new(Scalar::from_f64(s)).unwrap()
    }

    #[test]
    fn hex_side_window_enforced() {
        assert!(HexConfig::new(Scalar::from_f64(0.3)).is_err());
        assert!(HexConfig::new(Scalar::from_f64(0.6)).is_err());
        assert!(HexConfig::new(Scalar::from_f64(0.45)).is_ok());
        assert!(HexConfig::new(Scalar::from_f64(0.5)).is_ok());
        assert!(HexConfig::new(Scalar::from_f64(1.0 / 7f64.sqrt())).is_ok());
    }

    #[test]
    fn hex_interior_constant_and_uppermost_vertices_owned() {
        let c = cfg(0.45);
        let s = 0.45;
        let center = hex_color(&Point::from_f64(0.0, 0.0), &c);
        assert_eq!(hex_color(&Point::from_f64(0.1 * s, -0.2 * s), &c), center);
        // Uppermost vertices at 60 and 120 degrees, circumradius s.
        let up1 = Point::from_f64(s * 0.5, s * 3f64.sqrt() / 2.0);
        let up2 = Point::from_f64(-s * 0.5, s * 3f64.sqrt() / 2.0);
        assert_eq!(hex_color(&up1, &c), center);
        assert_eq!(hex_color(&up2, &c), center);
        // The two lowermost vertices belong to the neighbors below.
        let down = Point::from_f64(s * 0.5, -s * 3f64.sqrt() / 2.0);
        assert_ne!(hex_color(&down, &c), center);
    }

    #[test]
    fn hex_neighbors_all_distinct() {
        let mut seen = [false; 7];
        for (a, b) in [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)] {
            let col = hex_lattice_color(a, b) as usize;
            assert!(!seen[col], "neighbor colors collide");
            seen[col] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn hex_periodic_under_supercell() {
        // Translation by v1 + 2*v2 (offset (1,2): 1 + 3*2 = 7) preserves
        // colors.
        let c = cfg(0.45);
        let s = 0.45;
        let sqrt3 = 3f64.sqrt();
        let (tx, ty) = (1.5 * s, sqrt3 * s * (0.5 + 2.0));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let x: f64 = rng.random_range(-2.0..2.0);
            let y: f64 = rng.random_range(-2.0..2.0);
            let p = Point::from_f64(x, y);
            let q = Point::from_f64(x + tx, y + ty);
            assert_eq!(hex_color(&p, &c), hex_color(&q, &c));
        }
    }

    #[test]
    fn hex_verify_no_violations_interior_side() {
        let r = hex_verify(&cfg(0.45), 20_000, 0).unwrap();
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn hex_verify_no_violations_at_extremes() {
        for s in [0.5, 1.0 / 7f64.sqrt()] {
            let r = hex_verify(&cfg(s), 20_000, 7).unwrap();
            assert_eq!(r.violations, 0, "violation at s={s}");
        }
        assert!(hex_verify(&cfg(0.45), 0, 0).is_err());
    }

    #[test]
    fn hex_same_color_gap() {
        // For s strictly inside the window, same-colored points are either
        // within one hexagon (< 2s) or at least sqrt(7)*s apart.
        let s = 0.45;
        let c = cfg(s);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5_000 {
            let x1: f64 = rng.random_range(-3.0..3.0);
            let y1: f64 = rng.random_range(-3.0..3.0);
            let x2: f64 = rng.random_range(-3.0..3.0);
            let y2: f64 = rng.random_range(-3.0..3.0);
            if hex_color(&Point::from_f64(x1, y1), &c) == hex_color(&Point::from_f64(x2, y2), &c)
            {
                let d = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt();
                assert!(
                    d < 2.0 * s + 1e-9 || d > 7f64.sqrt() * s - 1e-9,
                    "same-color pair at forbidden distance {d}"
                );
            }
        }
    }
}
