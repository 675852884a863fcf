//! Planar realizations of graphs: verification against unit/(1,d) targets,
//! combination constructions (Minkowski sums, doubling, hypercubes), the
//! built-in catalog, and a numeric realization search.

pub mod catalog;
pub mod realize;

pub use realize::{realize, realize_bicolored, range_scan, RealizeConfig};

use crate::geometry::{dist2, Point, Scalar, Tolerance};
use crate::graphs::{BicoloredGraph, EdgeLabel, SimpleGraph};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// A sequence of points; index = vertex id.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub points: Vec<Point>,
}

/// Classification of an embedding against a graph's distance targets.
#[derive(Clone, Debug, Serialize)]
pub struct UdrReport {
    pub is_udr: bool,
    pub is_faithful: bool,
    /// Edges whose realized squared length misses the target; value is the
    /// actual squared length as a decimal string.
    pub edge_violations: Vec<((usize, usize), String)>,
    /// Non-adjacent pairs realized at a target distance.
    pub nonedge_unit_pairs: Vec<(usize, usize)>,
    /// Pairs closer than the tolerance.
    pub coincident_pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("embedding has {got} points but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("d must be positive")]
    NonpositiveD,
    #[error("input too large: {0}")]
    InputTooLarge(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("empty embedding")]
    Empty,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("invalid embedding JSON: {0}")]
    BadJson(String),
}

impl Embedding {
    pub fn new(points: Vec<Point>) -> Self {
        Embedding { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Keeps only the points at the given vertex indices (in that order).
    pub fn induced(&self, vertices: &[usize]) -> Embedding {
        Embedding {
            points: vertices.iter().map(|&v| self.points[v].clone()).collect(),
        }
    }

    /// Number of unordered pairs at unit distance (within tolerance).
    pub fn unit_pair_count(&self, tol: &Tolerance) -> usize {
        self.pair_count_at(&Scalar::one(), tol)
    }

    /// Number of unordered pairs whose distance matches `dist`.
    pub fn pair_count_at(&self, dist: &Scalar, tol: &Tolerance) -> usize {
        let target = dist.clone().square();
        let mut c = 0;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let d2 = dist2(&self.points[i], &self.points[j]);
                if (d2 - &target).abs() <= tol.eps2 {
                    c += 1;
                }
            }
        }
        c
    }

    /// The simple graph whose edges are exactly the unit-distance pairs.
    pub fn unit_graph(&self, tol: &Tolerance) -> SimpleGraph {
        let one = Scalar::one();
        let mut g = SimpleGraph::new(self.points.len());
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let d2 = dist2(&self.points[i], &self.points[j]);
                if (d2 - &one).abs() <= tol.eps2 {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pts: Vec<[String; 2]> = self
            .points
            .iter()
            .map(|p| [p.x.to_decimal_string(), p.y.to_decimal_string()])
            .collect();
        serde_json::json!({ "points": pts })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, EmbeddingError> {
        let pts = v
            .get("points")
            .and_then(|x| x.as_array())
            .ok_or_else(|| EmbeddingError::BadJson("missing \"points\"".into()))?;
        let mut points = Vec::with_capacity(pts.len());
        for p in pts {
            let pair = p
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| EmbeddingError::BadJson("point must be a pair".into()))?;
            let coord = |v: &serde_json::Value| -> Result<Scalar, EmbeddingError> {
                let s = match v {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(n) => n.to_string(),
                    _ => return Err(EmbeddingError::BadJson("bad coordinate".into())),
                };
                Scalar::parse_decimal(&s)
                    .ok_or_else(|| EmbeddingError::BadJson(format!("bad coordinate {s}")))
            };
            points.push(Point::new(coord(&pair[0])?, coord(&pair[1])?));
        }
        Ok(Embedding { points })
    }
}

/// Checks an embedding of a simple graph against unit-distance targets and
/// classifies every vertex pair.
pub fn verify(g: &SimpleGraph, emb: &Embedding, tol: &Tolerance) -> Result<UdrReport, EmbeddingError> {
    if emb.len() != g.n() {
        return Err(EmbeddingError::SizeMismatch {
            expected: g.n(),
            got: emb.len(),
        });
    }
    let one = Scalar::one();
    let targets = |u: usize, v: usize| -> Option<Scalar> {
        if g.has_edge(u, v) {
            Some(one.clone())
        } else {
            None
        }
    };
    Ok(classify(emb, g.n(), targets, &[one.clone()], tol))
}

/// Checks an embedding of a bicolored graph: UNIT edges against 1, D edges
/// against d; faithfulness forbids non-edges at either target distance.
pub fn verify_bicolored(
    bg: &BicoloredGraph,
    emb: &Embedding,
    d: &Scalar,
    tol: &Tolerance,
) -> Result<UdrReport, EmbeddingError> {
    if !d.is_positive() {
        return Err(EmbeddingError::NonpositiveD);
    }
    if emb.len() != bg.n() {
        return Err(EmbeddingError::SizeMismatch {
            expected: bg.n(),
            got: emb.len(),
        });
    }
    let one = Scalar::one();
    let targets = |u: usize, v: usize| -> Option<Scalar> {
        bg.label(u, v).map(|l| match l {
            EdgeLabel::Unit => one.clone(),
            EdgeLabel::D => d.clone(),
        })
    };
    Ok(classify(emb, bg.n(), targets, &[one.clone(), d.clone()], tol))
}

fn classify(
    emb: &Embedding,
    n: usize,
    target_of: impl Fn(usize, usize) -> Option<Scalar>,
    nonedge_forbidden: &[Scalar],
    tol: &Tolerance,
) -> UdrReport {
    let mut edge_violations = Vec::new();
    let mut nonedge_unit_pairs = Vec::new();
    let mut coincident_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d2 = dist2(&emb.points[i], &emb.points[j]);
            if d2 <= tol.eps2 {
                coincident_pairs.push((i, j));
            }
            match target_of(i, j) {
                Some(t) => {
                    let t2 = t.square();
                    if (&d2 - &t2).abs() > tol.eps2 {
                        edge_violations.push(((i, j), d2.to_decimal_string()));
                    }
                }
                None => {
                    for t in nonedge_forbidden {
                        let t2 = t.clone().square();
                        if (&d2 - &t2).abs() <= tol.eps2 {
                            nonedge_unit_pairs.push((i, j));
                            break;
                        }
                    }
                }
            }
        }
    }
    let is_udr = edge_violations.is_empty() && coincident_pairs.is_empty();
    let is_faithful = is_udr && nonedge_unit_pairs.is_empty();
    UdrReport {
        is_udr,
        is_faithful,
        edge_violations,
        nonedge_unit_pairs,
        coincident_pairs,
    }
}

const ROTATION_BUDGET: usize = 1000;
const DISTINCT_EPS: f64 = 1e-9;

/// Draws a random angle and returns its exactly normalized (sin, cos) as
/// Scalars, so that rotating by it is an isometry at working precision.
fn random_unit_vector(rng: &mut ChaCha8Rng) -> (Scalar, Scalar) {
    let angle: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let (s, c) = angle.sin_cos();
    let (sin, cos) = (Scalar::from_f64(s), Scalar::from_f64(c));
    let norm = (sin.clone().square() + cos.clone().square()).sqrt();
    (sin / &norm, cos / &norm)
}

fn all_distinct(points: &[Point]) -> bool {
    let eps2 = Scalar::from_f64(DISTINCT_EPS * DISTINCT_EPS);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if dist2(&points[i], &points[j]) <= eps2 {
                return false;
            }
        }
    }
    true
}

/// Minkowski sum of two embeddings, with the second rotated by an angle
/// drawn deterministically from `seed` so that all |A|·|B| sum points are
/// distinct. Each unit pair of either factor reappears in every translate,
/// so the sum has at least |A|·u(B) + |B|·u(A) unit pairs.
pub fn minkowski_sum(
    emb1: &Embedding,
    emb2: &Embedding,
    seed: u64,
) -> Result<Embedding, EmbeddingError> {
    if emb1.is_empty() || emb2.is_empty() {
        return Err(EmbeddingError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ROTATION_BUDGET {
        let (sin, cos) = random_unit_vector(&mut rng);
        let mut points = Vec::with_capacity(emb1.len() * emb2.len());
        for p in &emb1.points {
            for q in &emb2.points {
                let rx = &cos * &q.x - &sin * &q.y;
                let ry = &sin * &q.x + &cos * &q.y;
                points.push(Point::new(&p.x + &rx, &p.y + &ry));
            }
        }
        if all_distinct(&points) {
            return Ok(Embedding { points });
        }
    }
    Err(EmbeddingError::SearchExhausted(
        "no admissible rotation for the Minkowski sum".into(),
    ))
}

/// Two translates of the embedding at a unit vector chosen (from `seed`) so
/// that all 2n points are distinct; every point pairs with its translate at
/// distance 1, adding at least n unit pairs.
pub fn doubled_copy(emb: &Embedding, seed: u64) -> Result<Embedding, EmbeddingError> {
    if emb.is_empty() {
        return Err(EmbeddingError::Empty);
    }
    let unit = Embedding::new(vec![
        Point::new(Scalar::zero(), Scalar::zero()),
        Point::new(Scalar::one(), Scalar::zero()),
    ]);
    minkowski_sum(emb, &unit, seed)
}

/// 2^order points Σ λ_i v_i over λ ∈ {0,1}^order with unit generators v_i
/// chosen inductively at random (resampled on coincidence).
pub fn unit_hypercube(order: u32, seed: u64) -> Result<Embedding, EmbeddingError> {
    if order > 10 {
        return Err(EmbeddingError::InputTooLarge(format!(
            "hypercube order is limited to 10, got {order}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![Point::new(Scalar::zero(), Scalar::zero())];
    for _ in 0..order {
        let mut placed = false;
        for _ in 0..ROTATION_BUDGET {
            let (vy, vx) = random_unit_vector(&mut rng);
            let mut next = points.clone();
            next.extend(
                points
                    .iter()
                    .map(|p| Point::new(&p.x + &vx, &p.y + &vy)),
            );
            if all_distinct(&next) {
                points = next;
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(EmbeddingError::SearchExhausted(
                "no admissible hypercube generator".into(),
            ));
        }
    }
    Ok(Embedding { points })
}

/// Number of unordered triples whose three pairwise distances all equal
/// `side` within the tolerance.
pub fn count_equilateral(points: &[Point], side: &Scalar, tol: &Tolerance) -> usize {
    let target = side.clone().square();
    let n = points.len();
    let mut is_side = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let hit = (dist2(&points[i], &points[j]) - &target).abs() <= tol.eps2;
            is_side[i][j] = hit;
            is_side[j][i] = hit;
        }
    }
    let mut c = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !is_side[a][b] {
                continue;
            }
            for d in b + 1..n {
                if is_side[a][d] && is_side[b][d] {
                    c += 1;
                }
            }
        }
    }
    c
}
