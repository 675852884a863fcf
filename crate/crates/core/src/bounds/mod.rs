//! Probabilistic monochromaticity engine: exact rational bounds on p_d (the
//! probability that two points at distance d share a color), assembled from
//! chained slack arguments, n-point expectation counts, the halving rule,
//! and the five parametric (1,d)-graph families.

pub mod extremal;
pub mod families;

use crate::geometry::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

pub type Rational = BigRational;

/// Exact rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("input too large: {0}")]
    InputTooLarge(String),
    #[error("no applicable upper bound at distance {0}")]
    MissingUpperBound(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("argument outside the family domain: {0}")]
    DomainError(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundKind::Upper => "UPPER",
            BoundKind::Lower => "LOWER",
        })
    }
}

/// A d-interval; `hi = None` means unbounded above.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Scalar,
    pub hi: Option<Scalar>,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar, lo_closed: bool, hi_closed: bool) -> Self {
        Interval {
            lo,
            hi: Some(hi),
            lo_closed,
            hi_closed,
        }
    }

    pub fn unbounded(lo: Scalar, lo_closed: bool) -> Self {
        Interval {
            lo,
            hi: None,
            lo_closed,
            hi_closed: false,
        }
    }

    pub fn point(d: Scalar) -> Self {
        Interval {
            lo: d.clone(),
            hi: Some(d),
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn contains(&self, d: &Scalar) -> bool {
        let lo_ok = if self.lo_closed {
            *d >= self.lo
        } else {
            *d > self.lo
        };
        let hi_ok = match &self.hi {
            None => true,
            Some(h) => {
                if self.hi_closed {
                    *d <= *h
                } else {
                    *d < *h
                }
            }
        };
        lo_ok && hi_ok
    }
}

#[derive(Clone, Debug)]
pub struct BoundPiece {
    pub interval: Interval,
    pub kind: BoundKind,
    pub value: Rational,
    pub provenance: String,
}

/// A piecewise bound catalog with query, CSV, and SVG output. Notes record
/// discrepancies between recomputed values and their printed sources.
#[derive(Clone, Debug, Default)]
pub struct BoundTable {
    pub pieces: Vec<BoundPiece>,
    pub notes: Vec<String>,
}

impl BoundTable {
    pub fn new() -> Self {
        BoundTable::default()
    }

    pub fn push(&mut self, piece: BoundPiece) {
        self.pieces.push(piece);
    }

    /// Tightest applicable bound of the given kind at distance d: smallest
    /// UPPER value, largest LOWER value.
    pub fn query(&self, d: &Scalar, kind: BoundKind) -> Option<Rational> {
        let applicable = self
            .pieces
            .iter()
            .filter(|p| p.kind == kind && p.interval.contains(d))
            .map(|p| p.value.clone());
        match kind {
            BoundKind::Upper => applicable.min(),
            BoundKind::Lower => applicable.max(),
        }
    }

    pub fn upper(&self, d: &Scalar) -> Option<Rational> {
        self.query(d, BoundKind::Upper)
    }

    pub fn lower(&self, d: &Scalar) -> Option<Rational> {
        self.query(d, BoundKind::Lower)
    }

    /// CSV with columns
    /// d_lo,d_hi,lo_closed,hi_closed,kind,value_num,value_den,provenance.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "d_lo", "d_hi", "lo_closed", "hi_closed", "kind", "value_num", "value_den",
            "provenance",
        ])
        .unwrap();
        for p in &self.pieces {
            let hi = match &p.interval.hi {
                None => "inf".to_string(),
                Some(h) => h.to_f64().to_string(),
            };
            w.write_record([
                p.interval.lo.to_f64().to_string(),
                hi,
                p.interval.lo_closed.to_string(),
                p.interval.hi_closed.to_string(),
                p.kind.to_string(),
                p.value.numer().to_string(),
                p.value.denom().to_string(),
                p.provenance.clone(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    /// Step plot of the pieces (value against d), one polyline per piece.
    pub fn to_svg(&self) -> String {
        let width = 800.0;
        let height = 400.0;
        let d_max = self
            .pieces
            .iter()
            .filter_map(|p| p.interval.hi.as_ref().map(|h| h.to_f64()))
            .fold(2.5_f64, f64::max);
        let v_max = self
            .pieces
            .iter()
            .map(|p| rational_to_f64(&p.value))
            .fold(0.0_f64, f64::max)
            .max(1e-9);
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">\n<rect width=\"{width}\" height=\"{height}\" \
             fill=\"white\"/>\n"
        );
        for p in &self.pieces {
            let x1 = p.interval.lo.to_f64() / d_max * width;
            let x2 = p
                .interval
                .hi
                .as_ref()
                .map(|h| h.to_f64())
                .unwrap_or(d_max)
                / d_max
                * width;
            let y = height - rational_to_f64(&p.value) / v_max * (height - 20.0) - 10.0;
            let color = match p.kind {
                BoundKind::Upper => "crimson",
                BoundKind::Lower => "steelblue",
            };
            out.push_str(&format!(
                "<line x1=\"{x1:.2}\" y1=\"{y:.2}\" x2=\"{x2:.2}\" y2=\"{y:.2}\" \
                 stroke=\"{color}\" stroke-width=\"2\"><title>{}</title></line>\n",
                p.provenance
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    num / den
}

// ---------------------------------------------------------------------------
// Minimum monochromatic pairs among n points under 4 colors.
// ---------------------------------------------------------------------------

/// Closed formula f(n) = sum over i in 0..4 of C(floor((n+i)/4), 2): the
/// minimum number of monochromatic pairs any 4-coloring of n points creates.
pub fn f_min_mono_pairs(n: u64) -> u64 {
    (0..4)
        .map(|i| {
            let m = (n + i) / 4;
            m * m.saturating_sub(1) / 2
        })
        .sum()
}

/// Brute-force oracle: minimum monochromatic pair count over all 4^n color
/// assignments.
pub fn f_brute(n: u32) -> Result<u64, BoundsError> {
    if n > 12 {
        return Err(BoundsError::InputTooLarge(format!(
            "f_brute is limited to 12 points, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = u64::MAX;
    let mut counts = [0u64; 4];
    fn go(remaining: u32, counts: &mut [u64; 4], acc: u64, best: &mut u64) {
        if acc >= *best {
            return;
        }
        if remaining == 0 {
            *best = acc;
            return;
        }
        for c in 0..4 {
            let add = counts[c];
            counts[c] += 1;
            go(remaining - 1, counts, acc + add, best);
            counts[c] -= 1;
        }
    }
    go(n, &mut counts, 0, &mut best);
    Ok(best)
}

// ---------------------------------------------------------------------------
// Upper bounds on p_d.
// ---------------------------------------------------------------------------

/// A chained slack argument: k = sum of the per-configuration slack
/// coefficients; the total probability of some monochromatic pair is at most
/// 1/2 + k*delta yet must reach 1, so delta >= 1/(2k) and
/// p_d <= 1/2 - 1/(2k).
#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub name: String,
    pub slack_coefficients: Vec<u64>,
    pub d_threshold: Scalar,
}

pub fn chain_bound(spec: &ChainSpec) -> BoundPiece {
    assert!(
        !spec.slack_coefficients.is_empty(),
        "chain needs at least one coefficient"
    );
    let k: u64 = spec.slack_coefficients.iter().sum();
    let value = rat(1, 2) - Rational::new(BigInt::one(), BigInt::from(2 * k));
    BoundPiece {
        interval: Interval::unbounded(spec.d_threshold.clone(), true),
        kind: BoundKind::Upper,
        value,
        provenance: format!("chain-{k}"),
    }
}

/// The named slack chain with k = 31 valid from d >= 2/sqrt(15).
pub fn chain_31() -> ChainSpec {
    ChainSpec {
        name: "chain-31".into(),
        slack_coefficients: vec![5, 3, 3, 3, 5, 5, 7],
        d_threshold: families::threshold_two_over_sqrt15(),
    }
}

/// The named slack chain with k = 25 valid from d >= (sqrt3+1)/sqrt2
/// (the leg-length threshold at which the spindle-like configuration closes).
pub fn chain_25() -> ChainSpec {
    ChainSpec {
        name: "chain-25".into(),
        slack_coefficients: vec![5, 2, 2, 2, 4, 4, 6],
        d_threshold: families::bd_equals_d_threshold(),
    }
}

/// The catalog of known upper bounds on p_d:
///   [1/2, 2/sqrt15)            -> 1/2
///   [2/sqrt15, (sqrt3-1)/sqrt2) -> 15/31
///   [(sqrt3-1)/sqrt2, inf)      -> 12/25
/// The 12/25 threshold is used by the source as an external citation without
/// proof; it is catalog input, replaceable by the user. The limsup value
/// 323/675 has no finite threshold and is recorded as a note only.
pub fn upper_bound_table() -> BoundTable {
    let t1 = families::threshold_half();
    let t2 = families::threshold_two_over_sqrt15();
    let t3 = families::threshold_sqrt3_minus_one_over_sqrt2();
    let mut table = BoundTable::new();
    table.push(BoundPiece {
        interval: Interval::new(t1, t2.clone(), true, false),
        kind: BoundKind::Upper,
        value: rat(1, 2),
        provenance: "half-rule".into(),
    });
    table.push(BoundPiece {
        interval: Interval::new(t2, t3.clone(), true, false),
        kind: BoundKind::Upper,
        value: rat(15, 31),
        provenance: "chain-31".into(),
    });
    table.push(BoundPiece {
        interval: Interval::unbounded(t3, true),
        kind: BoundKind::Upper,
        value: rat(12, 25),
        provenance: "cited-external-bound".into(),
    });
    table.notes.push(
        "limsup of the best chained bounds is 323/675 = 0.4785...; no finite threshold \
         is available, recorded as metadata only"
            .into(),
    );
    table
}

// ---------------------------------------------------------------------------
// Expectation lower bounds.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct OtherDistance {
    pub symbolic: String,
    pub value: Scalar,
}

/// An n-point configuration whose pairs split into unit pairs, d-pairs, and
/// fixed other distances; unit pairs are never monochromatic, so
/// E[mono pairs] = d_pair_count * p_d + sum p_x  >=  f(n).
#[derive(Clone, Debug)]
pub struct PointConfig {
    pub n: u64,
    pub d_pair_count: u64,
    /// The distance at which the derived bound applies (None for purely
    /// parametric uses where the caller owns the interval).
    pub d: Option<Scalar>,
    pub other_distances: Vec<OtherDistance>,
}

#[derive(Clone, Debug)]
pub enum LowerOutcome {
    Piece(BoundPiece),
    /// The expectation argument yields nothing (bound would be <= 0).
    NotPositive,
}

/// The exact rational (f(n) - sum of applicable uppers) / d_pair_count, or
/// None when not positive.
pub fn expectation_value(
    cfg: &PointConfig,
    known: &BoundTable,
) -> Result<Option<Rational>, BoundsError> {
    assert!(cfg.d_pair_count >= 1);
    let mut total = Rational::from(BigInt::from(f_min_mono_pairs(cfg.n)));
    for od in &cfg.other_distances {
        let up = known
            .upper(&od.value)
            .ok_or_else(|| BoundsError::MissingUpperBound(od.symbolic.clone()))?;
        total -= up;
    }
    let value = total / Rational::from(BigInt::from(cfg.d_pair_count));
    if value.is_positive() {
        Ok(Some(value))
    } else {
        Ok(None)
    }
}

/// Expectation rule as a bound piece at the configuration's distance.
pub fn lower_bound_expectation(
    cfg: &PointConfig,
    known: &BoundTable,
) -> Result<LowerOutcome, BoundsError> {
    match expectation_value(cfg, known)? {
        None => Ok(LowerOutcome::NotPositive),
        Some(value) => {
            let interval = match &cfg.d {
                Some(d) => Interval::point(d.clone()),
                None => Interval::unbounded(Scalar::zero(), false),
            };
            Ok(LowerOutcome::Piece(BoundPiece {
                interval,
                kind: BoundKind::Lower,
                value,
                provenance: format!("expectation-n{}-d{}", cfg.n, cfg.d_pair_count),
            }))
        }
    }
}

/// Halving rule: for x >= d/2, an isosceles triangle with base d and legs x
/// gives 2(1 - p_x) >= 1 - p_d. Contrapositive pair:
///   from a LOWER bound l on p_x: p_d >= 2l - 1 (suppressed unless positive);
///   from an UPPER bound u on p_d: p_x <= (1 + u)/2.
pub fn halving_rule(
    d: &Scalar,
    x: &Scalar,
    known: &BoundTable,
) -> Result<Option<BoundPiece>, BoundsError> {
    let two = Scalar::from_i64(2);
    if x < &(d / &two) {
        return Err(BoundsError::PreconditionViolated(
            "halving needs x >= d/2".into(),
        ));
    }
    if let Some(l) = known.lower(x) {
        let derived = rat(2, 1) * &l - rat(1, 1);
        if derived.is_positive() {
            return Ok(Some(BoundPiece {
                interval: Interval::point(d.clone()),
                kind: BoundKind::Lower,
                value: derived,
                provenance: "halving".into(),
            }));
        }
    }
    if let Some(u) = known.upper(d) {
        let derived = (rat(1, 1) + &u) / rat(2, 1);
        if derived < Rational::one() {
            return Ok(Some(BoundPiece {
                interval: Interval::point(x.clone()),
                kind: BoundKind::Upper,
                value: derived,
                provenance: "halving".into(),
            }));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Fixed-point propagation.
// ---------------------------------------------------------------------------

/// A configuration whose expectation argument mixes fixed distances (looked
/// up in the table) with `halvable_count` distances known only to be >= d/2,
/// each bounded through the halving rule by p_d itself:
///   f <= n_d p_d + sum(fixed uppers) + k (1 + p_d)/2
///   =>  p_d >= (f - sum(fixed) - k/2) / (n_d + k/2).
#[derive(Clone, Debug)]
pub struct PropagationConfig {
    pub name: String,
    pub n: u64,
    pub d_pair_count: u64,
    pub fixed_distances: Vec<OtherDistance>,
    pub halvable_count: u64,
    pub interval: Interval,
}

/// The configuration behind the 1/325 bound on (0, (sqrt5-1)/sqrt3]:
/// five points with six d-pairs, one fixed distance carrying the 12/25
/// bound, and one distance >= d/2 handled by halving. The printed interval
/// includes d < 1/2, where the underlying point set is not realizable; the
/// region is covered independently (and more strongly) by the family-1
/// pieces, so the printed interval is kept with a note.
pub fn one_over_325_config() -> PropagationConfig {
    let hi = ((Scalar::from_i64(5).sqrt() - Scalar::one()) / Scalar::from_i64(3).sqrt()).abs();
    PropagationConfig {
        name: "point-325".into(),
        n: 5,
        d_pair_count: 6,
        fixed_distances: vec![OtherDistance {
            symbolic: "y >= (sqrt3-1)/sqrt2".into(),
            value: families::threshold_sqrt3_minus_one_over_sqrt2(),
        }],
        halvable_count: 1,
        interval: Interval::new(Scalar::zero(), hi, false, true),
    }
}

/// Applies every configuration's fixed-point rule repeatedly until the
/// table stops improving or `max_rounds` is hit. Monotone: output pointwise
/// at least as tight as input; idempotent at the fixed point.
pub fn propagate(
    known: &BoundTable,
    configs: &[PropagationConfig],
    max_rounds: usize,
) -> BoundTable {
    assert!(max_rounds >= 1);
    let mut table = known.clone();
    for _ in 0..max_rounds {
        let mut improved = false;
        for cfg in configs {
            let mut total = Rational::from(BigInt::from(f_min_mono_pairs(cfg.n)));
            let mut ok = true;
            for od in &cfg.fixed_distances {
                match table.upper(&od.value) {
                    Some(u) => total -= u,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            total -= Rational::new(BigInt::from(cfg.halvable_count), BigInt::from(2));
            let den = Rational::new(
                BigInt::from(2 * cfg.d_pair_count + cfg.halvable_count),
                BigInt::from(2),
            );
            let value = total / den;
            if !value.is_positive() {
                continue;
            }
            // Improvement test at several interior points: the new piece is
            // kept if it beats the current table anywhere on its interval.
            let probes: Vec<Scalar> = match &cfg.interval.hi {
                Some(h) => [1e-3, 0.5, 1.0 - 1e-3]
                    .iter()
                    .map(|t| &cfg.interval.lo + &(&Scalar::from_f64(*t) * &(h - &cfg.interval.lo)))
                    .collect(),
                None => vec![
                    &cfg.interval.lo + &Scalar::from_f64(1e-3),
                    &cfg.interval.lo + &Scalar::one(),
                ],
            };
            let improves = probes
                .iter()
                .any(|p| table.lower(p).map_or(true, |c| value > c));
            if improves {
                table.push(BoundPiece {
                    interval: cfg.interval.clone(),
                    kind: BoundKind::Lower,
                    value,
                    provenance: format!("propagate:{} (halving + expectation)", cfg.name),
                });
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    table
}
