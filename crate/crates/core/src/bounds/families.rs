//! The five parametric five-point families behind the piecewise lower
//! bounds on p_d. Each family fixes a combinatorial pattern of unit pairs
//! and d-pairs among five points, leaving two free distances x and y; the
//! expectation argument then yields p_d >= (1 - p_x - p_y) / n_d on the
//! d-range swept by the family parameter.

use super::{rat, BoundKind, BoundPiece, BoundTable, BoundsError, Interval, Rational};
use crate::geometry::{circle_intersect, dist2, Point, Scalar, Tolerance};
use num_traits::Signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl Family {
    pub fn all() -> [Family; 5] {
        [Family::F1, Family::F2, Family::F3, Family::F4, Family::F5]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::F1 => "family-1",
            Family::F2 => "family-2",
            Family::F3 => "family-3",
            Family::F4 => "family-4",
            Family::F5 => "family-5",
        }
    }

    /// Number of d-pairs among the five points.
    pub fn d_pair_count(&self) -> u64 {
        match self {
            Family::F1 => 2,
            Family::F2 => 6,
            Family::F3 => 5,
            Family::F4 => 3,
            Family::F5 => 4,
        }
    }

    fn branches(&self) -> &'static [Branch] {
        match self {
            Family::F1 | Family::F3 => &[Branch::Near],
            _ => &[Branch::Near, Branch::Far],
        }
    }

    fn has_two_branches(&self) -> bool {
        self.branches().len() == 2
    }
}

/// Arrangement branch: `Near` is the non-crossing placement of the movable
/// pair, `Far` the crossing one. Single-branch families accept either.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Near,
    Far,
}

impl Branch {
    fn suffix(&self) -> &'static str {
        match self {
            Branch::Near => "near",
            Branch::Far => "far",
        }
    }
}

// ---------------------------------------------------------------------------
// Named threshold constants.
// ---------------------------------------------------------------------------

pub fn threshold_half() -> Scalar {
    Scalar::from_i64(1) / Scalar::from_i64(2)
}

pub fn threshold_two_over_sqrt15() -> Scalar {
    Scalar::from_i64(2) / Scalar::from_i64(15).sqrt()
}

pub fn threshold_sqrt3_minus_one_over_sqrt2() -> Scalar {
    (Scalar::from_i64(3).sqrt() - Scalar::one()) / Scalar::from_i64(2).sqrt()
}

/// (sqrt(3)+1)/sqrt(2) = 1.9318...: the leg length at which the second
/// chained configuration closes, threshold of the k = 25 chain.
pub fn bd_equals_d_threshold() -> Scalar {
    (Scalar::from_i64(3).sqrt() + Scalar::one()) / Scalar::from_i64(2).sqrt()
}

fn sqrt3() -> Scalar {
    Scalar::from_i64(3).sqrt()
}

// ---------------------------------------------------------------------------
// Family parameterizations.
// ---------------------------------------------------------------------------

struct Domain {
    x_lo: Scalar,
    x_hi: Option<Scalar>,
    lo_closed: bool,
    hi_closed: bool,
    /// Whether d(x) is increasing on the branch.
    increasing: bool,
}

fn domain(family: Family, branch: Branch) -> Domain {
    let two = Scalar::from_i64(2);
    match (family, branch) {
        (Family::F1, _) => Domain {
            x_lo: -Scalar::one(),
            x_hi: Some(sqrt3()),
            lo_closed: false,
            hi_closed: true,
            increasing: true,
        },
        (Family::F2, Branch::Near) => Domain {
            x_lo: Scalar::zero(),
            x_hi: Some(sqrt3() / &two),
            lo_closed: true,
            hi_closed: true,
            increasing: false,
        },
        (Family::F2, Branch::Far) => Domain {
            x_lo: Scalar::zero(),
            x_hi: None,
            lo_closed: true,
            hi_closed: false,
            increasing: true,
        },
        (Family::F3, _) => Domain {
            x_lo: -(sqrt3() / &two),
            x_hi: None,
            lo_closed: false,
            hi_closed: false,
            increasing: true,
        },
        (Family::F4, Branch::Near) => Domain {
            x_lo: Scalar::zero(),
            x_hi: Some(Scalar::one()),
            lo_closed: false,
            hi_closed: false,
            increasing: false,
        },
        (Family::F4, Branch::Far) => Domain {
            // d <= 2 caps x at (sqrt(15) - sqrt(3))/2.
            x_lo: Scalar::zero(),
            x_hi: Some((Scalar::from_i64(15).sqrt() - sqrt3()) / &two),
            lo_closed: false,
            hi_closed: true,
            increasing: true,
        },
        (Family::F5, Branch::Near) => Domain {
            x_lo: Scalar::zero(),
            x_hi: Some(family5_x_of_d(&threshold_half())),
            lo_closed: true,
            hi_closed: false,
            increasing: false,
        },
        (Family::F5, Branch::Far) => Domain {
            x_lo: Scalar::zero(),
            x_hi: Some(Scalar::from_i64(6).sqrt()),
            lo_closed: true,
            hi_closed: true,
            increasing: true,
        },
    }
}

/// The free distance x of family 5 as a closed form in d (valid on
/// [1/2, 2]); the inverse is obtained by bisection.
pub fn family5_x_of_d(d: &Scalar) -> Scalar {
    let two = Scalar::from_i64(2);
    let four = Scalar::from_i64(4);
    let d2 = d.square();
    let t1 = &d2 / &two - threshold_half();
    let quarter = Scalar::one() / &four;
    let t2 = (&d2 - &d2.square() / &four).sqrt() - (&d2 - &quarter).sqrt();
    (t1.square() + t2.square()).sqrt()
}

fn f5_d_of_x(branch: Branch, x: &Scalar) -> Scalar {
    let two = Scalar::from_i64(2);
    let (mut lo, mut hi, increasing) = match branch {
        Branch::Near => (threshold_half(), Scalar::one(), false),
        Branch::Far => (Scalar::one(), Scalar::from_i64(2), true),
    };
    let width_tol = Scalar::from_f64(1e-14);
    for _ in 0..200 {
        let mid = (&lo + &hi) / &two;
        let xm = family5_x_of_d(&mid);
        let go_up = if increasing { xm < *x } else { xm > *x };
        if go_up {
            lo = mid;
        } else {
            hi = mid;
        }
        if (&hi - &lo) < width_tol {
            break;
        }
    }
    (&lo + &hi) / &two
}

/// The distance d swept by the family as a function of the free distance x
/// (signed for families 1 and 3, nonnegative otherwise).
pub fn family_d_of_x(family: Family, branch: Branch, x: &Scalar) -> Result<Scalar, BoundsError> {
    let dom = domain(family, branch);
    let slack = Scalar::from_f64(1e-12);
    let below = *x < &dom.x_lo - &slack;
    let above = match &dom.x_hi {
        None => false,
        Some(h) => *x > h + &slack,
    };
    if below || above {
        return Err(BoundsError::DomainError(format!(
            "x = {} outside the {} {} branch",
            x.to_f64(),
            family.name(),
            branch.suffix()
        )));
    }
    Ok(d_of_x_unchecked(family, branch, x))
}

fn d_of_x_unchecked(family: Family, branch: Branch, x: &Scalar) -> Scalar {
    let two = Scalar::from_i64(2);
    let four = Scalar::from_i64(4);
    match (family, branch) {
        (Family::F1, _) => {
            // d^2 = 1 + x^2/2 + x * sqrt(3 - 3 x^2 / 4).
            let inner = (Scalar::from_i64(3) - Scalar::from_i64(3) * &x.square() / &four).sqrt();
            (Scalar::one() + &x.square() / &two + x * &inner).sqrt()
        }
        (Family::F2, br) => {
            // d^2 = h^2 + 1/4 with h = sqrt(3)/2 -+ x.
            let half_sqrt3 = sqrt3() / &two;
            let h = match br {
                Branch::Near => &half_sqrt3 - x,
                Branch::Far => &half_sqrt3 + x,
            };
            (h.square() + Scalar::one() / &four).sqrt()
        }
        (Family::F3, _) | (Family::F4, Branch::Far) => {
            // d^2 = 1 + x^2 + sqrt(3) x.
            (Scalar::one() + x.square() + sqrt3() * x).sqrt()
        }
        (Family::F4, Branch::Near) => {
            // Law of cosines at the 150-degree angle: d^2 + sqrt(3) x d
            // + x^2 = 1, solved for the positive root.
            (((&four - &x.square()).sqrt() - sqrt3() * x) / &two).max(Scalar::zero())
        }
        (Family::F5, br) => f5_d_of_x(br, x),
    }
}

/// The companion distance y of the family at the given (x, d); None when
/// the branch carries y only through its range analysis (family 4, far).
fn family_y(family: Family, branch: Branch, x: &Scalar, d: &Scalar) -> Option<Scalar> {
    let two = Scalar::from_i64(2);
    let four = Scalar::from_i64(4);
    match (family, branch) {
        (Family::F1, _) => {
            Some(x / &two + (Scalar::from_i64(3) - Scalar::from_i64(3) * &x.square() / &four).sqrt())
        }
        (Family::F2, br) => {
            // y = |BE| with B = (1/4 - sqrt(3) h / 2, sqrt(3)/4 + h/2) and
            // E = (1, 0), h = sqrt(3)/2 -+ x.
            let half_sqrt3 = sqrt3() / &two;
            let h = match br {
                Branch::Near => &half_sqrt3 - x,
                Branch::Far => &half_sqrt3 + x,
            };
            let dx = -(Scalar::from_i64(3) / &four) - sqrt3() * &h / &two;
            let dy = sqrt3() / &four + &h / &two;
            Some((dx.square() + dy.square()).sqrt())
        }
        (Family::F3, _) => Some(x + sqrt3()),
        (Family::F4, Branch::Near) => {
            // Shared-apex rotation: cos(phi) = d/2 places the second small
            // triangle; y^2 = 1 + d^2 - 2 d cos(phi + 60 deg).
            let c = d / &four - sqrt3() / &four * (&four - d.square()).sqrt();
            Some((Scalar::one() + d.square() - &two * d * &c).sqrt())
        }
        (Family::F4, Branch::Far) => None,
        (Family::F5, _) => {
            // B = (0,0), C = (1,0), A = (1 - d^2/2, sqrt(d^2 - d^4/4));
            // D is the intersection of the unit circle around C with the
            // d-circle around A farther from B; y = |BD|.
            let d2 = d.square();
            let a = Point::new(
                Scalar::one() - &d2 / &two,
                (&d2 - &d2.square() / &four).sqrt(),
            );
            let c = Point::new(Scalar::one(), Scalar::zero());
            let b = Point::origin();
            let hits = circle_intersect(&c, &Scalar::one(), &a, d, &Tolerance::default()).ok()?;
            hits.into_iter()
                .map(|p| dist2(&b, &p))
                .max()
                .map(|q| q.sqrt())
        }
    }
}

// ---------------------------------------------------------------------------
// Piece construction.
// ---------------------------------------------------------------------------

fn lerp(lo: &Scalar, hi: &Scalar, t: f64) -> Scalar {
    lo + &(&Scalar::from_f64(t) * &(hi - lo))
}

/// All positive lower-bound pieces contributed by one family, with the
/// breakpoints pushed through the exact d(x) relation.
pub fn family_intervals(
    family: Family,
    known: &BoundTable,
) -> Result<Vec<BoundPiece>, BoundsError> {
    let mut out = Vec::new();
    for &branch in family.branches() {
        let dom = domain(family, branch);
        let thresholds = [
            threshold_half(),
            threshold_two_over_sqrt15(),
            threshold_sqrt3_minus_one_over_sqrt2(),
        ];
        // Breakpoints in x with ownership: the cell on the larger-|x| side
        // owns the breakpoint, because the tighter p_x bound applies there.
        let mut bps: Vec<(Scalar, bool)> = Vec::new(); // (x, right cell owns)
        let signed = dom.x_lo.is_negative();
        if signed {
            for t in thresholds.iter().rev() {
                bps.push((-t.clone(), false));
            }
        }
        for t in &thresholds {
            bps.push((t.clone(), true));
        }
        bps.retain(|(x, _)| {
            *x > dom.x_lo
                && match &dom.x_hi {
                    None => true,
                    Some(h) => *x < *h,
                }
        });

        // Cells between consecutive breakpoints.
        struct Cell {
            lo: Scalar,
            hi: Option<Scalar>,
            lo_closed: bool,
            hi_closed: bool,
        }
        let mut cells = Vec::new();
        let mut cur = (dom.x_lo.clone(), dom.lo_closed);
        for (bp, right_owns) in &bps {
            cells.push(Cell {
                lo: cur.0.clone(),
                hi: Some(bp.clone()),
                lo_closed: cur.1,
                hi_closed: !right_owns,
            });
            cur = (bp.clone(), *right_owns);
        }
        cells.push(Cell {
            lo: cur.0.clone(),
            hi: dom.x_hi.clone(),
            lo_closed: cur.1,
            hi_closed: dom.hi_closed,
        });

        for cell in &cells {
            // Strictly interior sample points; the bound inputs are
            // constant on each cell, so interior values are exact.
            let samples = match &cell.hi {
                Some(hi) => vec![
                    lerp(&cell.lo, hi, 1e-6),
                    lerp(&cell.lo, hi, 0.5),
                    lerp(&cell.lo, hi, 1.0 - 1e-6),
                ],
                None => vec![
                    &cell.lo + &Scalar::from_f64(1e-6),
                    &cell.lo + &Scalar::one(),
                ],
            };
            let mut px: Option<Rational> = None;
            let mut py: Option<Rational> = None;
            let mut feasible = true;
            for x in &samples {
                match known.upper(&x.abs()) {
                    Some(u) => px = Some(px.map_or(u.clone(), |p: Rational| p.max(u))),
                    None => {
                        feasible = false;
                        break;
                    }
                }
                let d = d_of_x_unchecked(family, branch, x);
                let yb = match family_y(family, branch, x, &d) {
                    Some(y) => known.upper(&y),
                    // Branch-analysis bound: y >= (sqrt(3)-1)/sqrt(2).
                    None => known.upper(&threshold_sqrt3_minus_one_over_sqrt2()),
                };
                match yb {
                    Some(u) => py = Some(py.map_or(u.clone(), |p: Rational| p.max(u))),
                    None => {
                        feasible = false;
                        break;
                    }
                }
            }
            if !feasible {
                continue;
            }
            let (px, py) = (px.unwrap(), py.unwrap());
            let value =
                (rat(1, 1) - px - py) / Rational::from(num_bigint::BigInt::from(family.d_pair_count()));
            if !value.is_positive() {
                continue;
            }
            // Push the x-interval through the monotone d(x).
            let d_at = |x: &Scalar| d_of_x_unchecked(family, branch, x);
            let (lo, hi, lo_closed, hi_closed) = if dom.increasing {
                (
                    d_at(&cell.lo),
                    cell.hi.as_ref().map(d_at),
                    cell.lo_closed,
                    cell.hi_closed,
                )
            } else {
                let hi_x = cell
                    .hi
                    .as_ref()
                    .expect("decreasing branches have finite domains");
                (d_at(hi_x), Some(d_at(&cell.lo)), cell.hi_closed, cell.lo_closed)
            };
            let provenance = if family.has_two_branches() {
                format!("{}-{}", family.name(), branch.suffix())
            } else {
                family.name().to_string()
            };
            out.push(BoundPiece {
                interval: Interval {
                    lo,
                    hi,
                    lo_closed,
                    hi_closed,
                },
                kind: BoundKind::Lower,
                value,
                provenance,
            });
        }
    }
    out.sort_by(|a, b| a.interval.lo.partial_cmp(&b.interval.lo).unwrap());
    Ok(out)
}

// ---------------------------------------------------------------------------
// Summary assembly.
// ---------------------------------------------------------------------------

fn tolerant_contains(iv: &Interval, d: &Scalar, slack: &Scalar) -> bool {
    let lo_ok = if iv.lo_closed {
        *d >= &iv.lo - slack
    } else {
        *d > &iv.lo + slack
    };
    let hi_ok = match &iv.hi {
        None => true,
        Some(h) => {
            if iv.hi_closed {
                *d <= h + slack
            } else {
                *d < h - slack
            }
        }
    };
    lo_ok && hi_ok
}

fn tolerant_lower(pieces: &[BoundPiece], d: &Scalar, slack: &Scalar) -> Option<Rational> {
    pieces
        .iter()
        .filter(|p| p.kind == BoundKind::Lower && tolerant_contains(&p.interval, d, slack))
        .map(|p| p.value.clone())
        .max()
}

/// The assembled piecewise lower-bound table: the pointwise maximum of all
/// five families' pieces, with uncovered d-ranges left as gaps and known
/// misprints in circulated statements recorded as notes.
pub fn summary_table(known: &BoundTable) -> Result<BoundTable, BoundsError> {
    let mut pieces: Vec<BoundPiece> = Vec::new();
    for fam in Family::all() {
        pieces.extend(family_intervals(fam, known)?);
    }

    let mut bps: Vec<Scalar> = Vec::new();
    for p in &pieces {
        bps.push(p.interval.lo.clone());
        if let Some(h) = &p.interval.hi {
            bps.push(h.clone());
        }
    }
    bps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let dedupe = Scalar::from_f64(1e-9);
    let mut uniq: Vec<Scalar> = Vec::new();
    for b in bps {
        if uniq.last().map_or(true, |u| (&b - u) > dedupe) {
            uniq.push(b);
        }
    }
    let unbounded = pieces.iter().any(|p| p.interval.hi.is_none());

    struct Cell {
        lo: Scalar,
        hi: Option<Scalar>,
        value: Rational,
        provenance: String,
        lo_closed: bool,
        hi_closed: bool,
    }
    let two = Scalar::from_i64(2);
    let slack = Scalar::from_f64(1e-12);
    let mut cells: Vec<Option<Cell>> = Vec::new();
    let probe_value = |d: &Scalar| -> Option<(Rational, String)> {
        pieces
            .iter()
            .filter(|p| p.interval.contains(d))
            .max_by(|a, b| a.value.cmp(&b.value))
            .map(|p| {
                let fam = p.provenance.split('-').take(2).collect::<Vec<_>>().join("-");
                (p.value.clone(), fam)
            })
    };
    for w in uniq.windows(2) {
        let mid = (&w[0] + &w[1]) / &two;
        cells.push(probe_value(&mid).map(|(value, provenance)| Cell {
            lo: w[0].clone(),
            hi: Some(w[1].clone()),
            value,
            provenance,
            lo_closed: false,
            hi_closed: false,
        }));
    }
    if unbounded {
        if let Some(last) = uniq.last() {
            let probe = last + &Scalar::one();
            cells.push(probe_value(&probe).map(|(value, provenance)| Cell {
                lo: last.clone(),
                hi: None,
                value,
                provenance,
                lo_closed: false,
                hi_closed: false,
            }));
        }
    }

    // Endpoint ownership: a breakpoint belongs to whichever neighboring
    // cell's value is actually attained there.
    let n = cells.len();
    for i in 0..n {
        let (head, tail) = cells.split_at_mut(i + 1);
        let left = head[i].as_mut();
        let right = tail.first_mut().and_then(|c| c.as_mut());
        if let Some(l) = left {
            let bp = match &l.hi {
                Some(h) => h.clone(),
                None => continue,
            };
            let attained = tolerant_lower(&pieces, &bp, &slack);
            if attained.as_ref() == Some(&l.value) {
                l.hi_closed = true;
            } else if let Some(r) = right {
                if attained.as_ref() == Some(&r.value) {
                    r.lo_closed = true;
                }
            }
        } else if let Some(r) = right {
            let attained = tolerant_lower(&pieces, &r.lo, &slack);
            if attained.as_ref() == Some(&r.value) {
                r.lo_closed = true;
            }
        }
    }

    // Merge contiguous cells of equal value.
    let mut merged: Vec<Cell> = Vec::new();
    for cell in cells.into_iter().flatten() {
        match merged.last_mut() {
            Some(prev)
                if prev.value == cell.value
                    && prev
                        .hi
                        .as_ref()
                        .map_or(false, |h| (&cell.lo - h).abs() <= slack) =>
            {
                prev.hi = cell.hi;
                prev.hi_closed = cell.hi_closed;
            }
            _ => merged.push(cell),
        }
    }

    let mut table = BoundTable::new();
    for c in merged {
        table.push(BoundPiece {
            interval: Interval {
                lo: c.lo,
                hi: c.hi,
                lo_closed: c.lo_closed,
                hi_closed: c.hi_closed,
            },
            kind: BoundKind::Lower,
            value: c.value,
            provenance: c.provenance,
        });
    }
    table.notes = vec![
        "value on [1.47007, 1.47123) recomputes to 28/3875 = (1 - 15/31 - 12/25)/5; the figure \
         38/3875 appearing in one circulated summary is a misprint"
            .into(),
        "endpoint 0.518878 is sqrt(14/15) - 1/sqrt(5); circulated forms print 1/sqrt(15) in \
         place of 1/sqrt(5)"
            .into(),
        "endpoint 1.47007 is sqrt((19 + 6*sqrt(5))/15); a circulated form prints \
         (1/2)sqrt(19 + 6*sqrt(5)), dropping the 1/15 under the radical"
            .into(),
        "family-4 breakpoint x = (sqrt(3)-1)/sqrt(2) is sometimes printed as (sqrt(3)-1)/2"
            .into(),
        "family-4 far-branch relation is d = sqrt(1 + x^2 + sqrt(3)*x); a circulated form \
         prints sqrt(x) for the last term"
            .into(),
        "family-5 pieces hold on (1/2, 0.52561] and [1.3587, 2]; circulated statements start \
         the near branch at 0 and garble the far-branch interval ends"
            .into(),
        "family-1 relation is d = sqrt(1 + x^2/2 + x*sqrt(3 - 3*x^2/4)); a circulated form \
         misplaces the factor x inside the final radical"
            .into(),
        "family-4 far branch: the companion distance bound y >= (sqrt(3)-1)/sqrt(2) is taken \
         from the branch's range analysis rather than recomputed; every far-branch piece is \
         dominated by family-1"
            .into(),
    ];
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::upper_bound_table;

    fn close(s: &Scalar, v: f64, tol: f64) {
        assert!(
            (s.to_f64() - v).abs() < tol,
            "expected {v}, got {}",
            s.to_f64()
        );
    }

    #[test]
    fn threshold_decimals() {
        close(&threshold_half(), 0.5, 1e-12);
        close(&threshold_two_over_sqrt15(), 0.5163977795, 1e-9);
        close(&threshold_sqrt3_minus_one_over_sqrt2(), 0.5176380902, 1e-9);
        close(&bd_equals_d_threshold(), 1.9318516526, 1e-9);
    }

    #[test]
    fn breakpoint_decimals() {
        let t2 = threshold_two_over_sqrt15();
        let t3 = threshold_sqrt3_minus_one_over_sqrt2();
        let half = threshold_half();
        let cases: Vec<(Family, Branch, Scalar, f64)> = vec![
            (Family::F4, Branch::Near, t3.clone(), 0.517638),
            (Family::F1, Branch::Near, -t2.clone(), 0.518878),
            (Family::F1, Branch::Near, -half.clone(), 0.535233),
            (Family::F3, Branch::Near, -t3.clone(), 0.609404),
            (Family::F3, Branch::Near, -t2.clone(), 0.610114),
            (Family::F2, Branch::Near, half.clone(), 0.619657),
            (Family::F3, Branch::Near, half.clone(), 1.45466),
            (Family::F3, Branch::Near, t2.clone(), 1.47007),
            (Family::F3, Branch::Near, t3.clone(), 1.47123),
        ];
        for (fam, br, x, want) in cases {
            let d = family_d_of_x(fam, br, &x).unwrap();
            close(&d, want, 5e-6);
        }
    }

    #[test]
    fn family1_exact_identities() {
        let t3 = threshold_sqrt3_minus_one_over_sqrt2();
        // d(x = (sqrt3-1)/sqrt2) = sqrt(2) and d(sqrt 3) = 2 exactly.
        let d = family_d_of_x(Family::F1, Branch::Near, &t3).unwrap();
        close(&(d.square() - Scalar::from_i64(2)), 0.0, 1e-30);
        let d2 = family_d_of_x(Family::F1, Branch::Near, &sqrt3()).unwrap();
        close(&d2, 2.0, 1e-30);
        // d(-t3)^2 = 2 - sqrt(3).
        let d3 = family_d_of_x(Family::F1, Branch::Near, &(-t3)).unwrap();
        close(&(d3.square() - (Scalar::from_i64(2) - sqrt3())), 0.0, 1e-30);
    }

    #[test]
    fn family5_thresholds_and_round_trip() {
        let cases = [
            (Branch::Near, threshold_sqrt3_minus_one_over_sqrt2(), 0.51763),
            (Branch::Near, threshold_two_over_sqrt15(), 0.51814),
            (Branch::Near, threshold_half(), 0.52561),
            (Branch::Far, threshold_half(), 1.358770),
            (Branch::Far, threshold_two_over_sqrt15(), 1.36855),
            (Branch::Far, threshold_sqrt3_minus_one_over_sqrt2(), 1.36929),
        ];
        for (br, x, want) in cases {
            let d = family_d_of_x(Family::F5, br, &x).unwrap();
            close(&d, want, 5e-5);
            // Round trip through the closed form.
            close(&family5_x_of_d(&d), x.to_f64(), 1e-9);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(family_d_of_x(Family::F1, Branch::Near, &Scalar::from_i64(2)).is_err());
        assert!(family_d_of_x(Family::F4, Branch::Near, &Scalar::from_f64(1.5)).is_err());
        assert!(family_d_of_x(Family::F2, Branch::Near, &Scalar::from_i64(1)).is_err());
        // Unbounded-above domains accept large x.
        assert!(family_d_of_x(Family::F3, Branch::Near, &Scalar::from_i64(50)).is_ok());
    }

    #[test]
    fn per_family_piece_values() {
        let known = upper_bound_table();
        let expect: [(Family, [(i64, i64); 3]); 5] = [
            (Family::F1, [(1, 100), (14, 775), (1, 50)]),
            (Family::F2, [(1, 300), (14, 2325), (1, 150)]),
            (Family::F3, [(1, 250), (28, 3875), (1, 125)]),
            (Family::F4, [(1, 150), (28, 2325), (1, 75)]),
            (Family::F5, [(1, 200), (7, 775), (1, 100)]),
        ];
        for (fam, vals) in expect {
            let pieces = family_intervals(fam, &known).unwrap();
            assert!(!pieces.is_empty(), "{}", fam.name());
            let want: Vec<Rational> = vals.iter().map(|&(n, d)| rat(n, d)).collect();
            for p in &pieces {
                assert!(
                    want.contains(&p.value),
                    "{}: unexpected value {}",
                    fam.name(),
                    p.value
                );
            }
            for v in &want {
                assert!(
                    pieces.iter().any(|p| p.value == *v),
                    "{}: missing value {}",
                    fam.name(),
                    v
                );
            }
        }
    }

    #[test]
    fn summary_probes() {
        let known = upper_bound_table();
        let s = summary_table(&known).unwrap();
        let probes = [
            (0.3, Some((1i64, 50i64))),
            (0.5182, Some((14, 775))),
            (0.53, Some((1, 100))),
            (0.6, Some((1, 125))),
            (0.6098, Some((28, 3875))),
            (0.615, Some((1, 250))),
            (0.8, None), // uncovered gap
            (1.1, None),
            (1.362, Some((1, 200))),
            (1.369, Some((7, 775))),
            (1.40, Some((1, 100))),
            (1.4135, Some((14, 775))),
            (1.43, Some((1, 50))),
            (1.9, Some((1, 50))),
            (2.5, Some((1, 125))),
        ];
        for (d, want) in probes {
            let got = s.lower(&Scalar::from_f64(d));
            let want = want.map(|(n, den)| rat(n, den));
            assert_eq!(got, want, "at d = {d}");
        }
        assert!(s.notes.iter().any(|n| n.contains("38/3875")));
    }

    #[test]
    fn summary_shape() {
        let known = upper_bound_table();
        let s = summary_table(&known).unwrap();
        assert_eq!(s.pieces.len(), 12, "{:#?}", s.pieces);
        // Last piece unbounded with value 1/125 starting at 2.
        let last = s.pieces.last().unwrap();
        assert!(last.interval.hi.is_none());
        assert_eq!(last.value, rat(1, 125));
        close(&last.interval.lo, 2.0, 1e-9);
        assert!(!last.interval.lo_closed);
        // First piece reaches down to 0 (open) with value 1/50.
        let first = &s.pieces[0];
        close(&first.interval.lo, 0.0, 1e-9);
        assert!(!first.interval.lo_closed);
        assert_eq!(first.value, rat(1, 50));
        close(first.interval.hi.as_ref().unwrap(), 0.517638, 5e-6);
        // The gap: no piece covers (0.62, 1.358).
        for p in &s.pieces {
            let lo = p.interval.lo.to_f64();
            if let Some(h) = &p.interval.hi {
                assert!(h.to_f64() <= 0.6197 || lo >= 1.3586, "piece spans the gap");
            }
        }
    }

    #[test]
    fn far_branches_dominated() {
        // Every far-branch piece of families 2 and 4 is weaker than the
        // summary value at its midpoint.
        let known = upper_bound_table();
        let s = summary_table(&known).unwrap();
        let two = Scalar::from_i64(2);
        for fam in [Family::F2, Family::F4] {
            for p in family_intervals(fam, &known).unwrap() {
                let mid = match &p.interval.hi {
                    Some(h) => (&p.interval.lo + h) / &two,
                    None => &p.interval.lo + &Scalar::one(),
                };
                let best = s.lower(&mid).unwrap();
                assert!(best >= p.value, "{} at {}", p.provenance, mid.to_f64());
            }
        }
    }
}
