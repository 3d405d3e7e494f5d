//! Geometry of the Hawaiian Earring `ℍ = ∪ₙ Lₙ`.
//!
//! `Lₙ` is the circle of radius `1/n` through the origin. Points are either
//! the origin or a (circle, turn) pair; paths are finite lists of
//! constant-speed whole-turn arc segments. The length metric is used
//! throughout: distances are exact rational multiples of π, so every speed
//! and distance claim reduces to a rational inequality against a certified
//! π enclosure.
//!
//! The module constructs the standard loops `φₙ`, the commutator loops
//! `c_k` on the circle pair `(n_k, n_k + 1)` (with `n_k` the least integer
//! satisfying `8π·2^k·k! ≤ n_k`, which makes `c_k` 1-Lipschitz on its
//! domain `[0, λ(k)]`), the loop family `σₙ` glued interval-wise over the
//! order embedding `τ`, and the word projection onto the free group of a
//! tracked circle pair.

use crate::certified::{pi_default, pi_multiple_le, CertifiedReal};
use crate::freegroup::{reduce, Letter, Word};
use crate::rational::{format_rational, Rational};
use crate::seqorder::{enumerate_b_capped, lambda, locate, tau, LocateResult, Seq, SeqError};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::Mutex;
use std::sync::OnceLock;
use thiserror::Error;

/// Default cap for the recursion verifier (`σ₃ = c₃·σ₄⋯σ₄` is the deepest).
pub const DEFAULT_RECURSION_MAX: u32 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EarringError {
    #[error("turn parameter {0} outside [0, 1]")]
    TurnOutOfRange(String),
    #[error("time {0} outside the path domain")]
    TimeOutOfDomain(String),
    #[error("segment durations must be positive")]
    EmptySegment,
    #[error("path is discontinuous at segment junction {index}")]
    Discontinuous { index: usize },
    #[error("endpoint of the first path differs from the start of the second")]
    EndpointMismatch,
    #[error("sigma argument {0} outside its domain")]
    SigmaOutOfDomain(String),
    #[error("recursion index {n} exceeds the configured maximum {max}")]
    RecursionTooDeep { n: u32, max: u32 },
    #[error("path does not start and end at the origin")]
    NotALoop,
    #[error("segment winds a non-integer number of turns on a tracked circle")]
    FractionalTurns,
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// A point of `ℍ`: the origin, or a position on circle `Lₙ` at a turn
/// fraction strictly between 0 and 1 (whole turns normalize to the origin).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum EarringPoint {
    Origin,
    Circle { circle: u64, turn: Rational },
}

impl EarringPoint {
    /// Point at `turn` (any rational; reduced mod 1) on circle `n`.
    pub fn on_circle(n: u64, turn: &Rational) -> EarringPoint {
        assert!(n >= 1);
        let reduced = turn - turn.floor();
        if reduced.is_zero() {
            EarringPoint::Origin
        } else {
            EarringPoint::Circle {
                circle: n,
                turn: reduced,
            }
        }
    }

    pub fn is_origin(&self) -> bool {
        matches!(self, EarringPoint::Origin)
    }

    /// Euclidean coordinates of the chord embedding; plotting only.
    pub fn chord_coords(&self) -> (f64, f64) {
        match self {
            EarringPoint::Origin => (0.0, 0.0),
            EarringPoint::Circle { circle, turn } => {
                let n = *circle as f64;
                let t = turn.numer().to_f64().unwrap() / turn.denom().to_f64().unwrap();
                let angle = 2.0 * std::f64::consts::PI * t;
                (-angle.cos() / n + 1.0 / n, angle.sin() / n)
            }
        }
    }
}

/// `φₙ(t)`: the constant-speed traversal of `Lₙ`, `t ∈ [0, 1]`.
pub fn phi(n: u64, t: &Rational) -> Result<EarringPoint, EarringError> {
    if t.is_negative() || t > &Rational::one() {
        return Err(EarringError::TurnOutOfRange(format_rational(t)));
    }
    Ok(EarringPoint::on_circle(n, t))
}

/// Exact coefficient `q` with `d(x, y) = q·π` in the length metric.
///
/// Same circle: `(2/n)·min(|Δturn|, 1 − |Δturn|)`. Otherwise the geodesic
/// passes through the origin and the arc distances to the origin add.
pub fn distance_pi_coeff(x: &EarringPoint, y: &EarringPoint) -> Rational {
    fn origin_coeff(p: &EarringPoint) -> Rational {
        match p {
            EarringPoint::Origin => Rational::zero(),
            EarringPoint::Circle { circle, turn } => {
                let wrap = Rational::one() - turn;
                let arc = turn.clone().min(wrap);
                Rational::new(BigInt::from(2), BigInt::from(*circle)) * arc
            }
        }
    }
    match (x, y) {
        (
            EarringPoint::Circle { circle: nx, turn: tx },
            EarringPoint::Circle { circle: ny, turn: ty },
        ) if nx == ny => {
            let diff = (tx - ty).abs();
            let around = Rational::one() - &diff;
            let arc = diff.min(around);
            Rational::new(BigInt::from(2), BigInt::from(*nx)) * arc
        }
        _ => origin_coeff(x) + origin_coeff(y),
    }
}

/// Length-metric distance as a certified enclosure of the π-multiple.
pub fn distance(x: &EarringPoint, y: &EarringPoint) -> CertifiedReal {
    pi_default().scale(&distance_pi_coeff(x, y))
}

/// One constant-speed piece of a path: a rest at the origin, or an arc on a
/// fixed circle with signed orientation and a positive turn speed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Motion {
    Rest,
    Arc {
        circle: u64,
        orientation: i8,
        start_turn: Rational,
        turn_speed: Rational,
    },
}

impl Motion {
    fn point_at(&self, local: &Rational) -> EarringPoint {
        match self {
            Motion::Rest => EarringPoint::Origin,
            Motion::Arc {
                circle,
                orientation,
                start_turn,
                turn_speed,
            } => {
                let signed = Rational::from_integer(BigInt::from(*orientation as i64));
                let turn = start_turn + signed * turn_speed * local;
                EarringPoint::on_circle(*circle, &turn)
            }
        }
    }

    /// `(2/circle)·turn_speed`: the length-metric speed as a π-coefficient.
    fn speed_pi_coeff(&self) -> Rational {
        match self {
            Motion::Rest => Rational::zero(),
            Motion::Arc {
                circle, turn_speed, ..
            } => Rational::new(BigInt::from(2), BigInt::from(*circle)) * turn_speed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSegment {
    pub start_time: Rational,
    pub duration: Rational,
    pub motion: Motion,
}

/// A piecewise constant-speed path `[0, total_length] → ℍ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePath {
    segments: Vec<PathSegment>,
    total_length: Rational,
}

impl PiecewisePath {
    /// Builds a path from `(motion, duration)` pieces laid end to end;
    /// junctions must agree pointwise.
    pub fn new(pieces: Vec<(Motion, Rational)>) -> Result<Self, EarringError> {
        if pieces.is_empty() {
            return Err(EarringError::EmptySegment);
        }
        let mut segments = Vec::with_capacity(pieces.len());
        let mut clock = Rational::zero();
        for (motion, duration) in pieces {
            if !duration.is_positive() {
                return Err(EarringError::EmptySegment);
            }
            segments.push(PathSegment {
                start_time: clock.clone(),
                duration: duration.clone(),
                motion,
            });
            clock += duration;
        }
        for i in 0..segments.len() - 1 {
            let here = segments[i].motion.point_at(&segments[i].duration);
            let next = segments[i + 1].motion.point_at(&Rational::zero());
            if here != next {
                return Err(EarringError::Discontinuous { index: i });
            }
        }
        Ok(PiecewisePath {
            segments,
            total_length: clock,
        })
    }

    /// The rest path at the origin of the given duration.
    pub fn rest(duration: Rational) -> Self {
        PiecewisePath::new(vec![(Motion::Rest, duration)]).unwrap()
    }

    /// One whole traversal of `Lₙ` over `duration`, signed by orientation.
    pub fn circle_loop(n: u64, duration: Rational, orientation: i8) -> Self {
        assert!(orientation == 1 || orientation == -1);
        let speed = duration.recip();
        PiecewisePath::new(vec![(
            Motion::Arc {
                circle: n,
                orientation,
                start_turn: Rational::zero(),
                turn_speed: speed,
            },
            duration,
        )])
        .unwrap()
    }

    pub fn total_length(&self) -> &Rational {
        &self.total_length
    }

    pub fn segments(&self) -> &[PathSegment] {
        &self.segments
    }

    pub fn start(&self) -> EarringPoint {
        self.segments[0].motion.point_at(&Rational::zero())
    }

    pub fn end(&self) -> EarringPoint {
        let last = self.segments.last().unwrap();
        last.motion.point_at(&last.duration)
    }

    pub fn eval(&self, t: &Rational) -> Result<EarringPoint, EarringError> {
        if t.is_negative() || t > &self.total_length {
            return Err(EarringError::TimeOutOfDomain(format_rational(t)));
        }
        // half-open pieces, the final endpoint goes to the last segment
        let idx = self
            .segments
            .iter()
            .rposition(|s| &s.start_time <= t)
            .unwrap_or_default();
        let seg = &self.segments[idx];
        Ok(seg.motion.point_at(&(t - &seg.start_time)))
    }

    /// Concatenation; domains add, the junction must match.
    pub fn concat(&self, other: &PiecewisePath) -> Result<PiecewisePath, EarringError> {
        if self.end() != other.start() {
            return Err(EarringError::EndpointMismatch);
        }
        let mut pieces: Vec<(Motion, Rational)> = self
            .segments
            .iter()
            .map(|s| (s.motion.clone(), s.duration.clone()))
            .collect();
        pieces.extend(
            other
                .segments
                .iter()
                .map(|s| (s.motion.clone(), s.duration.clone())),
        );
        PiecewisePath::new(pieces)
    }

    /// Time reversal; orientations flip, start turns move to segment ends.
    pub fn reverse(&self) -> PiecewisePath {
        let pieces: Vec<(Motion, Rational)> = self
            .segments
            .iter()
            .rev()
            .map(|s| {
                let motion = match &s.motion {
                    Motion::Rest => Motion::Rest,
                    Motion::Arc {
                        circle,
                        orientation,
                        start_turn,
                        turn_speed,
                    } => {
                        let signed = Rational::from_integer(BigInt::from(*orientation as i64));
                        let end_turn = start_turn + signed * turn_speed * &s.duration;
                        let normalized = &end_turn - end_turn.floor();
                        Motion::Arc {
                            circle: *circle,
                            orientation: -orientation,
                            start_turn: normalized,
                            turn_speed: turn_speed.clone(),
                        }
                    }
                };
                (motion, s.duration.clone())
            })
            .collect();
        PiecewisePath::new(pieces).expect("reversal preserves continuity")
    }

    /// Largest length-metric segment speed, as an exact π-coefficient.
    pub fn max_speed_pi_coeff(&self) -> Rational {
        self.segments
            .iter()
            .map(|s| s.motion.speed_pi_coeff())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Certified enclosure of the maximal speed; an upper bound for the
    /// length-metric Lipschitz constant of the path.
    pub fn max_speed(&self) -> CertifiedReal {
        pi_default().scale(&self.max_speed_pi_coeff())
    }
}

/// `n_k`: the least integer `n` with `8π·2^k·k! ≤ n`, decided with a
/// certified π enclosure tightened until the ceiling is unambiguous.
/// Monotone with `n_{k+1} > n_k + 1`.
pub fn choose_n(k: u32) -> u64 {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(&hit) = cache.lock().unwrap().get(&k) {
        return hit;
    }
    assert!(k >= 1);
    let bound = Rational::from_integer(
        BigInt::from(8) * crate::rational::pow2(k) * crate::rational::factorial(k),
    );
    let mut terms = 4usize;
    let value = loop {
        let pi = crate::certified::pi_bounds(terms);
        let lo = (bound.clone() * pi.lo()).ceil().to_integer();
        let hi = (bound.clone() * pi.hi()).ceil().to_integer();
        if lo == hi {
            break lo.to_u64().expect("n_k fits in u64");
        }
        terms *= 2;
        assert!(terms <= 1 << 14, "π precision runaway in choose_n");
    };
    cache.lock().unwrap().insert(k, value);
    value
}

/// The commutator loop `c_k : [0, λ(k)] → ℍ`: four whole-turn segments on
/// the circle pair `(n_k, n_k+1)` in the order forward / forward / reversed
/// / reversed, each lasting `λ(k)/4`. 1-Lipschitz by the choice of `n_k`.
pub fn commutator_loop(k: u32) -> PiecewisePath {
    assert!(k >= 1);
    let n = choose_n(k);
    let lam = lambda(k).expect("k >= 1");
    let quarter = lam / Rational::from_integer(BigInt::from(4));
    let fwd_a = PiecewisePath::circle_loop(n, quarter.clone(), 1);
    let fwd_b = PiecewisePath::circle_loop(n + 1, quarter.clone(), 1);
    let rev_a = PiecewisePath::circle_loop(n, quarter.clone(), -1);
    let rev_b = PiecewisePath::circle_loop(n + 1, quarter, -1);
    fwd_a
        .concat(&fwd_b)
        .and_then(|p| p.concat(&rev_a))
        .and_then(|p| p.concat(&rev_b))
        .expect("commutator segments join at the origin")
}

/// Evaluates `σₙ` at `t` using covering intervals of generation `≤ depth`.
///
/// `σ₁` is defined on `[0, 1]` piece by piece: on `[τ(s), τ(s+⟨1⟩))` it is
/// `c_{ℓ(s)}(t − τ(s))`. For `n > 1` the domain is `[0, 2λ(n)]` and the
/// evaluation shifts by `τ(n·⟨1⟩)`. When `t` resolves to an interval the
/// value is exact (error bound 0); on a gap the value is the origin and the
/// returned bound certifies the distance to the true value (σ₁ is
/// 1-Lipschitz and all interval endpoints map to the origin).
pub fn sigma(
    n: u32,
    t: &Rational,
    depth: u32,
) -> Result<(EarringPoint, Rational), EarringError> {
    assert!(n >= 1);
    let x = if n == 1 {
        if t.is_negative() || t > &Rational::one() {
            return Err(EarringError::SigmaOutOfDomain(format_rational(t)));
        }
        t.clone()
    } else {
        let span = Rational::from_integer(BigInt::from(2)) * lambda(n)?;
        if t.is_negative() || t > &span {
            return Err(EarringError::SigmaOutOfDomain(format_rational(t)));
        }
        let shift = tau(&Seq::repeated(n, 1)?)?;
        t + shift
    };
    match locate(&x, depth)? {
        LocateResult::Interval { seq, offset } => {
            let block = commutator_loop(seq.len() as u32);
            let point = block.eval(&offset).expect("offset < λ(ℓ(s))");
            Ok((point, Rational::zero()))
        }
        LocateResult::Gap { bound, .. } => Ok((EarringPoint::Origin, bound)),
    }
}

/// The ordered symbolic assembly of `σ₁` up to block generation `cutoff`:
/// the concatenation of the blocks `c_{ℓ(s)}` for all `s ∈ B` with
/// `ℓ(s) ≤ cutoff`, in `≺`-order. Time is compressed (the gaps between
/// intervals are dropped), which leaves the traversal order — all the word
/// projection sees — intact.
pub fn sigma1_blocks(cutoff: u32) -> Result<PiecewisePath, EarringError> {
    assert!(cutoff >= 1);
    let mut all: Vec<Seq> = Vec::new();
    for n in 1..=cutoff {
        all.extend(enumerate_b_capped(n, cutoff.max(crate::seqorder::DEFAULT_ENUM_MAX))?);
    }
    all.sort();
    let mut path: Option<PiecewisePath> = None;
    for s in &all {
        let block = commutator_loop(s.len() as u32);
        path = Some(match path {
            None => block,
            Some(p) => p.concat(&block)?,
        });
    }
    Ok(path.expect("cutoff >= 1 gives at least one block"))
}

/// Projects a loop through `p_k` (identity on `L_{n_k} ∪ L_{n_k+1}`,
/// everything else to the origin) and reads off the reduced word in the
/// free group on `a = [φ_{n_k}]`, `b = [φ_{n_k+1}]`.
///
/// Whole-turn segments on the tracked pair become letters; all other
/// segments collapse. A tracked segment covering a fractional number of
/// turns is rejected.
pub fn project_word(path: &PiecewisePath, k: u32) -> Result<Word, EarringError> {
    if !path.start().is_origin() || !path.end().is_origin() {
        return Err(EarringError::NotALoop);
    }
    let n = choose_n(k);
    let tracked = [n, n + 1];
    let mut letters: Vec<Letter> = Vec::new();
    for seg in path.segments() {
        if let Motion::Arc {
            circle,
            orientation,
            turn_speed,
            ..
        } = &seg.motion
        {
            if !tracked.contains(circle) {
                continue;
            }
            let turns = turn_speed * &seg.duration;
            if !turns.is_integer() {
                return Err(EarringError::FractionalTurns);
            }
            let count = turns
                .to_integer()
                .to_u64()
                .expect("turn count is a small positive integer");
            let generator = if *circle == n { 1 } else { 2 };
            for _ in 0..count {
                letters.push((generator, *orientation));
            }
        }
    }
    Ok(reduce(&letters))
}

/// Result of sampling both sides of `σ_{n−1} = c_{n−1} · σₙ ⋯ σₙ`.
#[derive(Debug, Clone)]
pub struct RecursionReport {
    pub n: u32,
    pub samples: u32,
    pub resolved: u32,
    /// Upper bound (π-enclosure) on the distance at any sample.
    pub max_discrepancy: Rational,
    pub pass: bool,
}

impl RecursionReport {
    /// Verification-report form: `{lemma, parameters, samples,
    /// max_discrepancy, pass}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lemma": format!("sigma_{} = c_{} * sigma_{}^{}", self.n - 1, self.n - 1, self.n, self.n),
            "parameters": { "n": self.n, "resolved": self.resolved },
            "samples": self.samples,
            "max_discrepancy": format_rational(&self.max_discrepancy),
            "pass": self.pass,
        })
    }
}

/// Samples the recursion identity at `sample_count` equispaced times in
/// `[0, 2λ(n−1)]`. Samples resolved on both sides must agree exactly; on
/// gaps the distance may not exceed the sum of the two certified bounds.
pub fn verify_recursion(
    n: u32,
    sample_count: u32,
    depth: u32,
    max_n: u32,
) -> Result<RecursionReport, EarringError> {
    assert!(n >= 2 && sample_count >= 2);
    if n > max_n {
        return Err(EarringError::RecursionTooDeep { n, max: max_n });
    }
    let lam_prev = lambda(n - 1)?;
    let two_lam_n = Rational::from_integer(BigInt::from(2)) * lambda(n)?;
    let domain = Rational::from_integer(BigInt::from(2)) * &lam_prev;
    let c_prev = commutator_loop(n - 1);
    let copies = BigInt::from(n as i64 - 1);

    let mut resolved = 0u32;
    let mut max_disc = Rational::zero();
    let mut pass = true;
    for j in 0..sample_count {
        let t = &domain * Rational::new(BigInt::from(j), BigInt::from(sample_count - 1));
        let (left, err_left) = sigma(n - 1, &t, depth)?;
        let (right, err_right) = if t < lam_prev {
            (c_prev.eval(&t)?, Rational::zero())
        } else {
            let since = &t - &lam_prev;
            let mut copy = (&since / &two_lam_n).floor().to_integer();
            if copy > copies {
                copy = copies.clone();
            }
            let local = since - Rational::from_integer(copy) * &two_lam_n;
            sigma(n, &local, depth)?
        };
        let budget = &err_left + &err_right;
        if err_left.is_zero() && err_right.is_zero() {
            resolved += 1;
            if left != right {
                pass = false;
                let coeff = distance_pi_coeff(&left, &right);
                let hi = pi_default().scale(&coeff).hi().clone();
                if hi > max_disc {
                    max_disc = hi;
                }
            }
        } else {
            let coeff = distance_pi_coeff(&left, &right);
            if !pi_multiple_le(&coeff, &budget) {
                pass = false;
            }
            let hi = pi_default().scale(&coeff).hi().clone();
            if hi > max_disc {
                max_disc = hi;
            }
        }
    }
    Ok(RecursionReport {
        n,
        samples: sample_count,
        resolved,
        max_discrepancy: max_disc,
        pass,
    })
}
