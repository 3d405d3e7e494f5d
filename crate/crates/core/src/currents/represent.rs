//! Chain representation of integral 1-currents on graphs, with
//! certificates, plus the winding-vector divisibility probe.
//!
//! The representation runs a ball-cover induction: cover the support with
//! balls small enough to be trees, slice off the last ball by the distance
//! function at a generic radius, fill the restricted piece by geodesic
//! cones from the ball center, and recurse on the rest. On a graph every
//! 2-current vanishes, so each piece must satisfy `[cᵢ] = Tᵢ` exactly —
//! the certificates record this, the per-piece diameter bounds, the slice
//! identities, and the final reassembly `[Σcᵢ] = T`.

use super::chain::GraphChain1;
use super::current::{GraphCurrent0, GraphCurrent1};
use super::graph::{ArcSet, GraphPoint, MetricGraph};
use super::CurrentError;
use crate::rational::{format_rational, rat, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct PieceCert {
    pub center: GraphPoint,
    pub radius: Rational,
    /// `2·radius`: certified bound for the piece image diameter.
    pub diameter_bound: Rational,
    /// `[cᵢ] = Tᵢ` verified exactly.
    pub matches_current: bool,
    /// `Vᵢ = 0`: the filling 2-current vanishes identically on a graph.
    pub filling_current_zero: bool,
}

#[derive(Debug, Clone)]
pub struct SliceCert {
    pub center: GraphPoint,
    pub radius: Rational,
    /// Both defining forms of the slice agree.
    pub dual_identity: bool,
    /// `∂([c̄]⌊(X∖U)) = [bc̄] − ⟨[c], d, r+⟩` for the part `c̄` of the
    /// subdivided result chain near `U = {d ≤ r}`; checked when the input
    /// is a cycle.
    pub slice_to_boundary: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct ChainRepCertificates {
    pub epsilon: Rational,
    pub pieces: Vec<PieceCert>,
    pub slices: Vec<SliceCert>,
    pub total_matches: bool,
    pub boundary_matches: bool,
    /// `b(Σcᵢ) = sd^m(∂-chain)`; subdivision is trivial on 0-chains.
    pub subdivision_exponent: u32,
}

impl ChainRepCertificates {
    pub fn all_pass(&self) -> bool {
        self.total_matches
            && self.boundary_matches
            && self.pieces.iter().all(|p| {
                p.matches_current
                    && p.filling_current_zero
                    && p.diameter_bound < self.epsilon
            })
            && self
                .slices
                .iter()
                .all(|s| s.dual_identity && s.slice_to_boundary.unwrap_or(true))
    }

    pub fn to_json(&self) -> Value {
        fn point_json(p: &GraphPoint) -> Value {
            match p {
                GraphPoint::Vertex(v) => json!({ "vertex": v }),
                GraphPoint::Interior { edge, position } => json!({
                    "edge": edge,
                    "position": format_rational(position),
                }),
            }
        }
        json!({
            "epsilon": format_rational(&self.epsilon),
            "pieces": self.pieces.iter().map(|p| json!({
                "center": point_json(&p.center),
                "radius": format_rational(&p.radius),
                "diameter_bound": format_rational(&p.diameter_bound),
                "matches_current": p.matches_current,
                "filling_current_zero": p.filling_current_zero,
            })).collect::<Vec<_>>(),
            "slices": self.slices.iter().map(|s| json!({
                "center": point_json(&s.center),
                "radius": format_rational(&s.radius),
                "dual_identity": s.dual_identity,
                "slice_to_boundary": s.slice_to_boundary,
            })).collect::<Vec<_>>(),
            "total_matches": self.total_matches,
            "boundary_matches": self.boundary_matches,
            "subdivision_exponent": self.subdivision_exponent,
            "pass": self.all_pass(),
        })
    }
}

/// Geodesic cone filling of a current supported in a tree ball: the chain
/// `Σ nᵢ·geodesic(center → qᵢ)` over the boundary masses. Exactness of
/// `[c] = T` is verified; failure means the ball was not a tree.
fn fill_ball(
    graph: &MetricGraph,
    piece: &GraphCurrent1,
    center: &GraphPoint,
    radius: &Rational,
) -> Result<(GraphChain1, PieceCert), CurrentError> {
    let cert = |ok: bool| PieceCert {
        center: center.clone(),
        radius: radius.clone(),
        diameter_bound: rat(2, 1) * radius,
        matches_current: ok,
        filling_current_zero: true,
    };
    if piece.is_zero() {
        return Ok((GraphChain1::zero(), cert(true)));
    }
    let boundary = piece.boundary(graph);
    let mut chain = GraphChain1::zero();
    for (q, w) in boundary.masses() {
        if q == center {
            continue; // constant geodesic carries no mass
        }
        let path = graph.geodesic(center, q);
        chain = chain.add(&GraphChain1::from_terms([(path, w)]));
    }
    if chain.to_current(graph) != *piece {
        return Err(CurrentError::BallNotContractible(format_rational(radius)));
    }
    Ok((chain, cert(true)))
}

/// Deterministic generic radius in the open window `(lo, hi)`: dyadic
/// positions are tried until the slice accepts one.
fn generic_slice(
    graph: &MetricGraph,
    current: &GraphCurrent1,
    center: &GraphPoint,
    lo: &Rational,
    hi: &Rational,
) -> Result<(Rational, GraphCurrent0), CurrentError> {
    let span = hi - lo;
    for depth in 1..=12u32 {
        let denom = BigInt::from(1i64 << depth);
        let mut numer = BigInt::from(1);
        while numer < denom {
            let r = lo + &span * Rational::new(numer.clone(), denom.clone());
            if let Ok(slice) = current.slice(graph, center, &r) {
                return Ok((r, slice));
            }
            numer += 2;
        }
    }
    Err(CurrentError::NoGenericRadius)
}

fn cover_centers(graph: &MetricGraph, support: &ArcSet, spacing: &Rational) -> Vec<GraphPoint> {
    let mut centers: Vec<GraphPoint> = Vec::new();
    for (edge, intervals) in support.per_edge.iter().enumerate() {
        let len = &graph.edges()[edge].length;
        let step = spacing / len;
        for (a, b) in intervals {
            let mut t = a.clone();
            loop {
                centers.push(GraphPoint::on_edge(graph, edge, t.clone()));
                if &t >= b {
                    break;
                }
                t = (&t + &step).min(b.clone());
            }
        }
    }
    centers.sort();
    centers.dedup();
    centers
}

fn run_representation(
    graph: &MetricGraph,
    current: &GraphCurrent1,
    epsilon: &Rational,
    cover_radius: &Rational,
) -> Result<(GraphChain1, ChainRepCertificates), CurrentError> {
    let ball_radius = rat(2, 1) * cover_radius;
    let support = current.support();
    let centers = cover_centers(graph, &support, cover_radius);
    let balls: Vec<ArcSet> = centers
        .iter()
        .map(|c| graph.sublevel_arcs(c, &ball_radius))
        .collect();
    // prefix[i] = union of balls 0..i
    let mut prefix: Vec<ArcSet> = Vec::with_capacity(centers.len());
    let mut acc = ArcSet::empty(graph);
    for ball in &balls {
        prefix.push(acc.clone());
        acc = acc.union(ball);
    }

    let original_boundary = current.boundary(graph);
    let mut remaining = current.clone();
    let mut total_chain = GraphChain1::zero();
    let mut pieces = Vec::new();
    let mut slices = Vec::new();

    for i in (1..centers.len()).rev() {
        let uncovered = remaining.support().subtract(&prefix[i]);
        if uncovered.is_empty() {
            continue;
        }
        let maxd = graph
            .max_distance_on_arcs(&centers[i], &uncovered)
            .expect("uncovered is nonempty");
        if maxd >= ball_radius {
            return Err(CurrentError::CoverFailure);
        }
        let shrunk = (&maxd + &ball_radius) / rat(2, 1);
        let alpha = (&ball_radius - &shrunk) / rat(4, 1);
        let window_lo = &shrunk + &alpha;
        let window_hi = &shrunk + rat(3, 1) * &alpha;
        let (r, slice_value) =
            generic_slice(graph, &remaining, &centers[i], &window_lo, &window_hi)?;
        // dual form of the defining identity
        let over = graph.sublevel_arcs(&centers[i], &r).complement();
        let dual = remaining
            .boundary(graph)
            .restrict_superlevel(graph, &centers[i], &r)
            .sub(&remaining.restrict(graph, &over).boundary(graph));
        slices.push(SliceCert {
            center: centers[i].clone(),
            radius: r.clone(),
            dual_identity: dual == slice_value,
            slice_to_boundary: None,
        });

        let ball_arcs = graph.sublevel_arcs(&centers[i], &r);
        let piece_current = remaining.restrict(graph, &ball_arcs);
        let rest = remaining.sub(graph, &piece_current);
        let (piece_chain, cert) = fill_ball(graph, &piece_current, &centers[i], &r)?;
        total_chain = total_chain.add(&piece_chain);
        pieces.push(cert);
        remaining = rest;
    }

    // final ball
    if !remaining.is_zero() {
        let center = &centers[0];
        if let Some(maxd) = graph.max_distance_on_arcs(center, &remaining.support()) {
            if maxd > ball_radius {
                return Err(CurrentError::CoverFailure);
            }
        }
        let (piece_chain, cert) = fill_ball(graph, &remaining, center, &ball_radius)?;
        total_chain = total_chain.add(&piece_chain);
        pieces.push(cert);
    }

    let total_matches = total_chain.to_current(graph) == *current;
    let boundary_matches = total_chain.boundary(graph).to_current() == original_boundary;

    // named property: the slice-to-boundary identity on cycles, applied to
    // the assembled chain at a sample of slice events (first, middle, last)
    if original_boundary.is_zero() && !slices.is_empty() {
        let picked = {
            let n = slices.len();
            let mut idx = vec![0, n / 2, n - 1];
            idx.dedup();
            idx
        };
        for i in picked {
            let center = slices[i].center.clone();
            let r = slices[i].radius.clone();
            slices[i].slice_to_boundary = Some(check_slice_to_boundary(
                graph,
                &total_chain,
                current,
                &center,
                &r,
            ));
        }
    }

    Ok((
        total_chain,
        ChainRepCertificates {
            epsilon: epsilon.clone(),
            pieces,
            slices,
            total_matches,
            boundary_matches,
            subdivision_exponent: 0,
        },
    ))
}

/// Restriction of `⟨[c], d, r+⟩` to chain level: for a cycle chain `c`
/// with `[c] = T`, take the part `c̄` of `sd^m(c)` meeting `U = {d ≤ r}`
/// (pieces subdivided below `r/2`) and verify
/// `∂([c̄]⌊(X∖U)) = [bc̄] − ⟨[c], d, r+⟩` exactly.
pub fn check_slice_to_boundary(
    graph: &MetricGraph,
    chain: &GraphChain1,
    chain_current: &GraphCurrent1,
    center: &GraphPoint,
    r: &Rational,
) -> bool {
    let sublevel = graph.sublevel_arcs(center, r);
    let delta = r / rat(2, 1);
    let mut subdivided = chain.clone();
    let mut m = 0u32;
    while subdivided.max_piece_length(graph) >= delta && m < 32 {
        subdivided = subdivided.subdivide(graph, 1);
        m += 1;
    }
    let meets = |path: &super::chain::GraphPath| -> bool {
        path.steps().iter().any(|s| {
            if s.from == s.to {
                return sublevel.contains_point(
                    graph,
                    &GraphPoint::on_edge(graph, s.edge, s.from.clone()),
                );
            }
            let (lo, hi) = if s.from < s.to {
                (&s.from, &s.to)
            } else {
                (&s.to, &s.from)
            };
            sublevel.per_edge[s.edge]
                .iter()
                .any(|(a, b)| a.clone().max(lo.clone()) <= b.clone().min(hi.clone()))
        })
    };
    let near_part = GraphChain1::from_terms(
        subdivided
            .terms()
            .filter(|(p, _)| meets(p))
            .map(|(p, w)| (p.clone(), w)),
    );
    let Ok(slice) = chain_current.slice(graph, center, r) else {
        return false;
    };
    let lhs = near_part
        .to_current(graph)
        .restrict(graph, &sublevel.complement())
        .boundary(graph);
    let rhs = near_part.boundary(graph).to_current().sub(&slice);
    lhs == rhs
}

/// Chain representation of an integral 1-current with certificates:
/// `[c] = T` exactly, every piece of image diameter `< ε`, all filling
/// currents zero. Cover radii shrink and retry when a ball fails to be a
/// tree or the cover degenerates.
pub fn current_to_chain1(
    graph: &MetricGraph,
    current: &GraphCurrent1,
    epsilon: &Rational,
) -> Result<(GraphChain1, ChainRepCertificates), CurrentError> {
    if !epsilon.is_positive() {
        return Err(CurrentError::NonpositiveEpsilon);
    }
    if current.is_zero() {
        return Ok((
            GraphChain1::zero(),
            ChainRepCertificates {
                epsilon: epsilon.clone(),
                pieces: Vec::new(),
                slices: Vec::new(),
                total_matches: true,
                boundary_matches: true,
                subdivision_exponent: 0,
            },
        ));
    }
    let mut radius = epsilon / rat(86, 1);
    if let Some(girth) = graph.girth() {
        radius = radius.min(girth / rat(8, 1));
    }
    let mut last = CurrentError::CoverFailure;
    for _ in 0..4 {
        match run_representation(graph, current, epsilon, &radius) {
            Ok(result) => return Ok(result),
            Err(e @ (CurrentError::BallNotContractible(_) | CurrentError::CoverFailure)) => {
                last = e;
                radius *= rat(7, 16);
            }
            Err(other) => return Err(other),
        }
    }
    Err(last)
}

/// Per-circle winding numbers of a boundaryless current on the bouquet
/// model: a cycle has constant multiplicity on each circle; nonconstant
/// multiplicity means nonzero boundary there and is rejected.
pub fn winding_vector(
    graph: &MetricGraph,
    current: &GraphCurrent1,
) -> Result<BTreeMap<u32, i64>, CurrentError> {
    if !graph.is_hawaiian_model() {
        return Err(CurrentError::NotHawaiian);
    }
    let mut vector = BTreeMap::new();
    for edge in 0..graph.edge_count() {
        let circle = edge as u32 + 1;
        match current.intervals(edge) {
            [] => {}
            [(a, b, w)] if a.is_zero() && b == &Rational::from_integer(1.into()) => {
                vector.insert(circle, *w);
            }
            _ => return Err(CurrentError::NonConstantWinding(circle)),
        }
    }
    Ok(vector)
}

/// Does every winding entry divide by every element of `divisors`?
pub fn divisible_by_all(vector: &BTreeMap<u32, i64>, divisors: &[i64]) -> bool {
    vector.values().all(|&w| {
        divisors
            .iter()
            .all(|&d| d != 0 && w.rem_euclid(d.abs()) == 0)
    })
}
