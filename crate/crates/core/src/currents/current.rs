//! 0- and 1-dimensional integral currents on a metric graph and their
//! calculus: boundary, mass, restriction, push-forward, slicing.

use super::graph::{ArcSet, EdgeImage, GraphMap, GraphPoint, MetricGraph};
use super::CurrentError;
use crate::certified::CertifiedReal;
use crate::rational::{parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Integer point masses `Σ θᵢ[xᵢ]` with distinct points and nonzero
/// weights.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphCurrent0 {
    masses: BTreeMap<GraphPoint, i64>,
}

impl GraphCurrent0 {
    pub fn zero() -> Self {
        GraphCurrent0::default()
    }

    pub fn from_masses<I: IntoIterator<Item = (GraphPoint, i64)>>(iter: I) -> Self {
        let mut masses = BTreeMap::new();
        for (p, w) in iter {
            if w == 0 {
                continue;
            }
            let entry = masses.entry(p).or_insert(0i64);
            *entry += w;
        }
        masses.retain(|_, w| *w != 0);
        GraphCurrent0 { masses }
    }

    pub fn masses(&self) -> impl Iterator<Item = (&GraphPoint, i64)> {
        self.masses.iter().map(|(p, &w)| (p, w))
    }

    pub fn is_zero(&self) -> bool {
        self.masses.is_empty()
    }

    pub fn add(&self, other: &GraphCurrent0) -> GraphCurrent0 {
        GraphCurrent0::from_masses(
            self.masses()
                .map(|(p, w)| (p.clone(), w))
                .chain(other.masses().map(|(p, w)| (p.clone(), w))),
        )
    }

    pub fn negate(&self) -> GraphCurrent0 {
        GraphCurrent0::from_masses(self.masses().map(|(p, w)| (p.clone(), -w)))
    }

    pub fn sub(&self, other: &GraphCurrent0) -> GraphCurrent0 {
        self.add(&other.negate())
    }

    /// Total variation `Σ|θᵢ|`.
    pub fn mass(&self) -> u64 {
        self.masses.values().map(|w| w.unsigned_abs()).sum()
    }

    /// Weight sum `T(1)`; zero whenever the current bounds.
    pub fn total_weight(&self) -> i64 {
        self.masses.values().sum()
    }

    /// Restriction to a closed arc set.
    pub fn restrict(&self, graph: &MetricGraph, arcs: &ArcSet) -> GraphCurrent0 {
        GraphCurrent0::from_masses(
            self.masses()
                .filter(|(p, _)| arcs.contains_point(graph, p))
                .map(|(p, w)| (p.clone(), w)),
        )
    }

    /// Restriction to the strict superlevel set `{d(center, ·) > r}`,
    /// decided pointwise (the closed-complement arc set would misplace
    /// points exactly at distance `r`).
    pub fn restrict_superlevel(
        &self,
        graph: &MetricGraph,
        center: &GraphPoint,
        r: &Rational,
    ) -> GraphCurrent0 {
        GraphCurrent0::from_masses(
            self.masses()
                .filter(|(p, _)| &graph.point_distance(center, p) > r)
                .map(|(p, w)| (p.clone(), w)),
        )
    }

    pub fn push_forward(
        &self,
        map: &GraphMap,
        codomain: &MetricGraph,
    ) -> GraphCurrent0 {
        GraphCurrent0::from_masses(
            self.masses()
                .map(|(p, w)| (map.apply_point(codomain, p), w)),
        )
    }
}

/// An integer-multiplicity arc system: per edge, a disjoint sorted list of
/// intervals with nonzero signed weights (sign = orientation relative to
/// the edge direction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCurrent1 {
    per_edge: Vec<Vec<(Rational, Rational, i64)>>,
}

impl GraphCurrent1 {
    pub fn zero(graph: &MetricGraph) -> Self {
        GraphCurrent1 {
            per_edge: vec![Vec::new(); graph.edge_count()],
        }
    }

    /// Builds the canonical step-function form from raw signed pieces.
    /// Pieces may overlap (weights add) and may be given reversed
    /// (`from > to` flips the sign). Pieces with `from == to` vanish.
    pub fn from_raw<I: IntoIterator<Item = (usize, Rational, Rational, i64)>>(
        graph: &MetricGraph,
        pieces: I,
    ) -> Result<Self, CurrentError> {
        let mut by_edge: Vec<Vec<(Rational, Rational, i64)>> =
            vec![Vec::new(); graph.edge_count()];
        for (edge, from, to, weight) in pieces {
            if edge >= graph.edge_count() {
                return Err(CurrentError::BadEdge);
            }
            if weight == 0 || from == to {
                continue;
            }
            let (a, b, w) = if from < to {
                (from, to, weight)
            } else {
                (to, from, -weight)
            };
            if a.is_negative() || b > Rational::one() {
                return Err(CurrentError::BadInterval);
            }
            by_edge[edge].push((a, b, w));
        }
        let per_edge = by_edge
            .into_iter()
            .map(|pieces| {
                // sweep: sum weights over elementary intervals
                let mut cuts: Vec<Rational> = Vec::new();
                for (a, b, _) in &pieces {
                    cuts.push(a.clone());
                    cuts.push(b.clone());
                }
                cuts.sort();
                cuts.dedup();
                let mut out: Vec<(Rational, Rational, i64)> = Vec::new();
                for pair in cuts.windows(2) {
                    let (lo, hi) = (&pair[0], &pair[1]);
                    let weight: i64 = pieces
                        .iter()
                        .filter(|(a, b, _)| a <= lo && hi <= b)
                        .map(|(_, _, w)| *w)
                        .sum();
                    if weight == 0 {
                        continue;
                    }
                    match out.last_mut() {
                        Some((_, end, w)) if *end == *lo && *w == weight => {
                            *end = hi.clone();
                        }
                        _ => out.push((lo.clone(), hi.clone(), weight)),
                    }
                }
                out
            })
            .collect();
        Ok(GraphCurrent1 { per_edge })
    }

    pub fn intervals(&self, edge: usize) -> &[(Rational, Rational, i64)] {
        &self.per_edge[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.per_edge.len()
    }

    pub fn is_zero(&self) -> bool {
        self.per_edge.iter().all(|v| v.is_empty())
    }

    pub fn iter_pieces(
        &self,
    ) -> impl Iterator<Item = (usize, &Rational, &Rational, i64)> + '_ {
        self.per_edge
            .iter()
            .enumerate()
            .flat_map(|(e, v)| v.iter().map(move |(a, b, w)| (e, a, b, *w)))
    }

    pub fn add(&self, graph: &MetricGraph, other: &GraphCurrent1) -> GraphCurrent1 {
        GraphCurrent1::from_raw(
            graph,
            self.iter_pieces()
                .map(|(e, a, b, w)| (e, a.clone(), b.clone(), w))
                .chain(
                    other
                        .iter_pieces()
                        .map(|(e, a, b, w)| (e, a.clone(), b.clone(), w)),
                ),
        )
        .expect("canonical pieces are valid")
    }

    pub fn negate(&self, graph: &MetricGraph) -> GraphCurrent1 {
        GraphCurrent1::from_raw(
            graph,
            self.iter_pieces()
                .map(|(e, a, b, w)| (e, a.clone(), b.clone(), -w)),
        )
        .expect("canonical pieces are valid")
    }

    pub fn sub(&self, graph: &MetricGraph, other: &GraphCurrent1) -> GraphCurrent1 {
        self.add(graph, &other.negate(graph))
    }

    /// Signed endpoint deltas of every weighted arc, merged.
    pub fn boundary(&self, graph: &MetricGraph) -> GraphCurrent0 {
        let mut masses: Vec<(GraphPoint, i64)> = Vec::new();
        for (edge, a, b, w) in self.iter_pieces() {
            masses.push((GraphPoint::on_edge(graph, edge, b.clone()), w));
            masses.push((GraphPoint::on_edge(graph, edge, a.clone()), -w));
        }
        GraphCurrent0::from_masses(masses)
    }

    /// Total weighted length in scale units.
    pub fn mass_scale_units(&self, graph: &MetricGraph) -> Rational {
        let mut total = Rational::zero();
        for (edge, a, b, w) in self.iter_pieces() {
            total += (b - a) * &graph.edges()[edge].length * Rational::from_integer(w.abs().into());
        }
        total
    }

    /// Mass `M(T) = Σ |weight|·arc length` as a certified real.
    pub fn mass(&self, graph: &MetricGraph) -> CertifiedReal {
        graph.scaled(&self.mass_scale_units(graph))
    }

    /// Support as an arc set.
    pub fn support(&self) -> ArcSet {
        ArcSet {
            per_edge: self
                .per_edge
                .iter()
                .map(|v| {
                    ArcSet::normalize_intervals(
                        v.iter().map(|(a, b, _)| (a.clone(), b.clone())).collect(),
                    )
                })
                .collect(),
        }
    }

    /// Restriction `T⌊A` to a closed arc set: interval intersection.
    pub fn restrict(&self, graph: &MetricGraph, arcs: &ArcSet) -> GraphCurrent1 {
        let mut pieces = Vec::new();
        for (edge, a, b, w) in self.iter_pieces() {
            for (c, d) in &arcs.per_edge[edge] {
                let lo = a.clone().max(c.clone());
                let hi = b.clone().min(d.clone());
                if lo < hi {
                    pieces.push((edge, lo, hi, w));
                }
            }
        }
        GraphCurrent1::from_raw(graph, pieces).expect("intersection stays valid")
    }

    /// Push-forward along a piecewise-affine graph map; collapsed edges
    /// contribute nothing, reversed images flip orientation.
    pub fn push_forward(
        &self,
        map: &GraphMap,
        domain: &MetricGraph,
        codomain: &MetricGraph,
    ) -> Result<GraphCurrent1, CurrentError> {
        map.validate(domain, codomain)?;
        let mut pieces = Vec::new();
        for (edge, a, b, w) in self.iter_pieces() {
            match &map.edge_images[edge] {
                EdgeImage::ToVertex(_) => {}
                EdgeImage::Linear {
                    edge: target,
                    offset,
                    slope,
                } => {
                    let from = offset + slope * a;
                    let to = offset + slope * b;
                    pieces.push((*target, from, to, w));
                }
            }
        }
        GraphCurrent1::from_raw(codomain, pieces)
    }

    /// The slice `⟨T, d, r⟩ = ∂(T⌊{d ≤ r}) − (∂T)⌊{d ≤ r}` by the distance
    /// function to `center` at a generic radius. Non-generic radii (hitting
    /// a vertex distance, a multiplicity breakpoint, or a tangency) are
    /// rejected.
    pub fn slice(
        &self,
        graph: &MetricGraph,
        center: &GraphPoint,
        r: &Rational,
    ) -> Result<GraphCurrent0, CurrentError> {
        if !r.is_positive() {
            return Err(CurrentError::NonGenericRadius(super::fmt_rat(r)));
        }
        let vertex_dist = graph.vertex_distances(center);
        if vertex_dist.iter().any(|d| d == r) {
            return Err(CurrentError::NonGenericRadius(super::fmt_rat(r)));
        }
        let sub = graph.sublevel_arcs(center, r);
        for (edge, intervals) in sub.per_edge.iter().enumerate() {
            for (a, b) in intervals {
                if a == b {
                    // isolated tangency
                    return Err(CurrentError::NonGenericRadius(super::fmt_rat(r)));
                }
                for endpoint in [a, b] {
                    if endpoint.is_zero() || endpoint.is_one() {
                        continue;
                    }
                    // crossing points may not coincide with multiplicity
                    // breakpoints of T
                    if self.per_edge[edge]
                        .iter()
                        .any(|(x, y, _)| x == endpoint || y == endpoint)
                    {
                        return Err(CurrentError::NonGenericRadius(super::fmt_rat(r)));
                    }
                }
            }
        }
        let restricted = self.restrict(graph, &sub);
        let slice = restricted
            .boundary(graph)
            .sub(&self.boundary(graph).restrict(graph, &sub));
        Ok(slice)
    }
}

/// Serializes a bouquet-model current as
/// `{"circles": N, "edges": [{"circle", "intervals": [{"from","to","weight","orientation"}]}]}`.
pub fn hawaiian_current_to_json(current: &GraphCurrent1) -> Value {
    let edges: Vec<Value> = (0..current.edge_count())
        .filter(|&e| !current.intervals(e).is_empty())
        .map(|e| {
            let intervals: Vec<Value> = current
                .intervals(e)
                .iter()
                .map(|(a, b, w)| {
                    json!({
                        "from": crate::rational::format_rational(a),
                        "to": crate::rational::format_rational(b),
                        "weight": w.abs(),
                        "orientation": w.signum(),
                    })
                })
                .collect();
            json!({ "circle": e + 1, "intervals": intervals })
        })
        .collect();
    json!({ "circles": current.edge_count(), "edges": edges })
}

/// Parses the serialization above; `graph` must already model at least as
/// many circles.
pub fn hawaiian_current_from_json(
    graph: &MetricGraph,
    value: &Value,
) -> Result<GraphCurrent1, CurrentError> {
    let bad = |msg: &str| CurrentError::BadJson(msg.to_string());
    let edges = value
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `edges` array"))?;
    let mut pieces = Vec::new();
    for entry in edges {
        let circle = entry
            .get("circle")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("edge entry without `circle`"))?;
        if circle == 0 || circle as usize > graph.edge_count() {
            return Err(CurrentError::BadEdge);
        }
        let intervals = entry
            .get("intervals")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("edge entry without `intervals`"))?;
        for iv in intervals {
            let get_rat = |key: &str| -> Result<Rational, CurrentError> {
                let s = iv
                    .get(key)
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad(&format!("interval without `{key}`")))?;
                parse_rational(s).map_err(|e| bad(&e.to_string()))
            };
            let from = get_rat("from")?;
            let to = get_rat("to")?;
            let weight = iv
                .get("weight")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("interval without `weight`"))?;
            let orientation = iv.get("orientation").and_then(Value::as_i64).unwrap_or(1);
            if orientation != 1 && orientation != -1 {
                return Err(bad("orientation must be ±1"));
            }
            pieces.push((circle as usize - 1, from, to, weight * orientation));
        }
    }
    GraphCurrent1::from_raw(graph, pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn full_loop(graph: &MetricGraph, edge: usize, weight: i64) -> GraphCurrent1 {
        GraphCurrent1::from_raw(graph, [(edge, int(0), int(1), weight)]).unwrap()
    }

    #[test]
    fn boundary_of_loops_and_arcs() {
        let g = MetricGraph::hawaiian_model(3);
        assert!(full_loop(&g, 2, 1).boundary(&g).is_zero());
        // weight-2 arc from angle 0 to angle 1/2 on L₁
        let arc = GraphCurrent1::from_raw(&g, [(0, int(0), rat(1, 2), 2)]).unwrap();
        let b = arc.boundary(&g);
        let expected = GraphCurrent0::from_masses([
            (
                GraphPoint::Interior {
                    edge: 0,
                    position: rat(1, 2),
                },
                2,
            ),
            (GraphPoint::Vertex(0), -2),
        ]);
        assert_eq!(b, expected);
        // ∂∂ = 0: 0-currents have no boundary by definition; the winding sum
        // at vertices already cancels for closed multiplicities
        assert_eq!(b.total_weight(), 0);
    }

    #[test]
    fn canonical_form_merges_and_cancels() {
        let g = MetricGraph::circle(int(1));
        let t = GraphCurrent1::from_raw(
            &g,
            [
                (0, int(0), rat(1, 2), 1),
                (0, rat(1, 2), int(1), 1),
                (0, rat(1, 4), rat(3, 4), 0),
            ],
        )
        .unwrap();
        assert_eq!(t, full_loop(&g, 0, 1));
        // reversed pieces flip sign and cancel
        let cancel = GraphCurrent1::from_raw(
            &g,
            [(0, int(0), int(1), 1), (0, int(1), int(0), 1)],
        )
        .unwrap();
        assert!(cancel.is_zero());
    }

    #[test]
    fn mass_and_subadditivity() {
        let g = MetricGraph::hawaiian_model(4);
        let t = GraphCurrent1::from_raw(
            &g,
            [
                (0, int(0), int(1), 1),
                (1, int(0), rat(1, 2), -3),
            ],
        )
        .unwrap();
        // |1|·2 + |−3|·(1/2·1) = 2 + 3/2 = 7/2 (π-units)
        assert_eq!(t.mass_scale_units(&g), rat(7, 2));
        let enc = t.mass(&g);
        assert!(enc.lo() < enc.hi());
        // restriction split is additive when supports are disjoint
        let mut only_first = ArcSet::empty(&g);
        only_first.per_edge[0] = vec![(int(0), int(1))];
        let rest = only_first.complement();
        let a = t.restrict(&g, &only_first).mass_scale_units(&g);
        let b = t.restrict(&g, &rest).mass_scale_units(&g);
        assert_eq!(a + b, t.mass_scale_units(&g));
        assert_eq!(GraphCurrent1::zero(&g).mass_scale_units(&g), int(0));
        // unit traversal of Lₙ has mass 2π/n
        assert_eq!(full_loop(&g, 2, 1).mass_scale_units(&g), rat(2, 3));
    }

    #[test]
    fn restriction_cases() {
        let g = MetricGraph::hawaiian_model(2);
        let t = full_loop(&g, 1, 1);
        assert_eq!(t.restrict(&g, &ArcSet::whole(&g)), t);
        assert!(t.restrict(&g, &ArcSet::empty(&g)).is_zero());
        let mut half = ArcSet::empty(&g);
        half.per_edge[1] = vec![(int(0), rat(1, 2))];
        let r = t.restrict(&g, &half);
        assert_eq!(r.intervals(1), &[(int(0), rat(1, 2), 1)]);
    }

    #[test]
    fn push_forward_cases() {
        let g = MetricGraph::hawaiian_model(3);
        let t = GraphCurrent1::from_raw(
            &g,
            [
                (0, int(0), int(1), 2),
                (1, rat(1, 8), rat(5, 8), -1),
                (2, int(0), rat(1, 3), 4),
            ],
        )
        .unwrap();
        let id = GraphMap::identity(&g);
        assert_eq!(t.push_forward(&id, &g, &g).unwrap(), t);
        // (iₙ pₙ)# T = T ⌊ Lₙ
        for n in 0..3 {
            let map = GraphMap::collapse_all_but(&g, n);
            let lhs = t.push_forward(&map, &g, &g).unwrap();
            let mut arcs = ArcSet::empty(&g);
            arcs.per_edge[n] = vec![(int(0), int(1))];
            assert_eq!(lhs, t.restrict(&g, &arcs), "circle {n}");
            // ∂(g#T) = g#(∂T)
            assert_eq!(
                lhs.boundary(&g),
                t.boundary(&g).push_forward(&map, &g)
            );
        }
    }

    #[test]
    fn slice_of_full_loop() {
        let g = MetricGraph::hawaiian_model(2);
        let t = full_loop(&g, 0, 1);
        // distance to basepoint along L₁ (length 2): crossings at r/2, 1−r/2
        let slice = t.slice(&g, &GraphPoint::Vertex(0), &rat(1, 2)).unwrap();
        let expected = GraphCurrent0::from_masses([
            (
                GraphPoint::Interior {
                    edge: 0,
                    position: rat(1, 4),
                },
                1,
            ),
            (
                GraphPoint::Interior {
                    edge: 0,
                    position: rat(3, 4),
                },
                -1,
            ),
        ]);
        assert_eq!(slice, expected);
        // slice of the zero current is zero
        assert!(GraphCurrent1::zero(&g)
            .slice(&g, &GraphPoint::Vertex(0), &rat(1, 2))
            .unwrap()
            .is_zero());
        // r at the vertex distance 0 is rejected; r at a breakpoint too
        assert!(t.slice(&g, &GraphPoint::Vertex(0), &int(0)).is_err());
        let arc = GraphCurrent1::from_raw(&g, [(0, int(0), rat(1, 4), 1)]).unwrap();
        assert!(matches!(
            arc.slice(&g, &GraphPoint::Vertex(0), &rat(1, 2)),
            Err(CurrentError::NonGenericRadius(_))
        ));
    }

    #[test]
    fn slice_dual_route() {
        // ⟨T,d,r⟩ = (∂T)⌊{d>r} − ∂(T⌊{d>r}): check the other defining form
        let g = MetricGraph::hawaiian_model(3);
        let t = GraphCurrent1::from_raw(
            &g,
            [
                (0, int(0), rat(7, 8), 2),
                (1, rat(1, 8), int(1), -1),
                (2, int(0), int(1), 3),
            ],
        )
        .unwrap();
        let center = GraphPoint::Interior {
            edge: 0,
            position: rat(1, 16),
        };
        for r in [rat(1, 5), rat(2, 7), rat(3, 5)] {
            let Ok(slice) = t.slice(&g, &center, &r) else {
                continue;
            };
            let over = g.sublevel_arcs(&center, &r).complement();
            let dual = t
                .boundary(&g)
                .restrict_superlevel(&g, &center, &r)
                .sub(&t.restrict(&g, &over).boundary(&g));
            assert_eq!(slice, dual, "r = {r}");
            // support containment: slice points sit at distance exactly r
            for (p, _) in slice.masses() {
                assert_eq!(g.point_distance(&center, p), r);
                assert!(t.support().contains_point(&g, p));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = MetricGraph::hawaiian_model(3);
        let t = GraphCurrent1::from_raw(
            &g,
            [(0, int(0), int(1), 2), (2, rat(1, 4), rat(3, 4), -1)],
        )
        .unwrap();
        let v = hawaiian_current_to_json(&t);
        let back = hawaiian_current_from_json(&g, &v).unwrap();
        assert_eq!(back, t);
        assert!(hawaiian_current_from_json(&g, &json!({"edges": [{"circle": 9}]})).is_err());
    }
}
