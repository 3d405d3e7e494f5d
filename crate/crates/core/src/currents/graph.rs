//! Metric graphs with exact rational edge lengths (in a global scale),
//! points, arc sets, distance functions, geodesics, and graph maps.

use super::CurrentError;
use crate::certified::{pi_default, CertifiedReal};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Global unit for all edge lengths of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Plain rational lengths.
    Unit,
    /// Lengths are the stored rational times π.
    Pi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub length: Rational,
}

/// A finite connected metric graph with a distinguished basepoint.
#[derive(Debug, Clone)]
pub struct MetricGraph {
    scale: Scale,
    vertex_count: usize,
    basepoint: usize,
    edges: Vec<Edge>,
}

/// A point of the graph: a vertex, or an interior position on an edge given
/// by the fraction `0 < position < 1` of its length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GraphPoint {
    Vertex(usize),
    Interior { edge: usize, position: Rational },
}

impl GraphPoint {
    /// Normalizes edge fractions: 0 and 1 become the endpoint vertices.
    pub fn on_edge(graph: &MetricGraph, edge: usize, position: Rational) -> GraphPoint {
        let e = &graph.edges[edge];
        if position.is_zero() {
            GraphPoint::Vertex(e.from)
        } else if position.is_one() {
            GraphPoint::Vertex(e.to)
        } else {
            GraphPoint::Interior { edge, position }
        }
    }
}

impl MetricGraph {
    pub fn new(
        scale: Scale,
        vertex_count: usize,
        basepoint: usize,
        edges: Vec<Edge>,
    ) -> Result<Self, CurrentError> {
        if basepoint >= vertex_count {
            return Err(CurrentError::BadVertex);
        }
        for e in &edges {
            if e.from >= vertex_count || e.to >= vertex_count {
                return Err(CurrentError::BadVertex);
            }
            if !e.length.is_positive() {
                return Err(CurrentError::NonpositiveLength);
            }
        }
        let graph = MetricGraph {
            scale,
            vertex_count,
            basepoint,
            edges,
        };
        // connectivity
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![basepoint];
        seen[basepoint] = true;
        while let Some(v) = stack.pop() {
            for e in &graph.edges {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(CurrentError::Disconnected);
        }
        Ok(graph)
    }

    /// The truncated circle bouquet: circles `L₁,…,L_n` as basepoint
    /// self-loops of length `2π/k`, stored in π scale.
    pub fn hawaiian_model(circles: u32) -> MetricGraph {
        assert!(circles >= 1);
        let edges = (1..=circles)
            .map(|k| Edge {
                from: 0,
                to: 0,
                length: Rational::new(BigInt::from(2), BigInt::from(k)),
            })
            .collect();
        MetricGraph::new(Scale::Pi, 1, 0, edges).unwrap()
    }

    /// A single circle of the given circumference (one self-loop).
    pub fn circle(circumference: Rational) -> MetricGraph {
        MetricGraph::new(
            Scale::Unit,
            1,
            0,
            vec![Edge {
                from: 0,
                to: 0,
                length: circumference,
            }],
        )
        .unwrap()
    }

    /// A tree given by its edge list.
    pub fn tree(
        vertex_count: usize,
        basepoint: usize,
        edges: Vec<(usize, usize, Rational)>,
    ) -> Result<MetricGraph, CurrentError> {
        MetricGraph::new(
            Scale::Unit,
            vertex_count,
            basepoint,
            edges
                .into_iter()
                .map(|(from, to, length)| Edge { from, to, length })
                .collect(),
        )
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Is this a basepoint bouquet of self-loops with lengths `2/k` in π
    /// scale (circle `k` = edge `k−1`)?
    pub fn is_hawaiian_model(&self) -> bool {
        self.scale == Scale::Pi
            && self.vertex_count == 1
            && self.edges.iter().enumerate().all(|(i, e)| {
                e.from == 0
                    && e.to == 0
                    && e.length == Rational::new(BigInt::from(2), BigInt::from(i as i64 + 1))
            })
    }

    /// Interprets a scale-unit total as a certified real length.
    pub fn scaled(&self, total: &Rational) -> CertifiedReal {
        match self.scale {
            Scale::Unit => CertifiedReal::point(total.clone()),
            Scale::Pi => pi_default().scale(total),
        }
    }

    /// Shortest distances from a point to every vertex, in scale units.
    /// Exact rational relaxation; the graph is connected.
    pub fn vertex_distances(&self, from: &GraphPoint) -> Vec<Rational> {
        let mut dist: Vec<Option<Rational>> = vec![None; self.vertex_count];
        let improve = |d: &mut Vec<Option<Rational>>, v: usize, value: Rational| -> bool {
            match &d[v] {
                Some(old) if *old <= value => false,
                _ => {
                    d[v] = Some(value);
                    true
                }
            }
        };
        match from {
            GraphPoint::Vertex(v) => {
                improve(&mut dist, *v, Rational::zero());
            }
            GraphPoint::Interior { edge, position } => {
                let e = &self.edges[*edge];
                improve(&mut dist, e.from, position * &e.length);
                improve(
                    &mut dist,
                    e.to,
                    (Rational::one() - position) * &e.length,
                );
            }
        }
        loop {
            let mut changed = false;
            for e in &self.edges {
                if let Some(d) = dist[e.from].clone() {
                    changed |= improve(&mut dist, e.to, d + &e.length);
                }
                if let Some(d) = dist[e.to].clone() {
                    changed |= improve(&mut dist, e.from, d + &e.length);
                }
            }
            if !changed {
                break;
            }
        }
        dist.into_iter().map(|d| d.expect("connected graph")).collect()
    }

    /// The distance to `center` restricted to an edge is the minimum of a
    /// few affine candidates `a + b·t`, each valid on a sub-interval.
    pub(crate) fn distance_candidates(
        &self,
        center: &GraphPoint,
        vertex_dist: &[Rational],
        edge: usize,
    ) -> Vec<Candidate> {
        let e = &self.edges[edge];
        let mut out = vec![
            Candidate {
                offset: vertex_dist[e.from].clone(),
                slope: e.length.clone(),
                lo: Rational::zero(),
                hi: Rational::one(),
            },
            Candidate {
                offset: &vertex_dist[e.to] + &e.length,
                slope: -e.length.clone(),
                lo: Rational::zero(),
                hi: Rational::one(),
            },
        ];
        if let GraphPoint::Interior {
            edge: ce,
            position,
        } = center
        {
            if *ce == edge {
                // direct route within the edge: |t − t₀|·len, two pieces
                out.push(Candidate {
                    offset: position * &e.length,
                    slope: -e.length.clone(),
                    lo: Rational::zero(),
                    hi: position.clone(),
                });
                out.push(Candidate {
                    offset: -(position * &e.length),
                    slope: e.length.clone(),
                    lo: position.clone(),
                    hi: Rational::one(),
                });
            }
        }
        out
    }

    /// Exact distance from `center` to a point.
    pub fn point_distance(&self, center: &GraphPoint, p: &GraphPoint) -> Rational {
        let dist = self.vertex_distances(center);
        match p {
            GraphPoint::Vertex(v) => dist[*v].clone(),
            GraphPoint::Interior { edge, position } => self
                .distance_candidates(center, &dist, *edge)
                .iter()
                .filter(|c| &c.lo <= position && position <= &c.hi)
                .map(|c| c.at(position))
                .min()
                .expect("candidate list covers [0,1]"),
        }
    }

    /// The closed sublevel set `{d(center, ·) ≤ r}` as an arc set.
    pub fn sublevel_arcs(&self, center: &GraphPoint, r: &Rational) -> ArcSet {
        let dist = self.vertex_distances(center);
        let mut per_edge = Vec::with_capacity(self.edges.len());
        for edge in 0..self.edges.len() {
            let mut intervals: Vec<(Rational, Rational)> = Vec::new();
            for c in self.distance_candidates(center, &dist, edge) {
                if let Some((a, b)) = c.sublevel(r) {
                    if a < b {
                        intervals.push((a, b));
                    } else {
                        intervals.push((a.clone(), a)); // isolated touch point
                    }
                }
            }
            per_edge.push(ArcSet::normalize_intervals(intervals));
        }
        ArcSet { per_edge }
    }

    /// Maximum of the distance over an arc set. `None` for empty sets.
    /// The per-edge distance is a concave piecewise-linear envelope, so the
    /// maximum over an interval is attained at interval endpoints, envelope
    /// crossings, or candidate-piece boundaries.
    pub fn max_distance_on_arcs(&self, center: &GraphPoint, arcs: &ArcSet) -> Option<Rational> {
        let dist = self.vertex_distances(center);
        let mut best: Option<Rational> = None;
        for (edge, intervals) in arcs.per_edge.iter().enumerate() {
            if intervals.is_empty() {
                continue;
            }
            let cands = self.distance_candidates(center, &dist, edge);
            let evaluate = |t: &Rational| -> Rational {
                cands
                    .iter()
                    .filter(|c| &c.lo <= t && t <= &c.hi)
                    .map(|c| c.at(t))
                    .min()
                    .expect("candidates cover [0,1]")
            };
            for (a, b) in intervals {
                let mut points: Vec<Rational> = vec![a.clone(), b.clone()];
                for c in &cands {
                    for boundary in [&c.lo, &c.hi] {
                        if a < boundary && boundary < b {
                            points.push(boundary.clone());
                        }
                    }
                }
                for i in 0..cands.len() {
                    for j in (i + 1)..cands.len() {
                        if let Some(t) = cands[i].crossing(&cands[j]) {
                            if &t > a && &t < b {
                                points.push(t);
                            }
                        }
                    }
                }
                for t in &points {
                    let d = evaluate(t);
                    if best.as_ref().is_none_or(|b| &d > b) {
                        best = Some(d);
                    }
                }
            }
        }
        best
    }

    /// Length of the shortest cycle, or `None` for trees. Self-loops count
    /// with their own length; other cycles via edge removal.
    pub fn girth(&self) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        let mut consider = |candidate: Rational| {
            if best.as_ref().is_none_or(|b| &candidate < b) {
                best = Some(candidate);
            }
        };
        for (i, e) in self.edges.iter().enumerate() {
            if e.from == e.to {
                consider(e.length.clone());
            } else if let Some(alt) = self.vertex_distance_excluding(e.from, e.to, i) {
                consider(alt + &e.length);
            }
        }
        best
    }

    fn vertex_distance_excluding(
        &self,
        from: usize,
        to: usize,
        excluded: usize,
    ) -> Option<Rational> {
        let mut dist: Vec<Option<Rational>> = vec![None; self.vertex_count];
        dist[from] = Some(Rational::zero());
        loop {
            let mut changed = false;
            for (i, e) in self.edges.iter().enumerate() {
                if i == excluded {
                    continue;
                }
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if let Some(d) = dist[a].clone() {
                        let cand = d + &e.length;
                        match &dist[b] {
                            Some(old) if *old <= cand => {}
                            _ => {
                                dist[b] = Some(cand);
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        dist[to].clone()
    }

    /// A shortest path between two points as an explicit step list.
    /// Interior endpoints split their edges into a temporary node graph;
    /// ties break deterministically by node index.
    pub fn geodesic(&self, from: &GraphPoint, to: &GraphPoint) -> super::chain::GraphPath {
        use super::chain::{GraphPath, PathStep};
        if from == to {
            let step = match from {
                GraphPoint::Interior { edge, position } => PathStep {
                    edge: *edge,
                    from: position.clone(),
                    to: position.clone(),
                },
                GraphPoint::Vertex(v) => {
                    let (edge, position) = self
                        .edges
                        .iter()
                        .enumerate()
                        .find_map(|(i, e)| {
                            if e.from == *v {
                                Some((i, Rational::zero()))
                            } else if e.to == *v {
                                Some((i, Rational::one()))
                            } else {
                                None
                            }
                        })
                        .expect("connected graph has an incident edge");
                    PathStep {
                        edge,
                        from: position.clone(),
                        to: position,
                    }
                }
            };
            return GraphPath::new(self, vec![step]).expect("constant step is continuous");
        }

        // split nodes: original vertices, then interior marks
        let mut marks: Vec<(usize, Rational)> = Vec::new();
        let node_of = |p: &GraphPoint, marks: &mut Vec<(usize, Rational)>| -> usize {
            match p {
                GraphPoint::Vertex(v) => *v,
                GraphPoint::Interior { edge, position } => {
                    if let Some(i) = marks
                        .iter()
                        .position(|(e, t)| e == edge && t == position)
                    {
                        self.vertex_count + i
                    } else {
                        marks.push((*edge, position.clone()));
                        self.vertex_count + marks.len() - 1
                    }
                }
            }
        };
        let start = node_of(from, &mut marks);
        let goal = node_of(to, &mut marks);
        let node_count = self.vertex_count + marks.len();

        struct Arc {
            edge: usize,
            lo: Rational,
            hi: Rational,
            node_lo: usize,
            node_hi: usize,
            length: Rational,
        }
        let mut arcs: Vec<Arc> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let mut cuts: Vec<(Rational, usize)> = vec![
                (Rational::zero(), e.from),
                (Rational::one(), e.to),
            ];
            for (mi, (me, mt)) in marks.iter().enumerate() {
                if *me == i {
                    cuts.push((mt.clone(), self.vertex_count + mi));
                }
            }
            cuts.sort_by(|a, b| a.0.cmp(&b.0));
            for w in cuts.windows(2) {
                let (lo, node_lo) = (&w[0].0, w[0].1);
                let (hi, node_hi) = (&w[1].0, w[1].1);
                if lo < hi {
                    arcs.push(Arc {
                        edge: i,
                        lo: lo.clone(),
                        hi: hi.clone(),
                        node_lo,
                        node_hi,
                        length: (hi - lo) * &e.length,
                    });
                }
            }
        }

        let mut dist: Vec<Option<Rational>> = vec![None; node_count];
        let mut pred: Vec<Option<(usize, bool)>> = vec![None; node_count]; // (arc, upward)
        dist[start] = Some(Rational::zero());
        loop {
            let mut changed = false;
            for (ai, arc) in arcs.iter().enumerate() {
                for (a, b, upward) in [
                    (arc.node_lo, arc.node_hi, true),
                    (arc.node_hi, arc.node_lo, false),
                ] {
                    if let Some(d) = dist[a].clone() {
                        let cand = d + &arc.length;
                        let better = match &dist[b] {
                            Some(old) => &cand < old,
                            None => true,
                        };
                        if better {
                            dist[b] = Some(cand);
                            pred[b] = Some((ai, upward));
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut steps_rev: Vec<PathStep> = Vec::new();
        let mut node = goal;
        while node != start {
            let (ai, upward) = pred[node].expect("goal reachable");
            let arc = &arcs[ai];
            let (from_t, to_t) = if upward {
                (arc.lo.clone(), arc.hi.clone())
            } else {
                (arc.hi.clone(), arc.lo.clone())
            };
            steps_rev.push(PathStep {
                edge: arc.edge,
                from: from_t,
                to: to_t,
            });
            node = if upward { arc.node_lo } else { arc.node_hi };
        }
        steps_rev.reverse();
        super::chain::GraphPath::new(self, steps_rev).expect("geodesic is continuous")
    }
}

/// Affine candidate `offset + slope·t` valid on `[lo, hi] ⊆ [0,1]`.
#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub offset: Rational,
    pub slope: Rational,
    pub lo: Rational,
    pub hi: Rational,
}

impl Candidate {
    pub fn at(&self, t: &Rational) -> Rational {
        &self.offset + &self.slope * t
    }

    /// `{t ∈ [lo,hi] : value ≤ r}` as a closed interval.
    pub fn sublevel(&self, r: &Rational) -> Option<(Rational, Rational)> {
        if self.slope.is_zero() {
            if &self.offset <= r {
                return Some((self.lo.clone(), self.hi.clone()));
            }
            return None;
        }
        let cross = (r - &self.offset) / &self.slope;
        let (a, b) = if self.slope.is_positive() {
            (self.lo.clone(), cross.min(self.hi.clone()))
        } else {
            (cross.max(self.lo.clone()), self.hi.clone())
        };
        if a <= b {
            Some((a, b))
        } else {
            None
        }
    }

    /// Crossing abscissa of two candidate lines, when transversal.
    pub fn crossing(&self, other: &Candidate) -> Option<Rational> {
        if self.slope == other.slope {
            return None;
        }
        Some((&other.offset - &self.offset) / (&self.slope - &other.slope))
    }
}

/// A finite union of closed arcs with rational endpoints, per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSet {
    pub per_edge: Vec<Vec<(Rational, Rational)>>,
}

impl ArcSet {
    pub fn empty(graph: &MetricGraph) -> ArcSet {
        ArcSet {
            per_edge: vec![Vec::new(); graph.edge_count()],
        }
    }

    pub fn whole(graph: &MetricGraph) -> ArcSet {
        ArcSet {
            per_edge: vec![vec![(Rational::zero(), Rational::one())]; graph.edge_count()],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.per_edge.iter().all(|v| v.is_empty())
    }

    pub(crate) fn normalize_intervals(
        mut intervals: Vec<(Rational, Rational)>,
    ) -> Vec<(Rational, Rational)> {
        intervals.retain(|(a, b)| a <= b);
        intervals.sort();
        let mut merged: Vec<(Rational, Rational)> = Vec::new();
        for (a, b) in intervals {
            match merged.last_mut() {
                Some((_, end)) if *end >= a => {
                    if b > *end {
                        *end = b;
                    }
                }
                _ => merged.push((a, b)),
            }
        }
        merged
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        ArcSet {
            per_edge: self
                .per_edge
                .iter()
                .zip(&other.per_edge)
                .map(|(a, b)| {
                    let mut all = a.clone();
                    all.extend(b.iter().cloned());
                    Self::normalize_intervals(all)
                })
                .collect(),
        }
    }

    /// Closed complement per edge (shared endpoints retained; degenerate
    /// leftovers dropped).
    pub fn complement(&self) -> ArcSet {
        ArcSet {
            per_edge: self
                .per_edge
                .iter()
                .map(|intervals| {
                    let mut out = Vec::new();
                    let mut cursor = Rational::zero();
                    for (a, b) in intervals {
                        if &cursor < a {
                            out.push((cursor.clone(), a.clone()));
                        }
                        if *b > cursor {
                            cursor = b.clone();
                        }
                    }
                    if cursor < Rational::one() {
                        out.push((cursor, Rational::one()));
                    }
                    out
                })
                .collect(),
        }
    }

    pub fn intersect(&self, other: &ArcSet) -> ArcSet {
        ArcSet {
            per_edge: self
                .per_edge
                .iter()
                .zip(&other.per_edge)
                .map(|(xs, ys)| {
                    let mut out = Vec::new();
                    for (a, b) in xs {
                        for (c, d) in ys {
                            let lo = a.clone().max(c.clone());
                            let hi = b.clone().min(d.clone());
                            if lo < hi {
                                out.push((lo, hi));
                            }
                        }
                    }
                    Self::normalize_intervals(out)
                })
                .collect(),
        }
    }

    /// `self` minus `other`, up to measure zero (closed leftovers).
    pub fn subtract(&self, other: &ArcSet) -> ArcSet {
        self.intersect(&other.complement())
    }

    pub fn contains_point(&self, graph: &MetricGraph, p: &GraphPoint) -> bool {
        match p {
            GraphPoint::Interior { edge, position } => self.per_edge[*edge]
                .iter()
                .any(|(a, b)| a <= position && position <= b),
            GraphPoint::Vertex(v) => graph.edges().iter().enumerate().any(|(i, e)| {
                (e.from == *v
                    && self.per_edge[i]
                        .first()
                        .is_some_and(|(a, _)| a.is_zero()))
                    || (e.to == *v
                        && self.per_edge[i]
                            .last()
                            .is_some_and(|(_, b)| b.is_one()))
            }),
        }
    }
}

/// A piecewise-affine graph self-map (or map between graphs): vertices go
/// to vertices; an edge either collapses to a vertex or maps affinely onto
/// a sub-interval of a target edge.
#[derive(Debug, Clone)]
pub struct GraphMap {
    pub vertex_images: Vec<usize>,
    pub edge_images: Vec<EdgeImage>,
}

#[derive(Debug, Clone)]
pub enum EdgeImage {
    ToVertex(usize),
    /// `t ↦ offset + slope·t` into the target edge.
    Linear {
        edge: usize,
        offset: Rational,
        slope: Rational,
    },
}

impl GraphMap {
    pub fn identity(graph: &MetricGraph) -> GraphMap {
        GraphMap {
            vertex_images: (0..graph.vertex_count()).collect(),
            edge_images: (0..graph.edge_count())
                .map(|edge| EdgeImage::Linear {
                    edge,
                    offset: Rational::zero(),
                    slope: Rational::one(),
                })
                .collect(),
        }
    }

    /// `iₙ∘pₙ`: the identity on `kept` and the constant basepoint map on
    /// every other edge (for bouquet models).
    pub fn collapse_all_but(graph: &MetricGraph, kept: usize) -> GraphMap {
        GraphMap {
            vertex_images: vec![graph.basepoint(); graph.vertex_count()],
            edge_images: (0..graph.edge_count())
                .map(|edge| {
                    if edge == kept {
                        EdgeImage::Linear {
                            edge,
                            offset: Rational::zero(),
                            slope: Rational::one(),
                        }
                    } else {
                        EdgeImage::ToVertex(graph.basepoint())
                    }
                })
                .collect(),
        }
    }

    pub fn validate(&self, domain: &MetricGraph, codomain: &MetricGraph) -> Result<(), CurrentError> {
        if self.vertex_images.len() != domain.vertex_count()
            || self.edge_images.len() != domain.edge_count()
        {
            return Err(CurrentError::BadMap);
        }
        for img in &self.vertex_images {
            if *img >= codomain.vertex_count() {
                return Err(CurrentError::BadVertex);
            }
        }
        for (i, image) in self.edge_images.iter().enumerate() {
            let e = &domain.edges()[i];
            match image {
                EdgeImage::ToVertex(v) => {
                    if *v >= codomain.vertex_count() {
                        return Err(CurrentError::BadVertex);
                    }
                    if self.vertex_images[e.from] != *v || self.vertex_images[e.to] != *v {
                        return Err(CurrentError::BadMap);
                    }
                }
                EdgeImage::Linear {
                    edge,
                    offset,
                    slope,
                } => {
                    if *edge >= codomain.edge_count() {
                        return Err(CurrentError::BadEdge);
                    }
                    if slope.is_zero() {
                        return Err(CurrentError::BadMap);
                    }
                    let end = offset + slope;
                    for value in [offset, &end] {
                        if value.is_negative() || value > &Rational::one() {
                            return Err(CurrentError::BadMap);
                        }
                    }
                    let from_img = GraphPoint::on_edge(codomain, *edge, offset.clone());
                    let to_img = GraphPoint::on_edge(codomain, *edge, end);
                    if from_img != GraphPoint::Vertex(self.vertex_images[e.from])
                        || to_img != GraphPoint::Vertex(self.vertex_images[e.to])
                    {
                        return Err(CurrentError::BadMap);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn apply_point(&self, codomain: &MetricGraph, p: &GraphPoint) -> GraphPoint {
        match p {
            GraphPoint::Vertex(v) => GraphPoint::Vertex(self.vertex_images[*v]),
            GraphPoint::Interior { edge, position } => match &self.edge_images[*edge] {
                EdgeImage::ToVertex(v) => GraphPoint::Vertex(*v),
                EdgeImage::Linear {
                    edge: target,
                    offset,
                    slope,
                } => GraphPoint::on_edge(codomain, *target, offset + slope * position),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn hawaiian_model_shape() {
        let g = MetricGraph::hawaiian_model(4);
        assert!(g.is_hawaiian_model());
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges()[2].length, rat(2, 3));
        assert_eq!(g.girth(), Some(rat(1, 2))); // shortest circle: 2/4
    }

    #[test]
    fn distances_on_circle() {
        let g = MetricGraph::circle(int(8));
        let center = GraphPoint::Vertex(0);
        let p = GraphPoint::Interior {
            edge: 0,
            position: rat(3, 4),
        };
        assert_eq!(g.point_distance(&center, &p), int(2)); // min(6, 2)
        let q = GraphPoint::Interior {
            edge: 0,
            position: rat(1, 4),
        };
        assert_eq!(g.point_distance(&q, &p), int(4)); // min over both ways
    }

    #[test]
    fn sublevel_on_circle() {
        let g = MetricGraph::circle(int(8));
        let arcs = g.sublevel_arcs(&GraphPoint::Vertex(0), &int(2));
        assert_eq!(
            arcs.per_edge[0],
            vec![(int(0), rat(1, 4)), (rat(3, 4), int(1))]
        );
        let all = g.sublevel_arcs(&GraphPoint::Vertex(0), &int(5));
        assert_eq!(all.per_edge[0], vec![(int(0), int(1))]);
    }

    #[test]
    fn tree_distances_and_girth() {
        let g = MetricGraph::tree(
            4,
            0,
            vec![(0, 1, int(1)), (1, 2, int(2)), (1, 3, rat(1, 2))],
        )
        .unwrap();
        assert_eq!(g.girth(), None);
        let d = g.vertex_distances(&GraphPoint::Vertex(2));
        assert_eq!(d, vec![int(3), int(2), int(0), rat(5, 2)]);
    }

    #[test]
    fn arcset_algebra() {
        let g = MetricGraph::circle(int(1));
        let a = ArcSet {
            per_edge: vec![vec![(rat(1, 8), rat(1, 2))]],
        };
        let c = a.complement();
        assert_eq!(
            c.per_edge[0],
            vec![(int(0), rat(1, 8)), (rat(1, 2), int(1))]
        );
        assert_eq!(a.union(&c), ArcSet::whole(&g));
        assert!(a.intersect(&c).is_empty());
        let p = GraphPoint::Interior {
            edge: 0,
            position: rat(1, 4),
        };
        assert!(a.contains_point(&g, &p));
        assert!(!c.contains_point(&g, &p));
        assert!(c.contains_point(&g, &GraphPoint::Vertex(0)));
    }

    #[test]
    fn max_distance_sees_concave_peak() {
        // on a circle of length 8, d(vertex, ·) peaks at the antipode 4,
        // which is interior to the arc [1/4, 3/4]
        let g = MetricGraph::circle(int(8));
        let arcs = ArcSet {
            per_edge: vec![vec![(rat(1, 4), rat(3, 4))]],
        };
        assert_eq!(
            g.max_distance_on_arcs(&GraphPoint::Vertex(0), &arcs),
            Some(int(4))
        );
    }

    #[test]
    fn geodesics() {
        let g = MetricGraph::tree(3, 0, vec![(0, 1, int(2)), (1, 2, int(3))]).unwrap();
        let from = GraphPoint::Interior {
            edge: 0,
            position: rat(1, 2),
        };
        let to = GraphPoint::Interior {
            edge: 1,
            position: rat(1, 3),
        };
        let path = g.geodesic(&from, &to);
        assert_eq!(path.start(&g), from);
        assert_eq!(path.end(&g), to);
        assert_eq!(path.length(&g), int(1) + int(1)); // 1 to vertex 1, then 1 along edge 1
        // around a circle the geodesic picks the short side
        let c = MetricGraph::circle(int(8));
        let p = GraphPoint::Interior {
            edge: 0,
            position: rat(7, 8),
        };
        let path = c.geodesic(&GraphPoint::Vertex(0), &p);
        assert_eq!(path.length(&c), int(1));
    }

    #[test]
    fn map_validation() {
        let g = MetricGraph::hawaiian_model(3);
        let id = GraphMap::identity(&g);
        id.validate(&g, &g).unwrap();
        let p2 = GraphMap::collapse_all_but(&g, 1);
        p2.validate(&g, &g).unwrap();
        let bad = GraphMap {
            vertex_images: vec![0],
            edge_images: vec![
                EdgeImage::Linear {
                    edge: 0,
                    offset: rat(1, 4),
                    slope: rat(1, 2),
                },
                EdgeImage::ToVertex(0),
                EdgeImage::ToVertex(0),
            ],
        };
        assert!(bad.validate(&g, &g).is_err());
    }
}
