//! Piecewise-linear singular chains on a metric graph and the bridge to
//! currents: `[bc] = ∂[c]` and `[sd^m(c)] = [c]` hold exactly.

use super::current::{GraphCurrent0, GraphCurrent1};
use super::graph::{GraphPoint, MetricGraph};
use super::CurrentError;
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// One affine step of a PL path: traverses `edge` from fraction `from` to
/// fraction `to` (possibly reversed or constant).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathStep {
    pub edge: usize,
    pub from: Rational,
    pub to: Rational,
}

impl PathStep {
    fn start(&self, graph: &MetricGraph) -> GraphPoint {
        GraphPoint::on_edge(graph, self.edge, self.from.clone())
    }

    fn end(&self, graph: &MetricGraph) -> GraphPoint {
        GraphPoint::on_edge(graph, self.edge, self.to.clone())
    }

    fn length(&self, graph: &MetricGraph) -> Rational {
        let span = if self.from <= self.to {
            &self.to - &self.from
        } else {
            &self.from - &self.to
        };
        span * &graph.edges()[self.edge].length
    }
}

/// A PL singular 1-simplex: a continuous list of steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphPath {
    steps: Vec<PathStep>,
}

impl GraphPath {
    pub fn new(graph: &MetricGraph, steps: Vec<PathStep>) -> Result<Self, CurrentError> {
        if steps.is_empty() {
            return Err(CurrentError::DiscontinuousPath);
        }
        for step in &steps {
            if step.edge >= graph.edge_count() {
                return Err(CurrentError::BadEdge);
            }
            for value in [&step.from, &step.to] {
                if value < &Rational::zero() || value > &Rational::from_integer(1.into()) {
                    return Err(CurrentError::BadInterval);
                }
            }
        }
        for pair in steps.windows(2) {
            if pair[0].end(graph) != pair[1].start(graph) {
                return Err(CurrentError::DiscontinuousPath);
            }
        }
        Ok(GraphPath { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn start(&self, graph: &MetricGraph) -> GraphPoint {
        self.steps[0].start(graph)
    }

    pub fn end(&self, graph: &MetricGraph) -> GraphPoint {
        self.steps.last().unwrap().end(graph)
    }

    pub fn length(&self, graph: &MetricGraph) -> Rational {
        self.steps.iter().map(|s| s.length(graph)).sum()
    }

    pub fn reverse(&self) -> GraphPath {
        GraphPath {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| PathStep {
                    edge: s.edge,
                    from: s.to.clone(),
                    to: s.from.clone(),
                })
                .collect(),
        }
    }

    /// Splits at the arclength midpoint (or at a middle step boundary for
    /// constant paths); both halves are valid paths.
    fn split_half(&self, graph: &MetricGraph) -> (GraphPath, GraphPath) {
        let total = self.length(graph);
        if total.is_zero() {
            let mid = (self.steps.len() / 2).max(1);
            if mid >= self.steps.len() {
                // single constant step: duplicate it
                return (self.clone(), self.clone());
            }
            return (
                GraphPath {
                    steps: self.steps[..mid].to_vec(),
                },
                GraphPath {
                    steps: self.steps[mid..].to_vec(),
                },
            );
        }
        let half = total / Rational::from_integer(2.into());
        let mut acc = Rational::zero();
        let mut first: Vec<PathStep> = Vec::new();
        let mut second: Vec<PathStep> = Vec::new();
        let mut split_done = false;
        for step in &self.steps {
            if split_done {
                second.push(step.clone());
                continue;
            }
            let len = step.length(graph);
            let next = &acc + &len;
            if next < half || (len.is_zero() && next <= half) {
                first.push(step.clone());
                acc = next;
            } else if next == half {
                first.push(step.clone());
                acc = next;
                split_done = true;
            } else {
                // split inside this step
                let need = &half - &acc;
                let fraction = &need / &len; // in (0, 1]
                let cut = &step.from + (&step.to - &step.from) * &fraction;
                first.push(PathStep {
                    edge: step.edge,
                    from: step.from.clone(),
                    to: cut.clone(),
                });
                second.push(PathStep {
                    edge: step.edge,
                    from: cut,
                    to: step.to.clone(),
                });
                split_done = true;
            }
        }
        if second.is_empty() {
            // split fell exactly on the final boundary; re-balance
            let last = first.pop().expect("nonempty path");
            second.push(last);
        }
        (GraphPath { steps: first }, GraphPath { steps: second })
    }
}

/// Integer formal sum of PL paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphChain1 {
    terms: BTreeMap<GraphPath, i64>,
}

impl GraphChain1 {
    pub fn zero() -> Self {
        GraphChain1::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (GraphPath, i64)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (p, w) in iter {
            if w == 0 {
                continue;
            }
            let entry = terms.entry(p).or_insert(0i64);
            *entry += w;
        }
        terms.retain(|_, w| *w != 0);
        GraphChain1 { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphPath, i64)> {
        self.terms.iter().map(|(p, &w)| (p, w))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GraphChain1) -> GraphChain1 {
        GraphChain1::from_terms(
            self.terms()
                .map(|(p, w)| (p.clone(), w))
                .chain(other.terms().map(|(p, w)| (p.clone(), w))),
        )
    }

    pub fn scale(&self, c: i64) -> GraphChain1 {
        GraphChain1::from_terms(self.terms().map(|(p, w)| (p.clone(), w * c)))
    }

    /// `bc`: signed endpoints.
    pub fn boundary(&self, graph: &MetricGraph) -> GraphChain0 {
        GraphChain0::from_terms(self.terms().flat_map(|(p, w)| {
            [(p.end(graph), w), (p.start(graph), -w)]
        }))
    }

    /// Barycentric subdivision in the cone convention:
    /// `sd(P) = P₂ − reverse(P₁)` for the two halves.
    pub fn subdivide(&self, graph: &MetricGraph, m: u32) -> GraphChain1 {
        let mut cur = self.clone();
        for _ in 0..m {
            cur = GraphChain1::from_terms(cur.terms().flat_map(|(p, w)| {
                let (first, second) = p.split_half(graph);
                [(second, w), (first.reverse(), -w)]
            }));
        }
        cur
    }

    /// The induced current: winding integration of every step.
    pub fn to_current(&self, graph: &MetricGraph) -> GraphCurrent1 {
        GraphCurrent1::from_raw(
            graph,
            self.terms().flat_map(|(p, w)| {
                p.steps()
                    .iter()
                    .map(move |s| (s.edge, s.from.clone(), s.to.clone(), w))
                    .collect::<Vec<_>>()
            }),
        )
        .expect("path steps are valid intervals")
    }

    /// Largest certified piece diameter: the path length bounds the image
    /// diameter from above.
    pub fn max_piece_length(&self, graph: &MetricGraph) -> Rational {
        self.terms()
            .map(|(p, _)| p.length(graph))
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Integer formal sum of points (PL 0-chains).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphChain0 {
    terms: BTreeMap<GraphPoint, i64>,
}

impl GraphChain0 {
    pub fn zero() -> Self {
        GraphChain0::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (GraphPoint, i64)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (p, w) in iter {
            if w == 0 {
                continue;
            }
            let entry = terms.entry(p).or_insert(0i64);
            *entry += w;
        }
        terms.retain(|_, w| *w != 0);
        GraphChain0 { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphPoint, i64)> {
        self.terms.iter().map(|(p, &w)| (p, w))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_current(&self) -> GraphCurrent0 {
        GraphCurrent0::from_masses(self.terms().map(|(p, w)| (p.clone(), w)))
    }

    /// The `n = 0` chain representation: a 0-current is literally a
    /// 0-chain.
    pub fn from_current(current: &GraphCurrent0) -> GraphChain0 {
        GraphChain0::from_terms(current.masses().map(|(p, w)| (p.clone(), w)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn loop_path(graph: &MetricGraph, edge: usize) -> GraphPath {
        GraphPath::new(
            graph,
            vec![PathStep {
                edge,
                from: int(0),
                to: int(1),
            }],
        )
        .unwrap()
    }

    #[test]
    fn path_validation() {
        let g = MetricGraph::hawaiian_model(2);
        let ok = GraphPath::new(
            &g,
            vec![
                PathStep {
                    edge: 0,
                    from: int(0),
                    to: int(1),
                },
                PathStep {
                    edge: 1,
                    from: int(0),
                    to: rat(1, 2),
                },
            ],
        );
        assert!(ok.is_ok());
        let broken = GraphPath::new(
            &g,
            vec![
                PathStep {
                    edge: 0,
                    from: int(0),
                    to: rat(1, 2),
                },
                PathStep {
                    edge: 1,
                    from: int(0),
                    to: rat(1, 2),
                },
            ],
        );
        assert!(matches!(broken, Err(CurrentError::DiscontinuousPath)));
    }

    #[test]
    fn stokes_at_pl_level() {
        // [bc] = ∂[c] on assorted chains
        let g = MetricGraph::hawaiian_model(3);
        let arc = GraphPath::new(
            &g,
            vec![
                PathStep {
                    edge: 1,
                    from: rat(3, 4),
                    to: int(1),
                },
                PathStep {
                    edge: 2,
                    from: int(0),
                    to: rat(1, 3),
                },
            ],
        )
        .unwrap();
        let c = GraphChain1::from_terms([(arc, 2), (loop_path(&g, 0), -1)]);
        assert_eq!(
            c.boundary(&g).to_current(),
            c.to_current(&g).boundary(&g)
        );
    }

    #[test]
    fn constant_simplex_induces_zero() {
        let g = MetricGraph::circle(int(1));
        let constant = GraphPath::new(
            &g,
            vec![PathStep {
                edge: 0,
                from: rat(1, 3),
                to: rat(1, 3),
            }],
        )
        .unwrap();
        let c = GraphChain1::from_terms([(constant, 5)]);
        assert!(c.to_current(&g).is_zero());
    }

    #[test]
    fn loop_chain_winds_once() {
        let g = MetricGraph::hawaiian_model(2);
        let c = GraphChain1::from_terms([(loop_path(&g, 1), 1)]);
        let t = c.to_current(&g);
        assert_eq!(t.intervals(1), &[(int(0), int(1), 1)]);
        assert!(t.boundary(&g).is_zero());
    }

    #[test]
    fn subdivision_preserves_current_and_boundary() {
        let g = MetricGraph::hawaiian_model(3);
        let arc = GraphPath::new(
            &g,
            vec![
                PathStep {
                    edge: 0,
                    from: rat(1, 2),
                    to: int(1),
                },
                PathStep {
                    edge: 1,
                    from: int(0),
                    to: rat(5, 7),
                },
            ],
        )
        .unwrap();
        let c = GraphChain1::from_terms([(arc, 3), (loop_path(&g, 2), -2)]);
        for m in 1..=3 {
            let s = c.subdivide(&g, m);
            assert_eq!(s.to_current(&g), c.to_current(&g), "m = {m}");
            assert_eq!(
                s.boundary(&g).to_current(),
                c.boundary(&g).to_current(),
                "m = {m}"
            );
        }
        // piece lengths halve
        let once = c.subdivide(&g, 1);
        assert!(once.max_piece_length(&g) <= c.max_piece_length(&g) * rat(1, 2) + rat(1, 1000));
    }

    #[test]
    fn zero_chain_round_trip() {
        let p = GraphPoint::Vertex(0);
        let q = GraphPoint::Interior {
            edge: 0,
            position: rat(1, 2),
        };
        let current = GraphCurrent0::from_masses([(p.clone(), 3), (q.clone(), -3)]);
        let chain = GraphChain0::from_current(&current);
        assert_eq!(chain.to_current(), current);
    }
}
