//! Integer singular-chain algebra on exactly represented affine simplices.
//!
//! A simplex is an ordered tuple of rational points; a chain is a finite
//! integer combination of simplices of one dimension. Degenerate simplices
//! (repeated vertices) are kept with their coefficients: all identities
//! here are stated at the unnormalized chain level. The module provides
//!
//! * the boundary operator `b` with `b∘b = 0`,
//! * barycentric subdivision `sd^m` (cone-from-barycenter form) commuting
//!   with `b`, with the `(k/(k+1))^m` diameter decay on affine simplices,
//! * the subdivision homotopy `D_m` with
//!   `b(D_m(c)) + D_m(bc) = sd^m(c) − c`, natural under affine maps,
//! * the prism operator `K` on `[0,1]×X` with
//!   `bK(c) + K(bc) = j#(c) − i#(c)`,
//! * cone fillings of cycles from strong Lipschitz contractions, with the
//!   `2γ·diam` bound checked on vertex sets (in the `‖·‖∞` metric the
//!   diameter of a convex hull equals the diameter of its vertex set),
//! * `part_near`: the part of a subdivided chain meeting a region,
//! * Smith-normal-form homology of finite complexes ([`homology`]).

pub mod homology;
pub mod snf;

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("chain has nonzero boundary")]
    NotACycle,
    #[error("coefficient sum must vanish for a cone filling in this dimension")]
    CoefficientSumNonzero,
    #[error("epsilon must be positive")]
    NonpositiveEpsilon,
    #[error("boundary matrices have inconsistent shapes")]
    ShapeMismatch,
    #[error("boundary of boundary is nonzero: not a chain complex")]
    NotAComplex,
    #[error("simplices of mixed ambient dimension in one chain")]
    AmbientMismatch,
    #[error("simplices of mixed dimension in one chain")]
    DimensionMismatch,
}

/// A point of ℚ^d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoint(pub Vec<Rational>);

impl QPoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn linf_dist(&self, other: &QPoint) -> Rational {
        assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    fn combine(&self, t: &Rational, toward: &QPoint) -> QPoint {
        // (1-t)·self + t·toward
        QPoint(
            self.0
                .iter()
                .zip(&toward.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }
}

/// An ordered tuple of `k+1` rational vertices; repetitions allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineSimplex {
    vertices: Vec<QPoint>,
}

impl AffineSimplex {
    pub fn new(vertices: Vec<QPoint>) -> Self {
        assert!(!vertices.is_empty());
        let d = vertices[0].dim();
        assert!(vertices.iter().all(|v| v.dim() == d));
        AffineSimplex { vertices }
    }

    /// The constant simplex `x₀^k`.
    pub fn constant(point: &QPoint, dim: usize) -> Self {
        AffineSimplex::new(vec![point.clone(); dim + 1])
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    pub fn face(&self, omit: usize) -> AffineSimplex {
        let mut vertices = self.vertices.clone();
        vertices.remove(omit);
        AffineSimplex { vertices }
    }

    pub fn barycenter(&self) -> QPoint {
        let n = Rational::from_integer(BigInt::from(self.vertices.len() as i64));
        let d = self.ambient_dim();
        let mut acc = vec![Rational::zero(); d];
        for v in &self.vertices {
            for (a, b) in acc.iter_mut().zip(&v.0) {
                *a += b;
            }
        }
        QPoint(acc.into_iter().map(|a| a / &n).collect())
    }

    /// `‖·‖∞` diameter; for the convex hull this equals the vertex bound.
    pub fn diameter(&self) -> Rational {
        let mut best = Rational::zero();
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                let d = self.vertices[i].linf_dist(&self.vertices[j]);
                if d > best {
                    best = d;
                }
            }
        }
        best
    }
}

/// A finite formal sum of same-dimension simplices with nonzero integer
/// coefficients.
#[derive(Debug, Clone)]
pub struct Chain {
    dim: usize,
    terms: BTreeMap<AffineSimplex, i64>,
}

impl PartialEq for Chain {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            return true;
        }
        self.dim == other.dim && self.terms == other.terms
    }
}

impl Eq for Chain {}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_simplex(simplex: AffineSimplex) -> Self {
        let dim = simplex.dimension();
        let mut terms = BTreeMap::new();
        terms.insert(simplex, 1);
        Chain { dim, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (AffineSimplex, i64)>>(
        dim: usize,
        iter: I,
    ) -> Result<Self, ChainError> {
        let mut chain = Chain::zero(dim);
        for (simplex, coeff) in iter {
            if simplex.dimension() != dim {
                return Err(ChainError::DimensionMismatch);
            }
            chain.add_term(simplex, coeff);
        }
        Ok(chain)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineSimplex, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    fn add_term(&mut self, simplex: AffineSimplex, coeff: i64) {
        if coeff == 0 {
            return;
        }
        debug_assert_eq!(simplex.dimension(), self.dim);
        let entry = self.terms.entry(simplex).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(s, _)| s.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let dim = if self.terms.is_empty() { other.dim } else { self.dim };
        if !self.terms.is_empty() && !other.terms.is_empty() {
            assert_eq!(self.dim, other.dim, "chain dimensions differ");
        }
        let mut out = Chain {
            dim,
            terms: self.terms.clone(),
        };
        for (s, &c) in &other.terms {
            out.add_term(s.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Chain {
        if c == 0 {
            return Chain::zero(self.dim);
        }
        Chain {
            dim: self.dim,
            terms: self.terms.iter().map(|(s, &n)| (s.clone(), n * c)).collect(),
        }
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(-1))
    }

    /// Largest `‖·‖∞` distance between vertices of the image `im(c)`.
    pub fn im_diameter(&self) -> Rational {
        let vertices: Vec<&QPoint> = self
            .terms
            .keys()
            .flat_map(|s| s.vertices().iter())
            .collect();
        let mut best = Rational::zero();
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                let d = vertices[i].linf_dist(vertices[j]);
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// Largest single-simplex diameter.
    pub fn max_simplex_diameter(&self) -> Rational {
        self.terms
            .keys()
            .map(|s| s.diameter())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Alternating-sign face sum; the zero chain for 0-chains.
pub fn boundary(c: &Chain) -> Chain {
    if c.dim == 0 {
        return Chain::zero(0);
    }
    let mut out = Chain::zero(c.dim - 1);
    for (simplex, coeff) in c.terms() {
        for j in 0..=simplex.dimension() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            out.add_term(simplex.face(j), coeff * sign);
        }
    }
    out
}

/// Cone from `apex`: each `[v₀,…,v_k]` becomes `[apex, v₀,…,v_k]`.
fn cone_from(apex: &QPoint, c: &Chain) -> Chain {
    let mut out = Chain::zero(c.dim + 1);
    for (simplex, coeff) in c.terms() {
        let mut vertices = Vec::with_capacity(simplex.vertices().len() + 1);
        vertices.push(apex.clone());
        vertices.extend_from_slice(simplex.vertices());
        out.add_term(AffineSimplex::new(vertices), coeff);
    }
    out
}

fn subdivide_simplex(simplex: &AffineSimplex) -> Chain {
    if simplex.dimension() == 0 {
        return Chain::from_simplex(simplex.clone());
    }
    let apex = simplex.barycenter();
    let bd = boundary(&Chain::from_simplex(simplex.clone()));
    cone_from(&apex, &subdivide_once(&bd))
}

fn subdivide_once(c: &Chain) -> Chain {
    let mut out = Chain::zero(c.dim);
    for (simplex, coeff) in c.terms() {
        out = out.add(&subdivide_simplex(simplex).scale(coeff));
    }
    out
}

/// `m`-fold barycentric subdivision; commutes with [`boundary`] exactly and
/// shrinks affine simplex diameters by `(k/(k+1))^m`.
pub fn subdivide(c: &Chain, m: u32) -> Chain {
    let mut cur = c.clone();
    for _ in 0..m {
        cur = subdivide_once(&cur);
    }
    cur
}

fn homotopy_simplex(simplex: &AffineSimplex) -> Chain {
    // D(σ) = Cone_{b̂σ}(−σ − D(bσ)); D = 0 in dimension 0. Induction with
    // b(Cone_p(c)) = c − Cone_p(bc) gives b(D(σ)) + D(bσ) = sd(σ) − σ.
    if simplex.dimension() == 0 {
        return Chain::zero(1);
    }
    let apex = simplex.barycenter();
    let unit = Chain::from_simplex(simplex.clone());
    let inner = unit.scale(-1).sub(&homotopy_once(&boundary(&unit)));
    cone_from(&apex, &inner)
}

fn homotopy_once(c: &Chain) -> Chain {
    let mut out = Chain::zero(c.dim + 1);
    for (simplex, coeff) in c.terms() {
        out = out.add(&homotopy_simplex(simplex).scale(coeff));
    }
    out
}

/// The chain homotopy `D_m` between `sd^m` and the identity:
/// `b(D_m(c)) + D_m(bc) = sd^m(c) − c`, natural under affine push-forward.
/// Built as the telescope `Σ_{i<m} D(sd^i(c))` of the one-step homotopy.
pub fn subdiv_homotopy(c: &Chain, m: u32) -> Chain {
    let mut out = Chain::zero(c.dim + 1);
    let mut stage = c.clone();
    for _ in 0..m {
        out = out.add(&homotopy_once(&stage));
        stage = subdivide_once(&stage);
    }
    out
}

/// Prepends coordinate `t` to every vertex: the slice `{t} × X` inclusion.
pub fn cylinder_end(c: &Chain, t: &Rational) -> Chain {
    push_forward_with(
        |p| {
            let mut coords = Vec::with_capacity(p.dim() + 1);
            coords.push(t.clone());
            coords.extend(p.0.iter().cloned());
            QPoint(coords)
        },
        c,
    )
}

/// The prism operator `K : C_k(X) → C_{k+1}([0,1]×X)` (staircase
/// triangulation): `bK(c) + K(bc) = j#(c) − i#(c)` with `i, j` the bottom
/// and top inclusions.
pub fn prism(c: &Chain) -> Chain {
    let zero = Rational::zero();
    let one = Rational::from_integer(BigInt::from(1));
    let mut out = Chain::zero(c.dim + 1);
    for (simplex, coeff) in c.terms() {
        let k = simplex.dimension();
        let bottom: Vec<QPoint> = simplex
            .vertices()
            .iter()
            .map(|v| {
                let mut coords = vec![zero.clone()];
                coords.extend(v.0.iter().cloned());
                QPoint(coords)
            })
            .collect();
        let top: Vec<QPoint> = simplex
            .vertices()
            .iter()
            .map(|v| {
                let mut coords = vec![one.clone()];
                coords.extend(v.0.iter().cloned());
                QPoint(coords)
            })
            .collect();
        for i in 0..=k {
            // [a₀,…,aᵢ, bᵢ,…,b_k] with sign (−1)^i
            let mut vertices = Vec::with_capacity(k + 2);
            vertices.extend_from_slice(&bottom[0..=i]);
            vertices.extend_from_slice(&top[i..=k]);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out.add_term(AffineSimplex::new(vertices), coeff * sign);
        }
    }
    out
}

/// An affine map `x ↦ A·x + b` between rational spaces.
#[derive(Debug, Clone)]
pub struct AffineMap {
    pub linear: Vec<Vec<Rational>>,
    pub translation: Vec<Rational>,
}

impl AffineMap {
    pub fn identity(dim: usize) -> Self {
        let linear = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            Rational::from_integer(BigInt::from(1))
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        AffineMap {
            linear,
            translation: vec![Rational::zero(); dim],
        }
    }

    pub fn apply(&self, p: &QPoint) -> QPoint {
        QPoint(
            self.linear
                .iter()
                .zip(&self.translation)
                .map(|(row, t)| {
                    assert_eq!(row.len(), p.dim());
                    row.iter().zip(&p.0).map(|(a, x)| a * x).sum::<Rational>() + t
                })
                .collect(),
        )
    }
}

/// Vertex-wise push-forward; commutes with [`boundary`] exactly for any
/// point map because faces are vertex subtuples.
pub fn push_forward_with(f: impl Fn(&QPoint) -> QPoint, c: &Chain) -> Chain {
    let mut out = Chain::zero(c.dim);
    for (simplex, coeff) in c.terms() {
        let vertices = simplex.vertices().iter().map(&f).collect();
        out.add_term(AffineSimplex::new(vertices), coeff);
    }
    out
}

/// Push-forward along an affine map.
pub fn push_forward(f: &AffineMap, c: &Chain) -> Chain {
    push_forward_with(|p| f.apply(p), c)
}

/// The straight-line contraction `φ(t, p) = x₀ + t·(p − x₀)` with its
/// strong-Lipschitz constant `γ`.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub basepoint: QPoint,
    pub gamma: Rational,
}

impl Contraction {
    pub fn straight_line(basepoint: QPoint, gamma: Rational) -> Self {
        assert!(gamma.is_positive());
        Contraction { basepoint, gamma }
    }

    /// `φ(t, p)`; `φ(1,·) = id` and `φ(0,·) ≡ x₀` hold by construction.
    pub fn eval(&self, t: &Rational, p: &QPoint) -> QPoint {
        self.basepoint.combine(t, p)
    }

    /// Checks the two-variable estimate
    /// `d(φ(t,s), φ(t′,s′)) ≤ γ·diam(S)·|t−t′| + γ·d(s,s′)`
    /// on all sampled pairs, exactly.
    pub fn validate_strong(&self, points: &[QPoint], times: &[Rational]) -> bool {
        let mut diam = Rational::zero();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let d = points[i].linf_dist(&points[j]);
                if d > diam {
                    diam = d;
                }
            }
        }
        for s in points {
            for s2 in points {
                for t in times {
                    for t2 in times {
                        let lhs = self.eval(t, s).linf_dist(&self.eval(t2, s2));
                        let rhs = &self.gamma * &diam * (t - t2).abs()
                            + &self.gamma * s.linf_dist(s2);
                        if lhs > rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Fills a cycle `c` (`bc = 0`) by the cone over the contraction:
/// `c̄ := φ#K(c)`, corrected by `(Σnᵢ)·x₀^{k+1}` in odd dimensions, so that
/// `b(c̄) = c` exactly. For `k = 0` (and automatically for positive even
/// `k`) the coefficient sum must vanish. The image diameter obeys
/// `diam(im c̄) ≤ 2γ·diam(im c)`.
pub fn cone_fill(c: &Chain, phi: &Contraction) -> Result<Chain, ChainError> {
    if !boundary(c).is_zero() {
        return Err(ChainError::NotACycle);
    }
    if c.is_zero() {
        return Ok(Chain::zero(c.dim() + 1));
    }
    let k = c.dim();
    let total = c.coefficient_sum();
    if (k == 0 || k.is_multiple_of(2)) && total != 0 {
        return Err(ChainError::CoefficientSumNonzero);
    }
    let cylinder = prism(c);
    let mut filled = push_forward_with(
        |p| {
            let t = p.0[0].clone();
            let rest = QPoint(p.0[1..].to_vec());
            phi.eval(&t, &rest)
        },
        &cylinder,
    );
    if k % 2 == 1 {
        let correction = AffineSimplex::constant(&phi.basepoint, k + 1);
        filled = filled.add(&Chain::from_terms(k + 1, [(correction, total)]).unwrap());
    }
    Ok(filled)
}

/// Serializes a chain as a JSON list of `{coefficient, vertices}` with
/// vertex coordinates in `"p/q"` form.
pub fn chain_to_json(c: &Chain) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = c
        .terms()
        .map(|(simplex, coeff)| {
            let vertices: Vec<Vec<String>> = simplex
                .vertices()
                .iter()
                .map(|v| v.0.iter().map(crate::rational::format_rational).collect())
                .collect();
            serde_json::json!({ "coefficient": coeff, "vertices": vertices })
        })
        .collect();
    serde_json::Value::Array(terms)
}

/// Parses the serialization produced by [`chain_to_json`].
pub fn chain_from_json(value: &serde_json::Value) -> Result<Chain, ChainError> {
    let Some(entries) = value.as_array() else {
        return Err(ChainError::DimensionMismatch);
    };
    let mut terms = Vec::new();
    let mut dim: Option<usize> = None;
    for entry in entries {
        let coeff = entry
            .get("coefficient")
            .and_then(serde_json::Value::as_i64)
            .ok_or(ChainError::DimensionMismatch)?;
        let vertices = entry
            .get("vertices")
            .and_then(serde_json::Value::as_array)
            .ok_or(ChainError::DimensionMismatch)?;
        let mut points = Vec::new();
        for vertex in vertices {
            let coords = vertex
                .as_array()
                .ok_or(ChainError::DimensionMismatch)?;
            let mut parsed = Vec::new();
            for c in coords {
                let text = c.as_str().ok_or(ChainError::DimensionMismatch)?;
                parsed.push(
                    crate::rational::parse_rational(text)
                        .map_err(|_| ChainError::DimensionMismatch)?,
                );
            }
            points.push(QPoint(parsed));
        }
        if points.is_empty() {
            return Err(ChainError::DimensionMismatch);
        }
        let simplex = AffineSimplex::new(points);
        match dim {
            None => dim = Some(simplex.dimension()),
            Some(d) if d == simplex.dimension() => {}
            Some(_) => return Err(ChainError::DimensionMismatch),
        }
        terms.push((simplex, coeff));
    }
    Chain::from_terms(dim.unwrap_or(0), terms)
}

/// A region with an exact simplex-meets test.
#[derive(Debug, Clone)]
pub enum Region {
    All,
    Empty,
    /// `{x : ⟨normal, x⟩ ≤ bound}`; linear, so the minimum over a simplex
    /// is attained at a vertex.
    HalfSpace {
        normal: Vec<Rational>,
        bound: Rational,
    },
}

impl Region {
    pub fn meets(&self, simplex: &AffineSimplex) -> bool {
        match self {
            Region::All => true,
            Region::Empty => false,
            Region::HalfSpace { normal, bound } => simplex.vertices().iter().any(|v| {
                let value: Rational = normal.iter().zip(&v.0).map(|(a, x)| a * x).sum();
                &value <= bound
            }),
        }
    }
}

/// Subdivides until every simplex has diameter `< epsilon` and keeps the
/// part meeting `region`: returns `(c̄, m)` with `c̄` a part of `sd^m(c)`
/// and `im(sd^m(c) − c̄)` disjoint from the region.
pub fn part_near(
    c: &Chain,
    region: &Region,
    epsilon: &Rational,
) -> Result<(Chain, u32), ChainError> {
    if !epsilon.is_positive() {
        return Err(ChainError::NonpositiveEpsilon);
    }
    let mut cur = c.clone();
    let mut m = 0u32;
    while &cur.max_simplex_diameter() >= epsilon {
        cur = subdivide_once(&cur);
        m += 1;
    }
    let mut part = Chain::zero(cur.dim());
    for (simplex, coeff) in cur.terms() {
        if region.meets(simplex) {
            part.add_term(simplex.clone(), coeff);
        }
    }
    Ok((part, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pt(coords: &[(i64, i64)]) -> QPoint {
        QPoint(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn simplex(coords: &[&[(i64, i64)]]) -> AffineSimplex {
        AffineSimplex::new(coords.iter().map(|c| pt(c)).collect())
    }

    /// Deterministic pseudo-random chain of the given dimension in ℚ².
    fn random_chain(dim: usize, terms: usize, state: &mut u64) -> Chain {
        let mut next = || {
            *state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (*state >> 33) as i64
        };
        let mut chain = Chain::zero(dim);
        for _ in 0..terms {
            let vertices: Vec<QPoint> = (0..=dim)
                .map(|_| {
                    QPoint(vec![
                        rat(next() % 9 - 4, 1 + (next() % 3).abs()),
                        rat(next() % 9 - 4, 1 + (next() % 3).abs()),
                    ])
                })
                .collect();
            let coeff = (next() % 5 - 2).clamp(-2, 2);
            if coeff != 0 {
                chain.add_term(AffineSimplex::new(vertices), coeff);
            }
        }
        chain
    }

    #[test]
    fn boundary_of_segment() {
        let seg = simplex(&[&[(0, 1)], &[(1, 1)]]);
        let b = boundary(&Chain::from_simplex(seg));
        let p = Chain::from_terms(
            0,
            [
                (simplex(&[&[(1, 1)]]), 1),
                (simplex(&[&[(0, 1)]]), -1),
            ],
        )
        .unwrap();
        assert_eq!(b, p);
    }

    #[test]
    fn boundary_squared_vanishes() {
        let mut state = 17u64;
        for _ in 0..40 {
            for dim in 1..=3 {
                let c = random_chain(dim, 4, &mut state);
                assert!(boundary(&boundary(&c)).is_zero());
            }
        }
    }

    #[test]
    fn triangle_loop_is_a_cycle() {
        let a = pt(&[(0, 1), (0, 1)]);
        let b = pt(&[(1, 1), (0, 1)]);
        let c = pt(&[(0, 1), (1, 1)]);
        let loop_chain = Chain::from_terms(
            1,
            [
                (AffineSimplex::new(vec![a.clone(), b.clone()]), 1),
                (AffineSimplex::new(vec![b.clone(), c.clone()]), 1),
                (AffineSimplex::new(vec![c.clone(), a.clone()]), 1),
            ],
        )
        .unwrap();
        assert!(boundary(&loop_chain).is_zero());
    }

    #[test]
    fn subdivision_of_interval() {
        // sd⁰ = id
        let seg = Chain::from_simplex(simplex(&[&[(0, 1)], &[(1, 1)]]));
        assert_eq!(subdivide(&seg, 0), seg);
        // cone-from-barycenter form: [1/2,1] − [1/2,0]
        let sd1 = subdivide(&seg, 1);
        let expected = Chain::from_terms(
            1,
            [
                (simplex(&[&[(1, 2)], &[(1, 1)]]), 1),
                (simplex(&[&[(1, 2)], &[(0, 1)]]), -1),
            ],
        )
        .unwrap();
        assert_eq!(sd1, expected);
    }

    #[test]
    fn subdivision_commutes_with_boundary() {
        let mut state = 23u64;
        for _ in 0..30 {
            let c = random_chain(2, 3, &mut state);
            for m in 0..=2 {
                assert_eq!(boundary(&subdivide(&c, m)), subdivide(&boundary(&c), m));
            }
        }
    }

    #[test]
    fn subdivision_diameter_decay() {
        let tri = Chain::from_simplex(simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]));
        let d0 = tri.max_simplex_diameter();
        for m in 1..=3 {
            let factor = rat(2, 3).pow(m as i32);
            assert!(subdivide(&tri, m).max_simplex_diameter() <= factor * &d0);
        }
    }

    #[test]
    fn homotopy_identity() {
        let mut state = 41u64;
        for _ in 0..25 {
            for dim in 0..=2 {
                let c = random_chain(dim, 3, &mut state);
                for m in 0..=2 {
                    let lhs = boundary(&subdiv_homotopy(&c, m))
                        .add(&subdiv_homotopy(&boundary(&c), m));
                    let rhs = subdivide(&c, m).sub(&c);
                    assert_eq!(lhs, rhs, "dim {dim} m {m}");
                }
            }
        }
    }

    #[test]
    fn homotopy_naturality() {
        // f# ∘ D_m = D_m ∘ f# for an affine map ℚ² → ℚ³
        let f = AffineMap {
            linear: vec![
                vec![rat(1, 2), rat(3, 1)],
                vec![rat(-1, 1), rat(1, 3)],
                vec![rat(2, 1), rat(0, 1)],
            ],
            translation: vec![int(1), rat(-1, 2), int(0)],
        };
        let mut state = 57u64;
        for _ in 0..15 {
            let c = random_chain(1, 3, &mut state);
            for m in 0..=2 {
                assert_eq!(
                    push_forward(&f, &subdiv_homotopy(&c, m)),
                    subdiv_homotopy(&push_forward(&f, &c), m)
                );
            }
        }
    }

    #[test]
    fn prism_over_point_and_segment() {
        let p = Chain::from_simplex(simplex(&[&[(2, 1), (3, 1)]]));
        let k = prism(&p);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.term_count(), 1);
        let seg = Chain::from_simplex(simplex(&[&[(0, 1)], &[(1, 1)]]));
        let k1 = prism(&seg);
        assert_eq!(k1.term_count(), 2);
    }

    #[test]
    fn prism_boundary_identity() {
        let mut state = 99u64;
        let zero = int(0);
        let one = int(1);
        for _ in 0..25 {
            for dim in 0..=2 {
                let c = random_chain(dim, 3, &mut state);
                let lhs = boundary(&prism(&c)).add(&prism(&boundary(&c)));
                let rhs = cylinder_end(&c, &one).sub(&cylinder_end(&c, &zero));
                assert_eq!(lhs, rhs, "dim {dim}");
            }
        }
    }

    #[test]
    fn push_forward_identity_and_boundary() {
        let mut state = 3u64;
        let c = random_chain(2, 4, &mut state);
        assert_eq!(push_forward(&AffineMap::identity(2), &c), c);
        let f = AffineMap {
            linear: vec![vec![int(1), int(0)], vec![int(0), int(-1)]],
            translation: vec![rat(1, 3), int(2)],
        };
        assert_eq!(boundary(&push_forward(&f, &c)), push_forward(&f, &boundary(&c)));
    }

    #[test]
    fn projected_tetrahedron_boundary_is_cycle() {
        // boundary of a 3-simplex in ℚ³, projected to ℚ²
        let tet = AffineSimplex::new(vec![
            QPoint(vec![int(0), int(0), int(0)]),
            QPoint(vec![int(1), int(0), int(0)]),
            QPoint(vec![int(0), int(1), int(0)]),
            QPoint(vec![int(0), int(0), int(1)]),
        ]);
        let shell = boundary(&Chain::from_simplex(tet));
        let proj = push_forward_with(|p| QPoint(p.0[0..2].to_vec()), &shell);
        assert!(boundary(&proj).is_zero());
    }

    #[test]
    fn cone_fill_zero_dimensional() {
        // c = [q] − [p], straight-line contraction: two rays to x₀
        let p = pt(&[(0, 1), (0, 1)]);
        let q = pt(&[(1, 1), (1, 1)]);
        let x0 = pt(&[(1, 2), (0, 1)]);
        let c = Chain::from_terms(
            0,
            [
                (AffineSimplex::new(vec![q.clone()]), 1),
                (AffineSimplex::new(vec![p.clone()]), -1),
            ],
        )
        .unwrap();
        let phi = Contraction::straight_line(x0, int(2));
        let filled = cone_fill(&c, &phi).unwrap();
        assert_eq!(filled.dim(), 1);
        assert_eq!(boundary(&filled), c);
        // nonzero total in dimension zero is rejected
        let unbalanced = Chain::from_terms(0, [(AffineSimplex::new(vec![p]), 1)]).unwrap();
        assert_eq!(
            cone_fill(&unbalanced, &phi),
            Err(ChainError::CoefficientSumNonzero)
        );
    }

    #[test]
    fn cone_fill_triangle_boundary() {
        let tri = simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let cycle = boundary(&Chain::from_simplex(tri.clone()));
        let phi = Contraction::straight_line(tri.barycenter(), int(1));
        let filled = cone_fill(&cycle, &phi).unwrap();
        assert_eq!(boundary(&filled), cycle);
        // 2γ diameter bound on vertex sets
        let bound = rat(2, 1) * &phi.gamma * cycle.im_diameter();
        assert!(filled.im_diameter() <= bound);
        // zero chain fills to zero
        assert!(cone_fill(&Chain::zero(1), &phi).unwrap().is_zero());
        // non-cycle rejected
        let seg = Chain::from_simplex(simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)]]));
        assert_eq!(cone_fill(&seg, &phi), Err(ChainError::NotACycle));
    }

    #[test]
    fn contraction_estimate_holds_on_samples() {
        let phi = Contraction::straight_line(pt(&[(0, 1), (0, 1)]), int(1));
        let points = vec![
            pt(&[(0, 1), (0, 1)]),
            pt(&[(1, 1), (0, 1)]),
            pt(&[(1, 2), (1, 2)]),
            pt(&[(-1, 1), (1, 3)]),
        ];
        let times = vec![int(0), rat(1, 3), rat(1, 2), int(1)];
        assert!(phi.validate_strong(&points, &times));
    }

    #[test]
    fn json_round_trip() {
        let mut state = 77u64;
        let c = random_chain(2, 3, &mut state);
        let back = chain_from_json(&chain_to_json(&c)).unwrap();
        assert_eq!(back, c);
        assert!(chain_from_json(&serde_json::json!([{ "coefficient": 1 }])).is_err());
    }

    #[test]
    fn part_near_cases() {
        let seg = Chain::from_simplex(AffineSimplex::new(vec![
            QPoint(vec![int(0)]),
            QPoint(vec![int(1)]),
        ]));
        // whole space: the full subdivision at the minimal m for the bound
        let (all, m_all) = part_near(&seg, &Region::All, &rat(1, 4)).unwrap();
        assert_eq!(all, subdivide(&seg, m_all));
        assert!(subdivide(&seg, m_all).max_simplex_diameter() < rat(1, 4));
        assert!(m_all > 0 && subdivide(&seg, m_all - 1).max_simplex_diameter() >= rat(1, 4));
        // empty region keeps nothing
        let (none, _) = part_near(&seg, &Region::Empty, &rat(1, 4)).unwrap();
        assert!(none.is_zero());
        // {x ≤ 1/3} in ℚ¹ with ε = 1/4: retained pieces meet U and are short
        let region = Region::HalfSpace {
            normal: vec![int(1)],
            bound: rat(1, 3),
        };
        let (part, m) = part_near(&seg, &region, &rat(1, 4)).unwrap();
        assert!(!part.is_zero());
        for (s, _) in part.terms() {
            assert!(s.diameter() < rat(1, 4));
            assert!(region.meets(s));
        }
        // the rest misses U
        for (s, _) in subdivide(&seg, m).sub(&part).terms() {
            assert!(!region.meets(s));
        }
        assert!(part_near(&seg, &Region::All, &int(0)).is_err());
    }
}
