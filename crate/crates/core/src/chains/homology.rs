//! Integral homology of finite complexes from their boundary matrices.

use super::snf::{smith_normal_form, IntMatrix};
use super::ChainError;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;

/// Boundary matrices of a finite complex: `boundaries[k]` is the matrix of
/// `∂_{k+1} : C_{k+1} → C_k`, of shape `dims[k] × dims[k+1]`.
#[derive(Debug, Clone)]
pub struct SimplicialComplexMatrixSet {
    pub dims: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

impl SimplicialComplexMatrixSet {
    pub fn validate(&self) -> Result<(), ChainError> {
        if self.dims.is_empty() || self.boundaries.len() + 1 != self.dims.len() {
            return Err(ChainError::ShapeMismatch);
        }
        for (k, b) in self.boundaries.iter().enumerate() {
            if b.rows != self.dims[k] || b.cols != self.dims[k + 1] {
                return Err(ChainError::ShapeMismatch);
            }
        }
        for pair in self.boundaries.windows(2) {
            if !pair[0].mul(&pair[1]).is_zero() {
                return Err(ChainError::NotAComplex);
            }
        }
        Ok(())
    }
}

/// One homology group: free rank and torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

/// Integral homology by Smith normal form:
/// `H_k = Z^{dims[k] − rank ∂_k − rank ∂_{k+1}} ⊕ ⊕ Z/dᵢ` with `dᵢ` the
/// invariant factors of `∂_{k+1}` exceeding 1.
pub fn homology(complex: &SimplicialComplexMatrixSet) -> Result<Vec<HomologyGroup>, ChainError> {
    complex.validate()?;
    let top = complex.dims.len();
    let forms: Vec<_> = complex
        .boundaries
        .iter()
        .map(smith_normal_form)
        .collect();
    let mut out = Vec::with_capacity(top);
    for k in 0..top {
        let rank_in = if k == 0 { 0 } else { forms[k - 1].rank() };
        let rank_out = if k < forms.len() { forms[k].rank() } else { 0 };
        let betti = complex.dims[k] - rank_in - rank_out;
        let torsion = if k < forms.len() {
            forms[k]
                .diagonal
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect()
        } else {
            Vec::new()
        };
        out.push(HomologyGroup { betti, torsion });
    }
    Ok(out)
}

/// Builds the full face complex of a list of top simplices given by vertex
/// indices; orientations come from sorted vertex order.
pub fn complex_from_top_simplices(top: &[Vec<usize>]) -> SimplicialComplexMatrixSet {
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    fn insert_with_faces(cell: &[usize], by_dim: &mut Vec<BTreeSet<Vec<usize>>>) {
        let dim = cell.len() - 1;
        while by_dim.len() <= dim {
            by_dim.push(BTreeSet::new());
        }
        if !by_dim[dim].insert(cell.to_vec()) {
            return;
        }
        if dim > 0 {
            for omit in 0..cell.len() {
                let mut face = cell.to_vec();
                face.remove(omit);
                insert_with_faces(&face, by_dim);
            }
        }
    }
    for cell in top {
        let mut sorted = cell.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), cell.len(), "repeated vertex in a cell");
        insert_with_faces(&sorted, &mut by_dim);
    }
    let dims: Vec<usize> = by_dim.iter().map(|s| s.len()).collect();
    let index: Vec<std::collections::BTreeMap<&Vec<usize>, usize>> = by_dim
        .iter()
        .map(|cells| cells.iter().enumerate().map(|(i, c)| (c, i)).collect())
        .collect();
    let mut boundaries = Vec::new();
    for k in 1..by_dim.len() {
        let mut m = IntMatrix::zero(dims[k - 1], dims[k]);
        for (col, cell) in by_dim[k].iter().enumerate() {
            for omit in 0..cell.len() {
                let mut face = cell.clone();
                face.remove(omit);
                let row = index[k - 1][&face];
                let sign = if omit % 2 == 0 { 1 } else { -1 };
                m.set(row, col, BigInt::from(sign));
            }
        }
        boundaries.push(m);
    }
    SimplicialComplexMatrixSet { dims, boundaries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn betti_list(groups: &[HomologyGroup]) -> Vec<usize> {
        groups.iter().map(|g| g.betti).collect()
    }

    #[test]
    fn point() {
        let complex = complex_from_top_simplices(&[vec![0]]);
        let h = homology(&complex).unwrap();
        assert_eq!(betti_list(&h), vec![1]);
        assert!(h[0].torsion.is_empty());
    }

    #[test]
    fn circle_as_triangle_boundary() {
        let complex = complex_from_top_simplices(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = homology(&complex).unwrap();
        assert_eq!(betti_list(&h), vec![1, 1]);
    }

    #[test]
    fn wedge_of_two_circles() {
        let complex = complex_from_top_simplices(&[
            vec![0, 1],
            vec![1, 2],
            vec![0, 2],
            vec![0, 3],
            vec![3, 4],
            vec![0, 4],
        ]);
        let h = homology(&complex).unwrap();
        assert_eq!(betti_list(&h), vec![1, 2]);
    }

    #[test]
    fn filled_triangle_and_sphere() {
        let disk = complex_from_top_simplices(&[vec![0, 1, 2]]);
        assert_eq!(betti_list(&homology(&disk).unwrap()), vec![1, 0, 0]);
        // boundary of a tetrahedron: S²
        let sphere = complex_from_top_simplices(&[
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ]);
        assert_eq!(betti_list(&homology(&sphere).unwrap()), vec![1, 0, 1]);
    }

    #[test]
    fn torsion_of_projective_plane() {
        // minimal RP² triangulation (6 vertices): H₀ = Z, H₁ = Z/2, H₂ = 0
        let rp2 = complex_from_top_simplices(&[
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 1, 5],
            vec![0, 4, 5],
            vec![0, 3, 4],
            vec![1, 2, 4],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 3, 5],
            vec![2, 4, 5],
        ]);
        let h = homology(&rp2).unwrap();
        assert_eq!(betti_list(&h), vec![1, 0, 0]);
        assert_eq!(h[1].torsion, vec![BigInt::from(2)]);
        assert!(h[2].torsion.is_empty());
    }

    #[test]
    fn malformed_input_rejected() {
        let bad = SimplicialComplexMatrixSet {
            dims: vec![2, 2],
            boundaries: vec![IntMatrix::from_rows(vec![vec![1, 0, 0]])],
        };
        assert!(matches!(homology(&bad), Err(ChainError::ShapeMismatch)));
        // b∘b ≠ 0
        let not_complex = SimplicialComplexMatrixSet {
            dims: vec![1, 1, 1],
            boundaries: vec![
                IntMatrix::from_rows(vec![vec![1]]),
                IntMatrix::from_rows(vec![vec![1]]),
            ],
        };
        assert!(matches!(homology(&not_complex), Err(ChainError::NotAComplex)));
    }
}
