//! Smith normal form over ℤ with big-integer entries.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &a * other.get(k, j);
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + add);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let add = factor * self.get(source, j);
            let cur = self.get(target, j).clone();
            self.set(target, j, cur + add);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let add = factor * self.get(i, source);
            let cur = self.get(i, target).clone();
            self.set(i, target, cur + add);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }
}

/// Invariant factors `d₁ | d₂ | …`, all positive; the number of factors is
/// the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub diagonal: Vec<BigInt>,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn smallest_nonzero(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in from..m.rows {
        for j in from..m.cols {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            match &best {
                Some((_, _, b)) if *b <= mag => {}
                _ => best = Some((i, j, mag)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Elimination with a smallest-pivot strategy and the divisibility fix-up,
/// so the diagonal comes out as a chain `d₁ | d₂ | …`.
pub fn smith_normal_form(input: &IntMatrix) -> SmithNormalForm {
    let mut m = input.clone();
    let limit = m.rows.min(m.cols);
    let mut k = 0usize;
    while k < limit {
        let Some((pi, pj)) = smallest_nonzero(&m, k) else {
            break;
        };
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        if m.get(k, k).is_negative() {
            m.negate_row(k);
        }
        // clear the pivot row and column; restart whenever a remainder
        // produces a smaller candidate pivot
        let mut dirty = false;
        for i in (k + 1)..m.rows {
            let q = m.get(i, k) / m.get(k, k);
            if !q.is_zero() {
                m.add_row_multiple(i, k, &(-q));
            }
            if !m.get(i, k).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        for j in (k + 1)..m.cols {
            let q = m.get(k, j) / m.get(k, k);
            if !q.is_zero() {
                m.add_col_multiple(j, k, &(-q));
            }
            if !m.get(k, j).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // divisibility: every remaining entry must be divisible by the pivot
        let pivot = m.get(k, k).clone();
        let mut offender = None;
        'scan: for i in (k + 1)..m.rows {
            for j in (k + 1)..m.cols {
                if !(m.get(i, j) % &pivot).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            let one = BigInt::from(1);
            m.add_row_multiple(k, i, &one);
            continue;
        }
        k += 1;
    }
    let diagonal = (0..k).map(|i| m.get(i, i).clone()).collect();
    SmithNormalForm { diagonal }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinantal_divisors_oracle() {
        // d₁·…·d_k equals the gcd of all k×k minors; check on a 3×3 matrix
        fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
            fn det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
                if rows.len() == 1 {
                    return m.get(rows[0], cols[0]).clone();
                }
                let mut acc = BigInt::zero();
                for (idx, &c) in cols.iter().enumerate() {
                    let sub_cols: Vec<usize> =
                        cols.iter().copied().filter(|&x| x != c).collect();
                    let term = m.get(rows[0], c) * det(m, &rows[1..], &sub_cols);
                    if idx % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            }
            use num_integer::Integer;
            let mut g = BigInt::zero();
            let idx: Vec<usize> = (0..3).collect();
            for rows in combos(&idx, k) {
                for cols in combos(&idx, k) {
                    g = g.gcd(&det(m, &rows, &cols));
                }
            }
            g
        }
        fn combos(items: &[usize], k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                for mut rest in combos(&items[i + 1..], k - 1) {
                    rest.insert(0, x);
                    out.push(rest);
                }
            }
            out
        }
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let snf = smith_normal_form(&m);
        let mut product = BigInt::from(1);
        for (k, d) in snf.diagonal.iter().enumerate() {
            product *= d;
            assert_eq!(product, minor_gcd(&m, k + 1), "divisor {k}");
        }
    }

    #[test]
    fn divisibility_chain_and_rank() {
        let m = IntMatrix::from_rows(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let snf = smith_normal_form(&m);
        assert_eq!(
            snf.diagonal,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
        assert_eq!(snf.rank(), 3);
        for w in snf.diagonal.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "not a divisibility chain");
        }
    }

    #[test]
    fn zero_and_identity() {
        let z = IntMatrix::zero(3, 2);
        assert_eq!(smith_normal_form(&z).rank(), 0);
        let id = IntMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(
            smith_normal_form(&id).diagonal,
            vec![BigInt::from(1), BigInt::from(1)]
        );
    }
}
