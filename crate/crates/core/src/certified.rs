//! Certified enclosures of real numbers by rational intervals.
//!
//! Every non-rational quantity in the workbench is a rational multiple of π,
//! so a certified enclosure of π turns speed and distance checks into exact
//! rational inequalities. The default enclosure is
//! `3.14159265 < π < 3.14159266`; it can be tightened on demand with a
//! Machin-style arctangent series whose alternating partial sums bracket the
//! limit.

use crate::rational::{int, rat, Rational};
use num_traits::{Signed, Zero};

/// A closed rational interval `[lo, hi]` enclosing a real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedReal {
    lo: Rational,
    hi: Rational,
}

impl CertifiedReal {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "certified interval must satisfy lo <= hi");
        CertifiedReal { lo, hi }
    }

    /// Exact value: the degenerate interval `[r, r]`.
    pub fn point(r: Rational) -> Self {
        CertifiedReal { lo: r.clone(), hi: r }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    /// Multiplication by an exact rational, either sign.
    pub fn scale(&self, c: &Rational) -> CertifiedReal {
        if c.is_negative() {
            CertifiedReal::new(c * &self.hi, c * &self.lo)
        } else {
            CertifiedReal::new(c * &self.lo, c * &self.hi)
        }
    }

    pub fn max(&self, other: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::new(
            self.lo.clone().max(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    /// Certified `self ≤ bound`: true only when the whole interval is below.
    pub fn certainly_le(&self, bound: &Rational) -> bool {
        &self.hi <= bound
    }
}

/// Bracketing partial sums of `arctan(1/x)` with `terms` series terms.
///
/// The series is alternating with strictly decreasing terms, so consecutive
/// partial sums enclose the limit.
fn atan_inv_bounds(x: i64, terms: usize) -> (Rational, Rational) {
    assert!(x > 1 && terms >= 1);
    let xsq = int(x * x);
    let mut power = int(x); // x^(2i+1) as we go
    let mut partial = Rational::zero();
    let mut last_with: Rational;
    let mut last_without: Rational;
    // partial sum with `terms` terms vs `terms+1` terms
    let mut sums = Vec::with_capacity(terms + 1);
    for i in 0..=terms {
        let term = Rational::new(1.into(), (int(2 * i as i64 + 1) * &power).to_integer());
        if i % 2 == 0 {
            partial += term;
        } else {
            partial -= term;
        }
        sums.push(partial.clone());
        power *= &xsq;
    }
    last_without = sums[terms - 1].clone();
    last_with = sums[terms].clone();
    if last_without > last_with {
        std::mem::swap(&mut last_without, &mut last_with);
    }
    (last_without, last_with)
}

/// Machin's identity `π = 16·arctan(1/5) − 4·arctan(1/239)` with certified
/// tails; the enclosure tightens as `terms` grows.
pub fn pi_bounds(terms: usize) -> CertifiedReal {
    let (lo5, hi5) = atan_inv_bounds(5, terms);
    let (lo239, hi239) = atan_inv_bounds(239, terms.max(2));
    let lo = int(16) * lo5 - int(4) * hi239;
    let hi = int(16) * hi5 - int(4) * lo239;
    CertifiedReal::new(lo, hi)
}

/// The default working enclosure `3.14159265 < π < 3.14159266`.
pub fn pi_default() -> CertifiedReal {
    CertifiedReal::new(rat(314_159_265, 100_000_000), rat(314_159_266, 100_000_000))
}

/// Enclosure of `coeff · π`.
pub fn pi_multiple(coeff: &Rational, pi: &CertifiedReal) -> CertifiedReal {
    pi.scale(coeff)
}

/// Decides `coeff·π ≤ bound` exactly. π is irrational, so for a nonzero
/// coefficient the two sides are never equal and a finite enclosure settles
/// the comparison.
pub fn pi_multiple_le(coeff: &Rational, bound: &Rational) -> bool {
    if coeff.is_zero() {
        return !bound.is_negative();
    }
    let mut terms = 4usize;
    loop {
        let enclosure = pi_bounds(terms).scale(coeff);
        if enclosure.hi() <= bound {
            return true;
        }
        if enclosure.lo() > bound {
            return false;
        }
        terms *= 2;
        assert!(terms <= 1 << 14, "π precision runaway");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machin_series_brackets_pi() {
        let rough = pi_bounds(3);
        let fine = pi_bounds(12);
        assert!(rough.lo() <= fine.lo());
        assert!(fine.hi() <= rough.hi());
        assert!(fine.width() < rat(1, 1_000_000_000_000));
    }

    #[test]
    fn default_enclosure_is_valid() {
        // the hardcoded default must contain the tight Machin enclosure
        let tight = pi_bounds(16);
        let def = pi_default();
        assert!(def.lo() < tight.lo());
        assert!(tight.hi() < def.hi());
    }

    #[test]
    fn interval_arithmetic() {
        let a = CertifiedReal::new(rat(1, 2), rat(3, 4));
        let b = a.scale(&rat(-2, 1));
        assert_eq!(b.lo(), &rat(-3, 2));
        assert_eq!(b.hi(), &rat(-1, 1));
        assert!(a.add(&a).certainly_le(&rat(3, 2)));
        assert!(a.contains(&rat(2, 3)));
    }
}
