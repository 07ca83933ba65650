//! Closed rational intervals with outward arithmetic, used to filter
//! sign computations before exact refinement decides.

use super::{rat, Rational, Sign};
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// A closed interval with rational endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct QInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl QInterval {
    pub fn point(v: Rational) -> Self {
        QInterval { lo: v.clone(), hi: v }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        QInterval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Definite sign if the interval excludes zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &QInterval) -> QInterval {
        QInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> QInterval {
        QInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &QInterval) -> QInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        QInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> QInterval {
        if c.is_negative() {
            QInterval::new(&self.hi * c, &self.lo * c)
        } else {
            QInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn add_rat(&self, c: &Rational) -> QInterval {
        QInterval::new(&self.lo + c, &self.hi + c)
    }
}

/// Horner evaluation of a dense coefficient list `c0 + c1 x + ...` over an
/// interval for `x`.
pub fn horner_interval(coeffs: &[Rational], x: &QInterval) -> QInterval {
    let mut acc = QInterval::point(rat(0));
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add_rat(c);
    }
    acc
}

/// Horner evaluation with interval coefficients.
pub fn horner_interval_coeffs(coeffs: &[QInterval], x: &QInterval) -> QInterval {
    let mut acc = QInterval::point(rat(0));
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Cauchy-style root bound from interval enclosures of the coefficients.
/// Requires the leading coefficient interval to exclude zero. Returns a
/// rational `B` with all real roots in `(-B, B)`.
pub fn cauchy_bound_from_intervals(coeffs: &[QInterval]) -> Option<Rational> {
    let lead = coeffs.last()?;
    let lead_mag = if lead.sign()? > 0 {
        lead.lo.clone()
    } else {
        -lead.hi.clone()
    };
    if !lead_mag.is_positive() {
        return None;
    }
    let mut max_ratio = rat(0);
    for c in &coeffs[..coeffs.len() - 1] {
        let mag = {
            let a = c.lo.clone();
            let b = c.hi.clone();
            let aa = if a.is_negative() { -a } else { a };
            let bb = if b.is_negative() { -b } else { b };
            if aa > bb {
                aa
            } else {
                bb
            }
        };
        let r = mag / &lead_mag;
        if r > max_ratio {
            max_ratio = r;
        }
    }
    Some(max_ratio + rat(1))
}

/// Enclosures for a list of rationals.
pub fn points(vals: &[Rational]) -> Vec<QInterval> {
    vals.iter().map(|v| QInterval::point(v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    #[test]
    fn interval_mul_covers_products() {
        let a = QInterval::new(rat(-2), rat(3));
        let b = QInterval::new(rat(-1), rat(5));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-10));
        assert_eq!(p.hi, rat(15));
    }

    #[test]
    fn horner_matches_point_eval() {
        // 2 - x + 3x^2 at x = [1/2, 1/2]
        let coeffs = [rat(2), rat(-1), rat(3)];
        let v = horner_interval(&coeffs, &QInterval::point(ratio(1, 2)));
        assert_eq!(v.lo, ratio(9, 4));
        assert_eq!(v.hi, ratio(9, 4));
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        // x^2 - 4: roots +-2, bound must exceed 2.
        let coeffs = points(&[rat(-4), rat(0), rat(1)]);
        let b = cauchy_bound_from_intervals(&coeffs).unwrap();
        assert!(b > rat(2));
    }
}
