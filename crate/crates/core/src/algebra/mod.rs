//! Exact polynomial arithmetic, subresultants, real root isolation, and
//! sign evaluation at real algebraic points.
//!
//! Everything downstream (CAD construction, partition verification, all
//! geometric predicates) reduces to the operations in this module, so
//! coefficients are exact rationals end-to-end. Double precision appears
//! only inside interval filters and never decides a sign.

mod algnum;
mod interval;
mod poly;
mod resultant;
mod roots;
mod tower;

pub use algnum::{isolate_ipoly_roots, isolate_real_roots, sign_at, sign_univariate_at, AlgebraicNumber, Scalar};
pub use interval::QInterval;
pub use poly::{MultiPoly, PolyError, Var};
pub use resultant::{resultant, subresultant_sequence};
pub use roots::{isolate_square_free, sturm_count, sturm_total_roots, IPoly, RootLoc, RootsError};
pub use tower::{eval_poly_interval, Coord, SamplePoint};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational; the coefficient carrier for every
/// polynomial in the crate. `num-rational` maintains the invariants the
/// crate relies on: positive denominator and reduced form.
pub type Rational = num_rational::BigRational;

/// Sign of an exact quantity.
pub type Sign = i8;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign_of(r: &Rational) -> Sign {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Approximate value for diagnostics and filters; never used to decide.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back on the quotient of leading digits for huge values.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rat(2)
}

/// A rational strictly between `a < b`, preferring small denominators
/// (dyadic search between the endpoints).
pub fn rational_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a < b);
    // Try integers first, then halve the mesh.
    let mut mesh = Rational::one();
    for _ in 0..128 {
        // smallest multiple of mesh strictly above a
        let q = (a / &mesh).floor() + Rational::one();
        let cand = &q * &mesh;
        if &cand > a && &cand < b {
            return cand;
        }
        mesh = mesh / rat(2);
    }
    midpoint(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_invariants_hold() {
        let r = ratio(-4, -6);
        assert_eq!(r, ratio(2, 3));
        assert!(r.denom() > &BigInt::from(0));
        let s = ratio(6, -4);
        assert_eq!(s, ratio(-3, 2));
        assert!(s.denom() > &BigInt::from(0));
    }

    #[test]
    fn between_stays_inside() {
        let a = ratio(1, 3);
        let b = ratio(2, 5);
        let m = rational_between(&a, &b);
        assert!(m > a && m < b);
        let c = rat(-7);
        let d = ratio(-69, 10);
        let m = rational_between(&c, &d);
        assert!(m > c && m < d);
    }
}
