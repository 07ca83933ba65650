//! Real algebraic numbers: a square-free defining polynomial plus an
//! isolating interval, with exact comparison and sign evaluation.

use super::interval::{horner_interval, QInterval};
use super::poly::{MultiPoly, PolyError, Var};
use super::roots::{bisect_once, isolate_square_free, IPoly, RootLoc, RootsError};
use super::{midpoint, rat, rational_to_f64, sign_of, Rational, Sign};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_traits::Zero;

/// A real algebraic number: the unique root of `poly` inside the open
/// interval `(lo, hi)`.
///
/// Invariants: `poly` is square-free, primitive, with positive leading
/// coefficient; the interval contains exactly one root; the endpoints are
/// not roots, so the polynomial changes sign across the interval.
/// Refinement returns a new value and never loses the root.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    poly: IPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    pub fn new(poly: IPoly, lo: Rational, hi: Rational) -> Self {
        debug_assert!(poly.eval_sign(&lo) * poly.eval_sign(&hi) < 0);
        AlgebraicNumber { poly, lo, hi }
    }

    pub fn defining(&self) -> &IPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn interval(&self) -> QInterval {
        QInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// One bisection step; the result's width is at most half and the
    /// root is preserved.
    pub fn refine(&self) -> AlgebraicNumber {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        bisect_once(&self.poly, &mut lo, &mut hi);
        AlgebraicNumber { poly: self.poly.clone(), lo, hi }
    }

    pub fn refine_below(&self, width: &Rational) -> AlgebraicNumber {
        let mut out = self.clone();
        while &out.width() > width {
            out = out.refine();
        }
        out
    }

    pub fn approx_f64(&self) -> f64 {
        let refined = self.refine_below(&Rational::new(1.into(), 100_000_000_000i64.into()));
        rational_to_f64(&midpoint(&refined.lo, &refined.hi))
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.eval_sign(r);
        if s == 0 {
            return Ordering::Equal;
        }
        if s == self.poly.eval_sign(&self.lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison with another algebraic number.
    pub fn cmp_alg(&self, other: &AlgebraicNumber) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        // equality test once up front: does other's polynomial vanish at
        // self, with self inside other's open interval?
        let pb: Vec<Rational> = other
            .poly
            .coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        if sign_univariate_at(&pb, self) == 0
            && self.cmp_rational(&other.lo) == Ordering::Greater
            && self.cmp_rational(&other.hi) == Ordering::Less
        {
            return Ordering::Equal;
        }
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a = a.refine();
            b = b.refine();
        }
    }
}

/// An exact real number: rational or algebraic.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Alg(AlgebraicNumber),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(rat(0))
    }

    pub fn from_root_loc(poly: &IPoly, loc: &RootLoc) -> Scalar {
        match loc {
            RootLoc::Exact(r) => Scalar::Rat(r.clone()),
            RootLoc::Interval(lo, hi) => {
                Scalar::Alg(AlgebraicNumber::new(poly.clone(), lo.clone(), hi.clone()))
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Alg(_) => None,
        }
    }

    pub fn approx_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => rational_to_f64(r),
            Scalar::Alg(a) => a.approx_f64(),
        }
    }

    /// Enclosing interval (a point for rationals).
    pub fn enclosure(&self) -> QInterval {
        match self {
            Scalar::Rat(r) => QInterval::point(r.clone()),
            Scalar::Alg(a) => a.interval(),
        }
    }

    /// A version with enclosure width at most `w`.
    pub fn tighten(&self, w: &Rational) -> Scalar {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Alg(a) => Scalar::Alg(a.refine_below(w)),
        }
    }

    pub fn cmp_exact(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Alg(a), Scalar::Rat(b)) => a.cmp_rational(b),
            (Scalar::Rat(a), Scalar::Alg(b)) => b.cmp_rational(a).reverse(),
            (Scalar::Alg(a), Scalar::Alg(b)) => a.cmp_alg(b),
        }
    }

    pub fn eq_exact(&self, other: &Scalar) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }

    pub fn sign(&self) -> Sign {
        match self {
            Scalar::Rat(r) => sign_of(r),
            Scalar::Alg(a) => match a.cmp_rational(&rat(0)) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            },
        }
    }

    /// A rational strictly between two exact values (`self < other`).
    pub fn rational_between(&self, other: &Scalar) -> Rational {
        debug_assert_eq!(self.cmp_exact(other), Ordering::Less);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let (ahi, blo) = (a.enclosure().hi, b.enclosure().lo);
            if ahi < blo {
                return super::rational_between(&ahi, &blo);
            }
            // touching bounds still work when one side is exact
            if ahi == blo && a.is_rational() && b.is_rational() {
                unreachable!("equal rationals are not strictly ordered");
            }
            if let Scalar::Alg(x) = &a {
                a = Scalar::Alg(x.refine());
            }
            if let Scalar::Alg(x) = &b {
                b = Scalar::Alg(x.refine());
            }
            if a.is_rational() && b.is_rational() {
                let (Scalar::Rat(ra), Scalar::Rat(rb)) = (&a, &b) else { unreachable!() };
                return super::rational_between(ra, rb);
            }
        }
    }
}

/// Isolate the distinct real roots of a univariate polynomial, sorted
/// ascending, with multiplicities reported separately.
pub fn isolate_real_roots(p: &MultiPoly) -> Result<Vec<(Scalar, u32)>, RootsError> {
    if p.is_zero() {
        return Err(RootsError::IdenticallyZero);
    }
    let used = p.used_vars();
    assert!(used.len() <= 1, "isolate_real_roots needs a univariate polynomial");
    if used.is_empty() {
        return Ok(Vec::new());
    }
    let v = used[0];
    let dense = p.coeffs_in(v).into_iter().map(|c| {
        c.constant_value().expect("univariate by used_vars")
    });
    let ip = IPoly::from_rational_coeffs(&dense.collect::<Vec<_>>());
    Ok(isolate_ipoly_roots(&ip))
}

/// Root isolation with multiplicities for a dense integer polynomial.
pub fn isolate_ipoly_roots(ip: &IPoly) -> Vec<(Scalar, u32)> {
    let mut roots: Vec<(Scalar, u32)> = Vec::new();
    for (factor, mult) in ip.yun() {
        for loc in isolate_square_free(&factor) {
            roots.push((Scalar::from_root_loc(&factor, &loc), mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp_exact(&b.0));
    roots
}

/// Reduce a dense rational univariate modulo `alpha`'s defining
/// polynomial; the remainder agrees with the input at `alpha`.
fn reduce_mod(coeffs: &[Rational], defining: &IPoly) -> Vec<Rational> {
    let dn = defining.degree();
    let mut rem = coeffs.to_vec();
    if dn == 0 {
        return vec![];
    }
    let ld = Rational::from_integer(defining.coeffs[dn].clone());
    let mut i = rem.len();
    while i > dn {
        i -= 1;
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        let f = &c / &ld;
        for (j, dc) in defining.coeffs.iter().enumerate() {
            let idx = i - dn + j;
            rem[idx] = &rem[idx] - &f * Rational::from_integer(dc.clone());
        }
    }
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    rem
}

/// Exact sign of a univariate polynomial (dense rational coefficients) at
/// an algebraic number.
pub fn sign_univariate_at(coeffs: &[Rational], alpha: &AlgebraicNumber) -> Sign {
    let r = reduce_mod(coeffs, alpha.defining());
    if r.is_empty() {
        return 0;
    }
    if r.len() == 1 {
        return sign_of(&r[0]);
    }
    // exact zero test: the reduced polynomial vanishes at alpha iff its
    // gcd with the defining polynomial has the root of the interval
    let ri = IPoly::from_rational_coeffs(&r);
    let g = IPoly::gcd(&ri, alpha.defining());
    if g.degree() > 0 {
        let sl = g.eval_sign(alpha.lo());
        let sh = g.eval_sign(alpha.hi());
        debug_assert!(sl != 0 && sh != 0, "endpoints are non-roots of the defining polynomial");
        if sl != sh {
            return 0;
        }
    }
    // nonzero: refine until the interval enclosure is sign-definite
    let mut a = alpha.clone();
    loop {
        let enc = horner_interval(&r, &QInterval::new(a.lo().clone(), a.hi().clone()));
        if let Some(s) = enc.sign() {
            if s != 0 {
                return s;
            }
        }
        a = a.refine();
    }
}

/// Exact sign of a multivariate polynomial at a point whose coordinates
/// are rational except for at most one algebraic coordinate. Points with
/// several independent algebraic coordinates are handled by the sample
/// point machinery in `tower`.
pub fn sign_at(p: &MultiPoly, point: &[(Var, Scalar)]) -> Result<Sign, PolyError> {
    let mut rats: Vec<(Var, Rational)> = Vec::new();
    let mut algs: Vec<(Var, &AlgebraicNumber)> = Vec::new();
    for (v, s) in point {
        match s {
            Scalar::Rat(r) => rats.push((*v, r.clone())),
            Scalar::Alg(a) => algs.push((*v, a)),
        }
    }
    let q = p.partial_eval(&rats);
    match algs.len() {
        0 => {
            let c = q.constant_value().ok_or(PolyError::IncompatibleVariables)?;
            Ok(sign_of(&c))
        }
        1 => {
            let (v, alpha) = algs[0];
            if q.used_vars().iter().any(|w| *w != v) {
                return Err(PolyError::IncompatibleVariables);
            }
            let dense: Vec<Rational> = q
                .coeffs_in(v)
                .into_iter()
                .map(|c| c.constant_value().expect("univariate"))
                .collect();
            Ok(sign_univariate_at(&dense, alpha))
        }
        _ => {
            // several independent algebraic coordinates: delegate
            let pt: Vec<(Var, Scalar)> = point.to_vec();
            super::tower::sign_at_independent(&q, &pt)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    const X: Var = Var('x');
    const Y: Var = Var('y');

    fn sqrt2() -> AlgebraicNumber {
        // x^2 - 2 on (1, 2)
        let p = IPoly::new(vec![(-2).into(), 0.into(), 1.into()]);
        AlgebraicNumber::new(p, rat(1), rat(2))
    }

    #[test]
    fn sign_at_sqrt2_examples() {
        let vs = [X];
        let x = MultiPoly::variable(&vs, X);
        let two = MultiPoly::constant(&vs, rat(2));
        let three = MultiPoly::constant(&vs, rat(3));
        let p2 = x.pow(2).sub(&two);
        let p3 = x.pow(2).sub(&three);
        let a = Scalar::Alg(sqrt2());
        assert_eq!(sign_at(&p2, &[(X, a.clone())]).unwrap(), 0);
        assert_eq!(sign_at(&p3, &[(X, a.clone())]).unwrap(), -1);
        let q = MultiPoly::variable(&[X, Y], X).add(&MultiPoly::variable(&[X, Y], Y));
        let s = sign_at(&q, &[(X, Scalar::Rat(rat(1))), (Y, Scalar::Rat(rat(2)))]).unwrap();
        assert_eq!(s, 1);
    }

    #[test]
    fn isolate_with_multiplicities() {
        let vs = [X];
        let x = MultiPoly::variable(&vs, X);
        let one = MultiPoly::one(&vs);
        // (x-1)^2 (x+3)
        let p = x.sub(&one).pow(2).mul(&x.add(&one.scale(&rat(3))));
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].0.eq_exact(&Scalar::Rat(rat(-3))));
        assert_eq!(roots[0].1, 1);
        assert!(roots[1].0.eq_exact(&Scalar::Rat(rat(1))));
        assert_eq!(roots[1].1, 2);
    }

    #[test]
    fn zero_polynomial_signals() {
        let vs = [X];
        let z = MultiPoly::zero(&vs);
        assert!(matches!(isolate_real_roots(&z), Err(RootsError::IdenticallyZero)));
    }

    #[test]
    fn refinement_halves_and_keeps_root() {
        let mut a = sqrt2();
        for _ in 0..30 {
            let next = a.refine();
            assert!(next.width() <= a.width() * ratio(1, 2) + ratio(1, 1_000_000_000));
            // root containment: sign change persists
            assert!(next.defining().eval_sign(next.lo()) * next.defining().eval_sign(next.hi()) < 0);
            a = next;
        }
        let mid = midpoint(a.lo(), a.hi());
        let approx = rational_to_f64(&mid);
        assert!((approx - core::f64::consts::SQRT_2).abs() < 1e-8);
    }

    #[test]
    fn compare_algebraic_numbers() {
        let s2 = Scalar::Alg(sqrt2());
        // sqrt(2) as a root of the quartic (x^2-2)(x^2-3) on a wide interval
        let p = IPoly::new(vec![6.into(), 0.into(), (-5).into(), 0.into(), 1.into()]);
        let q = p.square_free();
        let locs = isolate_square_free(&q);
        assert_eq!(locs.len(), 4);
        let vals: Vec<Scalar> = locs.iter().map(|l| Scalar::from_root_loc(&q, l)).collect();
        // roots: -sqrt3 < -sqrt2 < sqrt2 < sqrt3
        assert!(vals[2].eq_exact(&s2));
        assert!(!vals[3].eq_exact(&s2));
        assert_eq!(vals[1].cmp_exact(&s2), Ordering::Less);
        assert_eq!(vals[3].cmp_exact(&s2), Ordering::Greater);
    }

    #[test]
    fn rational_between_scalars() {
        let s2 = Scalar::Alg(sqrt2());
        let r = Scalar::Rat(ratio(3, 2));
        let between = s2.cmp_exact(&r).min(Ordering::Greater);
        let _ = between;
        let m = r.rational_between(&Scalar::Rat(rat(2)));
        assert!(m > ratio(3, 2) && m < rat(2));
        let m2 = Scalar::Rat(rat(1)).rational_between(&s2);
        assert!(m2 > rat(1));
        assert_eq!(s2.cmp_exact(&Scalar::Rat(m2)), Ordering::Greater);
    }
}
