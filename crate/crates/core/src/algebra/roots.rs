//! Real root isolation for univariate polynomials.
//!
//! The primary isolator is Descartes/bisection on square-free parts; a
//! Sturm-sequence route is kept alongside as an independent method (the
//! oracle module and several tests count roots through it).

use super::{midpoint, rat, sign_of, Rational, Sign};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootsError {
    /// The zero polynomial has no isolated roots; callers handle the
    /// degeneracy themselves.
    IdenticallyZero,
}

/// Dense univariate polynomial with integer coefficients, degree 0 first.
/// Kept primitive (content 1) with positive leading coefficient where the
/// constructors say so.
#[derive(Clone, PartialEq, Eq)]
pub struct IPoly {
    pub coeffs: Vec<BigInt>,
}

impl core::fmt::Debug for IPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IPoly{:?}", self.coeffs)
    }
}

impl IPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IPoly { coeffs }
    }

    pub fn zero() -> Self {
        IPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn from_rational_coeffs(coeffs: &[Rational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        IPoly::new(ints).primitive()
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Normalize sign so the leading coefficient is positive.
    pub fn monic_sign(&self) -> Self {
        if self.coeffs.last().map(|c| c.is_negative()).unwrap_or(false) {
            IPoly::new(self.coeffs.iter().map(|c| -c).collect())
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_sign(&self, x: &Rational) -> Sign {
        sign_of(&self.eval(x))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IPoly::new(coeffs)
    }

    pub fn neg_x(&self) -> Self {
        // p(-x)
        IPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    fn mul(&self, other: &IPoly) -> IPoly {
        if self.is_zero() || other.is_zero() {
            return IPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IPoly::new(out)
    }

    fn sub(&self, other: &IPoly) -> IPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            out.push(a - b);
        }
        IPoly::new(out)
    }

    fn scale(&self, c: &BigInt) -> IPoly {
        IPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    fn shift_up(&self, k: usize) -> IPoly {
        // multiply by x^k
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IPoly::new(out)
    }

    /// Pseudo-remainder; the multiple of the true remainder obtained by
    /// fraction-free division.
    fn pseudo_rem(&self, d: &IPoly) -> IPoly {
        let dd = d.degree();
        let ld = d.coeffs.last().unwrap().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let lr = r.coeffs.last().unwrap().clone();
            let k = r.degree() - dd;
            r = r.scale(&ld).sub(&d.shift_up(k).scale(&lr));
        }
        r
    }

    /// Exact division. Returns the true integer quotient, or `None` when
    /// the division is not exact over the integers.
    pub fn div_exact(&self, d: &IPoly) -> Option<IPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IPoly::zero());
        }
        let mut rem: Vec<Rational> = self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect();
        let dn = d.degree();
        let ld = Rational::from_integer(d.coeffs[dn].clone());
        if rem.len() < d.coeffs.len() {
            return None;
        }
        let mut q = vec![rat(0); rem.len() - dn];
        for i in (dn..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            let f = &c / &ld;
            q[i - dn] = f.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = i - dn + j;
                rem[idx] = &rem[idx] - &f * Rational::from_integer(dc.clone());
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(IPoly::new(out))
    }

    pub fn gcd(a: &IPoly, b: &IPoly) -> IPoly {
        let mut p = a.primitive();
        let mut q = b.primitive();
        if p.is_zero() {
            return q.monic_sign();
        }
        if q.is_zero() {
            return p.monic_sign();
        }
        if p.degree() < q.degree() {
            core::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() && q.degree() > 0 {
            let r = p.pseudo_rem(&q).primitive();
            p = q;
            q = r;
        }
        if q.is_zero() {
            p.monic_sign()
        } else {
            IPoly::new(vec![BigInt::one()])
        }
    }

    /// Square-free part.
    pub fn square_free(&self) -> IPoly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = IPoly::gcd(self, &self.derivative());
        if g.degree() == 0 {
            return self.monic_sign().primitive();
        }
        self.div_exact(&g).expect("gcd divides").primitive().monic_sign()
    }

    /// Yun square-free decomposition: returns `(gi, i)` with
    /// `p = c * prod gi^i`, each `gi` square-free and pairwise coprime.
    pub fn yun(&self) -> Vec<(IPoly, u32)> {
        let p = self.primitive().monic_sign();
        if p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a0 = IPoly::gcd(&p, &dp);
        if a0.degree() == 0 {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut b = p.div_exact(&a0).unwrap();
        let mut c = dp.div_exact(&a0).unwrap();
        let mut i = 1u32;
        loop {
            let d = c.sub(&b.derivative());
            if b.degree() == 0 {
                break;
            }
            let g = IPoly::gcd(&b, &d);
            if g.degree() > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g).unwrap();
            c = d.div_exact(&g).unwrap();
            i += 1;
        }
        out
    }

    /// Cauchy root bound: every real root lies in `(-B, B)`.
    pub fn cauchy_bound(&self) -> Rational {
        if self.is_zero() || self.degree() == 0 {
            return rat(1);
        }
        let lead = self.coeffs.last().unwrap().magnitude().clone();
        let mut max = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let m = BigInt::from(c.magnitude().clone());
            if m > max {
                max = m;
            }
        }
        Rational::new(max, BigInt::from(lead)) + rat(1)
    }
}

/// Location of one real root of a square-free polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RootLoc {
    Exact(Rational),
    /// Open interval containing exactly one (simple) root; the endpoints
    /// are not roots and the polynomial changes sign across it.
    Interval(Rational, Rational),
}

impl RootLoc {
    pub fn approx(&self) -> Rational {
        match self {
            RootLoc::Exact(r) => r.clone(),
            RootLoc::Interval(a, b) => midpoint(a, b),
        }
    }
}

// --- Descartes / bisection isolation -------------------------------------

/// Sign variations in a coefficient list.
fn variations(coeffs: &[BigInt]) -> usize {
    let mut last: Sign = 0;
    let mut v = 0;
    for c in coeffs {
        let s = if c.is_zero() {
            0
        } else if c.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Taylor shift by one: coefficients of p(x+1).
fn shift1(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut c = coeffs.to_vec();
    let n = c.len();
    // classic in-place Pascal accumulation
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let add = c[j + 1].clone();
            c[j] += add;
        }
        let _ = i;
    }
    c
}

/// Descartes bound for the root count of p in (0,1): variations of
/// (x+1)^n p(1/(x+1)).
fn descartes_01(coeffs: &[BigInt]) -> usize {
    let mut rev: Vec<BigInt> = coeffs.iter().rev().cloned().collect();
    rev = shift1(&rev);
    variations(&rev)
}

/// p(x/2) scaled to integers: coefficients c_i * 2^(n-i).
fn half_left(coeffs: &[BigInt]) -> Vec<BigInt> {
    let n = coeffs.len();
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c << (n - 1 - i))
        .collect()
}

/// p((x+1)/2) scaled to integers.
fn half_right(coeffs: &[BigInt]) -> Vec<BigInt> {
    shift1(&half_left(coeffs))
}

/// Isolate the roots of a square-free integer polynomial inside `(0,1)`
/// in the transformed coordinates, mapping back through `map`.
fn isolate_01(
    coeffs: &[BigInt],
    lo: Rational,
    hi: Rational,
    out: &mut Vec<RootLoc>,
) {
    let v = descartes_01(coeffs);
    if v == 0 {
        return;
    }
    if v == 1 {
        out.push(RootLoc::Interval(lo, hi));
        return;
    }
    let mid = midpoint(&lo, &hi);
    let left = half_left(coeffs);
    let right = half_right(coeffs);
    // p(1/2) is the constant term of the right half (up to scaling)
    let mid_is_root = right.first().map(|c| c.is_zero()).unwrap_or(false);
    isolate_01(&left, lo, mid.clone(), out);
    if mid_is_root {
        out.push(RootLoc::Exact(mid.clone()));
    }
    isolate_01(&right, mid, hi, out);
}

/// Isolate all real roots of a square-free polynomial. Roots are returned
/// in increasing order; intervals are open, with non-root endpoints and a
/// sign change of the polynomial across each interval.
pub fn isolate_square_free(p: &IPoly) -> Vec<RootLoc> {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return Vec::new();
    }
    let bound = p.cauchy_bound();
    let mut out = Vec::new();
    // a zero root is stripped so interval endpoints stay non-root and the
    // remaining roots split cleanly into the two half-ranges around it
    let mut k = 0;
    while k < p.coeffs.len() && p.coeffs[k].is_zero() {
        k += 1;
    }
    let zero_root = k > 0;
    let q = IPoly::new(p.coeffs[k..].to_vec());
    if q.degree() > 0 {
        if zero_root {
            let neg = map_to_01(&q, &(-bound.clone()), &rat(0));
            isolate_01(&neg, -bound.clone(), rat(0), &mut out);
            out.push(RootLoc::Exact(rat(0)));
            let pos = map_to_01(&q, &rat(0), &bound);
            isolate_01(&pos, rat(0), bound.clone(), &mut out);
        } else {
            let transformed = map_to_01(&q, &(-bound.clone()), &bound);
            isolate_01(&transformed, -bound.clone(), bound.clone(), &mut out);
        }
    } else if zero_root {
        out.push(RootLoc::Exact(rat(0)));
    }
    // bisection emits in ascending order; repair endpoints that landed on
    // roots, then make intervals pairwise disjoint
    repair_endpoints(&q, &mut out);
    enforce_disjoint(&q, &mut out);
    out
}

fn map_to_01(p: &IPoly, lo: &Rational, hi: &Rational) -> Vec<BigInt> {
    // q(x) = p(lo + (hi-lo) x), cleared to integer coefficients.
    let w = hi - lo;
    let mut coeffs: Vec<Rational> = p.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect();
    // substitute x -> lo + w*t by Horner in t
    let mut acc: Vec<Rational> = vec![rat(0); 1];
    for c in coeffs.drain(..).rev() {
        // acc = acc * (lo + w t) + c
        let mut next = vec![rat(0); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] = &next[i] + a * lo;
            next[i + 1] = &next[i + 1] + a * &w;
        }
        next[0] = &next[0] + c;
        acc = next;
        while acc.last().map(|c| c.is_zero()).unwrap_or(false) {
            acc.pop();
        }
    }
    IPoly::from_rational_coeffs(&acc).coeffs
}

/// Repair intervals whose endpoints landed exactly on roots. Such an
/// endpoint can only be a *different* root of `p` (exact hits at the
/// contained root were reported as `Exact` during bisection), so a shrink
/// must keep the contained root, which is detected by the sign change.
fn repair_endpoints(p: &IPoly, locs: &mut Vec<RootLoc>) {
    for loc in locs.iter_mut() {
        loop {
            let RootLoc::Interval(lo, hi) = loc else { break };
            let slo = p.eval_sign(lo);
            let shi = p.eval_sign(hi);
            if slo != 0 && shi != 0 {
                debug_assert!(slo * shi < 0, "isolating interval must change sign");
                break;
            }
            let w = &*hi - &*lo;
            if shi == 0 {
                // move hi inward past nothing but non-roots
                let mut step = &w / rat(4);
                loop {
                    let cand = &*hi - &step;
                    let s = p.eval_sign(&cand);
                    if s == 0 {
                        // landed on the contained root exactly
                        *loc = RootLoc::Exact(cand);
                        break;
                    }
                    if slo != 0 && s != slo {
                        *hi = cand;
                        break;
                    }
                    if slo == 0 {
                        // both endpoints roots: keep shrinking hi; lo is
                        // handled on the next pass
                        *hi = cand;
                        break;
                    }
                    step = step / rat(2);
                }
            } else if slo == 0 {
                let mut step = &w / rat(4);
                loop {
                    let cand = &*lo + &step;
                    let s = p.eval_sign(&cand);
                    if s == 0 {
                        *loc = RootLoc::Exact(cand);
                        break;
                    }
                    if s != shi {
                        *lo = cand;
                        break;
                    }
                    step = step / rat(2);
                }
            }
        }
    }
}

fn enforce_disjoint(p: &IPoly, locs: &mut [RootLoc]) {
    for i in 1..locs.len() {
        loop {
            let prev_hi = match &locs[i - 1] {
                RootLoc::Exact(r) => r.clone(),
                RootLoc::Interval(_, h) => h.clone(),
            };
            let cur_lo = match &locs[i] {
                RootLoc::Exact(r) => r.clone(),
                RootLoc::Interval(l, _) => l.clone(),
            };
            if prev_hi <= cur_lo {
                break;
            }
            let mut progressed = false;
            if let RootLoc::Interval(lo, hi) = &mut locs[i - 1] {
                bisect_once(p, lo, hi);
                progressed = true;
            }
            if let RootLoc::Interval(lo, hi) = &mut locs[i] {
                bisect_once(p, lo, hi);
                progressed = true;
            }
            assert!(progressed, "two exact roots cannot overlap");
        }
    }
}

/// One bisection step that keeps the sign change and non-root endpoints.
pub fn bisect_once(p: &IPoly, lo: &mut Rational, hi: &mut Rational) {
    let mut mid = midpoint(lo, hi);
    if p.eval_sign(&mid) == 0 {
        // nudge the cut; a square-free p has one root here, a third point works
        mid = lo.clone() + (&*hi - &*lo) / rat(3);
        if p.eval_sign(&mid) == 0 {
            mid = lo.clone() + (&*hi - &*lo) / rat(5);
        }
    }
    debug_assert!(p.eval_sign(&mid) != 0);
    if p.eval_sign(lo) * p.eval_sign(&mid) < 0 {
        *hi = mid;
    } else {
        *lo = mid;
    }
}

// --- Sturm sequences (independent root-counting route) --------------------

/// True rational remainder of `a` by `b`, recleared to a primitive integer
/// polynomial by a positive factor (sign preserved).
fn rational_rem(a: &IPoly, b: &IPoly) -> IPoly {
    let mut rem: Vec<Rational> = a.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect();
    let dn = b.degree();
    let ld = Rational::from_integer(b.coeffs[dn].clone());
    for i in (dn..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        let f = &c / &ld;
        for (j, dc) in b.coeffs.iter().enumerate() {
            let idx = i - dn + j;
            rem[idx] = &rem[idx] - &f * Rational::from_integer(dc.clone());
        }
        rem[i] = rat(0);
    }
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    // clear denominators by a positive factor only
    let mut den = BigInt::one();
    for c in &rem {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = rem.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    IPoly::new(ints).primitive()
}

/// Sturm chain of p; remainders are computed in rationals so signs are
/// exact, then recleared by positive factors.
pub fn sturm_chain(p: &IPoly) -> Vec<IPoly> {
    let mut chain = Vec::new();
    let p0 = p.primitive();
    if p0.is_zero() {
        return chain;
    }
    chain.push(p0.clone());
    let p1 = p0.derivative();
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let a = &chain[n - 2];
        let b = &chain[n - 1];
        if b.degree() == 0 {
            break;
        }
        let r = rational_rem(a, b);
        if r.is_zero() {
            break;
        }
        chain.push(IPoly::new(r.coeffs.iter().map(|c| -c).collect()));
    }
    chain
}

fn sturm_variations(chain: &[IPoly], x: &Rational) -> usize {
    let signs: Vec<Sign> = chain.iter().map(|p| p.eval_sign(x)).collect();
    let mut last = 0;
    let mut v = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Number of distinct real roots of p in the half-open interval `(lo, hi]`.
/// Requires `p(lo) != 0`.
pub fn sturm_count(p: &IPoly, lo: &Rational, hi: &Rational) -> usize {
    let chain = sturm_chain(p);
    if chain.is_empty() {
        return 0;
    }
    sturm_variations(&chain, lo) - sturm_variations(&chain, hi)
}

/// Total number of distinct real roots (Sturm over a Cauchy bound).
pub fn sturm_total_roots(p: &IPoly) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let b = p.cauchy_bound();
    sturm_count(p, &(-b.clone()), &b)
}

// The exponent convention in pseudo_rem does not force an even power, so
// sturm_chain corrects the sign by the parity of the division steps.

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;
    use rand::{Rng, SeedableRng};

    fn ipoly(coeffs: &[i64]) -> IPoly {
        IPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn cubic_roots() {
        // x^3 - x: roots -1, 0, 1
        let p = ipoly(&[0, -1, 0, 1]);
        let roots = isolate_square_free(&p);
        assert_eq!(roots.len(), 3);
        let approx: Vec<f64> = roots
            .iter()
            .map(|r| super::super::rational_to_f64(&r.approx()))
            .collect();
        assert!((approx[0] + 1.0).abs() < 0.51);
        assert!((approx[1]).abs() < 0.51);
        assert!((approx[2] - 1.0).abs() < 0.51);
    }

    #[test]
    fn no_real_roots() {
        let p = ipoly(&[1, 0, 1]); // x^2 + 1
        assert!(isolate_square_free(&p).is_empty());
        assert_eq!(sturm_total_roots(&p), 0);
    }

    #[test]
    fn yun_reports_multiplicities() {
        // (x-1)^2 (x+3)
        let p = ipoly(&[-1, 1]).mul(&ipoly(&[-1, 1])).mul(&ipoly(&[3, 1]));
        let parts = p.yun();
        assert_eq!(parts.len(), 2);
        let (g1, m1) = &parts[0];
        let (g2, m2) = &parts[1];
        assert_eq!(*m1, 1);
        assert_eq!(g1, &ipoly(&[3, 1]));
        assert_eq!(*m2, 2);
        assert_eq!(g2, &ipoly(&[-1, 1]));
    }

    #[test]
    fn descartes_matches_sturm_on_random_polys() {
        // Spec invariant: for random p of degree <= 8 with small
        // coefficients, isolated-root count equals the Sturm count.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<BigInt> = (0..=deg)
                .map(|_| BigInt::from(rng.gen_range(-32i64..=32)))
                .collect();
            if coeffs.iter().all(|c| c.is_zero()) {
                coeffs[deg] = BigInt::one();
            }
            let p = IPoly::new(coeffs);
            if p.is_zero() || p.degree() == 0 {
                continue;
            }
            let sf = p.square_free();
            let descartes = isolate_square_free(&sf).len();
            let sturm = sturm_total_roots(&sf);
            assert_eq!(descartes, sturm, "mismatch for {:?}", p);
        }
    }

    #[test]
    fn exact_roots_found_at_dyadic_points() {
        // (2x-1)(x-2) has roots 1/2 and 2
        let p = ipoly(&[2, -5, 2]);
        let roots = isolate_square_free(&p);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            match r {
                RootLoc::Exact(v) => assert!(v == &ratio(1, 2) || v == &rat(2)),
                RootLoc::Interval(lo, hi) => {
                    assert!(p.eval_sign(lo) * p.eval_sign(hi) < 0);
                }
            }
        }
    }

    #[test]
    fn intervals_are_disjoint_and_sign_changing() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let deg = rng.gen_range(2..=7);
            let coeffs: Vec<BigInt> = (0..=deg)
                .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                .collect();
            let p = IPoly::new(coeffs);
            if p.is_zero() || p.degree() < 1 {
                continue;
            }
            let sf = p.square_free();
            let roots = isolate_square_free(&sf);
            for w in roots.windows(2) {
                let hi0 = match &w[0] {
                    RootLoc::Exact(r) => r.clone(),
                    RootLoc::Interval(_, h) => h.clone(),
                };
                let lo1 = match &w[1] {
                    RootLoc::Exact(r) => r.clone(),
                    RootLoc::Interval(l, _) => l.clone(),
                };
                assert!(hi0 <= lo1);
            }
        }
    }
}
