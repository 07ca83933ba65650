//! Sample points with stacked real algebraic coordinates.
//!
//! A CAD sample point assigns each variable either a rational value or
//! the unique root of a defining polynomial (in the earlier variables
//! plus its own) inside an isolating interval: a triangular chain. This
//! module provides the two primitives every CAD operation reduces to:
//! exact sign evaluation at such a point, and isolation of the real
//! roots of a polynomial over such a point. Signs are decided by exact
//! zero tests (Sturm counts over the prefix) followed by interval
//! refinement; nothing is ever decided numerically.

use super::interval::{cauchy_bound_from_intervals, QInterval};
use super::poly::{MultiPoly, PolyError, Var};
use super::{midpoint, rat, sign_of, Rational, Scalar, Sign};
use alloc::collections::BTreeMap;

use alloc::vec::Vec;
use core::cmp::Ordering;

/// One coordinate of a sample point.
#[derive(Clone, Debug)]
pub enum Coord {
    Rat(Rational),
    /// The unique distinct real root of `defining` (a polynomial in the
    /// prefix variables and this coordinate's variable) inside the open
    /// interval `(lo, hi)` over the sample prefix; endpoints are not
    /// roots. The root may have even multiplicity, so refinement goes
    /// through root counting rather than sign changes.
    Root { defining: MultiPoly, lo: Rational, hi: Rational },
}

impl Coord {
    pub fn enclosure(&self) -> QInterval {
        match self {
            Coord::Rat(r) => QInterval::point(r.clone()),
            Coord::Root { lo, hi, .. } => QInterval::new(lo.clone(), hi.clone()),
        }
    }

    pub fn approx_f64(&self) -> f64 {
        match self {
            Coord::Rat(r) => super::rational_to_f64(r),
            Coord::Root { lo, hi, .. } => {
                super::rational_to_f64(&midpoint(lo, hi))
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Coord::Rat(_))
    }

    pub fn from_scalar(v: Var, s: &Scalar) -> Coord {
        match s {
            Scalar::Rat(r) => Coord::Rat(r.clone()),
            Scalar::Alg(a) => {
                let dense: Vec<Rational> = a
                    .defining()
                    .coeffs
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect();
                Coord::Root {
                    defining: MultiPoly::from_dense_univariate(v, &dense),
                    lo: a.lo().clone(),
                    hi: a.hi().clone(),
                }
            }
        }
    }
}

/// A point with exact coordinates forming a triangular chain.
#[derive(Clone, Debug, Default)]
pub struct SamplePoint {
    vars: Vec<Var>,
    coords: Vec<Coord>,
}

impl SamplePoint {
    pub fn empty() -> Self {
        SamplePoint { vars: Vec::new(), coords: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn coord_of(&self, v: Var) -> Option<&Coord> {
        self.vars.iter().position(|w| *w == v).map(|i| &self.coords[i])
    }

    pub fn push(&mut self, v: Var, c: Coord) {
        debug_assert!(!self.vars.contains(&v));
        self.vars.push(v);
        self.coords.push(c);
    }

    pub fn with(&self, v: Var, c: Coord) -> SamplePoint {
        let mut out = self.clone();
        out.push(v, c);
        out
    }

    pub fn prefix(&self, k: usize) -> SamplePoint {
        SamplePoint { vars: self.vars[..k].to_vec(), coords: self.coords[..k].to_vec() }
    }

    pub fn truncate(&mut self, k: usize) {
        self.vars.truncate(k);
        self.coords.truncate(k);
    }

    /// All-rational fast path.
    pub fn all_rational(&self) -> Option<Vec<(Var, Rational)>> {
        let mut out = Vec::with_capacity(self.len());
        for (v, c) in self.vars.iter().zip(&self.coords) {
            match c {
                Coord::Rat(r) => out.push((*v, r.clone())),
                Coord::Root { .. } => return None,
            }
        }
        Some(out)
    }

    /// Exact sign of `p` at this point. Variables of `p` outside the
    /// sample are not allowed.
    pub fn sign_at(&self, p: &MultiPoly) -> Sign {
        let mut ctx = Ctx { point: self.clone() };
        ctx.sign(p)
    }

    pub fn is_zero_at(&self, p: &MultiPoly) -> bool {
        self.sign_at(p) == 0
    }

    /// Count the distinct real roots of `p(prefix, v)` in `(a, b)`, where
    /// `a`, `b` are non-roots.
    pub fn count_roots_in(&self, p: &MultiPoly, v: Var, a: &Rational, b: &Rational) -> usize {
        let mut ctx = Ctx { point: self.clone() };
        let chain = ctx.sturm_chain(p, v);
        ctx.count_with_chain(&chain, v, a, b)
    }

    /// Isolate all distinct real roots of `p` as a univariate in `v` over
    /// this sample point. `None` when `p` vanishes identically over the
    /// point.
    pub fn isolate_roots(&self, p: &MultiPoly, v: Var) -> Option<Vec<Coord>> {
        let mut ctx = Ctx { point: self.clone() };
        ctx.isolate(p, v)
    }

    /// Refine one coordinate in place (halving its enclosure); exact
    /// rational hits degrade the coordinate to `Coord::Rat`.
    pub fn refine_coord(&mut self, i: usize) {
        let prefix = self.prefix(i);
        let mut ctx = Ctx { point: prefix };
        if let Some(c) = ctx.refined(&self.coords[i], self.vars[i]) {
            self.coords[i] = c;
        }
    }

    /// Compare `p(prefix,.)`-root coordinates or mixed coordinates over
    /// this sample (used to order stacks during lifting). Both coords are
    /// understood as values of the variable `v` over this point.
    pub fn cmp_coords(&self, v: Var, a: &Coord, b: &Coord) -> Ordering {
        let mut ctx = Ctx { point: self.clone() };
        ctx.cmp_coords(v, a, b)
    }

    /// A rational strictly between two ordered coordinate values.
    pub fn rational_between_coords(&self, v: Var, a: &Coord, b: &Coord) -> Rational {
        debug_assert_eq!(self.cmp_coords(v, a, b), Ordering::Less);
        let mut ctx = Ctx { point: self.clone() };
        let mut a = a.clone();
        let mut b = b.clone();
        loop {
            let (ea, eb) = (a.enclosure(), b.enclosure());
            if ea.hi < eb.lo {
                return super::rational_between(&ea.hi, &eb.lo);
            }
            if let (Coord::Rat(x), Coord::Rat(y)) = (&a, &b) {
                return super::rational_between(x, y);
            }
            if let Some(c) = ctx.refined(&a, v) {
                a = c;
            }
            if let Some(c) = ctx.refined(&b, v) {
                b = c;
            }
        }
    }
}

/// Evaluation context; carries the sample point the recursion works over.
struct Ctx {
    point: SamplePoint,
}

impl Ctx {
    fn last_alg_index(&self, p: &MultiPoly) -> Option<usize> {
        let used = p.used_vars();
        let mut best: Option<usize> = None;
        for (i, (v, c)) in self.point.vars.iter().zip(&self.point.coords).enumerate() {
            if matches!(c, Coord::Root { .. }) && used.contains(v) {
                best = Some(i);
            }
        }
        best
    }

    fn rational_assignments(&self, p: &MultiPoly) -> Vec<(Var, Rational)> {
        let used = p.used_vars();
        self.point
            .vars
            .iter()
            .zip(&self.point.coords)
            .filter_map(|(v, c)| match c {
                Coord::Rat(r) if used.contains(v) => Some((*v, r.clone())),
                _ => None,
            })
            .collect()
    }

    /// Exact sign of `p` at the context point.
    fn sign(&mut self, p: &MultiPoly) -> Sign {
        let q = p.partial_eval(&self.rational_assignments(p));
        if let Some(c) = q.constant_value() {
            return sign_of(&c);
        }
        if self.is_zero(&q) {
            return 0;
        }
        // refine enclosures until the interval evaluation is definite
        loop {
            let enc = self.eval_enclosure(&q);
            if let Some(s) = enc.sign() {
                if s != 0 {
                    return s;
                }
            }
            for i in 0..self.point.len() {
                if matches!(self.point.coords[i], Coord::Root { .. }) {
                    self.point.refine_coord(i);
                }
            }
        }
    }

    /// Exact zero test, recursing along the chain.
    fn is_zero(&mut self, p: &MultiPoly) -> bool {
        let q = p.partial_eval(&self.rational_assignments(p));
        if let Some(c) = q.constant_value() {
            return c == rat(0);
        }
        let k = self.last_alg_index(&q).expect("non-constant after rational substitution");
        let v = self.point.vars[k];
        let Coord::Root { defining, lo, hi } = self.point.coords[k].clone() else { unreachable!() };
        // reduce modulo the defining polynomial: the pseudo-remainder
        // differs by a power of its leading coefficient, nonzero over the
        // prefix by the chain invariant
        let mut prefix_ctx = Ctx { point: self.point.prefix(k) };
        let t = prefix_ctx.trim(&defining, v);
        debug_assert!(t.degree_in(v) > 0);
        let r = if q.degree_in(v) >= t.degree_in(v) {
            super::poly::pseudo_rem(&q, &t, v)
        } else {
            q.clone()
        };
        if r.is_zero() {
            return true;
        }
        let r = prefix_ctx.trim(&r, v);
        if r.is_zero() {
            return true;
        }
        if r.degree_in(v) == 0 {
            // no dependence on v left; recurse over the prefix point
            return prefix_ctx.is_zero(&r);
        }
        // r(alpha) = 0  <=>  r and the defining polynomial share a root in
        // the isolating interval; compare distinct-root counts of r, t and
        // r*t over the interval (t contributes exactly one root there)
        let (lo, hi) = prefix_ctx.endpoints_avoiding(&r, &t, v, lo, hi);
        let chain_r = prefix_ctx.sturm_chain(&r, v);
        let count_r = prefix_ctx.count_with_chain(&chain_r, v, &lo, &hi);
        let rt = r.mul(&t);
        let chain_rt = prefix_ctx.sturm_chain(&rt, v);
        let count_rt = prefix_ctx.count_with_chain(&chain_rt, v, &lo, &hi);
        count_rt < count_r + 1
    }

    /// Shrink the isolating interval until neither `r` nor `t` vanishes at
    /// its endpoints (the contained root stays inside).
    fn endpoints_avoiding(
        &mut self,
        r: &MultiPoly,
        t: &MultiPoly,
        v: Var,
        mut lo: Rational,
        mut hi: Rational,
    ) -> (Rational, Rational) {
        let bad = |ctx: &mut Ctx, x: &Rational| {
            let rv = r.partial_eval(&[(v, x.clone())]);
            let tv = t.partial_eval(&[(v, x.clone())]);
            ctx.is_zero(&rv) || ctx.is_zero(&tv)
        };
        let chain_t = self.sturm_chain(t, v);
        while bad(self, &lo) || bad(self, &hi) {
            // bisect towards the root of t; the midpoint is non-root of t
            // or the root itself (then nudge)
            let mut m = midpoint(&lo, &hi);
            let tm = t.partial_eval(&[(v, m.clone())]);
            if self.is_zero(&tm) {
                m = &lo + (&hi - &lo) / rat(3);
                let tm2 = t.partial_eval(&[(v, m.clone())]);
                if self.is_zero(&tm2) {
                    m = &lo + (&hi - &lo) / rat(5);
                }
            }
            let left = self.count_with_chain(&chain_t, v, &lo, &m);
            if left == 1 {
                hi = m;
            } else {
                lo = m;
            }
        }
        (lo, hi)
    }

    /// Drop leading `v`-coefficients that vanish at the context point.
    fn trim(&mut self, p: &MultiPoly, v: Var) -> MultiPoly {
        let mut coeffs = p.coeffs_in(v);
        while let Some(top) = coeffs.last() {
            if top.is_zero() || self.is_zero(top) {
                coeffs.pop();
            } else {
                break;
            }
        }
        MultiPoly::from_coeffs_in(p.vars(), v, &coeffs)
    }

    /// Sturm chain of `p` in `v` over the context point: pseudo-remainders
    /// with sign corrections evaluated at the point, each entry trimmed to
    /// its true degree.
    fn sturm_chain(&mut self, p: &MultiPoly, v: Var) -> Vec<MultiPoly> {
        let p0 = self.trim(p, v);
        let mut chain = Vec::new();
        if p0.is_zero() {
            return chain;
        }
        chain.push(p0.clone());
        if p0.degree_in(v) == 0 {
            return chain;
        }
        let p1 = self.trim(&p0.derivative(v), v);
        if p1.is_zero() {
            return chain;
        }
        chain.push(p1);
        loop {
            let a = chain[chain.len() - 2].clone();
            let b = chain[chain.len() - 1].clone();
            if b.degree_in(v) == 0 {
                break;
            }
            let (r, lc, steps) = prem_tracked(&a, &b, v);
            if r.is_zero() {
                break;
            }
            let r = self.trim(&r, v);
            if r.is_zero() {
                break;
            }
            // true remainder = r / lc^steps; flip when the scale is negative
            let scale_sign = {
                let s = self.sign(&lc);
                debug_assert!(s != 0, "trimmed leading coefficient cannot vanish");
                if steps % 2 == 0 {
                    1
                } else {
                    s
                }
            };
            let next = if scale_sign > 0 { r.neg() } else { r };
            chain.push(next);
        }
        chain
    }

    fn variations_at(&mut self, chain: &[MultiPoly], v: Var, x: &Rational) -> usize {
        let mut last: Sign = 0;
        let mut count = 0;
        for s in chain {
            let sv = s.partial_eval(&[(v, x.clone())]);
            let sg = self.sign(&sv);
            if sg != 0 {
                if last != 0 && sg != last {
                    count += 1;
                }
                last = sg;
            }
        }
        count
    }

    /// Distinct roots in `(a, b]`; callers arrange non-root endpoints.
    fn count_with_chain(&mut self, chain: &[MultiPoly], v: Var, a: &Rational, b: &Rational) -> usize {
        if chain.is_empty() {
            return 0;
        }
        let va = self.variations_at(chain, v, a);
        let vb = self.variations_at(chain, v, b);
        va.saturating_sub(vb)
    }

    /// Interval enclosure of `p` over the point's coordinate boxes.
    fn eval_enclosure(&self, p: &MultiPoly) -> QInterval {
        let mut boxes: BTreeMap<Var, QInterval> = BTreeMap::new();
        for (v, c) in self.point.vars.iter().zip(&self.point.coords) {
            boxes.insert(*v, c.enclosure());
        }
        eval_poly_interval(p, &boxes)
    }

    /// One refinement step of a coordinate value of variable `v` over the
    /// context point (which is the prefix). Returns the updated coordinate,
    /// or `None` for rationals.
    fn refined(&mut self, c: &Coord, v: Var) -> Option<Coord> {
        let Coord::Root { defining, lo, hi } = c else { return None };
        let m = midpoint(lo, hi);
        let at = |x: &Rational| defining.partial_eval(&[(v, x.clone())]);
        if self.is_zero(&at(&m)) {
            // the interval holds exactly one distinct root, so this is it
            return Some(Coord::Rat(m));
        }
        let chain = self.sturm_chain(defining, v);
        let left = self.count_with_chain(&chain, v, lo, &m);
        if left == 1 {
            Some(Coord::Root { defining: defining.clone(), lo: lo.clone(), hi: m })
        } else {
            Some(Coord::Root { defining: defining.clone(), lo: m, hi: hi.clone() })
        }
    }

    fn cmp_coords(&mut self, v: Var, a: &Coord, b: &Coord) -> Ordering {
        if let (Coord::Rat(x), Coord::Rat(y)) = (a, b) {
            return x.cmp(y);
        }
        // exact equality test: b's defining vanishes at a and a lies
        // strictly inside b's interval (or symmetrically)
        let inside = |ctx: &mut Ctx, val: &Coord, of: &Coord| -> bool {
            let Coord::Root { defining, lo, hi } = of else { return false };
            match val {
                Coord::Rat(r) => {
                    if r <= lo || r >= hi {
                        return false;
                    }
                    let pv = defining.partial_eval(&[(v, r.clone())]);
                    ctx.is_zero(&pv)
                }
                Coord::Root { defining: da, lo: la, hi: ha } => {
                    // a inside (lo,hi)? order a vs the endpoints first
                    let a_gt_lo = ctx.cmp_coord_rational(v, da, la, ha, lo) == Ordering::Greater;
                    let a_lt_hi = ctx.cmp_coord_rational(v, da, la, ha, hi) == Ordering::Less;
                    if !(a_gt_lo && a_lt_hi) {
                        return false;
                    }
                    // defining_b(a) == 0?
                    let mut probe = ctx.point.clone();
                    probe.push(v, val.clone());
                    let mut inner = Ctx { point: probe };
                    inner.is_zero(defining)
                }
            }
        };
        match (a, b) {
            (Coord::Rat(_), Coord::Root { .. }) => {
                if inside(self, a, b) {
                    return Ordering::Equal;
                }
            }
            (Coord::Root { .. }, Coord::Rat(_)) => {
                if inside(self, b, a) {
                    return Ordering::Equal;
                }
            }
            (Coord::Root { .. }, Coord::Root { .. }) => {
                if inside(self, a, b) {
                    return Ordering::Equal;
                }
            }
            _ => unreachable!(),
        }
        // distinct: refine until enclosures separate; touching enclosure
        // bounds already order Root coords since their intervals are open
        let mut a = a.clone();
        let mut b = b.clone();
        loop {
            if let (Coord::Rat(x), Coord::Rat(y)) = (&a, &b) {
                return x.cmp(y);
            }
            let (ea, eb) = (a.enclosure(), b.enclosure());
            if ea.hi <= eb.lo {
                return Ordering::Less;
            }
            if eb.hi <= ea.lo {
                return Ordering::Greater;
            }
            if let Some(c) = self.refined(&a, v) {
                a = c;
            }
            if let Some(c) = self.refined(&b, v) {
                b = c;
            }
        }
    }

    /// Compare the root of `defining` in `(lo, hi)` against a rational.
    fn cmp_coord_rational(
        &mut self,
        v: Var,
        defining: &MultiPoly,
        lo: &Rational,
        hi: &Rational,
        x: &Rational,
    ) -> Ordering {
        if x <= lo {
            return Ordering::Greater;
        }
        if x >= hi {
            return Ordering::Less;
        }
        let px = defining.partial_eval(&[(v, x.clone())]);
        if self.is_zero(&px) {
            return Ordering::Equal;
        }
        // which side? count roots in (lo, x)
        let chain = self.sturm_chain(defining, v);
        if self.count_with_chain(&chain, v, lo, x) == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Isolate distinct real roots of `p(point, v)`.
    fn isolate(&mut self, p: &MultiPoly, v: Var) -> Option<Vec<Coord>> {
        let q = p.partial_eval(&self.rational_assignments(p));
        let t = self.trim(&q, v);
        if t.is_zero() {
            return None; // identically zero over the point
        }
        if t.degree_in(v) == 0 {
            return Some(Vec::new());
        }
        // root bound from coefficient enclosures; refine the prefix until
        // the leading coefficient's enclosure excludes zero
        let bound = loop {
            let coeffs = t.coeffs_in(v);
            let encs: Vec<QInterval> = coeffs.iter().map(|c| self.eval_enclosure(c)).collect();
            if let Some(b) = cauchy_bound_from_intervals(&encs) {
                break b;
            }
            for i in 0..self.point.len() {
                if matches!(self.point.coords[i], Coord::Root { .. }) {
                    self.point.refine_coord(i);
                }
            }
        };
        let chain = self.sturm_chain(&t, v);
        let neg = -bound.clone();
        let total = self.count_with_chain(&chain, v, &neg, &bound);
        let mut out = Vec::with_capacity(total);
        self.isolate_rec(&t, &chain, v, neg, bound, total, &mut out);
        Some(out)
    }

    fn isolate_rec(
        &mut self,
        t: &MultiPoly,
        chain: &[MultiPoly],
        v: Var,
        lo: Rational,
        hi: Rational,
        count: usize,
        out: &mut Vec<Coord>,
    ) {
        if count == 0 {
            return;
        }
        if count == 1 {
            out.push(Coord::Root { defining: t.clone(), lo, hi });
            return;
        }
        let m = midpoint(&lo, &hi);
        let at = |x: &Rational| t.partial_eval(&[(v, x.clone())]);
        if self.is_zero(&at(&m)) {
            // exact rational root at the cut: shrink a window around it
            // until it is the only root inside, with non-root edges
            let mut w = (&hi - &lo) / rat(4);
            let (mut ml, mut mr);
            loop {
                ml = &m - &w;
                mr = &m + &w;
                if !self.is_zero(&at(&ml))
                    && !self.is_zero(&at(&mr))
                    && self.count_with_chain(chain, v, &ml, &mr) == 1
                {
                    break;
                }
                w = &w / rat(2);
            }
            let left = self.count_with_chain(chain, v, &lo, &ml);
            let right = count - left - 1;
            self.isolate_rec(t, chain, v, lo, ml, left, out);
            out.push(Coord::Rat(m));
            self.isolate_rec(t, chain, v, mr, hi, right, out);
            return;
        }
        let left = self.count_with_chain(chain, v, &lo, &m);
        self.isolate_rec(t, chain, v, lo, m.clone(), left, out);
        self.isolate_rec(t, chain, v, m, hi, count - left, out);
    }
}

/// Tracked pseudo-remainder: returns `(r, lc(q), steps)` with
/// `lc(q)^steps * a = s*q + r`.
fn prem_tracked(a: &MultiPoly, q: &MultiPoly, v: Var) -> (MultiPoly, MultiPoly, usize) {
    let dq = q.degree_in(v);
    let lq = q.leading_coeff_in(v);
    let mut r = a.clone();
    let mut steps = 0usize;
    let mut dr = r.degree_in(v);
    while !r.is_zero() && dr >= dq {
        let lr = r.leading_coeff_in(v);
        let shift = MultiPoly::variable(r.vars(), v).pow(dr - dq);
        r = r.mul(&lq).sub(&lr.mul(&shift).mul(q));
        steps += 1;
        if r.is_zero() {
            break;
        }
        dr = r.degree_in(v);
    }
    (r, lq, steps)
}

/// Interval evaluation of a polynomial over per-variable boxes.
pub fn eval_poly_interval(p: &MultiPoly, boxes: &BTreeMap<Var, QInterval>) -> QInterval {
    let mut acc = QInterval::point(rat(0));
    for (exps, coeff) in p.terms() {
        let mut term = QInterval::point(coeff.clone());
        for (i, &k) in exps.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let v = p.vars()[i];
            let b = boxes
                .get(&v)
                .unwrap_or_else(|| panic!("no enclosure for variable {v}"));
            let mut pow = b.clone();
            for _ in 1..k {
                pow = pow.mul(b);
            }
            term = term.mul(&pow);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Sign at a point with several *independent* algebraic coordinates (each
/// defined by a univariate polynomial over the rationals).
pub fn sign_at_independent(p: &MultiPoly, point: &[(Var, Scalar)]) -> Result<Sign, PolyError> {
    let mut sp = SamplePoint::empty();
    for (v, s) in point {
        sp.push(*v, Coord::from_scalar(*v, s));
    }
    Ok(sp.sign_at(p))
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    const X: Var = Var('x');
    const Y: Var = Var('y');

    fn xy() -> [Var; 2] {
        [X, Y]
    }

    /// alpha = sqrt(2) as a chain coordinate.
    fn sqrt2_point() -> SamplePoint {
        let vs = [X];
        let x = MultiPoly::variable(&vs, X);
        let d = x.pow(2).sub(&MultiPoly::constant(&vs, rat(2)));
        let mut sp = SamplePoint::empty();
        sp.push(X, Coord::Root { defining: d, lo: rat(1), hi: rat(2) });
        sp
    }

    #[test]
    fn sign_at_single_algebraic() {
        let sp = sqrt2_point();
        let vs = [X];
        let x = MultiPoly::variable(&vs, X);
        let p2 = x.pow(2).sub(&MultiPoly::constant(&vs, rat(2)));
        let p3 = x.pow(2).sub(&MultiPoly::constant(&vs, rat(3)));
        assert_eq!(sp.sign_at(&p2), 0);
        assert_eq!(sp.sign_at(&p3), -1);
        assert_eq!(sp.sign_at(&x), 1);
    }

    #[test]
    fn stacked_chain_sign() {
        // x = sqrt(2); y = root of y^2 - x in (1, 3/2)  => y = 2^(1/4)
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let mut sp = sqrt2_point();
        let d2 = y.pow(2).sub(&x);
        sp.push(Y, Coord::Root { defining: d2, lo: rat(1), hi: ratio(3, 2) });
        // y^4 - 2 = 0 at the point
        let p = y.pow(4).sub(&MultiPoly::constant(&vs, rat(2)));
        assert_eq!(sp.sign_at(&p), 0);
        // y^4 - 3 < 0
        let q = y.pow(4).sub(&MultiPoly::constant(&vs, rat(3)));
        assert_eq!(sp.sign_at(&q), -1);
        // x*y - 1 > 0
        let r = x.mul(&y).sub(&MultiPoly::one(&vs));
        assert_eq!(sp.sign_at(&r), 1);
    }

    #[test]
    fn isolate_over_algebraic_prefix() {
        // over x = sqrt(2), isolate roots of y^2 - x: +-2^(1/4)
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let sp = sqrt2_point();
        let p = y.pow(2).sub(&x);
        let roots = sp.isolate_roots(&p, Y).unwrap();
        assert_eq!(roots.len(), 2);
        let a0 = roots[0].approx_f64();
        let a1 = roots[1].approx_f64();
        let expect = 2f64.powf(0.25);
        assert!((a0 + expect).abs() < 0.5, "a0={a0}");
        assert!((a1 - expect).abs() < 0.5, "a1={a1}");
        // no real roots of y^2 + x over sqrt2
        let q = y.pow(2).add(&x);
        assert_eq!(sp.isolate_roots(&q, Y).unwrap().len(), 0);
        // identically zero detection
        let z = MultiPoly::zero(&vs);
        assert!(sp.isolate_roots(&z, Y).is_none());
    }

    #[test]
    fn exact_rational_roots_over_prefix() {
        // over x = sqrt(2): (y - 1) * (y^2 - x) has rational root 1
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let sp = sqrt2_point();
        let p = y.sub(&MultiPoly::one(&vs)).mul(&y.pow(2).sub(&x));
        let roots = sp.isolate_roots(&p, Y).unwrap();
        assert_eq!(roots.len(), 3);
        // middle root is 1 exactly? order: -2^(1/4) < 1 < 2^(1/4)
        let approx: Vec<f64> = roots.iter().map(|c| c.approx_f64()).collect();
        assert!(approx.windows(2).all(|w| w[0] < w[1]));
        let mid = &roots[1];
        match mid {
            Coord::Rat(r) => assert_eq!(r, &rat(1)),
            Coord::Root { lo, hi, .. } => {
                assert!(lo < &rat(1) && &rat(1) < hi);
            }
        }
    }

    #[test]
    fn count_roots_with_multiplicity_collapse() {
        // (y - x)^2 * (y + x) over x = sqrt2: distinct roots +-sqrt2
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let sp = sqrt2_point();
        let p = y.sub(&x).pow(2).mul(&y.add(&x));
        assert_eq!(sp.count_roots_in(&p, Y, &rat(-10), &rat(10)), 2);
        let roots = sp.isolate_roots(&p, Y).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn independent_algebraic_coordinates() {
        // x = sqrt2, y = sqrt3 (independent): x^2*y^2 - 6 = 0
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let dx = x.pow(2).sub(&MultiPoly::constant(&vs, rat(2)));
        let dy = y.pow(2).sub(&MultiPoly::constant(&vs, rat(3)));
        let mut sp = SamplePoint::empty();
        sp.push(X, Coord::Root { defining: dx, lo: rat(1), hi: rat(2) });
        sp.push(Y, Coord::Root { defining: dy, lo: rat(1), hi: rat(2) });
        let p = x.pow(2).mul(&y.pow(2)).sub(&MultiPoly::constant(&vs, rat(6)));
        assert_eq!(sp.sign_at(&p), 0);
        let q = x.mul(&y).sub(&MultiPoly::constant(&vs, rat(2))); // sqrt6 > 2
        assert_eq!(sp.sign_at(&q), 1);
    }

    #[test]
    fn coordinate_comparison_and_separation() {
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let sp = SamplePoint::empty();
        // roots of (x^2-2)(x-1): -sqrt2 < 1 < sqrt2
        let p = x.pow(2).sub(&MultiPoly::constant(&vs, rat(2))).mul(&x.sub(&MultiPoly::one(&vs)));
        let roots = sp.isolate_roots(&p, X).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(sp.cmp_coords(X, &roots[0], &roots[1]), Ordering::Less);
        assert_eq!(sp.cmp_coords(X, &roots[2], &roots[1]), Ordering::Greater);
        let m = sp.rational_between_coords(X, &roots[1], &roots[2]);
        assert!(m > rat(1));
        // and sqrt2 equals sqrt2 from a different defining polynomial
        let q = x.pow(2).sub(&MultiPoly::constant(&vs, rat(2)));
        let r2 = sp.isolate_roots(&q, X).unwrap();
        assert_eq!(sp.cmp_coords(X, &roots[2], &r2[1]), Ordering::Equal);
    }
}
