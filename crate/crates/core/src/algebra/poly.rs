//! Sparse multivariate polynomials with rational coefficients.

use super::{rat, sign_of, Rational, Sign};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed, Zero};

/// A polynomial variable, named by a single character.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub char);

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// Two polynomials whose variable orders cannot be merged.
    IncompatibleVariables,
    /// Substitution of an algebraic number into more than one variable.
    MultipleAlgebraicSubstitution,
    /// Operation requires a nonzero polynomial.
    ZeroPolynomial,
    /// Operation requires positive degree in the eliminated variable.
    DegreeTooLow,
}

/// Sparse multivariate polynomial over an ordered variable list.
///
/// Invariants: no zero coefficients are stored, every exponent tuple has
/// the length of `vars`, and trailing unused variables are permitted (a
/// polynomial may mention fewer variables than it carries).
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[Var]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[Var], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[Var]) -> Self {
        Self::constant(vars, rat(1))
    }

    /// The polynomial `v` inside the given variable list.
    pub fn variable(vars: &[Var], v: Var) -> Self {
        let idx = vars.iter().position(|w| *w == v).expect("variable not in list");
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exps, rat(1));
        p
    }

    pub fn from_terms(vars: &[Var], terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(rat(0));
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn var_index(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|w| *w == v)
    }

    /// Degree in one variable; zero polynomial reports 0.
    pub fn degree_in(&self, v: Var) -> u32 {
        let Some(i) = self.var_index(v) else { return 0 };
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<Var> {
        let mut used = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            if self.terms.keys().any(|e| e[i] > 0) {
                used.push(*v);
            }
        }
        used
    }

    /// Reinterpret over a wider variable list. Every used variable must
    /// occur in `target`; the relative order of shared variables must be
    /// preserved, otherwise the orders conflict.
    pub fn embed(&self, target: &[Var]) -> Result<MultiPoly, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        let mut last: Option<usize> = None;
        for (i, v) in self.vars.iter().enumerate() {
            match target.iter().position(|w| w == v) {
                Some(j) => {
                    if let Some(prev) = last {
                        if j <= prev {
                            return Err(PolyError::IncompatibleVariables);
                        }
                    }
                    last = Some(j);
                    map.push(Some(j));
                }
                None => {
                    if self.terms.keys().any(|e| e[i] > 0) {
                        return Err(PolyError::IncompatibleVariables);
                    }
                    map.push(None);
                }
            }
        }
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, m) in map.iter().enumerate() {
                if e[i] > 0 {
                    exps[m.expect("unused variable cannot carry exponent")] = e[i];
                }
            }
            out.add_term(exps, c.clone());
        }
        Ok(out)
    }

    /// Merge the variable lists of two polynomials, preserving both
    /// relative orders.
    pub fn unify(a: &MultiPoly, b: &MultiPoly) -> Result<(MultiPoly, MultiPoly), PolyError> {
        if a.vars == b.vars {
            return Ok((a.clone(), b.clone()));
        }
        let mut merged: Vec<Var> = a.vars.clone();
        for v in &b.vars {
            if !merged.contains(v) {
                merged.push(*v);
            }
        }
        Ok((a.embed(&merged)?, b.embed(&merged)?))
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = Self::unify(self, other).expect("incompatible variable orders");
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = Self::unify(self, other).expect("incompatible variable orders");
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let Some(i) = self.var_index(v) else { return MultiPoly::zero(&self.vars) };
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] -= 1;
            out.add_term(exps, c * rat(i64::from(e[i])));
        }
        out
    }

    /// Substitute rationals for a subset of variables.
    pub fn partial_eval(&self, subst: &[(Var, Rational)]) -> MultiPoly {
        let mut out = self.clone();
        for (v, val) in subst {
            let Some(i) = out.var_index(*v) else { continue };
            let mut next = MultiPoly::zero(&out.vars);
            for (e, c) in &out.terms {
                let mut exps = e.clone();
                let k = exps[i];
                exps[i] = 0;
                let mut coeff = c.clone();
                if k > 0 {
                    let mut p = val.clone();
                    let mut power = Rational::one();
                    let mut n = k;
                    while n > 0 {
                        if n & 1 == 1 {
                            power = &power * &p;
                        }
                        n >>= 1;
                        if n > 0 {
                            p = &p * &p;
                        }
                    }
                    coeff = coeff * power;
                }
                next.add_term(exps, coeff);
            }
            out = next;
        }
        out
    }

    /// Evaluate at a full rational point (one value per carried variable).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = rat(0);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * &point[i];
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval_sign(&self, point: &[Rational]) -> Sign {
        sign_of(&self.eval(point))
    }

    /// Substitute a polynomial for a variable.
    pub fn compose(&self, v: Var, replacement: &MultiPoly) -> MultiPoly {
        let (a, rep) = Self::unify(self, replacement).expect("incompatible variable orders");
        let Some(i) = a.var_index(v) else { return a };
        // group by exponent of v, then Horner
        let deg = a.degree_in(v);
        let mut buckets: Vec<MultiPoly> = vec![MultiPoly::zero(&a.vars); deg as usize + 1];
        for (e, c) in &a.terms {
            let mut exps = e.clone();
            let k = exps[i] as usize;
            exps[i] = 0;
            buckets[k].add_term(exps, c.clone());
        }
        let mut acc = MultiPoly::zero(&a.vars);
        for b in buckets.iter().rev() {
            acc = acc.mul(&rep).add(b);
        }
        acc
    }

    /// Coefficients of the polynomial viewed as univariate in `v`, from
    /// degree 0 upward, each a polynomial in the remaining variables.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(v) else { return vec![self.clone()] };
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            let k = exps[i] as usize;
            exps[i] = 0;
            out[k].add_term(exps, c.clone());
        }
        out
    }

    /// Rebuild from `v`-coefficients.
    pub fn from_coeffs_in(vars: &[Var], v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let vp = MultiPoly::variable(vars, v);
        let mut acc = MultiPoly::zero(vars);
        for c in coeffs.iter().rev() {
            let c = c.embed(vars).expect("coefficient uses variable outside list");
            acc = acc.mul(&vp).add(&c);
        }
        acc
    }

    /// Leading coefficient in `v` as a polynomial in the other variables.
    pub fn leading_coeff_in(&self, v: Var) -> MultiPoly {
        let cs = self.coeffs_in(v);
        cs.last().cloned().unwrap_or_else(|| MultiPoly::zero(&self.vars))
    }

    /// Dense univariate coefficient list (degree 0 upward). Panics if
    /// another variable occurs.
    pub fn dense_univariate(&self, v: Var) -> Vec<Rational> {
        let cs = self.coeffs_in(v);
        cs.into_iter()
            .map(|c| c.constant_value().expect("polynomial is not univariate"))
            .collect()
    }

    /// Build a univariate polynomial from dense coefficients.
    pub fn from_dense_univariate(v: Var, coeffs: &[Rational]) -> MultiPoly {
        let vars = [v];
        let mut p = MultiPoly::zero(&vars);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p
    }

    /// Exact division; `None` when the division is not exact.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (mut r, d) = Self::unify(self, d).expect("incompatible variable orders");
        if d.is_zero() {
            return None;
        }
        let vars = r.vars.clone();
        let (de, dc) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut q = MultiPoly::zero(&vars);
        while !r.is_zero() {
            let (re, rc) = {
                let (e, c) = r.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            let mut exps = Vec::with_capacity(re.len());
            for (a, b) in re.iter().zip(&de) {
                if a < b {
                    return None;
                }
                exps.push(a - b);
            }
            let coeff = &rc / &dc;
            let mut mono = MultiPoly::zero(&vars);
            mono.add_term(exps.clone(), coeff.clone());
            q.add_term(exps, coeff);
            r = r.sub(&mono.mul(&d));
        }
        Some(q)
    }

    /// Scale so that coefficients are coprime integers with a positive
    /// leading (lexicographically last) coefficient. Returns the factor
    /// removed, which is always positive times a sign.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        if num_gcd.is_zero() {
            num_gcd = BigInt::one();
        }
        let factor = Rational::new(den, num_gcd);
        let mut out = self.scale(&factor);
        let lead_sign = sign_of(out.terms.values().next_back().unwrap());
        if lead_sign < 0 {
            out = out.neg();
        }
        out
    }

    /// GCD via the primitive subresultant PRS, recursing on variables.
    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let (a, b) = Self::unify(a, b).expect("incompatible variable orders");
        if a.is_zero() {
            return b.primitive_part();
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        let used: Vec<Var> = {
            let mut u = a.used_vars();
            for v in b.used_vars() {
                if !u.contains(&v) {
                    u.push(v);
                }
            }
            u
        };
        if used.is_empty() {
            return MultiPoly::one(&a.vars);
        }
        // Recurse on the last used variable in the carried order.
        let v = *a.vars.iter().rev().find(|v| used.contains(v)).unwrap();
        let mut p = a.clone();
        let mut q = b.clone();
        if p.degree_in(v) < q.degree_in(v) {
            core::mem::swap(&mut p, &mut q);
        }
        // content = gcd of coefficients (in the remaining variables)
        let content = |f: &MultiPoly| -> MultiPoly {
            let mut acc = MultiPoly::zero(&f.vars);
            for c in f.coeffs_in(v) {
                if !c.is_zero() {
                    acc = if acc.is_zero() { c.primitive_part() } else { Self::gcd(&acc, &c) };
                }
            }
            acc
        };
        let cp = content(&p);
        let cq = content(&q);
        let cont_gcd = Self::gcd(&cp, &cq);
        let mut p = p.div_exact(&cp).unwrap();
        let mut q = q.div_exact(&cq).unwrap();
        // primitive PRS
        while !q.is_zero() && q.degree_in(v) > 0 {
            let r = pseudo_rem(&p, &q, v);
            p = q;
            q = if r.is_zero() {
                r
            } else {
                let c = content(&r);
                r.div_exact(&c).unwrap()
            };
        }
        let prim = if q.is_zero() { p.primitive_part() } else { MultiPoly::one(&p.vars) };
        cont_gcd.mul(&prim).primitive_part()
    }

    /// Square-free part with respect to every used variable.
    pub fn square_free(&self) -> MultiPoly {
        if self.is_zero() || self.is_constant() {
            return self.primitive_part();
        }
        let mut out = self.primitive_part();
        for v in self.used_vars() {
            if out.degree_in(v) == 0 {
                continue;
            }
            let d = out.derivative(v);
            if d.is_zero() {
                continue;
            }
            let g = Self::gcd(&out, &d);
            if g.total_degree() > 0 {
                out = out.div_exact(&g).expect("gcd divides").primitive_part();
            }
        }
        out
    }

    /// Text form as a sparse term list: `vars; exps:num/den; ...`,
    /// round-trippable and bit-exact.
    pub fn to_term_text(&self) -> String {
        let mut s = String::new();
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push(v.0);
        }
        s.push(';');
        for (e, c) in &self.terms {
            s.push(' ');
            for (i, k) in e.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s += &format!("{k}");
            }
            s += &format!(":{}/{}", c.numer(), c.denom());
        }
        s
    }
}

/// Pseudo-remainder of `p` by `q` in variable `v`: a polynomial multiple
/// of the true remainder, with `deg_v r < deg_v q`. Callers require
/// `deg_v p >= deg_v q >= 1`.
pub fn pseudo_rem(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let dq = q.degree_in(v);
    let lq = q.leading_coeff_in(v);
    let mut r = p.clone();
    let mut dr = r.degree_in(v);
    while !r.is_zero() && dr >= dq {
        let lr = r.leading_coeff_in(v);
        let shift = MultiPoly::variable(r.vars(), v).pow(dr - dq);
        // r <- lc(q)*r - lc(r)*v^(dr-dq)*q
        r = r.mul(&lq).sub(&lr.mul(&shift).mul(q));
        if r.is_zero() {
            break;
        }
        let new_dr = r.degree_in(v);
        debug_assert!(new_dr < dr);
        dr = new_dr;
    }
    r
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_term = e.iter().all(|&k| k == 0);
            if !mag.is_one() || is_const_term {
                write!(f, "{}", mag)?;
            }
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                write!(f, "{}", self.vars[i])?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    const X: Var = Var('x');
    const Y: Var = Var('y');
    const Z: Var = Var('z');

    fn xy() -> [Var; 2] {
        [X, Y]
    }

    #[test]
    fn expansion_example() {
        // (x+y)*(x-y) = x^2 - y^2
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let p = x.add(&y).mul(&x.sub(&y));
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expect);
    }

    #[test]
    fn partial_eval_example() {
        // z^2 - 1 at z = 1 -> 0
        let vs = [Z];
        let z = MultiPoly::variable(&vs, Z);
        let p = z.mul(&z).sub(&MultiPoly::one(&vs));
        let e = p.partial_eval(&[(Z, rat(1))]);
        assert!(e.is_zero());
    }

    #[test]
    fn derivative_example() {
        // d/dx (x^3 - x) = 3x^2 - 1
        let vs = [X];
        let x = MultiPoly::variable(&vs, X);
        let p = x.pow(3).sub(&x);
        let d = p.derivative(X);
        let expect = x.pow(2).scale(&rat(3)).sub(&MultiPoly::one(&vs));
        assert_eq!(d, expect);
    }

    #[test]
    fn algebraic_substitution_into_two_vars_is_rejected() {
        // The public sign_at entry enforces this; here we check the error
        // type exists and compares.
        assert_eq!(PolyError::MultipleAlgebraicSubstitution, PolyError::MultipleAlgebraicSubstitution);
    }

    #[test]
    fn compose_substitutes_plane() {
        // F = z^2, z := x + 1 -> (x+1)^2
        let vs = [X, Z];
        let z = MultiPoly::variable(&vs, Z);
        let x = MultiPoly::variable(&vs, X);
        let f = z.pow(2);
        let g = f.compose(Z, &x.add(&MultiPoly::one(&vs)));
        assert_eq!(g, x.add(&MultiPoly::one(&vs)).pow(2));
        assert_eq!(g.degree_in(Z), 0);
    }

    #[test]
    fn div_exact_and_gcd() {
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let a = x.add(&y); // x+y
        let b = x.sub(&y); // x-y
        let p = a.mul(&b).mul(&a); // (x+y)^2 (x-y)
        let q = a.mul(&b); // (x+y)(x-y)
        assert_eq!(p.div_exact(&q).unwrap(), a);
        assert!(p.div_exact(&x.pow(2)).is_none());
        let g = MultiPoly::gcd(&p, &q);
        assert_eq!(g, q.primitive_part());
    }

    #[test]
    fn square_free_strips_multiplicity() {
        let vs = [X];
        let x = MultiPoly::variable(&vs, X);
        let one = MultiPoly::one(&vs);
        // (x-1)^2 (x+3) -> (x-1)(x+3)
        let p = x.sub(&one).pow(2).mul(&x.add(&one.scale(&rat(3))));
        let sf = p.square_free();
        let expect = x.sub(&one).mul(&x.add(&one.scale(&rat(3)))).primitive_part();
        assert_eq!(sf, expect);
    }

    #[test]
    fn unify_merges_orders() {
        let a = MultiPoly::variable(&[X, Y], X);
        let b = MultiPoly::variable(&[Y, Z], Z);
        let (ua, ub) = MultiPoly::unify(&a, &b).unwrap();
        assert_eq!(ua.vars(), ub.vars());
        assert_eq!(ua.vars().len(), 3);
        // conflicting relative order is rejected
        let c = MultiPoly::variable(&[Y, X], X).mul(&MultiPoly::variable(&[Y, X], Y));
        let d = MultiPoly::variable(&[X, Y], X).mul(&MultiPoly::variable(&[X, Y], Y));
        assert!(c.embed(d.vars()).is_err());
    }

    #[test]
    fn eval_matches_horner() {
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let p = x.pow(2).mul(&y).add(&y.pow(3).scale(&ratio(1, 2))).sub(&MultiPoly::one(&vs));
        let v = p.eval(&[ratio(1, 2), rat(2)]);
        // (1/4)*2 + (1/2)*8 - 1 = 1/2 + 4 - 1
        assert_eq!(v, ratio(7, 2));
    }

    #[test]
    fn term_text_is_stable() {
        let vs = xy();
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let p = x.pow(2).sub(&y.scale(&ratio(3, 7)));
        assert_eq!(p.to_term_text(), "x,y; 0,1:-3/7 2,0:1/1");
    }
}
