//! Resultants and principal subresultant coefficients, computed as
//! Sylvester(-submatrix) determinants with fraction-free elimination.
//! The Sylvester determinant *is* the sign convention; downstream code
//! treats resultants up to sign anyway.

use super::poly::{MultiPoly, PolyError, Var};
use alloc::vec;
use alloc::vec::Vec;

/// Sylvester matrix of `p`, `q` with respect to `v` (dimension
/// `deg p + deg q`), rows built from coefficient lists of the two inputs.
fn sylvester(p: &MultiPoly, q: &MultiPoly, v: Var) -> Vec<Vec<MultiPoly>> {
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let dim = m + n;
    let vars: Vec<Var> = p.vars().to_vec();
    let zero = MultiPoly::zero(&vars);
    let mut mat = vec![vec![zero.clone(); dim]; dim];
    for row in 0..n {
        for (k, c) in pc.iter().enumerate() {
            // coefficient of x^(m-k across) placed with highest first
            mat[row][row + (m - k)] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in qc.iter().enumerate() {
            mat[n + row][row + (n - k)] = c.clone();
        }
    }
    mat
}

/// Fraction-free (Bareiss) determinant over polynomial entries.
fn bareiss_det(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one(&[]);
    }
    let vars: Vec<Var> = a[0][0].vars().to_vec();
    let mut sign = 1i64;
    let mut prev = MultiPoly::one(&vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // pivot search
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return MultiPoly::zero(&vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        for i in k + 1..n {
            a[i][k] = MultiPoly::zero(&vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to `v` (Sylvester determinant).
/// Both inputs need positive degree in `v`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    let (p, q) = MultiPoly::unify(p, q)?;
    if p.degree_in(v) == 0 || q.degree_in(v) == 0 {
        return Err(PolyError::DegreeTooLow);
    }
    Ok(bareiss_det(sylvester(&p, &q, v)))
}

/// Principal subresultant coefficients `psc_0 ..= psc_n` of `p`, `q`
/// with respect to `v`, where `n = min(deg p, deg q)`. The first entry is
/// the resultant; `psc_j = 0` for `0 <= j < gcd degree` flags a
/// nontrivial common factor.
pub fn subresultant_sequence(
    p: &MultiPoly,
    q: &MultiPoly,
    v: Var,
) -> Result<Vec<MultiPoly>, PolyError> {
    let (p, q) = MultiPoly::unify(p, q)?;
    let m = p.degree_in(v) as usize;
    let n = q.degree_in(v) as usize;
    if m == 0 || n == 0 {
        return Err(PolyError::DegreeTooLow);
    }
    let (hi, lo, hv, lv) = if m >= n { (&p, &q, m, n) } else { (&q, &p, n, m) };
    let full = sylvester(hi, lo, v);
    let dim = hv + lv;
    let mut out = Vec::with_capacity(lv + 1);
    for j in 0..=lv {
        if j == lv {
            // by convention the j = n entry is lc(q)^(m-n) (determinant of
            // the empty-block matrix); report lc(q) when m = n would give 1
            let lc = lo.leading_coeff_in(v);
            let mut acc = MultiPoly::one(lo.vars());
            for _ in 0..hv.saturating_sub(lv) {
                acc = acc.mul(&lc);
            }
            out.push(acc);
            continue;
        }
        // delete the last j rows of each block and the last 2j columns
        let keep_p = lv - j;
        let keep_q = hv - j;
        let mut sub = Vec::with_capacity(dim - 2 * j);
        for r in 0..keep_p {
            sub.push(full[r][..dim - 2 * j].to_vec());
        }
        for r in 0..keep_q {
            sub.push(full[lv + r][..dim - 2 * j].to_vec());
        }
        // the psc is the determinant of this (dim-2j) square matrix
        out.push(bareiss_det(sub));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, MultiPoly, Var};
    use super::*;

    const X: Var = Var('x');
    const Y: Var = Var('y');
    const A: Var = Var('a');
    const B: Var = Var('b');

    /// Naive cofactor-expansion determinant, the independent oracle.
    fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let vars = m[0][0].vars().to_vec();
        let mut acc = MultiPoly::zero(&vars);
        for (j, cell) in m[0].iter().enumerate() {
            if cell.is_zero() {
                continue;
            }
            let minor: Vec<Vec<MultiPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, c)| c.clone())
                        .collect()
                })
                .collect();
            let term = cell.mul(&cofactor_det(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn res_of_quadratic_and_linear() {
        // Res_y(y^2 - x, y - 1) = 1 - x up to sign
        let vs = [X, Y];
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let p = y.pow(2).sub(&x);
        let q = y.sub(&MultiPoly::one(&vs));
        let r = resultant(&p, &q, Y).unwrap();
        let expect = MultiPoly::one(&vs).sub(&x);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn res_of_two_linears() {
        // Res_x(x - a, x - b) = a - b up to sign
        let vs = [A, B, X];
        let x = MultiPoly::variable(&vs, X);
        let a = MultiPoly::variable(&vs, A);
        let b = MultiPoly::variable(&vs, B);
        let r = resultant(&x.sub(&a), &x.sub(&b), X).unwrap();
        let expect = a.sub(&b);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn res_matches_independent_sylvester_determinant() {
        // Res_y(y^2 + 1, y^2 - x) = (x+1)^2, checked against a cofactor
        // expansion of the exact 4x4 Sylvester matrix
        let vs = [X, Y];
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let p = y.pow(2).add(&MultiPoly::one(&vs));
        let q = y.pow(2).sub(&x);
        let r = resultant(&p, &q, Y).unwrap();
        let expect = x.add(&MultiPoly::one(&vs)).pow(2);
        assert_eq!(r, expect);
        let m = sylvester(&p, &q, Y);
        assert_eq!(m.len(), 4);
        assert_eq!(cofactor_det(&m), r);
    }

    #[test]
    fn subresultants_first_is_resultant() {
        let vs = [X, Y];
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        let p = y.pow(2).sub(&x);
        let q = y.sub(&MultiPoly::one(&vs));
        let s = subresultant_sequence(&p, &q, Y).unwrap();
        let r = resultant(&p, &q, Y).unwrap();
        assert_eq!(s[0], r);
        // textbook PRS: the degree-1 entry is the (nonzero) unit
        assert!(!s[1].is_zero());
    }

    #[test]
    fn non_coprime_pair_flagged() {
        // (y^2, y): psc_0 = 0 flags the common root y = 0
        let vs = [Y];
        let y = MultiPoly::variable(&vs, Y);
        let s = subresultant_sequence(&y.pow(2), &y, Y).unwrap();
        assert!(s[0].is_zero());
        assert!(!s.last().unwrap().is_zero());
    }

    #[test]
    fn degree_errors() {
        let vs = [X, Y];
        let x = MultiPoly::variable(&vs, X);
        let y = MultiPoly::variable(&vs, Y);
        assert!(resultant(&x, &y, Y).is_err());
    }

    #[test]
    fn resultant_vanishes_iff_common_root_random() {
        // Res_y(p, q)(x0) = 0 iff p(x0, .) and q(x0, .) share a complex
        // root or both leading coefficients vanish; checked through a
        // rational-evaluation + gcd oracle at 20 sample points.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let vs = [X, Y];
        for _ in 0..40 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = MultiPoly::zero(&vs);
                for ex in 0..=3u32 {
                    for ey in 0..=3u32 {
                        if ex + ey > 3 {
                            continue;
                        }
                        let c = rng.gen_range(-3i64..=3);
                        if c != 0 {
                            p = p.add(&MultiPoly::from_terms(
                                &vs,
                                [(alloc::vec![ex, ey], rat(c))],
                            ));
                        }
                    }
                }
                p
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            if p.degree_in(Y) == 0 || q.degree_in(Y) == 0 {
                continue;
            }
            let r = resultant(&p, &q, Y).unwrap();
            for k in -10i64..10 {
                let x0 = rat(k);
                let rv = r.partial_eval(&[(X, x0.clone())]);
                let pv = p.partial_eval(&[(X, x0.clone())]);
                let qv = q.partial_eval(&[(X, x0.clone())]);
                let via_res = rv.is_zero() || rv.constant_value().map(|c| c == rat(0)).unwrap_or(false);
                // oracle: gcd of the specialized univariates, or both
                // leading coefficients vanished (degree drop)
                let pd = pv.degree_in(Y);
                let qd = qv.degree_in(Y);
                let lead_drop = pd < p.degree_in(Y) && qd < q.degree_in(Y);
                let share = if pv.is_zero() || qv.is_zero() {
                    true
                } else if pd == 0 || qd == 0 {
                    false
                } else {
                    MultiPoly::gcd(&pv, &qv).degree_in(Y) > 0
                };
                assert_eq!(
                    via_res,
                    share || lead_drop,
                    "x0={k} p={p} q={q} res={r}"
                );
            }
        }
    }
}
