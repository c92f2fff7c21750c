//! Denominators built from binomials `1 - ξ`, kept in factored form.

use crate::coeff::CoeffRat;
use crate::error::Result;
use crate::int::Int;
use crate::poly::{mono_mul, mono_pow, LaurentPoly, Mono, NVARS, ONE_MONO};
use crate::xpoly::{Wt, XPoly};
use std::collections::HashMap;

/// Integer coefficients of the cyclotomic polynomial `Φ_d(x)`, lowest degree first.
fn cyclotomic(d: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(c) = cache.get(&d) {
        return c.clone();
    }
    let mut p = vec![0i64; d as usize + 1];
    p[0] = -1;
    p[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            let f = cyclotomic(e, cache);
            p = div_univariate(&p, &f);
        }
    }
    cache.insert(d, p.clone());
    p
}

fn div_univariate(p: &[i64], f: &[i64]) -> Vec<i64> {
    let mut r = p.to_vec();
    let df = f.len() - 1;
    let dq = r.len() - 1 - df;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + df] / f[df];
        q[k] = c;
        for (t, &fc) in f.iter().enumerate() {
            r[k + t] -= c * fc;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn gcd_exps(m: &Mono) -> u32 {
    m.iter().fold(0u32, |g, &e| num_integer::gcd(g, e.unsigned_abs()))
}

/// A product `sign · ∏ f_k^{e_k}` of irreducible factors.
#[derive(Clone, Debug, PartialEq)]
pub struct Denominator {
    sign: i64,
    unit: Mono,
    factors: Vec<(LaurentPoly, u32)>,
}

impl Default for Denominator {
    fn default() -> Self {
        Self::one()
    }
}

impl Denominator {
    pub fn one() -> Self {
        Denominator { sign: 1, unit: ONE_MONO, factors: Vec::new() }
    }

    fn push(&mut self, f: LaurentPoly, e: u32) {
        if let Some(x) = self.factors.iter_mut().find(|(g, _)| *g == f) {
            x.1 += e;
        } else {
            self.factors.push((f, e));
        }
    }

    /// Multiply by `1 - ξ` for a nontrivial monomial `ξ`.
    pub fn mul_one_minus(&mut self, xi: &Mono) {
        let g = gcd_exps(xi);
        assert!(g > 0, "1 - 1 is not a valid denominator");
        let mut base = *xi;
        for e in base.iter_mut() {
            *e /= g as i32;
        }
        // orient the base: 1 - ξ = -ξ (1 - ξ^{-1})
        if base.iter().find(|&&e| e != 0).is_some_and(|&e| e < 0) {
            self.sign = -self.sign;
            self.unit = mono_mul(&self.unit, xi);
            base = mono_pow(&base, -1);
        }
        // 1 - N^g = -∏_{d | g} Φ_d(N)
        self.sign = -self.sign;
        let mut cache = HashMap::new();
        for d in 1..=g {
            if g % d != 0 {
                continue;
            }
            let coeffs = cyclotomic(d, &mut cache);
            let mut f = LaurentPoly::zero();
            for (k, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    f.add_term(mono_pow(&base, k as i32), &Int::from(c));
                }
            }
            // normalize so that the constant term is positive
            let lead_neg = f.coeff(&[0; NVARS]).signum() < 0;
            if lead_neg {
                f = -f;
                self.sign = -self.sign;
            }
            self.push(f, 1);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.sign *= o.sign;
        out.unit = mono_mul(&out.unit, &o.unit);
        for (f, e) in &o.factors {
            out.push(f.clone(), *e);
        }
        out
    }

    pub fn expand(&self) -> LaurentPoly {
        let mut p = LaurentPoly::monomial(self.unit, Int::from(self.sign));
        for (f, e) in &self.factors {
            p = &p * &f.pow(*e);
        }
        p
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.unit == ONE_MONO && self.factors.is_empty()
    }

    /// Reduce `num / self` to lowest terms.
    pub fn reduce(&self, num: &LaurentPoly) -> CoeffRat {
        if num.is_zero() {
            return CoeffRat::from_int(0);
        }
        let mut n = num.clone();
        let mut den = LaurentPoly::monomial(self.unit, Int::from(self.sign));
        for (f, e) in &self.factors {
            let mut left = *e;
            while left > 0 {
                match n.div_exact(f) {
                    Some(q) => {
                        n = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den = &den * &f.pow(left);
            }
        }
        CoeffRat::from_coprime(n, den)
    }
}

/// A polynomial in `X` written as `num / den` with a common factored denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct Fraction {
    pub num: XPoly<LaurentPoly>,
    pub den: Denominator,
}

impl Fraction {
    pub fn polynomial(num: XPoly<LaurentPoly>) -> Self {
        Fraction { num, den: Denominator::one() }
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    /// Coefficientwise reduction into exact rational functions.
    pub fn to_rat(&self) -> XPoly<CoeffRat> {
        let mut out = XPoly::zero(self.num.rank());
        for (w, c) in self.num.terms() {
            out.add_term(w.clone(), &self.den.reduce(c));
        }
        out
    }

    pub fn coeff(&self, w: &[i64]) -> CoeffRat {
        self.den.reduce(&self.num.coeff(w))
    }

    /// Exact equality of `a/b` and `c/d` by cross-multiplication.
    pub fn same_as(&self, o: &Fraction) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.scale_laurent(&o.den.expand()) == o.num.scale_laurent(&self.den.expand())
    }

    pub fn support(&self) -> Vec<Wt> {
        self.num.terms().map(|(w, _)| w.clone()).collect()
    }

    /// Apply a coefficient-preserving linear map on `X` to the numerator.
    pub fn map_num<F: FnOnce(&XPoly<LaurentPoly>) -> XPoly<LaurentPoly>>(&self, f: F) -> Self {
        Fraction { num: f(&self.num), den: self.den.clone() }
    }

    pub fn rat_coeffs(&self) -> Result<Vec<(Wt, CoeffRat)>> {
        Ok(self.to_rat().terms().map(|(w, c)| (w.clone(), c.clone())).collect())
    }
}
