//! Coefficient rings: the [`Coeff`] trait and exact rational functions.

use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::{gcd, mono_pow, LaurentPoly, Mono, Var, NVARS, ONE_MONO};
use std::fmt::Debug;

/// A commutative ring that contains the Laurent polynomials in the scalar variables.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_laurent(p: LaurentPoly) -> Self;
    /// Exact quotient when it exists in the ring.
    fn div_exact(&self, o: &Self) -> Option<Self>;

    fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        self.mul(&Self::from_laurent(p.clone()))
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_laurent(p: LaurentPoly) -> Self {
        p
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, o)
    }
    fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        self * p
    }
}

/// Exact rational function `num / den` in normal form.
///
/// `den` is an honest polynomial with no monomial factor, `gcd(num, den) = 1`
/// over the integers, and the graded-lex leading coefficient of `den` is
/// positive. Two values are equal iff their normal forms coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffRat {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl CoeffRat {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InexactDivision("zero denominator".into()));
        }
        Ok(Self::normalize(num, den, true))
    }

    /// Build from a fraction known to be already reduced up to units.
    pub fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalize(num, den, false)
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly, reduce: bool) -> Self {
        if num.is_zero() {
            return CoeffRat { num, den: LaurentPoly::one() };
        }
        let dm = den.min_exps();
        let (mut num, mut den) = if dm != ONE_MONO {
            let inv = mono_pow(&dm, -1);
            (num.mul_mono(&inv), den.mul_mono(&inv))
        } else {
            (num, den)
        };
        if reduce && den.len() > 1 {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = LaurentPoly::one();
            } else {
                let g = gcd(&num, &den);
                if !g.is_one() {
                    num = num.div_exact(&g).expect("gcd divides numerator");
                    den = den.div_exact(&g).expect("gcd divides denominator");
                }
            }
        }
        if den.len() == 1 || reduce {
            let c = den.content().gcd(&num.content());
            if !c.is_one() {
                num = num.div_int(&c).unwrap();
                den = den.div_int(&c).unwrap();
            }
        }
        if let Some((_, lc)) = den.leading_grlex() {
            if lc.signum() < 0 {
                num = -num;
                den = -den;
            }
        }
        CoeffRat { num, den }
    }

    pub fn from_int(c: i64) -> Self {
        CoeffRat { num: LaurentPoly::from_i64(c), den: LaurentPoly::one() }
    }

    pub fn mono(m: Mono) -> Self {
        CoeffRat { num: LaurentPoly::mono(m), den: LaurentPoly::one() }
    }

    pub fn var(v: Var) -> Self {
        Self::from_laurent(LaurentPoly::var(v))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::InexactDivision("inverse of zero".into()));
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone(), false))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(CoeffRat { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Substitute every variable by a Laurent monomial.
    pub fn subst_monos(&self, images: &[Mono; NVARS]) -> Result<Self> {
        Self::new(self.num.subst_monos(images), self.den.subst_monos(images))
    }

    pub fn invert_var(&self, v: Var) -> Self {
        Self::normalize(self.num.invert_var(v), self.den.invert_var(v), false)
    }

    /// The `v`-adic valuation: exponent of the lowest power of `v`.
    pub fn valuation(&self, v: Var) -> Option<i32> {
        Some(self.num.valuation(v)? - self.den.valuation(v)?)
    }

    /// Exact limit `v -> 0`.
    pub fn limit_zero(&self, v: Var) -> Result<Self> {
        let (a, b) = match (self.num.valuation(v), self.den.valuation(v)) {
            (None, _) => return Ok(Self::zero()),
            (Some(a), Some(b)) => (a, b),
            (Some(_), None) => unreachable!("denominator is nonzero"),
        };
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => Ok(Self::zero()),
            std::cmp::Ordering::Equal => Self::new(self.num.coeff_of(v, a), self.den.coeff_of(v, b)),
            std::cmp::Ordering::Less => Err(Error::DivergentLimit(format!(
                "{} -> 0 in {} (order {})",
                v.name(),
                self.render(1),
                a - b
            ))),
        }
    }

    /// Exact limit `v -> infinity`.
    pub fn limit_infinity(&self, v: Var) -> Result<Self> {
        self.invert_var(v).limit_zero(v)
    }

    /// Cross-multiplication equality, independent of normal forms.
    pub fn cross_eq(&self, o: &Self) -> bool {
        (&self.num * &o.den) == (&o.num * &self.den)
    }

    pub fn render(&self, m: i64) -> String {
        if self.den.is_one() {
            self.num.render(m)
        } else {
            format!("({})/({})", self.num.render(m), self.den.render(m))
        }
    }
}

impl Coeff for CoeffRat {
    fn zero() -> Self {
        CoeffRat { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn one() -> Self {
        CoeffRat { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return CoeffRat { num: &self.num + &o.num, den: self.den.clone() };
            }
            return Self::normalize(&self.num + &o.num, self.den.clone(), true);
        }
        let g = gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = o.den.div_exact(&g).unwrap();
        let num = &(&self.num * &b) + &(&o.num * &a);
        Self::normalize(num, &a * &o.den, true)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        CoeffRat { num: -&self.num, den: self.den.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return CoeffRat { num: &self.num * &o.num, den: LaurentPoly::one() };
        }
        // cross-cancel before multiplying
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Self::normalize(&n1 * &n2, &d1 * &d2, false)
    }
    fn from_laurent(p: LaurentPoly) -> Self {
        CoeffRat { num: p, den: LaurentPoly::one() }
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div(o).ok()
    }
    fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return CoeffRat { num: &self.num * p, den: LaurentPoly::one() };
        }
        self.mul(&Self::from_laurent(p.clone()))
    }
}

/// Convenience: `v^{-1} - v` style differences of monomials.
pub fn mono_minus(a: Mono, b: Mono) -> LaurentPoly {
    let mut p = LaurentPoly::mono(a);
    p.add_term(b, &Int::from(-1));
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: Var) -> LaurentPoly {
        LaurentPoly::var(v)
    }

    #[test]
    fn normal_form_cancels() {
        let q = lp(Var::Q);
        let one = LaurentPoly::one();
        let a = CoeffRat::new(&(&q * &q) - &one, &q - &one).unwrap();
        assert_eq!(a, CoeffRat::from_laurent(&q + &one));
        let b = CoeffRat::new(LaurentPoly::from_i64(2), (&q - &one).scale(&Int::from(-4))).unwrap();
        assert_eq!(b.den(), &(&q - &one).scale(&Int::from(2)));
        assert_eq!(b.num(), &LaurentPoly::from_i64(-1));
    }

    #[test]
    fn limits() {
        let v = lp(Var::V);
        let one = LaurentPoly::one();
        // (v^{-1} - v) v / (1 - q v^4) -> 1
        let c = CoeffRat::new(&(&LaurentPoly::var_pow(Var::V, -1) - &v) * &v, &one - &(&lp(Var::Q) * &v.pow(4)))
            .unwrap();
        assert_eq!(c.limit_zero(Var::V).unwrap(), CoeffRat::one());
        let sq = CoeffRat::from_laurent(v.pow(2));
        assert_eq!(sq.limit_zero(Var::V).unwrap(), CoeffRat::zero());
        assert!(matches!(sq.limit_infinity(Var::V), Err(Error::DivergentLimit(_))));
    }
}
