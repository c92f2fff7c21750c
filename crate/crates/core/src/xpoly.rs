//! Laurent polynomials over the weight lattice `X` with coefficients in a [`Coeff`] ring.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use std::collections::BTreeMap;

/// An integer vector in the chosen basis of a lattice.
pub type Wt = Vec<i64>;

pub fn wt_add(a: &[i64], b: &[i64]) -> Wt {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn wt_sub(a: &[i64], b: &[i64]) -> Wt {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn wt_scale(a: &[i64], k: i64) -> Wt {
    a.iter().map(|x| x * k).collect()
}

pub fn wt_neg(a: &[i64]) -> Wt {
    a.iter().map(|x| -x).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct XPoly<C: Coeff> {
    rank: usize,
    terms: BTreeMap<Wt, C>,
}

impl<C: Coeff> XPoly<C> {
    pub fn zero(rank: usize) -> Self {
        XPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], C::one())
    }

    pub fn monomial(w: Wt, c: C) -> Self {
        let rank = w.len();
        let mut p = Self::zero(rank);
        p.add_term(w, &c);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, w: Wt, c: &C) {
        debug_assert_eq!(w.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = x.add(c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Wt, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Wt, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[i64]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        self.map(|x| x.mul(c))
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero(self.rank);
        }
        self.map(|x| x.mul_laurent(p))
    }

    /// Multiply by `X^w`.
    pub fn shift(&self, w: &[i64]) -> Self {
        XPoly { rank: self.rank, terms: self.terms.iter().map(|(k, c)| (wt_add(k, w), c.clone())).collect() }
    }

    pub fn map<F: Fn(&C) -> C>(&self, f: F) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(w.clone(), d);
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> Result<D>>(&self, f: F) -> Result<XPoly<D>> {
        let mut out = XPoly::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Apply a linear map to the exponents (coefficients unchanged).
    pub fn map_weights<F: Fn(&[i64]) -> Wt>(&self, f: F) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(f(w), c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(wt_add(a, b), &x.mul(y));
            }
        }
        out
    }

    fn bounds(&self) -> (Wt, Wt) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for w in self.terms.keys() {
            for i in 0..self.rank {
                lo[i] = lo[i].min(w[i]);
                hi[i] = hi[i].max(w[i]);
            }
        }
        (lo, hi)
    }

    /// Exact quotient in the Laurent ring over `X`.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let (plo, phi) = self.bounds();
        let (dlo, dhi) = d.bounds();
        let lo = wt_sub(&plo, &dlo);
        let hi = wt_sub(&phi, &dhi);
        let (dlw, dlc) = {
            let (w, c) = d.terms.iter().next_back().unwrap();
            (w.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        while let Some((rw, rc)) = rem.terms.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
            let qw = wt_sub(&rw, &dlw);
            if (0..self.rank).any(|i| qw[i] < lo[i] || qw[i] > hi[i]) {
                return Err(Error::InexactDivision(format!("remainder term at X^{:?}", rw)));
            }
            let qc = rc
                .div_exact(&dlc)
                .ok_or_else(|| Error::InexactDivision(format!("coefficient at X^{:?}", rw)))?;
            for (w, c) in &d.terms {
                rem.add_term(wt_add(w, &qw), &c.mul(&qc).neg());
            }
            quot.add_term(qw, &qc);
        }
        Ok(quot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    type P = XPoly<LaurentPoly>;

    #[test]
    fn divide_difference() {
        // (X^a - X^{-a}) / (1 - X^a) = -X^{-a}(1 + X^a)
        let mut num = P::zero(1);
        num.add_term(vec![1], &LaurentPoly::one());
        num.add_term(vec![-1], &LaurentPoly::from_i64(-1));
        let mut den = P::one(1);
        den.add_term(vec![1], &LaurentPoly::from_i64(-1));
        let q = num.exact_divide(&den).unwrap();
        let mut expect = P::zero(1);
        expect.add_term(vec![-1], &LaurentPoly::from_i64(-1));
        expect.add_term(vec![0], &LaurentPoly::from_i64(-1));
        assert_eq!(q, expect);
        assert_eq!(q.mul(&den), num);
    }

    #[test]
    fn inexact_is_reported() {
        let mut num = P::one(1);
        num.add_term(vec![1], &LaurentPoly::var(Var::Q));
        let mut den = P::one(1);
        den.add_term(vec![1], &LaurentPoly::from_i64(-1));
        assert!(num.exact_divide(&den).is_err());
    }
}
