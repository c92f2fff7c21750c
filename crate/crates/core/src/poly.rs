//! Sparse multivariate Laurent polynomials over the integers in the seven
//! scalar variables `Q = q^{1/m}`, `v`, `v_s`, `v_l`, `v_0`, `v_2`, `v_z`.

use crate::int::Int;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NVARS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    Q,
    V,
    Vs,
    Vl,
    V0,
    V2,
    Vz,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::V, Var::Vs, Var::Vl, Var::V0, Var::V2, Var::Vz];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::V => "v",
            Var::Vs => "v_s",
            Var::Vl => "v_l",
            Var::V0 => "v_0",
            Var::V2 => "v_2",
            Var::Vz => "v_z",
        }
    }
}

/// Exponent vector indexed by [`Var::index`].
pub type Mono = [i32; NVARS];

pub const ONE_MONO: Mono = [0; NVARS];

pub fn mono_var(v: Var, e: i32) -> Mono {
    let mut m = ONE_MONO;
    m[v.index()] = e;
    m
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut c = *a;
    for i in 0..NVARS {
        c[i] += b[i];
    }
    c
}

pub fn mono_div(a: &Mono, b: &Mono) -> Mono {
    let mut c = *a;
    for i in 0..NVARS {
        c[i] -= b[i];
    }
    c
}

pub fn mono_pow(a: &Mono, k: i32) -> Mono {
    let mut c = *a;
    for x in c.iter_mut() {
        *x *= k;
    }
    c
}

pub fn mono_degree(a: &Mono) -> i64 {
    a.iter().map(|&e| e as i64).sum()
}

/// Graded lexicographic comparison: total degree first, then lex.
pub fn cmp_grlex(a: &Mono, b: &Mono) -> Ordering {
    mono_degree(a).cmp(&mono_degree(b)).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::from(1))
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(ONE_MONO, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(Int::from(c))
    }

    pub fn monomial(m: Mono, c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn mono(m: Mono) -> Self {
        Self::monomial(m, Int::from(1))
    }

    pub fn var(v: Var) -> Self {
        Self::mono(mono_var(v, 1))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::mono(mono_var(v, e))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Int)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: &Int) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Int)> {
        self.terms.iter()
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ONE_MONO).is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.len() {
            0 => Some(Int::from(0)),
            1 => self.terms.get(&ONE_MONO).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(Mono, Int)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((*m, c.clone()))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Mono) -> Int {
        self.terms.get(m).cloned().unwrap_or_else(|| Int::from(0))
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, x)| (mono_mul(k, m), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponents; the zero polynomial reports all zeros.
    pub fn min_exps(&self) -> Mono {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(m) => *m,
            None => return ONE_MONO,
        };
        for k in it {
            for i in 0..NVARS {
                m[i] = m[i].min(k[i]);
            }
        }
        m
    }

    pub fn max_exps(&self) -> Mono {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(m) => *m,
            None => return ONE_MONO,
        };
        for k in it {
            for i in 0..NVARS {
                m[i] = m[i].max(k[i]);
            }
        }
        m
    }

    /// Positive gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::from(0);
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int(&self, c: &Int) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (m, x) in &self.terms {
            out.insert(*m, x.div_exact(c)?);
        }
        Some(LaurentPoly { terms: out })
    }

    /// Leading term in graded-lex order.
    pub fn leading_grlex(&self) -> Option<(Mono, Int)> {
        self.terms.iter().max_by(|a, b| cmp_grlex(a.0, b.0)).map(|(m, c)| (*m, c.clone()))
    }

    fn leading_lex(&self) -> Option<(&Mono, &Int)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            let inv = LaurentPoly { terms: self.terms.iter().map(|(k, x)| (mono_div(k, &m), x.clone())).collect() };
            return inv.div_int(&c);
        }
        let (pmin, pmax) = (self.min_exps(), self.max_exps());
        let (dmin, dmax) = (d.min_exps(), d.max_exps());
        let mut lo = ONE_MONO;
        let mut hi = ONE_MONO;
        for i in 0..NVARS {
            lo[i] = pmin[i] - dmin[i];
            hi[i] = pmax[i] - dmax[i];
            if lo[i] > hi[i] {
                return None;
            }
        }
        let (dlm, dlc) = {
            let (m, c) = d.leading_lex().unwrap();
            (*m, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading_lex().map(|(m, c)| (*m, c.clone())) {
            let qm = mono_div(&rm, &dlm);
            for i in 0..NVARS {
                if qm[i] < lo[i] || qm[i] > hi[i] {
                    return None;
                }
            }
            let qc = rc.div_exact(&dlc)?;
            for (m, c) in &d.terms {
                rem.add_term(mono_mul(m, &qm), &-(c * &qc));
            }
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    /// Substitute each variable by a Laurent monomial: `var_i -> images[i]`.
    pub fn subst_monos(&self, images: &[Mono; NVARS]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = ONE_MONO;
            for i in 0..NVARS {
                if m[i] != 0 {
                    nm = mono_mul(&nm, &mono_pow(&images[i], m[i]));
                }
            }
            out.add_term(nm, c);
        }
        out
    }

    /// Substitute `var -> var^{-1}`.
    pub fn invert_var(&self, v: Var) -> LaurentPoly {
        let i = v.index();
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut k = *m;
                    k[i] = -k[i];
                    (k, c.clone())
                })
                .collect(),
        }
    }

    /// Lowest exponent of `v` present (None for zero).
    pub fn valuation(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m[v.index()]).min()
    }

    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m[v.index()]).max()
    }

    /// The coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: i32) -> LaurentPoly {
        let i = v.index();
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m[i] == k)
                .map(|(m, c)| {
                    let mut mm = *m;
                    mm[i] = 0;
                    (mm, c.clone())
                })
                .collect(),
        }
    }

    /// True if no variable outside `allowed` occurs.
    pub fn uses_only(&self, allowed: &[Var]) -> bool {
        self.terms.keys().all(|m| (0..NVARS).all(|i| m[i] == 0 || allowed.iter().any(|v| v.index() == i)))
    }

    pub fn vars_used(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|v| self.terms.keys().any(|m| m[v.index()] != 0)).collect()
    }

    /// Every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.signum() >= 0)
    }

    /// Render with `q` printed as `q^(k/m)` when `m > 1`.
    pub fn render(&self, m: i64) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Mono> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_grlex(a, b));
        let mut out = String::new();
        for (idx, k) in keys.iter().enumerate() {
            let c = &self.terms[*k];
            let neg = c.signum() < 0;
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_mono(k, m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", abs, mono));
            }
        }
        out
    }
}

fn render_mono(k: &Mono, m: i64) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        let e = k[v.index()] as i64;
        if e == 0 {
            continue;
        }
        if v == Var::Q && m > 1 {
            let g = num_integer::gcd(e, m);
            let (n, d) = (e / g, m / g);
            if d == 1 {
                parts.push(if n == 1 { "q".to_string() } else { format!("q^{}", n) });
            } else {
                parts.push(format!("q^({}/{})", n, d));
            }
            continue;
        }
        if e == 1 {
            parts.push(v.name().to_string());
        } else {
            parts.push(format!("{}^{}", v.name(), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(1))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(mono_mul(a, b), &(x * y));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// gcd

/// Divide out the monomial `x^{min}` so that every exponent minimum is zero.
pub fn strip_monomial(p: &LaurentPoly) -> LaurentPoly {
    let m = p.min_exps();
    if m == ONE_MONO {
        p.clone()
    } else {
        p.mul_mono(&mono_pow(&m, -1))
    }
}

/// Polynomial with zero exponent minima, positive content, and positive
/// graded-lex leading coefficient.
pub fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    let p = strip_monomial(p);
    match p.leading_grlex() {
        Some((_, c)) if c.signum() < 0 => -p,
        _ => p,
    }
}

/// Greatest common divisor up to units (signed monomials), normalized by
/// [`normalize_unit`].
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_unit(b);
    }
    if b.is_zero() {
        return normalize_unit(a);
    }
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    if a.len() == 1 || b.len() == 1 {
        return LaurentPoly::constant(a.content().gcd(&b.content()));
    }
    if let Some(_) = a.div_exact(&b) {
        return normalize_unit(&b);
    }
    if let Some(_) = b.div_exact(&a) {
        return normalize_unit(&a);
    }
    normalize_unit(&gcd_rec(&a, &b))
}

fn gcd_rec(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    let main = Var::ALL
        .iter()
        .copied()
        .filter(|v| a.max_degree(*v).unwrap_or(0) > 0 || b.max_degree(*v).unwrap_or(0) > 0)
        .max_by_key(|v| a.max_degree(*v).unwrap_or(0).max(b.max_degree(*v).unwrap_or(0)));
    let x = match main {
        None => return LaurentPoly::constant(a.content().gcd(&b.content())),
        Some(x) => x,
    };
    let ua = to_univariate(&a, x);
    let ub = to_univariate(&b, x);
    if ua.len() == 1 {
        return gcd_rec(&ua[0], &univ_content(&ub));
    }
    if ub.len() == 1 {
        return gcd_rec(&ub[0], &univ_content(&ua));
    }
    let ca = univ_content(&ua);
    let cb = univ_content(&ub);
    let gc = gcd_rec(&ca, &cb);
    let mut p = univ_div_scalar(&ua, &ca);
    let mut q = univ_div_scalar(&ub, &cb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = univ_prem(&p, &q);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return gc;
        }
        let cr = univ_content(&r);
        p = q;
        q = univ_div_scalar(&r, &cr);
    }
    let p = q;
    let cp = univ_content(&p);
    let pp = univ_div_scalar(&p, &cp);
    &from_univariate(&pp, x) * &gc
}

fn to_univariate(p: &LaurentPoly, x: Var) -> Vec<LaurentPoly> {
    let i = x.index();
    let deg = p.max_degree(x).unwrap_or(0).max(0) as usize;
    let mut out = vec![LaurentPoly::zero(); deg + 1];
    for (m, c) in p.terms() {
        let mut mm = *m;
        let e = mm[i] as usize;
        mm[i] = 0;
        out[e].add_term(mm, c);
    }
    out
}

fn from_univariate(u: &[LaurentPoly], x: Var) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in u.iter().enumerate() {
        out = &out + &c.mul_mono(&mono_var(x, e as i32));
    }
    out
}

fn univ_content(u: &[LaurentPoly]) -> LaurentPoly {
    let mut g = LaurentPoly::zero();
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { strip_monomial(c) } else { gcd_rec(&g, c) };
        if g.as_constant().is_some_and(|k| k.abs().is_one()) {
            break;
        }
    }
    g
}

fn univ_div_scalar(u: &[LaurentPoly], c: &LaurentPoly) -> Vec<LaurentPoly> {
    u.iter().map(|x| x.div_exact(c).expect("content divides every coefficient")).collect()
}

fn trim(u: &mut Vec<LaurentPoly>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (both with nonzero leading coefficients).
fn univ_prem(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut r: Vec<LaurentPoly> = a.to_vec();
    trim(&mut r);
    let n = b.len() - 1;
    let lb = &b[n];
    while r.len() > n {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        let shift = dr - n;
        for (k, bc) in b.iter().enumerate() {
            let t = &r[k + shift] - &(&lr * bc);
            r[k + shift] = t;
        }
        trim(&mut r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> LaurentPoly {
        LaurentPoly::var(Var::V)
    }
    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    #[test]
    fn arithmetic_and_division() {
        let a = &(&q() + &LaurentPoly::one()) * &(&v() - &LaurentPoly::one());
        let b = &q() + &LaurentPoly::one();
        assert_eq!(a.div_exact(&b), Some(&v() - &LaurentPoly::one()));
        assert_eq!(b.div_exact(&(&v() + &q())), None);
        let inv = LaurentPoly::var_pow(Var::V, -1);
        assert_eq!((&inv * &v()), LaurentPoly::one());
    }

    #[test]
    fn gcd_basic() {
        let f = &q() - &v();
        let g = &(&q() + &LaurentPoly::one()) * &f;
        let h = &(&v().pow(2) + &LaurentPoly::from_i64(3)) * &f;
        assert_eq!(gcd(&g, &h), normalize_unit(&f));
        let c = gcd(&g.scale(&Int::from(6)), &h.scale(&Int::from(4)));
        assert_eq!(c, normalize_unit(&f.scale(&Int::from(2))));
        assert_eq!(gcd(&q(), &v()), LaurentPoly::one());
    }

    #[test]
    fn render_sorted() {
        let p = &q() + &LaurentPoly::one();
        assert_eq!(p.render(1), "1 + q");
        assert_eq!(LaurentPoly::var_pow(Var::Q, 2).render(4), "q^(1/2)");
        assert_eq!((-&v()).scale(&Int::from(3)).render(1), "-3*v");
    }
}
