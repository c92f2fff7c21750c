//! The polynomial representation of the double affine Hecke algebra on `K X̃`.

use crate::coeff::{mono_minus, Coeff};
use crate::error::{Error, Result};
use crate::poly::{mono_mul, mono_pow, mono_var, LaurentPoly, Mono, Var, NVARS, ONE_MONO};
use crate::root_data::{AffineWeight, Datum, Lattice, ParamMode, Side};
use crate::weyl::{u_lambda, FinElem, ReducedWord, WeylElem};
use crate::xpoly::{wt_add, wt_neg, wt_scale, Wt, XPoly};
use std::collections::HashMap;
use std::sync::Mutex;

/// Substitute scalar images into a monomial.
pub fn mono_subst(m: &Mono, images: &[Mono; NVARS]) -> Mono {
    let mut out = ONE_MONO;
    for k in 0..NVARS {
        if m[k] != 0 {
            out = mono_mul(&out, &mono_pow(&images[k], m[k]));
        }
    }
    out
}

/// A datum together with a parameter specialization.
pub struct Ctx<'a> {
    pub d: &'a Datum,
    pub subst: [Mono; NVARS],
    words: Mutex<HashMap<Wt, ReducedWord>>,
}

impl<'a> Ctx<'a> {
    pub fn new(d: &'a Datum, mode: ParamMode) -> Self {
        Ctx { d, subst: d.substitution(mode), words: Mutex::new(HashMap::new()) }
    }

    pub fn var(&self, v: Var) -> Mono {
        self.subst[v.index()]
    }

    pub fn rank(&self) -> usize {
        self.d.n
    }

    /// `v_{α_i}` on `side`.
    pub fn v_node(&self, side: Side, i: usize) -> Mono {
        self.var(self.d.node_param(side, i))
    }

    /// `v_{2α_i}` on `side` (equal to `v_{α_i}` off the doubled nodes).
    pub fn v2_node(&self, side: Side, i: usize) -> Mono {
        self.var(self.d.node_param2(side, i))
    }

    /// `v_u = ∏ v_α` over the inversions of a finite Weyl group element.
    pub fn v_fin(&self, u: &FinElem) -> Mono {
        u.inversions(self.d).iter().fold(ONE_MONO, |acc, &k| mono_mul(&acc, &self.var(self.d.finite_param(k))))
    }

    /// `v_w` for an element of `W(X̃)`.
    pub fn v_affine(&self, w: &WeylElem) -> Mono {
        w.inversions(self.d).iter().fold(ONE_MONO, |acc, a| mono_mul(&acc, &self.var(self.d.root_param_x(a))))
    }

    /// Reduced word of the translation `t_μ ∈ W(X̃)`, memoized.
    fn translation_word(&self, mu: &[i64]) -> ReducedWord {
        if let Some(w) = self.words.lock().unwrap().get(mu) {
            return w.clone();
        }
        let w = WeylElem::translation(self.d, Side::X, mu.to_vec()).reduced_word(self.d);
        self.words.lock().unwrap().insert(mu.to_vec(), w.clone());
        w
    }

    /// Laurent monomial `Q^e`.
    fn q_pow(&self, e: i64) -> Mono {
        mono_pow(&self.var(Var::Q), e as i32)
    }

    /// `⟨α_i^∨, λ⟩` for `λ ∈ X`.
    fn coroot_pair(&self, i: usize, lam: &[i64]) -> i64 {
        if i == 0 {
            -self.d.x.roots[self.d.theta_x].coroot_pair(lam)
        } else {
            lam[i - 1]
        }
    }

    /// Action of a length-zero (or any) element of `W(X̃)` as a ring automorphism.
    pub fn apply_auto<C: Coeff>(&self, w: &WeylElem, f: &XPoly<C>) -> XPoly<C> {
        let mut out = XPoly::zero(self.rank());
        for (lam, c) in f.terms() {
            let img = w.act_unchecked(self.d, &AffineWeight::new(Side::X, lam.clone(), 0));
            out.add_term(img.classical, &c.mul_laurent(&LaurentPoly::mono(self.q_pow(img.delta))));
        }
        out
    }

    /// `T_i f` (Demazure-Lusztig operator).
    pub fn t<C: Coeff>(&self, i: usize, f: &XPoly<C>) -> XPoly<C> {
        let d = self.d;
        let alpha = d.simple_affine_root(Side::X, i);
        let a = &alpha.classical;
        let da = alpha.delta;
        let v = self.v_node(Side::X, i);
        let c1 = mono_minus(v, mono_pow(&v, -1));
        let doubled = d.doubled_x[i];
        let c2 = if doubled {
            let v2 = self.v2_node(Side::X, i);
            mono_minus(v2, mono_pow(&v2, -1))
        } else {
            LaurentPoly::zero()
        };
        let vm = LaurentPoly::mono(v);
        let mut out = XPoly::zero(self.rank());
        for (lam, c) in f.terms() {
            let k = self.coroot_pair(i, lam);
            let s_lam = wt_add(lam, &wt_scale(a, -k));
            out.add_term(s_lam.clone(), &c.mul_laurent(&vm.mul_mono(&self.q_pow(-k * da))));
            if k == 0 {
                continue;
            }
            // G = (X^λ - X^{s_i λ}) / (1 - X^{step·α}) as a finite sum
            let step = if doubled { 2 } else { 1 };
            assert!(k % step == 0, "odd pairing at a doubled node");
            let kk = k / step;
            let mut g: Vec<(i64, i64)> = Vec::new();
            if kk > 0 {
                for j in 0..kk {
                    g.push((-k + step * j, -1));
                }
            } else {
                for j in 0..(-kk) {
                    g.push((step * j, 1));
                }
            }
            for (e, sign) in g {
                let w = wt_add(lam, &wt_scale(a, e));
                let qm = self.q_pow(e * da);
                let mut coef = c1.mul_mono(&qm);
                if sign < 0 {
                    coef = -coef;
                }
                out.add_term(w, &c.mul_laurent(&coef));
                if doubled {
                    let w2 = wt_add(lam, &wt_scale(a, e + 1));
                    let mut coef2 = c2.mul_mono(&self.q_pow((e + 1) * da));
                    if sign < 0 {
                        coef2 = -coef2;
                    }
                    out.add_term(w2, &c.mul_laurent(&coef2));
                }
            }
        }
        out
    }

    /// Multiplication by `X^{aδ+λ}`, with `X^δ` acting as `Q`.
    pub fn x_affine<C: Coeff>(&self, x: &AffineWeight, f: &XPoly<C>) -> XPoly<C> {
        let g = f.shift(&x.classical);
        if x.delta == 0 {
            g
        } else {
            g.scale_laurent(&LaurentPoly::mono(self.q_pow(x.delta)))
        }
    }

    /// The intertwiner `φ_i` with its denominator cleared: `(1 - X^{α_i})φ_i f`,
    /// or `(1 - X^{2α_i})φ_i f` at a doubled node. With `from_inverse` the
    /// expression through `T_i^{-1}` is used instead of the one through `T_i`.
    pub fn phi_cleared<C: Coeff>(&self, i: usize, f: &XPoly<C>, from_inverse: bool) -> XPoly<C> {
        let alpha = self.d.simple_affine_root(Side::X, i);
        let doubled = self.d.doubled_x[i];
        let v = self.v_node(Side::X, i);
        let c = mono_minus(v, mono_pow(&v, -1));
        let xa = |k: i64, g: &XPoly<C>| self.x_affine(&alpha.scale(k), g);
        let step = if doubled { 2 } else { 1 };
        let tf = if from_inverse { self.t_inv(i, f) } else { self.t(i, f) };
        let mut out = tf.sub(&xa(step, &tf));
        let c_shift = if from_inverse { step } else { 0 };
        out = out.sub(&xa(c_shift, f).scale_laurent(&c));
        if doubled {
            let v2 = self.v2_node(Side::X, i);
            let d2 = mono_minus(v2, mono_pow(&v2, -1));
            out = out.sub(&xa(1, f).scale_laurent(&d2));
        }
        out
    }

    /// `T_i^{-1} f = T_i f - (v - v^{-1}) f`.
    pub fn t_inv<C: Coeff>(&self, i: usize, f: &XPoly<C>) -> XPoly<C> {
        let v = self.v_node(Side::X, i);
        self.t(i, f).sub(&f.scale_laurent(&mono_minus(v, mono_pow(&v, -1))))
    }

    fn apply_word<C: Coeff>(&self, rw: &ReducedWord, f: &XPoly<C>) -> XPoly<C> {
        let mut g = f.clone();
        for &i in rw.word.iter().rev() {
            g = self.t(i, &g);
        }
        if rw.pi.is_identity() {
            g
        } else {
            self.apply_auto(&rw.pi, &g)
        }
    }

    fn apply_word_inv<C: Coeff>(&self, rw: &ReducedWord, f: &XPoly<C>) -> XPoly<C> {
        let mut g = if rw.pi.is_identity() { f.clone() } else { self.apply_auto(&rw.pi.inv(), f) };
        for &i in &rw.word {
            g = self.t_inv(i, &g);
        }
        g
    }

    /// `T_w f` for `w ∈ W(X̃)`.
    pub fn t_w<C: Coeff>(&self, w: &WeylElem, f: &XPoly<C>) -> XPoly<C> {
        self.apply_word(&w.reduced_word(self.d), f)
    }

    /// `T_u f` for `u ∈ W_0`.
    pub fn t_fin<C: Coeff>(&self, u: &FinElem, f: &XPoly<C>) -> XPoly<C> {
        let mut g = f.clone();
        for &i in u.reduced_word(self.d).iter().rev() {
            g = self.t(i, &g);
        }
        g
    }

    /// `T_u^{-1} f` for `u ∈ W_0`.
    pub fn t_fin_inv<C: Coeff>(&self, u: &FinElem, f: &XPoly<C>) -> XPoly<C> {
        let mut g = f.clone();
        for &i in &u.reduced_word(self.d) {
            g = self.t_inv(i, &g);
        }
        g
    }

    /// `Y^μ f` for `μ = aδ + β ∈ Ỹ`.
    pub fn y<C: Coeff>(&self, mu: &AffineWeight, f: &XPoly<C>) -> XPoly<C> {
        let beta = &mu.classical;
        let k = beta.iter().map(|&c| (-c).max(0)).max().unwrap_or(0);
        let two_rho: Wt = vec![2 * k; self.rank()];
        let plus = wt_add(beta, &two_rho);
        let mut g = f.clone();
        if k > 0 {
            let rw = self.translation_word(&two_rho);
            g = self.apply_word_inv(&rw, &g);
        }
        if plus.iter().any(|&c| c != 0) {
            let rw = self.translation_word(&plus);
            g = self.apply_word(&rw, &g);
        }
        if mu.delta != 0 {
            g = g.scale_laurent(&LaurentPoly::mono(self.q_pow(-mu.delta)));
        }
        g
    }

    /// `(T_i^Y)^{±1} f`.
    pub fn t_y<C: Coeff>(&self, i: usize, inverse: bool, f: &XPoly<C>) -> XPoly<C> {
        if i > 0 {
            return if inverse { self.t_inv(i, f) } else { self.t(i, f) };
        }
        let vt = &self.d.x.roots[self.d.vartheta_x];
        let s = FinElem::reflection(self.d, self.d.vartheta_x);
        if inverse {
            // X^ϑ T_{s_ϑ}
            self.t_fin(&s, f).shift(&vt.omega)
        } else {
            // T_{s_ϑ}^{-1} X^{-ϑ}
            self.t_fin_inv(&s, &f.shift(&wt_neg(&vt.omega)))
        }
    }

    /// `π^Y f = X^{wt(π)} T_{dir(π)} f` for a length-zero `π ∈ W(Ỹ)`.
    pub fn pi_y<C: Coeff>(&self, pi: &WeylElem, f: &XPoly<C>) -> XPoly<C> {
        let (wt, dir) = pi.wt_dir();
        self.t_fin(&dir, f).shift(&wt)
    }

    /// `X^w · 1` for `w ∈ W(Ỹ)`, computed from a reduced word.
    pub fn xw_on_one<C: Coeff>(&self, w: &WeylElem) -> XPoly<C> {
        let d = self.d;
        let rw = w.reduced_word(d);
        let mut signs = Vec::with_capacity(rw.word.len());
        let mut prefix = rw.pi.clone();
        for &i in &rw.word {
            let a = d.simple_affine_root(Side::Y, i);
            let img = prefix.act_unchecked(d, &a);
            let k = d.y.find(&img.classical).unwrap();
            signs.push(d.y.roots[k].positive);
            prefix = prefix.mul(&WeylElem::simple(d, Side::Y, i));
        }
        let mut g = XPoly::one(self.rank());
        for (&i, &pos) in rw.word.iter().zip(&signs).rev() {
            g = self.t_y(i, !pos, &g);
        }
        if rw.pi.is_identity() {
            g
        } else {
            self.pi_y(&rw.pi, &g)
        }
    }

    /// The `Y`-eigenvalue `χ_{μ,λ}` of `E_λ`, for `μ = aδ + β ∈ Ỹ`.
    pub fn chi(&self, mu: &AffineWeight, lam: &[i64]) -> Result<Mono> {
        let d = self.d;
        let u = u_lambda(d, Side::X, lam);
        let ub = u.act(Side::Y, &mu.classical);
        let qexp = -mu.delta - d.pair_m(&mu.classical, lam);
        let (mut es, mut el) = (0i64, 0i64);
        for &k in &d.x.positive {
            let e = d.y.roots[d.x_to_y[k]].coroot_pair(&ub);
            if d.x.roots[k].long {
                el += e;
            } else {
                es += e;
            }
        }
        let mut out = mono_var(Var::Q, qexp as i32);
        if d.has_zero_orbit(Side::X) {
            let (target, e) = if d.x.simple_long[d.n - 1] { (Var::Vl, el) } else { (Var::Vs, es) };
            if e % 2 != 0 {
                return Err(Error::FractionalExponent(format!("{}^({}/2)", target.name(), e)));
            }
            let other = if target == Var::Vl { (Var::Vs, es) } else { (Var::Vl, el) };
            out = mono_mul(&out, &mono_var(target, (e / 2) as i32));
            out = mono_mul(&out, &mono_var(Var::V0, (e / 2) as i32));
            out = mono_mul(&out, &mono_var(other.0, other.1 as i32));
        } else {
            out = mono_mul(&out, &mono_var(Var::Vs, es as i32));
            out = mono_mul(&out, &mono_var(Var::Vl, el as i32));
        }
        Ok(mono_subst(&out, &self.subst))
    }

    /// A `ℤ`-basis of `Y` in ω-coordinates.
    pub fn y_basis(&self) -> Vec<Wt> {
        let n = self.rank();
        (0..n)
            .map(|i| match self.d.lat_y {
                Lattice::P => {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    e
                }
                Lattice::Q => self.d.y.simple_root(i),
            })
            .collect()
    }

    /// Check `Y^μ f = χ_{μ,λ} f` on a basis of `Ỹ`.
    pub fn verify_eigen<C: Coeff>(&self, lam: &[i64], f: &XPoly<C>) -> Result<EigenReport> {
        let mut mus: Vec<AffineWeight> =
            self.y_basis().into_iter().map(|b| AffineWeight::new(Side::Y, b, 0)).collect();
        mus.push(AffineWeight::new(Side::Y, vec![0; self.rank()], -self.d.m));
        let mut report = EigenReport { checks: 0, failures: Vec::new() };
        for mu in mus {
            let chi = self.chi(&mu, lam)?;
            let lhs = self.y(&mu, f);
            let rhs = f.scale_laurent(&LaurentPoly::mono(chi));
            report.checks += 1;
            let diff = lhs.sub(&rhs);
            let first = diff.terms().next().map(|(w, _)| w.clone());
            if let Some(w) = first {
                report.failures.push(format!("Y^({:?}, {}): mismatch at X^{:?}", mu.classical, mu.delta, w));
            }
        }
        Ok(report)
    }
}

/// Outcome of an eigenvalue check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl EigenReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.ok() {
            format!("OK ({} eigenvalue checks)", self.checks)
        } else {
            format!("FAILED ({} of {}): {}", self.failures.len(), self.checks, self.failures.join("; "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{AffineClass, FiniteType};

    type P = XPoly<LaurentPoly>;

    fn datum(t: &str, lx: Lattice, ly: Lattice, c: AffineClass) -> Datum {
        Datum::new(FiniteType::parse(t).unwrap(), lx, ly, c).unwrap()
    }

    fn mono_poly(w: Wt, m: Mono) -> P {
        XPoly::monomial(w, LaurentPoly::mono(m))
    }

    #[test]
    fn t_on_one_is_v() {
        let d = datum("B2", Lattice::Q, Lattice::Q, AffineClass::DualUntwisted);
        let ctx = Ctx::new(&d, ParamMode::General);
        for i in 0..=2 {
            let one = P::one(2);
            assert_eq!(ctx.t(i, &one), mono_poly(vec![0, 0], ctx.v_node(Side::X, i)));
        }
    }

    #[test]
    fn quadratic_relation() {
        for d in [
            datum("B2", Lattice::Q, Lattice::Q, AffineClass::DualUntwisted),
            datum("A2", Lattice::P, Lattice::P, AffineClass::Untwisted),
            datum("B2", Lattice::Q, Lattice::Q, AffineClass::Koornwinder),
        ] {
            let ctx = Ctx::new(&d, ParamMode::General);
            let a1 = d.x.simple_root(0);
            let a2 = d.x.simple_root(1);
            let mut f = P::zero(2);
            f.add_term(wt_add(&wt_scale(&a1, 2), &wt_neg(&a2)), &LaurentPoly::var(Var::Q));
            f.add_term(wt_add(&wt_neg(&a1), &wt_scale(&a2, 3)), &LaurentPoly::from_i64(5));
            for i in 0..=2 {
                assert_eq!(ctx.t_inv(i, &ctx.t(i, &f)), f, "node {i}");
            }
        }
    }

    #[test]
    fn x_elements_on_one() {
        let d = datum("A2", Lattice::P, Lattice::P, AffineClass::Untwisted);
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let t = WeylElem::translation(&d, Side::Y, vec![1, 0]);
        assert_eq!(ctx.xw_on_one::<LaurentPoly>(&t), mono_poly(vec![1, 0], ONE_MONO));
        let w = WeylElem::from_word(&d, Side::Y, &[2, 0]);
        assert_eq!(ctx.xw_on_one::<LaurentPoly>(&w), mono_poly(vec![2, -1], mono_var(Var::V, 2)));
    }

    #[test]
    fn chi_koornwinder_like() {
        let d = datum("B2", Lattice::Q, Lattice::Q, AffineClass::DualUntwisted);
        let ctx = Ctx::new(&d, ParamMode::General);
        let chi = ctx.chi(&AffineWeight::new(Side::Y, vec![1, 0], 0), &[0, 0]).unwrap();
        let expect = mono_mul(&mono_mul(&mono_var(Var::V0, 1), &mono_var(Var::Vs, 1)), &mono_var(Var::Vl, 2));
        assert_eq!(chi, expect);
    }

    #[test]
    fn constant_is_eigenvector() {
        for d in [
            datum("B2", Lattice::Q, Lattice::Q, AffineClass::DualUntwisted),
            datum("A2", Lattice::P, Lattice::P, AffineClass::Untwisted),
            datum("G2", Lattice::Q, Lattice::Q, AffineClass::Untwisted),
        ] {
            let ctx = Ctx::new(&d, ParamMode::General);
            let r = ctx.verify_eigen(&vec![0; d.n], &P::one(d.n)).unwrap();
            assert!(r.ok(), "{}: {}", d.type_x, r.summary());
        }
    }
}
