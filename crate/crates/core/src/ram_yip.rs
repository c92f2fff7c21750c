//! Alcove paths and the alcove-path expansion of `E_λ` and `P_λ`.

use crate::coeff::mono_minus;
use crate::denom::{Denominator, Fraction};
use crate::error::{Error, Result};
use crate::hecke::Ctx;
use crate::int::Int;
use crate::poly::{mono_pow, mono_var, Var, LaurentPoly, Mono, ONE_MONO};
use crate::root_data::{AffineClass, AffineWeight, Datum, Side};
use crate::weyl::{finite_weyl_group, m_lambda, u_lambda, FinElem, ReducedWord, WeylElem};
use crate::xpoly::{Wt, XPoly};
use rayon::prelude::*;
use std::collections::HashMap;

/// Which closed form supplies the per-fold factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// The general formula with `c_j`, `d_j` and the eigenvalues `ξ_j`.
    General,
    /// Equal-parameter closed form for `A_{2n}^{(2)}`.
    MixedA2n2,
    /// Equal-parameter closed form for `A_{2n}^{(2)†}`.
    MixedA2n2Dagger,
}

/// A folded path `p_J` over a fixed reduced word.
#[derive(Clone, Debug)]
pub struct AlcovePath {
    /// Fold positions, 1-based and increasing.
    pub folds: Vec<usize>,
    /// `ε_k` for every position `k`.
    pub signs: Vec<i8>,
    pub end: WeylElem,
    pub wt: Wt,
    pub dir: FinElem,
    /// Sum of `β_j` over negative folds.
    pub qwt: AffineWeight,
    /// Sum of `β_j` over positive folds.
    pub qwt_star: AffineWeight,
}

impl AlcovePath {
    pub fn fold_sign(&self, j: usize) -> i8 {
        self.signs[j - 1]
    }

    pub fn positive_folds(&self) -> Vec<usize> {
        self.folds.iter().copied().filter(|&j| self.fold_sign(j) > 0).collect()
    }

    pub fn negative_folds(&self) -> Vec<usize> {
        self.folds.iter().copied().filter(|&j| self.fold_sign(j) < 0).collect()
    }

    pub fn signs_string(&self) -> String {
        self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
    }

    pub fn folds_string(&self) -> String {
        if self.folds.is_empty() {
            "∅".into()
        } else {
            self.folds.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

/// The data `(u, w, w⃗, β_1..β_ℓ, ξ_1..ξ_ℓ)` from which all paths are built.
pub struct PathSpace<'c, 'a> {
    pub ctx: &'c Ctx<'a>,
    pub u: WeylElem,
    pub w: WeylElem,
    pub word: ReducedWord,
    pub betas: Vec<AffineWeight>,
    pub xis: Vec<Mono>,
    u0: WeylElem,
    simple: Vec<WeylElem>,
}

impl<'c, 'a> PathSpace<'c, 'a> {
    /// Paths for `X^u ψ_w`, with the canonical word unless one is supplied.
    pub fn new(ctx: &'c Ctx<'a>, u: WeylElem, w: WeylElem, word: Option<&[usize]>) -> Result<Self> {
        let d = ctx.d;
        if u.side != Side::Y || w.side != Side::Y {
            return Err(Error::SideMismatch { expected: Side::Y.name(), found: Side::X.name() });
        }
        let rw = match word {
            Some(wd) => w.check_word(d, wd)?,
            None => w.reduced_word(d),
        };
        let simple: Vec<WeylElem> = (0..=d.n).map(|i| WeylElem::simple(d, Side::Y, i)).collect();
        let l = rw.word.len();
        let mut betas = vec![AffineWeight::new(Side::Y, vec![0; d.n], 0); l];
        let mut suffix = WeylElem::identity(d, Side::Y);
        for k in (0..l).rev() {
            let a = d.simple_affine_root(Side::Y, rw.word[k]);
            betas[k] = suffix.inv().act_unchecked(d, &a);
            suffix = simple[rw.word[k]].mul(&suffix);
        }
        let xis = betas.iter().map(|b| ctx.chi(&b.neg(), &vec![0; d.n])).collect::<Result<Vec<_>>>()?;
        let u0 = u.mul(&rw.pi);
        Ok(PathSpace { ctx, u, w, word: rw, betas, xis, u0, simple })
    }

    /// Paths for `X^u Ẽ_λ`, over `m_λ`.
    pub fn for_weight(ctx: &'c Ctx<'a>, u: WeylElem, lam: &[i64], word: Option<&[usize]>) -> Result<Self> {
        if !ctx.d.in_lattice(Side::X, lam) {
            return Err(Error::Invalid(format!("weight {lam:?} is not in the lattice X")));
        }
        let (m, _) = m_lambda(ctx.d, lam);
        Self::new(ctx, u, m, word)
    }

    pub fn datum(&self) -> &Datum {
        self.ctx.d
    }

    pub fn len(&self) -> usize {
        self.word.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.word.is_empty()
    }

    /// `deg β_j` (the δ-coefficient), asserted integral.
    pub fn deg(&self, b: &AffineWeight) -> i64 {
        let m = self.datum().m;
        assert!(b.delta % m == 0, "non-integral δ-degree");
        b.delta / m
    }

    /// `⟨2ρ^∨, β̄⟩` for a `Y`-side affine weight.
    pub fn two_rho_pair(&self, b: &AffineWeight) -> i64 {
        let y = &self.datum().y;
        let s = y.to_simple(&b.classical).expect("root lattice element");
        y.two_rho_check(&s)
    }

    fn sign(&self, cur: &WeylElem, k: usize) -> i8 {
        let d = self.datum();
        let a = d.simple_affine_root(Side::Y, self.word.word[k]);
        let img = cur.act_unchecked(d, &a);
        let r = &d.y.roots[d.y.find(&img.classical).expect("image of a root")];
        if r.positive {
            1
        } else {
            -1
        }
    }

    /// Build `p_J` directly.
    pub fn path(&self, folds: &[usize]) -> AlcovePath {
        let d = self.datum();
        let mut cur = self.u0.clone();
        let mut signs = Vec::with_capacity(self.len());
        let zero = AffineWeight::new(Side::Y, vec![0; d.n], 0);
        let (mut qwt, mut qwt_star) = (zero.clone(), zero);
        for k in 0..self.len() {
            let s = self.sign(&cur, k);
            signs.push(s);
            if folds.contains(&(k + 1)) {
                if s > 0 {
                    qwt_star = qwt_star.add(&self.betas[k]);
                } else {
                    qwt = qwt.add(&self.betas[k]);
                }
            } else {
                cur = cur.mul(&self.simple[self.word.word[k]]);
            }
        }
        let (wt, dir) = cur.wt_dir();
        AlcovePath { folds: folds.to_vec(), signs, end: cur, wt, dir, qwt, qwt_star }
    }

    /// `z_0, …, z_r` of a path: `z_m` drops the first `m` folded reflections.
    pub fn z_sequence(&self, p: &AlcovePath) -> Vec<WeylElem> {
        let mut out = Vec::with_capacity(p.folds.len() + 1);
        for m in 0..=p.folds.len() {
            let removed = &p.folds[..m];
            let mut z = self.u0.clone();
            for (k, &i) in self.word.word.iter().enumerate() {
                if !removed.contains(&(k + 1)) {
                    z = z.mul(&self.simple[i]);
                }
            }
            out.push(z);
        }
        out
    }

    /// Visit every `p_J` in lexicographic order of `J`.
    pub fn for_each<F: FnMut(&AlcovePath)>(&self, mut f: F) {
        let mut folds = Vec::new();
        self.visit(0, &mut folds, &mut f);
    }

    fn visit<F: FnMut(&AlcovePath)>(&self, start: usize, folds: &mut Vec<usize>, f: &mut F) {
        f(&self.path(folds));
        for k in start..self.len() {
            folds.push(k + 1);
            self.visit(k + 1, folds, f);
            folds.pop();
        }
    }

    /// All paths, in lexicographic order of `J`.
    pub fn paths(&self) -> Vec<AlcovePath> {
        let mut out = Vec::with_capacity(1 << self.len().min(20));
        self.for_each(|p| out.push(p.clone()));
        out
    }

    /// `(denominator, numerator at ε = +1, numerator at ε = -1)` for position `k` (0-based).
    fn factors(&self, formula: Formula, k: usize) -> (Mono, u32, LaurentPoly, LaurentPoly) {
        let ctx = self.ctx;
        let i = self.word.word[k];
        let xi = self.xis[k];
        let (v, v2) = match formula {
            Formula::General => (ctx.v_node(Side::Y, i), ctx.v2_node(Side::Y, i)),
            _ => (mono_var(Var::V, 1), mono_var(Var::V, 1)),
        };
        let c = mono_minus(mono_pow(&v, -1), v);
        let xi1 = LaurentPoly::mono(xi);
        let xi2 = LaurentPoly::mono(mono_pow(&xi, 2));
        match formula {
            Formula::General => {
                if v == v2 {
                    (xi, 1, c.clone(), &c * &xi1)
                } else {
                    let dd = mono_minus(mono_pow(&v2, -1), v2);
                    (xi, 2, &c + &(&dd * &xi1), &(&c * &xi2) + &(&dd * &xi1))
                }
            }
            Formula::MixedA2n2 => {
                if i == 0 {
                    (xi, 2, &c * &xi1, &c * &xi1)
                } else {
                    (xi, 1, c.clone(), &c * &xi1)
                }
            }
            Formula::MixedA2n2Dagger => {
                if i == 0 {
                    (xi, 2, c.clone(), &c * &xi2)
                } else {
                    (xi, 1, c.clone(), &c * &xi1)
                }
            }
        }
    }

    fn check_formula(&self, formula: Formula) -> Result<()> {
        if formula == Formula::General {
            return Ok(());
        }
        if !self.datum().class.is_koornwinder_family() {
            return Err(Error::VariantRequiresKoornwinder);
        }
        if self.ctx.v_node(Side::Y, 1) != mono_var(Var::V, 1) {
            return Err(Error::Invalid("closed forms for the mixed types need equal parameters".into()));
        }
        Ok(())
    }

    /// The common denominator `∏_j (1 - ξ_j^{e_j})`.
    pub fn denominator(&self, formula: Formula) -> Denominator {
        let mut den = Denominator::one();
        for k in 0..self.len() {
            let (xi, e, _, _) = self.factors(formula, k);
            den.mul_one_minus(&mono_pow(&xi, e as i32));
        }
        den
    }

    /// `X^u ψ_w 1` as a fraction over [`PathSpace::denominator`], times `scale`.
    pub fn evaluate(&self, formula: Formula, scale: Mono) -> Result<Fraction> {
        self.check_formula(formula)?;
        let l = self.len();
        let facs: Vec<(LaurentPoly, LaurentPoly, LaurentPoly)> = (0..l)
            .map(|k| {
                let (xi, e, p, m) = self.factors(formula, k);
                (mono_minus(ONE_MONO, mono_pow(&xi, e as i32)), p, m)
            })
            .collect();
        // suffix[k] = ∏_{t ≥ k} den_t
        let mut suffix = vec![LaurentPoly::one(); l + 1];
        for k in (0..l).rev() {
            suffix[k] = &suffix[k + 1] * &facs[k].0;
        }
        let root = Walker { space: self, facs: &facs, suffix: &suffix };
        let start = State { next: 0, cur: self.u0.clone(), partial: LaurentPoly::mono(scale) };
        // p_∅ plus one subtree per first fold position, summed in parallel
        let mut acc = HashMap::new();
        root.leaf(&start, &mut acc);
        let parts: Vec<HashMap<Wt, LaurentPoly>> = root
            .children(&start)
            .into_par_iter()
            .map(|child| {
                let mut acc = HashMap::new();
                root.subtree(&child, &mut acc);
                acc
            })
            .collect();
        for part in parts {
            merge(&mut acc, part);
        }
        let mut num = XPoly::zero(self.datum().n);
        let mut keys: Vec<&Wt> = acc.keys().collect();
        keys.sort();
        for w in keys {
            num.add_term(w.clone(), &acc[w]);
        }
        Ok(Fraction { num, den: self.denominator(formula) })
    }

    /// Summand of a single path, as a fraction over [`PathSpace::denominator`].
    pub fn summand(&self, formula: Formula, p: &AlcovePath) -> Fraction {
        let mut c = LaurentPoly::mono(self.ctx.v_fin(&p.dir));
        for k in 0..self.len() {
            let (xi, e, plus, minus) = self.factors(formula, k);
            if p.folds.contains(&(k + 1)) {
                c = &c * if p.signs[k] > 0 { &plus } else { &minus };
            } else {
                c = &c * &mono_minus(ONE_MONO, mono_pow(&xi, e as i32));
            }
        }
        Fraction { num: XPoly::monomial(p.wt.clone(), c), den: self.denominator(formula) }
    }

    /// Equal-parameter `v`-order of a summand, read off from the combinatorics.
    pub fn ord(&self, formula: Formula, p: &AlcovePath) -> i64 {
        let d = self.datum();
        let q = self.qwt_variant(formula, p);
        let mut ord = p.dir.length(d) as i64 - p.folds.len() as i64 - self.two_rho_pair(&q);
        if formula != Formula::General {
            let (_, ul) = m_lambda(d, &self.lambda());
            ord -= ul.inv().length(d) as i64;
        }
        ord
    }

    /// `wt(w)` for the underlying `w`, i.e. `λ` when `w = m_λ`.
    pub fn lambda(&self) -> Wt {
        self.w.trans.clone()
    }

    /// `qwt`, `qwt_{A_{2n}^{(2)}}` or `qwt_{A_{2n}^{(2)†}}` depending on `formula`.
    pub fn qwt_variant(&self, formula: Formula, p: &AlcovePath) -> AffineWeight {
        let mut q = AffineWeight::new(Side::Y, vec![0; self.datum().n], 0);
        for &j in &p.folds {
            let zero_node = self.word.word[j - 1] == 0;
            let neg = p.fold_sign(j) < 0;
            let b = &self.betas[j - 1];
            let mult = match formula {
                Formula::General => i64::from(neg),
                Formula::MixedA2n2 => i64::from(neg || zero_node),
                Formula::MixedA2n2Dagger => match (zero_node, neg) {
                    (true, true) => 2,
                    (false, true) => 1,
                    _ => 0,
                },
            };
            if mult != 0 {
                q = q.add(&b.scale(mult));
            }
        }
        q
    }
}

fn merge(acc: &mut HashMap<Wt, LaurentPoly>, part: HashMap<Wt, LaurentPoly>) {
    for (w, c) in part {
        match acc.get_mut(&w) {
            Some(x) => *x = &*x + &c,
            None => {
                acc.insert(w, c);
            }
        }
    }
}

struct State {
    /// First position not yet decided.
    next: usize,
    /// `u_{next}` after the decided positions.
    cur: WeylElem,
    /// Product of the factors of the decided positions.
    partial: LaurentPoly,
}

struct Walker<'s, 'c, 'a> {
    space: &'s PathSpace<'c, 'a>,
    facs: &'s [(LaurentPoly, LaurentPoly, LaurentPoly)],
    suffix: &'s [LaurentPoly],
}

impl Walker<'_, '_, '_> {
    /// Contribution of the path with no folds after `state.next`.
    fn leaf(&self, st: &State, acc: &mut HashMap<Wt, LaurentPoly>) {
        let sp = self.space;
        let mut cur = st.cur.clone();
        for k in st.next..sp.len() {
            cur = cur.mul(&sp.simple[sp.word.word[k]]);
        }
        let (wt, dir) = cur.wt_dir();
        let c = (&st.partial * &self.suffix[st.next]).mul_mono(&sp.ctx.v_fin(&dir));
        merge(acc, HashMap::from([(wt, c)]));
    }

    /// States whose next fold is at `k ≥ state.next`.
    fn children(&self, st: &State) -> Vec<State> {
        let sp = self.space;
        let mut out = Vec::new();
        let mut cur = st.cur.clone();
        let mut crossed = st.partial.clone();
        for k in st.next..sp.len() {
            let s = sp.sign(&cur, k);
            let f = if s > 0 { &self.facs[k].1 } else { &self.facs[k].2 };
            out.push(State { next: k + 1, cur: cur.clone(), partial: &crossed * f });
            crossed = &crossed * &self.facs[k].0;
            cur = cur.mul(&sp.simple[sp.word.word[k]]);
        }
        out
    }

    fn subtree(&self, st: &State, acc: &mut HashMap<Wt, LaurentPoly>) {
        self.leaf(st, acc);
        for child in self.children(st) {
            self.subtree(&child, acc);
        }
    }
}

/// `E_λ` (normalized so that `[X^λ]E_λ = 1`) as an exact fraction.
pub fn e_lambda(ctx: &Ctx, lam: &[i64], formula: Formula, word: Option<&[usize]>) -> Result<Fraction> {
    let id = WeylElem::identity(ctx.d, Side::Y);
    x_e_lambda(ctx, &id, lam, formula, word)
}

/// `X^u E_λ` for `u ∈ W(Ỹ)`.
pub fn x_e_lambda(ctx: &Ctx, u: &WeylElem, lam: &[i64], formula: Formula, word: Option<&[usize]>) -> Result<Fraction> {
    let sp = PathSpace::for_weight(ctx, u.clone(), lam, word)?;
    let ul = u_lambda(ctx.d, Side::X, lam);
    sp.evaluate(formula, mono_pow(&ctx.v_fin(&ul.inv()), -1))
}

/// `Ẽ_λ = ψ_{m_λ} 1`.
pub fn e_tilde(ctx: &Ctx, lam: &[i64], word: Option<&[usize]>) -> Result<Fraction> {
    let id = WeylElem::identity(ctx.d, Side::Y);
    PathSpace::for_weight(ctx, id, lam, word)?.evaluate(Formula::General, ONE_MONO)
}

/// Minimal coset representatives `W_0^λ` for dominant `λ`.
pub fn min_coset_reps(d: &Datum, lam: &[i64]) -> Vec<FinElem> {
    let stab: Vec<usize> = (0..d.n).filter(|&i| lam[i] == 0).collect();
    finite_weyl_group(d)
        .into_iter()
        .filter(|u| {
            stab.iter().all(|&i| {
                let img = u.act(Side::X, &d.x.simple_root(i));
                d.x.roots[d.x.find(&img).unwrap()].positive
            })
        })
        .collect()
}

fn check_dominant(d: &Datum, lam: &[i64]) -> Result<()> {
    if lam.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    if !d.in_lattice(Side::X, lam) {
        return Err(Error::Invalid(format!("weight {lam:?} is not in the lattice X")));
    }
    Ok(())
}

/// `P_λ = Σ_{u ∈ W_0^λ} v_u T_u E_λ`.
pub fn p_lambda(ctx: &Ctx, lam: &[i64]) -> Result<Fraction> {
    check_dominant(ctx.d, lam)?;
    let e = e_lambda(ctx, lam, Formula::General, None)?;
    let reps = min_coset_reps(ctx.d, lam);
    let num = reps
        .par_iter()
        .map(|u| ctx.t_fin(u, &e.num).scale_laurent(&LaurentPoly::mono(ctx.v_fin(u))))
        .reduce(|| XPoly::zero(ctx.d.n), |a, b| a.add(&b));
    Ok(Fraction { num, den: e.den })
}

/// `P_λ` by oversymmetrization: `Σ_{W_0} v_u T_u E_λ / Σ_{(W_0)_λ} v_u^2`.
pub fn p_lambda_oversym(ctx: &Ctx, lam: &[i64]) -> Result<Fraction> {
    check_dominant(ctx.d, lam)?;
    let d = ctx.d;
    let e = e_lambda(ctx, lam, Formula::General, None)?;
    let group = finite_weyl_group(d);
    let num = group
        .par_iter()
        .map(|u| ctx.t_fin(u, &e.num).scale_laurent(&LaurentPoly::mono(ctx.v_fin(u))))
        .reduce(|| XPoly::zero(d.n), |a, b| a.add(&b));
    let mut stab_sum = LaurentPoly::zero();
    for u in &group {
        if u.act(Side::X, lam) == lam {
            stab_sum.add_term(mono_pow(&ctx.v_fin(u), 2), &Int::from(1));
        }
    }
    // divide the numerator by the stabilizer sum exactly
    let mut q = XPoly::zero(d.n);
    for (w, c) in num.terms() {
        let x = c
            .div_exact(&stab_sum)
            .ok_or_else(|| Error::InexactDivision(format!("stabilizer sum at X^{w:?}")))?;
        q.add_term(w.clone(), &x);
    }
    Ok(Fraction { num: q, den: e.den })
}

/// `P_λ` from the alcove-path sum over `u ∈ W_0^λ`.
pub fn p_lambda_paths(ctx: &Ctx, lam: &[i64]) -> Result<Fraction> {
    check_dominant(ctx.d, lam)?;
    let d = ctx.d;
    let ul_inv = u_lambda(d, Side::X, lam).inv();
    let mut total: Option<Fraction> = None;
    for u in min_coset_reps(d, lam) {
        let scale = mono_pow(&ctx.v_fin(&u.mul(&ul_inv)), -1);
        let sp = PathSpace::for_weight(ctx, WeylElem::finite(Side::Y, d.n, u), lam, None)?;
        let f = sp.evaluate(Formula::General, scale)?;
        total = Some(match total {
            None => f,
            Some(t) => Fraction { num: t.num.add(&f.num), den: t.den },
        });
    }
    Ok(total.expect("W_0^λ contains the identity"))
}

/// Whether `s_i f = f` for every finite node.
pub fn is_w0_invariant(d: &Datum, f: &XPoly<LaurentPoly>) -> bool {
    (1..=d.n).all(|i| {
        let s = FinElem::simple(d, i);
        f.map_weights(|w| s.act(Side::X, w)) == *f
    })
}

/// `(datum class, variant formula)` for the closed-form cross-check of a mixed class.
pub fn mixed_formula(class: AffineClass) -> Option<Formula> {
    match class {
        AffineClass::MixedA2n2 => Some(Formula::MixedA2n2),
        AffineClass::MixedA2n2Dagger => Some(Formula::MixedA2n2Dagger),
        _ => None,
    }
}

/// The `v`-power `v_{u_λ^{-1}}^{-1}` relating `Ẽ_λ` and `E_λ`.
pub fn normalization(ctx: &Ctx, lam: &[i64]) -> Mono {
    mono_pow(&ctx.v_fin(&u_lambda(ctx.d, Side::X, lam).inv()), -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRat;
    use crate::root_data::{FiniteType, Lattice, ParamMode};

    fn d32() -> Datum {
        Datum::new(FiniteType::parse("B2").unwrap(), Lattice::P, Lattice::P, AffineClass::DualUntwisted).unwrap()
    }

    // a e_1 + b e_2 in fundamental-weight coordinates of B_2
    fn amb(a: i64, b: i64) -> Wt {
        vec![a - b, 2 * b]
    }

    #[test]
    fn setup_betas_and_word() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let sp = PathSpace::for_weight(&ctx, WeylElem::identity(&d, Side::Y), &amb(-1, 0), None).unwrap();
        assert_eq!(sp.word.word, vec![1, 2, 1, 0]);
        let expect = [(2, amb(-1, 1)), (2, amb(-1, 0)), (2, amb(-1, -1)), (1, amb(-1, 0))];
        for (b, (deg, cl)) in sp.betas.iter().zip(expect) {
            assert_eq!(sp.deg(b), deg);
            assert_eq!(b.classical, cl);
        }
    }

    #[test]
    fn fold_14_sequence() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let sp = PathSpace::for_weight(&ctx, WeylElem::identity(&d, Side::Y), &amb(-1, 0), None).unwrap();
        let p = sp.path(&[1, 4]);
        assert_eq!(p.signs_string(), "++++");
        assert_eq!(p.positive_folds(), vec![1, 4]);
        let z = sp.z_sequence(&p);
        let w = |wd: &[usize]| WeylElem::from_word(&d, Side::Y, wd);
        assert_eq!(z, vec![w(&[1, 2, 1, 0]), w(&[2, 1, 0]), w(&[2, 1])]);
        assert_eq!(z.last().unwrap(), &p.end);
    }

    #[test]
    fn sixteen_paths_in_lex_order() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let sp = PathSpace::for_weight(&ctx, WeylElem::identity(&d, Side::Y), &amb(-1, 0), None).unwrap();
        let ps = sp.paths();
        assert_eq!(ps.len(), 16);
        let js: Vec<String> = ps.iter().map(|p| p.folds_string()).collect();
        assert_eq!(js[..5], ["∅", "1", "1,2", "1,2,3", "1,2,3,4"]);
        for p in &ps {
            assert_eq!(sp.z_sequence(p).last().unwrap(), &p.end);
        }
    }

    #[test]
    fn evaluate_matches_summands() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::General);
        let sp = PathSpace::for_weight(&ctx, WeylElem::identity(&d, Side::Y), &amb(-1, 0), None).unwrap();
        let whole = sp.evaluate(Formula::General, ONE_MONO).unwrap();
        let mut num = XPoly::zero(2);
        for p in sp.paths() {
            num = num.add(&sp.summand(Formula::General, &p).num);
        }
        assert_eq!(whole.num, num);
    }

    #[test]
    fn trivial_weight_is_one() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::General);
        let e = e_lambda(&ctx, &[0, 0], Formula::General, None).unwrap();
        assert_eq!(e.to_rat(), XPoly::one(2));
    }

    #[test]
    fn leading_coefficient_and_eigen() {
        for (t, lx, ly, c) in [
            ("B2", Lattice::P, Lattice::P, AffineClass::DualUntwisted),
            ("A2", Lattice::P, Lattice::P, AffineClass::Untwisted),
            ("B2", Lattice::Q, Lattice::Q, AffineClass::Koornwinder),
        ] {
            let d = Datum::new(FiniteType::parse(t).unwrap(), lx, ly, c).unwrap();
            let ctx = Ctx::new(&d, ParamMode::General);
            for lam in [vec![-1, 0], vec![1, 0], vec![0, 1], vec![1, -1], vec![2, 0]] {
                if !d.in_lattice(Side::X, &lam) {
                    continue;
                }
                let e = e_lambda(&ctx, &lam, Formula::General, None).unwrap();
                assert!(e.coeff(&lam).as_laurent().is_some_and(|c| c.is_one()), "{t} {lam:?}");
                let rep = ctx.verify_eigen(&lam, &e.num).unwrap();
                assert!(rep.ok(), "{t} {lam:?}: {}", rep.summary());
            }
        }
    }

    #[test]
    fn golden_v0() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let e = e_lambda(&ctx, &amb(-1, 0), Formula::General, None).unwrap();
        let lim = e.to_rat().map_coeffs(|c| c.limit_zero(crate::poly::Var::V)).unwrap();
        let mut expect = XPoly::zero(2);
        for w in [amb(-1, 0), amb(0, -1), amb(0, 1), amb(1, 0)] {
            expect.add_term(w, &CoeffRat::from_int(1));
        }
        expect.add_term(amb(0, 0), &CoeffRat::new(LaurentPoly::var(crate::poly::Var::Q) + LaurentPoly::one(), LaurentPoly::one()).unwrap());
        assert_eq!(lim, expect);
    }

    #[test]
    fn symmetric_routes_agree() {
        for (t, lx, ly, c) in [
            ("B2", Lattice::P, Lattice::P, AffineClass::DualUntwisted),
            ("A2", Lattice::P, Lattice::P, AffineClass::Untwisted),
            ("B2", Lattice::Q, Lattice::Q, AffineClass::Koornwinder),
        ] {
            let d = Datum::new(FiniteType::parse(t).unwrap(), lx, ly, c).unwrap();
            let ctx = Ctx::new(&d, ParamMode::General);
            for lam in [vec![1, 0], vec![0, 1], vec![2, 0], vec![0, 0]] {
                if !d.in_lattice(Side::X, &lam) {
                    continue;
                }
                let a = p_lambda(&ctx, &lam).unwrap();
                let b = p_lambda_oversym(&ctx, &lam).unwrap();
                let c = p_lambda_paths(&ctx, &lam).unwrap();
                assert!(a.same_as(&b), "{t} {lam:?} oversym");
                assert!(a.same_as(&c), "{t} {lam:?} paths");
                assert!(is_w0_invariant(&d, &a.num), "{t} {lam:?}");
                assert!(a.coeff(&lam).as_laurent().is_some_and(|c| c.is_one()));
            }
        }
    }

    fn v0_limit(e: &Fraction) -> XPoly<CoeffRat> {
        e.to_rat().map_coeffs(|c| c.limit_zero(crate::poly::Var::V)).unwrap()
    }

    #[test]
    fn mixed_closed_forms() {
        for (c, f, constant) in [
            (AffineClass::MixedA2n2, Formula::MixedA2n2, LaurentPoly::var(crate::poly::Var::Q)),
            (AffineClass::MixedA2n2Dagger, Formula::MixedA2n2Dagger, LaurentPoly::one()),
        ] {
            let d = Datum::new(FiniteType::parse("B2").unwrap(), Lattice::Q, Lattice::Q, c).unwrap();
            let ctx = Ctx::new(&d, ParamMode::Equal);
            for lam in [amb(-1, 0), amb(1, 0), amb(0, 1), amb(1, 1), amb(-1, 1), amb(2, 0)] {
                let g = e_lambda(&ctx, &lam, Formula::General, None).unwrap();
                let m = e_lambda(&ctx, &lam, f, None).unwrap();
                assert_eq!(g.to_rat(), m.to_rat(), "{c:?} {lam:?}");
            }
            let e = v0_limit(&e_lambda(&ctx, &amb(-1, 0), f, None).unwrap());
            assert_eq!(e.coeff(&amb(0, 0)), CoeffRat::new(constant, LaurentPoly::one()).unwrap());
            assert_eq!(e.len(), 5);
        }
    }

    #[test]
    fn ord_is_valuation() {
        for (c, f) in [
            (AffineClass::DualUntwisted, Formula::General),
            (AffineClass::MixedA2n2, Formula::MixedA2n2),
            (AffineClass::MixedA2n2Dagger, Formula::MixedA2n2Dagger),
        ] {
            let lat = if c == AffineClass::DualUntwisted { Lattice::P } else { Lattice::Q };
            let d = Datum::new(FiniteType::parse("B2").unwrap(), lat, lat, c).unwrap();
            let ctx = Ctx::new(&d, ParamMode::Equal);
            for lam in [amb(-1, 0), amb(1, 0), amb(1, 1), amb(-1, 1)] {
                let sp = PathSpace::for_weight(&ctx, WeylElem::identity(&d, Side::Y), &lam, None).unwrap();
                let shift = if f == Formula::General { ONE_MONO } else { normalization(&ctx, &lam) };
                for p in sp.paths() {
                    let s = sp.summand(f, &p);
                    let c = s.den.reduce(&s.num.coeff(&p.wt).mul_mono(&shift));
                    assert_eq!(c.valuation(crate::poly::Var::V), Some(sp.ord(f, &p) as i32), "{c:?} {lam:?} {}", p.folds_string());
                }
            }
        }
    }
}
