//! The quantum Bruhat graph on `W_0`, path classification, and the `v → 0`,
//! `v → ∞`, `q → 0`, `q → ∞` specializations as sums over alcove paths.

use crate::ambient;
use crate::coeff::CoeffRat;
use crate::error::{Error, Result};
use crate::hecke::Ctx;
use crate::poly::{mono_pow, mono_var, LaurentPoly, Var};
use crate::ram_yip::{min_coset_reps, mixed_formula, p_lambda, AlcovePath, Formula, PathSpace};
use crate::root_data::{Datum, Family, FiniteType, ParamMode, Side};
use crate::weyl::{finite_weyl_group, u_lambda, FinElem, WeylElem};
use crate::xpoly::{Wt, XPoly};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Largest `W_0` for which the graph is built.
pub const MAX_VERTICES: u128 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

impl EdgeKind {
    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::Bruhat => "bruhat",
            EdgeKind::Quantum => "quantum",
        }
    }
}

/// `from → from·s_α` with `α` a positive root of `Y` (index into `d.y.roots`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbgEdge {
    pub from: usize,
    pub to: usize,
    pub root: usize,
    pub kind: EdgeKind,
}

pub struct QuantumBruhatGraph {
    pub elems: Vec<FinElem>,
    pub lengths: Vec<usize>,
    pub edges: Vec<QbgEdge>,
    index: HashMap<FinElem, usize>,
}

/// `|W_0|` for a finite type.
pub fn weyl_order(t: &FiniteType) -> u128 {
    let n = t.rank as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match t.family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

/// `⟨2ρ^∨, α⟩` for a root of `Y`.
pub fn two_rho_y(d: &Datum, root: usize) -> i64 {
    d.y.two_rho_check(&d.y.roots[root].simple)
}

/// Kind of the step `w → w s_α` given both lengths, if it is an edge.
pub fn step_kind(d: &Datum, len_from: usize, len_to: usize, root: usize) -> Option<EdgeKind> {
    let (a, b) = (len_from as i64, len_to as i64);
    if b == a + 1 {
        Some(EdgeKind::Bruhat)
    } else if b == a + 1 - two_rho_y(d, root) {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

impl QuantumBruhatGraph {
    pub fn build(d: &Datum) -> Result<Self> {
        let order = weyl_order(&d.type_x);
        if order > MAX_VERTICES {
            return Err(Error::TooLarge(format!("|W_0| = {order} exceeds {MAX_VERTICES} vertices")));
        }
        let elems = finite_weyl_group(d);
        let lengths: Vec<usize> = elems.iter().map(|w| w.length(d)).collect();
        let index: HashMap<FinElem, usize> = elems.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let refl: Vec<(usize, FinElem)> =
            d.y.positive.iter().map(|&k| (k, FinElem::reflection(d, d.y_to_x[k]))).collect();
        let mut edges = Vec::new();
        for (i, w) in elems.iter().enumerate() {
            for (k, s) in &refl {
                let j = index[&w.mul(s)];
                if let Some(kind) = step_kind(d, lengths[i], lengths[j], *k) {
                    edges.push(QbgEdge { from: i, to: j, root: *k, kind });
                }
            }
        }
        Ok(QuantumBruhatGraph { elems, lengths, edges, index })
    }

    pub fn vertex(&self, w: &FinElem) -> usize {
        self.index[w]
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.edges.iter().filter(|e| e.kind == kind).count()
    }

    pub fn has_edge(&self, from: usize, to: usize, root: usize, kind: EdgeKind) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to && e.root == root && e.kind == kind)
    }

    /// Graphviz rendering: solid Bruhat arrows, dashed quantum arrows.
    pub fn to_dot(&self, d: &Datum) -> String {
        let mut s = String::from("digraph qbg {\n  rankdir=BT;\n");
        for (i, w) in self.elems.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{}\"];", word_label(&w.reduced_word(d)));
        }
        for e in &self.edges {
            let style = if e.kind == EdgeKind::Bruhat { "solid" } else { "dashed" };
            let _ = writeln!(
                s,
                "  v{} -> v{} [label=\"{}\", style={style}];",
                e.from,
                e.to,
                root_label(d, &d.y.roots[e.root].omega)
            );
        }
        s.push_str("}\n");
        s
    }
}

/// `s_1s_2` style label, `1` for the identity.
pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "1".into()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

/// A `Y` vector in `e_i` coordinates when available, otherwise in fundamental weights.
pub fn root_label(d: &Datum, omega: &[i64]) -> String {
    if ambient::supported(&d.type_y) {
        if let Ok(s) = ambient::render(&d.type_y, omega) {
            return s;
        }
    }
    format!("({})", omega.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Outcome of checking a path against the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Kinds of the steps checked so far.
    pub steps: Vec<EdgeKind>,
    /// 1-based index of the first step that is not an allowed edge.
    pub rejected_at: Option<usize>,
}

impl Classification {
    pub fn accepted(&self) -> bool {
        self.rejected_at.is_none()
    }

    pub fn quantum_steps(&self) -> usize {
        self.steps.iter().filter(|k| **k == EdgeKind::Quantum).count()
    }
}

/// Whether `β ∈ (2ℤ+1)δ + R^s(Y)`, the orbit of `α_0` in the mixed types.
pub fn in_zero_orbit(sp: &PathSpace, j: usize) -> bool {
    let d = sp.datum();
    let b = &sp.betas[j - 1];
    let k = d.y.find(&b.classical).expect("classical part of a real root");
    sp.deg(b) % 2 != 0 && !d.y.roots[k].long
}

/// Check `dir(z_0) → dir(z_1) → ⋯` (or its reverse) against the quantum Bruhat graph.
pub fn classify_path(sp: &PathSpace, p: &AlcovePath, direction: Direction, formula: Formula) -> Classification {
    let d = sp.datum();
    let zs = sp.z_sequence(p);
    let mut steps = Vec::with_capacity(p.folds.len());
    for (m, &j) in p.folds.iter().enumerate() {
        let (a, b) = (&zs[m].fin, &zs[m + 1].fin);
        let label = crate::xpoly::wt_neg(&sp.betas[j - 1].classical);
        let root = d.y.find(&label).expect("label is a root");
        let (from, to) = match direction {
            Direction::Forward => (a, b),
            Direction::Reverse => (b, a),
        };
        let kind = if d.y.roots[root].positive { step_kind(d, from.length(d), to.length(d), root) } else { None };
        let allowed = match (kind, formula) {
            (None, _) => false,
            (Some(k), Formula::MixedA2n2) => !(k == EdgeKind::Bruhat && in_zero_orbit(sp, j)),
            (Some(k), Formula::MixedA2n2Dagger) => !(k == EdgeKind::Quantum && in_zero_orbit(sp, j)),
            (Some(_), Formula::General) => true,
        };
        if !allowed {
            return Classification { steps, rejected_at: Some(m + 1) };
        }
        steps.push(kind.unwrap());
    }
    Classification { steps, rejected_at: None }
}

fn formula_for(d: &Datum) -> Formula {
    mixed_formula(d.class).unwrap_or(Formula::General)
}

fn q_mono(delta: i64) -> LaurentPoly {
    LaurentPoly::mono(mono_var(Var::Q, delta as i32))
}

fn to_rat(p: &XPoly<LaurentPoly>) -> XPoly<CoeffRat> {
    let mut out = XPoly::zero(p.rank());
    for (w, c) in p.terms() {
        out.add_term(w.clone(), &CoeffRat::from_coprime(c.clone(), LaurentPoly::one()));
    }
    out
}

fn identity_y(d: &Datum) -> WeylElem {
    WeylElem::identity(d, Side::Y)
}

/// `lim_{v→0} v_{dir(u) u_λ^{-1}}^{-1} X^u Ẽ_λ` as a sum over forward quantum paths.
pub fn e_at_v0(d: &Datum, u: &WeylElem, lam: &[i64], word: Option<&[usize]>) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, u.clone(), lam, word)?;
    let f = formula_for(d);
    let mut out = XPoly::zero(d.n);
    sp.for_each(|p| {
        if classify_path(&sp, p, Direction::Forward, f).accepted() {
            out.add_term(p.wt.clone(), &q_mono(sp.qwt_variant(f, p).delta));
        }
    });
    Ok(to_rat(&out))
}

/// The same limit taken symbolically from the full expansion.
pub fn e_at_v0_exact(d: &Datum, u: &WeylElem, lam: &[i64]) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, u.clone(), lam, None)?;
    let ul = u_lambda(d, Side::X, lam);
    let scale = mono_pow(&ctx.v_fin(&u.fin.mul(&ul.inv())), -1);
    sp.evaluate(Formula::General, scale)?.to_rat().map_coeffs(|c| c.limit_zero(Var::V))
}

/// `P_λ(X;q;0)` as a sum of quantum paths over `u ∈ W_0^λ`.
pub fn p_at_v0(d: &Datum, lam: &[i64]) -> Result<XPoly<CoeffRat>> {
    if lam.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let mut out = XPoly::zero(d.n);
    for u in min_coset_reps(d, lam) {
        out = out.add(&e_at_v0(d, &WeylElem::finite(Side::Y, d.n, u), lam, None)?);
    }
    Ok(out)
}

pub fn p_at_v0_exact(d: &Datum, lam: &[i64]) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    p_lambda(&ctx, lam)?.to_rat().map_coeffs(|c| c.limit_zero(Var::V))
}

/// `E_λ(X;q^{-1};∞)` as a sum over reverse quantum paths.
pub fn e_at_vinf(d: &Datum, lam: &[i64], word: Option<&[usize]>) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, identity_y(d), lam, word)?;
    let mut out = XPoly::zero(d.n);
    for p in reverse_quantum_paths(&sp) {
        out.add_term(p.wt.clone(), &q_mono(p.qwt_star.delta));
    }
    Ok(to_rat(&out))
}

/// Paths projecting to reverse paths in the graph.
pub fn reverse_quantum_paths(sp: &PathSpace) -> Vec<AlcovePath> {
    let f = formula_for(sp.datum());
    let mut out = Vec::new();
    sp.for_each(|p| {
        if classify_path(sp, p, Direction::Reverse, f).accepted() {
            out.push(p.clone());
        }
    });
    out
}

pub fn e_at_vinf_exact(d: &Datum, lam: &[i64]) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let e = crate::ram_yip::e_lambda(&ctx, lam, Formula::General, None)?;
    e.to_rat().map_coeffs(|c| c.invert_var(Var::Q).limit_infinity(Var::V))
}

fn fold_allowed_at_q_limit(sp: &PathSpace, f: Formula, j: usize) -> bool {
    f != Formula::MixedA2n2 || sp.word.word[j - 1] != 0
}

/// `X^u E_λ(X;0;v)` for `u ∈ W_0`, from paths with only positive folds.
pub fn e_at_q0(d: &Datum, u: &FinElem, lam: &[i64], word: Option<&[usize]>) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, WeylElem::finite(Side::Y, d.n, u.clone()), lam, word)?;
    let f = formula_for(d);
    let ul_inv_len = u_lambda(d, Side::X, lam).inv().length(d) as i32;
    let c = LaurentPoly::var_pow(Var::V, -1) - LaurentPoly::var(Var::V);
    let mut out = XPoly::zero(d.n);
    sp.for_each(|p| {
        if p.folds.iter().all(|&j| p.fold_sign(j) > 0 && fold_allowed_at_q_limit(&sp, f, j)) {
            let v = mono_var(Var::V, p.dir.length(d) as i32 - ul_inv_len);
            out.add_term(p.wt.clone(), &c.pow(p.folds.len() as u32).mul_mono(&v));
        }
    });
    Ok(to_rat(&out))
}

pub fn e_at_q0_exact(d: &Datum, u: &FinElem, lam: &[i64]) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, WeylElem::finite(Side::Y, d.n, u.clone()), lam, None)?;
    let scale = crate::ram_yip::normalization(&ctx, lam);
    sp.evaluate(Formula::General, scale)?.to_rat().map_coeffs(|c| c.limit_zero(Var::Q))
}

/// `E_λ(X;∞;v^{-1})` from paths with only negative folds.
pub fn e_at_qinf(d: &Datum, lam: &[i64], word: Option<&[usize]>) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, identity_y(d), lam, word)?;
    let f = formula_for(d);
    let ul_len = u_lambda(d, Side::X, lam).length(d) as i32;
    let c = LaurentPoly::var_pow(Var::V, -1) - LaurentPoly::var(Var::V);
    let mut out = XPoly::zero(d.n);
    sp.for_each(|p| {
        if p.folds.iter().all(|&j| p.fold_sign(j) < 0 && fold_allowed_at_q_limit(&sp, f, j)) {
            let v = mono_var(Var::V, ul_len - p.dir.length(d) as i32);
            out.add_term(p.wt.clone(), &c.pow(p.folds.len() as u32).mul_mono(&v));
        }
    });
    Ok(to_rat(&out))
}

pub fn e_at_qinf_exact(d: &Datum, lam: &[i64]) -> Result<XPoly<CoeffRat>> {
    let ctx = Ctx::new(d, ParamMode::Equal);
    let e = crate::ram_yip::e_lambda(&ctx, lam, Formula::General, None)?;
    e.to_rat().map_coeffs(|c| Ok(c.limit_infinity(Var::Q)?.invert_var(Var::V)))
}

/// DOT rendering of the fold tree restricted to forward quantum paths.
pub fn quantum_tree_dot(sp: &PathSpace) -> String {
    let d = sp.datum();
    let f = formula_for(d);
    let mut s = String::from("digraph paths {\n  rankdir=LR;\n");
    let mut keep = Vec::new();
    sp.for_each(|p| {
        if classify_path(sp, p, Direction::Forward, f).accepted() {
            keep.push(p.clone());
        }
    });
    let name = |folds: &[usize]| -> String {
        if folds.is_empty() {
            "p".into()
        } else {
            format!("p{}", folds.iter().map(|j| j.to_string()).collect::<Vec<_>>().join("_"))
        }
    };
    for p in &keep {
        let _ = writeln!(
            s,
            "  {} [label=\"{}\\n{}\"];",
            name(&p.folds),
            word_label(&p.dir.reduced_word(d)),
            p.folds_string()
        );
    }
    for p in &keep {
        if let Some((&last, parent)) = p.folds.split_last() {
            let style = if p.fold_sign(last) > 0 { "solid" } else { "dashed" };
            let _ = writeln!(
                s,
                "  {} -> {} [label=\"β{}\", style={style}];",
                name(parent),
                name(&p.folds),
                last
            );
        }
    }
    s.push_str("}\n");
    s
}

/// Coefficientwise difference report for two polynomials.
pub fn differences(a: &XPoly<CoeffRat>, b: &XPoly<CoeffRat>) -> Vec<Wt> {
    let mut keys: Vec<Wt> = a.terms().map(|(w, _)| w.clone()).collect();
    keys.extend(b.terms().map(|(w, _)| w.clone()));
    keys.sort();
    keys.dedup();
    keys.into_iter().filter(|w| !a.coeff(w).cross_eq(&b.coeff(w))).collect()
}

/// Whether every coefficient lies in `ℤ_{≥0}[q]`.
pub fn is_q_positive(p: &XPoly<CoeffRat>) -> bool {
    p.terms().all(|(_, c)| {
        c.as_laurent().is_some_and(|l| l.is_nonnegative() && l.uses_only(&[Var::Q]) && l.min_exps()[Var::Q.index()] >= 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{AffineClass, Lattice};

    fn datum(t: &str, l: Lattice, c: AffineClass) -> Datum {
        Datum::new(FiniteType::parse(t).unwrap(), l, l, c).unwrap()
    }

    fn suite() -> Vec<(Datum, Vec<Wt>)> {
        let small = |d: &Datum| -> Vec<Wt> {
            let mut out = Vec::new();
            for a in -2..=2i64 {
                for b in -2..=2i64 {
                    if a.abs() + b.abs() <= 2 && d.in_lattice(Side::X, &[a, b]) {
                        out.push(vec![a, b]);
                    }
                }
            }
            out
        };
        [
            datum("A2", Lattice::P, AffineClass::Untwisted),
            datum("C2", Lattice::P, AffineClass::Untwisted),
            datum("G2", Lattice::P, AffineClass::Untwisted),
            datum("B2", Lattice::P, AffineClass::DualUntwisted),
            datum("B2", Lattice::Q, AffineClass::Koornwinder),
            datum("B2", Lattice::Q, AffineClass::MixedA2n2),
            datum("B2", Lattice::Q, AffineClass::MixedA2n2Dagger),
        ]
        .into_iter()
        .map(|d| {
            let w = small(&d);
            (d, w)
        })
        .collect()
    }

    fn amb(a: i64, b: i64) -> Wt {
        vec![a - b, 2 * b]
    }

    fn d32() -> Datum {
        datum("B2", Lattice::P, AffineClass::DualUntwisted)
    }

    #[test]
    fn a1_graph() {
        let d = Datum::new(FiniteType::parse("A1").unwrap(), Lattice::P, Lattice::P, AffineClass::Untwisted).unwrap();
        let g = QuantumBruhatGraph::build(&d).unwrap();
        assert_eq!(g.edges.len(), 2);
        let id = g.vertex(&FinElem::identity(1));
        let s = g.vertex(&FinElem::simple(&d, 1));
        let k = d.y.positive[0];
        assert!(g.has_edge(id, s, k, EdgeKind::Bruhat));
        assert!(g.has_edge(s, id, k, EdgeKind::Quantum));
    }

    #[test]
    fn b2_graph_counts() {
        let g = QuantumBruhatGraph::build(&d32()).unwrap();
        assert!(!g.edges.iter().any(|e| e.to == g.vertex(&FinElem::identity(2)) && e.kind == EdgeKind::Bruhat));
        assert_eq!((g.count(EdgeKind::Bruhat), g.count(EdgeKind::Quantum)), (12, 10));
    }

    #[test]
    fn graph_is_too_large_for_e8() {
        let d = Datum::new(FiniteType::parse("E8").unwrap(), Lattice::P, Lattice::P, AffineClass::Untwisted);
        if let Ok(d) = d {
            assert!(matches!(QuantumBruhatGraph::build(&d), Err(Error::TooLarge(_))));
        }
    }

    #[test]
    fn longest_element_reverses_arrows() {
        for (d, _) in suite() {
            let g = QuantumBruhatGraph::build(&d).unwrap();
            let w0 = crate::weyl::longest_element(&d);
            for e in &g.edges {
                let a = g.vertex(&w0.mul(&g.elems[e.from]));
                let b = g.vertex(&w0.mul(&g.elems[e.to]));
                assert!(g.has_edge(b, a, e.root, e.kind));
            }
        }
    }

    #[test]
    fn golden_path_table() {
        let d = d32();
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let sp = PathSpace::for_weight(&ctx, identity_y(&d), &amb(-1, 0), None).unwrap();
        let w = |wd: &[usize]| FinElem::from_word(&d, wd);
        let rows: Vec<(&str, &str, FinElem, Wt, i64)> = vec![
            ("∅", "++++", w(&[]), amb(-1, 0), 0),
            ("1", "++++", w(&[1]), amb(0, -1), 0),
            ("1,2", "+++-", w(&[2, 1]), amb(0, 1), 0),
            ("1,2,3", "+++-", w(&[1, 2, 1]), amb(1, 0), 0),
            ("1,2,3,4", "+++-", w(&[]), amb(0, 0), 1),
            ("1,4", "++++", w(&[2, 1]), amb(0, 0), 0),
        ];
        let mut got = Vec::new();
        sp.for_each(|p| {
            let c = classify_path(&sp, p, Direction::Forward, Formula::General);
            if c.accepted() {
                got.push((p.clone(), c));
            }
        });
        assert_eq!(got.len(), rows.len());
        for ((p, c), (j, signs, dir, wt, qdeg)) in got.iter().zip(rows) {
            assert_eq!(p.folds_string(), j);
            assert_eq!(p.signs_string(), signs);
            assert_eq!(p.dir, dir);
            assert_eq!(p.wt, wt);
            assert_eq!(sp.deg(&p.qwt), qdeg);
            assert_eq!(c.quantum_steps(), usize::from(j == "1,2,3,4"));
        }
        let last = &got[4].1;
        assert_eq!(last.steps, vec![EdgeKind::Bruhat, EdgeKind::Bruhat, EdgeKind::Bruhat, EdgeKind::Quantum]);
    }

    #[test]
    fn ord_minimal_exactly_on_quantum_paths() {
        for (d, ws) in suite() {
            let ctx = Ctx::new(&d, ParamMode::Equal);
            let f = formula_for(&d);
            for lam in &ws {
                let sp = PathSpace::for_weight(&ctx, identity_y(&d), lam, None).unwrap();
                if sp.len() > 10 {
                    continue;
                }
                let base = sp.ord(f, &sp.path(&[]));
                sp.for_each(|p| {
                    let o = sp.ord(f, p);
                    assert!(o >= base);
                    let acc = classify_path(&sp, p, Direction::Forward, f).accepted();
                    assert_eq!(o == base, acc, "{:?} {lam:?} {}", d.class, p.folds_string());
                });
            }
        }
    }

    #[test]
    fn limits_match_exact() {
        for (d, ws) in suite() {
            let ctx = Ctx::new(&d, ParamMode::Equal);
            for lam in &ws {
                let id = identity_y(&d);
                if PathSpace::for_weight(&ctx, id.clone(), lam, None).unwrap().len() > 8 {
                    continue;
                }
                let tag = format!("{:?} {:?} {lam:?}", d.type_x, d.class);
                let one = FinElem::identity(d.n);
                let e = e_at_v0(&d, &id, lam, None).unwrap();
                assert!(differences(&e, &e_at_v0_exact(&d, &id, lam).unwrap()).is_empty(), "v0 {tag}");
                let e = e_at_vinf(&d, lam, None).unwrap();
                assert!(is_q_positive(&e), "{tag}");
                assert!(differences(&e, &e_at_vinf_exact(&d, lam).unwrap()).is_empty(), "vinf {tag}");
                let e = e_at_q0(&d, &one, lam, None).unwrap();
                assert!(differences(&e, &e_at_q0_exact(&d, &one, lam).unwrap()).is_empty(), "q0 {tag}");
                let e = e_at_qinf(&d, lam, None).unwrap();
                assert!(differences(&e, &e_at_qinf_exact(&d, lam).unwrap()).is_empty(), "qinf {tag}");
            }
        }
    }

    #[test]
    fn twisted_starting_points() {
        let d = d32();
        let lam = amb(-1, 1);
        for u in finite_weyl_group(&d) {
            let uy = WeylElem::finite(Side::Y, 2, u.clone());
            assert!(differences(&e_at_v0(&d, &uy, &lam, None).unwrap(), &e_at_v0_exact(&d, &uy, &lam).unwrap()).is_empty());
            assert!(differences(&e_at_q0(&d, &u, &lam, None).unwrap(), &e_at_q0_exact(&d, &u, &lam).unwrap()).is_empty());
        }
        let t = WeylElem::from_word(&d, Side::Y, &[0, 1]);
        assert!(differences(&e_at_v0(&d, &t, &lam, None).unwrap(), &e_at_v0_exact(&d, &t, &lam).unwrap()).is_empty());
    }

    #[test]
    fn symmetric_v0() {
        for (d, _) in suite() {
            for lam in [vec![1, 0], vec![0, 1], vec![1, 1]] {
                if !d.in_lattice(Side::X, &lam) {
                    continue;
                }
                let a = p_at_v0(&d, &lam).unwrap();
                assert!(differences(&a, &p_at_v0_exact(&d, &lam).unwrap()).is_empty(), "{:?} {lam:?}", d.class);
            }
        }
    }

    #[test]
    fn antidominant_orbit_coefficients_are_q_powers() {
        for (d, ws) in suite() {
            let ctx = Ctx::new(&d, ParamMode::Equal);
            for lam in ws.iter().filter(|l| l.iter().all(|&c| c <= 0)) {
                let sp = PathSpace::for_weight(&ctx, identity_y(&d), lam, None).unwrap();
                if sp.len() > 10 {
                    continue;
                }
                let rev = reverse_quantum_paths(&sp);
                let mut orbit: Vec<Wt> = finite_weyl_group(&d).iter().map(|u| u.act(Side::X, lam)).collect();
                orbit.sort();
                orbit.dedup();
                for mu in orbit {
                    assert_eq!(rev.iter().filter(|p| p.wt == mu).count(), 1, "{:?} {lam:?} {mu:?}", d.class);
                }
            }
        }
    }
}
