//! Defining relations of the polynomial representation and inversion counts of translations.

use crate::coeff::{mono_minus, Coeff};
use crate::error::{Error, Result};
use crate::hecke::Ctx;
use crate::poly::mono_pow;
use crate::root_data::{AffineClass, AffineWeight, Datum, Orbit, RootSign, Side};
use crate::weyl::WeylElem;
use crate::xpoly::{Wt, XPoly};

/// Sizes of `Inv(t_μ)` split by `W(X̃)`-orbit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InversionCounts {
    pub short: i64,
    pub long: i64,
    pub zero: i64,
}

fn require_dominant(d: &Datum, mu: &[i64]) -> Result<()> {
    if mu.len() != d.n || !d.in_lattice(Side::Y, mu) {
        return Err(Error::Invalid(format!("{mu:?} is not in the Y lattice")));
    }
    if !d.y.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    Ok(())
}

/// Count the inversions of `t_μ` by scanning every affine root in a window of `δ`-degrees.
pub fn inversion_counts_enumerated(d: &Datum, mu: &[i64]) -> Result<InversionCounts> {
    require_dominant(d, mu)?;
    let t = WeylElem::translation(d, Side::X, mu.to_vec());
    let bound = d.x.roots.iter().map(|r| d.pair_m_sides(Side::X, &r.omega, mu).abs()).max().unwrap_or(0) + 2 * d.m;
    let mut out = InversionCounts::default();
    for r in &d.x.roots {
        for delta in -bound..=bound {
            let a = AffineWeight::new(Side::X, r.omega.clone(), delta);
            if d.root_sign(&a) != RootSign::Positive {
                continue;
            }
            if d.root_sign(&t.act_unchecked(d, &a)) != RootSign::Negative {
                continue;
            }
            match d.orbit(&a) {
                Some(Orbit::Short) => out.short += 1,
                Some(Orbit::Long) => out.long += 1,
                Some(Orbit::Zero) => out.zero += 1,
                None => {}
            }
        }
    }
    Ok(out)
}

/// Inversion counts of `t_μ` from pairings with the half sums of short and long positive coroots of `Y`.
pub fn inversion_counts_formula(d: &Datum, mu: &[i64]) -> Result<InversionCounts> {
    require_dominant(d, mu)?;
    let (mut short_cor, mut long_cor) = (0i64, 0i64);
    for &k in &d.y.positive {
        let r = &d.y.roots[k];
        let coroot_long = if d.y.simply_laced { r.long } else { !r.long };
        if coroot_long {
            long_cor += r.coroot_pair(mu);
        } else {
            short_cor += r.coroot_pair(mu);
        }
    }
    let (short, long) = if d.class == AffineClass::Untwisted { (short_cor, long_cor) } else { (long_cor, short_cor) };
    let mut out = InversionCounts { short, long, zero: 0 };
    if d.has_zero_orbit(Side::X) {
        let halve = |x: i64| {
            if x % 2 == 0 {
                Ok(x / 2)
            } else {
                Err(Error::FractionalExponent(format!("odd orbit count {x} for {mu:?}")))
            }
        };
        if d.x.simple_long[d.n - 1] {
            out.long = halve(out.long)?;
            out.zero = out.long;
        } else {
            out.short = halve(out.short)?;
            out.zero = out.short;
        }
    }
    Ok(out)
}

fn differ<C: Coeff>(what: String, a: &XPoly<C>, b: &XPoly<C>) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RelationFailed(what))
    }
}

/// Order of `s_i s_j` in `W(X̃)`, if at most 6.
pub fn braid_order(d: &Datum, i: usize, j: usize) -> Option<usize> {
    let sij = WeylElem::simple(d, Side::X, i).mul(&WeylElem::simple(d, Side::X, j));
    let mut w = sij.clone();
    for k in 1..=6 {
        if w.is_identity() {
            return Some(k);
        }
        w = w.mul(&sij);
    }
    None
}

/// `(T_i - v)(T_i + v^{-1}) = 0` and `T_i T_i^{-1} = 1` on each test polynomial.
pub fn check_quadratic<C: Coeff>(ctx: &Ctx, tests: &[XPoly<C>]) -> Result<usize> {
    let mut n = 0;
    for f in tests {
        for i in 0..=ctx.rank() {
            let v = ctx.v_node(Side::X, i);
            let tf = ctx.t(i, f);
            let lhs = ctx.t(i, &tf).sub(&tf.scale_laurent(&mono_minus(v, mono_pow(&v, -1))));
            differ(format!("quadratic relation at node {i}"), &lhs, f)?;
            differ(format!("T_{i} T_{i}^-1 at node {i}"), &ctx.t(i, &ctx.t_inv(i, f)), f)?;
            n += 2;
        }
    }
    Ok(n)
}

/// Braid relations `T_i T_j T_i ⋯ = T_j T_i T_j ⋯` for every pair of affine nodes of finite order.
pub fn check_braid<C: Coeff>(ctx: &Ctx, tests: &[XPoly<C>]) -> Result<usize> {
    let mut n = 0;
    for i in 0..=ctx.rank() {
        for j in i + 1..=ctx.rank() {
            let Some(m) = braid_order(ctx.d, i, j) else { continue };
            for f in tests {
                let (mut a, mut b) = (f.clone(), f.clone());
                for k in 0..m {
                    a = ctx.t(if k % 2 == 0 { i } else { j }, &a);
                    b = ctx.t(if k % 2 == 0 { j } else { i }, &b);
                }
                differ(format!("braid relation of order {m} between nodes {i} and {j}"), &a, &b)?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `φ_i X^λ = X^{s_i λ} φ_i` (with `s_i` acting on `X̃`) and agreement of the two forms of `φ_i`.
pub fn check_intertwiner<C: Coeff>(ctx: &Ctx, lams: &[Wt], tests: &[XPoly<C>]) -> Result<usize> {
    let d = ctx.d;
    let mut n = 0;
    for i in 0..=ctx.rank() {
        let s = WeylElem::simple(d, Side::X, i);
        for f in tests {
            let phi_f = ctx.phi_cleared(i, f, false);
            differ(format!("two forms of phi_{i}"), &phi_f, &ctx.phi_cleared(i, f, true))?;
            n += 1;
            for lam in lams {
                let x = AffineWeight::new(Side::X, lam.clone(), 0);
                let lhs = ctx.phi_cleared(i, &ctx.x_affine(&x, f), false);
                let rhs = ctx.x_affine(&s.act_unchecked(d, &x), &phi_f);
                differ(format!("intertwiner relation for phi_{i} and X^{lam:?}"), &lhs, &rhs)?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `Y^μ Y^ν = Y^{μ+ν}` on each test polynomial.
pub fn check_y_homomorphism<C: Coeff>(ctx: &Ctx, pairs: &[(Wt, Wt)], tests: &[XPoly<C>]) -> Result<usize> {
    let mut n = 0;
    for (mu, nu) in pairs {
        let am = AffineWeight::new(Side::Y, mu.clone(), 0);
        let an = AffineWeight::new(Side::Y, nu.clone(), 0);
        for f in tests {
            let lhs = ctx.y(&am, &ctx.y(&an, f));
            let rhs = ctx.y(&am.add(&an), f);
            differ(format!("Y^{mu:?} Y^{nu:?}"), &lhs, &rhs)?;
            n += 1;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;
    use crate::root_data::{FiniteType, Lattice, ParamMode};

    fn datum(t: &str, l: Lattice, c: AffineClass) -> Datum {
        Datum::new(FiniteType::parse(t).unwrap(), l, l, c).unwrap()
    }

    fn monomials(n: usize) -> Vec<XPoly<LaurentPoly>> {
        let mut out = Vec::new();
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                let mut w = vec![0; n];
                w[0] = a;
                w[n - 1] += b;
                out.push(XPoly::monomial(w, LaurentPoly::one()));
            }
        }
        out
    }

    #[test]
    fn koornwinder_relations() {
        let d = datum("B2", Lattice::Q, AffineClass::Koornwinder);
        let ctx = Ctx::new(&d, ParamMode::General);
        let tests: Vec<_> = monomials(2).into_iter().filter(|f| f.terms().all(|(w, _)| d.in_lattice(Side::X, w))).collect();
        assert!(check_quadratic(&ctx, &tests).unwrap() > 0);
        assert!(check_braid(&ctx, &tests).unwrap() > 0);
        let lams = vec![d.x.simple_root(0), d.x.simple_root(1)];
        assert!(check_intertwiner(&ctx, &lams, &tests).unwrap() > 0);
    }

    #[test]
    fn wrong_relation_is_detected() {
        let d = datum("A2", Lattice::P, AffineClass::Untwisted);
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let f = XPoly::monomial(vec![1, 0], LaurentPoly::one());
        assert!(differ("x".into(), &ctx.t(1, &f), &f).is_err());
        assert_eq!(braid_order(&d, 1, 2), Some(3));
        assert_eq!(braid_order(&d, 0, 1), Some(3));
    }

    #[test]
    fn g2_translation_counts() {
        let d = datum("G2", Lattice::P, AffineClass::Untwisted);
        for mu in [vec![1, 0], vec![0, 1], vec![2, 3]] {
            assert_eq!(inversion_counts_enumerated(&d, &mu).unwrap(), inversion_counts_formula(&d, &mu).unwrap());
        }
        assert!(inversion_counts_formula(&d, &[-1, 0]).is_err());
    }
}
