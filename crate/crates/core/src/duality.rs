//! The `w_0`-dualities: coefficient symmetry, the `*`-involution, and the path bijection.

use crate::error::Result;
use crate::hecke::Ctx;
use crate::poly::{mono_mul, mono_pow, LaurentPoly, Var};
use crate::ram_yip::{e_lambda, Formula, PathSpace};
use crate::root_data::Side;
use crate::weyl::{longest_element, u_lambda, WeylElem};
use crate::xpoly::{wt_neg, Wt, XPoly};
use std::collections::HashSet;

/// `q ↦ q^{-1}` and `v_α ↦ v_α^{-1}` for every parameter.
pub fn star_scalar(p: &LaurentPoly) -> LaurentPoly {
    Var::ALL.iter().fold(p.clone(), |acc, &v| acc.invert_var(v))
}

/// `-w_0 λ`.
pub fn dual_weight(ctx: &Ctx, lam: &[i64]) -> Wt {
    wt_neg(&longest_element(ctx.d).act(Side::X, lam))
}

/// `[X^{-w_0 μ}] E_{-w_0 λ} = [X^μ] E_λ` for every `μ`.
pub fn check_dual_coefficients(ctx: &Ctx, lam: &[i64]) -> Result<bool> {
    let w0 = longest_element(ctx.d);
    let e = e_lambda(ctx, lam, Formula::General, None)?;
    let f = e_lambda(ctx, &dual_weight(ctx, lam), Formula::General, None)?;
    let moved = e.map_num(|n| n.map_weights(|w| wt_neg(&w0.act(Side::X, w))));
    Ok(moved.same_as(&f))
}

/// `E_{-w_0 λ}^* = v_{w_0 u_λ^{-1}}^{-1} v_{u_λ} T_{w_0} E_λ`.
pub fn check_star(ctx: &Ctx, lam: &[i64]) -> Result<bool> {
    let d = ctx.d;
    let w0 = longest_element(d);
    let ul = u_lambda(d, Side::X, lam);
    let e = e_lambda(ctx, lam, Formula::General, None)?;
    let f = e_lambda(ctx, &dual_weight(ctx, lam), Formula::General, None)?;
    let scale = mono_mul(&mono_pow(&ctx.v_fin(&w0.mul(&ul.inv())), -1), &ctx.v_fin(&ul));
    let rhs = ctx.t_fin(&w0, &e.num).scale_laurent(&LaurentPoly::mono(scale));
    let mut lhs = XPoly::zero(d.n);
    for (w, c) in f.num.terms() {
        lhs.add_term(wt_neg(w), &star_scalar(c));
    }
    let lhs_den = star_scalar(&f.den.expand());
    Ok(lhs.scale_laurent(&e.den.expand()) == rhs.scale_laurent(&lhs_den))
}

/// The map `p_J ↦ p_J^*` from `B(w_0; m_λ)` to `B(id; m_λ)`: same `J`, `z^* = w_0 z`, signs swapped.
pub fn check_path_duality(ctx: &Ctx, lam: &[i64]) -> Result<bool> {
    let d = ctx.d;
    let w0 = longest_element(d);
    let w0y = WeylElem::finite(Side::Y, d.n, w0.clone());
    let top = PathSpace::for_weight(ctx, w0y.clone(), lam, None)?;
    let bottom = PathSpace::for_weight(ctx, WeylElem::identity(d, Side::Y), lam, None)?;
    let (a, b) = (top.paths(), bottom.paths());
    let mut image = HashSet::new();
    for (p, q) in a.iter().zip(&b) {
        let zs_ok = top.z_sequence(p).iter().zip(bottom.z_sequence(q)).all(|(z, zs)| w0y.mul(z) == zs);
        let ok = p.folds == q.folds
            && zs_ok
            && w0y.mul(&p.end) == q.end
            && w0.act(Side::X, &p.wt) == q.wt
            && w0.mul(&p.dir) == q.dir
            && p.positive_folds() == q.negative_folds()
            && p.negative_folds() == q.positive_folds();
        if !ok {
            return Ok(false);
        }
        image.insert(q.folds.clone());
    }
    Ok(a.len() == b.len() && image.len() == b.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{AffineClass, Datum, FiniteType, Lattice, ParamMode};

    #[test]
    fn dualities_on_small_weights() {
        for (t, l, c) in [
            ("A2", Lattice::P, AffineClass::Untwisted),
            ("B2", Lattice::P, AffineClass::DualUntwisted),
            ("B2", Lattice::Q, AffineClass::Koornwinder),
            ("B2", Lattice::Q, AffineClass::MixedA2n2Dagger),
        ] {
            let d = Datum::new(FiniteType::parse(t).unwrap(), l, l, c).unwrap();
            let ctx = Ctx::new(&d, ParamMode::General);
            for lam in [vec![-1, 0], vec![1, 0], vec![0, 1], vec![1, -1], vec![0, -2]] {
                if !d.in_lattice(Side::X, &lam) {
                    continue;
                }
                assert!(check_dual_coefficients(&ctx, &lam).unwrap(), "{t} {c:?} {lam:?} coefficients");
                assert!(check_star(&ctx, &lam).unwrap(), "{t} {c:?} {lam:?} star");
                assert!(check_path_duality(&ctx, &lam).unwrap(), "{t} {c:?} {lam:?} paths");
            }
        }
    }
}
