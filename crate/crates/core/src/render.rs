//! Text and `poly-v1` JSON output for polynomials in `X`.

use crate::ambient;
use crate::coeff::CoeffRat;
use crate::error::Result;
use crate::names::{weight_to_output, Basis};
use crate::root_data::Datum;
use crate::xpoly::{Wt, XPoly};
use serde_json::{json, Value};

fn sort_key(d: &Datum, basis: Basis, w: &[i64]) -> Result<Vec<i64>> {
    match basis {
        Basis::Ambient => ambient::to_ambient_doubled(&d.type_x, w),
        Basis::Omega => Ok(w.to_vec()),
    }
}

fn sorted_terms<'p>(d: &Datum, basis: Basis, p: &'p XPoly<CoeffRat>) -> Result<Vec<(&'p Wt, &'p CoeffRat)>> {
    let mut keyed = Vec::new();
    for (w, c) in p.terms() {
        keyed.push((sort_key(d, basis, w)?, w, c));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, w, c)| (w, c)).collect())
}

fn coeff_factor(c: &CoeffRat, m: i64) -> String {
    let s = c.render(m);
    let simple = c.den().is_one() && c.num().len() == 1;
    if simple {
        s
    } else {
        format!("({s})")
    }
}

/// One line such as `X^(-1,0) + X^(0,1) + (1 + q)`.
pub fn poly_text(d: &Datum, basis: Basis, p: &XPoly<CoeffRat>) -> Result<String> {
    let mut parts = Vec::new();
    for (w, c) in sorted_terms(d, basis, p)? {
        let zero = w.iter().all(|&x| x == 0);
        let x = format!("X^{}", weight_to_output(d, basis, w)?);
        let term = if zero {
            coeff_factor(c, d.m)
        } else if c.den().is_one() && c.num().is_one() {
            x
        } else {
            format!("{}*{x}", coeff_factor(c, d.m))
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return Ok("0".to_string());
    }
    Ok(parts.join(" + "))
}

/// The `poly-v1` JSON document.
pub fn poly_json(d: &Datum, datum_ref: &str, basis: Basis, p: &XPoly<CoeffRat>, normalization: &str) -> Result<Value> {
    let mut terms = Vec::new();
    for (w, c) in sorted_terms(d, basis, p)? {
        terms.push(json!({
            "x_exponents": w,
            "x": weight_to_output(d, basis, w)?,
            "coeff": { "num": c.num().render(d.m), "den": c.den().render(d.m) },
        }));
    }
    Ok(json!({
        "schema": "poly-v1",
        "datum_ref": datum_ref,
        "basis": match basis { Basis::Omega => "omega", Basis::Ambient => "ambient" },
        "exponent_coordinates": "omega",
        "normalization_scalar": normalization,
        "terms": terms,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coeff;
    use crate::names::AffineName;
    use crate::poly::{LaurentPoly, Var};

    #[test]
    fn golden_text() {
        let d = AffineName::parse("D3^2").unwrap().datum(None).unwrap();
        let mut p = XPoly::zero(2);
        for w in [vec![-1, 0], vec![1, -2], vec![-1, 2], vec![1, 0]] {
            p.add_term(w, &CoeffRat::from_int(1));
        }
        p.add_term(vec![0, 0], &CoeffRat::from_laurent(LaurentPoly::one() + LaurentPoly::var(Var::Q)));
        let s = poly_text(&d, Basis::Ambient, &p).unwrap();
        assert_eq!(s, "X^(-1,0) + X^(0,-1) + (1 + q) + X^(0,1) + X^(1,0)");
        let j = poly_json(&d, "D3^2", Basis::Ambient, &p, "1").unwrap();
        assert_eq!(j["terms"].as_array().unwrap().len(), 5);
        assert_eq!(j["terms"][2]["coeff"]["num"], "1 + q");
        assert_eq!(poly_text(&d, Basis::Omega, &XPoly::<CoeffRat>::zero(2)).unwrap(), "0");
    }
}
