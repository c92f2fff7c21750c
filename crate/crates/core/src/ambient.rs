//! Conversion between fundamental-weight and `e_i` coordinates for types B, C, D.

use crate::error::{Error, Result};
use crate::root_data::{Family, FiniteType};
use crate::xpoly::Wt;

/// Whether `e_i` coordinates are available for this type.
pub fn supported(t: &FiniteType) -> bool {
    matches!(t.family, Family::B | Family::C | Family::D)
}

/// `2·(e-coordinates)` of a vector given in fundamental weights.
pub fn to_ambient_doubled(t: &FiniteType, omega: &[i64]) -> Result<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![0i64; n];
    let mut add = |upto: usize, c: i64, last_sign: i64| {
        for (k, x) in a.iter_mut().enumerate().take(upto) {
            *x += if k + 1 == upto && last_sign < 0 { -c } else { c };
        }
    };
    match t.family {
        Family::B => {
            for i in 0..n - 1 {
                add(i + 1, 2 * omega[i], 1);
            }
            add(n, omega[n - 1], 1);
        }
        Family::C => {
            for (i, &c) in omega.iter().enumerate() {
                add(i + 1, 2 * c, 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                add(i + 1, 2 * omega[i], 1);
            }
            add(n, omega[n - 2], -1);
            add(n, omega[n - 1], 1);
        }
        _ => return Err(Error::Invalid(format!("ambient coordinates are not available for type {}", name(t)))),
    }
    Ok(a)
}

/// Fundamental-weight coordinates of `Σ a_i e_i`, when integral.
pub fn from_ambient(t: &FiniteType, a: &[i64]) -> Result<Wt> {
    let n = t.rank;
    if a.len() != n {
        return Err(Error::Invalid(format!("expected {n} ambient coordinates, got {}", a.len())));
    }
    let mut c: Wt = (0..n.saturating_sub(1)).map(|i| a[i] - a[i + 1]).collect();
    match t.family {
        Family::B => c.push(2 * a[n - 1]),
        Family::C => c.push(a[n - 1]),
        Family::D => c.push(a[n - 2] + a[n - 1]),
        _ => return Err(Error::Invalid(format!("ambient coordinates are not available for type {}", name(t)))),
    }
    Ok(c)
}

/// `(a_1, …, a_n)` with half-integers written as `p/2`.
pub fn render(t: &FiniteType, omega: &[i64]) -> Result<String> {
    let d = to_ambient_doubled(t, omega)?;
    let parts: Vec<String> =
        d.iter().map(|&x| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") }).collect();
    Ok(format!("({})", parts.join(",")))
}

fn name(t: &FiniteType) -> String {
    format!("{:?}{}", t.family, t.rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["B2", "B3", "C2", "C3", "D3", "D4"] {
            let t = FiniteType::parse(s).unwrap();
            for v in [vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![2, -1, 3, 1], vec![0, 0, 2, -2]] {
                let w = &v[..t.rank];
                let d = to_ambient_doubled(&t, w).unwrap();
                if d.iter().all(|x| x % 2 == 0) {
                    let a: Vec<i64> = d.iter().map(|x| x / 2).collect();
                    assert_eq!(from_ambient(&t, &a).unwrap(), w, "{s}");
                }
            }
        }
    }

    #[test]
    fn spin_weight() {
        let t = FiniteType::parse("B2").unwrap();
        assert_eq!(render(&t, &[0, 1]).unwrap(), "(1/2,1/2)");
        assert_eq!(render(&t, &[-1, 2]).unwrap(), "(0,1)");
        assert_eq!(from_ambient(&t, &[0, 1]).unwrap(), vec![-1, 2]);
    }
}
