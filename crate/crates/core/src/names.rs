//! Affine type names such as `D3^2` or `A4^2dag`, and weight input in either basis.

use crate::ambient;
use crate::error::{Error, Result};
use crate::root_data::{AffineClass, Datum, Family, FiniteType, Lattice};
use crate::xpoly::Wt;

/// A parsed affine type name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineName {
    pub name: String,
    pub type_x: FiniteType,
    pub class: AffineClass,
    pub lattices: (Lattice, Lattice),
}

/// Coordinates in which weights are read and printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Fundamental weights of `X` (of `C_n` for the Koornwinder family).
    Omega,
    /// `e_i` coordinates, for classical types `B`, `C`, `D`.
    Ambient,
}

impl Basis {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "omega" => Ok(Basis::Omega),
            "ambient" => Ok(Basis::Ambient),
            o => Err(Error::Invalid(format!("basis '{o}' (expected omega or ambient)"))),
        }
    }
}

impl AffineName {
    /// Accepts `X_n`, `X_n^1`, `D_{n+1}^2`, `A_{2n-1}^2`, `E6^2`, `D4^3`, `A_{2n}^2`, `A_{2n}^2dag`, `K_n`.
    pub fn parse(s: &str) -> Result<Self> {
        let raw = s.trim();
        let (body, dag) = match raw.strip_suffix("dag") {
            Some(b) => (b, true),
            None => (raw, false),
        };
        let (base, twist) = match body.split_once('^') {
            Some((b, t)) => {
                let t: u32 = t.parse().map_err(|_| Error::Invalid(format!("bad twist in type '{raw}'")))?;
                (b, t)
            }
            None => (body, 1),
        };
        let bad = || Error::Invalid(format!("unknown affine type '{raw}'"));
        if dag && !(twist == 2 && base.starts_with('A')) {
            return Err(bad());
        }
        if let Some(r) = base.strip_prefix('K') {
            let n: usize = r.parse().map_err(|_| bad())?;
            if twist != 1 {
                return Err(bad());
            }
            return Self::make(raw, FiniteType::new(Family::B, n)?, AffineClass::Koornwinder, Lattice::Q);
        }
        let t = FiniteType::parse(base)?;
        match (twist, t.family) {
            (1, _) => Self::make(raw, t, AffineClass::Untwisted, Lattice::P),
            (2, Family::A) if t.rank % 2 == 0 && t.rank >= 4 => {
                let class = if dag { AffineClass::MixedA2n2Dagger } else { AffineClass::MixedA2n2 };
                Self::make(raw, FiniteType::new(Family::B, t.rank / 2)?, class, Lattice::Q)
            }
            (2, Family::A) if t.rank % 2 == 1 && t.rank >= 5 => {
                Self::make(raw, FiniteType::new(Family::C, t.rank.div_ceil(2))?, AffineClass::DualUntwisted, Lattice::P)
            }
            (2, Family::D) if t.rank >= 3 => {
                Self::make(raw, FiniteType::new(Family::B, t.rank - 1)?, AffineClass::DualUntwisted, Lattice::P)
            }
            (2, Family::E) if t.rank == 6 => {
                Self::make(raw, FiniteType::new(Family::F, 4)?, AffineClass::DualUntwisted, Lattice::P)
            }
            (3, Family::D) if t.rank == 4 => {
                Self::make(raw, FiniteType::new(Family::G, 2)?, AffineClass::DualUntwisted, Lattice::P)
            }
            _ => Err(bad()),
        }
    }

    fn make(raw: &str, type_x: FiniteType, class: AffineClass, lat: Lattice) -> Result<Self> {
        Ok(AffineName { name: raw.to_string(), type_x, class, lattices: (lat, lat) })
    }

    /// Build the datum, optionally overriding the default lattices.
    pub fn datum(&self, lattices: Option<(Lattice, Lattice)>) -> Result<Datum> {
        let (lx, ly) = lattices.unwrap_or(self.lattices);
        Datum::new(self.type_x, lx, ly, self.class)
    }

    /// Ambient coordinates for classical families, fundamental weights otherwise.
    pub fn default_basis(&self) -> Basis {
        if ambient::supported(&self.type_x) {
            Basis::Ambient
        } else {
            Basis::Omega
        }
    }
}

/// Comma-separated integers.
pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Invalid(format!("'{p}' is not an integer in '{s}'"))))
        .collect()
}

/// Convert user coordinates to fundamental-weight coordinates of `X` and check lattice membership.
pub fn weight_from_input(d: &Datum, basis: Basis, coords: &[i64]) -> Result<Wt> {
    if coords.len() != d.n {
        return Err(Error::Invalid(format!("weight has {} coordinates, rank is {}", coords.len(), d.n)));
    }
    let w = match basis {
        Basis::Ambient => ambient::from_ambient(&d.type_x, coords)?,
        Basis::Omega if d.class.is_koornwinder_family() => {
            let mut w = coords.to_vec();
            w[d.n - 1] *= 2;
            w
        }
        Basis::Omega => coords.to_vec(),
    };
    if !d.in_lattice(crate::root_data::Side::X, &w) {
        return Err(Error::LatticeUnsupported(format!("weight {coords:?} is not in the X lattice")));
    }
    Ok(w)
}

/// Render fundamental-weight coordinates of `X` in the requested basis.
pub fn weight_to_output(d: &Datum, basis: Basis, w: &[i64]) -> Result<String> {
    match basis {
        Basis::Ambient => ambient::render(&d.type_x, w),
        Basis::Omega => {
            let mut c = w.to_vec();
            if d.class.is_koornwinder_family() {
                c[d.n - 1] /= 2;
            }
            Ok(format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        let cases = [
            ("A2", "A2", AffineClass::Untwisted),
            ("G2^1", "G2", AffineClass::Untwisted),
            ("D3^2", "B2", AffineClass::DualUntwisted),
            ("A5^2", "C3", AffineClass::DualUntwisted),
            ("E6^2", "F4", AffineClass::DualUntwisted),
            ("D4^3", "G2", AffineClass::DualUntwisted),
            ("K2", "B2", AffineClass::Koornwinder),
            ("A4^2", "B2", AffineClass::MixedA2n2),
            ("A4^2dag", "B2", AffineClass::MixedA2n2Dagger),
        ];
        for (s, t, c) in cases {
            let a = AffineName::parse(s).unwrap();
            assert_eq!((a.type_x.to_string().as_str(), a.class), (t, c), "{s}");
            a.datum(None).unwrap();
        }
        for s in ["A3^3", "B2dag", "Z2", "A2^x", "K2^2"] {
            assert!(AffineName::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn weights() {
        let a = AffineName::parse("D3^2").unwrap();
        let d = a.datum(None).unwrap();
        assert_eq!(weight_from_input(&d, Basis::Ambient, &[-1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(weight_to_output(&d, Basis::Ambient, &[0, 1]).unwrap(), "(1/2,1/2)");
        let k = AffineName::parse("A4^2").unwrap().datum(None).unwrap();
        assert_eq!(weight_from_input(&k, Basis::Omega, &[0, 1]).unwrap(), vec![0, 2]);
        assert_eq!(weight_to_output(&k, Basis::Omega, &[0, 2]).unwrap(), "(0,1)");
        assert!(weight_from_input(&k, Basis::Ambient, &[1]).is_err());
        assert!(parse_ints("1,x").is_err());
    }
}
