//! Cartan data, finite root systems and the double affine datum `(X, Y)`.
//!
//! Classical vectors of either lattice are stored in fundamental-weight
//! coordinates, so `⟨α_i^∨, λ⟩` is simply `λ[i]`.

use crate::error::{Error, Result};
use crate::linalg::{dot, inverse, mat_vec, solve_integral, transpose, Mat};
use crate::poly::{mono_mul, mono_pow, mono_var, Mono, Var, NVARS, ONE_MONO};
use crate::xpoly::Wt;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite Cartan type such as `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteType {
    pub family: Family,
    pub rank: usize,
}

impl FiniteType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(FiniteType { family, rank })
        } else {
            Err(Error::Invalid(format!("no finite Cartan type {:?}{}", family, rank)))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let f = chars.next().ok_or_else(|| Error::Invalid("empty Cartan type".into()))?;
        let family = match f.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::Invalid(format!("unknown Cartan family in '{s}'"))),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Invalid(format!("bad rank in '{s}'")))?;
        Self::new(family, rank)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Label of the Langlands dual type.
    pub fn dual(&self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        FiniteType { family, rank: self.rank }
    }

    /// Bourbaki-numbered Cartan matrix, `a[i][j] = ⟨α_i^∨, α_j⟩`.
    pub fn cartan(&self) -> Mat {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| bond(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (2..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
            Family::F => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            Family::G => bond(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lattice {
    /// Weight lattice.
    P,
    /// Root lattice.
    Q,
}

impl Lattice {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "P" | "p" => Ok(Lattice::P),
            "Q" | "q" => Ok(Lattice::Q),
            o => Err(Error::LatticeUnsupported(format!("'{o}' (only P and Q are supported)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AffineClass {
    Untwisted,
    DualUntwisted,
    Koornwinder,
    MixedA2n2,
    MixedA2n2Dagger,
}

impl AffineClass {
    pub fn is_dual(&self) -> bool {
        !matches!(self, AffineClass::Untwisted)
    }

    pub fn is_koornwinder_family(&self) -> bool {
        matches!(self, AffineClass::Koornwinder | AffineClass::MixedA2n2 | AffineClass::MixedA2n2Dagger)
    }

    pub fn name(&self) -> &'static str {
        match self {
            AffineClass::Untwisted => "untwisted",
            AffineClass::DualUntwisted => "dual-untwisted",
            AffineClass::Koornwinder => "koornwinder",
            AffineClass::MixedA2n2 => "mixed-a2n2",
            AffineClass::MixedA2n2Dagger => "mixed-a2n2-dagger",
        }
    }
}

/// Which half of the double affine datum a vector or group element lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::X => "X",
            Side::Y => "Y",
        }
    }
}

/// A root of a finite root system.
#[derive(Clone, Debug)]
pub struct Root {
    /// Fundamental-weight coordinates.
    pub omega: Wt,
    /// Simple-root coordinates.
    pub simple: Wt,
    /// Coordinates of the coroot in simple coroots.
    pub coroot: Wt,
    pub long: bool,
    pub positive: bool,
    /// `root = s_{word[0]} ⋯ s_{word[k-1]} α_{base}`.
    pub word: Vec<usize>,
    pub base: usize,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    /// `⟨β^∨, λ⟩` for `λ` in fundamental-weight coordinates.
    pub fn coroot_pair(&self, lam: &[i64]) -> i64 {
        dot(&self.coroot, lam)
    }
}

/// A finite crystallographic root system given by its Cartan matrix.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: Mat,
    pub rank: usize,
    pub roots: Vec<Root>,
    pub positive: Vec<usize>,
    index: HashMap<Wt, usize>,
    /// Half squared lengths of the simple roots.
    pub sym: Vec<i64>,
    pub simple_long: Vec<bool>,
    pub simply_laced: bool,
    adj: Mat,
    det: i64,
}

impl RootSystem {
    pub fn new(cartan: Mat) -> Self {
        let n = cartan.len();
        let sym = symmetrizer(&cartan);
        let maxs = *sym.iter().max().unwrap();
        let simply_laced = sym.iter().all(|&d| d == maxs);
        let norm = |c: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += c[i] * c[j] * sym[i] * cartan[i][j];
                }
            }
            s / 2
        };
        let mut roots: Vec<Root> = Vec::new();
        let mut index = HashMap::new();
        let mut queue = std::collections::VecDeque::new();
        for i in 0..n {
            let mut simple = vec![0; n];
            simple[i] = 1;
            for sign in [1i64, -1] {
                let simple: Wt = simple.iter().map(|x| x * sign).collect();
                let omega = mat_vec(&cartan, &simple);
                if index.contains_key(&omega) {
                    continue;
                }
                index.insert(omega.clone(), roots.len());
                queue.push_back(roots.len());
                roots.push(Root {
                    omega,
                    simple,
                    coroot: Vec::new(),
                    long: false,
                    positive: sign > 0,
                    word: if sign > 0 { vec![] } else { vec![i] },
                    base: i,
                });
            }
        }
        while let Some(k) = queue.pop_front() {
            for i in 0..n {
                let r = &roots[k];
                let p = r.omega[i];
                if p == 0 {
                    continue;
                }
                let mut simple = r.simple.clone();
                simple[i] -= p;
                let omega = mat_vec(&cartan, &simple);
                if index.contains_key(&omega) {
                    continue;
                }
                let mut word = vec![i];
                word.extend(r.word.iter().copied());
                let base = r.base;
                let positive = simple.iter().all(|&c| c >= 0);
                index.insert(omega.clone(), roots.len());
                queue.push_back(roots.len());
                roots.push(Root { omega, simple, coroot: Vec::new(), long: false, positive, word, base });
            }
        }
        for r in roots.iter_mut() {
            let nb = norm(&r.simple);
            r.coroot = (0..n).map(|j| r.simple[j] * sym[j] / nb).collect();
            r.long = !simply_laced && nb == maxs;
        }
        let positive = (0..roots.len()).filter(|&k| roots[k].positive).collect();
        let simple_long = (0..n).map(|i| !simply_laced && sym[i] == maxs).collect();
        let (adj, det) = inverse(&cartan);
        RootSystem { cartan, rank: n, roots, positive, index, sym, simple_long, simply_laced, adj, det }
    }

    pub fn find(&self, omega: &[i64]) -> Option<usize> {
        self.index.get(omega).copied()
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    /// Simple root `α_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Wt {
        (0..self.rank).map(|k| self.cartan[k][i]).collect()
    }

    /// Index of `α_i` in `roots`.
    pub fn simple_index(&self, i: usize) -> usize {
        self.find(&self.simple_root(i)).unwrap()
    }

    pub fn highest_root(&self) -> usize {
        *self.positive.iter().max_by_key(|&&k| self.roots[k].height()).unwrap()
    }

    pub fn dominant_short_root(&self) -> usize {
        *self
            .positive
            .iter()
            .find(|&&k| !self.roots[k].long && self.roots[k].omega.iter().all(|&c| c >= 0))
            .unwrap()
    }

    /// Simple-root coordinates of a vector, when integral.
    pub fn to_simple(&self, omega: &[i64]) -> Option<Wt> {
        solve_integral(&self.adj, self.det, omega)
    }

    /// Rational simple-root coordinates `num / den`.
    pub fn to_simple_rational(&self, omega: &[i64]) -> (Wt, i64) {
        (mat_vec(&self.adj, omega), self.det)
    }

    pub fn is_dominant(&self, omega: &[i64]) -> bool {
        omega.iter().all(|&c| c >= 0)
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// `⟨2ρ^∨, β⟩` for a root given in simple-root coordinates.
    pub fn two_rho_check(&self, simple: &[i64]) -> i64 {
        2 * simple.iter().sum::<i64>()
    }
}

fn symmetrizer(a: &Mat) -> Vec<i64> {
    let n = a.len();
    // d_i a_ij = d_j a_ji; propagate rational ratios along the connected diagram.
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    num[0] = 1;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && a[i][j] != 0 && num[j] == 0 {
                num[j] = num[i] * a[i][j];
                den[j] = den[i] * a[j][i];
                stack.push(j);
            }
        }
    }
    let l = den.iter().fold(1i64, |acc, &d| num_integer::lcm(acc, d.abs()));
    let vals: Vec<i64> = (0..n).map(|i| num[i] * (l / den[i])).map(|x| x.abs()).collect();
    let g = vals.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    vals.iter().map(|x| x / g).collect()
}

/// A vector of `X̃` or `Ỹ`: classical part plus `δ` with exponent `delta / m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub side: Side,
    pub classical: Wt,
    pub delta: i64,
}

impl AffineWeight {
    pub fn new(side: Side, classical: Wt, delta: i64) -> Self {
        AffineWeight { side, classical, delta }
    }

    pub fn neg(&self) -> Self {
        AffineWeight { side: self.side, classical: self.classical.iter().map(|x| -x).collect(), delta: -self.delta }
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineWeight {
            side: self.side,
            classical: self.classical.iter().zip(&o.classical).map(|(a, b)| a + b).collect(),
            delta: self.delta + o.delta,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        AffineWeight { side: self.side, classical: self.classical.iter().map(|x| x * k).collect(), delta: self.delta * k }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSign {
    NotRoot,
    Positive,
    Negative,
}

/// `W(X̃)`-orbit of a reduced affine root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orbit {
    Short,
    Long,
    Zero,
}

/// The double affine datum.
#[derive(Clone, Debug)]
pub struct Datum {
    pub class: AffineClass,
    pub type_x: FiniteType,
    pub type_y: FiniteType,
    pub lat_x: Lattice,
    pub lat_y: Lattice,
    pub n: usize,
    pub x: RootSystem,
    pub y: RootSystem,
    /// Root of `Y` matched to each root of `X` (same reflection).
    pub x_to_y: Vec<usize>,
    pub y_to_x: Vec<usize>,
    pub gamma: Vec<i64>,
    pair_num: Mat,
    pair_den: i64,
    /// `(Y, X) ⊆ (1/m)ℤ`.
    pub m: i64,
    /// `θ` defining `α_0 = δ − θ` on each side (root indices).
    pub theta_x: usize,
    pub theta_y: usize,
    /// Dominant short roots.
    pub vartheta_x: usize,
    pub vartheta_y: usize,
    pub affine_cartan_x: Mat,
    pub affine_cartan_y: Mat,
    pub doubled_x: Vec<bool>,
    pub doubled_y: Vec<bool>,
    /// Parameter of `α_i` and of `2α_i`, for `i = 0..=n`.
    pub param_x: Vec<Var>,
    pub param2_x: Vec<Var>,
    pub param_y: Vec<Var>,
    pub param2_y: Vec<Var>,
    /// Node permutations of the length-zero groups `Π^X` and `Π^Y`.
    pub pi_perm_x: Vec<Vec<usize>>,
    pub pi_perm_y: Vec<Vec<usize>>,
    /// Parameter substitution attached to the affine class.
    pub class_subst: [Mono; NVARS],
}

impl Datum {
    /// Build the datum for `X` of type `type_x`; `Y` is determined by the class.
    pub fn new(type_x: FiniteType, lat_x: Lattice, lat_y: Lattice, class: AffineClass) -> Result<Self> {
        let type_y = if class.is_dual() { type_x } else { type_x.dual() };
        Self::build(type_x, type_y, lat_x, lat_y, class)
    }

    pub fn build(
        type_x: FiniteType,
        type_y: FiniteType,
        lat_x: Lattice,
        lat_y: Lattice,
        class: AffineClass,
    ) -> Result<Self> {
        if type_x.rank != type_y.rank {
            return Err(Error::IncompatibleTypes(format!("{type_x} and {type_y} have different ranks")));
        }
        let ax = type_x.cartan();
        let ay = if class.is_dual() {
            if type_y != type_x {
                return Err(Error::IncompatibleTypes(format!(
                    "{type_x} and {type_y} must coincide for the {} class",
                    class.name()
                )));
            }
            ax.clone()
        } else {
            if type_y != type_x.dual() {
                return Err(Error::IncompatibleTypes(format!("{type_y} is not dual to {type_x}")));
            }
            transpose(&ax)
        };
        if class.is_koornwinder_family()
            && !(type_x.family == Family::B && lat_x == Lattice::Q && lat_y == Lattice::Q)
        {
            return Err(Error::IncompatibleTypes(format!(
                "the {} class needs the datum (Q(B_n), Q(B_n)), got ({lat_x:?}({type_x}), {lat_y:?}({type_y}))",
                class.name()
            )));
        }
        let n = type_x.rank;
        let x = RootSystem::new(ax);
        let y = RootSystem::new(ay);
        let mut x_to_y = vec![0; x.roots.len()];
        let mut y_to_x = vec![0; y.roots.len()];
        for (k, r) in x.roots.iter().enumerate() {
            let mut v = y.simple_root(r.base);
            for &i in r.word.iter().rev() {
                let p = v[i];
                let a = y.simple_root(i);
                for t in 0..n {
                    v[t] -= p * a[t];
                }
            }
            let ky = y.find(&v).expect("matched root");
            x_to_y[k] = ky;
            y_to_x[ky] = k;
        }
        let gamma: Vec<i64> = if class.is_dual() { y.sym.clone() } else { vec![1; n] };
        // (μ, λ) = Σ_k γ_k c_k λ_k with c = A_Y^{-1} μ.
        let (adj_y, det_y) = inverse(&y.cartan);
        let pair_num: Mat = (0..n).map(|i| (0..n).map(|k| gamma[k] * adj_y[k][i]).collect()).collect();
        let pair_den = det_y;
        let basis = |sys: &RootSystem, lat: Lattice| -> Vec<Wt> {
            (0..n)
                .map(|i| match lat {
                    Lattice::P => (0..n).map(|k| i64::from(k == i)).collect(),
                    Lattice::Q => sys.simple_root(i),
                })
                .collect()
        };
        let mut m = 1i64;
        for yb in basis(&y, lat_y) {
            for xb in basis(&x, lat_x) {
                let p = dot(&yb, &mat_vec(&pair_num, &xb));
                let g = num_integer::gcd(p, pair_den);
                m = num_integer::lcm(m, pair_den / g);
            }
        }
        let theta_of = |sys: &RootSystem| if class.is_dual() { sys.dominant_short_root() } else { sys.highest_root() };
        let theta_x = theta_of(&x);
        let theta_y = theta_of(&y);
        let vartheta_x = x.dominant_short_root();
        let vartheta_y = y.dominant_short_root();
        let affine_cartan = |sys: &RootSystem, th: usize| -> Mat {
            let t = &sys.roots[th];
            let mut a = vec![vec![0i64; n + 1]; n + 1];
            a[0][0] = 2;
            for j in 0..n {
                a[0][j + 1] = -t.coroot_pair(&sys.simple_root(j));
                a[j + 1][0] = -t.omega[j];
                for i in 0..n {
                    a[i + 1][j + 1] = sys.cartan[i][j];
                }
            }
            a
        };
        let affine_cartan_x = affine_cartan(&x, theta_x);
        let affine_cartan_y = affine_cartan(&y, theta_y);
        let doubled = |sys: &RootSystem, lat: Lattice, th: usize| -> Vec<bool> {
            let b = basis(sys, lat);
            let t = &sys.roots[th];
            let mut out = vec![b.iter().all(|v| t.coroot_pair(v) % 2 == 0)];
            out.extend((0..n).map(|i| b.iter().all(|v| v[i] % 2 == 0)));
            out
        };
        let doubled_x = doubled(&x, lat_x, theta_x);
        let doubled_y = doubled(&y, lat_y, theta_y);
        let class_subst = {
            let mut s: [Mono; NVARS] = std::array::from_fn(|k| mono_var(Var::ALL[k], 1));
            match class {
                AffineClass::MixedA2n2 => {
                    s[Var::V2.index()] = ONE_MONO;
                    s[Var::Vz.index()] = mono_var(Var::V0, 1);
                }
                AffineClass::MixedA2n2Dagger => {
                    s[Var::Vz.index()] = ONE_MONO;
                    s[Var::V2.index()] = mono_var(Var::Vs, 1);
                }
                _ => {}
            }
            s
        };
        let mut d = Datum {
            class,
            type_x,
            type_y,
            lat_x,
            lat_y,
            n,
            x,
            y,
            x_to_y,
            y_to_x,
            gamma,
            pair_num,
            pair_den,
            m,
            theta_x,
            theta_y,
            vartheta_x,
            vartheta_y,
            affine_cartan_x,
            affine_cartan_y,
            doubled_x,
            doubled_y,
            param_x: Vec::new(),
            param2_x: Vec::new(),
            param_y: Vec::new(),
            param2_y: Vec::new(),
            pi_perm_x: Vec::new(),
            pi_perm_y: Vec::new(),
            class_subst,
        };
        d.pi_perm_x = crate::weyl::pi_elements(&d, Side::X).iter().map(|p| p.1.clone()).collect();
        d.pi_perm_y = crate::weyl::pi_elements(&d, Side::Y).iter().map(|p| p.1.clone()).collect();
        d.assign_parameters();
        Ok(d)
    }

    fn assign_parameters(&mut self) {
        let n = self.n;
        let a = &self.affine_cartan_x;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        let join = |p: &mut Vec<usize>, i: usize, j: usize| {
            let (ri, rj) = (find(p, i), find(p, j));
            if ri != rj {
                p[ri.max(rj)] = ri.min(rj);
            }
        };
        for i in 0..=n {
            for j in 0..=n {
                if i != j && a[i][j] * a[j][i] == 1 {
                    join(&mut parent, i, j);
                }
            }
        }
        for perm in &self.pi_perm_x {
            for i in 0..=n {
                join(&mut parent, i, perm[i]);
            }
        }
        let mut param_x = vec![Var::V0; n + 1];
        let mut has_finite = vec![false; n + 1];
        for i in 1..=n {
            let r = find(&mut parent, i);
            has_finite[r] = true;
        }
        for i in 0..=n {
            let r = find(&mut parent, i);
            // a class containing a finite node takes that node's length
            let fin = (1..=n).find(|&j| find(&mut parent, j) == r);
            param_x[i] = match fin {
                Some(j) if self.x.simple_long[j - 1] => Var::Vl,
                Some(_) => Var::Vs,
                None => Var::V0,
            };
        }
        let param2_x: Vec<Var> = (0..=n)
            .map(|i| {
                if !self.doubled_x[i] {
                    param_x[i]
                } else if has_finite[find(&mut parent, i)] {
                    Var::V2
                } else {
                    Var::Vz
                }
            })
            .collect();
        // Dual parameters on the Y side.
        let short_x = (1..=n).find(|&j| !self.x.simple_long[j - 1]).unwrap();
        let mut param_y = vec![Var::V0; n + 1];
        let mut param2_y = vec![Var::V0; n + 1];
        param_y[0] = param2_x[short_x];
        for i in 1..=n {
            param_y[i] = param_x[i];
        }
        for i in 0..=n {
            param2_y[i] = if !self.doubled_y[i] {
                param_y[i]
            } else if i == 0 {
                param2_x[0]
            } else {
                param_x[0]
            };
        }
        self.param_x = param_x;
        self.param2_x = param2_x;
        self.param_y = param_y;
        self.param2_y = param2_y;
    }

    pub fn sys(&self, side: Side) -> &RootSystem {
        match side {
            Side::X => &self.x,
            Side::Y => &self.y,
        }
    }

    pub fn lattice(&self, side: Side) -> Lattice {
        match side {
            Side::X => self.lat_x,
            Side::Y => self.lat_y,
        }
    }

    pub fn theta(&self, side: Side) -> usize {
        match side {
            Side::X => self.theta_x,
            Side::Y => self.theta_y,
        }
    }

    pub fn vartheta(&self, side: Side) -> usize {
        match side {
            Side::X => self.vartheta_x,
            Side::Y => self.vartheta_y,
        }
    }

    pub fn affine_cartan(&self, side: Side) -> &Mat {
        match side {
            Side::X => &self.affine_cartan_x,
            Side::Y => &self.affine_cartan_y,
        }
    }

    pub fn doubled(&self, side: Side) -> &[bool] {
        match side {
            Side::X => &self.doubled_x,
            Side::Y => &self.doubled_y,
        }
    }

    pub fn node_param(&self, side: Side, i: usize) -> Var {
        match side {
            Side::X => self.param_x[i],
            Side::Y => self.param_y[i],
        }
    }

    pub fn node_param2(&self, side: Side, i: usize) -> Var {
        match side {
            Side::X => self.param2_x[i],
            Side::Y => self.param2_y[i],
        }
    }

    pub fn pi_perms(&self, side: Side) -> &[Vec<usize>] {
        match side {
            Side::X => &self.pi_perm_x,
            Side::Y => &self.pi_perm_y,
        }
    }

    /// Whether a classical vector lies in the lattice of `side`.
    pub fn in_lattice(&self, side: Side, v: &[i64]) -> bool {
        v.len() == self.n
            && match self.lattice(side) {
                Lattice::P => true,
                Lattice::Q => self.sys(side).to_simple(v).is_some(),
            }
    }

    /// `m·(μ, λ)` for `μ ∈ Y`, `λ ∈ X`.
    pub fn pair_m(&self, mu: &[i64], lam: &[i64]) -> i64 {
        let (num, den) = self.pairing(mu, lam);
        let t = num * self.m;
        assert!(t % den == 0, "pairing outside (1/m)Z");
        t / den
    }

    /// `(μ, λ)` as an unreduced fraction `num / den`.
    pub fn pairing(&self, mu: &[i64], lam: &[i64]) -> (i64, i64) {
        (dot(mu, &mat_vec(&self.pair_num, lam)), self.pair_den)
    }

    /// Reduced fraction for `(μ, λ)`.
    pub fn pairing_reduced(&self, mu: &[i64], lam: &[i64]) -> (i64, i64) {
        let (a, b) = self.pairing(mu, lam);
        let g = num_integer::gcd(a, b).max(1);
        (a / g, b / g)
    }

    /// Pairing with the arguments on the given sides (symmetric form).
    pub fn pair_m_sides(&self, a_side: Side, a: &[i64], b: &[i64]) -> i64 {
        match a_side {
            Side::Y => self.pair_m(a, b),
            Side::X => self.pair_m(b, a),
        }
    }

    /// Multiplier `r_β` with `aδ + β` a root iff `a ∈ r_β ℤ`.
    pub fn delta_step(&self, side: Side, root: &Root) -> i64 {
        if self.class.is_dual() && root.long {
            let s = self.sys(side);
            let maxs = *s.sym.iter().max().unwrap();
            let mins = *s.sym.iter().min().unwrap();
            maxs / mins
        } else {
            1
        }
    }

    /// Classify `aδ + β` as a reduced affine root.
    pub fn root_sign(&self, x: &AffineWeight) -> RootSign {
        let sys = self.sys(x.side);
        let Some(k) = sys.find(&x.classical) else { return RootSign::NotRoot };
        if x.delta % self.m != 0 {
            return RootSign::NotRoot;
        }
        let a = x.delta / self.m;
        let r = &sys.roots[k];
        if a % self.delta_step(x.side, r) != 0 {
            return RootSign::NotRoot;
        }
        if a > 0 || (a == 0 && r.positive) {
            RootSign::Positive
        } else {
            RootSign::Negative
        }
    }

    /// Whether the `α_0` orbit is separate from both finite orbits.
    pub fn has_zero_orbit(&self, side: Side) -> bool {
        match side {
            Side::X => self.param_x[0] == Var::V0,
            Side::Y => !self.param_y[1..].contains(&self.param_y[0]),
        }
    }

    /// Orbit of a reduced affine root; `None` if not a root.
    pub fn orbit(&self, x: &AffineWeight) -> Option<Orbit> {
        if self.root_sign(x) == RootSign::NotRoot {
            return None;
        }
        let sys = self.sys(x.side);
        let r = &sys.roots[sys.find(&x.classical).unwrap()];
        let th = &sys.roots[self.theta(x.side)];
        let a = x.delta / self.m;
        if self.has_zero_orbit(x.side) && r.long == th.long && a.rem_euclid(2) == 1 {
            return Some(Orbit::Zero);
        }
        Some(if r.long { Orbit::Long } else { Orbit::Short })
    }

    /// `α_i` for `i ∈ I = {0..n}` as an affine root on `side`.
    pub fn simple_affine_root(&self, side: Side, i: usize) -> AffineWeight {
        let sys = self.sys(side);
        if i == 0 {
            let th = &sys.roots[self.theta(side)];
            AffineWeight::new(side, th.omega.iter().map(|c| -c).collect(), self.m)
        } else {
            AffineWeight::new(side, sys.simple_root(i - 1), 0)
        }
    }

    /// Hecke parameter variable of a reduced affine root on the X side.
    pub fn root_param_x(&self, x: &AffineWeight) -> Var {
        match self.orbit(x).expect("not an affine root") {
            Orbit::Zero => Var::V0,
            Orbit::Long => Var::Vl,
            Orbit::Short => Var::Vs,
        }
    }

    /// Hecke parameter of a finite root of `X` (short or long class).
    pub fn finite_param(&self, root: usize) -> Var {
        if self.x.roots[root].long {
            Var::Vl
        } else {
            Var::Vs
        }
    }

    /// Parameter variables actually used by the datum (after the class substitution).
    pub fn active_params(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for v in self.param_x.iter().chain(&self.param2_x).chain(&self.param_y).chain(&self.param2_y) {
            let img = self.class_subst[v.index()];
            for (k, &e) in img.iter().enumerate() {
                if e != 0 && !vs.contains(&Var::ALL[k]) {
                    vs.push(Var::ALL[k]);
                }
            }
        }
        vs.sort_by_key(|v| v.index());
        vs
    }

    /// Serializable description, schema `dad-v1`.
    pub fn to_json(&self) -> Value {
        let perms = |p: &[Vec<usize>]| p.to_vec();
        json!({
            "schema": "dad-v1",
            "class": self.class.name(),
            "type_x": self.type_x.to_string(),
            "type_y": self.type_y.to_string(),
            "lattice_x": format!("{:?}", self.lat_x),
            "lattice_y": format!("{:?}", self.lat_y),
            "m": self.m,
            "gamma": self.gamma,
            "affine_cartan_x": self.affine_cartan_x,
            "affine_cartan_y": self.affine_cartan_y,
            "doubled_x": (0..=self.n).filter(|&i| self.doubled_x[i]).collect::<Vec<_>>(),
            "doubled_y": (0..=self.n).filter(|&i| self.doubled_y[i]).collect::<Vec<_>>(),
            "params_x": self.param_x.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "params2_x": self.param2_x.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "params_y": self.param_y.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "params2_y": self.param2_y.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "pi_x": perms(&self.pi_perm_x),
            "pi_y": perms(&self.pi_perm_y),
            "active_params": self.active_params().iter().map(|v| v.name()).collect::<Vec<_>>(),
        })
    }
}

/// Parameter specialization applied on top of the class substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamMode {
    /// All Hecke parameters kept distinct.
    General,
    /// Every Hecke parameter set to a single `v`.
    Equal,
}

impl Datum {
    /// Images of the scalar variables: class substitution followed by `mode`.
    pub fn substitution(&self, mode: ParamMode) -> [Mono; NVARS] {
        let mut out = [ONE_MONO; NVARS];
        for k in 0..NVARS {
            let img = self.class_subst[k];
            out[k] = match mode {
                ParamMode::General => img,
                ParamMode::Equal => {
                    let mut r = ONE_MONO;
                    for (t, &e) in img.iter().enumerate() {
                        if e == 0 {
                            continue;
                        }
                        let base = if Var::ALL[t] == Var::Q { mono_var(Var::Q, 1) } else { mono_var(Var::V, 1) };
                        r = mono_mul(&r, &mono_pow(&base, e));
                    }
                    r
                }
            };
        }
        out
    }
}
