//! Finite and extended affine Weyl groups in translation form `t_λ u`.

use crate::error::{Error, Result};
use crate::linalg::{identity, mat_mul, mat_vec, Mat};
use crate::root_data::{AffineWeight, Datum, Lattice, RootSign, Side};
use crate::xpoly::{wt_add, wt_neg, Wt};
use serde_json::{json, Value};
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

/// An element of `W_0`, stored as its matrices on both classical lattices.
#[derive(Clone, Debug)]
pub struct FinElem {
    pub mx: Mat,
    pub my: Mat,
    pub mx_inv: Mat,
    pub my_inv: Mat,
}

impl PartialEq for FinElem {
    fn eq(&self, o: &Self) -> bool {
        self.mx == o.mx
    }
}

impl Eq for FinElem {}

impl Hash for FinElem {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.mx.hash(h)
    }
}

fn reflection_matrix(cartan: &Mat, i: usize) -> Mat {
    let n = cartan.len();
    let mut m = identity(n);
    for (k, row) in m.iter_mut().enumerate() {
        row[i] -= cartan[k][i];
    }
    m
}

impl FinElem {
    pub fn identity(n: usize) -> Self {
        let id = identity(n);
        FinElem { mx: id.clone(), my: id.clone(), mx_inv: id.clone(), my_inv: id }
    }

    /// Simple reflection `s_i`, `i ∈ 1..=n`.
    pub fn simple(d: &Datum, i: usize) -> Self {
        let mx = reflection_matrix(&d.x.cartan, i - 1);
        let my = reflection_matrix(&d.y.cartan, i - 1);
        FinElem { mx_inv: mx.clone(), my_inv: my.clone(), mx, my }
    }

    /// `s_{i_1} ⋯ s_{i_k}` for finite node labels.
    pub fn from_word(d: &Datum, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(d.n), |acc, &i| acc.mul(&Self::simple(d, i)))
    }

    /// The reflection in the root `k` of `X`.
    pub fn reflection(d: &Datum, k: usize) -> Self {
        let r = &d.x.roots[k];
        let w = Self::from_word(d, &r.word.iter().map(|i| i + 1).collect::<Vec<_>>());
        w.mul(&Self::simple(d, r.base + 1)).mul(&w.inv())
    }

    pub fn mul(&self, o: &Self) -> Self {
        FinElem {
            mx: mat_mul(&self.mx, &o.mx),
            my: mat_mul(&self.my, &o.my),
            mx_inv: mat_mul(&o.mx_inv, &self.mx_inv),
            my_inv: mat_mul(&o.my_inv, &self.my_inv),
        }
    }

    pub fn inv(&self) -> Self {
        FinElem { mx: self.mx_inv.clone(), my: self.my_inv.clone(), mx_inv: self.mx.clone(), my_inv: self.my.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.mx == identity(self.mx.len())
    }

    pub fn act(&self, side: Side, v: &[i64]) -> Wt {
        match side {
            Side::X => mat_vec(&self.mx, v),
            Side::Y => mat_vec(&self.my, v),
        }
    }

    pub fn act_inv(&self, side: Side, v: &[i64]) -> Wt {
        match side {
            Side::X => mat_vec(&self.mx_inv, v),
            Side::Y => mat_vec(&self.my_inv, v),
        }
    }

    /// Positive roots of `X` sent to negative roots.
    pub fn inversions(&self, d: &Datum) -> Vec<usize> {
        d.x.positive
            .iter()
            .copied()
            .filter(|&k| {
                let img = self.act(Side::X, &d.x.roots[k].omega);
                !d.x.roots[d.x.find(&img).unwrap()].positive
            })
            .collect()
    }

    pub fn length(&self, d: &Datum) -> usize {
        self.inversions(d).len()
    }

    /// Greedy reduced word (finite node labels `1..=n`).
    pub fn reduced_word(&self, d: &Datum) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..=d.n {
                let img = w.act_inv(Side::X, &d.x.simple_root(i - 1));
                if !d.x.roots[d.x.find(&img).unwrap()].positive {
                    word.push(i);
                    w = Self::simple(d, i).mul(&w);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Key usable in ordered containers.
    pub fn key(&self) -> Vec<i64> {
        self.mx.iter().flatten().copied().collect()
    }
}

/// All elements of `W_0`, in breadth-first order from the identity.
pub fn finite_weyl_group(d: &Datum) -> Vec<FinElem> {
    let mut seen: HashSet<FinElem> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let id = FinElem::identity(d.n);
    seen.insert(id.clone());
    queue.push_back(id);
    let gens: Vec<FinElem> = (1..=d.n).map(|i| FinElem::simple(d, i)).collect();
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let x = w.mul(g);
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
        out.push(w);
    }
    out
}

/// The longest element of `W_0`.
pub fn longest_element(d: &Datum) -> FinElem {
    let mut w = FinElem::identity(d.n);
    loop {
        let next = (1..=d.n).find(|&i| {
            let img = w.act(Side::X, &d.x.simple_root(i - 1));
            d.x.roots[d.x.find(&img).unwrap()].positive
        });
        match next {
            Some(i) => w = w.mul(&FinElem::simple(d, i)),
            None => return w,
        }
    }
}

/// Shortest `u` with `u(λ)` antidominant; `λ` in the lattice of `side`.
pub fn u_lambda(d: &Datum, side: Side, lam: &[i64]) -> FinElem {
    let mut u = FinElem::identity(d.n);
    let mut l = lam.to_vec();
    while let Some(i) = (0..d.n).find(|&i| l[i] > 0) {
        let s = FinElem::simple(d, i + 1);
        l = s.act(side, &l);
        u = s.mul(&u);
    }
    u
}

/// Element `t_λ u` of `W(X̃)` (side X, `λ ∈ Y`) or `W(Ỹ)` (side Y, `λ ∈ X`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElem {
    pub side: Side,
    pub trans: Wt,
    pub fin: FinElem,
}

/// A reduced expression `π · s_{i_1} ⋯ s_{i_ℓ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub pi: WeylElem,
    /// Node permutation of `π`: `π(α_i) = α_{perm[i]}`.
    pub pi_perm: Vec<usize>,
    pub word: Vec<usize>,
}

impl ReducedWord {
    pub fn render(&self) -> String {
        let mut s = String::new();
        if !self.pi_perm.iter().enumerate().all(|(i, &j)| i == j) {
            s.push_str(&format!("π_{} · ", self.pi_perm[0]));
        }
        if self.word.is_empty() {
            s.push_str("id");
        } else {
            s.push_str(&self.word.iter().map(|i| format!("s_{i}")).collect::<Vec<_>>().join(" "));
        }
        s
    }
}

impl WeylElem {
    pub fn identity(d: &Datum, side: Side) -> Self {
        WeylElem { side, trans: vec![0; d.n], fin: FinElem::identity(d.n) }
    }

    pub fn translation(d: &Datum, side: Side, lam: Wt) -> Self {
        WeylElem { side, trans: lam, fin: FinElem::identity(d.n) }
    }

    pub fn finite(side: Side, n: usize, fin: FinElem) -> Self {
        WeylElem { side, trans: vec![0; n], fin }
    }

    /// Simple reflection `s_i`, `i ∈ 0..=n`.
    pub fn simple(d: &Datum, side: Side, i: usize) -> Self {
        if i > 0 {
            return Self::finite(side, d.n, FinElem::simple(d, i));
        }
        let other = side.other();
        let vt = d.vartheta(other);
        let trans = d.sys(other).roots[vt].omega.clone();
        let th = d.theta(side);
        let kx = match side {
            Side::X => th,
            Side::Y => d.y_to_x[th],
        };
        WeylElem { side, trans, fin: FinElem::reflection(d, kx) }
    }

    pub fn from_word(d: &Datum, side: Side, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(d, side), |acc, &i| acc.mul(&Self::simple(d, side, i)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.side, o.side);
        let moved = self.fin.act(self.side.other(), &o.trans);
        WeylElem { side: self.side, trans: wt_add(&self.trans, &moved), fin: self.fin.mul(&o.fin) }
    }

    pub fn inv(&self) -> Self {
        let fi = self.fin.inv();
        let trans = wt_neg(&fi.act(self.side.other(), &self.trans));
        WeylElem { side: self.side, trans, fin: fi }
    }

    pub fn is_identity(&self) -> bool {
        self.trans.iter().all(|&c| c == 0) && self.fin.is_identity()
    }

    pub fn act(&self, d: &Datum, x: &AffineWeight) -> Result<AffineWeight> {
        if x.side != self.side {
            return Err(Error::SideMismatch { expected: self.side.name(), found: x.side.name() });
        }
        Ok(self.act_unchecked(d, x))
    }

    pub fn act_unchecked(&self, d: &Datum, x: &AffineWeight) -> AffineWeight {
        let c = self.fin.act(self.side, &x.classical);
        let p = d.pair_m_sides(self.side, &c, &self.trans);
        AffineWeight { side: self.side, classical: c, delta: x.delta - p }
    }

    /// Right inversions `R_+ ∩ −w^{-1}R_+`.
    pub fn inversions(&self, d: &Datum) -> Vec<AffineWeight> {
        let sys = d.sys(self.side);
        let mut out = Vec::new();
        for r in &sys.roots {
            let c = self.fin.act(self.side, &r.omega);
            let neg_img = !sys.roots[sys.find(&c).unwrap()].positive;
            let shift = d.pair_m_sides(self.side, &c, &self.trans);
            assert!(shift % d.m == 0);
            let shift = shift / d.m;
            let step = d.delta_step(self.side, r);
            let start = if r.positive { 0 } else { step };
            let mut a = start;
            while a < shift || (a == shift && neg_img) {
                out.push(AffineWeight::new(self.side, r.omega.clone(), a * d.m));
                a += step;
            }
        }
        out.sort_by(|a, b| (a.delta, &a.classical).cmp(&(b.delta, &b.classical)));
        out
    }

    pub fn length(&self, d: &Datum) -> usize {
        self.inversions(d).len()
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`.
    pub fn is_left_descent(&self, d: &Datum, i: usize) -> bool {
        let a = d.simple_affine_root(self.side, i);
        d.root_sign(&self.inv().act_unchecked(d, &a)) == RootSign::Negative
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, d: &Datum, i: usize) -> bool {
        let a = d.simple_affine_root(self.side, i);
        d.root_sign(&self.act_unchecked(d, &a)) == RootSign::Negative
    }

    /// Node permutation of a length-zero element.
    pub fn node_perm(&self, d: &Datum) -> Vec<usize> {
        (0..=d.n)
            .map(|i| {
                let img = self.act_unchecked(d, &d.simple_affine_root(self.side, i));
                (0..=d.n).find(|&j| d.simple_affine_root(self.side, j) == img).expect("length-zero element")
            })
            .collect()
    }

    /// Greedy reduced word `π · s_{i_1} ⋯ s_{i_ℓ}`.
    pub fn reduced_word(&self, d: &Datum) -> ReducedWord {
        let mut w = self.clone();
        let mut left = Vec::new();
        'outer: loop {
            for i in 0..=d.n {
                if w.is_left_descent(d, i) {
                    left.push(i);
                    w = Self::simple(d, self.side, i).mul(&w);
                    continue 'outer;
                }
            }
            break;
        }
        // self = s_{left} ⋯ · π = π · s_{π^{-1}(left)} ⋯
        let perm = w.node_perm(d);
        let mut inv = vec![0; perm.len()];
        for (i, &j) in perm.iter().enumerate() {
            inv[j] = i;
        }
        ReducedWord { pi: w, pi_perm: perm, word: left.iter().map(|&i| inv[i]).collect() }
    }

    /// Check a user word: `π · s_word = w` with `|word| = ℓ(w)`.
    pub fn check_word(&self, d: &Datum, word: &[usize]) -> Result<ReducedWord> {
        let bad = |reason: String| Error::WordNotReduced { word: word.to_vec(), reason };
        if word.iter().any(|&i| i > d.n) {
            return Err(bad(format!("node index exceeds {}", d.n)));
        }
        let l = self.length(d);
        if word.len() != l {
            return Err(bad(format!("word has length {} but the element has length {l}", word.len())));
        }
        let tail = Self::from_word(d, self.side, word);
        let pi = self.mul(&tail.inv());
        if pi.length(d) != 0 {
            return Err(bad("the word does not represent the element".into()));
        }
        let perm = pi.node_perm(d);
        Ok(ReducedWord { pi, pi_perm: perm, word: word.to_vec() })
    }

    /// `(wt, dir)` with `w = t_{wt} · dir`.
    pub fn wt_dir(&self) -> (Wt, FinElem) {
        (self.trans.clone(), self.fin.clone())
    }

    pub fn to_json(&self, d: &Datum) -> Value {
        let rw = self.reduced_word(d);
        json!({
            "side": self.side.name(),
            "auto": rw.pi_perm,
            "trans": self.trans,
            "fin_matrix": match self.side { Side::X => &self.fin.mx, Side::Y => &self.fin.my },
            "word": rw.word,
        })
    }
}

/// `m_λ = t_λ u_λ^{-1} ∈ W(Ỹ)` together with `u_λ`.
pub fn m_lambda(d: &Datum, lam: &[i64]) -> (WeylElem, FinElem) {
    let u = u_lambda(d, Side::X, lam);
    (WeylElem { side: Side::Y, trans: lam.to_vec(), fin: u.inv() }, u)
}

/// Length-zero elements of the extended affine Weyl group on `side`,
/// with their node permutations; the identity comes first.
pub fn pi_elements(d: &Datum, side: Side) -> Vec<(WeylElem, Vec<usize>)> {
    let other = side.other();
    let id = WeylElem::identity(d, side);
    let mut found: Vec<WeylElem> = vec![id];
    if d.lattice(other) == Lattice::P {
        let n = d.n;
        let mut cands: Vec<Wt> = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            cands.push(e.clone());
            cands.push(wt_neg(&e));
        }
        for lam in cands {
            let u = u_lambda(d, other, &lam);
            let w = WeylElem { side, trans: lam, fin: u.inv() };
            if w.length(d) == 0 && !found.contains(&w) {
                found.push(w);
            }
        }
        let mut k = 0;
        while k < found.len() {
            for j in 0..found.len() {
                let p = found[k].mul(&found[j]);
                if !found.contains(&p) {
                    found.push(p);
                }
            }
            k += 1;
        }
    }
    let mut out: Vec<(WeylElem, Vec<usize>)> = found
        .into_iter()
        .map(|w| {
            let p = w.node_perm(d);
            (w, p)
        })
        .collect();
    out.sort_by_key(|(_, p)| p[0]);
    out
}

/// Memoized reflections `s_β` for roots of `X`.
pub struct ReflectionTable {
    map: HashMap<usize, FinElem>,
}

impl ReflectionTable {
    pub fn new(d: &Datum) -> Self {
        let map = (0..d.x.roots.len()).map(|k| (k, FinElem::reflection(d, k))).collect();
        ReflectionTable { map }
    }

    pub fn get(&self, k: usize) -> &FinElem {
        &self.map[&k]
    }
}
