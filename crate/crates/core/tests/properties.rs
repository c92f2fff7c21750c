//! Randomized and exhaustive structural properties.

use proptest::prelude::*;
use ramyip::coeff::{Coeff, CoeffRat};
use ramyip::hecke::Ctx;
use ramyip::int::Int;
use ramyip::names::AffineName;
use ramyip::poly::{LaurentPoly, Mono, Var, NVARS};
use ramyip::ram_yip::{Formula, PathSpace};
use ramyip::relations::{check_intertwiner, check_y_homomorphism};
use ramyip::root_data::{AffineWeight, Datum, FiniteType, Lattice, ParamMode, RootSign, Side};
use ramyip::weyl::{finite_weyl_group, m_lambda, pi_elements, FinElem, WeylElem};
use ramyip::{Wt, XPoly};
use std::collections::HashSet;

fn datum(name: &str) -> Datum {
    AffineName::parse(name).unwrap().datum(None).unwrap()
}

fn rank2_names() -> [&'static str; 6] {
    ["A2", "C2^1", "G2^1", "D3^2", "K2", "A4^2dag"]
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3), 0..4).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (a, b, c) in terms {
            let mut m: Mono = [0; NVARS];
            m[Var::Q.index()] = a;
            m[Var::V.index()] = b;
            p.add_term(m, &Int::from(c));
        }
        p
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn rat() -> impl Strategy<Value = CoeffRat> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| CoeffRat::new(n, d).unwrap())
}

fn small_xpoly(n: usize) -> impl Strategy<Value = XPoly<LaurentPoly>> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), laurent()), 1..4).prop_map(move |terms| {
        let mut p = XPoly::zero(n);
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    })
}

fn lattice_vec(d: &Datum, side: Side, raw: Vec<i64>) -> Wt {
    let mut w = raw;
    if !d.in_lattice(side, &w) {
        let last = d.n - 1;
        w[last] *= 2;
    }
    assert!(d.in_lattice(side, &w));
    w
}

/// Elements of `W(X̃)` of length at most `max_len`, by breadth-first search.
fn ball(d: &Datum, max_len: usize) -> Vec<WeylElem> {
    let mut seen: HashSet<WeylElem> = HashSet::new();
    let mut layer = vec![WeylElem::identity(d, Side::X)];
    seen.insert(layer[0].clone());
    let mut all = layer.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..=d.n {
                let x = w.mul(&WeylElem::simple(d, Side::X, i));
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[test]
fn positive_roots_count_reflections() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"] {
        let ft = FiniteType::parse(t).unwrap();
        let d = Datum::new(ft, Lattice::P, Lattice::P, ramyip::root_data::AffineClass::Untwisted).unwrap();
        let w = finite_weyl_group(&d);
        let reflections: HashSet<Vec<i64>> = w
            .iter()
            .flat_map(|u| (1..=d.n).map(move |i| (u, i)))
            .map(|(u, i)| u.mul(&FinElem::simple(&d, i)).mul(&u.inv()).key())
            .collect();
        assert_eq!(d.x.num_positive(), reflections.len(), "{t}");
        let mut orbit: HashSet<Wt> = HashSet::new();
        for u in &w {
            for i in 0..d.n {
                orbit.insert(u.act(Side::X, &d.x.simple_root(i)));
            }
        }
        assert_eq!(orbit.len(), d.x.roots.len(), "{t}");
    }
}

#[test]
fn doubled_nodes_only_in_the_koornwinder_family() {
    for name in ["A2", "C2^1", "G2^1", "D3^2", "A5^2", "D4^3", "K2", "K3", "A4^2", "A4^2dag"] {
        let d = datum(name);
        for side in [Side::X, Side::Y] {
            for (i, &dbl) in d.doubled(side).iter().enumerate() {
                if dbl {
                    assert!(d.class.is_koornwinder_family(), "{name}");
                    assert!(i == 0 || i == d.n, "{name} node {i}");
                }
            }
        }
    }
}

#[test]
fn length_changes_by_one_along_simple_reflections() {
    for name in ["A2", "C2^1", "G2^1", "D3^2", "K2", "A3^1"] {
        let d = datum(name);
        let depth = if d.n == 3 { 6 } else { 8 };
        for w in ball(&d, depth) {
            for i in 0..=d.n {
                let ws = w.mul(&WeylElem::simple(&d, Side::X, i));
                let img = w.act_unchecked(&d, &d.simple_affine_root(Side::X, i));
                let up = d.root_sign(&img) == RootSign::Positive;
                let expect = if up { w.length(&d) + 1 } else { w.length(&d) - 1 };
                assert_eq!(ws.length(&d), expect, "{name}");
            }
        }
    }
}

#[test]
fn diagram_automorphisms_conjugate_simple_reflections() {
    for name in ["A2", "A3^1", "C2^1", "D3^2", "D4^2", "A5^2"] {
        let d = datum(name);
        for side in [Side::X, Side::Y] {
            for (pi, perm) in pi_elements(&d, side) {
                for i in 0..=d.n {
                    let lhs = pi.mul(&WeylElem::simple(&d, side, i)).mul(&pi.inv());
                    assert_eq!(lhs, WeylElem::simple(&d, side, perm[i]), "{name} {side:?}");
                }
            }
        }
    }
}

fn order_y(d: &Datum, i: usize, j: usize) -> Option<usize> {
    let sij = WeylElem::simple(d, Side::Y, i).mul(&WeylElem::simple(d, Side::Y, j));
    let mut w = sij.clone();
    for k in 1..=6 {
        if w.is_identity() {
            return Some(k);
        }
        w = w.mul(&sij);
    }
    None
}

fn braid_variant(d: &Datum, word: &[usize]) -> Option<Vec<usize>> {
    for i in 0..=d.n {
        for j in 0..=d.n {
            if i == j {
                continue;
            }
            let Some(m) = order_y(d, i, j) else { continue };
            let pat: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            if let Some(pos) = word.windows(m).position(|w| w == pat.as_slice()) {
                let mut out = word.to_vec();
                for k in 0..m {
                    out[pos + k] = if k % 2 == 0 { j } else { i };
                }
                return Some(out);
            }
        }
    }
    None
}

#[test]
fn result_does_not_depend_on_the_reduced_word() {
    let mut compared = 0;
    for name in rank2_names() {
        let d = datum(name);
        let ctx = Ctx::new(&d, ParamMode::General);
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                let lam = vec![a, b];
                if a.abs() + b.abs() > 3 || !d.in_lattice(Side::X, &lam) {
                    continue;
                }
                let id = WeylElem::identity(&d, Side::Y);
                let sp = PathSpace::for_weight(&ctx, id.clone(), &lam, None).unwrap();
                if sp.len() > 10 {
                    continue;
                }
                let Some(other) = braid_variant(&d, &sp.word.word) else { continue };
                let sp2 = PathSpace::for_weight(&ctx, id, &lam, Some(&other)).unwrap();
                let e1 = sp.evaluate(Formula::General, [0; NVARS]).unwrap();
                let e2 = sp2.evaluate(Formula::General, [0; NVARS]).unwrap();
                assert!(e1.same_as(&e2), "{name} {lam:?} {other:?}");
                compared += 1;
            }
        }
    }
    assert!(compared >= 10, "only {compared} weights had a second reduced word");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn normal_form_and_cross_multiplication(n in laurent(), d in nonzero_laurent(), k in nonzero_laurent()) {
        let x = CoeffRat::new(n.clone(), d.clone()).unwrap();
        let again = CoeffRat::new(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        let y = CoeffRat::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(x.cross_eq(&y));
        prop_assert_eq!(&x.num().clone() * y.den(), &y.num().clone() * x.den());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in small_xpoly(2), q in small_xpoly(2)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!(p.mul(&q).exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn pairing_is_invariant(k in 0usize..6, w in 0usize..12, mu in prop::collection::vec(-3i64..=3, 2), lam in prop::collection::vec(-3i64..=3, 2)) {
        let d = datum(rank2_names()[k]);
        let g = finite_weyl_group(&d);
        let u = &g[w % g.len()];
        let mu = lattice_vec(&d, Side::Y, mu);
        let lam = lattice_vec(&d, Side::X, lam);
        prop_assert_eq!(d.pair_m(&u.act(Side::Y, &mu), &u.act(Side::X, &lam)), d.pair_m(&mu, &lam));
    }

    #[test]
    fn orbits_are_stable(k in 0usize..6, word in prop::collection::vec(0usize..3, 0..8), root in 0usize..12, a in -3i64..=3) {
        let d = datum(rank2_names()[k]);
        let r = &d.x.roots[root % d.x.roots.len()];
        let x = AffineWeight::new(Side::X, r.omega.clone(), a * d.m * d.delta_step(Side::X, r));
        let w = WeylElem::from_word(&d, Side::X, &word);
        prop_assert_eq!(d.orbit(&w.act_unchecked(&d, &x)), d.orbit(&x));
    }

    #[test]
    fn grassmannian_inversions(k in 0usize..6, lam in prop::collection::vec(-2i64..=2, 2)) {
        let d = datum(rank2_names()[k]);
        let lam = lattice_vec(&d, Side::X, lam);
        let (m, _) = m_lambda(&d, &lam);
        for b in m.inversions(&d) {
            prop_assert!(b.delta > 0);
            let r = &d.y.roots[d.y.find(&b.classical).unwrap()];
            prop_assert!(!r.positive);
        }
    }

    #[test]
    fn intertwiner_on_random_weights(k in 0usize..6, lam in prop::collection::vec(-2i64..=2, 2), f in prop::collection::vec(-2i64..=2, 2)) {
        let d = datum(rank2_names()[k]);
        let ctx = Ctx::new(&d, ParamMode::General);
        let lam = lattice_vec(&d, Side::X, lam);
        let f = XPoly::monomial(lattice_vec(&d, Side::X, f), LaurentPoly::one());
        prop_assert!(check_intertwiner(&ctx, &[lam], &[f]).is_ok());
    }

    #[test]
    fn y_operators_multiply(k in 0usize..6, a in -1i64..=1, b in -1i64..=1, c in -1i64..=1, e in -1i64..=1) {
        let d = datum(rank2_names()[k]);
        let ctx = Ctx::new(&d, ParamMode::Equal);
        let basis = ctx.y_basis();
        let comb = |x: i64, y: i64| -> Wt { basis[0].iter().zip(&basis[1]).map(|(p, q)| x * p + y * q).collect() };
        let f = XPoly::monomial(d.x.simple_root(0), LaurentPoly::var(Var::Q)).add(&XPoly::one(2));
        prop_assert!(check_y_homomorphism(&ctx, &[(comb(a, b), comb(c, e))], &[f]).is_ok());
    }
}
