#![allow(dead_code)]
//! Randomized property suites shared by `properties.rs` and the acceptance run.
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use weylzeta::algebra::rational::rat;
use weylzeta::algebra::series::SeriesShape;
use weylzeta::algebra::{series_factor_expand, CycloElem, CycloLaurent, Rational, TruncatedSeries};
use weylzeta::bernoulli_gen::bases::{independent_subsets, projection_p, projection_via};
use weylzeta::bernoulli_gen::{enumerate_bases, expand_p, BernoulliContext};
use weylzeta::lattice_zeta::harmonic_product_residual;
use weylzeta::rootsys::{parse_system, RootSystemData};
use weylzeta::weyl::enumerate_weyl;

pub struct Suite {
    pub name: &'static str,
    pub run: fn(u32) -> Result<(), String>,
}

pub fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "ring axioms", run: ring_axioms },
        Suite { name: "series re-multiplication", run: series_remultiplication },
        Suite { name: "projection independence", run: projection_independence },
        Suite { name: "inversion set size equals length", run: inversion_sets },
        Suite { name: "harmonic product", run: harmonic_product },
        Suite { name: "basis order invariance", run: basis_order_invariance },
    ]
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn check<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn cyclo() -> impl Strategy<Value = CycloElem> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]), prop::collection::vec(small_rational(), 1..6)).prop_map(|(n, c)| CycloElem::new(n, c))
}

fn laurent() -> impl Strategy<Value = CycloLaurent> {
    prop::collection::vec((cyclo(), -3i32..=3), 0..4).prop_map(|v| {
        let mut l = CycloLaurent::zero();
        for (c, e) in v {
            l.add_assign_ref(&CycloLaurent::monomial(c, e));
        }
        l
    })
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    check(cases, (cyclo(), cyclo(), cyclo(), laurent(), laurent(), laurent()), |(a, b, c, x, y, z)| {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert!(a.sub_ref(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul_ref(&a.inverse().unwrap()), CycloElem::one());
        }
        let m = num_integer::lcm(a.conductor(), b.conductor()) * 2;
        prop_assert_eq!(a.lift(m).mul_ref(&b.lift(m)), a.mul_ref(&b));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        let e = (&x * &y).eval_f64() - x.eval_f64() * y.eval_f64();
        prop_assert!(e.norm() <= 1e-9 * (1.0 + x.eval_f64().norm() * y.eval_f64().norm()));
        Ok(())
    })
}

pub fn series_remultiplication(cases: u32) -> Result<(), String> {
    let strategy = (2usize..=3, 2u32..=4, prop::option::of(2u32..=4), prop::collection::vec(small_rational(), 3), small_rational(), -1i32..=1);
    check(cases, strategy, |(nvars, deg, cap, lin, c0, omega)| {
        prop_assume!(!num_traits::Zero::is_zero(&c0));
        let vars = (0..nvars).map(|i| format!("t{i}")).collect();
        let shape = SeriesShape::new(vars, vec![deg; nvars], cap);
        let constant = CycloLaurent::rational(c0).shift(omega);
        let linear: Vec<(usize, CycloLaurent)> = (1..nvars).map(|b| (b, CycloLaurent::rational(lin[b - 1].clone()))).collect();
        let s = series_factor_expand(&shape, 0, &linear, &constant).unwrap();
        let mut factor = TruncatedSeries::variable(&shape, 0, CycloLaurent::one());
        for (b, l) in &linear {
            factor = factor.sub(&TruncatedSeries::variable(&shape, *b, l.clone()));
        }
        factor = factor.sub(&TruncatedSeries::constant(&shape, constant));
        prop_assert_eq!(s.mul(&factor), TruncatedSeries::variable(&shape, 0, CycloLaurent::one()));
        Ok(())
    })
}

const SMALL: [&str; 8] = ["A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4"];

pub fn projection_independence(cases: u32) -> Result<(), String> {
    let systems: Vec<_> = SMALL.iter().map(|s| parse_system(s).unwrap()).collect();
    let strategy = (0..systems.len(), 1u32..15, prop::collection::vec(small_rational(), 4));
    check(cases, strategy, |(si, mask, v)| {
        let d = &systems[si];
        let i_set: Vec<usize> = (0..d.rank).filter(|i| mask >> i & 1 == 1).collect();
        prop_assume!(!i_set.is_empty() && i_set.len() < d.rank);
        let par = d.parabolic(&i_set).unwrap();
        let v = &v[..d.rank];
        let subsets = independent_subsets(d, &par);
        for b in enumerate_bases(d, &par).unwrap() {
            let p = projection_p(d, &b, v);
            for s in &subsets {
                let (x, y) = projection_via(d, &b.v_i, s, v).unwrap();
                prop_assert_eq!(&x, &p);
                prop_assert_eq!(&y, &p);
            }
        }
        Ok(())
    })
}

pub fn inversion_sets(cases: u32) -> Result<(), String> {
    let data: Vec<_> = ["A3", "B3", "C3", "G2", "D4", "A4", "B4"]
        .iter()
        .map(|s| {
            let d = parse_system(s).unwrap();
            let g = enumerate_weyl(&d).unwrap();
            (d, g)
        })
        .collect();
    check(cases, (0..data.len(), any::<prop::sample::Index>()), |(si, idx)| {
        let (d, g) = &data[si];
        let w = idx.index(g.len());
        let len = g.elements[w].length();
        prop_assert_eq!(g.inversion_set(w).len(), len);
        // independent count: positive roots sent negative by w^{-1}
        let count = d.positive_roots.iter().filter(|r| g.act_inv(w, &r.coords).iter().any(|&x| x < 0)).count();
        prop_assert_eq!(count, len);
        prop_assert_eq!(g.delta_w(w).len(), len);
        Ok(())
    })
}

pub fn harmonic_product(cases: u32) -> Result<(), String> {
    check(cases, (1.2f64..5.0, 1.2f64..5.0, -3.0f64..3.0, 10u64..300), |(a, b, t, n)| {
        let r = harmonic_product_residual(Complex64::new(a, t), Complex64::new(b, -t / 2.0), n);
        prop_assert!(r < 1e-12, "residual {r} at ({a}, {b}, {t}), N = {n}");
        Ok(())
    })
}

pub fn basis_order_invariance(cases: u32) -> Result<(), String> {
    // Cases with six roots outside Delta_I and weight above 6 take minutes each, so they are left out.
    let cases_list: Vec<(RootSystemData, Vec<usize>)> = [
        ("A2", vec![]),
        ("A2", vec![0]),
        ("A2", vec![1]),
        ("B2", vec![]),
        ("B2", vec![0]),
        ("B2", vec![1]),
        ("G2", vec![0]),
        ("G2", vec![1]),
        ("A3", vec![0]),
        ("A3", vec![1]),
        ("A3", vec![0, 1]),
        ("A3", vec![0, 2]),
        ("A3", vec![1, 2]),
    ]
    .into_iter()
    .map(|(s, i)| (parse_system(s).unwrap(), i))
    .collect();
    let strategy = (0..cases_list.len(), prop::collection::vec(0u32..=2, 6), prop::collection::vec(1i64..=3, 3), prop::collection::vec(0i64..=3, 3), 1u64..4);
    check(cases, strategy, |(ci, kk, lam, ynum, rot)| {
        let (d, i_set) = &cases_list[ci];
        let ctx = match BernoulliContext::new(d, i_set, Some(7)) {
            Ok(c) => c,
            Err(_) => return Err(TestCaseError::reject("context")),
        };
        let mut k: Vec<u32> = kk.iter().copied().cycle().take(ctx.n_star()).collect();
        while k.iter().sum::<u32>() > 6 {
            *k.iter_mut().rev().find(|x| **x > 0).unwrap() -= 1;
        }
        let m: Vec<i64> = (0..d.rank).map(|i| if i_set.contains(&i) { lam[i] } else { 0 }).collect();
        let y: Vec<Rational> = (0..d.rank).map(|i| rat(ynum[i], 4)).collect();
        let mut perm = ctx.clone();
        let r = rot as usize % perm.bases.len().max(1);
        perm.bases.rotate_left(r);
        perm.quotients.rotate_left(r);
        for q in &mut perm.quotients {
            q.representatives.reverse();
        }
        let a = expand_p(&ctx, &m, &y, &k);
        let b = expand_p(&perm, &m, &y, &k);
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "only one order failed: {a:?} / {b:?}"),
        }
        Ok(())
    })
}
