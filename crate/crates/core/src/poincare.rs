//! Poincaré polynomials of Weyl groups and parabolic quotients, their values at -1,
//! the two-length specializations and the non-vanishing tables built on them.

use crate::algebra::poly::{BiPoly, UniPoly};
use crate::algebra::rational::{int, Rational};
use crate::error::{Error, Result};
use crate::rootsys::{format_type_product, parse_type_product, CartanType, Family, RootSystemData};
use crate::weyl::{min_coset_reps, WeylGroup};
use num_traits::{One, Zero};
use serde::Serialize;

/// Degrees of the basic invariants.
pub fn degrees(t: CartanType) -> Vec<u32> {
    let r = t.rank as u32;
    match t.family {
        Family::A => (2..=r + 1).collect(),
        Family::B | Family::C => (1..=r).map(|i| 2 * i).collect(),
        Family::D => {
            let mut v: Vec<u32> = (1..r).map(|i| 2 * i).collect();
            v.push(r);
            v.sort_unstable();
            v
        }
        Family::E => match r {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

pub fn degrees_of_product(types: &[CartanType]) -> Vec<u32> {
    let mut v: Vec<u32> = types.iter().flat_map(|&t| degrees(t)).collect();
    v.sort_unstable();
    v
}

pub fn group_order(types: &[CartanType]) -> u64 {
    degrees_of_product(types).iter().map(|&d| d as u64).product()
}

/// prod_i (u^{d_i} - 1)/(u - 1)
pub fn chevalley_poly(t: CartanType) -> UniPoly {
    chevalley_product(&[t])
}

pub fn chevalley_product(types: &[CartanType]) -> UniPoly {
    degrees_of_product(types).iter().fold(UniPoly::one(), |acc, &d| &acc * &UniPoly::q_integer(d as usize))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum PoincarePoly {
    Uni(UniPoly),
    /// Variables (u_L, u_S).
    Bi(BiPoly),
}

impl PoincarePoly {
    pub fn to_text(&self) -> String {
        match self {
            PoincarePoly::Uni(p) => p.to_string(),
            PoincarePoly::Bi(p) => p.to_string(),
        }
    }

    pub fn value_at_one(&self) -> Rational {
        match self {
            PoincarePoly::Uni(p) => p.eval(&Rational::one()),
            PoincarePoly::Bi(p) => p.eval(&Rational::one(), &Rational::one()),
        }
    }
}

/// sum over elements of prod_{alpha in Delta_{w^{-1}}} u_alpha, with u_L on long and
/// u_S on short roots when `split` is set.
pub fn generalized_poincare(d: &RootSystemData, g: &WeylGroup, elements: &[usize], split: bool) -> PoincarePoly {
    if split && !d.is_simply_laced() {
        let mut p = BiPoly::zero();
        for &w in elements {
            let inv = g.inversion_set(w);
            let nl = inv.iter().filter(|&&a| d.positive_roots[a].long).count();
            p.add_term(nl, inv.len() - nl, Rational::one());
        }
        PoincarePoly::Bi(p)
    } else {
        let mut c = vec![Rational::zero(); d.n_pos() + 1];
        for &w in elements {
            c[g.inversion_set(w).len()] += Rational::one();
        }
        PoincarePoly::Uni(UniPoly::new(c))
    }
}

/// W^I(u) = W(u) / W_I(u), exact.
pub fn relative_poly(d: &RootSystemData, i_set: &[usize]) -> Result<UniPoly> {
    chevalley_poly(d.ctype).exact_div(&chevalley_product(&d.parabolic_type(i_set)))
}

/// Value at u = -1 of the quotient of two Chevalley products: 0 if the numerator has
/// more even degrees, otherwise the ratio of the products of the even degrees.
pub fn minus_one_value(num: &[u32], den: &[u32]) -> Rational {
    let k: Vec<u32> = num.iter().copied().filter(|d| d % 2 == 0).collect();
    let ki: Vec<u32> = den.iter().copied().filter(|d| d % 2 == 0).collect();
    if k.len() > ki.len() {
        return Rational::zero();
    }
    let p: u64 = k.iter().map(|&d| d as u64).product();
    let q: u64 = ki.iter().map(|&d| d as u64).product();
    Rational::new(p.into(), q.into())
}

/// W^I((-1)) from the degrees of Delta and of Delta_I.
pub fn eval_minus_one(d: &RootSystemData, i_set: &[usize]) -> Rational {
    eval_minus_one_types(d.ctype, &d.parabolic_type(i_set))
}

pub fn eval_minus_one_types(t: CartanType, sub: &[CartanType]) -> Rational {
    minus_one_value(&degrees(t), &degrees_of_product(sub))
}

/// W^I((-1)) summed over the enumerated coset representatives.
pub fn eval_minus_one_enumerated(g: &WeylGroup, i_set: &[usize]) -> Rational {
    let c = min_coset_reps(g, i_set);
    let s: i64 = c.w_upper_i.iter().map(|&w| if g.inversion_set(w).len() % 2 == 0 { 1 } else { -1 }).sum();
    int(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct MixedEval {
    #[serde(serialize_with = "crate::algebra::rational::ser_rational")]
    pub value: Rational,
    /// Type of the class receiving -1, and of its intersection with Delta_I.
    pub delta1: String,
    pub delta1_i: String,
    pub w_j_order: u64,
    pub w_ij_order: u64,
    /// Whether the pair appears in the published table of the two-length case.
    pub tabulated: bool,
}

/// W^I((-1),(1)) (or ((1),(-1)) when `minus_one_on_long` is false) through the
/// factorization W(Delta)((u),(1)) = |W_J| W(Delta_1)((u)).
pub fn mixed_eval(d: &RootSystemData, i_set: &[usize], minus_one_on_long: bool) -> Result<MixedEval> {
    let split = d.long_short_split(minus_one_on_long)?;
    let par = d.parabolic(i_set)?;
    let d1 = d.subsystem_type(&split.delta1);
    let d1i_roots: Vec<usize> = split.delta1.iter().copied().filter(|a| par.delta_i_plus.contains(a)).collect();
    let d1i = d.subsystem_type(&d1i_roots);
    let ij: Vec<usize> = split.j.iter().copied().filter(|j| par.i_set.contains(j)).collect();
    let wj = group_order(&d.parabolic_type(&split.j));
    let wij = group_order(&d.parabolic_type(&ij));
    let core = minus_one_value(&degrees_of_product(&d1), &degrees_of_product(&d1i));
    let value = core * Rational::new(wj.into(), wij.into());
    let sub = d.parabolic_type(&par.i_set);
    let tabulated = is_tabulated_mixed(d.ctype, &sub, minus_one_on_long, par.i_set.len() < d.rank);
    Ok(MixedEval {
        value,
        delta1: format_type_product(&d1),
        delta1_i: format_type_product(&d1i),
        w_j_order: wj,
        w_ij_order: wij,
        tabulated,
    })
}

fn is_tabulated_mixed(t: CartanType, sub: &[CartanType], long: bool, proper: bool) -> bool {
    let one = |f: Family, r: usize| sub.len() == 1 && sub[0] == CartanType::new(f, r);
    match t.family {
        Family::B => t.rank % 2 == 1 && long && one(Family::B, t.rank - 1),
        Family::C => t.rank % 2 == 1 && !long && one(Family::C, t.rank - 1),
        Family::G => one(Family::A, 1),
        Family::F => proper,
        _ => false,
    }
}

/// W^I((-1),(1)) by direct enumeration, -1 on the chosen class.
pub fn mixed_eval_enumerated(d: &RootSystemData, g: &WeylGroup, i_set: &[usize], minus_one_on_long: bool) -> Rational {
    let c = min_coset_reps(g, i_set);
    let s: i64 = c
        .w_upper_i
        .iter()
        .map(|&w| {
            let n = g.inversion_set(w).iter().filter(|&&a| d.positive_roots[a].long == minus_one_on_long).count();
            if n % 2 == 0 { 1 } else { -1 }
        })
        .sum();
    int(s)
}

/// First index set (in lexicographic bitmask order) whose Dynkin subdiagram has the given
/// component types, e.g. D5 inside E6.
pub fn find_subdiagram(d: &RootSystemData, types: &[CartanType]) -> Option<Vec<usize>> {
    let mut want = types.to_vec();
    want.sort();
    let size: usize = want.iter().map(|t| t.rank).sum();
    let norm = |v: &[CartanType]| -> Vec<CartanType> {
        // B2 and C2 are the same diagram
        let mut v: Vec<CartanType> =
            v.iter().map(|t| if t.rank == 2 && t.family == Family::C { CartanType::new(Family::B, 2) } else { *t }).collect();
        v.sort();
        v
    };
    let want = norm(&want);
    (0u32..1 << d.rank).filter(|m| m.count_ones() as usize == size).find_map(|m| {
        let set: Vec<usize> = (0..d.rank).filter(|i| m >> i & 1 == 1).collect();
        (norm(&d.parabolic_type(&set)) == want).then_some(set)
    })
}

/// Parse an I specification: 1-based indices "1,3" or a subsystem type such as "D5" / "A1xA2".
pub fn resolve_index_set(d: &RootSystemData, s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) && !t.eq_ignore_ascii_case("none") {
        let types = parse_type_product(t)?;
        return find_subdiagram(d, &types).ok_or_else(|| Error::InvalidInput(format!("no subdiagram of type {t} in {}", d.name())));
    }
    crate::rootsys::parse_index_set(t, d.rank)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub case: String,
    pub delta: String,
    #[serde(rename = "deltaI")]
    pub delta_i: String,
    pub class: Option<String>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn row(case: &str, delta: &str, sub: &str, class: Option<&str>, expected: i64, computed: Result<Rational>) -> TableRow {
    let (computed, pass) = match computed {
        Ok(v) => (crate::algebra::rational::format_rational(&v), v == int(expected)),
        Err(e) => (format!("error: {e}"), false),
    };
    TableRow {
        case: case.into(),
        delta: delta.into(),
        delta_i: sub.into(),
        class: class.map(str::to_string),
        expected: expected.to_string(),
        computed,
        pass,
    }
}

fn eval_by_types(sys: &str, sub: &str) -> Result<Rational> {
    let d = crate::rootsys::parse_system(sys)?;
    let i = resolve_index_set(&d, sub)?;
    Ok(eval_minus_one(&d, &i))
}

fn mixed_by_types(sys: &str, idx: &[usize], long: bool) -> Result<Rational> {
    let d = crate::rootsys::parse_system(sys)?;
    Ok(mixed_eval(&d, idx, long)?.value)
}

/// Both non-vanishing tables: equal-length case and two-length case.
pub fn nonvanishing_tables() -> Vec<TableRow> {
    let mut rows = vec![
        row("one length", "A3", "A1xA1", None, 2, eval_by_types("A3", "A1xA1")),
        row("one length", "A4", "A1xA1", None, 2, eval_by_types("A4", "A1xA1")),
        row("one length", "A4", "A1xA2", None, 2, eval_by_types("A4", "A1xA2")),
        row("one length", "A5", "A1^3", None, 6, eval_by_types("A5", "A1^3")),
        row("one length", "A2", "A1", None, 1, eval_by_types("A2", "A1")),
        row("one length", "A4", "A3", None, 1, eval_by_types("A4", "A3")),
        row("one length", "D5", "D4", None, 2, eval_by_types("D5", "D4")),
        row("one length", "E6", "D5", None, 3, eval_by_types("E6", "D5")),
        row("one length", "E6", "D4", None, 6, eval_by_types("E6", "D4")),
    ];
    rows.push(row("two lengths", "B3", "B2", Some("long"), 2, mixed_by_types("B3", &[1, 2], true)));
    rows.push(row("two lengths", "C3", "C2", Some("short"), 2, mixed_by_types("C3", &[1, 2], false)));
    rows.push(row("two lengths", "G2", "A1 (long)", Some("long"), 2, mixed_by_types("G2", &[1], true)));
    rows.push(row("two lengths", "G2", "A1 (short)", Some("short"), 2, mixed_by_types("G2", &[0], false)));
    for long in [true, false] {
        let v = (|| -> Result<Rational> {
            let d = crate::rootsys::parse_system("F4")?;
            let mut worst = Rational::zero();
            for m in 0u32..15 {
                let set: Vec<usize> = (0..4).filter(|i| m >> i & 1 == 1).collect();
                let x = mixed_eval(&d, &set, long)?.value;
                if !x.is_zero() {
                    worst = x;
                }
            }
            Ok(worst)
        })();
        rows.push(row("two lengths", "F4", "any proper", Some(if long { "long" } else { "short" }), 0, v));
    }
    rows
}
