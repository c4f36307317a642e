//! Root systems: simple roots in the Bourbaki realizations, positive roots, coroots,
//! fundamental weights, parabolic data and Cartan-type identification.

use crate::algebra::rational::{dot, int, invert, rat, Rational};
use crate::error::{Error, Result};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A (family, rank) label such as C3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Self {
        CartanType { family, rank }
    }

    /// Parses "A2", "c3", "G2", "E6".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let f = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Parse(format!("unknown root system {s:?}"))),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        Ok(CartanType::new(f, rank))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Parse a product of types, e.g. "A1xA2", "A1^3", "D5".
pub fn parse_type_product(s: &str) -> Result<Vec<CartanType>> {
    let mut out = Vec::new();
    for part in s.split(['x', 'X', '*']) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (base, mult) = match part.split_once('^') {
            Some((b, m)) => (b, m.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?),
            None => (part, 1),
        };
        let t = CartanType::parse(base)?;
        out.extend(std::iter::repeat_n(t, mult));
    }
    out.sort();
    Ok(out)
}

pub fn format_type_product(v: &[CartanType]) -> String {
    if v.is_empty() {
        return "empty".into();
    }
    v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
}

#[derive(Clone, Debug, Serialize)]
pub struct Root {
    /// Coordinates in the simple roots.
    pub coords: Vec<i64>,
    /// Coordinates of the coroot in the simple coroots; these are the linear forms
    /// lambda = sum m_i lambda_i  ->  <alpha^vee, lambda> = sum coroot_coords[i] m_i.
    pub coroot_coords: Vec<i64>,
    #[serde(skip)]
    pub ambient: Vec<Rational>,
    #[serde(skip)]
    pub coroot_ambient: Vec<Rational>,
    #[serde(skip)]
    pub norm2: Rational,
    pub long: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn coroot_height(&self) -> i64 {
        self.coroot_coords.iter().sum()
    }

    /// The linear form <alpha^vee, lambda> as text in m1, m2, ...
    pub fn form_label(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.coroot_coords.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("m{}", i + 1)),
                _ => parts.push(format!("{c}m{}", i + 1)),
            }
        }
        parts.join("+")
    }

    /// <alpha^vee, lambda> for lambda in fundamental-weight coordinates.
    #[inline]
    pub fn form(&self, m: &[i64]) -> i64 {
        self.coroot_coords.iter().zip(m).map(|(a, b)| a * b).sum()
    }

    pub fn form_rat(&self, m: &[Rational]) -> Rational {
        self.coroot_coords.iter().zip(m).map(|(a, b)| int(*a) * b).sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub ctype: CartanType,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Rational>>,
    /// Positive roots in canonical order (coroot height, then descending coroot coordinates).
    pub positive_roots: Vec<Root>,
    pub fundamental_weights: Vec<Vec<Rational>>,
    /// A[i][j] = <alpha_i^vee, alpha_j>.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix of the simple roots.
    pub inner_product: Vec<Vec<Rational>>,
    /// Whether Weyl-group enumeration is supported.
    pub enumerable: bool,
    root_index: HashMap<Vec<i64>, usize>,
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    (0..dim).map(|k| if k == i { int(1) } else { int(0) }).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

fn simple_roots(t: CartanType) -> Result<(usize, Vec<Vec<Rational>>)> {
    let r = t.rank;
    let unsupported = |why: &str| Error::UnsupportedRank { family: t.family.letter().to_string(), rank: r, reason: why.into() };
    let e = |dim: usize, i: usize| unit(dim, i);
    let chain = |dim: usize, n: usize| -> Vec<Vec<Rational>> { (0..n).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect() };
    match t.family {
        Family::A => {
            if !(1..=8).contains(&r) {
                return Err(unsupported("type A is built for ranks 1..=8"));
            }
            Ok((r + 1, chain(r + 1, r)))
        }
        Family::B | Family::C => {
            if !(2..=8).contains(&r) {
                return Err(unsupported("types B and C are built for ranks 2..=8"));
            }
            let mut v = chain(r, r - 1);
            let last = if t.family == Family::B { e(r, r - 1) } else { scale(&e(r, r - 1), &int(2)) };
            v.push(last);
            Ok((r, v))
        }
        Family::D => {
            if !(4..=8).contains(&r) {
                return Err(unsupported("type D is built for ranks 4..=8"));
            }
            let mut v = chain(r, r - 1);
            v.push(add(&e(r, r - 2), &e(r, r - 1)));
            Ok((r, v))
        }
        Family::G => {
            if r != 2 {
                return Err(unsupported("G exists only in rank 2"));
            }
            let a1 = sub(&e(3, 0), &e(3, 1));
            let a2 = vec![int(-2), int(1), int(1)];
            Ok((3, vec![a1, a2]))
        }
        Family::F => {
            if r != 4 {
                return Err(unsupported("F exists only in rank 4"));
            }
            let h = rat(1, 2);
            Ok((
                4,
                vec![
                    sub(&e(4, 1), &e(4, 2)),
                    sub(&e(4, 2), &e(4, 3)),
                    e(4, 3),
                    vec![h.clone(), -h.clone(), -h.clone(), -h],
                ],
            ))
        }
        Family::E => {
            if !(6..=8).contains(&r) {
                return Err(unsupported("E exists in ranks 6, 7, 8"));
            }
            let h = rat(1, 2);
            let mut v = Vec::new();
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            v.push(a1);
            v.push(add(&e(8, 0), &e(8, 1)));
            for i in 0..6 {
                v.push(sub(&e(8, i + 1), &e(8, i)));
            }
            v.truncate(r);
            Ok((8, v))
        }
    }
}

fn enumerable(t: CartanType) -> bool {
    match t.family {
        Family::A => t.rank <= 5,
        Family::B | Family::C => t.rank <= 4,
        Family::D => t.rank == 4,
        Family::G => true,
        Family::E | Family::F => false,
    }
}

impl RootSystemData {
    pub fn name(&self) -> String {
        self.ctype.to_string()
    }

    pub fn n_pos(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a root given in simple-root coordinates, with its sign.
    pub fn find_root(&self, coords: &[i64]) -> Option<(usize, i64)> {
        if let Some(&i) = self.root_index.get(coords) {
            return Some((i, 1));
        }
        let neg: Vec<i64> = coords.iter().map(|x| -x).collect();
        self.root_index.get(&neg).map(|&i| (i, -1))
    }

    pub fn simple_index(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        self.root_index[&c]
    }

    pub fn is_simply_laced(&self) -> bool {
        self.positive_roots.iter().all(|r| r.long)
    }

    pub fn root_label(&self, idx: usize) -> String {
        self.positive_roots[idx].form_label()
    }

    /// Exact pairing of two ambient vectors.
    pub fn pairing(&self, coroot: &[Rational], weight: &[Rational]) -> Result<Rational> {
        if coroot.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: coroot.len() });
        }
        if weight.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: weight.len() });
        }
        Ok(dot(coroot, weight))
    }

    /// Ambient vector of a weight given in fundamental-weight coordinates.
    pub fn weight_ambient(&self, m: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient_dim];
        for (mi, l) in m.iter().zip(&self.fundamental_weights) {
            for (a, b) in v.iter_mut().zip(l) {
                *a += mi * b;
            }
        }
        v
    }

    /// Ambient vector of sum y_i alpha_i^vee.
    pub fn coroot_combination(&self, y: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient_dim];
        for (i, yi) in y.iter().enumerate() {
            let c = &self.positive_roots[self.simple_index(i)].coroot_ambient;
            for (a, b) in v.iter_mut().zip(c) {
                *a += yi * b;
            }
        }
        v
    }

    /// True iff <alpha^vee, v> = 0 for some root alpha (v ambient).
    pub fn on_wall(&self, v: &[Rational]) -> bool {
        self.positive_roots.iter().any(|r| dot(&r.coroot_ambient, v).is_zero())
    }

    /// Wall test for a weight in fundamental-weight coordinates.
    pub fn on_wall_fw(&self, m: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r.form(m) == 0)
    }

    pub fn parabolic(&self, i_set: &[usize]) -> Result<ParabolicData> {
        let mut i_set = i_set.to_vec();
        i_set.sort_unstable();
        i_set.dedup();
        if let Some(&bad) = i_set.iter().find(|&&i| i >= self.rank) {
            return Err(Error::InvalidInput(format!("index {} out of range for {}", bad + 1, self.name())));
        }
        let inside = |r: &Root| r.coords.iter().enumerate().all(|(k, &c)| c == 0 || i_set.contains(&k));
        let (mut plus, mut star) = (Vec::new(), Vec::new());
        for (idx, r) in self.positive_roots.iter().enumerate() {
            if inside(r) {
                plus.push(idx);
            } else {
                star.push(idx);
            }
        }
        let comp = (0..self.rank).filter(|i| !i_set.contains(i)).collect();
        Ok(ParabolicData { i_set, i_complement: comp, delta_i_plus: plus, delta_star: star })
    }

    /// Split by root length; `first_long` selects which class is Delta_1.
    pub fn long_short_split(&self, first_long: bool) -> Result<LongShortSplit> {
        if self.is_simply_laced() {
            return Err(Error::SimplyLaced(self.name()));
        }
        let (mut d1, mut d2) = (Vec::new(), Vec::new());
        for (i, r) in self.positive_roots.iter().enumerate() {
            if r.long == first_long {
                d1.push(i);
            } else {
                d2.push(i);
            }
        }
        let j = (0..self.rank).filter(|&i| d2.contains(&self.simple_index(i))).collect();
        Ok(LongShortSplit { first_long, delta1: d1, delta2: d2, j })
    }

    /// Cartan type of the root subsystem formed by a set of positive roots (closed under
    /// the subsystem's reflections), via its indecomposable elements.
    pub fn subsystem_type(&self, roots: &[usize]) -> Vec<CartanType> {
        if roots.is_empty() {
            return vec![];
        }
        let set: std::collections::HashSet<&Vec<i64>> = roots.iter().map(|&i| &self.positive_roots[i].coords).collect();
        let simple: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&i| {
                let c = &self.positive_roots[i].coords;
                !roots.iter().any(|&j| {
                    let d: Vec<i64> = c.iter().zip(&self.positive_roots[j].coords).map(|(a, b)| a - b).collect();
                    j != i && set.contains(&d)
                })
            })
            .collect();
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|&i| {
                let ri = &self.positive_roots[i];
                simple
                    .iter()
                    .map(|&j| (dot(&ri.coroot_ambient, &self.positive_roots[j].ambient)).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        identify_cartan(&cartan, self.ctype.family == Family::C)
    }

    /// Types of the components of Delta_I.
    pub fn parabolic_type(&self, i_set: &[usize]) -> Vec<CartanType> {
        let sub: Vec<Vec<i64>> = i_set.iter().map(|&i| i_set.iter().map(|&j| self.cartan[i][j]).collect()).collect();
        identify_cartan(&sub, self.ctype.family == Family::C)
    }

    /// Permutation `p` with `p[k]` = canonical index of the k-th root in the
    /// customary textbook order: (i,j)-lexicographic over e_i - e_j for type A, the
    /// listing m1, m2, m3, m1+m2, m2+m3, m2+2m3, m1+m2+m3, m1+m2+2m3, m1+2m2+2m3 for C3,
    /// and the canonical order otherwise.
    pub fn classic_order(&self) -> Vec<usize> {
        let n = self.rank;
        match (self.ctype.family, n) {
            (Family::A, _) => {
                let mut out = Vec::new();
                for i in 0..n {
                    for j in i + 1..=n {
                        let c: Vec<i64> = (0..n).map(|k| if k >= i && k < j { 1 } else { 0 }).collect();
                        out.push(self.root_index[&c]);
                    }
                }
                out
            }
            (Family::C, 3) => {
                let forms: [[i64; 3]; 9] =
                    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [0, 1, 2], [1, 1, 1], [1, 1, 2], [1, 2, 2]];
                forms
                    .iter()
                    .map(|f| self.positive_roots.iter().position(|r| r.coroot_coords == f).expect("C3 form"))
                    .collect()
            }
            _ => (0..self.n_pos()).collect(),
        }
    }

    /// Reorder a vector given in textbook order into canonical order.
    pub fn from_classic_order<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let p = self.classic_order();
        let mut out = v.to_vec();
        for (k, &c) in p.iter().enumerate() {
            out[c] = v[k].clone();
        }
        out
    }

    /// Reorder a canonical-order vector into textbook order.
    pub fn to_classic_order<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.classic_order().iter().map(|&c| v[c].clone()).collect()
    }

    pub fn dump(&self) -> RootSystemDump {
        RootSystemDump {
            system: self.name(),
            rank: self.rank,
            ambient_dim: self.ambient_dim,
            enumerable: self.enumerable,
            cartan: self.cartan.clone(),
            simple_roots: self.simple_roots.iter().map(|v| fmt_vec(v)).collect(),
            fundamental_weights: self.fundamental_weights.iter().map(|v| fmt_vec(v)).collect(),
            positive_roots: self
                .positive_roots
                .iter()
                .map(|r| RootDump {
                    coords: r.coords.clone(),
                    ambient: fmt_vec(&r.ambient),
                    coroot: fmt_vec(&r.coroot_ambient),
                    form: r.form_label(),
                    long: r.long,
                })
                .collect(),
        }
    }
}

fn fmt_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(crate::algebra::rational::format_rational).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemDump {
    pub system: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub enumerable: bool,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<String>>,
    pub fundamental_weights: Vec<Vec<String>>,
    pub positive_roots: Vec<RootDump>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootDump {
    pub coords: Vec<i64>,
    pub ambient: Vec<String>,
    pub coroot: Vec<String>,
    pub form: String,
    pub long: bool,
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystemData> {
    build(CartanType::new(family, rank))
}

pub fn build(t: CartanType) -> Result<RootSystemData> {
    let (dim, simple) = simple_roots(t)?;
    let r = t.rank;
    let gram: Vec<Vec<Rational>> = simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect();
    let cartan: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| (int(2) * &gram[i][j] / &gram[i][i]).to_integer().to_i64().unwrap()).collect())
        .collect();

    // closure under simple reflections in root coordinates
    let mut roots: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|k| i64::from(k == i)).collect()).collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut head = 0;
    while head < roots.len() {
        let v = roots[head].clone();
        head += 1;
        for i in 0..r {
            let p: i64 = (0..r).map(|k| cartan[i][k] * v[k]).sum();
            let mut w = v.clone();
            w[i] -= p;
            if w.iter().all(|&x| x >= 0) && w.iter().any(|&x| x > 0) && seen.insert(w.clone()) {
                roots.push(w);
            }
        }
    }

    let max_norm = (0..r).map(|i| gram[i][i].clone()).max().unwrap();
    let mut pos: Vec<Root> = roots
        .into_iter()
        .map(|c| {
            let mut amb = vec![Rational::zero(); dim];
            for (k, &ck) in c.iter().enumerate() {
                for (a, b) in amb.iter_mut().zip(&simple[k]) {
                    *a += int(ck) * b;
                }
            }
            let n2 = dot(&amb, &amb);
            let cor = scale(&amb, &(int(2) / &n2));
            let coroot_coords = c
                .iter()
                .enumerate()
                .map(|(k, &ck)| (int(ck) * &gram[k][k] / &n2).to_integer().to_i64().unwrap())
                .collect();
            Root { long: n2 == max_norm, coords: c, coroot_coords, ambient: amb, coroot_ambient: cor, norm2: n2 }
        })
        .collect();
    pos.sort_by(|a, b| a.coroot_height().cmp(&b.coroot_height()).then_with(|| b.coroot_coords.cmp(&a.coroot_coords)));

    let cart_rat: Vec<Vec<Rational>> = cartan.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
    let inv = invert(&cart_rat).expect("Cartan matrix is invertible");
    // lambda_j = sum_k (A^{-1})_{kj} alpha_k
    let fw: Vec<Vec<Rational>> = (0..r)
        .map(|j| {
            let mut v = vec![Rational::zero(); dim];
            for k in 0..r {
                for (a, b) in v.iter_mut().zip(&simple[k]) {
                    *a += &inv[k][j] * b;
                }
            }
            v
        })
        .collect();
    let root_index = pos.iter().enumerate().map(|(i, rt)| (rt.coords.clone(), i)).collect();
    Ok(RootSystemData {
        ctype: t,
        rank: r,
        ambient_dim: dim,
        simple_roots: simple,
        positive_roots: pos,
        fundamental_weights: fw,
        cartan,
        inner_product: gram,
        enumerable: enumerable(t),
        root_index,
    })
}

pub fn parse_system(s: &str) -> Result<RootSystemData> {
    build(CartanType::parse(s)?)
}

/// Parse a 1-based comma-separated index list ("2,3"), or "" / "none" for the empty set.
pub fn parse_index_set(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s.eq_ignore_ascii_case("none") || s == "{}" {
        return Ok(vec![]);
    }
    let mut v = Vec::new();
    for p in s.split(',') {
        let i: usize = p.trim().parse().map_err(|_| Error::Parse(format!("bad index {p:?}")))?;
        if i == 0 || i > rank {
            return Err(Error::InvalidInput(format!("index {i} outside 1..={rank}")));
        }
        v.push(i - 1);
    }
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Identify the connected components of a Cartan matrix. For a two-node double bond
/// the label is C2 when `prefer_c`, B2 otherwise.
pub fn identify_cartan(a: &[Vec<i64>], prefer_c: bool) -> Vec<CartanType> {
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut h = 0;
        while h < nodes.len() {
            let i = nodes[h];
            h += 1;
            for j in 0..n {
                if j != i && a[i][j] != 0 && comp[j] == usize::MAX {
                    comp[j] = start;
                    nodes.push(j);
                }
            }
        }
        out.push(identify_connected(a, &nodes, prefer_c));
    }
    out.sort();
    out
}

fn identify_connected(a: &[Vec<i64>], nodes: &[usize], prefer_c: bool) -> CartanType {
    let n = nodes.len();
    if n == 1 {
        return CartanType::new(Family::A, 1);
    }
    let nbrs = |i: usize| nodes.iter().copied().filter(move |&j| j != i && a[i][j] != 0);
    let mut triple = false;
    let mut double: Option<(usize, usize)> = None;
    for &i in nodes {
        for j in nbrs(i) {
            match a[i][j] * a[j][i] {
                3 => triple = true,
                2 => double = Some((i, j)),
                _ => {}
            }
        }
    }
    if triple {
        return CartanType::new(Family::G, 2);
    }
    let degree = |i: usize| nbrs(i).count();
    if let Some((i, j)) = double {
        if n == 2 {
            return CartanType::new(if prefer_c { Family::C } else { Family::B }, 2);
        }
        if n == 4 && degree(i) == 2 && degree(j) == 2 {
            return CartanType::new(Family::F, 4);
        }
        // the end node of the double bond; it is short iff |a[end][other]| = 2
        let (end, other) = if degree(i) == 1 { (i, j) } else { (j, i) };
        let short_end = a[end][other].abs() == 2;
        return CartanType::new(if short_end { Family::B } else { Family::C }, n);
    }
    let branch = nodes.iter().copied().find(|&i| degree(i) >= 3);
    let Some(b) = branch else {
        return CartanType::new(Family::A, n);
    };
    let mut arms: Vec<usize> = nbrs(b)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (b, start, 1);
            loop {
                let next: Vec<usize> = nbrs(cur).filter(|&x| x != prev).collect();
                if next.is_empty() {
                    break len;
                }
                prev = cur;
                cur = next[0];
                len += 1;
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => CartanType::new(Family::D, n),
        [1, 2, 2] => CartanType::new(Family::E, 6),
        [1, 2, 3] => CartanType::new(Family::E, 7),
        [1, 2, 4] => CartanType::new(Family::E, 8),
        _ => panic!("not a finite-type Dynkin diagram"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicData {
    /// I, 0-based and sorted.
    pub i_set: Vec<usize>,
    pub i_complement: Vec<usize>,
    /// Indices of Delta_{I+} among the positive roots.
    pub delta_i_plus: Vec<usize>,
    /// Indices of Delta* = Delta_+ \ Delta_{I+}.
    pub delta_star: Vec<usize>,
}

impl ParabolicData {
    pub fn contains(&self, i: usize) -> bool {
        self.i_set.contains(&i)
    }

    /// iota^*: restrict fundamental-weight coordinates to I.
    pub fn iota_star(&self, m: &[i64]) -> Vec<i64> {
        self.i_set.iter().map(|&i| m[i]).collect()
    }

    /// lambda in P_I: supported on I.
    pub fn in_p_i(&self, m: &[i64]) -> bool {
        self.i_complement.iter().all(|&i| m[i] == 0)
    }

    pub fn in_p_i_plus(&self, m: &[i64]) -> bool {
        self.in_p_i(m) && self.i_set.iter().all(|&i| m[i] >= 0)
    }

    pub fn in_p_i_plusplus(&self, m: &[i64]) -> bool {
        self.in_p_i(m) && self.i_set.iter().all(|&i| m[i] >= 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LongShortSplit {
    /// Whether Delta_1 is the long class.
    pub first_long: bool,
    pub delta1: Vec<usize>,
    pub delta2: Vec<usize>,
    /// Indices i with alpha_i in Delta_2.
    pub j: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystemData {
        parse_system(s).unwrap()
    }

    #[test]
    fn root_counts() {
        for r in 1..=8 {
            assert_eq!(sys(&format!("A{r}")).n_pos(), r * (r + 1) / 2);
        }
        for r in 2..=8 {
            assert_eq!(sys(&format!("B{r}")).n_pos(), r * r);
            assert_eq!(sys(&format!("C{r}")).n_pos(), r * r);
        }
        for r in 4..=8 {
            assert_eq!(sys(&format!("D{r}")).n_pos(), r * (r - 1));
        }
        assert_eq!(sys("G2").n_pos(), 6);
        assert_eq!(sys("F4").n_pos(), 24);
        assert_eq!(sys("E6").n_pos(), 36);
        assert_eq!(sys("E7").n_pos(), 63);
        assert_eq!(sys("E8").n_pos(), 120);
    }

    #[test]
    fn unsupported() {
        assert!(matches!(parse_system("D3"), Err(Error::UnsupportedRank { .. })));
        assert!(matches!(parse_system("A9"), Err(Error::UnsupportedRank { .. })));
        assert!(matches!(parse_system("G3"), Err(Error::UnsupportedRank { .. })));
        assert!(parse_system("Q2").is_err());
    }

    #[test]
    fn duality_and_positivity() {
        for s in ["A1", "A4", "B3", "C3", "D4", "G2", "F4", "E6", "E8"] {
            let d = sys(s);
            for i in 0..d.rank {
                let c = &d.positive_roots[d.simple_index(i)].coroot_ambient;
                for j in 0..d.rank {
                    let expect = if i == j { int(1) } else { int(0) };
                    assert_eq!(d.pairing(c, &d.fundamental_weights[j]).unwrap(), expect, "{s}");
                }
            }
            assert!(d.positive_roots.iter().all(|r| r.coords.iter().all(|&c| c >= 0)));
        }
    }

    #[test]
    fn a2_roots() {
        let d = sys("A2");
        let c: Vec<_> = d.positive_roots.iter().map(|r| r.coords.clone()).collect();
        assert_eq!(c, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn textbook_forms() {
        let g = sys("G2");
        let f: Vec<String> = g.positive_roots.iter().map(|r| r.form_label()).collect();
        assert_eq!(f, ["m1", "m2", "m1+m2", "m1+2m2", "m1+3m2", "2m1+3m2"]);
        let c = sys("C3");
        let f: Vec<String> = c.to_classic_order(&c.positive_roots).iter().map(|r| r.form_label()).collect();
        assert_eq!(f, ["m1", "m2", "m3", "m1+m2", "m2+m3", "m2+2m3", "m1+m2+m3", "m1+m2+2m3", "m1+2m2+2m3"]);
        let a = sys("A3");
        let f: Vec<String> = a.to_classic_order(&a.positive_roots).iter().map(|r| r.form_label()).collect();
        assert_eq!(f, ["m1", "m1+m2", "m1+m2+m3", "m2", "m2+m3", "m3"]);
        assert_eq!(a.from_classic_order(&a.to_classic_order(&[0, 1, 2, 3, 4, 5])), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn pairings_from_the_classical_tables() {
        // A_r: <e1 - e_j, lambda_i> = 1 if i < j else 0
        let a = sys("A4");
        for j in 2..=5usize {
            let mut v = vec![int(0); 5];
            v[0] = int(1);
            v[j - 1] = int(-1);
            for i in 1..=4usize {
                let expect = if i < j { 1 } else { 0 };
                assert_eq!(a.pairing(&v, &a.fundamental_weights[i - 1]).unwrap(), int(expect));
            }
        }
        // C_r: <e1 + e_j, lambda_l> = 1 if l < j else 2
        let c = sys("C4");
        for j in 2..=4usize {
            let mut v = vec![int(0); 4];
            v[0] = int(1);
            v[j - 1] = int(1);
            for l in 1..=4usize {
                let expect = if l < j { 1 } else { 2 };
                assert_eq!(c.pairing(&v, &c.fundamental_weights[l - 1]).unwrap(), int(expect));
            }
        }
        assert!(matches!(c.pairing(&[int(1)], &c.fundamental_weights[0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn walls() {
        let a = sys("A2");
        assert!(a.on_wall(&[int(0), int(0), int(0)]));
        let rho = a.weight_ambient(&[int(1), int(1)]);
        assert!(!a.on_wall(&rho));
        assert!(a.on_wall(&a.fundamental_weights[0]));
        assert!(a.on_wall_fw(&[1, 0]));
        assert!(!a.on_wall_fw(&[1, 1]));
    }

    #[test]
    fn parabolics() {
        let a = sys("A2");
        let p = a.parabolic(&[1]).unwrap();
        assert_eq!(p.delta_i_plus, vec![1]);
        assert_eq!(p.delta_star, vec![0, 2]);
        let e = a.parabolic(&[]).unwrap();
        assert_eq!(e.delta_star.len(), 3);
        assert!(e.in_p_i(&[0, 0]) && !e.in_p_i(&[1, 0]));
        // A_r, I = {2..r}: Delta* = {e1 - e_j}
        let a4 = sys("A4");
        let p = a4.parabolic(&[1, 2, 3]).unwrap();
        let forms: Vec<_> = p.delta_star.iter().map(|&i| a4.positive_roots[i].coords.clone()).collect();
        assert_eq!(forms.len(), 4);
        assert!(forms.iter().all(|c| c[0] == 1 && c.windows(2).all(|w| w[0] >= w[1])));
        // C_r, I = {2..r}: Delta*^vee = {e1 +- e_j} u {e1}
        let c3 = sys("C3");
        let p = c3.parabolic(&[1, 2]).unwrap();
        let mut cor: Vec<Vec<String>> = p.delta_star.iter().map(|&i| fmt_vec(&c3.positive_roots[i].coroot_ambient)).collect();
        cor.sort();
        let mut expect: Vec<Vec<String>> = [["1", "0", "0"], ["1", "-1", "0"], ["1", "1", "0"], ["1", "0", "-1"], ["1", "0", "1"]]
            .iter()
            .map(|v| v.iter().map(|s| s.to_string()).collect())
            .collect();
        expect.sort();
        assert_eq!(cor, expect);
    }

    #[test]
    fn type_identification() {
        let b3 = sys("B3");
        assert_eq!(format_type_product(&b3.parabolic_type(&[1, 2])), "B2");
        assert_eq!(format_type_product(&sys("C3").parabolic_type(&[1, 2])), "C2");
        assert_eq!(format_type_product(&sys("A3").parabolic_type(&[0, 2])), "A1xA1");
        assert_eq!(format_type_product(&sys("E6").parabolic_type(&[0, 1, 2, 3, 4])), "D5");
        assert_eq!(format_type_product(&sys("E8").parabolic_type(&(0..7).collect::<Vec<_>>())), "E7");
        assert_eq!(format_type_product(&sys("F4").parabolic_type(&[0, 1, 2, 3])), "F4");
        assert_eq!(format_type_product(&sys("B4").parabolic_type(&[0, 1, 2, 3])), "B4");
        assert_eq!(format_type_product(&sys("C4").parabolic_type(&[0, 1, 2, 3])), "C4");
        let s = b3.long_short_split(true).unwrap();
        assert_eq!(format_type_product(&b3.subsystem_type(&s.delta1)), "A3");
        assert_eq!(format_type_product(&b3.subsystem_type(&s.delta2)), "A1xA1xA1");
        let g = sys("G2");
        let s = g.long_short_split(true).unwrap();
        assert_eq!(format_type_product(&g.subsystem_type(&s.delta1)), "A2");
        assert_eq!(s.j, vec![0]);
        assert!(matches!(sys("A3").long_short_split(true), Err(Error::SimplyLaced(_))));
    }
}
