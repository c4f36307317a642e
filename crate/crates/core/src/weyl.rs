//! Weyl groups: enumeration with reduced words, inversion sets, parabolic cosets and
//! the action on argument vectors.

use crate::algebra::rational::{int, Rational};
use crate::error::{Error, Result};
use crate::rootsys::RootSystemData;
use num_complex::Complex64;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Action on simple-root coordinates, row-major r x r; column j is w(alpha_j).
    pub mat: Vec<i64>,
    pub inv_mat: Vec<i64>,
    /// Canonical reduced word, 0-based letters; w = s_{word[0]} s_{word[1]} ...
    pub word: Vec<usize>,
    /// Delta_{w^{-1}} = { alpha > 0 : w^{-1} alpha < 0 }, sorted root indices.
    pub inversions: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".into()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
        }
    }
}

fn apply(mat: &[i64], r: usize, v: &[i64]) -> Vec<i64> {
    (0..r).map(|i| (0..r).map(|j| mat[i * r + j] * v[j]).sum()).collect()
}

fn matmul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik != 0 {
                for j in 0..r {
                    c[i * r + j] += aik * b[k * r + j];
                }
            }
        }
    }
    c
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().any(|&x| x < 0)
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub rank: usize,
    pub elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    generators: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    pos_coords: Vec<Vec<i64>>,
}

/// Simple reflection matrix on root coordinates.
fn reflection(cartan: &[Vec<i64>], i: usize) -> Vec<i64> {
    let r = cartan.len();
    let mut m = vec![0; r * r];
    for j in 0..r {
        m[j * r + j] = 1;
        m[i * r + j] -= cartan[i][j];
    }
    m
}

/// Full enumeration; rejects systems outside the enumeration bounds.
pub fn enumerate_weyl(d: &RootSystemData) -> Result<WeylGroup> {
    if !d.enumerable {
        return Err(Error::UnsupportedRank {
            family: d.ctype.family.letter().to_string(),
            rank: d.rank,
            reason: "Weyl group enumeration is limited to A<=5, B/C<=4, D4, G2".into(),
        });
    }
    Ok(enumerate_unchecked(d))
}

/// Enumeration without the size guard (used for small non-default cases in tests).
pub fn enumerate_unchecked(d: &RootSystemData) -> WeylGroup {
    let r = d.rank;
    let gens: Vec<Vec<i64>> = (0..r).map(|i| reflection(&d.cartan, i)).collect();
    let mut id = vec![0; r * r];
    for i in 0..r {
        id[i * r + i] = 1;
    }
    let mut mats = vec![id.clone()];
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < mats.len() {
        let w = mats[head].clone();
        head += 1;
        for g in &gens {
            let m = matmul(&w, g, r);
            if !seen.contains_key(&m) {
                seen.insert(m.clone(), mats.len());
                mats.push(m);
            }
        }
    }
    let pos: Vec<Vec<i64>> = d.positive_roots.iter().map(|x| x.coords.clone()).collect();
    let lengths: Vec<usize> = mats.iter().map(|m| pos.iter().filter(|p| is_negative(&apply(m, r, p))).count()).collect();
    let mut order: Vec<usize> = (0..mats.len()).collect();
    order.sort_by_key(|&i| lengths[i]);
    let mut words: Vec<Option<Vec<usize>>> = vec![None; mats.len()];
    for &e in &order {
        if lengths[e] == 0 {
            words[e] = Some(vec![]);
            continue;
        }
        let m = &mats[e];
        // smallest right descent: w(alpha_i) < 0
        let i = (0..r).find(|&i| (0..r).any(|k| m[k * r + i] < 0)).expect("nonidentity has a descent");
        let shorter = matmul(m, &gens[i], r);
        let mut w = words[seen[&shorter]].clone().expect("shorter element processed first");
        w.push(i);
        words[e] = Some(w);
    }
    let mut elems: Vec<WeylElement> = mats
        .into_iter()
        .zip(words)
        .map(|(mat, word)| {
            let word = word.unwrap();
            let mut inv = id_mat(r);
            for &i in word.iter().rev() {
                inv = matmul(&inv, &gens[i], r);
            }
            let inversions = pos.iter().enumerate().filter(|(_, p)| is_negative(&apply(&inv, r, p))).map(|(k, _)| k).collect();
            WeylElement { mat, inv_mat: inv, word, inversions }
        })
        .collect();
    elems.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
    let index = elems.iter().enumerate().map(|(i, e)| (e.mat.clone(), i)).collect();
    WeylGroup { rank: r, elements: elems, index, generators: gens, cartan: d.cartan.clone(), pos_coords: pos }
}

fn id_mat(r: usize) -> Vec<i64> {
    let mut id = vec![0; r * r];
    for i in 0..r {
        id[i * r + i] = 1;
    }
    id
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn find(&self, mat: &[i64]) -> Option<usize> {
        self.index.get(mat).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&matmul(&self.elements[a].mat, &self.elements[b].mat, self.rank)]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inv_mat]
    }

    pub fn simple(&self, i: usize) -> usize {
        self.index[&self.generators[i]]
    }

    pub fn from_word(&self, word: &[usize]) -> usize {
        let mut m = id_mat(self.rank);
        for &i in word {
            m = matmul(&m, &self.generators[i], self.rank);
        }
        self.index[&m]
    }

    /// w(v) for v in simple-root coordinates.
    pub fn act(&self, w: usize, v: &[i64]) -> Vec<i64> {
        apply(&self.elements[w].mat, self.rank, v)
    }

    pub fn act_inv(&self, w: usize, v: &[i64]) -> Vec<i64> {
        apply(&self.elements[w].inv_mat, self.rank, v)
    }

    /// Delta_{w^{-1}}, the cached inversion set.
    pub fn inversion_set(&self, w: usize) -> &[usize] {
        &self.elements[w].inversions
    }

    /// Delta_w = { alpha > 0 : w alpha < 0 }.
    pub fn delta_w(&self, w: usize) -> Vec<usize> {
        self.pos_coords.iter().enumerate().filter(|(_, p)| is_negative(&self.act(w, p))).map(|(k, _)| k).collect()
    }

    /// Orthogonal matrix of w on the ambient space, as a product of reflections.
    pub fn ambient_matrix(&self, d: &RootSystemData, w: usize) -> Vec<Vec<Rational>> {
        let n = d.ambient_dim;
        let mut m: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect()).collect();
        for &i in &self.elements[w].word {
            let a = &d.simple_roots[i];
            let ac = &d.positive_roots[d.simple_index(i)].coroot_ambient;
            // m <- m * s_i, s_i = Id - a ac^T
            let mut next = m.clone();
            for row in 0..n {
                let t: Rational = (0..n).map(|k| &m[row][k] * &a[k]).sum();
                for col in 0..n {
                    next[row][col] -= &t * &ac[col];
                }
            }
            m = next;
        }
        m
    }

    /// Apply s_i to a vector in simple-coroot coordinates.
    fn reflect_coroot(&self, i: usize, y: &mut [Rational]) {
        let p: Rational = (0..self.rank).map(|j| int(self.cartan[j][i]) * &y[j]).sum();
        y[i] -= p;
    }

    /// (w^{-1} s, w^{-1} y): (w^{-1}s)_alpha = s_{|w alpha|} and w^{-1} y in coroot coordinates.
    /// These are the arguments of the zeta-function attached to w in the signed Weyl sum.
    pub fn act_on_args<T: Clone>(&self, d: &RootSystemData, w: usize, s: &[T], y: &[Rational]) -> (Vec<T>, Vec<Rational>) {
        let s2 = self
            .pos_coords
            .iter()
            .map(|p| {
                let img = self.act(w, p);
                let (k, _) = d.find_root(&img).expect("W permutes the roots");
                s[k].clone()
            })
            .collect();
        let mut y2 = y.to_vec();
        for &i in &self.elements[w].word {
            self.reflect_coroot(i, &mut y2);
        }
        (s2, y2)
    }

    /// prod over Delta_{w^{-1}} of (-1)^{s_alpha}; each such s_alpha must be an integer.
    pub fn inversion_sign(&self, d: &RootSystemData, w: usize, s: &[Complex64]) -> Result<i64> {
        let mut sign = 1;
        for &a in self.inversion_set(w) {
            let v = s[a];
            if v.im != 0.0 || v.re.fract() != 0.0 {
                return Err(Error::SignOnNonInteger(d.root_label(a)));
            }
            if (v.re as i64).rem_euclid(2) == 1 {
                sign = -sign;
            }
        }
        Ok(sign)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetData {
    pub i_set: Vec<usize>,
    /// Elements of W_I (indices into the group).
    pub w_i: Vec<usize>,
    /// Minimal coset representatives W^I.
    pub w_upper_i: Vec<usize>,
    /// For every w, the pair (x, y) with w = x y, x in W_I, y in W^I.
    pub decomposition: Vec<(usize, usize)>,
}

impl CosetData {
    pub fn to_json(&self, g: &WeylGroup) -> serde_json::Value {
        let words = |v: &[usize]| v.iter().map(|&w| g.elements[w].word_string()).collect::<Vec<_>>();
        serde_json::json!({
            "I": self.i_set.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "W_I": words(&self.w_i),
            "W^I": words(&self.w_upper_i),
        })
    }
}

/// W_I = words in the letters of I; W^I = { w : w^{-1} alpha_i > 0 for i in I }.
pub fn min_coset_reps(g: &WeylGroup, i_set: &[usize]) -> CosetData {
    let w_i: Vec<usize> = (0..g.len()).filter(|&w| g.elements[w].word.iter().all(|l| i_set.contains(l))).collect();
    let w_upper_i: Vec<usize> = (0..g.len()).filter(|&w| in_w_upper_i(g, w, i_set)).collect();
    let decomposition = (0..g.len()).map(|w| decompose(g, w, i_set)).collect();
    CosetData { i_set: i_set.to_vec(), w_i, w_upper_i, decomposition }
}

fn in_w_upper_i(g: &WeylGroup, w: usize, i_set: &[usize]) -> bool {
    i_set.iter().all(|&i| {
        let mut e = vec![0; g.rank];
        e[i] = 1;
        !is_negative(&g.act_inv(w, &e))
    })
}

/// w = x y with x in W_I, y in W^I, by stripping simple reflections of I on the left.
pub fn decompose(g: &WeylGroup, w: usize, i_set: &[usize]) -> (usize, usize) {
    let mut cur = w;
    let mut x = g.identity();
    'outer: loop {
        for &i in i_set {
            let mut e = vec![0; g.rank];
            e[i] = 1;
            if is_negative(&g.act_inv(cur, &e)) {
                let si = g.simple(i);
                cur = g.mul(si, cur);
                x = g.mul(x, si);
                continue 'outer;
            }
        }
        return (x, cur);
    }
}
