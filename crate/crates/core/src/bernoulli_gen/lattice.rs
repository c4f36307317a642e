//! The finite quotient Q^vee / L(V^vee) through a row Hermite normal form.

use super::bases::BasisChoice;
use num_integer::Integer;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct LatticeQuotient {
    /// Representatives in simple-coroot coordinates.
    pub representatives: Vec<Vec<i64>>,
    pub index: u64,
    /// Upper-triangular row Hermite form of the basis matrix.
    pub hnf: Vec<Vec<i64>>,
}

/// Determinant of a small integer matrix (fraction-free elimination).
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Row Hermite normal form: upper triangular, positive pivots, entries above a pivot
/// reduced into [0, pivot). The matrix must be square and nonsingular.
pub fn hermite_rows(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut h = m.to_vec();
    for col in 0..n {
        // gcd-combine rows col..n so that only row `col` has a nonzero entry in `col`
        for r in col + 1..n {
            if h[r][col] == 0 {
                continue;
            }
            let (a, b) = (h[col][col], h[r][col]);
            let e = a.extended_gcd(&b);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let (p, q) = (a / g, b / g);
            let top: Vec<i64> = (0..n).map(|c| x * h[col][c] + y * h[r][c]).collect();
            let bot: Vec<i64> = (0..n).map(|c| -q * h[col][c] + p * h[r][c]).collect();
            h[col] = top;
            h[r] = bot;
        }
        if h[col][col] < 0 {
            for v in h[col].iter_mut() {
                *v = -*v;
            }
        }
        let piv = h[col][col];
        assert!(piv != 0, "singular basis matrix");
        for r in 0..col {
            let f = num_integer::Integer::div_floor(&h[r][col], &piv);
            if f != 0 {
                for c in 0..n {
                    h[r][c] -= f * h[col][c];
                }
            }
        }
    }
    h
}

pub fn lattice_quotient(b: &BasisChoice) -> LatticeQuotient {
    let hnf = hermite_rows(&b.matrix);
    let diag: Vec<i64> = (0..hnf.len()).map(|i| hnf[i][i]).collect();
    let mut reps = vec![vec![]];
    for &dmax in &diag {
        let mut next = Vec::with_capacity(reps.len() * dmax as usize);
        for r in &reps {
            for a in 0..dmax {
                let mut v: Vec<i64> = r.clone();
                v.push(a);
                next.push(v);
            }
        }
        reps = next;
    }
    let index = diag.iter().product::<i64>() as u64;
    debug_assert_eq!(index, b.det_index);
    LatticeQuotient { representatives: reps, index, hnf }
}

/// Reduce an integer vector to its representative (0 <= a_i < H_ii).
pub fn reduce(hnf: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    for i in 0..hnf.len() {
        let f = num_integer::Integer::div_floor(&v[i], &hnf[i][i]);
        if f != 0 {
            for c in 0..v.len() {
                v[c] -= f * hnf[i][c];
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli_gen::bases::enumerate_bases;
    use crate::rootsys::parse_system;
    use std::collections::HashSet;

    #[test]
    fn determinants() {
        assert_eq!(int_det(&[vec![1, 2], vec![1, 0]]), -2);
        assert_eq!(int_det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(int_det(&[vec![2, 0, 0], vec![1, 3, 0], vec![4, 5, 6]]), 36);
        assert_eq!(int_det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn c2_quotient_has_index_two() {
        // V^vee = {e1 + e2, e1 - e2} in the coroot basis {e1 - e2, e2}
        let c2 = parse_system("C2").unwrap();
        let par = c2.parabolic(&[]).unwrap();
        let bases = enumerate_bases(&c2, &par).unwrap();
        let b = bases.iter().find(|b| {
            let mut m = b.matrix.clone();
            m.sort();
            m == vec![vec![1, 0], vec![1, 2]]
        });
        let b = b.unwrap();
        let q = lattice_quotient(b);
        assert_eq!(q.index, 2);
        assert_eq!(q.representatives.len(), 2);
    }

    #[test]
    fn representatives_are_distinct_classes() {
        for sys in ["B3", "C3", "G2", "A3"] {
            let d = parse_system(sys).unwrap();
            let par = d.parabolic(&[]).unwrap();
            for b in enumerate_bases(&d, &par).unwrap() {
                let q = lattice_quotient(&b);
                assert_eq!(q.representatives.len() as u64, b.det_index);
                let classes: HashSet<Vec<i64>> = q.representatives.iter().map(|v| reduce(&q.hnf, v)).collect();
                assert_eq!(classes.len(), q.representatives.len());
                // a lattice vector reduces to zero
                let mut lv = vec![0i64; d.rank];
                for row in &b.matrix {
                    for (a, x) in lv.iter_mut().zip(row) {
                        *a += 3 * x;
                    }
                }
                assert!(reduce(&q.hnf, &lv).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn type_a_index_is_one() {
        let a3 = parse_system("A3").unwrap();
        let par = a3.parabolic(&[1, 2]).unwrap();
        for b in enumerate_bases(&a3, &par).unwrap() {
            assert_eq!(lattice_quotient(&b).index, 1);
        }
    }
}
