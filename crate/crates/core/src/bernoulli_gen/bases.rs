//! Bases V = V_I u Psi_I drawn from Delta*, their dual bases and the projections.
//!
//! Coordinates: weights (dual-basis vectors, lambda, projections) are in the
//! fundamental-weight basis; coroot-side vectors (y, q, phi, transposed projections)
//! are in the simple-coroot basis. The pairing is then the plain dot product.

use crate::algebra::rational::{int, invert, rank, Rational};
use crate::error::{Error, Result};
use crate::rootsys::{ParabolicData, RootSystemData};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct BasisChoice {
    /// V_I as indices into the positive roots.
    pub v_i: Vec<usize>,
    /// Psi_I as indices into the positive roots, ordered like I.
    pub psi_i: Vec<usize>,
    /// v_i followed by psi_i.
    pub basis: Vec<usize>,
    /// dual[l] = mu^V of basis[l], in fundamental-weight coordinates.
    #[serde(skip)]
    pub dual: Vec<Vec<Rational>>,
    /// Rows: coroot coordinates of the elements of V.
    pub matrix: Vec<Vec<i64>>,
    /// |Q^vee / L(V^vee)|.
    pub det_index: u64,
}

impl BasisChoice {
    /// Build from an ordered list of roots, `None` if they are dependent.
    pub fn new(d: &RootSystemData, v_i: &[usize], psi_i: &[usize]) -> Option<Self> {
        let basis: Vec<usize> = v_i.iter().chain(psi_i).copied().collect();
        if basis.len() != d.rank {
            return None;
        }
        let matrix: Vec<Vec<i64>> = basis.iter().map(|&b| d.positive_roots[b].coroot_coords.clone()).collect();
        let qm: Vec<Vec<Rational>> = matrix.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let inv = invert(&qm)?;
        let n = d.rank;
        let dual = (0..n).map(|l| (0..n).map(|i| inv[i][l].clone()).collect()).collect();
        let det = super::lattice::int_det(&matrix).unsigned_abs() as u64;
        Some(BasisChoice { v_i: v_i.to_vec(), psi_i: psi_i.to_vec(), basis, dual, matrix, det_index: det })
    }

    pub fn position(&self, root: usize) -> Option<usize> {
        self.basis.iter().position(|&b| b == root)
    }

    /// mu^V_beta for beta in V.
    pub fn mu(&self, root: usize) -> Option<&[Rational]> {
        self.position(root).map(|p| self.dual[p].as_slice())
    }

    /// Coordinates of gamma^vee in V^vee: <gamma^vee, mu^V_l> for every l.
    pub fn expand_coroot(&self, coroot: &[i64]) -> Vec<Rational> {
        self.dual.iter().map(|mu| pair_int(coroot, mu)).collect()
    }

    pub fn labels(&self, d: &RootSystemData) -> Vec<String> {
        self.basis.iter().map(|&b| d.root_label(b)).collect()
    }
}

/// <coroot, weight> with integer coroot coordinates.
pub fn pair_int(coroot: &[i64], w: &[Rational]) -> Rational {
    coroot.iter().zip(w).filter(|(c, _)| **c != 0).map(|(&c, x)| x * int(c)).sum()
}

pub fn pair(u: &[Rational], w: &[Rational]) -> Rational {
    u.iter().zip(w).map(|(a, b)| a * b).sum()
}

/// All subsets V_I of Delta* with |V_I| = |I^c| that complete Psi_I to a basis.
pub fn enumerate_bases(d: &RootSystemData, par: &ParabolicData) -> Result<Vec<BasisChoice>> {
    if !d.enumerable {
        return Err(Error::UnsupportedRank {
            family: d.ctype.family.letter().to_string(),
            rank: d.rank,
            reason: "basis enumeration is limited to the enumerable ranks".into(),
        });
    }
    let psi: Vec<usize> = par.i_set.iter().map(|&i| d.simple_index(i)).collect();
    let k = par.i_complement.len();
    let mut out = Vec::new();
    for subset in combinations(&par.delta_star, k) {
        if let Some(b) = BasisChoice::new(d, &subset, &psi) {
            out.push(b);
        }
    }
    Ok(out)
}

/// k-subsets of `items`, in lexicographic order of positions.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// p_{V_I perp}(v) = v - sum_{gamma in V_I} mu_gamma <gamma^vee, v>.
pub fn projection_p(d: &RootSystemData, b: &BasisChoice, v: &[Rational]) -> Vec<Rational> {
    let mut out = v.to_vec();
    for (l, &g) in b.v_i.iter().enumerate() {
        let c = pair_int(&d.positive_roots[g].coroot_coords, v);
        if c.is_zero() {
            continue;
        }
        for (o, m) in out.iter_mut().zip(&b.dual[l]) {
            *o -= &c * m;
        }
    }
    out
}

/// The second expression sum_{alpha in Psi_I} mu_alpha <alpha^vee, v>.
pub fn projection_p_psi(d: &RootSystemData, b: &BasisChoice, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d.rank];
    let off = b.v_i.len();
    for (l, &a) in b.psi_i.iter().enumerate() {
        let c = pair_int(&d.positive_roots[a].coroot_coords, v);
        for (o, m) in out.iter_mut().zip(&b.dual[off + l]) {
            *o += &c * m;
        }
    }
    out
}

/// Projection computed with U = V_I u Phi_I for an independent Phi_I inside Delta_{I+};
/// returns both expressions. `None` if U is not a basis.
pub fn projection_via(d: &RootSystemData, v_i: &[usize], phi_i: &[usize], v: &[Rational]) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let u = BasisChoice::new(d, v_i, phi_i)?;
    Some((projection_p(d, &u, v), projection_p_psi(d, &u, v)))
}

/// p*(u) = u - sum_{beta in V_I} <u, mu_beta> beta^vee, coroot coordinates in and out.
pub fn transpose_projection(d: &RootSystemData, b: &BasisChoice, u: &[Rational]) -> Vec<Rational> {
    let mut out = u.to_vec();
    for (l, &g) in b.v_i.iter().enumerate() {
        let c = pair(u, &b.dual[l]);
        for (o, &x) in out.iter_mut().zip(&d.positive_roots[g].coroot_coords) {
            *o -= &c * int(x);
        }
    }
    out
}

/// Independent |I|-subsets of Delta_{I+}, the admissible Phi_I.
pub fn independent_subsets(d: &RootSystemData, par: &ParabolicData) -> Vec<Vec<usize>> {
    combinations(&par.delta_i_plus, par.i_set.len())
        .into_iter()
        .filter(|s| {
            let rows: Vec<Vec<Rational>> = s.iter().map(|&i| d.positive_roots[i].coroot_coords.iter().map(|&x| int(x)).collect()).collect();
            rank(&rows) == s.len()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::rootsys::parse_system;

    fn coroot_of(d: &RootSystemData, c: &[i64]) -> usize {
        d.positive_roots.iter().position(|r| r.coroot_coords == c).unwrap()
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(&[0, 1, 2, 3], 2).len(), 6);
        assert_eq!(combinations(&[0, 1, 2], 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(&[5, 6, 7], 3), vec![vec![5, 6, 7]]);
        assert!(combinations(&[1], 2).is_empty());
    }

    #[test]
    fn basis_counts() {
        let a2 = parse_system("A2").unwrap();
        let b = enumerate_bases(&a2, &a2.parabolic(&[1]).unwrap()).unwrap();
        assert_eq!(b.len(), 2);
        // I empty: every pair of distinct positive roots of A2 is independent
        let b = enumerate_bases(&a2, &a2.parabolic(&[]).unwrap()).unwrap();
        assert_eq!(b.len(), 3);
        for r in 2..=4 {
            let c = parse_system(&format!("C{r}")).unwrap();
            let i: Vec<usize> = (1..r).collect();
            assert_eq!(enumerate_bases(&c, &c.parabolic(&i).unwrap()).unwrap().len(), 2 * (r - 1) + 1);
        }
    }

    #[test]
    fn dual_basis_is_dual() {
        let c3 = parse_system("C3").unwrap();
        for b in enumerate_bases(&c3, &c3.parabolic(&[]).unwrap()).unwrap() {
            for (k, &g) in b.basis.iter().enumerate() {
                for l in 0..3 {
                    let v = pair_int(&c3.positive_roots[g].coroot_coords, &b.dual[l]);
                    assert_eq!(v, int((k == l) as i64));
                }
            }
        }
    }

    #[test]
    fn projections_agree_and_kill_v_i() {
        let a3 = parse_system("A3").unwrap();
        let par = a3.parabolic(&[1, 2]).unwrap();
        let v = vec![rat(3, 2), int(-2), rat(5, 7)];
        for b in enumerate_bases(&a3, &par).unwrap() {
            let p1 = projection_p(&a3, &b, &v);
            assert_eq!(p1, projection_p_psi(&a3, &b, &v));
            for &g in &b.v_i {
                assert!(pair_int(&a3.positive_roots[g].coroot_coords, &p1).is_zero());
            }
        }
        // I empty projects to zero
        let par = a3.parabolic(&[]).unwrap();
        for b in enumerate_bases(&a3, &par).unwrap() {
            assert!(projection_p(&a3, &b, &v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn type_a_projection_of_lambda() {
        // beta^vee = e1 - e_j: p(lambda) = sum_{i != 1} m_i (lambda_i - b_i lambda_1)
        let a3 = parse_system("A3").unwrap();
        let par = a3.parabolic(&[1, 2]).unwrap();
        let psi: Vec<usize> = par.i_set.iter().map(|&i| a3.simple_index(i)).collect();
        let m = [int(0), int(2), int(5)];
        for j in 2..=4usize {
            let bc: Vec<i64> = (0..3).map(|i| (i + 1 < j) as i64).collect();
            let b = BasisChoice::new(&a3, &[coroot_of(&a3, &bc)], &psi).unwrap();
            let p = projection_p(&a3, &b, &m);
            let mut expect = vec![int(0); 3];
            for i in 1..3 {
                expect[i] += &m[i];
                expect[0] -= &m[i] * int(bc[i]);
            }
            assert_eq!(p, expect);
        }
    }

    #[test]
    fn transposed_projection_examples() {
        // type A: gamma = e1 - e3, beta = e1 - e2 gives e2 - e3
        let a3 = parse_system("A3").unwrap();
        let par = a3.parabolic(&[1, 2]).unwrap();
        let psi: Vec<usize> = par.i_set.iter().map(|&i| a3.simple_index(i)).collect();
        let b = BasisChoice::new(&a3, &[coroot_of(&a3, &[1, 0, 0])], &psi).unwrap();
        let u = vec![int(1), int(1), int(0)];
        assert_eq!(transpose_projection(&a3, &b, &u), vec![int(0), int(1), int(0)]);
        // type C: e1 with beta = e1 - e2 gives e2; e1 + e2 gives 2 e2
        let c3 = parse_system("C3").unwrap();
        let par = c3.parabolic(&[1, 2]).unwrap();
        let psi: Vec<usize> = par.i_set.iter().map(|&i| c3.simple_index(i)).collect();
        let b = BasisChoice::new(&c3, &[coroot_of(&c3, &[1, 0, 0])], &psi).unwrap();
        let e1 = vec![int(1), int(1), int(1)];
        assert_eq!(transpose_projection(&c3, &b, &e1), vec![int(0), int(1), int(1)]);
        let e1e2 = vec![int(1), int(2), int(2)];
        assert_eq!(transpose_projection(&c3, &b, &e1e2), vec![int(0), int(2), int(2)]);
        // adjointness
        let v = vec![rat(1, 3), int(2), rat(-5, 4)];
        for u in [e1, e1e2, vec![rat(1, 2), int(0), int(3)]] {
            assert_eq!(pair(&u, &projection_p(&c3, &b, &v)), pair(&transpose_projection(&c3, &b, &u), &v));
        }
    }

    #[test]
    fn projection_independent_of_phi_i() {
        let b3 = parse_system("B3").unwrap();
        let par = b3.parabolic(&[1, 2]).unwrap();
        let v = vec![rat(2, 3), int(-1), rat(7, 5)];
        let subsets = independent_subsets(&b3, &par);
        assert!(subsets.len() > 1);
        for b in enumerate_bases(&b3, &par).unwrap() {
            let p = projection_p(&b3, &b, &v);
            for s in &subsets {
                let (x, y) = projection_via(&b3, &b.v_i, s, &v).unwrap();
                assert_eq!(x, p);
                assert_eq!(y, p);
            }
        }
    }
}
