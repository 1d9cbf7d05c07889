//! Root systems of reductive groups: roots, fundamental weights, Cartan data,
//! the Weyl group as explicit matrices, and chamber geometry.
//!
//! # Coordinates
//!
//! Vectors of `a*` (weights, points of moment polytopes) are column vectors in
//! a fixed coordinate system per type. Vectors of `a` (facet normals, test
//! directions) use the dual coordinates, so that the natural pairing
//! `u(y)` is the plain dot product `u · y`.
//!
//! * `so4` / `A1xA1`: `Z^2` with `alpha_1 = (1, 1)`, `alpha_2 = (1, -1)` and the
//!   identity Gram matrix. The chamber is `{x >= |y|}`.
//! * `A_r`, `B_r`, `C_r`, `D_r`, `G2`: simple-root coordinates
//!   (`alpha_i = e_i`) with the Gram matrix equal to the symmetrized Cartan
//!   matrix. Root lengths: simply-laced `|alpha|^2 = 2`; `B_r` short root 1;
//!   `C_r` long root 4; `G2` long root 6, short root 2.
//! * `T<k>`: a `k`-dimensional central torus, orthonormal coordinates, no roots.
//!
//! Products such as `A2xT1` or `B2xG2` are block direct sums.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{FanoError, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, rat, ratio, Rat, RatVec};

/// Hard cap on the Weyl group order.
pub const WEYL_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChamberPosition {
    Interior,
    Wall,
    Outside,
}

#[derive(Debug)]
pub struct RootSystem {
    label: String,
    dim: usize,
    simple_roots: Vec<RatVec>,
    positive_roots: Vec<RatVec>,
    fundamental_weights: Vec<RatVec>,
    gram: Matrix,
    two_rho: RatVec,
    weyl: OnceLock<Vec<Matrix>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        let weyl = OnceLock::new();
        if let Some(w) = self.weyl.get() {
            let _ = weyl.set(w.clone());
        }
        RootSystem {
            label: self.label.clone(),
            dim: self.dim,
            simple_roots: self.simple_roots.clone(),
            positive_roots: self.positive_roots.clone(),
            fundamental_weights: self.fundamental_weights.clone(),
            gram: self.gram.clone(),
            two_rho: self.two_rho.clone(),
            weyl,
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// One irreducible (or torus) summand in simple-root coordinates.
struct Component {
    dim: usize,
    simple_roots: Vec<RatVec>,
    gram: Matrix,
}

fn chain_gram(lengths: &[i64], links: &[(usize, usize, i64)]) -> Matrix {
    let r = lengths.len();
    let mut g = vec![vec![Rat::zero(); r]; r];
    for (i, &l) in lengths.iter().enumerate() {
        g[i][i] = rat(l);
    }
    for &(i, j, v) in links {
        g[i][j] = rat(v);
        g[j][i] = rat(v);
    }
    g
}

fn simple_component(kind: char, r: usize) -> Result<Component> {
    let bad = || FanoError::UnknownType(format!("{kind}{r}"));
    let neighbours = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1, -1)).collect::<Vec<_>>();
    let gram = match kind {
        'A' => chain_gram(&vec![2; r], &neighbours(r)),
        'B' if r >= 2 => {
            let mut lengths = vec![2; r];
            lengths[r - 1] = 1;
            chain_gram(&lengths, &neighbours(r))
        }
        'C' if r >= 2 => {
            let mut lengths = vec![2; r];
            lengths[r - 1] = 4;
            let mut links = neighbours(r);
            links[r - 2].2 = -2;
            chain_gram(&lengths, &links)
        }
        'D' if r >= 3 => {
            let mut links = neighbours(r - 1);
            links.push((r - 3, r - 1, -1));
            chain_gram(&vec![2; r], &links)
        }
        'G' if r == 2 => chain_gram(&[6, 2], &[(0, 1, -3)]),
        _ => return Err(bad()),
    };
    let simple_roots = (0..r).map(|i| (0..r).map(|j| if i == j { rat(1) } else { rat(0) }).collect()).collect();
    Ok(Component { dim: r, simple_roots, gram })
}

fn torus_component(k: usize) -> Component {
    Component { dim: k, simple_roots: Vec::new(), gram: linalg::identity(k) }
}

fn parse_component(token: &str) -> Result<Component> {
    let unknown = || FanoError::UnknownType(token.to_string());
    let mut chars = token.chars();
    let kind = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let r: usize = chars.as_str().parse().map_err(|_| unknown())?;
    if r == 0 {
        return Err(FanoError::RankZero);
    }
    if kind == 'T' {
        return Ok(torus_component(r));
    }
    simple_component(kind, r)
}

fn direct_sum(parts: Vec<Component>) -> (usize, Vec<RatVec>, Matrix) {
    let dim: usize = parts.iter().map(|c| c.dim).sum();
    let mut roots = Vec::new();
    let mut gram = vec![vec![Rat::zero(); dim]; dim];
    let mut offset = 0;
    for c in parts {
        for root in c.simple_roots {
            let mut v = rational::zeros(dim);
            v[offset..offset + c.dim].clone_from_slice(&root);
            roots.push(v);
        }
        for i in 0..c.dim {
            for j in 0..c.dim {
                gram[offset + i][offset + j] = c.gram[i][j].clone();
            }
        }
        offset += c.dim;
    }
    (dim, roots, gram)
}

/// Build a root system from a type label such as `so4`, `A2`, `B3xT1` or `T2`.
pub fn build_root_system(label: &str) -> Result<RootSystem> {
    let trimmed = label.trim();
    if trimmed.is_empty() {
        return Err(FanoError::UnknownType(label.to_string()));
    }
    let key = trimmed.to_ascii_lowercase().replace('×', "x");
    if key == "so4" || key == "a1xa1" {
        let simple = vec![rational::rat_vec(&[1, 1]), rational::rat_vec(&[1, -1])];
        return RootSystem::from_simple_roots(trimmed, 2, simple, linalg::identity(2));
    }
    let parts = key.split('x').map(parse_component).collect::<Result<Vec<_>>>()?;
    let (dim, simple, gram) = direct_sum(parts);
    RootSystem::from_simple_roots(trimmed, dim, simple, gram)
}

impl RootSystem {
    /// Assemble a root system from simple roots in explicit coordinates and
    /// the Gram matrix of the invariant inner product in those coordinates.
    pub fn from_simple_roots(label: &str, dim: usize, simple_roots: Vec<RatVec>, gram: Matrix) -> Result<RootSystem> {
        if dim == 0 {
            return Err(FanoError::RankZero);
        }
        let r = simple_roots.len();
        let inner = |a: &[Rat], b: &[Rat]| rational::dot(a, &linalg::mat_vec(&gram, b));
        let sym: Matrix = simple_roots.iter().map(|a| simple_roots.iter().map(|b| inner(a, b)).collect()).collect();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let c = rat(2) * &sym[i][j] / &sym[i][i];
                        if !c.is_integer() {
                            return Err(FanoError::Internal(format!("non-integral Cartan entry {c}")));
                        }
                        c.to_integer().try_into().map_err(|_| FanoError::Overflow)
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;

        // Orbit of the simple roots under simple reflections, in simple-root
        // coefficients: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0i64; r];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                let mut next = beta.clone();
                next[i] -= pairing;
                if seen.len() > WEYL_CAP {
                    return Err(FanoError::WeylGroupTooLarge(WEYL_CAP));
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by_key(|c| (c.iter().sum::<i64>(), c.iter().map(|x| -x).collect::<Vec<_>>()));
        let to_coords = |c: &[i64]| -> RatVec {
            let mut v = rational::zeros(dim);
            for (k, &ck) in c.iter().enumerate() {
                for (vi, ai) in v.iter_mut().zip(&simple_roots[k]) {
                    *vi += ai * Rat::from_integer(ck.into());
                }
            }
            v
        };
        let positive_roots: Vec<RatVec> = positive.iter().map(|c| to_coords(c)).collect();
        let two_rho = positive_roots.iter().fold(rational::zeros(dim), |acc, a| rational::add(&acc, a));

        let fundamental_weights = if r == 0 {
            Vec::new()
        } else {
            let sym_inv = linalg::inverse(&sym)?;
            (0..r)
                .map(|j| {
                    let mut rhs = rational::zeros(r);
                    rhs[j] = &sym[j][j] / rat(2);
                    let coeff = linalg::mat_vec(&sym_inv, &rhs);
                    coeff
                        .iter()
                        .zip(&simple_roots)
                        .fold(rational::zeros(dim), |acc, (c, a)| rational::add(&acc, &rational::scale(a, c)))
                })
                .collect()
        };

        Ok(RootSystem {
            label: label.to_string(),
            dim,
            simple_roots,
            positive_roots,
            fundamental_weights,
            gram,
            two_rho,
            weyl: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Dimension of `a*` (the rank of the reductive group).
    pub fn rank(&self) -> usize {
        self.dim
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn is_semisimple(&self) -> bool {
        self.simple_roots.len() == self.dim
    }

    pub fn simple_roots(&self) -> &[RatVec] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[RatVec] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[RatVec] {
        &self.fundamental_weights
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn two_rho(&self) -> &RatVec {
        &self.two_rho
    }

    pub fn rho(&self) -> RatVec {
        rational::scale(&self.two_rho, &ratio(1, 2))
    }

    /// The invariant inner product `<a, b>` on `a*`.
    pub fn inner(&self, a: &[Rat], b: &[Rat]) -> Rat {
        rational::dot(a, &linalg::mat_vec(&self.gram, b))
    }

    pub fn norm_sq(&self, a: &[Rat]) -> Rat {
        self.inner(a, a)
    }

    /// The same root system with the Gram matrix multiplied by `s > 0`.
    pub fn with_gram_scale(&self, s: &Rat) -> Result<RootSystem> {
        if !s.is_positive() {
            return Err(FanoError::InvalidArgument("Gram scale must be positive".into()));
        }
        let gram = self.gram.iter().map(|row| rational::scale(row, s)).collect();
        RootSystem::from_simple_roots(&self.label, self.dim, self.simple_roots.clone(), gram)
    }

    /// `C_ij = 2<alpha_i, alpha_j>/|alpha_i|^2`.
    pub fn cartan_matrix(&self) -> Matrix {
        self.simple_roots
            .iter()
            .map(|a| {
                let la = self.norm_sq(a);
                self.simple_roots.iter().map(|b| rat(2) * self.inner(a, b) / &la).collect()
            })
            .collect()
    }

    /// Inverse Cartan matrix. Every entry is checked to be nonnegative.
    pub fn inverse_cartan(&self) -> Result<Matrix> {
        let inv = linalg::inverse(&self.cartan_matrix())
            .map_err(|_| FanoError::Internal(format!("{}: singular Cartan matrix", self.label)))?;
        if inv.iter().flatten().any(Signed::is_negative) {
            return Err(FanoError::Internal(format!("{}: inverse Cartan matrix has a negative entry", self.label)));
        }
        Ok(inv)
    }

    /// `rho(u) = 1/2 sum_{alpha > 0} |alpha(u)|` for `u` in `a`.
    pub fn rho_pairing(&self, u: &[Rat]) -> Rat {
        let s = self.positive_roots.iter().fold(Rat::zero(), |acc, a| acc + rational::dot(a, u).abs());
        s / rat(2)
    }

    pub fn rho_pairing_int(&self, u: &[i64]) -> Rat {
        let s = self.positive_roots.iter().fold(Rat::zero(), |acc, a| acc + rational::dot_int(u, a).abs());
        s / rat(2)
    }

    /// Position of a weight `v` in `a*` relative to the positive chamber.
    pub fn chamber_position(&self, v: &[Rat]) -> ChamberPosition {
        let pairings: Vec<Rat> = self.simple_roots.iter().map(|a| self.inner(a, v)).collect();
        classify_signs(&pairings)
    }

    /// Position of a coweight `u` in `a` relative to the dual positive chamber.
    pub fn coweight_chamber_position(&self, u: &[i64]) -> ChamberPosition {
        let pairings: Vec<Rat> = self.simple_roots.iter().map(|a| rational::dot_int(u, a)).collect();
        classify_signs(&pairings)
    }

    fn simple_reflection(&self, i: usize) -> Matrix {
        let a = &self.simple_roots[i];
        let ga = linalg::mat_vec(&self.gram, a);
        let f = rat(2) / self.norm_sq(a);
        (0..self.dim)
            .map(|row| {
                (0..self.dim)
                    .map(|col| {
                        let id = if row == col { rat(1) } else { rat(0) };
                        id - &f * &a[row] * &ga[col]
                    })
                    .collect()
            })
            .collect()
    }

    /// All Weyl group elements, acting on `a*`, generated on first use by
    /// breadth-first closure over the simple reflections.
    pub fn weyl_elements(&self) -> Result<&[Matrix]> {
        if let Some(w) = self.weyl.get() {
            return Ok(w);
        }
        let generators: Vec<Matrix> = (0..self.semisimple_rank()).map(|i| self.simple_reflection(i)).collect();
        let id = linalg::identity(self.dim);
        let mut seen: HashSet<Matrix> = HashSet::new();
        let mut order = vec![id.clone()];
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &generators {
                let h = linalg::mat_mul(s, &g);
                if !seen.contains(&h) {
                    if seen.len() >= WEYL_CAP {
                        return Err(FanoError::WeylGroupTooLarge(WEYL_CAP));
                    }
                    seen.insert(h.clone());
                    order.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let _ = self.weyl.set(order);
        Ok(self.weyl.get().expect("just set"))
    }

    /// The Weyl orbit of a weight, sorted lexicographically, without duplicates.
    pub fn weyl_orbit(&self, v: &[Rat]) -> Result<Vec<RatVec>> {
        let orbit: BTreeSet<RatVec> = self.weyl_elements()?.iter().map(|w| linalg::mat_vec(w, v)).collect();
        Ok(orbit.into_iter().collect())
    }

    /// The orbit of an integral coweight under the dual action `u -> w^T u`.
    pub fn coweight_orbit(&self, u: &[i64]) -> Result<Vec<Vec<i64>>> {
        let mut orbit = BTreeSet::new();
        let uq: RatVec = u.iter().map(|&x| rat(x)).collect();
        for w in self.weyl_elements()? {
            let image = linalg::mat_vec(&linalg::transpose(w), &uq);
            let ints = image
                .iter()
                .map(|x| {
                    if !x.is_integer() {
                        return Err(FanoError::Internal("Weyl group does not preserve the lattice".into()));
                    }
                    x.to_integer().try_into().map_err(|_| FanoError::Overflow)
                })
                .collect::<Result<Vec<i64>>>()?;
            orbit.insert(ints);
        }
        Ok(orbit.into_iter().collect())
    }

    /// Coefficients of `v` in the simple-root basis plus the component of `v`
    /// orthogonal to the root span (the central part).
    pub fn root_decomposition(&self, v: &[Rat]) -> Result<(RatVec, RatVec)> {
        let r = self.semisimple_rank();
        if r == 0 {
            return Ok((Vec::new(), v.to_vec()));
        }
        let sym: Matrix =
            self.simple_roots.iter().map(|a| self.simple_roots.iter().map(|b| self.inner(a, b)).collect()).collect();
        let rhs: RatVec = self.simple_roots.iter().map(|a| self.inner(a, v)).collect();
        let c = linalg::solve(&sym, &rhs)?;
        let span = c
            .iter()
            .zip(&self.simple_roots)
            .fold(rational::zeros(self.dim), |acc, (ci, a)| rational::add(&acc, &rational::scale(a, ci)));
        Ok((c, rational::sub(v, &span)))
    }

    /// True if the coweight `xi` is central, i.e. every root vanishes on it.
    pub fn is_central(&self, xi: &[Rat]) -> bool {
        self.simple_roots.iter().all(|a| rational::dot(a, xi).is_zero())
    }
}

fn classify_signs(pairings: &[Rat]) -> ChamberPosition {
    if pairings.iter().any(Signed::is_negative) {
        ChamberPosition::Outside
    } else if pairings.iter().any(Zero::is_zero) {
        ChamberPosition::Wall
    } else {
        ChamberPosition::Interior
    }
}

/// Convenience free function mirroring [`RootSystem::inverse_cartan`].
pub fn inverse_cartan(rs: &RootSystem) -> Result<Matrix> {
    rs.inverse_cartan()
}

pub fn rho_pairing(rs: &RootSystem, u: &[Rat]) -> Rat {
    rs.rho_pairing(u)
}

pub fn weyl_orbit(rs: &RootSystem, v: &[Rat]) -> Result<Vec<RatVec>> {
    rs.weyl_orbit(v)
}

pub fn chamber_position(rs: &RootSystem, v: &[Rat]) -> ChamberPosition {
    rs.chamber_position(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_vec;

    fn m(rows: &[&[Rat]]) -> Matrix {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn so4_convention() {
        let rs = build_root_system("so4").unwrap();
        assert_eq!(rs.simple_roots(), &[rat_vec(&[1, 1]), rat_vec(&[1, -1])]);
        assert_eq!(rs.two_rho(), &rat_vec(&[2, 0]));
        assert_eq!(rs.fundamental_weights()[0], vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(rs.fundamental_weights()[1], vec![ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(rs.weyl_elements().unwrap().len(), 4);
        let alias = build_root_system("A1xA1").unwrap();
        assert_eq!(alias.simple_roots(), rs.simple_roots());
    }

    #[test]
    fn rank_one_and_a2() {
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(a1.two_rho(), &a1.simple_roots()[0]);
        let a2 = build_root_system("A2").unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        let w = a2.fundamental_weights();
        let two_w = rational::scale(&rational::add(&w[0], &w[1]), &rat(2));
        assert_eq!(a2.two_rho(), &two_w);
    }

    #[test]
    fn positive_root_counts() {
        for (label, n, w) in [("A3", 6, 24), ("B2", 4, 8), ("C3", 9, 48), ("D4", 12, 192), ("G2", 6, 12), ("B3", 9, 48)]
        {
            let rs = build_root_system(label).unwrap();
            assert_eq!(rs.positive_roots().len(), n, "{label}");
            assert_eq!(rs.weyl_elements().unwrap().len(), w, "{label}");
        }
    }

    #[test]
    fn inverse_cartan_examples() {
        let a2 = build_root_system("A2").unwrap();
        assert_eq!(a2.inverse_cartan().unwrap(), m(&[&[ratio(2, 3), ratio(1, 3)], &[ratio(1, 3), ratio(2, 3)]]));
        let so4 = build_root_system("A1xA1").unwrap();
        assert_eq!(so4.inverse_cartan().unwrap(), m(&[&[ratio(1, 2), rat(0)], &[rat(0), ratio(1, 2)]]));
        let g2 = build_root_system("G2").unwrap();
        assert_eq!(g2.cartan_matrix(), m(&[&[rat(2), rat(-1)], &[rat(-3), rat(2)]]));
        assert_eq!(g2.inverse_cartan().unwrap(), m(&[&[rat(2), rat(1)], &[rat(3), rat(2)]]));
    }

    #[test]
    fn rho_pairing_examples() {
        let rs = build_root_system("so4").unwrap();
        assert_eq!(rs.rho_pairing(&rat_vec(&[1, 0])), rat(1));
        assert_eq!(rs.rho_pairing(&rat_vec(&[0, 0])), rat(0));
        assert_eq!(rs.rho_pairing(&rat_vec(&[1, 1])), rat(1));
        assert_eq!(rs.rho_pairing_int(&[3, -2]), rat(3));
    }

    #[test]
    fn orbits() {
        let rs = build_root_system("so4").unwrap();
        assert_eq!(
            rs.weyl_orbit(&rat_vec(&[1, 0])).unwrap(),
            vec![rat_vec(&[-1, 0]), rat_vec(&[0, -1]), rat_vec(&[0, 1]), rat_vec(&[1, 0])]
        );
        assert_eq!(rs.weyl_orbit(&rat_vec(&[1, 1])).unwrap(), vec![rat_vec(&[-1, -1]), rat_vec(&[1, 1])]);
        for label in ["so4", "A2", "G2", "B3"] {
            let rs = build_root_system(label).unwrap();
            let zero = rational::zeros(rs.rank());
            assert_eq!(rs.weyl_orbit(&zero).unwrap(), vec![zero.clone()]);
        }
    }

    #[test]
    fn chamber_examples() {
        let rs = build_root_system("so4").unwrap();
        assert_eq!(rs.chamber_position(&rat_vec(&[2, 1])), ChamberPosition::Interior);
        assert_eq!(rs.chamber_position(&rat_vec(&[1, 1])), ChamberPosition::Wall);
        assert_eq!(rs.chamber_position(&rat_vec(&[0, 1])), ChamberPosition::Outside);
    }

    #[test]
    fn bad_labels() {
        assert!(matches!(build_root_system("E8"), Err(FanoError::UnknownType(_))));
        assert!(matches!(build_root_system(""), Err(FanoError::UnknownType(_))));
        assert!(matches!(build_root_system("A0"), Err(FanoError::RankZero)));
        assert!(matches!(build_root_system("B1"), Err(FanoError::UnknownType(_))));
        assert!(matches!(build_root_system("G3"), Err(FanoError::UnknownType(_))));
    }

    #[test]
    fn torus_and_mixed() {
        let t2 = build_root_system("T2").unwrap();
        assert_eq!(t2.rank(), 2);
        assert!(t2.positive_roots().is_empty());
        assert_eq!(t2.weyl_elements().unwrap().len(), 1);
        let gl = build_root_system("A1xT1").unwrap();
        assert_eq!(gl.rank(), 2);
        assert_eq!(gl.semisimple_rank(), 1);
        assert!(!gl.is_semisimple());
        assert!(gl.is_central(&rat_vec(&[0, 1])));
        assert!(!gl.is_central(&rat_vec(&[1, 0])));
    }

    #[test]
    fn decomposition_with_center() {
        let gl = build_root_system("A1xT1").unwrap();
        let (c, z) = gl.root_decomposition(&rat_vec(&[3, 5])).unwrap();
        assert_eq!(c, vec![rat(3)]);
        assert_eq!(z, rat_vec(&[0, 5]));
    }
}
