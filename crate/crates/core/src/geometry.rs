//! Bounded polytopes given by integral halfspaces `a . y <= b`.
//!
//! Vertices are found by intersecting every `dim`-subset of bounding
//! hyperplanes (Cramer's rule in checked `i128`) and keeping the feasible
//! points. All downstream geometry is exact.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{FanoError, Result};
use crate::linalg::{self, det_i128};
use crate::rational::{self, Rat, RatVec};

/// `normal . y <= offset`, stored primitively (gcd of all entries is 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    pub fn new(normal: Vec<i64>, offset: i64) -> HalfSpace {
        let g = normal.iter().fold(offset.abs(), |acc, &x| acc.gcd(&x));
        if g > 1 {
            HalfSpace { normal: normal.iter().map(|x| x / g).collect(), offset: offset / g }
        } else {
            HalfSpace { normal, offset }
        }
    }

    /// Scale a rational halfspace to integers.
    pub fn from_rational(normal: &[Rat], offset: &Rat) -> Result<HalfSpace> {
        let mut all: RatVec = normal.to_vec();
        all.push(offset.clone());
        let den = rational::common_denominator(&all);
        let den = Rat::from_integer(den);
        let ints = all
            .iter()
            .map(|x| (x * &den).to_integer().to_i64().ok_or(FanoError::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        let (offset, normal) = ints.split_last().expect("nonempty");
        Ok(HalfSpace::new(normal.to_vec(), *offset))
    }

    pub fn slack(&self, y: &[Rat]) -> Rat {
        Rat::from_integer(BigInt::from(self.offset)) - rational::dot_int(&self.normal, y)
    }

    pub fn contains_f64(&self, y: &[f64]) -> bool {
        let s: f64 = self.normal.iter().zip(y).map(|(&a, &b)| a as f64 * b).sum();
        s <= self.offset as f64
    }
}

/// Choice of apex in a star triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Apex {
    /// Lexicographically least vertex at every level of the recursion.
    LeastVertex,
    /// Lexicographically greatest vertex at every level.
    GreatestVertex,
    /// The vertex centroid at the top level, least vertex below.
    Centroid,
}

#[derive(Clone, Debug)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<RatVec>,
    /// For each halfspace, the sorted indices of the vertices on its hyperplane.
    tight: Vec<Vec<usize>>,
}

impl HPolytope {
    /// Build a bounded, full-dimensional polytope.
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<HPolytope> {
        if dim == 0 {
            return Err(FanoError::Degenerate);
        }
        if let Some(h) = halfspaces.iter().find(|h| h.normal.len() != dim) {
            return Err(FanoError::DimensionMismatch(h.normal.clone(), dim));
        }
        let halfspaces: Vec<HalfSpace> = halfspaces
            .into_iter()
            .filter(|h| h.normal.iter().any(|&x| x != 0) || h.offset < 0)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if halfspaces.iter().any(|h| h.normal.iter().all(|&x| x == 0)) {
            return Err(FanoError::Degenerate);
        }
        if !is_bounded(dim, &halfspaces)? {
            return Err(FanoError::Unbounded);
        }
        let (vertices, tight) = enumerate_vertices(dim, &halfspaces)?;
        let refs: Vec<&RatVec> = vertices.iter().collect();
        if linalg::affine_dim(&refs) != Some(dim) {
            return Err(FanoError::Degenerate);
        }
        Ok(HPolytope { dim, halfspaces, vertices, tight })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn index_of(&self, h: &HalfSpace) -> Option<usize> {
        self.halfspaces.binary_search(h).ok()
    }

    pub fn tight_vertices(&self, halfspace: usize) -> &[usize] {
        &self.tight[halfspace]
    }

    /// Affine dimension of the face cut out by a bounding hyperplane.
    pub fn face_dim(&self, halfspace: usize) -> Option<usize> {
        let pts: Vec<&RatVec> = self.tight[halfspace].iter().map(|&i| &self.vertices[i]).collect();
        linalg::affine_dim(&pts)
    }

    pub fn is_facet(&self, halfspace: usize) -> bool {
        self.face_dim(halfspace) == Some(self.dim - 1)
    }

    /// Indices of halfspaces that define facets.
    pub fn facets(&self) -> Vec<usize> {
        (0..self.halfspaces.len()).filter(|&h| self.is_facet(h)).collect()
    }

    /// Number of bounding hyperplanes through a vertex.
    pub fn vertex_degree(&self, vertex: usize) -> usize {
        self.tight.iter().filter(|t| t.binary_search(&vertex).is_ok()).count()
    }

    pub fn contains(&self, y: &[Rat]) -> bool {
        self.halfspaces.iter().all(|h| !h.slack(y).is_negative())
    }

    pub fn contains_f64(&self, y: &[f64]) -> bool {
        self.halfspaces.iter().all(|h| h.contains_f64(y))
    }

    pub fn bounding_box(&self) -> (RatVec, RatVec) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            for k in 0..self.dim {
                if v[k] < lo[k] {
                    lo[k] = v[k].clone();
                }
                if v[k] > hi[k] {
                    hi[k] = v[k].clone();
                }
            }
        }
        (lo, hi)
    }

    pub fn vertex_centroid(&self) -> RatVec {
        let n = Rat::from_integer(BigInt::from(self.vertices.len()));
        let sum = self.vertices.iter().fold(rational::zeros(self.dim), |acc, v| rational::add(&acc, v));
        rational::scale(&sum, &n.recip())
    }

    /// Add one more halfspace.
    pub fn intersect(&self, h: HalfSpace) -> Result<HPolytope> {
        let mut hs = self.halfspaces.clone();
        hs.push(h);
        HPolytope::new(self.dim, hs)
    }

    /// The image under `y -> t y` for rational `t > 0`.
    pub fn scaled(&self, t: &Rat) -> Result<HPolytope> {
        if !t.is_positive() {
            return Err(FanoError::InvalidArgument("scale must be positive".into()));
        }
        let hs = self
            .halfspaces
            .iter()
            .map(|h| {
                let normal: RatVec = h.normal.iter().map(|&x| rational::rat(x)).collect();
                HalfSpace::from_rational(&normal, &(rational::rat(h.offset) * t))
            })
            .collect::<Result<Vec<_>>>()?;
        HPolytope::new(self.dim, hs)
    }

    /// Star triangulation into `dim`-simplices (each given by its `dim + 1` vertices).
    pub fn triangulate(&self, apex: Apex) -> Vec<Vec<RatVec>> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let to_points = |s: Vec<usize>| s.into_iter().map(|i| self.vertices[i].clone()).collect();
        match apex {
            Apex::LeastVertex | Apex::GreatestVertex => {
                let greatest = apex == Apex::GreatestVertex;
                self.triangulate_face(&all, self.dim, greatest).into_iter().map(to_points).collect()
            }
            Apex::Centroid => {
                let c = self.vertex_centroid();
                self.subfaces(&all, self.dim)
                    .into_iter()
                    .flat_map(|f| self.triangulate_face(&f, self.dim - 1, false))
                    .map(|s| {
                        let mut pts: Vec<RatVec> = to_points(s);
                        pts.push(c.clone());
                        pts
                    })
                    .collect()
            }
        }
    }

    /// Facets of the `k`-dimensional face with vertex set `face`.
    fn subfaces(&self, face: &[usize], k: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for t in &self.tight {
            let sub: Vec<usize> = face.iter().copied().filter(|i| t.binary_search(i).is_ok()).collect();
            if sub.len() < k || sub.len() == face.len() {
                continue;
            }
            let pts: Vec<&RatVec> = sub.iter().map(|&i| &self.vertices[i]).collect();
            if linalg::affine_dim(&pts) == Some(k - 1) {
                out.insert(sub);
            }
        }
        out.into_iter().collect()
    }

    fn triangulate_face(&self, face: &[usize], k: usize, greatest: bool) -> Vec<Vec<usize>> {
        if face.len() == k + 1 {
            return vec![face.to_vec()];
        }
        let apex = if greatest { *face.last().unwrap() } else { face[0] };
        let mut out = Vec::new();
        for sub in self.subfaces(face, k) {
            if sub.binary_search(&apex).is_ok() {
                continue;
            }
            for mut s in self.triangulate_face(&sub, k - 1, greatest) {
                s.push(apex);
                s.sort_unstable();
                out.push(s);
            }
        }
        out
    }
}

/// Solve the square integral system given by `rows`; returns `(numerators, det)`
/// with `det > 0`, or `None` when singular.
fn cramer(rows: &[&HalfSpace]) -> Result<Option<(Vec<i128>, i128)>> {
    let n = rows.len();
    if n == 2 {
        let (a, b) = (rows[0].normal[0] as i128, rows[0].normal[1] as i128);
        let (c, d) = (rows[1].normal[0] as i128, rows[1].normal[1] as i128);
        let (e, f) = (rows[0].offset as i128, rows[1].offset as i128);
        let det = a * d - b * c;
        if det == 0 {
            return Ok(None);
        }
        let x = e * d - b * f;
        let y = a * f - e * c;
        return Ok(Some(if det < 0 { (vec![-x, -y], -det) } else { (vec![x, y], det) }));
    }
    let a: Vec<Vec<i128>> = rows.iter().map(|h| h.normal.iter().map(|&x| x as i128).collect()).collect();
    let det = det_i128(&a)?;
    if det == 0 {
        return Ok(None);
    }
    let mut nums = Vec::with_capacity(n);
    for k in 0..n {
        let mut ak = a.clone();
        for (row, h) in ak.iter_mut().zip(rows) {
            row[k] = h.offset as i128;
        }
        nums.push(det_i128(&ak)?);
    }
    if det < 0 {
        Ok(Some((nums.into_iter().map(|x| -x).collect(), -det)))
    } else {
        Ok(Some((nums, det)))
    }
}

fn feasible(halfspaces: &[HalfSpace], num: &[i128], det: i128) -> Result<bool> {
    for h in halfspaces {
        let mut lhs: i128 = 0;
        for (&a, &x) in h.normal.iter().zip(num) {
            let t = (a as i128).checked_mul(x).ok_or(FanoError::Overflow)?;
            lhs = lhs.checked_add(t).ok_or(FanoError::Overflow)?;
        }
        let rhs = (h.offset as i128).checked_mul(det).ok_or(FanoError::Overflow)?;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vertex `num / den` in lowest terms with `den > 0`.
type IntPoint = (Vec<i128>, i128);

fn reduce(num: Vec<i128>, den: i128) -> IntPoint {
    let g = num.iter().fold(den, |acc, &x| acc.gcd(&x));
    (num.into_iter().map(|x| x / g).collect(), den / g)
}

fn on_hyperplane(h: &HalfSpace, p: &IntPoint) -> Result<bool> {
    let mut lhs: i128 = 0;
    for (&a, &x) in h.normal.iter().zip(&p.0) {
        let t = (a as i128).checked_mul(x).ok_or(FanoError::Overflow)?;
        lhs = lhs.checked_add(t).ok_or(FanoError::Overflow)?;
    }
    Ok(lhs == (h.offset as i128).checked_mul(p.1).ok_or(FanoError::Overflow)?)
}

/// Vertices in lexicographic order and, per halfspace, the tight vertex indices.
fn enumerate_vertices(dim: usize, halfspaces: &[HalfSpace]) -> Result<(Vec<RatVec>, Vec<Vec<usize>>)> {
    let mut found: BTreeSet<IntPoint> = BTreeSet::new();
    for combo in halfspaces.iter().combinations(dim) {
        let Some((num, det)) = cramer(&combo)? else {
            continue;
        };
        if feasible(halfspaces, &num, det)? {
            found.insert(reduce(num, det));
        }
    }
    let mut points: Vec<(RatVec, IntPoint)> = found
        .into_iter()
        .map(|(num, den)| {
            let d = BigInt::from(den);
            let v = num.iter().map(|&x| Rat::new(BigInt::from(x), d.clone())).collect();
            (v, (num, den))
        })
        .collect();
    points.sort_by(|a, b| a.0.cmp(&b.0));
    let tight = halfspaces
        .iter()
        .map(|h| {
            let mut t = Vec::new();
            for (i, (_, p)) in points.iter().enumerate() {
                if on_hyperplane(h, p)? {
                    t.push(i);
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((points.into_iter().map(|(v, _)| v).collect(), tight))
}

/// Signed maximal minors of a `(dim-1) x dim` integer matrix: a vector
/// orthogonal to all of its rows (zero iff the rows are dependent).
fn generalized_cross(rows: &[&HalfSpace], dim: usize) -> Result<Vec<i128>> {
    (0..dim)
        .map(|skip| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|h| h.normal.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x as i128).collect())
                .collect();
            let d = det_i128(&minor)?;
            Ok(if skip % 2 == 0 { d } else { -d })
        })
        .collect()
}

/// The recession cone `{d : A d <= 0}` is trivial.
fn is_bounded(dim: usize, halfspaces: &[HalfSpace]) -> Result<bool> {
    let normals: linalg::Matrix =
        halfspaces.iter().map(|h| h.normal.iter().map(|&x| rational::rat(x)).collect()).collect();
    if halfspaces.len() < dim + 1 || linalg::rank(&normals) < dim {
        return Ok(false);
    }
    // A nonzero pointed cone has an extreme ray on which dim-1 independent
    // constraints are tight.
    for combo in halfspaces.iter().combinations(dim - 1) {
        let d = generalized_cross(&combo, dim)?;
        if d.iter().all(|&x| x == 0) {
            continue;
        }
        for sign in [1i128, -1] {
            let ray = halfspaces.iter().all(|h| {
                let s: i128 = h.normal.iter().zip(&d).map(|(&a, &x)| a as i128 * x * sign).sum();
                s <= 0
            });
            if ray {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_vec, ratio};

    fn square(l: i64) -> HPolytope {
        HPolytope::new(
            2,
            vec![
                HalfSpace::new(vec![1, 0], l),
                HalfSpace::new(vec![-1, 0], l),
                HalfSpace::new(vec![0, 1], l),
                HalfSpace::new(vec![0, -1], l),
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_vertices() {
        let p = square(3);
        assert_eq!(p.vertices(), &[rat_vec(&[-3, -3]), rat_vec(&[-3, 3]), rat_vec(&[3, -3]), rat_vec(&[3, 3])]);
        assert_eq!(p.facets().len(), 4);
        for v in 0..4 {
            assert_eq!(p.vertex_degree(v), 2);
        }
    }

    #[test]
    fn halfspaces_are_normalized() {
        let h = HalfSpace::new(vec![2, 4], 6);
        assert_eq!(h, HalfSpace::new(vec![1, 2], 3));
        let r = HalfSpace::from_rational(&[ratio(1, 2), ratio(3, 4)], &ratio(5, 4)).unwrap();
        assert_eq!(r, HalfSpace::new(vec![2, 3], 5));
    }

    #[test]
    fn unbounded_slab() {
        let slab = HPolytope::new(2, vec![HalfSpace::new(vec![1, 1], 3), HalfSpace::new(vec![-1, -1], 3)]);
        assert!(matches!(slab, Err(FanoError::Unbounded)));
        let wedge = HPolytope::new(
            2,
            vec![HalfSpace::new(vec![1, 0], 1), HalfSpace::new(vec![0, 1], 1), HalfSpace::new(vec![1, 1], 1)],
        );
        assert!(matches!(wedge, Err(FanoError::Unbounded)));
        let strip = HPolytope::new(1, vec![HalfSpace::new(vec![1], 1)]);
        assert!(matches!(strip, Err(FanoError::Unbounded)));
    }

    #[test]
    fn interval() {
        let p = HPolytope::new(1, vec![HalfSpace::new(vec![1], 2), HalfSpace::new(vec![-1], 1)]).unwrap();
        assert_eq!(p.vertices(), &[rat_vec(&[-1]), rat_vec(&[2])]);
        assert_eq!(p.triangulate(Apex::LeastVertex).len(), 1);
    }

    #[test]
    fn cube_triangulations() {
        let mut hs = Vec::new();
        for k in 0..3 {
            for s in [1, -1] {
                let mut n = vec![0; 3];
                n[k] = s;
                hs.push(HalfSpace::new(n, 1));
            }
        }
        let cube = HPolytope::new(3, hs).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        let least = cube.triangulate(Apex::LeastVertex);
        let greatest = cube.triangulate(Apex::GreatestVertex);
        let centroid = cube.triangulate(Apex::Centroid);
        assert_eq!(least.len(), 6);
        assert_eq!(greatest.len(), 6);
        assert_eq!(centroid.len(), 12);
        for tri in [least, greatest, centroid] {
            let vol: Rat = tri.iter().map(simplex_volume).sum();
            assert_eq!(vol, rational::rat(8));
        }
    }

    fn simplex_volume(s: &Vec<RatVec>) -> Rat {
        let m: linalg::Matrix = s[1..].iter().map(|v| rational::sub(v, &s[0])).collect();
        linalg::det(&m).abs() / rational::rat(6)
    }

    #[test]
    fn degenerate_rejected() {
        let flat = HPolytope::new(
            2,
            vec![
                HalfSpace::new(vec![1, 0], 0),
                HalfSpace::new(vec![-1, 0], 0),
                HalfSpace::new(vec![0, 1], 1),
                HalfSpace::new(vec![0, -1], 1),
            ],
        );
        assert!(matches!(flat, Err(FanoError::Degenerate)));
    }
}
