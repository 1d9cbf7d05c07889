//! The Duistermaat-Heckman weight `pi(y) = prod_{alpha > 0} <alpha, y>^2`,
//! exact integration of polynomials over simplices and polytopes, and the
//! pi-weighted barycenter of `P+`.
//!
//! Exact integrals use the barycentric substitution `y = sum_j l_j v_j` and
//! the Dirichlet formula
//! `int_D prod l_j^{a_j} dV = m! vol(D) prod a_j! / (m + sum a_j)!`.
//! The Monte-Carlo estimator exists only as an independent cross-check.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{FanoError, Result};
use crate::geometry::{Apex, HPolytope};
use crate::linalg;
use crate::poly::Polynomial;
use crate::polytope::GroupPolytope;
use crate::rational::{self, Rat, RatVec};
use crate::rootsys::RootSystem;

/// `pi(y)` as an expanded polynomial in the `a*` coordinates.
pub fn pi_polynomial(rs: &RootSystem) -> Polynomial {
    let dim = rs.rank();
    rs.positive_roots().iter().fold(Polynomial::one(dim), |acc, a| {
        let form = Polynomial::linear(&linalg::mat_vec(rs.gram(), a));
        &acc * &(&form * &form)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentResult {
    pub vol_pi: Rat,
    pub barycenter: RatVec,
    pub simplex_count: usize,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Barycentric forms `y_k = sum_j v_j[k] l_j` and `|det(v_j - v_0)|`.
fn barycentric_forms(simplex: &[RatVec]) -> Result<(Vec<Polynomial>, Rat)> {
    let m = simplex.len().checked_sub(1).ok_or(FanoError::DegenerateSimplex)?;
    if simplex.iter().any(|v| v.len() != m) {
        return Err(FanoError::DegenerateSimplex);
    }
    let edges: linalg::Matrix = simplex[1..].iter().map(|v| rational::sub(v, &simplex[0])).collect();
    let det = linalg::det(&edges).abs();
    if det.is_zero() {
        return Err(FanoError::DegenerateSimplex);
    }
    let forms = (0..m)
        .map(|k| {
            let coeffs: RatVec = simplex.iter().map(|v| v[k].clone()).collect();
            Polynomial::linear(&coeffs)
        })
        .collect();
    Ok((forms, det))
}

/// Integral of a polynomial already written in barycentric coordinates.
fn dirichlet_integral(p: &Polynomial, abs_det: &Rat) -> Rat {
    let m = p.nvars() as u32 - 1;
    p.terms().fold(Rat::zero(), |acc, (e, c)| {
        let num = e.iter().fold(BigInt::one(), |a, &k| a * factorial(k));
        let total: u32 = e.iter().sum();
        acc + c * Rat::new(num, factorial(m + total))
    }) * abs_det
}

/// Exact integral of `poly` over the simplex with the given `m + 1` vertices.
pub fn integrate_over_simplex(poly: &Polynomial, simplex: &[RatVec]) -> Result<Rat> {
    let (forms, det) = barycentric_forms(simplex)?;
    if poly.nvars() != forms.len() {
        return Err(FanoError::InvalidArgument("polynomial and simplex dimensions differ".into()));
    }
    Ok(dirichlet_integral(&poly.substitute(&forms), &det))
}

/// Integrals of several polynomials over a polytope, via a star triangulation.
/// Returns the integrals and the number of simplices used.
pub fn integrate_over_polytope(polys: &[Polynomial], p: &HPolytope, apex: Apex) -> Result<(Vec<Rat>, usize)> {
    let simplices = p.triangulate(apex);
    let parts: Vec<Vec<Rat>> = simplices
        .par_iter()
        .map(|s| polys.iter().map(|f| integrate_over_simplex(f, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut totals = vec![Rat::zero(); polys.len()];
    for part in parts {
        for (t, x) in totals.iter_mut().zip(part) {
            *t += x;
        }
    }
    Ok((totals, simplices.len()))
}

/// Weighted volume and barycenter of an arbitrary polytope for the weight `w`.
pub fn moments_of(weight: &Polynomial, p: &HPolytope, apex: Apex) -> Result<MomentResult> {
    let dim = p.dim();
    let simplices = p.triangulate(apex);
    let parts: Vec<Vec<Rat>> = simplices
        .par_iter()
        .map(|s| {
            let (forms, det) = barycentric_forms(s)?;
            let w = weight.substitute(&forms);
            let mut out = Vec::with_capacity(dim + 1);
            out.push(dirichlet_integral(&w, &det));
            for f in &forms {
                out.push(dirichlet_integral(&(f * &w), &det));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut totals = vec![Rat::zero(); dim + 1];
    for part in parts {
        for (t, x) in totals.iter_mut().zip(part) {
            *t += x;
        }
    }
    let vol_pi = totals[0].clone();
    if !vol_pi.is_positive() {
        return Err(FanoError::Degenerate);
    }
    let barycenter = totals[1..].iter().map(|x| x / &vol_pi).collect();
    Ok(MomentResult { vol_pi, barycenter, simplex_count: simplices.len() })
}

/// Exact pi-weighted volume and barycenter of `P+`.
pub fn weighted_moments(p: &GroupPolytope) -> Result<MomentResult> {
    weighted_moments_with(p, Apex::LeastVertex)
}

pub fn weighted_moments_with(p: &GroupPolytope, apex: Apex) -> Result<MomentResult> {
    moments_of(&pi_polynomial(p.root_system()), p.positive_polytope(), apex)
}

#[derive(Clone, Debug, Serialize)]
pub struct McEstimate {
    pub samples: u64,
    pub accepted: u64,
    pub vol_pi: f64,
    pub vol_pi_se: f64,
    pub barycenter: Vec<f64>,
    pub barycenter_se: Vec<f64>,
}

impl McEstimate {
    /// Every exact quantity lies within `k` standard errors of its estimate.
    pub fn agrees_with(&self, exact: &MomentResult, k: f64) -> bool {
        let within = |est: f64, se: f64, x: f64| (est - x).abs() <= k * se;
        within(self.vol_pi, self.vol_pi_se, rational::to_f64(&exact.vol_pi))
            && self
                .barycenter
                .iter()
                .zip(&self.barycenter_se)
                .zip(&exact.barycenter)
                .all(|((&b, &se), x)| within(b, se, rational::to_f64(x)))
    }
}

const MC_BLOCK: u64 = 1 << 16;

#[derive(Default, Clone)]
struct Accum {
    accepted: u64,
    w: f64,
    w2: f64,
    wy: Vec<f64>,
    w2y: Vec<f64>,
    w2yy: Vec<f64>,
}

/// Rejection-sampling estimate of the weighted moments of `region`.
///
/// Samples are drawn in blocks; block `b` uses the ChaCha stream `b` of
/// `seed`, so the result does not depend on how blocks are scheduled.
pub fn mc_moments_raw(
    region: &HPolytope,
    weight: impl Fn(&[f64]) -> f64 + Sync,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(FanoError::InvalidArgument("samples must be at least 1".into()));
    }
    let dim = region.dim();
    let (lo, hi) = region.bounding_box();
    let lo = rational::vec_to_f64(&lo);
    let hi = rational::vec_to_f64(&hi);
    let box_vol: f64 = lo.iter().zip(&hi).map(|(a, b)| b - a).product();
    let blocks = samples.div_ceil(MC_BLOCK);
    let partials: Vec<Accum> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let n = MC_BLOCK.min(samples - b * MC_BLOCK);
            let mut acc = Accum { wy: vec![0.0; dim], w2y: vec![0.0; dim], w2yy: vec![0.0; dim], ..Default::default() };
            let mut y = vec![0.0; dim];
            for _ in 0..n {
                for k in 0..dim {
                    y[k] = lo[k] + (hi[k] - lo[k]) * rng.gen::<f64>();
                }
                if !region.contains_f64(&y) {
                    continue;
                }
                let w = weight(&y);
                acc.accepted += 1;
                acc.w += w;
                acc.w2 += w * w;
                for k in 0..dim {
                    acc.wy[k] += w * y[k];
                    acc.w2y[k] += w * w * y[k];
                    acc.w2yy[k] += w * w * y[k] * y[k];
                }
            }
            acc
        })
        .collect();
    let mut total = Accum { wy: vec![0.0; dim], w2y: vec![0.0; dim], w2yy: vec![0.0; dim], ..Default::default() };
    for p in partials {
        total.accepted += p.accepted;
        total.w += p.w;
        total.w2 += p.w2;
        for k in 0..dim {
            total.wy[k] += p.wy[k];
            total.w2y[k] += p.w2y[k];
            total.w2yy[k] += p.w2yy[k];
        }
    }
    if total.accepted == 0 || total.w <= 0.0 {
        return Err(FanoError::NoAcceptedSamples);
    }
    let n = samples as f64;
    let mean = total.w / n;
    let var = (total.w2 / n - mean * mean).max(0.0);
    let barycenter: Vec<f64> = total.wy.iter().map(|s| s / total.w).collect();
    let barycenter_se = (0..dim)
        .map(|k| {
            let b = barycenter[k];
            let num = total.w2yy[k] - 2.0 * b * total.w2y[k] + b * b * total.w2;
            num.max(0.0).sqrt() / total.w
        })
        .collect();
    Ok(McEstimate {
        samples,
        accepted: total.accepted,
        vol_pi: box_vol * mean,
        vol_pi_se: box_vol * (var / n).sqrt(),
        barycenter,
        barycenter_se,
    })
}

/// Monte-Carlo estimate of the pi-weighted moments of `P+`.
pub fn mc_moments(p: &GroupPolytope, samples: u64, seed: u64) -> Result<McEstimate> {
    let rs = p.root_system();
    let forms: Vec<Vec<f64>> =
        rs.positive_roots().iter().map(|a| rational::vec_to_f64(&linalg::mat_vec(rs.gram(), a))).collect();
    let weight = move |y: &[f64]| {
        forms
            .iter()
            .map(|f| {
                let s: f64 = f.iter().zip(y).map(|(a, b)| a * b).sum();
                s * s
            })
            .product::<f64>()
    };
    mc_moments_raw(p.positive_polytope(), weight, samples, seed)
}
