//! The Kähler-Einstein criterion `b(P+) in 2 rho + Xi` and Futaki-invariant
//! certificates of K-instability.
//!
//! `Vol_pi` below always means the pi-weighted volume of `P+`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{FanoError, Result};
use crate::geometry::Apex;
use crate::linalg;
use crate::measure::{self, MomentResult};
use crate::poly::Polynomial;
use crate::polytope::GroupPolytope;
use crate::rational::{self, rat, Rat, RatVec};
use crate::rootsys::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "KE")]
    Ke,
    #[serde(rename = "unstable")]
    Unstable,
    #[serde(rename = "boundary")]
    Boundary,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ke => "KE",
            Status::Unstable => "unstable",
            Status::Boundary => "boundary",
        }
    }
}

/// Direction of a test configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `f = xi(y)` for a central coweight `xi`.
    Linear(RatVec),
    /// `f = max_w <w varpi_i, y>`, which is `<varpi_i, y>` on `P+`.
    FundamentalWeight(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub direction: Direction,
    pub futaki: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    /// `b(P+) - 2 rho = sum c_i alpha_i + center_component`.
    pub c: RatVec,
    pub center_component: RatVec,
    pub certificate: Option<Certificate>,
    pub moments: MomentResult,
}

/// Split `b - 2 rho` into simple-root coefficients and a central part.
pub fn decompose_relative_barycenter(rs: &RootSystem, b: &[Rat]) -> Result<(RatVec, RatVec)> {
    let rel = rational::sub(b, rs.two_rho());
    let (c, center) = rs.root_decomposition(&rel)?;
    let rebuilt = c
        .iter()
        .zip(rs.simple_roots())
        .fold(center.clone(), |acc, (ci, a)| rational::add(&acc, &rational::scale(a, ci)));
    if rebuilt != rel {
        return Err(FanoError::Internal("root decomposition has nonzero residual".into()));
    }
    Ok((center, c))
}

/// Futaki invariant of the test configuration along `direction`.
pub fn futaki(rs: &RootSystem, moments: &MomentResult, direction: &Direction) -> Result<Rat> {
    match direction {
        Direction::Linear(xi) => {
            if xi.len() != rs.rank() {
                return Err(FanoError::InvalidArgument(format!(
                    "direction has dimension {}, expected {}",
                    xi.len(),
                    rs.rank()
                )));
            }
            if !rational::is_zero_vec(xi) && !rs.is_central(xi) {
                return Err(FanoError::NotCentral);
            }
            let rel = rational::sub(&moments.barycenter, rs.two_rho());
            Ok(&moments.vol_pi * rational::dot(xi, &rel))
        }
        Direction::FundamentalWeight(i) => {
            let r = rs.semisimple_rank();
            if *i >= r {
                return Err(FanoError::IndexOutOfRange { index: *i, rank: r });
            }
            let (_, c) = decompose_relative_barycenter(rs, &moments.barycenter)?;
            let alpha = &rs.simple_roots()[*i];
            Ok(&c[*i] * rs.norm_sq(alpha) * &moments.vol_pi / rat(2))
        }
    }
}

/// `int_{P+} <y - 2 rho, varpi_i> pi(y) dy`, integrated directly.
pub fn direct_futaki_fundamental(p: &GroupPolytope, i: usize) -> Result<Rat> {
    let rs = p.root_system();
    let r = rs.semisimple_rank();
    if i >= r {
        return Err(FanoError::IndexOutOfRange { index: i, rank: r });
    }
    let varpi = &rs.fundamental_weights()[i];
    let form = linalg::mat_vec(rs.gram(), varpi);
    let shift = rs.inner(varpi, rs.two_rho());
    let integrand = Polynomial::linear(&form) + Polynomial::constant(rs.rank(), -shift);
    let integrand = &integrand * &measure::pi_polynomial(rs);
    let (vals, _) = measure::integrate_over_polytope(&[integrand], p.positive_polytope(), Apex::LeastVertex)?;
    Ok(vals[0].clone())
}

/// Decide the criterion for precomputed moments.
pub fn verdict_from_moments(rs: &RootSystem, moments: MomentResult) -> Result<Verdict> {
    let (center, c) = decompose_relative_barycenter(rs, &moments.barycenter)?;
    let (status, certificate) = if !rational::is_zero_vec(&center) {
        // Pair against the central direction dual to the center component.
        let xi = linalg::mat_vec(rs.gram(), &center);
        let direction = Direction::Linear(xi);
        let value = futaki(rs, &moments, &direction)?;
        if value.is_zero() {
            return Err(FanoError::Internal("linear Futaki invariant vanishes off-center".into()));
        }
        (Status::Unstable, Some(Certificate { direction, futaki: value }))
    } else if let Some((i, _)) = c.iter().enumerate().filter(|(_, ci)| ci.is_negative()).fold(
        None::<(usize, &Rat)>,
        |best, (i, ci)| match best {
            Some((_, b)) if b <= ci => best,
            _ => Some((i, ci)),
        },
    ) {
        let direction = Direction::FundamentalWeight(i);
        let value = futaki(rs, &moments, &direction)?;
        if !value.is_negative() {
            return Err(FanoError::Internal("destabilizing Futaki invariant is not negative".into()));
        }
        (Status::Unstable, Some(Certificate { direction, futaki: value }))
    } else if c.iter().all(Signed::is_positive) {
        (Status::Ke, None)
    } else {
        (Status::Boundary, None)
    };
    Ok(Verdict { status, c, center_component: center, certificate, moments })
}

/// Exact Kähler-Einstein verdict for a group polytope.
pub fn ke_verdict(p: &GroupPolytope) -> Result<Verdict> {
    let moments = measure::weighted_moments(p)?;
    verdict_from_moments(p.root_system(), moments)
}
