//! Finiteness cutoff: above a threshold label `I*` that depends only on the
//! complex dimension `n`, the pi-average of the exit facet's linear form
//! falls below its value at `2 rho`, ruling out Kähler-Einstein metrics.
//!
//! With `t = 1 + 1/I`, the averaged ratio is
//! `[n/(n+1) + t (t^n - 1)] / t^n`, and the conclusion applies when it is `< 1`.
//!
//! Labels are in I-units (`I = 2 rho(u)`); divide by two for rho-units.

use num_traits::{One, Signed};

use crate::error::{FanoError, Result};
use crate::rational::{self, rat, ratio, Rat};

pub fn average_bracket(label: &Rat, n: u32) -> Result<Rat> {
    if !label.is_positive() {
        return Err(FanoError::InvalidArgument("label must be positive".into()));
    }
    if n == 0 {
        return Err(FanoError::InvalidArgument("dimension must be at least 1".into()));
    }
    let t = Rat::one() + label.recip();
    let tn = num_traits::pow(t.clone(), n as usize);
    let head = ratio(n as i64, n as i64 + 1);
    Ok((head + &t * (&tn - Rat::one())) / tn)
}

/// True when the bracket certifies that no polytope with this label is KE.
pub fn excludes_ke(label: &Rat, n: u32) -> Result<bool> {
    Ok(average_bracket(label, n)? < Rat::one())
}

/// An interval `[lo, hi]` (I-units) containing the threshold `I*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaInterval {
    pub n: u32,
    pub lo: Rat,
    pub hi: Rat,
}

impl OmegaInterval {
    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn lo_rho(&self) -> Rat {
        &self.lo / rat(2)
    }

    pub fn hi_rho(&self) -> Rat {
        &self.hi / rat(2)
    }

    pub fn approx(&self) -> f64 {
        rational::to_f64(&self.midpoint())
    }

    pub fn approx_rho(&self) -> f64 {
        self.approx() / 2.0
    }
}

pub const GRID_LO: i64 = 1;
pub const GRID_HI: i64 = 1000;

fn grid() -> Vec<Rat> {
    let step = ratio(9, 8);
    let mut pts = vec![rat(GRID_LO)];
    loop {
        let next = pts.last().unwrap() * &step;
        if next >= rat(GRID_HI) {
            pts.push(rat(GRID_HI));
            return pts;
        }
        pts.push(next);
    }
}

/// Enclose the root of `bracket(I, n) = 1` in an interval of width `<= tol`.
pub fn omega_generic(n: u32, tol: &Rat) -> Result<OmegaInterval> {
    if !tol.is_positive() {
        return Err(FanoError::InvalidArgument("tolerance must be positive".into()));
    }
    if n == 0 {
        return Err(FanoError::InvalidArgument("dimension must be at least 1".into()));
    }
    let pts = grid();
    let excess: Vec<Rat> = pts.iter().map(|i| average_bracket(i, n).map(|v| v - Rat::one())).collect::<Result<_>>()?;
    let changes: Vec<usize> =
        (1..pts.len()).filter(|&k| excess[k - 1].is_positive() && !excess[k].is_positive()).collect();
    let no_change = || FanoError::NoSignChange { lo: GRID_LO.to_string(), hi: GRID_HI.to_string() };
    let rises = (1..pts.len()).any(|k| !excess[k - 1].is_positive() && excess[k].is_positive());
    let k = match changes.as_slice() {
        [k] if !rises => *k,
        [] => return Err(no_change()),
        _ => return Err(FanoError::Internal("bracket changes sign more than once".into())),
    };
    if excess[k..].windows(2).any(|w| w[1] >= w[0]) {
        return Err(FanoError::Internal("bracket is not decreasing past the root".into()));
    }
    let (mut lo, mut hi) = (pts[k - 1].clone(), pts[k].clone());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / rat(2);
        if average_bracket(&mid, n)? > Rat::one() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(OmegaInterval { n, lo, hi })
}
