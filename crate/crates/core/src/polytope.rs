//! Weyl-invariant moment polytopes of Q-Fano group compactifications.
//!
//! A polytope is specified only by its outer facet normals `u` (primitive
//! lattice vectors in the closed dual chamber). The support value of each
//! facet is forced by the anticanonical polarization:
//! `lambda(u) = 1 + 2 rho(u)`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{FanoError, Result};
use crate::geometry::{HPolytope, HalfSpace};
use crate::linalg;
use crate::rational::{self, rat, Rat, RatVec};
use crate::rootsys::{ChamberPosition, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FacetSpec {
    pub u: Vec<i64>,
    #[serde(with = "rational::serde_rat")]
    pub lambda: Rat,
}

impl FacetSpec {
    pub fn halfspace(&self) -> Result<HalfSpace> {
        let u: RatVec = self.u.iter().map(|&x| rat(x)).collect();
        HalfSpace::from_rational(&u, &self.lambda)
    }
}

/// Anticanonical support value of the facet with normal `u`.
pub fn anticanonical_lambda(rs: &RootSystem, u: &[i64]) -> Rat {
    Rat::one() + rat(2) * rs.rho_pairing_int(u)
}

/// The label `I(P)` together with the exit parameter `t0` of the ray `t rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Label {
    pub value: Rat,
    pub t0: Rat,
    pub witness: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct PositivePart<'a> {
    pub vertices: &'a [RatVec],
    pub outer_facets: &'a [FacetSpec],
    /// Indices of simple roots whose walls carry a facet of `P+`.
    pub wall_facets: &'a [usize],
}

#[derive(Clone, Debug)]
pub struct GroupPolytope {
    rs: Arc<RootSystem>,
    outer: Vec<FacetSpec>,
    full: Vec<FacetSpec>,
    body: HPolytope,
    positive: HPolytope,
    walls: Vec<usize>,
}

/// Construct and validate the polytope with the given outer normals.
pub fn build_polytope(rs: Arc<RootSystem>, normals: &[Vec<i64>]) -> Result<GroupPolytope> {
    if normals.is_empty() {
        return Err(FanoError::EmptyNormals);
    }
    let dim = rs.rank();
    let mut seen = BTreeSet::new();
    for u in normals {
        if u.len() != dim {
            return Err(FanoError::DimensionMismatch(u.clone(), dim));
        }
        if !rational::is_primitive(u) {
            return Err(FanoError::NotPrimitive(u.clone()));
        }
        if rs.coweight_chamber_position(u) == ChamberPosition::Outside {
            return Err(FanoError::OutsideChamber(u.clone()));
        }
        if !seen.insert(u.clone()) {
            return Err(FanoError::DuplicateNormal(u.clone()));
        }
    }

    let outer: Vec<FacetSpec> = seen
        .into_iter()
        .map(|u| {
            let lambda = anticanonical_lambda(&rs, &u);
            FacetSpec { u, lambda }
        })
        .collect();

    let mut full: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
    for f in &outer {
        for v in rs.coweight_orbit(&f.u)? {
            full.insert(v, f.lambda.clone());
        }
    }
    let full: Vec<FacetSpec> = full.into_iter().map(|(u, lambda)| FacetSpec { u, lambda }).collect();
    let body = HPolytope::new(dim, full.iter().map(FacetSpec::halfspace).collect::<Result<_>>()?)?;

    for f in &outer {
        let idx = body
            .index_of(&f.halfspace()?)
            .ok_or_else(|| FanoError::Internal("outer facet missing from its polytope".into()))?;
        if !body.is_facet(idx) {
            return Err(FanoError::RedundantNormal(f.u.clone()));
        }
    }

    let vertex_set: BTreeSet<&RatVec> = body.vertices().iter().collect();
    for w in rs.weyl_elements()? {
        for v in body.vertices() {
            if !vertex_set.contains(&linalg::mat_vec(w, v)) {
                return Err(FanoError::Internal("polytope is not Weyl-invariant".into()));
            }
        }
    }

    let wall_halfspaces: Vec<HalfSpace> = rs
        .simple_roots()
        .iter()
        .map(|a| {
            let ga = linalg::mat_vec(rs.gram(), a);
            HalfSpace::from_rational(&rational::scale(&ga, &rat(-1)), &Rat::zero())
        })
        .collect::<Result<_>>()?;
    let mut pos_hs: Vec<HalfSpace> = full.iter().map(FacetSpec::halfspace).collect::<Result<_>>()?;
    pos_hs.extend(wall_halfspaces.iter().cloned());
    let positive = HPolytope::new(dim, pos_hs)?;

    let outer_of_positive: Vec<&FacetSpec> = full
        .iter()
        .filter(|f| f.halfspace().ok().and_then(|h| positive.index_of(&h)).is_some_and(|i| positive.is_facet(i)))
        .collect();
    if outer_of_positive.len() != outer.len() || outer_of_positive.iter().zip(&outer).any(|(a, b)| *a != b) {
        return Err(FanoError::Internal("outer facets of P+ differ from the chamber normals".into()));
    }
    let walls: Vec<usize> = wall_halfspaces
        .iter()
        .enumerate()
        .filter(|(_, h)| positive.index_of(h).is_some_and(|i| positive.is_facet(i)))
        .map(|(i, _)| i)
        .collect();

    Ok(GroupPolytope { rs, outer, full, body, positive, walls })
}

impl GroupPolytope {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Outer normals in canonical (sorted) order.
    pub fn outer_normals(&self) -> Vec<Vec<i64>> {
        self.outer.iter().map(|f| f.u.clone()).collect()
    }

    pub fn outer_facets(&self) -> &[FacetSpec] {
        &self.outer
    }

    pub fn full_facets(&self) -> &[FacetSpec] {
        &self.full
    }

    pub fn vertices(&self) -> &[RatVec] {
        self.body.vertices()
    }

    pub fn body(&self) -> &HPolytope {
        &self.body
    }

    pub fn positive_polytope(&self) -> &HPolytope {
        &self.positive
    }

    pub fn positive_part(&self) -> PositivePart<'_> {
        PositivePart { vertices: self.positive.vertices(), outer_facets: &self.outer, wall_facets: &self.walls }
    }

    /// Every vertex of `P` lies on exactly `rank` facets.
    pub fn is_fine(&self) -> bool {
        let r = self.body.dim();
        (0..self.body.vertices().len()).all(|v| self.body.vertex_degree(v) == r)
    }

    /// `I(P) = max 2 rho(u)` over outer facets, with `t0 = 2 (1 + 1/I(P))`.
    pub fn label(&self) -> Result<Label> {
        let (value, witness) = self
            .outer
            .iter()
            .map(|f| (rat(2) * self.rs.rho_pairing_int(&f.u), &f.u))
            .fold(None::<(Rat, &Vec<i64>)>, |best, (v, u)| match best {
                Some((ref bv, _)) if *bv >= v => best,
                _ => Some((v, u)),
            })
            .ok_or(FanoError::EmptyNormals)?;
        if !value.is_positive() {
            return Err(FanoError::LabelUndefined);
        }
        let t0 = rat(2) * (Rat::one() + value.recip());
        let exit = rational::scale(&self.rs.rho(), &t0);
        let slacks: Vec<Rat> =
            self.outer.iter().map(|f| f.halfspace().map(|h| h.slack(&exit))).collect::<Result<_>>()?;
        if slacks.iter().any(Signed::is_negative) || !slacks.iter().any(Zero::is_zero) {
            return Err(FanoError::Internal("t0 rho is not on the boundary of P+".into()));
        }
        Ok(Label { value, t0, witness: witness.clone() })
    }
}

pub fn positive_part(p: &GroupPolytope) -> PositivePart<'_> {
    p.positive_part()
}

pub fn is_fine(p: &GroupPolytope) -> bool {
    p.is_fine()
}

pub fn label_i(p: &GroupPolytope) -> Result<Label> {
    p.label()
}
