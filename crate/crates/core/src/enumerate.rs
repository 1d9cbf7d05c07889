//! Enumeration of all rank-two group polytopes below a label cutoff, with a
//! Kähler-Einstein verdict for each.
//!
//! Candidates are the primitive dominant lattice vectors `u` with
//! `0 < rho(u) <= p_max`. Every nonempty subset is tried as a set of outer
//! normals; subsets that give an unbounded polytope or carry a normal that
//! supports no facet are dropped. Since normals live in the closed chamber and
//! redundancy is rejected, each polytope is reached from exactly one subset.

use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{FanoError, Result};
use crate::linalg;
use crate::polytope::{build_polytope, GroupPolytope, Label};
use crate::rational::{self, rat, Rat, RatVec};
use crate::rootsys::{ChamberPosition, RootSystem};
use crate::stability::{ke_verdict, Status, Verdict};

/// Subset enumeration is exponential; refuse beyond this many candidates.
pub const MAX_CANDIDATES: usize = 24;

fn check_scope(rs: &RootSystem) -> Result<()> {
    if rs.rank() != 2 {
        return Err(FanoError::UnsupportedRank(rs.rank()));
    }
    if !rs.is_semisimple() {
        return Err(FanoError::NotSemisimple(rs.label().to_string()));
    }
    Ok(())
}

/// Primitive `u` in the closed dominant chamber with `0 < rho(u) <= p_max`,
/// ordered by `(rho(u), u)`.
pub fn candidate_normals(rs: &RootSystem, p_max: &Rat) -> Result<Vec<Vec<i64>>> {
    check_scope(rs)?;
    if p_max.is_negative() {
        return Err(FanoError::InvalidArgument("rho cutoff must be nonnegative".into()));
    }
    // Each simple root value alpha_i(u) is a nonnegative integer bounded by 2 rho(u).
    let bound = (rat(2) * p_max).floor().to_integer().to_i64().ok_or(FanoError::Overflow)?;
    let roots_inv = linalg::inverse(&rs.simple_roots().to_vec())?;
    let mut out: Vec<(Rat, Vec<i64>)> = Vec::new();
    for a0 in 0..=bound {
        for a1 in 0..=bound {
            if a0 == 0 && a1 == 0 {
                continue;
            }
            let u = linalg::mat_vec(&roots_inv, &[rat(a0), rat(a1)]);
            if u.iter().any(|x| !x.is_integer()) {
                continue;
            }
            let u: Vec<i64> =
                u.iter().map(|x| x.to_integer().to_i64().ok_or(FanoError::Overflow)).collect::<Result<_>>()?;
            if !rational::is_primitive(&u) || rs.coweight_chamber_position(&u) == ChamberPosition::Outside {
                continue;
            }
            let rho = rs.rho_pairing_int(&u);
            if rho.is_positive() && rho <= *p_max {
                check_coefficient_box(rs, &u, &rho)?;
                out.push((rho, u));
            }
        }
    }
    out.sort();
    Ok(out.into_iter().map(|(_, u)| u).collect())
}

/// `u = sum c_j alpha_j` (through the inner product) has `c_j <= 4 rho(u) / |alpha_j|^2`.
fn check_coefficient_box(rs: &RootSystem, u: &[i64], rho: &Rat) -> Result<()> {
    let u: RatVec = u.iter().map(|&x| rat(x)).collect();
    let y = linalg::solve(rs.gram(), &u)?;
    let (c, center) = rs.root_decomposition(&y)?;
    if !rational::is_zero_vec(&center) {
        return Err(FanoError::Internal("dominant coweight has a central part".into()));
    }
    for (cj, a) in c.iter().zip(rs.simple_roots()) {
        if *cj > rat(4) * rho / rs.norm_sq(a) {
            return Err(FanoError::Internal(format!("coefficient bound fails for {u:?}")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ClassifiedPolytope {
    pub polytope: GroupPolytope,
    /// `None` when every outer normal pairs to zero with `rho` (torus factors only).
    pub label: Option<Label>,
    pub fine: bool,
    pub verdict: Verdict,
}

impl ClassifiedPolytope {
    pub fn outer_normals(&self) -> Vec<Vec<i64>> {
        self.polytope.outer_normals()
    }

    pub fn evaluate(polytope: GroupPolytope) -> Result<ClassifiedPolytope> {
        let label = match polytope.label() {
            Ok(l) => Some(l),
            Err(FanoError::LabelUndefined) => None,
            Err(e) => return Err(e),
        };
        let fine = polytope.is_fine();
        let verdict = ke_verdict(&polytope)?;
        Ok(ClassifiedPolytope { polytope, label, fine, verdict })
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub group: String,
    /// Cutoff in rho-units.
    pub p_max: Rat,
    pub candidates: Vec<Vec<i64>>,
    pub subsets_considered: u64,
    /// Sorted by outer normal set.
    pub polytopes: Vec<ClassifiedPolytope>,
}

impl ClassificationReport {
    /// Cutoff in I-units.
    pub fn label_max(&self) -> Rat {
        rat(2) * &self.p_max
    }

    pub fn ke_list(&self) -> Vec<&ClassifiedPolytope> {
        self.polytopes.iter().filter(|p| p.verdict.status == Status::Ke).collect()
    }

    pub fn count(&self, status: Status) -> usize {
        self.polytopes.iter().filter(|p| p.verdict.status == status).count()
    }
}

fn try_subset(rs: &Arc<RootSystem>, candidates: &[Vec<i64>], mask: u64) -> Result<Option<ClassifiedPolytope>> {
    let normals: Vec<Vec<i64>> =
        candidates.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, u)| u.clone()).collect();
    match build_polytope(rs.clone(), &normals) {
        Ok(p) => ClassifiedPolytope::evaluate(p).map(Some),
        Err(FanoError::Unbounded | FanoError::RedundantNormal(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Classify every polytope whose outer normals have `rho(u) <= p_max`.
///
/// Runs on the current rayon pool; the result does not depend on its size.
pub fn classify(rs: Arc<RootSystem>, p_max: &Rat) -> Result<ClassificationReport> {
    let candidates = candidate_normals(&rs, p_max)?;
    if candidates.len() > MAX_CANDIDATES {
        return Err(FanoError::TooManyCandidates(candidates.len()));
    }
    let total: u64 = (1u64 << candidates.len()) - 1;
    let found: Vec<Option<ClassifiedPolytope>> =
        (1..=total).into_par_iter().map(|mask| try_subset(&rs, &candidates, mask)).collect::<Result<_>>()?;
    let mut polytopes: Vec<ClassifiedPolytope> = found.into_iter().flatten().collect();
    polytopes.sort_by_key(|p| p.outer_normals());
    let label_max = rat(2) * p_max;
    for p in &polytopes {
        match &p.label {
            Some(l) if l.value <= label_max => {}
            Some(_) => return Err(FanoError::Internal("label exceeds the cutoff".into())),
            None => return Err(FanoError::Internal("undefined label in a semisimple report".into())),
        }
    }
    Ok(ClassificationReport {
        group: rs.label().to_string(),
        p_max: p_max.clone(),
        candidates,
        subsets_considered: total,
        polytopes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::rootsys::build_root_system;

    fn so4() -> Arc<RootSystem> {
        Arc::new(build_root_system("so4").unwrap())
    }

    #[test]
    fn so4_candidates() {
        let c = candidate_normals(&so4(), &rat(3)).unwrap();
        assert_eq!(
            c,
            vec![
                vec![1, -1],
                vec![1, 0],
                vec![1, 1],
                vec![2, -1],
                vec![2, 1],
                vec![3, -2],
                vec![3, -1],
                vec![3, 1],
                vec![3, 2]
            ]
        );
        assert_eq!(candidate_normals(&so4(), &rat(1)).unwrap(), vec![vec![1, -1], vec![1, 0], vec![1, 1]]);
        assert!(candidate_normals(&so4(), &rat(0)).unwrap().is_empty());
        assert_eq!(candidate_normals(&so4(), &ratio(3, 2)).unwrap().len(), 3);
    }

    #[test]
    fn other_rank_two_candidates_are_dominant() {
        for label in ["A2", "B2", "G2"] {
            let rs = build_root_system(label).unwrap();
            let c = candidate_normals(&rs, &rat(6)).unwrap();
            assert!(!c.is_empty());
            for u in &c {
                assert_ne!(rs.coweight_chamber_position(u), ChamberPosition::Outside);
                assert!(rs.rho_pairing_int(u) <= rat(6));
            }
        }
    }

    #[test]
    fn scope_errors() {
        let t2 = Arc::new(build_root_system("T2").unwrap());
        assert!(matches!(classify(t2, &rat(1)), Err(FanoError::NotSemisimple(_))));
        let a3 = Arc::new(build_root_system("A3").unwrap());
        assert!(matches!(classify(a3, &rat(1)), Err(FanoError::UnsupportedRank(3))));
        let a1t1 = Arc::new(build_root_system("A1xT1").unwrap());
        assert!(matches!(classify(a1t1, &rat(1)), Err(FanoError::NotSemisimple(_))));
        assert!(candidate_normals(&so4(), &rat(-1)).is_err());
    }

    #[test]
    fn so4_small_cutoff() {
        let report = classify(so4(), &rat(1)).unwrap();
        assert_eq!(report.subsets_considered, 7);
        let ke: Vec<Vec<Vec<i64>>> = report.ke_list().iter().map(|p| p.outer_normals()).collect();
        assert!(ke.contains(&vec![vec![1, 0]]));
        assert!(ke.contains(&vec![vec![1, -1], vec![1, 1]]));
        assert!(report.polytopes.iter().all(|p| p.fine));
    }
}
