//! Moment polytopes of Q-Fano compactifications of reductive groups and the
//! weighted barycenter test for (singular) Kähler-Einstein metrics.
//!
//! Everything on the decision path is exact rational arithmetic. A typical
//! session builds a [`RootSystem`], a [`GroupPolytope`] from outer facet
//! normals, and asks [`ke_verdict`] for the answer:
//!
//! ```
//! use std::sync::Arc;
//! use fanopoly_core::{build_polytope, build_root_system, ke_verdict, Status};
//!
//! let rs = Arc::new(build_root_system("so4").unwrap());
//! let p = build_polytope(rs, &[vec![1, 0]]).unwrap();
//! let v = ke_verdict(&p).unwrap();
//! assert_eq!(v.status, Status::Ke);
//! assert_eq!(fanopoly_core::rational::fmt_vec(&v.moments.barycenter), ["18/7", "0"]);
//! ```

pub mod bound;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod measure;
pub mod poly;
pub mod polytope;
pub mod rational;
pub mod records;
pub mod rootsys;
pub mod stability;

pub use bound::{average_bracket, excludes_ke, omega_generic, OmegaInterval};
pub use enumerate::{candidate_normals, classify, ClassificationReport, ClassifiedPolytope};
pub use error::{FanoError, Result};
pub use geometry::{Apex, HPolytope, HalfSpace};
pub use measure::{mc_moments, pi_polynomial, weighted_moments, McEstimate, MomentResult};
pub use poly::Polynomial;
pub use polytope::{build_polytope, FacetSpec, GroupPolytope, Label};
pub use rational::{Rat, RatVec};
pub use rootsys::{build_root_system, ChamberPosition, RootSystem};
pub use stability::{futaki, ke_verdict, Certificate, Direction, Status, Verdict};
