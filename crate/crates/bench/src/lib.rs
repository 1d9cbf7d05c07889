//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use fanopoly_core::{build_polytope, build_root_system, GroupPolytope, RootSystem};

pub fn so4() -> Arc<RootSystem> {
    Arc::new(build_root_system("so4").expect("so4 is built in"))
}

/// Named polytopes of increasing size.
pub fn fixtures() -> Vec<(&'static str, GroupPolytope)> {
    let cases: [(&str, &str, &[&[i64]]); 4] = [
        ("so4-square", "so4", &[&[1, 0]]),
        ("so4-diamond", "so4", &[&[1, 1], &[1, -1]]),
        ("so4-octagon", "so4", &[&[1, 0], &[1, 1], &[1, -1]]),
        ("a2-hexagon", "A2", &[&[1, 0], &[0, 1]]),
    ];
    cases
        .iter()
        .map(|(name, group, normals)| {
            let rs = Arc::new(build_root_system(group).expect("known type"));
            let normals: Vec<Vec<i64>> = normals.iter().map(|u| u.to_vec()).collect();
            (*name, build_polytope(rs, &normals).expect("valid fixture"))
        })
        .collect()
}
