//! JSON input and JSONL output formats.
//!
//! Rationals are written as canonical strings `"p"` or `"p/q"` (lowest
//! terms, positive denominator). Fields ending in `_approx` are decimal
//! conveniences and never used as input.

use serde::{Deserialize, Serialize};

use crate::bound::OmegaInterval;
use crate::enumerate::{ClassificationReport, ClassifiedPolytope};
use crate::error::{FanoError, Result};
use crate::linalg::Matrix;
use crate::measure::{McEstimate, MomentResult};
use crate::polytope::GroupPolytope;
use crate::rational::{fmt_rat, fmt_vec, to_f64, vec_to_f64, Rat, RatVec};
use crate::rootsys::RootSystem;
use crate::stability::{Direction, Status, Verdict};

/// A polytope as given on input: lambdas are always derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub group: String,
    pub outer_normals: Vec<Vec<i64>>,
}

/// Read polytope specs from either a single JSON document or JSONL.
///
/// Lines carrying a `summary` key (as written by `classify`) are skipped, and
/// fields other than `group` and `outer_normals` are ignored.
pub fn parse_polytope_specs(text: &str) -> Result<Vec<PolytopeFile>> {
    let parse_value = |v: serde_json::Value| -> Result<Option<PolytopeFile>> {
        if v.get("summary").is_some() {
            return Ok(None);
        }
        serde_json::from_value(v).map(Some).map_err(|e| FanoError::Parse(e.to_string()))
    };
    if let Ok(v) = serde_json::from_str::<serde_json::Value>(text) {
        return Ok(parse_value(v)?.into_iter().collect());
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let v: serde_json::Value =
            serde_json::from_str(line).map_err(|e| FanoError::Parse(format!("line {}: {e}", i + 1)))?;
        out.extend(parse_value(v)?);
    }
    if out.is_empty() {
        return Err(FanoError::Parse("no polytope found".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateRecord {
    Linear { xi: Vec<String>, futaki: String },
    FundamentalWeight { index: usize, futaki: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolytopeRecord {
    pub group: String,
    pub outer_normals: Vec<Vec<i64>>,
    pub lambdas: Vec<String>,
    #[serde(rename = "I")]
    pub label: Option<String>,
    pub t0: Option<String>,
    pub fine: bool,
    pub vertices: Vec<Vec<String>>,
    pub positive_vertices: Vec<Vec<String>>,
    pub status: Status,
    pub c: Vec<String>,
    pub center: Vec<String>,
    pub barycenter: Vec<String>,
    pub barycenter_approx: Vec<f64>,
    pub vol_pi: String,
    pub certificate: Option<CertificateRecord>,
}

fn fmt_points(points: &[RatVec]) -> Vec<Vec<String>> {
    points.iter().map(|v| fmt_vec(v)).collect()
}

fn certificate_record(v: &Verdict) -> Option<CertificateRecord> {
    v.certificate.as_ref().map(|c| match &c.direction {
        Direction::Linear(xi) => CertificateRecord::Linear { xi: fmt_vec(xi), futaki: fmt_rat(&c.futaki) },
        Direction::FundamentalWeight(i) => {
            CertificateRecord::FundamentalWeight { index: *i, futaki: fmt_rat(&c.futaki) }
        }
    })
}

impl PolytopeRecord {
    pub fn new(entry: &ClassifiedPolytope) -> PolytopeRecord {
        let p = &entry.polytope;
        let v = &entry.verdict;
        PolytopeRecord {
            group: p.root_system().label().to_string(),
            outer_normals: p.outer_normals(),
            lambdas: p.outer_facets().iter().map(|f| fmt_rat(&f.lambda)).collect(),
            label: entry.label.as_ref().map(|l| fmt_rat(&l.value)),
            t0: entry.label.as_ref().map(|l| fmt_rat(&l.t0)),
            fine: entry.fine,
            vertices: fmt_points(p.vertices()),
            positive_vertices: fmt_points(p.positive_polytope().vertices()),
            status: v.status,
            c: fmt_vec(&v.c),
            center: fmt_vec(&v.center_component),
            barycenter: fmt_vec(&v.moments.barycenter),
            barycenter_approx: vec_to_f64(&v.moments.barycenter),
            vol_pi: fmt_rat(&v.moments.vol_pi),
            certificate: certificate_record(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub group: String,
    pub rho_max: String,
    #[serde(rename = "I_max")]
    pub label_max: String,
    pub candidates: Vec<Vec<i64>>,
    pub subsets_considered: u64,
    pub valid: usize,
    pub ke: Vec<Vec<Vec<i64>>>,
    pub unstable: usize,
    pub boundary: usize,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

impl Summary {
    pub fn new(report: &ClassificationReport) -> Summary {
        Summary {
            group: report.group.clone(),
            rho_max: fmt_rat(&report.p_max),
            label_max: fmt_rat(&report.label_max()),
            candidates: report.candidates.clone(),
            subsets_considered: report.subsets_considered,
            valid: report.polytopes.len(),
            ke: report.ke_list().iter().map(|p| p.outer_normals()).collect(),
            unstable: report.count(Status::Unstable),
            boundary: report.count(Status::Boundary),
        }
    }
}

/// One record per polytope followed by the summary line, each newline-terminated.
pub fn report_jsonl(report: &ClassificationReport) -> Result<String> {
    let mut out = String::new();
    for entry in &report.polytopes {
        out.push_str(&to_line(&PolytopeRecord::new(entry))?);
    }
    out.push_str(&to_line(&SummaryLine { summary: &Summary::new(report) })?);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McRecord {
    pub samples: u64,
    pub seed: u64,
    pub accepted: u64,
    pub vol_pi_approx: f64,
    pub vol_pi_se: f64,
    pub barycenter_approx: Vec<f64>,
    pub barycenter_se: Vec<f64>,
    pub agrees: bool,
}

impl McRecord {
    pub fn new(est: &McEstimate, seed: u64, exact: &MomentResult) -> McRecord {
        McRecord {
            samples: est.samples,
            seed,
            accepted: est.accepted,
            vol_pi_approx: est.vol_pi,
            vol_pi_se: est.vol_pi_se,
            barycenter_approx: est.barycenter.clone(),
            barycenter_se: est.barycenter_se.clone(),
            agrees: est.agrees_with(exact, 3.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentRecord {
    pub group: String,
    pub outer_normals: Vec<Vec<i64>>,
    pub vol_pi: String,
    pub vol_pi_approx: f64,
    pub barycenter: Vec<String>,
    pub barycenter_approx: Vec<f64>,
    pub simplex_count: usize,
    pub monte_carlo: Option<McRecord>,
}

impl MomentRecord {
    pub fn new(p: &GroupPolytope, m: &MomentResult, mc: Option<McRecord>) -> MomentRecord {
        MomentRecord {
            group: p.root_system().label().to_string(),
            outer_normals: p.outer_normals(),
            vol_pi: fmt_rat(&m.vol_pi),
            vol_pi_approx: to_f64(&m.vol_pi),
            barycenter: fmt_vec(&m.barycenter),
            barycenter_approx: vec_to_f64(&m.barycenter),
            simplex_count: m.simplex_count,
            monte_carlo: mc,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OmegaRecord {
    pub n: u32,
    pub tol: String,
    #[serde(rename = "I_lo")]
    pub lo: String,
    #[serde(rename = "I_hi")]
    pub hi: String,
    #[serde(rename = "I_approx")]
    pub approx: f64,
    pub rho_lo: String,
    pub rho_hi: String,
    pub rho_approx: f64,
}

impl OmegaRecord {
    pub fn new(iv: &OmegaInterval, tol: &Rat) -> OmegaRecord {
        OmegaRecord {
            n: iv.n,
            tol: fmt_rat(tol),
            lo: fmt_rat(&iv.lo),
            hi: fmt_rat(&iv.hi),
            approx: iv.approx(),
            rho_lo: fmt_rat(&iv.lo_rho()),
            rho_hi: fmt_rat(&iv.hi_rho()),
            rho_approx: iv.approx_rho(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSystemRecord {
    pub label: String,
    pub rank: usize,
    pub semisimple_rank: usize,
    pub simple_roots: Vec<Vec<String>>,
    pub positive_roots: Vec<Vec<String>>,
    pub fundamental_weights: Vec<Vec<String>>,
    pub gram: Vec<Vec<String>>,
    pub two_rho: Vec<String>,
    pub cartan: Vec<Vec<String>>,
    pub inverse_cartan: Vec<Vec<String>>,
    pub weyl_order: usize,
}

impl RootSystemRecord {
    pub fn new(rs: &RootSystem) -> Result<RootSystemRecord> {
        let fmt_matrix = |m: &Matrix| fmt_points(m);
        Ok(RootSystemRecord {
            label: rs.label().to_string(),
            rank: rs.rank(),
            semisimple_rank: rs.semisimple_rank(),
            simple_roots: fmt_points(rs.simple_roots()),
            positive_roots: fmt_points(rs.positive_roots()),
            fundamental_weights: fmt_points(rs.fundamental_weights()),
            gram: fmt_matrix(rs.gram()),
            two_rho: fmt_vec(rs.two_rho()),
            cartan: fmt_matrix(&rs.cartan_matrix()),
            inverse_cartan: fmt_matrix(&rs.inverse_cartan()?),
            weyl_order: rs.weyl_elements()?.len(),
        })
    }
}

/// Serialize to one compact JSON line ending in `\n`.
pub fn to_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value).map_err(|e| FanoError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::ClassifiedPolytope;
    use crate::polytope::build_polytope;
    use crate::rootsys::build_root_system;
    use std::sync::Arc;

    #[test]
    fn specs_from_json_and_jsonl() {
        let one = parse_polytope_specs(r#"{"group": "so4", "outer_normals": [[1, 0]]}"#).unwrap();
        assert_eq!(one, vec![PolytopeFile { group: "so4".into(), outer_normals: vec![vec![1, 0]] }]);
        let many = "{\"group\":\"so4\",\"outer_normals\":[[1,0]],\"status\":\"KE\"}\n\n\
                    {\"group\":\"so4\",\"outer_normals\":[[1,1],[1,-1]]}\n\
                    {\"summary\":{\"valid\":2}}\n";
        assert_eq!(parse_polytope_specs(many).unwrap().len(), 2);
        assert!(parse_polytope_specs("{\"group\": \"so4\"}").is_err());
        assert!(parse_polytope_specs("not json").is_err());
        assert!(parse_polytope_specs("").is_err());
    }

    #[test]
    fn case_record_fields() {
        let rs = Arc::new(build_root_system("so4").unwrap());
        let p = build_polytope(rs, &[vec![1, 0]]).unwrap();
        let rec = PolytopeRecord::new(&ClassifiedPolytope::evaluate(p).unwrap());
        let line = to_line(&rec).unwrap();
        assert!(line.starts_with(r#"{"group":"so4","outer_normals":[[1,0]],"lambdas":["3"],"I":"2","t0":"3""#));
        assert!(line.contains(r#""status":"KE""#));
        assert!(line.contains(r#""barycenter":["18/7","0"]"#));
        assert!(line.contains(r#""vol_pi":"648/5""#));
        assert!(line.ends_with("\"certificate\":null}\n"));
    }
}
