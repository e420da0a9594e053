use discdeg_core::character::{degrees_from_xi, xi_closed, xi_oracle_stabilized};
use discdeg_core::formulas::closed_report;
use discdeg_core::{DegreeReport, Profile, Verdict};
use serde::Serialize;

use crate::Failure;

/// Largest `k = c + N - 1` for which `compute` runs the lattice oracle.
pub const ORACLE_MAX_K: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputeRequest {
    pub ambient_dim: usize,
    pub degrees: Vec<u32>,
    pub characteristic: u64,
    pub cross_check: bool,
}

/// `null` means the check was not run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub xi_closed_agrees: Option<bool>,
    pub oracle_agrees: Option<bool>,
}

/// Integers are decimal strings so that consumers never overflow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComputeReport {
    #[serde(rename = "N")]
    pub ambient_dim: String,
    pub c: String,
    pub degrees: Vec<String>,
    pub p: String,
    pub mu: String,
    pub defective: bool,
    pub deg: String,
    pub deg_i: Vec<String>,
    pub deg_var: String,
    pub mod_p_verdict: Verdict,
    pub cross_check: CrossCheck,
}

impl ComputeReport {
    /// `false` if any cross-check that ran disagreed.
    pub fn passed(&self) -> bool {
        self.cross_check.xi_closed_agrees != Some(false)
            && self.cross_check.oracle_agrees != Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let check = |flag: Option<bool>| match flag {
            Some(true) => "agrees",
            Some(false) => "DISAGREES",
            None => "skipped",
        };
        let mut rows: Vec<(String, String)> = vec![
            ("N".into(), self.ambient_dim.clone()),
            ("c".into(), self.c.clone()),
            ("degrees".into(), self.degrees.join(",")),
            ("p".into(), self.p.clone()),
            ("mu".into(), self.mu.clone()),
            ("defective".into(), self.defective.to_string()),
            ("deg".into(), self.deg.clone()),
        ];
        for (i, d) in self.deg_i.iter().enumerate() {
            rows.push((format!("deg_{}", i + 1), d.clone()));
        }
        rows.push(("deg_var".into(), self.deg_var.clone()));
        rows.push(("mod_p_verdict".into(), self.mod_p_verdict.as_str().into()));
        rows.push((
            "xi_closed".into(),
            check(self.cross_check.xi_closed_agrees).into(),
        ));
        rows.push((
            "lattice_oracle".into(),
            check(self.cross_check.oracle_agrees).into(),
        ));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

fn agrees(closed: &DegreeReport, other: discdeg_core::Result<DegreeReport>) -> bool {
    other.map(|r| &r == closed).unwrap_or(false)
}

pub fn run_compute(req: &ComputeRequest) -> Result<ComputeReport, Failure> {
    let profile = Profile::new(req.ambient_dim, req.degrees.clone(), req.characteristic)?;
    let closed = closed_report(&profile)?;
    let cross_check = if req.cross_check {
        let xi = xi_closed(&profile).and_then(|xi| degrees_from_xi(&xi, &profile));
        let oracle = (profile.k() <= ORACLE_MAX_K).then(|| {
            let report =
                xi_oracle_stabilized(&profile).and_then(|(xi, _)| degrees_from_xi(&xi, &profile));
            agrees(&closed, report)
        });
        CrossCheck {
            xi_closed_agrees: Some(agrees(&closed, xi)),
            oracle_agrees: oracle,
        }
    } else {
        CrossCheck {
            xi_closed_agrees: None,
            oracle_agrees: None,
        }
    };
    Ok(ComputeReport {
        ambient_dim: profile.ambient_dim().to_string(),
        c: profile.codim().to_string(),
        degrees: profile.degrees().iter().map(u32::to_string).collect(),
        p: profile.characteristic().to_string(),
        mu: closed.mu.to_string(),
        defective: closed.defective,
        deg: closed.deg.to_string(),
        deg_i: closed.deg_i.iter().map(ToString::to_string).collect(),
        deg_var: closed.deg_var.to_string(),
        mod_p_verdict: closed.mod_p_verdict,
        cross_check,
    })
}
