use discdeg_core::character::{
    all_components_even, degrees_from_xi, xi_closed, xi_oracle_stabilized,
};
use discdeg_core::formulas::{
    boole_degrees, closed_report, codim_two_degrees, equal_degrees, mu, raw_deg_i, raw_deg_var,
    resultant_degrees,
};
use discdeg_core::oracle_algebraic::{
    binary_discriminant, is_perfect_square_mod2, partial_degrees, reduce_mod2, resultant_groups,
    sylvester_resultant, MAX_FORM_DEGREE,
};
use discdeg_core::{DegreeReport, Profile, Verdict};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::Failure;

/// Characteristics every grid profile is checked in.
pub const CHARACTERISTICS: [u64; 3] = [0, 2, 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRequest {
    pub max_k: usize,
    pub max_degree: u32,
    pub algebraic_oracle: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub profile: String,
    pub check: &'static str,
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
}

impl CheckLine {
    fn new(profile: &Profile, check: &'static str, expected: Value, actual: Value) -> Self {
        CheckLine {
            profile: profile.to_string(),
            check,
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("check line serializes")
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub profiles: usize,
    pub lines: Vec<CheckLine>,
}

impl VerifyOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.pass)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn summary(&self) -> String {
        json!({"summary": {
            "profiles": self.profiles,
            "checks": self.lines.len(),
            "failures": self.failures().count(),
        }})
        .to_string()
    }
}

fn s(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn degrees_json(deg: &BigInt, deg_i: &[BigInt], deg_var: &BigInt) -> Value {
    json!({"deg": s(deg), "deg_i": deg_i.iter().map(s).collect::<Vec<_>>(), "deg_var": s(deg_var)})
}

fn report_json(r: &DegreeReport) -> Value {
    let mut v = degrees_json(&r.deg, &r.deg_i, &r.deg_var);
    v["mu"] = json!(r.mu);
    v["defective"] = json!(r.defective);
    v["mod_p_verdict"] = json!(r.mod_p_verdict.as_str());
    v
}

fn outcome_json(r: discdeg_core::Result<DegreeReport>) -> Value {
    match r {
        Ok(r) => report_json(&r),
        Err(e) => json!({"error": e.to_string()}),
    }
}

/// `{deg, (N+1) deg_var}` against `{sum deg_i, sum d_i deg_i}`.
fn relation_line(
    profile: &Profile,
    check: &'static str,
    deg: &BigInt,
    deg_i: &[BigInt],
    deg_var: &BigInt,
) -> CheckLine {
    let weighted: BigInt = deg_i
        .iter()
        .zip(profile.degrees())
        .map(|(x, &d)| x * BigInt::from(d))
        .sum();
    let scaled = deg_var * BigInt::from(profile.ambient_dim() + 1);
    CheckLine::new(
        profile,
        check,
        json!({"deg": s(&deg_i.iter().sum()), "scaled_deg_var": s(&weighted)}),
        json!({"deg": s(deg), "scaled_deg_var": s(&scaled)}),
    )
}

/// The special-form checks that apply to a characteristic-0 profile.
fn special_form_lines(profile: &Profile, closed: &DegreeReport) -> Vec<CheckLine> {
    let n = profile.ambient_dim();
    let d = profile.degrees();
    let c = d.len();
    let actual = degrees_json(&closed.deg, &closed.deg_i, &closed.deg_var);
    let mut out = Vec::new();
    let mut push = |check: &'static str, deg_i: Vec<BigInt>, deg_var: BigInt| {
        let deg: BigInt = deg_i.iter().sum();
        out.push(CheckLine::new(
            profile,
            check,
            degrees_json(&deg, &deg_i, &deg_var),
            actual.clone(),
        ));
    };
    if c == 1 {
        let (deg, deg_var) = boole_degrees(n, d[0]);
        push("hypersurface", vec![deg], deg_var);
    }
    if c == n + 1 {
        let (deg_i, deg_var) = resultant_degrees(d);
        push("resultant", deg_i, deg_var);
    }
    if c > 1 && d.iter().all(|&x| x == d[0]) {
        let (deg_i, deg_var) = equal_degrees(c, n, d[0]);
        push("equal_degrees", vec![deg_i; c], deg_var);
    }
    if c == 2 {
        if let Ok((a, b, v)) = codim_two_degrees(n, d[0], d[1]) {
            push("codim_two", vec![a, b], v);
        }
    }
    out
}

fn algebraic_lines(profile: &Profile, closed: &DegreeReport) -> Vec<CheckLine> {
    let d = profile.degrees();
    let mut out = Vec::new();
    if profile.ambient_dim() != 1 || d.iter().any(|&x| x > MAX_FORM_DEGREE) {
        return out;
    }
    let as_u32 = |x: &BigInt| u32::try_from(x).ok();
    match (d.len(), profile.characteristic()) {
        (2, 0) => {
            let actual = sylvester_resultant(d[0], d[1])
                .and_then(|r| partial_degrees(&r, &resultant_groups(d[0], d[1])))
                .map_or_else(|e| json!({"error": e.to_string()}), |v| json!(v));
            let expected: Vec<Option<u32>> = closed.deg_i.iter().map(as_u32).collect();
            out.push(CheckLine::new(
                profile,
                "sylvester_partial_degrees",
                json!(expected),
                actual,
            ));
        }
        (1, 0) if d[0] >= 2 => {
            let actual = binary_discriminant(d[0]).map_or_else(
                |e| json!({"error": e.to_string()}),
                |p| json!(p.total_degree()),
            );
            out.push(CheckLine::new(
                profile,
                "discriminant_degree",
                json!(as_u32(&closed.deg)),
                actual,
            ));
        }
        (1, 2) if d[0] >= 2 => {
            let actual = binary_discriminant(d[0]).map_or_else(
                |e| json!({"error": e.to_string()}),
                |p| {
                    let nonzero = reduce_mod2(&p).is_ok_and(|r| !r.is_zero());
                    json!({"square_mod_2": is_perfect_square_mod2(&p), "nonzero_mod_2": nonzero})
                },
            );
            let square = closed.mod_p_verdict == Verdict::SquareOfIrreducible;
            out.push(CheckLine::new(
                profile,
                "discriminant_mod_2",
                json!({"square_mod_2": square, "nonzero_mod_2": true}),
                actual,
            ));
        }
        _ => {}
    }
    out
}

/// Every check for one `(N, degrees)` across [`CHARACTERISTICS`].
fn instance_lines(ambient_dim: usize, degrees: &[u32], algebraic: bool) -> Vec<CheckLine> {
    let mut out = Vec::new();
    let base = Profile::new(ambient_dim, degrees.to_vec(), 0).expect("grid profiles are valid");
    let oracle = xi_oracle_stabilized(&base);
    for p in CHARACTERISTICS {
        let profile = base
            .with_characteristic(p)
            .expect("grid characteristics are prime or zero");
        let closed = match closed_report(&profile) {
            Ok(r) => r,
            Err(e) => {
                out.push(CheckLine::new(
                    &profile,
                    "closed_form",
                    json!("ok"),
                    json!({"error": e.to_string()}),
                ));
                continue;
            }
        };
        let expected = report_json(&closed);
        let xi = xi_closed(&profile);
        out.push(CheckLine::new(
            &profile,
            "xi_closed",
            expected.clone(),
            outcome_json(xi.clone().and_then(|xi| degrees_from_xi(&xi, &profile))),
        ));
        let via_oracle = match &oracle {
            Ok((xi, _)) => degrees_from_xi(xi, &profile),
            Err(e) => Err(e.clone()),
        };
        out.push(CheckLine::new(
            &profile,
            "lattice_oracle",
            expected,
            outcome_json(via_oracle),
        ));

        let raw = (0..profile.codim())
            .map(|i| raw_deg_i(&profile, i))
            .collect::<discdeg_core::Result<Vec<_>>>()
            .and_then(|raw_i| Ok((raw_i, raw_deg_var(&profile)?)));
        match raw {
            Ok((raw_i, raw_var)) => {
                let raw_deg: BigInt = raw_i.iter().sum();
                out.push(relation_line(
                    &profile,
                    "relations_raw",
                    &raw_deg,
                    &raw_i,
                    &raw_var,
                ));
            }
            Err(e) => out.push(CheckLine::new(
                &profile,
                "relations_raw",
                json!("ok"),
                json!({"error": e.to_string()}),
            )),
        }
        out.push(relation_line(
            &profile,
            "relations",
            &closed.deg,
            &closed.deg_i,
            &closed.deg_var,
        ));

        if mu(&profile) == 2 {
            let even = xi
                .as_ref()
                .map(all_components_even)
                .map_err(ToString::to_string);
            out.push(CheckLine::new(
                &profile,
                "char2_raw_parity",
                json!({"all_even": true}),
                match even {
                    Ok(flag) => json!({"all_even": flag}),
                    Err(e) => json!({"error": e}),
                },
            ));
        }
        if p == 0 {
            out.extend(special_form_lines(&profile, &closed));
        }
        if algebraic {
            out.extend(algebraic_lines(&profile, &closed));
        }
    }
    out
}

/// `(N, degrees)` with `c + N - 1 <= max_k` and `1 <= d_i <= max_degree`,
/// ordered by `N`, then `c`, then degrees lexicographically.
pub fn grid(max_k: usize, max_degree: u32) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for n in 0..=max_k {
        for c in 1..=(n + 1) {
            if c + n > max_k + 1 {
                break;
            }
            let mut tuple = vec![1u32; c];
            loop {
                out.push((n, tuple.clone()));
                let Some(pos) = tuple.iter().rposition(|&x| x < max_degree) else {
                    break;
                };
                tuple[pos] += 1;
                tuple[pos + 1..].fill(1);
            }
        }
    }
    out
}

pub fn run_verify(req: &VerifyRequest) -> Result<VerifyOutcome, Failure> {
    if req.max_k == 0 || req.max_degree == 0 {
        return Err(Failure::Usage("verify bounds must be at least 1".into()));
    }
    let instances = grid(req.max_k, req.max_degree);
    let lines: Vec<Vec<CheckLine>> = instances
        .par_iter()
        .map(|(n, d)| instance_lines(*n, d, req.algebraic_oracle))
        .collect();
    Ok(VerifyOutcome {
        profiles: instances.len() * CHARACTERISTICS.len(),
        lines: lines.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order_and_bounds() {
        let g = grid(2, 2);
        assert_eq!(
            g,
            vec![
                (0, vec![1]),
                (0, vec![2]),
                (1, vec![1]),
                (1, vec![2]),
                (1, vec![1, 1]),
                (1, vec![1, 2]),
                (1, vec![2, 1]),
                (1, vec![2, 2]),
                (2, vec![1]),
                (2, vec![2]),
            ]
        );
    }

    #[test]
    fn small_battery_passes() {
        let out = run_verify(&VerifyRequest {
            max_k: 2,
            max_degree: 3,
            algebraic_oracle: true,
        })
        .unwrap();
        assert!(out.passed(), "{:?}", out.failures().next());
        assert!(out
            .lines
            .iter()
            .any(|l| l.check == "sylvester_partial_degrees"));
        assert!(out.lines.iter().any(|l| l.check == "discriminant_mod_2"));
        assert!(out.lines.iter().any(|l| l.check == "char2_raw_parity"));
    }

    #[test]
    fn output_is_deterministic() {
        let req = VerifyRequest {
            max_k: 3,
            max_degree: 2,
            algebraic_oracle: false,
        };
        let a: Vec<String> = run_verify(&req)
            .unwrap()
            .lines
            .iter()
            .map(CheckLine::to_json)
            .collect();
        let b: Vec<String> = run_verify(&req)
            .unwrap()
            .lines
            .iter()
            .map(CheckLine::to_json)
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_bounds_are_rejected() {
        let req = VerifyRequest {
            max_k: 0,
            max_degree: 3,
            algebraic_oracle: false,
        };
        assert!(matches!(run_verify(&req), Err(Failure::Usage(_))));
    }
}
