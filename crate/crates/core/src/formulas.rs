//! Closed-form degrees of the discriminant.
//!
//! With `e_i = d_i - 1` and `μ` the inseparability factor,
//!
//! ```text
//! deg_i   = (1/μ) prod_{j != i} d_j  sum_l (e_i^{N+1} - e_l^{N+1}) / ((e_i - e_l) prod_{l' != l} (d_l - d_l'))
//! deg_var = (1/μ) prod_j d_j          sum_l e_l^N / prod_{l' != l} (d_l - d_l')
//! ```
//!
//! Expanding the quotient `(e_i^{N+1} - e_l^{N+1}) / (e_i - e_l)` as
//! `sum_a e_i^a e_l^{N-a}` and each divided difference of a monomial as a
//! complete homogeneous symmetric polynomial gives
//!
//! ```text
//! deg_i   = (1/μ) prod_{j != i} d_j  sum_{a=0}^{N} e_i^a h_{N-a-c+1}(e)
//! deg_var = (1/μ) prod_j d_j          h_{N-c+1}(e)
//! ```
//!
//! which is what is evaluated here. It is a polynomial identity, so equal
//! degrees (and the diagonal term `l = i`, read as `(N+1) e_i^N`) need no
//! special handling.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, exact_div, hk, hk_poly, int_to_rat, rat, rat_to_int, MPoly, Rat};
use crate::polytope::{is_prime, Profile};

/// What reducing the integral discriminant modulo `p` gives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Irreducible,
    SquareOfIrreducible,
    /// The discriminant is the constant 1 (defective case).
    Unit,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Irreducible => "irreducible",
            Verdict::SquareOfIrreducible => "square_of_irreducible",
            Verdict::Unit => "unit",
        }
    }
}

/// The homogeneity degrees of the discriminant for one profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub deg: BigInt,
    pub deg_i: Vec<BigInt>,
    pub deg_var: BigInt,
    pub mu: u32,
    pub defective: bool,
    pub mod_p_verdict: Verdict,
}

impl DegreeReport {
    /// `deg = sum_i deg_i` and `(N+1) deg_var = sum_i d_i deg_i`.
    pub fn check_relations(&self, profile: &Profile) -> Result<()> {
        check_relations(&self.deg, &self.deg_i, &self.deg_var, profile)
    }

    /// The report with `μ`, defectivity and verdict stripped, for comparing
    /// the numbers produced by different engines.
    pub fn degrees(&self) -> (&BigInt, &[BigInt], &BigInt) {
        (&self.deg, &self.deg_i, &self.deg_var)
    }
}

pub(crate) fn check_relations(
    deg: &BigInt,
    deg_i: &[BigInt],
    deg_var: &BigInt,
    profile: &Profile,
) -> Result<()> {
    let total: BigInt = deg_i.iter().sum();
    if &total != deg {
        return Err(Error::invariant(format!(
            "{profile}: sum of deg_i is {total} but deg is {deg}"
        )));
    }
    let weighted: BigInt = deg_i
        .iter()
        .zip(profile.degrees())
        .map(|(x, &d)| x * BigInt::from(d))
        .sum();
    let lhs = deg_var * BigInt::from(profile.ambient_dim() + 1);
    if lhs != weighted {
        return Err(Error::invariant(format!(
            "{profile}: (N+1) deg_var = {lhs} but sum d_i deg_i = {weighted}"
        )));
    }
    Ok(())
}

/// `μ = 2` in characteristic 2 when `n = N - c` is even, else 1.
pub fn mu(profile: &Profile) -> u32 {
    if profile.characteristic() == 2 && profile.dimension().rem_euclid(2) == 0 {
        2
    } else {
        1
    }
}

/// The dual variety fails to be a hypersurface exactly for linear forms
/// that are not a full square system: all `d_i = 1` and `c < N + 1`.
pub fn is_defective(profile: &Profile) -> bool {
    profile.degrees().iter().all(|&d| d == 1) && profile.codim() < profile.ambient_dim() + 1
}

/// Reduction of the discriminant modulo the prime `p`.
pub fn mod_p_report(profile: &Profile, p: u64) -> Result<Verdict> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not a prime")));
    }
    Ok(if is_defective(profile) {
        Verdict::Unit
    } else if p == 2 && profile.dimension().rem_euclid(2) == 0 {
        Verdict::SquareOfIrreducible
    } else {
        Verdict::Irreducible
    })
}

/// Verdict for the profile's own characteristic. In characteristic 0 the
/// discriminant is irreducible (or 1).
pub(crate) fn mod_p_verdict(profile: &Profile, defective: bool) -> Verdict {
    match profile.characteristic() {
        _ if defective => Verdict::Unit,
        0 => Verdict::Irreducible,
        p => mod_p_report(profile, p as u64).expect("profile characteristic is prime"),
    }
}

fn e_values(profile: &Profile) -> Vec<Rat> {
    profile
        .reduced_degrees()
        .iter()
        .map(|&e| rat(e as i64))
        .collect()
}

fn product_except(profile: &Profile, skip: Option<usize>) -> BigInt {
    profile
        .degrees()
        .iter()
        .enumerate()
        .filter(|(j, _)| Some(*j) != skip)
        .map(|(_, &d)| BigInt::from(d))
        .product()
}

fn as_integer(q: Rat, what: &str) -> Result<BigInt> {
    rat_to_int(&q).ok_or_else(|| Error::invariant(format!("{what} evaluated to non-integer {q}")))
}

/// `deg_i` before division by `μ`.
pub fn raw_deg_i(profile: &Profile, i: usize) -> Result<BigInt> {
    if i >= profile.codim() {
        return Err(Error::domain(format!(
            "form index {i} out of range for {profile}"
        )));
    }
    let e = e_values(profile);
    let n = profile.ambient_dim() as i64;
    let c = profile.codim() as i64;
    let mut sum = Rat::zero();
    let mut power = Rat::one();
    for a in 0..=n {
        sum += &power * hk(n - a - c + 1, &e)?;
        power *= &e[i];
    }
    Ok(as_integer(sum, "divided difference")? * product_except(profile, Some(i)))
}

/// `deg_var` before division by `μ`.
pub fn raw_deg_var(profile: &Profile) -> Result<BigInt> {
    let e = e_values(profile);
    let n = profile.ambient_dim() as i64;
    let c = profile.codim() as i64;
    let h = as_integer(hk(n - c + 1, &e)?, "divided difference")?;
    Ok(h * product_except(profile, None))
}

fn divide_by_mu(raw: BigInt, profile: &Profile, name: &str) -> Result<BigInt> {
    exact_div(
        &raw,
        &BigInt::from(mu(profile)),
        &format!("{name} for {profile}"),
    )
}

/// `deg_i` for the 0-based form index `i`.
pub fn deg_i_closed(profile: &Profile, i: usize) -> Result<BigInt> {
    if is_defective(profile) {
        return Ok(BigInt::zero());
    }
    divide_by_mu(raw_deg_i(profile, i)?, profile, &format!("deg_{}", i + 1))
}

pub fn deg_var_closed(profile: &Profile) -> Result<BigInt> {
    if is_defective(profile) {
        return Ok(BigInt::zero());
    }
    divide_by_mu(raw_deg_var(profile)?, profile, "deg_var")
}

/// Full closed-form report for a profile.
pub fn closed_report(profile: &Profile) -> Result<DegreeReport> {
    let defective = is_defective(profile);
    let deg_i = (0..profile.codim())
        .map(|i| deg_i_closed(profile, i))
        .collect::<Result<Vec<_>>>()?;
    let report = DegreeReport {
        deg: deg_i.iter().sum(),
        deg_var: deg_var_closed(profile)?,
        deg_i,
        mu: mu(profile),
        defective,
        mod_p_verdict: mod_p_verdict(profile, defective),
    };
    report.check_relations(profile)?;
    Ok(report)
}

/// The degrees as polynomials in `d1..dc` (with `μ = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicDegrees {
    pub deg_i: Vec<MPoly>,
    pub deg_var: MPoly,
}

impl SymbolicDegrees {
    pub fn variables(c: usize) -> Vec<String> {
        (1..=c).map(|i| format!("d{i}")).collect()
    }
}

pub fn symbolic_degrees(c: usize, ambient_dim: usize) -> Result<SymbolicDegrees> {
    if c == 0 || c > ambient_dim + 1 {
        return Err(Error::InvalidProfile(format!(
            "need 1 <= c <= N+1: c = {c}, N = {ambient_dim}"
        )));
    }
    let vars = SymbolicDegrees::variables(c);
    let one = MPoly::constant(&vars, Rat::one());
    let d: Vec<MPoly> = (0..c).map(|i| MPoly::var(&vars, i)).collect();
    let e: Vec<MPoly> = d.iter().map(|di| di - &one).collect();
    let n = ambient_dim as i64;
    let ci = c as i64;

    let product = |skip: Option<usize>| {
        d.iter()
            .enumerate()
            .filter(|(j, _)| Some(*j) != skip)
            .fold(one.clone(), |acc, (_, dj)| &acc * dj)
    };

    let mut deg_i = Vec::with_capacity(c);
    for i in 0..c {
        let mut sum = MPoly::zero(&vars);
        let mut power = one.clone();
        for a in 0..=n {
            sum = &sum + &(&power * &hk_poly(n - a - ci + 1, &e)?);
            power = &power * &e[i];
        }
        deg_i.push(&product(Some(i)) * &sum);
    }
    let deg_var = &product(None) * &hk_poly(n - ci + 1, &e)?;
    Ok(SymbolicDegrees { deg_i, deg_var })
}

/// `sum_l sum_{i != l} (e_i^{N+1} - e_l^{N+1}) / ((e_i - e_l) prod_{l' != l}(d_l - d_l'))`
/// evaluated literally at distinct sample degrees `d`; it vanishes
/// identically.
pub fn cancellation_identity(c: usize, ambient_dim: usize, sample: &[Rat]) -> Result<Rat> {
    if sample.len() != c {
        return Err(Error::domain(format!(
            "expected {c} sample values, got {}",
            sample.len()
        )));
    }
    for (i, a) in sample.iter().enumerate() {
        if sample[..i].contains(a) {
            return Err(Error::domain(format!("sample value {a} repeats")));
        }
    }
    let e: Vec<Rat> = sample.iter().map(|d| d - Rat::one()).collect();
    let top = ambient_dim + 1;
    let mut acc = Rat::zero();
    for l in 0..c {
        let denom: Rat = (0..c)
            .filter(|&m| m != l)
            .map(|m| &sample[l] - &sample[m])
            .product();
        for i in (0..c).filter(|&i| i != l) {
            let quotient = (num_traits::pow(e[i].clone(), top)
                - num_traits::pow(e[l].clone(), top))
                / (&e[i] - &e[l]);
            acc += quotient / &denom;
        }
    }
    Ok(acc)
}

/// Hypersurfaces (`c = 1`): `deg = (N+1) e^N`, `deg_var = d e^N`.
pub fn boole_degrees(ambient_dim: usize, d: u32) -> (BigInt, BigInt) {
    let e_pow = num_traits::pow(BigInt::from(d) - 1, ambient_dim);
    (
        BigInt::from(ambient_dim + 1) * &e_pow,
        BigInt::from(d) * e_pow,
    )
}

/// Resultants (`c = N + 1`): `deg_i = prod_{j != i} d_j`, `deg_var = prod d_j`.
pub fn resultant_degrees(degrees: &[u32]) -> (Vec<BigInt>, BigInt) {
    let all: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    let deg_i = (0..degrees.len())
        .map(|i| {
            degrees
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &d)| BigInt::from(d))
                .product()
        })
        .collect();
    (deg_i, all)
}

/// Equal degrees `d_1 = ... = d_c = d`: the common `deg_i` is
/// `C(N+1, c) d^{c-1} e^{N-c+1}` and `deg_var = C(N, c-1) d^c e^{N-c+1}`.
pub fn equal_degrees(c: usize, ambient_dim: usize, d: u32) -> (BigInt, BigInt) {
    let n = ambient_dim as i64;
    let ci = c as i64;
    let d_big = BigInt::from(d);
    let e_pow = num_traits::pow(BigInt::from(d) - 1, ambient_dim + 1 - c);
    let deg_i = binomial(n + 1, ci) * num_traits::pow(d_big.clone(), c - 1) * &e_pow;
    let deg_var = binomial(n, ci - 1) * num_traits::pow(d_big, c) * e_pow;
    (deg_i, deg_var)
}

/// Codimension two:
/// `deg_1 = d_2 sum_{m=0}^{N-1} (m+1) e_1^m e_2^{N-1-m}` (and symmetrically
/// `deg_2`), `deg_var = d_1 d_2 (e_2^N - e_1^N) / (e_2 - e_1)`, the quotient
/// read as `N e^{N-1}` when `e_1 = e_2`.
pub fn codim_two_degrees(ambient_dim: usize, d1: u32, d2: u32) -> Result<(BigInt, BigInt, BigInt)> {
    if ambient_dim == 0 {
        return Err(Error::InvalidProfile("codimension 2 needs N >= 1".into()));
    }
    let n = ambient_dim;
    let (e1, e2) = (BigInt::from(d1) - 1, BigInt::from(d2) - 1);
    let weighted = |x: &BigInt, y: &BigInt| -> BigInt {
        (0..n)
            .map(|m| {
                BigInt::from(m + 1)
                    * num_traits::pow(x.clone(), m)
                    * num_traits::pow(y.clone(), n - 1 - m)
            })
            .sum()
    };
    let deg_1 = BigInt::from(d2) * weighted(&e1, &e2);
    let deg_2 = BigInt::from(d1) * weighted(&e2, &e1);
    let quotient = if e1 == e2 {
        BigInt::from(n) * num_traits::pow(e1.clone(), n - 1)
    } else {
        let num = int_to_rat(&(num_traits::pow(e2.clone(), n) - num_traits::pow(e1.clone(), n)));
        as_integer(num / int_to_rat(&(&e2 - &e1)), "codimension-two quotient")?
    };
    let deg_var = BigInt::from(d1) * BigInt::from(d2) * quotient;
    Ok((deg_1, deg_2, deg_var))
}
