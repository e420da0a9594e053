//! The torus character `Ξ_A` of the discriminant, computed two ways.
//!
//! [`xi_closed`] is the signed face sum
//! `sum_Γ (-1)^{codim Γ} (dim Γ + 1) ∫_Γ u dμ_Γ(u)`.
//!
//! [`xi_lattice_oracle`] is the alternating lattice sum it comes from,
//! `sum_{i>=0} sum_{u at level l+i} (-1)^{i+k+1} C(dim Γ(u) + 1, i) u`,
//! which only touches lattice points and binomial weights. (Collapsing the
//! inner sum over a face with the finite-difference identity gives
//! `(-1)^{codim Γ + 1}` times the face term, hence the extra sign.) The two agree once
//! `l` is large enough; [`xi_oracle_stabilized`] certifies the value by
//! requiring three consecutive levels to agree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, exact_div, rat, rat_to_int, Rat};
use crate::formulas::{mod_p_verdict, mu, DegreeReport};
use crate::polytope::{enumerate_faces, for_each_composition, moment, Profile};

/// First level tried by [`xi_oracle_stabilized`] is `k + 1`; escalation
/// doubles it and gives up past this cap.
pub const ORACLE_LEVEL_CAP: i64 = 64;

/// A character written in the ambient coordinates `(alpha; beta)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterVector {
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
}

impl CharacterVector {
    pub fn zero(profile: &Profile) -> Self {
        CharacterVector {
            alpha: vec![BigInt::zero(); profile.codim()],
            beta: vec![BigInt::zero(); profile.ambient_dim() + 1],
        }
    }

    pub fn from_ints(alpha: &[i64], beta: &[i64]) -> Self {
        CharacterVector {
            alpha: alpha.iter().map(|&a| BigInt::from(a)).collect(),
            beta: beta.iter().map(|&b| BigInt::from(b)).collect(),
        }
    }

    /// `h(Ξ) = sum_i alpha_i`
    pub fn level(&self) -> BigInt {
        self.alpha.iter().sum()
    }

    pub fn components(&self) -> impl Iterator<Item = &BigInt> {
        self.alpha.iter().chain(&self.beta)
    }

    pub fn is_zero(&self) -> bool {
        self.components().all(Zero::is_zero)
    }

    /// Checks `sum_i d_i alpha_i = sum_j beta_j` and that all beta slots agree.
    pub fn check_invariants(&self, profile: &Profile) -> Result<()> {
        if self.alpha.len() != profile.codim() || self.beta.len() != profile.ambient_dim() + 1 {
            return Err(Error::domain(format!(
                "character has the wrong shape for {profile}"
            )));
        }
        let lhs: BigInt = self
            .alpha
            .iter()
            .zip(profile.degrees())
            .map(|(a, &d)| a * BigInt::from(d))
            .sum();
        let rhs: BigInt = self.beta.iter().sum();
        if lhs != rhs {
            return Err(Error::invariant(format!(
                "character {self} of {profile} leaves the lattice: sum d_i alpha_i = {lhs}, sum beta_j = {rhs}"
            )));
        }
        if self.beta.iter().any(|b| *b != self.beta[0]) {
            return Err(Error::invariant(format!(
                "character {self} of {profile} has unequal beta components"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(BigInt::to_string).collect();
        let b: Vec<String> = self.beta.iter().map(BigInt::to_string).collect();
        write!(f, "({}; {})", a.join(","), b.join(","))
    }
}

/// `Ξ_A` as the signed sum of face moments.
///
/// The sum is rational term by term; a non-integer total is reported as an
/// invariant violation.
pub fn xi_closed(profile: &Profile) -> Result<CharacterVector> {
    let width = profile.width();
    let mut acc = vec![Rat::zero(); width];
    for face in enumerate_faces(profile) {
        let weight = rat((face.dim() + 1) as i64);
        let signed = if face.codim(profile) % 2 == 0 {
            weight
        } else {
            -weight
        };
        for (a, m) in acc.iter_mut().zip(moment(&face, profile)) {
            *a += m * &signed;
        }
    }
    let ints = acc
        .iter()
        .map(|q| {
            rat_to_int(q).ok_or_else(|| {
                Error::invariant(format!(
                    "face sum for {profile} has non-integer component {q}"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let c = profile.codim();
    Ok(CharacterVector {
        alpha: ints[..c].to_vec(),
        beta: ints[c..].to_vec(),
    })
}

/// The alternating lattice sum at base level `l0 >= 1`.
///
/// Every lattice point `u` of the cone at level `l0 + i`, `0 <= i <= k + 1`,
/// contributes `(-1)^{i+k+1} C(dim Γ(u) + 1, i) u`. Alpha parts are
/// enumerated one by one; for a fixed alpha part the points are grouped by
/// the support `J` of their beta part, which together with the support of
/// alpha fixes `Γ(u)`. Within a group the beta parts are the positive
/// compositions of `S = sum d_i alpha_i` over `J`: `C(S-1, |J|-1)` points,
/// whose beta coordinates each sum to `C(S, |J|)`.
pub fn xi_lattice_oracle(profile: &Profile, l0: i64) -> Result<CharacterVector> {
    if l0 < 1 {
        return Err(Error::domain(format!(
            "oracle base level must be >= 1, got {l0}"
        )));
    }
    let c = profile.codim();
    let m = profile.ambient_dim() + 1;
    let k = profile.k();
    let degrees = profile.degrees();
    let beta_supports: Vec<Vec<usize>> = (1u64..(1u64 << m))
        .map(|mask| (0..m).filter(|b| mask >> b & 1 == 1).collect())
        .collect();

    let mut xi = CharacterVector::zero(profile);
    for i in 0..=(k + 1) {
        let level = l0 + i as i64;
        let sign_negative = (i + k).is_multiple_of(2);
        for_each_composition(level, c, 0, &mut |alphas| {
            let s: i64 = alphas.iter().zip(degrees).map(|(a, &d)| a * d as i64).sum();
            let alpha_support = alphas.iter().filter(|&&a| a != 0).count();
            for support in &beta_supports {
                let size = support.len() as i64;
                let count = binomial(s - 1, size - 1);
                if count.is_zero() {
                    continue;
                }
                let dim = alpha_support + support.len() - 2;
                let mut weight = binomial(dim as i64 + 1, i as i64);
                if weight.is_zero() {
                    continue;
                }
                if sign_negative {
                    weight = -weight;
                }
                let group = &weight * &count;
                for (acc, &a) in xi.alpha.iter_mut().zip(alphas) {
                    if a != 0 {
                        *acc += &group * a;
                    }
                }
                let beta_each = &weight * binomial(s, size);
                for &j in support {
                    xi.beta[j] += &beta_each;
                }
            }
        });
    }
    Ok(xi)
}

/// Runs [`xi_lattice_oracle`] at `l0, l0+1, l0+2` from `l0 = k + 1` and
/// returns the common value with the `l0` that produced it. Without
/// agreement `l0` doubles, up to [`ORACLE_LEVEL_CAP`].
pub fn xi_oracle_stabilized(profile: &Profile) -> Result<(CharacterVector, i64)> {
    let mut l0 = profile.k() as i64 + 1;
    while l0 <= ORACLE_LEVEL_CAP {
        let a = xi_lattice_oracle(profile, l0)?;
        let b = xi_lattice_oracle(profile, l0 + 1)?;
        if a == b && a == xi_lattice_oracle(profile, l0 + 2)? {
            return Ok((a, l0));
        }
        l0 *= 2;
    }
    Err(Error::invariant(format!(
        "lattice oracle for {profile} did not stabilize below level {ORACLE_LEVEL_CAP}"
    )))
}

/// Reads the degrees off a character: `deg = h(Ξ)`, `deg_i = alpha_i(Ξ)`,
/// `deg_var = beta_j(Ξ)`, each divided by `μ`.
pub fn degrees_from_xi(xi: &CharacterVector, profile: &Profile) -> Result<DegreeReport> {
    xi.check_invariants(profile)?;
    let mu_factor = BigInt::from(mu(profile));
    let what = |name: &str| format!("μ = {mu_factor} dividing {name} for {profile}");
    let deg_i = xi
        .alpha
        .iter()
        .enumerate()
        .map(|(i, a)| exact_div(a, &mu_factor, &what(&format!("deg_{}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let deg = exact_div(&xi.level(), &mu_factor, &what("deg"))?;
    let deg_var = exact_div(&xi.beta[0], &mu_factor, &what("deg_var"))?;
    let defective = deg.is_zero() && deg_var.is_zero() && deg_i.iter().all(Zero::is_zero);
    Ok(DegreeReport {
        deg,
        deg_i,
        deg_var,
        mu: mu(profile),
        defective,
        mod_p_verdict: mod_p_verdict(profile, defective),
    })
}

/// `true` when every component of `xi` is divisible by two.
pub fn all_components_even(xi: &CharacterVector) -> bool {
    let two = BigInt::one() + BigInt::one();
    xi.components().all(|x| (x % &two).is_zero())
}
