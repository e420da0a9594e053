//! The Cayley polytope `Q(c, N, (d_i))` and its faces.
//!
//! Points live in `Z^c x Z^{N+1}` with coordinates `(alpha_1..alpha_c;
//! beta_0..beta_N)`. The character lattice is cut out by
//! `sum_i d_i alpha_i = sum_j beta_j`, the level of a point is
//! `h = sum_i alpha_i`, and `Q` is the level-1 slice of the cone
//! `alpha, beta >= 0`. Faces are indexed by nonempty supports `I` (alpha
//! slots) and `J` (beta slots); the face `Γ_{I,J}` is itself the Cayley
//! polytope `Q(|I|, |J| - 1, (d_i)_{i in I})`.
//!
//! Volumes and moments use the lattice-normalized measure in which the unit
//! simplex has measure 1.
//!
//! Index convention: alpha slots are 0-based here (`I ⊆ {0..c-1}` stands
//! for `{1..c}`); beta slots are 0-based as usual.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, divided_difference_sum, hk_row, int_to_rat, interpolate, interpolate_vector, rat,
    Rat, UPoly,
};

/// Largest characteristic accepted (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// A problem instance: forms of degrees `d_1..d_c` in `N + 1` variables over
/// a field of characteristic `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    ambient_dim: usize,
    degrees: Vec<u32>,
    characteristic: u32,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl Profile {
    pub fn new(ambient_dim: usize, degrees: Vec<u32>, characteristic: u64) -> Result<Self> {
        let c = degrees.len();
        if c == 0 {
            return Err(Error::InvalidProfile(
                "need 1 <= c: the degree list is empty".into(),
            ));
        }
        if c > ambient_dim + 1 {
            return Err(Error::InvalidProfile(format!(
                "need c <= N+1: c = {c}, N = {ambient_dim}"
            )));
        }
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidProfile(format!(
                "need d_i >= 1: d_{} = 0",
                pos + 1
            )));
        }
        if characteristic != 0
            && (characteristic >= MAX_CHARACTERISTIC || !is_prime(characteristic))
        {
            return Err(Error::InvalidProfile(format!(
                "characteristic must be 0 or a prime below 2^31, got {characteristic}"
            )));
        }
        Ok(Profile {
            ambient_dim,
            degrees,
            characteristic: characteristic as u32,
        })
    }

    /// `N`
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// `c`
    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `p` (0 for characteristic zero).
    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    /// `n = N - c`, the dimension of the complete intersection (`-1` for
    /// the resultant case `c = N + 1`).
    pub fn dimension(&self) -> i64 {
        self.ambient_dim as i64 - self.codim() as i64
    }

    /// `k = c + N - 1`, the dimension of `Q`.
    pub fn k(&self) -> usize {
        self.codim() + self.ambient_dim - 1
    }

    /// `e_i = d_i - 1` for every form.
    pub fn reduced_degrees(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| d - 1).collect()
    }

    /// Number of ambient coordinates, `c + N + 1`.
    pub fn width(&self) -> usize {
        self.codim() + self.ambient_dim + 1
    }

    pub fn with_characteristic(&self, p: u64) -> Result<Self> {
        Profile::new(self.ambient_dim, self.degrees.clone(), p)
    }

    /// The same instance with its degree list permuted: `perm[i]` is the old
    /// slot placed at position `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let degrees = perm
            .iter()
            .map(|&i| {
                self.degrees
                    .get(i)
                    .copied()
                    .ok_or_else(|| Error::domain(format!("permutation index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new(self.ambient_dim, degrees, self.characteristic as u64)
    }

    pub fn full_face(&self) -> Face {
        Face {
            alpha_support: (0..self.codim()).collect(),
            beta_support: (0..=self.ambient_dim).collect(),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(
            f,
            "N={} c={} d=({}) p={}",
            self.ambient_dim,
            self.codim(),
            d.join(","),
            self.characteristic
        )
    }
}

/// The face `Γ_{I,J}`: the points of `Q` with `alpha_i = 0` off `I` and
/// `beta_j = 0` off `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    alpha_support: Vec<usize>,
    beta_support: Vec<usize>,
}

impl Face {
    pub fn new(
        profile: &Profile,
        mut alpha_support: Vec<usize>,
        mut beta_support: Vec<usize>,
    ) -> Result<Self> {
        alpha_support.sort_unstable();
        alpha_support.dedup();
        beta_support.sort_unstable();
        beta_support.dedup();
        if alpha_support.is_empty() || beta_support.is_empty() {
            return Err(Error::domain("face supports must be nonempty"));
        }
        if alpha_support.last().is_some_and(|&i| i >= profile.codim()) {
            return Err(Error::domain("alpha support index out of range"));
        }
        if beta_support
            .last()
            .is_some_and(|&j| j > profile.ambient_dim())
        {
            return Err(Error::domain("beta support index out of range"));
        }
        Ok(Face {
            alpha_support,
            beta_support,
        })
    }

    /// `I` (0-based alpha slots).
    pub fn alpha_support(&self) -> &[usize] {
        &self.alpha_support
    }

    /// `J`
    pub fn beta_support(&self) -> &[usize] {
        &self.beta_support
    }

    /// `|I| + |J| - 2`
    pub fn dim(&self) -> usize {
        self.alpha_support.len() + self.beta_support.len() - 2
    }

    pub fn codim(&self, profile: &Profile) -> usize {
        profile.k() - self.dim()
    }

    /// Degrees `(d_i)_{i in I}`.
    pub fn degrees(&self, profile: &Profile) -> Vec<u32> {
        self.alpha_support
            .iter()
            .map(|&i| profile.degrees[i])
            .collect()
    }

    /// The face as a Cayley polytope in its own right,
    /// `Q(|I|, |J| - 1, (d_i)_{i in I})`.
    pub fn as_profile(&self, profile: &Profile) -> Profile {
        Profile {
            ambient_dim: self.beta_support.len() - 1,
            degrees: self.degrees(profile),
            characteristic: profile.characteristic,
        }
    }

    /// The vertices `(e_i; d_i e_j)` for `i in I`, `j in J`.
    pub fn vertices(&self, profile: &Profile) -> Vec<LatticeVector> {
        let mut out = Vec::with_capacity(self.alpha_support.len() * self.beta_support.len());
        for &i in &self.alpha_support {
            for &j in &self.beta_support {
                let mut v = LatticeVector::zero(profile);
                v.alpha[i] = 1;
                v.beta[j] = profile.degrees[i] as i64;
                out.push(v);
            }
        }
        out
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i: Vec<String> = self
            .alpha_support
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        let j: Vec<String> = self.beta_support.iter().map(usize::to_string).collect();
        write!(f, "I={{{}}} J={{{}}}", i.join(","), j.join(","))
    }
}

/// An integer point `(alpha; beta)` of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl LatticeVector {
    pub fn zero(profile: &Profile) -> Self {
        LatticeVector {
            alpha: vec![0; profile.codim()],
            beta: vec![0; profile.ambient_dim() + 1],
        }
    }

    pub fn level(&self) -> i64 {
        self.alpha.iter().sum()
    }

    /// Whether `sum_i d_i alpha_i = sum_j beta_j`.
    pub fn in_lattice(&self, degrees: &[u32]) -> bool {
        let lhs: i64 = self
            .alpha
            .iter()
            .zip(degrees)
            .map(|(a, &d)| a * d as i64)
            .sum();
        lhs == self.beta.iter().sum::<i64>()
    }

    /// Concatenated coordinates `alpha ++ beta`.
    pub fn coords(&self) -> impl Iterator<Item = i64> + '_ {
        self.alpha.iter().chain(&self.beta).copied()
    }
}

/// Every face `Γ_{I,J}`, once each, ordered by the bitmask of `I` then `J`.
pub fn enumerate_faces(profile: &Profile) -> Vec<Face> {
    let c = profile.codim();
    let m = profile.ambient_dim() + 1;
    let subsets = |n: usize| -> Vec<Vec<usize>> {
        (1u64..(1u64 << n))
            .map(|mask| (0..n).filter(|b| mask >> b & 1 == 1).collect())
            .collect()
    };
    let betas = subsets(m);
    let mut faces = Vec::with_capacity(((1usize << c) - 1) * betas.len());
    for alpha_support in subsets(c) {
        for beta_support in &betas {
            faces.push(Face {
                alpha_support: alpha_support.clone(),
                beta_support: beta_support.clone(),
            });
        }
    }
    faces
}

/// Checks that distinct faces have distinct vertex sets, so the face list
/// has no duplicates.
pub fn validate_face_vertices(profile: &Profile) -> Result<()> {
    let mut seen = HashSet::new();
    for face in enumerate_faces(profile) {
        let mut verts = face.vertices(profile);
        verts.sort();
        if !seen.insert(verts) {
            return Err(Error::invariant(format!(
                "face {face} of {profile} duplicates the vertex set of another face"
            )));
        }
    }
    Ok(())
}

/// Calls `f` on every composition of `total` into `parts` slots, each at
/// least `min`, in lexicographically increasing order.
pub(crate) fn for_each_composition(total: i64, parts: usize, min: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(rest: i64, slot: usize, min: i64, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        let parts = buf.len();
        if slot + 1 == parts {
            if rest >= min {
                buf[slot] = rest;
                f(buf);
            }
            return;
        }
        let reserve = min * (parts - slot - 1) as i64;
        let mut v = min;
        while v + reserve <= rest {
            buf[slot] = v;
            rec(rest - v, slot + 1, min, buf, f);
            v += 1;
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = vec![0; parts];
    rec(total, 0, min, &mut buf, f);
}

/// Lattice points of the cone over `face` at the given level, in
/// lexicographic order on `(alpha, beta)`. With `interior`, only points of
/// the relative interior (every coordinate in `I` and `J` positive).
pub fn lattice_points(
    face: &Face,
    profile: &Profile,
    level: i64,
    interior: bool,
) -> Vec<LatticeVector> {
    let min = i64::from(interior);
    let mut out = Vec::new();
    if level < 0 {
        return out;
    }
    let degrees = face.degrees(profile);
    for_each_composition(level, face.alpha_support.len(), min, &mut |alphas| {
        let s: i64 = alphas
            .iter()
            .zip(&degrees)
            .map(|(a, &d)| a * d as i64)
            .sum();
        for_each_composition(s, face.beta_support.len(), min, &mut |betas| {
            let mut u = LatticeVector::zero(profile);
            for (&i, &a) in face.alpha_support.iter().zip(alphas) {
                u.alpha[i] = a;
            }
            for (&j, &b) in face.beta_support.iter().zip(betas) {
                u.beta[j] = b;
            }
            out.push(u);
        });
    });
    out
}

/// `Γ(u)`: the smallest face whose cone contains `u`, read off the supports.
pub fn smallest_containing_face(u: &LatticeVector) -> Result<Face> {
    if u.coords().any(|x| x < 0) {
        return Err(Error::domain(
            "point has a negative coordinate; it is not in the cone",
        ));
    }
    let alpha_support: Vec<usize> = (0..u.alpha.len()).filter(|&i| u.alpha[i] != 0).collect();
    let beta_support: Vec<usize> = (0..u.beta.len()).filter(|&j| u.beta[j] != 0).collect();
    if alpha_support.is_empty() && beta_support.is_empty() {
        return Err(Error::domain("the zero vector lies in no face"));
    }
    if alpha_support.is_empty() || beta_support.is_empty() {
        return Err(Error::domain("point is not in the character lattice cone"));
    }
    Ok(Face {
        alpha_support,
        beta_support,
    })
}

fn degrees_as_rats(degrees: &[u32]) -> Vec<Rat> {
    degrees.iter().map(|&d| rat(d as i64)).collect()
}

/// Normalized volume of `face`:
/// `sum_l d_l^{dim} / prod_{l' != l}(d_l - d_l')` over `l in I`, which is
/// `h_{|J|-1}((d_i)_{i in I})`.
pub fn normalized_volume(face: &Face, profile: &Profile) -> Rat {
    let d = degrees_as_rats(&face.degrees(profile));
    divided_difference_sum(&UPoly::monomial(face.dim(), Rat::one()), &d)
        .expect("faces have nonempty alpha support")
}

/// `∫_Γ u dμ_Γ(u)` as a vector of length `c + N + 1`.
///
/// On the face viewed as `Q(c', N', d')`, the alpha slot of `d_i` integrates
/// to `(1/(c'+N')) sum_{a=0}^{N'} d_i^a h_{N'-a}(d')`. Beta slots in `J` all
/// carry `(1/|J|) sum_{i in I} d_i ∫ alpha_i`, from `sum_j beta_j =
/// sum_i d_i alpha_i` and the symmetry of the face in its beta slots.
pub fn moment(face: &Face, profile: &Profile) -> Vec<Rat> {
    let sub_degrees = face.degrees(profile);
    let d = degrees_as_rats(&sub_degrees);
    let c_sub = face.alpha_support.len();
    let n_sub = face.beta_support.len() - 1;
    let scale = Rat::new(BigInt::one(), BigInt::from(c_sub + n_sub));
    let mut out = vec![Rat::zero(); profile.width()];
    let h = hk_row(n_sub, &d);
    let mut weighted = Rat::zero();
    for (&i, di) in face.alpha_support.iter().zip(&d) {
        // Horner in d_i over h_{N'}, ..., h_0.
        let acc = h.iter().fold(Rat::zero(), |acc, hj| acc * di + hj);
        let integral = acc * &scale;
        weighted += di * &integral;
        out[i] = integral;
    }
    let beta_value = weighted / rat(face.beta_support.len() as i64);
    for &j in &face.beta_support {
        out[profile.codim() + j] = beta_value.clone();
    }
    out
}

/// `sum u` over the lattice points in the relative interior of the cone over
/// `face` at `level`, as a vector of length `c + N + 1`.
///
/// Alpha parts are enumerated; for each one the positive beta compositions
/// of `S = sum d_i alpha_i` over `J` are counted in closed form: there are
/// `C(S-1, |J|-1)` of them, and each beta slot sums to `C(S, |J|)` over them.
pub fn interior_weighted_sum(face: &Face, profile: &Profile, level: i64) -> Vec<BigInt> {
    let degrees = face.degrees(profile);
    let m = face.beta_support.len() as i64;
    let mut alpha_acc = vec![BigInt::zero(); face.alpha_support.len()];
    let mut beta_acc = BigInt::zero();
    if level >= 1 {
        for_each_composition(level, face.alpha_support.len(), 1, &mut |alphas| {
            let s: i64 = alphas
                .iter()
                .zip(&degrees)
                .map(|(a, &d)| a * d as i64)
                .sum();
            let count = binomial(s - 1, m - 1);
            if count.is_zero() {
                return;
            }
            for (acc, &a) in alpha_acc.iter_mut().zip(alphas) {
                *acc += &count * a;
            }
            beta_acc += binomial(s, m);
        });
    }
    let mut out = vec![BigInt::zero(); profile.width()];
    for (&i, v) in face.alpha_support.iter().zip(alpha_acc) {
        out[i] = v;
    }
    for &j in &face.beta_support {
        out[profile.codim() + j] = beta_acc.clone();
    }
    out
}

/// Polynomial fit of `l ↦ interior_weighted_sum(face, l)`.
///
/// Samples levels `0..=dim+2`, one more than a degree `dim + 1` fit needs, and
/// fails if any component comes out of higher degree.
pub fn weighted_sum_fit(face: &Face, profile: &Profile) -> Result<Vec<UPoly>> {
    let top = face.dim() + 1;
    let samples: Vec<(Rat, Vec<Rat>)> = (0..=top as i64 + 1)
        .map(|l| {
            let sum = interior_weighted_sum(face, profile, l);
            (rat(l), sum.iter().map(int_to_rat).collect())
        })
        .collect();
    let fit = interpolate_vector(&samples)?;
    if let Some(bad) = fit.iter().position(|p| p.degree().is_some_and(|d| d > top)) {
        return Err(Error::invariant(format!(
            "weighted sum of face {face} of {profile}: coordinate {bad} fits degree {:?} > {top}",
            fit[bad].degree()
        )));
    }
    Ok(fit)
}

/// Ehrhart polynomial of `face`: `l ↦ #(lattice points at level l)`,
/// fitted on levels `0..=dim+1` by explicit enumeration.
pub fn ehrhart_polynomial(face: &Face, profile: &Profile) -> Result<UPoly> {
    let samples: Vec<(Rat, Rat)> = (0..=face.dim() as i64 + 1)
        .map(|l| {
            (
                rat(l),
                rat(lattice_points(face, profile, l, false).len() as i64),
            )
        })
        .collect();
    interpolate(&samples)
}
