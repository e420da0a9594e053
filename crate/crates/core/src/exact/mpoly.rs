use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Exponent vector, one slot per ring variable.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over the rationals.
///
/// The variable list is fixed when the polynomial is built. Arithmetic
/// between polynomials over different variable lists is a domain error
/// (`checked_*`), or a panic through the operator impls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponents, Rat>,
}

impl MPoly {
    pub fn zero(vars: &[impl AsRef<str>]) -> Self {
        MPoly {
            vars: vars.iter().map(|v| v.as_ref().to_owned()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[impl AsRef<str>], c: Rat) -> Self {
        let mut p = MPoly::zero(vars);
        let n = p.vars.len();
        p.insert(vec![0; n], c);
        p
    }

    /// The `idx`-th variable as a polynomial.
    pub fn var(vars: &[impl AsRef<str>], idx: usize) -> Self {
        let mut p = MPoly::zero(vars);
        assert!(idx < p.vars.len(), "variable index {idx} out of range");
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.insert(e, Rat::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like terms
    /// are merged and zero coefficients dropped.
    pub fn from_terms(
        vars: &[impl AsRef<str>],
        terms: impl IntoIterator<Item = (Exponents, Rat)>,
    ) -> Result<Self> {
        let mut p = MPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::domain(format!(
                    "exponent vector of length {} in a ring of {} variables",
                    e.len(),
                    p.vars.len()
                )));
            }
            p.insert(e, c);
        }
        Ok(p)
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "variable lists differ: {:?} vs {:?}",
                self.vars, other.vars
            )))
        }
    }

    fn insert(&mut self, e: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, a) in &self.terms {
            out.insert(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MPoly::constant(&self.vars, Rat::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point given as one value per variable.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.vars.len() {
            return Err(Error::domain(format!(
                "evaluation point has {} values for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= num_traits::pow(x.clone(), k as usize);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Applies `f` to every coefficient, dropping those mapped to zero.
    pub fn map_coeffs(&self, f: impl Fn(&Rat) -> Rat) -> Self {
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Terms sorted by descending total degree, ties broken by descending
    /// lexicographic order of the exponent vector (graded lex, largest first).
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rat)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| grlex_desc(a, b));
        terms
    }
}

fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &MPoly {
            type Output = MPoly;

            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs).expect("MPoly arithmetic across rings")
            }
        }

        impl $trait for MPoly {
            type Output = MPoly;

            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for MPoly {
    /// Writes `3*d1^2 - 6*d1 + 3` style output in graded lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let monomial: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(k, _)| **k > 0)
                .map(|(&k, v)| {
                    if k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{abs}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn xy() -> (MPoly, MPoly) {
        let vars = ["x", "y"];
        (MPoly::var(&vars, 0), MPoly::var(&vars, 1))
    }

    #[test]
    fn display_uses_graded_lex() {
        let (x, y) = xy();
        let p = &(&(&x * &x) * &y) + &(&x * &(&y * &y));
        let p = &p - &(&x * &y).scale(&rat(2));
        assert_eq!(p.to_string(), "x^2*y + x*y^2 - 2*x*y");
        let one = MPoly::constant(&["x", "y"], rat(-1));
        assert_eq!((&one - &x).to_string(), "-x - 1");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let (x, y) = xy();
        let p = &(&x + &y) - &x;
        assert_eq!(p, y);
        assert_eq!(p.num_terms(), 1);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn cross_ring_arithmetic_is_rejected() {
        let (x, _) = xy();
        let z = MPoly::var(&["y", "x"], 0);
        assert!(matches!(x.checked_add(&z), Err(Error::Domain(_))));
        assert!(x.checked_mul(&z).is_err());
    }

    #[test]
    fn pow_and_eval() {
        let (x, y) = xy();
        let p = (&x + &y).pow(3);
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.eval(&[rat(1), rat(2)]).unwrap(), rat(27));
        assert_eq!(p.total_degree(), Some(3));
        assert!(p.eval(&[rat(1)]).is_err());
    }

    #[test]
    fn from_terms_validates_length() {
        assert!(MPoly::from_terms(&["x"], [(vec![1, 2], rat(1))]).is_err());
        let p = MPoly::from_terms(&["x"], [(vec![1], rat(1)), (vec![1], rat(-1))]).unwrap();
        assert!(p.is_zero());
    }
}
