use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rat;

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and `degree` is `None` exactly for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// `c * X^deg`
    pub fn monomial(deg: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UPoly::new(coeffs)
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        UPoly::monomial(1, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `P(X + shift)`
    pub fn shift(&self, shift: &Rat) -> Self {
        // Horner with the linear polynomial X + shift.
        let lin = UPoly::new(vec![shift.clone(), Rat::one()]);
        self.coeffs.iter().rev().fold(UPoly::zero(), |acc, c| {
            &(&acc * &lin) + &UPoly::constant(c.clone())
        })
    }
}

impl Add for &UPoly {
    type Output = UPoly;

    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;

    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;

    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = UPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(UPoly::from_ints(&[0, 0]).is_zero());
        assert_eq!(UPoly::zero().degree(), None);
    }

    #[test]
    fn eval_and_shift() {
        // (X + 1)^2 = X^2 + 2X + 1
        let sq = UPoly::from_ints(&[0, 0, 1]);
        assert_eq!(sq.shift(&rat(1)), UPoly::from_ints(&[1, 2, 1]));
        assert_eq!(sq.eval(&rat(-3)), rat(9));
    }

    #[test]
    fn product_degrees_add() {
        let p = UPoly::from_ints(&[1, 1]);
        let q = UPoly::from_ints(&[-1, 1]);
        assert_eq!(&p * &q, UPoly::from_ints(&[-1, 0, 1]));
        assert!((&p * &UPoly::zero()).is_zero());
    }
}
