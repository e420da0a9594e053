//! Complete homogeneous symmetric polynomials and divided differences.
//!
//! For a monomial `X^m` and values `x_1..x_c`,
//!
//! ```text
//! sum_l x_l^m / prod_{l' != l} (x_l - x_l')  =  h_{m-c+1}(x_1, ..., x_c)
//! ```
//!
//! The right-hand side is a polynomial, so it stays defined when values
//! repeat. Every divided-difference sum in this crate goes through it.

use num_traits::{One, Zero};

use super::{binomial, int_to_rat, MPoly, Rat, UPoly};
use crate::error::{Error, Result};

/// `h_k(vals)`: the sum of all monomials of total degree `k` in `vals`.
///
/// `h_0 = 1` and `h_k = 0` for `k < 0`.
pub fn hk(k: i64, vals: &[Rat]) -> Result<Rat> {
    if vals.is_empty() {
        return Err(Error::domain("hk needs at least one value"));
    }
    if k < 0 {
        return Ok(Rat::zero());
    }
    let mut row = hk_row(k as usize, vals);
    Ok(row.swap_remove(k as usize))
}

/// `[h_0(vals), ..., h_max(vals)]`.
pub fn hk_row(max: usize, vals: &[Rat]) -> Vec<Rat> {
    // row[j] = h_j(x_1..x_t), updated one variable at a time with
    // h_j(x_1..x_t) = h_j(x_1..x_{t-1}) + x_t * h_{j-1}(x_1..x_t).
    let mut row = vec![Rat::zero(); max + 1];
    row[0] = Rat::one();
    for x in vals {
        for j in 1..=max {
            let prev = &row[j - 1] * x;
            row[j] += prev;
        }
    }
    row
}

/// Symbolic [`hk`] over polynomial values sharing one ring.
pub fn hk_poly(k: i64, vals: &[MPoly]) -> Result<MPoly> {
    let first = vals
        .first()
        .ok_or_else(|| Error::domain("hk needs at least one value"))?;
    let vars = first.vars().to_vec();
    if k < 0 {
        return Ok(MPoly::zero(&vars));
    }
    let k = k as usize;
    let mut row = vec![MPoly::zero(&vars); k + 1];
    row[0] = MPoly::constant(&vars, Rat::one());
    for x in vals {
        for j in 1..=k {
            let prev = row[j - 1].checked_mul(x)?;
            row[j] = row[j].checked_add(&prev)?;
        }
    }
    Ok(row.swap_remove(k))
}

/// `sum_l P(x_l) / prod_{l' != l} (x_l - x_l')`, through the monomial
/// expansion `sum_m a_m h_{m-(c-1)}(x)`. Values may repeat.
pub fn divided_difference_sum(p: &UPoly, vals: &[Rat]) -> Result<Rat> {
    if vals.is_empty() {
        return Err(Error::domain("divided difference over no values"));
    }
    let shift = vals.len() as i64 - 1;
    let mut acc = Rat::zero();
    for (m, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        acc += a * hk(m as i64 - shift, vals)?;
    }
    Ok(acc)
}

/// `sum_{i=0}^{n} (-1)^i C(n, i) P(x0 + i)`.
///
/// For `deg P = n` with leading coefficient `a_n` this is `(-1)^n n! a_n`;
/// for `deg P < n` it vanishes.
pub fn alternating_binomial_sum(p: &UPoly, n: usize, x0: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for i in 0..=n {
        let term =
            int_to_rat(&binomial(n as i64, i as i64)) * p.eval(&(x0 + Rat::from_integer(i.into())));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, rat, rat_frac};
    use proptest::prelude::*;

    /// Literal divided-difference sum; only defined on distinct values.
    fn raw_divided_sum(p: &UPoly, vals: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (l, xl) in vals.iter().enumerate() {
            let mut denom = Rat::one();
            for (m, xm) in vals.iter().enumerate() {
                if m != l {
                    denom *= xl - xm;
                }
            }
            acc += p.eval(xl) / denom;
        }
        acc
    }

    #[test]
    fn hk_small_cases() {
        assert_eq!(hk(0, &[rat(2), rat(3)]).unwrap(), rat(1));
        assert_eq!(hk(1, &[rat(1), rat(2), rat(4)]).unwrap(), rat(7));
        assert_eq!(hk(-1, &[rat(5)]).unwrap(), rat(0));
        // h_2(2,3) = 4 + 6 + 9
        assert_eq!(hk(2, &[rat(2), rat(3)]).unwrap(), rat(19));
        assert!(matches!(hk(1, &[]), Err(Error::Domain(_))));
    }

    #[test]
    fn hk_symbolic_two_variables() {
        let vars = ["x", "y"];
        let vals = [MPoly::var(&vars, 0), MPoly::var(&vars, 1)];
        assert_eq!(hk_poly(2, &vals).unwrap().to_string(), "x^2 + x*y + y^2");
        assert!(hk_poly(-3, &vals).unwrap().is_zero());
    }

    #[test]
    fn low_degree_divided_sum_vanishes() {
        // deg P <= c - 2
        for c in 2..=5usize {
            let vals: Vec<Rat> = (0..c).map(|i| rat(i as i64 * 3 + 1)).collect();
            for deg in 0..=(c - 2) {
                let p = UPoly::from_ints(&vec![1; deg + 1]);
                assert!(divided_difference_sum(&p, &vals).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn top_monomial_divided_sum_is_one() {
        for c in 1..=5usize {
            let vals: Vec<Rat> = (0..c).map(|i| rat_frac(2 * i as i64 + 1, 3)).collect();
            let p = UPoly::monomial(c - 1, rat(1));
            assert_eq!(raw_divided_sum(&p, &vals), rat(1));
            assert_eq!(divided_difference_sum(&p, &vals).unwrap(), rat(1));
        }
    }

    #[test]
    fn single_value_is_plain_evaluation() {
        let p = UPoly::from_ints(&[3, -1, 4]);
        let d = rat(7);
        assert_eq!(
            divided_difference_sum(&p, std::slice::from_ref(&d)).unwrap(),
            p.eval(&d)
        );
    }

    #[test]
    fn repeated_values_are_the_diagonal_limit() {
        // (x^m - y^m)/(x - y) at x = y is m x^{m-1}.
        let p = UPoly::monomial(4, rat(1));
        let d = rat(3);
        let diag = divided_difference_sum(&p, &[d.clone(), d.clone()]).unwrap();
        assert_eq!(diag, rat(4 * 27));
        // Nearby distinct values approach it.
        let eps = rat_frac(1, 1_000_000);
        let near = raw_divided_sum(&p, &[d.clone(), &d + &eps]);
        assert!((near - &diag) < rat_frac(1, 1000));
    }

    #[test]
    fn symbolic_r_agrees_with_numeric_on_repeats() {
        // R' = sum_m a_m h_{m-c+1}(X_1..X_c), evaluated at repeated points.
        let vars = ["x1", "x2", "x3"];
        let xs: Vec<MPoly> = (0..3).map(|i| MPoly::var(&vars, i)).collect();
        let p = UPoly::from_ints(&[2, 0, -1, 5, 1]);
        let mut r = MPoly::zero(&vars);
        for (m, a) in p.coeffs().iter().enumerate() {
            r = &r + &hk_poly(m as i64 - 2, &xs).unwrap().scale(a);
        }
        for point in [[2, 2, 2], [1, 1, 4], [0, 3, 3], [1, 2, 5]] {
            let pt: Vec<Rat> = point.iter().map(|&v| rat(v)).collect();
            assert_eq!(
                r.eval(&pt).unwrap(),
                divided_difference_sum(&p, &pt).unwrap()
            );
        }
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alternating_binomial_sum(&UPoly::x(), 1, &rat(5)), rat(-1));
        let sq = UPoly::monomial(2, rat(1));
        for x0 in [-4, 0, 9] {
            assert_eq!(alternating_binomial_sum(&sq, 2, &rat(x0)), rat(2));
        }
        // degree below n is annihilated
        assert!(alternating_binomial_sum(&sq, 3, &rat(1)).is_zero());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-30i64..30, 1i64..7).prop_map(|(n, d)| rat_frac(n, d))
    }

    fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
        prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(UPoly::new)
    }

    proptest! {
        #[test]
        fn divided_sum_matches_literal_sum(
            p in upoly(8),
            vals in prop::collection::btree_set((-40i64..40, 1i64..5), 1..=5),
        ) {
            let vals: Vec<Rat> = vals.into_iter().map(|(n, d)| rat_frac(n, d)).collect();
            let mut distinct = vals.clone();
            distinct.sort();
            distinct.dedup();
            prop_assume!(distinct.len() == vals.len());
            prop_assert_eq!(divided_difference_sum(&p, &vals).unwrap(), raw_divided_sum(&p, &vals));
        }

        #[test]
        fn hk_is_symmetric(k in 0i64..7, mut vals in prop::collection::vec(small_rat(), 1..5), seed in any::<u64>()) {
            let before = hk(k, &vals).unwrap();
            let n = vals.len();
            for i in (1..n).rev() {
                vals.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
            }
            prop_assert_eq!(before, hk(k, &vals).unwrap());
        }

        #[test]
        fn alternating_sum_ignores_abscissa(p in upoly(8), a in small_rat(), b in small_rat(), c in small_rat()) {
            let n = p.degree().unwrap_or(0);
            let expected = {
                let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
                sign * int_to_rat(&factorial(n as u64)) * p.leading_coeff()
            };
            for x0 in [a, b, c] {
                prop_assert_eq!(alternating_binomial_sum(&p, n, &x0), expected.clone());
            }
        }

        #[test]
        fn rational_addition_is_exact(a in small_rat(), b in small_rat()) {
            prop_assert_eq!((&a + &b) - &b, a);
        }
    }
}
