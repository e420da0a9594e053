//! Classical resultants and binary discriminants, expanded symbolically.
//!
//! Generic binary forms `f = sum_i a_i X0^{d-i} X1^i` have independent
//! coefficient symbols; their Sylvester determinant is expanded exactly and
//! its partial degrees measured. This is only feasible for small degrees,
//! hence the cap of 4.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{gcd_all, int_to_rat, rat, MPoly, Rat};

/// Largest form degree accepted by the symbolic determinant.
pub const MAX_FORM_DEGREE: u32 = 4;

fn check_cap(d: u32, min: u32) -> Result<()> {
    if d < min {
        return Err(Error::domain(format!("form degree {d} below {min}")));
    }
    if d > MAX_FORM_DEGREE {
        return Err(Error::Capacity(format!(
            "form degree {d} exceeds the symbolic cap {MAX_FORM_DEGREE}"
        )));
    }
    Ok(())
}

/// Determinant of a square matrix of polynomials by Laplace expansion,
/// memoized on the set of columns used by the rows above.
pub fn determinant(matrix: &[Vec<MPoly>]) -> Result<MPoly> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::domain("determinant needs a nonempty square matrix"));
    }
    if n > 16 {
        return Err(Error::Capacity(format!("{n}x{n} symbolic determinant")));
    }
    let vars = matrix[0][0].vars().to_vec();
    // minors[mask] = signed sum over assignments of the first popcount(mask)
    // rows to the columns in mask.
    let mut minors: HashMap<u32, MPoly> = HashMap::new();
    minors.insert(0, MPoly::constant(&vars, Rat::one()));
    for row in matrix {
        let mut next: HashMap<u32, MPoly> = HashMap::new();
        let mut masks: Vec<u32> = minors.keys().copied().collect();
        masks.sort_unstable();
        for mask in masks {
            let partial = &minors[&mask];
            if partial.is_zero() {
                continue;
            }
            for (col, entry) in row.iter().enumerate() {
                if mask >> col & 1 == 1 || entry.is_zero() {
                    continue;
                }
                // sign of moving column `col` past the used columns right of it
                let inversions = (mask >> col).count_ones();
                let mut term = partial.checked_mul(entry)?;
                if inversions % 2 == 1 {
                    term = -&term;
                }
                let key = mask | (1 << col);
                let slot = next.entry(key).or_insert_with(|| MPoly::zero(&vars));
                *slot = slot.checked_add(&term)?;
            }
        }
        minors = next;
    }
    Ok(minors
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| MPoly::zero(&vars)))
}

/// Sylvester matrix determinant of two binary forms given by coefficient
/// lists `f_0..f_m` and `g_0..g_n` (highest power of `X0` first).
pub fn sylvester_determinant(f: &[MPoly], g: &[MPoly]) -> Result<MPoly> {
    if f.len() < 2 || g.len() < 2 {
        return Err(Error::domain("Sylvester matrix needs forms of degree >= 1"));
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let vars = f[0].vars().to_vec();
    let zero = MPoly::zero(&vars);
    let mut matrix = vec![vec![zero; size]; size];
    for r in 0..n {
        for (k, c) in f.iter().enumerate() {
            matrix[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().enumerate() {
            matrix[n + r][r + k] = c.clone();
        }
    }
    determinant(&matrix)
}

/// Variable names `a0..a{d1}, b0..b{d2}` of the resultant ring.
pub fn resultant_variables(d1: u32, d2: u32) -> Vec<String> {
    (0..=d1)
        .map(|i| format!("a{i}"))
        .chain((0..=d2).map(|i| format!("b{i}")))
        .collect()
}

/// The coefficient groups `{a_i}` and `{b_j}` as variable index sets.
pub fn resultant_groups(d1: u32, d2: u32) -> Vec<Vec<usize>> {
    let a = (0..=d1 as usize).collect();
    let b = (d1 as usize + 1..=(d1 + d2) as usize + 1).collect();
    vec![a, b]
}

/// `Res(f, g)` of generic binary forms of degrees `d1` and `d2`.
pub fn sylvester_resultant(d1: u32, d2: u32) -> Result<MPoly> {
    check_cap(d1, 1)?;
    check_cap(d2, 1)?;
    let vars = resultant_variables(d1, d2);
    let f: Vec<MPoly> = (0..=d1 as usize).map(|i| MPoly::var(&vars, i)).collect();
    let g: Vec<MPoly> = (0..=d2 as usize)
        .map(|i| MPoly::var(&vars, d1 as usize + 1 + i))
        .collect();
    sylvester_determinant(&f, &g)
}

/// Variable names `c0..cd` of a generic binary form of degree `d`.
pub fn form_variables(d: u32) -> Vec<String> {
    (0..=d).map(|i| format!("c{i}")).collect()
}

/// Discriminant of the generic binary form `F = sum_i c_i X0^{d-i} X1^i`.
///
/// Computed as `Res(∂F/∂X0, ∂F/∂X1)` and divided by its integer content,
/// with the sign fixed so the leading term (graded lex) is positive. The
/// raw resultant carries a factor `d^{d-2}` that would make the mod-2
/// reduction vanish for even `d`.
pub fn binary_discriminant(d: u32) -> Result<MPoly> {
    check_cap(d, 2)?;
    let vars = form_variables(d);
    let c: Vec<MPoly> = (0..=d as usize).map(|i| MPoly::var(&vars, i)).collect();
    let dx0: Vec<MPoly> = (0..d as usize)
        .map(|i| c[i].scale(&rat((d as usize - i) as i64)))
        .collect();
    let dx1: Vec<MPoly> = (0..d as usize)
        .map(|i| c[i + 1].scale(&rat(i as i64 + 1)))
        .collect();
    let res = sylvester_determinant(&dx0, &dx1)?;
    Ok(primitive_part(&res))
}

/// Divides an integer polynomial by the gcd of its coefficients and makes
/// the leading coefficient positive.
pub fn primitive_part(poly: &MPoly) -> MPoly {
    let ints: Vec<BigInt> = poly.terms().map(|(_, c)| c.to_integer()).collect();
    let mut content = gcd_all(&ints);
    if content.is_zero() {
        return poly.clone();
    }
    if poly.sorted_terms()[0].1.is_negative() {
        content = -content;
    }
    poly.scale(&int_to_rat(&content).recip())
}

/// Largest total exponent inside each variable group, over all monomials.
pub fn partial_degrees(poly: &MPoly, groups: &[Vec<usize>]) -> Result<Vec<u32>> {
    if poly.is_zero() {
        return Err(Error::domain("partial degrees of the zero polynomial"));
    }
    let nvars = poly.vars().len();
    if groups.iter().flatten().any(|&v| v >= nvars) {
        return Err(Error::domain("variable group index out of range"));
    }
    Ok(groups
        .iter()
        .map(|group| {
            poly.terms()
                .map(|(e, _)| group.iter().map(|&v| e[v]).sum::<u32>())
                .max()
                .unwrap_or(0)
        })
        .collect())
}

/// Reduction of an integer polynomial modulo 2, as a 0/1 polynomial.
pub fn reduce_mod2(poly: &MPoly) -> Result<MPoly> {
    if poly.terms().any(|(_, c)| !c.is_integer()) {
        return Err(Error::domain("mod-2 reduction of a non-integer polynomial"));
    }
    let two = BigInt::from(2);
    Ok(poly.map_coeffs(|c| int_to_rat(&c.to_integer().mod_floor(&two))))
}

/// Square root in `F_2[vars]` when the mod-2 reduction is a square.
///
/// Squaring is additive in characteristic 2, so `g` is a square exactly when
/// every surviving monomial has all exponents even; the root halves them.
pub fn sqrt_mod2(poly: &MPoly) -> Result<Option<MPoly>> {
    let reduced = reduce_mod2(poly)?;
    if reduced.terms().any(|(e, _)| e.iter().any(|x| x % 2 == 1)) {
        return Ok(None);
    }
    let root = MPoly::from_terms(
        reduced.vars(),
        reduced
            .terms()
            .map(|(e, _)| (e.iter().map(|x| x / 2).collect(), Rat::one())),
    )?;
    Ok(Some(root))
}

pub fn is_perfect_square_mod2(poly: &MPoly) -> bool {
    matches!(sqrt_mod2(poly), Ok(Some(_)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<MPoly> {
        (0..names.len()).map(|i| MPoly::var(names, i)).collect()
    }

    #[test]
    fn two_by_two_resultant() {
        let r = sylvester_resultant(1, 1).unwrap();
        assert_eq!(r.to_string(), "a0*b1 - a1*b0");
        assert_eq!(
            partial_degrees(&r, &resultant_groups(1, 1)).unwrap(),
            vec![1, 1]
        );
    }

    #[test]
    fn resultant_partial_degrees() {
        let r = sylvester_resultant(2, 3).unwrap();
        assert_eq!(
            partial_degrees(&r, &resultant_groups(2, 3)).unwrap(),
            vec![3, 2]
        );
        let r = sylvester_resultant(2, 2).unwrap();
        assert_eq!(
            partial_degrees(&r, &resultant_groups(2, 2)).unwrap(),
            vec![2, 2]
        );
    }

    #[test]
    fn resultant_of_forms_with_common_root_vanishes() {
        // f = (X0 - X1)(X0 + 2 X1), g = (X0 - X1)(3 X0 + X1)
        let r = sylvester_resultant(2, 2).unwrap();
        let point = [1, 1, -2, 3, -2, -1].map(rat);
        assert!(r.eval(&point).unwrap().is_zero());
        let point = [1, 0, -1, 1, 0, -4].map(rat);
        assert!(!r.eval(&point).unwrap().is_zero());
    }

    #[test]
    fn swapping_forms_changes_sign_by_degree_parity() {
        for (d1, d2) in [(1u32, 2u32), (2, 3), (3, 3), (1, 1)] {
            let r = sylvester_resultant(d1, d2).unwrap();
            // Res(g, f) in the same ring: swap the argument lists
            let vars = resultant_variables(d1, d2);
            let f: Vec<MPoly> = (0..=d1 as usize).map(|i| MPoly::var(&vars, i)).collect();
            let g: Vec<MPoly> = (0..=d2 as usize)
                .map(|i| MPoly::var(&vars, d1 as usize + 1 + i))
                .collect();
            let swapped = sylvester_determinant(&g, &f).unwrap();
            let expected = if (d1 * d2) % 2 == 0 { r.clone() } else { -&r };
            assert_eq!(swapped, expected, "({d1},{d2})");
        }
    }

    #[test]
    fn quadratic_discriminant() {
        let disc = binary_discriminant(2).unwrap();
        // b^2 - 4ac with (a, b, c) = (c0, c1, c2)
        let v = vars(&["c0", "c1", "c2"]);
        let expected = &(&v[1] * &v[1]) - &(&v[0] * &v[2]).scale(&rat(4));
        assert!(disc == expected || disc == -&expected, "{disc}");
        let root = sqrt_mod2(&disc).unwrap().unwrap();
        assert_eq!(root, v[1]);
    }

    #[test]
    fn cubic_discriminant_mod_two() {
        let disc = binary_discriminant(3).unwrap();
        assert_eq!(disc.total_degree(), Some(4));
        let v = vars(&["c0", "c1", "c2", "c3"]);
        // b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 abcd
        let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
        let classical = &(&(&(&(b * b) * &(c * c)) - &(&(a * c) * &(c * c)).scale(&rat(4)))
            - &(&(b * b) * &(b * d)).scale(&rat(4)))
            - &(&(&(a * a) * &(d * d)).scale(&rat(27)) - &(&(a * b) * &(c * d)).scale(&rat(18)));
        assert!(disc == classical || disc == -&classical, "{disc}");
        let root = sqrt_mod2(&disc).unwrap().unwrap();
        assert_eq!(root, &(a * d) + &(b * c));
    }

    #[test]
    fn square_test() {
        let v = vars(&["a", "b", "c"]);
        assert!(!is_perfect_square_mod2(&(&v[0] * &v[1])));
        assert!(is_perfect_square_mod2(&(&v[0] * &v[0]).scale(&rat(3))));
        // 2ab vanishes mod 2
        let p = &(&v[2] * &v[2]) + &(&v[0] * &v[1]).scale(&rat(2));
        assert!(is_perfect_square_mod2(&p));
    }

    #[test]
    fn partial_degree_edge_cases() {
        let one = MPoly::constant(&["x", "y"], Rat::one());
        assert_eq!(
            partial_degrees(&one, &[vec![0], vec![1]]).unwrap(),
            vec![0, 0]
        );
        assert!(partial_degrees(&MPoly::zero(&["x"]), &[vec![0]]).is_err());
        let disc = binary_discriminant(2).unwrap();
        assert_eq!(partial_degrees(&disc, &[vec![0, 1, 2]]).unwrap(), vec![2]);
    }

    #[test]
    fn degree_caps() {
        assert!(matches!(sylvester_resultant(5, 1), Err(Error::Capacity(_))));
        assert!(matches!(binary_discriminant(1), Err(Error::Domain(_))));
        assert!(matches!(binary_discriminant(5), Err(Error::Capacity(_))));
    }
}
