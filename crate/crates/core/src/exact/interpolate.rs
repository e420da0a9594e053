use num_traits::{One, Zero};

use super::{Rat, UPoly};
use crate::error::{Error, Result};

/// Lagrange basis polynomials `L_i` with `L_i(x_j) = [i == j]`.
fn lagrange_basis(xs: &[Rat]) -> Result<Vec<UPoly>> {
    for (i, a) in xs.iter().enumerate() {
        if xs[..i].contains(a) {
            return Err(Error::domain(format!(
                "repeated interpolation abscissa {a}"
            )));
        }
    }
    let mut basis = Vec::with_capacity(xs.len());
    for (i, xi) in xs.iter().enumerate() {
        let mut num = UPoly::constant(Rat::one());
        let mut den = Rat::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                num = &num * &UPoly::new(vec![-xj, Rat::one()]);
                den *= xi - xj;
            }
        }
        basis.push(num.scale(&den.recip()));
    }
    Ok(basis)
}

/// The unique polynomial of degree `< points.len()` through `points`.
pub fn interpolate(points: &[(Rat, Rat)]) -> Result<UPoly> {
    let xs: Vec<Rat> = points.iter().map(|(x, _)| x.clone()).collect();
    let basis = lagrange_basis(&xs)?;
    Ok(basis
        .iter()
        .zip(points)
        .fold(UPoly::zero(), |acc, (b, (_, y))| &acc + &b.scale(y)))
}

/// Componentwise [`interpolate`] for vector-valued samples of equal length.
pub fn interpolate_vector(points: &[(Rat, Vec<Rat>)]) -> Result<Vec<UPoly>> {
    let width = points.first().map_or(0, |(_, v)| v.len());
    if points.iter().any(|(_, v)| v.len() != width) {
        return Err(Error::domain("interpolation samples of unequal length"));
    }
    let xs: Vec<Rat> = points.iter().map(|(x, _)| x.clone()).collect();
    let basis = lagrange_basis(&xs)?;
    Ok((0..width)
        .map(|k| {
            basis
                .iter()
                .zip(points)
                .fold(UPoly::zero(), |acc, (b, (_, v))| {
                    if v[k].is_zero() {
                        acc
                    } else {
                        &acc + &b.scale(&v[k])
                    }
                })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rat, Rat)> {
        v.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            interpolate(&pts(&[(0, 1), (1, 1)])).unwrap(),
            UPoly::from_ints(&[1])
        );
        assert_eq!(
            interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap(),
            UPoly::from_ints(&[0, 0, 1])
        );
        let line = interpolate(&pts(&[(0, 0), (1, 1), (2, 2), (3, 3)])).unwrap();
        assert_eq!(line, UPoly::x());
        assert_eq!(line.degree(), Some(1));
    }

    #[test]
    fn repeated_abscissa_is_rejected() {
        assert!(matches!(
            interpolate(&pts(&[(1, 0), (1, 1)])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn vector_values_interpolate_per_component() {
        let points: Vec<(Rat, Vec<Rat>)> = (0..3)
            .map(|x| (rat(x), vec![rat(x * x), rat(5), rat(2 * x - 1)]))
            .collect();
        let fit = interpolate_vector(&points).unwrap();
        assert_eq!(fit[0], UPoly::from_ints(&[0, 0, 1]));
        assert_eq!(fit[1], UPoly::from_ints(&[5]));
        assert_eq!(fit[2], UPoly::from_ints(&[-1, 2]));
    }
}
