use num_rational::BigRational;
use num_traits::Zero;

use super::{format_rational, Poly, PolyError};

/// Incremental Newton-form interpolation.
///
/// Keeps the last diagonal of the divided-difference table so that a new node
/// costs `O(n)` arithmetic operations.
#[derive(Debug, Clone, Default)]
pub struct NewtonInterpolator {
    nodes: Vec<BigRational>,
    /// Newton coefficients `f[x_0], f[x_0, x_1], …`
    coeffs: Vec<BigRational>,
    /// `f[x_n], f[x_{n-1}, x_n], …, f[x_0 … x_n]`
    diagonal: Vec<BigRational>,
}

impl NewtonInterpolator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn push(&mut self, x: BigRational, y: BigRational) -> Result<(), PolyError> {
        if self.nodes.contains(&x) {
            return Err(PolyError::DuplicateNode(format_rational(&x)));
        }
        let n = self.nodes.len();
        let mut diag = Vec::with_capacity(n + 1);
        diag.push(y);
        for j in 1..=n {
            let num = &diag[j - 1] - &self.diagonal[j - 1];
            diag.push(num / (&x - &self.nodes[n - j]));
        }
        self.coeffs.push(diag[n].clone());
        self.diagonal = diag;
        self.nodes.push(x);
        Ok(())
    }

    /// The interpolating polynomial, in the monomial basis.
    pub fn poly(&self) -> Poly {
        // Horner on the Newton form: a_0 + (X - x_0)(a_1 + (X - x_1)(…))
        if self.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut acc = vec![BigRational::zero()];
        for (a, x) in self.coeffs.iter().zip(&self.nodes).rev() {
            // acc = acc · (X - x) + a
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * x;
            }
            next[0] += a;
            acc = next;
        }
        Poly::monomial(acc)
    }
}

/// The unique polynomial of degree `< points.len()` through every point.
pub fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> Result<Poly, PolyError> {
    if points.is_empty() {
        return Err(PolyError::NoPoints);
    }
    let mut newton = NewtonInterpolator::new();
    for (x, y) in points {
        newton.push(x.clone(), y.clone())?;
    }
    Ok(newton.poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{falling_factorial, rat, Basis};

    fn pts(v: &[(i64, i64)]) -> Vec<(BigRational, BigRational)> {
        v.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn square() {
        let p = lagrange_interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap();
        assert_eq!(p, Poly::from_ints(Basis::Monomial, &[0, 0, 1]));
    }

    #[test]
    fn falling_factorial_from_samples() {
        let p = lagrange_interpolate(&pts(&[(5, 60), (0, 0), (1, 0), (2, 0)])).unwrap();
        assert_eq!(p, falling_factorial(3));
    }

    #[test]
    fn constant() {
        let p = lagrange_interpolate(&pts(&[(3, 7)])).unwrap();
        assert_eq!(p, Poly::constant(rat(7)));
    }

    #[test]
    fn errors() {
        assert_eq!(lagrange_interpolate(&[]), Err(PolyError::NoPoints));
        assert_eq!(lagrange_interpolate(&pts(&[(1, 2), (1, 3)])), Err(PolyError::DuplicateNode("1".into())));
    }
}
