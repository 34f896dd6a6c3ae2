//! Tridiagonal determinants with indeterminate diagonal, their expansion
//! into gap-two matching sums, and the assembled characteristic polynomial
//! of the distance-(n-1) action on the swap-symmetric subspace.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::IntPoly;
use crate::{Error, Result};

/// Off-diagonal data for a tridiagonal matrix whose diagonal is the
/// indeterminate: a[t-1] sits above the diagonal in column t+1, b[t-1]
/// below it in row t+1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TridiagSpec {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl TridiagSpec {
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidArgument(format!(
                "off-diagonal sequences must have equal length, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        Ok(TridiagSpec { a, b })
    }

    pub fn from_i64(a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(
            a.iter().map(|&v| BigInt::from(v)).collect(),
            b.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Product a_t b_t (1-based t).
    fn weight(&self, t: usize) -> BigInt {
        &self.a[t - 1] * &self.b[t - 1]
    }
}

/// Determinant of the (m+1) x (m+1) tridiagonal matrix with the
/// indeterminate on the diagonal, via the three-term recurrence
/// D_t = X D_{t-1} - a_t b_t D_{t-2} with D_{-1} = 1, D_0 = X.
pub fn det_tridiag(spec: &TridiagSpec, m: usize) -> Result<IntPoly> {
    if m > spec.len() {
        return Err(Error::InvalidArgument(format!(
            "matrix wants {m} off-diagonal pairs but the spec has {}",
            spec.len()
        )));
    }
    let x = IntPoly::x();
    let mut prev2 = IntPoly::one();
    let mut prev1 = x.clone();
    for t in 1..=m {
        let w = IntPoly::constant(spec.weight(t));
        let next = &(&x * &prev1) - &(&w * &prev2);
        prev2 = prev1;
        prev1 = next;
    }
    Ok(prev1)
}

/// Sum over all j-element subsets of {1..m} with no two consecutive
/// members, of the product of a_t b_t over the subset; the coefficient of
/// (-1)^j X^(m+1-2j) in [`det_tridiag`].
pub fn matchings_coeff(spec: &TridiagSpec, m: usize, j: usize) -> Result<BigInt> {
    if m > spec.len() {
        return Err(Error::InvalidArgument(format!(
            "matching sum wants {m} off-diagonal pairs but the spec has {}",
            spec.len()
        )));
    }
    let mut unit = vec![BigInt::zero(); j + 1];
    unit[0] = BigInt::one();
    let mut prev2 = unit.clone();
    let mut prev1 = unit;
    for t in 1..=m {
        let w = spec.weight(t);
        let mut next = prev1.clone();
        for i in 1..=j {
            next[i] += &w * &prev2[i - 1];
        }
        prev2 = prev1;
        prev1 = next;
    }
    Ok(prev1[j].clone())
}

/// Characteristic polynomial of the distance-(n-1) action on the
/// swap-symmetric subspace for odd n, assembled by expanding the
/// m x m tridiagonal matrix (m = (n+1)/2) whose last diagonal entry is
/// X - m along its final row.
pub fn cnplus(n: u32) -> Result<IntPoly> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::InvalidArgument(format!(
            "assembly requires odd n >= 3, got {n}"
        )));
    }
    let m = ((n + 1) / 2) as usize;
    let ni = n as i64;
    let a: Vec<i64> = (1..m as i64).map(|i| -i).collect();
    let b: Vec<i64> = (1..m as i64).map(|i| -(ni - i + 1)).collect();
    let spec = TridiagSpec::from_i64(&a, &b)?;

    let block = |j: usize| -> Result<IntPoly> {
        if j == 0 {
            Ok(IntPoly::one())
        } else {
            det_tridiag(&spec, j - 1)
        }
    };
    let t1 = block(m - 1)?;
    let t2 = block(m - 2)?;
    let corner = &IntPoly::x() - &IntPoly::constant(BigInt::from(m as i64));
    let drop = IntPoly::constant(BigInt::from((m * m - 1) as i64));
    Ok(&(&corner * &t1) - &(&drop * &t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::odd_equation;
    use crate::hamming::{char_and_min_poly, SubspaceName};

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn det_pinned_example() {
        let spec = TridiagSpec::from_i64(&[-1, -2], &[-3, -4]).unwrap();
        assert_eq!(det_tridiag(&spec, 2).unwrap(), poly(&[0, -11, 0, 1]));
        assert_eq!(det_tridiag(&spec, 0).unwrap(), poly(&[0, 1]));
        assert_eq!(det_tridiag(&spec, 1).unwrap(), poly(&[-3, 0, 1]));
        assert!(det_tridiag(&spec, 3).is_err());
    }

    #[test]
    fn matchings_pinned() {
        let spec = TridiagSpec::from_i64(&[-1, -2], &[-3, -4]).unwrap();
        assert_eq!(matchings_coeff(&spec, 2, 0).unwrap(), BigInt::from(1));
        assert_eq!(matchings_coeff(&spec, 2, 1).unwrap(), BigInt::from(11));
        assert_eq!(matchings_coeff(&spec, 2, 2).unwrap(), BigInt::from(0));
        assert_eq!(matchings_coeff(&spec, 1, 1).unwrap(), BigInt::from(3));
    }

    #[test]
    fn matchings_expand_the_determinant() {
        let spec = TridiagSpec::from_i64(&[2, -1, 3, 1, -2], &[1, 4, -1, 2, 5]).unwrap();
        for m in 0..=5usize {
            let det = det_tridiag(&spec, m).unwrap();
            let mut coeffs = vec![BigInt::zero(); m + 2];
            for j in 0..=(m + 1) / 2 {
                let c = matchings_coeff(&spec, m, j).unwrap();
                coeffs[m + 1 - 2 * j] = if j % 2 == 0 { c } else { -c };
            }
            assert_eq!(det, IntPoly::new(coeffs), "m={m}");
        }
    }

    #[test]
    fn assembly_pinned() {
        assert_eq!(cnplus(3).unwrap(), poly(&[-3, -2, 1]));
        assert_eq!(cnplus(5).unwrap(), poly(&[15, -13, -3, 1]));
        assert_eq!(cnplus(7).unwrap(), poly(&[105, 76, -34, -4, 1]));
        assert!(cnplus(4).is_err());
        assert!(cnplus(1).is_err());
    }

    #[test]
    fn assembly_matches_equation_and_spectrum() {
        for n in (3..=13u32).step_by(2) {
            let c = cnplus(n).unwrap();
            assert_eq!(c, odd_equation(n).unwrap(), "n={n} equation");
            let (ch, _) = char_and_min_poly(n, n - 1, SubspaceName::Plus).unwrap();
            assert_eq!(c, ch, "n={n} spectrum");
        }
    }
}
