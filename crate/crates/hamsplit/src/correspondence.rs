//! Coefficient recursions and the characteristic equations they assemble:
//! one monic equation for odd n, a pair (and their common lift with an
//! order-two symbol) for even n, plus factored closed forms and a
//! self-check report tying the equations to the subspace spectra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{binom, IntPoly};
use crate::hamming::{char_and_min_poly, SubspaceName};
use crate::{Check, Error, Result};

/// Triangular table of the recursion coefficients used by the odd-n
/// equation, rows 0..=(n+1)/2; entry (k, i) vanishes unless i and k have
/// the same parity, and the top entry of every row is -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ACoeffTable {
    n: u32,
    rows: Vec<Vec<BigInt>>,
}

impl ACoeffTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entry at row k, index i; zero outside the triangle.
    pub fn entry(&self, k: i64, i: i64) -> BigInt {
        if k < 0 || i < 0 || i > k || k as usize >= self.rows.len() {
            BigInt::zero()
        } else {
            self.rows[k as usize][i as usize].clone()
        }
    }
}

/// Builds the odd-n coefficient table from the two-term recursion
/// a(k+1, i) = a(k, i-1) - k(n-k+1) a(k-1, i), seeded with a(0, 0) = -1.
pub fn a_table(n: u32) -> Result<ACoeffTable> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::InvalidArgument(format!(
            "coefficient table requires odd n >= 3, got {n}"
        )));
    }
    let top = ((n + 1) / 2) as usize;
    let ni = n as i64;
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(-1)]];
    for k in 0..top {
        let ki = k as i64;
        let factor = BigInt::from(ki * (ni - ki + 1));
        let mut row = Vec::with_capacity(k + 2);
        for i in 0..=(ki + 1) {
            let shifted = if i >= 1 {
                rows[k][(i - 1) as usize].clone()
            } else {
                BigInt::zero()
            };
            let below = if k >= 1 && i <= ki - 1 {
                rows[k - 1][i as usize].clone()
            } else {
                BigInt::zero()
            };
            row.push(shifted - &factor * below);
        }
        rows.push(row);
    }
    Ok(ACoeffTable { n, rows })
}

/// Closed form for the table entry a(k, k-2i) as i nested gap-two sums of
/// the products j(n-j+1). Only valid in the stable range 2k <= n-2.
pub fn a_closed_form(n: u32, k: u32, i: u32) -> Result<BigInt> {
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("n must be odd, got {n}")));
    }
    if 2 * k + 2 > n {
        return Err(Error::InvalidArgument(format!(
            "closed form needs 2k <= n-2, got n={n}, k={k}"
        )));
    }
    if 2 * i > k {
        return Err(Error::InvalidArgument(format!(
            "entry index k-2i must be nonnegative, got k={k}, i={i}"
        )));
    }
    if i == 0 {
        return Ok(BigInt::from(-1));
    }

    fn nested(n: i64, k: i64, i: i64, t: i64, lo: i64) -> BigInt {
        if t == i + 1 {
            return BigInt::one();
        }
        let hi = k - 2 * i + 2 * t - 1;
        let mut acc = BigInt::zero();
        for j in lo..=hi {
            acc += BigInt::from(j * (n - j + 1)) * nested(n, k, i, t + 1, j + 2);
        }
        acc
    }

    let s = nested(n as i64, k as i64, i as i64, 1, 1);
    Ok(if i % 2 == 1 { s } else { -s })
}

/// The monic odd-n equation of degree (n+1)/2, assembled from the last two
/// rows of the coefficient table.
pub fn odd_equation(n: u32) -> Result<IntPoly> {
    let table = a_table(n)?;
    let k = ((n - 1) / 2) as i64;
    let mut c = vec![BigInt::zero(); k as usize + 2];
    c[(k + 1) as usize] = BigInt::one();
    c[k as usize] = BigInt::from(-(k + 1));
    let kp1 = BigInt::from(k + 1);
    for i in 0..=(k - 2) {
        c[i as usize] += &kp1 * table.entry(k, i);
    }
    for i in 0..=(k - 1) {
        let v = table.entry(k + 1, i);
        c[i as usize] -= v;
    }
    Ok(IntPoly::new(c))
}

/// Factored form of the odd-n equation: integer roots (-1)^(i+k) (2i+1)
/// for i = 0..=k with k = (n-1)/2.
pub fn odd_product(n: u32) -> Result<IntPoly> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::InvalidArgument(format!(
            "factored odd equation requires odd n >= 3, got {n}"
        )));
    }
    let k = ((n - 1) / 2) as i64;
    let roots: Vec<BigInt> = (0..=k)
        .map(|i| {
            let v = BigInt::from(2 * i + 1);
            if (i + k) % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    Ok(IntPoly::from_roots(&roots))
}

/// Triangular table of the recursion coefficients used by the even-n
/// equations, rows 0..=n/2; the top entry of every row is -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BCoeffTable {
    n: u32,
    rows: Vec<Vec<BigInt>>,
}

impl BCoeffTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entry at row k, index j; zero outside the triangle.
    pub fn entry(&self, k: i64, j: i64) -> BigInt {
        if k < 0 || j < 0 || j > k || k as usize >= self.rows.len() {
            BigInt::zero()
        } else {
            self.rows[k as usize][j as usize].clone()
        }
    }
}

/// Builds the even-n coefficient table from the three-term recursion
/// b(k+1, j) = b(k, j-1) - C(2k,2) C(n-2k+2,2) b(k-1, j) - 2k(n-2k) b(k, j),
/// seeded with b(0, 0) = -1.
pub fn b_table(n: u32) -> Result<BCoeffTable> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::InvalidArgument(format!(
            "coefficient table requires even n >= 4, got {n}"
        )));
    }
    let top = (n / 2) as usize;
    let ni = n as i64;
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(-1)]];
    for k in 0..top {
        let ki = k as i64;
        let drop2 = binom(2 * ki, 2) * binom(ni - 2 * ki + 2, 2);
        let drop1 = BigInt::from(2 * ki * (ni - 2 * ki));
        let mut row = Vec::with_capacity(k + 2);
        for j in 0..=(ki + 1) {
            let shifted = if j >= 1 {
                rows[k][(j - 1) as usize].clone()
            } else {
                BigInt::zero()
            };
            let same = if j <= ki {
                rows[k][j as usize].clone()
            } else {
                BigInt::zero()
            };
            let below = if k >= 1 && j <= ki - 1 {
                rows[k - 1][j as usize].clone()
            } else {
                BigInt::zero()
            };
            row.push(shifted - &drop2 * below - &drop1 * same);
        }
        rows.push(row);
    }
    Ok(BCoeffTable { n, rows })
}

/// Polynomial in X whose coefficients live in the rank-two ring spanned by
/// 1 and an order-two symbol s; stored lowest power first as (plain, s)
/// pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SigmaPoly {
    coeffs: Vec<(BigInt, BigInt)>,
}

impl SigmaPoly {
    pub fn coeffs(&self) -> &[(BigInt, BigInt)] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Specializes the symbol to 1 or -1.
    pub fn subst(&self, sigma: i64) -> Result<IntPoly> {
        if sigma != 1 && sigma != -1 {
            return Err(Error::InvalidArgument(format!(
                "the symbol squares to one, so it can only be specialized to 1 or -1, got {sigma}"
            )));
        }
        Ok(IntPoly::new(
            self.coeffs
                .iter()
                .map(|(a, b)| if sigma == 1 { a + b } else { a - b })
                .collect(),
        ))
    }
}

impl std::fmt::Display for SigmaPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, (a, b)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{a}, {b}]")?;
        }
        write!(f, "]")
    }
}

fn add_slot(slot: &mut (BigInt, BigInt), power: i64, v: BigInt) {
    debug_assert!(power >= 0);
    if power % 2 == 0 {
        slot.0 += v;
    } else {
        slot.1 += v;
    }
}

/// The even-n equation before specializing the order-two symbol; its two
/// specializations recover [`b_equation`] at +1 and (up to one extra
/// integer root when 4 divides n) [`p_equation`] at -1.
pub fn even_sigma_equation(n: u32) -> Result<SigmaPoly> {
    let table = b_table(n)?;
    let ni = n as i64;
    if ni % 4 == 2 {
        let k = (ni + 2) / 4;
        let c2 = binom(2 * k, 2);
        let mut co = vec![(BigInt::zero(), BigInt::zero()); k as usize + 1];
        co[k as usize].0 = BigInt::one();
        for j in 0..k {
            add_slot(&mut co[j as usize], k + j, -table.entry(k, j));
            add_slot(&mut co[j as usize], k + j - 1, &c2 * table.entry(k - 1, j));
        }
        Ok(SigmaPoly { coeffs: co })
    } else {
        let k = ni / 4;
        let c2 = binom(2 * k, 2) * binom(2 * k + 2, 2);
        let four_k2 = BigInt::from(4 * k * k);
        let mut co = vec![(BigInt::zero(), BigInt::zero()); k as usize + 2];
        co[k as usize + 1].0 = BigInt::one();
        for j in 0..=k {
            add_slot(
                &mut co[j as usize],
                k + j - 1,
                &c2 * table.entry(k - 1, j) - table.entry(k, j - 1),
            );
            add_slot(
                &mut co[j as usize],
                k + j,
                &c2 * table.entry(k - 1, j) + &four_k2 * table.entry(k, j),
            );
        }
        Ok(SigmaPoly { coeffs: co })
    }
}

/// The monic even-n equation for the symmetric branch: degree n/4 + 1 when
/// 4 divides n, degree (n+2)/4 otherwise.
pub fn b_equation(n: u32) -> Result<IntPoly> {
    let table = b_table(n)?;
    let ni = n as i64;
    if ni % 4 == 2 {
        let k = (ni + 2) / 4;
        let c2 = binom(2 * k, 2);
        let mut c = vec![BigInt::zero(); k as usize + 1];
        c[k as usize] = BigInt::one();
        for j in 0..k {
            c[j as usize] = -(table.entry(k, j) - &c2 * table.entry(k - 1, j));
        }
        Ok(IntPoly::new(c))
    } else {
        let k = ni / 4;
        let c2 = binom(2 * k, 2) * binom(2 * k + 2, 2);
        let four_k2 = BigInt::from(4 * k * k);
        let mut c = vec![BigInt::zero(); k as usize + 2];
        c[k as usize + 1] = BigInt::one();
        for j in 0..=k {
            c[j as usize] = BigInt::from(2) * &c2 * table.entry(k - 1, j)
                + &four_k2 * table.entry(k, j)
                - table.entry(k, j - 1);
        }
        Ok(IntPoly::new(c))
    }
}

/// The monic even-n equation for the antisymmetric branch: degree n/4 when
/// 4 divides n, degree (n+2)/4 otherwise.
pub fn p_equation(n: u32) -> Result<IntPoly> {
    let table = b_table(n)?;
    let ni = n as i64;
    let (k, with_lower) = if ni % 4 == 2 {
        ((ni + 2) / 4, true)
    } else {
        (ni / 4, false)
    };
    let c2 = binom(2 * k, 2);
    let mut c = vec![BigInt::zero(); k as usize + 1];
    c[k as usize] = BigInt::one();
    for j in 0..k {
        let base = if with_lower {
            table.entry(k, j) + &c2 * table.entry(k - 1, j)
        } else {
            table.entry(k, j)
        };
        let signed = if (k + j) % 2 == 0 { base } else { -base };
        c[j as usize] = -signed;
    }
    Ok(IntPoly::new(c))
}

/// Factored forms of the two even-n equations, as (symmetric branch,
/// antisymmetric branch); every root is an explicit integer quadratic in
/// the row index.
pub fn even_products(n: u32) -> Result<(IntPoly, IntPoly)> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::InvalidArgument(format!(
            "factored even equations require even n >= 4, got {n}"
        )));
    }
    let ni = n as i64;
    let (b_roots, p_roots): (Vec<BigInt>, Vec<BigInt>) = if ni % 4 == 0 {
        let k = ni / 4;
        (
            (0..=k)
                .map(|j| BigInt::from(8 * (k - j) * (k - j) - 2 * k))
                .collect(),
            (0..k)
                .map(|j| BigInt::from(-8 * (k - j) * (k - j) + 10 * k - 8 * j - 2))
                .collect(),
        )
    } else {
        let k = (ni + 2) / 4;
        (
            (0..k)
                .map(|j| BigInt::from(8 * (k - j) * (k - j) - 10 * k + 8 * j + 3))
                .collect(),
            (0..k)
                .map(|j| BigInt::from(-8 * (k - j) * (k - j) + 18 * k - 16 * j - 9))
                .collect(),
        )
    };
    Ok((IntPoly::from_roots(&b_roots), IntPoly::from_roots(&p_roots)))
}

/// Outcome of cross-checking every representation of the degree-n split
/// equation(s) against each other and against the subspace spectra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitReport {
    pub n: u32,
    pub checks: Vec<Check>,
}

impl SplitReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check_eq(name: &str, anchor: &str, lhs: &IntPoly, rhs: &IntPoly) -> Check {
    Check::new(name, anchor, lhs == rhs, format!("{lhs} vs {rhs}"))
}

/// Cross-checks the equation assembly, its factored form, the spectrum of
/// the corresponding distance action, and (for even n) the two
/// specializations of the symbol-valued equation.
pub fn verify_split(n: u32) -> Result<SplitReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "split verification requires n >= 3, got {n}"
        )));
    }
    let mut checks = Vec::new();
    if n % 2 == 1 {
        let eq = odd_equation(n)?;
        let prod = odd_product(n)?;
        let (ch, mi) = char_and_min_poly(n, n - 1, SubspaceName::E)?;
        checks.push(check_eq("equation-vs-product", "odd/equation-product", &eq, &prod));
        checks.push(check_eq("product-vs-char-poly", "odd/product-spectrum", &prod, &ch));
        checks.push(check_eq("char-vs-min-poly", "odd/spectrum-squarefree", &ch, &mi));
        checks.push(Check::new(
            "equation-squarefree",
            "odd/squarefree",
            eq.is_squarefree(),
            format!("{eq}"),
        ));
    } else {
        let b = b_equation(n)?;
        let p = p_equation(n)?;
        let (b_prod, p_prod) = even_products(n)?;
        let sigma = even_sigma_equation(n)?;
        let (b_ch, b_mi) = char_and_min_poly(n, n - 2, SubspaceName::PlusE)?;
        let (p_ch, p_mi) = char_and_min_poly(n, n - 2, SubspaceName::MinusE)?;
        checks.push(check_eq("b-equation-vs-product", "even/b-equation-product", &b, &b_prod));
        checks.push(check_eq("p-equation-vs-product", "even/p-equation-product", &p, &p_prod));
        checks.push(check_eq("b-equation-vs-char-poly", "even/b-spectrum", &b, &b_ch));
        checks.push(check_eq("p-equation-vs-char-poly", "even/p-spectrum", &p, &p_ch));
        checks.push(check_eq("b-char-vs-min-poly", "even/b-spectrum-squarefree", &b_ch, &b_mi));
        checks.push(check_eq("p-char-vs-min-poly", "even/p-spectrum-squarefree", &p_ch, &p_mi));
        checks.push(check_eq(
            "symbol-at-plus-one-vs-b",
            "even/sigma-plus",
            &sigma.subst(1)?,
            &b,
        ));
        let minus = sigma.subst(-1)?;
        if n % 4 == 0 {
            let k = (n / 4) as i64;
            let extra = IntPoly::from_roots(&[BigInt::from(4 * k * k)]);
            checks.push(check_eq(
                "symbol-at-minus-one-vs-p-times-extra-root",
                "even/sigma-minus",
                &minus,
                &(&p * &extra),
            ));
        } else {
            checks.push(check_eq("symbol-at-minus-one-vs-p", "even/sigma-minus", &minus, &p));
        }
        checks.push(Check::new(
            "equations-squarefree",
            "even/squarefree",
            b.is_squarefree() && p.is_squarefree(),
            format!("{b} and {p}"),
        ));
    }
    Ok(SplitReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| big(c)).collect())
    }

    #[test]
    fn a_table_pinned_values() {
        let t = a_table(9).unwrap();
        assert_eq!(t.rows().len(), 6);
        assert_eq!(t.entry(0, 0), big(-1));
        assert_eq!(t.entry(1, 0), big(0));
        assert_eq!(t.entry(2, 0), big(9));
        assert_eq!(t.entry(3, 1), big(25));
        assert_eq!(t.entry(4, 0), big(-189));
        assert_eq!(t.entry(4, 2), big(46));
        assert_eq!(t.entry(5, 1), big(-789));
        assert_eq!(t.entry(5, 3), big(70));
        for k in 0..=5 {
            assert_eq!(t.entry(k, k), big(-1));
        }
        // Off-parity entries vanish.
        assert_eq!(t.entry(3, 0), big(0));
        assert_eq!(t.entry(4, 1), big(0));
        // Out of range reads as zero.
        assert_eq!(t.entry(2, 3), big(0));
        assert_eq!(t.entry(-1, 0), big(0));
    }

    #[test]
    fn a_table_rejects_even_n() {
        assert!(a_table(8).is_err());
        assert!(a_table(1).is_err());
    }

    #[test]
    fn a_closed_form_pinned_values() {
        assert_eq!(a_closed_form(9, 2, 1).unwrap(), big(9));
        assert_eq!(a_closed_form(9, 3, 1).unwrap(), big(25));
        assert_eq!(a_closed_form(11, 4, 2).unwrap().to_i64().unwrap(), -3 * 11 * 9);
        assert_eq!(
            a_closed_form(13, 5, 2).unwrap().to_i64().unwrap(),
            -(15 * 13 * 13 - 50 * 13 + 24)
        );
        for k in 0..=3 {
            assert_eq!(a_closed_form(11, k, 0).unwrap(), big(-1));
        }
    }

    #[test]
    fn a_closed_form_matches_table_in_stable_range() {
        for n in [5u32, 7, 9, 11, 13] {
            let t = a_table(n).unwrap();
            for k in 0..=(n - 2) / 2 {
                for i in 0..=k / 2 {
                    let closed = a_closed_form(n, k, i).unwrap();
                    assert_eq!(closed, t.entry(k as i64, (k - 2 * i) as i64), "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn a_closed_form_preconditions() {
        assert!(a_closed_form(9, 4, 0).is_err()); // 2k > n-2
        assert!(a_closed_form(9, 3, 2).is_err()); // k-2i < 0
        assert!(a_closed_form(8, 2, 1).is_err()); // even n
    }

    #[test]
    fn odd_equation_pinned() {
        assert_eq!(odd_equation(3).unwrap(), poly(&[-3, -2, 1]));
        assert_eq!(odd_equation(5).unwrap(), poly(&[15, -13, -3, 1]));
        assert_eq!(odd_equation(7).unwrap(), poly(&[105, 76, -34, -4, 1]));
    }

    #[test]
    fn odd_equation_matches_product() {
        for n in (3..=15u32).step_by(2) {
            assert_eq!(odd_equation(n).unwrap(), odd_product(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn b_table_pinned_values() {
        let t = b_table(6).unwrap();
        assert_eq!(t.rows().len(), 4);
        assert_eq!(t.rows()[2], vec![big(15), big(8), big(-1)]);

        let t = b_table(8).unwrap();
        assert_eq!(t.rows()[2], vec![big(28), big(12), big(-1)]);
        assert_eq!(t.rows()[3], vec![big(-448), big(-74), big(28), big(-1)]);

        let t = b_table(10).unwrap();
        assert_eq!(t.rows()[3], vec![big(-1080), big(-171), big(40), big(-1)]);

        let t = b_table(12).unwrap();
        assert_eq!(t.rows()[3], vec![big(-2112), big(-304), big(52), big(-1)]);
    }

    #[test]
    fn b_table_row_three_closed_forms() {
        for n in [6i64, 8, 10, 12, 14] {
            let t = b_table(n as u32).unwrap();
            let c_n2 = n * (n - 1) / 2;
            let c_nm2 = (n - 2) * (n - 3) / 2;
            assert_eq!(t.entry(3, 0), big(-4 * (n - 4) * c_n2));
            assert_eq!(t.entry(3, 1), big(c_n2 + 6 * c_nm2 - 8 * (n - 4) * (n - 2)));
            assert_eq!(t.entry(3, 2), big(6 * n - 20));
        }
    }

    #[test]
    fn b_table_rejects_odd_or_small_n() {
        assert!(b_table(7).is_err());
        assert!(b_table(2).is_err());
    }

    #[test]
    fn even_equations_pinned() {
        assert_eq!(b_equation(4).unwrap(), poly(&[-12, -4, 1]));
        assert_eq!(p_equation(4).unwrap(), poly(&[0, 1]));
        assert_eq!(b_equation(6).unwrap(), poly(&[-15, -14, 1]));
        assert_eq!(p_equation(6).unwrap(), poly(&[-15, 2, 1]));
        assert_eq!(b_equation(8).unwrap(), poly(&[448, -16, -28, 1]));
        assert_eq!(p_equation(8).unwrap(), poly(&[-28, 12, 1]));
        assert_eq!(b_equation(10).unwrap(), poly(&[1755, 411, -55, 1]));
        assert_eq!(p_equation(10).unwrap(), poly(&[-405, -69, 25, 1]));
        assert_eq!(b_equation(12).unwrap(), poly(&[-20592, 7968, 1336, -88, 1]));
        assert_eq!(p_equation(12).unwrap(), poly(&[-2112, 304, 52, 1]));
    }

    #[test]
    fn even_equations_match_products() {
        for n in (4..=16u32).step_by(2) {
            let (b_prod, p_prod) = even_products(n).unwrap();
            assert_eq!(b_equation(n).unwrap(), b_prod, "n={n}");
            assert_eq!(p_equation(n).unwrap(), p_prod, "n={n}");
        }
    }

    #[test]
    fn sigma_equation_pinned_n8() {
        let s = even_sigma_equation(8).unwrap();
        let want = vec![
            (big(448), big(0)),
            (big(-118), big(102)),
            (big(-16), big(-12)),
            (big(1), big(0)),
        ];
        assert_eq!(s.coeffs(), want.as_slice());
        assert_eq!(
            s.to_string(),
            "[[448, 0], [-118, 102], [-16, -12], [1, 0]]"
        );
    }

    #[test]
    fn sigma_specializations() {
        for n in (4..=16u32).step_by(2) {
            let s = even_sigma_equation(n).unwrap();
            assert_eq!(s.subst(1).unwrap(), b_equation(n).unwrap(), "n={n} at +1");
            let minus = s.subst(-1).unwrap();
            let p = p_equation(n).unwrap();
            if n % 4 == 0 {
                let k = (n / 4) as i64;
                let extra = IntPoly::from_roots(&[big(4 * k * k)]);
                assert_eq!(minus, &p * &extra, "n={n} at -1");
            } else {
                assert_eq!(minus, p, "n={n} at -1");
            }
        }
        assert!(even_sigma_equation(8).unwrap().subst(2).is_err());
    }

    #[test]
    fn verify_split_passes_small_range() {
        for n in 3..=12u32 {
            let report = verify_split(n).unwrap();
            assert!(
                report.all_pass(),
                "n={n}: {:?}",
                report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
        assert!(verify_split(2).is_err());
    }

    #[test]
    fn verify_split_check_names_are_stable() {
        let names: Vec<String> = verify_split(8)
            .unwrap()
            .checks
            .into_iter()
            .map(|c| c.name)
            .collect();
        assert!(names.contains(&"symbol-at-minus-one-vs-p-times-extra-root".to_string()));
        let names: Vec<String> = verify_split(7)
            .unwrap()
            .checks
            .into_iter()
            .map(|c| c.name)
            .collect();
        assert_eq!(
            names,
            vec![
                "equation-vs-product",
                "product-vs-char-poly",
                "char-vs-min-poly",
                "equation-squarefree"
            ]
        );
    }
}
