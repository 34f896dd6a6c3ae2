//! Exact bignum polynomials, rational matrices, affine expressions, and a
//! fraction-free linear solver. No floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Binomial coefficient with combinatorial conventions: zero whenever
/// `k < 0`, `n < 0`, or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Dense univariate polynomial over the integers, lowest degree first.
///
/// Invariant: the coefficient list is trimmed, i.e. the last entry is
/// nonzero. The zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The monomial X.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// Monic polynomial with exactly the given multiset of roots.
    pub fn from_roots(roots: &[BigInt]) -> Self {
        let mut p = Self::one();
        for r in roots {
            let factor = IntPoly::new(vec![-r.clone(), BigInt::one()]);
            p = &p * &factor;
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Quotient and remainder by a divisor with leading coefficient ±1
    /// (the only case where division stays in integer coefficients
    /// unconditionally).
    pub fn div_rem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by zero polynomial".into()))?;
        let lead = d.coeffs.last().unwrap();
        if !lead.abs().is_one() {
            return Err(Error::InvalidArgument(
                "divisor must have leading coefficient 1 or -1".into(),
            ));
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / lead;
            for i in 0..=dd {
                let t = &d.coeffs[i] * &q;
                rem[k + i] -= t;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quo[k] = q;
            if rem.len() > dd && rem.len() - 1 - dd >= k {
                // The leading term must strictly drop each round.
                unreachable!("division failed to reduce degree");
            }
        }
        Ok((IntPoly::new(quo), IntPoly::new(rem)))
    }

    /// Content (gcd of coefficients, nonnegative).
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: lead(d)^(deg p - deg d + 1) * p mod d.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap().clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for i in 0..=dd {
                let t = &d.coeffs[i] * &top;
                rem[k + i] -= t;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut p = self.primitive();
        let mut q = other.primitive();
        if p.is_zero() {
            return q;
        }
        while !q.is_zero() {
            if p.degree() < q.degree() {
                std::mem::swap(&mut p, &mut q);
                continue;
            }
            let r = p.pseudo_rem(&q).primitive();
            p = q;
            q = r;
        }
        p.primitive()
    }

    /// True when the polynomial has no repeated root, i.e. gcd(p, p') is
    /// constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::new(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::new(coeffs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

/// Renders as the lowest-first coefficient list, e.g. `[15, -13, -3, 1]`.
impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument("matrix dimension mismatch".into()));
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.get(k, j);
                    let cur = out.get(i, j) + t;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::InvalidArgument("matrix dimension mismatch".into()));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Exact rank via row elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let a = m.get(rank, j).clone();
                let b = m.get(p, j).clone();
                m.set(rank, j, b);
                m.set(p, j, a);
            }
            let pivot = m.get(rank, col).clone();
            for i in rank + 1..m.rows {
                let factor = m.get(i, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(i, j) - &factor * m.get(rank, j);
                    m.set(i, j, v);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Exact affine form `gx*(g_X - 1) + gy*(g_Y - 1) + c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineExpr {
    pub gx: Rational,
    pub gy: Rational,
    pub c: Rational,
}

impl AffineExpr {
    pub fn new(gx: Rational, gy: Rational, c: Rational) -> Self {
        AffineExpr { gx, gy, c }
    }

    pub fn from_ints(gx: i64, gy: i64, c: i64) -> Self {
        AffineExpr {
            gx: Rational::from_integer(gx.into()),
            gy: Rational::from_integer(gy.into()),
            c: Rational::from_integer(c.into()),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.gx.is_zero() && self.gy.is_zero() && self.c.is_zero()
    }

    pub fn add(&self, rhs: &AffineExpr) -> AffineExpr {
        AffineExpr {
            gx: &self.gx + &rhs.gx,
            gy: &self.gy + &rhs.gy,
            c: &self.c + &rhs.c,
        }
    }

    pub fn sub(&self, rhs: &AffineExpr) -> AffineExpr {
        AffineExpr {
            gx: &self.gx - &rhs.gx,
            gy: &self.gy - &rhs.gy,
            c: &self.c - &rhs.c,
        }
    }

    pub fn scale(&self, s: &Rational) -> AffineExpr {
        AffineExpr {
            gx: &self.gx * s,
            gy: &self.gy * s,
            c: &self.c * s,
        }
    }

    pub fn div(&self, s: &Rational) -> AffineExpr {
        AffineExpr {
            gx: &self.gx / s,
            gy: &self.gy / s,
            c: &self.c / s,
        }
    }

    /// Value at concrete genera.
    pub fn eval(&self, g_x: &Rational, g_y: &Rational) -> Rational {
        let one = Rational::one();
        &self.gx * (g_x - &one) + &self.gy * (g_y - &one) + &self.c
    }
}

/// Renders like `3(gx-1) - 5(gy-1) + 1`, dropping zero terms.
impl std::fmt::Display for AffineExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        if !self.gx.is_zero() {
            terms.push(format!("{}(gx-1)", self.gx));
        }
        if !self.gy.is_zero() {
            terms.push(format!("{}(gy-1)", self.gy));
        }
        if !self.c.is_zero() || terms.is_empty() {
            terms.push(format!("{}", self.c));
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        f.write_str(&out)
    }
}

/// Solves `A x = b` exactly by fraction-free elimination (Bareiss two-term
/// update with exact division), pivoting on the first nonzero entry at or
/// below the diagonal. The right-hand side is affine in `(g_X-1)`, `(g_Y-1)`;
/// internally it rides along as three extra rational columns.
pub fn solve_linear(a: &RatMatrix, b: &[AffineExpr]) -> Result<Vec<AffineExpr>> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::InvalidArgument("matrix not square".into()));
    }
    if b.len() != n {
        return Err(Error::InvalidArgument(
            "right-hand side length mismatch".into(),
        ));
    }
    let cols = n + 3;
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| a.get(i, j).clone()).collect();
            row.push(b[i].gx.clone());
            row.push(b[i].gy.clone());
            row.push(b[i].c.clone());
            row
        })
        .collect();

    let mut prev_pivot = Rational::one();
    for r in 0..n {
        let p = (r..n)
            .find(|&i| !m[i][r].is_zero())
            .ok_or_else(|| Error::SingularSystem(format!("no pivot in column {r}")))?;
        m.swap(r, p);
        let pivot = m[r][r].clone();
        for i in r + 1..n {
            for j in r + 1..cols {
                let v = (&m[i][j] * &pivot - &m[i][r] * &m[r][j]) / &prev_pivot;
                m[i][j] = v;
            }
            m[i][r] = Rational::zero();
        }
        prev_pivot = pivot;
    }

    let mut x = vec![AffineExpr::zero(); n];
    for i in (0..n).rev() {
        let mut acc = AffineExpr::new(m[i][n].clone(), m[i][n + 1].clone(), m[i][n + 2].clone());
        for j in i + 1..n {
            acc = acc.sub(&x[j].scale(&m[i][j]));
        }
        x[i] = acc.div(&m[i][i]);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn roots(rs: &[i64]) -> Vec<BigInt> {
        rs.iter().map(|&r| BigInt::from(r)).collect()
    }

    #[test]
    fn from_roots_empty_is_one() {
        assert_eq!(IntPoly::from_roots(&[]), IntPoly::one());
    }

    #[test]
    fn from_roots_expands_cubic() {
        // (X-1)(X+3)(X-5) = X^3 - 3X^2 - 13X + 15
        let p = IntPoly::from_roots(&roots(&[1, -3, 5]));
        assert_eq!(p, poly(&[15, -13, -3, 1]));
    }

    #[test]
    fn from_roots_repeated_root() {
        assert_eq!(IntPoly::from_roots(&roots(&[0, 0])), poly(&[0, 0, 1]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let p = &poly(&[1, 1]) * &poly(&[-1, 1]);
        assert_eq!(p, poly(&[-1, 0, 1]));
    }

    #[test]
    fn eval_at_root_is_zero() {
        let p = poly(&[-3, -2, 1]); // (X+1)(X-3)
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::zero());
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::zero());
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(-3));
    }

    #[test]
    fn add_zero_is_identity() {
        let p = poly(&[2, 0, 7]);
        assert_eq!(&p + &IntPoly::zero(), p);
    }

    #[test]
    fn display_lowest_first() {
        assert_eq!(poly(&[15, -13, -3, 1]).to_string(), "[15, -13, -3, 1]");
        assert_eq!(IntPoly::zero().to_string(), "[]");
    }

    #[test]
    fn div_rem_exact_by_monic() {
        let d = poly(&[-28, 12, 1]);
        let p = &d * &poly(&[-16, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, poly(&[-16, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn div_rem_with_remainder() {
        let p = poly(&[1, 0, 1]); // X^2 + 1
        let d = poly(&[-1, 1]); // X - 1
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, poly(&[1, 1]));
        assert_eq!(r, poly(&[2]));
    }

    #[test]
    fn squarefree_detection() {
        assert!(IntPoly::from_roots(&roots(&[1, -2])).is_squarefree());
        assert!(!IntPoly::from_roots(&roots(&[1, 1, -2])).is_squarefree());
        // Non-monic with content: 4(X-1)(X+1)
        assert!(poly(&[-4, 0, 4]).is_squarefree());
    }

    #[test]
    fn gcd_of_products() {
        let a = IntPoly::from_roots(&roots(&[1, 2, 3]));
        let b = IntPoly::from_roots(&roots(&[2, 3, 4]));
        assert_eq!(a.gcd(&b), IntPoly::from_roots(&roots(&[2, 3])));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let one = Rational::one;
        let m = RatMatrix::from_rows(vec![
            vec![one(), one() + one()],
            vec![one() + one(), one() + one() + one() + one()],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(RatMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![
            AffineExpr::from_ints(1, 2, 3),
            AffineExpr::from_ints(-4, 0, 5),
        ];
        let x = solve_linear(&RatMatrix::identity(2), &b).unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_symmetric_pair() {
        // x + y = gx-1, x - y = gx-1  =>  x = gx-1, y = 0
        let a = RatMatrix::from_rows(vec![
            vec![Rational::one(), Rational::one()],
            vec![Rational::one(), -Rational::one()],
        ])
        .unwrap();
        let b = vec![AffineExpr::from_ints(1, 0, 0), AffineExpr::from_ints(1, 0, 0)];
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(x[0], AffineExpr::from_ints(1, 0, 0));
        assert!(x[1].is_zero());
    }

    #[test]
    fn solve_reports_singular() {
        let a = RatMatrix::from_rows(vec![
            vec![Rational::one(), Rational::one()],
            vec![Rational::one(), Rational::one()],
        ])
        .unwrap();
        let b = vec![AffineExpr::zero(), AffineExpr::zero()];
        assert!(matches!(
            solve_linear(&a, &b),
            Err(Error::SingularSystem(_))
        ));
    }

    #[test]
    fn solve_needs_row_swap() {
        // First pivot is zero; solver must pick the lower row.
        let a = RatMatrix::from_rows(vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::zero()],
        ])
        .unwrap();
        let b = vec![AffineExpr::from_ints(0, 1, 0), AffineExpr::from_ints(1, 0, 0)];
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(x[0], AffineExpr::from_ints(1, 0, 0));
        assert_eq!(x[1], AffineExpr::from_ints(0, 1, 0));
    }

    #[test]
    fn affine_eval() {
        // 3(gx-1) - 5(gy-1) at gx=4, gy=2 is 9 - 5 = 4
        let e = AffineExpr::from_ints(3, -5, 0);
        let v = e.eval(
            &Rational::from_integer(4.into()),
            &Rational::from_integer(2.into()),
        );
        assert_eq!(v, Rational::from_integer(4.into()));
    }

    #[test]
    fn affine_display() {
        assert_eq!(AffineExpr::from_ints(3, -5, 0).to_string(), "3(gx-1) - 5(gy-1)");
        assert_eq!(AffineExpr::from_ints(0, 1, 1).to_string(), "1(gy-1) + 1");
        assert_eq!(AffineExpr::zero().to_string(), "0");
    }

    #[test]
    fn binom_guards() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(5, 0), BigInt::one());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(-2, 1), BigInt::zero());
        assert_eq!(binom(25, 12), BigInt::from(5200300i64));
    }
}
