//! Bit vectors, the distance-k transform and its Krawtchouk eigenvalues,
//! Hadamard eigenvectors, the quotient action on homogeneous polynomials,
//! and the invariant-subspace spectra of that action.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{binom, IntPoly, Rational};
use crate::{Error, Result};

/// Largest length for which the dense fiber space (dimension 2^n) may be
/// materialized.
pub const MAX_FIBER_LEN: u32 = 24;

/// A bit vector of length n, packed into a machine word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct BitVector {
    n: u32,
    bits: u32,
}

impl BitVector {
    pub fn new(n: u32, bits: u32) -> Result<Self> {
        if n > 32 {
            return Err(Error::InvalidArgument(format!(
                "bit vector length {n} exceeds 32"
            )));
        }
        if n < 32 && bits >> n != 0 {
            return Err(Error::InvalidArgument(
                "bit pattern wider than the declared length".into(),
            ));
        }
        Ok(BitVector { n, bits })
    }

    pub fn zero(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.len() > 32 {
            return Err(Error::InvalidArgument("bit vector too long".into()));
        }
        let mut word = 0u32;
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::InvalidArgument("bits must be 0 or 1".into()));
            }
            word |= (b as u32) << i;
        }
        Ok(BitVector {
            n: bits.len() as u32,
            bits: word,
        })
    }

    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn word(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: u32) -> bool {
        debug_assert!(i < self.n);
        (self.bits >> i) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        self.check_len(other)?;
        Ok(BitVector {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    pub fn distance(&self, other: &BitVector) -> Result<u32> {
        Ok(self.xor(other)?.weight())
    }

    /// Parity of the scalar product, as a sign exponent.
    pub fn dot(&self, other: &BitVector) -> Result<u32> {
        self.check_len(other)?;
        Ok((self.bits & other.bits).count_ones() & 1)
    }

    /// Flips every coordinate.
    pub fn complement(&self) -> BitVector {
        let mask = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        BitVector {
            n: self.n,
            bits: self.bits ^ mask,
        }
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.n).map(|i| self.get(i) as u8).collect()
    }

    fn check_len(&self, other: &BitVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "bit vector length mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

/// Dense element of the fiber space: one rational coefficient per bit
/// vector of length n. Construction refuses n beyond [`MAX_FIBER_LEN`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberVector {
    n: u32,
    coeffs: Vec<Rational>,
}

impl FiberVector {
    pub fn zero(n: u32) -> Result<Self> {
        if n > MAX_FIBER_LEN {
            return Err(Error::InvalidArgument(format!(
                "fiber dimension 2^{n} is beyond the dense representation cap (n <= {MAX_FIBER_LEN})"
            )));
        }
        Ok(FiberVector {
            n,
            coeffs: vec![Rational::zero(); 1usize << n],
        })
    }

    /// The basis element concentrated on x.
    pub fn basis(x: &BitVector) -> Result<Self> {
        let mut v = Self::zero(x.len())?;
        v.coeffs[x.word() as usize] = Rational::one();
        Ok(v)
    }

    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x: &BitVector) -> &Rational {
        &self.coeffs[x.word() as usize]
    }

    pub fn coeff_at(&self, word: u32) -> &Rational {
        &self.coeffs[word as usize]
    }

    pub fn set(&mut self, x: &BitVector, v: Rational) {
        self.coeffs[x.word() as usize] = v;
    }

    pub fn add(&self, other: &FiberVector) -> Result<FiberVector> {
        if self.n != other.n {
            return Err(Error::InvalidArgument("fiber length mismatch".into()));
        }
        Ok(FiberVector {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> FiberVector {
        FiberVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

/// Krawtchouk eigenvalue: the coefficient of t^k in (1-t)^l (1+t)^(n-l),
/// equivalently the character sum of a weight-l vector over the distance-k
/// sphere.
pub fn krawtchouk(n: u32, k: u32, l: u32) -> Result<BigInt> {
    if k > n || l > n {
        return Err(Error::InvalidArgument(format!(
            "krawtchouk indices out of range: n={n}, k={k}, l={l}"
        )));
    }
    let (n, k, l) = (n as i64, k as i64, l as i64);
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let term = binom(l, i) * binom(n - l, k - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The distance-k transform: sends each basis vector to the sum of all
/// vectors at Hamming distance exactly k, extended linearly.
pub fn gamma_apply(n: u32, k: u32, v: &FiberVector) -> Result<FiberVector> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}")));
    }
    if v.len() != n {
        return Err(Error::InvalidArgument("fiber length mismatch".into()));
    }
    let size = 1u32 << n;
    let spheres: Vec<u32> = (0..size).filter(|z| z.count_ones() == k).collect();
    let mut out = FiberVector::zero(n)?;
    for y in 0..size {
        let mut acc = Rational::zero();
        for z in &spheres {
            acc += v.coeff_at(y ^ z);
        }
        out.coeffs[y as usize] = acc;
    }
    Ok(out)
}

/// Hadamard transform of a basis vector: coefficients (-1)^(x.y) over all y.
pub fn hadamard(x: &BitVector) -> Result<FiberVector> {
    let n = x.len();
    let mut out = FiberVector::zero(n)?;
    for y in 0..(1u32 << n) {
        let sign = (x.word() & y).count_ones() & 1;
        out.coeffs[y as usize] = if sign == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
    }
    Ok(out)
}

/// Homogeneous polynomial of degree n in two variables, stored as the
/// coefficient of the monomial X^l Y^(n-l) at index l.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomPoly {
    n: u32,
    coeffs: Vec<Rational>,
}

impl HomPoly {
    pub fn new(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != n as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "homogeneous degree {n} needs {} coefficients, got {}",
                n + 1,
                coeffs.len()
            )));
        }
        Ok(HomPoly { n, coeffs })
    }

    pub fn zero(n: u32) -> Self {
        HomPoly {
            n,
            coeffs: vec![Rational::zero(); n as usize + 1],
        }
    }

    /// The basis monomial X^l Y^(n-l).
    pub fn xi(n: u32, l: u32) -> Result<Self> {
        if l > n {
            return Err(Error::InvalidArgument(format!("index {l} exceeds {n}")));
        }
        let mut h = Self::zero(n);
        h.coeffs[l as usize] = Rational::one();
        Ok(h)
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, l: u32) -> &Rational {
        &self.coeffs[l as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &HomPoly) -> Result<HomPoly> {
        if self.n != other.n {
            return Err(Error::InvalidArgument("degree mismatch".into()));
        }
        Ok(HomPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &HomPoly) -> Result<HomPoly> {
        if self.n != other.n {
            return Err(Error::InvalidArgument("degree mismatch".into()));
        }
        Ok(HomPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> HomPoly {
        HomPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

/// Matrix of the quotient action of the distance-k transform in the
/// monomial basis, rows indexed by the input monomial. Applying it to a
/// coefficient vector means multiplying the vector from the left (row
/// vector times matrix); [`delta_apply`] computes the same action directly.
pub fn quotient_matrix(n: u32, k: u32) -> Result<Vec<Vec<BigInt>>> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}")));
    }
    let (ni, ki) = (n as i64, k as i64);
    let mut g = vec![vec![BigInt::zero(); n as usize + 1]; n as usize + 1];
    for l in 0..=ni {
        for i in 0..=ni {
            let d = ki + l - i;
            if d < 0 || d % 2 != 0 {
                continue;
            }
            let j = d / 2;
            g[l as usize][i as usize] = binom(l, j) * binom(ni - l, ki - j);
        }
    }
    Ok(g)
}

/// The quotient action of the distance-k transform on a homogeneous
/// polynomial.
pub fn delta_apply(n: u32, k: u32, h: &HomPoly) -> Result<HomPoly> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}")));
    }
    if h.degree() != n {
        return Err(Error::InvalidArgument(format!(
            "polynomial degree {} does not match n={n}",
            h.degree()
        )));
    }
    let (ni, ki) = (n as i64, k as i64);
    let mut out = HomPoly::zero(n);
    for l in 0..=ni {
        let c = h.coeff(l as u32);
        if c.is_zero() {
            continue;
        }
        for j in 0..=ki {
            let i = l + 2 * j - ki;
            if i < 0 || i > ni {
                continue;
            }
            let w = binom(l, ki - j) * binom(ni - l, j);
            if w.is_zero() {
                continue;
            }
            out.coeffs[i as usize] += c * Rational::from_integer(w);
        }
    }
    Ok(out)
}

/// Which eigenvector to build: the full vector, its even part, or its odd
/// part (even/odd with respect to flipping the sign of Y).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EigenVariant {
    Plain,
    E,
    O,
}

/// Simultaneous eigenvector of every distance transform, normalized so the
/// coefficient of X^k Y^(n-k) equals the eigenvalue krawtchouk(n, k, l);
/// variants e and o are the half-sum and half-difference with the partner
/// vector at index n-l.
pub fn eigen_vector(n: u32, l: u32, variant: EigenVariant) -> Result<HomPoly> {
    if l > n {
        return Err(Error::InvalidArgument(format!("index {l} exceeds {n}")));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let a = Rational::from_integer(krawtchouk(n, k, l)?);
        let v = match variant {
            EigenVariant::Plain => a,
            EigenVariant::E => (a + Rational::from_integer(krawtchouk(n, k, n - l)?)) * &half,
            EigenVariant::O => (a - Rational::from_integer(krawtchouk(n, k, n - l)?)) * &half,
        };
        coeffs.push(v);
    }
    HomPoly::new(n, coeffs)
}

/// Names of the invariant subspaces: symmetric/antisymmetric under swapping
/// X and Y (+/-), even/odd powers of Y (e/o), and their intersections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubspaceName {
    Plus,
    Minus,
    E,
    O,
    PlusE,
    PlusO,
    MinusE,
    MinusO,
}

impl std::str::FromStr for SubspaceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "+" => SubspaceName::Plus,
            "-" => SubspaceName::Minus,
            "e" => SubspaceName::E,
            "o" => SubspaceName::O,
            "+e" => SubspaceName::PlusE,
            "+o" => SubspaceName::PlusO,
            "-e" => SubspaceName::MinusE,
            "-o" => SubspaceName::MinusO,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown subspace name {s:?} (expected one of +, -, e, o, +e, +o, -e, -o)"
                )))
            }
        })
    }
}

impl std::fmt::Display for SubspaceName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SubspaceName::Plus => "+",
            SubspaceName::Minus => "-",
            SubspaceName::E => "e",
            SubspaceName::O => "o",
            SubspaceName::PlusE => "+e",
            SubspaceName::PlusO => "+o",
            SubspaceName::MinusE => "-e",
            SubspaceName::MinusO => "-o",
        };
        f.write_str(s)
    }
}

/// Spectrum of the distance-k quotient action restricted to one invariant
/// subspace: its dimension and one (l, eigenvalue) pair per basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceSpec {
    pub name: SubspaceName,
    pub dimension: usize,
    pub eigen_list: Vec<(u32, BigInt)>,
}

/// Eigenvalue list of the distance-k action on the named subspace.
///
/// The +/- subspaces are spanned by the eigenvectors with even/odd index
/// over the full range 0..=n and are invariant for every k. The e/o
/// flavored names require k even (for k odd those spaces are not
/// invariant), and the four intersections additionally require n even.
pub fn subspace_spectrum(n: u32, k: u32, name: SubspaceName) -> Result<SubspaceSpec> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}")));
    }
    let needs_even_k = !matches!(name, SubspaceName::Plus | SubspaceName::Minus);
    if needs_even_k && k % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "subspace {name} is not invariant under the distance-{k} action for odd k"
        )));
    }
    let needs_even_n = matches!(
        name,
        SubspaceName::PlusE | SubspaceName::PlusO | SubspaceName::MinusE | SubspaceName::MinusO
    );
    if needs_even_n && n % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "subspace {name} requires even n (the two splittings only commute there)"
        )));
    }

    let half = n / 2; // floor; exact for even n
    let indices: Vec<u32> = match name {
        SubspaceName::Plus => (0..=n).step_by(2).collect(),
        SubspaceName::Minus => (1..=n).step_by(2).collect(),
        SubspaceName::E => {
            if n % 2 == 0 {
                (0..=half).collect()
            } else {
                (0..=(n - 1) / 2).collect()
            }
        }
        SubspaceName::O => {
            if n % 2 == 0 {
                (0..half).collect()
            } else {
                (0..=(n - 1) / 2).collect()
            }
        }
        SubspaceName::PlusE => (0..=half).step_by(2).collect(),
        SubspaceName::PlusO => (0..half).step_by(2).collect(),
        SubspaceName::MinusE => (1..=half).step_by(2).collect(),
        SubspaceName::MinusO => (1..half).step_by(2).collect(),
    };

    let mut eigen_list = Vec::with_capacity(indices.len());
    for l in indices {
        eigen_list.push((l, krawtchouk(n, k, l)?));
    }
    Ok(SubspaceSpec {
        name,
        dimension: eigen_list.len(),
        eigen_list,
    })
}

/// Characteristic and minimal polynomial of the distance-k action on the
/// named subspace: the product over the eigenvalue list with multiplicity,
/// and the squarefree product over distinct eigenvalues.
pub fn char_and_min_poly(n: u32, k: u32, name: SubspaceName) -> Result<(IntPoly, IntPoly)> {
    let spec = subspace_spectrum(n, k, name)?;
    let all: Vec<BigInt> = spec.eigen_list.iter().map(|(_, v)| v.clone()).collect();
    let distinct: Vec<BigInt> = all.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    Ok((IntPoly::from_roots(&all), IntPoly::from_roots(&distinct)))
}
