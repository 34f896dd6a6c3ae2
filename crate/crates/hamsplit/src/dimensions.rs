//! Genus formulas for the lifted curves, symbolic trace ledgers for powers
//! of the correspondence, and the per-degree linear systems whose solutions
//! are the dimensions of the eigen-components, everything expressed as
//! affine expressions in (g_X - 1) and (g_Y - 1).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::correspondence::{a_table, even_products, odd_product};
use crate::exactalg::{AffineExpr, RatMatrix, Rational};
use crate::{Check, Error, Result};

/// Which curve in the covering tower a genus refers to: one component of
/// the full even-flip lift, or one component of the intermediate quotient
/// that only remembers flips up to a global complement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenusKind {
    CtildeComponent,
    CComponent,
}

/// Component genus as an affine expression in (g_X - 1) and (g_Y - 1).
///
/// Both kinds assume the fiber splits into two components of common genus;
/// the quotient kind additionally needs even n for the global complement
/// to preserve components.
pub fn genus(n: u32, kind: GenusKind) -> Result<AffineExpr> {
    match kind {
        GenusKind::CtildeComponent => {
            if n < 3 {
                return Err(Error::InvalidArgument(format!(
                    "lift component genus needs n >= 3, got {n}"
                )));
            }
            let scale = BigInt::one() << (n - 3);
            Ok(AffineExpr {
                gx: Rational::from_integer(scale.clone()),
                gy: Rational::from_integer(-scale * BigInt::from(n as i64 - 4)),
                c: Rational::one(),
            })
        }
        GenusKind::CComponent => {
            if n < 4 || n % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "quotient component genus needs even n >= 4, got {n}"
                )));
            }
            let scale = BigInt::one() << (n - 4);
            Ok(AffineExpr {
                gx: Rational::from_integer(scale.clone()),
                gy: Rational::from_integer(-scale * BigInt::from(n as i64 - 4)),
                c: Rational::one(),
            })
        }
    }
}

/// Intersection numbers of the diagonal with powers of the correspondence
/// and the traces they determine, for exponents 0..=l_max.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceLedger {
    pub n: u32,
    /// Entry l is the diagonal intersection number with the l-th power.
    pub intersections: Vec<AffineExpr>,
    /// Entry l is the trace of the l-th power on the odd-side component.
    pub traces: Vec<AffineExpr>,
}

/// Builds the trace ledger for odd n: the exponent-zero intersection is
/// 2 - 2g of the lift, odd exponents vanish, exponent two picks up the
/// branch divisor degree, and higher even exponents reduce through the
/// odd-n coefficient table. Traces are n^l minus half the intersection.
pub fn trace_ledger(n: u32, l_max: u32) -> Result<TraceLedger> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::InvalidArgument(format!(
            "trace ledger requires odd n >= 3, got {n}"
        )));
    }
    if l_max > (n - 1) / 2 {
        return Err(Error::InvalidArgument(format!(
            "exponent bound {l_max} exceeds the reduction range (n-1)/2 = {}",
            (n - 1) / 2
        )));
    }
    let table = a_table(n)?;
    let scale = Rational::from_integer(BigInt::one() << (n - 2));
    let nm4 = Rational::from_integer(BigInt::from(n as i64 - 4));

    // 2 - 2g of the full lift: -2^(n-2) ((g_X - 1) - (n-4)(g_Y - 1)).
    let base = AffineExpr {
        gx: -scale.clone(),
        gy: scale.clone() * &nm4,
        c: Rational::zero(),
    };
    // Branch divisor degree times 2^(n-2): 2^(n-1) ((g_X-1) - n (g_Y-1)).
    let branch = AffineExpr {
        gx: &scale * Rational::from_integer(BigInt::from(2)),
        gy: -(&scale * Rational::from_integer(BigInt::from(2 * n as i64))),
        c: Rational::zero(),
    };

    let mut intersections: Vec<AffineExpr> = Vec::with_capacity(l_max as usize + 1);
    for l in 0..=l_max {
        let v = match l {
            0 => base.clone(),
            2 => base
                .scale(&Rational::from_integer(BigInt::from(n as i64)))
                .add(&branch),
            _ if l % 2 == 1 => AffineExpr::zero(),
            _ => {
                let mut acc = AffineExpr::zero();
                for j in (0..l).step_by(2) {
                    let coeff = Rational::from_integer(table.entry(l as i64, j as i64));
                    acc = acc.add(&intersections[j as usize].scale(&coeff));
                }
                acc
            }
        };
        intersections.push(v);
    }

    let minus_half = Rational::new(BigInt::from(-1), BigInt::from(2));
    let mut traces = Vec::with_capacity(l_max as usize + 1);
    for (l, inter) in intersections.iter().enumerate() {
        let mut t = inter.scale(&minus_half);
        t.c += Rational::from_integer(BigInt::from(n as i64).pow(l as u32));
        traces.push(t);
    }

    Ok(TraceLedger {
        n,
        intersections,
        traces,
    })
}

/// Which equation family a dimension entry multiplies: D entries pair with
/// the antisymmetric-branch roots (and carry all of odd n), E entries with
/// the symmetric-branch roots.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Side {
    D,
    E,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::D => 'd',
            Side::E => 'e',
        }
    }
}

/// Dimensions of the eigen-components, keyed by (side, eigenvalue). Each
/// value is an affine expression in (g_X - 1) and (g_Y - 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimTable {
    pub n: u32,
    entries: BTreeMap<(Side, BigInt), AffineExpr>,
}

impl DimTable {
    pub fn entries(&self) -> &BTreeMap<(Side, BigInt), AffineExpr> {
        &self.entries
    }

    pub fn get(&self, side: Side, eigenvalue: i64) -> Option<&AffineExpr> {
        self.entries.get(&(side, BigInt::from(eigenvalue)))
    }

    /// Rendered key, e.g. "d_2" or "e_-4".
    pub fn label(side: Side, eigenvalue: &BigInt) -> String {
        format!("{}_{}", side.letter(), eigenvalue)
    }
}

struct DimSystem {
    unknowns: Vec<(Side, i64)>,
    rows: Vec<Vec<i64>>,
    rhs: Vec<AffineExpr>,
}

/// The curated linear systems, one per degree: identity rows for the two
/// entries known outright, component-sum rows tied to the genus formulas,
/// and trace rows. All solved exactly at call time.
fn dim_system(n: u32) -> Option<DimSystem> {
    use Side::{D, E};
    let af = AffineExpr::from_ints;
    let sys = match n {
        3 => DimSystem {
            unknowns: vec![(D, -1), (D, 3)],
            rows: vec![vec![1, 0], vec![0, 1]],
            rhs: vec![af(1, 0, 0), af(0, 1, 1)],
        },
        4 => DimSystem {
            unknowns: vec![(D, 0), (E, -2), (E, 6)],
            rows: vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]],
            rhs: vec![af(1, 0, 0), af(0, 1, 1), af(1, 0, 1)],
        },
        5 => DimSystem {
            unknowns: vec![(D, -3), (D, 1), (D, 5)],
            rows: vec![vec![1, 0, 0], vec![0, 0, 1], vec![1, 1, 1]],
            rhs: vec![af(1, 0, 0), af(0, 1, 1), af(4, -4, 1)],
        },
        6 => DimSystem {
            unknowns: vec![(D, -5), (D, 3), (E, -1), (E, 15)],
            rows: vec![
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 1],
            ],
            rhs: vec![af(1, 0, 0), af(0, 1, 1), af(4, -8, 0), af(4, -8, 1)],
        },
        7 => DimSystem {
            unknowns: vec![(D, -5), (D, -1), (D, 3), (D, 7)],
            rows: vec![
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![1, 1, 1, 1],
                vec![-5, -1, 3, 7],
            ],
            rhs: vec![af(1, 0, 0), af(0, 1, 1), af(16, -48, 1), af(0, 0, 7)],
        },
        8 => DimSystem {
            unknowns: vec![(D, -16), (D, -14), (D, 2), (E, -4), (E, 4), (E, 28)],
            rows: vec![
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1],
                vec![1, 1, 1, 1, 1, 1],
                vec![0, 0, 0, 1, 1, 1],
                vec![-16, -14, 2, -4, 4, 28],
                vec![0, 1, 1, 0, 0, 0],
            ],
            rhs: vec![
                af(1, 0, 0),
                af(0, 1, 1),
                af(32, -128, 1),
                af(16, -64, 1),
                af(0, 0, 28),
                af(16, -64, 0),
            ],
        },
        9 => DimSystem {
            unknowns: vec![(D, -7), (D, -3), (D, 1), (D, 5), (D, 9)],
            rows: vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1],
                vec![1, 1, 1, 1, 1],
                vec![-7, -3, 1, 5, 9],
                vec![49, 9, 1, 25, 81],
            ],
            rhs: vec![
                af(1, 0, 0),
                af(0, 1, 1),
                af(64, -320, 1),
                af(0, 0, 9),
                af(448, -1728, 81),
            ],
        },
        10 => DimSystem {
            unknowns: vec![(D, -27), (D, -3), (D, 5), (E, -3), (E, 13), (E, 45)],
            rows: vec![
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1],
                vec![1, 1, 1, 1, 1, 1],
                vec![0, 0, 0, 1, 1, 1],
                vec![-27, -3, 5, -3, 13, 45],
                vec![0, 0, 0, -3, 13, 45],
            ],
            rhs: vec![
                af(1, 0, 0),
                af(0, 1, 1),
                af(128, -768, 1),
                af(64, -384, 1),
                af(0, 0, 45),
                af(-64, 640, 45),
            ],
        },
        _ => return None,
    };
    Some(sys)
}

fn solve_dim_system(n: u32, sys: DimSystem) -> Result<DimTable> {
    let m = sys.unknowns.len();
    let a = RatMatrix::from_fn(m, m, |r, c| Rational::from_integer(BigInt::from(sys.rows[r][c])));
    let solution = crate::exactalg::solve_linear(&a, &sys.rhs)?;
    let mut entries = BTreeMap::new();
    for ((side, eig), value) in sys.unknowns.into_iter().zip(solution) {
        entries.insert((side, BigInt::from(eig)), value);
    }
    Ok(DimTable { n, entries })
}

/// Dimension table for 3 <= n <= 10, solved from the curated system.
pub fn dim_table(n: u32) -> Result<DimTable> {
    let sys = dim_system(n).ok_or_else(|| {
        Error::Unsupported(format!(
            "dimension systems are curated for 3 <= n <= 10, got {n}"
        ))
    })?;
    solve_dim_system(n, sys)
}

/// Re-derives the odd-n dimension table without the curated rows: unknowns
/// are the equation roots, the two outer entries are known outright, the
/// sum is the component genus, and the remaining equations come from the
/// trace ledger. Square (and solvable) for odd n >= 5.
pub fn rederive_odd(n: u32) -> Result<DimTable> {
    if n % 2 == 0 || n < 5 {
        return Err(Error::InvalidArgument(format!(
            "trace re-derivation applies to odd n >= 5, got {n}"
        )));
    }
    let k = (n - 1) / 2;
    let product = odd_product(n)?;
    let mut roots: Vec<BigInt> = Vec::new();
    for i in 0..=k as i64 {
        let v = BigInt::from(2 * i + 1);
        roots.push(if (i + k as i64) % 2 == 0 { v } else { -v });
    }
    roots.sort();
    debug_assert_eq!(roots.len(), k as usize + 1);
    // The product has exactly these roots; keep them tied together.
    debug_assert_eq!(crate::exactalg::IntPoly::from_roots(&roots), product);

    let m = roots.len();
    let top = BigInt::from(n as i64);
    let low = BigInt::from(-(n as i64) + 2);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<AffineExpr> = Vec::with_capacity(m);

    rows.push(
        roots
            .iter()
            .map(|r| {
                if *r == top {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    );
    rhs.push(AffineExpr::from_ints(0, 1, 1));
    rows.push(
        roots
            .iter()
            .map(|r| {
                if *r == low {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    );
    rhs.push(AffineExpr::from_ints(1, 0, 0));

    rows.push(vec![Rational::one(); m]);
    rhs.push(genus(n, GenusKind::CtildeComponent)?);

    let ledger = trace_ledger(n, k.saturating_sub(2))?;
    for l in 1..=(k as i64 - 2) {
        rows.push(
            roots
                .iter()
                .map(|r| Rational::from_integer(r.pow(l as u32)))
                .collect(),
        );
        rhs.push(ledger.traces[l as usize].clone());
    }

    let a = RatMatrix::from_rows(rows)?;
    let solution = crate::exactalg::solve_linear(&a, &rhs)?;
    let mut entries = BTreeMap::new();
    for (root, value) in roots.into_iter().zip(solution) {
        entries.insert((Side::D, root), value);
    }
    Ok(DimTable { n, entries })
}

/// Consistency report for one degree's dimension table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConsistencyReport {
    pub n: u32,
    pub checks: Vec<Check>,
}

impl ConsistencyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn sum_side(table: &DimTable, side: Side) -> AffineExpr {
    let mut acc = AffineExpr::zero();
    for ((s, _), v) in table.entries() {
        if *s == side {
            acc = acc.add(v);
        }
    }
    acc
}

/// Cross-checks a dimension table against the genus formulas, the equation
/// roots, the entries known outright, and (for n = 5, 7, 9) the trace
/// re-derivation.
pub fn dim_consistency(n: u32) -> Result<ConsistencyReport> {
    let table = dim_table(n)?;
    let mut checks = Vec::new();
    let g_y = AffineExpr::from_ints(0, 1, 1);
    let g_x_minus_1 = AffineExpr::from_ints(1, 0, 0);

    if n % 2 == 1 {
        let total = sum_side(&table, Side::D);
        let g = genus(n, GenusKind::CtildeComponent)?;
        checks.push(Check::new(
            "sum-matches-component-genus",
            "dims/sum-genus",
            total == g,
            format!("{total} vs {g}"),
        ));

        let mut keys: Vec<BigInt> = table.entries().keys().map(|(_, e)| e.clone()).collect();
        keys.sort();
        let eq = odd_product(n)?;
        let roots_poly = crate::exactalg::IntPoly::from_roots(&keys);
        checks.push(Check::new(
            "keys-match-equation-roots",
            "dims/keys-roots",
            roots_poly == eq,
            format!("{roots_poly} vs {eq}"),
        ));

        let top = table.get(Side::D, n as i64);
        let low = table.get(Side::D, -(n as i64) + 2);
        checks.push(Check::new(
            "known-entries",
            "dims/known-entries",
            top == Some(&g_y) && low == Some(&g_x_minus_1),
            format!("d_{} = {top:?}, d_{} = {low:?}", n, -(n as i64) + 2),
        ));

        if matches!(n, 5 | 7 | 9) {
            let redone = rederive_odd(n)?;
            checks.push(Check::new(
                "trace-rederivation-agrees",
                "dims/rederivation",
                redone == table,
                format!("{} entries", redone.entries().len()),
            ));
        }
    } else {
        let d_sum = sum_side(&table, Side::D);
        let e_sum = sum_side(&table, Side::E);
        let g = genus(n, GenusKind::CComponent)?;
        let mut g_minus_1 = g.clone();
        g_minus_1.c -= Rational::one();
        checks.push(Check::new(
            "e-sum-matches-component-genus",
            "dims/sum-genus",
            e_sum == g,
            format!("{e_sum} vs {g}"),
        ));
        checks.push(Check::new(
            "d-sum-matches-component-genus-minus-one",
            "dims/sum-genus",
            d_sum == g_minus_1,
            format!("{d_sum} vs {g_minus_1}"),
        ));

        let (b_prod, p_prod) = even_products(n)?;
        let e_keys: Vec<BigInt> = table
            .entries()
            .keys()
            .filter(|(s, _)| *s == Side::E)
            .map(|(_, e)| e.clone())
            .collect();
        let e_poly = crate::exactalg::IntPoly::from_roots(&e_keys);
        checks.push(Check::new(
            "e-keys-match-symmetric-roots",
            "dims/keys-roots",
            e_poly == b_prod,
            format!("{e_poly} vs {b_prod}"),
        ));

        // Every antisymmetric-branch root must appear as a d-key; any
        // extra d-key must carry dimension zero.
        let d_keys: Vec<BigInt> = table
            .entries()
            .keys()
            .filter(|(s, _)| *s == Side::D)
            .map(|(_, e)| e.clone())
            .collect();
        let p_roots: Vec<BigInt> = {
            let mut v = Vec::new();
            let mut rem = p_prod.clone();
            for key in &d_keys {
                let factor = crate::exactalg::IntPoly::from_roots(std::slice::from_ref(key));
                if let Ok((q, r)) = rem.div_rem(&factor) {
                    if r.is_zero() {
                        rem = q;
                        v.push(key.clone());
                    }
                }
            }
            v
        };
        let extras_zero = d_keys
            .iter()
            .filter(|k| !p_roots.contains(k))
            .all(|k| table.entries()[&(Side::D, k.clone())].is_zero());
        let covered = p_roots.len() == p_prod.degree().unwrap_or(0);
        checks.push(Check::new(
            "d-keys-cover-antisymmetric-roots",
            "dims/keys-roots",
            covered && extras_zero,
            format!("roots {p_prod}, keys {d_keys:?}"),
        ));

        let top_e = table.get(Side::E, (n as i64) * (n as i64 - 1) / 2);
        let low_eig = -((n as i64 - 1) * (n as i64 - 4)) / 2;
        let low_d = table.get(Side::D, low_eig);
        checks.push(Check::new(
            "known-entries",
            "dims/known-entries",
            top_e == Some(&g_y) && low_d == Some(&g_x_minus_1),
            format!("e_top = {top_e:?}, d_{low_eig} = {low_d:?}"),
        ));
    }

    Ok(ConsistencyReport { n, checks })
}
