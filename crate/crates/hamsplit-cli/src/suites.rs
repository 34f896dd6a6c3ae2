//! Verification suites behind the `verify` sweep. Each suite decides per
//! degree whether its checks apply, runs them exactly, and reports records;
//! degrees outside a suite's range yield skipped records so the sweep shows
//! coverage.

use num_bigint::BigInt;
use num_traits::Zero;

use hamsplit::correspondence::{odd_product, verify_split};
use hamsplit::covering::{ramification_and_genus, random_simple_monodromy};
use hamsplit::dimensions::{dim_consistency, genus, GenusKind};
use hamsplit::exactalg::{binom, IntPoly, Rational};
use hamsplit::hamming::{
    char_and_min_poly, delta_apply, eigen_vector, krawtchouk, quotient_matrix, EigenVariant,
    HomPoly, SubspaceName,
};
use hamsplit::tridiag::{cnplus, det_tridiag, matchings_coeff, TridiagSpec};
use hamsplit::Error;

use crate::report::CheckRecord;

pub trait Suite {
    fn name(&self) -> &'static str;
    fn run(&self, n: u32) -> Vec<CheckRecord>;
}

pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(OddSuite),
        Box::new(EvenSuite),
        Box::new(HammingSuite),
        Box::new(DimsSuite),
        Box::new(TridiagSuite),
        Box::new(CoveringSuite),
    ]
}

pub fn suite_by_name(name: &str) -> Option<Box<dyn Suite>> {
    registry().into_iter().find(|s| s.name() == name)
}

fn error_record(n: u32, suite: &str, err: &Error) -> CheckRecord {
    CheckRecord::outcome(n, "suite-error", &format!("{suite}/error"), false, err.to_string())
}

struct OddSuite;

impl Suite for OddSuite {
    fn name(&self) -> &'static str {
        "odd"
    }

    fn run(&self, n: u32) -> Vec<CheckRecord> {
        if n < 3 || n % 2 == 0 {
            return vec![CheckRecord::skipped(
                n,
                "split",
                "odd/split",
                "requires odd n >= 3",
            )];
        }
        match verify_split(n) {
            Ok(report) => report
                .checks
                .iter()
                .map(|c| CheckRecord::from_check(n, c))
                .collect(),
            Err(e) => vec![error_record(n, self.name(), &e)],
        }
    }
}

struct EvenSuite;

impl Suite for EvenSuite {
    fn name(&self) -> &'static str {
        "even"
    }

    fn run(&self, n: u32) -> Vec<CheckRecord> {
        if n < 4 || n % 2 == 1 {
            return vec![CheckRecord::skipped(
                n,
                "split",
                "even/split",
                "requires even n >= 4",
            )];
        }
        match verify_split(n) {
            Ok(report) => report
                .checks
                .iter()
                .map(|c| CheckRecord::from_check(n, c))
                .collect(),
            Err(e) => vec![error_record(n, self.name(), &e)],
        }
    }
}

struct HammingSuite;

fn character_sum_check(n: u32) -> Result<(bool, String), Error> {
    let mut table = vec![vec![BigInt::zero(); n as usize + 1]; n as usize + 1];
    for z in 0u32..(1 << n) {
        let k = z.count_ones() as usize;
        for l in 0..=n {
            let x = (1u32 << l) - 1;
            if (x & z).count_ones() % 2 == 0 {
                table[k][l as usize] += 1;
            } else {
                table[k][l as usize] -= 1;
            }
        }
    }
    for k in 0..=n {
        for l in 0..=n {
            if krawtchouk(n, k, l)? != table[k as usize][l as usize] {
                return Ok((false, format!("mismatch at k={k} l={l}")));
            }
        }
    }
    Ok((true, format!("{} values", (n + 1) * (n + 1))))
}

fn symmetry_check(n: u32) -> Result<(bool, String), Error> {
    for k in 0..=n {
        for l in 0..=n {
            let base = krawtchouk(n, k, l)?;
            let sign_k = if k % 2 == 0 { 1 } else { -1 };
            let sign_l = if l % 2 == 0 { 1 } else { -1 };
            if krawtchouk(n, k, n - l)? != base.clone() * sign_k {
                return Ok((false, format!("weight flip fails at k={k} l={l}")));
            }
            if krawtchouk(n, n - k, l)? != base.clone() * sign_l {
                return Ok((false, format!("order flip fails at k={k} l={l}")));
            }
            let lhs = binom(n as i64, l as i64) * &base;
            if lhs != binom(n as i64, k as i64) * krawtchouk(n, l, k)? {
                return Ok((false, format!("weighted swap fails at k={k} l={l}")));
            }
        }
    }
    Ok((true, "three identities".to_string()))
}

fn orthogonality_check(n: u32) -> Result<(bool, String), Error> {
    for k in 0..=n {
        for j in 0..=n {
            let mut acc = BigInt::zero();
            for l in 0..=n {
                acc += binom(n as i64, l as i64) * krawtchouk(n, k, l)? * krawtchouk(n, j, l)?;
            }
            let want = if k == j {
                (BigInt::from(1) << n) * binom(n as i64, k as i64)
            } else {
                BigInt::zero()
            };
            if acc != want {
                return Ok((false, format!("fails at k={k} j={j}")));
            }
        }
    }
    Ok((true, "weighted inner products".to_string()))
}

fn quotient_action_check(n: u32) -> Result<(bool, String), Error> {
    let coeffs: Vec<Rational> = (0..=n)
        .map(|l| Rational::from_integer(BigInt::from(l as i64 + 1)))
        .collect();
    let h = HomPoly::new(n, coeffs.clone())?;
    for k in 0..=n {
        let direct = delta_apply(n, k, &h)?;
        let matrix = quotient_matrix(n, k)?;
        for i in 0..=(n as usize) {
            let mut acc = Rational::zero();
            for (l, c) in coeffs.iter().enumerate() {
                acc += c * Rational::from_integer(matrix[l][i].clone());
            }
            if &acc != direct.coeff(i as u32) {
                return Ok((false, format!("row action fails at k={k} coeff {i}")));
            }
        }
    }
    Ok((true, "matrix rows agree with the direct action".to_string()))
}

fn eigenvector_check(n: u32) -> Result<(bool, String), Error> {
    for l in 0..=n {
        for k in 0..=n {
            let lambda = Rational::from_integer(krawtchouk(n, k, l)?);
            let plain = eigen_vector(n, l, EigenVariant::Plain)?;
            if delta_apply(n, k, &plain)? != plain.scale(&lambda) {
                return Ok((false, format!("plain eigenvector fails at l={l} k={k}")));
            }
            let even_part = eigen_vector(n, l, EigenVariant::E)?;
            let odd_part = eigen_vector(n, l, EigenVariant::O)?;
            let de = delta_apply(n, k, &even_part)?;
            let do_ = delta_apply(n, k, &odd_part)?;
            let ok = if k % 2 == 0 {
                de == even_part.scale(&lambda) && do_ == odd_part.scale(&lambda)
            } else {
                de == odd_part.scale(&lambda) && do_ == even_part.scale(&lambda)
            };
            if !ok {
                return Ok((false, format!("parity behavior fails at l={l} k={k}")));
            }
        }
    }
    Ok((true, "eigen relations and parity swap".to_string()))
}

impl Suite for HammingSuite {
    fn name(&self) -> &'static str {
        "hamming"
    }

    fn run(&self, n: u32) -> Vec<CheckRecord> {
        if n < 1 {
            return vec![CheckRecord::skipped(
                n,
                "transforms",
                "hamming/transforms",
                "requires n >= 1",
            )];
        }
        type BoundedCheck = (
            &'static str,
            &'static str,
            u32,
            fn(u32) -> Result<(bool, String), Error>,
        );
        let checks: [BoundedCheck; 5] = [
            ("character-sum", "hamming/character-sum", 12, character_sum_check),
            ("index-symmetries", "hamming/symmetries", 20, symmetry_check),
            ("orthogonality", "hamming/orthogonality", 20, orthogonality_check),
            ("quotient-action", "hamming/quotient-action", 16, quotient_action_check),
            ("eigenvector-relations", "hamming/eigenvectors", 12, eigenvector_check),
        ];
        let mut out = Vec::new();
        for (name, anchor, max_n, f) in checks {
            if n > max_n {
                out.push(CheckRecord::skipped(
                    n,
                    name,
                    anchor,
                    &format!("kept to n <= {max_n} for runtime"),
                ));
                continue;
            }
            match f(n) {
                Ok((pass, detail)) => out.push(CheckRecord::outcome(n, name, anchor, pass, detail)),
                Err(e) => out.push(error_record(n, self.name(), &e)),
            }
        }
        out
    }
}

struct DimsSuite;

impl Suite for DimsSuite {
    fn name(&self) -> &'static str {
        "dims"
    }

    fn run(&self, n: u32) -> Vec<CheckRecord> {
        if !(3..=10).contains(&n) {
            return vec![CheckRecord::skipped(
                n,
                "consistency",
                "dims/consistency",
                "curated tables cover n = 3..10",
            )];
        }
        match dim_consistency(n) {
            Ok(report) => report
                .checks
                .iter()
                .map(|c| CheckRecord::from_check(n, c))
                .collect(),
            Err(e) => vec![error_record(n, self.name(), &e)],
        }
    }
}

struct TridiagSuite;

impl TridiagSuite {
    fn run_inner(n: u32) -> Result<Vec<CheckRecord>, Error> {
        let mut out = Vec::new();
        let tri = cnplus(n)?;
        let prod = odd_product(n)?;
        out.push(CheckRecord::outcome(
            n,
            "tridiag-vs-product",
            "tridiag/product",
            tri == prod,
            format!("{tri} vs {prod}"),
        ));
        let (ch, _) = char_and_min_poly(n, n - 1, SubspaceName::Plus)?;
        out.push(CheckRecord::outcome(
            n,
            "tridiag-vs-char-poly",
            "tridiag/spectrum",
            tri == ch,
            format!("{tri} vs {ch}"),
        ));

        let m_max = (n as usize).min(12);
        let a: Vec<i64> = (1..=m_max as i64).map(|t| -t).collect();
        let b: Vec<i64> = (1..=m_max as i64).map(|t| -(n as i64 - t + 1)).collect();
        let spec = TridiagSpec::from_i64(&a, &b)?;
        let mut pass = true;
        let mut detail = format!("determinants up to {}x{}", m_max + 1, m_max + 1);
        for m in 0..=m_max {
            let det = det_tridiag(&spec, m)?;
            let mut assembled = IntPoly::zero();
            for j in 0..=((m + 1) / 2) {
                let c = matchings_coeff(&spec, m, j)?;
                let signed = if j % 2 == 0 { c } else { -c };
                let mut coeffs = vec![BigInt::zero(); m + 2 - 2 * j];
                coeffs[m + 1 - 2 * j] = signed;
                assembled = &assembled + &IntPoly::new(coeffs);
            }
            if assembled != det {
                pass = false;
                detail = format!("expansion disagrees at m={m}");
                break;
            }
        }
        out.push(CheckRecord::outcome(
            n,
            "matchings-vs-determinant",
            "tridiag/matchings",
            pass,
            detail,
        ));
        Ok(out)
    }
}

impl Suite for TridiagSuite {
    fn name(&self) -> &'static str {
        "tridiag"
    }

    fn run(&self, n: u32) -> Vec<CheckRecord> {
        if n < 3 || n % 2 == 0 {
            return vec![CheckRecord::skipped(
                n,
                "determinant",
                "tridiag/determinant",
                "requires odd n >= 3",
            )];
        }
        match Self::run_inner(n) {
            Ok(records) => records,
            Err(e) => vec![error_record(n, self.name(), &e)],
        }
    }
}

struct CoveringSuite;

impl CoveringSuite {
    fn run_inner(n: u32) -> Result<Vec<CheckRecord>, Error> {
        let branches = 2 * n;
        let genus_y = 1u32;
        let wanted = 3usize;
        let mut instances = Vec::new();
        let mut seed = 0u64;
        while instances.len() < wanted && seed < 50 {
            match random_simple_monodromy(n, branches, genus_y, seed) {
                Ok(data) => instances.push((seed, data)),
                Err(Error::NoInstanceFound(_)) => {}
                Err(e) => return Err(e),
            }
            seed += 1;
        }
        if instances.len() < wanted {
            let record = CheckRecord::outcome(
                n,
                "sampled-instances",
                "covering/instances",
                false,
                format!("only {} of {wanted} instances found", instances.len()),
            );
            return Ok(vec![record]);
        }

        let want_cycles = 1u64 << (n - 2);
        let mut cycles_ok = true;
        let mut genus_ok = true;
        let mut genera = Vec::new();
        let formula = genus(n, GenusKind::CtildeComponent)?;
        for (seed, data) in &instances {
            data.validate()?;
            let report = ramification_and_genus(data)?;
            if report.branch_two_cycles.iter().any(|&c| c != want_cycles) {
                cycles_ok = false;
            }
            match report.g_ctilde_component {
                Some(g) => {
                    let value = formula.eval(
                        &Rational::from_integer(BigInt::from(report.g_x)),
                        &Rational::from_integer(BigInt::from(genus_y as i64)),
                    );
                    if Rational::from_integer(BigInt::from(g)) != value {
                        genus_ok = false;
                    }
                    genera.push(format!("seed {seed}: genus {g}"));
                }
                None => genus_ok = false,
            }
        }
        Ok(vec![
            CheckRecord::outcome(
                n,
                "two-cycle-counts",
                "covering/two-cycles",
                cycles_ok,
                format!("{wanted} instances, {want_cycles} two-cycles per branch"),
            ),
            CheckRecord::outcome(
                n,
                "component-genus",
                "covering/genus",
                genus_ok,
                genera.join(", "),
            ),
        ])
    }
}

impl Suite for CoveringSuite {
    fn name(&self) -> &'static str {
        "covering"
    }

    fn run(&self, n: u32) -> Vec<CheckRecord> {
        if !(3..=8).contains(&n) {
            return vec![CheckRecord::skipped(
                n,
                "sampled-instances",
                "covering/instances",
                "sampling suite covers n = 3..8",
            )];
        }
        match Self::run_inner(n) {
            Ok(records) => records,
            Err(e) => vec![error_record(n, self.name(), &e)],
        }
    }
}
