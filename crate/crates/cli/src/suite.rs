//! Seeded random instances and the three verification suites.

use num_bigint::BigInt;
use num_integer::Integer;

use qpgrade::hilbert::{verify_grade_bound_weighted, HilbertSeries, WeightedModulePresentation};
use qpgrade::polytope::Point;
use qpgrade::{verify_ehrhart_grade_bound, QuasiPolynomial, Rational, RationalPolytope};

use crate::rng::XorShift64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteMode {
    Polytope,
    Weighted,
    Lemma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub checked: u64,
    pub violations: Vec<String>,
}

fn rational(rng: &mut XorShift64, num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(rng.range(-num, num)), BigInt::from(rng.range(1, den)))
}

fn fmt_point(p: &Point) -> String {
    let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", coords.join(","))
}

/// 1 to 5 points in the line or the plane, coordinates `p/q` with
/// `|p| ≤ 3`, `1 ≤ q ≤ 3`.
pub fn random_polytope_points(rng: &mut XorShift64) -> Vec<Point> {
    let m = rng.range(1, 2) as usize;
    let k = rng.range(1, if m == 1 { 3 } else { 5 }) as usize;
    (0..k).map(|_| (0..m).map(|_| rational(rng, 3, 3)).collect()).collect()
}

/// `d ≤ 4` weights in `1..=6`, up to 3 shifts in `0..=6`.
pub fn random_presentation(rng: &mut XorShift64) -> WeightedModulePresentation {
    let d = rng.range(1, 4) as usize;
    let weights = (0..d).map(|_| rng.range_u64(1, 6)).collect();
    let k = rng.range(1, 3) as usize;
    let shifts = (0..k).map(|_| rng.range_u64(0, 6)).collect();
    WeightedModulePresentation::new(weights, shifts).expect("generated weights are positive")
}

/// Period `≤ 12`, degree `≤ 4`, coefficients `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 9`.
pub fn random_quasipolynomial(rng: &mut XorShift64) -> QuasiPolynomial {
    let period = rng.range(1, 12) as usize;
    let degree = rng.range(0, 4) as usize;
    let rows = (0..period).map(|_| (0..=degree).map(|_| rational(rng, 9, 9)).collect()).collect();
    QuasiPolynomial::new(period, rows).expect("rectangular table")
}

/// A shift in `1..=4π` coprime to `π`.
pub fn random_coprime_shift(rng: &mut XorShift64, pi: u64) -> u64 {
    loop {
        let g = rng.range_u64(1, 4 * pi);
        if g.gcd(&pi) == 1 {
            return g;
        }
    }
}

/// `d ≤ 4` exponents in `1..=8`, nonnegative numerator of degree `≤ 6`
/// with coefficients in `0..=3`, not identically zero.
pub fn random_series(rng: &mut XorShift64) -> HilbertSeries {
    let d = rng.range(1, 4) as usize;
    let exps = (0..d).map(|_| rng.range_u64(1, 8)).collect();
    let len = rng.range(1, 7) as usize;
    let mut num: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.range(0, 3))).collect();
    if num.iter().all(|c| c == &BigInt::from(0)) {
        num[0] = BigInt::from(1);
    }
    HilbertSeries::new(num, exps).expect("positive exponents")
}

/// 1 to `m+1` points in `Q^m`, `m ≤ 3`, coordinates `p/q` with `|p| ≤ 4`,
/// `1 ≤ q ≤ 4`; their affine span is the random subspace.
pub fn random_affine_points(rng: &mut XorShift64) -> Vec<Point> {
    let m = rng.range(1, 3) as usize;
    let k = rng.range(1, m as i64 + 1) as usize;
    (0..k).map(|_| (0..m).map(|_| rational(rng, 4, 4)).collect()).collect()
}

pub fn run_suite(mode: SuiteMode, seed: u64, count: u64) -> SuiteOutcome {
    let mut rng = XorShift64::new(seed);
    let mut violations = Vec::new();
    for i in 0..count {
        if let Err(msg) = check_one(mode, &mut rng) {
            violations.push(format!("instance={i} {msg}"));
        }
    }
    SuiteOutcome { checked: count, violations }
}

fn check_one(mode: SuiteMode, rng: &mut XorShift64) -> Result<(), String> {
    match mode {
        SuiteMode::Polytope => {
            let points = random_polytope_points(rng);
            let desc = points.iter().map(fmt_point).collect::<Vec<_>>().join(" ");
            let poly = RationalPolytope::from_vertices(&points).map_err(|e| format!("points={desc} error={e}"))?;
            let r = verify_ehrhart_grade_bound(&poly).map_err(|e| format!("points={desc} error={e}"))?;
            if r.holds {
                Ok(())
            } else {
                Err(format!("points={desc} grade={} delta_star={:?}", r.grade, r.delta_star))
            }
        }
        SuiteMode::Weighted => {
            let p = random_presentation(rng);
            let desc = format!("weights={:?} shifts={:?}", p.weights(), p.shifts());
            let r = verify_grade_bound_weighted(&p).map_err(|e| format!("{desc} error={e}"))?;
            if r.holds {
                Ok(())
            } else {
                Err(format!("{desc} grade={} bound={}", r.grade, r.bound))
            }
        }
        SuiteMode::Lemma => {
            let q = random_quasipolynomial(rng);
            let pi = q.minimal_period().0 as u64;
            let g = random_coprime_shift(rng, pi);
            let (lhs, rhs) = (q.grade(), q.shift_difference(g).grade());
            if lhs <= rhs {
                Ok(())
            } else {
                Err(format!("g={g} grade={lhs} shifted_grade={rhs} qp={}", q.to_string().replace('\n', ";")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic() {
        for mode in [SuiteMode::Polytope, SuiteMode::Weighted, SuiteMode::Lemma] {
            assert_eq!(run_suite(mode, 7, 10), run_suite(mode, 7, 10));
        }
    }

    #[test]
    fn generators_respect_bounds() {
        let mut rng = XorShift64::new(3);
        for _ in 0..200 {
            let q = random_quasipolynomial(&mut rng);
            assert!(q.period() <= 12 && q.degree() <= 4);
            let p = random_presentation(&mut rng);
            assert!(p.weights().len() <= 4 && p.weights().iter().all(|&e| (1..=6).contains(&e)));
            assert!(p.shifts().len() <= 3 && p.shifts().iter().all(|&s| s <= 6));
            let pts = random_polytope_points(&mut rng);
            assert!(pts.iter().flatten().all(|c| c.denom() <= &BigInt::from(3)));
        }
    }
}
