//! Hilbert series `p(t) / ∏(1 − t^{e_i})`, their Hilbert quasipolynomials,
//! and the grade bound for shifted free modules over weighted polynomial
//! rings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::Field;
use crate::quasipoly::{QuasiPoly, QuasiPolyError};
use crate::QuasiPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("denominator exponents must be positive")]
    ZeroExponent,
    #[error("weights must be nonempty and positive")]
    BadWeights,
    #[error("at least one shift is required")]
    NoShifts,
    #[error("numerator has negative coefficients; not the Hilbert series of a module")]
    NegativeNumerator,
    #[error("inconsistent fit: {0}")]
    InconsistentFit(String),
}

impl From<QuasiPolyError> for HilbertError {
    fn from(e: QuasiPolyError) -> Self {
        HilbertError::InconsistentFit(e.to_string())
    }
}

/// Rational generating function `numerator(t) / ∏_i (1 − t^{e_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    denominator_exponents: Vec<u64>,
}

impl HilbertSeries {
    /// `numerator` is in ascending powers of `t`; trailing zeros are dropped.
    pub fn new(numerator: Vec<BigInt>, denominator_exponents: Vec<u64>) -> Result<Self, HilbertError> {
        if denominator_exponents.contains(&0) {
            return Err(HilbertError::ZeroExponent);
        }
        let mut numerator = numerator;
        while numerator.last().is_some_and(Zero::is_zero) {
            numerator.pop();
        }
        Ok(HilbertSeries { numerator, denominator_exponents })
    }

    /// `Σ_j t^{s_j} / ∏_i (1 − t^{e_i})`, the series of `⊕_j R(−s_j)`.
    pub fn free_module(weights: &[u64], shifts: &[u64]) -> Result<Self, HilbertError> {
        let top = shifts.iter().copied().max().unwrap_or(0) as usize;
        let mut numerator = vec![BigInt::zero(); top + 1];
        for &s in shifts {
            numerator[s as usize] += 1;
        }
        Self::new(numerator, weights.to_vec())
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator_exponents(&self) -> &[u64] {
        &self.denominator_exponents
    }

    /// Degree of the numerator, `-1` for the zero series.
    pub fn numerator_degree(&self) -> isize {
        self.numerator.len() as isize - 1
    }

    /// `lcm(e_1, …, e_d)`, 1 when there are no denominator factors.
    pub fn exponent_lcm(&self) -> u64 {
        self.denominator_exponents.iter().fold(1, |acc, &e| acc.lcm(&e))
    }

    /// Coefficients `c_0..=c_N` of the expansion. Each factor `1/(1 − t^e)`
    /// is a running sum with stride `e`.
    pub fn series_coefficients(&self, n_max: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); n_max + 1];
        for (slot, a) in c.iter_mut().zip(&self.numerator) {
            *slot = a.clone();
        }
        for &e in &self.denominator_exponents {
            let e = e as usize;
            for n in e..=n_max {
                let prev = c[n - e].clone();
                c[n] += prev;
            }
        }
        c
    }

    /// Order of the pole at `t = 1` after cancelling `(1 − t)` factors of
    /// the numerator against the denominator.
    pub fn pole_order_at_one(&self) -> usize {
        let d = self.denominator_exponents.len();
        if self.numerator.is_empty() {
            return 0;
        }
        let mut p = self.numerator.clone();
        let mut cancelled = 0;
        while cancelled < d && p.iter().sum::<BigInt>().is_zero() {
            p = divide_by_t_minus_one(&p);
            cancelled += 1;
        }
        d - cancelled
    }

    /// The quasipolynomial agreeing with the coefficients from index `n0`
    /// on, and the least such `n0`.
    pub fn hilbert_quasipolynomial(&self) -> Result<(QuasiPolynomial, usize), HilbertError> {
        let d = self.denominator_exponents.len();
        let lcm = self.exponent_lcm() as usize;
        let window = lcm * (d + 1);
        let deg = self.numerator_degree().max(0) as usize;
        let last = deg + 2 * window;
        let coeffs = self.series_coefficients(last + lcm);
        let samples: BTreeMap<i64, BigRational> =
            (last + 1 - window..=last).map(|n| (n as i64, BigRational::from_integer(coeffs[n].clone()))).collect();
        let q = QuasiPoly::fit_from_samples(&samples, lcm, d.saturating_sub(1))?;
        for (n, c) in coeffs.iter().enumerate().skip(last + 1) {
            if q.evaluate(n as i64) != BigRational::from_integer(c.clone()) {
                return Err(HilbertError::InconsistentFit(format!("validation failed at n={n}")));
            }
        }
        let mut n0 = last + 1 - window;
        while n0 > 0 && q.evaluate(n0 as i64 - 1) == BigRational::from_integer(coeffs[n0 - 1].clone()) {
            n0 -= 1;
        }
        Ok((q, n0))
    }
}

// p(t) / (t − 1) for p(1) = 0, by synthetic division.
fn divide_by_t_minus_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut q = vec![BigInt::zero(); p.len().saturating_sub(1)];
    let mut carry = BigInt::zero();
    for i in (1..p.len()).rev() {
        carry += &p[i];
        q[i - 1] = carry.clone();
    }
    q
}

/// Number of nonnegative integer vectors `a` with `Σ a_i·e_i = n`.
///
/// Table over prefixes of the weight list: `ways[i][v]` sums `ways[i−1][v − k·e_i]`
/// over every multiplicity `k`.
pub fn denumerant(weights: &[u64], n: u64) -> BigInt {
    let n = n as usize;
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for &w in weights {
        let w = w as usize;
        assert!(w > 0, "weights must be positive");
        let mut next = vec![BigInt::zero(); n + 1];
        for (v, slot) in next.iter_mut().enumerate() {
            let mut total = BigInt::zero();
            let mut used = 0;
            while used <= v {
                total += &ways[v - used];
                used += w;
            }
            *slot = total;
        }
        ways = next;
    }
    ways.swap_remove(n)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// `dim R/I` for `R = K[x_1..x_d]` with `deg x_i = e_i` and `I` generated by
/// the homogeneous elements whose degree is coprime to `pi`.
///
/// A variable set spans a monomial of degree coprime to `pi` unless one prime
/// of `pi` divides all of its weights, so the answer is the largest number of
/// weights sharing a prime factor of `pi`.
pub fn theorem2_bound(weights: &[u64], pi: u64) -> usize {
    prime_factors(pi)
        .into_iter()
        .map(|p| weights.iter().filter(|&&e| e % p == 0).count())
        .max()
        .unwrap_or(0)
}

/// Exhaustive counterpart of [`theorem2_bound`]: collects the supports of all
/// monomials of positive degree `<= cap` coprime to `pi`, then returns `d`
/// minus the smallest variable set meeting every support.
///
/// Monomials are enumerated one variable at a time as (support, degree)
/// pairs, which visits every attainable degree of every support.
pub fn dim_quotient_bruteforce(weights: &[u64], pi: u64, cap: u64) -> usize {
    let d = weights.len();
    assert!(d < 32, "too many variables for subset search");
    let cap = cap as usize;
    // degrees[s][k]: some monomial with support exactly s has degree k
    let mut degrees = vec![vec![false; cap + 1]; 1 << d];
    degrees[0][0] = true;
    for (i, &e) in weights.iter().enumerate() {
        let e = e as usize;
        for s in 0..1usize << i {
            for k in 0..=cap {
                if !degrees[s][k] {
                    continue;
                }
                let mut deg = k + e;
                while deg <= cap {
                    degrees[s | 1 << i][deg] = true;
                    deg += e;
                }
            }
        }
    }
    let supports: Vec<usize> = (1..1usize << d)
        .filter(|&s| (1..=cap).any(|k| degrees[s][k] && (k as u64).gcd(&pi) == 1))
        .collect();
    let cover = (0usize..1 << d)
        .filter(|set| supports.iter().all(|s| s & set != 0))
        .map(|set| set.count_ones() as usize)
        .min()
        .unwrap_or(d);
    d - cover
}

/// `⊕_j R(−s_j)` over `R = K[x_1..x_d]`, `deg x_i = e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedModulePresentation {
    weights: Vec<u64>,
    shifts: Vec<u64>,
}

impl WeightedModulePresentation {
    pub fn new(weights: Vec<u64>, shifts: Vec<u64>) -> Result<Self, HilbertError> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(HilbertError::BadWeights);
        }
        if shifts.is_empty() {
            return Err(HilbertError::NoShifts);
        }
        Ok(WeightedModulePresentation { weights, shifts })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn shifts(&self) -> &[u64] {
        &self.shifts
    }

    pub fn series(&self) -> HilbertSeries {
        HilbertSeries::free_module(&self.weights, &self.shifts).expect("weights validated at construction")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedReport {
    pub quasipolynomial: QuasiPolynomial,
    pub period: usize,
    pub grade: isize,
    pub bound: usize,
    pub n0: usize,
    pub holds: bool,
}

/// Checks `grade Q < dim M/IM` for a shifted free module.
pub fn verify_grade_bound_weighted(p: &WeightedModulePresentation) -> Result<WeightedReport, HilbertError> {
    verify_series_bound(&p.series(), &p.weights)
}

fn verify_series_bound(series: &HilbertSeries, weights: &[u64]) -> Result<WeightedReport, HilbertError> {
    if series.numerator().iter().any(Signed::is_negative) {
        return Err(HilbertError::NegativeNumerator);
    }
    let (q, n0) = series.hilbert_quasipolynomial()?;
    let (period, canonical) = q.minimal_period();
    let grade = canonical.grade();
    let bound = theorem2_bound(weights, period as u64);
    Ok(WeightedReport { quasipolynomial: canonical, period, grade, bound, n0, holds: grade < bound as isize })
}

/// Degree and period checks for a computed Hilbert quasipolynomial.
pub fn check_hilbert_serre<T: Field>(series: &HilbertSeries, q: &QuasiPoly<T>) -> Result<(), String> {
    let expected = series.pole_order_at_one() as isize - 1;
    let expected = expected.max(-1);
    if q.degree() != expected {
        return Err(format!("degree {} but pole order minus one is {expected}", q.degree()));
    }
    let pmin = q.minimal_period().0 as u64;
    if !series.exponent_lcm().is_multiple_of(pmin) {
        return Err(format!("minimal period {pmin} does not divide lcm {}", series.exponent_lcm()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rational;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn series(num: &[i64], exps: &[u64]) -> HilbertSeries {
        HilbertSeries::new(ints(num), exps.to_vec()).unwrap()
    }

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    // Independent oracle: enumerate every exponent vector directly.
    fn brute_denumerant(weights: &[u64], n: u64) -> u64 {
        fn go(w: &[u64], left: u64) -> u64 {
            match w.split_first() {
                None => u64::from(left == 0),
                Some((&e, rest)) => (0..=left / e).map(|k| go(rest, left - k * e)).sum(),
            }
        }
        go(weights, n)
    }

    #[test]
    fn series_examples() {
        assert_eq!(series(&[1], &[1]).series_coefficients(4), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(series(&[1], &[1, 2]).series_coefficients(5), ints(&[1, 1, 2, 2, 3, 3]));
        assert_eq!(series(&[1, 1], &[1]).series_coefficients(3), ints(&[1, 2, 2, 2]));
    }

    #[test]
    fn denumerant_examples() {
        assert_eq!(brute_denumerant(&[1, 2, 3], 6), 7);
        assert_eq!(denumerant(&[1, 2, 3], 6), BigInt::from(7));
        assert_eq!(denumerant(&[1], 5), BigInt::from(1));
        assert_eq!(denumerant(&[2], 3), BigInt::from(0));
        assert_eq!(denumerant(&[], 0), BigInt::from(1));
    }

    #[test]
    fn pole_order_examples() {
        assert_eq!(series(&[1], &[1, 2]).pole_order_at_one(), 2);
        assert_eq!(series(&[1, -1], &[1, 1]).pole_order_at_one(), 1);
        assert_eq!(series(&[5], &[]).pole_order_at_one(), 0);
        assert_eq!(series(&[1, -2, 1], &[1]).pole_order_at_one(), 0);
    }

    #[test]
    fn quasipolynomial_examples() {
        let (qp, n0) = series(&[1], &[1, 2]).hilbert_quasipolynomial().unwrap();
        let expected = QuasiPoly::new(2, vec![vec![q("1"), q("1/2")], vec![q("1/2"), q("1/2")]]).unwrap();
        assert_eq!((qp.clone(), n0), (expected, 0));
        for n in 0..=20 {
            assert_eq!(qp.evaluate(n), BigRational::from_integer(denumerant(&[1, 2], n as u64)));
        }

        let (qp, n0) = series(&[1], &[1, 1]).hilbert_quasipolynomial().unwrap();
        assert_eq!((qp, n0), (QuasiPoly::polynomial(vec![q("1"), q("1")]), 0));

        let (qp, n0) = series(&[1, -1], &[1, 1]).hilbert_quasipolynomial().unwrap();
        assert_eq!((qp, n0), (QuasiPoly::polynomial(vec![q("1")]), 0));

        let (qp, n0) = series(&[5], &[]).hilbert_quasipolynomial().unwrap();
        assert!(qp.is_zero());
        assert_eq!(n0, 1);

        // t^3 / (1 - t): zero below 3
        let (qp, n0) = series(&[0, 0, 0, 1], &[1]).hilbert_quasipolynomial().unwrap();
        assert_eq!((qp, n0), (QuasiPoly::polynomial(vec![q("1")]), 3));
    }

    #[test]
    fn denumerant_quasipolynomial_for_one_two_three() {
        let (qp, _) = series(&[1], &[1, 2, 3]).hilbert_quasipolynomial().unwrap();
        assert_eq!(qp.minimal_period().0, 6);
        for n in 0..40 {
            assert_eq!(qp.evaluate(n), BigRational::from_integer(denumerant(&[1, 2, 3], n as u64)));
        }
    }

    #[test]
    fn equal_weights_give_grade_one() {
        let (qp, _) = series(&[1], &[2, 2]).hilbert_quasipolynomial().unwrap();
        assert_eq!(qp.grade(), 1);
        assert_eq!(qp.evaluate(6), q("4"));
        assert_eq!(qp.evaluate(7), q("0"));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(theorem2_bound(&[2, 3], 6), 1);
        assert_eq!(theorem2_bound(&[2, 2], 2), 2);
        assert_eq!(theorem2_bound(&[1, 1], 1), 0);
        assert_eq!(dim_quotient_bruteforce(&[2, 3], 6, 30), 1);
        assert_eq!(dim_quotient_bruteforce(&[2, 2], 2, 20), 2);
        assert_eq!(dim_quotient_bruteforce(&[1], 1, 5), 0);
    }

    #[test]
    fn bound_matches_bruteforce_on_sweep() {
        for d in 1..=4usize {
            let mut w = vec![1u64; d];
            loop {
                for pi in 1..=12 {
                    assert_eq!(theorem2_bound(&w, pi), dim_quotient_bruteforce(&w, pi, 96), "weights {w:?} pi {pi}");
                }
                // odometer over nondecreasing weight lists up to 8
                let Some(i) = (0..d).rev().find(|&i| w[i] < 8) else { break };
                let v = w[i] + 1;
                w[i..].iter_mut().for_each(|x| *x = v);
            }
        }
    }

    #[test]
    fn weighted_report_examples() {
        let r = verify_grade_bound_weighted(&WeightedModulePresentation::new(vec![1, 2], vec![0]).unwrap()).unwrap();
        assert_eq!((r.grade, r.bound, r.period, r.holds), (0, 1, 2, true));
        let r = verify_grade_bound_weighted(&WeightedModulePresentation::new(vec![2, 2], vec![0]).unwrap()).unwrap();
        assert_eq!((r.grade, r.bound, r.holds), (1, 2, true));
        let r = verify_grade_bound_weighted(&WeightedModulePresentation::new(vec![1, 1, 1], vec![0]).unwrap()).unwrap();
        assert_eq!((r.grade, r.bound, r.period, r.holds), (-1, 0, 1, true));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(HilbertSeries::new(ints(&[1]), vec![0]), Err(HilbertError::ZeroExponent));
        assert_eq!(WeightedModulePresentation::new(vec![], vec![0]), Err(HilbertError::BadWeights));
        assert_eq!(WeightedModulePresentation::new(vec![1], vec![]), Err(HilbertError::NoShifts));
        assert_eq!(verify_series_bound(&series(&[1, -1], &[1, 2]), &[1, 2]), Err(HilbertError::NegativeNumerator));
    }

    proptest! {
        #[test]
        fn series_matches_denumerant(weights in proptest::collection::vec(1u64..=8, 1..=4)) {
            let coeffs = HilbertSeries::new(vec![BigInt::one()], weights.clone()).unwrap().series_coefficients(60);
            for (n, c) in coeffs.iter().enumerate() {
                prop_assert_eq!(c, &denumerant(&weights, n as u64));
            }
        }

        #[test]
        fn hilbert_serre_contracts(
            weights in proptest::collection::vec(1u64..=8, 1..=4),
            numerator in proptest::collection::vec(0i64..=3, 1..=7),
        ) {
            prop_assume!(numerator.iter().any(|&c| c > 0));
            let s = series(&numerator, &weights);
            let (qp, n0) = s.hilbert_quasipolynomial().unwrap();
            prop_assert!(check_hilbert_serre(&s, &qp).is_ok());
            let coeffs = s.series_coefficients(n0 + 3 * s.exponent_lcm() as usize);
            for (n, c) in coeffs.iter().enumerate().skip(n0) {
                prop_assert_eq!(qp.evaluate(n as i64), BigRational::from_integer(c.clone()));
            }
        }

        #[test]
        fn weighted_bound_holds(
            weights in proptest::collection::vec(1u64..=6, 1..=4),
            shifts in proptest::collection::vec(0u64..=6, 1..=3),
        ) {
            let p = WeightedModulePresentation::new(weights, shifts).unwrap();
            let r = verify_grade_bound_weighted(&p).unwrap();
            prop_assert!(r.holds, "grade {} bound {}", r.grade, r.bound);
        }
    }
}
