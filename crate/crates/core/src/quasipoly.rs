//! Quasipolynomials `Q(n) = Σ a_i(n)·n^i` with periodic coefficients.
//!
//! A [`QuasiPoly`] stores one ordinary polynomial (a *constituent*) per
//! residue class modulo its period. Constituent `r` holds the coefficients
//! in ascending powers, so `Q(n) = Σ_i coeffs[n mod π][i]·n^i`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::exactmath::{parse_rational, solve, Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasiPolyError {
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("expected {expected} residue rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("residue rows have different lengths")]
    RaggedRows,
    #[error("insufficient samples for residue {residue}: need {needed}, have {found}")]
    InsufficientSamples { residue: usize, needed: usize, found: usize },
    #[error("inconsistent samples for residue {residue}: no polynomial of degree <= {degree_bound} fits n={n}")]
    InconsistentSamples { residue: usize, degree_bound: usize, n: i64 },
    #[error("malformed quasipolynomial text: {0}")]
    Parse(String),
}

/// A quasipolynomial over the scalar field `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiPoly<T> {
    period: usize,
    // -1 for the zero quasipolynomial
    degree: isize,
    coeffs: Vec<Vec<T>>,
}

impl<T: Field> QuasiPoly<T> {
    /// Builds a quasipolynomial from one ascending coefficient row per
    /// residue. Rows must share a length; all-zero top columns are trimmed.
    pub fn new(period: usize, rows: Vec<Vec<T>>) -> Result<Self, QuasiPolyError> {
        if period == 0 {
            return Err(QuasiPolyError::ZeroPeriod);
        }
        if rows.len() != period {
            return Err(QuasiPolyError::RowCount { expected: period, found: rows.len() });
        }
        let width = rows[0].len();
        if rows.iter().any(|r| r.len() != width) {
            return Err(QuasiPolyError::RaggedRows);
        }
        Ok(Self::normalized(period, rows))
    }

    fn normalized(period: usize, mut rows: Vec<Vec<T>>) -> Self {
        let mut width = rows[0].len();
        while width > 0 && rows.iter().all(|r| r[width - 1].is_zero()) {
            width -= 1;
        }
        for r in &mut rows {
            r.truncate(width);
        }
        QuasiPoly { period, degree: width as isize - 1, coeffs: rows }
    }

    pub fn zero() -> Self {
        QuasiPoly { period: 1, degree: -1, coeffs: vec![Vec::new()] }
    }

    /// An ordinary polynomial (period 1), ascending coefficients.
    pub fn polynomial(coeffs: Vec<T>) -> Self {
        Self::normalized(1, vec![coeffs])
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `-1` for the zero quasipolynomial.
    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.degree < 0
    }

    /// Ascending coefficients of the constituent for residue `r`.
    pub fn constituent(&self, r: usize) -> &[T] {
        &self.coeffs[r]
    }

    pub fn coefficient(&self, residue: usize, power: usize) -> T {
        self.coeffs[residue].get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn evaluate(&self, n: i64) -> T {
        let r = n.rem_euclid(self.period as i64) as usize;
        let x = T::from_i64(n).expect("scalar must represent every i64");
        self.coeffs[r].iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// The least period `π_min` together with the table rewritten on it.
    pub fn minimal_period(&self) -> (usize, Self) {
        let p = divisors(self.period)
            .into_iter()
            .find(|&p| (0..self.period).all(|r| self.coeffs[r] == self.coeffs[r % p]))
            .unwrap_or(self.period);
        let canonical = QuasiPoly { period: p, degree: self.degree, coeffs: self.coeffs[..p].to_vec() };
        (p, canonical)
    }

    pub fn canonical(&self) -> Self {
        self.minimal_period().1
    }

    /// Smallest `δ ≥ -1` such that every coefficient function `a_i` with
    /// `i > δ` is constant. Computed on the minimal-period table.
    pub fn grade(&self) -> isize {
        let c = self.canonical();
        for i in (0..=c.degree).rev() {
            let i = i as usize;
            if c.coeffs.iter().any(|row| row[i] != c.coeffs[0][i]) {
                return i as isize;
            }
        }
        -1
    }

    /// `n ↦ Q(n) − Q(n − g)`, canonicalized.
    pub fn shift_difference(&self, g: u64) -> Self {
        let p = self.period;
        let shift = (g % p as u64) as usize;
        let gs = T::from_u64(g).expect("scalar must represent the shift");
        let rows = (0..p)
            .map(|r| {
                let lagged = &self.coeffs[(r + p - shift) % p];
                let shifted = taylor_shift(lagged, &gs);
                self.coeffs[r].iter().zip(shifted).map(|(a, b)| a.clone() - b).collect()
            })
            .collect();
        Self::normalized(p, rows).canonical()
    }

    /// Fits one polynomial of degree at most `degree_bound` per residue
    /// class by exact Vandermonde solves. Surplus samples are checked, not
    /// averaged.
    pub fn fit_from_samples(
        samples: &BTreeMap<i64, T>,
        period: usize,
        degree_bound: usize,
    ) -> Result<Self, QuasiPolyError> {
        if period == 0 {
            return Err(QuasiPolyError::ZeroPeriod);
        }
        let needed = degree_bound + 1;
        let mut rows = Vec::with_capacity(period);
        for residue in 0..period {
            let points: Vec<(i64, &T)> = samples
                .iter()
                .filter(|(n, _)| n.rem_euclid(period as i64) as usize == residue)
                .map(|(&n, v)| (n, v))
                .collect();
            if points.len() < needed {
                return Err(QuasiPolyError::InsufficientSamples { residue, needed, found: points.len() });
            }
            let (basis, surplus) = points.split_at(needed);
            let mut vandermonde = Vec::with_capacity(needed * needed);
            for &(n, _) in basis {
                let x = T::from_i64(n).expect("scalar must represent every i64");
                let mut pow = T::one();
                for _ in 0..needed {
                    vandermonde.push(pow.clone());
                    pow = pow * x.clone();
                }
            }
            let rhs: Vec<T> = basis.iter().map(|(_, v)| (*v).clone()).collect();
            let row = solve(&Matrix::new(needed, needed, vandermonde), &rhs)
                .expect("distinct nodes give an invertible Vandermonde system");
            let candidate = QuasiPoly { period: 1, degree: degree_bound as isize, coeffs: vec![row] };
            if let Some(&(n, _)) = surplus.iter().find(|(n, v)| candidate.evaluate(*n) != **v) {
                return Err(QuasiPolyError::InconsistentSamples { residue, degree_bound, n });
            }
            rows.extend(candidate.coeffs);
        }
        Ok(Self::normalized(period, rows).canonical())
    }
}

/// Coefficients of `P(n − g)` from those of `P(n)`, both ascending.
fn taylor_shift<T: Field>(coeffs: &[T], g: &T) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(coeffs.len());
    for c in coeffs.iter().rev() {
        // out = out·(n − g) + c
        let mut next = vec![T::zero(); out.len() + 1];
        for (i, a) in out.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a.clone();
            next[i] = next[i].clone() - a.clone() * g.clone();
        }
        next[0] = next[0].clone() + c.clone();
        out = next;
    }
    out
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Canonical report block: header `period=π degree=u`, then one line
/// `r: c_u … c_0` per residue. The zero quasipolynomial has no rows.
impl<T: Field + fmt::Display> fmt::Display for QuasiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "period={} degree={}", self.period, self.degree)?;
        if self.is_zero() {
            return Ok(());
        }
        for (r, row) in self.coeffs.iter().enumerate() {
            write!(f, "\n{r}:")?;
            for c in row.iter().rev() {
                write!(f, " {c}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for QuasiPoly<BigRational> {
    type Err = QuasiPolyError;

    /// Reads the block written by `Display`. Blank lines and `#` comments
    /// are ignored; rows may appear in any order but each residue exactly once.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |m: String| QuasiPolyError::Parse(m);
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| err("missing header".into()))?;
        let mut period = None;
        let mut degree = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("period", v)) => period = v.parse::<usize>().ok(),
                Some(("degree", v)) => degree = v.parse::<isize>().ok(),
                _ => return Err(err(format!("unexpected header field `{field}`"))),
            }
        }
        let period = period.filter(|&p| p > 0).ok_or_else(|| err("header needs period=<positive int>".into()))?;
        let degree = degree.filter(|&d| d >= -1).ok_or_else(|| err("header needs degree=<int >= -1>".into()))?;
        let width = (degree + 1) as usize;
        let mut rows: Vec<Option<Vec<BigRational>>> = vec![None; period];
        for line in lines {
            let (r, rest) = line.split_once(':').ok_or_else(|| err(format!("row without `r:` prefix: `{line}`")))?;
            let r: usize = r.trim().parse().map_err(|_| err(format!("bad residue `{r}`")))?;
            if r >= period {
                return Err(err(format!("residue {r} out of range for period {period}")));
            }
            if rows[r].is_some() {
                return Err(err(format!("residue {r} given twice")));
            }
            let mut row = rest
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| err(e.to_string()))?;
            if row.len() != width {
                return Err(err(format!("residue {r} has {} coefficients, expected {width}", row.len())));
            }
            row.reverse();
            rows[r] = Some(row);
        }
        if degree < 0 {
            return Ok(QuasiPoly { period, degree: -1, coeffs: vec![Vec::new(); period] });
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(r, row)| row.ok_or_else(|| err(format!("missing residue {r}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let q = Self::new(period, rows)?;
        if q.degree != degree {
            return Err(err(format!("declared degree {degree} but leading coefficients vanish")));
        }
        Ok(q)
    }
}
