//! Exact scalars and linear algebra over the integers and the rationals.
//!
//! Everything here is generic over the scalar: [`Field`] for elimination over
//! a field, [`IntegerRing`] for the Smith normal form. The crate root fixes the
//! concrete choices (`BigInt`, `BigRational`) used by the rest of the library.

use std::fmt;
use std::ops::{Index, IndexMut, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};
use thiserror::Error;

/// Scalars we can run Gaussian elimination over.
pub trait Field: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Field for T where T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + FromPrimitive {}

/// Euclidean integer scalars (`i64`, `i128`, `BigInt`).
pub trait IntegerRing: Clone + PartialEq + fmt::Debug + Integer + Signed {}

impl<T> IntegerRing for T where T: Clone + PartialEq + fmt::Debug + Integer + Signed {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `a/b` or `a`, with an optional leading minus on `a`.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let malformed = || ParseRationalError::Malformed(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let numer: BigInt = num.parse().map_err(|_| malformed())?;
    let denom: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            d.parse().map_err(|_| malformed())?
        }
    };
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(text.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.entries[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl<T> Matrix<T> {
    /// Panics if `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix entry count must be rows * cols");
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            entries.extend(row);
        }
        Matrix { rows: nrows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a.clone() * other[(k, c)].clone();
                    let cell = &mut out[(r, c)];
                    *cell = cell.clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

/// Reduced row echelon form and the pivot columns.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = T::one() / a[(row, col)].clone();
        for c in col..a.cols {
            a[(row, c)] = a[(row, c)].clone() * inv.clone();
        }
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for c in col..a.cols {
                let sub = factor.clone() * a[(row, c)].clone();
                a[(r, c)] = a[(r, c)].clone() - sub;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Rank over the field `T`.
pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Rank of a rational matrix, by exact elimination.
pub fn rat_rank(m: &RatMatrix) -> usize {
    rank(m)
}

/// Basis of `{x : m·x = 0}`, one vector per free column, in column order.
pub fn nullspace<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![T::zero(); m.cols];
        v[free] = T::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some solution of `a·x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<T: Field>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows, b.len(), "right-hand side length must equal row count");
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, a.cols)] = b[r].clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![T::zero(); a.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red[(i, a.cols)].clone();
    }
    Some(x)
}

/// Determinant of a square matrix by fraction-preserving elimination.
pub fn determinant<T: Field>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let mut a = m.clone();
    let mut det = T::one();
    for col in 0..a.cols {
        let Some(p) = (col..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            return T::zero();
        };
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a[(col, col)].clone();
        det = det * pivot.clone();
        for r in col + 1..a.rows {
            if a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone() / pivot.clone();
            for c in col..a.cols {
                let sub = factor.clone() * a[(col, c)].clone();
                a[(r, c)] = a[(r, c)].clone() - sub;
            }
        }
    }
    det
}

/// Smith normal form `A = S·D·T`, with the inverses of both transforms kept
/// alongside (`s_inv·A·t_inv = D`).
#[derive(Debug, Clone, PartialEq)]
pub struct SmithForm<T> {
    pub s: Matrix<T>,
    pub d: Matrix<T>,
    pub t: Matrix<T>,
    pub s_inv: Matrix<T>,
    pub t_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: IntegerRing> SmithForm<T> {
    /// Nonzero diagonal entries `d_1 | d_2 | …`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct SmithWork<T> {
    a: Matrix<T>,
    s: Matrix<T>,
    s_inv: Matrix<T>,
    t: Matrix<T>,
    t_inv: Matrix<T>,
}

impl<T: IntegerRing> SmithWork<T> {
    // row_i += q·row_k
    fn row_add(&mut self, i: usize, k: usize, q: &T) {
        for c in 0..self.a.cols {
            let v = self.a[(k, c)].clone() * q.clone();
            self.a[(i, c)] = self.a[(i, c)].clone() + v;
        }
        for c in 0..self.s_inv.cols {
            let v = self.s_inv[(k, c)].clone() * q.clone();
            self.s_inv[(i, c)] = self.s_inv[(i, c)].clone() + v;
        }
        for r in 0..self.s.rows {
            let v = self.s[(r, i)].clone() * q.clone();
            self.s[(r, k)] = self.s[(r, k)].clone() - v;
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.s_inv.swap_rows(i, j);
        self.s.swap_cols(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        for c in 0..self.a.cols {
            self.a[(i, c)] = -self.a[(i, c)].clone();
        }
        for c in 0..self.s_inv.cols {
            self.s_inv[(i, c)] = -self.s_inv[(i, c)].clone();
        }
        for r in 0..self.s.rows {
            self.s[(r, i)] = -self.s[(r, i)].clone();
        }
    }

    // col_j += q·col_k
    fn col_add(&mut self, j: usize, k: usize, q: &T) {
        for r in 0..self.a.rows {
            let v = self.a[(r, k)].clone() * q.clone();
            self.a[(r, j)] = self.a[(r, j)].clone() + v;
        }
        for r in 0..self.t_inv.rows {
            let v = self.t_inv[(r, k)].clone() * q.clone();
            self.t_inv[(r, j)] = self.t_inv[(r, j)].clone() + v;
        }
        for c in 0..self.t.cols {
            let v = self.t[(j, c)].clone() * q.clone();
            self.t[(k, c)] = self.t[(k, c)].clone() - v;
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.t_inv.swap_cols(i, j);
        self.t.swap_rows(i, j);
    }

    fn smallest_nonzero(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in k..self.a.rows {
            for c in k..self.a.cols {
                let v = &self.a[(r, c)];
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if self.a[b].abs() <= v.abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        best
    }
}

/// Smith normal form by elementary operations, always pivoting on the
/// smallest nonzero entry of the remaining block.
pub fn smith_normal_form<T: IntegerRing>(a: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (a.rows, a.cols);
    let mut w = SmithWork {
        a: a.clone(),
        s: Matrix::identity(rows),
        s_inv: Matrix::identity(rows),
        t: Matrix::identity(cols),
        t_inv: Matrix::identity(cols),
    };
    let mut rank = 0;
    'outer: for k in 0..rows.min(cols) {
        loop {
            let Some((pr, pc)) = w.smallest_nonzero(k) else {
                break 'outer;
            };
            w.row_swap(k, pr);
            w.col_swap(k, pc);
            let pivot = w.a[(k, k)].clone();
            for r in k + 1..rows {
                let q = w.a[(r, k)].clone() / pivot.clone();
                if !q.is_zero() {
                    w.row_add(r, k, &-q);
                }
            }
            for c in k + 1..cols {
                let q = w.a[(k, c)].clone() / pivot.clone();
                if !q.is_zero() {
                    w.col_add(c, k, &-q);
                }
            }
            let dirty = (k + 1..rows).any(|r| !w.a[(r, k)].is_zero())
                || (k + 1..cols).any(|c| !w.a[(k, c)].is_zero());
            if dirty {
                continue;
            }
            let offender = (k + 1..rows).find(|&r| {
                (k + 1..cols).any(|c| !w.a[(r, c)].is_multiple_of(&pivot))
            });
            match offender {
                Some(r) => w.row_add(k, r, &T::one()),
                None => break,
            }
        }
        if w.a[(k, k)].is_negative() {
            w.row_negate(k);
        }
        rank += 1;
    }
    SmithForm { s: w.s, d: w.a, t: w.t, s_inv: w.s_inv, t_inv: w.t_inv, rank }
}

/// An integral solution of `a·x = b`, decided by Smith normal form
/// divisibility; `None` when no integral solution exists.
pub fn solve_integer<T: IntegerRing>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows, b.len(), "right-hand side length must equal row count");
    let snf = smith_normal_form(a);
    let c = snf.s_inv.mul_vec(b);
    let mut y = vec![T::zero(); a.cols];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank {
            let d = &snf.d[(i, i)];
            if !ci.is_multiple_of(d) {
                return None;
            }
            y[i] = ci.clone() / d.clone();
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.t_inv.mul_vec(&y))
}

/// Least common multiple of the denominators; `1` for an empty slice.
pub fn lcm_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigRational>,
{
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to a primitive integer vector (content 1).
/// The zero vector maps to the zero vector.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = lcm_denominators(v);
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &g).collect()
}

pub fn to_rational_matrix(m: &IntMatrix) -> RatMatrix {
    m.map(|x| BigRational::from_integer(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn imat(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    fn qmat(rows: &[&[i64]]) -> RatMatrix {
        to_rational_matrix(&imat(rows))
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("-3/2").to_string(), "-3/2");
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("7").to_string(), "7");
        assert_eq!(q("0/5").to_string(), "0");
        assert!(matches!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rat_rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rat_rank(&RatMatrix::zeros(2, 2)), 0);
        assert_eq!(rat_rank(&qmat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_of_line() {
        let ns = nullspace(&qmat(&[&[1, -1]]));
        assert_eq!(ns, vec![vec![q("1"), q("1")]]);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&qmat(&[&[2, 1], &[1, 3]])), q("5"));
        assert_eq!(determinant(&qmat(&[&[0, 1], &[1, 0]])), q("-1"));
        assert_eq!(determinant(&qmat(&[&[1, 2], &[2, 4]])), q("0"));
    }

    fn check_smith(a: &IntMatrix) -> SmithForm<BigInt> {
        let f = smith_normal_form(a);
        assert_eq!(&f.s.mul(&f.d).mul(&f.t), a);
        assert_eq!(f.s_inv.mul(a).mul(&f.t_inv), f.d);
        assert_eq!(determinant(&to_rational_matrix(&f.s)).abs(), BigRational::one());
        assert_eq!(determinant(&to_rational_matrix(&f.t)).abs(), BigRational::one());
        f
    }

    #[test]
    fn smith_examples() {
        let f = check_smith(&IntMatrix::identity(3));
        assert_eq!(f.d, IntMatrix::identity(3));
        let f = check_smith(&imat(&[&[2, 0], &[0, 3]]));
        assert_eq!(f.d, imat(&[&[1, 0], &[0, 6]]));
        let f = check_smith(&imat(&[&[0]]));
        assert_eq!(f.d, imat(&[&[0]]));
        assert_eq!(f.rank, 0);
        let f = check_smith(&imat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(f.invariant_factors(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn smith_over_machine_integers() {
        let a = Matrix::new(2, 3, vec![4i64, 6, 8, 2, 2, 2]);
        let f = smith_normal_form(&a);
        assert_eq!(f.s.mul(&f.d).mul(&f.t), a);
        assert_eq!(f.invariant_factors(), vec![2, 2]);
    }

    #[test]
    fn solve_integer_examples() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(solve_integer(&imat(&[&[2]]), &b(&[4])), Some(b(&[2])));
        assert_eq!(solve_integer(&imat(&[&[2]]), &b(&[3])), None);
        assert_eq!(solve_integer(&imat(&[&[1, 1], &[0, 2]]), &b(&[1, 3])), None);
        let a = imat(&[&[2, 3]]);
        let x = solve_integer(&a, &b(&[1])).unwrap();
        assert_eq!(a.mul_vec(&x), b(&[1]));
    }

    #[test]
    fn lcm_denominator_examples() {
        assert_eq!(lcm_denominators(&[q("1/2"), q("1/3")]), BigInt::from(6));
        assert_eq!(lcm_denominators(&[]), BigInt::from(1));
        assert_eq!(lcm_denominators(&[q("2"), q("3")]), BigInt::from(1));
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(
            primitive_integer_vector(&[q("1/2"), q("1/2"), q("1/4")]),
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(1)]
        );
        assert_eq!(primitive_integer_vector(&[q("0"), q("-6")]), vec![BigInt::from(0), BigInt::from(-1)]);
    }
}
