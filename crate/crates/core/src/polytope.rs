//! Rational polytopes at desk scale: V/H conversion, lattice-point counts of
//! dilates, and Ehrhart quasipolynomial fitting.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmath::{
    determinant, lcm_denominators, nullspace, parse_rational, primitive_integer_vector, rank, solve, IntegerRing,
    Matrix,
};
use crate::quasipoly::QuasiPoly;
use crate::{QuasiPolynomial, RatMatrix, Rational};

pub type Point = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("degenerate input: ambient dimension 0")]
    Degenerate,
    #[error("no points given")]
    NoPoints,
    #[error("point has {found} coordinates, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unbounded: the inequalities admit a recession direction")]
    Unbounded,
    #[error("empty: no point satisfies the constraints")]
    Empty,
    #[error("not full-dimensional")]
    NotFullDimensional,
    #[error("inconsistent representations: {0}")]
    Inconsistent(String),
    #[error("inconsistent fit: {0}")]
    InconsistentFit(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// `normal·x ≤ rhs` as an inequality, `normal·x = rhs` as an equality.
/// Always primitive: `gcd(normal, rhs) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub normal: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Constraint {
    fn from_rational(normal: &[Rational], rhs: &Rational) -> Self {
        let mut all = normal.to_vec();
        all.push(rhs.clone());
        let mut ints = primitive_integer_vector(&all);
        let rhs = ints.pop().expect("nonempty");
        Constraint { normal: ints, rhs }
    }

    /// Flips an equality so its leading nonzero normal entry is positive.
    fn sign_normalized(self) -> Self {
        match self.normal.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => {
                Constraint { normal: self.normal.iter().map(|c| -c).collect(), rhs: -self.rhs }
            }
            _ => self,
        }
    }

    pub fn value(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (a, xi)| acc + Rational::from_integer(a.clone()) * xi)
    }

    pub fn holds_le(&self, x: &[Rational]) -> bool {
        self.value(x) <= Rational::from_integer(self.rhs.clone())
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.value(x) == Rational::from_integer(self.rhs.clone())
    }

    fn normal_rational(&self) -> Vec<Rational> {
        self.normal.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.normal {
            write!(f, "{c} ")?;
        }
        write!(f, "{}", self.rhs)
    }
}

fn differences(points: &[&Point]) -> RatMatrix {
    let m = points[0].len();
    let rows = points[1..].iter().map(|p| p.iter().zip(points[0]).map(|(a, b)| a - b).collect()).collect();
    Matrix::from_rows(m, rows)
}

fn affine_dim(points: &[&Point]) -> usize {
    rank(&differences(points))
}

/// Integer equations cutting out the affine span of `points`, one per free
/// direction of the difference matrix, sign-normalized.
pub fn affine_hull(points: &[Point]) -> Vec<Constraint> {
    assert!(!points.is_empty(), "affine hull of no points");
    let refs: Vec<&Point> = points.iter().collect();
    nullspace(&differences(&refs))
        .into_iter()
        .map(|c| {
            let rhs = c.iter().zip(&points[0]).fold(Rational::zero(), |acc, (a, x)| acc + a * x);
            Constraint::from_rational(&c, &rhs).sign_normalized()
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Facet inequalities and affine-hull equalities of `conv(vertices)`.
///
/// Each candidate facet hyperplane is spanned by `dim` of the points inside
/// the affine hull; it is kept when every point lies on one closed side.
pub fn hrep_from_vrep(vertices: &[Point]) -> Result<(Vec<Constraint>, Vec<Constraint>), PolytopeError> {
    let m = check_points(vertices)?;
    let equalities = affine_hull(vertices);
    let dim = m - equalities.len();
    let mut facets = BTreeSet::new();
    if dim > 0 {
        let eq_rows: Vec<Vec<Rational>> = equalities.iter().map(Constraint::normal_rational).collect();
        for subset in combinations(vertices.len(), dim) {
            let base = &vertices[subset[0]];
            let mut rows = eq_rows.clone();
            rows.extend(subset[1..].iter().map(|&i| vertices[i].iter().zip(base).map(|(a, b)| a - b).collect()));
            let ns = nullspace(&Matrix::from_rows(m, rows));
            if ns.len() != 1 {
                continue;
            }
            let a = &ns[0];
            let dot = |p: &Point| a.iter().zip(p).fold(Rational::zero(), |acc, (x, y)| acc + x * y);
            let b = dot(base);
            let values: Vec<Rational> = vertices.iter().map(dot).collect();
            let (normal, rhs) = if values.iter().all(|v| *v <= b) {
                (a.clone(), b)
            } else if values.iter().all(|v| *v >= b) {
                (a.iter().map(|x| -x).collect(), -b)
            } else {
                continue;
            };
            facets.insert(Constraint::from_rational(&normal, &rhs));
        }
    }
    Ok((facets.into_iter().collect(), equalities))
}

fn check_points(points: &[Point]) -> Result<usize, PolytopeError> {
    let first = points.first().ok_or(PolytopeError::NoPoints)?;
    let m = first.len();
    if m == 0 {
        return Err(PolytopeError::Degenerate);
    }
    if let Some(p) = points.iter().find(|p| p.len() != m) {
        return Err(PolytopeError::DimensionMismatch { expected: m, found: p.len() });
    }
    Ok(m)
}

fn system(constraints: &[&Constraint], m: usize) -> (RatMatrix, Vec<Rational>) {
    let rows = constraints.iter().map(|c| c.normal_rational()).collect();
    let rhs = constraints.iter().map(|c| Rational::from_integer(c.rhs.clone())).collect();
    (Matrix::from_rows(m, rows), rhs)
}

/// Vertices of `{x : A·x ≤ b, C·x = d}`, sorted lexicographically.
///
/// Candidate vertices solve every full-rank square subsystem of active
/// constraints; boundedness is checked through the extreme rays of the
/// recession cone.
pub fn vrep_from_hrep(
    inequalities: &[Constraint],
    equalities: &[Constraint],
    ambient_dim: usize,
) -> Result<Vec<Point>, PolytopeError> {
    let m = ambient_dim;
    if m == 0 {
        return Err(PolytopeError::Degenerate);
    }
    for c in inequalities.iter().chain(equalities) {
        if c.normal.len() != m {
            return Err(PolytopeError::DimensionMismatch { expected: m, found: c.normal.len() });
        }
    }
    let all: Vec<&Constraint> = inequalities.iter().chain(equalities).collect();
    let lineality = nullspace(&system(&all, m).0);
    if !lineality.is_empty() {
        // Nonempty iff the slice orthogonal to the lineality space is.
        let mut eqs = equalities.to_vec();
        eqs.extend(lineality.iter().map(|k| Constraint::from_rational(k, &Rational::zero())));
        return match pointed_vertices(inequalities, &eqs, m) {
            Ok(v) if !v.is_empty() => Err(PolytopeError::Unbounded),
            _ => Err(PolytopeError::Empty),
        };
    }
    let vertices = pointed_vertices(inequalities, equalities, m)?;
    if vertices.is_empty() {
        return Err(PolytopeError::Empty);
    }
    if has_recession_ray(inequalities, equalities, m) {
        return Err(PolytopeError::Unbounded);
    }
    Ok(vertices)
}

fn pointed_vertices(
    inequalities: &[Constraint],
    equalities: &[Constraint],
    m: usize,
) -> Result<Vec<Point>, PolytopeError> {
    let eq_refs: Vec<&Constraint> = equalities.iter().collect();
    let (eq_mat, eq_rhs) = system(&eq_refs, m);
    if solve(&eq_mat, &eq_rhs).is_none() {
        return Err(PolytopeError::Empty);
    }
    let eq_rank = rank(&eq_mat);
    let mut found = BTreeSet::new();
    for subset in combinations(inequalities.len(), m - eq_rank) {
        let mut rows: Vec<&Constraint> = eq_refs.clone();
        rows.extend(subset.iter().map(|&i| &inequalities[i]));
        let (a, b) = system(&rows, m);
        if rank(&a) != m {
            continue;
        }
        let Some(x) = solve(&a, &b) else { continue };
        if inequalities.iter().all(|c| c.holds_le(&x)) {
            found.insert(x);
        }
    }
    Ok(found.into_iter().collect())
}

fn has_recession_ray(inequalities: &[Constraint], equalities: &[Constraint], m: usize) -> bool {
    let eq_refs: Vec<&Constraint> = equalities.iter().collect();
    let eq_rank = rank(&system(&eq_refs, m).0);
    if eq_rank >= m {
        return false;
    }
    let zero = Rational::zero();
    for subset in combinations(inequalities.len(), m - 1 - eq_rank) {
        let mut rows: Vec<&Constraint> = eq_refs.clone();
        rows.extend(subset.iter().map(|&i| &inequalities[i]));
        let ns = nullspace(&system(&rows, m).0);
        if ns.len() != 1 {
            continue;
        }
        let y = &ns[0];
        let values: Vec<Rational> = inequalities.iter().map(|c| c.value(y)).collect();
        if values.iter().all(|v| *v <= zero) || values.iter().all(|v| *v >= zero) {
            return true;
        }
    }
    false
}

/// A bounded rational polytope with both representations kept in sync.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    inequalities: Vec<Constraint>,
    equalities: Vec<Constraint>,
    dim: usize,
}

impl RationalPolytope {
    /// Convex hull of `points`. Duplicates and non-vertices are dropped; the
    /// remaining vertices keep their input order.
    pub fn from_vertices(points: &[Point]) -> Result<Self, PolytopeError> {
        let m = check_points(points)?;
        let mut seen = BTreeSet::new();
        let distinct: Vec<Point> = points.iter().filter(|p| seen.insert((*p).clone())).cloned().collect();
        let (inequalities, equalities) = hrep_from_vrep(&distinct)?;
        let dim = m - equalities.len();
        let vertices: Vec<Point> = distinct
            .into_iter()
            .filter(|p| {
                let mut active: Vec<&Constraint> = equalities.iter().collect();
                active.extend(inequalities.iter().filter(|c| c.is_tight(p)));
                rank(&system(&active, m).0) == m
            })
            .collect();
        let poly = RationalPolytope { ambient_dim: m, vertices, inequalities, equalities, dim };
        poly.check_consistency()?;
        Ok(poly)
    }

    /// Polytope `{x : A·x ≤ b, C·x = d}`.
    pub fn from_hrep(
        inequalities: &[Constraint],
        equalities: &[Constraint],
        ambient_dim: usize,
    ) -> Result<Self, PolytopeError> {
        let vertices = vrep_from_hrep(inequalities, equalities, ambient_dim)?;
        Self::from_vertices(&vertices)
    }

    /// Both blocks given: they must describe the same point set.
    pub fn from_both(points: &[Point], inequalities: &[Constraint]) -> Result<Self, PolytopeError> {
        let poly = Self::from_vertices(points)?;
        let from_h = vrep_from_hrep(inequalities, &[], poly.ambient_dim)?;
        let ours: BTreeSet<&Point> = poly.vertices.iter().collect();
        let theirs: BTreeSet<&Point> = from_h.iter().collect();
        if ours != theirs {
            return Err(PolytopeError::Inconsistent("vertex and inequality blocks describe different sets".into()));
        }
        Ok(poly)
    }

    // V ⊆ H by evaluation, H ⊆ conv(V) by recomputing the vertices of H.
    fn check_consistency(&self) -> Result<(), PolytopeError> {
        for v in &self.vertices {
            if !self.inequalities.iter().all(|c| c.holds_le(v)) || !self.equalities.iter().all(|c| c.is_tight(v)) {
                return Err(PolytopeError::Inconsistent("vertex violates its own H-representation".into()));
            }
        }
        let back = vrep_from_hrep(&self.inequalities, &self.equalities, self.ambient_dim)?;
        let ours: BTreeSet<&Point> = self.vertices.iter().collect();
        if back.iter().collect::<BTreeSet<_>>() != ours {
            return Err(PolytopeError::Inconsistent("H-representation has extra vertices".into()));
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn inequalities(&self) -> &[Constraint] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[Constraint] {
        &self.equalities
    }

    /// Indices of the vertices on which `c` is tight.
    pub fn tight_vertices(&self, c: &Constraint) -> BTreeSet<usize> {
        (0..self.vertices.len()).filter(|&i| c.is_tight(&self.vertices[i])).collect()
    }

    /// lcm of all vertex-coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        lcm_denominators(self.vertices.iter().flatten())
    }

    /// `|nP ∩ Z^m|` by scanning the bounding box of `nP`. `0·P = {0}`.
    pub fn count_lattice_points(&self, n: u64) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        let scale = Rational::from_integer(BigInt::from(n));
        let m = self.ambient_dim;
        let mut lo = Vec::with_capacity(m);
        let mut hi = Vec::with_capacity(m);
        for j in 0..m {
            let coords = self.vertices.iter().map(|v| &v[j] * &scale);
            let (min, max) = coords.fold((None::<Rational>, None::<Rational>), |(lo, hi), x| {
                (
                    Some(lo.map_or(x.clone(), |l| l.min(x.clone()))),
                    Some(hi.map_or(x.clone(), |h| h.max(x))),
                )
            });
            lo.push(min.expect("nonempty").ceil().to_integer());
            hi.push(max.expect("nonempty").floor().to_integer());
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return BigInt::zero();
        }
        let nb = BigInt::from(n);
        let scaled = |cs: &[Constraint]| -> Vec<(Vec<BigInt>, BigInt)> {
            cs.iter().map(|c| (c.normal.clone(), &c.rhs * &nb)).collect()
        };
        let ineqs = scaled(&self.inequalities);
        let eqs = scaled(&self.equalities);
        let small = |x: &BigInt| x.abs() < BigInt::from(1u64 << 40);
        let fits = lo.iter().chain(&hi).all(small)
            && ineqs.iter().chain(&eqs).all(|(a, b)| small(b) && a.iter().all(small));
        if fits {
            let cast = |v: &[BigInt]| v.iter().map(|x| x.to_i128().expect("checked")).collect::<Vec<i128>>();
            let cast_sys = |s: &[(Vec<BigInt>, BigInt)]| -> Vec<(Vec<i128>, i128)> {
                s.iter().map(|(a, b)| (cast(a), b.to_i128().expect("checked"))).collect()
            };
            BigInt::from(count_box(&cast(&lo), &cast(&hi), &cast_sys(&ineqs), &cast_sys(&eqs)))
        } else {
            count_box(&lo, &hi, &ineqs, &eqs)
        }
    }

    /// Fits `E_P` on `n = 1..=D·(dim+1)` with declared period `D` (the vertex
    /// denominator lcm), then validates on `D` further dilates.
    pub fn ehrhart_quasipolynomial(&self) -> Result<QuasiPolynomial, PolytopeError> {
        let period = self
            .denominator_lcm()
            .to_usize()
            .ok_or_else(|| PolytopeError::InconsistentFit("denominator lcm too large".into()))?;
        let fit_end = period * (self.dim + 1);
        let samples: BTreeMap<i64, Rational> = (1..=fit_end)
            .map(|n| (n as i64, Rational::from_integer(self.count_lattice_points(n as u64))))
            .collect();
        let q = QuasiPoly::fit_from_samples(&samples, period, self.dim)
            .map_err(|e| PolytopeError::InconsistentFit(e.to_string()))?;
        for n in fit_end + 1..=fit_end + period {
            let count = Rational::from_integer(self.count_lattice_points(n as u64));
            if q.evaluate(n as i64) != count {
                return Err(PolytopeError::InconsistentFit(format!("validation failed at n={n}")));
            }
        }
        if q.degree() != self.dim as isize {
            return Err(PolytopeError::InconsistentFit(format!(
                "fitted degree {} differs from dimension {}",
                q.degree(),
                self.dim
            )));
        }
        Ok(q)
    }

    /// Euclidean volume of a full-dimensional polytope, summing simplices
    /// of a recursive fan triangulation.
    pub fn volume(&self) -> Result<Rational, PolytopeError> {
        if self.dim != self.ambient_dim {
            return Err(PolytopeError::NotFullDimensional);
        }
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let factorial = (1..=self.dim as u64).fold(BigInt::one(), |acc, k| acc * k);
        let mut total = Rational::zero();
        for simplex in fan_triangulation(&self.vertices, all) {
            let pts: Vec<&Point> = simplex.iter().map(|&i| &self.vertices[i]).collect();
            total += determinant(&differences(&pts)).abs();
        }
        Ok(total / Rational::from_integer(factorial))
    }

    /// `P + z` for an integer vector `z`.
    pub fn translate(&self, z: &[BigInt]) -> Result<Self, PolytopeError> {
        let shifted: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(z).map(|(x, t)| x + Rational::from_integer(t.clone())).collect())
            .collect();
        Self::from_vertices(&shifted)
    }
}

fn count_box<T: IntegerRing>(lo: &[T], hi: &[T], ineqs: &[(Vec<T>, T)], eqs: &[(Vec<T>, T)]) -> T {
    let dot = |a: &[T], x: &[T]| a.iter().zip(x).fold(T::zero(), |acc, (p, q)| acc + p.clone() * q.clone());
    let mut x = lo.to_vec();
    let mut count = T::zero();
    loop {
        if eqs.iter().all(|(a, b)| dot(a, &x) == *b) && ineqs.iter().all(|(a, b)| dot(a, &x) <= *b) {
            count = count + T::one();
        }
        let mut j = 0;
        loop {
            if j == x.len() {
                return count;
            }
            if x[j] < hi[j] {
                x[j] = x[j].clone() + T::one();
                break;
            }
            x[j] = lo[j].clone();
            j += 1;
        }
    }
}

/// Simplices (as vertex index lists) covering `conv(points[idx])`: cone from
/// the first vertex over the triangulated facets not containing it.
fn fan_triangulation(points: &[Point], idx: Vec<usize>) -> Vec<Vec<usize>> {
    let sub: Vec<&Point> = idx.iter().map(|&i| &points[i]).collect();
    let k = affine_dim(&sub);
    if idx.len() == k + 1 {
        return vec![idx];
    }
    let owned: Vec<Point> = sub.iter().map(|p| (*p).clone()).collect();
    let (facets, _) = hrep_from_vrep(&owned).expect("nonempty point set");
    let apex = idx[0];
    let mut out = Vec::new();
    for facet in facets {
        let tight: Vec<usize> = idx.iter().copied().filter(|&i| facet.is_tight(&points[i])).collect();
        if tight.contains(&apex) {
            continue;
        }
        for mut s in fan_triangulation(points, tight) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

impl FromStr for RationalPolytope {
    type Err = PolytopeError;

    /// Reads the polytope file format: `ambient <m>`, then a `vertices <k>`
    /// block and/or an `inequalities <l>` block (`a_1 … a_m b` meaning
    /// `a·x ≤ b`). `#` starts a comment.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let perr = |line: usize, message: String| PolytopeError::Parse { line, message };
        let header = |line: usize, text: &str, key: &str| -> Result<usize, PolytopeError> {
            match text.split_whitespace().collect::<Vec<_>>().as_slice() {
                [k, v] if *k == key => v.parse().map_err(|_| perr(line, format!("bad count `{v}`"))),
                _ => Err(perr(line, format!("expected `{key} <count>`"))),
            }
        };
        let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty file".into()))?;
        let m = header(ln, first, "ambient")?;
        if m == 0 {
            return Err(PolytopeError::Degenerate);
        }
        let mut vertices: Option<Vec<Point>> = None;
        let mut inequalities: Option<Vec<Constraint>> = None;
        while let Some((ln, line)) = lines.next() {
            let key = line.split_whitespace().next().unwrap_or("");
            match key {
                "vertices" if vertices.is_none() => {
                    let k = header(ln, line, "vertices")?;
                    let mut block = Vec::with_capacity(k);
                    for _ in 0..k {
                        let (ln, row) = lines.next().ok_or_else(|| perr(ln, "truncated vertices block".into()))?;
                        let p = row
                            .split_whitespace()
                            .map(parse_rational)
                            .collect::<Result<Point, _>>()
                            .map_err(|e| perr(ln, e.to_string()))?;
                        if p.len() != m {
                            return Err(perr(ln, format!("expected {m} coordinates, found {}", p.len())));
                        }
                        block.push(p);
                    }
                    vertices = Some(block);
                }
                "inequalities" if inequalities.is_none() => {
                    let l = header(ln, line, "inequalities")?;
                    let mut block = Vec::with_capacity(l);
                    for _ in 0..l {
                        let (ln, row) =
                            lines.next().ok_or_else(|| perr(ln, "truncated inequalities block".into()))?;
                        let mut ints = row
                            .split_whitespace()
                            .map(|s| s.parse::<BigInt>().map_err(|_| perr(ln, format!("bad integer `{s}`"))))
                            .collect::<Result<Vec<_>, _>>()?;
                        if ints.len() != m + 1 {
                            return Err(perr(ln, format!("expected {} integers, found {}", m + 1, ints.len())));
                        }
                        let rhs = ints.pop().expect("nonempty");
                        block.push(Constraint { normal: ints, rhs });
                    }
                    inequalities = Some(block);
                }
                _ => return Err(perr(ln, format!("unexpected line `{line}`"))),
            }
        }
        match (vertices, inequalities) {
            (Some(v), Some(h)) => Self::from_both(&v, &h),
            (Some(v), None) => Self::from_vertices(&v),
            (None, Some(h)) => Self::from_hrep(&h, &[], m),
            (None, None) => Err(perr(0, "need a vertices or inequalities block".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn pts(rows: &[&[&str]]) -> Vec<Point> {
        rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
    }

    fn cons(normal: &[i64], rhs: i64) -> Constraint {
        Constraint { normal: normal.iter().map(|&x| BigInt::from(x)).collect(), rhs: BigInt::from(rhs) }
    }

    fn square() -> RationalPolytope {
        RationalPolytope::from_vertices(&pts(&[&["0", "0"], &["1", "0"], &["0", "1"], &["1", "1"]])).unwrap()
    }

    fn half_segment() -> RationalPolytope {
        RationalPolytope::from_vertices(&pts(&[&["0"], &["1/2"]])).unwrap()
    }

    fn half_triangle() -> RationalPolytope {
        RationalPolytope::from_vertices(&pts(&[&["0", "0"], &["1/2", "0"], &["0", "1/2"]])).unwrap()
    }

    #[test]
    fn affine_hull_examples() {
        assert_eq!(affine_hull(&pts(&[&["0", "0"], &["1", "0"]])), vec![cons(&[0, 1], 0)]);
        assert_eq!(affine_hull(&pts(&[&["1/2", "0"], &["0", "1/2"]])), vec![cons(&[2, 2], 1)]);
        assert_eq!(affine_hull(&pts(&[&["1/2"]])), vec![cons(&[2], 1)]);
        assert!(affine_hull(&pts(&[&["0", "0"], &["1", "0"], &["0", "1"]])).is_empty());
    }

    #[test]
    fn hrep_examples() {
        let (ineq, eq) = hrep_from_vrep(&pts(&[&["0", "0"], &["1", "0"], &["0", "1"], &["1", "1"]])).unwrap();
        assert!(eq.is_empty());
        let expected: BTreeSet<Constraint> =
            [cons(&[-1, 0], 0), cons(&[0, -1], 0), cons(&[1, 0], 1), cons(&[0, 1], 1)].into_iter().collect();
        assert_eq!(ineq.into_iter().collect::<BTreeSet<_>>(), expected);

        let (ineq, _) = hrep_from_vrep(&pts(&[&["0"], &["1/2"]])).unwrap();
        assert_eq!(ineq.into_iter().collect::<BTreeSet<_>>(), [cons(&[-1], 0), cons(&[2], 1)].into_iter().collect());

        let (ineq, _) = hrep_from_vrep(&pts(&[&["0", "0"], &["1", "0"], &["0", "1"]])).unwrap();
        let expected: BTreeSet<Constraint> =
            [cons(&[-1, 0], 0), cons(&[0, -1], 0), cons(&[1, 1], 1)].into_iter().collect();
        assert_eq!(ineq.into_iter().collect::<BTreeSet<_>>(), expected);

        assert_eq!(hrep_from_vrep(&[vec![], vec![]]), Err(PolytopeError::Degenerate));
    }

    #[test]
    fn vrep_examples() {
        assert_eq!(vrep_from_hrep(&[cons(&[-1], 0), cons(&[1], 1)], &[], 1).unwrap(), pts(&[&["0"], &["1"]]));
        assert_eq!(vrep_from_hrep(&[cons(&[-1], 0), cons(&[2], 1)], &[], 1).unwrap(), pts(&[&["0"], &["1/2"]]));
        assert_eq!(vrep_from_hrep(&[cons(&[-1], 0)], &[], 1), Err(PolytopeError::Unbounded));
        assert_eq!(vrep_from_hrep(&[cons(&[-1], -2), cons(&[1], 1)], &[], 1), Err(PolytopeError::Empty));
        // a strip in the plane: x in [0,1], y free
        assert_eq!(vrep_from_hrep(&[cons(&[-1, 0], 0), cons(&[1, 0], 1)], &[], 2), Err(PolytopeError::Unbounded));
        // a wedge with a vertex but an unbounded direction
        assert_eq!(vrep_from_hrep(&[cons(&[-1, 0], 0), cons(&[0, -1], 0)], &[], 2), Err(PolytopeError::Unbounded));
        assert_eq!(
            vrep_from_hrep(&[cons(&[-1, 0], 0), cons(&[1, 0], 1)], &[cons(&[0, 1], 3)], 2).unwrap(),
            pts(&[&["0", "3"], &["1", "3"]])
        );
    }

    #[test]
    fn representation_round_trip() {
        let cube = pts(&[
            &["0", "0", "0"],
            &["0", "0", "1"],
            &["0", "1", "0"],
            &["0", "1", "1"],
            &["1", "0", "0"],
            &["1", "0", "1"],
            &["1", "1", "0"],
            &["1", "1", "1"],
        ]);
        let polys = [
            cube.clone(),
            pts(&[&["0", "0"], &["1/2", "0"], &["0", "1/2"]]),
            pts(&[&["1/3", "0"], &["2/3", "1"]]),
            pts(&[&["1/2", "1/3", "0"], &["1", "0", "1"], &["0", "1", "1/2"]]),
        ];
        for v in polys {
            let (ineq, eq) = hrep_from_vrep(&v).unwrap();
            let back: BTreeSet<Point> = vrep_from_hrep(&ineq, &eq, v[0].len()).unwrap().into_iter().collect();
            assert_eq!(back, v.into_iter().collect());
        }
    }

    #[test]
    fn redundant_points_are_dropped() {
        let p = RationalPolytope::from_vertices(&pts(&[
            &["0", "0"],
            &["1/2", "1/2"],
            &["1", "0"],
            &["0", "1"],
            &["1", "1"],
            &["1", "0"],
            &["1", "1/2"],
        ]))
        .unwrap();
        assert_eq!(p.vertices(), pts(&[&["0", "0"], &["1", "0"], &["0", "1"], &["1", "1"]]).as_slice());
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn count_examples() {
        assert_eq!(square().count_lattice_points(2), BigInt::from(9));
        assert_eq!(half_segment().count_lattice_points(3), BigInt::from(2));
        let tri = RationalPolytope::from_vertices(&pts(&[&["0", "0"], &["1", "0"], &["0", "1"]])).unwrap();
        assert_eq!(tri.count_lattice_points(1), BigInt::from(3));
        assert_eq!(tri.count_lattice_points(0), BigInt::from(1));
        // segment on the line y = 1/2 meets the lattice only on even dilates
        let raised = RationalPolytope::from_vertices(&pts(&[&["0", "1/2"], &["1", "1/2"]])).unwrap();
        assert_eq!(raised.count_lattice_points(3), BigInt::from(0));
        assert_eq!(raised.count_lattice_points(4), BigInt::from(5));
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(square().ehrhart_quasipolynomial().unwrap().to_string(), "period=1 degree=2\n0: 1 2 1");
        assert_eq!(
            half_segment().ehrhart_quasipolynomial().unwrap().to_string(),
            "period=2 degree=1\n0: 1/2 1\n1: 1/2 1/2"
        );
        assert_eq!(
            half_triangle().ehrhart_quasipolynomial().unwrap().to_string(),
            "period=2 degree=2\n0: 1/8 3/4 1\n1: 1/8 1/2 3/8"
        );
    }

    #[test]
    fn volume_examples() {
        assert_eq!(square().volume().unwrap(), q("1"));
        let tri = RationalPolytope::from_vertices(&pts(&[&["0", "0"], &["1", "0"], &["0", "1"]])).unwrap();
        assert_eq!(tri.volume().unwrap(), q("1/2"));
        assert_eq!(half_triangle().volume().unwrap(), q("1/8"));
        let octahedron = pts(&[
            &["1", "0", "0"],
            &["-1", "0", "0"],
            &["0", "1", "0"],
            &["0", "-1", "0"],
            &["0", "0", "1"],
            &["0", "0", "-1"],
        ]);
        assert_eq!(RationalPolytope::from_vertices(&octahedron).unwrap().volume().unwrap(), q("4/3"));
        let seg = RationalPolytope::from_vertices(&pts(&[&["0", "0"], &["1", "1"]])).unwrap();
        assert_eq!(seg.volume(), Err(PolytopeError::NotFullDimensional));
    }

    #[test]
    fn parse_file_format() {
        let p: RationalPolytope = "ambient 1\nvertices 2\n0\n1/2\n".parse().unwrap();
        assert_eq!(p, half_segment());
        let p: RationalPolytope = "# unit square\nambient 2\ninequalities 4\n-1 0 0\n0 -1 0\n1 0 1\n0 1 1\n".parse().unwrap();
        assert_eq!(p.count_lattice_points(2), BigInt::from(9));
        let both = "ambient 1\nvertices 2\n0\n1/2\ninequalities 2\n-1 0\n2 1\n";
        assert!(both.parse::<RationalPolytope>().is_ok());
        let clash = "ambient 1\nvertices 2\n0\n1/2\ninequalities 2\n-1 0\n1 1\n";
        assert!(matches!(clash.parse::<RationalPolytope>(), Err(PolytopeError::Inconsistent(_))));
        assert!(matches!("ambient 1\ninequalities 1\n-1 0\n".parse::<RationalPolytope>(), Err(PolytopeError::Unbounded)));
        assert!(matches!("ambient 2\nvertices 1\n1/0 0\n".parse::<RationalPolytope>(), Err(PolytopeError::Parse { line: 3, .. })));
        assert!(matches!("ambient 2\nvertices 2\n0 0\n".parse::<RationalPolytope>(), Err(PolytopeError::Parse { .. })));
    }
}
