//! Faces of a rational polytope, the lattice test on their affine spans,
//! and the check `grade E_P < δ*`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::exactmath::{solve_integer, Matrix};
use crate::polytope::{affine_hull, Constraint, Point, PolytopeError, RationalPolytope};
use crate::QuasiPolynomial;

/// A nonempty face, identified by the parent vertices it contains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub vertex_indices: Vec<usize>,
    pub hull_equalities: Vec<Constraint>,
}

impl Face {
    fn new(poly: &RationalPolytope, vertex_indices: Vec<usize>) -> Self {
        let points: Vec<Point> = vertex_indices.iter().map(|&i| poly.vertices()[i].clone()).collect();
        let hull_equalities = affine_hull(&points);
        let dim = poly.ambient_dim() - hull_equalities.len();
        Face { dim, vertex_indices, hull_equalities }
    }

    /// Whether the affine span of the face contains an integer point.
    pub fn span_contains_lattice_point(&self) -> bool {
        equations_have_integer_solution(&self.hull_equalities)
    }
}

/// Whether `{x : c·x = d}` has an integer point, by Smith normal form.
pub fn equations_have_integer_solution(equations: &[Constraint]) -> bool {
    let Some(first) = equations.first() else {
        return true;
    };
    let cols = first.normal.len();
    let a = Matrix::from_rows(cols, equations.iter().map(|c| c.normal.clone()).collect());
    let b: Vec<BigInt> = equations.iter().map(|c| c.rhs.clone()).collect();
    solve_integer(&a, &b).is_some()
}

pub fn affine_span_contains_lattice_point(face: &Face) -> bool {
    face.span_contains_lattice_point()
}

/// All nonempty faces, `P` included, sorted by `(dim, vertex indices)`.
///
/// Every proper face is an intersection of facets, so closing the vertex set
/// of `P` under intersection with facet incidence sets reaches all of them.
pub fn enumerate_faces(poly: &RationalPolytope) -> Vec<Face> {
    let facets: Vec<BTreeSet<usize>> = poly.inequalities().iter().map(|c| poly.tight_vertices(c)).collect();
    let top: BTreeSet<usize> = (0..poly.vertices().len()).collect();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::from([top.clone()]);
    let mut stack = vec![top];
    while let Some(face) = stack.pop() {
        for facet in &facets {
            let meet: BTreeSet<usize> = face.intersection(facet).copied().collect();
            if !meet.is_empty() && seen.insert(meet.clone()) {
                stack.push(meet);
            }
        }
    }
    let mut faces: Vec<Face> = seen.into_iter().map(|s| Face::new(poly, s.into_iter().collect())).collect();
    faces.sort();
    faces
}

/// Smallest `δ` such that every `δ`-face passes the span test; `None` when
/// even the span of `P` misses the lattice.
pub fn min_delta_hypothesis(poly: &RationalPolytope) -> Option<usize> {
    min_delta_from_faces(&enumerate_faces(poly), poly.dim())
}

fn min_delta_from_faces(faces: &[Face], dim: usize) -> Option<usize> {
    (0..=dim).find(|&delta| faces.iter().filter(|f| f.dim == delta).all(Face::span_contains_lattice_point))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EhrhartReport {
    pub quasipolynomial: QuasiPolynomial,
    pub period: usize,
    pub grade: isize,
    pub delta_star: Option<usize>,
    /// `true` also when the hypothesis is vacuous (`delta_star` is `None`).
    pub holds: bool,
    /// Faces with their span-test outcome, in canonical order.
    pub faces: Vec<(Face, bool)>,
    /// For each `δ = 0..=dim`, indices into `faces` of the failing `δ`-faces.
    pub per_delta: Vec<Vec<usize>>,
}

impl EhrhartReport {
    pub fn vacuous(&self) -> bool {
        self.delta_star.is_none()
    }

    /// `δ* − 1 − grade`, the slack in the bound.
    pub fn gap(&self) -> Option<isize> {
        self.delta_star.map(|d| d as isize - 1 - self.grade)
    }
}

pub fn verify_ehrhart_grade_bound(poly: &RationalPolytope) -> Result<EhrhartReport, PolytopeError> {
    let (period, quasipolynomial) = poly.ehrhart_quasipolynomial()?.minimal_period();
    let grade = quasipolynomial.grade();
    let faces: Vec<(Face, bool)> = enumerate_faces(poly)
        .into_iter()
        .map(|f| {
            let ok = f.span_contains_lattice_point();
            (f, ok)
        })
        .collect();
    let per_delta: Vec<Vec<usize>> = (0..=poly.dim())
        .map(|delta| (0..faces.len()).filter(|&i| faces[i].0.dim == delta && !faces[i].1).collect())
        .collect();
    let delta_star = per_delta.iter().position(Vec::is_empty);
    let holds = delta_star.is_none_or(|d| grade < d as isize);
    Ok(EhrhartReport { quasipolynomial, period, grade, delta_star, holds, faces, per_delta })
}
