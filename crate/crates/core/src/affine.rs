//! Affine volume, barycenters, incidence, simplex coordinates, the duality
//! pairing, factorization of k-vectors and the polygon and closed-surface
//! reducers.
//!
//! All areas and volumes are ratios to the frame simplex; nothing here uses
//! a metric.

use alloc::vec;
use alloc::vec::Vec;

use crate::blade::Blade;
use crate::error::Error;
use crate::form::{Frame, GeometricForm};
use crate::linalg;
use crate::scalar::Scalar;

fn require_points(points: &[GeometricForm]) -> Result<(), Error> {
    if points.iter().all(GeometricForm::is_point) {
        Ok(())
    } else {
        Err(Error::NotAPoint)
    }
}

fn require_frame(frame: Frame, forms: &[GeometricForm]) -> Result<(), Error> {
    match forms.iter().find(|x| x.frame() != frame) {
        Some(x) => Err(Error::FrameMismatch { left: frame, right: x.frame() }),
        None => Ok(()),
    }
}

fn require_space(frame: Frame) -> Result<(), Error> {
    if frame.dim() == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { required: 3, found: frame.dim() })
    }
}

impl Frame {
    /// Affine volume of `n + 1` points, normalized so the frame simplex has
    /// volume 1.
    pub fn vol(self, points: &[GeometricForm]) -> Result<Scalar, Error> {
        if points.len() != self.dim() + 1 {
            return Err(Error::Arity { expected: self.dim() + 1, found: points.len() });
        }
        require_frame(self, points)?;
        require_points(points)?;
        Ok(GeometricForm::wedge_all(points)?.top_coefficient())
    }
}

/// A point carrying a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPoint {
    point: GeometricForm,
    weight: Scalar,
}

impl WeightedPoint {
    pub fn new(point: GeometricForm, weight: Scalar) -> Result<Self, Error> {
        if !point.is_point() {
            return Err(Error::NotAPoint);
        }
        Ok(WeightedPoint { point, weight })
    }

    pub fn point(&self) -> &GeometricForm {
        &self.point
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// The degree-1 form `weight · point`.
    pub fn form(&self) -> GeometricForm {
        self.point.scale(&self.weight)
    }
}

/// Barycenter `G` with `sum a_i p_i = (sum a_i) G`, returned with the total
/// weight.
pub fn barycenter(system: &[WeightedPoint]) -> Result<WeightedPoint, Error> {
    let first = system.first().ok_or(Error::EmptySystem)?;
    let frame = first.point.frame();
    let total =
        GeometricForm::linear_combination(frame, system.iter().map(|w| (w.weight.clone(), &w.point)))?;
    let mass = total.mass();
    let inv = mass.recip().ok_or(Error::NoBarycenter)?;
    let point = total.scale(&inv);
    // The deviation total - mass·G vanishes by construction.
    debug_assert!((&total - &point.scale(&mass)).is_zero());
    WeightedPoint::new(point, mass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Incidence {
    /// `A∧B∧C = 0`.
    Collinear,
    /// `A∧B∧C∧D = 0`.
    Coplanar,
    /// `B - A = D - C`: segments AB and CD are parallel, equally long and
    /// equally oriented.
    ParallelSegments,
}

impl Incidence {
    pub fn arity(self) -> usize {
        match self {
            Incidence::Collinear => 3,
            Incidence::Coplanar | Incidence::ParallelSegments => 4,
        }
    }
}

pub fn incidence(kind: Incidence, points: &[GeometricForm]) -> Result<bool, Error> {
    if points.len() != kind.arity() {
        return Err(Error::Arity { expected: kind.arity(), found: points.len() });
    }
    require_frame(points[0].frame(), points)?;
    require_points(points)?;
    Ok(match kind {
        Incidence::Collinear | Incidence::Coplanar => GeometricForm::wedge_all(points)?.is_zero(),
        Incidence::ParallelSegments => (&points[1] - &points[0]) == (&points[3] - &points[2]),
    })
}

/// `n + 1` degree-1 forms whose product is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexBasis {
    vertices: Vec<GeometricForm>,
    volume: Scalar,
}

impl SimplexBasis {
    pub fn new(vertices: Vec<GeometricForm>) -> Result<Self, Error> {
        let frame = vertices.first().ok_or(Error::Arity { expected: 2, found: 0 })?.frame();
        if vertices.len() != frame.dim() + 1 {
            return Err(Error::Arity { expected: frame.dim() + 1, found: vertices.len() });
        }
        require_frame(frame, &vertices)?;
        for x in vertices.iter().filter(|x| !x.is_zero()) {
            match x.homogeneous_grade() {
                Some(1) => {}
                Some(g) => return Err(Error::UnsupportedGrade(g)),
                None => return Err(Error::NotHomogeneous),
            }
        }
        let volume = GeometricForm::wedge_all(&vertices)?.top_coefficient();
        if volume.is_zero() {
            return Err(Error::DegenerateBasis);
        }
        Ok(SimplexBasis { vertices, volume })
    }

    pub fn frame(&self) -> Frame {
        self.vertices[0].frame()
    }

    pub fn vertices(&self) -> &[GeometricForm] {
        &self.vertices
    }

    /// Top coefficient of `x1∧...∧x_{n+1}`.
    pub fn volume(&self) -> &Scalar {
        &self.volume
    }

    /// The induced basis of the degree-`k` forms in dimension 3: the
    /// vertices; the edges `x1x2, x1x3, x1x4, x2x3, x2x4, x3x4`; or the
    /// signed faces `x2x3x4, -x1x3x4, x1x2x4, -x1x2x3`.
    pub fn induced_basis(&self, k: usize) -> Result<Vec<GeometricForm>, Error> {
        require_space(self.frame())?;
        let x = &self.vertices;
        let wedge = |idx: &[usize]| GeometricForm::wedge_all(idx.iter().map(|&i| &x[i]));
        Ok(match k {
            1 => x.clone(),
            2 => {
                let mut out = Vec::with_capacity(6);
                for i in 0..4 {
                    for j in i + 1..4 {
                        out.push(wedge(&[i, j])?);
                    }
                }
                out
            }
            3 => vec![
                wedge(&[1, 2, 3])?,
                -&wedge(&[0, 2, 3])?,
                wedge(&[0, 1, 3])?,
                -&wedge(&[0, 1, 2])?,
            ],
            other => return Err(Error::UnsupportedGrade(other)),
        })
    }
}

/// Coordinates of a homogeneous form of grade 1, 2 or 3 in the basis
/// induced by a tetrahedron (dimension 3).
pub fn coords(x: &GeometricForm, basis: &SimplexBasis) -> Result<Vec<Scalar>, Error> {
    let k = x.homogeneous_grade().ok_or(if x.is_zero() {
        Error::UnsupportedGrade(0)
    } else {
        Error::NotHomogeneous
    })?;
    coords_in_grade(x, basis, k)
}

/// As [`coords`], with the grade given explicitly so that zero is accepted.
pub fn coords_in_grade(x: &GeometricForm, basis: &SimplexBasis, k: usize) -> Result<Vec<Scalar>, Error> {
    x.check_frame(&basis.vertices[0])?;
    if !x.is_zero() && x.homogeneous_grade() != Some(k) {
        return Err(Error::NotHomogeneous);
    }
    let elements = basis.induced_basis(k)?;
    let blades = basis.frame().blades_of_grade(k);
    let matrix: Vec<Vec<Scalar>> = blades
        .iter()
        .map(|&b| elements.iter().map(|e| e.coefficient(b)).collect())
        .collect();
    let rhs: Vec<Scalar> = blades.iter().map(|&b| x.coefficient(b)).collect();
    linalg::solve(matrix, rhs).ok_or(Error::DegenerateBasis)
}

/// The pairing `<phi, x>` = top coefficient of `x∧phi`, defined when the
/// grades sum to `n + 1`.
pub fn dual_functional(phi: &GeometricForm, x: &GeometricForm) -> Result<Scalar, Error> {
    phi.check_frame(x)?;
    let grade_of = |f: &GeometricForm| {
        if f.is_zero() {
            Ok(None)
        } else {
            f.homogeneous_grade().map(Some).ok_or(Error::NotHomogeneous)
        }
    };
    let expected = phi.frame().max_grade();
    if let (Some(a), Some(b)) = (grade_of(phi)?, grade_of(x)?) {
        if a + b != expected {
            return Err(Error::GradeMismatch { expected, found: a + b });
        }
    }
    Ok(x.wedge(phi)?.top_coefficient())
}

/// Vectors whose wedge is the given bivector or trivector (dimension 3).
/// Zero factors as the empty list.
pub fn factor(x: &GeometricForm) -> Result<Vec<GeometricForm>, Error> {
    let frame = x.frame();
    require_space(frame)?;
    if x.is_zero() {
        return Ok(Vec::new());
    }
    if !x.is_pure_vector() {
        return Err(Error::NotPureVector);
    }
    let grade = x.homogeneous_grade().ok_or(Error::NotPureVector)?;
    let out = match grade {
        2 => factor_bivector(x),
        3 => {
            let c = x.coefficient(Blade::from_bits(0b1110));
            vec![frame.basis_vector(1), frame.basis_vector(2), frame.basis_vector(3).scale(&c)]
        }
        other => return Err(Error::UnsupportedGrade(other)),
    };
    debug_assert_eq!(GeometricForm::wedge_all(&out).ok().as_ref(), Some(x));
    Ok(out)
}

// Reads the bivector as an alternating matrix B over v1..vn, pivots on the
// first nonzero entry B_ij and returns the rows (B_i / B_ij, B_j).
fn factor_bivector(x: &GeometricForm) -> Vec<GeometricForm> {
    let frame = x.frame();
    let n = frame.dim();
    let entry = |i: usize, j: usize| -> Scalar {
        if i == j {
            return Scalar::zero();
        }
        let blade = Blade::unit(i.min(j)).wedge(Blade::unit(i.max(j))).expect("distinct units").0;
        let c = x.coefficient(blade);
        if i < j {
            c
        } else {
            -c
        }
    };
    let (pivot, _) = x.terms().next().expect("nonzero bivector");
    let mut idx = pivot.indices();
    let (i, j) = (idx.next().unwrap(), idx.next().unwrap());
    let inv = entry(i, j).recip().expect("nonzero pivot");
    let row = |r: usize| -> Vec<Scalar> { (1..=n).map(|c| entry(r, c)).collect() };
    let u = GeometricForm::vector(frame, &row(i)).expect("n components").scale(&inv);
    let w = GeometricForm::vector(frame, &row(j)).expect("n components");
    vec![u, w]
}

/// Oriented boundary of a triangle (`AB + BC + CA`) or of a tetrahedron
/// (`BCD - ACD + ABD - ABC`).
pub fn boundary_cycle(points: &[GeometricForm]) -> Result<GeometricForm, Error> {
    let wedge = |idx: &[usize]| GeometricForm::wedge_all(idx.iter().map(|&i| &points[i]));
    let terms = match points.len() {
        3 => vec![wedge(&[0, 1])?, wedge(&[1, 2])?, wedge(&[2, 0])?],
        4 => vec![wedge(&[1, 2, 3])?, -&wedge(&[0, 2, 3])?, wedge(&[0, 1, 3])?, -&wedge(&[0, 1, 2])?],
        found => return Err(Error::Arity { expected: 3, found }),
    };
    require_points(points)?;
    let frame = points[0].frame();
    GeometricForm::linear_combination(frame, terms.iter().map(|t| (Scalar::one(), t)))
}

/// Result of reducing a closed polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonReduction {
    /// `sum A_i∧A_{i+1}` over the cyclic vertex list; a pure bivector.
    pub bivector: GeometricForm,
    /// Signed area relative to the unit square of the frame, reported only
    /// when the polygon lies in a plane parallel to two frame vectors.
    pub area: Option<Scalar>,
    /// The frame vectors `(i, j)` spanning that plane.
    pub plane: Option<(usize, usize)>,
}

pub fn reduce_polygon(vertices: &[GeometricForm]) -> Result<PolygonReduction, Error> {
    if vertices.len() < 3 {
        return Err(Error::Arity { expected: 3, found: vertices.len() });
    }
    let frame = vertices[0].frame();
    require_frame(frame, vertices)?;
    require_points(vertices)?;
    let mut bivector = GeometricForm::zero(frame);
    for (a, b) in vertices.iter().zip(vertices.iter().cycle().skip(1)) {
        bivector = &bivector + &(a ^ b);
    }
    assert!(bivector.is_pure_vector(), "closed polygon must reduce to a bivector");

    let coords: Vec<Vec<Scalar>> = vertices.iter().map(|v| v.point_coords()).collect::<Result<_, _>>()?;
    let constant = |axis: usize| coords.iter().all(|c| c[axis] == coords[0][axis]);
    let n = frame.dim();
    let plane = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| (1..=n).all(|axis| axis == i || axis == j || constant(axis - 1)));
    let area = plane.map(|(i, j)| {
        let blade = Blade::from_bits((1 << i) | (1 << j));
        bivector.coefficient(blade) * Scalar::ratio(1, 2)
    });
    Ok(PolygonReduction { bivector, area, plane })
}

/// Result of reducing a closed triangulated surface (dimension 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReduction {
    /// The trivector `ω(P∧sum A_i B_i C_i)`, independent of `P`.
    pub trivector: GeometricForm,
    /// Its coefficient on `v1∧v2∧v3`: the enclosed volume relative to the
    /// frame simplex.
    pub volume: Scalar,
}

pub fn reduce_closed_surface(faces: &[[GeometricForm; 3]]) -> Result<SurfaceReduction, Error> {
    let Some(first) = faces.first() else {
        return Ok(SurfaceReduction { trivector: GeometricForm::zero(Frame::space()), volume: Scalar::zero() });
    };
    let frame = first[0].frame();
    require_space(frame)?;
    let mut sum = GeometricForm::zero(frame);
    for face in faces {
        require_frame(frame, face)?;
        require_points(face)?;
        sum = &sum + &GeometricForm::wedge_all(face)?;
    }
    if !sum.omega().is_zero() {
        return Err(Error::NotClosed);
    }
    let trivector = frame.origin().wedge(&sum)?.omega();
    let volume = trivector.coefficient(Blade::from_bits(0b1110));
    Ok(SurfaceReduction { trivector, volume })
}
