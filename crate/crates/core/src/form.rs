//! Geometric forms in canonical frame coordinates.
//!
//! A frame `(O; v1, ..., vn)` of an `n`-dimensional affine space induces the
//! basis `{O, v1, ..., vn}` of the degree-1 forms. Every form of the graded
//! algebra is then a unique combination of blades over `{0..=n}`, so two
//! forms are equal exactly when their coefficient maps agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, BitXor, Mul, Neg, Sub};

use crate::blade::{Blade, MAX_DIM};
use crate::error::Error;
use crate::scalar::Scalar;

/// An affine frame of dimension `n`. Fixes the coordinate basis and the
/// volume normalization `vol(O, O+v1, ..., O+vn) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Frame {
    dim: u8,
}

impl Frame {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Frame { dim: n as u8 })
    }

    /// The three-dimensional frame used throughout the classical theory.
    pub fn space() -> Self {
        Frame { dim: 3 }
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// Highest nonzero grade, `n + 1`.
    pub fn max_grade(self) -> usize {
        self.dim() + 1
    }

    pub fn top_blade(self) -> Blade {
        Blade::full(self.dim())
    }

    pub fn blades_of_grade(self, k: usize) -> Vec<Blade> {
        if k > self.max_grade() {
            return Vec::new();
        }
        Blade::all_of_grade(self.dim(), k)
    }

    /// The origin `O` as a unit-mass point.
    pub fn origin(self) -> GeometricForm {
        GeometricForm::unit(self, Blade::ORIGIN)
    }

    /// Basis vector `v_i`, `1 <= i <= n`.
    pub fn basis_vector(self, i: usize) -> GeometricForm {
        assert!(i >= 1 && i <= self.dim(), "basis vector index out of range");
        GeometricForm::unit(self, Blade::unit(i))
    }

    /// The vertices `O, O+v1, ..., O+vn` of the frame simplex.
    pub fn simplex_vertices(self) -> Vec<GeometricForm> {
        let origin = self.origin();
        let mut out = Vec::with_capacity(self.dim() + 1);
        out.push(origin.clone());
        for i in 1..=self.dim() {
            out.push(&origin + &self.basis_vector(i));
        }
        out
    }
}

/// An element of the graded affine exterior algebra over a frame.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeometricForm {
    frame: Frame,
    terms: BTreeMap<Blade, Scalar>,
}

impl GeometricForm {
    pub fn zero(frame: Frame) -> Self {
        GeometricForm { frame, terms: BTreeMap::new() }
    }

    /// A grade-0 form.
    pub fn scalar(frame: Frame, value: Scalar) -> Self {
        let mut out = GeometricForm::zero(frame);
        out.add_term(Blade::SCALAR, value);
        out
    }

    pub fn unit(frame: Frame, blade: Blade) -> Self {
        debug_assert!(blade.fits(frame.dim()));
        let mut terms = BTreeMap::new();
        terms.insert(blade, Scalar::one());
        GeometricForm { frame, terms }
    }

    /// Builds a form from `(blade, coefficient)` pairs, summing repeated
    /// blades.
    pub fn from_terms<I>(frame: Frame, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        let mut out = GeometricForm::zero(frame);
        for (blade, coeff) in terms {
            if !blade.fits(frame.dim()) {
                return Err(Error::InvalidBlade);
            }
            out.add_term(blade, coeff);
        }
        Ok(out)
    }

    /// The point `O + sum c_i v_i`.
    pub fn point(frame: Frame, coords: &[Scalar]) -> Result<Self, Error> {
        let mut out = GeometricForm::vector(frame, coords)?;
        out.add_term(Blade::ORIGIN, Scalar::one());
        Ok(out)
    }

    /// The vector `sum c_i v_i`.
    pub fn vector(frame: Frame, coords: &[Scalar]) -> Result<Self, Error> {
        if coords.len() != frame.dim() {
            return Err(Error::Arity { expected: frame.dim(), found: coords.len() });
        }
        let mut out = GeometricForm::zero(frame);
        for (i, c) in coords.iter().enumerate() {
            out.add_term(Blade::unit(i + 1), c.clone());
        }
        Ok(out)
    }

    /// Exact linear combination `sum a_i x_i`.
    pub fn linear_combination<'a, I>(frame: Frame, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Scalar, &'a GeometricForm)>,
    {
        let mut out = GeometricForm::zero(frame);
        for (a, x) in terms {
            out.check_frame(x)?;
            if a.is_zero() {
                continue;
            }
            for (blade, c) in &x.terms {
                out.add_term(*blade, &a * c);
            }
        }
        Ok(out)
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in canonical order (grade, then lexicographic blade).
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_default()
    }

    /// The grade shared by every term; `None` for zero or mixed forms.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let first = grades.next()?;
        if grades.all(|g| g == first) {
            Some(first)
        } else {
            None
        }
    }

    /// True for zero and for forms with a single grade.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_grade().is_some()
    }

    /// The grade-`k` component.
    pub fn grade_part(&self, k: usize) -> Result<Self, Error> {
        let max = self.frame.max_grade();
        if k > max {
            return Err(Error::GradeOutOfRange { grade: k, max });
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    /// Coefficient of the full blade `O∧v1∧...∧vn`.
    pub fn top_coefficient(&self) -> Scalar {
        self.coefficient(self.frame.top_blade())
    }

    /// Exact equality, rejecting forms from different frames.
    pub fn equals(&self, other: &GeometricForm) -> Result<bool, Error> {
        self.check_frame(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        if a.is_zero() {
            return GeometricForm::zero(self.frame);
        }
        GeometricForm {
            frame: self.frame,
            terms: self.terms.iter().map(|(b, c)| (*b, a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &GeometricForm) -> Result<Self, Error> {
        self.check_frame(other)?;
        let mut out = self.clone();
        for (blade, c) in &other.terms {
            out.add_term(*blade, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GeometricForm) -> Result<Self, Error> {
        self.check_frame(other)?;
        let mut out = self.clone();
        for (blade, c) in &other.terms {
            out.add_term(*blade, -c);
        }
        Ok(out)
    }

    /// Exterior product. Terms whose grade would exceed `n + 1` vanish.
    pub fn wedge(&self, other: &GeometricForm) -> Result<Self, Error> {
        self.check_frame(other)?;
        let mut out = GeometricForm::zero(self.frame);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((blade, odd)) = a.wedge(*b) {
                    let c = x * y;
                    out.add_term(blade, if odd { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Wedge of a nonempty sequence of forms, left to right.
    pub fn wedge_all<'a, I>(forms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = &'a GeometricForm>,
    {
        let mut iter = forms.into_iter();
        let first = iter.next().ok_or(Error::Arity { expected: 1, found: 0 })?;
        iter.try_fold(first.clone(), |acc, x| acc.wedge(x))
    }

    pub(crate) fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        GeometricForm {
            frame: self.frame,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, blade: Blade, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&blade);
                }
            }
            None => {
                self.terms.insert(blade, coeff);
            }
        }
    }

    pub(crate) fn check_frame(&self, other: &GeometricForm) -> Result<(), Error> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch { left: self.frame, right: other.frame });
        }
        Ok(())
    }

    /// Affine coordinates of a unit-mass point.
    pub fn point_coords(&self) -> Result<Vec<Scalar>, Error> {
        if !self.is_point() {
            return Err(Error::NotAPoint);
        }
        Ok((1..=self.frame.dim()).map(|i| self.coefficient(Blade::unit(i))).collect())
    }

    /// Components of a vector.
    pub fn vector_coords(&self) -> Result<Vec<Scalar>, Error> {
        if !self.is_vector() {
            return Err(Error::NotAVector);
        }
        Ok((1..=self.frame.dim()).map(|i| self.coefficient(Blade::unit(i))).collect())
    }

    /// Grade 1 with unit mass.
    pub fn is_point(&self) -> bool {
        self.homogeneous_grade() == Some(1) && self.coefficient(Blade::ORIGIN).is_one()
    }

    /// Grade 1 (or zero) with null mass.
    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| b.grade() == 1 && !b.has_origin())
    }
}

// Operator sugar. These panic on a frame mismatch; use the checked methods
// when the frames are not known to agree.

impl Add for &GeometricForm {
    type Output = GeometricForm;
    fn add(self, rhs: &GeometricForm) -> GeometricForm {
        self.checked_add(rhs).expect("frame mismatch in form addition")
    }
}

impl Sub for &GeometricForm {
    type Output = GeometricForm;
    fn sub(self, rhs: &GeometricForm) -> GeometricForm {
        self.checked_sub(rhs).expect("frame mismatch in form subtraction")
    }
}

impl BitXor for &GeometricForm {
    type Output = GeometricForm;
    fn bitxor(self, rhs: &GeometricForm) -> GeometricForm {
        self.wedge(rhs).expect("frame mismatch in wedge")
    }
}

impl Neg for &GeometricForm {
    type Output = GeometricForm;
    fn neg(self) -> GeometricForm {
        self.scale(&-Scalar::one())
    }
}

impl Mul<&GeometricForm> for &Scalar {
    type Output = GeometricForm;
    fn mul(self, rhs: &GeometricForm) -> GeometricForm {
        rhs.scale(self)
    }
}

impl fmt::Debug for GeometricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form(n={}; ", self.frame.dim())?;
        fmt::Display::fmt(self, f)?;
        f.write_str(")")
    }
}

impl fmt::Display for GeometricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (blade, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if blade.grade() == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", blade)?;
            } else {
                write!(f, "({})·{}", c, blade)?;
            }
        }
        Ok(())
    }
}
