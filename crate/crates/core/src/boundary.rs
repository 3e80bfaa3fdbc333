//! The boundary operator ω, the reduction formula and the classification of
//! homogeneous forms.
//!
//! In frame coordinates ω acts on blades: a blade `O∧v_I` maps to `v_I` and a
//! blade without the origin maps to zero. This is the unique linear map with
//! `ω(P0) = 1` and `ω(P0 P1 ... Pk) = (P1 - P0) ... (Pk - P0)` on points,
//! and it lowers the grade by one.

use crate::blade::Blade;
use crate::error::Error;
use crate::form::GeometricForm;
use crate::scalar::Scalar;

impl GeometricForm {
    /// The boundary operator ω.
    pub fn omega(&self) -> GeometricForm {
        let mut out = GeometricForm::zero(self.frame());
        for (blade, c) in self.terms() {
            // The origin is the smallest unit, so removing it costs no sign.
            if blade.has_origin() {
                out.add_term(blade.without(0), c.clone());
            }
        }
        out
    }

    /// ω of the grade-1 part: the coefficient of the origin unit.
    pub fn mass(&self) -> Scalar {
        self.coefficient(Blade::ORIGIN)
    }

    /// True when ω vanishes, i.e. the form is a combination of vector
    /// blades only.
    pub fn is_pure_vector(&self) -> bool {
        self.terms().all(|(b, _)| !b.has_origin())
    }
}

/// Split of a form by the reduction formula `x = P∧ω(x) + ω(P∧x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// `P∧ω(x)`: the part anchored at the reduction point.
    pub anchored: GeometricForm,
    /// `ω(P∧x)`: a pure k-vector.
    pub pure: GeometricForm,
}

impl Reduction {
    pub fn sum(&self) -> GeometricForm {
        &self.anchored + &self.pure
    }
}

/// Reduces a homogeneous form of grade `1..=n+1` at the point `p`.
pub fn reduce_at(x: &GeometricForm, p: &GeometricForm) -> Result<Reduction, Error> {
    x.check_frame(p)?;
    if !p.is_point() {
        return Err(Error::NotAPoint);
    }
    if let Some(grade) = x.homogeneous_grade() {
        let max = x.frame().max_grade();
        if grade == 0 || grade > max {
            return Err(Error::GradeOutOfRange { grade, max });
        }
    } else if !x.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    let anchored = p.wedge(&x.omega())?;
    let pure = p.wedge(x)?.omega();
    debug_assert_eq!(&anchored + &pure, *x);
    Ok(Reduction { anchored, pure })
}

/// Kind of a homogeneous form.
///
/// The named degree-2..4 classes are used in dimension 3 only; elsewhere
/// forms of grade 2 and above report [`FormClass::Graded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormClass {
    Zero,
    /// Grade 1 with nonzero mass.
    WeightedPoint,
    /// Grade 1 with zero mass.
    Vector,
    Bipoint,
    Bivector,
    /// A degree-2 form that is neither a bipoint nor a bivector.
    GeneralDegree2,
    Tripoint,
    Trivector,
    QuadriPoint,
    Graded {
        grade: usize,
        /// ω vanishes.
        pure: bool,
        /// For grade 2, whether `x∧x = 0`.
        decomposable: Option<bool>,
    },
}

impl FormClass {
    pub fn name(&self) -> &'static str {
        match self {
            FormClass::Zero => "Zero",
            FormClass::WeightedPoint => "WeightedPoint",
            FormClass::Vector => "Vector",
            FormClass::Bipoint => "Bipoint",
            FormClass::Bivector => "Bivector",
            FormClass::GeneralDegree2 => "GeneralDegree2",
            FormClass::Tripoint => "Tripoint",
            FormClass::Trivector => "Trivector",
            FormClass::QuadriPoint => "QuadriPoint",
            FormClass::Graded { .. } => "Graded",
        }
    }
}

pub fn classify(x: &GeometricForm) -> Result<FormClass, Error> {
    if x.is_zero() {
        return Ok(FormClass::Zero);
    }
    let grade = x.homogeneous_grade().ok_or(Error::NotHomogeneous)?;
    let max = x.frame().max_grade();
    if grade == 0 || grade > max {
        return Err(Error::GradeOutOfRange { grade, max });
    }
    let pure = x.omega().is_zero();
    let self_wedge_vanishes = || x.wedge(x).map(|s| s.is_zero());
    if grade == 1 {
        return Ok(if pure { FormClass::Vector } else { FormClass::WeightedPoint });
    }
    if x.frame().dim() != 3 {
        let decomposable = if grade == 2 { Some(self_wedge_vanishes()?) } else { None };
        return Ok(FormClass::Graded { grade, pure, decomposable });
    }
    Ok(match grade {
        2 if pure => FormClass::Bivector,
        2 if self_wedge_vanishes()? => FormClass::Bipoint,
        2 => FormClass::GeneralDegree2,
        3 if pure => FormClass::Trivector,
        3 => FormClass::Tripoint,
        _ => FormClass::QuadriPoint,
    })
}
