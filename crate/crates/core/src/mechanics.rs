//! Systems of applied forces read as degree-2 forms.
//!
//! A force `F` applied at `A` is the bipoint `A∧F`; a system is the sum of
//! its bipoints. Two systems are mechanically equivalent exactly when their
//! forms coincide.

use alloc::vec::Vec;

use crate::affine::{coords_in_grade, SimplexBasis};
use crate::blade::Blade;
use crate::boundary::reduce_at;
use crate::error::Error;
use crate::form::{Frame, GeometricForm};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppliedForce {
    application: GeometricForm,
    force: GeometricForm,
}

impl AppliedForce {
    pub fn new(application: GeometricForm, force: GeometricForm) -> Result<Self, Error> {
        application.check_frame(&force)?;
        if !application.is_point() {
            return Err(Error::NotAPoint);
        }
        if !force.is_vector() {
            return Err(Error::NotAVector);
        }
        Ok(AppliedForce { application, force })
    }

    pub fn application(&self) -> &GeometricForm {
        &self.application
    }

    pub fn force(&self) -> &GeometricForm {
        &self.force
    }

    /// The bipoint `A∧F`.
    pub fn bipoint(&self) -> GeometricForm {
        &self.application ^ &self.force
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForceSystem {
    frame: Frame,
    forces: Vec<AppliedForce>,
}

/// `form = at∧resultant + couple`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoinsotReduction {
    pub at: GeometricForm,
    pub resultant: GeometricForm,
    pub couple: GeometricForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemClass {
    Null,
    SingleForce,
    Couple,
    /// Force plus a couple that cannot be merged into either.
    Wrench,
}

impl SystemClass {
    pub fn name(self) -> &'static str {
        match self {
            SystemClass::Null => "Null",
            SystemClass::SingleForce => "SingleForce",
            SystemClass::Couple => "Couple",
            SystemClass::Wrench => "Wrench",
        }
    }
}

impl ForceSystem {
    pub fn new(frame: Frame) -> Self {
        ForceSystem { frame, forces: Vec::new() }
    }

    pub fn from_forces(frame: Frame, forces: Vec<AppliedForce>) -> Result<Self, Error> {
        let mut system = ForceSystem::new(frame);
        for f in forces {
            system.push(f)?;
        }
        Ok(system)
    }

    pub fn push(&mut self, force: AppliedForce) -> Result<(), Error> {
        if force.application.frame() != self.frame {
            return Err(Error::FrameMismatch { left: self.frame, right: force.application.frame() });
        }
        self.forces.push(force);
        Ok(())
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn forces(&self) -> &[AppliedForce] {
        &self.forces
    }

    /// `sum A_i∧F_i`.
    pub fn form(&self) -> GeometricForm {
        self.forces
            .iter()
            .fold(GeometricForm::zero(self.frame), |acc, f| &acc + &f.bipoint())
    }

    /// `ω(form)`, the sum of the force vectors.
    pub fn resultant(&self) -> GeometricForm {
        self.form().omega()
    }

    /// Top coefficient of `form∧a∧b`: the moment about the axis through `a`
    /// and `b`, up to a metric factor.
    pub fn moment_ratio(&self, a: &GeometricForm, b: &GeometricForm) -> Result<Scalar, Error> {
        let form = self.form();
        form.check_frame(a)?;
        form.check_frame(b)?;
        if !a.is_point() || !b.is_point() {
            return Err(Error::NotAPoint);
        }
        if a == b {
            return Err(Error::DegenerateAxis);
        }
        Ok(form.wedge(&(a ^ b))?.top_coefficient())
    }

    pub fn equivalent(&self, other: &ForceSystem) -> Result<bool, Error> {
        self.form().equals(&other.form())
    }

    /// Resultant applied at `p` plus a couple.
    pub fn reduce_poinsot(&self, p: &GeometricForm) -> Result<PoinsotReduction, Error> {
        let split = reduce_at(&self.form(), p)?;
        let resultant = split.anchored.omega();
        debug_assert_eq!(p.wedge(&resultant)?, split.anchored);
        Ok(PoinsotReduction { at: p.clone(), resultant, couple: split.pure })
    }

    /// Top coefficient of `s∧s`; zero exactly when the system reduces to a
    /// single force or a couple.
    pub fn scalar_invariant(&self) -> Result<Scalar, Error> {
        self.require_space()?;
        let form = self.form();
        Ok(form.wedge(&form)?.top_coefficient())
    }

    pub fn classify(&self) -> Result<SystemClass, Error> {
        self.require_space()?;
        let form = self.form();
        Ok(if form.is_zero() {
            SystemClass::Null
        } else if form.omega().is_zero() {
            SystemClass::Couple
        } else if form.wedge(&form)?.is_zero() {
            SystemClass::SingleForce
        } else {
            SystemClass::Wrench
        })
    }

    /// Coefficients of the unique equivalent system of forces along the six
    /// edges `x1x2, x1x3, x1x4, x2x3, x2x4, x3x4` of a tetrahedron.
    pub fn edge_decomposition(&self, basis: &SimplexBasis) -> Result<[Scalar; 6], Error> {
        self.require_space()?;
        let coords = coords_in_grade(&self.form(), basis, 2)?;
        Ok(coords.try_into().expect("six edge coordinates"))
    }

    fn require_space(&self) -> Result<(), Error> {
        if self.frame.dim() == 3 {
            Ok(())
        } else {
            Err(Error::UnsupportedDimension { required: 3, found: self.frame.dim() })
        }
    }
}

/// Force along the edge from `x_i` to `x_j` scaled by `coeff`, as a
/// bipoint; used to rebuild a system from its edge decomposition.
pub fn edge_bipoint(basis: &SimplexBasis, i: usize, j: usize, coeff: &Scalar) -> GeometricForm {
    (&basis.vertices()[i] ^ &basis.vertices()[j]).scale(coeff)
}

/// Coefficient on `v_i∧v_j` of a pure bivector.
pub fn bivector_component(x: &GeometricForm, i: usize, j: usize) -> Scalar {
    let (lo, hi) = (i.min(j), i.max(j));
    let c = x.coefficient(Blade::from_bits((1 << lo) | (1 << hi)));
    if i <= j {
        c
    } else {
        -c
    }
}
