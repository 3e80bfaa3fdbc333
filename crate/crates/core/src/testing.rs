//! Shared fixtures for unit tests.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Blade, Frame, GeometricForm, Scalar};

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p3(x: i64, y: i64, z: i64) -> GeometricForm {
    GeometricForm::point(Frame::space(), &[x.into(), y.into(), z.into()]).unwrap()
}

pub fn v3(x: i64, y: i64, z: i64) -> GeometricForm {
    GeometricForm::vector(Frame::space(), &[x.into(), y.into(), z.into()]).unwrap()
}

pub fn sign(odd: bool) -> Scalar {
    if odd {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let numer = rng.gen_range(-1_000_000i64..=1_000_000);
    let denom = rng.gen_range(1i64..=1_000_000);
    Scalar::ratio(numer, denom)
}

pub fn small_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))
}

pub fn random_homogeneous<R: Rng>(rng: &mut R, frame: Frame, k: usize) -> GeometricForm {
    let blades = frame.blades_of_grade(k);
    let mut terms: Vec<(Blade, Scalar)> = Vec::new();
    for b in blades {
        if rng.gen_bool(0.7) {
            terms.push((b, random_scalar(rng)));
        }
    }
    GeometricForm::from_terms(frame, terms).unwrap()
}

pub fn random_form<R: Rng>(rng: &mut R, frame: Frame) -> GeometricForm {
    let mut out = GeometricForm::zero(frame);
    for k in 0..=frame.max_grade() {
        if rng.gen_bool(0.5) {
            out = &out + &random_homogeneous(rng, frame, k);
        }
    }
    out
}

pub fn random_point<R: Rng>(rng: &mut R, frame: Frame) -> GeometricForm {
    let coords: Vec<Scalar> = (0..frame.dim()).map(|_| small_scalar(rng)).collect();
    GeometricForm::point(frame, &coords).unwrap()
}

pub fn random_vector<R: Rng>(rng: &mut R, frame: Frame) -> GeometricForm {
    let coords: Vec<Scalar> = (0..frame.dim()).map(|_| small_scalar(rng)).collect();
    GeometricForm::vector(frame, &coords).unwrap()
}
