//! Forms as formal sums of point tuples, compared through volumes.
//!
//! This module shares no code path with the blade engine except in
//! [`canonicalize`]: points are bare coordinate lists and volumes are
//! determinants.

use alloc::vec::Vec;

use crate::error::Error;
use crate::form::{Frame, GeometricForm};
use crate::linalg::determinant;
use crate::scalar::Scalar;

/// A formal linear combination `sum a_i P_i1 ... P_ik` of `k`-tuples of
/// points in affine coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeForm {
    dim: usize,
    degree: usize,
    terms: Vec<(Scalar, Vec<Vec<Scalar>>)>,
}

impl FreeForm {
    pub fn new(dim: usize, degree: usize) -> Result<Self, Error> {
        Frame::new(dim)?;
        if degree > dim + 1 {
            return Err(Error::GradeOutOfRange { grade: degree, max: dim + 1 });
        }
        Ok(FreeForm { dim, degree, terms: Vec::new() })
    }

    pub fn push(&mut self, coeff: Scalar, points: Vec<Vec<Scalar>>) -> Result<(), Error> {
        if points.len() != self.degree {
            return Err(Error::Arity { expected: self.degree, found: points.len() });
        }
        if let Some(bad) = points.iter().find(|p| p.len() != self.dim) {
            return Err(Error::Arity { expected: self.dim, found: bad.len() });
        }
        self.terms.push((coeff, points));
        Ok(())
    }

    pub fn with(mut self, coeff: Scalar, points: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        self.push(coeff, points)?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(Scalar, Vec<Vec<Scalar>>)] {
        &self.terms
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        let terms = self.terms.iter().map(|(c, pts)| (a * c, pts.clone())).collect();
        FreeForm { terms, ..*self }
    }

    /// Formal sum; no terms are merged.
    pub fn add(&self, other: &FreeForm) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn sub(&self, other: &FreeForm) -> Result<Self, Error> {
        self.add(&other.scale(&-Scalar::one()))
    }

    fn check_compatible(&self, other: &FreeForm) -> Result<(), Error> {
        if self.dim != other.dim {
            return Err(Error::FrameMismatch { left: Frame::new(self.dim)?, right: Frame::new(other.dim)? });
        }
        if self.degree != other.degree {
            return Err(Error::GradeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    /// `sum a_i vol(P_i1, ..., P_ik, q_1, ..., q_m)` for a completion of
    /// `m = n + 1 - k` points.
    pub fn evaluate(&self, completion: &[Vec<Scalar>]) -> Result<Scalar, Error> {
        let m = self.dim + 1 - self.degree;
        if completion.len() != m {
            return Err(Error::Arity { expected: m, found: completion.len() });
        }
        if let Some(bad) = completion.iter().find(|p| p.len() != self.dim) {
            return Err(Error::Arity { expected: self.dim, found: bad.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(c, pts)| {
                let tuple: Vec<&[Scalar]> = pts.iter().chain(completion).map(Vec::as_slice).collect();
                c * &affine_volume(&tuple)
            })
            .sum())
    }
}

/// Volume of `n+1` points normalized so that `O, O+v1, ..., O+vn` has
/// volume 1: the determinant of the rows `[1, coords]`.
pub fn affine_volume(points: &[&[Scalar]]) -> Scalar {
    let rows = points
        .iter()
        .map(|p| core::iter::once(Scalar::one()).chain(p.iter().cloned()).collect())
        .collect();
    determinant(rows)
}

/// Vertices `O, O+v1, ..., O+vn` as coordinate lists.
pub fn simplex_vertices(dim: usize) -> Vec<Vec<Scalar>> {
    (0..=dim)
        .map(|i| (1..=dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

/// Every strictly increasing choice of `m` frame-simplex vertices.
///
/// Reordering a completion only flips the sign of every evaluation and
/// repeating a vertex makes every evaluation vanish, so these suffice.
pub fn completions(dim: usize, m: usize) -> Vec<Vec<Vec<Scalar>>> {
    let vertices = simplex_vertices(dim);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    choose(&vertices, 0, m, &mut chosen, &mut out);
    out
}

fn choose(
    vertices: &[Vec<Scalar>],
    start: usize,
    m: usize,
    chosen: &mut Vec<Vec<Scalar>>,
    out: &mut Vec<Vec<Vec<Scalar>>>,
) {
    if chosen.len() == m {
        out.push(chosen.clone());
        return;
    }
    for i in start..vertices.len() {
        chosen.push(vertices[i].clone());
        choose(vertices, i + 1, m, chosen, out);
        chosen.pop();
    }
}

/// Whether `f - g` has vanishing volume against every completion.
pub fn free_equals(f: &FreeForm, g: &FreeForm) -> Result<bool, Error> {
    let diff = f.sub(g)?;
    for completion in completions(diff.dim, diff.dim + 1 - diff.degree) {
        if !diff.evaluate(&completion)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `sum a_i P_i1∧...∧P_ik` in the blade engine.
pub fn canonicalize(f: &FreeForm) -> GeometricForm {
    let frame = Frame::new(f.dim).expect("validated dimension");
    f.terms.iter().fold(GeometricForm::zero(frame), |acc, (c, pts)| {
        let product = pts.iter().fold(GeometricForm::scalar(frame, Scalar::one()), |prod, p| {
            let point = GeometricForm::point(frame, p).expect("validated arity");
            &prod ^ &point
        });
        &acc + &product.scale(c)
    })
}

/// `(P1 - P0)(P2 - P0)...(Pk - P0)` expanded into `2^k` point tuples.
pub fn omega_expansion(points: &[Vec<Scalar>]) -> Result<FreeForm, Error> {
    let (p0, rest) = points.split_first().ok_or(Error::Arity { expected: 1, found: 0 })?;
    let mut out = FreeForm::new(p0.len(), rest.len())?;
    for mask in 0u32..(1 << rest.len()) {
        let tuple: Vec<Vec<Scalar>> = rest
            .iter()
            .enumerate()
            .map(|(i, p)| if mask & (1 << i) != 0 { p0.clone() } else { p.clone() })
            .collect();
        let coeff = if mask.count_ones() % 2 == 1 { -Scalar::one() } else { Scalar::one() };
        out.push(coeff, tuple)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;
    use alloc::vec;
    use proptest::prelude::*;
    use rand::Rng;

    fn pt(c: &[i64]) -> Vec<Scalar> {
        c.iter().map(|&x| Scalar::from_integer(x)).collect()
    }

    fn random_coords<R: Rng>(rng: &mut R, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|_| small_scalar(rng)).collect()
    }

    fn random_free<R: Rng>(rng: &mut R, dim: usize, degree: usize) -> FreeForm {
        let mut f = FreeForm::new(dim, degree).unwrap();
        for _ in 0..rng.gen_range(0..4) {
            let pts = (0..degree).map(|_| random_coords(rng, dim)).collect();
            f.push(small_scalar(rng), pts).unwrap();
        }
        f
    }

    #[test]
    fn frame_simplex_has_unit_volume() {
        for n in 1..=5 {
            let v = simplex_vertices(n);
            let refs: Vec<&[Scalar]> = v.iter().map(Vec::as_slice).collect();
            assert!(affine_volume(&refs).is_one());
        }
    }

    #[test]
    fn completion_counts() {
        assert_eq!(completions(3, 2).len(), 6);
        assert_eq!(completions(3, 0), vec![Vec::<Vec<Scalar>>::new()]);
        assert_eq!(completions(4, 5).len(), 1);
    }

    #[test]
    fn swapped_pair_cancels() {
        let (a, b) = (pt(&[1, 2, 0]), pt(&[0, -1, 3]));
        let f = FreeForm::new(3, 2)
            .unwrap()
            .with(Scalar::one(), vec![a.clone(), b.clone()])
            .unwrap()
            .with(Scalar::one(), vec![b, a])
            .unwrap();
        assert!(free_equals(&f, &FreeForm::new(3, 2).unwrap()).unwrap());
    }

    #[test]
    fn midpoint_relation() {
        let f = FreeForm::new(3, 1)
            .unwrap()
            .with(Scalar::one(), vec![pt(&[0, 0, 0])])
            .unwrap()
            .with(Scalar::one(), vec![pt(&[2, 0, 0])])
            .unwrap();
        let g = FreeForm::new(3, 1).unwrap().with(Scalar::from_integer(2), vec![pt(&[1, 0, 0])]).unwrap();
        assert!(free_equals(&f, &g).unwrap());
        let h = FreeForm::new(3, 1).unwrap().with(Scalar::from_integer(2), vec![pt(&[1, 1, 0])]).unwrap();
        assert!(!free_equals(&f, &h).unwrap());
    }

    #[test]
    fn collinear_triple_vanishes() {
        let f = FreeForm::new(3, 3)
            .unwrap()
            .with(Scalar::one(), vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[2, 0, 0])])
            .unwrap();
        assert!(free_equals(&f, &FreeForm::new(3, 3).unwrap()).unwrap());
        assert!(canonicalize(&f).is_zero());
    }

    #[test]
    fn canonicalize_examples() {
        let (a, b) = (pt(&[1, 0, 0]), pt(&[0, 1, 0]));
        let f = FreeForm::new(3, 2).unwrap().with(Scalar::one(), vec![a, b]).unwrap();
        assert_eq!(canonicalize(&f), &p3(1, 0, 0) ^ &p3(0, 1, 0));
        assert!(canonicalize(&FreeForm::new(3, 2).unwrap()).is_zero());
        let scalar = FreeForm::new(2, 0).unwrap().with(Scalar::ratio(3, 2), vec![]).unwrap();
        assert_eq!(canonicalize(&scalar), GeometricForm::scalar(Frame::new(2).unwrap(), Scalar::ratio(3, 2)));
    }

    #[test]
    fn validation() {
        assert!(FreeForm::new(0, 0).is_err());
        assert!(matches!(FreeForm::new(2, 4), Err(Error::GradeOutOfRange { .. })));
        let mut f = FreeForm::new(3, 2).unwrap();
        assert_eq!(f.push(Scalar::one(), vec![pt(&[0, 0, 0])]), Err(Error::Arity { expected: 2, found: 1 }));
        assert_eq!(
            f.push(Scalar::one(), vec![pt(&[0, 0, 0]), pt(&[0, 0])]),
            Err(Error::Arity { expected: 3, found: 2 })
        );
        let other = FreeForm::new(3, 1).unwrap();
        assert!(matches!(free_equals(&f, &other), Err(Error::GradeMismatch { .. })));
        assert!(matches!(free_equals(&f, &FreeForm::new(2, 2).unwrap()), Err(Error::FrameMismatch { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn quotient_is_faithful(seed in any::<u64>()) {
            let mut rng = rng_from(seed);
            let dim = rng.gen_range(1..=4);
            let degree = rng.gen_range(0..=dim + 1);
            let f = random_free(&mut rng, dim, degree);
            // Half the time g is a rearrangement of f, so equality is exercised.
            let g = if rng.gen_bool(0.5) {
                random_free(&mut rng, dim, degree)
            } else {
                let mut g = FreeForm::new(dim, degree).unwrap();
                for (c, pts) in f.terms().iter().rev() {
                    let mut pts = pts.clone();
                    let mut c = c.clone();
                    if pts.len() >= 2 {
                        pts.swap(0, 1);
                        c = -c;
                    }
                    g.push(c, pts).unwrap();
                }
                g
            };
            let canonical = canonicalize(&f) == canonicalize(&g);
            prop_assert_eq!(free_equals(&f, &g).unwrap(), canonical);
        }

        #[test]
        fn vertex_completions_decide_all_completions(seed in any::<u64>()) {
            let mut rng = rng_from(seed);
            let dim = rng.gen_range(1..=4);
            let degree = rng.gen_range(0..=dim + 1);
            let f = random_free(&mut rng, dim, degree);
            let zero = FreeForm::new(dim, degree).unwrap();
            if free_equals(&f, &zero).unwrap() {
                let completion: Vec<Vec<Scalar>> =
                    (0..dim + 1 - degree).map(|_| random_coords(&mut rng, dim)).collect();
                prop_assert!(f.evaluate(&completion).unwrap().is_zero());
            }
        }

        #[test]
        fn free_equals_is_an_equivalence(seed in any::<u64>()) {
            let mut rng = rng_from(seed);
            let dim = rng.gen_range(1..=3);
            let degree = rng.gen_range(0..=dim + 1);
            let f = random_free(&mut rng, dim, degree);
            let g = f.scale(&Scalar::one()).add(&FreeForm::new(dim, degree).unwrap()).unwrap();
            let h = random_free(&mut rng, dim, degree);
            prop_assert!(free_equals(&f, &f).unwrap());
            prop_assert_eq!(free_equals(&f, &h).unwrap(), free_equals(&h, &f).unwrap());
            if free_equals(&f, &g).unwrap() && free_equals(&g, &h).unwrap() {
                prop_assert!(free_equals(&f, &h).unwrap());
            }
        }

        #[test]
        fn omega_matches_point_differences(seed in any::<u64>()) {
            let mut rng = rng_from(seed);
            let dim = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=dim + 1);
            let points: Vec<Vec<Scalar>> = (0..=k).map(|_| random_coords(&mut rng, dim)).collect();
            let product = FreeForm::new(dim, k + 1).ok();
            let expansion = omega_expansion(&points).unwrap();
            if let Some(product) = product {
                let product = product.with(Scalar::one(), points.clone()).unwrap();
                prop_assert_eq!(canonicalize(&expansion), canonicalize(&product).omega());
            } else {
                prop_assert!(canonicalize(&expansion).is_zero());
            }
        }
    }
}
