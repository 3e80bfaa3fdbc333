//! Random generators and the golden CLI corpus shared by the integration
//! tests.
#![allow(dead_code)]

use pointform_core::{Blade, Frame, GeometricForm, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator and denominator bounded by 10^6 in absolute value.
pub fn big_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(1..=1_000_000))
}

pub fn small_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-12..=12), rng.gen_range(1..=5))
}

pub fn homogeneous<R: Rng>(rng: &mut R, frame: Frame, k: usize, coeff: fn(&mut R) -> Scalar) -> GeometricForm {
    let mut terms = Vec::new();
    for b in Blade::all_of_grade(frame.dim(), k) {
        if rng.gen_bool(0.6) {
            terms.push((b, coeff(rng)));
        }
    }
    GeometricForm::from_terms(frame, terms).unwrap()
}

pub fn mixed<R: Rng>(rng: &mut R, frame: Frame, coeff: fn(&mut R) -> Scalar) -> GeometricForm {
    let mut out = GeometricForm::zero(frame);
    for k in 0..=frame.max_grade() {
        if rng.gen_bool(0.4) {
            out = &out + &homogeneous(rng, frame, k, coeff);
        }
    }
    out
}

pub fn random_coords<R: Rng>(rng: &mut R, dim: usize) -> Vec<Scalar> {
    (0..dim).map(|_| small_scalar(rng)).collect()
}

pub fn point<R: Rng>(rng: &mut R, frame: Frame) -> GeometricForm {
    GeometricForm::point(frame, &random_coords(rng, frame.dim())).unwrap()
}

pub fn vector<R: Rng>(rng: &mut R, frame: Frame) -> GeometricForm {
    GeometricForm::vector(frame, &random_coords(rng, frame.dim())).unwrap()
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

/// One CLI invocation with its expected standard output and exit code.
pub struct Golden {
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub stdout: &'static str,
    pub code: i32,
}

const TETRA: [&str; 4] = ["P(0,0,0)", "P(1,0,0)", "P(0,1,0)", "P(0,0,1)"];
const WRENCH: &str = r#"{"forces":[{"at":[0,0,0],"vec":[1,0,0]},{"at":[0,0,1],"vec":[0,1,0]}]}"#;
const PAIR: &str = r#"{"forces":[{"at":[0,0,0],"vec":[1,0,0]},{"at":[0,1,0],"vec":[-1,0,0]}]}"#;

macro_rules! golden {
    ([$($arg:expr),* $(,)?], $stdin:expr, $stdout:expr, $code:expr) => {
        Golden { args: &[$($arg),*], stdin: $stdin, stdout: $stdout, code: $code }
    };
}

pub const GOLDEN: &[Golden] = &[
    golden!(["eval", "P(0,0,0) ^ P(1,0,0)"], "", "{\"n\":3,\"terms\":[{\"blade\":[0,1],\"coeff\":\"1\"}]}\n", 0),
    golden!(
        ["eval", "1/2 * (P(1,0,0) + P(0,1,0))"],
        "",
        "{\"n\":3,\"terms\":[{\"blade\":[0],\"coeff\":\"1\"},{\"blade\":[1],\"coeff\":\"1/2\"},{\"blade\":[2],\"coeff\":\"1/2\"}]}\n",
        0
    ),
    golden!(
        ["eval", "P(1,0,0) ^ P(0,1,0) ^ P(0,0,1)"],
        "",
        "{\"n\":3,\"terms\":[{\"blade\":[0,1,2],\"coeff\":\"1\"},{\"blade\":[0,1,3],\"coeff\":\"-1\"},{\"blade\":[0,2,3],\"coeff\":\"1\"},{\"blade\":[1,2,3],\"coeff\":\"1\"}]}\n",
        0
    ),
    golden!(["--dim", "2", "eval", "P(0,0) ^ P(1,0) ^ P(0,1)"], "", "{\"n\":2,\"terms\":[{\"blade\":[0,1,2],\"coeff\":\"1\"}]}\n", 0),
    golden!(
        ["omega", "P(0,0,0) ^ P(1,2,3)"],
        "",
        "{\"n\":3,\"terms\":[{\"blade\":[1],\"coeff\":\"1\"},{\"blade\":[2],\"coeff\":\"2\"},{\"blade\":[3],\"coeff\":\"3\"}]}\n",
        0
    ),
    golden!(["omega", "3 * P(1,1,1)"], "", "{\"n\":3,\"terms\":[{\"blade\":[],\"coeff\":\"3\"}]}\n", 0),
    golden!(["omega"], "{\"n\":3,\"terms\":[{\"blade\":[0,1],\"coeff\":\"1\"}]}", "{\"n\":3,\"terms\":[{\"blade\":[1],\"coeff\":\"1\"}]}\n", 0),
    golden!(["classify", "P(0,0,0) ^ P(1,0,0)"], "", "{\"class\":\"Bipoint\"}\n", 0),
    golden!(["classify", "-V(1,0,0) ^ V(0,1,0)"], "", "{\"class\":\"Bivector\"}\n", 0),
    golden!(["classify", "P(0,0,0) ^ V(1,0,0) + V(0,1,0) ^ V(0,0,1)"], "", "{\"class\":\"GeneralDegree2\"}\n", 0),
    golden!(
        ["--dim", "4", "classify", "V(1,0,0,0) ^ V(0,1,0,0) + V(0,0,1,0) ^ V(0,0,0,1)"],
        "",
        "{\"class\":\"Graded\",\"decomposable\":false,\"grade\":2,\"pure\":true}\n",
        0
    ),
    golden!(
        ["reduce", "--at", "P(0,0,0)", "P(1,0,0) ^ P(0,1,0)"],
        "",
        "{\"anchored\":{\"n\":3,\"terms\":[{\"blade\":[0,1],\"coeff\":\"-1\"},{\"blade\":[0,2],\"coeff\":\"1\"}]},\"pure\":{\"n\":3,\"terms\":[{\"blade\":[1,2],\"coeff\":\"1\"}]}}\n",
        0
    ),
    golden!(["vol", TETRA[0], TETRA[1], TETRA[2], TETRA[3]], "", "\"1\"\n", 0),
    golden!(
        ["--approx", "4", "vol", "P(0,0,0)", "P(3,0,0)", "P(0,1,0)", "P(0,0,1/7)"],
        "",
        "{\"approx\":\"0.4286\",\"exact\":\"3/7\"}\n",
        0
    ),
    golden!(
        ["coords", "--simplex", TETRA[0], TETRA[1], TETRA[2], TETRA[3], "P(1/4,1/4,1/4)"],
        "",
        "{\"coords\":[\"1/4\",\"1/4\",\"1/4\",\"1/4\"],\"grade\":1}\n",
        0
    ),
    golden!(
        ["factor", "V(1,0,0) ^ V(0,1,0) + V(1,0,0) ^ V(0,0,1)"],
        "",
        "{\"factors\":[{\"n\":3,\"terms\":[{\"blade\":[2],\"coeff\":\"1\"},{\"blade\":[3],\"coeff\":\"1\"}]},{\"n\":3,\"terms\":[{\"blade\":[1],\"coeff\":\"-1\"}]}]}\n",
        0
    ),
    golden!(["incidence", "collinear", "P(0,0,0)", "P(1,1,1)", "P(2,2,2)"], "", "true\n", 0),
    golden!(
        ["barycenter"],
        "{\"points\":[{\"at\":[0,0,0],\"weight\":1},{\"at\":[2,0,0],\"weight\":1}]}",
        "{\"point\":[\"1\",\"0\",\"0\"],\"weight\":\"2\"}\n",
        0
    ),
    golden!(
        ["barycenter", "-"],
        "{\"points\":[{\"at\":[\"1\",0,0],\"weight\":\"2\"},{\"at\":[4,0,0],\"weight\":\"1\"}]}",
        "{\"point\":[\"2\",\"0\",\"0\"],\"weight\":\"3\"}\n",
        0
    ),
    golden!(
        ["area"],
        "{\"points\":[[0,0,0],[1,0,0],[1,1,0],[0,1,0]]}",
        "{\"area\":\"1\",\"bivector\":{\"n\":3,\"terms\":[{\"blade\":[1,2],\"coeff\":\"2\"}]},\"plane\":[1,2]}\n",
        0
    ),
    golden!(
        ["volume"],
        "{\"faces\":[[[1,0,0],[0,1,0],[0,0,1]],[[0,0,0],[0,0,1],[0,1,0]],[[0,0,0],[1,0,0],[0,0,1]],[[0,0,0],[0,1,0],[1,0,0]]]}",
        "{\"trivector\":{\"n\":3,\"terms\":[{\"blade\":[1,2,3],\"coeff\":\"1\"}]},\"volume\":\"1\"}\n",
        0
    ),
    golden!(["forces", "invariant"], WRENCH, "\"-2\"\n", 0),
    golden!(["forces", "classify"], WRENCH, "{\"class\":\"Wrench\"}\n", 0),
    golden!(["forces", "classify"], PAIR, "{\"class\":\"Couple\"}\n", 0),
    golden!(
        ["forces", "reduce", "--at", "P(0,0,0)"],
        WRENCH,
        "{\"at\":[\"0\",\"0\",\"0\"],\"couple\":{\"n\":3,\"terms\":[{\"blade\":[2,3],\"coeff\":\"-1\"}]},\"resultant\":[\"1\",\"1\",\"0\"]}\n",
        0
    ),
    golden!(
        [
            "forces",
            "equiv",
            PAIR,
            "{\"forces\":[{\"at\":[0,0,0],\"vec\":[0,1,0]},{\"at\":[-1,0,0],\"vec\":[0,-1,0]}]}"
        ],
        "",
        "true\n",
        0
    ),
    golden!(
        ["forces", "edges", "--simplex", TETRA[0], TETRA[1], TETRA[2], TETRA[3]],
        "{\"forces\":[{\"at\":[0,0,0],\"vec\":[-1,1,0]}]}",
        "{\"coords\":[\"-1\",\"1\",\"0\",\"0\",\"0\",\"0\"]}\n",
        0
    ),
    golden!(
        ["forces", "moment", "--axis", "P(0,0,0)", "P(0,0,1)"],
        "{\"forces\":[{\"at\":[1,0,0],\"vec\":[0,1,0]}]}",
        "\"1\"\n",
        0
    ),
    golden!(
        [
            "oracle",
            "check",
            "{\"k\":1,\"terms\":[{\"coeff\":\"1\",\"points\":[[0,0,0]]},{\"coeff\":\"1\",\"points\":[[2,0,0]]}]}",
            "{\"k\":1,\"terms\":[{\"coeff\":\"2\",\"points\":[[1,0,0]]}]}"
        ],
        "",
        "true\n",
        0
    ),
    golden!(
        ["oracle", "canon"],
        "{\"k\":2,\"terms\":[{\"coeff\":\"1/2\",\"points\":[[1,0,0],[0,1,0]]}]}",
        "{\"n\":3,\"terms\":[{\"blade\":[0,1],\"coeff\":\"-1/2\"},{\"blade\":[0,2],\"coeff\":\"1/2\"},{\"blade\":[1,2],\"coeff\":\"1/2\"}]}\n",
        0
    ),
    golden!(
        ["oracle", "canon"],
        "{\"k\":2,\"terms\":[{\"coeff\":\"1\",\"points\":[[1,0,0],[0,1,0]]},{\"coeff\":\"1\",\"points\":[[0,1,0],[1,0,0]]}]}",
        "{\"n\":3,\"terms\":[]}\n",
        0
    ),
    // Errors: parse and usage failures exit 1, undefined operations exit 2.
    golden!(["eval", "P(1,0)"], "", "", 1),
    golden!(["eval", "P(0,0,0) * P(1,0,0)"], "", "", 1),
    golden!(["frobnicate"], "", "", 1),
    golden!(["barycenter"], "{\"points\":[{\"at\":[0,0,0],\"weight\":1},{\"at\":[2,0,0],\"weight\":-1}]}", "", 2),
    golden!(["forces", "moment", "--axis", "P(1,1,1)", "P(1,1,1)"], "{\"forces\":[]}", "", 2),
    golden!(["volume"], "{\"faces\":[[[1,0,0],[0,1,0],[0,0,1]]]}", "", 2),
    golden!(["reduce", "--at", "V(1,0,0)", "P(1,0,0)"], "", "", 2),
];

/// Runs the CLI in-process and returns `(stdout, stderr, exit code)`.
pub fn invoke(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pointform").chain(args.iter().copied());
    let code = pointform_cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap(), code)
}
