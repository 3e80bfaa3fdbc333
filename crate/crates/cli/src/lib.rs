//! Batch front end for `pointform-core`: reads form expressions or JSON, runs
//! one library operation and prints canonical JSON.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when the input is
//! well formed but the operation is undefined on it.

pub mod expr;
pub mod json;

use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use pointform_core::{
    affine, classify, mechanics::ForceSystem, oracle, reduce_at, AppliedForce, FormClass, Frame, GeometricForm,
    Incidence, SimplexBasis, WeightedPoint,
};
use serde_json::{json, Value};

use crate::json::Style;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at {0}")]
    Expr(#[from] expr::ExprError),
    #[error("{0}")]
    Decode(#[from] json::DecodeError),
    #[error("{0}")]
    Domain(#[from] pointform_core::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 2,
            _ => 1,
        }
    }
}

/// Exact affine exterior algebra from the command line.
///
/// INPUT arguments are literal text; `-` or an omitted INPUT reads standard
/// input and `@path` reads a file. Form inputs are either an expression such
/// as `P(0,0,0) ^ V(1,0,0)` or form JSON.
#[derive(Debug, Parser)]
#[command(name = "pointform", version)]
struct Cli {
    /// Dimension of the affine space for expressions and coordinate lists.
    #[arg(long, global = true, default_value_t = 3)]
    dim: usize,
    /// Also print decimal approximations with this many fractional digits.
    #[arg(long, global = true, value_name = "DIGITS")]
    approx: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a form and print its canonical JSON.
    Eval {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Apply the boundary operator.
    Omega {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Split a homogeneous form into p∧ω(x) and ω(p∧x).
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Name the kind of a homogeneous form.
    Classify {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Barycenter of {"points": [{"at": [..], "weight": ..}]}.
    Barycenter {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Affine volume of n+1 points.
    Vol {
        #[arg(allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Test an incidence relation between points.
    Incidence {
        #[arg(value_enum)]
        kind: IncidenceKind,
        #[arg(allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Coordinates of a form in the basis induced by a tetrahedron.
    Coords {
        #[arg(long, num_args = 4, required = true, allow_hyphen_values = true)]
        simplex: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Factor a pure bivector or trivector into vectors.
    Factor {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Reduce a closed polygon {"points": [[..], ..]}.
    Area {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Reduce a closed triangulated surface {"faces": [[[..], [..], [..]], ..]}.
    Volume {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Force systems {"forces": [{"at": [..], "vec": [..]}]}.
    Forces {
        #[command(subcommand)]
        command: ForcesCommand,
    },
    /// Formal sums of point tuples {"k": .., "terms": [{"coeff": .., "points": [..]}]}.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum IncidenceKind {
    Collinear,
    Coplanar,
    Parallel,
}

#[derive(Debug, Subcommand)]
enum ForcesCommand {
    /// Resultant at a point plus a couple.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Whether two systems are mechanically equivalent.
    Equiv { a: String, b: String },
    /// Scalar invariant of the system (dimension 3).
    Invariant {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Null, SingleForce, Couple or Wrench (dimension 3).
    Classify {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Coefficients along the six edges of a tetrahedron.
    Edges {
        #[arg(long, num_args = 4, required = true, allow_hyphen_values = true)]
        simplex: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Moment ratio about the axis through two points.
    Moment {
        #[arg(long, num_args = 2, required = true, allow_hyphen_values = true)]
        axis: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Whether two formal sums are equal in the quotient.
    Check { a: String, b: String },
    /// The form represented by a formal sum.
    Canon {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
}

struct Ctx<'a> {
    frame: Frame,
    style: Style,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn text(&mut self, input: Option<&str>) -> Result<String, CliError> {
        match input {
            None | Some("-") => {
                let mut buf = String::new();
                self.stdin.read_to_string(&mut buf)?;
                Ok(buf)
            }
            Some(arg) => match arg.strip_prefix('@') {
                Some(path) => Ok(std::fs::read_to_string(path)?),
                None => Ok(arg.to_string()),
            },
        }
    }

    fn form(&mut self, input: Option<&str>) -> Result<GeometricForm, CliError> {
        let text = self.text(input)?;
        if text.trim_start().starts_with('{') {
            return Ok(json::form(&json::parse(&text)?)?);
        }
        let parsed = expr::parse_form(&text, self.frame.dim())?;
        Ok(expr::evaluate(&parsed, self.frame)?)
    }

    fn point(&mut self, input: &str) -> Result<GeometricForm, CliError> {
        let x = self.form(Some(input))?;
        if x.is_point() {
            Ok(x)
        } else {
            Err(pointform_core::Error::NotAPoint.into())
        }
    }

    fn points(&mut self, inputs: &[String]) -> Result<Vec<GeometricForm>, CliError> {
        inputs.iter().map(|s| self.point(s)).collect()
    }

    fn json(&mut self, input: Option<&str>) -> Result<Value, CliError> {
        Ok(json::parse(&self.text(input)?)?)
    }

    fn forces(&mut self, input: Option<&str>) -> Result<ForceSystem, CliError> {
        let v = self.json(input)?;
        let mut system = ForceSystem::new(self.frame);
        for (at, vec) in json::forces(&v, self.frame)? {
            system.push(AppliedForce::new(at, vec)?)?;
        }
        Ok(system)
    }

    fn free_form(&mut self, input: Option<&str>) -> Result<pointform_core::FreeForm, CliError> {
        let v = self.json(input)?;
        Ok(json::free_form(&v, self.frame.dim())?)
    }

    fn basis(&mut self, simplex: &[String]) -> Result<SimplexBasis, CliError> {
        Ok(SimplexBasis::new(self.points(simplex)?)?)
    }
}

fn class_value(class: FormClass) -> Value {
    match class {
        FormClass::Graded { grade, pure, decomposable } => {
            json!({ "class": class.name(), "grade": grade, "pure": pure, "decomposable": decomposable })
        }
        _ => json!({ "class": class.name() }),
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<Value, CliError> {
    let frame = Frame::new(cli.dim).map_err(|e| CliError::Usage(format!("--dim: {e}")))?;
    let style = Style { approx: cli.approx };
    let mut ctx = Ctx { frame, style, stdin };
    Ok(match cli.command {
        Command::Eval { input } => style.form(&ctx.form(input.as_deref())?),
        Command::Omega { input } => style.form(&ctx.form(input.as_deref())?.omega()),
        Command::Reduce { at, input } => {
            let p = ctx.point(&at)?;
            let x = ctx.form(input.as_deref())?;
            let r = reduce_at(&x, &p)?;
            json!({ "anchored": style.form(&r.anchored), "pure": style.form(&r.pure) })
        }
        Command::Classify { input } => class_value(classify(&ctx.form(input.as_deref())?)?),
        Command::Barycenter { input } => {
            let v = ctx.json(input.as_deref())?;
            let system = json::weighted_points(&v, frame)?
                .into_iter()
                .map(|(p, w)| WeightedPoint::new(p, w))
                .collect::<Result<Vec<_>, _>>()?;
            let g = affine::barycenter(&system)?;
            json!({ "point": style.scalars(&g.point().point_coords()?), "weight": style.scalar(g.weight()) })
        }
        Command::Vol { points } => {
            if points.len() != frame.dim() + 1 {
                return Err(CliError::Usage(format!(
                    "vol takes {} points in dimension {}, found {}",
                    frame.dim() + 1,
                    frame.dim(),
                    points.len()
                )));
            }
            style.scalar(&frame.vol(&ctx.points(&points)?)?)
        }
        Command::Incidence { kind, points } => {
            let kind = match kind {
                IncidenceKind::Collinear => Incidence::Collinear,
                IncidenceKind::Coplanar => Incidence::Coplanar,
                IncidenceKind::Parallel => Incidence::ParallelSegments,
            };
            if points.len() != kind.arity() {
                return Err(CliError::Usage(format!("{kind:?} takes {} points, found {}", kind.arity(), points.len())));
            }
            Value::Bool(affine::incidence(kind, &ctx.points(&points)?)?)
        }
        Command::Coords { simplex, input } => {
            let basis = ctx.basis(&simplex)?;
            let x = ctx.form(input.as_deref())?;
            let c = affine::coords(&x, &basis)?;
            json!({ "grade": x.homogeneous_grade(), "coords": style.scalars(&c) })
        }
        Command::Factor { input } => {
            let factors = affine::factor(&ctx.form(input.as_deref())?)?;
            json!({ "factors": factors.iter().map(|f| style.form(f)).collect::<Vec<_>>() })
        }
        Command::Area { input } => {
            let v = ctx.json(input.as_deref())?;
            let r = affine::reduce_polygon(&json::points(&v, frame)?)?;
            json!({
                "bivector": style.form(&r.bivector),
                "area": r.area.as_ref().map(|a| style.scalar(a)),
                "plane": r.plane.map(|(i, j)| [i, j]),
            })
        }
        Command::Volume { input } => {
            let v = ctx.json(input.as_deref())?;
            let r = affine::reduce_closed_surface(&json::faces(&v, frame)?)?;
            json!({ "trivector": style.form(&r.trivector), "volume": style.scalar(&r.volume) })
        }
        Command::Forces { command } => forces(command, &mut ctx)?,
        Command::Oracle { command } => match command {
            OracleCommand::Check { a, b } => {
                let (f, g) = (ctx.free_form(Some(&a))?, ctx.free_form(Some(&b))?);
                Value::Bool(oracle::free_equals(&f, &g)?)
            }
            OracleCommand::Canon { input } => style.form(&oracle::canonicalize(&ctx.free_form(input.as_deref())?)),
        },
    })
}

fn forces(command: ForcesCommand, ctx: &mut Ctx<'_>) -> Result<Value, CliError> {
    let style = ctx.style;
    Ok(match command {
        ForcesCommand::Reduce { at, input } => {
            let p = ctx.point(&at)?;
            let r = ctx.forces(input.as_deref())?.reduce_poinsot(&p)?;
            json!({
                "at": style.scalars(&r.at.point_coords()?),
                "resultant": style.scalars(&r.resultant.vector_coords()?),
                "couple": style.form(&r.couple),
            })
        }
        ForcesCommand::Equiv { a, b } => {
            let (s, t) = (ctx.forces(Some(&a))?, ctx.forces(Some(&b))?);
            Value::Bool(s.equivalent(&t)?)
        }
        ForcesCommand::Invariant { input } => style.scalar(&ctx.forces(input.as_deref())?.scalar_invariant()?),
        ForcesCommand::Classify { input } => json!({ "class": ctx.forces(input.as_deref())?.classify()?.name() }),
        ForcesCommand::Edges { simplex, input } => {
            let basis = ctx.basis(&simplex)?;
            let c = ctx.forces(input.as_deref())?.edge_decomposition(&basis)?;
            json!({ "coords": style.scalars(&c) })
        }
        ForcesCommand::Moment { axis, input } => {
            let (a, b) = (ctx.point(&axis[0])?, ctx.point(&axis[1])?);
            style.scalar(&ctx.forces(input.as_deref())?.moment_ratio(&a, &b)?)
        }
    })
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let sink: &mut dyn Write = if informational { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 1 };
        }
    };
    match execute(cli, stdin) {
        Ok(value) => {
            let _ = writeln!(stdout, "{value}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
