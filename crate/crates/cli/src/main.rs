//! `evcodes`: evaluation codes over finite fields from the command line.
//!
//! Every verb prints one JSON report on stdout (or indented text with
//! `--format text`). Exit status is 0 on success, 1 when a mathematical
//! precondition fails or an `--assert` check does not hold, and 2 for
//! malformed input.

mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evcodes::duality::{algebraic_dual, combinatorial_pairing, is_dual_monomial};
use evcodes::evalcode::{evaluate_space, standard_function_space, LinearCode, DEFAULT_BUDGET};
use evcodes::families::{
    affine_monomial_dual, affine_rm_dual, duality_criterion, reed_muller, self_dual_code,
    torus_monomial_dual, weakly_divisor_closed, AffineDual, CartesianSpec, Shape,
};
use evcodes::invariants::{
    essential_monomials, hilbert_profile, indicator_functions, symmetry_report, v_numbers,
};
use evcodes::json::{vector_to_json, CodeJson, PointsFile};
use evcodes::{Error, GaloisField, Monomial, MonomialOrder, Poly, Result, Ring, VanishingIdeal};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "evcodes",
    version,
    about = "Evaluation codes over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Field descriptor, e.g. '{"p":3,"v":1}' or '{"p":2,"v":2,"irreducible":[1,1,1]}'.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Maximum number of codewords enumerated by minimum-distance searches.
    #[arg(long, global = true)]
    budget: Option<u128>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Grevlex,
    Grlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyShape {
    Torus,
    Affine,
    Cartesian,
}

#[derive(Args)]
struct PointsArg {
    /// Points file, or the same JSON inline.
    #[arg(long)]
    points: String,
}

#[derive(Args)]
struct SpaceArg {
    #[command(flatten)]
    points: PointsArg,
    /// Polynomials, one per line (file or inline; `,` and `;` also separate).
    /// `S<=d` stands for every monomial of degree at most d.
    #[arg(long, required_unless_present = "degree", conflicts_with = "degree")]
    space: Option<String>,
    /// Shorthand for `--space 'S<=d'`.
    #[arg(long, allow_negative_numbers = true)]
    degree: Option<i64>,
}

#[derive(Subcommand)]
enum Verb {
    /// Reduced Gröbner basis of the vanishing ideal.
    VanishingIdeal(PointsArg),
    /// Standard monomials and the regularity index.
    Footprint(PointsArg),
    /// Generator matrix and standard function space of an evaluation code.
    Code(SpaceArg),
    /// Minimum distance of an evaluation code or of its dual.
    MinDistance {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dual: bool,
    },
    /// Generator matrix of the dual code.
    Dual(SpaceArg),
    /// Basis of the algebraic dual inside the span of the footprint.
    AlgebraicDual(SpaceArg),
    /// Standard indicator functions, their degrees and the essential monomials.
    Indicators(PointsArg),
    /// Local and global v-numbers.
    Vnumber(PointsArg),
    /// h-vector, Hilbert function and symmetry.
    Hvector(PointsArg),
    /// Reed–Muller duality criterion and its scaling vector.
    Criterion {
        #[command(flatten)]
        points: PointsArg,
        /// Exit with status 1 when the criterion does not hold.
        #[arg(long)]
        assert: bool,
    },
    /// Scaling vector for a pair of complementary standard monomial sets.
    Pairing {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        gamma1: String,
        #[arg(long)]
        gamma2: String,
    },
    /// Cartesian point sets and their closed-form monomial duals.
    Family {
        #[arg(value_enum)]
        shape: FamilyShape,
        /// Subgroup orders per axis; `0+d` adjoins zero for `cartesian`.
        #[arg(long)]
        orders: String,
        /// Monomial set whose algebraic dual is computed in closed form.
        #[arg(long)]
        monomials: Option<String>,
        /// Reed–Muller degree for the closed-form dual on affine sets.
        #[arg(long, allow_negative_numbers = true)]
        degree: Option<i64>,
    },
    /// Reed–Muller code of degree d with its dual data.
    Rm {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// Self-dual code from the duality criterion in characteristic 2.
    SelfDual(PointsArg),
}

struct Ctx {
    field: Option<String>,
    order: MonomialOrder,
    budget: u128,
}

impl Ctx {
    fn ideal(&self, p: &PointsArg) -> Result<VanishingIdeal<GaloisField>> {
        let x = input::points(&p.points, self.field.as_deref())?;
        VanishingIdeal::new(x, self.order)
    }

    fn field(&self) -> Result<GaloisField> {
        let text = self
            .field
            .as_deref()
            .ok_or_else(|| Error::Parse("--field is required".into()))?;
        input::field(&input::file_or_inline(text)?)
    }

    fn distance(&self, c: &LinearCode<GaloisField>) -> Result<Value> {
        if c.dim() == 0 {
            return Ok(Value::Null);
        }
        Ok(json!(c.min_distance(self.budget)?))
    }
}

fn space(ideal: &VanishingIdeal<GaloisField>, arg: &SpaceArg) -> Result<Vec<Poly>> {
    match (&arg.space, arg.degree) {
        (Some(text), _) => input::space(ideal.ring(), &input::file_or_inline(text)?),
        (None, Some(d)) => Ok(rm_space(ideal.ring(), d)),
        (None, None) => Err(Error::Parse("--space or --degree is required".into())),
    }
}

fn rm_space(ring: &Ring, d: i64) -> Vec<Poly> {
    ring.monomials_up_to(d)
        .into_iter()
        .map(|m| ring.monomial(m))
        .collect()
}

fn polys(ring: &Ring, fs: &[Poly]) -> Value {
    fs.iter().map(|f| ring.format(f)).collect()
}

fn monos(ms: &[Monomial]) -> Value {
    ms.iter().map(Monomial::to_string).collect()
}

fn code_json(c: &LinearCode<GaloisField>) -> Value {
    serde_json::to_value(CodeJson::of(c)).expect("codes serialize")
}

fn run(cli: &Cli) -> Result<Value> {
    let ctx = Ctx {
        field: cli
            .field
            .as_ref()
            .map(|f| input::file_or_inline(f))
            .transpose()?,
        order: match cli.order {
            Order::Grevlex => MonomialOrder::Grevlex,
            Order::Grlex => MonomialOrder::Grlex,
        },
        budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
    };
    match &cli.verb {
        Verb::VanishingIdeal(p) => {
            let v = ctx.ideal(p)?;
            Ok(json!({"points": v.len(), "groebner_basis": polys(v.ring(), v.gb().generators())}))
        }
        Verb::Footprint(p) => {
            let v = ctx.ideal(p)?;
            Ok(json!({"footprint": monos(v.footprint().monomials()), "r0": v.r0()}))
        }
        Verb::Code(s) => {
            let v = ctx.ideal(&s.points)?;
            let l = space(&v, s)?;
            let mut out = code_json(&evaluate_space(&v, &l)?);
            out["standard_space"] = polys(v.ring(), &standard_function_space(&v, &l)?);
            Ok(out)
        }
        Verb::MinDistance { space: s, dual } => {
            let v = ctx.ideal(&s.points)?;
            let mut c = evaluate_space(&v, &space(&v, s)?)?;
            if *dual {
                c = c.dual();
            }
            Ok(json!({"length": c.length(), "k": c.dim(), "min_distance": ctx.distance(&c)?}))
        }
        Verb::Dual(s) => {
            let v = ctx.ideal(&s.points)?;
            Ok(code_json(&evaluate_space(&v, &space(&v, s)?)?.dual()))
        }
        Verb::AlgebraicDual(s) => {
            let v = ctx.ideal(&s.points)?;
            let basis = algebraic_dual(&v, &space(&v, s)?)?;
            Ok(json!({"basis": polys(v.ring(), &basis)}))
        }
        Verb::Indicators(p) => {
            let v = ctx.ideal(p)?;
            let ind = indicator_functions(&v);
            Ok(json!({
                "indicators": polys(v.ring(), ind.functions()),
                "v_local": ind.degrees(),
                "r0": v.r0(),
                "essential": monos(&essential_monomials(&v, &ind)),
            }))
        }
        Verb::Vnumber(p) => {
            let vn = v_numbers(&ctx.ideal(p)?)?;
            Ok(json!({"v_local": vn.local, "v_global": vn.global}))
        }
        Verb::Hvector(p) => {
            let v = ctx.ideal(p)?;
            let profile = hilbert_profile(&v);
            Ok(json!({
                "h_vector": profile.h_vector,
                "hilbert": profile.hilbert,
                "r0": profile.r0,
                "symmetric": symmetry_report(&v)?.holds(),
                "complement_sums": profile.complement_sums(),
            }))
        }
        Verb::Criterion { points, assert } => {
            let v = ctx.ideal(points)?;
            let r = duality_criterion(&v)?;
            if *assert && !r.holds {
                return Err(Error::CriterionFails);
            }
            let k = v.field();
            Ok(json!({
                "holds": r.holds,
                "complement_holds": r.complement_holds,
                "v_equals_r0": r.v_equals_r0,
                "r0": r.r0,
                "v_local": r.v_local,
                "g": r.g.as_ref().map(|g| v.ring().format(g)),
                "beta": r.beta.as_ref().map(|b| vector_to_json(k, b)),
            }))
        }
        Verb::Pairing {
            points,
            gamma1,
            gamma2,
        } => {
            let v = ctx.ideal(points)?;
            let g1 = input::monomials(v.ring(), gamma1)?;
            let g2 = input::monomials(v.ring(), gamma2)?;
            let beta = combinatorial_pairing(&v, &g1, &g2)?;
            Ok(json!({"beta": vector_to_json(v.field(), &beta)}))
        }
        Verb::Family {
            shape,
            orders,
            monomials,
            degree,
        } => family(&ctx, *shape, orders, monomials.as_deref(), *degree),
        Verb::Rm { points, degree } => {
            let v = ctx.ideal(points)?;
            let c = reed_muller(&v, *degree)?.code().clone();
            let l = rm_space(v.ring(), *degree);
            let dual = algebraic_dual(&v, &l)?;
            Ok(json!({
                "degree": degree,
                "length": c.length(),
                "k": c.dim(),
                "min_distance": ctx.distance(&c)?,
                "dual_min_distance": ctx.distance(&c.dual())?,
                "algebraic_dual": polys(v.ring(), &dual),
                "dual_is_monomial": is_dual_monomial(&v, &l)?.is_monomial(),
            }))
        }
        Verb::SelfDual(p) => {
            let v = ctx.ideal(p)?;
            let c = self_dual_code(&v)?;
            let mut out = code_json(&c);
            out["self_dual"] = json!(c.is_self_dual());
            Ok(out)
        }
    }
}

fn family(
    ctx: &Ctx,
    shape: FamilyShape,
    orders: &str,
    monomials: Option<&str>,
    degree: Option<i64>,
) -> Result<Value> {
    let k = ctx.field()?;
    let axes = input::axes(orders, matches!(shape, FamilyShape::Affine))?;
    if matches!(shape, FamilyShape::Torus) && axes.iter().any(|a| a.with_zero) {
        return Err(Error::Parse("torus axes cannot contain 0".into()));
    }
    let spec = CartesianSpec::new(k.clone(), axes)?;
    let x = spec.point_set()?;
    let mut out = serde_json::to_value(PointsFile::of(&x)).expect("points serialize");
    out["shape"] = json!(match spec.shape() {
        Shape::Torus => "torus",
        Shape::Affine => "affine",
        Shape::Mixed => "mixed",
    });
    out["r0"] = json!(spec.r0());
    out["footprint"] = monos(&spec.footprint(ctx.order));
    if let Some(text) = monomials {
        let v = spec.vanishing_ideal(ctx.order)?;
        let a = input::monomials(v.ring(), text)?;
        match spec.shape() {
            Shape::Torus => {
                out["dual"] = monos(&torus_monomial_dual(&a, &spec, ctx.order)?);
            }
            Shape::Affine => {
                out["weakly_divisor_closed"] = json!(weakly_divisor_closed(&a, &spec)?);
                out["dual"] = match affine_monomial_dual(&a, &spec, ctx.order)? {
                    AffineDual::Monomial(ms) => monos(&ms),
                    AffineDual::NotMonomial => Value::Null,
                };
            }
            Shape::Mixed => {
                let l: Vec<Poly> = a.iter().map(|m| v.ring().monomial(m.clone())).collect();
                out["dual"] = is_dual_monomial(&v, &l)?
                    .certificate()
                    .map_or(Value::Null, monos);
            }
        }
    }
    if let Some(d) = degree {
        out["rm_dual"] = monos(&affine_rm_dual(d, &spec, ctx.order)?);
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report::json(&report)),
                Format::Text => print!("{}", report::text(&report)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    eprintln!("{}", json!({"error": e.code(), "message": e.to_string()}))
                }
                Format::Text => eprintln!("error [{}]: {e}", e.code()),
            }
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
