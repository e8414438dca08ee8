//! Command-line front end. Every subcommand prints one JSON document; exit
//! code 0 on success, 1 when a verification fails, 2 on bad input.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::presentations::{def11, def81_even, def81_odd, def82, def83};
use crate::algebra::{
    check_relations, g_m1n_labels, symbolic_values, BrauerTypeAlgebra, Gen, ParamSet, ParamValues, Probes, Rebind,
    RelationList, RelationReport, Variant,
};
use crate::analysis::{dimension_report, generic_criterion, radical_rank, wedderburn_account, AnalysisError};
use crate::cellular::{build_cell_datum, exponent, verify_cellular};
use crate::connections::{assemble, ConnectionKind};
use crate::exactnum::{prime_one_mod, ModP, PolyRing, Rational, Ring};
use crate::refgroups::{parse_group_spec, GroupKind, ReflectionGroup};
use crate::reps::{
    algebra_regular, group_regular, h3_induced_rep, h3_rho4, lk_blocks, lk_rep, m_matrix, H3Data, MatrixRep,
};
use crate::theorem86::compare;

#[derive(Debug, Parser)]
#[command(name = "brauer-type", version, about = "Brauer-type algebras of reflection groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// also write the JSON report to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// worker threads (results do not depend on it)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// picks the primes used for modular computations
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct GroupArg {
    /// dihedral:<m>, h3, a:<n> or g:<m>,1,<n>
    #[arg(long)]
    group: String,
}

#[derive(Debug, Args)]
struct Point {
    /// value of every tau (rational, e.g. 7 or 1/2)
    #[arg(long, default_value = "7", value_parser = parse_rational, allow_negative_numbers = true)]
    tau: Rational,
    /// value of every mu; unit mu when omitted
    #[arg(long, value_parser = parse_rational, allow_negative_numbers = true)]
    mu: Option<Rational>,
    /// prime for modular arithmetic
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Corrected,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    /// LK representation with symbolic parameters
    Lk,
    /// left regular representation of the algebra, mod p
    Regular,
    /// regular representation of the group, mod p (bmr only)
    Group,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group data: order, hyperplanes, orbits, classes, crossing pairs.
    Group(GroupArg),
    /// Basis of the algebra and the relation check on it.
    Algebra {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        point: Point,
    },
    /// The group's generator presentation, checked in the algebra (or in
    /// the LK representation for G(m,1,n)).
    Relations {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: VariantArg,
        #[command(flatten)]
        point: Point,
    },
    /// The LK representation with symbolic tau.
    LkRep(GroupArg),
    /// The H3 representations rho_0..rho_4 with symbolic tau.
    H3Rep {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        alpha: Option<u8>,
    },
    /// Flatness and invariance of a KZ-type connection.
    Flatness {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "bgu")]
        kind: ConnectionKind,
        #[arg(long, value_enum, default_value = "lk")]
        model: ModelArg,
        #[command(flatten)]
        point: Point,
    },
    /// Cell datum and the checks (C1)-(C3), mod a splitting prime.
    Cellular {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        point: Point,
    },
    /// Radical rank of the trace form and the Wedderburn accounting.
    Semisimple {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        point: Point,
    },
    /// Phi/Psi comparison with the cyclotomic Brauer algebra (g:<m>,1,<n>).
    CycloCompare(GroupArg),
    /// Every applicable check for one group.
    VerifyAll {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        point: Point,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>()
        .map_err(|e| format!("not a rational number: {}", e))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed")]
    Failed(Value),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// Exit code and text for stdout.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                output: e.to_string(),
            }
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return error_outcome(2, &e.to_string()),
    };
    let ctx = Context { seed: cli.seed };
    let result = pool.install(|| dispatch(&ctx, &cli.command));
    let (code, value) = match result {
        Ok(v) => (0, v),
        Err(CliError::Failed(v)) => (1, v),
        Err(CliError::Usage(msg)) => return error_outcome(2, &msg),
    };
    let output = serde_json::to_string_pretty(&value).expect("json");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &output) {
            return error_outcome(2, &format!("cannot write {}: {}", path.display(), e));
        }
    }
    Outcome { code, output }
}

fn error_outcome(code: i32, msg: &str) -> Outcome {
    Outcome {
        code,
        output: serde_json::to_string_pretty(&json!({ "error": msg })).expect("json"),
    }
}

struct Context {
    seed: u64,
}

impl Context {
    /// Four primes near 2^30, shifted by the seed.
    fn primes(&self, modulus: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut above = (1u64 << 30) + self.seed * (1 << 16);
        for _ in 0..4 {
            let p = prime_one_mod(modulus, above);
            out.push(p);
            above = p;
        }
        out
    }

    fn prime(&self, point: &Point) -> u64 {
        point.prime.unwrap_or_else(|| self.primes(2)[0])
    }
}

fn dispatch(ctx: &Context, cmd: &Command) -> Result<Value, CliError> {
    match cmd {
        Command::Group(a) => {
            let g = group(a)?;
            let mut r = g.report();
            r["expected_algebra_dim"] = json!(crate::analysis::expected_dim(&g));
            Ok(r)
        }
        Command::Algebra { group: a, point } => algebra_cmd(ctx, &group(a)?, point),
        Command::Relations {
            group: a,
            variant,
            point,
        } => relations_cmd(ctx, &group(a)?, *variant, point),
        Command::LkRep(a) => lk_cmd(&group(a)?),
        Command::H3Rep { alpha } => h3_cmd(*alpha),
        Command::Flatness {
            group: a,
            kind,
            model,
            point,
        } => flatness_cmd(ctx, &group(a)?, *kind, *model, point),
        Command::Cellular { group: a, point } => cellular_cmd(ctx, &group(a)?, point),
        Command::Semisimple { group: a, point } => semisimple_cmd(ctx, &group(a)?, point),
        Command::CycloCompare(a) => cyclo_cmd(&group(a)?),
        Command::VerifyAll { group: a, point } => verify_all(ctx, &group(a)?, point),
    }
}

fn group(a: &GroupArg) -> Result<ReflectionGroup, CliError> {
    parse_group_spec(&a.group).map_err(usage)
}

fn checked(value: Value, ok: bool) -> Result<Value, CliError> {
    if ok {
        Ok(value)
    } else {
        Err(CliError::Failed(value))
    }
}

fn relation_json(r: &RelationReport) -> Value {
    json!({"checked": r.checked, "passed": r.passed(), "failed": r.failed_names()})
}

/// Parameter set (unit mu unless `--mu`) and its values mod p.
fn modp_params(g: &ReflectionGroup, f: &ModP, point: &Point) -> Result<(ParamSet, ParamValues<u64>), CliError> {
    let params = match point.mu {
        Some(_) => ParamSet::symbolic(g),
        None => ParamSet::unit_mu(g),
    };
    let tau = f.from_rational(&point.tau).map_err(usage)?;
    let mu = point
        .mu
        .as_ref()
        .map(|m| f.from_rational(m))
        .transpose()
        .map_err(usage)?;
    let vals = params
        .vars()
        .names()
        .iter()
        .map(|n| {
            let v = if g.orbit_names().contains(n) {
                tau
            } else {
                mu.unwrap_or(1)
            };
            (n.clone(), v)
        })
        .collect();
    Ok((params, vals))
}

fn modp_engine(g: &ReflectionGroup, p: u64, point: &Point) -> Result<BrauerTypeAlgebra<ModP>, CliError> {
    let f = ModP::new(p);
    let (params, vals) = modp_params(g, &f, point)?;
    BrauerTypeAlgebra::new(g, &params, f, &vals).map_err(usage)
}

fn algebra_cmd(ctx: &Context, g: &ReflectionGroup, point: &Point) -> Result<Value, CliError> {
    let p = ctx.prime(point);
    let alg = modp_engine(g, p, point)?;
    let dims = dimension_report(&alg);
    let sound = alg.relation_soundness().map_err(usage)?;
    let ok = sound.passed() && dims.matches != Some(false);
    checked(
        json!({
            "group": g.name(),
            "prime": p,
            "tau": point.tau.to_string(),
            "dimension": dims,
            "relations": relation_json(&sound),
        }),
        ok,
    )
}

/// The presentation of the group's type, with the corrected or printed
/// reading of the disputed relations.
fn presentation_for(g: &ReflectionGroup, variant: Variant) -> Result<RelationList, CliError> {
    match g.kind() {
        GroupKind::Dihedral { m } if m % 2 == 1 => def81_odd(*m).map_err(usage),
        GroupKind::Dihedral { m } => def81_even(*m, variant).map_err(usage),
        GroupKind::Gm1n { m, n } => def83(*m, *n, variant).map_err(usage),
        _ => Ok(def82(g, &ParamSet::symbolic(g), variant)),
    }
}

/// S_k to the k-th generator, E_k to its hyperplane.
fn simple_map(g: &ReflectionGroup) -> std::collections::HashMap<Gen, Option<Vec<Gen>>> {
    g.generators()
        .iter()
        .enumerate()
        .flat_map(|(k, &s)| {
            [
                (Gen::S(k), Some(vec![Gen::W(s)])),
                (
                    Gen::E(k),
                    Some(vec![Gen::E(g.hyperplane_of(s).expect("generator is a reflection"))]),
                ),
            ]
        })
        .collect()
}

fn relations_cmd(ctx: &Context, g: &ReflectionGroup, variant: VariantArg, point: &Point) -> Result<Value, CliError> {
    let variant = match variant {
        VariantArg::Printed => Variant::Printed,
        VariantArg::Corrected => Variant::Corrected,
    };
    let rels = presentation_for(g, variant)?;
    let p = ctx.prime(point);
    let f = ModP::new(p);
    // every class and orbit variable gets the --mu / --tau value
    let params = ParamSet::symbolic(g);
    let tau = f.from_rational(&point.tau).map_err(usage)?;
    let mu = point
        .mu
        .as_ref()
        .map(|m| f.from_rational(m))
        .transpose()
        .map_err(usage)?
        .unwrap_or(1);
    let vals: ParamValues<u64> = params
        .vars()
        .names()
        .iter()
        .map(|n| (n.clone(), if g.orbit_names().contains(n) { tau } else { mu }))
        .collect();
    let (model_name, report) = if matches!(g.kind(), GroupKind::Gm1n { .. }) {
        let ev = params.evaluate(&f, &vals).map_err(usage)?;
        let lk = lk_rep(g, &f, &ev);
        let report =
            check_relations(&Rebind::new(&lk, simple_map(g)), &rels, &vals, &Probes::AllBasis).map_err(usage)?;
        ("lk", report)
    } else {
        let alg = BrauerTypeAlgebra::new(g, &params, f, &vals).map_err(usage)?;
        let report =
            check_relations(&Rebind::new(&alg, simple_map(g)), &rels, &vals, &Probes::AllBasis).map_err(usage)?;
        ("algebra", report)
    };
    let ok = report.passed();
    checked(
        json!({
            "group": g.name(),
            "model": model_name,
            "prime": p,
            "presentation": rels.to_json(),
            "check": relation_json(&report),
        }),
        ok,
    )
}

fn symbolic_lk(
    g: &ReflectionGroup,
) -> Result<(ParamSet, MatrixRep<PolyRing>, ParamValues<crate::exactnum::ParamPoly>), CliError> {
    let params = ParamSet::unit_mu(g);
    let ring = params.ring();
    let vals = symbolic_values(params.vars(), &ring).map_err(usage)?;
    let rep = lk_rep(g, &ring, &params.symbolic_values());
    Ok((params, rep, vals))
}

fn lk_cmd(g: &ReflectionGroup) -> Result<Value, CliError> {
    let (params, rep, vals) = symbolic_lk(g)?;
    let report = check_relations(&rep, &def11(g, &params), &vals, &Probes::AllBasis).map_err(usage)?;
    let blocks = lk_blocks(&rep, g).map_err(usage)?;
    let det = m_matrix(&rep).map_err(usage)?.det;
    let ok = report.passed();
    checked(
        json!({
            "group": g.name(),
            "dim": rep.dim(),
            "blocks": blocks.iter().map(|(k, _)| k.len()).collect::<Vec<_>>(),
            "det_m": det.to_string(),
            "relations": relation_json(&report),
            "rep": rep.to_json(g),
        }),
        ok,
    )
}

fn h3_cmd(alpha: Option<u8>) -> Result<Value, CliError> {
    let g = parse_group_spec("h3").map_err(usage)?;
    let data = H3Data::new(&g).map_err(usage)?;
    let params = ParamSet::unit_mu(&g);
    let ring = params.ring();
    let tau = ring.var("tau").map_err(usage)?;
    let vals = symbolic_values(params.vars(), &ring).map_err(usage)?;
    let rels = def11(&g, &params);
    let which: Vec<u8> = match alpha {
        Some(a) => vec![a],
        None => (0..=4).collect(),
    };
    let mut out = Vec::new();
    let mut ok = true;
    for a in which {
        let rep = if a < 4 {
            h3_induced_rep(&g, &data, a as usize, &ring, &tau).map_err(usage)?
        } else {
            h3_rho4(&g, &data, &ring, &tau)
        };
        let report = check_relations(&rep, &rels, &vals, &Probes::AllBasis).map_err(usage)?;
        ok &= report.passed();
        let m = m_matrix(&rep).map_err(usage)?;
        out.push(json!({
            "alpha": a,
            "dim": rep.dim(),
            "m_matrix": m.to_json(),
            "relations": relation_json(&report),
        }));
    }
    checked(json!({"group": g.name(), "reps": out}), ok)
}

fn flatness_cmd(
    ctx: &Context,
    g: &ReflectionGroup,
    kind: ConnectionKind,
    model: ModelArg,
    point: &Point,
) -> Result<Value, CliError> {
    let (dim, flat, invariant) = match model {
        ModelArg::Lk => {
            let params = ParamSet::symbolic(g);
            let rep = lk_rep(g, &params.ring(), &params.symbolic_values());
            let c = assemble(kind, g, &params.symbolic_values(), &rep).map_err(usage)?;
            (c.dim(), c.check_flat(), c.check_invariant(g, &rep))
        }
        ModelArg::Regular => {
            let alg = modp_engine(g, ctx.prime(point), point)?;
            let rep = algebra_regular(&alg, g, (0..alg.basis().len()).map(|b| b.to_string()).collect());
            let c = assemble(kind, g, alg.values(), &rep).map_err(usage)?;
            (c.dim(), c.check_flat(), c.check_invariant(g, &rep))
        }
        ModelArg::Group => {
            let f = ModP::new(ctx.prime(point));
            let (params, vals) = modp_params(g, &f, point)?;
            let ev = params.evaluate(&f, &vals).map_err(usage)?;
            let rep = group_regular(g, &f);
            let c = assemble(kind, g, &ev, &rep).map_err(usage)?;
            (c.dim(), c.check_flat(), c.check_invariant(g, &rep))
        }
    };
    let ok = flat.flat() && invariant.invariant();
    checked(
        json!({
            "group": g.name(),
            "kind": kind,
            "model": format!("{:?}", model).to_lowercase(),
            "dim": dim,
            "flatness": flat.to_json(),
            "invariance": {"checks": invariant.checks, "violations": invariant.violations, "invariant": invariant.invariant()},
            "flat": ok,
        }),
        ok,
    )
}

fn has_cell_datum(g: &ReflectionGroup) -> bool {
    matches!(g.kind(), GroupKind::Dihedral { .. }) || crate::analysis::expected_dim(g) == Some(1045)
}

fn cellular_report(ctx: &Context, g: &ReflectionGroup, point: &Point) -> Result<Value, CliError> {
    let p = point.prime.unwrap_or_else(|| ctx.primes(exponent(g))[0]);
    let alg = modp_engine(g, p, point)?;
    let datum = build_cell_datum(&alg).map_err(usage)?;
    let report = verify_cellular(&datum, &alg);
    let ok = report.passed();
    let v =
        json!({"group": g.name(), "prime": p, "datum": datum.to_json(), "report": report.to_json(), "cellular": ok});
    checked(v, ok)
}

fn cellular_cmd(ctx: &Context, g: &ReflectionGroup, point: &Point) -> Result<Value, CliError> {
    if !has_cell_datum(g) {
        return Err(CliError::Usage(format!("no cell datum for {}", g.name())));
    }
    cellular_report(ctx, g, point)
}

fn semisimple_report(ctx: &Context, g: &ReflectionGroup, point: &Point) -> Result<Value, CliError> {
    let primes = ctx.primes(if has_cell_datum(g) { exponent(g) } else { 2 });
    let radical = radical_rank(
        |f: ModP| {
            let (params, vals) = modp_params(g, &f, point).map_err(|e| AnalysisError::Unsupported(e.to_string()))?;
            BrauerTypeAlgebra::new(g, &params, f, &vals).map_err(|e| AnalysisError::Unsupported(e.to_string()))
        },
        &primes,
    )
    .map_err(usage)?;
    let f = ModP::new(primes[0]);
    let tau = f.from_rational(&point.tau).map_err(usage)?;
    let reps: Vec<(String, MatrixRep<ModP>)> = match g.kind() {
        GroupKind::Dihedral { .. } => {
            let (params, vals) = modp_params(g, &f, point)?;
            let lk = lk_rep(g, &f, &params.evaluate(&f, &vals).map_err(usage)?);
            lk_blocks(&lk, g)
                .map_err(usage)?
                .into_iter()
                .map(|(k, b)| (format!("lk{:?}", k), b))
                .collect()
        }
        _ if has_cell_datum(g) => {
            let data = H3Data::new(g).map_err(usage)?;
            let mut reps: Vec<(String, MatrixRep<ModP>)> = (0..4)
                .map(|a| Ok((format!("rho{}", a), h3_induced_rep(g, &data, a, &f, &tau)?)))
                .collect::<Result<_, crate::reps::RepError>>()
                .map_err(usage)?;
            reps.push(("rho4".into(), h3_rho4(g, &data, &f, &tau)));
            reps
        }
        _ => Vec::new(),
    };
    let wedderburn = (!reps.is_empty()).then(|| {
        let refs: Vec<(String, &MatrixRep<ModP>)> = reps.iter().map(|(n, r)| (n.clone(), r)).collect();
        let acc = wedderburn_account(radical.dim, g, &refs);
        let mut parts = vec![acc.group_part];
        parts.extend(acc.reps.iter().map(|r| r.2));
        json!({"parts": parts, "total": acc.total, "matches": acc.matches, "note": acc.note})
    });
    let criterion = generic_criterion(g).ok().map(|c| c.to_json());
    Ok(json!({
        "group": g.name(),
        "tau": point.tau.to_string(),
        "dim": radical.dim,
        "ranks": radical.ranks,
        "radical": radical.radical,
        "semisimple": radical.semisimple(),
        "wedderburn": wedderburn,
        "criterion": criterion,
    }))
}

fn semisimple_cmd(ctx: &Context, g: &ReflectionGroup, point: &Point) -> Result<Value, CliError> {
    semisimple_report(ctx, g, point)
}

fn cyclo_cmd(g: &ReflectionGroup) -> Result<Value, CliError> {
    let GroupKind::Gm1n { m, n } = *g.kind() else {
        return Err(CliError::Usage("cyclo-compare needs g:<m>,1,<n>".into()));
    };
    let r = compare(m, n).map_err(usage)?;
    checked(r.to_json(), r.passed())
}

/// Pass/fail of a section that may report a failure as `CliError::Failed`.
fn section(r: Result<Value, CliError>) -> Result<(bool, Value), CliError> {
    match r {
        Ok(v) => Ok((true, v)),
        Err(CliError::Failed(v)) => Ok((false, v)),
        Err(e) => Err(e),
    }
}

fn verify_all(ctx: &Context, g: &ReflectionGroup, point: &Point) -> Result<Value, CliError> {
    let mut out = json!({"group": g.name()});
    let mut ok = true;
    let is_gm1n = matches!(g.kind(), GroupKind::Gm1n { .. });

    let (lk_ok, lk) = section(lk_cmd(g))?;
    out["lk_relations"] = json!(lk_ok);
    out["lk_blocks"] = lk["blocks"].clone();
    ok &= lk_ok;

    let mut flat = true;
    for kind in [ConnectionKind::Bgu, ConnectionKind::Lk] {
        flat &= section(flatness_cmd(ctx, g, kind, ModelArg::Lk, point))?.0;
    }
    flat &= section(flatness_cmd(ctx, g, ConnectionKind::Bmr, ModelArg::Group, point))?.0;
    if !is_gm1n {
        flat &= section(flatness_cmd(ctx, g, ConnectionKind::Bgu, ModelArg::Regular, point))?.0;
    }
    out["flat"] = json!(flat);
    ok &= flat;

    if is_gm1n {
        let labels = g_m1n_labels(g).map_err(usage)?;
        out["labels"] = json!(labels.natural);
        ok &= labels.natural;
        let (c_ok, _) = section(cyclo_cmd(g))?;
        out["cyclo_compare"] = json!(c_ok);
        ok &= c_ok;
        for key in ["dim", "relations", "cellular", "semisimple", "radical"] {
            out[key] = Value::Null;
        }
    } else {
        let (a_ok, a) = section(algebra_cmd(ctx, g, point))?;
        out["dim"] = a["dimension"]["dim"].clone();
        out["relations"] = json!(a_ok);
        ok &= a_ok;
        if has_cell_datum(g) {
            let (c_ok, _) = section(cellular_report(ctx, g, point))?;
            out["cellular"] = json!(c_ok);
            ok &= c_ok;
        } else {
            out["cellular"] = Value::Null;
        }
        let s = semisimple_report(ctx, g, point)?;
        let s_ok = s["semisimple"] == json!(true) && s["wedderburn"]["matches"] != json!(false);
        out["semisimple"] = json!(s_ok);
        out["radical"] = s["radical"].clone();
        ok &= s_ok;
        out["labels"] = Value::Null;
        out["cyclo_compare"] = Value::Null;
    }
    out["passed"] = json!(ok);
    checked(out, ok)
}
