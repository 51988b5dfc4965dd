//! Batch command-line front end. Every run produces one JSON report; see
//! `README.md` for the schema.

use std::path::PathBuf;

use clap::parser::ValueSource;
use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::check::{all_passed, Check};
use crate::cyclic::{
    build_hopf_cyclic, verify_cocyclic_axioms, verify_cocyclic_map, verify_cyclic_axioms, verify_cyclic_map,
    verify_gamma_theta, verify_inverse_pair, AlgebraCyclic, CmCocyclic, Coefficients, CommutativeCocyclic,
    CyclicModule, Gamma, HochschildModule, HopfCyclic, MacLaneInverse, MacLaneTheta, PathSpace, Pi, Psi, Theta,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::cocyclic::commutative_hp_compare;
use crate::homology::homotopy::{verify_homotopy_uqsl2, Formulas};
use crate::homology::resolution::{
    base_change_characters, base_change_homology, comparison_lift, load_resolution, verify_comparison,
    verify_resolution,
};
use crate::homology::{
    cyclic_homology, cyclic_homology_cc, hochschild_homology, karoubi_compare, weight_stable, GradedDims,
};
use crate::hopf::checks::{check_modular_involution, verify_characters, verify_hopf_axioms};
use crate::hopf::coaction::{check_comodule_axioms, Coaction, Trace};
use crate::hopf::{HopfRef, ModularPair};
use crate::instances::{build_instance, builtin_coaction, Instance};

pub const SCHEMA: &str = "hopfcyc-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug, Clone)]
#[command(name = "hopfcyc", version, about = "Exact Hopf cyclic homology computations")]
pub struct RunConfig {
    /// Ground field: Q, F<p> or Qq. Instances over Q(q) only accept Qq.
    #[arg(long, global = true, env = "HOPFCYC_FIELD")]
    pub field: Option<String>,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Also write the homology dimensions as a CSV table.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    #[arg(skip)]
    pub field_from_env: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    /// group:<Z1..Z4|S3|file>, fungrp:<same>, tensor:<dim>, laurent, uqsl2, aslq2.
    #[arg(long)]
    pub instance: String,
    /// Modular pair as <character>,<sigma>.
    #[arg(long, default_value = "epsilon,1")]
    pub pair: String,
    /// Skip validating the modular pair.
    #[arg(long)]
    pub unchecked: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Bounds {
    /// Highest level or homological degree.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    /// Degree bound D on the words an identity check runs over.
    #[arg(long, short = 'd', default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree: u32,
    /// Weight cap W for graded instances.
    #[arg(long, short = 'w', default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub weight_cap: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    /// The cyclic module of the Hopf algebra with the given pair.
    Hopf,
    /// The cyclic module of the underlying algebra.
    Algebra,
    /// The path space, cyclic when the instance is cocommutative.
    PathSpace,
    /// The cocyclic module of a commutative Hopf algebra.
    Commutative,
    /// The Connes-Moscovici cocyclic module with the given pair.
    Cm,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Gamma,
    Theta,
    Pi,
    Psi,
    Maclane,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaChoice {
    Printed,
    Corrected,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Simplicial, cyclic and cocyclic identities of a module.
    VerifyAxioms {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value = "hopf")]
        module: ModuleKind,
    },
    /// Hopf algebra axioms, characters, listed pairs and rewriting confluence.
    VerifyHopf {
        #[arg(long)]
        instance: String,
        #[arg(long, short = 'd', default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        /// Random words tested for confluence.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check a built-in coaction, e.g. laurent_on_aslq2.
        #[arg(long)]
        coaction: Option<String>,
    },
    /// Hochschild homology from the normalized complex.
    Hochschild {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value = "hopf")]
        module: ModuleKind,
    },
    /// Cyclic homology from the (b, B) bicomplex.
    Cyclic {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value = "hopf")]
        module: ModuleKind,
        /// Recompute through the full cyclic bicomplex and compare.
        #[arg(long)]
        compare_cc: bool,
    },
    /// Cyclic homology against the sum of group homologies, cocommutative case.
    Karoubi {
        #[arg(long)]
        instance: String,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Load a free resolution, check d^2 = 0, and optionally base change,
    /// the contracting homotopy and the comparison with the bar resolution.
    Resolution {
        #[arg(long)]
        name: String,
        /// Highest degree loaded; defaults to what the requested steps need.
        #[arg(long)]
        cap: Option<usize>,
        /// Compute H_n(k ⊗ M) for n <= n-max.
        #[arg(long)]
        base_change: bool,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Use the characters of the data file in swapped order.
        #[arg(long)]
        swap_characters: bool,
        #[arg(long)]
        verify_homotopy: bool,
        #[arg(long, default_value_t = 2)]
        lmax: i64,
        #[arg(long, default_value_t = 2)]
        dmax: i64,
        #[arg(long, value_enum, default_value = "corrected")]
        formulas: FormulaChoice,
        /// Lift the identity to the bar resolution up to this degree.
        #[arg(long)]
        comparison: Option<usize>,
    },
    /// Maps between (co)cyclic modules with commutation checks.
    Maps {
        #[arg(long, value_enum)]
        map: MapKind,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Periodic cyclic cohomology of a commutative Hopf algebra, two ways.
    HpCommutative {
        #[arg(long)]
        instance: String,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyAxioms { .. } => "verify-axioms",
            Command::VerifyHopf { .. } => "verify-hopf",
            Command::Hochschild { .. } => "hochschild",
            Command::Cyclic { .. } => "cyclic",
            Command::Karoubi { .. } => "karoubi",
            Command::Resolution { .. } => "resolution",
            Command::Maps { .. } => "maps",
            Command::HpCommutative { .. } => "hp-commutative",
        }
    }
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    schema_version: u32,
    command: &'static str,
    config: Value,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<Check>,
    checks: Vec<Check>,
    result: Value,
}

/// A finished run: exit code, JSON report and the optional CSV table.
pub struct Outcome {
    pub code: i32,
    pub json: String,
    pub csv: Option<String>,
}

struct Partial {
    config: Value,
    checks: Vec<Check>,
    result: Value,
    table: Option<Table>,
}

/// Columns of homology dimensions indexed by degree.
struct Table {
    columns: Vec<(&'static str, Vec<usize>)>,
}

impl Table {
    fn single(name: &'static str, dims: &[usize]) -> Self {
        Table { columns: vec![(name, dims.to_vec())] }
    }

    fn render(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("n").chain(self.columns.iter().map(|(name, _)| *name));
        w.write_record(header).expect("in-memory write");
        let rows = self.columns.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
        for n in 0..rows {
            let cells = self.columns.iter().map(|(_, c)| c.get(n).map(|v| v.to_string()).unwrap_or_default());
            w.write_record(std::iter::once(n.to_string()).chain(cells)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii table")
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

impl RunConfig {
    fn field_for(&self, instance: &str) -> Result<Option<Field>> {
        let Some(s) = &self.field else { return Ok(None) };
        let f: Field = s.parse().map_err(|e: Error| Error::Config(e.to_string()))?;
        let fixed = matches!(instance, "uqsl2" | "aslq2");
        if fixed && self.field_from_env && f != Field::RatFun {
            return Ok(None);
        }
        Ok(Some(f))
    }

    fn instance(&self, name: &str) -> Result<Instance> {
        build_instance(name, self.field_for(name)?)
    }
}

fn pair_of(h: &HopfRef, args: &InstanceArgs, d: u32) -> Result<ModularPair> {
    let pair = ModularPair::parse(&**h, &args.pair)?;
    if !args.unchecked {
        pair.validate(&**h, d)?;
    }
    Ok(pair)
}

fn hopf_module(h: &HopfRef, args: &InstanceArgs, d: u32) -> Result<HopfCyclic> {
    let pair = ModularPair::parse(&**h, &args.pair)?;
    build_hopf_cyclic(h.clone(), pair, (!args.unchecked).then_some(d))
}

fn cyclic_module(h: &HopfRef, args: &InstanceArgs, kind: ModuleKind, d: u32) -> Result<Box<dyn CyclicModule>> {
    Ok(match kind {
        ModuleKind::Hopf => Box::new(hopf_module(h, args, d)?),
        ModuleKind::Algebra => Box::new(AlgebraCyclic { a: h.clone() }),
        ModuleKind::PathSpace => Box::new(path_space(h)?),
        ModuleKind::Commutative | ModuleKind::Cm => {
            return Err(Error::Config("cocyclic modules only support verify-axioms".into()))
        }
    })
}

fn path_space(h: &HopfRef) -> Result<PathSpace> {
    match PathSpace::cyclic(h.clone()) {
        Err(Error::NotCocommutative) => Ok(PathSpace::simplicial(h.clone())),
        other => other,
    }
}

fn bounds_value(b: &Bounds) -> Value {
    json!({ "n_max": b.n_max, "degree": b.degree, "weight_cap": b.weight_cap })
}

fn instance_value(cfg: &RunConfig, inst: &Instance, args: &InstanceArgs) -> Value {
    json!({
        "instance": inst.name,
        "field": inst.field().to_string(),
        "pair": args.pair,
        "unchecked": args.unchecked,
        "field_requested": cfg.field,
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(x), Value::Object(y)) = (&mut a, b) {
        x.extend(y);
    }
    a
}

fn euler_check(name: &str, g: &GradedDims) -> Check {
    let label = format!("{name}: Euler characteristic of every weight piece matches its chain ranks");
    if g.euler_holds {
        Check::pass(label, g.by_weight.len())
    } else {
        Check::fail(label, g.by_weight.len(), "weight pieces", "alternating sums differ")
    }
}

fn equality_check(name: impl Into<String>, left: &[usize], right: &[usize]) -> Check {
    if left == right {
        Check::pass(name, left.len())
    } else {
        Check::fail(name, left.len(), format!("{left:?}"), format!("{left:?} vs {right:?}"))
    }
}

fn verify_axioms(cfg: &RunConfig, args: &InstanceArgs, b: &Bounds, kind: ModuleKind) -> Result<Partial> {
    let inst = cfg.instance(&args.instance)?;
    let h = &inst.hopf;
    let (n, d) = (b.n_max as usize, b.degree);
    let (label, checks) = match kind {
        ModuleKind::Commutative => {
            let m = CommutativeCocyclic::new(h.clone())?;
            (crate::cyclic::CocyclicModule::label(&m), verify_cocyclic_axioms(&m, n, d))
        }
        ModuleKind::Cm => {
            let m = CmCocyclic { h: h.clone(), pair: pair_of(h, args, d)? };
            (crate::cyclic::CocyclicModule::label(&m), verify_cocyclic_axioms(&m, n, d))
        }
        _ => {
            let m = cyclic_module(h, args, kind, d)?;
            (m.label(), verify_cyclic_axioms(&*m, n, d))
        }
    };
    Ok(Partial {
        config: merge(instance_value(cfg, &inst, args), json!({ "module": kind, "bounds": bounds_value(b) })),
        checks,
        result: json!({ "module": label }),
        table: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn verify_hopf(
    cfg: &RunConfig,
    name: &str,
    d: u32,
    samples: usize,
    max_len: usize,
    seed: u64,
    coaction: Option<&str>,
) -> Result<Partial> {
    let inst = cfg.instance(name)?;
    let h = &inst.hopf;
    let mut checks = verify_hopf_axioms(&**h, d);
    checks.extend(verify_characters(&**h, d));
    if let Some(p) = &inst.presented {
        checks.push(p.verify_confluence(samples, max_len, seed));
    }
    if let Some(c) = coaction {
        let c: Coaction = builtin_coaction(c)?;
        checks.extend(check_comodule_axioms(&c, d));
    }
    let mut pairs = Vec::new();
    for (label, character, sigma) in inst.pairs() {
        let pair = ModularPair::parse(&**h, &format!("{character},{sigma}"))?;
        let valid = pair.validate(&**h, d).is_ok();
        let involution = check_modular_involution(&**h, &pair, d);
        pairs.push(json!({
            "pair": label,
            "valid": valid,
            "involutive": involution.passed,
            "witness": involution.witness,
        }));
    }
    Ok(Partial {
        config: json!({
            "instance": inst.name,
            "field": inst.field().to_string(),
            "bounds": { "degree": d },
            "confluence": { "samples": samples, "max_len": max_len, "seed": seed },
            "coaction": coaction,
        }),
        checks,
        result: json!({ "flags": h.declared_flags(), "pairs": pairs }),
        table: None,
    })
}

fn hochschild(cfg: &RunConfig, args: &InstanceArgs, b: &Bounds, kind: ModuleKind) -> Result<Partial> {
    let inst = cfg.instance(&args.instance)?;
    let m = cyclic_module(&inst.hopf, args, kind, b.degree)?;
    let hh = hochschild_homology(&*m, b.n_max as usize, b.weight_cap)?;
    Ok(Partial {
        config: merge(instance_value(cfg, &inst, args), json!({ "module": kind, "bounds": bounds_value(b) })),
        checks: vec![euler_check("HH", &hh)],
        result: json!({ "module": m.label(), "hh": hh }),
        table: Some(Table::single("hh", &hh.dims)),
    })
}

fn cyclic(cfg: &RunConfig, args: &InstanceArgs, b: &Bounds, kind: ModuleKind, compare_cc: bool) -> Result<Partial> {
    let inst = cfg.instance(&args.instance)?;
    let m = cyclic_module(&inst.hopf, args, kind, b.degree)?;
    let n = b.n_max as usize;
    let r = cyclic_homology(&*m, n, b.weight_cap)?;
    let mut checks = vec![euler_check("HC", &r.hc)];
    if r.hc.weight_cap.is_some() {
        let next = cyclic_homology(&*m, n, b.weight_cap + 1)?;
        let label = format!("HC through n = {n} is unchanged from weight cap {} to {}", b.weight_cap, b.weight_cap + 1);
        checks.push(if weight_stable(&r.hc, &next.hc) {
            Check::pass(label, n + 1)
        } else {
            Check::fail(label, n + 1, format!("{:?}", next.hc.dims), format!("{:?} vs {:?}", r.hc.dims, next.hc.dims))
        });
    }
    if compare_cc {
        let cc = cyclic_homology_cc(&*m, n, b.weight_cap)?;
        checks.push(equality_check("(b, B) and CC bicomplexes agree", &r.hc.dims, &cc.dims));
    }
    Ok(Partial {
        config: merge(
            instance_value(cfg, &inst, args),
            json!({ "module": kind, "bounds": bounds_value(b), "compare_cc": compare_cc }),
        ),
        checks,
        table: Some(Table::single("hc", &r.hc.dims)),
        result: json!({ "module": m.label(), "hc": r.hc, "periodic": r.periodic }),
    })
}

fn karoubi(cfg: &RunConfig, name: &str, b: &Bounds) -> Result<Partial> {
    let inst = cfg.instance(name)?;
    let r = karoubi_compare(inst.hopf.clone(), b.n_max as usize, b.weight_cap)?;
    let checks = vec![equality_check("HC equals the sum of H_(n-2i)(H, k)", &r.cyclic, &r.predicted)];
    Ok(Partial {
        config: json!({ "instance": inst.name, "field": inst.field().to_string(), "bounds": bounds_value(b) }),
        checks,
        table: Some(Table {
            columns: vec![
                ("hc", r.cyclic.clone()),
                ("hochschild", r.hochschild.clone()),
                ("predicted", r.predicted.clone()),
            ],
        }),
        result: to_value(&r),
    })
}

#[allow(clippy::too_many_arguments)]
fn resolution(
    name: &str,
    cap: Option<usize>,
    base_change: bool,
    n_max: usize,
    swap: bool,
    homotopy: Option<(i64, i64, FormulaChoice)>,
    comparison: Option<usize>,
) -> Result<Partial> {
    let mut need = if name == "aslq2" { 8 } else { 4 };
    if base_change {
        need = need.max(n_max + 1);
    }
    if let Some(c) = comparison {
        need = need.max(c);
    }
    let r = load_resolution(name, cap.unwrap_or(need))?;
    let report = verify_resolution(&r);
    let mut checks = report.checks.clone();
    let mut result = json!({ "resolution": report });
    let mut table = None;
    if base_change {
        let (left, right) = base_change_characters(&r, swap)?;
        let (bc, c) = base_change_homology(&r, &left, &right, n_max)?;
        let label = "Euler characteristic of the base-changed complex matches its ranks";
        checks.push(if c.euler_holds() { Check::pass(label, 1) } else { Check::fail(label, 1, "complex", "differ") });
        table = Some(Table::single("h", &bc.dims));
        result["base_change"] = to_value(&bc);
    }
    if let Some((l, d, f)) = homotopy {
        let formulas = match f {
            FormulaChoice::Printed => Formulas::Printed,
            FormulaChoice::Corrected => Formulas::Corrected,
        };
        let hr = verify_homotopy_uqsl2(&r, formulas, l, d)?;
        checks.extend(hr.checks.iter().cloned());
        result["homotopy"] = json!({ "formulas": hr.formulas, "l_max": hr.l_max, "d_max": hr.d_max });
    }
    if let Some(c) = comparison {
        let lift = comparison_lift(&r, c)?;
        checks.extend(verify_comparison(&r, &lift));
        result["comparison"] = json!({ "n_max": c });
    }
    Ok(Partial {
        config: json!({
            "name": name,
            "cap": r.cap(),
            "base_change": base_change.then_some(json!({ "n_max": n_max, "swapped": swap })),
            "homotopy": homotopy.map(|(l, d, _)| json!({ "l_max": l, "d_max": d })),
            "comparison": comparison,
        }),
        checks,
        result,
        table,
    })
}

fn maps(cfg: &RunConfig, kind: MapKind, args: &InstanceArgs, b: &Bounds) -> Result<Partial> {
    let inst = cfg.instance(&args.instance)?;
    let h = &inst.hopf;
    let (n, d) = (b.n_max as usize, b.degree);
    let mut result = json!({});
    let checks = match kind {
        MapKind::Gamma => {
            let pair = pair_of(h, args, d)?;
            let sigma = pair
                .sigma_word()
                .cloned()
                .ok_or_else(|| Error::Config("gamma needs sigma to be a basis word".into()))?;
            let trace = Trace::indicator(&**h, sigma);
            let gamma = Gamma::new(Coaction::regular(h.clone()), trace, &pair, d)?;
            let target = build_hopf_cyclic(h.clone(), pair.clone(), None)?;
            let source = AlgebraCyclic { a: h.clone() };
            let mut c = verify_cyclic_map(&source, &target, &gamma, n, d);
            if pair.delta.name == "epsilon" {
                if let Ok(theta) = Theta::new(h.clone(), pair.sigma.clone(), d) {
                    c.extend(verify_gamma_theta(&target, &gamma, &theta, n, d));
                    result["trace_of_sigma"] = json!(gamma.trace.eval(&pair.sigma).to_report_string());
                }
            }
            c
        }
        MapKind::Theta => {
            let pair = pair_of(h, args, d)?;
            if pair.delta.name != "epsilon" {
                return Err(Error::Config("theta starts from a pair (epsilon, sigma)".into()));
            }
            let theta = Theta::new(h.clone(), pair.sigma.clone(), d)?;
            let source = build_hopf_cyclic(h.clone(), pair, None)?;
            verify_cyclic_map(&source, &AlgebraCyclic { a: h.clone() }, &theta, n, d)
        }
        MapKind::Pi => {
            let e = path_space(h)?;
            let target = build_hopf_cyclic(h.clone(), ModularPair::trivial(&**h), None)?;
            verify_cyclic_map(&e, &target, &Pi { h: h.clone() }, n, d)
        }
        MapKind::Psi => {
            let e = CommutativeCocyclic::new(h.clone())?;
            let cm = CmCocyclic { h: h.clone(), pair: ModularPair::trivial(&**h) };
            verify_cocyclic_map(&cm, &e, &Psi { field: h.field() }, n, d)
        }
        MapKind::Maclane => {
            let src = HochschildModule::new(h.clone(), Coefficients::Regular, false);
            let tgt = HochschildModule::new(h.clone(), Coefficients::Regular, true);
            let th = MacLaneTheta { source: &src };
            let inv = MacLaneInverse { source: &src };
            let mut c = verify_inverse_pair(&src, &tgt, &th, &inv, n, d);
            c.extend(verify_cyclic_map(&src, &tgt, &th, n, d));
            c.extend(verify_cyclic_map(&tgt, &src, &inv, n, d));
            c
        }
    };
    Ok(Partial {
        config: merge(instance_value(cfg, &inst, args), json!({ "map": kind, "bounds": bounds_value(b) })),
        checks,
        result,
        table: None,
    })
}

fn hp_commutative(cfg: &RunConfig, name: &str, n_max: u32) -> Result<Partial> {
    let inst = cfg.instance(name)?;
    let r = commutative_hp_compare(inst.hopf.clone(), n_max as usize)?;
    let label = "HP from the cocyclic module equals HP from the cobar complex";
    let checks = vec![if r.equal {
        Check::pass(label, 2)
    } else {
        Check::fail(label, 2, format!("{:?}", r.hp_cyclic), format!("{:?} vs {:?}", r.hp_cyclic, r.hp_coalgebra))
    }];
    Ok(Partial {
        config: json!({ "instance": inst.name, "field": inst.field().to_string(), "bounds": { "n_max": n_max } }),
        checks,
        table: Some(Table { columns: vec![("hc", r.cyclic.clone()), ("coalgebra", r.coalgebra.clone())] }),
        result: to_value(&r),
    })
}

fn dispatch(cfg: &RunConfig) -> Result<Partial> {
    match &cfg.command {
        Command::VerifyAxioms { instance, bounds, module } => verify_axioms(cfg, instance, bounds, *module),
        Command::VerifyHopf { instance, degree, samples, max_len, seed, coaction } => {
            verify_hopf(cfg, instance, *degree, *samples, *max_len, *seed, coaction.as_deref())
        }
        Command::Hochschild { instance, bounds, module } => hochschild(cfg, instance, bounds, *module),
        Command::Cyclic { instance, bounds, module, compare_cc } => cyclic(cfg, instance, bounds, *module, *compare_cc),
        Command::Karoubi { instance, bounds } => karoubi(cfg, instance, bounds),
        Command::Resolution {
            name,
            cap,
            base_change,
            n_max,
            swap_characters,
            verify_homotopy,
            lmax,
            dmax,
            formulas,
            comparison,
        } => resolution(
            name,
            *cap,
            *base_change,
            *n_max,
            *swap_characters,
            verify_homotopy.then_some((*lmax, *dmax, *formulas)),
            *comparison,
        ),
        Command::Maps { map, instance, bounds } => maps(cfg, *map, instance, bounds),
        Command::HpCommutative { instance, n_max } => hp_commutative(cfg, instance, *n_max),
    }
}

/// Runs one command. Exit code 0 when every check passes, 1 when one fails,
/// 2 when the configuration is rejected.
pub fn run(cfg: &RunConfig) -> Outcome {
    let command = cfg.command.name();
    let (report, csv) = match dispatch(cfg) {
        Ok(p) => {
            let passed = all_passed(&p.checks);
            let report = Report {
                schema: SCHEMA,
                schema_version: SCHEMA_VERSION,
                command,
                config: p.config,
                passed,
                error: None,
                first_failure: p.checks.iter().find(|c| !c.passed).cloned(),
                checks: p.checks,
                result: p.result,
            };
            (report, p.table.map(|t| t.render()))
        }
        Err(e) => {
            let report = Report {
                schema: SCHEMA,
                schema_version: SCHEMA_VERSION,
                command,
                config: Value::Null,
                passed: false,
                error: Some(e.to_string()),
                first_failure: None,
                checks: Vec::new(),
                result: Value::Null,
            };
            (report, None)
        }
    };
    let code = match (&report.error, report.passed) {
        (Some(_), _) => 2,
        (None, true) => 0,
        (None, false) => 1,
    };
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    Outcome { code, json, csv }
}

/// Parses command-line arguments; the first item is the program name.
pub fn parse_args<I, T>(args: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = RunConfig::command().try_get_matches_from(args)?;
    let mut cfg = RunConfig::from_arg_matches(&matches)?;
    cfg.field_from_env = matches.value_source("field") == Some(ValueSource::EnvVariable);
    Ok(cfg)
}

/// Parses arguments, runs, writes the outputs and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match parse_args(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = run(&cfg);
    if let Err(e) = write_outputs(&cfg, &out) {
        eprintln!("hopfcyc: {e}");
        return 2;
    }
    out.code
}

fn write_outputs(cfg: &RunConfig, out: &Outcome) -> std::io::Result<()> {
    match &cfg.output {
        Some(p) => std::fs::write(p, &out.json)?,
        None => print!("{}", out.json),
    }
    if let (Some(p), Some(csv)) = (&cfg.csv, &out.csv) {
        std::fs::write(p, csv)?;
    }
    Ok(())
}
