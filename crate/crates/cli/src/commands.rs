use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pcross_core::bimod::{is_isomorphic, tensor, FinBimodule};
use pcross_core::cohomology::{cohomology, Cochain, CohomologyResult, Method};
use pcross_core::crossed::{
    build_crossed_product, decompositions, obstruction, twist_by_cocycle, unit_family_maps, verify_factor_set, zeta,
    GradedRing, ScalarFactorSet,
};
use pcross_core::paction::{TwistedUnitalPartialAction, UnitalPartialAction};
use pcross_core::prep::{induced_center_action, theta_from_twisted};
use pcross_core::seq::sequence_report;
use pcross_core::{Caps, Error};
use serde_json::{json, Value};

use crate::instance::{parse_cochain_raw, read_json, resolve, Instance};

#[derive(Parser, Debug)]
#[command(
    name = "pcross",
    version,
    about = "Partial actions, partial cohomology and partial crossed products on finite rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Worker threads for parallel scans (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the JSON result here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub cap_group_order: Option<usize>,
    #[arg(long, global = true)]
    pub cap_ring_size: Option<usize>,
    #[arg(long, global = true)]
    pub cap_enumeration: Option<u64>,
    #[arg(long, global = true)]
    pub cap_tuples: Option<usize>,
    #[arg(long, global = true)]
    pub cap_degree: Option<usize>,
    #[arg(long, global = true)]
    pub cap_monoid_size: Option<usize>,
    #[arg(long, global = true)]
    pub cap_bimodule_size: Option<usize>,
    #[arg(long, global = true)]
    pub cap_graded_ring: Option<usize>,
    #[arg(long, global = true)]
    pub cap_families: Option<u64>,
}

impl Global {
    fn apply(&self, caps: &mut Caps) {
        macro_rules! set {
            ($($f:ident => $c:ident),*) => { $(if let Some(v) = self.$f { caps.$c = v; })* };
        }
        set!(cap_group_order => group_order, cap_ring_size => ring_size, cap_enumeration => enumeration,
             cap_tuples => tuples, cap_degree => degree, cap_monoid_size => monoid_size,
             cap_bimodule_size => bimodule_size, cap_graded_ring => graded_ring, cap_families => families);
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum MethodArg {
    Snf,
    Enum,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Snf => Method::Snf,
            MethodArg::Enum => Method::Enum,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Check {
    Assoc,
    Pentagon,
    Obstruction,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the partial-action and twist axioms
    Validate {
        #[arg(long)]
        instance: String,
    },
    /// H^n of the instance's partial action
    Cohomology {
        #[arg(long)]
        instance: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Build the crossed product and check it
    Crossed {
        #[arg(long)]
        instance: String,
        /// 2-cochain file, or the name of a cocycle in the instance
        #[arg(long)]
        twist: Option<String>,
        #[arg(long, value_enum, default_value_t = Check::Assoc)]
        check: Check,
        /// Include the full multiplication tables of the flattened ring
        #[arg(long)]
        tables: bool,
    },
    /// Obstruction 3-cocycle of a scalar factor set
    Obstruction {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// ζ on crossed products built from H^2 representatives, or from one twist
    Zeta {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// The full sequence report
    Sequence {
        #[arg(long)]
        instance: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Re-run the slow oracle paths and compare with the fast ones
    Oracle {
        #[arg(long)]
        instance: String,
    },
}

/// A command's JSON result and whether every verdict in it passed.
pub struct Outcome {
    pub json: Value,
    pub pass: bool,
}

/// Exit code for a failed run: 2 for input errors, 3 for caps, 1 otherwise.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if let Some(ie) = cause.downcast_ref::<crate::instance::InstanceError>() {
            return match ie {
                crate::instance::InstanceError::Core { source: Error::SizeCapExceeded { .. }, .. } => 3,
                _ => 2,
            };
        }
        if let Some(ce) = cause.downcast_ref::<Error>() {
            return match ce {
                Error::SizeCapExceeded { .. } => 3,
                Error::InvalidInput(_) | Error::InvalidCochain { .. } => 2,
                _ => 1,
            };
        }
    }
    1
}

pub fn error_json(e: &anyhow::Error) -> Value {
    let mut kind = "Error".to_string();
    let mut pointer = Value::Null;
    for cause in e.chain() {
        if let Some(ie) = cause.downcast_ref::<crate::instance::InstanceError>() {
            kind = ie.kind().to_string();
            pointer = ie.pointer().map(|p| json!(p)).unwrap_or(Value::Null);
            break;
        }
        if let Some(ce) = cause.downcast_ref::<Error>() {
            kind = format!("{ce:?}").split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
            break;
        }
    }
    json!({"error": kind, "message": format!("{e:#}"), "pointer": pointer, "exit_code": exit_code(e)})
}

fn load(arg: &str, g: &Global, validate: bool) -> anyhow::Result<Instance> {
    let mut inst = resolve(arg, validate)?;
    g.apply(&mut inst.caps);
    Ok(inst)
}

/// Raw values of `--twist`: a cocycle named in the instance or a cochain file.
/// Without the flag, the instance's own twist.
fn twist_values(inst: &Instance, arg: &Option<String>) -> anyhow::Result<Vec<usize>> {
    let (degree, values) = match arg {
        None => (2, inst.tpa.omegas().to_vec()),
        Some(a) => match inst.cocycles.get(a) {
            Some(c) => c.clone(),
            None => parse_cochain_raw(&read_json(std::path::Path::new(a))?, inst.action())?,
        },
    };
    if degree != 2 {
        bail!(Error::InvalidInput(format!("a twist must be a 2-cochain, got degree {degree}")));
    }
    Ok(values)
}

fn twist_arg(inst: &Instance, arg: &Option<String>) -> anyhow::Result<Option<Cochain>> {
    match arg {
        None => Ok(None),
        Some(_) => Ok(Some(Cochain::new(inst.action(), 2, twist_values(inst, arg)?)?)),
    }
}

fn cohomology_json(r: &CohomologyResult, pa: &UnitalPartialAction, caps: &Caps) -> Value {
    let reps: Vec<Value> =
        r.representatives(pa, caps).into_iter().map(|(class, c)| json!({"class": class, "values": c.values})).collect();
    json!({
        "degree": r.degree,
        "C": r.c.to_string(),
        "Z": r.z.to_string(),
        "B": r.b.to_string(),
        "H": r.h.to_string(),
        "orders": {
            "C": r.c.order().to_string(),
            "Z": r.z.order().to_string(),
            "B": r.b.order().to_string(),
            "H": r.h.order().to_string(),
        },
        "invariant_factors": r.h.factors(),
        "enumeration": r.enumeration,
        "representatives": reps,
    })
}

/// The untwisted crossed product and its center data.
fn base_ring(pa: &UnitalPartialAction) -> anyhow::Result<GradedRing> {
    Ok(build_crossed_product(&TwistedUnitalPartialAction::trivial_twist(pa.clone()))?)
}

pub fn run(cmd: &Command, g: &Global) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Validate { instance } => {
            let inst = load(instance, g, false)?;
            let report = inst.validate();
            let pass = report.is_valid();
            let mut out = json!({"instance": inst.name, "valid": pass, "violations": report.violations});
            if pass {
                let (rep, _) = theta_from_twisted(&inst.tpa, &inst.caps)?;
                let srs = pcross_core::prep::validate_srs_rep(&rep);
                out["srs_violations"] = json!(srs.violations);
                return Ok(Outcome { pass: srs.is_valid(), json: out });
            }
            Ok(Outcome { json: out, pass })
        }
        Command::Cohomology { instance, degree, method } => {
            let inst = load(instance, g, true)?;
            let r = cohomology(inst.action(), *degree, (*method).into(), &inst.caps)?;
            let mut out = cohomology_json(&r, inst.action(), &inst.caps);
            out["instance"] = json!(inst.name);
            out["method"] = json!(Method::from(*method));
            Ok(Outcome { json: out, pass: true })
        }
        Command::Crossed { instance, twist, check, tables } => {
            let inst = load(instance, g, true)?;
            let pa = inst.action();
            let values = twist_values(&inst, twist)?;
            let mut out = json!({"instance": inst.name, "twist": values});
            let sigma = || Cochain::new(pa, 2, values.clone());
            let (pass, ring) = match check {
                Check::Assoc => {
                    let tpa = TwistedUnitalPartialAction::new(pa.clone(), values.clone())?;
                    out["check"] = json!("assoc");
                    out["twist_violations"] = json!(pcross_core::paction::validate_twisted(&tpa).violations);
                    match build_crossed_product(&tpa) {
                        Ok(d) => (true, Some(d)),
                        Err(Error::AssociativityFailure(w)) => {
                            out["witness"] = json!(w);
                            (false, None)
                        }
                        Err(e @ (Error::NotUnital(_) | Error::InvalidAction(_))) => {
                            out["failure"] = json!(e.to_string());
                            (false, None)
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                Check::Pentagon => {
                    out["check"] = json!("pentagon");
                    let fs = ScalarFactorSet::new(base_ring(pa)?, sigma()?)?;
                    match verify_factor_set(&fs) {
                        Ok(()) => (true, Some(fs.ring_unchecked()?)),
                        Err(w) => {
                            out["witness"] = json!(w);
                            (false, None)
                        }
                    }
                }
                Check::Obstruction => {
                    out["check"] = json!("obstruction");
                    let fs = ScalarFactorSet::new(base_ring(pa)?, sigma()?)?;
                    let beta = obstruction(&fs)?;
                    out["obstruction"] = json!(beta.values);
                    let unit = beta.is_unit(pa);
                    (unit, if unit { Some(fs.ring_unchecked()?) } else { None })
                }
            };
            if let Some(d) = &ring {
                out["size"] = json!(d.size().to_string());
                out["component_sizes"] = json!(d.components().iter().map(|c| c.len()).collect::<Vec<_>>());
                if *tables {
                    out["tables"] = serde_json::to_value(d.flatten(&inst.caps)?)?;
                }
            }
            out["pass"] = json!(pass);
            Ok(Outcome { json: out, pass })
        }
        Command::Obstruction { instance, twist } => {
            let inst = load(instance, g, true)?;
            let pa = inst.action();
            let sigma = match twist_arg(&inst, twist)? {
                Some(s) => s,
                None => inst.twist_cochain()?,
            };
            let fs = ScalarFactorSet::new(base_ring(pa)?, sigma.clone())?;
            let beta = obstruction(&fs)?;
            let h3 = cohomology(pa, 3, Method::Snf, &inst.caps)?;
            let h2 = cohomology(pa, 2, Method::Snf, &inst.caps)?;
            let in_z3 = h3.is_cocycle(&beta);
            let sigma_cocycle = h2.is_cocycle(&sigma);
            let unit = beta.is_unit(pa);
            let pass = in_z3 && unit == sigma_cocycle;
            Ok(Outcome {
                json: json!({
                    "instance": inst.name,
                    "twist": sigma.values,
                    "obstruction": beta.values,
                    "in_z3": in_z3,
                    "h3_class": h3.class_of(&beta)?,
                    "unit": unit,
                    "twist_is_cocycle": sigma_cocycle,
                    "pass": pass,
                }),
                pass,
            })
        }
        Command::Zeta { instance, twist } => {
            let inst = load(instance, g, true)?;
            let pa = inst.action();
            let d = base_ring(pa)?;
            let dec = decompositions(&d, 0)?;
            let center = d.center_action_with(&dec)?;
            let h2 = cohomology(&center, 2, Method::Snf, &inst.caps)?;
            let inputs: Vec<Cochain> = match twist_arg(&inst, twist)? {
                Some(s) => vec![s],
                None => h2.representatives(&center, &inst.caps).into_iter().map(|(_, s)| s).collect(),
            };
            let id = unit_family_maps(&d, d.idems());
            let mut classes = vec![];
            let mut pass = true;
            for s in inputs {
                let a = twist_by_cocycle(&d, &s)?;
                let tau = zeta(&d, &center, &dec, &a, &id)?;
                let (cin, cout) = (h2.class_of(&s)?, h2.class_of(&tau)?);
                pass &= cin == cout;
                classes.push(json!({"twist": s.values, "class": cin, "zeta": tau.values, "zeta_class": cout}));
            }
            Ok(Outcome {
                json: json!({"instance": inst.name, "H2": h2.h.to_string(), "classes": classes, "pass": pass}),
                pass,
            })
        }
        Command::Sequence { instance, method } => {
            let inst = load(instance, g, true)?;
            let (rep, _) = theta_from_twisted(&inst.tpa, &inst.caps)?;
            let r = sequence_report(&inst.name, &rep, (*method).into(), &inst.caps)?;
            Ok(Outcome { pass: r.all_pass, json: serde_json::to_value(&r)? })
        }
        Command::Oracle { instance } => {
            let inst = load(instance, g, true)?;
            oracle(&inst)
        }
    }
}

fn oracle(inst: &Instance) -> anyhow::Result<Outcome> {
    let pa = inst.action();
    let caps = &inst.caps;
    let mut checks = vec![];
    let mut push =
        |name: String, pass: bool, detail: Value| checks.push(json!({"name": name, "pass": pass, "detail": detail}));
    for n in 0..=caps.degree.min(3) {
        let r = cohomology(pa, n, Method::Snf, caps)?;
        let e = pcross_core::cohomology::enumerate_cohomology(pa, n, caps)?;
        let agree = r.c.order_u64() == Some(e.cochains)
            && r.z.order_u64() == Some(e.cocycles)
            && r.b.order_u64() == Some(e.coboundaries);
        push(
            format!("cohomology degree {n}: snf vs enumeration"),
            agree,
            json!({"snf_H": r.h.to_string(), "enumeration": e}),
        );
    }
    let k = pa.ring();
    let r_mod = FinBimodule::regular(k)?;
    for e in k.idempotents() {
        let re = FinBimodule::ideal(k, e)?;
        let t = tensor(&re, &r_mod, caps)?;
        let ok = is_isomorphic(&t.module, &re, caps)?.is_some();
        push(format!("Re (x) R ~ Re for e = {}", k.show(e)), ok, json!({"tensor_size": t.module.size()}));
    }
    let (rep, _) = theta_from_twisted(&inst.tpa, caps)?;
    for variant in 0..2 {
        let c = induced_center_action(&rep, variant)?;
        push(format!("induced center action, decomposition {variant}"), &c == pa, Value::Null);
    }
    let pass = checks.iter().all(|c| c["pass"] == json!(true));
    Ok(Outcome { json: json!({"instance": inst.name, "checks": checks, "all_pass": pass}), pass })
}

/// Keys sorted, two-space indent, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

/// Runs one parsed invocation end to end, returning the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    if let Some(j) = cli.global.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match run(&cli.command, &cli.global).and_then(|o| {
        let text = render(&o.json);
        match &cli.global.out {
            Some(p) => std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?,
            None => {
                use std::io::Write;
                let mut out = std::io::stdout().lock();
                match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
                    _ => {}
                }
            }
        }
        Ok(o.pass)
    }) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("{}", serde_json::to_string(&error_json(&e)).expect("JSON"));
            exit_code(&e)
        }
    }
}
