use std::fmt::Display;
use std::fs;
use std::path::Path;

use hopfforge::deform::{
    build_presented, check_cocycle_identity, classify_menu, compare_on_generators, convolution_exp, coradical_check, deform, extend_to_a,
    infinitesimal_part, is_epsilon_cocycle, is_h_invariant, DeformError, DeformedAlgebra, Family, LiftingData, Presentation,
};
use hopfforge::dihedral::{group_algebra, FunctionAlgebra};
use hopfforge::hopf::{verify_hopf, Bilinear, HopfData};
use hopfforge::json::{self, JsonError};
use hopfforge::nichols::{bosonize, build_nichols, verify_nichols, NicholsData};
use hopfforge::report::Report;
use hopfforge::yd::{enumerate_i, enumerate_j, enumerate_k, enumerate_l};
use hopfforge::{CycScalar, GroupDatum};
use serde_json::{json, Value};

use crate::{parse, CliError, Command, IndexSet, KindArg, LiftingArgs, ObjectKind, RunConfig, Suite};

fn input(e: impl Display) -> CliError {
    CliError::Input(e.to_string())
}

fn from_deform(e: DeformError) -> CliError {
    match e {
        DeformError::InvalidLiftingData(_) | DeformError::Yd(_) | DeformError::Nichols(_) => input(e),
        _ => CliError::Verification(e.to_string()),
    }
}

fn group(m: u32, allow_small_m: bool) -> Result<GroupDatum, CliError> {
    if allow_small_m { GroupDatum::new_unchecked(m) } else { GroupDatum::new(m) }.map_err(input)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn canonical(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("values serialize");
    out.push('\n');
    out
}

/// Prints the reports and fails if any check failed.
fn finish(reports: &[Report]) -> Result<(), CliError> {
    for r in reports {
        print!("{r}");
    }
    let failed: Vec<String> = reports.iter().flat_map(|r| r.failures()).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if failed.is_empty() {
        println!("all checks passed");
        Ok(())
    } else {
        Err(CliError::Verification(failed.join("; ")))
    }
}

pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let small = config.allow_small_m;
    match &config.command {
        Command::Enumerate { m, set, max_rank, out } => enumerate(&group(*m, small)?, *set, *max_rank, out.as_deref()),
        Command::Construct { m, object, lifting, out } => construct(&group(*m, small)?, *object, lifting, out.as_deref()),
        Command::Deform { m, lifting, out, lifting_out } => run_deform(&group(*m, small)?, lifting, out.as_deref(), lifting_out.as_deref()),
        Command::Verify { file, suite } => verify(&read(file)?, *suite),
        Command::Compare { presented, deformed } => compare(&read(presented)?, &read(deformed)?),
        Command::ClassifyMenu { m, max_rank, out } => menu(&group(*m, small)?, *max_rank, out.as_deref()),
        Command::Export { file, out } => export(&read(file)?, out.as_deref()),
    }
}

fn show_pairs(p: &[(u32, u32)]) -> String {
    p.iter().map(|(i, k)| format!("({i},{k})")).collect::<Vec<_>>().join(",")
}

fn show_ells(l: &[u32]) -> String {
    l.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn enumerate(g: &GroupDatum, set: IndexSet, max_rank: usize, out: Option<&Path>) -> Result<(), CliError> {
    let (header, rows): (&str, Vec<(String, Value)>) = match set {
        IndexSet::J => ("(i,k)", enumerate_j(g).into_iter().map(|p| (show_pairs(&[p]), json!(p))).collect()),
        IndexSet::I => ("I", enumerate_i(g, max_rank).iter().map(|d| (show_pairs(d.pairs()), json!(d.pairs()))).collect()),
        IndexSet::L => ("L", enumerate_l(g, max_rank).iter().map(|d| (show_ells(d.ells()), json!(d.ells()))).collect()),
        IndexSet::K => {
            let r = max_rank.saturating_sub(1);
            let rows = enumerate_k(g, r, r)
                .into_iter()
                .filter(|k| k.pairs.len() + k.ells.len() <= max_rank)
                .map(|k| {
                    let (p, l) = (k.pairs.pairs(), k.ells.ells());
                    (format!("I={}  L={}", show_pairs(p), show_ells(l)), json!({ "I": p, "L": l }))
                })
                .collect();
            ("I, L", rows)
        }
    };
    println!("{:>4}  {header}", "#");
    for (n, (text, _)) in rows.iter().enumerate() {
        println!("{:>4}  {text}", n + 1);
    }
    println!("{} rows", rows.len());
    if let Some(path) = out {
        let set_name = format!("{set:?}");
        let doc = json!({ "schema": "indexsets/v1", "m": g.m(), "set": set_name, "rows": rows.into_iter().map(|(_, v)| v).collect::<Vec<_>>() });
        write(path, &canonical(&doc))?;
    }
    Ok(())
}

fn lifting_data(g: &GroupDatum, args: &LiftingArgs) -> Result<LiftingData, CliError> {
    if let Some(path) = &args.lifting {
        let data = json::lifting_from_json(&read(path)?).map_err(input)?;
        if data.group.m() != g.m() {
            return Err(CliError::Input(format!("lifting data are for m = {}, not {}", data.group.m(), g.m())));
        }
        return Ok(data);
    }
    let pairs = args.pairs.as_deref().map(parse::pairs).transpose()?.unwrap_or_default();
    let ells = args.ells.as_deref().map(parse::ells).transpose()?.unwrap_or_default();
    let family = match (args.kind, pairs.is_empty(), ells.is_empty()) {
        (Some(KindArg::A), ..) => Family::A,
        (Some(KindArg::B), ..) => Family::B,
        (Some(KindArg::C), ..) => Family::C,
        (None, false, true) => Family::A,
        (None, true, false) => Family::B,
        (None, false, false) => Family::C,
        (None, true, true) => return Err(CliError::Input("give --I, --L or --lifting".into())),
    };
    let mut data = match args.seed {
        Some(seed) => LiftingData::random(family, *g, pairs, ells, seed),
        None => LiftingData::zero(family, *g, pairs, ells),
    };
    data.zeta.extend(parse::zeta(g, &args.zeta)?);
    data.mu.extend(parse::positions(g, &args.mu, "μ")?);
    data.nu.extend(parse::positions(g, &args.nu, "ν")?);
    data.tau.extend(parse::positions(g, &args.tau, "τ")?);
    data.validate().map_err(from_deform)?;
    Ok(data)
}

fn nichols_of(data: &LiftingData) -> Result<NicholsData, CliError> {
    build_nichols(&data.module().map_err(from_deform)?).map_err(input)
}

fn construct(g: &GroupDatum, object: ObjectKind, args: &LiftingArgs, out: Option<&Path>) -> Result<(), CliError> {
    let (summary, text) = match object {
        ObjectKind::FunctionAlgebra => hopf_summary("k^D_m", &FunctionAlgebra::new(*g).hopf),
        ObjectKind::GroupAlgebra => hopf_summary("kD_m", &group_algebra(*g)),
        ObjectKind::Module => {
            let module = lifting_data(g, args)?.module().map_err(from_deform)?;
            (format!("Yetter-Drinfeld module of dim {}", module.dim()), json::yd_to_json(&module))
        }
        ObjectKind::Nichols => {
            let b = nichols_of(&lifting_data(g, args)?)?;
            (format!("Nichols algebra of dim {}", b.dim()), json::nichols_to_json(&b))
        }
        ObjectKind::Bosonization => hopf_summary("bosonization", &bosonize(&nichols_of(&lifting_data(g, args)?)?).hopf),
        ObjectKind::Presented => {
            let data = lifting_data(g, args)?;
            let p = build_presented(&Presentation::from_lifting(&data).map_err(from_deform)?).map_err(from_deform)?;
            hopf_summary("presented algebra", &p.hopf)
        }
        ObjectKind::Lifting => {
            let data = lifting_data(g, args)?;
            (format!("lifting data of family {:?}", data.family), json::lifting_to_json(&data))
        }
    };
    println!("{summary}");
    out.map_or(Ok(()), |path| write(path, &text))
}

fn hopf_summary(name: &str, a: &HopfData) -> (String, String) {
    (format!("{name} of dim {}", a.dim()), json::hopf_to_json(a))
}

fn deformation(data: &LiftingData) -> Result<DeformedAlgebra, CliError> {
    let boson = bosonize(&nichols_of(data)?);
    deform(&boson, &data.cocycle()).map_err(from_deform)
}

fn run_deform(g: &GroupDatum, args: &LiftingArgs, out: Option<&Path>, lifting_out: Option<&Path>) -> Result<(), CliError> {
    let data = lifting_data(g, args)?;
    let d = deformation(&data)?;
    println!(
        "family {:?}  I={}  L={}  dim {}  ({} nonzero values of σ)",
        data.family,
        show_pairs(&data.pairs),
        show_ells(&data.ells),
        d.hopf.dim(),
        d.sigma.len()
    );
    println!("cocycle checks passed");
    if let Some(path) = lifting_out {
        write(path, &json::lifting_to_json(&data))?;
    }
    out.map_or(Ok(()), |path| write(path, &json::hopf_to_json(&d.hopf)))
}

fn cocycle_report(data: &LiftingData, b: &NicholsData) -> Report {
    let mut report = Report::new("cocycle");
    let eta = data.cocycle();
    let closed = is_epsilon_cocycle(b, &eta);
    report.record("ε-cocycle", if closed { Ok(format!("{} values", eta.len())) } else { Err("η is not an ε-cocycle on B".into()) });
    let invariant = is_h_invariant(b, &eta);
    report.record(
        "invariance",
        invariant.as_ref().map(|()| String::new()).map_err(|w| format!("φ index {}, pair ({}, {}): {} vs {}", w.phi, w.x, w.y, w.lhs, w.rhs)),
    );
    if !closed || invariant.is_err() {
        return report;
    }
    let boson = bosonize(b);
    let a = &boson.hopf;
    let eta_a = extend_to_a(&boson, &eta);
    let exps = convolution_exp(a, &eta_a).and_then(|s| Ok((s, convolution_exp(a, &eta_a.scaled(&CycScalar::from_int(a.m(), -1)))?)));
    let (sigma, sigma_inv) = match exps {
        Ok(pair) => pair,
        Err(e) => {
            report.fail("exponential", e.to_string());
            return report;
        }
    };
    let inverse = sigma.convolve(&sigma_inv, a) == Bilinear::identity(a);
    report.record("σ * e^(-η̃) = ε⊗ε", if inverse { Ok(String::new()) } else { Err("convolution is not ε⊗ε".into()) });
    let inf = infinitesimal_part(a, &sigma) == eta_a;
    report.record("infinitesimal part", if inf { Ok(String::new()) } else { Err("degree-2 part of σ differs from η̃".into()) });
    report.record("cocycle identity", check_cocycle_identity(a, &sigma).map(|()| format!("{} values", sigma.len())).map_err(|e| e.to_string()));
    report
}

fn not_applicable(suite: Suite, schema: &str) -> CliError {
    CliError::Input(format!("suite {suite:?} does not apply to {schema}"))
}

fn wants(suite: Suite, s: Suite) -> bool {
    suite == Suite::All || suite == s
}

fn coradical_report(a: &HopfData) -> Result<Report, CliError> {
    let g = GroupDatum::new_unchecked(a.m()).map_err(input)?;
    Ok(coradical_check(a, &FunctionAlgebra::new(g)))
}

fn verify(text: &str, suite: Suite) -> Result<(), CliError> {
    let schema = json::schema_of(text).map_err(input)?;
    let mut reports = Vec::new();
    match schema.as_str() {
        json::HOPF_SCHEMA => {
            if matches!(suite, Suite::Yd | Suite::Nichols | Suite::Cocycle) {
                return Err(not_applicable(suite, &schema));
            }
            let a = json::hopf_from_json(text).map_err(input)?;
            if wants(suite, Suite::Hopf) {
                reports.push(verify_hopf(&a));
            }
            if wants(suite, Suite::Coradical) {
                reports.push(coradical_report(&a)?);
            }
        }
        json::YD_SCHEMA => {
            if !wants(suite, Suite::Yd) {
                return Err(not_applicable(suite, &schema));
            }
            reports.push(json::yd_from_json(text).map_err(input)?.verify());
        }
        json::NICHOLS_SCHEMA => {
            if suite == Suite::Cocycle {
                return Err(not_applicable(suite, &schema));
            }
            let b = match json::nichols_from_json(text) {
                Err(JsonError::Inconsistent(w)) => return Err(CliError::Verification(w)),
                other => other.map_err(input)?,
            };
            if wants(suite, Suite::Yd) {
                reports.push(b.module.verify());
            }
            if wants(suite, Suite::Nichols) {
                reports.push(verify_nichols(&b));
            } else if suite == Suite::Hopf {
                reports.push(verify_hopf(&bosonize(&b).hopf));
            } else if suite == Suite::Coradical {
                reports.push(coradical_report(&bosonize(&b).hopf)?);
            }
        }
        json::LIFTING_SCHEMA => {
            let data = json::lifting_from_json(text).map_err(input)?;
            let b = nichols_of(&data)?;
            if wants(suite, Suite::Yd) {
                reports.push(b.module.verify());
            }
            if wants(suite, Suite::Nichols) {
                reports.push(verify_nichols(&b));
            }
            if wants(suite, Suite::Cocycle) {
                reports.push(cocycle_report(&data, &b));
            }
            if wants(suite, Suite::Hopf) || wants(suite, Suite::Coradical) {
                match deform(&bosonize(&b), &data.cocycle()) {
                    Ok(d) => {
                        if wants(suite, Suite::Hopf) {
                            reports.push(verify_hopf(&d.hopf));
                        }
                        if wants(suite, Suite::Coradical) {
                            reports.push(coradical_report(&d.hopf)?);
                        }
                    }
                    Err(e) => {
                        let mut r = Report::new("deformation");
                        r.fail("deform", e.to_string());
                        reports.push(r);
                    }
                }
            }
        }
        other => return Err(CliError::Input(format!("unknown schema {other:?}"))),
    }
    finish(&reports)
}

fn compare(presented: &str, deformed: &str) -> Result<(), CliError> {
    let p = json::hopf_from_json(presented).map_err(input)?;
    let d = json::hopf_from_json(deformed).map_err(input)?;
    let report = compare_on_generators(&p, &d).map_err(from_deform)?;
    finish(&[report])
}

fn menu(g: &GroupDatum, max_rank: usize, out: Option<&Path>) -> Result<(), CliError> {
    let entries = classify_menu(g, max_rank);
    println!("{:<6}  {:<16}  {:<8}  {:>6}  {:>10}", "family", "I", "L", "dim", "parameters");
    for e in &entries {
        let family = e.family.map_or("-".to_string(), |f| format!("{f:?}"));
        println!("{family:<6}  {:<16}  {:<8}  {:>6}  {:>10}", show_pairs(&e.pairs), show_ells(&e.ells), e.dim, e.parameters);
    }
    println!("{} entries", entries.len());
    if let Some(path) = out {
        let doc = json!({ "schema": "menu/v1", "m": g.m(), "entries": entries });
        write(path, &canonical(&doc))?;
    }
    Ok(())
}

fn export(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    let schema = json::schema_of(text).map_err(input)?;
    let canonical = match schema.as_str() {
        json::HOPF_SCHEMA => json::hopf_to_json(&json::hopf_from_json(text).map_err(input)?),
        json::YD_SCHEMA => json::yd_to_json(&json::yd_from_json(text).map_err(input)?),
        json::NICHOLS_SCHEMA => json::nichols_to_json(&json::nichols_from_json(text).map_err(input)?),
        json::LIFTING_SCHEMA => json::lifting_to_json(&json::lifting_from_json(text).map_err(input)?),
        other => return Err(CliError::Input(format!("unknown schema {other:?}"))),
    };
    match out {
        Some(path) => write(path, &canonical),
        None => {
            print!("{canonical}");
            Ok(())
        }
    }
}
