use serde_json::{json, Value};

use z2steenrod::classical::{deformation_map, restriction_map};
use z2steenrod::profiles::{is_finite_quotient, named_profile_with, Convention, Family};
use z2steenrod::verification::{AcceptanceOptions, CRITERIA};
use z2steenrod::{default_algebra, DualSteenrod, Element, GenMonomial, Profile, RODegree, Window};

use crate::output::{compute_error, usage_error, CliResult, Failure, Report};
use crate::{Cli, Command, CompareCommand, ProfileArg, ProfileCommand, VerifyCommand};

fn element(alg: &DualSteenrod, text: &str) -> CliResult<Element> {
    alg.parse_element(text).map_err(|e| usage_error(text, e))
}

fn window(text: &str) -> CliResult<Window> {
    text.parse().map_err(|e| usage_error(text, e))
}

fn degree(text: &str) -> CliResult<RODegree> {
    let bad = || Failure::Usage(format!("expected a degree c,d, got {text:?}"));
    let (c, d) = text.split_once(',').ok_or_else(bad)?;
    Ok(RODegree::new(
        c.trim().parse().map_err(|_| bad())?,
        d.trim().parse().map_err(|_| bad())?,
    ))
}

fn profile_from(text: &str, literal: bool) -> CliResult<Profile> {
    let text = text.trim();
    if text.starts_with("h=") || text.starts_with("k=") {
        return text.parse().map_err(|e| usage_error(text, e));
    }
    let (name, n) = match text.split_once('(') {
        Some((name, rest)) => (name, rest.trim_end_matches(')')),
        None => (
            text.trim_end_matches(|c: char| c.is_ascii_digit()),
            text.trim_start_matches(|c: char| !c.is_ascii_digit()),
        ),
    };
    let family: Family = name.parse().map_err(|e| usage_error(text, e))?;
    let n: u32 = if n.is_empty() && family == Family::EInf {
        0
    } else {
        n.parse()
            .map_err(|_| Failure::Usage(format!("bad family index in {text:?}")))?
    };
    let convention = if literal {
        Convention::Literal
    } else {
        Convention::FullBasis
    };
    Ok(named_profile_with(family, n, convention))
}

fn profile(arg: &ProfileArg) -> CliResult<Profile> {
    profile_from(&arg.profile, arg.literal)
}

fn element_report(command: &'static str, x: &Element) -> Report {
    Report::new(
        command,
        vec![x.to_string()],
        json!({ "text": x.to_string(), "element": x }),
    )
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    let alg = default_algebra();
    match &cli.command {
        Command::Reduce { expr } => Ok(element_report("reduce", &element(alg, expr)?)),
        Command::Mul { x, y } => {
            let p = alg.multiply(&element(alg, x)?, &element(alg, y)?);
            Ok(element_report("mul", &p))
        }
        Command::Coproduct { expr } => {
            let d = alg.coproduct(&element(alg, expr)?);
            Ok(Report::new(
                "coproduct",
                vec![d.to_string()],
                json!({ "text": d.to_string(), "tensor": d }),
            ))
        }
        Command::Antipode { expr } => {
            let c = alg.antipode(&element(alg, expr)?).map_err(compute_error)?;
            Ok(element_report("antipode", &c))
        }
        Command::Primitives { deg } => {
            let deg = degree(deg)?;
            let prims = alg.primitives_in_bidegree(deg).map_err(compute_error)?;
            let shown: Vec<String> = prims.iter().map(|x| x.to_string()).collect();
            let mut text = vec![format!("degree {deg}: {} primitives", prims.len())];
            text.extend(shown.iter().cloned());
            Ok(Report::new(
                "primitives",
                text,
                json!({ "degree": deg, "primitives": shown }),
            ))
        }
        Command::Basis { window: w } => {
            let w = window(w)?;
            let basis = alg.monomial_basis(&w).map_err(compute_error)?;
            let text = basis.iter().map(|(m, d)| format!("{d}\t{m}")).collect();
            let rows: Vec<Value> = basis
                .iter()
                .map(|(m, d)| json!({ "degree": d, "monomial": m.to_string() }))
                .collect();
            Ok(Report::new(
                "basis",
                text,
                json!({ "window": w.to_string(), "monomials": rows }),
            ))
        }
        Command::Profile(cmd) => run_profile(alg, cmd),
        Command::Verify(cmd) => run_verify(alg, cmd),
        Command::Compare(cmd) => {
            let (name, expr) = match cmd {
                CompareCommand::R { expr } => ("r", expr),
                CompareCommand::Rho { expr } => ("rho", expr),
            };
            let x = element(alg, expr)?;
            let image = match cmd {
                CompareCommand::R { .. } => deformation_map(&x).to_string(),
                CompareCommand::Rho { .. } => restriction_map(&x).to_string(),
            };
            Ok(Report::new(
                "compare",
                vec![image.clone()],
                json!({ "map": name, "input": x.to_string(), "image": image }),
            ))
        }
        Command::Selftest(args) => {
            let ids: Vec<u8> = match &args.criteria {
                None => CRITERIA.iter().map(|c| c.0).collect(),
                Some(list) => list
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse()
                            .ok()
                            .filter(|id| CRITERIA.iter().any(|c| c.0 == *id))
                    })
                    .collect::<Option<_>>()
                    .ok_or_else(|| {
                        Failure::Usage(format!("criteria must be numbers 1 to 9, got {list:?}"))
                    })?,
            };
            let opts = AcceptanceOptions::default();
            let outcomes: Vec<_> = ids.iter().map(|&id| alg.run_criterion(id, &opts)).collect();
            let ok = outcomes.iter().all(|o| o.passed());
            let text = outcomes.iter().map(|o| o.to_string()).collect();
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "passed": o.passed(), "outcome": o }))
                .collect();
            Ok(Report::new("selftest", text, json!({ "criteria": rows })).with_ok(ok))
        }
    }
}

fn run_profile(alg: &DualSteenrod, cmd: &ProfileCommand) -> CliResult<Report> {
    match cmd {
        ProfileCommand::Minimize(arg) => {
            let p = profile(arg)?;
            let m = alg.minimize(&p).map_err(compute_error)?;
            let mut text = vec![m.profile.to_string()];
            if !m.is_confirmed() {
                text.push(format!(
                    "unconfirmed inf at k indices {:?}{}",
                    m.unconfirmed,
                    if m.unconfirmed_tail {
                        " and the tail"
                    } else {
                        ""
                    }
                ));
            }
            Ok(Report::new(
                "profile minimize",
                text,
                json!({ "input": p.to_string(), "minimized": m }),
            ))
        }
        ProfileCommand::CheckHopf {
            profile: arg,
            window: w,
        } => {
            let p = profile(arg)?;
            let w = window(w)?;
            let violation = p.hopf_numeric_violation();
            let direct = alg.hopf_ideal_direct(&p, &w).map_err(compute_error)?;
            let numeric = violation.is_none();
            let mut text = vec![
                format!(
                    "numeric: {}",
                    if numeric {
                        "pass".to_string()
                    } else {
                        format!("fail ({})", violation.unwrap())
                    }
                ),
                format!(
                    "direct in {w}: {} ({} generators)",
                    if direct.passed { "pass" } else { "fail" },
                    direct.generators_checked
                ),
            ];
            if let Some(f) = &direct.failure {
                text.push(format!(
                    "generator {} fails {:?}: {}",
                    f.generator, f.condition, f.witness
                ));
            }
            let json = json!({ "profile": p.to_string(), "numeric": numeric, "violation": violation, "direct": direct });
            Ok(Report::new("profile check-hopf", text, json).with_ok(numeric && direct.passed))
        }
        ProfileCommand::CheckFree(arg) => {
            let p = profile(arg)?;
            let free = p.is_free_pair();
            let finite = is_finite_quotient(&p);
            let text = vec![format!(
                "{p}: {}free pair{}",
                if free { "" } else { "not a " },
                if free && finite {
                    ", finite quotient"
                } else {
                    ""
                }
            )];
            Ok(Report::new(
                "profile check-free",
                text,
                json!({ "profile": p.to_string(), "free": free, "finite": finite }),
            )
            .with_ok(free))
        }
        ProfileCommand::Basis {
            profile: arg,
            window: w,
        } => {
            let p = profile(arg)?;
            let w = window(w)?;
            let basis = alg.quotient_basis(&p, &w).map_err(compute_error)?;
            let mut text = vec![format!("{} monomials", basis.len())];
            text.extend(basis.monomials.iter().map(|(m, d)| format!("{d}\t{m}")));
            Ok(Report::new("profile basis", text, json!(basis)))
        }
        ProfileCommand::Members {
            profile: arg,
            window: w,
            element: x,
        } => {
            let p = profile(arg)?;
            let w = window(w)?;
            if let Some(text) = x {
                let x = element(alg, text)?;
                let member = alg.member_window(&p, &x).map_err(compute_error)?;
                let line = format!("{x} {} I", if member { "is in" } else { "is not in" });
                return Ok(Report::new(
                    "profile members",
                    vec![line],
                    json!({ "element": x.to_string(), "member": member }),
                ));
            }
            let gens = alg.ideal_generators(&p, &w).map_err(compute_error)?;
            let text = gens.iter().map(|g| format!("{}\t{g}", g.degree)).collect();
            Ok(Report::new(
                "profile members",
                text,
                json!({ "profile": p.to_string(), "window": w.to_string(), "generators": gens }),
            ))
        }
    }
}

fn run_verify(alg: &DualSteenrod, cmd: &VerifyCommand) -> CliResult<Report> {
    match cmd {
        VerifyCommand::Cofree {
            b,
            c,
            generators,
            window: w,
            literal,
        } => {
            let pb = profile_from(b, *literal)?;
            let pc = profile_from(c, *literal)?;
            let gens = generators
                .split(',')
                .map(|g| alg.parse_monomial(g.trim()).map_err(|e| usage_error(g, e)))
                .collect::<CliResult<Vec<GenMonomial>>>()?;
            let w = window(w)?;
            let r = alg
                .comodule_iso_check(&pb, &pc, &gens, &w)
                .map_err(|e| match e {
                    z2steenrod::Error::Precondition(_) => Failure::Usage(e.to_string()),
                    e => compute_error(e),
                })?;
            let mut text = vec![format!(
                "{} over {}: {} (margin {}, {} degrees)",
                pb,
                pc,
                if r.bijective {
                    "bijective"
                } else {
                    "not bijective"
                },
                r.margin,
                r.degrees.len()
            )];
            if let Some((d, w)) = &r.failure {
                text.push(format!(
                    "fails in {d}{}",
                    w.as_ref()
                        .map(|w| format!(", kernel contains {w}"))
                        .unwrap_or_default()
                ));
            }
            text.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
            Ok(Report::new("verify cofree", text, json!(r)).with_ok(r.bijective))
        }
        VerifyCommand::Paper => {
            let report = alg.reference_scenarios().map_err(compute_error)?;
            let text = report
                .scenarios
                .iter()
                .map(|s| {
                    let status = match (s.passed, s.counted) {
                        (true, _) => "PASS",
                        (false, true) => "FAIL",
                        (false, false) => "info",
                    };
                    let conv = s
                        .convention
                        .map(|c| format!(" [{c:?}]"))
                        .unwrap_or_default();
                    format!("{status} {}{conv} ({}) {}", s.name, s.anchor, s.detail)
                })
                .collect();
            let ok = report.all_passed();
            Ok(Report::new("verify paper", text, json!(report)).with_ok(ok))
        }
    }
}
