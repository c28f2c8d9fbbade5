use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{bail, Result};
use serde_json::{json, Value};

use ddet::combinatorics::{hilbert_function_upto, is_vertex_decomposable, stanley_reisner, verify_vd_certificate};
use ddet::dimension::{verify_dimension, DimensionOptions};
use ddet::grid::{acceptance_grid, run_grid, GridOptions};
use ddet::groebner::{buchberger_complete, macaulay_hilbert_upto, verify_groebner, Limits};
use ddet::ideals::{diagonal_monomials, leading_monomial_ideal, IdealSpec};
use ddet::liaison::{replay_paths, ReplayOptions, ReplayPath};
use ddet::Error;

use crate::input::{load, monomial_ideal};
use crate::{Command, RunConfig};

pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::LimitExceeded(_) | Error::TooManyVertices(_)) => 3,
        _ => 2,
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<()> {
    match &cfg.output {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn emit_json(cfg: &RunConfig, v: &Value) -> Result<()> {
    emit(cfg, &(serde_json::to_string_pretty(v)? + "\n"))
}

fn check(name: &str, pass: bool, witness: Option<String>, millis: u128) -> Value {
    let mut c = json!({"name": name, "status": if pass { "pass" } else { "fail" }, "millis": millis as u64});
    if let Some(w) = witness {
        c["witness"] = Value::from(w);
    }
    c
}

/// Runs one subcommand; `Ok(false)` means a check failed.
pub fn run(cfg: &RunConfig, cmd: Command) -> Result<bool> {
    match cmd {
        Command::Gen(source) => {
            let loaded = load(&source, cfg)?;
            emit(cfg, &loaded.gens.to_text())?;
            Ok(true)
        }
        Command::VerifyGb {
            source,
            complete,
            max_spairs,
            max_basis,
        } => {
            let gens = load(&source, cfg)?.gens;
            let report = if complete {
                buchberger_complete(&gens, Limits { max_spairs, max_basis })?
            } else {
                verify_groebner(&gens)
            };
            let mut v = report.to_json();
            v["schema"] = Value::from(1);
            v["field"] = Value::from(gens.ring().field().to_string());
            v["order"] = Value::from(cfg.order.to_string());
            v["generators"] = Value::from(gens.len());
            v["checks"] = json!([check(
                "groebner",
                report.is_verified(),
                report.witness.as_ref().map(|w| w.to_string()),
                report.millis
            )]);
            emit_json(cfg, &v)?;
            Ok(report.is_verified())
        }
        Command::Initial(source) => {
            let loaded = load(&source, cfg)?;
            let gens = &loaded.gens;
            let lead = leading_monomial_ideal(gens);
            let mut ok = true;
            if loaded.from_spec {
                let gb = verify_groebner(gens);
                if !gb.is_verified() {
                    eprintln!("generators are not a Gröbner basis; printing their leading terms");
                    ok = false;
                }
                if diagonal_monomials(gens) != lead {
                    eprintln!("leading terms differ from the main diagonals");
                    ok = false;
                }
            }
            let ring = gens.ring();
            let mut text = format!("field: {}\n", ring.field());
            for g in lead.generators() {
                writeln!(text, "{}", ring.format_monomial(g))?;
            }
            emit(cfg, &text)?;
            Ok(ok)
        }
        Command::Complex(source) => {
            let loaded = load(&source, cfg)?;
            let ideal = if loaded.from_spec {
                leading_monomial_ideal(&loaded.gens)
            } else {
                monomial_ideal(&loaded.gens)?
            };
            let ring = loaded.gens.ring();
            let name = |v: u32| ring.var(v).to_string();
            let names = |f: &[u32]| f.iter().map(|&v| name(v)).collect::<Vec<_>>();
            let delta = stanley_reisner(&ideal)?;
            let facets = delta.facets();
            let vd = is_vertex_decomposable(&delta);
            let certified = vd
                .certificate
                .as_ref()
                .is_some_and(|c| verify_vd_certificate(&delta, c).is_ok());
            let v = json!({
                "schema": 1,
                "vertices": names(delta.vertices()),
                "minimal_nonfaces": delta.minimal_nonfaces().iter().map(|f| names(f)).collect::<Vec<_>>(),
                "facets": facets.iter().map(|f| names(f)).collect::<Vec<_>>(),
                "dimension": delta.max_facet_size().map(|s| s as i64 - 1),
                "krull_dim": delta.krull_dim(),
                "height": delta.num_vertices() - delta.krull_dim(),
                "pure": delta.is_pure(),
                "vertex_decomposable": vd.decomposable,
                "certificate_verified": certified,
                "certificate": vd.certificate,
                "obstruction": vd.obstruction.map(|o| json!({
                    "vertices": names(o.vertices()),
                    "minimal_nonfaces": o.minimal_nonfaces().iter().map(|f| names(f)).collect::<Vec<_>>(),
                })),
            });
            emit_json(cfg, &v)?;
            Ok(vd.decomposable && certified)
        }
        Command::Dims {
            m,
            n,
            r,
            s,
            t,
            computed,
            proof_variant,
        } => {
            let opts = DimensionOptions {
                use_computed: computed,
                proof_variant,
                field: cfg.field,
                order: cfg.order,
            };
            let report = verify_dimension(&IdealSpec::double_det(m, n, r, s, t), &opts)?;
            let mut v = serde_json::to_value(&report)?;
            v["schema"] = Value::from(1);
            emit_json(cfg, &v)?;
            Ok(report.matches != Some(false) && report.groebner_verified != Some(false))
        }
        Command::Replay { source, path } => {
            let spec = source.spec()?;
            let opts = ReplayOptions {
                field: cfg.field,
                order: cfg.order,
                max_degree: cfg.max_degree,
                path: path.parse::<ReplayPath>()?,
            };
            let traces = replay_paths(&spec, &opts)?;
            let ok = traces.iter().all(|t| t.passed);
            let v = if opts.path == ReplayPath::Canonical {
                traces[0].to_json()
            } else {
                Value::Array(traces.iter().map(|t| t.to_json()).collect())
            };
            emit_json(cfg, &v)?;
            Ok(ok)
        }
        Command::Hilbert { source, method } => {
            let (want_mac, want_mono) = match method.as_str() {
                "macaulay" => (true, false),
                "monomial" => (false, true),
                "both" => (true, true),
                other => bail!(Error::Parse(format!(
                    "unknown method `{other}` (macaulay | monomial | both)"
                ))),
            };
            let loaded = load(&source, cfg)?;
            let mac = want_mac
                .then(|| macaulay_hilbert_upto(&loaded.gens, cfg.max_degree))
                .transpose()?;
            let mono = want_mono.then(|| {
                let ideal = if loaded.from_spec {
                    Ok(leading_monomial_ideal(&loaded.gens))
                } else {
                    monomial_ideal(&loaded.gens)
                        .or_else(|_| Ok::<_, anyhow::Error>(leading_monomial_ideal(&loaded.gens)))
                };
                ideal.map(|i| hilbert_function_upto(&i, cfg.max_degree))
            });
            let mono = mono.transpose()?;
            let agree = match (&mac, &mono) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            let v = json!({
                "schema": 1,
                "max_degree": cfg.max_degree,
                "macaulay": mac,
                "monomial": mono,
                "agree": agree,
            });
            emit_json(cfg, &v)?;
            Ok(agree != Some(false))
        }
        Command::Grid {
            max_m,
            max_n,
            max_r,
            out,
        } => {
            let cases = acceptance_grid(max_m, max_n, max_r);
            let opts = GridOptions {
                field: cfg.field,
                max_degree: cfg.max_degree,
                ..Default::default()
            };
            let results = run_grid(&cases, &opts);
            let mut reports = Vec::with_capacity(results.len());
            for r in results {
                reports.push(r?);
            }
            if let Some(dir) = &out {
                fs::create_dir_all(dir)?;
                for rep in &reports {
                    let c = rep.case;
                    let name = format!("case_{}_{}_{}_{}_{}.json", c.m, c.n, c.r, c.s, c.t);
                    write_atomic(&dir.join(name), &serde_json::to_string_pretty(rep)?)?;
                }
                write_atomic(&dir.join("summary.json"), &serde_json::to_string_pretty(&reports)?)?;
            }
            let names: Vec<String> = reports
                .first()
                .map(|r| r.checks.iter().map(|c| c.name.clone()).collect())
                .unwrap_or_default();
            let mut table = format!("{:<14} {:>5}", "case", "gens");
            for n in &names {
                write!(table, " {n:>16}")?;
            }
            table.push_str("       ms\n");
            for rep in &reports {
                write!(table, "{:<14} {:>5}", rep.case.label(), rep.generators)?;
                for c in &rep.checks {
                    write!(table, " {:>16}", if c.passed() { "PASS" } else { "FAIL" })?;
                }
                writeln!(table, " {:>8}", rep.millis)?;
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            writeln!(table, "{} cases, {} failed", reports.len(), failed)?;
            emit(cfg, &table)?;
            Ok(failed == 0)
        }
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
