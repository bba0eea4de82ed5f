//! The end-to-end verification driver behind `uvw verify`.

use crate::Suite;
use anyhow::Result;
use uvw_core::catalog::{validate_catalog, Catalog};
use uvw_core::equations::EquationSet;
use uvw_core::io::{catalog_hash, load_catalog_anywhere};
use uvw_core::report::Report;
use uvw_core::{builtins, fan, numerics, reductions};

pub fn run_suite(
    cat: &Catalog,
    eq: &EquationSet,
    suite: Suite,
    seed: u64,
    trials: Option<usize>,
    tol: f64,
) -> Result<Report> {
    let mut report = Report::new(&format!("{} on {}", suite_name(suite), cat.name));
    let all = suite == Suite::All;
    if all {
        report.merge(validate_catalog(cat));
    }
    if all || suite == Suite::Parametrization {
        report.merge(eq.verify_parametrization(cat)?);
        for m in cat.module_objects() {
            report.push(
                &format!("expansion identities at {}", cat.objects[m].label),
                eq.expansion_identities_check(cat, m),
                String::new(),
            );
        }
    }
    if all || suite == Suite::Exchange {
        for x in 0..cat.len() {
            report.push(
                &format!("exchange relation at {}", cat.objects[x].label),
                eq.exchange_identity_check(cat, x)?,
                String::new(),
            );
        }
    }
    if all || suite == Suite::Tropical {
        let f = fan::build_fan(cat)?;
        if cat.n() <= 4 {
            report.push(
                "fan pairwise face property",
                fan::check_fan_property(&f)?,
                String::new(),
            );
        } else {
            report.push(
                "fan pairwise face property",
                true,
                "rank above the exact-check budget; covered by sampling".into(),
            );
        }
        report.merge(fan::check_trop_theorem(cat, eq, &f, seed)?);
        report.merge(fan::check_newton_polytope(cat, eq, &f));
        let counts = fan::cone_counts_by_dimension(&f);
        report.push(
            "boundary strata counts (cones per dimension)",
            true,
            format!("{:?}", counts),
        );
        // rigid variables never divide an F-hat polynomial
        let mut bad = Vec::new();
        for m in 0..cat.len() {
            if !cat.objects[m].rigid {
                continue;
            }
            for n_obj in cat.module_objects() {
                if eq.min_fhat_exponent(cat, m, n_obj)? != 0 {
                    bad.push(format!(
                        "u[{}] divides Fhat[{}]",
                        cat.objects[m].label, cat.objects[n_obj].label
                    ));
                }
            }
        }
        report.push("rigid variables divide no Fhat", bad.is_empty(), bad.join("; "));
    }
    if all || suite == Suite::Jasso {
        let mut ran = false;
        for (src_name, focus_label, tgt_name) in builtins::jasso_pairs() {
            if src_name != cat.name {
                continue;
            }
            ran = true;
            let tgt = load_catalog_anywhere(tgt_name)?;
            let tgt_eq = EquationSet::build(&tgt)?;
            let focus = cat.find_label(focus_label).expect("pairing label");
            let map = reductions::jasso_match(cat, focus, &tgt)?;
            report.merge(reductions::jasso_substitution_check(
                cat, eq, &tgt, &tgt_eq, &map,
            )?);
        }
        if !ran {
            report.push(
                "jasso reduction",
                true,
                "no built-in reduction pairing for this catalog".into(),
            );
        }
    }
    if all || suite == Suite::Quotient {
        let mut ran = false;
        for (src_name, tgt_name) in builtins::quotient_pairs() {
            if src_name != cat.name {
                continue;
            }
            ran = true;
            let tgt = load_catalog_anywhere(&tgt_name)?;
            let tgt_eq = EquationSet::build(&tgt)?;
            let quot = builtins::quotient_for(&src_name, &tgt_name).expect("pairing quotient");
            let (rep, _) = reductions::quotient_map_check(cat, eq, &tgt, &tgt_eq, &quot)?;
            report.merge(rep);
        }
        if !ran {
            report.push(
                "quotient map",
                true,
                "no built-in quotient pairing for this catalog".into(),
            );
        }
    }
    if all || suite == Suite::Dilog {
        if cat.n() <= 3 {
            let t = trials.unwrap_or(100);
            let dev = numerics::dilog_identity_check(cat, eq, t, seed)?;
            report.push(
                "dilogarithm sum is constant",
                dev < tol,
                format!("max deviation {:.3e} over {} samples (tol {:.1e})", dev, t, tol),
            );
        } else {
            report.push(
                "dilogarithm sum",
                true,
                "skipped: catalog rank above the sampling budget".into(),
            );
        }
    }
    if all || suite == Suite::Positivity {
        let t = trials.unwrap_or(1000);
        report.merge(numerics::positivity_scan(cat, eq, t, seed));
        let f = fan::build_fan(cat)?;
        let samples = trials.unwrap_or(10_000);
        report.merge(fan::sample_completeness(&f, samples, 10, seed)?);
    }
    Ok(report)
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Parametrization => "parametrization",
        Suite::Exchange => "exchange",
        Suite::Tropical => "tropical",
        Suite::Jasso => "jasso",
        Suite::Quotient => "quotient",
        Suite::Dilog => "dilog",
        Suite::Positivity => "positivity",
        Suite::All => "all",
    }
}

pub fn report_text(cat: &Catalog, report: &Report, seed: u64, tol: f64) -> String {
    format!(
        "uvw {} | catalog {} | hash {:016x} | seed {} | tol {:.1e}\n{}{}\n",
        env!("CARGO_PKG_VERSION"),
        cat.name,
        catalog_hash(cat),
        seed,
        tol,
        report,
        if report.passed() { "PASS" } else { "FAIL" }
    )
}

pub fn report_json(cat: &Catalog, report: &Report, seed: u64, tol: f64) -> Result<String> {
    let checks: Vec<serde_json::Value> = report
        .checks
        .iter()
        .map(|c| {
            serde_json::json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&serde_json::json!({
        "tool": "uvw",
        "version": env!("CARGO_PKG_VERSION"),
        "catalog": cat.name,
        "catalog_hash": format!("{:016x}", catalog_hash(cat)),
        "seed": seed,
        "tolerance": tol,
        "title": report.title,
        "checks": checks,
        "passed": report.passed(),
    }))? + "\n")
}
