use hypquat::verify::{run_suites, SuiteReport};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::Settings;
use crate::error::CliError;
use crate::output::{csv_field, fmt_f64, json_num, to_json, write_file, Metadata};

pub const CSV_HEADER: &str = "suite,check,value,bound,threshold,samples,passed,error";

#[derive(Serialize)]
struct CheckRow<'a> {
    suite: &'a str,
    check: &'a str,
    value: Box<RawValue>,
    bound: &'static str,
    threshold: Box<RawValue>,
    samples: usize,
    passed: bool,
    error: Option<&'a str>,
}

#[derive(Serialize)]
struct Report<'a> {
    metadata: Metadata,
    passed: bool,
    checks: Vec<CheckRow<'a>>,
}

fn rows(reports: &[SuiteReport]) -> Vec<CheckRow<'_>> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| CheckRow {
                suite: &r.name,
                check: &c.name,
                value: json_num(c.value),
                bound: c.bound.symbol(),
                threshold: json_num(c.threshold),
                samples: c.samples,
                passed: c.passed,
                error: c.error.as_deref(),
            })
        })
        .collect()
}

fn csv(reports: &[SuiteReport]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in reports {
        for c in &r.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.name,
                c.name,
                fmt_f64(c.value),
                c.bound.symbol(),
                fmt_f64(c.threshold),
                c.samples,
                c.passed,
                csv_field(c.error.as_deref().unwrap_or(""))
            ));
        }
    }
    out
}

fn print_table(r: &SuiteReport) {
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
    println!("suite {} (seed {})", r.name, r.seed);
    println!("  {:<width$}  {:>24}  {:>2}  {:>24}  {:>7}  result", "check", "value", "", "threshold", "samples");
    for c in &r.checks {
        println!(
            "  {:<width$}  {:>24}  {:>2}  {:>24}  {:>7}  {}",
            c.name,
            fmt_f64(c.value),
            c.bound.symbol(),
            fmt_f64(c.threshold),
            c.samples,
            if c.passed { "ok" } else { "FAIL" }
        );
        if let Some(e) = &c.error {
            println!("    error: {e}");
        }
    }
    println!("{}: {}", r.name, if r.passed() { "PASS" } else { "FAIL" });
}

pub fn run(suite: &str, s: &Settings) -> Result<(), CliError> {
    let reports = run_suites(suite, s.seed, s.count)?;
    let passed = reports.iter().all(SuiteReport::passed);
    let report = Report { metadata: Metadata::new(s), passed, checks: rows(&reports) };
    if let Some(dir) = &s.out {
        std::fs::create_dir_all(dir)?;
        write_file(&dir.join("verify.csv"), &csv(&reports))?;
        write_file(&dir.join("verify.json"), &to_json(&report))?;
    }
    if s.json {
        print!("{}", to_json(&report));
    } else {
        for r in &reports {
            print_table(r);
        }
    }
    if passed {
        Ok(())
    } else {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
        Err(CliError::Failure(format!("verification failed: {}", failed.join(", "))))
    }
}
