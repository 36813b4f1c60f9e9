use std::path::Path;

use hypquat::invariants::TERM_BOUND;
use hypquat::{character_eval, ClosureMode};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{FieldSel, Settings};
use crate::error::CliError;
use crate::output::{fmt_f64, json_num, read_file, to_json, write_file, Metadata};
use crate::parse::{common_dim, parse_cycle, parse_vertices, vertex_map};

#[derive(Serialize)]
struct Face {
    vertices: [usize; 3],
    multiplicity: i64,
    term: Box<RawValue>,
}

#[derive(Serialize)]
struct Report {
    metadata: Metadata,
    closed: bool,
    total: Box<RawValue>,
    bound: Box<RawValue>,
    faces: Vec<Face>,
}

pub fn run(cycle_file: &Path, vertex_file: &Path, lenient: bool, s: &Settings) -> Result<(), CliError> {
    if s.field == FieldSel::Octonion {
        return Err(CliError::input("the character is evaluated over r, c or h"));
    }
    let cycle = parse_cycle(&read_file(cycle_file)?)?;
    let specs = parse_vertices(&read_file(vertex_file)?)?;
    let pts: Vec<_> = specs.iter().map(|(_, p)| p.clone()).collect();
    let n = common_dim(&pts, s.n)?;
    let map = vertex_map(&specs, n, s.field)?;
    let mode = if lenient { ClosureMode::Lenient } else { ClosureMode::Strict };
    let r = character_eval(&cycle, &map, mode)?;
    if !r.closed {
        eprintln!("warning: the chain is not closed; its value depends on the chosen vertices");
    }
    let faces: Vec<Face> = cycle
        .faces
        .iter()
        .zip(&r.terms)
        .map(|((v, m), t)| Face { vertices: *v, multiplicity: *m, term: json_num(*t) })
        .collect();
    let report = Report { metadata: Metadata::new(s), closed: r.closed, total: json_num(r.total), bound: json_num(TERM_BOUND), faces };
    if let Some(path) = &s.out {
        write_file(path, &to_json(&report))?;
    }
    if s.json {
        print!("{}", to_json(&report));
    } else {
        println!("face  v1 v2 v3  mult  4 pi tau");
        for (k, ((v, m), t)) in cycle.faces.iter().zip(&r.terms).enumerate() {
            println!("{k:>4}  {} {} {}  {m:>4}  {}", v[0], v[1], v[2], fmt_f64(*t));
        }
        println!("closed  {}", r.closed);
        println!("c       {}", fmt_f64(r.total));
    }
    let worst = r.max_abs_term();
    if worst > TERM_BOUND + s.tol {
        return Err(CliError::Failure(format!("term {worst} exceeds the bound 4 pi^2")));
    }
    Ok(())
}
