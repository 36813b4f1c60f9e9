use std::path::Path;

use hypquat::groups::io::parse_group;
use hypquat::groups::{collar_product, cygan_offset_to_real_circle, generator_separation};
use hypquat::{bend, limit_set_sample, marker_invariant, translation_length, unit_rotation, BallPoint, GroupData};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::Settings;
use crate::error::CliError;
use crate::output::{fmt_f64, json_num, read_file, to_json, write_file, Metadata};

pub const CSV_HEADER: &str = "eta,eta_i,eta_j,eta_k,marker,tan_marker,limit_points,skipped,min_cygan_offset,\
max_cygan_offset,max_ball_offset,eps,separation,delta,collar_product,collar_ok,max_form_residual";

pub const DEFAULT_COUNT: usize = 200;

/// Tube radius used in the collar condition; the smallest radius for which
/// the bending argument applies.
pub fn collar_delta() -> f64 {
    63f64.ln()
}

struct Row {
    eta: f64,
    eta_vec: [f64; 3],
    marker: f64,
    limit_points: usize,
    skipped: usize,
    min_cygan: f64,
    max_cygan: f64,
    max_ball: f64,
    eps: f64,
    separation: f64,
    collar: f64,
    residual: f64,
    points: Vec<BallPoint>,
}

impl Row {
    /// The tube of radius `delta` around the axis misses the other axes and
    /// satisfies `sinh(eps/4) sinh(delta/2) <= 1/2`.
    fn collar_ok(&self) -> bool {
        self.collar <= 0.5 && self.separation >= collar_delta()
    }

    fn csv(&self) -> String {
        let f = [
            self.eta,
            self.eta_vec[0],
            self.eta_vec[1],
            self.eta_vec[2],
            self.marker,
            self.marker.tan(),
        ]
        .map(fmt_f64)
        .join(",");
        let g = [self.min_cygan, self.max_cygan, self.max_ball, self.eps, self.separation, collar_delta(), self.collar].map(fmt_f64).join(",");
        format!("{f},{},{},{g},{},{}", self.limit_points, self.skipped, self.collar_ok(), fmt_f64(self.residual))
    }

    fn json(&self) -> JsonRow {
        JsonRow {
            eta: json_num(self.eta),
            eta_i: json_num(self.eta_vec[0]),
            eta_j: json_num(self.eta_vec[1]),
            eta_k: json_num(self.eta_vec[2]),
            marker: json_num(self.marker),
            tan_marker: json_num(self.marker.tan()),
            limit_points: self.limit_points,
            skipped: self.skipped,
            min_cygan_offset: json_num(self.min_cygan),
            max_cygan_offset: json_num(self.max_cygan),
            max_ball_offset: json_num(self.max_ball),
            eps: json_num(self.eps),
            separation: json_num(self.separation),
            delta: json_num(collar_delta()),
            collar_product: json_num(self.collar),
            collar_ok: self.collar_ok(),
            max_form_residual: json_num(self.residual),
        }
    }
}

#[derive(Serialize)]
struct JsonRow {
    eta: Box<RawValue>,
    eta_i: Box<RawValue>,
    eta_j: Box<RawValue>,
    eta_k: Box<RawValue>,
    marker: Box<RawValue>,
    tan_marker: Box<RawValue>,
    limit_points: usize,
    skipped: usize,
    min_cygan_offset: Box<RawValue>,
    max_cygan_offset: Box<RawValue>,
    max_ball_offset: Box<RawValue>,
    eps: Box<RawValue>,
    separation: Box<RawValue>,
    delta: Box<RawValue>,
    collar_product: Box<RawValue>,
    collar_ok: bool,
    max_form_residual: Box<RawValue>,
}

#[derive(Serialize)]
struct Report {
    metadata: Metadata,
    group: String,
    grid: String,
    axis: String,
    count: usize,
    word_length: usize,
    rows: Vec<JsonRow>,
}

/// CSV of ball coordinates, four columns per quaternion coordinate.
pub fn points_csv(points: &[BallPoint], n: usize) -> String {
    let mut header = vec!["index".to_string()];
    for i in 1..=n {
        header.extend(["w", "x", "y", "z"].map(|c| format!("z{i}_{c}")));
    }
    let mut out = header.join(",");
    out.push('\n');
    for (k, p) in points.iter().enumerate() {
        out.push_str(&k.to_string());
        for c in p.coords() {
            for v in c.to_array() {
                out.push(',');
                out.push_str(&fmt_f64(v));
            }
        }
        out.push('\n');
    }
    out
}

/// Collar data of the undeformed group, which the bending hypothesis is about.
struct Collar {
    eps: f64,
    separation: f64,
    product: f64,
}

fn collar(group: &GroupData) -> Result<Collar, CliError> {
    let eps = translation_length(&group.axis.g)?;
    Ok(Collar { eps, separation: generator_separation(group)?, product: collar_product(eps, collar_delta())? })
}

fn sweep_row(group: &GroupData, c: &Collar, eta: f64, s: &Settings, count: usize) -> Result<Row, CliError> {
    let dir = s.axis.quaternion();
    let bent = bend(group, unit_rotation(s.axis, eta))?;
    let marker = marker_invariant(&bent)?.value();
    let sample = limit_set_sample(&bent, s.words, count, s.seed)?;
    let mut min_cygan = f64::INFINITY;
    let mut max_cygan: f64 = 0.0;
    let mut max_ball: f64 = 0.0;
    for p in &sample.points {
        let c = cygan_offset_to_real_circle(p)?;
        min_cygan = min_cygan.min(c);
        max_cygan = max_cygan.max(c);
        max_ball = max_ball.max(p.imaginary_norm());
    }
    Ok(Row {
        eta,
        eta_vec: [dir.x * eta, dir.y * eta, dir.z * eta],
        marker,
        limit_points: sample.points.len(),
        skipped: sample.skipped,
        min_cygan: if sample.points.is_empty() { f64::NAN } else { min_cygan },
        max_cygan,
        max_ball,
        eps: c.eps,
        separation: c.separation,
        collar: c.product,
        residual: bent.max_form_residual(),
        points: sample.points,
    })
}

pub fn run(group_file: &Path, s: &Settings) -> Result<(), CliError> {
    let group = parse_group(&read_file(group_file)?).map_err(|e| CliError::input(format!("{}: {e}", group_file.display())))?;
    if let Some(n) = s.n {
        if n != group.dim() {
            return Err(CliError::input(format!("group has dimension {}, --n is {n}", group.dim())));
        }
    }
    let count = s.count.unwrap_or(DEFAULT_COUNT);
    let c = collar(&group)?;
    let rows = s.grid.iter().map(|&eta| sweep_row(&group, &c, eta, s, count)).collect::<Result<Vec<_>, _>>()?;

    let mut csv = format!("{CSV_HEADER}\n");
    for r in &rows {
        csv.push_str(&r.csv());
        csv.push('\n');
    }
    let report = Report {
        metadata: Metadata::new(s),
        group: group_file.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
        grid: s.grid_spec.clone(),
        axis: s.axis_spec.clone(),
        count,
        word_length: s.words,
        rows: rows.iter().map(Row::json).collect(),
    };
    if let Some(dir) = &s.out {
        std::fs::create_dir_all(dir)?;
        write_file(&dir.join("bend.csv"), &csv)?;
        write_file(&dir.join("bend.json"), &to_json(&report))?;
        for (k, r) in rows.iter().enumerate() {
            write_file(&dir.join(format!("limit_{k:03}.csv")), &points_csv(&r.points, group.dim()))?;
        }
    }
    if s.json {
        print!("{}", to_json(&report));
    } else {
        print!("{csv}");
    }
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    if worst > s.tol {
        return Err(CliError::Failure(format!("bent generators miss the form by {worst:e}")));
    }
    Ok(())
}
