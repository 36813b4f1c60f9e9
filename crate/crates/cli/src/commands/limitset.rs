use std::path::Path;

use hypquat::groups::io::parse_group;
use hypquat::limit_set_sample;

use crate::commands::bend::{points_csv, DEFAULT_COUNT};
use crate::config::Settings;
use crate::error::CliError;
use crate::output::{read_file, write_file};

pub fn run(group_file: &Path, s: &Settings) -> Result<(), CliError> {
    let group = parse_group(&read_file(group_file)?).map_err(|e| CliError::input(format!("{}: {e}", group_file.display())))?;
    let sample = limit_set_sample(&group, s.words, s.count.unwrap_or(DEFAULT_COUNT), s.seed)?;
    let csv = points_csv(&sample.points, group.dim());
    match &s.out {
        Some(path) => write_file(path, &csv)?,
        None => print!("{csv}"),
    }
    if sample.skipped > 0 {
        eprintln!("skipped {} words that are not loxodromic", sample.skipped);
    }
    Ok(())
}
