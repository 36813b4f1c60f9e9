//! Run settings: built-in defaults, then a `key = value` config file, then
//! command-line flags.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use clap::Args;
use hypquat::{ImaginaryDirection, Quaternion};

use crate::error::CliError;
use crate::output::read_file;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSel {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl FieldSel {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "r" | "real" => Ok(FieldSel::Real),
            "c" | "complex" => Ok(FieldSel::Complex),
            "h" | "q" | "quaternion" => Ok(FieldSel::Quaternion),
            "o" | "octonion" => Ok(FieldSel::Octonion),
            _ => Err(CliError::input(format!("unknown field '{s}' (expected r, c, h or o)"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldSel::Real => "r",
            FieldSel::Complex => "c",
            FieldSel::Quaternion => "h",
            FieldSel::Octonion => "o",
        }
    }

    /// Rejects quaternion components that do not belong to the field.
    pub fn admits(self, q: Quaternion) -> bool {
        match self {
            FieldSel::Real => q.x == 0.0 && q.y == 0.0 && q.z == 0.0,
            FieldSel::Complex => q.y == 0.0 && q.z == 0.0,
            FieldSel::Quaternion | FieldSel::Octonion => true,
        }
    }
}

/// Flags shared by every subcommand. Unset flags fall back to the config
/// file, then to the defaults of [`Settings`].
#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Config file of `key = value` lines
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Scalar field: r, c, h or o
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Dimension of the ball
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Tolerance for classifications and pass/fail decisions
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output file or directory
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Bending grid `start:end:count`, endpoints included
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Bending axis: i, j, k or an imaginary quaternion
    #[arg(long, global = true)]
    pub axis: Option<String>,
    /// Sample count
    #[arg(long, global = true)]
    pub count: Option<usize>,
    /// Maximal word length for limit-set sampling
    #[arg(long, global = true)]
    pub words: Option<usize>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub field: FieldSel,
    pub n: Option<usize>,
    pub seed: u64,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub grid: Vec<f64>,
    pub grid_spec: String,
    pub axis: ImaginaryDirection,
    pub axis_spec: String,
    pub count: Option<usize>,
    pub words: usize,
    pub json: bool,
}

pub const DEFAULT_GRID: &str = "0:0.3:21";
pub const DEFAULT_WORDS: usize = 8;

impl Settings {
    pub fn resolve(args: &CommonArgs) -> Result<Self, CliError> {
        let mut file = FileValues::default();
        if let Some(path) = &args.config {
            file = FileValues::parse(&read_file(path)?, path)?;
        }
        let field = pick(args.field.clone(), file.field)
            .map(|s| FieldSel::parse(&s))
            .transpose()?
            .unwrap_or(FieldSel::Quaternion);
        let n = pick(args.n, file.n.map(|s| parse_num(&s, "n")).transpose()?);
        if let Some(n) = n {
            if n < 1 || (n < 2 && field == FieldSel::Quaternion) {
                return Err(CliError::input(format!("dimension {n} is too small for field {}", field.name())));
            }
        }
        let seed = pick(args.seed, file.seed.map(|s| parse_num(&s, "seed")).transpose()?).unwrap_or(0);
        let tol = pick(args.tol, file.tol.map(|s| parse_num(&s, "tol")).transpose()?).unwrap_or(1e-9);
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::input(format!("tolerance must be positive, got {tol}")));
        }
        let grid_spec = pick(args.grid.clone(), file.grid).unwrap_or_else(|| DEFAULT_GRID.into());
        let grid = parse_grid(&grid_spec)?;
        let axis_spec = pick(args.axis.clone(), file.axis).unwrap_or_else(|| "i".into());
        let axis = parse_axis(&axis_spec)?;
        let count = pick(args.count, file.count.map(|s| parse_num(&s, "count")).transpose()?);
        let words = pick(args.words, file.words.map(|s| parse_num(&s, "words")).transpose()?).unwrap_or(DEFAULT_WORDS);
        if words == 0 {
            return Err(CliError::input("word length must be positive"));
        }
        Ok(Self {
            field,
            n,
            seed,
            tol,
            out: args.out.clone().or(file.out.map(PathBuf::from)),
            grid,
            grid_spec,
            axis,
            axis_spec,
            count,
            words,
            json: args.json || file.json.as_deref().map(parse_bool).transpose()?.unwrap_or(false),
        })
    }
}

fn pick<T>(flag: Option<T>, file: Option<T>) -> Option<T> {
    flag.or(file)
}

fn parse_num<T: std::str::FromStr>(s: &str, key: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| CliError::input(format!("invalid value '{s}' for {key}")))
}

fn parse_bool(s: &str) -> Result<bool, CliError> {
    match s {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::input(format!("invalid boolean '{s}'"))),
    }
}

#[derive(Default, Debug)]
struct FileValues {
    field: Option<String>,
    n: Option<String>,
    seed: Option<String>,
    tol: Option<String>,
    out: Option<String>,
    grid: Option<String>,
    axis: Option<String>,
    count: Option<String>,
    words: Option<String>,
    json: Option<String>,
}

impl FileValues {
    fn parse(text: &str, path: &Path) -> Result<Self, CliError> {
        let mut v = FileValues::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| CliError::input(format!("{}:{}: {msg}", path.display(), idx + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            let value = Some(value.trim().to_string());
            let slot = match key.trim() {
                "field" => &mut v.field,
                "n" => &mut v.n,
                "seed" => &mut v.seed,
                "tol" => &mut v.tol,
                "out" => &mut v.out,
                "grid" => &mut v.grid,
                "axis" => &mut v.axis,
                "count" => &mut v.count,
                "words" => &mut v.words,
                "json" => &mut v.json,
                other => return Err(err(format!("unknown key '{other}'"))),
            };
            *slot = value;
        }
        Ok(v)
    }
}

/// `start:end:count`, evenly spaced with both ends included; every value
/// must lie in `(-pi, pi)`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::input(format!("invalid grid '{spec}' (expected start:end:count)"));
    let parts: Vec<&str> = spec.split(':').map(str::trim).collect();
    let [a, b, k] = parts[..] else { return Err(bad()) };
    let a: f64 = a.parse().map_err(|_| bad())?;
    let b: f64 = b.parse().map_err(|_| bad())?;
    let k: usize = k.parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    for x in [a, b] {
        if x.is_nan() || x.abs() >= PI {
            return Err(CliError::input(format!("grid bound {x} is outside (-pi, pi)")));
        }
    }
    if k == 1 {
        return Ok(vec![a]);
    }
    Ok((0..k).map(|i| a + (b - a) * i as f64 / (k - 1) as f64).collect())
}

pub fn parse_axis(spec: &str) -> Result<ImaginaryDirection, CliError> {
    let q: Quaternion = spec.parse().map_err(|_| CliError::input(format!("invalid axis '{spec}'")))?;
    ImaginaryDirection::new(q).map_err(|e| CliError::input(format!("invalid axis '{spec}': {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_both_ends() {
        let g = parse_grid("0:0.3:4").unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g[0], 0.0);
        assert!((g[3] - 0.3).abs() < 1e-16);
        assert_eq!(parse_grid("-0.5:0.5:1").unwrap(), vec![-0.5]);
        assert!(parse_grid("0:3.2:5").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:0").is_err());
    }

    #[test]
    fn flags_override_the_config_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "# sweep\nseed = 5\nfield = c\ntol = 1e-6\n").unwrap();
        let args = CommonArgs { config: Some(path.clone()), seed: Some(9), ..Default::default() };
        let s = Settings::resolve(&args).unwrap();
        assert_eq!(s.seed, 9);
        assert_eq!(s.field, FieldSel::Complex);
        assert_eq!(s.tol, 1e-6);
        std::fs::write(&path, "colour = red\n").unwrap();
        assert!(Settings::resolve(&CommonArgs { config: Some(path), ..Default::default() }).is_err());
    }

    #[test]
    fn axis_must_be_imaginary() {
        assert!(parse_axis("j").is_ok());
        assert!(parse_axis("0.3i+0.4k").is_ok());
        assert!(parse_axis("1").is_err());
    }
}
