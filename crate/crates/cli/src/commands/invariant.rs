use std::f64::consts::FRAC_PI_2;

use hypquat::{cartan_angular, dist_to_spine, octonion_angular, AngularValue, BallPoint, Octonion, Triple};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{FieldSel, Settings};
use crate::error::CliError;
use crate::output::{fmt_f64, json_num, to_json, write_file, Metadata};
use crate::parse::{common_dim, parse_point, PointSpec};

#[derive(Serialize)]
struct Report {
    metadata: Metadata,
    field: &'static str,
    dim: usize,
    angular: Box<RawValue>,
    tan_angular: Box<RawValue>,
    tau: Box<RawValue>,
    dist_to_spine: Box<RawValue>,
    class: &'static str,
}

fn classify(a: f64, field: FieldSel, tol: f64) -> &'static str {
    if a <= tol {
        "real-plane"
    } else if (FRAC_PI_2 - a).abs() <= tol {
        match field {
            FieldSel::Complex => "c-line",
            FieldSel::Octonion => "o-line",
            FieldSel::Real | FieldSel::Quaternion => "h-line",
        }
    } else {
        "generic"
    }
}

/// Octonionic triples are taken in standard position: the first two points
/// must be `(0,-1)` and `(0,1)` and the third lies on the line through them.
fn octonion_value(points: &[PointSpec]) -> Result<AngularValue, CliError> {
    let std_point = |p: &PointSpec, last: f64| {
        matches!(p, PointSpec::Ball(c) if c.len() == 2 && c[0] == Octonion::ZERO && c[1] == Octonion::real(last))
    };
    if !std_point(&points[0], -1.0) || !std_point(&points[1], 1.0) {
        return Err(CliError::input("octonionic triples must start with the points 0,-1 and 0,1"));
    }
    match &points[2] {
        PointSpec::Ball(c) if c.len() == 2 && c[0] == Octonion::ZERO => Ok(octonion_angular(c[1])?),
        _ => Err(CliError::input("the third octonionic point must have the form 0,z on the standard line")),
    }
}

pub fn run(points: &[String], s: &Settings) -> Result<(), CliError> {
    let specs = points.iter().map(|p| parse_point(p)).collect::<Result<Vec<_>, _>>()?;
    let (value, dim, spine) = if s.field == FieldSel::Octonion {
        let a = octonion_value(&specs)?;
        // tan A = sinh of the spine distance
        (a, 2, a.tan().asinh())
    } else {
        let n = common_dim(&specs, s.n)?;
        let pts = specs.iter().map(|p| p.to_ball(n, s.field)).collect::<Result<Vec<BallPoint>, _>>()?;
        let [a, b, c]: [BallPoint; 3] = pts.try_into().expect("three points");
        let x = Triple::new(a, b, c)?;
        (cartan_angular(&x)?, n, dist_to_spine(&x)?)
    };
    let a = value.value();
    let class = classify(a, s.field, s.tol);
    let report = Report {
        metadata: Metadata::new(s),
        field: s.field.name(),
        dim,
        angular: json_num(a),
        tan_angular: json_num(value.tan()),
        tau: json_num(2.0 * a),
        dist_to_spine: json_num(spine),
        class,
    };
    if let Some(path) = &s.out {
        write_file(path, &to_json(&report))?;
    }
    if s.json {
        print!("{}", to_json(&report));
    } else {
        println!("A              {}", fmt_f64(a));
        println!("tan_A          {}", fmt_f64(value.tan()));
        println!("tau            {}", fmt_f64(2.0 * a));
        println!("dist_to_spine  {}", fmt_f64(spine));
        println!("class          {class}");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_uses_the_tolerance() {
        assert_eq!(classify(1e-12, FieldSel::Quaternion, 1e-9), "real-plane");
        assert_eq!(classify(FRAC_PI_2 - 1e-12, FieldSel::Complex, 1e-9), "c-line");
        assert_eq!(classify(0.7, FieldSel::Quaternion, 1e-9), "generic");
    }

    #[test]
    fn octonion_triples_need_standard_position() {
        let pts = |third: &str| ["0,-1", "0,1", third].map(|p| parse_point(p).unwrap());
        let a = octonion_value(&pts("0,0|0.5i")).unwrap();
        assert!((a.tan() - 4.0 / 3.0).abs() < 1e-12);
        assert!(octonion_value(&pts("0.1,0.5")).is_err());
        let swapped = ["0,1", "0,-1", "0,0.5"].map(|p| parse_point(p).unwrap());
        assert!(octonion_value(&swapped).is_err());
    }
}
