//! Text forms of points, cycles and vertex maps.
//!
//! Points are written in ball coordinates as comma-separated quaternion
//! literals (`0,-1`, `0.6,0.8i`), in Carnot coordinates as `c:z_1,...;t`
//! with `t` purely imaginary (`c:0.5;0.25j`), or as `inf`. Octonion
//! coordinates are Cayley–Dickson pairs `a|b` of quaternion literals.

use std::collections::HashMap;

use hypquat::{boundary_to_ball, BallPoint, BoundaryCoord, Octonion, Quaternion, TriangulatedCycle};

use crate::config::FieldSel;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum PointSpec {
    Ball(Vec<Octonion>),
    Carnot { z: Vec<Quaternion>, t: Quaternion },
    Infinity,
}

fn quaternion(s: &str) -> Result<Quaternion, CliError> {
    s.parse().map_err(|e| CliError::input(format!("malformed coordinate '{}': {e}", s.trim())))
}

fn octonion(s: &str) -> Result<Octonion, CliError> {
    match s.split_once('|') {
        Some((a, b)) => Ok(Octonion::new(quaternion(a)?, quaternion(b)?)),
        None => Ok(Octonion::new(quaternion(s)?, Quaternion::ZERO)),
    }
}

pub fn parse_point(s: &str) -> Result<PointSpec, CliError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") {
        return Ok(PointSpec::Infinity);
    }
    if let Some(rest) = s.strip_prefix("c:") {
        let (z, t) = rest
            .split_once(';')
            .ok_or_else(|| CliError::input(format!("Carnot point '{s}' needs the form c:z_1,...;t")))?;
        let z = if z.trim().is_empty() { Vec::new() } else { z.split(',').map(quaternion).collect::<Result<_, _>>()? };
        return Ok(PointSpec::Carnot { z, t: quaternion(t)? });
    }
    let coords = s.split(',').map(octonion).collect::<Result<Vec<_>, _>>()?;
    Ok(PointSpec::Ball(coords))
}

impl PointSpec {
    /// Dimension the point fixes, if any.
    pub fn dim(&self) -> Option<usize> {
        match self {
            PointSpec::Ball(c) => Some(c.len()),
            PointSpec::Carnot { z, .. } => Some(z.len() + 1),
            PointSpec::Infinity => None,
        }
    }

    /// Converts to a ball point of `H^n` over a field inside the quaternions.
    pub fn to_ball(&self, n: usize, field: FieldSel) -> Result<BallPoint, CliError> {
        let check = |q: &Quaternion| {
            if field.admits(*q) {
                Ok(*q)
            } else {
                Err(CliError::input(format!("coordinate {q} does not belong to field {}", field.name())))
            }
        };
        let p = match self {
            PointSpec::Ball(c) => {
                let q = c
                    .iter()
                    .map(|o| {
                        if o.b != Quaternion::ZERO {
                            return Err(CliError::input("octonion coordinates need --field o"));
                        }
                        check(&o.a)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if q.len() != n {
                    return Err(CliError::input(format!("expected {n} coordinates, got {}", q.len())));
                }
                BallPoint::new(q)?
            }
            PointSpec::Carnot { z, t } => {
                if z.len() + 1 != n {
                    return Err(CliError::input(format!("expected {} horizontal coordinates, got {}", n - 1, z.len())));
                }
                z.iter().try_for_each(|q| check(q).map(|_| ()))?;
                check(t)?;
                boundary_to_ball(z, *t)?
            }
            PointSpec::Infinity => hypquat::models::boundary_coord_to_ball(&BoundaryCoord::Infinity, n)?,
        };
        Ok(p)
    }
}

/// Shared dimension of a set of points: `--n` if given, otherwise the first
/// point that fixes one, otherwise 2.
pub fn common_dim(points: &[PointSpec], n: Option<usize>) -> Result<usize, CliError> {
    let mut dim = n;
    for p in points {
        if let Some(d) = p.dim() {
            match dim {
                None => dim = Some(d),
                Some(e) if e != d => {
                    return Err(CliError::input(format!("points of dimension {d} and {e} mixed")));
                }
                _ => {}
            }
        }
    }
    let d = dim.unwrap_or(2);
    if d < 1 {
        return Err(CliError::input("dimension must be positive"));
    }
    Ok(d)
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Lines `v1 v2 v3 [multiplicity]`, multiplicity defaulting to 1.
pub fn parse_cycle(text: &str) -> Result<TriangulatedCycle, CliError> {
    let mut faces = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        let err = || CliError::input(format!("cycle line {}: expected 'v1 v2 v3 [multiplicity]'", idx + 1));
        let f: Vec<&str> = line.split_whitespace().collect();
        if !(3..=4).contains(&f.len()) {
            return Err(err());
        }
        let mut v = [0usize; 3];
        for (slot, s) in v.iter_mut().zip(&f) {
            *slot = s.parse().map_err(|_| err())?;
        }
        let m = match f.get(3) {
            Some(s) => s.parse().map_err(|_| err())?,
            None => 1,
        };
        faces.push((v, m));
    }
    if faces.is_empty() {
        return Err(CliError::input("cycle file has no faces"));
    }
    Ok(TriangulatedCycle::new(faces))
}

/// Lines `id point`, the point in any accepted form.
pub fn parse_vertices(text: &str) -> Result<Vec<(usize, PointSpec)>, CliError> {
    let mut out: Vec<(usize, PointSpec)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        let (id, point) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| CliError::input(format!("vertex line {}: expected 'id point'", idx + 1)))?;
        let id: usize = id.parse().map_err(|_| CliError::input(format!("vertex line {}: bad id '{id}'", idx + 1)))?;
        if out.iter().any(|(k, _)| *k == id) {
            return Err(CliError::input(format!("vertex {id} listed twice")));
        }
        let p = parse_point(point).map_err(|e| CliError::input(format!("vertex line {}: {e}", idx + 1)))?;
        out.push((id, p));
    }
    Ok(out)
}

pub fn vertex_map(specs: &[(usize, PointSpec)], n: usize, field: FieldSel) -> Result<HashMap<usize, BallPoint>, CliError> {
    specs.iter().map(|(id, p)| Ok((*id, p.to_ball(n, field)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_forms() {
        assert_eq!(parse_point(" inf ").unwrap(), PointSpec::Infinity);
        let p = parse_point("0,-1").unwrap();
        assert_eq!(p.dim(), Some(2));
        let b = p.to_ball(2, FieldSel::Real).unwrap();
        assert_eq!(b.coords(), [Quaternion::ZERO, Quaternion::real(-1.0)]);
        let c = parse_point("c:0;0").unwrap().to_ball(2, FieldSel::Quaternion).unwrap();
        assert_eq!(c.coords(), [Quaternion::ZERO, Quaternion::ONE]);
        let o = parse_point("0,0.5i|0.1j").unwrap();
        assert!(matches!(o, PointSpec::Ball(ref v) if v[1].b == Quaternion::new(0.0, 0.0, 0.1, 0.0)));
    }

    #[test]
    fn malformed_points_are_rejected() {
        assert!(parse_point("0,abc").is_err());
        assert!(parse_point("c:0.5").is_err());
        assert!(parse_point("0,j").unwrap().to_ball(2, FieldSel::Complex).is_err());
        assert!(parse_point("0,1,0").unwrap().to_ball(2, FieldSel::Quaternion).is_err());
        assert!(parse_point("0,2").unwrap().to_ball(2, FieldSel::Quaternion).is_err());
    }

    #[test]
    fn cycles_and_vertices() {
        let c = parse_cycle("# tetrahedron\n0 1 2\n0 2 3 1\n0 3 1 1\n1 3 2\n").unwrap();
        assert!(c.is_closed());
        assert!(parse_cycle("0 1\n").is_err());
        let v = parse_vertices("0 0,-1\n1 inf\n").unwrap();
        assert_eq!(v.len(), 2);
        assert!(parse_vertices("0 0,1\n0 0,-1\n").is_err());
    }
}
