//! Plain-text group files.
//!
//! ```text
//! # comment
//! kind = amalgam          # or hnn
//! dim = 2
//! generator axis alpha
//!   1 0 0
//!   0 1.0314 0.2526
//!   0 0.2526 1.0314
//! end
//! generator g1 a
//!   ...
//! end
//! generator g2 b
//!   ...
//! end
//! ```
//!
//! Matrix rows list `dim + 1` quaternion literals (`0.5-0.25i+1e-3k`)
//! separated by whitespace. Roles are `axis` (exactly one), `g1` and `g2`;
//! names are optional.

use std::fmt::Write as _;

use crate::algebra::Quaternion;
use crate::error::GeomError;
use crate::isometry::Isometry;
use crate::linalg::QMatrix;

use super::{DecompositionKind, Generator, GroupData};

fn perr(line: usize, msg: impl std::fmt::Display) -> GeomError {
    GeomError::Parse(format!("line {line}: {msg}"))
}

pub fn parse_group(text: &str) -> Result<GroupData, GeomError> {
    let mut kind = None;
    let mut dim: Option<usize> = None;
    let mut axis = None;
    let mut gamma1 = Vec::new();
    let mut gamma2 = Vec::new();
    let mut current: Option<(String, String, usize, Vec<Vec<Quaternion>>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((role, name, start, rows)) = current.as_mut() {
            if line == "end" {
                let n = dim.ok_or_else(|| perr(ln, "dim must be set before generators"))?;
                if rows.len() != n + 1 {
                    return Err(perr(*start, format!("generator needs {} rows, found {}", n + 1, rows.len())));
                }
                let m = QMatrix::from_rows(std::mem::take(rows))?;
                let g = Isometry::new(m).map_err(|e| perr(*start, e))?;
                let gen = Generator::new(name.clone(), g);
                match role.as_str() {
                    "axis" => {
                        if axis.replace(gen).is_some() {
                            return Err(perr(*start, "more than one axis generator"));
                        }
                    }
                    "g1" => gamma1.push(gen),
                    _ => gamma2.push(gen),
                }
                current = None;
                continue;
            }
            let n = dim.ok_or_else(|| perr(ln, "dim must be set before generators"))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<Quaternion>().map_err(|e| perr(ln, e)))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != n + 1 {
                return Err(perr(ln, format!("expected {} entries, found {}", n + 1, row.len())));
            }
            rows.push(row);
            continue;
        }
        if let Some(rest) = line.strip_prefix("generator") {
            let mut parts = rest.split_whitespace();
            let role = parts.next().ok_or_else(|| perr(ln, "missing generator role"))?;
            if !matches!(role, "axis" | "g1" | "g2") {
                return Err(perr(ln, format!("unknown generator role '{role}'")));
            }
            let name = parts.next().unwrap_or(role).to_string();
            current = Some((role.to_string(), name, ln, Vec::new()));
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| perr(ln, format!("unexpected '{line}'")))?;
        match key.trim() {
            "kind" => {
                kind = Some(match value.trim() {
                    "amalgam" => DecompositionKind::Amalgam,
                    "hnn" => DecompositionKind::Hnn,
                    other => return Err(perr(ln, format!("unknown kind '{other}'"))),
                })
            }
            "dim" => {
                let n: usize = value.trim().parse().map_err(|_| perr(ln, "dim must be a positive integer"))?;
                if n < 1 {
                    return Err(perr(ln, "dim must be a positive integer"));
                }
                dim = Some(n);
            }
            other => return Err(perr(ln, format!("unknown key '{other}'"))),
        }
    }
    if current.is_some() {
        return Err(GeomError::Parse("unterminated generator block".into()));
    }
    let kind = kind.ok_or_else(|| GeomError::Parse("missing 'kind'".into()))?;
    let axis = axis.ok_or_else(|| GeomError::Parse("missing axis generator".into()))?;
    GroupData::new(kind, axis, gamma1, gamma2)
}

pub fn write_group(g: &GroupData) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "kind = {}", g.kind.name());
    let _ = writeln!(s, "dim = {}", g.dim());
    let roles = std::iter::once(("axis", &g.axis))
        .chain(g.gamma1.iter().map(|x| ("g1", x)))
        .chain(g.gamma2.iter().map(|x| ("g2", x)));
    for (role, gen) in roles {
        let _ = writeln!(s, "generator {role} {}", gen.name);
        let m = gen.g.matrix();
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(|q| q.to_string()).collect();
            let _ = writeln!(s, "  {}", row.join(" "));
        }
        let _ = writeln!(s, "end");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::examples::fuchsian_amalgam;

    #[test]
    fn round_trip() {
        let g = fuchsian_amalgam(0.5).unwrap();
        let text = write_group(&g);
        assert_eq!(parse_group(&text).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "kind = amalgam\ndim = 2\ngenerator axis\n1 0 0\n0 2 0\n0 0 1\nend\n";
        let e = parse_group(text).unwrap_err().to_string();
        assert!(e.contains("line 3"), "{e}");
        assert!(parse_group("kind = other\n").is_err());
        assert!(parse_group("dim = 2\ngenerator axis\n1 0\n").is_err());
        assert!(parse_group("kind = hnn\ndim = 1\n").is_err());
    }
}
