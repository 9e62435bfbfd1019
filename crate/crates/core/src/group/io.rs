//! Text format for explicit generator matrices:
//!
//! ```text
//! conductor 4
//! dim 2
//! generator
//! 0, 1
//! 1, 0
//! generator
//! 1, 0
//! 0, z^2
//! ```
//!
//! Entries use the scalar syntax with `z` a primitive root of the
//! conductor. Blank lines and `#` comments are ignored.

use super::{GroupError, GroupSpec};
use crate::linalg::Matrix;
use crate::scalars::{parse_scalar, CycNumber};

pub fn parse_group_file(text: &str) -> Result<GroupSpec, GroupError> {
    let mut conductor = None;
    let mut dim = None;
    let mut generators: Vec<Vec<Vec<CycNumber>>> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: &str| GroupError::Spec(format!("line {}: {m}", ln + 1));
        if let Some(v) = line.strip_prefix("conductor") {
            conductor = Some(v.trim().parse::<u32>().map_err(|_| err("bad conductor"))?);
        } else if let Some(v) = line.strip_prefix("dim") {
            dim = Some(v.trim().parse::<usize>().map_err(|_| err("bad dimension"))?);
        } else if line == "generator" {
            generators.push(Vec::new());
        } else {
            let n = conductor.ok_or_else(|| err("conductor must come first"))?;
            let cur = generators.last_mut().ok_or_else(|| err("matrix row outside a generator block"))?;
            let row = line
                .split(',')
                .map(|e| {
                    parse_scalar(e, n)
                        .map_err(|x| err(&x.to_string()))?
                        .as_constant()
                        .ok_or_else(|| err("matrix entries must be constants"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            cur.push(row);
        }
    }
    let conductor = conductor.ok_or_else(|| GroupError::Spec("missing conductor".into()))?;
    let dim = dim.ok_or_else(|| GroupError::Spec("missing dim".into()))?;
    let generators = generators
        .into_iter()
        .map(|rows| {
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(GroupError::Spec(format!("generators must be {dim}x{dim}")));
            }
            Ok(Matrix::from_rows(rows))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSpec::Explicit { conductor, dim, generators })
}

pub fn write_group_file(conductor: u32, generators: &[Matrix<CycNumber>]) -> String {
    let dim = generators.first().map_or(0, Matrix::rows);
    let mut out = format!("conductor {conductor}\ndim {dim}\n");
    for g in generators {
        out.push_str("generator\n");
        for i in 0..g.rows() {
            let row: Vec<String> = g.row(i).iter().map(|x| x.render_at(conductor).unwrap()).collect();
            out.push_str(&row.join(", "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ReflectionGroup;

    #[test]
    fn file_round_trip_builds_same_group() {
        let text = "conductor 4\ndim 2\ngenerator\n1, 0\n0, -1\ngenerator\n0, 1\n1, 0\ngenerator\n0, -z\nz, 0\n";
        let spec = parse_group_file(text).unwrap();
        let w = ReflectionGroup::build(&spec).unwrap();
        assert_eq!(w.order(), 16);
        let GroupSpec::Explicit { conductor, generators, .. } = &spec else { unreachable!() };
        let again = parse_group_file(&write_group_file(*conductor, generators)).unwrap();
        assert_eq!(ReflectionGroup::build(&again).unwrap().order(), 16);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(parse_group_file("conductor 1\ndim 2\ngenerator\n1\n").is_err());
        assert!(parse_group_file("dim 2\n").is_err());
    }
}
