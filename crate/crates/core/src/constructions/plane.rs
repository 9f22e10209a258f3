//! The Desarguesian projective plane PG(2, q).

use std::fmt;

use super::field::FiniteField;
use crate::error::Result;

/// Points, lines and the 0/1 incidence matrix (rows are lines, columns are
/// points) of a projective plane of order `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    q: usize,
    points: Vec<Vec<u32>>,
    lines: Vec<Vec<u32>>,
    matrix: Vec<Vec<u8>>,
}

impl IncidenceStructure {
    /// Wraps a bare matrix; points and lines are labelled by index.
    pub fn from_matrix(q: usize, matrix: Vec<Vec<u8>>) -> Self {
        let cols = matrix.first().map_or(0, Vec::len);
        IncidenceStructure {
            q,
            points: (0..cols as u32).map(|i| vec![i]).collect(),
            lines: (0..matrix.len() as u32).map(|i| vec![i]).collect(),
            matrix,
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Normalised homogeneous coordinates, in field element encoding.
    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }
}

/// Nonzero triples over GF(q) with first nonzero coordinate 1, sorted.
fn normalized_triples(f: &FiniteField) -> Vec<Vec<u32>> {
    let q = f.order();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out.sort();
    out
}

pub fn projective_plane(q: u32) -> Result<IncidenceStructure> {
    let f = FiniteField::new(q)?;
    let points = normalized_triples(&f);
    let lines = points.clone();
    let matrix = lines
        .iter()
        .map(|l| {
            points
                .iter()
                .map(|p| {
                    let d = (0..3).fold(0, |acc, i| f.add(acc, f.mul(l[i], p[i])));
                    u8::from(d == 0)
                })
                .collect()
        })
        .collect();
    Ok(IncidenceStructure {
        q: q as usize,
        points,
        lines,
        matrix,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneViolation {
    /// Matrix is not `(q²+q+1) × (q²+q+1)`, or has entries outside {0,1}.
    Shape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    LineSize {
        line: usize,
        points: usize,
    },
    PointDegree {
        point: usize,
        lines: usize,
    },
    /// Two lines do not meet in exactly one point.
    LinesMeet {
        a: usize,
        b: usize,
        common: usize,
    },
    /// Two points do not lie on exactly one common line.
    PointsJoin {
        a: usize,
        b: usize,
        common: usize,
    },
    /// No four points with no three collinear.
    NoQuadrangle,
    /// `(N N^T)[i][j]` differs from `(qI + J)[i][j]`.
    Gram {
        i: usize,
        j: usize,
        value: usize,
        expected: usize,
    },
}

impl fmt::Display for PlaneViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneViolation::Shape {
                rows,
                cols,
                expected,
            } => {
                write!(
                    f,
                    "matrix is {rows}x{cols} (or not 0/1), expected {expected}x{expected}"
                )
            }
            PlaneViolation::LineSize { line, points } => {
                write!(f, "line {line} has {points} points")
            }
            PlaneViolation::PointDegree { point, lines } => {
                write!(f, "point {point} lies on {lines} lines")
            }
            PlaneViolation::LinesMeet { a, b, common } => {
                write!(f, "lines {a} and {b} share {common} points")
            }
            PlaneViolation::PointsJoin { a, b, common } => {
                write!(f, "points {a} and {b} share {common} lines")
            }
            PlaneViolation::NoQuadrangle => write!(f, "no four points in general position"),
            PlaneViolation::Gram {
                i,
                j,
                value,
                expected,
            } => {
                write!(f, "(N N^T)[{i}][{j}] = {value}, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneReport {
    pub violations: Vec<PlaneViolation>,
}

impl PlaneReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the projective plane axioms and `N N^T = qI + J`.
pub fn verify_plane(p: &IncidenceStructure) -> PlaneReport {
    let q = p.q;
    let v = q * q + q + 1;
    let m = &p.matrix;
    let mut out = Vec::new();
    if m.len() != v || m.iter().any(|r| r.len() != v || r.iter().any(|&x| x > 1)) {
        out.push(PlaneViolation::Shape {
            rows: m.len(),
            cols: m.first().map_or(0, Vec::len),
            expected: v,
        });
        return PlaneReport { violations: out };
    }

    for (i, row) in m.iter().enumerate() {
        let points = row.iter().filter(|&&x| x == 1).count();
        if points != q + 1 {
            out.push(PlaneViolation::LineSize { line: i, points });
        }
    }
    for j in 0..v {
        let lines = m.iter().filter(|r| r[j] == 1).count();
        if lines != q + 1 {
            out.push(PlaneViolation::PointDegree { point: j, lines });
        }
    }
    for a in 0..v {
        for b in a + 1..v {
            let common = (0..v).filter(|&j| m[a][j] == 1 && m[b][j] == 1).count();
            if common != 1 {
                out.push(PlaneViolation::LinesMeet { a, b, common });
            }
            let common = (0..v).filter(|&i| m[i][a] == 1 && m[i][b] == 1).count();
            if common != 1 {
                out.push(PlaneViolation::PointsJoin { a, b, common });
            }
        }
    }
    if !has_quadrangle(m) {
        out.push(PlaneViolation::NoQuadrangle);
    }
    for i in 0..v {
        for j in 0..v {
            let value = (0..v).map(|c| (m[i][c] * m[j][c]) as usize).sum();
            let expected = if i == j { q + 1 } else { 1 };
            if value != expected {
                out.push(PlaneViolation::Gram {
                    i,
                    j,
                    value,
                    expected,
                });
            }
        }
    }
    PlaneReport { violations: out }
}

fn has_quadrangle(m: &[Vec<u8>]) -> bool {
    let v = m.len();
    let collinear = |pts: &[usize]| m.iter().any(|row| pts.iter().all(|&p| row[p] == 1));
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                if collinear(&[a, b, c]) {
                    continue;
                }
                for d in c + 1..v {
                    if !collinear(&[a, b, d]) && !collinear(&[a, c, d]) && !collinear(&[b, c, d]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
