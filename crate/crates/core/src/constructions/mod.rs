//! Explicit SOS-cliques: sunflowers, projective plane cliques, literal
//! fixtures, and exhaustive sign assignment for 0/1 matrices.

pub mod field;
pub mod fixtures;
pub mod plane;

pub use field::FiniteField;
pub use fixtures::{eight_column_fixture, fano_fixture, fano_incidence_fixture, hadamard7_fixture};
pub use plane::{projective_plane, verify_plane, IncidenceStructure, PlaneReport, PlaneViolation};

use crate::cliquesearch::{CliqueFamily, Membership};
use crate::error::{Error, Result};
use crate::sos::Signature;

/// `r_1 - r_i` for the rows of the PG(2, q) incidence matrix: `q² + q`
/// signatures with `k = q`, `l = q² + q`.
pub fn plane_clique(q: u32) -> Result<CliqueFamily> {
    let plane = projective_plane(q)?;
    let m = plane.matrix();
    let first = &m[0];
    let rows: Vec<Vec<i32>> = m[1..]
        .iter()
        .map(|r| {
            first
                .iter()
                .zip(r)
                .map(|(&a, &b)| a as i32 - b as i32)
                .collect()
        })
        .collect();
    let q = q as usize;
    CliqueFamily::from_rows(q, q * q + q, &rows)
}

/// Common core on columns `0..k` (all +1) and disjoint petals of `k`
/// columns each (all -1): `floor((l + 1 - k) / k)` members.
pub fn sunflower_clique(k: usize, ell: usize) -> Result<CliqueFamily> {
    if k == 0 || ell + 1 < 2 * k {
        return Err(Error::param(format!(
            "a sunflower needs l + 1 >= 2k with k >= 1, got k={k}, l={ell}"
        )));
    }
    let n = ell + 1;
    let petals = (n - k) / k;
    let members = (0..petals)
        .map(|i| {
            let mut v = vec![0i8; n];
            v[..k].fill(1);
            v[k + i * k..k + (i + 1) * k].fill(-1);
            Signature::new(v, k).expect("k entries of each sign")
        })
        .collect();
    CliqueFamily::new(k, ell, members)
}

/// Chooses `k` negative positions inside each row's support so that the
/// signed rows form an SOS-clique. Rows are assigned depth-first, each
/// choice checked against the rows already placed. `None` if no assignment
/// exists.
pub fn sign_search(m: &[Vec<u8>], k: usize) -> Result<Option<Vec<Vec<i8>>>> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let Some(width) = m.first().map(Vec::len) else {
        return Ok(Some(Vec::new()));
    };
    for (i, row) in m.iter().enumerate() {
        let weight = row.iter().filter(|&&x| x == 1).count();
        if row.len() != width || weight != 2 * k || row.iter().any(|&x| x > 1) {
            return Err(Error::param(format!(
                "row {i} must be a 0/1 vector of length {width} with {} ones, has {weight}",
                2 * k
            )));
        }
    }

    let options: Vec<Vec<Signature>> = m
        .iter()
        .map(|row| {
            let support: Vec<usize> = (0..width).filter(|&c| row[c] == 1).collect();
            subsets(&support, k)
                .into_iter()
                .map(|neg| {
                    let mut v: Vec<i8> = row.iter().map(|&x| x as i8).collect();
                    neg.iter().for_each(|&c| v[c] = -1);
                    Signature::new(v, k).expect("k of each sign")
                })
                .collect()
        })
        .collect();

    fn place(options: &[Vec<Signature>], chosen: &mut Vec<Signature>) -> bool {
        let Some(opts) = options.get(chosen.len()) else {
            return true;
        };
        for s in opts {
            let fits = chosen
                .iter()
                .all(|t| t != s && crate::cliquesearch::is_valid_signature(&s.minus(t), s.k()));
            if fits {
                chosen.push(s.clone());
                if place(options, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(m.len());
    if !place(&options, &mut chosen) {
        return Ok(None);
    }
    debug_assert!(CliqueFamily::new(k, width - 1, chosen.clone())
        .map(|f| crate::cliquesearch::is_sos_clique(&f, Membership::Graph).is_valid())
        .unwrap_or(false));
    Ok(Some(chosen.iter().map(|s| s.entries().to_vec()).collect()))
}

/// `r`-subsets of `items`, in lexicographic order.
fn subsets(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if items.len() < r {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], r - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets(&items[1..], r));
    with
}
