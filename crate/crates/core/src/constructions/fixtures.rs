//! Literal matrices, embedded as data.

use crate::cliquesearch::CliqueFamily;

/// Incidence matrix of the Fano plane, rows are lines.
pub const FANO_INCIDENCE: [[u8; 7]; 7] = [
    [1, 1, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 1, 0, 0, 1],
    [0, 0, 1, 0, 1, 1, 0],
];

/// First row of [`FANO_INCIDENCE`] minus each subsequent row.
pub const FANO_DIFFERENCES: [[i32; 7]; 6] = [
    [0, 1, 1, -1, -1, 0, 0],
    [0, 1, 1, 0, 0, -1, -1],
    [1, 0, 1, -1, 0, -1, 0],
    [1, 0, 1, 0, -1, 0, -1],
    [1, 1, 0, -1, 0, 0, -1],
    [1, 1, 0, 0, -1, -1, 0],
];

/// Six pairwise adjacent signatures on eight columns, rows 1-3 a sunflower.
pub const EIGHT_COLUMN: [[i32; 8]; 6] = [
    [1, -1, 1, -1, 0, 0, 0, 0],
    [1, -1, 0, 0, 1, -1, 0, 0],
    [1, -1, 0, 0, 0, 0, 1, -1],
    [1, 0, 1, 0, 0, -1, 0, -1],
    [1, 0, 0, -1, 1, 0, 0, -1],
    [1, 0, 0, -1, 0, -1, 1, 0],
];

/// Seven 4-subsets of an 8-set meeting pairwise in two points.
pub const HADAMARD7: [[u8; 8]; 7] = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0],
    [1, 0, 0, 1, 1, 0, 0, 1],
    [0, 1, 0, 1, 1, 0, 1, 0],
    [0, 1, 1, 0, 1, 0, 0, 1],
];

fn family<const N: usize>(k: usize, rows: &[[i32; N]]) -> CliqueFamily {
    let rows: Vec<Vec<i32>> = rows.iter().map(|r| r.to_vec()).collect();
    CliqueFamily::from_rows(k, N - 1, &rows).expect("fixture rows are signatures")
}

pub fn fano_incidence_fixture() -> Vec<Vec<u8>> {
    FANO_INCIDENCE.iter().map(|r| r.to_vec()).collect()
}

/// `k = 2`, `l = 6`.
pub fn fano_fixture() -> CliqueFamily {
    family(2, &FANO_DIFFERENCES)
}

/// `k = 2`, `l = 7`.
pub fn eight_column_fixture() -> CliqueFamily {
    family(2, &EIGHT_COLUMN)
}

pub fn hadamard7_fixture() -> Vec<Vec<u8>> {
    HADAMARD7.iter().map(|r| r.to_vec()).collect()
}
