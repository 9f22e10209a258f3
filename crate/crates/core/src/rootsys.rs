//! Root systems in standard coordinates.
//!
//! Roots are integer vectors. Systems whose standard coordinates contain
//! half-integers (E6, E7, E8, F4) are stored scaled by 2; the scale is kept
//! on the [`RootSystem`] and every ratio used by the axioms is invariant
//! under it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// A user-supplied vector set, not necessarily a root system.
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::param(format!(
                "unknown root system family {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root(coords)
    }

    /// `e_i - e_j` in dimension `dim`, 0-indexed.
    pub fn difference_of_units(dim: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] += 1;
        v[j] -= 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i32> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Root) -> i64 {
        dot(&self.0, &other.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }
}

impl std::ops::Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum()
}

/// An immutable root set with an exact membership index.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    scale: i32,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.rank == other.rank
            && self.scale == other.scale
            && self.roots == other.roots
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Builds the irreducible root system of the given family and rank.
    ///
    /// Supported: `A_l` (l >= 1), `B_l`, `C_l` (l >= 1), `D_l` (l >= 2),
    /// `E_6`, `E_7`, `E_8`, `F_4`, `G_2`.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let unsupported = || Error::param(format!("unsupported root system {family}{rank}"));
        let (dim, scale, roots) = match (family, rank) {
            (_, 0) => return Err(unsupported()),
            (Family::A, l) => (l + 1, 1, type_a(l)),
            (Family::B, l) => (l, 1, type_bcd(l, Some(1))),
            (Family::C, l) => (l, 1, type_bcd(l, Some(2))),
            (Family::D, l) if l >= 2 => (l, 1, type_bcd(l, None)),
            (Family::E, 6..=8) => (8, 2, type_e(rank)),
            (Family::F, 4) => (4, 2, type_f4()),
            (Family::G, 2) => (3, 1, type_g2()),
            _ => return Err(unsupported()),
        };
        Self::assemble(family, rank, dim, scale, roots)
    }

    /// Type `A_l`, the system most of this crate works in.
    pub fn type_a(ell: usize) -> Result<Self> {
        Self::build(Family::A, ell)
    }

    /// Wraps an arbitrary vector set so the axiom checker can be run on it.
    pub fn custom(rank: usize, ambient_dim: usize, roots: Vec<Root>) -> Result<Self> {
        if let Some(r) = roots.iter().find(|r| r.dim() != ambient_dim) {
            return Err(Error::param(format!(
                "vector {r} has length {}, expected {ambient_dim}",
                r.dim()
            )));
        }
        Self::assemble(Family::Custom, rank, ambient_dim, 1, roots)
    }

    fn assemble(
        family: Family,
        rank: usize,
        ambient_dim: usize,
        scale: i32,
        mut roots: Vec<Root>,
    ) -> Result<Self> {
        roots.sort();
        roots.dedup();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(RootSystem {
            family,
            rank,
            ambient_dim,
            scale,
            roots,
            index,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Factor by which stored coordinates exceed the standard ones.
    pub fn scale(&self) -> i32 {
        self.scale
    }

    /// Roots in lexicographic order of their coordinate vectors.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Position of `r` in [`roots`](Self::roots).
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_root(&self, v: &[i32]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::param(format!(
                "vector has length {}, {} lives in dimension {}",
                v.len(),
                self.label(),
                self.ambient_dim
            )));
        }
        Ok(self.index.contains_key(&Root(v.to_vec())))
    }

    /// `alpha_i = e_i - e_{i+1}` for `i = 1..l`. Type A only.
    pub fn simple_roots(&self) -> Result<Vec<Root>> {
        if self.family != Family::A {
            return Err(Error::param(format!(
                "simple roots are only provided for type A, not {}",
                self.label()
            )));
        }
        Ok((0..self.rank)
            .map(|i| Root::difference_of_units(self.ambient_dim, i, i + 1))
            .collect())
    }

    /// Checks the four root system axioms, collecting every failure.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();
        let roots = &self.roots;

        let span = integer_rank(roots.iter().map(Root::coords));
        if span != self.rank {
            violations.push(AxiomViolation::Span {
                expected: self.rank,
                actual: span,
            });
        }
        if let Some(z) = roots.iter().find(|r| r.is_zero()) {
            violations.push(AxiomViolation::ZeroVector { root: z.clone() });
        }

        for a in roots {
            if a.is_zero() {
                continue;
            }
            let neg = -a;
            if !self.contains(&neg) {
                violations.push(AxiomViolation::MissingNegative { root: a.clone() });
            }
            for b in roots {
                if b != a && *b != neg && !b.is_zero() && parallel(a.coords(), b.coords()) {
                    violations.push(AxiomViolation::ExtraMultiple {
                        root: a.clone(),
                        multiple: b.clone(),
                    });
                }
            }
        }

        for a in roots.iter().filter(|r| !r.is_zero()) {
            let aa = a.dot(a);
            for b in roots {
                let ab2 = 2 * a.dot(b);
                if ab2 % aa != 0 {
                    violations.push(AxiomViolation::NonIntegral {
                        alpha: a.clone(),
                        beta: b.clone(),
                    });
                }
                // aa * s_a(b) = aa * b - 2<a,b> a, exact in integers
                let scaled: Vec<i64> = b
                    .coords()
                    .iter()
                    .zip(a.coords())
                    .map(|(&bi, &ai)| aa * bi as i64 - ab2 * ai as i64)
                    .collect();
                let image = scaled
                    .iter()
                    .all(|x| x % aa == 0)
                    .then(|| Root(scaled.iter().map(|x| (x / aa) as i32).collect()));
                if !image.is_some_and(|img| self.contains(&img)) {
                    violations.push(AxiomViolation::NotReflectionClosed {
                        alpha: a.clone(),
                        beta: b.clone(),
                    });
                }
            }
        }
        AxiomReport { violations }
    }
}

fn parallel(a: &[i32], b: &[i32]) -> bool {
    (0..a.len())
        .all(|i| (0..a.len()).all(|j| a[i] as i64 * b[j] as i64 == a[j] as i64 * b[i] as i64))
}

/// Rank over the rationals, by fraction-free elimination.
pub fn integer_rank<'a>(rows: impl Iterator<Item = &'a [i32]>) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for r in rank + 1..m.len() {
            let f = m[r][c];
            if f == 0 {
                continue;
            }
            for (x, &y) in m[r].iter_mut().zip(&pivot) {
                *x = *x * pivot[c] - f * y;
            }
            let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                m[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Axiom 1: the roots span a space of the wrong dimension.
    Span { expected: usize, actual: usize },
    /// Axiom 1: the zero vector is present.
    ZeroVector { root: Root },
    /// Axiom 2: `-root` is absent.
    MissingNegative { root: Root },
    /// Axiom 2: a multiple other than `±root` is present.
    ExtraMultiple { root: Root, multiple: Root },
    /// Axiom 3: the reflection of `beta` in `alpha` is not a root.
    NotReflectionClosed { alpha: Root, beta: Root },
    /// Axiom 4: `2<alpha,beta>/<alpha,alpha>` is not an integer.
    NonIntegral { alpha: Root, beta: Root },
}

impl AxiomViolation {
    pub fn axiom(&self) -> u8 {
        match self {
            AxiomViolation::Span { .. } | AxiomViolation::ZeroVector { .. } => 1,
            AxiomViolation::MissingNegative { .. } | AxiomViolation::ExtraMultiple { .. } => 2,
            AxiomViolation::NotReflectionClosed { .. } => 3,
            AxiomViolation::NonIntegral { .. } => 4,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Span { expected, actual } => {
                write!(
                    f,
                    "axiom 1: roots span dimension {actual}, expected {expected}"
                )
            }
            AxiomViolation::ZeroVector { root } => write!(f, "axiom 1: zero vector {root} present"),
            AxiomViolation::MissingNegative { root } => {
                write!(f, "axiom 2: negative of {root} missing")
            }
            AxiomViolation::ExtraMultiple { root, multiple } => {
                write!(f, "axiom 2: {multiple} is a forbidden multiple of {root}")
            }
            AxiomViolation::NotReflectionClosed { alpha, beta } => {
                write!(f, "axiom 3: reflection of {beta} in {alpha} is not a root")
            }
            AxiomViolation::NonIntegral { alpha, beta } => {
                write!(
                    f,
                    "axiom 4: 2<a,b>/<a,a> not integral for a={alpha}, b={beta}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated_axioms(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.violations.iter().map(AxiomViolation::axiom).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn unit(dim: usize, i: usize, c: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn type_a(ell: usize) -> Vec<Root> {
    let n = ell + 1;
    let mut out = Vec::with_capacity(n * ell);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Root::difference_of_units(n, i, j));
            }
        }
    }
    out
}

/// `±e_i ± e_j` plus, when `short` is set, `±short·e_i` (1 for B, 2 for C).
fn type_bcd(ell: usize, short: Option<i32>) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..ell {
        if let Some(c) = short {
            out.push(Root(unit(ell, i, c)));
            out.push(Root(unit(ell, i, -c)));
        }
        for j in i + 1..ell {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; ell];
                v[i] = si;
                v[j] = sj;
                out.push(Root(v));
            }
        }
    }
    out
}

/// E8 scaled by 2: `±2e_i ± 2e_j` and `(±1,…,±1)` with an even number of minus signs.
fn e8_scaled() -> Vec<Root> {
    let mut out: Vec<Root> = type_bcd(8, None)
        .into_iter()
        .map(|r| Root(r.0.iter().map(|x| 2 * x).collect()))
        .collect();
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(Root(
                (0..8)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect(),
            ));
        }
    }
    out
}

/// E7 and E6 as centralisers in E8 of `(1,…,1)` and of the A2 spanned by
/// `(1,…,1)` and `(0,…,0,-2,-2)` (scaled coordinates).
fn type_e(rank: usize) -> Vec<Root> {
    let theta1 = Root(vec![1; 8]);
    let theta2 = Root(vec![0, 0, 0, 0, 0, 0, -2, -2]);
    let e8 = e8_scaled();
    match rank {
        8 => e8,
        7 => e8.into_iter().filter(|r| r.dot(&theta1) == 0).collect(),
        6 => e8
            .into_iter()
            .filter(|r| r.dot(&theta1) == 0 && r.dot(&theta2) == 0)
            .collect(),
        _ => unreachable!("rank checked by caller"),
    }
}

/// F4 scaled by 2: `±2e_i`, `±2e_i ± 2e_j`, `(±1,±1,±1,±1)`.
fn type_f4() -> Vec<Root> {
    let mut out: Vec<Root> = type_bcd(4, Some(1))
        .into_iter()
        .map(|r| Root(r.0.iter().map(|x| 2 * x).collect()))
        .collect();
    for mask in 0u32..16 {
        out.push(Root(
            (0..4)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        ));
    }
    out
}

/// G2 in the plane `x+y+z = 0`: `±(e_i - e_j)` and `±(2e_i - e_j - e_k)`.
fn type_g2() -> Vec<Root> {
    let mut out = type_a(2);
    for i in 0..3 {
        let mut v = vec![-1; 3];
        v[i] = 2;
        out.push(Root(v.iter().map(|x| -x).collect()));
        out.push(Root(v));
    }
    out
}
