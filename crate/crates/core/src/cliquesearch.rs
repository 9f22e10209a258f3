//! SOS-cliques in type A.
//!
//! A family of signatures is an SOS-clique when the difference of any two
//! members is again a signature. Writing `X` and `Y` for the positive and
//! negative supports, `s - t` is a signature exactly when `X_s ∩ Y_t` and
//! `Y_s ∩ X_t` are empty and `|X_s ∩ X_t| + |Y_s ∩ Y_t| = k`. The
//! difference graph has every signature as a vertex and these pairs as
//! edges, so `mu_k(A_l)` is its clique number.

use std::collections::HashSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::clique::{max_clique, BitGraph, SearchOptions};
use crate::error::{Error, Result};
use crate::sos::{signature_violation, Signature};

/// Largest difference graph [`build_diff_graph`] will allocate.
pub const MAX_DIFF_GRAPH_VERTICES: usize = 20_000;

pub fn is_valid_signature(v: &[i32], k: usize) -> bool {
    signature_violation(v, k).is_none()
}

fn check_pair(s: &Signature, t: &Signature) -> Result<()> {
    if s.len() != t.len() || s.k() != t.k() {
        return Err(Error::param(format!(
            "signatures differ in shape: length {} k={} vs length {} k={}",
            s.len(),
            s.k(),
            t.len(),
            t.k()
        )));
    }
    if s == t {
        return Err(Error::param("edge test needs two distinct signatures"));
    }
    Ok(())
}

struct PairCounts {
    xs_yt: usize,
    ys_xt: usize,
    xx: usize,
    yy: usize,
}

fn pair_counts(s: &Signature, t: &Signature) -> PairCounts {
    let mut c = PairCounts {
        xs_yt: 0,
        ys_xt: 0,
        xx: 0,
        yy: 0,
    };
    for (&a, &b) in s.entries().iter().zip(t.entries()) {
        match (a, b) {
            (1, -1) => c.xs_yt += 1,
            (-1, 1) => c.ys_xt += 1,
            (1, 1) => c.xx += 1,
            (-1, -1) => c.yy += 1,
            _ => {}
        }
    }
    c
}

/// Whether `s - t` is a signature. Computed both as a difference vector and
/// through the set-pair intersection conditions; the two must agree.
pub fn is_edge(s: &Signature, t: &Signature) -> Result<bool> {
    check_pair(s, t)?;
    let by_difference = is_valid_signature(&s.minus(t), s.k());
    let c = pair_counts(s, t);
    let by_sets = c.xs_yt == 0 && c.ys_xt == 0 && c.xx + c.yy == s.k();
    assert_eq!(
        by_difference, by_sets,
        "edge characterisations disagree on {s} / {t}"
    );
    Ok(by_difference)
}

/// Coordinates where both signatures are nonzero, for an edge `(s, t)`.
pub fn agreement_set(s: &Signature, t: &Signature) -> Result<Vec<usize>> {
    check_pair(s, t)?;
    let c = pair_counts(s, t);
    if c.xs_yt > 0 || c.ys_xt > 0 {
        return Err(Error::param(format!(
            "not an edge: cross intersections have sizes {} and {}, expected 0",
            c.xs_yt, c.ys_xt
        )));
    }
    if c.xx + c.yy != s.k() {
        return Err(Error::param(format!(
            "not an edge: |X∩X'| + |Y∩Y'| = {} + {} != k = {}",
            c.xx,
            c.yy,
            s.k()
        )));
    }
    Ok((0..s.len())
        .filter(|&i| s.entries()[i] != 0 && t.entries()[i] != 0)
        .collect())
}

/// How to read the clique condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Membership {
    /// Each pairwise difference must be some signature.
    #[default]
    Graph,
    /// Each pairwise difference must itself be a member of the family.
    Strict,
}

/// Distinct signatures sharing `k` and length `l + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    k: usize,
    ell: usize,
    members: Vec<Signature>,
}

impl CliqueFamily {
    pub fn new(k: usize, ell: usize, members: Vec<Signature>) -> Result<Self> {
        if k == 0 || ell == 0 {
            return Err(Error::param(format!(
                "need k >= 1 and l >= 1, got k={k}, l={ell}"
            )));
        }
        let mut seen = HashSet::new();
        for (i, m) in members.iter().enumerate() {
            if m.len() != ell + 1 || m.k() != k {
                return Err(Error::param(format!(
                    "member {i} has length {} and k={}, expected length {} and k={k}",
                    m.len(),
                    m.k(),
                    ell + 1
                )));
            }
            if !seen.insert(m) {
                return Err(Error::param(format!(
                    "member {i} repeats an earlier member"
                )));
            }
        }
        Ok(CliqueFamily { k, ell, members })
    }

    /// Validates each row as a signature first.
    pub fn from_rows(k: usize, ell: usize, rows: &[Vec<i32>]) -> Result<Self> {
        let members = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                Signature::from_i32(r, k).map_err(|e| Error::param(format!("member {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, ell, members)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn members(&self) -> &[Signature] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.members.iter().map(Signature::to_i32).collect()
    }

    /// Same family restricted to its first `n` members.
    pub fn truncated(&self, n: usize) -> CliqueFamily {
        CliqueFamily {
            k: self.k,
            ell: self.ell,
            members: self.members[..n.min(self.len())].to_vec(),
        }
    }
}

impl fmt::Display for CliqueFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    /// `members[i] - members[j]`.
    pub difference: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks every ordered pair `i != j`.
pub fn is_sos_clique(f: &CliqueFamily, mode: Membership) -> Verdict {
    let members: HashSet<Vec<i32>> = match mode {
        Membership::Strict => f.members.iter().map(Signature::to_i32).collect(),
        Membership::Graph => HashSet::new(),
    };
    let mut violations = Vec::new();
    for (i, s) in f.members.iter().enumerate() {
        for (j, t) in f.members.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = s.minus(t);
            let ok = match mode {
                Membership::Graph => is_valid_signature(&d, f.k),
                Membership::Strict => members.contains(&d),
            };
            if !ok {
                violations.push(Violation {
                    i,
                    j,
                    difference: d,
                });
            }
        }
    }
    if violations.is_empty() {
        Verdict::Valid
    } else {
        Verdict::Invalid(violations)
    }
}

fn require_clique(f: &CliqueFamily) -> Result<()> {
    match is_sos_clique(f, Membership::Graph) {
        Verdict::Valid => Ok(()),
        Verdict::Invalid(v) => Err(Error::param(format!(
            "family is not an SOS-clique: members {} and {} differ by {:?}",
            v[0].i, v[0].j, v[0].difference
        ))),
    }
}

fn agreement_sets(f: &CliqueFamily) -> Vec<Vec<usize>> {
    let m = &f.members;
    let mut out = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            out.push(agreement_set(&m[i], &m[j]).expect("clique pairs are edges"));
        }
    }
    out
}

/// All pairwise agreement sets coincide. Families of size at most two are
/// sunflowers.
pub fn is_sunflower(f: &CliqueFamily) -> Result<bool> {
    require_clique(f)?;
    let sets = agreement_sets(f);
    Ok(sets.windows(2).all(|w| w[0] == w[1]))
}

/// Distinct pairs of members have distinct agreement sets.
pub fn has_distinct_agreement_sets(f: &CliqueFamily) -> Result<bool> {
    require_clique(f)?;
    let sets = agreement_sets(f);
    let unique: HashSet<&Vec<usize>> = sets.iter().collect();
    Ok(unique.len() == sets.len())
}

/// Every signature of length `l + 1` for `k`, in lexicographic order
/// (`-1 < 0 < +1` per entry).
pub fn all_signatures(k: usize, ell: usize) -> Vec<Signature> {
    fn rec(
        n: usize,
        pos: usize,
        neg: usize,
        cur: &mut Vec<i8>,
        k: usize,
        out: &mut Vec<Signature>,
    ) {
        let i = cur.len();
        if i == n {
            if pos == k && neg == k {
                out.push(Signature::new(cur.clone(), k).expect("counts checked"));
            }
            return;
        }
        let left = n - i;
        if (k - pos) + (k - neg) > left {
            return;
        }
        for x in [-1i8, 0, 1] {
            let (p, q) = match x {
                1 => (pos + 1, neg),
                -1 => (pos, neg + 1),
                _ => (pos, neg),
            };
            if p <= k && q <= k {
                cur.push(x);
                rec(n, p, q, cur, k, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k >= 1 && 2 * k <= ell + 1 {
        rec(ell + 1, 0, 0, &mut Vec::with_capacity(ell + 1), k, &mut out);
    }
    out
}

pub fn binomial(n: u64, r: u64) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `C(l+1, k) * C(l+1-k, k)`, the number of signatures.
pub fn signature_count(k: usize, ell: usize) -> Option<u128> {
    let n = ell as u64 + 1;
    let k = k as u64;
    if 2 * k > n {
        return Some(0);
    }
    binomial(n, k)?.checked_mul(binomial(n - k, k)?)
}

/// Signatures packed as positive and negative coordinate masks.
#[derive(Clone, Copy)]
struct Masks {
    pos: u128,
    neg: u128,
}

impl Masks {
    fn of(s: &Signature) -> Self {
        let mut m = Masks { pos: 0, neg: 0 };
        for (i, &x) in s.entries().iter().enumerate() {
            match x {
                1 => m.pos |= 1 << i,
                -1 => m.neg |= 1 << i,
                _ => {}
            }
        }
        m
    }

    fn adjacent(self, o: Masks, k: u32) -> bool {
        self.pos & o.neg == 0
            && self.neg & o.pos == 0
            && (self.pos & o.pos).count_ones() + (self.neg & o.neg).count_ones() == k
    }
}

/// Graph on signatures with edges where the difference is a signature.
#[derive(Clone, Debug)]
pub struct DiffGraph {
    k: usize,
    ell: usize,
    vertices: Vec<Signature>,
    adjacency: BitGraph,
}

impl DiffGraph {
    /// Graph on the given signatures only.
    pub fn from_vertices(k: usize, ell: usize, vertices: Vec<Signature>) -> Result<Self> {
        let family = CliqueFamily::new(k, ell, vertices)?;
        let vertices = family.members;
        let adjacency = if ell < 128 {
            let masks: Vec<Masks> = vertices.iter().map(Masks::of).collect();
            BitGraph::from_fn(vertices.len(), |i, j| masks[i].adjacent(masks[j], k as u32))
        } else {
            BitGraph::from_fn(vertices.len(), |i, j| {
                is_edge(&vertices[i], &vertices[j]).expect("distinct, same shape")
            })
        };
        Ok(DiffGraph {
            k,
            ell,
            vertices,
            adjacency,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn vertices(&self) -> &[Signature] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &BitGraph {
        &self.adjacency
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, s: &Signature) -> Option<usize> {
        self.vertices.iter().position(|v| v == s)
    }

    pub fn family(&self, indices: &[usize]) -> CliqueFamily {
        CliqueFamily {
            k: self.k,
            ell: self.ell,
            members: indices.iter().map(|&i| self.vertices[i].clone()).collect(),
        }
    }
}

/// The full difference graph for `(k, l)`; empty when `2k > l + 1`.
pub fn build_diff_graph(k: usize, ell: usize) -> Result<DiffGraph> {
    if k == 0 || ell == 0 {
        return Err(Error::param(format!(
            "need k >= 1 and l >= 1, got k={k}, l={ell}"
        )));
    }
    match signature_count(k, ell) {
        Some(c) if c <= MAX_DIFF_GRAPH_VERTICES as u128 => {}
        c => {
            return Err(Error::param(format!(
                "difference graph for k={k}, l={ell} has {} vertices, limit is {MAX_DIFF_GRAPH_VERTICES}",
                c.map_or("too many".into(), |c| c.to_string())
            )))
        }
    }
    DiffGraph::from_vertices(k, ell, all_signatures(k, ell))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuResult {
    pub value: usize,
    pub witness: CliqueFamily,
    /// True iff the search finished, so `value` equals `mu_k(A_l)`.
    pub exact: bool,
    pub nodes: u64,
}

/// `mu_k(A_l)` as the clique number of the difference graph.
pub fn mu_exact(k: usize, ell: usize, opts: &SearchOptions) -> Result<MuResult> {
    let g = build_diff_graph(k, ell)?;
    let r = max_clique(&g.adjacency, opts);
    Ok(MuResult {
        value: r.size(),
        witness: g.family(&r.clique),
        exact: r.exact,
        nodes: r.nodes,
    })
}

/// Largest family satisfying the strict membership reading, by exhaustive
/// enumeration of the cliques of the difference graph.
pub fn mu_exact_strict(k: usize, ell: usize, budget: u64) -> Result<MuResult> {
    let g = build_diff_graph(k, ell)?;
    let adj = &g.adjacency;
    let mut best: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    let mut stack: Vec<(Vec<usize>, BitSet)> = vec![(Vec::new(), BitSet::full(g.len()))];
    let mut exact = true;
    while let Some((clique, cand)) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            exact = false;
            break;
        }
        if clique.len() > best.len()
            && is_sos_clique(&g.family(&clique), Membership::Strict).is_valid()
        {
            best = clique.clone();
        }
        for v in cand.iter().collect::<Vec<_>>().into_iter().rev() {
            let mut next = cand.clone();
            next.clear_through(v);
            next.intersect_with(adj.neighbors(v).words());
            let mut c = clique.clone();
            c.push(v);
            stack.push((c, next));
        }
    }
    Ok(MuResult {
        value: best.len(),
        witness: g.family(&best),
        exact,
        nodes,
    })
}

/// Signatures outside `f` that are adjacent to every member of `f`.
pub fn extensions(f: &CliqueFamily) -> Vec<Signature> {
    all_signatures(f.k, f.ell)
        .into_iter()
        .filter(|s| !f.members.contains(s))
        .filter(|s| {
            f.members
                .iter()
                .all(|m| is_edge(s, m).expect("distinct, same shape"))
        })
        .collect()
}

/// First clique of exactly `size` members, in lexicographic order of vertex
/// indices, that is not a sunflower. The flag is false if the budget ran out
/// before the search finished.
pub fn find_non_sunflower_clique(
    k: usize,
    ell: usize,
    size: usize,
    budget: u64,
) -> Result<(Option<CliqueFamily>, bool)> {
    let g = build_diff_graph(k, ell)?;
    let adj = &g.adjacency;
    let mut nodes = 0u64;

    fn rec(
        g: &DiffGraph,
        adj: &BitGraph,
        p: &mut Vec<usize>,
        mut cand: BitSet,
        size: usize,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<Option<Vec<usize>>> {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if p.len() == size {
            let f = g.family(p);
            let sunflower = is_sunflower(&f).expect("clique by construction");
            return Some((!sunflower).then(|| p.clone()));
        }
        while let Some(v) = cand.first() {
            if p.len() + cand.count() < size {
                break;
            }
            cand.remove(v);
            let mut next = cand.clone();
            next.intersect_with(adj.neighbors(v).words());
            p.push(v);
            if let Some(found) = rec(g, adj, p, next, size, nodes, budget)? {
                return Some(Some(found));
            }
            p.pop();
        }
        Some(None)
    }

    let mut p = Vec::new();
    match rec(
        &g,
        adj,
        &mut p,
        BitSet::full(g.len()),
        size,
        &mut nodes,
        budget,
    ) {
        Some(found) => Ok((found.map(|c| g.family(&c)), true)),
        None => Ok((None, false)),
    }
}

/// Closed-form bounds around `mu_k(A_l)`, with `n = l + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsRecord {
    pub k: usize,
    pub ell: usize,
    /// `n`, valid for every `k`.
    pub general_upper: u128,
    /// `floor((n - k) / k)`, the size of the largest sunflower.
    pub sunflower_value: i128,
    /// `k * 4^k`; beyond it maximum cliques are sunflowers.
    pub regime_threshold: u128,
    /// `floor(n / k) - 1`, the sunflower size bound.
    pub sunflower_lemma_upper: i128,
    /// `C(2k, k) + 1`, for cliques with pairwise distinct agreement sets.
    pub distinct_intersection_upper: u128,
    /// `C(n, s)`, Ray-Chaudhuri–Wilson for `s` allowed intersection sizes.
    pub rcw: Option<u128>,
    /// `C(n - 1, k - 1)`, Erdős–Ko–Rado for intersecting `k`-sets.
    pub ekr: u128,
    /// `C(k1 + k2, k1)`, Bollobás for cross-intersecting set pairs.
    pub bollobas: Option<u128>,
}

pub fn bounds(
    k: usize,
    ell: usize,
    s: Option<usize>,
    k1k2: Option<(usize, usize)>,
) -> Result<BoundsRecord> {
    if k == 0 || ell == 0 {
        return Err(Error::param(format!(
            "need k >= 1 and l >= 1, got k={k}, l={ell}"
        )));
    }
    let overflow = || Error::param(format!("bounds overflow for k={k}, l={ell}"));
    let n = ell as u64 + 1;
    let kk = k as u64;
    let ki = k as i128;
    let ni = n as i128;
    let rcw = match s {
        Some(s) if s >= k => {
            return Err(Error::param(format!(
                "intersection-size count s={s} must be below k={k}"
            )))
        }
        Some(s) => Some(binomial(n, s as u64).ok_or_else(overflow)?),
        None => None,
    };
    let bollobas = match k1k2 {
        Some((0, _) | (_, 0)) => return Err(Error::param("k1 and k2 must be at least 1")),
        Some((k1, k2)) => Some(binomial((k1 + k2) as u64, k1 as u64).ok_or_else(overflow)?),
        None => None,
    };
    let four_k = 4u128.checked_pow(k as u32).ok_or_else(overflow)?;
    Ok(BoundsRecord {
        k,
        ell,
        general_upper: n as u128,
        sunflower_value: (ni - ki).div_euclid(ki),
        regime_threshold: four_k.checked_mul(kk as u128).ok_or_else(overflow)?,
        sunflower_lemma_upper: ni.div_euclid(ki) - 1,
        distinct_intersection_upper: binomial(2 * kk, kk)
            .and_then(|c| c.checked_add(1))
            .ok_or_else(overflow)?,
        rcw,
        ekr: binomial(n - 1, kk - 1).ok_or_else(overflow)?,
        bollobas,
    })
}

/// Closed form of `mu_2(A_l)`: `0,0,1,1,3` for `l <= 5`, then 6 up to
/// `l = 13`, then `floor((l - 1) / 2)`.
pub fn smalla_predicted(ell: usize) -> Result<usize> {
    const SMALL: [usize; 5] = [0, 0, 1, 1, 3];
    match ell {
        0 => Err(Error::param("l must be at least 1")),
        1..=5 => Ok(SMALL[ell - 1]),
        6..=13 => Ok(6),
        _ => Ok((ell - 1) / 2),
    }
}
