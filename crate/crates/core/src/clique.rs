//! Exact maximum clique search.
//!
//! Branch-and-bound over bitset candidate sets with a greedy sequential
//! colouring bound, vertices pre-sorted in degeneracy order. The search runs
//! in two phases:
//!
//! 1. Find the clique number. Top-level branches are processed in fixed-size
//!    rounds; every branch in a round sees the incumbent from the start of the
//!    round, so node counts and the merged result do not depend on how many
//!    workers ran the round.
//! 2. Recover the lexicographically least maximum clique by a depth-first
//!    pass in natural vertex order, pruned by the known target size.
//!
//! The node budget bounds each phase separately. If phase 2 runs out, the
//! phase 1 clique is returned; it is still maximum but may not be the
//! lexicographically least one.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::bitset::BitSet;

/// Number of top-level branches evaluated between incumbent updates.
const ROUND: usize = 64;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    rows: Vec<BitSet>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        BitGraph {
            rows: vec![BitSet::new(n); n],
        }
    }

    /// Builds a graph from a symmetric predicate, evaluated once per unordered pair.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self loops are not allowed");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Graph with vertex `i` of the result equal to vertex `order[i]` of `self`.
    pub fn relabel(&self, order: &[usize]) -> BitGraph {
        let n = self.len();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = BitGraph::new(n);
        for (i, &v) in order.iter().enumerate() {
            for u in self.rows[v].iter() {
                h.rows[i].insert(pos[u]);
            }
        }
        h
    }

    /// Induced subgraph on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> BitGraph {
        BitGraph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node expansion limit, applied to each search phase.
    pub budget: u64,
    /// Worker threads for top-level branches; results do not depend on it.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    /// Vertex indices in ascending order.
    pub clique: Vec<usize>,
    /// True iff the search completed, so `clique` is maximum.
    pub exact: bool,
    /// Node expansions over both phases.
    pub nodes: u64,
}

impl CliqueResult {
    pub fn size(&self) -> usize {
        self.clique.len()
    }
}

/// Vertices in degeneracy order: repeatedly remove a minimum-degree vertex,
/// smallest index first among ties.
pub fn degeneracy_order(g: &BitGraph) -> Vec<usize> {
    let n = g.len();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = BitSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("alive set is non-empty");
        alive.remove(v);
        for u in g.neighbors(v).iter() {
            if alive.contains(u) {
                deg[u] -= 1;
            }
        }
        order.push(v);
    }
    order
}

/// Exact maximum clique with deterministic output.
///
/// Among maximum cliques the lexicographically least sorted index set is
/// returned whenever the canonicalisation phase finishes within budget.
pub fn max_clique(g: &BitGraph, opts: &SearchOptions) -> CliqueResult {
    let n = g.len();
    if n == 0 {
        return CliqueResult {
            clique: Vec::new(),
            exact: true,
            nodes: 0,
        };
    }

    let order = degeneracy_order(g);
    let h = g.relabel(&order);
    let (best, exact, nodes1) = find_clique_number(&h, opts);
    let mut phase1: Vec<usize> = best.iter().map(|&i| order[i]).collect();
    phase1.sort_unstable();

    if !exact {
        return CliqueResult {
            clique: phase1,
            exact: false,
            nodes: nodes1,
        };
    }

    let target = phase1.len();
    let mut p = Vec::with_capacity(target);
    let mut nodes2 = 0;
    let found = lex_least(g, &mut p, BitSet::full(n), target, &mut nodes2, opts.budget);
    let clique = match found {
        Some(true) => p,
        // Some(false) cannot happen when phase 1 is exact.
        _ => phase1,
    };
    debug_assert!(g.is_clique(&clique));
    CliqueResult {
        clique,
        exact: true,
        nodes: nodes1 + nodes2,
    }
}

struct BranchOutcome {
    improved: Option<Vec<usize>>,
    nodes: u64,
    completed: bool,
}

fn find_clique_number(h: &BitGraph, opts: &SearchOptions) -> (Vec<usize>, bool, u64) {
    let n = h.len();
    let mut incumbent = greedy_clique(h);
    let mut used: u64 = 0;

    // Dense cores sit at the end of a degeneracy order; start there.
    let branches: Vec<usize> = (0..n).rev().collect();
    for round in branches.chunks(ROUND) {
        let remaining = opts.budget.saturating_sub(used);
        let start = &incumbent;
        let run = |&i: &usize| run_branch(h, i, start, remaining);
        let outcomes: Vec<BranchOutcome> = if opts.workers <= 1 {
            round.iter().map(run).collect()
        } else {
            pool(opts.workers).install(|| round.par_iter().map(run).collect())
        };

        let mut completed = true;
        let mut winner: Option<Vec<usize>> = None;
        for o in outcomes {
            used = used.saturating_add(o.nodes);
            completed &= o.completed;
            if let Some(c) = o.improved {
                winner = Some(match winner {
                    None => c,
                    Some(w) => better(w, c),
                });
            }
        }
        if let Some(w) = winner {
            if w.len() > incumbent.len() {
                incumbent = w;
            }
        }
        if !completed || used > opts.budget {
            return (incumbent, false, used);
        }
    }
    (incumbent, true, used)
}

/// Larger clique wins; ties go to the lexicographically smaller sorted set.
fn better(a: Vec<usize>, b: Vec<usize>) -> Vec<usize> {
    if a.len() != b.len() {
        return if a.len() > b.len() { a } else { b };
    }
    let mut sa = a.clone();
    let mut sb = b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sb < sa {
        b
    } else {
        a
    }
}

fn run_branch(h: &BitGraph, i: usize, incumbent: &[usize], limit: u64) -> BranchOutcome {
    let mut cand = h.neighbors(i).clone();
    cand.clear_through(i);
    if cand.count() < incumbent.len() {
        return BranchOutcome {
            improved: None,
            nodes: 0,
            completed: true,
        };
    }
    let mut best = incumbent.to_vec();
    let mut p = vec![i];
    let mut nodes = 0;
    let completed = expand(h, &mut p, cand, &mut best, &mut nodes, limit);
    let improved = (best.len() > incumbent.len()).then_some(best);
    BranchOutcome {
        improved,
        nodes,
        completed,
    }
}

/// Returns false when the node limit was hit.
fn expand(
    h: &BitGraph,
    p: &mut Vec<usize>,
    mut cand: BitSet,
    best: &mut Vec<usize>,
    nodes: &mut u64,
    limit: u64,
) -> bool {
    *nodes += 1;
    if *nodes > limit {
        return false;
    }
    if cand.is_empty() {
        if p.len() > best.len() {
            *best = p.clone();
        }
        return true;
    }
    let (verts, colors) = color_sort(h, &cand);
    for idx in (0..verts.len()).rev() {
        if p.len() + colors[idx] <= best.len() {
            return true;
        }
        let v = verts[idx];
        let mut next = cand.clone();
        next.intersect_with(h.neighbors(v).words());
        p.push(v);
        if !expand(h, p, next, best, nodes, limit) {
            return false;
        }
        p.pop();
        cand.remove(v);
    }
    true
}

/// Greedy sequential colouring of `cand`; vertices listed in colour order
/// with the colour (1-based) each received.
fn color_sort(h: &BitGraph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.clone();
    let mut verts = Vec::with_capacity(cand.count());
    let mut colors = Vec::with_capacity(verts.capacity());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(h.neighbors(v).words());
            uncolored.remove(v);
            verts.push(v);
            colors.push(color);
        }
    }
    (verts, colors)
}

fn color_count(g: &BitGraph, cand: &BitSet, enough: usize) -> usize {
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() && color < enough {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbors(v).words());
            uncolored.remove(v);
        }
    }
    color
}

/// Depth-first search in ascending vertex order for a clique of exactly
/// `target` vertices; the first one found is lexicographically least.
/// `None` means the node limit was hit.
fn lex_least(
    g: &BitGraph,
    p: &mut Vec<usize>,
    mut cand: BitSet,
    target: usize,
    nodes: &mut u64,
    limit: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > limit {
        return None;
    }
    if p.len() == target {
        return Some(true);
    }
    let need = target - p.len();
    if cand.count() < need || color_count(g, &cand, need) < need {
        return Some(false);
    }
    while let Some(v) = cand.first() {
        cand.remove(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v).words());
        p.push(v);
        if lex_least(g, p, next, target, nodes, limit)? {
            return Some(true);
        }
        p.pop();
        if cand.count() < need {
            break;
        }
    }
    Some(false)
}

/// Cheap initial incumbent: greedy extension from the last few vertices of
/// the degeneracy order, always taking the highest candidate.
fn greedy_clique(h: &BitGraph) -> Vec<usize> {
    let n = h.len();
    let mut best = Vec::new();
    for start in (n.saturating_sub(32)..n).rev() {
        let mut c = vec![start];
        let mut cand = h.neighbors(start).clone();
        while let Some(v) = cand.iter().last() {
            c.push(v);
            cand.remove(v);
            cand.intersect_with(h.neighbors(v).words());
        }
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

fn pool(workers: usize) -> Arc<rayon::ThreadPool> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    pools
        .entry(workers)
        .or_insert_with(|| {
            Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .expect("failed to build thread pool"),
            )
        })
        .clone()
}
