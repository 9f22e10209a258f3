//! Strongly orthogonal subsets and type A signatures.

use std::fmt;
use std::sync::Arc;

use crate::clique::{max_clique, BitGraph, CliqueResult, SearchOptions};
use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};

/// Two roots are strongly orthogonal when neither their sum nor their
/// difference is a root or zero. Zero is excluded so that `a` and `-a` are
/// never strongly orthogonal.
pub fn strongly_orthogonal(r: &RootSystem, a: &Root, b: &Root) -> Result<bool> {
    for x in [a, b] {
        if !r.contains(x) {
            return Err(Error::param(format!("{x} is not a root of {}", r.label())));
        }
    }
    Ok(so_unchecked(r, a, b))
}

fn so_unchecked(r: &RootSystem, a: &Root, b: &Root) -> bool {
    let (sum, diff) = (a + b, a - b);
    !sum.is_zero() && !diff.is_zero() && !r.contains(&sum) && !r.contains(&diff)
}

/// Strong orthogonality graph: vertices are root indices, edges join
/// distinct strongly orthogonal roots.
pub fn so_graph(r: &RootSystem) -> BitGraph {
    let roots = r.roots();
    BitGraph::from_fn(roots.len(), |i, j| so_unchecked(r, &roots[i], &roots[j]))
}

/// A set of pairwise strongly orthogonal roots.
///
/// Members keep the order they were given in; equality ignores order.
#[derive(Clone, Debug)]
pub struct SOSet {
    system: Arc<RootSystem>,
    members: Vec<Root>,
}

impl SOSet {
    pub fn new(system: Arc<RootSystem>, members: Vec<Root>) -> Result<Self> {
        for (i, a) in members.iter().enumerate() {
            if !system.contains(a) {
                return Err(Error::param(format!(
                    "{a} is not a root of {}",
                    system.label()
                )));
            }
            for b in &members[..i] {
                if a == b {
                    return Err(Error::param(format!("root {a} repeated")));
                }
                if !so_unchecked(&system, a, b) {
                    return Err(Error::param(format!(
                        "{a} and {b} are not strongly orthogonal"
                    )));
                }
            }
        }
        Ok(SOSet { system, members })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn members(&self) -> &[Root] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn sorted(&self) -> Vec<&Root> {
        let mut v: Vec<&Root> = self.members.iter().collect();
        v.sort();
        v
    }
}

impl PartialEq for SOSet {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.sorted() == other.sorted()
    }
}

impl Eq for SOSet {}

/// Every `k`-element strongly orthogonal subset, exactly once, in
/// lexicographic order of the sorted member lists.
pub fn enumerate_sos(r: &Arc<RootSystem>, k: usize) -> Result<SosIter> {
    if k == 0 {
        return Err(Error::param("subset size k must be at least 1"));
    }
    Ok(SosIter {
        system: Arc::clone(r),
        graph: so_graph(r),
        k,
        stack: Vec::with_capacity(k),
        next: 0,
        done: false,
    })
}

pub struct SosIter {
    system: Arc<RootSystem>,
    graph: BitGraph,
    k: usize,
    stack: Vec<usize>,
    /// Smallest candidate index for the next stack slot.
    next: usize,
    done: bool,
}

impl Iterator for SosIter {
    type Item = SOSet;

    fn next(&mut self) -> Option<SOSet> {
        let n = self.graph.len();
        while !self.done {
            let found =
                (self.next..n).find(|&v| self.stack.iter().all(|&u| self.graph.has_edge(u, v)));
            match found {
                Some(v) => {
                    self.stack.push(v);
                    self.next = v + 1;
                    if self.stack.len() == self.k {
                        let roots = self.system.roots();
                        let members = self.stack.iter().map(|&i| roots[i].clone()).collect();
                        self.next = self.stack.pop().expect("non-empty") + 1;
                        return Some(SOSet {
                            system: Arc::clone(&self.system),
                            members,
                        });
                    }
                }
                None => match self.stack.pop() {
                    Some(v) => self.next = v + 1,
                    None => self.done = true,
                },
            }
        }
        None
    }
}

/// Exact clique search on the strong orthogonality graph.
pub fn max_sos(r: &RootSystem, opts: &SearchOptions) -> CliqueResult {
    max_clique(&so_graph(r), opts)
}

/// Largest `k` with a non-empty set of `k` strongly orthogonal roots.
pub fn max_sos_size(r: &RootSystem) -> Result<usize> {
    let opts = SearchOptions::default();
    let res = max_sos(r, &opts);
    if !res.exact {
        return Err(Error::BudgetExhausted(opts.budget));
    }
    Ok(res.size())
}

/// The classical table of maximal strongly orthogonal set sizes, as
/// published for the irreducible systems. Kept for comparison with the
/// computed value; `None` for custom systems.
pub fn published_max_sos_size(family: Family, rank: usize) -> Option<usize> {
    match family {
        Family::A => Some((rank + 1) / 2),
        Family::B | Family::C => Some(rank),
        Family::D => Some(2 * (rank / 2)),
        Family::E => Some(match rank {
            6 => 4,
            7 => 7,
            _ => 8,
        }),
        Family::F => Some(3),
        Family::G => Some(2),
        Family::Custom => None,
    }
}

/// `{e_{1+j} - e_{k+1+j} : j = 0..k-1}` in `A_l`.
pub fn canonical_sos(k: usize, ell: usize) -> Result<SOSet> {
    if k == 0 || 2 * k > ell + 1 {
        return Err(Error::param(format!(
            "no strongly orthogonal {k}-subset exists in A{ell} (need 1 <= k <= (l+1)/2)"
        )));
    }
    let system = Arc::new(RootSystem::type_a(ell)?);
    let members = (0..k)
        .map(|j| Root::difference_of_units(ell + 1, j, k + j))
        .collect();
    Ok(SOSet { system, members })
}

/// Coordinate sum of the members of a type A strongly orthogonal set.
pub fn signature(g: &SOSet) -> Result<Signature> {
    if g.system.family() != Family::A {
        return Err(Error::param(format!(
            "signatures are defined for type A, not {}",
            g.system.label()
        )));
    }
    let mut sum = vec![0i32; g.system.ambient_dim()];
    for m in &g.members {
        for (s, &x) in sum.iter_mut().zip(m.coords()) {
            *s += x;
        }
    }
    Signature::from_i32(&sum, g.len())
}

/// Decomposes a signature into roots by matching the i-th smallest positive
/// coordinate with the i-th smallest negative one.
pub fn signature_to_sos(s: &Signature) -> SOSet {
    let n = s.len();
    let system = Arc::new(RootSystem::type_a(n - 1).expect("signature length is at least 2"));
    let members = s
        .positives()
        .into_iter()
        .zip(s.negatives())
        .map(|(p, q)| Root::difference_of_units(n, p, q))
        .collect();
    SOSet { system, members }
}

/// A vector over {-1, 0, +1} with exactly `k` entries of each sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    entries: Vec<i8>,
    k: usize,
}

/// Reason `v` fails to be a signature for `k`, if any.
pub(crate) fn signature_violation(v: &[i32], k: usize) -> Option<String> {
    if k == 0 {
        return Some("k must be at least 1".into());
    }
    if let Some((i, x)) = v.iter().enumerate().find(|(_, x)| !(-1..=1).contains(*x)) {
        return Some(format!("entry {x} at position {i} is outside {{-1,0,1}}"));
    }
    let pos = v.iter().filter(|&&x| x == 1).count();
    let neg = v.iter().filter(|&&x| x == -1).count();
    if pos != k || neg != k {
        return Some(format!(
            "has {pos} entries +1 and {neg} entries -1, expected {k} of each"
        ));
    }
    None
}

impl Signature {
    pub fn new(entries: Vec<i8>, k: usize) -> Result<Self> {
        let wide: Vec<i32> = entries.iter().map(|&x| x as i32).collect();
        match signature_violation(&wide, k) {
            Some(msg) => Err(Error::param(format!("invalid signature: {msg}"))),
            None => Ok(Signature { entries, k }),
        }
    }

    pub fn from_i32(v: &[i32], k: usize) -> Result<Self> {
        if let Some(msg) = signature_violation(v, k) {
            return Err(Error::param(format!("invalid signature: {msg}")));
        }
        Ok(Signature {
            entries: v.iter().map(|&x| x as i8).collect(),
            k,
        })
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn to_i32(&self) -> Vec<i32> {
        self.entries.iter().map(|&x| x as i32).collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of coordinates, `l + 1`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinates equal to +1 (the set X).
    pub fn positives(&self) -> Vec<usize> {
        self.positions(1)
    }

    /// Coordinates equal to -1 (the set Y).
    pub fn negatives(&self) -> Vec<usize> {
        self.positions(-1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i] != 0).collect()
    }

    fn positions(&self, sign: i8) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.entries[i] == sign)
            .collect()
    }

    pub fn negated(&self) -> Signature {
        Signature {
            entries: self.entries.iter().map(|x| -x).collect(),
            k: self.k,
        }
    }

    /// Entry-wise difference, not necessarily a signature.
    pub fn minus(&self, other: &Signature) -> Vec<i32> {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a as i32 - b as i32)
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(match x {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}
