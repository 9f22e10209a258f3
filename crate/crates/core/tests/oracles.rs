//! Library results against brute-force oracles written from first
//! principles here, plus literal values.

use std::collections::HashSet;
use std::sync::Arc;

use soclique::clique::SearchOptions;
use soclique::cliquesearch::{
    agreement_set, all_signatures, build_diff_graph, has_distinct_agreement_sets, is_sos_clique,
    is_sunflower, mu_exact, CliqueFamily, Membership,
};
use soclique::constructions::{
    fano_fixture, fano_incidence_fixture, plane_clique, projective_plane, sunflower_clique,
};
use soclique::rootsys::{Family, Root, RootSystem};
use soclique::sos::{enumerate_sos, max_sos_size, strongly_orthogonal, Signature};

type Vector = Vec<i32>;

fn unit(n: usize, i: usize, c: i32) -> Vector {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn add(a: &[i32], b: &[i32]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i32], b: &[i32]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Root lists written out directly; `scale` multiplies every coordinate.
fn oracle_roots(family: Family, rank: usize) -> (Vec<Vector>, i32) {
    let mut out = Vec::new();
    let scale = match family {
        Family::A => {
            let n = rank + 1;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        out.push(sub(&unit(n, i, 1), &unit(n, j, 1)));
                    }
                }
            }
            1
        }
        Family::B | Family::C | Family::D => {
            let n = rank;
            for i in 0..n {
                for j in i + 1..n {
                    for si in [-1, 1] {
                        for sj in [-1, 1] {
                            out.push(add(&unit(n, i, si), &unit(n, j, sj)));
                        }
                    }
                }
                let long = match family {
                    Family::B => 1,
                    Family::C => 2,
                    _ => 0,
                };
                if long != 0 {
                    out.push(unit(n, i, long));
                    out.push(unit(n, i, -long));
                }
            }
            1
        }
        Family::F => {
            for i in 0..4 {
                out.push(unit(4, i, 2));
                out.push(unit(4, i, -2));
                for j in i + 1..4 {
                    for si in [-2, 2] {
                        for sj in [-2, 2] {
                            out.push(add(&unit(4, i, si), &unit(4, j, sj)));
                        }
                    }
                }
            }
            for mask in 0..16 {
                out.push(
                    (0..4)
                        .map(|b| if mask >> b & 1 == 1 { -1 } else { 1 })
                        .collect(),
                );
            }
            2
        }
        Family::G => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        out.push(sub(&unit(3, i, 1), &unit(3, j, 1)));
                        let k = 3 - i - j;
                        let v = sub(&sub(&unit(3, i, 2), &unit(3, j, 1)), &unit(3, k, 1));
                        out.push(v.clone());
                        out.push(v.iter().map(|x| -x).collect());
                    }
                }
            }
            out.sort();
            out.dedup();
            1
        }
        _ => unreachable!("not covered by this oracle"),
    };
    (out, scale)
}

fn oracle_so(roots: &HashSet<Vector>, a: &[i32], b: &[i32]) -> bool {
    let bad = |v: Vector| v.iter().all(|&x| x == 0) || roots.contains(&v);
    !bad(add(a, b)) && !bad(sub(a, b))
}

/// Plain Bron–Kerbosch without pivoting: clique number of an adjacency
/// predicate on `0..n`.
fn oracle_clique_number(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> usize {
    fn bk(
        r: usize,
        p: Vec<usize>,
        x: Vec<usize>,
        adj: &dyn Fn(usize, usize) -> bool,
        best: &mut usize,
    ) {
        if p.is_empty() && x.is_empty() {
            *best = (*best).max(r);
            return;
        }
        if r + p.len() <= *best {
            return;
        }
        let mut p = p;
        let mut x = x;
        while let Some(v) = p.pop() {
            let np = p.iter().copied().filter(|&u| adj(u, v)).collect();
            let nx = x.iter().copied().filter(|&u| adj(u, v)).collect();
            bk(r + 1, np, nx, adj, best);
            x.push(v);
        }
    }
    let mut best = 0;
    bk(0, (0..n).collect(), Vec::new(), adj, &mut best);
    best
}

fn oracle_max_sos(family: Family, rank: usize) -> usize {
    let (roots, _) = oracle_roots(family, rank);
    let set: HashSet<Vector> = roots.iter().cloned().collect();
    let m: Vec<Vec<bool>> = roots
        .iter()
        .map(|a| {
            roots
                .iter()
                .map(|b| a != b && oracle_so(&set, a, b))
                .collect()
        })
        .collect();
    oracle_clique_number(roots.len(), &|u, v| m[u][v])
}

const SMALL_SYSTEMS: [(Family, usize); 16] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 2),
    (Family::C, 3),
    (Family::C, 4),
    (Family::D, 2),
    (Family::D, 3),
    (Family::D, 4),
    (Family::B, 4),
    (Family::F, 4),
    (Family::G, 2),
];

#[test]
fn root_lists_match_direct_construction() {
    for (family, rank) in SMALL_SYSTEMS {
        let r = RootSystem::build(family, rank).unwrap();
        let (roots, scale) = oracle_roots(family, rank);
        assert_eq!(r.scale(), scale, "{family}{rank}");
        let lib: HashSet<Vector> = r.roots().iter().map(|x| x.coords().to_vec()).collect();
        let want: HashSet<Vector> = roots.into_iter().collect();
        assert_eq!(lib, want, "{family}{rank}");
    }
}

#[test]
fn strong_orthogonality_matches_oracle() {
    for (family, rank) in SMALL_SYSTEMS {
        let r = RootSystem::build(family, rank).unwrap();
        let set: HashSet<Vector> = r.roots().iter().map(|x| x.coords().to_vec()).collect();
        for a in r.roots() {
            for b in r.roots() {
                assert_eq!(
                    strongly_orthogonal(&r, a, b).unwrap(),
                    oracle_so(&set, a.coords(), b.coords()),
                    "{family}{rank}: {a} {b}"
                );
            }
        }
    }
}

#[test]
fn max_sos_matches_oracle() {
    for (family, rank) in SMALL_SYSTEMS {
        let r = RootSystem::build(family, rank).unwrap();
        assert_eq!(
            max_sos_size(&r).unwrap(),
            oracle_max_sos(family, rank),
            "{family}{rank}"
        );
    }
}

#[test]
fn f4_has_four_strongly_orthogonal_roots() {
    let r = RootSystem::build(Family::F, 4).unwrap();
    // e1 - e2, e1 + e2, e3 - e4, e3 + e4 in doubled coordinates
    let set =
        [[2, -2, 0, 0], [2, 2, 0, 0], [0, 0, 2, -2], [0, 0, 2, 2]].map(|v| Root::new(v.to_vec()));
    for a in &set {
        assert!(r.contains(a));
        for b in &set {
            if a != b {
                assert!(strongly_orthogonal(&r, a, b).unwrap(), "{a} {b}");
            }
        }
    }
    assert_eq!(max_sos_size(&r).unwrap(), 4);
}

/// Number of `k`-sets of roots of `A_l` with pairwise disjoint supports:
/// `n! / ((n - 2k)! k!)`.
fn disjoint_support_count(k: usize, ell: usize) -> usize {
    let n = ell + 1;
    if 2 * k > n {
        return 0;
    }
    let fall: usize = (n - 2 * k + 1..=n).product();
    fall / (1..=k).product::<usize>()
}

#[test]
fn enumerate_sos_counts() {
    for ell in 1..=5 {
        let r = Arc::new(RootSystem::type_a(ell).unwrap());
        for k in 1..=2 {
            let all: Vec<_> = enumerate_sos(&r, k).unwrap().collect();
            assert_eq!(all.len(), disjoint_support_count(k, ell), "k={k} l={ell}");
            let distinct: HashSet<Vec<Vector>> = all
                .iter()
                .map(|s| {
                    let mut v: Vec<Vector> =
                        s.members().iter().map(|x| x.coords().to_vec()).collect();
                    v.sort();
                    v
                })
                .collect();
            assert_eq!(distinct.len(), all.len());
        }
    }
}

/// Signatures listed by brute force over `{-1,0,1}^n`.
fn oracle_signatures(k: usize, ell: usize) -> Vec<Vec<i32>> {
    let n = ell + 1;
    let mut out = Vec::new();
    for mut code in 0..3usize.pow(n as u32) {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push((code % 3) as i32 - 1);
            code /= 3;
        }
        if v.iter().filter(|&&x| x == 1).count() == k && v.iter().filter(|&&x| x == -1).count() == k
        {
            out.push(v);
        }
    }
    out
}

fn oracle_mu(k: usize, ell: usize) -> usize {
    let sigs = oracle_signatures(k, ell);
    let adj = |u: usize, v: usize| {
        let d = sub(&sigs[u], &sigs[v]);
        d.iter().all(|x| x.abs() <= 1)
            && d.iter().filter(|&&x| x == 1).count() == k
            && d.iter().filter(|&&x| x == -1).count() == k
    };
    oracle_clique_number(sigs.len(), &adj)
}

#[test]
fn signature_lists_match_brute_force() {
    for (k, ell) in [(1, 3), (2, 5), (2, 6), (3, 6)] {
        let lib: HashSet<Vector> = all_signatures(k, ell)
            .iter()
            .map(Signature::to_i32)
            .collect();
        let want: HashSet<Vector> = oracle_signatures(k, ell).into_iter().collect();
        assert_eq!(lib, want);
    }
}

#[test]
fn mu_matches_oracle() {
    for (k, max_ell) in [(1, 6), (2, 7), (3, 6)] {
        for ell in 1..=max_ell {
            let r = mu_exact(k, ell, &SearchOptions::default()).unwrap();
            assert!(r.exact);
            assert_eq!(r.value, oracle_mu(k, ell), "k={k} l={ell}");
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn row_set<T: Clone + Ord>(rows: &[Vec<T>], perm: &[usize]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = rows
        .iter()
        .map(|r| perm.iter().map(|&c| r[c].clone()).collect())
        .collect();
    out.sort();
    out
}

#[test]
fn fano_fixture_is_plane_clique_up_to_columns() {
    let ours = plane_clique(2).unwrap().rows();
    let fixture = row_set(&fano_fixture().rows(), &(0..7).collect::<Vec<_>>());
    assert!(permutations(7).iter().any(|p| row_set(&ours, p) == fixture));
}

#[test]
fn fano_incidence_is_pg_2_2_up_to_rows_and_columns() {
    let ours = projective_plane(2).unwrap().matrix().to_vec();
    let fixture = row_set(&fano_incidence_fixture(), &(0..7).collect::<Vec<_>>());
    // rows are compared as a sorted set, so only columns need permuting
    assert!(permutations(7).iter().any(|p| row_set(&ours, p) == fixture));
}

#[test]
fn plane_clique_pairs_split_as_expected() {
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let f = plane_clique(q).unwrap();
        let q = q as usize;
        let m = f.members();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let s = agreement_set(&m[i], &m[j]).unwrap();
                let pos = s.iter().filter(|&&c| m[i].entries()[c] == 1).count();
                let neg = s.len() - pos;
                assert!(
                    (pos, neg) == (q, 0) || (pos, neg) == (q - 1, 1),
                    "q={q} ({pos},{neg})"
                );
            }
        }
    }
}

/// Depth-first enumeration of cliques of the difference graph, extending
/// only while `keep` holds for the current family (a hereditary property).
fn hereditary_cliques(
    k: usize,
    ell: usize,
    keep: &dyn Fn(&CliqueFamily) -> bool,
    visit: &mut dyn FnMut(&CliqueFamily),
) {
    let g = build_diff_graph(k, ell).unwrap();
    let n = g.len();
    fn rec(
        g: &soclique::cliquesearch::DiffGraph,
        chosen: &mut Vec<usize>,
        start: usize,
        n: usize,
        keep: &dyn Fn(&CliqueFamily) -> bool,
        visit: &mut dyn FnMut(&CliqueFamily),
    ) {
        for v in start..n {
            if !chosen.iter().all(|&u| g.adjacency().has_edge(u, v)) {
                continue;
            }
            chosen.push(v);
            let f = g.family(chosen);
            if keep(&f) {
                visit(&f);
                rec(g, chosen, v + 1, n, keep, visit);
            }
            chosen.pop();
        }
    }
    rec(&g, &mut Vec::new(), 0, n, keep, visit);
}

#[test]
fn distinct_agreement_sets_bound_k2() {
    // C(4, 2) + 1
    let bound = 7;
    for ell in 3..=7 {
        let mut largest = 0;
        hereditary_cliques(
            2,
            ell,
            &|f| {
                let sets: Vec<Vec<usize>> = (0..f.len())
                    .flat_map(|i| (i + 1..f.len()).map(move |j| (i, j)))
                    .map(|(i, j)| agreement_set(&f.members()[i], &f.members()[j]).unwrap())
                    .collect();
                let unique: HashSet<&Vec<usize>> = sets.iter().collect();
                unique.len() == sets.len()
            },
            &mut |f| {
                assert!(has_distinct_agreement_sets(f).unwrap());
                largest = largest.max(f.len());
            },
        );
        assert!(largest <= bound, "l={ell}: {largest}");
    }
}

#[test]
fn sunflowers_found_by_search_obey_the_bound() {
    for k in 1..=3 {
        for ell in 2 * k - 1..=9 {
            let bound = (ell + 1) / k - 1;
            let mut largest = 0;
            hereditary_cliques(
                k,
                ell,
                &|f| f.len() < 2 || is_sunflower(f).unwrap(),
                &mut |f| {
                    assert!(is_sos_clique(f, Membership::Graph).is_valid());
                    largest = largest.max(f.len());
                },
            );
            assert!(
                largest <= bound.max(1),
                "k={k} l={ell}: {largest} > {bound}"
            );
            assert_eq!(
                largest,
                sunflower_clique(k, ell).unwrap().len().max(1),
                "k={k} l={ell}"
            );
        }
    }
}
