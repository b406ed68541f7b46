//! Reference computations for the integration tests, written against the
//! definitions and sharing no code paths with the library beyond its plain
//! data accessors.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use flag_gamma::nestohedra::{BuildingSet, Subset};
use flag_gamma::{FlagComplex, SubdivisionSequence};

pub type Face = BTreeSet<u32>;
pub type Faces = BTreeSet<Face>;

/// Faces of the boundary of the cross-polytope on the given antipodal pairs:
/// from each pair pick nothing, one end, or the other.
pub fn cross_polytope_faces(pairs: &[(u32, u32)]) -> Faces {
    let mut faces = Faces::from([Face::new()]);
    for &(a, b) in pairs {
        faces = faces
            .iter()
            .flat_map(|f| {
                let mut fa = f.clone();
                fa.insert(a);
                let mut fb = f.clone();
                fb.insert(b);
                [f.clone(), fa, fb]
            })
            .collect();
    }
    faces
}

/// Stellar subdivision in the face `s` with new vertex `v`: faces not
/// containing `s` stay, and every face `A ∪ B ∪ {v}` is added with
/// `A ⊊ s` and `B ∪ s` a face.
pub fn stellar(faces: &Faces, s: &Face, v: u32) -> Faces {
    let mut out: Faces = faces.iter().filter(|f| !s.is_subset(f)).cloned().collect();
    let sv: Vec<u32> = s.iter().copied().collect();
    for f in faces.iter().filter(|f| s.is_subset(f)) {
        let rest: Face = f.difference(s).copied().collect();
        for mask in 0..(1u32 << sv.len()) - 1 {
            let mut g = rest.clone();
            g.extend(
                sv.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            );
            g.insert(v);
            out.insert(g);
        }
    }
    out
}

/// Face sets of `Θ^0, …, Θ^k` replayed by stellar subdivision.
pub fn replay_faces(seq: &SubdivisionSequence) -> Vec<Faces> {
    let pairs: Vec<(u32, u32)> = seq.pairs().iter().map(|(a, b)| (a.0, b.0)).collect();
    let mut all = vec![cross_polytope_faces(&pairs)];
    for step in seq.steps() {
        let s = Face::from([step.edge.0 .0, step.edge.1 .0]);
        let next = stellar(all.last().unwrap(), &s, step.new_vertex.0);
        all.push(next);
    }
    all
}

pub fn face_counts(faces: &Faces) -> Vec<i64> {
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut counts = vec![0i64; top + 1];
    for f in faces {
        counts[f.len()] += 1;
    }
    counts
}

/// Every set of pairwise adjacent vertices is a face. Checked one vertex at
/// a time: a face plus a vertex adjacent to all of it must be a face.
pub fn is_flag(faces: &Faces) -> bool {
    let vertices: Vec<u32> = faces
        .iter()
        .filter(|f| f.len() == 1)
        .flatten()
        .copied()
        .collect();
    let adjacent = |a: u32, b: u32| faces.contains(&Face::from([a, b]));
    faces.iter().all(|f| {
        vertices.iter().all(|&v| {
            f.contains(&v)
                || !f.iter().all(|&u| adjacent(u, v))
                || faces.contains(&f.iter().copied().chain([v]).collect::<Face>())
        })
    })
}

/// The faces of a flag complex, listed by testing every vertex subset.
pub fn brute_cliques(g: &FlagComplex) -> Faces {
    let vs: Vec<u32> = g.vertices().map(|v| v.0).collect();
    assert!(vs.len() <= 22, "brute force is for small graphs");
    let adjacent: BTreeSet<(u32, u32)> = g.edges().map(|(a, b)| (a.0, b.0)).collect();
    (0u64..1 << vs.len())
        .map(|mask| -> Face {
            vs.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .filter(|f| {
            f.iter()
                .all(|&a| f.iter().all(|&b| a >= b || adjacent.contains(&(a, b))))
        })
        .collect()
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn pow(base: &[i64], e: usize) -> Vec<i64> {
    (0..e).fold(vec![1], |acc, _| mul(&acc, base))
}

pub fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `h(t) = Σ f_i t^i (1 - t)^(d - i)`.
pub fn h_by_substitution(f: &[i64], d: usize) -> Vec<i64> {
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        let term = mul(&pow(&[0, 1], i), &pow(&[1, -1], d - i));
        for (j, c) in term.into_iter().enumerate() {
            h[j] += fi * c;
        }
    }
    trim(h)
}

/// `h(t) = Σ γ_i t^i (1 + t)^(d - 2i)`.
pub fn h_from_gamma(gamma: &[i64], d: usize) -> Vec<i64> {
    let mut h = vec![0i64; d + 1];
    for (i, &g) in gamma.iter().enumerate() {
        let term = mul(&pow(&[0, 1], i), &pow(&[1, 1], d - 2 * i));
        for (j, c) in term.into_iter().enumerate() {
            h[j] += g * c;
        }
    }
    trim(h)
}

/// Solves `h = Σ γ_i t^i (1+t)^(d-2i)` for γ, reading coefficients `h_0,
/// h_1, …` in turn; `None` if no γ reproduces `h`.
pub fn gamma_by_solving(h: &[i64], d: usize) -> Option<Vec<i64>> {
    let hc = |i: usize| h.get(i).copied().unwrap_or(0);
    let mut gamma: Vec<i64> = Vec::new();
    for i in 0..=d / 2 {
        let known: i64 = gamma
            .iter()
            .enumerate()
            .map(|(j, &g)| g * binomial((d - 2 * j) as i64, (i - j) as i64))
            .sum();
        gamma.push(hc(i) - known);
    }
    let gamma = trim(gamma);
    (h_from_gamma(&gamma, d) == trim(h.to_vec())).then_some(gamma)
}

pub fn gamma_of_faces(faces: &Faces, d: usize) -> Option<Vec<i64>> {
    gamma_by_solving(&h_by_substitution(&face_counts(faces), d), d)
}

/// Per-vertex K-sets of every `Θ^j`, replayed from the vertex rules: the new
/// vertex gets the intersection of its endpoints' sets, and every other
/// neighbour of the new vertex gains it. Adjacency comes from `faces`.
pub fn k_by_vertex_rules(
    seq: &SubdivisionSequence,
    faces: &[Faces],
) -> Vec<BTreeMap<u32, BTreeSet<u32>>> {
    let mut maps = vec![faces[0]
        .iter()
        .filter(|f| f.len() == 1)
        .map(|f| (*f.first().unwrap(), BTreeSet::new()))
        .collect::<BTreeMap<_, _>>()];
    for (j, step) in seq.steps().iter().enumerate() {
        let (a, b, w) = (step.edge.0 .0, step.edge.1 .0, step.new_vertex.0);
        let mut next = maps[j].clone();
        next.insert(w, maps[j][&a].intersection(&maps[j][&b]).copied().collect());
        for f in &faces[j + 1] {
            if f.len() == 2 && f.contains(&w) {
                let u = *f.iter().find(|&&u| u != w).unwrap();
                if u != a && u != b {
                    next.get_mut(&u).unwrap().insert(w);
                }
            }
        }
        maps.push(next);
    }
    maps
}

/// K-set of a face: intersection of its vertices' sets; all new vertices
/// for the empty face.
pub fn k_of_face(map: &BTreeMap<u32, BTreeSet<u32>>, new: &[u32], face: &Face) -> BTreeSet<u32> {
    face.iter().fold(new.iter().copied().collect(), |acc, v| {
        acc.intersection(&map[v]).copied().collect()
    })
}

/// Gamma graph from the creation-time K-set of each new vertex, as
/// (vertices, edges).
pub fn gamma_graph(
    seq: &SubdivisionSequence,
    ks: &[BTreeMap<u32, BTreeSet<u32>>],
) -> (Vec<u32>, BTreeSet<(u32, u32)>) {
    let new: Vec<u32> = seq.steps().iter().map(|s| s.new_vertex.0).collect();
    let mut edges = BTreeSet::new();
    for (b, &wb) in new.iter().enumerate() {
        for &wa in &ks[b + 1][&wb] {
            edges.insert((wa.min(wb), wa.max(wb)));
        }
    }
    (new, edges)
}

/// Clique counts of a small graph by testing every vertex subset.
pub fn brute_clique_counts(vertices: &[u32], edges: &BTreeSet<(u32, u32)>) -> Vec<i64> {
    assert!(vertices.len() <= 22);
    let mut counts = vec![0i64; vertices.len() + 1];
    for mask in 0u64..1 << vertices.len() {
        let f: Vec<u32> = vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if f.iter()
            .all(|&a| f.iter().all(|&b| a >= b || edges.contains(&(a, b))))
        {
            counts[f.len()] += 1;
        }
    }
    trim(counts)
}

/// Nested sets of a connected building set, by testing every subfamily of
/// `B - {[n]}` against the definition.
pub fn nested_sets(b: &BuildingSet) -> BTreeSet<BTreeSet<Subset>> {
    let ground = b.ground();
    let members: Vec<Subset> = b
        .elements()
        .iter()
        .copied()
        .filter(|&s| s != ground)
        .collect();
    assert!(members.len() <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << members.len() {
        let family: Vec<Subset> = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        let laminar = family.iter().all(|&x| {
            family
                .iter()
                .all(|&y| x.is_subset(y) || y.is_subset(x) || !x.intersects(y))
        });
        if !laminar {
            continue;
        }
        let mut ok = true;
        for sub in 0u64..1 << family.len() {
            if sub.count_ones() < 2 {
                continue;
            }
            let chosen: Vec<Subset> = family
                .iter()
                .enumerate()
                .filter(|(i, _)| sub >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            let disjoint = chosen
                .iter()
                .enumerate()
                .all(|(i, x)| chosen[i + 1..].iter().all(|y| !x.intersects(*y)));
            if disjoint {
                let union = chosen.iter().fold(Subset::EMPTY, |acc, &x| acc.union(x));
                if b.contains(union) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.insert(family.into_iter().collect());
        }
    }
    out
}

/// `(d, k)` for sweep instance `seed`: `d` cycles through `d_lo..=d_hi`,
/// `k` through `0..=k_hi`, so every pair is hit.
pub fn shape(seed: u64, d_lo: usize, d_hi: usize, k_hi: usize) -> (usize, usize) {
    let span = (d_hi - d_lo + 1) as u64;
    let d = d_lo + (seed % span) as usize;
    let k = ((seed / span) % (k_hi as u64 + 1)) as usize;
    (d, k)
}
