//! Clique enumeration over a dense bitset copy of a graph.
//!
//! Every clique (not only the maximal ones) is a face of a flag complex, so
//! the enumeration walks cliques in increasing-vertex order: each clique is
//! extended only by common neighbours larger than its last vertex. Counting
//! never materializes the faces.

use std::collections::BTreeMap;

use crate::complex::{FlagComplex, VertexId, VertexSet};

struct DenseGraph {
    labels: Vec<VertexId>,
    words: usize,
    rows: Vec<u64>,
}

impl DenseGraph {
    fn new(complex: &FlagComplex) -> Self {
        let labels: Vec<VertexId> = complex.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = labels.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for (a, b) in complex.edges() {
            let (i, j) = (index[&a], index[&b]);
            rows[i * words + j / 64] |= 1 << (j % 64);
            rows[j * words + i / 64] |= 1 << (i % 64);
        }
        DenseGraph {
            labels,
            words,
            rows,
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn all(&self) -> Vec<u64> {
        let n = self.labels.len();
        let mut set = vec![0u64; self.words];
        for i in 0..n {
            set[i / 64] |= 1 << (i % 64);
        }
        set
    }

    /// Candidates for extending by `v`: common neighbours of `v` in `cand` above `v`.
    fn extend(&self, cand: &[u64], v: usize) -> Vec<u64> {
        let row = self.row(v);
        let mut next: Vec<u64> = cand.iter().zip(row).map(|(c, r)| c & r).collect();
        for (w, word) in next.iter_mut().enumerate() {
            let lo = w * 64;
            if lo + 64 <= v + 1 {
                *word = 0;
            } else if lo <= v {
                let keep = v + 1 - lo;
                *word &= !((1u64 << keep) - 1);
            }
        }
        next
    }
}

fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

/// `counts[i]` is the number of cliques with `i` vertices; `counts[0] = 1`.
pub fn clique_counts(complex: &FlagComplex) -> Vec<u64> {
    fn walk(g: &DenseGraph, cand: &[u64], depth: usize, counts: &mut Vec<u64>) {
        for v in members(cand) {
            if counts.len() <= depth + 1 {
                counts.push(0);
            }
            counts[depth + 1] += 1;
            let next = g.extend(cand, v);
            if next.iter().any(|&w| w != 0) {
                walk(g, &next, depth + 1, counts);
            }
        }
    }

    let g = DenseGraph::new(complex);
    let mut counts = vec![1];
    walk(&g, &g.all(), 0, &mut counts);
    counts
}

/// All cliques, including the empty one, in lexicographic order of vertex lists.
pub fn cliques(complex: &FlagComplex) -> Vec<VertexSet> {
    fn walk(g: &DenseGraph, cand: &[u64], current: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        for v in members(cand) {
            current.push(v);
            out.push(current.iter().map(|&i| g.labels[i]).collect());
            let next = g.extend(cand, v);
            if next.iter().any(|&w| w != 0) {
                walk(g, &next, current, out);
            }
            current.pop();
        }
    }

    let g = DenseGraph::new(complex);
    let mut out = vec![VertexSet::new()];
    walk(&g, &g.all(), &mut Vec::new(), &mut out);
    out
}

/// Size of the largest clique.
pub fn clique_number(complex: &FlagComplex) -> usize {
    clique_counts(complex).len() - 1
}
