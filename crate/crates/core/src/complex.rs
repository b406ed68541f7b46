//! Simplicial complexes in two representations.
//!
//! [`FlagComplex`] stores only the 1-skeleton; its faces are the cliques of
//! that graph. [`FaceComplex`] stores every face explicitly and serves as a
//! brute-force twin for checking graph-level operations against the
//! set-level definitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique;
use crate::error::{Error, Result};

/// A vertex label. Labels are never reused within one subdivision sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// Builds a vertex set from raw labels.
pub fn vertex_set<I: IntoIterator<Item = u32>>(ids: I) -> VertexSet {
    ids.into_iter().map(VertexId).collect()
}

/// Antipode of a vertex of the canonical cross-polytope layout.
pub fn antipode(v: VertexId) -> VertexId {
    VertexId(v.0 ^ 1)
}

/// A flag simplicial complex, stored as its underlying graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlagComplex {
    adjacency: BTreeMap<VertexId, VertexSet>,
}

impl FlagComplex {
    /// The empty complex `{∅}`.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut c = FlagComplex::new();
        for v in vertices {
            c.adjacency.entry(v).or_default();
        }
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for v in [a, b] {
                if !c.contains(v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
            c.insert_edge(a, b);
        }
        Ok(c)
    }

    /// Boundary of the `d`-dimensional cross-polytope, `Σ_{d-1}`.
    ///
    /// Vertices are `0..2d`; `i` and `i ^ 1` are antipodal and every other
    /// pair is an edge.
    pub fn cross_polytope(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension(d));
        }
        let pairs: Vec<_> = (0..d as u32)
            .map(|i| (VertexId(2 * i), VertexId(2 * i + 1)))
            .collect();
        Ok(Self::cross_polytope_on(&pairs))
    }

    /// Cross-polytope boundary on the given antipodal pairs. An empty slice
    /// gives the empty complex `Σ_{-1}`.
    pub fn cross_polytope_on(pairs: &[(VertexId, VertexId)]) -> Self {
        let mut c = FlagComplex::new();
        let all: Vec<VertexId> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        for &v in &all {
            c.adjacency.entry(v).or_default();
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c2, d2) in &pairs[i + 1..] {
                for x in [a, b] {
                    for y in [c2, d2] {
                        c.insert_edge(x, y);
                    }
                }
            }
        }
        c
    }

    fn insert_edge(&mut self, a: VertexId, b: VertexId) {
        self.adjacency.entry(a).or_default().insert(b);
        self.adjacency.entry(b).or_default().insert(a);
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    /// Edges as `(a, b)` with `a < b`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&a, nbrs)| nbrs.range(a..).map(move |&b| (a, b)))
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn neighbors(&self, v: VertexId) -> Option<&VertexSet> {
        self.adjacency.get(&v)
    }

    /// A set of vertices is a face iff it is a clique.
    pub fn is_face(&self, face: &VertexSet) -> bool {
        let vs: Vec<VertexId> = face.iter().copied().collect();
        vs.iter().all(|&v| self.contains(v))
            && vs
                .iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// All faces, including `∅`.
    pub fn faces(&self) -> Vec<VertexSet> {
        clique::cliques(self)
    }

    /// Vertices adjacent to every vertex of `face`; all vertices when `face` is empty.
    pub fn common_neighbors(&self, face: &VertexSet) -> VertexSet {
        let mut it = face.iter();
        let Some(first) = it.next() else {
            return self.vertex_set();
        };
        let mut common = self.adjacency.get(first).cloned().unwrap_or_default();
        for v in it {
            match self.adjacency.get(v) {
                Some(n) => common.retain(|u| n.contains(u)),
                None => common.clear(),
            }
        }
        common
    }

    /// Induced subcomplex on `keep`. Labels not in the complex are ignored.
    pub fn induced(&self, keep: &VertexSet) -> FlagComplex {
        let adjacency = self
            .adjacency
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.intersection(keep).copied().collect()))
            .collect();
        FlagComplex { adjacency }
    }

    /// Link of a face: the induced subcomplex on the common neighbours of `face`.
    pub fn link(&self, face: &VertexSet) -> Result<FlagComplex> {
        if !self.is_face(face) {
            return Err(Error::InvalidFace(face.iter().copied().collect()));
        }
        if face.is_empty() {
            return Ok(self.clone());
        }
        Ok(self.induced(&self.common_neighbors(face)))
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &FlagComplex) -> Result<FlagComplex> {
        if let Some(v) = other.vertices().find(|&v| self.contains(v)) {
            return Err(Error::OverlappingVertices(v));
        }
        let mut out = self.clone();
        for (&v, n) in &other.adjacency {
            out.adjacency.insert(v, n.clone());
        }
        for a in self.vertices() {
            for b in other.vertices() {
                out.insert_edge(a, b);
            }
        }
        Ok(out)
    }

    /// Stellar subdivision in the edge `{a, b}` with new vertex `s`.
    ///
    /// The edge is removed and `s` is joined to `a`, `b` and every common
    /// neighbour of `a` and `b`. The result is again flag.
    pub fn subdivide_edge(&self, a: VertexId, b: VertexId, s: VertexId) -> Result<FlagComplex> {
        if a == b || !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        if self.contains(s) {
            return Err(Error::VertexExists(s));
        }
        let common: VertexSet = self.adjacency[&a]
            .intersection(&self.adjacency[&b])
            .copied()
            .collect();
        let mut out = self.clone();
        out.adjacency.get_mut(&a).unwrap().remove(&b);
        out.adjacency.get_mut(&b).unwrap().remove(&a);
        out.adjacency.insert(s, VertexSet::new());
        for v in common.into_iter().chain([a, b]) {
            out.insert_edge(s, v);
        }
        Ok(out)
    }

    /// Renames vertices; labels missing from `map` are kept.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> FlagComplex {
        let f = |v: &VertexId| *map.get(v).unwrap_or(v);
        let adjacency = self
            .adjacency
            .iter()
            .map(|(v, n)| (f(v), n.iter().map(f).collect()))
            .collect();
        FlagComplex { adjacency }
    }

    /// Explicit face-set form of the clique complex.
    pub fn to_face_complex(&self) -> FaceComplex {
        FaceComplex {
            vertices: self.vertex_set(),
            faces: self.faces().into_iter().collect(),
        }
    }

    /// Checks that `map` is an isomorphism onto `other`.
    ///
    /// `map` must be a bijection from the vertices of `self` onto the vertices
    /// of `other`; the answer is whether it carries edges onto edges exactly.
    pub fn is_isomorphic_under(
        &self,
        other: &FlagComplex,
        map: &BTreeMap<VertexId, VertexId>,
    ) -> Result<bool> {
        check_bijection(&self.vertex_set(), &other.vertex_set(), map)?;
        if self.num_edges() != other.num_edges() {
            return Ok(false);
        }
        Ok(self.edges().all(|(a, b)| other.has_edge(map[&a], map[&b])))
    }
}

fn check_bijection(
    from: &VertexSet,
    to: &VertexSet,
    map: &BTreeMap<VertexId, VertexId>,
) -> Result<()> {
    if map.len() != from.len() || map.keys().any(|v| !from.contains(v)) {
        return Err(Error::NotBijective(
            "domain differs from the first vertex set".into(),
        ));
    }
    let image: VertexSet = map.values().copied().collect();
    if image != *to {
        return Err(Error::NotBijective(
            "image differs from the second vertex set".into(),
        ));
    }
    Ok(())
}

/// A simplicial complex given by its full face set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceComplex {
    vertices: VertexSet,
    faces: BTreeSet<VertexSet>,
}

impl FaceComplex {
    /// Downward closure of `facets`, plus `∅` and every singleton of `vertices`.
    pub fn from_facets<V, F>(vertices: V, facets: F) -> FaceComplex
    where
        V: IntoIterator<Item = VertexId>,
        F: IntoIterator<Item = VertexSet>,
    {
        let mut vertices: VertexSet = vertices.into_iter().collect();
        let mut faces = BTreeSet::new();
        faces.insert(VertexSet::new());
        for facet in facets {
            vertices.extend(facet.iter().copied());
            let members: Vec<VertexId> = facet.into_iter().collect();
            for mask in 1u64..(1 << members.len()) {
                faces.insert(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        for &v in &vertices {
            faces.insert(VertexSet::from([v]));
        }
        FaceComplex { vertices, faces }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn faces(&self) -> &BTreeSet<VertexSet> {
        &self.faces
    }

    pub fn contains(&self, face: &VertexSet) -> bool {
        self.faces.contains(face)
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<VertexSet> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .vertices
                    .iter()
                    .any(|v| !f.contains(v) && self.faces.contains(&with(f, *v)))
            })
            .cloned()
            .collect()
    }

    /// `counts[i]` is the number of faces with `i` vertices.
    pub fn face_counts(&self) -> Vec<u64> {
        let top = self.faces.iter().map(BTreeSet::len).max().unwrap_or(0);
        let mut counts = vec![0u64; top + 1];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        counts
    }

    /// 1-skeleton as a flag complex.
    pub fn one_skeleton(&self) -> FlagComplex {
        let edges: Vec<_> = self
            .faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| {
                let mut it = f.iter();
                (*it.next().unwrap(), *it.next().unwrap())
            })
            .collect();
        FlagComplex::from_edges(self.vertices.iter().copied(), edges)
            .expect("edges of a face complex join its own vertices")
    }

    /// True iff every clique of the 1-skeleton is a face.
    pub fn is_flag(&self) -> bool {
        let skeleton = self.one_skeleton();
        let cliques = clique::cliques(&skeleton);
        cliques.len() == self.faces.len() && cliques.iter().all(|c| self.faces.contains(c))
    }

    /// Stellar subdivision in an arbitrary face, directly from the set definition.
    ///
    /// Keeps the faces not containing `face` and adds `τ ∪ {s}` for every
    /// face `τ` with `face ⊄ τ` and `τ ∪ face` a face. A singleton `face`
    /// yields a copy of the complex with that vertex renamed to `s`.
    pub fn subdivide_face(&self, face: &VertexSet, s: VertexId) -> Result<FaceComplex> {
        if face.is_empty() || !self.faces.contains(face) {
            return Err(Error::InvalidFace(face.iter().copied().collect()));
        }
        if self.vertices.contains(&s) {
            return Err(Error::VertexExists(s));
        }
        let mut faces = BTreeSet::new();
        for tau in &self.faces {
            if !face.is_subset(tau) {
                faces.insert(tau.clone());
                if self.faces.contains(&tau.union(face).copied().collect()) {
                    faces.insert(with(tau, s));
                }
            }
        }
        let mut vertices: VertexSet = faces.iter().flatten().copied().collect();
        vertices.insert(s);
        Ok(FaceComplex { vertices, faces })
    }
}

fn with(face: &VertexSet, v: VertexId) -> VertexSet {
    let mut f = face.clone();
    f.insert(v);
    f
}

/// JSON form `{"vertices": [...], "edges": [[a, b], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlagComplexJson {
    pub vertices: Vec<u32>,
    pub edges: Vec<[u32; 2]>,
}

impl From<&FlagComplex> for FlagComplexJson {
    fn from(c: &FlagComplex) -> Self {
        FlagComplexJson {
            vertices: c.vertices().map(|v| v.0).collect(),
            edges: c.edges().map(|(a, b)| [a.0, b.0]).collect(),
        }
    }
}

impl TryFrom<FlagComplexJson> for FlagComplex {
    type Error = Error;

    fn try_from(j: FlagComplexJson) -> Result<Self> {
        FlagComplex::from_edges(
            j.vertices.into_iter().map(VertexId),
            j.edges.into_iter().map(|[a, b]| (VertexId(a), VertexId(b))),
        )
    }
}

/// JSON form `{"vertices": [...], "facets": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FaceComplexJson {
    pub vertices: Vec<u32>,
    pub facets: Vec<Vec<u32>>,
}

impl From<&FaceComplex> for FaceComplexJson {
    fn from(c: &FaceComplex) -> Self {
        FaceComplexJson {
            vertices: c.vertices.iter().map(|v| v.0).collect(),
            facets: c
                .facets()
                .into_iter()
                .map(|f| f.into_iter().map(|v| v.0).collect())
                .collect(),
        }
    }
}

impl From<FaceComplexJson> for FaceComplex {
    fn from(j: FaceComplexJson) -> Self {
        FaceComplex::from_facets(
            j.vertices.into_iter().map(VertexId),
            j.facets.into_iter().map(vertex_set),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn cycle(n: u32) -> FlagComplex {
        FlagComplex::from_edges((0..n).map(v), (0..n).map(|i| (v(i), v((i + 1) % n)))).unwrap()
    }

    fn path(n: u32) -> FlagComplex {
        FlagComplex::from_edges((0..n).map(v), (0..n - 1).map(|i| (v(i), v(i + 1)))).unwrap()
    }

    #[test]
    fn cross_polytope_small_cases() {
        let s0 = FlagComplex::cross_polytope(1).unwrap();
        assert_eq!(s0.num_vertices(), 2);
        assert_eq!(s0.num_edges(), 0);

        let s1 = FlagComplex::cross_polytope(2).unwrap();
        assert_eq!(clique::clique_counts(&s1), vec![1, 4, 4]);

        assert_eq!(
            FlagComplex::cross_polytope(0),
            Err(Error::InvalidDimension(0))
        );
    }

    #[test]
    fn cross_polytope_antipodes_are_the_only_non_neighbours() {
        let s = FlagComplex::cross_polytope(4).unwrap();
        for a in s.vertices() {
            let missing: Vec<_> = s
                .vertices()
                .filter(|&b| b != a && !s.has_edge(a, b))
                .collect();
            assert_eq!(missing, vec![antipode(a)]);
        }
    }

    #[test]
    fn link_of_an_edge_in_sigma3_is_a_four_cycle() {
        let s3 = FlagComplex::cross_polytope(4).unwrap();
        let lk = s3.link(&vertex_set([0, 2])).unwrap();
        assert_eq!(lk.vertex_set(), vertex_set([4, 5, 6, 7]));
        let relabel = [(4, 0), (5, 1), (6, 2), (7, 3)]
            .into_iter()
            .map(|(a, b)| (v(a), v(b)))
            .collect();
        assert!(lk
            .is_isomorphic_under(&FlagComplex::cross_polytope(2).unwrap(), &relabel)
            .unwrap());
    }

    #[test]
    fn link_of_empty_face_is_the_complex() {
        let c = cycle(5);
        assert_eq!(c.link(&VertexSet::new()).unwrap(), c);
    }

    #[test]
    fn link_rejects_non_faces() {
        let s = FlagComplex::cross_polytope(3).unwrap();
        assert!(matches!(
            s.link(&vertex_set([0, 1])),
            Err(Error::InvalidFace(_))
        ));
        assert!(matches!(
            s.link(&vertex_set([99])),
            Err(Error::InvalidFace(_))
        ));
    }

    #[test]
    fn join_of_two_points_is_an_edge() {
        let a = FlagComplex::from_edges([v(0)], []).unwrap();
        let b = FlagComplex::from_edges([v(1)], []).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(clique::clique_counts(&j), vec![1, 2, 1]);
    }

    #[test]
    fn join_with_empty_complex_is_identity() {
        let c = cycle(5);
        assert_eq!(c.join(&FlagComplex::new()).unwrap(), c);
        assert_eq!(FlagComplex::new().join(&c).unwrap(), c);
    }

    #[test]
    fn join_rejects_shared_vertices() {
        assert_eq!(
            cycle(4).join(&cycle(3)),
            Err(Error::OverlappingVertices(v(0)))
        );
    }

    #[test]
    fn subdividing_a_square_edge_gives_a_pentagon() {
        let sq = FlagComplex::cross_polytope(2).unwrap(); // 0-2-1-3-0
        let p = sq.subdivide_edge(v(0), v(2), v(4)).unwrap();
        assert_eq!(clique::clique_counts(&p), vec![1, 5, 5]);
        assert!(p.vertices().all(|x| p.neighbors(x).unwrap().len() == 2));
    }

    #[test]
    fn subdividing_e1_e2_in_sigma3() {
        let s3 = FlagComplex::cross_polytope(4).unwrap();
        let t = s3.subdivide_edge(v(0), v(2), v(8)).unwrap();
        assert_eq!(t.neighbors(v(8)).unwrap(), &vertex_set([0, 2, 4, 5, 6, 7]));
        assert!(!t.has_edge(v(0), v(2)));
    }

    #[test]
    fn subdivide_edge_errors() {
        let s = FlagComplex::cross_polytope(3).unwrap();
        assert_eq!(
            s.subdivide_edge(v(0), v(1), v(9)),
            Err(Error::NotAnEdge(v(0), v(1)))
        );
        assert_eq!(
            s.subdivide_edge(v(0), v(2), v(3)),
            Err(Error::VertexExists(v(3)))
        );
    }

    #[test]
    fn general_subdivision_of_a_triangle() {
        let tri = FaceComplex::from_facets([], [vertex_set([0, 1, 2])]);
        let cone = tri.subdivide_face(&vertex_set([0, 1, 2]), v(3)).unwrap();
        assert_eq!(cone.face_counts(), vec![1, 4, 6, 3]);
    }

    #[test]
    fn general_subdivision_of_a_vertex_renames_it() {
        let c = cycle(4).to_face_complex();
        let r = c.subdivide_face(&vertex_set([0]), v(7)).unwrap();
        let map = [(0, 7), (1, 1), (2, 2), (3, 3)]
            .into_iter()
            .map(|(a, b)| (v(a), v(b)))
            .collect();
        assert!(cycle(4)
            .is_isomorphic_under(&r.one_skeleton(), &map)
            .unwrap());
        assert_eq!(r.face_counts(), c.face_counts());
    }

    #[test]
    fn general_subdivision_errors() {
        let c = cycle(4).to_face_complex();
        assert!(matches!(
            c.subdivide_face(&vertex_set([0, 2]), v(9)),
            Err(Error::InvalidFace(_))
        ));
        assert!(matches!(
            c.subdivide_face(&VertexSet::new(), v(9)),
            Err(Error::InvalidFace(_))
        ));
        assert_eq!(
            c.subdivide_face(&vertex_set([0, 1]), v(2)),
            Err(Error::VertexExists(v(2)))
        );
    }

    #[test]
    fn edge_subdivision_matches_face_set_definition_on_square() {
        let sq = FlagComplex::cross_polytope(2).unwrap();
        let by_graph = sq
            .subdivide_edge(v(0), v(2), v(4))
            .unwrap()
            .to_face_complex();
        let by_sets = sq
            .to_face_complex()
            .subdivide_face(&vertex_set([0, 2]), v(4))
            .unwrap();
        assert_eq!(by_graph, by_sets);
    }

    #[test]
    fn hollow_triangle_is_not_flag() {
        let hollow = FaceComplex::from_facets(
            [],
            [vertex_set([0, 1]), vertex_set([1, 2]), vertex_set([0, 2])],
        );
        assert!(!hollow.is_flag());
    }

    #[test]
    fn cross_polytopes_are_flag() {
        for d in 1..=5 {
            assert!(FlagComplex::cross_polytope(d)
                .unwrap()
                .to_face_complex()
                .is_flag());
        }
    }

    #[test]
    fn isomorphism_under_given_maps() {
        let c = cycle(4);
        let id: BTreeMap<_, _> = c.vertices().map(|x| (x, x)).collect();
        assert!(c.is_isomorphic_under(&c, &id).unwrap());

        let rot: BTreeMap<_, _> = (0..4).map(|i| (v(i), v((i + 1) % 4))).collect();
        assert!(c.is_isomorphic_under(&c, &rot).unwrap());

        let p = path(4);
        assert!(!c.is_isomorphic_under(&p, &id).unwrap());
        assert!(!c.is_isomorphic_under(&p, &rot).unwrap());
    }

    #[test]
    fn isomorphism_rejects_non_bijections() {
        let c = cycle(4);
        let squash: BTreeMap<_, _> = (0..4).map(|i| (v(i), v(i / 2))).collect();
        assert!(matches!(
            c.is_isomorphic_under(&c, &squash),
            Err(Error::NotBijective(_))
        ));
    }

    #[test]
    fn facets_of_face_complex() {
        let c = FaceComplex::from_facets([v(9)], [vertex_set([0, 1, 2]), vertex_set([2, 3])]);
        assert_eq!(
            c.facets(),
            vec![vertex_set([0, 1, 2]), vertex_set([2, 3]), vertex_set([9])]
        );
    }
}
