//! Subdivision sequences of the cross-polytope boundary and their gamma complex.
//!
//! A [`SubdivisionSequence`] starts from a cross-polytope boundary and
//! subdivides one edge per step; the vertex created at step `i` is `w_i`.
//! Along the way every vertex `v` carries a set `K(v) ⊆ {w_1, …, w_k}`:
//!
//! * initial vertices start with `K(v) = ∅`;
//! * when `{s_a, s_b}` is subdivided into `w_k`, the new vertex gets
//!   `K(w_k) = K(s_a) ∩ K(s_b)` (taken before the step), every common
//!   neighbour of `s_a` and `s_b` gains `w_k`, and nothing else changes.
//!
//! The gamma complex Γ is the flag complex on `{w_1, …, w_k}` in which
//! `w_a ~ w_b` (`a < b`) iff `w_a ∈ K(w_b)` at the moment `w_b` was created.
//! Its f-polynomial equals the γ-polynomial of the final complex.
//!
//! K-sets are stored as sets of step indices (1-based), so their order is
//! the creation order of the `w`'s regardless of how vertices are labelled.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clique;
use crate::complex::{FlagComplex, VertexId, VertexSet};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::vectors::gamma_of;

type StepSet = BTreeSet<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubdivisionStep {
    pub edge: (VertexId, VertexId),
    pub new_vertex: VertexId,
}

/// Which of the five classes a face falls in relative to the last step
/// `{s_a, s_b} → w_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceClass {
    /// Contains `s_a` or `s_b`, not `w_k`.
    F1,
    /// Contains `s_a` or `s_b`, and `w_k`.
    F2,
    /// Contains `w_k` but neither endpoint.
    F3,
    /// Avoids all three, and `w_k` is in its link.
    F4,
    /// Avoids all three, and `w_k` is not in its link.
    F5,
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionSequence {
    pairs: Vec<(VertexId, VertexId)>,
    steps: Vec<SubdivisionStep>,
    complexes: Vec<FlagComplex>,
    k_table: BTreeMap<VertexId, StepSet>,
    /// `(K(s_a), K(s_b))` just before each step.
    k_snapshots: Vec<(StepSet, StepSet)>,
    /// `(a, b)` with `a < b`, both step indices.
    gamma_edges: BTreeSet<(usize, usize)>,
}

impl SubdivisionSequence {
    /// Zero-step sequence on `Σ_{d-1}` in the canonical labelling: initial
    /// vertices `0..2d` with antipodes `i ^ 1`, and `w_i = 2d + i - 1`.
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension(d));
        }
        let pairs = (0..d as u32)
            .map(|i| (VertexId(2 * i), VertexId(2 * i + 1)))
            .collect();
        Self::on_pairs(pairs)
    }

    /// Zero-step sequence on the cross-polytope with the given antipodal
    /// pairs. No pairs gives the empty sphere `Σ_{-1}`.
    pub fn on_pairs(pairs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut seen = VertexSet::new();
        for &(a, b) in &pairs {
            for v in [a, b] {
                if !seen.insert(v) {
                    return Err(Error::VertexExists(v));
                }
            }
        }
        let initial = FlagComplex::cross_polytope_on(&pairs);
        let k_table = initial.vertices().map(|v| (v, StepSet::new())).collect();
        Ok(SubdivisionSequence {
            pairs,
            steps: Vec::new(),
            complexes: vec![initial],
            k_table,
            k_snapshots: Vec::new(),
            gamma_edges: BTreeSet::new(),
        })
    }

    /// Dimension parameter: the complexes are `(d-1)`-spheres.
    pub fn d(&self) -> usize {
        self.pairs.len()
    }

    /// Number of steps.
    pub fn k(&self) -> usize {
        self.steps.len()
    }

    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    pub fn steps(&self) -> &[SubdivisionStep] {
        &self.steps
    }

    /// `Θ^0, …, Θ^k`.
    pub fn complexes(&self) -> &[FlagComplex] {
        &self.complexes
    }

    pub fn initial(&self) -> &FlagComplex {
        &self.complexes[0]
    }

    /// The result `Θ^k`.
    pub fn current(&self) -> &FlagComplex {
        self.complexes.last().expect("at least the initial complex")
    }

    /// `w_1, …, w_k`.
    pub fn new_vertices(&self) -> Vec<VertexId> {
        self.steps.iter().map(|s| s.new_vertex).collect()
    }

    /// `w_i` for `1 ≤ i ≤ k`.
    pub fn w(&self, i: usize) -> VertexId {
        self.steps[i - 1].new_vertex
    }

    /// Step index of a new vertex, `None` for initial vertices.
    pub fn step_of(&self, v: VertexId) -> Option<usize> {
        self.steps
            .iter()
            .position(|s| s.new_vertex == v)
            .map(|i| i + 1)
    }

    /// Whether labels follow the canonical scheme of [`SubdivisionSequence::new`].
    pub fn is_canonical(&self) -> bool {
        let d = self.d() as u32;
        self.pairs
            .iter()
            .enumerate()
            .all(|(i, &(a, b))| a.0 == 2 * i as u32 && b.0 == 2 * i as u32 + 1)
            && self
                .steps
                .iter()
                .enumerate()
                .all(|(i, s)| s.new_vertex.0 == 2 * d + i as u32)
    }

    fn next_label(&self) -> VertexId {
        self.current()
            .vertices()
            .last()
            .map_or(VertexId(0), |v| VertexId(v.0 + 1))
    }

    /// Subdivides `{a, b}`, labelling the new vertex one past the largest
    /// label in use. Returns the new vertex.
    pub fn extend(&mut self, a: VertexId, b: VertexId) -> Result<VertexId> {
        let s = self.next_label();
        self.extend_labeled(a, b, s)?;
        Ok(s)
    }

    /// Subdivides `{a, b}` with an explicitly chosen new label.
    pub fn extend_labeled(&mut self, a: VertexId, b: VertexId, s: VertexId) -> Result<()> {
        let next = self.current().subdivide_edge(a, b, s)?;
        let index = self.k() + 1;
        let ka = self.k_table[&a].clone();
        let kb = self.k_table[&b].clone();
        let ks: StepSet = ka.intersection(&kb).copied().collect();

        for &v in next.neighbors(s).expect("new vertex present") {
            if v != a && v != b {
                self.k_table.get_mut(&v).expect("old vertex").insert(index);
            }
        }
        for &earlier in &ks {
            self.gamma_edges.insert((earlier, index));
        }
        self.k_table.insert(s, ks);
        self.k_snapshots.push((ka, kb));
        self.steps.push(SubdivisionStep {
            edge: (a, b),
            new_vertex: s,
        });
        self.complexes.push(next);
        Ok(())
    }

    /// The sequence truncated to its first `j` steps.
    pub fn prefix(&self, j: usize) -> SubdivisionSequence {
        let mut seq = Self::on_pairs(self.pairs.clone()).expect("pairs already validated");
        for step in &self.steps[..j] {
            seq.extend_labeled(step.edge.0, step.edge.1, step.new_vertex)
                .expect("replaying a valid sequence");
        }
        seq
    }

    fn labels(&self, indices: &StepSet) -> Vec<VertexId> {
        indices.iter().map(|&i| self.w(i)).collect()
    }

    fn k_indices(&self, face: &VertexSet) -> StepSet {
        let mut it = face.iter();
        let Some(first) = it.next() else {
            return (1..=self.k()).collect();
        };
        let mut acc = self.k_table[first].clone();
        for v in it {
            acc.retain(|i| self.k_table[v].contains(i));
        }
        acc
    }

    fn require_face(&self, face: &VertexSet) -> Result<()> {
        if self.current().is_face(face) {
            Ok(())
        } else {
            Err(Error::InvalidFace(face.iter().copied().collect()))
        }
    }

    /// `K(F)`: the intersection of the vertex K-sets over `F`, ordered by
    /// creation. `K(∅)` is all of `w_1, …, w_k`.
    pub fn k_set(&self, face: &VertexSet) -> Result<Vec<VertexId>> {
        self.require_face(face)?;
        Ok(self.labels(&self.k_indices(face)))
    }

    /// `(K(s_a), K(s_b))` as they were just before step `index` (1-based).
    pub fn k_snapshot(&self, index: usize) -> (Vec<VertexId>, Vec<VertexId>) {
        let (a, b) = &self.k_snapshots[index - 1];
        (self.labels(a), self.labels(b))
    }

    fn classify_at(&self, level: usize, face: &VertexSet) -> FaceClass {
        let step = self.steps[level - 1];
        let (a, b) = step.edge;
        let w = step.new_vertex;
        let has_end = face.contains(&a) || face.contains(&b);
        match (has_end, face.contains(&w)) {
            (true, false) => FaceClass::F1,
            (true, true) => FaceClass::F2,
            (false, true) => FaceClass::F3,
            (false, false) => {
                let theta = &self.complexes[level];
                if face.iter().all(|&v| theta.has_edge(v, w)) {
                    FaceClass::F4
                } else {
                    FaceClass::F5
                }
            }
        }
    }

    /// Class of a face of `Θ^k` with respect to the last step.
    pub fn classify_face(&self, face: &VertexSet) -> Result<FaceClass> {
        if self.k() == 0 {
            return Err(Error::NoSteps);
        }
        self.require_face(face)?;
        Ok(self.classify_at(self.k(), face))
    }

    fn induced_plan(&self, level: usize, face: &VertexSet) -> Plan {
        if level == 0 {
            return Plan {
                pairs: self
                    .pairs
                    .iter()
                    .filter(|(a, b)| !face.contains(a) && !face.contains(b))
                    .copied()
                    .collect(),
                steps: Vec::new(),
            };
        }
        let step = self.steps[level - 1];
        let (a, b) = step.edge;
        let w = step.new_vertex;
        match self.classify_at(level, face) {
            FaceClass::F1 => {
                let mut plan = self.induced_plan(level - 1, face);
                let replaced = if face.contains(&a) { b } else { a };
                plan.rename(replaced, w);
                plan
            }
            FaceClass::F2 => {
                let mut f = face.clone();
                f.remove(&w);
                f.insert(if face.contains(&a) { b } else { a });
                self.induced_plan(level - 1, &f)
            }
            FaceClass::F3 => {
                let mut f = face.clone();
                f.remove(&w);
                f.extend([a, b]);
                let mut plan = self.induced_plan(level - 1, &f);
                plan.pairs.push((a, b));
                plan
            }
            FaceClass::F4 => {
                let mut plan = self.induced_plan(level - 1, face);
                plan.steps.push(step);
                plan
            }
            FaceClass::F5 => self.induced_plan(level - 1, face),
        }
    }

    /// The subdivision sequence induced on the link of `face`.
    ///
    /// Built by recursion on the number of steps, following the face class
    /// at each level: an endpoint-only face inherits the sequence with the
    /// other endpoint renamed to `w_k`; a face through `w_k` borrows the
    /// sequence of a face of the previous complex (suspended by `{s_a, s_b}`
    /// when neither endpoint is in the face); a face whose link contains
    /// `w_k` gains the step itself. The result is labelled so that its final
    /// complex equals `lk(face)` vertex for vertex.
    pub fn induced_sequence(&self, face: &VertexSet) -> Result<InducedSequence> {
        self.require_face(face)?;
        let plan = self.induced_plan(self.k(), face);
        let mut base = SubdivisionSequence::on_pairs(plan.pairs).map_err(internal)?;
        for (i, step) in plan.steps.iter().enumerate() {
            base.extend_labeled(step.edge.0, step.edge.1, step.new_vertex)
                .map_err(|e| internal(e.at_step(i + 1)))?;
        }
        Ok(InducedSequence {
            face: face.clone(),
            base,
        })
    }

    /// `W(F)`: the new vertices of the induced sequence of `F`, in creation order.
    pub fn w_set(&self, face: &VertexSet) -> Result<Vec<VertexId>> {
        Ok(self.induced_sequence(face)?.base.new_vertices())
    }

    /// Order-preserving bijection `K(F) → W(F)` as `(k, w)` pairs in order.
    pub fn phi(&self, face: &VertexSet) -> Result<Vec<(VertexId, VertexId)>> {
        self.phi_from(&self.induced_sequence(face)?)
    }

    /// As [`SubdivisionSequence::phi`], reusing an induced sequence of this sequence.
    pub fn phi_from(&self, induced: &InducedSequence) -> Result<Vec<(VertexId, VertexId)>> {
        let face = &induced.face;
        let k = self.k_set(face)?;
        let w = induced.w_labels();
        if k.len() != w.len() {
            return Err(Error::Internal(format!(
                "|K(F)| = {} but |W(F)| = {} for F = {face:?}",
                k.len(),
                w.len()
            )));
        }
        Ok(k.into_iter().zip(w).collect())
    }

    /// The gamma complex, from the edges recorded when each `w_b` was created.
    pub fn gamma_complex(&self) -> FlagComplex {
        self.gamma_graph(self.gamma_edges.iter().copied())
    }

    /// The gamma complex recomputed from the K-snapshots of each step's endpoints.
    pub fn gamma_complex_from_snapshots(&self) -> FlagComplex {
        let edges: Vec<(usize, usize)> = self
            .k_snapshots
            .iter()
            .enumerate()
            .flat_map(|(i, (ka, kb))| ka.intersection(kb).map(move |&a| (a, i + 1)))
            .collect();
        self.gamma_graph(edges)
    }

    fn gamma_graph<I: IntoIterator<Item = (usize, usize)>>(&self, edges: I) -> FlagComplex {
        FlagComplex::from_edges(
            self.new_vertices(),
            edges.into_iter().map(|(a, b)| (self.w(a), self.w(b))),
        )
        .expect("gamma edges join new vertices")
    }

    /// Compares `f(Γ)` with `γ(Θ^k)`.
    pub fn verify_main_theorem(&self) -> MainTheoremReport {
        let d = self.d();
        let counts = clique::clique_counts(&self.gamma_complex());
        let f_gamma = IntPolynomial::new(counts.into_iter().map(|c| c as i64).collect());
        let (gamma_theta, error) = match gamma_of(self.current(), d) {
            Ok(r) => (r.gamma, None),
            Err(e) => (IntPolynomial::zero(), Some(e.to_string())),
        };
        MainTheoremReport {
            equal: error.is_none() && f_gamma == gamma_theta,
            f_gamma,
            gamma_theta,
            k: self.k(),
            d,
            error,
        }
    }

    /// `k` uniformly random edge subdivisions of `Σ_{d-1}`, reproducible from `seed`.
    pub fn random(d: usize, k: usize, seed: u64) -> Result<Self> {
        let mut seq = Self::new(d)?;
        if d < 2 && k > 0 {
            return Err(Error::NoEdges { k });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..k {
            let edges: Vec<_> = seq.current().edges().collect();
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            seq.extend(a, b)?;
        }
        Ok(seq)
    }

    pub fn to_json(&self) -> Result<SequenceJson> {
        if !self.is_canonical() {
            return Err(Error::Internal(
                "only canonically labelled sequences serialize".into(),
            ));
        }
        Ok(SequenceJson {
            d: self.d(),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    edge: [s.edge.0 .0, s.edge.1 .0],
                })
                .collect(),
        })
    }

    /// Replays a JSON sequence. Errors name the 1-based step index.
    pub fn from_json(json: &SequenceJson) -> Result<Self> {
        let mut seq = Self::new(json.d)?;
        for (i, step) in json.steps.iter().enumerate() {
            let [a, b] = step.edge;
            seq.extend(VertexId(a), VertexId(b))
                .map_err(|e| e.at_step(i + 1))?;
        }
        Ok(seq)
    }
}

fn internal(e: Error) -> Error {
    Error::Internal(format!("induced sequence replay failed: {e}"))
}

#[derive(Debug)]
struct Plan {
    pairs: Vec<(VertexId, VertexId)>,
    steps: Vec<SubdivisionStep>,
}

impl Plan {
    fn rename(&mut self, from: VertexId, to: VertexId) {
        let r = |v: &mut VertexId| {
            if *v == from {
                *v = to;
            }
        };
        for (a, b) in &mut self.pairs {
            r(a);
            r(b);
        }
        for s in &mut self.steps {
            r(&mut s.edge.0);
            r(&mut s.edge.1);
            r(&mut s.new_vertex);
        }
    }
}

/// The subdivision sequence carried by the link of a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSequence {
    pub face: VertexSet,
    /// A sequence of dimension `d - |F|`, labelled with ambient vertex ids.
    pub base: SubdivisionSequence,
}

impl InducedSequence {
    /// `w_{1,F}, …, w_{l_F,F}`.
    pub fn w_labels(&self) -> Vec<VertexId> {
        self.base.new_vertices()
    }

    pub fn result(&self) -> &FlagComplex {
        self.base.current()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub f_gamma: IntPolynomial,
    pub gamma_theta: IntPolynomial,
    pub equal: bool,
    pub k: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// `{"d": int, "steps": [{"edge": [a, b]}, ...]}`; new-vertex ids follow the
/// canonical scheme.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub d: usize,
    pub steps: Vec<StepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub edge: [u32; 2],
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::vertex_set;
    use crate::example;

    fn ids(v: &[u32]) -> Vec<VertexId> {
        v.iter().copied().map(VertexId).collect()
    }

    #[test]
    fn new_sequence() {
        let s = SubdivisionSequence::new(4).unwrap();
        assert_eq!(s.k(), 0);
        assert_eq!(s.current().num_vertices(), 8);
        assert_eq!(s.gamma_complex().num_vertices(), 0);
        assert!(s.k_table.values().all(BTreeSet::is_empty));
        assert_eq!(SubdivisionSequence::new(0), Err(Error::InvalidDimension(0)));

        let s0 = SubdivisionSequence::new(1).unwrap();
        assert_eq!(s0.current().num_edges(), 0);
        assert_eq!(
            SubdivisionSequence::new(2).unwrap().current().num_edges(),
            4
        );
    }

    #[test]
    fn extend_rejects_non_edges() {
        let mut s = SubdivisionSequence::new(3).unwrap();
        assert_eq!(
            s.extend(VertexId(0), VertexId(1)),
            Err(Error::NotAnEdge(VertexId(0), VertexId(1)))
        );
        assert_eq!(s.k(), 0);
    }

    #[test]
    fn k_sets_of_the_worked_example() {
        let seq = example::sequence();
        let one = seq.prefix(1);
        for v in 0..8u32 {
            let expected = if v >= 4 { ids(&[8]) } else { vec![] };
            assert_eq!(one.k_set(&vertex_set([v])).unwrap(), expected);
        }
        let two = seq.prefix(2);
        assert_eq!(two.k_set(&vertex_set([9])).unwrap(), ids(&[8]));
        assert!(two.gamma_complex().has_edge(VertexId(8), VertexId(9)));

        assert_eq!(seq.k_set(&vertex_set([10])).unwrap(), vec![]);
        assert_eq!(seq.k_set(&vertex_set([4])).unwrap(), ids(&[8, 10]));
        assert_eq!(seq.k_set(&vertex_set([0])).unwrap(), ids(&[9]));
        assert_eq!(seq.k_set(&VertexSet::new()).unwrap(), ids(&[8, 9, 10]));
    }

    #[test]
    fn classification_in_the_worked_example() {
        let seq = example::sequence();
        assert_eq!(seq.classify_face(&vertex_set([0])).unwrap(), FaceClass::F1);
        assert_eq!(seq.classify_face(&vertex_set([10])).unwrap(), FaceClass::F3);
        assert_eq!(seq.classify_face(&vertex_set([1])).unwrap(), FaceClass::F5);
        assert_eq!(
            seq.classify_face(&vertex_set([0, 10])).unwrap(),
            FaceClass::F2
        );
        assert_eq!(seq.classify_face(&VertexSet::new()).unwrap(), FaceClass::F4);
        assert_eq!(
            SubdivisionSequence::new(3)
                .unwrap()
                .classify_face(&VertexSet::new()),
            Err(Error::NoSteps)
        );
    }

    #[test]
    fn w_sets_and_phi_in_the_worked_example() {
        let seq = example::sequence();
        assert_eq!(seq.w_set(&vertex_set([0])).unwrap(), ids(&[10]));
        assert_eq!(seq.w_set(&VertexSet::new()).unwrap(), ids(&[8, 9, 10]));
        assert_eq!(
            seq.phi(&vertex_set([0])).unwrap(),
            vec![(VertexId(9), VertexId(10))]
        );
        let identity: Vec<_> = ids(&[8, 9, 10]).into_iter().map(|w| (w, w)).collect();
        assert_eq!(seq.phi(&VertexSet::new()).unwrap(), identity);
        assert_eq!(seq.phi(&vertex_set([10])).unwrap(), vec![]);
    }

    #[test]
    fn induced_sequence_of_empty_face_is_the_sequence() {
        let seq = SubdivisionSequence::random(4, 6, 3).unwrap();
        assert_eq!(seq.induced_sequence(&VertexSet::new()).unwrap().base, seq);
    }

    #[test]
    fn induced_sequence_of_the_last_vertex_is_its_link() {
        let seq = example::sequence();
        let w3 = vertex_set([10]);
        let ind = seq.induced_sequence(&w3).unwrap();
        assert_eq!(ind.result(), &seq.current().link(&w3).unwrap());
        assert_eq!(ind.base.d(), 3);
    }

    #[test]
    fn untouched_faces_get_zero_step_sequences() {
        // {+e2}: its link never contains a subdivided edge's new vertex
        // after step 1 swaps it out, so check a face far from all steps.
        let mut seq = SubdivisionSequence::new(3).unwrap();
        seq.extend(VertexId(0), VertexId(2)).unwrap();
        let far = vertex_set([1, 3]);
        assert_eq!(seq.classify_face(&far).unwrap(), FaceClass::F5);
        assert!(seq.w_set(&far).unwrap().is_empty());
    }

    #[test]
    fn gamma_complex_of_the_worked_example() {
        let g = example::sequence().gamma_complex();
        assert_eq!(g.vertex_set(), vertex_set([8, 9, 10]));
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(VertexId(8), VertexId(9))]
        );
    }

    #[test]
    fn zero_steps_gives_trivial_report() {
        for d in 1..=6 {
            let r = SubdivisionSequence::new(d).unwrap().verify_main_theorem();
            assert_eq!(r.f_gamma, IntPolynomial::one());
            assert_eq!(r.gamma_theta, IntPolynomial::one());
            assert!(r.equal);
        }
    }

    #[test]
    fn snapshots_agree_with_recorded_edges_on_disjoint_steps() {
        // two steps on Σ_2 whose edges share no endpoint
        let mut seq = SubdivisionSequence::new(3).unwrap();
        seq.extend(VertexId(0), VertexId(2)).unwrap();
        seq.extend(VertexId(1), VertexId(4)).unwrap();
        assert_eq!(seq.gamma_complex(), seq.gamma_complex_from_snapshots());
        let (ka, kb) = seq.k_snapshot(2);
        let w1 = VertexId(6);
        assert_eq!(
            seq.gamma_complex().has_edge(w1, VertexId(7)),
            ka.contains(&w1) && kb.contains(&w1)
        );
    }

    #[test]
    fn random_sequences() {
        let a = SubdivisionSequence::random(4, 0, 9).unwrap();
        assert_eq!(a, SubdivisionSequence::new(4).unwrap());

        let cyc = SubdivisionSequence::random(2, 3, 1).unwrap();
        assert_eq!(cyc.current().num_vertices(), 7);
        assert_eq!(cyc.current().num_edges(), 7);
        assert!(cyc
            .current()
            .vertices()
            .all(|v| cyc.current().neighbors(v).unwrap().len() == 2));

        assert_eq!(
            SubdivisionSequence::random(5, 8, 42).unwrap(),
            SubdivisionSequence::random(5, 8, 42).unwrap()
        );
        assert_eq!(
            SubdivisionSequence::random(1, 1, 0),
            Err(Error::NoEdges { k: 1 })
        );
        assert!(SubdivisionSequence::random(1, 0, 0).is_ok());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let seq = SubdivisionSequence::random(4, 5, 11).unwrap();
        let json = seq.to_json().unwrap();
        assert_eq!(SubdivisionSequence::from_json(&json).unwrap(), seq);

        let bad = SequenceJson {
            d: 3,
            steps: vec![StepJson { edge: [0, 2] }, StepJson { edge: [0, 1] }],
        };
        let err = SubdivisionSequence::from_json(&bad).unwrap_err();
        assert!(matches!(err, Error::Step { index: 2, .. }));
        assert!(err.to_string().starts_with("step 2:"));
    }

    #[test]
    fn non_canonical_sequences_do_not_serialize() {
        let seq = example::sequence();
        let ind = seq.induced_sequence(&vertex_set([0])).unwrap();
        assert!(ind.base.to_json().is_err());
        assert!(seq.to_json().is_ok());
    }
}
