//! Flag building sets, flag orderings and the dual complexes of flag nestohedra.
//!
//! A building set on `[n]` contains every singleton and is closed under
//! unions of overlapping members; it is flag when each non-singleton member
//! is a disjoint union of two members. A flag ordering fixes a binary
//! decomposition `D` (a minimal connected flag building set) and lists the
//! rest of the building set so that every prefix `B_j = D ∪ {I_1, …, I_j}`
//! is again a flag building set.
//!
//! Adding `I_j` to the prefix subdivides the edge of the nested-set complex
//! joining the two members that split `I_j`, so a flag ordering is also a
//! subdivision sequence starting at `Σ_{n-2}` ([`ordering_to_sequence`]).
//! The ordering defines its own gamma graph through the index sets `U_j`,
//! `V_j`; [`verify_corollary`] checks it against the gamma complex of the
//! subdivision sequence.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clique;
use crate::complex::{FaceComplex, FlagComplex, VertexId, VertexSet};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::subdivision::SubdivisionSequence;

/// A subset of `{1, …, 64}` stored as a bitmask (element `i` is bit `i - 1`).
///
/// Ordered by cardinality, then lexicographically by sorted element list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn new<I: IntoIterator<Item = u32>>(elements: I) -> Result<Subset> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > 64 {
                return Err(Error::InvalidBuildingSet(format!(
                    "element {e} outside 1..=64"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// `{1, …, n}`.
    pub fn full(n: u32) -> Subset {
        Subset(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn singleton(i: u32) -> Subset {
        Subset(1 << (i - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn elements(self) -> Vec<u32> {
        (0..64)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    pub fn contains(self, i: u32) -> bool {
        (1..=64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements().cmp(&other.elements()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Subset::new(v).map_err(serde::de::Error::custom)
    }
}

/// A family of non-empty subsets of `[n]`. The building-set axioms are
/// checked by [`BuildingSet::validate`], not enforced on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    n: u32,
    elements: BTreeSet<Subset>,
}

impl BuildingSet {
    pub fn new<I: IntoIterator<Item = Subset>>(n: u32, elements: I) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidBuildingSet(format!("ground set size {n}")));
        }
        let ground = Subset::full(n);
        let elements: BTreeSet<Subset> = elements.into_iter().collect();
        if let Some(bad) = elements
            .iter()
            .find(|s| s.is_empty() || !s.is_subset(ground))
        {
            return Err(Error::InvalidBuildingSet(format!(
                "{bad:?} is empty or not a subset of [{n}]"
            )));
        }
        Ok(BuildingSet { n, elements })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn elements(&self) -> &BTreeSet<Subset> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.elements.contains(&s)
    }

    /// Every non-empty subset of `[n]`; its nestohedron is the permutohedron.
    pub fn power_set(n: u32) -> Self {
        let elements = (1..1u64 << n).map(Subset);
        Self::new(n, elements).expect("subsets of [n]")
    }

    /// All intervals `{i, …, j}`; its nestohedron is the associahedron.
    pub fn intervals(n: u32) -> Self {
        let elements = (1..=n).flat_map(|i| (i..=n).map(move |j| Subset::new(i..=j).unwrap()));
        Self::new(n, elements).expect("intervals of [n]")
    }

    /// Contains every singleton and is closed under unions of overlapping members.
    pub fn validate(&self) -> bool {
        (1..=self.n).all(|i| self.contains(Subset::singleton(i)))
            && self.elements.iter().all(|&a| {
                self.elements
                    .iter()
                    .all(|&b| !a.intersects(b) || self.contains(a.union(b)))
            })
    }

    pub fn is_connected(&self) -> bool {
        self.contains(self.ground())
    }

    /// Unordered splits `{A, X \ A}` of `x` with both parts in the family,
    /// smaller part first.
    pub fn splits(&self, x: Subset) -> Vec<(Subset, Subset)> {
        splits_within(&self.elements, x)
    }

    /// Every non-singleton member is a disjoint union of two members.
    pub fn is_flag(&self) -> Result<bool> {
        if !self.validate() {
            return Err(Error::InvalidBuildingSet(
                "missing singleton or not closed under overlapping unions".into(),
            ));
        }
        Ok(self.first_unsplittable().is_none())
    }

    fn first_unsplittable(&self) -> Option<Subset> {
        self.elements
            .iter()
            .copied()
            .find(|&x| x.len() > 1 && self.splits(x).is_empty())
    }

    fn require_connected_flag(&self) -> Result<()> {
        if !self.validate() {
            return Err(Error::InvalidBuildingSet(
                "missing singleton or not closed under overlapping unions".into(),
            ));
        }
        if let Some(x) = self.first_unsplittable() {
            return Err(Error::NotFlagBuildingSet(format!("{x:?}")));
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(())
    }

    pub fn to_json(&self) -> BuildingSetJson {
        BuildingSetJson {
            n: self.n,
            elements: self.elements.iter().map(|s| s.elements()).collect(),
        }
    }

    pub fn from_json(json: &BuildingSetJson) -> Result<Self> {
        let elements = json
            .elements
            .iter()
            .map(|e| Subset::new(e.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.n, elements)
    }
}

fn splits_within(family: &BTreeSet<Subset>, x: Subset) -> Vec<(Subset, Subset)> {
    let mut out: Vec<(Subset, Subset)> = family
        .iter()
        .filter(|&&a| !a.is_empty() && a != x && a.is_subset(x))
        .filter_map(|&a| {
            let b = x.minus(a);
            family
                .contains(&b)
                .then(|| if a < b { (a, b) } else { (b, a) })
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn close_under_unions(family: &mut BTreeSet<Subset>) {
    loop {
        let mut added = Vec::new();
        for &a in family.iter() {
            for &b in family.iter() {
                if a.intersects(b) && !family.contains(&a.union(b)) {
                    added.push(a.union(b));
                }
            }
        }
        if added.is_empty() {
            return;
        }
        family.extend(added);
    }
}

/// A random connected flag building set on `[n]`: a random binary
/// decomposition, grown by random subsets whose union-closure stays flag.
pub fn random_flag_building_set<R: Rng>(n: u32, rng: &mut R) -> BuildingSet {
    let mut blocks: Vec<Subset> = (1..=n).map(Subset::singleton).collect();
    let mut family: BTreeSet<Subset> = blocks.iter().copied().collect();
    while blocks.len() > 1 {
        let i = rng.gen_range(0..blocks.len());
        let a = blocks.swap_remove(i);
        let j = rng.gen_range(0..blocks.len());
        let b = blocks.swap_remove(j);
        blocks.push(a.union(b));
        family.insert(a.union(b));
    }
    let rounds = rng.gen_range(0..=2 * n as usize);
    for _ in 0..rounds {
        let mask = rng.gen_range(1..1u64 << n);
        let x = Subset(mask);
        if x.len() < 2 {
            continue;
        }
        let mut grown = family.clone();
        grown.insert(x);
        close_under_unions(&mut grown);
        let candidate = BuildingSet { n, elements: grown };
        if candidate.first_unsplittable().is_none() {
            family = candidate.elements;
        }
    }
    BuildingSet {
        n,
        elements: family,
    }
}

/// A binary decomposition of `[n]` inside `b`.
///
/// Splits recursively from `[n]`. Each member is split so that the smaller
/// part is as small as possible; ties go to the lexicographically smallest
/// larger part.
pub fn find_decomposition(b: &BuildingSet) -> Result<BuildingSet> {
    b.require_connected_flag()?;
    let mut chosen = BTreeSet::new();
    let mut stack = vec![b.ground()];
    while let Some(x) = stack.pop() {
        chosen.insert(x);
        if x.len() == 1 {
            continue;
        }
        let (small, large) = b
            .splits(x)
            .into_iter()
            .min_by(|p, q| p.0.len().cmp(&q.0.len()).then_with(|| p.1.cmp(&q.1)))
            .ok_or_else(|| Error::NotFlagBuildingSet(format!("{x:?}")))?;
        stack.push(small);
        stack.push(large);
    }
    BuildingSet::new(b.n, chosen)
}

/// A decomposition plus an ordering of the remaining members of a flag
/// building set in which every prefix is a flag building set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagOrdering {
    building_set: BuildingSet,
    decomposition: BuildingSet,
    order: Vec<Subset>,
}

impl FlagOrdering {
    /// Validates a user-supplied ordering.
    pub fn new(
        building_set: BuildingSet,
        decomposition: BuildingSet,
        order: Vec<Subset>,
    ) -> Result<Self> {
        let bad = |index: usize, reason: String| Error::InvalidOrdering { index, reason };
        building_set.require_connected_flag()?;
        if decomposition.n != building_set.n {
            return Err(Error::InvalidDecomposition("ground sets differ".into()));
        }
        if !decomposition.elements.is_subset(&building_set.elements) {
            return Err(Error::InvalidDecomposition(
                "not contained in the building set".into(),
            ));
        }
        decomposition
            .require_connected_flag()
            .map_err(|e| Error::InvalidDecomposition(e.to_string()))?;
        if decomposition.len() != 2 * building_set.n as usize - 1 {
            return Err(Error::InvalidDecomposition(format!(
                "{} members, a minimal one has {}",
                decomposition.len(),
                2 * building_set.n - 1
            )));
        }
        let rest: BTreeSet<Subset> = building_set
            .elements
            .difference(&decomposition.elements)
            .copied()
            .collect();
        let listed: BTreeSet<Subset> = order.iter().copied().collect();
        if listed.len() != order.len() || listed != rest {
            return Err(bad(
                0,
                "order must list each non-decomposition member exactly once".into(),
            ));
        }
        let mut prefix = decomposition.clone();
        for (i, &x) in order.iter().enumerate() {
            prefix.elements.insert(x);
            if !prefix.validate() {
                return Err(bad(
                    i + 1,
                    format!("prefix through {x:?} is not a building set"),
                ));
            }
            if let Some(u) = prefix.first_unsplittable() {
                return Err(bad(
                    i + 1,
                    format!("prefix through {x:?} is not flag at {u:?}"),
                ));
            }
        }
        Ok(FlagOrdering {
            building_set,
            decomposition,
            order,
        })
    }

    pub fn building_set(&self) -> &BuildingSet {
        &self.building_set
    }

    pub fn decomposition(&self) -> &BuildingSet {
        &self.decomposition
    }

    /// `I_1, …, I_k`.
    pub fn order(&self) -> &[Subset] {
        &self.order
    }

    pub fn k(&self) -> usize {
        self.order.len()
    }

    /// `B_j = D ∪ {I_1, …, I_j}`.
    pub fn prefix_set(&self, j: usize) -> BTreeSet<Subset> {
        let mut s = self.decomposition.elements.clone();
        s.extend(self.order[..j].iter().copied());
        s
    }

    /// `U_j`: indices `i < j` with `I_i ⊄ I_j` such that no `I ∈ B_{i-1}`
    /// has `I \ I_j = I_i \ I_j`. Indices are 1-based.
    pub fn u_set(&self, j: usize) -> Vec<usize> {
        let ij = self.order[j - 1];
        (1..j)
            .filter(|&i| {
                let ii = self.order[i - 1];
                !ii.is_subset(ij)
                    && !self
                        .prefix_set(i - 1)
                        .iter()
                        .any(|&x| x.minus(ij) == ii.minus(ij))
            })
            .collect()
    }

    /// `V_j`: indices `i < j` with `I_i ⊆ I_j` such that some `I ∈ B_{i-1}`
    /// has `I_i ⊊ I ⊊ I_j`. Indices are 1-based.
    pub fn v_set(&self, j: usize) -> Vec<usize> {
        let ij = self.order[j - 1];
        (1..j)
            .filter(|&i| {
                let ii = self.order[i - 1];
                ii.is_subset(ij)
                    && self
                        .prefix_set(i - 1)
                        .iter()
                        .any(|&x| x != ii && x != ij && ii.is_subset(x) && x.is_subset(ij))
            })
            .collect()
    }

    /// Vertex of `I_j` in [`FlagOrdering::gamma_complex`].
    pub fn ordering_vertex(j: usize) -> VertexId {
        VertexId(j as u32)
    }

    /// The graph on `v(I_1), …, v(I_k)` (ids `1..=k`) with `v(I_i) ~ v(I_j)`
    /// for `i < j` iff `i ∈ U_j ∪ V_j`; its cliques are the faces.
    pub fn gamma_complex(&self) -> FlagComplex {
        let mut edges = Vec::new();
        for j in 1..=self.k() {
            let mut earlier = self.u_set(j);
            earlier.extend(self.v_set(j));
            for i in earlier {
                edges.push((Self::ordering_vertex(i), Self::ordering_vertex(j)));
            }
        }
        FlagComplex::from_edges((1..=self.k()).map(Self::ordering_vertex), edges)
            .expect("ordering vertices")
    }

    pub fn to_json(&self) -> OrderingJson {
        OrderingJson {
            decomposition: self
                .decomposition
                .elements
                .iter()
                .map(|s| s.elements())
                .collect(),
            order: self.order.iter().map(|s| s.elements()).collect(),
        }
    }

    pub fn from_json(building_set: BuildingSet, json: &OrderingJson) -> Result<Self> {
        let decomposition = BuildingSet::new(
            building_set.n,
            json.decomposition
                .iter()
                .map(|e| Subset::new(e.iter().copied()))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let order = json
            .order
            .iter()
            .map(|e| Subset::new(e.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(building_set, decomposition, order)
    }
}

/// Whether `x` can follow the flag building set `prefix`: it must split
/// inside `prefix`, and its union with every overlapping member must
/// already be present (or be `x` itself).
fn can_append(prefix: &BTreeSet<Subset>, x: Subset) -> bool {
    !splits_within(prefix, x).is_empty()
        && prefix
            .iter()
            .all(|&y| !y.intersects(x) || y.union(x) == x || prefix.contains(&y.union(x)))
}

/// Finds a flag ordering by depth-first search, trying candidates in
/// (cardinality, lexicographic) order. Dead-end states are memoized.
pub fn find_flag_ordering(b: &BuildingSet, decomposition: &BuildingSet) -> Result<FlagOrdering> {
    let candidates: Vec<Subset> = b
        .elements
        .difference(&decomposition.elements)
        .copied()
        .collect();
    search_ordering(b, decomposition, candidates)
}

/// As [`find_flag_ordering`], with candidates tried in an order shuffled by `seed`.
pub fn find_flag_ordering_seeded(
    b: &BuildingSet,
    decomposition: &BuildingSet,
    seed: u64,
) -> Result<FlagOrdering> {
    let mut candidates: Vec<Subset> = b
        .elements
        .difference(&decomposition.elements)
        .copied()
        .collect();
    candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    search_ordering(b, decomposition, candidates)
}

fn search_ordering(
    b: &BuildingSet,
    decomposition: &BuildingSet,
    candidates: Vec<Subset>,
) -> Result<FlagOrdering> {
    fn dfs(
        prefix: &mut BTreeSet<Subset>,
        candidates: &[Subset],
        used: &mut Vec<bool>,
        order: &mut Vec<Subset>,
        dead: &mut HashSet<Vec<bool>>,
    ) -> bool {
        if order.len() == candidates.len() {
            return true;
        }
        if dead.contains(used) {
            return false;
        }
        for i in 0..candidates.len() {
            if used[i] || !can_append(prefix, candidates[i]) {
                continue;
            }
            used[i] = true;
            prefix.insert(candidates[i]);
            order.push(candidates[i]);
            if dfs(prefix, candidates, used, order, dead) {
                return true;
            }
            order.pop();
            prefix.remove(&candidates[i]);
            used[i] = false;
        }
        dead.insert(used.clone());
        false
    }

    b.require_connected_flag()?;
    let mut prefix = decomposition.elements.clone();
    let mut used = vec![false; candidates.len()];
    let mut order = Vec::with_capacity(candidates.len());
    let mut dead = HashSet::new();
    if !dfs(&mut prefix, &candidates, &mut used, &mut order, &mut dead) {
        return Err(Error::NoFlagOrdering);
    }
    FlagOrdering::new(b.clone(), decomposition.clone(), order)
}

/// The nested-set complex of a connected building set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedSetComplex {
    /// Clique form; vertex `VertexId(i)` is `labels[i]`.
    pub complex: FlagComplex,
    /// Every nested set, enumerated directly from the definition.
    pub faces: FaceComplex,
    pub labels: Vec<Subset>,
}

impl NestedSetComplex {
    pub fn vertex_of(&self, s: Subset) -> Option<VertexId> {
        self.labels
            .iter()
            .position(|&x| x == s)
            .map(|i| VertexId(i as u32))
    }
}

/// Nested sets of `b`: families of members other than `[n]` that are
/// pairwise nested or disjoint, and in which no two or more pairwise
/// disjoint members have their union in `b`.
///
/// The face set is built from that definition and must coincide with the
/// clique complex of its own 1-skeleton; otherwise `NestedSetsNotFlag`.
pub fn nested_set_complex(b: &BuildingSet) -> Result<NestedSetComplex> {
    fn fits(b: &BuildingSet, labels: &[Subset], current: &[usize], x: Subset) -> bool {
        let mut disjoint = Vec::new();
        for &c in current {
            let y = labels[c];
            if y.intersects(x) {
                if !(y.is_subset(x) || x.is_subset(y)) {
                    return false;
                }
            } else {
                disjoint.push(y);
            }
        }
        // every pairwise-disjoint subfamily of `disjoint`, joined with x
        (1u64..1 << disjoint.len()).all(|mask| {
            let mut acc = x;
            for (i, &y) in disjoint.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if acc.intersects(y) {
                        return true;
                    }
                    acc = acc.union(y);
                }
            }
            !b.contains(acc)
        })
    }

    fn walk(
        b: &BuildingSet,
        labels: &[Subset],
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        for i in start..labels.len() {
            if fits(b, labels, current, labels[i]) {
                current.push(i);
                out.push(current.iter().map(|&c| VertexId(c as u32)).collect());
                walk(b, labels, i + 1, current, out);
                current.pop();
            }
        }
    }

    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let ground = b.ground();
    let labels: Vec<Subset> = b
        .elements
        .iter()
        .copied()
        .filter(|&s| s != ground)
        .collect();
    let mut faces = vec![VertexSet::new()];
    walk(b, &labels, 0, &mut Vec::new(), &mut faces);
    let faces = FaceComplex::from_facets((0..labels.len() as u32).map(VertexId), faces);
    if !faces.is_flag() {
        return Err(Error::NestedSetsNotFlag);
    }
    Ok(NestedSetComplex {
        complex: faces.one_skeleton(),
        faces,
        labels,
    })
}

/// A subdivision sequence produced from a flag ordering, with the
/// building-set member carried by each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub sequence: SubdivisionSequence,
    pub vertex_of: BTreeMap<Subset, VertexId>,
}

/// Sibling pairs of the decomposition tree, ordered by their union; within
/// a pair the smaller member comes first.
fn sibling_pairs(decomposition: &BuildingSet) -> Result<Vec<(Subset, Subset)>> {
    decomposition
        .elements
        .iter()
        .filter(|x| x.len() > 1)
        .map(|&x| {
            let children: Vec<Subset> = decomposition
                .elements
                .iter()
                .copied()
                .filter(|&c| c != x && c.is_subset(x))
                .filter(|&c| {
                    !decomposition
                        .elements
                        .iter()
                        .any(|&m| m != x && m != c && c.is_subset(m) && m.is_subset(x))
                })
                .collect();
            match children[..] {
                [a, b] if !a.intersects(b) && a.union(b) == x => Ok((a, b)),
                _ => Err(Error::InvalidDecomposition(format!(
                    "{x:?} does not have exactly two disjoint maximal children"
                ))),
            }
        })
        .collect()
}

/// Turns a flag ordering into a subdivision sequence on `Σ_{n-2}`.
///
/// Sibling pairs of the decomposition become the antipodal pairs
/// `(2i, 2i+1)`; step `j` subdivides the edge between the unique two
/// members of `B_{j-1}` whose disjoint union is `I_j`, and `w_j` carries `I_j`.
pub fn ordering_to_sequence(ordering: &FlagOrdering) -> Result<Bridge> {
    let decomposition = &ordering.decomposition;
    let pairs = sibling_pairs(decomposition)?;
    let mut vertex_of = BTreeMap::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        vertex_of.insert(a, VertexId(2 * i as u32));
        vertex_of.insert(b, VertexId(2 * i as u32 + 1));
    }
    let canonical: Vec<(VertexId, VertexId)> = (0..pairs.len() as u32)
        .map(|i| (VertexId(2 * i), VertexId(2 * i + 1)))
        .collect();
    let mut sequence = SubdivisionSequence::on_pairs(canonical)?;

    let nested = nested_set_complex(decomposition)?;
    let relabel: BTreeMap<VertexId, VertexId> = nested
        .labels
        .iter()
        .enumerate()
        .map(|(i, s)| (VertexId(i as u32), vertex_of[s]))
        .collect();
    if !nested
        .complex
        .is_isomorphic_under(sequence.initial(), &relabel)?
    {
        return Err(Error::InvalidDecomposition(
            "nested-set complex is not the cross-polytope on sibling pairs".into(),
        ));
    }

    for (j, &x) in ordering.order.iter().enumerate() {
        let index = j + 1;
        let prefix = ordering.prefix_set(j);
        let splits = splits_within(&prefix, x);
        let (a, b) = match splits[..] {
            [one] => one,
            _ => {
                return Err(Error::InvalidOrdering {
                    index,
                    reason: format!(
                        "{x:?} has {} splits in the prefix, need exactly one",
                        splits.len()
                    ),
                })
            }
        };
        let w =
            sequence
                .extend(vertex_of[&a], vertex_of[&b])
                .map_err(|e| Error::InvalidOrdering {
                    index,
                    reason: e.to_string(),
                })?;
        vertex_of.insert(x, w);
    }
    Ok(Bridge {
        sequence,
        vertex_of,
    })
}

impl Bridge {
    /// Whether the final complex is the nested-set complex of the whole
    /// building set under the accumulated vertex map.
    pub fn is_sound(&self, b: &BuildingSet) -> Result<bool> {
        let nested = nested_set_complex(b)?;
        let mut map = BTreeMap::new();
        for (i, s) in nested.labels.iter().enumerate() {
            match self.vertex_of.get(s) {
                Some(&v) => map.insert(VertexId(i as u32), v),
                None => return Ok(false),
            };
        }
        if map.len() != self.sequence.current().num_vertices() {
            return Ok(false);
        }
        nested
            .complex
            .is_isomorphic_under(self.sequence.current(), &map)
    }
}

/// Outcome of comparing the two gamma complexes of a flag ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    /// f-polynomial of the gamma complex of the subdivision sequence.
    pub f_gamma: IntPolynomial,
    /// γ-polynomial of the final complex.
    pub gamma_theta: IntPolynomial,
    pub equal: bool,
    pub k: usize,
    pub d: usize,
    /// `w_j ↦ v(I_j)` is an isomorphism between the two gamma complexes.
    pub isomorphic: bool,
    /// f-polynomial of the ordering's own gamma complex.
    pub f_gamma_ordering: IntPolynomial,
    /// `U_j ∪ V_j` equals the K-set of `w_j` at creation, for every `j`.
    pub kset_rule: bool,
    /// Final complex equals the nested-set complex of the building set.
    pub bridge_sound: bool,
}

impl CorollaryReport {
    pub fn all_pass(&self) -> bool {
        self.equal && self.isomorphic && self.kset_rule && self.bridge_sound
    }
}

/// `{h < j : h ∈ U_j ∪ V_j}` against `{h : w_h ∈ K(w_j)}` at step `j`.
pub fn kset_rule_holds(ordering: &FlagOrdering, bridge: &Bridge, j: usize) -> Result<bool> {
    let seq = bridge.sequence.prefix(j);
    let w = seq.w(j);
    let from_k: BTreeSet<usize> = seq
        .k_set(&VertexSet::from([w]))?
        .into_iter()
        .map(|v| seq.step_of(v).expect("K-sets hold new vertices"))
        .collect();
    let mut from_uv: BTreeSet<usize> = ordering.u_set(j).into_iter().collect();
    from_uv.extend(ordering.v_set(j));
    Ok(from_k == from_uv)
}

/// Builds both gamma complexes of a flag ordering and compares them.
pub fn verify_corollary(ordering: &FlagOrdering) -> Result<CorollaryReport> {
    let bridge = ordering_to_sequence(ordering)?;
    let main = bridge.sequence.verify_main_theorem();
    let from_sequence = bridge.sequence.gamma_complex();
    let from_ordering = ordering.gamma_complex();
    let map: BTreeMap<VertexId, VertexId> = (1..=ordering.k())
        .map(|j| (bridge.sequence.w(j), FlagOrdering::ordering_vertex(j)))
        .collect();
    let isomorphic = from_sequence.is_isomorphic_under(&from_ordering, &map)?;
    let mut kset_rule = true;
    for j in 1..=ordering.k() {
        kset_rule &= kset_rule_holds(ordering, &bridge, j)?;
    }
    let counts = clique::clique_counts(&from_ordering);
    Ok(CorollaryReport {
        f_gamma: main.f_gamma,
        gamma_theta: main.gamma_theta,
        equal: main.equal,
        k: main.k,
        d: main.d,
        isomorphic,
        f_gamma_ordering: IntPolynomial::new(counts.into_iter().map(|c| c as i64).collect()),
        kset_rule,
        bridge_sound: bridge.is_sound(&ordering.building_set)?,
    })
}

/// `{"n": int, "elements": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildingSetJson {
    pub n: u32,
    pub elements: Vec<Vec<u32>>,
}

/// `{"decomposition": [[...]], "order": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingJson {
    pub decomposition: Vec<Vec<u32>>,
    pub order: Vec<Vec<u32>>,
}
