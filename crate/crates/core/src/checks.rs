//! Exhaustive structural checks on a subdivision sequence.
//!
//! Each check walks every face of the relevant complexes and compares two
//! independent computations of the same object. A failure carries the first
//! offending face. These back the `--deep` mode of the command-line driver
//! and the acceptance suite.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex::{VertexId, VertexSet};
use crate::error::Error;
use crate::subdivision::{FaceClass, SubdivisionSequence};
use crate::vectors::{gamma_increment, gamma_of, h_from_f, is_symmetric};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

impl std::error::Error for Violation {}

pub type CheckResult = Result<(), Violation>;

fn fail(check: &'static str, detail: impl Into<String>) -> Violation {
    Violation {
        check,
        detail: detail.into(),
    }
}

fn lift(check: &'static str) -> impl Fn(Error) -> Violation {
    move |e| fail(check, e.to_string())
}

fn swap_vertex(face: &VertexSet, out: VertexId, ins: &[VertexId]) -> VertexSet {
    let mut f = face.clone();
    f.remove(&out);
    f.extend(ins.iter().copied());
    f
}

/// Face-level K recursion: `K_j(F)` computed by intersection agrees with
/// the case rule applied to `K_{j-1}` for every face of every `Θ^j`.
pub fn k_recursion(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "k_recursion";
    let err = lift(NAME);
    let mut prev = seq.prefix(0);
    for j in 1..=seq.k() {
        let cur = seq.prefix(j);
        let step = cur.steps()[j - 1];
        let (a, b, w) = (step.edge.0, step.edge.1, step.new_vertex);
        for face in cur.current().faces() {
            let got = cur.k_set(&face).map_err(&err)?;
            let expected = match cur.classify_face(&face).map_err(&err)? {
                FaceClass::F1 | FaceClass::F5 => prev.k_set(&face),
                FaceClass::F2 => {
                    let other = if face.contains(&a) { b } else { a };
                    prev.k_set(&swap_vertex(&face, w, &[other]))
                }
                FaceClass::F3 => prev.k_set(&swap_vertex(&face, w, &[a, b])),
                FaceClass::F4 => prev.k_set(&face).map(|mut k| {
                    k.push(w);
                    k
                }),
            }
            .map_err(&err)?;
            if got != expected {
                return Err(fail(
                    NAME,
                    format!("step {j}, face {face:?}: K = {got:?}, rule gives {expected:?}"),
                ));
            }
        }
        prev = cur;
    }
    Ok(())
}

/// W recursion: `W_j(F)` follows the five case rules from `W_{j-1}`,
/// orderings included.
pub fn w_recursion(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "w_recursion";
    let err = lift(NAME);
    let mut prev = seq.prefix(0);
    for j in 1..=seq.k() {
        let cur = seq.prefix(j);
        let step = cur.steps()[j - 1];
        let (a, b, w) = (step.edge.0, step.edge.1, step.new_vertex);
        for face in cur.current().faces() {
            let got = cur.w_set(&face).map_err(&err)?;
            let expected = match cur.classify_face(&face).map_err(&err)? {
                FaceClass::F1 => {
                    let replaced = if face.contains(&a) { b } else { a };
                    prev.w_set(&face).map(|ws| {
                        ws.into_iter()
                            .map(|v| if v == replaced { w } else { v })
                            .collect()
                    })
                }
                FaceClass::F2 => {
                    let other = if face.contains(&a) { b } else { a };
                    prev.w_set(&swap_vertex(&face, w, &[other]))
                }
                FaceClass::F3 => prev.w_set(&swap_vertex(&face, w, &[a, b])),
                FaceClass::F4 => prev.w_set(&face).map(|mut ws| {
                    ws.push(w);
                    ws
                }),
                FaceClass::F5 => prev.w_set(&face),
            }
            .map_err(&err)?;
            if got != expected {
                return Err(fail(
                    NAME,
                    format!("step {j}, face {face:?}: W = {got:?}, rule gives {expected:?}"),
                ));
            }
            let k = cur.k_set(&face).map_err(&err)?;
            if k.len() != got.len() {
                return Err(fail(
                    NAME,
                    format!(
                        "step {j}, face {face:?}: |K| = {} but |W| = {}",
                        k.len(),
                        got.len()
                    ),
                ));
            }
        }
        prev = cur;
    }
    Ok(())
}

/// The induced sequence of every face of every `Θ^j` ends in exactly the
/// link of that face, labels included.
pub fn link_replay(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "link_replay";
    let err = lift(NAME);
    for j in 0..=seq.k() {
        let cur = seq.prefix(j);
        for face in cur.current().faces() {
            let induced = cur.induced_sequence(&face).map_err(&err)?;
            let link = cur.current().link(&face).map_err(&err)?;
            if induced.result() != &link {
                return Err(fail(
                    NAME,
                    format!("step {j}, face {face:?}: induced result differs from the link"),
                ));
            }
            if induced.base.d() + face.len() != cur.d() {
                return Err(fail(
                    NAME,
                    format!(
                        "step {j}, face {face:?}: induced dimension {}",
                        induced.base.d()
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// For `G` in the link of `F`, φ_F carries `K(F ∪ G)` onto the K-set of `G`
/// in the induced sequence of `F`.
pub fn phi_image(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "phi_image";
    let err = lift(NAME);
    for j in 0..=seq.k() {
        let cur = seq.prefix(j);
        for face in cur.current().faces() {
            let induced = cur.induced_sequence(&face).map_err(&err)?;
            let phi: BTreeMap<_, _> = cur.phi_from(&induced).map_err(&err)?.into_iter().collect();
            for g in induced.result().faces() {
                let union: VertexSet = face.union(&g).copied().collect();
                let image: Vec<VertexId> = cur
                    .k_set(&union)
                    .map_err(&err)?
                    .into_iter()
                    .map(|v| phi[&v])
                    .collect();
                let expected = induced.base.k_set(&g).map_err(&err)?;
                if image != expected {
                    return Err(fail(
                        NAME,
                        format!(
                            "step {j}, F = {face:?}, G = {g:?}: φ(K(F∪G)) = {image:?}, K_lk(G) = {expected:?}"
                        ),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Γ restricted to `K(F)` is isomorphic, via φ_F, to the gamma complex of
/// the induced sequence of `F`.
pub fn gamma_restriction(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "gamma_restriction";
    let err = lift(NAME);
    for j in 0..=seq.k() {
        let cur = seq.prefix(j);
        let gamma = cur.gamma_complex();
        for face in cur.current().faces() {
            let induced = cur.induced_sequence(&face).map_err(&err)?;
            let phi: BTreeMap<_, _> = cur.phi_from(&induced).map_err(&err)?.into_iter().collect();
            let restricted = gamma.induced(&phi.keys().copied().collect());
            let target = induced.base.gamma_complex();
            if !restricted
                .is_isomorphic_under(&target, &phi)
                .map_err(&err)?
            {
                return Err(fail(
                    NAME,
                    format!("step {j}, face {face:?}: restriction not isomorphic under φ"),
                ));
            }
        }
    }
    Ok(())
}

/// Γ of every prefix is the restriction of Γ to the first `j` new vertices,
/// and the snapshot recomputation agrees with the recorded edges.
pub fn gamma_prefixes(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "gamma_prefixes";
    let gamma = seq.gamma_complex();
    if gamma != seq.gamma_complex_from_snapshots() {
        return Err(fail(NAME, "snapshot recomputation differs"));
    }
    let ws = seq.new_vertices();
    for j in 0..=seq.k() {
        let keep: VertexSet = ws[..j].iter().copied().collect();
        if gamma.induced(&keep) != seq.prefix(j).gamma_complex() {
            return Err(fail(NAME, format!("prefix {j} differs")));
        }
    }
    Ok(())
}

/// `γ(Θ^j) - γ(Θ^{j-1}) = t · γ(lk_{Θ^{j-1}}(S_j))` at every step.
pub fn gamma_increments(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "gamma_increments";
    let err = lift(NAME);
    for (i, step) in seq.steps().iter().enumerate() {
        let (lhs, rhs) = gamma_increment(&seq.complexes()[i], step.edge.0, step.edge.1, seq.d())
            .map_err(&err)?;
        if lhs != rhs {
            return Err(fail(NAME, format!("step {}: {lhs} vs t·{rhs}", i + 1)));
        }
    }
    Ok(())
}

/// Every `Θ^j` has palindromic h and coefficientwise non-negative γ.
pub fn sphere_invariants(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "sphere_invariants";
    let err = lift(NAME);
    for (j, theta) in seq.complexes().iter().enumerate() {
        let f = crate::vectors::f_poly(theta, seq.d()).map_err(&err)?;
        let h = h_from_f(&f, seq.d()).map_err(&err)?;
        if !is_symmetric(&h, seq.d()) {
            return Err(fail(NAME, format!("Θ^{j}: h = {h} is not palindromic")));
        }
        let gamma = gamma_of(theta, seq.d()).map_err(&err)?.gamma;
        if !gamma.is_nonnegative() {
            return Err(fail(
                NAME,
                format!("Θ^{j}: γ = {gamma} has a negative entry"),
            ));
        }
    }
    Ok(())
}

/// Replays the steps on explicit face sets and compares with the clique
/// complexes; also checks each result is flag.
pub fn face_set_replay(seq: &SubdivisionSequence) -> CheckResult {
    const NAME: &str = "face_set_replay";
    let err = lift(NAME);
    let mut faces = seq.initial().to_face_complex();
    for (i, step) in seq.steps().iter().enumerate() {
        let edge = VertexSet::from([step.edge.0, step.edge.1]);
        faces = faces.subdivide_face(&edge, step.new_vertex).map_err(&err)?;
        if faces != seq.complexes()[i + 1].to_face_complex() {
            return Err(fail(NAME, format!("step {}: face sets differ", i + 1)));
        }
        if !faces.is_flag() {
            return Err(fail(NAME, format!("step {}: result is not flag", i + 1)));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub type Check = fn(&SubdivisionSequence) -> CheckResult;

/// Every structural check, by name.
pub const ALL: [(&str, Check); 9] = [
    ("k_recursion", k_recursion),
    ("w_recursion", w_recursion),
    ("link_replay", link_replay),
    ("phi_image", phi_image),
    ("gamma_restriction", gamma_restriction),
    ("gamma_prefixes", gamma_prefixes),
    ("gamma_increments", gamma_increments),
    ("sphere_invariants", sphere_invariants),
    ("face_set_replay", face_set_replay),
];

pub fn run_all(seq: &SubdivisionSequence) -> Vec<CheckOutcome> {
    ALL.iter()
        .map(|&(check, f)| match f(seq) {
            Ok(()) => CheckOutcome {
                check,
                passed: true,
                detail: None,
            },
            Err(v) => CheckOutcome {
                check,
                passed: false,
                detail: Some(v.detail),
            },
        })
        .collect()
}
