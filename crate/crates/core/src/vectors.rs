//! f-, h- and γ-polynomials.
//!
//! For a `(d-1)`-dimensional complex with face numbers `f_i` (faces with
//! `i` vertices, `f_0 = 1`):
//!
//! ```text
//! h(t) = Σ_i f_i t^i (1 - t)^(d - i)
//! h(t) = Σ_{i ≤ d/2} γ_i t^i (1 + t)^(d - 2i)     (when h is palindromic)
//! ```
//!
//! All transforms are exact integer arithmetic. The dimension `d` is always
//! passed explicitly: a complex built by a chain of subdivisions does not
//! carry it, and `h` depends on `d`, not only on `f`.

use serde::{Deserialize, Serialize};

use crate::clique;
use crate::complex::{FaceComplex, FlagComplex, VertexId, VertexSet};
use crate::error::{Error, Result};
use crate::poly::{binomial, IntPolynomial};

/// f-polynomial of a flag complex whose cliques have at most `d` vertices.
pub fn f_poly(complex: &FlagComplex, d: usize) -> Result<IntPolynomial> {
    let counts = clique::clique_counts(complex);
    let largest = counts.len() - 1;
    if largest > d {
        return Err(Error::DimensionMismatch { clique: largest, d });
    }
    Ok(IntPolynomial::new(
        counts.into_iter().map(|c| c as i64).collect(),
    ))
}

/// f-polynomial of an explicit face complex.
pub fn f_poly_of_faces(complex: &FaceComplex) -> IntPolynomial {
    IntPolynomial::new(
        complex
            .face_counts()
            .into_iter()
            .map(|c| c as i64)
            .collect(),
    )
}

/// `h_j = Σ_{i ≤ j} (-1)^(j-i) C(d-i, j-i) f_i`.
pub fn h_from_f(f: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if let Some(degree) = f.degree().filter(|&deg| deg > d) {
        return Err(Error::DegreeTooLarge { degree, d });
    }
    let h = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, j - i) * f.coeff(i)
                })
                .sum()
        })
        .collect();
    Ok(IntPolynomial::new(h))
}

/// `h_i == h_{d-i}` for all `0 ≤ i ≤ d`, missing coefficients read as zero.
pub fn is_symmetric(h: &IntPolynomial, d: usize) -> bool {
    h.degree().is_none_or(|deg| deg <= d) && (0..=d).all(|i| h.coeff(i) == h.coeff(d - i))
}

/// Coefficients of `h` in the basis `t^i (1+t)^(d-2i)`, by peeling off the
/// lowest remaining coefficient.
pub fn gamma_from_h(h: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if !is_symmetric(h, d) {
        return Err(Error::NotSymmetric {
            h: h.coeffs().to_vec(),
            d,
        });
    }
    let one_plus_t = IntPolynomial::new(vec![1, 1]);
    let mut residue = h.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = residue.coeff(i);
        gamma.push(g);
        if g != 0 {
            let basis = one_plus_t.pow((d - 2 * i) as u32).shift(i);
            residue = &residue - &(&IntPolynomial::new(vec![g]) * &basis);
        }
    }
    if !residue.is_zero() {
        return Err(Error::NonZeroResidue {
            residue: residue.coeffs().to_vec(),
        });
    }
    Ok(IntPolynomial::new(gamma))
}

/// Re-expands `Σ γ_i t^i (1+t)^(d-2i)`.
pub fn h_from_gamma(gamma: &IntPolynomial, d: usize) -> IntPolynomial {
    let one_plus_t = IntPolynomial::new(vec![1, 1]);
    gamma
        .coeffs()
        .iter()
        .enumerate()
        .filter(|&(i, _)| 2 * i <= d)
        .fold(IntPolynomial::zero(), |acc, (i, &g)| {
            let term = &IntPolynomial::new(vec![g]) * &one_plus_t.pow((d - 2 * i) as u32).shift(i);
            &acc + &term
        })
}

/// f, h and γ of a complex together with the dimension they were computed for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FHGammaReport {
    pub d: usize,
    pub f: IntPolynomial,
    pub h: IntPolynomial,
    pub gamma: IntPolynomial,
    pub symmetric: bool,
}

impl FHGammaReport {
    /// Builds the report from an f-polynomial; fails if `h` is not palindromic.
    pub fn from_f(f: IntPolynomial, d: usize) -> Result<Self> {
        let h = h_from_f(&f, d)?;
        let gamma = gamma_from_h(&h, d)?;
        Ok(FHGammaReport {
            d,
            f,
            h,
            gamma,
            symmetric: true,
        })
    }
}

/// f → h → γ for a flag complex of dimension `d - 1`.
pub fn gamma_of(complex: &FlagComplex, d: usize) -> Result<FHGammaReport> {
    FHGammaReport::from_f(f_poly(complex, d)?, d)
}

/// Compares both sides of `γ(Θ') - γ(Θ) = t · γ(lk_Θ(S))` for the
/// subdivision `Θ'` of `Θ` in the edge `S = {a, b}`.
pub fn gamma_increment(
    complex: &FlagComplex,
    a: VertexId,
    b: VertexId,
    d: usize,
) -> Result<(IntPolynomial, IntPolynomial)> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    let fresh = complex
        .vertices()
        .last()
        .map_or(VertexId(0), |v| VertexId(v.0 + 1));
    let subdivided = complex.subdivide_edge(a, b, fresh)?;
    let link = complex.link(&VertexSet::from([a, b]))?;
    let lhs = &gamma_of(&subdivided, d)?.gamma - &gamma_of(complex, d)?.gamma;
    let rhs = gamma_of(&link, d - 2)?.gamma.shift(1);
    Ok((lhs, rhs))
}

/// True iff the γ-increment identity holds exactly for this edge.
pub fn gamma_increment_check(
    complex: &FlagComplex,
    a: VertexId,
    b: VertexId,
    d: usize,
) -> Result<bool> {
    let (lhs, rhs) = gamma_increment(complex, a, b, d)?;
    Ok(lhs == rhs)
}
