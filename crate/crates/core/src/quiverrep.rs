//! The subspace quiver and its slope stability.
//!
//! A star-shaped quiver feeds chains of subspaces into a central space; a
//! representation with injective arm maps is, up to isomorphism, just the
//! chain of image subspaces per arm. Stability is slope stability for the
//! weight `-q0*`: a representation is stable when every proper
//! subrepresentation has strictly smaller slope. For a central space of
//! dimension at most 3 the slope extrema are attained on the lattice
//! generated by the arm subspaces under intersection and span, which makes
//! the check finite.

use thiserror::Error;

use crate::filtrations::{FiltrationTriple, SubspaceBasis};
use crate::{ExactInt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("dimension vectors live on different quiver shapes")]
    ShapeMismatch,
    #[error("slope of the zero dimension vector is undefined")]
    ZeroDimension,
    #[error("stability oracle supports central dimension up to 3, got {0}")]
    UnsupportedRank(usize),
}

/// Star quiver shape: `arms[i]` is the chain length of arm `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceQuiverShape {
    pub arms: Vec<usize>,
}

/// Dimension vector on a star quiver: a central dimension and, per arm, the
/// weakly decreasing dimensions along the chain (leaf-wards).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVector {
    pub center: usize,
    pub arms: Vec<Vec<usize>>,
}

impl DimensionVector {
    pub fn new(center: usize, arms: Vec<Vec<usize>>) -> Self {
        for arm in &arms {
            let mut prev = center;
            for &d in arm {
                assert!(d <= prev, "arm dimensions must decrease towards the leaf");
                prev = d;
            }
        }
        Self { center, arms }
    }

    pub fn shape(&self) -> SubspaceQuiverShape {
        SubspaceQuiverShape {
            arms: self.arms.iter().map(Vec::len).collect(),
        }
    }

    pub fn total(&self) -> i64 {
        self.center as i64 + self.arms.iter().flatten().map(|&d| d as i64).sum::<i64>()
    }
}

/// Euler form `<d, e> = sum_v d_v e_v - sum_{arrows v -> w} d_v e_w` of the
/// star quiver (arrows point towards the center).
pub fn euler_form(d: &DimensionVector, e: &DimensionVector) -> Result<i64, QuiverError> {
    if d.shape() != e.shape() {
        return Err(QuiverError::ShapeMismatch);
    }
    let mut value = d.center as i64 * e.center as i64;
    for (da, ea) in d.arms.iter().zip(&e.arms) {
        for (dv, ev) in da.iter().zip(ea) {
            value += *dv as i64 * *ev as i64;
        }
        // arrow from the first chain vertex into the center
        if let Some(&d0) = da.first() {
            value -= d0 as i64 * e.center as i64;
        }
        // arrows along the chain, leaf towards center
        for w in 0..da.len().saturating_sub(1) {
            value -= da[w + 1] as i64 * ea[w] as i64;
        }
    }
    Ok(value)
}

/// Slope `-center / total` for the stability weight `-q0*`.
pub fn slope(d: &DimensionVector) -> Result<Rational, QuiverError> {
    let total = d.total();
    if total == 0 {
        return Err(QuiverError::ZeroDimension);
    }
    Ok(Rational::new((-(d.center as i64)).into(), total.into()))
}

/// Dimension `1 - <d, d>` of the stable moduli space, when nonempty.
pub fn moduli_dim(d: &DimensionVector) -> i64 {
    1 - euler_form(d, d).expect("same shape")
}

/// A representation of the star quiver in normalized form: per arm, the
/// weakly decreasing chain of image subspaces inside the central space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRepresentation<T: ExactInt> {
    center_dim: usize,
    arms: Vec<Vec<SubspaceBasis<T>>>,
}

/// Outcome of the stability test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl std::fmt::Display for Stability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Stability::Stable => "stable",
            Stability::StrictlySemistable => "strictly_semistable",
            Stability::Unstable => "unstable",
        })
    }
}

impl<T: ExactInt> QuiverRepresentation<T> {
    pub fn new(center_dim: usize, arms: Vec<Vec<SubspaceBasis<T>>>) -> Self {
        for arm in &arms {
            let mut prev = SubspaceBasis::full(center_dim);
            for s in arm {
                assert_eq!(s.ambient_dim(), center_dim);
                assert!(prev.contains(s), "arm subspaces must be nested");
                prev = s.clone();
            }
        }
        Self { center_dim, arms }
    }

    /// Read the chains off a filtration triple: the vertex subspaces are the
    /// filtration values at indices 1, 2, ... once in standard position.
    pub fn from_filtration_triple(t: &FiltrationTriple<T>) -> Self {
        let t = t.standard_position();
        let arms = t
            .arms()
            .iter()
            .map(|arm| {
                let (_, hi) = arm.support();
                (1..=hi)
                    .map(|i| arm.value_at(i))
                    .filter(|s| s.dim() > 0)
                    .collect()
            })
            .collect();
        Self::new(t.ambient_dim(), arms)
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn arms(&self) -> &[Vec<SubspaceBasis<T>>] {
        &self.arms
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        DimensionVector::new(
            self.center_dim,
            self.arms
                .iter()
                .map(|arm| arm.iter().map(SubspaceBasis::dim).collect())
                .collect(),
        )
    }

    pub fn apply_basis_change(&self, g: &crate::exactgeom::RationalMatrix<T>) -> Self {
        Self {
            center_dim: self.center_dim,
            arms: self
                .arms
                .iter()
                .map(|arm| arm.iter().map(|s| s.apply(g)).collect())
                .collect(),
        }
    }
}

/// The candidate subspaces of the stability test: the arm subspaces, their
/// pairwise intersections and pairwise spans, and the zero and full
/// subspaces. This covers every plane meet `U_{i2} ^ U_{j2}` and line join
/// `U_{i1} + U_{j1}`, which is where the slope functional attains its
/// extrema in dimension at most 3. (The fully iterated meet/join closure of
/// six generic subspaces is infinite, so the round is not repeated.)
pub fn filtration_lattice<T: ExactInt>(
    rep: &QuiverRepresentation<T>,
) -> Result<Vec<SubspaceBasis<T>>, QuiverError> {
    let r = rep.center_dim();
    if r > 3 {
        return Err(QuiverError::UnsupportedRank(r));
    }
    let mut lattice: Vec<SubspaceBasis<T>> = vec![SubspaceBasis::zero(r), SubspaceBasis::full(r)];
    let push = |lattice: &mut Vec<SubspaceBasis<T>>, s: SubspaceBasis<T>| {
        if !lattice.contains(&s) {
            lattice.push(s);
        }
    };
    for arm in rep.arms() {
        for s in arm {
            push(&mut lattice, s.clone());
        }
    }
    let generators = lattice.clone();
    for a in 0..generators.len() {
        for b in a + 1..generators.len() {
            push(&mut lattice, generators[a].intersect(&generators[b]));
            push(&mut lattice, generators[a].span_with(&generators[b]));
        }
    }
    Ok(lattice)
}

/// Slope stability of a representation with central dimension at most 3.
///
/// For every candidate central subspace `F` the largest subrepresentation
/// takes `U ^ F` at each arm vertex `U`; its slope exceeds, matches or stays
/// below the total slope according to the sign of
/// `r * sum dim(U ^ F) - dim F * sum dim U`.
pub fn is_stable<T: ExactInt>(rep: &QuiverRepresentation<T>) -> Result<Stability, QuiverError> {
    let r = rep.center_dim();
    if r > 3 {
        return Err(QuiverError::UnsupportedRank(r));
    }
    let total: i64 = rep.arms().iter().flatten().map(|s| s.dim() as i64).sum();
    let mut boundary = false;
    for f in filtration_lattice(rep)? {
        if f.dim() == 0 || f.dim() == r {
            continue;
        }
        let sub: i64 = rep
            .arms()
            .iter()
            .flatten()
            .map(|u| u.dim_intersection(&f) as i64)
            .sum();
        let margin = f.dim() as i64 * total - r as i64 * sub;
        if margin < 0 {
            return Ok(Stability::Unstable);
        }
        if margin == 0 {
            boundary = true;
        }
    }
    Ok(if boundary {
        Stability::StrictlySemistable
    } else {
        Stability::Stable
    })
}

/// The candidate subrepresentation attached to a central subspace: its
/// dimension vector, for slope comparisons.
pub fn candidate_subrep_dims<T: ExactInt>(
    rep: &QuiverRepresentation<T>,
    f: &SubspaceBasis<T>,
) -> DimensionVector {
    DimensionVector::new(
        f.dim(),
        rep.arms()
            .iter()
            .map(|arm| arm.iter().map(|u| u.dim_intersection(f)).collect())
            .collect(),
    )
}

/// The slope comparison behind [`is_stable`], stated directly: every proper
/// candidate subrepresentation of a stable representation has strictly
/// smaller slope.
pub fn max_candidate_slope<T: ExactInt>(
    rep: &QuiverRepresentation<T>,
) -> Result<Option<Rational>, QuiverError> {
    let mut best: Option<Rational> = None;
    for f in filtration_lattice(rep)? {
        if f.dim() == 0 || f.dim() == rep.center_dim() {
            continue;
        }
        let s = slope(&candidate_subrep_dims(rep, &f)).expect("nonzero center");
        if best.as_ref().is_none_or(|b| s > *b) {
            best = Some(s);
        }
    }
    Ok(best)
}
