//! The rank-3 counting pipeline: arm-length combinatorics, stability
//! inequality systems per inclusion case, closed-form discriminant
//! polynomials, unique decompositions, and the two counting rules with
//! their generating-function series.

mod chi;
mod forms;
mod systems;

pub use chi::{chi_mod0, chi_mod4, counted_solutions_mod4, series_rank3, CountedSolution};
pub use forms::{alpha_from_k, count_solutions, disc_closed, ClosedFormId};
pub use systems::{case_system, inequality_system, is_strict_solution, mod0_system, CaseId};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rank3Error {
    #[error("inclusion pattern not supported: {0}")]
    UnsupportedPattern(String),
    #[error("form expects {expected} parameters, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid residue: |delta| must be {valid} (mod 6), got {delta}")]
    InvalidResidue { delta: i64, valid: &'static str },
    #[error("vector is not representable in this case")]
    NotRepresentable,
    #[error("form is not enumerable: {0}")]
    UnboundedForm(String),
}

/// The six arm lengths `(a11, a21, a31, a12, a22, a32)`: `a(i,1)` counts the
/// filtration indices where arm `i` has dimension 1, `a(i,2)` those with
/// dimension 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArmLengths(pub [i64; 6]);

impl ArmLengths {
    pub fn new(v: [i64; 6]) -> Self {
        assert!(v.iter().all(|&x| x >= 0), "arm lengths must be nonnegative");
        Self(v)
    }

    /// `a(i, j)` with arm `i` in 1..=3 and level `j` in {1, 2}.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        debug_assert!((1..=3).contains(&i) && (1..=2).contains(&j));
        match j {
            1 => self.0[i - 1],
            _ => self.0[i + 2],
        }
    }

    pub fn as_slice(&self) -> &[i64; 6] {
        &self.0
    }
}

impl fmt::Display for ArmLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.0[0], self.0[1], self.0[2], self.0[3], self.0[4], self.0[5]
        )
    }
}

/// A set of inclusions `U_{i1} <= U_{j2}` between the one-dimensional
/// subspace of arm `i` and the two-dimensional subspace of arm `j` (`i != j`).
///
/// At most two inclusions may hold at a stable point, and only in one of
/// three shapes: `{(i,j),(j,i)}`, `{(i,j),(i,k)}`, `{(i,j),(k,j)}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InclusionPattern {
    pairs: BTreeSet<(usize, usize)>,
}

impl InclusionPattern {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(pairs: &[(usize, usize)]) -> Result<Self, Rank3Error> {
        let set: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
        for &(i, j) in &set {
            if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i == j {
                return Err(Rank3Error::UnsupportedPattern(format!(
                    "invalid pair ({i}, {j})"
                )));
            }
        }
        if set.len() > 2 {
            return Err(Rank3Error::UnsupportedPattern(
                "more than two inclusions".into(),
            ));
        }
        if set.len() == 2 {
            let v: Vec<_> = set.iter().copied().collect();
            let ((i, j), (k, l)) = (v[0], v[1]);
            let swap = k == j && l == i;
            let same_line = i == k;
            let same_plane = j == l;
            if !(swap || same_line || same_plane) {
                return Err(Rank3Error::UnsupportedPattern(format!(
                    "pairs ({i},{j}) and ({k},{l}) do not match any case shape"
                )));
            }
        }
        Ok(Self { pairs: set })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// First Chern class `c1 = a11 + a21 + a31 + 2(a12 + a22 + a32)`.
pub fn c1_r3(alpha: &ArmLengths) -> i64 {
    (1..=3).map(|i| alpha.get(i, 1) + 2 * alpha.get(i, 2)).sum()
}

/// Second Chern class of the fixed point determined by `alpha` and the
/// inclusion pattern: the generic quadratic form minus `a(k,1) * a(l,2)` for
/// every inclusion `(k, l)`.
pub fn c2_r3(alpha: &ArmLengths, incl: &InclusionPattern) -> i64 {
    let mut c2 = 0;
    for i in 1..=3 {
        c2 += alpha.get(i, 2) * alpha.get(i, 2) + alpha.get(i, 1) * alpha.get(i, 2);
    }
    for i in 1..=3 {
        for j in i + 1..=3 {
            c2 += alpha.get(i, 1) * alpha.get(j, 1)
                + 2 * alpha.get(i, 1) * alpha.get(j, 2)
                + 2 * alpha.get(i, 2) * alpha.get(j, 1)
                + 3 * alpha.get(i, 2) * alpha.get(j, 2);
        }
    }
    for (k, l) in incl.pairs() {
        c2 -= alpha.get(k, 1) * alpha.get(l, 2);
    }
    c2
}

/// Signed working discriminant `2*c1^2 - 6*c2`. Its absolute value is always
/// 0 or 4 mod 6, and it is the series exponent throughout the rank-3 layer.
pub fn disc_r3(alpha: &ArmLengths, incl: &InclusionPattern) -> i64 {
    let c1 = c1_r3(alpha);
    2 * c1 * c1 - 6 * c2_r3(alpha, incl)
}

/// One of the twelve symmetries of the arm-length tuple: a permutation of
/// the three arms combined with an optional swap of the two levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    /// `perm[i]` is where arm `i+1` is sent (0-based images).
    pub perm: [usize; 3],
    /// Swap the two levels (the tau generator).
    pub swap_levels: bool,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self {
            perm: [0, 1, 2],
            swap_levels: false,
        }
    }

    /// The transposition of arms `i` and `j` (1-based).
    pub fn sigma(i: usize, j: usize) -> Self {
        let mut perm = [0, 1, 2];
        perm.swap(i - 1, j - 1);
        Self {
            perm,
            swap_levels: false,
        }
    }

    pub fn tau() -> Self {
        Self {
            perm: [0, 1, 2],
            swap_levels: true,
        }
    }

    /// All twelve group elements.
    pub fn all() -> Vec<Self> {
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out = Vec::with_capacity(12);
        for perm in perms {
            for swap_levels in [false, true] {
                out.push(Self { perm, swap_levels });
            }
        }
        out
    }
}

/// Apply a group element to an arm-length tuple.
pub fn group_orbit(g: GroupElement, alpha: &ArmLengths) -> ArmLengths {
    let mut out = [0i64; 6];
    for i in 0..3 {
        let target = g.perm[i];
        out[target] = alpha.0[i];
        out[target + 3] = alpha.0[i + 3];
    }
    if g.swap_levels {
        out.swap(0, 3);
        out.swap(1, 4);
        out.swap(2, 5);
    }
    ArmLengths(out)
}

/// Decompose a strict solution of a case system as `v_k + sum n_i w_i` with
/// `n_i` nonnegative integers; the start vector is identified by the residue
/// of `a11 + a21 + a31 - a12 - a22 - a32` mod 3 and the combination is unique
/// because the rays are linearly independent.
pub fn decompose_solution(
    case: CaseId,
    alpha: &ArmLengths,
) -> Result<(usize, Vec<i64>), Rank3Error> {
    let starts = case.start_vectors();
    let residue =
        |a: &ArmLengths| (a.0[0] + a.0[1] + a.0[2] - a.0[3] - a.0[4] - a.0[5]).rem_euclid(3);
    let target = residue(alpha);
    let k = (0..starts.len())
        .find(|&k| residue(&starts[k]) == target)
        .ok_or(Rank3Error::NotRepresentable)?;
    let rays = case.rays();
    let diff: Vec<i64> = (0..6).map(|c| alpha.0[c] - starts[k].0[c]).collect();
    // Solve diff = sum n_i w_i exactly over the integers. The ray matrices
    // are fixed and small, so Gaussian elimination over i64 rationals via
    // the generic matrix would be overkill; use exact elimination on a
    // rational copy instead.
    let m = crate::exactgeom::RationalMatrix::<i64>::from_int_rows(
        &(0..6)
            .map(|c| rays.iter().map(|w| w[c]).collect::<Vec<i64>>())
            .collect::<Vec<_>>(),
    );
    let b: Vec<num_rational::Ratio<i64>> = diff.iter().map(|&x| crate::ratio_from_int(x)).collect();
    let sol = solve_rectangular(&m, &b).ok_or(Rank3Error::NotRepresentable)?;
    let mut coeffs = Vec::with_capacity(rays.len());
    for v in sol {
        if *v.denom() != 1 || *v.numer() < 0 {
            return Err(Rank3Error::NotRepresentable);
        }
        coeffs.push(*v.numer());
    }
    Ok((k, coeffs))
}

/// Reconstruct the arm lengths from a decomposition `(start index, coeffs)`.
pub fn recompose_solution(case: CaseId, start: usize, coeffs: &[i64]) -> ArmLengths {
    let mut v = case.start_vectors()[start].0;
    for (n, w) in coeffs.iter().zip(case.rays()) {
        for c in 0..6 {
            v[c] += n * w[c];
        }
    }
    ArmLengths(v)
}

/// Least-squares-free exact solve of a (possibly rectangular) full-column-rank
/// system; `None` when inconsistent.
fn solve_rectangular(
    m: &crate::exactgeom::RationalMatrix<i64>,
    b: &[num_rational::Ratio<i64>],
) -> Option<Vec<num_rational::Ratio<i64>>> {
    use num_traits::Zero;
    let rows = m.rows();
    let cols = m.cols();
    let mut aug_rows: Vec<Vec<num_rational::Ratio<i64>>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = m.row(r).to_vec();
        row.push(b[r]);
        aug_rows.push(row);
    }
    let aug = crate::exactgeom::RationalMatrix::from_rows(aug_rows);
    let (rref, pivots) = aug.rref();
    if pivots.contains(&cols) {
        return None; // inconsistent
    }
    if pivots.len() < cols {
        return None; // underdetermined; rays are independent so this is a bug
    }
    let mut x = vec![num_rational::Ratio::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = *rref.get(row, cols);
    }
    Some(x)
}
