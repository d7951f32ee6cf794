//! Descending filtration triples of a finite-dimensional space: the data
//! classifying the torus-equivariant bundles whose fixed points we count.
//!
//! A filtration is stored sparsely as the list of indices where its subspace
//! changes; it is the full space before the first step and zero after the
//! last. Chern data comes from the graded dimensions of single filtrations
//! and of pairwise intersections.

mod io;
mod subspace;

pub use io::{triple_from_json, triple_to_json};
pub use subspace::SubspaceBasis;

use num_rational::Ratio;
use thiserror::Error;

use crate::{ExactInt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("arm {arm}: step indices must be strictly increasing at index {index}")]
    IndicesNotIncreasing { arm: usize, index: i64 },
    #[error("arm {arm}: subspace at index {index} is not contained in its predecessor")]
    NotNested { arm: usize, index: i64 },
    #[error("arm {arm}: a filtration needs at least one step to terminate")]
    Empty { arm: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("second Chern class failed integrality; the triple is invalid")]
    NonIntegralChern,
    #[error("unsupported rank {0}: working discriminants exist for ranks 2 and 3")]
    UnsupportedRank(usize),
}

/// A descending filtration, eventually the full space on the left and zero
/// on the right. `steps` lists `(index, subspace)` where the value changes:
/// the subspace at `i` is that of the last step with index `<= i`, the full
/// space when there is none. Construction appends a zero step when the last
/// listed subspace is nonzero, so termination holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration<T: ExactInt> {
    ambient_dim: usize,
    steps: Vec<(i64, SubspaceBasis<T>)>,
}

impl<T: ExactInt> Filtration<T> {
    pub fn new(
        ambient_dim: usize,
        steps: Vec<(i64, SubspaceBasis<T>)>,
    ) -> Result<Self, FiltrationError> {
        Self::new_for_arm(0, ambient_dim, steps)
    }

    /// Like [`new`](Self::new) but error messages name the offending arm.
    pub fn new_for_arm(
        arm: usize,
        ambient_dim: usize,
        mut steps: Vec<(i64, SubspaceBasis<T>)>,
    ) -> Result<Self, FiltrationError> {
        if steps.is_empty() {
            return Err(FiltrationError::Empty { arm });
        }
        for (_, s) in &steps {
            if s.ambient_dim() != ambient_dim {
                return Err(FiltrationError::AmbientMismatch {
                    expected: ambient_dim,
                    got: s.ambient_dim(),
                });
            }
        }
        for w in steps.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(FiltrationError::IndicesNotIncreasing { arm, index: w[1].0 });
            }
            if !w[0].1.contains(&w[1].1) {
                return Err(FiltrationError::NotNested { arm, index: w[1].0 });
            }
        }
        // Drop leading steps equal to the full space (they change nothing)
        // and make sure the filtration terminates at zero.
        while steps.first().is_some_and(|(_, s)| s.dim() == ambient_dim) {
            steps.remove(0);
        }
        match steps.last() {
            None => {
                // Everything was the full space; an explicit zero step is
                // required to say where it ends, so this input is invalid.
                return Err(FiltrationError::Empty { arm });
            }
            Some((idx, s)) if s.dim() > 0 => {
                let idx = *idx + 1;
                steps.push((idx, SubspaceBasis::zero(ambient_dim)));
            }
            _ => {}
        }
        Ok(Self { ambient_dim, steps })
    }

    /// The filtration that is the full space up to index 0 and zero after.
    pub fn trivial(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            steps: vec![(1, SubspaceBasis::zero(ambient_dim))],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn steps(&self) -> &[(i64, SubspaceBasis<T>)] {
        &self.steps
    }

    /// The subspace at index `i`.
    pub fn value_at(&self, i: i64) -> SubspaceBasis<T> {
        match self.steps.iter().rev().find(|(idx, _)| *idx <= i) {
            Some((_, s)) => s.clone(),
            None => SubspaceBasis::full(self.ambient_dim),
        }
    }

    pub fn dim_at(&self, i: i64) -> usize {
        match self.steps.iter().rev().find(|(idx, _)| *idx <= i) {
            Some((_, s)) => s.dim(),
            None => self.ambient_dim,
        }
    }

    /// `dim E(i) - dim E(i+1)`.
    pub fn graded_dim(&self, i: i64) -> usize {
        self.dim_at(i) - self.dim_at(i + 1)
    }

    /// Indices outside `support()` have graded dimension zero.
    pub fn support(&self) -> (i64, i64) {
        let lo = self.steps.first().unwrap().0 - 1;
        let hi = self.steps.last().unwrap().0;
        (lo, hi)
    }

    /// Reindex every step by `+k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            steps: self.steps.iter().map(|(i, s)| (i + k, s.clone())).collect(),
        }
    }

    /// Shift so the full space occupies exactly the indices `<= 0`, i.e. the
    /// first proper step sits at index 1.
    pub fn standard_position(&self) -> Self {
        let first = self.steps.first().unwrap().0;
        self.shift(1 - first)
    }

    pub fn is_standard_position(&self) -> bool {
        self.steps.first().unwrap().0 == 1
    }

    /// Apply a change of basis to every subspace.
    pub fn apply_basis_change(&self, g: &crate::exactgeom::RationalMatrix<T>) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            steps: self.steps.iter().map(|(i, s)| (*i, s.apply(g))).collect(),
        }
    }
}

/// `dim(E_a(i) ^ E_b(j))` for two filtrations of the same space.
pub fn intersection_dim<T: ExactInt>(
    fa: &Filtration<T>,
    fb: &Filtration<T>,
    i: i64,
    j: i64,
) -> usize {
    fa.value_at(i).dim_intersection(&fb.value_at(j))
}

/// The mixed graded dimension
/// `d(i,j) - d(i+1,j) - d(i,j+1) + d(i+1,j+1)` with
/// `d(i,j) = dim(E_a(i) ^ E_b(j))`; always nonnegative.
pub fn pair_graded_dim<T: ExactInt>(fa: &Filtration<T>, fb: &Filtration<T>, i: i64, j: i64) -> i64 {
    let d = |i, j| intersection_dim(fa, fb, i, j) as i64;
    d(i, j) - d(i + 1, j) - d(i, j + 1) + d(i + 1, j + 1)
}

/// Three descending filtrations of a shared space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationTriple<T: ExactInt> {
    ambient_dim: usize,
    arms: [Filtration<T>; 3],
}

/// First and second Chern class of a fixed point, with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChernData {
    pub c1: i64,
    pub c2: i64,
    pub rank: usize,
}

impl<T: ExactInt> FiltrationTriple<T> {
    pub fn new(arms: [Filtration<T>; 3]) -> Result<Self, FiltrationError> {
        let ambient_dim = arms[0].ambient_dim();
        for arm in &arms[1..] {
            if arm.ambient_dim() != ambient_dim {
                return Err(FiltrationError::AmbientMismatch {
                    expected: ambient_dim,
                    got: arm.ambient_dim(),
                });
            }
        }
        Ok(Self { ambient_dim, arms })
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            arms: [
                Filtration::trivial(ambient_dim),
                Filtration::trivial(ambient_dim),
                Filtration::trivial(ambient_dim),
            ],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn arms(&self) -> &[Filtration<T>; 3] {
        &self.arms
    }

    /// Reindex arm `a` by `+k[a]`.
    pub fn shift(&self, k: [i64; 3]) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            arms: [
                self.arms[0].shift(k[0]),
                self.arms[1].shift(k[1]),
                self.arms[2].shift(k[2]),
            ],
        }
    }

    /// Shift every arm into standard position; idempotent.
    pub fn standard_position(&self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            arms: [
                self.arms[0].standard_position(),
                self.arms[1].standard_position(),
                self.arms[2].standard_position(),
            ],
        }
    }

    pub fn apply_basis_change(&self, g: &crate::exactgeom::RationalMatrix<T>) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            arms: [
                self.arms[0].apply_basis_change(g),
                self.arms[1].apply_basis_change(g),
                self.arms[2].apply_basis_change(g),
            ],
        }
    }
}

/// Chern classes of a filtration triple:
/// `c1 = sum_a sum_i i * graded_dim` and
/// `c2 = c1^2/2 - (1/2) sum i^2 graded_dim - sum_{a<b} sum_{i,j} ij * mixed`.
/// The half-integer parts always cancel; a failure signals invalid data.
pub fn chern<T: ExactInt>(t: &FiltrationTriple<T>) -> Result<ChernData, FiltrationError> {
    let mut c1 = 0i64;
    let mut sum_i2 = 0i64;
    for arm in t.arms() {
        let (lo, hi) = arm.support();
        for i in lo..=hi {
            let g = arm.graded_dim(i) as i64;
            c1 += i * g;
            sum_i2 += i * i * g;
        }
    }
    let mut cross = 0i64;
    for a in 0..3 {
        for b in a + 1..3 {
            let (alo, ahi) = t.arms()[a].support();
            let (blo, bhi) = t.arms()[b].support();
            for i in alo..=ahi {
                for j in blo..=bhi {
                    let m = pair_graded_dim(&t.arms()[a], &t.arms()[b], i, j);
                    debug_assert!(m >= 0);
                    if m != 0 {
                        cross += i * j * m;
                    }
                }
            }
        }
    }
    let num = c1 * c1 - sum_i2;
    if num % 2 != 0 {
        return Err(FiltrationError::NonIntegralChern);
    }
    Ok(ChernData {
        c1,
        c2: num / 2 - cross,
        rank: t.ambient_dim(),
    })
}

/// Signed working discriminant: `2 c1^2 - 6 c2` in rank 3 and `c1^2 - 4 c2`
/// in rank 2. These are the series exponents of the counting layer.
pub fn discriminant_working<T: ExactInt>(t: &FiltrationTriple<T>) -> Result<i64, FiltrationError> {
    let c = chern(t)?;
    working_from_chern(&c)
}

pub fn working_from_chern(c: &ChernData) -> Result<i64, FiltrationError> {
    match c.rank {
        3 => Ok(2 * c.c1 * c.c1 - 6 * c.c2),
        2 => Ok(c.c1 * c.c1 - 4 * c.c2),
        r => Err(FiltrationError::UnsupportedRank(r)),
    }
}

/// Normalized discriminant `(2 r c2 - (r-1) c1^2) / (2 r^2)`; nonnegative
/// for semistable data.
pub fn discriminant_normalized(c: &ChernData) -> Rational {
    let r = c.rank as i64;
    Rational::new(
        (2 * r * c.c2 - (r - 1) * c.c1 * c.c1).into(),
        (2 * r * r).into(),
    )
}

/// Convert a working discriminant to the normalized one: `-delta/18` in
/// rank 3, `-delta/8` in rank 2.
pub fn normalized_from_working(rank: usize, delta: i64) -> Result<Rational, FiltrationError> {
    match rank {
        3 => Ok(Rational::new((-delta).into(), 18.into())),
        2 => Ok(Rational::new((-delta).into(), 8.into())),
        r => Err(FiltrationError::UnsupportedRank(r)),
    }
}

/// Chern data after twisting by the `k`-th power of the hyperplane bundle:
/// `(c1 + rk, c2 + (r-1) k c1 + k^2 r(r-1)/2)`. Leaves the normalized
/// discriminant unchanged.
pub fn twist_chern(c: &ChernData, k: i64) -> ChernData {
    let r = c.rank as i64;
    ChernData {
        c1: c.c1 + r * k,
        c2: c.c2 + (r - 1) * k * c.c1 + k * k * r * (r - 1) / 2,
        rank: c.rank,
    }
}

/// Build the standard-form filtration triple of a rank-3 fixed point with
/// arm lengths `alpha = (a11, a21, a31, a12, a22, a32)` and at most one
/// inclusion `U_{i1} <= U_{j2}`. Subspaces are chosen generically except for
/// the requested inclusion; a zero arm length drops the corresponding level.
pub fn standard_triple<T: ExactInt>(
    alpha: &[i64; 6],
    incl: Option<(usize, usize)>,
) -> Result<FiltrationTriple<T>, FiltrationError> {
    let e = |coords: [i64; 3]| -> Vec<Ratio<T>> {
        coords.iter().map(|&c| crate::ratio_from_int(c)).collect()
    };
    // (plane basis, line vector) per arm, in generic position apart from
    // the requested inclusion.
    type ArmData<T> = (Vec<Vec<Ratio<T>>>, Vec<Ratio<T>>);
    let mut arms_data: [ArmData<T>; 3] = [
        (vec![e([1, 0, 0]), e([0, 1, 0])], e([1, 0, 0])),
        (vec![e([0, 1, 0]), e([0, 0, 1])], e([0, 0, 1])),
        (vec![e([1, 1, 1]), e([0, 1, 2])], e([1, 1, 1])),
    ];
    if let Some((i, j)) = incl {
        assert!((1..=3).contains(&i) && (1..=3).contains(&j) && i != j);
        let k = 6 - i - j;
        // Arm i: line e1 inside plane <e1, e2>; arm j: plane <e1, e3>
        // containing e1, line e3; arm k: generic.
        arms_data[i - 1] = (vec![e([1, 0, 0]), e([0, 1, 0])], e([1, 0, 0]));
        arms_data[j - 1] = (vec![e([1, 0, 0]), e([0, 0, 1])], e([0, 0, 1]));
        arms_data[k - 1] = (vec![e([0, 1, 0]), e([1, 0, 1])], e([1, 1, 1]));
    }
    let mut arms = Vec::with_capacity(3);
    for arm in 1..=3 {
        let a2 = alpha[arm + 2];
        let a1 = alpha[arm - 1];
        let (plane, line) = &arms_data[arm - 1];
        let mut steps = Vec::new();
        if a2 > 0 {
            steps.push((1, SubspaceBasis::new(3, plane.clone())?));
        }
        if a1 > 0 {
            steps.push((1 + a2, SubspaceBasis::new(3, vec![line.clone()])?));
        }
        steps.push((1 + a2 + a1, SubspaceBasis::zero(3)));
        arms.push(Filtration::new_for_arm(arm, 3, steps)?);
    }
    FiltrationTriple::new([arms[0].clone(), arms[1].clone(), arms[2].clone()])
}

/// Rank-2 analogue: three generically distinct lines in the plane, arm `k`
/// of length `alpha_k`.
pub fn standard_triple_rank2<T: ExactInt>(
    alpha: &[i64; 3],
) -> Result<FiltrationTriple<T>, FiltrationError> {
    let e = |coords: [i64; 2]| -> Vec<Ratio<T>> {
        coords.iter().map(|&c| crate::ratio_from_int(c)).collect()
    };
    let lines = [e([1, 0]), e([0, 1]), e([1, 1])];
    let mut arms = Vec::with_capacity(3);
    for arm in 0..3 {
        let len = alpha[arm];
        let mut steps = Vec::new();
        if len > 0 {
            steps.push((1, SubspaceBasis::new(2, vec![lines[arm].clone()])?));
        }
        steps.push((1 + len, SubspaceBasis::zero(2)));
        arms.push(Filtration::new_for_arm(arm + 1, 2, steps)?);
    }
    FiltrationTriple::new([arms[0].clone(), arms[1].clone(), arms[2].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = Filtration<i64>;
    type Triple = FiltrationTriple<i64>;

    fn all_ones_triple() -> Triple {
        standard_triple(&[1, 1, 1, 1, 1, 1], None).unwrap()
    }

    #[test]
    fn trivial_graded_dims() {
        let f = F::trivial(3);
        assert_eq!(f.graded_dim(0), 3);
        assert_eq!(f.graded_dim(5), 0);
        assert_eq!(f.graded_dim(-3), 0);
    }

    #[test]
    fn stepping_arm_graded_dims() {
        let t = all_ones_triple();
        let arm = &t.arms()[0];
        for i in [0, 1, 2] {
            assert_eq!(arm.graded_dim(i), 1, "index {i}");
        }
        assert_eq!(arm.graded_dim(3), 0);
    }

    #[test]
    fn pair_graded_trivial() {
        let a = F::trivial(3);
        let b = F::trivial(3);
        assert_eq!(pair_graded_dim(&a, &b, 0, 0), 3);
    }

    #[test]
    fn pair_graded_transverse_lines() {
        let line = |v: [i64; 2]| {
            SubspaceBasis::<i64>::new(
                2,
                vec![v.iter().map(|&c| crate::ratio_from_int(c)).collect()],
            )
            .unwrap()
        };
        let a = F::new(2, vec![(1, line([1, 0]))]).unwrap();
        let b = F::new(2, vec![(1, line([0, 1]))]).unwrap();
        assert_eq!(pair_graded_dim(&a, &b, 1, 1), 0);
    }

    #[test]
    fn pair_graded_identical_arms_diagonal() {
        let t = all_ones_triple();
        let arm = &t.arms()[0];
        for i in [0, 1, 2] {
            assert_eq!(pair_graded_dim(arm, arm, i, i), arm.graded_dim(i) as i64);
        }
    }

    #[test]
    fn graded_dims_sum_to_rank() {
        let t = all_ones_triple();
        for arm in t.arms() {
            let (lo, hi) = arm.support();
            let total: usize = (lo..=hi).map(|i| arm.graded_dim(i)).sum();
            assert_eq!(total, 3);
        }
        // Pairwise version.
        let a = &t.arms()[0];
        let b = &t.arms()[1];
        let mut total = 0;
        for i in -5..=5 {
            for j in -5..=5 {
                total += pair_graded_dim(a, b, i, j);
            }
        }
        assert_eq!(total, 3);
    }

    #[test]
    fn chern_trivial() {
        let c = chern(&Triple::trivial(3)).unwrap();
        assert_eq!((c.c1, c.c2), (0, 0));
    }

    #[test]
    fn chern_all_ones() {
        let c = chern(&all_ones_triple()).unwrap();
        assert_eq!(c.c1, 9);
        assert_eq!(c.c2, 30);
        assert_eq!(working_from_chern(&c).unwrap(), -18);
    }

    #[test]
    fn chern_with_inclusion() {
        let t = standard_triple::<i64>(&[1, 1, 1, 1, 1, 1], Some((1, 2))).unwrap();
        let c = chern(&t).unwrap();
        assert_eq!((c.c1, c.c2), (9, 29));
        assert_eq!(working_from_chern(&c).unwrap(), -12);
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant_working(&Triple::trivial(3)).unwrap(), 0);
        let rank2 = standard_triple_rank2::<i64>(&[1, 1, 1]).unwrap();
        assert_eq!(discriminant_working(&rank2).unwrap(), -3);
        assert!(matches!(
            discriminant_working(&Triple::trivial(4)),
            Err(FiltrationError::UnsupportedRank(4))
        ));
    }

    #[test]
    fn normalized_discriminant_values() {
        use crate::format_rational;
        let z = ChernData {
            c1: 0,
            c2: 0,
            rank: 3,
        };
        assert_eq!(format_rational(&discriminant_normalized(&z)), "0");
        let c = ChernData {
            c1: 9,
            c2: 30,
            rank: 3,
        };
        assert_eq!(format_rational(&discriminant_normalized(&c)), "1");
        let c = ChernData {
            c1: 0,
            c2: 1,
            rank: 2,
        };
        assert_eq!(format_rational(&discriminant_normalized(&c)), "1/2");
        assert_eq!(
            discriminant_normalized(&c),
            normalized_from_working(2, working_from_chern(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn shift_preserves_discriminant() {
        let t = all_ones_triple();
        let base = discriminant_working(&t).unwrap();
        for k in [[0, 0, 0], [1, -2, 5], [3, 3, 3], [-1, 0, 2]] {
            assert_eq!(discriminant_working(&t.shift(k)).unwrap(), base, "{k:?}");
        }
    }

    #[test]
    fn shift_of_trivial_raises_c1() {
        let t = Triple::trivial(3);
        let c = chern(&t.shift([1, 1, 1])).unwrap();
        assert_eq!(c.c1, 9); // 3r
    }

    #[test]
    fn standard_position_idempotent_and_shift_stable() {
        let t = all_ones_triple();
        let s = t.standard_position();
        assert_eq!(s.standard_position(), s);
        for k in [[2, -1, 4], [-3, 0, 1]] {
            assert_eq!(t.shift(k).standard_position(), s);
        }
        let trivial = Triple::trivial(3);
        assert_eq!(trivial.shift([5, -2, 0]).standard_position(), trivial);
    }

    #[test]
    fn twist_examples() {
        let c = ChernData {
            c1: 0,
            c2: 0,
            rank: 3,
        };
        assert_eq!(twist_chern(&c, 0), c);
        let t = twist_chern(&c, 1);
        assert_eq!((t.c1, t.c2), (3, 3));
        // Twisting preserves the normalized discriminant exactly.
        let c = ChernData {
            c1: 1,
            c2: 1,
            rank: 2,
        };
        let t = twist_chern(&c, -1);
        assert_eq!(discriminant_normalized(&c), discriminant_normalized(&t));
    }

    #[test]
    fn validation_rejects_bad_chains() {
        let line = |v: [i64; 3]| {
            SubspaceBasis::<i64>::new(
                3,
                vec![v.iter().map(|&c| crate::ratio_from_int(c)).collect()],
            )
            .unwrap()
        };
        // Not nested: <e1> does not contain <e2>.
        let err = F::new(3, vec![(1, line([1, 0, 0])), (2, line([0, 1, 0]))]);
        assert!(matches!(err, Err(FiltrationError::NotNested { .. })));
        // Indices must increase.
        let err = F::new(3, vec![(2, line([1, 0, 0])), (2, line([1, 0, 0]))]);
        assert!(matches!(
            err,
            Err(FiltrationError::IndicesNotIncreasing { .. })
        ));
        assert!(matches!(
            F::new(3, vec![]),
            Err(FiltrationError::Empty { .. })
        ));
    }
}
