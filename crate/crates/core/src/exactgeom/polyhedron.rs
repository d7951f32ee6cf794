use std::collections::HashSet;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{GeomError, RationalMatrix};
use crate::{ratio_from_int, ExactInt};

/// A polyhedron `P(A, b) = {x | Ax <= b}`.
///
/// A system is in standard form when every variable carries an explicit sign
/// row (a row proportional to `-e_i`); this guarantees the recession cone
/// `C(A) = {x | Ax <= 0}` is pointed, which the ray enumeration relies on.
#[derive(Debug, Clone)]
pub struct Polyhedron<T: ExactInt> {
    a: RationalMatrix<T>,
    b: Vec<Ratio<T>>,
    sign_rows: Vec<bool>,
    standard_form: bool,
}

/// Extreme points and extremal rays of a polyhedron, as canonical sorted sets.
/// Rays are primitive integer vectors (gcd of entries 1, first nonzero entry
/// positive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRaySet<T: ExactInt> {
    pub extreme_points: Vec<Vec<Ratio<T>>>,
    pub extremal_rays: Vec<Vec<T>>,
}

impl<T: ExactInt> Polyhedron<T> {
    pub fn new(a: RationalMatrix<T>, b: Vec<Ratio<T>>) -> Self {
        assert_eq!(a.rows(), b.len(), "row/bound count mismatch");
        assert!(a.rows() >= 1 && a.cols() >= 1, "empty system");
        let sign_rows: Vec<bool> = (0..a.rows()).map(|r| is_sign_row(a.row(r))).collect();
        let mut covered = vec![false; a.cols()];
        for r in 0..a.rows() {
            if sign_rows[r] {
                let c = (0..a.cols()).find(|&c| !a.get(r, c).is_zero()).unwrap();
                if a.get(r, c).is_negative() {
                    covered[c] = true;
                }
            }
        }
        let standard_form = covered.iter().all(|&c| c);
        Self {
            a,
            b,
            sign_rows,
            standard_form,
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>], b: &[i64]) -> Self {
        Self::new(
            RationalMatrix::from_int_rows(rows),
            b.iter().map(|&x| ratio_from_int(x)).collect(),
        )
    }

    pub fn matrix(&self) -> &RationalMatrix<T> {
        &self.a
    }

    pub fn bounds(&self) -> &[Ratio<T>] {
        &self.b
    }

    pub fn num_vars(&self) -> usize {
        self.a.cols()
    }

    pub fn num_rows(&self) -> usize {
        self.a.rows()
    }

    pub fn is_standard_form(&self) -> bool {
        self.standard_form
    }

    /// Membership test. With `strict` the non-sign rows must hold with
    /// strict inequality; sign rows are always tested non-strictly.
    pub fn contains(&self, x: &[Ratio<T>], strict: bool) -> Result<bool, GeomError> {
        if x.len() != self.num_vars() {
            return Err(GeomError::DimensionMismatch {
                expected: self.num_vars(),
                got: x.len(),
            });
        }
        let ax = self.a.mul_vec(x);
        Ok(ax.iter().zip(&self.b).enumerate().all(|(r, (lhs, rhs))| {
            if strict && !self.sign_rows[r] {
                lhs < rhs
            } else {
                lhs <= rhs
            }
        }))
    }

    /// Rows of `Ax - b`, useful for inspecting which constraints are tight.
    pub fn slacks(&self, x: &[Ratio<T>]) -> Result<Vec<Ratio<T>>, GeomError> {
        if x.len() != self.num_vars() {
            return Err(GeomError::DimensionMismatch {
                expected: self.num_vars(),
                got: x.len(),
            });
        }
        Ok(self
            .a
            .mul_vec(x)
            .into_iter()
            .zip(&self.b)
            .map(|(lhs, rhs)| lhs - rhs.clone())
            .collect())
    }

    /// All extreme points of `P(A, b)`: solutions of `A'x = b'` over the
    /// rank-n n-row submatrices `A'` that also satisfy `Ax <= b`. The result
    /// is deduplicated and sorted lexicographically.
    pub fn extreme_points(&self) -> Result<Vec<Vec<Ratio<T>>>, GeomError> {
        if !self.standard_form {
            return Err(GeomError::NotStandardForm);
        }
        let n = self.num_vars();
        if self.num_rows() < n {
            return Ok(Vec::new());
        }
        let mut candidates: HashSet<Vec<Ratio<T>>> = HashSet::new();
        let mut state = Echelon::new(n, true);
        self.enumerate_points(0, &mut state, &mut candidates);
        let mut points: Vec<Vec<Ratio<T>>> = candidates
            .into_iter()
            .filter(|x| self.contains(x, false).unwrap())
            .collect();
        points.sort();
        Ok(points)
    }

    fn enumerate_points(
        &self,
        start: usize,
        state: &mut Echelon<T>,
        out: &mut HashSet<Vec<Ratio<T>>>,
    ) {
        let n = self.num_vars();
        if state.rank() == n {
            if let Some(x) = state.solve() {
                out.insert(x);
            }
            return;
        }
        let needed = n - state.rank();
        if self.num_rows() - start < needed {
            return;
        }
        for r in start..self.num_rows() {
            if self.num_rows() - r < needed {
                break;
            }
            let mut row: Vec<Ratio<T>> = self.a.row(r).to_vec();
            row.push(self.b[r].clone());
            if state.push(row) {
                self.enumerate_points(r + 1, state, out);
                state.pop();
            }
        }
    }

    /// All extremal rays of the recession cone `C(A)`: kernel directions of
    /// rank-(n-1) row subsets that satisfy `Ax <= 0`, normalized to primitive
    /// integer vectors. Errors with `RaysNotPointed` when `C(A)` contains a
    /// line.
    pub fn extremal_rays(&self) -> Result<Vec<Vec<T>>, GeomError> {
        let n = self.num_vars();
        // A line in C(A) is a nonzero kernel vector of A; standard form
        // guarantees pointedness but is not itself required here.
        if self.a.rank() < n {
            return Err(GeomError::RaysNotPointed);
        }
        let mut raw: HashSet<Vec<T>> = HashSet::new();
        let mut state = Echelon::new(n, false);
        let mut pointed = true;
        self.enumerate_rays(0, &mut state, &mut raw, &mut pointed);
        if !pointed {
            return Err(GeomError::RaysNotPointed);
        }
        let mut rays: Vec<Vec<T>> = raw.into_iter().collect();
        rays.sort();
        Ok(rays)
    }

    fn enumerate_rays(
        &self,
        start: usize,
        state: &mut Echelon<T>,
        out: &mut HashSet<Vec<T>>,
        pointed: &mut bool,
    ) {
        let n = self.num_vars();
        if state.rank() == n - 1 {
            let dir = state.kernel_direction();
            let v = primitive_integer(&dir);
            let pos_ok = self.cone_contains(&dir);
            let neg: Vec<Ratio<T>> = dir.iter().map(|x| -x.clone()).collect();
            let neg_ok = self.cone_contains(&neg);
            match (pos_ok, neg_ok) {
                (true, true) => *pointed = false,
                (true, false) => {
                    out.insert(v);
                }
                (false, true) => {
                    out.insert(v.iter().map(|x| -x.clone()).collect());
                }
                (false, false) => {}
            }
            return;
        }
        let needed = (n - 1) - state.rank();
        if self.num_rows() - start < needed {
            return;
        }
        for r in start..self.num_rows() {
            if self.num_rows() - r < needed {
                break;
            }
            let row: Vec<Ratio<T>> = self.a.row(r).to_vec();
            if state.push(row) {
                self.enumerate_rays(r + 1, state, out, pointed);
                state.pop();
            }
        }
    }

    fn cone_contains(&self, x: &[Ratio<T>]) -> bool {
        self.a.mul_vec(x).iter().all(|v| !v.is_positive())
    }

    pub fn vertex_ray_decomposition(&self) -> Result<VertexRaySet<T>, GeomError> {
        Ok(VertexRaySet {
            extreme_points: self.extreme_points()?,
            extremal_rays: self.extremal_rays()?,
        })
    }
}

/// Incremental echelon form over a growing independent row set. Rows may
/// carry one extra augmented entry (the bound column) beyond `nvars`.
#[derive(Debug, Clone)]
struct Echelon<T: ExactInt> {
    nvars: usize,
    augmented: bool,
    rows: Vec<Vec<Ratio<T>>>,
    pivots: Vec<usize>,
}

impl<T: ExactInt> Echelon<T> {
    fn new(nvars: usize, augmented: bool) -> Self {
        Self {
            nvars,
            augmented,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the current rows and push it; returns false when
    /// the coefficient part becomes zero (a dependent row can never complete
    /// a full-rank subset, so such extensions are pruned).
    fn push(&mut self, mut row: Vec<Ratio<T>>) -> bool {
        for (erow, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (dst, src) in row.iter_mut().zip(erow) {
                    if !src.is_zero() {
                        *dst = &*dst - &(&f * src);
                    }
                }
            }
        }
        let Some(pivot) = (0..self.nvars).find(|&c| !row[c].is_zero()) else {
            return false;
        };
        let inv = row[pivot].clone().recip();
        for v in row.iter_mut() {
            *v = v.clone() * inv.clone();
        }
        self.rows.push(row);
        self.pivots.push(pivot);
        true
    }

    fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }

    /// Back-substitute the augmented system; requires full rank.
    fn solve(&self) -> Option<Vec<Ratio<T>>> {
        debug_assert!(self.augmented && self.rank() == self.nvars);
        let mut x = vec![Ratio::zero(); self.nvars];
        for k in (0..self.rows.len()).rev() {
            let row = &self.rows[k];
            let mut v = row[self.nvars].clone();
            for j in k + 1..self.rows.len() {
                let p = self.pivots[j];
                if !row[p].is_zero() {
                    v = v - row[p].clone() * x[p].clone();
                }
            }
            x[self.pivots[k]] = v;
        }
        Some(x)
    }

    /// The one-dimensional kernel direction of a rank-(n-1) homogeneous
    /// system, with the free coordinate set to 1.
    fn kernel_direction(&self) -> Vec<Ratio<T>> {
        debug_assert!(!self.augmented && self.rank() == self.nvars - 1);
        let free = (0..self.nvars)
            .find(|c| !self.pivots.contains(c))
            .expect("rank n-1 leaves one free column");
        let mut x = vec![Ratio::zero(); self.nvars];
        x[free] = Ratio::one();
        for k in (0..self.rows.len()).rev() {
            let row = &self.rows[k];
            let mut v = -row[free].clone();
            for j in k + 1..self.rows.len() {
                let p = self.pivots[j];
                if !row[p].is_zero() {
                    v = v - row[p].clone() * x[p].clone();
                }
            }
            x[self.pivots[k]] = v;
        }
        x
    }
}

fn is_sign_row<T: ExactInt>(row: &[Ratio<T>]) -> bool {
    row.iter().filter(|v| !v.is_zero()).count() == 1
}

/// Scale a rational vector to a primitive integer vector (gcd 1), keeping
/// its direction.
pub fn primitive_integer<T: ExactInt>(v: &[Ratio<T>]) -> Vec<T> {
    let mut lcm = T::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<T> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    let mut g = T::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / g.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polyhedron<i64>;

    fn pt(xs: &[i64]) -> Vec<Ratio<i64>> {
        xs.iter().map(|&x| ratio_from_int(x)).collect()
    }

    /// The triangle-inequality system over positive integers:
    /// a_i - a_j - a_k <= -1 together with a_i >= 1.
    fn triangle_system() -> P {
        P::from_int_rows(
            &[
                vec![1, -1, -1],
                vec![-1, 1, -1],
                vec![-1, -1, 1],
                vec![-1, 0, 0],
                vec![0, -1, 0],
                vec![0, 0, -1],
            ],
            &[-1, -1, -1, -1, -1, -1],
        )
    }

    #[test]
    fn triangle_extreme_point() {
        let p = triangle_system();
        assert_eq!(p.extreme_points().unwrap(), vec![pt(&[1, 1, 1])]);
    }

    #[test]
    fn triangle_rays() {
        let p = triangle_system();
        assert_eq!(
            p.extremal_rays().unwrap(),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
    }

    #[test]
    fn orthant_cone_rays() {
        // A = -I: rays are the standard basis vectors.
        let p = P::from_int_rows(
            &[vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]],
            &[0, 0, 0],
        );
        assert_eq!(
            p.extremal_rays().unwrap(),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn line_detected() {
        // x1 pinned to zero keeps the cone pointed.
        let p = P::from_int_rows(&[vec![0, -1], vec![-1, 0], vec![1, 0]], &[0, 0, 0]);
        assert!(p.extremal_rays().is_ok());
        // With x1 entirely unconstrained the cone contains the x1 axis.
        let q = P::from_int_rows(&[vec![0, -1]], &[0]);
        assert_eq!(q.extremal_rays(), Err(GeomError::RaysNotPointed));
    }

    #[test]
    fn contains_strictness() {
        let p = P::from_int_rows(
            &[
                vec![1, -1, -1],
                vec![-1, 0, 0],
                vec![0, -1, 0],
                vec![0, 0, -1],
            ],
            &[0, -1, -1, -1],
        );
        // Sign rows stay non-strict under strict queries.
        assert!(p.contains(&pt(&[1, 1, 1]), true).unwrap());
        assert!(!p.contains(&pt(&[2, 1, 1]), true).unwrap());
        assert!(p.contains(&pt(&[2, 1, 1]), false).unwrap());
        assert_eq!(
            p.contains(&pt(&[1, 1]), false),
            Err(GeomError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn primitive_normalization() {
        let v = vec![Ratio::new(3i64, 2), Ratio::new(9, 4), Ratio::new(0, 1)];
        assert_eq!(primitive_integer(&v), vec![2i64, 3, 0]);
    }
}
