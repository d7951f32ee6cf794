//! Stability inequality systems for the rank-3 arm-length tuples.
//!
//! Each proper subspace of the three-dimensional fibre yields one linear
//! inequality between arm lengths; an inclusion `U_{i1} <= U_{j2}` modifies
//! the subspaces that have to be tested and contributes two extra rows. The
//! systems here are the closures of the strict stability regions (stability
//! itself is a strict-membership query), restricted to positive arm lengths.

use num_rational::Ratio;

use super::{ArmLengths, InclusionPattern};
use crate::exactgeom::Polyhedron;
use crate::{ratio_from_int, ExactInt};

/// Index of `a(i, j)` in the six-variable ordering.
fn var(i: usize, j: usize) -> usize {
    match j {
        1 => i - 1,
        _ => i + 2,
    }
}

fn third(i: usize, j: usize) -> usize {
    6 - i - j
}

struct Rows {
    rows: Vec<Vec<i64>>,
    b: Vec<i64>,
}

impl Rows {
    fn new() -> Self {
        Self {
            rows: Vec::new(),
            b: Vec::new(),
        }
    }

    fn push(&mut self, terms: &[(usize, usize, i64)], bound: i64) {
        let mut row = vec![0i64; 6];
        for &(i, j, c) in terms {
            row[var(i, j)] += c;
        }
        self.rows.push(row);
        self.b.push(bound);
    }
}

/// The six plane/line rows, three meet rows and three join rows shared by
/// every case, from the subspaces `U_{i2}`, `U_{i1}`, `U_{i2} ^ U_{j2}` and
/// `U_{i1} + U_{j1}` in generic position.
fn base_rows(rows: &mut Rows) {
    for i in 1..=3 {
        let (j, k) = match i {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        };
        // F = U_{i2}
        rows.push(
            &[
                (i, 1, 1),
                (i, 2, 2),
                (j, 1, -2),
                (j, 2, -1),
                (k, 1, -2),
                (k, 2, -1),
            ],
            0,
        );
        // F = U_{i1}
        rows.push(
            &[
                (i, 1, 2),
                (i, 2, 1),
                (j, 1, -1),
                (j, 2, -2),
                (k, 1, -1),
                (k, 2, -2),
            ],
            0,
        );
    }
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let k = third(i, j);
        // F = U_{i2} ^ U_{j2}
        rows.push(
            &[
                (i, 2, 1),
                (j, 2, 1),
                (1, 1, -1),
                (2, 1, -1),
                (3, 1, -1),
                (k, 2, -2),
            ],
            0,
        );
        // F = U_{i1} + U_{j1}
        rows.push(
            &[
                (i, 1, 1),
                (j, 1, 1),
                (1, 2, -1),
                (2, 2, -1),
                (3, 2, -1),
                (k, 1, -2),
            ],
            0,
        );
    }
}

/// The two rows contributed by an inclusion `U_{i1} <= U_{j2}`: the line
/// `U_{i1}` now also meets `U_{j2}`, and the plane `U_{j2}` now contains
/// the extra line.
fn inclusion_rows(rows: &mut Rows, i: usize, j: usize) {
    let k = third(i, j);
    // F = U_{i1} with the inclusion
    rows.push(
        &[
            (i, 1, 2),
            (i, 2, 1),
            (j, 2, 1),
            (j, 1, -1),
            (k, 1, -1),
            (k, 2, -2),
        ],
        0,
    );
    // F = U_{j2} with the inclusion
    rows.push(
        &[
            (i, 1, 1),
            (j, 1, 1),
            (j, 2, 2),
            (k, 1, -2),
            (k, 2, -1),
            (i, 2, -1),
        ],
        0,
    );
}

fn build<T: ExactInt>(rows: Rows) -> Polyhedron<T> {
    Polyhedron::from_int_rows(&rows.rows, &rows.b)
}

/// Assemble the full system for an inclusion pattern over positive arm
/// lengths: the twelve generic rows, two inclusion rows per pair, and
/// `a(i,j) >= 1` for all six coordinates.
pub fn inequality_system<T: ExactInt>(incl: &InclusionPattern) -> Polyhedron<T> {
    let mut rows = Rows::new();
    base_rows(&mut rows);
    for (i, j) in incl.pairs() {
        inclusion_rows(&mut rows, i, j);
    }
    for v in 0..6 {
        let mut row = vec![0i64; 6];
        row[v] = -1;
        rows.rows.push(row);
        rows.b.push(-1);
    }
    build(rows)
}

/// The three inclusion cases of the rank-3 analysis. Up to the group action
/// every configuration of stable points with inclusions reduces to one of
/// these, and each comes with the start vectors and rays of its unique
/// decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    /// `U_{11} <= U_{22}` and `U_{11} <= U_{32}`.
    Case1,
    /// `U_{11} <= U_{22}` and `U_{21} <= U_{12}`.
    Case2,
    /// `a11 = 0`; the inclusions of case 1 hold trivially.
    Case3,
}

impl CaseId {
    pub fn pattern(&self) -> InclusionPattern {
        match self {
            CaseId::Case1 | CaseId::Case3 => InclusionPattern::new(&[(1, 2), (1, 3)]).unwrap(),
            CaseId::Case2 => InclusionPattern::new(&[(1, 2), (2, 1)]).unwrap(),
        }
    }

    /// Start vectors of the unique decomposition, in residue order.
    pub fn start_vectors(&self) -> Vec<ArmLengths> {
        let vs: [[i64; 6]; 3] = match self {
            CaseId::Case1 => [[1, 1, 1, 1, 1, 1], [1, 2, 2, 1, 1, 1], [1, 2, 2, 2, 1, 1]],
            CaseId::Case2 => [[1, 1, 1, 1, 1, 1], [1, 1, 2, 1, 1, 1], [1, 1, 1, 1, 1, 2]],
            CaseId::Case3 => [[0, 1, 1, 1, 1, 1], [0, 1, 1, 2, 1, 1], [0, 2, 2, 3, 2, 2]],
        };
        vs.into_iter().map(ArmLengths::new).collect()
    }

    /// Extremal rays of the case system, in the order the decomposition
    /// coefficients refer to.
    pub fn rays(&self) -> Vec<[i64; 6]> {
        match self {
            CaseId::Case1 => vec![
                [1, 1, 1, 0, 0, 0],
                [0, 0, 0, 1, 1, 1],
                [0, 1, 0, 0, 0, 1],
                [0, 0, 1, 0, 1, 0],
                [0, 1, 0, 1, 0, 0],
                [0, 0, 1, 1, 0, 0],
            ],
            CaseId::Case2 => vec![
                [1, 1, 1, 0, 0, 0],
                [0, 0, 0, 1, 1, 1],
                [1, 0, 0, 0, 0, 1],
                [0, 0, 1, 1, 0, 0],
                [0, 1, 0, 0, 0, 1],
                [0, 0, 1, 0, 1, 0],
            ],
            CaseId::Case3 => vec![
                [0, 0, 0, 1, 1, 1],
                [0, 1, 0, 1, 0, 0],
                [0, 0, 1, 1, 0, 0],
                [0, 0, 1, 0, 1, 0],
                [0, 1, 0, 0, 0, 1],
            ],
        }
    }
}

/// The polyhedron of a named case. Case 3 pins `a11 = 0` and keeps the
/// other five coordinates positive.
pub fn case_system<T: ExactInt>(case: CaseId) -> Polyhedron<T> {
    match case {
        CaseId::Case1 | CaseId::Case2 => inequality_system(&case.pattern()),
        CaseId::Case3 => {
            let mut rows = Rows::new();
            base_rows(&mut rows);
            for (i, j) in case.pattern().pairs() {
                inclusion_rows(&mut rows, i, j);
            }
            let mut pin_pos = vec![0i64; 6];
            pin_pos[0] = 1;
            rows.rows.push(pin_pos);
            rows.b.push(0);
            for v in 0..6 {
                let mut row = vec![0i64; 6];
                row[v] = -1;
                rows.rows.push(row);
                rows.b.push(if v == 0 { 0 } else { -1 });
            }
            build(rows)
        }
    }
}

/// The system with no inclusion rows, used for the `|D| = 0 (mod 6)` count:
/// its recession cone carries the eight standard rays.
pub fn mod0_system<T: ExactInt>() -> Polyhedron<T> {
    inequality_system(&InclusionPattern::empty())
}

/// Strict membership of an integer tuple in a case system.
pub fn is_strict_solution(system: &Polyhedron<i64>, alpha: &ArmLengths) -> bool {
    let x: Vec<Ratio<i64>> = alpha.0.iter().map(|&v| ratio_from_int(v)).collect();
    system.contains(&x, true).unwrap()
}
