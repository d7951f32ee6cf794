//! The rank-2 count: torus fixed points are classified by triples of arm
//! lengths subject to strict triangle inequalities, the solutions split into
//! two lattice families, and the resulting Euler characteristics agree with
//! Hurwitz class numbers.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactgeom::Polyhedron;
use crate::poly::KPoly;
use crate::series::EulerSeries;
use crate::{ExactInt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rank2Error {
    #[error("invalid residue: delta must be negative with |delta| = 0 or 3 (mod 4), got {0}")]
    InvalidResidue(i64),
}

/// Arm lengths `(a1, a2, a3)` of a rank-2 triple of filtrations: `a_k` counts
/// the indices where arm `k` has dimension 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleAlpha(pub i64, pub i64, pub i64);

/// Strict triangle inequalities: each arm length below the sum of the others.
pub fn stable_triple(a: &TripleAlpha) -> bool {
    let TripleAlpha(a1, a2, a3) = *a;
    a1 < a2 + a3 && a2 < a1 + a3 && a3 < a1 + a2
}

/// Signed working discriminant `a1^2 + a2^2 + a3^2 - 2(a1a2 + a2a3 + a1a3)`.
pub fn disc2(a: &TripleAlpha) -> i64 {
    let TripleAlpha(a1, a2, a3) = *a;
    a1 * a1 + a2 * a2 + a3 * a3 - 2 * (a1 * a2 + a2 * a3 + a1 * a3)
}

/// The positive-integer solutions of the strict triangle system, as a
/// polyhedron: extreme point `(1,1,1)`, rays `(1,1,0)`, `(0,1,1)`, `(1,0,1)`.
pub fn stability_system<T: ExactInt>() -> Polyhedron<T> {
    Polyhedron::from_int_rows(
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

/// Branch polynomial of one lattice family: `i = 1` gives exponents with
/// `|delta| = 3 (mod 4)`, `i = 2` gives `|delta| = 0 (mod 4)`.
fn branch_poly(i: i64) -> KPoly {
    let mut p = KPoly::zero(3);
    for a in 0..3 {
        for b in a + 1..3 {
            p.add_quad(a, b, -4);
        }
        p.add_lin(a, -4 * i);
    }
    p.add_const(-3 * i * i);
    p
}

/// Decompose a stable triple as `(k1+k3+i, k1+k2+i, k2+k3+i)` with `k` in
/// `N^3` and `i` in `{1, 2}`; every stable triple has exactly one such
/// decomposition.
pub fn decompose_triple(a: &TripleAlpha) -> Option<([i64; 3], i64)> {
    let TripleAlpha(a1, a2, a3) = *a;
    for i in [1i64, 2] {
        // a1 = k1+k3+i, a2 = k1+k2+i, a3 = k2+k3+i
        let s = a1 + a2 + a3 - 3 * i;
        if s % 2 != 0 || s < 0 {
            continue;
        }
        let total = s / 2; // k1 + k2 + k3
        let k2 = total - (a1 - i);
        let k3 = total - (a2 - i);
        let k1 = total - (a3 - i);
        if k1 >= 0 && k2 >= 0 && k3 >= 0 {
            return Some(([k1, k2, k3], i));
        }
    }
    None
}

/// Number of lattice solutions with working discriminant `delta`; zero when
/// `|delta|` is 1 or 2 mod 4.
pub fn chi_rank2(delta: i64) -> Result<i64, Rank2Error> {
    if delta >= 0 {
        return Err(Rank2Error::InvalidResidue(delta));
    }
    let branch = match delta.unsigned_abs() % 4 {
        3 => 1,
        0 => 2,
        _ => return Ok(0),
    };
    let p = branch_poly(branch);
    p.check_enumerable()
        .expect("branch polynomials are monotone");
    Ok(p.count_at(&[0, 0, 0], delta) as i64)
}

/// Weighted class number of reduced positive-definite binary quadratic forms
/// of discriminant `-n`, with weight 1/3 for multiples of `x^2 + xy + y^2`
/// and 1/2 for multiples of `x^2 + y^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzValue {
    pub value: Rational,
}

pub fn hurwitz(n: i64) -> HurwitzValue {
    assert!(n > 0, "hurwitz is defined for positive n");
    let mut value = Rational::zero();
    if n % 4 != 0 && n % 4 != 3 {
        return HurwitzValue { value };
    }
    // Reduced forms ax^2 + bxy + cy^2 with b^2 - 4ac = -n, |b| <= a <= c,
    // and b >= 0 whenever |b| = a or a = c.
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a..=a {
            let num = b * b + n;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if b < 0 && (-b == a || a == c) {
                continue;
            }
            let weight = if a == b && b == c {
                Rational::new(1.into(), 3.into())
            } else if b == 0 && a == c {
                Rational::new(1.into(), 2.into())
            } else {
                Rational::one()
            };
            value += weight;
        }
        a += 1;
    }
    debug_assert!(
        [1u32, 2, 3, 6]
            .iter()
            .any(|&d| { value.denom() == &crate::Int::from(d) }),
        "unexpected denominator in H({n}) = {value}"
    );
    HurwitzValue { value }
}

/// Number of positive divisors.
pub fn divisor_count(n: i64) -> i64 {
    assert!(n >= 1);
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

/// The Hurwitz-side of the rank-2 count: `3H(n)` for `n = 3 (mod 4)` and
/// `3H(n) - (3/2) d(n/4)` for `n = 0 (mod 4)`, with `n = |delta|`.
pub fn chi_rank2_hurwitz(delta: i64) -> Result<Rational, Rank2Error> {
    if delta >= 0 {
        return Err(Rank2Error::InvalidResidue(delta));
    }
    let n = -delta;
    let three = Rational::from_integer(3.into());
    match n % 4 {
        3 => Ok(three * hurwitz(n).value),
        0 => {
            let correction = Rational::new(3.into(), 2.into())
                * Rational::from_integer(divisor_count(n / 4).into());
            Ok(three * hurwitz(n).value - correction)
        }
        _ => Ok(Rational::zero()),
    }
}

/// Series of rank-2 Euler characteristics over one residue class: residue 3
/// gives exponents `-3, -7, ...`; residue 0 gives `-4, -8, ...`.
pub fn series_rank2(residue: u8, terms: usize) -> Result<EulerSeries, Rank2Error> {
    assert!(terms >= 1);
    let (first, branch) = match residue {
        3 => (-3i64, 1i64),
        0 => (-4i64, 2i64),
        _ => return Err(Rank2Error::InvalidResidue(-(residue as i64))),
    };
    let lowest = first - 4 * (terms as i64 - 1);
    let p = branch_poly(branch);
    p.check_enumerable()
        .expect("branch polynomials are monotone");
    let mut histogram = std::collections::BTreeMap::new();
    p.enumerate(&[0, 0, 0], lowest, &mut |_, v| {
        *histogram.entry(v).or_insert(0i64) += 1;
    });
    let mut series = EulerSeries::new(4, residue as u64);
    let mut e = first;
    for _ in 0..terms {
        series.insert(e, histogram.get(&e).copied().unwrap_or(0));
        e -= 4;
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format_rational;

    #[test]
    fn stability_examples() {
        assert!(stable_triple(&TripleAlpha(1, 1, 1)));
        assert!(!stable_triple(&TripleAlpha(2, 1, 1)));
        assert!(!stable_triple(&TripleAlpha(3, 1, 1)));
    }

    #[test]
    fn disc_examples() {
        assert_eq!(disc2(&TripleAlpha(1, 1, 1)), -3);
        assert_eq!(disc2(&TripleAlpha(2, 2, 2)), -12);
        assert_eq!(disc2(&TripleAlpha(2, 2, 1)), -7);
    }

    /// Independent oracle: count stable triples in a box with the given
    /// discriminant. The unique decomposition makes this the same number as
    /// the lattice count.
    fn chi_by_triple_scan(delta: i64) -> i64 {
        let bound = -delta; // generous: every arm length is below |delta|
        let mut count = 0;
        for a1 in 1..=bound {
            for a2 in 1..=bound {
                for a3 in 1..=bound {
                    let t = TripleAlpha(a1, a2, a3);
                    if stable_triple(&t) && disc2(&t) == delta {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn chi_examples_match_triple_scan() {
        assert_eq!(chi_rank2(-3).unwrap(), 1);
        assert_eq!(chi_rank2(-7).unwrap(), 3);
        assert_eq!(chi_rank2(-12).unwrap(), 1);
        for delta in [-3, -7, -11, -12, -15, -16, -20, -23, -24] {
            assert_eq!(
                chi_rank2(delta).unwrap(),
                chi_by_triple_scan(delta),
                "{delta}"
            );
        }
        assert_eq!(chi_rank2(-5).unwrap(), 0);
        assert!(chi_rank2(4).is_err());
    }

    #[test]
    fn decomposition_unique_and_partitioning() {
        // Every stable triple in the box decomposes exactly once, and the
        // two branches are disjoint.
        for a1 in 1..=30 {
            for a2 in 1..=30 {
                for a3 in 1..=30 {
                    let t = TripleAlpha(a1, a2, a3);
                    if !stable_triple(&t) {
                        continue;
                    }
                    let mut found = Vec::new();
                    for i in [1i64, 2] {
                        for k1 in 0..=30 {
                            for k2 in 0..=30 {
                                let k3 = a1 - k1 - i;
                                if k3 < 0 {
                                    continue;
                                }
                                if k1 + k2 + i == a2 && k2 + k3 + i == a3 {
                                    found.push(([k1, k2, k3], i));
                                }
                            }
                        }
                    }
                    assert_eq!(found.len(), 1, "triple {t:?}");
                    assert_eq!(decompose_triple(&t), Some(found[0]), "triple {t:?}");
                    let ([k1, k2, k3], i) = found[0];
                    let branch = branch_poly(i);
                    assert_eq!(branch.eval(&[k1, k2, k3]), disc2(&t), "triple {t:?}");
                }
            }
        }
    }

    #[test]
    fn hurwitz_values() {
        assert_eq!(format_rational(&hurwitz(3).value), "1/3");
        assert_eq!(format_rational(&hurwitz(4).value), "1/2");
        assert_eq!(format_rational(&hurwitz(23).value), "3");
        assert_eq!(format_rational(&hurwitz(12).value), "4/3");
        assert_eq!(format_rational(&hurwitz(5).value), "0");
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_count(1), 1);
        assert_eq!(divisor_count(4), 3);
        assert_eq!(divisor_count(12), 6);
    }

    #[test]
    fn hurwitz_identity_small() {
        for n in 3..=60i64 {
            if n % 4 == 0 || n % 4 == 3 {
                let lattice = Rational::from_integer(chi_rank2(-n).unwrap().into());
                assert_eq!(lattice, chi_rank2_hurwitz(-n).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn series_examples() {
        let s = series_rank2(3, 3).unwrap();
        assert_eq!(s.coefficient(-3), 1);
        let s = series_rank2(0, 3).unwrap();
        assert_eq!(s.coefficient(-4), 0);
        assert_eq!(s.coefficient(-8), 0);
        assert_eq!(s.coefficient(-12), 1);
    }

    #[test]
    fn diophantine_bridge() {
        // The second branch with all k >= 1 matches xy + yz + zx = n under
        // x = k1 + 1 (the shifted substitution): setting x = k+1 turns
        // 4(k1k2+k1k3+k2k3) + 8(k1+k2+k3) + 12 into 4(xy+yz+zx).
        for k1 in 0..4 {
            for k2 in 0..4 {
                for k3 in 0..4 {
                    let lhs = -branch_poly(2).eval(&[k1, k2, k3]);
                    let (x, y, z) = (k1 + 1, k2 + 1, k3 + 1);
                    assert_eq!(lhs, 4 * (x * y + y * z + z * x));
                }
            }
        }
    }
}
