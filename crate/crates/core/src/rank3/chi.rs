//! The two rank-3 counting rules and their generating functions.
//!
//! For `|D| = 4 (mod 6)` the Euler characteristic is a weighted count of
//! lattice solutions of five closed forms. For `|D| = 0 (mod 6)` semistable
//! points exist and the count becomes a signed sum of seventeen restricted
//! enumerations of the eight-parameter standard form, its three inclusion
//! variants, and the five-parameter zero-arm form.

use std::collections::BTreeMap;

use super::forms::{alpha_from_k, ClosedFormId};
use super::{ArmLengths, InclusionPattern, Rank3Error};
use crate::poly::{KPoly, Slot};
use crate::series::EulerSeries;

/// The five weighted families of the mod-4 count.
fn mod4_families() -> Vec<(i64, ClosedFormId)> {
    vec![
        (6, ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 1 }),
        (6, ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 2 }),
        (6, ClosedFormId::D2Incl1122 { m: 1, n: 2 }),
        (3, ClosedFormId::D3 { m: 2, n: 1 }),
        (3, ClosedFormId::D3 { m: 1, n: 1 }),
    ]
}

/// One restricted enumeration of the mod-0 count: a form, the slot
/// assignment of its parameters (with the leading identification
/// `k1 = k2` expressed by repeating a variable), and per-variable minima.
struct Mod0Term {
    mult: i64,
    form: ClosedFormId,
    slots: Vec<Slot>,
    mins: Vec<i64>,
}

fn mod0_terms() -> Vec<Mod0Term> {
    use ClosedFormId::{D8Incl1, D8Incl2, D8Incl3, D0, D8};
    let z = Slot::Zero;
    let v = Slot::Var;
    // Negative terms: the diagonal k1 = k2 of the standard form, with the
    // stated free slots forced positive. Positive terms: the inclusion
    // corrections and the zero-arm form.
    vec![
        Mod0Term {
            mult: -1,
            form: D8,
            slots: vec![v(0), v(0), z, z, z, z, z, z],
            mins: vec![0],
        },
        Mod0Term {
            mult: -6,
            form: D8,
            slots: vec![v(0), v(0), v(1), z, z, z, z, z],
            mins: vec![0, 1],
        },
        Mod0Term {
            mult: -3,
            form: D8,
            slots: vec![v(0), v(0), v(1), z, z, z, v(2), z],
            mins: vec![0, 1, 1],
        },
        Mod0Term {
            mult: -6,
            form: D8,
            slots: vec![v(0), v(0), v(1), z, z, z, z, v(2)],
            mins: vec![0, 1, 1],
        },
        Mod0Term {
            mult: -6,
            form: D8,
            slots: vec![v(0), v(0), v(1), v(2), z, z, z, z],
            mins: vec![0, 1, 1],
        },
        Mod0Term {
            mult: -12,
            form: D8,
            slots: vec![v(0), v(0), v(1), v(2), z, z, v(3), z],
            mins: vec![0, 1, 1, 1],
        },
        Mod0Term {
            mult: -6,
            form: D8,
            slots: vec![v(0), v(0), v(1), v(2), z, v(3), z, z],
            mins: vec![0, 1, 1, 1],
        },
        Mod0Term {
            mult: -3,
            form: D8,
            slots: vec![v(0), v(0), v(1), v(2), z, z, v(3), v(4)],
            mins: vec![0, 1, 1, 1, 1],
        },
        Mod0Term {
            mult: -6,
            form: D8,
            slots: vec![v(0), v(0), v(1), v(2), z, v(3), v(4), z],
            mins: vec![0, 1, 1, 1, 1],
        },
        Mod0Term {
            mult: 6,
            form: D8Incl1,
            slots: vec![v(0), v(1), v(2), v(3), z, z, z, z],
            mins: vec![0, 0, 1, 1],
        },
        Mod0Term {
            mult: 12,
            form: D8Incl1,
            slots: vec![v(0), v(1), v(2), v(3), z, z, v(4), z],
            mins: vec![0, 0, 1, 1, 1],
        },
        Mod0Term {
            mult: 6,
            form: D8Incl1,
            slots: vec![v(0), v(1), v(2), v(3), z, v(4), z, z],
            mins: vec![0, 0, 1, 1, 1],
        },
        Mod0Term {
            mult: 3,
            form: D8Incl1,
            slots: vec![v(0), v(1), v(2), v(3), z, z, v(4), v(5)],
            mins: vec![0, 0, 1, 1, 1, 1],
        },
        Mod0Term {
            mult: 3,
            form: D8Incl2,
            slots: vec![v(0), v(1), v(2), v(3), z, z, v(4), v(5)],
            mins: vec![0, 0, 1, 1, 1, 1],
        },
        Mod0Term {
            mult: 6,
            form: D8Incl1,
            slots: vec![v(0), v(1), v(2), v(3), z, v(4), v(5), z],
            mins: vec![0, 0, 1, 1, 1, 1],
        },
        Mod0Term {
            mult: 6,
            form: D8Incl3,
            slots: vec![v(0), v(1), v(2), v(3), z, v(4), v(5), z],
            mins: vec![0, 0, 1, 1, 1, 1],
        },
        Mod0Term {
            mult: 6,
            form: D0,
            slots: vec![v(0), v(1), v(2), v(3), v(4)],
            mins: vec![0, 0, 0, 0, 0],
        },
    ]
}

fn restricted(term: &Mod0Term) -> Result<KPoly, Rank3Error> {
    let p = term.form.poly().substitute(&term.slots, term.mins.len());
    p.check_enumerable().map_err(Rank3Error::UnboundedForm)?;
    Ok(p)
}

fn check_residue(delta: i64, residue: i64) -> Result<(), Rank3Error> {
    let valid = if residue == 0 { "0" } else { "4" };
    if delta > 0 || delta.unsigned_abs() % 6 != residue as u64 {
        return Err(Rank3Error::InvalidResidue { delta, valid });
    }
    Ok(())
}

/// Euler characteristic for `|delta| = 4 (mod 6)`.
pub fn chi_mod4(delta: i64) -> Result<i64, Rank3Error> {
    check_residue(delta, 4)?;
    let mut chi = 0i64;
    for (weight, form) in mod4_families() {
        let p = form.poly();
        p.check_enumerable().map_err(Rank3Error::UnboundedForm)?;
        let mins = vec![0i64; form.arity()];
        chi += weight * p.count_at(&mins, delta) as i64;
    }
    Ok(chi)
}

/// Euler characteristic for `|delta| = 0 (mod 6)`; may be negative.
pub fn chi_mod0(delta: i64) -> Result<i64, Rank3Error> {
    check_residue(delta, 0)?;
    let mut chi = 0i64;
    for term in mod0_terms() {
        let p = restricted(&term)?;
        chi += term.mult * p.count_at(&term.mins, delta) as i64;
    }
    Ok(chi)
}

/// Generating-function coefficients for one residue class. `residue` is 4 or
/// 0; `terms` counts coefficients, at exponents `-4, -10, ...` respectively
/// `0, -6, ...`.
pub fn series_rank3(residue: u8, terms: usize) -> Result<EulerSeries, Rank3Error> {
    assert!(terms >= 1, "series needs at least one term");
    let (first, modulus) = match residue {
        4 => (-4i64, 6i64),
        0 => (0i64, 6i64),
        _ => {
            return Err(Rank3Error::InvalidResidue {
                delta: -(residue as i64),
                valid: "0 or 4",
            })
        }
    };
    let lowest = first - modulus * (terms as i64 - 1);
    let mut histogram: BTreeMap<i64, i64> = BTreeMap::new();
    match residue {
        4 => {
            for (weight, form) in mod4_families() {
                let p = form.poly();
                p.check_enumerable().map_err(Rank3Error::UnboundedForm)?;
                let mins = vec![0i64; form.arity()];
                p.enumerate(&mins, lowest, &mut |_, v| {
                    *histogram.entry(v).or_insert(0) += weight;
                });
            }
        }
        _ => {
            for term in mod0_terms() {
                let p = restricted(&term)?;
                p.enumerate(&term.mins, lowest, &mut |_, v| {
                    *histogram.entry(v).or_insert(0) += term.mult;
                });
            }
        }
    }
    let mut series = EulerSeries::new(modulus as u64, residue as u64);
    let mut e = first;
    for _ in 0..terms {
        series.insert(e, histogram.get(&e).copied().unwrap_or(0));
        e -= modulus;
    }
    Ok(series)
}

/// A lattice solution counted by the mod-4 rule, together with the fixed
/// point data it describes.
#[derive(Debug, Clone)]
pub struct CountedSolution {
    pub form: ClosedFormId,
    pub weight: i64,
    pub k: Vec<i64>,
    pub alpha: ArmLengths,
    pub incl: InclusionPattern,
    pub delta: i64,
}

/// Enumerate every solution counted by the mod-4 rule with
/// `|delta| <= max_abs_delta`.
pub fn counted_solutions_mod4(max_abs_delta: i64) -> Result<Vec<CountedSolution>, Rank3Error> {
    let mut out = Vec::new();
    for (weight, form) in mod4_families() {
        let p = form.poly();
        p.check_enumerable().map_err(Rank3Error::UnboundedForm)?;
        let mins = vec![0i64; form.arity()];
        let mut hits: Vec<(Vec<i64>, i64)> = Vec::new();
        p.enumerate(&mins, -max_abs_delta, &mut |k, v| {
            if v.unsigned_abs() % 6 == 4 {
                hits.push((k.to_vec(), v));
            }
        });
        for (k, delta) in hits {
            let (alpha, incl) = alpha_from_k(&form, &k)?;
            out.push(CountedSolution {
                form,
                weight,
                k,
                alpha,
                incl,
                delta,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_mod4_examples() {
        assert_eq!(chi_mod4(-4).unwrap(), 0);
        assert_eq!(chi_mod4(-10).unwrap(), 3);
        assert_eq!(chi_mod4(-16).unwrap(), 15);
        assert_eq!(chi_mod4(-22).unwrap(), 36);
    }

    #[test]
    fn chi_mod0_examples() {
        assert_eq!(chi_mod0(0).unwrap(), 0);
        assert_eq!(chi_mod0(-18).unwrap(), -1);
        assert_eq!(chi_mod0(-54).unwrap(), 6);
    }

    #[test]
    fn residues_rejected() {
        assert!(matches!(
            chi_mod4(-6),
            Err(Rank3Error::InvalidResidue { .. })
        ));
        assert!(matches!(
            chi_mod0(-4),
            Err(Rank3Error::InvalidResidue { .. })
        ));
        assert!(matches!(
            chi_mod4(4),
            Err(Rank3Error::InvalidResidue { .. })
        ));
    }

    #[test]
    fn series_matches_pointwise_chi() {
        let s = series_rank3(4, 6).unwrap();
        for (e, c) in s.iter() {
            assert_eq!(c, chi_mod4(e).unwrap(), "exponent {e}");
        }
        let s = series_rank3(0, 6).unwrap();
        for (e, c) in s.iter() {
            assert_eq!(c, chi_mod0(e).unwrap(), "exponent {e}");
        }
    }

    #[test]
    fn counted_solutions_small() {
        let sols = counted_solutions_mod4(10).unwrap();
        // Exactly the single k = 0 solution of the (1,1) zero-arm family.
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].delta, -10);
        assert_eq!(sols[0].alpha, ArmLengths::new([0, 1, 1, 1, 1, 1]));
    }
}

#[cfg(test)]
mod brute_force_tests {
    use super::*;
    use crate::rank3::{disc_r3, InclusionPattern};

    /// Raw re-evaluation of the seventeen-term rule at one exponent, written
    /// with plain nested loops over the direct discriminant (no shared
    /// polynomial engine), as an independent oracle for chi_mod0.
    fn chi_mod0_oracle(target: i64) -> i64 {
        let bound = 12i64; // ample for |target| <= 78: every slot costs at least 6
        let alpha = |k: &[i64; 8]| {
            crate::rank3::ArmLengths::new([
                k[0] + k[2] + k[5] + 1,
                k[0] + k[3] + k[6] + 1,
                k[0] + k[4] + k[7] + 1,
                k[1] + k[4] + k[6] + 1,
                k[1] + k[2] + k[7] + 1,
                k[1] + k[3] + k[5] + 1,
            ])
        };
        let none = InclusionPattern::empty();
        let d_gen = |k: &[i64; 8]| disc_r3(&alpha(k), &none);
        let d_incl = |k: &[i64; 8], pair: (usize, usize)| {
            disc_r3(&alpha(k), &InclusionPattern::new(&[pair]).unwrap())
        };
        let mut chi = 0i64;
        // the nine diagonal terms: (multiplicity, free slots, all >= 1)
        let negative: [(i64, &[usize]); 9] = [
            (-1, &[]),
            (-6, &[2]),
            (-3, &[2, 6]),
            (-6, &[2, 7]),
            (-6, &[2, 3]),
            (-12, &[2, 3, 6]),
            (-6, &[2, 3, 5]),
            (-3, &[2, 3, 6, 7]),
            (-6, &[2, 3, 5, 6]),
        ];
        for (mult, slots) in negative {
            let mut assign = vec![1i64; slots.len()];
            loop {
                for t in 0..=bound {
                    let mut k = [0i64; 8];
                    k[0] = t;
                    k[1] = t;
                    for (s, v) in slots.iter().zip(&assign) {
                        k[*s] = *v;
                    }
                    if d_gen(&k) == target {
                        chi += mult;
                    }
                }
                if !bump(&mut assign, bound, 1) {
                    break;
                }
            }
        }
        // the seven positive inclusion terms
        let positive: [(i64, (usize, usize), &[usize]); 7] = [
            (6, (3, 1), &[2, 3]),
            (12, (3, 1), &[2, 3, 6]),
            (6, (3, 1), &[2, 3, 5]),
            (3, (3, 1), &[2, 3, 6, 7]),
            (3, (1, 3), &[2, 3, 6, 7]),
            (6, (3, 1), &[2, 3, 5, 6]),
            (6, (3, 2), &[2, 3, 5, 6]),
        ];
        for (mult, pair, slots) in positive {
            let mut assign = vec![1i64; slots.len()];
            loop {
                for a in 0..=bound {
                    for b in 0..=bound {
                        let mut k = [0i64; 8];
                        k[0] = a;
                        k[1] = b;
                        for (s, v) in slots.iter().zip(&assign) {
                            k[*s] = *v;
                        }
                        if d_incl(&k, pair) == target {
                            chi += mult;
                        }
                    }
                }
                if !bump(&mut assign, bound, 1) {
                    break;
                }
            }
        }
        // the zero-arm term
        for k1 in 0..=bound {
            for k2 in 0..=bound {
                for k3 in 0..=bound {
                    for k4 in 0..=bound {
                        for k5 in 0..=bound {
                            let a = crate::rank3::ArmLengths::new([
                                0,
                                k2 + k5 + 2,
                                k3 + k4 + 2,
                                k1 + k2 + k3 + 3,
                                k1 + k4 + 2,
                                k1 + k5 + 2,
                            ]);
                            if disc_r3(&a, &none) == target {
                                chi += 6;
                            }
                        }
                    }
                }
            }
        }
        chi
    }

    fn bump(assign: &mut [i64], bound: i64, min: i64) -> bool {
        for a in assign.iter_mut() {
            *a += 1;
            if *a <= bound {
                return true;
            }
            *a = min;
        }
        false
    }

    #[test]
    fn chi_mod0_agrees_with_raw_scan() {
        for target in [-18, -54, -78] {
            assert_eq!(
                chi_mod0(target).unwrap(),
                chi_mod0_oracle(target),
                "target {target}"
            );
        }
    }
}
