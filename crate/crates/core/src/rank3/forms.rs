//! Closed-form discriminant polynomials: for each inclusion case the
//! parametrization `k -> alpha(k)` linearizes the solution set, and the
//! working discriminant becomes an explicit quadratic polynomial in `k`.
//! These expansions are transcribed here coefficient by coefficient; the
//! defining cross-check `disc_closed(form, k) = disc_r3(alpha_from_k(form, k))`
//! is enforced by the verification suites.

use super::{ArmLengths, InclusionPattern, Rank3Error};
use crate::poly::KPoly;

/// Identifier of one closed-form discriminant polynomial. The `l, m, n`
/// constants of the six-variable forms are part of the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormId {
    /// Case-1 parametrization, no inclusion correction.
    D1 {
        l: i64,
        m: i64,
        n: i64,
    },
    /// Case 1 with the `U_{11} <= U_{22}` correction.
    D1Incl1122 {
        l: i64,
        m: i64,
        n: i64,
    },
    /// Case 1 with the `U_{11} <= U_{32}` correction.
    D1Incl1132 {
        l: i64,
        m: i64,
        n: i64,
    },
    /// Case-2 parametrization, no inclusion correction.
    D2 {
        m: i64,
        n: i64,
    },
    D2Incl1122 {
        m: i64,
        n: i64,
    },
    D2Incl2112 {
        m: i64,
        n: i64,
    },
    /// Case-3 parametrization (`a11 = 0`), five parameters.
    D3 {
        m: i64,
        n: i64,
    },
    /// The five-parameter `a11 = 0` form of the mod-0 count (`D3` at
    /// `m = 3, n = 2`).
    D0,
    /// The eight-ray standard form anchored at `(1,1,1,1,1,1)`.
    D8,
    /// `D8` plus the `U_{31} <= U_{12}` correction.
    D8Incl1,
    /// `D8` plus the `U_{11} <= U_{32}` correction.
    D8Incl2,
    /// `D8` plus the `U_{31} <= U_{22}` correction.
    D8Incl3,
}

impl ClosedFormId {
    pub fn arity(&self) -> usize {
        match self {
            ClosedFormId::D1 { .. }
            | ClosedFormId::D1Incl1122 { .. }
            | ClosedFormId::D1Incl1132 { .. }
            | ClosedFormId::D2 { .. }
            | ClosedFormId::D2Incl1122 { .. }
            | ClosedFormId::D2Incl2112 { .. } => 6,
            ClosedFormId::D3 { .. } | ClosedFormId::D0 => 5,
            ClosedFormId::D8
            | ClosedFormId::D8Incl1
            | ClosedFormId::D8Incl2
            | ClosedFormId::D8Incl3 => 8,
        }
    }

    /// The transcribed polynomial.
    pub fn poly(&self) -> KPoly {
        match *self {
            ClosedFormId::D1 { l, m, n } => {
                let mut p = all_pairs(6, -6);
                p.add_quad(0, 1, -12); // k1k2 carries -18 in total
                p.add_quad(2, 3, 6); // the (k3, k4) pair is absent
                p.add_lin(0, -6 * n - 12);
                p.add_lin(1, -6 * l - 6 * m - 6);
                p.add_lin(2, -6 * n - 6);
                p.add_lin(3, -6 * n - 6);
                p.add_lin(4, -6 * m - 6);
                p.add_lin(5, -6 * l - 6);
                p.add_const(
                    2 * (l * l + m * m + n * n
                        - l * m
                        - 2 * l * n
                        - 2 * m * n
                        - 2 * l
                        - 2 * m
                        - n
                        - 2),
                );
                p
            }
            ClosedFormId::D1Incl1122 { l, m, n } => {
                let mut p = all_pairs(6, -6);
                p.add_quad(0, 1, -6);
                p.add_quad(0, 3, 6);
                p.add_quad(2, 3, 6);
                p.add_lin(0, -6 * n - 6);
                p.add_lin(1, -6 * l - 6 * m);
                p.add_lin(2, -6 * n - 6);
                p.add_lin(3, -6 * n);
                p.add_lin(4, -6 * m - 6);
                p.add_lin(5, -6 * l - 6);
                p.add_const(
                    2 * (l * l + m * m + n * n - l * m - 2 * l * n - 2 * m * n - 2 * l - 2 * m - n
                        + 1),
                );
                p
            }
            ClosedFormId::D1Incl1132 { l, m, n } => {
                let mut p = all_pairs(6, -6);
                p.add_quad(0, 1, -6);
                p.add_quad(0, 2, 6);
                p.add_quad(2, 3, 6);
                p.add_lin(0, -6 * n - 6);
                p.add_lin(1, -6 * l - 6 * m);
                p.add_lin(2, -6 * n);
                p.add_lin(3, -6 * n - 6);
                p.add_lin(4, -6 * m - 6);
                p.add_lin(5, -6 * l - 6);
                p.add_const(
                    2 * (l * l + m * m + n * n - l * m - 2 * l * n - 2 * m * n - 2 * l - 2 * m - n
                        + 1),
                );
                p
            }
            ClosedFormId::D2 { m, n } => {
                let mut p = all_pairs(6, -6);
                p.add_quad(0, 1, -12);
                p.add_quad(2, 3, 6);
                p.add_quad(4, 5, 6);
                p.add_lin(0, -12 - 6 * n);
                p.add_lin(1, -12 - 6 * m);
                for i in 2..6 {
                    p.add_lin(i, -12);
                }
                p.add_const(-12 * m - 12 * n + 2 * m * n + 2 * n * n + 2 * m * m);
                p
            }
            ClosedFormId::D2Incl1122 { m, n } => {
                let mut p = all_pairs(6, -6);
                p.add_quad(0, 1, -6);
                p.add_quad(0, 5, 6);
                p.add_quad(1, 2, 6);
                p.add_quad(2, 3, 6);
                p.add_quad(2, 5, 6);
                p.add_quad(4, 5, 6);
                p.add_lin(0, -6 - 6 * n);
                p.add_lin(1, -6 - 6 * m);
                p.add_lin(2, -6);
                p.add_lin(3, -12);
                p.add_lin(4, -12);
                p.add_lin(5, -6);
                p.add_const(-12 * m - 12 * n + 2 * m * n + 2 * n * n + 2 * m * m + 6);
                p
            }
            ClosedFormId::D2Incl2112 { m, n } => {
                let mut p = all_pairs(6, -6);
                p.add_quad(0, 1, -6);
                p.add_quad(0, 3, 6);
                p.add_quad(1, 4, 6);
                p.add_quad(2, 3, 6);
                p.add_quad(3, 4, 6);
                p.add_quad(4, 5, 6);
                p.add_lin(0, -6 - 6 * n);
                p.add_lin(1, -6 - 6 * m);
                p.add_lin(2, -12);
                p.add_lin(3, -6);
                p.add_lin(4, -6);
                p.add_lin(5, -12);
                p.add_const(-12 * m - 12 * n + 2 * m * n + 2 * n * n + 2 * m * m + 6);
                p
            }
            ClosedFormId::D3 { m, n } => d3_poly(m, n),
            ClosedFormId::D0 => d3_poly(3, 2),
            ClosedFormId::D8 => d8_poly(),
            ClosedFormId::D8Incl1 => {
                let mut p = d8_poly();
                // 6 * a31 * a12 = 6 (k1+k5+k8+1)(k2+k5+k7+1)
                p.add_product(
                    &[1, 0, 0, 0, 1, 0, 0, 1],
                    1,
                    &[0, 1, 0, 0, 1, 0, 1, 0],
                    1,
                    6,
                );
                p
            }
            ClosedFormId::D8Incl2 => {
                let mut p = d8_poly();
                // 6 * a11 * a32 = 6 (k1+k3+k6+1)(k2+k4+k6+1)
                p.add_product(
                    &[1, 0, 1, 0, 0, 1, 0, 0],
                    1,
                    &[0, 1, 0, 1, 0, 1, 0, 0],
                    1,
                    6,
                );
                p
            }
            ClosedFormId::D8Incl3 => {
                let mut p = d8_poly();
                // 6 * a31 * a22 = 6 (k1+k5+k8+1)(k2+k3+k8+1)
                p.add_product(
                    &[1, 0, 0, 0, 1, 0, 0, 1],
                    1,
                    &[0, 1, 1, 0, 0, 0, 0, 1],
                    1,
                    6,
                );
                p
            }
        }
    }

    /// Every instantiation the counting rules use, for cross-check scans.
    pub fn named_instances() -> Vec<ClosedFormId> {
        let mut out = Vec::new();
        for (l, m, n) in [(1, 1, 1), (2, 2, 1), (2, 2, 2)] {
            out.push(ClosedFormId::D1 { l, m, n });
            out.push(ClosedFormId::D1Incl1122 { l, m, n });
            out.push(ClosedFormId::D1Incl1132 { l, m, n });
        }
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            out.push(ClosedFormId::D2 { m, n });
            out.push(ClosedFormId::D2Incl1122 { m, n });
            out.push(ClosedFormId::D2Incl2112 { m, n });
        }
        for (m, n) in [(1, 1), (2, 1), (3, 2)] {
            out.push(ClosedFormId::D3 { m, n });
        }
        out.extend([
            ClosedFormId::D0,
            ClosedFormId::D8,
            ClosedFormId::D8Incl1,
            ClosedFormId::D8Incl2,
            ClosedFormId::D8Incl3,
        ]);
        out
    }
}

fn all_pairs(nvars: usize, coeff: i64) -> KPoly {
    let mut p = KPoly::zero(nvars);
    for i in 0..nvars {
        for j in i + 1..nvars {
            p.add_quad(i, j, coeff);
        }
    }
    p
}

fn d3_poly(m: i64, n: i64) -> KPoly {
    let mut p = all_pairs(5, -6);
    p.add_quad(3, 4, 6);
    p.add_lin(0, -12 * n);
    p.add_lin(1, -12 * n);
    p.add_lin(2, -12 * n);
    p.add_lin(3, -6 * m);
    p.add_lin(4, -6 * m);
    p.add_const(-12 * m * n + 2 * m * m);
    p
}

fn d8_poly() -> KPoly {
    let mut p = all_pairs(8, -6);
    p.add_quad(0, 1, -12);
    p.add_quad(2, 6, 6);
    p.add_quad(3, 7, 6);
    p.add_quad(4, 5, 6);
    p.add_lin(0, -18);
    p.add_lin(1, -18);
    for i in 2..8 {
        p.add_lin(i, -12);
    }
    p.add_const(-18);
    p
}

fn check_arity(form: &ClosedFormId, k: &[i64]) -> Result<(), Rank3Error> {
    if k.len() != form.arity() {
        return Err(Rank3Error::ArityMismatch {
            expected: form.arity(),
            got: k.len(),
        });
    }
    Ok(())
}

/// Evaluate the closed-form discriminant polynomial at `k`.
pub fn disc_closed(form: &ClosedFormId, k: &[i64]) -> Result<i64, Rank3Error> {
    check_arity(form, k)?;
    Ok(form.poly().eval(k))
}

/// Reconstruct the arm lengths and the inclusion pattern a form encodes.
pub fn alpha_from_k(
    form: &ClosedFormId,
    k: &[i64],
) -> Result<(ArmLengths, InclusionPattern), Rank3Error> {
    check_arity(form, k)?;
    let incl = |pairs: &[(usize, usize)]| InclusionPattern::new(pairs).unwrap();
    let (alpha, pattern) = match *form {
        ClosedFormId::D1 { l, m, n } => (case1_alpha(k, l, m, n), incl(&[])),
        ClosedFormId::D1Incl1122 { l, m, n } => (case1_alpha(k, l, m, n), incl(&[(1, 2)])),
        ClosedFormId::D1Incl1132 { l, m, n } => (case1_alpha(k, l, m, n), incl(&[(1, 3)])),
        ClosedFormId::D2 { m, n } => (case2_alpha(k, m, n), incl(&[])),
        ClosedFormId::D2Incl1122 { m, n } => (case2_alpha(k, m, n), incl(&[(1, 2)])),
        ClosedFormId::D2Incl2112 { m, n } => (case2_alpha(k, m, n), incl(&[(2, 1)])),
        ClosedFormId::D3 { m, n } => (case3_alpha(k, m, n), incl(&[])),
        ClosedFormId::D0 => (case3_alpha(k, 3, 2), incl(&[])),
        ClosedFormId::D8 => (d8_alpha(k), incl(&[])),
        ClosedFormId::D8Incl1 => (d8_alpha(k), incl(&[(3, 1)])),
        ClosedFormId::D8Incl2 => (d8_alpha(k), incl(&[(1, 3)])),
        ClosedFormId::D8Incl3 => (d8_alpha(k), incl(&[(3, 2)])),
    };
    Ok((alpha, pattern))
}

fn case1_alpha(k: &[i64], l: i64, m: i64, n: i64) -> ArmLengths {
    ArmLengths::new([
        k[0] + 1,
        k[0] + k[2] + k[4] + l,
        k[0] + k[3] + k[5] + m,
        k[1] + k[4] + k[5] + n,
        k[1] + k[3] + 1,
        k[1] + k[2] + 1,
    ])
}

fn case2_alpha(k: &[i64], m: i64, n: i64) -> ArmLengths {
    ArmLengths::new([
        k[0] + k[2] + 1,
        k[0] + k[4] + 1,
        k[0] + k[3] + k[5] + m,
        k[1] + k[3] + 1,
        k[1] + k[5] + 1,
        k[1] + k[2] + k[4] + n,
    ])
}

fn case3_alpha(k: &[i64], m: i64, n: i64) -> ArmLengths {
    ArmLengths::new([
        0,
        k[1] + k[4] + n,
        k[2] + k[3] + n,
        k[0] + k[1] + k[2] + m,
        k[0] + k[3] + n,
        k[0] + k[4] + n,
    ])
}

fn d8_alpha(k: &[i64]) -> ArmLengths {
    ArmLengths::new([
        k[0] + k[2] + k[5] + 1,
        k[0] + k[3] + k[6] + 1,
        k[0] + k[4] + k[7] + 1,
        k[1] + k[4] + k[6] + 1,
        k[1] + k[2] + k[7] + 1,
        k[1] + k[3] + k[5] + 1,
    ])
}

/// Count the lattice points where the (optionally restricted) form takes the
/// value `delta`. `zero_pattern` pins the listed coordinates to 0;
/// `positivity` forces the listed coordinates to be at least 1.
pub fn count_solutions(
    form: &ClosedFormId,
    delta: i64,
    zero_pattern: Option<&[usize]>,
    positivity: Option<&[usize]>,
) -> Result<u64, Rank3Error> {
    use crate::poly::Slot;
    let arity = form.arity();
    let zeros = zero_pattern.unwrap_or(&[]);
    let ones = positivity.unwrap_or(&[]);
    let mut slots = Vec::with_capacity(arity);
    let mut mins = Vec::new();
    for i in 0..arity {
        if zeros.contains(&i) {
            slots.push(Slot::Zero);
        } else {
            slots.push(Slot::Var(mins.len()));
            mins.push(if ones.contains(&i) { 1 } else { 0 });
        }
    }
    let restricted = form.poly().substitute(&slots, mins.len());
    restricted
        .check_enumerable()
        .map_err(Rank3Error::UnboundedForm)?;
    Ok(restricted.count_at(&mins, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank3::disc_r3;

    #[test]
    fn constant_terms() {
        let z6 = [0i64; 6];
        let z5 = [0i64; 5];
        let z8 = [0i64; 8];
        assert_eq!(
            disc_closed(&ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 1 }, &z6).unwrap(),
            -22
        );
        assert_eq!(
            disc_closed(&ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 2 }, &z6).unwrap(),
            -34
        );
        assert_eq!(
            disc_closed(&ClosedFormId::D2Incl1122 { m: 1, n: 2 }, &z6).unwrap(),
            -16
        );
        assert_eq!(
            disc_closed(&ClosedFormId::D3 { m: 2, n: 1 }, &z5).unwrap(),
            -16
        );
        assert_eq!(
            disc_closed(&ClosedFormId::D3 { m: 1, n: 1 }, &z5).unwrap(),
            -10
        );
        assert_eq!(disc_closed(&ClosedFormId::D8, &z8).unwrap(), -18);
        assert_eq!(disc_closed(&ClosedFormId::D0, &z5).unwrap(), -54);
    }

    #[test]
    fn alpha_at_origin() {
        let (a, _) = alpha_from_k(&ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 1 }, &[0; 6]).unwrap();
        assert_eq!(a, ArmLengths::new([1, 2, 2, 1, 1, 1]));
        let (a, _) = alpha_from_k(&ClosedFormId::D8, &[0; 8]).unwrap();
        assert_eq!(a, ArmLengths::new([1; 6]));
        let (a, _) = alpha_from_k(&ClosedFormId::D3 { m: 1, n: 1 }, &[0; 5]).unwrap();
        assert_eq!(a, ArmLengths::new([0, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn closed_form_matches_direct_discriminant() {
        // Full sweep over k in [0, 4]^arity lives in the acceptance suite;
        // spot-check a small box here.
        for form in ClosedFormId::named_instances() {
            let arity = form.arity();
            let mut k = vec![0i64; arity];
            loop {
                let (alpha, incl) = alpha_from_k(&form, &k).unwrap();
                assert_eq!(
                    disc_closed(&form, &k).unwrap(),
                    disc_r3(&alpha, &incl),
                    "form {form:?} at {k:?}"
                );
                let mut pos = 0;
                while pos < arity {
                    k[pos] += 1;
                    if k[pos] <= 2 {
                        break;
                    }
                    k[pos] = 0;
                    pos += 1;
                }
                if pos == arity {
                    break;
                }
            }
        }
    }

    #[test]
    fn arity_checked() {
        assert!(matches!(
            disc_closed(&ClosedFormId::D8, &[0; 6]),
            Err(Rank3Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn count_examples() {
        // K^3(-10, 1, 1) = 1 (only k = 0)
        assert_eq!(
            count_solutions(&ClosedFormId::D3 { m: 1, n: 1 }, -10, None, None).unwrap(),
            1
        );
        // K^2_{11,22}(-16, 1, 2) = 1
        assert_eq!(
            count_solutions(&ClosedFormId::D2Incl1122 { m: 1, n: 2 }, -16, None, None).unwrap(),
            1
        );
        // K^1_{11,22}(-4, 2, 2, 1) = 0
        assert_eq!(
            count_solutions(
                &ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 1 },
                -4,
                None,
                None
            )
            .unwrap(),
            0
        );
    }
}
