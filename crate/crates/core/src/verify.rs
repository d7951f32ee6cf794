//! Runtime verification suites: the golden data checks and invariant scans
//! behind `verify`, reusable from both the command line and the test
//! harness. Everything here is deterministic.

use num_rational::Ratio;
use num_traits::Signed;

use crate::exactgeom::Polyhedron;
use crate::filtrations::{
    chern, discriminant_normalized, discriminant_working, standard_triple, twist_chern, ChernData,
    Filtration, FiltrationTriple, SubspaceBasis,
};
use crate::quiverrep::{is_stable, QuiverRepresentation, Stability};
use crate::rank2;
use crate::rank3::{
    self, alpha_from_k, case_system, counted_solutions_mod4, decompose_solution, disc_closed,
    disc_r3, recompose_solution, ArmLengths, CaseId, ClosedFormId, InclusionPattern,
};
use crate::{parse_rational, ratio_from_int, Rational};

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(suite: &'static str, name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            suite,
            name: name.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    fn fail(suite: &'static str, name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            suite,
            name: name.into(),
            pass: false,
            detail: detail.into(),
        }
    }

    fn expect_eq<A: PartialEq + std::fmt::Debug>(
        suite: &'static str,
        name: impl Into<String>,
        got: A,
        want: A,
    ) -> Self {
        let name = name.into();
        if got == want {
            Self::ok(suite, name, "matches")
        } else {
            Self::fail(suite, name, format!("got {got:?}, want {want:?}"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Polyhedra,
    ClosedForms,
    Decomposition,
    Hurwitz,
    Series,
    Properties,
    Stability,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "polyhedra" => Suite::Polyhedra,
            "closed-forms" => Suite::ClosedForms,
            "decomposition" => Suite::Decomposition,
            "hurwitz" => Suite::Hurwitz,
            "series" => Suite::Series,
            "properties" => Suite::Properties,
            "stability" => Suite::Stability,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

pub fn run(suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::Polyhedra => suite_polyhedra(),
        Suite::ClosedForms => suite_closed_forms(),
        Suite::Decomposition => suite_decomposition(),
        Suite::Hurwitz => suite_hurwitz(),
        Suite::Series => suite_series(),
        Suite::Properties => suite_properties(),
        Suite::Stability => suite_stability(),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Polyhedra,
                Suite::ClosedForms,
                Suite::Decomposition,
                Suite::Hurwitz,
                Suite::Series,
                Suite::Properties,
                Suite::Stability,
            ] {
                out.extend(run(s));
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Golden data

pub const GOLDEN_SERIES_MOD4: &str = include_str!("../data/series_mod4.tsv");
pub const GOLDEN_SERIES_MOD0: &str = include_str!("../data/series_mod0.tsv");

pub fn parse_golden_series(text: &str) -> Vec<(i64, i64)> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let e = it.next().unwrap().parse().unwrap();
            let c = it.next().unwrap().parse().unwrap();
            (e, c)
        })
        .collect()
}

pub const E1: &[[&str; 6]] = &[
    ["1", "1", "1", "1", "1", "1"],
    ["1", "3", "2", "1", "1", "1"],
    ["1", "2", "3", "1", "1", "1"],
];

pub const S1: &[[i64; 6]] = &[
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 1, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 0],
];

pub const E2: &[[&str; 6]] = &[
    ["1", "1", "1", "1", "1", "1"],
    ["1", "1", "5/2", "1", "1", "1"],
    ["2", "1", "3", "1", "1", "1"],
    ["1", "2", "3", "1", "1", "1"],
    ["1", "1", "1", "1", "2", "3"],
    ["1", "1", "1", "2", "1", "3"],
    ["1", "1", "2", "1", "1", "2"],
    ["1", "1", "1", "1", "1", "5/2"],
];

pub const S2: &[[i64; 6]] = &[
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 1, 0],
];

pub const E3: &[[&str; 6]] = &[
    ["0", "1", "1", "2", "2", "1"],
    ["0", "1", "1", "3", "1", "1"],
    ["0", "1", "1", "1", "2", "2"],
    ["0", "2", "1", "1", "1", "1"],
    ["0", "1", "1", "1", "3/2", "1"],
    ["0", "1", "1", "2", "1", "2"],
    ["0", "1", "2", "1", "1", "1"],
    ["0", "1", "1", "1", "1", "3/2"],
    ["0", "1", "1", "1", "1", "1"],
];

pub const S3: &[[i64; 6]] = &[
    [0, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 1],
];

pub const S8: &[[i64; 6]] = &[
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 1],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0],
];

pub const RANK2_POINT: &[[&str; 3]] = &[["1", "1", "1"]];
pub const RANK2_RAYS: &[[i64; 3]] = &[[1, 1, 0], [0, 1, 1], [1, 0, 1]];

fn parse_points<const N: usize>(rows: &[[&str; N]]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect())
        .collect();
    out.sort();
    out
}

fn sorted_rays<const N: usize>(rows: &[[i64; N]]) -> Vec<Vec<crate::Int>> {
    let mut out: Vec<Vec<crate::Int>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| crate::Int::from(x)).collect())
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Suite: polyhedra (the golden vertex/ray sets)

fn check_system<const N: usize>(
    name: &str,
    system: &Polyhedron<crate::Int>,
    points: &[[&str; N]],
    rays: &[[i64; N]],
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    match system.extreme_points() {
        Ok(got) => out.push(CheckResult::expect_eq(
            "polyhedra",
            format!("{name}: extreme points"),
            got,
            parse_points(points),
        )),
        Err(e) => out.push(CheckResult::fail(
            "polyhedra",
            format!("{name}: extreme points"),
            e.to_string(),
        )),
    }
    match system.extremal_rays() {
        Ok(got) => out.push(CheckResult::expect_eq(
            "polyhedra",
            format!("{name}: extremal rays"),
            got,
            sorted_rays(rays),
        )),
        Err(e) => out.push(CheckResult::fail(
            "polyhedra",
            format!("{name}: extremal rays"),
            e.to_string(),
        )),
    }
    out
}

fn suite_polyhedra() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(check_system(
        "rank2",
        &rank2::stability_system(),
        RANK2_POINT,
        RANK2_RAYS,
    ));
    out.extend(check_system("case1", &case_system(CaseId::Case1), E1, S1));
    out.extend(check_system("case2", &case_system(CaseId::Case2), E2, S2));
    out.extend(check_system("case3", &case_system(CaseId::Case3), E3, S3));
    let mod0: Polyhedron<crate::Int> = rank3::mod0_system();
    match mod0.extremal_rays() {
        Ok(got) => out.push(CheckResult::expect_eq(
            "polyhedra",
            "standard form: the eight rays",
            got,
            sorted_rays(S8),
        )),
        Err(e) => out.push(CheckResult::fail(
            "polyhedra",
            "standard form: the eight rays",
            e.to_string(),
        )),
    }
    out.push(conv_cone_soundness());
    out.push(row_permutation_invariance());
    out
}

/// Random nonnegative combinations of extreme points and rays stay inside
/// the polyhedron.
fn conv_cone_soundness() -> CheckResult {
    let mut rng = SplitMix::new(0x5eed_0001);
    let systems: Vec<(&str, Polyhedron<i64>)> = vec![
        ("rank2", rank2::stability_system()),
        ("case1", case_system(CaseId::Case1)),
        ("case2", case_system(CaseId::Case2)),
    ];
    for (name, system) in &systems {
        let vr = system.vertex_ray_decomposition().unwrap();
        for trial in 0..200 {
            // Convex weights with small denominators, then ray multipliers.
            let mut weights: Vec<i64> = (0..vr.extreme_points.len())
                .map(|_| rng.below(5) as i64)
                .collect();
            if weights.iter().all(|&w| w == 0) {
                weights[0] = 1;
            }
            let total: i64 = weights.iter().sum();
            let mut x = vec![Ratio::new(0, 1); system.num_vars()];
            for (w, p) in weights.iter().zip(&vr.extreme_points) {
                for (xi, pi) in x.iter_mut().zip(p) {
                    *xi += Ratio::new(*w, total) * pi;
                }
            }
            for ray in &vr.extremal_rays {
                let lambda = Ratio::new(rng.below(7) as i64, 1 + rng.below(3) as i64);
                for (xi, ri) in x.iter_mut().zip(ray) {
                    *xi += lambda * Ratio::new(*ri, 1);
                }
            }
            if !system.contains(&x, false).unwrap() {
                return CheckResult::fail(
                    "polyhedra",
                    "conv+cone soundness",
                    format!("{name}: trial {trial} escaped the polyhedron"),
                );
            }
        }
    }
    CheckResult::ok(
        "polyhedra",
        "conv+cone soundness",
        "200 random combinations per system stay inside",
    )
}

/// The vertex/ray sets do not depend on the row order of the system.
fn row_permutation_invariance() -> CheckResult {
    let system: Polyhedron<i64> = case_system(CaseId::Case1);
    let baseline = system.vertex_ray_decomposition().unwrap();
    let mut rng = SplitMix::new(0x5eed_0002);
    let m = system.num_rows();
    for _ in 0..3 {
        let mut order: Vec<usize> = (0..m).collect();
        for i in (1..m).rev() {
            order.swap(i, rng.below(i as u64 + 1) as usize);
        }
        let rows: Vec<Vec<Ratio<i64>>> = order
            .iter()
            .map(|&r| system.matrix().row(r).to_vec())
            .collect();
        let b: Vec<Ratio<i64>> = order.iter().map(|&r| system.bounds()[r]).collect();
        let shuffled = Polyhedron::new(crate::exactgeom::RationalMatrix::from_rows(rows), b);
        let vr = shuffled.vertex_ray_decomposition().unwrap();
        if vr != baseline {
            return CheckResult::fail(
                "polyhedra",
                "row permutation invariance",
                "shuffled system produced a different set",
            );
        }
    }
    CheckResult::ok(
        "polyhedra",
        "row permutation invariance",
        "three shuffles of the case-1 system agree",
    )
}

// ---------------------------------------------------------------------------
// Suite: closed forms

fn suite_closed_forms() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for form in ClosedFormId::named_instances() {
        let arity = form.arity();
        let mut k = vec![0i64; arity];
        loop {
            let closed = disc_closed(&form, &k).unwrap();
            let (alpha, incl) = alpha_from_k(&form, &k).unwrap();
            let direct = disc_r3(&alpha, &incl);
            checked += 1;
            if closed != direct && mismatches.len() < 3 {
                mismatches.push(format!("{form:?} at {k:?}: {closed} vs {direct}"));
            }
            if !advance(&mut k, 4) {
                break;
            }
        }
    }
    out.push(if mismatches.is_empty() {
        CheckResult::ok(
            "closed-forms",
            "closed form = direct discriminant",
            format!("{checked} evaluations over [0,4]^arity"),
        )
    } else {
        CheckResult::fail(
            "closed-forms",
            "closed form = direct discriminant",
            mismatches.join("; "),
        )
    });
    out.push(symmetry_identities());
    out
}

fn advance(k: &mut [i64], max: i64) -> bool {
    for x in k.iter_mut() {
        *x += 1;
        if *x <= max {
            return true;
        }
        *x = 0;
    }
    false
}

/// The displayed symmetry identities between inclusion variants hold
/// pointwise.
fn symmetry_identities() -> CheckResult {
    let d1a = ClosedFormId::D1Incl1122 { l: 2, m: 2, n: 1 };
    let d1b = ClosedFormId::D1Incl1132 { l: 2, m: 2, n: 1 };
    let d2a = |m, n| ClosedFormId::D2Incl1122 { m, n };
    let d2b = |m, n| ClosedFormId::D2Incl2112 { m, n };
    let mut k = vec![0i64; 6];
    loop {
        let swap34 = [k[0], k[1], k[3], k[2], k[4], k[5]];
        if disc_closed(&d1a, &k).unwrap() != disc_closed(&d1b, &swap34).unwrap() {
            return CheckResult::fail(
                "closed-forms",
                "symmetry identities",
                format!("case-1 swap failed at {k:?}"),
            );
        }
        let rot = [k[0], k[1], k[4], k[5], k[2], k[3]];
        if disc_closed(&d2a(1, 2), &k).unwrap() != disc_closed(&d2b(1, 2), &rot).unwrap() {
            return CheckResult::fail(
                "closed-forms",
                "symmetry identities",
                format!("case-2 rotation failed at {k:?}"),
            );
        }
        let mirror = [k[1], k[0], k[5], k[4], k[3], k[2]];
        if disc_closed(&d2a(1, 2), &k).unwrap() != disc_closed(&d2a(2, 1), &mirror).unwrap() {
            return CheckResult::fail(
                "closed-forms",
                "symmetry identities",
                format!("case-2 parameter swap failed at {k:?}"),
            );
        }
        if !advance(&mut k, 3) {
            break;
        }
    }
    CheckResult::ok(
        "closed-forms",
        "symmetry identities",
        "all three displayed identities hold on [0,3]^6",
    )
}

// ---------------------------------------------------------------------------
// Suite: decomposition

fn suite_decomposition() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for case in [CaseId::Case1, CaseId::Case2, CaseId::Case3] {
        let system: Polyhedron<i64> = case_system(case);
        let mut solutions = 0u64;
        let mut failure: Option<String> = None;
        let lo = if case == CaseId::Case3 { 0 } else { 1 };
        let mut alpha = [lo, 1, 1, 1, 1, 1];
        loop {
            if case != CaseId::Case3 || alpha[0] == 0 {
                let a = ArmLengths::new(alpha);
                if rank3::is_strict_solution(&system, &a) {
                    solutions += 1;
                    let found = decompose_all(case, &a);
                    if found.len() == 1 {
                        let (start, coeffs) = &found[0];
                        let back = recompose_solution(case, *start, coeffs);
                        if back != a && failure.is_none() {
                            failure = Some(format!("{a}: round trip gave {back}"));
                        }
                        let via_api = decompose_solution(case, &a).unwrap();
                        if via_api != found[0] && failure.is_none() {
                            failure = Some(format!("{a}: api disagrees"));
                        }
                    } else if failure.is_none() {
                        failure = Some(format!("{a}: {} decompositions", found.len()));
                    }
                }
            }
            if !advance_alpha(&mut alpha, case) {
                break;
            }
        }
        let name = format!("{case:?}: unique decomposition over alpha <= 8");
        out.push(match failure {
            None => CheckResult::ok(
                "decomposition",
                name,
                format!("{solutions} strict solutions, all decompose uniquely"),
            ),
            Some(f) => CheckResult::fail("decomposition", name, f),
        });
    }
    out
}

fn advance_alpha(alpha: &mut [i64; 6], case: CaseId) -> bool {
    let start = if case == CaseId::Case3 { 1 } else { 0 };
    for i in start..6 {
        alpha[i] += 1;
        if alpha[i] <= 8 {
            return true;
        }
        alpha[i] = 1;
    }
    false
}

/// Try every start vector; with independent rays each start admits at most
/// one lattice decomposition.
fn decompose_all(case: CaseId, alpha: &ArmLengths) -> Vec<(usize, Vec<i64>)> {
    let starts = case.start_vectors();
    let rays = case.rays();
    let mut out = Vec::new();
    for (idx, start) in starts.iter().enumerate() {
        let diff: Vec<i64> = (0..6).map(|c| alpha.0[c] - start.0[c]).collect();
        if let Some(coeffs) = express_in_rays(&diff, &rays) {
            out.push((idx, coeffs));
        }
    }
    out
}

fn express_in_rays(diff: &[i64], rays: &[[i64; 6]]) -> Option<Vec<i64>> {
    let m = crate::exactgeom::RationalMatrix::<i64>::from_int_rows(
        &(0..6)
            .map(|c| rays.iter().map(|w| w[c]).collect::<Vec<i64>>())
            .collect::<Vec<_>>(),
    );
    let mut aug_rows = Vec::with_capacity(6);
    for r in 0..6 {
        let mut row = m.row(r).to_vec();
        row.push(ratio_from_int(diff[r]));
        aug_rows.push(row);
    }
    let aug = crate::exactgeom::RationalMatrix::from_rows(aug_rows);
    let (rref, pivots) = aug.rref();
    if pivots.contains(&rays.len()) || pivots.len() < rays.len() {
        return None;
    }
    let mut coeffs = vec![0i64; rays.len()];
    for (row, &p) in pivots.iter().enumerate() {
        let v = rref.get(row, rays.len());
        if !num_integer::Integer::is_multiple_of(v.numer(), v.denom()) || v.is_negative() {
            return None;
        }
        coeffs[p] = v.numer() / v.denom();
    }
    Some(coeffs)
}

// ---------------------------------------------------------------------------
// Suite: hurwitz

fn suite_hurwitz() -> Vec<CheckResult> {
    let mut bad = Vec::new();
    for n in 3..=200i64 {
        if n % 4 != 0 && n % 4 != 3 {
            continue;
        }
        let lattice = Rational::from_integer(rank2::chi_rank2(-n).unwrap().into());
        let class_side = rank2::chi_rank2_hurwitz(-n).unwrap();
        if lattice != class_side && bad.len() < 3 {
            bad.push(format!("n={n}: {lattice} vs {class_side}"));
        }
    }
    vec![if bad.is_empty() {
        CheckResult::ok(
            "hurwitz",
            "lattice count = class-number formula for |delta| <= 200",
            "both sides computed independently",
        )
    } else {
        CheckResult::fail(
            "hurwitz",
            "lattice count = class-number formula for |delta| <= 200",
            bad.join("; "),
        )
    }]
}

// ---------------------------------------------------------------------------
// Suite: series

fn suite_series() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let golden = parse_golden_series(GOLDEN_SERIES_MOD4);
    let series = rank3::series_rank3(4, golden.len()).unwrap();
    let got: Vec<(i64, i64)> = series.iter().collect();
    out.push(CheckResult::expect_eq(
        "series",
        "rank 3, residue 4, depth 32",
        got,
        golden,
    ));
    let golden = parse_golden_series(GOLDEN_SERIES_MOD0);
    let series = rank3::series_rank3(0, golden.len()).unwrap();
    let got: Vec<(i64, i64)> = series.iter().collect();
    out.push(CheckResult::expect_eq(
        "series",
        "rank 3, residue 0, depth 33",
        got,
        golden,
    ));
    out
}

// ---------------------------------------------------------------------------
// Suite: properties (shift, twist, residue, Bogomolov)

fn suite_properties() -> Vec<CheckResult> {
    vec![
        shift_invariance(),
        basis_invariance(),
        twist_invariance(),
        residue_law(),
        bogomolov_nonnegativity(),
    ]
}

/// A deterministic random filtration triple with rank <= 3 and small arms.
fn random_triple(rng: &mut SplitMix) -> FiltrationTriple<i64> {
    let rank = 2 + rng.below(2) as usize;
    loop {
        let g = random_invertible(rng, rank);
        let mut arms = Vec::with_capacity(3);
        for _ in 0..3 {
            // Weakly decreasing dimension profile over at most 4 indices.
            let len = 1 + rng.below(4) as i64;
            let mut dims = Vec::new();
            let mut d = rank;
            for _ in 0..len {
                d = d.saturating_sub(rng.below(2) as usize + usize::from(dims.is_empty()));
                dims.push(d);
            }
            let start = rng.below(5) as i64 - 2;
            let mut steps = Vec::new();
            let mut prev = rank;
            for (offset, &dim) in dims.iter().enumerate() {
                if dim == prev {
                    continue;
                }
                let vectors: Vec<Vec<Ratio<i64>>> = (0..dim).map(|c| column(&g, c)).collect();
                steps.push((
                    start + offset as i64,
                    SubspaceBasis::new(rank, vectors).unwrap(),
                ));
                prev = dim;
            }
            let last = start + dims.len() as i64;
            if prev > 0 {
                steps.push((last, SubspaceBasis::zero(rank)));
            }
            if steps.is_empty() {
                steps.push((start, SubspaceBasis::zero(rank)));
            }
            arms.push(Filtration::new(rank, steps).unwrap());
        }
        let t = FiltrationTriple::new([arms[0].clone(), arms[1].clone(), arms[2].clone()]).unwrap();
        if chern(&t).is_ok() {
            return t;
        }
    }
}

fn column(g: &crate::exactgeom::RationalMatrix<i64>, c: usize) -> Vec<Ratio<i64>> {
    (0..g.rows()).map(|r| *g.get(r, c)).collect()
}

fn random_invertible(rng: &mut SplitMix, n: usize) -> crate::exactgeom::RationalMatrix<i64> {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.below(7) as i64 - 3).collect())
            .collect();
        let m = crate::exactgeom::RationalMatrix::from_int_rows(&rows);
        if m.rank() == n {
            return m;
        }
    }
}

fn shift_invariance() -> CheckResult {
    let mut rng = SplitMix::new(0x5eed_0010);
    for trial in 0..1000 {
        let t = random_triple(&mut rng);
        let base = discriminant_working(&t);
        let k = [
            rng.below(11) as i64 - 5,
            rng.below(11) as i64 - 5,
            rng.below(11) as i64 - 5,
        ];
        let shifted = discriminant_working(&t.shift(k));
        if base.as_ref().ok() != shifted.as_ref().ok() || base.is_err() {
            return CheckResult::fail(
                "properties",
                "shift invariance of the working discriminant",
                format!("trial {trial}: {base:?} vs {shifted:?} under {k:?}"),
            );
        }
    }
    CheckResult::ok(
        "properties",
        "shift invariance of the working discriminant",
        "1000 random triples, random shifts in [-5,5]^3",
    )
}

fn basis_invariance() -> CheckResult {
    let mut rng = SplitMix::new(0x5eed_0011);
    for trial in 0..100 {
        let t = random_triple(&mut rng);
        let g = random_invertible(&mut rng, t.ambient_dim());
        let moved = t.apply_basis_change(&g);
        if chern(&t).unwrap() != chern(&moved).unwrap() {
            return CheckResult::fail(
                "properties",
                "chern data invariant under base change",
                format!("trial {trial}"),
            );
        }
    }
    CheckResult::ok(
        "properties",
        "chern data invariant under base change",
        "100 random triples and invertible changes of basis",
    )
}

fn twist_invariance() -> CheckResult {
    let mut rng = SplitMix::new(0x5eed_0012);
    for _ in 0..100 {
        let c = ChernData {
            c1: rng.below(21) as i64 - 10,
            c2: rng.below(21) as i64 - 10,
            rank: 1 + rng.below(3) as usize,
        };
        let k = rng.below(11) as i64 - 5;
        let t = twist_chern(&c, k);
        if discriminant_normalized(&c) != discriminant_normalized(&t) {
            return CheckResult::fail(
                "properties",
                "twist preserves the normalized discriminant",
                format!("{c:?} twisted by {k}"),
            );
        }
    }
    CheckResult::ok(
        "properties",
        "twist preserves the normalized discriminant",
        "100 random Chern data and twists",
    )
}

fn residue_law() -> CheckResult {
    let mut rng = SplitMix::new(0x5eed_0013);
    let patterns = [
        InclusionPattern::empty(),
        InclusionPattern::new(&[(1, 2)]).unwrap(),
        InclusionPattern::new(&[(2, 3)]).unwrap(),
        InclusionPattern::new(&[(1, 2), (2, 1)]).unwrap(),
        InclusionPattern::new(&[(1, 2), (1, 3)]).unwrap(),
        InclusionPattern::new(&[(1, 2), (3, 2)]).unwrap(),
    ];
    for _ in 0..10_000 {
        let mut v = [0i64; 6];
        for x in &mut v {
            *x = rng.below(9) as i64;
        }
        let alpha = ArmLengths::new(v);
        let incl = &patterns[rng.below(patterns.len() as u64) as usize];
        let delta = disc_r3(&alpha, incl);
        let signed = delta.rem_euclid(6);
        let abs_ok = delta > 0 || matches!(delta.unsigned_abs() % 6, 0 | 4);
        if (signed != 0 && signed != 2) || !abs_ok {
            return CheckResult::fail(
                "properties",
                "residue law |delta| in {0,4} mod 6",
                format!("{alpha} with {incl:?} gave {delta}"),
            );
        }
    }
    CheckResult::ok(
        "properties",
        "residue law |delta| in {0,4} mod 6",
        "10000 random arm lengths and patterns (signed form 0 or 2 mod 6)",
    )
}

fn bogomolov_nonnegativity() -> CheckResult {
    let sols = counted_solutions_mod4(80).unwrap();
    for sol in &sols {
        if sol.delta > 0 {
            return CheckResult::fail(
                "properties",
                "Bogomolov nonnegativity on counted solutions",
                format!("{:?} has positive working discriminant", sol.alpha),
            );
        }
        let normalized = crate::filtrations::normalized_from_working(3, sol.delta).unwrap();
        if normalized.is_negative() {
            return CheckResult::fail(
                "properties",
                "Bogomolov nonnegativity on counted solutions",
                format!("{:?} has negative normalized discriminant", sol.alpha),
            );
        }
    }
    CheckResult::ok(
        "properties",
        "Bogomolov nonnegativity on counted solutions",
        format!("{} counted solutions with |delta| <= 80", sols.len()),
    )
}

// ---------------------------------------------------------------------------
// Suite: stability concordance

fn suite_stability() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let sols = counted_solutions_mod4(40).unwrap();
    let mut checked = 0;
    let mut failure = None;
    for sol in &sols {
        let incl_pair = sol.incl.pairs().next();
        let triple: FiltrationTriple<i64> =
            standard_triple(sol.alpha.as_slice(), incl_pair).unwrap();
        let delta = discriminant_working(&triple).unwrap();
        if delta != sol.delta && failure.is_none() {
            failure = Some(format!(
                "{}: triple discriminant {delta}, counted {}",
                sol.alpha, sol.delta
            ));
        }
        let rep = QuiverRepresentation::from_filtration_triple(&triple);
        match is_stable(&rep) {
            Ok(Stability::Stable) => {}
            other => {
                if failure.is_none() {
                    failure = Some(format!("{}: classified {other:?}", sol.alpha));
                }
            }
        }
        // Counted solutions never meet any stability row with equality.
        let case = match sol.form {
            ClosedFormId::D1Incl1122 { .. } => CaseId::Case1,
            ClosedFormId::D2Incl1122 { .. } => CaseId::Case2,
            _ => CaseId::Case3,
        };
        let system: Polyhedron<i64> = case_system(case);
        if !rank3::is_strict_solution(&system, &sol.alpha) && failure.is_none() {
            failure = Some(format!("{}: not strict in {case:?}", sol.alpha));
        }
        checked += 1;
    }
    out.push(match failure {
        None => CheckResult::ok(
            "stability",
            "counted solutions are stable (|delta| <= 40)",
            format!("{checked} filtrations classified stable, all strict"),
        ),
        Some(f) => CheckResult::fail(
            "stability",
            "counted solutions are stable (|delta| <= 40)",
            f,
        ),
    });
    out.push(boundary_points_semistable());
    out
}

/// The three boundary points of the all-ones quiver are semistable but not
/// stable.
fn boundary_points_semistable() -> CheckResult {
    for v2 in [[0i64, 1, 0], [0, 0, 1], [0, 1, 1]] {
        let plane = SubspaceBasis::<i64>::new(
            3,
            vec![
                vec![ratio_from_int(1), ratio_from_int(1), ratio_from_int(1)],
                v2.iter().map(|&c| ratio_from_int(c)).collect(),
            ],
        )
        .unwrap();
        let line = SubspaceBasis::new(
            3,
            vec![vec![
                ratio_from_int(1),
                ratio_from_int(1),
                ratio_from_int(1),
            ]],
        )
        .unwrap();
        let sub = |vectors: &[[i64; 3]]| {
            SubspaceBasis::<i64>::new(
                3,
                vectors
                    .iter()
                    .map(|v| v.iter().map(|&c| ratio_from_int(c)).collect())
                    .collect(),
            )
            .unwrap()
        };
        let rep = QuiverRepresentation::new(
            3,
            vec![
                vec![sub(&[[1, 0, 0], [0, 1, 0]]), sub(&[[1, 0, 0]])],
                vec![sub(&[[0, 1, 0], [0, 0, 1]]), sub(&[[0, 0, 1]])],
                vec![plane, line],
            ],
        );
        if is_stable(&rep).unwrap() != Stability::StrictlySemistable {
            return CheckResult::fail(
                "stability",
                "boundary points are strictly semistable",
                format!("v2 = {v2:?} misclassified"),
            );
        }
    }
    CheckResult::ok(
        "stability",
        "boundary points are strictly semistable",
        "all three boundary points of the all-ones quiver",
    )
}

// ---------------------------------------------------------------------------

/// SplitMix64: tiny deterministic generator for the verification scans.
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_files_parse() {
        assert_eq!(parse_golden_series(GOLDEN_SERIES_MOD4).len(), 32);
        assert_eq!(parse_golden_series(GOLDEN_SERIES_MOD0).len(), 33);
    }

    #[test]
    fn hurwitz_suite_passes() {
        assert!(suite_hurwitz().iter().all(|c| c.pass));
    }

    #[test]
    fn random_triples_have_consistent_chern() {
        let mut rng = SplitMix::new(42);
        for _ in 0..50 {
            let t = random_triple(&mut rng);
            let c = chern(&t).unwrap();
            assert_eq!(c.rank, t.ambient_dim());
        }
    }
}
