//! Command implementations behind the `p2chi` binary. Each command returns
//! an [`OutputRecord`] holding exact values only; rationals are rendered as
//! `p/q` strings, never as decimals. Identical invocations produce
//! byte-identical output.

use std::fmt::Write as _;

use p2chi::exactgeom::Polyhedron;
use p2chi::filtrations::{
    chern, discriminant_working, normalized_from_working, triple_from_json, triple_to_json,
};
use p2chi::quiverrep::{is_stable, QuiverRepresentation};
use p2chi::rank2;
use p2chi::rank3::{self, CaseId};
use p2chi::verify::{self, Suite};
use p2chi::{format_rational, parse_rational, Int, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "tsv" => Some(Format::Tsv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

/// Canonical command output: the echoed command, its inputs, and result rows
/// of exact integers or `p/q` strings.
#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    /// Optional tabular block (header + rows), used by series and
    /// polyhedron listings.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Vec::new(),
            results: Vec::new(),
            table: None,
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    fn result(mut self, key: &str, value: impl ToString) -> Self {
        self.results.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = String::new();
                writeln!(out, "command\t{}", self.command).unwrap();
                for (k, v) in &self.inputs {
                    writeln!(out, "input:{k}\t{v}").unwrap();
                }
                for (k, v) in &self.results {
                    writeln!(out, "{k}\t{v}").unwrap();
                }
                if let Some((header, rows)) = &self.table {
                    writeln!(out, "{}", header.join("\t")).unwrap();
                    for row in rows {
                        writeln!(out, "{}", row.join("\t")).unwrap();
                    }
                }
                out
            }
            Format::Json => {
                let mut map = serde_json::Map::new();
                map.insert("command".into(), self.command.clone().into());
                let mut inputs = serde_json::Map::new();
                for (k, v) in &self.inputs {
                    inputs.insert(k.clone(), v.clone().into());
                }
                map.insert("inputs".into(), inputs.into());
                let mut results = serde_json::Map::new();
                for (k, v) in &self.results {
                    results.insert(k.clone(), v.clone().into());
                }
                map.insert("results".into(), results.into());
                if let Some((header, rows)) = &self.table {
                    let rows_json: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|row| {
                            let mut obj = serde_json::Map::new();
                            for (h, v) in header.iter().zip(row) {
                                obj.insert(h.clone(), v.clone().into());
                            }
                            obj.into()
                        })
                        .collect();
                    map.insert("rows".into(), rows_json.into());
                }
                let mut s = serde_json::to_string_pretty(&serde_json::Value::from(map)).unwrap();
                s.push('\n');
                s
            }
        }
    }
}

pub struct CommandError {
    pub message: String,
    pub exit_code: i32,
}

impl CommandError {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            exit_code: EXIT_INVALID_INPUT,
        }
    }
}

type CommandResult = Result<(OutputRecord, i32), CommandError>;

/// `chi --rank {2,3} --delta <n>`: the Euler characteristic at one
/// discriminant, with the class-number cross-check in rank 2.
pub fn cmd_chi(rank: u8, delta: i64) -> CommandResult {
    if delta > 0 {
        return Err(CommandError::invalid(format!(
            "delta must be nonpositive, got {delta}"
        )));
    }
    let mut record = OutputRecord::new("chi")
        .input("rank", rank)
        .input("delta", delta);
    match rank {
        2 => {
            let m = delta.unsigned_abs() % 4;
            if m != 0 && m != 3 {
                return Err(CommandError::invalid(format!(
                    "invalid residue: rank 2 needs |delta| = 0 or 3 (mod 4), got |{delta}| = {m} (mod 4)"
                )));
            }
            let chi = rank2::chi_rank2(delta).map_err(|e| CommandError::invalid(e.to_string()))?;
            let hurwitz = rank2::hurwitz(-delta);
            let cross = rank2::chi_rank2_hurwitz(delta)
                .map_err(|e| CommandError::invalid(e.to_string()))?;
            record = record
                .result("chi", chi)
                .result("hurwitz", format_rational(&hurwitz.value))
                .result("hurwitz_check", format_rational(&cross));
            if m == 0 {
                record = record.result("divisor_count", rank2::divisor_count(-delta / 4));
            }
            Ok((record, EXIT_OK))
        }
        3 => {
            let m = delta.unsigned_abs() % 6;
            let chi = match m {
                4 => rank3::chi_mod4(delta),
                0 => rank3::chi_mod0(delta),
                _ => {
                    return Err(CommandError::invalid(format!(
                        "invalid residue: rank 3 needs |delta| = 0 or 4 (mod 6), got |{delta}| = {m} (mod 6)"
                    )))
                }
            }
            .map_err(|e| CommandError::invalid(e.to_string()))?;
            record = record.result("chi", chi);
            Ok((record, EXIT_OK))
        }
        r => Err(CommandError::invalid(format!("unsupported rank {r}"))),
    }
}

/// `series --rank {2,3} --residue <r> --depth <n>`: coefficient table.
pub fn cmd_series(rank: u8, residue: u8, depth: usize) -> CommandResult {
    if depth < 1 {
        return Err(CommandError::invalid("depth must be at least 1"));
    }
    let series = match rank {
        2 => rank2::series_rank2(residue, depth).map_err(|e| CommandError::invalid(e.to_string())),
        3 => rank3::series_rank3(residue, depth).map_err(|e| CommandError::invalid(e.to_string())),
        r => Err(CommandError::invalid(format!("unsupported rank {r}"))),
    }?;
    let mut record = OutputRecord::new("series")
        .input("rank", rank)
        .input("residue", residue)
        .input("depth", depth);
    let rows: Vec<Vec<String>> = series
        .iter()
        .map(|(e, c)| vec![e.to_string(), c.to_string()])
        .collect();
    record.table = Some((vec!["exponent".into(), "coefficient".into()], rows));
    Ok((record, EXIT_OK))
}

fn named_system(case: &str) -> Option<Polyhedron<Int>> {
    Some(match case {
        "rank2" => rank2::stability_system(),
        "case1" => rank3::case_system(CaseId::Case1),
        "case2" => rank3::case_system(CaseId::Case2),
        "case3" => rank3::case_system(CaseId::Case3),
        "rank3-mod0" => rank3::mod0_system(),
        _ => return None,
    })
}

/// Parse the matrix file format: first line `m n`, then `m` rows of `n`
/// rationals, then one row of `m` rationals for the bounds.
fn parse_matrix_file(text: &str) -> Result<Polyhedron<Int>, CommandError> {
    let mut sizes: Option<(usize, usize)> = None;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut bounds: Option<Vec<Rational>> = None;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match sizes {
            None => {
                if tokens.len() != 2 {
                    return Err(CommandError::invalid(format!(
                        "line {lineno}: expected `m n`, got {} tokens",
                        tokens.len()
                    )));
                }
                let m: usize = tokens[0].parse().map_err(|_| {
                    CommandError::invalid(format!("line {lineno}: invalid row count"))
                })?;
                let n: usize = tokens[1].parse().map_err(|_| {
                    CommandError::invalid(format!("line {lineno}: invalid column count"))
                })?;
                if m == 0 || n == 0 {
                    return Err(CommandError::invalid(format!(
                        "line {lineno}: dimensions must be positive"
                    )));
                }
                sizes = Some((m, n));
            }
            Some((m, n)) => {
                let parse_all = |expected: usize| -> Result<Vec<Rational>, CommandError> {
                    if tokens.len() != expected {
                        return Err(CommandError::invalid(format!(
                            "line {lineno}: expected {expected} entries, got {}",
                            tokens.len()
                        )));
                    }
                    tokens
                        .iter()
                        .map(|t| {
                            parse_rational(t)
                                .map_err(|e| CommandError::invalid(format!("line {lineno}: {e}")))
                        })
                        .collect()
                };
                if rows.len() < m {
                    rows.push(parse_all(n)?);
                } else if bounds.is_none() {
                    bounds = Some(parse_all(m)?);
                } else {
                    return Err(CommandError::invalid(format!(
                        "line {lineno}: unexpected extra data"
                    )));
                }
            }
        }
    }
    let (m, _) = sizes.ok_or_else(|| CommandError::invalid("empty matrix file"))?;
    if rows.len() < m {
        return Err(CommandError::invalid(format!(
            "matrix file ended after {} of {m} rows",
            rows.len()
        )));
    }
    let b = bounds.ok_or_else(|| CommandError::invalid("missing bounds row"))?;
    Ok(Polyhedron::new(
        p2chi::exactgeom::RationalMatrix::from_rows(rows),
        b,
    ))
}

/// `polyhedron --case <name>` or `polyhedron --matrix-file <path>`.
pub fn cmd_polyhedron(case: Option<&str>, matrix_file: Option<&str>) -> CommandResult {
    let (record, system) = match (case, matrix_file) {
        (Some(name), None) => {
            let system = named_system(name).ok_or_else(|| {
                CommandError::invalid(format!(
                    "unknown case `{name}`; valid: rank2 | case1 | case2 | case3 | rank3-mod0"
                ))
            })?;
            (OutputRecord::new("polyhedron").input("case", name), system)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CommandError::invalid(format!("cannot read {path}: {e}")))?;
            (
                OutputRecord::new("polyhedron").input("matrix_file", path),
                parse_matrix_file(&text)?,
            )
        }
        _ => {
            return Err(CommandError::invalid(
                "exactly one of --case or --matrix-file is required",
            ))
        }
    };
    let mut record = record;
    let points = system
        .extreme_points()
        .map_err(|e| CommandError::invalid(e.to_string()))?;
    let rays = system
        .extremal_rays()
        .map_err(|e| CommandError::invalid(e.to_string()))?;
    let mut rows = Vec::new();
    for p in &points {
        rows.push(vec![
            "extreme_point".to_string(),
            p.iter().map(format_rational).collect::<Vec<_>>().join(","),
        ]);
    }
    for r in &rays {
        rows.push(vec![
            "extremal_ray".to_string(),
            r.iter().map(Int::to_string).collect::<Vec<_>>().join(","),
        ]);
    }
    record = record
        .result("extreme_points", points.len())
        .result("extremal_rays", rays.len());
    record.table = Some((vec!["kind".into(), "vector".into()], rows));
    Ok((record, EXIT_OK))
}

/// `filtration --path <file> --action {chern|disc|stable|standardize}`.
pub fn cmd_filtration(path: &str, action: &str) -> CommandResult {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CommandError::invalid(format!("cannot read {path}: {e}")))?;
    let triple = triple_from_json(&text).map_err(CommandError::invalid)?;
    let record = OutputRecord::new("filtration")
        .input("path", path)
        .input("action", action);
    match action {
        "chern" => {
            let c = chern(&triple).map_err(|e| CommandError::invalid(e.to_string()))?;
            Ok((
                record
                    .result("c1", c.c1)
                    .result("c2", c.c2)
                    .result("rank", c.rank),
                EXIT_OK,
            ))
        }
        "disc" => {
            let working =
                discriminant_working(&triple).map_err(|e| CommandError::invalid(e.to_string()))?;
            let normalized = normalized_from_working(triple.ambient_dim(), working)
                .map_err(|e| CommandError::invalid(e.to_string()))?;
            Ok((
                record
                    .result("working", working)
                    .result("normalized", format_rational(&normalized)),
                EXIT_OK,
            ))
        }
        "stable" => {
            let rep = QuiverRepresentation::from_filtration_triple(&triple);
            let verdict = is_stable(&rep).map_err(|e| CommandError::invalid(e.to_string()))?;
            Ok((record.result("stability", verdict), EXIT_OK))
        }
        "standardize" => {
            let standardized = triple.standard_position();
            Ok((
                record.result("filtration", triple_to_json(&standardized)),
                EXIT_OK,
            ))
        }
        other => Err(CommandError::invalid(format!(
            "unknown action `{other}`; valid: chern | disc | stable | standardize"
        ))),
    }
}

/// `verify --suite <name>`: run a verification suite; exit 0 iff all pass.
pub fn cmd_verify(suite: &str) -> CommandResult {
    let suite_id = Suite::parse(suite).ok_or_else(|| {
        CommandError::invalid(format!(
            "unknown suite `{suite}`; valid: polyhedra | closed-forms | decomposition | hurwitz | series | properties | stability | all"
        ))
    })?;
    let results = verify::run(suite_id);
    let mut record = OutputRecord::new("verify").input("suite", suite);
    let mut rows = Vec::new();
    let mut all = true;
    for r in &results {
        all &= r.pass;
        rows.push(vec![
            r.suite.to_string(),
            r.name.clone(),
            if r.pass { "pass" } else { "FAIL" }.to_string(),
            r.detail.clone(),
        ]);
    }
    record = record
        .result("checks", results.len())
        .result("outcome", if all { "pass" } else { "fail" });
    record.table = Some((
        vec![
            "suite".into(),
            "check".into(),
            "status".into(),
            "detail".into(),
        ],
        rows,
    ));
    Ok((record, if all { EXIT_OK } else { EXIT_CHECK_FAILED }))
}
