//! Incomplete pairwise comparison matrices: the entry type, the text file
//! format, and structural validation.
//!
//! # File format
//!
//! UTF-8 text, one matrix row per line, fields separated by commas. A field
//! is `?` (missing comparison), a positive decimal with optional exponent
//! (`2`, `0.5`, `1.5e-1`), or an integer fraction `a/b`. Whitespace around
//! fields is ignored. Lines starting with `#` are comments, except that a
//! comment of the form `# labels: x,y,z` names the alternatives.
//!
//! ```text
//! # labels: a1,a2,a3,a4
//! 1,?,?,2
//! ?,1,3,?
//! ?,1/3,1,2
//! 1/2,?,1/2,1
//! ```

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph;

/// Default relative tolerance for `c_ij · c_ji = 1`.
pub const DEFAULT_RECIPROCITY_TOL: f64 = 1e-9;

/// A single comparison result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Entry {
    Missing,
    Ratio(f64),
}

impl Entry {
    pub fn value(self) -> Option<f64> {
        match self {
            Entry::Missing => None,
            Entry::Ratio(v) => Some(v),
        }
    }

    pub fn is_missing(self) -> bool {
        matches!(self, Entry::Missing)
    }
}

impl From<f64> for Entry {
    fn from(v: f64) -> Self {
        Entry::Ratio(v)
    }
}

impl From<Option<f64>> for Entry {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Entry::Missing, Entry::Ratio)
    }
}

/// Square matrix of comparison ratios `c_ij ≈ w_i / w_j`, some of which may
/// be missing. Construction only enforces the shape; use [`validate`] for the
/// remaining invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct IncompletePcMatrix {
    n: usize,
    entries: Vec<Entry>,
    labels: Vec<String>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

impl IncompletePcMatrix {
    /// Builds a matrix from rows of entries. Fails unless the grid is square
    /// with at least two alternatives.
    pub fn from_entries(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::Shape(format!(
                "need at least two alternatives, found {n}"
            )));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {} has {} fields, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Self {
            n,
            entries,
            labels: default_labels(n),
        })
    }

    /// Convenience constructor where `None` marks a missing comparison.
    pub fn from_options<R: AsRef<[Option<f64>]>>(rows: &[R]) -> Result<Self> {
        Self::from_entries(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Entry::from(v)).collect())
                .collect(),
        )
    }

    /// Complete matrix from plain ratios.
    pub fn from_ratios<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        Self::from_entries(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Entry::Ratio(v)).collect())
                .collect(),
        )
    }

    /// Replaces the alternative names. The count must equal `n`.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::Shape(format!(
                "{} labels given for {} alternatives",
                labels.len(),
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels == default_labels(self.n)
    }

    /// Entry `(i, j)`, 0-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> Entry {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Entry] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| !e.is_missing())
    }

    /// Number of missing off-diagonal entries in row `i`.
    pub fn missing_in_row(&self, i: usize) -> usize {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(j, e)| j != i && e.is_missing())
            .count()
    }

    /// Unordered pairs `{i, j}` with at least one side present.
    pub fn present_pairs(&self) -> usize {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_missing() || !self.get(j, i).is_missing())
            .count()
    }

    /// Copy with every one-sided missing entry filled as `c_ji := 1 / c_ij`.
    pub fn repair_reciprocal(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                if let (Entry::Ratio(v), Entry::Missing) = (self.get(i, j), self.get(j, i)) {
                    out.entries[j * self.n + i] = Entry::Ratio(1.0 / v);
                }
            }
        }
        out
    }

    /// Copy with the given entries overwritten. Used by completion.
    pub(crate) fn map_entries(&self, mut f: impl FnMut(usize, usize, Entry) -> Entry) -> Self {
        let n = self.n;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(k, &e)| f(k / n, k % n, e))
            .collect();
        Self {
            n,
            entries,
            labels: self.labels.clone(),
        }
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn value_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Value {
        line,
        column,
        message: message.into(),
    }
}

/// Decimal numeral: optional sign, digits with optional fraction, optional
/// exponent. Rejects `inf`, `nan` and friends that `f64::from_str` accepts.
fn is_decimal(tok: &str) -> bool {
    let b = tok.as_bytes();
    let mut k = 0;
    if k < b.len() && (b[k] == b'+' || b[k] == b'-') {
        k += 1;
    }
    let int_start = k;
    while k < b.len() && b[k].is_ascii_digit() {
        k += 1;
    }
    let mut digits = k - int_start;
    if k < b.len() && b[k] == b'.' {
        k += 1;
        let frac_start = k;
        while k < b.len() && b[k].is_ascii_digit() {
            k += 1;
        }
        digits += k - frac_start;
    }
    if digits == 0 {
        return false;
    }
    if k < b.len() && (b[k] == b'e' || b[k] == b'E') {
        k += 1;
        if k < b.len() && (b[k] == b'+' || b[k] == b'-') {
            k += 1;
        }
        let exp_start = k;
        while k < b.len() && b[k].is_ascii_digit() {
            k += 1;
        }
        if k == exp_start {
            return false;
        }
    }
    k == b.len()
}

fn is_integer(tok: &str) -> bool {
    !tok.is_empty() && tok.bytes().all(|c| c.is_ascii_digit())
}

fn parse_field(tok: &str, line: usize, column: usize) -> Result<Entry> {
    if tok == "?" {
        return Ok(Entry::Missing);
    }
    if tok.is_empty() {
        return Err(syntax(line, column, "empty field"));
    }
    let value = if let Some((num, den)) = tok.split_once('/') {
        let (num, den) = (num.trim(), den.trim());
        if !is_integer(num) || !is_integer(den) {
            return Err(syntax(line, column, format!("bad fraction `{tok}`")));
        }
        let num: f64 = num.parse().map_err(|_| syntax(line, column, "bad numerator"))?;
        let den: f64 = den.parse().map_err(|_| syntax(line, column, "bad denominator"))?;
        if den == 0.0 {
            return Err(value_err(line, column, format!("zero denominator in `{tok}`")));
        }
        num / den
    } else if is_decimal(tok) {
        tok.parse::<f64>()
            .map_err(|e| syntax(line, column, format!("bad number `{tok}`: {e}")))?
    } else {
        return Err(syntax(line, column, format!("unexpected token `{tok}`")));
    };
    if !value.is_finite() {
        return Err(value_err(line, column, format!("non-finite value `{tok}`")));
    }
    if value <= 0.0 {
        return Err(value_err(line, column, format!("comparison must be positive, got `{tok}`")));
    }
    Ok(Entry::Ratio(value))
}

/// Parses the text format. Only shape and token syntax are checked here.
pub fn parse_matrix(text: &str) -> Result<IncompletePcMatrix> {
    let mut rows: Vec<Vec<Entry>> = Vec::new();
    let mut labels: Option<Vec<String>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(list) = comment.trim_start().strip_prefix("labels:") {
                if labels.is_some() {
                    return Err(syntax(line_no, 1, "duplicate labels line"));
                }
                if !rows.is_empty() {
                    return Err(syntax(line_no, 1, "labels line must precede the matrix rows"));
                }
                labels = Some(list.split(',').map(|s| s.trim().to_string()).collect());
            }
            continue;
        }
        let mut row = Vec::new();
        let mut offset = 0;
        for field in raw.split(',') {
            let lead = field.len() - field.trim_start().len();
            let column = raw[..offset + lead].chars().count() + 1;
            row.push(parse_field(field.trim(), line_no, column)?);
            offset += field.len() + 1;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Shape(format!(
                    "line {line_no} has {} fields, previous rows have {}",
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    if let Some(first) = rows.first() {
        if first.len() != rows.len() {
            return Err(Error::Shape(format!(
                "{} rows but {} columns",
                rows.len(),
                first.len()
            )));
        }
    }
    let m = IncompletePcMatrix::from_entries(rows)?;
    match labels {
        Some(l) => m.with_labels(l),
        None => Ok(m),
    }
}

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros trimmed.
/// Every finite `f64` survives a round trip through this text exactly.
pub fn format_g17(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.16e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if negative { "-" } else { "" };
    if (-5..17).contains(&exp) {
        let body = if exp >= 0 {
            let split = (exp as usize) + 1;
            if digits.len() <= split {
                format!("{digits}{}", "0".repeat(split - digits.len()))
            } else {
                format!("{}.{}", &digits[..split], &digits[split..])
            }
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        };
        format!("{sign}{body}")
    } else {
        let (head, tail) = digits.split_at(1);
        let tail = if tail.is_empty() { String::new() } else { format!(".{tail}") };
        format!("{sign}{head}{tail}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

/// Renders the matrix in the text format. Non-default labels are written as
/// a leading `# labels:` comment.
pub fn serialize_matrix(m: &IncompletePcMatrix) -> String {
    let mut out = String::new();
    if !m.has_default_labels() {
        out.push_str("# labels: ");
        out.push_str(&m.labels().join(","));
        out.push('\n');
    }
    for i in 0..m.n() {
        let fields: Vec<String> = m
            .row(i)
            .iter()
            .map(|e| match e {
                Entry::Missing => "?".to_string(),
                Entry::Ratio(v) => format_g17(*v),
            })
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ViolationKind {
    NonPositive,
    DiagonalNotOne,
    NonReciprocal,
    #[serde(rename = "Asymmetric-Missingness")]
    AsymmetricMissingness,
    Disconnected,
    RowAllMissing,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::NonPositive => "NonPositive",
            ViolationKind::DiagonalNotOne => "DiagonalNotOne",
            ViolationKind::NonReciprocal => "NonReciprocal",
            ViolationKind::AsymmetricMissingness => "Asymmetric-Missingness",
            ViolationKind::Disconnected => "Disconnected",
            ViolationKind::RowAllMissing => "RowAllMissing",
        };
        f.write_str(s)
    }
}

/// One failed rule. `i` and `j` are 0-based; for whole-graph problems they
/// point at a representative of the first and second component, and for
/// row problems `j == i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({},{}): {}", self.kind, self.i + 1, self.j + 1, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("OK");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Renders components as `{a1,a4,a3},{a2}` using the matrix labels.
pub fn describe_components(labels: &[String], components: &[Vec<usize>]) -> String {
    components
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&v| labels[v].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Checks every structural rule and reports all violations.
///
/// `tol` bounds `|c_ij · c_ji − 1|`. Pass `f64::INFINITY` to skip the
/// reciprocity-of-values check while keeping everything else.
pub fn validate(m: &IncompletePcMatrix, tol: f64) -> ValidationReport {
    let n = m.n();
    let mut violations = Vec::new();

    for i in 0..n {
        match m.get(i, i) {
            Entry::Ratio(1.0) => {}
            e => violations.push(Violation {
                kind: ViolationKind::DiagonalNotOne,
                i,
                j: i,
                detail: match e {
                    Entry::Missing => "diagonal entry is missing".to_string(),
                    Entry::Ratio(v) => format!("diagonal entry is {v}"),
                },
            }),
        }
    }

    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if let Entry::Ratio(v) = m.get(i, j) {
                if !(v > 0.0 && v.is_finite()) {
                    violations.push(Violation {
                        kind: ViolationKind::NonPositive,
                        i,
                        j,
                        detail: format!("entry is {v}"),
                    });
                }
            }
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            match (m.get(i, j), m.get(j, i)) {
                (Entry::Missing, Entry::Missing) => {}
                (Entry::Ratio(a), Entry::Ratio(b)) => {
                    let valid = |x: f64| x > 0.0 && x.is_finite();
                    if valid(a) && valid(b) && (a * b - 1.0).abs() > tol {
                        violations.push(Violation {
                            kind: ViolationKind::NonReciprocal,
                            i,
                            j,
                            detail: format!("{a} × {b} ≠ 1"),
                        });
                    }
                }
                (Entry::Ratio(a), Entry::Missing) => violations.push(Violation {
                    kind: ViolationKind::AsymmetricMissingness,
                    i,
                    j,
                    detail: format!(
                        "c{}{} = {a} but c{}{} is missing",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ),
                }),
                (Entry::Missing, Entry::Ratio(b)) => violations.push(Violation {
                    kind: ViolationKind::AsymmetricMissingness,
                    i,
                    j,
                    detail: format!(
                        "c{}{} is missing but c{}{} = {b}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ),
                }),
            }
        }
    }

    for i in 0..n {
        if m.missing_in_row(i) == n - 1 {
            violations.push(Violation {
                kind: ViolationKind::RowAllMissing,
                i,
                j: i,
                detail: format!("{} has no comparisons", m.labels()[i]),
            });
        }
    }

    let components = graph::components(&graph::graph_of(m));
    if components.len() > 1 {
        violations.push(Violation {
            kind: ViolationKind::Disconnected,
            i: components[0][0],
            j: components[1][0],
            detail: format!(
                "disconnected comparison graph: components {}",
                describe_components(m.labels(), &components)
            ),
        });
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Structural gate used by the solvers: everything except the reciprocity
/// tolerance, which is a caller policy (see [`validate`]).
pub(crate) fn ensure_rankable(m: &IncompletePcMatrix) -> Result<()> {
    let report = validate(m, f64::INFINITY);
    if report.ok {
        return Ok(());
    }
    let only_connectivity = report.violations.iter().all(|v| {
        matches!(
            v.kind,
            ViolationKind::Disconnected | ViolationKind::RowAllMissing
        )
    });
    if only_connectivity {
        Err(Error::DisconnectedGraph {
            components: graph::components(&graph::graph_of(m)),
        })
    } else {
        Err(Error::InvalidMatrix(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FOUR: &str = "1,?,?,2\n?,1,3,?\n?,1/3,1,2\n1/2,?,1/2,1\n";

    #[test]
    fn parses_four_alternative_example() {
        let m = parse_matrix(FOUR).unwrap();
        assert_eq!(m.n(), 4);
        assert_eq!(m.get(0, 3), Entry::Ratio(2.0));
        assert_eq!(m.get(1, 2), Entry::Ratio(3.0));
        assert_eq!(m.get(2, 3), Entry::Ratio(2.0));
        assert_eq!(m.get(2, 1), Entry::Ratio(1.0 / 3.0));
        assert_eq!(m.get(3, 0), Entry::Ratio(0.5));
        assert!(m.get(0, 1).is_missing());
        assert_eq!(m.labels(), ["a1", "a2", "a3", "a4"]);
        assert!(validate(&m, DEFAULT_RECIPROCITY_TOL).ok);
    }

    #[test]
    fn parses_all_ones() {
        let m = parse_matrix("1,1\n1,1").unwrap();
        assert_eq!(m, IncompletePcMatrix::from_ratios(&[[1.0, 1.0], [1.0, 1.0]]).unwrap());
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(parse_matrix("1,2\n0.5,1,3"), Err(Error::Shape(_))));
        assert!(matches!(parse_matrix("1,2,3\n1,1,1"), Err(Error::Shape(_))));
        assert!(matches!(parse_matrix("1"), Err(Error::Shape(_))));
        assert!(matches!(parse_matrix(""), Err(Error::Shape(_))));
        assert!(matches!(
            parse_matrix("# labels: x,y,z\n1,1\n1,1"),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_matrix("1, 2\n1/2 ,abc") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 6)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_matrix("1,inf\n1,1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_matrix("1,NaN\n1,1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_matrix("1,1.5/2\n1,1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_matrix("1,\n1,1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_matrix("1,1e\n1,1"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn value_errors() {
        assert!(matches!(parse_matrix("1,0\n1,1"), Err(Error::Value { .. })));
        assert!(matches!(parse_matrix("1,-2\n-0.5,1"), Err(Error::Value { .. })));
        assert!(matches!(parse_matrix("1,1e999\n1,1"), Err(Error::Value { .. })));
        assert!(matches!(parse_matrix("1,1/0\n1,1"), Err(Error::Value { .. })));
        assert!(matches!(parse_matrix("1,0/3\n1,1"), Err(Error::Value { .. })));
    }

    #[test]
    fn accepts_scientific_and_whitespace() {
        let m = parse_matrix("# comment\n\n 1 , 2.5E-1 \n4e0,1\n").unwrap();
        assert_eq!(m.get(0, 1), Entry::Ratio(0.25));
        assert_eq!(m.get(1, 0), Entry::Ratio(4.0));
    }

    #[test]
    fn labels_comment() {
        let m = parse_matrix("# labels: x, y\n1,2\n1/2,1").unwrap();
        assert_eq!(m.labels(), ["x", "y"]);
        let text = serialize_matrix(&m);
        assert!(text.starts_with("# labels: x,y\n"));
        assert!(matches!(
            parse_matrix("1,2\n# labels: x,y\n1/2,1"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn serialize_round_trip_and_missing_symmetry() {
        let m = parse_matrix(FOUR).unwrap();
        let text = serialize_matrix(&m);
        assert_eq!(parse_matrix(&text).unwrap(), m);
        let first = text.lines().next().unwrap();
        assert_eq!(first, "1,?,?,2");
        let row2 = text.lines().nth(1).unwrap();
        assert!(row2.starts_with("?,"));

        let ones = IncompletePcMatrix::from_ratios(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert_eq!(serialize_matrix(&ones), "1,1\n1,1\n");
    }

    #[test]
    fn g17_formatting() {
        assert_eq!(format_g17(1.0), "1");
        assert_eq!(format_g17(2.0), "2");
        assert_eq!(format_g17(0.5), "0.5");
        assert_eq!(format_g17(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(format_g17(100.0), "100");
        assert_eq!(format_g17(1e-7), "9.9999999999999995e-08");
        assert_eq!(format_g17(1e20), "1e+20");
        assert_eq!(format_g17(-2.5), "-2.5");
        assert_eq!(format_g17(0.0001), "0.0001");
        for v in [1.0 / 3.0, 0.1, 123456.789, 9.0, 1.0 / 9.0, 1e-300, 7e300] {
            assert_eq!(format_g17(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn detects_non_reciprocal() {
        let m = parse_matrix("1,2\n3,1").unwrap();
        let r = validate(&m, DEFAULT_RECIPROCITY_TOL);
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!((v.kind, v.i, v.j), (ViolationKind::NonReciprocal, 0, 1));
        assert_eq!(v.to_string(), "NonReciprocal (1,2): 2 × 3 ≠ 1");
    }

    #[test]
    fn reciprocity_tolerance() {
        let m = parse_matrix("1,3\n0.333333,1").unwrap();
        assert!(!validate(&m, DEFAULT_RECIPROCITY_TOL).ok);
        assert!(validate(&m, 1e-5).ok);
        let exact = parse_matrix("1,3\n1/3,1").unwrap();
        assert!(validate(&exact, 0.0).ok);
    }

    #[test]
    fn detects_disconnection() {
        let m = parse_matrix("1,2,?,?\n1/2,1,?,?\n?,?,1,3\n?,?,1/3,1").unwrap();
        let r = validate(&m, DEFAULT_RECIPROCITY_TOL);
        assert!(!r.ok);
        assert!(r.has(ViolationKind::Disconnected));
        assert!(!r.has(ViolationKind::RowAllMissing));
        let d = r.violations.iter().find(|v| v.kind == ViolationKind::Disconnected).unwrap();
        assert_eq!(
            d.detail,
            "disconnected comparison graph: components {a1,a2},{a3,a4}"
        );
    }

    #[test]
    fn detects_asymmetric_missing_and_repairs() {
        let m = parse_matrix("1,2,?\n?,1,3\n?,1/3,1").unwrap();
        let r = validate(&m, DEFAULT_RECIPROCITY_TOL);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].kind, ViolationKind::AsymmetricMissingness);
        assert_eq!(r.violations[0].kind.to_string(), "Asymmetric-Missingness");
        let fixed = m.repair_reciprocal();
        assert_eq!(fixed.get(1, 0), Entry::Ratio(0.5));
        assert!(validate(&fixed, DEFAULT_RECIPROCITY_TOL).ok);
    }

    #[test]
    fn detects_row_all_missing_diagonal_and_nonpositive() {
        let m = IncompletePcMatrix::from_options(&[
            [Some(2.0), Some(-1.0), None],
            [Some(-1.0), Some(1.0), None],
            [None, None, None],
        ])
        .unwrap();
        let r = validate(&m, DEFAULT_RECIPROCITY_TOL);
        assert!(r.has(ViolationKind::DiagonalNotOne));
        assert!(r.has(ViolationKind::NonPositive));
        assert!(r.has(ViolationKind::RowAllMissing));
        assert!(r.has(ViolationKind::Disconnected));
        assert!(!r.has(ViolationKind::NonReciprocal));
        assert_eq!(
            r.violations
                .iter()
                .filter(|v| v.kind == ViolationKind::DiagonalNotOne)
                .count(),
            2
        );
    }

    #[test]
    fn rankable_gate_maps_errors() {
        let disc = parse_matrix("1,2,?,?\n1/2,1,?,?\n?,?,1,3\n?,?,1/3,1").unwrap();
        match ensure_rankable(&disc) {
            Err(Error::DisconnectedGraph { components }) => {
                assert_eq!(components, vec![vec![0, 1], vec![2, 3]])
            }
            other => panic!("unexpected {other:?}"),
        }
        let asym = parse_matrix("1,2,?\n?,1,3\n?,1/3,1").unwrap();
        assert!(matches!(ensure_rankable(&asym), Err(Error::InvalidMatrix(_))));
        let sloppy = parse_matrix("1,2\n0.4,1").unwrap();
        assert!(ensure_rankable(&sloppy).is_ok());
    }

    #[test]
    fn counts() {
        let m = parse_matrix(FOUR).unwrap();
        assert_eq!(m.present_pairs(), 3);
        assert_eq!(
            (0..4).map(|i| m.missing_in_row(i)).collect::<Vec<_>>(),
            vec![2, 2, 1, 1]
        );
        assert!(!m.is_complete());
    }
}
