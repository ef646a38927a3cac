//! Line-oriented problem files.
//!
//! A file is a sequence of `key value...` lines; `#` starts a comment and
//! blank lines are ignored. The first directive must be `kind`, followed by
//! `dim`, then the kind-specific payload:
//!
//! ```text
//! kind affine_hyperplane        # or two_hyperplanes | linear_system
//! dim 3
//! point 0 0 0                   # a point of the affine subspace
//! span 1 0 0                    # zero or more spanning directions
//! span 0 1 0
//! normal 1 0 1                  # hyperplane normal c (nonzero)
//! offset 1                      # hyperplane offset γ
//! query 0 0 0                   # point to project (optional for `gap`)
//! ```
//!
//! `two_hyperplanes` files use `normal1/offset1/normal2/offset2` instead;
//! `linear_system` files use one `row` line per matrix row plus a single
//! `rhs` line with one value per row. All floats are decimal numerals and
//! are written back with 17 significant digits, so write/parse round-trips
//! are lossless.

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemKind {
    AffineHyperplane,
    TwoHyperplanes,
    LinearSystem,
}

impl ProblemKind {
    fn name(self) -> &'static str {
        match self {
            ProblemKind::AffineHyperplane => "affine_hyperplane",
            ProblemKind::TwoHyperplanes => "two_hyperplanes",
            ProblemKind::LinearSystem => "linear_system",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AffineHyperplaneProblem {
    pub dim: usize,
    pub point: Vec<f64>,
    pub spanning: Vec<Vec<f64>>,
    pub normal: Vec<f64>,
    pub offset: f64,
    pub query: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoHyperplanesProblem {
    pub dim: usize,
    pub normal1: Vec<f64>,
    pub offset1: f64,
    pub normal2: Vec<f64>,
    pub offset2: f64,
    pub query: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystemProblem {
    pub dim: usize,
    pub rows: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
    pub query: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProblemFile {
    AffineHyperplane(AffineHyperplaneProblem),
    TwoHyperplanes(TwoHyperplanesProblem),
    LinearSystem(LinearSystemProblem),
}

/// 17 significant digits in scientific notation: lossless f64 round-trips.
pub fn format_float(value: f64) -> String {
    format!("{value:.16e}")
}

fn format_row(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| format_float(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse(format!("line {line}: {}", message.into()))
}

fn dim_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Dimension(format!("line {line}: {}", message.into()))
}

struct Directive {
    line: usize,
    key: String,
    values: Vec<String>,
}

fn lex(text: &str) -> Vec<Directive> {
    let mut directives = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(key) = tokens.next() else { continue };
        directives.push(Directive {
            line,
            key: key.to_string(),
            values: tokens.map(str::to_string).collect(),
        });
    }
    directives
}

fn parse_floats(d: &Directive) -> Result<Vec<f64>, CliError> {
    d.values
        .iter()
        .map(|token| {
            let value: f64 = token
                .parse()
                .map_err(|_| parse_error(d.line, format!("`{token}` is not a number")))?;
            if !value.is_finite() {
                return Err(parse_error(
                    d.line,
                    format!("`{token}` is not finite; entries must be finite"),
                ));
            }
            Ok(value)
        })
        .collect()
}

fn parse_vector(d: &Directive, dim: usize) -> Result<Vec<f64>, CliError> {
    let values = parse_floats(d)?;
    if values.len() != dim {
        return Err(dim_error(
            d.line,
            format!(
                "`{}` has {} entries, expected dim = {dim}",
                d.key,
                values.len()
            ),
        ));
    }
    Ok(values)
}

fn parse_scalar(d: &Directive) -> Result<f64, CliError> {
    let values = parse_floats(d)?;
    if values.len() != 1 {
        return Err(parse_error(
            d.line,
            format!("`{}` expects exactly one value", d.key),
        ));
    }
    Ok(values[0])
}

struct FieldSlot<T> {
    value: Option<T>,
}

impl<T> FieldSlot<T> {
    fn new() -> Self {
        Self { value: None }
    }

    fn set(&mut self, d: &Directive, value: T) -> Result<(), CliError> {
        if self.value.is_some() {
            return Err(parse_error(d.line, format!("duplicate `{}` line", d.key)));
        }
        self.value = Some(value);
        Ok(())
    }

    fn require(self, key: &str) -> Result<T, CliError> {
        self.value
            .ok_or_else(|| CliError::Parse(format!("missing required `{key}` line")))
    }
}

impl ProblemFile {
    pub fn kind(&self) -> ProblemKind {
        match self {
            ProblemFile::AffineHyperplane(_) => ProblemKind::AffineHyperplane,
            ProblemFile::TwoHyperplanes(_) => ProblemKind::TwoHyperplanes,
            ProblemFile::LinearSystem(_) => ProblemKind::LinearSystem,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let directives = lex(text);
        let mut iter = directives.iter();

        let kind_directive = iter
            .next()
            .ok_or_else(|| CliError::Parse("empty problem file".to_string()))?;
        if kind_directive.key != "kind" {
            return Err(parse_error(
                kind_directive.line,
                "the first directive must be `kind`",
            ));
        }
        let kind = match kind_directive.values.as_slice() {
            [name] => match name.as_str() {
                "affine_hyperplane" => ProblemKind::AffineHyperplane,
                "two_hyperplanes" => ProblemKind::TwoHyperplanes,
                "linear_system" => ProblemKind::LinearSystem,
                other => {
                    return Err(parse_error(
                        kind_directive.line,
                        format!("unknown kind `{other}`"),
                    ))
                }
            },
            _ => {
                return Err(parse_error(
                    kind_directive.line,
                    "`kind` expects exactly one value",
                ))
            }
        };

        let dim_directive = iter
            .next()
            .ok_or_else(|| CliError::Parse("missing required `dim` line".to_string()))?;
        if dim_directive.key != "dim" {
            return Err(parse_error(
                dim_directive.line,
                "the second directive must be `dim`",
            ));
        }
        let dim: usize = match dim_directive.values.as_slice() {
            [token] => token.parse().map_err(|_| {
                parse_error(dim_directive.line, format!("`{token}` is not a dimension"))
            })?,
            _ => {
                return Err(parse_error(
                    dim_directive.line,
                    "`dim` expects exactly one value",
                ))
            }
        };
        if dim == 0 {
            return Err(parse_error(dim_directive.line, "dim must be at least 1"));
        }

        let rest: Vec<&Directive> = iter.collect();
        match kind {
            ProblemKind::AffineHyperplane => Self::parse_affine_hyperplane(dim, &rest),
            ProblemKind::TwoHyperplanes => Self::parse_two_hyperplanes(dim, &rest),
            ProblemKind::LinearSystem => Self::parse_linear_system(dim, &rest),
        }
    }

    fn parse_affine_hyperplane(dim: usize, rest: &[&Directive]) -> Result<Self, CliError> {
        let mut point = FieldSlot::new();
        let mut spanning = Vec::new();
        let mut normal = FieldSlot::new();
        let mut offset = FieldSlot::new();
        let mut query = FieldSlot::new();
        for d in rest {
            match d.key.as_str() {
                "point" => point.set(d, parse_vector(d, dim)?)?,
                "span" => spanning.push(parse_vector(d, dim)?),
                "normal" => normal.set(d, parse_vector(d, dim)?)?,
                "offset" => offset.set(d, parse_scalar(d)?)?,
                "query" => query.set(d, parse_vector(d, dim)?)?,
                other => {
                    return Err(parse_error(
                        d.line,
                        format!("unknown key `{other}` for kind affine_hyperplane"),
                    ))
                }
            }
        }
        Ok(ProblemFile::AffineHyperplane(AffineHyperplaneProblem {
            dim,
            point: point.require("point")?,
            spanning,
            normal: normal.require("normal")?,
            offset: offset.require("offset")?,
            query: query.value,
        }))
    }

    fn parse_two_hyperplanes(dim: usize, rest: &[&Directive]) -> Result<Self, CliError> {
        let mut normal1 = FieldSlot::new();
        let mut offset1 = FieldSlot::new();
        let mut normal2 = FieldSlot::new();
        let mut offset2 = FieldSlot::new();
        let mut query = FieldSlot::new();
        for d in rest {
            match d.key.as_str() {
                "normal1" => normal1.set(d, parse_vector(d, dim)?)?,
                "offset1" => offset1.set(d, parse_scalar(d)?)?,
                "normal2" => normal2.set(d, parse_vector(d, dim)?)?,
                "offset2" => offset2.set(d, parse_scalar(d)?)?,
                "query" => query.set(d, parse_vector(d, dim)?)?,
                other => {
                    return Err(parse_error(
                        d.line,
                        format!("unknown key `{other}` for kind two_hyperplanes"),
                    ))
                }
            }
        }
        Ok(ProblemFile::TwoHyperplanes(TwoHyperplanesProblem {
            dim,
            normal1: normal1.require("normal1")?,
            offset1: offset1.require("offset1")?,
            normal2: normal2.require("normal2")?,
            offset2: offset2.require("offset2")?,
            query: query.value,
        }))
    }

    fn parse_linear_system(dim: usize, rest: &[&Directive]) -> Result<Self, CliError> {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        let mut rhs: FieldSlot<(usize, Vec<f64>)> = FieldSlot::new();
        let mut query = FieldSlot::new();
        for d in rest {
            match d.key.as_str() {
                "row" => rows.push(parse_vector(d, dim)?),
                "rhs" => rhs.set(d, (d.line, parse_floats(d)?))?,
                "query" => query.set(d, parse_vector(d, dim)?)?,
                other => {
                    return Err(parse_error(
                        d.line,
                        format!("unknown key `{other}` for kind linear_system"),
                    ))
                }
            }
        }
        if rows.is_empty() {
            return Err(CliError::Parse(
                "linear_system files need at least one `row` line".to_string(),
            ));
        }
        let (rhs_line, rhs) = rhs.require("rhs")?;
        if rhs.len() != rows.len() {
            return Err(dim_error(
                rhs_line,
                format!(
                    "`rhs` has {} entries, expected one per row ({})",
                    rhs.len(),
                    rows.len()
                ),
            ));
        }
        Ok(ProblemFile::LinearSystem(LinearSystemProblem {
            dim,
            rows,
            rhs,
            query: query.value,
        }))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            ProblemFile::AffineHyperplane(p) => {
                out.push_str(&format!("kind {}\n", self.kind().name()));
                out.push_str(&format!("dim {}\n", p.dim));
                out.push_str(&format!("point {}\n", format_row(&p.point)));
                for span in &p.spanning {
                    out.push_str(&format!("span {}\n", format_row(span)));
                }
                out.push_str(&format!("normal {}\n", format_row(&p.normal)));
                out.push_str(&format!("offset {}\n", format_float(p.offset)));
                if let Some(query) = &p.query {
                    out.push_str(&format!("query {}\n", format_row(query)));
                }
            }
            ProblemFile::TwoHyperplanes(p) => {
                out.push_str(&format!("kind {}\n", self.kind().name()));
                out.push_str(&format!("dim {}\n", p.dim));
                out.push_str(&format!("normal1 {}\n", format_row(&p.normal1)));
                out.push_str(&format!("offset1 {}\n", format_float(p.offset1)));
                out.push_str(&format!("normal2 {}\n", format_row(&p.normal2)));
                out.push_str(&format!("offset2 {}\n", format_float(p.offset2)));
                if let Some(query) = &p.query {
                    out.push_str(&format!("query {}\n", format_row(query)));
                }
            }
            ProblemFile::LinearSystem(p) => {
                out.push_str(&format!("kind {}\n", self.kind().name()));
                out.push_str(&format!("dim {}\n", p.dim));
                for row in &p.rows {
                    out.push_str(&format!("row {}\n", format_row(row)));
                }
                out.push_str(&format!("rhs {}\n", format_row(&p.rhs)));
                if let Some(query) = &p.query {
                    out.push_str(&format!("query {}\n", format_row(query)));
                }
            }
        }
        out
    }

    /// Bundled sample problems, one per kind.
    pub fn sample(kind: ProblemKind) -> Self {
        match kind {
            // A plane and a tilted hyperplane meeting transversally.
            ProblemKind::AffineHyperplane => {
                ProblemFile::AffineHyperplane(AffineHyperplaneProblem {
                    dim: 3,
                    point: vec![0.0, 0.0, 0.0],
                    spanning: vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]],
                    normal: vec![1.0, 0.0, 1.0],
                    offset: 1.0,
                    query: Some(vec![0.0, 0.0, 0.0]),
                })
            }
            // Two coordinate hyperplanes: projection zeroes two coordinates.
            ProblemKind::TwoHyperplanes => ProblemFile::TwoHyperplanes(TwoHyperplanesProblem {
                dim: 3,
                normal1: vec![1.0, 0.0, 0.0],
                offset1: 0.0,
                normal2: vec![0.0, 1.0, 0.0],
                offset2: 0.0,
                query: Some(vec![3.0, 4.0, 5.0]),
            }),
            // Contradictory rows: infeasibility is an answer, not a failure.
            ProblemKind::LinearSystem => ProblemFile::LinearSystem(LinearSystemProblem {
                dim: 2,
                rows: vec![vec![1.0, 0.0], vec![1.0, 0.0]],
                rhs: vec![0.0, 1.0],
                query: Some(vec![3.0, 4.0]),
            }),
        }
    }
}
