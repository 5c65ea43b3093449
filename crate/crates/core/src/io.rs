//! Plain-text formats for ideals and grading matrices.
//!
//! An ideal file declares its variables, then lists one generator per line:
//!
//! ```text
//! # the ideal (x^2 y, x^2 - x y)
//! vars: x y
//! x^2 y
//! x^2 - x y
//! ```
//!
//! A monomial is a whitespace-separated product of `name` or `name^k`
//! tokens, or `1`. A binomial is two monomials separated by a lone `-`.
//! `#` starts a comment. A matrix file starts with `d n` followed by `d`
//! rows of `n` integers.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, MonomialIdeal};
use crate::grading::GradingMap;
use crate::saturated::{BinomialIdeal, PureBinomial};

/// An ideal file, classified by whether it contains binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedIdeal {
    Monomial(MonomialIdeal),
    Binomial(BinomialIdeal),
}

impl ParsedIdeal {
    pub fn names(&self) -> &[String] {
        match self {
            ParsedIdeal::Monomial(i) => i.names(),
            ParsedIdeal::Binomial(i) => i.names(),
        }
    }

    /// The ideal as a binomial ideal, whatever its kind.
    pub fn into_binomial(self) -> BinomialIdeal {
        match self {
            ParsedIdeal::Monomial(i) => BinomialIdeal::from_monomial_ideal(&i),
            ParsedIdeal::Binomial(i) => i,
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Lines with comments stripped, numbered from 1, blank ones skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_monomial(tokens: &[&str], index: &HashMap<&str, usize>, n: usize, line: usize) -> Result<ExponentVector> {
    if tokens.is_empty() {
        return Err(parse_error(line, "empty generator"));
    }
    let mut e = vec![0u32; n];
    for &tok in tokens {
        if tok == "1" {
            continue;
        }
        let (name, power) = match tok.split_once('^') {
            Some((name, p)) => {
                if p.starts_with('-') {
                    return Err(parse_error(line, format!("negative exponent in `{tok}`")));
                }
                let k: u32 = p.parse().map_err(|_| parse_error(line, format!("bad exponent in `{tok}`")))?;
                (name, k)
            }
            None => (tok, 1),
        };
        let &i = index.get(name).ok_or_else(|| parse_error(line, format!("unknown variable `{name}`")))?;
        e[i] = e[i].checked_add(power).ok_or_else(|| parse_error(line, format!("exponent overflow in `{tok}`")))?;
    }
    Ok(ExponentVector::new(e))
}

/// Parses an ideal file; the kind is inferred from the presence of binomials.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing `vars:` line"))?;
    let rest = header
        .strip_prefix("vars:")
        .ok_or_else(|| parse_error(header_line, "the first line must be `vars: <names>`"))?;
    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err(parse_error(header_line, "no variables declared"));
    }
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if !valid_name(name) {
            return Err(parse_error(header_line, format!("invalid variable name `{name}`")));
        }
        if index.insert(name.as_str(), i).is_some() {
            return Err(parse_error(header_line, format!("variable `{name}` declared twice")));
        }
    }
    let n = names.len();
    let mut monomials = Vec::new();
    let mut binomials = Vec::new();
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let minus: Vec<usize> = tokens.iter().enumerate().filter(|(_, t)| **t == "-").map(|(i, _)| i).collect();
        match minus.as_slice() {
            [] => monomials.push(parse_monomial(&tokens, &index, n, line_no)?),
            [k] => {
                let a = parse_monomial(&tokens[..*k], &index, n, line_no)?;
                let b = parse_monomial(&tokens[k + 1..], &index, n, line_no)?;
                if a == b {
                    // x^a - x^a is zero and contributes nothing
                    continue;
                }
                binomials.push(PureBinomial::new(a, b).map_err(|e| parse_error(line_no, e.to_string()))?);
            }
            _ => return Err(parse_error(line_no, "a generator has at most one `-`")),
        }
    }
    if binomials.is_empty() {
        Ok(ParsedIdeal::Monomial(MonomialIdeal::new(names, monomials)?))
    } else {
        Ok(ParsedIdeal::Binomial(BinomialIdeal::new(names, monomials, binomials)?))
    }
}

/// Parses an ideal file that must not contain binomials.
pub fn parse_monomial_ideal(text: &str) -> Result<MonomialIdeal> {
    match parse_ideal(text)? {
        ParsedIdeal::Monomial(i) => Ok(i),
        ParsedIdeal::Binomial(_) => Err(Error::invalid("expected a monomial ideal, found binomial generators")),
    }
}

fn header(names: &[String]) -> String {
    format!("vars: {}\n", names.join(" "))
}

pub fn print_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = header(ideal.names());
    for g in ideal.generators() {
        let _ = writeln!(out, "{}", g.display_with(ideal.names()));
    }
    out
}

pub fn print_binomial_ideal(ideal: &BinomialIdeal) -> String {
    let mut out = header(ideal.names());
    for g in ideal.monomials() {
        let _ = writeln!(out, "{}", g.display_with(ideal.names()));
    }
    for b in ideal.binomials() {
        let _ = writeln!(out, "{} - {}", b.a().display_with(ideal.names()), b.b().display_with(ideal.names()));
    }
    out
}

/// Parses `d n` followed by `d` rows of `n` integers.
pub fn parse_matrix(text: &str) -> Result<GradingMap> {
    let mut lines = content_lines(text);
    let (line_no, dims) = lines.next().ok_or_else(|| parse_error(1, "missing `d n` line"))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_error(line_no, format!("bad dimension `{t}`"))))
        .collect::<Result<_>>()?;
    let [d, n] = dims[..] else {
        return Err(parse_error(line_no, "the first line must be `d n`"));
    };
    if d == 0 || n == 0 {
        return Err(parse_error(line_no, "dimensions must be positive"));
    }
    let mut rows = Vec::with_capacity(d);
    let mut last = line_no;
    for (line_no, line) in lines {
        last = line_no;
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_error(line_no, format!("bad integer `{t}`"))))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(parse_error(line_no, format!("expected {n} entries, found {}", row.len())));
        }
        if rows.len() == d {
            return Err(parse_error(line_no, format!("more than {d} rows")));
        }
        rows.push(row);
    }
    if rows.len() != d {
        return Err(parse_error(last, format!("expected {d} rows, found {}", rows.len())));
    }
    GradingMap::from_rows(&rows)
}

pub fn print_matrix(map: &GradingMap) -> String {
    let mut out = format!("{} {}\n", map.d(), map.n());
    for row in map.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Parses a comma-separated list of integers, as used by command-line flags.
pub fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::invalid(format!("bad list entry `{}`", t.trim()))))
        .collect()
}
