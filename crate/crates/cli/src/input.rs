//! File formats: point sets (one point per line, whitespace-separated
//! rational coordinates) and ideals (one polynomial per line). `#` starts a
//! comment in both; blank lines are skipped.

use std::path::Path;

use sdist::parse::{max_variable_index, parse_polynomial};
use sdist::points::PointSet;
use sdist::polynomial::Polynomial;
use sdist::rational::{parse_rational, Rational};

use crate::CliError;

fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.split_once('#') {
            Some((before, _)) => before,
            None => line,
        }
        .trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub fn load_points(path: &Path) -> Result<PointSet, CliError> {
    let text = read_to_string(path)?;
    let mut points: Vec<Vec<Rational>> = Vec::new();
    for (line_no, line) in content_lines(&text) {
        let mut point = Vec::new();
        for field in line.split_whitespace() {
            let value = parse_rational(field).map_err(|e| {
                CliError::input(format!("{}:{line_no}: {e}", path.display()))
            })?;
            point.push(value);
        }
        points.push(point);
    }
    PointSet::new(points)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Loads an ideal file. The ambient arity is the highest variable index seen
/// across all lines unless overridden.
pub fn load_ideal(
    path: &Path,
    arity_override: Option<usize>,
) -> Result<(usize, Vec<Polynomial>), CliError> {
    let text = read_to_string(path)?;
    let lines: Vec<(usize, &str)> = content_lines(&text).collect();
    if lines.is_empty() {
        return Err(CliError::input(format!(
            "{}: no polynomials found",
            path.display()
        )));
    }
    let arity = match arity_override {
        Some(n) => n,
        None => {
            let mut max = 0usize;
            for (line_no, line) in &lines {
                let seen = max_variable_index(line).map_err(|e| {
                    CliError::input(format!("{}:{line_no}: {e}", path.display()))
                })?;
                max = max.max(seen.unwrap_or(0));
            }
            max.max(1)
        }
    };
    let mut generators = Vec::new();
    for (line_no, line) in lines {
        let poly = parse_polynomial(line, arity).map_err(|e| {
            CliError::input(format!("{}:{line_no}: {e}", path.display()))
        })?;
        generators.push(poly);
    }
    Ok((arity, generators))
}
