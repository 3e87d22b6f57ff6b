//! The on-disk instance format.
//!
//! Line-oriented, `#` starts a comment, tokens are whitespace-separated:
//!
//! ```text
//! elements: x0 x1 x2 x3
//! table:
//! x0 x1 x2 x3
//! x1 x2 x3 x0
//! x2 x3 x0 x1
//! x3 x0 x1 x2
//! z0: x1
//! morphism: tau x0 x3 x2 x1      # images in element order; optional
//! mu: 1 1 1 1                    # cyclo literals; optional, defaults to 1
//! f: 0 1 0 -1                    # value table for `verify`; optional
//! equation: vanvleck             # or dalembert; optional, defaults here
//! ```
//!
//! `elements` must precede `table`. Parse errors carry 1-based line and
//! column positions.

use std::fmt;

use veqlab_core::cyclo::parse_cyclo;
use veqlab_core::morphism::MorphismKind;
use veqlab_core::Cyclo;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        msg: msg.into(),
    }
}

/// Which equation family the file asks for; the morphism tag picks the τ or σ
/// shape within it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EquationTag {
    #[default]
    VanVleck,
    DAlembert,
}

impl fmt::Display for EquationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquationTag::VanVleck => write!(f, "vanvleck"),
            EquationTag::DAlembert => write!(f, "dalembert"),
        }
    }
}

/// Parsed form of an instance file, with element names resolved to indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub label: String,
    pub element_names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub z0: usize,
    pub morphism: Option<(MorphismKind, Vec<usize>)>,
    pub mu: Option<Vec<Cyclo>>,
    pub f: Option<Vec<Cyclo>>,
    pub equation_tag: EquationTag,
}

impl InstanceFile {
    pub fn name(&self, idx: usize) -> &str {
        &self.element_names[idx]
    }

    /// Canonical text form; parsing it back gives an equal `InstanceFile`.
    /// Exercised by the round-trip tests.
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("elements:");
        for name in &self.element_names {
            out.push(' ');
            out.push_str(name);
        }
        out.push_str("\ntable:\n");
        for row in &self.table {
            let names: Vec<&str> = row.iter().map(|&i| self.name(i)).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out.push_str(&format!("z0: {}\n", self.name(self.z0)));
        if let Some((kind, map)) = &self.morphism {
            let tag = match kind {
                MorphismKind::AntiInvolution => "tau",
                MorphismKind::InvolutiveAutomorphism => "sigma",
            };
            let names: Vec<&str> = map.iter().map(|&i| self.name(i)).collect();
            out.push_str(&format!("morphism: {tag} {}\n", names.join(" ")));
        }
        if let Some(mu) = &self.mu {
            let lits: Vec<String> = mu.iter().map(Cyclo::to_string).collect();
            out.push_str(&format!("mu: {}\n", lits.join(" ")));
        }
        if let Some(f) = &self.f {
            let lits: Vec<String> = f.iter().map(Cyclo::to_string).collect();
            out.push_str(&format!("f: {}\n", lits.join(" ")));
        }
        out.push_str(&format!("equation: {}\n", self.equation_tag));
        out
    }
}

/// A token with its 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut col = 1;
    for piece in line.split_inclusive(char::is_whitespace) {
        let token = piece.trim_end_matches(char::is_whitespace);
        if !token.is_empty() {
            out.push((col, token));
        }
        col += piece.chars().count();
    }
    out
}

pub fn parse_instance(label: &str, text: &str) -> Result<InstanceFile, ParseError> {
    let mut element_names: Option<(usize, Vec<String>)> = None;
    let mut table: Option<Vec<Vec<usize>>> = None;
    let mut z0: Option<usize> = None;
    let mut morphism: Option<(MorphismKind, Vec<usize>)> = None;
    let mut mu: Option<Vec<Cyclo>> = None;
    let mut f_table: Option<Vec<Cyclo>> = None;
    let mut equation_tag: Option<EquationTag> = None;

    let lines: Vec<&str> = text.lines().collect();
    let mut lineno = 0usize;

    let lookup = |names: &[String], lineno: usize, col: usize, tok: &str| {
        names
            .iter()
            .position(|n| n == tok)
            .ok_or_else(|| err(lineno, col, format!("unknown element name '{tok}'")))
    };

    while lineno < lines.len() {
        let line = lines[lineno];
        lineno += 1;
        let toks = tokens(line);
        let Some(&(kcol, key)) = toks.first() else {
            continue;
        };
        let rest = &toks[1..];
        match key {
            "elements:" => {
                if element_names.is_some() {
                    return Err(err(lineno, kcol, "duplicate 'elements:' section"));
                }
                if rest.is_empty() {
                    return Err(err(lineno, kcol, "'elements:' needs at least one name"));
                }
                let mut names = Vec::new();
                for &(col, tok) in rest {
                    if names.iter().any(|n: &String| n == tok) {
                        return Err(err(lineno, col, format!("duplicate element name '{tok}'")));
                    }
                    names.push(tok.to_string());
                }
                element_names = Some((lineno, names));
            }
            "table:" => {
                if table.is_some() {
                    return Err(err(lineno, kcol, "duplicate 'table:' section"));
                }
                let Some((_, names)) = &element_names else {
                    return Err(err(lineno, kcol, "'table:' must come after 'elements:'"));
                };
                if let Some(&(col, _)) = rest.first() {
                    return Err(err(lineno, col, "table rows start on the following lines"));
                }
                let n = names.len();
                let mut rows = Vec::with_capacity(n);
                while rows.len() < n {
                    let Some(line) = lines.get(lineno) else {
                        return Err(err(
                            lineno,
                            1,
                            format!("table ended after {} of {n} rows", rows.len()),
                        ));
                    };
                    lineno += 1;
                    let toks = tokens(line);
                    if toks.is_empty() {
                        continue;
                    }
                    if toks.len() != n {
                        return Err(err(
                            lineno,
                            toks[0].0,
                            format!("table row has {} entries, expected {n}", toks.len()),
                        ));
                    }
                    let mut row = Vec::with_capacity(n);
                    for &(col, tok) in &toks {
                        row.push(lookup(names, lineno, col, tok)?);
                    }
                    rows.push(row);
                }
                table = Some(rows);
            }
            "z0:" => {
                if z0.is_some() {
                    return Err(err(lineno, kcol, "duplicate 'z0:' section"));
                }
                let Some((_, names)) = &element_names else {
                    return Err(err(lineno, kcol, "'z0:' must come after 'elements:'"));
                };
                let [(col, tok)] = rest else {
                    return Err(err(lineno, kcol, "'z0:' takes exactly one element name"));
                };
                z0 = Some(lookup(names, lineno, *col, tok)?);
            }
            "morphism:" => {
                if morphism.is_some() {
                    return Err(err(lineno, kcol, "duplicate 'morphism:' section"));
                }
                let Some((_, names)) = &element_names else {
                    return Err(err(lineno, kcol, "'morphism:' must come after 'elements:'"));
                };
                let Some(&(tcol, tag)) = rest.first() else {
                    return Err(err(lineno, kcol, "'morphism:' needs 'tau' or 'sigma' and images"));
                };
                let kind = match tag {
                    "tau" => MorphismKind::AntiInvolution,
                    "sigma" => MorphismKind::InvolutiveAutomorphism,
                    other => {
                        return Err(err(
                            lineno,
                            tcol,
                            format!("morphism kind must be 'tau' or 'sigma', got '{other}'"),
                        ))
                    }
                };
                let images = &rest[1..];
                if images.len() != names.len() {
                    return Err(err(
                        lineno,
                        tcol,
                        format!(
                            "morphism lists {} images, expected {}",
                            images.len(),
                            names.len()
                        ),
                    ));
                }
                let mut map = Vec::with_capacity(names.len());
                for &(col, tok) in images {
                    map.push(lookup(names, lineno, col, tok)?);
                }
                morphism = Some((kind, map));
            }
            "mu:" | "f:" => {
                let slot = if key == "mu:" { &mut mu } else { &mut f_table };
                if slot.is_some() {
                    return Err(err(lineno, kcol, format!("duplicate '{key}' section")));
                }
                let Some((_, names)) = &element_names else {
                    return Err(err(lineno, kcol, format!("'{key}' must come after 'elements:'")));
                };
                if rest.len() != names.len() {
                    return Err(err(
                        lineno,
                        kcol,
                        format!("'{key}' lists {} values, expected {}", rest.len(), names.len()),
                    ));
                }
                let mut values = Vec::with_capacity(names.len());
                for &(col, tok) in rest {
                    match parse_cyclo(tok) {
                        Ok(v) => values.push(v),
                        Err(e) => {
                            return Err(err(
                                lineno,
                                col + e.offset,
                                format!("bad value literal: {e}"),
                            ))
                        }
                    }
                }
                *slot = Some(values);
            }
            "equation:" => {
                if equation_tag.is_some() {
                    return Err(err(lineno, kcol, "duplicate 'equation:' section"));
                }
                let [(col, tok)] = rest else {
                    return Err(err(lineno, kcol, "'equation:' takes exactly one tag"));
                };
                equation_tag = Some(match *tok {
                    "vanvleck" => EquationTag::VanVleck,
                    "dalembert" => EquationTag::DAlembert,
                    other => {
                        return Err(err(
                            lineno,
                            *col,
                            format!("equation must be 'vanvleck' or 'dalembert', got '{other}'"),
                        ))
                    }
                });
            }
            other => {
                return Err(err(
                    lineno,
                    kcol,
                    format!(
                        "unknown section '{other}' (expected one of elements:, table:, z0:, \
                         morphism:, mu:, f:, equation:)"
                    ),
                ));
            }
        }
    }

    let (_, element_names) =
        element_names.ok_or_else(|| err(lines.len().max(1), 1, "missing 'elements:' section"))?;
    let table = table.ok_or_else(|| err(lines.len().max(1), 1, "missing 'table:' section"))?;
    let z0 = z0.ok_or_else(|| err(lines.len().max(1), 1, "missing 'z0:' section"))?;
    Ok(InstanceFile {
        label: label.to_string(),
        element_names,
        table,
        z0,
        morphism,
        mu,
        f: f_table,
        equation_tag: equation_tag.unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4: &str = "\
# the cyclic group of order 4 under addition
elements: x0 x1 x2 x3
table:
x0 x1 x2 x3
x1 x2 x3 x0
x2 x3 x0 x1
x3 x0 x1 x2
z0: x1
morphism: tau x0 x3 x2 x1
mu: 1 1 1 1
equation: vanvleck
";

    #[test]
    fn parses_the_z4_file() {
        let f = parse_instance("z4", Z4).unwrap();
        assert_eq!(f.element_names, vec!["x0", "x1", "x2", "x3"]);
        assert_eq!(f.z0, 1);
        assert_eq!(
            f.morphism,
            Some((MorphismKind::AntiInvolution, vec![0, 3, 2, 1]))
        );
        assert_eq!(f.mu.as_ref().unwrap().len(), 4);
        assert_eq!(f.equation_tag, EquationTag::VanVleck);
        assert_eq!(f.table[1][3], 0);
    }

    #[test]
    fn round_trips_through_to_text() {
        let f = parse_instance("z4", Z4).unwrap();
        let printed = f.to_text();
        let again = parse_instance("z4", &printed).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn ragged_table_is_reported_at_its_line() {
        let text = "\
elements: a b
table:
a b
b
z0: a
";
        let e = parse_instance("bad", text).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.msg.contains("expected 2"), "{e}");
    }

    #[test]
    fn unknown_element_name_is_located() {
        let text = "\
elements: a b
table:
a b
b q
z0: a
";
        let e = parse_instance("bad", text).unwrap_err();
        assert_eq!((e.line, e.col), (4, 3));
        assert!(e.msg.contains("'q'"), "{e}");
    }

    #[test]
    fn mu_literals_use_the_cyclo_grammar() {
        let text = "\
elements: x0 x1 x2 x3
table:
x0 x1 x2 x3
x1 x2 x3 x0
x2 x3 x0 x1
x3 x0 x1 x2
z0: x1
mu: 1 w(4,1) -1 w(4,3)
";
        let f = parse_instance("z4i", text).unwrap();
        let mu = f.mu.unwrap();
        assert_eq!(mu[1], Cyclo::root_of_unity(4, 1));
        assert_eq!(mu[2], Cyclo::from_integer(-1));
        // default equation applies
        assert_eq!(f.equation_tag, EquationTag::VanVleck);
    }

    #[test]
    fn bad_literal_position_points_inside_the_token() {
        let text = "\
elements: a b
table:
a b
b a
z0: b
mu: 1 w(0,1)
";
        let e = parse_instance("bad", text).unwrap_err();
        assert_eq!(e.line, 6);
        // token starts at col 7, the bad order digit sits two bytes in
        assert_eq!(e.col, 9);
    }

    #[test]
    fn missing_required_sections_are_reported() {
        let e = parse_instance("empty", "# nothing\n").unwrap_err();
        assert!(e.msg.contains("elements"), "{e}");
        let e = parse_instance("no-z0", "elements: a\ntable:\na\n").unwrap_err();
        assert!(e.msg.contains("z0"), "{e}");
    }

    #[test]
    fn table_must_follow_elements() {
        let e = parse_instance("bad", "table:\n").unwrap_err();
        assert!(e.msg.contains("after 'elements:'"), "{e}");
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\
elements: a b   # two elements

table:
a b   # first row
b a
# interlude
z0: b
";
        let f = parse_instance("ok", text).unwrap();
        assert_eq!(f.z0, 1);
        assert_eq!(f.morphism, None);
    }
}
