//! File formats: the Cayley table text format and the permutation
//! generator format.
//!
//! Cayley files are plain text with a fixed shape; writing then parsing
//! reproduces the group bit-exactly:
//!
//! ```text
//! # optional comment lines
//! name = S3
//! order = 6
//! mul:
//! 0 1 2 3 4 5
//! ...
//! ```
//!
//! Permutation files declare the points on the first line and then one
//! permutation per line in disjoint-cycle notation with 1-based points:
//!
//! ```text
//! N=3
//! (1 2)
//! (1 2 3)
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Group, GroupTable, TABLE_CAP};

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

/// Parses the Cayley text format and validates the table.
pub fn parse_cayley_file(path: impl AsRef<Path>) -> Result<Group> {
    let text = std::fs::read_to_string(path)?;
    parse_cayley_str(&text)
}

pub fn parse_cayley_str(text: &str) -> Result<Group> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (ln, line) = lines.next().ok_or_else(|| parse_err(1, 1, "empty file"))?;
    let name = line
        .strip_prefix("name = ")
        .ok_or_else(|| parse_err(ln, 1, "expected `name = <label>`"))?
        .to_string();

    let (ln, line) = lines
        .next()
        .ok_or_else(|| parse_err(ln, 1, "missing `order = <n>`"))?;
    let order: usize = line
        .strip_prefix("order = ")
        .ok_or_else(|| parse_err(ln, 1, "expected `order = <n>`"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(ln, 9, "order is not a number"))?;
    if order == 0 || order > TABLE_CAP {
        return Err(parse_err(ln, 9, format!("order must be in [1, {TABLE_CAP}]")));
    }

    let (ln, line) = lines.next().ok_or_else(|| parse_err(ln, 1, "missing `mul:`"))?;
    if line.trim() != "mul:" {
        return Err(parse_err(ln, 1, "expected `mul:`"));
    }

    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(order);
    for _ in 0..order {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(ln + 1, 1, format!("expected {order} table rows")))?;
        let mut row = Vec::with_capacity(order);
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                parse_err(ln, line.find(tok).map_or(1, |c| c + 1), "not a number")
            })?;
            row.push(v);
        }
        if row.len() != order {
            return Err(parse_err(
                ln,
                1,
                format!("row has {} entries, expected {order}", row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, 1, "trailing content after the table"));
    }
    GroupTable::from_table(&rows, &name)
}

/// Renders a group in the Cayley text format. `parse_cayley_str` of the
/// output reproduces the group exactly, and rendering is byte-stable.
pub fn write_cayley_str(g: &Group) -> String {
    let mut out = String::new();
    out.push_str(&format!("name = {}\n", g.name()));
    out.push_str(&format!("order = {}\n", g.order()));
    out.push_str("mul:\n");
    for a in g.elements() {
        let row: Vec<String> = g.elements().map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_cayley_file(g: &Group, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_cayley_str(g))?;
    Ok(())
}

/// Parses the permutation generator format and returns the Cayley table
/// of the generated permutation group, elements ordered lexicographically
/// by their point maps.
pub fn parse_permutation_file(path: impl AsRef<Path>) -> Result<Group> {
    let p = path.as_ref();
    let text = std::fs::read_to_string(p)?;
    let name = p
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "perm-group".to_string());
    parse_permutation_str(&text, &name)
}

pub fn parse_permutation_str(text: &str, name: &str) -> Result<Group> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty file"))?;
    let n: usize = header
        .strip_prefix("N=")
        .ok_or_else(|| parse_err(ln, 1, "expected header `N=<points>`"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(ln, 3, "point count is not a number"))?;

    let mut gens: Vec<Vec<usize>> = Vec::new();
    for (ln, line) in lines {
        gens.push(parse_cycles(line, n, ln)?);
    }

    // close under right-multiplication by generators: every word in the
    // generators is reached, and a finite composition-closed set of
    // permutations is a group
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    seen.insert(identity.clone());
    let mut elems: Vec<Vec<usize>> = vec![identity];
    let mut i = 0;
    while i < elems.len() {
        for p in &gens {
            let composed: Vec<usize> = (0..n).map(|x| elems[i][p[x]]).collect();
            if seen.insert(composed.clone()) {
                if elems.len() >= TABLE_CAP {
                    return Err(Error::CapExceeded {
                        what: "generated permutation group",
                        size: elems.len() + 1,
                        cap: TABLE_CAP,
                    });
                }
                elems.push(composed);
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    let order = elems.len();
    let idx = |p: &[usize]| elems.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let mut mul = vec![0u16; order * order];
    for (a, pa) in elems.iter().enumerate() {
        for (b, pb) in elems.iter().enumerate() {
            let composed: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
            mul[a * order + b] = idx(&composed) as u16;
        }
    }
    GroupTable::from_flat(mul, order, name)
}

/// One line of disjoint cycles, e.g. `(1 2 3)(4 5)`; `()` is the identity.
fn parse_cycles(line: &str, n: usize, ln: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut touched = vec![false; n];
    let bytes = line.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        match bytes[pos] {
            b' ' | b'\t' => pos += 1,
            b'(' => {
                let close = line[pos..]
                    .find(')')
                    .map(|c| pos + c)
                    .ok_or_else(|| parse_err(ln, pos + 1, "unclosed cycle"))?;
                let inner = &line[pos + 1..close];
                let mut points = Vec::new();
                for tok in inner.split_whitespace() {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(ln, pos + 2, "cycle point is not a number"))?;
                    if v == 0 || v > n {
                        return Err(parse_err(
                            ln,
                            pos + 2,
                            format!("point {v} outside 1..={n}"),
                        ));
                    }
                    if std::mem::replace(&mut touched[v - 1], true) {
                        return Err(parse_err(
                            ln,
                            pos + 2,
                            format!("point {v} repeated; cycles must be disjoint"),
                        ));
                    }
                    points.push(v - 1);
                }
                for (k, &p) in points.iter().enumerate() {
                    perm[p] = points[(k + 1) % points.len()];
                }
                pos = close + 1;
            }
            other => {
                return Err(parse_err(
                    ln,
                    pos + 1,
                    format!("unexpected character {:?}", other as char),
                ));
            }
        }
    }
    Ok(perm)
}
