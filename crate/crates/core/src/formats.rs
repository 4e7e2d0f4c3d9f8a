//! Plain-text file formats for graphs, codes, stabilizer matrices and orbit
//! databases. Blank lines and lines starting with `#` are ignored except for
//! the `#@` metadata lines of databases. Errors carry 1-based line and
//! column numbers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::circulant::parse_row;
use crate::classify::{OrbitDatabase, OrbitRep};
use crate::code::{graph_code, AdditiveCode, StabilizerMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::WeightedGraph;
use crate::weights::WeightEnumerator;

/// Significant lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (idx, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, idx)),
            (true, Some((col0, idx0))) => {
                out.push((col0, &line[idx0..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col0, idx0)) = start {
        out.push((col0, &line[idx0..]));
    }
    out
}

fn number<T: std::str::FromStr>(line: usize, col: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, col, format!("expected {what}, found {tok:?}")))
}

fn alphabet(line: usize, col: usize, tok: &str) -> Result<u8> {
    let m: u8 = number(line, col, tok, "alphabet size")?;
    Field::standard(m).map_err(|e| Error::parse(line, col, e.to_string()))?;
    Ok(m)
}

fn end_of_input(text: &str) -> usize {
    text.lines().count() + 1
}

/// Symbols of a digit row, ignoring whitespace and `|`.
fn digit_row(line: usize, text: &str, radix: u32, bound: u8) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for (col, c) in text.chars().enumerate() {
        if c.is_whitespace() || c == '|' {
            continue;
        }
        let v = c.to_digit(radix).filter(|&v| v < bound as u32);
        match v {
            Some(v) => out.push(v as u8),
            None => return Err(Error::parse(line, col + 1, format!("symbol {c:?} is not in 0..{bound}"))),
        }
    }
    Ok(out)
}

/// Any input accepted where a code is expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Graph(WeightedGraph),
    Circulant { m: u8, row: Vec<u8> },
    Code(AdditiveCode),
    Stabilizer(StabilizerMatrix),
}

impl CodeFile {
    pub fn to_code(&self) -> Result<AdditiveCode> {
        Ok(match self {
            CodeFile::Graph(g) => graph_code(g),
            CodeFile::Circulant { m, row } => graph_code(&WeightedGraph::circulant(*m, row)?),
            CodeFile::Code(c) => c.clone(),
            CodeFile::Stabilizer(s) => s.to_code(),
        })
    }

    /// The graph for graph-shaped inputs, else the graph form of the code.
    pub fn to_graph(&self) -> Result<WeightedGraph> {
        match self {
            CodeFile::Graph(g) => Ok(g.clone()),
            CodeFile::Circulant { m, row } => WeightedGraph::circulant(*m, row),
            CodeFile::Code(c) => c.graph_form(),
            CodeFile::Stabilizer(s) => Ok(crate::standard_form::standard_form(s)?.graph),
        }
    }

    pub fn write(&self) -> String {
        match self {
            CodeFile::Graph(g) => write_graph(g),
            CodeFile::Circulant { m, row } => write_circulant(*m, row),
            CodeFile::Code(c) => write_code(c),
            CodeFile::Stabilizer(s) => write_stabilizer(s),
        }
    }
}

/// Dispatches on the header: `circ`, `code`, `stab`, or a bare (or
/// `graph`-tagged) graph header.
pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let Some((ln, first)) = lines(text).next() else {
        return Err(Error::parse(end_of_input(text), 1, "empty input"));
    };
    match tokens(first).first().map(|t| t.1) {
        Some("circ") => {
            let (m, row) = parse_circulant(text)?;
            Ok(CodeFile::Circulant { m, row })
        }
        Some("code") => Ok(CodeFile::Code(parse_code(text)?)),
        Some("stab") => Ok(CodeFile::Stabilizer(parse_stabilizer(text)?)),
        Some(_) => Ok(CodeFile::Graph(parse_graph(text)?)),
        None => Err(Error::parse(ln, 1, "empty header")),
    }
}

/// `circ m <row>` where the row may use `α`/`α²` symbols for `m = 4`.
pub fn parse_circulant(text: &str) -> Result<(u8, Vec<u8>)> {
    let mut it = lines(text);
    let Some((ln, first)) = it.next() else {
        return Err(Error::parse(end_of_input(text), 1, "empty input"));
    };
    let toks = tokens(first);
    if toks.len() != 3 || toks[0].1 != "circ" {
        return Err(Error::parse(ln, 1, "expected `circ m <row>`"));
    }
    let m = alphabet(ln, toks[1].0, toks[1].1)?;
    let row = parse_row(m, toks[2].1).map_err(|e| Error::parse(ln, toks[2].0, e.to_string()))?;
    WeightedGraph::circulant(m, &row).map_err(|e| Error::parse(ln, toks[2].0, e.to_string()))?;
    if let Some((extra, _)) = it.next() {
        return Err(Error::parse(extra, 1, "unexpected content after circulant row"));
    }
    Ok((m, row))
}

pub fn write_circulant(m: u8, row: &[u8]) -> String {
    let digits: String = row.iter().map(|&w| char::from(b'0' + w)).collect();
    format!("circ {m} {digits}\n")
}

/// Header `m n` (optionally `graph m n`), then `n` rows of `n` hexadecimal
/// weight symbols. Also accepts the `circ` shorthand.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut it = lines(text);
    let Some((ln, first)) = it.next() else {
        return Err(Error::parse(end_of_input(text), 1, "empty input"));
    };
    let mut toks = tokens(first);
    match toks.first().map(|t| t.1) {
        Some("circ") => {
            let (m, row) = parse_circulant(text)?;
            return WeightedGraph::circulant(m, &row);
        }
        Some("graph") => {
            toks.remove(0);
        }
        _ => {}
    }
    if toks.len() != 2 {
        return Err(Error::parse(ln, 1, "expected header `m n`"));
    }
    let m = alphabet(ln, toks[0].0, toks[0].1)?;
    let n: usize = number(ln, toks[1].0, toks[1].1, "length")?;
    let mut rows = Vec::with_capacity(n);
    let mut positions = Vec::with_capacity(n);
    for i in 0..n {
        let Some((rl, text_row)) = it.next() else {
            return Err(Error::parse(end_of_input(text), 1, format!("expected {n} rows, found {i}")));
        };
        let row = digit_row(rl, text_row, 16, m)?;
        if row.len() != n {
            return Err(Error::parse(rl, 1, format!("expected {n} symbols, found {}", row.len())));
        }
        rows.push(row);
        positions.push(rl);
    }
    if let Some((extra, _)) = it.next() {
        return Err(Error::parse(extra, 1, "unexpected content after the last row"));
    }
    for i in 0..n {
        if rows[i][i] != 0 {
            return Err(Error::parse(positions[i], i + 1, "diagonal entry must be 0"));
        }
        for j in 0..i {
            if rows[i][j] != rows[j][i] {
                return Err(Error::parse(positions[i], j + 1, format!("entry differs from row {}, column {}", j + 1, i + 1)));
            }
        }
    }
    WeightedGraph::from_rows(m, &rows)
}

pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.m(), g.n());
    for i in 0..g.n() {
        for &w in g.row(i) {
            out.push(char::from_digit(w as u32, 16).expect("weight below 16"));
        }
        out.push('\n');
    }
    out
}

/// Header `code m n`, then `n` rows of `n` integers `a + m·b` for `a + ωb`.
pub fn parse_code(text: &str) -> Result<AdditiveCode> {
    let mut it = lines(text);
    let Some((ln, first)) = it.next() else {
        return Err(Error::parse(end_of_input(text), 1, "empty input"));
    };
    let mut toks = tokens(first);
    if toks.first().map(|t| t.1) == Some("code") {
        toks.remove(0);
    }
    if toks.len() != 2 {
        return Err(Error::parse(ln, 1, "expected header `code m n`"));
    }
    let m = alphabet(ln, toks[0].0, toks[0].1)?;
    let n: usize = number(ln, toks[1].0, toks[1].1, "length")?;
    let q = m as u32 * m as u32;
    let mut gen = Vec::with_capacity(n);
    for i in 0..n {
        let Some((rl, row_text)) = it.next() else {
            return Err(Error::parse(end_of_input(text), 1, format!("expected {n} rows, found {i}")));
        };
        let toks = tokens(row_text);
        if toks.len() != n {
            return Err(Error::parse(rl, 1, format!("expected {n} symbols, found {}", toks.len())));
        }
        let row = toks
            .iter()
            .map(|&(col, t)| {
                let v: u32 = number(rl, col, t, "field symbol")?;
                if v >= q {
                    return Err(Error::parse(rl, col, format!("symbol {v} is not in 0..{q}")));
                }
                Ok(v as u8)
            })
            .collect::<Result<Vec<u8>>>()?;
        gen.push(row);
    }
    if let Some((extra, _)) = it.next() {
        return Err(Error::parse(extra, 1, "unexpected content after the last row"));
    }
    AdditiveCode::from_generator(m, gen)
}

pub fn write_code(c: &AdditiveCode) -> String {
    let mut out = format!("code {} {}\n", c.m(), c.n());
    for row in c.generator() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Header `stab m n`, then `n` rows of `2n` base-field digits (`A` then
/// `B`); whitespace and `|` inside rows are ignored.
pub fn parse_stabilizer(text: &str) -> Result<StabilizerMatrix> {
    let mut it = lines(text);
    let Some((ln, first)) = it.next() else {
        return Err(Error::parse(end_of_input(text), 1, "empty input"));
    };
    let toks = tokens(first);
    if toks.len() != 3 || toks[0].1 != "stab" {
        return Err(Error::parse(ln, 1, "expected header `stab m n`"));
    }
    let m = alphabet(ln, toks[1].0, toks[1].1)?;
    let n: usize = number(ln, toks[2].0, toks[2].1, "length")?;
    let (mut a, mut b) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for i in 0..n {
        let Some((rl, row_text)) = it.next() else {
            return Err(Error::parse(end_of_input(text), 1, format!("expected {n} rows, found {i}")));
        };
        let row = digit_row(rl, row_text, 10, m)?;
        if row.len() != 2 * n {
            return Err(Error::parse(rl, 1, format!("expected {} symbols, found {}", 2 * n, row.len())));
        }
        a.push(row[..n].to_vec());
        b.push(row[n..].to_vec());
    }
    if let Some((extra, _)) = it.next() {
        return Err(Error::parse(extra, 1, "unexpected content after the last row"));
    }
    StabilizerMatrix::from_parts(m, a, b)
}

pub fn write_stabilizer(s: &StabilizerMatrix) -> String {
    let mut out = format!("stab {} {}\n", s.m(), s.n());
    for i in 0..s.n() {
        let a: String = s.a()[i].iter().map(|&x| char::from(b'0' + x)).collect();
        let b: String = s.b()[i].iter().map(|&x| char::from(b'0' + x)).collect();
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// An orbit database with free-form metadata (pipeline parameters,
/// versions) kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatabaseFile {
    pub db: OrbitDatabase,
    /// Extra `#@` keys other than `m`, `n`, `min_d` and `complete`.
    pub meta: BTreeMap<String, String>,
}

const RESERVED: [&str; 5] = ["format", "m", "n", "min_d", "complete"];
const FORMAT_TAG: &str = "sdcodes-db/1";

/// Upper triangle in row-major order as hexadecimal symbols, `-` if empty.
fn upper_string(g: &WeightedGraph) -> String {
    let s: String = g.upper().iter().map(|&w| char::from_digit(w as u32, 16).expect("small")).collect();
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}

pub fn write_database(file: &DatabaseFile) -> String {
    let db = &file.db;
    let mut out = String::new();
    let _ = writeln!(out, "#@ format={FORMAT_TAG}");
    let min_d = db.min_d.map_or_else(|| "none".to_string(), |d| d.to_string());
    let _ = writeln!(out, "#@ m={} n={} min_d={min_d} complete={}", db.m, db.n, db.complete);
    for (k, v) in &file.meta {
        let _ = writeln!(out, "#@ {k}={v}");
    }
    let _ = writeln!(out, "# m n d orbit_size upper_triangle [enumerator]");
    for r in &db.reps {
        let _ = write!(out, "{} {} {} {} {}", db.m, db.n, r.d, r.orbit_size, upper_string(&r.graph));
        if let Some(e) = &r.enumerator {
            let cells: Vec<String> = e.coeffs().iter().map(u64::to_string).collect();
            let _ = write!(out, " {}", cells.join(","));
        }
        out.push('\n');
    }
    out
}

pub fn parse_database(text: &str) -> Result<DatabaseFile> {
    let mut meta = BTreeMap::new();
    let mut header: BTreeMap<String, (usize, usize, String)> = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let Some(rest) = line.strip_prefix("#@") else { continue };
        let offset = line.len() - rest.len();
        for (col, tok) in tokens(rest) {
            let Some((k, v)) = tok.split_once('=') else {
                return Err(Error::parse(i + 1, col + offset, format!("expected key=value, found {tok:?}")));
            };
            if RESERVED.contains(&k) {
                header.insert(k.to_string(), (i + 1, col + offset + k.len() + 1, v.to_string()));
            } else {
                meta.insert(k.to_string(), v.to_string());
            }
        }
    }
    let field = |k: &str| -> Result<&(usize, usize, String)> {
        header.get(k).ok_or_else(|| Error::parse(1, 1, format!("missing `#@ {k}=` metadata")))
    };
    let (fl, fc, tag) = field("format")?;
    if tag != FORMAT_TAG {
        return Err(Error::parse(*fl, *fc, format!("unsupported format {tag:?}")));
    }
    let (l, c, v) = field("m")?;
    let m = alphabet(*l, *c, v)?;
    let (l, c, v) = field("n")?;
    let n: usize = number(*l, *c, v, "length")?;
    let (l, c, v) = field("min_d")?;
    let min_d = if v == "none" { None } else { Some(number(*l, *c, v, "distance or `none`")?) };
    let (l, c, v) = field("complete")?;
    let complete: bool = number(*l, *c, v, "`true` or `false`")?;

    let mut reps = Vec::new();
    for (ln, line) in lines(text) {
        let toks = tokens(line);
        if toks.len() != 5 && toks.len() != 6 {
            return Err(Error::parse(ln, 1, format!("expected 5 or 6 fields, found {}", toks.len())));
        }
        let rm: u8 = number(ln, toks[0].0, toks[0].1, "alphabet size")?;
        let rn: usize = number(ln, toks[1].0, toks[1].1, "length")?;
        if rm != m {
            return Err(Error::parse(ln, toks[0].0, format!("alphabet {rm} differs from header {m}")));
        }
        if rn != n {
            return Err(Error::parse(ln, toks[1].0, format!("length {rn} differs from header {n}")));
        }
        let d: usize = number(ln, toks[2].0, toks[2].1, "distance")?;
        let orbit_size: usize = number(ln, toks[3].0, toks[3].1, "orbit size")?;
        let (gc, gs) = toks[4];
        let upper = if gs == "-" { Vec::new() } else { digit_row(ln, gs, 16, m).map_err(|e| shift(e, gc - 1))? };
        let expected = n * n.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::parse(ln, gc, format!("expected {expected} symbols, found {}", upper.len())));
        }
        let graph = WeightedGraph::from_upper(m, n, &upper).map_err(|e| Error::parse(ln, gc, e.to_string()))?;
        let enumerator = match toks.get(5) {
            None => None,
            Some(&(ec, es)) => {
                let coeffs = es
                    .split(',')
                    .map(|c| number::<u64>(ln, ec, c, "enumerator coefficient"))
                    .collect::<Result<Vec<_>>>()?;
                if coeffs.len() != n + 1 {
                    return Err(Error::parse(ln, ec, format!("expected {} coefficients, found {}", n + 1, coeffs.len())));
                }
                Some(WeightEnumerator::new(coeffs))
            }
        };
        reps.push(OrbitRep { graph, d, orbit_size, enumerator });
    }
    Ok(DatabaseFile { db: OrbitDatabase { m, n, min_d, complete, reps }, meta })
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse { line, column: column + by, message },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_roundtrip_and_errors() {
        let g = WeightedGraph::circulant(5, &[1, 2, 2, 1]).unwrap();
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(write_graph(&parse_graph(&text).unwrap()), text);
        let bad = "3 2\n01\n20\n";
        assert_eq!(parse_graph(bad).unwrap_err(), Error::parse(3, 1, "entry differs from row 1, column 2"));
        let bad = "3 2\n# comment\n05\n00\n";
        assert!(matches!(parse_graph(bad), Err(Error::Parse { line: 3, column: 2, .. })));
        assert!(matches!(parse_graph("7 2\n00\n00\n"), Err(Error::Parse { line: 1, column: 1, .. })));
    }

    #[test]
    fn circulant_and_dispatch() {
        let f = parse_code_file("circ 3 01110\n").unwrap();
        assert_eq!(f, CodeFile::Circulant { m: 3, row: vec![0, 1, 1, 1, 0] });
        assert_eq!(f.write(), "circ 3 01110\n");
        assert!(matches!(parse_code_file("circ 3 0112\n"), Err(Error::Parse { line: 1, column: 8, .. })));
        let g = parse_graph("circ 4 01α10").unwrap();
        assert_eq!(g.weight(0, 3), 2);
    }

    #[test]
    fn code_and_stabilizer_roundtrip() {
        let g = WeightedGraph::circulant(3, &[1, 0, 1]).unwrap();
        let c = graph_code(&g);
        let text = write_code(&c);
        let back = parse_code(&text).unwrap();
        assert_eq!(back.generator(), c.generator());
        assert_eq!(write_code(&back), text);
        let s = StabilizerMatrix::from_graph(&g);
        let st = write_stabilizer(&s);
        assert_eq!(write_stabilizer(&parse_stabilizer(&st).unwrap()), st);
        assert!(matches!(parse_stabilizer("stab 2 1\n0 3\n"), Err(Error::Parse { line: 2, column: 3, .. })));
    }

    #[test]
    fn database_roundtrip() {
        let g = WeightedGraph::circulant(3, &[1, 1]).unwrap();
        let rep = OrbitRep { graph: g, d: 2, orbit_size: 1, enumerator: Some(WeightEnumerator::new(vec![1, 0, 12, 14])) };
        let file = DatabaseFile {
            db: OrbitDatabase { m: 3, n: 3, min_d: None, complete: true, reps: vec![rep] },
            meta: BTreeMap::from([("version".to_string(), "0.1.0".to_string())]),
        };
        let text = write_database(&file);
        let back = parse_database(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(write_database(&back), text);
        let broken = text.replace("3 3 2 1 111", "3 3 2 1 1x1");
        assert!(matches!(parse_database(&broken), Err(Error::Parse { column: 10, .. })));
    }
}
