//! The `lesgp 1` structure file format.
//!
//! ```text
//! lesgp 1
//! n 2
//! names bot top      # optional
//! leq
//! 1 1
//! 0 1
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! `#` starts a comment, blank lines are ignored, and the greatest element
//! is inferred from `leq`. Parsing checks shape only; algebra is checked by
//! [`StructureDocument::to_structure`].

use crate::error::{Error, Result};
use crate::lattice::build_lattice;
use crate::semigroup::{build_le_semigroup, LeSemigroup};

pub const FORMAT_TAG: &str = "lesgp";
pub const FORMAT_VERSION: u32 = 1;

const KEYWORDS: [&str; 5] = [FORMAT_TAG, "n", "names", "leq", "mul"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    pub version: u32,
    pub n: usize,
    pub names: Option<Vec<String>>,
    pub leq: Vec<Vec<u8>>,
    pub mul: Vec<Vec<usize>>,
}

impl StructureDocument {
    pub fn from_structure(s: &LeSemigroup) -> Self {
        StructureDocument {
            version: FORMAT_VERSION,
            n: s.size(),
            names: s.names().map(<[String]>::to_vec),
            leq: s
                .lattice()
                .leq_matrix()
                .into_iter()
                .map(|r| r.into_iter().map(u8::from).collect())
                .collect(),
            mul: s.table().rows(),
        }
    }

    /// Full validation: lattice axioms, then le-semigroup axioms.
    pub fn to_structure(&self) -> Result<LeSemigroup> {
        let leq: Vec<Vec<bool>> = self
            .leq
            .iter()
            .map(|r| r.iter().map(|&b| b != 0).collect())
            .collect();
        let lattice = build_lattice(&leq)?;
        let s = build_le_semigroup(lattice, &self.mul)?;
        Ok(match &self.names {
            Some(names) => s
                .with_names(names.clone())
                .ok_or(Error::DimensionMismatch {
                    line: 0,
                    message: "names count differs from n".into(),
                })?,
            None => s,
        })
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content
                .char_indices()
                .chain(std::iter::once((content.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..pos],
                            column: content[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self) -> Option<&Line<'a>> {
        let line = self.lines.get(self.pos)?;
        self.pos += 1;
        self.last_line = line.number;
        Some(line)
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn expect_keyword(&mut self, keyword: &str) -> Result<()> {
        let end = self.last_line + 1;
        let line = self.next().ok_or_else(|| {
            parse_err(end, 1, format!("expected `{keyword}`, found end of input"))
        })?;
        let first = &line.tokens[0];
        if first.text != keyword {
            return Err(parse_err(
                line.number,
                first.column,
                format!("expected `{keyword}`, found `{}`", first.text),
            ));
        }
        if let Some(extra) = line.tokens.get(1) {
            return Err(parse_err(
                line.number,
                extra.column,
                format!("unexpected `{}` after `{keyword}`", extra.text),
            ));
        }
        Ok(())
    }

    /// `n` rows of `n` tokens, each converted by `cell`.
    fn matrix<T>(
        &mut self,
        n: usize,
        what: &str,
        mut cell: impl FnMut(&Token<'_>, usize) -> Result<T>,
    ) -> Result<Vec<Vec<T>>> {
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let is_keyword = self
                .peek()
                .map(|l| KEYWORDS.contains(&l.tokens[0].text))
                .unwrap_or(true);
            if is_keyword {
                return Err(Error::DimensionMismatch {
                    line: self.peek().map_or(self.last_line + 1, |l| l.number),
                    message: format!("`{what}` has {r} rows, expected {n}"),
                });
            }
            let line = self.next().expect("peeked");
            if line.tokens.len() != n {
                return Err(Error::DimensionMismatch {
                    line: line.number,
                    message: format!(
                        "`{what}` row {r} has {} entries, expected {n}",
                        line.tokens.len()
                    ),
                });
            }
            let number = line.number;
            let row = line
                .tokens
                .iter()
                .map(|t| cell(t, number))
                .collect::<Result<Vec<T>>>()?;
            rows.push(row);
        }
        Ok(rows)
    }
}

pub fn parse_structure(text: &str) -> Result<StructureDocument> {
    let mut cur = Cursor {
        lines: tokenize(text),
        pos: 0,
        last_line: 0,
    };

    let header = cur.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let tag = &header.tokens[0];
    if tag.text != FORMAT_TAG {
        return Err(parse_err(
            header.number,
            tag.column,
            format!("expected `{FORMAT_TAG}` header"),
        ));
    }
    let version = match header.tokens.get(1) {
        Some(t) if t.text == FORMAT_VERSION.to_string() => FORMAT_VERSION,
        Some(t) => {
            return Err(parse_err(
                header.number,
                t.column,
                format!("unsupported version `{}`", t.text),
            ))
        }
        None => {
            return Err(parse_err(
                header.number,
                tag.column + tag.text.len() + 1,
                "missing version",
            ))
        }
    };
    if let Some(extra) = header.tokens.get(2) {
        return Err(parse_err(
            header.number,
            extra.column,
            "unexpected token after version",
        ));
    }

    let end = cur.last_line + 1;
    let nline = cur
        .next()
        .ok_or_else(|| parse_err(end, 1, "expected `n <int>`"))?;
    if nline.tokens[0].text != "n" || nline.tokens.len() != 2 {
        return Err(parse_err(
            nline.number,
            nline.tokens[0].column,
            "expected `n <int>`",
        ));
    }
    let ntok = &nline.tokens[1];
    let n: usize = ntok.text.parse().ok().filter(|&v| v >= 1).ok_or_else(|| {
        parse_err(
            nline.number,
            ntok.column,
            format!("invalid order `{}`", ntok.text),
        )
    })?;

    let names = match cur.peek() {
        Some(l) if l.tokens[0].text == "names" => {
            let l = cur.next().expect("peeked");
            let names: Vec<String> = l.tokens[1..].iter().map(|t| t.text.to_string()).collect();
            if names.len() != n {
                return Err(Error::DimensionMismatch {
                    line: l.number,
                    message: format!("{} names for {n} elements", names.len()),
                });
            }
            Some(names)
        }
        _ => None,
    };

    cur.expect_keyword("leq")?;
    let leq = cur.matrix(n, "leq", |t, line| match t.text {
        "0" => Ok(0u8),
        "1" => Ok(1u8),
        other => Err(parse_err(
            line,
            t.column,
            format!("expected 0 or 1, found `{other}`"),
        )),
    })?;

    cur.expect_keyword("mul")?;
    let mul = cur.matrix(n, "mul", |t, line| {
        let v: usize = t.text.parse().map_err(|_| {
            parse_err(
                line,
                t.column,
                format!("expected an element index, found `{}`", t.text),
            )
        })?;
        if v >= n {
            return Err(Error::IndexOutOfRange {
                line,
                column: t.column,
                value: v,
                n,
            });
        }
        Ok(v)
    })?;

    if let Some(extra) = cur.next() {
        let t = &extra.tokens[0];
        return Err(parse_err(
            extra.number,
            t.column,
            format!("unexpected `{}` after `mul` matrix", t.text),
        ));
    }

    Ok(StructureDocument {
        version,
        n,
        names,
        leq,
        mul,
    })
}

fn push_row<T: ToString>(out: &mut String, row: &[T]) {
    let cells: Vec<String> = row.iter().map(T::to_string).collect();
    out.push_str(&cells.join(" "));
    out.push('\n');
}

pub fn serialize_structure(doc: &StructureDocument) -> String {
    let mut out = format!("{FORMAT_TAG} {}\nn {}\n", doc.version, doc.n);
    if let Some(names) = &doc.names {
        out.push_str("names ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out.push_str("leq\n");
    for row in &doc.leq {
        push_row(&mut out, row);
    }
    out.push_str("mul\n");
    for row in &doc.mul {
        push_row(&mut out, row);
    }
    out
}

/// Parse and validate in one step.
pub fn read_structure(text: &str) -> Result<LeSemigroup> {
    parse_structure(text)?.to_structure()
}

pub fn write_structure(s: &LeSemigroup) -> String {
    serialize_structure(&StructureDocument::from_structure(s))
}
