//! Plain-text formats for algebras (`.kua`), functions (`.kuf`) and codes
//! (`.kuc`).
//!
//! All three formats share the same conventions: `#` starts a comment,
//! blank lines are ignored, LF and CRLF both work, and runs of spaces
//! count as one separator. Writers always emit LF and single spaces.
//!
//! * `.kua` — first significant line is the order `n`, followed by `n`
//!   rows of `n` element indices (`row x` lists `x*0 .. x*(n-1)`).
//! * `.kuf` — first significant line is the domain size `m`, followed by
//!   `m` lines `<label> <element-index>`. Labels may contain `#`, so only
//!   whole-line comments apply here.
//! * `.kuc` — one codeword per line, characters `0`/`1`, all the same
//!   length. Trailing `# ...` comments on a word line are allowed.

use std::path::Path;

use crate::algebra::FiniteKUAlgebra;
use crate::code::{BlockCode, Codeword};
use crate::error::KuError;
use crate::function::KUFunction;
use crate::reconstruct::ReconstructionResult;

/// Lines that carry content, with their 1-based physical line numbers.
/// `strip_inline` removes `# ...` suffixes (for the numeric formats).
fn significant_lines(text: &str, strip_inline: bool) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let mut line = raw.trim_end_matches('\r');
        if strip_inline {
            if let Some(pos) = line.find('#') {
                line = &line[..pos];
            }
        }
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push((idx + 1, line.to_string()));
    }
    out
}

fn parse_count(file: &str, lines: &[(usize, String)], what: &str) -> Result<usize, KuError> {
    let (line_no, text) = lines
        .first()
        .ok_or_else(|| KuError::parse(file, 0, format!("missing {what} line")))?;
    let value: usize = text
        .parse()
        .map_err(|_| KuError::parse(file, *line_no, format!("expected {what}, found {text:?}")))?;
    if value == 0 {
        return Err(KuError::parse(
            file,
            *line_no,
            format!("{what} must be at least 1"),
        ));
    }
    Ok(value)
}

fn expect_no_extra(file: &str, lines: &[(usize, String)], used: usize) -> Result<(), KuError> {
    if let Some((line_no, text)) = lines.get(used) {
        return Err(KuError::parse(
            file,
            *line_no,
            format!("unexpected extra content {text:?}"),
        ));
    }
    Ok(())
}

/// Parses a `.kua` body into a raw table. Shape and range are validated
/// here; the axioms are a separate question for
/// [`crate::algebra::verify_axioms`].
pub fn parse_kua_str(text: &str, file: &str) -> Result<Vec<Vec<usize>>, KuError> {
    let lines = significant_lines(text, true);
    let n = parse_count(file, &lines, "order")?;
    let mut table = Vec::with_capacity(n);
    for x in 0..n {
        let (line_no, row_text) = lines
            .get(1 + x)
            .ok_or_else(|| KuError::parse(file, 0, format!("missing row {x} of {n}")))?;
        let mut row = Vec::with_capacity(n);
        for token in row_text.split_whitespace() {
            let v: usize = token.parse().map_err(|_| {
                KuError::parse(
                    file,
                    *line_no,
                    format!("expected element index, found {token:?}"),
                )
            })?;
            if v >= n {
                return Err(KuError::parse(
                    file,
                    *line_no,
                    format!("element {v} out of range for order {n}"),
                ));
            }
            row.push(v);
        }
        if row.len() != n {
            return Err(KuError::parse(
                file,
                *line_no,
                format!("row {x} has {} entries, expected {n}", row.len()),
            ));
        }
        table.push(row);
    }
    expect_no_extra(file, &lines, 1 + n)?;
    Ok(table)
}

/// Parses a `.kuf` body against an algebra of order `n`.
pub fn parse_kuf_str(
    text: &str,
    file: &str,
    n: usize,
) -> Result<(Vec<String>, Vec<usize>), KuError> {
    let lines = significant_lines(text, false);
    let m = parse_count(file, &lines, "domain size")?;
    let mut labels = Vec::with_capacity(m);
    let mut image = Vec::with_capacity(m);
    for i in 0..m {
        let (line_no, entry) = lines
            .get(1 + i)
            .ok_or_else(|| KuError::parse(file, 0, format!("missing entry {i} of {m}")))?;
        let tokens: Vec<&str> = entry.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(KuError::parse(
                file,
                *line_no,
                format!("expected \"<label> <element-index>\", found {entry:?}"),
            ));
        }
        let value: usize = tokens[1].parse().map_err(|_| {
            KuError::parse(
                file,
                *line_no,
                format!("expected element index, found {:?}", tokens[1]),
            )
        })?;
        if value >= n {
            return Err(KuError::parse(
                file,
                *line_no,
                format!("element {value} out of range for order {n}"),
            ));
        }
        if labels.contains(&tokens[0].to_string()) {
            return Err(KuError::parse(
                file,
                *line_no,
                format!("duplicate label {:?}", tokens[0]),
            ));
        }
        labels.push(tokens[0].to_string());
        image.push(value);
    }
    expect_no_extra(file, &lines, 1 + m)?;
    Ok((labels, image))
}

/// Parses a `.kuc` body into a block code.
pub fn parse_kuc_str(text: &str, file: &str) -> Result<BlockCode, KuError> {
    let lines = significant_lines(text, true);
    if lines.is_empty() {
        return Err(KuError::parse(file, 0, "code is empty"));
    }
    let mut words: Vec<Codeword> = Vec::with_capacity(lines.len());
    let mut expected_len = None;
    for (line_no, text) in &lines {
        let word: Codeword = text
            .parse()
            .map_err(|e: KuError| KuError::parse(file, *line_no, e.to_string()))?;
        match expected_len {
            None => expected_len = Some(word.len()),
            Some(len) if word.len() != len => {
                return Err(KuError::parse(
                    file,
                    *line_no,
                    format!("word has length {}, expected {len}", word.len()),
                ));
            }
            Some(_) => {}
        }
        if words.contains(&word) {
            return Err(KuError::parse(
                file,
                *line_no,
                format!("duplicate word {text}"),
            ));
        }
        words.push(word);
    }
    BlockCode::new(words)
}

/// Serializes an algebra as a `.kua` body.
pub fn write_kua(alg: &FiniteKUAlgebra) -> String {
    write_kua_with_comments(alg, &[])
}

/// [`write_kua`] with leading `#` comment lines.
pub fn write_kua_with_comments(alg: &FiniteKUAlgebra, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("{}\n", alg.order()));
    for x in 0..alg.order() {
        let row: Vec<String> = alg.row(x).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Serializes a function as a `.kuf` body.
pub fn write_kuf(f: &KUFunction) -> String {
    let mut out = format!("{}\n", f.domain_size());
    for (label, value) in f.labels().iter().zip(f.image()) {
        out.push_str(&format!("{label} {value}\n"));
    }
    out
}

/// Serializes a code as a `.kuc` body. With `with_labels`, rows that have
/// a label carry it as a trailing comment, which parsers ignore.
pub fn write_kuc(code: &BlockCode, with_labels: bool) -> String {
    let mut out = String::new();
    for (word, label) in code.words().iter().zip(code.labels()) {
        match label {
            Some(l) if with_labels => out.push_str(&format!("{word} # {l}\n")),
            _ => out.push_str(&format!("{word}\n")),
        }
    }
    out
}

/// The `.kua` emitted for a reconstruction, with per-element provenance
/// recorded as comments.
pub fn write_reconstruction_kua(result: &ReconstructionResult) -> String {
    let comments: Vec<String> = result
        .word_of
        .iter()
        .zip(&result.provenance)
        .enumerate()
        .map(|(idx, (word, prov))| format!("element {idx}: {word} ({prov})"))
        .collect();
    write_kua_with_comments(&result.algebra, &comments)
}

/// Reads and parses a file by extension-appropriate parser.
pub fn load_kua(path: &Path) -> Result<Vec<Vec<usize>>, KuError> {
    parse_kua_str(&read(path)?, &path.display().to_string())
}

pub fn load_kuf(path: &Path, n: usize) -> Result<(Vec<String>, Vec<usize>), KuError> {
    parse_kuf_str(&read(path)?, &path.display().to_string(), n)
}

pub fn load_kuc(path: &Path) -> Result<BlockCode, KuError> {
    parse_kuc_str(&read(path)?, &path.display().to_string())
}

fn read(path: &Path) -> Result<String, KuError> {
    std::fs::read_to_string(path).map_err(|e| KuError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}
