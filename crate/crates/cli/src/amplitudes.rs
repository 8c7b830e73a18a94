//! Reader for 16-amplitude state files: one `re im` pair per line, index
//! order `k = 0..15`, `#` starts a comment.

use djc::{state::DIM, C64};

/// Where and why a file failed to parse. Lines and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_amplitudes(text: &str) -> Result<[C64; DIM], ParseError> {
    let mut amps = [C64::new(0.0, 0.0); DIM];
    let mut count = 0;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokens_with_columns(content);
        if tokens.is_empty() {
            continue;
        }
        if count == DIM {
            return Err(error(
                line,
                tokens[0].0,
                format!("more than {DIM} amplitudes"),
            ));
        }
        if tokens.len() != 2 {
            let column = tokens.get(2).map_or(tokens[0].0, |t| t.0);
            return Err(error(
                line,
                column,
                format!("expected `re im`, found {} value(s)", tokens.len()),
            ));
        }
        let mut parts = [0.0; 2];
        for (slot, &(column, tok)) in parts.iter_mut().zip(tokens.iter()) {
            *slot = match tok.parse::<f64>() {
                Ok(v) if v.is_finite() => v,
                Ok(_) => return Err(error(line, column, format!("non-finite value `{tok}`"))),
                Err(_) => return Err(error(line, column, format!("invalid number `{tok}`"))),
            };
        }
        amps[count] = C64::new(parts[0], parts[1]);
        count += 1;
    }
    if count < DIM {
        return Err(error(
            last_line + 1,
            1,
            format!("expected {DIM} amplitudes, found {count}"),
        ));
    }
    Ok(amps)
}

fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in s.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &s[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &s[b..]));
    }
    out
}
