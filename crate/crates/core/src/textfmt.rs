//! Shared tokenizer for the polynomial-like text syntax used by the matrix
//! file formats: terms joined by `+`/`-`, factors joined by `*`, each factor
//! either a decimal integer or a variable `<letter><index>` with an optional
//! `^<power>`.

/// A parse failure inside one expression; `col` is a 0-based byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFail {
    pub col: usize,
    pub msg: String,
}

impl ParseFail {
    pub fn new(col: usize, msg: impl Into<String>) -> Self {
        ParseFail { col, msg: msg.into() }
    }
}

/// One term: signed integer coefficient and the variable factors in the
/// order written, as `(index, power, column)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: i64,
    pub factors: Vec<(usize, u32, usize)>,
}

pub fn parse_terms(s: &str, letter: char) -> Result<Vec<RawTerm>, ParseFail> {
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    let mut terms = Vec::new();

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos] as char).is_ascii_whitespace() {
            *pos += 1;
        }
    };

    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            None
        } else {
            s[start..*pos].parse().ok()
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(ParseFail::new(pos, "empty expression"));
    }
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        let mut negative = false;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if !first {
            return Err(ParseFail::new(pos, "expected '+' or '-'"));
        }
        first = false;

        let mut coeff: i64 = 1;
        let mut factors = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(ParseFail::new(pos, "expected a factor"));
            }
            let c = bytes[pos] as char;
            if c.is_ascii_digit() {
                let v = read_int(&mut pos).ok_or_else(|| ParseFail::new(pos, "integer too large"))?;
                coeff = coeff
                    .checked_mul(v)
                    .ok_or_else(|| ParseFail::new(pos, "coefficient overflow"))?;
            } else if c == letter {
                let col = pos;
                pos += 1;
                let idx = read_int(&mut pos)
                    .ok_or_else(|| ParseFail::new(pos, format!("expected index after '{letter}'")))?;
                let mut power = 1u32;
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    power = read_int(&mut pos)
                        .ok_or_else(|| ParseFail::new(pos, "expected exponent after '^'"))?
                        as u32;
                }
                factors.push((idx as usize, power, col));
            } else {
                return Err(ParseFail::new(pos, format!("unexpected character '{c}'")));
            }
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        terms.push(RawTerm { coeff: if negative { -coeff } else { coeff }, factors });
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
    }
    Ok(terms)
}

/// Parses `[a,b,c]` (possibly empty) into integers.
pub fn parse_int_list(s: &str) -> Result<Vec<i32>, ParseFail> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| ParseFail::new(0, "expected a bracketed list like [0,1]"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i32>()
                .map_err(|_| ParseFail::new(0, format!("bad integer '{}'", x.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_and_signs() {
        let t = parse_terms("2*e0*e1 - e3 + 5", 'e').unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].coeff, 2);
        assert_eq!(t[0].factors.iter().map(|f| f.0).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(t[1].coeff, -1);
        assert_eq!(t[2].coeff, 5);
        assert!(t[2].factors.is_empty());
    }

    #[test]
    fn powers() {
        let t = parse_terms("x0^3 + x1 ^ 2*x2", 'x').unwrap();
        assert_eq!(t[0].factors[0].1, 3);
        assert_eq!(t[1].factors, vec![(1, 2, 7), (2, 1, 14)]);
    }

    #[test]
    fn errors_carry_columns() {
        assert_eq!(parse_terms("e0 e1", 'e').unwrap_err().col, 3);
        assert_eq!(parse_terms("e0 + y1", 'e').unwrap_err().col, 5);
        assert!(parse_terms("", 'e').is_err());
        assert!(parse_terms("e0 +", 'e').is_err());
    }

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("[1, -2,3]").unwrap(), vec![1, -2, 3]);
        assert_eq!(parse_int_list("[]").unwrap(), Vec::<i32>::new());
        assert!(parse_int_list("1,2").is_err());
    }
}

/// Meaningful lines of a matrix file: 1-based line number, text with any
/// `#` comment removed, and the byte offset of the first non-blank char.
pub fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        (!l.trim().is_empty()).then_some((i + 1, l))
    })
}

/// `<keyword> n=<n> [p=<p>]`; returns `(n, p)`.
pub fn parse_header(line: &str, keyword: &str) -> Result<(usize, Option<u32>), ParseFail> {
    let mut toks = line.split_whitespace();
    let first = toks.next().unwrap_or("");
    if first != keyword {
        return Err(ParseFail::new(offset_of(line, first), format!("expected header '{keyword} n=<n> p=<p>'")));
    }
    let (mut n, mut p) = (None, None);
    for t in toks {
        let col = offset_of(line, t);
        let (k, v) = t.split_once('=').ok_or_else(|| ParseFail::new(col, format!("expected key=value, found '{t}'")))?;
        let bad = || ParseFail::new(col + k.len() + 1, format!("bad value '{v}' for {k}"));
        match k {
            "n" => n = Some(v.parse::<usize>().map_err(|_| bad())?),
            "p" => p = Some(v.parse::<u32>().map_err(|_| bad())?),
            _ => return Err(ParseFail::new(col, format!("unknown header key '{k}'"))),
        }
    }
    let n = n.ok_or_else(|| ParseFail::new(line.len(), "header is missing n=<n>"))?;
    Ok((n, p))
}

/// `rowdegs=[..] coldegs=[..]`.
pub fn parse_degree_line(line: &str) -> Result<(Vec<i32>, Vec<i32>), ParseFail> {
    let list = |key: &str| -> Result<Vec<i32>, ParseFail> {
        let start = line.find(key).ok_or_else(|| ParseFail::new(0, format!("missing {key}")))?;
        let rest = &line[start + key.len()..];
        let close = rest.find(']').ok_or_else(|| ParseFail::new(start, format!("unterminated list after {key}")))?;
        parse_int_list(&rest[..=close]).map_err(|e| ParseFail::new(start + key.len() + e.col, e.msg))
    };
    Ok((list("rowdegs=")?, list("coldegs=")?))
}

/// `entry r c : <expr>`; returns the indices, the expression and its offset.
pub fn parse_entry_line(line: &str) -> Result<(usize, usize, &str, usize), ParseFail> {
    let colon = line.find(':').ok_or_else(|| ParseFail::new(line.len(), "expected ':' in entry line"))?;
    let head = &line[..colon];
    let mut toks = head.split_whitespace();
    if toks.next() != Some("entry") {
        return Err(ParseFail::new(offset_of(line, line.trim_start()), "expected 'entry r c : <expr>'"));
    }
    let mut idx = [0usize; 2];
    for slot in idx.iter_mut() {
        let t = toks.next().ok_or_else(|| ParseFail::new(colon, "expected two indices before ':'"))?;
        *slot = t.parse().map_err(|_| ParseFail::new(offset_of(line, t), format!("bad index '{t}'")))?;
    }
    if let Some(t) = toks.next() {
        return Err(ParseFail::new(offset_of(line, t), "unexpected token before ':'"));
    }
    Ok((idx[0], idx[1], &line[colon + 1..], colon + 1))
}

fn offset_of(line: &str, sub: &str) -> usize {
    (sub.as_ptr() as usize).saturating_sub(line.as_ptr() as usize)
}
