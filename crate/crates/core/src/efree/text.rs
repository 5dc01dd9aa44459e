//! The E-matrix text format:
//!
//! ```text
//! ealg n=3 p=32003
//! rowdegs=[1,1] coldegs=[0]
//! entry 0 0 : e0
//! entry 1 0 : e1 - 2*e3
//! ```
//!
//! `rowdegs` are target generator degrees, `coldegs` source generator degrees;
//! omitted entries are zero and `#` starts a comment.

use crate::error::{Error, Result};
use crate::extalg::{parse_element, AlgebraContext, ExtElement, DEFAULT_PRIME};
use crate::textfmt::{content_lines, parse_degree_line, parse_entry_line, parse_header, ParseFail};

use super::{FreeEModule, GradedMap};

fn at(line: usize, e: ParseFail) -> Error {
    Error::Parse { line, col: e.col + 1, msg: e.msg }
}

pub fn parse_emat(src: &str) -> Result<GradedMap> {
    let mut lines = content_lines(src);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, col: 1, msg: "empty file".into() })?;
    let (n, p) = parse_header(header, "ealg").map_err(|e| at(hl, e))?;
    let ctx = AlgebraContext::with_prime(n, p.unwrap_or(DEFAULT_PRIME))
        .map_err(|e| Error::Parse { line: hl, col: 1, msg: e.to_string() })?;
    let (dl, degs) = lines
        .next()
        .ok_or(Error::Parse { line: hl + 1, col: 1, msg: "missing rowdegs=[..] coldegs=[..]".into() })?;
    let (rowdegs, coldegs) = parse_degree_line(degs).map_err(|e| at(dl, e))?;
    let mut entries: Vec<Vec<ExtElement>> = rowdegs
        .iter()
        .map(|t| coldegs.iter().map(|g| ExtElement::zero(g - t)).collect())
        .collect();
    for (ln, line) in lines {
        let (r, c, expr, off) = parse_entry_line(line).map_err(|e| at(ln, e))?;
        if r >= rowdegs.len() || c >= coldegs.len() {
            return Err(Error::Parse {
                line: ln,
                col: 1,
                msg: format!("entry ({r}, {c}) outside a {}x{} matrix", rowdegs.len(), coldegs.len()),
            });
        }
        let want = coldegs[c] - rowdegs[r];
        let el = parse_element(expr, &ctx, want).map_err(|e| at(ln, ParseFail::new(off + e.col, e.msg)))?;
        if !el.is_zero() && el.degree() != want {
            return Err(Error::Parse {
                line: ln,
                col: off + 1,
                msg: format!("entry ({r}, {c}) must have degree {want}, found {}", el.degree()),
            });
        }
        entries[r][c] = el;
    }
    GradedMap::new(FreeEModule::new(&ctx, coldegs), FreeEModule::new(&ctx, rowdegs), entries)
        .map_err(|e| Error::Parse { line: dl, col: 1, msg: e.to_string() })
}

pub fn write_emat(f: &GradedMap) -> String {
    let ctx = f.ctx();
    let list = |v: &[i32]| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    let mut s = format!("ealg n={} p={}\n", ctx.n(), ctx.field().p());
    s.push_str(&format!("rowdegs={} coldegs={}\n", list(f.target().degrees()), list(f.source().degrees())));
    for (r, row) in f.entries().iter().enumerate() {
        for (c, el) in row.iter().enumerate() {
            if !el.is_zero() {
                s.push_str(&format!("entry {r} {c} : {}\n", el.to_text(ctx.field())));
            }
        }
    }
    s
}
