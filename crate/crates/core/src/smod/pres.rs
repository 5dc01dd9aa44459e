//! Polynomial presentations and the S-module text format:
//!
//! ```text
//! ring n=2 p=32003
//! rowdegs=[0] coldegs=[3]
//! entry 0 0 : x0^3 + x1^3 + x2^3
//! ```
//!
//! `rowdegs` are generator degrees, `coldegs` relation degrees, and the module
//! is the cokernel of the matrix.

use crate::error::{Error, Result};
use crate::extalg::{FieldContext, DEFAULT_PRIME};
use crate::textfmt::{content_lines, parse_degree_line, parse_entry_line, parse_header, ParseFail};

use super::poly::{parse_poly, Poly, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPresentation {
    ring: PolyRing,
    rowdegs: Vec<i32>,
    coldegs: Vec<i32>,
    entries: Vec<Vec<Poly>>,
}

impl SPresentation {
    pub fn new(ring: PolyRing, rowdegs: Vec<i32>, coldegs: Vec<i32>, entries: Vec<Vec<Poly>>) -> Result<Self> {
        if entries.len() != rowdegs.len() || entries.iter().any(|r| r.len() != coldegs.len()) {
            return Err(Error::Invalid(format!("entry matrix must be {} x {}", rowdegs.len(), coldegs.len())));
        }
        let mut entries = entries;
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, p) in row.iter_mut().enumerate() {
                let want = coldegs[c] - rowdegs[r];
                if p.is_zero() {
                    *p = Poly::zero(want);
                } else if p.degree() != want {
                    return Err(Error::Inhomogeneous { row: r, col: c, expected: want, found: p.degree() });
                }
            }
        }
        Ok(SPresentation { ring, rowdegs, coldegs, entries })
    }

    /// The free module `⊕ S(-g)` with no relations.
    pub fn free(ring: PolyRing, rowdegs: Vec<i32>) -> Self {
        let entries = vec![Vec::new(); rowdegs.len()];
        SPresentation { ring, rowdegs, coldegs: Vec::new(), entries }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rowdegs(&self) -> &[i32] {
        &self.rowdegs
    }

    pub fn coldegs(&self) -> &[i32] {
        &self.coldegs
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r][c]
    }

    pub fn to_text(&self) -> String {
        let list = |v: &[i32]| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        let mut s = format!("ring n={} p={}\n", self.ring.n(), self.ring.field().p());
        s.push_str(&format!("rowdegs={} coldegs={}\n", list(&self.rowdegs), list(&self.coldegs)));
        for (r, row) in self.entries.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                if !p.is_zero() {
                    s.push_str(&format!("entry {r} {c} : {}\n", p.to_text(self.ring.field())));
                }
            }
        }
        s
    }
}

fn at(line: usize, e: ParseFail) -> Error {
    Error::Parse { line, col: e.col + 1, msg: e.msg }
}

pub fn parse_smod(src: &str) -> Result<SPresentation> {
    let mut lines = content_lines(src);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, col: 1, msg: "empty file".into() })?;
    let (n, p) = parse_header(header, "ring").map_err(|e| at(hl, e))?;
    let field =
        FieldContext::new(p.unwrap_or(DEFAULT_PRIME)).map_err(|e| Error::Parse { line: hl, col: 1, msg: e.to_string() })?;
    let ring = PolyRing::new(n, field);
    let (dl, degs) = lines
        .next()
        .ok_or(Error::Parse { line: hl + 1, col: 1, msg: "missing rowdegs=[..] coldegs=[..]".into() })?;
    let (rowdegs, coldegs) = parse_degree_line(degs).map_err(|e| at(dl, e))?;
    let mut entries: Vec<Vec<Poly>> =
        rowdegs.iter().map(|r| coldegs.iter().map(|c| Poly::zero(c - r)).collect()).collect();
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
        let p = parse_poly(expr, &ring, want).map_err(|e| at(ln, ParseFail::new(off + e.col, e.msg)))?;
        if !p.is_zero() && p.degree() != want {
            return Err(Error::Parse {
                line: ln,
                col: off + 1,
                msg: format!("entry ({r}, {c}) must have degree {want}, found {}", p.degree()),
            });
        }
        entries[r][c] = p;
    }
    SPresentation::new(ring, rowdegs, coldegs, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_round_trip() {
        let src = "ring n=2 p=32003\nrowdegs=[0] coldegs=[3]\nentry 0 0 : x0^3 + x1^3 + x2^3\n";
        let p = parse_smod(src).unwrap();
        assert_eq!(parse_smod(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        let bad = "ring n=2\nrowdegs=[0] coldegs=[3]\nentry 0 0 : x0^3 + x1^2\n";
        assert!(matches!(parse_smod(bad), Err(Error::Parse { line: 3, .. })));
        let wrong_degree = "ring n=2\nrowdegs=[0] coldegs=[3]\nentry 0 0 : x0^2\n";
        assert!(matches!(parse_smod(wrong_degree), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_smod("ring n=2\nrowdegs=[0 coldegs=[3]\n"), Err(Error::Parse { line: 2, .. })));
    }
}
