use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::extalg::FieldContext;
use crate::textfmt::{parse_terms, ParseFail};

use super::exponent_vectors;

/// `S = k[x0..xn]` with all variables in degree one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing {
    n: usize,
    field: FieldContext,
}

impl PolyRing {
    pub fn new(n: usize, field: FieldContext) -> Self {
        PolyRing { n, field }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.n + 1
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn basis(&self, d: i32) -> MonomialBasis {
        MonomialBasis::new(self.vars(), d)
    }
}

/// Monomials of one degree with their positions.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub monos: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl MonomialBasis {
    pub fn new(vars: usize, d: i32) -> Self {
        let monos = if d < 0 { Vec::new() } else { exponent_vectors(vars, d as usize) };
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn index(&self, m: &[u8]) -> usize {
        self.index[m]
    }
}

/// A homogeneous polynomial; zero keeps its nominal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Vec<u8>, u32>,
    degree: i32,
}

impl Poly {
    pub fn zero(degree: i32) -> Self {
        Poly { terms: BTreeMap::new(), degree }
    }

    pub fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Vec<u8>, u32)>) -> Result<Self> {
        let f = ring.field();
        let mut out: BTreeMap<Vec<u8>, u32> = BTreeMap::new();
        let mut degree = None;
        for (m, c) in terms {
            if m.len() != ring.vars() {
                return Err(Error::Invalid("exponent vector has the wrong length".into()));
            }
            let d: i32 = m.iter().map(|&a| a as i32).sum();
            if *degree.get_or_insert(d) != d {
                return Err(Error::Invalid("polynomial is not homogeneous".into()));
            }
            let e = out.entry(m).or_insert(0);
            *e = f.add(*e, f.reduce(c));
        }
        out.retain(|_, c| *c != 0);
        Ok(Poly { terms: out, degree: degree.unwrap_or(0) })
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn to_text(&self, field: &FieldContext) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        // Highest monomial first.
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            let sc = field.to_signed(c);
            let mag = sc.unsigned_abs();
            if k == 0 {
                if sc < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if sc < 0 { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{i}") } else { format!("x{i}^{a}") })
                .collect();
            match (factors.is_empty(), mag) {
                (true, _) => s.push_str(&mag.to_string()),
                (false, 1) => s.push_str(&factors.join("*")),
                (false, _) => s.push_str(&format!("{mag}*{}", factors.join("*"))),
            }
        }
        s
    }
}

/// Parses `x0^3 + 2*x1*x2^2`; a zero polynomial takes `zero_degree`.
pub fn parse_poly(s: &str, ring: &PolyRing, zero_degree: i32) -> Result<Poly, ParseFail> {
    let f = ring.field();
    let mut terms = Vec::new();
    let mut degree: Option<i32> = None;
    for t in parse_terms(s, 'x')? {
        let mut m = vec![0u8; ring.vars()];
        for &(idx, power, col) in &t.factors {
            if idx > ring.n() {
                return Err(ParseFail::new(col, format!("variable x{idx} exceeds n = {}", ring.n())));
            }
            let e = m[idx] as u32 + power;
            m[idx] = u8::try_from(e).map_err(|_| ParseFail::new(col, "exponent too large"))?;
        }
        let d: i32 = m.iter().map(|&a| a as i32).sum();
        if let Some(prev) = degree {
            if prev != d {
                let col = t.factors.first().map(|x| x.2).unwrap_or(0);
                return Err(ParseFail::new(col, format!("inhomogeneous: degree {d} after degree {prev}")));
            }
        }
        degree = Some(d);
        terms.push((m, f.from_i64(t.coeff)));
    }
    let p = Poly::from_terms(ring, terms).map_err(|e| ParseFail::new(0, e.to_string()))?;
    Ok(if p.is_zero() { Poly::zero(zero_degree) } else { p })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let r = PolyRing::new(2, FieldContext::default());
        let p = parse_poly("x0^3 + x1^3 + x2^3", &r, 0).unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(parse_poly(&p.to_text(r.field()), &r, 0).unwrap(), p);
        assert!(parse_poly("x0 - x0", &r, 1).unwrap().is_zero());
        assert!(parse_poly("x0^2 + x1", &r, 0).is_err());
        assert_eq!(parse_poly("x3", &r, 0).unwrap_err().col, 0);
    }

    #[test]
    fn basis_sizes() {
        let r = PolyRing::new(2, FieldContext::default());
        assert_eq!(r.basis(3).len(), 10);
        assert_eq!(r.basis(-1).len(), 0);
        assert_eq!(r.basis(0).len(), 1);
        let b = r.basis(2);
        assert_eq!(b.monos[0], vec![2, 0, 0]);
        assert_eq!(b.index(&[0, 0, 2]), 5);
    }
}
