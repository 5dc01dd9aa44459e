//! The exterior algebra E on variables e_0..e_n over GF(p), graded with
//! deg(e_i) = -1.
//!
//! Monomials are bitmasks over the variable indices; the canonical sign of a
//! monomial is the one of its increasing index order.

mod field;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

pub use field::{FieldContext, DEFAULT_PRIME};
pub use text::parse_element;

use crate::error::{Error, Result};

/// Largest supported top variable index.
pub const MAX_N: usize = 15;

/// A monomial e_{i_1} e_{i_2} ... with i_1 < i_2 < ..., stored as a bitmask.
/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExtMonomial(pub u32);

impl ExtMonomial {
    pub const ONE: ExtMonomial = ExtMonomial(0);

    pub fn var(i: usize) -> Self {
        ExtMonomial(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if mask & (1 << i) != 0 {
                return None;
            }
            mask |= 1 << i;
        }
        Some(ExtMonomial(mask))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Internal degree, `-|indexSet|`.
    #[inline]
    pub fn degree(self) -> i32 {
        -(self.0.count_ones() as i32)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let t = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(t)
            }
        })
    }
}

impl Ord for ExtMonomial {
    /// Lexicographic order on the increasing index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.0, other.0);
        if a == b {
            return Ordering::Equal;
        }
        let t = (a ^ b).trailing_zeros();
        let above = if t >= 31 { 0 } else { !((1u32 << (t + 1)) - 1) };
        if a & (1 << t) != 0 {
            // `a` continues with t; `b` continues with something larger or stops.
            if b & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if a & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for ExtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "e{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Wedge product of two monomials: `None` when they share a variable,
/// otherwise the merged monomial and whether the shuffle sign is negative.
#[inline]
pub fn mono_mul(a: ExtMonomial, b: ExtMonomial) -> Option<(bool, ExtMonomial)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    Some((shuffle_parity(a.0, b.0), ExtMonomial(a.0 | b.0)))
}

/// Parity of the number of pairs (i in a, j in b) with i > j.
#[inline]
pub fn shuffle_parity(a: u32, b: u32) -> bool {
    let mut inv = 0u32;
    let mut m = b;
    while m != 0 {
        let j = m.trailing_zeros();
        m &= m - 1;
        inv += (a >> j >> 1).count_ones();
    }
    inv & 1 == 1
}

struct AlgebraInner {
    n: usize,
    field: FieldContext,
    // masks of each size, in canonical (lexicographic) order
    by_size: Vec<Vec<u32>>,
    // position of a mask inside its size class
    rank: Vec<u32>,
}

/// The exterior algebra on `n + 1` variables over a prime field.
#[derive(Clone)]
pub struct AlgebraContext(Arc<AlgebraInner>);

impl AlgebraContext {
    pub fn new(n: usize, field: FieldContext) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Invalid(format!("n = {n} exceeds the supported maximum {MAX_N}")));
        }
        let vars = n + 1;
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); vars + 1];
        for mask in 0u32..(1 << vars) {
            by_size[mask.count_ones() as usize].push(mask);
        }
        for class in by_size.iter_mut() {
            class.sort_by(|a, b| ExtMonomial(*a).cmp(&ExtMonomial(*b)));
        }
        let mut rank = vec![0u32; 1 << vars];
        for class in &by_size {
            for (i, &m) in class.iter().enumerate() {
                rank[m as usize] = i as u32;
            }
        }
        Ok(AlgebraContext(Arc::new(AlgebraInner { n, field, by_size, rank })))
    }

    pub fn with_prime(n: usize, p: u32) -> Result<Self> {
        Self::new(n, FieldContext::new(p)?)
    }

    /// Top variable index.
    #[inline]
    pub fn n(&self) -> usize {
        self.0.n
    }

    #[inline]
    pub fn vars(&self) -> usize {
        self.0.n + 1
    }

    #[inline]
    pub fn field(&self) -> &FieldContext {
        &self.0.field
    }

    /// Monomials of exterior degree `k` (internal degree `-k`) in canonical order.
    pub fn monomials(&self, k: usize) -> &[u32] {
        self.0.by_size.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Index of a monomial inside [`Self::monomials`] of its size.
    #[inline]
    pub fn mono_rank(&self, m: u32) -> usize {
        self.0.rank[m as usize] as usize
    }

    /// dim E(-twist)_degree, i.e. `C(n+1, twist - degree)`.
    pub fn graded_dim(&self, twist: i32, degree: i32) -> usize {
        let k = twist - degree;
        if k < 0 || k as usize > self.vars() {
            0
        } else {
            self.monomials(k as usize).len()
        }
    }

    /// A degree `d` element with independent uniform coefficients.
    pub fn random_element<R: Rng + ?Sized>(&self, degree: i32, rng: &mut R) -> Result<ExtElement> {
        if degree > 0 || degree < -(self.vars() as i32) {
            return Err(Error::DegreeOutOfRange { degree, top: self.vars() });
        }
        let p = self.field().p();
        let terms = self
            .monomials((-degree) as usize)
            .iter()
            .filter_map(|&m| {
                let c = rng.gen_range(0..p);
                (c != 0).then_some((ExtMonomial(m), c))
            })
            .collect();
        Ok(ExtElement { terms, degree })
    }

    pub fn same(&self, other: &AlgebraContext) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.n() == other.n() && self.field() == other.field())
    }
}

impl PartialEq for AlgebraContext {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for AlgebraContext {}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraContext(n={}, p={})", self.n(), self.field().p())
    }
}

/// A homogeneous element of E. Terms are sorted by monomial and carry nonzero
/// coefficients; the zero element still remembers its degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElement {
    terms: Vec<(ExtMonomial, u32)>,
    degree: i32,
}

impl ExtElement {
    pub fn zero(degree: i32) -> Self {
        ExtElement { terms: Vec::new(), degree }
    }

    pub fn one() -> Self {
        Self::scalar(1)
    }

    pub fn scalar(c: u32) -> Self {
        if c == 0 {
            Self::zero(0)
        } else {
            ExtElement { terms: vec![(ExtMonomial::ONE, c)], degree: 0 }
        }
    }

    pub fn var(i: usize) -> Self {
        ExtElement { terms: vec![(ExtMonomial::var(i), 1)], degree: -1 }
    }

    pub fn monomial(m: ExtMonomial, c: u32) -> Self {
        if c == 0 {
            Self::zero(m.degree())
        } else {
            ExtElement { terms: vec![(m, c)], degree: m.degree() }
        }
    }

    /// Builds an element from arbitrary (monomial, coefficient) pairs, summing
    /// duplicates. Fails if the monomials have different degrees.
    pub fn from_terms(
        field: &FieldContext,
        degree: i32,
        terms: impl IntoIterator<Item = (ExtMonomial, u32)>,
    ) -> Result<Self> {
        let mut v: Vec<(ExtMonomial, u32)> = terms.into_iter().collect();
        for (m, _) in &v {
            if m.degree() != degree {
                return Err(Error::Invalid(format!(
                    "monomial {m} has degree {}, element degree is {degree}",
                    m.degree()
                )));
            }
        }
        v.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(ExtElement { terms: normalize(field, v), degree })
    }

    #[inline]
    pub fn degree(&self) -> i32 {
        self.degree
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(ExtMonomial, u32)] {
        &self.terms
    }

    pub fn coefficient(&self, m: ExtMonomial) -> u32 {
        self.terms
            .binary_search_by(|t| t.0.cmp(&m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Highest variable index occurring, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .iter()
            .filter(|(m, _)| !m.is_one())
            .map(|(m, _)| 31 - m.0.leading_zeros() as usize)
            .max()
    }

    pub fn add(&self, other: &ExtElement, field: &FieldContext) -> ExtElement {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        debug_assert_eq!(self.degree, other.degree);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (self.terms[i], other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a.1, b.1);
                    if c != 0 {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ExtElement { terms: out, degree: self.degree }
    }

    pub fn scale(&self, c: u32, field: &FieldContext) -> ExtElement {
        if c == 0 {
            return ExtElement::zero(self.degree);
        }
        ExtElement {
            terms: self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect(),
            degree: self.degree,
        }
    }

    pub fn neg(&self, field: &FieldContext) -> ExtElement {
        self.scale(field.neg(1), field)
    }

    /// Product `self * other` in E.
    pub fn mul(&self, other: &ExtElement, field: &FieldContext) -> ExtElement {
        let degree = self.degree + other.degree;
        let mut acc: Vec<(ExtMonomial, u32)> = Vec::new();
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                if let Some((neg, m)) = mono_mul(ma, mb) {
                    let c = field.mul(ca, cb);
                    acc.push((m, if neg { field.neg(c) } else { c }));
                }
            }
        }
        acc.sort_by(|a, b| a.0.cmp(&b.0));
        ExtElement { terms: normalize(field, acc), degree }
    }

    /// Applies the degree automorphism e_i -> -e_i.
    pub fn twist_sign(&self, field: &FieldContext) -> ExtElement {
        if self.degree % 2 == 0 {
            self.clone()
        } else {
            self.neg(field)
        }
    }

    pub fn to_text(&self, field: &FieldContext) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let sc = field.to_signed(c);
            let (neg, mag) = (sc < 0, sc.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (m.is_one(), mag) {
                (true, _) => s.push_str(&mag.to_string()),
                (false, 1) => s.push_str(&m.to_string()),
                (false, _) => s.push_str(&format!("{mag}*{m}")),
            }
        }
        s
    }
}

fn normalize(field: &FieldContext, sorted: Vec<(ExtMonomial, u32)>) -> Vec<(ExtMonomial, u32)> {
    let mut out: Vec<(ExtMonomial, u32)> = Vec::with_capacity(sorted.len());
    for (m, c) in sorted {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = field.add(last.1, c),
            _ => out.push((m, field.reduce(c))),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> FieldContext {
        FieldContext::default()
    }

    fn mono(ix: &[usize]) -> ExtMonomial {
        ExtMonomial::from_indices(ix).unwrap()
    }

    #[test]
    fn mono_mul_examples() {
        assert_eq!(mono_mul(mono(&[0]), mono(&[1])), Some((false, mono(&[0, 1]))));
        assert_eq!(mono_mul(mono(&[1]), mono(&[0])), Some((true, mono(&[0, 1]))));
        assert_eq!(mono_mul(mono(&[0]), mono(&[0])), None);
        // e2 * e0e1 = e0e1e2 (two transpositions)
        assert_eq!(mono_mul(mono(&[2]), mono(&[0, 1])), Some((false, mono(&[0, 1, 2]))));
        // e1e3 * e0e2: pairs (1,0),(3,0),(3,2) -> odd
        assert_eq!(mono_mul(mono(&[1, 3]), mono(&[0, 2])), Some((true, mono(&[0, 1, 2, 3]))));
    }

    #[test]
    fn lex_order_on_index_sets() {
        let mut v = vec![mono(&[1, 2]), mono(&[0, 2]), mono(&[0, 1]), mono(&[1]), mono(&[0])];
        v.sort();
        assert_eq!(v, vec![mono(&[0]), mono(&[0, 1]), mono(&[0, 2]), mono(&[1]), mono(&[1, 2])]);
    }

    #[test]
    fn square_of_symplectic_pair() {
        let fl = f();
        let q = ExtElement::from_terms(&fl, -2, [(mono(&[0, 1]), 1), (mono(&[2, 3]), 1)]).unwrap();
        let sq = q.mul(&q, &fl);
        assert_eq!(sq, ExtElement::monomial(mono(&[0, 1, 2, 3]), 2));
        let x = ExtElement::var(3);
        assert_eq!(ExtElement::one().mul(&x, &fl), x);
        assert!(ExtElement::var(0).mul(&ExtElement::monomial(mono(&[0, 1]), 1), &fl).is_zero());
    }

    #[test]
    fn graded_dim_examples() {
        let e2 = AlgebraContext::with_prime(2, 32003).unwrap();
        assert_eq!(e2.graded_dim(0, -1), 3);
        assert_eq!(e2.graded_dim(0, 1), 0);
        let e1 = AlgebraContext::with_prime(1, 32003).unwrap();
        assert_eq!(e1.graded_dim(1, -1), 1);
        for n in 0..6 {
            let e = AlgebraContext::with_prime(n, 101).unwrap();
            let total: usize = (-(n as i32) - 3..3).map(|d| e.graded_dim(0, d)).sum();
            assert_eq!(total, 1 << (n + 1));
        }
    }

    #[test]
    fn random_element_range_and_determinism() {
        let e = AlgebraContext::with_prime(3, 32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert!(e.random_element(-5, &mut rng).is_err());
        assert!(e.random_element(1, &mut rng).is_err());
        let s = e.random_element(0, &mut rng).unwrap();
        assert!(s.terms().iter().all(|(m, _)| m.is_one()));
        let a = e.random_element(-2, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        let b = e.random_element(-2, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.degree(), -2);
    }

    fn arb_element(n: usize) -> impl Strategy<Value = ExtElement> {
        (0..=n + 1, any::<u64>()).prop_map(move |(k, seed)| {
            let e = AlgebraContext::with_prime(n, 32003).unwrap();
            e.random_element(-(k as i32), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn anticommutativity(a in arb_element(4), b in arb_element(4)) {
            let fl = f();
            let ab = a.mul(&b, &fl);
            let ba = b.mul(&a, &fl);
            let sign_neg = (a.degree() * b.degree()) % 2 != 0;
            let want = if sign_neg { ba.neg(&fl) } else { ba };
            prop_assert_eq!(ab.terms(), want.terms());
        }

        #[test]
        fn associativity(a in arb_element(4), b in arb_element(4), c in arb_element(4)) {
            let fl = f();
            let l = a.mul(&b, &fl).mul(&c, &fl);
            let r = a.mul(&b.mul(&c, &fl), &fl);
            prop_assert_eq!(l, r);
        }
    }
}
