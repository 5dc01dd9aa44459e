use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator that does not fit the sheaf grid: `T^k` has it in degree `j`
/// but `k - j` is outside `[0, n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrayGenerator {
    pub position: i32,
    pub degree: i32,
    pub count: usize,
}

/// `gamma_{i,j}` on the columns `k = i + j` in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub lo: i32,
    pub hi: i32,
    /// `columns[k - lo][i] = gamma_{i, k - i}`.
    pub columns: Vec<Vec<usize>>,
    pub stray: Vec<StrayGenerator>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRecord {
    pub i: usize,
    pub j: i32,
    pub column: i32,
    pub value: usize,
}

impl CohomologyTable {
    pub fn empty(n: usize, lo: i32, hi: i32) -> Self {
        CohomologyTable { n, lo, hi, columns: vec![vec![0; n + 1]; (hi - lo + 1).max(0) as usize], stray: Vec::new() }
    }

    /// Adds the generators of `T^k` found in degree `j`.
    pub fn add_generators(&mut self, k: i32, j: i32, count: usize) {
        let i = k - j;
        if count == 0 || k < self.lo || k > self.hi {
            return;
        }
        if (0..=self.n as i32).contains(&i) {
            self.columns[(k - self.lo) as usize][i as usize] += count;
        } else {
            self.stray.push(StrayGenerator { position: k, degree: j, count });
        }
    }

    /// `dim H^i(E(j))`; zero outside the window.
    pub fn gamma(&self, i: usize, j: i32) -> usize {
        let k = i as i32 + j;
        if i > self.n || k < self.lo || k > self.hi {
            return 0;
        }
        self.columns[(k - self.lo) as usize][i]
    }

    /// `gamma^k = (gamma_{0,k}, gamma_{1,k-1}, ...)`.
    pub fn column(&self, k: i32) -> &[usize] {
        &self.columns[(k - self.lo) as usize]
    }

    /// Row `i` across the window, left to right.
    pub fn row(&self, i: usize) -> Vec<usize> {
        self.columns.iter().map(|c| c[i]).collect()
    }

    /// True when every generator fits the grid.
    pub fn is_sheaf(&self) -> bool {
        self.stray.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(|&v| v == 0) && self.stray.is_empty()
    }

    /// The same table over `P^m` for `m >= n`, with zero rows added.
    pub fn padded(&self, m: usize) -> Self {
        let mut t = self.clone();
        t.n = m.max(self.n);
        for c in &mut t.columns {
            c.resize(t.n + 1, 0);
        }
        t
    }

    /// Euler characteristic `sum_i (-1)^i gamma_{i,j}` for every `j` whose
    /// whole column set lies in the window.
    pub fn euler_characteristics(&self) -> Vec<(i32, i64)> {
        (self.lo..=self.hi - self.n as i32)
            .map(|j| {
                let chi = (0..=self.n).map(|i| if i % 2 == 0 { 1 } else { -1 } * self.gamma(i, j) as i64).sum();
                (j, chi)
            })
            .collect()
    }

    /// Whether the Euler characteristics agree with one polynomial of degree
    /// at most `n`: all `(n+1)`-st finite differences vanish. `None` when the
    /// window has too few complete columns to test anything.
    pub fn euler_is_polynomial(&self) -> Option<bool> {
        let mut vals: Vec<i64> = self.euler_characteristics().into_iter().map(|(_, v)| v).collect();
        if vals.len() < self.n + 2 {
            return None;
        }
        for _ in 0..=self.n {
            vals = vals.windows(2).map(|w| w[1] - w[0]).collect();
        }
        Some(vals.iter().all(|&v| v == 0))
    }

    /// Nonzero entries as records, ordered by column then row.
    pub fn records(&self) -> Vec<CohomologyRecord> {
        let mut out = Vec::new();
        for (c, col) in self.columns.iter().enumerate() {
            let k = self.lo + c as i32;
            for (i, &value) in col.iter().enumerate() {
                if value != 0 {
                    out.push(CohomologyRecord { i, j: k - i as i32, column: k, value });
                }
            }
        }
        out
    }

    /// Rows `n` down to `0` as comma-separated values with a header of column indices.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("row");
        for k in self.lo..=self.hi {
            s.push_str(&format!(",{k}"));
        }
        s.push('\n');
        for i in (0..=self.n).rev() {
            s.push_str(&i.to_string());
            for v in self.row(i) {
                s.push_str(&format!(",{v}"));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let heads: Vec<String> = (self.lo..=self.hi).map(|k| format!("γ^{k}")).collect();
        let width = heads
            .iter()
            .map(|h| h.chars().count())
            .chain(self.columns.iter().flatten().map(|v| v.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = self.n.to_string().len();
        write!(f, "{:>label$} |", "")?;
        for h in &heads {
            write!(f, " {}{h}", " ".repeat(width - h.chars().count()))?;
        }
        writeln!(f)?;
        writeln!(f, "{}-+{}", "-".repeat(label), "-".repeat((width + 1) * heads.len()))?;
        for i in (0..=self.n).rev() {
            write!(f, "{i:>label$} |")?;
            for v in self.row(i) {
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        for s in &self.stray {
            writeln!(f, "off-grid: {} generator(s) of T^{} in degree {}", s.count, s.position, s.degree)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn projective_line() -> CohomologyTable {
        // O on P^1: h^0(O(j)) = j + 1, h^1(O(j)) = -j - 1.
        let mut t = CohomologyTable::empty(1, -4, 3);
        for k in -4..=3 {
            for i in 0..=1usize {
                let j = k - i as i32;
                let v = if i == 0 { (j + 1).max(0) } else { (-j - 1).max(0) };
                t.add_generators(k, j, v as usize);
            }
        }
        t
    }

    #[test]
    fn layout_and_euler() {
        let t = projective_line();
        assert_eq!(t.row(0), vec![0, 0, 0, 0, 1, 2, 3, 4]);
        assert_eq!(t.gamma(1, -4), 3);
        assert_eq!(t.column(-1), &[0, 1]);
        let s = t.to_string();
        assert!(s.lines().last().unwrap().starts_with("0 |"));
        assert_eq!(t.euler_is_polynomial(), Some(true));
        assert_eq!(t.records().len(), 8);
    }

    #[test]
    fn strays_are_kept() {
        let mut t = CohomologyTable::empty(1, 0, 1);
        t.add_generators(0, -3, 2);
        assert!(!t.is_sheaf());
        assert!(t.to_string().contains("off-grid"));
    }

    #[test]
    fn json_round_trip() {
        let t = projective_line();
        let back: CohomologyTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
