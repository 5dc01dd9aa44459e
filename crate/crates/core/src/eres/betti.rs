use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Graded Betti numbers `beta_{i,j}`: `i` homological, `j` internal degree.
/// Displayed with column `i` and row `i + j` over E (generators in degree
/// `-1`) or `j - i` over S, highest row first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
    over_s: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRecord {
    pub i: usize,
    pub j: i32,
    pub row: i32,
    pub value: usize,
}

impl BettiTable {
    /// An empty table with the polynomial-ring row convention.
    pub fn over_s() -> Self {
        BettiTable { entries: BTreeMap::new(), over_s: true }
    }

    pub fn row_of(&self, i: usize, j: i32) -> i32 {
        if self.over_s {
            j - i as i32
        } else {
            j + i as i32
        }
    }

    fn degree_at(&self, i: usize, row: i32) -> i32 {
        if self.over_s {
            row + i as i32
        } else {
            row - i as i32
        }
    }

    pub fn add(&mut self, i: usize, j: i32, v: usize) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, i32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn max_row(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| self.row_of(i, j)).max()
    }

    pub fn min_row(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| self.row_of(i, j)).min()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Entries with homological index at most `i_max`.
    pub fn truncated(&self, i_max: usize) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().filter(|(k, _)| k.0 <= i_max).map(|(&k, &v)| (k, v)).collect(),
            over_s: self.over_s,
        }
    }

    pub fn records(&self) -> Vec<BettiRecord> {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiRecord { i, j, row: self.row_of(i, j), value })
            .collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(top), Some(bot), Some(imax)) = (self.max_row(), self.min_row(), self.max_index()) else {
            return writeln!(f, "(zero)");
        };
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(imax.to_string().len());
        let label = top.to_string().len().max(bot.to_string().len());
        write!(f, "{:>label$} |", "")?;
        for i in 0..=imax {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}-+{}", "-".repeat(label), "-".repeat((width + 1) * (imax + 1)))?;
        for row in (bot..=top).rev() {
            write!(f, "{row:>label$} |")?;
            for i in 0..=imax {
                let v = self.get(i, self.degree_at(i, row));
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
