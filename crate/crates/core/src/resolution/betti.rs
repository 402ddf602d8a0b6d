use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::extended::{Extended, RateValue, Rational, TValue};

/// Graded Betti numbers `β_{i,j}` for `0 <= i <= N`, exact for `j <= D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    columns: Vec<BTreeMap<i64, u64>>,
    degree_cutoff: i64,
    truncated: Vec<bool>,
}

impl BettiTable {
    /// One list of generator degrees per homological index.
    pub fn from_degrees(degrees: &[Vec<i64>], truncated: Vec<bool>, degree_cutoff: i64) -> Self {
        assert_eq!(degrees.len(), truncated.len());
        assert!(!degrees.is_empty());
        let columns = degrees
            .iter()
            .map(|col| {
                let mut m = BTreeMap::new();
                for &j in col {
                    *m.entry(j).or_insert(0) += 1;
                }
                m
            })
            .collect();
        BettiTable {
            columns,
            degree_cutoff,
            truncated,
        }
    }

    pub fn homological_cutoff(&self) -> usize {
        self.columns.len() - 1
    }

    pub fn degree_cutoff(&self) -> i64 {
        self.degree_cutoff
    }

    pub fn betti(&self, i: usize, j: i64) -> u64 {
        self.columns
            .get(i)
            .and_then(|c| c.get(&j).copied())
            .unwrap_or(0)
    }

    /// Total rank of the `i`-th free module.
    pub fn total(&self, i: usize) -> u64 {
        self.columns.get(i).map_or(0, |c| c.values().sum())
    }

    /// `(i, j, β_{i,j})` for every nonzero entry, sorted.
    pub fn entries(&self) -> Vec<(usize, i64, u64)> {
        let mut out = Vec::new();
        for (i, col) in self.columns.iter().enumerate() {
            for (&j, &b) in col {
                out.push((i, j, b));
            }
        }
        out
    }

    pub fn is_column_truncated(&self, i: usize) -> bool {
        self.truncated.get(i).copied().unwrap_or(true)
    }

    pub fn truncated_columns(&self) -> Vec<usize> {
        (0..self.columns.len())
            .filter(|&i| self.truncated[i])
            .collect()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated.iter().any(|&t| t)
    }

    /// Largest degree in column `i`, minus infinity when empty.
    pub fn t(&self, i: usize) -> TValue {
        match self.columns.get(i).and_then(|c| c.keys().next_back()) {
            Some(&j) => Extended::Finite(j),
            None => Extended::NegInf,
        }
    }

    pub fn t_values(&self) -> Vec<TValue> {
        (0..self.columns.len()).map(|i| self.t(i)).collect()
    }

    /// `max (t_i - i)` over the window.
    pub fn regularity_truncated(&self) -> TValue {
        (0..self.columns.len())
            .map(|i| self.t(i).map(|t| t - i as i64))
            .max()
            .unwrap_or(Extended::NegInf)
    }

    /// `max t_i / i` for `1 <= i <= N`.
    pub fn rate_truncated(&self) -> RateValue {
        (1..self.columns.len())
            .map(|i| self.t(i).map(|t| Rational::new(t, i as i64)))
            .max()
            .unwrap_or(Extended::NegInf)
    }

    /// Conventional diagram: column `i`, row `j - i`.
    pub fn to_text(&self) -> String {
        let n = self.columns.len();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self
                .entries()
                .iter()
                .map(|&(i, j, _)| j - i as i64)
                .collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..n).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..n).map(|i| self.total(i).to_string()));
        cells.push(totals);
        for &row in &rows {
            let mut line = vec![format!("{row}:")];
            for i in 0..n {
                let b = self.betti(i, row + i as i64);
                line.push(if b == 0 { ".".into() } else { b.to_string() });
            }
            cells.push(line);
        }
        let width: Vec<usize> = (0..=n)
            .map(|c| cells.iter().map(|l| l[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &cells {
            let mut s = format!("{:>w$}", line[0], w = width[0]);
            for c in 1..=n {
                write!(s, " {:>w$}", line[c], w = width[c]).unwrap();
            }
            out.push_str(s.trim_end());
            out.push('\n');
        }
        let trunc = self.truncated_columns();
        if !trunc.is_empty() {
            let list: Vec<String> = trunc.iter().map(|i| i.to_string()).collect();
            writeln!(out, "truncated columns: {}", list.join(" ")).unwrap();
        }
        out
    }

    /// One `i j count` line per nonzero entry.
    pub fn to_raw(&self) -> String {
        let mut out = String::new();
        for (i, j, b) in self.entries() {
            writeln!(out, "{i} {j} {b}").unwrap();
        }
        out
    }

    pub fn report(&self) -> BettiReport {
        BettiReport {
            betti: self.entries(),
            t: self.t_values(),
            reg_trunc: self.regularity_truncated(),
            rate_trunc: self.rate_truncated(),
            truncated_columns: self.truncated_columns(),
            cutoffs: CutoffReport {
                n: self.homological_cutoff(),
                d: self.degree_cutoff,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CutoffReport {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "D")]
    pub d: i64,
}

/// Machine-readable form of a Betti table.
#[derive(Clone, Debug, Serialize)]
pub struct BettiReport {
    pub betti: Vec<(usize, i64, u64)>,
    pub t: Vec<TValue>,
    pub reg_trunc: TValue,
    pub rate_trunc: RateValue,
    pub truncated_columns: Vec<usize>,
    pub cutoffs: CutoffReport,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic_hypersurface() -> BettiTable {
        let d = vec![vec![0], vec![1], vec![3], vec![4], vec![6], vec![7]];
        BettiTable::from_degrees(&d, vec![false; 6], 20)
    }

    #[test]
    fn invariants_of_periodic_table() {
        let b = cubic_hypersurface();
        let t: Vec<TValue> = [0, 1, 3, 4, 6, 7]
            .iter()
            .map(|&v| Extended::Finite(v))
            .collect();
        assert_eq!(b.t_values(), t);
        assert_eq!(b.regularity_truncated(), Extended::Finite(2));
        assert_eq!(b.rate_truncated(), Extended::Finite(Rational::new(3, 2)));
    }

    #[test]
    fn free_module_table() {
        let b = BettiTable::from_degrees(&[vec![3], vec![], vec![]], vec![false; 3], 10);
        assert_eq!(b.t_values()[1], Extended::NegInf);
        assert_eq!(b.regularity_truncated(), Extended::Finite(3));
        assert_eq!(b.rate_truncated(), Extended::NegInf);
    }

    #[test]
    fn diagram_layout() {
        let b = BettiTable::from_degrees(&[vec![0], vec![1, 1], vec![2]], vec![false; 3], 10);
        assert_eq!(b.to_text(), "       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n");
        assert_eq!(b.to_raw(), "0 0 1\n1 1 2\n2 2 1\n");
        let b = cubic_hypersurface();
        assert_eq!(
            b.to_text(),
            "       0 1 2 3 4 5\ntotal: 1 1 1 1 1 1\n    0: 1 1 . . . .\n    1: . . 1 1 . .\n    2: . . . . 1 1\n"
        );
    }
}
