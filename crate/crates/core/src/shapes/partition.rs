use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition, i.e. a Young diagram listed by row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Fails unless the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Shape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        conjugate(self)
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
    }

    /// Every partition contained in this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(lam: &[usize], row: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if row >= lam.len() {
                return;
            }
            for v in (1..=bound.min(lam[row])).rev() {
                cur.push(v);
                rec(lam, row + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated parts, `2,1`. Empty string (or `0`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `r`, lexicographically decreasing: `(3), (2,1), (1,1,1)`.
pub fn partitions_of(r: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

/// Transposed diagram.
pub fn conjugate(lambda: &Partition) -> Partition {
    let cols = lambda.part(0);
    Partition(
        (0..cols)
            .map(|j| lambda.0.iter().take_while(|&&l| l > j).count())
            .collect(),
    )
}

/// `λ_j ≤ n` for every row `j > m` (one-based): the diagram fits in the
/// `(m, n)`-hook.
pub fn in_hook(lambda: &Partition, m: usize, n: usize) -> bool {
    lambda.0.iter().skip(m).all(|&l| l <= n)
}

/// Partitions of `r` inside the `(m, n)`-hook.
pub fn hook_partitions(m: usize, n: usize, r: usize) -> Vec<Partition> {
    partitions_of(r)
        .into_iter()
        .filter(|l| in_hook(l, m, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn hook_predicate() {
        assert!(in_hook(&p(&[2, 1]), 1, 1));
        assert!(!in_hook(&p(&[2, 2]), 1, 1));
        assert!(in_hook(&p(&[5, 3]), 2, 0));
        assert!(!in_hook(&p(&[1, 1, 1]), 2, 0));
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn subpartitions_of_two_one() {
        let subs = p(&[2, 1]).subpartitions();
        assert_eq!(subs.len(), 5);
        assert!(subs.iter().all(|m| p(&[2, 1]).contains(m)));
    }
}
