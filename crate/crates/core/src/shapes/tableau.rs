use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::{BigUint, One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{Alphabet, Partition, SignedLetter, SignedWord};
use crate::error::{Error, Result};

/// Super semistandard Young tableau.
///
/// Rows weakly increase with odd letters never repeated in a row; columns
/// weakly increase with even letters never repeated in a column.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Ssyt {
    shape: Partition,
    rows: Vec<Vec<SignedLetter>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<SignedLetter>>,
}

impl TryFrom<TableauJson> for Ssyt {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        let t = Ssyt::new(j.rows)?;
        if t.shape.parts() != j.shape.as_slice() {
            return Err(Error::Shape(format!(
                "declared shape {:?} does not match rows {}",
                j.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<Ssyt> for TableauJson {
    fn from(t: Ssyt) -> Self {
        TableauJson {
            shape: t.shape.parts().to_vec(),
            rows: t.rows,
        }
    }
}

fn row_ok(a: SignedLetter, b: SignedLetter) -> bool {
    a < b || (a == b && !a.is_odd())
}

fn col_ok(above: SignedLetter, below: SignedLetter) -> bool {
    above < below || (above == below && above.is_odd())
}

fn profile(rows: &[Vec<SignedLetter>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
}

/// Checks the row and column conditions. Fails only when the row lengths do
/// not form a partition.
pub fn is_valid_ssyt(rows: &[Vec<SignedLetter>]) -> Result<bool> {
    profile(rows)?;
    for (i, row) in rows.iter().enumerate() {
        if row.windows(2).any(|w| !row_ok(w[0], w[1])) {
            return Ok(false);
        }
        if let Some(below) = rows.get(i + 1) {
            if below.iter().zip(row).any(|(b, a)| !col_ok(*a, *b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<SignedLetter>>) -> Result<Self> {
        let shape = profile(&rows)?;
        if !is_valid_ssyt(&rows)? {
            let t = Self { shape, rows };
            return Err(Error::InvalidTableau(t.to_string()));
        }
        Ok(Self { shape, rows })
    }

    pub fn empty() -> Self {
        Self {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// Caller guarantees validity.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<SignedLetter>>) -> Self {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .expect("rows form a partition");
        debug_assert!(is_valid_ssyt(&rows).unwrap());
        Self { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<SignedLetter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<SignedLetter>> {
        self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn letters(&self) -> impl Iterator<Item = SignedLetter> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Letter multiplicities indexed by alphabet position.
    pub fn weight(&self, alphabet: Alphabet) -> Vec<u32> {
        let mut w = vec![0; alphabet.size()];
        for a in self.letters() {
            w[alphabet.position(a)] += 1;
        }
        w
    }

    pub fn check_alphabet(&self, alphabet: Alphabet) -> Result<()> {
        self.letters().try_for_each(|a| alphabet.check(a))
    }

    pub fn reading_word(&self) -> SignedWord {
        reading_word(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }
}

/// Rows from the bottom row up, each read left to right.
pub fn reading_word(t: &Ssyt) -> SignedWord {
    SignedWord(t.rows.iter().rev().flatten().copied().collect())
}

/// Every SSYT of shape `lambda` over the `m|n` alphabet, sorted by reading
/// word.
pub fn enumerate_ssyt(lambda: &Partition, m: usize, n: usize) -> Vec<Ssyt> {
    let letters = Alphabet::new(m, n).letters();
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut rows: Vec<Vec<SignedLetter>> = lambda
        .parts()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    let mut out = Vec::new();
    fill(&cells, 0, &letters, &mut rows, &mut out);
    out.sort_by_cached_key(reading_word);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    letters: &[SignedLetter],
    rows: &mut Vec<Vec<SignedLetter>>,
    out: &mut Vec<Ssyt>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(Ssyt::from_rows_unchecked(rows.clone()));
        return;
    };
    for &a in letters {
        if j > 0 && !row_ok(rows[i][j - 1], a) {
            continue;
        }
        if i > 0 && !col_ok(rows[i - 1][j], a) {
            continue;
        }
        rows[i].push(a);
        fill(cells, k + 1, letters, rows, out);
        rows[i].pop();
    }
}

pub fn count_ssyt(lambda: &Partition, m: usize, n: usize) -> usize {
    enumerate_ssyt(lambda, m, n).len()
}

/// `f^λ`, the number of standard Young tableaux of shape `λ`.
///
/// Shapes with at most 8 cells are counted by removing the cell holding the
/// largest entry recursively; larger ones use the hook-length formula.
pub fn count_standard(lambda: &Partition) -> u128 {
    if lambda.size() <= 8 {
        count_standard_recursive(lambda)
    } else {
        count_standard_hook_length(lambda)
    }
}

/// Recursion over the corner holding the largest entry.
pub fn count_standard_recursive(lambda: &Partition) -> u128 {
    fn rec(parts: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = parts[i] > 0 && parts.get(i + 1).is_none_or(|&next| next < parts[i]);
            if is_corner {
                parts[i] -= 1;
                total += rec(parts, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total);
        total
    }
    rec(&mut lambda.parts().to_vec(), &mut HashMap::new())
}

/// `|λ|! / ∏ hook(c)`.
pub fn count_standard_hook_length(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    for k in 2..=lambda.size() {
        num *= k;
    }
    let mut den = BigUint::one();
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i) - j - 1;
        let leg = conj.part(j) - i - 1;
        den *= arm + leg + 1;
    }
    (num / den).to_u128().expect("f^lambda fits in u128")
}

impl fmt::Display for Ssyt {
    /// Rows joined by `/`, letters by `,`: `1,1'/1'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| SignedWord(r.clone()).to_string())
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ssyt[{self}]")
    }
}

impl FromStr for Ssyt {
    type Err = Error;

    /// Either the JSON form or rows like `1,1'/1'`. Empty string is the empty tableau.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split('/')
            .map(|r| {
                let w: SignedWord = r.parse()?;
                if w.is_empty() {
                    return Err(Error::Parse(format!("empty row in {s:?}")));
                }
                Ok(w.0)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::partitions_of;

    fn e(i: u32) -> SignedLetter {
        SignedLetter::even(i)
    }
    fn o(i: u32) -> SignedLetter {
        SignedLetter::odd(i)
    }
    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_one_over_one_one() {
        let ts = enumerate_ssyt(&p(&[2, 1]), 1, 1);
        let rows: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![e(1), e(1)], vec![o(1)]], vec![vec![e(1), o(1)], vec![o(1)]]]);
    }

    #[test]
    fn single_row_and_column() {
        for r in 0..6 {
            let lam = Partition::new(if r == 0 { vec![] } else { vec![r] }).unwrap();
            assert_eq!(count_ssyt(&lam, 1, 0), 1);
        }
        let col = enumerate_ssyt(&p(&[1, 1]), 0, 1);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].rows(), &[vec![o(1)], vec![o(1)]]);
    }

    #[test]
    fn validity_rules() {
        assert!(is_valid_ssyt(&[vec![e(1), e(1)], vec![o(1)]]).unwrap());
        assert!(!is_valid_ssyt(&[vec![o(1), o(1)]]).unwrap());
        assert!(!is_valid_ssyt(&[vec![e(1)], vec![e(1)]]).unwrap());
        assert!(is_valid_ssyt(&[vec![o(1)], vec![o(1)]]).unwrap());
        assert!(matches!(
            is_valid_ssyt(&[vec![e(1)], vec![e(2), e(2)]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(is_valid_ssyt(&[vec![]]), Err(Error::Shape(_))));
    }

    #[test]
    fn standard_counts() {
        assert_eq!(count_standard(&p(&[2, 1])), 2);
        assert_eq!(count_standard(&p(&[5])), 1);
        assert_eq!(count_standard(&p(&[2, 2])), 2);
        assert_eq!(count_standard(&p(&[3, 2, 1])), 16);
        for r in 0..=8 {
            for lam in partitions_of(r) {
                assert_eq!(count_standard_recursive(&lam), count_standard_hook_length(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn reading_words() {
        let t = Ssyt::new(vec![vec![e(1), e(1)], vec![o(1)]]).unwrap();
        assert_eq!(reading_word(&t).to_string(), "1',1,1");
        let t = Ssyt::new(vec![vec![e(1), e(2)]]).unwrap();
        assert_eq!(reading_word(&t).to_string(), "1,2");
        let t = Ssyt::new(vec![vec![e(1)], vec![o(1)]]).unwrap();
        assert_eq!(reading_word(&t).to_string(), "1',1");
    }

    #[test]
    fn json_form() {
        let t = Ssyt::new(vec![vec![e(1), o(1)], vec![o(1)]]).unwrap();
        let j = t.to_json();
        assert_eq!(j, r#"{"shape":[2,1],"rows":[["1","1'"],["1'"]]}"#);
        assert_eq!(j.parse::<Ssyt>().unwrap(), t);
        assert!(r#"{"shape":[2],"rows":[["1","1'"],["1'"]]}"#.parse::<Ssyt>().is_err());
        assert!(r#"{"shape":[2],"rows":[["1'","1'"]]}"#.parse::<Ssyt>().is_err());
        assert_eq!("1,1'/1'".parse::<Ssyt>().unwrap(), t);
    }
}
