//! The super-plactic monoid: Z2-graded Knuth relations, row insertion into
//! super semistandard tableaux and an exhaustive class oracle.
//!
//! The two relation families, for letters `x, y, z` of the signed alphabet:
//!
//! ```text
//! xzy = (-1)^{x̂ẑ} zxy   if x ≤ y < z with y even, or x < y ≤ z with y odd
//! yxz = (-1)^{x̂ẑ} yzx   if x < y ≤ z with y even, or x ≤ y < z with y odd
//! ```
//!
//! Forgetting the sign gives a monoid whose elements are tableaux.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{guard_power, Error, Result};
use crate::shapes::{enumerate_ssyt, partitions_of, reading_word, Alphabet, SignedLetter, Ssyt};

pub use crate::shapes::SignedWord;

/// Upper bound on `(m+n)^r` for exhaustive word scans.
pub const EXHAUSTIVE_BOUND: u128 = 1_000_000;

/// Which relations generate the congruence.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RelationSet {
    #[default]
    Super,
    /// Drops the second family. Only used to exercise failure reporting.
    #[doc(hidden)]
    FirstFamilyOnly,
}

/// Tableau together with the sign picked up while rewriting a word into its
/// reading word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedNormalForm {
    pub sign: i8,
    pub tableau: Ssyt,
}

fn first_family(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> bool {
    if y.is_odd() {
        x < y && y <= z
    } else {
        x <= y && y < z
    }
}

fn second_family(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> bool {
    if y.is_odd() {
        x <= y && y < z
    } else {
        x < y && y <= z
    }
}

fn sign_of(x: SignedLetter, z: SignedLetter) -> i8 {
    if x.is_odd() && z.is_odd() {
        -1
    } else {
        1
    }
}

/// Moves available on the window `(a, b, c)`: `true` swaps the first two
/// letters, `false` the last two.
fn window_moves(a: SignedLetter, b: SignedLetter, c: SignedLetter, rel: RelationSet) -> Vec<(bool, i8)> {
    let mut out = Vec::new();
    // xzy -> zxy or zxy -> xzy
    if first_family(a, c, b) || first_family(b, c, a) {
        out.push((true, sign_of(a, b)));
    }
    // yxz -> yzx or yzx -> yxz
    if rel == RelationSet::Super && (second_family(b, a, c) || second_family(c, a, b)) {
        out.push((false, sign_of(b, c)));
    }
    out
}

/// All words one relation away from `w`, each with its sign.
pub fn knuth_neighbors(w: &SignedWord) -> Vec<(SignedWord, i8)> {
    knuth_neighbors_with(w, RelationSet::Super)
}

pub fn knuth_neighbors_with(w: &SignedWord, rel: RelationSet) -> Vec<(SignedWord, i8)> {
    let l = w.letters();
    let mut out: Vec<(SignedWord, i8)> = Vec::new();
    for p in 0..l.len().saturating_sub(2) {
        for (first, s) in window_moves(l[p], l[p + 1], l[p + 2], rel) {
            let mut v = l.to_vec();
            if first {
                v.swap(p, p + 1);
            } else {
                v.swap(p + 1, p + 2);
            }
            let v = SignedWord(v);
            if !out.iter().any(|(u, _)| *u == v) {
                out.push((v, s));
            }
        }
    }
    out
}

/// Row insertion. In each row the leftmost entry `y` with `y > a`, or
/// `y = a` when `a` is odd, is bumped into the next row.
pub fn insert(t: &Ssyt, a: SignedLetter) -> Ssyt {
    let mut rows = t.rows().to_vec();
    let mut carry = a;
    for row in rows.iter_mut() {
        let pos = row
            .iter()
            .position(|&y| y > carry || (y == carry && carry.is_odd()));
        match pos {
            Some(k) => carry = std::mem::replace(&mut row[k], carry),
            None => {
                row.push(carry);
                return Ssyt::from_rows_unchecked(rows);
            }
        }
    }
    rows.push(vec![carry]);
    Ssyt::from_rows_unchecked(rows)
}

/// Inserts the letters of `w` from left to right into the empty tableau.
pub fn insertion_tableau(w: &SignedWord) -> Ssyt {
    w.letters().iter().fold(Ssyt::empty(), |t, &a| insert(&t, a))
}

/// Signs of every word in the unsigned class of `w`, relative to `w`.
/// Fails if two rewriting paths disagree.
fn signed_class(w: &SignedWord, rel: RelationSet) -> Result<HashMap<SignedWord, i8>> {
    let mut signs = HashMap::from([(w.clone(), 1i8)]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        let su = signs[&u];
        for (v, s) in knuth_neighbors_with(&u, rel) {
            match signs.get(&v) {
                Some(&sv) if sv != su * s => {
                    return Err(Error::InconsistentSign { word: w.to_string() });
                }
                Some(_) => {}
                None => {
                    signs.insert(v.clone(), su * s);
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(signs)
}

/// Insertion tableau of `w` and the sign `ε` with `w = ε · reading_word(T)`
/// modulo the signed relations.
pub fn normal_form(w: &SignedWord) -> Result<SignedNormalForm> {
    let tableau = insertion_tableau(w);
    let signs = signed_class(w, RelationSet::Super)?;
    let target = reading_word(&tableau);
    let sign = *signs.get(&target).ok_or_else(|| Error::InsertionMismatch {
        word: w.to_string(),
    })?;
    Ok(SignedNormalForm { sign, tableau })
}

/// Normal form of the concatenated reading words.
pub fn plactic_product(t1: &Ssyt, t2: &Ssyt, alphabet: Alphabet) -> Result<SignedNormalForm> {
    t1.check_alphabet(alphabet)?;
    t2.check_alphabet(alphabet)?;
    normal_form(&reading_word(t1).concat(&reading_word(t2)))
}

/// Unsigned product: insert the reading word of `t2` into `t1`.
pub fn unsigned_product(t1: &Ssyt, t2: &Ssyt) -> Ssyt {
    reading_word(t2)
        .letters()
        .iter()
        .fold(t1.clone(), |t, &a| insert(&t, a))
}

/// Partition of all words of length `r` into unsigned Knuth classes. Classes
/// are sorted internally and by their least word.
pub fn enumerate_classes(m: usize, n: usize, r: usize) -> Result<Vec<Vec<SignedWord>>> {
    enumerate_classes_with(m, n, r, RelationSet::Super)
}

pub fn enumerate_classes_with(m: usize, n: usize, r: usize, rel: RelationSet) -> Result<Vec<Vec<SignedWord>>> {
    let alphabet = Alphabet::new(m, n);
    guard_power("(m+n)^r", alphabet.size(), r, EXHAUSTIVE_BOUND)?;
    let words = SignedWord::all_words(alphabet, r);
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, w) in words.iter().enumerate() {
        for (v, _) in knuth_neighbors_with(w, rel) {
            let (a, b) = (find(&mut parent, i), find(&mut parent, v.lex_index(alphabet)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<SignedWord>> = BTreeMap::new();
    for (i, w) in words.into_iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(w);
    }
    Ok(groups.into_values().collect())
}

/// Outcome of the exhaustive class/tableau comparison.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassReport {
    pub m: usize,
    pub n: usize,
    pub length: usize,
    pub classes: usize,
    pub tableaux: usize,
    pub by_shape: BTreeMap<String, usize>,
    pub one_reading_word_per_class: bool,
    pub insertion_constant_on_classes: bool,
    pub sign_consistent: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl ClassReport {
    /// `{"classes":N,"byShape":{…},"signConsistent":true, …}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Checks that every Knuth class of length-`r` words holds exactly one tableau
/// reading word, that insertion is constant on classes, that the number of
/// classes is the number of SSYT of size `r`, and that signs are path
/// independent.
pub fn verify_class_bijection(m: usize, n: usize, r: usize) -> Result<ClassReport> {
    verify_class_bijection_with(m, n, r, RelationSet::Super)
}

pub fn verify_class_bijection_with(m: usize, n: usize, r: usize, rel: RelationSet) -> Result<ClassReport> {
    let classes = enumerate_classes_with(m, n, r, rel)?;
    let mut reading_words: HashMap<SignedWord, Ssyt> = HashMap::new();
    for lam in partitions_of(r) {
        for t in enumerate_ssyt(&lam, m, n) {
            reading_words.insert(reading_word(&t), t);
        }
    }
    let tableaux = reading_words.len();
    let mut failures = Vec::new();
    let mut by_shape: BTreeMap<String, usize> = BTreeMap::new();
    let (mut one_word, mut constant, mut signs_ok) = (true, true, true);

    for class in &classes {
        let hits: Vec<&SignedWord> = class.iter().filter(|w| reading_words.contains_key(*w)).collect();
        if hits.len() != 1 {
            one_word = false;
            failures.push(format!("class of {} has {} reading words", class[0], hits.len()));
        }
        if let Some(w) = hits.first() {
            *by_shape.entry(reading_words[*w].shape().to_string()).or_default() += 1;
        }
        let t0 = insertion_tableau(&class[0]);
        if let Some(w) = class.iter().find(|w| insertion_tableau(w) != t0) {
            constant = false;
            failures.push(format!("insertion differs on {} and {}", class[0], w));
        }
        if hits.len() == 1 && reading_words[hits[0]] != t0 {
            constant = false;
            failures.push(format!("class of {} inserts to {t0}, not {}", class[0], hits[0]));
        }
        match signed_class(&class[0], rel) {
            Ok(s) if s.len() == class.len() => {}
            Ok(_) => {
                failures.push(format!("class of {} not connected", class[0]));
            }
            Err(_) => {
                signs_ok = false;
                failures.push(format!("sign conflict in class of {}", class[0]));
            }
        }
    }
    if classes.len() != tableaux {
        failures.push(format!("{} classes but {} tableaux", classes.len(), tableaux));
    }
    let pass = failures.is_empty();
    Ok(ClassReport {
        m,
        n,
        length: r,
        classes: classes.len(),
        tableaux,
        by_shape,
        one_reading_word_per_class: one_word,
        insertion_constant_on_classes: constant,
        sign_consistent: signs_ok,
        pass,
        failures,
    })
}

/// Words of length `r` whose signed class contains a conflict.
pub fn sign_conflicts(m: usize, n: usize, r: usize) -> Result<Vec<SignedWord>> {
    let classes = enumerate_classes(m, n, r)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for class in classes {
        if seen.insert(class[0].clone()) && signed_class(&class[0], RelationSet::Super).is_err() {
            out.push(class[0].clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{count_ssyt, is_valid_ssyt};

    fn w(s: &str) -> SignedWord {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Ssyt {
        s.parse().unwrap()
    }

    #[test]
    fn neighbors_even() {
        let ns = knuth_neighbors(&w("1,2,1"));
        assert!(ns.contains(&(w("2,1,1"), 1)));
        assert!(knuth_neighbors(&SignedWord::default()).is_empty());
        assert!(knuth_neighbors(&w("1,2")).is_empty());
    }

    #[test]
    fn neighbors_odd_carry_sign() {
        // window z x y = 2',1',2' with x < y ≤ z and y odd
        let ns = knuth_neighbors(&w("2',1',2'"));
        assert_eq!(ns, vec![(w("1',2',2'"), -1)]);
        // 2',2',1' is a different plactic class
        assert_ne!(insertion_tableau(&w("2',1',2'")), insertion_tableau(&w("2',2',1'")));
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(insert(&Ssyt::empty(), SignedLetter::even(1)), t("1"));
        assert_eq!(insert(&t("1"), SignedLetter::even(1)), t("1,1"));
        assert_eq!(insert(&t("1'"), SignedLetter::odd(1)), t("1'/1'"));
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&w("2,1,1")).unwrap();
        assert_eq!(nf, SignedNormalForm { sign: 1, tableau: t("1,1/2") });
        let nf = normal_form(&w("1',1'")).unwrap();
        assert_eq!(nf, SignedNormalForm { sign: 1, tableau: t("1'/1'") });
        let tab = t("1,1'/1'");
        assert_eq!(normal_form(&tab.reading_word()).unwrap(), SignedNormalForm { sign: 1, tableau: tab });
        // 1',2',2' = -(2',1',2') and the latter is a reading word
        let nf = normal_form(&w("1',2',2'")).unwrap();
        assert_eq!(nf.tableau, t("1',2'/2'"));
        assert_eq!(nf.sign, -1);
    }

    #[test]
    fn product_examples() {
        let a = Alphabet::new(1, 1);
        let t1 = t("1,1'/1'");
        assert_eq!(plactic_product(&t1, &Ssyt::empty(), a).unwrap().tableau, t1);
        assert_eq!(plactic_product(&t("1"), &t("1"), a).unwrap(), SignedNormalForm { sign: 1, tableau: t("1,1") });
        assert_eq!(plactic_product(&t("1'"), &t("1'"), a).unwrap(), SignedNormalForm { sign: 1, tableau: t("1'/1'") });
        assert!(matches!(
            plactic_product(&t("2"), &t("1"), a),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(1, 1, 3).unwrap().len(), 6);
        assert_eq!(enumerate_classes(1, 0, 2).unwrap().len(), 1);
        let two_even = enumerate_classes(2, 0, 3).unwrap().len();
        let expected: usize = partitions_of(3).iter().map(|l| count_ssyt(l, 2, 0)).sum();
        assert_eq!(two_even, expected);
        // 4 + 2 + 0: no three-row shape fits two even letters
        assert_eq!(two_even, 6);
        assert!(matches!(enumerate_classes(10, 0, 7), Err(Error::SizeGuardExceeded { .. })));
    }

    #[test]
    fn bijection_small() {
        for (m, n, r, classes) in [(1, 1, 3, 6), (1, 1, 4, 8)] {
            let rep = verify_class_bijection(m, n, r).unwrap();
            assert!(rep.pass, "{:?}", rep.failures);
            assert_eq!(rep.classes, classes);
        }
        assert!(verify_class_bijection(2, 1, 3).unwrap().pass);
    }

    #[test]
    fn corrupted_relations_fail() {
        let rep = verify_class_bijection_with(2, 0, 3, RelationSet::FirstFamilyOnly).unwrap();
        assert!(!rep.pass);
        assert!(rep.classes > rep.tableaux);
    }

    #[test]
    fn insertion_is_valid_on_all_short_words() {
        for wd in SignedWord::all_words(Alphabet::new(2, 2), 5) {
            let tab = insertion_tableau(&wd);
            assert!(is_valid_ssyt(tab.rows()).unwrap(), "{wd}");
            assert_eq!(tab.size(), 5);
        }
    }

    #[test]
    fn report_json_keys() {
        let j = verify_class_bijection(1, 1, 3).unwrap().to_json();
        assert_eq!(j["classes"], 6);
        assert_eq!(j["signConsistent"], true);
        assert_eq!(j["byShape"]["(2,1)"], 2);
    }
}
