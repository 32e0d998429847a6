//! The free tensor superalgebra `T(V)` on the signed alphabet, q-deformed
//! superbrackets, the degree-3 relation generators (classical double brackets
//! and their deformations Γ), and graded dimensions of the quotient.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{guard_power, Error, Result};
use crate::exactmath::{
    int, LaurentPoly, Rational, RationalFunction, SpanBasis, SparseVec,
};
use crate::shapes::{count_ssyt, partitions_of, Alphabet, Partition, SignedLetter, SignedWord, Ssyt};

/// Upper bound on `(m+n)^r` for ideal rank computations.
pub const IDEAL_BOUND: u128 = 100_000;

/// Formal linear combination of basis words with coefficients in `ℚ(q)`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<SignedWord, RationalFunction>,
}

#[derive(Serialize)]
struct TermJson {
    word: Vec<SignedLetter>,
    coefficient: CoeffJson,
}

#[derive(Serialize)]
struct CoeffJson {
    num: String,
    den: String,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: SignedWord) -> Self {
        let mut t = Self::zero();
        t.add_term(w, RationalFunction::one());
        t
    }

    pub fn letter(a: SignedLetter) -> Self {
        Self::word(SignedWord(vec![a]))
    }

    pub fn add_term(&mut self, w: SignedWord, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedWord, &RationalFunction)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &SignedWord) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Z2-degree if every word has the same one; `None` for mixed elements.
    /// Zero is reported as even.
    pub fn parity(&self) -> Option<u8> {
        let mut ps = self.terms.keys().map(SignedWord::parity);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    /// Common word length, if homogeneous in tensor degree.
    pub fn degree(&self) -> Option<usize> {
        let mut ls = self.terms.keys().map(SignedWord::len);
        let first = ls.next().unwrap_or(0);
        ls.all(|l| l == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), c.clone() * v.clone());
        }
        out
    }

    /// Concatenation product `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }

    /// Coordinates in the lexicographic word basis of `V^{⊗r}`, at `q = q0`.
    pub fn eval_vector(&self, alphabet: Alphabet, q0: &Rational) -> Result<SparseVec<Rational>> {
        let mut out = SparseVec::new();
        for (w, c) in &self.terms {
            let v = c.eval(q0)?;
            if !v.is_zero() {
                out.insert(w.lex_index(alphabet), v);
            }
        }
        Ok(out)
    }

    /// Symbolic coordinates in the lexicographic word basis.
    pub fn vector(&self, alphabet: Alphabet) -> SparseVec<RationalFunction> {
        self.terms
            .iter()
            .map(|(w, c)| (w.lex_index(alphabet), c.clone()))
            .collect()
    }

    /// `[{"word":["1","1'"],"coefficient":{"num":"q","den":"1"}}, …]`
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(w, c)| TermJson {
                word: w.letters().to_vec(),
                coefficient: CoeffJson {
                    num: c.numerator().to_string(),
                    den: c.denominator().to_string(),
                },
            })
            .collect();
        serde_json::to_value(terms).expect("tensor element serializes")
    }
}

/// `u⊗v − (−1)^{û v̂} c · v⊗u`.
pub fn qbracket(u: &TensorElement, v: &TensorElement, c: &RationalFunction) -> Result<TensorElement> {
    let pu = u.parity().ok_or(Error::Inhomogeneous)?;
    let pv = v.parity().ok_or(Error::Inhomogeneous)?;
    let sign = if pu * pv == 1 { -c.clone() } else { c.clone() };
    Ok(u.tensor(v).sub(&v.tensor(u).scale(&sign)))
}

/// Plain superbracket `⟦u, v⟧ = uv − (−1)^{û v̂} vu`.
pub fn bracket(u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
    qbracket(u, v, &RationalFunction::one())
}

fn lt(a: SignedLetter) -> TensorElement {
    TensorElement::letter(a)
}

/// `⟦x, ⟦y, z⟧⟧` for letters.
pub fn double_bracket(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> TensorElement {
    bracket(&lt(x), &bracket(&lt(y), &lt(z)).unwrap()).unwrap()
}

/// `{⟦a_i, ⟦a_j, a_k⟧⟧}` over all letter triples, in lexicographic order of
/// `(i, j, k)`. A spanning set, not a basis.
pub fn double_bracket_basis(m: usize, n: usize) -> Vec<TensorElement> {
    let letters = Alphabet::new(m, n).letters();
    let mut out = Vec::new();
    for &x in &letters {
        for &y in &letters {
            for &z in &letters {
                out.push(double_bracket(x, y, z));
            }
        }
    }
    out
}

/// Where the deformation parameter of a subscripted bracket `⟦x, y⟧_c` sits.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub enum BracketConvention {
    /// `xy − (−1)^{x̂ŷ} c·yx`
    #[default]
    ScaleSecond,
    /// `c·xy − (−1)^{x̂ŷ} yx`
    ScaleFirst,
}

impl BracketConvention {
    fn apply(self, u: &TensorElement, v: &TensorElement, c: &RationalFunction) -> TensorElement {
        match self {
            BracketConvention::ScaleSecond => qbracket(u, v, c).unwrap(),
            BracketConvention::ScaleFirst => {
                let plain = qbracket(u, v, &RationalFunction::zero()).unwrap();
                let swapped = plain.sub(&u.tensor(v));
                u.tensor(v).scale(c).add(&swapped)
            }
        }
    }
}

/// One deformed degree-3 relation, tagged with the SSYT of shape (2,1) that
/// indexes it.
#[derive(Clone, Debug)]
pub struct GammaElement {
    pub family: u8,
    pub tableau: Ssyt,
    pub element: TensorElement,
}

fn q_pow(e: i32) -> RationalFunction {
    LaurentPoly::q_pow(e).into()
}

fn tab(top: [SignedLetter; 2], bottom: SignedLetter) -> Ssyt {
    Ssyt::new(vec![top.to_vec(), vec![bottom]]).expect("Γ label is a valid SSYT")
}

/// The deformed generators of the degree-3 relation module, one per SSYT of
/// shape (2,1). With `a < b < c` letters:
///
/// ```text
/// 1: ⟦b,⟦c,a⟧⟧_{q^-2} + ε q^-1 ⟦c,⟦a,b⟧⟧      tableau a c / b
/// 2: ⟦⟦c,a⟧,b⟧_{q^-2} + ε q^-1 ⟦⟦b,c⟧,a⟧      tableau a b / c
/// 3: ⟦⟦a,b⟧,b⟧_{q^-1}   (a < b, b odd)        tableau a b / b
/// 4: ⟦b,⟦a,b⟧⟧_{q^-1}   (a < b, b even)       tableau a b / b
/// 5: ⟦b,⟦b,c⟧⟧_{q^-1}   (b < c, b odd)        tableau b c / b
/// 6: ⟦⟦b,c⟧,b⟧_{q^-1}   (b < c, b even)       tableau b b / c
/// ```
///
/// The subscript deforms the outer bracket; inner brackets are plain. The
/// sign is `ε = −(−1)^{âb̂+b̂ĉ}` (see [`GammaSign`]).
pub fn gamma_elements(m: usize, n: usize) -> Vec<GammaElement> {
    gamma_elements_with(m, n, BracketConvention::default(), GammaSign::default())
}

/// Sign `ε` of the second term in the three-letter families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub enum GammaSign {
    /// `ε = −(−1)^{âb̂+b̂ĉ}`: `+1` only for the parity pattern (even, odd, odd).
    #[default]
    Graded,
    /// `ε = +1` for every parity pattern.
    Plus,
}

impl GammaSign {
    fn value(self, a: SignedLetter, b: SignedLetter, c: SignedLetter) -> RationalFunction {
        let e = match self {
            GammaSign::Plus => 1,
            GammaSign::Graded if (a.bit() * b.bit() + b.bit() * c.bit()) % 2 == 1 => 1,
            GammaSign::Graded => -1,
        };
        int(e).into()
    }
}

pub fn gamma_elements_with(m: usize, n: usize, conv: BracketConvention, sign: GammaSign) -> Vec<GammaElement> {
    let letters = Alphabet::new(m, n).letters();
    let br = |u: &TensorElement, v: &TensorElement| bracket(u, v).unwrap();
    let qbr = |u: &TensorElement, v: &TensorElement, e: i32| conv.apply(u, v, &q_pow(e));
    let mut out = Vec::new();
    for (ia, &a) in letters.iter().enumerate() {
        for (ib, &b) in letters.iter().enumerate().skip(ia + 1) {
            for &c in letters.iter().skip(ib + 1) {
                let (xa, xb, xc) = (lt(a), lt(b), lt(c));
                let second = q_pow(-1) * sign.value(a, b, c);
                let g1 = qbr(&xb, &br(&xc, &xa), -2).add(&br(&xc, &br(&xa, &xb)).scale(&second));
                out.push(GammaElement {
                    family: 1,
                    tableau: tab([a, c], b),
                    element: g1,
                });
                let g2 = qbr(&br(&xc, &xa), &xb, -2).add(&br(&br(&xb, &xc), &xa).scale(&second));
                out.push(GammaElement {
                    family: 2,
                    tableau: tab([a, b], c),
                    element: g2,
                });
            }
        }
    }
    for (ia, &a) in letters.iter().enumerate() {
        for &b in letters.iter().skip(ia + 1) {
            let (xa, xb) = (lt(a), lt(b));
            // repeated letter is the larger one
            let (family, element) = if b.is_odd() {
                (3, qbr(&br(&xa, &xb), &xb, -1))
            } else {
                (4, qbr(&xb, &br(&xa, &xb), -1))
            };
            out.push(GammaElement {
                family,
                tableau: tab([a, b], b),
                element,
            });
            // repeated letter is the smaller one
            let (family, tableau, element) = if a.is_odd() {
                (5, tab([a, b], a), qbr(&xa, &br(&xa, &xb), -1))
            } else {
                (6, tab([a, a], b), qbr(&br(&xa, &xb), &xa, -1))
            };
            out.push(GammaElement {
                family,
                tableau,
                element,
            });
        }
    }
    out.sort_by_cached_key(|g| g.tableau.reading_word());
    out
}

/// Specialization parameter for rank computations: the classical relations
/// at `q = 1`, or Γ at a chosen rational point.
#[derive(Clone, PartialEq, Debug)]
pub enum Specialization {
    Classical,
    At(Rational),
}

impl Specialization {
    fn q0(&self) -> Rational {
        match self {
            Specialization::Classical => Rational::one(),
            Specialization::At(q) => q.clone(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Specialization::Classical => "classical".into(),
            Specialization::At(q) => format!("q={}", crate::exactmath::format_rational(q)),
        }
    }
}

/// Basis of the degree-3 relation space as rational vectors in `V^{⊗3}`.
pub fn degree_three_basis(m: usize, n: usize, spec: &Specialization) -> Result<SpanBasis<Rational>> {
    let alphabet = Alphabet::new(m, n);
    let q0 = spec.q0();
    let elements: Vec<TensorElement> = match spec {
        Specialization::Classical => double_bracket_basis(m, n),
        Specialization::At(_) => gamma_elements(m, n).into_iter().map(|g| g.element).collect(),
    };
    let mut basis = SpanBasis::new();
    for e in elements {
        basis.insert(e.eval_vector(alphabet, &q0)?);
    }
    Ok(basis)
}

/// Rank of `Σ_{i+j+3=r} V^{⊗i} ⊗ I_3 ⊗ V^{⊗j}` inside `V^{⊗r}`.
pub fn ideal_component_dim(m: usize, n: usize, r: usize, spec: &Specialization) -> Result<usize> {
    let alphabet = Alphabet::new(m, n);
    let size = guard_power("(m+n)^r", alphabet.size(), r, IDEAL_BOUND)?;
    if r < 3 {
        return Ok(0);
    }
    let gens = degree_three_basis(m, n, spec)?;
    let nn = alphabet.size();
    let mut span = SpanBasis::new();
    for left in 0..=r - 3 {
        let right = r - 3 - left;
        let left_count = nn.pow(left as u32);
        let right_count = nn.pow(right as u32);
        let block = nn.pow(3) * right_count;
        for u in 0..left_count {
            for g in gens.vectors() {
                for v in 0..right_count {
                    let vec: SparseVec<Rational> = g
                        .iter()
                        .map(|(k, x)| (u * block + k * right_count + v, x.clone()))
                        .collect();
                    span.insert(vec);
                    if span.rank() as u128 == size {
                        return Ok(span.rank());
                    }
                }
            }
        }
    }
    Ok(span.rank())
}

/// `dim T_r(V) − dim I_r(V)`.
pub fn quotient_dim(m: usize, n: usize, r: usize, spec: &Specialization) -> Result<usize> {
    let total = guard_power("(m+n)^r", m + n, r, IDEAL_BOUND)? as usize;
    Ok(total - ideal_component_dim(m, n, r, spec)?)
}

/// Graded dimensions, entry `d` for degree `d`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct GradedDims(pub Vec<u64>);

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of `(1+t)^n (1+t²)^{mn} / ((1−t)^m (1−t²)^{C(m,2)+C(n+1,2)})`
/// through `t^cap`: the PBW factorization `S(V) ⊗ S(⟦V,V⟧)` with `V` of
/// dimension `m|n` and `⟦V,V⟧` of dimension `C(m,2)+C(n+1,2) | mn`.
pub fn hilbert_series(m: usize, n: usize, cap: usize) -> GradedDims {
    let len = cap + 1;
    let mut series = vec![Rational::zero(); len];
    series[0] = Rational::one();
    let mul_binomial = |s: &mut Vec<Rational>, step: usize| {
        for d in (step..len).rev() {
            let prev = s[d - step].clone();
            s[d] += prev;
        }
    };
    let div_geometric = |s: &mut Vec<Rational>, step: usize| {
        for d in step..len {
            let prev = s[d - step].clone();
            s[d] += prev;
        }
    };
    for _ in 0..n {
        mul_binomial(&mut series, 1);
    }
    for _ in 0..m * n {
        mul_binomial(&mut series, 2);
    }
    for _ in 0..m {
        div_geometric(&mut series, 1);
    }
    for _ in 0..binom(m, 2) + binom(n + 1, 2) {
        div_geometric(&mut series, 2);
    }
    GradedDims(
        series
            .into_iter()
            .map(|c| {
                assert!(c.is_integer());
                u64::try_from(c.to_integer()).expect("dimension fits in u64")
            })
            .collect(),
    )
}

/// `Σ_{λ ⊢ r} #SSYT(λ, m|n)`.
pub fn ssyt_total(m: usize, n: usize, r: usize) -> usize {
    partitions_of(r).iter().map(|l| count_ssyt(l, m, n)).sum()
}

/// Per-degree agreement table.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionRow {
    pub degree: usize,
    pub quotient_classical: usize,
    pub quotient_deformed: usize,
    pub hilbert: u64,
    pub ssyt: usize,
    pub plactic_classes: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionReport {
    pub m: usize,
    pub n: usize,
    pub q: String,
    pub rows: Vec<DecompositionRow>,
    pub pass: bool,
}

/// Compares, degree by degree, the classical and deformed quotient dimensions,
/// the PBW Hilbert coefficient, the SSYT count and the number of plactic
/// classes.
pub fn verify_decomposition(m: usize, n: usize, rmax: usize, q0: &Rational) -> Result<DecompositionReport> {
    let hilbert = hilbert_series(m, n, rmax);
    let deformed = Specialization::At(q0.clone());
    let mut rows = Vec::new();
    for r in 0..=rmax {
        let qc = quotient_dim(m, n, r, &Specialization::Classical)?;
        let qd = quotient_dim(m, n, r, &deformed)?;
        let ssyt = ssyt_total(m, n, r);
        let classes = crate::plactic::enumerate_classes(m, n, r)?.len();
        let h = hilbert.0[r];
        let agree = qc == qd && qc as u64 == h && ssyt == qc && classes == qc;
        rows.push(DecompositionRow {
            degree: r,
            quotient_classical: qc,
            quotient_deformed: qd,
            hilbert: h,
            ssyt,
            plactic_classes: classes,
            agree,
        });
    }
    let pass = rows.iter().all(|r| r.agree);
    Ok(DecompositionReport {
        m,
        n,
        q: crate::exactmath::format_rational(q0),
        rows,
        pass,
    })
}

/// `Σ_{λ⊢r} #SSYT(λ, r|0)` restricted to weight `(1,…,1)`: the multilinear
/// part of the even algebra on `r` generators.
pub fn multilinear_count(r: usize) -> usize {
    let alphabet = Alphabet::new(r, 0);
    partitions_of(r)
        .iter()
        .flat_map(|l| crate::shapes::enumerate_ssyt(l, r, 0))
        .filter(|t| t.weight(alphabet).iter().all(|&c| c == 1))
        .count()
}

/// Super Jacobi sum
/// `⟦x,⟦y,z⟧⟧ + (−1)^{x̂ŷ+x̂ẑ}⟦y,⟦z,x⟧⟧ + (−1)^{x̂ẑ+ŷẑ}⟦z,⟦x,y⟧⟧`.
pub fn super_jacobi(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> TensorElement {
    let s = |e: u8| RationalFunction::from(int(if e % 2 == 0 { 1 } else { -1 }));
    let (px, py, pz) = (x.bit(), y.bit(), z.bit());
    double_bracket(x, y, z)
        .add(&double_bracket(y, z, x).scale(&s(px * py + px * pz)))
        .add(&double_bracket(z, x, y).scale(&s(px * pz + py * pz)))
}

/// `#SSYT((2,1), m|n)`, the expected dimension of the degree-3 relations.
pub fn expected_relation_dim(m: usize, n: usize) -> usize {
    count_ssyt(&Partition::new(vec![2, 1]).unwrap(), m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{default_q, rat};

    fn e(i: u32) -> SignedLetter {
        SignedLetter::even(i)
    }
    fn o(i: u32) -> SignedLetter {
        SignedLetter::odd(i)
    }
    fn word(s: &str) -> SignedWord {
        s.parse().unwrap()
    }
    fn rf(n: i64) -> RationalFunction {
        int(n).into()
    }

    #[test]
    fn bracket_examples() {
        let xy = bracket(&lt(e(1)), &lt(e(2))).unwrap();
        let mut want = TensorElement::word(word("1,2"));
        want.add_term(word("2,1"), rf(-1));
        assert_eq!(xy, want);

        let xx = bracket(&lt(o(1)), &lt(o(1))).unwrap();
        let mut want = TensorElement::zero();
        want.add_term(word("1',1'"), rf(2));
        assert_eq!(xx, want);

        let qi = q_pow(-1);
        let mixed = qbracket(&lt(e(1)), &lt(o(1)), &qi).unwrap();
        let mut want = TensorElement::word(word("1,1'"));
        want.add_term(word("1',1"), -qi);
        assert_eq!(mixed, want);
    }

    #[test]
    fn inhomogeneous_bracket_is_rejected() {
        let mixed = lt(e(1)).add(&lt(o(1)));
        assert_eq!(bracket(&mixed, &lt(e(1))), Err(Error::Inhomogeneous));
    }

    #[test]
    fn double_bracket_spans() {
        let rank = |m, n| degree_three_basis(m, n, &Specialization::Classical).unwrap().rank();
        assert_eq!(rank(1, 1), 2);
        assert_eq!(rank(1, 0), 0);
        assert_eq!(rank(2, 0), 2);
        assert_eq!(double_bracket(e(1), e(1), e(1)), TensorElement::zero());
    }

    #[test]
    fn gamma_counts_and_labels() {
        let g = gamma_elements(1, 1);
        assert_eq!(g.len(), 2);
        let fams: Vec<u8> = g.iter().map(|x| x.family).collect();
        assert!(fams.contains(&3) && fams.contains(&6));
        assert!(gamma_elements(1, 0).is_empty());
        let g = gamma_elements(0, 2);
        let mut fams: Vec<u8> = g.iter().map(|x| x.family).collect();
        fams.sort();
        assert_eq!(fams, vec![3, 5]);
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 0), (0, 3)] {
            let g = gamma_elements(m, n);
            assert_eq!(g.len(), expected_relation_dim(m, n), "({m},{n})");
            let labels: Vec<Ssyt> = g.iter().map(|x| x.tableau.clone()).collect();
            let mut want = crate::shapes::enumerate_ssyt(&Partition::new(vec![2, 1]).unwrap(), m, n);
            want.sort_by_cached_key(|t| t.reading_word());
            assert_eq!(labels, want);
        }
    }

    #[test]
    fn ideal_and_quotient_examples() {
        let cl = Specialization::Classical;
        let def = Specialization::At(default_q());
        assert_eq!(ideal_component_dim(1, 1, 3, &cl).unwrap(), 2);
        assert_eq!(ideal_component_dim(1, 1, 3, &def).unwrap(), 2);
        assert_eq!(quotient_dim(1, 1, 2, &cl).unwrap(), 4);
        assert_eq!(quotient_dim(1, 1, 3, &cl).unwrap(), 6);
        assert_eq!(quotient_dim(2, 2, 0, &def).unwrap(), 1);
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            assert_eq!(quotient_dim(m, n, 3, &cl).unwrap(), ssyt_total(m, n, 3));
        }
        assert!(matches!(
            ideal_component_dim(4, 4, 6, &cl),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }

    #[test]
    fn pole_at_zero() {
        let r = ideal_component_dim(1, 1, 3, &Specialization::At(rat(0, 1)));
        assert!(matches!(r, Err(Error::Pole { .. })));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_series(1, 1, 5).0, vec![1, 2, 4, 6, 8, 10]);
        assert_eq!(hilbert_series(1, 0, 5).0, vec![1; 6]);
        assert_eq!(hilbert_series(0, 1, 5).0, vec![1; 6]);
        // two even generators: 1/((1-t)^2 (1-t^2))
        assert_eq!(hilbert_series(2, 0, 4).0, vec![1, 2, 4, 6, 9]);
    }

    #[test]
    fn decomposition_small() {
        let rep = verify_decomposition(1, 1, 4, &default_q()).unwrap();
        assert!(rep.pass, "{rep:?}");
        let dims: Vec<usize> = rep.rows.iter().map(|r| r.ssyt).collect();
        assert_eq!(dims, vec![1, 2, 4, 6, 8]);
        assert!(verify_decomposition(1, 0, 5, &default_q()).unwrap().pass);
    }

    #[test]
    fn super_jacobi_vanishes() {
        let letters = Alphabet::new(2, 2).letters();
        for &x in &letters {
            for &y in &letters {
                for &z in &letters {
                    assert!(super_jacobi(x, y, z).is_zero(), "{x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn involution_numbers() {
        let got: Vec<usize> = (1..=5).map(multilinear_count).collect();
        assert_eq!(got, vec![1, 2, 4, 10, 26]);
    }

    #[test]
    fn json_form() {
        let j = qbracket(&lt(e(1)), &lt(o(1)), &q_pow(-1)).unwrap().to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"coefficient":{"den":"1","num":"1"},"word":["1","1'"]},{"coefficient":{"den":"1","num":"-q^-1"},"word":["1'","1"]}]"#
        );
    }
}
