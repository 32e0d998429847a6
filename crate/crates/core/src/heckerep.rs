//! Hecke algebra `H_r(q)` in the `T_w` basis, the Eulerian idempotents, the
//! super R-matrix, and the sign-permutation and `gl(m|n)` actions on
//! `V^{⊗r}` together with their verifications.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{guard_power, Error, Result};
use crate::exactmath::{
    format_rational, int, rat, LaurentPoly, Matrix, Rational, RationalFunction, Scalar, SpanBasis,
};
use crate::freealg::{
    degree_three_basis, expected_relation_dim, gamma_elements_with, BracketConvention, GammaSign, Specialization,
};
use crate::shapes::{count_standard, hook_partitions, Alphabet, SignedLetter, SignedWord};

/// Bound on `(m+n)^r` for action matrices.
pub const ACTION_BOUND: u128 = 10_000;
/// Bound on `(m+n)^r` for commutant and R-matrix checks.
pub const COMMUTANT_BOUND: u128 = 1_000;

pub type ActionMatrix = Matrix<LaurentPoly>;

/// A permutation of `1..=r` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let r = one_line.len();
        let mut seen = vec![false; r];
        for &x in &one_line {
            if x == 0 || x > r || seen[x - 1] {
                return Err(Error::Parse(format!("{one_line:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(r: usize) -> Self {
        Self((1..=r).collect())
    }

    /// Adjacent transposition `s_i`, `1 ≤ i < r`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r);
        Self::identity(r).times_simple(i)
    }

    /// All of `S_r` in lexicographic order of one-line notation.
    pub fn all(r: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let r = used.len();
            if prefix.len() == r {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 1..=r {
                if !used[x - 1] {
                    used[x - 1] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; r], &mut out);
        out
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(p)`, one-based.
    pub fn apply(&self, p: usize) -> usize {
        self.0[p - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    /// `w·s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Self(w)
    }

    /// `(self ∘ other)(p) = self(other(p))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&p| self.0[p - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (p, &x) in self.0.iter().enumerate() {
            inv[x - 1] = p + 1;
        }
        Self(inv)
    }

    /// `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}` and `k = ℓ(w)`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..w.rank()).find(|&i| w.apply(i) > w.apply(i + 1)) {
            rev.push(i);
            w = w.times_simple(i);
        }
        rev.reverse();
        rev
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Element `Σ c_w T_w` of `H_r(q)`, or of the group algebra when the
/// coefficients are plain rationals.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElement<C = RationalFunction> {
    r: usize,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Scalar> HeckeElement<C> {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: Permutation) -> Self {
        let mut out = Self::zero(w.rank());
        out.add_term(w, C::one());
        out
    }

    pub fn one(r: usize) -> Self {
        Self::basis(Permutation::identity(r))
    }

    pub fn generator(r: usize, i: usize) -> Self {
        Self::basis(Permutation::simple(r, i))
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: C) {
        assert_eq!(w.rank(), self.r);
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.r, other.r)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.r);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), c.clone() * x.clone());
        }
        out
    }

    /// Right multiplication by `T_{s_i}` with deformation `d = q − q⁻¹`.
    fn times_generator(&self, i: usize, d: &C) -> Self {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.times_simple(i);
            if w.apply(i) < w.apply(i + 1) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.clone());
                if !d.is_zero() {
                    out.add_term(w.clone(), c.clone() * d.clone());
                }
            }
        }
        out
    }

    /// Product in the algebra with quadratic relation
    /// `T_s² = 1 + d·T_s`. With `d = 0` this is the group algebra.
    pub fn mul_with(&self, other: &Self, d: &C) -> Result<Self> {
        check_rank(self.r, other.r)?;
        let mut out = Self::zero(self.r);
        for (v, b) in &other.terms {
            let mut part = self.clone();
            for i in v.reduced_word() {
                part = part.times_generator(i, d);
            }
            out = out.add(&part.scale(b))?;
        }
        Ok(out)
    }

    /// Image under the anti-automorphism `T_w ↦ T_{w⁻¹}`.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c.clone());
        }
        out
    }
}

impl<C: Scalar + fmt::Display> HeckeElement<C> {
    /// `{"r":3,"terms":[{"perm":[2,1,3],"coeff":"(q-q^-1)/2"}]}`
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| serde_json::json!({"perm": w.one_line(), "coeff": c.to_string()}))
            .collect();
        serde_json::json!({"r": self.r, "terms": terms})
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl HeckeElement<RationalFunction> {
    /// Coefficientwise evaluation at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<HeckeElement<Rational>> {
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.eval(q0)?);
        }
        Ok(out)
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::RankMismatch { left: a, right: b });
    }
    Ok(())
}

fn q_minus_q_inv() -> RationalFunction {
    LaurentPoly::q_minus_q_inv().into()
}

/// Product in `H_r(q)`.
pub fn hecke_mul(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.mul_with(b, &q_minus_q_inv())
}

/// Product in the group algebra `ℚ[S_r]`.
pub fn group_mul(a: &HeckeElement<Rational>, b: &HeckeElement<Rational>) -> Result<HeckeElement<Rational>> {
    a.mul_with(b, &Rational::zero())
}

fn perm(w: [usize; 3]) -> Permutation {
    Permutation(w.to_vec())
}

/// `T_{321}`, the longest element of `S_3`.
pub fn omega() -> HeckeElement {
    HeckeElement::basis(perm([3, 2, 1]))
}

/// The deformed Eulerian idempotent of `H_3(q)`:
/// `(1/[3])(T123 − ½(T231+T213+T132+T312) + T321)
///  + ((q−q⁻¹)/(2[3]))(T213 − T312 − T231 + T132)`, `[3] = q²+1+q⁻²`.
pub fn eulerian_idempotent_q() -> HeckeElement {
    let q3 = LaurentPoly::quantum_int(3);
    let inv3 = RationalFunction::new(LaurentPoly::one(), q3.clone());
    let half = |x: RationalFunction| x * RationalFunction::from(rat(1, 2));
    let dq = RationalFunction::new(LaurentPoly::q_minus_q_inv(), q3);
    let mut e = HeckeElement::zero(3);
    e.add_term(perm([1, 2, 3]), inv3.clone());
    e.add_term(perm([3, 2, 1]), inv3.clone());
    for w in [[2, 3, 1], [2, 1, 3], [1, 3, 2], [3, 1, 2]] {
        e.add_term(perm(w), -half(inv3.clone()));
    }
    for (w, s) in [([2, 1, 3], 1), ([3, 1, 2], -1), ([2, 3, 1], -1), ([1, 3, 2], 1)] {
        e.add_term(perm(w), half(dq.clone()) * RationalFunction::from(int(s)));
    }
    e
}

/// The classical Eulerian idempotent
/// `(1/3)(T123 − ½(T231+T213+T132+T312) + T321)` in `ℚ[S_3]`.
pub fn eulerian_idempotent() -> HeckeElement<Rational> {
    let mut e = HeckeElement::zero(3);
    e.add_term(perm([1, 2, 3]), rat(1, 3));
    e.add_term(perm([3, 2, 1]), rat(1, 3));
    for w in [[2, 3, 1], [2, 1, 3], [1, 3, 2], [3, 1, 2]] {
        e.add_term(perm(w), rat(-1, 6));
    }
    e
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdempotentReport {
    pub classical_idempotent: bool,
    pub deformed_idempotent: bool,
    pub omega_fixes: bool,
    pub specializes_to_classical: bool,
    pub pass: bool,
}

/// `e² = e`, `e(q)² = e(q)`, `ω e(q) = e(q)` and `e(1) = e`, all exact.
pub fn verify_idempotents() -> IdempotentReport {
    let e = eulerian_idempotent();
    let eq = eulerian_idempotent_q();
    let classical_idempotent = group_mul(&e, &e).unwrap() == e;
    let deformed_idempotent = hecke_mul(&eq, &eq).unwrap() == eq;
    let omega_fixes = hecke_mul(&omega(), &eq).unwrap() == eq;
    let specializes_to_classical = eq.specialize(&int(1)).map(|x| x == e).unwrap_or(false);
    IdempotentReport {
        classical_idempotent,
        deformed_idempotent,
        omega_fixes,
        specializes_to_classical,
        pass: classical_idempotent && deformed_idempotent && omega_fixes && specializes_to_classical,
    }
}

fn sign(b: bool) -> i64 {
    if b {
        -1
    } else {
        1
    }
}

/// `R̂` on `V⊗V`, indexed by `k·N + l` for the word `(k, l)`; column = input.
/// `(k,l) ↦ ±(l,k) + (q−q⁻¹)(k,l)` for `k < l`, `(k,l) ↦ ±(l,k)` for `k > l`,
/// with sign `(−1)^{k̂ l̂}`; `(k,k) ↦ q (k,k)` if even, `−q⁻¹ (k,k)` if odd.
pub fn rmatrix(m: usize, n: usize) -> ActionMatrix {
    let letters = Alphabet::new(m, n).letters();
    let nn = letters.len();
    let mut r = Matrix::zeros(nn * nn, nn * nn);
    for (k, a) in letters.iter().enumerate() {
        for (l, b) in letters.iter().enumerate() {
            let col = k * nn + l;
            if k == l {
                let d = if a.is_odd() { -LaurentPoly::q_inv() } else { LaurentPoly::q() };
                r.set(col, col, d);
                continue;
            }
            let s = LaurentPoly::from(sign(a.is_odd() && b.is_odd()));
            r.set(l * nn + k, col, s);
            if k < l {
                r.set(col, col, LaurentPoly::q_minus_q_inv());
            }
        }
    }
    r
}

/// `σ_q(g_s)` on `V^{⊗r}`: `R̂` in slots `s, s+1`.
pub fn sigma_generator(m: usize, n: usize, r: usize, s: usize) -> Result<ActionMatrix> {
    guard_power("(m+n)^r", m + n, r, ACTION_BOUND)?;
    assert!(s >= 1 && s < r);
    let nn = m + n;
    let left = Matrix::identity(nn.pow((s - 1) as u32));
    let right = Matrix::identity(nn.pow((r - s - 1) as u32));
    Ok(left.kron(&rmatrix(m, n)).kron(&right))
}

/// `σ_q(T_w)` as the product of generator matrices along a reduced word.
pub fn sigma_basis(m: usize, n: usize, w: &Permutation) -> Result<ActionMatrix> {
    let r = w.rank();
    let size = guard_power("(m+n)^r", m + n, r, ACTION_BOUND)? as usize;
    let mut out = Matrix::identity(size);
    for s in w.reduced_word() {
        out = out.mul(&sigma_generator(m, n, r, s)?);
    }
    Ok(out)
}

/// `σ_q(h)` over `ℚ(q)`.
pub fn sigma_hecke(h: &HeckeElement, m: usize, n: usize) -> Result<Matrix<RationalFunction>> {
    let size = guard_power("(m+n)^r", m + n, h.rank(), ACTION_BOUND)? as usize;
    let mut out = Matrix::zeros(size, size);
    for (w, c) in h.terms() {
        let t = sigma_basis(m, n, w)?.try_map(|x| Ok(RationalFunction::from(x.clone())))?;
        out = out.add(&t.scale(c));
    }
    Ok(out)
}

/// `σ_q(h)` at `q = q0`.
pub fn sigma_hecke_at(h: &HeckeElement, m: usize, n: usize, q0: &Rational) -> Result<Matrix<Rational>> {
    let size = guard_power("(m+n)^r", m + n, h.rank(), ACTION_BOUND)? as usize;
    let mut out = Matrix::zeros(size, size);
    for (w, c) in h.terms() {
        let t = sigma_basis(m, n, w)?.try_map(|x| x.eval(q0))?;
        out = out.add(&t.scale(&c.eval(q0)?));
    }
    Ok(out)
}

/// Classical signed place permutation: the letter in position `p` moves to
/// position `τ(p)`, with sign the parity of inverted odd-odd pairs.
pub fn sigma_permutation(tau: &Permutation, m: usize, n: usize) -> Result<Matrix<Rational>> {
    let r = tau.rank();
    let alphabet = Alphabet::new(m, n);
    let size = guard_power("(m+n)^r", m + n, r, ACTION_BOUND)? as usize;
    let mut out = Matrix::zeros(size, size);
    for w in SignedWord::all_words(alphabet, r) {
        let ls = w.letters();
        let mut image = ls.to_vec();
        for (p, &a) in ls.iter().enumerate() {
            image[tau.apply(p + 1) - 1] = a;
        }
        let mut odd_inversions = 0;
        for p in 0..r {
            for p2 in p + 1..r {
                if ls[p].is_odd() && ls[p2].is_odd() && tau.apply(p + 1) > tau.apply(p2 + 1) {
                    odd_inversions += 1;
                }
            }
        }
        let row = SignedWord(image).lex_index(alphabet);
        out.set(row, w.lex_index(alphabet), int(sign(odd_inversions % 2 == 1)));
    }
    Ok(out)
}

/// `σ(h)` for a group-algebra element.
pub fn sigma_group(h: &HeckeElement<Rational>, m: usize, n: usize) -> Result<Matrix<Rational>> {
    let size = guard_power("(m+n)^r", m + n, h.rank(), ACTION_BOUND)? as usize;
    let mut out = Matrix::zeros(size, size);
    for (w, c) in h.terms() {
        out = out.add(&sigma_permutation(w, m, n)?.scale(c));
    }
    Ok(out)
}

/// `ρ(E_ij)` on `V^{⊗r}`: the letter `j` in position `k` becomes `i`, with
/// sign `(−1)^{(î+ĵ)·(parity of the letters before k)}`.
pub fn rho_action(i: SignedLetter, j: SignedLetter, m: usize, n: usize, r: usize) -> Result<Matrix<Rational>> {
    let alphabet = Alphabet::new(m, n);
    alphabet.check(i)?;
    alphabet.check(j)?;
    let size = guard_power("(m+n)^r", m + n, r, ACTION_BOUND)? as usize;
    let x = i.bit() ^ j.bit();
    let mut out = Matrix::zeros(size, size);
    for w in SignedWord::all_words(alphabet, r) {
        let col = w.lex_index(alphabet);
        let mut before = 0u8;
        for (k, &a) in w.letters().iter().enumerate() {
            if a == j {
                let mut image = w.letters().to_vec();
                image[k] = i;
                let row = SignedWord(image).lex_index(alphabet);
                out.add_at(row, col, int(sign(x * before == 1)));
            }
            before ^= a.bit();
        }
    }
    Ok(out)
}

fn supercommutator(a: &Matrix<Rational>, pa: u8, b: &Matrix<Rational>, pb: u8) -> Matrix<Rational> {
    let ba = b.mul(a);
    let ba = if pa * pb == 1 { ba.scale(&-Rational::one()) } else { ba };
    a.mul(b).sub(&ba)
}

/// Second-term convention in the `gl(m|n)` superbracket.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum GlConvention {
    /// `⟦E_ij, E_kl⟧ = δ_jk E_il − (−1)^{(î+ĵ)(k̂+l̂)} δ_il E_kj`
    Standard,
    /// the same with `E_jk` in place of `E_kj`
    Transposed,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GlVariant {
    pub convention: GlConvention,
    pub closes: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GlReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub variants: Vec<GlVariant>,
    /// Set when exactly one convention closes.
    pub closing: Option<GlConvention>,
    /// `true` when the two conventions give identical right-hand sides on
    /// every quadruple, so no single pair can tell them apart.
    pub indistinguishable: bool,
    pub pass: bool,
}

/// Superbracket relations of `ρ(E_ij)` on `V` for both conventions.
pub fn verify_gl_relations(m: usize, n: usize) -> Result<GlReport> {
    verify_gl_relations_on(m, n, 1)
}

/// As [`verify_gl_relations`], on `V^{⊗r}`.
pub fn verify_gl_relations_on(m: usize, n: usize, r: usize) -> Result<GlReport> {
    let letters = Alphabet::new(m, n).letters();
    let mut rho = BTreeMap::new();
    for &a in &letters {
        for &b in &letters {
            rho.insert((a, b), rho_action(a, b, m, n, r)?);
        }
    }
    let size = (m + n).pow(r as u32);
    let zero = Matrix::<Rational>::zeros(size, size);
    let mut failures = [Vec::new(), Vec::new()];
    let mut indistinguishable = true;
    for &i in &letters {
        for &j in &letters {
            for &k in &letters {
                for &l in &letters {
                    let (pij, pkl) = (i.bit() ^ j.bit(), k.bit() ^ l.bit());
                    let lhs = supercommutator(&rho[&(i, j)], pij, &rho[&(k, l)], pkl);
                    let first = if j == k { rho[&(i, l)].clone() } else { zero.clone() };
                    let s = Rational::from(int(sign(pij * pkl == 1)));
                    let second = |x: SignedLetter, y: SignedLetter| {
                        if i == l {
                            rho[&(x, y)].scale(&s)
                        } else {
                            zero.clone()
                        }
                    };
                    let std_rhs = first.sub(&second(k, j));
                    let tr_rhs = first.sub(&second(j, k));
                    if std_rhs != tr_rhs {
                        indistinguishable = false;
                    }
                    for (slot, rhs) in [(0, &std_rhs), (1, &tr_rhs)] {
                        if &lhs != rhs {
                            failures[slot].push(format!("E({i},{j}),E({k},{l})"));
                        }
                    }
                }
            }
        }
    }
    let [std_f, tr_f] = failures;
    let variants = vec![
        GlVariant {
            convention: GlConvention::Standard,
            closes: std_f.is_empty(),
            failures: std_f,
        },
        GlVariant {
            convention: GlConvention::Transposed,
            closes: tr_f.is_empty(),
            failures: tr_f,
        },
    ];
    let closing: Vec<GlConvention> = variants.iter().filter(|v| v.closes).map(|v| v.convention).collect();
    let closing = (closing.len() == 1).then(|| closing[0]);
    let pass = variants[0].closes;
    Ok(GlReport {
        m,
        n,
        r,
        variants,
        closing,
        indistinguishable,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct YbeReport {
    pub m: usize,
    pub n: usize,
    pub yang_baxter: bool,
    pub hecke: bool,
    pub classical_limit: bool,
    pub first_failure: Option<String>,
    pub pass: bool,
}

/// Yang–Baxter `R12 R23 R12 = R23 R12 R23` on `V^{⊗3}`, the Hecke relation
/// `R² = 1 + (q−q⁻¹)R` on `V^{⊗2}`, and `R|_{q=1} = σ(s_1)`, all exact.
pub fn verify_ybe_hecke(m: usize, n: usize) -> Result<YbeReport> {
    guard_power("(m+n)^3", m + n, 3, COMMUTANT_BOUND)?;
    let r = rmatrix(m, n);
    let nn = m + n;
    let id = Matrix::<LaurentPoly>::identity(nn);
    let r12 = r.kron(&id);
    let r23 = id.kron(&r);
    let lhs = r12.mul(&r23).mul(&r12);
    let rhs = r23.mul(&r12).mul(&r23);
    let mut first_failure = lhs
        .first_difference(&rhs)
        .map(|(i, j)| format!("yang-baxter entry ({i},{j}): {} vs {}", lhs.get(i, j), rhs.get(i, j)));
    let yang_baxter = first_failure.is_none();

    let sq = r.mul(&r);
    let quad = Matrix::identity(nn * nn).add(&r.scale(&LaurentPoly::q_minus_q_inv()));
    let hecke_diff = sq.first_difference(&quad);
    if first_failure.is_none() {
        first_failure = hecke_diff.map(|(i, j)| format!("hecke entry ({i},{j}): {} vs {}", sq.get(i, j), quad.get(i, j)));
    }
    let hecke = hecke_diff.is_none();

    let at_one = r.try_map(|x| x.eval(&int(1)))?;
    let classical = sigma_permutation(&Permutation::simple(2, 1), m, n)?;
    let classical_limit = at_one == classical;
    if first_failure.is_none() && !classical_limit {
        first_failure = at_one.first_difference(&classical).map(|(i, j)| format!("q=1 entry ({i},{j})"));
    }
    Ok(YbeReport {
        m,
        n,
        yang_baxter,
        hecke,
        classical_limit,
        first_failure,
        pass: yang_baxter && hecke && classical_limit,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CommutantReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub commute: bool,
    pub rank: usize,
    pub expected_rank: usize,
    pub generators_match_classical: bool,
    pub braid_and_quadratic: bool,
    pub pass: bool,
}

/// Classical Schur–Weyl checks on `V^{⊗r}`: `σ(τ)` commutes with every
/// `ρ(E_ij)`, the span of `σ(S_r)` has dimension `Σ_{λ ∈ hook} (f^λ)²`,
/// `σ_q(g_s)` specializes to `σ(s)`, and the `σ_q(g_s)` satisfy the braid and
/// quadratic relations.
pub fn verify_commutant(m: usize, n: usize, r: usize) -> Result<CommutantReport> {
    guard_power("(m+n)^r", m + n, r, COMMUTANT_BOUND)?;
    if r > 4 {
        return Err(Error::SizeGuardExceeded {
            what: "r".into(),
            size: r as u128,
            bound: 4,
        });
    }
    let letters = Alphabet::new(m, n).letters();
    let mut rhos = Vec::new();
    for &a in &letters {
        for &b in &letters {
            rhos.push(rho_action(a, b, m, n, r)?);
        }
    }
    let mut commute = true;
    let mut span = SpanBasis::new();
    for tau in Permutation::all(r) {
        let s = sigma_permutation(&tau, m, n)?;
        commute &= rhos.iter().all(|x| s.mul(x) == x.mul(&s));
        span.insert(s.flatten());
    }
    let expected_rank: usize = hook_partitions(m, n, r)
        .iter()
        .map(|l| {
            let f = count_standard(l) as usize;
            f * f
        })
        .sum();

    let mut generators_match_classical = true;
    let mut braid_and_quadratic = true;
    let gens: Vec<ActionMatrix> = (1..r).map(|s| sigma_generator(m, n, r, s)).collect::<Result<_>>()?;
    for (idx, g) in gens.iter().enumerate() {
        let s = idx + 1;
        let classical = sigma_permutation(&Permutation::simple(r, s), m, n)?;
        generators_match_classical &= g.try_map(|x| x.eval(&int(1)))? == classical;
        let size = g.nrows();
        let quad = Matrix::identity(size).add(&g.scale(&LaurentPoly::q_minus_q_inv()));
        braid_and_quadratic &= g.mul(g) == quad;
        if let Some(h) = gens.get(idx + 1) {
            braid_and_quadratic &= g.mul(h).mul(g) == h.mul(g).mul(h);
        }
        for h in gens.iter().skip(idx + 2) {
            braid_and_quadratic &= g.mul(h) == h.mul(g);
        }
    }
    let rank = span.rank();
    Ok(CommutantReport {
        m,
        n,
        r,
        commute,
        rank,
        expected_rank,
        generators_match_classical,
        braid_and_quadratic,
        pass: commute && rank == expected_rank && generators_match_classical && braid_and_quadratic,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ImageVariant {
    pub convention: BracketConvention,
    pub sign: GammaSign,
    pub gamma_rank: usize,
    pub contained: bool,
    pub spans: bool,
}

impl ImageVariant {
    pub fn matches(&self) -> bool {
        self.contained && self.spans
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ImageReport {
    pub m: usize,
    pub n: usize,
    pub q: String,
    pub rank: usize,
    pub expected_rank: usize,
    pub matrix_idempotent: bool,
    /// The default Γ convention, first, then the alternatives for comparison.
    pub variants: Vec<ImageVariant>,
    pub classical_rank: usize,
    pub classical_matrix_idempotent: bool,
    pub classical_matches_double_brackets: bool,
    pub gamma_at_one_matches_double_brackets: bool,
    pub pass: bool,
}

fn column_space(a: &Matrix<Rational>) -> SpanBasis<Rational> {
    SpanBasis::from_vectors(a.transpose().rows().iter().cloned())
}

fn gamma_variant(
    m: usize,
    n: usize,
    q0: &Rational,
    convention: BracketConvention,
    sign: GammaSign,
    image: &SpanBasis<Rational>,
) -> Result<ImageVariant> {
    let alphabet = Alphabet::new(m, n);
    let mut span = SpanBasis::new();
    let mut contained = true;
    for g in gamma_elements_with(m, n, convention, sign) {
        let v = g.element.eval_vector(alphabet, q0)?;
        contained &= image.contains(&v);
        span.insert(v);
    }
    Ok(ImageVariant {
        convention,
        sign,
        gamma_rank: span.rank(),
        contained,
        spans: span.same_span(image),
    })
}

/// Image of `σ_q(e(q))` on `V^{⊗3}` at `q0`, compared against the Γ span
/// under each bracket convention and sign, and the image of `σ(e)` compared
/// against the double-bracket span.
pub fn idempotent_image(m: usize, n: usize, q0: &Rational) -> Result<ImageReport> {
    guard_power("(m+n)^3", m + n, 3, ACTION_BOUND)?;
    let eq = sigma_hecke_at(&eulerian_idempotent_q(), m, n, q0)?;
    let image = column_space(&eq);
    let expected_rank = expected_relation_dim(m, n);
    let mut variants = Vec::new();
    for sign in [GammaSign::Graded, GammaSign::Plus] {
        for conv in [BracketConvention::ScaleSecond, BracketConvention::ScaleFirst] {
            variants.push(gamma_variant(m, n, q0, conv, sign, &image)?);
        }
    }

    let e = sigma_group(&eulerian_idempotent(), m, n)?;
    let classical = column_space(&e);
    let brackets = degree_three_basis(m, n, &Specialization::Classical)?;
    let gamma_one = degree_three_basis(m, n, &Specialization::At(int(1)))?;
    let report = ImageReport {
        m,
        n,
        q: format_rational(q0),
        rank: image.rank(),
        expected_rank,
        matrix_idempotent: eq.mul(&eq) == eq,
        variants,
        classical_rank: classical.rank(),
        classical_matrix_idempotent: e.mul(&e) == e,
        classical_matches_double_brackets: classical.same_span(&brackets),
        gamma_at_one_matches_double_brackets: gamma_one.same_span(&brackets),
        pass: false,
    };
    let pass = report.rank == expected_rank
        && report.matrix_idempotent
        && report.variants[0].matches()
        && report.classical_rank == expected_rank
        && report.classical_matrix_idempotent
        && report.classical_matches_double_brackets
        && report.gamma_at_one_matches_double_brackets;
    Ok(ImageReport { pass, ..report })
}
