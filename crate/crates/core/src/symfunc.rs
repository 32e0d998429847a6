//! Schur, skew Schur and hook Schur characters as exact polynomials, and the
//! classical Schur identity together with its hook generalization.
//!
//! Variables are `x_1..x_m` (even letters) followed by `x_{m+1}..x_{m+n}`
//! (odd letters). Every character is computed by summing weight monomials
//! over tableaux; no determinantal formula is used.

use num::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, Rational, TruncatedPoly};
use crate::shapes::{conjugate, enumerate_ssyt, partitions_of, Alphabet, Partition};

/// Polynomial character in `m` even and `n` odd variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterPoly {
    pub m: usize,
    pub n: usize,
    pub poly: TruncatedPoly,
}

#[derive(Serialize)]
struct TermJson {
    exponents: Vec<u32>,
    coefficient: String,
}

impl CharacterPoly {
    pub fn zero(m: usize, n: usize, cap: u32) -> Self {
        Self {
            m,
            n,
            poly: TruncatedPoly::zero(m + n, cap),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.poly.coeff(exps)
    }

    /// `[{"exponents":[…],"coefficient":"p/q"}, …]`
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .poly
            .terms()
            .map(|(e, c)| TermJson {
                exponents: e.to_vec(),
                coefficient: format_rational(c),
            })
            .collect();
        serde_json::to_value(terms).expect("character serializes")
    }
}

impl std::fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn weight_sum<I>(weights: I, nvars: usize, cap: u32) -> TruncatedPoly
where
    I: IntoIterator<Item = Vec<u32>>,
{
    let mut p = TruncatedPoly::zero(nvars, cap);
    for w in weights {
        p.add_term(w, Rational::one());
    }
    p
}

/// Ordinary Schur polynomial `s_λ(x_1..x_m)`; zero when λ has more than `m` rows.
pub fn schur(lambda: &Partition, m: usize) -> CharacterPoly {
    let alphabet = Alphabet::new(m, 0);
    let cap = lambda.size() as u32;
    let tabs = enumerate_ssyt(lambda, m, 0);
    CharacterPoly {
        m,
        n: 0,
        poly: weight_sum(tabs.iter().map(|t| t.weight(alphabet)), m, cap),
    }
}

/// Skew Schur polynomial `s_{λ/μ}(x_1..x_k)`, summed over semistandard
/// fillings of the skew diagram with entries `1..=k`.
pub fn skew_schur(lambda: &Partition, mu: &Partition, k: usize) -> Result<CharacterPoly> {
    if !lambda.contains(mu) {
        return Err(Error::Containment {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let cells: Vec<(usize, usize)> = lambda.cells().filter(|&(i, j)| j >= mu.part(i)).collect();
    // grid[i][j] = 0 for cells of μ, entry otherwise
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    let mut weights = Vec::new();
    skew_fill(&cells, 0, k, mu, &mut grid, &mut weights);
    let cap = (lambda.size() - mu.size()) as u32;
    Ok(CharacterPoly {
        m: k,
        n: 0,
        poly: weight_sum(weights, k, cap),
    })
}

fn skew_fill(
    cells: &[(usize, usize)],
    idx: usize,
    k: usize,
    mu: &Partition,
    grid: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<u32>>,
) {
    let Some(&(i, j)) = cells.get(idx) else {
        let mut w = vec![0u32; k];
        for &(a, b) in cells {
            w[grid[a][b] - 1] += 1;
        }
        out.push(w);
        return;
    };
    let left = if j > mu.part(i) { grid[i][j - 1] } else { 1 };
    let above = if i > 0 && j >= mu.part(i - 1) { grid[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=k {
        grid[i][j] = v;
        skew_fill(cells, idx + 1, k, mu, grid, out);
    }
    grid[i][j] = 0;
}

/// Hook Schur function as the weight generating function of SSYT of shape λ.
pub fn hook_schur_ssyt(lambda: &Partition, m: usize, n: usize) -> CharacterPoly {
    let alphabet = Alphabet::new(m, n);
    let cap = lambda.size() as u32;
    let tabs = enumerate_ssyt(lambda, m, n);
    CharacterPoly {
        m,
        n,
        poly: weight_sum(tabs.iter().map(|t| t.weight(alphabet)), m + n, cap),
    }
}

/// Hook Schur function through `Σ_{μ⊆λ} s_μ(x_1..x_m) · s_{λ'/μ'}(x_{m+1}..x_{m+n})`.
pub fn hook_schur_factorized(lambda: &Partition, m: usize, n: usize) -> CharacterPoly {
    let nvars = m + n;
    let cap = lambda.size() as u32;
    let lambda_c = conjugate(lambda);
    let mut total = TruncatedPoly::zero(nvars, cap);
    for mu in lambda.subpartitions() {
        let even = schur(&mu, m);
        if even.is_zero() {
            continue;
        }
        let odd = skew_schur(&lambda_c, &conjugate(&mu), n).expect("μ ⊆ λ");
        if odd.is_zero() {
            continue;
        }
        let even = embed(&even.poly, nvars, cap, 0);
        let odd = embed(&odd.poly, nvars, cap, m);
        total = total
            .add(&even.mul(&odd).expect("same variables"))
            .expect("same variables");
    }
    CharacterPoly { m, n, poly: total }
}

/// Places the variables of `p` at positions `offset..` of an `nvars`-variable ring.
fn embed(p: &TruncatedPoly, nvars: usize, cap: u32, offset: usize) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(nvars, cap);
    for (e, c) in p.terms() {
        let mut full = vec![0; nvars];
        full[offset..offset + e.len()].copy_from_slice(e);
        out.add_term(full, c.clone());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub exponents: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing the product side and the character side of an
/// identity through total degree `cap`.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub m: usize,
    pub n: usize,
    pub cap: u32,
    pub lhs: TruncatedPoly,
    pub rhs: TruncatedPoly,
    pub equal: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl IdentityCheck {
    fn compare(m: usize, n: usize, cap: u32, lhs: TruncatedPoly, rhs: TruncatedPoly) -> Self {
        let first_discrepancy = lhs.first_difference(&rhs).map(|(e, a, b)| Discrepancy {
            exponents: e,
            lhs: format_rational(&a),
            rhs: format_rational(&b),
        });
        Self {
            m,
            n,
            cap,
            equal: first_discrepancy.is_none(),
            lhs,
            rhs,
            first_discrepancy,
        }
    }

    /// Degree-`d` slice of the product side.
    pub fn lhs_degree(&self, d: u32) -> TruncatedPoly {
        self.lhs.homogeneous_part(d)
    }
}

fn pair_exps(nvars: usize, i: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[i] += 1;
    e[j] += 1;
    e
}

/// `∏_i 1/(1-x_i) ∏_{i<j} 1/(1-x_i x_j)` against `Σ_λ s_λ(x_1..x_m)`.
pub fn schur_identity_check(m: usize, cap: u32) -> IdentityCheck {
    let mut lhs = TruncatedPoly::one(m, cap);
    for i in 0..m {
        let mut e = vec![0; m];
        e[i] = 1;
        lhs = lhs.mul(&TruncatedPoly::geometric_series(m, cap, &e)).unwrap();
        for j in i + 1..m {
            let g = TruncatedPoly::geometric_series(m, cap, &pair_exps(m, i, j));
            lhs = lhs.mul(&g).unwrap();
        }
    }
    let mut rhs = TruncatedPoly::zero(m, cap);
    for r in 0..=cap as usize {
        for lam in partitions_of(r).iter().filter(|l| l.len() <= m) {
            rhs = rhs.add(&schur(lam, m).poly.with_cap(cap)).unwrap();
        }
    }
    IdentityCheck::compare(m, 0, cap, lhs, rhs)
}

/// Product side of the hook identity: mixed-parity pairs contribute
/// `(1 + x_i x_j)` to the numerator, same-parity pairs `1/(1 - x_i x_j)`,
/// and every variable `1/(1 - x_i)`.
pub fn hook_identity_lhs(m: usize, n: usize, cap: u32) -> TruncatedPoly {
    let nvars = m + n;
    let odd = |i: usize| i >= m;
    let mut lhs = TruncatedPoly::one(nvars, cap);
    for i in 0..nvars {
        let mut e = vec![0; nvars];
        e[i] = 1;
        lhs = lhs.mul(&TruncatedPoly::geometric_series(nvars, cap, &e)).unwrap();
        for j in i + 1..nvars {
            let factor = if odd(i) != odd(j) {
                let mut f = TruncatedPoly::one(nvars, cap);
                f.add_term(pair_exps(nvars, i, j), Rational::one());
                f
            } else {
                TruncatedPoly::geometric_series(nvars, cap, &pair_exps(nvars, i, j))
            };
            lhs = lhs.mul(&factor).unwrap();
        }
    }
    lhs
}

/// `Σ_{|λ| ≤ cap} hs_λ(x)`, summing only over the hook (other shapes vanish).
pub fn hook_character_sum(m: usize, n: usize, cap: u32) -> TruncatedPoly {
    let mut rhs = TruncatedPoly::zero(m + n, cap);
    for r in 0..=cap as usize {
        for lam in partitions_of(r) {
            if crate::shapes::in_hook(&lam, m, n) {
                rhs = rhs.add(&hook_schur_ssyt(&lam, m, n).poly.with_cap(cap)).unwrap();
            }
        }
    }
    rhs
}

/// Hook generalization of the Schur identity, expanded exactly through
/// total degree `cap`.
pub fn hook_identity_check(m: usize, n: usize, cap: u32) -> IdentityCheck {
    IdentityCheck::compare(
        m,
        n,
        cap,
        hook_identity_lhs(m, n, cap),
        hook_character_sum(m, n, cap),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(nvars: usize, cap: u32, terms: &[(&[u32], i64)]) -> TruncatedPoly {
        let mut out = TruncatedPoly::zero(nvars, cap);
        for (e, c) in terms {
            out.add_term(e.to_vec(), int(*c));
        }
        out
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1]), 2).poly, poly(2, 1, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(
            schur(&p(&[2]), 2).poly,
            poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn skew_examples() {
        let same = skew_schur(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap();
        assert_eq!(same.poly, TruncatedPoly::one(3, 0));
        assert_eq!(skew_schur(&p(&[1]), &Partition::empty(), 1).unwrap().poly, poly(1, 1, &[(&[1], 1)]));
        assert_eq!(
            skew_schur(&p(&[2, 1]), &p(&[1]), 2).unwrap().poly,
            poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
        assert!(matches!(
            skew_schur(&p(&[1]), &p(&[2]), 2),
            Err(Error::Containment { .. })
        ));
    }

    #[test]
    fn hook_schur_examples() {
        let two = poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 1)]);
        let one_one = poly(2, 2, &[(&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(hook_schur_ssyt(&p(&[2]), 1, 1).poly, two);
        assert_eq!(hook_schur_factorized(&p(&[2]), 1, 1).poly, two);
        assert_eq!(hook_schur_ssyt(&p(&[1, 1]), 1, 1).poly, one_one);
        assert_eq!(hook_schur_factorized(&p(&[1, 1]), 1, 1).poly, one_one);
        assert_eq!(
            hook_schur_ssyt(&p(&[1]), 2, 1).poly,
            poly(3, 1, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)])
        );
        assert_eq!(hook_schur_factorized(&Partition::empty(), 2, 2).poly, TruncatedPoly::one(4, 0));
        assert!(hook_schur_ssyt(&p(&[2, 2]), 1, 1).is_zero());
    }

    #[test]
    fn identity_examples() {
        assert!(schur_identity_check(1, 5).equal);
        assert!(schur_identity_check(2, 4).equal);
        assert!(schur_identity_check(3, 4).equal);

        let c = hook_identity_check(1, 1, 2);
        assert!(c.equal);
        assert_eq!(c.lhs_degree(2), poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));

        let c = hook_identity_check(0, 1, 5);
        assert!(c.equal);
        assert_eq!(c.lhs, TruncatedPoly::geometric_series(1, 5, &[1]));

        let c = hook_identity_check(1, 0, 5);
        assert!(c.equal);
        assert_eq!(c.lhs, schur_identity_check(1, 5).lhs);
    }

    #[test]
    fn wrong_mixed_factor_is_caught() {
        // dropping the (1 + xy) numerator must break the identity at degree 2
        let good = hook_identity_lhs(1, 1, 3);
        let bad = TruncatedPoly::geometric_series(2, 3, &[1, 0])
            .mul(&TruncatedPoly::geometric_series(2, 3, &[0, 1]))
            .unwrap();
        assert_ne!(good, bad);
        let c = IdentityCheck::compare(1, 1, 3, bad, hook_character_sum(1, 1, 3));
        assert!(!c.equal);
        assert_eq!(c.first_discrepancy.unwrap().exponents.iter().sum::<u32>(), 2);
    }

    #[test]
    fn json_terms() {
        let j = hook_schur_ssyt(&p(&[2]), 1, 1).to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"coefficient":"1","exponents":[1,1]},{"coefficient":"1","exponents":[2,0]}]"#
        );
    }
}
