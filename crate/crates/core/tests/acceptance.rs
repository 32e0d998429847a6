//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::time::Instant;

use superplactic::exactmath::default_q;
use superplactic::freealg::{hilbert_series, multilinear_count, quotient_dim, ssyt_total, verify_decomposition, Specialization};
use superplactic::heckerep::{
    idempotent_image, verify_commutant, verify_gl_relations, verify_idempotents, verify_ybe_hecke, GlConvention,
};
use superplactic::plactic::verify_class_bijection;
use superplactic::shapes::{count_ssyt, partitions_of, Partition};
use superplactic::symfunc::{hook_identity_check, hook_schur_factorized, hook_schur_ssyt, schur_identity_check};
use superplactic::Result;

type Outcome = Result<(bool, String)>;

fn hook_identities() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let c = hook_identity_check(m, n, 6);
        ok &= c.equal;
        notes.push(format!("hook {m}|{n}: {}", c.equal));
    }
    for m in 1..=3 {
        let c = schur_identity_check(m, 6);
        ok &= c.equal;
        notes.push(format!("schur {m}: {}", c.equal));
    }
    Ok((ok, notes.join(", ")))
}

fn character_routes() -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for r in 0..=5 {
        for l in partitions_of(r) {
            count += 1;
            if hook_schur_ssyt(&l, 2, 2) != hook_schur_factorized(&l, 2, 2) {
                bad.push(format!("{:?}", l.parts()));
            }
        }
    }
    Ok((bad.is_empty(), format!("{count} shapes at 2|2, mismatches {bad:?}")))
}

fn decomposition() -> Outcome {
    let q = default_q();
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n) in [(1, 1), (2, 1)] {
        let rep = verify_decomposition(m, n, 4, &q)?;
        let hs = hilbert_series(m, n, 4);
        for r in 0..=4 {
            let classical = quotient_dim(m, n, r, &Specialization::Classical)?;
            let deformed = quotient_dim(m, n, r, &Specialization::At(q.clone()))?;
            let total = ssyt_total(m, n, r);
            ok &= classical == total && deformed == total && hs.0[r] as usize == total;
        }
        ok &= rep.pass;
        notes.push(format!("{m}|{n}: {:?}", hs.0));
    }
    let seq = hilbert_series(1, 1, 4).0;
    ok &= seq == vec![1, 2, 4, 6, 8];
    Ok((ok, notes.join(", ")))
}

fn plactic_bijection() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n, r) in [(1, 1, 3), (1, 1, 4), (2, 1, 3), (2, 0, 4), (0, 2, 4)] {
        let rep = verify_class_bijection(m, n, r)?;
        let good = rep.pass
            && rep.classes == ssyt_total(m, n, r)
            && rep.one_reading_word_per_class
            && rep.sign_consistent;
        ok &= good;
        notes.push(format!("({m},{n},{r}) {} classes", rep.classes));
    }
    Ok((ok, notes.join(", ")))
}

fn idempotents() -> Outcome {
    let rep = verify_idempotents();
    let ok = rep.pass
        && rep.classical_idempotent
        && rep.deformed_idempotent
        && rep.omega_fixes
        && rep.specializes_to_classical;
    Ok((ok, format!("{rep:?}")))
}

fn rmatrix() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let rep = verify_ybe_hecke(m, n)?;
        ok &= rep.pass && rep.yang_baxter && rep.hecke && rep.classical_limit;
        notes.push(format!("{m}|{n}: {}", rep.pass));
    }
    Ok((ok, notes.join(", ")))
}

fn gamma_image() -> Outcome {
    let q = default_q();
    let shape = Partition::new(vec![2, 1])?;
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let rep = idempotent_image(m, n, &q)?;
        let expected = count_ssyt(&shape, m, n);
        let good = rep.pass
            && rep.rank == expected
            && rep.variants[0].matches()
            && rep.gamma_at_one_matches_double_brackets
            && rep.classical_matches_double_brackets;
        ok &= good;
        notes.push(format!("{m}|{n}: rank {} of {expected}", rep.rank));
    }
    Ok((ok, notes.join(", ")))
}

fn schur_weyl() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for total in 1..=3 {
        for m in 0..=total {
            let n = total - m;
            for r in 1..=4 {
                let rep = verify_commutant(m, n, r)?;
                ok &= rep.pass && rep.commute && rep.rank == rep.expected_rank;
                if (m, n, r) == (1, 1, 3) {
                    ok &= rep.rank == 6;
                    notes.push(format!("1|1 r=3 rank {}", rep.rank));
                }
                if (m, n, r) == (1, 0, 3) {
                    ok &= rep.rank == 1;
                    notes.push(format!("1|0 r=3 rank {}", rep.rank));
                }
            }
        }
    }
    Ok((ok, notes.join(", ")))
}

fn gl_relations() -> Outcome {
    let mut ok = true;
    let mut distinguished = false;
    for total in 1..=3 {
        for m in 0..=total {
            let n = total - m;
            let rep = verify_gl_relations(m, n)?;
            ok &= rep.pass;
            if rep.indistinguishable {
                ok &= rep.variants.iter().all(|v| v.closes);
            } else {
                distinguished = true;
                ok &= rep.closing == Some(GlConvention::Standard);
            }
        }
    }
    ok &= distinguished;
    Ok((ok, "closing convention: Standard (second term E_kj)".into()))
}

fn multilinear() -> Outcome {
    let counts: Vec<usize> = (1..=5).map(multilinear_count).collect();
    let all_even: Vec<usize> = (1..=5)
        .map(|r| partitions_of(r).iter().map(|l| superplactic::shapes::count_standard(l) as usize).sum())
        .collect();
    let ok = counts == vec![1, 2, 4, 10, 26] && all_even == counts;
    Ok((ok, format!("{counts:?}")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("hook and classical Schur identities to degree 6", hook_identities),
        ("hook Schur cross-route at 2|2, |λ| <= 5", character_routes),
        ("decomposition counts agree, 1|1 gives 1,2,4,6,8", decomposition),
        ("plactic class bijection", plactic_bijection),
        ("Eulerian idempotents", idempotents),
        ("R-matrix Yang-Baxter, Hecke and classical limit", rmatrix),
        ("Gamma span equals image of sigma_q(e(q))", gamma_image),
        ("Schur-Weyl commutant ranks", schur_weyl),
        ("gl superbracket relations", gl_relations),
        ("multilinear counts 1,2,4,10,26", multilinear),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name} [{detail}] ({} ms)", i + 1, start.elapsed().as_millis());
        failed += usize::from(!ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
