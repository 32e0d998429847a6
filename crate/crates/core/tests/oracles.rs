//! Values frozen from an independent brute-force implementation (direct
//! filling enumeration, union-find over the relations, series expansion).

use superplactic::exactmath::default_q;
use superplactic::freealg::{hilbert_series, quotient_dim, ssyt_total, Specialization};
use superplactic::plactic::enumerate_classes;
use superplactic::shapes::{count_ssyt, Partition};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn ssyt_counts_match_brute_force() {
    let cases: &[(&[usize], usize, usize, usize)] = &[
        (&[2, 1], 2, 2, 20),
        (&[3, 2], 1, 2, 4),
        (&[2, 2, 1], 2, 1, 4),
        (&[3, 1, 1], 1, 1, 2),
        (&[4], 0, 2, 0),
        (&[1, 1, 1, 1], 2, 0, 0),
        (&[2, 2], 1, 1, 0),
        (&[3, 3], 1, 1, 0),
    ];
    for &(shape, m, n, want) in cases {
        assert_eq!(count_ssyt(&p(shape), m, n), want, "{shape:?} {m}|{n}");
    }
}

#[test]
fn class_counts_match_union_find() {
    for (m, n, r, want) in [(2, 1, 4, 37), (1, 2, 4, 37), (2, 2, 3, 44), (3, 0, 4, 39), (0, 3, 4, 39), (1, 1, 5, 10)] {
        assert_eq!(enumerate_classes(m, n, r).unwrap().len(), want, "({m},{n},{r})");
        assert_eq!(ssyt_total(m, n, r), want);
    }
}

#[test]
fn hilbert_matches_series_expansion() {
    assert_eq!(hilbert_series(2, 1, 6).0, vec![1, 3, 9, 19, 37, 63, 101]);
    assert_eq!(hilbert_series(1, 2, 6).0, vec![1, 3, 9, 19, 37, 63, 101]);
    assert_eq!(hilbert_series(2, 2, 6).0, vec![1, 4, 16, 44, 112, 244, 496]);
    assert_eq!(hilbert_series(3, 1, 6).0, vec![1, 4, 16, 44, 113, 248, 512]);
}

#[test]
fn quotient_dims_in_degree_four() {
    let q = Specialization::At(default_q());
    assert_eq!(quotient_dim(2, 1, 4, &Specialization::Classical).unwrap(), 37);
    assert_eq!(quotient_dim(1, 2, 4, &q).unwrap(), 37);
    assert_eq!(quotient_dim(2, 2, 3, &q).unwrap(), 44);
}
