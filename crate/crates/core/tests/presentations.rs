use std::time::Instant;

use osp_core::dsl::GenRef;
use osp_core::matrixrep::{ExactMatrix, Realization};
use osp_core::presentations::{
    cartan_matrix, chevalley_presentation, green_presentation, root_assignment, AlgebraSignature,
    SignatureError,
};
use osp_core::{LetterKind, Parity, Sqrt2Scalar};

fn sig(m: u16, n: u16) -> AlgebraSignature {
    AlgebraSignature::new(m, n).unwrap()
}

#[test]
fn cartan_matrix_of_b44() {
    let t = Instant::now();
    let expected = [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, -2, 1, 0, 0],
        [0, 0, 0, 0, 1, -2, 1, 0],
        [0, 0, 0, 0, 0, 1, -2, 1],
        [0, 0, 0, 0, 0, 0, 1, -1],
    ];
    let rows = cartan_matrix(&sig(4, 4)).rows();
    assert_eq!(rows, expected.map(|r| r.to_vec()).to_vec());
    assert!(t.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn cartan_matrix_small_and_symmetric() {
    assert_eq!(
        cartan_matrix(&sig(1, 1)).rows(),
        vec![vec![0, 1], vec![1, -1]]
    );
    for m in 1..=5 {
        for n in 1..=5 {
            let a = cartan_matrix(&sig(m, n));
            assert!(a.is_symmetric());
            assert_eq!(a.rank(), usize::from(m + n));
            // The only odd simple root sits at position m.
            assert_eq!(a.get(m, m), 0);
        }
    }
}

#[test]
fn cartan_matrix_matches_matrix_realization() {
    // [h_i, e_j] = a_ij e_j in the defining representation.
    for (m, n) in [(1, 1), (2, 1), (1, 3), (4, 4)] {
        let s = sig(m, n);
        let r = Realization::new(&s).unwrap();
        let a = cartan_matrix(&s);
        let g = |k, i| r.generator(&GenRef::new(k, i)).unwrap().clone();
        for i in 1..=s.rank() {
            for j in 1..=s.rank() {
                let c = ExactMatrix::supercommutator(&g(LetterKind::H, i), &g(LetterKind::E, j));
                assert_eq!(
                    c,
                    g(LetterKind::E, j).scale(&Sqrt2Scalar::from_int(a.get(i, j))),
                    "a[{i},{j}] at ({m},{n})"
                );
            }
        }
    }
}

#[test]
fn grading_and_signature_validation() {
    let s = sig(2, 3);
    let parities: Vec<_> = (1..=6).map(|i| s.grading(i)).collect();
    assert_eq!(
        parities,
        [
            Parity::Odd,
            Parity::Odd,
            Parity::Even,
            Parity::Even,
            Parity::Even,
            Parity::Even
        ]
    );
    assert_eq!(AlgebraSignature::new(0, 2), Err(SignatureError::ZeroM(0)));
    assert_eq!(AlgebraSignature::new(1, 0), Err(SignatureError::ZeroN(0)));
    // Simple e_i carries parity <i> + <i+1>: only e_m is odd.
    let p = chevalley_presentation(&s, true);
    for g in &p.generators {
        if g.kind == LetterKind::E {
            assert_eq!(g.parity.is_odd(), g.index == 2, "{g}");
        }
    }
}

#[test]
fn green_generators_have_weights_and_grading() {
    let s = sig(2, 2);
    let roots = root_assignment(&s);
    for (l, _) in &roots {
        if matches!(l.kind, LetterKind::AMinus | LetterKind::APlus) {
            assert_eq!(l.parity, s.grading(l.index));
        }
    }
    let p = green_presentation(&s, true);
    assert!(p
        .generators
        .iter()
        .any(|g| g.kind == LetterKind::APlus && g.index == 4));
}

#[test]
fn canonical_text_is_stable() {
    let s = sig(2, 1);
    let a = chevalley_presentation(&s, true).canonical_text();
    assert_eq!(a, chevalley_presentation(&s, true).canonical_text());
    assert!(a.starts_with("chevalley m=2 n=1 deformed=true\n"));
    assert_ne!(a, chevalley_presentation(&s, false).canonical_text());
}
