mod common;

use ado_core::expansion::{expansion_step, initial_presentation};
use ado_core::jordan::{jc_decompose, jc_decompose_derivation};
use ado_core::{catalog, JcDecomposition, LieAlgebra, Matrix};
use common::jc::{jc_violation, leibniz_holds, oracle_suite, random_suite};
use common::r;
use proptest::prelude::*;

fn assert_jc(d: &Matrix, jc: &JcDecomposition, what: &str) {
    if let Some(v) = jc_violation(d, jc) {
        panic!("{what}: {v}");
    }
}

#[test]
fn hundred_random_matrices() {
    let suite = random_suite();
    assert_eq!(suite.len(), 100);
    assert!(suite.iter().all(|d| (1..=6).contains(&d.rows())));
    for (case, d) in suite.iter().enumerate() {
        let jc = jc_decompose(d).unwrap();
        assert_jc(d, &jc, &format!("random case {case}"));
    }
}

#[test]
fn eigenprojection_oracle_agrees() {
    for (case, (d, s)) in oracle_suite().iter().enumerate() {
        let jc = jc_decompose(d).unwrap();
        assert_jc(d, &jc, &format!("oracle case {case}"));
        assert_eq!(&jc.semisimple, s, "oracle case {case}");
    }
}

proptest! {
    #[test]
    fn permutation_conjugation(
        entries in prop::collection::vec(-3i64..=3, 25),
        perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()
    ) {
        let d = Matrix::from_fn(5, 5, |i, j| r(entries[i * 5 + j]));
        let p = Matrix::from_fn(5, 5, |i, j| if perm[j] == i { r(1) } else { r(0) });
        let pinv = p.transpose();
        let conj = &(&p * &d) * &pinv;
        let s = jc_decompose(&d).unwrap().semisimple;
        let s_conj = jc_decompose(&conj).unwrap().semisimple;
        prop_assert_eq!(s_conj, &(&p * &s) * &pinv);
    }
}

fn check_derivation_split(g: &LieAlgebra, d: &Matrix, what: &str) {
    let jc = jc_decompose_derivation(g, d).unwrap();
    assert_jc(d, &jc, what);
    assert!(leibniz_holds(g, &jc.semisimple), "{what}: d_s not a derivation");
    assert!(leibniz_holds(g, &jc.nilpotent), "{what}: d_n not a derivation");
    let ker = d.kernel();
    assert!(jc.semisimple.kernel().contains_subspace(&ker).unwrap(), "{what}: ker d ⊄ ker d_s");
    assert!(jc.nilpotent.kernel().contains_subspace(&ker).unwrap(), "{what}: ker d ⊄ ker d_n");
}

#[test]
fn catalog_derivations_split_into_derivations() {
    for name in catalog::END_TO_END {
        let g = catalog::lookup(name).unwrap();
        for i in 0..g.dim() {
            check_derivation_split(&g, &g.ad_basis(i), &format!("{name} ad e{i}"));
        }
    }
    // An outer derivation of the Heisenberg algebra: x ↦ x + y, y ↦ y, z ↦ 2z.
    let h = catalog::heisenberg();
    let d = Matrix::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 2]]);
    assert!(leibniz_holds(&h, &d));
    check_derivation_split(&h, &d, "heisenberg outer");
}

#[test]
fn expansion_derivations_split_into_derivations() {
    for name in catalog::END_TO_END {
        let mut pres = initial_presentation(&catalog::lookup(name).unwrap()).unwrap();
        while pres.defect() > 0 {
            let next = expansion_step(&pres).unwrap();
            let step = next.trace.last().unwrap();
            let (ideal, _) = pres.algebra.subalgebra_on_basis(&step.ideal).unwrap();
            assert!(leibniz_holds(&ideal, &step.d), "{name}: d");
            check_derivation_split(&ideal, &step.d, &format!("{name} step {}", next.trace.len()));
            let jc = jc_decompose(&step.d).unwrap();
            assert_eq!((jc.semisimple, jc.nilpotent), (step.d_s.clone(), step.d_n.clone()));
            pres = next;
        }
    }
}
