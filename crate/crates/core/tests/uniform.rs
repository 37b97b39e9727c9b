#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use drg_uniform::families::{hamming, hermitian_forms, halved_cube, johnson};
use drg_uniform::graph_core::bfs_layers;
use drg_uniform::terwilliger::{lfr_split, LayerOps};
use drg_uniform::tmodules::{decompose, DecomposeOptions};
use drg_uniform::uniform::closed_forms::*;
use drg_uniform::uniform::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn arb_entry() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #[test]
    fn principal_determinant_matches_elimination(
        eps in 1usize..=12,
        em in proptest::collection::vec(arb_entry(), 12),
        ep in proptest::collection::vec(arb_entry(), 12),
        s in 1usize..=12,
        t in 1usize..=12,
    ) {
        let u = ParameterMatrix::new(em[..eps].to_vec(), ep[..eps].to_vec());
        let (s, t) = (s.min(t).min(eps), s.max(t).min(eps));
        let dense = u.dense();
        let sub: Vec<Vec<Q>> = dense[s - 1..t].iter().map(|r| r[s - 1..t].to_vec()).collect();
        prop_assert_eq!(principal_determinant(&u, s, t), oracle_det(sub));
    }

    /// Any nonzero perturbation of a verified structure breaks some layer equation.
    #[test]
    fn verification_rejects_perturbations(layer in 1usize..=3, which in 0usize..3, delta in prop_oneof![Just(frac(1, 2)), Just(q(-1)), Just(q(3))]) {
        let g = hamming(3, 3, 1000).unwrap();
        let mut us = hamming_structure(3, 3);
        match which {
            0 if layer > 1 => us.u.e_minus[layer - 1] += delta,
            1 if layer < 3 => us.u.e_plus[layer - 1] += delta,
            _ => us.f[layer - 1] += delta,
        }
        prop_assert!(!verify_on_graph(&g, 0, &us).unwrap());
    }
}

#[test]
fn closed_form_structures_verify() {
    let g = hamming(3, 3, 1000).unwrap();
    assert!(verify_on_graph(&g, 0, &hamming_structure(3, 3)).unwrap());
    let g = halved_cube(7, 1000).unwrap();
    assert!(verify_on_graph(&g, 5, &halved_cube_structure(3)).unwrap());
}

#[test]
fn hamming_certificate_at_every_base() {
    let g = hamming(3, 3, 1000).unwrap();
    let certs = certify_all_bases(&g, &CertifyOptions::default()).unwrap();
    assert_eq!(certs.len(), 27);
    for c in certs {
        assert_eq!(c.verdict, Verdict::StronglyUniform);
        assert_eq!(c.e_minus, vec![q(0), frac(-1, 2), frac(-1, 2)]);
        assert_eq!(c.e_plus, vec![frac(-1, 2), frac(-1, 2), q(0)]);
        assert_eq!(c.f, vec![q(2); 3]);
        assert!(c.checks.verify_given && c.checks.off_diagonal_nonvanishing && c.checks.principal_minors_nonsingular);
    }
}

/// The layer equation at layer `i` holds on `E*_i W` for every module `W`,
/// and the equation's solution set is independent of the base.
#[test]
fn layer_equation_holds_module_by_module() {
    let g = hamming(3, 3, 1000).unwrap();
    let us = hamming_structure(3, 3);
    let dp = bfs_layers(&g, 0).unwrap();
    let ops = LayerOps::new(&g, &dp);
    let dec = decompose(&g, 0, &DecomposeOptions::default()).unwrap();
    assert_eq!(dec.covered_dim, g.n());
    let split = lfr_split(&g, &dp);
    for m in &dec.modules {
        for v in m.global_basis(&ops) {
            let lay = (0..=3).find(|&i| dp.layer(i).iter().any(|&y| !v[y].is_zero())).unwrap();
            if lay == 0 {
                continue;
            }
            let apply = |mat: &drg_uniform::terwilliger::SparseBinary, v: &[Q]| mat.apply(v);
            let l = |v: &[Q]| apply(&split.l, v);
            let r = |v: &[Q]| apply(&split.r, v);
            let rll = r(&l(&l(&v)));
            let lrl = l(&r(&l(&v)));
            let llr = l(&l(&r(&v)));
            let lv = l(&v);
            for y in 0..g.n() {
                let lhs = us.u.e_minus(lay) * &rll[y] + &lrl[y] + us.u.e_plus(lay) * &llr[y];
                assert_eq!(lhs, &us.f[lay - 1] * &lv[y]);
            }
        }
    }
}

#[test]
fn certified_structures_satisfy_admissibility() {
    for (name, g) in small_families() {
        let c = certify_uniform(&g, 0, &CertifyOptions::default()).unwrap();
        if let Some(us) = &c.structure {
            assert!(verify_on_graph(&g, 0, us).unwrap(), "{name}");
            assert!(check_parameter_conditions(&us.u).is_ok(), "{name}");
            assert_ne!(c.verdict, Verdict::NoUniform);
        } else {
            assert_eq!(c.verdict, Verdict::NoUniform, "{name}");
            assert!(c.failure.is_some());
        }
    }
}

#[test]
fn obstructed_families() {
    for g in [johnson(6, 3, 1000).unwrap(), halved_cube(8, 1000).unwrap(), hermitian_forms(2, 3, 1000).unwrap()] {
        let c = certify_uniform(&g, 0, &CertifyOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::NoUniform);
    }
}

#[test]
fn non_thin_diagnostic_on_hamming_has_no_witness() {
    let g = hamming(3, 3, 1000).unwrap();
    let dec = decompose(&g, 0, &DecomposeOptions { max_endpoint: Some(1), ..Default::default() }).unwrap();
    let d = non_thin_diagnostic(&g, 0, &dec).unwrap();
    assert!(d.witness.is_none());
    assert!(!d.endpoint_one.is_empty());
    let other = decompose(&g, 1, &DecomposeOptions { max_endpoint: Some(1), ..Default::default() }).unwrap();
    assert!(non_thin_diagnostic(&g, 0, &other).is_err());
}

#[test]
fn determinant_closed_forms() {
    for (s, t) in [(1, 1), (1, 2), (2, 3), (1, 3)] {
        let u = hamming_structure(3, 3).u;
        assert_eq!(principal_determinant(&u, s, t), hamming_determinant(s, t));
        let u = halved_cube_parameter_matrix(3);
        assert_eq!(principal_determinant(&u, s, t), halved_cube_determinant(3, s, t));
    }
    let u = dual_polar_structure(3, -2).u;
    for s in 1..=3 {
        for t in s..=3 {
            assert_eq!(principal_determinant(&u, s, t), dual_polar_determinant(-2, s, t));
        }
    }
    assert!(!hamming_determinant(3, 3).is_zero() && hamming_determinant(2, 2).is_one());
}
