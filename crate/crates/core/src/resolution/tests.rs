use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::modrep::random::random_module;
use crate::testutil::{r1, r2, r3};

/// Independent exactness check on the expanded k-matrices.
fn assert_exact(res: &FreeResolution) {
    let mut prev_nullity = {
        let aug = res.augmentation();
        assert_eq!(aug.rank(), res.module().length(), "augmentation is onto");
        aug.cols() - aug.rank()
    };
    for i in 0..res.depth() {
        let d = res.expanded_boundary(i);
        let r = d.rank();
        assert_eq!(r, prev_nullity, "exactness at stage {i}");
        prev_nullity = d.cols() - r;
        if i > 0 {
            let prev = res.expanded_boundary(i - 1);
            assert!(prev.mul(&d).is_zero());
        }
        assert!(res.boundary(i).is_minimal(res.algebra()));
    }
}

fn assert_syzygies(res: &FreeResolution) {
    for i in 0..=res.depth() {
        let s = res.syzygy(i).unwrap();
        s.verify().unwrap();
        assert_eq!(s.length(), res.syzygy_lengths()[i]);
        assert_eq!(s.min_gens(), res.betti()[i]);
    }
}

#[test]
fn residue_field_over_hypersurface() {
    let k = ModuleRep::residue_field(r1()).unwrap();
    let res = resolve(&k, 10).unwrap();
    assert_eq!(res.betti(), &[1; 11]);
    assert_exact(&res);
}

#[test]
fn residue_field_with_square_zero_maximal_ideal() {
    let k = ModuleRep::residue_field(r2()).unwrap();
    let res = resolve(&k, 8).unwrap();
    let expected: Vec<usize> = (0..=8).map(|n| 1 << n).collect();
    assert_eq!(res.betti(), expected.as_slice());
    let small = resolve(&k, 4).unwrap();
    assert_exact(&small);
    assert_syzygies(&small);
}

#[test]
fn periodic_cyclic_module() {
    let a = r3();
    let m = ModuleRep::cyclic_from_strs(a, &["a"]).unwrap();
    let res = resolve(&m, 12).unwrap();
    assert_eq!(res.betti(), &[1; 13]);
    assert_eq!(res.first_zero(), None);
    assert_eq!(res.syzygy_lengths()[1], 3);
    assert_exact(&res);
    let p = minimal_presentation(&m).unwrap();
    assert_eq!((p.rows(), p.cols()), (1, 1));
    assert_eq!(p.entry(0, 0), m.algebra().parse_element("a").unwrap().as_slice());
}

#[test]
fn residue_field_of_r3_matches_series() {
    // 1/(1 - 3t + 2t^2) = Σ (2^{n+1} - 1) t^n
    let k = ModuleRep::residue_field(r3()).unwrap();
    let res = resolve(&k, 8).unwrap();
    let expected: Vec<usize> = (0..=8).map(|n| (1 << (n + 1)) - 1).collect();
    assert_eq!(res.betti(), expected.as_slice());
    let small = resolve(&k, 3).unwrap();
    assert_exact(&small);
    assert_syzygies(&small);
    assert_eq!(small.syzygy(1).unwrap().length(), 5);
}

#[test]
fn presentations() {
    let a = r3();
    let free = ModuleRep::free(a.clone(), 1).unwrap();
    let p = minimal_presentation(&free).unwrap();
    assert_eq!((p.rows(), p.cols()), (1, 0));
    let res = resolve(&free, 5).unwrap();
    assert_eq!(res.betti(), &[1, 0, 0, 0, 0, 0]);
    assert_eq!(res.first_zero(), Some(1));
    let h = r1();
    let k = ModuleRep::residue_field(h.clone()).unwrap();
    let p = minimal_presentation(&k).unwrap();
    assert_eq!((p.rows(), p.cols()), (1, 1));
    assert_eq!(p.entry(0, 0), h.parse_element("x").unwrap().as_slice());
    let z = ModuleRep::zero(a);
    let res = resolve(&z, 3).unwrap();
    assert_eq!(res.betti(), &[0, 0, 0, 0]);
    let p = minimal_presentation(&z).unwrap();
    assert_eq!((p.rows(), p.cols()), (0, 0));
}

#[test]
fn syzygy_examples() {
    let a = r3();
    let k = ModuleRep::residue_field(a.clone()).unwrap();
    let res = resolve(&k, 2).unwrap();
    assert_eq!(res.syzygy(1).unwrap().length(), 5);
    assert!(matches!(res.syzygy(3), Err(Error::DepthExceeded { .. })));
    let m = ModuleRep::cyclic_from_strs(a, &["a"]).unwrap();
    let res = resolve(&m, 2).unwrap();
    let s = res.syzygy(1).unwrap();
    assert_eq!((s.length(), s.min_gens()), (3, 1));
}

#[test]
fn budget_is_enforced() {
    let k = ModuleRep::residue_field(r3()).unwrap();
    let opts = ResolveOptions { budget: 100, seed: None };
    assert!(matches!(
        resolve_with(&k, 10, opts),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn ungraded_and_reordered_inputs_agree() {
    let a = r3();
    let m = ModuleRep::cyclic_from_strs(a.clone(), &["b", "c"]).unwrap();
    let graded = resolve(&m, 5).unwrap();
    let ungraded = resolve(&m.ungraded(), 5).unwrap();
    assert_eq!(graded.betti(), ungraded.betti());
    assert_exact(&ungraded);
    let shuffled = resolve_with(&m, 5, ResolveOptions { seed: Some(9), ..Default::default() }).unwrap();
    assert_eq!(graded.betti(), shuffled.betti());
    let mixed = ModuleRep::cyclic_from_strs(a, &["a + a*b"]).unwrap();
    let res = resolve(&mixed, 4).unwrap();
    assert_exact(&res);
    assert_syzygies(&res);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_resolutions_are_minimal_and_exact(seed in any::<u64>(), which in 0usize..3) {
        let alg = [r1(), r2(), r3()][which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng).unwrap();
        let res = resolve(&m, 3).unwrap();
        assert_exact(&res);
        assert_syzygies(&res);
        let f = m.field();
        let n = m.length();
        if n > 0 {
            let mut p = Matrix::identity(f, n);
            for i in 0..n {
                for j in i + 1..n {
                    p.set(i, j, ((seed >> ((i + j) % 60)) % 5) as u32);
                }
            }
            let moved = m.change_basis(&p).unwrap();
            let again = resolve_with(&moved, 3, ResolveOptions { seed: Some(seed), ..Default::default() }).unwrap();
            prop_assert_eq!(res.betti(), again.betti());
        }
    }
}
