use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::modrep::random::random_module;
use crate::resolution::resolve;
use crate::testutil::{r1, r2, r3};

#[test]
fn tor_against_residue_field_gives_betti() {
    for alg in [r1(), r2(), r3()] {
        let k = ModuleRep::residue_field(alg.clone()).unwrap();
        let tor = tor_lengths(&k, &k, 6).unwrap();
        assert_eq!(tor.lengths.as_slice(), resolve(&k, 6).unwrap().betti());
        assert_eq!(tor.vanishing_from, None);
        let ext = ext_lengths(&k, &k, 6).unwrap();
        assert_eq!(ext, tor.lengths);
    }
}

#[test]
fn free_arguments_kill_higher_tor() {
    let a = r3();
    let free = ModuleRep::free(a.clone(), 1).unwrap();
    let m = ModuleRep::cyclic_from_strs(a, &["b", "c"]).unwrap();
    let tor = tor_lengths(&m, &free, 5).unwrap();
    assert_eq!(tor.lengths, vec![2, 0, 0, 0, 0, 0]);
    assert_eq!(tor.vanishing_from, Some(1));
    let tor = tor_lengths(&free, &m, 5).unwrap();
    assert_eq!(tor.lengths, vec![2, 0, 0, 0, 0, 0]);
    assert_eq!(ext_lengths(&free, &m, 3).unwrap(), vec![2, 0, 0, 0]);
}

#[test]
fn periodic_tor_profile() {
    let a = r3();
    let m = ModuleRep::cyclic_from_strs(a, &["a"]).unwrap();
    let tor = tor_lengths(&m, &m, 8).unwrap();
    assert_eq!(tor.lengths, vec![3; 9]);
    assert_eq!(vanishing_scan(&tor.lengths, 3), None);
}

#[test]
fn bass_numbers() {
    let h = r1();
    let a = ModuleRep::free(h, 1).unwrap();
    assert_eq!(bass_sequence(&a, 5).unwrap().values, vec![1, 0, 0, 0, 0, 0]);
    let b = r2();
    let a = ModuleRep::free(b.clone(), 1).unwrap();
    let bass = bass_sequence(&a, 4).unwrap();
    assert_eq!(bass.values[0], 2);
    assert_eq!(bass.values, bass.via_dual);
    let k = ModuleRep::residue_field(b).unwrap();
    assert_eq!(bass_sequence(&k, 5).unwrap().values, vec![1, 2, 4, 8, 16, 32]);
}

#[test]
fn scan_examples() {
    assert_eq!(vanishing_scan(&[1, 1, 0, 0, 0], 3), Some(2));
    assert_eq!(vanishing_scan(&[1, 1, 0, 0, 0], 4), None);
    assert_eq!(vanishing_scan(&[3, 0, 0, 0], 1), Some(1));
    assert_eq!(vanishing_scan(&[3, 3, 3], 1), None);
    assert_eq!(vanishing_scan(&[0, 0], 2), Some(0));
    assert_eq!(vanishing_scan(&[], 1), None);
}

#[test]
fn ungraded_route_agrees() {
    let a = r3();
    let m = ModuleRep::cyclic_from_strs(a.clone(), &["b", "c"]).unwrap();
    let n = ModuleRep::cyclic_from_strs(a, &["a", "b"]).unwrap();
    let graded = tor_lengths(&m, &n, 4).unwrap();
    let plain = tor_lengths(&m.ungraded(), &n.ungraded(), 4).unwrap();
    assert_eq!(graded, plain);
    assert_eq!(
        ext_lengths(&m, &n, 4).unwrap(),
        ext_lengths(&m.ungraded(), &n.ungraded(), 4).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tor_is_balanced_and_bass_matches_dual(seed in any::<u64>(), which in 0usize..3) {
        let alg = [r1(), r2(), r3()][which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng).unwrap();
        let n = random_module(&alg, &mut rng).unwrap();
        let mn = tor_lengths(&m, &n, 4).unwrap();
        let nm = tor_lengths(&n, &m, 4).unwrap();
        prop_assert_eq!(&mn.lengths, &nm.lengths);
        let k = ModuleRep::residue_field(alg).unwrap();
        let mk = tor_lengths(&m, &k, 4).unwrap();
        let betti = resolve(&m, 4).unwrap().betti().to_vec();
        prop_assert_eq!(mk.lengths, betti);
        bass_sequence(&n, 4).unwrap();
    }
}
