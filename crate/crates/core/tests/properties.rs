use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use curvlab::asymptotics::ratio_bounds_hold;
use curvlab::audit::{check_first_inequality, check_length_identity, AuditConfig, Verdict};
use curvlab::homology::tor_lengths;
use curvlab::modrep::random::{random_graded_module, random_module};
use curvlab::{resolve, QuotientAlgebra};

fn rings() -> Vec<Arc<QuotientAlgebra>> {
    vec![
        Arc::new(QuotientAlgebra::build(101, &["x", "y"], &["x^2", "x*y", "y^2"]).unwrap()),
        Arc::new(QuotientAlgebra::build(101, &["a", "b", "c"], &["a^2", "b*c", "c^2", "b^2 - a*c"]).unwrap()),
        Arc::new(QuotientAlgebra::build(7, &["x", "y"], &["x^2", "y^3"]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unconditional_inequalities_hold(seed in any::<u64>(), which in 0usize..3) {
        let a = rings()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, &mut rng).unwrap();
        let cfg = AuditConfig { depth: 5, ..AuditConfig::default() };
        let first = check_first_inequality(&m, &cfg).unwrap();
        prop_assert!(first.verdict != Verdict::Fail, "{:?}", first.failures);
        let ident = check_length_identity(&m, &cfg).unwrap();
        prop_assert!(ident.verdict != Verdict::Fail, "{:?}", ident.failures);
    }

    #[test]
    fn tor_is_symmetric(seed in any::<u64>(), which in 0usize..3) {
        let a = rings()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_graded_module(&a, &mut rng).unwrap();
        let n = random_module(&a, &mut rng).unwrap();
        prop_assert_eq!(tor_lengths(&m, &n, 4).unwrap().lengths, tor_lengths(&n, &m, 4).unwrap().lengths);
    }

    #[test]
    fn ratio_bounds_on_betti(seed in any::<u64>(), which in 0usize..3) {
        let a = rings()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, &mut rng).unwrap();
        let res = resolve(&m, 6).unwrap();
        prop_assert!(ratio_bounds_hold(res.betti()));
        res.check_invariants().unwrap();
    }

    #[test]
    fn length_estimates(seed in any::<u64>(), which in 0usize..3) {
        let a = rings()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_module(&a, &mut rng).unwrap();
        let v = random_module(&a, &mut rng).unwrap();
        prop_assert!(u.tensor(&v).unwrap().length() >= u.min_gens() * v.min_gens());
        prop_assert!(u.hom(&v).unwrap().length() >= u.min_gens() * v.socle_dim());
    }
}
