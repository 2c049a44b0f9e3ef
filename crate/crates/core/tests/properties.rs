mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use wbasis::brylinski::{brylinski_subspace, build_z_slice, degree_filtration};
use wbasis::cli::GeneratorCacheFile;
use wbasis::exactcore::{q, CycScalar, Scalar, Q};
use wbasis::heisenberg::{borcherds_defect, module_space, vacuum_space, FieldEngine, Fock};
use wbasis::tanalog::level_one_lusztig;
use wbasis::twistedfock::TwistedModule;
use wbasis::walgebra::choose_generators;

fn cyc(order: u32, raw: &[(i64, i64)]) -> CycScalar {
    let coeffs: Vec<Q> = raw.iter().map(|&(a, b)| q(a, b)).collect();
    CycScalar::from_power_coeffs(order, &coeffs)
}

fn small_q() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn untwisted_borcherds(ia in 0usize..8, ib in 0usize..8, ic in 0usize..8, lam in -3i64..=3,
                           m in -2i64..=2, n in -2i64..=2, k in -2i64..=2) {
        let pick = |i: usize, space: &wbasis::heisenberg::HeisSpace<Q>| {
            let all: Vec<_> = (1..=2).flat_map(|t| space.basis(t)).collect();
            Fock::monomial(all[i % all.len()].clone(), Q::one())
        };
        let lambda = vec![q(lam, 2), q(-lam, 2)];
        let alg = vacuum_space(1);
        let space = module_space(&lambda);
        let (a, b, c) = (pick(ia, &alg), pick(ib, &alg), pick(ic, &space));
        let engine = FieldEngine::new(space);
        prop_assert!(borcherds_defect(&engine, &a, &b, &c, (m, n, k)).is_zero());
        let wa = a.max_ticks();
        let wb = b.max_ticks();
        let vac = FieldEngine::new(alg);
        prop_assert!(vac.mode(&a, wa + wb + n.abs(), &b).is_zero());
    }

    #[test]
    fn cache_round_trip(terms in prop::collection::vec((prop::collection::vec((0usize..3, 1i64..4), 0..4), -9i64..=9, 1i64..=7), 1..6)) {
        let mut state: Fock<Q> = Fock::zero();
        for (mut m, a, b) in terms {
            m.sort();
            state.add_term(m, q(a, b));
        }
        let generators = vec![(2, state.terms().map(|(m, c)| (m.clone(), c.clone())).collect())];
        let file = GeneratorCacheFile { version: 1, rank: 2, degrees: vec![2], generators };
        let text = file.to_text();
        let back = GeneratorCacheFile::parse(&text).unwrap();
        prop_assert_eq!(&back, &file);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn cyclotomic_field_axioms(order in 2u32..=6, x in prop::collection::vec(small_q(), 1..6),
                               y in prop::collection::vec(small_q(), 1..6), z in prop::collection::vec(small_q(), 1..6)) {
        let (x, y, z) = (cyc(order, &x), cyc(order, &y), cyc(order, &z));
        prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
        prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
        prop_assert_eq!(x.times(&y), y.times(&x));
        prop_assert_eq!(x.plus(&x.negated()), CycScalar::zero());
        match x.inv() {
            Some(i) => prop_assert_eq!(x.times(&i), CycScalar::one()),
            None => prop_assert!(x.is_zero()),
        }
        prop_assert_eq!(x.times(&y).conj(), x.conj().times(&y.conj()));
    }

    #[test]
    fn kernel_filtration_is_degree_filtration(rank in 1usize..=2, n in 0usize..=3, d in 0i64..=6) {
        let module = TwistedModule::new(rank);
        let gens = choose_generators(rank).unwrap();
        let slice = build_z_slice(&module, &gens, n).unwrap();
        prop_assert_eq!(brylinski_subspace(&module, &slice, d, n).len(), degree_filtration(&slice, d).len());
    }

    #[test]
    fn lusztig_at_one_counts_colored_partitions(rank in 1usize..=3, n in 0usize..=5) {
        let polys = level_one_lusztig(rank, n).unwrap();
        prop_assert_eq!(polys[n].eval_one(), BigInt::from(common::colored(rank, n)));
        prop_assert!(polys[n].all_nonnegative());
    }
}
