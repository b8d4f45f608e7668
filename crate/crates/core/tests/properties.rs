use charnum::cache;
use charnum::engine::{Engine, EngineConfig};
use charnum::model::{CondClass, Family, InvariantKey, InvariantTable};
use charnum::rational::parse_rational;
use charnum::render::csv;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn any_n_key(max_d: i32) -> impl Strategy<Value = InvariantKey> {
    (1..=max_d).prop_flat_map(|d| {
        let budget = 3 * d - 1;
        (0..=budget / 2).prop_flat_map(move |c| (0..=budget - 2 * c).prop_map(move |a| InvariantKey::n(d, a, budget - a - 2 * c, c)))
    })
}

fn any_c_key() -> impl Strategy<Value = InvariantKey> {
    (3..=5, prop::sample::select(vec![CondClass::One, CondClass::H, CondClass::H2])).prop_flat_map(|(d, s)| {
        let budget = 3 * d - 2 - s.codim();
        (0..=budget / 2).prop_flat_map(move |c| (0..=budget - 2 * c).prop_map(move |a| InvariantKey::c(s, d, a, budget - a - 2 * c, c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ordinary_values_are_natural(key in any_n_key(6)) {
        prop_assert!(key.is_valid());
        let v = Engine::default().compute(&key).unwrap();
        prop_assert!(v.denom().is_one() && !v.is_negative(), "{} = {}", key, v);
    }

    #[test]
    fn cuspidal_values_are_natural(key in any_c_key()) {
        let v = Engine::default().compute(&key).unwrap();
        prop_assert!(v.denom().is_one() && !v.is_negative(), "{} = {}", key, v);
    }

    #[test]
    fn cold_and_shared_stores_agree(keys in prop::collection::vec(any_n_key(5), 1..6)) {
        let mut shared = Engine::default();
        for key in &keys {
            let warm = shared.compute(key).unwrap();
            let cold = Engine::default().compute(key).unwrap();
            prop_assert_eq!(warm, cold);
        }
    }

    #[test]
    fn invalid_keys_are_zero(d in 1..6i32, a in 0..20i32, b in 0..20i32, c in 0..10i32) {
        let key = InvariantKey::n(d, a, b, c);
        prop_assume!(!key.is_valid());
        prop_assert!(Engine::default().compute(&key).unwrap() == num_traits::zero());
    }
}

#[test]
fn cuspidal_cubics_are_self_dual() {
    let mut engine = Engine::default();
    for key in InvariantTable::keys(Family::C, 3, Some(CondClass::One)) {
        let dual = InvariantKey { a: key.b, b: key.a, ..key };
        assert_eq!(engine.compute(&key).unwrap(), engine.compute(&dual).unwrap(), "{key}");
    }
}

#[test]
fn csv_reads_back_as_computed() {
    let mut engine = Engine::default();
    for (family, d, class) in [(Family::N, 4, None), (Family::C, 4, Some(CondClass::H)), (Family::C, 2, Some(CondClass::H2HCheck))] {
        let table = engine.table(family, d, class).unwrap();
        for line in csv(&table).lines().skip(1) {
            let f: Vec<&str> = line.split(',').collect();
            let key = table.key(f[0].parse().unwrap(), f[2].parse().unwrap());
            assert_eq!(key.b, f[1].parse::<i32>().unwrap());
            assert_eq!(parse_rational(f[3]).unwrap(), Engine::default().compute(&key).unwrap(), "{key}");
        }
    }
}

#[test]
fn parallel_fill_matches_serial() {
    for (family, d, class) in [(Family::N, 5, None), (Family::C, 4, Some(CondClass::One))] {
        let serial = Engine::default().table(family, d, class).unwrap();
        let mut engine = Engine::default();
        let parallel = engine.table_parallel(family, d, class).unwrap();
        assert_eq!(csv(&serial), csv(&parallel));
        let mut reference = Engine::default();
        reference.table(family, d, class).unwrap();
        assert_eq!(cache::export(&engine.store, true), cache::export(&reference.store, true));
    }
}

#[test]
fn literal_transcription_disagrees_with_tables() {
    let literal = EngineConfig { transcription: "literal".parse().unwrap(), ..EngineConfig::default() };
    let report = charnum::fixtures::verify_goldens(None, literal).unwrap();
    assert!(!report.passed());
    assert!(report.mismatches().count() > 1);
}
