use e8spin7::exterior::{hodge_star, wedge};
use e8spin7::field::CycNum;
use e8spin7::spin7::verify::{random_lie_form, random_scalar_form};
use e8spin7::spin7::{cayley_form, instanton_check, project, Part, TwoForm8, PAIRS};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalar_form() -> impl Strategy<Value = TwoForm8> {
    proptest::collection::vec((-5i64..=5, 1i64..=4), PAIRS)
        .prop_map(|v| TwoForm8::scalar(v.into_iter().map(|(p, q)| CycNum::frac(p, q)).collect()).unwrap())
}

/// `∗(F∧Ω) = −F` through the exterior algebra alone, without the `L` matrix or projectors.
fn anti_self_dual_direct(f: &TwoForm8) -> bool {
    let k = f.to_kform().unwrap();
    let l = hodge_star(&wedge(&k, cayley_form().form()).unwrap());
    l.try_add(&k).unwrap().is_zero()
}

proptest! {
    #[test]
    fn criteria_agree_on_scalar_forms(f in scalar_form(), project_first in any::<bool>()) {
        let f = if project_first { project(&f, Part::TwentyOne) } else { f };
        let chk = instanton_check(&f).unwrap();
        prop_assert_eq!(chk.is_instanton, anti_self_dual_direct(&f));
        prop_assert_eq!(chk.is_instanton, project_first || f == project(&f, Part::TwentyOne));
    }

    #[test]
    fn projectors_resolve_identity(f in scalar_form()) {
        let p7 = project(&f, Part::Seven);
        let p21 = project(&f, Part::TwentyOne);
        prop_assert_eq!(p7.add(&p21).unwrap(), f);
        prop_assert_eq!(project(&p7, Part::Seven), p7.clone());
        prop_assert!(project(&p7, Part::TwentyOne).is_zero());
        let dot = e8spin7::exterior::pairing(&p7.to_kform().unwrap(), &p21.to_kform().unwrap()).unwrap();
        prop_assert!(dot.is_zero());
    }

    #[test]
    fn lie_valued_criteria_agree(seed in any::<u64>(), d in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_lie_form(&mut rng, d);
        for g in [f.clone(), project(&f, Part::TwentyOne)] {
            let chk = instanton_check(&g).unwrap();
            let comps = g.components();
            let direct = comps.iter().all(|v| {
                anti_self_dual_direct(&TwoForm8::scalar(v.clone()).unwrap())
            });
            prop_assert_eq!(chk.is_instanton, direct);
        }
    }
}

#[test]
fn random_generators_produce_both_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = random_scalar_form(&mut rng);
    assert!(!instanton_check(&f).unwrap().is_instanton);
    assert!(instanton_check(&project(&f, Part::TwentyOne)).unwrap().is_instanton);
}
