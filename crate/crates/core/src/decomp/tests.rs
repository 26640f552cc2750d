use super::*;
use crate::exactalg::{PrimeField, Rationals};
use crate::polyring::random_form;
use proptest::prelude::*;

fn fp() -> PrimeField {
    PrimeField::default()
}

#[test]
fn synthetic_instances_are_valid() {
    let f = fp();
    for (n, d, s) in [(2, 5, 3), (1, 3, 2), (3, 4, 2), (2, 2, 4)] {
        let inst = synth_instance(&f, n, d, s, 11).unwrap();
        assert!(inst.is_valid(&f).unwrap());
        assert!(forward_check(&f, &inst.f, &inst.hyperplanes).unwrap());
    }
}

#[test]
fn binary_synthetic_summands_are_powers() {
    // for n = 1 the inverse system of a linear operator in degree d is a line
    let f = fp();
    let inst = synth_instance(&f, 1, 3, 2, 5).unwrap();
    for (l, g) in inst.hyperplanes.iter().zip(inst.summands.as_ref().unwrap()) {
        let (a, b) = (l.coeffs()[0], l.coeffs()[1]);
        let power = LinearForm::new(&f, Ring::S, vec![f.neg(&b), a]).unwrap().power(&f, 3);
        let m = Matrix::from_rows(4, vec![power.coeffs().to_vec(), g.coeffs().to_vec()]).unwrap();
        assert!(m.rank(&f) <= 1);
    }
}

#[test]
fn forward_check_examples() {
    let f = fp();
    let x0 = Form::monomial(&f, Ring::S, &[5, 0, 0]);
    let d1 = LinearForm::new(&f, Ring::T, vec![0, 1, 0]).unwrap();
    assert!(forward_check(&f, &x0, &[d1]).unwrap());

    let mut rng = seeded(3);
    let g = random_form(&f, 2, 5, Ring::S, &mut rng);
    let ls = random_distinct_linear(&f, 2, Ring::T, 2, &mut rng).unwrap();
    assert!(!forward_check(&f, &g, &ls).unwrap());
}

#[test]
fn reconstruct_examples() {
    for (n, d, s) in [(2, 5, 3), (2, 4, 3)] {
        for seed in 0..3 {
            let f = fp();
            let inst = synth_instance(&f, n, d, s, seed).unwrap();
            let rec = reconstruct(&f, &inst.f, &inst.hyperplanes, SamplingPlan::new(n, d, seed), 5).unwrap();
            assert!(rec.instance.is_valid(&f).unwrap());
            assert_eq!(rec.unknowns, s * num_monomials(n - 1, d));
            assert_eq!(rec.equations, num_monomials(n, d));
        }
    }
}

#[test]
fn reconstruct_over_rationals() {
    let inst = synth_instance(&Rationals, 2, 4, 3, 1).unwrap();
    let rec = reconstruct(&Rationals, &inst.f, &inst.hyperplanes, SamplingPlan::new(2, 4, 1), 5).unwrap();
    assert!(rec.instance.is_valid(&Rationals).unwrap());
}

#[test]
fn reconstruct_rejects_non_apolar_hyperplanes() {
    let f = fp();
    let mut rng = seeded(8);
    let g = random_form(&f, 2, 5, Ring::S, &mut rng);
    let ls = random_distinct_linear(&f, 2, Ring::T, 2, &mut rng).unwrap();
    assert_eq!(
        reconstruct(&f, &g, &ls, SamplingPlan::new(2, 5, 0), 5),
        Err(Error::Inconsistent)
    );
}

#[test]
fn reconstruct_rejects_proportional_hyperplanes() {
    let f = fp();
    let inst = synth_instance(&f, 2, 3, 2, 0).unwrap();
    let ls = vec![inst.hyperplanes[0].clone(), inst.hyperplanes[0].clone()];
    assert_eq!(
        reconstruct(&f, &inst.f, &ls, SamplingPlan::new(2, 3, 0), 5),
        Err(Error::ProportionalFactors(0, 1))
    );
}

#[test]
fn sampling_plan_size() {
    assert_eq!(SamplingPlan::new(2, 5, 0).points_per_hyperplane, 6);
    assert_eq!(SamplingPlan::new(3, 4, 0).points_per_hyperplane, 15);
    assert_eq!(SamplingPlan::new(1, 7, 0).points_per_hyperplane, 1);
}

#[test]
fn roundtrip_grid() {
    let f = fp();
    for n in 1..=3 {
        for d in 1..=6 {
            let r = verify_roundtrip(&f, n, d, 0, 5).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn random_form_below_smin_is_not_annihilated() {
    let f = fp();
    let mut rng = seeded(21);
    for (n, d) in [(2, 5), (3, 4), (2, 6)] {
        let s = formulas::smin(n as u64, d as u64) as usize - 1;
        let g = random_form(&f, n, d, Ring::S, &mut rng);
        let ls = random_distinct_linear(&f, n, Ring::T, s, &mut rng).unwrap();
        assert!(!forward_check(&f, &g, &ls).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn roundtrip_holds(n in 1usize..=3, d in 1usize..=5, extra in 0usize..=1, seed in any::<u64>()) {
        let f = fp();
        let s = formulas::smin(n as u64, d as u64) as usize + extra;
        let inst = synth_instance(&f, n, d, s, seed).unwrap();
        prop_assert!(forward_check(&f, &inst.f, &inst.hyperplanes).unwrap());
        let rec = reconstruct(&f, &inst.f, &inst.hyperplanes, SamplingPlan::new(n, d, seed), 5).unwrap();
        prop_assert!(rec.instance.is_valid(&f).unwrap());
    }
}
