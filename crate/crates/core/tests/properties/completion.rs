use crate::common::runner;
use eigencomplete::algebra::Gfp;
use eigencomplete::completion::{
    build_ab_full, check, check_column, check_full, check_full_alt, witness_to_full, CompletionError, Prescription, Targets,
    Variant,
};
use eigencomplete::oracle::{random_instance, targets};
use eigencomplete::structmat::{eigenstructure, Eigenstructure, PolyMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CASES: u32 = 1000;

struct Instance {
    p: PolyMatrix<Gfp>,
    base: Eigenstructure<Gfp>,
    field: Gfp,
    z: usize,
}

fn instance(seed: u64, p: u32) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mat, z) = random_instance(&mut rng, p, 18);
    let base = eigenstructure(&mat).unwrap();
    Instance { field: *mat.field(), p: mat, base, z }
}

fn seeds() -> impl Strategy<Value = (u64, u32)> {
    (any::<u64>(), prop_oneof![Just(2u32), Just(3)])
}

fn nonincreasing(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

pub fn full_predicate_forms_agree() -> Result<(), String> {
    runner(CASES)
        .run(&seeds(), |(seed, p)| {
            let ins = instance(seed, p);
            for t in targets(&ins.base, &ins.field, Variant::Full, ins.z) {
                let a = check_full(&ins.base, &t).unwrap();
                let b = check_full_alt(&ins.base, &t).unwrap();
                prop_assert_eq!(a.feasible, b.feasible, "{} on {}\n{}\n{}", t, ins.p, a, b);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn full_auxiliary_sequences_are_nonincreasing_when_feasible() -> Result<(), String> {
    runner(CASES)
        .run(&seeds(), |(seed, p)| {
            let ins = instance(seed, p);
            for t in targets(&ins.base, &ins.field, Variant::Full, ins.z) {
                if check_full(&ins.base, &t).unwrap().feasible {
                    let (a, b) = build_ab_full(&ins.base, &t).unwrap();
                    prop_assert!(nonincreasing(&a), "a={:?} for {}", a, t);
                    prop_assert!(nonincreasing(&b) && b.last().is_none_or(|&x| x >= 0), "b={:?} for {}", b, t);
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn hatted_sequences_are_nonincreasing_under_the_constant_bounds() -> Result<(), String> {
    runner(CASES)
        .run(&seeds(), |(seed, p)| {
            let ins = instance(seed, p);
            for t in targets(&ins.base, &ins.field, Variant::InfSing, ins.z) {
                let rep = check(&ins.base, &t).unwrap();
                let holds = |id: &str| rep.condition(id).unwrap().holds;
                if holds("constant_bound") && holds("row_surplus") {
                    let a = rep.sequence("â").unwrap();
                    let b = rep.sequence("b̂").unwrap();
                    prop_assert!(nonincreasing(a), "â={:?} for {}", a, t);
                    prop_assert!(nonincreasing(b) && b.last().is_none_or(|&x| x >= 0), "b̂={:?} for {}", b, t);
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn predicates_are_invariant_under_transposition() -> Result<(), String> {
    runner(CASES)
        .run(&(seeds(), 0..Variant::ALL.len()), |((seed, p), vi)| {
            let ins = instance(seed, p);
            let transposed = eigenstructure(&ins.p.transpose()).unwrap();
            for t in targets(&ins.base, &ins.field, Variant::ALL[vi], ins.z) {
                let row = check(&ins.base, &t).unwrap();
                let col = check_column(&transposed, &t.transposed()).unwrap();
                prop_assert_eq!(&row, &col, "{}", t);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn project(t: &Prescription<Gfp>, variant: Variant) -> Prescription<Gfp> {
    let src = t.targets();
    let keep = Targets {
        gamma: None,
        f: variant.wants_f().then(|| src.f.clone()).flatten(),
        beta: variant.wants_beta().then(|| src.beta.clone()).flatten(),
        d: variant.wants_d().then(|| src.d.clone()).flatten(),
        v: variant.wants_v().then(|| src.v.clone()).flatten(),
    };
    Prescription::new(variant, t.z(), t.x(), keep).unwrap()
}

pub fn combined_feasibility_implies_each_projection() -> Result<(), String> {
    let pairs = [
        (Variant::InfSing, [Variant::InfCmi, Variant::InfRmi]),
        (Variant::FinSing, [Variant::FinCmi, Variant::FinRmi]),
        (Variant::Sing, [Variant::Cmi, Variant::Rmi]),
    ];
    runner(CASES)
        .run(&seeds(), |(seed, p)| {
            let ins = instance(seed, p);
            for (joint, parts) in pairs {
                for t in targets(&ins.base, &ins.field, joint, ins.z) {
                    if !check(&ins.base, &t).unwrap().feasible {
                        continue;
                    }
                    for part in parts {
                        let proj = project(&t, part);
                        prop_assert!(check(&ins.base, &proj).unwrap().feasible, "{} feasible but {} is not", t, proj);
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn feasible_targets_lift_to_feasible_full_prescriptions() -> Result<(), String> {
    runner(CASES)
        .run(&(seeds(), 1..Variant::ALL.len()), |((seed, p), vi)| {
            let ins = instance(seed, p);
            for t in targets(&ins.base, &ins.field, Variant::ALL[vi], ins.z) {
                if !check(&ins.base, &t).unwrap().feasible {
                    continue;
                }
                match witness_to_full(&ins.base, &t) {
                    Ok(w) => prop_assert!(w.report.feasible, "{} lifted to {}\n{}", t, w.full, w.report),
                    Err(CompletionError::FieldObstruction(_)) => {}
                    Err(e) => prop_assert!(false, "{}: {}", t, e),
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}
