//! Property suites shared by the `props` and `acceptance` targets. Every
//! suite runs at least 1000 cases from a fixed seed.

pub mod algebra;
pub mod completion;
pub mod seqcomb;
pub mod structmat;

#[allow(dead_code)]
pub type Suite = (&'static str, fn() -> Result<(), String>);

#[allow(dead_code)]
pub const SUITES: &[Suite] = &[
    ("index sum identity", structmat::index_sum_identity_against_determinantal_divisors),
    ("transpose swaps minimal indices", structmat::transpose_swaps_minimal_indices),
    ("zero row adds a zero row index", structmat::zero_row_adds_one_zero_row_index),
    ("stacking rank bounds", structmat::stacking_raises_rank_by_at_most_the_added_rows),
    ("rank equals smith length", structmat::rank_is_smith_length),
    ("gcd/lcm laws", algebra::gcd_and_lcm_laws),
    ("homogeneous divisibility order", algebra::homogeneous_divisibility_is_a_partial_order),
    ("divisor of degree over splitting fields", algebra::divisor_of_degree_never_obstructs_over_a_splitting_field),
    ("divisor of degree soundness", algebra::divisor_of_degree_is_sound),
    ("union majorized by its parts", seqcomb::union_is_majorized_by_its_parts),
    ("monotone relaxation", seqcomb::relaxing_the_free_sequence_preserves_generalized_majorization),
    ("degenerate generalized majorization", seqcomb::degenerate_cases_reduce_to_equality_and_majorization),
    ("trailing zeros", seqcomb::trailing_zeros_do_not_change_the_verdict),
    ("majorization preorder", seqcomb::ordinary_majorization_is_a_preorder_on_equal_lengths),
    ("a/b form equivalence", completion::full_predicate_forms_agree),
    ("a/b monotonicity", completion::full_auxiliary_sequences_are_nonincreasing_when_feasible),
    ("hatted a/b monotonicity", completion::hatted_sequences_are_nonincreasing_under_the_constant_bounds),
    ("transposition duality", completion::predicates_are_invariant_under_transposition),
    ("projection consistency", completion::combined_feasibility_implies_each_projection),
    ("witness closure", completion::feasible_targets_lift_to_feasible_full_prescriptions),
];
