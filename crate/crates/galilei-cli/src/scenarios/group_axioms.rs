//! Seeded fuzz of the exact group layer plus the structure-constant
//! extraction.

use super::Result;
use crate::config::ScenarioConfig;
use crate::metrics::Metric;
use galilei::group::algebra::AlgebraTable;
use galilei::group::checks;

pub fn run(cfg: &ScenarioConfig) -> Result<Vec<Metric>> {
    let seed = cfg.run.seed;
    let table = AlgebraTable::standard();
    let metrics = vec![
        Metric::max(
            "plain_axioms_max_residual",
            checks::galilei_axioms(seed, 10_000).max_residual,
            1e-12,
        ),
        Metric::max(
            "extended_axioms_max_residual",
            checks::extended_axioms(seed.wrapping_add(1), 10_000).max_residual,
            1e-12,
        ),
        Metric::max(
            "action_axiom_max_residual",
            checks::action_axioms(seed.wrapping_add(2), 10_000).max_residual,
            1e-12,
        ),
        Metric::max(
            "erasure_homomorphism_max_residual",
            checks::erasure_homomorphism(seed.wrapping_add(3), 10_000).max_residual,
            1e-12,
        ),
        Metric::max(
            "loop_bilinearity_max_residual",
            checks::bargmann_loop_bilinearity(seed.wrapping_add(4), 1_000).max_residual,
            1e-9,
        ),
        Metric::max(
            "cocycle_associativity_max_residual",
            checks::cocycle_associativity(seed.wrapping_add(5), 2_000, 1.3).max_residual,
            1e-12,
        ),
        Metric::max(
            "cocycle_event_independence_spread",
            checks::cocycle_event_independence(seed.wrapping_add(6), 500, 1.3).max_residual,
            1e-12,
        ),
        Metric::max(
            "structure_constants_max_deviation",
            table.numeric_deviation(),
            1e-6,
        ),
        Metric::max(
            "algebra_antisymmetry_violation",
            table.antisymmetry_violation(),
            0.0,
        ),
        Metric::max("algebra_jacobi_violation", table.jacobi_violation(), 0.0),
    ];
    Ok(metrics)
}
