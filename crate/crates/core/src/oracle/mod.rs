//! Verification oracle: exact operator matrices on explicit bases and the
//! identity suites run against them.

mod basis;
mod checks;
mod matrix;
mod report;

pub use basis::{
    clifford_matrix, fock_basis, named_operator_matrix, operator_matrix, phi_matrix, spin_basis,
    truncated_spin_basis, IndexedBasis,
};
pub use checks::{
    check_chevalley, check_clifford, check_factorization, check_faithfulness, check_intertwiner,
    check_module_structure, check_serre, check_weight_consistency, chevalley_identities, clifford_identities,
    embedding_rank, factorization_identities, run_suite, run_truncated, serre_identities, Expr, Identity, Suite,
    FAITHFULNESS_MAX_RANK,
};
pub use matrix::{Echelon, ExactMatrix};
pub use report::{Entry, Report, Status, Witness};
