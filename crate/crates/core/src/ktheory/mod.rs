//! K-theory by exact integer linear algebra.
//!
//! Groups are presented as `Z^g / (relations)` and reduced by Smith normal
//! form. Colimits are never built: an [`IndAbGroup`] keeps finitely many
//! stages and answers stage-truncated questions, such as the rank of an
//! image or the divisibility of a class, with explicit witnesses.

mod dihedral;
mod group;
mod ind;
mod laurent;
mod matrix;
mod pv;
mod snf;

pub use dihedral::{dihedral_k0_matrix, DihedralOrder};
pub use group::{AbGroup, GroupHom, GroupInvariants};
pub use ind::{DivisibilityWitness, IndAbGroup, PrimeSchedule, RankCertificate, StageRule};
pub use laurent::{
    shift_embedding, shift_embedding_check, LaurentMatrix, LaurentPoly, ShiftEmbeddingReport,
};
pub use matrix::IntMatrix;
pub use pv::{iterate_bn, pv_step, pv_step_groups, IndHom, PvCertificate, PvResult, Resolution};
pub use snf::{column_span_basis, kernel_basis, smith_normal_form, solve, SmithForm};
