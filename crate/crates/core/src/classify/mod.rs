//! Commuting pairs of degree-zero derivations on graded `K[x1, x2, x3]`,
//! the additive actions they integrate to, and the stabilizer computation
//! separating the two rank-one monoid families on `A^3`.

mod actions;
mod normalize;
mod stabilizer;

pub use actions::{
    a3_action, a3_derivations, a3_solution, hirzebruch_actions, hirzebruch_grading, split_weights,
    translation_action, verify_additive_action, wpp_actions, ActionReport,
};
pub use normalize::{
    normal_form, normalize_pair, validate_pair, CommutingPair, NormalizationResult, PairDiagnostics, PairJson,
    PairType,
};
pub use stabilizer::{
    distinguish_rank1_families, stabilizer_system, unipotent_stabilizer, DistinguishReport, FamilyLines,
    StabilizerReport, StabilizerSet, Verdict,
};
