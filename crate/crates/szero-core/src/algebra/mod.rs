//! Formal words in the categorical generators of the shifted q=0 affine
//! algebra and the deterministic simplifier that mechanizes the
//! semiorthogonality computations.

mod adjoint;
mod engine;
mod expr;
mod lemmas;
mod weight;

pub use adjoint::{right_adjoint, right_adjoint_with_steps};
pub use engine::{
    canonical_word, ef_step, push_psi_right, simplify, simplify_with, CertStep, ClauseId, Policy,
    Simplification, SimplifyOptions,
};
pub use expr::{AlgebraError, FunctorExpr, GenKind, GenToken, TriSlot, Verdict, Word};
pub use lemmas::{vanishing_lemma_check, vanishing_lemma_word};
pub use weight::WeightVector;
