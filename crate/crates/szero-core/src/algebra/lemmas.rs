//! Direct regression on the key vanishing lemma behind the self-Hom
//! computation: the word
//!
//!   (Ψ-)^{-λ_k+1} E_{-2} (Ψ-)^{λ_k-λ_{k-1}-1} E_{-3} … E_{-k+i-2}
//!   (Ψ-)^{λ_i-λ_{i-1}-1} F_2  at weight (k-i, N-k+i)
//!
//! is zero for every λ in P(N−k, k) and 2 ≤ i ≤ k.

use crate::partitions::{DiagramBox, YoungDiagram};

use super::engine::{simplify, Simplification};
use super::expr::{AlgebraError, FunctorExpr, GenToken, Word};
use super::weight::WeightVector;

/// Build the lemma word for (λ, i) on the sl2 tower of C(2,N).
pub fn vanishing_lemma_word(
    lambda: &YoungDiagram,
    i: usize,
    k: usize,
    n_total: i64,
) -> Result<Word, AlgebraError> {
    if !(2 <= i && i <= k) {
        return Err(AlgebraError::Precondition(format!(
            "lemma index {i} outside 2 ≤ i ≤ k = {k}"
        )));
    }
    let bx = DiagramBox::new((n_total as usize - k) as u32, k as u32);
    if !lambda.in_box(bx) {
        return Err(AlgebraError::Precondition(format!(
            "{lambda} not in P({},{})",
            bx.a, bx.b
        )));
    }
    let part = |j: usize| lambda.part(j - 1) as i64; // 1-indexed λ_j
    let mut tokens = Vec::new();
    tokens.push(GenToken::psi_minus(1, -part(k) + 1));
    // E indices run -2, -3, …, -(k-i+2); the Ψ exponent after E_{-m-1} is
    // λ_{k-m+1} - λ_{k-m} - 1 read against the adjoint closed form.
    for step in 0..(k - i + 1) {
        tokens.push(GenToken::e(1, -2 - step as i64));
        let hi = k - step; // λ index left of this E in the closed form
        tokens.push(GenToken::psi_minus(1, part(hi) - part(hi - 1) - 1));
    }
    tokens.push(GenToken::f(1, 2));
    let domain = WeightVector::new([(k - i) as i64, n_total - (k - i) as i64]);
    Ok(Word::new(tokens, domain, 0))
}

/// Check that the lemma word simplifies to zero; the simplification carries
/// the rule-chain witness.
pub fn vanishing_lemma_check(
    lambda: &YoungDiagram,
    i: usize,
    k: usize,
    n_total: i64,
) -> Result<Simplification, AlgebraError> {
    let word = vanishing_lemma_word(lambda, i, k, n_total)?;
    let simp = simplify(&FunctorExpr::Word(word));
    if !simp.verdict.is_zero() {
        return Err(AlgebraError::Precondition(format!(
            "lemma instance λ={lambda}, i={i}, k={k}, N={n_total} did not vanish: {}",
            simp.verdict.class_label()
        )));
    }
    Ok(simp)
}
