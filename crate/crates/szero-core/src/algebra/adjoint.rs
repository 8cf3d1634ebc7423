//! Right adjoints of generator words.
//!
//! Each letter is replaced by its Ψ-conjugated right adjoint, read at the
//! weight the letter acts on in the original word, and the word is reversed:
//!
//!   (E_{i,r} 1_w)^R ≅ (Ψ+_i)^{r+1}  F_{i, w_{i+1}+2} (Ψ+_i)^{-r-2} [-r-1]
//!   (F_{i,s} 1_w)^R ≅ (Ψ-_i)^{-s+1} E_{i, -w_i-2}    (Ψ-_i)^{s-2}  [s-1]
//!
//! Ψ letters are invertible, so their right adjoint is the inverse power.

use super::engine::{canonical_word, CertStep, ClauseId};
use super::expr::{AlgebraError, FunctorExpr, GenKind, GenToken, Word};

/// Right adjoint of a word, with Ψ exponents aggregated between letters.
pub fn right_adjoint(word: &Word) -> Result<Word, AlgebraError> {
    right_adjoint_with_steps(word).map(|(w, _)| w)
}

/// Right adjoint plus the per-letter certificate records (clause 4a for E
/// letters, 4b for F letters).
pub fn right_adjoint_with_steps(word: &Word) -> Result<(Word, Vec<CertStep>), AlgebraError> {
    let flow = word.weight_flow().ok_or(AlgebraError::ZeroWeightInFlow)?;
    let codomain = flow[0].clone();
    let mut segments: Vec<Vec<GenToken>> = Vec::with_capacity(word.len());
    let mut steps: Vec<CertStep> = Vec::new();
    let mut shift = -word.shift;
    let seg_display = |seg: &[GenToken], dshift: i64| {
        let mut s = String::new();
        for t in seg {
            s.push_str(&format!("{t} "));
        }
        s.push_str(&format!("[{dshift}]"));
        s
    };
    for (j, t) in word.tokens.iter().enumerate() {
        // entering weight of letter j in the original word
        let w = &flow[j + 1];
        match t.kind {
            GenKind::E => {
                let r = t.index;
                let seg = vec![
                    GenToken::psi_plus(t.color, r + 1),
                    GenToken::f(t.color, w.k(t.color + 1) + 2),
                    GenToken::psi_plus(t.color, -r - 2),
                ];
                steps.push(CertStep {
                    clause: ClauseId::C4a,
                    before: format!("({t} @ {w})^R"),
                    after: seg_display(&seg, -r - 1),
                });
                segments.push(seg);
                shift += -r - 1;
            }
            GenKind::F => {
                let s = t.index;
                let seg = vec![
                    GenToken::psi_minus(t.color, -s + 1),
                    GenToken::e(t.color, -w.k(t.color) - 2),
                    GenToken::psi_minus(t.color, s - 2),
                ];
                steps.push(CertStep {
                    clause: ClauseId::C4b,
                    before: format!("({t} @ {w})^R"),
                    after: seg_display(&seg, s - 1),
                });
                segments.push(seg);
                shift += s - 1;
            }
            GenKind::PsiPlus => segments.push(vec![GenToken::psi_plus(t.color, -t.index)]),
            GenKind::PsiMinus => segments.push(vec![GenToken::psi_minus(t.color, -t.index)]),
        }
    }
    // (t_1 … t_m)^R = t_m^R … t_1^R: reverse the segment order, not the
    // letters inside each adjoint
    let tokens: Vec<GenToken> = segments.into_iter().rev().flatten().collect();
    let adj = Word::new(tokens, codomain, shift);
    let adj = match canonical_word(adj.clone()) {
        FunctorExpr::Word(w) => w,
        FunctorExpr::Identity { weight, shift } => Word {
            tokens: vec![],
            domain: weight,
            shift,
        },
        _ => adj,
    };
    Ok((adj, steps))
}
