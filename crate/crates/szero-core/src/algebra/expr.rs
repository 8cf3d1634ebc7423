//! Formal expressions in the categorical generators E, F, Ψ±.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::weight::WeightVector;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("zero weight in flow")]
    ZeroWeightInFlow,
    #[error("composition mismatch: codomain {codomain} vs domain {domain}")]
    CompositionMismatch { codomain: String, domain: String },
    #[error("color {color} out of range for n = {n}")]
    ColorOutOfRange { color: usize, n: usize },
    #[error("{0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GenKind {
    E,
    F,
    PsiPlus,
    PsiMinus,
}

/// One generator letter. For E and F the index is the loop parameter r or s;
/// for Ψ± it is the (nonzero, in canonical words) exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GenToken {
    pub kind: GenKind,
    pub color: usize,
    pub index: i64,
}

impl GenToken {
    pub fn e(color: usize, r: i64) -> Self {
        GenToken { kind: GenKind::E, color, index: r }
    }

    pub fn f(color: usize, s: i64) -> Self {
        GenToken { kind: GenKind::F, color, index: s }
    }

    pub fn psi_plus(color: usize, exp: i64) -> Self {
        GenToken { kind: GenKind::PsiPlus, color, index: exp }
    }

    pub fn psi_minus(color: usize, exp: i64) -> Self {
        GenToken { kind: GenKind::PsiMinus, color, index: exp }
    }

    pub fn is_psi(&self) -> bool {
        matches!(self.kind, GenKind::PsiPlus | GenKind::PsiMinus)
    }

    /// Weight move of this letter applied at w, or None when w leaves the cone.
    pub fn apply(&self, w: &WeightVector) -> Option<WeightVector> {
        let next = match self.kind {
            GenKind::E => w.plus_alpha(self.color),
            GenKind::F => w.minus_alpha(self.color),
            GenKind::PsiPlus | GenKind::PsiMinus => w.clone(),
        };
        next.is_valid().then_some(next)
    }
}

impl fmt::Debug for GenToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GenToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::E => write!(f, "E[{},{}]", self.color, self.index),
            GenKind::F => write!(f, "F[{},{}]", self.color, self.index),
            GenKind::PsiPlus => write!(f, "Psi[+,{},{}]", self.color, self.index),
            GenKind::PsiMinus => write!(f, "Psi[-,{},{}]", self.color, self.index),
        }
    }
}

/// A composable word of generator letters. Letters apply right to left, so
/// `tokens.last()` acts first on `domain`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Word {
    pub tokens: Vec<GenToken>,
    pub domain: WeightVector,
    pub shift: i64,
}

impl Word {
    pub fn new(tokens: Vec<GenToken>, domain: WeightVector, shift: i64) -> Self {
        Word { tokens, domain, shift }
    }

    pub fn identity(domain: WeightVector) -> Self {
        Word { tokens: Vec::new(), domain, shift: 0 }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Weights traversed by the word, or None if the flow leaves the cone.
    /// `flow[j]` is the weight to the left of token j; `flow[len]` is the
    /// domain, `flow[0]` the codomain.
    pub fn weight_flow(&self) -> Option<Vec<WeightVector>> {
        let len = self.tokens.len();
        let mut flow = vec![self.domain.clone(); len + 1];
        if !self.domain.is_valid() {
            return None;
        }
        for j in (0..len).rev() {
            flow[j] = self.tokens[j].apply(&flow[j + 1])?;
        }
        Some(flow)
    }

    pub fn codomain(&self) -> Option<WeightVector> {
        self.weight_flow().map(|f| f[0].clone())
    }

    /// f ∘ g: apply g first, then f.
    pub fn compose(f: &Word, g: &Word) -> Result<Word, AlgebraError> {
        let cod = g.codomain().ok_or(AlgebraError::ZeroWeightInFlow)?;
        if cod != f.domain {
            return Err(AlgebraError::CompositionMismatch {
                codomain: cod.to_string(),
                domain: f.domain.to_string(),
            });
        }
        let mut tokens = f.tokens.clone();
        tokens.extend(g.tokens.iter().copied());
        Ok(Word { tokens, domain: g.domain.clone(), shift: f.shift + g.shift })
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            write!(f, "{t} ")?;
        }
        write!(f, "@ {} [{}]", self.domain, self.shift)
    }
}

/// Slot of a member inside an exact triangle A → B → C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TriSlot {
    A,
    B,
    C,
}

/// A formal expression: zero, a shifted identity, a word, or an exact
/// triangle A → B → C whose `subject` slot is the expression being tracked.
#[derive(Clone, PartialEq, Serialize)]
pub enum FunctorExpr {
    Zero,
    Identity { weight: WeightVector, shift: i64 },
    Word(Word),
    Filtered {
        a: Box<FunctorExpr>,
        b: Box<FunctorExpr>,
        c: Box<FunctorExpr>,
        subject: TriSlot,
    },
}

impl FunctorExpr {
    pub fn word(tokens: Vec<GenToken>, domain: WeightVector, shift: i64) -> Self {
        FunctorExpr::Word(Word::new(tokens, domain, shift))
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            FunctorExpr::Word(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Debug for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorExpr::Zero => write!(f, "0"),
            FunctorExpr::Identity { weight, shift } => write!(f, "1 @ {weight} [{shift}]"),
            FunctorExpr::Word(w) => write!(f, "{w}"),
            FunctorExpr::Filtered { a, b, c, subject } => {
                write!(f, "triangle[{subject:?}]({a} -> {b} -> {c})")
            }
        }
    }
}

/// Final classification of a simplification run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Verdict {
    IsoIdentity(i64),
    ProvenZero,
    Stuck(FunctorExpr),
}

impl Verdict {
    pub fn is_identity_at(&self, shift: i64) -> bool {
        matches!(self, Verdict::IsoIdentity(m) if *m == shift)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Verdict::ProvenZero)
    }

    pub fn is_stuck(&self) -> bool {
        matches!(self, Verdict::Stuck(_))
    }

    pub fn class_label(&self) -> String {
        match self {
            Verdict::IsoIdentity(m) => format!("iso-identity[{m}]"),
            Verdict::ProvenZero => "proven-zero".to_string(),
            Verdict::Stuck(e) => format!("stuck: {e}"),
        }
    }
}
