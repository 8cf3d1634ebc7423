//! The word simplifier.
//!
//! A word is rewritten by four kinds of moves, each a sound consequence of
//! the categorical relations:
//!
//! * weight-zero: a flow leaving the weight cone annihilates the word;
//! * Ψ-pushes (5a/5b): Ψ letters move right past same-color E/F letters,
//!   shifting loop indices and the homological shift;
//! * commutations (6c): adjacent same-color E/F pairs swap when r+s lies in
//!   the interior range at the entering weight;
//! * exact triangles (6a/6b): at the boundary values r+s = k_{i+1} or −k_i
//!   the pair sits in a triangle FE → EF → Ψ+ (resp. EF → FE → Ψ−); the
//!   word is replaced only after one of the other two members is proven
//!   zero, never by a direct-sum guess.
//!
//! Triangle resolution makes the search recursive; words already on the
//! call stack are abandoned rather than looped, and every applied rule is
//! charged against an iteration budget. The successful rule chain is kept
//! as a replayable certificate.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::expr::{FunctorExpr, GenKind, GenToken, TriSlot, Verdict, Word};

/// Clause identifiers for certificate steps, naming the defining relation
/// each rewrite instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClauseId {
    #[serde(rename = "4a")]
    C4a,
    #[serde(rename = "4b")]
    C4b,
    #[serde(rename = "5a")]
    C5a,
    #[serde(rename = "5b")]
    C5b,
    #[serde(rename = "6a")]
    C6a,
    #[serde(rename = "6b")]
    C6b,
    #[serde(rename = "6c")]
    C6c,
    #[serde(rename = "U03")]
    U03,
    #[serde(rename = "weight-zero")]
    WeightZero,
}

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClauseId::C4a => "4a",
            ClauseId::C4b => "4b",
            ClauseId::C5a => "5a",
            ClauseId::C5b => "5b",
            ClauseId::C6a => "6a",
            ClauseId::C6b => "6b",
            ClauseId::C6c => "6c",
            ClauseId::U03 => "U03",
            ClauseId::WeightZero => "weight-zero",
        };
        f.write_str(s)
    }
}

/// One replayable rewrite record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertStep {
    pub clause: ClauseId,
    pub before: String,
    pub after: String,
}

impl CertStep {
    fn new(clause: ClauseId, before: impl ToString, after: impl ToString) -> Self {
        CertStep {
            clause,
            before: before.to_string(),
            after: after.to_string(),
        }
    }
}

/// Move selection policy. The deterministic policy orders moves by kind and
/// position; the shuffled policy permutes eligible moves with a seeded
/// generator (used by the confluence property suite).
#[derive(Clone, Copy, Debug)]
pub enum Policy {
    Deterministic,
    Shuffled(u64),
}

#[derive(Clone, Copy, Debug)]
pub struct SimplifyOptions {
    /// Rule-application budget; defaults to 4·(word length)².
    pub max_steps: Option<usize>,
    pub policy: Policy,
}

impl Default for SimplifyOptions {
    fn default() -> Self {
        SimplifyOptions {
            max_steps: None,
            policy: Policy::Deterministic,
        }
    }
}

/// Result of a simplification run: the verdict plus the certificate chain.
#[derive(Clone, Debug, Serialize)]
pub struct Simplification {
    pub verdict: Verdict,
    pub steps: Vec<CertStep>,
    pub applied: usize,
}

impl Simplification {
    pub fn clause_digest(&self) -> String {
        self.steps
            .iter()
            .map(|s| s.clause.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical form of a word: zero-exponent Ψ letters removed, adjacent
/// same-color same-sign Ψ letters merged, invalid flows collapsed to Zero,
/// empty words to the shifted identity.
pub fn canonical_word(word: Word) -> FunctorExpr {
    match canonicalize(word) {
        Canon::Zero => FunctorExpr::Zero,
        Canon::Identity { weight, shift } => FunctorExpr::Identity { weight, shift },
        Canon::Word(w, _) => FunctorExpr::Word(w),
    }
}

enum Canon {
    Zero,
    Identity { weight: crate::algebra::WeightVector, shift: i64 },
    Word(Word, bool),
}

fn canonicalize(word: Word) -> Canon {
    let mut tokens: Vec<GenToken> = Vec::with_capacity(word.tokens.len());
    let mut changed = false;
    for t in word.tokens {
        if t.is_psi() && t.index == 0 {
            changed = true;
            continue;
        }
        if let Some(last) = tokens.last_mut() {
            if last.is_psi() && last.kind == t.kind && last.color == t.color {
                last.index += t.index;
                changed = true;
                if last.index == 0 {
                    tokens.pop();
                }
                continue;
            }
        }
        tokens.push(t);
    }
    let w = Word::new(tokens, word.domain, word.shift);
    if w.weight_flow().is_none() {
        return Canon::Zero;
    }
    if w.is_empty() {
        return Canon::Identity {
            weight: w.domain,
            shift: w.shift,
        };
    }
    Canon::Word(w, changed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MoveKind {
    PsiPush,
    SwapInterior { kill: bool },
    TrianglePlus,
    TriangleMinus,
}

#[derive(Clone, Copy, Debug)]
struct Move {
    pos: usize,
    kind: MoveKind,
}

// the interval tests keep the exact shape of the defining relation ranges
#[allow(clippy::int_plus_one)]
fn enumerate_moves(word: &Word) -> Vec<Move> {
    let flow = match word.weight_flow() {
        Some(f) => f,
        None => return Vec::new(),
    };
    let mut moves = Vec::new();
    for pos in 0..word.tokens.len().saturating_sub(1) {
        let x = word.tokens[pos];
        let y = word.tokens[pos + 1];
        if x.color != y.color {
            continue;
        }
        if x.is_psi() && !y.is_psi() {
            moves.push(Move {
                pos,
                kind: MoveKind::PsiPush,
            });
            continue;
        }
        if x.is_psi() || y.is_psi() {
            continue;
        }
        if x.kind == y.kind {
            continue;
        }
        // adjacent same-color E/F pair
        let i = x.color;
        let entering = &flow[pos + 2];
        let rs = x.index + y.index;
        if rs == entering.k(i + 1) {
            moves.push(Move {
                pos,
                kind: MoveKind::TrianglePlus,
            });
        }
        if rs == -entering.k(i) {
            moves.push(Move {
                pos,
                kind: MoveKind::TriangleMinus,
            });
        }
        if -entering.k(i) + 1 <= rs && rs <= entering.k(i + 1) - 1 {
            let kill = x.apply(entering).is_none();
            moves.push(Move {
                pos,
                kind: MoveKind::SwapInterior { kill },
            });
        }
    }
    moves
}

fn apply_psi_push(word: &Word, pos: usize) -> (Word, ClauseId) {
    let psi = word.tokens[pos];
    let letter = word.tokens[pos + 1];
    let eps = match psi.kind {
        GenKind::PsiPlus => 1,
        GenKind::PsiMinus => -1,
        _ => unreachable!("push source is a psi"),
    };
    let e = psi.index;
    let mut tokens = word.tokens.clone();
    let (new_letter, dshift, clause) = match letter.kind {
        // Ψ±^e E_{i,r} ≅ E_{i,r+e} Ψ±^e [∓e]
        GenKind::E => (GenToken::e(letter.color, letter.index + e), -eps * e, ClauseId::C5a),
        // Ψ±^e F_{i,s} ≅ F_{i,s−e} Ψ±^e [±e]
        GenKind::F => (GenToken::f(letter.color, letter.index - e), eps * e, ClauseId::C5b),
        _ => unreachable!("push target is a letter"),
    };
    tokens[pos] = new_letter;
    tokens[pos + 1] = psi;
    (
        Word::new(tokens, word.domain.clone(), word.shift + dshift),
        clause,
    )
}

fn apply_swap(word: &Word, pos: usize) -> Word {
    let mut tokens = word.tokens.clone();
    tokens.swap(pos, pos + 1);
    Word::new(tokens, word.domain.clone(), word.shift)
}

/// The three members of the triangle at the given pair, in slot order
/// (A, B, C), plus the slot the current word occupies.
fn triangle_members(word: &Word, pos: usize, kind: MoveKind) -> (Word, Word, Word, TriSlot) {
    let x = word.tokens[pos];
    let y = word.tokens[pos + 1];
    let color = x.color;
    let (e_tok, f_tok) = if x.kind == GenKind::E { (x, y) } else { (y, x) };
    let with_pair = |first: GenToken, second: GenToken| {
        let mut tokens = word.tokens.clone();
        tokens[pos] = first;
        tokens[pos + 1] = second;
        Word::new(tokens, word.domain.clone(), word.shift)
    };
    let with_psi = |psi: GenToken| {
        let mut tokens = word.tokens.clone();
        tokens.splice(pos..=pos + 1, [psi]);
        Word::new(tokens, word.domain.clone(), word.shift)
    };
    match kind {
        // (6)(a): F E → E F → Ψ+ at r+s = k_{i+1}
        MoveKind::TrianglePlus => {
            let a = with_pair(f_tok, e_tok);
            let b = with_pair(e_tok, f_tok);
            let c = with_psi(GenToken::psi_plus(color, 1));
            let subject = if x.kind == GenKind::F { TriSlot::A } else { TriSlot::B };
            (a, b, c, subject)
        }
        // (6)(b): E F → F E → Ψ− at r+s = −k_i
        MoveKind::TriangleMinus => {
            let a = with_pair(e_tok, f_tok);
            let b = with_pair(f_tok, e_tok);
            let c = with_psi(GenToken::psi_minus(color, 1));
            let subject = if x.kind == GenKind::E { TriSlot::A } else { TriSlot::B };
            (a, b, c, subject)
        }
        _ => unreachable!("triangle kinds only"),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Outcome {
    Iso(i64),
    Zero,
    Normal(Word),
    Abandoned,
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

struct Ctx {
    budget: usize,
    used: usize,
    memo: HashMap<Word, (Outcome, Vec<CertStep>)>,
    stack: HashSet<Word>,
    log: Vec<CertStep>,
    rng: Option<SplitMix64>,
}

impl Ctx {
    fn order_moves(&mut self, moves: &mut [Move]) {
        match &mut self.rng {
            None => {
                moves.sort_by_key(|m| {
                    let class = match m.kind {
                        MoveKind::SwapInterior { kill: true } => 0usize,
                        MoveKind::PsiPush => 1,
                        MoveKind::SwapInterior { kill: false } => 2,
                        MoveKind::TrianglePlus | MoveKind::TriangleMinus => 3,
                    };
                    (class, usize::MAX - m.pos)
                });
            }
            Some(rng) => {
                for i in (1..moves.len()).rev() {
                    let j = (rng.next() % (i as u64 + 1)) as usize;
                    moves.swap(i, j);
                }
            }
        }
    }

    fn charge(&mut self) -> bool {
        if self.used >= self.budget {
            return false;
        }
        self.used += 1;
        true
    }

    fn reduce(&mut self, raw: Word) -> Outcome {
        let entry_log = self.log.len();
        let before_str = raw.to_string();
        let word = match canonicalize(raw) {
            Canon::Zero => {
                self.log
                    .push(CertStep::new(ClauseId::WeightZero, before_str, "0"));
                return Outcome::Zero;
            }
            Canon::Identity { shift, weight } => {
                let _ = weight;
                return Outcome::Iso(shift);
            }
            Canon::Word(w, merged) => {
                if merged {
                    self.log
                        .push(CertStep::new(ClauseId::U03, before_str, w.to_string()));
                }
                w
            }
        };
        if let Some((out, steps)) = self.memo.get(&word) {
            let (out, steps) = (out.clone(), steps.clone());
            self.log.extend(steps);
            return out;
        }
        if self.stack.contains(&word) {
            self.log.truncate(entry_log);
            return Outcome::Abandoned;
        }
        self.stack.insert(word.clone());
        let mut moves = enumerate_moves(&word);
        let no_moves = moves.is_empty();
        self.order_moves(&mut moves);
        let mut fallback: Option<(Word, Vec<CertStep>)> = None;
        for mv in moves {
            if !self.charge() {
                break;
            }
            let cp = self.log.len();
            let out = self.apply_move(&word, mv);
            match out {
                Outcome::Iso(_) | Outcome::Zero => {
                    self.stack.remove(&word);
                    let steps = self.log[entry_log..].to_vec();
                    self.memo.insert(word, (out.clone(), steps));
                    return out;
                }
                Outcome::Normal(res) => {
                    if fallback.is_none() {
                        fallback = Some((res, self.log[cp..].to_vec()));
                    }
                    self.log.truncate(cp);
                }
                Outcome::Abandoned => {
                    self.log.truncate(cp);
                }
            }
        }
        self.stack.remove(&word);
        if no_moves {
            return Outcome::Normal(word);
        }
        if let Some((res, steps)) = fallback {
            self.log.extend(steps);
            return Outcome::Normal(res);
        }
        Outcome::Abandoned
    }

    fn apply_move(&mut self, word: &Word, mv: Move) -> Outcome {
        match mv.kind {
            MoveKind::PsiPush => {
                let (next, clause) = apply_psi_push(word, mv.pos);
                self.log
                    .push(CertStep::new(clause, word.to_string(), next.to_string()));
                self.reduce(next)
            }
            MoveKind::SwapInterior { .. } => {
                let next = apply_swap(word, mv.pos);
                self.log
                    .push(CertStep::new(ClauseId::C6c, word.to_string(), next.to_string()));
                self.reduce(next)
            }
            MoveKind::TrianglePlus | MoveKind::TriangleMinus => {
                self.resolve_triangle(word, mv)
            }
        }
    }

    fn resolve_triangle(&mut self, word: &Word, mv: Move) -> Outcome {
        let clause = if mv.kind == MoveKind::TrianglePlus {
            ClauseId::C6a
        } else {
            ClauseId::C6b
        };
        let (a, b, c, subject) = triangle_members(word, mv.pos, mv.kind);
        let cp0 = self.log.len();
        match subject {
            TriSlot::A => {
                // A → B → C: if B ≅ 0 then A ≅ C[−1]; if C ≅ 0 then A ≅ B.
                let out_b = self.reduce(b.clone());
                if out_b == Outcome::Zero {
                    let mut cw = c;
                    cw.shift -= 1;
                    self.log
                        .push(CertStep::new(clause, word.to_string(), cw.to_string()));
                    return self.reduce(cw);
                }
                let out_c = self.reduce(c);
                if out_c == Outcome::Zero {
                    self.log
                        .push(CertStep::new(clause, word.to_string(), b.to_string()));
                    return out_b;
                }
                self.log.truncate(cp0);
                Outcome::Abandoned
            }
            TriSlot::B => {
                // A → B → C: if A ≅ 0 then B ≅ C; if C ≅ 0 then B ≅ A.
                let out_a = self.reduce(a.clone());
                if out_a == Outcome::Zero {
                    self.log
                        .push(CertStep::new(clause, word.to_string(), c.to_string()));
                    return self.reduce(c);
                }
                let out_c = self.reduce(c);
                if out_c == Outcome::Zero {
                    self.log
                        .push(CertStep::new(clause, word.to_string(), a.to_string()));
                    return out_a;
                }
                self.log.truncate(cp0);
                Outcome::Abandoned
            }
            TriSlot::C => unreachable!("pairs occupy the A or B slot"),
        }
    }
}

/// Simplify with default options.
pub fn simplify(expr: &FunctorExpr) -> Simplification {
    simplify_with(expr, &SimplifyOptions::default())
}

/// Simplify an expression to a verdict, logging the rule chain.
pub fn simplify_with(expr: &FunctorExpr, opts: &SimplifyOptions) -> Simplification {
    match expr {
        FunctorExpr::Zero => Simplification {
            verdict: Verdict::ProvenZero,
            steps: Vec::new(),
            applied: 0,
        },
        FunctorExpr::Identity { shift, .. } => Simplification {
            verdict: Verdict::IsoIdentity(*shift),
            steps: Vec::new(),
            applied: 0,
        },
        FunctorExpr::Word(w) => {
            let budget = opts
                .max_steps
                .unwrap_or_else(|| (4 * w.len() * w.len()).max(64));
            let mut ctx = Ctx {
                budget,
                used: 0,
                memo: HashMap::new(),
                stack: HashSet::new(),
                log: Vec::new(),
                rng: match opts.policy {
                    Policy::Deterministic => None,
                    Policy::Shuffled(seed) => Some(SplitMix64(seed)),
                },
            };
            let out = ctx.reduce(w.clone());
            let verdict = match out {
                Outcome::Iso(m) => Verdict::IsoIdentity(m),
                Outcome::Zero => Verdict::ProvenZero,
                Outcome::Normal(res) => Verdict::Stuck(canonical_word(res)),
                Outcome::Abandoned => Verdict::Stuck(canonical_word(w.clone())),
            };
            Simplification {
                verdict,
                steps: ctx.log,
                applied: ctx.used,
            }
        }
        FunctorExpr::Filtered { a, b, c, subject } => {
            let sa = simplify_with(a, opts);
            let sb = simplify_with(b, opts);
            let sc = simplify_with(c, opts);
            let mut steps = Vec::new();
            steps.extend(sa.steps.iter().cloned());
            steps.extend(sb.steps.iter().cloned());
            steps.extend(sc.steps.iter().cloned());
            let applied = sa.applied + sb.applied + sc.applied;
            let verdict = match subject {
                TriSlot::A => match (&sb.verdict, &sc.verdict) {
                    (Verdict::ProvenZero, v) => shift_verdict(v, -1),
                    (v, Verdict::ProvenZero) => v.clone(),
                    _ => Verdict::Stuck(expr.clone()),
                },
                TriSlot::B => match (&sa.verdict, &sc.verdict) {
                    (Verdict::ProvenZero, v) => v.clone(),
                    (v, Verdict::ProvenZero) => v.clone(),
                    _ => Verdict::Stuck(expr.clone()),
                },
                TriSlot::C => match (&sa.verdict, &sb.verdict) {
                    (Verdict::ProvenZero, v) => v.clone(),
                    (v, Verdict::ProvenZero) => shift_verdict(v, 1),
                    _ => Verdict::Stuck(expr.clone()),
                },
            };
            Simplification {
                verdict,
                steps,
                applied,
            }
        }
    }
}

fn shift_verdict(v: &Verdict, by: i64) -> Verdict {
    match v {
        Verdict::IsoIdentity(m) => Verdict::IsoIdentity(m + by),
        Verdict::ProvenZero => Verdict::ProvenZero,
        Verdict::Stuck(e) => Verdict::Stuck(shift_expr(e, by)),
    }
}

fn shift_expr(e: &FunctorExpr, by: i64) -> FunctorExpr {
    match e {
        FunctorExpr::Zero => FunctorExpr::Zero,
        FunctorExpr::Identity { weight, shift } => FunctorExpr::Identity {
            weight: weight.clone(),
            shift: shift + by,
        },
        FunctorExpr::Word(w) => {
            let mut w = w.clone();
            w.shift += by;
            FunctorExpr::Word(w)
        }
        FunctorExpr::Filtered { a, b, c, subject } => FunctorExpr::Filtered {
            a: Box::new(shift_expr(a, by)),
            b: Box::new(shift_expr(b, by)),
            c: Box::new(shift_expr(c, by)),
            subject: *subject,
        },
    }
}

/// One ef-rewrite on the rightmost eligible adjacent pair: a commutation in
/// the interior range, or the exact-triangle node at a boundary value.
/// Pairs outside the covered ranges are left untouched.
pub fn ef_step(expr: &FunctorExpr) -> FunctorExpr {
    let word = match expr {
        FunctorExpr::Word(w) => w,
        other => return other.clone(),
    };
    let mut moves = enumerate_moves(word)
        .into_iter()
        .filter(|m| m.kind != MoveKind::PsiPush)
        .collect::<Vec<_>>();
    moves.sort_by_key(|m| usize::MAX - m.pos);
    let Some(mv) = moves.first().copied() else {
        return expr.clone();
    };
    match mv.kind {
        MoveKind::SwapInterior { .. } => canonical_word(apply_swap(word, mv.pos)),
        MoveKind::TrianglePlus | MoveKind::TriangleMinus => {
            let (a, b, c, subject) = triangle_members(word, mv.pos, mv.kind);
            FunctorExpr::Filtered {
                a: Box::new(canonical_word(a)),
                b: Box::new(canonical_word(b)),
                c: Box::new(canonical_word(c)),
                subject,
            }
        }
        MoveKind::PsiPush => unreachable!("filtered out"),
    }
}

/// Push all Ψ letters as far right as the same-color commutation rules
/// (5a/5b) allow. Crossings against letters of a different color are
/// refused, so a Ψ may come to rest mid-word.
pub fn push_psi_right(expr: &FunctorExpr) -> FunctorExpr {
    let mut word = match expr {
        FunctorExpr::Word(w) => w.clone(),
        other => return other.clone(),
    };
    loop {
        let mv = enumerate_moves(&word)
            .into_iter()
            .filter(|m| m.kind == MoveKind::PsiPush)
            .max_by_key(|m| m.pos);
        match mv {
            Some(m) => {
                word = apply_psi_push(&word, m.pos).0;
                word = match canonicalize(word) {
                    Canon::Zero => return FunctorExpr::Zero,
                    Canon::Identity { weight, shift } => {
                        return FunctorExpr::Identity { weight, shift }
                    }
                    Canon::Word(w, _) => w,
                };
            }
            None => break,
        }
    }
    FunctorExpr::Word(word)
}
