//! Collection construction and semiorthogonal-decomposition certificates.
//!
//! An F-side collection at weight k̲ consists of the functor words
//! F_{1,λ(1)} F_{2,λ(2)} … F_{n−1,λ(n−1)} 1_η indexed by tuples in the
//! product of boxes P(k_{i+1}, 𝕜_i) under the product-lexicographic order;
//! the E-side (n = 2) uses E_{−μ_1}…E_{−μ_{N−k}} 1_{(N,0)} over P(k, N−k).
//! The certificate records, for each member, the verdict of the self-Hom
//! computation and, for each product-lex-ordered pair, the vanishing
//! verdict, together with the engine rule chains.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    right_adjoint_with_steps, simplify_with, CertStep, FunctorExpr, GenToken, SimplifyOptions,
    WeightVector, Word,
};
use crate::partitions::{
    enumerate_p, prodlex_compare, DiagramBox, PartitionError, YoungDiagram,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    F,
    E,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::F => write!(f, "F"),
            Side::E => write!(f, "E"),
        }
    }
}

/// A collection to verify: target weight, side, and the derived index boxes.
#[derive(Clone, Debug, Serialize)]
pub struct CollectionSpec {
    pub side: Side,
    pub target: WeightVector,
    pub n_total: i64,
}

impl CollectionSpec {
    pub fn f_side(target: WeightVector) -> Self {
        let n_total = target.total();
        CollectionSpec {
            side: Side::F,
            target,
            n_total,
        }
    }

    /// E-side collections exist for n = 2 only.
    pub fn e_side(target: WeightVector) -> Result<Self, PartitionError> {
        assert_eq!(target.n(), 2, "E-side collections require n = 2");
        let n_total = target.total();
        Ok(CollectionSpec {
            side: Side::E,
            target,
            n_total,
        })
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    /// Index boxes, one per color for the F side, a single box on the E side.
    pub fn boxes(&self) -> Vec<DiagramBox> {
        match self.side {
            Side::F => (1..self.n())
                .map(|i| {
                    DiagramBox::new(
                        self.target.k(i + 1) as u32,
                        self.target.partial_sum(i) as u32,
                    )
                })
                .collect(),
            Side::E => {
                let k = self.target.k(1);
                vec![DiagramBox::new(k as u32, (self.n_total - k) as u32)]
            }
        }
    }

    pub fn expected_cardinality(&self) -> u64 {
        self.boxes().iter().map(|b| b.cardinality()).product()
    }

    /// All index tuples in product-lexicographic order.
    pub fn members(&self) -> Vec<Vec<YoungDiagram>> {
        let factor_lists: Vec<Vec<YoungDiagram>> =
            self.boxes().into_iter().map(enumerate_p).collect();
        let mut out = vec![Vec::new()];
        for factor in &factor_lists {
            let mut next = Vec::with_capacity(out.len() * factor.len());
            for prefix in &out {
                for d in factor {
                    let mut t = prefix.clone();
                    t.push(d.clone());
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }
}

/// The literal functor word of one index tuple.
pub fn build_word(spec: &CollectionSpec, index: &[YoungDiagram]) -> Result<Word, PartitionError> {
    let boxes = spec.boxes();
    if index.len() != boxes.len() {
        return Err(PartitionError::TupleArity {
            expected: boxes.len(),
            got: index.len(),
        });
    }
    for (d, bx) in index.iter().zip(&boxes) {
        if !d.in_box(*bx) {
            return Err(PartitionError::NotInBox {
                a: bx.a,
                b: bx.b,
                diagram: d.to_string(),
            });
        }
    }
    match spec.side {
        Side::F => {
            let n = spec.n();
            let domain = WeightVector::highest(n, spec.n_total);
            let mut tokens = Vec::new();
            for (i, lam) in index.iter().enumerate() {
                let color = i + 1;
                let rows = spec.target.partial_sum(color) as usize;
                for j in 0..rows {
                    tokens.push(GenToken::f(color, lam.part(j) as i64));
                }
            }
            Ok(Word::new(tokens, domain, 0))
        }
        Side::E => {
            let domain = WeightVector::lowest(2, spec.n_total);
            let mu = &index[0];
            let letters = (spec.n_total - spec.target.k(1)) as usize;
            let tokens = (0..letters)
                .map(|j| GenToken::e(1, -(mu.part(j) as i64)))
                .collect();
            Ok(Word::new(tokens, domain, 0))
        }
    }
}

fn index_display(index: &[YoungDiagram]) -> String {
    index
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("×")
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberRecord {
    pub index: String,
    pub verdict: String,
    pub ok: bool,
    pub clauses: String,
    pub steps: Vec<CertStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub from: String,
    pub to: String,
    /// "claimed" for product-lex-ordered pairs, "no-claim" for diagnostics.
    pub kind: String,
    pub verdict: String,
    pub ok: bool,
    pub clauses: String,
    pub steps: Vec<CertStep>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertStatus {
    Valid,
    Invalid,
    Incomplete,
}

impl std::fmt::Display for CertStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertStatus::Valid => write!(f, "VALID"),
            CertStatus::Invalid => write!(f, "INVALID"),
            CertStatus::Incomplete => write!(f, "INVALID-INCOMPLETE"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SodCertificate {
    pub side: Side,
    pub target: WeightVector,
    pub n_total: i64,
    pub member_count: u64,
    pub expected_count: u64,
    pub complement: String,
    pub members: Vec<MemberRecord>,
    pub pairs: Vec<PairRecord>,
    pub status: CertStatus,
}

impl SodCertificate {
    pub fn is_valid(&self) -> bool {
        self.status == CertStatus::Valid
    }
}

/// Run the full verification sweep over one collection.
pub fn verify_collection(
    spec: &CollectionSpec,
    opts: &SimplifyOptions,
    diagnostic: bool,
) -> SodCertificate {
    let members = spec.members();
    let words: Vec<Word> = members
        .iter()
        .map(|t| build_word(spec, t).expect("members lie in their boxes"))
        .collect();
    let adjoints: Vec<(Word, Vec<CertStep>)> = words
        .iter()
        .map(|w| right_adjoint_with_steps(w).expect("collection words have valid flow"))
        .collect();

    let member_records: Vec<MemberRecord> = members
        .par_iter()
        .zip(&words)
        .zip(&adjoints)
        .map(|((index, word), (adj, adj_steps))| {
            let composite = Word::compose(adj, word).expect("adjoint composes");
            let simp = simplify_with(&FunctorExpr::Word(composite), opts);
            let ok = simp.verdict.is_identity_at(0);
            let mut steps = adj_steps.clone();
            steps.extend(simp.steps);
            MemberRecord {
                index: index_display(index),
                verdict: simp.verdict.class_label(),
                ok,
                clauses: steps
                    .iter()
                    .map(|s| s.clause.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                steps,
            }
        })
        .collect();

    let mut pair_indices = Vec::new();
    for (a, ta) in members.iter().enumerate() {
        for (b, tb) in members.iter().enumerate() {
            if a == b {
                continue;
            }
            let ord = prodlex_compare(ta, tb).expect("equal arity");
            if ord == std::cmp::Ordering::Less {
                pair_indices.push((a, b, true));
            } else if diagnostic {
                pair_indices.push((a, b, false));
            }
        }
    }
    let pair_records: Vec<PairRecord> = pair_indices
        .par_iter()
        .map(|&(a, b, claimed)| {
            let composite =
                Word::compose(&adjoints[a].0, &words[b]).expect("adjoint composes");
            let simp = simplify_with(&FunctorExpr::Word(composite), opts);
            let ok = !claimed || simp.verdict.is_zero();
            let mut steps = adjoints[a].1.clone();
            steps.extend(simp.steps);
            PairRecord {
                from: index_display(&members[a]),
                to: index_display(&members[b]),
                kind: if claimed { "claimed" } else { "no-claim" }.into(),
                verdict: simp.verdict.class_label(),
                ok,
                clauses: steps
                    .iter()
                    .map(|s| s.clause.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                steps,
            }
        })
        .collect();

    let any_stuck = member_records
        .iter()
        .map(|m| &m.verdict)
        .chain(
            pair_records
                .iter()
                .filter(|p| p.kind == "claimed")
                .map(|p| &p.verdict),
        )
        .any(|v| v.starts_with("stuck"));
    let all_ok = member_records.iter().all(|m| m.ok)
        && pair_records.iter().all(|p| p.ok);
    let status = if any_stuck {
        CertStatus::Incomplete
    } else if all_ok {
        CertStatus::Valid
    } else {
        CertStatus::Invalid
    };
    let complement = match spec.side {
        Side::F => format!("A{}", spec.target),
        Side::E => format!("B{}", spec.target),
    };
    SodCertificate {
        side: spec.side,
        target: spec.target.clone(),
        n_total: spec.n_total,
        member_count: members.len() as u64,
        expected_count: spec.expected_cardinality(),
        complement,
        members: member_records,
        pairs: pair_records,
        status,
    }
}

/// Per-member full-faithfulness: exactly the self-Hom verdict being the
/// unshifted identity.
pub fn fully_faithful_report(cert: &SodCertificate) -> Vec<(String, bool)> {
    cert.members
        .iter()
        .map(|m| (m.index.clone(), m.ok))
        .collect()
}
