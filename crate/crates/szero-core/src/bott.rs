//! Borel-Weil-Bott machinery: dotted Weyl normalization, cohomology of
//! Schur bundles on Gr(k,N), Ext tables for the tautological sub- and
//! quotient-bundle collections, and the projective-bundle pushforward
//! formula used as a golden reference.
//!
//! Weight convention for Gr(k,N) = {V ⊂ C^N}: a bundle S_α(Q) ⊗ S_β(V) is
//! normalized on the concatenated GL_N weight (α | β), quotient part first.
//! The P^{n-1} golden suite pins this choice.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{gl_dual, gl_tensor, DiagramBox, RationalWeight, YoungDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BottError {
    #[error("rank mismatch: alpha has rank {alpha}, beta has rank {beta}, N = {n}")]
    RankMismatch { alpha: usize, beta: usize, n: usize },
    #[error("not in P({a},{b}): {diagram}")]
    NotInBox { a: u32, b: u32, diagram: String },
}

/// Outcome of the dotted Weyl normalization of an integer weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottOutcome {
    Vanishes,
    Cohomology {
        dominant: RationalWeight,
        degree: u32,
    },
}

/// Dotted Weyl normalization: with ρ = (m-1, …, 1, 0) and v = w + ρ, the
/// weight vanishes when v has a repeated entry; otherwise the dominant
/// representative is sort_desc(v) − ρ and the degree is the inversion count
/// of v.
pub fn bott_normalize(w: &[i64]) -> BottOutcome {
    bott_normalize_with_rho_offset(w, 0)
}

/// Same as [`bott_normalize`] but with ρ translated by a constant; the
/// outcome is independent of the offset.
pub fn bott_normalize_with_rho_offset(w: &[i64], offset: i64) -> BottOutcome {
    let m = w.len();
    let v: Vec<i64> = w
        .iter()
        .enumerate()
        .map(|(i, &wi)| wi + (m - 1 - i) as i64 + offset)
        .collect();
    let mut inversions = 0u32;
    for i in 0..m {
        for j in (i + 1)..m {
            if v[i] == v[j] {
                return BottOutcome::Vanishes;
            }
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let dominant: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &vi)| vi - (m - 1 - i) as i64 - offset)
        .collect();
    BottOutcome::Cohomology {
        dominant: RationalWeight::new(dominant).expect("sorted weight is dominant"),
        degree: inversions,
    }
}

/// H^•(Gr(k,N), S_α(Q) ⊗ S_β(V)) for dominant α (rank N−k) and β (rank k).
///
/// Returns the single surviving pair (γ, d) with H^d = S_γ(C^N), or `None`
/// when the weight is singular and all cohomology vanishes.
pub fn grassmann_cohomology(
    alpha: &RationalWeight,
    beta: &RationalWeight,
    n_total: usize,
) -> Result<Option<(RationalWeight, u32)>, BottError> {
    if alpha.rank() + beta.rank() != n_total {
        return Err(BottError::RankMismatch {
            alpha: alpha.rank(),
            beta: beta.rank(),
            n: n_total,
        });
    }
    let mut w: Vec<i64> = Vec::with_capacity(n_total);
    w.extend_from_slice(alpha.entries());
    w.extend_from_slice(beta.entries());
    Ok(match bott_normalize(&w) {
        BottOutcome::Vanishes => None,
        BottOutcome::Cohomology { dominant, degree } => Some((dominant, degree)),
    })
}

/// Finitely supported graded dimensions, degree → dim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedDims(BTreeMap<i32, i64>);

impl GradedDims {
    pub fn zero() -> Self {
        GradedDims(BTreeMap::new())
    }

    pub fn singleton(degree: i32, dim: i64) -> Self {
        let mut m = BTreeMap::new();
        if dim != 0 {
            m.insert(degree, dim);
        }
        GradedDims(m)
    }

    pub fn add(&mut self, degree: i32, dim: i64) {
        if dim == 0 {
            return;
        }
        let e = self.0.entry(degree).or_insert(0);
        *e += dim;
        if *e == 0 {
            self.0.remove(&degree);
        }
    }

    pub fn dim(&self, degree: i32) -> i64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&d, &v)| (d, v))
    }

    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    /// Euler characteristic Σ (−1)^d dim^d.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .map(|(&d, &v)| if d.rem_euclid(2) == 0 { v } else { -v })
            .sum()
    }

    /// Reindex degrees by a constant: out[d] = in[d + offset].
    pub fn reindexed(&self, offset: i32) -> GradedDims {
        GradedDims(self.0.iter().map(|(&d, &v)| (d - offset, v)).collect())
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{{")?;
        for (i, (d, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {v}")?;
        }
        write!(f, "}}")
    }
}

fn box_check(d: &YoungDiagram, bx: DiagramBox) -> Result<(), BottError> {
    if d.in_box(bx) {
        Ok(())
    } else {
        Err(BottError::NotInBox {
            a: bx.a,
            b: bx.b,
            diagram: d.to_string(),
        })
    }
}

/// Graded dimensions of Ext^•(S_λ(V), S_μ(V)) on Gr(k,N), for λ, μ in the
/// box P(N−k, k).
pub fn ext_v(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    k: usize,
    n_total: usize,
) -> Result<GradedDims, BottError> {
    let bx = DiagramBox::new((n_total - k) as u32, k as u32);
    box_check(lambda, bx)?;
    box_check(mu, bx)?;
    ext_v_weights(&lambda.as_weight(k), &mu.as_weight(k), k, n_total)
}

/// Ext^•(S_a(V), S_b(V)) for arbitrary dominant GL_k weights a, b.
pub fn ext_v_weights(
    a: &RationalWeight,
    b: &RationalWeight,
    k: usize,
    n_total: usize,
) -> Result<GradedDims, BottError> {
    let alpha0 = RationalWeight::zero(n_total - k);
    let mut out = GradedDims::zero();
    for (nu, mult) in gl_tensor(&gl_dual(a), b).expect("equal ranks") {
        if let Some((gamma, d)) = grassmann_cohomology(&alpha0, &nu, n_total)? {
            out.add(d as i32, mult as i64 * gamma.weyl_dim());
        }
    }
    Ok(out)
}

/// Graded dimensions of Ext^•(S_μ(Q), S_μ'(Q)) on Gr(k,N), for μ, μ' in the
/// box P(k, N−k).
pub fn ext_q(
    mu: &YoungDiagram,
    mu_prime: &YoungDiagram,
    k: usize,
    n_total: usize,
) -> Result<GradedDims, BottError> {
    let bx = DiagramBox::new(k as u32, (n_total - k) as u32);
    box_check(mu, bx)?;
    box_check(mu_prime, bx)?;
    let q_rank = n_total - k;
    let beta0 = RationalWeight::zero(k);
    let mut out = GradedDims::zero();
    let a = mu.as_weight(q_rank);
    let b = mu_prime.as_weight(q_rank);
    for (nu, mult) in gl_tensor(&gl_dual(&a), &b).expect("equal ranks") {
        if let Some((gamma, d)) = grassmann_cohomology(&nu, &beta0, n_total)? {
            out.add(d as i32, mult as i64 * gamma.weyl_dim());
        }
    }
    Ok(out)
}

/// Graded dimensions of Ext^•(S_μ(Q)[−|μ|], S_λ(V)) on Gr(k,N): the pairing
/// between the dual collection and the Kapranov collection. The homological
/// shift moves degree d of the unshifted Ext table to degree d − |μ|.
pub fn dual_pairing(
    mu: &YoungDiagram,
    lambda: &YoungDiagram,
    k: usize,
    n_total: usize,
) -> Result<GradedDims, BottError> {
    box_check(mu, DiagramBox::new(k as u32, (n_total - k) as u32))?;
    box_check(lambda, DiagramBox::new((n_total - k) as u32, k as u32))?;
    let alpha = gl_dual(&mu.as_weight(n_total - k));
    let beta = lambda.as_weight(k);
    let mut raw = GradedDims::zero();
    if let Some((gamma, d)) = grassmann_cohomology(&alpha, &beta, n_total)? {
        raw.add(d as i32, gamma.weyl_dim());
    }
    Ok(raw.reindexed(mu.size() as i32))
}

/// The three-case projective bundle pushforward π_* O(i) on a P^{n-1}
/// fibration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjPushLine {
    /// Sym^i(V) in degree 0.
    Sym { weight: RationalWeight },
    Zero,
    /// Sym^{−i−n}(V^∨) ⊗ det(V)^{−1} in degree n−1.
    DualSymDet { weight: RationalWeight, degree: u32 },
}

/// π_* O(i) for a rank-n bundle V, as a GL_n weight plus degree.
pub fn proj_push_line(i: i64, n: usize) -> ProjPushLine {
    assert!(n >= 1);
    if i >= 0 {
        let mut w = vec![0i64; n];
        w[0] = i;
        ProjPushLine::Sym {
            weight: RationalWeight::new(w).unwrap(),
        }
    } else if i >= 1 - (n as i64) {
        ProjPushLine::Zero
    } else {
        // Sym^{−i−n}(V^∨) ⊗ det(V)^{−1} = S_{(−1,…,−1,i+n−1)}(V)
        let mut w = vec![-1i64; n];
        w[n - 1] = i + n as i64 - 1;
        ProjPushLine::DualSymDet {
            weight: RationalWeight::new(w).unwrap(),
            degree: (n - 1) as u32,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_p;
    use std::cmp::Ordering;

    fn yd(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.iter().copied()).unwrap()
    }

    fn rw(entries: &[i64]) -> RationalWeight {
        RationalWeight::new(entries.iter().copied()).unwrap()
    }

    #[test]
    fn bott_normalize_examples() {
        assert_eq!(bott_normalize(&[0, 1]), BottOutcome::Vanishes);
        assert_eq!(
            bott_normalize(&[0, 2]),
            BottOutcome::Cohomology {
                dominant: rw(&[1, 1]),
                degree: 1
            }
        );
        assert_eq!(
            bott_normalize(&[3, 1, 0]),
            BottOutcome::Cohomology {
                dominant: rw(&[3, 1, 0]),
                degree: 0
            }
        );
    }

    #[test]
    fn bott_normalize_rho_offset_invariance() {
        let weights: [&[i64]; 4] = [&[0, 2], &[-3, 1, 2], &[5, -1, 0, 2], &[0, 0]];
        for w in weights {
            for offset in [-3, 1, 7] {
                assert_eq!(bott_normalize(w), bott_normalize_with_rho_offset(w, offset));
            }
        }
    }

    #[test]
    fn bott_degree_bounded_by_inversion_count() {
        // degree ≤ m(m-1)/2
        for m in 1..=4usize {
            let mut w: Vec<i64> = (0..m).map(|i| -(2 * i as i64)).collect();
            w.reverse();
            if let BottOutcome::Cohomology { degree, .. } = bott_normalize(&w) {
                assert!(degree as usize <= m * (m - 1) / 2);
            }
        }
    }

    #[test]
    fn grassmann_cohomology_p1_cases() {
        // H^*(P^1, O(-1)) = 0
        assert_eq!(
            grassmann_cohomology(&rw(&[0]), &rw(&[1]), 2).unwrap(),
            None
        );
        // H^0(Gr, O) = C
        assert_eq!(
            grassmann_cohomology(&RationalWeight::zero(2), &RationalWeight::zero(3), 5).unwrap(),
            Some((RationalWeight::zero(5), 0))
        );
        // H^1(P^1, O(-2)) = C
        let (gamma, d) = grassmann_cohomology(&rw(&[0]), &rw(&[2]), 2)
            .unwrap()
            .unwrap();
        assert_eq!(d, 1);
        assert_eq!(gamma.weyl_dim(), 1);
        assert_eq!(gamma, rw(&[1, 1]));
    }

    #[test]
    fn proj_push_golden_suite() {
        for n in 2..=4usize {
            for i in -6..=6i64 {
                let beta = RationalWeight::zero(n - 1);
                let alpha = rw(&[i]);
                let got = grassmann_cohomology(&alpha, &beta, n).unwrap();
                match proj_push_line(i, n) {
                    ProjPushLine::Sym { weight } => {
                        assert_eq!(got, Some((weight, 0)), "i={i} n={n}");
                    }
                    ProjPushLine::Zero => assert_eq!(got, None, "i={i} n={n}"),
                    ProjPushLine::DualSymDet { weight, degree } => {
                        assert_eq!(got, Some((weight, degree)), "i={i} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn ext_v_examples() {
        // Hom(O, O(-1)) = 0 on P^1 in all degrees
        assert!(ext_v(&yd(&[]), &yd(&[1]), 1, 2).unwrap().is_zero());
        // Hom(O(-1), O) = H^0(P^1, O(1)) = C^2
        let t = ext_v(&yd(&[1]), &yd(&[]), 1, 2).unwrap();
        assert_eq!(t, GradedDims::singleton(0, 2));
        // exceptionality across a box
        for lam in enumerate_p(DiagramBox::new(2, 2)) {
            assert_eq!(
                ext_v(&lam, &lam, 2, 4).unwrap(),
                GradedDims::singleton(0, 1),
                "λ = {lam}"
            );
        }
    }

    #[test]
    fn ext_q_examples() {
        assert!(ext_q(&yd(&[1]), &yd(&[]), 1, 2).unwrap().is_zero());
        assert_eq!(
            ext_q(&yd(&[]), &yd(&[1]), 1, 2).unwrap(),
            GradedDims::singleton(0, 2)
        );
        assert_eq!(
            ext_q(&yd(&[1]), &yd(&[1]), 1, 2).unwrap(),
            GradedDims::singleton(0, 1)
        );
    }

    #[test]
    fn semiorthogonality_small_boxes() {
        for n_total in 2..=5usize {
            for k in 0..=n_total {
                let box_v = enumerate_p(DiagramBox::new((n_total - k) as u32, k as u32));
                for a in &box_v {
                    for b in &box_v {
                        let t = ext_v(a, b, k, n_total).unwrap();
                        match crate::partitions::lex_compare(a, b) {
                            Ordering::Equal => assert_eq!(t, GradedDims::singleton(0, 1)),
                            Ordering::Less => assert!(t.is_zero(), "ext_V({a},{b}) N={n_total}"),
                            Ordering::Greater => {}
                        }
                    }
                }
                let box_q = enumerate_p(DiagramBox::new(k as u32, (n_total - k) as u32));
                for a in &box_q {
                    for b in &box_q {
                        let t = ext_q(a, b, k, n_total).unwrap();
                        match crate::partitions::lex_compare(a, b) {
                            Ordering::Equal => assert_eq!(t, GradedDims::singleton(0, 1)),
                            Ordering::Greater => assert!(t.is_zero(), "ext_Q({a},{b}) N={n_total}"),
                            Ordering::Less => {}
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn serre_duality_on_small_grassmannians() {
        // dim Ext^d(S_λV, S_μV) = dim Ext^{dim−d}(S_μV, S_λV ⊗ det(V)^N)
        for n_total in 2..=4usize {
            for k in 1..=(n_total - 1) {
                let dim = k * (n_total - k);
                let bx = enumerate_p(DiagramBox::new((n_total - k) as u32, k as u32));
                for a in &bx {
                    for b in &bx {
                        let lhs = ext_v(a, b, k, n_total).unwrap();
                        let twisted = a.as_weight(k).twist(n_total as i64);
                        let rhs =
                            ext_v_weights(&b.as_weight(k), &twisted, k, n_total).unwrap();
                        for (d, v) in lhs.iter() {
                            assert_eq!(
                                v,
                                rhs.dim(dim as i32 - d),
                                "Serre duality {a},{b} N={n_total} k={k} d={d}"
                            );
                        }
                        assert_eq!(lhs.total(), rhs.total());
                    }
                }
            }
        }
    }

    #[test]
    fn dual_pairing_examples() {
        assert_eq!(
            dual_pairing(&yd(&[]), &yd(&[]), 1, 2).unwrap(),
            GradedDims::singleton(0, 1)
        );
        assert!(dual_pairing(&yd(&[1]), &yd(&[]), 1, 2).unwrap().is_zero());
        assert_eq!(
            dual_pairing(&yd(&[1]), &yd(&[1]), 1, 2).unwrap(),
            GradedDims::singleton(0, 1)
        );
    }

    #[test]
    fn dual_pairing_is_permutation_supported_on_gr12() {
        let mus = enumerate_p(DiagramBox::new(1, 1));
        let lams = enumerate_p(DiagramBox::new(1, 1));
        let mut matched = Vec::new();
        for mu in &mus {
            let hits: Vec<_> = lams
                .iter()
                .filter(|lam| !dual_pairing(mu, lam, 1, 2).unwrap().is_zero())
                .collect();
            assert_eq!(hits.len(), 1);
            assert_eq!(
                dual_pairing(mu, hits[0], 1, 2).unwrap(),
                GradedDims::singleton(0, 1)
            );
            matched.push(hits[0].clone());
        }
        matched.sort_by(crate::partitions::lex_compare);
        matched.dedup();
        assert_eq!(matched.len(), mus.len());
    }
}
