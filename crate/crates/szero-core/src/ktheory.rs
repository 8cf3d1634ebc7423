//! Independent geometric verification on K-theory of Grassmannians.
//!
//! Functor words are evaluated to complexes of Schur bundles by iterated
//! relative Borel-Weil-Bott pushforward, generator actions become exact
//! integer matrices in the Schur basis indexed by the Kapranov box, and the
//! decategorified presentation relations are checked as matrix identities.
//!
//! Decategorification is by Euler characteristic: a homological shift [m]
//! contributes the sign (−1)^m. Classes outside the box are expanded in the
//! box basis through the Euler pairing, which is unitriangular in the
//! lexicographic order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{
    right_adjoint, simplify, FunctorExpr, GenKind, GenToken, Verdict, WeightVector, Word,
};
use crate::bott::{bott_normalize, grassmann_cohomology, BottOutcome, GradedDims};
use crate::partitions::{
    binomial, enumerate_p, gl_branch, gl_dual, gl_tensor, DiagramBox, RationalWeight,
    YoungDiagram,
};

/// A Schur-bundle label S_v(V) ⊗ S_q(Q) on a Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BundleLabel {
    pub v: RationalWeight,
    pub q: RationalWeight,
}

impl fmt::Display for BundleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v_trivial = self.v.entries().iter().all(|&e| e == 0);
        let q_trivial = self.q.entries().iter().all(|&e| e == 0);
        match (v_trivial, q_trivial) {
            (true, true) => write!(f, "O"),
            (false, true) => write!(f, "S_{}V", self.v),
            (true, false) => write!(f, "S_{}Q", self.q),
            (false, false) => write!(f, "S_{}V⊗S_{}Q", self.v, self.q),
        }
    }
}

/// A finite multiset of (bundle, homological degree) terms on Gr(k,N).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalComplex {
    pub k: usize,
    pub n_total: usize,
    pub terms: Vec<(BundleLabel, i32, u64)>,
}

impl FormalComplex {
    fn from_map(
        k: usize,
        n_total: usize,
        map: std::collections::BTreeMap<(BundleLabel, i32), u64>,
    ) -> Self {
        FormalComplex {
            k,
            n_total,
            terms: map.into_iter().map(|((b, d), m)| (b, d, m)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the complex is the single term S_w(V) in degree 0.
    pub fn is_single_v(&self, w: &RationalWeight) -> bool {
        self.terms.len() == 1 && {
            let (b, d, m) = &self.terms[0];
            *d == 0 && *m == 1 && b.v == *w && b.q.entries().iter().all(|&e| e == 0)
        }
    }

    /// True when the complex is the single term S_w(Q) in degree 0.
    pub fn is_single_q(&self, w: &RationalWeight) -> bool {
        self.terms.len() == 1 && {
            let (b, d, m) = &self.terms[0];
            *d == 0 && *m == 1 && b.q == *w && b.v.entries().iter().all(|&e| e == 0)
        }
    }
}

impl fmt::Display for FormalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 on Gr({},{})", self.k, self.n_total);
        }
        for (i, (b, d, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            if *m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{b}[deg {d}]")?;
        }
        write!(f, " on Gr({},{})", self.k, self.n_total)
    }
}

/// Evaluate F_{s_1} … F_{s_k} 1_{(0,N)} as a complex on Gr(k,N): the state
/// weight μ gains the new line exponent in front, (s, μ), and is
/// Bott-normalized at each step. Box membership is not assumed.
pub fn eval_f_word(indices: &[i64], n_total: usize) -> FormalComplex {
    let k = indices.len();
    let mut state: std::collections::BTreeMap<(Vec<i64>, i32), u64> =
        std::collections::BTreeMap::from([((Vec::new(), 0), 1)]);
    for j in (0..k).rev() {
        let s = indices[j];
        let mut next = std::collections::BTreeMap::new();
        for ((mu, deg), mult) in state {
            let mut w = Vec::with_capacity(mu.len() + 1);
            w.push(s);
            w.extend_from_slice(&mu);
            if let BottOutcome::Cohomology { dominant, degree } = bott_normalize(&w) {
                *next
                    .entry((dominant.entries().to_vec(), deg + degree as i32))
                    .or_insert(0) += mult;
            }
        }
        state = next;
    }
    let mut terms = std::collections::BTreeMap::new();
    for ((mu, deg), mult) in state {
        let label = BundleLabel {
            v: RationalWeight::new(mu).expect("Bott output is dominant"),
            q: RationalWeight::zero(n_total - k),
        };
        *terms.entry((label, deg)).or_insert(0) += mult;
    }
    FormalComplex::from_map(k, n_total, terms)
}

/// Evaluate E_{r_1} … E_{r_m} 1_{(N,0)} as a complex on Gr(N−m, N):
/// the mirror of [`eval_f_word`] on the quotient-bundle side, appending the
/// new line exponent at the end of the state weight.
pub fn eval_e_word(indices: &[i64], n_total: usize) -> FormalComplex {
    let m = indices.len();
    let k = n_total - m;
    let mut state: std::collections::BTreeMap<(Vec<i64>, i32), u64> =
        std::collections::BTreeMap::from([((Vec::new(), 0), 1)]);
    for j in (0..m).rev() {
        let r = indices[j];
        let mut next = std::collections::BTreeMap::new();
        for ((nu, deg), mult) in state {
            let mut w = nu.clone();
            w.push(r);
            if let BottOutcome::Cohomology { dominant, degree } = bott_normalize(&w) {
                *next
                    .entry((dominant.entries().to_vec(), deg + degree as i32))
                    .or_insert(0) += mult;
            }
        }
        state = next;
    }
    let mut terms = std::collections::BTreeMap::new();
    for ((nu, deg), mult) in state {
        let label = BundleLabel {
            v: RationalWeight::zero(k),
            q: RationalWeight::new(nu).expect("Bott output is dominant"),
        };
        *terms.entry((label, deg)).or_insert(0) += mult;
    }
    FormalComplex::from_map(k, n_total, terms)
}

/// Evaluate the word for a box diagram λ ∈ P(N−k,k): F_{λ_1}…F_{λ_k}1_{(0,N)}.
pub fn eval_f_diagram(lambda: &YoungDiagram, k: usize, n_total: usize) -> FormalComplex {
    let indices: Vec<i64> = (0..k).map(|i| lambda.part(i) as i64).collect();
    eval_f_word(&indices, n_total)
}

/// Evaluate the word for μ ∈ P(k,N−k): E_{−μ_1}…E_{−μ_{N−k}}1_{(N,0)}.
pub fn eval_e_diagram(mu: &YoungDiagram, k: usize, n_total: usize) -> FormalComplex {
    let indices: Vec<i64> = (0..n_total - k).map(|i| -(mu.part(i) as i64)).collect();
    eval_e_word(&indices, n_total)
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for inner in 0..self.cols {
                let a = self.at(r, inner);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    out.data[r * rhs.cols + c] += a * rhs.at(inner, c);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

/// The matrix of one generator on K-theory in the Schur basis, with its
/// basis labels (ordered by lex_compare).
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorMatrix {
    pub generator: GenToken,
    pub source: WeightVector,
    pub target: WeightVector,
    pub source_basis: Vec<YoungDiagram>,
    pub target_basis: Vec<YoungDiagram>,
    pub matrix: IntMatrix,
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} : K{} -> K{}",
            self.generator, self.source, self.target
        )?;
        write!(f, "cols:")?;
        for b in &self.source_basis {
            write!(f, " {b}")?;
        }
        writeln!(f)?;
        for (r, label) in self.target_basis.iter().enumerate() {
            write!(f, "{label}:")?;
            for c in 0..self.matrix.cols {
                write!(f, " {}", self.matrix.at(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn v_box(k: i64, n_total: usize) -> Vec<YoungDiagram> {
    if !(0..=n_total as i64).contains(&k) {
        return Vec::new();
    }
    enumerate_p(DiagramBox::new(
        (n_total as i64 - k) as u32,
        k as u32,
    ))
}

/// χ(S_a(V), S_v(V) ⊗ S_q(Q)) on Gr(k,N) by Littlewood-Richardson expansion
/// and Bott normalization.
fn euler_pairing(
    a: &RationalWeight,
    v: &RationalWeight,
    q: &RationalWeight,
    n_total: usize,
) -> i64 {
    let mut chi = 0i64;
    for (nu, mult) in gl_tensor(&gl_dual(a), v).expect("equal ranks") {
        if let Some((gamma, d)) = grassmann_cohomology(q, &nu, n_total).expect("ranks add up") {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            chi += mult as i64 * sign * gamma.weyl_dim();
        }
    }
    chi
}

type ChiKey = (usize, usize);

fn chi_cache() -> &'static Mutex<HashMap<ChiKey, IntMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<ChiKey, IntMatrix>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Euler pairing matrix χ(S_λV, S_μV) over the box basis: unitriangular
/// in the lexicographic order, so arbitrary classes solve exactly over ℤ.
fn chi_matrix(k: usize, n_total: usize) -> IntMatrix {
    if let Some(hit) = chi_cache().lock().unwrap().get(&(k, n_total)) {
        return hit.clone();
    }
    let basis = v_box(k as i64, n_total);
    let dim = basis.len();
    let q0 = RationalWeight::zero(n_total - k);
    let mut m = IntMatrix::zero(dim, dim);
    for (r, a) in basis.iter().enumerate() {
        for (c, b) in basis.iter().enumerate() {
            m.set(
                r,
                c,
                euler_pairing(&a.as_weight(k), &b.as_weight(k), &q0, n_total),
            );
        }
    }
    for i in 0..dim {
        debug_assert_eq!(m.at(i, i), 1, "χ must be unitriangular");
    }
    chi_cache().lock().unwrap().insert((k, n_total), m.clone());
    m
}

/// Expand an integer combination of classes [S_v(V) ⊗ S_q(Q)] in the box
/// basis of K(Gr(k,N)) by solving against the unitriangular Euler pairing.
fn expand_in_box(terms: &[(RationalWeight, RationalWeight, i64)], k: usize, n_total: usize) -> Vec<i64> {
    let basis = v_box(k as i64, n_total);
    let dim = basis.len();
    let mut rhs = vec![0i64; dim];
    for (r, a) in basis.iter().enumerate() {
        let aw = a.as_weight(k);
        for (v, q, mult) in terms {
            rhs[r] += mult * euler_pairing(&aw, v, q, n_total);
        }
    }
    let chi = chi_matrix(k, n_total);
    let mut coords = vec![0i64; dim];
    for r in 0..dim {
        let mut acc = rhs[r];
        for (c, coord) in coords.iter().enumerate().take(r) {
            acc -= chi.at(r, c) * coord;
        }
        coords[r] = acc;
    }
    coords
}

/// The exact matrix of a generator acting K(Gr(k₁,N)) → K(Gr(target,N)) in
/// the Schur bases. Ψ exponents may be any nonzero integer.
pub fn euler_matrix(g: GenToken, source: &WeightVector, n_total: usize) -> GeneratorMatrix {
    assert_eq!(source.n(), 2, "matrix oracle covers n = 2");
    assert_eq!(g.color, 1);
    let k1 = source.k(1);
    let k2 = source.k(2);
    let target = match g.kind {
        GenKind::E => source.plus_alpha(1),
        GenKind::F => source.minus_alpha(1),
        GenKind::PsiPlus | GenKind::PsiMinus => source.clone(),
    };
    let source_basis = if source.is_valid() {
        v_box(k1, n_total)
    } else {
        Vec::new()
    };
    let target_basis = if target.is_valid() {
        v_box(target.k(1), n_total)
    } else {
        Vec::new()
    };
    let mut matrix = IntMatrix::zero(target_basis.len(), source_basis.len());
    for (c, lam) in source_basis.iter().enumerate() {
        if target_basis.is_empty() {
            break;
        }
        let column = match g.kind {
            GenKind::F => {
                // push S_λ(V_k) ⊗ (V_{k+1}/V_k)^s down the flag bundle:
                // Bott on the (s | λ) weight of V_{k+1}
                let mut w = Vec::with_capacity(k1 as usize + 1);
                w.push(g.index);
                w.extend(lam.padded(k1 as usize).iter().map(|&p| p as i64));
                match bott_normalize(&w) {
                    BottOutcome::Vanishes => vec![0; target_basis.len()],
                    BottOutcome::Cohomology { dominant, degree } => {
                        let sign = if degree % 2 == 0 { 1 } else { -1 };
                        expand_in_box(
                            &[(
                                dominant,
                                RationalWeight::zero(n_total - k1 as usize - 1),
                                sign,
                            )],
                            k1 as usize + 1,
                            n_total,
                        )
                    }
                }
            }
            GenKind::E => {
                // restrict S_λ(V_k) along V_{k-1} ⊂ V_k (gl_branch), twist the
                // line, and push along the P(Q_{k-1})-bundle: Bott on the
                // (0,…,0 | e+r) weight of Q_{k-1}
                let mut terms = Vec::new();
                for (mu, e) in gl_branch(&lam.as_weight(k1 as usize)) {
                    let mut w = vec![0i64; (k2 as usize + 1) - 1];
                    w.push(e + g.index);
                    match bott_normalize(&w) {
                        BottOutcome::Vanishes => {}
                        BottOutcome::Cohomology { dominant, degree } => {
                            let sign = if degree % 2 == 0 { 1 } else { -1 };
                            terms.push((mu.clone(), dominant, sign));
                        }
                    }
                }
                expand_in_box(&terms, k1 as usize - 1, n_total)
            }
            GenKind::PsiPlus => {
                // (Ψ+)^e = ⊗ det(Q)^e [e(1−k₂)]
                let e = g.index;
                let sign = if (e * (1 - k2)).rem_euclid(2) == 0 { 1 } else { -1 };
                let q = RationalWeight::zero(n_total - k1 as usize).twist(e);
                expand_in_box(
                    &[(lam.as_weight(k1 as usize), q, sign)],
                    k1 as usize,
                    n_total,
                )
            }
            GenKind::PsiMinus => {
                // (Ψ−)^e = ⊗ det(V)^{−e} [e(1−k₁)]
                let e = g.index;
                let sign = if (e * (1 - k1)).rem_euclid(2) == 0 { 1 } else { -1 };
                let v = lam.as_weight(k1 as usize).twist(-e);
                expand_in_box(
                    &[(v, RationalWeight::zero(n_total - k1 as usize), 1)],
                    k1 as usize,
                    n_total,
                )
                .into_iter()
                .map(|x| x * sign)
                .collect()
            }
        };
        for (r, val) in column.into_iter().enumerate() {
            matrix.set(r, c, val);
        }
    }
    GeneratorMatrix {
        generator: g,
        source: source.clone(),
        target,
        source_basis,
        target_basis,
        matrix,
    }
}

/// Relation identifiers for the decategorified presentation checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelId {
    U01,
    U03,
    U04,
    U05,
    U06,
    U07,
    U09Interior,
    U09Boundary,
}

impl RelId {
    pub const ALL: [RelId; 8] = [
        RelId::U01,
        RelId::U03,
        RelId::U04,
        RelId::U05,
        RelId::U06,
        RelId::U07,
        RelId::U09Interior,
        RelId::U09Boundary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelId::U01 => "U01",
            RelId::U03 => "U03",
            RelId::U04 => "U04",
            RelId::U05 => "U05",
            RelId::U06 => "U06",
            RelId::U07 => "U07",
            RelId::U09Interior => "U09-interior",
            RelId::U09Boundary => "U09-boundary",
        }
    }

    pub fn parse(s: &str) -> Option<RelId> {
        RelId::ALL.iter().copied().find(|r| r.name() == s)
    }
}

impl fmt::Display for RelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one relation sweep: exact pass/fail with the first failing
/// witness when applicable.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub id: String,
    pub n_total: usize,
    pub cases: u64,
    pub pass: bool,
    pub witness: Option<String>,
}

struct MatCtx {
    n_total: usize,
    memo: HashMap<(GenToken, Vec<i64>), GeneratorMatrix>,
}

impl MatCtx {
    fn new(n_total: usize) -> Self {
        MatCtx {
            n_total,
            memo: HashMap::new(),
        }
    }

    fn mat(&mut self, g: GenToken, w: &WeightVector) -> IntMatrix {
        let key = (g, w.entries().to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.matrix.clone();
        }
        let gm = euler_matrix(g, w, self.n_total);
        let m = gm.matrix.clone();
        self.memo.insert(key, gm);
        m
    }

    /// Matrix of the two-letter composite g₂ ∘ g₁ applied at w. Invalid
    /// intermediate weights carry 0-dimensional matrices, so compositions
    /// through the zero category come out as zero matrices of the right
    /// shape.
    fn mat2(&mut self, g2: GenToken, g1: GenToken, w: &WeightVector) -> IntMatrix {
        let mid = match g1.kind {
            GenKind::E => w.plus_alpha(g1.color),
            GenKind::F => w.minus_alpha(g1.color),
            GenKind::PsiPlus | GenKind::PsiMinus => w.clone(),
        };
        self.mat(g2, &mid).mul(&self.mat(g1, w))
    }
}

fn weights_c2(n_total: usize) -> Vec<WeightVector> {
    (0..=n_total as i64)
        .map(|k| WeightVector::new([k, n_total as i64 - k]))
        .collect()
}

/// Check one presentation relation over all weights of C(2,N) and all
/// in-range loop indices, as exact integer matrix identities.
#[allow(clippy::int_plus_one)]
pub fn check_relation(rel: RelId, n_total: usize) -> RelationCheck {
    let mut ctx = MatCtx::new(n_total);
    let mut cases = 0u64;
    let mut witness = None;
    let e = GenToken::e;
    let f = GenToken::f;
    'outer: for w in weights_c2(n_total) {
        let k1 = w.k(1);
        let k2 = w.k(2);
        match rel {
            RelId::U01 => {
                // weight grading: generators land in the adjacent weight
                // category, words through invalid weights are zero, and the
                // graded pieces sum to rank 2^N
                for r in -k1 - 1..=0 {
                    let gm = euler_matrix(e(1, r), &w, n_total);
                    let expect_rows = if w.plus_alpha(1).is_valid() {
                        binomial(n_total as u64, (k1 - 1).max(0) as u64) as usize
                    } else {
                        0
                    };
                    cases += 1;
                    if gm.matrix.rows != expect_rows || gm.target != w.plus_alpha(1) {
                        witness = Some(format!("E[1,{r}] at {w}: wrong grading"));
                        break 'outer;
                    }
                }
                for s in 0..=k2 + 1 {
                    let gm = euler_matrix(f(1, s), &w, n_total);
                    let expect_rows = if w.minus_alpha(1).is_valid() {
                        binomial(n_total as u64, (k1 + 1) as u64) as usize
                    } else {
                        0
                    };
                    cases += 1;
                    if gm.matrix.rows != expect_rows || gm.target != w.minus_alpha(1) {
                        witness = Some(format!("F[1,{s}] at {w}: wrong grading"));
                        break 'outer;
                    }
                }
            }
            RelId::U03 => {
                for kind in [GenKind::PsiPlus, GenKind::PsiMinus] {
                    let plus = GenToken { kind, color: 1, index: 1 };
                    let minus = GenToken { kind, color: 1, index: -1 };
                    let lhs = ctx.mat(plus, &w).mul(&ctx.mat(minus, &w));
                    let rhs = ctx.mat(minus, &w).mul(&ctx.mat(plus, &w));
                    let id = IntMatrix::identity(lhs.rows);
                    cases += 2;
                    if lhs != id || rhs != id {
                        witness = Some(format!("{kind:?} inverses fail at {w}"));
                        break 'outer;
                    }
                }
            }
            RelId::U04 => {
                // e_r e_s 1_k = −e_{s+1} e_{r−1} 1_k
                for s in -k1 - 1..=0 {
                    for r in -k1..=0 {
                        let lhs = ctx.mat2(e(1, r), e(1, s), &w);
                        let rhs = ctx.mat2(e(1, s + 1), e(1, r - 1), &w);
                        cases += 1;
                        if lhs != rhs.neg() {
                            witness = Some(format!("U04 at {w}, r={r}, s={s}"));
                            break 'outer;
                        }
                    }
                }
            }
            RelId::U05 => {
                // f_r f_s 1_k = −f_{s−1} f_{r+1} 1_k
                for s in 0..=k2 + 1 {
                    for r in 0..=k2 {
                        let lhs = ctx.mat2(f(1, r), f(1, s), &w);
                        let rhs = ctx.mat2(f(1, s - 1), f(1, r + 1), &w);
                        cases += 1;
                        if lhs != rhs.neg() {
                            witness = Some(format!("U05 at {w}, r={r}, s={s}"));
                            break 'outer;
                        }
                    }
                }
            }
            RelId::U06 => {
                // ψ± e_r 1_k = −e_{r+1} ψ± 1_k
                for kind in [GenKind::PsiPlus, GenKind::PsiMinus] {
                    let psi = GenToken { kind, color: 1, index: 1 };
                    for r in -k1 - 1..=0 {
                        let lhs = ctx.mat2(psi, e(1, r), &w);
                        let rhs = ctx.mat2(e(1, r + 1), psi, &w);
                        cases += 1;
                        if lhs != rhs.neg() {
                            witness = Some(format!("U06 {kind:?} at {w}, r={r}"));
                            break 'outer;
                        }
                    }
                }
            }
            RelId::U07 => {
                // ψ± f_r 1_k = −f_{r−1} ψ± 1_k
                for kind in [GenKind::PsiPlus, GenKind::PsiMinus] {
                    let psi = GenToken { kind, color: 1, index: 1 };
                    for r in 0..=k2 + 1 {
                        let lhs = ctx.mat2(psi, f(1, r), &w);
                        let rhs = ctx.mat2(f(1, r - 1), psi, &w);
                        cases += 1;
                        if lhs != rhs.neg() {
                            witness = Some(format!("U07 {kind:?} at {w}, r={r}"));
                            break 'outer;
                        }
                    }
                }
            }
            RelId::U09Interior | RelId::U09Boundary => {
                for r in -k1 - 1..=0 {
                    for s in 0..=k2 + 1 {
                        let rs = r + s;
                        // the h-generator cases r+s = k₂+1, −k₁−1 are out of
                        // scope; everything else in range is covered
                        if rs > k2 || rs < -k1 {
                            continue;
                        }
                        let interior = -k1 + 1 <= rs && rs <= k2 - 1;
                        if matches!(rel, RelId::U09Interior) != interior {
                            continue;
                        }
                        let ef = ctx.mat2(e(1, r), f(1, s), &w);
                        let fe = ctx.mat2(f(1, s), e(1, r), &w);
                        let dim = binomial(n_total as u64, k1 as u64) as usize;
                        let comm = ef.sub(&fe);
                        let expect = if interior {
                            IntMatrix::zero(dim, dim)
                        } else if rs == k2 {
                            ctx.mat(GenToken::psi_plus(1, 1), &w)
                        } else {
                            ctx.mat(GenToken::psi_minus(1, 1), &w).neg()
                        };
                        cases += 1;
                        if comm != expect {
                            witness = Some(format!("U09 at {w}, r={r}, s={s}"));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    RelationCheck {
        id: rel.name().to_string(),
        n_total,
        cases,
        pass: witness.is_none(),
        witness,
    }
}

/// Outcome of comparing the engine verdict with the Ext oracle on one pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum CrossCheckOutcome {
    Agree { verdict: String, ext: GradedDims },
    EngineIncomplete { ext: GradedDims },
    Mismatch { verdict: String, ext: GradedDims },
}

impl CrossCheckOutcome {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, CrossCheckOutcome::Mismatch { .. })
    }
}

/// Compare the engine verdict for Hom(F_λ 1, F_λ' 1) against the Ext table
/// of the corresponding Schur bundles.
pub fn cross_check(
    lambda: &YoungDiagram,
    lambda_p: &YoungDiagram,
    k: usize,
    n_total: usize,
) -> CrossCheckOutcome {
    let ext = crate::bott::ext_v(lambda, lambda_p, k, n_total).expect("box diagrams");
    let domain = WeightVector::highest(2, n_total as i64);
    let word = |d: &YoungDiagram| {
        let tokens = (0..k).map(|i| GenToken::f(1, d.part(i) as i64)).collect();
        Word::new(tokens, domain.clone(), 0)
    };
    let adj = right_adjoint(&word(lambda)).expect("box words have valid flow");
    let composite = Word::compose(&adj, &word(lambda_p)).expect("composable");
    let simp = simplify(&FunctorExpr::Word(composite));
    match simp.verdict {
        Verdict::Stuck(_) => CrossCheckOutcome::EngineIncomplete { ext },
        Verdict::ProvenZero => {
            if ext.is_zero() {
                CrossCheckOutcome::Agree {
                    verdict: "proven-zero".into(),
                    ext,
                }
            } else {
                CrossCheckOutcome::Mismatch {
                    verdict: "proven-zero".into(),
                    ext,
                }
            }
        }
        Verdict::IsoIdentity(m) => {
            // 1[m] corresponds to a one-dimensional Ext concentrated in −m
            if ext == GradedDims::singleton((-m) as i32, 1) {
                CrossCheckOutcome::Agree {
                    verdict: format!("iso-identity[{m}]"),
                    ext,
                }
            } else {
                CrossCheckOutcome::Mismatch {
                    verdict: format!("iso-identity[{m}]"),
                    ext,
                }
            }
        }
    }
}
