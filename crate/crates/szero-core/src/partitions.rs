//! Young-diagram combinatorics: box enumerations, lexicographic orders,
//! Littlewood-Richardson products and GL branching.
//!
//! Diagrams are kept in canonical form (weakly decreasing, trailing zeros
//! trimmed). GL weights ([`RationalWeight`]) keep their length: the rank is
//! part of the data and entries may be negative.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("tuple arity: expected {expected}, got {got}")]
    TupleArity { expected: usize, got: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("not in P({a},{b}): {diagram}")]
    NotInBox { a: u32, b: u32, diagram: String },
}

/// A Young diagram: weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self, PartitionError> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (0-indexed), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Transpose diagram (exchange rows and columns).
    pub fn transpose(&self) -> YoungDiagram {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        YoungDiagram { parts }
    }

    /// Parts padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        (0..len).map(|i| self.part(i)).collect()
    }

    /// The diagram as a dominant GL weight of the given rank.
    pub fn as_weight(&self, rank: usize) -> RationalWeight {
        RationalWeight::new(self.padded(rank.max(self.len())).iter().map(|&p| p as i64))
            .expect("diagram parts are weakly decreasing")
    }

    pub fn in_box(&self, bx: DiagramBox) -> bool {
        self.part(0) <= bx.a && self.len() <= bx.b as usize
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The box P(a,b): diagrams with λ₁ ≤ a and at most b rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiagramBox {
    /// Maximal part.
    pub a: u32,
    /// Maximal number of rows.
    pub b: u32,
}

impl DiagramBox {
    pub fn new(a: u32, b: u32) -> Self {
        DiagramBox { a, b }
    }

    pub fn cardinality(&self) -> u64 {
        binomial((self.a + self.b) as u64, self.b as u64)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All diagrams in P(a,b), ascending in [`lex_compare`].
pub fn enumerate_p(bx: DiagramBox) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(a: u32, b: u32, current: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if current.len() == b as usize {
            out.push(YoungDiagram::new(current.iter().copied()).unwrap());
            return;
        }
        let cap = current.last().copied().unwrap_or(a);
        for p in 0..=cap {
            current.push(p);
            rec(a, b, current, out);
            current.pop();
        }
    }
    rec(bx.a, bx.b, &mut current, &mut out);
    out.sort_by(lex_compare);
    out.dedup();
    out
}

/// Lexicographic order: decided at the first differing part (padded with zeros).
pub fn lex_compare(a: &YoungDiagram, b: &YoungDiagram) -> Ordering {
    let len = a.len().max(b.len());
    for i in 0..len {
        match a.part(i).cmp(&b.part(i)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Product-lexicographic order on equal-length tuples of diagrams.
pub fn prodlex_compare(
    a: &[YoungDiagram],
    b: &[YoungDiagram],
) -> Result<Ordering, PartitionError> {
    if a.len() != b.len() {
        return Err(PartitionError::TupleArity {
            expected: a.len(),
            got: b.len(),
        });
    }
    for (x, y) in a.iter().zip(b) {
        match lex_compare(x, y) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// A GL_k weight: weakly decreasing integers of fixed length k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RationalWeight {
    entries: Vec<i64>,
}

impl RationalWeight {
    pub fn new(entries: impl IntoIterator<Item = i64>) -> Result<Self, PartitionError> {
        let entries: Vec<i64> = entries.into_iter().collect();
        if !entries.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotDecreasing(entries));
        }
        Ok(RationalWeight { entries })
    }

    pub fn zero(rank: usize) -> Self {
        RationalWeight {
            entries: vec![0; rank],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Entrywise shift by m·(1,…,1), i.e. a determinant twist.
    pub fn twist(&self, m: i64) -> RationalWeight {
        RationalWeight {
            entries: self.entries.iter().map(|e| e + m).collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    /// Dimension of the irreducible GL representation with this highest
    /// weight, by the Weyl dimension formula.
    pub fn weyl_dim(&self) -> i64 {
        let n = self.entries.len();
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 0..n {
            for j in (i + 1)..n {
                num *= (self.entries[i] - self.entries[j] + j as i64 - i as i64) as i128;
                den *= (j - i) as i128;
            }
        }
        i64::try_from(num / den).expect("dimension fits in i64 at desk scale")
    }
}

impl fmt::Debug for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<&YoungDiagram> for RationalWeight {
    fn from(d: &YoungDiagram) -> Self {
        RationalWeight {
            entries: d.parts().iter().map(|&p| p as i64).collect(),
        }
    }
}

/// Dual weight: negate and reverse. Involutive.
pub fn gl_dual(a: &RationalWeight) -> RationalWeight {
    RationalWeight {
        entries: a.entries.iter().rev().map(|e| -e).collect(),
    }
}

/// Tensor product decomposition S_a ⊗ S_b = ⊕ mult(ν) · S_ν for GL_k weights.
///
/// Both inputs are shifted nonnegative by determinant twists, the
/// Littlewood-Richardson expansion is computed there, and the twist is
/// removed again; the result does not depend on the shift.
pub fn gl_tensor(
    a: &RationalWeight,
    b: &RationalWeight,
) -> Result<BTreeMap<RationalWeight, u64>, PartitionError> {
    if a.rank() != b.rank() {
        return Err(PartitionError::LengthMismatch(a.rank(), b.rank()));
    }
    let k = a.rank();
    if k == 0 {
        return Ok(BTreeMap::from([(RationalWeight::zero(0), 1)]));
    }
    let shift_a = (-a.entries[k - 1]).max(0);
    let shift_b = (-b.entries[k - 1]).max(0);
    let pa: Vec<u32> = a.twist(shift_a).entries.iter().map(|&e| e as u32).collect();
    let pb: Vec<u32> = b.twist(shift_b).entries.iter().map(|&e| e as u32).collect();
    let expansion = lr_expand_cached(&pa, &pb, k);
    let mut out = BTreeMap::new();
    for (nu, mult) in expansion {
        let w = RationalWeight::new(nu.iter().map(|&e| e as i64 - shift_a - shift_b))
            .expect("LR summands are partitions");
        out.insert(w, mult);
    }
    Ok(out)
}

/// Branch a GL_k weight to GL_{k-1} × GL_1: all interlacing weights μ with
/// line exponent |λ| − |μ|, each with multiplicity one.
pub fn gl_branch(lambda: &RationalWeight) -> Vec<(RationalWeight, i64)> {
    let k = lambda.rank();
    assert!(k >= 1, "gl_branch needs rank >= 1");
    let mut out = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    fn rec(lambda: &[i64], current: &mut Vec<i64>, out: &mut Vec<(RationalWeight, i64)>) {
        let i = current.len();
        if i == lambda.len() - 1 {
            let mu = RationalWeight::new(current.iter().copied()).unwrap();
            let exp: i64 = lambda.iter().sum::<i64>() - mu.size();
            out.push((mu, exp));
            return;
        }
        for v in lambda[i + 1]..=lambda[i] {
            current.push(v);
            rec(lambda, current, out);
            current.pop();
        }
    }
    rec(&lambda.entries, &mut current, &mut out);
    // interlacing enumeration above runs each μ_i from λ_{i+1} up to λ_i,
    // so reverse per coordinate would be needed for dominance; the ranges
    // already guarantee μ weakly decreasing.
    out
}

type LrKey = (Vec<u32>, Vec<u32>, usize);
type LrExpansion = Vec<(Vec<u32>, u64)>;

fn lr_cache() -> &'static Mutex<HashMap<LrKey, LrExpansion>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, LrExpansion>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn lr_expand_cached(a: &[u32], b: &[u32], k: usize) -> LrExpansion {
    let key = (a.to_vec(), b.to_vec(), k);
    if let Some(hit) = lr_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let result = lr_expand(a, b, k);
    lr_cache()
        .lock()
        .unwrap()
        .insert(key, result.clone());
    result
}

/// Expand s_a · s_b in at most k rows by direct Littlewood-Richardson
/// tableau counting.
fn lr_expand(a: &[u32], b: &[u32], k: usize) -> LrExpansion {
    let total: u32 = a.iter().sum::<u32>() + b.iter().sum::<u32>();
    let mut out = Vec::new();
    let mut nu = vec![0u32; k];
    fn gen_nu(
        a: &[u32],
        b: &[u32],
        nu: &mut Vec<u32>,
        row: usize,
        remaining: u32,
        out: &mut Vec<(Vec<u32>, u64)>,
    ) {
        let k = nu.len();
        if row == k {
            if remaining == 0 {
                let c = lr_count(a, b, nu);
                if c > 0 {
                    out.push((nu.clone(), c));
                }
            }
            return;
        }
        let upper = if row == 0 {
            a[0] + b[0]
        } else {
            nu[row - 1]
        };
        let lower = a.get(row).copied().unwrap_or(0);
        for v in lower..=upper.min(remaining) {
            nu[row] = v;
            gen_nu(a, b, nu, row + 1, remaining - v, out);
        }
        nu[row] = 0;
    }
    gen_nu(a, b, &mut nu, 0, total, &mut out);
    out
}

/// Number of LR skew tableaux of shape ν/a with content b: fillings that are
/// weakly increasing along rows, strictly increasing down columns, whose
/// reverse reading word is a lattice word.
fn lr_count(a: &[u32], b: &[u32], nu: &[u32]) -> u64 {
    let rows = nu.len();
    for (i, &n) in nu.iter().enumerate() {
        if a.get(i).copied().unwrap_or(0) > n {
            return 0;
        }
    }
    // Cells of ν/a in reverse reading order: top row first, right to left.
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for (i, &n) in nu.iter().enumerate().take(rows) {
        let lo = a.get(i).copied().unwrap_or(0);
        for col in (lo..n).rev() {
            cells.push((i, col));
        }
    }
    let labels = b.len();
    let mut remaining: Vec<u32> = b.to_vec();
    let mut counts = vec![0u32; labels];
    let mut grid: Vec<Vec<u32>> = nu.iter().map(|&n| vec![0; n as usize]).collect();
    fn rec(
        cells: &[(usize, u32)],
        idx: usize,
        a: &[u32],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        remaining: &mut Vec<u32>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (row, col) = cells[idx];
        let mut total = 0u64;
        for label in 1..=counts.len() as u32 {
            let l = label as usize - 1;
            if remaining[l] == 0 {
                continue;
            }
            // lattice: after placing, #label ≤ #(label-1)
            if label > 1 && counts[l] + 1 > counts[l - 1] {
                continue;
            }
            // row weakly increasing left→right; we fill right→left
            let row_lo = a.get(row).copied().unwrap_or(0);
            if col + 1 < grid[row].len() as u32 {
                let right = grid[row][col as usize + 1];
                if label > right {
                    continue;
                }
            }
            // column strictly increasing downward
            if row > 0 && col < grid[row - 1].len() as u32 {
                let above_in_skew = col >= a.get(row - 1).copied().unwrap_or(0);
                let above = if above_in_skew {
                    grid[row - 1][col as usize]
                } else {
                    0
                };
                if above_in_skew && label <= above {
                    continue;
                }
            }
            let _ = row_lo;
            grid[row][col as usize] = label;
            counts[l] += 1;
            remaining[l] -= 1;
            total += rec(cells, idx + 1, a, grid, counts, remaining);
            grid[row][col as usize] = 0;
            counts[l] -= 1;
            remaining[l] += 1;
        }
        total
    }
    rec(&cells, 0, a, &mut grid, &mut counts, &mut remaining)
}
