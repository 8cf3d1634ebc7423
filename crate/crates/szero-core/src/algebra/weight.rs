//! Weight lattice bookkeeping for C(n,N).

use std::fmt;

use serde::Serialize;

/// An integer weight vector of length n. It labels a nonzero weight category
/// exactly when all entries are nonnegative (entry sums are preserved by all
/// generator moves, so membership in C(n,N) reduces to nonnegativity).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeightVector {
    entries: Vec<i64>,
}

impl WeightVector {
    pub fn new(entries: impl IntoIterator<Item = i64>) -> Self {
        let entries: Vec<i64> = entries.into_iter().collect();
        assert!(entries.len() >= 2, "weights live in C(n,N) with n >= 2");
        WeightVector { entries }
    }

    /// The highest weight η = (0, …, 0, N).
    pub fn highest(n: usize, total: i64) -> Self {
        let mut entries = vec![0; n];
        entries[n - 1] = total;
        WeightVector { entries }
    }

    /// The weight (N, 0, …, 0).
    pub fn lowest(n: usize, total: i64) -> Self {
        let mut entries = vec![0; n];
        entries[0] = total;
        WeightVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// 1-indexed entry k_i.
    pub fn k(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    /// Partial sum 𝕜_i = k_1 + … + k_i.
    pub fn partial_sum(&self, i: usize) -> i64 {
        self.entries[..i].iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    /// k + α_i where α_i = (0,…,0,−1,+1,0,…,0) with −1 in position i.
    pub fn plus_alpha(&self, i: usize) -> WeightVector {
        let mut entries = self.entries.clone();
        entries[i - 1] -= 1;
        entries[i] += 1;
        WeightVector { entries }
    }

    /// k − α_i.
    pub fn minus_alpha(&self, i: usize) -> WeightVector {
        let mut entries = self.entries.clone();
        entries[i - 1] += 1;
        entries[i] -= 1;
        WeightVector { entries }
    }

    pub fn min_entry(&self) -> i64 {
        self.entries.iter().copied().min().expect("n >= 2")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightVector {
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
