//! Index sets for the Grassmannian and the componentwise Bruhat order.
//!
//! An element of `I(d, n)` is a strictly increasing `d`-tuple from
//! `{1, ..., n}`. They index the torus-fixed points (and hence the Schubert
//! varieties); `v <= w` holds exactly when every entry of `v` is at most the
//! corresponding entry of `w`.

use std::fmt;

use crate::error::{Error, Result};

/// A strictly increasing `d`-tuple of integers in `{1, ..., n}`.
///
/// The derived `Ord` is lexicographic on the entry tuple; it is a linear
/// extension of the Bruhat order and is used only for canonical sorting.
/// Order-theoretic questions go through [`GrassmannIndex::bruhat_leq`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannIndex {
    n: usize,
    entries: Vec<usize>,
}

impl GrassmannIndex {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        if entries.is_empty() {
            return Err(Error::InvalidInput("d must be positive".into()));
        }
        if entries.len() > n {
            return Err(Error::InvalidInput(format!(
                "d = {} exceeds n = {}",
                entries.len(),
                n
            )));
        }
        for pair in entries.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidInput(format!(
                    "entries must be strictly increasing, got {:?}",
                    entries
                )));
            }
        }
        if entries[0] < 1 || *entries.last().unwrap() > n {
            return Err(Error::InvalidInput(format!(
                "entries must lie in 1..={}, got {:?}",
                n, entries
            )));
        }
        Ok(GrassmannIndex { n, entries })
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    /// The complement `{1, ..., n} \ self`, ascending.
    pub fn non_entries(&self) -> Vec<usize> {
        (1..=self.n).filter(|x| !self.contains(*x)).collect()
    }

    pub fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.d() != other.d() {
            Err(Error::DimensionMismatch {
                expected_d: self.d(),
                expected_n: self.n,
                got_d: other.d(),
                got_n: other.n,
            })
        } else {
            Ok(())
        }
    }

    /// Componentwise (Bruhat) comparison `self <= other`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b))
    }

    pub fn bruhat_comparable(&self, other: &Self) -> Result<bool> {
        Ok(self.bruhat_leq(other)? || other.bruhat_leq(self)?)
    }

    /// Cardinality of `self \ other` as subsets of `{1, ..., n}`; equals the
    /// cardinality of `other \ self`.
    pub fn degree_against(&self, other: &Self) -> Result<usize> {
        self.same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .filter(|x| !other.contains(**x))
            .count())
    }

    /// The mirrored tuple under `x -> n - x + 1`; an order-reversing
    /// involution on `I(d, n)`.
    pub fn dual(&self) -> Self {
        let entries: Vec<usize> = self
            .entries
            .iter()
            .rev()
            .map(|x| dual_value(*x, self.n))
            .collect();
        GrassmannIndex { n: self.n, entries }
    }
}

impl fmt::Display for GrassmannIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// The mirror `x* = n - x + 1` of a single value.
pub fn dual_value(x: usize, n: usize) -> usize {
    debug_assert!(1 <= x && x <= n);
    n - x + 1
}

/// All of `I(d, n)` in lexicographic order.
pub fn all_indices(d: usize, n: usize) -> Vec<GrassmannIndex> {
    let mut out = Vec::new();
    if d == 0 || d > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=d).collect();
    loop {
        out.push(GrassmannIndex {
            n,
            entries: current.clone(),
        });
        // next combination in lex order
        let mut i = d;
        while i > 0 {
            i -= 1;
            if current[i] < n - (d - 1 - i) {
                current[i] += 1;
                for j in i + 1..d {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// All `u` in `I(d, n)` with `u <= w` componentwise, in lexicographic order.
pub fn indices_below(w: &GrassmannIndex) -> Vec<GrassmannIndex> {
    let mut out = Vec::new();
    let d = w.d();
    let mut current = vec![0usize; d];
    fn rec(
        w: &GrassmannIndex,
        pos: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<GrassmannIndex>,
    ) {
        if pos == w.d() {
            out.push(GrassmannIndex {
                n: w.n(),
                entries: current.clone(),
            });
            return;
        }
        let lo = if pos == 0 { 1 } else { current[pos - 1] + 1 };
        for x in lo..=w.entries()[pos] {
            current[pos] = x;
            rec(w, pos + 1, current, out);
        }
    }
    rec(w, 0, &mut current, &mut out);
    out
}
