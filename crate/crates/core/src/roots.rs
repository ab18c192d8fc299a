//! Coordinate boxes attached to a fixed base point, chains, and domination.
//!
//! Throughout, an ambient index `v` is fixed. A [`Root`] is a pair `(r, c)`
//! with `c` an entry of `v` and `r` a non-entry; the positive ones are those
//! with `r > c`. A chain is a strictly decreasing sequence of positive roots
//! where `(r, c) > (r', c')` means `r > r'` and `c < c'`. Applying a chain to
//! `v` swaps its column entries for its row entries; `w` dominates the chain
//! when the result stays below `w`, and dominates a monomial when it
//! dominates every chain inside it.
//!
//! The fast domination test routes each chain through the distinguished
//! subset attached to `w` (a greedy matching); the exhaustive test applies
//! each chain directly. Both are exposed because the matching one is the
//! workhorse and the direct one is its oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannIndex;

/// An ordered pair `(row, col)`; validity is always relative to an ambient
/// index, see [`Root::validate_for`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub row: usize,
    pub col: usize,
}

impl Root {
    pub fn new(row: usize, col: usize) -> Self {
        Root { row, col }
    }

    /// Positive means `row > col`; `row == col` cannot occur for a valid root.
    pub fn is_positive(&self) -> bool {
        self.row > self.col
    }

    /// Checks `row` is a non-entry and `col` an entry of `v`.
    pub fn validate_for(&self, v: &GrassmannIndex) -> Result<()> {
        if self.row < 1 || self.row > v.n() || self.col < 1 || self.col > v.n() {
            return Err(Error::InvalidInput(format!(
                "root {} out of range 1..={}",
                self,
                v.n()
            )));
        }
        if v.contains(self.row) {
            return Err(Error::InvalidInput(format!(
                "row {} of root {} is an entry of v = {}",
                self.row, self, v
            )));
        }
        if !v.contains(self.col) {
            return Err(Error::InvalidInput(format!(
                "column {} of root {} is not an entry of v = {}",
                self.col, self, v
            )));
        }
        Ok(())
    }

    /// Strict order used for chains: bigger row and smaller column.
    pub fn covers(&self, other: &Root) -> bool {
        self.row > other.row && self.col < other.col
    }

    /// Mirror `(r, c) -> (r*, c*)` with `x* = n - x + 1`. Sends roots for `v`
    /// to roots for the dual of `v` and flips positivity; involutive.
    pub fn dual(&self, n: usize) -> Root {
        Root {
            row: n - self.row + 1,
            col: n - self.col + 1,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// All roots for `v` (every entry column against every non-entry row),
/// sorted by `(row, col)`.
pub fn all_roots(v: &GrassmannIndex) -> Vec<Root> {
    let mut out = Vec::new();
    for r in v.non_entries() {
        for &c in v.entries() {
            out.push(Root::new(r, c));
        }
    }
    out.sort();
    out
}

/// The positive roots (`row > col`) for `v`, sorted by `(row, col)`.
pub fn positive_roots(v: &GrassmannIndex) -> Vec<Root> {
    all_roots(v).into_iter().filter(Root::is_positive).collect()
}

/// The non-positive roots (`row < col`) for `v`, sorted by `(row, col)`.
pub fn nonpositive_roots(v: &GrassmannIndex) -> Vec<Root> {
    all_roots(v)
        .into_iter()
        .filter(|r| !r.is_positive())
        .collect()
}

/// A finite multiset of roots for a fixed ambient `v`, kept in canonical
/// `(row, col)` order so iteration and equality are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMonomial {
    v: GrassmannIndex,
    mult: BTreeMap<Root, u32>,
}

impl RootMonomial {
    pub fn empty(v: &GrassmannIndex) -> Self {
        RootMonomial {
            v: v.clone(),
            mult: BTreeMap::new(),
        }
    }

    /// Builds from `(root, multiplicity)` pairs; multiplicities accumulate.
    pub fn from_pairs<I>(v: &GrassmannIndex, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Root, u32)>,
    {
        let mut m = Self::empty(v);
        for (root, k) in pairs {
            m.insert(root, k)?;
        }
        Ok(m)
    }

    /// Builds a square-free monomial from distinct roots.
    pub fn from_roots<I>(v: &GrassmannIndex, roots: I) -> Result<Self>
    where
        I: IntoIterator<Item = Root>,
    {
        Self::from_pairs(v, roots.into_iter().map(|r| (r, 1)))
    }

    pub fn insert(&mut self, root: Root, k: u32) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidInput(format!(
                "multiplicity of {} must be positive",
                root
            )));
        }
        root.validate_for(&self.v)?;
        *self.mult.entry(root).or_insert(0) += k;
        Ok(())
    }

    pub fn ambient(&self) -> &GrassmannIndex {
        &self.v
    }

    pub fn degree(&self) -> usize {
        self.mult.values().map(|k| *k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicity(&self, root: &Root) -> u32 {
        self.mult.get(root).copied().unwrap_or(0)
    }

    /// Distinct roots, ascending by `(row, col)`.
    pub fn support(&self) -> Vec<Root> {
        self.mult.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Root, u32)> + '_ {
        self.mult.iter().map(|(r, k)| (*r, *k))
    }

    pub fn is_square_free(&self) -> bool {
        self.mult.values().all(|k| *k == 1)
    }

    pub fn has_positive_support_only(&self) -> bool {
        self.mult.keys().all(Root::is_positive)
    }

    /// The sub-monomial on positive roots.
    pub fn positive_part(&self) -> RootMonomial {
        RootMonomial {
            v: self.v.clone(),
            mult: self
                .mult
                .iter()
                .filter(|(r, _)| r.is_positive())
                .map(|(r, k)| (*r, *k))
                .collect(),
        }
    }

    /// The sub-monomial on non-positive roots.
    pub fn nonpositive_part(&self) -> RootMonomial {
        RootMonomial {
            v: self.v.clone(),
            mult: self
                .mult
                .iter()
                .filter(|(r, _)| !r.is_positive())
                .map(|(r, k)| (*r, *k))
                .collect(),
        }
    }

    /// Multiset union (multiplicities add). Both parts must share `v`.
    pub fn union(&self, other: &RootMonomial) -> Result<RootMonomial> {
        if self.v != other.v {
            return Err(Error::InvalidInput(
                "cannot union monomials over different base points".into(),
            ));
        }
        let mut out = self.clone();
        for (r, k) in other.iter() {
            *out.mult.entry(r).or_insert(0) += k;
        }
        Ok(out)
    }

    /// The square-free monomial on the same support.
    pub fn support_monomial(&self) -> RootMonomial {
        RootMonomial {
            v: self.v.clone(),
            mult: self.mult.keys().map(|r| (*r, 1)).collect(),
        }
    }
}

impl fmt::Display for RootMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, (r, k)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *k == 1 {
                write!(f, "{}", r)?;
            } else {
                write!(f, "{}^{}", r, k)?;
            }
        }
        write!(f, "}}")
    }
}

/// A strictly decreasing sequence of distinct positive roots for `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VChain {
    v: GrassmannIndex,
    elements: Vec<Root>,
}

impl VChain {
    pub fn new(v: &GrassmannIndex, elements: Vec<Root>) -> Result<Self> {
        for root in &elements {
            root.validate_for(v)?;
            if !root.is_positive() {
                return Err(Error::InvalidInput(format!(
                    "chain element {} is not positive",
                    root
                )));
            }
        }
        for pair in elements.windows(2) {
            if !pair[0].covers(&pair[1]) {
                return Err(Error::InvalidInput(format!(
                    "chain is not strictly decreasing at {} > {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(VChain {
            v: v.clone(),
            elements,
        })
    }

    pub fn empty(v: &GrassmannIndex) -> Self {
        VChain {
            v: v.clone(),
            elements: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &GrassmannIndex {
        &self.v
    }

    pub fn elements(&self) -> &[Root] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Swap the chain's columns out of `v` and its rows in, sorted.
    /// The empty chain returns `v` itself.
    pub fn apply(&self) -> GrassmannIndex {
        apply_roots(&self.v, &self.elements)
    }
}

/// `(v \ columns) ∪ rows` for any set of roots with distinct rows and
/// distinct columns; the caller guarantees condition (A).
fn apply_roots(v: &GrassmannIndex, roots: &[Root]) -> GrassmannIndex {
    let mut entries: Vec<usize> = v
        .entries()
        .iter()
        .copied()
        .filter(|c| !roots.iter().any(|r| r.col == *c))
        .collect();
    entries.extend(roots.iter().map(|r| r.row));
    entries.sort_unstable();
    GrassmannIndex::new(v.n(), entries).expect("replacing distinct columns by distinct rows")
}

fn require_dominating_pair(w: &GrassmannIndex, v: &GrassmannIndex) -> Result<()> {
    if !v.bruhat_leq(w)? {
        return Err(Error::InvalidInput(format!(
            "expected v <= w, got v = {}, w = {}",
            v, w
        )));
    }
    Ok(())
}

/// Direct domination test: apply the chain to `v` and compare with `w`.
pub fn dominates_chain(w: &GrassmannIndex, v: &GrassmannIndex, chain: &VChain) -> Result<bool> {
    require_dominating_pair(w, v)?;
    if chain.ambient() != v {
        return Err(Error::InvalidInput(
            "chain is not based at the given v".into(),
        ));
    }
    chain.apply().bruhat_leq(w)
}

/// Condition (A): pairwise distinct rows and pairwise distinct columns.
fn satisfies_condition_a(roots: &[Root]) -> bool {
    for (i, a) in roots.iter().enumerate() {
        for b in roots.iter().skip(i + 1) {
            if a.row == b.row || a.col == b.col {
                return false;
            }
        }
    }
    true
}

/// Condition (B*): for `(r, c)`, `(R, C)` with `r < R`, either `C < c` or
/// `r < C`.
fn satisfies_condition_b(roots: &[Root]) -> bool {
    for a in roots {
        for b in roots {
            if a.row < b.row && !(b.col < a.col || a.row < b.col) {
                return false;
            }
        }
    }
    true
}

/// A subset of the positive roots satisfying conditions (A) and (B*); these
/// are in bijection with the indices `w >= v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedSet {
    v: GrassmannIndex,
    roots: Vec<Root>, // sorted by row
}

impl DistinguishedSet {
    pub fn new(v: &GrassmannIndex, mut roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            r.validate_for(v)?;
            if !r.is_positive() {
                return Err(Error::InvalidInput(format!(
                    "distinguished element {} is not positive",
                    r
                )));
            }
        }
        roots.sort_by_key(|r| r.row);
        if !satisfies_condition_a(&roots) {
            return Err(Error::InvalidInput(
                "set shares a row or column index (condition A)".into(),
            ));
        }
        if !satisfies_condition_b(&roots) {
            return Err(Error::InvalidInput(
                "set violates condition B*".into(),
            ));
        }
        Ok(DistinguishedSet {
            v: v.clone(),
            roots,
        })
    }

    pub fn ambient(&self) -> &GrassmannIndex {
        &self.v
    }

    /// Elements sorted by row.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The index this set corresponds to under the canonical bijection.
    pub fn index(&self) -> GrassmannIndex {
        apply_roots(&self.v, &self.roots)
    }
}

/// The distinguished subset attached to `w >= v`: rows are `w \ v` ascending
/// and each row greedily takes the largest unused column of `v \ w` below it.
pub fn distinguished_of(w: &GrassmannIndex, v: &GrassmannIndex) -> Result<DistinguishedSet> {
    require_dominating_pair(w, v)?;
    let rows: Vec<usize> = w
        .entries()
        .iter()
        .copied()
        .filter(|x| !v.contains(*x))
        .collect();
    let mut cols: Vec<usize> = v
        .entries()
        .iter()
        .copied()
        .filter(|x| !w.contains(*x))
        .collect();
    let mut roots = Vec::with_capacity(rows.len());
    for r in rows {
        let pick = cols
            .iter()
            .rposition(|c| *c < r)
            .ok_or_else(|| {
                Error::Falsified(format!(
                    "no free column below row {} while pairing {} over {}",
                    r, w, v
                ))
            })?;
        roots.push(Root::new(r, cols.remove(pick)));
    }
    if !cols.is_empty() {
        return Err(Error::Falsified(format!(
            "columns {:?} left unpaired for {} over {}",
            cols, w, v
        )));
    }
    DistinguishedSet::new(v, roots)
}

/// The index associated to any set of roots satisfying condition (A):
/// `(v \ columns) ∪ rows`. Inverse to [`distinguished_of`] on distinguished
/// sets, and monotone under inclusion.
pub fn index_of_roots(v: &GrassmannIndex, roots: &[Root]) -> Result<GrassmannIndex> {
    for r in roots {
        r.validate_for(v)?;
        if !r.is_positive() {
            return Err(Error::InvalidInput(format!(
                "element {} is not positive",
                r
            )));
        }
    }
    if !satisfies_condition_a(roots) {
        return Err(Error::InvalidInput(
            "set shares a row or column index (condition A)".into(),
        ));
    }
    Ok(apply_roots(v, roots))
}

/// Largest `t` such that `beta` is the tail of a chain of length `t` in
/// `set`; `beta` must belong to `set`.
pub fn depth_in(beta: &Root, set: &[Root]) -> Result<usize> {
    if !set.contains(beta) {
        return Err(Error::InvalidInput(format!(
            "{} does not belong to the given set",
            beta
        )));
    }
    let depths = depth_map(set);
    Ok(depths[&beta])
}

/// Depth of every element: longest chain in `set` ending at it.
fn depth_map(set: &[Root]) -> BTreeMap<Root, usize> {
    // Process in an order compatible with `covers`: descending rows. Every
    // element covering beta has a strictly larger row, so its depth is final
    // by the time beta is reached.
    let mut order: Vec<Root> = set.to_vec();
    order.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
    let mut depths: BTreeMap<Root, usize> = BTreeMap::new();
    for beta in order {
        let d = set
            .iter()
            .filter(|gamma| gamma.covers(&beta))
            .map(|gamma| depths[gamma])
            .max()
            .unwrap_or(0)
            + 1;
        depths.insert(beta, d);
    }
    depths
}

/// Nested layers and exact-depth strata of a set of positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthLayers {
    /// `layers[j - 1]` holds the `j`-deep elements; nested decreasing.
    pub layers: Vec<Vec<Root>>,
    /// `strata[j - 1]` holds the elements of depth exactly `j`; these
    /// partition the set and each stratum is an antichain.
    pub strata: Vec<Vec<Root>>,
}

pub fn depth_layers(set: &[Root]) -> DepthLayers {
    let depths = depth_map(set);
    let k = depths.values().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); k];
    let mut strata = vec![Vec::new(); k];
    for (root, d) in depths {
        strata[d - 1].push(root);
        for layer in layers.iter_mut().take(d) {
            layer.push(root);
        }
    }
    for part in layers.iter_mut().chain(strata.iter_mut()) {
        part.sort();
    }
    DepthLayers { layers, strata }
}

/// Matching-based domination test for a single chain: walk the chain and
/// greedily pick, among the unused distinguished elements of `w` that cover
/// the current link, the one with the largest row. The picks must themselves
/// form a chain; equivalent to [`dominates_chain`].
pub fn dominates_chain_matching(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    chain: &VChain,
) -> Result<bool> {
    require_dominating_pair(w, v)?;
    if chain.ambient() != v {
        return Err(Error::InvalidInput(
            "chain is not based at the given v".into(),
        ));
    }
    let dist = distinguished_of(w, v)?;
    Ok(matches_into(chain.elements(), dist.roots()))
}

fn matches_into(chain: &[Root], dist: &[Root]) -> bool {
    let mut remaining: Vec<Root> = dist.to_vec();
    let mut picks: Vec<Root> = Vec::with_capacity(chain.len());
    for beta in chain {
        let best = remaining
            .iter()
            .enumerate()
            .filter(|(_, alpha)| alpha.col <= beta.col && beta.row <= alpha.row)
            .max_by_key(|(_, alpha)| alpha.row)
            .map(|(i, _)| i);
        match best {
            Some(i) => picks.push(remaining.remove(i)),
            None => return false,
        }
    }
    picks.windows(2).all(|p| p[0].covers(&p[1]))
}

/// Exhaustive monomial domination: every chain inside the support must be
/// dominated. This is the oracle; see [`dominates_monomial`] for the fast
/// route.
pub fn dominates_monomial_exhaustive(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    monomial: &RootMonomial,
) -> Result<bool> {
    require_dominating_pair(w, v)?;
    if monomial.ambient() != v {
        return Err(Error::InvalidInput(
            "monomial is not based at the given v".into(),
        ));
    }
    let support: Vec<Root> = monomial
        .support()
        .into_iter()
        .filter(Root::is_positive)
        .collect();
    let mut current: Vec<Root> = Vec::new();
    all_chains_dominated(w, v, &support, &mut current, &mut |chain| {
        apply_roots(v, chain).bruhat_leq(w)
    })
}

/// Depth-first walk over all chains in `support`, applying `check` to each
/// non-empty chain; stops early on the first failure.
fn all_chains_dominated(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    support: &[Root],
    current: &mut Vec<Root>,
    check: &mut dyn FnMut(&[Root]) -> Result<bool>,
) -> Result<bool> {
    for beta in support {
        let extends = match current.last() {
            Some(last) => last.covers(beta),
            None => true,
        };
        if !extends {
            continue;
        }
        current.push(*beta);
        if !check(current)? {
            current.pop();
            return Ok(false);
        }
        if !all_chains_dominated(w, v, support, current, check)? {
            current.pop();
            return Ok(false);
        }
        current.pop();
    }
    let _ = w;
    let _ = v;
    Ok(true)
}

/// Fast monomial domination: every chain in the support is routed through
/// the distinguished set of `w` by the greedy matching. Domination only
/// depends on the support (chains consist of distinct elements), so
/// multiplicities are ignored.
pub fn dominates_monomial(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    monomial: &RootMonomial,
) -> Result<bool> {
    require_dominating_pair(w, v)?;
    if monomial.ambient() != v {
        return Err(Error::InvalidInput(
            "monomial is not based at the given v".into(),
        ));
    }
    let support: Vec<Root> = monomial
        .support()
        .into_iter()
        .filter(Root::is_positive)
        .collect();
    dominates_support(w, v, &support)
}

/// Support-level fast domination test (square-free view).
pub(crate) fn dominates_support(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    support: &[Root],
) -> Result<bool> {
    let dist = distinguished_of(w, v)?;
    let mut current: Vec<Root> = Vec::new();
    all_chains_dominated(w, v, support, &mut current, &mut |chain| {
        Ok(matches_into(chain, dist.roots()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::all_indices;

    fn gi(n: usize, entries: &[usize]) -> GrassmannIndex {
        GrassmannIndex::new(n, entries.to_vec()).unwrap()
    }

    fn chain(v: &GrassmannIndex, elems: &[(usize, usize)]) -> VChain {
        VChain::new(
            v,
            elems.iter().map(|(r, c)| Root::new(*r, *c)).collect(),
        )
        .unwrap()
    }

    fn monomial(v: &GrassmannIndex, elems: &[(usize, usize)]) -> RootMonomial {
        RootMonomial::from_roots(v, elems.iter().map(|(r, c)| Root::new(*r, *c))).unwrap()
    }

    #[test]
    fn root_validation() {
        let v = gi(4, &[1, 2]);
        assert!(Root::new(3, 1).validate_for(&v).is_ok());
        assert!(Root::new(1, 2).validate_for(&v).is_err()); // row is an entry
        assert!(Root::new(3, 4).validate_for(&v).is_err()); // col not an entry
        assert!(Root::new(5, 1).validate_for(&v).is_err()); // out of range
    }

    #[test]
    fn apply_chain_swaps_columns_for_rows() {
        let v = gi(4, &[1, 2]);
        assert_eq!(chain(&v, &[(4, 1), (3, 2)]).apply(), gi(4, &[3, 4]));
        let v13 = gi(4, &[1, 3]);
        assert_eq!(chain(&v13, &[(4, 3)]).apply(), gi(4, &[1, 4]));
        assert_eq!(VChain::empty(&v).apply(), v);
    }

    #[test]
    fn chain_validation_rejects_non_decreasing() {
        let v = gi(4, &[1, 2]);
        assert!(VChain::new(&v, vec![Root::new(3, 2), Root::new(4, 1)]).is_err());
        assert!(VChain::new(&v, vec![Root::new(3, 1), Root::new(3, 2)]).is_err());
    }

    #[test]
    fn chain_domination_examples() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        assert!(!dominates_chain(&w, &v, &chain(&v, &[(4, 1), (3, 2)])).unwrap());
        assert!(dominates_chain(&w, &v, &chain(&v, &[(4, 1)])).unwrap());
        assert!(dominates_chain(&w, &v, &VChain::empty(&v)).unwrap());
        // v not below w is rejected
        assert!(dominates_chain(&gi(4, &[1, 3]), &gi(4, &[2, 4]), &VChain::empty(&gi(4, &[2, 4]))).is_err());
    }

    #[test]
    fn monomial_domination_examples() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        assert!(!dominates_monomial(&w, &v, &monomial(&v, &[(4, 1), (3, 2)])).unwrap());
        assert!(dominates_monomial(&w, &v, &monomial(&v, &[(3, 1), (3, 2), (4, 2)])).unwrap());
        assert!(dominates_monomial(&w, &v, &RootMonomial::empty(&v)).unwrap());
    }

    #[test]
    fn domination_is_multiplicity_blind() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let mut m = monomial(&v, &[(3, 1), (4, 2)]);
        m.insert(Root::new(3, 1), 5).unwrap();
        assert_eq!(
            dominates_monomial(&w, &v, &m).unwrap(),
            dominates_monomial(&w, &v, &m.support_monomial()).unwrap()
        );
    }

    #[test]
    fn distinguished_set_examples_from_worked_instances() {
        // 14-entry instance
        let v = gi(
            27,
            &[1, 2, 3, 4, 5, 10, 11, 12, 13, 18, 19, 20, 21, 22],
        );
        let w = gi(
            27,
            &[1, 4, 5, 9, 12, 13, 16, 17, 19, 22, 24, 25, 26, 27],
        );
        let dist = distinguished_of(&w, &v).unwrap();
        let expected: Vec<Root> = [
            (9, 3),
            (16, 11),
            (17, 10),
            (24, 21),
            (25, 20),
            (26, 18),
            (27, 2),
        ]
        .iter()
        .map(|(r, c)| Root::new(*r, *c))
        .collect();
        assert_eq!(dist.roots(), expected.as_slice());
        // round trip
        assert_eq!(dist.index(), w);

        // 6-entry instance
        let v = gi(13, &[1, 2, 3, 8, 9, 10]);
        let w = gi(13, &[4, 6, 7, 10, 11, 13]);
        let dist = distinguished_of(&w, &v).unwrap();
        let expected: Vec<Root> = [(4, 3), (6, 2), (7, 1), (11, 9), (13, 8)]
            .iter()
            .map(|(r, c)| Root::new(*r, *c))
            .collect();
        assert_eq!(dist.roots(), expected.as_slice());
        assert_eq!(dist.index(), w);

        // w = v gives the empty set
        assert!(distinguished_of(&v, &v).unwrap().is_empty());
    }

    #[test]
    fn index_of_roots_examples() {
        let v = gi(4, &[1, 2]);
        let s = [Root::new(4, 1), Root::new(3, 2)];
        assert_eq!(index_of_roots(&v, &s).unwrap(), gi(4, &[3, 4]));
        assert_eq!(index_of_roots(&v, &[]).unwrap(), v);
        // condition (A) violation
        assert!(index_of_roots(&v, &[Root::new(3, 1), Root::new(3, 2)]).is_err());
    }

    #[test]
    fn index_of_roots_is_monotone() {
        // over all distinguished sets for n = 6, check subsets give smaller indices
        for d in 1..=5 {
            for v in all_indices(d, 6) {
                for w in all_indices(d, 6) {
                    if !v.bruhat_leq(&w).unwrap() {
                        continue;
                    }
                    let dist = distinguished_of(&w, &v).unwrap();
                    let roots = dist.roots();
                    // drop each element in turn
                    for skip in 0..roots.len() {
                        let sub: Vec<Root> = roots
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| *i != skip)
                            .map(|(_, r)| *r)
                            .collect();
                        let smaller = index_of_roots(&v, &sub).unwrap();
                        assert!(smaller.bruhat_leq(&w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn depth_examples() {
        let s = [Root::new(4, 1), Root::new(3, 2)];
        assert_eq!(depth_in(&Root::new(3, 2), &s).unwrap(), 2);
        assert_eq!(depth_in(&Root::new(4, 1), &s).unwrap(), 1);
        assert_eq!(depth_in(&Root::new(4, 1), &[Root::new(4, 1)]).unwrap(), 1);
        assert!(depth_in(&Root::new(9, 9), &s).is_err());
    }

    #[test]
    fn depth_layers_on_worked_instance() {
        // distinguished set of the 6-entry instance above
        let s: Vec<Root> = [(4, 3), (6, 2), (7, 1), (11, 9), (13, 8)]
            .iter()
            .map(|(r, c)| Root::new(*r, *c))
            .collect();
        let dl = depth_layers(&s);
        // (7,1) > (6,2) > (4,3) and (13,8) > (11,9) are the maximal chains
        assert_eq!(dl.layers.len(), 3);
        let mut sorted = s.clone();
        sorted.sort();
        assert_eq!(dl.layers[0], sorted);
        assert_eq!(
            dl.layers[1],
            vec![Root::new(4, 3), Root::new(6, 2), Root::new(11, 9)]
        );
        assert_eq!(dl.layers[2], vec![Root::new(4, 3)]);
        assert_eq!(
            dl.strata[0],
            vec![Root::new(7, 1), Root::new(13, 8)]
        );
        assert_eq!(
            dl.strata[1],
            vec![Root::new(6, 2), Root::new(11, 9)]
        );
        assert_eq!(dl.strata[2], vec![Root::new(4, 3)]);
        // strata partition the set and each stratum is an antichain
        let total: usize = dl.strata.iter().map(Vec::len).sum();
        assert_eq!(total, s.len());
        for stratum in &dl.strata {
            for a in stratum {
                for b in stratum {
                    assert!(!(a != b && (a.covers(b) || b.covers(a))));
                }
            }
        }
        // degenerate cases
        assert!(depth_layers(&[]).layers.is_empty());
        let antichain = [Root::new(4, 3), Root::new(5, 3)]; // not comparable (same col)
        assert_eq!(depth_layers(&antichain).strata.len(), 1);
    }

    #[test]
    fn matching_domination_examples() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        assert!(dominates_chain_matching(&w, &v, &chain(&v, &[(3, 2)])).unwrap());
        assert!(!dominates_chain_matching(&w, &v, &chain(&v, &[(4, 1), (3, 2)])).unwrap());
        assert!(dominates_chain_matching(&w, &v, &VChain::empty(&v)).unwrap());
    }

    #[test]
    fn matching_equals_direct_domination_small() {
        // all chains over all dominated pairs for (d, n) = (2, 5)
        for v in all_indices(2, 5) {
            let roots = positive_roots(&v);
            for w in all_indices(2, 5) {
                if !v.bruhat_leq(&w).unwrap() {
                    continue;
                }
                // all chains of length <= 2
                for a in &roots {
                    let c1 = VChain::new(&v, vec![*a]).unwrap();
                    assert_eq!(
                        dominates_chain(&w, &v, &c1).unwrap(),
                        dominates_chain_matching(&w, &v, &c1).unwrap(),
                        "chain [{}] for v = {}, w = {}",
                        a,
                        v,
                        w
                    );
                    for b in &roots {
                        if a.covers(b) {
                            let c2 = VChain::new(&v, vec![*a, *b]).unwrap();
                            assert_eq!(
                                dominates_chain(&w, &v, &c2).unwrap(),
                                dominates_chain_matching(&w, &v, &c2).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
