//! Standard monomials: descending Bruhat chains in `I(d, n)`.
//!
//! A standard monomial is a sequence `theta_1 >= ... >= theta_t` (possibly
//! empty). Relative to a base point `v` it is compatible when every entry is
//! comparable with `v` and none equals `v`; dominated by `w` when
//! `theta_1 <= w`; anti-dominated by `v` when `theta_t > v`. Its degree is
//! the sum of the per-entry degrees against `v`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::budget::NodeBudget;
use crate::error::{Error, Result};
use crate::grassmann::{all_indices, GrassmannIndex};

/// A weakly decreasing (in Bruhat order) sequence of indices with a common
/// ambient `(d, n)`. Stored as the sequence itself; multiset equality is
/// sequence equality because incomparable entries can never coexist.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardMonomial {
    d: usize,
    n: usize,
    thetas: Vec<GrassmannIndex>,
}

impl StandardMonomial {
    pub fn new(d: usize, n: usize, thetas: Vec<GrassmannIndex>) -> Result<Self> {
        for theta in &thetas {
            if theta.d() != d || theta.n() != n {
                return Err(Error::DimensionMismatch {
                    expected_d: d,
                    expected_n: n,
                    got_d: theta.d(),
                    got_n: theta.n(),
                });
            }
        }
        for pair in thetas.windows(2) {
            if !pair[1].bruhat_leq(&pair[0])? {
                return Err(Error::InvalidInput(format!(
                    "sequence is not descending at {} >= {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(StandardMonomial { d, n, thetas })
    }

    pub fn empty(d: usize, n: usize) -> Self {
        StandardMonomial {
            d,
            n,
            thetas: Vec::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn thetas(&self) -> &[GrassmannIndex] {
        &self.thetas
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn head(&self) -> Option<&GrassmannIndex> {
        self.thetas.first()
    }

    pub fn tail_entry(&self) -> Option<&GrassmannIndex> {
        self.thetas.last()
    }

    /// Sum of the degrees of the entries against `v`.
    pub fn degree(&self, v: &GrassmannIndex) -> Result<usize> {
        let mut total = 0;
        for theta in &self.thetas {
            total += theta.degree_against(v)?;
        }
        Ok(total)
    }

    /// Every entry comparable with `v` and none equal to it.
    pub fn is_compatible(&self, v: &GrassmannIndex) -> Result<bool> {
        for theta in &self.thetas {
            if theta == v || !theta.bruhat_comparable(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Empty, or the head lies below `w`.
    pub fn is_dominated_by(&self, w: &GrassmannIndex) -> Result<bool> {
        match self.head() {
            None => Ok(true),
            Some(theta) => theta.bruhat_leq(w),
        }
    }

    /// Empty, or the last entry lies strictly above `v`.
    pub fn is_anti_dominated_by(&self, v: &GrassmannIndex) -> Result<bool> {
        match self.tail_entry() {
            None => Ok(true),
            Some(theta) => Ok(v.bruhat_leq(theta)? && theta != v),
        }
    }

    /// Splits a `v`-compatible monomial into the part above `v` and the part
    /// below `v`; concatenating restores the original.
    pub fn split(&self, v: &GrassmannIndex) -> Result<(StandardMonomial, StandardMonomial)> {
        if !self.is_compatible(v)? {
            return Err(Error::InvalidInput(format!(
                "sequence is not compatible with v = {}",
                v
            )));
        }
        let mut p = 0;
        for theta in &self.thetas {
            if v.bruhat_leq(theta)? {
                p += 1;
            } else {
                break;
            }
        }
        Ok((
            StandardMonomial {
                d: self.d,
                n: self.n,
                thetas: self.thetas[..p].to_vec(),
            },
            StandardMonomial {
                d: self.d,
                n: self.n,
                thetas: self.thetas[p..].to_vec(),
            },
        ))
    }

    pub fn concat(&self, other: &StandardMonomial) -> Result<StandardMonomial> {
        let mut thetas = self.thetas.clone();
        thetas.extend(other.thetas.iter().cloned());
        StandardMonomial::new(self.d, self.n, thetas)
    }

    /// The mirror `theta_1 >= ... >= theta_t  ->  theta_t* >= ... >= theta_1*`;
    /// swaps the roles of `v` and its dual and preserves degree.
    pub fn dual(&self) -> StandardMonomial {
        StandardMonomial {
            d: self.d,
            n: self.n,
            thetas: self.thetas.iter().rev().map(GrassmannIndex::dual).collect(),
        }
    }
}

impl std::fmt::Display for StandardMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.thetas.iter().enumerate() {
            if i > 0 {
                write!(f, " >= ")?;
            }
            write!(f, "{}", t)?;
        }
        write!(f, "]")
    }
}

/// Which side of `v` the entries may come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryPool {
    /// Any entry comparable with `v` (and distinct from it).
    Comparable,
    /// Only entries strictly above `v`.
    AboveOnly,
    /// Only entries strictly below `v`.
    BelowOnly,
}

struct SmContext {
    v: GrassmannIndex,
    /// Candidate entries with their degrees, sorted descending in a linear
    /// extension of the Bruhat order (reverse lexicographic on tuples).
    pool: Vec<(GrassmannIndex, usize)>,
    /// `leq[i][j]` holds when `pool[i] <= pool[j]` in Bruhat order.
    leq: Vec<Vec<bool>>,
}

impl SmContext {
    fn new(v: &GrassmannIndex, pool_kind: EntryPool) -> Result<Self> {
        let mut pool = Vec::new();
        for theta in all_indices(v.d(), v.n()) {
            if theta == *v {
                continue;
            }
            let above = v.bruhat_leq(&theta)?;
            let below = theta.bruhat_leq(v)?;
            let admit = match pool_kind {
                EntryPool::Comparable => above || below,
                EntryPool::AboveOnly => above,
                EntryPool::BelowOnly => below,
            };
            if admit {
                let deg = theta.degree_against(v)?;
                pool.push((theta, deg));
            }
        }
        pool.sort_by(|a, b| b.0.cmp(&a.0));
        let leq: Vec<Vec<bool>> = pool
            .iter()
            .map(|(a, _)| {
                pool.iter()
                    .map(|(b, _)| a.bruhat_leq(b).unwrap())
                    .collect()
            })
            .collect();
        Ok(SmContext {
            v: v.clone(),
            pool,
            leq,
        })
    }

    fn admissible_heads(&self, w: &GrassmannIndex) -> Result<Vec<usize>> {
        let mut heads = Vec::new();
        for (i, (theta, _)) in self.pool.iter().enumerate() {
            if theta.bruhat_leq(w)? {
                heads.push(i);
            }
        }
        Ok(heads)
    }
}

/// Enumerates the compatible dominated standard monomials of degree `m`,
/// i.e. the `v`-compatible `w`-dominated sequences with entries drawn from
/// `pool_kind`, in a canonical order.
pub fn enumerate_sm_pool(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    m: usize,
    pool_kind: EntryPool,
) -> Result<Vec<StandardMonomial>> {
    v.same_shape(w)?;
    if !v.bruhat_leq(w)? && pool_kind != EntryPool::BelowOnly {
        return Err(Error::InvalidInput(format!(
            "expected v <= w, got v = {}, w = {}",
            v, w
        )));
    }
    let ctx = SmContext::new(v, pool_kind)?;
    let heads = ctx.admissible_heads(w)?;
    let mut budget = NodeBudget::from_env();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        ctx: &SmContext,
        allowed: &[usize],
        rem: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<StandardMonomial>,
        budget: &mut NodeBudget,
    ) -> Result<()> {
        budget.charge(1)?;
        if rem == 0 {
            let thetas = stack
                .iter()
                .map(|i| ctx.pool[*i].0.clone())
                .collect::<Vec<_>>();
            out.push(StandardMonomial {
                d: ctx.v.d(),
                n: ctx.v.n(),
                thetas,
            });
            return Ok(());
        }
        for &i in allowed {
            if ctx.pool[i].1 > rem {
                continue;
            }
            if let Some(&prev) = stack.last() {
                if !ctx.leq[i][prev] {
                    continue;
                }
            }
            stack.push(i);
            // entries after i must lie below pool[i]
            let next_allowed: Vec<usize> = (0..ctx.pool.len())
                .filter(|j| ctx.leq[*j][i])
                .collect();
            rec(ctx, &next_allowed, rem - ctx.pool[i].1, stack, out, budget)?;
            stack.pop();
        }
        Ok(())
    }
    rec(&ctx, &heads, m, &mut stack, &mut out, &mut budget)?;
    out.sort_by(|a, b| a.thetas.cmp(&b.thetas));
    out.dedup();
    Ok(out)
}

/// `SM(v, w, m)`: compatible, dominated, degree `m`, entries on either side.
pub fn enumerate_sm(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    m: usize,
) -> Result<Vec<StandardMonomial>> {
    enumerate_sm_pool(v, w, m, EntryPool::Comparable)
}

/// Count of `SM(v, w, m)` with memoization on (last entry, remaining degree).
pub fn count_sm_pool(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    m: usize,
    pool_kind: EntryPool,
) -> Result<BigUint> {
    v.same_shape(w)?;
    if !v.bruhat_leq(w)? && pool_kind != EntryPool::BelowOnly {
        return Err(Error::InvalidInput(format!(
            "expected v <= w, got v = {}, w = {}",
            v, w
        )));
    }
    let ctx = SmContext::new(v, pool_kind)?;
    // memo key: (index of previous entry in the pool, remaining degree)
    let mut memo: HashMap<(usize, usize), BigUint> = HashMap::new();
    fn count_below(
        ctx: &SmContext,
        prev: usize,
        rem: usize,
        memo: &mut HashMap<(usize, usize), BigUint>,
    ) -> BigUint {
        if rem == 0 {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(&(prev, rem)) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..ctx.pool.len() {
            if ctx.pool[i].1 <= rem && ctx.leq[i][prev] {
                total += count_below(ctx, i, rem - ctx.pool[i].1, memo);
            }
        }
        memo.insert((prev, rem), total.clone());
        total
    }
    if m == 0 {
        return Ok(BigUint::one());
    }
    let mut total = BigUint::zero();
    for i in ctx.admissible_heads(w)? {
        if ctx.pool[i].1 <= m {
            total += count_below(&ctx, i, m - ctx.pool[i].1, &mut memo);
        }
    }
    Ok(total)
}

pub fn count_sm(v: &GrassmannIndex, w: &GrassmannIndex, m: usize) -> Result<BigUint> {
    count_sm_pool(v, w, m, EntryPool::Comparable)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: usize, entries: &[usize]) -> GrassmannIndex {
        GrassmannIndex::new(n, entries.to_vec()).unwrap()
    }

    fn sm(d: usize, n: usize, seqs: &[&[usize]]) -> StandardMonomial {
        StandardMonomial::new(
            d,
            n,
            seqs.iter().map(|s| gi(n, s)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_requires_descending_chain() {
        assert!(StandardMonomial::new(2, 4, vec![gi(4, &[1, 3]), gi(4, &[2, 4])]).is_err());
        // incomparable entries rejected
        assert!(StandardMonomial::new(2, 4, vec![gi(4, &[1, 4]), gi(4, &[2, 3])]).is_err());
        assert!(sm(2, 4, &[&[2, 4], &[1, 3]]).len() == 2);
    }

    #[test]
    fn compatibility_predicate() {
        let v = gi(4, &[1, 2]);
        assert!(StandardMonomial::empty(2, 4).is_compatible(&v).unwrap());
        assert!(sm(2, 4, &[&[2, 4], &[1, 3]]).is_compatible(&v).unwrap());
        let v13 = gi(4, &[1, 3]);
        assert!(sm(2, 4, &[&[2, 3]]).is_compatible(&v13).unwrap());
        assert!(!sm(2, 4, &[&[1, 3]]).is_compatible(&v13).unwrap()); // equals v
    }

    #[test]
    fn domination_predicates() {
        let w = gi(4, &[2, 4]);
        assert!(StandardMonomial::empty(2, 4).is_dominated_by(&w).unwrap());
        assert!(sm(2, 4, &[&[2, 4], &[1, 3]]).is_dominated_by(&w).unwrap());
        assert!(!sm(2, 4, &[&[3, 4]]).is_dominated_by(&w).unwrap());

        let v = gi(4, &[1, 2]);
        assert!(StandardMonomial::empty(2, 4)
            .is_anti_dominated_by(&v)
            .unwrap());
        assert!(sm(2, 4, &[&[2, 3]]).is_anti_dominated_by(&v).unwrap());
        assert!(!sm(2, 4, &[&[2, 3], &[1, 2]])
            .is_anti_dominated_by(&v)
            .unwrap());
    }

    #[test]
    fn split_examples() {
        let v = gi(4, &[2, 3]);
        let s = sm(2, 4, &[&[3, 4], &[1, 3]]);
        let (upper, lower) = s.split(&v).unwrap();
        assert_eq!(upper, sm(2, 4, &[&[3, 4]]));
        assert_eq!(lower, sm(2, 4, &[&[1, 3]]));
        assert_eq!(upper.concat(&lower).unwrap(), s);

        let all_above = sm(2, 4, &[&[3, 4], &[2, 4]]);
        let (u, l) = all_above.split(&v).unwrap();
        assert_eq!(u, all_above);
        assert!(l.is_empty());

        let all_below = sm(2, 4, &[&[1, 3], &[1, 2]]);
        let (u, l) = all_below.split(&v).unwrap();
        assert!(u.is_empty());
        assert_eq!(l, all_below);
    }

    #[test]
    fn enumerate_sm_degree_two_instance() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        // degree 0: just the empty monomial
        assert_eq!(enumerate_sm(&v, &w, 0).unwrap().len(), 1);
        let sms = enumerate_sm(&v, &w, 2).unwrap();
        assert_eq!(sms.len(), 9);
        // 4 doubled singletons plus 5 descending pairs
        let doubles = sms.iter().filter(|s| s.thetas()[0] == s.thetas()[1]).count();
        assert_eq!(doubles, 4);
        assert_eq!(count_sm(&v, &w, 2).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn bottom_base_point_has_no_lower_entries() {
        let v = gi(4, &[1, 2]);
        assert_eq!(
            count_sm_pool(&v, &v, 0, EntryPool::BelowOnly).unwrap(),
            BigUint::one()
        );
        for m in 1..4 {
            assert_eq!(
                count_sm_pool(&v, &v, m, EntryPool::BelowOnly).unwrap(),
                BigUint::zero()
            );
        }
    }

    #[test]
    fn counts_agree_with_enumeration() {
        let v = gi(5, &[2, 4]);
        for w in all_indices(2, 5) {
            if !v.bruhat_leq(&w).unwrap() {
                continue;
            }
            for m in 0..=4 {
                let listed = enumerate_sm(&v, &w, m).unwrap();
                assert_eq!(
                    BigUint::from(listed.len()),
                    count_sm(&v, &w, m).unwrap(),
                    "v = {}, w = {}, m = {}",
                    v,
                    w,
                    m
                );
                for s in &listed {
                    assert!(s.is_compatible(&v).unwrap());
                    assert!(s.is_dominated_by(&w).unwrap());
                    assert_eq!(s.degree(&v).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn product_decomposition_over_split() {
        // |SM(v, w, m)| = sum_j |SM_above(v, w, j)| * |SM_below(v, m - j)|
        let v = gi(5, &[2, 4]);
        for w in all_indices(2, 5) {
            if !v.bruhat_leq(&w).unwrap() {
                continue;
            }
            for m in 0..=4 {
                let total = count_sm(&v, &w, m).unwrap();
                let mut sum = BigUint::zero();
                for j in 0..=m {
                    let above = count_sm_pool(&v, &w, j, EntryPool::AboveOnly).unwrap();
                    let below = count_sm_pool(&v, &v, m - j, EntryPool::BelowOnly).unwrap();
                    sum += above * below;
                }
                assert_eq!(total, sum, "v = {}, w = {}, m = {}", v, w, m);
            }
        }
    }

    #[test]
    fn lower_part_mirrors_to_upper_part_of_dual() {
        // |SM_below(v, m)| = |SM_above(v*, m)| under the explicit mirror
        for v in all_indices(2, 5) {
            let vd = v.dual();
            for m in 0..=3 {
                let below = enumerate_sm_pool(&v, &v, m, EntryPool::BelowOnly).unwrap();
                let above: Vec<_> =
                    enumerate_sm_pool(&vd, &gi(5, &[4, 5]), m, EntryPool::AboveOnly)
                        .unwrap();
                assert_eq!(below.len(), above.len(), "v = {}, m = {}", v, m);
                // the mirror is a bijection between the two sets
                for s in &below {
                    let mirrored = s.dual();
                    assert!(above.contains(&mirrored));
                    assert_eq!(mirrored.degree(&vd).unwrap(), m);
                    assert_eq!(mirrored.dual(), *s);
                }
            }
        }
    }
}
