//! Hilbert function and multiplicity of the tangent cone at a fixed point.
//!
//! The degree-`m` value is the number of degree-`m` monomials over the full
//! root set whose positive support is dominated by `w`. Dominated supports
//! form a simplicial complex: a set is dominated exactly when it contains no
//! minimal non-dominated chain, so the complex is cut out by a small list of
//! forbidden chains. The direct count walks the faces; the closed form runs
//! inclusion-exclusion over the maximal faces; the multiplicity is the
//! number of maximal faces, which all share one cardinality (checked per
//! instance and reported as a hard error if violated, since the path-tuple
//! picture forces it).

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::budget::NodeBudget;
use crate::error::{Error, Result};
use crate::grassmann::GrassmannIndex;
use crate::paths::{enumerate_tuples_budgeted, tuple_to_monomial};
use crate::roots::{
    all_roots, index_of_roots, nonpositive_roots, positive_roots, Root, RootMonomial,
};
use crate::standard::enumerate_sm;

/// Number of degree-`deg` monomials in `vars` variables.
pub fn count_monomials(vars: usize, deg: usize) -> BigUint {
    if vars == 0 {
        return if deg == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(
        BigUint::from(vars - 1 + deg),
        BigUint::from(vars - 1),
    )
}

/// Number of compositions of `total` into exactly `parts` positive parts.
fn count_compositions(total: usize, parts: usize) -> BigUint {
    if parts == 0 {
        return if total == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if total < parts {
        return BigUint::zero();
    }
    binomial(BigUint::from(total - 1), BigUint::from(parts - 1))
}

/// The complex of dominated square-free positive supports, presented by its
/// minimal forbidden chains as bitmasks over the positive roots.
pub(crate) struct FaceContext {
    pub roots: Vec<Root>,
    bad_edges: Vec<u128>,
    /// Per root, the forbidden chains through it.
    edges_with: Vec<Vec<u128>>,
}

impl FaceContext {
    pub fn new(
        w: &GrassmannIndex,
        v: &GrassmannIndex,
        budget: &mut NodeBudget,
    ) -> Result<FaceContext> {
        if !v.bruhat_leq(w)? {
            return Err(Error::InvalidInput(format!(
                "expected v <= w, got v = {}, w = {}",
                v, w
            )));
        }
        let roots = positive_roots(v);
        if roots.len() > 128 {
            return Err(Error::InvalidInput(format!(
                "{} positive roots exceed the supported face-search width of 128",
                roots.len()
            )));
        }
        let bad_edges = minimal_bad_chains(w, v, &roots, budget)?;
        let mut edges_with = vec![Vec::new(); roots.len()];
        for edge in &bad_edges {
            for (i, slot) in edges_with.iter_mut().enumerate() {
                if edge & (1u128 << i) != 0 {
                    slot.push(*edge);
                }
            }
        }
        Ok(FaceContext {
            roots,
            bad_edges,
            edges_with,
        })
    }

    fn full_mask(&self) -> u128 {
        if self.roots.is_empty() {
            0
        } else {
            (!0u128) >> (128 - self.roots.len())
        }
    }

    /// Whether `mask | {i}` is still a face, given `mask` is one.
    fn can_add(&self, mask: u128, i: usize) -> bool {
        let next = mask | (1u128 << i);
        self.edges_with[i].iter().all(|e| e & next != *e)
    }

    pub fn mask_to_roots(&self, mask: u128) -> Vec<Root> {
        (0..self.roots.len())
            .filter(|i| mask & (1u128 << i) != 0)
            .map(|i| self.roots[i])
            .collect()
    }

    /// Face counts grouped by cardinality: `counts[t]` faces of size `t`.
    fn face_counts(&self, budget: &mut NodeBudget) -> Result<Vec<BigUint>> {
        let mut counts = vec![BigUint::zero(); self.roots.len() + 1];
        fn rec(
            ctx: &FaceContext,
            start: usize,
            mask: u128,
            size: usize,
            counts: &mut [BigUint],
            budget: &mut NodeBudget,
        ) -> Result<()> {
            budget.charge(1)?;
            counts[size] += BigUint::one();
            for i in start..ctx.roots.len() {
                if ctx.can_add(mask, i) {
                    rec(ctx, i + 1, mask | (1u128 << i), size + 1, counts, budget)?;
                }
            }
            Ok(())
        }
        rec(self, 0, 0, 0, &mut counts, budget)?;
        Ok(counts)
    }

    /// All maximal faces, found by deleting one element of some contained
    /// forbidden chain until none remains. Every maximal face survives some
    /// deletion order, and leaves that are not maximal are filtered by the
    /// one-element extension test.
    fn maximal_faces(&self, budget: &mut NodeBudget) -> Result<Vec<u128>> {
        let full = self.full_mask();
        if self.bad_edges.is_empty() {
            return Ok(vec![full]);
        }
        let mut visited: HashSet<u128> = HashSet::new();
        let mut found: Vec<u128> = Vec::new();
        let mut stack = vec![full];
        while let Some(mask) = stack.pop() {
            if !visited.insert(mask) {
                continue;
            }
            budget.charge(1)?;
            match self.bad_edges.iter().find(|e| *e & mask == **e) {
                Some(edge) => {
                    for i in 0..self.roots.len() {
                        if edge & (1u128 << i) != 0 {
                            stack.push(mask & !(1u128 << i));
                        }
                    }
                }
                None => {
                    let extendable = (0..self.roots.len())
                        .any(|i| mask & (1u128 << i) == 0 && self.can_add(mask, i));
                    if !extendable {
                        found.push(mask);
                    }
                }
            }
        }
        found.sort_unstable();
        found.dedup();
        Ok(found)
    }
}

/// Minimal non-dominated chains over `roots`, as bitmasks. A chain is walked
/// downward only while dominated; the first failing extension is kept when
/// every delete-one subchain is dominated.
fn minimal_bad_chains(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    roots: &[Root],
    budget: &mut NodeBudget,
) -> Result<Vec<u128>> {
    let chain_dominated = |chain: &[Root]| -> Result<bool> {
        index_of_roots(v, chain)?.bruhat_leq(w)
    };
    let mut out = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    fn rec(
        w: &GrassmannIndex,
        v: &GrassmannIndex,
        roots: &[Root],
        chain: &mut Vec<usize>,
        chain_dominated: &dyn Fn(&[Root]) -> Result<bool>,
        out: &mut Vec<u128>,
        budget: &mut NodeBudget,
    ) -> Result<()> {
        budget.charge(1)?;
        let last = chain.last().copied();
        for (j, candidate) in roots.iter().enumerate() {
            let extends = match last {
                Some(i) => roots[i].covers(candidate),
                None => true,
            };
            if !extends {
                continue;
            }
            chain.push(j);
            let elems: Vec<Root> = chain.iter().map(|i| roots[*i]).collect();
            if chain_dominated(&elems)? {
                rec(w, v, roots, chain, chain_dominated, out, budget)?;
            } else {
                // delete-one minimality; the prefix without the new tail is
                // dominated by construction
                let mut minimal = true;
                for skip in 0..elems.len() - 1 {
                    let sub: Vec<Root> = elems
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, r)| *r)
                        .collect();
                    if !chain_dominated(&sub)? {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    let mask = chain.iter().fold(0u128, |m, i| m | (1u128 << *i));
                    out.push(mask);
                }
            }
            chain.pop();
        }
        Ok(())
    }
    rec(w, v, roots, &mut chain, &chain_dominated, &mut out, budget)?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Hilbert function by direct counting: sum over dominated supports of the
/// ways to distribute degree, times the free count on non-positive roots.
pub fn hilbert_direct(v: &GrassmannIndex, w: &GrassmannIndex, m: usize) -> Result<BigUint> {
    Ok(hilbert_series_direct(v, w, m)?.pop().unwrap())
}

/// Values of the direct count for `m = 0 ..= max`.
pub fn hilbert_series_direct(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    max: usize,
) -> Result<Vec<BigUint>> {
    let mut budget = NodeBudget::from_env();
    let ctx = FaceContext::new(w, v, &mut budget)?;
    let by_size = ctx.face_counts(&mut budget)?;
    let free = nonpositive_roots(v).len();
    let mut series = Vec::with_capacity(max + 1);
    for m in 0..=max {
        let mut total = BigUint::zero();
        for (t, faces) in by_size.iter().enumerate() {
            if faces.is_zero() {
                continue;
            }
            for a in t..=m {
                let ways = count_compositions(a, t) * count_monomials(free, m - a);
                total += faces * ways;
            }
        }
        series.push(total);
    }
    Ok(series)
}

/// The maximal square-free dominated monomials over the full root set. Every
/// member contains all non-positive roots; the positive parts are computed
/// both by the face search and from the path tuples, and the two must agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatedFaceFamily {
    /// Each set sorted by `(row, col)`; the list is sorted lexicographically.
    pub sets: Vec<Vec<Root>>,
    /// Common cardinality of all members.
    pub cardinality: usize,
}

impl DominatedFaceFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub fn maximal_dominated(v: &GrassmannIndex, w: &GrassmannIndex) -> Result<DominatedFaceFamily> {
    let mut budget = NodeBudget::from_env();
    maximal_dominated_budgeted(v, w, &mut budget)
}

fn maximal_dominated_budgeted(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    budget: &mut NodeBudget,
) -> Result<DominatedFaceFamily> {
    let ctx = FaceContext::new(w, v, budget)?;
    let via_search = ctx.maximal_faces(budget)?;
    let mut positive_parts: Vec<Vec<Root>> =
        via_search.iter().map(|m| ctx.mask_to_roots(*m)).collect();
    positive_parts.sort();

    // independent route: unions of the non-intersecting path tuples
    let mut via_paths: Vec<Vec<Root>> = Vec::new();
    for tuple in enumerate_tuples_budgeted(w, v, budget)? {
        via_paths.push(tuple_to_monomial(v, &tuple)?.support());
    }
    via_paths.sort();
    via_paths.dedup();
    if positive_parts != via_paths {
        return Err(Error::Falsified(format!(
            "face search found {} maximal sets but path tuples give {} for v = {}, w = {}",
            positive_parts.len(),
            via_paths.len(),
            v,
            w
        )));
    }

    let free = nonpositive_roots(v);
    let sets: Vec<Vec<Root>> = positive_parts
        .into_iter()
        .map(|mut part| {
            part.extend(free.iter().copied());
            part.sort();
            part
        })
        .collect();
    let cardinality = sets.first().map(|s| s.len()).unwrap_or(free.len());
    for s in &sets {
        if s.len() != cardinality {
            return Err(Error::Falsified(format!(
                "maximal dominated sets of unequal cardinality ({} vs {}) for v = {}, w = {}",
                s.len(),
                cardinality,
                v,
                w
            )));
        }
    }
    Ok(DominatedFaceFamily { sets, cardinality })
}

/// Hilbert function by inclusion-exclusion over the maximal dominated sets:
/// alternating sum of monomial counts on the pairwise intersections.
pub fn hilbert_inclusion_exclusion(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    m: usize,
) -> Result<BigUint> {
    Ok(hilbert_series_inclusion_exclusion(v, w, m)?.pop().unwrap())
}

/// Values of the inclusion-exclusion form for `m = 0 ..= max`.
pub fn hilbert_series_inclusion_exclusion(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    max: usize,
) -> Result<Vec<BigUint>> {
    let mut budget = NodeBudget::from_env();
    let ctx = FaceContext::new(w, v, &mut budget)?;
    let masks = ctx.maximal_faces(&mut budget)?;
    let free = nonpositive_roots(v).len();
    let mut series = Vec::with_capacity(max + 1);
    for m in 0..=max {
        let mut total = BigInt::zero();
        subset_walk(
            &masks,
            0,
            ctx.full_mask(),
            false,
            &mut |intersection, odd_selected| {
                let a = intersection.count_ones() as usize + free;
                let term = BigInt::from(count_monomials(a, m));
                if odd_selected {
                    total += term;
                } else {
                    total -= term;
                }
            },
            &mut budget,
        )?;
        if total.is_negative() {
            return Err(Error::Falsified(format!(
                "inclusion-exclusion went negative at degree {} for v = {}, w = {}",
                m, v, w
            )));
        }
        series.push(total.to_biguint().unwrap());
    }
    Ok(series)
}

/// Visits every non-empty subset of `masks` once, carrying the running
/// intersection and the parity of the selection size.
fn subset_walk(
    masks: &[u128],
    start: usize,
    intersection: u128,
    odd: bool,
    visit: &mut impl FnMut(u128, bool),
    budget: &mut NodeBudget,
) -> Result<()> {
    for j in start..masks.len() {
        budget.charge(1)?;
        let next = intersection & masks[j];
        visit(next, !odd);
        subset_walk(masks, j + 1, next, !odd, visit, budget)?;
    }
    Ok(())
}

/// Multiplicity: the number of maximal square-free dominated monomials (all
/// of maximum cardinality, which the family constructor has verified).
pub fn multiplicity(v: &GrassmannIndex, w: &GrassmannIndex) -> Result<u64> {
    Ok(maximal_dominated(v, w)?.len() as u64)
}

/// Explicit listing of the degree-`m` dominated monomials over the full root
/// set, in canonical order. Exponential in `m`; meant for desk-scale
/// verification.
pub fn enumerate_dominated_monomials(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    m: usize,
) -> Result<Vec<RootMonomial>> {
    let mut budget = NodeBudget::from_env();
    let ctx = FaceContext::new(w, v, &mut budget)?;
    let roots = all_roots(v);
    let positive_index: std::collections::HashMap<Root, usize> = ctx
        .roots
        .iter()
        .enumerate()
        .map(|(i, r)| (*r, i))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Root, u32)> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: &GrassmannIndex,
        ctx: &FaceContext,
        roots: &[Root],
        positive_index: &std::collections::HashMap<Root, usize>,
        idx: usize,
        rem: usize,
        mask: u128,
        stack: &mut Vec<(Root, u32)>,
        out: &mut Vec<RootMonomial>,
        budget: &mut NodeBudget,
    ) -> Result<()> {
        budget.charge(1)?;
        if rem == 0 {
            out.push(RootMonomial::from_pairs(v, stack.iter().copied())?);
            return Ok(());
        }
        if idx == roots.len() {
            return Ok(());
        }
        // skip this root entirely
        rec(v, ctx, roots, positive_index, idx + 1, rem, mask, stack, out, budget)?;
        // or use it with any positive multiplicity
        let root = roots[idx];
        let mut next_mask = mask;
        if let Some(i) = positive_index.get(&root) {
            if !ctx.can_add(mask, *i) {
                return Ok(());
            }
            next_mask |= 1u128 << i;
        }
        for k in 1..=rem as u32 {
            stack.push((root, k));
            rec(
                v,
                ctx,
                roots,
                positive_index,
                idx + 1,
                rem - k as usize,
                next_mask,
                stack,
                out,
                budget,
            )?;
            stack.pop();
        }
        Ok(())
    }
    rec(
        v,
        &ctx,
        &roots,
        &positive_index,
        0,
        m,
        0,
        &mut stack,
        &mut out,
        &mut budget,
    )?;
    out.sort_by(|a, b| {
        a.iter()
            .collect::<Vec<_>>()
            .cmp(&b.iter().collect::<Vec<_>>())
    });
    Ok(out)
}

/// Outcome of checking the degree-`m` bijection between dominated monomials
/// and standard monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub monomial_count: usize,
    pub standard_count: usize,
    pub round_trip_ok: bool,
    pub image_is_exactly_standard_set: bool,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.monomial_count == self.standard_count
            && self.round_trip_ok
            && self.image_is_exactly_standard_set
    }
}

/// Enumerates both sides in degree `m`, pushes every monomial through the
/// bijection, and checks the image is exactly the standard side with the
/// round trip restoring each monomial.
pub fn bijection_report(
    v: &GrassmannIndex,
    w: &GrassmannIndex,
    m: usize,
) -> Result<BijectionReport> {
    use crate::bijection::{monomial_to_standard, standard_to_monomial};
    let monomials = enumerate_dominated_monomials(v, w, m)?;
    let standards = enumerate_sm(v, w, m)?;
    let target: HashSet<_> = standards.iter().cloned().collect();
    let mut images = HashSet::new();
    let mut round_trip_ok = true;
    for mu in &monomials {
        let s = monomial_to_standard(w, mu)?;
        if standard_to_monomial(v, &s)? != *mu {
            round_trip_ok = false;
        }
        images.insert(s);
    }
    Ok(BijectionReport {
        monomial_count: monomials.len(),
        standard_count: standards.len(),
        round_trip_ok,
        image_is_exactly_standard_set: images == target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::all_indices;

    fn gi(n: usize, entries: &[usize]) -> GrassmannIndex {
        GrassmannIndex::new(n, entries.to_vec()).unwrap()
    }

    #[test]
    fn direct_values_on_the_quadric_instance() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let series = hilbert_series_direct(&v, &w, 3).unwrap();
        let expected: Vec<BigUint> = [1u32, 4, 9, 16].iter().map(|x| BigUint::from(*x)).collect();
        assert_eq!(series, expected);
    }

    #[test]
    fn smooth_point_is_free_on_nonpositive_roots() {
        for v in all_indices(2, 5) {
            let free = nonpositive_roots(&v).len();
            for m in 0..=4 {
                assert_eq!(
                    hilbert_direct(&v, &v, m).unwrap(),
                    count_monomials(free, m),
                    "v = {}, m = {}",
                    v,
                    m
                );
            }
            assert_eq!(multiplicity(&v, &v).unwrap(), 1);
        }
    }

    #[test]
    fn maximal_sets_on_the_quadric_instance() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let family = maximal_dominated(&v, &w).unwrap();
        assert_eq!(family.len(), 2);
        assert_eq!(family.cardinality, 3);
        assert!(family.sets.contains(&vec![
            Root::new(3, 1),
            Root::new(3, 2),
            Root::new(4, 2)
        ]));
        assert!(family.sets.contains(&vec![
            Root::new(3, 1),
            Root::new(4, 1),
            Root::new(4, 2)
        ]));
        assert_eq!(multiplicity(&v, &w).unwrap(), 2);
    }

    #[test]
    fn six_entry_instance_has_multiplicity_nine() {
        let v = gi(13, &[1, 2, 3, 8, 9, 10]);
        let w = gi(13, &[4, 6, 7, 10, 11, 13]);
        let family = maximal_dominated(&v, &w).unwrap();
        assert_eq!(family.len(), 9);
        assert_eq!(multiplicity(&v, &w).unwrap(), 9);
    }

    #[test]
    fn inclusion_exclusion_matches_direct() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        for m in 0..=6 {
            let ie = hilbert_inclusion_exclusion(&v, &w, m).unwrap();
            assert_eq!(ie, BigUint::from(((m + 1) * (m + 1)) as u32));
            assert_eq!(ie, hilbert_direct(&v, &w, m).unwrap());
        }
        // single-set case: w = v
        let v = gi(4, &[2, 3]);
        for m in 0..=4 {
            assert_eq!(
                hilbert_inclusion_exclusion(&v, &v, m).unwrap(),
                hilbert_direct(&v, &v, m).unwrap()
            );
        }
    }

    #[test]
    fn degree_zero_is_always_one() {
        for v in all_indices(2, 5) {
            for w in all_indices(2, 5) {
                if v.bruhat_leq(&w).unwrap() {
                    assert_eq!(hilbert_inclusion_exclusion(&v, &w, 0).unwrap(), BigUint::one());
                    assert_eq!(hilbert_direct(&v, &w, 0).unwrap(), BigUint::one());
                }
            }
        }
    }

    #[test]
    fn direct_count_matches_explicit_enumeration() {
        for v in all_indices(2, 5) {
            for w in all_indices(2, 5) {
                if !v.bruhat_leq(&w).unwrap() {
                    continue;
                }
                for m in 0..=3 {
                    let listed = enumerate_dominated_monomials(&v, &w, m).unwrap();
                    assert_eq!(
                        BigUint::from(listed.len()),
                        hilbert_direct(&v, &w, m).unwrap(),
                        "v = {}, w = {}, m = {}",
                        v,
                        w,
                        m
                    );
                    for mu in &listed {
                        assert_eq!(mu.degree(), m);
                        assert!(crate::roots::dominates_monomial(&w, &v, &mu.positive_part())
                            .unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn subsets_of_maximal_sets_are_dominated() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let family = maximal_dominated(&v, &w).unwrap();
        for set in &family.sets {
            for skip in 0..set.len() {
                let sub: Vec<Root> = set
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, r)| *r)
                    .collect();
                let m = RootMonomial::from_roots(&v, sub).unwrap();
                assert!(crate::roots::dominates_monomial(&w, &v, &m.positive_part()).unwrap());
            }
        }
    }

    #[test]
    fn bijection_report_on_the_quadric_instance() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let report = bijection_report(&v, &w, 2).unwrap();
        assert_eq!(report.monomial_count, 9);
        assert_eq!(report.standard_count, 9);
        assert!(report.ok());
        let report = bijection_report(&v, &w, 0).unwrap();
        assert_eq!(report.monomial_count, 1);
        assert!(report.ok());
    }

    #[test]
    fn finite_differences_recover_dimension_and_multiplicity() {
        // h is a polynomial of degree a - 1 with (a-1)-st difference equal
        // to the number of maximal sets
        let v = gi(13, &[1, 2, 3, 8, 9, 10]);
        let w = gi(13, &[4, 6, 7, 10, 11, 13]);
        let family = maximal_dominated(&v, &w).unwrap();
        let a = family.cardinality;
        let series = hilbert_series_inclusion_exclusion(&v, &w, a + 3).unwrap();
        let mut diffs: Vec<BigInt> = series.iter().map(|x| BigInt::from(x.clone())).collect();
        for _ in 0..a - 1 {
            diffs = diffs.windows(2).map(|p| &p[1] - &p[0]).collect();
        }
        // degree a-1 polynomial: the (a-1)-st differences are constant and
        // equal to multiplicity; the a-th differences vanish
        assert!(diffs.windows(2).all(|p| p[0] == p[1]));
        assert_eq!(diffs[0], BigInt::from(family.len()));
    }
}
