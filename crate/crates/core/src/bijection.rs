//! The two mutually inverse moves between monomials and indices.
//!
//! `contract_blocks` sends a non-empty monomial over the positive roots to
//! the least index dominating it together with a smaller residual monomial:
//! the support is stratified by depth, each stratum is cut into blocks, each
//! block contributes its summary `(max row, min col)` to the index and its
//! off-diagonal pairs to the residual. `expand_pieces` reverses this: a
//! dominated monomial is partitioned into pieces anchored at the
//! distinguished elements of `w`, and each piece is widened by one element.
//!
//! Iterating the two moves lifts them to inverse, degree-preserving maps
//! between monomials over the positive roots and descending index sequences
//! anti-dominated by the base point; combining with the mirror through the
//! dual base point extends them to all monomials over the full root set.

use crate::error::{Error, Result};
use crate::grassmann::{all_indices, GrassmannIndex};
use crate::roots::{
    depth_layers, distinguished_of, dominates_monomial, dominates_monomial_exhaustive,
    index_of_roots, DistinguishedSet, Root, RootMonomial,
};
use crate::standard::StandardMonomial;

/// One block: a maximal run of a depth stratum, arranged by `(row, col)`
/// with multiplicities, together with its summary root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Elements in non-decreasing `(row, col)` order, repeated by
    /// multiplicity.
    pub arranged: Vec<Root>,
    /// `(last row, first col)` of the arrangement.
    pub summary: Root,
}

impl Block {
    fn from_arranged(arranged: Vec<Root>) -> Block {
        let summary = Root::new(
            arranged.last().unwrap().row,
            arranged.first().unwrap().col,
        );
        Block { arranged, summary }
    }

    /// The residual pairs `(r_i, c_{i+1})`; empty for a singleton block.
    pub fn residual(&self) -> Vec<Root> {
        self.arranged
            .windows(2)
            .map(|p| Root::new(p[0].row, p[1].col))
            .collect()
    }
}

/// Blocks grouped by depth stratum; `strata[j - 1]` belongs to depth `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub strata: Vec<Vec<Block>>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.strata.iter().flatten()
    }

    pub fn block_count(&self) -> usize {
        self.strata.iter().map(Vec::len).sum()
    }
}

fn arrange_with_multiplicity(monomial: &RootMonomial, roots: &[Root]) -> Vec<Root> {
    let mut arranged = Vec::new();
    let mut sorted = roots.to_vec();
    sorted.sort_by_key(|r| (r.row, r.col));
    for root in sorted {
        for _ in 0..monomial.multiplicity(&root) {
            arranged.push(root);
        }
    }
    arranged
}

/// Cuts an arranged stratum into blocks: consecutive members `(r, c)`,
/// `(R, C)` stay together exactly when `r > C`.
fn cut_into_blocks(arranged: &[Root]) -> Vec<Block> {
    let mut blocks = Vec::new();
    let mut current: Vec<Root> = Vec::new();
    for root in arranged {
        if let Some(prev) = current.last() {
            if prev.row < root.col {
                blocks.push(Block::from_arranged(std::mem::take(&mut current)));
            }
        }
        current.push(*root);
    }
    if !current.is_empty() {
        blocks.push(Block::from_arranged(current));
    }
    blocks
}

fn require_positive_monomial(monomial: &RootMonomial) -> Result<()> {
    if !monomial.has_positive_support_only() {
        return Err(Error::InvalidInput(
            "monomial has non-positive roots in its support".into(),
        ));
    }
    Ok(())
}

/// Stratifies a non-empty monomial over the positive roots by depth and cuts
/// each stratum into blocks.
pub fn block_decompose(monomial: &RootMonomial) -> Result<BlockDecomposition> {
    if monomial.is_empty() {
        return Err(Error::InvalidInput(
            "block decomposition is defined for non-empty monomials".into(),
        ));
    }
    require_positive_monomial(monomial)?;
    let layers = depth_layers(&monomial.support());
    let mut strata = Vec::with_capacity(layers.strata.len());
    for stratum in &layers.strata {
        let arranged = arrange_with_multiplicity(monomial, stratum);
        strata.push(cut_into_blocks(&arranged));
    }
    Ok(BlockDecomposition { strata })
}

/// The forward move: a non-empty monomial over the positive roots maps to
/// `(w, residual)` where `w` is the least index dominating it and the
/// residual collects the off-diagonal block pairs. Degrees satisfy
/// `degree(w against v) + degree(residual) = degree(input)`.
pub fn contract_blocks(monomial: &RootMonomial) -> Result<(GrassmannIndex, RootMonomial)> {
    let v = monomial.ambient().clone();
    let decomposition = block_decompose(monomial)?;
    let summaries: Vec<Root> = decomposition.blocks().map(|b| b.summary).collect();
    let dist = DistinguishedSet::new(&v, summaries).map_err(|e| {
        Error::Falsified(format!("block summaries are not distinguished: {}", e))
    })?;
    let w = dist.index();
    let mut residual = RootMonomial::empty(&v);
    for block in decomposition.blocks() {
        for root in block.residual() {
            residual.insert(root, 1)?;
        }
    }
    Ok((w, residual))
}

/// Least index dominating the monomial; the base point itself for the empty
/// monomial. Fast path through [`contract_blocks`].
pub fn least_dominating(monomial: &RootMonomial) -> Result<GrassmannIndex> {
    require_positive_monomial(monomial)?;
    if monomial.is_empty() {
        return Ok(monomial.ambient().clone());
    }
    Ok(contract_blocks(monomial)?.0)
}

/// Oracle for [`least_dominating`]: scan the whole of `I(d, n)`, collect the
/// dominating indices, and verify the minimum is unique.
pub fn least_dominating_by_scan(monomial: &RootMonomial) -> Result<GrassmannIndex> {
    require_positive_monomial(monomial)?;
    let v = monomial.ambient();
    let mut dominating = Vec::new();
    for w in all_indices(v.d(), v.n()) {
        if v.bruhat_leq(&w)? && dominates_monomial_exhaustive(&w, v, monomial)? {
            dominating.push(w);
        }
    }
    let mut least: Option<GrassmannIndex> = None;
    for w in &dominating {
        if dominating.iter().all(|y| w.bruhat_leq(y).unwrap()) {
            least = Some(w.clone());
            break;
        }
    }
    least.ok_or_else(|| {
        Error::Falsified(format!(
            "the dominating indices of {} have no unique minimum",
            monomial
        ))
    })
}

/// One piece: the elements of a stratum assigned to a distinguished anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    /// The distinguished element `(R, C)` this piece is attached to.
    pub anchor: Root,
    /// Assigned elements in non-decreasing `(row, col)` order with
    /// multiplicities; may be empty.
    pub arranged: Vec<Root>,
}

impl Piece {
    /// The widened monomial: `(r_1, C), (r_2, c_1), ..., (R, c_p)`; the bare
    /// anchor when the piece is empty.
    pub fn widened(&self) -> Vec<Root> {
        if self.arranged.is_empty() {
            return vec![self.anchor];
        }
        let mut out = Vec::with_capacity(self.arranged.len() + 1);
        out.push(Root::new(self.arranged[0].row, self.anchor.col));
        for pair in self.arranged.windows(2) {
            out.push(Root::new(pair[1].row, pair[0].col));
        }
        out.push(Root::new(self.anchor.row, self.arranged.last().unwrap().col));
        out
    }
}

/// Pieces grouped by depth stratum of the distinguished set of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceDecomposition {
    pub strata: Vec<Vec<Piece>>,
}

impl PieceDecomposition {
    pub fn pieces(&self) -> impl Iterator<Item = &Piece> {
        self.strata.iter().flatten()
    }
}

/// Largest `j` such that the level index `levels[j - 1]` dominates the
/// chain. Level 1 always dominates because the monomial is `w`-dominated.
fn chain_level(levels: &[GrassmannIndex], v: &GrassmannIndex, chain: &[Root]) -> Result<usize> {
    let target = crate::roots::index_of_roots(v, chain)?;
    for j in (1..=levels.len()).rev() {
        if target.bruhat_leq(&levels[j - 1])? {
            return Ok(j);
        }
    }
    Err(Error::Falsified(format!(
        "chain {:?} is not dominated by the top level",
        chain
    )))
}

/// Minimum level over all chains in `support` headed by `head`.
fn head_level(
    levels: &[GrassmannIndex],
    v: &GrassmannIndex,
    support: &[Root],
    head: Root,
) -> Result<usize> {
    fn rec(
        levels: &[GrassmannIndex],
        v: &GrassmannIndex,
        support: &[Root],
        chain: &mut Vec<Root>,
        best: &mut usize,
    ) -> Result<()> {
        let level = chain_level(levels, v, chain)?;
        if level < *best {
            *best = level;
        }
        if *best == 1 {
            return Ok(()); // cannot go lower
        }
        let last = *chain.last().unwrap();
        for beta in support {
            if last.covers(beta) {
                chain.push(*beta);
                rec(levels, v, support, chain, best)?;
                chain.pop();
            }
        }
        Ok(())
    }
    let mut chain = vec![head];
    let mut best = usize::MAX;
    rec(levels, v, support, &mut chain, &mut best)?;
    Ok(best)
}

/// Partitions a `w`-dominated monomial into pieces anchored at the
/// distinguished elements of `w`, stratum by stratum.
pub fn piece_decompose(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    monomial: &RootMonomial,
) -> Result<PieceDecomposition> {
    if monomial.ambient() != v {
        return Err(Error::InvalidInput(
            "monomial is not based at the given v".into(),
        ));
    }
    require_positive_monomial(monomial)?;
    if !dominates_monomial(w, v, monomial)? {
        return Err(Error::InvalidInput(format!(
            "{} does not dominate {}",
            w, monomial
        )));
    }
    if w == v {
        if !monomial.is_empty() {
            return Err(Error::InvalidInput(
                "a non-empty monomial cannot be decomposed at w = v".into(),
            ));
        }
        return Ok(PieceDecomposition { strata: Vec::new() });
    }
    let dist = distinguished_of(w, v)?;
    let layers = depth_layers(dist.roots());
    let depth = layers.layers.len();
    // levels[j - 1] is the index of the j-deep layer of the distinguished set
    let mut levels = Vec::with_capacity(depth);
    for layer in &layers.layers {
        levels.push(index_of_roots(v, layer)?);
    }

    let support = monomial.support();
    let mut assigned: Vec<Vec<Vec<Root>>> = layers
        .strata
        .iter()
        .map(|s| vec![Vec::new(); s.len()])
        .collect();
    for beta in &support {
        let j = head_level(&levels, v, &support, *beta)?;
        let anchors = &layers.strata[j - 1];
        let mut hits = anchors
            .iter()
            .enumerate()
            .filter(|(_, a)| a.col <= beta.col && beta.row <= a.row);
        let (slot, _) = hits.next().ok_or_else(|| {
            Error::Falsified(format!(
                "no anchor at level {} accepts {} in {}",
                j, beta, monomial
            ))
        })?;
        if hits.next().is_some() {
            return Err(Error::Falsified(format!(
                "multiple anchors at level {} accept {}",
                j, beta
            )));
        }
        assigned[j - 1][slot].push(*beta);
    }

    let strata = layers
        .strata
        .iter()
        .zip(assigned)
        .map(|(anchors, slots)| {
            anchors
                .iter()
                .zip(slots)
                .map(|(anchor, elems)| Piece {
                    anchor: *anchor,
                    arranged: arrange_with_multiplicity(monomial, &elems),
                })
                .collect()
        })
        .collect();
    Ok(PieceDecomposition { strata })
}

/// The backward move: rebuilds from `(w, monomial)` the unique monomial that
/// contracts to it. Requires `w` strictly above the base point and the
/// monomial dominated by `w`.
pub fn expand_pieces(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    monomial: &RootMonomial,
) -> Result<RootMonomial> {
    if w == v {
        return Err(Error::InvalidInput(
            "expansion needs w strictly above the base point".into(),
        ));
    }
    let decomposition = piece_decompose(w, v, monomial)?;
    let mut out = RootMonomial::empty(v);
    for piece in decomposition.pieces() {
        for root in piece.widened() {
            out.insert(root, 1)?;
        }
    }
    Ok(out)
}

/// Iterated contraction: lifts a monomial over the positive roots to a
/// descending index sequence, preserving degree and commuting with
/// domination. The worklist replaces the natural recursion so large degrees
/// cannot exhaust the stack.
pub fn positive_to_standard(monomial: &RootMonomial) -> Result<StandardMonomial> {
    require_positive_monomial(monomial)?;
    let v = monomial.ambient().clone();
    let mut sequence = Vec::new();
    let mut current = monomial.clone();
    while !current.is_empty() {
        let (w, rest) = contract_blocks(&current)?;
        if let Some(prev) = sequence.last() {
            if !w.bruhat_leq(prev)? {
                return Err(Error::Falsified(format!(
                    "contraction produced a non-descending step {} after {}",
                    w, prev
                )));
            }
        }
        sequence.push(w);
        current = rest;
    }
    StandardMonomial::new(v.d(), v.n(), sequence)
}

/// Iterated expansion: inverse of [`positive_to_standard`] on sequences that
/// are compatible with and anti-dominated by the base point.
pub fn standard_to_positive(
    v: &GrassmannIndex,
    standard: &StandardMonomial,
) -> Result<RootMonomial> {
    if standard.d() != v.d() || standard.n() != v.n() {
        return Err(Error::DimensionMismatch {
            expected_d: v.d(),
            expected_n: v.n(),
            got_d: standard.d(),
            got_n: standard.n(),
        });
    }
    if !standard.is_compatible(v)? || !standard.is_anti_dominated_by(v)? {
        return Err(Error::InvalidInput(format!(
            "sequence {} is not anti-dominated by {}",
            standard, v
        )));
    }
    let mut current = RootMonomial::empty(v);
    for theta in standard.thetas().iter().rev() {
        current = expand_pieces(theta, v, &current)?;
    }
    Ok(current)
}

/// Carries the non-positive part of a monomial to a positive monomial over
/// the dual base point.
pub fn mirror_to_dual(monomial: &RootMonomial) -> Result<RootMonomial> {
    let v = monomial.ambient();
    let n = v.n();
    let dual = v.dual();
    let mut out = RootMonomial::empty(&dual);
    for (root, k) in monomial.iter() {
        if root.is_positive() {
            return Err(Error::InvalidInput(format!(
                "{} is positive; the mirror takes non-positive roots",
                root
            )));
        }
        out.insert(root.dual(n), k)?;
    }
    Ok(out)
}

/// Inverse of [`mirror_to_dual`]: positive roots over the dual base point
/// come back as non-positive roots over the original.
pub fn mirror_from_dual(v: &GrassmannIndex, monomial: &RootMonomial) -> Result<RootMonomial> {
    if monomial.ambient() != &v.dual() {
        return Err(Error::InvalidInput(
            "monomial is not based at the dual of v".into(),
        ));
    }
    let n = v.n();
    let mut out = RootMonomial::empty(v);
    for (root, k) in monomial.iter() {
        if !root.is_positive() {
            return Err(Error::InvalidInput(format!(
                "{} is non-positive; the inverse mirror takes positive roots",
                root
            )));
        }
        out.insert(root.dual(n), k)?;
    }
    Ok(out)
}

/// The full degree-preserving bijection, forward direction: a `w`-dominated
/// monomial over all roots maps to a compatible `w`-dominated standard
/// monomial of the same degree. The positive part is lifted directly, the
/// non-positive part through the dual base point, and the two halves are
/// concatenated at the split position.
pub fn monomial_to_standard(
    w: &GrassmannIndex,
    monomial: &RootMonomial,
) -> Result<StandardMonomial> {
    let v = monomial.ambient().clone();
    let positive = monomial.positive_part();
    if !dominates_monomial(w, &v, &positive)? {
        return Err(Error::InvalidInput(format!(
            "{} does not dominate {}",
            w, monomial
        )));
    }
    let upper = positive_to_standard(&positive)?;
    let mirrored = mirror_to_dual(&monomial.nonpositive_part())?;
    let lower = positive_to_standard(&mirrored)?.dual();
    upper.concat(&lower)
}

/// The full bijection, backward direction.
pub fn standard_to_monomial(
    v: &GrassmannIndex,
    standard: &StandardMonomial,
) -> Result<RootMonomial> {
    if !standard.is_compatible(v)? {
        return Err(Error::InvalidInput(format!(
            "sequence {} is not compatible with {}",
            standard, v
        )));
    }
    let (upper, lower) = standard.split(v)?;
    let positive = standard_to_positive(v, &upper)?;
    let mirrored = standard_to_positive(&v.dual(), &lower.dual())?;
    let nonpositive = mirror_from_dual(v, &mirrored)?;
    positive.union(&nonpositive)
}
