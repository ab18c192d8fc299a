//! Non-intersecting lattice paths attached to a dominating pair.
//!
//! The positive roots of `v` form a grid whose row axis is the ascending
//! list of non-entries and whose column axis is the ascending list of
//! entries. Each distinguished element of `w` spawns a start point (drop to
//! the least admissible row) and a finish point (slide to the greatest
//! admissible column); a path walks from start to finish one axis-successor
//! step at a time, staying inside the positive region. Tuples of pairwise
//! vertex-disjoint paths — one per distinguished element — are counted by
//! the multiplicity, and their unions are exactly the maximal square-free
//! dominated monomials.
//!
//! Steps move to the *successor element of the axis*, not literally `+1`:
//! when the entries or non-entries of `v` are not consecutive integers, the
//! literal reading would leave the grid. On instances where both axes are
//! locally consecutive the two readings coincide.

use std::fmt::Write as _;

use crate::budget::NodeBudget;
use crate::error::{Error, Result};
use crate::grassmann::GrassmannIndex;
use crate::roots::{distinguished_of, Root, RootMonomial};

/// Format tag embedded in every rendering this module produces.
pub const RENDER_FORMAT: &str = "schubert-grid/1";

/// The compressed grid of positive roots for a base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathGrid {
    v: GrassmannIndex,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl PathGrid {
    pub fn new(v: &GrassmannIndex) -> Self {
        PathGrid {
            v: v.clone(),
            rows: v.non_entries(),
            cols: v.entries().to_vec(),
        }
    }

    pub fn ambient(&self) -> &GrassmannIndex {
        &self.v
    }

    /// Row axis: the non-entries of the base point, ascending.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Column axis: the entries of the base point, ascending.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn row_rank(&self, r: usize) -> Option<usize> {
        self.rows.binary_search(&r).ok()
    }

    pub fn col_rank(&self, c: usize) -> Option<usize> {
        self.cols.binary_search(&c).ok()
    }

    pub fn is_positive_point(&self, root: &Root) -> bool {
        root.row > root.col
            && self.row_rank(root.row).is_some()
            && self.col_rank(root.col).is_some()
    }

    /// Rank distance between two grid points (sum of axis offsets).
    pub fn rank_distance(&self, a: &Root, b: &Root) -> Option<usize> {
        let ra = self.row_rank(a.row)?;
        let rb = self.row_rank(b.row)?;
        let ca = self.col_rank(a.col)?;
        let cb = self.col_rank(b.col)?;
        Some(rb.abs_diff(ra) + cb.abs_diff(ca))
    }
}

/// Start and finish points attached to a positive root `(R, C)`: the start
/// drops the row to the least non-entry above `C`, the finish slides the
/// column to the greatest entry below `R`.
pub fn endpoints(v: &GrassmannIndex, beta: &Root) -> Result<(Root, Root)> {
    beta.validate_for(v)?;
    if !beta.is_positive() {
        return Err(Error::InvalidInput(format!(
            "{} is not a positive root",
            beta
        )));
    }
    let grid = PathGrid::new(v);
    let start_row = grid
        .rows()
        .iter()
        .copied()
        .find(|r| *r > beta.col)
        .ok_or_else(|| {
            Error::Falsified(format!("no non-entry above column {}", beta.col))
        })?;
    let finish_col = grid
        .cols()
        .iter()
        .copied()
        .rev()
        .find(|c| *c < beta.row)
        .ok_or_else(|| Error::Falsified(format!("no entry below row {}", beta.row)))?;
    Ok((Root::new(start_row, beta.col), Root::new(beta.row, finish_col)))
}

/// A monotone walk through the positive grid along axis-successor steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePath {
    points: Vec<Root>,
}

impl LatticePath {
    pub fn points(&self) -> &[Root] {
        &self.points
    }

    pub fn start(&self) -> Root {
        self.points[0]
    }

    pub fn finish(&self) -> Root {
        *self.points.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One vertex-disjoint path per distinguished element of `w`, listed in
/// ascending row order of the elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathTuple {
    anchors: Vec<Root>,
    paths: Vec<LatticePath>,
}

impl PathTuple {
    /// The distinguished elements, ascending by row.
    pub fn anchors(&self) -> &[Root] {
        &self.anchors
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// All tuples of pairwise vertex-disjoint paths joining the endpoint pairs
/// of the distinguished elements of `w`. Canonically sorted output.
pub fn enumerate_tuples(w: &GrassmannIndex, v: &GrassmannIndex) -> Result<Vec<PathTuple>> {
    let mut budget = NodeBudget::from_env();
    enumerate_tuples_budgeted(w, v, &mut budget)
}

pub(crate) fn enumerate_tuples_budgeted(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    budget: &mut NodeBudget,
) -> Result<Vec<PathTuple>> {
    let dist = distinguished_of(w, v)?;
    let grid = PathGrid::new(v);
    let anchors: Vec<Root> = dist.roots().to_vec(); // already row-ascending
    let mut segments = Vec::with_capacity(anchors.len());
    for beta in &anchors {
        segments.push(endpoints(v, beta)?);
    }
    let mut used: Vec<Root> = Vec::new();
    let mut current: Vec<LatticePath> = Vec::new();
    let mut out = Vec::new();
    walk_tuples(
        &grid, &anchors, &segments, 0, &mut used, &mut current, &mut out, budget,
    )?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk_tuples(
    grid: &PathGrid,
    anchors: &[Root],
    segments: &[(Root, Root)],
    idx: usize,
    used: &mut Vec<Root>,
    current: &mut Vec<LatticePath>,
    out: &mut Vec<PathTuple>,
    budget: &mut NodeBudget,
) -> Result<()> {
    budget.charge(1)?;
    if idx == anchors.len() {
        out.push(PathTuple {
            anchors: anchors.to_vec(),
            paths: current.clone(),
        });
        return Ok(());
    }
    let (start, finish) = segments[idx];
    let mut partial = Vec::new();
    walk_single_path(
        grid, anchors, segments, idx, start, finish, &mut partial, used, current, out, budget,
    )
}

/// Extends one path point by point; on completion recurses into the next
/// anchor. Row step is explored before column step, so the raw order is
/// deterministic even before the final sort.
#[allow(clippy::too_many_arguments)]
fn walk_single_path(
    grid: &PathGrid,
    anchors: &[Root],
    segments: &[(Root, Root)],
    idx: usize,
    at: Root,
    finish: Root,
    partial: &mut Vec<Root>,
    used: &mut Vec<Root>,
    current: &mut Vec<LatticePath>,
    out: &mut Vec<PathTuple>,
    budget: &mut NodeBudget,
) -> Result<()> {
    budget.charge(1)?;
    if !grid.is_positive_point(&at) || used.contains(&at) {
        return Ok(());
    }
    partial.push(at);
    used.push(at);
    if at == finish {
        current.push(LatticePath {
            points: partial.clone(),
        });
        walk_tuples(grid, anchors, segments, idx + 1, used, current, out, budget)?;
        current.pop();
    } else {
        let row_rank = grid.row_rank(at.row).unwrap();
        let col_rank = grid.col_rank(at.col).unwrap();
        let finish_row_rank = grid.row_rank(finish.row).unwrap();
        let finish_col_rank = grid.col_rank(finish.col).unwrap();
        if row_rank < finish_row_rank {
            let next = Root::new(grid.rows()[row_rank + 1], at.col);
            walk_single_path(
                grid, anchors, segments, idx, next, finish, partial, used, current, out, budget,
            )?;
        }
        if col_rank < finish_col_rank {
            let next = Root::new(at.row, grid.cols()[col_rank + 1]);
            walk_single_path(
                grid, anchors, segments, idx, next, finish, partial, used, current, out, budget,
            )?;
        }
    }
    used.pop();
    partial.pop();
    Ok(())
}

/// The union of a tuple's paths as a square-free monomial.
pub fn tuple_to_monomial(v: &GrassmannIndex, tuple: &PathTuple) -> Result<RootMonomial> {
    let mut out = RootMonomial::empty(v);
    for path in tuple.paths() {
        for point in path.points() {
            if out.multiplicity(point) > 0 {
                return Err(Error::InvalidInput(format!(
                    "paths intersect at {}",
                    point
                )));
            }
            out.insert(*point, 1)?;
        }
    }
    Ok(out)
}

/// Reads a maximal square-free dominated monomial back as a path tuple: its
/// block decomposition must consist of one boundary-to-boundary path per
/// distinguished element of `w`.
pub fn monomial_to_tuple(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    monomial: &RootMonomial,
) -> Result<PathTuple> {
    if monomial.ambient() != v {
        return Err(Error::InvalidInput(
            "monomial is not based at the given v".into(),
        ));
    }
    if !monomial.is_square_free() {
        return Err(Error::InvalidInput("monomial is not square-free".into()));
    }
    let dist = distinguished_of(w, v)?;
    let anchors: Vec<Root> = dist.roots().to_vec();
    let grid = PathGrid::new(v);

    if monomial.is_empty() {
        if anchors.is_empty() {
            return Ok(PathTuple {
                anchors,
                paths: Vec::new(),
            });
        }
        return Err(Error::InvalidInput(
            "empty monomial but w has distinguished elements".into(),
        ));
    }

    let decomposition = crate::bijection::block_decompose(monomial)?;
    let mut paths: Vec<(Root, LatticePath)> = Vec::new();
    for block in decomposition.blocks() {
        let summary = block.summary;
        let (start, finish) = endpoints(v, &summary)?;
        let pts = &block.arranged;
        if pts[0] != start || *pts.last().unwrap() != finish {
            return Err(Error::InvalidInput(format!(
                "block at {} does not span the boundary (not maximal)",
                summary
            )));
        }
        for pair in pts.windows(2) {
            if grid.rank_distance(&pair[0], &pair[1]) != Some(1) {
                return Err(Error::InvalidInput(format!(
                    "block jumps from {} to {} (not maximal)",
                    pair[0], pair[1]
                )));
            }
        }
        paths.push((
            summary,
            LatticePath {
                points: pts.clone(),
            },
        ));
    }
    let mut summaries: Vec<Root> = paths.iter().map(|(s, _)| *s).collect();
    summaries.sort_by_key(|r| r.row);
    if summaries != anchors {
        return Err(Error::InvalidInput(
            "block summaries do not match the distinguished set (not maximal)".into(),
        ));
    }
    paths.sort_by_key(|(s, _)| s.row);
    Ok(PathTuple {
        anchors,
        paths: paths.into_iter().map(|(_, p)| p).collect(),
    })
}

fn collect_markers(tuple: Option<&PathTuple>) -> (Vec<Root>, Vec<Vec<Root>>) {
    match tuple {
        None => (Vec::new(), Vec::new()),
        Some(t) => (
            t.anchors().to_vec(),
            t.paths().iter().map(|p| p.points().to_vec()).collect(),
        ),
    }
}

/// Plain-text picture of the positive grid with the distinguished elements
/// of `w` and (optionally) one path tuple marked. Legend: `.` grid point,
/// `o` path vertex, `#` distinguished element, `@` both.
pub fn render_ascii(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    tuple: Option<&PathTuple>,
) -> Result<String> {
    let dist = distinguished_of(w, v)?;
    let grid = PathGrid::new(v);
    let (_, path_points) = collect_markers(tuple);
    let on_path = |r: &Root| path_points.iter().any(|p| p.contains(r));
    let anchors = dist.roots();

    let width = v.n().to_string().len().max(1) + 1;
    let mut out = String::new();
    writeln!(out, "# {}", RENDER_FORMAT).unwrap();
    writeln!(out, "# v = {}  w = {}", v, w).unwrap();
    // column header
    write!(out, "{:>width$} ", "", width = width).unwrap();
    for c in grid.cols() {
        write!(out, "{:>width$}", c, width = width).unwrap();
    }
    out.push('\n');
    for r in grid.rows() {
        write!(out, "{:>width$} ", r, width = width).unwrap();
        for c in grid.cols() {
            let point = Root::new(*r, *c);
            let glyph = if point.row <= point.col {
                ' '
            } else {
                let anchored = anchors.contains(&point);
                let pathed = on_path(&point);
                match (anchored, pathed) {
                    (true, true) => '@',
                    (true, false) => '#',
                    (false, true) => 'o',
                    (false, false) => '.',
                }
            };
            write!(out, "{:>width$}", glyph, width = width).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

const PATH_COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// SVG 1.1 picture of the positive grid; byte-deterministic for fixed input.
pub fn render_svg(
    w: &GrassmannIndex,
    v: &GrassmannIndex,
    tuple: Option<&PathTuple>,
) -> Result<String> {
    let dist = distinguished_of(w, v)?;
    let grid = PathGrid::new(v);
    let (_, path_points) = collect_markers(tuple);
    let anchors = dist.roots();

    let cell = 36;
    let margin = 48;
    let width = margin * 2 + cell * grid.cols().len().max(1);
    let height = margin * 2 + cell * grid.rows().len().max(1);
    let x = |ci: usize| margin + cell / 2 + cell * ci;
    let y = |ri: usize| margin + cell / 2 + cell * ri;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        width, height, width, height
    )
    .unwrap();
    writeln!(out, "<!-- {} -->", RENDER_FORMAT).unwrap();
    writeln!(out, "<!-- v = {} w = {} -->", v, w).unwrap();
    writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>",
        width, height
    )
    .unwrap();

    // axis labels
    for (ci, c) in grid.cols().iter().enumerate() {
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" fill=\"black\">{}</text>",
            x(ci),
            margin - 16,
            c
        )
        .unwrap();
    }
    for (ri, r) in grid.rows().iter().enumerate() {
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\" fill=\"black\">{}</text>",
            margin - 16,
            y(ri) + 4,
            r
        )
        .unwrap();
    }

    // grid points (positive region only)
    for (ri, r) in grid.rows().iter().enumerate() {
        for (ci, c) in grid.cols().iter().enumerate() {
            if r > c {
                writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"#bbbbbb\"/>",
                    x(ci),
                    y(ri)
                )
                .unwrap();
            }
        }
    }

    // paths as polylines
    for (pi, points) in path_points.iter().enumerate() {
        let color = PATH_COLORS[pi % PATH_COLORS.len()];
        let coords: Vec<String> = points
            .iter()
            .map(|p| {
                let ri = grid.row_rank(p.row).unwrap();
                let ci = grid.col_rank(p.col).unwrap();
                format!("{},{}", x(ci), y(ri))
            })
            .collect();
        writeln!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
            coords.join(" "),
            color
        )
        .unwrap();
        for p in points {
            let ri = grid.row_rank(p.row).unwrap();
            let ci = grid.col_rank(p.col).unwrap();
            writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>",
                x(ci),
                y(ri),
                color
            )
            .unwrap();
        }
    }

    // distinguished elements on top
    for a in anchors {
        let ri = grid.row_rank(a.row).unwrap();
        let ci = grid.col_rank(a.col).unwrap();
        writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>",
            x(ci),
            y(ri)
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: usize, entries: &[usize]) -> GrassmannIndex {
        GrassmannIndex::new(n, entries.to_vec()).unwrap()
    }

    #[test]
    fn endpoint_examples() {
        // 14-entry worked instance
        let v = gi(27, &[1, 2, 3, 4, 5, 10, 11, 12, 13, 18, 19, 20, 21, 22]);
        let (start, finish) = endpoints(&v, &Root::new(16, 11)).unwrap();
        assert_eq!(start, Root::new(14, 11));
        assert_eq!(finish, Root::new(16, 13));

        let v = gi(4, &[1, 2]);
        let (start, finish) = endpoints(&v, &Root::new(4, 1)).unwrap();
        assert_eq!(start, Root::new(3, 1));
        assert_eq!(finish, Root::new(4, 2));

        let v = gi(13, &[1, 2, 3, 8, 9, 10]);
        let (start, finish) = endpoints(&v, &Root::new(11, 9)).unwrap();
        assert_eq!(start, Root::new(11, 9));
        assert_eq!(finish, Root::new(11, 10));
    }

    #[test]
    fn tuples_of_six_entry_instance() {
        let v = gi(13, &[1, 2, 3, 8, 9, 10]);
        let w = gi(13, &[4, 6, 7, 10, 11, 13]);
        let tuples = enumerate_tuples(&w, &v).unwrap();
        assert_eq!(tuples.len(), 9);
        for t in &tuples {
            let m = tuple_to_monomial(&v, t).unwrap();
            assert!(m.is_square_free());
            let back = monomial_to_tuple(&w, &v, &m).unwrap();
            assert_eq!(&back, t);
        }
        // all unions share one cardinality
        let sizes: Vec<usize> = tuples
            .iter()
            .map(|t| tuple_to_monomial(&v, t).unwrap().degree())
            .collect();
        assert!(sizes.windows(2).all(|s| s[0] == s[1]));
    }

    #[test]
    fn tuples_of_two_entry_instance() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let tuples = enumerate_tuples(&w, &v).unwrap();
        assert_eq!(tuples.len(), 2);
        let unions: Vec<Vec<Root>> = tuples
            .iter()
            .map(|t| tuple_to_monomial(&v, t).unwrap().support())
            .collect();
        assert!(unions.contains(&vec![
            Root::new(3, 1),
            Root::new(3, 2),
            Root::new(4, 2)
        ]));
        assert!(unions.contains(&vec![
            Root::new(3, 1),
            Root::new(4, 1),
            Root::new(4, 2)
        ]));
    }

    #[test]
    fn empty_tuple_for_smooth_point() {
        let v = gi(4, &[1, 2]);
        let tuples = enumerate_tuples(&v, &v).unwrap();
        assert_eq!(tuples.len(), 1);
        assert!(tuples[0].is_empty());
        let m = tuple_to_monomial(&v, &tuples[0]).unwrap();
        assert!(m.is_empty());
        assert_eq!(monomial_to_tuple(&v, &v, &m).unwrap(), tuples[0]);
    }

    #[test]
    fn non_maximal_monomials_are_rejected() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        // dominated and square-free but not maximal
        let m = RootMonomial::from_roots(&v, [Root::new(3, 1)]).unwrap();
        assert!(monomial_to_tuple(&w, &v, &m).is_err());
        // not square-free
        let m = RootMonomial::from_pairs(&v, [(Root::new(3, 1), 2)]).unwrap();
        assert!(monomial_to_tuple(&w, &v, &m).is_err());
    }

    #[test]
    fn path_lengths_follow_rank_distance() {
        let v = gi(13, &[1, 2, 3, 8, 9, 10]);
        let w = gi(13, &[4, 6, 7, 10, 11, 13]);
        let grid = PathGrid::new(&v);
        for t in enumerate_tuples(&w, &v).unwrap() {
            for (beta, path) in t.anchors().iter().zip(t.paths()) {
                let (start, finish) = endpoints(&v, beta).unwrap();
                assert_eq!(path.start(), start);
                assert_eq!(path.finish(), finish);
                assert_eq!(
                    path.len(),
                    grid.rank_distance(&start, &finish).unwrap() + 1
                );
            }
        }
    }

    #[test]
    fn renders_are_deterministic_and_versioned() {
        let v = gi(4, &[1, 2]);
        let w = gi(4, &[2, 4]);
        let tuples = enumerate_tuples(&w, &v).unwrap();
        let a1 = render_ascii(&w, &v, Some(&tuples[0])).unwrap();
        let a2 = render_ascii(&w, &v, Some(&tuples[0])).unwrap();
        assert_eq!(a1, a2);
        assert!(a1.contains(RENDER_FORMAT));
        let s1 = render_svg(&w, &v, Some(&tuples[0])).unwrap();
        let s2 = render_svg(&w, &v, Some(&tuples[0])).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.contains(RENDER_FORMAT));
        assert!(s1.starts_with("<svg"));
        // grid with no paths renders too
        assert!(render_ascii(&w, &v, None).unwrap().contains('#'));
    }
}
