//! Sub-triangular Young tableaux: construction from transfer sequences,
//! validity, transposition duality, skew subquotients, tilting complements,
//! map and extension enumeration, and text rendering.
//!
//! Coordinates: rows grow downward, columns rightward; the staircase
//! `YT_k` places its label-`k` cell at (row 1, col 1). Row labels decrease
//! by exactly one rightward and column labels by exactly one downward, so
//! `label + row + col` is constant on any valid diagram.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub type Pos = (i64, i64);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StytError {
    #[error("transfer sequence must be strictly decreasing and positive: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("inner tableau does not embed into the leftmost columns: {0}")]
    NotContained(String),
    #[error("entry {entry} exceeds the tilting size {k}")]
    EntryTooLarge { entry: usize, k: usize },
    #[error("empty diagram")]
    Empty,
    #[error("diagram is not of projective-quotient shape: {0}")]
    NotProjQuotShape(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// First violated STYT condition, for `validate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// A label is not a positive integer (zero).
    LabelPositive,
    /// Horizontally adjacent labels do not step down by one.
    RowStep,
    /// Vertically adjacent labels do not step down by one.
    ColStep,
    /// `label + row + col` is not constant.
    LabelAlignment,
    /// No unique top-left cell carrying the maximal label (condition (a)).
    Corner,
    /// The diagram is not edge-connected (condition (b)).
    Connected,
    /// A row or column meets the diagram in a non-consecutive run (condition (c)).
    RowRun,
    ColRun,
    /// A missing staircase cell has both its upper and left neighbors
    /// present (condition (d)).
    InnerCorner,
}

/// A (possibly skew) sub-triangular Young tableau: present cells plus the
/// removed-cell mask left behind by a skew quotient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Styt {
    cells: BTreeMap<Pos, usize>,
    mask: BTreeMap<Pos, usize>,
}

impl Styt {
    pub fn empty() -> Self {
        Styt { cells: BTreeMap::new(), mask: BTreeMap::new() }
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (i64, i64, usize)>) -> Self {
        Styt {
            cells: cells.into_iter().map(|(r, c, l)| ((r, c), l)).collect(),
            mask: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> impl Iterator<Item = (Pos, usize)> + '_ {
        self.cells.iter().map(|(&p, &l)| (p, l))
    }

    pub fn mask(&self) -> impl Iterator<Item = (Pos, usize)> + '_ {
        self.mask.iter().map(|(&p, &l)| (p, l))
    }

    pub fn label(&self, p: Pos) -> Option<usize> {
        self.cells.get(&p).copied()
    }

    pub fn contains(&self, p: Pos) -> bool {
        self.cells.contains_key(&p)
    }

    /// Number of present cells carrying each label.
    pub fn label_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for (_, l) in self.cells() {
            *out.entry(l).or_insert(0) += 1;
        }
        out
    }

    pub fn validate(&self) -> Result<(), Violation> {
        validate_cells(&self.cells)
    }

    /// Reflection across the main diagonal, labels preserved.
    pub fn transpose(&self) -> Styt {
        Styt {
            cells: self.cells.iter().map(|(&(r, c), &l)| ((c, r), l)).collect(),
            mask: self.mask.iter().map(|(&(r, c), &l)| ((c, r), l)).collect(),
        }
    }
}

/// Validity of a raw cell set as an STYT (the mask is ignored).
pub fn validate_cells(cells: &BTreeMap<Pos, usize>) -> Result<(), Violation> {
    if cells.is_empty() {
        return Ok(());
    }
    for &l in cells.values() {
        if l == 0 {
            return Err(Violation::LabelPositive);
        }
    }
    for (&(r, c), &l) in cells {
        if let Some(&right) = cells.get(&(r, c + 1)) {
            if right + 1 != l {
                return Err(Violation::RowStep);
            }
        }
        if let Some(&below) = cells.get(&(r + 1, c)) {
            if below + 1 != l {
                return Err(Violation::ColStep);
            }
        }
    }
    let d = {
        let (&(r, c), &l) = cells.iter().next().unwrap();
        l as i64 + r + c
    };
    if cells.iter().any(|(&(r, c), &l)| l as i64 + r + c != d) {
        return Err(Violation::LabelAlignment);
    }
    // (a): the unique maximal-label cell sits weakly above-left of all cells.
    let min_r = cells.keys().map(|p| p.0).min().unwrap();
    let min_c = cells.keys().map(|p| p.1).min().unwrap();
    if !cells.contains_key(&(min_r, min_c)) {
        return Err(Violation::Corner);
    }
    // (b): edge-connectivity.
    if !is_connected(cells) {
        return Err(Violation::Connected);
    }
    // (c): rows and columns meet the diagram in consecutive runs.
    let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    let mut cols: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(r, c) in cells.keys() {
        rows.entry(r).or_default().push(c);
        cols.entry(c).or_default().push(r);
    }
    for cs in rows.values() {
        if cs.iter().max().unwrap() - cs.iter().min().unwrap() + 1 != cs.len() as i64 {
            return Err(Violation::RowRun);
        }
    }
    for rs in cols.values() {
        if rs.iter().max().unwrap() - rs.iter().min().unwrap() + 1 != rs.len() as i64 {
            return Err(Violation::ColRun);
        }
    }
    // (d): a missing staircase position may not have both its upper and left
    // neighbors present. Positions below the label-1 boundary are outside
    // the staircase and exempt.
    for &(r, c) in cells.keys() {
        let p = (r + 1, c + 1);
        if cells.contains_key(&p) {
            continue;
        }
        let label = d - p.0 - p.1;
        if label < 1 {
            continue;
        }
        if cells.contains_key(&(p.0 - 1, p.1)) && cells.contains_key(&(p.0, p.1 - 1)) {
            return Err(Violation::InnerCorner);
        }
    }
    Ok(())
}

fn is_connected(cells: &BTreeMap<Pos, usize>) -> bool {
    let mut seen = BTreeSet::new();
    let mut stack = vec![*cells.keys().next().unwrap()];
    while let Some(p) = stack.pop() {
        if !seen.insert(p) {
            continue;
        }
        for q in [(p.0 - 1, p.1), (p.0 + 1, p.1), (p.0, p.1 - 1), (p.0, p.1 + 1)] {
            if cells.contains_key(&q) && !seen.contains(&q) {
                stack.push(q);
            }
        }
    }
    seen.len() == cells.len()
}

/// The tableau of a transfer sequence: column `c` is the consecutive run
/// `psi[c], psi[c]-1, ..., 1`, with columns placed so that the row and
/// column decrease-by-one rules hold.
pub fn yt_of_psi(psi: &[usize]) -> Result<Styt, StytError> {
    if psi.contains(&0) || psi.windows(2).any(|w| w[0] <= w[1]) {
        return Err(StytError::NotDecreasing(psi.to_vec()));
    }
    if psi.is_empty() {
        return Ok(Styt::empty());
    }
    let m1 = psi[0] as i64;
    let mut cells = BTreeMap::new();
    for (i, &mc) in psi.iter().enumerate() {
        let c = i as i64 + 1;
        let top = m1 + 2 - c - mc as i64;
        for (o, label) in (1..=mc).rev().enumerate() {
            cells.insert((top + o as i64, c), label);
        }
    }
    Ok(Styt { cells, mask: BTreeMap::new() })
}

/// Inverse of `yt_of_psi`: the column-top labels, left to right.
pub fn psi_of_yt(x: &Styt) -> Vec<usize> {
    let mut tops: BTreeMap<i64, (i64, usize)> = BTreeMap::new();
    for ((r, c), l) in x.cells() {
        tops.entry(c)
            .and_modify(|e| {
                if r < e.0 {
                    *e = (r, l);
                }
            })
            .or_insert((r, l));
    }
    tops.values().map(|&(_, l)| l).collect()
}

/// The staircase `YT_k`.
pub fn yt_staircase(k: usize) -> Styt {
    yt_of_psi(&(1..=k).rev().collect::<Vec<_>>()).unwrap()
}

/// Column diagram of the highest weight module `M_r/M_s` (labels `r..s+1`).
pub fn verma_diagram(r: usize, s: usize) -> Styt {
    assert!(s < r);
    Styt::from_cells((1..=(r - s) as i64).map(|i| (i, 1, r + 1 - i as usize)))
}

/// Top-aligned staircase of `P_j/P_k` (transfer sequence `k-1, ..., j`).
pub fn proj_quot_diagram(j: usize, k: usize) -> Styt {
    assert!(j < k);
    yt_of_psi(&(j..k).rev().collect::<Vec<_>>()).unwrap()
}

/// Skew difference `YT(N) \ YT(N')`: the inner tableau must embed into the
/// leftmost columns with matching labels; removed cells stay as a mask.
pub fn skew(outer: &[usize], inner: &[usize]) -> Result<Styt, StytError> {
    let n = yt_of_psi(outer)?;
    yt_of_psi(inner)?;
    if inner.len() > outer.len() {
        return Err(StytError::NotContained(format!("{inner:?} has more columns than {outer:?}")));
    }
    if outer.is_empty() {
        return Ok(Styt::empty());
    }
    for (c, (&mi, &mo)) in inner.iter().zip(outer.iter()).enumerate() {
        if mi > mo {
            return Err(StytError::NotContained(format!(
                "column {}: inner top {mi} exceeds outer top {mo}",
                c + 1
            )));
        }
    }
    let m1 = outer[0] as i64;
    let mut cells = n.cells.clone();
    let mut mask = BTreeMap::new();
    for (i, &mi) in inner.iter().enumerate() {
        let c = i as i64 + 1;
        for label in 1..=mi {
            let r = m1 + 2 - c - label as i64;
            let removed = cells.remove(&(r, c));
            debug_assert_eq!(removed, Some(label), "label-matched embedding");
            mask.insert((r, c), label);
        }
    }
    Ok(Styt { cells, mask })
}

/// `Psi(F(T_k/N))`: the complement `{1..k} \ psi`, descending.
pub fn complement_tilting(k: usize, psi: &[usize]) -> Result<Vec<usize>, StytError> {
    if psi.contains(&0) || psi.windows(2).any(|w| w[0] <= w[1]) {
        return Err(StytError::NotDecreasing(psi.to_vec()));
    }
    if let Some(&entry) = psi.iter().find(|&&m| m > k) {
        return Err(StytError::EntryTooLarge { entry, k });
    }
    Ok((1..=k).rev().filter(|m| !psi.contains(m)).collect())
}

/// All cells reachable from `seeds` by left/down moves, inside `x`.
pub fn generated(x: &Styt, seeds: &[Pos]) -> BTreeSet<Pos> {
    x.cells
        .keys()
        .filter(|&&(r, c)| seeds.iter().any(|&(sr, sc)| r >= sr && c <= sc))
        .copied()
        .collect()
}

/// The unique minimal generating set: cells not reachable from any other.
pub fn g_min(x: &Styt) -> Result<Vec<Pos>, StytError> {
    if x.is_empty() {
        return Err(StytError::Empty);
    }
    Ok(x.cells
        .keys()
        .filter(|&&(r, c)| {
            !x.cells
                .keys()
                .any(|&(or, oc)| (or, oc) != (r, c) && r >= or && c <= oc)
        })
        .copied()
        .collect())
}

/// A basis map between diagrams: an integer translation of the source.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StytMap {
    pub drow: i64,
    pub dcol: i64,
    pub injective: bool,
    pub surjective: bool,
}

/// All translations satisfying the label-equivariance and generated-image
/// conditions; the Hom dimension is the count.
pub fn enumerate_maps(x1: &Styt, x2: &Styt) -> Vec<StytMap> {
    let mut out = vec![];
    if x1.is_empty() || x2.is_empty() {
        return out;
    }
    let gmin = g_min(x1).unwrap();
    let (r1min, r1max, c1min, c1max) = bounds(x1);
    let (r2min, r2max, c2min, c2max) = bounds(x2);
    for drow in (r2min - r1max)..=(r2max - r1min) {
        for dcol in (c2min - c1max)..=(c2max - c1min) {
            // (a) every overlapping cell must agree in label.
            let mut overlap = false;
            let mut labels_ok = true;
            for ((r, c), l) in x1.cells() {
                if let Some(l2) = x2.label((r + drow, c + dcol)) {
                    overlap = true;
                    if l2 != l {
                        labels_ok = false;
                        break;
                    }
                }
            }
            if !labels_ok || !overlap {
                continue;
            }
            // (b) the sub-diagram of the target generated by the image of
            // the generators equals the intersection with the translate.
            let landed: Vec<Pos> = gmin
                .iter()
                .map(|&(r, c)| (r + drow, c + dcol))
                .filter(|&p| x2.contains(p))
                .collect();
            let lhs = generated(x2, &landed);
            let rhs: BTreeSet<Pos> = x1
                .cells
                .keys()
                .map(|&(r, c)| (r + drow, c + dcol))
                .filter(|&p| x2.contains(p))
                .collect();
            if lhs != rhs || rhs.is_empty() {
                continue;
            }
            let injective = x1
                .cells
                .keys()
                .all(|&(r, c)| x2.contains((r + drow, c + dcol)));
            let surjective = x2.cells.keys().all(|&(r, c)| x1.contains((r - drow, c - dcol)));
            out.push(StytMap { drow, dcol, injective, surjective });
        }
    }
    out
}

fn bounds(x: &Styt) -> (i64, i64, i64, i64) {
    let rs: Vec<i64> = x.cells.keys().map(|p| p.0).collect();
    let cs: Vec<i64> = x.cells.keys().map(|p| p.1).collect();
    (
        *rs.iter().min().unwrap(),
        *rs.iter().max().unwrap(),
        *cs.iter().min().unwrap(),
        *cs.iter().max().unwrap(),
    )
}

/// A placement of `X_1` above or to the right of `X_2` whose disjoint union
/// is again a valid diagram; realizes one basis extension of `X_2` by `X_1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StytExtension {
    pub drow: i64,
    pub dcol: i64,
}

/// All valid extension juxtapositions; the Ext^1 dimension is the count.
pub fn enumerate_extensions(x1: &Styt, x2: &Styt) -> Vec<StytExtension> {
    let mut out = vec![];
    if x1.is_empty() || x2.is_empty() {
        return out;
    }
    let d1 = diag_constant(x1);
    let d2 = diag_constant(x2);
    let (r1min, r1max, c1min, c1max) = bounds(x1);
    let (r2min, r2max, c2min, c2max) = bounds(x2);
    for drow in (r2min - r1max - 1)..=(r2max - r1min + 1) {
        let dcol = d2 - d1 - drow;
        if dcol < c2min - c1max - 1 || dcol > c2max - c1min + 1 {
            continue;
        }
        let moved: BTreeMap<Pos, usize> = x1
            .cells
            .iter()
            .map(|(&(r, c), &l)| ((r + drow, c + dcol), l))
            .collect();
        if moved.keys().any(|p| x2.contains(*p)) {
            continue;
        }
        // Orientation: X1 strictly right of, or strictly above, X2.
        let right = c1min + dcol > c2max;
        let above = r1max + drow < r2min;
        if !right && !above {
            continue;
        }
        let mut union = x2.cells.clone();
        union.extend(moved.iter().map(|(&p, &l)| (p, l)));
        if !union_runs_ok(&union) || !is_connected(&union) {
            continue;
        }
        let glue_ok = if right {
            junction_admits_gluing(&column_tops(&x1.cells), &column_tops(&x2.cells))
        } else {
            // Gluing from above is the transpose of gluing from the right.
            junction_admits_gluing(&row_lefts(&x2.cells), &row_lefts(&x1.cells))
        };
        if !glue_ok {
            continue;
        }
        out.push(StytExtension { drow, dcol });
    }
    out
}

/// Whether the boundary profiles admit a nonsplit gluing with the first
/// diagram hanging off the second's right edge: a strict label descent at
/// the junction always glues; an ascent by `e >= 0` needs both profiles to
/// run at least `e + 2` steps, so the overhang is re-absorbed before either
/// diagram ends.
fn junction_admits_gluing(hanging_tops: &[usize], base_tops: &[usize]) -> bool {
    let first = hanging_tops[0] as i64;
    let last = *base_tops.last().unwrap() as i64;
    let e = first - last;
    e < 0 || (hanging_tops.len() as i64 >= e + 2 && base_tops.len() as i64 >= e + 2)
}

fn diag_constant(x: &Styt) -> i64 {
    let (&(r, c), &l) = x.cells.iter().next().expect("nonempty");
    l as i64 + r + c
}

fn union_runs_ok(cells: &BTreeMap<Pos, usize>) -> bool {
    let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    let mut cols: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(r, c) in cells.keys() {
        rows.entry(r).or_default().push(c);
        cols.entry(c).or_default().push(r);
    }
    rows.values()
        .chain(cols.values())
        .all(|v| v.iter().max().unwrap() - v.iter().min().unwrap() + 1 == v.len() as i64)
}

/// Top label of each column, by ascending column index.
fn column_tops(cells: &BTreeMap<Pos, usize>) -> Vec<usize> {
    let mut tops: BTreeMap<i64, (i64, usize)> = BTreeMap::new();
    for (&(r, c), &l) in cells {
        tops.entry(c)
            .and_modify(|e| {
                if r < e.0 {
                    *e = (r, l);
                }
            })
            .or_insert((r, l));
    }
    tops.values().map(|&(_, l)| l).collect()
}

/// Leftmost label of each row, by ascending row index.
fn row_lefts(cells: &BTreeMap<Pos, usize>) -> Vec<usize> {
    let mut lefts: BTreeMap<i64, (i64, usize)> = BTreeMap::new();
    for (&(r, c), &l) in cells {
        lefts
            .entry(r)
            .and_modify(|e| {
                if c < e.0 {
                    *e = (c, l);
                }
            })
            .or_insert((c, l));
    }
    lefts.values().map(|&(_, l)| l).collect()
}

/// Manhattan distance between the image of the source's generating cell and
/// the target's generating cell; equals the graded degree of the
/// corresponding basis morphism.
pub fn manhattan_degree(map: &StytMap, x1: &Styt, x2: &Styt) -> Result<usize, StytError> {
    let g1 = single_generator(x1)?;
    let g2 = single_generator(x2)?;
    let img = (g1.0 + map.drow, g1.1 + map.dcol);
    Ok(((img.0 - g2.0).abs() + (img.1 - g2.1).abs()) as usize)
}

fn single_generator(x: &Styt) -> Result<Pos, StytError> {
    let g = g_min(x)?;
    if g.len() != 1 {
        return Err(StytError::NotProjQuotShape(format!("{} generating cells", g.len())));
    }
    Ok(g[0])
}

/// Renders rows of labels, with ':' for removed or absent positions left of
/// a present cell. Labels above 9 switch to space-separated tokens.
pub fn render(x: &Styt) -> String {
    if x.is_empty() {
        return String::new();
    }
    let all: Vec<(Pos, usize)> = x.cells().chain(x.mask()).collect();
    let min_c = all.iter().map(|(p, _)| p.1).min().unwrap();
    let wide = all.iter().any(|&(_, l)| l > 9);
    let rows: BTreeSet<i64> = x.cells.keys().map(|p| p.0).collect();
    let mut lines = vec![];
    for &r in &rows {
        let max_c = x
            .cells
            .keys()
            .filter(|p| p.0 == r)
            .map(|p| p.1)
            .max()
            .unwrap();
        let mut tokens = vec![];
        for c in min_c..=max_c {
            match x.label((r, c)) {
                Some(l) => tokens.push(l.to_string()),
                None => tokens.push(":".to_string()),
            }
        }
        lines.push(if wide { tokens.join(" ") } else { tokens.concat() });
    }
    lines.join("\n")
}

/// Parses the `render` format back into a diagram; placeholder labels are
/// reconstructed from the alignment rule. Lines are read character-wise
/// unless the text contains a space or a character-wise reading produces a
/// zero digit (the mark of a split multi-digit label).
pub fn parse(text: &str) -> Result<Styt, StytError> {
    let char_mode = !text.contains(' ')
        && !text
            .lines()
            .any(|l| l.len() > 1 && l.chars().any(|ch| ch == '0'));
    let mut cells = BTreeMap::new();
    let mut holes = vec![];
    for (i, line) in text.lines().enumerate() {
        let r = i as i64 + 1;
        let tokens: Vec<String> = if char_mode {
            line.chars().map(|ch| ch.to_string()).collect()
        } else {
            line.split_whitespace().map(str::to_string).collect()
        };
        for (j, tok) in tokens.iter().enumerate() {
            let c = j as i64 + 1;
            if tok == ":" {
                holes.push((r, c));
            } else {
                let l: usize = tok
                    .parse()
                    .map_err(|_| StytError::Parse(format!("bad token '{tok}'")))?;
                cells.insert((r, c), l);
            }
        }
    }
    if cells.is_empty() {
        if holes.is_empty() {
            return Ok(Styt::empty());
        }
        return Err(StytError::Parse("only placeholders".into()));
    }
    let d = {
        let (&(r, c), &l) = cells.iter().next().unwrap();
        l as i64 + r + c
    };
    let mut mask = BTreeMap::new();
    for (r, c) in holes {
        let l = d - r - c;
        if l < 1 {
            return Err(StytError::Parse(format!("placeholder at ({r},{c}) below the boundary")));
        }
        mask.insert((r, c), l as usize);
    }
    Ok(Styt { cells, mask })
}
