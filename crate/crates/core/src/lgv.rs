//! Directed lattices built from a cutting strip and the map from tableaux to
//! tuples of lattice paths, one path per strip of an outside decomposition.
//!
//! Points are `(level, content)` with levels `0..=n+1`. An entry `k` in a box
//! of content `c` becomes a non-vertical edge ending at `(k, c)`; vertical
//! edges join the pieces and carry weight 1.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Cell, ShapeRef, ShiftedSkewShape, SkewShape};
use crate::strips::{decompose, CuttingStrip, OutsideDecomposition, Step};
use crate::tableaux::{enumerate_primed, enumerate_ssyt, PrimedEntry, PrimedTableau, Tableau};
use crate::weights::{Monomial, Poly, Site, Var, VarKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeStyle {
    HorizontalInto,
    DiagonalInto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Vertical {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point {
    pub level: i32,
    pub content: i32,
}

impl Point {
    pub const fn new(level: i32, content: i32) -> Self {
        Point { level, content }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.content)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lattice {
    n: u32,
    shifted: bool,
    strip: CuttingStrip,
    /// Style of the edges into each content from `c_min` to `c_max`.
    styles: Vec<EdgeStyle>,
    /// Direction of the verticals in each column from `c_min - 1` to `c_max`.
    verticals: Vec<Vertical>,
}

/// Lattice for `phi` with `n` levels. The lowest content is entered diagonally.
pub fn build_lattice(phi: &CuttingStrip, n: u32, shifted: bool) -> Lattice {
    build_lattice_with(phi, n, shifted, EdgeStyle::DiagonalInto)
}

/// As [`build_lattice`] with an explicit style for the lowest content.
pub fn build_lattice_with(phi: &CuttingStrip, n: u32, shifted: bool, lowest: EdgeStyle) -> Lattice {
    let style_of = |c: i32| match phi.step_into(c) {
        Some(Step::East) => EdgeStyle::HorizontalInto,
        Some(Step::North) => EdgeStyle::DiagonalInto,
        None => lowest,
    };
    let styles = (phi.c_min()..=phi.c_max()).map(style_of).collect();
    let verticals = (phi.c_min() - 1..=phi.c_max())
        .map(|c| {
            let next = if c == phi.c_max() {
                EdgeStyle::HorizontalInto
            } else {
                style_of(c + 1)
            };
            match next {
                EdgeStyle::HorizontalInto => Vertical::Up,
                EdgeStyle::DiagonalInto => Vertical::Down,
            }
        })
        .collect();
    Lattice {
        n,
        shifted,
        strip: phi.clone(),
        styles,
        verticals,
    }
}

impl Lattice {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn strip(&self) -> &CuttingStrip {
        &self.strip
    }

    pub fn top(&self) -> i32 {
        self.n as i32 + 1
    }

    /// Edge style into content `c`; `None` for the curved edges of a shifted
    /// lattice and outside the strip.
    pub fn style(&self, c: i32) -> Option<EdgeStyle> {
        if self.shifted && c == 0 {
            return None;
        }
        let i = c - self.strip.c_min();
        self.styles.get(usize::try_from(i).ok()?).copied()
    }

    /// Direction of the verticals in column `c`, if the column has any.
    pub fn vertical(&self, c: i32) -> Option<Vertical> {
        if self.shifted && c < 0 {
            return None;
        }
        let i = c - self.strip.c_min() + 1;
        self.verticals.get(usize::try_from(i).ok()?).copied()
    }

    /// Start of the non-vertical edge for entry `e` ending at content `c`.
    fn edge_start(&self, e: PrimedEntry, c: i32) -> Result<Point> {
        let k = e.level() as i32;
        if k > self.n as i32 {
            return Err(Error::ShapeMismatch(format!(
                "entry {e} exceeds n = {}",
                self.n
            )));
        }
        if e.is_primed() && !self.shifted {
            return Err(Error::ShapeMismatch(format!(
                "primed entry {e} on an unshifted lattice"
            )));
        }
        let level = match (self.style(c), e.is_primed()) {
            (None, _) if self.shifted && c == 0 => k,
            (None, _) => {
                return Err(Error::ShapeMismatch(format!(
                    "content {c} is outside the lattice"
                )))
            }
            (Some(EdgeStyle::HorizontalInto), false) => k,
            (Some(EdgeStyle::HorizontalInto), true) => k - 1,
            (Some(EdgeStyle::DiagonalInto), false) => k + 1,
            (Some(EdgeStyle::DiagonalInto), true) => k,
        };
        Ok(Point::new(level, c - 1))
    }

    /// Start point for a strip entered at content `a`.
    fn entry_point(&self, a: i32) -> Point {
        match self.style(a) {
            Some(EdgeStyle::DiagonalInto) => Point::new(self.top(), a - 1),
            _ => Point::new(0, a - 1),
        }
    }

    /// End point for a strip left after content `b`.
    fn exit_point(&self, b: i32) -> Point {
        match self.vertical(b) {
            Some(Vertical::Down) => Point::new(0, b),
            _ => Point::new(self.top(), b),
        }
    }

    /// Vertical edges in column `from.content` from `from` to level `to`.
    fn climb(&self, from: Point, to: i32) -> Result<Vec<Point>> {
        let c = from.content;
        let dir = if to > from.level {
            Vertical::Up
        } else if to < from.level {
            Vertical::Down
        } else {
            return Ok(Vec::new());
        };
        if self.vertical(c) != Some(dir) {
            return Err(Error::ShapeMismatch(format!(
                "no {dir:?} edges in column {c} to get from level {} to {to}",
                from.level
            )));
        }
        let step = if dir == Vertical::Up { 1 } else { -1 };
        let mut out = Vec::new();
        let mut k = from.level;
        while k != to {
            k += step;
            out.push(Point::new(k, c));
        }
        Ok(out)
    }

    /// DOT description of the lattice, with an optional path tuple drawn on top.
    pub fn to_dot(&self, paths: Option<&PathTuple>) -> String {
        let mut s = String::from("digraph lattice {\n  node [shape=point];\n");
        let lo = self.strip.c_min() - 1;
        let hi = self.strip.c_max();
        for c in lo..=hi {
            for k in 0..=self.top() {
                let _ = writeln!(s, "  \"{k},{c}\" [pos=\"{c},{k}!\"];");
            }
        }
        for c in lo..=hi {
            if let Some(dir) = self.vertical(c) {
                for k in 0..self.top() {
                    let (p, q) = match dir {
                        Vertical::Up => (k, k + 1),
                        Vertical::Down => (k + 1, k),
                    };
                    let _ = writeln!(s, "  \"{p},{c}\" -> \"{q},{c}\" [color=gray];");
                }
            }
            if c == lo {
                continue;
            }
            let primes: &[bool] = if self.shifted {
                &[false, true]
            } else {
                &[false]
            };
            for k in 1..=self.n {
                for &primed in primes {
                    let e = PrimedEntry::new(k, primed);
                    if let Ok(p) = self.edge_start(e, c) {
                        if p.level >= 0 && p.level <= self.top() {
                            let _ = writeln!(
                                s,
                                "  \"{},{}\" -> \"{k},{c}\" [label=\"{e}\"];",
                                p.level, p.content
                            );
                        }
                    }
                }
            }
        }
        if let Some(pt) = paths {
            for (i, path) in pt.paths.iter().enumerate() {
                for e in &path.edges {
                    let _ = writeln!(
                        s,
                        "  \"{},{}\" -> \"{},{}\" [color=\"/set19/{}\", penwidth=3];",
                        e.from.level,
                        e.from.content,
                        e.to.level,
                        e.to.content,
                        i % 9 + 1
                    );
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: Point,
    pub to: Point,
    /// The tableau entry the edge encodes; `None` for verticals.
    pub entry: Option<PrimedEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePath {
    /// Index of the decomposition strip whose start point this path leaves from.
    pub strip: usize,
    /// Translate of the cutting strip that strip was cut from.
    pub copy: i32,
    pub start: Point,
    pub end: Point,
    pub edges: Vec<Edge>,
}

impl LatticePath {
    pub fn points(&self) -> Vec<Point> {
        let mut pts = vec![self.start];
        pts.extend(self.edges.iter().map(|e| e.to));
        pts
    }

    /// Non-vertical edges in order of content.
    pub fn steps(&self) -> impl Iterator<Item = (Point, PrimedEntry)> + '_ {
        self.edges.iter().filter_map(|e| e.entry.map(|x| (e.to, x)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathTuple {
    strip: CuttingStrip,
    pub paths: Vec<LatticePath>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeightMode {
    /// x_k
    First,
    /// x_{k,c}
    Ninth,
    /// x_{k,(i,j)} at the box the edge maps back to
    Tenth,
}

impl PathTuple {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Box an edge at content `c` of path `i` stands for.
    pub fn cell_of(&self, i: usize, c: i32) -> Cell {
        let row = self.strip.row_offset(c) + self.paths[i].copy;
        Cell::new(row, row + c)
    }

    /// First point of path `i`, in path order, also visited by path `j`.
    pub fn first_meeting(&self, i: usize, j: usize) -> Option<Point> {
        let other: HashSet<Point> = self.paths[j].points().into_iter().collect();
        self.paths[i]
            .points()
            .into_iter()
            .find(|p| other.contains(p))
    }

    /// Exchanges the parts of paths `i` and `j` after their first meeting point.
    pub fn swap_tails(&self, i: usize, j: usize) -> Option<PathTuple> {
        let at = self.first_meeting(i, j)?;
        let cut = |p: &LatticePath| {
            if p.start == at {
                0
            } else {
                p.edges.iter().position(|e| e.to == at).unwrap() + 1
            }
        };
        let (ci, cj) = (cut(&self.paths[i]), cut(&self.paths[j]));
        let mut out = self.clone();
        let (pi, pj) = (&self.paths[i], &self.paths[j]);
        out.paths[i].edges = pi.edges[..ci]
            .iter()
            .chain(&pj.edges[cj..])
            .copied()
            .collect();
        out.paths[j].edges = pj.edges[..cj]
            .iter()
            .chain(&pi.edges[ci..])
            .copied()
            .collect();
        out.paths[i].end = pj.end;
        out.paths[j].end = pi.end;
        Some(out)
    }
}

pub fn is_nonintersecting(pt: &PathTuple) -> bool {
    let mut seen = HashSet::new();
    pt.paths
        .iter()
        .all(|p| p.points().into_iter().all(|q| seen.insert(q)))
}

pub fn path_weight(pt: &PathTuple, mode: WeightMode) -> Poly {
    let mut vars = Vec::new();
    for (i, path) in pt.paths.iter().enumerate() {
        for (to, e) in path.steps() {
            let kind = if e.is_primed() {
                VarKind::Y
            } else {
                VarKind::X
            };
            let site = match mode {
                WeightMode::First => Site::Free,
                WeightMode::Ninth => Site::Content(to.content),
                WeightMode::Tenth => {
                    let cell = pt.cell_of(i, to.content);
                    Site::Cell(cell.row, cell.col)
                }
            };
            vars.push(Var {
                kind,
                level: e.level() as i32,
                site,
            });
        }
    }
    Poly::monomial(Monomial::from_vars(vars), 1)
}

fn check_lattice(lattice: &Lattice, d: &OutsideDecomposition) -> Result<()> {
    if lattice.strip() != d.strip() || lattice.is_shifted() != d.is_shifted() {
        return Err(Error::ShapeMismatch(
            "lattice and decomposition use different strips".into(),
        ));
    }
    if d.pieces().iter().any(|p| p.point.is_some()) {
        return Err(Error::ShapeMismatch(
            "point null strips have no lattice paths".into(),
        ));
    }
    Ok(())
}

fn entries_to_paths(
    lattice: &Lattice,
    d: &OutsideDecomposition,
    entries: &BTreeMap<Cell, PrimedEntry>,
) -> Result<PathTuple> {
    check_lattice(lattice, d)?;
    let mut paths = Vec::new();
    for (p, piece) in d.pieces().iter().enumerate() {
        let Some(copy) = piece.copy else { continue };
        let iv = piece.interval;
        let entry_at = |c: i32| {
            let cell = d.cell_at(p, c).unwrap();
            entries
                .get(&cell)
                .copied()
                .ok_or_else(|| Error::ShapeMismatch(format!("no entry in box {cell:?}")))
        };
        let start = if lattice.is_shifted() && iv.a == 0 && iv.b >= 0 {
            Point::new(entry_at(0)?.level() as i32, -1)
        } else {
            lattice.entry_point(iv.a)
        };
        let mut cur = start;
        let mut edges = Vec::new();
        let walk = |cur: &mut Point, to_level: i32, edges: &mut Vec<Edge>| -> Result<()> {
            for q in lattice.climb(*cur, to_level)? {
                edges.push(Edge {
                    from: *cur,
                    to: q,
                    entry: None,
                });
                *cur = q;
            }
            Ok(())
        };
        for c in iv.a..=iv.b {
            let e = entry_at(c)?;
            let from = lattice.edge_start(e, c)?;
            walk(&mut cur, from.level, &mut edges)?;
            let to = Point::new(e.level() as i32, c);
            edges.push(Edge {
                from,
                to,
                entry: Some(e),
            });
            cur = to;
        }
        let end = lattice.exit_point(iv.b);
        walk(&mut cur, end.level, &mut edges)?;
        paths.push(LatticePath {
            strip: p,
            copy,
            start,
            end,
            edges,
        });
    }
    Ok(PathTuple {
        strip: lattice.strip().clone(),
        paths,
    })
}

pub fn tableau_to_paths(
    lattice: &Lattice,
    t: &Tableau,
    d: &OutsideDecomposition,
) -> Result<PathTuple> {
    let entries = t
        .cells()
        .into_iter()
        .zip(t.entries().iter().map(|&k| PrimedEntry::new(k, false)))
        .collect();
    entries_to_paths(lattice, d, &entries)
}

pub fn primed_tableau_to_paths(
    lattice: &Lattice,
    t: &PrimedTableau,
    d: &OutsideDecomposition,
) -> Result<PathTuple> {
    let entries = t
        .cells()
        .into_iter()
        .zip(t.entries().iter().copied())
        .collect();
    entries_to_paths(lattice, d, &entries)
}

fn read_entries(pt: &PathTuple, cells: &[Cell]) -> Result<Vec<PrimedEntry>> {
    let mut found = BTreeMap::new();
    for (i, path) in pt.paths.iter().enumerate() {
        for (to, e) in path.steps() {
            let cell = pt.cell_of(i, to.content);
            if found.insert(cell, e).is_some() {
                return Err(Error::ShapeMismatch(format!("box {cell:?} reached twice")));
            }
        }
    }
    if found.len() != cells.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} edges for {} boxes",
            found.len(),
            cells.len()
        )));
    }
    cells
        .iter()
        .map(|c| {
            found
                .get(c)
                .copied()
                .ok_or_else(|| Error::ShapeMismatch(format!("box {c:?} not reached")))
        })
        .collect()
}

pub fn paths_to_tableau(pt: &PathTuple, shape: &SkewShape) -> Result<Tableau> {
    let entries = read_entries(pt, &shape.cells())?;
    if entries.iter().any(|e| e.is_primed()) {
        return Err(Error::ShapeMismatch(
            "primed edge in an unshifted path tuple".into(),
        ));
    }
    Tableau::filling(shape.clone(), entries.iter().map(|e| e.level()).collect())
}

pub fn paths_to_primed_tableau(pt: &PathTuple, shape: &ShiftedSkewShape) -> Result<PrimedTableau> {
    PrimedTableau::filling(shape.clone(), read_entries(pt, &shape.cells())?)
}

/// Number of tuples of non-intersecting lattice paths joining the start and
/// end points of the strips of `d`, found by search on the lattice alone.
pub fn count_nonintersecting(lattice: &Lattice, d: &OutsideDecomposition) -> Result<u64> {
    check_lattice(lattice, d)?;
    let mut per_strip = Vec::new();
    for piece in d.pieces().iter().filter(|p| p.copy.is_some()) {
        let iv = piece.interval;
        let starts: Vec<Point> = if lattice.is_shifted() && iv.a == 0 && iv.b >= 0 {
            (1..=lattice.n() as i32)
                .map(|k| Point::new(k, -1))
                .collect()
        } else {
            vec![lattice.entry_point(iv.a)]
        };
        let mut found = Vec::new();
        for s in starts {
            let mut trail = vec![s];
            extend_paths(lattice, iv.a, iv.b, s, &mut trail, &mut found);
        }
        per_strip.push(found);
    }
    let mut used = HashSet::new();
    Ok(count_disjoint(&per_strip, 0, &mut used))
}

fn extend_paths(
    lattice: &Lattice,
    c: i32,
    b: i32,
    cur: Point,
    trail: &mut Vec<Point>,
    out: &mut Vec<Vec<Point>>,
) {
    if c > b {
        let end = lattice.exit_point(b);
        if let Ok(tail) = lattice.climb(cur, end.level) {
            let mut path = trail.clone();
            path.extend(tail);
            out.push(path);
        }
        return;
    }
    let primes: &[bool] = if lattice.is_shifted() {
        &[false, true]
    } else {
        &[false]
    };
    for k in 1..=lattice.n() {
        for &primed in primes {
            let e = PrimedEntry::new(k, primed);
            let Ok(from) = lattice.edge_start(e, c) else {
                continue;
            };
            let Ok(up) = lattice.climb(cur, from.level) else {
                continue;
            };
            let mark = trail.len();
            trail.extend(up);
            trail.push(Point::new(k as i32, c));
            extend_paths(lattice, c + 1, b, Point::new(k as i32, c), trail, out);
            trail.truncate(mark);
        }
    }
}

fn count_disjoint(per_strip: &[Vec<Vec<Point>>], i: usize, used: &mut HashSet<Point>) -> u64 {
    let Some(options) = per_strip.get(i) else {
        return 1;
    };
    let mut total = 0;
    for path in options {
        if path.iter().any(|q| used.contains(q)) {
            continue;
        }
        used.extend(path.iter().copied());
        total += count_disjoint(per_strip, i + 1, used);
        for q in path {
            used.remove(q);
        }
    }
    total
}

/// The first and tenth-variation comparison for an intersecting tuple and its
/// tail-swapped partner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapComparison {
    pub original: PathTuple,
    pub swapped: PathTuple,
    pub meeting: Point,
    pub weights: Vec<(WeightMode, Poly, Poly)>,
}

impl SwapComparison {
    pub fn agrees(&self, mode: WeightMode) -> bool {
        self.weights.iter().any(|(m, a, b)| *m == mode && a == b)
    }
}

/// Swaps tails at the first meeting of the first intersecting pair of paths.
pub fn compare_swap(pt: &PathTuple) -> Option<SwapComparison> {
    let s = pt.len();
    let (i, j) = (0..s)
        .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
        .find(|&(i, j)| pt.first_meeting(i, j).is_some())?;
    let meeting = pt.first_meeting(i, j)?;
    let swapped = pt.swap_tails(i, j)?;
    let weights = [WeightMode::First, WeightMode::Ninth, WeightMode::Tenth]
        .into_iter()
        .map(|m| (m, path_weight(pt, m), path_weight(&swapped, m)))
        .collect();
    Some(SwapComparison {
        original: pt.clone(),
        swapped,
        meeting,
        weights,
    })
}

/// Outcome of running the path bijection over every tableau of a shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LgvReport {
    pub shape: String,
    pub strip: String,
    pub n: u32,
    pub tableaux: u64,
    pub path_tuples: u64,
    pub round_trip: bool,
    pub nonintersecting: bool,
    pub weights: bool,
    pub counts: bool,
    /// Fillings checked for non-intersection exactly when semistandard.
    pub fillings: Option<u64>,
    pub characterization: bool,
}

impl LgvReport {
    pub fn ok(&self) -> bool {
        self.round_trip
            && self.nonintersecting
            && self.weights
            && self.counts
            && self.characterization
    }
}

/// Every way to put codes `1..=top` in `len` boxes, in lexicographic order.
fn fillings(len: usize, top: u32) -> impl Iterator<Item = Vec<u32>> {
    let mut cur = if top == 0 && len > 0 {
        None
    } else {
        Some(vec![1; len])
    };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = cur.as_mut().unwrap();
        match next.iter().rposition(|&v| v < top) {
            Some(i) => {
                next[i] += 1;
                next[i + 1..].iter_mut().for_each(|v| *v = 1);
            }
            None => cur = None,
        }
        Some(out)
    })
}

/// Checks the tableau to path map on `shape` cut by `phi`: round trip,
/// non-intersection, weight preservation and the count of path tuples, plus
/// optionally the behaviour on every filling.
pub fn lgv_check(
    shape: ShapeRef<'_>,
    phi: &CuttingStrip,
    n: u32,
    all_fillings: bool,
) -> Result<LgvReport> {
    let d = decompose(shape, phi)?;
    let lattice = build_lattice(phi, n, shape.is_shifted());
    let mut report = LgvReport {
        shape: match shape {
            ShapeRef::Skew(s) => s.to_string(),
            ShapeRef::Shifted(s) => s.to_string(),
        },
        strip: phi.to_string(),
        n,
        tableaux: 0,
        path_tuples: count_nonintersecting(&lattice, &d)?,
        round_trip: true,
        nonintersecting: true,
        weights: true,
        counts: true,
        fillings: None,
        characterization: true,
    };
    let mut visit = |pt: &PathTuple, weight: Monomial, back_ok: bool| {
        report.tableaux += 1;
        report.round_trip &= back_ok;
        report.nonintersecting &= is_nonintersecting(pt);
        report.weights &= path_weight(pt, WeightMode::Ninth) == Poly::monomial(weight, 1);
    };
    match shape {
        ShapeRef::Skew(s) => {
            for t in enumerate_ssyt(s, n) {
                let pt = tableau_to_paths(&lattice, &t, &d)?;
                visit(&pt, t.weight(), paths_to_tableau(&pt, s).as_ref() == Ok(&t));
            }
        }
        ShapeRef::Shifted(s) => {
            for t in enumerate_primed(s, n) {
                let pt = primed_tableau_to_paths(&lattice, &t, &d)?;
                visit(
                    &pt,
                    t.weight(),
                    paths_to_primed_tableau(&pt, s).as_ref() == Ok(&t),
                );
            }
        }
    }
    report.counts = report.tableaux == report.path_tuples;
    if all_fillings {
        let mut checked = 0;
        let cells = shape.cells().len();
        match shape {
            ShapeRef::Skew(s) => {
                for f in fillings(cells, n) {
                    let t = Tableau::filling(s.clone(), f)?;
                    let meets =
                        tableau_to_paths(&lattice, &t, &d).is_ok_and(|pt| is_nonintersecting(&pt));
                    report.characterization &= meets == t.is_semistandard();
                    checked += 1;
                }
            }
            ShapeRef::Shifted(s) => {
                for f in fillings(cells, 2 * n) {
                    let t = PrimedTableau::filling(
                        s.clone(),
                        f.into_iter().map(PrimedEntry::from_code).collect(),
                    )?;
                    let meets = primed_tableau_to_paths(&lattice, &t, &d)
                        .is_ok_and(|pt| is_nonintersecting(&pt));
                    report.characterization &= meets == t.is_valid();
                    checked += 1;
                }
            }
        }
        report.fillings = Some(checked);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Partition, StrictPartition};

    fn skew(l: &[u32], m: &[u32]) -> SkewShape {
        SkewShape::new(
            Partition::new(l.to_vec()).unwrap(),
            Partition::new(m.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn running_strip() -> CuttingStrip {
        CuttingStrip::from_letters(-3, "ENEEENE").unwrap()
    }

    fn ninth(pairs: &[(i32, i32)]) -> Poly {
        Poly::monomial(
            Monomial::from_vars(pairs.iter().map(|&(k, c)| Var::x(k, c)).collect()),
            1,
        )
    }

    #[test]
    fn running_lattice() {
        let l = build_lattice(&running_strip(), 4, false);
        let diag: Vec<i32> = (-3..=4)
            .filter(|&c| l.style(c) == Some(EdgeStyle::DiagonalInto))
            .collect();
        assert_eq!(diag, vec![-3, -1, 3]);
        let down: Vec<i32> = (-4..=4)
            .filter(|&c| l.vertical(c) == Some(Vertical::Down))
            .collect();
        assert_eq!(down, vec![-4, -2, 2]);
    }

    #[test]
    fn row_lattice() {
        let l = build_lattice_with(
            &CuttingStrip::from_letters(0, "EEE").unwrap(),
            2,
            false,
            EdgeStyle::HorizontalInto,
        );
        assert!((0..=3).all(|c| l.style(c) == Some(EdgeStyle::HorizontalInto)));
        assert!((-1..=3).all(|c| l.vertical(c) == Some(Vertical::Up)));
    }

    #[test]
    fn running_paths() {
        let shape = skew(&[5, 4, 4, 2], &[3, 2]);
        let d = decompose(ShapeRef::Skew(&shape), &running_strip()).unwrap();
        let t = Tableau::new(shape.clone(), vec![1, 3, 1, 2, 1, 2, 2, 4, 3, 3]).unwrap();
        let l = build_lattice(&running_strip(), 4, false);
        let pt = tableau_to_paths(&l, &t, &d).unwrap();
        assert_eq!(pt.len(), 3);
        let blue = &pt.paths[0];
        assert_eq!(
            (blue.start, blue.end),
            (Point::new(5, -4), Point::new(5, 1))
        );
        let w: Vec<(u32, i32)> = blue.steps().map(|(p, e)| (e.level(), p.content)).collect();
        assert_eq!(w, vec![(3, -3), (3, -2), (2, -1), (2, 0), (4, 1)]);
        assert_eq!(
            (pt.paths[1].start, pt.paths[1].end),
            (Point::new(0, -3), Point::new(0, -2))
        );
        assert_eq!(
            (pt.paths[2].start, pt.paths[2].end),
            (Point::new(0, 0), Point::new(5, 4))
        );
        assert!(is_nonintersecting(&pt));
        assert_eq!(paths_to_tableau(&pt, &shape).unwrap(), t);
    }

    #[test]
    fn shifted_paths() {
        let shape = ShiftedSkewShape::new(
            StrictPartition::new(vec![9, 6, 4, 2]).unwrap(),
            StrictPartition::new(vec![4, 3]).unwrap(),
        )
        .unwrap();
        let phi = CuttingStrip::from_letters(0, "EENNEEEE").unwrap();
        let d = decompose(ShapeRef::Shifted(&shape), &phi).unwrap();
        let l = build_lattice(&phi, 4, true);
        let code = |s: &str| {
            let primed = s.ends_with('\'');
            PrimedEntry::new(s.trim_end_matches('\'').parse().unwrap(), primed)
        };
        let mut by_cell = BTreeMap::new();
        let mut put = |p: usize, marks: &[&str]| {
            let iv = d.pieces()[p].interval;
            for (c, m) in (iv.a..=iv.b).zip(marks) {
                by_cell.insert(d.cell_at(p, c).unwrap(), code(m));
            }
        };
        put(0, &["2", "2", "3'", "3'", "1", "2'", "2", "4'", "4"]);
        put(1, &["4'", "4"]);
        put(2, &["4", "3", "3"]);
        let entries = shape.cells().iter().map(|c| by_cell[c]).collect();
        let t = PrimedTableau::new(shape.clone(), entries).unwrap();
        let pt = primed_tableau_to_paths(&l, &t, &d).unwrap();
        let ends: Vec<(Point, Point)> = pt.paths.iter().map(|p| (p.start, p.end)).collect();
        assert_eq!(
            ends,
            vec![
                (Point::new(2, -1), Point::new(5, 8)),
                (Point::new(4, -1), Point::new(5, 1)),
                (Point::new(5, 2), Point::new(5, 5)),
            ]
        );
        assert!(is_nonintersecting(&pt));
        assert_eq!(
            path_weight(&pt, WeightMode::Ninth),
            Poly::monomial(t.weight(), 1)
        );
        assert_eq!(paths_to_primed_tableau(&pt, &shape).unwrap(), t);
    }

    fn column_pair(entries: [u32; 2]) -> PathTuple {
        let shape = skew(&[1, 1], &[]);
        let phi = CuttingStrip::from_letters(-1, "E").unwrap();
        let d = decompose(ShapeRef::Skew(&shape), &phi).unwrap();
        let l = build_lattice_with(&phi, 2, false, EdgeStyle::HorizontalInto);
        tableau_to_paths(&l, &Tableau::filling(shape, entries.to_vec()).unwrap(), &d).unwrap()
    }

    #[test]
    fn column_example() {
        let good = column_pair([1, 2]);
        assert!(is_nonintersecting(&good));
        let mut ends: Vec<(Point, Point)> = good.paths.iter().map(|p| (p.start, p.end)).collect();
        ends.sort();
        assert_eq!(
            ends,
            vec![
                (Point::new(0, -2), Point::new(3, -1)),
                (Point::new(0, -1), Point::new(3, 0))
            ]
        );
        assert_eq!(
            path_weight(&good, WeightMode::First),
            &Poly::var(Var::x_plain(1)) * &Poly::var(Var::x_plain(2))
        );
        assert_eq!(
            path_weight(&good, WeightMode::Ninth),
            ninth(&[(1, 0), (2, -1)])
        );

        let bad = column_pair([1, 1]);
        assert!(!is_nonintersecting(&bad));
        let cmp = compare_swap(&bad).unwrap();
        assert_eq!(cmp.meeting, Point::new(1, -1));
        assert!(cmp.agrees(WeightMode::First));
        assert!(cmp.agrees(WeightMode::Ninth));
        assert!(!cmp.agrees(WeightMode::Tenth));
        let tenth = |pairs: &[(i32, i32, i32)]| {
            Poly::monomial(
                Monomial::from_vars(
                    pairs
                        .iter()
                        .map(|&(k, i, j)| Var::x_cell(k, i, j))
                        .collect(),
                ),
                1,
            )
        };
        assert_eq!(
            path_weight(&cmp.original, WeightMode::Tenth),
            tenth(&[(1, 1, 1), (1, 2, 1)])
        );
        assert_eq!(
            path_weight(&cmp.swapped, WeightMode::Tenth),
            tenth(&[(1, 2, 1), (1, 2, 2)])
        );
        assert_eq!(
            path_weight(&cmp.swapped, WeightMode::Ninth),
            ninth(&[(1, -1), (1, 0)])
        );
    }

    #[test]
    fn counts_match() {
        let shape = skew(&[3, 2, 2], &[1]);
        let phi = CuttingStrip::from_letters(-2, "ENEE").unwrap();
        let d = decompose(ShapeRef::Skew(&shape), &phi).unwrap();
        let l = build_lattice(&phi, 3, false);
        assert_eq!(
            count_nonintersecting(&l, &d).unwrap(),
            enumerate_ssyt(&shape, 3).count() as u64
        );
    }

    #[test]
    fn small_suites() {
        let shape = skew(&[3, 2], &[1]);
        let phi = CuttingStrip::from_letters(-1, "NEE").unwrap();
        let r = lgv_check(ShapeRef::Skew(&shape), &phi, 2, true).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.fillings, Some(16));
        let q = ShiftedSkewShape::new(
            StrictPartition::new(vec![3, 1]).unwrap(),
            StrictPartition::empty(),
        )
        .unwrap();
        let phi = CuttingStrip::from_letters(0, "EE").unwrap();
        let r = lgv_check(ShapeRef::Shifted(&q), &phi, 2, true).unwrap();
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn empty_shape() {
        let shape = skew(&[], &[]);
        let phi = CuttingStrip::from_letters(0, "").unwrap();
        let d = decompose(ShapeRef::Skew(&shape), &phi).unwrap();
        let l = build_lattice(&phi, 2, false);
        let pt = tableau_to_paths(&l, &Tableau::filling(shape, vec![]).unwrap(), &d).unwrap();
        assert!(pt.is_empty());
        assert!(is_nonintersecting(&pt));
    }

    #[test]
    fn dot_output() {
        let l = build_lattice(&running_strip(), 2, false);
        let s = l.to_dot(None);
        assert!(s.starts_with("digraph lattice"));
        assert!(s.contains("\"3,-4\" -> \"2,-3\""));
    }
}
