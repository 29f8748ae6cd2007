//! Cutting strips, outside decompositions and the realization of strip
//! intervals as concrete (shifted) skew shapes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, ShapeRef, ShiftedSkewShape, SkewShape, StrictPartition};

/// How box c sits relative to box c−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    East,
    North,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
        }
    }
}

/// One box per content from `c_min` to `c_min + steps.len()`; `steps[i]`
/// places box `c_min + i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CuttingStrip {
    c_min: i32,
    steps: Vec<Step>,
}

impl CuttingStrip {
    pub fn new(c_min: i32, steps: Vec<Step>) -> Self {
        CuttingStrip { c_min, steps }
    }

    pub fn from_letters(c_min: i32, letters: &str) -> Result<Self> {
        let steps = letters
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Ok(Step::East),
                'N' => Ok(Step::North),
                other => Err(Error::Parse(format!(
                    "profile letter {other:?} is not E or N"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CuttingStrip { c_min, steps })
    }

    pub fn c_min(&self) -> i32 {
        self.c_min
    }

    pub fn c_max(&self) -> i32 {
        self.c_min + self.steps.len() as i32
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Direction of the step arriving at box c, if box c has a predecessor.
    pub fn step_into(&self, c: i32) -> Option<Step> {
        if c <= self.c_min || c > self.c_max() {
            return None;
        }
        Some(self.steps[(c - self.c_min - 1) as usize])
    }

    /// Row of box c when box `c_min` sits in row 0.
    pub fn row_offset(&self, c: i32) -> i32 {
        let upto = (c - self.c_min).clamp(0, self.steps.len() as i32) as usize;
        -(self.steps[..upto]
            .iter()
            .filter(|s| **s == Step::North)
            .count() as i32)
    }

    pub fn covers(&self, lo: i32, hi: i32) -> bool {
        self.c_min <= lo && hi <= self.c_max()
    }

    /// Box positions of the interval a..=b with box a placed at `origin`.
    fn walk(&self, a: i32, b: i32, origin: Cell) -> Vec<Cell> {
        let mut cells = Vec::with_capacity((b - a + 1).max(0) as usize);
        if b < a {
            return cells;
        }
        let mut cur = origin;
        cells.push(cur);
        for c in a + 1..=b {
            match self.step_into(c) {
                Some(Step::North) => cur.row -= 1,
                _ => cur.col += 1,
            }
            cells.push(cur);
        }
        cells
    }
}

impl fmt::Display for CuttingStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "profile:{}:{}", self.c_min, self.letters())
    }
}

/// Named cutting strips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StripKind {
    Row,
    Column,
    Hook,
    /// Hook with its corner at content M.
    HookAt(i32),
    InnerRim,
    OuterRim,
}

/// Content window a canonical strip must span for a shape.
fn canonical_range(shape: ShapeRef<'_>) -> (i32, i32) {
    match shape {
        ShapeRef::Skew(s) => {
            let l = s.outer().len() as i32;
            let w = s.outer().part(1) as i32;
            if l == 0 {
                (0, 0)
            } else {
                (1 - l, w - 1)
            }
        }
        ShapeRef::Shifted(s) => (0, (s.outer().part(1) as i32 - 1).max(0)),
    }
}

pub fn canonical_cutting_strip(kind: StripKind, shape: ShapeRef<'_>) -> CuttingStrip {
    let (lo, hi) = canonical_range(shape);
    let north_into: Box<dyn Fn(i32) -> bool> = match (kind, shape) {
        (StripKind::Row, _) => Box::new(|_| false),
        (StripKind::Column, _) => Box::new(|_| true),
        (StripKind::Hook, _) => Box::new(|c| c <= 0),
        (StripKind::HookAt(m), _) => Box::new(move |c| c <= m),
        (StripKind::InnerRim, ShapeRef::Skew(s)) => {
            let l = s.outer().len().max(s.inner().len()) + (hi - lo) as usize + 2;
            let diag: BTreeSet<i32> = (1..=l)
                .map(|i| s.inner().part(i) as i32 - i as i32)
                .collect();
            Box::new(move |c| diag.contains(&(c - 1)))
        }
        (StripKind::OuterRim, ShapeRef::Skew(s)) => {
            let diag: BTreeSet<i32> = (1..=s.outer().len())
                .map(|i| s.outer().part(i) as i32 - i as i32)
                .collect();
            Box::new(move |c| diag.contains(&(c - 1)))
        }
        (StripKind::InnerRim, ShapeRef::Shifted(s)) => {
            let parts: BTreeSet<i32> = s.inner().parts().iter().map(|&p| p as i32).collect();
            Box::new(move |c| parts.contains(&c))
        }
        (StripKind::OuterRim, ShapeRef::Shifted(s)) => {
            let parts: BTreeSet<i32> = s
                .outer()
                .parts()
                .iter()
                .skip(1)
                .map(|&p| p as i32)
                .collect();
            Box::new(move |c| parts.contains(&c))
        }
    };
    let steps = (lo + 1..=hi)
        .map(|c| {
            if north_into(c) {
                Step::North
            } else {
                Step::East
            }
        })
        .collect();
    CuttingStrip::new(lo, steps)
}

/// A named strip or an explicit profile, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StripSpec {
    Kind(StripKind),
    Profile(CuttingStrip),
}

impl StripSpec {
    pub fn resolve(&self, shape: ShapeRef<'_>) -> CuttingStrip {
        match self {
            StripSpec::Kind(k) => canonical_cutting_strip(*k, shape),
            StripSpec::Profile(p) => p.clone(),
        }
    }
}

impl FromStr for StripSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let kind = match t {
            "row" => Some(StripKind::Row),
            "col" | "column" => Some(StripKind::Column),
            "hook" => Some(StripKind::Hook),
            "inner" => Some(StripKind::InnerRim),
            "outer" => Some(StripKind::OuterRim),
            _ => None,
        };
        if let Some(k) = kind {
            return Ok(StripSpec::Kind(k));
        }
        if let Some(m) = t.strip_prefix("hook@") {
            let m = m
                .parse()
                .map_err(|_| Error::Parse(format!("bad hook corner in {t:?}")))?;
            return Ok(StripSpec::Kind(StripKind::HookAt(m)));
        }
        if let Some(rest) = t.strip_prefix("profile:") {
            let (cmin, letters) = rest.split_once(':').ok_or_else(|| {
                Error::Parse(format!("expected profile:<cmin>:<EN...>, got {t:?}"))
            })?;
            let cmin = cmin
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad c_min in {t:?}")))?;
            return Ok(StripSpec::Profile(CuttingStrip::from_letters(
                cmin, letters,
            )?));
        }
        Err(Error::Parse(format!(
            "unknown strip {t:?}; expected row|col|hook|hook@M|inner|outer|profile:<cmin>:<EN...>"
        )))
    }
}

impl fmt::Display for StripSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StripSpec::Kind(StripKind::Row) => write!(f, "row"),
            StripSpec::Kind(StripKind::Column) => write!(f, "col"),
            StripSpec::Kind(StripKind::Hook) => write!(f, "hook"),
            StripSpec::Kind(StripKind::HookAt(m)) => write!(f, "hook@{m}"),
            StripSpec::Kind(StripKind::InnerRim) => write!(f, "inner"),
            StripSpec::Kind(StripKind::OuterRim) => write!(f, "outer"),
            StripSpec::Profile(p) => write!(f, "{p}"),
        }
    }
}

/// The interval φ_{a,b} of a cutting strip. `a = b + 1` is a null strip and
/// `a > b + 1` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StripRef {
    pub a: i32,
    pub b: i32,
}

impl StripRef {
    pub const fn new(a: i32, b: i32) -> Self {
        StripRef { a, b }
    }

    pub fn is_null(&self) -> bool {
        self.a == self.b + 1
    }

    pub fn is_empty(&self) -> bool {
        self.a > self.b + 1
    }

    pub fn is_regular(&self) -> bool {
        self.a <= self.b
    }

    pub fn len(&self) -> usize {
        (self.b - self.a + 1).max(0) as usize
    }

    /// Extension down to content 0.
    pub fn bar(&self) -> StripRef {
        StripRef { a: 0, b: self.b }
    }
}

impl fmt::Display for StripRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi[{},{}]", self.a, self.b)
    }
}

/// Start of the first strip glued to the end of the second.
pub fn hash_op(p: StripRef, q: StripRef) -> StripRef {
    StripRef { a: p.a, b: q.b }
}

/// A null strip sitting on a single lattice point rather than spanning a
/// translate. A sink absorbs paths and emits none; a source does the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PointNull {
    Sink,
    Source,
}

/// One strip of a decomposition: its interval and the translate of the
/// cutting strip it was cut from. The parity null strip has no translate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub interval: StripRef,
    pub copy: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<PointNull>,
}

impl Piece {
    pub fn new(interval: StripRef, copy: Option<i32>) -> Self {
        Piece {
            interval,
            copy,
            point: None,
        }
    }

    pub fn is_sink(&self) -> bool {
        self.point == Some(PointNull::Sink)
    }

    pub fn is_source(&self) -> bool {
        self.point == Some(PointNull::Source)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutsideDecomposition {
    shifted: bool,
    strip: CuttingStrip,
    pieces: Vec<Piece>,
    diagonal: usize,
}

impl OutsideDecomposition {
    pub fn strip(&self) -> &CuttingStrip {
        &self.strip
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn intervals(&self) -> Vec<StripRef> {
        self.pieces.iter().map(|p| p.interval).collect()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    /// Number of strips through the main diagonal (shifted shapes only).
    pub fn diagonal(&self) -> usize {
        self.diagonal
    }

    /// Number of leading strips that are diagonal or the parity null strip.
    pub fn leading(&self) -> usize {
        if self.shifted && self.diagonal % 2 == 1 {
            self.diagonal + 1
        } else {
            self.diagonal
        }
    }

    /// Box of strip `p` with content `c`, on the translate the strip came from.
    pub fn cell_at(&self, p: usize, c: i32) -> Option<Cell> {
        let t = self.pieces[p].copy?;
        let row = self.strip.row_offset(c) + t;
        Some(Cell::new(row, row + c))
    }

    pub fn cells_of(&self, p: usize) -> Vec<Cell> {
        let iv = self.pieces[p].interval;
        (iv.a..=iv.b).filter_map(|c| self.cell_at(p, c)).collect()
    }

    pub fn cell_owner(&self) -> BTreeMap<Cell, usize> {
        let mut out = BTreeMap::new();
        for p in 0..self.pieces.len() {
            for c in self.cells_of(p) {
                out.insert(c, p);
            }
        }
        out
    }

    /// Same strips in another order.
    pub fn reordered(&self, order: &[usize]) -> OutsideDecomposition {
        OutsideDecomposition {
            pieces: order.iter().map(|&i| self.pieces[i]).collect(),
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Inside,
    Shape,
    Outside,
}

/// Rows (B, A] of diagonal c belong to the shape.
fn diagonal_window(shape: ShapeRef<'_>, c: i32) -> (i32, i32) {
    match shape {
        ShapeRef::Skew(s) => {
            let count = |p: &Partition| {
                let rows = p.len().max((-c).max(0) as usize);
                (1..=rows)
                    .filter(|&i| p.part(i) as i32 - i as i32 >= c)
                    .count() as i32
            };
            (count(s.inner()), count(s.outer()))
        }
        ShapeRef::Shifted(s) => {
            let count =
                |p: &StrictPartition| p.parts().iter().filter(|&&x| x as i32 > c).count() as i32;
            (count(s.inner()), count(s.outer()))
        }
    }
}

/// Superpose translates of φ on the shape and read off the strips.
pub fn decompose(shape: ShapeRef<'_>, phi: &CuttingStrip) -> Result<OutsideDecomposition> {
    let shifted = shape.is_shifted();
    let mismatch = |lo: i32, hi: i32| Error::ProfileMismatch {
        strip_min: phi.c_min(),
        strip_max: phi.c_max(),
        need_min: lo,
        need_max: hi,
    };
    let range = shape.content_range();
    if let Some((lo, hi)) = range {
        if !phi.covers(lo, hi) {
            return Err(mismatch(lo, hi));
        }
    }
    if shifted && phi.c_min() != 0 {
        let (_, hi) = range.unwrap_or((0, 0));
        return Err(mismatch(0, hi));
    }
    let diagonal = match shape {
        ShapeRef::Shifted(s) => s.diagonal_count(),
        ShapeRef::Skew(_) => 0,
    };
    if range.is_none() {
        return Ok(OutsideDecomposition {
            shifted,
            strip: phi.clone(),
            pieces: Vec::new(),
            diagonal: 0,
        });
    }

    let contents: Vec<i32> = (phi.c_min()..=phi.c_max()).collect();
    let windows: Vec<(i32, i32)> = contents
        .iter()
        .map(|&c| diagonal_window(shape, c))
        .collect();
    let offsets: Vec<i32> = contents.iter().map(|&c| phi.row_offset(c)).collect();
    let t_lo = windows
        .iter()
        .zip(&offsets)
        .map(|((b, _), r)| b - r)
        .min()
        .unwrap_or(0);
    let t_hi = windows
        .iter()
        .zip(&offsets)
        .map(|((_, a), r)| a - r)
        .max()
        .unwrap_or(0);

    let mut found: Vec<Piece> = Vec::new();
    for t in t_lo..=t_hi {
        let mut run: Option<(i32, i32)> = None;
        let mut prev: Option<Status> = None;
        for (idx, &c) in contents.iter().enumerate() {
            let y = offsets[idx] + t;
            let (inner, outer) = windows[idx];
            let status = if y <= inner {
                Status::Inside
            } else if y <= outer {
                Status::Shape
            } else {
                Status::Outside
            };
            if status == Status::Shape {
                run = Some(match run {
                    None => (c, c),
                    Some((a, _)) => (a, c),
                });
            } else {
                if let Some((a, b)) = run.take() {
                    found.push(Piece::new(StripRef::new(a, b), Some(t)));
                }
                if matches!(prev, Some(p) if p != Status::Shape && p != status) {
                    found.push(Piece::new(StripRef::new(c, c - 1), Some(t)));
                }
            }
            prev = Some(status);
        }
        if let Some((a, b)) = run {
            found.push(Piece::new(StripRef::new(a, b), Some(t)));
        }
    }

    let pieces = if shifted {
        let row0 = phi.row_offset(0);
        let (mut diag, mut rest): (Vec<Piece>, Vec<Piece>) = found
            .into_iter()
            .partition(|p| p.interval.a == 0 && p.interval.b >= 0);
        diag.sort_by_key(|p| row0 + p.copy.unwrap_or(0));
        rest.sort_by_key(|p| (p.interval.a, p.interval.b));
        if diag.len() != diagonal {
            return Err(Error::ShapeMismatch(format!(
                "found {} strips through the diagonal, expected {diagonal}",
                diag.len()
            )));
        }
        if diagonal % 2 == 1 {
            diag.push(Piece::new(StripRef::new(0, -1), None));
        }
        diag.extend(rest);
        diag
    } else {
        found.sort_by_key(|p| (p.interval.a, p.interval.b));
        found
    };

    Ok(OutsideDecomposition {
        shifted,
        strip: phi.clone(),
        pieces,
        diagonal,
    })
}

/// Whether the boundary of `p` crosses the slot between contents c-1 and c
/// with a vertical edge.
fn vertical_edge(shape: ShapeRef<'_>, outer: bool, c: i32) -> bool {
    match shape {
        ShapeRef::Skew(s) => {
            let p = if outer { s.outer() } else { s.inner() };
            let rows = p.len().max((1 - c).max(0) as usize) + 1;
            (1..=rows).any(|i| p.part(i) as i32 - i as i32 == c - 1)
        }
        ShapeRef::Shifted(s) => {
            let p = if outer { s.outer() } else { s.inner() };
            c >= 1 && p.parts().contains(&(c as u32))
        }
    }
}

/// Which rim of a skew diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rim {
    Inner,
    Outer,
}

impl Rim {
    pub fn kind(self) -> StripKind {
        match self {
            Rim::Inner => StripKind::InnerRim,
            Rim::Outer => StripKind::OuterRim,
        }
    }
}

/// Decomposition by a rim, together with the point null strips that pair
/// equal Frobenius coordinates of the two shapes. These keep the matrix size
/// equal to the sum of the Frobenius ranks.
pub fn decompose_rim(shape: ShapeRef<'_>, rim: Rim) -> Result<OutsideDecomposition> {
    let phi = canonical_cutting_strip(rim.kind(), shape);
    let mut d = decompose(shape, &phi)?;
    if d.pieces.is_empty() {
        return Ok(d);
    }
    let mut extra = Vec::new();
    for c in phi.c_min() + 1..=phi.c_max() {
        let outer_v = vertical_edge(shape, true, c);
        if outer_v != vertical_edge(shape, false, c) {
            continue;
        }
        let paired = if shape.is_shifted() {
            outer_v
        } else {
            (outer_v && c >= 1) || (!outer_v && c <= 0)
        };
        if !paired || (phi.step_into(c) == Some(Step::North)) != outer_v {
            continue;
        }
        let kind = match (shape.is_shifted(), rim, outer_v) {
            (true, _, _) | (false, Rim::Inner, true) | (false, Rim::Outer, false) => {
                PointNull::Source
            }
            _ => PointNull::Sink,
        };
        extra.push(Piece {
            interval: StripRef::new(c, c - 1),
            copy: None,
            point: Some(kind),
        });
    }
    let lead = d.leading();
    let mut rest = d.pieces.split_off(lead);
    rest.extend(extra);
    rest.sort_by_key(|p| (p.interval.a, p.interval.b));
    d.pieces.extend(rest);
    Ok(d)
}

/// A strip interval laid out as an ordinary skew shape, with the content
/// shift `m` such that φ-content = shape content + m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedSkew {
    pub shape: SkewShape,
    pub shift: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedShifted {
    pub shape: ShiftedSkewShape,
    pub shift: i32,
}

fn number_of_north(phi: &CuttingStrip, a: i32, b: i32) -> i32 {
    (a + 1..=b)
        .filter(|&c| phi.step_into(c) == Some(Step::North))
        .count() as i32
}

/// Content of the diagonal box of the unique partition whose outer rim is
/// the interval.
pub fn shift_param(phi: &CuttingStrip, s: StripRef) -> Result<i32> {
    if !s.is_regular() {
        return Err(Error::UndefinedShift);
    }
    Ok(s.a + number_of_north(phi, s.a, s.b))
}

pub fn realize_strip(phi: &CuttingStrip, s: StripRef) -> Result<RealizedSkew> {
    if !s.is_regular() {
        return Err(Error::UndefinedShift);
    }
    let height = 1 + number_of_north(phi, s.a, s.b);
    let cells = phi.walk(s.a, s.b, Cell::new(height, 1));
    let mut outer = vec![0u32; height as usize];
    let mut inner = vec![u32::MAX; height as usize];
    for c in &cells {
        let r = (c.row - 1) as usize;
        outer[r] = outer[r].max(c.col as u32);
        inner[r] = inner[r].min(c.col as u32 - 1);
    }
    let shape = SkewShape::new(
        Partition::new(outer).expect("rim rows decrease"),
        Partition::new(inner).expect("rim rows decrease"),
    )?;
    Ok(RealizedSkew {
        shape,
        shift: height - 1 + s.a,
    })
}

/// Shifted layout with the first box on the main diagonal; shift = a.
pub fn realize_shifted_strip(phi: &CuttingStrip, s: StripRef) -> Result<RealizedShifted> {
    if !s.is_regular() {
        return Err(Error::UndefinedShift);
    }
    let height = 1 + number_of_north(phi, s.a, s.b);
    let cells = phi.walk(s.a, s.b, Cell::new(height, height));
    let shape = shifted_shape_from_cells(&cells).ok_or_else(|| {
        Error::ShapeMismatch(format!("interval {s} does not lie in the shifted plane"))
    })?;
    Ok(RealizedShifted { shape, shift: s.a })
}

/// The skew shifted shape whose boxes are exactly `cells`, if one exists.
pub fn shifted_shape_from_cells(cells: &[Cell]) -> Option<ShiftedSkewShape> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    if set.len() != cells.len() || set.iter().any(|c| c.row < 1 || c.col < c.row) {
        return None;
    }
    let max_row = set.iter().map(|c| c.row).max()?;
    let mut kappa = Vec::new();
    let mut nu = Vec::new();
    for i in 1..=max_row {
        let reach = set
            .iter()
            .filter(|c| c.row >= i)
            .map(|c| c.col)
            .max()
            .unwrap_or(0);
        let len = (reach - i + 1).max(0);
        let first = set
            .iter()
            .filter(|c| c.row == i)
            .map(|c| c.col)
            .min()
            .unwrap_or(i + len);
        kappa.push(len as u32);
        nu.push((first - i) as u32);
    }
    let kappa: Vec<u32> = kappa.into_iter().filter(|&x| x > 0).collect();
    let nu: Vec<u32> = nu.into_iter().filter(|&x| x > 0).collect();
    let shape = ShiftedSkewShape::new(
        StrictPartition::new(kappa).ok()?,
        StrictPartition::new(nu).ok()?,
    )
    .ok()?;
    let mut got = shape.cells();
    got.sort();
    let want: Vec<Cell> = set.into_iter().collect();
    (got == want).then_some(shape)
}

/// Outcome of abutting two diagonal extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoubleStrip {
    Regular(ShiftedSkewShape),
    NonRegular,
}

/// Lay φ_{0,bp} with its content-0 box on the diagonal and φ_{0,bq} with its
/// content-0 box one step further down the diagonal. `bq = -1` stands for
/// the null extension.
pub fn double_strip(phi: &CuttingStrip, bp: i32, bq: i32) -> DoubleStrip {
    if bp < 0 {
        return DoubleStrip::NonRegular;
    }
    let mut cells = phi.walk(0, bp, Cell::new(0, 0));
    if bq >= 0 {
        cells.extend(phi.walk(0, bq, Cell::new(1, 1)));
    }
    let top = cells.iter().map(|c| c.row).min().unwrap_or(0);
    let lift = 1 - top;
    let placed: Vec<Cell> = cells
        .iter()
        .map(|c| Cell::new(c.row + lift, c.col + lift))
        .collect();
    match shifted_shape_from_cells(&placed) {
        Some(shape) => DoubleStrip::Regular(shape),
        None => DoubleStrip::NonRegular,
    }
}
