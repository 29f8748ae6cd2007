//! Partitions, strict partitions, Frobenius coordinates and the two kinds of
//! skew diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a diagram, 1-based as (row, column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn content(self) -> i32 {
        self.col - self.row
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {:?} in {:?}", p.trim(), s)))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The i-th part, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    pub fn frobenius(&self) -> Frobenius {
        let conj = self.conjugate();
        let rank = (1..=self.len())
            .take_while(|&i| self.part(i) as usize >= i)
            .count();
        Frobenius {
            arms: (1..=rank).map(|i| self.part(i) - i as u32).collect(),
            legs: (1..=rank).map(|i| conj.part(i) - i as u32).collect(),
        }
    }

    pub fn from_frobenius(f: &Frobenius) -> Partition {
        f.to_partition()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Strictly decreasing parts. A single trailing zero is kept only when built
/// through [`StrictPartition::with_trailing_zero`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not strictly decreasing"
            )));
        }
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn with_trailing_zero(&self) -> StrictPartition {
        let mut parts = self.parts.clone();
        if parts.last() != Some(&0) {
            parts.push(0);
        }
        StrictPartition { parts }
    }

    pub fn has_trailing_zero(&self) -> bool {
        self.parts.last() == Some(&0)
    }

    /// Normalized copy without the padding zero.
    pub fn normalized(&self) -> StrictPartition {
        let mut parts = self.parts.clone();
        if parts.last() == Some(&0) {
            parts.pop();
        }
        StrictPartition { parts }
    }

    /// Raw parts including a padding zero if present.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, inner: &StrictPartition) -> bool {
        inner.len() <= self.len() && (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    pub fn as_partition(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("strict parts are decreasing")
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Vec<u32> {
        p.parts
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Arm and leg lengths along the main diagonal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frobenius {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

fn strictly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

impl Frobenius {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidPartition(format!(
                "arms {arms:?} and legs {legs:?} differ in length"
            )));
        }
        if !strictly_decreasing(&arms) || !strictly_decreasing(&legs) {
            return Err(Error::InvalidPartition(format!(
                "({arms:?}|{legs:?}) is not strictly decreasing"
            )));
        }
        Ok(Frobenius { arms, legs })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        let p = self.rank();
        if p == 0 {
            return Partition::empty();
        }
        let rows = p.max(self.legs[0] as usize + 1);
        let parts = (0..rows)
            .map(|i| {
                if i < p {
                    self.arms[i] + i as u32 + 1
                } else {
                    (0..p)
                        .filter(|&j| self.legs[j] as usize + j + 1 > i)
                        .count() as u32
                }
            })
            .collect();
        Partition::new(parts).expect("Frobenius data yields a partition")
    }
}

impl fmt::Display for Frobenius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

/// Diagram of λ with the boxes of μ removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Containment {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Row-major list of boxes.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Cell::new(i as i32, j as i32));
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        (self.outer.size() - self.inner.size()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1
            && (c.row as usize) <= self.outer.len()
            && c.col > self.inner.part(c.row as usize) as i32
            && c.col <= self.outer.part(c.row as usize) as i32
    }

    pub fn content_range(&self) -> Option<(i32, i32)> {
        let cells = self.cells();
        let lo = cells.iter().map(|c| c.content()).min()?;
        let hi = cells.iter().map(|c| c.content()).max()?;
        Some((lo, hi))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Shifted diagram of λ with the shifted diagram of μ removed; row i spans
/// columns i+μ_i ..= i+λ_i−1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftedSkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl ShiftedSkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        let outer = outer.normalized();
        let inner = inner.normalized();
        if !outer.contains(&inner) {
            return Err(Error::Containment {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(ShiftedSkewShape { outer, inner })
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            let row = i as i32;
            for c in self.inner.part(i)..self.outer.part(i) {
                out.push(Cell::new(row, row + c as i32));
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        (self.outer.size() - self.inner.size()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of boxes on the main diagonal.
    pub fn diagonal_count(&self) -> usize {
        self.outer.len() - self.inner.len()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        let i = c.row;
        if i < 1 || i as usize > self.outer.len() {
            return false;
        }
        let k = c.content();
        k >= self.inner.part(i as usize) as i32 && k < self.outer.part(i as usize) as i32
    }

    pub fn content_range(&self) -> Option<(i32, i32)> {
        let cells = self.cells();
        let lo = cells.iter().map(|c| c.content()).min()?;
        let hi = cells.iter().map(|c| c.content()).max()?;
        Some((lo, hi))
    }

    /// Mirror image in the anti-diagonal through (1, λ_1). Contents are
    /// preserved cell by cell.
    pub fn reflect_antidiagonal(&self) -> ShiftedSkewShape {
        let width = self.outer.part(1);
        if width == 0 {
            return self.clone();
        }
        let kappa = staircase_complement_mirror(&self.inner, width);
        let nu = staircase_complement_mirror(&self.outer, width);
        ShiftedSkewShape::new(kappa, nu).expect("mirror of a skew shifted shape")
    }

    /// Cell-by-cell image under the anti-diagonal reflection used by
    /// [`Self::reflect_antidiagonal`].
    pub fn mirror_cell(&self, c: Cell) -> Cell {
        let w = self.outer.part(1) as i32;
        Cell::new(w + 1 - c.col, w + 1 - c.row)
    }
}

/// Row lengths of the mirror image of the staircase cells lying outside ρ.
fn staircase_complement_mirror(rho: &StrictPartition, width: u32) -> StrictPartition {
    let w = width as i32;
    let mut rows = vec![0u32; width as usize];
    for i in 1..=w {
        let start = i + rho.part(i as usize) as i32;
        for j in start.max(i)..=w {
            let mirrored_row = w + 1 - j;
            rows[(mirrored_row - 1) as usize] += 1;
        }
    }
    let parts: Vec<u32> = rows.into_iter().filter(|&r| r > 0).collect();
    StrictPartition::new(parts).expect("order ideal of the shifted staircase")
}

impl fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Either kind of skew diagram.
#[derive(Clone, Copy, Debug)]
pub enum ShapeRef<'a> {
    Skew(&'a SkewShape),
    Shifted(&'a ShiftedSkewShape),
}

impl ShapeRef<'_> {
    pub fn cells(&self) -> Vec<Cell> {
        match self {
            ShapeRef::Skew(s) => s.cells(),
            ShapeRef::Shifted(s) => s.cells(),
        }
    }

    pub fn is_shifted(&self) -> bool {
        matches!(self, ShapeRef::Shifted(_))
    }

    pub fn content_range(&self) -> Option<(i32, i32)> {
        match self {
            ShapeRef::Skew(s) => s.content_range(),
            ShapeRef::Shifted(s) => s.content_range(),
        }
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        match self {
            ShapeRef::Skew(s) => s.contains_cell(c),
            ShapeRef::Shifted(s) => s.contains_cell(c),
        }
    }
}
