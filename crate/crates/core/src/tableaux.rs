//! Semistandard and primed shifted tableaux, the tableau sums they define, and
//! sign-tracking regularization of non-standard labels.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Frobenius, ShiftedSkewShape, SkewShape, StrictPartition};
use crate::strips::{realize_shifted_strip, realize_strip, CuttingStrip, StripRef};
use crate::weights::{Monomial, Poly, Var};

/// An entry of a primed tableau. Ordered 1' < 1 < 2' < 2 < …
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimedEntry {
    code: u32,
}

impl PrimedEntry {
    pub fn new(level: u32, primed: bool) -> Self {
        assert!(level > 0, "levels start at 1");
        PrimedEntry {
            code: if primed { 2 * level - 1 } else { 2 * level },
        }
    }

    pub fn from_code(code: u32) -> Self {
        assert!(code > 0, "codes start at 1");
        PrimedEntry { code }
    }

    pub fn code(self) -> u32 {
        self.code
    }

    pub fn level(self) -> u32 {
        self.code.div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.code % 2 == 1
    }

    pub fn weight(self, content: i32) -> Var {
        if self.is_primed() {
            Var::y(self.level() as i32, content)
        } else {
            Var::x(self.level() as i32, content)
        }
    }
}

impl fmt::Display for PrimedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.level())
        } else {
            write!(f, "{}", self.level())
        }
    }
}

/// Smallest admissible code for a box given its left and upper neighbours.
fn lower_bound(left: Option<u32>, up: Option<u32>, primed: bool) -> u32 {
    let mut lo = 1;
    if let Some(l) = left {
        lo = lo.max(if primed && l % 2 == 1 { l + 1 } else { l });
    }
    if let Some(u) = up {
        lo = lo.max(if primed && u % 2 == 1 { u } else { u + 1 });
    }
    lo
}

fn neighbour_index(cells: &[Cell]) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let left = cells
        .iter()
        .map(|c| index.get(&Cell::new(c.row, c.col - 1)).copied())
        .collect();
    let up = cells
        .iter()
        .map(|c| index.get(&Cell::new(c.row - 1, c.col)).copied())
        .collect();
    (left, up)
}

fn check_rules(cells: &[Cell], codes: &[u32], primed: bool) -> bool {
    let (left, up) = neighbour_index(cells);
    (0..cells.len()).all(|i| {
        codes[i] >= lower_bound(left[i].map(|j| codes[j]), up[i].map(|j| codes[j]), primed)
    })
}

/// Backtracking odometer over fillings of cells listed in row-major order.
/// Codes run over 1..=top; a zero marks a box not yet filled.
struct Filler {
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    primed: bool,
    top: u32,
    codes: Vec<u32>,
    pos: usize,
    started: bool,
    done: bool,
}

impl Filler {
    fn new(cells: &[Cell], top: u32, primed: bool) -> Self {
        let (left, up) = neighbour_index(cells);
        Filler {
            left,
            up,
            primed,
            top,
            codes: vec![0; cells.len()],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        let len = self.codes.len();
        if len == 0 {
            self.done = true;
            return Some(&self.codes);
        }
        if !self.started {
            self.started = true;
            self.pos = 0;
        } else {
            self.pos = len - 1;
        }
        loop {
            let i = self.pos;
            let next = if self.codes[i] == 0 {
                let left = self.left[i].map(|j| self.codes[j]);
                let up = self.up[i].map(|j| self.codes[j]);
                lower_bound(left, up, self.primed)
            } else {
                self.codes[i] + 1
            };
            if next <= self.top {
                self.codes[i] = next;
                if i + 1 == len {
                    return Some(&self.codes);
                }
                self.pos = i + 1;
                self.codes[self.pos] = 0;
            } else {
                self.codes[i] = 0;
                if i == 0 {
                    self.done = true;
                    return None;
                }
                self.pos = i - 1;
            }
        }
    }
}

/// A semistandard filling of a skew shape, entries in row-major cell order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    shape: SkewShape,
    entries: Vec<u32>,
}

impl Tableau {
    /// Checked constructor: rows weak, columns strict, entries at least 1.
    pub fn new(shape: SkewShape, entries: Vec<u32>) -> Result<Self> {
        let t = Tableau::filling(shape, entries)?;
        if !t.is_semistandard() {
            return Err(Error::ShapeMismatch(format!(
                "{:?} is not semistandard",
                t.entries
            )));
        }
        Ok(t)
    }

    /// Any filling by positive integers, semistandard or not.
    pub fn filling(shape: SkewShape, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.size() || entries.contains(&0) {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a shape with {} boxes",
                entries.len(),
                shape.size()
            )));
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.shape.cells()
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.shape
            .cells()
            .iter()
            .position(|c| *c == cell)
            .map(|i| self.entries[i])
    }

    pub fn is_semistandard(&self) -> bool {
        check_rules(&self.shape.cells(), &self.entries, false)
    }

    pub fn weight(&self) -> Monomial {
        Monomial::from_vars(
            self.shape
                .cells()
                .iter()
                .zip(&self.entries)
                .map(|(c, &k)| Var::x(k as i32, c.content()))
                .collect(),
        )
    }
}

/// A primed shifted filling, entries in row-major cell order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimedTableau {
    shape: ShiftedSkewShape,
    entries: Vec<PrimedEntry>,
}

impl PrimedTableau {
    pub fn new(shape: ShiftedSkewShape, entries: Vec<PrimedEntry>) -> Result<Self> {
        let t = PrimedTableau::filling(shape, entries)?;
        if !t.is_valid() {
            return Err(Error::ShapeMismatch(
                "filling breaks the primed tableau rules".into(),
            ));
        }
        Ok(t)
    }

    pub fn filling(shape: ShiftedSkewShape, entries: Vec<PrimedEntry>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a shape with {} boxes",
                entries.len(),
                shape.size()
            )));
        }
        Ok(PrimedTableau { shape, entries })
    }

    pub fn shape(&self) -> &ShiftedSkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[PrimedEntry] {
        &self.entries
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.shape.cells()
    }

    pub fn get(&self, cell: Cell) -> Option<PrimedEntry> {
        self.shape
            .cells()
            .iter()
            .position(|c| *c == cell)
            .map(|i| self.entries[i])
    }

    pub fn is_valid(&self) -> bool {
        let codes: Vec<u32> = self.entries.iter().map(|e| e.code()).collect();
        check_rules(&self.shape.cells(), &codes, true)
    }

    pub fn weight(&self) -> Monomial {
        Monomial::from_vars(
            self.shape
                .cells()
                .iter()
                .zip(&self.entries)
                .map(|(c, e)| e.weight(c.content()))
                .collect(),
        )
    }
}

/// Semistandard tableaux of `shape` with entries in 1..=n, lexicographic in
/// row-major reading order.
pub fn enumerate_ssyt(shape: &SkewShape, n: u32) -> impl Iterator<Item = Tableau> + '_ {
    let mut filler = Filler::new(&shape.cells(), n, false);
    std::iter::from_fn(move || {
        filler.advance().map(|codes| Tableau {
            shape: shape.clone(),
            entries: codes.to_vec(),
        })
    })
}

/// Primed shifted tableaux of `shape` with entries in 1' ..= n.
pub fn enumerate_primed(
    shape: &ShiftedSkewShape,
    n: u32,
) -> impl Iterator<Item = PrimedTableau> + '_ {
    let mut filler = Filler::new(&shape.cells(), 2 * n, true);
    std::iter::from_fn(move || {
        filler.advance().map(|codes| PrimedTableau {
            shape: shape.clone(),
            entries: codes.iter().map(|&c| PrimedEntry::from_code(c)).collect(),
        })
    })
}

fn tableau_sum(cells: &[Cell], n: u32, primed: bool) -> Poly {
    let top = if primed { 2 * n } else { n };
    let contents: Vec<i32> = cells.iter().map(|c| c.content()).collect();
    let mut filler = Filler::new(cells, top, primed);
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    while let Some(codes) = filler.advance() {
        let vars = codes
            .iter()
            .zip(&contents)
            .map(|(&code, &c)| {
                if primed {
                    PrimedEntry::from_code(code).weight(c)
                } else {
                    Var::x(code as i32, c)
                }
            })
            .collect();
        *counts.entry(Monomial::from_vars(vars)).or_insert(0) += 1;
    }
    Poly::from_counts(counts)
}

/// Sum over semistandard tableaux of the product of x[k, content].
pub fn schur9(shape: &SkewShape, n: u32) -> Poly {
    tableau_sum(&shape.cells(), n, false)
}

/// Sum over primed shifted tableaux; k contributes x[k,c], k' contributes y[k,c].
pub fn qfun9(shape: &ShiftedSkewShape, n: u32) -> Poly {
    tableau_sum(&shape.cells(), n, true)
}

/// A function label after sorting, with the sign of the sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Strict(StrictPartition),
    Frobenius(Frobenius),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedLabel {
    pub sign: i8,
    pub label: Option<Label>,
}

impl SignedLabel {
    fn vanishing() -> Self {
        SignedLabel {
            sign: 0,
            label: None,
        }
    }
}

/// Sign of the permutation sorting `seq` into strictly decreasing order, or
/// zero if `seq` has a repeat.
pub fn sort_sign<T: Ord + Copy>(seq: &[T]) -> (i8, Vec<T>) {
    let mut sign = 1i8;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return (0, Vec::new());
            }
            if seq[i] < seq[j] {
                sign = -sign;
            }
        }
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    (sign, sorted)
}

pub fn regularize_strict(seq: &[u32]) -> SignedLabel {
    let (sign, sorted) = sort_sign(seq);
    if sign == 0 {
        return SignedLabel::vanishing();
    }
    let label = StrictPartition::new(sorted).expect("sorted without repeats");
    SignedLabel {
        sign,
        label: Some(Label::Strict(label)),
    }
}

pub fn regularize_frobenius(arms: &[u32], legs: &[u32]) -> Result<SignedLabel> {
    if arms.len() != legs.len() {
        return Err(Error::Shape(format!(
            "{} arms against {} legs",
            arms.len(),
            legs.len()
        )));
    }
    let (sa, arms) = sort_sign(arms);
    let (sl, legs) = sort_sign(legs);
    if sa == 0 || sl == 0 {
        return Ok(SignedLabel::vanishing());
    }
    let label = Frobenius::new(arms, legs)?;
    Ok(SignedLabel {
        sign: sa * sl,
        label: Some(Label::Frobenius(label)),
    })
}

/// Schur function of the interval φ_{a,b}, shifted back to φ contents.
/// Null strips give 1 and empty ones 0.
pub fn strip_schur(phi: &CuttingStrip, s: StripRef, n: u32) -> Result<Poly> {
    if s.is_null() {
        return Ok(Poly::one());
    }
    if s.is_empty() {
        return Ok(Poly::zero());
    }
    let r = realize_strip(phi, s)?;
    Ok(schur9(&r.shape, n).shift(r.shift))
}

/// Q-function of φ_{a,b} laid out from the main diagonal, shifted by a.
pub fn strip_q(phi: &CuttingStrip, s: StripRef, n: u32) -> Result<Poly> {
    if s.is_null() {
        return Ok(Poly::one());
    }
    if s.is_empty() {
        return Ok(Poly::zero());
    }
    let r = realize_shifted_strip(phi, s)?;
    Ok(qfun9(&r.shape, n).shift(r.shift))
}
