//! Determinant and Pfaffian identities built from outside decompositions,
//! their exact evaluation, and verification reports.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::shapes::{Partition, ShapeRef, ShiftedSkewShape, SkewShape, StrictPartition};
use crate::strips::{
    decompose, decompose_rim, double_strip, hash_op, realize_shifted_strip, realize_strip,
    CuttingStrip, DoubleStrip, OutsideDecomposition, Rim, StripKind, StripRef, StripSpec,
};
use crate::tableaux::{qfun9, schur9, strip_q, strip_schur};
use crate::weights::Poly;

pub const SCHEMA: &str = "schur9/1";

/// Square matrix of weight polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let s = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != s) {
            return Err(Error::Shape(format!(
                "row {bad} has {} entries, expected {s}",
                rows[bad].len()
            )));
        }
        Ok(PolyMatrix { rows })
    }

    pub fn zeros(order: usize) -> Self {
        PolyMatrix {
            rows: vec![vec![Poly::zero(); order]; order],
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn is_antisymmetric(&self) -> bool {
        let s = self.order();
        (0..s).all(|i| {
            self.rows[i][i].is_zero() && (0..i).all(|j| self.rows[i][j] == -&self.rows[j][i])
        })
    }

    /// Entry (i, j) of the result is entry (perm[i], perm[j]) of self.
    pub fn permuted(&self, perm: &[usize]) -> PolyMatrix {
        PolyMatrix {
            rows: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }
}

/// Determinant by Laplace expansion along rows, memoized on the set of used columns.
pub fn det_eval(m: &PolyMatrix) -> Poly {
    let s = m.order();
    assert!(s < 64, "matrix too large for subset expansion");
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    det_rec(m, 0, &mut memo)
}

fn det_rec(m: &PolyMatrix, used: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    let s = m.order();
    let row = used.count_ones() as usize;
    if row == s {
        return Poly::one();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = Poly::zero();
    let mut free = 0;
    for j in 0..s {
        if used >> j & 1 == 1 {
            continue;
        }
        let e = &m.rows[row][j];
        if !e.is_zero() {
            let minor = det_rec(m, used | 1 << j, memo);
            if !minor.is_zero() {
                let t = e * &minor;
                if free % 2 == 0 {
                    acc += &t;
                } else {
                    acc += &(-t);
                }
            }
        }
        free += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Pfaffian by expansion along the first remaining row.
pub fn pf_eval(m: &PolyMatrix) -> Result<Poly> {
    let s = m.order();
    if s % 2 == 1 {
        return Err(Error::Shape(format!("Pfaffian of odd order {s}")));
    }
    if !m.is_antisymmetric() {
        return Err(Error::Shape(
            "Pfaffian of a matrix that is not antisymmetric".into(),
        ));
    }
    assert!(s < 64, "matrix too large for subset expansion");
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    Ok(pf_rec(m, 0, &mut memo))
}

fn pf_rec(m: &PolyMatrix, used: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    let s = m.order();
    let Some(i) = (0..s).find(|&i| used >> i & 1 == 0) else {
        return Poly::one();
    };
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = Poly::zero();
    let mut t = 0;
    for j in i + 1..s {
        if used >> j & 1 == 1 {
            continue;
        }
        let e = &m.rows[i][j];
        if !e.is_zero() {
            let rest = pf_rec(m, used | 1 << i | 1 << j, memo);
            if !rest.is_zero() {
                let term = e * &rest;
                if t % 2 == 0 {
                    acc += &term;
                } else {
                    acc += &(-term);
                }
            }
        }
        t += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// How a matrix entry was obtained, for reports and for comparing against
/// printed matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryNote {
    /// Strip interval the entry is the function of, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<StripRef>,
    /// Content shift applied to the realized shape.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<i32>,
    /// Realized shape, or a symbolic label for corollary entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
    /// -1, 0 or 1 in front of the function.
    pub sign: i8,
}

impl EntryNote {
    pub fn zero() -> Self {
        EntryNote {
            interval: None,
            shift: None,
            shape: None,
            sign: 0,
        }
    }

    pub fn one() -> Self {
        EntryNote {
            interval: None,
            shift: None,
            shape: Some("1".into()),
            sign: 1,
        }
    }

    pub fn labelled(sign: i8, label: impl Into<String>) -> Self {
        EntryNote {
            interval: None,
            shift: None,
            shape: Some(label.into()),
            sign,
        }
    }

    pub fn negated(&self) -> Self {
        EntryNote {
            sign: -self.sign,
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("entry notes serialize")
    }
}

/// A matrix together with a note for every entry.
#[derive(Clone, Debug)]
pub struct LabelledMatrix {
    pub matrix: PolyMatrix,
    pub notes: Vec<Vec<EntryNote>>,
}

impl LabelledMatrix {
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn note(&self, i: usize, j: usize) -> &EntryNote {
        &self.notes[i][j]
    }

    pub fn permuted(&self, perm: &[usize]) -> LabelledMatrix {
        LabelledMatrix {
            matrix: self.matrix.permuted(perm),
            notes: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.notes[i][j].clone()).collect())
                .collect(),
        }
    }

    fn notes_json(&self) -> Value {
        Value::Array(
            self.notes
                .iter()
                .map(|r| Value::Array(r.iter().map(EntryNote::to_json).collect()))
                .collect(),
        )
    }
}

fn strip_note(s: StripRef, sign: i8, shift: i32, shape: String) -> EntryNote {
    EntryNote {
        interval: Some(s),
        shift: Some(shift),
        shape: Some(shape),
        sign,
    }
}

fn unshifted_entry(phi: &CuttingStrip, s: StripRef, n: u32) -> Result<(Poly, EntryNote)> {
    if s.is_null() {
        return Ok((
            Poly::one(),
            EntryNote {
                interval: Some(s),
                ..EntryNote::one()
            },
        ));
    }
    if s.is_empty() {
        return Ok((
            Poly::zero(),
            EntryNote {
                interval: Some(s),
                ..EntryNote::zero()
            },
        ));
    }
    let r = realize_strip(phi, s)?;
    Ok((
        strip_schur(phi, s, n)?,
        strip_note(s, 1, r.shift, r.shape.to_string()),
    ))
}

fn shifted_entry(phi: &CuttingStrip, s: StripRef, n: u32) -> Result<(Poly, EntryNote)> {
    if s.is_null() {
        return Ok((
            Poly::one(),
            EntryNote {
                interval: Some(s),
                ..EntryNote::one()
            },
        ));
    }
    if s.is_empty() {
        return Ok((
            Poly::zero(),
            EntryNote {
                interval: Some(s),
                ..EntryNote::zero()
            },
        ));
    }
    let r = realize_shifted_strip(phi, s)?;
    Ok((
        strip_q(phi, s, n)?,
        strip_note(s, 1, r.shift, r.shape.to_string()),
    ))
}

/// Q-function of the pair of diagonal extensions ending at `bp` and `bq`,
/// signed so that the result is antisymmetric in the two ends.
fn pair_entry(phi: &CuttingStrip, bp: i32, bq: i32, n: u32) -> (Poly, EntryNote) {
    let note = |sign: i8, shape: Option<String>| EntryNote {
        interval: Some(StripRef::new(bp, bq)),
        shift: None,
        shape,
        sign,
    };
    if bp == bq {
        return (Poly::zero(), note(0, None));
    }
    if let DoubleStrip::Regular(shape) = double_strip(phi, bp, bq) {
        return (qfun9(&shape, n), note(1, Some(shape.to_string())));
    }
    if let DoubleStrip::Regular(shape) = double_strip(phi, bq, bp) {
        return (-qfun9(&shape, n), note(-1, Some(shape.to_string())));
    }
    (Poly::zero(), note(0, None))
}

/// Fill the entries whose value is not fixed by a null strip, in parallel,
/// evaluating every distinct key once.
fn fill<K, F>(
    cells: Vec<((usize, usize), K)>,
    eval: F,
) -> Result<HashMap<(usize, usize), (Poly, EntryNote)>>
where
    K: Copy + Eq + std::hash::Hash + Ord + Send + Sync,
    F: Fn(K) -> Result<(Poly, EntryNote)> + Sync,
{
    let keys: Vec<K> = cells
        .iter()
        .map(|(_, k)| *k)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let values: Vec<(K, (Poly, EntryNote))> = keys
        .into_par_iter()
        .map(|k| eval(k).map(|v| (k, v)))
        .collect::<Result<_>>()?;
    let table: HashMap<K, (Poly, EntryNote)> = values.into_iter().collect();
    Ok(cells
        .into_iter()
        .map(|(pos, k)| (pos, table[&k].clone()))
        .collect())
}

fn unit(i: usize, j: usize) -> (Poly, EntryNote) {
    if i == j {
        (Poly::one(), EntryNote::one())
    } else {
        (Poly::zero(), EntryNote::zero())
    }
}

/// Determinant matrix of a decomposition of an ordinary skew shape.
pub fn hg_matrix_of(d: &OutsideDecomposition, n: u32) -> Result<LabelledMatrix> {
    let phi = d.strip();
    let pieces = d.pieces();
    let s = pieces.len();
    let mut pending = Vec::new();
    let mut fixed = HashMap::new();
    for p in 0..s {
        for q in 0..s {
            if pieces[p].is_sink() || pieces[q].is_source() {
                fixed.insert((p, q), unit(p, q));
            } else {
                pending.push(((p, q), hash_op(pieces[p].interval, pieces[q].interval)));
            }
        }
    }
    fixed.extend(fill(pending, |iv| unshifted_entry(phi, iv, n))?);
    Ok(assemble(s, fixed))
}

fn assemble(s: usize, mut entries: HashMap<(usize, usize), (Poly, EntryNote)>) -> LabelledMatrix {
    let mut rows = Vec::with_capacity(s);
    let mut notes = Vec::with_capacity(s);
    for i in 0..s {
        let mut r = Vec::with_capacity(s);
        let mut nr = Vec::with_capacity(s);
        for j in 0..s {
            let (v, note) = entries
                .remove(&(i, j))
                .unwrap_or_else(|| (Poly::zero(), EntryNote::zero()));
            r.push(v);
            nr.push(note);
        }
        rows.push(r);
        notes.push(nr);
    }
    LabelledMatrix {
        matrix: PolyMatrix { rows },
        notes,
    }
}

pub fn hg_matrix(shape: &SkewShape, phi: &CuttingStrip, n: u32) -> Result<LabelledMatrix> {
    hg_matrix_of(&decompose(ShapeRef::Skew(shape), phi)?, n)
}

/// Pfaffian matrix of a decomposition of a shifted skew shape. The first
/// `leading` strips run through the diagonal (plus the parity null strip);
/// the right block lists the remaining strips in reverse.
pub fn ham_matrix_of(d: &OutsideDecomposition, n: u32) -> Result<LabelledMatrix> {
    let phi = d.strip();
    let pieces = d.pieces();
    let s = pieces.len();
    let r = d.leading();
    let order = 2 * s - r;
    let mut pairs = Vec::new();
    let mut strips = Vec::new();
    let mut fixed = HashMap::new();
    for p in 0..s {
        for q in p + 1..s {
            if pieces[p].is_source() || pieces[q].is_source() {
                fixed.insert((p, q), (Poly::zero(), EntryNote::zero()));
            } else {
                pairs.push(((p, q), (pieces[p].interval.b, pieces[q].interval.b)));
            }
        }
        for k in r + 1..=s {
            let col = s + k - r - 1;
            let src = s + r - k;
            if pieces[src].is_sink() || pieces[p].is_source() {
                fixed.insert((p, col), unit(src, p));
            } else {
                strips.push(((p, col), hash_op(pieces[src].interval, pieces[p].interval)));
            }
        }
    }
    fixed.extend(fill(pairs, |(bp, bq)| Ok(pair_entry(phi, bp, bq, n)))?);
    fixed.extend(fill(strips, |iv| shifted_entry(phi, iv, n))?);
    let upper: Vec<((usize, usize), (Poly, EntryNote))> = fixed.into_iter().collect();
    let mut all = HashMap::new();
    for ((i, j), (v, note)) in upper {
        all.insert((j, i), (-&v, note.negated()));
        all.insert((i, j), (v, note));
    }
    for i in 0..order {
        all.insert((i, i), (Poly::zero(), EntryNote::zero()));
    }
    Ok(assemble(order, all))
}

pub fn ham_matrix(shape: &ShiftedSkewShape, phi: &CuttingStrip, n: u32) -> Result<LabelledMatrix> {
    ham_matrix_of(&decompose(ShapeRef::Shifted(shape), phi)?, n)
}

/// Decomposition used for a named or explicit strip: the rims also carry
/// their point null strips.
pub fn decompose_for(shape: ShapeRef<'_>, spec: &StripSpec) -> Result<OutsideDecomposition> {
    match spec {
        StripSpec::Kind(StripKind::InnerRim) => decompose_rim(shape, Rim::Inner),
        StripSpec::Kind(StripKind::OuterRim) => decompose_rim(shape, Rim::Outer),
        _ => decompose(shape, &spec.resolve(shape)),
    }
}

/// Which evaluation produced the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Evaluation {
    Det,
    Pfaffian,
}

/// Settings shared by all verifications.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Add 1 to one matrix entry (keeping antisymmetry) before evaluating.
    pub perturb: bool,
}

/// Outcome of comparing a tableau-side polynomial with a matrix evaluation.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub name: String,
    pub lambda: String,
    pub mu: String,
    pub strip: String,
    pub n: u32,
    pub evaluation: Evaluation,
    pub lhs: Poly,
    pub rhs: Poly,
    pub equal: bool,
    pub elapsed_ms: u128,
    pub matrix: Option<LabelledMatrix>,
}

impl VerifyReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        lambda: String,
        mu: String,
        strip: String,
        n: u32,
        evaluation: Evaluation,
        lhs: Poly,
        rhs: Poly,
        matrix: Option<LabelledMatrix>,
        started: Instant,
    ) -> Self {
        let equal = lhs == rhs;
        VerifyReport {
            name: name.into(),
            lambda,
            mu,
            strip,
            n,
            evaluation,
            lhs,
            rhs,
            equal,
            elapsed_ms: started.elapsed().as_millis(),
            matrix,
        }
    }

    pub fn lhs_terms(&self) -> usize {
        self.lhs.num_terms()
    }

    pub fn rhs_terms(&self) -> usize {
        self.rhs.num_terms()
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "name": self.name,
            "lambda": self.lambda,
            "mu": self.mu,
            "strip": self.strip,
            "n": self.n,
            "evaluation": self.evaluation,
            "equal": self.equal,
            "lhs_terms": self.lhs_terms(),
            "rhs_terms": self.rhs_terms(),
            "matrix": self.matrix.as_ref().map(LabelledMatrix::notes_json).unwrap_or(Value::Null),
        });
        if timing {
            v["elapsed_ms"] = json!(self.elapsed_ms as u64);
        }
        v
    }

    pub fn summary(&self, timing: bool) -> String {
        let mut line = format!(
            "{} {} lambda={} mu={} strip={} n={} lhs_terms={} rhs_terms={}",
            if self.equal { "EQUAL" } else { "DIFFERENT" },
            self.name,
            self.lambda,
            self.mu,
            self.strip,
            self.n,
            self.lhs_terms(),
            self.rhs_terms()
        );
        if timing {
            line.push_str(&format!(" elapsed_ms={}", self.elapsed_ms));
        }
        line
    }
}

/// Add 1 at (0, 0) of a determinant matrix, or at (0, 1) and -1 at (1, 0) of
/// a Pfaffian matrix. Returns false when the matrix is too small.
pub fn perturb(m: &mut PolyMatrix, evaluation: Evaluation) -> bool {
    match evaluation {
        Evaluation::Det if m.order() >= 1 => {
            let v = m.get(0, 0) + &Poly::one();
            m.set(0, 0, v);
            true
        }
        Evaluation::Pfaffian if m.order() >= 2 => {
            let v = m.get(0, 1) + &Poly::one();
            m.set(1, 0, -&v);
            m.set(0, 1, v);
            true
        }
        _ => false,
    }
}

/// Evaluate a labelled matrix, applying the perturbation if asked. An empty
/// matrix under perturbation evaluates to 2 instead of 1.
pub fn evaluate(
    lm: &mut LabelledMatrix,
    evaluation: Evaluation,
    opts: &VerifyOptions,
) -> Result<Poly> {
    let bumped = opts.perturb && perturb(&mut lm.matrix, evaluation);
    let v = match evaluation {
        Evaluation::Det => det_eval(&lm.matrix),
        Evaluation::Pfaffian => pf_eval(&lm.matrix)?,
    };
    Ok(if opts.perturb && !bumped {
        v + Poly::one()
    } else {
        v
    })
}

fn strip_label(d: &OutsideDecomposition, spec: Option<&StripSpec>) -> String {
    match spec {
        Some(StripSpec::Profile(_)) | None => d.strip().to_string(),
        Some(s) => format!("{s} = {}", d.strip()),
    }
}

pub fn verify_schur_decomposition(
    shape: &SkewShape,
    d: &OutsideDecomposition,
    n: u32,
    spec: Option<&StripSpec>,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut lm = hg_matrix_of(d, n)?;
    let rhs = evaluate(&mut lm, Evaluation::Det, opts)?;
    let lhs = schur9(shape, n);
    Ok(VerifyReport::new(
        "det",
        shape.outer().to_string(),
        shape.inner().to_string(),
        strip_label(d, spec),
        n,
        Evaluation::Det,
        lhs,
        rhs,
        Some(lm),
        started,
    ))
}

pub fn verify_q_decomposition(
    shape: &ShiftedSkewShape,
    d: &OutsideDecomposition,
    n: u32,
    spec: Option<&StripSpec>,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut lm = ham_matrix_of(d, n)?;
    let rhs = evaluate(&mut lm, Evaluation::Pfaffian, opts)?;
    let lhs = qfun9(shape, n);
    Ok(VerifyReport::new(
        "pf",
        shape.outer().to_string(),
        shape.inner().to_string(),
        strip_label(d, spec),
        n,
        Evaluation::Pfaffian,
        lhs,
        rhs,
        Some(lm),
        started,
    ))
}

pub fn verify_schur(shape: &SkewShape, phi: &CuttingStrip, n: u32) -> Result<VerifyReport> {
    let d = decompose(ShapeRef::Skew(shape), phi)?;
    verify_schur_decomposition(shape, &d, n, None, &VerifyOptions::default())
}

pub fn verify_q(shape: &ShiftedSkewShape, phi: &CuttingStrip, n: u32) -> Result<VerifyReport> {
    let d = decompose(ShapeRef::Shifted(shape), phi)?;
    verify_q_decomposition(shape, &d, n, None, &VerifyOptions::default())
}

/// One verification request, as read from a case file or the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub lambda: String,
    #[serde(default)]
    pub mu: String,
    #[serde(default = "default_strip")]
    pub strip: String,
    pub n: u32,
    #[serde(default)]
    pub qfun: bool,
}

fn default_strip() -> String {
    "row".into()
}

fn parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
        })
        .collect()
}

impl Case {
    /// Check and run the case.
    pub fn run(&self, opts: &VerifyOptions) -> Result<VerifyReport> {
        let spec: StripSpec = self.strip.parse()?;
        let (outer, inner) = (parts(&self.lambda)?, parts(&self.mu)?);
        if self.qfun {
            let shape =
                ShiftedSkewShape::new(StrictPartition::new(outer)?, StrictPartition::new(inner)?)?;
            let d = decompose_for(ShapeRef::Shifted(&shape), &spec)?;
            verify_q_decomposition(&shape, &d, self.n, Some(&spec), opts)
        } else {
            let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
            let d = decompose_for(ShapeRef::Skew(&shape), &spec)?;
            verify_schur_decomposition(&shape, &d, self.n, Some(&spec), opts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{Monomial, Var};

    fn v(k: i32, c: i32) -> Poly {
        Poly::var(Var::x(k, c))
    }

    fn running() -> (SkewShape, CuttingStrip) {
        let s = SkewShape::new("5,4,4,2".parse().unwrap(), "3,2".parse().unwrap()).unwrap();
        (s, CuttingStrip::from_letters(-3, "ENEEENE").unwrap())
    }

    #[test]
    fn small_determinants() {
        assert!(det_eval(&PolyMatrix::zeros(0)).is_one());
        let m = PolyMatrix::new(vec![vec![v(1, 0), v(1, 1)], vec![v(2, 0), v(2, 1)]]).unwrap();
        let want = &v(1, 0) * &v(2, 1) - &v(1, 1) * &v(2, 0);
        assert_eq!(det_eval(&m), want);
        assert!(PolyMatrix::new(vec![vec![Poly::one()], vec![]]).is_err());
    }

    #[test]
    fn small_pfaffians() {
        assert!(pf_eval(&PolyMatrix::zeros(0)).unwrap().is_one());
        let a = v(1, 0);
        let m =
            PolyMatrix::new(vec![vec![Poly::zero(), a.clone()], vec![-&a, Poly::zero()]]).unwrap();
        assert_eq!(pf_eval(&m).unwrap(), a);
        assert!(pf_eval(&PolyMatrix::zeros(3)).is_err());
        let lop = PolyMatrix::new(vec![
            vec![Poly::zero(), a.clone()],
            vec![a.clone(), Poly::zero()],
        ])
        .unwrap();
        assert!(pf_eval(&lop).is_err());
    }

    #[test]
    fn pfaffian_squared_is_determinant() {
        let mut m = PolyMatrix::zeros(4);
        let mut k = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                k += 1;
                m.set(i, j, v(k, i as i32));
                m.set(j, i, -v(k, i as i32));
            }
        }
        let pf = pf_eval(&m).unwrap();
        assert_eq!(&pf * &pf, det_eval(&m));
    }

    #[test]
    fn running_determinant_entries() {
        let (s, phi) = running();
        let lm = hg_matrix(&s, &phi, 1).unwrap();
        assert_eq!(lm.order(), 3);
        let shapes: Vec<Vec<Option<(String, i32)>>> = lm
            .notes
            .iter()
            .map(|r| r.iter().map(|e| e.shape.clone().zip(e.shift)).collect())
            .collect();
        // strips sorted as phi[-3,1], phi[-2,-2], phi[1,4]
        assert_eq!(shapes[0][0], Some(("(4,2)/(1)".into(), -2)));
        assert_eq!(shapes[0][2], Some(("(6,5,2)/(4,1)".into(), -1)));
        assert!(lm.note(2, 1).is_zero());
    }

    #[test]
    fn running_determinant_identity() {
        let (s, phi) = running();
        let r = verify_schur(&s, &phi, 3).unwrap();
        assert!(r.equal);
        assert!(r.lhs_terms() > 0);
    }

    #[test]
    fn equal_shapes_give_one() {
        let s = SkewShape::new("2,1".parse().unwrap(), "2,1".parse().unwrap()).unwrap();
        let r = verify_schur(&s, &CuttingStrip::from_letters(0, "").unwrap(), 2).unwrap();
        assert!(r.equal && r.lhs.is_one());
    }

    #[test]
    fn inner_rim_matrix_has_unit_row_and_column() {
        let (s, _) = running();
        let d = decompose_for(ShapeRef::Skew(&s), &"inner".parse().unwrap()).unwrap();
        let lm = hg_matrix_of(&d, 3).unwrap();
        assert_eq!(lm.order(), 5);
        for j in 0..5 {
            assert_eq!(lm.matrix.get(2, j).is_one(), j == 2);
            assert_eq!(lm.matrix.get(j, 4).is_one(), j == 4);
            if j != 2 {
                assert!(lm.matrix.get(2, j).is_zero());
            }
            if j != 4 {
                assert!(lm.matrix.get(j, 4).is_zero());
            }
        }
        assert_eq!(det_eval(&lm.matrix), schur9(&s, 3));
    }

    #[test]
    fn perturbation_breaks_equality() {
        let (s, phi) = running();
        let d = decompose(ShapeRef::Skew(&s), &phi).unwrap();
        let r =
            verify_schur_decomposition(&s, &d, 2, None, &VerifyOptions { perturb: true }).unwrap();
        assert!(!r.equal);
    }

    #[test]
    fn case_parsing() {
        let c: Case = serde_json::from_str(r#"{"lambda":"3,1","n":2}"#).unwrap();
        assert_eq!(c.strip, "row");
        assert!(c.run(&VerifyOptions::default()).unwrap().equal);
        let bad = Case {
            lambda: "1".into(),
            mu: "2".into(),
            strip: "row".into(),
            n: 1,
            qfun: false,
        };
        assert!(matches!(
            bad.run(&VerifyOptions::default()),
            Err(Error::Containment { .. })
        ));
        let m = Monomial::one();
        assert_eq!(
            c.run(&VerifyOptions::default())
                .unwrap()
                .lhs
                .coefficient(&m),
            0.into()
        );
    }

    fn shifted(outer: &str, inner: &str) -> ShiftedSkewShape {
        ShiftedSkewShape::new(outer.parse().unwrap(), inner.parse().unwrap()).unwrap()
    }

    #[test]
    fn running_pfaffian_entries() {
        let s = shifted("9,6,4,2", "4,3");
        let phi = CuttingStrip::from_letters(0, "EENNEEEE").unwrap();
        let lm = ham_matrix(&s, &phi, 1).unwrap();
        assert_eq!(lm.order(), 4);
        let shape = |i: usize, j: usize| lm.note(i, j).shape.clone().unwrap_or_default();
        assert_eq!(shape(0, 1), "(9,4,3,2)/(4,3)");
        assert_eq!(shape(0, 2), "(9,6,4,3)/(4,3)");
        assert_eq!(
            (shape(0, 3), lm.note(0, 3).shift),
            ("(6,1)/(1)".into(), Some(3))
        );
        assert_eq!(
            (shape(2, 3), lm.note(2, 3).shift),
            ("(3,1)/(1)".into(), Some(3))
        );
        assert!(lm.note(1, 3).is_zero() && lm.matrix.get(1, 3).is_zero());
        assert!(lm.matrix.is_antisymmetric());
    }

    #[test]
    fn inner_rim_pfaffian_point_null() {
        let s = shifted("7,6,4,2", "4,3");
        let d = decompose_for(ShapeRef::Shifted(&s), &"inner".parse().unwrap()).unwrap();
        let lm = ham_matrix_of(&d, 2).unwrap();
        assert_eq!(lm.order(), 6);
        let row: Vec<bool> = (0..6).map(|j| lm.matrix.get(3, j).is_one()).collect();
        assert_eq!(row, vec![false, false, false, false, true, false]);
        assert!((0..6)
            .filter(|&j| j != 4)
            .all(|j| lm.matrix.get(3, j).is_zero()));
        assert_eq!(pf_eval(&lm.matrix).unwrap(), qfun9(&s, 2));
    }
}
