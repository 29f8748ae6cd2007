//! Exact sparse polynomials in the content-indexed weights x[k,c], y[k,c],
//! the content shift, and specialization maps.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarKind {
    X,
    Y,
    /// Factorial parameter a[j].
    A,
    /// Auxiliary variable used by specialization checks.
    T,
}

impl VarKind {
    fn letter(self) -> &'static str {
        match self {
            VarKind::X => "x",
            VarKind::Y => "y",
            VarKind::A => "a",
            VarKind::T => "t",
        }
    }
}

/// Where a variable is pinned: nowhere, to a content, or to a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Site {
    Free,
    Content(i32),
    Cell(i32, i32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub kind: VarKind,
    pub level: i32,
    pub site: Site,
}

impl Var {
    pub const fn x(k: i32, c: i32) -> Var {
        Var {
            kind: VarKind::X,
            level: k,
            site: Site::Content(c),
        }
    }

    pub const fn y(k: i32, c: i32) -> Var {
        Var {
            kind: VarKind::Y,
            level: k,
            site: Site::Content(c),
        }
    }

    pub const fn x_plain(k: i32) -> Var {
        Var {
            kind: VarKind::X,
            level: k,
            site: Site::Free,
        }
    }

    pub const fn y_plain(k: i32) -> Var {
        Var {
            kind: VarKind::Y,
            level: k,
            site: Site::Free,
        }
    }

    pub const fn x_cell(k: i32, row: i32, col: i32) -> Var {
        Var {
            kind: VarKind::X,
            level: k,
            site: Site::Cell(row, col),
        }
    }

    pub const fn param(j: i32) -> Var {
        Var {
            kind: VarKind::A,
            level: j,
            site: Site::Free,
        }
    }

    pub const fn t() -> Var {
        Var {
            kind: VarKind::T,
            level: 0,
            site: Site::Free,
        }
    }

    pub fn content(&self) -> Option<i32> {
        match self.site {
            Site::Content(c) => Some(c),
            _ => None,
        }
    }

    fn json(&self) -> Value {
        match self.site {
            Site::Free if self.kind == VarKind::T => json!([self.kind.letter()]),
            Site::Free => json!([self.kind.letter(), self.level]),
            Site::Content(c) => json!([self.kind.letter(), self.level, c]),
            Site::Cell(i, j) => json!([self.kind.letter(), self.level, [i, j]]),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.kind.letter();
        match self.site {
            Site::Free if self.kind == VarKind::T => write!(f, "{l}"),
            Site::Free => write!(f, "{l}[{}]", self.level),
            Site::Content(c) => write!(f, "{l}[{},{c}]", self.level),
            Site::Cell(i, j) => write!(f, "{l}[{},({i},{j})]", self.level),
        }
    }
}

/// Product of variables, kept as a sorted multiset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<Var>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<Var>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Powers grouped as (variable, exponent).
    pub fn powers(&self) -> Vec<(Var, usize)> {
        let mut out: Vec<(Var, usize)> = Vec::new();
        for v in &self.0 {
            match out.last_mut() {
                Some((w, e)) if w == v => *e += 1,
                _ => out.push((*v, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.powers().into_iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with integer coefficients; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), BigInt::from(c));
        p
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial(vec![v]), 1)
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, BigInt::from(c));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn from_counts(counts: HashMap<Monomial, u64>) -> Self {
        let terms = counts
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, BigInt::from(c)))
            .collect();
        Poly { terms }
    }

    pub fn scale(&self, s: i64) -> Poly {
        if s == 0 {
            return Poly::zero();
        }
        let s = BigInt::from(s);
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * &s))
                .collect(),
        }
    }

    /// Replace every content c by c + m.
    pub fn shift(&self, m: i32) -> Poly {
        if m == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let vars = mono
                    .0
                    .iter()
                    .map(|v| match v.site {
                        Site::Content(k) => Var {
                            site: Site::Content(k + m),
                            ..*v
                        },
                        _ => *v,
                    })
                    .collect();
                (Monomial::from_vars(vars), c.clone())
            })
            .collect();
        Poly { terms }
    }

    /// Ring homomorphism defined by its value on each variable.
    pub fn substitute<F>(&self, mut image: F) -> Result<Poly>
    where
        F: FnMut(&Var) -> Result<Poly>,
    {
        let mut cache: HashMap<Var, Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (mono, coeff) in &self.terms {
            let mut term = Poly::monomial(Monomial::one(), 1);
            for (v, e) in mono.powers() {
                if let Entry::Vacant(slot) = cache.entry(v) {
                    slot.insert(image(&v)?);
                }
                let base = &cache[&v];
                for _ in 0..e {
                    term = &term * base;
                }
            }
            for (m, c) in term.terms {
                out.add_term(m, c * coeff);
            }
        }
        Ok(out)
    }

    /// Swap kinds x ↔ y and reverse levels k ↦ n+1−k, keeping sites.
    pub fn reverse_swap(&self, n: u32) -> Poly {
        let n = n as i32;
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let vars = mono
                    .0
                    .iter()
                    .map(|v| match v.kind {
                        VarKind::X => Var {
                            kind: VarKind::Y,
                            level: n + 1 - v.level,
                            site: v.site,
                        },
                        VarKind::Y => Var {
                            kind: VarKind::X,
                            level: n + 1 - v.level,
                            site: v.site,
                        },
                        _ => *v,
                    })
                    .collect();
                (Monomial::from_vars(vars), c.clone())
            })
            .collect();
        Poly { terms }
    }

    /// Highest exponent of `v` in any term.
    pub fn degree_in(&self, v: &Var) -> usize {
        self.terms
            .keys()
            .map(|m| m.0.iter().filter(|w| *w == v).count())
            .max()
            .unwrap_or(0)
    }

    pub fn specialize(&self, scheme: &SpecScheme) -> Result<Poly> {
        self.substitute(|v| scheme.image(v))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "coeff": c.to_string(),
                        "vars": m.0.iter().map(Var::json).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

/// Values of the factorial parameters a[j].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorialParams {
    /// Keep a[j] as variables.
    Symbolic,
    /// Every a[j] equals the same integer.
    Constant(i64),
    /// Explicit values; a missing index is an unbound variable.
    Table(BTreeMap<i32, i64>),
}

impl FactorialParams {
    fn value(&self, j: i32) -> Result<Poly> {
        match self {
            FactorialParams::Symbolic => Ok(Poly::var(Var::param(j))),
            FactorialParams::Constant(c) => Ok(Poly::constant(*c)),
            FactorialParams::Table(t) => t
                .get(&j)
                .map(|c| Poly::constant(*c))
                .ok_or_else(|| Error::UnboundVariable(format!("a[{j}]"))),
        }
    }
}

/// Substitution schemes taking content-indexed weights to familiar
/// specializations.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecScheme {
    /// x[k,c], y[k,c] ↦ x[k].
    Classical,
    /// x[k,c] ↦ x[k], y[k,c] ↦ y[k].
    GeneralisedQ,
    /// x[k,c] ↦ x[k] + a[k+c].
    ContentFactorial(FactorialParams),
    /// x[k,c] ↦ x[k] − a[c+1], y[k,c] ↦ x[k] + a[c+1].
    FactorialQ(FactorialParams),
    /// Explicit images; unlisted content-indexed variables are unbound.
    Custom(BTreeMap<Var, Poly>),
}

impl SpecScheme {
    pub fn image(&self, v: &Var) -> Result<Poly> {
        if let SpecScheme::Custom(map) = self {
            return map
                .get(v)
                .cloned()
                .ok_or_else(|| Error::UnboundVariable(v.to_string()));
        }
        let Site::Content(c) = v.site else {
            return Ok(Poly::var(*v));
        };
        let k = v.level;
        let xk = Poly::var(Var::x_plain(k));
        match (self, v.kind) {
            (SpecScheme::Classical, VarKind::X | VarKind::Y) => Ok(xk),
            (SpecScheme::GeneralisedQ, VarKind::X) => Ok(xk),
            (SpecScheme::GeneralisedQ, VarKind::Y) => Ok(Poly::var(Var::y_plain(k))),
            (SpecScheme::ContentFactorial(a), VarKind::X) => Ok(&xk + &a.value(k + c)?),
            (SpecScheme::FactorialQ(a), VarKind::X) => Ok(&xk - &a.value(c + 1)?),
            (SpecScheme::FactorialQ(a), VarKind::Y) => Ok(&xk + &a.value(c + 1)?),
            _ => Err(Error::UnboundVariable(v.to_string())),
        }
    }
}
