#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use schur9::shapes::{Partition, ShiftedSkewShape, SkewShape, StrictPartition};
use schur9::weights::{Poly, Var};

pub fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
    SkewShape::new(
        Partition::new(outer.to_vec()).unwrap(),
        Partition::new(inner.to_vec()).unwrap(),
    )
    .unwrap()
}

pub fn shifted(outer: &[u32], inner: &[u32]) -> ShiftedSkewShape {
    ShiftedSkewShape::new(
        StrictPartition::new(outer.to_vec()).unwrap(),
        StrictPartition::new(inner.to_vec()).unwrap(),
    )
    .unwrap()
}

/// Reads compact labels such as "5431/32" with one digit per part.
pub fn compact(label: &str) -> (Vec<u32>, Vec<u32>) {
    let digits = |s: &str| {
        s.chars()
            .map(|c| c.to_digit(10).unwrap())
            .collect::<Vec<_>>()
    };
    match label.split_once('/') {
        Some((o, i)) => (digits(o), digits(i)),
        None => (digits(label), Vec::new()),
    }
}

/// A partition of a uniformly chosen size in 0..=max.
pub fn random_partition<R: Rng>(rng: &mut R, max: u32) -> Vec<u32> {
    let mut left = rng.gen_range(0..=max);
    let mut parts = Vec::new();
    let mut cap = left;
    while left > 0 {
        let p = rng.gen_range(1..=cap.min(left));
        parts.push(p);
        left -= p;
        cap = p;
    }
    parts
}

pub fn random_subpartition<R: Rng>(rng: &mut R, outer: &[u32]) -> Vec<u32> {
    let mut inner = Vec::new();
    let mut cap = u32::MAX;
    for &p in outer {
        let q = rng.gen_range(0..=p.min(cap));
        if q == 0 {
            break;
        }
        inner.push(q);
        cap = q;
    }
    inner
}

/// Distinct parts with sum at most `max`.
pub fn random_strict<R: Rng>(rng: &mut R, max: u32) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=max).collect();
    pool.shuffle(rng);
    let budget = rng.gen_range(1..=max);
    let mut parts = Vec::new();
    let mut sum = 0;
    for p in pool {
        if sum + p <= budget {
            parts.push(p);
            sum += p;
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

pub fn random_strict_sub<R: Rng>(rng: &mut R, outer: &[u32]) -> Vec<u32> {
    let mut inner = Vec::new();
    let mut cap = u32::MAX;
    for &p in outer {
        let hi = p.min(cap.saturating_sub(1));
        let q = rng.gen_range(0..=hi);
        if q == 0 {
            break;
        }
        inner.push(q);
        cap = q;
    }
    inner
}

pub const SCHUR_STRIPS: [&str; 6] = ["row", "col", "hook", "hook@1", "inner", "outer"];
pub const Q_STRIPS: [&str; 5] = ["row", "col", "hook", "inner", "outer"];

/// Swaps x_k and x_(k+1) in a polynomial in the plain variables.
pub fn swap_levels(p: &Poly, k: i32) -> Poly {
    p.substitute(|v| {
        Ok(Poly::var(match *v {
            v if v == Var::x_plain(k) => Var::x_plain(k + 1),
            v if v == Var::x_plain(k + 1) => Var::x_plain(k),
            v => v,
        }))
    })
    .unwrap()
}

/// Sets x_1 = t and y_1 = -t.
pub fn cancel_first_level(p: &Poly) -> Poly {
    let t = Poly::var(Var::t());
    p.substitute(|v| {
        Ok(if *v == Var::x_plain(1) {
            t.clone()
        } else if *v == Var::y_plain(1) {
            -&t
        } else {
            Poly::var(*v)
        })
    })
    .unwrap()
}
