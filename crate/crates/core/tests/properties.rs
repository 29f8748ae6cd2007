mod common;

use proptest::prelude::*;
use proptest::sample::subsequence;

use common::*;
use schur9::corollaries::epsilon;
use schur9::identities::{decompose_for, det_eval, ham_matrix_of, hg_matrix_of, pf_eval};
use schur9::shapes::{Cell, ShapeRef, ShiftedSkewShape, SkewShape};
use schur9::strips::StripSpec;
use schur9::tableaux::{
    enumerate_primed, enumerate_ssyt, qfun9, regularize_frobenius, regularize_strict, schur9,
};
use schur9::weights::{SpecScheme, Var};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 128,
        ..ProptestConfig::default()
    }
}

fn partition(max_part: u32, max_len: usize, max_size: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .prop_filter("too many boxes", move |v| v.iter().sum::<u32>() <= max_size)
}

fn strict(max_part: u32, max_size: u32) -> impl Strategy<Value = Vec<u32>> {
    subsequence(
        (1..=max_part).rev().collect::<Vec<_>>(),
        0..=max_part as usize,
    )
    .prop_filter("too many boxes", move |v| v.iter().sum::<u32>() <= max_size)
}

prop_compose! {
    fn skew_shape(max_size: u32)(outer in partition(4, 4, max_size))
        (inner in sub(outer.clone(), false), outer in Just(outer)) -> SkewShape {
        skew(&outer, &inner)
    }
}

prop_compose! {
    fn shifted_shape(max_size: u32)(outer in strict(5, max_size))
        (inner in sub(outer.clone(), true), outer in Just(outer)) -> ShiftedSkewShape {
        shifted(&outer, &inner)
    }
}

/// Parts bounded by `outer` and non-increasing (decreasing when strict).
fn sub(outer: Vec<u32>, strict: bool) -> impl Strategy<Value = Vec<u32>> {
    let bounds = outer.clone();
    prop::collection::vec(0..=5u32, outer.len()).prop_map(move |raw| {
        let mut inner = Vec::new();
        let mut cap = u32::MAX;
        for (r, &o) in raw.iter().zip(&bounds) {
            let hi = o.min(if strict { cap.saturating_sub(1) } else { cap });
            let q = r % (hi + 1);
            if q == 0 {
                break;
            }
            inner.push(q);
            cap = q;
        }
        inner
    })
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

fn perm_sign(p: &[usize]) -> i64 {
    if inversions(p).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn parity_of<T: Ord>(v: &[T]) -> i8 {
    let inv = (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| v[i] < v[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every word of the given length over 1..=top.
fn words(len: usize, top: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| (1..=top).map(move |k| [w.clone(), vec![k]].concat()))
            .collect();
    }
    out
}

fn at(cells: &[Cell], word: &[u32], row: i32, col: i32) -> Option<u32> {
    cells
        .iter()
        .position(|c| c.row == row && c.col == col)
        .map(|i| word[i])
}

/// Rows weak, columns strict.
fn semistandard(cells: &[Cell], word: &[u32]) -> bool {
    cells.iter().zip(word).all(|(c, &v)| {
        at(cells, word, c.row, c.col + 1).is_none_or(|r| v <= r)
            && at(cells, word, c.row + 1, c.col).is_none_or(|d| v < d)
    })
}

/// Codes 2k-1 for k' and 2k for k: weak in rows and columns, primed values
/// strict along rows, unprimed strict down columns.
fn primed_valid(cells: &[Cell], word: &[u32]) -> bool {
    cells.iter().zip(word).all(|(c, &v)| {
        let right =
            at(cells, word, c.row, c.col + 1).is_none_or(|r| v < r || (v == r && v % 2 == 0));
        let down =
            at(cells, word, c.row + 1, c.col).is_none_or(|d| v < d || (v == d && v % 2 == 1));
        right && down
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn determinant_matches_tableau_sum(shape in skew_shape(7), strip in prop::sample::select(&SCHUR_STRIPS[..]), n in 1..=3u32) {
        let spec: StripSpec = strip.parse().unwrap();
        let d = decompose_for(ShapeRef::Skew(&shape), &spec).unwrap();
        let lm = hg_matrix_of(&d, n).unwrap();
        prop_assert_eq!(det_eval(&lm.matrix), schur9(&shape, n));
    }

    #[test]
    fn pfaffian_matches_tableau_sum(shape in shifted_shape(7), strip in prop::sample::select(&Q_STRIPS[..]), n in 1..=2u32) {
        let spec: StripSpec = strip.parse().unwrap();
        let d = decompose_for(ShapeRef::Shifted(&shape), &spec).unwrap();
        let lm = ham_matrix_of(&d, n).unwrap();
        prop_assert!(lm.matrix.is_antisymmetric());
        let pf = pf_eval(&lm.matrix).unwrap();
        prop_assert_eq!(&pf * &pf, det_eval(&lm.matrix));
        prop_assert_eq!(pf, qfun9(&shape, n));
    }

    #[test]
    fn pfaffian_sign_under_relabelling(shape in shifted_shape(7), seed in any::<prop::sample::Index>()) {
        let d = decompose_for(ShapeRef::Shifted(&shape), &"row".parse().unwrap()).unwrap();
        let m = ham_matrix_of(&d, 2).unwrap().matrix;
        let all = permutations(m.order());
        let perm = &all[seed.index(all.len())];
        let pf = pf_eval(&m).unwrap();
        let moved = pf_eval(&m.permuted(perm)).unwrap();
        prop_assert_eq!(moved, if perm_sign(perm) == 1 { pf.clone() } else { -&pf });
    }

    #[test]
    fn determinant_ignores_strip_order(shape in skew_shape(7), strip in prop::sample::select(&SCHUR_STRIPS[..]), seed in any::<prop::sample::Index>()) {
        let d = decompose_for(ShapeRef::Skew(&shape), &strip.parse().unwrap()).unwrap();
        let all = permutations(d.len());
        let order = &all[seed.index(all.len())];
        let base = det_eval(&hg_matrix_of(&d, 2).unwrap().matrix);
        prop_assert_eq!(det_eval(&hg_matrix_of(&d.reordered(order), 2).unwrap().matrix), base);
    }

    #[test]
    fn classical_schur_is_symmetric(shape in skew_shape(6), n in 2..=3u32) {
        let p = schur9(&shape, n).specialize(&SpecScheme::Classical).unwrap();
        for k in 1..n as i32 {
            prop_assert_eq!(swap_levels(&p, k), p.clone());
        }
    }

    #[test]
    fn generalised_q_cancels(shape in shifted_shape(6), n in 1..=2u32) {
        let p = qfun9(&shape, n).specialize(&SpecScheme::GeneralisedQ).unwrap();
        prop_assert_eq!(cancel_first_level(&p).degree_in(&Var::t()), 0);
    }

    #[test]
    fn epsilon_counts_pairs(a in prop::collection::vec(0..8u32, 0..6), b in prop::collection::vec(0..8u32, 0..6)) {
        let equal = a.iter().flat_map(|x| b.iter().filter(move |y| *y == x)).count();
        prop_assert_eq!(epsilon(&a, &b) + epsilon(&b, &a) + equal, a.len() * b.len());
    }

    #[test]
    fn strict_regularization_tracks_sign(seq in prop::collection::vec(0..9u32, 0..6), perm_seed in any::<prop::sample::Index>()) {
        let all = permutations(seq.len());
        let perm = &all[perm_seed.index(all.len())];
        let moved: Vec<u32> = perm.iter().map(|&i| seq[i]).collect();
        let (a, b) = (regularize_strict(&seq), regularize_strict(&moved));
        prop_assert_eq!(&a.label, &b.label);
        prop_assert_eq!(b.sign as i64, perm_sign(perm) * a.sign as i64);
        if a.sign != 0 {
            prop_assert_eq!(a.sign, parity_of(&seq));
        }
    }

    #[test]
    fn frobenius_regularization_tracks_sign(arms in prop::collection::vec(0..7u32, 0..4), seed in any::<prop::sample::Index>()) {
        let legs: Vec<u32> = arms.iter().map(|a| (a * 3 + 1) % 7).collect();
        let all = permutations(arms.len());
        let perm = &all[seed.index(all.len())];
        let moved: Vec<u32> = perm.iter().map(|&i| arms[i]).collect();
        let (a, b) = (regularize_frobenius(&arms, &legs).unwrap(), regularize_frobenius(&moved, &legs).unwrap());
        prop_assert_eq!(&a.label, &b.label);
        prop_assert_eq!(b.sign as i64, perm_sign(perm) * a.sign as i64);
    }

    #[test]
    fn semistandard_enumeration_is_complete(shape in skew_shape(5), n in 1..=3u32) {
        let cells = shape.cells();
        let expected = words(cells.len(), n).iter().filter(|w| semistandard(&cells, w)).count();
        prop_assert_eq!(enumerate_ssyt(&shape, n).count(), expected);
    }

    #[test]
    fn primed_enumeration_is_complete(shape in shifted_shape(5), n in 1..=2u32) {
        let cells = shape.cells();
        let expected = words(cells.len(), 2 * n).iter().filter(|w| primed_valid(&cells, w)).count();
        prop_assert_eq!(enumerate_primed(&shape, n).count(), expected);
    }

    #[test]
    fn reflection_mirrors_cells(shape in shifted_shape(9)) {
        let mirror = shape.reflect_antidiagonal();
        let mut expected: Vec<Cell> = shape.cells().into_iter().map(|c| shape.mirror_cell(c)).collect();
        expected.sort();
        let mut got = mirror.cells();
        got.sort();
        prop_assert_eq!(&got, &expected);
        for c in shape.cells() {
            prop_assert_eq!(shape.mirror_cell(c).content(), c.content());
            prop_assert_eq!(shape.mirror_cell(shape.mirror_cell(c)), c);
        }
        if mirror.outer().part(1) == shape.outer().part(1) {
            let mut back = mirror.reflect_antidiagonal().cells();
            back.sort();
            let mut cells = shape.cells();
            cells.sort();
            prop_assert_eq!(back, cells);
        }
    }

    #[test]
    fn separated_pieces_multiply(top in partition(3, 2, 4), bottom in partition(3, 2, 4), n in 1..=2u32) {
        let width = bottom.first().copied().unwrap_or(0);
        let outer: Vec<u32> = top.iter().map(|p| p + width).chain(bottom.iter().copied()).collect();
        let inner = vec![width; top.len()];
        let whole = skew(&outer, if width == 0 { &[] } else { &inner });
        let product = &schur9(&skew(&top, &[]), n).shift(width as i32) * &schur9(&skew(&bottom, &[]), n).shift(-(top.len() as i32));
        prop_assert_eq!(schur9(&whole, n), product);
    }
}

fn permutations(len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |at| {
                    let mut q = p.clone();
                    q.insert(at, k);
                    q
                })
            })
            .collect();
    }
    out
}
