//! Independent oracles shared by the integration tests and the
//! acceptance runner.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hopfforge::presets::build_str;
use hopfforge::{HopfPresentation, NcPoly, Scalar, TensorPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const ALL_PRESETS: &[&str] = &[
    "F:t=0",
    "F:t=1",
    "F:t=2",
    "A:b=1,xi=2",
    "A:b=2,xi=-1",
    "C:m=2",
    "C:m=3",
    "E:n=1",
    "E:n=2",
    "Zn:n=2",
    "heis",
    "zxz2",
    "env:sl2",
    "env:heis",
];

pub fn preset(sel: &str) -> HopfPresentation {
    build_str(sel).unwrap_or_else(|e| panic!("{sel}: {e}"))
}

/// A word of F(t) as the exponents of x between consecutive y letters.
type FWord = Vec<i64>;

/// Δ of `x^{e_0} y x^{e_1} .. y x^{e_n}` in F(t) by expanding every y
/// into `y ⊗ 1` or `x^t ⊗ y`.
fn f_coproduct(t: i64, w: &FWord) -> BTreeMap<(FWord, FWord), i64> {
    let n = w.len() - 1;
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let mut left = vec![w[0]];
        let mut right = vec![w[0]];
        for k in 0..n {
            if mask & (1 << k) == 0 {
                left.push(w[k + 1]);
                *right.last_mut().unwrap() += w[k + 1];
            } else {
                *left.last_mut().unwrap() += t + w[k + 1];
                right.push(w[k + 1]);
            }
        }
        *out.entry((left, right)).or_insert(0) += 1;
    }
    out
}

/// Words of F(t) with at most `max_y` letters y and every x-exponent
/// in `[-e, e]`.
fn f_window(max_y: usize, e: i64) -> Vec<FWord> {
    let mut out: Vec<FWord> = Vec::new();
    let mut layer: Vec<FWord> = (-e..=e).map(|i| vec![i]).collect();
    for _ in 0..=max_y {
        out.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for w in &layer {
            for i in -e..=e {
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// Rank of a dense rational matrix by Gauss-Jordan elimination.
pub fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(pivot) {
                    *x = x.clone() - p * f.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of `{f : Δf = f ⊗ x^u + x^v ⊗ f}` over the window of F(t),
/// from a dense solve of the coefficient equations.
pub fn f_skew_primitive_dim(t: i64, u: i64, v: i64, max_y: usize, e: i64) -> usize {
    let words = f_window(max_y, e);
    let mut cols: Vec<BTreeMap<(FWord, FWord), i64>> = Vec::new();
    for w in &words {
        let mut col = f_coproduct(t, w);
        *col.entry((w.clone(), vec![u])).or_insert(0) -= 1;
        *col.entry((vec![v], w.clone())).or_insert(0) -= 1;
        cols.push(col);
    }
    let keys: Vec<(FWord, FWord)> = {
        let mut k: Vec<_> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
        k.sort();
        k.dedup();
        k
    };
    let m: Vec<Vec<BigRational>> = keys
        .iter()
        .map(|k| {
            cols.iter()
                .map(|c| BigRational::from_integer(BigInt::from(*c.get(k).unwrap_or(&0))))
                .collect()
        })
        .collect();
    words.len() - dense_rank(m)
}

/// `Δ(p)Δ(q)` with components renormalized.
pub fn tensor_product(h: &HopfPresentation, a: &TensorPoly<2>, b: &TensorPoly<2>) -> TensorPoly<2> {
    let mut out = TensorPoly::zero();
    for ([a1, a2], c) in a.iter() {
        for ([b1, b2], d) in b.iter() {
            let l = h.algebra().word_mul(a1, b1).unwrap();
            let r = h.algebra().word_mul(a2, b2).unwrap();
            out.add_scaled(&TensorPoly::outer(&l, &r).unwrap(), &(c * d))
                .unwrap();
        }
    }
    out
}

/// Heisenberg group law on Mal'cev coordinates for `yx = xyz^-1`.
pub fn heis_mul(p: (i64, i64, i64), q: (i64, i64, i64)) -> (i64, i64, i64) {
    (p.0 + q.0, p.1 + q.1, p.2 + q.2 - p.1 * q.0)
}

/// The element `x^a y^b z^c` of the Heisenberg preset.
pub fn heis_elem(h: &HopfPresentation, (a, b, c): (i64, i64, i64)) -> NcPoly {
    NcPoly::word(h.word(&[("x", a), ("y", b), ("z", c)]).unwrap())
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}
