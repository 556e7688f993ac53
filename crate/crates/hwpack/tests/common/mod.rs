//! Brute-force parameter enumeration shared by the integration tests:
//! every multiset of admissible block shapes of the right total dimension,
//! filtered by infinitesimal character, with all character assignments.

use hwpack::arthur_params::{ArthurParameter, DiscreteBlock, UnipotentBlock};
use hwpack::sign::Char;
use hwpack::weights::InfinitesimalCharacter;
use std::collections::BTreeSet;

#[derive(Clone, Copy)]
enum Shape {
    U(u32),
    D(u32, u32),
}

impl Shape {
    fn dim(&self) -> usize {
        match *self {
            Shape::U(d) => d as usize,
            Shape::D(_, a) => 2 * a as usize,
        }
    }

    fn values(&self) -> Vec<i64> {
        match *self {
            Shape::U(d) => {
                let r = (d as i64 - 1) / 2;
                (-r..=r).collect()
            }
            Shape::D(t, a) => {
                let (t, a) = (t as i64, a as i64);
                let (lo, hi) = ((t - a + 1) / 2, (t + a - 1) / 2);
                (lo..=hi).flat_map(|x| [x, -x]).collect()
            }
        }
    }
}

/// Every block shape whose segment stays within `[-top, top]`.
fn shapes(n: usize, top: u32) -> Vec<Shape> {
    let mut v: Vec<Shape> = (0..=top.min(n as u32)).map(|r| Shape::U(2 * r + 1)).collect();
    for a in 1..=n as u32 {
        for t in 1..=2 * top {
            if (t + a) % 2 == 1 && (t + a - 1) / 2 <= top {
                v.push(Shape::D(t, a));
            }
        }
    }
    v
}

fn sub_multiset(small: &[i64], big: &[i64]) -> bool {
    let mut b = big.to_vec();
    for x in small {
        match b.iter().position(|y| y == x) {
            Some(i) => {
                b.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

pub fn brute(chi: &InfinitesimalCharacter, n: usize) -> BTreeSet<ArthurParameter> {
    let all = shapes(n, chi.entries()[0] as u32);
    let target: Vec<i64> = chi.entries().to_vec();
    let mut out = BTreeSet::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        all: &[Shape],
        start: usize,
        left: usize,
        used: &mut Vec<usize>,
        vals: Vec<i64>,
        target: &[i64],
        n: usize,
        out: &mut BTreeSet<ArthurParameter>,
    ) {
        if left == 0 {
            let mut v = vals.clone();
            v.sort_unstable_by(|a, b| b.cmp(a));
            if v != target {
                return;
            }
            let us: Vec<u32> = used.iter().filter_map(|&i| if let Shape::U(d) = all[i] { Some(d) } else { None }).collect();
            let ds: Vec<DiscreteBlock> = used
                .iter()
                .filter_map(|&i| if let Shape::D(t, a) = all[i] { Some(DiscreteBlock::new(t, a)) } else { None })
                .collect();
            for mask in 0u32..(1 << us.len()) {
                let unipotent: Vec<UnipotentBlock> = us
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| UnipotentBlock::new(if mask >> i & 1 == 1 { Char::Sgn } else { Char::Triv }, d))
                    .collect();
                let p = ArthurParameter { n, unipotent, discrete: ds.clone() }.canonicalize();
                if p.validate().is_ok() {
                    out.insert(p);
                }
            }
            return;
        }
        for i in start..all.len() {
            let s = all[i];
            if s.dim() > left {
                continue;
            }
            let mut v = vals.clone();
            v.extend(s.values());
            if !sub_multiset(&v, target) {
                continue;
            }
            used.push(i);
            go(all, i, left - s.dim(), used, v, target, n, out);
            used.pop();
        }
    }
    go(&all, 0, 2 * n + 1, &mut stack, Vec::new(), &target, n, &mut out);
    out
}

