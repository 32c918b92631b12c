//! Twist automorphisms of `π1(F)` for the genus `g` surface with one
//! boundary component, derived from its hyperelliptic branched double
//! cover over the disk with `2g + 1` marked points.
//!
//! The orbifold group of the disk is `⟨s1, …, s(2g+1) | si² = 1⟩`; `π1(F)`
//! is the subgroup of even words, free on `uk = sk s(k+1)`. The chain twist
//! about the `k`-th curve lifts the half twist `σk`, whose Artin action is
//! `sk ↦ sk s(k+1) sk`, `s(k+1) ↦ sk`. The curves `D(k)` and `E(k)` are the
//! two lifts of the circle around the points `1 … 2k`; a lift of a path in
//! the base lies on sheet `p` where `p` is the parity of the prefix it has
//! traversed, and the twist about one lift only modifies crossings on its
//! own sheet.
//!
//! The free basis `x_i, y_i` is chosen so that `(s1 ⋯ s(2g+1))²` is exactly
//! `[x1, y1] ⋯ [xg, yg]`: `x_i = u(2i−1)`, `y_g = u(2g)⁻¹` and
//! `y_i = x(i+1) y(i+1) x(i+1)⁻¹ u(2i)⁻¹`.

use crate::surface::{BasicTwist, CurveId, Sign};

use super::{boundary_letters, free_reduce_into, invert};

/// Orbifold letters are `1..=2g+1`; every letter is an involution.
fn reduce_s(w: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for c in w {
        if out.last() == Some(&c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

fn substitute(w: &[i32], table: &[Vec<i32>]) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in w {
        let img = &table[l.unsigned_abs() as usize - 1];
        if l > 0 {
            for &c in img {
                free_reduce_into(&mut out, c);
            }
        } else {
            for &c in img.iter().rev() {
                free_reduce_into(&mut out, -c);
            }
        }
    }
    out
}

/// Images of `x_i` (index `2i−1`) and `y_i` (index `2i`) as words in `uk`.
fn xy_in_u(g: usize) -> Vec<Vec<i32>> {
    let mut x = vec![Vec::new(); g + 1];
    let mut y = vec![Vec::new(); g + 1];
    for (i, xi) in x.iter_mut().enumerate().skip(1) {
        *xi = vec![2 * i as i32 - 1];
    }
    y[g] = vec![-(2 * g as i32)];
    for i in (1..g).rev() {
        let mut w = x[i + 1].clone();
        w.extend(&y[i + 1]);
        w.extend(invert(&x[i + 1]));
        w.push(-(2 * i as i32));
        let mut red = Vec::new();
        for c in w {
            free_reduce_into(&mut red, c);
        }
        y[i] = red;
    }
    (1..=g).flat_map(|i| [x[i].clone(), y[i].clone()]).collect()
}

/// Inverse change of basis: each `uk` as a word in `x_i, y_i`.
fn u_in_xy(g: usize) -> Vec<Vec<i32>> {
    let x = |i: usize| 2 * i as i32 - 1;
    let y = |i: usize| 2 * i as i32;
    (1..=2 * g)
        .map(|k| {
            if k % 2 == 1 {
                vec![x(k.div_ceil(2))]
            } else if k == 2 * g {
                vec![-y(g)]
            } else {
                let i = k / 2;
                vec![-y(i), x(i + 1), y(i + 1), -x(i + 1)]
            }
        })
        .collect()
}

fn u_to_s(w: &[i32]) -> Vec<u32> {
    reduce_s(w.iter().flat_map(|&l| {
        let k = l.unsigned_abs();
        if l > 0 {
            [k, k + 1]
        } else {
            [k + 1, k]
        }
    }))
}

fn s_to_u(w: &[u32]) -> Vec<i32> {
    debug_assert!(w.len().is_multiple_of(2));
    let mut out = Vec::new();
    for pair in w.chunks(2) {
        let (a, b) = (pair[0] as i32, pair[1] as i32);
        if a < b {
            for k in a..b {
                free_reduce_into(&mut out, k);
            }
        } else {
            for k in (b..a).rev() {
                free_reduce_into(&mut out, -k);
            }
        }
    }
    out
}

fn artin(k: u32, sign: Sign, w: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &c in w {
        match sign {
            Sign::Pos if c == k => out.extend([k, k + 1, k]),
            Sign::Pos if c == k + 1 => out.push(k),
            Sign::Neg if c == k => out.push(k + 1),
            Sign::Neg if c == k + 1 => out.extend([k + 1, k, k + 1]),
            _ => out.push(c),
        }
    }
    reduce_s(out)
}

/// Twist about the lift on `sheet` of the circle enclosing points
/// `1..=inner`.
fn sheet_twist(sheet: usize, sign: Sign, inner: u32, w: &[u32]) -> Vec<u32> {
    let around: Vec<u32> = match sign {
        Sign::Pos => (1..=inner).collect(),
        Sign::Neg => (1..=inner).rev().collect(),
    };
    let back: Vec<u32> = around.iter().rev().copied().collect();
    let mut out = Vec::with_capacity(w.len() * 3);
    for (j, &c) in w.iter().enumerate() {
        if c > inner {
            out.push(c);
        } else if j % 2 == sheet {
            // inward crossing happens on this sheet
            out.extend(&around);
            out.push(c);
        } else {
            // outward crossing, after the branch point swapped sheets
            out.push(c);
            out.extend(&back);
        }
    }
    reduce_s(out)
}

/// Images of the generators `x1, y1, …, xg, yg` under the twist.
pub(crate) fn twist_images(genus: u32, twist: BasicTwist) -> Vec<Vec<i32>> {
    let g = genus as usize;
    if twist.base == CurveId::Delta {
        // the boundary twist conjugates by the boundary word
        let bd = boundary_letters(genus);
        let (pre, post) = match twist.sign {
            Sign::Pos => (bd.clone(), invert(&bd)),
            Sign::Neg => (invert(&bd), bd),
        };
        return (1..=2 * g as i32)
            .map(|z| {
                let mut out = Vec::new();
                for &c in pre.iter().chain([z].iter()).chain(post.iter()) {
                    free_reduce_into(&mut out, c);
                }
                out
            })
            .collect();
    }
    let to_u = xy_in_u(g);
    let to_xy = u_in_xy(g);
    let act = |w: &[u32]| -> Vec<u32> {
        match twist.base {
            CurveId::A(_) | CurveId::B(_) => {
                artin(twist.base.chain_index().unwrap(), twist.sign, w)
            }
            CurveId::D(k) => sheet_twist(0, twist.sign, 2 * k, w),
            CurveId::E(k) => sheet_twist(1, twist.sign, 2 * k, w),
            CurveId::Delta => unreachable!(),
        }
    };
    to_u.iter()
        .map(|u| {
            let s = u_to_s(u);
            let image_u = s_to_u(&act(&s));
            substitute(&image_u, &to_xy)
        })
        .collect()
}
