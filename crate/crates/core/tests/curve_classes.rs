//! The classes of `d2` and `e2` recovered by exhaustive search from the
//! homology form of the chain relation, using plain `i64` matrices.

use dehn_core::surface::homology_class;
use dehn_core::{CurveId, SurfaceSig};

type M4 = [[i64; 4]; 4];

fn pair(u: &[i64; 4], v: &[i64; 4]) -> i64 {
    u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]
}

/// `x ↦ x + ⟨x, v⟩ v` as a matrix acting on columns.
fn transvection(v: &[i64; 4]) -> M4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0; 4];
            e[j] = 1;
            e[i] + pair(&e, v) * v[i]
        })
    })
}

fn mul(a: &M4, b: &M4) -> M4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

fn class(c: CurveId) -> [i64; 4] {
    homology_class(c, &SurfaceSig::closed(2))
        .unwrap()
        .try_into()
        .unwrap()
}

fn small_vectors() -> Vec<[i64; 4]> {
    let r = -2..=2;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if (a, b, c, d) != (0, 0, 0, 0) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn chain_relation_determines_d2_and_e2() {
    let (a1, b1, a2) = (
        class(CurveId::A(1)),
        class(CurveId::B(1)),
        class(CurveId::A(2)),
    );
    // letters act right to left, so the word a1 b1 a2 is T_a1 T_b1 T_a2
    let block = mul(
        &mul(&transvection(&a1), &transvection(&b1)),
        &transvection(&a2),
    );
    let mut lhs = block;
    for _ in 0..3 {
        lhs = mul(&lhs, &block);
    }
    let candidates: Vec<_> = small_vectors()
        .into_iter()
        .filter(|v| [a1, b1, a2].iter().all(|c| pair(c, v) == 0))
        .collect();
    let mut solutions = Vec::new();
    for d in &candidates {
        for e in &candidates {
            if mul(&transvection(d), &transvection(e)) == lhs {
                solutions.push((*d, *e));
            }
        }
    }
    assert!(!solutions.is_empty());
    // twists only see a class up to sign
    let canonical = |v: [i64; 4]| {
        let first = v.iter().find(|&&x| x != 0).copied().unwrap();
        v.map(|x| x * first.signum())
    };
    for (d, e) in &solutions {
        assert_eq!(canonical(*d), [1, 0, 1, 0]);
        assert_eq!(canonical(*e), [1, 0, 1, 0]);
    }
    assert_eq!(class(CurveId::D2), [1, 0, 1, 0]);
    assert_eq!(class(CurveId::E2), [1, 0, 1, 0]);
}

#[test]
fn d2_meets_only_b2_homologically() {
    let d = class(CurveId::D2);
    for (c, expect) in [
        (CurveId::A(1), 0),
        (CurveId::B(1), 0),
        (CurveId::A(2), 0),
        (CurveId::B(2), 1),
    ] {
        assert_eq!(pair(&class(c), &d).abs(), expect, "{c}");
    }
}
