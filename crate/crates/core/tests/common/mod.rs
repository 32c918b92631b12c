//! Shared helpers for the integration tests: an independent torus engine,
//! a determinantal-divisor Smith form, random words and a relator corpus.

#![allow(dead_code)]

use dehn_core::surface::{geometric_disjoint, standard_curves};
use dehn_core::{BasicTwist, CurveId, Sign, SurfaceSig, Twist, TwistWord};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Twists on the one-boundary torus as automorphisms of `⟨x, y⟩`, written
/// as strings over `x X y Y` (capitals are inverses) and composed by
/// substitution.
pub mod torus {
    fn reduce(s: &str) -> String {
        let mut out: Vec<char> = Vec::new();
        for c in s.chars() {
            match out.last() {
                Some(&p) if p != c && p.eq_ignore_ascii_case(&c) => {
                    out.pop();
                }
                _ => out.push(c),
            }
        }
        out.into_iter().collect()
    }

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct Auto {
        pub x: String,
        pub y: String,
    }

    impl Auto {
        pub fn identity() -> Self {
            Auto {
                x: "x".into(),
                y: "y".into(),
            }
        }

        /// `a`, `A`, `b`, `B` for `t_a`, `t_a⁻¹`, `t_b`, `t_b⁻¹`. The curve
        /// `a` is `x`, and `y` crosses it once; `b` is `y`, crossed once by `x`.
        pub fn letter(l: char) -> Self {
            let (x, y) = match l {
                'a' => ("x", "yX"),
                'A' => ("x", "yx"),
                'b' => ("xy", "y"),
                'B' => ("xY", "y"),
                _ => panic!("unknown letter {l}"),
            };
            Auto {
                x: x.into(),
                y: y.into(),
            }
        }

        fn image(&self, c: char) -> String {
            match c {
                'x' => self.x.clone(),
                'y' => self.y.clone(),
                'X' => invert(&self.x),
                'Y' => invert(&self.y),
                _ => unreachable!(),
            }
        }

        /// `self ∘ other`.
        pub fn after(&self, other: &Auto) -> Auto {
            let sub = |s: &str| reduce(&s.chars().map(|c| self.image(c)).collect::<String>());
            Auto {
                x: sub(&other.x),
                y: sub(&other.y),
            }
        }
    }

    fn invert(s: &str) -> String {
        s.chars()
            .rev()
            .map(|c| {
                if c.is_lowercase() {
                    c.to_ascii_uppercase()
                } else {
                    c.to_ascii_lowercase()
                }
            })
            .collect()
    }

    /// The word `l1 … lk` is the composite `l1 ∘ … ∘ lk`.
    pub fn word(w: &str) -> Auto {
        w.chars()
            .fold(Auto::identity(), |acc, l| acc.after(&Auto::letter(l)))
    }

    /// All words of length at most `n` over `a A b B`.
    pub fn all_words(n: usize) -> Vec<String> {
        let mut out = vec![String::new()];
        let mut frontier = vec![String::new()];
        for _ in 0..n {
            let next: Vec<String> = frontier
                .iter()
                .flat_map(|w| "aAbB".chars().map(move |c| format!("{w}{c}")))
                .collect();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

/// Torus letters `a A b B` as a twist word on the one-boundary torus.
pub fn torus_word(w: &str) -> TwistWord {
    let letters = w
        .chars()
        .map(|c| match c {
            'a' => Twist::pos(CurveId::A(1)),
            'A' => Twist::neg(CurveId::A(1)),
            'b' => Twist::pos(CurveId::B(1)),
            'B' => Twist::neg(CurveId::B(1)),
            _ => panic!("unknown letter {c}"),
        })
        .collect();
    TwistWord::new(SurfaceSig::bounded(1), letters).unwrap()
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    // cofactor expansion; only used on tiny matrices
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors and the factors are `d_k / d_(k−1)`.
pub fn invariant_factors_by_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// Curves usable in random words on `sig`: the standard system.
pub fn curves(sig: &SurfaceSig) -> Vec<CurveId> {
    standard_curves(sig)
}

/// Random word of length `0..=max_len`, optionally with short conjugators.
pub fn random_word(
    rng: &mut StdRng,
    sig: SurfaceSig,
    max_len: usize,
    conj: bool,
    pool: &[CurveId],
) -> TwistWord {
    let len = rng.gen_range(0..=max_len);
    let sign = |rng: &mut StdRng| {
        if rng.gen_bool(0.5) {
            Sign::Pos
        } else {
            Sign::Neg
        }
    };
    let letters = (0..len)
        .map(|_| {
            let base = pool[rng.gen_range(0..pool.len())];
            let mut t = Twist::new(base, sign(rng));
            if conj && rng.gen_bool(0.3) {
                let k = rng.gen_range(1..=2);
                let prefix: Vec<BasicTwist> = (0..k)
                    .map(|_| BasicTwist::new(pool[rng.gen_range(0..pool.len())], sign(rng)))
                    .collect();
                t = t.conjugated_by(&prefix);
            }
            t
        })
        .collect();
    TwistWord::new(sig, letters).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Words equal to the identity on the one-boundary genus 2 surface:
/// braid and commutation relations for every pair of standard curves, the
/// chain relation, the hyperelliptic relation and centrality of `delta`.
pub fn relator_corpus() -> Vec<TwistWord> {
    let sig = SurfaceSig::bounded(2);
    let cs = standard_curves(&sig);
    let p = Twist::pos;
    let n = Twist::neg;
    let mut out = Vec::new();
    for (i, &x) in cs.iter().enumerate() {
        for &y in &cs[i + 1..] {
            let letters = if geometric_disjoint(x, y) {
                vec![p(x), p(y), n(x), n(y)]
            } else {
                vec![p(x), p(y), p(x), n(y), n(x), n(y)]
            };
            out.push(TwistWord::new(sig, letters).unwrap());
        }
    }
    let block = TwistWord::positive(sig, &[CurveId::A(1), CurveId::B(1), CurveId::A(2)])
        .unwrap()
        .pow(4);
    let de = TwistWord::new(sig, vec![n(CurveId::E2), n(CurveId::D2)]).unwrap();
    out.push(block.concat(&de).unwrap());
    let delta_inv = TwistWord::new(sig, vec![n(CurveId::Delta)]).unwrap();
    out.push(TwistWord::chain(sig).pow(10).concat(&delta_inv).unwrap());
    out
}
