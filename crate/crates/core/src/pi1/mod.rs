//! Faithful action of mapping classes on the free fundamental group of the
//! one-boundary surface, and the induced action on the closed surface group.
//!
//! Generators are `x1, y1, …, xg, yg`, stored as the signed integers
//! `±(2i−1)` and `±2i`. The basepoint lies on the boundary and the boundary
//! loop is `[x1, y1] ⋯ [xg, yg]`. Each standard twist acts by a fixed
//! substitution; a word acts on a generator by applying its letters one at a
//! time, rightmost first, reducing after every step.

mod dehn;
mod orbifold;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::homology::homology_action;
use crate::par;
use crate::surface::{BasicTwist, CurveId, Sign, SurfaceSig, Twist, TwistWord};
use crate::Config;

pub use dehn::DehnReducer;

/// Extra letters tried beyond each prefix when searching for a conjugator
/// between two closed-surface automorphisms.
pub const CONJUGATOR_SLACK: usize = 2;

pub(crate) fn free_reduce_into(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

pub(crate) fn invert(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&l| -l).collect()
}

pub(crate) fn boundary_letters(genus: u32) -> Vec<i32> {
    (1..=genus as i32)
        .flat_map(|i| [2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)])
        .collect()
}

/// A freely reduced word in `x1, y1, …, xg, yg`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    /// Builds a word from signed generator indices, reducing it.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out = Vec::new();
        for l in letters {
            assert!(l != 0, "generator index 0 does not exist");
            free_reduce_into(&mut out, l);
        }
        FreeWord { letters: out }
    }

    pub fn x(i: u32) -> Self {
        FreeWord::new([2 * i as i32 - 1])
    }

    pub fn y(i: u32) -> Self {
        FreeWord::new([2 * i as i32])
    }

    /// Every generator of the rank-`2g` free group, in the order
    /// `x1, y1, …, xg, yg`.
    pub fn generators(genus: u32) -> Vec<FreeWord> {
        (1..=2 * genus as i32).map(|z| FreeWord::new([z])).collect()
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: invert(&self.letters),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord::new(self.letters.iter().chain(&other.letters).copied())
    }

    /// Exponent sums over `x1, y1, …`: the homology class.
    pub fn abelianize(&self, genus: u32) -> Vec<i64> {
        let mut v = vec![0i64; 2 * genus as usize];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (n, &l) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            let k = l.unsigned_abs();
            let name = if k % 2 == 1 { 'x' } else { 'y' };
            write!(f, "{name}{}", k.div_ceil(2))?;
            if l < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Splits a reduced word as `p · c · p⁻¹` with `p` maximal.
fn split_conjugate(w: &[i32]) -> (&[i32], &[i32]) {
    let n = w.len();
    let mut k = 0;
    while 2 * (k + 1) < n && w[k] == -w[n - 1 - k] {
        k += 1;
    }
    (&w[..k], &w[k..n - k])
}

/// Every reduced word of length at most `max_len` in `rank` generators.
fn short_words(rank: i32, max_len: usize) -> Vec<Vec<i32>> {
    let letters: Vec<i32> = (1..=rank).flat_map(|z| [z, -z]).collect();
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for t in &frontier {
            for &l in &letters {
                if t.last() != Some(&-l) {
                    let mut u: Vec<i32> = t.clone();
                    u.push(l);
                    next.push(u);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Free reduction to normal form.
pub fn reduce(w: &FreeWord) -> FreeWord {
    FreeWord::new(w.letters.iter().copied())
}

/// `[x1, y1][x2, y2] ⋯ [xg, yg]`.
pub fn boundary_word(genus: u32) -> FreeWord {
    FreeWord {
        letters: boundary_letters(genus),
    }
}

/// Substitution realising one basic twist.
#[derive(Debug, Clone)]
pub struct TwistAutomorphism {
    images: Vec<Vec<i32>>,
    inverse_images: Vec<Vec<i32>>,
}

impl TwistAutomorphism {
    fn new(images: Vec<Vec<i32>>) -> Self {
        let inverse_images = images.iter().map(|w| invert(w)).collect();
        TwistAutomorphism {
            images,
            inverse_images,
        }
    }

    pub fn image_of_generator(&self, z: i32) -> &[i32] {
        if z > 0 {
            &self.images[z as usize - 1]
        } else {
            &self.inverse_images[(-z) as usize - 1]
        }
    }

    /// Longest generator image; bounds the per-step growth factor.
    pub fn growth_constant(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy)]
enum Mode<'a> {
    Free,
    Closed(&'a DehnReducer),
}

/// Generator images as raw letter vectors.
type Images = Vec<Vec<i32>>;

/// Precomputed twist automorphisms for one genus.
#[derive(Debug, Clone)]
pub struct Pi1Engine {
    genus: u32,
    autos: HashMap<BasicTwist, TwistAutomorphism>,
    dehn: Option<DehnReducer>,
    config: Config,
}

impl Pi1Engine {
    pub fn new(genus: u32, config: Config) -> Self {
        assert!(genus >= 1, "free-group engine needs genus at least 1");
        let sig = SurfaceSig::bounded(genus);
        let mut curves: Vec<CurveId> = (1..=2 * genus).map(CurveId::chain).collect();
        for k in 2..=genus {
            curves.push(CurveId::D(k));
            curves.push(CurveId::E(k));
        }
        curves.push(CurveId::Delta);
        let mut autos = HashMap::new();
        for c in curves {
            debug_assert!(c.is_valid(&sig));
            for sign in [Sign::Pos, Sign::Neg] {
                let t = BasicTwist::new(c, sign);
                autos.insert(t, TwistAutomorphism::new(orbifold::twist_images(genus, t)));
            }
        }
        let dehn = (genus >= 2).then(|| DehnReducer::new(genus));
        Pi1Engine {
            genus,
            autos,
            dehn,
            config,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn automorphism(&self, t: BasicTwist) -> Result<&TwistAutomorphism> {
        self.autos.get(&t).ok_or(Error::InvalidCurve {
            curve: t.base,
            sig: SurfaceSig::bounded(self.genus),
        })
    }

    fn apply_basic(&self, t: BasicTwist, w: &[i32], mode: Mode<'_>) -> Result<Vec<i32>> {
        let auto = self.automorphism(t)?;
        let cap = self.config.cap;
        let mut out = Vec::with_capacity(w.len() + 8);
        for &l in w {
            for &c in auto.image_of_generator(l) {
                match mode {
                    Mode::Free => free_reduce_into(&mut out, c),
                    Mode::Closed(d) => d.push(&mut out, c),
                }
            }
            if out.len() > cap {
                return Err(Error::WordGrowthExceeded {
                    cap,
                    reached: out.len(),
                });
            }
        }
        Ok(out)
    }

    /// Image of `w` under a single (possibly conjugated) twist.
    pub fn apply_twist(&self, t: &Twist, w: &FreeWord) -> Result<FreeWord> {
        let mut cur = w.letters.clone();
        for b in t.expand().rev() {
            cur = self.apply_basic(b, &cur, Mode::Free)?;
        }
        Ok(FreeWord { letters: cur })
    }

    fn check_word(&self, w: &TwistWord) -> Result<()> {
        if w.surface.genus != self.genus {
            return Err(Error::SurfaceMismatch(
                w.surface,
                SurfaceSig::bounded(self.genus),
            ));
        }
        w.validate()
    }

    fn image_letters(&self, seq: &[BasicTwist], z: i32, mode: Mode<'_>) -> Result<Vec<i32>> {
        let mut cur = vec![z];
        for &b in seq {
            cur = self.apply_basic(b, &cur, mode)?;
        }
        Ok(cur)
    }

    fn images_with(&self, w: &TwistWord, mode: Mode<'_>) -> Result<Vec<Vec<i32>>> {
        self.check_word(w)?;
        let mut seq = w.expand();
        seq.reverse();
        let gens: Vec<i32> = (1..=2 * self.genus as i32).collect();
        let images = par::map(self.config.strategy, &gens, |&z| {
            self.image_letters(&seq, z, mode)
        });
        images.into_iter().collect()
    }

    /// Images of `x1, y1, …, xg, yg` in the free group.
    pub fn images(&self, w: &TwistWord) -> Result<Vec<FreeWord>> {
        Ok(self
            .images_with(w, Mode::Free)?
            .into_iter()
            .map(|letters| FreeWord { letters })
            .collect())
    }

    /// Equality in `Map(F, ∂F)`: both words send every generator to the
    /// same reduced word.
    pub fn equal_rel_boundary(&self, w1: &TwistWord, w2: &TwistWord) -> Result<bool> {
        for w in [w1, w2] {
            if w.surface.boundary != 1 {
                return Err(Error::Precondition(format!(
                    "relative equality needs a one-boundary surface, got {}",
                    w.surface
                )));
            }
        }
        let (i1, i2) = self.both_images(w1, w2, Mode::Free)?;
        Ok(i1 == i2)
    }

    /// Images in the closed surface group, Dehn-reduced after every step.
    pub fn closed_images(&self, w: &TwistWord) -> Result<Vec<FreeWord>> {
        let dehn = self.dehn_reducer()?;
        Ok(self
            .images_with(w, Mode::Closed(dehn))?
            .into_iter()
            .map(|letters| FreeWord { letters })
            .collect())
    }

    fn dehn_reducer(&self) -> Result<&DehnReducer> {
        self.dehn
            .as_ref()
            .ok_or_else(|| Error::Precondition("Dehn reduction needs genus at least 2".to_string()))
    }

    /// Equality of the induced automorphisms of the closed surface group
    /// (basepoint at the capping disk), `g ≥ 2`.
    ///
    /// Automorphisms that differ by an inner automorphism induce the same
    /// unpointed mapping class, so on a mismatch the comparison searches for
    /// `w` with `φ1(z) = w φ2(z) w⁻¹`. Writing `φi(x1) = pi ci pi⁻¹`, the
    /// candidates are `p1 · (prefix of c1) · s · p2⁻¹` with `s` a word of at
    /// most [`CONJUGATOR_SLACK`] letters absorbing the gap between free and
    /// Dehn reduction.
    pub fn closed_equal(&self, w1: &TwistWord, w2: &TwistWord) -> Result<bool> {
        let dehn = self.dehn_reducer()?;
        let (i1, i2) = self.both_images(w1, w2, Mode::Closed(dehn))?;
        let same = |a: &[i32], b: &[i32]| {
            let mut w = a.to_vec();
            w.extend(invert(b));
            dehn.is_trivial(&w)
        };
        if i1.iter().zip(&i2).all(|(a, b)| same(a, b)) {
            return Ok(true);
        }
        Ok(self.find_conjugator(dehn, &i1, &i2).is_some())
    }

    fn find_conjugator(
        &self,
        dehn: &DehnReducer,
        i1: &[Vec<i32>],
        i2: &[Vec<i32>],
    ) -> Option<Vec<i32>> {
        let agrees = |w: &[i32]| {
            i1.iter().zip(i2).all(|(a, b)| {
                let mut t = w.to_vec();
                t.extend(b);
                t.extend(invert(w));
                t.extend(invert(a));
                dehn.is_trivial(&t)
            })
        };
        let (p1, c1) = split_conjugate(&i1[0]);
        let (p2, _) = split_conjugate(&i2[0]);
        let tails = short_words(2 * self.genus as i32, CONJUGATOR_SLACK);
        // w = p1 · (rotation of the core) · slack · p2⁻¹
        let rotations: Vec<usize> = (0..=c1.len()).collect();
        let found = par::map(self.config.strategy, &rotations, |&k| {
            tails.iter().find_map(|t| {
                let mut w = Vec::new();
                for &l in p1.iter().chain(&c1[..k]).chain(t).chain(&invert(p2)) {
                    free_reduce_into(&mut w, l);
                }
                agrees(&w).then_some(w)
            })
        });
        found.into_iter().flatten().next()
    }

    fn both_images(
        &self,
        w1: &TwistWord,
        w2: &TwistWord,
        mode: Mode<'_>,
    ) -> Result<(Images, Images)> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        let seqs: Vec<Vec<BasicTwist>> = [w1, w2]
            .iter()
            .map(|w| {
                let mut s = w.expand();
                s.reverse();
                s
            })
            .collect();
        let n = 2 * self.genus as i32;
        let jobs: Vec<(usize, i32)> = (0..2).flat_map(|k| (1..=n).map(move |z| (k, z))).collect();
        let results = par::map(self.config.strategy, &jobs, |&(k, z)| {
            self.image_letters(&seqs[k], z, mode)
        });
        let mut results = results.into_iter().collect::<Result<Vec<_>>>()?;
        let second = results.split_off(n as usize);
        Ok((results, second))
    }
}

/// Image of `w` under one twist on the one-boundary surface of its genus.
pub fn apply_twist(t: &Twist, w: &FreeWord, genus: u32, config: Config) -> Result<FreeWord> {
    t.check(&SurfaceSig::bounded(genus))?;
    Pi1Engine::new(genus, config).apply_twist(t, w)
}

/// Exact equality in `Map(F, ∂F)` for one-boundary surfaces.
pub fn mcg_equal_rel_boundary(w1: &TwistWord, w2: &TwistWord, config: Config) -> Result<bool> {
    if w1.surface != w2.surface {
        return Err(Error::SurfaceMismatch(w1.surface, w2.surface));
    }
    Pi1Engine::new(w1.surface.genus, config).equal_rel_boundary(w1, w2)
}

/// Equality in the mapping class group of a closed surface. Genus one is
/// decided on homology (`Map(T²) ≅ SL(2, Z)`); higher genus compares the
/// induced automorphisms of the closed surface group with Dehn's algorithm.
pub fn closed_equal(w1: &TwistWord, w2: &TwistWord, config: Config) -> Result<bool> {
    if w1.surface != w2.surface {
        return Err(Error::SurfaceMismatch(w1.surface, w2.surface));
    }
    let sig = w1.surface;
    if !sig.is_closed() {
        return Err(Error::Precondition(format!(
            "closed equality needs a closed surface, got {sig}"
        )));
    }
    w1.validate()?;
    w2.validate()?;
    match sig.genus {
        0 => Ok(true),
        1 => Ok(homology_action(w1)? == homology_action(w2)?),
        g => Pi1Engine::new(g, config).closed_equal(w1, w2),
    }
}
