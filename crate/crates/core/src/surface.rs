//! Surfaces, the standard curve system and words of Dehn twists.
//!
//! The surface of genus `g` with `b ∈ {0, 1}` boundary components carries the
//! chain `A1, B1, A2, B2, …, Ag, Bg` in which consecutive curves meet once
//! (the `k`-th chain curve is `A((k+1)/2)` for odd `k` and `B(k/2)` for even
//! `k`). `D(k)` and `E(k)` are the two boundary curves of a regular
//! neighbourhood of the odd chain `A1 B1 … Ak`; `D2`, `E2` are the pair used
//! by the chain relation `(a1 b1 a2)^4 = d2 e2`. `Delta` is parallel to the
//! boundary.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSig {
    pub genus: u32,
    pub boundary: u8,
}

impl SurfaceSig {
    pub fn new(genus: u32, boundary: u8) -> Result<Self> {
        if boundary > 1 {
            return Err(Error::InvalidSurface(format!(
                "boundary must be 0 or 1, got {boundary}"
            )));
        }
        Ok(SurfaceSig { genus, boundary })
    }

    pub fn closed(genus: u32) -> Self {
        SurfaceSig { genus, boundary: 0 }
    }

    pub fn bounded(genus: u32) -> Self {
        SurfaceSig { genus, boundary: 1 }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == 0
    }

    /// Rank of first homology of the closed (capped) surface.
    pub fn rank(&self) -> usize {
        2 * self.genus as usize
    }

    /// The surface with its boundary capped by a disk.
    pub fn capped(&self) -> Self {
        SurfaceSig::closed(self.genus)
    }

    pub fn validate(&self) -> Result<()> {
        SurfaceSig::new(self.genus, self.boundary).map(|_| ())
    }
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, b={})", self.genus, self.boundary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveId {
    A(u32),
    B(u32),
    /// First boundary curve of the neighbourhood of `A1 B1 … Ak`.
    D(u32),
    /// Second boundary curve of the same neighbourhood.
    E(u32),
    Delta,
}

impl CurveId {
    pub const D2: CurveId = CurveId::D(2);
    pub const E2: CurveId = CurveId::E(2);

    /// The `k`-th chain curve, `k` starting at 1.
    pub fn chain(k: u32) -> CurveId {
        debug_assert!(k >= 1);
        if k % 2 == 1 {
            CurveId::A(k.div_ceil(2))
        } else {
            CurveId::B(k / 2)
        }
    }

    /// Position in the chain `A1, B1, A2, …` if this is a chain curve.
    pub fn chain_index(&self) -> Option<u32> {
        match *self {
            CurveId::A(i) => Some(2 * i - 1),
            CurveId::B(i) => Some(2 * i),
            _ => None,
        }
    }

    pub fn is_valid(&self, sig: &SurfaceSig) -> bool {
        let g = sig.genus;
        match *self {
            CurveId::A(i) | CurveId::B(i) => i >= 1 && i <= g,
            CurveId::D(k) | CurveId::E(k) => k >= 2 && k <= g,
            CurveId::Delta => sig.boundary == 1,
        }
    }

    pub fn check(&self, sig: &SurfaceSig) -> Result<()> {
        if self.is_valid(sig) {
            Ok(())
        } else {
            Err(Error::InvalidCurve {
                curve: *self,
                sig: *sig,
            })
        }
    }

    /// Every listed curve except `Delta` is nonseparating.
    pub fn is_nonseparating(&self) -> bool {
        !matches!(self, CurveId::Delta)
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::A(i) => write!(f, "a{i}"),
            CurveId::B(i) => write!(f, "b{i}"),
            CurveId::D(k) => write!(f, "d{k}"),
            CurveId::E(k) => write!(f, "e{k}"),
            CurveId::Delta => write!(f, "delta"),
        }
    }
}

impl FromStr for CurveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "delta" {
            return Ok(CurveId::Delta);
        }
        let bad = || Error::UnknownCurveName(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty()
            || digits.starts_with('0')
            || !digits.bytes().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        match kind {
            'a' => Ok(CurveId::A(index)),
            'b' => Ok(CurveId::B(index)),
            'd' if index >= 2 => Ok(CurveId::D(index)),
            'e' if index >= 2 => Ok(CurveId::E(index)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CurveId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurveId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The curves of the standard system on `sig`: the chain, then `D2, E2`
/// when `g ≥ 2`, then `Delta` when `b = 1`.
pub fn standard_curves(sig: &SurfaceSig) -> Vec<CurveId> {
    let mut out: Vec<CurveId> = (1..=2 * sig.genus).map(CurveId::chain).collect();
    if sig.genus >= 2 {
        out.push(CurveId::D2);
        out.push(CurveId::E2);
    }
    if sig.boundary == 1 {
        out.push(CurveId::Delta);
    }
    out
}

/// Homology class in the symplectic basis `α1, β1, …, αg, βg` of the capped
/// surface, with `⟨αi, βi⟩ = +1`.
///
/// The chain is realised as `A(i) = αi`, `B(i) = βi − β(i+1)` (`B(g) = βg`),
/// so consecutive chain curves pair to `+1` and the rest pair to zero.
/// `D(k)` and `E(k)` both carry `α1 + … + αk`.
pub fn homology_class(curve: CurveId, sig: &SurfaceSig) -> Result<Vec<i64>> {
    curve.check(sig)?;
    let g = sig.genus as usize;
    let mut v = vec![0i64; 2 * g];
    match curve {
        CurveId::A(i) => v[2 * (i as usize - 1)] = 1,
        CurveId::B(i) => {
            let i = i as usize;
            v[2 * i - 1] = 1;
            if i < g {
                v[2 * i + 1] = -1;
            }
        }
        CurveId::D(k) | CurveId::E(k) => {
            for i in 0..k as usize {
                v[2 * i] = 1;
            }
        }
        CurveId::Delta => {}
    }
    Ok(v)
}

/// Whether the two curves can be isotoped off each other, so their twists
/// commute. Consecutive chain curves meet once, `D(k)`/`E(k)` meet only the
/// chain curve `B(k)`, and `Delta` misses everything.
pub fn geometric_disjoint(c1: CurveId, c2: CurveId) -> bool {
    use CurveId::*;
    match (c1, c2) {
        (Delta, _) | (_, Delta) => true,
        (D(_) | E(_), D(_) | E(_)) => true,
        (D(k) | E(k), other) | (other, D(k) | E(k)) => other != B(k),
        _ => {
            let (i, j) = (c1.chain_index().unwrap(), c2.chain_index().unwrap());
            i.abs_diff(j) != 1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value() as i8)
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match i64::deserialize(deserializer)? {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            other => Err(serde::de::Error::custom(format!(
                "sign must be 1 or -1, got {other}"
            ))),
        }
    }
}

/// A twist about a standard curve, no conjugator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasicTwist {
    pub base: CurveId,
    pub sign: Sign,
}

impl BasicTwist {
    pub fn new(base: CurveId, sign: Sign) -> Self {
        BasicTwist { base, sign }
    }

    pub fn pos(base: CurveId) -> Self {
        BasicTwist::new(base, Sign::Pos)
    }

    pub fn neg(base: CurveId) -> Self {
        BasicTwist::new(base, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        BasicTwist::new(self.base, self.sign.flip())
    }
}

/// Inverse of a flat sequence of basic twists.
pub fn inverse_sequence(seq: &[BasicTwist]) -> Vec<BasicTwist> {
    seq.iter().rev().map(|t| t.inverse()).collect()
}

/// Cancels adjacent `t t⁻¹` pairs.
pub fn reduce_sequence(seq: impl IntoIterator<Item = BasicTwist>) -> Vec<BasicTwist> {
    let mut out: Vec<BasicTwist> = Vec::new();
    for t in seq {
        if out.last() == Some(&t.inverse()) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

/// `conj · t_base^sign · conj⁻¹`, with the conjugator a flat word in basic
/// twists read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Twist {
    pub base: CurveId,
    pub sign: Sign,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conj: Vec<BasicTwist>,
}

impl Twist {
    pub fn new(base: CurveId, sign: Sign) -> Self {
        Twist {
            base,
            sign,
            conj: Vec::new(),
        }
    }

    pub fn pos(base: CurveId) -> Self {
        Twist::new(base, Sign::Pos)
    }

    pub fn neg(base: CurveId) -> Self {
        Twist::new(base, Sign::Neg)
    }

    pub fn is_plain(&self) -> bool {
        self.conj.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn basic(&self) -> BasicTwist {
        BasicTwist::new(self.base, self.sign)
    }

    pub fn inverse(&self) -> Twist {
        Twist {
            base: self.base,
            sign: self.sign.flip(),
            conj: self.conj.clone(),
        }
    }

    /// `prefix · self · prefix⁻¹`, simplified.
    pub fn conjugated_by(&self, prefix: &[BasicTwist]) -> Twist {
        let conj = prefix.iter().chain(self.conj.iter()).copied();
        Twist {
            base: self.base,
            sign: self.sign,
            conj: reduce_sequence(conj),
        }
        .simplified()
    }

    /// Frees the conjugator and drops its innermost letters while they
    /// commute with the base twist.
    pub fn simplified(mut self) -> Twist {
        self.conj = reduce_sequence(self.conj);
        while let Some(last) = self.conj.last() {
            if last.base == self.base || geometric_disjoint(last.base, self.base) {
                self.conj.pop();
            } else {
                break;
            }
        }
        self
    }

    /// The twist as a product of basic twists: `conj, base, conj⁻¹`.
    pub fn expand(&self) -> impl DoubleEndedIterator<Item = BasicTwist> + '_ {
        self.conj
            .iter()
            .copied()
            .chain(std::iter::once(self.basic()))
            .chain(self.conj.iter().rev().map(|t| t.inverse()))
    }

    pub fn check(&self, sig: &SurfaceSig) -> Result<()> {
        self.base.check(sig)?;
        for c in &self.conj {
            c.base.check(sig)?;
        }
        Ok(())
    }

    /// Relabels every curve, base and conjugator alike.
    pub fn map_curves(&self, f: impl Fn(CurveId) -> CurveId) -> Twist {
        Twist {
            base: f(self.base),
            sign: self.sign,
            conj: self
                .conj
                .iter()
                .map(|c| BasicTwist::new(f(c.base), c.sign))
                .collect(),
        }
    }
}

impl From<BasicTwist> for Twist {
    fn from(t: BasicTwist) -> Self {
        Twist::new(t.base, t.sign)
    }
}

impl fmt::Display for BasicTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.base),
            Sign::Neg => write!(f, "{}^-1", self.base),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.conj.is_empty() {
            write!(f, "[")?;
            for (i, c) in self.conj.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "{}", self.basic())
    }
}

/// A word of twists on one surface. The word `l1 l2 … lk` denotes the
/// product `l1 · l2 ⋯ lk` in the mapping class group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistWord {
    pub surface: SurfaceSig,
    #[serde(rename = "word")]
    pub letters: Vec<Twist>,
}

impl TwistWord {
    pub fn new(surface: SurfaceSig, letters: Vec<Twist>) -> Result<Self> {
        surface.validate()?;
        for t in &letters {
            t.check(&surface)?;
        }
        Ok(TwistWord { surface, letters })
    }

    pub fn identity(surface: SurfaceSig) -> Self {
        TwistWord {
            surface,
            letters: Vec::new(),
        }
    }

    /// Word of plain positive twists.
    pub fn positive(surface: SurfaceSig, curves: &[CurveId]) -> Result<Self> {
        TwistWord::new(surface, curves.iter().map(|&c| Twist::pos(c)).collect())
    }

    pub fn from_basic(surface: SurfaceSig, seq: &[BasicTwist]) -> Result<Self> {
        TwistWord::new(surface, seq.iter().map(|&t| t.into()).collect())
    }

    /// `a1 b1 a2 b2 … ag bg`.
    pub fn chain(surface: SurfaceSig) -> Self {
        let letters = (1..=2 * surface.genus)
            .map(|k| Twist::pos(CurveId::chain(k)))
            .collect();
        TwistWord { surface, letters }
    }

    pub fn validate(&self) -> Result<()> {
        self.surface.validate()?;
        for t in &self.letters {
            t.check(&self.surface)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(Twist::is_positive)
    }

    pub fn positive_count(&self) -> usize {
        self.letters.iter().filter(|t| t.is_positive()).count()
    }

    pub fn negative_count(&self) -> usize {
        self.len() - self.positive_count()
    }

    pub fn concat(&self, other: &TwistWord) -> Result<TwistWord> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch(self.surface, other.surface));
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(TwistWord {
            surface: self.surface,
            letters,
        })
    }

    /// Reverse-inverse: the word for the inverse mapping class.
    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            surface: self.surface,
            letters: self.letters.iter().rev().map(Twist::inverse).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> TwistWord {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend(self.letters.iter().cloned());
        }
        TwistWord {
            surface: self.surface,
            letters,
        }
    }

    /// All letters expanded into basic twists, left to right.
    pub fn expand(&self) -> Vec<BasicTwist> {
        self.letters.iter().flat_map(|t| t.expand()).collect()
    }

    /// Reads the word on the capped surface. Twists about `Delta` become
    /// trivial there and are removed; `Delta` is central, so it is also
    /// dropped from conjugators.
    pub fn capped(&self) -> TwistWord {
        let letters = self
            .letters
            .iter()
            .filter(|t| t.base != CurveId::Delta)
            .map(|t| {
                Twist {
                    base: t.base,
                    sign: t.sign,
                    conj: t
                        .conj
                        .iter()
                        .copied()
                        .filter(|c| c.base != CurveId::Delta)
                        .collect(),
                }
                .simplified()
            })
            .collect();
        TwistWord {
            surface: self.surface.capped(),
            letters,
        }
    }

    pub fn simplified(&self) -> TwistWord {
        TwistWord {
            surface: self.surface,
            letters: self
                .letters
                .iter()
                .cloned()
                .map(Twist::simplified)
                .collect(),
        }
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
