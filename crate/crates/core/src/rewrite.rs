//! Monodromy rewriting: commutation pulls, positivization of negative
//! twists and substitution of the three-chain relation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{curve_class, homology_action, transvect, transvection};
use crate::pi1;
use crate::surface::{
    geometric_disjoint, inverse_sequence, BasicTwist, CurveId, SurfaceSig, Twist, TwistWord,
};
use crate::verify::{verify, verify_or_downgrade, Certification, EngineChoice, Verdict};
use crate::Config;

#[derive(Debug, Clone, Serialize)]
pub struct RewriteReport {
    pub input: TwistWord,
    pub output: TwistWord,
    pub steps: usize,
    pub verified: Certification,
}

/// `(a1 b1 a2)^4`, the left side of the chain relation.
pub fn chain_block(sig: SurfaceSig) -> Result<TwistWord> {
    Ok(TwistWord::positive(sig, &[CurveId::A(1), CurveId::B(1), CurveId::A(2)])?.pow(4))
}

fn commutes(alpha: BasicTwist, beta: &Twist) -> bool {
    beta.expand()
        .all(|t| t.base == alpha.base || geometric_disjoint(t.base, alpha.base))
}

/// Moves the letters of `pattern` to the front of `w`, in order, by swaps
/// `β α → α (α⁻¹ β α)`. Each swap is one step. Pattern letters must be plain;
/// the leftmost unmatched pattern letter is pulled first.
pub fn commute_pull(w: &TwistWord, pattern: &TwistWord, config: &Config) -> Result<RewriteReport> {
    if w.surface != pattern.surface {
        return Err(Error::SurfaceMismatch(w.surface, pattern.surface));
    }
    w.validate()?;
    let mut letters = w.letters.clone();
    let mut steps = 0;
    for (pos, target) in pattern.letters.iter().enumerate() {
        if !target.is_plain() {
            return Err(Error::PatternNotRealizable(format!(
                "pattern letter {target} is conjugated"
            )));
        }
        let j = (pos..letters.len())
            .find(|&j| letters[j] == *target)
            .ok_or_else(|| {
                Error::PatternNotRealizable(format!(
                    "no plain {target} left to pull into position {pos}"
                ))
            })?;
        let alpha = target.basic();
        for k in (pos..j).rev() {
            let beta = &letters[k];
            let moved = if commutes(alpha, beta) {
                beta.clone()
            } else {
                beta.conjugated_by(&[alpha.inverse()])
            };
            letters[k] = target.clone();
            letters[k + 1] = moved;
            steps += 1;
        }
    }
    let output = TwistWord {
        surface: w.surface,
        letters,
    };
    let verified = verify_or_downgrade(w, &output, config)?;
    Ok(RewriteReport {
        input: w.clone(),
        output,
        steps,
        verified,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainBlockFactorization {
    pub prefix: TwistWord,
    pub psi: TwistWord,
    pub report: RewriteReport,
}

/// `(a1 b1 … an bn)^4 = (a1 b1 a2)^4 ψ` on the one-boundary genus `n`
/// surface, with `ψ` a word of `8n − 12` positive nonseparating twists.
pub fn factor_chain_block(n: u32, config: &Config) -> Result<ChainBlockFactorization> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "genus must be at least 2, got {n}"
        )));
    }
    let sig = SurfaceSig::bounded(n);
    let prefix = chain_block(sig)?;
    let report = commute_pull(&TwistWord::chain(sig).pow(4), &prefix, config)?;
    let psi = TwistWord {
        surface: sig,
        letters: report.output.letters[prefix.len()..].to_vec(),
    };
    Ok(ChainBlockFactorization {
        prefix,
        psi,
        report,
    })
}

/// Positive word equal to `a1⁻¹` on the closed genus `g` surface:
/// `(b1 a2 b2 … ag bg) (a1 b1 … ag bg)^{4g+1}`.
pub fn inverse_twist_expansion(sig: SurfaceSig) -> Result<TwistWord> {
    if !sig.is_closed() || sig.genus == 0 {
        return Err(Error::Precondition(format!(
            "needs a closed surface of genus at least 1, got {sig}"
        )));
    }
    let chain = TwistWord::chain(sig);
    let head = TwistWord {
        surface: sig,
        letters: chain.letters[1..].to_vec(),
    };
    head.concat(&chain.pow(4 * sig.genus as usize + 1))
}

/// Length of [`inverse_twist_expansion`] at genus `g`.
pub fn expansion_length(genus: u32) -> usize {
    let g = genus as usize;
    (2 * g - 1) + 2 * g * (4 * g + 1)
}

/// A word `v` with `t_c = v⁻¹ t_{a1} v`.
///
/// Along the chain, `c(m)` is reached from `c(m−1)` by `c(m)⁻¹ c(m−1)⁻¹`
/// (braid relation). `D(k)` and `E(k)` meet `B(k)` once, and
/// `t_y = (x y) t_x (x y)⁻¹` for curves meeting once.
pub fn coordinate_change(c: CurveId, sig: &SurfaceSig) -> Result<Vec<BasicTwist>> {
    c.check(sig)?;
    match c {
        CurveId::A(_) | CurveId::B(_) => {
            let m = c.chain_index().expect("chain curve");
            let mut v = Vec::new();
            for j in 2..=m {
                v.push(BasicTwist::neg(CurveId::chain(j)));
                v.push(BasicTwist::neg(CurveId::chain(j - 1)));
            }
            Ok(v)
        }
        CurveId::D(k) | CurveId::E(k) => {
            let mut v = coordinate_change(CurveId::B(k), sig)?;
            v.push(BasicTwist::neg(c));
            v.push(BasicTwist::neg(CurveId::B(k)));
            Ok(v)
        }
        CurveId::Delta => Err(Error::SeparatingBase(c)),
    }
}

/// Replaces every negative letter `u t_c⁻¹ u⁻¹` of a word on a closed
/// surface by the positive letters `(u v⁻¹) e (u v⁻¹)⁻¹`, `e` running over
/// [`inverse_twist_expansion`] and `v` the [`coordinate_change`] of `c`.
///
/// The result is certified by `engine`; with `Auto` the closed-surface
/// engine is tried and homology is reported if the cap is reached.
pub fn positivize(w: &TwistWord, engine: EngineChoice, config: &Config) -> Result<RewriteReport> {
    let sig = w.surface;
    if !sig.is_closed() {
        return Err(Error::Precondition(format!(
            "positivization needs a closed surface, got {sig}"
        )));
    }
    w.validate()?;
    let mut letters = Vec::new();
    let mut steps = 0;
    let mut expansion = None;
    for t in &w.letters {
        if !t.base.is_nonseparating() {
            return Err(Error::SeparatingBase(t.base));
        }
        if t.is_positive() {
            letters.push(t.clone());
            continue;
        }
        let e = match &expansion {
            Some(e) => e,
            None => expansion.insert(inverse_twist_expansion(sig)?),
        };
        let mut conj = t.conj.clone();
        conj.extend(inverse_sequence(&coordinate_change(t.base, &sig)?));
        for l in &e.letters {
            letters.push(l.conjugated_by(&conj));
        }
        steps += 1;
    }
    let output = TwistWord {
        surface: sig,
        letters,
    };
    let verified = match engine {
        EngineChoice::Auto => verify_or_downgrade(w, &output, config)?,
        other => verify(w, &output, other, config)?,
    };
    Ok(RewriteReport {
        input: w.clone(),
        output,
        steps,
        verified,
    })
}

/// Replaces the first contiguous plain `(a1 b1 a2)^4` by `d2 e2`.
pub fn chain_substitute(w: &TwistWord, config: &Config) -> Result<RewriteReport> {
    let sig = w.surface;
    if sig.genus < 2 {
        return Err(Error::NoChainOccurrence);
    }
    w.validate()?;
    let block = chain_block(sig)?;
    let n = block.len();
    let at = (0..=w.len().saturating_sub(n))
        .find(|&i| w.len() >= n && w.letters[i..i + n] == block.letters[..])
        .ok_or(Error::NoChainOccurrence)?;
    let mut letters = w.letters[..at].to_vec();
    letters.push(Twist::pos(CurveId::D2));
    letters.push(Twist::pos(CurveId::E2));
    letters.extend(w.letters[at + n..].iter().cloned());
    let output = TwistWord {
        surface: sig,
        letters,
    };
    let verified = verify_or_downgrade(w, &output, config)?;
    Ok(RewriteReport {
        input: w.clone(),
        output,
        steps: 1,
        verified,
    })
}

/// Homology form of the chain relation with candidate classes for `d2` and
/// `e2` on the genus 2 surface.
pub fn chain_relation_homology(v_d: &[i64], v_e: &[i64]) -> Result<bool> {
    let sig = SurfaceSig::closed(2);
    let lhs = homology_action(&chain_block(sig)?)?;
    let to_big = |v: &[i64]| crate::homology::to_big(v);
    let rhs = transvection(&to_big(v_d))?.mul(&transvection(&to_big(v_e))?)?;
    Ok(lhs == rhs)
}

/// `(a1 b1 a2)^4 = d2 e2` on the one-boundary genus 2 surface, checked on
/// homology and by the free-group engine.
pub fn chain_relation_selftest(config: &Config) -> Result<bool> {
    let sig = SurfaceSig::bounded(2);
    let closed = SurfaceSig::closed(2);
    let v_d = crate::surface::homology_class(CurveId::D2, &closed)?;
    let v_e = crate::surface::homology_class(CurveId::E2, &closed)?;
    if !chain_relation_homology(&v_d, &v_e)? {
        return Ok(false);
    }
    let rhs = TwistWord::positive(sig, &[CurveId::D2, CurveId::E2])?;
    pi1::mcg_equal_rel_boundary(&chain_block(sig)?, &rhs, *config)
}

/// On the closed torus, replaces each letter whose curve has class `±α`
/// by the plain twist `a1` and `±β` by `b1`, keeping the sign. Curves on
/// the torus are determined up to isotopy by their class up to sign.
pub fn canonicalize_torus(w: &TwistWord) -> Result<TwistWord> {
    let sig = w.surface;
    if sig != SurfaceSig::closed(1) {
        return Err(Error::Precondition(format!(
            "torus canonicalization needs the closed torus, got {sig}"
        )));
    }
    let letters = w
        .letters
        .iter()
        .map(|t| {
            let v = crate::homology::letter_class(t, &sig)?;
            let (x, y) = (i64::try_from(&v[0]).ok(), i64::try_from(&v[1]).ok());
            Ok(match (x, y) {
                (Some(1 | -1), Some(0)) => Twist::new(CurveId::A(1), t.sign),
                (Some(0), Some(1 | -1)) => Twist::new(CurveId::B(1), t.sign),
                _ => t.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistWord {
        surface: sig,
        letters,
    })
}

/// Checks `t_c = v⁻¹ t_{a1} v` for every [`coordinate_change`] word on the
/// surface, on homology and, for one-boundary surfaces, exactly.
pub fn coordinate_change_selftest(sig: SurfaceSig, config: &Config) -> Result<bool> {
    let mut curves: Vec<CurveId> = (1..=2 * sig.genus).map(CurveId::chain).collect();
    for k in 2..=sig.genus {
        curves.extend([CurveId::D(k), CurveId::E(k)]);
    }
    for c in curves {
        let v = coordinate_change(c, &sig)?;
        let mut carried = curve_class(CurveId::A(1), &sig)?;
        // class of v⁻¹(a1): apply the letters of v⁻¹ right to left
        for t in &v {
            let cls = curve_class(t.base, &sig)?;
            transvect(&mut carried, &cls, -t.sign.value());
        }
        let target = curve_class(c, &sig)?;
        let neg: Vec<_> = target.iter().map(|x| -x).collect();
        if carried != target && carried != neg {
            return Ok(false);
        }
        let lhs = TwistWord::positive(sig, &[c])?;
        let rhs = TwistWord::new(
            sig,
            vec![Twist::pos(CurveId::A(1)).conjugated_by(&inverse_sequence(&v))],
        )?;
        if verify(&lhs, &rhs, EngineChoice::Auto, config)?.verdict == Verdict::NotEqual {
            return Ok(false);
        }
    }
    Ok(true)
}
