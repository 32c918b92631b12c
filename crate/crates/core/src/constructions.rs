//! End-to-end constructions: the family of fillings obtained by repeated
//! chain substitution, the two torus completions of the trefoil PALF, the
//! doubled bundle `φ # φ⁻¹` and mapping torus homology.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibration::{double, Fibration};
use crate::homology::{curve_class, homology_action, SympMatrix};
use crate::par;
use crate::pi1::Pi1Engine;
use crate::rewrite::{chain_block, chain_substitute, commute_pull, positivize};
use crate::snf::AbelianGroup;
use crate::surface::{CurveId, SurfaceSig, TwistWord};
use crate::verify::{verify, Certification, EngineChoice, Verdict, ENGINE_HOMOLOGY, ENGINE_PI1};
use crate::Config;

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub n: u32,
    pub fillings: Vec<Fibration>,
    pub chis: Vec<i64>,
    /// Verdict of `X_i = X_0` for `i = 1 … n`.
    pub equal_verdicts: Vec<Certification>,
    pub h1s: Vec<AbelianGroup>,
    pub allowable: Vec<bool>,
    /// Commutation steps spent on each substitution.
    pub steps: Vec<usize>,
}

/// `X_0 = (a1 b1 … an bn)^{4n+2}` on the one-boundary genus `n` surface;
/// `X_{i+1}` rewrites the leading `(chain)^4` of the unconsumed power of
/// `X_i` as `(a1 b1 a2)^4 ψ` and substitutes `d2 e2`.
pub fn filling_family(n: u32, config: &Config) -> Result<FamilyReport> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "genus must be at least 2, got {n}"
        )));
    }
    let sig = SurfaceSig::bounded(n);
    let chain = TwistWord::chain(sig);
    let pattern = chain_block(sig)?;
    let power = 4 * n as usize + 2;
    let mut head = TwistWord::identity(sig);
    let mut words = vec![chain.pow(power)];
    let mut steps = Vec::new();
    for i in 1..=n as usize {
        let block = chain.pow(4);
        let pulled = commute_pull(&block, &pattern, config)?;
        let substituted = chain_substitute(&pulled.output, config)?;
        head = head.concat(&substituted.output)?;
        words.push(head.concat(&chain.pow(power - 4 * i))?);
        steps.push(pulled.steps);
    }
    let fillings = words
        .into_iter()
        .map(Fibration::disk)
        .collect::<Result<Vec<_>>>()?;
    let equal_verdicts = verify_against_first(&fillings, config)?;
    let chis = fillings
        .iter()
        .map(Fibration::euler_characteristic)
        .collect();
    let h1s = fillings
        .iter()
        .map(Fibration::first_homology)
        .collect::<Result<Vec<_>>>()?;
    let allowable = fillings
        .iter()
        .map(Fibration::is_allowable)
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport {
        n,
        fillings,
        chis,
        equal_verdicts,
        h1s,
        allowable,
        steps,
    })
}

/// Compares every filling after the first with the first, reusing the
/// generator images of the first word.
fn verify_against_first(fillings: &[Fibration], config: &Config) -> Result<Vec<Certification>> {
    let first = &fillings[0].word;
    let engine = Pi1Engine::new(first.surface.genus, *config);
    let reference = match engine.images(first) {
        Ok(r) => Some(r),
        Err(Error::WordGrowthExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let first_h = homology_action(first)?;
    let rest: Vec<&Fibration> = fillings[1..].iter().collect();
    let results = par::map(config.strategy, &rest, |f| -> Result<Certification> {
        let h = homology_action(&f.word)?;
        if h != first_h {
            return Ok(Certification::new(Verdict::NotEqual, ENGINE_HOMOLOGY));
        }
        let Some(reference) = &reference else {
            return Ok(Certification::new(Verdict::Equal, ENGINE_HOMOLOGY));
        };
        match engine.images(&f.word) {
            Ok(images) => Ok(Certification::new(
                if &images == reference {
                    Verdict::Equal
                } else {
                    Verdict::NotEqual
                },
                ENGINE_PI1,
            )),
            Err(Error::WordGrowthExceeded { .. }) => {
                Ok(Certification::new(Verdict::Equal, ENGINE_HOMOLOGY))
            }
            Err(e) => Err(e),
        }
    });
    results.into_iter().collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TrefoilCompletions {
    /// Double of the trefoil PALF, 24 singular fibers.
    pub big: Fibration,
    /// `(ab)^6`: the PALF word `ab` closed up by `(ab)^5 = (ab)⁻¹`.
    pub small: Fibration,
    /// Equality of the two monodromies on the closed torus.
    pub agree: Certification,
}

pub fn trefoil_palf() -> Result<Fibration> {
    Fibration::disk(TwistWord::positive(
        SurfaceSig::bounded(1),
        &[CurveId::A(1), CurveId::B(1)],
    )?)
}

pub fn trefoil_completions(config: &Config) -> Result<TrefoilCompletions> {
    let palf = trefoil_palf()?;
    let (big, _) = double(&palf, config)?;
    let torus = SurfaceSig::closed(1);
    let ab = palf.word.capped();
    let small = Fibration::sphere(ab.concat(&TwistWord::chain(torus).pow(5))?)?;
    let agree = verify(&big.word, &small.word, EngineChoice::Auto, config)?;
    Ok(TrefoilCompletions { big, small, agree })
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchedDouble {
    pub fiber: SurfaceSig,
    pub monodromy: TwistWord,
    /// `φ` on the first copy.
    pub copy1: TwistWord,
    /// `φ⁻¹` on the second copy.
    pub copy2: TwistWord,
}

/// Curve of the second copy corresponding to a chain curve of the page.
///
/// The second copy's chain is `D(g+1), B(g+1), A(g+2), …, B(2g)`; `A(g+1)`
/// is skipped because it meets `B(g)` of the first copy.
fn second_copy(c: CurveId, g: u32) -> CurveId {
    match c {
        CurveId::A(1) => CurveId::D(g + 1),
        CurveId::A(i) => CurveId::A(g + i),
        CurveId::B(i) => CurveId::B(g + i),
        other => other,
    }
}

fn page_chain_only(w: &TwistWord) -> Result<()> {
    for t in &w.letters {
        for b in t.expand() {
            if matches!(b.base, CurveId::D(_) | CurveId::E(_)) {
                return Err(Error::Precondition(format!(
                    "the doubled bundle only embeds chain curves, found {}",
                    b.base
                )));
            }
        }
    }
    Ok(())
}

/// Bundle over the circle with fiber two copies of the capped page glued
/// along the boundary and monodromy `φ # φ⁻¹`. Twists about the boundary
/// are central and cancel between the copies, so they are dropped.
pub fn branched_double_cover(page: SurfaceSig, monodromy: &TwistWord) -> Result<BranchedDouble> {
    if page.boundary != 1 || page.genus == 0 {
        return Err(Error::Precondition(format!(
            "the page must have genus at least 1 and one boundary component, got {page}"
        )));
    }
    if monodromy.surface != page {
        return Err(Error::SurfaceMismatch(monodromy.surface, page));
    }
    monodromy.validate()?;
    page_chain_only(monodromy)?;
    let g = page.genus;
    let fiber = SurfaceSig::closed(2 * g);
    let capped = monodromy.capped();
    let copy1 = TwistWord::new(fiber, capped.letters.clone())?;
    let copy2 = TwistWord::new(
        fiber,
        capped
            .inverse()
            .letters
            .iter()
            .map(|t| t.map_curves(|c| second_copy(c, g)))
            .collect(),
    )?;
    let monodromy = copy1.concat(&copy2)?;
    Ok(BranchedDouble {
        fiber,
        monodromy,
        copy1,
        copy2,
    })
}

/// Exact inverse over the rationals by Gauss–Jordan elimination.
fn rational_inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> =
                row.iter().map(|x| BigRational::from(x.clone())).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The involution of the doubled fiber exchanging the two copies, on
/// homology: it sends the class of each first-copy chain curve to the class
/// of the matching second-copy curve and back.
#[allow(clippy::needless_range_loop)]
pub fn swap_matrix(page_genus: u32) -> Result<SympMatrix> {
    let g = page_genus;
    let sig = SurfaceSig::closed(2 * g);
    let first: Vec<CurveId> = (1..=2 * g).map(CurveId::chain).collect();
    let second: Vec<CurveId> = first.iter().map(|&c| second_copy(c, g)).collect();
    let class = |c: &CurveId| curve_class(*c, &sig);
    let domain: Vec<_> = first
        .iter()
        .chain(&second)
        .map(class)
        .collect::<Result<_>>()?;
    let image: Vec<_> = second
        .iter()
        .chain(&first)
        .map(class)
        .collect::<Result<_>>()?;
    let dim = sig.rank();
    // columns are the class vectors
    let as_matrix = |cols: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..dim)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    };
    let c = as_matrix(&domain);
    let cp = as_matrix(&image);
    let inv = rational_inverse(&c)
        .ok_or_else(|| Error::Precondition("chain classes do not span homology".to_string()))?;
    let mut rows = Vec::with_capacity(dim);
    for row in &cp {
        let mut out = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut acc = BigRational::zero();
            for (k, x) in row.iter().enumerate() {
                acc += BigRational::from(x.clone()) * &inv[k][j];
            }
            if !acc.is_integer() {
                return Err(Error::Precondition("swap is not integral".to_string()));
            }
            out.push(acc.to_integer());
        }
        rows.push(out);
    }
    SympMatrix::from_rows(rows)
}

/// `H1` of the mapping torus: `coker(M − I) ⊕ Z`.
pub fn mapping_torus_homology(sig: SurfaceSig, monodromy: &TwistWord) -> Result<AbelianGroup> {
    if !sig.is_closed() {
        return Err(Error::Precondition(format!(
            "the fiber must be closed, got {sig}"
        )));
    }
    if monodromy.surface != sig {
        return Err(Error::SurfaceMismatch(monodromy.surface, sig));
    }
    let m = homology_action(monodromy)?;
    let rel = m.sub(&SympMatrix::identity(sig.rank()))?;
    Ok(AbelianGroup::cokernel(sig.rank(), &rel.rows()).with_extra_rank(1))
}

#[derive(Debug, Clone, Serialize)]
pub struct Splitting {
    pub x1: Fibration,
    pub x2: Fibration,
    /// Whether `x1 · x2` acts trivially on homology.
    pub closes: bool,
}

/// Two positive words over the disk whose concatenation closes up: `x1` is
/// `φ` positivized and `x2` the positivized inverse of `x1`.
pub fn splitting_words(phi: &TwistWord, config: &Config) -> Result<Splitting> {
    let p1 = positivize(phi, EngineChoice::Homology, config)?;
    let p2 = positivize(&p1.output.inverse(), EngineChoice::Homology, config)?;
    let total = p1.output.concat(&p2.output)?;
    let closes = homology_action(&total)?.is_identity();
    Ok(Splitting {
        x1: Fibration::disk(p1.output)?,
        x2: Fibration::disk(p2.output)?,
        closes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{CurveId::*, Twist};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn family_genus_two() {
        let r = filling_family(2, &cfg()).unwrap();
        assert_eq!(r.chis, vec![37, 27, 17]);
        assert_eq!(r.equal_verdicts.len(), 2);
        for v in &r.equal_verdicts {
            assert_eq!(v, &Certification::new(Verdict::Equal, ENGINE_PI1));
        }
        assert!(r.h1s.iter().all(AbelianGroup::is_trivial));
        assert!(r.allowable.iter().all(|&a| a));
        assert!(filling_family(1, &cfg()).is_err());
    }

    #[test]
    fn trefoil() {
        let t = trefoil_completions(&cfg()).unwrap();
        assert_eq!(t.big.word.len(), 24);
        assert_eq!(t.small.word.len(), 12);
        assert_eq!(t.big.euler_characteristic(), 24);
        assert_eq!(t.small.euler_characteristic(), 12);
        assert!(t.agree.is_equal());
    }

    #[test]
    fn double_of_a1() {
        let page = SurfaceSig::bounded(1);
        let phi = TwistWord::positive(page, &[A(1)]).unwrap();
        let d = branched_double_cover(page, &phi).unwrap();
        assert_eq!(d.fiber, SurfaceSig::closed(2));
        assert_eq!(d.monodromy.to_string(), "a1 d2^-1");
    }

    #[test]
    fn swap_is_an_involution() {
        for g in 1..=3 {
            let s = swap_matrix(g).unwrap();
            assert!(s.mul(&s).unwrap().is_identity());
            assert!(s.is_symplectic());
        }
    }

    #[test]
    fn boundary_twists_cancel_in_the_double() {
        let page = SurfaceSig::bounded(1);
        let phi = TwistWord::new(page, vec![Twist::pos(Delta), Twist::pos(B(1))]).unwrap();
        let d = branched_double_cover(page, &phi).unwrap();
        assert_eq!(d.monodromy.len(), 2);
        let bad = TwistWord::positive(SurfaceSig::bounded(2), &[D(2)]).unwrap();
        assert!(branched_double_cover(SurfaceSig::bounded(2), &bad).is_err());
    }

    #[test]
    fn mapping_tori() {
        let t = SurfaceSig::closed(1);
        assert_eq!(
            mapping_torus_homology(t, &TwistWord::identity(t)).unwrap(),
            AbelianGroup::free(3)
        );
        let a = TwistWord::positive(t, &[A(1)]).unwrap();
        assert_eq!(
            mapping_torus_homology(t, &a).unwrap(),
            AbelianGroup::free(2)
        );
        let aa = TwistWord::positive(t, &[A(1), A(1)]).unwrap();
        let g = mapping_torus_homology(t, &aa).unwrap();
        assert_eq!(g.rank, 2);
        assert_eq!(g.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn splittings() {
        let t = SurfaceSig::closed(1);
        let s =
            splitting_words(&TwistWord::new(t, vec![Twist::neg(A(1))]).unwrap(), &cfg()).unwrap();
        assert_eq!(s.x1.word.len(), 11);
        assert_eq!(s.x2.word.len(), 121);
        assert!(s.closes);
        let g2 = SurfaceSig::closed(2);
        let s = splitting_words(&TwistWord::positive(g2, &[A(1)]).unwrap(), &cfg()).unwrap();
        assert_eq!((s.x1.word.len(), s.x2.word.len()), (1, 39));
        let e = splitting_words(&TwistWord::identity(t), &cfg()).unwrap();
        assert!(e.x1.word.is_empty() && e.x2.word.is_empty());
    }
}
