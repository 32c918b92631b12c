//! Lefschetz fibrations over the disk and the sphere, given by a fiber and
//! a positive word of vanishing cycles.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{homology_action, letter_class};
use crate::rewrite::{positivize, RewriteReport};
use crate::snf::AbelianGroup;
use crate::surface::{SurfaceSig, TwistWord};
use crate::verify::EngineChoice;
use crate::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Disk,
    Sphere,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Disk => "disk",
            Base::Sphere => "sphere",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fibration {
    pub fiber: SurfaceSig,
    pub base: Base,
    pub word: TwistWord,
}

impl Fibration {
    /// Checks positivity, and for the sphere a closed fiber and trivial
    /// homology monodromy.
    pub fn new(base: Base, word: TwistWord) -> Result<Self> {
        word.validate()?;
        if let Some(t) = word.letters.iter().find(|t| !t.is_positive()) {
            return Err(Error::Precondition(format!(
                "vanishing cycles must be positive twists, found {t}"
            )));
        }
        if base == Base::Sphere {
            if !word.surface.is_closed() {
                return Err(Error::Precondition(format!(
                    "a fibration over the sphere needs a closed fiber, got {}",
                    word.surface
                )));
            }
            if !homology_action(&word)?.is_identity() {
                return Err(Error::Precondition(
                    "monodromy around the sphere must be trivial on homology".to_string(),
                ));
            }
        }
        Ok(Fibration {
            fiber: word.surface,
            base,
            word,
        })
    }

    pub fn disk(word: TwistWord) -> Result<Self> {
        Fibration::new(Base::Disk, word)
    }

    pub fn sphere(word: TwistWord) -> Result<Self> {
        Fibration::new(Base::Sphere, word)
    }

    pub fn singular_fibers(&self) -> usize {
        self.word.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let g = self.fiber.genus as i64;
        let b = self.fiber.boundary as i64;
        let k = self.word.len() as i64;
        match self.base {
            Base::Disk => (2 - 2 * g - b) + k,
            Base::Sphere => 2 * (2 - 2 * g) + k,
        }
    }

    /// `H1(fiber) / ⟨vanishing cycle classes⟩`.
    pub fn first_homology(&self) -> Result<AbelianGroup> {
        let n = self.fiber.rank();
        let mut rows = vec![Vec::with_capacity(self.word.len()); n];
        for t in &self.word.letters {
            let v = letter_class(t, &self.fiber)?;
            for (row, x) in rows.iter_mut().zip(v) {
                row.push(x);
            }
        }
        Ok(AbelianGroup::cokernel(n, &rows))
    }

    /// Every vanishing cycle is homologically essential.
    pub fn is_allowable(&self) -> Result<bool> {
        for t in &self.word.letters {
            if letter_class(t, &self.fiber)?.iter().all(BigInt::is_zero) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Closes a fibration over the disk with one-boundary fiber to one over the
/// sphere: cap the fiber, append the inverse word and positivize.
pub fn double(palf: &Fibration, config: &Config) -> Result<(Fibration, RewriteReport)> {
    if palf.base != Base::Disk || palf.fiber.boundary != 1 {
        return Err(Error::Precondition(
            "doubling needs a fibration over the disk with one-boundary fiber".to_string(),
        ));
    }
    if !palf.is_allowable()? {
        return Err(Error::Precondition(
            "doubling needs an allowable fibration".to_string(),
        ));
    }
    let w = palf.word.capped();
    let closed = w.concat(&w.inverse())?;
    let report = positivize(&closed, EngineChoice::Auto, config)?;
    let fib = Fibration::sphere(report.output.clone())?;
    Ok((fib, report))
}

/// Fiber sum along a regular fiber: concatenation of the words.
pub fn fiber_sum(f1: &Fibration, f2: &Fibration) -> Result<Fibration> {
    if f1.base != Base::Sphere || f2.base != Base::Sphere {
        return Err(Error::Precondition(
            "fiber sum needs fibrations over the sphere".to_string(),
        ));
    }
    if f1.fiber != f2.fiber {
        return Err(Error::SurfaceMismatch(f1.fiber, f2.fiber));
    }
    Fibration::sphere(f1.word.concat(&f2.word)?)
}

/// Genus `n` fibration over the sphere with monodromy word
/// `(a1 b1 … an bn)^{4n+2}`.
pub fn gn_fibration(n: u32) -> Result<Fibration> {
    if n == 0 {
        return Err(Error::Precondition("genus must be at least 1".to_string()));
    }
    let sig = SurfaceSig::closed(n);
    Fibration::sphere(TwistWord::chain(sig).pow(4 * n as usize + 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenBook {
    pub page: SurfaceSig,
    pub monodromy: TwistWord,
}

/// The open book on the boundary of a fibration over the disk.
pub fn boundary_open_book(palf: &Fibration) -> Result<OpenBook> {
    if palf.base != Base::Disk || palf.fiber.boundary != 1 {
        return Err(Error::Precondition(
            "open books come from fibrations over the disk with one-boundary fiber".to_string(),
        ));
    }
    Ok(OpenBook {
        page: palf.fiber,
        monodromy: palf.word.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{CurveId::*, Twist};

    fn cfg() -> Config {
        Config::default()
    }

    fn trefoil() -> Fibration {
        Fibration::disk(TwistWord::positive(SurfaceSig::bounded(1), &[A(1), B(1)]).unwrap())
            .unwrap()
    }

    #[test]
    fn euler_characteristics() {
        for n in 1..=5u32 {
            let w = TwistWord::chain(SurfaceSig::bounded(n)).pow(4 * n as usize + 2);
            let chi = Fibration::disk(w).unwrap().euler_characteristic();
            let n = n as i64;
            assert_eq!(chi, 8 * n * n + 2 * n + 1);
        }
        assert_eq!(gn_fibration(1).unwrap().euler_characteristic(), 12);
        assert_eq!(gn_fibration(2).unwrap().euler_characteristic(), 36);
    }

    #[test]
    fn homology_of_simple_fibrations() {
        let t = SurfaceSig::bounded(1);
        let empty = Fibration::disk(TwistWord::identity(t)).unwrap();
        assert_eq!(empty.first_homology().unwrap(), AbelianGroup::free(2));
        let aa = Fibration::disk(TwistWord::positive(t, &[A(1), A(1)]).unwrap()).unwrap();
        assert_eq!(aa.first_homology().unwrap(), AbelianGroup::free(1));
        assert!(trefoil().first_homology().unwrap().is_trivial());
    }

    #[test]
    fn allowability() {
        let t = SurfaceSig::bounded(1);
        assert!(trefoil().is_allowable().unwrap());
        let d = Fibration::disk(TwistWord::positive(t, &[A(1), Delta]).unwrap()).unwrap();
        assert!(!d.is_allowable().unwrap());
        assert!(Fibration::disk(TwistWord::identity(t))
            .unwrap()
            .is_allowable()
            .unwrap());
    }

    #[test]
    fn validation() {
        let t = SurfaceSig::closed(1);
        let neg = TwistWord::new(t, vec![Twist::neg(A(1))]).unwrap();
        assert!(Fibration::disk(neg).is_err());
        let a = TwistWord::positive(t, &[A(1)]).unwrap();
        assert!(Fibration::sphere(a).is_err());
        let bounded = TwistWord::chain(SurfaceSig::bounded(1)).pow(6);
        assert!(Fibration::sphere(bounded).is_err());
    }

    #[test]
    fn trefoil_double() {
        let (f, report) = double(&trefoil(), &cfg()).unwrap();
        assert_eq!(f.word.len(), 24);
        assert_eq!(f.euler_characteristic(), 24);
        assert!(report.verified.is_equal());
        assert!(f.first_homology().unwrap().is_trivial());
    }

    #[test]
    fn empty_double() {
        let p = Fibration::disk(TwistWord::identity(SurfaceSig::bounded(1))).unwrap();
        let (f, _) = double(&p, &cfg()).unwrap();
        assert!(f.word.is_empty());
        assert_eq!(f.fiber, SurfaceSig::closed(1));
    }

    #[test]
    fn fiber_sums() {
        let g1 = gn_fibration(1).unwrap();
        assert_eq!(fiber_sum(&g1, &g1).unwrap().euler_characteristic(), 24);
        let g2 = gn_fibration(2).unwrap();
        let s = fiber_sum(&g2, &g2).unwrap();
        assert_eq!(s.word.len(), 80);
        assert_eq!(s.euler_characteristic(), 76);
        assert!(fiber_sum(&g1, &g2).is_err());
    }

    #[test]
    fn open_book_of_trefoil() {
        let ob = boundary_open_book(&trefoil()).unwrap();
        assert_eq!(ob.page, SurfaceSig::bounded(1));
        assert_eq!(ob.monodromy.to_string(), "a1 b1");
    }
}
