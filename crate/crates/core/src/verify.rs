//! Tiered equality of twist words.
//!
//! Homology is exact and cheap but only a necessary condition beyond the
//! closed torus. The free-group engine is faithful on one-boundary surfaces;
//! the closed-surface engine decides equality for closed genus `g ≥ 2`.
//! Every answer names the engine that produced it.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homology::homology_action;
use crate::par;
use crate::pi1::{self, Pi1Engine};
use crate::surface::TwistWord;
use crate::Config;

pub const ENGINE_TRIVIAL: &str = "trivial(g=0)";
pub const ENGINE_HOMOLOGY_FAITHFUL: &str = "homology(g=1,faithful)";
pub const ENGINE_HOMOLOGY: &str = "homology(necessary)";
pub const ENGINE_PI1: &str = "pi1(rel-boundary,faithful)";
pub const ENGINE_CLOSED: &str = "closed(surface-group,dehn)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    NotEqual,
    /// The word-length cap was reached before a decision.
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "true",
            Verdict::NotEqual => "false",
            Verdict::Unknown => "unknown",
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Equal
        } else {
            Verdict::NotEqual
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    /// Homology first, then the strongest exact engine for the surface.
    #[default]
    Auto,
    Homology,
    Pi1,
    Closed,
}

impl FromStr for EngineChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(EngineChoice::Auto),
            "homology" => Ok(EngineChoice::Homology),
            "pi1" => Ok(EngineChoice::Pi1),
            "closed" => Ok(EngineChoice::Closed),
            other => Err(Error::Precondition(format!("unknown engine `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub verdict: Verdict,
    pub engine: String,
}

impl Certification {
    pub fn new(verdict: Verdict, engine: &str) -> Self {
        Certification {
            verdict,
            engine: engine.to_string(),
        }
    }

    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    /// Whether the verdict came from an engine that is exact for the
    /// question asked (homology on the closed torus, the free-group engine,
    /// or the closed-surface engine).
    pub fn is_exact(&self) -> bool {
        self.engine != ENGINE_HOMOLOGY || self.verdict == Verdict::NotEqual
    }
}

fn homology_cert(w1: &TwistWord, w2: &TwistWord) -> Result<Certification> {
    let eq = homology_action(w1)? == homology_action(w2)?;
    let sig = w1.surface;
    let engine = if sig.genus == 1 && sig.is_closed() {
        ENGINE_HOMOLOGY_FAITHFUL
    } else {
        ENGINE_HOMOLOGY
    };
    Ok(Certification::new(Verdict::from_bool(eq), engine))
}

fn capped(r: Result<bool>, engine: &str) -> Result<Certification> {
    match r {
        Ok(b) => Ok(Certification::new(Verdict::from_bool(b), engine)),
        Err(Error::WordGrowthExceeded { .. }) => Ok(Certification::new(Verdict::Unknown, engine)),
        Err(e) => Err(e),
    }
}

fn exact_cert(w1: &TwistWord, w2: &TwistWord, config: &Config) -> Result<Certification> {
    let sig = w1.surface;
    if sig.is_closed() {
        if sig.genus == 1 {
            return homology_cert(w1, w2);
        }
        capped(pi1::closed_equal(w1, w2, *config), ENGINE_CLOSED)
    } else {
        capped(pi1::mcg_equal_rel_boundary(w1, w2, *config), ENGINE_PI1)
    }
}

/// Decides whether two words on the same surface are equal mapping classes.
pub fn verify(
    w1: &TwistWord,
    w2: &TwistWord,
    engine: EngineChoice,
    config: &Config,
) -> Result<Certification> {
    if w1.surface != w2.surface {
        return Err(Error::SurfaceMismatch(w1.surface, w2.surface));
    }
    w1.validate()?;
    w2.validate()?;
    let sig = w1.surface;
    if sig.genus == 0 {
        // the sphere and the disk rel boundary have trivial mapping class group
        return Ok(Certification::new(Verdict::Equal, ENGINE_TRIVIAL));
    }
    match engine {
        EngineChoice::Homology => homology_cert(w1, w2),
        EngineChoice::Pi1 => {
            if sig.is_closed() {
                return Err(Error::Precondition(format!(
                    "the pi1 engine needs a one-boundary surface, got {sig}"
                )));
            }
            exact_cert(w1, w2, config)
        }
        EngineChoice::Closed => {
            if !sig.is_closed() {
                return Err(Error::Precondition(format!(
                    "the closed engine needs a closed surface, got {sig}"
                )));
            }
            exact_cert(w1, w2, config)
        }
        EngineChoice::Auto => {
            let h = homology_cert(w1, w2)?;
            if h.verdict == Verdict::NotEqual || h.engine == ENGINE_HOMOLOGY_FAITHFUL {
                return Ok(h);
            }
            exact_cert(w1, w2, config)
        }
    }
}

/// Exact verdict where affordable, homology otherwise: runs `Auto` and
/// replaces an `Unknown` by the homology verdict, which names its engine.
pub fn verify_or_downgrade(
    w1: &TwistWord,
    w2: &TwistWord,
    config: &Config,
) -> Result<Certification> {
    let c = verify(w1, w2, EngineChoice::Auto, config)?;
    if c.verdict == Verdict::Unknown {
        return homology_cert(w1, w2);
    }
    Ok(c)
}

/// Verifies many pairs, concurrently under the parallel strategy.
pub fn verify_batch(
    pairs: &[(TwistWord, TwistWord)],
    engine: EngineChoice,
    config: &Config,
) -> Vec<Result<Certification>> {
    par::map(config.strategy, pairs, |(a, b)| {
        verify(a, b, engine, config)
    })
}

/// Images of every generator under `w`, shared by repeated comparisons
/// against one fixed word.
pub fn reference_images(w: &TwistWord, config: &Config) -> Result<Vec<pi1::FreeWord>> {
    Pi1Engine::new(w.surface.genus, *config).images(w)
}
