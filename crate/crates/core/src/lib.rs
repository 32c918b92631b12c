//! Mapping classes of surfaces as words of Dehn twists: exact relation
//! checking on homology and on the free fundamental group, monodromy
//! rewriting, and invariants of Lefschetz fibrations and surface bundles.

pub mod constructions;
pub mod error;
pub mod fibration;
pub mod homology;
pub mod par;
pub mod pi1;
pub mod rewrite;
pub mod selftest;
pub mod snf;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
pub use fibration::{Base, Fibration};
pub use homology::{homology_action, SympMatrix};
pub use par::Strategy;
pub use pi1::{FreeWord, Pi1Engine};
pub use snf::AbelianGroup;
pub use surface::{BasicTwist, CurveId, Sign, SurfaceSig, Twist, TwistWord};
pub use verify::{verify, Certification, EngineChoice, Verdict};

/// Default bound on the length of any intermediate free-group word.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

/// Resource limits and execution strategy shared by the engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub cap: usize,
    pub strategy: Strategy,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cap: DEFAULT_WORD_CAP,
            strategy: Strategy::default(),
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            strategy: Strategy::Sequential,
            ..Config::default()
        }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        Config { cap, ..self }
    }
}
