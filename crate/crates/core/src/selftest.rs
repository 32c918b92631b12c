//! Startup checks of the twist model: named relators that must hold, the
//! chain relation and the change-of-coordinates dictionary.

use serde::Serialize;

use crate::error::Result;
use crate::rewrite::{chain_relation_selftest, coordinate_change_selftest};
use crate::surface::{geometric_disjoint, standard_curves, CurveId, SurfaceSig, Twist, TwistWord};
use crate::verify::{verify_batch, Certification, EngineChoice, Verdict};
use crate::Config;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub engine: String,
}

impl Check {
    fn new(name: impl Into<String>, c: Certification) -> Self {
        Check {
            name: name.into(),
            verdict: c.verdict,
            engine: c.engine,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Equal
    }
}

/// Braid and commutation relations among the standard curves of `sig`,
/// named by the pair of curves, each as a word equal to the identity.
pub fn pair_relators(sig: SurfaceSig) -> Vec<(String, TwistWord)> {
    let cs = standard_curves(&sig);
    let (p, n) = (Twist::pos, Twist::neg);
    let mut out = Vec::new();
    for (i, &x) in cs.iter().enumerate() {
        for &y in &cs[i + 1..] {
            let (kind, letters) = if geometric_disjoint(x, y) {
                ("commute", vec![p(x), p(y), n(x), n(y)])
            } else {
                ("braid", vec![p(x), p(y), p(x), n(y), n(x), n(y)])
            };
            let w = TwistWord {
                surface: sig,
                letters,
            };
            out.push((format!("{kind}({x},{y})"), w));
        }
    }
    out
}

/// Pairs of words that must be equal, with a name for each.
pub fn relation_corpus() -> Result<Vec<(String, TwistWord, TwistWord)>> {
    let mut out = Vec::new();
    let torus = SurfaceSig::closed(1);
    let ab = TwistWord::chain(torus);
    let a = TwistWord::positive(torus, &[CurveId::A(1)])?;
    let b = TwistWord::positive(torus, &[CurveId::B(1)])?;
    out.push((
        "torus (ab)^6 = 1".into(),
        ab.pow(6),
        TwistWord::identity(torus),
    ));
    out.push((
        "torus a^-1 = b(ab)^5".into(),
        a.inverse(),
        b.concat(&ab.pow(5))?,
    ));
    out.push((
        "torus b^-1 = (ab)^5 a".into(),
        b.inverse(),
        ab.pow(5).concat(&a)?,
    ));
    out.push(("torus (ab)^-1 = (ab)^5".into(), ab.inverse(), ab.pow(5)));
    for g in 1..=2u32 {
        let sig = SurfaceSig::bounded(g);
        out.push((
            format!("boundary twist genus {g}"),
            TwistWord::chain(sig).pow(4 * g as usize + 2),
            TwistWord::positive(sig, &[CurveId::Delta])?,
        ));
    }
    let closed2 = SurfaceSig::closed(2);
    out.push((
        "hyperelliptic genus 2 closed".into(),
        TwistWord::chain(closed2).pow(10),
        TwistWord::identity(closed2),
    ));
    for (name, w) in pair_relators(SurfaceSig::bounded(2)) {
        out.push((name, w.clone(), TwistWord::identity(w.surface)));
    }
    Ok(out)
}

/// Runs every check; the model is sound only if all pass.
pub fn run(config: &Config) -> Result<Vec<Check>> {
    let corpus = relation_corpus()?;
    let pairs: Vec<_> = corpus
        .iter()
        .map(|(_, l, r)| (l.clone(), r.clone()))
        .collect();
    let mut checks = Vec::new();
    for ((name, _, _), c) in corpus
        .iter()
        .zip(verify_batch(&pairs, EngineChoice::Auto, config))
    {
        checks.push(Check::new(name.clone(), c?));
    }
    let chain = chain_relation_selftest(config)?;
    checks.push(Check {
        name: "chain (a1 b1 a2)^4 = d2 e2".into(),
        verdict: if chain {
            Verdict::Equal
        } else {
            Verdict::NotEqual
        },
        engine: "homology+pi1".into(),
    });
    for g in 1..=3 {
        let ok = coordinate_change_selftest(SurfaceSig::bounded(g), config)?;
        checks.push(Check {
            name: format!("coordinate changes genus {g}"),
            verdict: if ok {
                Verdict::Equal
            } else {
                Verdict::NotEqual
            },
            engine: "homology+pi1".into(),
        });
    }
    Ok(checks)
}
