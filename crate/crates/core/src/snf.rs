//! Smith normal form over the integers and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// `Z^rank ⊕ Z/d1 ⊕ … ⊕ Z/dk` with `d1 | d2 | … | dk` and every `di ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup::free(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of `relations : Z^k → Z^n`, given as `n` rows of `k` columns.
    pub fn cokernel(n: usize, relations: &[Vec<BigInt>]) -> Self {
        assert_eq!(relations.len(), n, "one row per generator");
        let diag = invariant_factors(relations);
        let torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
        AbelianGroup {
            rank: n - diag.len(),
            torsion,
        }
    }

    /// Direct sum with `Z^extra`.
    pub fn with_extra_rank(mut self, extra: usize) -> Self {
        self.rank += extra;
        self
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Nonzero diagonal entries of the Smith normal form, positive and forming
/// a divisibility chain. The number of entries is the rank of the matrix.
#[allow(clippy::needless_range_loop)]
pub fn invariant_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide the whole remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(
            invariant_factors(&big(&[&[2, 0], &[0, 3]])),
            vec![BigInt::from(1), BigInt::from(6)]
        );
        assert_eq!(
            invariant_factors(&big(&[&[0, 0], &[0, 0]])),
            Vec::<BigInt>::new()
        );
        assert_eq!(
            invariant_factors(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn cokernels() {
        let g = AbelianGroup::cokernel(2, &big(&[&[2, 0], &[0, 0]]));
        assert_eq!(
            g,
            AbelianGroup {
                rank: 1,
                torsion: vec![BigInt::from(2)]
            }
        );
        assert_eq!(g.to_string(), "Z + Z/2");
        assert!(AbelianGroup::cokernel(2, &big(&[&[1, 0], &[0, 1]])).is_trivial());
        assert_eq!(
            AbelianGroup::cokernel(3, &big(&[&[], &[], &[]])),
            AbelianGroup::free(3)
        );
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }

    #[test]
    fn serializes_small_torsion_as_numbers() {
        let g = AbelianGroup {
            rank: 2,
            torsion: vec![BigInt::from(3)],
        };
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"rank":2,"torsion":[3]}"#
        );
    }
}
