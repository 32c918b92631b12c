//! Action of twist words on first homology of the capped fiber.
//!
//! A positive twist about a curve of class `v` acts as the transvection
//! `x ↦ x + ⟨x, v⟩ v`. Words act by the product of their letters' matrices,
//! taken in word order; a conjugated letter `u · t_c · u⁻¹` is the
//! transvection about `M_u · [c]`. Entries are arbitrary precision.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{homology_class, BasicTwist, CurveId, SurfaceSig, Twist, TwistWord};

pub type HomologyVector = Vec<BigInt>;

/// `⟨u, v⟩ = Σ u(αi) v(βi) − u(βi) v(αi)`.
pub fn pairing(u: &[BigInt], v: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..u.len() / 2 {
        acc += &u[2 * i] * &v[2 * i + 1];
        acc -= &u[2 * i + 1] * &v[2 * i];
    }
    acc
}

/// Coefficients `r` with `⟨x, v⟩ = Σ x_j r_j`.
fn pairing_dual(v: &[BigInt]) -> Vec<BigInt> {
    let mut r = vec![BigInt::zero(); v.len()];
    for i in 0..v.len() / 2 {
        r[2 * i] = v[2 * i + 1].clone();
        r[2 * i + 1] = -&v[2 * i];
    }
    r
}

pub fn to_big(v: &[i64]) -> HomologyVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `x ↦ x + sign · ⟨x, v⟩ v`, in place.
pub fn transvect(x: &mut [BigInt], v: &[BigInt], sign: i64) {
    let p = pairing(x, v);
    if p.is_zero() {
        return;
    }
    let p = p * sign;
    for (xi, vi) in x.iter_mut().zip(v) {
        *xi += &p * vi;
    }
}

/// Square integer matrix of size `2g`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SympMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl SympMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        SympMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SympMatrix { dim, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        SympMatrix::from_rows(rows.iter().map(|r| to_big(r)).collect())
    }

    /// The pairing matrix `J` itself, with `⟨x, y⟩ = xᵀ J y`.
    pub fn form(dim: usize) -> Self {
        let mut m = SympMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        };
        for i in 0..dim / 2 {
            m.entries[(2 * i) * dim + 2 * i + 1] = BigInt::one();
            m.entries[(2 * i + 1) * dim + 2 * i] = -BigInt::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        SympMatrix { dim: n, entries }
    }

    pub fn mul(&self, other: &SympMatrix) -> Result<SympMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(SympMatrix { dim: n, entries })
    }

    pub fn apply(&self, x: &[BigInt]) -> Result<HomologyVector> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, xj) in x.iter().enumerate() {
                    acc += self.get(i, j) * xj;
                }
                acc
            })
            .collect())
    }

    pub fn sub(&self, other: &SympMatrix) -> Result<SympMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(SympMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `self ← self · T_v^sign` as a rank-one update.
    fn right_transvect(&mut self, v: &[BigInt], sign: i64) {
        let n = self.dim;
        let mv: Vec<BigInt> = (0..n)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        acc += self.get(i, j) * vj;
                    }
                }
                acc * sign
            })
            .collect();
        let dual = pairing_dual(v);
        for (i, mvi) in mv.iter().enumerate() {
            if mvi.is_zero() {
                continue;
            }
            for (j, dj) in dual.iter().enumerate() {
                if !dj.is_zero() {
                    self.entries[i * n + j] += mvi * dj;
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == SympMatrix::identity(self.dim)
    }

    /// `Mᵀ J M = J`.
    pub fn is_symplectic(&self) -> bool {
        let j = SympMatrix::form(self.dim);
        let lhs = self
            .transpose()
            .mul(&j)
            .and_then(|m| m.mul(self))
            .expect("square");
        lhs == j
    }

    /// Inverse of a symplectic matrix, `−J Mᵀ J`.
    pub fn symplectic_inverse(&self) -> SympMatrix {
        let j = SympMatrix::form(self.dim);
        let mut inv = j
            .mul(&self.transpose())
            .and_then(|m| m.mul(&j))
            .expect("square");
        for e in inv.entries.iter_mut() {
            *e = -&*e;
        }
        inv
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SympMatrix {}x{}", self.dim, self.dim)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn matrices_equal(m1: &SympMatrix, m2: &SympMatrix) -> Result<bool> {
    if m1.dim != m2.dim {
        return Err(Error::DimensionMismatch(m1.dim, m2.dim));
    }
    Ok(m1 == m2)
}

pub fn is_identity(m: &SympMatrix) -> bool {
    m.is_identity()
}

/// Matrix of `x ↦ x + ⟨x, v⟩ v`.
pub fn transvection(v: &[BigInt]) -> Result<SympMatrix> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::LengthMismatch {
            expected: v.len() + 1,
            found: v.len(),
        });
    }
    let mut m = SympMatrix::identity(v.len());
    m.right_transvect(v, 1);
    Ok(m)
}

pub fn transvection_for(v: &[BigInt], sig: &SurfaceSig) -> Result<SympMatrix> {
    if v.len() != sig.rank() {
        return Err(Error::LengthMismatch {
            expected: sig.rank(),
            found: v.len(),
        });
    }
    transvection(v)
}

/// Class of the curve a (possibly conjugated) letter twists about.
pub fn letter_class(t: &Twist, sig: &SurfaceSig) -> Result<HomologyVector> {
    let mut v = to_big(&homology_class(t.base, sig)?);
    for c in t.conj.iter().rev() {
        let cv = to_big(&homology_class(c.base, sig)?);
        transvect(&mut v, &cv, c.sign.value());
    }
    Ok(v)
}

/// Action of a word of basic twists.
pub fn basic_action(seq: &[BasicTwist], sig: &SurfaceSig) -> Result<SympMatrix> {
    let mut m = SympMatrix::identity(sig.rank());
    for t in seq {
        let v = to_big(&homology_class(t.base, sig)?);
        m.right_transvect(&v, t.sign.value());
    }
    Ok(m)
}

pub fn homology_action(w: &TwistWord) -> Result<SympMatrix> {
    let sig = &w.surface;
    let mut m = SympMatrix::identity(sig.rank());
    for t in &w.letters {
        let v = letter_class(t, sig)?;
        m.right_transvect(&v, t.sign.value());
    }
    Ok(m)
}

/// Class of `c` as a vector of big integers.
pub fn curve_class(c: CurveId, sig: &SurfaceSig) -> Result<HomologyVector> {
    Ok(to_big(&homology_class(c, sig)?))
}
