//! Dehn's algorithm for the closed surface group
//! `⟨x1, y1, …, xg, yg | [x1, y1] ⋯ [xg, yg]⟩`, `g ≥ 2`.
//!
//! Pieces of the relator have length one, so the presentation is
//! `C'(1/6)` once `4g ≥ 8` and a freely reduced word is trivial iff greedy
//! replacement of long relator subwords empties it.

use std::collections::HashMap;

use super::{boundary_letters, invert};

#[derive(Debug, Clone)]
pub struct DehnReducer {
    /// Subword of a cyclic rotation of `R^{±1}` longer than half of it,
    /// mapped to the inverse of the complementary subword.
    table: HashMap<Vec<i32>, Vec<i32>>,
    min_len: usize,
    max_len: usize,
}

impl DehnReducer {
    pub fn new(genus: u32) -> Self {
        assert!(genus >= 2, "Dehn reduction needs genus at least 2");
        let rel = boundary_letters(genus);
        let n = rel.len();
        let mut table = HashMap::new();
        for r in [rel.clone(), invert(&rel)] {
            for rot in 0..n {
                let cyc: Vec<i32> = r[rot..].iter().chain(r[..rot].iter()).copied().collect();
                for len in n / 2 + 1..=n {
                    let (head, tail) = cyc.split_at(len);
                    table.entry(head.to_vec()).or_insert_with(|| invert(tail));
                }
            }
        }
        DehnReducer {
            table,
            min_len: n / 2 + 1,
            max_len: n,
        }
    }

    /// Pushes `letter` onto a reduced word, keeping it freely reduced and
    /// free of long relator pieces.
    pub fn push(&self, out: &mut Vec<i32>, letter: i32) {
        let mut pending = vec![letter];
        while let Some(x) = pending.pop() {
            if out.last() == Some(&-x) {
                out.pop();
                continue;
            }
            out.push(x);
            for len in (self.min_len..=self.max_len.min(out.len())).rev() {
                let start = out.len() - len;
                if let Some(rep) = self.table.get(&out[start..]) {
                    out.truncate(start);
                    pending.extend(rep.iter().rev());
                    break;
                }
            }
        }
    }

    pub fn reduce(&self, w: &[i32]) -> Vec<i32> {
        let mut out = Vec::with_capacity(w.len());
        for &l in w {
            self.push(&mut out, l);
        }
        out
    }

    pub fn is_trivial(&self, w: &[i32]) -> bool {
        self.reduce(w).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_and_conjugates_vanish() {
        let d = DehnReducer::new(2);
        let r = boundary_letters(2);
        assert!(d.is_trivial(&r));
        assert!(d.is_trivial(&invert(&r)));
        let mut w = vec![3, -1];
        w.extend(&r);
        w.extend([1, -3]);
        assert!(d.is_trivial(&w));
        let mut rot = r[3..].to_vec();
        rot.extend(&r[..3]);
        assert!(d.is_trivial(&rot));
    }

    #[test]
    fn generators_survive() {
        let d = DehnReducer::new(2);
        for z in [1, 2, 3, 4, -1, -4] {
            assert_eq!(d.reduce(&[z]), vec![z]);
        }
        assert!(!d.is_trivial(&[1, 2, -1, -2]));
    }

    #[test]
    fn long_piece_is_shortened() {
        let d = DehnReducer::new(2);
        let r = boundary_letters(2);
        // five letters of the relator equal the inverse of the other three
        let w = r[..5].to_vec();
        assert_eq!(d.reduce(&w), invert(&r[5..]));
    }
}
