//! Permutations of interval exchange transformations and Rauzy induction.
//!
//! A permutation is stored in canonical one-line form: the alphabet is
//! relabeled so the top row reads `1 2 .. d`, and we keep the bottom row.
//! Equality of canonical forms is exactly equality up to alphabet renaming,
//! so the one-line tuple doubles as a hashable class-membership key.

use std::fmt;

use crate::error::{Error, Result};

pub type Letter = u32;

/// Which of the two induction moves to apply. Type 0 rewrites the bottom
/// row, type 1 the top row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Zero,
    One,
}

impl MoveKind {
    pub const BOTH: [MoveKind; 2] = [MoveKind::Zero, MoveKind::One];

    pub fn opposite(self) -> MoveKind {
        match self {
            MoveKind::Zero => MoveKind::One,
            MoveKind::One => MoveKind::Zero,
        }
    }

    pub fn index(self) -> usize {
        match self {
            MoveKind::Zero => 0,
            MoveKind::One => 1,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A permutation pair in canonical form: top row `1..d`, bottom row stored.
///
/// `bottom[k]` is the letter occupying position `k+1` of the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    bottom: Vec<Letter>,
}

impl Permutation {
    /// Builds from a one-line bottom row, validating that it is a
    /// permutation of `1..d` with `d >= 2`.
    pub fn from_one_line(bottom: Vec<Letter>) -> Result<Self> {
        let d = bottom.len();
        if d < 2 {
            return Err(Error::InvalidPermutation(format!(
                "need at least 2 letters, got {d}"
            )));
        }
        let mut seen = vec![false; d];
        for &x in &bottom {
            if x == 0 || x as usize > d || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "bottom row is not a permutation of 1..{d}"
                )));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { bottom })
    }

    /// Canonicalizes a two-row pair given as token lists, relabeling so the
    /// top row becomes `1..d`. Tokens are arbitrary non-space strings.
    pub fn canonicalize(top: &[&str], bottom: &[&str]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidPermutation(format!(
                "rows have different lengths ({} vs {})",
                top.len(),
                bottom.len()
            )));
        }
        let d = top.len();
        let mut label = std::collections::HashMap::new();
        for (i, tok) in top.iter().enumerate() {
            if label.insert(tok.to_string(), (i + 1) as Letter).is_some() {
                return Err(Error::InvalidPermutation(format!(
                    "duplicate letter `{tok}` in top row"
                )));
            }
        }
        let mut out = Vec::with_capacity(d);
        let mut used = vec![false; d];
        for tok in bottom {
            let &x = label
                .get(*tok)
                .ok_or_else(|| Error::InvalidPermutation(format!(
                    "letter `{tok}` appears in the bottom row only"
                )))?;
            if used[x as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "duplicate letter `{tok}` in bottom row"
                )));
            }
            used[x as usize - 1] = true;
            out.push(x);
        }
        Self::from_one_line(out)
    }

    /// Parses either a one-line form `3 2 1` or a two-row form
    /// `a b c / c b a`.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some((top, bottom)) = text.split_once('/') {
            let t: Vec<&str> = top.split_whitespace().collect();
            let b: Vec<&str> = bottom.split_whitespace().collect();
            return Self::canonicalize(&t, &b);
        }
        let mut out = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            let x: Letter = tok.parse().map_err(|_| Error::Parse {
                pos: pos + 1,
                msg: format!("expected an integer, got `{tok}`"),
            })?;
            out.push(x);
        }
        Self::from_one_line(out)
    }

    pub fn len(&self) -> usize {
        self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bottom row in canonical order.
    pub fn one_line(&self) -> &[Letter] {
        &self.bottom
    }

    /// Position of `letter` in the bottom row (1-based): the position its
    /// subinterval takes after the exchange.
    pub fn position(&self, letter: Letter) -> usize {
        self.bottom.iter().position(|&x| x == letter).unwrap() + 1
    }

    /// Letter at 1-based `pos` of the bottom row.
    pub fn letter_at(&self, pos: usize) -> Letter {
        self.bottom[pos - 1]
    }

    /// The reversal `(d, d-1, .., 1)`, the unique standard representative of
    /// a hyperelliptic class without removable singularities.
    pub fn reversal(d: usize) -> Self {
        Permutation {
            bottom: (1..=d as Letter).rev().collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let d = self.len();
        let mut out = vec![0; d];
        for (k, &x) in self.bottom.iter().enumerate() {
            out[x as usize - 1] = k as Letter + 1;
        }
        Permutation { bottom: out }
    }

    pub fn is_self_inverse(&self) -> bool {
        self.bottom
            .iter()
            .enumerate()
            .all(|(k, &x)| self.bottom[x as usize - 1] == k as Letter + 1)
    }

    /// Standard: the rows begin and end with each other's last and first
    /// letters, i.e. bottom = `d .. 1`.
    pub fn is_standard(&self) -> bool {
        let d = self.len() as Letter;
        self.bottom[0] == d && self.bottom[d as usize - 1] == 1
    }

    /// Irreducible: no proper prefix of the bottom row equals `{1..k}`.
    pub fn is_irreducible(&self) -> bool {
        let mut max = 0;
        for (k, &x) in self.bottom.iter().enumerate().take(self.len() - 1) {
            max = max.max(x);
            if max as usize == k + 1 {
                return false;
            }
        }
        true
    }

    fn require_irreducible(&self) -> Result<()> {
        if self.is_irreducible() {
            Ok(())
        } else {
            Err(Error::Reducible(self.to_string()))
        }
    }

    pub fn omega(&self) -> OmegaMatrix {
        let d = self.len();
        let mut m = vec![vec![0i64; d]; d];
        for a in 0..d {
            for b in 0..d {
                let pa = self.position(a as Letter + 1);
                let pb = self.position(b as Letter + 1);
                m[a][b] = if a < b && pa > pb {
                    1
                } else if a > b && pa < pb {
                    -1
                } else {
                    0
                };
            }
        }
        OmegaMatrix(m)
    }

    /// One induction move. The letter at the end of the rewritten row is
    /// reinserted just after the other row's last letter.
    pub fn rauzy_move(&self, kind: MoveKind) -> Result<Permutation> {
        Ok(self.rauzy_move_relabeled(kind)?.0)
    }

    /// Like [`Self::rauzy_move`], also returning the letter relabeling
    /// `map[old-1] = new` induced by recanonicalization. Needed by callers
    /// that carry per-letter data (lengths, suspension heights) across a
    /// move.
    pub fn rauzy_move_relabeled(&self, kind: MoveKind) -> Result<(Permutation, Vec<Letter>)> {
        self.require_irreducible()?;
        let d = self.len();
        let mut top: Vec<Letter> = (1..=d as Letter).collect();
        let mut bottom = self.bottom.clone();
        match kind {
            MoveKind::Zero => {
                // bottom's last letter moves to just after the top's last
                let a0 = d as Letter;
                let last = bottom.pop().unwrap();
                let at = bottom.iter().position(|&x| x == a0).unwrap();
                bottom.insert(at + 1, last);
            }
            MoveKind::One => {
                let a1 = *bottom.last().unwrap();
                let last = top.pop().unwrap();
                let at = top.iter().position(|&x| x == a1).unwrap();
                top.insert(at + 1, last);
            }
        }
        let mut map = vec![0 as Letter; d];
        for (i, &x) in top.iter().enumerate() {
            map[x as usize - 1] = i as Letter + 1;
        }
        let out = Permutation {
            bottom: bottom.iter().map(|&x| map[x as usize - 1]).collect(),
        };
        Ok((out, map))
    }

    /// The unique preimage of type `kind`: `rauzy_move(premove(p, k), k) = p`.
    pub fn rauzy_premove(&self, kind: MoveKind) -> Result<Permutation> {
        self.require_irreducible()?;
        let d = self.len();
        let mut top: Vec<Letter> = (1..=d as Letter).collect();
        let mut bottom = self.bottom.clone();
        match kind {
            MoveKind::Zero => {
                let a0 = d as Letter;
                let at = bottom.iter().position(|&x| x == a0).unwrap();
                let moved = bottom.remove(at + 1);
                bottom.push(moved);
            }
            MoveKind::One => {
                let a1 = *bottom.last().unwrap();
                let at = top.iter().position(|&x| x == a1).unwrap();
                let moved = top.remove(at + 1);
                top.push(moved);
            }
        }
        let mut map = vec![0 as Letter; d];
        for (i, &x) in top.iter().enumerate() {
            map[x as usize - 1] = i as Letter + 1;
        }
        Ok(Permutation {
            bottom: bottom.iter().map(|&x| map[x as usize - 1]).collect(),
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.bottom {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// Antisymmetric translation matrix: `omega = Omega * lambda` gives the
/// per-letter translations of the exchange.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaMatrix(pub Vec<Vec<i64>>);

impl OmegaMatrix {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, a: Letter, b: Letter) -> i64 {
        self.0[a as usize - 1][b as usize - 1]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.0[i][j] == -self.0[j][i]))
    }

    /// Reduction mod 2 as a symmetric 0/1 matrix.
    pub fn mod2(&self) -> Vec<Vec<u8>> {
        self.0
            .iter()
            .map(|row| row.iter().map(|&v| (v.unsigned_abs() % 2) as u8).collect())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        crate::lagrangian::rational_rank(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn canonicalize_relabels_by_top_row() {
        assert_eq!(Permutation::parse("a b c / c b a").unwrap(), p("3 2 1"));
        assert_eq!(Permutation::parse("a b c d / d b c a").unwrap(), p("4 2 3 1"));
        assert_eq!(Permutation::parse("x y / y x").unwrap(), p("2 1"));
    }

    #[test]
    fn canonicalize_rejects_bad_rows() {
        assert!(Permutation::parse("a a / a a").is_err());
        assert!(Permutation::parse("a b / a c").is_err());
        assert!(Permutation::parse("a b / a").is_err());
        assert!(Permutation::parse("1").is_err());
        assert!(Permutation::parse("2 2").is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("3 2 1").inverse(), p("3 2 1"));
        assert_eq!(p("3 1 2").inverse(), p("2 3 1"));
        assert_eq!(p("4 2 3 1").inverse(), p("4 2 3 1"));
        // composing one-line forms: inverse really is the group inverse
        let q = p("3 1 2");
        let qi = q.inverse();
        for x in 1..=3 {
            assert_eq!(qi.position(q.position(x) as Letter) as Letter, x);
        }
    }

    #[test]
    fn flags() {
        assert!(!p("1 2").is_irreducible());
        assert!(!p("2 1 4 3").is_irreducible());
        assert!(p("3 2 1").is_standard());
        assert!(p("3 2 1").is_irreducible());
        assert!(!p("3 1 2").is_self_inverse());
        assert!(p("3 1 2").is_irreducible());
        assert!(p("4 2 3 1").is_self_inverse());
    }

    #[test]
    fn standard_implies_irreducible_small() {
        for d in 2..=6 {
            for q in crate::class::all_irreducible(d) {
                if q.is_standard() {
                    assert!(q.is_irreducible());
                }
            }
        }
    }

    #[test]
    fn omega_small_cases() {
        assert_eq!(p("2 1").omega().0, vec![vec![0, 1], vec![-1, 0]]);
        let m = p("3 2 1").omega();
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                let want = if a < b { 1 } else if a > b { -1 } else { 0 };
                assert_eq!(m.entry(a, b), want);
            }
        }
    }

    #[test]
    fn omega_seven_letter_block_matrix() {
        // interior splits into two diagonal blocks surrounded by ones
        let m = p("7 3 2 6 5 4 1").omega().mod2();
        let want = [
            [0, 1, 1, 1, 1, 1, 1],
            [1, 0, 1, 0, 0, 0, 1],
            [1, 1, 0, 0, 0, 0, 1],
            [1, 0, 0, 0, 1, 1, 1],
            [1, 0, 0, 1, 0, 1, 1],
            [1, 0, 0, 1, 1, 0, 1],
            [1, 1, 1, 1, 1, 1, 0],
        ];
        for i in 0..7 {
            assert_eq!(m[i], want[i]);
        }
    }

    #[test]
    fn rauzy_moves_match_row_diagrams() {
        assert_eq!(p("3 2 1").rauzy_move(MoveKind::Zero).unwrap(), p("3 1 2"));
        assert_eq!(p("3 2 1").rauzy_move(MoveKind::One).unwrap(), p("2 3 1"));
        assert_eq!(p("2 3 1").rauzy_move(MoveKind::Zero).unwrap(), p("2 3 1"));
        assert!(p("1 2").rauzy_move(MoveKind::Zero).is_err());
    }

    #[test]
    fn premove_inverts_move() {
        assert_eq!(p("3 1 2").rauzy_premove(MoveKind::Zero).unwrap(), p("3 2 1"));
        assert_eq!(p("2 3 1").rauzy_premove(MoveKind::One).unwrap(), p("3 2 1"));
        let q = p("4 3 2 1");
        for kind in MoveKind::BOTH {
            let pre = q.rauzy_premove(kind).unwrap();
            assert_eq!(pre.rauzy_move(kind).unwrap(), q);
        }
    }

    #[test]
    fn moves_preserve_irreducibility_small() {
        for d in 2..=6 {
            for q in crate::class::all_irreducible(d) {
                for kind in MoveKind::BOTH {
                    assert!(q.rauzy_move(kind).unwrap().is_irreducible());
                }
            }
        }
    }

    #[test]
    fn inverse_conjugates_move_types_small() {
        for d in 2..=6 {
            for q in crate::class::all_irreducible(d) {
                for kind in MoveKind::BOTH {
                    let lhs = q.inverse().rauzy_move(kind).unwrap();
                    let rhs = q.rauzy_move(kind.opposite()).unwrap().inverse();
                    assert_eq!(lhs, rhs, "failed for {q} kind {kind}");
                }
            }
        }
    }

    #[test]
    fn omega_of_inverse_is_negated_after_alignment() {
        for s in ["3 2 1", "4 1 3 2", "5 3 1 4 2"] {
            let q = p(s);
            let m = q.omega();
            let mi = q.inverse().omega();
            assert!(m.is_antisymmetric());
            for a in 1..=q.len() as Letter {
                for b in 1..=q.len() as Letter {
                    let pa = q.position(a) as Letter;
                    let pb = q.position(b) as Letter;
                    assert_eq!(mi.entry(pa, pb), -m.entry(a, b));
                }
            }
        }
    }
}
