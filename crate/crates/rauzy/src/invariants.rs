//! Suspension invariants of a permutation: singularity signature, genus,
//! spin parity, removable-singularity reduction, hyperellipticity, and the
//! class key that determines Rauzy class membership.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Letter, MoveKind, Permutation};

/// Singularity degrees of any suspension of a permutation. The marked entry
/// is the degree of the singularity at the left endpoint, which induction
/// never moves; the rest are kept sorted descending so equal signatures
/// compare equal. Degree-0 (removable) entries are retained.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub marked: u32,
    pub rest: Vec<u32>,
}

impl Signature {
    pub fn new(marked: u32, mut rest: Vec<u32>) -> Result<Self> {
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let total: u64 = marked as u64 + rest.iter().map(|&x| x as u64).sum::<u64>();
        if !total.is_multiple_of(2) {
            return Err(Error::InvalidSignature(format!(
                "degree sum {total} is odd"
            )));
        }
        Ok(Signature { marked, rest })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (marked, rest) = crate::sigtext::parse_entries(text)?;
        if marked < 0 || rest.iter().any(|&x| x < 0) {
            return Err(Error::InvalidSignature(format!(
                "negative degree in `{text}`"
            )));
        }
        Signature::new(marked as u32, rest.iter().map(|&x| x as u32).collect())
    }

    pub fn degree_sum(&self) -> u64 {
        self.marked as u64 + self.rest.iter().map(|&x| x as u64).sum::<u64>()
    }

    pub fn genus(&self) -> u32 {
        (1 + self.degree_sum() / 2) as u32
    }

    pub fn singularity_count(&self) -> usize {
        1 + self.rest.len()
    }

    /// Letters any representative permutation must have: d = m + s + 1.
    pub fn letters(&self) -> usize {
        self.singularity_count() + self.degree_sum() as usize + 1
    }

    pub fn all_even(&self) -> bool {
        self.marked.is_multiple_of(2) && self.rest.iter().all(|&x| x % 2 == 0)
    }

    pub fn has_removable(&self) -> bool {
        self.marked == 0 || self.rest.contains(&0)
    }

    pub fn all_degrees(&self) -> Vec<u32> {
        let mut v = vec![self.marked];
        v.extend_from_slice(&self.rest);
        v
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rest: Vec<i64> = self.rest.iter().map(|&x| x as i64).collect();
        write!(f, "{}", crate::sigtext::render(self.marked as i64, &rest))
    }
}

/// Component tag completing the classification of a Rauzy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    Hyperelliptic,
    Odd,
    Even,
    NonHyperelliptic,
    /// Connected stratum: no extra tag needed.
    Plain,
}

impl ComponentKind {
    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "hyp" | "hyperelliptic" => Ok(ComponentKind::Hyperelliptic),
            "odd" => Ok(ComponentKind::Odd),
            "even" => Ok(ComponentKind::Even),
            "nonhyp" | "nonhyperelliptic" => Ok(ComponentKind::NonHyperelliptic),
            "none" | "-" => Ok(ComponentKind::Plain),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown component type `{other}`"),
            }),
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ComponentKind::Hyperelliptic => "hyperelliptic",
            ComponentKind::Odd => "odd",
            ComponentKind::Even => "even",
            ComponentKind::NonHyperelliptic => "nonhyperelliptic",
            ComponentKind::Plain => "none",
        };
        write!(f, "{s}")
    }
}

/// Signature plus component type. Two irreducible permutations lie in the
/// same Rauzy class exactly when their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassKey {
    pub signature: Signature,
    pub kind: ComponentKind,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.signature, self.kind)
    }
}

// ---------------------------------------------------------------------------
// signature via union-find over segment endpoints
// ---------------------------------------------------------------------------

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Singularity signature from the endpoint identification rules: tokens
/// `(letter, row, side)` are glued along each row, at the outer corners, and
/// across the two occurrences of every letter; each class's degree is one
/// less than its number of interior top-row left endpoints.
pub fn signature(p: &Permutation) -> Result<Signature> {
    if !p.is_irreducible() {
        return Err(Error::Reducible(p.to_string()));
    }
    let d = p.len();
    // token layout: ((letter-1)*2 + row)*2 + side, side 0 = left
    let tok = |letter: Letter, row: usize, side: usize| -> usize {
        ((letter as usize - 1) * 2 + row) * 2 + side
    };
    let mut uf = UnionFind::new(4 * d);
    // rule 1: consecutive segments share a vertex
    for i in 1..d {
        uf.union(tok(i as Letter, 0, 1), tok(i as Letter + 1, 0, 0));
        uf.union(tok(p.letter_at(i), 1, 1), tok(p.letter_at(i + 1), 1, 0));
    }
    // rule 2: outer corners
    uf.union(tok(1, 0, 0), tok(p.letter_at(1), 1, 0));
    uf.union(tok(d as Letter, 0, 1), tok(p.letter_at(d), 1, 1));
    // rule 3: the two copies of each segment are identified by translation
    for x in 1..=d as Letter {
        uf.union(tok(x, 0, 0), tok(x, 1, 0));
        uf.union(tok(x, 0, 1), tok(x, 1, 1));
    }

    let mut counts = std::collections::BTreeMap::new();
    for x in 2..=d as Letter {
        // interior top vertices: left endpoints of all but the first segment
        let r = uf.find(tok(x, 0, 0));
        *counts.entry(r).or_insert(0u32) += 1;
    }
    let marked_root = uf.find(tok(1, 0, 0));
    let marked = match counts.get(&marked_root) {
        Some(&n) => n - 1,
        None => {
            return Err(Error::ConstructionFailed(format!(
                "marked vertex class of {p} contains no counted vertex"
            )))
        }
    };
    let rest: Vec<u32> = counts
        .iter()
        .filter(|(&r, _)| r != marked_root)
        .map(|(_, &n)| n - 1)
        .collect();
    Signature::new(marked, rest)
}

pub fn genus(p: &Permutation) -> Result<u32> {
    Ok(signature(p)?.genus())
}

// ---------------------------------------------------------------------------
// spin parity
// ---------------------------------------------------------------------------

/// Trace of one spin-parity computation: the symplectic pair extraction on
/// the mod-2 intersection form of the vertical cycles.
#[derive(Debug, Clone)]
pub struct SpinWorkspace {
    /// Extracted pairs in extraction order, as original cycle indices.
    pub pairs: Vec<(usize, usize)>,
    /// Quadratic form values of each extracted pair.
    pub pair_values: Vec<(u8, u8)>,
    /// GF(2) coordinates of each extracted cycle in the original basis.
    pub pair_cycles: Vec<(Vec<u8>, Vec<u8>)>,
    parity: u8,
}

impl SpinWorkspace {
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// Runs the pair extraction on a symmetric GF(2) matrix with given initial
/// quadratic-form values. `choose` picks among the currently intersecting
/// index pairs; the default strategy takes the lowest.
fn extract_pairs(
    mut m: Vec<Vec<u8>>,
    mut phi: Vec<u8>,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> SpinWorkspace {
    let n = m.len();
    let mut cycles: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut e = vec![0u8; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut ws = SpinWorkspace {
        pairs: Vec::new(),
        pair_values: Vec::new(),
        pair_cycles: Vec::new(),
        parity: 0,
    };
    loop {
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for (ii, &i) in alive.iter().enumerate() {
            for &j in &alive[ii + 1..] {
                if m[i][j] == 1 {
                    candidates.push((i, j));
                }
            }
        }
        if candidates.is_empty() {
            break;
        }
        let (a, b) = candidates[choose(&candidates)];
        ws.pairs.push((a, b));
        ws.pair_values.push((phi[a], phi[b]));
        ws.pair_cycles.push((cycles[a].clone(), cycles[b].clone()));
        ws.parity ^= phi[a] & phi[b];
        let rest: Vec<usize> = alive.iter().copied().filter(|&k| k != a && k != b).collect();
        let mut new_phi = phi.clone();
        let mut adjust = Vec::with_capacity(rest.len());
        for &k in &rest {
            let ca = m[k][b]; // coefficient of cycle a in the correction
            let cb = m[k][a];
            new_phi[k] = phi[k] ^ (ca & phi[a]) ^ (cb & phi[b]) ^ (ca & cb);
            adjust.push((k, ca, cb));
        }
        let mut new_m = m.clone();
        for &(k, ka, kb) in &adjust {
            for &(l, la, lb) in &adjust {
                new_m[k][l] = m[k][l] ^ (kb & la) ^ (ka & lb);
            }
            let mut c = cycles[k].clone();
            if ka == 1 {
                for (ci, ai) in c.iter_mut().zip(&cycles[a]) {
                    *ci ^= ai;
                }
            }
            if kb == 1 {
                for (ci, bi) in c.iter_mut().zip(&cycles[b]) {
                    *ci ^= bi;
                }
            }
            cycles[k] = c;
        }
        m = new_m;
        phi = new_phi;
        alive = rest;
    }
    ws
}

/// Spin parity of a permutation whose singularity degrees are all even.
/// Returns `None` when some degree is odd (the invariant is undefined).
pub fn spin_parity(p: &Permutation) -> Result<Option<u8>> {
    Ok(spin_workspace(p)?.map(|ws| ws.parity()))
}

pub fn spin_workspace(p: &Permutation) -> Result<Option<SpinWorkspace>> {
    spin_workspace_with(p, |_| 0)
}

/// Spin computation with an injectable pair-selection strategy; the parity
/// must not depend on the choice, which the test suite exercises.
pub fn spin_workspace_with(
    p: &Permutation,
    choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> Result<Option<SpinWorkspace>> {
    let sig = signature(p)?;
    if !sig.all_even() {
        return Ok(None);
    }
    let m = p.omega().mod2();
    let phi = vec![1u8; p.len()];
    let ws = extract_pairs(m, phi, choose);
    if ws.pair_count() as u32 != sig.genus() {
        return Err(Error::ConstructionFailed(format!(
            "extracted {} pairs for {p}, expected genus {}",
            ws.pair_count(),
            sig.genus()
        )));
    }
    Ok(Some(ws))
}

/// Quadratic-form value and pair count contributed by one interior diagonal
/// block of a standard permutation, starting from zeroed form values.
pub fn block_phi(block: Vec<Vec<u8>>) -> (u8, usize) {
    let n = block.len();
    let ws = extract_pairs(block, vec![0u8; n], |_| 0);
    (ws.parity(), ws.pair_count())
}

/// Interior diagonal blocks of a standard permutation, as inclusive letter
/// ranges. Both rows restricted to such a range occupy the same positions.
pub fn standard_blocks(p: &Permutation) -> Result<Vec<(Letter, Letter)>> {
    if !p.is_standard() {
        return Err(Error::NotStandard(p.to_string()));
    }
    let d = p.len();
    let mut blocks = Vec::new();
    let mut start = 2usize;
    while start < d {
        let mut max_pos = 0usize;
        let mut k = start;
        loop {
            max_pos = max_pos.max(p.position(p.letter_at(k) as Letter));
            // positions start..=k of the bottom row hold letters start..=k
            // exactly when every letter seen so far sits within the range
            let all_in = (start..=k).all(|i| {
                let x = p.letter_at(i);
                (x as usize) >= start && (x as usize) <= k
            });
            if all_in {
                break;
            }
            k += 1;
            if k > d - 1 {
                return Err(Error::ConstructionFailed(format!(
                    "interior of {p} does not split into blocks"
                )));
            }
        }
        blocks.push((start as Letter, k as Letter));
        start = k + 1;
    }
    Ok(blocks)
}

/// Spin parity of a standard permutation via its interior block
/// decomposition: the outer pair contributes 1, each block its own value.
pub fn spin_parity_standard(p: &Permutation) -> Result<Option<u8>> {
    let sig = signature(p)?;
    if !sig.all_even() {
        return Ok(None);
    }
    let blocks = standard_blocks(p)?;
    let m2 = p.omega().mod2();
    let mut parity = 1u8;
    let mut pairs = 1usize;
    for &(a, b) in &blocks {
        let idx: Vec<usize> = (a as usize - 1..=b as usize - 1).collect();
        let sub: Vec<Vec<u8>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| m2[i][j]).collect())
            .collect();
        let (phi, n) = block_phi(sub);
        parity ^= phi;
        pairs += n;
    }
    if pairs as u32 != sig.genus() {
        return Err(Error::ConstructionFailed(format!(
            "block decomposition of {p} extracted {pairs} pairs, expected {}",
            sig.genus()
        )));
    }
    Ok(Some(parity))
}

// ---------------------------------------------------------------------------
// standardization and removable singularities
// ---------------------------------------------------------------------------

/// Walks a permutation to a standard member of its class by the explicit
/// move schedule: repeatedly push a letter that straddles the current
/// overlap bound to the end of a row.
pub fn standardize(p: &Permutation) -> Result<Permutation> {
    if !p.is_irreducible() {
        return Err(Error::Reducible(p.to_string()));
    }
    let mut cur = p.clone();
    let d = cur.len();
    let mut guard = 0usize;
    while !cur.is_standard() {
        guard += 1;
        if guard > d * d + d + 2 {
            return Err(Error::ConstructionFailed(format!(
                "standardization of {p} did not terminate"
            )));
        }
        let dl = d as Letter;
        let a1 = cur.letter_at(d); // last letter of the bottom row
        let pos0_a1 = a1 as usize; // its top position
        let pos1_a0 = cur.position(dl); // bottom position of the top's last letter
        let n = pos0_a1.min(pos1_a0);
        let (kind, steps) = if n == 1 {
            if pos1_a0 == 1 {
                // bottom row starts with the top's last letter
                (MoveKind::Zero, d - cur.position(1))
            } else {
                (MoveKind::One, d - cur.letter_at(1) as usize)
            }
        } else if pos1_a0 <= pos0_a1 {
            // n is attained on the bottom row: a type-0 schedule cycles the
            // letters after the top's last letter there, so the straddling
            // letter can be rotated into the final position
            let g = (1..n)
                .map(|g| g as Letter)
                .find(|&g| cur.position(g) > n)
                .ok_or_else(|| Error::Reducible(cur.to_string()))?;
            (MoveKind::Zero, d - cur.position(g))
        } else {
            let g = (1..n)
                .map(|i| cur.letter_at(i))
                .find(|&g| (g as usize) > n)
                .ok_or_else(|| Error::Reducible(cur.to_string()))?;
            (MoveKind::One, d - g as usize)
        };
        for _ in 0..steps {
            cur = cur.rauzy_move(kind)?;
        }
    }
    Ok(cur)
}

fn delete_letter(p: &Permutation, letter: Letter) -> Permutation {
    let out: Vec<Letter> = p
        .one_line()
        .iter()
        .filter(|&&x| x != letter)
        .map(|&x| if x > letter { x - 1 } else { x })
        .collect();
    Permutation::from_one_line(out).unwrap()
}

/// Repeatedly applies the three forget maps to a standard permutation until
/// no removable (degree-0) singularity remains, stopping at two letters.
/// Returns a standard representative of the underlying class.
pub fn reduce_removable(p: &Permutation) -> Result<Permutation> {
    if !p.is_standard() {
        return Err(Error::NotStandard(p.to_string()));
    }
    let mut cur = p.clone();
    loop {
        let d = cur.len();
        if d == 2 || !signature(&cur)?.has_removable() {
            return Ok(cur);
        }
        // adjacent in both rows: forget the second of the pair
        let pair = (1..d as Letter)
            .find(|&g| cur.position(g + 1) == cur.position(g) + 1);
        if let Some(g) = pair {
            cur = delete_letter(&cur, g + 1);
            continue;
        }
        // same second position in both rows
        if d >= 3 && cur.position(2) == 2 {
            cur = delete_letter(&cur, 2);
            continue;
        }
        // same next-to-last position in both rows
        if d >= 3 && cur.position(d as Letter - 1) == d - 1 {
            cur = delete_letter(&cur, d as Letter - 1);
            continue;
        }
        return Err(Error::ConstructionFailed(format!(
            "{cur} has a removable singularity but no forget rule applies"
        )));
    }
}

/// A class is hyperelliptic exactly when its standard representative, with
/// removable singularities forgotten, is the reversal.
pub fn is_hyperelliptic_class(p: &Permutation) -> Result<bool> {
    let reduced = reduce_removable(&standardize(p)?)?;
    Ok(reduced == Permutation::reversal(reduced.len()))
}

/// Classifying key: signature plus component type, with hyperelliptic
/// taking precedence, then spin for all-even signatures, then the
/// odd-pair tag for signatures with a non-hyperelliptic twin component.
pub fn class_key(p: &Permutation) -> Result<ClassKey> {
    let sig = signature(p)?;
    let kind = if is_hyperelliptic_class(p)? {
        ComponentKind::Hyperelliptic
    } else if sig.all_even() {
        match spin_parity(p)? {
            Some(1) => ComponentKind::Odd,
            Some(_) => ComponentKind::Even,
            None => unreachable!("all-even signature has a spin parity"),
        }
    } else {
        let nonzero: Vec<u32> = sig
            .all_degrees()
            .into_iter()
            .filter(|&x| x != 0)
            .collect();
        if nonzero.len() == 2 && nonzero[0] == nonzero[1] && nonzero[0] % 2 == 1 {
            ComponentKind::NonHyperelliptic
        } else {
            ComponentKind::Plain
        }
    };
    Ok(ClassKey {
        signature: sig,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn sig(marked: u32, rest: &[u32]) -> Signature {
        Signature::new(marked, rest.to_vec()).unwrap()
    }

    #[test]
    fn signature_worked_examples() {
        assert_eq!(signature(&p("4 3 2 1")).unwrap(), sig(2, &[]));
        assert_eq!(signature(&p("8 3 2 4 7 6 5 1")).unwrap(), sig(1, &[2, 1]));
        assert_eq!(signature(&p("3 2 1")).unwrap(), sig(0, &[0]));
        assert_eq!(signature(&p("7 4 5 2 6 3 1")).unwrap(), sig(4, &[0]));
        assert!(signature(&p("2 1 4 3")).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&p("2 1")).unwrap(), 1);
        assert_eq!(genus(&p("6 3 2 5 4 1")).unwrap(), 3);
        assert_eq!(genus(&p("4 3 2 1")).unwrap(), 2);
    }

    #[test]
    fn spin_worked_example() {
        let ws = spin_workspace(&p("4 3 6 1 5 2")).unwrap().unwrap();
        assert_eq!(ws.parity(), 1);
        assert_eq!(ws.pair_count(), 3);
    }

    #[test]
    fn spin_examples() {
        assert_eq!(spin_parity(&p("6 3 2 5 4 1")).unwrap(), Some(1));
        assert_eq!(spin_parity(&p("8 3 2 4 7 6 5 1")).unwrap(), None);
        assert_eq!(spin_parity(&p("7 4 5 2 6 3 1")).unwrap(), Some(1));
    }

    #[test]
    fn spin_standard_agrees_with_general() {
        assert_eq!(spin_parity_standard(&p("7 3 2 4 6 5 1")).unwrap(), Some(1));
        let hyp = p("6 5 4 3 2 1");
        assert_eq!(
            spin_parity_standard(&hyp).unwrap(),
            spin_parity(&hyp).unwrap()
        );
        assert!(spin_parity_standard(&p("3 1 2")).is_err());
    }

    #[test]
    fn block_phi_values() {
        // the 2x2 exchange block has even contribution
        assert_eq!(block_phi(vec![vec![0, 1], vec![1, 0]]), (0, 1));
        // the all-ones 4x4 block has odd contribution
        let odd4 = vec![
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 1, 1, 0],
        ];
        assert_eq!(block_phi(odd4), (1, 2));
    }

    #[test]
    fn standardize_small() {
        assert_eq!(standardize(&p("2 3 1")).unwrap(), p("3 2 1"));
        assert_eq!(standardize(&p("3 2 1")).unwrap(), p("3 2 1"));
        assert_eq!(standardize(&p("3 1 2")).unwrap(), p("3 2 1"));
    }

    #[test]
    fn standardize_lands_in_class_small() {
        for d in 2..=6 {
            for q in crate::class::all_irreducible(d) {
                let s = standardize(&q).unwrap();
                assert!(s.is_standard());
                assert!(crate::class::same_class(&q, &s, 8, 1_000_000).unwrap());
            }
        }
    }

    #[test]
    fn reduce_removable_examples() {
        assert_eq!(reduce_removable(&p("7 6 2 3 4 5 1")).unwrap(), p("4 3 2 1"));
        assert_eq!(reduce_removable(&p("3 2 1")).unwrap(), p("2 1"));
        assert_eq!(reduce_removable(&p("4 3 2 1")).unwrap(), p("4 3 2 1"));
    }

    #[test]
    fn hyperelliptic_examples() {
        assert!(is_hyperelliptic_class(&p("6 5 4 3 2 1")).unwrap());
        assert!(!is_hyperelliptic_class(&p("6 3 2 5 4 1")).unwrap());
        assert!(is_hyperelliptic_class(&p("7 6 2 3 4 5 1")).unwrap());
    }

    #[test]
    fn class_key_examples() {
        let k = class_key(&p("7 4 3 2 6 5 1")).unwrap();
        assert_eq!(k.signature, sig(3, &[1]));
        assert_eq!(k.kind, ComponentKind::Plain);

        let k = class_key(&p("7 6 5 4 3 2 1")).unwrap();
        assert_eq!(k.signature, sig(2, &[2]));
        assert_eq!(k.kind, ComponentKind::Hyperelliptic);

        let k = class_key(&p("7 4 5 2 6 3 1")).unwrap();
        assert_eq!(k.signature, sig(4, &[0]));
        assert_eq!(k.kind, ComponentKind::Odd);
    }

    #[test]
    fn signature_of_inverse_matches() {
        for d in 2..=6 {
            for q in crate::class::all_irreducible(d) {
                assert_eq!(
                    signature(&q).unwrap(),
                    signature(&q.inverse()).unwrap(),
                    "failed for {q}"
                );
            }
        }
    }

    #[test]
    fn signature_text_round_trip() {
        for s in ["(4)", "(3;1)", "(1;1,2)", "(2;2)", "(1;1,1,1)", "(2;1,1)"] {
            let parsed = Signature::parse(s).unwrap();
            assert_eq!(Signature::parse(&parsed.to_string()).unwrap(), parsed);
        }
    }

    #[test]
    fn spin_on_removable_matches_reduced() {
        // degree-0 entries are even, so spin is defined and must agree with
        // the reduced permutation's spin
        let q = p("7 4 5 2 6 3 1");
        let reduced = reduce_removable(&standardize(&q).unwrap()).unwrap();
        assert_eq!(spin_parity(&q).unwrap(), spin_parity(&reduced).unwrap());
    }
}
