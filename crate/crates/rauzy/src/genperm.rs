//! Generalized permutations: two-to-one letter maps over a split pair of
//! rows, encoding linear involutions. Covers properness, irreducibility by
//! corner decompositions, typed induction with properness gating, class
//! enumeration, and singularity data of the suspended quadratic
//! differential.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::perm::{Letter, MoveKind, Permutation};

/// A generalized permutation in canonical form: letters are numbered by
/// first occurrence scanning the top row then the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenPerm {
    seq: Vec<Letter>,
    d0: usize,
}

impl GenPerm {
    pub fn new(seq: Vec<Letter>, d0: usize) -> Result<Self> {
        let n = seq.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidPermutation(format!(
                "need an even number of symbols, got {n}"
            )));
        }
        if d0 == 0 || d0 >= n {
            return Err(Error::InvalidPermutation(format!(
                "row split {d0} leaves an empty row"
            )));
        }
        let letters = n / 2;
        let mut counts = vec![0usize; letters + 1];
        for &x in &seq {
            if x == 0 || x as usize > letters {
                return Err(Error::InvalidPermutation(format!(
                    "symbol {x} out of range for {letters} letters"
                )));
            }
            counts[x as usize] += 1;
        }
        if counts[1..].iter().any(|&c| c != 2) {
            return Err(Error::InvalidPermutation(
                "every letter must appear exactly twice".into(),
            ));
        }
        Ok(GenPerm { seq, d0 }.canonical())
    }

    fn canonical(self) -> GenPerm {
        let mut relabel = vec![0 as Letter; self.letters() + 1];
        let mut next = 1 as Letter;
        let mut seq = Vec::with_capacity(self.seq.len());
        for &x in &self.seq {
            if relabel[x as usize] == 0 {
                relabel[x as usize] = next;
                next += 1;
            }
            seq.push(relabel[x as usize]);
        }
        GenPerm { seq, d0: self.d0 }
    }

    /// Parses `a b b / c a c d d`; letters are arbitrary non-space tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let (top, bottom) = text.split_once('/').ok_or(Error::Parse {
            pos: 0,
            msg: "expected `/` between the rows".into(),
        })?;
        let toks: Vec<&str> = top
            .split_whitespace()
            .chain(bottom.split_whitespace())
            .collect();
        let d0 = top.split_whitespace().count();
        let mut ids = std::collections::HashMap::new();
        let mut seq = Vec::with_capacity(toks.len());
        for tok in &toks {
            let next = ids.len() as Letter + 1;
            let id = *ids.entry(tok.to_string()).or_insert(next);
            seq.push(id);
        }
        GenPerm::new(seq, d0)
    }

    pub fn letters(&self) -> usize {
        self.seq.len() / 2
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn d0(&self) -> usize {
        self.d0
    }

    pub fn d1(&self) -> usize {
        self.seq.len() - self.d0
    }

    pub fn is_balanced(&self) -> bool {
        self.d0 == self.d1()
    }

    pub fn symbols(&self) -> &[Letter] {
        &self.seq
    }

    pub fn top(&self) -> &[Letter] {
        &self.seq[..self.d0]
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.seq[self.d0..]
    }

    /// Index of the other occurrence of the symbol at `i` (0-based).
    pub fn twin(&self, i: usize) -> usize {
        let x = self.seq[i];
        self.seq
            .iter()
            .enumerate()
            .position(|(j, &y)| j != i && y == x)
            .unwrap()
    }

    /// Positive when both occurrences of the letter share a row.
    pub fn d_sign(&self, letter: Letter) -> Result<i8> {
        if letter == 0 || letter as usize > self.letters() {
            return Err(Error::UnknownLetter(letter.to_string()));
        }
        let occ: Vec<usize> = self
            .seq
            .iter()
            .enumerate()
            .filter(|(_, &y)| y == letter)
            .map(|(i, _)| i)
            .collect();
        let same_row = (occ[0] < self.d0) == (occ[1] < self.d0);
        Ok(if same_row { 1 } else { -1 })
    }

    pub fn is_true_permutation(&self) -> bool {
        self.is_balanced() && (1..=self.letters() as Letter).all(|x| self.d_sign(x) == Ok(-1))
    }

    /// View as a true permutation when every letter splits across the rows.
    pub fn to_true(&self) -> Option<Permutation> {
        if !self.is_true_permutation() {
            return None;
        }
        Permutation::from_one_line(self.bottom().to_vec()).ok()
    }

    pub fn from_true(p: &Permutation) -> GenPerm {
        let d = p.len();
        let mut seq: Vec<Letter> = (1..=d as Letter).collect();
        seq.extend_from_slice(p.one_line());
        GenPerm { seq, d0: d }
    }

    /// Proper: a letter doubled within the top row exists exactly when one
    /// doubled within the bottom row does. Equivalent to the existence of
    /// admissible lengths.
    pub fn is_proper(&self) -> bool {
        let doubled_in = |row: &[Letter]| {
            row.iter()
                .any(|&x| row.iter().filter(|&&y| y == x).count() == 2)
        };
        doubled_in(self.top()) == doubled_in(self.bottom())
    }

    /// Explicit admissible lengths for a proper generalized permutation:
    /// `1/n0` for top-doubled letters, `1/n1` for bottom-doubled, `1` for
    /// split letters. `None` when improper.
    pub fn witness_lengths(&self) -> Option<Vec<BigRational>> {
        if !self.is_proper() {
            return None;
        }
        let letters = self.letters();
        let mut where_doubled = vec![0i8; letters + 1];
        for x in 1..=letters as Letter {
            if self.d_sign(x).unwrap() > 0 {
                let in_top = self.top().contains(&x);
                where_doubled[x as usize] = if in_top { 1 } else { 2 };
            }
        }
        let n0 = where_doubled.iter().filter(|&&w| w == 1).count();
        let n1 = where_doubled.iter().filter(|&&w| w == 2).count();
        let one = BigInt::from(1);
        Some(
            (1..=letters)
                .map(|x| match where_doubled[x] {
                    1 => BigRational::new(one.clone(), BigInt::from(n0 as i64)),
                    2 => BigRational::new(one.clone(), BigInt::from(n1 as i64)),
                    _ => BigRational::from(one.clone()),
                })
                .collect(),
        )
    }

    /// Checks the row-sum equality for a concrete length assignment.
    pub fn lengths_admissible(&self, lambda: &[BigRational]) -> bool {
        let sum = |row: &[Letter]| -> BigRational {
            row.iter().map(|&x| lambda[x as usize - 1].clone()).sum()
        };
        sum(self.top()) == sum(self.bottom())
    }

    /// Irreducible: no corner decomposition into disjoint proper letter
    /// sets `A, B, C, D` with an allowed emptiness pattern exists.
    pub fn is_irreducible(&self) -> bool {
        let n = self.len();
        let d0 = self.d0;
        let d1 = self.d1();
        let letters = self.letters();
        let twin: Vec<usize> = (0..n).map(|i| self.twin(i)).collect();
        for n1 in 0..=d0 {
            for n2 in 0..=(d0 - n1) {
                for n3 in 0..=d1 {
                    'next: for n4 in 0..=(d1 - n3) {
                        let ns = [n1, n2, n3, n4];
                        if ns.iter().sum::<usize>() == 0 {
                            continue;
                        }
                        let zeros: Vec<usize> = (0..4).filter(|&k| ns[k] == 0).collect();
                        match zeros.len() {
                            0 => {}
                            1 if zeros[0] == 0 || zeros[0] == 2 => {}
                            2 if zeros == [0, 2] || zeros == [1, 3] => {}
                            _ => continue,
                        }
                        // corner positions: top prefix, top suffix, bottom
                        // prefix, bottom suffix
                        let corner_of = |i: usize| -> Option<usize> {
                            if i < n1 {
                                Some(0)
                            } else if i >= d0 - n2 && i < d0 {
                                Some(1)
                            } else if i >= d0 && i < d0 + n3 {
                                Some(2)
                            } else if i >= n - n4 {
                                Some(3)
                            } else {
                                None
                            }
                        };
                        let mut sets = [
                            BTreeSet::new(),
                            BTreeSet::new(),
                            BTreeSet::new(),
                            BTreeSet::new(),
                        ];
                        let mut corner_letters = [
                            BTreeSet::new(),
                            BTreeSet::new(),
                            BTreeSet::new(),
                            BTreeSet::new(),
                        ];
                        for i in 0..n {
                            let Some(ci) = corner_of(i) else { continue };
                            if !corner_letters[ci].insert(self.seq[i]) {
                                continue 'next; // repeated letter inside a corner
                            }
                            let Some(cj) = corner_of(twin[i]) else {
                                continue 'next; // twin escapes the corners
                            };
                            let slot = match (ci.min(cj), ci.max(cj)) {
                                (0, 1) => 0, // both occurrences on top
                                (0, 2) => 1, // left column
                                (1, 3) => 2, // right column
                                (2, 3) => 3, // both on bottom
                                _ => continue 'next,
                            };
                            sets[slot].insert(self.seq[i]);
                        }
                        if sets.iter().any(|s| s.len() == letters) {
                            continue; // each of A, B, C, D must be proper
                        }
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Row swap; the inverse linear involution's combinatorial data.
    pub fn inverse(&self) -> GenPerm {
        let mut seq = self.bottom().to_vec();
        seq.extend_from_slice(self.top());
        GenPerm { seq, d0: self.d1() }.canonical()
    }

    pub fn is_self_inverse(&self) -> bool {
        self.inverse() == *self
    }

    /// Typed induction. `Ok(None)` when the move lands on an improper shape
    /// and is therefore undefined; errors on reducible or improper input.
    pub fn rauzy_move(&self, kind: MoveKind) -> Result<Option<GenPerm>> {
        Ok(self.rauzy_move_relabeled(kind)?.map(|(p, _)| p))
    }

    /// Like [`Self::rauzy_move`], also returning the letter relabeling
    /// `map[old-1] = new` induced by recanonicalization.
    pub fn rauzy_move_relabeled(&self, kind: MoveKind) -> Result<Option<(GenPerm, Vec<Letter>)>> {
        if !self.is_proper() {
            return Err(Error::Improper(self.to_string()));
        }
        if !self.is_irreducible() {
            return Err(Error::Reducible(self.to_string()));
        }
        let n = self.len();
        let d0 = self.d0;
        let (seq, nd0) = match kind {
            MoveKind::Zero => {
                let t = self.twin(d0 - 1);
                let last = self.seq[n - 1];
                if t > d0 - 1 {
                    // twin of the top's last letter lies in the bottom row
                    let mut seq = self.seq[..=t].to_vec();
                    seq.push(last);
                    seq.extend_from_slice(&self.seq[t + 1..n - 1]);
                    (seq, d0)
                } else {
                    let mut seq = self.seq[..t].to_vec();
                    seq.push(last);
                    seq.extend_from_slice(&self.seq[t..n - 1]);
                    (seq, d0 + 1)
                }
            }
            MoveKind::One => {
                let t = self.twin(n - 1);
                let moved = self.seq[d0 - 1];
                if t < d0 - 1 {
                    let mut seq = self.seq[..=t].to_vec();
                    seq.push(moved);
                    seq.extend_from_slice(&self.seq[t + 1..d0 - 1]);
                    seq.extend_from_slice(&self.seq[d0..]);
                    (seq, d0)
                } else {
                    let mut seq = self.seq[..d0 - 1].to_vec();
                    seq.extend_from_slice(&self.seq[d0..t]);
                    seq.push(moved);
                    seq.extend_from_slice(&self.seq[t..]);
                    (seq, d0 - 1)
                }
            }
        };
        let raw = GenPerm { seq, d0: nd0 };
        let candidate = raw.clone().canonical();
        if candidate.is_proper() {
            let mut map = vec![0 as Letter; self.letters()];
            let mut next = 1 as Letter;
            for &x in &raw.seq {
                if map[x as usize - 1] == 0 {
                    map[x as usize - 1] = next;
                    next += 1;
                }
            }
            Ok(Some((candidate, map)))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Display for GenPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.top().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, " /")?;
        for x in self.bottom() {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// signatures of generalized suspensions
// ---------------------------------------------------------------------------

/// Singularity orders of the suspended quadratic differential. Orders are
/// at least -1 (simple poles); the marked entry is the order at the left
/// endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSignature {
    pub marked: i64,
    pub rest: Vec<i64>,
}

impl GenSignature {
    pub fn new(marked: i64, mut rest: Vec<i64>) -> Result<Self> {
        rest.sort_unstable_by(|a, b| b.cmp(a));
        if marked < -1 || rest.iter().any(|&x| x < -1) {
            return Err(Error::InvalidSignature(format!(
                "orders below -1 in ({marked}; {rest:?})"
            )));
        }
        let total: i64 = marked + rest.iter().sum::<i64>();
        if total % 4 != 0 || total < -4 {
            return Err(Error::InvalidSignature(format!(
                "order sum {total} is not 4g-4 for a genus g >= 0"
            )));
        }
        Ok(GenSignature { marked, rest })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (marked, rest) = crate::sigtext::parse_entries(text)?;
        GenSignature::new(marked, rest)
    }

    pub fn order_sum(&self) -> i64 {
        self.marked + self.rest.iter().sum::<i64>()
    }

    pub fn genus(&self) -> u32 {
        ((self.order_sum() + 4) / 4) as u32
    }

    pub fn all_orders(&self) -> Vec<i64> {
        let mut v = vec![self.marked];
        v.extend_from_slice(&self.rest);
        v
    }

    pub fn pole_count(&self) -> usize {
        self.all_orders().iter().filter(|&&x| x == -1).count()
    }
}

impl fmt::Display for GenSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::sigtext::render(self.marked, &self.rest))
    }
}

/// Whether a class with this signature can contain a self-inverse element:
/// the marked order is even and every odd order has even multiplicity.
pub fn self_inverse_exists(sig: &GenSignature) -> bool {
    if sig.marked.rem_euclid(2) != 0 {
        return false;
    }
    let mut odd: Vec<i64> = sig
        .all_orders()
        .into_iter()
        .filter(|x| x.rem_euclid(2) == 1)
        .collect();
    odd.sort_unstable();
    odd.chunks(2).all(|c| c.len() == 2 && c[0] == c[1])
}

/// Vertex-class structure of a generalized suspension: per-class orders,
/// the marked class, and the class seen at each interior gap of each row.
#[derive(Debug, Clone)]
pub struct Singularities {
    pub orders: Vec<i64>,
    pub marked_class: usize,
    /// `top_gap[i]` is the class of the vertex between top columns `i+1`
    /// and `i+2` (0-based gap `i`); length `d0 - 1`.
    pub top_gap: Vec<usize>,
    pub bottom_gap: Vec<usize>,
}

impl Singularities {
    pub fn signature(&self) -> Result<GenSignature> {
        let marked = self.orders[self.marked_class];
        let rest: Vec<i64> = self
            .orders
            .iter()
            .enumerate()
            .filter(|(c, _)| *c != self.marked_class)
            .map(|(_, &o)| o)
            .collect();
        GenSignature::new(marked, rest)
    }
}

fn uf_find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn uf_union(parent: &mut [usize], a: usize, b: usize) {
    let ra = uf_find(parent, a);
    let rb = uf_find(parent, b);
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Endpoint identification for a generalized suspension: segments meet
/// along each row, at the outer corners, and across the two occurrences of
/// each letter (orientation flipped when they share a row). A class
/// containing `k` interior vertices has order `k - 2`.
pub fn singularities(p: &GenPerm) -> Result<Singularities> {
    if !p.is_proper() {
        return Err(Error::Improper(p.to_string()));
    }
    if !p.is_irreducible() {
        return Err(Error::Reducible(p.to_string()));
    }
    let n = p.len();
    let d0 = p.d0();
    let tok = |i: usize, side: usize| i * 2 + side; // side 0 = left
    let mut parent: Vec<usize> = (0..2 * n).collect();
    for i in (0..d0 - 1).chain(d0..n - 1) {
        uf_union(&mut parent, tok(i, 1), tok(i + 1, 0));
    }
    uf_union(&mut parent, tok(0, 0), tok(d0, 0));
    uf_union(&mut parent, tok(d0 - 1, 1), tok(n - 1, 1));
    for i in 0..n {
        let j = p.twin(i);
        if j < i {
            continue;
        }
        let same_row = (i < d0) == (j < d0);
        if same_row {
            uf_union(&mut parent, tok(i, 0), tok(j, 1));
            uf_union(&mut parent, tok(i, 1), tok(j, 0));
        } else {
            uf_union(&mut parent, tok(i, 0), tok(j, 0));
            uf_union(&mut parent, tok(i, 1), tok(j, 1));
        }
    }

    let mut roots: Vec<usize> = Vec::new();
    let mut root_index = std::collections::BTreeMap::new();
    let class_id = |parent: &mut Vec<usize>,
                        x: usize,
                        roots: &mut Vec<usize>,
                        map: &mut std::collections::BTreeMap<usize, usize>| {
        let r = uf_find(parent, x);
        *map.entry(r).or_insert_with(|| {
            roots.push(r);
            roots.len() - 1
        })
    };

    let mut counts = std::collections::BTreeMap::new();
    let mut top_gap = Vec::with_capacity(d0 - 1);
    for i in 0..d0 - 1 {
        let c = class_id(&mut parent, tok(i, 1), &mut roots, &mut root_index);
        *counts.entry(c).or_insert(0i64) += 1;
        top_gap.push(c);
    }
    let mut bottom_gap = Vec::with_capacity(n - d0 - 1);
    for i in d0..n - 1 {
        let c = class_id(&mut parent, tok(i, 1), &mut roots, &mut root_index);
        *counts.entry(c).or_insert(0i64) += 1;
        bottom_gap.push(c);
    }
    let marked_class = class_id(&mut parent, tok(0, 0), &mut roots, &mut root_index);
    // the right corner may form a class of its own
    let _ = class_id(&mut parent, tok(d0 - 1, 1), &mut roots, &mut root_index);

    let mut orders = vec![0i64; roots.len()];
    for (c, order) in orders.iter_mut().enumerate() {
        *order = counts.get(&c).copied().unwrap_or(0) - 2;
        if *order < -1 {
            return Err(Error::ConstructionFailed(format!(
                "vertex class of {p} has order {order} below -1"
            )));
        }
    }
    Ok(Singularities {
        orders,
        marked_class,
        top_gap,
        bottom_gap,
    })
}

pub fn gen_signature(p: &GenPerm) -> Result<GenSignature> {
    singularities(p)?.signature()
}

/// Genus from the Euler characteristic of the glued surface; consistent
/// with the order sum being `4g - 4`.
pub fn gen_genus(p: &GenPerm) -> Result<u32> {
    let s = singularities(p)?;
    let d = p.letters() as i64;
    let m = s.orders.len() as i64;
    let two_g = d - m + 1;
    if two_g % 2 != 0 || two_g < 0 {
        return Err(Error::ConstructionFailed(format!(
            "euler characteristic of {p} gives non-integral genus"
        )));
    }
    let g = (two_g / 2) as u32;
    debug_assert_eq!(s.signature()?.order_sum(), 4 * g as i64 - 4);
    Ok(g)
}

// ---------------------------------------------------------------------------
// class enumeration
// ---------------------------------------------------------------------------

/// A generalized Rauzy class: vertices sorted, and for each vertex the two
/// typed successors, absent where the move is undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenClassGraph {
    vertices: Vec<GenPerm>,
    moves: Vec<[Option<usize>; 2]>,
}

impl GenClassGraph {
    pub fn vertices(&self) -> &[GenPerm] {
        &self.vertices
    }

    pub fn moves(&self) -> &[[Option<usize>; 2]] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: &GenPerm) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    pub fn undefined_move_count(&self) -> usize {
        self.moves
            .iter()
            .flat_map(|m| m.iter())
            .filter(|m| m.is_none())
            .count()
    }

    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("digraph rauzy {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (i, moves) in self.moves.iter().enumerate() {
            for (k, target) in moves.iter().enumerate() {
                if let Some(j) = target {
                    let _ = writeln!(
                        out,
                        "  \"{}\" -> \"{}\" [label=\"{}\"];",
                        self.vertices[i], self.vertices[*j], k
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Forward closure of a proper irreducible generalized permutation under
/// both moves, skipping undefined ones.
pub fn enumerate_gen_class(p: &GenPerm, cap: usize) -> Result<GenClassGraph> {
    if !p.is_proper() {
        return Err(Error::Improper(p.to_string()));
    }
    if !p.is_irreducible() {
        return Err(Error::Reducible(p.to_string()));
    }
    let mut seen: BTreeSet<GenPerm> = BTreeSet::new();
    seen.insert(p.clone());
    let mut frontier = vec![p.clone()];
    while let Some(q) = frontier.pop() {
        for kind in MoveKind::BOTH {
            if let Some(r) = q.rauzy_move(kind)? {
                if !seen.contains(&r) {
                    seen.insert(r.clone());
                    frontier.push(r);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    let vertices: Vec<GenPerm> = seen.into_iter().collect();
    let mut moves = Vec::with_capacity(vertices.len());
    for v in &vertices {
        let mut out = [None, None];
        for kind in MoveKind::BOTH {
            if let Some(r) = v.rauzy_move(kind)? {
                let j = vertices
                    .binary_search(&r)
                    .map_err(|_| Error::ConstructionFailed(format!("{r} escaped the class")))?;
                out[kind.index()] = Some(j);
            }
        }
        moves.push(out);
    }
    Ok(GenClassGraph { vertices, moves })
}

/// All canonical proper irreducible generalized permutations on a given
/// number of letters, over every row split.
pub fn all_proper_irreducible_gen(nletters: usize) -> Vec<GenPerm> {
    fn rec(counts: &mut Vec<usize>, seq: &mut Vec<Letter>, n: usize, out: &mut BTreeSet<GenPerm>) {
        if seq.len() == n {
            for d0 in 1..n {
                if let Ok(p) = GenPerm::new(seq.clone(), d0) {
                    if p.is_proper() && p.is_irreducible() {
                        out.insert(p);
                    }
                }
            }
            return;
        }
        for x in 1..counts.len() {
            if counts[x] > 0 {
                counts[x] -= 1;
                seq.push(x as Letter);
                rec(counts, seq, n, out);
                seq.pop();
                counts[x] += 1;
            }
        }
    }
    let mut out = BTreeSet::new();
    let n = 2 * nletters;
    let mut counts = vec![2usize; nletters + 1];
    counts[0] = 0;
    let mut seq: Vec<Letter> = Vec::with_capacity(n);
    rec(&mut counts, &mut seq, n, &mut out);
    out.into_iter().collect()
}
