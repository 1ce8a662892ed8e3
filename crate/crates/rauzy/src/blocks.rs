//! Two-row letter blocks and the self-inverse representative construction
//! for true Rauzy classes: every class key realized by some class contains
//! a standard self-inverse permutation assembled from a short block word.

use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::{class_key, ClassKey, ComponentKind, Signature};
use crate::perm::Permutation;

/// Block vocabulary. Each block is a self-inverse two-row pattern over a
/// fresh sub-alphabet; concatenated blocks never share letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// One letter in the same position of both rows; separates the
    /// singularities of neighboring blocks.
    Space,
    /// `Even(2n)`: n adjacent exchanges; contributes one even-degree
    /// singularity with even form value.
    Even(u32),
    /// `Odd(2n)`, `n > 1`: like `Even` but ending in a reversed 4-block;
    /// contributes one even-degree singularity with odd form value.
    Odd(u32),
    /// Five reversed letters; contributes two degree-2 singularities with
    /// odd combined form value.
    OddTwoTwo,
    /// `Pair(2m+1, 2n+1)`: contributes two odd-degree singularities, the
    /// first on the left and the second on the right.
    Pair(u32, u32),
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::Space => write!(f, "SPACE"),
            BlockKind::Even(n) => write!(f, "EVEN_{n}"),
            BlockKind::Odd(n) => write!(f, "ODD_{n}"),
            BlockKind::OddTwoTwo => write!(f, "ODD_2,2"),
            BlockKind::Pair(p, q) => write!(f, "PAIR_{p},{q}"),
        }
    }
}

/// A rendered block: parallel top and bottom letter lists over ids drawn
/// from a caller-provided counter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub top: Vec<u64>,
    pub bottom: Vec<u64>,
}

impl Block {
    pub fn width(&self) -> usize {
        self.top.len()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn name(mut id: u64) -> String {
            let mut s = String::new();
            loop {
                s.insert(0, (b'a' + (id % 26) as u8) as char);
                id /= 26;
                if id == 0 {
                    break;
                }
                id -= 1;
            }
            s
        }
        let row = |xs: &[u64]| xs.iter().map(|&x| name(x)).collect::<Vec<_>>().join(" ");
        write!(f, "{} / {}", row(&self.top), row(&self.bottom))
    }
}

fn fresh(counter: &mut u64) -> u64 {
    let id = *counter;
    *counter += 1;
    id
}

/// Renders one block, drawing letters from `counter`.
pub fn render_block_from(kind: BlockKind, counter: &mut u64) -> Result<Block> {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    match kind {
        BlockKind::Space => {
            let a = fresh(counter);
            top.push(a);
            bottom.push(a);
        }
        BlockKind::Even(w) => {
            if w == 0 || w % 2 != 0 {
                return Err(Error::InvalidBlock(format!(
                    "EVEN takes a positive even width, got {w}"
                )));
            }
            for _ in 0..w / 2 {
                let a = fresh(counter);
                let b = fresh(counter);
                top.extend([a, b]);
                bottom.extend([b, a]);
            }
        }
        BlockKind::Odd(w) => {
            if w < 4 || w % 2 != 0 {
                return Err(Error::InvalidBlock(format!(
                    "ODD takes an even width of at least 4, got {w}"
                )));
            }
            for _ in 0..(w - 4) / 2 {
                let a = fresh(counter);
                let b = fresh(counter);
                top.extend([a, b]);
                bottom.extend([b, a]);
            }
            let quad: Vec<u64> = (0..4).map(|_| fresh(counter)).collect();
            top.extend(&quad);
            bottom.extend(quad.iter().rev());
        }
        BlockKind::OddTwoTwo => {
            let five: Vec<u64> = (0..5).map(|_| fresh(counter)).collect();
            top.extend(&five);
            bottom.extend(five.iter().rev());
        }
        BlockKind::Pair(p, q) => {
            if p % 2 == 0 || q % 2 == 0 {
                return Err(Error::InvalidBlock(format!(
                    "PAIR takes two odd degrees, got ({p}, {q})"
                )));
            }
            for _ in 0..(p - 1) / 2 {
                let a = fresh(counter);
                let b = fresh(counter);
                top.extend([a, b]);
                bottom.extend([b, a]);
            }
            let (x, y, z) = (fresh(counter), fresh(counter), fresh(counter));
            top.extend([x, y, z]);
            bottom.extend([z, y, x]);
            for _ in 0..(q - 1) / 2 {
                let a = fresh(counter);
                let b = fresh(counter);
                top.extend([a, b]);
                bottom.extend([b, a]);
            }
        }
    }
    Ok(Block { kind, top, bottom })
}

pub fn render_block(kind: BlockKind) -> Result<Block> {
    render_block_from(kind, &mut 0)
}

/// An ordered block word; assembling wraps it in the outer letter pair that
/// makes the result standard.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlockWord(pub Vec<BlockKind>);

/// Interior rows of a standard permutation under construction.
#[derive(Debug, Clone, Default)]
struct Interior {
    top: Vec<u64>,
    bottom: Vec<u64>,
    counter: u64,
}

impl Interior {
    fn from_word(word: &[BlockKind]) -> Result<Interior> {
        let mut out = Interior::default();
        for &kind in word {
            let block = render_block_from(kind, &mut out.counter)?;
            out.top.extend(block.top);
            out.bottom.extend(block.bottom);
        }
        Ok(out)
    }

    /// Interior of the reversal on `d` letters: `d - 2` letters reversed.
    fn reversal(d: usize) -> Interior {
        let n = d - 2;
        let ids: Vec<u64> = (0..n as u64).collect();
        Interior {
            top: ids.clone(),
            bottom: ids.iter().rev().copied().collect(),
            counter: n as u64,
        }
    }

    fn append_spaces(&mut self, k: usize) {
        for _ in 0..k {
            let a = fresh(&mut self.counter);
            self.top.push(a);
            self.bottom.push(a);
        }
    }

    fn prepend_spaces(&mut self, k: usize) {
        let mut pre = Vec::with_capacity(k);
        for _ in 0..k {
            pre.push(fresh(&mut self.counter));
        }
        let mut top = pre.clone();
        top.extend(&self.top);
        let mut bottom = pre;
        bottom.extend(&self.bottom);
        self.top = top;
        self.bottom = bottom;
    }

    /// Wraps in the outer letters and canonicalizes.
    fn into_standard(mut self) -> Result<Permutation> {
        let a = fresh(&mut self.counter);
        let b = fresh(&mut self.counter);
        let mut top = vec![a];
        top.extend(&self.top);
        top.push(b);
        let mut bottom = vec![b];
        bottom.extend(&self.bottom);
        bottom.push(a);
        let top_s: Vec<String> = top.iter().map(|x| x.to_string()).collect();
        let bottom_s: Vec<String> = bottom.iter().map(|x| x.to_string()).collect();
        Permutation::canonicalize(
            &top_s.iter().map(String::as_str).collect::<Vec<_>>(),
            &bottom_s.iter().map(String::as_str).collect::<Vec<_>>(),
        )
    }
}

/// Assembles a block word into a standard self-inverse permutation.
pub fn assemble(word: &BlockWord) -> Result<Permutation> {
    let p = Interior::from_word(&word.0)?.into_standard()?;
    debug_assert!(p.is_self_inverse());
    debug_assert!(p.is_standard());
    Ok(p)
}

/// The explicit table for genus at most 3, keyed by zero-free signature and
/// component type.
fn low_genus_word(marked: u32, rest: &[u32], kind: ComponentKind) -> Option<Vec<BlockKind>> {
    use BlockKind::{Even, Odd, OddTwoTwo, Pair, Space};
    use ComponentKind as C;
    let key: (u32, &[u32]) = (marked, rest);
    Some(match (key, kind) {
        ((2, []), C::Hyperelliptic) => vec![Even(2)],
        ((1, [1]), C::Hyperelliptic) => vec![Pair(1, 1)],
        ((4, []), C::Hyperelliptic) => vec![Odd(4)],
        ((4, []), C::Odd) => vec![Even(4)],
        ((3, [1]), C::Plain) => vec![Pair(1, 3)],
        ((1, [3]), C::Plain) => vec![Pair(3, 1)],
        ((2, [2]), C::Hyperelliptic) => vec![OddTwoTwo],
        ((2, [2]), C::Odd) => vec![Even(2), Space, Even(2)],
        ((1, [2, 1]), C::Plain) => vec![Even(2), Space, Pair(1, 1)],
        ((2, [1, 1]), C::Plain) => vec![Pair(1, 1), Space, Even(2)],
        ((1, [1, 1, 1]), C::Plain) => vec![Pair(1, 1), Space, Pair(1, 1)],
        _ => return None,
    })
}

/// Block word for a zero-free signature with an odd degree: odd degrees are
/// consumed in pairs from the right so the marked one stays adjacent to the
/// outer letters.
fn odd_degree_word(marked: u32, rest: &[u32]) -> Result<Vec<BlockKind>> {
    use BlockKind::*;
    let mut word = Vec::new();
    if marked % 2 == 1 {
        let mut odds: Vec<u32> = vec![marked];
        odds.extend(rest.iter().copied().filter(|x| x % 2 == 1));
        let evens: Vec<u32> = rest.iter().copied().filter(|x| x % 2 == 0).collect();
        if !odds.len().is_multiple_of(2) {
            return Err(Error::InvalidSignature(format!(
                "odd number of odd degrees in ({marked}; {rest:?})"
            )));
        }
        for &e in evens.iter().rev() {
            word.push(Even(e));
            word.push(Space);
        }
        for pair in (0..odds.len() / 2).rev() {
            word.push(Pair(odds[2 * pair + 1], odds[2 * pair]));
            word.push(Space);
        }
        word.pop();
    } else {
        let mut evens: Vec<u32> = vec![marked];
        evens.extend(rest.iter().copied().filter(|x| x % 2 == 0));
        let odds: Vec<u32> = rest.iter().copied().filter(|x| x % 2 == 1).collect();
        if !odds.len().is_multiple_of(2) {
            return Err(Error::InvalidSignature(format!(
                "odd number of odd degrees in ({marked}; {rest:?})"
            )));
        }
        for pair in (0..odds.len() / 2).rev() {
            word.push(Pair(odds[2 * pair + 1], odds[2 * pair]));
            word.push(Space);
        }
        for &e in evens.iter().rev() {
            word.push(Even(e));
            word.push(Space);
        }
        word.pop();
    }
    Ok(word)
}

/// Block word for an all-even zero-free signature with the requested spin.
fn even_degree_word(marked: u32, rest: &[u32], want_odd_spin: bool) -> Result<Vec<BlockKind>> {
    use BlockKind::*;
    let mut degrees = vec![marked];
    degrees.extend_from_slice(rest);
    let mut word = Vec::new();
    if want_odd_spin {
        for (i, &deg) in degrees.iter().enumerate().rev() {
            word.push(Even(deg));
            if i > 0 {
                word.push(Space);
            }
        }
        return Ok(word);
    }
    if degrees.iter().all(|&x| x == 2) {
        let m = degrees.len();
        if m < 2 {
            return Err(Error::UnsupportedKey(format!(
                "({marked}) has no even-spin class"
            )));
        }
        for _ in 0..m - 2 {
            word.push(Even(2));
            word.push(Space);
        }
        word.push(OddTwoTwo);
        return Ok(word);
    }
    let odd_host = degrees
        .iter()
        .position(|&x| x >= 4)
        .expect("some degree exceeds 2");
    for (i, &deg) in degrees.iter().enumerate().rev() {
        word.push(if i == odd_host { Odd(deg) } else { Even(deg) });
        if i > 0 {
            word.push(Space);
        }
    }
    Ok(word)
}

fn zero_free_interior(marked: u32, rest: &[u32], kind: ComponentKind) -> Result<Interior> {
    let sig = Signature::new(marked, rest.to_vec())?;
    let g = sig.genus();
    if g <= 3 {
        return match low_genus_word(marked, &sig.rest, kind) {
            Some(word) => Interior::from_word(&word),
            None => Err(Error::UnsupportedKey(format!("{sig} {kind}"))),
        };
    }
    match kind {
        ComponentKind::Hyperelliptic => {
            if sig.rest.is_empty() && marked == 2 * g - 2 {
                Ok(Interior::reversal(2 * g as usize))
            } else if sig.rest == [marked] && marked == g - 1 {
                Ok(Interior::reversal(2 * g as usize + 1))
            } else {
                Err(Error::UnsupportedKey(format!("{sig} {kind}")))
            }
        }
        ComponentKind::Plain | ComponentKind::NonHyperelliptic => {
            if sig.all_even() {
                return Err(Error::UnsupportedKey(format!("{sig} {kind}")));
            }
            Interior::from_word(&odd_degree_word(marked, &sig.rest)?)
        }
        ComponentKind::Odd | ComponentKind::Even => {
            if !sig.all_even() {
                return Err(Error::UnsupportedKey(format!("{sig} {kind}")));
            }
            Interior::from_word(&even_degree_word(
                marked,
                &sig.rest,
                kind == ComponentKind::Odd,
            )?)
        }
    }
}

/// Builds a standard self-inverse permutation whose class key equals `key`.
/// Fails with an unsupported-key error when no construction rule covers the
/// key (in particular when no class with that key exists).
pub fn self_inverse_for(key: &ClassKey) -> Result<Permutation> {
    let sig = &key.signature;
    let zeros = sig.all_degrees().iter().filter(|&&x| x == 0).count();
    let interior = if zeros == sig.singularity_count() {
        // all removable: the genus-one chain of separators
        if key.kind != ComponentKind::Hyperelliptic {
            return Err(Error::UnsupportedKey(key.to_string()));
        }
        let mut interior = Interior::default();
        interior.append_spaces(sig.rest.len());
        interior
    } else if zeros > 0 {
        let nonzero: Vec<u32> = sig
            .all_degrees()
            .into_iter()
            .filter(|&x| x != 0)
            .collect();
        let (marked, rest) = if sig.marked != 0 {
            let mut rest = nonzero.clone();
            let at = rest.iter().position(|&x| x == sig.marked).unwrap();
            rest.remove(at);
            (sig.marked, rest)
        } else {
            // the marked singularity is removable; any nonzero entry may
            // anchor the underlying class, take the largest
            (nonzero[0], nonzero[1..].to_vec())
        };
        let mut interior = zero_free_interior(marked, &rest, key.kind)?;
        if sig.marked == 0 {
            interior.append_spaces(zeros);
        } else {
            interior.prepend_spaces(zeros);
        }
        interior
    } else {
        zero_free_interior(sig.marked, &sig.rest, key.kind)?
    };
    let p = interior.into_standard()?;
    if !p.is_self_inverse() {
        return Err(Error::ConstructionFailed(format!(
            "{p} is not self-inverse"
        )));
    }
    let got = class_key(&p)?;
    if got != *key {
        return Err(Error::UnsupportedKey(format!(
            "{key} (construction landed in {got})"
        )));
    }
    Ok(p)
}
