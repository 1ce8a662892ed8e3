//! Construction of self-inverse generalized permutations: insertion blocks,
//! insertion at paired singularities, and a pipeline producing a
//! self-inverse element for every signature that admits one.

use std::fmt;

use crate::error::{Error, Result};
use crate::genperm::{gen_signature, self_inverse_exists, singularities, GenPerm, GenSignature};
use crate::perm::Letter;

/// Component selector for strata with more than one connected component.
/// The pipeline cannot decide component membership; the caller chooses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenComponent {
    Hyperelliptic,
    NonHyperelliptic,
    Regular,
    Irregular,
}

impl GenComponent {
    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "hyp" | "hyperelliptic" => Ok(GenComponent::Hyperelliptic),
            "nonhyp" | "nonhyperelliptic" => Ok(GenComponent::NonHyperelliptic),
            "reg" | "regular" => Ok(GenComponent::Regular),
            "irr" | "irregular" => Ok(GenComponent::Irregular),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown component `{other}`"),
            }),
        }
    }
}

impl fmt::Display for GenComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GenComponent::Hyperelliptic => "hyp",
            GenComponent::NonHyperelliptic => "nonhyp",
            GenComponent::Regular => "reg",
            GenComponent::Irregular => "irr",
        };
        write!(f, "{s}")
    }
}

/// Balanced self-inverse insertion blocks. Each renders to a column list
/// whose letters pair off across matching columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertionBlock {
    /// `Poles(i)`: i column-doubled letter pairs; empty when `i = 0`.
    Poles(u32),
    /// `Even(w)`: `w/2` adjacent exchanges; empty when `w = 0`.
    Even(u32),
    /// Two order-4 singularities.
    TwoFours,
    /// `JustFours(w)`, `w = 4k >= 8`: one singularity of order `w`.
    JustFours(u32),
    /// `TwoTwos(4i+2, 4j+2)`: two singularities of those orders, the second
    /// adjacent to whatever follows the block.
    TwoTwos(u32, u32),
    /// `Insert(r, p, q)`, all odd, `r >= 1`, `p, q >= -1`: raises a paired
    /// odd order `j` to `r + j + 1` and adds new pairs of orders `p`, `q`.
    Insert(i64, i64, i64),
}

type Col = (Letter, Letter);

struct ColBuilder {
    cols: Vec<Col>,
    next: Letter,
}

impl ColBuilder {
    fn new() -> Self {
        ColBuilder {
            cols: Vec::new(),
            next: 1,
        }
    }

    fn fresh(&mut self) -> Letter {
        let x = self.next;
        self.next += 1;
        x
    }

    fn push(&mut self, top: Letter, bottom: Letter) {
        self.cols.push((top, bottom));
    }

    fn space(&mut self) {
        let s = self.fresh();
        self.push(s, s);
    }

    /// A doubled column pair `(a/b)(a/b)`.
    fn pole_unit(&mut self) {
        let a = self.fresh();
        let b = self.fresh();
        self.push(a, b);
        self.push(a, b);
    }

    fn poles(&mut self, count: u32) {
        for _ in 0..count {
            self.pole_unit();
        }
    }

    /// `w/2` exchange columns `(a/b)(b/a)`.
    fn even(&mut self, width: u32) {
        for _ in 0..width / 2 {
            let a = self.fresh();
            let b = self.fresh();
            self.push(a, b);
            self.push(b, a);
        }
    }

    /// A run of letters reversed between the rows.
    fn reversed(&mut self, count: usize) {
        let ids: Vec<Letter> = (0..count).map(|_| self.fresh()).collect();
        for i in 0..count {
            self.push(ids[i], ids[count - 1 - i]);
        }
    }

    fn block(&mut self, b: InsertionBlock) -> Result<()> {
        match b {
            InsertionBlock::Poles(i) => self.poles(i),
            InsertionBlock::Even(w) => {
                if w % 2 != 0 {
                    return Err(Error::InvalidBlock(format!("EVEN width {w} is odd")));
                }
                self.even(w);
            }
            InsertionBlock::TwoFours => {
                let (a, b, c, d, e) = (
                    self.fresh(),
                    self.fresh(),
                    self.fresh(),
                    self.fresh(),
                    self.fresh(),
                );
                self.push(a, e);
                self.push(b, b);
                self.push(c, d);
                self.push(a, e);
                self.push(d, c);
            }
            InsertionBlock::JustFours(w) => {
                if w < 8 || w % 4 != 0 {
                    return Err(Error::InvalidBlock(format!(
                        "JUSTFOURS takes a multiple of 4 at least 8, got {w}"
                    )));
                }
                self.even((w - 8) / 2);
                let (a, b, c, d) = (self.fresh(), self.fresh(), self.fresh(), self.fresh());
                self.push(a, b);
                self.push(c, d);
                self.push(a, b);
                self.push(c, d);
            }
            InsertionBlock::TwoTwos(x, y) => {
                if x % 4 != 2 || y % 4 != 2 {
                    return Err(Error::InvalidBlock(format!(
                        "TWOTWOS takes orders 2 mod 4, got ({x}, {y})"
                    )));
                }
                let a = self.fresh();
                let b = self.fresh();
                self.push(a, b);
                self.space();
                self.even((x - 2) / 2);
                self.push(a, b);
                self.even((y - 2) / 2);
            }
            InsertionBlock::Insert(r, p, q) => {
                if r < 1 || r % 2 == 0 || p < -1 || p % 2 == 0 || q < -1 || q % 2 == 0 {
                    return Err(Error::InvalidBlock(format!(
                        "INSERT takes odd (r >= 1, p >= -1, q >= -1), got ({r}, {p}, {q})"
                    )));
                }
                let a = self.fresh();
                let c = self.fresh();
                self.push(a, c);
                self.even((p + 1) as u32);
                self.push(a, c);
                let b = self.fresh();
                let d = self.fresh();
                self.push(b, d);
                self.even((q + 1) as u32);
                self.push(b, d);
                self.even((r - 1) as u32);
            }
        }
        Ok(())
    }

    fn into_genperm(self) -> Result<GenPerm> {
        cols_to_genperm(&self.cols)
    }
}

fn cols_to_genperm(cols: &[Col]) -> Result<GenPerm> {
    let mut seq: Vec<Letter> = cols.iter().map(|&(t, _)| t).collect();
    seq.extend(cols.iter().map(|&(_, b)| b));
    // column builders may skip ids; compact to 1..k before validating
    let mut relabel = std::collections::HashMap::new();
    let seq = seq
        .iter()
        .map(|&x| {
            let next = relabel.len() as Letter + 1;
            *relabel.entry(x).or_insert(next)
        })
        .collect();
    GenPerm::new(seq, cols.len())
}

/// Renders a block into its column pattern, for inspection.
pub fn render_insertion_block(b: InsertionBlock) -> Result<GenPerm> {
    let mut cb = ColBuilder::new();
    cb.block(b)?;
    if cb.cols.is_empty() {
        return Err(Error::InvalidBlock(format!("{b:?} renders empty")));
    }
    cb.into_genperm()
}

/// A column index of a balanced host: the insertion happens after `index`
/// columns, addressing the vertex classes at that gap in both rows. Those
/// two classes are always joined by a vertical connection of the unit
/// suspension, so the gap addresses a paired set of singularities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsertionSite {
    pub index: usize,
}

/// What kind of gap an insertion needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiteTarget {
    /// A gap whose two classes are distinct poles.
    PolePair,
    /// A gap whose two classes are distinct, both of this odd order.
    OddPair(i64),
    /// A gap whose classes coincide, of this even order; optionally
    /// constrained to be (or not be) the marked class.
    EvenSelf { order: i64, marked: Option<bool> },
}

/// Leftmost gap of the host matching the target.
pub fn find_site(host: &GenPerm, target: SiteTarget) -> Result<InsertionSite> {
    if !host.is_balanced() {
        return Err(Error::InvalidPermutation(format!("{host} is not balanced")));
    }
    let s = singularities(host)?;
    for (gap, (&a, &b)) in s.top_gap.iter().zip(&s.bottom_gap).enumerate() {
        let ok = match target {
            SiteTarget::PolePair => a != b && s.orders[a] == -1 && s.orders[b] == -1,
            SiteTarget::OddPair(j) => a != b && s.orders[a] == j && s.orders[b] == j,
            SiteTarget::EvenSelf { order, marked } => {
                a == b
                    && s.orders[a] == order
                    && match marked {
                        None => true,
                        Some(want) => (a == s.marked_class) == want,
                    }
            }
        };
        if ok {
            return Ok(InsertionSite { index: gap + 1 });
        }
    }
    Err(Error::NoSite(format!("{target:?} in {host}")))
}

/// Splices a block into a balanced self-inverse host at the given column
/// gap. The result is again balanced, self-inverse and irreducible.
pub fn insert(host: &GenPerm, site: InsertionSite, block: InsertionBlock) -> Result<GenPerm> {
    if !host.is_balanced() {
        return Err(Error::InvalidPermutation(format!("{host} is not balanced")));
    }
    if !host.is_self_inverse() {
        return Err(Error::NotSelfInverse(host.to_string()));
    }
    if !host.is_irreducible() {
        return Err(Error::Reducible(host.to_string()));
    }
    let d = host.letters();
    if site.index == 0 || site.index >= d {
        return Err(Error::InvalidSite {
            site: site.index,
            msg: format!("host has {d} columns"),
        });
    }
    let mut cb = ColBuilder::new();
    cb.next = d as Letter + 1;
    cb.block(block)?;
    let top = host.top();
    let bottom = host.bottom();
    let mut cols: Vec<Col> = (0..site.index).map(|i| (top[i], bottom[i])).collect();
    cols.extend(&cb.cols);
    cols.extend((site.index..d).map(|i| (top[i], bottom[i])));
    let out = cols_to_genperm(&cols)?;
    if !out.is_self_inverse() {
        return Err(Error::ConstructionFailed(format!(
            "insertion of {block:?} into {host} lost self-inversion"
        )));
    }
    if !out.is_irreducible() {
        return Err(Error::ConstructionFailed(format!(
            "insertion of {block:?} into {host} lost irreducibility"
        )));
    }
    Ok(out)
}

/// The two stored elements of the exceptional total-order-12 stratum. The
/// regular/irregular tags come with the constants; they are not recomputed
/// here.
pub fn exceptional_twelve(component: GenComponent) -> Result<GenPerm> {
    match component {
        GenComponent::Regular | GenComponent::Hyperelliptic => {
            GenPerm::parse("1 2 1 2 3 4 3 4 / 5 6 5 6 7 8 7 8")
        }
        GenComponent::Irregular => GenPerm::parse("1 2 3 4 5 2 6 7 / 7 8 4 3 6 8 5 1"),
        GenComponent::NonHyperelliptic => Err(Error::UnsupportedKey(
            "(12) splits into regular and irregular components".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// the construction pipeline
// ---------------------------------------------------------------------------

/// Split of a signature into marked-first even orders (zeros included), the
/// positive odd orders one-per-pair (descending), and the pole count.
struct SigParts {
    evens: Vec<i64>,
    pairs: Vec<i64>,
    poles: usize,
}

fn split_signature(sig: &GenSignature) -> Result<SigParts> {
    if sig.marked < 0 || sig.marked % 2 != 0 {
        return Err(Error::UnsupportedKey(format!(
            "{sig}: marked order must be even and nonnegative"
        )));
    }
    let mut evens = vec![sig.marked];
    let mut odd: Vec<i64> = Vec::new();
    let mut poles = 0usize;
    for &x in &sig.rest {
        if x == -1 {
            poles += 1;
        } else if x % 2 == 0 {
            evens.push(x);
        } else {
            odd.push(x);
        }
    }
    odd.sort_unstable_by(|a, b| b.cmp(a));
    let mut pairs = Vec::new();
    for chunk in odd.chunks(2) {
        if chunk.len() != 2 || chunk[0] != chunk[1] {
            return Err(Error::UnsupportedKey(format!(
                "{sig}: odd orders must come in equal pairs"
            )));
        }
        pairs.push(chunk[0]);
    }
    if !poles.is_multiple_of(2) {
        return Err(Error::UnsupportedKey(format!("{sig}: odd number of poles")));
    }
    Ok(SigParts {
        evens,
        pairs,
        poles,
    })
}

/// Appends the interior word realizing the given even orders to `cb`:
/// marked entry rightmost, zeros as separator columns on the side that
/// keeps the marked entry in place.
fn all_even_interior(evens: &[i64], cb: &mut ColBuilder) -> Result<()> {
    let zeros = evens.iter().filter(|&&x| x == 0).count();
    let nonzero: Vec<i64> = evens.iter().copied().filter(|&x| x != 0).collect();
    if nonzero.is_empty() {
        for _ in 0..evens.len().saturating_sub(1) {
            cb.space();
        }
        return Ok(());
    }
    let marked_is_zero = evens[0] == 0;

    let mut word: Vec<Option<InsertionBlock>> = Vec::new(); // None = separator
    let twos: Vec<i64> = nonzero.iter().copied().filter(|&x| x % 4 == 2).collect();
    let fours: Vec<i64> = nonzero.iter().copied().filter(|&x| x % 4 == 0).collect();
    if twos.is_empty() {
        if nonzero.len() == 1 {
            // a lone multiple of four comes from a plain exchange word,
            // whose orders double in this setting
            word.push(Some(InsertionBlock::Even(nonzero[0] as u32 / 2)));
        } else if nonzero.iter().all(|&x| x == 4) {
            for _ in 0..nonzero.len() - 2 {
                word.push(Some(InsertionBlock::Even(2)));
                word.push(None);
            }
            word.push(Some(InsertionBlock::TwoFours));
        } else {
            let host = nonzero.iter().position(|&x| x > 4).unwrap();
            for (i, &x) in nonzero.iter().enumerate().rev() {
                word.push(Some(if i == host {
                    InsertionBlock::JustFours(x as u32)
                } else {
                    InsertionBlock::Even(x as u32 / 2)
                }));
                if i > 0 {
                    word.push(None);
                }
            }
        }
    } else {
        if !twos.len().is_multiple_of(2) {
            return Err(Error::UnsupportedKey(format!(
                "even orders {nonzero:?} have an odd count of 2 mod 4 entries"
            )));
        }
        if nonzero[0] % 4 == 0 {
            for pair in (0..twos.len() / 2).rev() {
                word.push(Some(InsertionBlock::TwoTwos(
                    twos[2 * pair + 1] as u32,
                    twos[2 * pair] as u32,
                )));
                word.push(None);
            }
            for (i, &x) in fours.iter().enumerate().rev() {
                word.push(Some(InsertionBlock::Even(x as u32 / 2)));
                if i > 0 {
                    word.push(None);
                }
            }
        } else {
            // keep the marked entry in the trailing slot of the last block
            let mut ordered = twos.clone();
            if let Some(at) = ordered.iter().position(|&x| x == nonzero[0]) {
                ordered.remove(at);
                ordered.insert(0, nonzero[0]);
            }
            for &x in fours.iter().rev() {
                word.push(Some(InsertionBlock::Even(x as u32 / 2)));
                word.push(None);
            }
            for pair in (0..ordered.len() / 2).rev() {
                word.push(Some(InsertionBlock::TwoTwos(
                    ordered[2 * pair + 1] as u32,
                    ordered[2 * pair] as u32,
                )));
                if pair > 0 {
                    word.push(None);
                }
            }
        }
    }

    if !marked_is_zero {
        for _ in 0..zeros {
            cb.space();
        }
    }
    for b in word {
        match b {
            Some(block) => cb.block(block)?,
            None => cb.space(),
        }
    }
    if marked_is_zero {
        for _ in 0..zeros {
            cb.space();
        }
    }
    Ok(())
}

/// `(A/B  interior  B/A)` wrapper.
fn wrap_standard(interior: impl FnOnce(&mut ColBuilder) -> Result<()>) -> Result<GenPerm> {
    let mut cb = ColBuilder::new();
    let a = cb.fresh();
    let b = cb.fresh();
    cb.push(a, b);
    interior(&mut cb)?;
    cb.push(b, a);
    cb.into_genperm()
}

/// Genus 0 and 1 base constructions.
fn build_low_genus(parts: &SigParts, sig: &GenSignature) -> Result<GenPerm> {
    let g = sig.genus();
    if g == 0 {
        // (a/c)(a/c) pole-runs (b/d)(b/d)
        let mut cb = ColBuilder::new();
        let a = cb.fresh();
        let c = cb.fresh();
        cb.push(a, c);
        cb.push(a, c);
        for (i, &e) in parts.evens.iter().enumerate() {
            cb.poles(e as u32 / 2);
            if i + 1 < parts.evens.len() {
                cb.space();
            }
        }
        let b = cb.fresh();
        let d = cb.fresh();
        cb.push(b, d);
        cb.push(b, d);
        let mut host = cb.into_genperm()?;
        for &j in &parts.pairs {
            let site = find_site(&host, SiteTarget::PolePair)?;
            host = insert(&host, site, InsertionBlock::Poles((j + 1) as u32))?;
        }
        return Ok(host);
    }
    // genus 1
    if parts.evens.iter().any(|&e| e > 0) {
        let mut host = wrap_standard(|cb| {
            for (i, &e) in parts.evens.iter().enumerate().rev() {
                cb.poles(e as u32 / 2);
                if i > 0 {
                    cb.space();
                }
            }
            Ok(())
        })?;
        for &j in &parts.pairs {
            let site = find_site(&host, SiteTarget::PolePair)?;
            host = insert(&host, site, InsertionBlock::Poles((j + 1) as u32))?;
        }
        return Ok(host);
    }
    if parts.pairs.is_empty() {
        if parts.poles == 0 {
            // all orders removable: the separator chain, a plain permutation
            return wrap_standard(|cb| {
                for _ in 0..parts.evens.len() - 1 {
                    cb.space();
                }
                Ok(())
            });
        }
        return Err(Error::UnsupportedKey(format!("{sig}")));
    }
    // every even order removable: seed with the first odd pair wound around
    // an exchange block, then realize the remaining pairs at poles
    let j1 = parts.pairs[0];
    let mut cb = ColBuilder::new();
    let a = cb.fresh();
    let c = cb.fresh();
    cb.push(a, c);
    cb.even(2);
    cb.poles((2 * j1 - 2) as u32);
    cb.push(a, c);
    for _ in 0..parts.evens.len() - 1 {
        cb.space();
    }
    let b = cb.fresh();
    let d = cb.fresh();
    cb.push(b, d);
    cb.push(b, d);
    let mut host = cb.into_genperm()?;
    for &j in &parts.pairs[1..] {
        let site = find_site(&host, SiteTarget::PolePair)?;
        host = insert(&host, site, InsertionBlock::Poles((j + 1) as u32))?;
    }
    Ok(host)
}

/// Explicit elements of the strata that carry a hyperelliptic component.
/// Returns `None` when the signature matches none of the patterns.
fn try_hyperelliptic_stratum(
    sig: &GenSignature,
    component: Option<GenComponent>,
) -> Result<Option<GenPerm>> {
    let want_hyp = !matches!(component, Some(GenComponent::NonHyperelliptic));
    let rest = &sig.rest;
    // (0; x, x, y, y) with x >= y odd
    if sig.marked == 0 && rest.len() == 4 && rest[0] == rest[1] && rest[2] == rest[3] {
        let (x, y) = (rest[0], rest[2]);
        if x.rem_euclid(2) == 1 && y.rem_euclid(2) == 1 {
            let p = if want_hyp {
                let mut cb = ColBuilder::new();
                let (a, c) = (cb.fresh(), cb.fresh());
                cb.push(a, c);
                cb.reversed((x + 1) as usize);
                cb.push(a, c);
                let (b, d) = (cb.fresh(), cb.fresh());
                cb.push(b, d);
                cb.reversed((y + 1) as usize);
                cb.push(b, d);
                cb.into_genperm()?
            } else {
                let mut cb = ColBuilder::new();
                let (a, c) = (cb.fresh(), cb.fresh());
                cb.push(a, c);
                cb.even((x + 1) as u32);
                cb.push(a, c);
                let (b, d) = (cb.fresh(), cb.fresh());
                cb.push(b, d);
                cb.even((y + 1) as u32);
                cb.push(b, d);
                cb.into_genperm()?
            };
            return Ok(Some(p));
        }
    }
    if sig.marked >= 2 && sig.marked % 4 == 2 {
        let k = ((sig.marked - 2) / 4) as usize;
        // (4k+2; x, x) with x odd, poles included as x = -1
        if rest.len() == 2 && rest[0] == rest[1] && rest[0].rem_euclid(2) == 1 {
            let x = rest[0];
            let p = if want_hyp {
                build_wrapped_reversal(k, (x + 1) as usize)?
            } else {
                wrap_standard(|cb| {
                    cb.even(2 * k as u32);
                    let (al, be) = (cb.fresh(), cb.fresh());
                    cb.push(al, be);
                    cb.even((x + 1) as u32);
                    cb.push(al, be);
                    Ok(())
                })?
            };
            return Ok(Some(p));
        }
        // (4k+2; 4j+2)
        if rest.len() == 1 && rest[0] >= 2 && rest[0] % 4 == 2 {
            let y = rest[0] as u32;
            let p = if want_hyp {
                build_wrapped_reversal(k, (y / 2) as usize)?
            } else {
                wrap_standard(|cb| cb.block(InsertionBlock::TwoTwos(y, sig.marked as u32)))?
            };
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// `(A/B c-half (α/β) reversed-run (α/β) c-half' B/A)`: the folded shape of
/// the strata with a hyperelliptic component.
fn build_wrapped_reversal(k: usize, inner: usize) -> Result<GenPerm> {
    let mut cb = ColBuilder::new();
    let a = cb.fresh();
    let b = cb.fresh();
    cb.push(a, b);
    let cs: Vec<Letter> = (0..2 * k).map(|_| cb.fresh()).collect();
    for i in 0..k {
        cb.push(cs[i], cs[2 * k - 1 - i]);
    }
    let (al, be) = (cb.fresh(), cb.fresh());
    cb.push(al, be);
    cb.reversed(inner);
    cb.push(al, be);
    for i in 0..k {
        cb.push(cs[k + i], cs[k - 1 - i]);
    }
    cb.push(b, a);
    cb.into_genperm()
}

/// Interior of a standard-shaped host, reflected left to right. The marked
/// class of the host sits at the interior's right end; reflection moves it
/// to the left, where the doubled-pair wrapper picks it up.
fn reflected_interior(host: &GenPerm) -> Vec<Col> {
    let d = host.letters();
    let top = host.top();
    let bottom = host.bottom();
    (1..d - 1).rev().map(|i| (top[i], bottom[i])).collect()
}

/// Interior of a standard-shaped host in place.
fn interior_of(host: &GenPerm) -> Vec<Col> {
    let d = host.letters();
    let top = host.top();
    let bottom = host.bottom();
    (1..d - 1).map(|i| (top[i], bottom[i])).collect()
}

/// Pole-free / two-pole pipeline: build the even part, reseat its
/// reflection between doubled pairs, then realize the odd pairs by
/// insertions at poles.
fn build_with_insertions(parts: &SigParts, sig: &GenSignature) -> Result<GenPerm> {
    let mut effective = parts.pairs.clone();
    if parts.poles == 2 {
        effective.push(-1);
    }
    if effective.is_empty() {
        return wrap_standard(|cb| all_even_interior(&parts.evens, cb));
    }
    let mut host = if effective.len().is_multiple_of(2) {
        let base = wrap_standard(|cb| all_even_interior(&parts.evens, cb))?;
        let blah = reflected_interior(&base);
        let mut cb = ColBuilder::new();
        cb.next = base.letters() as Letter + 1;
        let (a, c) = (cb.fresh(), cb.fresh());
        cb.push(a, c);
        cb.push(a, c);
        cb.cols.extend(blah);
        let (b, d) = (cb.fresh(), cb.fresh());
        cb.push(b, d);
        cb.push(b, d);
        cb.into_genperm()?
    } else {
        // pull out one even order that is 2 mod 4 and rebuild it around a
        // doubled pair
        let at = parts
            .evens
            .iter()
            .position(|&x| x % 4 == 2)
            .ok_or_else(|| Error::UnsupportedKey(format!("{sig}")))?;
        let removed = parts.evens[at];
        let mut reduced = parts.evens.clone();
        reduced.remove(at);
        // unreflected: in a standard-shaped result the marked class sits at
        // the interior's right end, which is where this word keeps it
        let blah = if reduced.is_empty() {
            Vec::new()
        } else {
            interior_of(&wrap_standard(|cb| all_even_interior(&reduced, cb))?)
        };
        let mut cb = ColBuilder::new();
        cb.next = blah
            .iter()
            .flat_map(|&(t, b)| [t, b])
            .max()
            .unwrap_or(0)
            + 1;
        let wrap_a = cb.fresh();
        let wrap_b = cb.fresh();
        let pair_a = cb.fresh();
        let pair_b = cb.fresh();
        cb.push(wrap_a, wrap_b);
        if at == 0 {
            // the marked entry ends up on the doubled pair, rightmost
            cb.cols.extend(blah.clone());
            if !reduced.is_empty() {
                cb.space();
            }
            cb.even(((removed - 2) / 2) as u32);
            cb.push(pair_a, pair_b);
            cb.push(pair_a, pair_b);
        } else {
            cb.push(pair_a, pair_b);
            cb.push(pair_a, pair_b);
            cb.even(((removed - 2) / 2) as u32);
            if !reduced.is_empty() {
                cb.space();
            }
            cb.cols.extend(blah);
        }
        cb.push(wrap_b, wrap_a);
        cb.into_genperm()?
    };

    let chain_end = effective.len() - (2 - effective.len() % 2);
    for i in (0..chain_end).step_by(2) {
        let site = find_site(&host, SiteTarget::PolePair)?;
        host = insert(
            &host,
            site,
            InsertionBlock::Insert(effective[i], effective[i + 1], -1),
        )?;
    }
    for &j in &effective[chain_end..] {
        if j == -1 {
            continue; // an empty insertion leaves the pole pair in place
        }
        let site = find_site(&host, SiteTarget::PolePair)?;
        host = insert(&host, site, InsertionBlock::Even((j + 1) as u32))?;
    }
    Ok(host)
}

/// Successive reductions toward a signature with at most two poles, then a
/// replayed insertion.
fn build_by_reduction(
    parts: &SigParts,
    sig: &GenSignature,
    component: Option<GenComponent>,
) -> Result<GenPerm> {
    // first kind: lower a positive even order, absorbing two poles
    if let Some(at) = parts.evens.iter().position(|&x| x > 0) {
        let mut evens = parts.evens.clone();
        evens[at] -= 2;
        let reduced = rebuild_signature(&evens, &parts.pairs, parts.poles - 2)?;
        let host = construct(&reduced, component)?;
        let site = find_site(
            &host,
            SiteTarget::EvenSelf {
                order: evens[at],
                marked: Some(at == 0),
            },
        )?;
        return insert(&host, site, InsertionBlock::Poles(1));
    }
    // second kind: lower an odd pair above 1, absorbing four poles
    if let Some(at) = parts.pairs.iter().position(|&x| x > 1) {
        let mut pairs = parts.pairs.clone();
        pairs[at] -= 2;
        let reduced = rebuild_signature(&parts.evens, &pairs, parts.poles - 4)?;
        let host = construct(&reduced, component)?;
        let site = find_site(&host, SiteTarget::OddPair(pairs[at]))?;
        return insert(&host, site, InsertionBlock::Poles(2));
    }
    // third kind: trade an order-1 pair against two poles
    if !parts.pairs.is_empty() {
        let pairs = parts.pairs[1..].to_vec();
        let reduced = rebuild_signature(&parts.evens, &pairs, parts.poles - 2)?;
        let host = construct(&reduced, component)?;
        let site = find_site(&host, SiteTarget::PolePair)?;
        return insert(&host, site, InsertionBlock::Poles(2));
    }
    Err(Error::UnsupportedKey(format!("{sig}")))
}

fn rebuild_signature(evens: &[i64], pairs: &[i64], poles: usize) -> Result<GenSignature> {
    let mut rest: Vec<i64> = evens[1..].to_vec();
    for &j in pairs {
        rest.push(j);
        rest.push(j);
    }
    rest.extend(std::iter::repeat_n(-1, poles));
    GenSignature::new(evens[0], rest)
}

fn construct(sig: &GenSignature, component: Option<GenComponent>) -> Result<GenPerm> {
    let parts = split_signature(sig)?;
    let g = sig.genus();
    let out = if g <= 1 {
        build_low_genus(&parts, sig)?
    } else if sig.marked == 12 && sig.rest.is_empty() {
        exceptional_twelve(component.unwrap_or(GenComponent::Regular))?
    } else if let Some(p) = try_hyperelliptic_stratum(sig, component)? {
        p
    } else if parts.poles >= 4 {
        build_by_reduction(&parts, sig, component)?
    } else {
        build_with_insertions(&parts, sig)?
    };
    let got = gen_signature(&out)?;
    if got != *sig {
        return Err(Error::ConstructionFailed(format!(
            "built {out} with signature {got}, wanted {sig}"
        )));
    }
    if !out.is_self_inverse() {
        return Err(Error::ConstructionFailed(format!(
            "{out} is not self-inverse"
        )));
    }
    Ok(out)
}

/// A self-inverse element for any signature satisfying the existence
/// conditions; `None` exactly when no class with this signature contains
/// one.
pub fn self_inverse_gen_for(sig: &GenSignature) -> Result<Option<GenPerm>> {
    self_inverse_gen_for_component(sig, None)
}

pub fn self_inverse_gen_for_component(
    sig: &GenSignature,
    component: Option<GenComponent>,
) -> Result<Option<GenPerm>> {
    if !self_inverse_exists(sig) {
        return Ok(None);
    }
    construct(sig, component).map(Some)
}
