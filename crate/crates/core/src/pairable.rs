//! Pairable vertex sets of `S_p^m`, the closure operator that lifts them one
//! level, and the induced forests (and complementary feedback sets) it yields
//! for `S_p^n`, `⁺S_p^n` and `⁺⁺S_p^n`.

use std::collections::{BTreeMap, BTreeSet};

use crate::addressing::{PlusPlusVertex, PlusVertex, Symbol, Word};
use crate::error::{Error, Result};

/// A two-word block `{s·a, s·b}` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    pub head: Word,
    pub a: Symbol,
    pub b: Symbol,
}

impl Block {
    pub fn words(&self) -> [Word; 2] {
        [self.head.push(self.a), self.head.push(self.b)]
    }
}

/// The unique partition of a pairable set into blocks with distinct heads.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairablePartition {
    blocks: BTreeMap<Word, (Symbol, Symbol)>,
}

impl PairablePartition {
    pub fn blocks(&self) -> impl Iterator<Item = Block> + '_ {
        self.blocks.iter().map(|(head, &(a, b))| Block {
            head: head.clone(),
            a,
            b,
        })
    }

    pub fn heads(&self) -> impl Iterator<Item = &Word> {
        self.blocks.keys()
    }

    pub fn len(&self) -> usize {
        2 * self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn words(&self) -> BTreeSet<Word> {
        self.blocks().flat_map(|b| b.words()).collect()
    }

    fn insert(&mut self, head: Word, a: Symbol, b: Symbol) {
        let prev = self.blocks.insert(head, (a.min(b), a.max(b)));
        debug_assert!(prev.is_none(), "closure heads are distinct");
    }
}

/// Splits `words` into blocks sharing a head. Fails if some head carries
/// anything other than exactly two words.
pub fn pairable_partition<'a>(words: impl IntoIterator<Item = &'a Word>) -> Result<PairablePartition> {
    let words: Vec<&Word> = words.into_iter().collect();
    let p_hint = words
        .iter()
        .flat_map(|w| w.symbols())
        .max()
        .map_or(10, |&m| m + 1)
        .max(10);
    let describe = |ws: &[&Word]| ws.iter().map(|w| w.format(p_hint)).collect::<Vec<_>>();
    if let Some(first) = words.first() {
        if first.is_empty() || words.iter().any(|w| w.len() != first.len()) {
            return Err(Error::NotPairable {
                words: describe(&words),
                head: String::new(),
                reason: "words must be non-empty and of equal length".into(),
            });
        }
    }
    let mut groups: BTreeMap<Word, BTreeSet<Symbol>> = BTreeMap::new();
    for w in &words {
        groups.entry(w.head()).or_default().insert(w.last().unwrap());
    }
    let mut partition = PairablePartition::default();
    for (head, lasts) in groups {
        if lasts.len() != 2 {
            return Err(Error::NotPairable {
                words: describe(&words),
                head: if head.is_empty() { "ε".into() } else { head.format(p_hint) },
                reason: format!("has {} word(s), needs exactly 2", lasts.len()),
            });
        }
        let mut it = lasts.into_iter();
        partition.insert(head, it.next().unwrap(), it.next().unwrap());
    }
    Ok(partition)
}

fn require_p3(p: u32) -> Result<()> {
    if p < 3 {
        return Err(Error::Unsupported(format!(
            "the closure operator needs p >= 3 (got p = {p})"
        )));
    }
    Ok(())
}

/// The `C_1` part (`saa, sab, sba, sbb`) and `C_2` part (`sk(k-1), sk(k+1)`
/// for `k ∉ {a,b}`, mod `p`) of one block's closure, as blocks.
fn closure_block_parts(block: &Block, p: u32) -> (Vec<Block>, Vec<Block>) {
    let s = &block.head;
    let (a, b) = (block.a, block.b);
    let c1 = vec![
        Block { head: s.push(a), a, b },
        Block { head: s.push(b), a, b },
    ];
    let c2 = (0..p)
        .filter(|&k| k != a && k != b)
        .map(|k| {
            let down = (k + p - 1) % p;
            let up = (k + 1) % p;
            Block {
                head: s.push(k),
                a: down.min(up),
                b: down.max(up),
            }
        })
        .collect();
    (c1, c2)
}

/// Words of `C({s·a, s·b})`: `2p` words forming `p` blocks.
pub fn closure_block(block: &Block, p: u32) -> Result<BTreeSet<Word>> {
    require_p3(p)?;
    let (c1, c2) = closure_block_parts(block, p);
    Ok(c1.iter().chain(&c2).flat_map(Block::words).collect())
}

pub fn closure(y: &PairablePartition, p: u32) -> Result<PairablePartition> {
    Ok(closure_split(y, p)?.0)
}

/// `C(Y)` together with its `C_1` and `C_2` word sets.
pub fn closure_split(
    y: &PairablePartition,
    p: u32,
) -> Result<(PairablePartition, BTreeSet<Word>, BTreeSet<Word>)> {
    require_p3(p)?;
    let mut out = PairablePartition::default();
    let mut first = BTreeSet::new();
    let mut second = BTreeSet::new();
    for block in y.blocks() {
        let (c1, c2) = closure_block_parts(&block, p);
        for b in c1 {
            first.extend(b.words());
            out.insert(b.head, b.a, b.b);
        }
        for b in c2 {
            second.extend(b.words());
            out.insert(b.head, b.a, b.b);
        }
    }
    Ok((out, first, second))
}

/// `C^{levels}(Y)`.
pub fn closure_iter(y: &PairablePartition, p: u32, levels: usize) -> Result<PairablePartition> {
    let mut cur = y.clone();
    for _ in 0..levels {
        cur = closure(&cur, p)?;
    }
    Ok(cur)
}

fn seed(p: u32, a: Symbol, b: Symbol) -> PairablePartition {
    debug_assert!(a < p && b < p);
    let mut y = PairablePartition::default();
    y.insert(Word::empty(), a, b);
    y
}

/// Induced forest `Y_n` of `S_p^n` with `2p^{n-1}` vertices.
///
/// For `p >= 3` this is `C^{n-1}({1,2})`; `S_2^n` is a path, so every vertex
/// is returned.
pub fn forest_sierpinski(p: u32, n: usize) -> Result<BTreeSet<Word>> {
    if p < 2 || n < 1 {
        return Err(Error::Unsupported(format!(
            "induced forest construction needs p >= 2 and n >= 1 (got p = {p}, n = {n})"
        )));
    }
    if p == 2 {
        return Ok((0..1usize << n).map(|i| Word::from_index(i, 2, n)).collect());
    }
    Ok(closure_iter(&seed(p, 1, 2), p, n - 1)?.words())
}

/// Complement of [`forest_sierpinski`]; size `p^{n-1}(p-2)`.
pub fn fvs_sierpinski(p: u32, n: usize) -> Result<BTreeSet<Word>> {
    let forest = forest_sierpinski(p, n)?;
    let total = (p as usize).pow(n as u32);
    Ok((0..total)
        .map(|i| Word::from_index(i, p, n))
        .filter(|w| !forest.contains(w))
        .collect())
}

/// Induced forest of `⁺S_p^n` with `2p^{n-1} + 1` vertices:
/// `(Y_n ∖ {1^n}) ∪ {1^{n-1}0, w}`. For `p = 2` the graph is a cycle and
/// dropping the apex suffices.
///
/// `n = 1` is rejected: `⁺S_p^1` is `K_{p+1}`, whose largest induced forest
/// has only two vertices.
pub fn forest_plus(p: u32, n: usize) -> Result<BTreeSet<PlusVertex>> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "⁺S_{p}^1 is K_{}; the apex construction needs n >= 2",
            p + 1
        )));
    }
    if p == 2 {
        return Ok(forest_sierpinski(2, n)?
            .into_iter()
            .map(PlusVertex::Base)
            .collect());
    }
    let mut y = forest_sierpinski(p, n)?;
    let removed = y.remove(&Word::repeat(1, n));
    debug_assert!(removed, "Y_n contains 1^n");
    y.insert(Word::repeat(1, n - 1).push(0));
    let mut out: BTreeSet<PlusVertex> = y.into_iter().map(PlusVertex::Base).collect();
    out.insert(PlusVertex::Apex);
    Ok(out)
}

/// Seed block of the prefixed copy in [`forest_plusplus`].
pub fn plusplus_seed(p: u32) -> Option<(Symbol, Symbol)> {
    match p {
        0..=2 => None,
        3 => Some((0, 1)),
        4 => Some((0, 3)),
        _ => Some((3, 4)),
    }
}

/// Induced forest of `⁺⁺S_p^n`: `Y_n ∪ p·C^{n-2}(Y_1^*)`, where the seed
/// `Y_1^*` avoids the symbols `1, 2` whose extreme words lie in `Y_n` (see
/// [`plusplus_seed`]). The caller is expected to confirm acyclicity.
///
/// `p = 2`: `⁺⁺S_2^n` is a single cycle, so all but one prefixed vertex is
/// returned.
pub fn forest_plusplus(p: u32, n: usize) -> Result<BTreeSet<PlusPlusVertex>> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "⁺⁺S_{p}^1 is K_{}; the construction needs n >= 2",
            p + 1
        )));
    }
    let base = forest_sierpinski(p, n)?;
    let mut out: BTreeSet<PlusPlusVertex> = base.into_iter().map(PlusPlusVertex::Base).collect();
    match plusplus_seed(p) {
        None => {
            let len = n - 1;
            out.extend(
                (1..1usize << len)
                    .map(|i| PlusPlusVertex::Prefixed(Word::from_index(i, 2, len))),
            );
        }
        Some((a, b)) => {
            let copy = closure_iter(&seed(p, a, b), p, n - 2)?;
            out.extend(copy.words().into_iter().map(PlusPlusVertex::Prefixed));
        }
    }
    Ok(out)
}
