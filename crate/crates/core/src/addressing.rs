//! Vertex universes of the four graph families and their textual labels.
//!
//! Label grammar (used verbatim by every export):
//!
//! * words: digit strings for `p <= 10` (`"012"`), comma-separated symbols
//!   otherwise (`"0,11,3"`); the empty word is `"ε"`
//! * `⁺S` apex: `"w"`
//! * `⁺⁺S` prefixed copy: `"<p>:<word>"`, e.g. `"4:210"`
//! * `Ŝ` corner: `"^k"`; contracted pair: `"<prefix>:{i,j}"` with `i < j`, or
//!   `"{i,j}"` when the prefix is empty

use std::fmt;

use crate::error::{Error, Result};

pub type Symbol = u32;

/// The four graph families.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `S_p^n`
    S,
    /// `⁺S_p^n`
    Plus,
    /// `⁺⁺S_p^n`
    #[serde(rename = "pp", alias = "plusplus")]
    PlusPlus,
    /// `Ŝ_p^n`
    Hat,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::S => "s",
            Family::Plus => "plus",
            Family::PlusPlus => "pp",
            Family::Hat => "hat",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" => Ok(Family::S),
            "plus" => Ok(Family::Plus),
            "pp" | "plusplus" => Ok(Family::PlusPlus),
            "hat" => Ok(Family::Hat),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A word over `P = {0, …, p-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Checked constructor: every symbol must lie in `0..p`.
    pub fn new(symbols: Vec<Symbol>, p: u32) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= p) {
            return Err(Error::SymbolOutOfRange { symbol: bad, p });
        }
        Ok(Word(symbols))
    }

    pub(crate) fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// `i^len`
    pub fn repeat(i: Symbol, len: usize) -> Self {
        Word(vec![i; len])
    }

    /// Parses a digit string such as `"012"`; only meaningful for `p <= 10`.
    pub fn from_digits(digits: &str) -> Self {
        Word(
            digits
                .chars()
                .map(|c| c.to_digit(10).expect("digit word"))
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    /// Word without its last symbol.
    pub fn head(&self) -> Word {
        Word(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    pub fn push(&self, s: Symbol) -> Word {
        let mut v = self.0.clone();
        v.push(s);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Base-`p` value, most significant symbol first.
    pub fn index(&self, p: u32) -> usize {
        self.0
            .iter()
            .fold(0usize, |acc, &s| acc * p as usize + s as usize)
    }

    /// Inverse of [`Word::index`].
    pub fn from_index(mut idx: usize, p: u32, len: usize) -> Word {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = (idx % p as usize) as Symbol;
            idx /= p as usize;
        }
        Word(v)
    }

    pub fn format(&self, p: u32) -> String {
        let mut out = String::new();
        write_word(&mut out, self.symbols(), p);
        out
    }
}

/// `i·w`
pub fn prefix_word(i: Symbol, w: &Word) -> Word {
    let mut v = Vec::with_capacity(w.len() + 1);
    v.push(i);
    v.extend_from_slice(w.symbols());
    Word(v)
}

/// Unordered pair `{i, j}` with `i != j`, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    lo: Symbol,
    hi: Symbol,
}

impl Pair {
    pub fn new(i: Symbol, j: Symbol) -> Result<Self> {
        if i == j {
            return Err(Error::DegeneratePair(i));
        }
        Ok(Pair {
            lo: i.min(j),
            hi: i.max(j),
        })
    }

    /// Panicking variant for internal call sites where `i != j` is structural.
    pub(crate) fn of(i: Symbol, j: Symbol) -> Self {
        Pair::new(i, j).expect("pair of distinct symbols")
    }

    pub fn lo(self) -> Symbol {
        self.lo
    }

    pub fn hi(self) -> Symbol {
        self.hi
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.lo == s || self.hi == s
    }
}

/// Vertex of `⁺S_p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlusVertex {
    Base(Word),
    Apex,
}

/// Vertex of `⁺⁺S_p^n`: a base word, or the extra symbol `p` followed by a
/// word of length `n-1` (stored without the leading `p`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlusPlusVertex {
    Base(Word),
    Prefixed(Word),
}

/// Vertex of `Ŝ_p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleVertex {
    Hat(Symbol),
    Contracted { prefix: Word, pair: Pair },
}

impl TriangleVertex {
    pub fn contracted(prefix: Word, i: Symbol, j: Symbol) -> Self {
        TriangleVertex::Contracted {
            prefix,
            pair: Pair::of(i, j),
        }
    }

    pub fn is_hat(&self) -> bool {
        matches!(self, TriangleVertex::Hat(_))
    }

    pub fn format(&self, p: u32) -> String {
        let mut out = String::new();
        match self {
            TriangleVertex::Hat(k) => {
                out.push('^');
                out.push_str(&k.to_string());
            }
            TriangleVertex::Contracted { prefix, pair } => {
                if !prefix.is_empty() {
                    write_word(&mut out, prefix.symbols(), p);
                    out.push(':');
                }
                out.push_str(&format!("{{{},{}}}", pair.lo, pair.hi));
            }
        }
        out
    }
}

/// Embeds a vertex of `Ŝ_p^{n-1}` into the `i`-th subtriangle of `Ŝ_p^n`.
///
/// `i·ĥi = ĥi`, `i·ĥj = {i,j}` for `j != i`, and contracted vertices get `i`
/// prepended to their prefix.
pub fn prefix_triangle(i: Symbol, v: &TriangleVertex) -> TriangleVertex {
    match v {
        TriangleVertex::Hat(k) if *k == i => TriangleVertex::Hat(i),
        TriangleVertex::Hat(k) => TriangleVertex::contracted(Word::empty(), i, *k),
        TriangleVertex::Contracted { prefix, pair } => TriangleVertex::Contracted {
            prefix: prefix_word(i, prefix),
            pair: *pair,
        },
    }
}

/// Applies [`prefix_triangle`] along a whole word, outermost symbol first.
pub fn prefix_triangle_word(w: &Word, v: &TriangleVertex) -> TriangleVertex {
    w.symbols()
        .iter()
        .rev()
        .fold(v.clone(), |acc, &i| prefix_triangle(i, &acc))
}

/// Label in the `p = 3` naming scheme, where `s{i,j}` is written `s·(3-i-j)`.
pub fn relabel_p3(v: &TriangleVertex, p: u32) -> Result<String> {
    if p != 3 {
        return Err(Error::Unsupported(format!(
            "the s·k relabeling exists only for p = 3 (got p = {p})"
        )));
    }
    Ok(match v {
        TriangleVertex::Hat(k) => format!("^{k}"),
        TriangleVertex::Contracted { prefix, pair } => {
            let mut s = prefix.format(3);
            if prefix.is_empty() {
                s.clear();
            }
            s.push_str(&(3 - pair.lo - pair.hi).to_string());
            s
        }
    })
}

/// Any vertex of any family, as produced by [`parse_vertex`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyVertex {
    Sierpinski(Word),
    Plus(PlusVertex),
    PlusPlus(PlusPlusVertex),
    Triangle(TriangleVertex),
}

pub fn format_vertex(v: &FamilyVertex, p: u32) -> String {
    match v {
        FamilyVertex::Sierpinski(w)
        | FamilyVertex::Plus(PlusVertex::Base(w))
        | FamilyVertex::PlusPlus(PlusPlusVertex::Base(w)) => w.format(p),
        FamilyVertex::Plus(PlusVertex::Apex) => "w".to_string(),
        FamilyVertex::PlusPlus(PlusPlusVertex::Prefixed(w)) => format!("{p}:{}", w.format(p)),
        FamilyVertex::Triangle(t) => t.format(p),
    }
}

fn write_word(out: &mut String, symbols: &[Symbol], p: u32) {
    if symbols.is_empty() {
        out.push('ε');
        return;
    }
    for (k, s) in symbols.iter().enumerate() {
        if p > 10 && k > 0 {
            out.push(',');
        }
        out.push_str(&s.to_string());
    }
}

/// Character-position-aware label parser.
struct Cursor<'a> {
    label: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(label: &'a str) -> Self {
        Cursor {
            label,
            chars: label.char_indices().collect(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            label: self.label.to_string(),
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of label"))),
        }
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some(c) => self.err(format!("expected a digit, found '{c}'")),
                None => self.err("expected a digit, found end of label"),
            });
        }
        let text: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn symbol(&mut self, p: u32) -> Result<Symbol> {
        let start = self.pos;
        let s = if p > 10 {
            self.number()?
        } else {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    self.pos += 1;
                    c.to_digit(10).unwrap()
                }
                Some(c) => return Err(self.err(format!("expected a symbol, found '{c}'"))),
                None => return Err(self.err("expected a symbol, found end of label")),
            }
        };
        if s >= p {
            self.pos = start;
            return Err(self.err(format!("symbol {s} is not below p = {p}")));
        }
        Ok(s)
    }

    /// Word of exactly `len` symbols, terminated by end of label or `stop`.
    fn word(&mut self, p: u32, len: usize, stop: Option<char>) -> Result<Word> {
        if self.peek() == Some('ε') {
            self.pos += 1;
            if len != 0 {
                return Err(self.err(format!("empty word where length {len} is required")));
            }
            return Ok(Word::empty());
        }
        if len == 0 {
            return Err(self.err("the empty word is written 'ε'"));
        }
        let mut symbols = Vec::with_capacity(len);
        loop {
            if symbols.len() == len {
                break;
            }
            if !symbols.is_empty() && p > 10 {
                self.expect(',')?;
            }
            symbols.push(self.symbol(p)?);
        }
        match (self.peek(), stop) {
            (None, _) => {}
            (Some(c), Some(s)) if c == s => {}
            (Some(c), _) => return Err(self.err(format!("unexpected '{c}' after word of length {len}"))),
        }
        Ok(Word(symbols))
    }

    /// Word of unknown length, ending right before `stop`.
    fn word_until(&mut self, p: u32, stop: char) -> Result<Word> {
        let mut symbols = Vec::new();
        while self.peek() != Some(stop) {
            if self.done() {
                return Err(self.err(format!("expected '{stop}'")));
            }
            if !symbols.is_empty() && p > 10 {
                self.expect(',')?;
            }
            symbols.push(self.symbol(p)?);
        }
        Ok(Word(symbols))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("trailing character '{c}'"))),
        }
    }
}

/// Parses a label of the given family at level `n`.
pub fn parse_vertex(label: &str, family: Family, p: u32, n: usize) -> Result<FamilyVertex> {
    let mut cur = Cursor::new(label);
    let v = match family {
        Family::S => FamilyVertex::Sierpinski(cur.word(p, n, None)?),
        Family::Plus => {
            if label == "w" {
                cur.pos = 1;
                FamilyVertex::Plus(PlusVertex::Apex)
            } else {
                FamilyVertex::Plus(PlusVertex::Base(cur.word(p, n, None)?))
            }
        }
        Family::PlusPlus => {
            let prefixed = label
                .split_once(':')
                .is_some_and(|(head, _)| head == p.to_string());
            if prefixed {
                let marker = cur.number()?;
                debug_assert_eq!(marker, p);
                cur.expect(':')?;
                let len = n
                    .checked_sub(1)
                    .ok_or_else(|| cur.err("prefixed vertices need n >= 1"))?;
                FamilyVertex::PlusPlus(PlusPlusVertex::Prefixed(cur.word(p, len, None)?))
            } else {
                FamilyVertex::PlusPlus(PlusPlusVertex::Base(cur.word(p, n, None)?))
            }
        }
        Family::Hat => FamilyVertex::Triangle(parse_triangle(&mut cur, p, n)?),
    };
    cur.finish()?;
    Ok(v)
}

fn parse_triangle(cur: &mut Cursor<'_>, p: u32, n: usize) -> Result<TriangleVertex> {
    if cur.peek() == Some('^') {
        cur.pos += 1;
        let start = cur.pos;
        let k = cur.number()?;
        if k >= p {
            cur.pos = start;
            return Err(cur.err(format!("corner {k} is not below p = {p}")));
        }
        return Ok(TriangleVertex::Hat(k));
    }
    let prefix = if cur.peek() == Some('{') {
        Word::empty()
    } else {
        let w = cur.word_until(p, ':')?;
        cur.expect(':')?;
        w
    };
    if n == 0 {
        return Err(cur.err("level 0 has corner vertices only"));
    }
    if prefix.len() >= n {
        return Err(cur.err(format!(
            "prefix of length {} is too long for level {n}",
            prefix.len()
        )));
    }
    cur.expect('{')?;
    let i = cur.symbol_any(p)?;
    cur.expect(',')?;
    let pos_j = cur.pos;
    let j = cur.symbol_any(p)?;
    cur.expect('}')?;
    if i == j {
        cur.pos = pos_j;
        return Err(cur.err("pair elements must differ"));
    }
    Ok(TriangleVertex::Contracted {
        prefix,
        pair: Pair::of(i, j),
    })
}

impl Cursor<'_> {
    /// Pair elements are always decimal numbers, whatever `p` is.
    fn symbol_any(&mut self, p: u32) -> Result<Symbol> {
        let start = self.pos;
        let s = self.number()?;
        if s >= p {
            self.pos = start;
            return Err(self.err(format!("symbol {s} is not below p = {p}")));
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s)
    }

    #[test]
    fn prefix_word_examples() {
        assert_eq!(prefix_word(1, &Word::empty()), w("1"));
        assert_eq!(prefix_word(0, &w("12")), w("012"));
        assert_eq!(prefix_word(3, &w("40")), w("340"));
    }

    #[test]
    fn prefix_triangle_examples() {
        use TriangleVertex::*;
        assert_eq!(prefix_triangle(0, &Hat(0)), Hat(0));
        assert_eq!(
            prefix_triangle(1, &Hat(0)),
            TriangleVertex::contracted(Word::empty(), 0, 1)
        );
        assert_eq!(
            prefix_triangle(2, &TriangleVertex::contracted(w("1"), 0, 3)),
            TriangleVertex::contracted(w("21"), 0, 3)
        );
    }

    #[test]
    fn relabel_p3_examples() {
        let v = TriangleVertex::contracted(Word::empty(), 1, 2);
        assert_eq!(relabel_p3(&v, 3).unwrap(), "0");
        let v = TriangleVertex::contracted(w("2"), 0, 1);
        assert_eq!(relabel_p3(&v, 3).unwrap(), "22");
        assert_eq!(relabel_p3(&TriangleVertex::Hat(1), 3).unwrap(), "^1");
        assert!(relabel_p3(&TriangleVertex::Hat(1), 4).is_err());
    }

    #[test]
    fn canonical_pair_order() {
        let v = FamilyVertex::Triangle(TriangleVertex::contracted(w("0"), 2, 1));
        assert_eq!(format_vertex(&v, 3), "0:{1,2}");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_vertex("w", Family::Plus, 4, 2).unwrap(),
            FamilyVertex::Plus(PlusVertex::Apex)
        );
        assert_eq!(
            parse_vertex("4:210", Family::PlusPlus, 4, 4).unwrap(),
            FamilyVertex::PlusPlus(PlusPlusVertex::Prefixed(w("210")))
        );
        assert_eq!(
            parse_vertex("0:{1,2}", Family::Hat, 3, 2).unwrap(),
            FamilyVertex::Triangle(TriangleVertex::contracted(w("0"), 1, 2))
        );
        assert_eq!(
            parse_vertex("{0,2}", Family::Hat, 3, 1).unwrap(),
            FamilyVertex::Triangle(TriangleVertex::contracted(Word::empty(), 0, 2))
        );
        assert_eq!(
            parse_vertex("1,12,3", Family::S, 13, 3).unwrap(),
            FamilyVertex::Sierpinski(Word::new(vec![1, 12, 3], 13).unwrap())
        );
        assert_eq!(
            parse_vertex("ε", Family::S, 3, 0).unwrap(),
            FamilyVertex::Sierpinski(Word::empty())
        );
    }

    #[test]
    fn parse_errors_name_position() {
        match parse_vertex("01x", Family::S, 3, 3) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_vertex("013", Family::S, 3, 3) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_vertex("0:{1,1}", Family::Hat, 3, 2).is_err());
        assert!(parse_vertex("01", Family::S, 3, 3).is_err());
        assert!(parse_vertex("0123", Family::S, 4, 3).is_err());
        assert!(parse_vertex("00:{1,2}", Family::Hat, 3, 2).is_err());
        assert!(parse_vertex("^3", Family::Hat, 3, 2).is_err());
    }

    #[test]
    fn word_index_round_trip() {
        for idx in 0..125 {
            let word = Word::from_index(idx, 5, 3);
            assert_eq!(word.index(5), idx);
        }
    }

    #[test]
    fn prefix_images_meet_only_in_top_pairs() {
        // level-1 vertex set of Ŝ_4^1
        let p = 4;
        let mut level: Vec<TriangleVertex> = (0..p).map(TriangleVertex::Hat).collect();
        for i in 0..p {
            for j in i + 1..p {
                level.push(TriangleVertex::contracted(Word::empty(), i, j));
            }
        }
        let images: Vec<std::collections::BTreeSet<TriangleVertex>> = (0..p)
            .map(|i| level.iter().map(|v| prefix_triangle(i, v)).collect())
            .collect();
        for set in &images {
            assert_eq!(set.len(), level.len());
        }
        for i in 0..p as usize {
            for j in i + 1..p as usize {
                let common: Vec<_> = images[i].intersection(&images[j]).cloned().collect();
                assert_eq!(
                    common,
                    vec![TriangleVertex::contracted(Word::empty(), i as u32, j as u32)]
                );
            }
        }
    }
}
