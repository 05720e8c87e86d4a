//! Words of `S(G,t)` and canonical vertex labels of the gasket `S[G,t]`.
//!
//! A gasket vertex is either a plain word or a contracted vertex
//! `prefix·{i,j}@L` whose two expanded forms are `prefix·i·j^(L-1)` and
//! `prefix·j·i^(L-1)`. Letters are stored 0-based; the textual grammar is
//! 1-based:
//!
//! ```text
//! plain       1.2.3
//! contracted  1.{2,3}@2      {1,2}@3
//! ```

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::base::BaseGraph;
use crate::error::{Error, Result};

/// A word of length `t` over the base vertex set (0-based letters).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word from its base-`n` rank, most significant letter first.
    pub fn from_rank(mut rank: u64, n: usize, t: usize) -> Word {
        let mut letters = alloc::vec![0u8; t];
        for slot in letters.iter_mut().rev() {
            *slot = (rank % n as u64) as u8;
            rank /= n as u64;
        }
        Word(letters)
    }

    pub fn rank(&self, n: usize) -> u64 {
        rank_of(&self.0, n)
    }
}

pub(crate) fn rank_of(letters: &[u8], n: usize) -> u64 {
    letters.iter().fold(0u64, |acc, &l| acc * n as u64 + l as u64)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

/// Canonical vertex of `S[G,t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Plain(Word),
    /// `pair.0 < pair.1`, `pair` is an edge of the base graph, and
    /// `2 <= level`; the depth is `prefix.len() + level`.
    Contracted {
        prefix: Vec<u8>,
        pair: (u8, u8),
        level: usize,
    },
}

impl VertexLabel {
    pub fn depth(&self) -> usize {
        match self {
            VertexLabel::Plain(w) => w.len(),
            VertexLabel::Contracted { prefix, level, .. } => prefix.len() + level,
        }
    }

    pub fn is_contracted(&self) -> bool {
        matches!(self, VertexLabel::Contracted { .. })
    }

    /// Contraction level, or `None` for plain words.
    pub fn level(&self) -> Option<usize> {
        match self {
            VertexLabel::Plain(_) => None,
            VertexLabel::Contracted { level, .. } => Some(*level),
        }
    }

    /// Letters of the representative word `prefix·min·max^(L-1)` (the word
    /// itself for plain labels).
    pub fn representative(&self) -> impl Iterator<Item = u8> + '_ {
        let (head, tail): (&[u8], Option<(u8, u8, usize)>) = match self {
            VertexLabel::Plain(w) => (&w.0, None),
            VertexLabel::Contracted { prefix, pair, level } => {
                (prefix, Some((pair.0, pair.1, *level)))
            }
        };
        head.iter().copied().chain(
            tail.into_iter()
                .flat_map(|(a, b, l)| core::iter::once(a).chain(core::iter::repeat_n(b, l - 1))),
        )
    }

    pub fn representative_word(&self) -> Word {
        Word(self.representative().collect())
    }

    pub fn representative_rank(&self, n: usize) -> u64 {
        self.representative()
            .fold(0u64, |acc, l| acc * n as u64 + l as u64)
    }

    /// The one or two words of `S(G,t)` that map to this vertex,
    /// representative first.
    pub fn expand(&self) -> Vec<Word> {
        match self {
            VertexLabel::Plain(w) => alloc::vec![w.clone()],
            VertexLabel::Contracted { prefix, pair, level } => {
                let form = |a: u8, b: u8| {
                    let mut w = prefix.clone();
                    w.push(a);
                    w.extend(core::iter::repeat_n(b, level - 1));
                    Word(w)
                };
                alloc::vec![form(pair.0, pair.1), form(pair.1, pair.0)]
            }
        }
    }

    /// Drops the leading letter, mapping a vertex of copy `S_i[G,t]` to the
    /// matching vertex of `S[G,t-1]`. Returns `None` for depth-1 words and
    /// for top-level contractions (which belong to two copies).
    pub fn strip_first(&self) -> Option<VertexLabel> {
        match self {
            VertexLabel::Plain(w) if w.len() >= 2 => Some(VertexLabel::Plain(Word(w.0[1..].to_vec()))),
            VertexLabel::Contracted { prefix, pair, level } if !prefix.is_empty() => {
                Some(VertexLabel::Contracted {
                    prefix: prefix[1..].to_vec(),
                    pair: *pair,
                    level: *level,
                })
            }
            _ => None,
        }
    }

    /// Checks well-formedness for base graph `g` at depth `t`.
    pub fn validate(&self, g: &BaseGraph, t: usize) -> Result<()> {
        let bad = |reason| {
            Err(Error::InvalidLabel {
                label: self.to_string(),
                reason,
            })
        };
        let n = g.order();
        if self.depth() != t {
            return bad("depth does not match t");
        }
        if self.representative().any(|l| l as usize >= n) {
            return bad("letter out of range");
        }
        match self {
            VertexLabel::Plain(w) => {
                if canonicalize(&w.0, g) != *self {
                    return bad("word is an expanded form of a contracted vertex");
                }
            }
            VertexLabel::Contracted { pair, level, .. } => {
                if pair.0 >= pair.1 {
                    return bad("pair must be stored as i < j");
                }
                if !g.has_edge(pair.0 as usize, pair.1 as usize) {
                    return bad("pair is not an edge of the base graph");
                }
                if *level < 2 {
                    return bad("contraction level must be at least 2");
                }
            }
        }
        Ok(())
    }
}

impl Ord for VertexLabel {
    /// Labels order by their representative words.
    fn cmp(&self, other: &Self) -> Ordering {
        self.representative().cmp(other.representative())
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Position of the last adjacent pair of differing letters.
///
/// A word `prefix·i·j^k` (k >= 1, i != j) is an expanded form of a
/// contraction at exactly this position: any earlier differing position is
/// followed by a non-constant suffix, so it cannot head an expanded form.
/// Every word is therefore in at most one contracted class, and the class
/// is decided by this single position.
#[inline]
pub(crate) fn last_change(letters: &[u8]) -> Option<usize> {
    (0..letters.len().saturating_sub(1))
        .rev()
        .find(|&q| letters[q] != letters[q + 1])
}

pub fn canonicalize(letters: &[u8], g: &BaseGraph) -> VertexLabel {
    match last_change(letters) {
        Some(p) if g.has_edge(letters[p] as usize, letters[p + 1] as usize) => {
            let (a, b) = (letters[p], letters[p + 1]);
            VertexLabel::Contracted {
                prefix: letters[..p].to_vec(),
                pair: (a.min(b), a.max(b)),
                level: letters.len() - p,
            }
        }
        _ => VertexLabel::Plain(Word(letters.to_vec())),
    }
}

/// Whether `letters` is the representative word of its gasket vertex.
#[inline]
pub(crate) fn is_representative(letters: &[u8], g: &BaseGraph) -> bool {
    match last_change(letters) {
        Some(p) if g.has_edge(letters[p] as usize, letters[p + 1] as usize) => {
            letters[p] < letters[p + 1]
        }
        _ => true,
    }
}

/// Rank of the representative word of `letters`' class.
#[inline]
pub(crate) fn representative_rank(letters: &[u8], g: &BaseGraph) -> u64 {
    let n = g.order();
    match last_change(letters) {
        Some(p)
            if letters[p] > letters[p + 1]
                && g.has_edge(letters[p] as usize, letters[p + 1] as usize) =>
        {
            let (lo, hi) = (letters[p + 1], letters[p]);
            let mut r = rank_of(&letters[..p], n) * n as u64 + lo as u64;
            for _ in p + 1..letters.len() {
                r = r * n as u64 + hi as u64;
            }
            r
        }
        _ => rank_of(letters, n),
    }
}

/// `n^t`, or `None` on overflow.
pub fn word_count(n: usize, t: usize) -> Option<u64> {
    (n as u64).checked_pow(t.try_into().ok()?)
}

pub(crate) fn check_cap(n: usize, t: usize, cap: u64) -> Result<u64> {
    if t == 0 {
        return Err(Error::ZeroDepth);
    }
    match word_count(n, t) {
        Some(total) if total <= cap => Ok(total),
        _ => Err(Error::CapExceeded {
            required: (n as u128).saturating_pow(t.min(u32::MAX as usize) as u32),
            cap,
        }),
    }
}

/// Every vertex of `S[G,t]` exactly once, in label order.
pub fn enumerate_labels(g: &BaseGraph, t: usize, cap: u64) -> Result<Labels<'_>> {
    let total = check_cap(g.order(), t, cap)?;
    Ok(Labels {
        g,
        t,
        rank: 0,
        total,
    })
}

pub struct Labels<'g> {
    g: &'g BaseGraph,
    t: usize,
    rank: u64,
    total: u64,
}

impl Iterator for Labels<'_> {
    type Item = VertexLabel;

    fn next(&mut self) -> Option<VertexLabel> {
        let n = self.g.order();
        while self.rank < self.total {
            let w = Word::from_rank(self.rank, n, self.t);
            self.rank += 1;
            if is_representative(&w.0, self.g) {
                return Some(canonicalize(&w.0, self.g));
            }
        }
        None
    }
}

/// `n^t - |E| (n^(t-1) - 1)/(n - 1)`.
pub fn gasket_order(n: usize, edges: usize, t: usize) -> u64 {
    let n = n as u64;
    let geometric = (n.pow(t as u32 - 1) - 1) / (n - 1);
    n.pow(t as u32) - edges as u64 * geometric
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u8]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(".")?;
        }
        write!(f, "{}", *l as usize + 1)?;
    }
    Ok(())
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Plain(w) => write_letters(f, &w.0),
            VertexLabel::Contracted { prefix, pair, level } => {
                write_letters(f, prefix)?;
                if !prefix.is_empty() {
                    f.write_str(".")?;
                }
                write!(f, "{{{},{}}}@{}", pair.0 as usize + 1, pair.1 as usize + 1, level)
            }
        }
    }
}

pub fn format_label(label: &VertexLabel) -> String {
    label.to_string()
}

/// Parses the label grammar. A plain word that is an expanded form of a
/// contracted vertex is returned as that contracted vertex; `{j,i}` is
/// accepted and normalised to `{i,j}`.
pub fn parse_label(s: &str, g: &BaseGraph, t: usize) -> Result<VertexLabel> {
    let bad = |reason| Error::InvalidLabel {
        label: s.to_string(),
        reason,
    };
    let n = g.order();
    let letter = |part: &str| -> Result<u8> {
        let v: usize = part.trim().parse().map_err(|_| bad("expected a vertex number"))?;
        if v == 0 || v > n {
            return Err(bad("letter out of range"));
        }
        Ok((v - 1) as u8)
    };
    let s_trim = s.trim();
    if s_trim.is_empty() {
        return Err(bad("empty label"));
    }
    let (head, contraction) = match s_trim.find('{') {
        Some(pos) => (&s_trim[..pos], Some(&s_trim[pos..])),
        None => (s_trim, None),
    };
    let prefix: Vec<u8> = match contraction {
        Some(_) if head.is_empty() => Vec::new(),
        Some(_) => {
            let head = head.strip_suffix('.').ok_or(bad("expected `.` before `{`"))?;
            head.split('.').map(letter).collect::<Result<_>>()?
        }
        None => head.split('.').map(letter).collect::<Result<_>>()?,
    };
    let label = match contraction {
        None => {
            if prefix.len() != t {
                return Err(bad("word length does not match t"));
            }
            canonicalize(&prefix, g)
        }
        Some(c) => {
            let body = c.strip_prefix('{').ok_or(bad("expected `{`"))?;
            let (pair, level) = body.split_once("}@").ok_or(bad("expected `}@level`"))?;
            let (a, b) = pair.split_once(',').ok_or(bad("expected `{i,j}`"))?;
            let (a, b) = (letter(a)?, letter(b)?);
            if a == b {
                return Err(bad("pair needs two distinct vertices"));
            }
            let level: usize = level.trim().parse().map_err(|_| bad("expected a level"))?;
            if level < 2 || prefix.len() + level != t {
                return Err(bad("level out of range for t"));
            }
            VertexLabel::Contracted {
                prefix,
                pair: (a.min(b), a.max(b)),
                level,
            }
        }
    };
    label.validate(g, t).map_err(|e| match e {
        Error::InvalidLabel { reason, .. } => bad(reason),
        other => other,
    })?;
    Ok(label)
}

/// Renders a word or a plain slice of 0-based letters in the 1-based grammar.
pub fn format_letters(letters: &[u8]) -> String {
    format!("{}", Word(letters.to_vec()))
}
