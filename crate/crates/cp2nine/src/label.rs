//! Vertex labels: original vertices and barycenters of sets of labels.
//!
//! Text form: an original vertex is its decimal number (`7`); a derived label
//! is its children concatenated inside brackets (`[14]`, `[[23][89]]`).
//! Inside brackets each original child must be a single digit, which keeps
//! the concatenation unambiguous.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    Original(u32),
    Derived(Vec<Label>),
}

impl Label {
    pub fn orig(n: u32) -> Label {
        Label::Original(n)
    }

    /// Barycenter of `children`. The children are sorted; duplicates and
    /// fewer than two children are rejected.
    pub fn derived(children: impl IntoIterator<Item = Label>) -> Result<Label> {
        let mut v: Vec<Label> = children.into_iter().collect();
        v.sort();
        let n = v.len();
        v.dedup();
        if v.len() != n || n < 2 {
            let shown: Vec<String> = v.iter().map(|l| l.to_string()).collect();
            return Err(Error::BadDerived(shown.join(",")));
        }
        for c in &v {
            if let Label::Original(k) = c {
                if *k > 9 {
                    return Err(Error::BadDerived(format!("original child {k} cannot be written inside brackets")));
                }
            }
        }
        Ok(Label::Derived(v))
    }

    pub fn is_original(&self) -> bool {
        matches!(self, Label::Original(_))
    }

    pub fn arity(&self) -> usize {
        match self {
            Label::Original(_) => 1,
            Label::Derived(c) => c.len(),
        }
    }

    pub fn children(&self) -> &[Label] {
        match self {
            Label::Original(_) => &[],
            Label::Derived(c) => c,
        }
    }

    /// Parses a run of labels written without separators, e.g. `[14][147]26`.
    /// Bare digits are single-digit original labels.
    pub fn parse_run(s: &str) -> Result<Vec<Label>> {
        let b = s.as_bytes();
        let mut pos = 0;
        let mut out = Vec::new();
        while pos < b.len() {
            let (l, next) = parse_at(s, b, pos, true)?;
            out.push(l);
            pos = next;
        }
        Ok(out)
    }
}

fn parse_at(src: &str, b: &[u8], pos: usize, single_digit: bool) -> Result<(Label, usize)> {
    match b[pos] {
        b'[' => {
            let mut kids = Vec::new();
            let mut p = pos + 1;
            loop {
                if p >= b.len() {
                    return Err(Error::LabelParse(src.into(), "unclosed bracket"));
                }
                if b[p] == b']' {
                    p += 1;
                    break;
                }
                let (l, next) = parse_at(src, b, p, true)?;
                kids.push(l);
                p = next;
            }
            let n = kids.len();
            let l = Label::derived(kids)
                .map_err(|_| Error::LabelParse(src.into(), "derived label needs distinct children"))?;
            if n < 2 {
                return Err(Error::LabelParse(src.into(), "derived label needs two children"));
            }
            Ok((l, p))
        }
        c if c.is_ascii_digit() => {
            if single_digit {
                if c == b'0' {
                    return Err(Error::LabelParse(src.into(), "label 0 inside brackets"));
                }
                Ok((Label::Original((c - b'0') as u32), pos + 1))
            } else {
                let mut p = pos;
                while p < b.len() && b[p].is_ascii_digit() {
                    p += 1;
                }
                let n: u32 = src[pos..p].parse().map_err(|_| Error::LabelParse(src.into(), "integer out of range"))?;
                Ok((Label::Original(n), p))
            }
        }
        _ => Err(Error::LabelParse(src.into(), "unexpected character")),
    }
}

impl FromStr for Label {
    type Err = Error;

    /// A single label; a bare number may have several digits here.
    fn from_str(s: &str) -> Result<Label> {
        if s.is_empty() {
            return Err(Error::LabelParse(s.into(), "empty"));
        }
        let b = s.as_bytes();
        let (l, end) = parse_at(s, b, 0, false)?;
        if end != b.len() {
            return Err(Error::LabelParse(s.into(), "trailing characters"));
        }
        Ok(l)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Original(n) => write!(f, "{n}"),
            Label::Derived(c) => {
                f.write_str("[")?;
                for l in c {
                    write!(f, "{l}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Original(a), Label::Original(b)) => a.cmp(b),
            (Label::Original(_), Label::Derived(_)) => Ordering::Less,
            (Label::Derived(_), Label::Original(_)) => Ordering::Greater,
            (Label::Derived(a), Label::Derived(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u32> for Label {
    fn from(n: u32) -> Self {
        Label::Original(n)
    }
}

/// Parses a single label, panicking on bad input. Meant for literals.
pub fn lbl(s: &str) -> Label {
    s.parse().unwrap_or_else(|e| panic!("bad label literal {s}: {e}"))
}
