//! Permutations of a finite set and their disjoint-cycle structure.
//!
//! Internally every permutation acts on `0..n`. All text input and output uses
//! 1-based indices, so `(1,3)(2)(4)` swaps the elements stored at 0 and 2.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as its image array: `image[j]` is where `j` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptySet);
        }
        Ok(Self {
            image: (0..size).collect(),
        })
    }

    /// Builds a permutation from a 0-based image array.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let size = image.len();
        if size == 0 {
            return Err(Error::EmptySet);
        }
        let mut seen = vec![false; size];
        for &target in &image {
            if target >= size || seen[target] {
                return Err(Error::NotBijection(size));
            }
            seen[target] = true;
        }
        Ok(Self { image })
    }

    /// Builds a permutation on `size` elements from 0-based disjoint cycles.
    /// Elements not mentioned are fixed.
    pub fn from_cycles(size: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image = Self::identity(size)?.image;
        let mut seen = vec![false; size];
        for cycle in cycles {
            for &j in cycle {
                if j >= size {
                    return Err(Error::IndexOutOfRange { index: j + 1, size });
                }
                if seen[j] {
                    return Err(Error::RepeatedIndex(j + 1));
                }
                seen[j] = true;
            }
            for (pos, &j) in cycle.iter().enumerate() {
                image[j] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Self { image })
    }

    /// Parses 1-based cycle notation such as `(1,3)(2)(4)` or an image list
    /// such as `3 2 1 4`. Cycle notation is recognised by the presence of `(`.
    pub fn parse(text: &str, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptySet);
        }
        if text.contains('(') || text.contains(')') {
            let cycles = parse_cycle_notation(text, size)?;
            Self::from_cycles(size, &cycles)
        } else {
            parse_image_list(text, size)
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, j: usize) -> usize {
        self.image[j]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &t)| j == t)
    }

    /// Returns `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.size()];
        for (j, &t) in self.image.iter().enumerate() {
            image[t] = j;
        }
        Permutation { image }
    }

    /// Disjoint cycles as 0-based element lists, each starting at its
    /// smallest element, ordered by that element. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                cycle.push(j);
                j = self.image[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let mut counts = vec![0usize; self.size() + 1];
        for cycle in self.cycles() {
            counts[cycle.len()] += 1;
        }
        CycleStructure {
            pairs: counts
                .into_iter()
                .enumerate()
                .filter(|&(_, d)| d > 0)
                .collect(),
        }
    }

    /// Number of disjoint cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    /// Writes 1-based cycle notation, omitting fixed points. The identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            f.write_str("(")?;
            for (pos, j) in cycle.iter().enumerate() {
                if pos > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", j + 1)?;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn malformed(text: &str, reason: impl Into<String>) -> Error {
    Error::Malformed {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn parse_index(token: &str, text: &str, size: usize) -> Result<usize> {
    let index: usize = token
        .parse()
        .map_err(|_| malformed(text, format!("{token:?} is not an index")))?;
    if index == 0 || index > size {
        return Err(Error::IndexOutOfRange { index, size });
    }
    Ok(index - 1)
}

fn parse_cycle_notation(text: &str, size: usize) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| malformed(text, "expected '('"))?;
        let close = body
            .find(')')
            .ok_or_else(|| malformed(text, "unbalanced parentheses"))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(malformed(text, "nested parentheses"));
        }
        let cycle = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| parse_index(t, text, size))
            .collect::<Result<Vec<_>>>()?;
        if inner.contains(',') && inner.split(',').any(|t| t.trim().is_empty()) {
            return Err(malformed(text, "empty entry in cycle"));
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn parse_image_list(text: &str, size: usize) -> Result<Permutation> {
    let image = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_index(t, text, size))
        .collect::<Result<Vec<_>>>()?;
    if image.len() != size {
        return Err(Error::NotBijection(size));
    }
    Permutation::from_image(image)
}

/// Grouped disjoint-cycle type: `(r, d)` pairs meaning `d` cycles of length `r`,
/// sorted by `r` ascending with every `r` distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleStructure {
    pairs: Vec<(usize, usize)>,
}

impl CycleStructure {
    /// Accepts `(r, d)` pairs in any order. Lengths must be distinct and all
    /// entries positive.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::RepeatedIndex(w[0].0));
            }
        }
        if pairs.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&(r, d)) = pairs.iter().find(|&&(r, d)| r == 0 || d == 0) {
            return Err(Error::Malformed {
                text: format!("({r}, {d})"),
                reason: "cycle length and multiplicity must be positive".into(),
            });
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Σ r·d, the size of the set acted on.
    pub fn set_size(&self) -> usize {
        self.pairs.iter().map(|&(r, d)| r * d).sum()
    }

    /// Σ d, the total number of disjoint cycles.
    pub fn cycle_count(&self) -> usize {
        self.pairs.iter().map(|&(_, d)| d).sum()
    }
}
