//! Permutations of `{0, .., n-1}`, cycle-notation parsing, cycle types
//! and conjugacy.
//!
//! The text format is 1-based cycle notation, e.g. `"(1 2)(3 4)"` or
//! `"(1234)"`. Separators inside a cycle may be spaces or commas; a run
//! of digits with no separators is split into single digits when the
//! ground set has at most nine points, and read as one number otherwise.
//! Points not mentioned are fixed; the empty string is the identity.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("permutations act on different ground sets ({0} vs {1})")]
    MismatchedDegree(usize, usize),
}

/// A bijection on `{0, .., n-1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Cycle lengths in non-increasing order; the complete conjugacy
/// invariant of the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    pub lengths: Vec<usize>,
}

impl CycleType {
    /// Order of any permutation with this cycle type.
    pub fn group_order(&self) -> usize {
        self.lengths.iter().fold(1usize, |acc, &l| acc.lcm(&l))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: (0..self.degree()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// Parses 1-based cycle notation over `n` points.
    pub fn parse(text: &str, n: usize) -> Result<Permutation, PermError> {
        let err = |position: usize, message: &str| PermError::Parse {
            position,
            message: message.to_string(),
        };
        let chars: Vec<char> = text.chars().collect();
        let mut images: Vec<Option<usize>> = vec![None; n];
        let mut pos = 0usize;
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() {
                pos += 1;
                continue;
            }
            if c != '(' {
                return Err(err(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while pos < chars.len() && (chars[pos].is_whitespace() || chars[pos] == ',') {
                    pos += 1;
                }
                if pos >= chars.len() {
                    return Err(err(pos, "unclosed cycle"));
                }
                if chars[pos] == ')' {
                    pos += 1;
                    break;
                }
                if !chars[pos].is_ascii_digit() {
                    return Err(err(pos, "expected a point or ')'"));
                }
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let run: String = chars[start..pos].iter().collect();
                let points: Vec<(usize, usize)> = if n <= 9 && run.len() > 1 {
                    // digit runs like "(1234)" denote single points
                    run.chars()
                        .enumerate()
                        .map(|(k, d)| (start + k, d.to_digit(10).unwrap() as usize))
                        .collect()
                } else {
                    vec![(start, run.parse::<usize>().map_err(|_| {
                        err(start, "point does not fit in a machine integer")
                    })?)]
                };
                for (at, p) in points {
                    if p == 0 || p > n {
                        return Err(err(at, &format!("point {} outside 1..={}", p, n)));
                    }
                    if cycle.contains(&(p - 1)) || images[p - 1].is_some() {
                        return Err(err(at, &format!("point {} repeated", p)));
                    }
                    cycle.push(p - 1);
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = Some(cycle[(k + 1) % cycle.len()]);
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, im)| im.unwrap_or(i))
            .collect();
        Ok(Permutation { images })
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.apply(cur);
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i == j).count()
    }

    /// Conjugacy test: two permutations of the same degree are conjugate
    /// exactly when their cycle types agree.
    pub fn is_conjugate(&self, other: &Permutation) -> Result<bool, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::MismatchedDegree(self.degree(), other.degree()));
        }
        Ok(self.cycle_type() == other.cycle_type())
    }
}

impl std::fmt::Display for Permutation {
    /// 1-based cycle notation, fixed points omitted; identity prints as
    /// `()`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", cur + 1)?;
                first = false;
                cur = self.apply(cur);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
