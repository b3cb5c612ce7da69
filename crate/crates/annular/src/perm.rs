//! Permutations of {1, ..., n} with the absolute (reflection) length and
//! absolute order machinery used throughout the crate.
//!
//! Products compose right to left: `(a * b)(i) = a(b(i))`, so in a factor
//! sequence written left to right the rightmost factor acts first.

use crate::error::{Error, Result};
use serde_json::{json, Value};
use std::fmt;

/// A permutation of {1, ..., n}, stored as the image table of 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from the images of 1..=n (1-based values).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotABijection(format!(
                    "image table {images:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of 1..=n from disjoint cycles; omitted points stay fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::InvalidCycles(format!("entry {a} is outside 1..={n}")));
                }
                if used[a] {
                    return Err(Error::InvalidCycles(format!("entry {a} appears twice")));
                }
                used[a] = true;
                let b = cycle[(k + 1) % cycle.len()];
                images[a - 1] = b;
            }
        }
        Permutation::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a point, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self * other)(i) = self(other(i))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let images = other.images.iter().map(|&i| self.images[i - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Cycle decomposition in canonical form: every cycle (fixed points
    /// included) starts at its smallest element, cycles sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.apply(cur);
            }
        }
        count
    }

    /// Absolute length: n minus the number of cycles (fixed points count as cycles).
    pub fn abs_length(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// Absolute order: self <= other iff lengths add along the quotient.
    pub fn abs_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n(), "absolute order needs equal sizes");
        let quot = self.inverse().compose(other).expect("sizes match");
        other.abs_length() == self.abs_length() + quot.abs_length()
    }

    /// True when some cycle meets both {1..p} and {p+1..n}.
    pub fn is_connected(&self, p: usize) -> bool {
        self.cycles().iter().any(|c| {
            c.iter().any(|&x| x <= p) && c.iter().any(|&x| x > p)
        })
    }

    pub fn to_json(&self) -> Value {
        json!(self.cycles())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (k, a) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// A transposition (i j) with i < j, the atoms of the absolute order on S_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::InvalidCycles(format!(
                "({a} {b}) is not a transposition"
            )));
        }
        Ok(Transposition {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn apply(&self, x: usize) -> usize {
        if x == self.i {
            self.j
        } else if x == self.j {
            self.i
        } else {
            x
        }
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if self.j > n {
            return Err(Error::InvalidCycles(format!(
                "({} {}) does not fit in S_{n}",
                self.i, self.j
            )));
        }
        Permutation::from_cycles(n, &[vec![self.i, self.j]])
    }

    /// Connected means the support meets both {1..p} and {p+1..}.
    pub fn is_connected(&self, p: usize) -> bool {
        self.i <= p && self.j > p
    }

    pub fn to_json(&self) -> Value {
        json!([self.i, self.j])
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

/// All transpositions of S_n, ordered by (i, j).
pub fn transpositions(n: usize) -> Vec<Transposition> {
    let mut out = Vec::with_capacity(n * (n.max(1) - 1) / 2);
    for i in 1..n {
        for j in (i + 1)..=n {
            out.push(Transposition { i, j });
        }
    }
    out
}

/// All permutations of S_n in lexicographic order of their image tables.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if images.len() == n {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Parses a comma-separated list like "3,2".
    pub fn parse(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        let mut parts =
            parts.map_err(|e| Error::InvalidPartition(format!("cannot parse {s:?}: {e}")))?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The canonical permutation with this cycle type: consecutive blocks
    /// (1 .. λ1)(λ1+1 .. λ1+λ2)...
    pub fn canonical_permutation(&self) -> Permutation {
        let mut cycles = Vec::new();
        let mut next = 1;
        for &part in &self.parts {
            cycles.push((next..next + part).collect());
            next += part;
        }
        Permutation::from_cycles(self.n(), &cycles).expect("blocks are disjoint")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// All partitions of n, first part decreasing.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The two-block permutation (1 .. p)(p+1 .. p+q). Unlike the partition
/// route this keeps the first block on {1..p} even when p < q.
pub fn alpha_pq(p: usize, q: usize) -> Result<Permutation> {
    if p == 0 || q == 0 {
        return Err(Error::EmptyBlock { p, q });
    }
    Permutation::from_cycles(
        p + q,
        &[(1..=p).collect(), (p + 1..=p + q).collect()],
    )
}
