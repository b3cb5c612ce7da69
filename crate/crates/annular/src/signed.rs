//! Signed permutations (the hyperoctahedral group B_n) in window notation.
//!
//! An element maps {±1, ..., ±n} to itself with σ(-i) = -σ(i); only the
//! images of 1..=n are stored. Cycles come in two kinds: a zero cycle
//! [a1 .. ak] is the single cycle (a1 .. ak -a1 .. -ak), closed under
//! negation, while a paired cycle ((a1 .. ak)) stands for the pair
//! (a1 .. ak)(-a1 .. -ak). Canonical form puts the entry of smallest
//! absolute value first and positive.
//!
//! Products compose right to left, exactly as for `Permutation`.

use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    /// Builds an element from the images of 1..=n; signs carry the B_n data.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::NotABijection(format!(
                    "window {window:?} is not a signed rearrangement of 1..={n}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn from_b_cycles(n: usize, cycles: &[BCycle]) -> Result<Self> {
        let mut window: Vec<i64> = (1..=n as i64).collect();
        let mut used = vec![false; n + 1];
        let set = |window: &mut Vec<i64>, x: i64, y: i64| {
            if x > 0 {
                window[x as usize - 1] = y;
            } else {
                window[(-x) as usize - 1] = -y;
            }
        };
        for cycle in cycles {
            let entries = cycle.entries();
            for &a in entries {
                let abs = a.unsigned_abs() as usize;
                if abs == 0 || abs > n {
                    return Err(Error::InvalidCycles(format!("entry {a} outside +-1..={n}")));
                }
                if used[abs] {
                    return Err(Error::InvalidCycles(format!("point {abs} appears twice")));
                }
                used[abs] = true;
            }
            let k = entries.len();
            for t in 0..k {
                let from = entries[t];
                let to = if t + 1 < k {
                    entries[t + 1]
                } else {
                    match cycle {
                        BCycle::Zero(_) => -entries[0],
                        BCycle::Paired(_) => entries[0],
                    }
                };
                set(&mut window, from, to);
            }
        }
        SignedPermutation::from_window(window)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Image of any point of {±1, ..., ±n}.
    pub fn apply(&self, x: i64) -> i64 {
        if x > 0 {
            self.window[x as usize - 1]
        } else {
            -self.window[(-x) as usize - 1]
        }
    }

    /// `(self * other)(i) = self(other(i))`: `other` acts first.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let window = other.window.iter().map(|&v| self.apply(v)).collect();
        Ok(SignedPermutation { window })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            if v > 0 {
                window[v as usize - 1] = i as i64 + 1;
            } else {
                window[(-v) as usize - 1] = -(i as i64 + 1);
            }
        }
        SignedPermutation { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// Right-multiplication by a transposition, cheaper than full `compose`.
    pub fn times(&self, t: &BTransposition) -> SignedPermutation {
        let mut window = self.window.clone();
        match *t {
            BTransposition::Zero(i) => {
                window[i - 1] = -window[i - 1];
            }
            BTransposition::Paired(i, j) => {
                let im_i = self.apply(i);
                let im_j = self.apply(j);
                window[i as usize - 1] = im_j;
                if j > 0 {
                    window[j as usize - 1] = im_i;
                } else {
                    window[(-j) as usize - 1] = -im_i;
                }
            }
        }
        SignedPermutation { window }
    }

    /// Cycle decomposition: zero cycles and paired cycles (fixed points
    /// included as one-entry paired cycles), each in canonical form, sorted
    /// by smallest absolute entry.
    pub fn b_cycles(&self) -> Vec<BCycle> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n as i64 {
            if seen[start as usize] {
                continue;
            }
            let mut entries = vec![start];
            seen[start as usize] = true;
            let mut cur = self.apply(start);
            let kind = loop {
                if cur == start {
                    break true; // returned to the start: paired
                }
                if cur == -start {
                    break false; // hit the mirror: zero
                }
                seen[cur.unsigned_abs() as usize] = true;
                entries.push(cur);
                cur = self.apply(cur);
            };
            out.push(if kind {
                BCycle::Paired(entries)
            } else {
                BCycle::Zero(entries)
            });
        }
        out
    }

    pub fn paired_cycle_count(&self) -> usize {
        self.b_cycles()
            .iter()
            .filter(|c| matches!(c, BCycle::Paired(_)))
            .count()
    }

    pub fn zero_cycle_count(&self) -> usize {
        self.b_cycles()
            .iter()
            .filter(|c| matches!(c, BCycle::Zero(_)))
            .count()
    }

    /// Absolute length: n minus the number of paired cycles.
    pub fn abs_length(&self) -> usize {
        self.n() - self.paired_cycle_count()
    }

    /// Absolute order: self <= other iff lengths add along the quotient.
    pub fn abs_leq(&self, other: &SignedPermutation) -> bool {
        assert_eq!(self.n(), other.n(), "absolute order needs equal sizes");
        let quot = self.inverse().compose(other).expect("sizes match");
        other.abs_length() == self.abs_length() + quot.abs_length()
    }

    /// Erases all signs from the window, staying inside B_n.
    pub fn positive_part(&self) -> SignedPermutation {
        SignedPermutation {
            window: self.window.iter().map(|v| v.abs()).collect(),
        }
    }

    /// The underlying permutation of {1, ..., n}.
    pub fn shadow(&self) -> Permutation {
        Permutation::from_images(
            self.window
                .iter()
                .map(|v| v.unsigned_abs() as usize)
                .collect(),
        )
        .expect("a signed permutation shadows to a bijection")
    }

    /// Number of paired cycles whose support meets both {1..p} and {p+1..n}.
    /// Zero cycles never count.
    pub fn connectivity(&self, p: usize) -> usize {
        self.b_cycles()
            .iter()
            .filter(|c| c.is_connected(p))
            .count()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.b_cycles().iter().map(|c| c.to_json()).collect())
    }
}

impl fmt::Display for SignedPermutation {
    /// Prints all zero cycles and all paired cycles of length >= 2;
    /// the identity prints as "e".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.b_cycles() {
            if matches!(&cycle, BCycle::Paired(e) if e.len() == 1) {
                continue;
            }
            wrote = true;
            write!(f, "{cycle}")?;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// One cycle of a signed permutation, entries in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BCycle {
    Zero(Vec<i64>),
    Paired(Vec<i64>),
}

impl BCycle {
    /// Canonicalizes a zero cycle given as any half of its orbit.
    pub fn zero(entries: Vec<i64>) -> Result<Self> {
        Self::check_entries(&entries)?;
        let k = entries.len();
        // The full orbit alternates entries and their negatives; pick the
        // window of length k starting at the positive smallest-abs entry.
        let mut doubled = entries.clone();
        doubled.extend(entries.iter().map(|v| -v));
        let min_abs = entries.iter().map(|v| v.abs()).min().unwrap();
        let pos = doubled.iter().position(|&v| v == min_abs).unwrap();
        let canon = (0..k).map(|t| doubled[(pos + t) % (2 * k)]).collect();
        Ok(BCycle::Zero(canon))
    }

    /// Canonicalizes a paired cycle given as one of its two mirror orbits.
    pub fn paired(entries: Vec<i64>) -> Result<Self> {
        Self::check_entries(&entries)?;
        let k = entries.len();
        let min_abs = entries.iter().map(|v| v.abs()).min().unwrap();
        let mut work = entries;
        if !work.contains(&min_abs) {
            // Switch to the mirror orbit so the smallest entry is positive.
            for v in &mut work {
                *v = -*v;
            }
        }
        let pos = work.iter().position(|&v| v == min_abs).unwrap();
        let canon = (0..k).map(|t| work[(pos + t) % k]).collect();
        Ok(BCycle::Paired(canon))
    }

    fn check_entries(entries: &[i64]) -> Result<()> {
        if entries.is_empty() {
            return Err(Error::InvalidCycles("empty cycle".into()));
        }
        let mut abs: Vec<i64> = entries.iter().map(|v| v.abs()).collect();
        abs.sort_unstable();
        if abs[0] == 0 || abs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycles(format!(
                "entries {entries:?} must have distinct nonzero absolute values"
            )));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[i64] {
        match self {
            BCycle::Zero(e) | BCycle::Paired(e) => e,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, BCycle::Zero(_))
    }

    /// A cycle is connected when it is paired and its absolute support meets
    /// both {1..p} and {p+1..n}. Zero cycles are never connected.
    pub fn is_connected(&self, p: usize) -> bool {
        match self {
            BCycle::Zero(_) => false,
            BCycle::Paired(entries) => {
                let lo = entries.iter().any(|&v| v.unsigned_abs() as usize <= p);
                let hi = entries.iter().any(|&v| v.unsigned_abs() as usize > p);
                lo && hi
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            BCycle::Zero(e) => json!({ "zero": e }),
            BCycle::Paired(e) => json!({ "paired": e }),
        }
    }
}

impl fmt::Display for BCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self {
            BCycle::Zero(_) => ("[", "]"),
            BCycle::Paired(_) => ("((", "))"),
        };
        write!(f, "{open}")?;
        for (k, a) in self.entries().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "{close}")
    }
}

/// The reflections of B_n: zero transpositions [i] = (i -i) and paired
/// transpositions ((i j)) with 1 <= i < |j|. There are n^2 of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BTransposition {
    Zero(usize),
    Paired(i64, i64),
}

impl BTransposition {
    /// Zero reflections first by point, then paired ones by (i, |j|) with
    /// the positive orientation before the negative — the same order
    /// `b_transpositions` enumerates them in.
    fn sort_key(&self) -> (u8, usize, usize, u8) {
        match *self {
            BTransposition::Zero(i) => (0, i, 0, 0),
            BTransposition::Paired(i, j) => (
                1,
                i as usize,
                j.unsigned_abs() as usize,
                u8::from(j < 0),
            ),
        }
    }
}

impl PartialOrd for BTransposition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BTransposition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl BTransposition {
    pub fn zero(i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidCycles("[0] is not a point".into()));
        }
        Ok(BTransposition::Zero(i))
    }

    pub fn paired(a: i64, b: i64) -> Result<Self> {
        if a == 0 || b == 0 || a.abs() == b.abs() {
            return Err(Error::InvalidCycles(format!(
                "(({a} {b})) is not a paired transposition"
            )));
        }
        let (mut i, mut j) = if a.abs() < b.abs() { (a, b) } else { (b, a) };
        if i < 0 {
            i = -i;
            j = -j;
        }
        Ok(BTransposition::Paired(i, j))
    }

    pub fn to_signed(&self, n: usize) -> Result<SignedPermutation> {
        let cycle = match *self {
            BTransposition::Zero(i) => BCycle::zero(vec![i as i64])?,
            BTransposition::Paired(i, j) => BCycle::paired(vec![i, j])?,
        };
        let max = cycle
            .entries()
            .iter()
            .map(|v| v.unsigned_abs() as usize)
            .max()
            .unwrap();
        if max > n {
            return Err(Error::InvalidCycles(format!("{self} does not fit in B_{n}")));
        }
        SignedPermutation::from_b_cycles(n, &[cycle])
    }

    /// Flips the sign of the second canonical entry: ((i j)) <-> ((i -j)).
    /// Zero transpositions have no toggle.
    pub fn toggled(&self) -> Result<Self> {
        match *self {
            BTransposition::Zero(_) => Err(Error::ToggleOfZero),
            BTransposition::Paired(i, j) => Ok(BTransposition::Paired(i, -j)),
        }
    }

    /// The transposition of S_n this projects to; zero transpositions
    /// project to the identity and give nothing.
    pub fn shadow(&self) -> Option<Transposition> {
        match *self {
            BTransposition::Zero(_) => None,
            BTransposition::Paired(i, j) => {
                Some(Transposition::new(i as usize, j.unsigned_abs() as usize).unwrap())
            }
        }
    }

    /// Absolute values of the moved points.
    pub fn support_abs(&self) -> Vec<usize> {
        match *self {
            BTransposition::Zero(i) => vec![i],
            BTransposition::Paired(i, j) => vec![i as usize, j.unsigned_abs() as usize],
        }
    }

    pub fn is_connected(&self, p: usize) -> bool {
        match *self {
            BTransposition::Zero(_) => false,
            BTransposition::Paired(i, j) => (i as usize) <= p && j.unsigned_abs() as usize > p,
        }
    }

    /// True when all canonical entries are positive.
    pub fn is_positive(&self) -> bool {
        matches!(*self, BTransposition::Paired(_, j) if j > 0)
    }

    pub fn to_json(&self) -> Value {
        match *self {
            BTransposition::Zero(i) => json!({ "zero": [i] }),
            BTransposition::Paired(i, j) => json!({ "paired": [i, j] }),
        }
    }
}

impl fmt::Display for BTransposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BTransposition::Zero(i) => write!(f, "[{i}]"),
            BTransposition::Paired(i, j) => write!(f, "(({i} {j}))"),
        }
    }
}

/// All n^2 reflections of B_n: zero ones first, then paired by (i, |j|),
/// positive before negative.
pub fn b_transpositions(n: usize) -> Vec<BTransposition> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        out.push(BTransposition::Zero(i));
    }
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            out.push(BTransposition::Paired(i, j));
            out.push(BTransposition::Paired(i, -j));
        }
    }
    out
}

/// The two-zero-cycle element [1 .. p][p+1 .. p+q] of B_{p+q}.
pub fn gamma_pq(p: usize, q: usize) -> Result<SignedPermutation> {
    if p == 0 || q == 0 {
        return Err(Error::EmptyBlock { p, q });
    }
    SignedPermutation::from_b_cycles(
        p + q,
        &[
            BCycle::zero((1..=p as i64).collect())?,
            BCycle::zero((p as i64 + 1..=(p + q) as i64).collect())?,
        ],
    )
}

/// The two-paired-cycle element ((1 .. p))((p+1 .. p+q)) of B_{p+q}.
pub fn beta_pq(p: usize, q: usize) -> Result<SignedPermutation> {
    if p == 0 || q == 0 {
        return Err(Error::EmptyBlock { p, q });
    }
    SignedPermutation::from_b_cycles(
        p + q,
        &[
            BCycle::paired((1..=p as i64).collect())?,
            BCycle::paired((p as i64 + 1..=(p + q) as i64).collect())?,
        ],
    )
}

/// The single full zero cycle [1 .. n] of B_n.
pub fn full_zero_cycle(n: usize) -> Result<SignedPermutation> {
    if n == 0 {
        return Err(Error::EmptyBlock { p: 0, q: 0 });
    }
    SignedPermutation::from_b_cycles(n, &[BCycle::zero((1..=n as i64).collect())?])
}

/// All 2^n n! elements of B_n in a fixed deterministic order.
pub fn all_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let shadows = crate::perm::all_permutations(n);
    let mut out = Vec::with_capacity((1usize << n) * shadows.len());
    for shadow in &shadows {
        for mask in 0u32..(1 << n) {
            let window = (0..n)
                .map(|k| {
                    let v = shadow.apply(k + 1) as i64;
                    if mask & (1 << k) != 0 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            out.push(SignedPermutation { window });
        }
    }
    out
}
