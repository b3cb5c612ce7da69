//! The annular noncrossing poset of type B: the interval [identity, γ] in
//! the absolute order on B_{p+q}, where γ = [1..p][p+1..p+q].
//!
//! The poset is graded by absolute length. Saturated chains from the bottom
//! correspond bijectively to reflection factorizations of γ via the running
//! quotient τ_i = π_{i-1}^{-1} π_i, so that π_i = τ_1 ... τ_i.

use crate::error::{Error, Result};
use crate::signed::{
    b_transpositions, full_zero_cycle, gamma_pq, BTransposition, SignedPermutation,
};
use num::{BigUint, One, Zero};
use serde_json::{json, Value};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

pub const DEFAULT_ELEMENT_GUARD: usize = 7;
pub const DEFAULT_CHAIN_GUARD: usize = 6;

/// The ambient data of one annulus: block sizes and the top element.
#[derive(Debug, Clone)]
pub struct PosetContext {
    p: usize,
    q: usize,
    gamma: SignedPermutation,
    element_guard: usize,
    chain_guard: usize,
}

impl PosetContext {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        Ok(PosetContext {
            p,
            q,
            gamma: gamma_pq(p, q)?,
            element_guard: DEFAULT_ELEMENT_GUARD,
            chain_guard: DEFAULT_CHAIN_GUARD,
        })
    }

    /// Raises (or lowers) the exhaustive-work guards.
    pub fn with_guards(mut self, element_guard: usize, chain_guard: usize) -> Self {
        self.element_guard = element_guard;
        self.chain_guard = chain_guard;
        self
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn gamma(&self) -> &SignedPermutation {
        &self.gamma
    }

    pub fn in_poset(&self, s: &SignedPermutation) -> bool {
        s.n() == self.n() && s.abs_leq(&self.gamma)
    }

    /// Rank inside the poset; equals absolute length.
    pub fn rank(&self, s: &SignedPermutation) -> Result<usize> {
        if !self.in_poset(s) {
            return Err(Error::NotInPoset(s.to_string()));
        }
        Ok(s.abs_length())
    }

    /// All covers of `lo` inside the poset, keyed by the reflection taken,
    /// in the deterministic reflection order.
    pub fn covers_of(&self, lo: &SignedPermutation) -> Vec<(BTransposition, SignedPermutation)> {
        let mut out = Vec::new();
        for t in b_transpositions(self.n()) {
            let hi = lo.times(&t);
            if hi.abs_length() == lo.abs_length() + 1 && hi.abs_leq(&self.gamma) {
                out.push((t, hi));
            }
        }
        out
    }

    /// How `hi` covers `lo`, when it does.
    pub fn cover_type(&self, lo: &SignedPermutation, hi: &SignedPermutation) -> Option<CoverType> {
        if !self.in_poset(lo) || !self.in_poset(hi) {
            return None;
        }
        if hi.abs_length() != lo.abs_length() + 1 {
            return None;
        }
        let quot = lo.inverse().compose(hi).ok()?;
        if quot.abs_length() != 1 {
            return None;
        }
        Some(classify_cover(lo, &quot))
    }

    /// Every element of the poset, sorted.
    pub fn elements(&self) -> Result<Vec<SignedPermutation>> {
        if self.n() > self.element_guard {
            return Err(Error::GuardExceeded {
                what: "poset element enumeration",
                param: "p+q",
                limit: self.element_guard,
                requested: self.n(),
            });
        }
        let mut seen = BTreeSet::new();
        let mut frontier = vec![SignedPermutation::identity(self.n())];
        seen.insert(frontier[0].clone());
        while let Some(cur) = frontier.pop() {
            for (_, hi) in self.covers_of(&cur) {
                if seen.insert(hi.clone()) {
                    frontier.push(hi);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Streams every maximal chain in lexicographic order of the reflection
    /// sequence taken from the bottom.
    pub fn maximal_chains(&self) -> Result<SaturatedChains> {
        if self.n() > self.chain_guard {
            return Err(Error::GuardExceeded {
                what: "maximal chain enumeration",
                param: "p+q",
                limit: self.chain_guard,
                requested: self.n(),
            });
        }
        Ok(SaturatedChains::new(self.gamma.clone()))
    }

    /// Counts maximal chains without materializing them:
    /// (total, disconnected, connected).
    pub fn chain_counts(&self) -> Result<ChainCounts> {
        if self.n() > self.chain_guard {
            return Err(Error::GuardExceeded {
                what: "maximal chain counting",
                param: "p+q",
                limit: self.chain_guard,
                requested: self.n(),
            });
        }
        let mut all_memo = HashMap::new();
        let total = count_paths(&self.gamma, &mut all_memo);
        let mut disc_memo = HashMap::new();
        let disconnected = self.count_disconnected_paths(&self.gamma, &mut disc_memo);
        let connected = &total - &disconnected;
        Ok(ChainCounts {
            total,
            disconnected,
            connected,
        })
    }

    fn count_disconnected_paths(
        &self,
        s: &SignedPermutation,
        memo: &mut HashMap<SignedPermutation, BigUint>,
    ) -> BigUint {
        if s.connectivity(self.p) > 0 {
            return BigUint::zero();
        }
        if s.is_identity() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(s) {
            return v.clone();
        }
        let mut sum = BigUint::zero();
        for t in b_transpositions(s.n()) {
            let lo = s.times(&t);
            if lo.abs_length() + 1 == s.abs_length() {
                sum += self.count_disconnected_paths(&lo, memo);
            }
        }
        memo.insert(s.clone(), sum.clone());
        sum
    }

    /// All multichains with the given rank profile, as element tuples.
    pub fn multichains(
        &self,
        profile: &[usize],
    ) -> Result<Vec<Vec<SignedPermutation>>> {
        validate_profile(profile, self.n())?;
        let elements = self.elements()?;
        let mut by_rank: Vec<Vec<&SignedPermutation>> = vec![Vec::new(); self.n() + 1];
        for e in &elements {
            by_rank[e.abs_length()].push(e);
        }
        let mut out = Vec::new();
        let mut prefix: Vec<&SignedPermutation> = Vec::new();
        fn rec<'a>(
            profile: &[usize],
            by_rank: &[Vec<&'a SignedPermutation>],
            prefix: &mut Vec<&'a SignedPermutation>,
            out: &mut Vec<Vec<SignedPermutation>>,
        ) {
            if prefix.len() == profile.len() {
                out.push(prefix.iter().map(|e| (*e).clone()).collect());
                return;
            }
            let i = prefix.len();
            for cand in &by_rank[profile[i]] {
                if let Some(prev) = prefix.last() {
                    if !prev.abs_leq(cand) {
                        continue;
                    }
                }
                prefix.push(cand);
                rec(profile, by_rank, prefix, out);
                prefix.pop();
            }
        }
        rec(profile, &by_rank, &mut prefix, &mut out);
        Ok(out)
    }

    /// A multichain is connected when some member has a connected cycle.
    pub fn multichain_is_connected(&self, chain: &[SignedPermutation]) -> bool {
        chain.iter().any(|e| e.connectivity(self.p) > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCounts {
    pub total: BigUint,
    pub disconnected: BigUint,
    pub connected: BigUint,
}

/// The four ways one poset element can cover another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverType {
    /// A zero reflection turns the paired cycle through its point into a zero cycle.
    Zeroize,
    /// A paired reflection merges two paired cycles into one.
    MergePaired,
    /// A paired reflection absorbs a paired cycle into a zero cycle.
    AbsorbIntoZero,
    /// A paired reflection splits one paired cycle into two zero cycles.
    SplitToZeros,
}

impl CoverType {
    /// Net change in the number of zero cycles along the cover.
    pub fn zero_cycle_delta(&self) -> usize {
        match self {
            CoverType::Zeroize => 1,
            CoverType::MergePaired | CoverType::AbsorbIntoZero => 0,
            CoverType::SplitToZeros => 2,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CoverType::Zeroize => "zeroize",
            CoverType::MergePaired => "merge-paired",
            CoverType::AbsorbIntoZero => "absorb-into-zero",
            CoverType::SplitToZeros => "split-to-zeros",
        }
    }
}

impl fmt::Display for CoverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a cover given the lower element and the quotient reflection.
fn classify_cover(lo: &SignedPermutation, quot: &SignedPermutation) -> CoverType {
    let cycles = quot.b_cycles();
    let moved: Vec<_> = cycles
        .iter()
        .filter(|c| c.is_zero() || c.entries().len() > 1)
        .collect();
    assert_eq!(moved.len(), 1, "a reflection moves exactly one cycle");
    let lo_cycles = lo.b_cycles();
    let kind_of = |point: usize| {
        lo_cycles
            .iter()
            .enumerate()
            .find(|(_, c)| c.entries().iter().any(|e| e.unsigned_abs() as usize == point))
            .map(|(idx, c)| (idx, c.is_zero()))
            .expect("every point lies in a cycle")
    };
    match moved[0] {
        crate::signed::BCycle::Zero(entries) => {
            let i = entries[0].unsigned_abs() as usize;
            let (_, is_zero) = kind_of(i);
            assert!(!is_zero, "a zero reflection covers only from a paired cycle");
            CoverType::Zeroize
        }
        crate::signed::BCycle::Paired(entries) => {
            let i = entries[0].unsigned_abs() as usize;
            let j = entries[1].unsigned_abs() as usize;
            let (ci, zi) = kind_of(i);
            let (cj, zj) = kind_of(j);
            if ci == cj {
                assert!(!zi, "an upward move cannot act twice in a zero cycle");
                CoverType::SplitToZeros
            } else {
                match (zi, zj) {
                    (false, false) => CoverType::MergePaired,
                    (true, false) | (false, true) => CoverType::AbsorbIntoZero,
                    (true, true) => unreachable!("merging two zero cycles lowers the rank"),
                }
            }
        }
    }
}

/// A saturated chain from the identity to the top of its interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaximalChainB {
    elements: Vec<SignedPermutation>,
}

impl MaximalChainB {
    /// Validates that the elements form a saturated chain from the identity
    /// to `ctx`'s top.
    pub fn new(elements: Vec<SignedPermutation>, ctx: &PosetContext) -> Result<Self> {
        if elements.len() != ctx.n() + 1 {
            return Err(Error::InvalidChain(format!(
                "expected {} elements, got {}",
                ctx.n() + 1,
                elements.len()
            )));
        }
        if !elements[0].is_identity() {
            return Err(Error::InvalidChain("must start at the identity".into()));
        }
        if elements.last().unwrap() != ctx.gamma() {
            return Err(Error::InvalidChain("must end at the top".into()));
        }
        for (i, window) in elements.windows(2).enumerate() {
            if ctx.cover_type(&window[0], &window[1]).is_none() {
                return Err(Error::InvalidChain(format!(
                    "step {} is not a cover",
                    i + 1
                )));
            }
        }
        Ok(MaximalChainB { elements })
    }

    fn from_trusted(elements: Vec<SignedPermutation>) -> Self {
        MaximalChainB { elements }
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    /// The reflection sequence (τ_1, ..., τ_n) with τ_i = π_{i-1}^{-1} π_i.
    pub fn transpositions(&self) -> Vec<BTransposition> {
        self.elements
            .windows(2)
            .map(|w| {
                let quot = w[0].inverse().compose(&w[1]).expect("sizes match");
                reflection_of(&quot).expect("chain steps are reflections")
            })
            .collect()
    }

    pub fn is_connected(&self, ctx: &PosetContext) -> bool {
        ctx.multichain_is_connected(&self.elements)
    }

    pub fn to_json(&self, ctx: &PosetContext) -> Value {
        json!({
            "elements": self.elements.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            "transpositions": self
                .transpositions()
                .iter()
                .map(|t| t.to_json())
                .collect::<Vec<_>>(),
            "connected": self.is_connected(ctx),
        })
    }
}

impl fmt::Display for MaximalChainB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Reads a reflection back out of a length-one signed permutation.
pub fn reflection_of(s: &SignedPermutation) -> Result<BTransposition> {
    if s.abs_length() != 1 {
        return Err(Error::Domain(format!("{s} is not a reflection")));
    }
    for c in s.b_cycles() {
        match &c {
            crate::signed::BCycle::Zero(e) if e.len() == 1 => {
                return BTransposition::zero(e[0] as usize);
            }
            crate::signed::BCycle::Paired(e) if e.len() == 2 => {
                return BTransposition::paired(e[0], e[1]);
            }
            _ => {}
        }
    }
    Err(Error::Domain(format!("{s} is not a reflection")))
}

/// Rebuilds a maximal chain from its reflection sequence. Rejects sequences
/// whose running products skip a rank, leave the interval, or miss the top.
pub fn chain_from_transpositions(
    ts: &[BTransposition],
    ctx: &PosetContext,
) -> Result<MaximalChainB> {
    if ts.len() != ctx.n() {
        return Err(Error::InvalidChain(format!(
            "expected {} reflections, got {}",
            ctx.n(),
            ts.len()
        )));
    }
    let mut elements = vec![SignedPermutation::identity(ctx.n())];
    for (i, t) in ts.iter().enumerate() {
        let next = elements.last().unwrap().times(t);
        if next.abs_length() != i + 1 {
            return Err(Error::InvalidChain(format!(
                "rank does not increase at step {}",
                i + 1
            )));
        }
        if !ctx.in_poset(&next) {
            return Err(Error::InvalidChain(format!(
                "running product leaves the interval at step {}",
                i + 1
            )));
        }
        elements.push(next);
    }
    if elements.last().unwrap() != ctx.gamma() {
        return Err(Error::InvalidChain("product is not the top element".into()));
    }
    Ok(MaximalChainB::from_trusted(elements))
}

/// Depth-first stream of the saturated chains from the identity to a fixed
/// top element, in lexicographic order of the reflection sequences.
pub struct SaturatedChains {
    top: SignedPermutation,
    target_len: usize,
    stack: Vec<(SignedPermutation, usize)>,
    covers: HashMap<SignedPermutation, Rc<Vec<SignedPermutation>>>,
}

impl SaturatedChains {
    fn new(top: SignedPermutation) -> Self {
        let target_len = top.abs_length();
        let id = SignedPermutation::identity(top.n());
        SaturatedChains {
            top,
            target_len,
            stack: vec![(id, 0)],
            covers: HashMap::new(),
        }
    }

    fn covers_cached(&mut self, lo: &SignedPermutation) -> Rc<Vec<SignedPermutation>> {
        if let Some(v) = self.covers.get(lo) {
            return Rc::clone(v);
        }
        let mut ups = Vec::new();
        for t in b_transpositions(lo.n()) {
            let hi = lo.times(&t);
            if hi.abs_length() == lo.abs_length() + 1 && hi.abs_leq(&self.top) {
                ups.push(hi);
            }
        }
        let rc = Rc::new(ups);
        self.covers.insert(lo.clone(), Rc::clone(&rc));
        rc
    }
}

impl Iterator for SaturatedChains {
    type Item = MaximalChainB;

    fn next(&mut self) -> Option<MaximalChainB> {
        loop {
            let (elem, idx) = self.stack.last()?.clone();
            if self.stack.len() == self.target_len + 1 {
                let chain =
                    MaximalChainB::from_trusted(self.stack.iter().map(|(e, _)| e.clone()).collect());
                self.stack.pop();
                return Some(chain);
            }
            let ups = self.covers_cached(&elem);
            if idx < ups.len() {
                self.stack.last_mut().unwrap().1 += 1;
                self.stack.push((ups[idx].clone(), 0));
            } else {
                self.stack.pop();
            }
        }
    }
}

/// Saturated chains of [identity, top] for an arbitrary top element.
pub fn saturated_chains_to(top: &SignedPermutation, guard: usize) -> Result<SaturatedChains> {
    if top.n() > guard {
        return Err(Error::GuardExceeded {
            what: "saturated chain enumeration",
            param: "n",
            limit: guard,
            requested: top.n(),
        });
    }
    Ok(SaturatedChains::new(top.clone()))
}

fn count_paths(s: &SignedPermutation, memo: &mut HashMap<SignedPermutation, BigUint>) -> BigUint {
    if s.is_identity() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(s) {
        return v.clone();
    }
    let mut sum = BigUint::zero();
    for t in b_transpositions(s.n()) {
        let lo = s.times(&t);
        if lo.abs_length() + 1 == s.abs_length() {
            sum += count_paths(&lo, memo);
        }
    }
    memo.insert(s.clone(), sum.clone());
    sum
}

/// Number of saturated chains of [identity, top].
pub fn saturated_chain_count_to(top: &SignedPermutation) -> BigUint {
    count_paths(top, &mut HashMap::new())
}

/// Maximal chain count of the full type B noncrossing partition lattice
/// NC^B(n) = [identity, [1..n]].
pub fn nc_b_chain_count(n: usize) -> Result<BigUint> {
    nc_b_chain_count_with_guard(n, DEFAULT_CHAIN_GUARD)
}

pub fn nc_b_chain_count_with_guard(n: usize, guard: usize) -> Result<BigUint> {
    if n > guard {
        return Err(Error::GuardExceeded {
            what: "full lattice chain counting",
            param: "n",
            limit: guard,
            requested: n,
        });
    }
    Ok(saturated_chain_count_to(&full_zero_cycle(n)?))
}

pub fn validate_profile(profile: &[usize], n: usize) -> Result<()> {
    if profile.is_empty() {
        return Err(Error::InvalidProfile("profile must be nonempty".into()));
    }
    if profile.iter().any(|&r| r > n) {
        return Err(Error::InvalidProfile(format!(
            "ranks must lie in 0..={n}, got {profile:?}"
        )));
    }
    if profile.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidProfile(format!(
            "ranks must be weakly increasing, got {profile:?}"
        )));
    }
    Ok(())
}

/// Interleaves a maximal chain of [identity, [1..p]] with one of
/// [identity, [p+1..p+q]] (both inside B_{p+q}): the reflections of the
/// first chain land on `positions` (a p-subset of 1..=p+q, sorted), those of
/// the second on the complement. Every disconnected maximal chain arises
/// exactly once this way.
pub fn shuffle_chains(
    outer: &MaximalChainB,
    inner: &MaximalChainB,
    positions: &[usize],
    ctx: &PosetContext,
) -> Result<MaximalChainB> {
    let (p, n) = (ctx.p(), ctx.n());
    let outer_top = crate::signed::SignedPermutation::from_b_cycles(
        n,
        &[crate::signed::BCycle::zero((1..=p as i64).collect())?],
    )?;
    let inner_top = crate::signed::SignedPermutation::from_b_cycles(
        n,
        &[crate::signed::BCycle::zero((p as i64 + 1..=n as i64).collect())?],
    )?;
    validate_chain_to(outer, &outer_top, "outer")?;
    validate_chain_to(inner, &inner_top, "inner")?;
    let position_set: BTreeSet<usize> = positions.iter().copied().collect();
    if position_set.len() != p || positions.len() != p {
        return Err(Error::InvalidChain(format!(
            "positions must be {p} distinct slots"
        )));
    }
    if position_set.iter().any(|&s| s == 0 || s > n) {
        return Err(Error::InvalidChain(format!("positions must lie in 1..={n}")));
    }
    let outer_ts = outer.transpositions();
    let inner_ts = inner.transpositions();
    let (mut oi, mut ii) = (0, 0);
    let mut merged = Vec::with_capacity(n);
    for slot in 1..=n {
        if position_set.contains(&slot) {
            merged.push(outer_ts[oi]);
            oi += 1;
        } else {
            merged.push(inner_ts[ii]);
            ii += 1;
        }
    }
    chain_from_transpositions(&merged, ctx)
}

fn validate_chain_to(chain: &MaximalChainB, top: &SignedPermutation, which: &str) -> Result<()> {
    let elements = chain.elements();
    if elements.len() != top.abs_length() + 1 {
        return Err(Error::InvalidChain(format!(
            "{which} chain has wrong length for its top"
        )));
    }
    if !elements[0].is_identity() || elements.last().unwrap() != top {
        return Err(Error::InvalidChain(format!(
            "{which} chain must run from the identity to {top}"
        )));
    }
    for (i, w) in elements.windows(2).enumerate() {
        let quot = w[0].inverse().compose(&w[1])?;
        if quot.abs_length() != 1 || w[1].abs_length() != w[0].abs_length() + 1 {
            return Err(Error::InvalidChain(format!(
                "{which} chain step {} is not a cover",
                i + 1
            )));
        }
    }
    Ok(())
}
