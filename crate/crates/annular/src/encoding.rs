//! Parenthesization encodings of connected annular noncrossing permutations
//! and the tuple-space counting that goes with them.
//!
//! A connected multichain of rank profile (r_1 ≤ … ≤ r_m) corresponds to a
//! tuple (c, d; L^E, R_1^E..R_m^E; L^I, R_1^I..R_m^I) of subsets of the two
//! blocks with |L^E| = Σ|R_i^E| + c and |L^I| = Σ|R_i^I| − c, where the
//! label d ranges over [c] on the marked type A side and over [2c] on the
//! type B side. The constructive direction is implemented for single
//! permutations (m = 1); longer profiles are handled at the cardinality
//! level by `count_tuples` and `verify_two_to_one_multichain`.

use crate::error::{Error, Result};
use crate::formulas::{binomial, BigCount};
use crate::marked::MarkedPoset;
use crate::perm::Permutation;
use crate::poset_b::PosetContext;
use num::{BigUint, One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    TypeA,
    TypeB,
}

impl Flavor {
    pub fn as_str(&self) -> &'static str {
        match self {
            Flavor::TypeA => "type-a",
            Flavor::TypeB => "type-b",
        }
    }

    /// How many labels d a tuple with c unmatched parentheses admits.
    fn d_range(&self, c: usize) -> usize {
        match self {
            Flavor::TypeA => c,
            Flavor::TypeB => 2 * c,
        }
    }
}

/// The tuple (c, d; L^E, R_i^E; L^I, R_i^I) encoding a connected multichain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainEncoding {
    pub p: usize,
    pub q: usize,
    pub flavor: Flavor,
    pub c: usize,
    pub d: usize,
    pub le: BTreeSet<usize>,
    pub res: Vec<BTreeSet<usize>>,
    pub li: BTreeSet<usize>,
    pub ris: Vec<BTreeSet<usize>>,
}

impl ChainEncoding {
    pub fn m(&self) -> usize {
        self.res.len()
    }

    /// Checks every defining condition of the tuple space.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(msg));
        if self.c == 0 {
            return fail("c must be positive".into());
        }
        if self.d == 0 || self.d > self.flavor.d_range(self.c) {
            return fail(format!("d = {} out of range for c = {}", self.d, self.c));
        }
        if self.res.len() != self.ris.len() || self.res.is_empty() {
            return fail("R sequences must have equal positive length".into());
        }
        let e_ok = |s: &BTreeSet<usize>| s.iter().all(|&x| 1 <= x && x <= self.p);
        let i_ok = |s: &BTreeSet<usize>| s.iter().all(|&x| self.p < x && x <= self.p + self.q);
        if !e_ok(&self.le) || !self.res.iter().all(e_ok) {
            return fail("E-side sets must lie in the first block".into());
        }
        if !i_ok(&self.li) || !self.ris.iter().all(i_ok) {
            return fail("I-side sets must lie in the second block".into());
        }
        let re_total: usize = self.res.iter().map(BTreeSet::len).sum();
        let ri_total: usize = self.ris.iter().map(BTreeSet::len).sum();
        if self.le.len() != re_total + self.c {
            return fail(format!(
                "|LE| = {} but sum |RE_i| + c = {}",
                self.le.len(),
                re_total + self.c
            ));
        }
        if self.li.len() + self.c != ri_total {
            return fail(format!(
                "|LI| = {} but sum |RI_i| - c = {}",
                self.li.len(),
                ri_total as isize - self.c as isize
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let set = |s: &BTreeSet<usize>| Value::from(s.iter().copied().collect::<Vec<_>>());
        json!({
            "p": self.p,
            "q": self.q,
            "flavor": self.flavor.as_str(),
            "c": self.c,
            "d": self.d,
            "LE": set(&self.le),
            "REs": self.res.iter().map(&set).collect::<Vec<_>>(),
            "LI": set(&self.li),
            "RIs": self.ris.iter().map(&set).collect::<Vec<_>>(),
        })
    }
}

/// Splits a connected cycle into its unique rotation (g_1..g_u, h_1..h_v)
/// with all first-block entries before all second-block entries.
fn annular_rotation(cycle: &[usize], p: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let len = cycle.len();
    let is_e = |x: usize| x <= p;
    let mut starts = Vec::new();
    for i in 0..len {
        let prev = cycle[(i + len - 1) % len];
        if is_e(cycle[i]) && !is_e(prev) {
            starts.push(i);
        }
    }
    if starts.len() != 1 {
        return Err(Error::NotAnnular(format!(
            "cycle {cycle:?} does not split into one outer and one inner arc"
        )));
    }
    let rotated: Vec<usize> = (0..len).map(|i| cycle[(starts[0] + i) % len]).collect();
    let u = rotated.iter().take_while(|&&x| is_e(x)).count();
    let (gs, hs) = rotated.split_at(u);
    if hs.iter().any(|&x| is_e(x)) {
        return Err(Error::NotAnnular(format!(
            "cycle {cycle:?} does not split into one outer and one inner arc"
        )));
    }
    Ok((gs.to_vec(), hs.to_vec()))
}

/// Encodes a single connected annular noncrossing permutation (a connected
/// multichain of length m = 1).
///
/// Step 1 extracts a and b from the connected cycle with the largest
/// element. Step 2 sends, for every cycle, its first element (in the order
/// rotated to start at a, respectively to end at b) to the left set and its
/// last to the right set, connected cycles contributing their first outer
/// entry and last inner entry. Step 3 parenthesizes the rotated sequence,
/// deletes the inner integers together with their parentheses, and reads c
/// as the surplus of left over right parentheses and d as the position of a
/// among the unmatched ones.
pub fn encode_connected_perm(pi: &Permutation, p: usize, q: usize) -> Result<ChainEncoding> {
    let n = p + q;
    if pi.n() != n {
        return Err(Error::SizeMismatch {
            left: pi.n(),
            right: n,
        });
    }
    if !pi.is_connected(p) {
        return Err(Error::Domain(format!(
            "{pi} is disconnected; only connected permutations are encoded"
        )));
    }
    let cycles = pi.cycles();
    // Step 1: a and b from the connected cycle holding the largest element.
    let c_max = cycles
        .iter()
        .filter(|c| c.iter().any(|&x| x <= p) && c.iter().any(|&x| x > p))
        .max_by_key(|c| c.iter().max().copied())
        .expect("connected permutations own a connected cycle");
    let (gs, hs) = annular_rotation(c_max, p)?;
    let a = gs[0];
    let b = *hs.last().unwrap();

    // Positions in the rotated block orders.
    let e_order: Vec<usize> = (a..=p).chain(1..a).collect();
    let i_order: Vec<usize> = (b + 1..=n).chain(p + 1..=b).collect();
    let mut pos = vec![0usize; n + 1];
    for (i, &x) in e_order.iter().chain(i_order.iter()).enumerate() {
        pos[x] = i;
    }

    // Step 2 over every cycle, fixed points included.
    let mut le = BTreeSet::new();
    let mut re = BTreeSet::new();
    let mut li = BTreeSet::new();
    let mut ri = BTreeSet::new();
    for cycle in &cycles {
        let outer = cycle.iter().any(|&x| x <= p);
        let inner = cycle.iter().any(|&x| x > p);
        if outer && inner {
            let (gs, hs) = annular_rotation(cycle, p)?;
            le.insert(gs[0]);
            ri.insert(*hs.last().unwrap());
        } else {
            let first = *cycle.iter().min_by_key(|&&x| pos[x]).unwrap();
            let last = *cycle.iter().max_by_key(|&&x| pos[x]).unwrap();
            if outer {
                le.insert(first);
                re.insert(last);
            } else {
                li.insert(first);
                ri.insert(last);
            }
        }
    }

    // Step 3: parenthesize, delete the inner integers with their
    // parentheses, and match what is left.
    let mut lefts = 0usize;
    let mut rights = 0usize;
    let mut stack: Vec<usize> = Vec::new();
    for &x in e_order.iter().chain(i_order.iter()) {
        let keep = x <= p;
        if le.contains(&x) || li.contains(&x) {
            if keep {
                lefts += 1;
                stack.push(x);
            }
        }
        if re.contains(&x) || ri.contains(&x) {
            if keep {
                rights += 1;
                if stack.pop().is_none() {
                    return Err(Error::NotAnnular(format!(
                        "unmatched right parenthesis while encoding {pi}"
                    )));
                }
            }
        }
    }
    let c = lefts - rights;
    debug_assert_eq!(stack.len(), c);
    let mut js = stack;
    js.sort_unstable();
    let d = match js.iter().position(|&j| j == a) {
        Some(i) => i + 1,
        None => {
            return Err(Error::NotAnnular(format!(
                "the parenthesis of a = {a} is matched while encoding {pi}"
            )))
        }
    };

    let enc = ChainEncoding {
        p,
        q,
        flavor: Flavor::TypeA,
        c,
        d,
        le,
        res: vec![re],
        li,
        ris: vec![ri],
    };
    enc.validate()?;
    Ok(enc)
}

/// Encoding of every connected permutation appearing in the marked poset,
/// keyed by encoding. Errs if two permutations ever collide, which would
/// falsify injectivity.
pub fn encoding_table(p: usize, q: usize) -> Result<BTreeMap<ChainEncoding, Permutation>> {
    let poset = MarkedPoset::new(p, q)?;
    let mut table = BTreeMap::new();
    for e in poset.elements() {
        if e.mark() != 0 || !e.perm().is_connected(p) {
            continue;
        }
        let enc = encode_connected_perm(e.perm(), p, q)?;
        if let Some(prev) = table.insert(enc, e.perm().clone()) {
            return Err(Error::Domain(format!(
                "encoding collision between {prev} and {}",
                e.perm()
            )));
        }
    }
    Ok(table)
}

/// Inverts the m = 1 encoding by exhaustive table lookup.
pub fn decode_connected_perm(
    enc: &ChainEncoding,
    p: usize,
    q: usize,
) -> Result<Option<Permutation>> {
    Ok(encoding_table(p, q)?.get(enc).cloned())
}

fn profile_sizes(p: usize, q: usize, m: usize, profile: &[usize]) -> Result<Vec<usize>> {
    let n = p + q;
    if m == 0 || profile.len() != m {
        return Err(Error::InvalidProfile(format!(
            "profile length {} does not match m = {m}",
            profile.len()
        )));
    }
    if profile.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidProfile(
            "rank profile must be weakly increasing".into(),
        ));
    }
    if profile.iter().any(|&r| r > n) {
        return Err(Error::InvalidProfile(format!(
            "ranks must lie in 0..={n}"
        )));
    }
    let mut sizes: Vec<usize> = profile.windows(2).map(|w| w[1] - w[0]).collect();
    sizes.push(n - profile[m - 1]);
    Ok(sizes)
}

/// Counts the encodings compatible with a rank profile: the i-th right sets
/// jointly carry s_i = r_{i+1} − r_i elements (the last against p+q), the
/// left sets are then free subject to the two size conditions, and each c
/// contributes c (type A) or 2c (type B) choices of d.
pub fn count_tuples(
    p: usize,
    q: usize,
    m: usize,
    profile: &[usize],
    flavor: Flavor,
) -> Result<BigCount> {
    if p == 0 || q == 0 {
        return Err(Error::EmptyBlock { p, q });
    }
    let sizes = profile_sizes(p, q, m, profile)?;
    let total: usize = sizes.iter().sum();
    // A[e] = number of ways to pick all R_i with e outer elements in total.
    let mut poly = vec![BigUint::one()];
    for &s in &sizes {
        let factor: Vec<BigUint> = (0..=s.min(p))
            .map(|e| binomial(p, e) * binomial(q, s - e))
            .collect();
        let mut next = vec![BigUint::zero(); poly.len() + factor.len() - 1];
        for (i, a) in poly.iter().enumerate() {
            for (j, b) in factor.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        poly = next;
    }
    let mut count = BigUint::zero();
    for c in 1..=p {
        let mult = BigUint::from(flavor.d_range(c));
        for (e, a) in poly.iter().enumerate() {
            if e + c > total {
                break;
            }
            count += &mult * a * binomial(p, e + c) * binomial(q, total - e - c);
        }
    }
    Ok(count)
}

/// Checks the two-to-one correspondence at the multichain level: connected
/// multichains of the type B poset with a given rank profile are exactly
/// twice as many as connected multichains of the marked type A poset with
/// the same profile.
pub fn verify_two_to_one_multichain(p: usize, q: usize, profile: &[usize]) -> Result<bool> {
    profile_sizes(p, q, profile.len(), profile)?;
    let ctx = PosetContext::new(p, q)?;
    let b_connected = ctx
        .multichains(profile)?
        .iter()
        .filter(|mc| ctx.multichain_is_connected(mc))
        .count();
    let poset = MarkedPoset::new(p, q)?;
    let marked_connected = poset
        .multichains(profile)?
        .iter()
        .filter(|mc| poset.multichain_is_connected(mc))
        .count();
    Ok(b_connected == 2 * marked_connected)
}

/// Connected single-element multichain counts per rank, enumerated from the
/// posets themselves; the independent side of the cardinality checks.
pub fn connected_rank_census_marked(p: usize, q: usize) -> Result<Vec<usize>> {
    let poset = MarkedPoset::new(p, q)?;
    let mut census = vec![0usize; p + q + 1];
    for e in poset.elements() {
        if e.mark() == 0 && e.perm().is_connected(p) {
            census[e.rank()] += 1;
        }
    }
    Ok(census)
}

pub fn connected_rank_census_b(p: usize, q: usize) -> Result<Vec<usize>> {
    let ctx = PosetContext::new(p, q)?;
    let mut census = vec![0usize; p + q + 1];
    for s in ctx.elements()? {
        if s.connectivity(p) > 0 {
            census[ctx.rank(&s)?] += 1;
        }
    }
    Ok(census)
}

/// The maximal-chain rank profile 0, 1, …, p+q.
pub fn maximal_profile(p: usize, q: usize) -> Vec<usize> {
    (0..=p + q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas;
    use crate::marked::{MarkedChain, MarkedElement};

    #[test]
    fn smallest_example_encodes_as_specified() {
        let pi = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        let enc = encode_connected_perm(&pi, 1, 1).unwrap();
        assert_eq!(enc.c, 1);
        assert_eq!(enc.d, 1);
        assert_eq!(enc.le, BTreeSet::from([1]));
        assert_eq!(enc.res, vec![BTreeSet::new()]);
        assert_eq!(enc.li, BTreeSet::new());
        assert_eq!(enc.ris, vec![BTreeSet::from([2])]);
        assert_eq!(enc.flavor, Flavor::TypeA);
        enc.validate().unwrap();
        let json = enc.to_json();
        assert_eq!(json["LE"], json!([1]));
        assert_eq!(json["RIs"], json!([[2]]));
        assert_eq!(json["flavor"], json!("type-a"));
    }

    #[test]
    fn encoding_rejects_disconnected_and_checks_sizes() {
        let id = Permutation::identity(2);
        assert!(encode_connected_perm(&id, 1, 1).is_err());
        let wrong = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert!(encode_connected_perm(&wrong, 1, 1).is_err());
        // A hand-made tuple violating the balance conditions.
        let bad = ChainEncoding {
            p: 2,
            q: 1,
            flavor: Flavor::TypeA,
            c: 1,
            d: 1,
            le: BTreeSet::from([1]),
            res: vec![BTreeSet::from([2])],
            li: BTreeSet::new(),
            ris: vec![BTreeSet::from([3])],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn encoding_is_injective_and_invariant_satisfying() {
        for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (3, 2), (2, 3), (3, 3)] {
            let table = encoding_table(p, q).unwrap();
            let poset = MarkedPoset::new(p, q).unwrap();
            let connected: Vec<&MarkedElement> = poset
                .elements()
                .iter()
                .filter(|e| e.mark() == 0 && e.perm().is_connected(p))
                .collect();
            // Building the table already errs on collisions; sizes agreeing
            // means the encoding is injective on the whole domain.
            assert_eq!(table.len(), connected.len(), "({p},{q})");
            for (enc, pi) in &table {
                enc.validate().unwrap();
                assert_eq!(enc.c, pi.cycles().iter().filter(|c| {
                    c.iter().any(|&x| x <= p) && c.iter().any(|&x| x > p)
                }).count(), "c counts the connected cycles of {pi}");
                assert_eq!(
                    decode_connected_perm(enc, p, q).unwrap().as_ref(),
                    Some(pi)
                );
            }
        }
    }

    #[test]
    fn rank_census_matches_tuple_counts_both_flavors() {
        for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
            let marked = connected_rank_census_marked(p, q).unwrap();
            let b = connected_rank_census_b(p, q).unwrap();
            for r in 0..=p + q {
                assert_eq!(
                    count_tuples(p, q, 1, &[r], Flavor::TypeA).unwrap(),
                    BigUint::from(marked[r]),
                    "type A ({p},{q}) rank {r}"
                );
                assert_eq!(
                    count_tuples(p, q, 1, &[r], Flavor::TypeB).unwrap(),
                    BigUint::from(b[r]),
                    "type B ({p},{q}) rank {r}"
                );
            }
        }
        // Frozen spot values at (2,1), rank 1.
        assert_eq!(
            count_tuples(2, 1, 1, &[1], Flavor::TypeA).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            count_tuples(2, 1, 1, &[1], Flavor::TypeB).unwrap(),
            BigUint::from(4u32)
        );
    }

    #[test]
    fn maximal_profile_reproduces_chain_count_sums() {
        for p in 1..=4 {
            for q in 1..=4 {
                let profile = maximal_profile(p, q);
                let m = profile.len();
                assert_eq!(
                    count_tuples(p, q, m, &profile, Flavor::TypeA).unwrap(),
                    formulas::kk_lhs(p, q),
                    "type A ({p},{q})"
                );
                assert_eq!(
                    count_tuples(p, q, m, &profile, Flavor::TypeB).unwrap(),
                    formulas::cmc_sum(p, q),
                    "type B ({p},{q})"
                );
            }
        }
        // Pure arithmetic out to p+q = 8.
        assert_eq!(
            count_tuples(4, 4, 9, &maximal_profile(4, 4), Flavor::TypeB).unwrap(),
            formulas::cmc_sum(4, 4)
        );
        assert_eq!(
            count_tuples(5, 3, 9, &maximal_profile(5, 3), Flavor::TypeA).unwrap(),
            formulas::kk_lhs(5, 3)
        );
        // And against actually enumerated chains at (2,1): 8 and 16.
        assert_eq!(
            count_tuples(2, 1, 4, &maximal_profile(2, 1), Flavor::TypeA).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            count_tuples(2, 1, 4, &maximal_profile(2, 1), Flavor::TypeB).unwrap(),
            BigUint::from(16u32)
        );
        let marked_chains = MarkedPoset::new(2, 1).unwrap().maximal_chains().count();
        assert_eq!(marked_chains, 8);
        let b_connected = PosetContext::new(2, 1)
            .unwrap()
            .chain_counts()
            .unwrap()
            .connected;
        assert_eq!(b_connected, BigUint::from(16u32));
    }

    #[test]
    fn two_to_one_multichain_correspondence() {
        // Maximal profiles.
        assert!(verify_two_to_one_multichain(1, 1, &maximal_profile(1, 1)).unwrap());
        assert!(verify_two_to_one_multichain(2, 1, &maximal_profile(2, 1)).unwrap());
        // m = 1, every rank, (2,1).
        for r in 0..=3 {
            assert!(verify_two_to_one_multichain(2, 1, &[r]).unwrap(), "rank {r}");
        }
        // m = 2, (1,1), all weakly increasing profiles.
        for r1 in 0..=2 {
            for r2 in r1..=2 {
                assert!(
                    verify_two_to_one_multichain(1, 1, &[r1, r2]).unwrap(),
                    "profile [{r1},{r2}]"
                );
            }
        }
        // m = 2 over (2,1) as well, exercising mixed profiles.
        for r1 in 0..=3 {
            for r2 in r1..=3 {
                assert!(
                    verify_two_to_one_multichain(2, 1, &[r1, r2]).unwrap(),
                    "profile [{r1},{r2}]"
                );
            }
        }
    }

    #[test]
    fn malformed_profiles_are_rejected() {
        assert!(count_tuples(2, 1, 2, &[2, 1], Flavor::TypeA).is_err());
        assert!(count_tuples(2, 1, 1, &[4], Flavor::TypeA).is_err());
        assert!(count_tuples(2, 1, 2, &[1], Flavor::TypeA).is_err());
        assert!(count_tuples(2, 1, 0, &[], Flavor::TypeA).is_err());
        assert!(count_tuples(0, 1, 1, &[0], Flavor::TypeA).is_err());
        assert!(verify_two_to_one_multichain(2, 1, &[3, 1]).is_err());
    }

    #[test]
    fn encoding_agrees_with_marked_chain_ranks() {
        // The rank formula: a maximal chain's element at rank r carries
        // right sets of joint size matching the telescoped profile.
        let poset = MarkedPoset::new(2, 1).unwrap();
        for chain in poset.maximal_chains() {
            let chain: MarkedChain = chain;
            for (r, e) in chain.elements().iter().enumerate() {
                assert_eq!(e.rank(), r);
            }
        }
    }
}
