//! Minimal transitive reflection factorizations and the maps between their
//! type A and type B incarnations.
//!
//! Type A: tuples of transpositions of S_n of length n + (#cycles of the
//! target) − 2 whose product is the target and whose supports connect all of
//! {1..n}. Enumerated by pruned DFS; counted exactly by a walk-counting
//! dynamic program over small symmetric groups combined with an
//! inclusion–exclusion that inverts "every factorization splits into
//! transitive factorizations of complementary cycle subsets".
//!
//! Type B: tuples of reflections of B_{p+q} of length p+q with product
//! γ_{p,q} = [1..p][p+1..p+q] and unsigned shadows connecting {1..p+q}
//! (the set F^(B)), and the all-positive variant with product
//! β_{p,q} = ((1..p))((p+1..p+q)) (the set F^+). The sign-forgetting map is
//! exactly two-to-one from F^(B) onto F^+ — the two preimages differ by
//! toggling every connected factor — and dropping signs entirely is a
//! bijection from F^+ onto the type A factorizations of α_{p,q}.

use crate::error::{Error, Result};
use crate::perm::{all_permutations, transpositions, Partition, Permutation, Transposition};
use crate::poset_b::{MaximalChainB, PosetContext};
use crate::signed::{beta_pq, gamma_pq, BTransposition, SignedPermutation};
use num::BigUint;
use std::collections::HashMap;

pub const MTF_ENUM_GUARD: usize = 8;
pub const MTF_DP_GUARD: usize = 7;
pub const FB_ENUM_GUARD: usize = 5;
pub const SIGN_VARIANT_GUARD: usize = 16;

/// Length every minimal transitive factorization of `target` has:
/// n + #cycles − 2.
pub fn mtf_length(target: &Permutation) -> usize {
    target.n() + target.cycle_count() - 2
}

/// Product of a transposition tuple, right factor acting first.
pub fn tuple_product_a(ts: &[Transposition], n: usize) -> Result<Permutation> {
    let mut prod = Permutation::identity(n);
    for t in ts {
        prod = prod.compose(&t.to_permutation(n)?)?;
    }
    Ok(prod)
}

/// Product of a reflection tuple, right factor acting first.
pub fn tuple_product_b(taus: &[BTransposition], n: usize) -> Result<SignedPermutation> {
    let mut prod = SignedPermutation::identity(n);
    for t in taus {
        t.to_signed(n)?; // size check
        prod = prod.times(t);
    }
    Ok(prod)
}

fn supports_connect(supports: &[(usize, usize)], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut comps = n;
    for &(a, b) in supports {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

/// Is `ts` a minimal transitive factorization of `target`?
pub fn is_mtf(ts: &[Transposition], target: &Permutation) -> bool {
    let n = target.n();
    if ts.len() != mtf_length(target) {
        return false;
    }
    match tuple_product_a(ts, n) {
        Ok(prod) if prod == *target => {}
        _ => return false,
    }
    supports_connect(
        &ts.iter().map(|t| (t.i(), t.j())).collect::<Vec<_>>(),
        n,
    )
}

struct MtfSearch<'v> {
    len: usize,
    factors: Vec<Transposition>,
    target: Permutation,
    chosen: Vec<Transposition>,
    prod: Vec<usize>,
    inv: Vec<usize>,
    visit: &'v mut dyn FnMut(&[Transposition]) -> bool,
    stopped: bool,
}

impl MtfSearch<'_> {
    fn distance_to_target(&self) -> usize {
        // Cycle count of prod⁻¹ · target.
        let n = self.target.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.inv[self.target.apply(x)];
            }
        }
        n - cycles
    }

    fn components(&self) -> usize {
        let n = self.target.n();
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = n;
        for t in &self.chosen {
            let (ra, rb) = (find(&mut parent, t.i()), find(&mut parent, t.j()));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    fn run(&mut self) {
        if self.stopped {
            return;
        }
        let remaining = self.len - self.chosen.len();
        let dist = self.distance_to_target();
        if dist > remaining || (remaining - dist) % 2 != 0 {
            return;
        }
        if self.components() > remaining + 1 {
            return;
        }
        if remaining == 0 {
            if !(self.visit)(&self.chosen) {
                self.stopped = true;
            }
            return;
        }
        for idx in 0..self.factors.len() {
            let t = self.factors[idx];
            let (a, b) = (t.i(), t.j());
            self.chosen.push(t);
            self.prod.swap(a, b);
            let (pa, pb) = (self.prod[b], self.prod[a]);
            self.inv.swap(pa, pb);
            self.run();
            self.inv.swap(pa, pb);
            self.prod.swap(a, b);
            self.chosen.pop();
            if self.stopped {
                return;
            }
        }
    }
}

/// Runs `visit` on every minimal transitive factorization of `target`, in
/// lexicographic order of the factor sequences. `visit` returns false to
/// stop early.
pub fn for_each_mtf(
    target: &Permutation,
    visit: &mut dyn FnMut(&[Transposition]) -> bool,
) -> Result<()> {
    let n = target.n();
    let len = mtf_length(target);
    if len > MTF_ENUM_GUARD {
        return Err(Error::GuardExceeded {
            what: "factorization enumeration",
            param: "n + cycles - 2",
            limit: MTF_ENUM_GUARD,
            requested: len,
        });
    }
    let mut search = MtfSearch {
        len,
        factors: transpositions(n),
        target: target.clone(),
        chosen: Vec::with_capacity(len),
        prod: (0..=n).collect(),
        inv: (0..=n).collect(),
        visit,
        stopped: false,
    };
    search.run();
    Ok(())
}

pub fn enumerate_mtf(target: &Permutation) -> Result<Vec<Vec<Transposition>>> {
    let mut out = Vec::new();
    for_each_mtf(target, &mut |ts| {
        out.push(ts.to_vec());
        true
    })?;
    Ok(out)
}

pub fn count_mtf_dfs(target: &Permutation) -> Result<BigUint> {
    let mut count: u64 = 0;
    for_each_mtf(target, &mut |_| {
        count += 1;
        true
    })?;
    Ok(BigUint::from(count))
}

/// The factorization set of the canonical permutation of cycle type λ.
pub fn enumerate_f_lambda(lambda: &Partition) -> Result<Vec<Vec<Transposition>>> {
    enumerate_mtf(&lambda.canonical_permutation())
}

pub fn count_f_lambda_dfs(lambda: &Partition) -> Result<BigUint> {
    count_mtf_dfs(&lambda.canonical_permutation())
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Exact factorization counter driven by Cayley-graph walk counting.
///
/// `all(type, N)` — sequences of N transpositions in S_k multiplying to a
/// fixed permutation of the given cycle type, no transitivity demanded — is
/// read off a dynamic program over all of S_k. Transitive counts follow by
/// peeling off the transitive component of the point 1:
/// all(U, N) = Σ_{S ∋ c₁} Σ_j C(N,j) · trans(S, j) · all(U∖S, N−j),
/// solved for trans(U, N). Both memoize on the cycle type, which determines
/// the count by relabeling symmetry.
pub struct MtfCounter {
    walk: HashMap<usize, HashMap<Vec<usize>, Vec<u128>>>,
    trans_memo: HashMap<(Vec<usize>, usize), u128>,
    max_len: usize,
}

impl Default for MtfCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl MtfCounter {
    pub fn new() -> Self {
        MtfCounter {
            walk: HashMap::new(),
            trans_memo: HashMap::new(),
            max_len: 2 * MTF_DP_GUARD - 2,
        }
    }

    pub fn count(&mut self, lambda: &Partition) -> Result<BigUint> {
        let n = lambda.n();
        if n > MTF_DP_GUARD {
            return Err(Error::GuardExceeded {
                what: "factorization counting",
                param: "n",
                limit: MTF_DP_GUARD,
                requested: n,
            });
        }
        let len = n + lambda.num_parts() - 2;
        let mut parts = lambda.parts().to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BigUint::from(self.trans(&parts, len)))
    }

    fn ensure_walk_table(&mut self, k: usize) {
        if self.walk.contains_key(&k) {
            return;
        }
        let perms = all_permutations(k);
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images(), i))
            .collect();
        let ts: Vec<Permutation> = transpositions(k)
            .iter()
            .map(|t| t.to_permutation(k).unwrap())
            .collect();
        let neighbors: Vec<Vec<usize>> = perms
            .iter()
            .map(|g| {
                ts.iter()
                    .map(|t| index[g.compose(t).unwrap().images()])
                    .collect()
            })
            .collect();
        let mut dp = vec![0u128; perms.len()];
        dp[index[Permutation::identity(k).images()]] = 1;
        // One representative index per cycle type.
        let reps: Vec<(Vec<usize>, usize)> = crate::perm::partitions_of(k)
            .into_iter()
            .map(|p| {
                let rep = p.canonical_permutation();
                (p.parts().to_vec(), index[rep.images()])
            })
            .collect();
        let mut table: HashMap<Vec<usize>, Vec<u128>> = reps
            .iter()
            .map(|(t, _)| (t.clone(), Vec::with_capacity(self.max_len + 1)))
            .collect();
        for step in 0..=self.max_len {
            for (t, rep) in &reps {
                table.get_mut(t).unwrap().push(dp[*rep]);
            }
            if step == self.max_len {
                break;
            }
            let mut next = vec![0u128; perms.len()];
            for (g, &v) in dp.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                for &h in &neighbors[g] {
                    next[h] += v;
                }
            }
            dp = next;
        }
        self.walk.insert(k, table);
    }

    fn all(&mut self, parts: &[usize], len: usize) -> u128 {
        let k: usize = parts.iter().sum();
        if k == 0 {
            return u128::from(len == 0);
        }
        self.ensure_walk_table(k);
        self.walk[&k][parts][len]
    }

    fn trans(&mut self, parts: &[usize], len: usize) -> u128 {
        debug_assert!(!parts.is_empty());
        let key = (parts.to_vec(), len);
        if let Some(&v) = self.trans_memo.get(&key) {
            return v;
        }
        let others = &parts[1..];
        let mut sum: u128 = 0;
        // Proper cycle subsets through the first cycle: any strict subset of
        // the remaining cycles joins it.
        for mask in 0..(1u32 << others.len()) {
            if mask == (1u32 << others.len()) - 1 && !others.is_empty() {
                continue; // the full set is the unknown being solved for
            }
            if others.is_empty() && mask == 0 {
                break; // a single cycle has no proper splits
            }
            let mut inside = vec![parts[0]];
            let mut outside = Vec::new();
            for (i, &part) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    inside.push(part);
                } else {
                    outside.push(part);
                }
            }
            inside.sort_unstable_by(|a, b| b.cmp(a));
            outside.sort_unstable_by(|a, b| b.cmp(a));
            for j in 0..=len {
                let t = self.trans(&inside, j);
                if t == 0 {
                    continue;
                }
                let a = self.all(&outside, len - j);
                if a == 0 {
                    continue;
                }
                sum += binom_u128(len, j) * t * a;
            }
        }
        let total = self.all(parts, len);
        let value = total - sum;
        self.trans_memo.insert(key, value);
        value
    }
}

/// One-shot transitive factorization count for cycle type λ.
pub fn count_f_lambda_dp(lambda: &Partition) -> Result<BigUint> {
    MtfCounter::new().count(lambda)
}

fn shadow_supports(taus: &[BTransposition]) -> Vec<(usize, usize)> {
    taus.iter()
        .filter_map(|t| t.shadow().map(|s| (s.i(), s.j())))
        .collect()
}

/// Is `taus` a minimal transitive factorization of γ_{p,q} in B_{p+q}?
pub fn is_fb(taus: &[BTransposition], p: usize, q: usize) -> Result<bool> {
    let gamma = gamma_pq(p, q)?;
    let n = p + q;
    if taus.len() != n {
        return Ok(false);
    }
    match tuple_product_b(taus, n) {
        Ok(prod) if prod == gamma => {}
        _ => return Ok(false),
    }
    Ok(supports_connect(&shadow_supports(taus), n))
}

/// Is `sigmas` a positive minimal transitive factorization of β_{p,q}?
pub fn is_fplus(sigmas: &[BTransposition], p: usize, q: usize) -> Result<bool> {
    let beta = beta_pq(p, q)?;
    let n = p + q;
    if sigmas.len() != n || !sigmas.iter().all(|s| s.is_positive()) {
        return Ok(false);
    }
    match tuple_product_b(sigmas, n) {
        Ok(prod) if prod == beta => {}
        _ => return Ok(false),
    }
    Ok(supports_connect(&shadow_supports(sigmas), n))
}

fn enumerate_factorizations_b(
    target: &SignedPermutation,
    len: usize,
    factors: &[BTransposition],
    transitive_filter: bool,
) -> Vec<Vec<BTransposition>> {
    let n = target.n();
    let mut out = Vec::new();
    let mut chosen: Vec<BTransposition> = Vec::with_capacity(len);
    let mut prods: Vec<SignedPermutation> = vec![SignedPermutation::identity(n)];
    fn rec(
        target: &SignedPermutation,
        factors: &[BTransposition],
        transitive_filter: bool,
        len: usize,
        chosen: &mut Vec<BTransposition>,
        prods: &mut Vec<SignedPermutation>,
        out: &mut Vec<Vec<BTransposition>>,
    ) {
        let cur = prods.last().unwrap().clone();
        let remaining = len - chosen.len();
        // Distance and parity prune: each reflection moves the absolute
        // length by exactly one.
        let dist = cur.inverse().compose(target).unwrap().abs_length();
        if dist > remaining || (remaining - dist) % 2 != 0 {
            return;
        }
        if remaining == 0 {
            if !transitive_filter || supports_connect(&shadow_supports(chosen), target.n()) {
                out.push(chosen.clone());
            }
            return;
        }
        for t in factors {
            chosen.push(*t);
            prods.push(cur.times(t));
            rec(target, factors, transitive_filter, len, chosen, prods, out);
            prods.pop();
            chosen.pop();
        }
    }
    rec(
        target,
        factors,
        transitive_filter,
        len,
        &mut chosen,
        &mut prods,
        &mut out,
    );
    out
}

/// Every element of F^(B)_{(p,q)}, in lexicographic reflection order.
pub fn enumerate_fb(p: usize, q: usize) -> Result<Vec<Vec<BTransposition>>> {
    guard_fb(p, q)?;
    let gamma = gamma_pq(p, q)?;
    Ok(enumerate_factorizations_b(
        &gamma,
        p + q,
        &crate::signed::b_transpositions(p + q),
        true,
    ))
}

/// Every element of F^+_{(p,q)}, in lexicographic reflection order. These
/// have length p+q even though β_{p,q} has absolute length p+q−2: two steps
/// beyond geodesic, which is where the annular structure lives.
pub fn enumerate_fplus(p: usize, q: usize) -> Result<Vec<Vec<BTransposition>>> {
    guard_fb(p, q)?;
    let beta = beta_pq(p, q)?;
    let positives: Vec<BTransposition> = crate::signed::b_transpositions(p + q)
        .into_iter()
        .filter(|t| t.is_positive())
        .collect();
    Ok(enumerate_factorizations_b(&beta, p + q, &positives, true))
}

fn guard_fb(p: usize, q: usize) -> Result<()> {
    if p + q > FB_ENUM_GUARD {
        return Err(Error::GuardExceeded {
            what: "type B factorization enumeration",
            param: "p+q",
            limit: FB_ENUM_GUARD,
            requested: p + q,
        });
    }
    Ok(())
}

/// Componentwise sign normalization ((i j)) or ((i -j)) ↦ ((i j)).
/// Zero reflections have no positive part among the reflections.
pub fn plus_tuple(taus: &[BTransposition]) -> Result<Vec<BTransposition>> {
    taus.iter()
        .map(|t| match *t {
            BTransposition::Zero(i) => Err(Error::Domain(format!(
                "[{i}] has no reflection as positive part"
            ))),
            BTransposition::Paired(i, j) => BTransposition::paired(i, j.abs()),
        })
        .collect()
}

/// Componentwise sign forgetting ((i j)) ↦ (i |j|).
pub fn abs_tuple(sigmas: &[BTransposition]) -> Result<Vec<Transposition>> {
    sigmas
        .iter()
        .map(|t| {
            t.shadow().ok_or_else(|| {
                Error::Domain("zero reflections have no unsigned shadow".into())
            })
        })
        .collect()
}

/// Re-signs type A transpositions positively; inverse of `abs_tuple` on
/// positive tuples.
pub fn resign_positive(ts: &[Transposition]) -> Vec<BTransposition> {
    ts.iter()
        .map(|t| BTransposition::paired(t.i() as i64, t.j() as i64).unwrap())
        .collect()
}

/// Toggles every connected factor (support meeting both blocks); the other
/// factors are kept. A fixed-point-free involution on F^(B) preserving the
/// positive part.
pub fn toggle_connected(
    taus: &[BTransposition],
    p: usize,
    _q: usize,
) -> Result<Vec<BTransposition>> {
    taus.iter()
        .map(|t| if t.is_connected(p) { t.toggled() } else { Ok(*t) })
        .collect()
}

/// Constructively lifts σ ∈ F^+_{(p,q)} to a member of F^(B)_{(p,q)} with
/// the same positive part.
///
/// Write γ = ε_{p+1} ε_1 σ_1 ⋯ σ_{p+q}. A zero reflection passes through a
/// paired factor by toggling it when their supports share a point
/// (ε_u t = bar(t) ε_u) and swaps endpoints when it meets the factor head-on
/// (ε_u t = ε_v bar(t) for support {u,v}). Transporting ε_u along a shortest
/// support path from 1 to p+1 therefore toggles, per path edge {u,v} taken
/// at factor ℓ: factor ℓ itself, and every earlier factor whose support
/// contains exactly one of u, v. The two leading zero reflections then
/// cancel, leaving a reflection tuple whose positive part is σ.
pub fn lift_positive(
    sigmas: &[BTransposition],
    p: usize,
    q: usize,
) -> Result<Vec<BTransposition>> {
    if !is_fplus(sigmas, p, q)? {
        return Err(Error::NotAFactorization(
            "lift input must be a positive minimal transitive factorization".into(),
        ));
    }
    let n = p + q;
    let supports: Vec<(usize, usize)> = shadow_supports(sigmas);
    // Shortest support path from 1 to p+1, earliest factors first.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n + 1];
    let mut queue = std::collections::VecDeque::from([1usize]);
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    while let Some(w) = queue.pop_front() {
        for (idx, &(a, b)) in supports.iter().enumerate() {
            let other = if a == w {
                b
            } else if b == w {
                a
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                parent[other] = Some((w, idx));
                queue.push_back(other);
            }
        }
    }
    let mut path = Vec::new();
    let mut at = p + 1;
    while at != 1 {
        let (prev, idx) = parent[at]
            .expect("transitive factorizations connect 1 to p+1");
        path.push((prev, at, idx));
        at = prev;
    }
    path.reverse();
    let mut taus = sigmas.to_vec();
    for (u, v, idx) in path {
        for e in 0..idx {
            let (a, b) = supports[e];
            let hits_u = a == u || b == u;
            let hits_v = a == v || b == v;
            if hits_u != hits_v {
                taus[e] = taus[e].toggled()?;
            }
        }
        taus[idx] = taus[idx].toggled()?;
    }
    debug_assert_eq!(tuple_product_b(&taus, n)?, gamma_pq(p, q)?);
    Ok(taus)
}

/// The full fiber of the positive-part map over σ ∈ F^+: the lift and its
/// toggle, sorted.
pub fn preimages_under_plus(
    sigmas: &[BTransposition],
    p: usize,
    q: usize,
) -> Result<Vec<Vec<BTransposition>>> {
    let lift = lift_positive(sigmas, p, q)?;
    let other = toggle_connected(&lift, p, q)?;
    let mut fiber = vec![lift, other];
    fiber.sort();
    Ok(fiber)
}

/// Positions where δ disagrees in sign with β_{p,q}.
pub fn ind_set(delta: &SignedPermutation, p: usize, q: usize) -> Result<Vec<usize>> {
    let beta = beta_pq(p, q)?;
    if delta.positive_part() != beta {
        return Err(Error::Domain(format!(
            "{delta} is not a sign variant of the two-cycle {beta}"
        )));
    }
    Ok((1..=p + q)
        .filter(|&i| delta.apply(i as i64) == -beta.apply(i as i64))
        .collect())
}

/// All δ with positive part β_{p,q} and evenly many sign disagreements;
/// there are 2^{p+q-1} of them.
pub fn enumerate_b_beta(p: usize, q: usize) -> Result<Vec<SignedPermutation>> {
    let beta = beta_pq(p, q)?;
    let n = p + q;
    if n > SIGN_VARIANT_GUARD {
        return Err(Error::GuardExceeded {
            what: "sign variant enumeration",
            param: "p+q",
            limit: SIGN_VARIANT_GUARD,
            requested: n,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let window: Vec<i64> = (0..n)
            .map(|i| {
                let v = beta.window()[i];
                if mask >> i & 1 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        out.push(SignedPermutation::from_window(window)?);
    }
    Ok(out)
}

/// All 2^{p+q} componentwise sign variants of a positive tuple.
pub fn sign_variants(sigmas: &[BTransposition]) -> Result<Vec<Vec<BTransposition>>> {
    let n = sigmas.len();
    if n > SIGN_VARIANT_GUARD {
        return Err(Error::GuardExceeded {
            what: "sign variant enumeration",
            param: "factors",
            limit: SIGN_VARIANT_GUARD,
            requested: n,
        });
    }
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let variant: Result<Vec<BTransposition>> = sigmas
            .iter()
            .enumerate()
            .map(|(i, s)| if mask >> i & 1 == 1 { s.toggled() } else { Ok(*s) })
            .collect();
        out.push(variant?);
    }
    Ok(out)
}

/// The sign variants of `sigmas` whose product is `delta`.
pub fn sign_variants_with_product(
    sigmas: &[BTransposition],
    delta: &SignedPermutation,
) -> Result<Vec<Vec<BTransposition>>> {
    let mut out = Vec::new();
    for variant in sign_variants(sigmas)? {
        if tuple_product_b(&variant, delta.n())? == *delta {
            out.push(variant);
        }
    }
    Ok(out)
}

/// The composite map from a connected maximal chain to a minimal transitive
/// factorization of α_{p,q}: take the chain's reflection sequence, normalize
/// signs, forget them.
pub fn chain_to_mtf(chain: &MaximalChainB, ctx: &PosetContext) -> Result<Vec<Transposition>> {
    if !chain.is_connected(ctx) {
        return Err(Error::Domain(
            "only connected chains map to factorizations".into(),
        ));
    }
    let taus = chain.transpositions();
    abs_tuple(&plus_tuple(&taus)?)
}
