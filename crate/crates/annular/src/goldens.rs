//! Frozen reference objects exported as JSON fixtures.
//!
//! Three fixtures cover the concrete worked objects the rest of the test
//! suite regresses against:
//!
//! * `lift_3_2.json` — a positive reflection tuple for (p, q) = (3, 2), its
//!   two reflection-tuple preimages under the sign-forgetting map, and the
//!   lift that reconstructs the canonical preimage.
//! * `hasse_2_1.json` — the complete 20-element poset of annular
//!   noncrossing signed permutations for (p, q) = (2, 1): every element
//!   with rank, connectivity and zero-cycle data, every cover edge with its
//!   structural kind, and the atom/coatom rows.
//! * `annulus_4_3.json` — two signed permutations on the (4, 3) annulus,
//!   one a rank-4 connected poset element, one that fails the
//!   length-additivity membership test; both are recorded with the numbers
//!   that decide membership.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::error::Result;
use crate::factorization::{abs_tuple, lift_positive, preimages_under_plus, tuple_product_b};
use crate::perm::{alpha_pq, Permutation};
use crate::poset_b::PosetContext;
use crate::signed::{beta_pq, gamma_pq, BCycle, BTransposition, SignedPermutation};

/// Builds the (3, 2) worked example: the positive tuple together with its
/// two preimages, all with product checks left to the caller.
pub fn lift_example_tuples() -> (
    Vec<BTransposition>,
    Vec<BTransposition>,
    Vec<BTransposition>,
) {
    let bt = |i: i64, j: i64| BTransposition::paired(i, j).expect("valid reflection");
    let sigma = vec![bt(1, 2), bt(2, 5), bt(2, 3), bt(4, 5), bt(3, 4)];
    let tau = vec![bt(1, 2), bt(2, -5), bt(2, 3), bt(4, -5), bt(3, -4)];
    let tau_prime = vec![bt(1, 2), bt(2, 5), bt(2, 3), bt(4, -5), bt(3, 4)];
    (sigma, tau, tau_prime)
}

fn tuple_strings(taus: &[BTransposition]) -> Vec<String> {
    taus.iter().map(|t| t.to_string()).collect()
}

fn unsigned_strings(taus: &[BTransposition]) -> Result<Vec<String>> {
    Ok(abs_tuple(taus)?.iter().map(|t| t.to_string()).collect())
}

/// The (3, 2) lift fixture.
pub fn lift_golden() -> Result<Value> {
    let (sigma, tau, tau_prime) = lift_example_tuples();
    let n = 5;
    let beta = tuple_product_b(&sigma, n)?;
    let gamma = tuple_product_b(&tau, n)?;
    debug_assert_eq!(beta, beta_pq(3, 2)?);
    debug_assert_eq!(gamma, gamma_pq(3, 2)?);
    let lifted = lift_positive(&sigma, 3, 2)?;
    let fiber = preimages_under_plus(&sigma, 3, 2)?;
    let alpha_target = {
        let prod = Permutation::from_images(
            (1..=n)
                .map(|i| beta.apply(i as i64).unsigned_abs() as usize)
                .collect(),
        )?;
        debug_assert_eq!(prod, alpha_pq(3, 2)?);
        prod
    };
    Ok(json!({
        "p": 3,
        "q": 2,
        "positive_tuple": tuple_strings(&sigma),
        "positive_product": beta.to_string(),
        "preimages": fiber.iter().map(|t| tuple_strings(t)).collect::<Vec<_>>(),
        "lift": tuple_strings(&lifted),
        "lift_equals_second_preimage": lifted == tau_prime && fiber.contains(&tau),
        "reflection_product": gamma.to_string(),
        "unsigned_tuple": unsigned_strings(&sigma)?,
        "unsigned_target": alpha_target.to_string(),
    }))
}

/// The full (2, 1) poset fixture: elements, cover edges, atoms, coatoms.
pub fn hasse_golden() -> Result<Value> {
    let ctx = PosetContext::new(2, 1)?;
    let mut elements = ctx.elements()?;
    elements.sort_by_key(|e| (e.abs_length(), e.to_string()));

    let mut rank_sizes = vec![0usize; ctx.n() + 1];
    let element_rows: Vec<Value> = elements
        .iter()
        .map(|e| {
            let rank = ctx.rank(e)?;
            rank_sizes[rank] += 1;
            Ok(json!({
                "display": e.to_string(),
                "rank": rank,
                "connectivity": e.connectivity(ctx.p()),
                "zero_cycles": e.zero_cycle_count(),
            }))
        })
        .collect::<Result<_>>()?;

    let mut edges = Vec::new();
    for lo in &elements {
        for (_, hi) in ctx.covers_of(lo) {
            let kind = ctx
                .cover_type(lo, &hi)
                .expect("covers_of yields genuine covers");
            edges.push((lo.to_string(), hi.to_string(), kind.as_str().to_string()));
        }
    }
    edges.sort();
    let edge_rows: Vec<Value> = edges
        .iter()
        .map(|(lo, hi, kind)| json!({ "lower": lo, "upper": hi, "kind": kind }))
        .collect();

    let row = |rank: usize| -> Vec<String> {
        elements
            .iter()
            .filter(|e| e.abs_length() == rank)
            .map(|e| e.to_string())
            .collect()
    };

    Ok(json!({
        "p": 2,
        "q": 1,
        "element_count": elements.len(),
        "rank_sizes": rank_sizes,
        "elements": element_rows,
        "edge_count": edge_rows.len(),
        "edges": edge_rows,
        "atoms": row(1),
        "coatoms": row(ctx.n() - 1),
        "bottom": row(0),
        "top": row(ctx.n()),
    }))
}

fn annulus_entry(
    ctx: &PosetContext,
    s: &SignedPermutation,
) -> Result<Value> {
    let quotient = s.inverse().compose(ctx.gamma())?;
    let additive = s.abs_length() + quotient.abs_length() == ctx.gamma().abs_length();
    debug_assert_eq!(additive, ctx.in_poset(s));
    Ok(json!({
        "display": s.to_string(),
        "window": s.window().to_vec(),
        "abs_length": s.abs_length(),
        "quotient_length": quotient.abs_length(),
        "top_length": ctx.gamma().abs_length(),
        "in_poset": additive,
        "connectivity": s.connectivity(ctx.p()),
        "zero_cycles": s.zero_cycle_count(),
    }))
}

/// The (4, 3) annulus fixture: a connected rank-4 element and a signed
/// permutation whose lengths fail additivity against the top element.
pub fn annulus_golden() -> Result<Value> {
    let ctx = PosetContext::new(4, 3)?;
    let pi = SignedPermutation::from_b_cycles(
        7,
        &[BCycle::paired(vec![1, 5, 6])?, BCycle::paired(vec![2, 3, 4])?],
    )?;
    let sigma = SignedPermutation::from_b_cycles(
        7,
        &[BCycle::zero(vec![1, 5, -7, 2])?, BCycle::paired(vec![3, 4])?],
    )?;
    Ok(json!({
        "p": 4,
        "q": 3,
        "pi": annulus_entry(&ctx, &pi)?,
        "sigma": annulus_entry(&ctx, &sigma)?,
    }))
}

/// Renders a fixture deterministically: pretty JSON plus a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable fixture");
    s.push('\n');
    s
}

/// Writes all three fixtures into `dir`, creating it if needed, and returns
/// the written paths in a fixed order.
pub fn export_goldens(dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let files = [
        ("lift_3_2.json", lift_golden()?),
        ("hasse_2_1.json", hasse_golden()?),
        ("annulus_4_3.json", annulus_golden()?),
    ];
    let mut written = Vec::new();
    for (name, value) in files {
        let path = dir.join(name);
        fs::write(&path, render(&value))?;
        written.push(path);
    }
    Ok(written)
}
