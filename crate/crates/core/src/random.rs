//! Seeded random k-graphs.
//!
//! Every generator takes an explicit RNG; [`trial_rng`] derives one per
//! trial index from a master seed so that trials can run in any order.

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{build_hypergraph, Hypergraph};
use crate::io::serialize;
use crate::structure::PartialBipartition;

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for trial `index` under `master`.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    mix(mix(master) ^ index)
}

pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(master, index))
}

/// C(n, k), or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u64)? / (i as u64 + 1);
    }
    Some(acc)
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
fn unrank(mut rank: u64, n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let left = k - slot - 1;
        loop {
            let block = binomial(n - next - 1, left).unwrap_or(u64::MAX);
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// `m` distinct k-subsets of `0..n`, uniformly, sorted lexicographically.
pub fn random_edge_sets<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize, m: usize) -> Result<Vec<Vec<usize>>> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    let total = binomial(n, k);
    if total.is_some_and(|t| (m as u64) > t) {
        return Err(Error::TooManyEdges { k, n, m });
    }
    let mut edges: Vec<Vec<usize>> = match total {
        Some(t) if t <= u32::MAX as u64 => sample(rng, t as usize, m)
            .into_iter()
            .map(|r| unrank(r as u64, n, k))
            .collect(),
        _ => {
            let mut seen = std::collections::BTreeSet::new();
            while seen.len() < m {
                let mut e = sample(rng, n, k).into_vec();
                e.sort_unstable();
                seen.insert(e);
            }
            seen.into_iter().collect()
        }
    };
    edges.sort_unstable();
    Ok(edges)
}

/// A random k-graph on tokens `1..=n` with `m` distinct edges. Vertices
/// that end up in no edge are absent from the result.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize, m: usize) -> Result<Hypergraph> {
    let edges = random_edge_sets(rng, k, n, m)?;
    build_hypergraph(k, edges.iter().map(|e| e.iter().map(|v| (v + 1).to_string())))
}

/// The file written by `gen`: same arguments, same bytes.
pub fn generate_file(k: usize, n: usize, m: usize, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    serialize(&random_hypergraph(&mut rng, k, n, m)?)
}

/// Plants a balanced partial bipartition: picks nonempty V1, V2, then draws
/// up to `m` distinct edges, each either inside V0 or with exactly `a`
/// vertices in V1 and `b` in V2 for one fixed pair (a, b). Vertices are
/// tokens `1..=n`, all present (possibly isolated). `None` when the sizes
/// leave no room for a crossing edge.
pub fn planted_balanced<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    n: usize,
    m: usize,
) -> Result<Option<(Hypergraph, PartialBipartition)>> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    if n < 2 {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let n1 = rng.gen_range(1..n);
    let n2 = rng.gen_range(1..=n - n1);
    let (v1, rest) = order.split_at(n1);
    let (v2, v0) = rest.split_at(n2);
    let a = rng.gen_range(1..=k.min(n1));
    let b_max = (k - a).min(n2);
    if b_max == 0 || k - a - b_max > v0.len() {
        return Ok(None);
    }
    let b = rng.gen_range((k - a).saturating_sub(v0.len()).max(1)..=b_max);
    let pick = |rng: &mut R, from: &[usize], c: usize| -> Vec<usize> {
        sample(rng, from.len(), c).into_iter().map(|i| from[i]).collect()
    };
    let mut edges = std::collections::BTreeSet::new();
    for _ in 0..m * 20 {
        if edges.len() == m {
            break;
        }
        let mut e = if v0.len() >= k && rng.gen_bool(0.25) {
            pick(rng, v0, k)
        } else {
            let mut e = pick(rng, v1, a);
            e.extend(pick(rng, v2, b));
            e.extend(pick(rng, v0, k - a - b));
            e
        };
        e.sort_unstable();
        edges.insert(e);
    }
    let vertices = (1..=n).map(|v| v.to_string()).collect();
    let h = Hypergraph::from_parts(k, vertices, edges.into_iter().collect())?;
    let mut p = PartialBipartition::from_sides(n, v1.to_vec(), v2.to_vec());
    p.balanced = Some(Ratio::new(a, b));
    Ok(Some((h, p)))
}
