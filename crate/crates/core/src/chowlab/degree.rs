//! Enumerative check of the degree of `Delta_{n,s}`: the s-tuples of
//! hyperplanes through n s random points of the dual projective space.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::polyring::{random_distinct_linear, LinearForm, Ring};
use crate::rng::seeded;

use super::{degenerate, Comparison, OracleRun, VerificationReport};

/// Number of unordered partitions of `n s` labelled points into `s` blocks
/// of size `n`: `(ns)! / ((n!)^s s!)`.
pub fn partition_count(n: u64, s: u64) -> BigUint {
    let fact = |k: u64| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
    fact(n * s) / (fact(n).pow(s as u32) * fact(s))
}

/// The hyperplane through the points of `block`, provided they span one
/// and it meets no other point of the configuration.
fn hyperplane_through<F: Field>(field: &F, points: &[LinearForm<F>], block: u64) -> Result<Vec<F::Elem>> {
    let n = points[0].n();
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .enumerate()
        .filter(|(i, _)| block >> i & 1 == 1)
        .map(|(_, p)| p.coeffs().to_vec())
        .collect();
    let kernel = Matrix::from_rows(n + 1, rows)?.kernel_basis(field);
    if kernel.len() != 1 {
        return Err(degenerate("block of points does not span a hyperplane"));
    }
    let h = LinearForm::new(field, Ring::T, kernel.into_iter().next().expect("one vector"))?;
    for (i, p) in points.iter().enumerate() {
        if block >> i & 1 == 0 && field.is_zero(&h.pair(field, p.coeffs())) {
            return Err(degenerate("hyperplane through a block meets an extra point"));
        }
    }
    Ok(h.coeffs().to_vec())
}

/// Blocks of `size` points from `remaining` that contain its lowest point,
/// so each unordered partition is produced exactly once.
fn blocks_containing_lowest(remaining: u64, size: usize) -> Vec<u64> {
    let low = remaining & remaining.wrapping_neg();
    let rest: Vec<u64> = (0..64)
        .map(|i| 1u64 << i)
        .filter(|&b| remaining & b != 0 && b != low)
        .collect();
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(size);
    extend_blocks(&rest, size - 1, 0, low, &mut picked, &mut out);
    out
}

fn extend_blocks(rest: &[u64], k: usize, start: usize, low: u64, picked: &mut Vec<u64>, out: &mut Vec<u64>) {
    if picked.len() == k {
        out.push(picked.iter().fold(low, |m, b| m | b));
        return;
    }
    for i in start..rest.len() {
        picked.push(rest[i]);
        extend_blocks(rest, k, i + 1, low, picked, out);
        picked.pop();
    }
}

/// Counts distinct unordered s-tuples of hyperplanes whose union contains
/// `n s` random points, by enumerating all partitions of the points into
/// blocks of size n.
pub fn chow_degree_oracle<F: Field>(field: &F, n: usize, s: usize, seed: u64, guard: u64) -> Result<u64> {
    if n < 1 || s < 1 {
        return Err(Error::Domain("chow_degree_oracle needs n >= 1 and s >= 1".into()));
    }
    let total = partition_count(n as u64, s as u64);
    if n * s > 64 || total > BigUint::from(guard) {
        return Err(Error::EnumerationTooLarge {
            size: total.to_string(),
            guard,
        });
    }
    let mut rng = seeded(seed);
    let points = random_distinct_linear(field, n, Ring::S, n * s, &mut rng)?;
    // block -> hyperplane id, hyperplane -> id
    let mut block_plane: HashMap<u64, usize> = HashMap::new();
    let mut plane_ids: HashMap<Vec<F::Elem>, usize> = HashMap::new();
    let mut tuples: HashSet<Vec<usize>> = HashSet::new();
    let full = if n * s == 64 { u64::MAX } else { (1u64 << (n * s)) - 1 };
    let mut stack: Vec<(u64, Vec<usize>)> = vec![(full, Vec::new())];
    while let Some((remaining, chosen)) = stack.pop() {
        if remaining == 0 {
            let mut tuple = chosen;
            tuple.sort_unstable();
            tuples.insert(tuple);
            continue;
        }
        for block in blocks_containing_lowest(remaining, n) {
            let id = match block_plane.get(&block) {
                Some(&id) => id,
                None => {
                    let h = hyperplane_through(field, &points, block)?;
                    let next_id = plane_ids.len();
                    let id = *plane_ids.entry(h).or_insert(next_id);
                    block_plane.insert(block, id);
                    id
                }
            };
            let mut next = chosen.clone();
            next.push(id);
            stack.push((remaining & !block, next));
        }
    }
    Ok(tuples.len() as u64)
}

/// Compares the enumerated count with `prod C(nk - 1, n - 1)`.
pub fn verify_chow_degree<F: Field>(
    field: &F,
    n: usize,
    s: usize,
    seed: u64,
    retries: usize,
    guard: u64,
) -> Result<VerificationReport> {
    let expected = crate::formulas::chow_degree(n as u64, s as u64)
        .to_i64()
        .ok_or_else(|| Error::EnumerationTooLarge {
            size: partition_count(n as u64, s as u64).to_string(),
            guard,
        })?;
    let run = OracleRun {
        name: "chow-degree",
        params: &[("n", n as u64), ("s", s as u64)],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let mut cmp = Comparison::default();
        let count = chow_degree_oracle(field, n, s, attempt_seed, guard)?;
        cmp.record("degree", count as i64, expected);
        Ok(cmp)
    })
}
