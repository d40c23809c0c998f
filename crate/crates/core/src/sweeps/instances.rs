//! Instance families for the exhaustive sweeps.

use crate::arith::{is_prime, prime_power};
use crate::core_alg::{CyclicActionModule, Modulus};
use crate::linalg::{snf, Mat, Zpn};
use std::collections::HashSet;

pub const TOWER_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];
pub const TOWER_Q_BOUND: u64 = 200;
pub const TOWER_MAX_N: u32 = 4;

/// Endomorphism rings up to this size are enumerated in full.
pub const FULL_ENUMERATION: u128 = 10_000;

/// (q, p, n) for every prime power q < 200 prime to p, p ∈ {3, 5, 7, 11, 13}, n ≤ 4.
pub fn tower_instances() -> Vec<(u64, u64, u32)> {
    let qs: Vec<u64> = (2..TOWER_Q_BOUND)
        .filter(|&q| prime_power(q).is_some())
        .collect();
    let mut out = Vec::new();
    for &p in &TOWER_PRIMES {
        for &q in qs.iter().filter(|&&q| q % p != 0) {
            for n in 1..=TOWER_MAX_N {
                out.push((q, p, n));
            }
        }
    }
    out
}

/// Exponent lists (k_1 ≥ k_2 ≥ …) with p^{Σk} ≤ bound.
pub fn shapes(p: u64, bound: u64) -> Vec<Vec<u32>> {
    fn rec(p: u64, budget: u64, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        let mut pk = p;
        for k in 1..=max_part {
            if pk > budget {
                break;
            }
            cur.push(k);
            rec(p, budget / pk, k, cur, out);
            cur.pop();
            pk = pk.saturating_mul(p);
        }
    }
    let mut out = Vec::new();
    rec(p, bound, u32::MAX, &mut Vec::new(), &mut out);
    out
}

fn endomorphism_count(p: u64, parts: &[u32]) -> u128 {
    let e: u32 = parts
        .iter()
        .flat_map(|&a| parts.iter().map(move |&b| a.min(b)))
        .sum();
    (p as u128).checked_pow(e).unwrap_or(u128::MAX)
}

/// Every endomorphism of ⊕ Z/p^{k_i}: entry (i, j) is a multiple of p^{max(k_i − k_j, 0)}.
fn all_endomorphisms(p: u64, parts: &[u32]) -> Vec<Mat> {
    let r = parts.len();
    let cells: Vec<(usize, usize, u64, u64)> = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .map(|(i, j)| {
            let step = p.pow(parts[i].saturating_sub(parts[j]));
            (i, j, step, p.pow(parts[i].min(parts[j])))
        })
        .collect();
    let mut digits = vec![0u64; cells.len()];
    let mut out = Vec::new();
    loop {
        let mut m = Mat::zeros(r, r);
        for (&(i, j, step, _), &d) in cells.iter().zip(&digits) {
            m.set(i, j, d * step);
        }
        out.push(m);
        let mut c = 0;
        loop {
            if c == cells.len() {
                return out;
            }
            digits[c] += 1;
            if digits[c] < cells[c].3 {
                break;
            }
            digits[c] = 0;
            c += 1;
        }
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n.min(max))
        .rev()
        .flat_map(|k| {
            partitions(n - k, k).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// Block sums of companion matrices of monic polynomials over Z/p^e with unit
/// constant term. Over F_p every invertible matrix is conjugate to one of these
/// through its rational canonical form.
fn companion_blocks(p: u64, e: u32, r: usize) -> Vec<Mat> {
    let pe = p.pow(e);
    let units: Vec<u64> = (1..pe).filter(|x| x % p != 0).collect();
    let mut out = Vec::new();
    for part in partitions(r, r) {
        let mut mats = vec![Mat::zeros(r, r)];
        let mut offset = 0;
        for &d in &part {
            let mut next = Vec::new();
            let count = units.len() as u64 * pe.pow(d as u32 - 1);
            for idx in 0..count {
                let mut coeffs = vec![units[(idx % units.len() as u64) as usize]];
                let mut rest = idx / units.len() as u64;
                for _ in 1..d {
                    coeffs.push(rest % pe);
                    rest /= pe;
                }
                for base in &mats {
                    let mut m = base.clone();
                    for i in 1..d {
                        m.set(offset + i, offset + i - 1, 1);
                    }
                    for (i, c) in coeffs.iter().enumerate() {
                        m.set(offset + i, offset + d - 1, (pe - c) % pe);
                    }
                    next.push(m);
                }
            }
            mats = next;
            offset += d;
        }
        out.extend(mats);
    }
    out
}

/// Candidate actions on ⊕ Z/p^{k_i}: all endomorphisms when there are at most
/// `FULL_ENUMERATION`, companion-block forms on larger homocyclic groups, and
/// block sums over the homocyclic components otherwise.
pub fn action_candidates(p: u64, parts: &[u32]) -> Vec<Mat> {
    if endomorphism_count(p, parts) <= FULL_ENUMERATION {
        return all_endomorphisms(p, parts);
    }
    if parts.iter().all(|&k| k == parts[0]) {
        return companion_blocks(p, parts[0], parts.len());
    }
    block_sums(p, parts, action_candidates)
}

/// Block-diagonal sums of `block` candidates over the homocyclic components.
fn block_sums(p: u64, parts: &[u32], block: fn(u64, &[u32]) -> Vec<Mat>) -> Vec<Mat> {
    let r = parts.len();
    let mut mats = vec![Mat::zeros(r, r)];
    let mut start = 0;
    while start < r {
        let end = start
            + parts[start..]
                .iter()
                .take_while(|&&k| k == parts[start])
                .count();
        let block = block(p, &parts[start..end]);
        let mut next = Vec::with_capacity(mats.len() * block.len());
        for m in &mats {
            for b in &block {
                let mut x = m.clone();
                for i in 0..end - start {
                    for j in 0..end - start {
                        x.set(start + i, start + j, b.get(i, j));
                    }
                }
                next.push(x);
            }
        }
        mats = next;
        start = end;
    }
    mats
}

/// Reduces row i modulo p^{k_i}, so that equal maps have equal matrices.
fn normalize(m: &Mat, p: u64, parts: &[u32]) -> Mat {
    let mut out = m.clone();
    for (i, &k) in parts.iter().enumerate() {
        for j in 0..m.cols {
            out.set(i, j, m.get(i, j) % p.pow(k));
        }
    }
    out
}

/// One automorphism per conjugacy class of Aut(⊕ Z/p^{k_i}) when the
/// endomorphism ring is small enough to enumerate. Larger groups fall back to
/// companion forms or to block sums of class representatives.
///
/// An endomorphism is invertible iff it is invertible modulo p, and conjugate
/// actions give isomorphic modules.
pub fn action_class_representatives(p: u64, parts: &[u32]) -> Vec<Mat> {
    if endomorphism_count(p, parts) > FULL_ENUMERATION {
        if parts.iter().all(|&k| k == parts[0]) {
            return companion_blocks(p, parts[0], parts.len());
        }
        return block_sums(p, parts, action_class_representatives);
    }
    let ring = Zpn::new(p, parts[0]);
    let residue = Zpn::new(p, 1);
    let r = parts.len();
    let units: Vec<Mat> = all_endomorphisms(p, parts)
        .into_iter()
        .filter(|t| snf(t, &residue, false).pivots.len() == r)
        .collect();
    let id = Mat::identity(r);
    let with_inverse: Vec<(Mat, Mat)> = units
        .iter()
        .map(|g| {
            let mut prev = id.clone();
            let mut cur = g.clone();
            while normalize(&cur, p, parts) != id {
                prev = cur.clone();
                cur = cur.mul(g, &ring);
            }
            (g.clone(), normalize(&prev, p, parts))
        })
        .collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut reps = Vec::new();
    for t in &units {
        if seen.contains(&t.data) {
            continue;
        }
        for (g, g_inv) in &with_inverse {
            seen.insert(normalize(&g.mul(t, &ring).mul(g_inv, &ring), p, parts).data);
        }
        reps.push(t.clone());
    }
    reps
}

fn modules_from(
    p: u64,
    bound: u64,
    order: u64,
    candidates: impl Fn(u64, &[u32]) -> Vec<Mat>,
) -> Vec<CyclicActionModule> {
    let mut out = Vec::new();
    for parts in shapes(p, bound) {
        let modulus = Modulus::new(p, parts[0]).expect("odd prime");
        for t in candidates(p, &parts) {
            if let Ok(m) = CyclicActionModule::new(modulus, parts.clone(), t, order) {
                out.push(m);
            }
        }
    }
    out
}

/// Modules ⊕ Z/p^{k_i} with p^{Σk} ≤ bound and an action of order dividing `order`.
pub fn modules_of_order_dividing(p: u64, bound: u64, order: u64) -> Vec<CyclicActionModule> {
    modules_from(p, bound, order, action_candidates)
}

/// As `modules_of_order_dividing`, keeping one action per conjugacy class on
/// groups whose endomorphisms are enumerated in full.
pub fn module_classes_of_order_dividing(p: u64, bound: u64, order: u64) -> Vec<CyclicActionModule> {
    modules_from(p, bound, order, action_class_representatives)
}

/// Odd primes up to `bound`.
pub fn odd_primes_upto(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&p| is_prime(p)).collect()
}
