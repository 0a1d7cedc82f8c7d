//! Realizability oracles that share no code with the constructions.
//!
//! - [`erdos_gallai_graphic`]: the Erdős–Gallai inequalities.
//! - [`havel_hakimi_realize`]: the Havel–Hakimi greedy realization.
//! - [`exhaustive_exists`]: brute force over edge subsets of `K_n`, `n <= 8`.

use alloc::format;
use alloc::vec::Vec;

use crate::construct::Target;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count [`exhaustive_exists`] will enumerate.
pub const EXHAUSTIVE_MAX_N: usize = 8;

/// A non-increasing, non-empty list of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Accepts `degrees` only if already non-increasing.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        check_sorted(&degrees)?;
        Ok(DegreeSequence { degrees })
    }

    /// Sorts `degrees` into non-increasing order.
    pub fn sorted(mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(degrees)
    }

    /// Degree sequence of `g`, sorted.
    pub fn of_graph(g: &Graph) -> Self {
        let mut degrees: Vec<usize> = g.degrees().collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn is_graphic(&self) -> bool {
        erdos_gallai_graphic(&self.degrees).expect("validated on construction")
    }

    pub fn realize(&self) -> Realization {
        havel_hakimi_realize(&self.degrees).expect("validated on construction")
    }
}

fn check_sorted(degrees: &[usize]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::InvalidArgument("empty degree sequence".into()));
    }
    if let Some(i) = degrees.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!(
            "degree sequence not non-increasing at position {}: {} < {}",
            i + 2,
            degrees[i],
            degrees[i + 1]
        )));
    }
    Ok(())
}

/// Erdős–Gallai: `degrees` is graphic iff its sum is even and for every
/// `r` in `1..=n`,
/// `d_1 + ... + d_r <= r (r - 1) + sum_{i > r} min(d_i, r)`.
pub fn erdos_gallai_graphic(degrees: &[usize]) -> Result<bool> {
    check_sorted(degrees)?;
    let total: usize = degrees.iter().sum();
    if !total.is_multiple_of(2) {
        return Ok(false);
    }
    let mut head = 0usize;
    for r in 1..=degrees.len() {
        head += degrees[r - 1];
        let tail: usize = degrees[r..].iter().map(|&d| d.min(r)).sum();
        if head > r * (r - 1) + tail {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    /// A simple graph with exactly this degree sequence; vertex `i` has
    /// degree `d_i`. Not necessarily connected.
    Realized(Graph),
    NonGraphic,
}

impl Realization {
    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Realization::Realized(g) => Some(g),
            Realization::NonGraphic => None,
        }
    }
}

/// Havel–Hakimi: repeatedly join the vertex of largest remaining degree to
/// the next `d` vertices of largest remaining degree. Ties go to the
/// smaller original label.
pub fn havel_hakimi_realize(degrees: &[usize]) -> Result<Realization> {
    check_sorted(degrees)?;
    let n = degrees.len();
    let mut g = Graph::empty(n)?;
    // (remaining degree, label)
    let mut pending: Vec<(usize, usize)> = degrees.iter().copied().zip(1..).collect();
    loop {
        pending.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = pending[0];
        if d == 0 {
            return Ok(Realization::Realized(g));
        }
        pending.remove(0);
        if d > pending.len() {
            return Ok(Realization::NonGraphic);
        }
        for slot in &mut pending[..d] {
            if slot.0 == 0 {
                return Ok(Realization::NonGraphic);
            }
            slot.0 -= 1;
            g.add_edge(v, slot.1)?;
        }
        if pending.is_empty() {
            return Ok(Realization::Realized(g));
        }
    }
}

/// Brute force: is there a connected simple graph on `n` labeled vertices
/// with the `target` degree profile for `k`?
///
/// Enumerates every edge subset of `K_n` with exactly the required number
/// of edges (`nk/2` or `(nk - 1)/2`).
pub fn exhaustive_exists(n: usize, k: usize, target: Target) -> Result<bool> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::BudgetExceeded {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one vertex".into()));
    }
    let twice_m = match target {
        Target::Regular => n * k,
        Target::NearlyRegular if n * k >= 1 => n * k - 1,
        Target::NearlyRegular => return Ok(false),
    };
    if twice_m % 2 != 0 {
        return Ok(false);
    }
    let m = twice_m / 2;

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = pairs.len();
    if m > total {
        return Ok(false);
    }
    // incident[v]: bitmask over edge indices touching v
    let mut incident = [0u32; EXHAUSTIVE_MAX_N];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }

    let profile_ok = |mask: u32| -> bool {
        let mut low = 0;
        for v in incident.iter().take(n) {
            let d = (mask & v).count_ones() as usize;
            if d == k {
                continue;
            }
            if target == Target::NearlyRegular && d + 1 == k && low == 0 {
                low += 1;
                continue;
            }
            return false;
        }
        target == Target::Regular || low == 1
    };
    let connected = |mask: u32| -> bool {
        let mut nbrs = [0u32; EXHAUSTIVE_MAX_N];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                nbrs[u] |= 1 << v;
                nbrs[v] |= 1 << u;
            }
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for (v, &adj) in nbrs.iter().enumerate().take(n) {
                if frontier & (1 << v) != 0 {
                    next |= adj;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == n
    };

    if m == 0 {
        return Ok(profile_ok(0) && connected(0));
    }
    // Gosper's hack: all `total`-bit masks with exactly `m` bits set.
    let limit = 1u64 << total;
    let mut mask: u64 = (1u64 << m) - 1;
    while mask < limit {
        let bits = mask as u32;
        if profile_ok(bits) && connected(bits) {
            return Ok(true);
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(false)
}
