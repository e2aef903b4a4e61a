//! Shared exhaustive engines: lexicographic enumeration of orderings and
//! dynamic programming over prefix sets.

use rayon::prelude::*;

use crate::bits::{bits, full_mask};
use crate::ordering::{next_permutation, Ordering};

/// Minimises `eval` over all orderings of `0..n`, returning the value and the
/// lexicographically smallest ordering attaining it. Work is split by first
/// vertex across the rayon pool; the merge keeps the result canonical.
pub(crate) fn min_over_orderings<M, E>(n: usize, make_eval: M) -> (usize, Ordering)
where
    M: Fn() -> E + Sync,
    E: FnMut(&[usize]) -> usize,
{
    if n == 0 {
        return (0, Ordering::identity(0));
    }
    let per_first: Vec<(usize, Vec<usize>)> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut eval = make_eval();
            let mut perm: Vec<usize> = std::iter::once(first)
                .chain((0..n).filter(|&v| v != first))
                .collect();
            let mut best = (eval(&perm), perm.clone());
            while next_permutation(&mut perm[1..]) {
                let value = eval(&perm);
                if value < best.0 {
                    best = (value, perm.clone());
                }
            }
            best
        })
        .collect();
    let (value, perm) = per_first
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("n > 0");
    (value, Ordering::new(perm).expect("enumerated a permutation"))
}

/// How the per-step costs along an ordering are aggregated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Combine {
    Max,
    Sum,
}

impl Combine {
    fn apply(self, a: u16, b: u16) -> u16 {
        match self {
            Combine::Max => a.max(b),
            Combine::Sum => a + b,
        }
    }
}

/// Optimises `combine` of `step(prefix, u)` over all orderings, where
/// `step(prefix, u)` is the cost of appending `u` right after the vertex set
/// `prefix`. Requires `n <= 30`; callers enforce tighter guards.
///
/// `best[S]` is the optimal cost of completing an ordering whose first
/// `|S|` vertices are `S`. The witness is rebuilt forwards by taking the
/// smallest vertex that still allows an optimal completion, which yields
/// the lexicographically smallest optimal ordering.
pub(crate) fn prefix_dp(
    n: usize,
    combine: Combine,
    step: impl Fn(u32, usize) -> u16,
) -> (usize, Ordering) {
    debug_assert!(n <= 30);
    let full = full_mask(n) as u32;
    let mut best = vec![0u16; 1usize << n];
    for s in (0..full).rev() {
        let mut b = u16::MAX;
        for u in bits((!s & full) as u64) {
            let c = combine.apply(step(s, u), best[(s | 1 << u) as usize]);
            b = b.min(c);
        }
        best[s as usize] = b;
    }
    // remaining allowance along the reconstructed prefix
    let mut budget = best[0];
    let mut perm = Vec::with_capacity(n);
    let mut s = 0u32;
    while s != full {
        let u = bits((!s & full) as u64)
            .find(|&u| combine.apply(step(s, u), best[(s | 1 << u) as usize]) <= budget)
            .expect("some vertex attains the optimum");
        if combine == Combine::Sum {
            budget -= step(s, u);
        }
        perm.push(u);
        s |= 1 << u;
    }
    let value = if n == 0 { 0 } else { best[0] as usize };
    (value, Ordering::new(perm).expect("dp builds a permutation"))
}

/// `cut[S]` for every prefix set, given the change in cut size when `u`
/// joins the prefix `S`.
pub(crate) fn cut_table(n: usize, delta: impl Fn(u32, usize) -> i32) -> Vec<u16> {
    let mut cut = vec![0u16; 1usize << n];
    for s in 1u32..(1u32 << n) {
        let u = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        cut[s as usize] = (cut[rest as usize] as i32 + delta(rest, u)) as u16;
    }
    cut
}
