//! Search for a maximal symmetric block inside a polynomial.
//!
//! A variable set is valid when every one of its `m`-subsets is a degree-`m`
//! monomial of `p`. The largest valid set is a maximum clique of the
//! `m`-uniform hypergraph formed by those monomials, found here by
//! branch and bound. Vertices are tried in ascending order, including before
//! excluding, so among sets of the largest size the first one reached is the
//! lexicographically smallest sorted variable list.

use itertools::Itertools;

use crate::pbpoly::{binom, Polynomial, SymmetricBlock, VarId};

struct Search {
    m: usize,
    /// Sorted index lists of the degree-`m` monomials, sorted.
    seeds: Vec<Vec<usize>>,
    /// `cooc[v][u]`: `u` and `v` share at least one seed.
    cooc: Vec<Vec<bool>>,
    best: Vec<usize>,
}

impl Search {
    fn is_seed(&self, sorted: &[usize]) -> bool {
        self.seeds
            .binary_search_by(|s| s.as_slice().cmp(sorted))
            .is_ok()
    }

    /// Whether every `k`-subset of `pool[from..]` joined with `fixed` is a
    /// seed. `buf` holds the subset under construction.
    fn subsets_are_seeds(
        &self,
        pool: &[usize],
        from: usize,
        k: usize,
        fixed: [usize; 2],
        buf: &mut Vec<usize>,
    ) -> bool {
        if k == 0 {
            let mut key = buf.clone();
            key.extend_from_slice(&fixed);
            key.sort_unstable();
            return self.is_seed(&key);
        }
        (from..=pool.len() - k).all(|i| {
            buf.push(pool[i]);
            let ok = self.subsets_are_seeds(pool, i + 1, k - 1, fixed, buf);
            buf.pop();
            ok
        })
    }

    /// Number of seeds a subset of size `t` must lie in for some valid set
    /// larger than the current best to contain it.
    fn needed(&self, t: usize) -> usize {
        let (n, k) = (self.best.len() + 1 - t, self.m - t);
        binom(n as i64, k as i64).map_or(usize::MAX, |c| c as usize)
    }

    /// `chosen` is valid, ends with the newest vertex `v`, and lies in the
    /// seeds listed in `containing` (tracked while it has at most `m`
    /// vertices). Decides whether `u > v` may still join.
    fn compatible(&self, chosen: &[usize], containing: &[usize], u: usize) -> bool {
        let (&v, rest) = chosen.split_last().expect("nonempty");
        if !self.cooc[v][u] {
            return false;
        }
        let t = chosen.len() + 1;
        if t <= self.m {
            let hits = containing
                .iter()
                .filter(|&&s| self.seeds[s].binary_search(&u).is_ok())
                .count();
            return hits >= self.needed(t);
        }
        let mut buf = Vec::with_capacity(self.m);
        self.subsets_are_seeds(rest, 0, self.m - 2, [v, u], &mut buf)
    }

    fn expand(&mut self, chosen: &mut Vec<usize>, candidates: &[usize], containing: &[usize]) {
        if chosen.len() > self.best.len() && chosen.len() >= self.m {
            self.best = chosen.clone();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if chosen.len() + candidates.len() - i <= self.best.len() {
                return;
            }
            chosen.push(v);
            let inner: Vec<usize> = if chosen.len() <= self.m {
                containing
                    .iter()
                    .copied()
                    .filter(|&s| self.seeds[s].binary_search(&v).is_ok())
                    .collect()
            } else {
                Vec::new()
            };
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.compatible(chosen, &inner, u))
                .collect();
            self.expand(chosen, &next, &inner);
            chosen.pop();
        }
    }
}

/// Largest symmetric `m`-block all of whose monomials occur in `p`, or
/// `None` when `p` has no monomial of degree exactly `m`.
///
/// # Panics
///
/// If `m < 3`.
pub fn max_symm(p: &Polynomial, m: usize) -> Option<SymmetricBlock> {
    assert!(m >= 3, "symmetric blocks have degree at least 3");
    let monos: Vec<_> = p.terms_of_degree(m).map(|(mono, _)| mono).collect();
    if monos.is_empty() {
        return None;
    }
    let vars: Vec<VarId> = monos
        .iter()
        .flat_map(|mono| mono.vars().iter().copied())
        .sorted()
        .dedup()
        .collect();
    let width = vars.len();
    let index_of = |v: &VarId| vars.binary_search(v).expect("seed variable is indexed");

    let seeds: Vec<Vec<usize>> = monos
        .iter()
        .map(|mono| mono.vars().iter().map(index_of).collect())
        .collect();
    let mut cooc = vec![vec![false; width]; width];
    for s in &seeds {
        for &a in s {
            for &b in s {
                cooc[a][b] = true;
            }
        }
    }
    let mut search = Search {
        m,
        best: seeds.iter().min().expect("at least one seed").clone(),
        seeds: seeds.into_iter().sorted().collect(),
        cooc,
    };
    let all_seeds: Vec<usize> = (0..search.seeds.len()).collect();
    let roots: Vec<usize> = (0..width)
        .filter(|&u| {
            let hits = search
                .seeds
                .iter()
                .filter(|s| s.binary_search(&u).is_ok())
                .count();
            hits >= search.needed(1)
        })
        .collect();
    search.expand(&mut Vec::with_capacity(width), &roots, &all_seeds);

    let block_vars = search.best.iter().map(|&i| vars[i]);
    Some(SymmetricBlock::new(block_vars, m).expect("a valid block has at least m variables"))
}
