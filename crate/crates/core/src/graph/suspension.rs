use std::collections::BTreeSet;

use serde::Serialize;

use super::WeightedGraph;

/// Certificate that a graph is an `r`-path suspension of the subgraph induced
/// by `bases`: `whiskers[i]` lists `y_{i,1}, …, y_{i,r}`, walking outward from
/// `bases[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuspensionWitness {
    pub bases: Vec<usize>,
    pub whiskers: Vec<Vec<usize>>,
}

impl SuspensionWitness {
    /// Checks the structural invariants against the host graph `g`.
    pub fn is_valid_for(&self, g: &WeightedGraph, r: usize) -> bool {
        if self.bases.len() != self.whiskers.len() {
            return false;
        }
        let mut seen = BTreeSet::new();
        for (&base, whisker) in self.bases.iter().zip(&self.whiskers) {
            if whisker.len() != r {
                return false;
            }
            let chain = std::iter::once(&base).chain(whisker);
            if !chain
                .clone()
                .all(|&v| g.contains_vertex(v) && seen.insert(v))
            {
                return false;
            }
            let chain: Vec<usize> = chain.copied().collect();
            if !chain.windows(2).all(|w| g.weight(w[0], w[1]).is_some()) {
                return false;
            }
            let (&tip, inner) = whisker.split_last().expect("r >= 1");
            if g.degree(tip) != 1 || inner.iter().any(|&y| g.degree(y) != 2) {
                return false;
            }
        }
        seen.len() == g.vertex_count()
    }

    /// First whisker vertex `y_{i,1}` attached to `base`.
    pub fn attachment(&self, base: usize) -> Option<usize> {
        let i = self.bases.iter().position(|&b| b == base)?;
        self.whiskers[i].first().copied()
    }
}

struct Candidate {
    base: usize,
    whisker: Vec<usize>,
}

impl Candidate {
    fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.base).chain(self.whisker.iter().copied())
    }
}

/// The unique inward walk of `r` edges from `leaf` through degree-2 vertices.
fn whisker_from_leaf(g: &WeightedGraph, leaf: usize, r: usize) -> Option<Candidate> {
    let mut chain = vec![leaf];
    let mut prev = None;
    let mut cur = leaf;
    for step in 0..r {
        if step > 0 && g.degree(cur) != 2 {
            return None;
        }
        let next = g.neighbors(cur).find(|&u| Some(u) != prev)?;
        if chain.contains(&next) {
            return None;
        }
        chain.push(next);
        prev = Some(cur);
        cur = next;
    }
    let base = chain.pop().expect("chain holds r + 1 vertices");
    chain.reverse();
    Some(Candidate {
        base,
        whisker: chain,
    })
}

/// Searches for an `r`-path suspension structure on `g`.
///
/// Exhaustive backtracking: the lowest uncovered vertex must belong to some
/// whisker candidate, tried in increasing leaf order. Returns one witness;
/// several may exist (a bare `r`-path has two).
pub fn detect_r_path_suspension(g: &WeightedGraph, r: usize) -> Option<SuspensionWitness> {
    assert!(r >= 1, "path length r must be at least 1");
    let n = g.vertex_count();
    if n == 0 || !n.is_multiple_of(r + 1) {
        return None;
    }
    let candidates: Vec<Candidate> = g
        .vertices()
        .filter(|&v| g.degree(v) == 1)
        .filter_map(|leaf| whisker_from_leaf(g, leaf, r))
        .collect();

    fn search(
        g: &WeightedGraph,
        candidates: &[Candidate],
        covered: &mut BTreeSet<usize>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let Some(u) = g.vertices().find(|v| !covered.contains(v)) else {
            return true;
        };
        for (idx, cand) in candidates.iter().enumerate() {
            if !cand.vertices().any(|v| v == u) || cand.vertices().any(|v| covered.contains(&v)) {
                continue;
            }
            covered.extend(cand.vertices());
            chosen.push(idx);
            if search(g, candidates, covered, chosen) {
                return true;
            }
            chosen.pop();
            for v in cand.vertices() {
                covered.remove(&v);
            }
        }
        false
    }

    let mut chosen = Vec::new();
    if !search(g, &candidates, &mut BTreeSet::new(), &mut chosen) {
        return None;
    }
    let mut picked: Vec<&Candidate> = chosen.iter().map(|&i| &candidates[i]).collect();
    picked.sort_by_key(|c| c.base);
    Some(SuspensionWitness {
        bases: picked.iter().map(|c| c.base).collect(),
        whiskers: picked.iter().map(|c| c.whisker.clone()).collect(),
    })
}
