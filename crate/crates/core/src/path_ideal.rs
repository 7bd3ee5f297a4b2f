//! The `f`-weighted `r`-path ideal of a weighted graph.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_r_paths, induced_subgraph, Path, WeightedGraph};
use crate::monomial::{minimalize, sum, Monomial, MonomialIdeal};

/// Symmetric rule combining the two path-edge weights at an interior vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Combiner {
    #[default]
    Max,
    Min,
    Gcd,
    Lcm,
}

impl Combiner {
    pub const ALL: [Combiner; 4] = [Combiner::Max, Combiner::Min, Combiner::Gcd, Combiner::Lcm];

    pub fn apply(self, a: u64, b: u64) -> Result<u64> {
        Ok(match self {
            Combiner::Max => a.max(b),
            Combiner::Min => a.min(b),
            Combiner::Gcd => a.gcd(&b),
            Combiner::Lcm => (a / a.gcd(&b))
                .checked_mul(b)
                .ok_or(Error::Overflow(a, b))?,
        })
    }
}

impl FromStr for Combiner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Combiner::Max),
            "min" => Ok(Combiner::Min),
            "gcd" => Ok(Combiner::Gcd),
            "lcm" => Ok(Combiner::Lcm),
            other => Err(Error::Parse(format!(
                "unknown combiner `{other}` (expected max, min, gcd or lcm)"
            ))),
        }
    }
}

impl fmt::Display for Combiner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Combiner::Max => "max",
            Combiner::Min => "min",
            Combiner::Gcd => "gcd",
            Combiner::Lcm => "lcm",
        })
    }
}

/// Exponent carried by position `j` of a walk with edge weights `edge_weights`.
///
/// Endpoints take their single edge weight, interior vertices `f` of both.
pub(crate) fn position_exponent(f: Combiner, edge_weights: &[u64], j: usize) -> Result<u64> {
    let r = edge_weights.len();
    match j {
        0 => Ok(edge_weights[0]),
        j if j == r => Ok(edge_weights[r - 1]),
        j => f.apply(edge_weights[j - 1], edge_weights[j]),
    }
}

pub(crate) fn path_edge_weights(g: &WeightedGraph, p: &Path) -> Vec<u64> {
    p.vertices()
        .windows(2)
        .map(|w| {
            g.weight(w[0], w[1])
                .expect("consecutive path vertices are adjacent")
        })
        .collect()
}

/// The generator contributed by the path `p`.
pub fn path_monomial(g: &WeightedGraph, f: Combiner, p: &Path) -> Result<Monomial> {
    if p.length() == 0 || !p.is_path_of(g) {
        return Err(Error::NotAPath(p.to_string()));
    }
    let weights = path_edge_weights(g, p);
    let mut exps = vec![0; g.universe()];
    for (j, &v) in p.vertices().iter().enumerate() {
        exps[v - 1] = position_exponent(f, &weights, j)?;
    }
    Ok(Monomial::from_exponents(exps))
}

/// `I_{r,f}(G_ω)` in `k[X_1, …, X_universe]`; zero when `g` has no `r`-path.
pub fn build_path_ideal(g: &WeightedGraph, f: Combiner, r: usize) -> Result<MonomialIdeal> {
    let gens = enumerate_r_paths(g, r)
        .iter()
        .map(|p| path_monomial(g, f, p))
        .collect::<Result<Vec<_>>>()?;
    minimalize(g.universe(), gens)
}

/// All `k`-element subsets of `items`, lexicographic.
pub(crate) fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Self-test: the path ideal equals the sum of the path ideals of all
/// `(r + 1)`-vertex induced subgraphs.
pub fn locality_check(g: &WeightedGraph, f: Combiner, r: usize) -> Result<bool> {
    let vertices: Vec<usize> = g.vertices().collect();
    let mut total = MonomialIdeal::zero(g.universe());
    for subset in k_subsets(&vertices, r + 1) {
        let h = induced_subgraph(g, subset)?;
        total = sum(&total, &build_path_ideal(&h, f, r)?)?;
    }
    Ok(total == build_path_ideal(g, f, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::example_tree;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    #[test]
    fn combiners() {
        assert_eq!(Combiner::Max.apply(4, 6).unwrap(), 6);
        assert_eq!(Combiner::Min.apply(4, 6).unwrap(), 4);
        assert_eq!(Combiner::Gcd.apply(4, 6).unwrap(), 2);
        assert_eq!(Combiner::Lcm.apply(4, 6).unwrap(), 12);
        for f in Combiner::ALL {
            assert_eq!(f.apply(7, 7).unwrap(), 7);
            assert_eq!(f.to_string().parse::<Combiner>().unwrap(), f);
        }
        assert_eq!(
            Combiner::Lcm.apply(u64::MAX, 2),
            Err(Error::Overflow(u64::MAX, 2))
        );
        assert!("mean".parse::<Combiner>().is_err());
    }

    #[test]
    fn path_monomials_on_example_tree() {
        let g = example_tree();
        let p = Path::new(vec![1, 2, 3, 6]);
        assert_eq!(
            path_monomial(&g, Combiner::Max, &p).unwrap().to_string(),
            "X1^2*X2^2*X3^3*X6^3"
        );
        assert_eq!(
            path_monomial(&g, Combiner::Min, &p).unwrap().to_string(),
            "X1^2*X2*X3*X6^3"
        );
        assert!(matches!(
            path_monomial(&g, Combiner::Max, &Path::new(vec![1, 3, 4])),
            Err(Error::NotAPath(_))
        ));
    }

    #[test]
    fn example_tree_3_path_ideal() {
        let i = build_path_ideal(&example_tree(), Combiner::Max, 3).unwrap();
        assert_eq!(
            i,
            ideal(
                "(X1^2*X2^2*X3^3*X6^3, X1^2*X2^2*X3^2*X4^2, X2*X3^2*X4^2*X5^2, X3^3*X4^2*X5^2*X6^3)",
                6
            )
        );
        // listed in the same order as the generators are usually written
        assert_eq!(
            i.to_string(),
            "(X1^2*X2^2*X3^3*X6^3, X1^2*X2^2*X3^2*X4^2, X2*X3^2*X4^2*X5^2, X3^3*X4^2*X5^2*X6^3)"
        );
    }

    #[test]
    fn three_clique_generators() {
        // u, v, w = 1, 2, 3 with ω(uv) = a, ω(vw) = b, ω(uw) = c
        for (a, b, c) in [(1, 2, 3), (1, 2, 2), (2, 2, 5), (1, 1, 1)] {
            let g = WeightedGraph::from_edges(3, &[(1, 2, a), (2, 3, b), (1, 3, c)]).unwrap();
            let expected = minimalize(
                3,
                [
                    Monomial::from_exponents(vec![a, b, b]),
                    Monomial::from_exponents(vec![c, a, c]),
                ],
            )
            .unwrap();
            assert_eq!(build_path_ideal(&g, Combiner::Max, 2).unwrap(), expected);
        }
    }

    #[test]
    fn four_clique_generators() {
        let g = WeightedGraph::from_edges(
            4,
            &[
                (1, 2, 2),
                (1, 3, 1),
                (1, 4, 2),
                (2, 3, 2),
                (2, 4, 2),
                (3, 4, 2),
            ],
        )
        .unwrap();
        assert_eq!(
            build_path_ideal(&g, Combiner::Max, 2).unwrap(),
            ideal(
                "(X1*X2^2*X3^2, X1^2*X2^2*X3, X1*X3^2*X4^2, X1^2*X3*X4^2, X1^2*X2^2*X4^2, X2^2*X3^2*X4^2)",
                4
            )
        );
        assert!(locality_check(&g, Combiner::Max, 2).unwrap());
    }

    #[test]
    fn no_paths_gives_zero_ideal() {
        assert!(build_path_ideal(&example_tree(), Combiner::Max, 6)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn edge_ideal_ignores_combiner() {
        let g = example_tree();
        let expected = minimalize(
            6,
            g.edges()
                .map(|(i, j, w)| Monomial::from_pairs(6, &[(i, w), (j, w)]).unwrap()),
        )
        .unwrap();
        for f in Combiner::ALL {
            assert_eq!(build_path_ideal(&g, f, 1).unwrap(), expected);
        }
    }

    #[test]
    fn locality_on_a_tree_with_r_equal_n_minus_one() {
        let path = WeightedGraph::from_edges(4, &[(1, 2, 3), (2, 3, 1), (3, 4, 2)]).unwrap();
        assert!(locality_check(&path, Combiner::Gcd, 3).unwrap());
    }

    #[test]
    fn subsets() {
        assert_eq!(k_subsets(&[1, 2, 3, 4], 2).len(), 6);
        assert_eq!(k_subsets(&[1, 2, 3], 3), vec![vec![1, 2, 3]]);
        assert_eq!(k_subsets(&[1, 2], 0), vec![Vec::<usize>::new()]);
        assert!(k_subsets(&[1, 2], 3).is_empty());
    }
}
