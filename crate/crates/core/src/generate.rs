//! Deterministic generators for the test families used throughout.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{find_cycle_of_length, forbidden_subgraph_check, ForbiddenSubgraph};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The Petersen graph: outer C5 on 0..5, inner pentagram on 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, edges).expect("petersen is well-formed")
}

/// Mycielskian of `g`: on 2n+1 vertices, vertex n+u is the shadow of u and
/// 2n is the apex. Preserves triangle-freeness and raises the chromatic
/// number by one.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for u in 0..n {
        edges.push((n + u, 2 * n));
    }
    Graph::new(2 * n + 1, edges).expect("mycielskian is well-formed")
}

/// The Grötzsch graph: Mycielskian of C5.
pub fn groetzsch() -> Graph {
    mycielskian(&cycle(5).expect("C5"))
}

/// Erdős–Rényi G(n, p), deterministic under the seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("p must be in [0,1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

fn delete_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
        .collect();
    Graph::new(g.n(), edges).expect("edge deletion keeps the graph well-formed")
}

/// G(n, p) with one edge of each triangle greedily deleted until none remain.
pub fn random_triangle_free(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut g = random_graph(n, p, seed)?;
    while let Some(tri) = forbidden_subgraph_check(&g, ForbiddenSubgraph::Triangle, usize::MAX)? {
        // drop the lexicographically largest edge of the witness
        let mut es = [
            (tri[0].min(tri[1]), tri[0].max(tri[1])),
            (tri[1].min(tri[2]), tri[1].max(tri[2])),
            (tri[0].min(tri[2]), tri[0].max(tri[2])),
        ];
        es.sort_unstable();
        g = delete_edge(&g, es[2].0, es[2].1);
    }
    Ok(g)
}

/// G(n, p) with triangles and 4-cycles destroyed, giving girth >= 5.
pub fn random_girth5(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut g = random_triangle_free(n, p, seed)?;
    while let Some(c4) = find_cycle_of_length(&g, 4) {
        let mut es: Vec<(usize, usize)> = (0..4)
            .map(|i| {
                let (a, b) = (c4[i], c4[(i + 1) % 4]);
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        g = delete_edge(&g, es[3].0, es[3].1);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn mycielskian_of_k2_is_c5() {
        let g = mycielskian(&complete(2).unwrap());
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        let stats = oracle::cycle_stats(&g, 20).unwrap();
        assert_eq!(stats.girth, Some(5));
        assert_eq!(stats.spectrum, vec![5]);
    }

    #[test]
    fn groetzsch_fixture() {
        let g = groetzsch();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 20);
        assert!(
            oracle::forbidden_subgraph_check(&g, ForbiddenSubgraph::Triangle, 30)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn cycle_7_spectrum() {
        let g = cycle(7).unwrap();
        let stats = oracle::cycle_stats(&g, 20).unwrap();
        assert_eq!(stats.spectrum, vec![7]);
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_triangle_free(12, 0.4, 7).unwrap();
        let b = random_triangle_free(12, 0.4, 7).unwrap();
        assert_eq!(a, b);
        assert!(
            forbidden_subgraph_check(&a, ForbiddenSubgraph::Triangle, 30)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn girth5_family_has_girth_at_least_5() {
        let g = random_girth5(14, 0.4, 3).unwrap();
        let stats = oracle::cycle_stats(&g, 20).unwrap();
        if let Some(girth) = stats.girth {
            assert!(girth >= 5);
        }
    }
}
