#![allow(dead_code)]

use pidom::{Graph, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum weight over every labeling in `{0..=max}^n`, checked directly
/// from neighbor sums. Independent of the branch-and-bound search and of
/// `pidom::is_valid`.
pub fn brute_force_optimum(g: &Graph, variant: Variant) -> usize {
    let n = g.n();
    let base: u32 = if variant == Variant::Domination { 2 } else { 3 };
    let total = (base as u64).pow(n as u32);
    let mut labels = vec![0u8; n];
    let mut best = usize::MAX;
    for code in 0..total {
        let mut c = code;
        for slot in labels.iter_mut() {
            *slot = (c % base as u64) as u8;
            c /= base as u64;
        }
        let weight: usize = labels.iter().map(|&x| x as usize).sum();
        if weight >= best {
            continue;
        }
        let ok = (0..n).all(|v| {
            if labels[v] != 0 {
                return true;
            }
            let ns = g.neighbors(v);
            let sum: u32 = ns.iter().map(|&u| labels[u] as u32).sum();
            match variant {
                Variant::PerfectItalian => sum == 2,
                Variant::Italian => sum >= 2,
                Variant::Roman => ns.iter().any(|&u| labels[u] == 2),
                Variant::Domination => sum >= 1,
            }
        });
        if ok {
            best = weight;
        }
    }
    best
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with a random edge density.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random spanning tree plus random extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut b = pidom::GraphBuilder::new(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        b.add_edge(parent, v).unwrap();
    }
    let extra: f64 = rng.gen_range(0.0..0.5);
    for u in 0..n {
        for v in u + 1..n {
            if !b.has_edge(u, v) && rng.gen_bool(extra) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

/// `count` random graphs with between 1 and `max_n` vertices.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            random_graph(&mut r, n)
        })
        .collect()
}
