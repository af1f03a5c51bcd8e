//! Exact domination numbers by depth-first branch and bound over labelings.
//!
//! Vertices are labeled one at a time in a fixed order, trying labels in
//! ascending order. A branch is cut as soon as its partial weight cannot beat
//! the incumbent, or some 0-labeled vertex can no longer meet its condition
//! given the labels already placed around it. With the identifier order the
//! first optimum reached is the lexicographically smallest one.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{Labeling, Variant};

/// Default ceiling on the vertex count accepted by [`solve`].
pub const DEFAULT_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {n} vertices, above the solver limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Order in which the search assigns vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// `0, 1, ..., n-1`. Witnesses are lexicographically least.
    #[default]
    Identifier,
    /// Highest degree first, ties by identifier. Same optimum, but the
    /// witness is only least with respect to this order.
    DegreeDescending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_vertices: usize,
    pub order: VertexOrder,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            order: VertexOrder::Identifier,
        }
    }
}

impl SolveOptions {
    pub fn unlimited() -> Self {
        SolveOptions {
            max_vertices: usize::MAX,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: Labeling,
    pub nodes_explored: u64,
}

/// Optimal labelings in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optima {
    pub optimum: usize,
    pub labelings: Vec<Labeling>,
    /// Set when more optima exist than the cap allowed.
    pub truncated: bool,
}

pub fn solve(g: &Graph, variant: Variant) -> Result<SolveResult, SolveError> {
    solve_with(g, variant, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, variant: Variant, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    check_size(g, opts)?;
    let mut search = Search::new(g, variant, opts.order, Goal::optimize(g.n()));
    search.run();
    let Goal::Optimize { ref witness, best } = search.goal else {
        unreachable!()
    };
    // the all-ones labeling is valid for every variant, so a witness exists
    let witness = witness.as_ref().expect("search always reaches a valid labeling");
    Ok(SolveResult {
        optimum: best,
        witness: Labeling::from_values_unchecked(search.unpermute(witness)),
        nodes_explored: search.nodes,
    })
}

/// Every optimal labeling, up to `cap` of them.
pub fn enumerate_optima(g: &Graph, variant: Variant, cap: usize) -> Result<Optima, SolveError> {
    enumerate_optima_with(g, variant, cap, &SolveOptions::default())
}

pub fn enumerate_optima_with(
    g: &Graph,
    variant: Variant,
    cap: usize,
    opts: &SolveOptions,
) -> Result<Optima, SolveError> {
    let optimum = solve_with(g, variant, opts)?.optimum;
    let mut search = Search::new(
        g,
        variant,
        opts.order,
        Goal::Enumerate {
            target: optimum,
            cap,
            found: Vec::new(),
            truncated: false,
        },
    );
    search.run();
    let Goal::Enumerate { ref found, truncated, .. } = search.goal else {
        unreachable!()
    };
    let mut labelings: Vec<Labeling> = found
        .iter()
        .map(|vals| Labeling::from_values_unchecked(search.unpermute(vals)))
        .collect();
    labelings.sort();
    Ok(Optima {
        optimum,
        labelings,
        truncated,
    })
}

fn check_size(g: &Graph, opts: &SolveOptions) -> Result<(), SolveError> {
    if g.is_empty() {
        return Err(SolveError::EmptyGraph);
    }
    if g.n() > opts.max_vertices {
        return Err(SolveError::TooLarge {
            n: g.n(),
            limit: opts.max_vertices,
        });
    }
    Ok(())
}

enum Goal {
    /// Find labelings strictly lighter than `best`.
    Optimize { best: usize, witness: Option<Vec<u8>> },
    /// Collect labelings of weight exactly `target`.
    Enumerate {
        target: usize,
        cap: usize,
        found: Vec<Vec<u8>>,
        truncated: bool,
    },
}

impl Goal {
    fn optimize(n: usize) -> Self {
        // Seeded by the all-ones labeling of weight n. The bound is kept
        // inclusive so that the least weight-n labeling is still reported.
        Goal::Optimize {
            best: n + 1,
            witness: None,
        }
    }
}

/// Search state over the permuted graph: position `i` is the i-th vertex
/// to be labeled.
struct Search {
    variant: Variant,
    order: Vec<usize>,
    adj: Vec<Vec<usize>>,
    labels: Vec<u8>,
    assigned: Vec<bool>,
    sum: Vec<u32>,
    twos: Vec<u32>,
    pending: Vec<u32>,
    weight: usize,
    nodes: u64,
    goal: Goal,
}

impl Search {
    fn new(g: &Graph, variant: Variant, order: VertexOrder, goal: Goal) -> Self {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        if order == VertexOrder::DegreeDescending {
            perm.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        }
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let adj: Vec<Vec<usize>> = perm
            .iter()
            .map(|&v| g.neighbors(v).iter().map(|&w| pos[w]).collect())
            .collect();
        let pending = adj.iter().map(|ns| ns.len() as u32).collect();
        Search {
            variant,
            order: perm,
            adj,
            labels: vec![0; n],
            assigned: vec![false; n],
            sum: vec![0; n],
            twos: vec![0; n],
            pending,
            weight: 0,
            nodes: 0,
            goal,
        }
    }

    fn unpermute(&self, vals: &[u8]) -> Vec<u8> {
        let mut out = vec![0; vals.len()];
        for (i, &v) in self.order.iter().enumerate() {
            out[v] = vals[i];
        }
        out
    }

    fn run(&mut self) {
        self.descend(0);
    }

    /// Whether a 0-labeled vertex can still be satisfied.
    #[inline]
    fn feasible(&self, v: usize) -> bool {
        let (sum, twos, pending) = (self.sum[v], self.twos[v], self.pending[v]);
        match self.variant {
            Variant::PerfectItalian => sum <= 2 && sum + 2 * pending >= 2,
            Variant::Italian => sum + 2 * pending >= 2,
            Variant::Roman => twos > 0 || pending > 0,
            Variant::Domination => sum + pending >= 1,
        }
    }

    #[inline]
    fn admits(&self, x: u8) -> bool {
        let w = self.weight + x as usize;
        match &self.goal {
            Goal::Optimize { best, .. } => w < *best,
            Goal::Enumerate { target, .. } => w <= *target,
        }
    }

    fn done(&self) -> bool {
        matches!(self.goal, Goal::Enumerate { truncated: true, .. })
    }

    fn descend(&mut self, i: usize) {
        self.nodes += 1;
        if i == self.labels.len() {
            self.record_leaf();
            return;
        }
        for x in 0..=self.variant.max_label() {
            if !self.admits(x) {
                // labels only get heavier from here
                break;
            }
            if self.assign(i, x) {
                self.descend(i + 1);
            }
            self.unassign(i, x);
            if self.done() {
                return;
            }
        }
    }

    /// Labels position `i` with `x` and reports whether every constraint
    /// touched by the change is still satisfiable.
    fn assign(&mut self, i: usize, x: u8) -> bool {
        self.labels[i] = x;
        self.assigned[i] = true;
        self.weight += x as usize;
        let mut ok = true;
        for k in 0..self.adj[i].len() {
            let w = self.adj[i][k];
            self.sum[w] += x as u32;
            self.twos[w] += (x == 2) as u32;
            self.pending[w] -= 1;
            if ok && self.assigned[w] && self.labels[w] == 0 && !self.feasible(w) {
                ok = false;
            }
        }
        ok && (x != 0 || self.feasible(i))
    }

    fn unassign(&mut self, i: usize, x: u8) {
        for k in 0..self.adj[i].len() {
            let w = self.adj[i][k];
            self.sum[w] -= x as u32;
            self.twos[w] -= (x == 2) as u32;
            self.pending[w] += 1;
        }
        self.weight -= x as usize;
        self.assigned[i] = false;
        self.labels[i] = 0;
    }

    fn record_leaf(&mut self) {
        let weight = self.weight;
        match &mut self.goal {
            Goal::Optimize { best, witness } => {
                if weight < *best {
                    *best = weight;
                    *witness = Some(self.labels.clone());
                }
            }
            Goal::Enumerate {
                target,
                cap,
                found,
                truncated,
            } => {
                if weight == *target {
                    if found.len() < *cap {
                        found.push(self.labels.clone());
                    } else {
                        *truncated = true;
                    }
                }
            }
        }
    }
}
