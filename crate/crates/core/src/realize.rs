//! Gadget graphs that realize prescribed pairs of domination values.
//!
//! Two families of constructions live here: a graph together with an
//! induced subgraph whose perfect Italian numbers are `(a, b)`, and graphs
//! whose Roman and perfect Italian numbers are `(a, b)`. Builders follow the
//! published constructions literally; they do not certify the values. Use
//! the solver for that.

use thiserror::Error;

use crate::graph::{join, path, Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no construction for (a={a}, b={b}): {reason}")]
    Unsupported { a: usize, b: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, RealizeError>;

/// Default size of the independent side `K_p^c` in the join-based gadgets.
pub const DEFAULT_P: usize = 3;

/// Parameters of one gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionSpec {
    /// Graph plus induced subgraph with perfect Italian numbers `a` and `b`.
    InducedPair { a: usize, b: usize },
    /// `K_p^c ∨ P_{base-3}`, a vertex `u` adjacent to all of it, a pendant
    /// on the last path vertex, and `chains` copies of `P_3` hung in a
    /// chain from `u`. Claimed `(3 + 2·chains, base + 2·chains)`.
    RomanPidOddBase { base: usize, p: usize, chains: usize },
    /// `K_p^c ∨ P_{base-4}`, `u` adjacent to all of it, an edge `pq` with
    /// both ends on the last path vertex, and `chains` hung `P_3`'s.
    /// Claimed `(4 + 2·chains, base + 2·chains)`.
    RomanPidEvenBase { base: usize, p: usize, chains: usize },
    /// `P_{2a-1}` plus a hub on the even positions and both ends.
    /// Claimed `(a, a)`.
    RomanPidEqualOdd { a: usize },
    /// `b` independent vertices and one common neighbor per pair, with the
    /// first `deleted` pair-vertices (lexicographic) removed.
    /// Claimed `(2b - 1 - deleted, b)`.
    RomanPidPairGadget { b: usize, deleted: usize },
}

impl ConstructionSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(RealizeError::InvalidParameters(msg));
        match *self {
            ConstructionSpec::InducedPair { a, b } if a < 3 || b < 3 => {
                bad(format!("a and b must be at least 3, got a={a}, b={b}"))
            }
            ConstructionSpec::RomanPidOddBase { base, p, .. } if base < 4 || p < 1 => {
                bad(format!("odd-base gadget needs base >= 4 and p >= 1, got base={base}, p={p}"))
            }
            ConstructionSpec::RomanPidEvenBase { base, p, .. } if base < 5 || p < 1 => {
                bad(format!("even-base gadget needs base >= 5 and p >= 1, got base={base}, p={p}"))
            }
            ConstructionSpec::RomanPidEqualOdd { a } if a < 3 || a % 2 == 0 => {
                bad(format!("hub gadget needs odd a >= 3, got {a}"))
            }
            ConstructionSpec::RomanPidPairGadget { b, deleted } if b < 3 || deleted > b - 2 => {
                bad(format!("pair gadget needs b >= 3 and deleted <= b - 2, got b={b}, deleted={deleted}"))
            }
            _ => Ok(()),
        }
    }

    /// The `(a, b)` pair the construction is published to attain: perfect
    /// Italian numbers of graph and subgraph for [`InducedPair`], Roman and
    /// perfect Italian numbers otherwise.
    ///
    /// [`InducedPair`]: ConstructionSpec::InducedPair
    pub fn claimed(&self) -> (usize, usize) {
        match *self {
            ConstructionSpec::InducedPair { a, b } => (a, b),
            ConstructionSpec::RomanPidOddBase { base, chains, .. } => (3 + 2 * chains, base + 2 * chains),
            ConstructionSpec::RomanPidEvenBase { base, chains, .. } => (4 + 2 * chains, base + 2 * chains),
            ConstructionSpec::RomanPidEqualOdd { a } => (a, a),
            ConstructionSpec::RomanPidPairGadget { b, deleted } => (2 * b - 1 - deleted, b),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            ConstructionSpec::InducedPair { a, b } => realize_induced(a, b)?.graph,
            ConstructionSpec::RomanPidOddBase { base, p, chains } => odd_base(base, p, chains),
            ConstructionSpec::RomanPidEvenBase { base, p, chains } => even_base(base, p, chains),
            ConstructionSpec::RomanPidEqualOdd { a } => equal_odd(a),
            ConstructionSpec::RomanPidPairGadget { b, deleted } => pair_gadget(b, deleted),
        })
    }
}

/// A graph and the vertex set of the induced subgraph of interest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedRealization {
    pub graph: Graph,
    pub subgraph_vertices: Vec<usize>,
}

/// Graph `G` with an induced subgraph `H` where `γ_I^p(G) = a` and
/// `γ_I^p(H) = b`, for `a, b >= 3`.
///
/// For `b <= a`, `G = P_{2a-1}` and `H` is its first `2b - 1` vertices.
/// For `b > a`, `G` is `P_{2b-1}` plus two vertices `u`, `v` adjacent to
/// `v_{2a-3}, ..., v_{2b-1}`, with `v_{2a-4}` also adjacent to `v`; `H` is the
/// path.
pub fn realize_induced(a: usize, b: usize) -> Result<InducedRealization> {
    if a < 3 || b < 3 {
        return Err(RealizeError::InvalidParameters(format!(
            "a and b must be at least 3, got a={a}, b={b}"
        )));
    }
    if b <= a {
        return Ok(InducedRealization {
            graph: named_path(2 * a - 1).build(),
            subgraph_vertices: (0..2 * b - 1).collect(),
        });
    }
    let len = 2 * b - 1;
    let mut gb = named_path(len);
    let u = gb.add_named_vertex("u");
    let v = gb.add_named_vertex("v");
    // path vertex v_i is identifier i - 1
    for i in (2 * a - 3)..=len {
        add(&mut gb, u, i - 1);
        add(&mut gb, v, i - 1);
    }
    add(&mut gb, v, 2 * a - 5);
    Ok(InducedRealization {
        graph: gb.build(),
        subgraph_vertices: (0..len).collect(),
    })
}

/// A graph with `γ_R = a` and `γ_I^p = b`, dispatched to the construction
/// covering `(a, b)`. `p` sizes the independent side of the join-based
/// gadgets.
pub fn realize_roman_vs_pid(a: usize, b: usize, p: usize) -> Result<Graph> {
    roman_vs_pid_spec(a, b, p)?.build()
}

/// The construction [`realize_roman_vs_pid`] uses for `(a, b)`.
pub fn roman_vs_pid_spec(a: usize, b: usize, p: usize) -> Result<ConstructionSpec> {
    let unsupported = |reason: &str| RealizeError::Unsupported {
        a,
        b,
        reason: reason.to_string(),
    };
    if a < 3 || b < 3 {
        return Err(unsupported("a and b must be at least 3"));
    }
    if a > 2 * b - 1 {
        return Err(unsupported("Roman number exceeds 2b - 1"));
    }
    let spec = if a < b && a % 2 == 1 {
        let chains = (a - 3) / 2;
        ConstructionSpec::RomanPidOddBase {
            base: b - 2 * chains,
            p,
            chains,
        }
    } else if a < b {
        let chains = (a - 4) / 2;
        ConstructionSpec::RomanPidEvenBase {
            base: b - 2 * chains,
            p,
            chains,
        }
    } else if a == b && a % 2 == 1 {
        ConstructionSpec::RomanPidEqualOdd { a }
    } else if a == b {
        return Err(unsupported("no construction is known for a = b even"));
    } else {
        ConstructionSpec::RomanPidPairGadget {
            b,
            deleted: 2 * b - 1 - a,
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn add(gb: &mut GraphBuilder, u: usize, v: usize) {
    gb.add_edge(u, v).expect("gadget edges are simple");
}

fn named_path(n: usize) -> GraphBuilder {
    let mut gb = GraphBuilder::from_graph(&path(n));
    for i in 0..n {
        gb.set_name(i, format!("v_{}", i + 1)).expect("in range");
    }
    gb
}

/// `K_p^c ∨ P_len` plus a vertex `u` adjacent to all of it. Returns the
/// builder, the last path vertex and `u`.
fn join_base(p: usize, len: usize) -> (GraphBuilder, usize, usize) {
    let mut gb = GraphBuilder::from_graph(&join(&Graph::empty(p), &path(len)));
    for i in 0..p {
        gb.set_name(i, format!("x_{}", i + 1)).expect("in range");
    }
    for j in 0..len {
        gb.set_name(p + j, format!("w_{}", j + 1)).expect("in range");
    }
    let u = gb.add_named_vertex("u");
    for w in 0..p + len {
        add(&mut gb, u, w);
    }
    (gb, p + len - 1, u)
}

/// Hangs `chains` copies of `P_3` from `anchor`: each copy's first vertex is
/// joined to the previous copy's last vertex.
fn hang_chains(gb: &mut GraphBuilder, anchor: usize, chains: usize) {
    let mut prev = anchor;
    for t in 1..=chains {
        let ids: Vec<usize> = (1..=3).map(|i| gb.add_named_vertex(format!("c{t}_{i}"))).collect();
        add(gb, ids[0], ids[1]);
        add(gb, ids[1], ids[2]);
        add(gb, prev, ids[0]);
        prev = ids[2];
    }
}

fn odd_base(base: usize, p: usize, chains: usize) -> Graph {
    let (mut gb, end, u) = join_base(p, base - 3);
    let v = gb.add_named_vertex("v");
    add(&mut gb, end, v);
    hang_chains(&mut gb, u, chains);
    gb.build()
}

fn even_base(base: usize, p: usize, chains: usize) -> Graph {
    let (mut gb, end, u) = join_base(p, base - 4);
    let pv = gb.add_named_vertex("p");
    let qv = gb.add_named_vertex("q");
    add(&mut gb, pv, qv);
    add(&mut gb, end, pv);
    add(&mut gb, end, qv);
    hang_chains(&mut gb, u, chains);
    gb.build()
}

fn equal_odd(a: usize) -> Graph {
    let len = 2 * a - 1;
    let mut gb = named_path(len);
    let u = gb.add_named_vertex("u");
    // v_2, v_4, ..., v_{2a-2}, then v_1 and v_{2a-1}
    for i in (1..len).step_by(2) {
        add(&mut gb, u, i);
    }
    add(&mut gb, u, 0);
    add(&mut gb, u, len - 1);
    gb.build()
}

fn pair_gadget(b: usize, deleted: usize) -> Graph {
    let mut gb = GraphBuilder::new(0);
    for i in 1..=b {
        gb.add_named_vertex(format!("v_{i}"));
    }
    let pairs = (0..b).flat_map(|i| (i + 1..b).map(move |j| (i, j)));
    for (i, j) in pairs.skip(deleted) {
        let w = gb.add_named_vertex(format!("u_{}{}", i + 1, j + 1));
        add(&mut gb, w, i);
        add(&mut gb, w, j);
    }
    gb.build()
}

/// Whether some vertex is adjacent to all others, or some pair of vertices
/// (adjacent or not) has every other vertex adjacent to both.
pub fn has_obs5_structure(g: &Graph) -> bool {
    let n = g.n();
    if (0..n).any(|v| g.degree(v) + 1 == n) {
        return true;
    }
    for v in 0..n {
        for w in v + 1..n {
            let others = n - 2;
            let shared = g
                .neighbors(v)
                .iter()
                .filter(|&&x| x != w && g.has_edge(w, x))
                .count();
            if shared == others {
                return true;
            }
        }
    }
    false
}
