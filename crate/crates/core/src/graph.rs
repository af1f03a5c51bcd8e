//! Finite simple undirected graphs, family generators and combinators.
//!
//! Vertices are the identifiers `0..n`. A [`Graph`] is immutable once built;
//! use [`GraphBuilder`] to assemble one edge at a time.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    num_edges: usize,
    names: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            num_edges: 0,
            names: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `v`: its annotation if present, otherwise the identifier.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    /// Same graph with the vertex annotations dropped.
    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    num_edges: usize,
    names: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
            num_edges: 0,
            names: vec![None; n],
        }
    }

    /// Starts from a copy of `g`, keeping its annotations.
    pub fn from_graph(g: &Graph) -> Self {
        let names = match &g.names {
            Some(ns) => ns.iter().cloned().map(Some).collect(),
            None => vec![None; g.n()],
        };
        GraphBuilder {
            adj: g.adj.clone(),
            num_edges: g.num_edges,
            names,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Appends a vertex and returns its identifier.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.names.push(None);
        self.adj.len() - 1
    }

    pub fn add_named_vertex(&mut self, name: impl Into<String>) -> usize {
        let v = self.add_vertex();
        self.names[v] = Some(name.into());
        v
    }

    pub fn set_name(&mut self, v: usize, name: impl Into<String>) -> Result<()> {
        self.check(v)?;
        self.names[v] = Some(name.into());
        Ok(())
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.num_edges += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn build(self) -> Graph {
        let GraphBuilder {
            mut adj,
            num_edges,
            names,
        } = self;
        for ns in adj.iter_mut() {
            ns.sort_unstable();
        }
        let names = if names.iter().any(Option::is_some) {
            Some(
                names
                    .into_iter()
                    .enumerate()
                    .map(|(v, s)| s.unwrap_or_else(|| v.to_string()))
                    .collect(),
            )
        } else {
            None
        };
        Graph {
            adj,
            num_edges,
            names,
        }
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

/// The cycle `C_n`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges = (1..n).map(|i| (i - 1, i)).chain(std::iter::once((0, n - 1)));
    Graph::from_edges(n, edges)
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph edges are simple")
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are simple")
}

/// Complete multipartite graph, parts numbered consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(GraphError::InvalidFamily("no parts given".into()));
    }
    if parts.contains(&0) {
        return Err(GraphError::InvalidFamily("part of size 0".into()));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// `g □ h`; vertex `(u, v)` gets identifier `u * h.n() + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let mut b = GraphBuilder::new(g.n() * m);
    for u in 0..g.n() {
        for (v1, v2) in h.edges() {
            b.add_edge(u * m + v1, u * m + v2).expect("product edges are simple");
        }
    }
    for (u1, u2) in g.edges() {
        for v in 0..m {
            b.add_edge(u1 * m + v, u2 * m + v).expect("product edges are simple");
        }
    }
    b.build()
}

/// Disjoint union; vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::new(off + h.n());
    for (u, v) in g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))) {
        b.add_edge(u, v).expect("union edges are simple");
    }
    b.build()
}

/// `g ∨ h`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::from_graph(&disjoint_union(g, h));
    for u in 0..g.n() {
        for v in 0..h.n() {
            b.add_edge(u, off + v).expect("join edges are simple");
        }
    }
    b.build()
}

/// Subgraph induced by `vertices`, renumbered `0..len` in ascending order
/// of the original identifiers. Annotations are carried over.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    if vertices.is_empty() {
        return Err(GraphError::EmptyVertexSet);
    }
    let mut keep = vertices.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        index[v] = i;
    }
    let mut b = GraphBuilder::new(keep.len());
    for (u, v) in g.edges() {
        if index[u] != usize::MAX && index[v] != usize::MAX {
            b.add_edge(index[u], index[v])?;
        }
    }
    if let Some(names) = g.names() {
        for (i, &v) in keep.iter().enumerate() {
            b.set_name(i, names[v].clone())?;
        }
    }
    Ok(b.build())
}

/// Named graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// `K_{1,n}`: a center plus `n` leaves.
    Star(usize),
    /// Part sizes in nondecreasing order.
    CompleteMultipartite(Vec<usize>),
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn product(g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec::CartesianProduct(Box::new(g), Box::new(h))
    }

    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |msg: String| Err(GraphError::InvalidFamily(msg));
        match self {
            Path(0) | Complete(0) | Empty(0) | Star(0) => bad(format!("{self}: size must be at least 1")),
            Cycle(n) if *n < 3 => bad(format!("cycle needs at least 3 vertices, got {n}")),
            CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    bad("no parts given".into())
                } else if parts.contains(&0) {
                    bad("part of size 0".into())
                } else if parts.windows(2).any(|w| w[0] > w[1]) {
                    bad(format!("part sizes {parts:?} are not nondecreasing"))
                } else {
                    Ok(())
                }
            }
            CartesianProduct(g, h) => {
                g.validate()?;
                h.validate()
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) | Empty(n) => *n,
            Star(n) => n + 1,
            CompleteMultipartite(parts) => parts.iter().sum(),
            CartesianProduct(g, h) => g.order() * h.order(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Complete(n) => write!(f, "K{n}"),
            Empty(n) => write!(f, "E{n}"),
            Star(n) => write!(f, "K1,{n}"),
            CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "K{}", parts.join(","))
            }
            CartesianProduct(g, h) => write!(f, "{g}x{h}"),
        }
    }
}

/// Builds the graph named by `spec` with canonical numbering.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    Ok(match spec {
        Path(n) => path(*n),
        Cycle(n) => cycle(*n)?,
        Complete(n) => complete(*n),
        Empty(n) => Graph::empty(*n),
        Star(n) => star(*n),
        CompleteMultipartite(parts) => complete_multipartite(parts)?,
        CartesianProduct(g, h) => cartesian_product(&generate(g)?, &generate(h)?),
    })
}

/// Serializes to the edge-list format: vertex count, then one sorted
/// `u v` line per edge.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Like [`serialize_edge_list`], preceded by `# vertex <id> <name>` comments
/// when the graph carries annotations.
pub fn serialize_edge_list_named(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(names) = g.names() {
        for (v, name) in names.iter().enumerate() {
            out.push_str(&format!("# vertex {v} {name}\n"));
        }
    }
    out.push_str(&serialize_edge_list(g));
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| GraphError::Parse { line, message };
    let mut builder: Option<GraphBuilder> = None;
    let mut names: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.split_whitespace();
            if parts.next() == Some("vertex") {
                if let (Some(id), Some(name)) = (parts.next(), parts.next()) {
                    if let Ok(id) = id.parse::<usize>() {
                        names.push((line_no, id, name.to_string()));
                    }
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match builder.as_mut() {
            None => {
                if fields.len() != 1 {
                    return Err(err(line_no, format!("expected vertex count, found {line:?}")));
                }
                let n = fields[0]
                    .parse::<usize>()
                    .map_err(|_| err(line_no, format!("invalid vertex count {:?}", fields[0])))?;
                builder = Some(GraphBuilder::new(n));
            }
            Some(b) => {
                if fields.len() != 2 {
                    return Err(err(line_no, format!("expected edge \"u v\", found {line:?}")));
                }
                let mut ends = [0usize; 2];
                for (slot, field) in ends.iter_mut().zip(&fields) {
                    *slot = field
                        .parse()
                        .map_err(|_| err(line_no, format!("invalid vertex {field:?}")))?;
                }
                let [u, v] = ends;
                b.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
            }
        }
    }

    let mut b = builder.ok_or_else(|| err(text.lines().count().max(1), "missing vertex count".into()))?;
    for (line_no, id, name) in names {
        b.set_name(id, name).map_err(|e| err(line_no, e.to_string()))?;
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn path_three() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(edge_set(&g), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn singleton_parts_give_triangle() {
        let g = generate(&FamilySpec::CompleteMultipartite(vec![1, 1, 1])).unwrap();
        assert_eq!(g, complete(3));
    }

    #[test]
    fn p2_times_p2_is_four_cycle() {
        let g = generate(&FamilySpec::product(FamilySpec::Path(2), FamilySpec::Path(2))).unwrap();
        // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
        assert_eq!(edge_set(&g), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(g.neighbors(0).len() == 2 && (0..4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn product_sizes() {
        let k2k2 = cartesian_product(&complete(2), &complete(2));
        assert_eq!((k2k2.n(), k2k2.num_edges()), (4, 4));
        let grid = cartesian_product(&path(2), &path(4));
        assert_eq!((grid.n(), grid.num_edges()), (8, 10));
        let prism = cartesian_product(&complete(2), &complete(3));
        assert_eq!((prism.n(), prism.num_edges()), (6, 9));
        assert!((0..6).all(|v| prism.degree(v) == 3));
    }

    #[test]
    fn joins() {
        assert_eq!(join(&Graph::empty(1), &Graph::empty(1)), complete(2));
        let c4 = join(&Graph::empty(2), &Graph::empty(2));
        assert_eq!(c4, complete_multipartite(&[2, 2]).unwrap());
        let base = join(&Graph::empty(3), &path(2));
        assert_eq!(base.num_edges(), 1 + 3 * 2);
    }

    #[test]
    fn induced() {
        let c4 = cycle(4).unwrap();
        assert_eq!(induced_subgraph(&c4, &[0, 1, 2]).unwrap(), path(3));
        assert_eq!(induced_subgraph(&complete(5), &[4, 1, 3]).unwrap(), complete(3));
        assert_eq!(induced_subgraph(&c4, &[]), Err(GraphError::EmptyVertexSet));
        assert!(matches!(
            induced_subgraph(&c4, &[7]),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn family_errors() {
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::Path(0)).is_err());
        assert!(generate(&FamilySpec::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(generate(&FamilySpec::CompleteMultipartite(vec![3, 2])).is_err());
        assert!(generate(&FamilySpec::product(FamilySpec::Path(2), FamilySpec::Cycle(1))).is_err());
    }

    #[test]
    fn serialize_triangle() {
        assert_eq!(serialize_edge_list(&complete(3)), "3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn parse_path() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2\n").unwrap(), path(3));
        assert_eq!(parse_edge_list("# comment\n\n3\n# more\n1 2\n0 1\n").unwrap(), path(3));
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert_eq!(
            parse_edge_list("2\n0 0\n"),
            Err(GraphError::Parse {
                line: 2,
                message: "self-loop at vertex 0".into()
            })
        );
        match parse_edge_list("3\n0 1\n1 0\n") {
            Err(GraphError::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("# c\n3\n0 5\n") {
            Err(GraphError::Parse { line: 3, message }) => assert!(message.contains("out of range")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list("x\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("# only\n"), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn names_round_trip() {
        let mut b = GraphBuilder::new(2);
        b.add_edge(0, 1).unwrap();
        b.set_name(1, "u").unwrap();
        let g = b.build();
        let text = serialize_edge_list_named(&g);
        assert_eq!(text, "# vertex 0 0\n# vertex 1 u\n2\n0 1\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.vertex_by_name("u"), Some(1));
        assert_eq!(back, g);
    }
}
