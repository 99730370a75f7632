//! Labeled rooted trees stored as parent maps.
//!
//! A [`LabeledRootedTree`] lives on an arbitrary finite set of labels (not
//! necessarily contiguous), which lets the same type describe the tree part
//! of a G-configuration, a tree on `[n]`, and a planted tree on `{0, ..., n}`.
//! Children are always reported in ascending label order so every traversal
//! in the crate is deterministic.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl Vertex {
    pub const fn label(self) -> u32 {
        self.0
    }

    pub(crate) const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Vertex {
    fn from(label: u32) -> Self {
        Vertex(label)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("vertex {0} is not in the tree")]
    VertexNotInTree(Vertex),
    #[error("vertex {0} is given more than one parent")]
    DuplicateParent(Vertex),
    #[error("root {0} is given a parent")]
    RootHasParent(Vertex),
    #[error("vertex {0} does not reach the root")]
    Unreachable(Vertex),
    #[error("a tree on [n] needs n >= 1")]
    EmptyTree,
    #[error("root {root} is outside 1..={n}")]
    RootOutOfRange { root: Vertex, n: usize },
    #[error("Prüfer sequence for n = {n} must have length {expected}, got {actual}")]
    WrongSequenceLength {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("Prüfer entry {entry} is outside 1..={n}")]
    EntryOutOfRange { entry: Vertex, n: usize },
    #[error("tree vertex set is not {{1, ..., {0}}}")]
    NotContiguous(usize),
    #[error("planted tree must be rooted at 0, found root {0}")]
    PlantedRootNotZero(Vertex),
    #[error("planted root must have exactly one child, found {0}")]
    PlantedRootDegree(usize),
    #[error("planted tree must have vertex set {{0, ..., n}} with n >= 1")]
    PlantedVertexSet,
    #[error("malformed tree text in field `{field}`: {message}")]
    Parse {
        field: &'static str,
        message: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Link {
    Absent,
    Root,
    Parent(Vertex),
}

/// A tree on a finite set of labels with a designated root.
///
/// Equality is structural: same vertex set, same root, same parent map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledRootedTree {
    root: Vertex,
    /// Indexed by label; the vector is exactly `max_label + 1` long.
    links: Vec<Link>,
    len: usize,
}

impl LabeledRootedTree {
    /// The one-vertex tree.
    pub fn singleton(root: Vertex) -> Self {
        let mut links = vec![Link::Absent; root.index() + 1];
        links[root.index()] = Link::Root;
        LabeledRootedTree {
            root,
            links,
            len: 1,
        }
    }

    /// Builds a tree from `(parent, child)` pairs. The vertex set is the root
    /// together with every label that appears in an edge.
    pub fn from_parent_edges<I>(root: Vertex, edges: I) -> Result<Self, TreeError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let max = edges
            .iter()
            .flat_map(|&(p, c)| [p, c])
            .chain(std::iter::once(root))
            .max()
            .unwrap_or(root);
        let mut links = vec![Link::Absent; max.index() + 1];
        links[root.index()] = Link::Root;
        for &(parent, child) in &edges {
            if child == root {
                return Err(TreeError::RootHasParent(root));
            }
            if let Link::Parent(_) = links[child.index()] {
                return Err(TreeError::DuplicateParent(child));
            }
            links[child.index()] = Link::Parent(parent);
        }
        for &(parent, _) in &edges {
            if links[parent.index()] == Link::Absent {
                // A parent that never appears as a child cannot reach the root.
                return Err(TreeError::Unreachable(parent));
            }
        }
        let tree = LabeledRootedTree {
            root,
            links,
            len: edges.len() + 1,
        };
        tree.check_reaches_root()?;
        Ok(tree)
    }

    pub(crate) fn from_links_unchecked(
        root: Vertex,
        parents: &[Option<Vertex>],
        len: usize,
    ) -> Self {
        let mut links: Vec<Link> = parents
            .iter()
            .map(|p| match p {
                Some(p) => Link::Parent(*p),
                None => Link::Absent,
            })
            .collect();
        links[root.index()] = Link::Root;
        while links.last() == Some(&Link::Absent) {
            links.pop();
        }
        LabeledRootedTree { root, links, len }
    }

    fn check_reaches_root(&self) -> Result<(), TreeError> {
        // 0 = unknown, 1 = on current walk, 2 = known to reach root
        let mut state = vec![0u8; self.links.len()];
        state[self.root.index()] = 2;
        let mut walk = Vec::new();
        for v in self.vertices() {
            let mut cur = v;
            while state[cur.index()] == 0 {
                state[cur.index()] = 1;
                walk.push(cur);
                match self.links[cur.index()] {
                    Link::Parent(p) => cur = p,
                    _ => return Err(TreeError::Unreachable(v)),
                }
            }
            if state[cur.index()] == 1 {
                return Err(TreeError::Unreachable(v));
            }
            for w in walk.drain(..) {
                state[w.index()] = 2;
            }
        }
        Ok(())
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        matches!(
            self.links.get(v.index()),
            Some(Link::Root | Link::Parent(_))
        )
    }

    /// Vertices in ascending label order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.links
            .iter()
            .enumerate()
            .filter(|(_, l)| **l != Link::Absent)
            .map(|(i, _)| Vertex(i as u32))
    }

    /// Parent of `v`; `None` for the root and for labels outside the tree.
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.links.get(v.index()) {
            Some(Link::Parent(p)) => Some(*p),
            _ => None,
        }
    }

    pub fn children(&self, v: Vertex) -> Result<Vec<Vertex>, TreeError> {
        if !self.contains(v) {
            return Err(TreeError::VertexNotInTree(v));
        }
        Ok(self
            .links
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Link::Parent(v))
            .map(|(i, _)| Vertex(i as u32))
            .collect())
    }

    /// Child count for every label (zero for labels outside the tree).
    pub(crate) fn child_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.links.len()];
        for link in &self.links {
            if let Link::Parent(p) = link {
                counts[p.index()] += 1;
            }
        }
        counts
    }

    /// Undirected degree of `v` in the underlying tree.
    pub fn degree(&self, v: Vertex) -> Result<usize, TreeError> {
        let up = usize::from(self.parent(v).is_some());
        Ok(self.children(v)?.len() + up)
    }

    /// True iff no vertex has exactly one child.
    pub fn is_lone_child_avoiding(&self) -> bool {
        !self.child_counts().contains(&1)
    }

    /// Every vertex that is the only child of its parent, ascending.
    pub fn lone_child_vertices(&self) -> Vec<Vertex> {
        let counts = self.child_counts();
        self.links
            .iter()
            .enumerate()
            .filter_map(|(i, l)| match l {
                Link::Parent(p) if counts[p.index()] == 1 => Some(Vertex(i as u32)),
                _ => None,
            })
            .collect()
    }

    /// `(parent, child)` pairs sorted by child label.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.links
            .iter()
            .enumerate()
            .filter_map(|(i, l)| match l {
                Link::Parent(p) => Some((*p, Vertex(i as u32))),
                _ => None,
            })
            .collect()
    }

    /// True iff the vertex set is exactly `{1, ..., n}`.
    pub fn spans(&self, n: usize) -> bool {
        self.len == n && self.links.len() == n + 1 && self.links[0] == Link::Absent
    }

    pub(crate) fn link_parents(&self) -> Vec<Option<Vertex>> {
        self.links
            .iter()
            .map(|l| match l {
                Link::Parent(p) => Some(*p),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for LabeledRootedTree {
    /// `n;root;edges=p1-c1,p2-c2,...` with `n` the vertex count.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};edges=", self.len, self.root)?;
        for (i, (p, c)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}-{c}")?;
        }
        Ok(())
    }
}

pub(crate) fn parse_label(field: &'static str, s: &str) -> Result<Vertex, TreeError> {
    s.trim()
        .parse::<u32>()
        .map(Vertex)
        .map_err(|e| TreeError::Parse {
            field,
            message: format!("`{s}`: {e}"),
        })
}

pub(crate) fn parse_pairs(
    field: &'static str,
    s: &str,
    sep: char,
) -> Result<Vec<(Vertex, Vertex)>, TreeError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let (a, b) = item.split_once(sep).ok_or_else(|| TreeError::Parse {
                field,
                message: format!("expected `a{sep}b`, got `{item}`"),
            })?;
            Ok((parse_label(field, a)?, parse_label(field, b)?))
        })
        .collect()
}

impl FromStr for LabeledRootedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.trim().split(';');
        let (Some(n), Some(root), Some(edges), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(TreeError::Parse {
                field: "tree",
                message: "expected `n;root;edges=...`".into(),
            });
        };
        let n: usize = n.trim().parse().map_err(|e| TreeError::Parse {
            field: "n",
            message: format!("`{n}`: {e}"),
        })?;
        let root = parse_label("root", root)?;
        let edges = edges
            .strip_prefix("edges=")
            .ok_or_else(|| TreeError::Parse {
                field: "edges",
                message: "missing `edges=` prefix".into(),
            })?;
        let tree = Self::from_parent_edges(root, parse_pairs("edges", edges, '-')?)?;
        if tree.len() != n {
            return Err(TreeError::Parse {
                field: "n",
                message: format!("declared {n} vertices, edges give {}", tree.len()),
            });
        }
        Ok(tree)
    }
}

/// Orients an undirected tree on the given labels toward `root`.
/// `edges` holds positions into `labels`.
fn orient(labels: &[Vertex], edges: &[(usize, usize)], root_pos: usize) -> LabeledRootedTree {
    let k = labels.len();
    let mut offsets = vec![0usize; k + 1];
    for &(a, b) in edges {
        offsets[a + 1] += 1;
        offsets[b + 1] += 1;
    }
    for i in 0..k {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut adj = vec![0usize; 2 * edges.len()];
    for &(a, b) in edges {
        adj[fill[a]] = b;
        fill[a] += 1;
        adj[fill[b]] = a;
        fill[b] += 1;
    }
    let max = labels.last().copied().unwrap_or(Vertex(0));
    let mut parents: Vec<Option<Vertex>> = vec![None; max.index() + 1];
    let mut seen = vec![false; k];
    let mut stack = vec![root_pos];
    seen[root_pos] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[offsets[u]..offsets[u + 1]] {
            if !seen[w] {
                seen[w] = true;
                parents[labels[w].index()] = Some(labels[u]);
                stack.push(w);
            }
        }
    }
    LabeledRootedTree::from_links_unchecked(labels[root_pos], &parents, k)
}

/// Prüfer decoding over an arbitrary sorted label set. `seq` holds positions
/// into `labels` and must have length `labels.len() - 2` (empty for one or
/// two labels).
pub(crate) fn decode_positions(
    labels: &[Vertex],
    seq: &[usize],
    root_pos: usize,
) -> LabeledRootedTree {
    let k = labels.len();
    debug_assert!(k >= 1 && seq.len() == k.saturating_sub(2));
    if k == 1 {
        return LabeledRootedTree::singleton(labels[0]);
    }
    let mut degree = vec![1u32; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, k - 1));
    orient(labels, &edges, root_pos)
}

/// Decodes a Prüfer sequence into a tree on `[n]` rooted at `root`, using
/// the smallest-leaf-first convention.
pub fn prufer_decode(
    seq: &[Vertex],
    n: usize,
    root: Vertex,
) -> Result<LabeledRootedTree, TreeError> {
    if n == 0 {
        return Err(TreeError::EmptyTree);
    }
    let expected = n.saturating_sub(2);
    if seq.len() != expected {
        return Err(TreeError::WrongSequenceLength {
            n,
            expected,
            actual: seq.len(),
        });
    }
    let in_range = |v: Vertex| v.0 >= 1 && v.index() <= n;
    if !in_range(root) {
        return Err(TreeError::RootOutOfRange { root, n });
    }
    if let Some(&entry) = seq.iter().find(|v| !in_range(**v)) {
        return Err(TreeError::EntryOutOfRange { entry, n });
    }
    let labels: Vec<Vertex> = (1..=n as u32).map(Vertex).collect();
    let positions: Vec<usize> = seq.iter().map(|v| v.index() - 1).collect();
    Ok(decode_positions(&labels, &positions, root.index() - 1))
}

/// Inverse of [`prufer_decode`]. The root is not encoded.
pub fn prufer_encode(tree: &LabeledRootedTree) -> Result<Vec<Vertex>, TreeError> {
    let n = tree.len();
    if !tree.spans(n) {
        return Err(TreeError::NotContiguous(n));
    }
    if n <= 2 {
        return Ok(Vec::new());
    }
    // Re-root at n so that every other vertex has a well-defined "next" hop.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (p, c) in tree.edges() {
        adj[p.index()].push(c.index());
        adj[c.index()].push(p.index());
    }
    let mut toward_n = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    let mut stack = vec![n];
    seen[n] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                toward_n[w] = u;
                stack.push(w);
            }
        }
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut seq = Vec::with_capacity(n - 2);
    let mut ptr = (1..=n).find(|&i| degree[i] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        let next = toward_n[leaf];
        seq.push(Vertex(next as u32));
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(seq)
}

/// A tree on `{0, 1, ..., n}` rooted at 0 whose root has exactly one child.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlantedTree(LabeledRootedTree);

impl PlantedTree {
    pub fn new(tree: LabeledRootedTree) -> Result<Self, TreeError> {
        if tree.root() != Vertex(0) {
            return Err(TreeError::PlantedRootNotZero(tree.root()));
        }
        let n = tree.len() - 1;
        if n == 0 || tree.links.len() != n + 1 {
            return Err(TreeError::PlantedVertexSet);
        }
        let root_children = tree.children(Vertex(0))?.len();
        if root_children != 1 {
            return Err(TreeError::PlantedRootDegree(root_children));
        }
        Ok(PlantedTree(tree))
    }

    pub fn tree(&self) -> &LabeledRootedTree {
        &self.0
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// True iff no vertex has degree 2.
    pub fn is_series_reduced(&self) -> bool {
        self.0
            .vertices()
            .all(|v| self.0.degree(v).expect("vertex of own tree") != 2)
    }
}

/// Hangs a tree on `[n]` below a new root 0.
pub fn to_planted(tree: &LabeledRootedTree) -> Result<PlantedTree, TreeError> {
    let n = tree.len();
    if !tree.spans(n) {
        return Err(TreeError::NotContiguous(n));
    }
    let mut parents = tree.link_parents();
    parents[tree.root().index()] = Some(Vertex(0));
    let planted = LabeledRootedTree::from_links_unchecked(Vertex(0), &parents, n + 1);
    Ok(PlantedTree(planted))
}

/// Deletes the planted root and its edge, re-rooting at its only child.
pub fn from_planted(planted: &PlantedTree) -> LabeledRootedTree {
    let tree = planted.tree();
    let new_root = tree.children(Vertex(0)).expect("root is in tree")[0];
    let mut parents = tree.link_parents();
    parents[new_root.index()] = None;
    let mut links: Vec<Link> = parents
        .iter()
        .map(|p| p.map_or(Link::Absent, Link::Parent))
        .collect();
    links[new_root.index()] = Link::Root;
    LabeledRootedTree {
        root: new_root,
        links,
        len: tree.len() - 1,
    }
}
