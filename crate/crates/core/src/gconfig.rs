//! G-configurations: a tree on a vertex subset `V ∋ 1` rooted at 1, plus one
//! arc out of every vertex of `[n] \ V`. No arc ends at the root and no two
//! arcs share a target, so the arcs form a disjoint union of directed paths
//! (each ending at a tree vertex) and directed cycles.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::{parse_label, parse_pairs, LabeledRootedTree, TreeError, Vertex};

/// The fixed root of every G-configuration.
pub const ROOT: Vertex = Vertex(1);

/// What a vertex of `[n]` is in a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Slot {
    Root,
    Child(Vertex),
    Arc(Vertex),
}

/// One broken G-configuration invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("size must be at least 1")]
    EmptySize,
    #[error("{field} mentions vertex {vertex}, outside 1..={n}")]
    OutOfRange {
        field: &'static str,
        vertex: Vertex,
        n: usize,
    },
    #[error("root 1 is given a parent")]
    RootHasParent,
    #[error("root 1 starts an arc")]
    ArcFromRoot,
    #[error("vertex {0} has more than one parent")]
    DuplicateParent(Vertex),
    #[error("tree vertex {0} does not reach the root")]
    Disconnected(Vertex),
    #[error("tree vertex {0} starts an arc")]
    ArcFromTreeVertex(Vertex),
    #[error("vertex {0} starts more than one arc")]
    MultipleArcs(Vertex),
    #[error("vertex {0} is neither a tree vertex nor an arc vertex")]
    MissingArc(Vertex),
    #[error("arc targets root (arc from {0})")]
    ArcTargetsRoot(Vertex),
    #[error("duplicate arc target {0}")]
    DuplicateArcTarget(Vertex),
}

/// The list of violations reported by validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Violations {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GConfigError {
    #[error("vertex {0} is not an arc vertex")]
    NotArcVertex(Vertex),
    #[error("invalid configuration: {0}")]
    Invalid(Violations),
    #[error("line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: &'static str,
        message: String,
    },
}

/// Sign `(-1)^(n-k)` carried by a configuration with `k` tree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Plus,
    Minus,
}

impl Weight {
    pub fn from_parity(n_minus_k: usize) -> Self {
        if n_minus_k.is_multiple_of(2) {
            Weight::Plus
        } else {
            Weight::Minus
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Weight::Plus => 1,
            Weight::Minus => -1,
        }
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        match self {
            Weight::Plus => Weight::Minus,
            Weight::Minus => Weight::Plus,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weight::Plus => "+1",
            Weight::Minus => "-1",
        })
    }
}

/// Where the arc walk starting at an arc vertex ends up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcStructure {
    /// The walk returns to its start.
    Cycle,
    /// The walk stops at this tree vertex.
    PathTo(Vertex),
}

/// A validated G-configuration of size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GConfiguration {
    /// `slots[i]` describes vertex `i + 1`.
    slots: Vec<Slot>,
}

/// Checks raw parts and returns the per-vertex slots when the parts are
/// consistent enough to build them, along with every violation found.
fn check_parts(
    n: usize,
    edges: &[(Vertex, Vertex)],
    arcs: &[(Vertex, Vertex)],
) -> (Vec<Violation>, Option<Vec<Slot>>) {
    let mut violations = Vec::new();
    if n == 0 {
        return (vec![Violation::EmptySize], None);
    }
    let in_range = |v: Vertex| v.0 >= 1 && v.index() <= n;
    for &(p, c) in edges {
        for v in [p, c] {
            if !in_range(v) {
                violations.push(Violation::OutOfRange {
                    field: "tree_edges",
                    vertex: v,
                    n,
                });
            }
        }
    }
    for &(s, t) in arcs {
        for v in [s, t] {
            if !in_range(v) {
                violations.push(Violation::OutOfRange {
                    field: "arcs",
                    vertex: v,
                    n,
                });
            }
        }
    }
    if !violations.is_empty() {
        return (violations, None);
    }

    let idx = |v: Vertex| v.index() - 1;
    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut parent: Vec<Option<Vertex>> = vec![None; n];
    for &(p, c) in edges {
        in_tree[idx(p)] = true;
        in_tree[idx(c)] = true;
        if c == ROOT {
            if !violations.contains(&Violation::RootHasParent) {
                violations.push(Violation::RootHasParent);
            }
            continue;
        }
        if parent[idx(c)].is_some() {
            if !violations.contains(&Violation::DuplicateParent(c)) {
                violations.push(Violation::DuplicateParent(c));
            }
            continue;
        }
        parent[idx(c)] = Some(p);
    }

    let mut arc: Vec<Option<Vertex>> = vec![None; n];
    let mut target_seen = vec![false; n];
    for &(s, t) in arcs {
        if s == ROOT {
            if !violations.contains(&Violation::ArcFromRoot) {
                violations.push(Violation::ArcFromRoot);
            }
        } else if in_tree[idx(s)] {
            if !violations.contains(&Violation::ArcFromTreeVertex(s)) {
                violations.push(Violation::ArcFromTreeVertex(s));
            }
        } else if arc[idx(s)].is_some() {
            if !violations.contains(&Violation::MultipleArcs(s)) {
                violations.push(Violation::MultipleArcs(s));
            }
        } else {
            arc[idx(s)] = Some(t);
        }
        if t == ROOT {
            violations.push(Violation::ArcTargetsRoot(s));
        } else if target_seen[idx(t)] {
            if !violations.contains(&Violation::DuplicateArcTarget(t)) {
                violations.push(Violation::DuplicateArcTarget(t));
            }
        } else {
            target_seen[idx(t)] = true;
        }
    }
    for i in 1..n {
        if !in_tree[i] && arc[i].is_none() {
            violations.push(Violation::MissingArc(Vertex(i as u32 + 1)));
        }
    }

    // Connectivity: every tree vertex must climb to the root.
    // 0 = unknown, 1 = on current walk, 2 = reaches root, 3 = does not
    let mut state = vec![0u8; n];
    state[0] = 2;
    for start in 1..n {
        if !in_tree[start] || state[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        let verdict = loop {
            match state[cur] {
                2 => break 2,
                1 | 3 => break 3,
                _ => {}
            }
            state[cur] = 1;
            walk.push(cur);
            match parent[cur] {
                Some(p) => cur = idx(p),
                None => break 3,
            }
        };
        for w in walk {
            state[w] = verdict;
        }
    }
    for i in 1..n {
        if in_tree[i] && state[i] == 3 {
            violations.push(Violation::Disconnected(Vertex(i as u32 + 1)));
        }
    }

    if !violations.is_empty() {
        return (violations, None);
    }
    let slots = (0..n)
        .map(|i| match (i, parent[i], arc[i]) {
            (0, _, _) => Slot::Root,
            (_, Some(p), _) => Slot::Child(p),
            (_, None, Some(t)) => Slot::Arc(t),
            _ => unreachable!("checked above"),
        })
        .collect();
    (violations, Some(slots))
}

/// Checks every G-configuration invariant on raw parts: `edges` are
/// `(parent, child)` pairs of the tree rooted at 1, `arcs` are
/// `(source, target)` pairs.
pub fn validate(
    n: usize,
    edges: &[(Vertex, Vertex)],
    arcs: &[(Vertex, Vertex)],
) -> Result<(), Violations> {
    let (violations, _) = check_parts(n, edges, arcs);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Violations(violations))
    }
}

impl GConfiguration {
    pub fn new(
        n: usize,
        edges: &[(Vertex, Vertex)],
        arcs: &[(Vertex, Vertex)],
    ) -> Result<Self, Violations> {
        match check_parts(n, edges, arcs) {
            (_, Some(slots)) => Ok(GConfiguration { slots }),
            (violations, None) => Err(Violations(violations)),
        }
    }

    /// The configuration whose tree spans `[n]`; the tree must be rooted at 1.
    pub fn spanning(tree: &LabeledRootedTree) -> Result<Self, Violations> {
        Self::new(tree.len(), &tree.edges(), &[])
    }

    pub(crate) fn from_slots_unchecked(slots: Vec<Slot>) -> Self {
        GConfiguration { slots }
    }

    pub(crate) fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub(crate) fn slot(&self, v: Vertex) -> Slot {
        self.slots[v.index() - 1]
    }

    /// Re-runs full validation on this value.
    pub fn violations(&self) -> Vec<Violation> {
        check_parts(self.n(), &self.tree_edges(), &self.arcs()).0
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    /// Number of tree vertices.
    pub fn k(&self) -> usize {
        self.slots
            .iter()
            .filter(|s| !matches!(s, Slot::Arc(_)))
            .count()
    }

    fn labels(&self) -> impl DoubleEndedIterator<Item = (Vertex, Slot)> + '_ {
        self.slots
            .iter()
            .enumerate()
            .map(|(i, s)| (Vertex(i as u32 + 1), *s))
    }

    pub fn is_tree_vertex(&self, v: Vertex) -> bool {
        self.contains(v) && !matches!(self.slot(v), Slot::Arc(_))
    }

    pub fn is_arc_vertex(&self, v: Vertex) -> bool {
        self.contains(v) && matches!(self.slot(v), Slot::Arc(_))
    }

    fn contains(&self, v: Vertex) -> bool {
        v.0 >= 1 && v.index() <= self.n()
    }

    pub fn tree_vertices(&self) -> Vec<Vertex> {
        self.labels()
            .filter(|(_, s)| !matches!(s, Slot::Arc(_)))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn arc_vertices(&self) -> Vec<Vertex> {
        self.labels()
            .filter(|(_, s)| matches!(s, Slot::Arc(_)))
            .map(|(v, _)| v)
            .collect()
    }

    /// Tree edges as `(parent, child)`, sorted by child.
    pub fn tree_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.labels()
            .filter_map(|(v, s)| match s {
                Slot::Child(p) => Some((p, v)),
                _ => None,
            })
            .collect()
    }

    /// Arcs as `(source, target)`, sorted by source.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        self.labels()
            .filter_map(|(v, s)| match s {
                Slot::Arc(t) => Some((v, t)),
                _ => None,
            })
            .collect()
    }

    pub fn arc(&self, v: Vertex) -> Option<Vertex> {
        match self.contains(v).then(|| self.slot(v)) {
            Some(Slot::Arc(t)) => Some(t),
            _ => None,
        }
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.contains(v).then(|| self.slot(v)) {
            Some(Slot::Child(p)) => Some(p),
            _ => None,
        }
    }

    pub fn tree(&self) -> LabeledRootedTree {
        let parents: Vec<Option<Vertex>> = std::iter::once(None)
            .chain(self.slots.iter().map(|s| match s {
                Slot::Child(p) => Some(*p),
                _ => None,
            }))
            .collect();
        LabeledRootedTree::from_links_unchecked(ROOT, &parents, self.k())
    }

    /// True iff every vertex is a tree vertex.
    pub fn is_spanning(&self) -> bool {
        self.slots.iter().all(|s| !matches!(s, Slot::Arc(_)))
    }

    pub fn weight(&self) -> Weight {
        Weight::from_parity(self.n() - self.k())
    }

    pub(crate) fn child_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.n() + 1];
        for s in &self.slots {
            if let Slot::Child(p) = s {
                counts[p.index()] += 1;
            }
        }
        counts
    }

    /// Tree vertices that are the only child of their parent, ascending.
    pub fn lone_child_vertices(&self) -> Vec<Vertex> {
        let counts = self.child_counts();
        self.labels()
            .filter_map(|(v, s)| match s {
                Slot::Child(p) if counts[p.index()] == 1 => Some(v),
                _ => None,
            })
            .collect()
    }

    /// Follows arcs from arc vertex `v` until it comes back to `v` or lands
    /// on a tree vertex.
    pub fn arc_structure_from(&self, v: Vertex) -> Result<ArcStructure, GConfigError> {
        let Some(mut cur) = self.arc(v) else {
            return Err(GConfigError::NotArcVertex(v));
        };
        for _ in 0..self.n() {
            if cur == v {
                return Ok(ArcStructure::Cycle);
            }
            match self.slot(cur) {
                Slot::Arc(t) => cur = t,
                _ => return Ok(ArcStructure::PathTo(cur)),
            }
        }
        // In-degree <= 1 rules out a walk that enters a cycle not through v.
        panic!("arc walk from {v} did not terminate in {} steps", self.n());
    }

    /// Largest label among arc vertices and lone-child vertices; `None` only
    /// for a spanning tree with no lone child.
    pub fn max_special_vertex(&self) -> Option<Vertex> {
        let counts = self.child_counts();
        self.labels()
            .rev()
            .find(|(_, s)| match s {
                Slot::Arc(_) => true,
                Slot::Child(p) => counts[p.index()] == 1,
                Slot::Root => false,
            })
            .map(|(v, _)| v)
    }

    /// Parses one line of canonical text, reporting `line` in errors.
    pub fn parse_line(text: &str, line: usize) -> Result<Self, GConfigError> {
        let err = |field: &'static str, message: String| GConfigError::Parse {
            line,
            field,
            message,
        };
        let lift = |e: TreeError| match e {
            TreeError::Parse { field, message } => err(field, message),
            other => err("config", other.to_string()),
        };
        let mut fields = text.trim().split(';');
        let mut next = |name: &'static str| -> Result<&str, GConfigError> {
            let raw = fields
                .next()
                .ok_or_else(|| err(name, "missing field".into()))?;
            raw.strip_prefix(name)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| err(name, format!("expected `{name}=...`, got `{raw}`")))
        };
        let n_raw = next("n")?;
        let v_raw = next("V")?;
        let edges_raw = next("edges")?;
        let arcs_raw = next("arcs")?;
        if let Some(extra) = fields.next() {
            return Err(err("arcs", format!("unexpected trailing field `{extra}`")));
        }
        let n: usize = n_raw
            .parse()
            .map_err(|e| err("n", format!("`{n_raw}`: {e}")))?;
        let listed: BTreeSet<Vertex> = if v_raw.is_empty() {
            BTreeSet::new()
        } else {
            v_raw
                .split(',')
                .map(|s| parse_label("V", s))
                .collect::<Result<_, _>>()
                .map_err(lift)?
        };
        let edges = parse_pairs("edges", edges_raw, '-').map_err(lift)?;
        let arcs = parse_pairs("arcs", arcs_raw, '>').map_err(lift)?;
        let implied: BTreeSet<Vertex> = edges
            .iter()
            .flat_map(|&(p, c)| [p, c])
            .chain(std::iter::once(ROOT))
            .collect();
        if listed != implied {
            return Err(err(
                "V",
                "tree vertex list does not match the vertices of the edges".into(),
            ));
        }
        Self::new(n, &edges, &arcs).map_err(GConfigError::Invalid)
    }

    /// Parses newline-separated canonical lines, skipping blank ones.
    pub fn parse_stream(text: &str) -> Result<Vec<Self>, GConfigError> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| Self::parse_line(l, i + 1))
            .collect()
    }
}

impl fmt::Display for GConfiguration {
    /// `n=<n>;V=<tree vertices>;edges=<p-c,...>;arcs=<s>t,...>`, edges sorted
    /// by child and arcs by source.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};V=", self.n())?;
        for (i, v) in self.tree_vertices().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(";edges=")?;
        for (i, (p, c)) in self.tree_edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}-{c}")?;
        }
        f.write_str(";arcs=")?;
        for (i, (s, t)) in self.arcs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}>{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GConfiguration {
    type Err = GConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_line(s, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32) -> Vertex {
        Vertex(x)
    }

    fn pairs(p: &[(u32, u32)]) -> Vec<(Vertex, Vertex)> {
        p.iter().map(|&(a, b)| (v(a), v(b))).collect()
    }

    const FIG1_EDGES: &[(u32, u32)] = &[(1, 3), (1, 10), (10, 4), (10, 7), (10, 11), (7, 13)];
    const FIG1_ARCS: &[(u32, u32)] = &[(8, 8), (9, 14), (14, 9), (5, 3), (2, 6), (6, 12), (12, 7)];

    fn figure1() -> GConfiguration {
        GConfiguration::new(14, &pairs(FIG1_EDGES), &pairs(FIG1_ARCS)).unwrap()
    }

    fn fig2a_left() -> GConfiguration {
        GConfiguration::new(
            9,
            &pairs(&[(1, 7), (1, 9), (7, 4), (9, 5)]),
            &pairs(&[(3, 2), (2, 8), (8, 3), (6, 7)]),
        )
        .unwrap()
    }

    fn fig2b_left() -> GConfiguration {
        GConfiguration::new(
            10,
            &pairs(&[(1, 7), (7, 2), (7, 10), (10, 5)]),
            &pairs(&[(6, 9), (9, 3), (3, 4), (4, 7), (8, 2)]),
        )
        .unwrap()
    }

    #[test]
    fn figure1_is_valid() {
        assert_eq!(validate(14, &pairs(FIG1_EDGES), &pairs(FIG1_ARCS)), Ok(()));
        let c = figure1();
        assert_eq!(c.k(), 7);
        assert_eq!(c.weight(), Weight::Minus);
        assert!(c.violations().is_empty());
    }

    #[test]
    fn arc_into_root_is_reported() {
        let arcs: Vec<_> = FIG1_ARCS
            .iter()
            .map(|&(s, t)| if s == 5 { (5, 1) } else { (s, t) })
            .collect();
        let err = validate(14, &pairs(FIG1_EDGES), &pairs(&arcs)).unwrap_err();
        assert_eq!(err.0, vec![Violation::ArcTargetsRoot(v(5))]);
        assert!(err.to_string().contains("arc targets root"));
    }

    #[test]
    fn shared_arc_target_is_reported() {
        let arcs: Vec<_> = FIG1_ARCS
            .iter()
            .map(|&(s, t)| if s == 5 { (5, 6) } else { (s, t) })
            .collect();
        let err = validate(14, &pairs(FIG1_EDGES), &pairs(&arcs)).unwrap_err();
        assert!(err.0.contains(&Violation::DuplicateArcTarget(v(6))));
        assert!(err.to_string().contains("duplicate arc target"));
    }

    #[test]
    fn reports_every_violation() {
        // 2 has both a parent and an arc, 3 has nothing, 4 points at 1.
        let err = validate(4, &pairs(&[(1, 2)]), &pairs(&[(2, 2), (4, 1)])).unwrap_err();
        assert_eq!(
            err.0,
            vec![
                Violation::ArcFromTreeVertex(v(2)),
                Violation::ArcTargetsRoot(v(4)),
                Violation::MissingArc(v(3)),
            ]
        );
        let err = validate(3, &pairs(&[(2, 3), (3, 2)]), &[]).unwrap_err();
        assert_eq!(
            err.0,
            vec![Violation::Disconnected(v(2)), Violation::Disconnected(v(3))]
        );
        let err = validate(2, &pairs(&[(1, 5)]), &[]).unwrap_err();
        assert!(matches!(
            err.0[0],
            Violation::OutOfRange {
                field: "tree_edges",
                ..
            }
        ));
        assert_eq!(
            validate(0, &[], &[]).unwrap_err().0,
            vec![Violation::EmptySize]
        );
        let err = validate(2, &pairs(&[(2, 1)]), &pairs(&[(1, 2)])).unwrap_err();
        assert!(err.0.contains(&Violation::RootHasParent));
        assert!(err.0.contains(&Violation::ArcFromRoot));
    }

    #[test]
    fn weights() {
        let full = GConfiguration::new(3, &pairs(&[(1, 2), (1, 3)]), &[]).unwrap();
        assert_eq!(full.weight(), Weight::Plus);
        let loop2 = GConfiguration::new(2, &[], &pairs(&[(2, 2)])).unwrap();
        assert_eq!(loop2.weight(), Weight::Minus);
        assert_eq!(-Weight::Minus, Weight::Plus);
    }

    #[test]
    fn arc_structures() {
        assert_eq!(
            fig2a_left().arc_structure_from(v(8)),
            Ok(ArcStructure::Cycle)
        );
        assert_eq!(
            fig2a_left().arc_structure_from(v(6)),
            Ok(ArcStructure::PathTo(v(7)))
        );
        assert_eq!(
            fig2b_left().arc_structure_from(v(9)),
            Ok(ArcStructure::PathTo(v(7)))
        );
        let loop2 = GConfiguration::new(2, &[], &pairs(&[(2, 2)])).unwrap();
        assert_eq!(loop2.arc_structure_from(v(2)), Ok(ArcStructure::Cycle));
        assert_eq!(
            fig2b_left().arc_structure_from(v(7)),
            Err(GConfigError::NotArcVertex(v(7)))
        );
    }

    #[test]
    fn max_special() {
        assert_eq!(fig2a_left().max_special_vertex(), Some(v(8)));
        assert_eq!(fig2b_left().max_special_vertex(), Some(v(9)));
        assert_eq!(fig2b_left().lone_child_vertices(), vec![v(5), v(7)]);
        let star = GConfiguration::new(4, &pairs(&[(1, 2), (1, 3), (1, 4)]), &[]).unwrap();
        assert_eq!(star.max_special_vertex(), None);
    }

    #[test]
    fn canonical_text() {
        let loop2 = GConfiguration::new(2, &[], &pairs(&[(2, 2)])).unwrap();
        assert_eq!(loop2.to_string(), "n=2;V=1;edges=;arcs=2>2");
        assert_eq!(
            "n=2;V=1;edges=;arcs=2>2".parse::<GConfiguration>(),
            Ok(loop2)
        );

        let s = figure1().to_string();
        assert_eq!(
            s,
            "n=14;V=1,3,4,7,10,11,13;edges=1-3,10-4,10-7,1-10,10-11,7-13;\
             arcs=2>6,5>3,6>12,8>8,9>14,12>7,14>9"
        );
        assert_eq!(s.parse::<GConfiguration>(), Ok(figure1()));
    }

    #[test]
    fn parse_errors_name_line_and_field() {
        let text = "n=2;V=1;edges=;arcs=2>2\n\nn=2;V=1;edges=;arcs=2-2\n";
        match GConfiguration::parse_stream(text) {
            Err(GConfigError::Parse { line, field, .. }) => {
                assert_eq!((line, field), (3, "arcs"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "n=x;V=1;edges=;arcs=".parse::<GConfiguration>(),
            Err(GConfigError::Parse { field: "n", .. })
        ));
        assert!(matches!(
            "n=3;V=1,2;edges=1-2,1-3;arcs=".parse::<GConfiguration>(),
            Err(GConfigError::Parse { field: "V", .. })
        ));
        assert!(matches!(
            "n=2;V=1;edges=".parse::<GConfiguration>(),
            Err(GConfigError::Parse { field: "arcs", .. })
        ));
        assert!(matches!(
            "n=2;V=1;edges=;arcs=2>1".parse::<GConfiguration>(),
            Err(GConfigError::Invalid(_))
        ));
    }

    #[test]
    fn tree_view() {
        let t = figure1().tree();
        assert_eq!(t.len(), 7);
        assert_eq!(t.root(), ROOT);
        assert_eq!(t.edges(), figure1().tree_edges());
    }
}
