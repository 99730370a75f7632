//! Sign-reversing involution on G-configurations.
//!
//! The vertex `m` that moves is the largest arc vertex or lone-child vertex.
//! An arc vertex becomes a lone child (of the root when its arc walk is a
//! cycle, of the walk's terminal tree vertex `c` otherwise), taking over the
//! old children of its new parent. A lone child goes back to being an arc
//! vertex: it hands its children to its parent and points at the start of
//! the incoming-arc chain ending at itself (root case) or at its parent
//! (inner case). Each move changes `k` by one, so the weight flips, and
//! `m` stays the maximum special vertex. Spanning lone-child-avoiding trees
//! are the fixed points.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{mask_partitions, run_partitioned, EnumError, GConfigEnumerator, Guard};
use crate::gconfig::{ArcStructure, GConfiguration, Slot, Violations, ROOT};
use crate::tree::{LabeledRootedTree, Vertex};

/// Which conversion applies, with the moving vertex `m` and, where relevant,
/// the tree vertex `c` it attaches below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    ArcCycle { m: Vertex },
    ArcPath { m: Vertex, c: Vertex },
    LoneChildOfRoot { m: Vertex },
    LoneChildOfInner { m: Vertex, c: Vertex },
}

impl CaseTag {
    pub fn m(&self) -> Vertex {
        match *self {
            CaseTag::ArcCycle { m }
            | CaseTag::ArcPath { m, .. }
            | CaseTag::LoneChildOfRoot { m }
            | CaseTag::LoneChildOfInner { m, .. } => m,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::ArcCycle { m } => write!(f, "ArcCycle(m={m})"),
            CaseTag::ArcPath { m, c } => write!(f, "ArcPath(m={m}, c={c})"),
            CaseTag::LoneChildOfRoot { m } => write!(f, "LoneChildOfRoot(m={m})"),
            CaseTag::LoneChildOfInner { m, c } => write!(f, "LoneChildOfInner(m={m}, c={c})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Fixed,
    Convert(CaseTag),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Fixed => f.write_str("Fixed"),
            Classification::Convert(tag) => tag.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionOutcome {
    /// A spanning lone-child-avoiding tree.
    Fixed(LabeledRootedTree),
    Paired(GConfiguration),
}

impl InvolutionOutcome {
    pub fn partner(&self) -> Option<&GConfiguration> {
        match self {
            InvolutionOutcome::Paired(c) => Some(c),
            InvolutionOutcome::Fixed(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("{tag} produced an invalid configuration: {violations}")]
    InvalidOutput {
        tag: CaseTag,
        violations: Violations,
    },
}

pub fn classify(config: &GConfiguration) -> Classification {
    let Some(m) = config.max_special_vertex() else {
        return Classification::Fixed;
    };
    let tag = match config.slot(m) {
        Slot::Arc(_) => match config.arc_structure_from(m).expect("m is an arc vertex") {
            ArcStructure::Cycle => CaseTag::ArcCycle { m },
            ArcStructure::PathTo(c) => CaseTag::ArcPath { m, c },
        },
        Slot::Child(p) if p == ROOT => CaseTag::LoneChildOfRoot { m },
        Slot::Child(c) => CaseTag::LoneChildOfInner { m, c },
        Slot::Root => unreachable!("the root is never a special vertex"),
    };
    Classification::Convert(tag)
}

fn reparent(slots: &mut [Slot], from: Vertex, to: Vertex) {
    for s in slots.iter_mut() {
        if *s == Slot::Child(from) {
            *s = Slot::Child(to);
        }
    }
}

/// Follows incoming arcs backward from `end` to the vertex with no incoming
/// arc.
fn chain_start(slots: &[Slot], end: Vertex) -> Vertex {
    let n = slots.len();
    let mut pred: Vec<Option<Vertex>> = vec![None; n + 1];
    for (i, s) in slots.iter().enumerate() {
        if let Slot::Arc(t) = s {
            pred[t.index()] = Some(Vertex(i as u32 + 1));
        }
    }
    let mut cur = end;
    for _ in 0..=n {
        match pred[cur.index()] {
            Some(p) => {
                assert_ne!(p, end, "backward arc walk from {end} closed a cycle");
                cur = p;
            }
            None => return cur,
        }
    }
    panic!("backward arc walk from {end} did not terminate");
}

fn convert(config: &GConfiguration, tag: CaseTag) -> GConfiguration {
    let mut slots = config.slots().to_vec();
    let at = |v: Vertex| v.index() - 1;
    match tag {
        CaseTag::ArcCycle { m } => {
            reparent(&mut slots, ROOT, m);
            slots[at(m)] = Slot::Child(ROOT);
        }
        CaseTag::ArcPath { m, c } => {
            reparent(&mut slots, c, m);
            slots[at(m)] = Slot::Child(c);
        }
        CaseTag::LoneChildOfRoot { m } => {
            reparent(&mut slots, m, ROOT);
            // m is a tree vertex here, so it has no outgoing arc yet.
            let y = chain_start(&slots, m);
            slots[at(m)] = Slot::Arc(y);
        }
        CaseTag::LoneChildOfInner { m, c } => {
            reparent(&mut slots, m, c);
            let y = chain_start(&slots, c);
            debug_assert_ne!(y, ROOT);
            slots[at(m)] = Slot::Arc(y);
        }
    }
    GConfiguration::from_slots_unchecked(slots)
}

/// Applies the involution. Output validity is asserted in debug builds only.
pub fn apply(config: &GConfiguration) -> InvolutionOutcome {
    match classify(config) {
        Classification::Fixed => InvolutionOutcome::Fixed(config.tree()),
        Classification::Convert(tag) => {
            let partner = convert(config, tag);
            debug_assert!(partner.violations().is_empty(), "{tag} broke an invariant");
            InvolutionOutcome::Paired(partner)
        }
    }
}

/// Like [`apply`], but re-validates the partner in every build.
pub fn apply_checked(config: &GConfiguration) -> Result<InvolutionOutcome, InvolutionError> {
    match classify(config) {
        Classification::Fixed => Ok(InvolutionOutcome::Fixed(config.tree())),
        Classification::Convert(tag) => {
            let partner = convert(config, tag);
            let violations = partner.violations();
            if violations.is_empty() {
                Ok(InvolutionOutcome::Paired(partner))
            } else {
                Err(InvolutionError::InvalidOutput {
                    tag,
                    violations: Violations(violations),
                })
            }
        }
    }
}

/// Which property a counterexample breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    PartnerValid,
    DoubleApplication,
    SignReversal,
    MPreserved,
    FixedPointSet,
    SignedTotal,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::PartnerValid => "partner is a valid configuration",
            Check::DoubleApplication => "applying twice is the identity",
            Check::SignReversal => "partner has the opposite weight",
            Check::MPreserved => "partner has the same maximum special vertex",
            Check::FixedPointSet => {
                "fixed points are exactly the spanning lone-child-avoiding trees"
            }
            Check::SignedTotal => "signed total equals the fixed-point count",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: Check,
    /// Canonical text of the offending configuration.
    pub config: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KBreakdown {
    pub k: usize,
    pub configs: u64,
    pub paired: u64,
    pub fixed: u64,
}

/// Aggregated result of checking every configuration of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub configs: u64,
    pub pairs: u64,
    pub fixed: u64,
    /// Spanning trees rooted at 1 with no lone child, counted independently
    /// of the involution.
    pub lone_child_avoiding_trees: u64,
    pub signed_total: i64,
    pub per_k: Vec<KBreakdown>,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    fn empty(n: usize) -> Self {
        VerifyReport {
            n,
            configs: 0,
            pairs: 0,
            fixed: 0,
            lone_child_avoiding_trees: 0,
            signed_total: 0,
            per_k: (1..=n)
                .map(|k| KBreakdown {
                    k,
                    configs: 0,
                    paired: 0,
                    fixed: 0,
                })
                .collect(),
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Folds `other` in; `other` must cover a later part of the enumeration.
    fn merge(&mut self, other: VerifyReport) {
        self.configs += other.configs;
        self.pairs += other.pairs;
        self.fixed += other.fixed;
        self.lone_child_avoiding_trees += other.lone_child_avoiding_trees;
        self.signed_total += other.signed_total;
        for (a, b) in self.per_k.iter_mut().zip(other.per_k) {
            a.configs += b.configs;
            a.paired += b.paired;
            a.fixed += b.fixed;
        }
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    fn record(&mut self, check: Check, config: &GConfiguration, detail: String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                check,
                config: config.to_string(),
                detail,
            });
        }
    }

    fn check_one(&mut self, x: &GConfiguration) {
        let k = x.k();
        self.configs += 1;
        self.signed_total += x.weight().sign();
        self.per_k[k - 1].configs += 1;
        let spanning_lca = x.is_spanning() && x.tree().is_lone_child_avoiding();
        if spanning_lca {
            self.lone_child_avoiding_trees += 1;
        }
        match apply_checked(x) {
            Err(e) => self.record(Check::PartnerValid, x, e.to_string()),
            Ok(InvolutionOutcome::Fixed(tree)) => {
                self.fixed += 1;
                self.per_k[k - 1].fixed += 1;
                if !spanning_lca || !tree.spans(self.n) || !tree.is_lone_child_avoiding() {
                    self.record(
                        Check::FixedPointSet,
                        x,
                        "classified fixed but is not a spanning lone-child-avoiding tree".into(),
                    );
                }
            }
            Ok(InvolutionOutcome::Paired(y)) => {
                self.per_k[k - 1].paired += 1;
                if spanning_lca {
                    self.record(
                        Check::FixedPointSet,
                        x,
                        "spanning lone-child-avoiding tree was paired".into(),
                    );
                }
                if y.weight() != -x.weight() {
                    self.record(
                        Check::SignReversal,
                        x,
                        format!("weight {} maps to {} ({y})", x.weight(), y.weight()),
                    );
                }
                if y.max_special_vertex() != x.max_special_vertex() {
                    self.record(
                        Check::MPreserved,
                        x,
                        format!(
                            "m = {:?} maps to m = {:?} ({y})",
                            x.max_special_vertex(),
                            y.max_special_vertex()
                        ),
                    );
                }
                match apply_checked(&y) {
                    Ok(InvolutionOutcome::Paired(z)) if &z == x => {}
                    Ok(InvolutionOutcome::Paired(z)) => self.record(
                        Check::DoubleApplication,
                        x,
                        format!("partner {y} maps to {z}"),
                    ),
                    Ok(InvolutionOutcome::Fixed(_)) => self.record(
                        Check::DoubleApplication,
                        x,
                        format!("partner {y} is a fixed point"),
                    ),
                    Err(e) => self.record(Check::PartnerValid, &y, e.to_string()),
                }
            }
        }
    }

    fn finish(&mut self) {
        let paired: u64 = self.per_k.iter().map(|b| b.paired).sum();
        self.pairs = paired / 2;
        if self.counterexample.is_none() {
            if self.fixed != self.lone_child_avoiding_trees {
                self.counterexample = Some(Counterexample {
                    check: Check::FixedPointSet,
                    config: String::new(),
                    detail: format!(
                        "{} fixed points but {} spanning lone-child-avoiding trees",
                        self.fixed, self.lone_child_avoiding_trees
                    ),
                });
            } else if self.signed_total != self.fixed as i64 || !paired.is_multiple_of(2) {
                self.counterexample = Some(Counterexample {
                    check: Check::SignedTotal,
                    config: String::new(),
                    detail: format!(
                        "signed total {} vs {} fixed points ({} paired)",
                        self.signed_total, self.fixed, paired
                    ),
                });
            }
        }
    }
}

/// Checks the involution on every configuration of size `n`.
pub fn verify_involution(n: usize, guard: &Guard) -> Result<VerifyReport, EnumError> {
    verify_involution_jobs(n, guard, 1)
}

/// [`verify_involution`] split over subset-mask ranges on `jobs` threads.
/// The report does not depend on `jobs`.
pub fn verify_involution_jobs(
    n: usize,
    guard: &Guard,
    jobs: usize,
) -> Result<VerifyReport, EnumError> {
    guard.check_configs(n)?;
    let ranges = mask_partitions(n, jobs.max(1) * 16);
    let partials = run_partitioned(ranges, jobs, |masks| {
        let mut part = VerifyReport::empty(n);
        for x in GConfigEnumerator::mask_range(n, masks, guard).expect("guard checked") {
            part.check_one(&x);
        }
        part
    });
    let mut report = VerifyReport::empty(n);
    for part in partials {
        report.merge(part);
    }
    report.finish();
    Ok(report)
}
