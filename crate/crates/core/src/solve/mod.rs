//! Branch-and-reduce solvers for vertex cover, measured by `mu = 2k - 2 vc*` half-units.
//!
//! Every search node reduces its instance exhaustively, answers NO once the
//! measure is negative, splits into connected components (solving small ones by
//! exhaustive search) and otherwise branches. The simple variant branches on the
//! smallest vertex; the improved variant tries rules B1 to B6 in order.
//!
//! With `check_measure` on, each branch verifies that its children's measures
//! dropped by the amounts the rule guarantees, and composite rules (B5, B6)
//! verify the rule sequence and drops of their grandchildren.

mod base;
mod select;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::{self, ExecMode};
use crate::graph::{Graph, GraphError, VertexId};
use crate::lpvc::{full_mask, lp_value_on};
use crate::reduce::{self, ReduceError, ReducedInstance, TraceStep};

pub use base::exact_small_cover;
pub use select::{select_b1, select_b2, select_b3, select_b4, select_b5};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Simple,
    #[default]
    Improved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    Simple,
    Base,
    Split,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::B1 => "B1",
            Rule::B2 => "B2",
            Rule::B3 => "B3",
            Rule::B4 => "B4",
            Rule::B5 => "B5",
            Rule::B6 => "B6",
            Rule::Simple => "SIMPLE",
            Rule::Base => "BASE",
            Rule::Split => "SPLIT",
        }
    }

    fn is_branching(self) -> bool {
        matches!(
            self,
            Rule::B1 | Rule::B2 | Rule::B3 | Rule::B4 | Rule::B5 | Rule::B6 | Rule::Simple
        )
    }

    /// Guaranteed measure drop (half-units) of the (include, exclude) child.
    fn drops(self) -> [i64; 2] {
        match self {
            Rule::Simple => [1, 2],
            Rule::B1 | Rule::B2 | Rule::B3 => [2, 2],
            Rule::B4 => [1, 3],
            Rule::B5 | Rule::B6 => [1, 2],
            _ => [0, 0],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub variant: Variant,
    /// Verify measure drops and rule sequences at every branch.
    pub check_measure: bool,
    pub exec: ExecMode,
    /// Components with at most this many vertices are solved exhaustively.
    pub base_size: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            variant: Variant::Improved,
            check_measure: true,
            exec: ExecMode::Sequential,
            base_size: 10,
        }
    }
}

impl SolverConfig {
    pub fn with_variant(variant: Variant) -> Self {
        SolverConfig {
            variant,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes_visited: u64,
    pub max_depth: u64,
    /// Measure of the input instance in half-units.
    pub mu_root: i64,
    pub rule_fire_counts: BTreeMap<String, u64>,
    pub drop_violations: u64,
    /// Composite rules whose children applied an unexpected rule.
    pub sequence_violations: u64,
    /// B6 reached on a graph that is not connected, cubic, of order at least 11 and girth at least 7.
    pub structure_violations: u64,
}

impl SolveStats {
    fn fire(&mut self, rule: Rule) {
        *self
            .rule_fire_counts
            .entry(rule.name().to_string())
            .or_insert(0) += 1;
    }

    pub fn fired(&self, rule: Rule) -> u64 {
        self.rule_fire_counts.get(rule.name()).copied().unwrap_or(0)
    }

    /// Adds counters from `other`; `mu_root` is left alone.
    pub fn merge(&mut self, other: &SolveStats) {
        self.nodes_visited += other.nodes_visited;
        self.max_depth = self.max_depth.max(other.max_depth);
        for (k, v) in &other.rule_fire_counts {
            *self.rule_fire_counts.entry(k.clone()).or_insert(0) += v;
        }
        self.drop_violations += other.drop_violations;
        self.sequence_violations += other.sequence_violations;
        self.structure_violations += other.structure_violations;
    }

    pub fn violations(&self) -> u64 {
        self.drop_violations + self.sequence_violations + self.structure_violations
    }
}

/// A branching rule instance: each child puts `include` into the cover,
/// deletes `delete` from the graph and pays `include.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecision {
    pub rule: Rule,
    pub pivot: Vec<VertexId>,
    pub children: Vec<ChildSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChildSpec {
    pub include: Vec<VertexId>,
    pub delete: Vec<VertexId>,
}

impl ChildSpec {
    pub fn charge(&self) -> usize {
        self.include.len()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error("search depth {depth} exceeds the limit {limit}")]
    DepthExceeded { depth: u64, limit: u64 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("{drops} measure-drop, {sequence} rule-sequence and {structure} structure violations")]
    Violations {
        drops: u64,
        sequence: u64,
        structure: u64,
    },
}

/// Answer to a decision query with the statistics of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub cover: Option<Vec<VertexId>>,
    pub stats: SolveStats,
}

/// What a node tells its ancestors for measure bookkeeping.
#[derive(Clone, Debug)]
struct Summary {
    mu: i64,
    rule: Option<Rule>,
    children: Vec<Summary>,
}

impl Summary {
    fn leaf(mu: i64, rule: Option<Rule>) -> Self {
        Summary {
            mu,
            rule,
            children: Vec::new(),
        }
    }

    fn branched(&self) -> bool {
        self.rule.is_some_and(Rule::is_branching)
    }

    fn truncate(&mut self, levels: usize) {
        if levels == 0 {
            self.children.clear();
        } else {
            for c in &mut self.children {
                c.truncate(levels - 1);
            }
        }
    }
}

struct NodeOut {
    cover: Option<Vec<VertexId>>,
    stats: SolveStats,
    summary: Summary,
}

/// A child search: graph, budget and how to turn its cover into one of the parent's graph.
struct Child {
    graph: Graph,
    k: i64,
    lift: Lift,
}

enum Lift {
    Add(Vec<VertexId>),
    /// Exclude side of B6: add `v_yz`, replay the trace, then add `x`.
    ThroughTrace {
        merged: VertexId,
        trace: Vec<TraceStep>,
        x: VertexId,
    },
}

impl Lift {
    fn apply(&self, cover: Vec<VertexId>) -> Vec<VertexId> {
        match self {
            Lift::Add(set) => {
                let mut c = cover;
                c.extend_from_slice(set);
                c.sort_unstable();
                c.dedup();
                c
            }
            Lift::ThroughTrace { merged, trace, x } => {
                let mut c = cover;
                c.push(*merged);
                let mut c = reduce::lift_unchecked(trace, &c);
                c.push(*x);
                c.sort_unstable();
                c.dedup();
                c
            }
        }
    }
}

enum Decision {
    Plain(BranchDecision),
    B6 { v: VertexId, x: VertexId },
}

/// A configured solver.
#[derive(Clone, Debug, Default)]
pub struct Solver {
    pub config: SolverConfig,
}

struct Run<'a> {
    cfg: &'a SolverConfig,
    depth_limit: u64,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Solver { config }
    }

    /// Decides whether `g` has a vertex cover of size at most `k`.
    pub fn decide(&self, g: &Graph, k: i64) -> Result<Outcome, SolveError> {
        let lp = lp_value_on(g, &full_mask(g)) as i64;
        let mu_root = 2 * k - lp;
        let comps = g.component_sets().len() as u64;
        let run = Run {
            cfg: &self.config,
            depth_limit: mu_root.max(0) as u64 + 2 * comps + 4,
        };
        let out = run.node(g.clone(), k, 0)?;
        let mut stats = out.stats;
        stats.mu_root = mu_root;
        if let Some(c) = &out.cover {
            if !g.is_vertex_cover(c) || c.len() as i64 > k || c.iter().any(|&v| !g.contains(v)) {
                return Err(SolveError::Invariant(format!(
                    "returned set of size {} is not a cover within {k}",
                    c.len()
                )));
            }
        }
        if stats.violations() > 0 {
            return Err(SolveError::Violations {
                drops: stats.drop_violations,
                sequence: stats.sequence_violations,
                structure: stats.structure_violations,
            });
        }
        Ok(Outcome {
            cover: out.cover,
            stats,
        })
    }

    /// Minimum vertex cover by iterative deepening from the LP bound.
    pub fn minimum(&self, g: &Graph) -> Result<Outcome, SolveError> {
        let lp = lp_value_on(g, &full_mask(g)) as i64;
        let mut total = SolveStats::default();
        let mut k = (lp + 1) / 2;
        loop {
            let out = self.decide(g, k)?;
            total.merge(&out.stats);
            if let Some(cover) = out.cover {
                total.mu_root = out.stats.mu_root;
                return Ok(Outcome {
                    cover: Some(cover),
                    stats: total,
                });
            }
            k += 1;
        }
    }
}

/// Vertex cover of size at most `k`, or `None`.
pub fn solve_decision(
    g: &Graph,
    k: i64,
    variant: Variant,
) -> Result<Option<Vec<VertexId>>, SolveError> {
    Ok(Solver::new(SolverConfig::with_variant(variant))
        .decide(g, k)?
        .cover)
}

/// A minimum vertex cover.
pub fn solve_minimum(g: &Graph, variant: Variant) -> Result<Vec<VertexId>, SolveError> {
    let out = Solver::new(SolverConfig::with_variant(variant)).minimum(g)?;
    Ok(out.cover.expect("iterative deepening ends with a cover"))
}

fn branch_children(g: &Graph, k: i64, d: &BranchDecision) -> Result<Vec<Child>, SolveError> {
    d.children
        .iter()
        .map(|c| {
            Ok(Child {
                graph: g.delete_vertices(&c.delete)?,
                k: k - c.charge() as i64,
                lift: Lift::Add(c.include.clone()),
            })
        })
        .collect()
}

/// Include `set` / exclude `set` (which puts `N(set)` into the cover).
fn in_out(g: &Graph, rule: Rule, set: Vec<VertexId>) -> Result<BranchDecision, SolveError> {
    let nbrs = g.open_neighborhood(&set)?;
    let closed = g.closed_neighborhood(&set)?;
    Ok(BranchDecision {
        rule,
        pivot: set.clone(),
        children: vec![
            ChildSpec {
                include: set.clone(),
                delete: set,
            },
            ChildSpec {
                include: nbrs,
                delete: closed,
            },
        ],
    })
}

/// Whether the B6 preconditions hold: connected, cubic, at least 11 vertices, girth at least 7.
pub fn b6_structure_ok(g: &Graph) -> bool {
    g.is_connected()
        && g.vertex_count() >= 11
        && g.vertices().all(|v| g.degree(v) == 3)
        && g.girth().is_none_or(|l| l >= 7)
}

impl Run<'_> {
    fn node(&self, g: Graph, k: i64, depth: u64) -> Result<NodeOut, SolveError> {
        if depth > self.depth_limit {
            return Err(SolveError::DepthExceeded {
                depth,
                limit: self.depth_limit,
            });
        }
        let mut stats = SolveStats {
            nodes_visited: 1,
            max_depth: depth,
            ..SolveStats::default()
        };
        let r = reduce::reduce_with(&ReducedInstance::new(g, k), self.cfg.exec)?;
        for step in &r.trace {
            match step {
                TraceStep::ForcedOnes(_) => stats.fire(Rule::R1),
                TraceStep::ForcedZeros(_) => {}
                TraceStep::StructionR2 { .. } => stats.fire(Rule::R2),
                TraceStep::StructionR3 { .. } => stats.fire(Rule::R3),
            }
        }
        let mu = r.mu;
        if mu < 0 {
            return Ok(NodeOut {
                cover: None,
                stats,
                summary: Summary::leaf(mu, None),
            });
        }
        if r.graph.is_empty() {
            let cover = reduce::lift_unchecked(&r.trace, &[]);
            return Ok(NodeOut {
                cover: Some(cover),
                stats,
                summary: Summary::leaf(mu, None),
            });
        }

        let comps = r.graph.component_sets();
        if comps.len() > 1 || r.graph.vertex_count() <= self.cfg.base_size {
            let rule = if comps.len() > 1 {
                Rule::Split
            } else {
                Rule::Base
            };
            stats.fire(rule);
            let cover = self.components(&r, &comps, depth, &mut stats)?;
            let cover = cover.map(|c| reduce::lift_unchecked(&r.trace, &c));
            return Ok(NodeOut {
                cover,
                stats,
                summary: Summary::leaf(mu, Some(rule)),
            });
        }

        let (rule, children) = match self.decide_branch(&r.graph, &mut stats)? {
            Decision::Plain(d) => (d.rule, branch_children(&r.graph, r.k, &d)?),
            Decision::B6 { v, x } => (Rule::B6, self.b6_children(&r, v, x)?),
        };
        stats.fire(rule);

        let outs = self.run_children(children, depth + 1)?;
        let mut summary = Summary {
            mu,
            rule: Some(rule),
            children: Vec::new(),
        };
        let mut cover = None;
        for (out, lift) in outs {
            stats.merge(&out.stats);
            summary.children.push(out.summary);
            if let Some(c) = out.cover {
                cover = Some(reduce::lift_unchecked(&r.trace, &lift.apply(c)));
            }
        }
        if self.cfg.check_measure {
            let (drops, sequence) = check_summary(&summary);
            stats.drop_violations += drops;
            stats.sequence_violations += sequence;
        }
        summary.truncate(3);
        Ok(NodeOut {
            cover,
            stats,
            summary,
        })
    }

    /// Explores children in order, stopping at the first YES. In parallel mode both
    /// run concurrently and results after a YES are discarded, so the outcome and
    /// the statistics match the sequential order exactly.
    fn run_children(
        &self,
        children: Vec<Child>,
        depth: u64,
    ) -> Result<Vec<(NodeOut, Lift)>, SolveError> {
        let mut out = Vec::new();
        if self.cfg.exec.is_parallel() && children.len() == 2 {
            let mut it = children.into_iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            let (ra, rb) = exec::join(
                self.cfg.exec,
                || self.node(a.graph, a.k, depth),
                || self.node(b.graph, b.k, depth),
            );
            let ra = ra?;
            let yes = ra.cover.is_some();
            out.push((ra, a.lift));
            if !yes {
                out.push((rb?, b.lift));
            }
            return Ok(out);
        }
        for c in children {
            let r = self.node(c.graph, c.k, depth)?;
            let yes = r.cover.is_some();
            out.push((r, c.lift));
            if yes {
                break;
            }
        }
        Ok(out)
    }

    fn decide_branch(&self, g: &Graph, stats: &mut SolveStats) -> Result<Decision, SolveError> {
        let mode = self.cfg.exec;
        if self.cfg.variant == Variant::Simple {
            let v = g.vertices().next().expect("non-empty");
            return Ok(Decision::Plain(in_out(g, Rule::Simple, vec![v])?));
        }
        if let Some(s) = select::select_b1_with(g, mode) {
            return Ok(Decision::Plain(in_out(g, Rule::B1, s)?));
        }
        if let Some((v, u)) = select_b2(g) {
            let nv = g.neighbors(v).to_vec();
            let nu = g.neighbors(u).to_vec();
            let d = BranchDecision {
                rule: Rule::B2,
                pivot: vec![v, u],
                children: vec![
                    ChildSpec {
                        include: nv,
                        delete: g.closed_neighborhood(&[v])?,
                    },
                    ChildSpec {
                        include: nu,
                        delete: g.closed_neighborhood(&[u])?,
                    },
                ],
            };
            return Ok(Decision::Plain(d));
        }
        if let Some(v) = select::select_b3_with(g, mode)? {
            return Ok(Decision::Plain(in_out(g, Rule::B3, vec![v])?));
        }
        if let Some(v) = select_b4(g) {
            return Ok(Decision::Plain(in_out(g, Rule::B4, vec![v])?));
        }
        if let Some(v) = select::select_b5_with(g, mode)? {
            return Ok(Decision::Plain(in_out(g, Rule::B5, vec![v])?));
        }
        if !b6_structure_ok(g) {
            stats.structure_violations += 1;
        }
        let v = g.vertices().next().expect("non-empty");
        let x = *g
            .neighbors(v)
            .first()
            .ok_or_else(|| SolveError::Invariant("B6 pivot is isolated".into()))?;
        Ok(Decision::B6 { v, x })
    }

    /// Include `v`; or exclude `v`: take `x`, reduce (which folds `v` with its two
    /// remaining neighbours into `v_yz`) and take `v_yz` as well.
    fn b6_children(
        &self,
        r: &ReducedInstance,
        v: VertexId,
        x: VertexId,
    ) -> Result<Vec<Child>, SolveError> {
        let g = &r.graph;
        let include = Child {
            graph: g.delete_vertices(&[v])?,
            k: r.k - 1,
            lift: Lift::Add(vec![v]),
        };
        let after_x = reduce::reduce_with(
            &ReducedInstance::new(g.delete_vertices(&[x])?, r.k - 1),
            self.cfg.exec,
        )?;
        let merged = after_x.trace.iter().find_map(|s| match s {
            TraceStep::StructionR3 { z, merged, .. } if z.as_slice() == [v] => Some(*merged),
            _ => None,
        });
        let Some(vyz) = merged.filter(|&m| after_x.graph.contains(m)) else {
            return Err(SolveError::Invariant(format!(
                "B6: pivot {v} did not fold into a live vertex after removing {x}"
            )));
        };
        let exclude = Child {
            graph: after_x.graph.delete_vertices(&[vyz])?,
            k: after_x.k - 1,
            lift: Lift::ThroughTrace {
                merged: vyz,
                trace: after_x.trace,
                x,
            },
        };
        Ok(vec![include, exclude])
    }

    /// Solves each component optimally, smallest first by identifier, within the
    /// budget left after reserving the LP lower bound of the remaining components.
    fn components(
        &self,
        r: &ReducedInstance,
        comps: &[Vec<VertexId>],
        depth: u64,
        stats: &mut SolveStats,
    ) -> Result<Option<Vec<VertexId>>, SolveError> {
        let subs: Vec<Graph> = comps.iter().map(|c| r.graph.induced(c)).collect();
        let lbs: Vec<i64> = subs
            .iter()
            .map(|s| (lp_value_on(s, &full_mask(s)) as i64 + 1) / 2)
            .collect();
        let mut used = 0i64;
        let mut cover = Vec::new();
        for (i, sub) in subs.into_iter().enumerate() {
            let cap = r.k - used - lbs[i + 1..].iter().sum::<i64>();
            if cap < lbs[i] {
                return Ok(None);
            }
            let found = if sub.vertex_count() <= self.cfg.base_size {
                if comps.len() > 1 {
                    stats.fire(Rule::Base);
                }
                let c = exact_small_cover(&sub);
                (c.len() as i64 <= cap).then_some(c)
            } else {
                let mut hit = None;
                for kc in lbs[i]..=cap {
                    let out = self.node(sub.clone(), kc, depth)?;
                    stats.merge(&out.stats);
                    if let Some(c) = out.cover {
                        hit = Some(c);
                        break;
                    }
                }
                hit
            };
            let Some(c) = found else { return Ok(None) };
            used += c.len() as i64;
            cover.extend(c);
        }
        cover.sort_unstable();
        Ok(Some(cover))
    }
}

/// Counts (drop, sequence) violations of a freshly explored branch node.
fn check_summary(s: &Summary) -> (u64, u64) {
    let Some(rule) = s.rule else { return (0, 0) };
    let mut drops = 0;
    let mut sequence = 0;
    for (child, need) in s.children.iter().zip(rule.drops()) {
        if s.mu - child.mu < need {
            drops += 1;
        }
    }
    let in_b1_b3 = |r: Option<Rule>| matches!(r, Some(Rule::B1 | Rule::B2 | Rule::B3));
    let in_b1_b4 = |r: Option<Rule>| matches!(r, Some(Rule::B1 | Rule::B2 | Rule::B3 | Rule::B4));
    let composite = |leaves: Vec<i64>, need: &[i64]| -> bool {
        let mut got: Vec<i64> = leaves.iter().map(|m| s.mu - m).collect();
        got.sort_unstable();
        got.iter().zip(need).all(|(g, n)| g >= n)
    };
    match rule {
        Rule::B5 => {
            if let Some(inc) = s.children.first().filter(|c| c.branched()) {
                if !in_b1_b3(inc.rule) {
                    sequence += 1;
                } else if inc.children.len() == 2 && s.children.len() == 2 {
                    let leaves = vec![inc.children[0].mu, inc.children[1].mu, s.children[1].mu];
                    if !composite(leaves, &[2, 3, 3]) {
                        drops += 1;
                    }
                }
            }
        }
        Rule::B6 => {
            let inc = s.children.first().filter(|c| c.branched());
            let exc = s.children.get(1).filter(|c| c.branched());
            let mut inc_inc = None;
            if let Some(inc) = inc {
                if inc.rule != Some(Rule::B4) {
                    sequence += 1;
                } else if let Some(ii) = inc.children.first().filter(|c| c.branched()) {
                    if !in_b1_b4(ii.rule) {
                        sequence += 1;
                    } else {
                        inc_inc = Some(ii);
                    }
                }
            }
            if let Some(exc) = exc {
                if !in_b1_b4(exc.rule) {
                    sequence += 1;
                }
            }
            if let (Some(inc), Some(ii), Some(exc)) = (inc, inc_inc, exc) {
                if ii.children.len() == 2
                    && inc.children.len() == 2
                    && exc.children.len() == 2
                    && in_b1_b4(exc.rule)
                {
                    let leaves = vec![
                        ii.children[0].mu,
                        ii.children[1].mu,
                        inc.children[1].mu,
                        exc.children[0].mu,
                        exc.children[1].mu,
                    ];
                    if !composite(leaves, &[3, 3, 4, 5, 5]) {
                        drops += 1;
                    }
                }
            }
        }
        _ => {}
    }
    (drops, sequence)
}
