//! Exhaustive checks of the extremal results over small orders.
//!
//! Every tree of each order is generated once and its `SW_k` profile cached
//! in a [`Census`]; instance classes are then read off the census. Each
//! (class, k) pair yields one [`VerificationReport`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backbone::{all_backbones, groups_admit_valley, is_unimodal, is_valley, BackboneView};
use crate::canon::{canonical_code, is_isomorphic, CanonicalCode};
use crate::count::ExactCount;
use crate::enumerate::{all_trees, EnumError};
use crate::generators::{
    balanced_starlike, family_t, starlike, CaterpillarFamilyParams, Family, GenError,
};
use crate::moves::{transform, MoveDescriptor, MoveError};
use crate::segments::{
    is_caterpillar, is_quasi_caterpillar, is_starlike, segment_sequence, SegmentSequence,
};
use crate::steiner::{sw_k, sw_profile, SteinerError, SwProfile};
use crate::tree::Tree;

/// Largest order the exhaustive checks accept.
pub const VERIFY_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("max order {0} outside 2..={VERIFY_MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("k set is empty or contains 0")]
    BadKSet,
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error(transparent)]
    Steiner(#[from] SteinerError),
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Theorem1,
    Theorem2,
    Structure,
    Theorem5min,
    Theorem5max,
    Lemma31,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Theorem1,
        Theorem::Theorem2,
        Theorem::Structure,
        Theorem::Theorem5min,
        Theorem::Theorem5max,
        Theorem::Lemma31,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Theorem1 => "theorem1",
            Theorem::Theorem2 => "theorem2",
            Theorem::Structure => "structure",
            Theorem::Theorem5min => "theorem5min",
            Theorem::Theorem5max => "theorem5max",
            Theorem::Lemma31 => "lemma31",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceClass {
    Segments { segments: SegmentSequence },
    Order { n: usize, m: usize },
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Violated,
    ConfirmedWithNotes,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Violated => "violated",
            Verdict::ConfirmedWithNotes => "confirmed-with-notes",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub instance_class: InstanceClass,
    pub k: usize,
    /// The optimum over the class; for sampled classes, the smallest delta.
    pub extremal_value: ExactCount,
    pub arg_trees: Vec<CanonicalCode>,
    /// Keyed by canonical code, then by predicate name.
    pub predicate_outcomes: BTreeMap<String, BTreeMap<String, bool>>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn finish(mut self, violated: bool) -> Self {
        self.verdict = if violated {
            Verdict::Violated
        } else if self.notes.is_empty() {
            Verdict::Confirmed
        } else {
            Verdict::ConfirmedWithNotes
        };
        self
    }
}

/// True when any report is `violated`.
pub fn any_violated(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Violated)
}

#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub tree: Tree,
    pub code: CanonicalCode,
    pub sequence: SegmentSequence,
    pub profile: SwProfile,
}

impl CensusEntry {
    fn sw(&self, k: usize) -> ExactCount {
        self.profile.get(k).expect("k checked against the order")
    }
}

/// Every tree of one order with its segment sequence and `SW_k` profile.
#[derive(Debug, Clone)]
pub struct Census {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
}

impl Census {
    pub fn build(n: usize) -> Result<Census, VerifyError> {
        let trees: Vec<Tree> = all_trees(n)?.collect();
        let entries = trees
            .into_par_iter()
            .map(|tree| {
                Ok(CensusEntry {
                    code: canonical_code(&tree),
                    sequence: segment_sequence(&tree).expect("order >= 2"),
                    profile: sw_profile(&tree)?,
                    tree,
                })
            })
            .collect::<Result<Vec<_>, VerifyError>>()?;
        Ok(Census { n, entries })
    }

    pub fn by_sequence(&self) -> BTreeMap<SegmentSequence, Vec<&CensusEntry>> {
        let mut map: BTreeMap<SegmentSequence, Vec<&CensusEntry>> = BTreeMap::new();
        for e in &self.entries {
            map.entry(e.sequence.clone()).or_default().push(e);
        }
        map
    }

    pub fn with_segment_count(&self, m: usize) -> Vec<&CensusEntry> {
        self.entries.iter().filter(|e| e.sequence.count() == m).collect()
    }
}

fn censuses(max_n: usize) -> Result<Vec<Census>, VerifyError> {
    if !(2..=VERIFY_MAX_ORDER).contains(&max_n) {
        return Err(VerifyError::OrderOutOfRange(max_n));
    }
    (2..=max_n).map(Census::build).collect()
}

fn check_k_set(k_set: &[usize]) -> Result<(), VerifyError> {
    if k_set.is_empty() || k_set.contains(&0) {
        return Err(VerifyError::BadKSet);
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Goal {
    Min,
    Max,
}

/// Optimum and its attaining entries, ordered by canonical code.
fn extremum<'a>(class: &[&'a CensusEntry], k: usize, goal: Goal) -> (ExactCount, Vec<&'a CensusEntry>) {
    let values = class.iter().map(|e| e.sw(k));
    let best = match goal {
        Goal::Min => values.min(),
        Goal::Max => values.max(),
    }
    .expect("classes are nonempty");
    let mut arg: Vec<&CensusEntry> = class.iter().copied().filter(|e| e.sw(k) == best).collect();
    arg.sort_by(|a, b| a.code.cmp(&b.code));
    (best, arg)
}

fn blank(theorem: Theorem, class: InstanceClass, k: usize, value: ExactCount, arg: &[&CensusEntry]) -> VerificationReport {
    VerificationReport {
        theorem,
        instance_class: class,
        k,
        extremal_value: value,
        arg_trees: arg.iter().map(|e| e.code.clone()).collect(),
        predicate_outcomes: BTreeMap::new(),
        verdict: Verdict::Confirmed,
        notes: Vec::new(),
    }
}

fn single(name: &str, value: bool) -> BTreeMap<String, bool> {
    BTreeMap::from([(name.to_string(), value)])
}

/// Every (segment sequence, k) pair up to `max_n`, in a fixed order.
fn sequence_tasks<'a>(
    cs: &'a [Census],
    k_set: &[usize],
) -> Vec<(SegmentSequence, Vec<&'a CensusEntry>, usize)> {
    let mut tasks = Vec::new();
    for c in cs {
        for (seq, class) in c.by_sequence() {
            for &k in k_set.iter().filter(|&&k| k <= c.n) {
                tasks.push((seq.clone(), class.clone(), k));
            }
        }
    }
    tasks
}

/// Every (n, m, k) with `m` realizable at order `n`.
fn count_tasks<'a>(cs: &'a [Census], k_set: &[usize]) -> Vec<(usize, usize, Vec<&'a CensusEntry>, usize)> {
    let mut tasks = Vec::new();
    for c in cs {
        for m in (1..c.n).filter(|&m| m != 2) {
            let class = c.with_segment_count(m);
            for &k in k_set.iter().filter(|&&k| k <= c.n) {
                tasks.push((c.n, m, class.clone(), k));
            }
        }
    }
    tasks
}

pub fn verify_min_starlike(max_n: usize, k_set: &[usize]) -> Result<Vec<VerificationReport>, VerifyError> {
    check_k_set(k_set)?;
    let cs = censuses(max_n)?;
    sequence_tasks(&cs, k_set)
        .into_par_iter()
        .map(|(seq, class, k)| {
            let (min, arg) = extremum(&class, k, Goal::Min);
            let target = sw_k(&starlike(&seq)?, k)?;
            let mut r = blank(Theorem::Theorem1, InstanceClass::Segments { segments: seq }, k, min, &arg);
            for e in &arg {
                r.predicate_outcomes
                    .insert(e.code.to_string(), single("isStarlike", is_starlike(&e.tree)));
            }
            if class.len() == 1 {
                r.notes.push("class has a single tree".into());
            }
            Ok(r.finish(min != target))
        })
        .collect()
}

pub fn verify_max_quasi_caterpillar(max_n: usize, k_set: &[usize]) -> Result<Vec<VerificationReport>, VerifyError> {
    check_k_set(k_set)?;
    let cs = censuses(max_n)?;
    Ok(sequence_tasks(&cs, k_set)
        .into_par_iter()
        .map(|(seq, class, k)| {
            let (max, arg) = extremum(&class, k, Goal::Max);
            let mut r = blank(Theorem::Theorem2, InstanceClass::Segments { segments: seq }, k, max, &arg);
            let mut hits = 0;
            for e in &arg {
                let qc = is_quasi_caterpillar(&e.tree);
                hits += usize::from(qc);
                r.predicate_outcomes
                    .insert(e.code.to_string(), single("isQuasiCaterpillar", qc));
            }
            if hits > 0 && hits < arg.len() {
                r.notes.push(format!(
                    "{} of {} maximizers are not quasi-caterpillars",
                    arg.len() - hits,
                    arg.len()
                ));
            }
            r.finish(hits == 0)
        })
        .collect())
}

/// Outcome of the structure predicates for one tree under one backbone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructurePredicateSet {
    pub is_quasi_caterpillar: bool,
    pub max_degree_le4: bool,
    pub degree4_only_at_ends: bool,
    pub backbone_unimodal: bool,
    pub pendants_anti_unimodal: bool,
}

impl StructurePredicateSet {
    pub fn all(&self) -> bool {
        self.is_quasi_caterpillar
            && self.max_degree_le4
            && self.degree4_only_at_ends
            && self.backbone_unimodal
            && self.pendants_anti_unimodal
    }

    fn passed(&self) -> usize {
        [
            self.is_quasi_caterpillar,
            self.max_degree_le4,
            self.degree4_only_at_ends,
            self.backbone_unimodal,
            self.pendants_anti_unimodal,
        ]
        .into_iter()
        .filter(|&b| b)
        .count()
    }

    pub fn to_map(&self) -> BTreeMap<String, bool> {
        BTreeMap::from([
            ("isQuasiCaterpillar".to_string(), self.is_quasi_caterpillar),
            ("maxDegreeLe4".to_string(), self.max_degree_le4),
            ("degree4OnlyAtEnds".to_string(), self.degree4_only_at_ends),
            ("backboneUnimodal".to_string(), self.backbone_unimodal),
            ("pendantsAntiUnimodal".to_string(), self.pendants_anti_unimodal),
        ])
    }
}

fn predicates_for(t: &Tree, b: &BackboneView) -> StructurePredicateSet {
    let joints: Vec<usize> = b.joints().collect();
    let ends = [joints.first().copied(), joints.last().copied()];
    let max_degree_le4 = t.max_degree() <= 4;
    StructurePredicateSet {
        is_quasi_caterpillar: true,
        max_degree_le4,
        degree4_only_at_ends: max_degree_le4
            && (0..t.order())
                .filter(|&v| t.degree(v) == 4)
                .all(|v| ends.contains(&Some(v))),
        backbone_unimodal: is_unimodal(&b.backbone_segment_lengths),
        pendants_anti_unimodal: groups_admit_valley(&b.pendant_groups),
    }
}

/// The structure predicates under the most favorable backbone.
pub fn structure_predicates(t: &Tree) -> StructurePredicateSet {
    let Ok(views) = all_backbones(t) else {
        return StructurePredicateSet {
            max_degree_le4: t.max_degree() <= 4,
            ..Default::default()
        };
    };
    views
        .iter()
        .map(|b| predicates_for(t, b))
        .max_by_key(|p| (p.all(), p.passed()))
        .expect("a quasi-caterpillar has a backbone")
}

pub fn verify_structure(max_n: usize, k_set: &[usize]) -> Result<Vec<VerificationReport>, VerifyError> {
    check_k_set(k_set)?;
    let cs = censuses(max_n)?;
    Ok(sequence_tasks(&cs, k_set)
        .into_par_iter()
        .map(|(seq, class, k)| {
            let (max, arg) = extremum(&class, k, Goal::Max);
            let mut r = blank(Theorem::Structure, InstanceClass::Segments { segments: seq }, k, max, &arg);
            let mut passing = 0;
            let mut failing_qc = 0;
            for e in &arg {
                let p = structure_predicates(&e.tree);
                if p.all() {
                    passing += 1;
                } else if p.is_quasi_caterpillar {
                    failing_qc += 1;
                }
                r.predicate_outcomes.insert(e.code.to_string(), p.to_map());
            }
            if passing > 0 && failing_qc > 0 {
                r.notes.push(format!(
                    "{failing_qc} maximizing quasi-caterpillar(s) fail the structure under every backbone"
                ));
            }
            r.finish(passing == 0)
        })
        .collect())
}

pub fn verify_min_balanced(max_n: usize, k_set: &[usize]) -> Result<Vec<VerificationReport>, VerifyError> {
    check_k_set(k_set)?;
    let cs = censuses(max_n)?;
    count_tasks(&cs, k_set)
        .into_par_iter()
        .map(|(n, m, class, k)| {
            let (min, arg) = extremum(&class, k, Goal::Min);
            let balanced = balanced_starlike(n, m)?;
            let target = sw_k(&balanced, k)?;
            let mut r = blank(Theorem::Theorem5min, InstanceClass::Order { n, m }, k, min, &arg);
            for e in &arg {
                r.predicate_outcomes.insert(
                    e.code.to_string(),
                    single("isBalancedStarlike", is_isomorphic(&e.tree, &balanced)),
                );
            }
            Ok(r.finish(min != target))
        })
        .collect()
}

/// Degrees of the internal backbone vertices of a caterpillar.
fn caterpillar_pattern(t: &Tree) -> Option<Vec<usize>> {
    if !is_caterpillar(t) {
        return None;
    }
    let views = all_backbones(t).ok()?;
    let b = views.first()?;
    Some(b.path[1..b.path.len() - 1].iter().map(|&v| t.degree(v)).collect())
}

/// Some split into a non-2 prefix, a run of 2s and a non-2 suffix whose
/// pendant counts differ by at most one.
pub fn near_balanced(pattern: &[usize]) -> bool {
    let pendants = |xs: &[usize]| -> usize { xs.iter().map(|d| d.saturating_sub(2)).sum() };
    let len = pattern.len();
    let prefix_max = pattern.iter().take_while(|&&d| d != 2).count();
    (0..=prefix_max).any(|a| {
        let run = pattern[a..].iter().take_while(|&&d| d == 2).count();
        (a..=a + run).any(|b| {
            pattern[b..].iter().all(|&d| d != 2)
                && pendants(&pattern[..a]).abs_diff(pendants(&pattern[b..len])) <= 1
        })
    })
}

pub fn caterpillar_predicates(t: &Tree, n: usize, m: usize) -> BTreeMap<String, bool> {
    let pattern = caterpillar_pattern(t);
    let p = pattern.as_deref().unwrap_or(&[]);
    let caterpillar = pattern.is_some();
    let max_degree_le4 = t.max_degree() <= 4;
    let four_at_ends = caterpillar
        && max_degree_le4
        && p.iter()
            .enumerate()
            .all(|(i, &d)| d != 4 || i == 0 || i + 1 == p.len());
    let family_match = Family::ALL.iter().any(|&which| {
        family_t(CaterpillarFamilyParams { n, m, which })
            .map(|f| is_isomorphic(&f.tree, t))
            .unwrap_or(false)
    });
    BTreeMap::from([
        ("isCaterpillar".to_string(), caterpillar),
        ("maxDegreeLe4".to_string(), max_degree_le4),
        ("degree4OnlyAtEnds".to_string(), four_at_ends),
        ("valleyDegreePattern".to_string(), caterpillar && is_valley(p)),
        ("nearBalanced".to_string(), caterpillar && near_balanced(p)),
        ("familyMatch".to_string(), family_match),
    ])
}

const CATERPILLAR_CLAIM: [&str; 4] = [
    "isCaterpillar",
    "maxDegreeLe4",
    "degree4OnlyAtEnds",
    "valleyDegreePattern",
];

pub fn verify_max_caterpillar_family(max_n: usize, k_set: &[usize]) -> Result<Vec<VerificationReport>, VerifyError> {
    check_k_set(k_set)?;
    let cs = censuses(max_n)?;
    Ok(count_tasks(&cs, k_set)
        .into_par_iter()
        .map(|(n, m, class, k)| {
            let (max, arg) = extremum(&class, k, Goal::Max);
            let mut r = blank(Theorem::Theorem5max, InstanceClass::Order { n, m }, k, max, &arg);
            let mut shaped = 0;
            let mut matched = 0;
            for e in &arg {
                let preds = caterpillar_predicates(&e.tree, n, m);
                shaped += usize::from(CATERPILLAR_CLAIM.iter().all(|p| preds[*p]));
                matched += usize::from(preds["familyMatch"]);
                r.predicate_outcomes.insert(e.code.to_string(), preds);
            }
            let members: Vec<_> = Family::ALL
                .into_iter()
                .filter_map(|which| family_t(CaterpillarFamilyParams { n, m, which }).ok())
                .collect();
            if m >= 3 && members.is_empty() {
                r.notes.push(format!("no family member exists for n = {n}, m = {m}"));
            } else if m >= 3 && matched == 0 {
                r.notes.push("no maximizer is isomorphic to a family member".into());
            }
            for f in members.iter().filter(|f| f.t_adjusted()) {
                r.notes.push(format!(
                    "T_{}: nominal t = {} gives order {}; built with t = {}",
                    f.params.which,
                    f.nominal_t,
                    n + f.nominal_t - f.t,
                    f.t
                ));
            }
            r.finish(shaped == 0)
        })
        .collect())
}

/// Uniform random recursive tree on `size` vertices, as parent links.
fn random_tree(rng: &mut ChaCha8Rng, size: usize) -> Vec<(usize, usize)> {
    (1..size).map(|v| (rng.gen_range(0..v), v)).collect()
}

/// A switch instance: segment `w_0 .. w_s`, the side `X` (containing `w_0`)
/// and `Y` (containing `w_s`), and single components `A` at `w_0` and `B`
/// at `w_s`.
#[derive(Debug, Clone)]
pub struct SwitchInstance {
    pub tree: Tree,
    pub descriptor: MoveDescriptor,
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
}

struct Builder {
    edges: Vec<(usize, usize)>,
    next: usize,
}

impl Builder {
    /// Adds a copy of `shape` and returns the id of its root.
    fn graft(&mut self, shape: &[(usize, usize)], size: usize) -> usize {
        let base = self.next;
        self.edges.extend(shape.iter().map(|&(u, v)| (u + base, v + base)));
        self.next += size;
        base
    }
}

/// `x, y` include `w_0, w_s`; both must be at least 2 so the ends stay
/// branch vertices. `b_shape` reuses `A`'s shape when given.
pub fn switch_instance(
    rng: &mut ChaCha8Rng,
    s: usize,
    (x, y, a, b): (usize, usize, usize, usize),
    same_shape: bool,
) -> SwitchInstance {
    assert!(s >= 1 && x >= 2 && y >= 2 && a >= 1 && b >= 1);
    let mut g = Builder { edges: Vec::new(), next: 0 };
    let w0 = g.graft(&random_tree(rng, x), x);
    let ws = g.graft(&random_tree(rng, y), y);
    let mut prev = w0;
    for _ in 1..s {
        let v = g.graft(&[], 1);
        g.edges.push((prev, v));
        prev = v;
    }
    g.edges.push((prev, ws));
    let a_shape = random_tree(rng, a);
    let b_shape = if same_shape { a_shape.clone() } else { random_tree(rng, b) };
    let ra = g.graft(&a_shape, a);
    let rb = g.graft(&b_shape, b);
    g.edges.push((w0, ra));
    g.edges.push((ws, rb));
    let tree = Tree::from_edges(g.next, &g.edges).expect("instance is a tree");
    SwitchInstance {
        tree,
        descriptor: MoveDescriptor::Switch { w0, ws, a: vec![ra], b: vec![rb] },
        x,
        y,
        a,
        b,
    }
}

/// Random sizes with `|X| > |Y|`, `|A| > |B|` and `|X| >= k_max`.
fn strict_sizes(rng: &mut ChaCha8Rng, k_max: usize) -> (usize, usize, usize, usize) {
    let y = rng.gen_range(2..=5);
    let x = rng.gen_range(y + 1..=y + 4).max(k_max);
    let b = rng.gen_range(1..=4);
    let a = rng.gen_range(b + 1..=b + 4);
    (x, y, a, b)
}

fn switch_delta(inst: &SwitchInstance, k: usize) -> Result<ExactCount, VerifyError> {
    let after = transform(&inst.tree, &inst.descriptor)?;
    Ok(sw_k(&after, k)?.checked_sub(sw_k(&inst.tree, k)?).map_err(SteinerError::from)?)
}

/// One report per `k`. Each sample is a strict instance, plus a mirrored
/// instance (`|X| < |Y|`) expected to lose and a control with `A`, `B`
/// isomorphic expected to change nothing.
pub fn verify_lemma31(samples: usize, seed: u64, k_set: &[usize]) -> Result<Vec<VerificationReport>, VerifyError> {
    check_k_set(k_set)?;
    if samples == 0 {
        return Err(VerifyError::NoSamples);
    }
    let k_max = *k_set.iter().max().expect("checked nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples = Vec::with_capacity(samples);
    for _ in 0..samples {
        let s = rng.gen_range(1..=3);
        let sizes = strict_sizes(&mut rng, k_max);
        let strict = switch_instance(&mut rng, s, sizes, false);
        let (x, y, a, b) = sizes;
        let mirrored = switch_instance(&mut rng, s, (y, x, a, b), false);
        let control = switch_instance(&mut rng, s, (x, y, a, a), true);
        triples.push((strict, mirrored, control));
    }

    k_set
        .iter()
        .map(|&k| {
            let mut min_delta: Option<ExactCount> = None;
            let mut failures = Vec::new();
            let mut mirror_failures = 0;
            let mut control_failures = 0;
            for (strict, mirrored, control) in &triples {
                let d = switch_delta(strict, k)?;
                min_delta = Some(min_delta.map_or(d, |m| m.min(d)));
                if d <= ExactCount::ZERO {
                    failures.push(canonical_code(&strict.tree));
                }
                if switch_delta(mirrored, k)? >= ExactCount::ZERO {
                    mirror_failures += 1;
                }
                if switch_delta(control, k)? != ExactCount::ZERO {
                    control_failures += 1;
                }
            }
            let mut r = VerificationReport {
                theorem: Theorem::Lemma31,
                instance_class: InstanceClass::Sampled { samples, seed },
                k,
                extremal_value: min_delta.expect("samples >= 1"),
                arg_trees: failures.clone(),
                predicate_outcomes: BTreeMap::new(),
                verdict: Verdict::Confirmed,
                notes: Vec::new(),
            };
            if mirror_failures > 0 {
                r.notes.push(format!("{mirror_failures} mirrored instances did not lose"));
            }
            if control_failures > 0 {
                r.notes.push(format!("{control_failures} isomorphic controls changed the index"));
            }
            Ok(r.finish(!failures.is_empty() || control_failures > 0))
        })
        .collect()
}
