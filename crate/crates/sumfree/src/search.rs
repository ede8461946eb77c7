//! Exhaustive and budgeted searches over sum-free subsets of F_p^n:
//! enumeration with optional isomorph rejection, branch-and-bound
//! maximization of non-normal sets, and seeded greedy samplers.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certify::{forbidden_sums, is_normal, is_sum_free, normalize_to_shape};
use crate::error::{Error, Result};
use crate::group::{enumerate_gl, gl_order, hyperplanes, GroupSpec, Mat};
use crate::set::GroupSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    EnumerateAll,
    MaxNonnormal,
    SampleGreedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryReduction {
    None,
    /// Lex-leader pruning on the first two chosen elements: a canonical
    /// orbit representative always starts with e1 and its second element
    /// is at most e2, so other prefixes are cut.
    StabilizerPrefix,
    /// Emit only sets equal to their minimum image over all of GL(n,p).
    FullCanonical,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub spec: GroupSpec,
    pub min_size: u64,
    pub mode: SearchMode,
    pub node_budget: u64,
    pub symmetry_reduction: SymmetryReduction,
    pub seed: u64,
    pub checkpoint_path: Option<PathBuf>,
    /// Known sum-free sets used to initialize the incumbent in
    /// max_nonnormal mode.
    pub seed_sets: Vec<GroupSet>,
    /// Write a checkpoint record every this many nodes.
    pub checkpoint_every: u64,
}

impl SearchConfig {
    pub fn new(spec: GroupSpec, mode: SearchMode) -> Self {
        SearchConfig {
            spec,
            min_size: 0,
            mode,
            node_budget: 1 << 40,
            symmetry_reduction: SymmetryReduction::None,
            seed: 0,
            checkpoint_path: None,
            seed_sets: Vec::new(),
            checkpoint_every: 1 << 16,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget < 1 {
            return Err(Error::usage("node_budget must be at least 1"));
        }
        if self.checkpoint_every < 1 {
            return Err(Error::usage("checkpoint_every must be at least 1"));
        }
        if self.symmetry_reduction == SymmetryReduction::FullCanonical
            && gl_order(self.spec) > 1_000_000
        {
            return Err(Error::usage(
                "full_canonical requires |GL(n,p)| <= 10^6",
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub best_size: u64,
    pub witnesses: Vec<GroupSet>,
    pub nodes_expanded: u64,
    /// True iff the search space was fully covered, so the result is a
    /// proof at this (p, n).
    pub exhaustive: bool,
    pub wall_time: Duration,
}

const MAX_WITNESSES: usize = 16;

#[derive(Serialize, Deserialize)]
struct CheckpointRecord {
    prefix: Vec<u64>,
    best_size: u64,
    nodes: u64,
    witnesses: Vec<Vec<u64>>,
}

/// DFS node state: the chosen prefix plus incrementally maintained
/// forbidden sets A+A and A-A.
#[derive(Clone)]
struct NodeState {
    chosen: Vec<u64>,
    set: GroupSet,
    sums: GroupSet,
    diffs: GroupSet,
}

impl NodeState {
    fn root(spec: GroupSpec) -> Self {
        NodeState {
            chosen: Vec::new(),
            set: GroupSet::empty(spec),
            sums: GroupSet::empty(spec),
            diffs: GroupSet::empty(spec),
        }
    }

    /// Legal iff A u {x} stays sum-free: x nonzero, not in A, not in
    /// A+A or A-A, and 2x not in A.
    fn legal(&self, spec: GroupSpec, x: u64) -> bool {
        x != 0
            && !self.set.contains(x)
            && !self.sums.contains(x)
            && !self.diffs.contains(x)
            && !self.set.contains(spec.add_index(x, x))
    }

    fn child(&self, spec: GroupSpec, x: u64) -> NodeState {
        let mut sums = self
            .sums
            .union(&self.set.translate(x))
            .expect("same spec");
        sums.insert(spec.add_index(x, x));
        let mut diffs = self
            .diffs
            .union(&self.set.translate(spec.neg_index(x)))
            .expect("same spec")
            .union(&self.set.negate().translate(x))
            .expect("same spec");
        diffs.insert(0);
        let mut set = self.set.clone();
        set.insert(x);
        let mut chosen = self.chosen.clone();
        chosen.push(x);
        NodeState {
            chosen,
            set,
            sums,
            diffs,
        }
    }
}

/// The minimum, over all M in GL(n, p), of the sorted index sequence of
/// M(A). Two sets are isomorphic iff their canonical forms are equal.
pub fn canonical_form(a: &GroupSet, gl: &[Mat]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for m in gl {
        let mut image: Vec<u64> = a.indices().map(|i| m.apply_index(i)).collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    best.unwrap_or_default()
}

/// |{M in GL : M(A) = A}|.
pub fn stabilizer_order(a: &GroupSet, gl: &[Mat]) -> u64 {
    let base: Vec<u64> = a.indices().collect();
    gl.iter()
        .filter(|m| {
            let mut image: Vec<u64> = base.iter().map(|&i| m.apply_index(i)).collect();
            image.sort_unstable();
            image == base
        })
        .count() as u64
}

#[derive(PartialEq)]
enum Flow {
    Continue,
    Stop,
}

struct Engine<'a> {
    cfg: &'a SearchConfig,
    gl: Option<Vec<Mat>>,
    nodes: u64,
    budget_hit: bool,
    best: u64,
    witnesses: Vec<GroupSet>,
    skip: Option<Vec<u64>>,
    next_checkpoint: u64,
}

impl<'a> Engine<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        let gl = if cfg.symmetry_reduction == SymmetryReduction::FullCanonical {
            Some(enumerate_gl(cfg.spec))
        } else {
            None
        };
        Engine {
            cfg,
            gl,
            nodes: 0,
            budget_hit: false,
            best: 0,
            witnesses: Vec::new(),
            skip: None,
            next_checkpoint: cfg.checkpoint_every,
        }
    }

    fn is_canonical(&self, st: &NodeState) -> bool {
        let gl = self.gl.as_ref().expect("full_canonical engine");
        for m in gl {
            let mut image: Vec<u64> = st.chosen.iter().map(|&i| m.apply_index(i)).collect();
            image.sort_unstable();
            if image < st.chosen {
                return false;
            }
        }
        true
    }

    fn record_witness(&mut self, set: &GroupSet) {
        debug_assert!(is_sum_free(set));
        let card = set.card();
        if card > self.best {
            self.best = card;
            self.witnesses.clear();
        }
        if card == self.best
            && self.witnesses.len() < MAX_WITNESSES
            && !self.witnesses.contains(set)
        {
            self.witnesses.push(set.clone());
        }
    }

    fn process(&mut self, st: &NodeState, emit: &mut dyn FnMut(&GroupSet)) {
        match self.cfg.mode {
            SearchMode::EnumerateAll => {
                if st.set.card() >= self.cfg.min_size {
                    if self.gl.is_some() && !self.is_canonical(st) {
                        return;
                    }
                    emit(&st.set);
                }
            }
            SearchMode::MaxNonnormal => {
                if st.set.card() >= self.best.max(1)
                    && !is_normal(&st.set).expect("validated spec").is_normal()
                {
                    self.record_witness(&st.set);
                }
            }
            SearchMode::SampleGreedy => {}
        }
    }

    fn maybe_checkpoint(&mut self, st: &NodeState) {
        if self.nodes < self.next_checkpoint {
            return;
        }
        self.next_checkpoint += self.cfg.checkpoint_every;
        let path = match &self.cfg.checkpoint_path {
            Some(p) => p.clone(),
            None => return,
        };
        let record = CheckpointRecord {
            prefix: st.chosen.clone(),
            best_size: self.best,
            nodes: self.nodes,
            witnesses: self
                .witnesses
                .iter()
                .map(|w| w.indices().collect())
                .collect(),
        };
        if let Ok(mut f) = OpenOptions::new().create(true).append(true).open(&path) {
            let line = serde_json::to_string(&record).expect("serializable record");
            let _ = writeln!(f, "{}", line);
        }
    }

    fn resume_from_checkpoint(&mut self) -> Result<()> {
        let path = match &self.cfg.checkpoint_path {
            Some(p) => p.clone(),
            None => return Ok(()),
        };
        if !path.exists() {
            return Ok(());
        }
        let file = File::open(&path)
            .map_err(|e| Error::usage(format!("cannot read checkpoint: {}", e)))?;
        let mut last = None;
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::usage(format!("checkpoint read: {}", e)))?;
            if line.trim().is_empty() {
                continue;
            }
            let record: CheckpointRecord = serde_json::from_str(&line)
                .map_err(|e| Error::usage(format!("malformed checkpoint record: {}", e)))?;
            last = Some(record);
        }
        if let Some(record) = last {
            self.nodes = record.nodes;
            self.best = record.best_size;
            self.next_checkpoint = record.nodes + self.cfg.checkpoint_every;
            self.witnesses = record
                .witnesses
                .into_iter()
                .map(|idxs| GroupSet::from_indices(self.cfg.spec, idxs))
                .collect();
            if !record.prefix.is_empty() {
                self.skip = Some(record.prefix);
            }
        }
        Ok(())
    }

    /// All legal extensions above the last chosen element. Branching is
    /// additionally restricted by the symmetry rule at depths 0 and 1:
    /// a canonical orbit representative always starts with e1 and has
    /// second element at most e2.
    fn candidates(&self, st: &NodeState) -> Vec<u64> {
        let spec = self.cfg.spec;
        let last = st.chosen.last().copied().unwrap_or(0);
        let depth = st.chosen.len();
        let mut lo = last + 1;
        let mut hi = spec.order();
        if self.cfg.symmetry_reduction != SymmetryReduction::None {
            if depth == 0 {
                lo = 1;
                hi = 2;
            } else if depth == 1 {
                hi = hi.min(spec.p() as u64 + 1);
            }
        }
        (lo..hi).filter(|&x| st.legal(spec, x)).collect()
    }

    /// Unrestricted legal extensions, used by the admissible bound and
    /// the normality prune. Elements above the symmetry window are
    /// still reachable at depths >= 2, so the prunes must see them.
    fn all_legal(&self, st: &NodeState) -> Vec<u64> {
        let spec = self.cfg.spec;
        let last = st.chosen.last().copied().unwrap_or(0);
        (last + 1..spec.order())
            .filter(|&x| st.legal(spec, x))
            .collect()
    }

    fn dfs(&mut self, st: &NodeState, emit: &mut dyn FnMut(&GroupSet)) -> Flow {
        let legal = self.all_legal(st);
        let reach = st.chosen.len() as u64 + legal.len() as u64;
        match self.cfg.mode {
            SearchMode::EnumerateAll => {
                if reach < self.cfg.min_size {
                    return Flow::Continue;
                }
            }
            SearchMode::MaxNonnormal => {
                if reach < self.best {
                    return Flow::Continue;
                }
                // Normality is closed under taking subsets, so if the
                // union of this branch's elements is normal the branch
                // cannot contain a non-normal set.
                if self.cfg.spec.order() <= 625 && !legal.is_empty() {
                    let mut u = st.set.clone();
                    for &x in &legal {
                        u.insert(x);
                    }
                    if is_normal(&u).expect("validated spec").is_normal() {
                        return Flow::Continue;
                    }
                }
            }
            SearchMode::SampleGreedy => {}
        }
        let cands = self.candidates(st);
        let depth = st.chosen.len();
        for &x in &cands {
            if let Some(s) = self.skip.clone() {
                if x < s[depth] {
                    continue;
                }
                if x == s[depth] {
                    // replay the checkpointed prefix without recounting
                    let child = st.child(self.cfg.spec, x);
                    if depth + 1 == s.len() {
                        self.skip = None;
                    }
                    if self.dfs(&child, emit) == Flow::Stop {
                        return Flow::Stop;
                    }
                    continue;
                }
                self.skip = None;
            }
            if self.nodes >= self.cfg.node_budget {
                self.budget_hit = true;
                return Flow::Stop;
            }
            self.nodes += 1;
            let child = st.child(self.cfg.spec, x);
            self.process(&child, emit);
            self.maybe_checkpoint(&child);
            if self.dfs(&child, emit) == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn into_report(mut self, started: Instant) -> SearchReport {
        self.witnesses
            .sort_by_key(|w| w.indices().collect::<Vec<_>>());
        SearchReport {
            best_size: self.best,
            witnesses: self.witnesses,
            nodes_expanded: self.nodes,
            exhaustive: !self.budget_hit,
            wall_time: started.elapsed(),
        }
    }
}

/// Streams every sum-free subset of F_p^n with size >= cfg.min_size to
/// the callback; under full_canonical, one representative per GL orbit.
pub fn enumerate_sumfree(
    cfg: &SearchConfig,
    emit: &mut dyn FnMut(&GroupSet),
) -> Result<SearchReport> {
    if cfg.mode != SearchMode::EnumerateAll {
        return Err(Error::usage("enumerate_sumfree requires mode enumerate_all"));
    }
    cfg.validate()?;
    let started = Instant::now();
    let mut engine = Engine::new(cfg);
    let root = NodeState::root(cfg.spec);
    if cfg.min_size == 0 {
        emit(&root.set);
    }
    let mut best = 0u64;
    let mut wrapped = |s: &GroupSet| {
        best = best.max(s.card());
        emit(s);
    };
    let _ = engine.dfs(&root, &mut wrapped);
    engine.best = best;
    Ok(engine.into_report(started))
}

/// Branch-and-bound maximization of |A| over sum-free non-normal A.
pub fn max_nonnormal(cfg: &SearchConfig) -> Result<SearchReport> {
    if cfg.mode != SearchMode::MaxNonnormal {
        return Err(Error::usage("max_nonnormal requires mode max_nonnormal"));
    }
    cfg.validate()?;
    // fails fast for p = 2 mod 3 violations
    crate::interval::IntervalSpec::new(cfg.spec.p())?;
    let started = Instant::now();
    let mut engine = Engine::new(cfg);
    for s in &cfg.seed_sets {
        if s.spec() != cfg.spec {
            return Err(Error::SpecMismatch);
        }
        if !is_sum_free(s) || is_normal(s)?.is_normal() {
            return Err(Error::usage("seed sets must be sum-free and non-normal"));
        }
        engine.record_witness(s);
    }
    engine.resume_from_checkpoint()?;
    let root = NodeState::root(cfg.spec);
    let _ = engine.dfs(&root, &mut |_| {});
    for w in &engine.witnesses {
        assert!(is_sum_free(w) && !is_normal(w)?.is_normal());
    }
    Ok(engine.into_report(started))
}

/// Maximal-by-inclusion sum-free sets from seeded random greedy
/// insertion; deterministic per (seed, count).
pub fn sample_greedy(cfg: &SearchConfig, count: usize) -> Result<Vec<GroupSet>> {
    if cfg.mode != SearchMode::SampleGreedy {
        return Err(Error::usage("sample_greedy requires mode sample_greedy"));
    }
    cfg.validate()?;
    let spec = cfg.spec;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut order: Vec<u64> = (1..spec.order()).collect();
        order.shuffle(&mut rng);
        let mut st = NodeState::root(spec);
        for x in order {
            if st.legal(spec, x) {
                st = st.child(spec, x);
            }
        }
        debug_assert!(is_sum_free(&st.set));
        out.push(st.set);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Lemma31Report {
    pub orbits_checked: u64,
    /// Sets with no GL map carrying {(1,0),(1,1),(1,2)} into them.
    pub shape_counterexamples: Vec<GroupSet>,
    /// Sets with no line owning two full cosets inside (A+A) u (A-A).
    pub two_coset_failures: Vec<GroupSet>,
    pub per_size_orbits: BTreeMap<u64, u64>,
    /// Sum over orbits of |GL| / |stabilizer|, per size.
    pub per_size_orbit_mass: BTreeMap<u64, u64>,
    /// Per-size counts from the unreduced enumeration.
    pub per_size_unreduced: BTreeMap<u64, u64>,
    /// Orbit masses reproduce the unreduced counts exactly.
    pub cross_check_ok: bool,
}

/// True iff some 1-dimensional subspace V has at least two of its
/// cosets fully inside (A+A) u (A-A).
pub fn two_full_cosets(a: &GroupSet) -> bool {
    let spec = a.spec();
    if spec.n() != 2 {
        return false;
    }
    let forb = forbidden_sums(a);
    // in dimension 2 the hyperplane kernels are exactly the lines
    for phi in hyperplanes(spec) {
        let line = phi.kernel().enumerate();
        let mut full = 0u32;
        for r in 0..spec.order() {
            // count each coset once, at its minimal representative
            let coset: Vec<u64> = line.iter().map(|&l| spec.add_index(r, l)).collect();
            if coset.iter().min() != Some(&r) {
                continue;
            }
            if coset.iter().all(|&c| forb.contains(c)) {
                full += 1;
            }
        }
        if full >= 2 {
            return true;
        }
    }
    false
}

/// Exhaustively checks, over one representative per isomorphism orbit
/// of sum-free A in F_5^2 with |A| >= 5, that A is isomorphic to a set
/// containing (1,0), (1,1), (1,2), and that (A+A) u (A-A) contains two
/// full cosets of some line.
pub fn verify_lemma_3_1() -> Result<Lemma31Report> {
    let spec = GroupSpec::new(5, 2)?;
    let gl = enumerate_gl(spec);
    let gln = gl_order(spec);
    let mut cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
    cfg.min_size = 5;
    cfg.symmetry_reduction = SymmetryReduction::FullCanonical;

    let mut orbits = 0u64;
    let mut shape_counterexamples = Vec::new();
    let mut two_coset_failures = Vec::new();
    let mut per_size_orbits = BTreeMap::new();
    let mut per_size_orbit_mass = BTreeMap::new();
    enumerate_sumfree(&cfg, &mut |a| {
        orbits += 1;
        *per_size_orbits.entry(a.card()).or_insert(0u64) += 1;
        *per_size_orbit_mass.entry(a.card()).or_insert(0u64) += gln / stabilizer_order(a, &gl);
        match normalize_to_shape(a) {
            Ok(Some(_)) => {}
            _ => shape_counterexamples.push(a.clone()),
        }
        if !two_full_cosets(a) {
            two_coset_failures.push(a.clone());
        }
    })?;

    let mut unreduced_cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
    unreduced_cfg.min_size = 5;
    let mut per_size_unreduced = BTreeMap::new();
    enumerate_sumfree(&unreduced_cfg, &mut |a| {
        *per_size_unreduced.entry(a.card()).or_insert(0u64) += 1;
    })?;

    let cross_check_ok = per_size_orbit_mass == per_size_unreduced;
    Ok(Lemma31Report {
        orbits_checked: orbits,
        shape_counterexamples,
        two_coset_failures,
        per_size_orbits,
        per_size_orbit_mass,
        per_size_unreduced,
        cross_check_ok,
    })
}

/// Budgeted probe for a sum-free non-normal subset of F_5^3 larger than
/// the known 28-point construction; evidence, not proof, unless the
/// report comes back exhaustive.
pub fn probe_theorem_1_4(budget: u64, checkpoint_path: Option<PathBuf>) -> Result<SearchReport> {
    let spec = GroupSpec::new(5, 3)?;
    let mut cfg = SearchConfig::new(spec, SearchMode::MaxNonnormal);
    cfg.node_budget = budget;
    cfg.symmetry_reduction = SymmetryReduction::StabilizerPrefix;
    cfg.checkpoint_path = checkpoint_path;
    cfg.seed_sets = vec![crate::constructions::build_example_nonnormal_f5(3)?];
    max_nonnormal(&cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::lambda_max;

    /// Independent recursive enumerator that recertifies each extension
    /// from scratch instead of maintaining incremental forbidden sets.
    fn naive_counts(spec: GroupSpec) -> BTreeMap<u64, u64> {
        fn rec(
            spec: GroupSpec,
            chosen: &mut Vec<u64>,
            start: u64,
            counts: &mut BTreeMap<u64, u64>,
        ) {
            for x in start..spec.order() {
                chosen.push(x);
                let cand = GroupSet::from_indices(spec, chosen.iter().copied());
                if is_sum_free(&cand) {
                    *counts.entry(cand.card()).or_insert(0) += 1;
                    rec(spec, chosen, x + 1, counts);
                }
                chosen.pop();
            }
        }
        let mut counts = BTreeMap::new();
        rec(spec, &mut Vec::new(), 1, &mut counts);
        counts
    }

    fn max_sumfree_size(spec: GroupSpec) -> u64 {
        let cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
        let mut best = 0;
        enumerate_sumfree(&cfg, &mut |a| best = best.max(a.card())).unwrap();
        best
    }

    #[test]
    fn exhaustion_matches_lambda_on_tiny_groups() {
        assert_eq!(max_sumfree_size(GroupSpec::new(5, 1).unwrap()), 2);
        assert_eq!(lambda_max(&[5]).unwrap(), 2);
        assert_eq!(max_sumfree_size(GroupSpec::new(2, 3).unwrap()), 4);
        assert_eq!(lambda_max(&[2, 2, 2]).unwrap(), 4);
        assert_eq!(max_sumfree_size(GroupSpec::new(7, 1).unwrap()), 2);
        assert_eq!(lambda_max(&[7]).unwrap(), 2);
    }

    #[test]
    fn enumeration_matches_naive_recertifying_oracle() {
        for spec in [
            GroupSpec::new(5, 1).unwrap(),
            GroupSpec::new(2, 3).unwrap(),
            GroupSpec::new(3, 2).unwrap(),
            GroupSpec::new(7, 1).unwrap(),
        ] {
            let mut counts = BTreeMap::new();
            let mut cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
            cfg.min_size = 1;
            enumerate_sumfree(&cfg, &mut |a| {
                *counts.entry(a.card()).or_insert(0u64) += 1;
            })
            .unwrap();
            assert_eq!(counts, naive_counts(spec));
        }
    }

    #[test]
    fn stabilizer_prefix_preserves_max_in_f5_2() {
        let spec = GroupSpec::new(5, 2).unwrap();
        let mut cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
        cfg.min_size = 10;
        let mut plain = 0u64;
        enumerate_sumfree(&cfg, &mut |a| plain = plain.max(a.card())).unwrap();
        cfg.symmetry_reduction = SymmetryReduction::StabilizerPrefix;
        let mut reduced = 0u64;
        enumerate_sumfree(&cfg, &mut |a| reduced = reduced.max(a.card())).unwrap();
        assert_eq!(plain, 10);
        assert_eq!(reduced, 10);
    }

    #[test]
    fn max_nonnormal_f5_2_is_sharp() {
        let spec = GroupSpec::new(5, 2).unwrap();
        let mut cfg = SearchConfig::new(spec, SearchMode::MaxNonnormal);
        cfg.symmetry_reduction = SymmetryReduction::StabilizerPrefix;
        let report = max_nonnormal(&cfg).unwrap();
        assert_eq!(report.best_size, 5);
        assert!(report.exhaustive);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn max_nonnormal_rejects_wrong_modulus() {
        let spec = GroupSpec::new(7, 1).unwrap();
        let cfg = SearchConfig::new(spec, SearchMode::MaxNonnormal);
        assert!(max_nonnormal(&cfg).is_err());
    }

    #[test]
    fn greedy_samples_are_deterministic_and_sum_free() {
        let spec = GroupSpec::new(11, 2).unwrap();
        let mut cfg = SearchConfig::new(spec, SearchMode::SampleGreedy);
        cfg.seed = 17;
        let a = sample_greedy(&cfg, 5).unwrap();
        let b = sample_greedy(&cfg, 5).unwrap();
        assert_eq!(a, b);
        for s in &a {
            assert!(is_sum_free(s));
            assert!(s.card() <= lambda_max(&[11, 11]).unwrap());
        }
    }

    #[test]
    fn budget_exhaustion_is_reported_honestly() {
        let spec = GroupSpec::new(5, 2).unwrap();
        let mut cfg = SearchConfig::new(spec, SearchMode::MaxNonnormal);
        cfg.node_budget = 10;
        let report = max_nonnormal(&cfg).unwrap();
        assert!(!report.exhaustive);
        assert_eq!(report.nodes_expanded, 10);
    }

    #[test]
    fn checkpoint_resume_reproduces_the_report() {
        let spec = GroupSpec::new(5, 2).unwrap();
        let mut cfg = SearchConfig::new(spec, SearchMode::MaxNonnormal);
        cfg.symmetry_reduction = SymmetryReduction::StabilizerPrefix;
        let full = max_nonnormal(&cfg).unwrap();

        let dir = std::env::temp_dir().join(format!("sumfree-ckpt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("resume.ndjson");
        let _ = std::fs::remove_file(&path);

        // interrupted run: small budget, checkpointing every node batch
        let mut partial_cfg = cfg.clone();
        partial_cfg.node_budget = full.nodes_expanded / 2;
        partial_cfg.checkpoint_path = Some(path.clone());
        partial_cfg.checkpoint_every = 50;
        let partial = max_nonnormal(&partial_cfg).unwrap();
        assert!(!partial.exhaustive || partial.nodes_expanded == full.nodes_expanded);

        let mut resumed_cfg = cfg.clone();
        resumed_cfg.checkpoint_path = Some(path.clone());
        let resumed = max_nonnormal(&resumed_cfg).unwrap();
        assert_eq!(resumed.best_size, full.best_size);
        assert!(resumed.exhaustive);
        let _ = std::fs::remove_file(&path);
    }
}
