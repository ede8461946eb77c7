//! Decomposition of a set along a direction u: per-coset residue traces,
//! good/bad classification against the central interval, and the offset
//! relations satisfied by sum-free sets.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::group::{eval_functional, Vector};
use crate::interval::IntervalSpec;
use crate::set::GroupSet;

/// One coset v + <u> of the profile, with v running over ker(phi).
#[derive(Clone, Debug)]
pub struct Row {
    /// The transversal representative, an element of ker(phi).
    pub rep: Vector,
    /// The trace {x : v + x u in A}.
    pub residues: BTreeSet<u32>,
    /// |trace| = m and the trace is an exact translate of I.
    pub good: bool,
    /// The translate offset t with trace = t + I, present iff good.
    pub offset: Option<u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RowCounts {
    /// good rows with offset in {-(m-1), ..., 0}
    pub left: usize,
    /// good rows with offset in {0, ..., m-1}
    pub right: usize,
    /// good rows with offset 0
    pub center: usize,
    /// bad rows
    pub bad: usize,
}

#[derive(Clone, Debug)]
pub struct RowProfile {
    set: GroupSet,
    interval: IntervalSpec,
    u: Vector,
    rows: Vec<Row>,
    rep_index: HashMap<u64, usize>,
    counts: RowCounts,
}

impl RowProfile {
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn counts(&self) -> RowCounts {
        self.counts
    }

    pub fn interval(&self) -> &IntervalSpec {
        &self.interval
    }

    pub fn good_rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.good)
    }

    /// The trace of an arbitrary vector v (not only transversal reps).
    pub fn trace_of(&self, v: &Vector) -> BTreeSet<u32> {
        trace(&self.set, v, &self.u)
    }

    pub fn row_for(&self, rep_idx: u64) -> Option<&Row> {
        self.rep_index.get(&rep_idx).map(|&i| &self.rows[i])
    }
}

fn trace(a: &GroupSet, v: &Vector, u: &Vector) -> BTreeSet<u32> {
    let spec = a.spec();
    let mut out = BTreeSet::new();
    let vidx = v.index();
    for x in 0..spec.p() {
        if a.contains(spec.add_index(vidx, u.scale(x).index())) {
            out.insert(x);
        }
    }
    out
}

/// Profiles A along u against the hyperplane phi = 0, with phi(u) = 1.
/// The transversal is ker(phi) in ascending index order; each coset of
/// <u> meets it exactly once.
pub fn row_profile(a: &GroupSet, phi_coeffs: &[u32], u: &Vector) -> Result<RowProfile> {
    let spec = a.spec();
    if u.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    if phi_coeffs.len() != spec.n() as usize {
        return Err(Error::usage("functional arity does not match dimension"));
    }
    if eval_functional(spec, phi_coeffs, u.coords()) != 1 {
        return Err(Error::usage("row_profile requires phi(u) = 1"));
    }
    let interval = IntervalSpec::new(spec.p())?;
    let m = interval.m();
    let mut rows = Vec::new();
    let mut rep_index = HashMap::new();
    let mut counts = RowCounts::default();
    for idx in 0..spec.order() {
        let coords = spec.coords_of(idx);
        if eval_functional(spec, phi_coeffs, &coords) != 0 {
            continue;
        }
        let rep = Vector::new(spec, coords)?;
        let residues = trace(a, &rep, u);
        let offset = if residues.len() == m as usize {
            interval.translate_offset(&residues)
        } else {
            None
        };
        let good = offset.is_some();
        if let Some(t) = offset {
            // offsets classified by signed representative
            if t == 0 {
                counts.center += 1;
                counts.left += 1;
                counts.right += 1;
            } else if t < m {
                counts.right += 1;
            } else if t >= spec.p() - (m - 1) {
                counts.left += 1;
            }
        } else {
            counts.bad += 1;
        }
        rep_index.insert(idx, rows.len());
        rows.push(Row {
            rep,
            residues,
            good,
            offset,
        });
    }
    debug_assert_eq!(
        rows.iter().map(|r| r.residues.len() as u64).sum::<u64>(),
        a.card()
    );
    Ok(RowProfile {
        set: a.clone(),
        interval,
        u: u.clone(),
        rows,
        rep_index,
        counts,
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OffsetCheck {
    pub pairs_checked: usize,
    pub passed: bool,
}

/// For all ordered pairs of good rows v, w, verifies the containments
/// A_{v+w} inside t_v + t_w + I and A_{v-w} inside t_v - t_w + I. Both
/// are theorems for sum-free A.
pub fn offset_relation_check(profile: &RowProfile) -> OffsetCheck {
    let spec = profile.set.spec();
    let p = spec.p();
    let goods: Vec<(&Vector, u32)> = profile
        .good_rows()
        .map(|r| (&r.rep, r.offset.unwrap()))
        .collect();
    let members = profile.interval.members();
    let mut pairs_checked = 0;
    for &(v, tv) in &goods {
        for &(w, tw) in &goods {
            pairs_checked += 1;
            let sum_trace = profile.trace_of(&v.add(w).expect("same spec"));
            let shift = (tv + tw) % p;
            if !sum_trace
                .iter()
                .all(|&x| members.contains(&((x + p - shift) % p)))
            {
                return OffsetCheck {
                    pairs_checked,
                    passed: false,
                };
            }
            let diff_trace = profile.trace_of(&v.sub(w).expect("same spec"));
            let shift = (tv + p - tw) % p;
            if !diff_trace
                .iter()
                .all(|&x| members.contains(&((x + p - shift) % p)))
            {
                return OffsetCheck {
                    pairs_checked,
                    passed: false,
                };
            }
        }
    }
    OffsetCheck {
        pairs_checked,
        passed: true,
    }
}
