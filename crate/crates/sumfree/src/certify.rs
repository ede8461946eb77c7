//! Certifiers and structural detectors for sum-free sets: sum-freeness,
//! maximal sizes over abelian groups, normality, coset covers, rich
//! hyperplanes and lines, arithmetic-progression detection, and the
//! Vosper equality check.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{
    enumerate_gl, eval_functional, hyperplanes, hyperplanes_containing,
    LinearFunctional, Mat, Subspace, Vector,
};
use crate::interval::{residue_sumset, IntervalSpec};
use crate::set::{difference_set, sumset, GroupSet};

/// Machine-checkable evidence for the toolkit's predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// a + b = c with a, b, c all in the set.
    SumFreeViolation { a: Vector, b: Vector, c: Vector },
    /// A functional (possibly unnormalized) mapping the set into I_p.
    NormalityWitness { coeffs: Vec<u32> },
    /// phi(A) is contained in the k residues S.
    CoverWitness {
        functional: LinearFunctional,
        residues: BTreeSet<u32>,
    },
    /// The set lies in base + span with span a proper subspace.
    AffineContainment { base: Vector, span: Subspace },
    /// A line-coset meeting the set in at least three points.
    RichLine {
        line: Subspace,
        rep: Vector,
        members: Vec<Vector>,
    },
}

impl Certificate {
    /// Re-checks the evidence against the set it certifies.
    pub fn verify(&self, set: &GroupSet) -> bool {
        let spec = set.spec();
        match self {
            Certificate::SumFreeViolation { a, b, c } => {
                set.contains(a.index())
                    && set.contains(b.index())
                    && set.contains(c.index())
                    && a.add(b).map(|s| s == *c).unwrap_or(false)
            }
            Certificate::NormalityWitness { coeffs } => {
                let Ok(ivl) = IntervalSpec::new(spec.p()) else {
                    return false;
                };
                coeffs.iter().any(|&c| c != 0)
                    && set.indices().all(|i| {
                        ivl.contains(eval_functional(spec, coeffs, &spec.coords_of(i)))
                    })
            }
            Certificate::CoverWitness {
                functional,
                residues,
            } => set
                .indices()
                .all(|i| residues.contains(&functional.eval_index(i))),
            Certificate::AffineContainment { base, span } => {
                span.dim() < spec.n()
                    && set.indices().all(|i| {
                        Vector::from_index(spec, i)
                            .sub(base)
                            .map(|d| span.contains(&d))
                            .unwrap_or(false)
                    })
            }
            Certificate::RichLine { line, rep, members } => {
                line.dim() == 1
                    && members.len() >= 3
                    && members.iter().all(|m| {
                        set.contains(m.index())
                            && m.sub(rep).map(|d| line.contains(&d)).unwrap_or(false)
                    })
            }
        }
    }
}

/// None iff (A + A) and A are disjoint; otherwise the violation with the
/// least (a, b) in canonical index order.
pub fn check_sum_free(a: &GroupSet) -> Option<Certificate> {
    let spec = a.spec();
    let s = sumset(a, a).expect("same spec");
    if s.is_disjoint(a).expect("same spec") {
        return None;
    }
    for x in a.indices() {
        for y in a.indices() {
            let z = spec.add_index(x, y);
            if a.contains(z) {
                return Some(Certificate::SumFreeViolation {
                    a: Vector::from_index(spec, x),
                    b: Vector::from_index(spec, y),
                    c: Vector::from_index(spec, z),
                });
            }
        }
    }
    unreachable!("sumset intersected A but no witness triple found")
}

pub fn is_sum_free(a: &GroupSet) -> bool {
    check_sum_free(a).is_none()
}

/// The maximal size of a sum-free set in the abelian group with the given
/// invariant factors (Green-Ruzsa three-case formula).
pub fn lambda_max(invariant_factors: &[u64]) -> Result<u64> {
    if invariant_factors.is_empty() {
        return Err(Error::usage("invariant factor list must be non-empty"));
    }
    if invariant_factors.iter().any(|&f| f < 2) {
        return Err(Error::usage("every invariant factor must be at least 2"));
    }
    let mut order: u64 = 1;
    for &f in invariant_factors {
        order = order
            .checked_mul(f)
            .ok_or_else(|| Error::usage("group order overflows u64"))?;
    }
    let mut primes = BTreeSet::new();
    for &f in invariant_factors {
        let mut f = f;
        let mut d = 2u64;
        while d * d <= f {
            while f % d == 0 {
                primes.insert(d);
                f /= d;
            }
            d += 1;
        }
        if f > 1 {
            primes.insert(f);
        }
    }
    if let Some(&p) = primes.iter().find(|&&p| p % 3 == 2) {
        // smallest prime p = 2 mod 3 dividing the order
        return Ok(order / p * ((p + 1) / 3));
    }
    if primes.contains(&3) {
        return Ok(order / 3);
    }
    // all primes are 1 mod 3; m = largest element order = lcm of factors
    let m = invariant_factors.iter().fold(1u64, |acc, &f| lcm(acc, f));
    Ok(order / m * ((m - 1) / 3))
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Outcome of the normality scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normality {
    Witness(Certificate),
    NotNormal,
}

impl Normality {
    pub fn is_normal(&self) -> bool {
        matches!(self, Normality::Witness(_))
    }
}

/// Scans all p^n - 1 nonzero functionals in lexicographic coefficient
/// order for one mapping A into the central interval I_p.
pub fn is_normal(a: &GroupSet) -> Result<Normality> {
    let spec = a.spec();
    let ivl = IntervalSpec::new(spec.p()).map_err(|_| {
        Error::usage(format!(
            "normality is defined only for primes p = 2 mod 3, p >= 5 (got p = {})",
            spec.p()
        ))
    })?;
    let n = spec.n() as usize;
    let p = spec.p();
    let member_coords: Vec<Vec<u32>> = a.indices().map(|i| spec.coords_of(i)).collect();
    let mut coeffs = vec![0u32; n];
    loop {
        // lex odometer: last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(Normality::NotNormal);
            }
            coeffs[i - 1] += 1;
            if coeffs[i - 1] < p {
                break;
            }
            coeffs[i - 1] = 0;
            i -= 1;
        }
        if member_coords
            .iter()
            .all(|c| ivl.contains(eval_functional(spec, &coeffs, c)))
        {
            return Ok(Normality::Witness(Certificate::NormalityWitness {
                coeffs,
            }));
        }
    }
}

/// No a + b = c within S, viewing S as a subset of F_p.
pub fn residue_sum_free(p: u32, s: &BTreeSet<u32>) -> bool {
    s.iter()
        .all(|&a| s.iter().all(|&b| !s.contains(&((a + b) % p))))
}

/// Searches the normalized functionals for one whose image on A has at
/// most k values and is itself sum-free in F_p, so the covering cosets
/// are compatible with a coset-structured sum-free superset. The
/// witness residue set is padded towards size k while it stays
/// sum-free.
pub fn coset_cover(a: &GroupSet, k: u32) -> Result<Option<Certificate>> {
    if k < 1 {
        return Err(Error::usage("cover size k must be at least 1"));
    }
    let spec = a.spec();
    for phi in hyperplanes(spec) {
        let image: BTreeSet<u32> = a.indices().map(|i| phi.eval_index(i)).collect();
        if image.len() as u32 <= k.min(spec.p()) && residue_sum_free(spec.p(), &image) {
            let mut residues = image;
            for r in 0..spec.p() {
                if residues.len() as u32 >= k.min(spec.p()) {
                    break;
                }
                let mut extended = residues.clone();
                extended.insert(r);
                if residue_sum_free(spec.p(), &extended) {
                    residues = extended;
                }
            }
            return Ok(Some(Certificate::CoverWitness {
                functional: phi,
                residues,
            }));
        }
    }
    Ok(None)
}

/// dim span({a - a0 : a in A}); independent of the base point choice.
pub fn affine_span_dim(a: &GroupSet) -> Result<u32> {
    let spec = a.spec();
    let mut it = a.indices();
    let a0 = it
        .next()
        .ok_or_else(|| Error::usage("affine_span_dim requires a non-empty set"))?;
    let diffs: Vec<Vector> = it
        .map(|i| Vector::from_index(spec, spec.sub_index(i, a0)))
        .collect();
    Ok(Subspace::span(spec, &diffs).dim())
}

/// Some(certificate) iff A lies in a coset of a proper subspace.
pub fn affine_coset_containment(a: &GroupSet) -> Result<Option<Certificate>> {
    let spec = a.spec();
    let base_idx = a
        .indices()
        .next()
        .ok_or_else(|| Error::usage("affine_coset_containment requires a non-empty set"))?;
    let base = Vector::from_index(spec, base_idx);
    let diffs: Vec<Vector> = a
        .indices()
        .map(|i| Vector::from_index(spec, spec.sub_index(i, base_idx)))
        .collect();
    let span = Subspace::span(spec, &diffs);
    if span.dim() < spec.n() {
        Ok(Some(Certificate::AffineContainment { base, span }))
    } else {
        Ok(None)
    }
}

/// Arithmetic-progression detection over F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApResult {
    Ap { start: u32, step: u32 },
    NotAp,
}

/// Finds the smallest step d in [1, p - 1] such that A is the progression
/// {s, s + d, ..., s + (|A| - 1) d}; sets of size <= 1 report step 1.
pub fn ap_detect(p: u32, a: &BTreeSet<u32>) -> ApResult {
    if a.len() <= 1 {
        let start = a.iter().next().copied().unwrap_or(0);
        return ApResult::Ap { start, step: 1 };
    }
    for step in 1..p {
        for &start in a {
            if is_ap_from(p, a, start, step) {
                return ApResult::Ap { start, step };
            }
        }
    }
    ApResult::NotAp
}

pub fn is_ap_with_step(p: u32, a: &BTreeSet<u32>, step: u32) -> bool {
    a.len() <= 1 || a.iter().any(|&start| is_ap_from(p, a, start, step))
}

fn is_ap_from(p: u32, a: &BTreeSet<u32>, start: u32, step: u32) -> bool {
    let mut x = start;
    for _ in 0..a.len() {
        if !a.contains(&x) {
            return false;
        }
        x = (x + step) % p;
    }
    true
}

#[derive(Clone, Debug)]
pub struct VosperReport {
    pub sum_size: usize,
    pub equality_holds: bool,
    /// A common step together with both progressions' detected starts,
    /// present exactly when equality holds.
    pub ap_witnesses: Option<(u32, u32, u32)>,
}

/// Checks the Vosper critical-pair equality |A + B| = |A| + |B| - 1 and
/// cross-validates it against same-step progression structure.
pub fn vosper_check(p: u32, a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> Result<VosperReport> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::usage("vosper_check requires |A|, |B| >= 2"));
    }
    let sum = residue_sumset(p, a, b);
    if sum.len() as u32 > p - 2 {
        return Err(Error::usage("vosper_check requires |A + B| <= p - 2"));
    }
    let equality_holds = sum.len() == a.len() + b.len() - 1;
    let mut ap_witnesses = None;
    for step in 1..p {
        if is_ap_with_step(p, a, step) && is_ap_with_step(p, b, step) {
            let sa = (1..=p).map(|s| s % p).find(|&s| is_ap_from(p, a, s, step));
            let sb = (1..=p).map(|s| s % p).find(|&s| is_ap_from(p, b, s, step));
            if let (Some(sa), Some(sb)) = (sa, sb) {
                ap_witnesses = Some((step, sa, sb));
                break;
            }
        }
    }
    // the theorem: equality iff both sets are APs with a common step
    assert_eq!(
        equality_holds,
        ap_witnesses.is_some(),
        "Vosper equality must coincide with same-step AP structure"
    );
    if !equality_holds {
        ap_witnesses = None;
    }
    Ok(VosperReport {
        sum_size: sum.len(),
        equality_holds,
        ap_witnesses,
    })
}

/// Hyperplanes W containing <u> with |W intersect A| >= |A|/p, sorted by
/// intersection size descending. Requires n >= 3, I_p(u) contained in A,
/// and A sum-free; the subspace-finder lemma then guarantees at least two
/// entries.
pub fn find_rich_hyperplanes(
    a: &GroupSet,
    u: &Vector,
) -> Result<Vec<(LinearFunctional, u64)>> {
    let spec = a.spec();
    if u.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    if spec.n() < 3 {
        return Err(Error::usage("find_rich_hyperplanes requires n >= 3"));
    }
    if u.is_zero() {
        return Err(Error::usage("find_rich_hyperplanes requires u != 0"));
    }
    let ivl = IntervalSpec::new(spec.p())?;
    for x in ivl.members() {
        if !a.contains(u.scale(x).index()) {
            return Err(Error::usage("find_rich_hyperplanes requires I_p(u) inside A"));
        }
    }
    if !is_sum_free(a) {
        return Err(Error::usage("find_rich_hyperplanes requires a sum-free set"));
    }
    let mut rich: Vec<(LinearFunctional, u64)> = hyperplanes_containing(u)?
        .into_iter()
        .map(|phi| {
            let count = a.indices().filter(|&i| phi.eval_index(i) == 0).count() as u64;
            (phi, count)
        })
        .filter(|&(_, count)| count * spec.p() as u64 >= a.card())
        .collect();
    rich.sort_by(|(fa, ca), (fb, cb)| cb.cmp(ca).then_with(|| fa.coeffs().cmp(fb.coeffs())));
    Ok(rich)
}

/// A line-coset of F_5^2 meeting A in at least three points, if any.
pub fn find_rich_line(a: &GroupSet) -> Result<Option<Certificate>> {
    let spec = a.spec();
    if (spec.p(), spec.n()) != (5, 2) {
        return Err(Error::usage("find_rich_line is defined on F_5^2"));
    }
    for phi in hyperplanes(spec) {
        for value in 0..spec.p() {
            let members: Vec<Vector> = a
                .indices()
                .filter(|&i| phi.eval_index(i) == value)
                .map(|i| Vector::from_index(spec, i))
                .collect();
            if members.len() >= 3 {
                return Ok(Some(Certificate::RichLine {
                    line: phi.kernel(),
                    rep: members[0].clone(),
                    members,
                }));
            }
        }
    }
    Ok(None)
}

/// An invertible map M with {(1,0), (1,1), (1,2)} inside M(A), found by
/// scanning GL(2,5). Requires A sum-free of size >= 5; the 2-dimensional
/// shape lemma guarantees success there.
pub fn normalize_to_shape(a: &GroupSet) -> Result<Option<Mat>> {
    let spec = a.spec();
    if (spec.p(), spec.n()) != (5, 2) {
        return Err(Error::usage("normalize_to_shape is defined on F_5^2"));
    }
    if !is_sum_free(a) {
        return Err(Error::usage("normalize_to_shape requires a sum-free set"));
    }
    if a.card() < 5 {
        return Err(Error::usage("normalize_to_shape requires |A| >= 5"));
    }
    let targets: Vec<u64> = [[1u32, 0], [1, 1], [1, 2]]
        .iter()
        .map(|c| spec.index_of(c))
        .collect();
    for m in enumerate_gl(spec) {
        let inv = m.inverse().expect("GL member");
        if targets.iter().all(|&t| a.contains(inv.apply_index(t))) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Image of a set under an invertible linear map.
pub fn apply_map(m: &Mat, a: &GroupSet) -> Result<GroupSet> {
    if m.spec() != a.spec() {
        return Err(Error::SpecMismatch);
    }
    Ok(GroupSet::from_indices(
        a.spec(),
        a.indices().map(|i| m.apply_index(i)),
    ))
}

/// (A + A) union (A - A), the indices forbidden for extending a sum-free
/// set from either side.
pub fn forbidden_sums(a: &GroupSet) -> GroupSet {
    let s = sumset(a, a).expect("same spec");
    let d = difference_set(a, a).expect("same spec");
    s.union(&d).expect("same spec")
}
