//! Dense set arithmetic over F_p^n: sumsets, difference sets, dilations,
//! symmetry (period) groups, and Kneser-inequality instrumentation.

use crate::error::{Error, Result};
use crate::group::{GroupSpec, Subspace, Vector};

/// A subset of F_p^n backed by a bitset over canonical indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSet {
    spec: GroupSpec,
    words: Vec<u64>,
    card: u64,
}

impl GroupSet {
    pub fn empty(spec: GroupSpec) -> Self {
        let nwords = (spec.order() as usize).div_ceil(64);
        GroupSet {
            spec,
            words: vec![0; nwords],
            card: 0,
        }
    }

    pub fn full(spec: GroupSpec) -> Self {
        let mut s = GroupSet::empty(spec);
        for i in 0..spec.order() {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(spec: GroupSpec, indices: impl IntoIterator<Item = u64>) -> Self {
        let mut s = GroupSet::empty(spec);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn from_vectors(spec: GroupSpec, vs: &[Vector]) -> Result<Self> {
        let mut s = GroupSet::empty(spec);
        for v in vs {
            if v.spec() != spec {
                return Err(Error::SpecMismatch);
            }
            s.insert(v.index());
        }
        Ok(s)
    }

    /// Build from coordinate tuples.
    pub fn from_coords(spec: GroupSpec, coords: &[&[u32]]) -> Result<Self> {
        let mut s = GroupSet::empty(spec);
        for c in coords {
            s.insert(Vector::new(spec, c.to_vec())?.index());
        }
        Ok(s)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn card(&self) -> u64 {
        self.card
    }

    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    pub fn contains(&self, idx: u64) -> bool {
        self.words[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    pub fn insert(&mut self, idx: u64) {
        debug_assert!(idx < self.spec.order());
        let w = &mut self.words[(idx / 64) as usize];
        let bit = 1u64 << (idx % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.card += 1;
        }
    }

    pub fn remove(&mut self, idx: u64) {
        let w = &mut self.words[(idx / 64) as usize];
        let bit = 1u64 << (idx % 64);
        if *w & bit != 0 {
            *w &= !bit;
            self.card -= 1;
        }
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(wi as u64 * 64 + b as u64)
                }
            })
        })
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.indices()
            .map(|i| Vector::from_index(self.spec, i))
            .collect()
    }

    pub fn union(&self, other: &GroupSet) -> Result<GroupSet> {
        self.check_spec(other)?;
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| a | b)
            .collect();
        Ok(GroupSet::from_words(self.spec, words))
    }

    pub fn intersection(&self, other: &GroupSet) -> Result<GroupSet> {
        self.check_spec(other)?;
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| a & b)
            .collect();
        Ok(GroupSet::from_words(self.spec, words))
    }

    pub fn minus(&self, other: &GroupSet) -> Result<GroupSet> {
        self.check_spec(other)?;
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| a & !b)
            .collect();
        Ok(GroupSet::from_words(self.spec, words))
    }

    pub fn complement(&self) -> GroupSet {
        let mut out = GroupSet::full(self.spec);
        for i in self.indices() {
            out.remove(i);
        }
        out
    }

    pub fn is_disjoint(&self, other: &GroupSet) -> Result<bool> {
        self.check_spec(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0))
    }

    pub fn is_subset_of(&self, other: &GroupSet) -> Result<bool> {
        self.check_spec(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0))
    }

    fn from_words(spec: GroupSpec, words: Vec<u64>) -> GroupSet {
        let card = words.iter().map(|w| w.count_ones() as u64).sum();
        GroupSet { spec, words, card }
    }

    fn check_spec(&self, other: &GroupSet) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn translate(&self, t: u64) -> GroupSet {
        let mut out = GroupSet::empty(self.spec);
        for i in self.indices() {
            out.insert(self.spec.add_index(i, t));
        }
        out
    }

    pub fn negate(&self) -> GroupSet {
        let mut out = GroupSet::empty(self.spec);
        for i in self.indices() {
            out.insert(self.spec.neg_index(i));
        }
        out
    }

    pub fn dilate(&self, c: u32) -> Result<GroupSet> {
        if c.is_multiple_of(self.spec.p()) {
            return Err(Error::usage("dilation factor must be nonzero"));
        }
        let mut out = GroupSet::empty(self.spec);
        for i in self.indices() {
            out.insert(self.spec.dilate_index(i, c));
        }
        Ok(out)
    }

    /// True iff `g + X = X`.
    pub fn has_period(&self, g: u64) -> bool {
        self.indices().all(|i| self.contains(self.spec.add_index(i, g)))
    }
}

///// {a + b : a in A, b in B}. Iterates the smaller operand and ORs in
/// translates of the larger one.
pub fn sumset(a: &GroupSet, b: &GroupSet) -> Result<GroupSet> {
    if a.spec() != b.spec() {
        return Err(Error::SpecMismatch);
    }
    let (small, big) = if a.card() <= b.card() { (a, b) } else { (b, a) };
    let mut out = GroupSet::empty(a.spec());
    for s in small.indices() {
        let shifted = big.translate(s);
        for (w, &v) in out.words.iter_mut().zip(&shifted.words) {
            *w |= v;
        }
    }
    out.card = out.words.iter().map(|w| w.count_ones() as u64).sum();
    Ok(out)
}

/// {a - b : a in A, b in B}.
pub fn difference_set(a: &GroupSet, b: &GroupSet) -> Result<GroupSet> {
    sumset(a, &b.negate())
}

/// The period subspace {g : g + X = X}. Equals the full space iff X is
/// empty or all of F_p^n.
pub fn symmetry_group(x: &GroupSet) -> Subspace {
    let spec = x.spec();
    if x.is_empty() {
        return Subspace::full(spec);
    }
    // a period g must satisfy g + x0 in X, so candidates are X - x0
    let x0 = x.indices().next().unwrap();
    let candidates = x.translate(spec.neg_index(x0));
    let periods: Vec<Vector> = candidates
        .indices()
        .filter(|&g| x.has_period(g))
        .map(|g| Vector::from_index(spec, g))
        .collect();
    Subspace::span(spec, &periods)
}

/// Both sides of Kneser's inequality for the pair (A, B).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KneserDefect {
    pub lhs: u64,
    pub rhs: i64,
    pub sym_dim: u32,
}

/// lhs = |A+B|; rhs = |A+H| + |B+H| - |H| with H = Sym(A+B).
pub fn kneser_defect(a: &GroupSet, b: &GroupSet) -> Result<KneserDefect> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::usage("kneser_defect requires non-empty sets"));
    }
    let s = sumset(a, b)?;
    let h = symmetry_group(&s);
    let hset = GroupSet::from_indices(a.spec(), h.enumerate());
    let ah = sumset(a, &hset)?;
    let bh = sumset(b, &hset)?;
    Ok(KneserDefect {
        lhs: s.card(),
        rhs: ah.card() as i64 + bh.card() as i64 - hset.card() as i64,
        sym_dim: h.dim(),
    })
}

/// Sumset of sets confined to single cosets of H with |A| + |B| > |H|;
/// by the pigeonhole argument the result is the full coset a + b + H.
pub fn simple_kneser_sumset(
    a: &GroupSet,
    b: &GroupSet,
    h: &Subspace,
    arep: &Vector,
    brep: &Vector,
) -> Result<GroupSet> {
    let spec = a.spec();
    if b.spec() != spec || h.spec() != spec || arep.spec() != spec || brep.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    for i in a.indices() {
        if !h.contains(&Vector::from_index(spec, i).sub(arep)?) {
            return Err(Error::usage("A is not contained in the coset a + H"));
        }
    }
    for i in b.indices() {
        if !h.contains(&Vector::from_index(spec, i).sub(brep)?) {
            return Err(Error::usage("B is not contained in the coset b + H"));
        }
    }
    if a.card() + b.card() <= h.size() {
        return Err(Error::usage("simple_kneser_sumset requires |A| + |B| > |H|"));
    }
    let s = sumset(a, b)?;
    let coset = GroupSet::from_indices(spec, h.enumerate())
        .translate(arep.add(brep)?.index());
    assert_eq!(s, coset, "sumset must equal the full coset a + b + H");
    Ok(s)
}
