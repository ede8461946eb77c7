//! The central interval I_p = {m_p, ..., 2m_p - 1} for primes p = 2 mod 3,
//! and the continuity bound on gaps of I + J.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// The central interval of F_p for p = 2 mod 3, with m = (p + 1)/3.
/// Satisfies I + I = I - I = F_p \ I, which is checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSpec {
    p: u32,
    m: u32,
}

impl IntervalSpec {
    pub fn new(p: u32) -> Result<Self> {
        if p % 3 != 2 {
            return Err(Error::usage(format!(
                "interval is defined only for primes p = 2 mod 3, got {}",
                p
            )));
        }
        if p < 5 {
            return Err(Error::usage("interval requires an odd prime p >= 5"));
        }
        let spec = IntervalSpec { p, m: (p + 1) / 3 };
        let i = spec.members();
        let sums = residue_sumset(p, &i, &i);
        let diffs = residue_difference(p, &i, &i);
        let complement: BTreeSet<u32> = (0..p).filter(|x| !i.contains(x)).collect();
        assert_eq!(sums, complement, "I + I must equal F_p \\ I");
        assert_eq!(diffs, complement, "I - I must equal F_p \\ I");
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The residues {m, ..., 2m - 1}.
    pub fn members(&self) -> BTreeSet<u32> {
        (self.m..2 * self.m).collect()
    }

    pub fn contains(&self, r: u32) -> bool {
        r >= self.m && r < 2 * self.m
    }

    /// The translate offset t with J = t + I, if J is exactly a translate.
    pub fn translate_offset(&self, j: &BTreeSet<u32>) -> Option<u32> {
        if j.len() != self.m as usize {
            return None;
        }
        let members = self.members();
        for t in 0..self.p {
            let shifted: BTreeSet<u32> = members.iter().map(|&x| (x + t) % self.p).collect();
            if shifted == *j {
                return Some(t);
            }
        }
        None
    }

    /// True iff J is a subset of some translate of I.
    pub fn fits_in_translate(&self, j: &BTreeSet<u32>) -> bool {
        if j.len() > self.m as usize {
            return false;
        }
        for t in 0..self.p {
            if j.iter().all(|&x| self.contains((x + self.p - t % self.p) % self.p)) {
                return true;
            }
        }
        false
    }
}

pub fn residue_sumset(p: u32, a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in b {
            out.insert((x + y) % p);
        }
    }
    out
}

pub fn residue_difference(p: u32, a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in b {
            out.insert((x + p - y) % p);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct GapBound {
    /// F_p \ (I + J).
    pub gap: BTreeSet<u32>,
    /// Whether the gap is contained in {|J| - d, ..., d - |J|} (cyclically).
    pub bound_holds: bool,
}

/// Gap of I + J against the continuity bound: for J inside the widened
/// window {m - d, ..., 2m - 1 + d} of size at least d + 1 that fits in a
/// translate of I, the complement of I + J lies in {|J| - d, ..., d - |J|}.
pub fn interval_gap_bound(p: u32, d: u32, j: &BTreeSet<u32>) -> Result<GapBound> {
    let ivl = IntervalSpec::new(p)?;
    let m = ivl.m();
    if d >= m {
        return Err(Error::usage("d must lie in [0, m - 1]"));
    }
    // the window never wraps: m - d >= 1 and 2m - 1 + d <= p - 1
    if !j.iter().all(|&x| x >= m - d && x <= 2 * m - 1 + d) {
        return Err(Error::usage("J must be contained in {m - d, ..., 2m - 1 + d}"));
    }
    if (j.len() as u32) < d + 1 {
        return Err(Error::usage("J must have size at least d + 1"));
    }
    if !ivl.fits_in_translate(j) {
        return Err(Error::usage("J must be contained in a translate of I"));
    }
    let sums = residue_sumset(p, &ivl.members(), j);
    let gap: BTreeSet<u32> = (0..p).filter(|x| !sums.contains(x)).collect();
    // cyclic interval from |J| - d up to p - (|J| - d)
    let lo = j.len() as u32 - d;
    let hi = (p - lo) % p;
    let bound_holds = gap.iter().all(|&x| {
        // x in {lo, ..., hi} walking forward cyclically from lo
        (x + p - lo) % p <= (hi + p - lo) % p
    });
    Ok(GapBound { gap, bound_holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_identities() {
        for p in [5u32, 11, 17, 23] {
            let ivl = IntervalSpec::new(p).unwrap();
            assert_eq!(ivl.members().len(), ivl.m() as usize);
        }
        assert!(IntervalSpec::new(7).is_err());
        assert!(IntervalSpec::new(2).is_err());
    }

    #[test]
    fn translate_offset_roundtrip() {
        let ivl = IntervalSpec::new(11).unwrap();
        for t in 0..11 {
            let shifted: BTreeSet<u32> = ivl.members().iter().map(|&x| (x + t) % 11).collect();
            assert_eq!(ivl.translate_offset(&shifted), Some(t));
        }
        assert_eq!(ivl.translate_offset(&BTreeSet::from([1, 2, 3])), None);
    }

    #[test]
    fn gap_bound_examples() {
        // p = 11, m = 4, d = 0, J = I: gap is exactly I
        let ivl = IntervalSpec::new(11).unwrap();
        let g = interval_gap_bound(11, 0, &ivl.members()).unwrap();
        assert_eq!(g.gap, BTreeSet::from([4, 5, 6, 7]));
        assert!(g.bound_holds);

        // p = 11, d = 1, J = {3, 4}: I + J = {7, ..., 11 mod 11}
        let g = interval_gap_bound(11, 1, &BTreeSet::from([3, 4])).unwrap();
        assert_eq!(g.gap, BTreeSet::from([1, 2, 3, 4, 5, 6]));
        assert!(g.bound_holds);

        // p = 17, m = 6, d = 2, J = {4, 5, 6}
        let g = interval_gap_bound(17, 2, &BTreeSet::from([4, 5, 6])).unwrap();
        assert!(g.bound_holds);
    }

    #[test]
    fn gap_bound_preconditions() {
        assert!(interval_gap_bound(11, 4, &BTreeSet::from([4, 5, 6, 7])).is_err());
        assert!(interval_gap_bound(11, 0, &BTreeSet::from([1, 2, 3, 4])).is_err());
        // too small for d
        assert!(interval_gap_bound(11, 2, &BTreeSet::from([4, 5])).is_err());
        // not inside a translate of I (spread too wide)
        assert!(interval_gap_bound(11, 3, &BTreeSet::from([1, 4, 7, 10])).is_err());
    }
}
