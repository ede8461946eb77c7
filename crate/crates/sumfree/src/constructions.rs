//! Deterministic builders for the explicit sets used as fixtures by
//! tests, the verification scorecard, and search lower bounds.

use crate::error::{Error, Result};
use crate::group::{GroupSpec, LinearFunctional, Vector};
use crate::interval::IntervalSpec;
use crate::set::GroupSet;

/// Tri-state expectation for predicates that are undefined in some
/// ambient groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Undefined,
}

#[derive(Clone, Debug)]
pub struct Expected {
    pub size: u64,
    pub sum_free: bool,
    pub normal: TriState,
    pub cover3: TriState,
}

/// A named fixture together with the properties the certifiers must
/// re-establish from scratch.
#[derive(Clone, Debug)]
pub struct NamedConstruction {
    pub name: &'static str,
    pub set: GroupSet,
    pub expected: Expected,
}

/// The extremal union of interval cosets {m w, ..., (2m-1) w} + ker(phi),
/// of size m p^{n-1}.
pub fn build_avw(spec: GroupSpec, phi: &LinearFunctional, w: &Vector) -> Result<GroupSet> {
    if phi.spec() != spec || w.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    let ivl = IntervalSpec::new(spec.p())?;
    if phi.eval(w) == 0 {
        return Err(Error::usage("build_avw requires phi(w) != 0"));
    }
    let kernel = GroupSet::from_indices(spec, phi.kernel().enumerate());
    let mut out = GroupSet::empty(spec);
    for x in ivl.members() {
        let coset = kernel.translate(w.scale(x).index());
        out = out.union(&coset)?;
    }
    Ok(out)
}

/// The 28-point non-normal set Y x F_5^{n-3} where Y = X u (-X) for the
/// explicit 14-point X in F_5^3.
pub fn build_example_nonnormal_f5(n: u32) -> Result<GroupSet> {
    if n < 3 {
        return Err(Error::usage("build_example_nonnormal_f5 requires n >= 3"));
    }
    let base = GroupSpec::new(5, 3)?;
    let mut x = GroupSet::empty(base);
    for a in [1u32, 2] {
        for y in 0..5 {
            x.insert(base.index_of(&[1, a, y]));
        }
    }
    for y in [1u32, 2] {
        x.insert(base.index_of(&[1, 0, y]));
    }
    x.insert(base.index_of(&[2, 0, 0]));
    x.insert(base.index_of(&[2, 0, 1]));
    let y = x.union(&x.negate())?;
    product_with_full_factor(&y, n - 3)
}

/// The size-(m-1)p^{n-1} non-normal set A_2 x F_p^{n-2} for primes
/// p >= 11 with p = 2 mod 3.
pub fn build_example_a2(p: u32, n: u32) -> Result<GroupSet> {
    if p < 11 || p % 3 != 2 {
        return Err(Error::usage(
            "build_example_a2 requires a prime p >= 11 with p = 2 mod 3",
        ));
    }
    if n < 2 {
        return Err(Error::usage("build_example_a2 requires n >= 2"));
    }
    let base = GroupSpec::new(p, 2)?;
    let m = (p + 1) / 3;
    let mut a2 = GroupSet::empty(base);
    a2.insert(base.index_of(&[m - 1, 0]));
    a2.insert(base.index_of(&[2 * m - 1, p - 1]));
    for y in 0..p {
        if y != p - 1 {
            a2.insert(base.index_of(&[m, y]));
        }
        if y != 0 {
            a2.insert(base.index_of(&[2 * m - 2, y]));
        }
        for x in m + 1..=2 * m - 3 {
            a2.insert(base.index_of(&[x, y]));
        }
    }
    product_with_full_factor(&a2, n - 2)
}

/// The 14-point sum-free subset of F_7^2 that no three cosets cover.
pub fn build_example_f7() -> GroupSet {
    let spec = GroupSpec::new(7, 2).expect("valid spec");
    let points: [[u32; 2]; 14] = [
        [3, 0],
        [4, 0],
        [3, 1],
        [4, 1],
        [3, 2],
        [4, 2],
        [2, 3],
        [3, 3],
        [4, 3],
        [3, 4],
        [4, 4],
        [3, 5],
        [4, 5],
        [3, 6],
    ];
    GroupSet::from_indices(spec, points.iter().map(|c| spec.index_of(c)))
}

/// The 5-point extremal set {e1, e2, e3, e4, (1,1,1,1)} in F_2^4. Only
/// the dimension the witness is exhibited in is exposed.
pub fn build_f2_extremal(n: u32) -> Result<GroupSet> {
    if n != 4 {
        return Err(Error::usage("build_f2_extremal is exposed only for n = 4"));
    }
    let spec = GroupSpec::new(2, 4)?;
    let points: [[u32; 4]; 5] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 1, 1],
    ];
    Ok(GroupSet::from_indices(
        spec,
        points.iter().map(|c| spec.index_of(c)),
    ))
}

/// The sharp 5-point non-normal set in F_5^2.
pub fn build_f5_pentagon() -> GroupSet {
    let spec = GroupSpec::new(5, 2).expect("valid spec");
    let points: [[u32; 2]; 5] = [[0, 1], [1, 2], [2, 2], [3, 2], [4, 3]];
    GroupSet::from_indices(spec, points.iter().map(|c| spec.index_of(c)))
}

/// S x F_p^extra under the little-endian embedding (the extra coordinates
/// are appended, i.e. most significant).
pub fn product_with_full_factor(s: &GroupSet, extra: u32) -> Result<GroupSet> {
    if extra == 0 {
        return Ok(s.clone());
    }
    let base = s.spec();
    let spec = GroupSpec::new(base.p(), base.n() + extra)?;
    let factor = (base.p() as u64).pow(extra);
    let mut out = GroupSet::empty(spec);
    for i in s.indices() {
        for t in 0..factor {
            out.insert(i + t * base.order());
        }
    }
    Ok(out)
}

/// All fixtures with their expected property records.
pub fn registry() -> Vec<NamedConstruction> {
    let f52 = GroupSpec::new(5, 2).expect("valid spec");
    let f53 = GroupSpec::new(5, 3).expect("valid spec");
    let f112 = GroupSpec::new(11, 2).expect("valid spec");
    let phi52 = LinearFunctional::new(f52, vec![1, 0]).expect("nonzero");
    let phi53 = LinearFunctional::new(f53, vec![1, 0, 0]).expect("nonzero");
    let phi112 = LinearFunctional::new(f112, vec![1, 0]).expect("nonzero");
    vec![
        NamedConstruction {
            name: "pentagon_f5_2",
            set: build_f5_pentagon(),
            expected: Expected {
                size: 5,
                sum_free: true,
                normal: TriState::No,
                cover3: TriState::Undefined,
            },
        },
        NamedConstruction {
            name: "extremal_f2_4",
            set: build_f2_extremal(4).expect("n = 4"),
            expected: Expected {
                size: 5,
                sum_free: true,
                normal: TriState::Undefined,
                cover3: TriState::Undefined,
            },
        },
        NamedConstruction {
            name: "nonnormal_f5_3",
            set: build_example_nonnormal_f5(3).expect("n = 3"),
            expected: Expected {
                size: 28,
                sum_free: true,
                normal: TriState::No,
                cover3: TriState::Undefined,
            },
        },
        NamedConstruction {
            name: "a2_f11_2",
            set: build_example_a2(11, 2).expect("valid parameters"),
            expected: Expected {
                size: 33,
                sum_free: true,
                normal: TriState::No,
                cover3: TriState::Undefined,
            },
        },
        NamedConstruction {
            name: "three_cosets_f7_2",
            set: build_example_f7(),
            expected: Expected {
                size: 14,
                sum_free: true,
                normal: TriState::Undefined,
                cover3: TriState::No,
            },
        },
        NamedConstruction {
            name: "avw_f5_2",
            set: build_avw(f52, &phi52, &Vector::unit(f52, 0)).expect("valid parameters"),
            expected: Expected {
                size: 10,
                sum_free: true,
                normal: TriState::Yes,
                cover3: TriState::Undefined,
            },
        },
        NamedConstruction {
            name: "avw_f5_3",
            set: build_avw(f53, &phi53, &Vector::unit(f53, 0)).expect("valid parameters"),
            expected: Expected {
                size: 50,
                sum_free: true,
                normal: TriState::Yes,
                cover3: TriState::Undefined,
            },
        },
        NamedConstruction {
            name: "avw_f11_2",
            set: build_avw(f112, &phi112, &Vector::unit(f112, 0)).expect("valid parameters"),
            expected: Expected {
                size: 44,
                sum_free: true,
                normal: TriState::Yes,
                cover3: TriState::Undefined,
            },
        },
    ]
}
