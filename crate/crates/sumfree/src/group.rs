//! Arithmetic and linear algebra over F_p^n: element encoding, linear
//! functionals, subspaces in reduced row-echelon form, and hyperplane
//! enumeration.
//!
//! Elements of F_p^n are identified with integers in `[0, p^n)` via the
//! little-endian base-p encoding: `index = sum coords[i] * p^i`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible group order, `2^32`.
const MAX_ORDER: u64 = 1 << 32;

/// The ambient group F_p^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    p: u32,
    n: u32,
    order: u64,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    let p = p as u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GroupSpec {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::usage(format!("{} is not prime", p)));
        }
        if n < 1 {
            return Err(Error::usage("dimension must be at least 1"));
        }
        let mut order: u64 = 1;
        for _ in 0..n {
            order = order
                .checked_mul(p as u64)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or_else(|| Error::usage("group order exceeds 2^32"))?;
        }
        Ok(GroupSpec { p, n, order })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Little-endian base-p index of a coordinate vector.
    pub fn index_of(&self, coords: &[u32]) -> u64 {
        debug_assert_eq!(coords.len(), self.n as usize);
        let mut idx = 0u64;
        for &c in coords.iter().rev() {
            debug_assert!(c < self.p);
            idx = idx * self.p as u64 + c as u64;
        }
        idx
    }

    pub fn coords_of(&self, mut index: u64) -> Vec<u32> {
        debug_assert!(index < self.order);
        let mut coords = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            coords.push((index % self.p as u64) as u32);
            index /= self.p as u64;
        }
        coords
    }

    /// Digitwise modular addition of two indices.
    pub fn add_index(&self, a: u64, b: u64) -> u64 {
        let p = self.p as u64;
        let (mut a, mut b) = (a, b);
        let mut idx = 0u64;
        let mut pow = 1u64;
        for _ in 0..self.n {
            let d = (a % p + b % p) % p;
            idx += d * pow;
            pow *= p;
            a /= p;
            b /= p;
        }
        idx
    }

    pub fn neg_index(&self, a: u64) -> u64 {
        let p = self.p as u64;
        let mut a = a;
        let mut idx = 0u64;
        let mut pow = 1u64;
        for _ in 0..self.n {
            let d = (p - a % p) % p;
            idx += d * pow;
            pow *= p;
            a /= p;
        }
        idx
    }

    pub fn sub_index(&self, a: u64, b: u64) -> u64 {
        self.add_index(a, self.neg_index(b))
    }

    /// Scalar dilation of an index by a nonzero residue.
    pub fn dilate_index(&self, a: u64, c: u32) -> u64 {
        let p = self.p as u64;
        let c = c as u64 % p;
        let mut a = a;
        let mut idx = 0u64;
        let mut pow = 1u64;
        for _ in 0..self.n {
            idx += (a % p * c) % p * pow;
            pow *= p;
            a /= p;
        }
        idx
    }

    /// Multiplicative inverse mod p of a nonzero residue.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        pow_mod(a % self.p, self.p - 2, self.p)
    }
}

pub(crate) fn pow_mod(base: u32, mut exp: u32, m: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = base as u64 % m as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u64;
        }
        b = b * b % m as u64;
        exp >>= 1;
    }
    acc as u32
}

/// A point of F_p^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    spec: GroupSpec,
    coords: Vec<u32>,
}

impl Vector {
    pub fn new(spec: GroupSpec, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != spec.n() as usize {
            return Err(Error::usage("coordinate count does not match dimension"));
        }
        if coords.iter().any(|&c| c >= spec.p()) {
            return Err(Error::usage("coordinate out of range"));
        }
        Ok(Vector { spec, coords })
    }

    pub fn zero(spec: GroupSpec) -> Self {
        Vector {
            spec,
            coords: vec![0; spec.n() as usize],
        }
    }

    /// The standard unit vector e_{i+1} (zero-based position `i`).
    pub fn unit(spec: GroupSpec, i: usize) -> Self {
        let mut coords = vec![0; spec.n() as usize];
        coords[i] = 1;
        Vector { spec, coords }
    }

    pub fn from_index(spec: GroupSpec, index: u64) -> Self {
        Vector {
            coords: spec.coords_of(index),
            spec,
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn index(&self) -> u64 {
        self.spec.index_of(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let p = self.spec.p();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(Vector {
            spec: self.spec,
            coords,
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Vector {
        let p = self.spec.p();
        Vector {
            spec: self.spec,
            coords: self.coords.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Vector {
        let p = self.spec.p();
        Vector {
            spec: self.spec,
            coords: self.coords.iter().map(|&a| (a as u64 * c as u64 % p as u64) as u32).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// A nonzero linear functional on F_p^n, normalized so that its first
/// nonzero coefficient is 1. One normalized functional per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFunctional {
    spec: GroupSpec,
    coeffs: Vec<u32>,
}

impl LinearFunctional {
    pub fn new(spec: GroupSpec, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != spec.n() as usize {
            return Err(Error::usage("coefficient count does not match dimension"));
        }
        if coeffs.iter().any(|&c| c >= spec.p()) {
            return Err(Error::usage("coefficient out of range"));
        }
        let lead = coeffs
            .iter()
            .position(|&c| c != 0)
            .ok_or_else(|| Error::usage("functional must be nonzero"))?;
        let inv = spec.inv(coeffs[lead]);
        let p = spec.p() as u64;
        let coeffs = coeffs
            .iter()
            .map(|&c| (c as u64 * inv as u64 % p) as u32)
            .collect();
        Ok(LinearFunctional { spec, coeffs })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn eval(&self, v: &Vector) -> u32 {
        eval_functional(self.spec, &self.coeffs, v.coords())
    }

    pub fn eval_index(&self, idx: u64) -> u32 {
        let coords = self.spec.coords_of(idx);
        eval_functional(self.spec, &self.coeffs, &coords)
    }

    /// The kernel, a subspace of dimension n-1.
    pub fn kernel(&self) -> Subspace {
        let n = self.spec.n() as usize;
        let p = self.spec.p();
        let lead = self.coeffs.iter().position(|&c| c != 0).unwrap();
        // For each free position j != lead, the vector e_j - coeffs[j] * e_lead
        // lies in the kernel; these n-1 vectors are independent.
        let mut basis = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == lead {
                continue;
            }
            let mut coords = vec![0u32; n];
            coords[j] = 1;
            coords[lead] = (p - self.coeffs[j]) % p;
            basis.push(Vector {
                spec: self.spec,
                coords,
            });
        }
        Subspace::span(self.spec, &basis)
    }
}

pub(crate) fn eval_functional(spec: GroupSpec, coeffs: &[u32], coords: &[u32]) -> u32 {
    let p = spec.p() as u64;
    let mut acc = 0u64;
    for (&c, &x) in coeffs.iter().zip(coords) {
        acc = (acc + c as u64 * x as u64) % p;
    }
    acc as u32
}

/// All hyperplanes of F_p^n as normalized functionals, in lexicographic
/// order of their coefficient vectors. There are (p^n - 1)/(p - 1).
pub fn hyperplanes(spec: GroupSpec) -> Vec<LinearFunctional> {
    let n = spec.n() as usize;
    let p = spec.p();
    let mut out = Vec::new();
    // Lexicographically, vectors whose first nonzero coefficient sits at a
    // later position come first.
    for lead in (0..n).rev() {
        let free = n - lead - 1;
        let mut tail = vec![0u32; free];
        loop {
            let mut coeffs = vec![0u32; n];
            coeffs[lead] = 1;
            coeffs[lead + 1..].copy_from_slice(&tail);
            out.push(LinearFunctional { spec, coeffs });
            // odometer in lex order: last position fastest
            let mut i = free;
            loop {
                if i == 0 {
                    break;
                }
                tail[i - 1] += 1;
                if tail[i - 1] < p {
                    break;
                }
                tail[i - 1] = 0;
                i -= 1;
            }
            if tail.iter().all(|&t| t == 0) {
                break;
            }
        }
    }
    out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    out
}

/// The normalized functionals vanishing on `u`; there are
/// (p^{n-1} - 1)/(p - 1) of them.
pub fn hyperplanes_containing(u: &Vector) -> Result<Vec<LinearFunctional>> {
    if u.is_zero() {
        return Err(Error::usage("hyperplanes_containing: u must be nonzero"));
    }
    Ok(hyperplanes(u.spec())
        .into_iter()
        .filter(|phi| phi.eval(u) == 0)
        .collect())
}

/// A subspace of F_p^n, stored as a reduced row-echelon basis so that
/// equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    spec: GroupSpec,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero(spec: GroupSpec) -> Self {
        Subspace {
            spec,
            basis: Vec::new(),
        }
    }

    pub fn full(spec: GroupSpec) -> Self {
        let units: Vec<Vector> = (0..spec.n() as usize)
            .map(|i| Vector::unit(spec, i))
            .collect();
        Subspace::span(spec, &units)
    }

    /// RREF basis of the linear span of the given vectors.
    pub fn span(spec: GroupSpec, vs: &[Vector]) -> Subspace {
        let n = spec.n() as usize;
        let p = spec.p() as u64;
        let mut rows: Vec<Vec<u32>> = vs.iter().map(|v| v.coords().to_vec()).collect();
        let mut basis: Vec<Vec<u32>> = Vec::new();
        for col in 0..n {
            // find a row with nonzero entry in this column
            let Some(r) = rows.iter().position(|row| row[col] != 0) else {
                continue;
            };
            let mut pivot = rows.swap_remove(r);
            let inv = spec.inv(pivot[col]) as u64;
            for x in pivot.iter_mut() {
                *x = (*x as u64 * inv % p) as u32;
            }
            for row in rows.iter_mut() {
                let f = row[col] as u64;
                if f != 0 {
                    for (x, &b) in row.iter_mut().zip(&pivot) {
                        *x = ((*x as u64 + (p - f % p) * b as u64) % p) as u32;
                    }
                }
            }
            // back-substitute into earlier basis rows
            for row in basis.iter_mut() {
                let f = row[col] as u64;
                if f != 0 {
                    for (x, &b) in row.iter_mut().zip(&pivot) {
                        *x = ((*x as u64 + (p - f % p) * b as u64) % p) as u32;
                    }
                }
            }
            basis.push(pivot);
        }
        Subspace { spec, basis }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn size(&self) -> u64 {
        (self.spec.p() as u64).pow(self.dim())
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis
            .iter()
            .map(|c| Vector {
                spec: self.spec,
                coords: c.clone(),
            })
            .collect()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let p = self.spec.p() as u64;
        let mut coords = v.coords().to_vec();
        for row in &self.basis {
            let col = row.iter().position(|&c| c != 0).unwrap();
            let f = coords[col] as u64;
            if f != 0 {
                for (x, &b) in coords.iter_mut().zip(row) {
                    *x = ((*x as u64 + (p - f) * b as u64) % p) as u32;
                }
            }
        }
        coords.iter().all(|&c| c == 0)
    }

    /// All p^dim element indices of the subspace.
    pub fn enumerate(&self) -> Vec<u64> {
        let mut out = vec![0u64];
        for row in &self.basis {
            let vidx = self.spec.index_of(row);
            let mut next = Vec::with_capacity(out.len() * self.spec.p() as usize);
            for &e in &out {
                let mut shift = e;
                for _ in 0..self.spec.p() {
                    next.push(shift);
                    shift = self.spec.add_index(shift, vidx);
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }
}

/// A square matrix over F_p acting on F_p^n, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    spec: GroupSpec,
    entries: Vec<u32>,
}

impl Mat {
    pub fn new(spec: GroupSpec, entries: Vec<u32>) -> Result<Self> {
        let n = spec.n() as usize;
        if entries.len() != n * n {
            return Err(Error::usage("matrix entry count must be n*n"));
        }
        if entries.iter().any(|&c| c >= spec.p()) {
            return Err(Error::usage("matrix entry out of range"));
        }
        Ok(Mat { spec, entries })
    }

    pub fn identity(spec: GroupSpec) -> Self {
        let n = spec.n() as usize;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Mat { spec, entries }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let n = self.spec.n() as usize;
        let p = self.spec.p() as u64;
        let mut coords = vec![0u32; n];
        for (i, c) in coords.iter_mut().enumerate() {
            let mut acc = 0u64;
            for j in 0..n {
                acc = (acc + self.entries[i * n + j] as u64 * v.coords()[j] as u64) % p;
            }
            *c = acc as u32;
        }
        Vector {
            spec: self.spec,
            coords,
        }
    }

    pub fn apply_index(&self, idx: u64) -> u64 {
        self.apply(&Vector::from_index(self.spec, idx)).index()
    }

    pub fn det(&self) -> u32 {
        let n = self.spec.n() as usize;
        let p = self.spec.p() as u64;
        let mut m: Vec<u64> = self.entries.iter().map(|&e| e as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if r != col {
                for j in 0..n {
                    m.swap(r * n + j, col * n + j);
                }
                det = (p - det % p) % p;
            }
            let piv = m[col * n + col];
            det = det * piv % p;
            let inv = self.spec.inv(piv as u32) as u64;
            for r2 in col + 1..n {
                let f = m[r2 * n + col] * inv % p;
                if f != 0 {
                    for j in col..n {
                        m[r2 * n + j] = (m[r2 * n + j] + (p - f) * m[col * n + j]) % p;
                    }
                }
            }
        }
        det as u32
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    pub fn inverse(&self) -> Option<Mat> {
        let n = self.spec.n() as usize;
        let p = self.spec.p() as u64;
        let mut m: Vec<u64> = self.entries.iter().map(|&e| e as u64).collect();
        let mut inv: Vec<u64> = Mat::identity(self.spec).entries.iter().map(|&e| e as u64).collect();
        for col in 0..n {
            let r = (col..n).find(|&r| m[r * n + col] != 0)?;
            if r != col {
                for j in 0..n {
                    m.swap(r * n + j, col * n + j);
                    inv.swap(r * n + j, col * n + j);
                }
            }
            let f = self.spec.inv(m[col * n + col] as u32) as u64;
            for j in 0..n {
                m[col * n + j] = m[col * n + j] * f % p;
                inv[col * n + j] = inv[col * n + j] * f % p;
            }
            for r2 in 0..n {
                if r2 == col {
                    continue;
                }
                let f = m[r2 * n + col];
                if f != 0 {
                    for j in 0..n {
                        m[r2 * n + j] = (m[r2 * n + j] + (p - f) * m[col * n + j]) % p;
                        inv[r2 * n + j] = (inv[r2 * n + j] + (p - f) * inv[col * n + j]) % p;
                    }
                }
            }
        }
        Some(Mat {
            spec: self.spec,
            entries: inv.iter().map(|&e| e as u32).collect(),
        })
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.spec.n() as usize;
        let p = self.spec.p() as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc = (acc + self.entries[i * n + k] as u64 * other.entries[k * n + j] as u64) % p;
                }
                entries[i * n + j] = acc as u32;
            }
        }
        Mat {
            spec: self.spec,
            entries,
        }
    }
}

/// |GL(n, p)| = prod_{i<n} (p^n - p^i).
pub fn gl_order(spec: GroupSpec) -> u64 {
    let pn = spec.order();
    let mut acc = 1u64;
    let mut pi = 1u64;
    for _ in 0..spec.n() {
        acc = acc.saturating_mul(pn - pi);
        pi *= spec.p() as u64;
    }
    acc
}

/// Enumerates all of GL(n, p) by scanning the p^{n^2} candidate matrices.
/// Intended for small groups only.
pub fn enumerate_gl(spec: GroupSpec) -> Vec<Mat> {
    let n = spec.n() as usize;
    let p = spec.p();
    let mut entries = vec![0u32; n * n];
    let mut out = Vec::new();
    loop {
        let m = Mat {
            spec,
            entries: entries.clone(),
        };
        if m.is_invertible() {
            out.push(m);
        }
        let mut i = entries.len();
        loop {
            if i == 0 {
                return out;
            }
            entries[i - 1] += 1;
            if entries[i - 1] < p {
                break;
            }
            entries[i - 1] = 0;
            i -= 1;
        }
    }
}

/// A uniformly random invertible matrix, by rejection sampling.
pub fn random_gl(spec: GroupSpec, rng: &mut impl rand::Rng) -> Mat {
    let n = spec.n() as usize;
    loop {
        let entries: Vec<u32> = (0..n * n).map(|_| rng.gen_range(0..spec.p())).collect();
        let m = Mat { spec, entries };
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: u32, n: u32) -> GroupSpec {
        GroupSpec::new(p, n).unwrap()
    }

    fn vec_of(s: GroupSpec, coords: &[u32]) -> Vector {
        Vector::new(s, coords.to_vec()).unwrap()
    }

    #[test]
    fn spec_rejects_bad_input() {
        assert!(GroupSpec::new(4, 2).is_err());
        assert!(GroupSpec::new(1, 2).is_err());
        assert!(GroupSpec::new(2, 33).is_err()); // 2^33 > 2^32
        assert!(GroupSpec::new(2, 32).is_ok());
    }

    #[test]
    fn index_roundtrip() {
        let s = spec(5, 3);
        for i in 0..s.order() {
            assert_eq!(s.index_of(&s.coords_of(i)), i);
        }
    }

    #[test]
    fn vec_add_examples() {
        let s = spec(5, 2);
        let a = vec_of(s, &[1, 2]);
        let b = vec_of(s, &[4, 4]);
        assert_eq!(a.add(&b).unwrap(), vec_of(s, &[0, 1]));
        assert_eq!(a.add(&Vector::zero(s)).unwrap(), a);

        let s2 = spec(2, 4);
        let a = vec_of(s2, &[1, 1, 1, 1]);
        let b = vec_of(s2, &[1, 0, 0, 0]);
        assert_eq!(a.add(&b).unwrap(), vec_of(s2, &[0, 1, 1, 1]));
    }

    #[test]
    fn vec_add_spec_mismatch() {
        let a = Vector::zero(spec(5, 2));
        let b = Vector::zero(spec(7, 2));
        assert_eq!(a.add(&b), Err(Error::SpecMismatch));
    }

    #[test]
    fn add_index_matches_coords() {
        let s = spec(3, 3);
        for a in 0..s.order() {
            for b in 0..s.order() {
                let va = Vector::from_index(s, a);
                let vb = Vector::from_index(s, b);
                assert_eq!(s.add_index(a, b), va.add(&vb).unwrap().index());
            }
        }
    }

    #[test]
    fn span_examples() {
        let s = spec(5, 3);
        let sp = Subspace::span(s, &[vec_of(s, &[1, 0, 0]), vec_of(s, &[2, 0, 0])]);
        assert_eq!(sp.dim(), 1);
        assert_eq!(sp.basis()[0], vec_of(s, &[1, 0, 0]));

        assert_eq!(Subspace::span(s, &[]).dim(), 0);

        let s2 = spec(5, 2);
        let sp2 = Subspace::span(
            s2,
            &[vec_of(s2, &[1, 2]), vec_of(s2, &[2, 4]), vec_of(s2, &[0, 1])],
        );
        assert_eq!(sp2.dim(), 2);
    }

    #[test]
    fn span_idempotent() {
        let s = spec(5, 3);
        let sp = Subspace::span(s, &[vec_of(s, &[1, 2, 3]), vec_of(s, &[0, 1, 4])]);
        let elems: Vec<Vector> = sp
            .enumerate()
            .into_iter()
            .map(|i| Vector::from_index(s, i))
            .collect();
        assert_eq!(Subspace::span(s, &elems), sp);
    }

    #[test]
    fn span_membership_matches_enumeration() {
        let s = spec(3, 4);
        let sp = Subspace::span(s, &[vec_of(s, &[1, 0, 2, 1]), vec_of(s, &[0, 1, 1, 1])]);
        let elems: std::collections::HashSet<u64> = sp.enumerate().into_iter().collect();
        for i in 0..s.order() {
            assert_eq!(sp.contains(&Vector::from_index(s, i)), elems.contains(&i));
        }
    }

    #[test]
    fn hyperplane_counts() {
        assert_eq!(hyperplanes(spec(5, 2)).len(), 6);
        assert_eq!(hyperplanes(spec(2, 4)).len(), 15);
        assert_eq!(hyperplanes(spec(7, 2)).len(), 8);
    }

    #[test]
    fn hyperplanes_lex_ordered_and_distinct() {
        let hs = hyperplanes(spec(5, 3));
        for w in hs.windows(2) {
            assert!(w[0].coeffs() < w[1].coeffs());
        }
        assert_eq!(hs.len(), 31);
    }

    #[test]
    fn hyperplanes_containing_counts() {
        let s = spec(5, 3);
        let u = Vector::unit(s, 0);
        assert_eq!(hyperplanes_containing(&u).unwrap().len(), 6);

        let s2 = spec(5, 2);
        let u2 = Vector::unit(s2, 0);
        let hs = hyperplanes_containing(&u2).unwrap();
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].coeffs(), &[0, 1]);

        assert!(hyperplanes_containing(&Vector::zero(s)).is_err());
    }

    #[test]
    fn hyperplanes_membership_count_per_vector() {
        // each nonzero v lies in exactly (p^{n-1}-1)/(p-1) kernels
        for (p, n) in [(5u32, 3u32), (2, 4), (3, 3)] {
            let s = spec(p, n);
            let hs = hyperplanes(s);
            let expect = ((p as u64).pow(n - 1) - 1) / (p as u64 - 1);
            for i in 1..s.order() {
                let v = Vector::from_index(s, i);
                let count = hs.iter().filter(|phi| phi.eval(&v) == 0).count() as u64;
                assert_eq!(count, expect);
            }
        }
    }

    #[test]
    fn kernel_dimension() {
        let s = spec(5, 3);
        for phi in hyperplanes(s) {
            let k = phi.kernel();
            assert_eq!(k.dim(), 2);
            for idx in k.enumerate() {
                assert_eq!(phi.eval_index(idx), 0);
            }
        }
    }

    #[test]
    fn functional_normalization() {
        let s = spec(5, 2);
        let phi = LinearFunctional::new(s, vec![2, 3]).unwrap();
        assert_eq!(phi.coeffs(), &[1, 4]); // scaled by inv(2) = 3
        assert!(LinearFunctional::new(s, vec![0, 0]).is_err());
    }

    #[test]
    fn gl_enumeration_small() {
        assert_eq!(enumerate_gl(spec(5, 2)).len(), 480);
        assert_eq!(gl_order(spec(5, 2)), 480);
        assert_eq!(gl_order(spec(2, 4)), 20160);
        assert_eq!(gl_order(spec(3, 2)), 48);
        assert_eq!(enumerate_gl(spec(3, 2)).len(), 48);
    }

    #[test]
    fn matrix_inverse() {
        let s = spec(5, 2);
        let m = Mat::new(s, vec![1, 2, 3, 4]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(s));
    }
}
