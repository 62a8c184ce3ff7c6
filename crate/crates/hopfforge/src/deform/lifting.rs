//! Lifting data and the relations and cocycles they determine.
//!
//! ζ is keyed by values (i, k, q). μ, ν and τ are keyed by positions in the
//! ℓ sequence, since the same ℓ may occur more than once.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::DeformError;
use crate::hopf::Bilinear;
use crate::linalg::SparseVec;
use crate::scalar::{CycScalar, GroupDatum};
use crate::yd::{IndexDatumI, IndexDatumK, IndexDatumL, YDModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Classes of h^i only.
    A,
    /// The central class h^n only.
    B,
    /// Both.
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingData {
    pub family: Family,
    pub group: GroupDatum,
    pub pairs: Vec<(u32, u32)>,
    pub ells: Vec<u32>,
    pub zeta: BTreeMap<(u32, u32, u32), CycScalar>,
    /// Keyed by positions s ≤ t.
    pub mu: BTreeMap<(usize, usize), CycScalar>,
    pub nu: BTreeMap<(usize, usize), CycScalar>,
    /// Keyed by all position pairs.
    pub tau: BTreeMap<(usize, usize), CycScalar>,
}

fn invalid(msg: impl Into<String>) -> DeformError {
    DeformError::InvalidLiftingData(msg.into())
}

impl LiftingData {
    pub fn zero(family: Family, group: GroupDatum, pairs: Vec<(u32, u32)>, ells: Vec<u32>) -> Self {
        Self { family, group, pairs, ells, zeta: BTreeMap::new(), mu: BTreeMap::new(), nu: BTreeMap::new(), tau: BTreeMap::new() }
    }

    /// Keys for ζ: (i, k, q) with (i, k), (i, q) both in I.
    pub fn zeta_keys(pairs: &[(u32, u32)]) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for &(i, k) in pairs {
            for &(p, q) in pairs {
                if i == p {
                    out.push((i, k, q));
                }
            }
        }
        out
    }

    pub fn symmetric_keys(len: usize) -> Vec<(usize, usize)> {
        (0..len).flat_map(|s| (s..len).map(move |t| (s, t))).collect()
    }

    pub fn all_keys(len: usize) -> Vec<(usize, usize)> {
        (0..len).flat_map(|s| (0..len).map(move |t| (s, t))).collect()
    }

    /// Number of free parameters.
    pub fn parameter_count(family: Family, pairs: &[(u32, u32)], ells: &[u32]) -> usize {
        let z = Self::zeta_keys(pairs).len();
        let l = ells.len();
        let b = l * (l + 1) + l * l;
        match family {
            Family::A => z,
            Family::B => b,
            Family::C => z + b,
        }
    }

    /// Random data with nonzero integer entries, |c| ≤ 3, from a seeded generator.
    pub fn random(family: Family, group: GroupDatum, pairs: Vec<(u32, u32)>, ells: Vec<u32>, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || {
            let c = rng.gen_range(1i64..=3);
            group.int(if rng.gen_bool(0.5) { c } else { -c })
        };
        let mut out = Self::zero(family, group, pairs, ells);
        if family != Family::B {
            for key in Self::zeta_keys(&out.pairs) {
                out.zeta.insert(key, draw());
            }
        }
        if family != Family::A {
            for key in Self::symmetric_keys(out.ells.len()) {
                out.mu.insert(key, draw());
                out.nu.insert(key, draw());
            }
            for key in Self::all_keys(out.ells.len()) {
                out.tau.insert(key, draw());
            }
        }
        out
    }

    /// Checks the index data for the family and that every key is allowed.
    pub fn validate(&self) -> Result<(), DeformError> {
        let g = &self.group;
        match self.family {
            Family::A => {
                if !self.ells.is_empty() {
                    return Err(invalid("family A takes no ℓ values"));
                }
                IndexDatumI::validate(g, self.pairs.clone())?;
            }
            Family::B => {
                if !self.pairs.is_empty() {
                    return Err(invalid("family B takes no (i, k) pairs"));
                }
                IndexDatumL::validate(g, self.ells.clone())?;
            }
            Family::C => {
                IndexDatumK::validate(g, self.pairs.clone(), self.ells.clone())?;
            }
        }
        if self.pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("repeated (i, k) pairs make ζ ambiguous"));
        }
        let zk = Self::zeta_keys(&self.pairs);
        if let Some(k) = self.zeta.keys().find(|k| !zk.contains(k)) {
            return Err(invalid(format!("ζ key {k:?} does not pair entries of I with equal first index")));
        }
        let l = self.ells.len();
        for (name, map) in [("μ", &self.mu), ("ν", &self.nu)] {
            if let Some(k) = map.keys().find(|&&(s, t)| s > t || t >= l) {
                return Err(invalid(format!("{name} key {k:?} is not a position pair s ≤ t")));
            }
        }
        if let Some(k) = self.tau.keys().find(|&&(s, t)| s >= l || t >= l) {
            return Err(invalid(format!("τ key {k:?} is out of range")));
        }
        if self.family == Family::A && !(self.mu.is_empty() && self.nu.is_empty() && self.tau.is_empty()) {
            return Err(invalid("family A takes no μ, ν, τ"));
        }
        if self.family == Family::B && !self.zeta.is_empty() {
            return Err(invalid("family B takes no ζ"));
        }
        Ok(())
    }

    /// The Yetter–Drinfeld module: y-blocks first, then x-blocks.
    pub fn module(&self) -> Result<YDModule, DeformError> {
        self.validate()?;
        let g = self.group;
        let mut parts = Vec::new();
        for &(i, k) in &self.pairs {
            parts.push(YDModule::m_ik(g, i, k)?);
        }
        for &l in &self.ells {
            parts.push(YDModule::m_ell(g, l)?);
        }
        Ok(YDModule::direct_sum(g, &parts)?)
    }

    fn get(map: &BTreeMap<(usize, usize), CycScalar>, s: usize, t: usize, symmetric: bool) -> Option<&CycScalar> {
        let key = if symmetric && s > t { (t, s) } else { (s, t) };
        map.get(&key)
    }

    fn x_offset(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Values η(x_a, x_b) on generator positions: half the lifting parameter
    /// on both orders of each pair.
    pub fn generator_form(&self) -> BTreeMap<(usize, usize), CycScalar> {
        let half = CycScalar::from_ratio(self.group.m(), 1, 2).expect("2 ≠ 0");
        let mut out = BTreeMap::new();
        let mut put = |a: usize, b: usize, v: &CycScalar| {
            if !v.is_zero() {
                let v = v * &half;
                out.insert((a, b), v.clone());
                out.insert((b, a), v);
            }
        };
        for (s, &(i, k)) in self.pairs.iter().enumerate() {
            for (t, &(p, q)) in self.pairs.iter().enumerate() {
                if i == p {
                    if let Some(z) = self.zeta.get(&(i, k, q)) {
                        put(2 * s, 2 * t + 1, z);
                    }
                }
            }
        }
        let o = self.x_offset();
        for s in 0..self.ells.len() {
            for t in 0..self.ells.len() {
                if s <= t {
                    if let Some(v) = Self::get(&self.mu, s, t, true) {
                        put(o + 2 * s, o + 2 * t, v);
                    }
                    if let Some(v) = Self::get(&self.nu, s, t, true) {
                        put(o + 2 * s + 1, o + 2 * t + 1, v);
                    }
                }
                if let Some(v) = self.tau.get(&(s, t)) {
                    put(o + 2 * s, o + 2 * t + 1, v);
                }
            }
        }
        out
    }

    /// The cocycle η on B = ⋀M (generator x_a at monomial index 1 + a).
    pub fn cocycle(&self) -> Bilinear {
        let mut out = Bilinear::new();
        for ((a, b), v) in self.generator_form() {
            out.add_term(1 + a, 1 + b, &v);
        }
        out
    }

    /// The presented relations x_a x_b + x_b x_a = c_ab ∈ k^{D_m} for a ≤ b,
    /// as stated for the three families (zero entries omitted).
    pub fn relations(&self) -> BTreeMap<(usize, usize), SparseVec> {
        let g = self.group;
        let theta = |k: i64, r: i64| -> SparseVec { (0..g.m() as i64).map(|l| (g.elem_index(g.elem(k, l)), g.root_power(r * l))).collect() };
        let one: SparseVec = (0..g.order()).map(|x| (x, g.one())).collect();
        // c·(1 − θ_{0,r}) − c'·θ_{1,s}
        let combo = |c: Option<&CycScalar>, r: i64, c2: Option<&CycScalar>, s: i64| -> SparseVec {
            let mut out = SparseVec::new();
            if let Some(c) = c {
                out.add_scaled(&one, c);
                out.add_scaled(&theta(0, r), &-c);
            }
            if let Some(c2) = c2 {
                out.add_scaled(&theta(1, s), &-c2);
            }
            out
        };
        let mut out = BTreeMap::new();
        let mut put = |a: usize, b: usize, v: SparseVec| {
            if !v.is_zero() {
                out.insert((a.min(b), a.max(b)), v);
            }
        };
        for (s, &(i, k)) in self.pairs.iter().enumerate() {
            for &(p, q) in self.pairs.iter().filter(|&&(p, _)| p == i) {
                let t = self.pairs.iter().position(|&x| x == (p, q)).expect("present");
                let (ki, qi) = (k as i64, q as i64);
                put(2 * s, 2 * t + 1, combo(self.zeta.get(&(i, k, q)), qi - ki, self.zeta.get(&(i, q, k)), ki - qi));
            }
        }
        let o = self.x_offset();
        for (s, &l) in self.ells.iter().enumerate() {
            for (t, &u) in self.ells.iter().enumerate() {
                let (l, u) = (l as i64, u as i64);
                if s <= t {
                    let mu = Self::get(&self.mu, s, t, true);
                    let nu = Self::get(&self.nu, s, t, true);
                    put(o + 2 * s, o + 2 * t, combo(mu, -l - u, nu, l + u));
                    put(o + 2 * s + 1, o + 2 * t + 1, combo(nu, l + u, mu, -l - u));
                }
                put(o + 2 * s, o + 2 * t + 1, combo(self.tau.get(&(s, t)), u - l, self.tau.get(&(t, s)), l - u));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn parameter_counts() {
        assert_eq!(LiftingData::zeta_keys(&[(2, 3), (2, 9)]), vec![(2, 3, 3), (2, 3, 9), (2, 9, 3), (2, 9, 9)]);
        assert_eq!(LiftingData::parameter_count(Family::A, &[(2, 3), (2, 9)], &[]), 4);
        assert_eq!(LiftingData::parameter_count(Family::B, &[], &[3, 3]), 3 + 3 + 4);
    }

    #[test]
    fn validation() {
        let g = g12();
        let mut d = LiftingData::zero(Family::A, g, vec![(2, 3), (2, 9)], vec![]);
        assert!(d.validate().is_ok());
        d.zeta.insert((2, 3, 6), g.one());
        assert!(matches!(d.validate(), Err(DeformError::InvalidLiftingData(_))));
        let rep = LiftingData::zero(Family::A, g, vec![(2, 3), (2, 3)], vec![]);
        assert!(matches!(rep.validate(), Err(DeformError::InvalidLiftingData(_))));
        let mut b = LiftingData::zero(Family::B, g, vec![], vec![3, 3]);
        b.mu.insert((1, 0), g.one());
        assert!(b.validate().is_err());
        let c = LiftingData::zero(Family::C, g, vec![(2, 3)], vec![1]);
        assert!(c.validate().is_err());
    }

    #[test]
    fn cocycle_values() {
        let g = g12();
        let mut d = LiftingData::zero(Family::A, g, vec![(2, 3), (2, 9)], vec![]);
        d.zeta.insert((2, 3, 9), g.one());
        let eta = d.cocycle();
        let half = CycScalar::from_ratio(12, 1, 2).unwrap();
        // y1 of block 0 is generator 0, y2 of block 1 is generator 3.
        assert_eq!(eta.get(1, 4), Some(&half));
        assert_eq!(eta.get(4, 1), Some(&half));
        assert_eq!(eta.len(), 2);
        let mut b = LiftingData::zero(Family::B, g, vec![], vec![3]);
        b.mu.insert((0, 0), g.one());
        assert_eq!(b.cocycle().get(1, 1), Some(&half));
        assert_eq!(b.cocycle().len(), 1);
        assert!(LiftingData::zero(Family::B, g, vec![], vec![3]).cocycle().is_zero());
    }

    #[test]
    fn random_data_is_reproducible_and_valid() {
        let g = g12();
        let a = LiftingData::random(Family::C, g, vec![(2, 3)], vec![3], 7);
        assert_eq!(a, LiftingData::random(Family::C, g, vec![(2, 3)], vec![3], 7));
        assert!(a.validate().is_ok());
    }
}
