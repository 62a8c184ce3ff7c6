//! Index data selecting the Yetter–Drinfeld modules with exterior Nichols
//! algebras: pairs (i, k) with ω^{ik} = −1 for the classes of h^i, and odd
//! ℓ for the two-dimensional representations over the central class h^n.

use serde::{Deserialize, Serialize};

use super::YdError;
use crate::scalar::GroupDatum;

/// All (i, k) with 1 ≤ i < n, 1 ≤ k < m and ω^{ik} = −1, sorted.
pub fn enumerate_j(g: &GroupDatum) -> Vec<(u32, u32)> {
    let (m, n) = (g.m(), g.n());
    (1..n).flat_map(|i| (1..m).map(move |k| (i, k))).filter(|&(i, k)| (i * k) % m == n).collect()
}

fn in_j(g: &GroupDatum, (i, k): (u32, u32)) -> bool {
    (1..g.n()).contains(&i) && (1..g.m()).contains(&k) && (i * k) % g.m() == g.n()
}

/// A lexicographically ordered sequence of pairs from J, pairwise compatible.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexDatumI(Vec<(u32, u32)>);

/// A sequence of odd ℓ with 1 ≤ ℓ < n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexDatumL(Vec<u32>);

/// A pair datum and an ℓ datum that can be combined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexDatumK {
    pub pairs: IndexDatumI,
    pub ells: IndexDatumL,
}

impl IndexDatumI {
    pub fn validate(g: &GroupDatum, pairs: Vec<(u32, u32)>) -> Result<Self, YdError> {
        for (s, &p) in pairs.iter().enumerate() {
            if !in_j(g, p) {
                return Err(YdError::NotInJ { i: p.0, k: p.1 });
            }
            if s > 0 && pairs[s - 1] > p {
                return Err(YdError::NotOrdered(s));
            }
        }
        for (s, &(is, ks)) in pairs.iter().enumerate() {
            for (t, &(it, kt)) in pairs.iter().enumerate() {
                if (is * kt + it * ks) % g.m() != 0 {
                    return Err(YdError::CompatibilityFailed { s, t });
                }
            }
        }
        Ok(Self(pairs))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl IndexDatumL {
    pub fn validate(g: &GroupDatum, ells: Vec<u32>) -> Result<Self, YdError> {
        for &l in &ells {
            if l % 2 == 0 {
                return Err(YdError::EllNotOdd(l));
            }
            if !(1..g.n()).contains(&l) {
                return Err(YdError::EllOutOfRange(l));
            }
        }
        Ok(Self(ells))
    }

    pub fn ells(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl IndexDatumK {
    pub fn validate(g: &GroupDatum, pairs: Vec<(u32, u32)>, ells: Vec<u32>) -> Result<Self, YdError> {
        let pairs = IndexDatumI::validate(g, pairs)?;
        let ells = IndexDatumL::validate(g, ells)?;
        for (j, &(i, k)) in pairs.pairs().iter().enumerate() {
            if k % 2 == 0 {
                return Err(YdError::KNotOdd(j));
            }
            for (t, &l) in ells.ells().iter().enumerate() {
                if (i * l) % g.m() != g.n() {
                    return Err(YdError::MixedConditionFailed { j, t });
                }
            }
        }
        Ok(Self { pairs, ells })
    }
}

/// Every valid pair datum of length 1..=max_len.
pub fn enumerate_i(g: &GroupDatum, max_len: usize) -> Vec<IndexDatumI> {
    let j = enumerate_j(g);
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &frontier {
            for &p in &j {
                if seq.last().is_some_and(|&q| q > p) {
                    continue;
                }
                let mut s = seq.clone();
                s.push(p);
                if let Ok(d) = IndexDatumI::validate(g, s.clone()) {
                    out.push(d);
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Every ℓ datum of length 1..=max_len, ℓ sequences taken non-decreasing.
pub fn enumerate_l(g: &GroupDatum, max_len: usize) -> Vec<IndexDatumL> {
    let odd: Vec<u32> = (1..g.n()).filter(|l| l % 2 == 1).collect();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &frontier {
            for &l in odd.iter().filter(|&&l| seq.last().is_none_or(|&p| p <= l)) {
                let mut s = seq.clone();
                s.push(l);
                next.push(s);
            }
        }
        out.extend(next.iter().map(|s| IndexDatumL::validate(g, s.clone()).expect("odd values below n are valid")));
        frontier = next;
    }
    out
}

/// Every valid mixed datum with 1..=max_pairs pairs and 1..=max_ells values of ℓ
/// (ℓ sequences taken non-decreasing).
pub fn enumerate_k(g: &GroupDatum, max_pairs: usize, max_ells: usize) -> Vec<IndexDatumK> {
    let odd: Vec<u32> = (1..g.n()).filter(|l| l % 2 == 1).collect();
    let mut ell_seqs: Vec<Vec<u32>> = Vec::new();
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_ells {
        let mut next = Vec::new();
        for seq in &frontier {
            for &l in &odd {
                if seq.last().is_some_and(|&p| p > l) {
                    continue;
                }
                let mut s = seq.clone();
                s.push(l);
                next.push(s);
            }
        }
        ell_seqs.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for pairs in enumerate_i(g, max_pairs) {
        for ells in &ell_seqs {
            if let Ok(d) = IndexDatumK::validate(g, pairs.pairs().to_vec(), ells.clone()) {
                out.push(d);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn j_at_twelve() {
        let j = enumerate_j(&g12());
        assert_eq!(j, vec![(1, 6), (2, 3), (2, 9), (3, 2), (3, 6), (3, 10), (5, 6)]);
        assert!(!j.contains(&(1, 1)));
        let minus_one = CycScalar::from_int(12, -1);
        for (i, k) in j {
            assert_eq!(CycScalar::root_power(12, (i * k) as i64), minus_one);
        }
    }

    #[test]
    fn j_matches_exhaustive_oracle() {
        for m in [12u32, 16, 20, 24] {
            let g = GroupDatum::new(m).unwrap();
            let mut oracle = Vec::new();
            for i in 1..m / 2 {
                for k in 1..m {
                    if CycScalar::root_power(m, (i * k) as i64) == CycScalar::from_int(m, -1) {
                        oracle.push((i, k));
                    }
                }
            }
            assert_eq!(enumerate_j(&g), oracle);
        }
    }

    #[test]
    fn validators() {
        let g = g12();
        assert!(IndexDatumI::validate(&g, vec![(2, 3), (2, 9)]).is_ok());
        assert!(IndexDatumI::validate(&g, vec![]).is_ok());
        assert_eq!(IndexDatumI::validate(&g, vec![(1, 1)]), Err(YdError::NotInJ { i: 1, k: 1 }));
        assert_eq!(IndexDatumI::validate(&g, vec![(2, 9), (2, 3)]), Err(YdError::NotOrdered(1)));
        // ω^{1·3 + 2·6} = ω^15 ≠ 1
        assert_eq!(IndexDatumI::validate(&g, vec![(1, 6), (2, 3)]), Err(YdError::CompatibilityFailed { s: 0, t: 1 }));
        assert_eq!(IndexDatumL::validate(&g, vec![2]), Err(YdError::EllNotOdd(2)));
        assert_eq!(IndexDatumL::validate(&g, vec![7]), Err(YdError::EllOutOfRange(7)));
        assert!(IndexDatumK::validate(&g, vec![(2, 3)], vec![3]).is_ok());
        assert_eq!(IndexDatumK::validate(&g, vec![(2, 3)], vec![1]), Err(YdError::MixedConditionFailed { j: 0, t: 0 }));
        assert_eq!(IndexDatumK::validate(&g, vec![(3, 2)], vec![1]), Err(YdError::KNotOdd(0)));
    }

    #[test]
    fn k_at_twelve() {
        let ks = enumerate_k(&g12(), 2, 1);
        let found: Vec<(Vec<(u32, u32)>, Vec<u32>)> = ks.iter().map(|d| (d.pairs.pairs().to_vec(), d.ells.ells().to_vec())).collect();
        assert!(found.contains(&(vec![(2, 3)], vec![3])));
        assert!(found.contains(&(vec![(2, 9)], vec![3])));
    }
}
