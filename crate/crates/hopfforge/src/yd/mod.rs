//! Yetter–Drinfeld modules over k^{D_m}.
//!
//! A module stores the action of every φ_x and the coaction
//! λ(v) = Σ_x φ_x ⊗ λ_x(v), the latter flattened over pairs (x, w) as
//! x·dim + w, matching the tensor layout of [`HopfData`].

mod hom;
mod index;
mod transport;

use thiserror::Error;

use crate::dihedral::FunctionAlgebra;
use crate::hopf::HopfData;
use crate::linalg::{LinalgError, Mat, SparseVec};
use crate::report::Report;
use crate::scalar::{CycScalar, GroupDatum};

pub use hom::yd_hom_space;
pub use index::{enumerate_i, enumerate_j, enumerate_k, enumerate_l, IndexDatumI, IndexDatumK, IndexDatumL};
pub use transport::{dual_transport, group_side, GroupSideModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("({i}, {k}) is not in J")]
    NotInJ { i: u32, k: u32 },
    #[error("pairs are not lexicographically ordered at position {0}")]
    NotOrdered(usize),
    #[error("pairs {s} and {t} are not compatible")]
    CompatibilityFailed { s: usize, t: usize },
    #[error("ℓ = {0} is not odd")]
    EllNotOdd(u32),
    #[error("ℓ = {0} is out of range")]
    EllOutOfRange(u32),
    #[error("k of pair {0} is not odd")]
    KNotOdd(usize),
    #[error("pair {j} and ℓ at position {t} violate ω^(iℓ) = -1")]
    MixedConditionFailed { j: usize, t: usize },
    #[error("modules live over different groups")]
    BaseMismatch,
    #[error("invalid Yetter-Drinfeld input: {0}")]
    InvalidYDInput(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YDModule {
    pub group: GroupDatum,
    pub labels: Vec<String>,
    /// `action[x][v]` = φ_x · v.
    pub action: Vec<Vec<SparseVec>>,
    /// `coaction[v]` = λ(v).
    pub coaction: Vec<SparseVec>,
    pub degrees: Vec<u32>,
}

/// θ_{k,r} as (basis index, coefficient) pairs.
fn theta_terms(g: &GroupDatum, k: i64, r: i64) -> Vec<(usize, CycScalar)> {
    (0..g.m() as i64).map(|l| (g.elem_index(g.elem(k, l)), g.root_power(r * l))).collect()
}

/// A two-dimensional module with diagonal action by the degrees `deg` and
/// coaction λ(v₁) = θ_{0,−c}⊗v₁ + θ_{1,c}⊗v₂, λ(v₂) = θ_{1,−c}⊗v₁ + θ_{0,c}⊗v₂.
fn two_dim(g: GroupDatum, labels: [String; 2], acting: [(i64, i64); 2], c: i64) -> YDModule {
    let m = g.m();
    let mut action = vec![vec![SparseVec::new(); 2]; g.order()];
    for (v, &(i, j)) in acting.iter().enumerate() {
        action[g.elem_index(g.elem(i, j))][v] = SparseVec::unit(v, m);
    }
    let pack = |terms: [(i64, i64, usize); 2]| {
        let mut out = SparseVec::new();
        for (k, r, w) in terms {
            for (x, coef) in theta_terms(&g, k, r) {
                out.add_term(x * 2 + w, &coef);
            }
        }
        out
    };
    let coaction = vec![pack([(0, -c, 0), (1, c, 1)]), pack([(1, -c, 0), (0, c, 1)])];
    YDModule { group: g, labels: labels.to_vec(), action, coaction, degrees: vec![1, 1] }
}

impl YDModule {
    pub fn zero(group: GroupDatum) -> Self {
        Self { group, labels: Vec::new(), action: vec![Vec::new(); group.order()], coaction: Vec::new(), degrees: Vec::new() }
    }

    /// M_{(i,k)}: the class of h^i with the character χ^k of ⟨h⟩.
    pub fn m_ik(group: GroupDatum, i: u32, k: u32) -> Result<Self, YdError> {
        if !enumerate_j(&group).contains(&(i, k)) {
            return Err(YdError::NotInJ { i, k });
        }
        let labels = [format!("y1_({i},{k})"), format!("y2_({i},{k})")];
        Ok(two_dim(group, labels, [(0, -(i as i64)), (0, i as i64)], k as i64))
    }

    /// M_ℓ: the central class h^n with the two-dimensional representation ρ_ℓ.
    pub fn m_ell(group: GroupDatum, ell: u32) -> Result<Self, YdError> {
        IndexDatumL::validate(&group, vec![ell])?;
        let n = group.n() as i64;
        let labels = [format!("x1_({ell})"), format!("x2_({ell})")];
        Ok(two_dim(group, labels, [(0, n), (0, n)], ell as i64))
    }

    pub fn direct_sum(group: GroupDatum, parts: &[YDModule]) -> Result<Self, YdError> {
        let mut out = YDModule::zero(group);
        for p in parts {
            if p.group != group {
                return Err(YdError::BaseMismatch);
            }
            let (off, d, total) = (out.dim(), p.dim(), out.dim() + p.dim());
            let shift = |v: &SparseVec| -> SparseVec { v.iter().map(|(i, c)| (i + off, c.clone())).collect() };
            for (x, row) in out.action.iter_mut().enumerate() {
                row.extend(p.action[x].iter().map(shift));
            }
            // Re-flatten old coactions for the larger dimension.
            let old = out.dim();
            for lam in out.coaction.iter_mut() {
                *lam = lam.iter().map(|(xw, c)| ((xw / old.max(1)) * total + xw % old.max(1), c.clone())).collect();
            }
            out.coaction.extend(p.coaction.iter().map(|lam| lam.iter().map(|(xw, c)| ((xw / d) * total + off + xw % d, c.clone())).collect()));
            out.labels.extend(p.labels.iter().cloned());
            out.degrees.extend(p.degrees.iter().copied());
        }
        Ok(out)
    }

    /// M_I.
    pub fn from_pairs(group: GroupDatum, pairs: &IndexDatumI) -> Result<Self, YdError> {
        let parts = pairs.pairs().iter().map(|&(i, k)| Self::m_ik(group, i, k)).collect::<Result<Vec<_>, _>>()?;
        Self::direct_sum(group, &parts)
    }

    /// M_L.
    pub fn from_ells(group: GroupDatum, ells: &IndexDatumL) -> Result<Self, YdError> {
        let parts = ells.ells().iter().map(|&l| Self::m_ell(group, l)).collect::<Result<Vec<_>, _>>()?;
        Self::direct_sum(group, &parts)
    }

    /// M_{I,L} = M_I ⊕ M_L.
    pub fn from_mixed(group: GroupDatum, datum: &IndexDatumK) -> Result<Self, YdError> {
        let a = Self::from_pairs(group, &datum.pairs)?;
        let b = Self::from_ells(group, &datum.ells)?;
        Self::direct_sum(group, &[a, b])
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> u32 {
        self.group.m()
    }

    /// h · v for h ∈ k^{D_m}.
    pub fn act(&self, h: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (x, c) in h.iter() {
            for (w, d) in v.iter() {
                out.add_scaled(&self.action[x][w], &(c * d));
            }
        }
        out
    }

    pub fn coact(&self, v: &SparseVec) -> SparseVec {
        v.map_through(&self.coaction)
    }

    /// The matrix of c(v⊗w) = v₋₁·w ⊗ v₀ on self ⊗ other.
    pub fn braiding(&self, other: &YDModule) -> Result<Mat, YdError> {
        if self.group != other.group {
            return Err(YdError::BaseMismatch);
        }
        let (dm, dn) = (self.dim(), other.dim());
        let mut cols = Vec::with_capacity(dm * dn);
        for v in 0..dm {
            for w in 0..dn {
                let mut col = SparseVec::new();
                for (xu, c) in self.coaction[v].iter() {
                    let (x, u) = (xu / dm, xu % dm);
                    for (w2, d) in other.action[x][w].iter() {
                        col.add_term(w2 * dm + u, &(c * d));
                    }
                }
                cols.push(col);
            }
        }
        Ok(Mat::from_columns(self.m(), dm * dn, &cols))
    }

    /// Module, comodule and Yetter–Drinfeld compatibility axioms.
    pub fn verify(&self) -> Report {
        let f = FunctionAlgebra::new(self.group);
        let h = &f.hopf;
        let mut r = Report::new("yetter-drinfeld axioms");
        r.record("module", self.check_module(h));
        r.record("comodule", self.check_comodule(h));
        r.record("compatibility", self.check_compat(h));
        r
    }

    fn check_module(&self, h: &HopfData) -> Result<String, String> {
        for v in 0..self.dim() {
            let e = SparseVec::unit(v, self.m());
            if self.act(h.one(), &e) != e {
                return Err(format!("1 · {} != {}", self.labels[v], self.labels[v]));
            }
            for x in 0..h.dim() {
                for y in 0..h.dim() {
                    let lhs = self.act(h.mult_basis(x, y), &e);
                    let rhs = self.act(&h.basis(x), &self.action[y][v]);
                    if lhs != rhs {
                        return Err(format!("({}{})·{} fails", h.labels()[x], h.labels()[y], self.labels[v]));
                    }
                }
            }
        }
        Ok(String::new())
    }

    fn check_comodule(&self, h: &HopfData) -> Result<String, String> {
        let (d, hd) = (self.dim(), h.dim());
        for v in 0..d {
            let lam = &self.coaction[v];
            let mut lhs = SparseVec::new();
            let mut rhs = SparseVec::new();
            let mut counit = SparseVec::new();
            for (xw, c) in lam.iter() {
                let (x, w) = (xw / d, xw % d);
                for (yz, c2) in h.comult_basis(x).iter() {
                    lhs.add_term(yz * d + w, &(c * c2));
                }
                for (yu, c2) in self.coaction[w].iter() {
                    rhs.add_term((x * hd) * d + yu, &(c * c2));
                }
                counit.add_term(w, &(c * h.counit_basis(x)));
            }
            if lhs != rhs {
                return Err(format!("coassociativity fails at {}", self.labels[v]));
            }
            if counit != SparseVec::unit(v, self.m()) {
                return Err(format!("counit fails at {}", self.labels[v]));
            }
        }
        Ok(String::new())
    }

    /// λ(h·v) = h₁ v₋₁ S(h₃) ⊗ h₂·v₀.
    fn check_compat(&self, h: &HopfData) -> Result<String, String> {
        let (d, hd) = (self.dim(), h.dim());
        for x in 0..hd {
            let d2: Vec<(usize, usize, usize, CycScalar)> = h
                .comult_basis(x)
                .iter()
                .flat_map(|(pq, c)| {
                    let (p, q) = h.unpair(pq);
                    h.comult_basis(q).iter().map(move |(rs, c2)| {
                        let (r, s) = (rs / hd, rs % hd);
                        (p, r, s, c * c2)
                    })
                })
                .collect();
            for v in 0..d {
                let lhs = self.coact(&self.action[x][v]);
                let mut rhs = SparseVec::new();
                for (yw, c) in self.coaction[v].iter() {
                    let (y, w) = (yw / d, yw % d);
                    for (p, r, s, c2) in &d2 {
                        let left = h.mul(&h.mul(&h.basis(*p), &h.basis(y)), h.antipode_basis(*s));
                        if left.is_zero() {
                            continue;
                        }
                        let right = &self.action[*r][w];
                        for (a, ca) in left.iter() {
                            for (b, cb) in right.iter() {
                                rhs.add_term(a * d + b, &(&(&(c * c2) * ca) * cb));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(format!("λ({}·{}) fails", h.labels()[x], self.labels[v]));
                }
            }
        }
        Ok(String::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn simple_modules_are_yd() {
        let g = g12();
        for (i, k) in enumerate_j(&g) {
            let r = YDModule::m_ik(g, i, k).unwrap().verify();
            assert!(r.passed(), "({i},{k}) {r}");
        }
        for l in [1, 3, 5] {
            let r = YDModule::m_ell(g, l).unwrap().verify();
            assert!(r.passed(), "{l} {r}");
        }
        assert_eq!(YDModule::m_ell(g, 2), Err(YdError::EllNotOdd(2)));
        assert_eq!(YDModule::m_ik(g, 1, 1), Err(YdError::NotInJ { i: 1, k: 1 }));
        assert_ne!(YDModule::m_ell(g, 1).unwrap().coaction, YDModule::m_ell(g, 3).unwrap().coaction);
    }

    #[test]
    fn sums_have_expected_dimension_and_are_yd() {
        let g = g12();
        let i = IndexDatumI::validate(&g, vec![(2, 3), (2, 9)]).unwrap();
        let m = YDModule::from_pairs(g, &i).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(m.verify().passed());
        let k = IndexDatumK::validate(&g, vec![(2, 3)], vec![3]).unwrap();
        let mk = YDModule::from_mixed(g, &k).unwrap();
        assert_eq!(mk.dim(), 4);
        assert!(mk.verify().passed());
        let empty = YDModule::from_pairs(g, &IndexDatumI::validate(&g, vec![]).unwrap()).unwrap();
        assert_eq!(empty.dim(), 0);
    }

    #[test]
    fn braidings_are_symmetric() {
        let g = g12();
        let a = YDModule::m_ik(g, 2, 3).unwrap();
        let b = YDModule::m_ell(g, 3).unwrap();
        let c = YDModule::m_ik(g, 2, 9).unwrap();
        for (x, y) in [(&a, &a), (&a, &b), (&b, &a), (&a, &c), (&b, &b)] {
            let cxy = x.braiding(y).unwrap();
            let cyx = y.braiding(x).unwrap();
            assert!(cyx.mul(&cxy).unwrap().is_identity());
            assert_eq!(cxy.rank(), x.dim() * y.dim());
        }
    }

    #[test]
    fn braiding_needs_same_base() {
        let a = YDModule::m_ik(g12(), 2, 3).unwrap();
        let b = YDModule::m_ell(GroupDatum::new(16).unwrap(), 3).unwrap();
        assert_eq!(a.braiding(&b), Err(YdError::BaseMismatch));
    }
}
