//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Multiplication and comultiplication are stored sparsely: the algebras of
//! interest reach dimension 384–512, where dense structure tensors would not
//! fit in memory. Elements of A⊗A are [`SparseVec`]s over the flattened index
//! `p·dim + q`.

mod coradical;
mod functional;
mod verify;

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::linalg::{LinalgError, SparseVec};
use crate::scalar::CycScalar;

pub use coradical::{coradical, group_likes, primitives, skew_primitives};
pub use functional::{Bilinear, Functional};
pub use verify::{generating_set, verify_hopf, FULL_CHECK_DIM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("inconsistent structure constants: {0}")]
    Inconsistent(String),
    #[error("element is not group-like: {0}")]
    InvalidGroupLike(String),
    #[error("functional is not convolution invertible")]
    NotInvertible,
    #[error("group-likes are not defined over Q: {0}")]
    NotSplit(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Raw structure constants, validated by [`HopfData::new`].
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub m: u32,
    pub labels: Vec<String>,
    /// `mult[i][j]` = e_i · e_j.
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
    /// `comult[k]` = Δ(e_k) over flattened pairs.
    pub comult: Vec<SparseVec>,
    pub counit: Vec<CycScalar>,
    /// `antipode[i]` = S(e_i).
    pub antipode: Vec<SparseVec>,
    pub grading: Option<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct HopfData {
    m: u32,
    labels: Vec<String>,
    mult: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    comult: Vec<SparseVec>,
    counit: Vec<CycScalar>,
    antipode: Vec<SparseVec>,
    grading: Option<Vec<u32>>,
    generators: Option<Vec<SparseVec>>,
    dual_index: OnceLock<DualIndex>,
}

/// For each pair (p, q), the basis elements k whose coproduct contains e_p⊗e_q.
pub type DualIndex = HashMap<(usize, usize), Vec<(usize, CycScalar)>>;

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
            && self.labels == other.labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.grading == other.grading
    }
}

impl HopfData {
    pub fn new(parts: HopfParts) -> Result<Self, HopfError> {
        let dim = parts.labels.len();
        let bad = |what: &str| Err(HopfError::Inconsistent(what.to_string()));
        if dim == 0 {
            return bad("dimension must be positive");
        }
        if parts.mult.len() != dim || parts.mult.iter().any(|r| r.len() != dim) {
            return bad("multiplication table shape");
        }
        if parts.comult.len() != dim || parts.counit.len() != dim || parts.antipode.len() != dim {
            return bad("coalgebra data length");
        }
        let in_range = |v: &SparseVec, n: usize| v.indices().all(|i| i < n);
        if !parts.mult.iter().flatten().all(|v| in_range(v, dim))
            || !in_range(&parts.unit, dim)
            || !parts.comult.iter().all(|v| in_range(v, dim * dim))
            || !parts.antipode.iter().all(|v| in_range(v, dim))
        {
            return bad("basis index out of range");
        }
        if let Some(g) = &parts.grading {
            if g.len() != dim {
                return bad("grading length");
            }
        }
        Ok(Self {
            m: parts.m,
            labels: parts.labels,
            mult: parts.mult,
            unit: parts.unit,
            comult: parts.comult,
            counit: parts.counit,
            antipode: parts.antipode,
            grading: parts.grading,
            generators: None,
            dual_index: OnceLock::new(),
        })
    }

    pub fn into_parts(self) -> HopfParts {
        HopfParts {
            m: self.m,
            labels: self.labels,
            mult: self.mult,
            unit: self.unit,
            comult: self.comult,
            counit: self.counit,
            antipode: self.antipode,
            grading: self.grading,
        }
    }

    /// Supplies elements known to generate the algebra; verification checks
    /// the claim before relying on it.
    pub fn with_generators(mut self, gens: Vec<SparseVec>) -> Self {
        self.generators = Some(gens);
        self
    }

    pub fn generator_hint(&self) -> Option<&[SparseVec]> {
        self.generators.as_deref()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn grading(&self) -> Option<&[u32]> {
        self.grading.as_deref()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.grading.as_ref().map_or(0, |g| g[i])
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar::zero(self.m)
    }

    pub fn one(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.m)
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn comult_basis(&self, k: usize) -> &SparseVec {
        &self.comult[k]
    }

    pub fn counit_basis(&self, i: usize) -> &CycScalar {
        &self.counit[i]
    }

    pub fn counit_vec(&self) -> &[CycScalar] {
        &self.counit
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    pub fn pair(&self, p: usize, q: usize) -> usize {
        p * self.dim() + q
    }

    pub fn unpair(&self, idx: usize) -> (usize, usize) {
        (idx / self.dim(), idx % self.dim())
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let p = &self.mult[i][j];
                if !p.is_empty() {
                    out.add_scaled(p, &(x * y));
                }
            }
        }
        out
    }

    pub fn comul(&self, a: &SparseVec) -> SparseVec {
        a.map_through(&self.comult)
    }

    pub fn counit_of(&self, a: &SparseVec) -> CycScalar {
        a.dot_dense(&self.counit).unwrap_or_else(|| self.zero())
    }

    pub fn antipode_of(&self, a: &SparseVec) -> SparseVec {
        a.map_through(&self.antipode)
    }

    /// a ⊗ b as a flattened element of A⊗A.
    pub fn tensor(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_term(self.pair(i, j), &(x * y));
            }
        }
        out
    }

    /// Product in the algebra A⊗A.
    pub fn tensor_mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (ab, c1) in x.iter() {
            let (a, b) = self.unpair(ab);
            for (cd, c2) in y.iter() {
                let (c, d) = self.unpair(cd);
                let (l, r) = (&self.mult[a][c], &self.mult[b][d]);
                if l.is_empty() || r.is_empty() {
                    continue;
                }
                let coef = c1 * c2;
                for (i, u) in l.iter() {
                    let cu = &coef * u;
                    for (j, v) in r.iter() {
                        out.add_term(self.pair(i, j), &(&cu * v));
                    }
                }
            }
        }
        out
    }

    /// Applies `f ⊗ g` to a flattened tensor, where f, g map basis vectors.
    pub fn tensor_map(&self, t: &SparseVec, f: impl Fn(usize) -> SparseVec, g: impl Fn(usize) -> SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (pq, c) in t.iter() {
            let (p, q) = self.unpair(pq);
            let (fp, gq) = (f(p), g(q));
            for (i, u) in fp.iter() {
                let cu = c * u;
                for (j, v) in gq.iter() {
                    out.add_term(self.pair(i, j), &(&cu * v));
                }
            }
        }
        out
    }

    /// The inverse comultiplication index used for convolution of functionals.
    pub fn dual_index(&self) -> &DualIndex {
        self.dual_index.get_or_init(|| {
            let mut idx: DualIndex = HashMap::new();
            for (k, d) in self.comult.iter().enumerate() {
                for (pq, c) in d.iter() {
                    idx.entry(self.unpair(pq)).or_default().push((k, c.clone()));
                }
            }
            idx
        })
    }

    /// The dual Hopf algebra A*, in the dual basis.
    pub fn dual(&self) -> HopfData {
        let dim = self.dim();
        let mut mult = vec![vec![SparseVec::new(); dim]; dim];
        for (k, d) in self.comult.iter().enumerate() {
            for (pq, c) in d.iter() {
                let (p, q) = self.unpair(pq);
                mult[p][q].add_term(k, c);
            }
        }
        let mut comult = vec![SparseVec::new(); dim];
        for (i, row) in self.mult.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, c) in v.iter() {
                    comult[k].add_term(self.pair(i, j), c);
                }
            }
        }
        let mut antipode = vec![SparseVec::new(); dim];
        for (i, v) in self.antipode.iter().enumerate() {
            for (j, c) in v.iter() {
                antipode[j].add_term(i, c);
            }
        }
        let counit = self.unit.to_dense(dim, self.m);
        HopfData::new(HopfParts {
            m: self.m,
            labels: self.labels.iter().map(|l| format!("dual({l})")).collect(),
            mult,
            unit: SparseVec::from_dense(&self.counit),
            comult,
            counit,
            antipode,
            grading: None,
        })
        .expect("dual of consistent data is consistent")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The group algebra of Z/2 = {1, g}.
    pub fn z2_group_algebra(m: u32) -> HopfData {
        let one = |i| SparseVec::unit(i, m);
        let mult = vec![vec![one(0), one(1)], vec![one(1), one(0)]];
        let comult = vec![SparseVec::unit(0, m), SparseVec::unit(3, m)];
        HopfData::new(HopfParts {
            m,
            labels: vec!["1".into(), "g".into()],
            mult,
            unit: one(0),
            comult,
            counit: vec![CycScalar::one(m), CycScalar::one(m)],
            antipode: vec![one(0), one(1)],
            grading: None,
        })
        .unwrap()
    }

    pub fn ground_field(m: u32) -> HopfData {
        HopfData::new(HopfParts {
            m,
            labels: vec!["1".into()],
            mult: vec![vec![SparseVec::unit(0, m)]],
            unit: SparseVec::unit(0, m),
            comult: vec![SparseVec::unit(0, m)],
            counit: vec![CycScalar::one(m)],
            antipode: vec![SparseVec::unit(0, m)],
            grading: Some(vec![0]),
        })
        .unwrap()
    }

    #[test]
    fn shape_errors_are_reported() {
        let mut parts = z2_group_algebra(12).into_parts();
        parts.counit.pop();
        assert!(matches!(HopfData::new(parts), Err(HopfError::Inconsistent(_))));
    }

    #[test]
    fn double_dual_recovers_structure_constants() {
        let a = z2_group_algebra(12);
        let dd = a.dual().dual();
        assert_eq!(dd.mult, a.mult);
        assert_eq!(dd.comult, a.comult);
        assert_eq!(dd.antipode, a.antipode);
        assert_eq!(dd.counit, a.counit);
        assert_eq!(dd.unit, a.unit);
    }
}
