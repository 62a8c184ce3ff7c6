//! Linear and bilinear functionals under convolution.

use std::collections::BTreeMap;

use super::{HopfData, HopfError};
use crate::linalg::{solve, Mat, SparseVec};
use crate::scalar::CycScalar;

/// A linear form A → k, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional(pub Vec<CycScalar>);

impl Functional {
    pub fn counit(a: &HopfData) -> Self {
        Self(a.counit_vec().to_vec())
    }

    pub fn eval(&self, v: &SparseVec) -> CycScalar {
        let m = self.0.first().map_or(12, CycScalar::m);
        v.dot_dense(&self.0).unwrap_or_else(|| CycScalar::zero(m))
    }

    /// (f * g)(a) = f(a₁) g(a₂).
    pub fn convolve(&self, other: &Functional, a: &HopfData) -> Functional {
        let vals = (0..a.dim())
            .map(|k| {
                let mut acc = a.zero();
                for (pq, c) in a.comult_basis(k).iter() {
                    let (p, q) = a.unpair(pq);
                    acc += &(&(c * &self.0[p]) * &other.0[q]);
                }
                acc
            })
            .collect();
        Functional(vals)
    }

    /// Convolution inverse, by solving f * g = ε.
    pub fn inverse(&self, a: &HopfData) -> Result<Functional, HopfError> {
        let n = a.dim();
        let mut mat = Mat::zeros(a.m(), n, n);
        for k in 0..n {
            for (pq, c) in a.comult_basis(k).iter() {
                let (p, q) = a.unpair(pq);
                let v = mat.get(k, q) + &(c * &self.0[p]);
                mat.set(k, q, v);
            }
        }
        let g = solve(&mat, a.counit_vec()).map_err(|_| HopfError::NotInvertible)?;
        let g = Functional(g);
        if g.convolve(self, a) != Functional::counit(a) {
            return Err(HopfError::NotInvertible);
        }
        Ok(g)
    }
}

/// A bilinear form A × A → k, stored sparsely on basis pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bilinear(pub BTreeMap<(usize, usize), CycScalar>);

impl Bilinear {
    pub fn new() -> Self {
        Self::default()
    }

    /// ε ⊗ ε, the convolution identity.
    pub fn identity(a: &HopfData) -> Self {
        let supp: Vec<(usize, &CycScalar)> = a.counit_vec().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = Bilinear::new();
        for &(i, ci) in &supp {
            for &(j, cj) in &supp {
                out.0.insert((i, j), ci * cj);
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&CycScalar> {
        self.0.get(&(i, j))
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry((i, j)).or_insert_with(|| CycScalar::zero(c.m()));
        *e += c;
        if e.is_zero() {
            self.0.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &CycScalar)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> Option<CycScalar> {
        let mut acc: Option<CycScalar> = None;
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if let Some(v) = self.get(i, j) {
                    let t = &(a * b) * v;
                    acc = Some(match acc {
                        Some(s) => &s + &t,
                        None => t,
                    });
                }
            }
        }
        acc
    }

    pub fn eval_or_zero(&self, x: &SparseVec, y: &SparseVec, m: u32) -> CycScalar {
        self.eval(x, y).unwrap_or_else(|| CycScalar::zero(m))
    }

    pub fn scaled(&self, c: &CycScalar) -> Bilinear {
        let mut out = Bilinear::new();
        for (k, v) in self.iter() {
            out.add_term(k.0, k.1, &(v * c));
        }
        out
    }

    pub fn add(&mut self, other: &Bilinear) {
        for (k, v) in other.iter() {
            self.add_term(k.0, k.1, v);
        }
    }

    pub fn sub(&self, other: &Bilinear) -> Bilinear {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.0, k.1, &-v);
        }
        out
    }

    /// (f * g)(b, c) = f(b₁, c₁) g(b₂, c₂).
    pub fn convolve(&self, other: &Bilinear, a: &HopfData) -> Bilinear {
        let dual = a.dual_index();
        let mut out = Bilinear::new();
        for (&(p, r), fv) in &self.0 {
            for (&(q, s), gv) in &other.0 {
                let (Some(bs), Some(cs)) = (dual.get(&(p, q)), dual.get(&(r, s))) else { continue };
                let w = fv * gv;
                for (b, cb) in bs {
                    let wb = &w * cb;
                    for (c, cc) in cs {
                        out.add_term(*b, *c, &(&wb * cc));
                    }
                }
            }
        }
        out
    }

    /// Convolution exponential of a convolution-nilpotent form.
    pub fn exp(&self, a: &HopfData) -> Result<Bilinear, HopfError> {
        let mut total = Bilinear::identity(a);
        let mut term = Bilinear::identity(a);
        for k in 1..=a.dim() + 1 {
            term = term.convolve(self, a).scaled(&CycScalar::from_ratio(a.m(), 1, k as i64).expect("k > 0"));
            if term.is_zero() {
                return Ok(total);
            }
            total.add(&term);
        }
        Err(HopfError::NotInvertible)
    }

    /// Convolution inverse when `self − ε⊗ε` is convolution nilpotent.
    pub fn inverse(&self, a: &HopfData) -> Result<Bilinear, HopfError> {
        let id = Bilinear::identity(a);
        let u = id.sub(self);
        let mut total = id.clone();
        let mut term = id;
        for _ in 0..=a.dim() + 1 {
            term = term.convolve(&u, a);
            if term.is_zero() {
                return Ok(total);
            }
            total.add(&term);
        }
        Err(HopfError::NotInvertible)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::z2_group_algebra;
    use super::*;

    #[test]
    fn functional_inverse_on_group_algebra() {
        let a = z2_group_algebra(12);
        let f = Functional(vec![CycScalar::one(12), CycScalar::from_int(12, -1)]);
        let g = f.inverse(&a).unwrap();
        assert_eq!(g, f);
        let zero = Functional(vec![CycScalar::zero(12); 2]);
        assert_eq!(zero.inverse(&a), Err(HopfError::NotInvertible));
    }

    #[test]
    fn identity_is_neutral() {
        let a = z2_group_algebra(12).dual();
        let mut f = Bilinear::identity(&a);
        f.add_term(1, 1, &CycScalar::from_int(12, 3));
        let id = Bilinear::identity(&a);
        assert_eq!(f.convolve(&id, &a), f);
        assert_eq!(id.convolve(&f, &a), f);
    }
}
