//! Group-side Yetter–Drinfeld modules over kD_m (D_m-graded D_m-modules) and
//! their transport to k^{D_m}:
//! φ_x · v = φ_x(z⁻¹) v for v of degree z, and λ(v) = Σ_y φ_{y⁻¹} ⊗ y·v.

use super::{YDModule, YdError};
use crate::dihedral::GroupElem;
use crate::linalg::{Mat, SparseVec};
use crate::scalar::GroupDatum;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSideModule {
    pub group: GroupDatum,
    pub labels: Vec<String>,
    /// D_m-degree of each basis vector.
    pub degrees: Vec<GroupElem>,
    /// Action of the reflection g.
    pub reflection: Mat,
    /// Action of the rotation h.
    pub rotation: Mat,
    /// Nichols degree of each basis vector.
    pub grading: Vec<u32>,
}

impl GroupSideModule {
    /// M(𝒪_{h^i}, χ^k): basis e⊗v, g⊗v over the cosets of ⟨h⟩.
    pub fn rotation_class(group: GroupDatum, i: u32, k: u32) -> Self {
        let m = group.m();
        let w = |e: i64| group.root_power(e);
        let (z, o) = (group.zero(), group.one());
        Self {
            group,
            labels: vec![format!("y1_({i},{k})"), format!("y2_({i},{k})")],
            degrees: vec![group.elem(0, i as i64), group.elem(0, -(i as i64))],
            reflection: Mat::from_rows(m, 2, vec![vec![z.clone(), o.clone()], vec![o, z.clone()]]).expect("2x2"),
            rotation: Mat::from_rows(m, 2, vec![vec![w(k as i64), z.clone()], vec![z, w(-(k as i64))]]).expect("2x2"),
            grading: vec![1, 1],
        }
    }

    /// M(𝒪_{h^n}, ρ_ℓ).
    pub fn central_class(group: GroupDatum, ell: u32) -> Self {
        let mut out = Self::rotation_class(group, group.n(), ell);
        out.labels = vec![format!("x1_({ell})"), format!("x2_({ell})")];
        out
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn rho(&self, x: GroupElem) -> Mat {
        let m = self.group.m();
        let mut out = Mat::identity(m, self.dim());
        if x.flip == 1 {
            out = self.reflection.clone();
        }
        for _ in 0..x.rot {
            out = out.mul(&self.rotation).expect("square");
        }
        out
    }

    fn validate(&self) -> Result<(), YdError> {
        let bad = |s: &str| Err(YdError::InvalidYDInput(s.to_string()));
        let d = self.dim();
        if self.degrees.len() != d || self.grading.len() != d {
            return bad("degree lists have the wrong length");
        }
        for mat in [&self.reflection, &self.rotation] {
            if mat.rows() != d || mat.cols() != d {
                return bad("action matrix has the wrong shape");
            }
        }
        let g = &self.group;
        let sq = |a: &Mat| a.mul(a).expect("square");
        let h_m = self.rho(g.elem(0, g.m() as i64 - 1)).mul(&self.rotation).expect("square");
        let gh = self.reflection.mul(&self.rotation).expect("square");
        if !sq(&self.reflection).is_identity() || !h_m.is_identity() || !sq(&gh).is_identity() {
            return bad("matrices do not satisfy the dihedral relations");
        }
        for x in g.elements() {
            let r = self.rho(x);
            for v in 0..d {
                let want = g.compose(g.compose(x, self.degrees[v]), g.inverse(x));
                if (0..d).any(|w| !r.get(w, v).is_zero() && self.degrees[w] != want) {
                    return bad("action does not respect the grading");
                }
            }
        }
        Ok(())
    }
}

pub fn dual_transport(src: &GroupSideModule) -> Result<YDModule, YdError> {
    src.validate()?;
    let g = src.group;
    let (m, d) = (g.m(), src.dim());
    let mut action = vec![vec![SparseVec::new(); d]; g.order()];
    for (v, &z) in src.degrees.iter().enumerate() {
        action[g.elem_index(g.inverse(z))][v] = SparseVec::unit(v, m);
    }
    let mut coaction = vec![SparseVec::new(); d];
    for y in g.elements() {
        let r = src.rho(y);
        let x = g.elem_index(g.inverse(y));
        for (v, lam) in coaction.iter_mut().enumerate() {
            for w in 0..d {
                lam.add_term(x * d + w, r.get(w, v));
            }
        }
    }
    Ok(YDModule { group: g, labels: src.labels.clone(), action, coaction, degrees: src.grading.clone() })
}

/// Inverse of [`dual_transport`] for modules whose basis is homogeneous.
pub fn group_side(module: &YDModule) -> Result<GroupSideModule, YdError> {
    let g = module.group;
    let d = module.dim();
    let mut degrees = Vec::with_capacity(d);
    for v in 0..d {
        let support: Vec<usize> = (0..g.order()).filter(|&x| !module.action[x][v].is_zero()).collect();
        let [x] = support.as_slice() else {
            return Err(YdError::InvalidYDInput(format!("{} is not homogeneous", module.labels[v])));
        };
        degrees.push(g.inverse(g.elem_at(*x)));
    }
    let matrix_of = |y: GroupElem| {
        let x = g.elem_index(g.inverse(y));
        let mut mat = Mat::zeros(g.m(), d, d);
        for v in 0..d {
            for (xw, c) in module.coaction[v].iter() {
                if xw / d == x {
                    mat.set(xw % d, v, c.clone());
                }
            }
        }
        mat
    };
    let out = GroupSideModule {
        group: g,
        labels: module.labels.clone(),
        degrees,
        reflection: matrix_of(g.elem(1, 0)),
        rotation: matrix_of(g.elem(0, 1)),
        grading: module.degrees.clone(),
    };
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::FunctionAlgebra;
    use crate::yd::enumerate_j;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn group_side_reproduces_dual_formulas() {
        let g = g12();
        for (i, k) in enumerate_j(&g) {
            let t = dual_transport(&GroupSideModule::rotation_class(g, i, k)).unwrap();
            assert_eq!(t, YDModule::m_ik(g, i, k).unwrap());
            assert_eq!(group_side(&t).unwrap(), GroupSideModule::rotation_class(g, i, k));
        }
        for l in [1, 3, 5] {
            let t = dual_transport(&GroupSideModule::central_class(g, l)).unwrap();
            assert_eq!(t, YDModule::m_ell(g, l).unwrap());
        }
    }

    #[test]
    fn trivial_module() {
        let g = g12();
        let src = GroupSideModule {
            group: g,
            labels: vec!["v".into()],
            degrees: vec![g.elem(0, 0)],
            reflection: Mat::identity(12, 1),
            rotation: Mat::identity(12, 1),
            grading: vec![0],
        };
        let t = dual_transport(&src).unwrap();
        let f = FunctionAlgebra::new(g);
        let v = SparseVec::unit(0, 12);
        for x in 0..24 {
            assert_eq!(t.act(&f.hopf.basis(x), &v), v.scaled(f.hopf.counit_basis(x)));
        }
        assert_eq!(t.coact(&v), f.hopf.tensor(f.hopf.one(), &v).iter().map(|(i, c)| (i / 24, c.clone())).collect());
    }

    #[test]
    fn inconsistent_input_is_rejected() {
        let g = g12();
        let mut src = GroupSideModule::rotation_class(g, 2, 3);
        src.degrees[1] = g.elem(0, 2);
        assert!(matches!(dual_transport(&src), Err(YdError::InvalidYDInput(_))));
        let mut src = GroupSideModule::rotation_class(g, 2, 3);
        src.reflection = Mat::identity(12, 2);
        assert!(matches!(dual_transport(&src), Err(YdError::InvalidYDInput(_))));
    }

    /// M_{(i,n)} for odd i in the basis a₁ + a₂, a₁ − a₂.
    #[test]
    fn homogeneous_rebasing_fixture() {
        let g = g12();
        let f = FunctionAlgebra::new(g);
        for i in [1u32, 3, 5] {
            let mm = dual_transport(&GroupSideModule::rotation_class(g, i, g.n())).unwrap();
            let one = g.one();
            let x = SparseVec::from_terms([(0, one.clone()), (1, one.clone())]);
            let y = SparseVec::from_terms([(0, one.clone()), (1, -&one)]);
            let flat = |h: &SparseVec, v: &SparseVec| -> SparseVec {
                let mut out = SparseVec::new();
                for (a, c) in h.iter() {
                    for (b, d) in v.iter() {
                        out.add_term(a * 2 + b, &(c * d));
                    }
                }
                out
            };
            assert_eq!(mm.coact(&x), flat(&f.character(2), &x));
            assert_eq!(mm.coact(&y), flat(&f.character(3), &y));
            for v in [&x, &y] {
                assert_eq!(mm.act(&f.character(2), v), v.neg());
                assert_eq!(mm.act(&f.character(3), v), v.neg());
            }
        }
    }
}
