//! The dihedral group D_m = ⟨g, h | g² = 1 = h^m, gh = h⁻¹g⟩, its function
//! algebra k^{D_m} and its group algebra kD_m.
//!
//! Group elements are written g^i h^j with i ∈ {0, 1}, j ∈ Z/m and are stored
//! at index i·m + j in both algebras. The function algebra has basis φ_{ij},
//! the dual basis of the group elements.

use crate::hopf::{HopfData, HopfParts};
use crate::linalg::SparseVec;
use crate::scalar::{CycScalar, GroupDatum};

/// g^flip h^rot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    pub flip: u8,
    pub rot: u32,
}

impl GroupDatum {
    /// Normalizes exponents: the first mod 2, the second mod m.
    pub fn elem(&self, flip: i64, rot: i64) -> GroupElem {
        GroupElem { flip: flip.rem_euclid(2) as u8, rot: self.modm(rot) as u32 }
    }

    pub fn elem_index(&self, x: GroupElem) -> usize {
        x.flip as usize * self.m() as usize + x.rot as usize
    }

    pub fn elem_at(&self, idx: usize) -> GroupElem {
        let m = self.m() as usize;
        GroupElem { flip: (idx / m) as u8, rot: (idx % m) as u32 }
    }

    pub fn order(&self) -> usize {
        2 * self.m() as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + '_ {
        (0..self.order()).map(|i| self.elem_at(i))
    }

    /// g^i h^j · g^k h^l = g^{i+k} h^{(−1)^k j + l}.
    pub fn compose(&self, x: GroupElem, y: GroupElem) -> GroupElem {
        let sign = if y.flip == 0 { 1 } else { -1 };
        self.elem(x.flip as i64 + y.flip as i64, sign * x.rot as i64 + y.rot as i64)
    }

    pub fn inverse(&self, x: GroupElem) -> GroupElem {
        let sign = if x.flip == 0 { -1 } else { 1 };
        self.elem(x.flip as i64, sign * x.rot as i64)
    }

    /// The value of the linear character α_idx at x.
    pub fn character_value(&self, idx: u8, x: GroupElem) -> i64 {
        let parity = match idx {
            0 => 0,
            1 => x.flip as u32,
            2 => x.rot,
            3 => x.flip as u32 + x.rot,
            _ => panic!("D_m has four linear characters, got index {idx}"),
        };
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// k^{D_m} together with its group datum.
#[derive(Clone, Debug)]
pub struct FunctionAlgebra {
    pub group: GroupDatum,
    pub hopf: HopfData,
}

impl FunctionAlgebra {
    pub fn new(group: GroupDatum) -> Self {
        let m = group.m();
        let n = group.order();
        let one = |i| SparseVec::unit(i, m);
        let mut mult = vec![vec![SparseVec::new(); n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            row[i] = one(i);
        }
        // Δ(φ_x) = Σ_{yz = x} φ_y ⊗ φ_z
        let mut comult = vec![SparseVec::new(); n];
        for y in group.elements() {
            for z in group.elements() {
                let x = group.elem_index(group.compose(y, z));
                comult[x].add_term(group.elem_index(y) * n + group.elem_index(z), &CycScalar::one(m));
            }
        }
        let antipode = group.elements().map(|x| one(group.elem_index(group.inverse(x)))).collect();
        let mut counit = vec![CycScalar::zero(m); n];
        counit[0] = CycScalar::one(m);
        let hopf = HopfData::new(HopfParts {
            m,
            labels: group.elements().map(|x| format!("phi_{}_{}", x.flip, x.rot)).collect(),
            mult,
            unit: (0..n).map(|i| (i, CycScalar::one(m))).collect(),
            comult,
            counit,
            antipode,
            grading: Some(vec![0; n]),
        })
        .expect("k^{D_m} structure constants are consistent");
        Self { group, hopf }
    }

    pub fn m(&self) -> u32 {
        self.group.m()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// φ_{ij}, indices normalized.
    pub fn phi(&self, i: i64, j: i64) -> SparseVec {
        SparseVec::unit(self.group.elem_index(self.group.elem(i, j)), self.m())
    }

    /// θ_{k,r} = Σ_l ω^{rl} φ_{k,l}.
    pub fn theta(&self, k: i64, r: i64) -> SparseVec {
        let g = &self.group;
        (0..g.m() as i64).map(|l| (g.elem_index(g.elem(k, l)), g.root_power(r * l))).collect()
    }

    /// α_idx = Σ α_idx(g^i h^j) φ_{ij}; α₀ is the unit.
    pub fn character(&self, idx: u8) -> SparseVec {
        let g = &self.group;
        g.elements().map(|x| (g.elem_index(x), g.int(g.character_value(idx, x)))).collect()
    }

    /// Evaluation of an element of k^{D_m} at a group element.
    pub fn eval_at(&self, f: &SparseVec, x: GroupElem) -> CycScalar {
        f.get(self.group.elem_index(x)).cloned().unwrap_or_else(|| self.group.zero())
    }
}

/// The group algebra kD_m with basis e_{ij} = g^i h^j.
pub fn group_algebra(group: GroupDatum) -> HopfData {
    let m = group.m();
    let n = group.order();
    let one = |i| SparseVec::unit(i, m);
    let mult = group
        .elements()
        .map(|x| group.elements().map(|y| one(group.elem_index(group.compose(x, y)))).collect())
        .collect();
    HopfData::new(HopfParts {
        m,
        labels: group.elements().map(|x| format!("e_{}_{}", x.flip, x.rot)).collect(),
        mult,
        unit: one(0),
        comult: (0..n).map(|i| one(i * n + i)).collect(),
        counit: vec![CycScalar::one(m); n],
        antipode: group.elements().map(|x| one(group.elem_index(group.inverse(x)))).collect(),
        grading: Some(vec![0; n]),
    })
    .expect("kD_m structure constants are consistent")
}
