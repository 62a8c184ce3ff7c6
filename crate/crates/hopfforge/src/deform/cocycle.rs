use std::collections::{BTreeSet, HashMap};

use super::DeformError;
use crate::hopf::{Bilinear, HopfData};
use crate::linalg::SparseVec;
use crate::nichols::{Bosonization, NicholsData};
use crate::scalar::CycScalar;

/// d_a⊗d_b + d_b⊗d_a on generator positions of B.
pub fn symmetric_form(b: &NicholsData, a: usize, c: usize) -> Bilinear {
    let one = CycScalar::one(b.m());
    let mut out = Bilinear::new();
    out.add_term(b.generator(a), b.generator(c), &one);
    out.add_term(b.generator(c), b.generator(a), &one);
    out
}

/// Symmetric forms on M⊗M, j ≤ k: a basis of the degree −2 ε-cocycles
/// modulo coboundaries for an exterior algebra.
pub fn hochschild_cocycle_basis(b: &NicholsData) -> Vec<Bilinear> {
    let d = b.module.dim();
    (0..d).flat_map(|j| (j..d).map(move |k| (j, k))).map(|(j, k)| symmetric_form(b, j, k)).collect()
}

/// Index u ↦ [(x, y, c)] with x·y containing c·e_u.
fn product_index(mult: &[Vec<SparseVec>]) -> HashMap<usize, Vec<(usize, usize, CycScalar)>> {
    let mut out: HashMap<usize, Vec<_>> = HashMap::new();
    for (x, row) in mult.iter().enumerate() {
        for (y, p) in row.iter().enumerate() {
            for (u, c) in p.iter() {
                out.entry(u).or_default().push((x, y, c.clone()));
            }
        }
    }
    out
}

/// f(xy, z) + f(x, y)ε(z) = ε(x)f(y, z) + f(x, yz) on all basis triples of B.
pub fn is_epsilon_cocycle(b: &NicholsData, f: &Bilinear) -> bool {
    let prod = product_index(&b.mult);
    let mut defect: HashMap<(usize, usize, usize), CycScalar> = HashMap::new();
    let mut add = |k: (usize, usize, usize), c: CycScalar| {
        let e = defect.entry(k).or_insert_with(|| CycScalar::zero(b.m()));
        *e += &c;
    };
    // The unit of B is monomial 0 and ε(x_S) = δ_{S,∅}.
    for ((u, z), c) in f.iter() {
        for (x, y, cp) in prod.get(&u).into_iter().flatten() {
            add((*x, *y, z), c * cp);
        }
        add((u, z, 0), c.clone());
        add((0, u, z), -c);
    }
    for ((x, u), c) in f.iter() {
        for (y, z, cp) in prod.get(&u).into_iter().flatten() {
            add((x, *y, *z), -&(c * cp));
        }
    }
    defect.values().all(CycScalar::is_zero)
}

/// A violation of η(f₁·x, f₂·y) = ε(f) η(x, y) at f = φ_z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceWitness {
    pub phi: usize,
    pub x: usize,
    pub y: usize,
    pub lhs: CycScalar,
    pub rhs: CycScalar,
}

/// Checks k^{D_m}-invariance of a form on B under the action
/// f·b = f(S(b₋₁)) b₀, where b₋₁ is the group degree of b.
pub fn is_h_invariant(b: &NicholsData, eta: &Bilinear) -> Result<(), InvarianceWitness> {
    let g = b.module.group;
    let base = crate::dihedral::FunctionAlgebra::new(g);
    let h = &base.hopf;
    let bd = b.dim();
    let degrees: BTreeSet<(u32, u32)> = eta.iter().map(|((x, y), _)| (b.grading[x], b.grading[y])).collect();
    let of_degree = |d: u32| (0..bd).filter(move |&x| b.grading[x] == d);
    for z in 0..h.dim() {
        for &(dx, dy) in &degrees {
            for x in of_degree(dx) {
                for y in of_degree(dy) {
                    let mut lhs = g.zero();
                    for (pq, c) in h.comult_basis(z).iter() {
                        let (p, q) = h.unpair(pq);
                        for (u, cu) in b.action[p][x].iter() {
                            for (v, cv) in b.action[q][y].iter() {
                                if let Some(e) = eta.get(u, v) {
                                    lhs += &(&(c * cu) * &(cv * e));
                                }
                            }
                        }
                    }
                    let rhs = h.counit_basis(z) * &eta.get(x, y).cloned().unwrap_or_else(|| g.zero());
                    if lhs != rhs {
                        return Err(InvarianceWitness { phi: z, x, y, lhs, rhs });
                    }
                }
            }
        }
    }
    Ok(())
}

/// η̃(b#φ_x, c#φ_y) = η(b, φ_x·c) ε(φ_y).
pub fn extend_to_a(boson: &Bosonization, eta: &Bilinear) -> Bilinear {
    let nb = &boson.nichols;
    let hd = boson.base.dim();
    let e = boson.base.hopf.counit_vec();
    let mut out = Bilinear::new();
    for x in 0..hd {
        for c in 0..nb.dim() {
            for (u, cu) in nb.action[x][c].iter() {
                for ((bi, ui), v) in eta.iter() {
                    if ui != u {
                        continue;
                    }
                    let w = cu * v;
                    for (y, ey) in e.iter().enumerate().filter(|(_, ey)| !ey.is_zero()) {
                        out.add_term(boson.smash(bi, x), boson.smash(c, y), &(&w * ey));
                    }
                }
            }
        }
    }
    out
}

pub fn convolution_exp(a: &HopfData, f: &Bilinear) -> Result<Bilinear, DeformError> {
    Ok(f.exp(a)?)
}

/// The degree −2 component of a form on a graded algebra.
pub fn infinitesimal_part(a: &HopfData, sigma: &Bilinear) -> Bilinear {
    let mut out = Bilinear::new();
    for ((x, y), c) in sigma.iter() {
        if a.degree(x) + a.degree(y) == 2 {
            out.add_term(x, y, c);
        }
    }
    out
}

/// p ↦ [(q, k, c)] with Δ(e_k) containing c·e_p⊗e_q.
pub(crate) fn first_factor_index(a: &HopfData) -> Vec<Vec<(usize, usize, CycScalar)>> {
    let mut out = vec![Vec::new(); a.dim()];
    for (&(p, q), ks) in a.dual_index() {
        for (k, c) in ks {
            out[p].push((q, *k, c.clone()));
        }
    }
    out
}

pub(crate) fn rows_by(f: &Bilinear, first: bool) -> HashMap<usize, Vec<(usize, CycScalar)>> {
    let mut out: HashMap<usize, Vec<_>> = HashMap::new();
    for ((x, y), c) in f.iter() {
        let (key, other) = if first { (x, y) } else { (y, x) };
        out.entry(key).or_default().push((other, c.clone()));
    }
    out
}

/// Normalization σ(1, x) = ε(x) = σ(x, 1) and the cocycle identity
/// σ(b₁, c₁)σ(a, b₂c₂) = σ(a₁, b₁)σ(a₂b₂, c) on all basis triples.
pub fn check_cocycle_identity(a: &HopfData, sigma: &Bilinear) -> Result<(), DeformError> {
    let fail = |s: String| Err(DeformError::NotACocycle(s));
    let n = a.dim();
    let mut left_unit = vec![a.zero(); n];
    let mut right_unit = vec![a.zero(); n];
    for (u, cu) in a.one().iter() {
        for ((x, y), c) in sigma.iter() {
            if x == u {
                left_unit[y] += &(cu * c);
            }
            if y == u {
                right_unit[x] += &(cu * c);
            }
        }
    }
    if left_unit != a.counit_vec() || right_unit != a.counit_vec() {
        return fail("σ is not normalized".into());
    }
    let fi = first_factor_index(a);
    let by_first = rows_by(sigma, true);
    let by_second = rows_by(sigma, false);
    let empty = Vec::new();
    type Tri = HashMap<(u32, u32, u32), CycScalar>;
    let key = |x: usize, y: usize, z: usize| (x as u32, y as u32, z as u32);
    let mut lhs: Tri = HashMap::new();
    let mut rhs: Tri = HashMap::new();
    for ((p, q), s) in sigma.iter() {
        for (p2, x, cx) in &fi[p] {
            let sx = s * cx;
            for (q2, y, cy) in &fi[q] {
                let prod = a.mult_basis(*p2, *q2);
                if prod.is_empty() {
                    continue;
                }
                let sxy = &sx * cy;
                for (u, cu) in prod.iter() {
                    let w = &sxy * cu;
                    // Left side: (p, q) = (b₁, c₁), outer argument a.
                    for (z, t) in by_second.get(&u).unwrap_or(&empty) {
                        *lhs.entry(key(*z, *x, *y)).or_insert_with(|| a.zero()) += &(&w * t);
                    }
                    // Right side: (p, q) = (a₁, b₁), outer argument c.
                    for (z, t) in by_first.get(&u).unwrap_or(&empty) {
                        *rhs.entry(key(*x, *y, *z)).or_insert_with(|| a.zero()) += &(&w * t);
                    }
                }
            }
        }
    }
    lhs.retain(|_, v| !v.is_zero());
    rhs.retain(|_, v| !v.is_zero());
    if lhs != rhs {
        let bad = lhs.keys().chain(rhs.keys()).find(|k| lhs.get(k) != rhs.get(k)).copied();
        return fail(format!("cocycle identity fails at basis triple {bad:?}"));
    }
    Ok(())
}

/// The A-valued 2-cochain ∂f(x, y) = x₁y₁ f(x₂, y₂) − f(x₁, y₁) x₂y₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingMap {
    pub values: HashMap<(usize, usize), SparseVec>,
}

impl ConnectingMap {
    pub fn at(&self, x: usize, y: usize) -> SparseVec {
        self.values.get(&(x, y)).cloned().unwrap_or_default()
    }

    fn at_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                if let Some(v) = self.values.get(&(i, j)) {
                    out.add_scaled(v, &(ci * cj));
                }
            }
        }
        out
    }

    /// a·F(b, c) − F(ab, c) + F(a, bc) − F(a, b)·c = 0 on all basis triples.
    pub fn is_hochschild_cocycle(&self, a: &HopfData) -> bool {
        let n = a.dim();
        (0..n).all(|x| {
            let ex = a.basis(x);
            (0..n).all(|y| {
                let xy = a.mult_basis(x, y);
                (0..n).all(|z| {
                    let ez = a.basis(z);
                    let mut d = a.mul(&ex, &self.at(y, z));
                    d.add_scaled(&self.at_vec(xy, &ez), &CycScalar::from_int(a.m(), -1));
                    d.add(&self.at_vec(&ex, a.mult_basis(y, z)));
                    d.add_scaled(&a.mul(&self.at(x, y), &ez), &CycScalar::from_int(a.m(), -1));
                    d.is_zero()
                })
            })
        })
    }
}

pub fn connecting_map(a: &HopfData, f: &Bilinear) -> ConnectingMap {
    let n = a.dim();
    let firsts: BTreeSet<usize> = f.iter().map(|((x, _), _)| x).collect();
    let seconds: BTreeSet<usize> = f.iter().map(|((_, y), _)| y).collect();
    // Coproduct terms whose tensor factor `slot` can meet the support of f.
    let filtered = |x: usize, keep: &BTreeSet<usize>, slot: usize| -> Vec<(usize, usize, CycScalar)> {
        a.comult_basis(x)
            .iter()
            .map(|(pq, c)| (a.unpair(pq), c))
            .filter(|((p, q), _)| keep.contains(if slot == 0 { p } else { q }))
            .map(|((p, q), c)| (p, q, c.clone()))
            .collect()
    };
    let mut values = HashMap::new();
    let right_first: Vec<_> = (0..n).map(|x| filtered(x, &firsts, 1)).collect();
    let right_second: Vec<_> = (0..n).map(|y| filtered(y, &seconds, 1)).collect();
    let left_first: Vec<_> = (0..n).map(|x| filtered(x, &firsts, 0)).collect();
    let left_second: Vec<_> = (0..n).map(|y| filtered(y, &seconds, 0)).collect();
    for x in 0..n {
        for y in 0..n {
            let mut out = SparseVec::new();
            for (x1, x2, cx) in &right_first[x] {
                for (y1, y2, cy) in &right_second[y] {
                    if let Some(v) = f.get(*x2, *y2) {
                        out.add_scaled(a.mult_basis(*x1, *y1), &(&(cx * cy) * v));
                    }
                }
            }
            for (x1, x2, cx) in &left_first[x] {
                for (y1, y2, cy) in &left_second[y] {
                    if let Some(v) = f.get(*x1, *y1) {
                        out.add_scaled(a.mult_basis(*x2, *y2), &-&(&(cx * cy) * v));
                    }
                }
            }
            if !out.is_zero() {
                values.insert((x, y), out);
            }
        }
    }
    ConnectingMap { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nichols::{bosonize, build_nichols};
    use crate::scalar::GroupDatum;
    use crate::yd::{IndexDatumI, IndexDatumK, IndexDatumL, YDModule};

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    fn nichols_i(pairs: Vec<(u32, u32)>) -> NicholsData {
        let g = g12();
        build_nichols(&YDModule::from_pairs(g, &IndexDatumI::validate(&g, pairs).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn cocycle_basis_is_symmetric_and_closed() {
        let b = nichols_i(vec![(2, 3), (2, 9)]);
        let basis = hochschild_cocycle_basis(&b);
        assert_eq!(basis.len(), 10);
        for f in &basis {
            assert!(is_epsilon_cocycle(&b, f));
        }
        let mut not_cocycle = Bilinear::new();
        not_cocycle.add_term(0, 1, &CycScalar::one(12));
        assert!(!is_epsilon_cocycle(&b, &not_cocycle));
    }

    #[test]
    fn invariance_verdicts_on_pairs() {
        // Generators: y1, y2 of (2,3), y1, y2 of (2,9), y1, y2 of (3,6) in a separate datum.
        let b = nichols_i(vec![(2, 3), (2, 9)]);
        for r in 0..2 {
            for (a, c) in [(r, r), (r, 2 + r)] {
                assert!(is_h_invariant(&b, &symmetric_form(&b, a, c)).is_err(), "η_rr at {a},{c}");
            }
        }
        for (a, c) in [(0, 1), (0, 3), (2, 1), (2, 3)] {
            assert!(is_h_invariant(&b, &symmetric_form(&b, a, c)).is_ok(), "η_12 at {a},{c}");
        }
        let b = nichols_i(vec![(1, 6), (3, 6)]);
        let w = is_h_invariant(&b, &symmetric_form(&b, 0, 3)).unwrap_err();
        assert_ne!(w.lhs, w.rhs);
        assert!(is_h_invariant(&b, &symmetric_form(&b, 0, 1)).is_ok());
    }

    #[test]
    fn invariance_verdicts_on_ells_and_mixed() {
        let g = g12();
        let b = build_nichols(&YDModule::from_ells(g, &IndexDatumL::validate(&g, vec![3, 3]).unwrap()).unwrap()).unwrap();
        for f in hochschild_cocycle_basis(&b) {
            assert!(is_h_invariant(&b, &f).is_ok());
        }
        let k = IndexDatumK::validate(&g, vec![(2, 3)], vec![3]).unwrap();
        let b = build_nichols(&YDModule::from_mixed(g, &k).unwrap()).unwrap();
        for y in 0..2 {
            for x in 2..4 {
                assert!(is_h_invariant(&b, &symmetric_form(&b, y, x)).is_err());
            }
        }
        assert!(is_h_invariant(&b, &symmetric_form(&b, 0, 1)).is_ok());
        assert!(is_h_invariant(&b, &symmetric_form(&b, 2, 2)).is_ok());
    }

    #[test]
    fn exponential_inverse_and_infinitesimal_part() {
        let b = nichols_i(vec![(2, 3)]);
        let boson = bosonize(&b);
        let a = &boson.hopf;
        let eta = symmetric_form(&b, 0, 1).scaled(&CycScalar::from_int(12, 5));
        let eta_a = extend_to_a(&boson, &eta);
        // η̃(y1#φ_x, y2#φ_e) = η(y1, φ_x·y2), nonzero only when φ_x fixes y2.
        assert!(eta_a.iter().all(|((_, y), _)| y % 24 == 0));
        let sigma = convolution_exp(a, &eta_a).unwrap();
        let sigma_inv = convolution_exp(a, &eta_a.scaled(&CycScalar::from_int(12, -1))).unwrap();
        assert_eq!(sigma.convolve(&sigma_inv, a), Bilinear::identity(a));
        assert_eq!(sigma_inv, sigma.inverse(a).unwrap());
        assert_eq!(infinitesimal_part(a, &sigma), eta_a);
        check_cocycle_identity(a, &sigma).unwrap();
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let boson = bosonize(&nichols_i(vec![(2, 3)]));
        let a = &boson.hopf;
        let mut f = Bilinear::identity(a);
        f.add_term(24, 24, &CycScalar::one(12));
        assert!(matches!(check_cocycle_identity(a, &f), Err(DeformError::NotACocycle(_))));
    }

    #[test]
    fn connecting_map_of_zero_and_on_generators() {
        let b = nichols_i(vec![(2, 3)]);
        let boson = bosonize(&b);
        let a = &boson.hopf;
        assert!(connecting_map(a, &Bilinear::new()).values.is_empty());
        let eta = symmetric_form(&b, 0, 1);
        let eta_a = extend_to_a(&boson, &eta);
        let dc = connecting_map(a, &eta_a);
        assert!(dc.is_hochschild_cocycle(a));
        // On u = y1#1, v = y2#1: u₋₁v₋₁ η(u₀, v₀) − η(u, v), read off the coactions.
        let (u, v) = (boson.lift(&SparseVec::unit(1, 12)), boson.lift(&SparseVec::unit(2, 12)));
        let mut value = SparseVec::new();
        for (i, ci) in u.iter() {
            for (j, cj) in v.iter() {
                value.add_scaled(&dc.at(i, j), &(ci * cj));
            }
        }
        let bd = b.dim();
        let mut expected = SparseVec::new();
        for (xu, cu) in b.coaction[1].iter() {
            for (xv, cv) in b.coaction[2].iter() {
                if let Some(e) = eta.get(xu % bd, xv % bd) {
                    let h = boson.base.hopf.mul(&SparseVec::unit(xu / bd, 12), &SparseVec::unit(xv / bd, 12));
                    expected.add_scaled(&boson.include(&h), &(&(cu * cv) * e));
                }
            }
        }
        expected.add_scaled(a.one(), &-eta.get(1, 2).unwrap());
        assert_eq!(value, expected);
    }
}
