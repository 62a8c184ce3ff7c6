use std::collections::{BTreeSet, HashMap};

use super::cocycle::{check_cocycle_identity, extend_to_a, is_epsilon_cocycle, is_h_invariant, rows_by};
use super::DeformError;
use crate::hopf::{Bilinear, HopfData, HopfParts};
use crate::linalg::SparseVec;
use crate::nichols::Bosonization;
use crate::scalar::CycScalar;

/// A cocycle deformation A_σ together with the forms that produced it.
#[derive(Debug, Clone)]
pub struct DeformedAlgebra {
    pub hopf: HopfData,
    /// η̃ on A.
    pub eta: Bilinear,
    pub sigma: Bilinear,
    pub sigma_inv: Bilinear,
}

/// Deforms B#k^{D_m} by σ = e^{η̃} after checking that η is an invariant
/// ε-cocycle on B and that σ satisfies the cocycle identity.
pub fn deform(boson: &Bosonization, eta: &Bilinear) -> Result<DeformedAlgebra, DeformError> {
    if !is_epsilon_cocycle(&boson.nichols, eta) {
        return Err(DeformError::NotACocycle("η is not an ε-cocycle on B".into()));
    }
    if let Err(w) = is_h_invariant(&boson.nichols, eta) {
        return Err(DeformError::NotACocycle(format!(
            "η is not invariant: at φ index {} and basis pair ({}, {}) got {} instead of {}",
            w.phi, w.x, w.y, w.lhs, w.rhs
        )));
    }
    let a = &boson.hopf;
    let eta_a = extend_to_a(boson, eta);
    let sigma = eta_a.exp(a)?;
    let sigma_inv = eta_a.scaled(&CycScalar::from_int(a.m(), -1)).exp(a)?;
    if sigma.convolve(&sigma_inv, a) != Bilinear::identity(a) {
        return Err(DeformError::NotACocycle("e^{-η̃} is not inverse to e^{η̃}".into()));
    }
    check_cocycle_identity(a, &sigma)?;
    let hopf = twist(a, &sigma, &sigma_inv)?;
    Ok(DeformedAlgebra { hopf, eta: eta_a, sigma, sigma_inv })
}

/// A_σ: m_σ(a, b) = σ(a₁, b₁) a₂b₂ σ⁻¹(a₃, b₃) and
/// S_σ(a) = U(a₁) S(a₂) V(a₃) with U(a) = σ(a₁, S a₂), V(a) = σ⁻¹(S a₁, a₂).
/// The coalgebra is unchanged. The result carries no grading.
pub fn twist(a: &HopfData, sigma: &Bilinear, sigma_inv: &Bilinear) -> Result<HopfData, DeformError> {
    let n = a.dim();
    let s_rows = rows_by(sigma, true);
    let t_rows = rows_by(sigma_inv, true);
    let s_firsts: BTreeSet<usize> = s_rows.keys().copied().collect();
    let t_firsts: BTreeSet<usize> = t_rows.keys().copied().collect();
    let s_seconds: BTreeSet<usize> = sigma.iter().map(|((_, y), _)| y).collect();
    let t_seconds: BTreeSet<usize> = sigma_inv.iter().map(|((_, y), _)| y).collect();

    // Δ²(x) restricted to outer factors that can meet the forms.
    let delta2 = |x: usize, outer: (&BTreeSet<usize>, &BTreeSet<usize>)| -> Vec<(usize, usize, usize, CycScalar)> {
        let mut out = Vec::new();
        for (pr, c) in a.comult_basis(x).iter() {
            let (p, r) = a.unpair(pr);
            if !outer.0.contains(&p) {
                continue;
            }
            for (qs, c2) in a.comult_basis(r).iter() {
                let (q, s) = a.unpair(qs);
                if outer.1.contains(&s) {
                    out.push((p, q, s, c * c2));
                }
            }
        }
        out
    };

    type Grouped = HashMap<(usize, usize), Vec<(usize, CycScalar)>>;
    let right: Vec<Grouped> = (0..n)
        .map(|y| {
            let mut g: Grouped = HashMap::new();
            for (p, q, s, c) in delta2(y, (&s_seconds, &t_seconds)) {
                g.entry((p, s)).or_default().push((q, c));
            }
            g
        })
        .collect();
    let empty = Vec::new();
    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for (x, row) in mult.iter_mut().enumerate() {
        let left = delta2(x, (&s_firsts, &t_firsts));
        for (y, out) in row.iter_mut().enumerate() {
            for (x1, x2, x3, cx) in &left {
                for (y1, s) in s_rows.get(x1).unwrap_or(&empty) {
                    let cs = cx * s;
                    for (y3, t) in t_rows.get(x3).unwrap_or(&empty) {
                        let Some(mids) = right[y].get(&(*y1, *y3)) else { continue };
                        let cst = &cs * t;
                        for (y2, cy) in mids {
                            out.add_scaled(a.mult_basis(*x2, *y2), &(&cst * cy));
                        }
                    }
                }
            }
        }
    }

    let eval = |f: &Bilinear, x: usize, v: &SparseVec, left: bool| -> CycScalar {
        let mut acc = a.zero();
        for (i, c) in v.iter() {
            let val = if left { f.get(x, i) } else { f.get(i, x) };
            if let Some(val) = val {
                acc += &(c * val);
            }
        }
        acc
    };
    let mut u = vec![a.zero(); n];
    let mut v = vec![a.zero(); n];
    for k in 0..n {
        for (pq, c) in a.comult_basis(k).iter() {
            let (p, q) = a.unpair(pq);
            u[k] += &(c * &eval(sigma, p, a.antipode_basis(q), true));
            v[k] += &(c * &eval(sigma_inv, q, a.antipode_basis(p), false));
        }
    }
    let nz_u: BTreeSet<usize> = (0..n).filter(|&k| !u[k].is_zero()).collect();
    let nz_v: BTreeSet<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
    let antipode = (0..n)
        .map(|k| {
            let mut out = SparseVec::new();
            for (p, q, s, c) in delta2(k, (&nz_u, &nz_v)) {
                out.add_scaled(a.antipode_basis(q), &(&(&c * &u[p]) * &v[s]));
            }
            out
        })
        .collect();

    let parts = a.clone().into_parts();
    let hopf = HopfData::new(HopfParts { mult, antipode, grading: None, ..parts })?;
    Ok(match a.generator_hint() {
        Some(g) => hopf.with_generators(g.to_vec()),
        None => hopf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::{Family, LiftingData};
    use crate::hopf::verify_hopf;
    use crate::nichols::{bosonize, build_nichols};
    use crate::scalar::GroupDatum;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    fn boson_for(data: &LiftingData) -> Bosonization {
        bosonize(&build_nichols(&data.module().unwrap()).unwrap())
    }

    #[test]
    fn trivial_cocycle_changes_nothing() {
        let data = LiftingData::zero(Family::A, g12(), vec![(2, 3)], vec![]);
        let boson = boson_for(&data);
        let a = &boson.hopf;
        let id = Bilinear::identity(a);
        let t = twist(a, &id, &id).unwrap();
        for x in 0..a.dim() {
            assert_eq!(t.antipode_basis(x), a.antipode_basis(x));
            for y in 0..a.dim() {
                assert_eq!(t.mult_basis(x, y), a.mult_basis(x, y));
            }
        }
    }

    #[test]
    fn deformed_anticommutator_matches_theta_formula() {
        let g = g12();
        let mut data = LiftingData::zero(Family::A, g, vec![(2, 3), (2, 9)], vec![]);
        let (z1, z2) = (CycScalar::from_int(12, 3), &g.int(-1) + &g.root_power(1));
        data.zeta.insert((2, 3, 9), z1.clone());
        data.zeta.insert((2, 9, 3), z2.clone());
        let boson = boson_for(&data);
        let d = deform(&boson, &data.cocycle()).unwrap();
        let a = &d.hopf;
        let gen = |i: usize| boson.lift(&SparseVec::unit(1 + i, 12));
        // y₁^{(2,3)} y₂^{(2,9)} + y₂^{(2,9)} y₁^{(2,3)} = ζ_{2,3,9}(1 − θ_{0,6}) − ζ_{2,9,3}θ_{1,−6}.
        let mut lhs = a.mul(&gen(0), &gen(3));
        lhs.add(&a.mul(&gen(3), &gen(0)));
        let f = &boson.base;
        let mut rhs = f.hopf.one().scaled(&z1);
        rhs.add_scaled(&f.theta(0, 6), &-&z1);
        rhs.add_scaled(&f.theta(1, -6), &-&z2);
        assert_eq!(lhs, boson.include(&rhs));
        for i in 0..4 {
            assert!(a.mul(&gen(i), &gen(i)).is_zero(), "square of generator {i}");
        }
        assert_eq!(a.comult_basis(5), boson.hopf.comult_basis(5));
    }

    #[test]
    fn random_data_deform_to_hopf_algebras() {
        let g = g12();
        for (family, pairs, ells) in [(Family::A, vec![(2, 3)], vec![]), (Family::B, vec![], vec![5]), (Family::C, vec![(2, 3)], vec![3])] {
            for seed in 0..5 {
                let data = LiftingData::random(family, g, pairs.clone(), ells.clone(), seed);
                let boson = boson_for(&data);
                let d = deform(&boson, &data.cocycle()).unwrap();
                let report = verify_hopf(&d.hopf);
                assert!(report.passed(), "{family:?} seed {seed}\n{report}");
                assert!((0..d.hopf.dim()).all(|k| d.hopf.comult_basis(k) == boson.hopf.comult_basis(k)));
            }
        }
    }

    #[test]
    fn non_invariant_form_is_rejected() {
        let data = LiftingData::zero(Family::A, g12(), vec![(2, 3)], vec![]);
        let boson = boson_for(&data);
        let mut eta = Bilinear::new();
        eta.add_term(1, 1, &CycScalar::one(12));
        assert!(matches!(deform(&boson, &eta), Err(DeformError::NotACocycle(_))));
    }
}
