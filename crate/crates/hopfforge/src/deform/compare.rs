use serde::{Deserialize, Serialize};

use super::{DeformError, Family, LiftingData, PresentedAlgebra};
use crate::dihedral::FunctionAlgebra;
use crate::hopf::{coradical, HopfData};
use crate::linalg::{SparseEchelon, SparseVec, Subspace};
use crate::report::Report;
use crate::scalar::GroupDatum;
use crate::yd::{enumerate_i, enumerate_k, enumerate_l};

/// Subspace spanned by all products of the given generators.
fn generated_dim(a: &HopfData, gens: &[SparseVec]) -> usize {
    let mut span = SparseEchelon::new();
    let mut frontier = vec![a.one().clone()];
    span.insert(a.one());
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w = a.mul(g, &v);
            if span.insert(&w) {
                frontier.push(w);
            }
        }
    }
    span.dim()
}

/// Checks that the relations of P hold in D for the generator-to-generator map
/// and that P's relation values are the presented ones.
pub fn compare_presentation_vs_deformation(p: &PresentedAlgebra, d: &HopfData) -> Result<Report, DeformError> {
    let ph = &p.hopf;
    let gens = ph.generator_hint().expect("presented algebras carry generators");
    let xs = &gens[p.presentation.module.group.order()..];
    let md = xs.len();
    for a in 0..md {
        for b in a..md {
            let mut value = ph.mul(&xs[a], &xs[b]);
            value.add(&ph.mul(&xs[b], &xs[a]));
            if value != p.presentation.relations.get(&(a, b)).cloned().unwrap_or_default() {
                return Err(DeformError::MismatchWitness(format!("presented algebra violates its relation ({a}, {b})")));
            }
        }
    }
    compare_on_generators(ph, d)
}

fn generator_name(a: &HopfData, g: &SparseVec) -> String {
    let (i, _) = g.first().expect("nonzero generator");
    a.labels()[i].split('#').next().unwrap_or_default().to_string()
}

/// Compares two algebras on a shared basis whose generator hint lists the
/// φ_x first and then the degree-one generators. Checks that the products
/// of generators in P (smash and anticommutator relations) hold in D, that Δ
/// and ε agree on generators, and that the generators generate D. With equal
/// dimensions this gives P ≅ D.
pub fn compare_on_generators(ph: &HopfData, d: &HopfData) -> Result<Report, DeformError> {
    let mut report = Report::new("presentation vs deformation");
    if ph.dim() != d.dim() {
        return Err(DeformError::DimensionMismatch { expected: ph.dim(), got: d.dim() });
    }
    report.pass("dimension", format!("{}", d.dim()));
    let gens = ph.generator_hint().ok_or_else(|| DeformError::MismatchWitness("presented algebra lists no generators".into()))?.to_vec();
    let hd = 2 * ph.m() as usize;
    if gens.len() < hd {
        return Err(DeformError::MismatchWitness("fewer generators than φ_x".into()));
    }
    let (phis, xs) = gens.split_at(hd);
    let md = xs.len();
    if d.one() != ph.one() {
        return Err(DeformError::MismatchWitness("unit".into()));
    }
    for (x, fx) in phis.iter().enumerate() {
        for (y, fy) in phis.iter().enumerate() {
            if d.mul(fx, fy) != ph.mul(fx, fy) {
                return Err(DeformError::MismatchWitness(format!("φ_{x} φ_{y}")));
            }
        }
    }
    // Smash relations φ_z x_a = Σ (φ_p·x_a) φ_q, with the right side read off in P.
    for (z, fz) in phis.iter().enumerate() {
        for (a, xa) in xs.iter().enumerate() {
            if d.mul(fz, xa) != ph.mul(fz, xa) {
                return Err(DeformError::MismatchWitness(format!("φ_{z} {}", generator_name(ph, &xs[a]))));
            }
        }
    }
    for a in 0..md {
        for b in a..md {
            let anti = |h: &HopfData| {
                let mut v = h.mul(&xs[a], &xs[b]);
                v.add(&h.mul(&xs[b], &xs[a]));
                v
            };
            if anti(d) != anti(ph) {
                let (na, nb) = (generator_name(ph, &xs[a]), generator_name(ph, &xs[b]));
                return Err(DeformError::MismatchWitness(format!("{na}·{nb} + {nb}·{na} differs from the presented value")));
            }
        }
    }
    report.pass("relations", format!("{} anticommutators, {} smash relations", md * (md + 1) / 2, hd * md));

    for g in &gens {
        if d.comul(g) != ph.comul(g) || d.counit_of(g) != ph.counit_of(g) {
            return Err(DeformError::MismatchWitness(format!("coalgebra structure on {}", generator_name(ph, g))));
        }
    }
    report.pass("coalgebra", "Δ and ε agree on generators");

    let span = generated_dim(d, &gens);
    report.record("generation", if span == d.dim() { Ok(format!("{span}")) } else { Err(format!("generators span {span} of {}", d.dim())) });
    Ok(report)
}

/// The coradical of `d` equals the image of k^{D_m}, which sits at indices
/// 0..2m in both the bosonization and its deformations.
pub fn coradical_check(d: &HopfData, f: &FunctionAlgebra) -> Report {
    let mut report = Report::new("coradical");
    let c = coradical(d);
    let embedded = Subspace::span_sparse(d.m(), d.dim(), &(0..f.dim()).map(|x| d.basis(x)).collect::<Vec<_>>());
    let same = c.dim() == embedded.dim() && embedded.basis_sparse().iter().all(|v| c.contains_sparse(v));
    report.record("coradical", if same { Ok(format!("dim {}", c.dim())) } else { Err(format!("coradical dim {} vs {}", c.dim(), embedded.dim())) });
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MenuEntry {
    /// `None` for k^{D_m} itself.
    pub family: Option<Family>,
    pub pairs: Vec<(u32, u32)>,
    pub ells: Vec<u32>,
    pub dim: usize,
    pub parameters: usize,
}

/// All index data of total rank ≤ max_rank with dimensions and parameter counts.
pub fn classify_menu(g: &GroupDatum, max_rank: usize) -> Vec<MenuEntry> {
    let hd = g.order();
    let entry = |family, pairs: Vec<(u32, u32)>, ells: Vec<u32>| MenuEntry {
        family: Some(family),
        dim: (1usize << (2 * (pairs.len() + ells.len()))) * hd,
        parameters: LiftingData::parameter_count(family, &pairs, &ells),
        pairs,
        ells,
    };
    let mut out = vec![MenuEntry { family: None, pairs: vec![], ells: vec![], dim: hd, parameters: 0 }];
    for i in enumerate_i(g, max_rank) {
        out.push(entry(Family::A, i.pairs().to_vec(), vec![]));
    }
    for l in enumerate_l(g, max_rank) {
        out.push(entry(Family::B, vec![], l.ells().to_vec()));
    }
    for k in enumerate_k(g, max_rank.saturating_sub(1), max_rank.saturating_sub(1)) {
        if k.pairs.len() + k.ells.len() <= max_rank {
            out.push(entry(Family::C, k.pairs.pairs().to_vec(), k.ells.ells().to_vec()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::{build_presented, deform, Presentation};
    use crate::nichols::{bosonize, build_nichols};
    use crate::yd::enumerate_j;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn matched_data_and_coradical() {
        let g = g12();
        let data = LiftingData::random(Family::A, g, vec![(2, 3)], vec![], 2);
        let boson = bosonize(&build_nichols(&data.module().unwrap()).unwrap());
        let p = build_presented(&Presentation::from_lifting(&data).unwrap()).unwrap();
        let d = deform(&boson, &data.cocycle()).unwrap();
        let report = compare_presentation_vs_deformation(&p, &d.hopf).unwrap();
        assert!(report.passed(), "{report}");
        assert!(coradical_check(&d.hopf, &boson.base).passed());
        assert!(coradical_check(&boson.hopf, &boson.base).passed());

        // At rank one ζ drops out: ζ(1 − θ_{0,0} − θ_{1,0}) = 0.
        assert!(p.presentation.relations.is_empty());
    }

    #[test]
    fn mismatched_data_give_a_witness() {
        let g = g12();
        let data = LiftingData::random(Family::B, g, vec![], vec![3], 4);
        let boson = bosonize(&build_nichols(&data.module().unwrap()).unwrap());
        let p = build_presented(&Presentation::from_lifting(&data).unwrap()).unwrap();
        let mut other = data.clone();
        let mu = other.mu.get_mut(&(0, 0)).unwrap();
        *mu = &*mu + &g.one();
        let d = deform(&boson, &other.cocycle()).unwrap();
        match compare_presentation_vs_deformation(&p, &d.hopf) {
            Err(DeformError::MismatchWitness(w)) => assert!(w.contains("x1_(3)·x1_(3)"), "{w}"),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn zero_data_compare_trivially() {
        let data = LiftingData::zero(Family::B, g12(), vec![], vec![1]);
        let boson = bosonize(&build_nichols(&data.module().unwrap()).unwrap());
        let p = build_presented(&Presentation::from_lifting(&data).unwrap()).unwrap();
        assert!(compare_presentation_vs_deformation(&p, &boson.hopf).unwrap().passed());
    }

    #[test]
    fn menu_entries() {
        let g = g12();
        assert_eq!(classify_menu(&g, 0), vec![MenuEntry { family: None, pairs: vec![], ells: vec![], dim: 24, parameters: 0 }]);
        let menu = classify_menu(&g, 1);
        let a: Vec<Vec<(u32, u32)>> = menu.iter().filter(|e| e.family == Some(Family::A)).map(|e| e.pairs.clone()).collect();
        assert_eq!(a, enumerate_j(&g).into_iter().map(|p| vec![p]).collect::<Vec<_>>());
        let b: Vec<Vec<u32>> = menu.iter().filter(|e| e.family == Some(Family::B)).map(|e| e.ells.clone()).collect();
        assert_eq!(b, vec![vec![1], vec![3], vec![5]]);
        assert!(menu.iter().all(|e| e.family != Some(Family::C)));
        let menu = classify_menu(&g, 2);
        let e = menu.iter().find(|e| e.pairs == vec![(2, 3), (2, 9)]).unwrap();
        assert_eq!((e.dim, e.parameters), (384, 4));
        let c = menu.iter().find(|e| e.family == Some(Family::C) && e.pairs == vec![(2, 3)] && e.ells == vec![3]).unwrap();
        assert_eq!((c.dim, c.parameters), (384, 1 + 2 + 1));
    }
}
