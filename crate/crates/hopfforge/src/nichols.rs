//! Nichols algebras B(M) = ⋀M of the symmetric Yetter–Drinfeld modules of
//! the classification, as braided Hopf algebras, and the space M(B).
//!
//! Basis: square-free monomials x_S, S a subset of the generators, ordered by
//! (degree, bitmask). Index 0 is the empty monomial 1.

use std::collections::HashMap;

use thiserror::Error;

use crate::dihedral::FunctionAlgebra;
use crate::hopf::{coradical, verify_hopf, HopfData};
use crate::linalg::{kernel, kernel_of_columns, SparseEchelon, SparseVec, Subspace};
use crate::report::Report;
use crate::scalar::CycScalar;
use crate::yd::{YDModule, YdError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("unsupported module: {0}")]
    UnsupportedModule(String),
    #[error(transparent)]
    Yd(#[from] YdError),
}

/// Product of two square-free monomials in the exterior algebra.
fn wedge(s: u64, t: u64) -> Option<(u64, i64)> {
    if s & t != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (s >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some((s | t, if swaps.is_multiple_of(2) { 1 } else { -1 }))
}

/// Monomial masks over `d` generators ordered by (degree, mask).
pub(crate) fn monomials(d: usize) -> Vec<u64> {
    let mut out: Vec<u64> = (0..1u64 << d).collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// Multiplication table of ⋀k^d in the monomial basis.
pub fn exterior_mult(d: usize, m: u32) -> Vec<Vec<SparseVec>> {
    let monos = monomials(d);
    let pos: HashMap<u64, usize> = monos.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    monos
        .iter()
        .map(|&s| {
            monos
                .iter()
                .map(|&t| match wedge(s, t) {
                    Some((u, sign)) => SparseVec::single(pos[&u], CycScalar::from_int(m, sign)),
                    None => SparseVec::new(),
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct NicholsData {
    pub module: YDModule,
    pub labels: Vec<String>,
    pub monomials: Vec<u64>,
    /// `mult[a][b]` = x_a x_b.
    pub mult: Vec<Vec<SparseVec>>,
    /// `action[x][b]` = φ_x · x_b.
    pub action: Vec<Vec<SparseVec>>,
    /// `coaction[b]` flattened over (x, b') as x·dim + b'.
    pub coaction: Vec<SparseVec>,
    /// Braided comultiplication, flattened over pairs as for [`HopfData`].
    pub comult: Vec<SparseVec>,
    pub grading: Vec<u32>,
    /// x_j⊗x_k + x_k⊗x_j for j ≤ k, flattened as j·dim M + k.
    pub relations: Vec<SparseVec>,
}

impl NicholsData {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn m(&self) -> u32 {
        self.module.m()
    }

    /// Index of the generator x_i.
    pub fn generator(&self, i: usize) -> usize {
        1 + i
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&self.mult[i][j], &(x * y));
            }
        }
        out
    }

    /// h · b for h in k^{D_m}.
    pub fn act(&self, h: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (x, c) in h.iter() {
            for (i, d) in b.iter() {
                out.add_scaled(&self.action[x][i], &(c * d));
            }
        }
        out
    }

    /// Braided primitives: b with Δ_B(b) = b⊗1 + 1⊗b.
    pub fn primitives(&self) -> Vec<SparseVec> {
        let n = self.dim();
        let cols: Vec<SparseVec> = (0..n)
            .map(|b| {
                let mut c = self.comult[b].clone();
                let one = CycScalar::one(self.m());
                c.add_term(b * n, &-&one);
                c.add_term(b, &-&one);
                c
            })
            .collect();
        kernel_of_columns(&cols, self.m())
    }
}

/// Builds ⋀M with its Yetter–Drinfeld structure and braided coproduct after
/// checking that the braiding of M is symmetric with (id + c)(R) = 0.
pub fn build_nichols(module: &YDModule) -> Result<NicholsData, NicholsError> {
    let d = module.dim();
    if d > 20 {
        return Err(NicholsError::UnsupportedModule(format!("{d} generators is too many")));
    }
    let m = module.m();
    let c = module.braiding(module)?;
    if !c.mul(&c).expect("square").is_identity() {
        return Err(NicholsError::UnsupportedModule("braiding is not symmetric".into()));
    }
    let one = CycScalar::one(m);
    let relations: Vec<SparseVec> = (0..d)
        .flat_map(|j| (j..d).map(move |k| (j, k)))
        .map(|(j, k)| {
            let mut r = SparseVec::new();
            r.add_term(j * d + k, &one);
            r.add_term(k * d + j, &one);
            r
        })
        .collect();
    let mut id_plus_c = c.clone();
    for i in 0..d * d {
        let v = id_plus_c.get(i, i) + &one;
        id_plus_c.set(i, i, v);
    }
    let ker = kernel(&id_plus_c);
    if ker.dim() != relations.len() || !relations.iter().all(|r| ker.contains_sparse(r)) {
        return Err(NicholsError::UnsupportedModule("ker(id + c) is not spanned by the anticommutators".into()));
    }

    let f = FunctionAlgebra::new(module.group);
    let h = &f.hopf;
    let hd = h.dim();
    let monos = monomials(d);
    let n = monos.len();
    let pos: HashMap<u64, usize> = monos.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mult = exterior_mult(d, m);
    let mul = |a: &SparseVec, b: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&mult[i][j], &(x * y));
            }
        }
        out
    };
    // Embed M into B in degree one.
    let lift = |v: &SparseVec| -> SparseVec { v.iter().map(|(i, c)| (1 + i, c.clone())).collect() };
    let lowest = |s: u64| s.trailing_zeros() as usize;

    let mut action = vec![vec![SparseVec::new(); n]; hd];
    let mut coaction = vec![SparseVec::new(); n];
    let mut comult = vec![SparseVec::new(); n];
    for (x, row) in action.iter_mut().enumerate() {
        row[0] = SparseVec::unit(0, m).scaled(h.counit_basis(x));
    }
    coaction[0] = h.one().iter().map(|(x, c)| (x * n, c.clone())).collect();
    comult[0] = SparseVec::unit(0, m);
    // Monomials in increasing degree: x_S = x_i · x_{S∖i} with i the lowest generator.
    for b in 1..n {
        let s = monos[b];
        let i = lowest(s);
        let rest = pos[&(s & (s - 1))];
        for x in 0..hd {
            let mut out = SparseVec::new();
            for (pq, c0) in h.comult_basis(x).iter() {
                let (p, q) = h.unpair(pq);
                let left = lift(&module.action[p][i]);
                if left.is_zero() || action[q][rest].is_zero() {
                    continue;
                }
                out.add_scaled(&mul(&left, &action[q][rest]), c0);
            }
            action[x][b] = out;
        }
        let mut lam = SparseVec::new();
        for (yu, c1) in module.coaction[i].iter() {
            let (y, u) = (yu / d, yu % d);
            for (zw, c2) in coaction[rest].iter() {
                let (z, w) = (zw / n, zw % n);
                let hy = h.mult_basis(y, z);
                let bw = mul(&SparseVec::unit(1 + u, m), &SparseVec::unit(w, m));
                for (t, c3) in hy.iter() {
                    for (v, c4) in bw.iter() {
                        lam.add_term(t * n + v, &(&(&(c1 * c2) * c3) * c4));
                    }
                }
            }
        }
        coaction[b] = lam;
        // Δ(x_i u) = (x_i⊗1 + 1⊗x_i)Δ(u) in the braided tensor product.
        let mut delta = SparseVec::new();
        let xi = SparseVec::unit(1 + i, m);
        for (ab, c1) in comult[rest].iter() {
            let (a, bb) = (ab / n, ab % n);
            for (k, c2) in mul(&xi, &SparseVec::unit(a, m)).iter() {
                delta.add_term(k * n + bb, &(c1 * c2));
            }
            for (yu, c2) in module.coaction[i].iter() {
                let (y, u) = (yu / d, yu % d);
                let left = &action[y][a];
                if left.is_zero() {
                    continue;
                }
                let right = mul(&SparseVec::unit(1 + u, m), &SparseVec::unit(bb, m));
                for (k, c3) in left.iter() {
                    for (l, c4) in right.iter() {
                        delta.add_term(k * n + l, &(&(c1 * c2) * &(c3 * c4)));
                    }
                }
            }
        }
        comult[b] = delta;
    }

    let labels = monos
        .iter()
        .map(|&s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..d).filter(|j| s >> j & 1 == 1).map(|j| module.labels[j].clone()).collect::<Vec<_>>().join("*")
            }
        })
        .collect();
    let grading = monos.iter().map(|s| s.count_ones()).collect();
    let data = NicholsData { module: module.clone(), labels, monomials: monos, mult, action, coaction, comult, grading, relations };
    let prims = data.primitives();
    if prims.len() != d || !prims.iter().all(|p| p.indices().all(|i| data.grading[i] == 1)) {
        return Err(NicholsError::UnsupportedModule("braided primitives differ from M".into()));
    }
    Ok(data)
}

/// M(B) realized on the relation space R ⊆ M⊗M, with the tensor product
/// Yetter–Drinfeld structure, in degree 2.
pub fn relation_module(b: &NicholsData) -> YDModule {
    let md = &b.module;
    let d = md.dim();
    let m = md.m();
    let space = Subspace::span_sparse(m, d * d, &b.relations);
    let basis = space.basis_sparse();
    let f = FunctionAlgebra::new(md.group);
    let h = &f.hopf;
    let hd = h.dim();
    let r = basis.len();
    let coords = |v: &SparseVec| -> SparseVec {
        let c = space.coordinates(&v.to_dense(d * d, m)).expect("R is a Yetter-Drinfeld submodule");
        SparseVec::from_dense(&c)
    };
    let act_tensor = |x: usize, t: &SparseVec| {
        let mut out = SparseVec::new();
        for (pq, c) in h.comult_basis(x).iter() {
            let (p, q) = h.unpair(pq);
            for (jk, c2) in t.iter() {
                let (j, k) = (jk / d, jk % d);
                for (u, c3) in md.action[p][j].iter() {
                    for (v, c4) in md.action[q][k].iter() {
                        out.add_term(u * d + v, &(&(c * c2) * &(c3 * c4)));
                    }
                }
            }
        }
        out
    };
    let action = (0..hd).map(|x| basis.iter().map(|t| coords(&act_tensor(x, t))).collect()).collect();
    let coaction = basis
        .iter()
        .map(|t| {
            // λ(u⊗v) = u₋₁v₋₁ ⊗ u₀⊗v₀, regrouped by the H component.
            let mut by_h: HashMap<usize, SparseVec> = HashMap::new();
            for (jk, c) in t.iter() {
                let (j, k) = (jk / d, jk % d);
                for (yu, c1) in md.coaction[j].iter() {
                    for (zv, c2) in md.coaction[k].iter() {
                        for (x, c3) in h.mult_basis(yu / d, zv / d).iter() {
                            by_h.entry(x).or_default().add_term((yu % d) * d + zv % d, &(&(c * c1) * &(c2 * c3)));
                        }
                    }
                }
            }
            let mut lam = SparseVec::new();
            for (x, v) in by_h {
                for (i, c) in coords(&v).iter() {
                    lam.add_term(x * r + i, c);
                }
            }
            lam
        })
        .collect();
    YDModule {
        group: md.group,
        labels: (0..r).map(|i| format!("r{i}")).collect(),
        action,
        coaction,
        degrees: vec![2; r],
    }
}

/// M(B) = ker(B⁺ ⊗_B B⁺ → B⁺) for a connected graded algebra given by its
/// multiplication table (index 0 the unit).
#[derive(Debug, Clone)]
pub struct MbSpace {
    /// Lifts to B⁺⊗B⁺ (flattened over the full basis) of a basis of M(B).
    pub basis: Vec<SparseVec>,
    /// Dimension of the balancing relations span{xy⊗z − x⊗yz}.
    pub balanced_dim: usize,
}

pub fn compute_mb(mult: &[Vec<SparseVec>], m: u32) -> MbSpace {
    let n = mult.len();
    let plus: Vec<usize> = (1..n).collect();
    let mut balanced = SparseEchelon::new();
    let mut balanced_dim = 0;
    for &x in &plus {
        for y in 0..n {
            for &z in &plus {
                let mut v = SparseVec::new();
                for (k, c) in mult[x][y].iter() {
                    v.add_term(k * n + z, c);
                }
                for (k, c) in mult[y][z].iter() {
                    v.add_term(x * n + k, &-c);
                }
                if balanced.insert(&v) {
                    balanced_dim += 1;
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = plus.iter().flat_map(|&x| plus.iter().map(move |&z| (x, z))).collect();
    let cols: Vec<SparseVec> = pairs.iter().map(|&(x, z)| mult[x][z].clone()).collect();
    let mut basis = Vec::new();
    for k in kernel_of_columns(&cols, m) {
        let v: SparseVec = k.iter().map(|(p, c)| (pairs[p].0 * n + pairs[p].1, c.clone())).collect();
        if balanced.insert(&v) {
            basis.push(v);
        }
    }
    MbSpace { basis, balanced_dim }
}

/// The bosonization B#H with basis x_b#φ_x at index b·dim H + x.
#[derive(Debug, Clone)]
pub struct Bosonization {
    pub nichols: NicholsData,
    pub base: FunctionAlgebra,
    pub hopf: HopfData,
}

impl Bosonization {
    pub fn smash(&self, b: usize, x: usize) -> usize {
        b * self.base.dim() + x
    }

    /// ι(h) = 1#h.
    pub fn include(&self, h: &SparseVec) -> SparseVec {
        h.iter().map(|(x, c)| (self.smash(0, x), c.clone())).collect()
    }

    /// b#1.
    pub fn lift(&self, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in b.iter() {
            for x in 0..self.base.dim() {
                out.add_term(self.smash(i, x), c);
            }
        }
        out
    }

    /// π(b#h) = ε(b)h.
    pub fn project(&self, a: &SparseVec) -> SparseVec {
        let hd = self.base.dim();
        a.iter().filter(|(i, _)| i / hd == 0).map(|(i, c)| (i % hd, c.clone())).collect()
    }

    /// Right coinvariants {a : (id⊗π)Δ(a) = a⊗1}.
    pub fn coinvariants(&self) -> Vec<SparseVec> {
        let a = &self.hopf;
        let (n, hd) = (a.dim(), self.base.dim());
        let cols: Vec<SparseVec> = (0..n)
            .map(|i| {
                let mut out = SparseVec::new();
                for (pq, c) in a.comult_basis(i).iter() {
                    let (p, q) = a.unpair(pq);
                    if q / hd == 0 {
                        out.add_term(p * hd + q % hd, c);
                    }
                }
                for (x, c) in self.base.hopf.one().iter() {
                    out.add_term(i * hd + x, &-c);
                }
                out
            })
            .collect();
        kernel_of_columns(&cols, a.m())
    }
}

pub fn bosonize(b: &NicholsData) -> Bosonization {
    let base = FunctionAlgebra::new(b.module.group);
    let h = &base.hopf;
    let (bd, hd, m) = (b.dim(), h.dim(), b.m());
    let n = bd * hd;
    let idx = |i: usize, x: usize| i * hd + x;

    // (b#φ_x)(c#φ_y) = Σ b(φ_p·c) # φ_q φ_y over Δ(φ_x) = Σ φ_p⊗φ_q.
    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for i in 0..bd {
        for x in 0..hd {
            for j in 0..bd {
                for (pq, c) in h.comult_basis(x).iter() {
                    let (p, q) = h.unpair(pq);
                    let acted = &b.action[p][j];
                    if acted.is_zero() {
                        continue;
                    }
                    let prod = b.mul(&SparseVec::unit(i, m), acted);
                    if prod.is_zero() {
                        continue;
                    }
                    for y in 0..hd {
                        let hy = h.mult_basis(q, y);
                        for (k, c1) in prod.iter() {
                            for (z, c2) in hy.iter() {
                                mult[idx(i, x)][idx(j, y)].add_term(idx(k, z), &(&(c * c1) * c2));
                            }
                        }
                    }
                }
            }
        }
    }

    // Δ(b#φ_x) = Σ b₁ # (b₂)₋₁ φ_p ⊗ (b₂)₀ # φ_q.
    let mut comult = vec![SparseVec::new(); n];
    for i in 0..bd {
        for (ab, c) in b.comult[i].iter() {
            let (b1, b2) = (ab / bd, ab % bd);
            for (yw, c1) in b.coaction[b2].iter() {
                let (y, w) = (yw / bd, yw % bd);
                for x in 0..hd {
                    for (pq, c2) in h.comult_basis(x).iter() {
                        let (p, q) = h.unpair(pq);
                        for (z, c3) in h.mult_basis(y, p).iter() {
                            let coef = &(c * c1) * &(c2 * c3);
                            comult[idx(i, x)].add_term(idx(b1, z) * n + idx(w, q), &coef);
                        }
                    }
                }
            }
        }
    }

    let mut counit = vec![CycScalar::zero(m); n];
    for x in 0..hd {
        counit[idx(0, x)] = h.counit_basis(x).clone();
    }
    let unit: SparseVec = h.one().iter().map(|(x, c)| (idx(0, x), c.clone())).collect();
    let labels: Vec<String> = (0..bd).flat_map(|i| h.labels().iter().map(move |l| (i, l))).map(|(i, l)| format!("{}#{l}", b.labels[i])).collect();
    let grading: Vec<u32> = (0..n).map(|k| b.grading[k / hd]).collect();

    let antipode = boson_antipode(&mult, &comult, &unit, h, bd);
    let mut gens: Vec<SparseVec> = (0..hd).map(|x| SparseVec::unit(idx(0, x), m)).collect();
    for g in 0..b.module.dim() {
        gens.push((0..hd).map(|x| (idx(b.generator(g), x), CycScalar::one(m))).collect());
    }
    let hopf = HopfData::new(crate::hopf::HopfParts { m, labels, mult, unit, comult, counit, antipode, grading: Some(grading) })
        .expect("bosonization structure constants are consistent")
        .with_generators(gens);
    Bosonization { nichols: b.clone(), base, hopf }
}

/// S(b#h) = (1#S(h)) S(b#1), with S(b#1) solved degree by degree from
/// Σ S(a₁)a₂ = 0: the only term of Δ(b#1) with first factor b#· is
/// (b#1)⊗(1#1), and every other first factor has lower degree.
fn boson_antipode(mult: &[Vec<SparseVec>], comult: &[SparseVec], unit: &SparseVec, h: &HopfData, bd: usize) -> Vec<SparseVec> {
    let hd = h.dim();
    let n = bd * hd;
    let mul = |a: &SparseVec, b: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&mult[i][j], &(x * y));
            }
        }
        out
    };
    let mut s_b: Vec<SparseVec> = vec![unit.clone()];
    for i in 1..bd {
        let mut rest = SparseVec::new();
        for x in 0..hd {
            for (pq, c) in comult[i * hd + x].iter() {
                let (p, q) = (pq / n, pq % n);
                let (pb, px) = (p / hd, p % hd);
                if pb == i {
                    continue;
                }
                let s_p = mul(h.antipode_basis(px), &s_b[pb]);
                rest.add_scaled(&mul(&s_p, &SparseVec::unit(q, h.m())), c);
            }
        }
        s_b.push(rest.neg());
    }
    let mut out = vec![SparseVec::new(); n];
    for i in 0..bd {
        for x in 0..hd {
            out[i * hd + x] = mul(h.antipode_basis(x), &s_b[i]);
        }
    }
    out
}

/// Nichols and bosonization suite: dim B = 2^{dim M}, the braided primitives
/// are M, B#k^{D_m} is a Hopf algebra whose right coinvariants have dimension
/// dim B and whose coradical is the degree-0 part k^{D_m}.
pub fn verify_nichols(b: &NicholsData) -> Report {
    let mut report = Report::new("Nichols algebra and bosonization");
    let (d, m) = (b.module.dim(), b.m());
    let expected = 1usize << d;
    report.record("dimension", if b.dim() == expected { Ok(format!("{expected}")) } else { Err(format!("dim {} instead of {expected}", b.dim())) });
    let prims = Subspace::span_sparse(m, b.dim(), &b.primitives());
    let gens: Vec<SparseVec> = (0..d).map(|i| SparseVec::unit(b.generator(i), m)).collect();
    let ok = prims.dim() == d && gens.iter().all(|g| prims.contains_sparse(g));
    report.record("primitives", if ok { Ok(format!("P(B) = M, dim {d}")) } else { Err(format!("primitive space of dim {}", prims.dim())) });

    let boson = bosonize(b);
    report.extend(verify_hopf(&boson.hopf));
    let co = boson.coinvariants().len();
    report.record("coinvariants", if co == b.dim() { Ok(format!("dim {co}")) } else { Err(format!("dim {co} instead of {}", b.dim())) });
    let hd = boson.base.dim();
    let c = coradical(&boson.hopf);
    let ok = c.dim() == hd && (0..hd).all(|x| c.contains_sparse(&boson.hopf.basis(boson.smash(0, x))));
    report.record("coradical", if ok { Ok(format!("k^D_{m}, dim {hd}")) } else { Err(format!("coradical of dim {}", c.dim())) });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GroupDatum;
    use crate::yd::{yd_hom_space, IndexDatumI};

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge(0b01, 0b10), Some((0b11, 1)));
        assert_eq!(wedge(0b10, 0b01), Some((0b11, -1)));
        assert_eq!(wedge(0b101, 0b010), Some((0b111, -1)));
        assert_eq!(wedge(0b1, 0b1), None);
    }

    #[test]
    fn dimensions() {
        let g = g12();
        let b = build_nichols(&YDModule::m_ik(g, 2, 3).unwrap()).unwrap();
        assert_eq!(b.dim(), 4);
        let i = IndexDatumI::validate(&g, vec![(2, 3), (2, 9)]).unwrap();
        assert_eq!(build_nichols(&YDModule::from_pairs(g, &i).unwrap()).unwrap().dim(), 16);
        assert_eq!(build_nichols(&YDModule::zero(g)).unwrap().dim(), 1);
    }

    #[test]
    fn generators_are_braided_primitive() {
        let b = build_nichols(&YDModule::m_ell(g12(), 3).unwrap()).unwrap();
        let n = b.dim();
        for g in 0..2 {
            let x = b.generator(g);
            let want = SparseVec::from_terms([(x * n, CycScalar::one(12)), (x, CycScalar::one(12))]);
            assert_eq!(b.comult[x], want);
        }
        assert_eq!(b.primitives().len(), 2);
    }

    #[test]
    fn mb_by_definition() {
        let one = compute_mb(&exterior_mult(1, 12), 12);
        assert_eq!(one.basis.len(), 1);
        let two = compute_mb(&exterior_mult(2, 12), 12);
        assert_eq!(two.basis.len(), 3);
        let b = build_nichols(&YDModule::m_ik(g12(), 2, 3).unwrap()).unwrap();
        let mb = compute_mb(&b.mult, 12);
        assert_eq!(mb.basis.len(), b.relations.len());
        // R → M(B) is onto: R together with the balancing relations spans ker μ.
        let n = b.dim();
        let d = b.module.dim();
        let mut span = SparseEchelon::new();
        for x in 1..n {
            for y in 0..n {
                for z in 1..n {
                    let mut v = SparseVec::new();
                    for (k, c) in b.mult[x][y].iter() {
                        v.add_term(k * n + z, c);
                    }
                    for (k, c) in b.mult[y][z].iter() {
                        v.add_term(x * n + k, &-c);
                    }
                    span.insert(&v);
                }
            }
        }
        for r in &b.relations {
            let lifted: SparseVec = r.iter().map(|(jk, c)| ((1 + jk / d) * n + 1 + jk % d, c.clone())).collect();
            span.insert(&lifted);
        }
        assert!(mb.basis.iter().all(|v| span.contains(v)));
    }

    #[test]
    fn bosonization_of_one_block() {
        let g = g12();
        let b = build_nichols(&YDModule::m_ik(g, 2, 3).unwrap()).unwrap();
        let a = bosonize(&b);
        assert_eq!(a.hopf.dim(), 96);
        let r = verify_hopf(&a.hopf);
        assert!(r.passed(), "{r}");
        assert_eq!(coradical(&a.hopf).dim(), 24);
        let co = a.coinvariants();
        assert_eq!(co.len(), 4);
        for v in &co {
            assert!(span_contains(&(0..4).map(|i| a.lift(&SparseVec::unit(i, 12))).collect::<Vec<_>>(), v));
        }
        // ι is a Hopf map and π∘ι = id.
        let h = &a.base.hopf;
        for x in 0..24 {
            let e = h.basis(x);
            assert_eq!(a.project(&a.include(&e)), e);
            let d = a.hopf.comul(&a.include(&e));
            let want = h.comult_basis(x).iter().map(|(pq, c)| (a.smash(0, pq / 24) * 96 + a.smash(0, pq % 24), c.clone())).collect();
            assert_eq!(d, want);
        }
    }

    fn span_contains(basis: &[SparseVec], v: &SparseVec) -> bool {
        let mut e = SparseEchelon::new();
        for b in basis {
            e.insert(b);
        }
        e.contains(v)
    }

    #[test]
    fn trivial_bosonization_is_the_base() {
        let b = build_nichols(&YDModule::zero(g12())).unwrap();
        let a = bosonize(&b);
        let base = FunctionAlgebra::new(g12()).hopf.into_parts();
        let parts = a.hopf.clone().into_parts();
        assert_eq!(parts.mult, base.mult);
        assert_eq!(parts.comult, base.comult);
        assert_eq!(parts.antipode, base.antipode);
        assert_eq!(a.coinvariants().len(), 1);
    }

    #[test]
    fn relation_module_has_no_maps_down() {
        let g = g12();
        let v = YDModule::m_ik(g, 2, 3).unwrap();
        let b = build_nichols(&v).unwrap();
        let mb = relation_module(&b);
        assert_eq!(mb.dim(), 3);
        assert!(mb.verify().passed());
        assert_eq!(yd_hom_space(&mb, &v, -1).unwrap().dim(), 0);
    }

    #[test]
    fn nichols_suite_passes_on_mixed_module() {
        let g = GroupDatum::new(12).unwrap();
        let module = YDModule::direct_sum(g, &[YDModule::m_ik(g, 2, 3).unwrap(), YDModule::m_ell(g, 3).unwrap()]).unwrap();
        let r = verify_nichols(&build_nichols(&module).unwrap());
        assert!(r.passed(), "{r}");
    }
}
