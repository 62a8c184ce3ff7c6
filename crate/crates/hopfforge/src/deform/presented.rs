//! Algebras T(M)#k^{D_m} / (x_a x_b + x_b x_a − c_ab), realized by rewriting
//! words to increasing monomials. The normal-form basis x_S#φ_y sits at the
//! same index as in the bosonization.

use std::collections::{BTreeMap, HashMap};

use super::{DeformError, LiftingData};
use crate::dihedral::FunctionAlgebra;
use crate::hopf::{HopfData, HopfParts};
use crate::linalg::SparseVec;
use crate::nichols::monomials;
use crate::scalar::CycScalar;
use crate::yd::YDModule;

type Word = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub module: YDModule,
    /// c_ab ∈ k^{D_m} (φ basis) for a ≤ b; missing pairs anticommute.
    pub relations: BTreeMap<(usize, usize), SparseVec>,
}

impl Presentation {
    pub fn from_lifting(data: &LiftingData) -> Result<Self, DeformError> {
        Ok(Self { module: data.module()?, relations: data.relations() })
    }
}

#[derive(Debug, Clone)]
pub struct PresentedAlgebra {
    pub presentation: Presentation,
    pub hopf: HopfData,
}

struct Rewriter<'a> {
    p: &'a Presentation,
    base: FunctionAlgebra,
    pos: HashMap<u64, usize>,
    half: CycScalar,
    nf_memo: HashMap<(Word, usize), SparseVec>,
    act_memo: HashMap<(usize, Word), Vec<(Word, CycScalar)>>,
}

impl<'a> Rewriter<'a> {
    fn new(p: &'a Presentation) -> Self {
        let d = p.module.dim();
        let pos = monomials(d).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let m = p.module.m();
        Self {
            p,
            base: FunctionAlgebra::new(p.module.group),
            pos,
            half: CycScalar::from_ratio(m, 1, 2).expect("2 ≠ 0"),
            nf_memo: HashMap::new(),
            act_memo: HashMap::new(),
        }
    }

    fn hd(&self) -> usize {
        self.base.dim()
    }

    /// φ_z · w for a word w, through Δ(φ_z).
    fn act(&mut self, z: usize, w: &[u8]) -> Vec<(Word, CycScalar)> {
        let m = self.p.module.m();
        let Some((&a, rest)) = w.split_first() else {
            let c = self.base.hopf.counit_basis(z).clone();
            return if c.is_zero() { vec![] } else { vec![(vec![], c)] };
        };
        if let Some(hit) = self.act_memo.get(&(z, w.to_vec())) {
            return hit.clone();
        }
        let mut acc: HashMap<Word, CycScalar> = HashMap::new();
        let h = &self.base.hopf;
        let terms: Vec<(usize, usize, CycScalar)> = h.comult_basis(z).iter().map(|(pq, c)| (pq / h.dim(), pq % h.dim(), c.clone())).collect();
        for (p, q, c) in terms {
            let head = self.p.module.action[p][a as usize].clone();
            if head.is_zero() {
                continue;
            }
            for (tail, ct) in self.act(q, rest) {
                for (b, cb) in head.iter() {
                    let mut word = vec![b as u8];
                    word.extend_from_slice(&tail);
                    *acc.entry(word).or_insert_with(|| CycScalar::zero(m)) += &(&(&c * &ct) * cb);
                }
            }
        }
        let out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.act_memo.insert((z, w.to_vec()), out.clone());
        out
    }

    /// u · c · v · φ_y with c ∈ k^{D_m}, moving c to the right of v.
    fn sandwich(&mut self, u: &[u8], c: &SparseVec, v: &[u8], y: usize) -> Vec<(Word, usize, CycScalar)> {
        let h = self.base.hopf.clone();
        let mut out = Vec::new();
        for (z, cz) in c.iter() {
            for (pq, cd) in h.comult_basis(z).iter() {
                let (p, q) = h.unpair(pq);
                for (r, cr) in h.mult_basis(q, y).iter() {
                    for (w, cw) in self.act(p, v) {
                        let mut word = u.to_vec();
                        word.extend_from_slice(&w);
                        out.push((word, r, &(&(cz * cd) * cr) * &cw));
                    }
                }
            }
        }
        out
    }

    /// One rewrite of the letters at positions i, i+1 (requires w[i] ≥ w[i+1]).
    fn step(&mut self, w: &[u8], i: usize, y: usize) -> Vec<(Word, usize, CycScalar)> {
        let m = self.p.module.m();
        let (a, b) = (w[i], w[i + 1]);
        let (u, v) = (&w[..i], &w[i + 2..]);
        let key = (b as usize, a as usize);
        let rel = self.p.relations.get(&key).cloned().unwrap_or_default();
        let mut out = Vec::new();
        if a > b {
            let mut swapped = w.to_vec();
            swapped.swap(i, i + 1);
            out.push((swapped, y, CycScalar::from_int(m, -1)));
            out.extend(self.sandwich(u, &rel, v, y));
        } else {
            let half = self.half.clone();
            out.extend(self.sandwich(u, &rel.scaled(&half), v, y));
        }
        out
    }

    fn nf(&mut self, w: &[u8], y: usize) -> SparseVec {
        if let Some(hit) = self.nf_memo.get(&(w.to_vec(), y)) {
            return hit.clone();
        }
        let out = match (0..w.len().saturating_sub(1)).find(|&i| w[i] >= w[i + 1]) {
            None => {
                let mask = w.iter().fold(0u64, |s, &a| s | 1 << a);
                SparseVec::unit(self.pos[&mask] * self.hd() + y, self.p.module.m())
            }
            Some(i) => {
                let terms = self.step(w, i, y);
                self.nf_terms(terms)
            }
        };
        self.nf_memo.insert((w.to_vec(), y), out.clone());
        out
    }

    fn nf_terms(&mut self, terms: Vec<(Word, usize, CycScalar)>) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, y, c) in terms {
            let v = self.nf(&w, y);
            out.add_scaled(&v, &c);
        }
        out
    }

    /// Overlaps x_a x_b x_c with a ≥ b ≥ c, and compatibility of each
    /// relation with the k^{D_m}-action.
    fn check_confluence(&mut self) -> Result<(), DeformError> {
        let d = self.p.module.dim() as u8;
        let hd = self.hd();
        for a in 0..d {
            for b in 0..=a {
                for c in 0..=b {
                    for y in 0..hd {
                        let w = [a, b, c];
                        let left = self.step(&w, 0, y);
                        let right = self.step(&w, 1, y);
                        if self.nf_terms(left) != self.nf_terms(right) {
                            return Err(DeformError::ConfluenceFailure(format!("overlap on generators ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        }
        let m = self.p.module.m();
        for a in 0..d {
            for b in a..d {
                let rel = self.p.relations.get(&(a as usize, b as usize)).cloned().unwrap_or_default();
                for z in 0..hd {
                    for y in 0..hd {
                        let mut terms = self.sandwich(&[], &SparseVec::unit(z, m), &[a, b], y);
                        terms.extend(self.sandwich(&[], &SparseVec::unit(z, m), &[b, a], y));
                        let neg = rel.neg();
                        let hz = self.base.hopf.mult_basis(z, y).clone();
                        for (r, cr) in self.base.hopf.mul(&neg, &hz).iter() {
                            terms.push((vec![], r, cr.clone()));
                        }
                        if !self.nf_terms(terms).is_zero() {
                            return Err(DeformError::ConfluenceFailure(format!("relation ({a}, {b}) is not stable under φ_{z}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the presented algebra, checking confluence, that the relations
/// generate a Hopf ideal, and the dimension 2^{dim M}·2m.
pub fn build_presented(p: &Presentation) -> Result<PresentedAlgebra, DeformError> {
    let mut rw = Rewriter::new(p);
    rw.check_confluence()?;
    let d = p.module.dim();
    let hd = rw.hd();
    let m = p.module.m();
    let monos = monomials(d);
    let n = monos.len() * hd;
    let word_of = |s: u64| -> Word { (0..d as u8).filter(|&j| s >> j & 1 == 1).collect() };
    let h = rw.base.hopf.clone();

    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for (si, &s) in monos.iter().enumerate() {
        for x in 0..hd {
            for (ti, &t) in monos.iter().enumerate() {
                let tw = word_of(t);
                for y in 0..hd {
                    let mut terms = Vec::new();
                    for (w, r, c) in rw.sandwich(&word_of(s), &SparseVec::unit(x, m), &tw, y) {
                        terms.push((w, r, c));
                    }
                    mult[si * hd + x][ti * hd + y] = rw.nf_terms(terms);
                }
            }
        }
    }
    if n != (1usize << d) * hd {
        return Err(DeformError::DimensionMismatch { expected: (1 << d) * hd, got: n });
    }

    let one = CycScalar::one(m);
    let unit: SparseVec = (0..hd).map(|y| (y, one.clone())).collect();
    let lift = |a: usize| -> SparseVec { (0..hd).map(|y| (rw.pos[&(1u64 << a)] * hd + y, one.clone())).collect() };
    let gens: Vec<SparseVec> = (0..d).map(lift).collect();
    let mut counit = vec![CycScalar::zero(m); n];
    counit[..hd].clone_from_slice(h.counit_vec());
    let labels: Vec<String> = monos
        .iter()
        .flat_map(|&s| {
            let name = if s == 0 { "1".to_string() } else { word_of(s).iter().map(|&j| p.module.labels[j as usize].clone()).collect::<Vec<_>>().join("*") };
            h.labels().iter().map(move |l| format!("{name}#{l}"))
        })
        .collect();
    let tmp = HopfData::new(HopfParts {
        m,
        labels: labels.clone(),
        mult: mult.clone(),
        unit: unit.clone(),
        comult: vec![SparseVec::new(); n],
        counit: counit.clone(),
        antipode: vec![SparseVec::new(); n],
        grading: None,
    })?;

    // Δ(x_a) = x_a⊗1 + λ(x_a), Δ(φ_z) = Σ φ_p⊗φ_q.
    let delta_gen: Vec<SparseVec> = (0..d)
        .map(|a| {
            let mut out = tmp.tensor(&gens[a], &unit);
            for (zw, c) in p.module.coaction[a].iter() {
                let (z, w) = (zw / d, zw % d);
                out.add_scaled(&tmp.tensor(&SparseVec::unit(z, m), &gens[w]), c);
            }
            out
        })
        .collect();
    let delta_h = |y: usize| -> SparseVec { h.comult_basis(y).iter().map(|(pq, c)| (tmp.pair(pq / hd, pq % hd), c.clone())).collect() };
    // S(x_a) = −Σ S(φ_z) x_w over λ(x_a) = Σ φ_z⊗x_w.
    let s_gen: Vec<SparseVec> = (0..d)
        .map(|a| {
            let mut out = SparseVec::new();
            for (zw, c) in p.module.coaction[a].iter() {
                let (z, w) = (zw / d, zw % d);
                let sz: SparseVec = h.antipode_basis(z).clone();
                out.add_scaled(&tmp.mul(&sz, &gens[w]), &-c);
            }
            out
        })
        .collect();
    let mut comult = vec![SparseVec::new(); n];
    let mut antipode = vec![SparseVec::new(); n];
    for (si, &s) in monos.iter().enumerate() {
        let w = word_of(s);
        let mut dx = tmp.tensor(tmp.one(), tmp.one());
        let mut sx = tmp.one().clone();
        for &a in &w {
            dx = tmp.tensor_mul(&dx, &delta_gen[a as usize]);
            sx = tmp.mul(&s_gen[a as usize], &sx);
        }
        for y in 0..hd {
            comult[si * hd + y] = tmp.tensor_mul(&dx, &delta_h(y));
            antipode[si * hd + y] = tmp.mul(h.antipode_basis(y), &sx);
        }
    }
    let hopf = HopfData::new(HopfParts { m, labels, mult, unit, comult, counit, antipode, grading: None })?;

    for a in 0..d {
        for b in a..d {
            let c = p.relations.get(&(a, b)).cloned().unwrap_or_default();
            let mut lhs = hopf.tensor_mul(&delta_gen[a], &delta_gen[b]);
            lhs.add(&hopf.tensor_mul(&delta_gen[b], &delta_gen[a]));
            let mut dc = SparseVec::new();
            for (z, cz) in c.iter() {
                dc.add_scaled(&delta_h(z), cz);
            }
            if lhs != dc {
                return Err(DeformError::NotHopfIdeal(format!("Δ of relation ({a}, {b})")));
            }
            let mut s = hopf.mul(&s_gen[b], &s_gen[a]);
            s.add(&hopf.mul(&s_gen[a], &s_gen[b]));
            if s != h.antipode_of(&c) {
                return Err(DeformError::NotHopfIdeal(format!("S of relation ({a}, {b})")));
            }
            if !h.counit_of(&c).is_zero() {
                return Err(DeformError::NotHopfIdeal(format!("ε of relation ({a}, {b})")));
            }
        }
    }
    let mut all_gens: Vec<SparseVec> = (0..hd).map(|x| SparseVec::unit(x, m)).collect();
    all_gens.extend(gens);
    Ok(PresentedAlgebra { presentation: p.clone(), hopf: hopf.with_generators(all_gens) })
}
