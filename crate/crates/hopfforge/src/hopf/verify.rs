//! Hopf axiom verification.
//!
//! Associativity, multiplicativity of Δ and coassociativity are checked on
//! s·y for s in a generating set S and y in the basis. The set of elements
//! satisfying each identity against every y is closed under products, so this
//! covers the whole algebra once S is shown to generate it.

use rayon::prelude::*;

use super::HopfData;
use crate::linalg::{SparseEchelon, SparseVec};
use crate::report::Report;

/// Up to this dimension every axiom is checked on all basis triples.
pub const FULL_CHECK_DIM: usize = 64;

type Outcome = Result<String, String>;

fn show(a: &HopfData, v: &SparseVec) -> String {
    let terms: Vec<String> = v.iter().take(6).map(|(i, c)| format!("({c})*{}", a.labels()[i])).collect();
    let more = if v.len() > 6 { " + ..." } else { "" };
    if terms.is_empty() {
        "0".into()
    } else {
        format!("{}{more}", terms.join(" + "))
    }
}

/// Left-multiplication closure of 1 under `gens`; returns its echelon basis.
fn left_closure(a: &HopfData, gens: &[SparseVec]) -> SparseEchelon {
    let mut ech = SparseEchelon::new();
    let mut queue = vec![a.one().clone()];
    ech.insert(a.one());
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = a.mul(g, &v);
            if ech.insert(&w) {
                queue.push(w);
            }
            if ech.dim() == a.dim() {
                return ech;
            }
        }
    }
    ech
}

/// A generating set: the stored hint if any, otherwise basis elements chosen
/// greedily by (degree, index).
pub fn generating_set(a: &HopfData) -> Vec<SparseVec> {
    if let Some(h) = a.generator_hint() {
        return h.to_vec();
    }
    let mut order: Vec<usize> = (0..a.dim()).collect();
    order.sort_by_key(|&i| (a.degree(i), i));
    let mut gens: Vec<SparseVec> = Vec::new();
    let mut span = left_closure(a, &gens);
    for i in order {
        if span.dim() == a.dim() {
            break;
        }
        let e = a.basis(i);
        if !span.contains(&e) {
            gens.push(e);
            span = left_closure(a, &gens);
        }
    }
    gens
}

fn check_generation(a: &HopfData, gens: &[SparseVec]) -> Outcome {
    let d = left_closure(a, gens).dim();
    if d == a.dim() {
        Ok(format!("{} generators", gens.len()))
    } else {
        Err(format!("generators span a subalgebra of dimension {d} < {}", a.dim()))
    }
}

fn check_unit(a: &HopfData) -> Outcome {
    for i in 0..a.dim() {
        let e = a.basis(i);
        if a.mul(a.one(), &e) != e || a.mul(&e, a.one()) != e {
            return Err(format!("1*{0} or {0}*1 differs from {0}", a.labels()[i]));
        }
    }
    Ok(String::new())
}

fn check_assoc(a: &HopfData, left: &[SparseVec]) -> Outcome {
    let n = a.dim();
    let bad = left.par_iter().enumerate().find_map_any(|(si, s)| {
        for y in 0..n {
            let sy = a.mul(s, &a.basis(y));
            for z in 0..n {
                let ez = a.basis(z);
                let lhs = a.mul(&sy, &ez);
                let rhs = a.mul(s, a.mult_basis(y, z));
                if lhs != rhs {
                    return Some(format!(
                        "(s{0}*{1})*{2} = {3} but s{0}*({1}*{2}) = {4}",
                        si,
                        a.labels()[y],
                        a.labels()[z],
                        show(a, &lhs),
                        show(a, &rhs)
                    ));
                }
            }
        }
        None
    });
    bad.map_or(Ok(format!("{} left factors", left.len())), Err)
}

fn check_comult_mult(a: &HopfData, left: &[SparseVec]) -> Outcome {
    if a.comul(a.one()) != a.tensor(a.one(), a.one()) {
        return Err("Δ(1) != 1⊗1".into());
    }
    let n = a.dim();
    let bad = left.par_iter().enumerate().find_map_any(|(si, s)| {
        let ds = a.comul(s);
        (0..n).find_map(|y| {
            let lhs = a.comul(&a.mul(s, &a.basis(y)));
            let rhs = a.tensor_mul(&ds, a.comult_basis(y));
            (lhs != rhs).then(|| format!("Δ(s{si}*{}) != Δ(s{si})Δ({})", a.labels()[y], a.labels()[y]))
        })
    });
    bad.map_or(Ok(String::new()), Err)
}

fn check_coassoc(a: &HopfData, elems: &[SparseVec]) -> Outcome {
    let comult = |i: usize| a.comult_basis(i).clone();
    let id = |i: usize| a.basis(i);
    for (si, s) in elems.iter().enumerate() {
        let d = a.comul(s);
        // (Δ⊗id)Δ lands in A⊗A⊗A, flattened as (p·n + q)·n + r.
        let lhs = a.tensor_map(&d, comult, id);
        let n = a.dim();
        let mut rhs = SparseVec::new();
        for (pq, c) in d.iter() {
            let (p, q) = a.unpair(pq);
            for (qr, c2) in a.comult_basis(q).iter() {
                let (q1, q2) = a.unpair(qr);
                rhs.add_term((p * n + q1) * n + q2, &(c * c2));
            }
        }
        if lhs != rhs {
            return Err(format!("coassociativity fails on element {si}"));
        }
    }
    Ok(String::new())
}

fn check_counit(a: &HopfData) -> Outcome {
    for k in 0..a.dim() {
        let d = a.comult_basis(k);
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (pq, c) in d.iter() {
            let (p, q) = a.unpair(pq);
            left.add_term(q, &(c * a.counit_basis(p)));
            right.add_term(p, &(c * a.counit_basis(q)));
        }
        let e = a.basis(k);
        if left != e || right != e {
            return Err(format!("counit law fails at {}", a.labels()[k]));
        }
    }
    Ok(String::new())
}

fn check_counit_mult(a: &HopfData) -> Outcome {
    if !a.counit_of(a.one()).is_one() {
        return Err("ε(1) != 1".into());
    }
    for i in 0..a.dim() {
        let ei = a.counit_basis(i);
        for j in 0..a.dim() {
            let lhs = a.counit_of(a.mult_basis(i, j));
            if lhs != ei * a.counit_basis(j) {
                return Err(format!("ε({0}*{1}) != ε({0})ε({1})", a.labels()[i], a.labels()[j]));
            }
        }
    }
    Ok(String::new())
}

fn check_antipode(a: &HopfData) -> Outcome {
    let bad = (0..a.dim()).into_par_iter().find_map_any(|k| {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (pq, c) in a.comult_basis(k).iter() {
            let (p, q) = a.unpair(pq);
            left.add_scaled(&a.mul(a.antipode_basis(p), &a.basis(q)), c);
            right.add_scaled(&a.mul(&a.basis(p), a.antipode_basis(q)), c);
        }
        let target = a.one().scaled(a.counit_basis(k));
        (left != target || right != target).then(|| format!("antipode axiom fails at {}", a.labels()[k]))
    });
    bad.map_or(Ok(String::new()), Err)
}

fn check_grading(a: &HopfData) -> Outcome {
    let Some(g) = a.grading() else { return Ok("ungraded".into()) };
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if let Some(k) = a.mult_basis(i, j).indices().find(|&k| g[k] != g[i] + g[j]) {
                return Err(format!("{}*{} has a term {} of the wrong degree", a.labels()[i], a.labels()[j], a.labels()[k]));
            }
        }
        if let Some(pq) = a.comult_basis(i).indices().find(|&pq| {
            let (p, q) = a.unpair(pq);
            g[p] + g[q] != g[i]
        }) {
            let (p, q) = a.unpair(pq);
            return Err(format!("Δ({}) has a term {}⊗{} of the wrong degree", a.labels()[i], a.labels()[p], a.labels()[q]));
        }
        if a.antipode_basis(i).indices().any(|k| g[k] != g[i]) {
            return Err(format!("S({}) is not homogeneous", a.labels()[i]));
        }
    }
    Ok(String::new())
}

/// Checks every Hopf algebra axiom, returning one named check per axiom.
pub fn verify_hopf(a: &HopfData) -> Report {
    let mut report = Report::new("hopf axioms");
    let left: Vec<SparseVec> = if a.dim() <= FULL_CHECK_DIM {
        (0..a.dim()).map(|i| a.basis(i)).collect()
    } else {
        let gens = generating_set(a);
        report.record("generation", check_generation(a, &gens));
        gens
    };
    report.record("unit", check_unit(a));
    report.record("associativity", check_assoc(a, &left));
    report.record("comultiplication is multiplicative", check_comult_mult(a, &left));
    let mut coassoc_elems = left.clone();
    coassoc_elems.push(a.one().clone());
    report.record("coassociativity", check_coassoc(a, &coassoc_elems));
    report.record("counit", check_counit(a));
    report.record("counit is multiplicative", check_counit_mult(a));
    report.record("antipode", check_antipode(a));
    report.record("grading", check_grading(a));
    report
}

#[cfg(test)]
mod tests {
    use super::super::tests::{ground_field, z2_group_algebra};
    use super::*;
    use crate::scalar::CycScalar;

    #[test]
    fn small_examples_pass() {
        for a in [ground_field(12), z2_group_algebra(12), z2_group_algebra(12).dual()] {
            let r = verify_hopf(&a);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_antipode_is_caught() {
        let mut parts = z2_group_algebra(12).into_parts();
        parts.antipode[1] = parts.antipode[1].scaled(&CycScalar::from_int(12, 2));
        let r = verify_hopf(&HopfData::new(parts).unwrap());
        assert!(!r.get("antipode").unwrap().passed);
        assert!(r.get("associativity").unwrap().passed);
    }

    #[test]
    fn greedy_generators_generate() {
        let a = z2_group_algebra(12);
        let g = generating_set(&a);
        assert!(check_generation(&a, &g).is_ok());
        assert_eq!(g.len(), 1);
    }
}
