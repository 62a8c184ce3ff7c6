//! Coradical, group-likes and skew-primitive elements.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{HopfData, HopfError};
use crate::linalg::{kernel, kernel_of_columns, Mat, SparseEchelon, SparseVec, Subspace};
use crate::scalar::CycScalar;

/// The coradical, computed as the orthogonal of the radical of the trace form
/// of the dual algebra (valid in characteristic zero).
pub fn coradical(a: &HopfData) -> Subspace {
    let n = a.dim();
    // (k, q) ↦ [(p, coefficient of e_p⊗e_q in Δ(e_k))]
    let mut by_second: HashMap<(usize, usize), Vec<(usize, CycScalar)>> = HashMap::new();
    for k in 0..n {
        for (pq, c) in a.comult_basis(k).iter() {
            let (p, q) = a.unpair(pq);
            by_second.entry((k, q)).or_default().push((p, c.clone()));
        }
    }
    let mut rows = vec![SparseVec::new(); n];
    for k in 0..n {
        for (jb, c) in a.comult_basis(k).iter() {
            let (j, b) = a.unpair(jb);
            if let Some(list) = by_second.get(&(b, k)) {
                for (i, c2) in list {
                    rows[*i].add_term(j, &(c * c2));
                }
            }
        }
    }
    let mut ech = SparseEchelon::new();
    let basis: Vec<SparseVec> = rows.into_iter().filter(|r| ech.insert(r)).collect();
    Subspace::span_sparse(a.m(), n, &basis)
}

/// (g, h)-skew primitives: elements x with Δx = g⊗x + x⊗h.
pub fn skew_primitives(a: &HopfData, g: &SparseVec, h: &SparseVec) -> Result<Vec<SparseVec>, HopfError> {
    for (name, x) in [("g", g), ("h", h)] {
        if x.is_zero() || a.comul(x) != a.tensor(x, x) {
            return Err(HopfError::InvalidGroupLike(name.into()));
        }
    }
    let cols: Vec<SparseVec> = (0..a.dim())
        .map(|i| {
            let e = a.basis(i);
            let mut c = a.comult_basis(i).clone();
            c = c.sub(&a.tensor(g, &e));
            c.sub(&a.tensor(&e, h))
        })
        .collect();
    Ok(kernel_of_columns(&cols, a.m()))
}

pub fn primitives(a: &HopfData) -> Vec<SparseVec> {
    let one = a.one().clone();
    skew_primitives(a, &one, &one).expect("1 is group-like")
}

/// The largest subcoalgebra of `c` on which Δ³ is symmetric in the middle
/// two factors; it is cocommutative and contains every group-like.
fn cocommutative_part(a: &HopfData, c: &Subspace) -> Vec<SparseVec> {
    let n = a.dim();
    let cols: Vec<SparseVec> = c
        .basis_sparse()
        .iter()
        .map(|v| {
            let mut out = SparseVec::new();
            let d = a.comul(v);
            for (pq, c1) in d.iter() {
                let (p, q) = a.unpair(pq);
                for (rs, c2) in a.comult_basis(q).iter() {
                    let (r, s) = a.unpair(rs);
                    let c12 = c1 * c2;
                    for (tu, c3) in a.comult_basis(s).iter() {
                        let (t, u) = a.unpair(tu);
                        let w = &c12 * c3;
                        out.add_term(((p * n + r) * n + t) * n + u, &w);
                        out.add_term(((p * n + t) * n + r) * n + u, &-&w);
                    }
                }
            }
            out
        })
        .collect();
    let cb = c.basis_sparse();
    kernel_of_columns(&cols, a.m())
        .into_iter()
        .map(|k| {
            let mut v = SparseVec::new();
            for (i, coef) in k.iter() {
                v.add_scaled(&cb[i], coef);
            }
            v
        })
        .collect()
}

/// The group-like elements, found by splitting the cocommutative part of the
/// coradical under the operators x ↦ (f⊗id)Δx. Fails with
/// [`HopfError::NotSplit`] if the splitting needs irrational eigenvalues.
pub fn group_likes(a: &HopfData) -> Result<Vec<SparseVec>, HopfError> {
    let w = cocommutative_part(a, &coradical(a));
    let mut funcs: Vec<usize> = w.iter().flat_map(|v| v.indices()).collect();
    funcs.sort_unstable();
    funcs.dedup();
    let mut parts = vec![w];
    for &f in &funcs {
        if parts.iter().all(|p| p.len() <= 1) {
            break;
        }
        let mut next = Vec::new();
        for part in parts {
            if part.len() <= 1 {
                next.push(part);
            } else {
                next.extend(split(a, &part, f)?);
            }
        }
        parts = next;
    }
    let mut out = Vec::new();
    for part in parts {
        let [g] = part.as_slice() else {
            return Err(HopfError::NotSplit(format!("a {}-dimensional block does not split", part.len())));
        };
        let e = a.counit_of(g);
        let g = g.scaled(&e.inverse().map_err(|_| HopfError::InvalidGroupLike("ε(g) = 0".into()))?);
        if a.comul(&g) != a.tensor(&g, &g) {
            return Err(HopfError::InvalidGroupLike(format!("{g:?}")));
        }
        out.push(g);
    }
    out.sort_by(|x, y| x.iter().map(|(i, _)| i).cmp(y.iter().map(|(i, _)| i)));
    Ok(out)
}

/// Eigenspaces of x ↦ (e^f ⊗ id)Δx on span(part).
fn split(a: &HopfData, part: &[SparseVec], f: usize) -> Result<Vec<Vec<SparseVec>>, HopfError> {
    let d = part.len();
    let space = Subspace::span_sparse(a.m(), a.dim(), part);
    let basis = space.basis_sparse();
    let mut mat = Mat::zeros(a.m(), d, d);
    for (j, v) in basis.iter().enumerate() {
        let mut img = SparseVec::new();
        for (pq, c) in a.comul(v).iter() {
            let (p, q) = a.unpair(pq);
            if p == f {
                img.add_term(q, c);
            }
        }
        let coords = space.coordinates(&img.to_dense(a.dim(), a.m())).ok_or_else(|| HopfError::Inconsistent("block is not invariant".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            mat.set(i, j, c);
        }
    }
    let roots = rational_roots(&charpoly(&mat))?;
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::new();
    for r in roots {
        let mut shifted = mat.clone();
        for i in 0..d {
            let v = shifted.get(i, i) - &CycScalar::from_rational(a.m(), &r);
            shifted.set(i, i, v);
        }
        let ker = kernel(&shifted);
        let vecs: Vec<SparseVec> = ker
            .basis()
            .iter()
            .map(|coords| {
                let mut v = SparseVec::new();
                for (i, c) in coords.iter().enumerate() {
                    v.add_scaled(&basis[i], c);
                }
                v
            })
            .collect();
        out.push(vecs);
    }
    if out.iter().map(Vec::len).sum::<usize>() != d {
        return Err(HopfError::NotSplit("operator is not diagonalizable".into()));
    }
    Ok(out)
}

/// Characteristic polynomial, low degree first, by Faddeev–LeVerrier.
fn charpoly(m: &Mat) -> Vec<CycScalar> {
    let n = m.rows();
    let field = m.m();
    let mut coeffs = vec![CycScalar::zero(field); n + 1];
    coeffs[n] = CycScalar::one(field);
    let mut acc = Mat::zeros(field, n, n);
    for k in 1..=n {
        let mut shifted = acc.clone();
        for i in 0..n {
            let v = shifted.get(i, i) + &coeffs[n - k + 1];
            shifted.set(i, i, v);
        }
        acc = m.mul(&shifted).expect("square");
        let mut tr = CycScalar::zero(field);
        for i in 0..n {
            tr += acc.get(i, i);
        }
        coeffs[n - k] = -(&tr * &CycScalar::from_ratio(field, 1, k as i64).expect("k > 0"));
    }
    coeffs
}

/// Distinct rational roots; fails unless the polynomial splits over Q.
fn rational_roots(poly: &[CycScalar]) -> Result<Vec<BigRational>, HopfError> {
    let not_split = |why: &str| HopfError::NotSplit(why.to_string());
    let rat: Vec<BigRational> = poly.iter().map(|c| c.to_rational().ok_or_else(|| not_split("irrational characteristic polynomial"))).collect::<Result<_, _>>()?;
    let lcm = rat.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut ints: Vec<BigInt> = rat.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let mut degree = ints.len() - 1;
    while ints[0].is_zero() && degree > 0 {
        ints.remove(0);
        degree -= 1;
        if !roots.contains(&BigRational::zero()) {
            roots.push(BigRational::zero());
        }
    }
    while degree > 0 {
        let lead = ints[degree].clone();
        let constant = ints[0].clone();
        let root = divisors(&constant)?
            .into_iter()
            .flat_map(|p| [p.clone(), -p])
            .flat_map(|p| divisors(&lead).unwrap_or_default().into_iter().map(move |q| BigRational::new(p.clone(), q)))
            .find(|r| eval(&ints, r).is_zero())
            .ok_or_else(|| not_split("no rational root"))?;
        ints = deflate(&ints, &root);
        degree -= 1;
        if !roots.contains(&root) {
            roots.push(root);
        }
    }
    Ok(roots)
}

fn eval(poly: &[BigInt], x: &BigRational) -> BigRational {
    poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

/// Divides by (x − root), keeping integer coefficients up to a common factor.
fn deflate(poly: &[BigInt], root: &BigRational) -> Vec<BigInt> {
    let n = poly.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for i in (1..=n).rev() {
        carry = carry * root + BigRational::from_integer(poly[i].clone());
        q[i - 1] = carry.clone();
    }
    let lcm = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    q.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

fn divisors(x: &BigInt) -> Result<Vec<BigInt>, HopfError> {
    let v = x.abs().to_u64().ok_or_else(|| HopfError::NotSplit("coefficient too large".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::tests::z2_group_algebra;
    use super::*;

    #[test]
    fn group_algebra_is_its_own_coradical() {
        let a = z2_group_algebra(12);
        assert_eq!(coradical(&a).dim(), 2);
        let g = group_likes(&a).unwrap();
        assert_eq!(g, vec![a.basis(0), a.basis(1)]);
        assert!(primitives(&a).is_empty());
    }

    #[test]
    fn dual_group_likes_are_characters() {
        let d = z2_group_algebra(12).dual();
        let g = group_likes(&d).unwrap();
        assert_eq!(g.len(), 2);
        let one = CycScalar::one(12);
        assert!(g.contains(&SparseVec::from_terms([(0, one.clone()), (1, one.clone())])));
        assert!(g.contains(&SparseVec::from_terms([(0, one.clone()), (1, -&one)])));
    }

    #[test]
    fn rational_roots_of_split_polynomial() {
        let m = 12;
        // (x − 1)(x + 2)x = x³ + x² − 2x
        let p: Vec<CycScalar> = [0, -2, 1, 1].iter().map(|&v| CycScalar::from_int(m, v)).collect();
        let mut r = rational_roots(&p).unwrap();
        r.sort();
        let want: Vec<BigRational> = [-2, 0, 1].iter().map(|&v| BigRational::from_integer(v.into())).collect();
        assert_eq!(r, want);
        let q: Vec<CycScalar> = [-2, 0, 1].iter().map(|&v| CycScalar::from_int(m, v)).collect();
        assert!(matches!(rational_roots(&q), Err(HopfError::NotSplit(_))));
    }

    #[test]
    fn skew_primitive_rejects_non_group_like() {
        let a = z2_group_algebra(12);
        let mut bad = a.basis(0);
        bad.add(&a.basis(1));
        assert!(matches!(skew_primitives(&a, &bad, &a.basis(0)), Err(HopfError::InvalidGroupLike(_))));
    }
}
