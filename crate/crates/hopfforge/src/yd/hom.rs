use super::{YDModule, YdError};
use crate::linalg::{kernel_of_columns, SparseVec, Subspace};

/// Yetter–Drinfeld maps T: M → N shifting the degree by `shift`, as a
/// subspace of the dim(N)·dim(M) matrices (row-major, entry (w, v) at w·dim(M) + v).
pub fn yd_hom_space(src: &YDModule, dst: &YDModule, shift: i64) -> Result<Subspace, YdError> {
    if src.group != dst.group {
        return Err(YdError::BaseMismatch);
    }
    let (dm, dn, hd) = (src.dim(), dst.dim(), src.group.order());
    let unknowns: Vec<(usize, usize)> = (0..dn)
        .flat_map(|w| (0..dm).map(move |v| (w, v)))
        .filter(|&(w, v)| dst.degrees[w] as i64 == src.degrees[v] as i64 + shift)
        .collect();
    // Equations: T(φ_x·e_v) − φ_x·T(e_v), then λ(T e_v) − (id⊗T)λ(e_v).
    let coaction_offset = hd * dm * dn;
    let columns: Vec<SparseVec> = unknowns
        .iter()
        .map(|&(w, v0)| {
            let mut col = SparseVec::new();
            for x in 0..hd {
                for v in 0..dm {
                    if let Some(c) = src.action[x][v].get(v0) {
                        col.add_term((x * dm + v) * dn + w, c);
                    }
                }
                for (w2, c) in dst.action[x][w].iter() {
                    col.add_term((x * dm + v0) * dn + w2, &-c);
                }
            }
            for (yw, c) in dst.coaction[w].iter() {
                let (y, w2) = (yw / dn, yw % dn);
                col.add_term(coaction_offset + (v0 * hd + y) * dn + w2, c);
            }
            for v in 0..dm {
                for (yu, c) in src.coaction[v].iter() {
                    if yu % dm == v0 {
                        col.add_term(coaction_offset + (v * hd + yu / dm) * dn + w, &-c);
                    }
                }
            }
            col
        })
        .collect();
    let maps: Vec<SparseVec> = kernel_of_columns(&columns, src.m())
        .into_iter()
        .map(|k| k.iter().map(|(u, c)| (unknowns[u].0 * dm + unknowns[u].1, c.clone())).collect())
        .collect();
    Ok(Subspace::span_sparse(src.m(), dm * dn, &maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GroupDatum;

    #[test]
    fn identity_is_a_morphism() {
        let g = GroupDatum::new(12).unwrap();
        let a = YDModule::m_ik(g, 2, 3).unwrap();
        let hom = yd_hom_space(&a, &a, 0).unwrap();
        assert_eq!(hom.dim(), 1);
        let id: SparseVec = [(0, g.one()), (3, g.one())].into_iter().collect();
        assert!(hom.contains_sparse(&id));
        assert_eq!(yd_hom_space(&a, &a, 1).unwrap().dim(), 0);
    }

    #[test]
    fn distinct_simples_have_no_maps() {
        let g = GroupDatum::new(12).unwrap();
        let a = YDModule::m_ik(g, 2, 3).unwrap();
        let b = YDModule::m_ik(g, 2, 9).unwrap();
        let c = YDModule::m_ell(g, 3).unwrap();
        assert_eq!(yd_hom_space(&a, &b, 0).unwrap().dim(), 0);
        assert_eq!(yd_hom_space(&a, &c, 0).unwrap().dim(), 0);
        let ab = YDModule::direct_sum(g, &[a.clone(), b]).unwrap();
        assert_eq!(yd_hom_space(&a, &ab, 0).unwrap().dim(), 1);
    }
}
