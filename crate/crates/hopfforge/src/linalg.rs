//! Exact linear algebra over Q(ω): dense matrices with Gaussian elimination,
//! canonical subspaces, and a sparse vector type used for structure constants.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::scalar::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
}

/// A sparse vector: basis index → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec(BTreeMap<usize, CycScalar>);

impl SparseVec {
    pub fn new() -> Self {
        Self(BTreeMap::new())
    }

    pub fn unit(i: usize, m: u32) -> Self {
        Self::single(i, CycScalar::one(m))
    }

    pub fn single(i: usize, c: CycScalar) -> Self {
        let mut v = Self::new();
        v.add_term(i, &c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, CycScalar)>>(terms: I) -> Self {
        let mut v = Self::new();
        for (i, c) in terms {
            v.add_term(i, &c);
        }
        v
    }

    pub fn from_dense(d: &[CycScalar]) -> Self {
        Self(d.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
    }

    pub fn to_dense(&self, dim: usize, m: u32) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(m); dim];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Option<&CycScalar> {
        self.0.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &CycScalar)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn first(&self) -> Option<(usize, &CycScalar)> {
        self.0.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, i: usize, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.0.remove(&i);
                }
            }
            None => {
                self.0.insert(i, c.clone());
            }
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &SparseVec, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (i, v) in other.iter() {
            if unit {
                self.add_term(i, v);
            } else {
                self.add_term(i, &(v * c));
            }
        }
    }

    pub fn add(&mut self, other: &SparseVec) {
        for (i, v) in other.iter() {
            self.add_term(i, v);
        }
    }

    pub fn scaled(&self, c: &CycScalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        Self(self.0.iter().map(|(i, v)| (*i, v * c)).collect())
    }

    pub fn neg(&self) -> SparseVec {
        Self(self.0.iter().map(|(i, v)| (*i, -v)).collect())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        for (i, v) in other.iter() {
            out.add_term(i, &-v);
        }
        out
    }

    /// Applies a linear map given by the images of basis vectors.
    pub fn map_through(&self, images: &[SparseVec]) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in self.iter() {
            out.add_scaled(&images[i], c);
        }
        out
    }

    pub fn dot_dense(&self, f: &[CycScalar]) -> Option<CycScalar> {
        let mut acc: Option<CycScalar> = None;
        for (i, c) in self.iter() {
            let t = c * &f[i];
            acc = Some(match acc {
                Some(a) => &a + &t,
                None => t,
            });
        }
        acc
    }
}

impl FromIterator<(usize, CycScalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, CycScalar)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

/// Dense matrix with `rows × cols` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    m: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl Mat {
    pub fn zeros(m: u32, rows: usize, cols: usize) -> Self {
        Self { m, rows, cols, data: vec![CycScalar::zero(m); rows * cols] }
    }

    pub fn identity(m: u32, n: usize) -> Self {
        let mut a = Self::zeros(m, n, n);
        for i in 0..n {
            a.set(i, i, CycScalar::one(m));
        }
        a
    }

    pub fn from_rows(m: u32, cols: usize, rows: Vec<Vec<CycScalar>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!("row of length {} in {}-column matrix", r.len(), cols)));
            }
            data.extend(r);
        }
        Ok(Self { m, rows: n, cols, data })
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(m: u32, rows: usize, cols: &[SparseVec]) -> Self {
        let mut a = Self::zeros(m, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter() {
                a.set(i, j, v.clone());
            }
        }
        a
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<CycScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.m, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Mat::zeros(self.m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Result<Vec<CycScalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!("{}-column matrix times {}-vector", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = CycScalar::zero(self.m);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        rref(&mut rows, self.cols).len()
    }
}

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot columns. Pivots are chosen by smallest coefficient size
/// to limit fraction growth.
pub fn rref(rows: &mut Vec<Vec<CycScalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let mut best: Option<(usize, u64)> = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            if !row[c].is_zero() {
                let s = if row[c].is_one() { 0 } else { row[c].height() };
                if best.is_none_or(|(_, bs)| s < bs) {
                    best = Some((i, s));
                }
                if s == 0 {
                    break;
                }
            }
        }
        let Some((p, _)) = best else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in rows[r][c..].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let pivot_row: Vec<(usize, CycScalar)> =
            rows[r].iter().enumerate().skip(c).filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (j, v) in &pivot_row {
                row[*j] = &row[*j] - &(v * &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A subspace of k^n, stored by its canonical reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    m: u32,
    ambient: usize,
    basis: Vec<Vec<CycScalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(m: u32, ambient: usize) -> Self {
        Self { m, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(m: u32, ambient: usize) -> Self {
        Self::span(m, ambient, Mat::identity(m, ambient).row_vecs()).expect("identity rows have the right length")
    }

    pub fn span(m: u32, ambient: usize, mut vectors: Vec<Vec<CycScalar>>) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::DimensionMismatch(format!("vector of length {} in ambient dimension {}", v.len(), ambient)));
        }
        let pivots = rref(&mut vectors, ambient);
        Ok(Self { m, ambient, basis: vectors, pivots })
    }

    pub fn span_sparse(m: u32, ambient: usize, vectors: &[SparseVec]) -> Self {
        let dense = vectors.iter().map(|v| v.to_dense(ambient, m)).collect();
        Self::span(m, ambient, dense).expect("sparse vectors fit the ambient space")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<CycScalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_sparse(&self) -> Vec<SparseVec> {
        self.basis.iter().map(|v| SparseVec::from_dense(v)).collect()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(format!("ambient {} vs {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[CycScalar]) -> Option<Vec<CycScalar>> {
        let coords: Vec<CycScalar> = self.pivots.iter().map(|p| v[*p].clone()).collect();
        let mut rebuilt = vec![CycScalar::zero(self.m); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (j, x) in b.iter().enumerate() {
                if !x.is_zero() {
                    rebuilt[j] = &rebuilt[j] + &(c * x);
                }
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.contains(&v.to_dense(self.ambient, self.m))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.m, self.ambient, all)
    }

    /// Orthogonal complement under the standard pairing Σ x_i y_i.
    pub fn annihilator(&self) -> Subspace {
        let a = Mat::from_rows(self.m, self.ambient, self.basis.clone()).expect("basis rows match ambient");
        kernel(&a)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let both = self.annihilator().sum(&other.annihilator())?;
        Ok(both.annihilator())
    }
}

/// Null space of `a` as a subspace of k^{cols}.
pub fn kernel(a: &Mat) -> Subspace {
    let mut rows = a.row_vecs();
    let pivots = rref(&mut rows, a.cols());
    let m = a.m();
    let mut basis = Vec::new();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; a.cols()];
        for p in &pivots {
            v[*p] = true;
        }
        v
    };
    for free in (0..a.cols()).filter(|c| !is_pivot[*c]) {
        let mut v = vec![CycScalar::zero(m); a.cols()];
        v[free] = CycScalar::one(m);
        for (row, p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[*p] = -&row[free];
            }
        }
        basis.push(v);
    }
    Subspace::span(m, a.cols(), basis).expect("kernel vectors have the right length")
}

/// Column space of `a` as a subspace of k^{rows}.
pub fn image(a: &Mat) -> Subspace {
    Subspace::span(a.m(), a.rows(), a.transpose().row_vecs()).expect("columns have the right length")
}

/// Some solution of a·x = b.
pub fn solve(a: &Mat, b: &[CycScalar]) -> Result<Vec<CycScalar>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch(format!("{} rows vs right-hand side of length {}", a.rows(), b.len())));
    }
    let n = a.cols();
    let mut rows: Vec<Vec<CycScalar>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Err(LinalgError::NoSolution);
    }
    let mut x = vec![CycScalar::zero(a.m()); n];
    for (row, p) in rows.iter().zip(&pivots) {
        x[*p] = row[n].clone();
    }
    Ok(x)
}

/// Incremental semi-echelon basis over sparse vectors; rows are keyed by
/// their leading index and normalized to leading coefficient one.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: HashMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = v.0.range(cursor..).map(|(k, c)| (*k, c.clone())).find(|(k, _)| self.rows.contains_key(k));
            let Some((k, c)) = next else { break };
            v.add_scaled(&self.rows[&k], &-&c);
            cursor = k + 1;
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((k, lead)) = r.first() else { return false };
        let inv = lead.inverse().expect("leading coefficient is nonzero");
        let r = r.scaled(&inv);
        self.rows.insert(k, r);
        true
    }
}

/// Kernel of the linear map whose column images are `columns`, returned as
/// sparse coefficient vectors over the column indices.
pub fn kernel_of_columns(columns: &[SparseVec], m: u32) -> Vec<SparseVec> {
    let mut rows: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo = SparseVec::unit(j, m);
        let mut cursor = 0usize;
        loop {
            let next = v.0.range(cursor..).map(|(k, c)| (*k, c.clone())).find(|(k, _)| rows.contains_key(k));
            let Some((k, c)) = next else { break };
            let (row, row_combo) = &rows[&k];
            let f = -&c;
            v.add_scaled(row, &f);
            combo.add_scaled(row_combo, &f);
            cursor = k + 1;
        }
        match v.first() {
            None => out.push(combo),
            Some((k, lead)) => {
                let inv = lead.inverse().expect("leading coefficient is nonzero");
                rows.insert(k, (v.scaled(&inv), combo.scaled(&inv)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const M: u32 = 12;

    fn s(v: i64) -> CycScalar {
        CycScalar::from_int(M, v)
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Mat::identity(M, 3)).dim(), 0);
        assert_eq!(image(&Mat::zeros(M, 3, 2)).dim(), 0);
        let a = Mat::from_rows(M, 2, vec![vec![s(1), s(1)]]).unwrap();
        let k = kernel(&a);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[s(1), s(-1)]));
    }

    #[test]
    fn subspace_examples() {
        let u = Subspace::span(M, 2, vec![vec![s(1), s(0)]]).unwrap();
        let v = Subspace::span(M, 2, vec![vec![s(0), s(1)]]).unwrap();
        assert_eq!(u.intersection(&v).unwrap().dim(), 0);
        assert_eq!(u.intersection(&u).unwrap(), u);
        assert_eq!(u.dim() + u.annihilator().dim(), 2);
        assert!(u.sum(&v).unwrap().contains_subspace(&u).unwrap());
        let w = Subspace::span(M, 3, vec![]).unwrap();
        assert!(matches!(u.sum(&w), Err(LinalgError::DimensionMismatch(_))));
    }

    #[test]
    fn solve_finds_solution_or_reports_none() {
        let w = CycScalar::root_power(M, 1);
        let a = Mat::from_rows(M, 2, vec![vec![w.clone(), s(1)], vec![s(0), s(2)]]).unwrap();
        let x = solve(&a, &[s(3), s(4)]).unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![s(3), s(4)]);
        let sing = Mat::from_rows(M, 2, vec![vec![s(1), s(1)], vec![s(2), s(2)]]).unwrap();
        assert_eq!(solve(&sing, &[s(1), s(1)]), Err(LinalgError::NoSolution));
    }

    #[test]
    fn kernel_of_columns_finds_relations() {
        let cols = vec![
            SparseVec::from_terms([(0, s(1)), (1, s(1))]),
            SparseVec::from_terms([(1, s(2))]),
            SparseVec::from_terms([(0, s(2)), (1, s(4))]),
        ];
        let k = kernel_of_columns(&cols, M);
        assert_eq!(k.len(), 1);
        let mut total = SparseVec::new();
        for (j, c) in k[0].iter() {
            total.add_scaled(&cols[j], c);
        }
        assert!(total.is_zero());
    }

    #[test]
    fn sparse_echelon_tracks_span() {
        let mut e = SparseEchelon::new();
        let a = SparseVec::from_terms([(0, s(1)), (2, s(1))]);
        let b = SparseVec::from_terms([(2, s(1)), (3, s(2))]);
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        let c = SparseVec::from_terms([(0, s(2)), (2, s(3)), (3, s(2))]);
        assert!(e.contains(&c));
        assert!(!e.insert(&c));
        assert!(!e.contains(&SparseVec::unit(1, M)));
        assert_eq!(e.dim(), 2);
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<CycScalar>>> {
        proptest::collection::vec(proptest::collection::vec((-2i64..3, 0i64..12, proptest::bool::weighted(0.4)), cols), rows)
            .prop_map(|rs| {
                rs.into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|(c, e, nz)| if nz { &CycScalar::from_int(M, c) * &CycScalar::root_power(M, e) } else { CycScalar::zero(M) })
                            .collect()
                    })
                    .collect()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn dimension_formula_for_sum_and_intersection(
            n in 1usize..8,
            a in arb_matrix(4, 8),
            b in arb_matrix(4, 8),
        ) {
            let cut = |rows: Vec<Vec<CycScalar>>| rows.into_iter().map(|r| r[..n].to_vec()).collect::<Vec<_>>();
            let u = Subspace::span(M, n, cut(a)).unwrap();
            let v = Subspace::span(M, n, cut(b)).unwrap();
            let sum = u.sum(&v).unwrap();
            let int = u.intersection(&v).unwrap();
            prop_assert_eq!(sum.dim() + int.dim(), u.dim() + v.dim());
            prop_assert!(sum.contains_subspace(&int).unwrap());
            prop_assert!(u.contains_subspace(&int).unwrap());
            prop_assert_eq!(v.sum(&u).unwrap(), sum);
        }

        #[test]
        fn rank_nullity(a in arb_matrix(5, 7)) {
            let mat = Mat::from_rows(M, 7, a).unwrap();
            prop_assert_eq!(mat.rank() + kernel(&mat).dim(), 7);
            for v in kernel(&mat).basis() {
                prop_assert!(mat.mul_vec(v).unwrap().iter().all(|c| c.is_zero()));
            }
        }
    }
}
