//! Exact arithmetic over prime fields GF(p) and canonical subspace algebra.
//!
//! Subspaces are kept in reduced row echelon form, so two values represent
//! the same subspace exactly when their basis matrices are bit-for-bit equal.
//! This is what lets geometries index objects by subspace identity.

use serde::Serialize;
use std::fmt;

/// A prime field GF(p) for small p. Supported: 2, 3, 5, 7.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub fn new(p: u8) -> PrimeField {
        assert!(
            matches!(p, 2 | 3 | 5 | 7),
            "unsupported field cardinality {p}"
        );
        PrimeField { p }
    }

    #[inline]
    pub fn order(&self) -> u8 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        (a as u16 * b as u16 % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        (self.p - a) % self.p
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "division by zero in GF({})", self.p);
        // p <= 7, a linear scan beats anything clever
        for x in 1..self.p {
            if self.mul(a, x) == 1 {
                return x;
            }
        }
        unreachable!()
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.p
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// A dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u8>]) -> Mat {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &x in row {
                assert!(x < field.order());
                data.push(x);
            }
        }
        Mat {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(v < self.field.order());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let f = self.field;
        let p = f.order() as u16;
        let mut out = Mat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let a = a as u16;
                for j in 0..other.cols {
                    let cur = out.get(i, j) as u16;
                    out.set(i, j, ((cur + a * other.get(k, j) as u16) % p) as u8);
                }
            }
        }
        out
    }

    /// Matrix-vector product with the vector as a row: returns `v * self^T`,
    /// i.e. the image of column vector `v` under `self`, written as a row.
    pub fn apply_to_row(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let p = f.order() as u16;
        let mut out = vec![0u8; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u16;
            for j in 0..self.cols {
                acc = (acc + self.get(i, j) as u16 * v[j] as u16) % p;
            }
            out[i] = acc as u8;
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.field, self.rows)
    }

    /// Unique reduced row echelon form; the row space is preserved.
    pub fn rref(&self) -> Mat {
        let mut m = self.clone();
        m.rref_in_place();
        m
    }

    fn rref_in_place(&mut self) {
        let f = self.field;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let mut sel = None;
            for r in pivot_row..self.rows {
                if self.get(r, col) != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            self.swap_rows(pivot_row, sel);
            let inv = f.inv(self.get(pivot_row, col));
            if inv != 1 {
                for j in 0..self.cols {
                    let v = self.get(pivot_row, j);
                    self.set(pivot_row, j, f.mul(v, inv));
                }
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = self.get(r, j);
                    let sub = f.mul(factor, self.get(pivot_row, j));
                    self.set(r, j, f.sub(v, sub));
                }
            }
            pivot_row += 1;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows)
            .filter(|&i| r.row(i).iter().any(|&x| x != 0))
            .count()
    }

    /// Basis of the right null space `{x : self * x = 0}`, returned as the
    /// rows of a matrix in RREF.
    pub fn kernel(&self) -> Mat {
        let f = self.field;
        let r = self.rref();
        let mut pivots = Vec::new();
        let mut pivot_of_row = Vec::new();
        for i in 0..r.rows {
            if let Some(j) = (0..r.cols).find(|&j| r.get(i, j) != 0) {
                pivots.push(j);
                pivot_of_row.push(j);
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &j in &free {
            let mut v = vec![0u8; self.cols];
            v[j] = 1;
            for (i, &pj) in pivot_of_row.iter().enumerate() {
                // pivot variable = -(entry in free column)
                v[pj] = f.neg(r.get(i, j));
            }
            rows.push(v);
        }
        Mat::from_rows(f, &rows).rref()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A canonically represented subspace of GF(p)^n: the basis matrix is in
/// reduced row echelon form with no zero rows, so equality of subspaces is
/// equality of representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Mat,
    ambient: usize,
}

impl Subspace {
    pub fn from_spanning(m: &Mat) -> Subspace {
        let r = m.rref();
        let nonzero: Vec<Vec<u8>> = (0..r.rows())
            .map(|i| r.row(i).to_vec())
            .filter(|row| row.iter().any(|&x| x != 0))
            .collect();
        Subspace {
            basis: Mat::from_rows(m.field(), &nonzero),
            ambient: m.cols(),
        }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, vecs: &[Vec<u8>]) -> Subspace {
        if vecs.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_spanning(&Mat::from_rows(field, vecs))
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Subspace {
        Subspace {
            basis: Mat {
                field,
                rows: 0,
                cols: ambient,
                data: Vec::new(),
            },
            ambient,
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Subspace {
        Subspace {
            basis: Mat::identity(field, ambient),
            ambient,
        }
    }

    pub fn line(field: PrimeField, v: &[u8]) -> Subspace {
        Subspace::from_vectors(field, v.len(), &[v.to_vec()])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical byte key; used for ordering and hashing geometry objects.
    pub fn key_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + self.basis.data().len());
        out.push(self.dim() as u8);
        out.extend_from_slice(self.basis.data());
        out
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut v = v.to_vec();
        for i in 0..self.basis.rows() {
            let pivot = (0..self.ambient)
                .find(|&j| self.basis.get(i, j) != 0)
                .expect("no zero rows in basis");
            let c = v[pivot];
            if c != 0 {
                for j in 0..self.ambient {
                    v[j] = f.sub(v[j], f.mul(c, self.basis.get(i, j)));
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        (0..other.basis.rows()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        Subspace::from_spanning(&self.basis.vstack(&other.basis))
    }

    /// Intersection by the Zassenhaus block trick: row-reduce [A|A; B|0] and
    /// read the intersection basis from rows whose left half vanished.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let f = self.field();
        let n = self.ambient;
        let mut rows = Vec::new();
        for i in 0..self.basis.rows() {
            let mut row = self.basis.row(i).to_vec();
            row.extend_from_slice(self.basis.row(i));
            rows.push(row);
        }
        for i in 0..other.basis.rows() {
            let mut row = other.basis.row(i).to_vec();
            row.extend(std::iter::repeat(0u8).take(n));
            rows.push(row);
        }
        if rows.is_empty() {
            return Subspace::zero(f, n);
        }
        let reduced = Mat::from_rows(f, &rows).rref();
        let mut inter_rows = Vec::new();
        for i in 0..reduced.rows() {
            let left_zero = (0..n).all(|j| reduced.get(i, j) == 0);
            let right = reduced.row(i)[n..].to_vec();
            if left_zero && right.iter().any(|&x| x != 0) {
                inter_rows.push(right);
            }
        }
        Subspace::from_vectors(f, n, &inter_rows)
    }

    pub fn meets_trivially(&self, other: &Subspace) -> bool {
        self.intersect(other).dim() == 0
    }

    /// Image under an invertible matrix acting on column vectors.
    pub fn image(&self, g: &Mat) -> Subspace {
        assert_eq!(g.cols(), self.ambient);
        let rows: Vec<Vec<u8>> = (0..self.basis.rows())
            .map(|i| g.apply_to_row(self.basis.row(i)))
            .collect();
        Subspace::from_vectors(self.field(), g.rows(), &rows)
    }

    /// All vectors of the subspace, including zero, in the lexicographic
    /// order of coefficient tuples over the canonical basis.
    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let f = self.field();
        let k = self.dim();
        let q = f.order() as usize;
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total);
        for idx in 0..total {
            let mut rem = idx;
            let mut v = vec![0u8; self.ambient];
            for row in (0..k).rev() {
                let c = (rem % q) as u8;
                rem /= q;
                if c != 0 {
                    for j in 0..self.ambient {
                        v[j] = f.add(v[j], f.mul(c, self.basis.get(row, j)));
                    }
                }
            }
            out.push(v);
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}^{})", self.dim(), "F", self.ambient)?;
        for i in 0..self.basis.rows() {
            write!(f, " {:?}", self.basis.row(i))?;
        }
        Ok(())
    }
}

/// All nonzero vectors of GF(q)^n in lexicographic coordinate order.
pub fn nonzero_vectors(field: PrimeField, n: usize) -> Vec<Vec<u8>> {
    let q = field.order() as usize;
    let total = q.pow(n as u32);
    let mut out = Vec::with_capacity(total - 1);
    for idx in 1..total {
        let mut rem = idx;
        let mut v = vec![0u8; n];
        for j in (0..n).rev() {
            v[j] = (rem % q) as u8;
            rem /= q;
        }
        out.push(v);
    }
    out.sort();
    out
}

/// All k-dimensional subspaces of GF(q)^n, generated by iterating RREF pivot
/// patterns and filling the free entries. The count matches the Gaussian
/// binomial coefficient.
pub fn enumerate_subspaces(field: PrimeField, n: usize, k: usize) -> Vec<Subspace> {
    assert!(k <= n);
    if k == 0 {
        return vec![Subspace::zero(field, n)];
    }
    let q = field.order() as usize;
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions: (row i, col j) with j > pivots[i], j not a pivot
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in (p + 1)..n {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let count = q.pow(free.len() as u32);
        for mut idx in 0..count {
            let mut m = Mat::zero(field, k, n);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(i, p, 1);
            }
            for &(i, j) in &free {
                m.set(i, j, (idx % q) as u8);
                idx /= q;
            }
            out.push(Subspace {
                basis: m,
                ambient: n,
            });
        }
        // next pivot combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_by(|a, b| a.key_bytes().cmp(&b.key_bytes()));
                return out;
            }
            i -= 1;
            if pivots[i] < n - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[i] + (j - i);
                }
                break;
            }
        }
    }
}

/// Gaussian binomial coefficient: the number of k-subspaces of GF(q)^n.
pub fn gaussian_binomial(q: u64, n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u8) -> PrimeField {
        PrimeField::new(p)
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u8, 3, 5, 7] {
            let f = gf(p);
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
        }
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf(3);
        let id = Mat::identity(f, 4);
        assert_eq!(id.rref(), id);
        let z = Mat::zero(f, 3, 4);
        assert_eq!(z.rref(), z);
        assert_eq!(z.rank(), 0);
    }

    /// Independent oracle: naive elimination that only ever uses row swaps
    /// and row subtractions, then normalizes at the end.
    fn naive_row_space_canonical(m: &Mat) -> Vec<Vec<u8>> {
        let f = m.field();
        let mut rows: Vec<Vec<u8>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let n = m.cols();
        let mut done: Vec<Vec<u8>> = Vec::new();
        for col in 0..n {
            if let Some(pos) = rows.iter().position(|r| r[col] != 0) {
                let mut pivot = rows.remove(pos);
                let inv = f.inv(pivot[col]);
                for x in pivot.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                for r in rows.iter_mut() {
                    let c = r[col];
                    if c != 0 {
                        for j in 0..n {
                            r[j] = f.sub(r[j], f.mul(c, pivot[j]));
                        }
                    }
                }
                for r in done.iter_mut() {
                    let c = r[col];
                    if c != 0 {
                        for j in 0..n {
                            r[j] = f.sub(r[j], f.mul(c, pivot[j]));
                        }
                    }
                }
                done.push(pivot);
            }
        }
        done
    }

    #[test]
    fn rref_matches_naive_oracle_gf3() {
        let f = gf(3);
        let m = Mat::from_rows(f, &[vec![2, 1], vec![1, 2]]);
        let r = m.rref();
        let expect = naive_row_space_canonical(&m);
        // (2,1) and (1,2) are dependent over GF(3): (1,2) = 2*(2,1)
        assert_eq!(expect.len(), 1);
        assert_eq!(r.row(0), expect[0].as_slice());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_matches_naive_oracle_random() {
        // deterministic LCG so the case list is stable
        let mut state = 0x12345678u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for p in [2u8, 3, 5] {
            let f = gf(p);
            for _ in 0..50 {
                let rows = 1 + next() % 4;
                let cols = 1 + next() % 5;
                let data: Vec<Vec<u8>> = (0..rows)
                    .map(|_| (0..cols).map(|_| (next() % p as usize) as u8).collect())
                    .collect();
                let m = Mat::from_rows(f, &data);
                let r = m.rref();
                let oracle = naive_row_space_canonical(&m);
                let got: Vec<Vec<u8>> = (0..r.rows())
                    .map(|i| r.row(i).to_vec())
                    .filter(|row| row.iter().any(|&x| x != 0))
                    .collect();
                assert_eq!(got, oracle);
                assert_eq!(r.rref(), r, "rref must be idempotent");
            }
        }
    }

    #[test]
    fn sum_and_intersect_basics() {
        let f = gf(2);
        let u = Subspace::from_vectors(f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let z = Subspace::zero(f, 4);
        assert_eq!(u.sum(&z), u);
        assert_eq!(u.intersect(&u), u);
        let w = Subspace::from_vectors(f, 4, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let s = u.sum(&w);
        let i = u.intersect(&w);
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&[0, 1, 0, 0]));
    }

    #[test]
    fn containment_and_trivial_meet() {
        let f = gf(2);
        let v = Subspace::full(f, 3);
        let e1 = Subspace::line(f, &[1, 0, 0]);
        let e2 = Subspace::line(f, &[0, 1, 0]);
        assert!(v.contains(&e1));
        assert!(e1.meets_trivially(&e2));
        let plane = Subspace::from_vectors(f, 3, &[vec![1, 1, 0], vec![0, 1, 0]]);
        assert!(!e1.meets_trivially(&plane));
    }

    #[test]
    fn dimension_formula_sampled_pairs_gf2_6() {
        // oracle: membership count gives |U|, so dim via logarithm
        let f = gf(2);
        let all2 = enumerate_subspaces(f, 6, 2);
        let all3 = enumerate_subspaces(f, 6, 3);
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..1000 {
            let u = &all2[next() % all2.len()];
            let w = &all3[next() % all3.len()];
            let s = u.sum(w);
            let i = u.intersect(w);
            assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            // exhaustive vector membership check of the intersection
            let count = nonzero_vectors(f, 6)
                .into_iter()
                .filter(|v| u.contains_vector(v) && w.contains_vector(v))
                .count()
                + 1;
            assert_eq!(count, 2usize.pow(i.dim() as u32));
        }
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for q in [2u8, 3] {
            let f = gf(q);
            for n in 1..=6usize {
                if q == 3 && n > 4 {
                    continue; // keep runtime low; (3,4) already covers q=3
                }
                for k in 0..=n {
                    let got = enumerate_subspaces(f, n, k).len() as u128;
                    assert_eq!(got, gaussian_binomial(q as u64, n as u64, k as u64));
                }
            }
        }
    }

    #[test]
    fn canonical_equality_from_different_spanning_sets() {
        let f = gf(3);
        let a = Subspace::from_vectors(f, 3, &[vec![1, 2, 0], vec![0, 0, 1]]);
        let b = Subspace::from_vectors(f, 3, &[vec![2, 1, 1], vec![1, 2, 2], vec![2, 1, 0]]);
        assert_eq!(a, b);
        assert_eq!(a.key_bytes(), b.key_bytes());
    }

    #[test]
    fn kernel_is_null_space() {
        let f = gf(3);
        let m = Mat::from_rows(f, &[vec![1, 2, 0, 1], vec![0, 0, 1, 2]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let prod = m.mul(&Mat::from_rows(f, &[k.row(i).to_vec()]).transpose());
            assert!(prod.data().iter().all(|&x| x == 0));
        }
    }
}
