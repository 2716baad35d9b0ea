//! Sparse vectors, incremental echelon forms and small dense matrices over
//! exact rings.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{Field, Ring};

/// Sparse vector: entries sorted by index, no zero stored.
#[derive(Clone, PartialEq, Debug, Default, Serialize)]
pub struct SparseVec<F> {
    entries: Vec<(u32, F)>,
}

impl<F: Ring> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: u32) -> Self {
        SparseVec { entries: vec![(i, F::one())] }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, F)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in pairs {
            acc.add(i, &c);
        }
        acc.finish()
    }

    /// Builds from entries already sorted by index with no duplicates.
    pub fn from_sorted(mut entries: Vec<(u32, F)>) -> Self {
        entries.retain(|(_, c)| !c.is_zero());
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &F)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(u32, F)] {
        &self.entries
    }

    pub fn get(&self, i: u32) -> F {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Largest index with a nonzero entry.
    pub fn lead(&self) -> Option<(u32, &F)> {
        self.entries.last().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self::from_sorted(self.entries.iter().map(|(i, x)| (*i, x.mul(c))).collect())
    }

    pub fn neg(&self) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x.neg())).collect() }
    }

    /// self + c·o.
    pub fn add_scaled(&self, o: &Self, c: &F) -> Self {
        if c.is_zero() || o.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + o.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), o.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.mul(c)));
                        b.next();
                    } else {
                        let s = x.add(&y.mul(c));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.mul(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, x)| !x.is_zero());
        SparseVec { entries: out }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_scaled(o, &F::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_scaled(o, &F::one().neg())
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> SparseVec<G> {
        SparseVec::from_sorted(self.entries.iter().map(|(i, x)| (*i, f(x))).collect())
    }

    pub fn map_indices(&self, f: impl Fn(u32) -> u32) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, x)| (f(*i), x.clone())))
    }

    pub fn dot(&self, dense: &[F]) -> F {
        let mut s = F::zero();
        for (i, x) in &self.entries {
            s.add_assign(&x.mul(&dense[*i as usize]));
        }
        s
    }
}

/// Hash-map accumulator for sums of many sparse vectors.
pub struct Accumulator<F> {
    map: HashMap<u32, F>,
}

impl<F: Ring> Default for Accumulator<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Ring> Accumulator<F> {
    pub fn new() -> Self {
        Accumulator { map: HashMap::new() }
    }

    pub fn add(&mut self, i: u32, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(x) => x.add_assign(c),
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        let one = F::one() == *c;
        for (i, x) in v.iter() {
            if one {
                self.add(i, x);
            } else {
                self.add(i, &x.mul(c));
            }
        }
    }

    pub fn finish(self) -> SparseVec<F> {
        let mut e: Vec<(u32, F)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        e.sort_unstable_by_key(|x| x.0);
        SparseVec { entries: e }
    }
}

/// Row echelon form built one row at a time. Each stored row is normalized
/// so that its largest index (the pivot) has coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: HashMap<u32, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, i: u32) -> bool {
        self.rows.contains_key(&i)
    }

    pub fn pivots(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn row(&self, pivot: u32) -> Option<&SparseVec<F>> {
        self.rows.get(&pivot)
    }

    /// Eliminates the leading entry until it is not a pivot.
    pub fn reduce_lead(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some((i, c)) = v.lead() {
            match self.rows.get(&i) {
                Some(r) => {
                    let c = c.neg();
                    v = v.add_scaled(r, &c);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot index from `v`.
    pub fn reduce_full(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut bound = u32::MAX;
        loop {
            let hit = v.entries.iter().rev().find(|(i, _)| *i < bound && self.rows.contains_key(i)).map(|(i, c)| (*i, c.neg()));
            match hit {
                Some((i, c)) => {
                    v = v.add_scaled(&self.rows[&i], &c);
                    bound = i;
                }
                None => return v,
            }
        }
    }

    /// Adds a row; returns its new pivot, or `None` if it was dependent.
    pub fn insert(&mut self, v: SparseVec<F>) -> Option<u32> {
        let v = self.reduce_lead(v);
        let (p, c) = v.lead()?;
        let inv = c.inv().expect("nonzero lead");
        self.rows.insert(p, v.scale(&inv));
        Some(p)
    }

    /// Brings every row to fully reduced form: no row mentions another pivot.
    pub fn make_reduced(&mut self) {
        for p in self.pivots() {
            let r = self.rows.remove(&p).expect("pivot row");
            let (lead_i, lead_c) = (p, r.get(p));
            let rest = SparseVec::from_sorted(r.iter().filter(|(i, _)| *i != p).map(|(i, c)| (i, c.clone())).collect());
            let rest = self.reduce_full(rest);
            let mut e: Vec<(u32, F)> = rest.iter().map(|(i, c)| (i, c.clone())).collect();
            e.push((lead_i, lead_c));
            self.rows.insert(p, SparseVec::from_sorted(e));
        }
    }

    pub fn into_rows(self) -> HashMap<u32, SparseVec<F>> {
        self.rows
    }
}

/// Dense matrix over a ring, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.neg()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Self::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &R)> {
        self.data.iter().position(|x| !x.is_zero()).map(|k| (k / self.cols, k % self.cols, &self.data[k]))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> R {
        let mut s = R::zero();
        for i in 0..self.rows.min(self.cols) {
            s.add_assign(self.get(i, i));
        }
        s
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let x = m.get(r, j).mul(&inv);
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let x = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Basis of the column space in standard form: the pivot columns of the
    /// column-reduced matrix, each with a leading 1 in its pivot row.
    pub fn column_space_basis(&self) -> Vec<Vec<F>> {
        let (r, piv) = self.transpose().rref();
        (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use proptest::prelude::*;

    type Q = Rational;

    fn sv(p: &[(u32, i64)]) -> SparseVec<Q> {
        SparseVec::from_pairs(p.iter().map(|&(i, c)| (i, Q::from_int(c))))
    }

    #[test]
    fn add_scaled_cancels() {
        let a = sv(&[(1, 2), (4, 1)]);
        let b = sv(&[(1, 1), (3, 5)]);
        assert_eq!(a.add_scaled(&b, &Q::from_int(-2)), sv(&[(3, -10), (4, 1)]));
    }

    #[test]
    fn echelon_rank_and_reduction() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(sv(&[(0, 1), (2, 1)])), Some(2));
        assert_eq!(e.insert(sv(&[(1, 1), (2, 1)])), Some(1));
        assert_eq!(e.insert(sv(&[(0, 1), (1, -1)])), None);
        e.make_reduced();
        assert_eq!(e.row(2).unwrap(), &sv(&[(0, 1), (2, 1)]));
        assert_eq!(e.row(1).unwrap(), &sv(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn inverse_and_column_space() {
        let m = Matrix::from_rows(vec![vec![Q::from_int(2), Q::from_int(1)], vec![Q::from_int(1), Q::from_int(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let p = Matrix::from_rows(vec![vec![Q::one(), Q::one()], vec![Q::zero(), Q::zero()]]);
        assert_eq!(p.column_space_basis(), vec![vec![Q::one(), Q::zero()]]);
        assert!(p.inverse().is_none());
    }

    proptest! {
        #[test]
        fn echelon_rank_matches_dense(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 1..7)) {
            let dense = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Q::from_int(x)).collect()).collect());
            let mut e = Echelon::new();
            for r in &rows {
                e.insert(SparseVec::from_pairs(r.iter().enumerate().map(|(i, &x)| (i as u32, Q::from_int(x)))));
            }
            prop_assert_eq!(e.rank(), dense.rank());
        }
    }
}
