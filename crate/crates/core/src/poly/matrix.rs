//! Dense matrices with polynomial entries: products, determinants,
//! characteristic polynomials (Berkowitz, division-free) and pfaffians.

use std::collections::HashMap;

use super::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    data: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(ring: &PolyRing, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data: Vec<MultiPoly> = rows.into_iter().flatten().collect();
        if data.iter().any(|p| p.ring() != ring) {
            return Err(Error::RingMismatch("matrix entry".into(), "matrix ring".into()));
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: r, cols: c, data })
    }

    /// Integer matrix embedded as constant polynomials.
    pub fn from_ints(ring: &PolyRing, m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let cols = m.first().map(Vec::len).unwrap_or(0);
        let data = m.iter().flatten().map(|&v| ring.int(v)).collect();
        PolyMatrix { ring: ring.clone(), rows, cols, data }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix sum".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.try_add(&other.map(|p| p.neg()))
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Applies `f` to every entry, landing in a new ring.
    pub fn map_into(&self, ring: &PolyRing, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MultiPoly::is_zero)
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    /// Coefficients `[1, c_1, ..., c_n]` of `det(t·I - M) = Σ c_i t^{n-i}`,
    /// computed with the Berkowitz recursion (no divisions).
    pub fn charpoly(&self) -> Result<Vec<MultiPoly>> {
        let n = self.require_square()?;
        let ring = &self.ring;
        let mut p = vec![ring.one()];
        for k in 0..n {
            // leading (k+1)x(k+1) block: [[A, C], [R, a]]
            let a = self.get(k, k);
            let mut toeplitz = Vec::with_capacity(k + 2);
            toeplitz.push(ring.one());
            toeplitz.push(a.neg());
            let mut v: Vec<MultiPoly> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 0..k {
                let mut dot = ring.zero();
                for (j, vj) in v.iter().enumerate() {
                    let r = self.get(k, j);
                    if !r.is_zero() && !vj.is_zero() {
                        dot = &dot + &(r * vj);
                    }
                }
                toeplitz.push(dot.neg());
                let mut w = vec![ring.zero(); k];
                for (i, wi) in w.iter_mut().enumerate() {
                    let mut acc = ring.zero();
                    for (j, vj) in v.iter().enumerate() {
                        let aij = self.get(i, j);
                        if !aij.is_zero() && !vj.is_zero() {
                            acc = &acc + &(aij * vj);
                        }
                    }
                    *wi = acc;
                }
                v = w;
            }
            let mut next = vec![ring.zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut acc = ring.zero();
                for (j, pj) in p.iter().enumerate() {
                    if i >= j && !pj.is_zero() && !toeplitz[i - j].is_zero() {
                        acc = &acc + &(&toeplitz[i - j] * pj);
                    }
                }
                *slot = acc;
            }
            p = next;
        }
        Ok(p)
    }

    /// Determinant by row expansion over column subsets (`O(2^n · n)` products).
    pub fn det(&self) -> Result<MultiPoly> {
        let n = self.require_square()?;
        if n > 20 {
            let cp = self.charpoly()?;
            let d = cp[n].clone();
            return Ok(if n % 2 == 1 { d.neg() } else { d });
        }
        let mut layer: HashMap<u32, MultiPoly> = HashMap::new();
        layer.insert(0, self.ring.one());
        for k in 0..n {
            let mut next: HashMap<u32, MultiPoly> = HashMap::new();
            for (mask, val) in &layer {
                for j in 0..n {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    let entry = self.get(k, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let greater = (mask >> (j + 1)).count_ones();
                    let mut term = val * entry;
                    if greater % 2 == 1 {
                        term = term.neg();
                    }
                    let slot = next.entry(mask | (1 << j)).or_insert_with(|| self.ring.zero());
                    *slot = &*slot + &term;
                }
            }
            next.retain(|_, v| !v.is_zero());
            layer = next;
        }
        Ok(layer.remove(&((1u32 << n) - 1)).unwrap_or_else(|| self.ring.zero()))
    }

    /// Whether `M^T = -M` with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            self.get(i, i).is_zero()
                && (0..i).all(|j| (self.get(i, j) + self.get(j, i)).is_zero())
        })
    }

    /// Pfaffian by first-row expansion: `pf(A) = Σ_j (-1)^j a_{0j} pf(A without 0, j)`.
    pub fn pfaffian(&self) -> Result<MultiPoly> {
        let n = self.require_square()?;
        if !self.is_alternating() {
            return Err(Error::NotAlternating(format!("{n}x{n} matrix")));
        }
        if n % 2 == 1 {
            return Ok(self.ring.zero());
        }
        let mut memo = HashMap::new();
        Ok(self.pf_rec((1u64 << n) - 1, &mut memo))
    }

    fn pf_rec(&self, mask: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
        if mask == 0 {
            return self.ring.one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut acc = self.ring.zero();
        let mut sign_pos = 0;
        for j in (i + 1)..self.rows {
            if rest & (1 << j) == 0 {
                continue;
            }
            let a = self.get(i, j);
            if !a.is_zero() {
                let sub = self.pf_rec(rest & !(1 << j), memo);
                let term = a * &sub;
                acc = if sign_pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            sign_pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}
