//! Exact integer linear algebra: Smith and Hermite normal forms, integer
//! solving, lattice indices and the duality of finite cokernels over `Z`.

pub mod fp;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>], nrows: usize) -> Result<Self> {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::Dimension(format!("column {j} has length {}", c.len())));
            }
            for (i, v) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `U·A·V = D` with `D` diagonal, `d_1 | d_2 | … | d_r` positive, `U`, `V` unimodular.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Factors different from 1.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn diagonal(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, f) in self.factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }
}

fn min_abs_in(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| v.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smith normal form with minimal-absolute-value pivoting.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_in(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let p = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(&p);
                d.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(&p);
                d.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a smaller remainder sits in row or column t; move it to the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    let x = d.get(i, t);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let x = d.get(t, j);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    d.row_axpy(t, i, &minus_one);
                    u.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        factors.push(d.get(t, t).clone());
    }
    let rank = factors.len();
    SmithForm { factors, rank, u, v }
}

/// Precomputed Smith data for repeated solves `A·x = b`.
#[derive(Debug, Clone)]
pub struct IntSolver {
    rows: usize,
    cols: usize,
    snf: SmithForm,
}

impl IntSolver {
    pub fn new(a: &IntMatrix) -> Self {
        IntSolver { rows: a.rows, cols: a.cols, snf: smith_normal_form(a) }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank
    }

    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        if b.len() != self.rows {
            return None;
        }
        let ub = self.snf.u.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.cols];
        for (i, val) in ub.iter().enumerate() {
            if i < self.snf.rank {
                let (q, r) = val.div_rem(&self.snf.factors[i]);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !val.is_zero() {
                return None;
            }
        }
        Some(self.snf.v.mul_vec(&y))
    }

    /// A `Z`-basis of `{x : A·x = 0}`, as vectors.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        (self.snf.rank..self.cols).map(|j| self.snf.v.column(j)).collect()
    }
}

/// An integer `x` with `A·x = b`, if one exists.
pub fn integer_solve(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!("rhs length {} vs {} rows", b.len(), a.rows)));
    }
    Ok(IntSolver::new(a).solve(b))
}

/// A `Z`-basis of the integer kernel of `A`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    IntSolver::new(a).kernel()
}

/// Finite or infinite lattice index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

/// `[sup : sub]` for lattices given by basis columns in a common ambient space.
///
/// Every column of `sub` must be an integer combination of the columns of
/// `sup`; otherwise the call fails with [`Error::NotContained`].
pub fn lattice_index(sub: &IntMatrix, sup: &IntMatrix) -> Result<Index> {
    if sub.rows != sup.rows {
        return Err(Error::Dimension("lattices live in different ambient spaces".into()));
    }
    let solver = IntSolver::new(sup);
    let mut coords = Vec::with_capacity(sub.cols);
    for j in 0..sub.cols {
        match solver.solve(&sub.column(j)) {
            Some(x) => coords.push(x),
            None => return Err(Error::NotContained(j)),
        }
    }
    let x = IntMatrix::from_columns(&coords, sup.cols)?;
    let snf = smith_normal_form(&x);
    if snf.rank < sup.cols || solver.rank() < sup.cols {
        return Ok(Index::Infinite);
    }
    Ok(Index::Finite(snf.factors.iter().product()))
}

/// Invariant factors (> 1) of `coker(φ^T)`, the presentation of the dual of `coker(φ)`.
pub fn pontryagin_dual_invariants(phi: &IntMatrix) -> Result<Vec<BigInt>> {
    if phi.rows != phi.cols || phi.det()?.is_zero() {
        return Err(Error::SingularPresentation);
    }
    Ok(smith_normal_form(&phi.transpose()).nontrivial_factors())
}

/// Invariant factors (> 1) of `coker(φ)` for a square injective `φ`.
pub fn cokernel_invariants(phi: &IntMatrix) -> Result<Vec<BigInt>> {
    if phi.rows != phi.cols || phi.det()?.is_zero() {
        return Err(Error::SingularPresentation);
    }
    Ok(smith_normal_form(phi).nontrivial_factors())
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: nonzero
/// rows in echelon form, positive pivots, entries above pivots reduced into
/// `[0, pivot)`. Two generating sets span the same lattice iff their forms agree.
pub fn hermite_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let ncols = a.first().map(Vec::len).unwrap_or(0);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r >= a.len() {
            break;
        }
        loop {
            // smallest nonzero |a[i][c]| for i ≥ r goes to row r
            let best = (r..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(b) = best else { break };
            a.swap(r, b);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0].iter_mut().zip(&top[r]) {
                    *x -= &q * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if q.is_zero() {
                    continue;
                }
                let (top, rest) = a.split_at_mut(r);
                for (x, y) in top[i].iter_mut().zip(&rest[0]) {
                    *x -= &q * y;
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    a
}

/// Echelon lattice basis with the integer transform back to the generators:
/// `basis[k] = Σ_i transform[k][i] · gens[i]`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    pub basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(gens: &[Vec<BigInt>]) -> Self {
        let basis = hermite_basis(gens);
        let pivots = basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        EchelonBasis { basis, pivots }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rest = v.to_vec();
        let mut out = vec![BigInt::zero(); self.basis.len()];
        for (k, row) in self.basis.iter().enumerate() {
            let c = self.pivots[k];
            if rest[c].is_zero() {
                continue;
            }
            let (q, r) = rest[c].div_rem(&row[c]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in rest.iter_mut().zip(row) {
                *x -= &q * y;
            }
            out[k] = q;
        }
        rest.iter().all(Zero::is_zero).then_some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        let d = s.u.mul(a).unwrap().mul(&s.v).unwrap();
        assert!(d.is_diagonal());
        assert_eq!(d, s.diagonal(a.rows(), a.cols()));
        for w in s.factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(s.u.det().unwrap().abs().is_one());
        assert!(s.v.det().unwrap().abs().is_one());
        s
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&IntMatrix::identity(2)).factors, big(&[1, 1]));
        assert_eq!(check_snf(&m(&[vec![2, 0], vec![0, 4]])).factors, big(&[2, 4]));
        assert_eq!(check_snf(&m(&[vec![2, 1], vec![0, 2]])).factors, big(&[1, 4]));
        assert_eq!(check_snf(&m(&[vec![0, 0], vec![0, 0]])).rank, 0);
        assert_eq!(check_snf(&m(&[vec![6, 4, 2]])).factors, big(&[2]));
    }

    #[test]
    fn solve_examples() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(integer_solve(&a, &big(&[4, 9])).unwrap(), Some(big(&[2, 3])));
        assert_eq!(integer_solve(&m(&[vec![2]]), &big(&[1])).unwrap(), None);
        let a = m(&[vec![2, 1], vec![0, 2]]);
        assert_eq!(integer_solve(&a, &big(&[1, 2])).unwrap(), Some(big(&[0, 1])));
    }

    #[test]
    fn index_examples() {
        let z2 = IntMatrix::identity(2);
        assert_eq!(lattice_index(&z2, &z2).unwrap(), Index::Finite(1.into()));
        let sub = m(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(lattice_index(&sub, &z2).unwrap(), Index::Finite(6.into()));
        assert_eq!(lattice_index(&z2, &sub), Err(Error::NotContained(0)));
        let line = m(&[vec![1], vec![0]]);
        assert_eq!(lattice_index(&line, &z2).unwrap(), Index::Infinite);
    }

    #[test]
    fn pontryagin_examples() {
        assert!(pontryagin_dual_invariants(&IntMatrix::identity(3)).unwrap().is_empty());
        assert_eq!(pontryagin_dual_invariants(&m(&[vec![2, 0], vec![0, 3]])).unwrap(), big(&[6]));
        let phi = m(&[vec![2, 0], vec![1, 2]]);
        assert_eq!(pontryagin_dual_invariants(&phi).unwrap(), big(&[4]));
        assert_eq!(cokernel_invariants(&phi).unwrap(), big(&[4]));
        assert_eq!(
            pontryagin_dual_invariants(&m(&[vec![1, 2], vec![2, 4]])),
            Err(Error::SingularPresentation)
        );
        assert_eq!(pontryagin_dual_invariants(&m(&[vec![1, 2]])), Err(Error::SingularPresentation));
    }

    #[test]
    fn hermite_and_echelon() {
        let gens = vec![big(&[2, 4]), big(&[0, 6]), big(&[4, 2])];
        let h = hermite_basis(&gens);
        assert_eq!(h, vec![big(&[2, 4]), big(&[0, 6])]);
        let e = EchelonBasis::new(&gens);
        assert_eq!(e.coordinates(&big(&[4, 14])), Some(big(&[2, 1])));
        assert!(!e.contains(&big(&[2, 0])));
        assert!(!e.contains(&big(&[1, 0])));
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-5i64..=5, r * c).prop_map(move |v| {
                IntMatrix::from_i64(&v.chunks(c).map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn snf_is_a_valid_factorization(a in small_matrix(5)) {
            check_snf(&a);
        }

        #[test]
        fn det_is_product_of_factors(v in proptest::collection::vec(-5i64..=5, 16)) {
            let a = IntMatrix::from_i64(&v.chunks(4).map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap();
            let s = smith_normal_form(&a);
            let det = a.det().unwrap();
            if s.rank < 4 {
                prop_assert!(det.is_zero());
            } else {
                let p: BigInt = s.factors.iter().product();
                prop_assert_eq!(det.abs(), p);
            }
        }

        #[test]
        fn index_is_multiplicative_in_towers(
            a in proptest::collection::vec(-4i64..=4, 9),
            b in proptest::collection::vec(-4i64..=4, 9),
        ) {
            let to = |v: &[i64]| IntMatrix::from_i64(&v.chunks(3).map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap();
            let (ma, mb) = (to(&a), to(&b));
            prop_assume!(!ma.det().unwrap().is_zero() && !mb.det().unwrap().is_zero());
            let l1 = IntMatrix::identity(3);
            let l2 = ma.clone();
            let l3 = ma.mul(&mb).unwrap();
            let i12 = lattice_index(&l2, &l1).unwrap();
            let i23 = lattice_index(&l3, &l2).unwrap();
            let i13 = lattice_index(&l3, &l1).unwrap();
            match (i12, i23, i13) {
                (Index::Finite(x), Index::Finite(y), Index::Finite(z)) => prop_assert_eq!(x * y, z),
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }

        #[test]
        fn solve_agrees_with_product(a in small_matrix(4), seed in proptest::collection::vec(-3i64..=3, 4)) {
            let x: Vec<BigInt> = seed[..a.cols()].iter().map(|&v| BigInt::from(v)).collect();
            let b = a.mul_vec(&x);
            let sol = integer_solve(&a, &b).unwrap().expect("b is in the image");
            prop_assert_eq!(a.mul_vec(&sol), b);
            for k in integer_kernel(&a) {
                prop_assert!(a.mul_vec(&k).iter().all(Zero::is_zero));
            }
        }
    }
}
