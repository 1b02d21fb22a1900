//! Linear algebra over a prime field `F_p` with machine-word entries.

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&i| rows[i][c] % p != 0) else { continue };
        rows.swap(r, k);
        let inv = inverse(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] % p != 0 {
                let f = rows[i][c] % p;
                let (a, b) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&mut hi[0], &lo[r])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x = (*x + p - mulmod(f, *y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a, p).len()
}

/// Basis of `{x ∈ F_p^ncols : A·x = 0}` for `A` given by its rows.
pub fn nullspace(rows: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let pivots = if a.is_empty() { Vec::new() } else { rref(&mut a, p) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[k][f] % p) % p;
            }
            v
        })
        .collect()
}

/// Some `x` with `Σ x_i cols[i] = b`, if one exists.
pub fn solve(cols: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = b.len();
    let k = cols.len();
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|i| cols.iter().map(|c| c[i] % p).chain(std::iter::once(b[i] % p)).collect())
        .collect();
    let pivots = rref(&mut rows, p);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![0u64; k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][k];
    }
    Some(x)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime.
pub fn inverse(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Incrementally maintained subspace of `F_p^n` in reduced echelon form.
#[derive(Debug, Clone)]
pub struct FpSpan {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl FpSpan {
    pub fn new(p: u64, dim: usize) -> Self {
        FpSpan { p, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut w: Vec<u64> = v.iter().map(|x| x % p).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = w[c];
            if f != 0 {
                for (x, y) in w.iter_mut().zip(row) {
                    *x = (*x + p - mulmod(f, *y, p)) % p;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut w = self.reduce(v);
        let Some(c) = w.iter().position(|&x| x != 0) else { return false };
        let inv = inverse(w[c], p);
        for x in w.iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&w) {
                    *x = (*x + p - mulmod(f, *y, p)) % p;
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > c).unwrap_or(self.pivots.len());
        self.rows.insert(pos, w);
        self.pivots.insert(pos, c);
        true
    }

    pub fn same_span(&self, other: &FpSpan) -> bool {
        self.rows == other.rows
    }
}
