//! Exact linear algebra over `GF(p)` on sparse row vectors.

use std::collections::HashMap;

/// Sparse vector: `(index, coefficient)` pairs with strictly increasing
/// indices and nonzero coefficients below `p`.
pub type SparseVec = Vec<(usize, u64)>;

/// Matrices with at most this many entries are reduced densely.
pub const DENSE_LIMIT: usize = 40_000;

fn inv(p: u64, a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `a + c * b`.
pub fn axpy(p: u64, a: &SparseVec, c: u64, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1 * c % p));
            j += 1;
        } else {
            let s = (a[i].1 + b[j].1 * c) % p;
            if s != 0 {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(p: u64, a: &SparseVec, c: u64) -> SparseVec {
    if c.is_multiple_of(p) {
        return Vec::new();
    }
    a.iter().map(|&(i, v)| (i, v * c % p)).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn collect(p: u64, mut entries: Vec<(usize, u64)>) -> SparseVec {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = (last.1 + v) % p,
            _ => out.push((i, v % p)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Incremental row echelon form. Every stored row has a distinct leading
/// index and leading coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    rows: Vec<SparseVec>,
    lead: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new(), lead: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Removes leading entries that sit on pivots until the leading index
    /// is free or the vector vanishes.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        while let Some(&(i, c)) = v.first() {
            match self.lead.get(&i) {
                Some(&r) => v = axpy(self.p, &v, self.p - c, &self.rows[r]),
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some(&(i, c)) => {
                let r = scale(self.p, &r, inv(self.p, c));
                self.lead.insert(i, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }
}

/// Left kernel `{x : x M = 0}` of the matrix with the given rows.
pub fn kernel(p: u64, rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    if rows.len() * ncols.max(1) <= DENSE_LIMIT {
        kernel_dense(p, rows, ncols)
    } else {
        kernel_sparse(p, rows, ncols)
    }
}

/// Sparse elimination tracking row combinations. Columns are relabeled
/// by increasing number of nonzeros so sparse columns become pivots first.
pub fn kernel_sparse(p: u64, rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut nnz = vec![0usize; ncols];
    for r in rows {
        for &(j, _) in r {
            nnz[j] += 1;
        }
    }
    let mut cols: Vec<usize> = (0..ncols).collect();
    cols.sort_by_key(|&j| (nnz[j], j));
    let mut rank_of = vec![0usize; ncols];
    for (k, &j) in cols.iter().enumerate() {
        rank_of[j] = k;
    }
    let mut pivots: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    let mut out = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let mut v = collect(p, row.iter().map(|&(j, c)| (rank_of[j], c)).collect());
        let mut comb: SparseVec = vec![(r, 1)];
        while let Some(&(i, c)) = v.first() {
            match pivots.get(&i) {
                Some((pv, pc)) => {
                    v = axpy(p, &v, p - c, pv);
                    comb = axpy(p, &comb, p - c, pc);
                }
                None => break,
            }
        }
        match v.first() {
            None => out.push(comb),
            Some(&(i, c)) => {
                let ic = inv(p, c);
                pivots.insert(i, (scale(p, &v, ic), scale(p, &comb, ic)));
            }
        }
    }
    out
}

/// Dense reduced row echelon form of the transpose; free columns give the
/// kernel basis.
pub fn kernel_dense(p: u64, rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let nrows = rows.len();
    // t is ncols x nrows: column r of t is row r of the input.
    let mut t = vec![vec![0u64; nrows]; ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(j, c) in row {
            t[j][r] = c;
        }
    }
    let mut pivot_cols = Vec::new();
    let mut prow = 0;
    for col in 0..nrows {
        let Some(sel) = (prow..ncols).find(|&i| t[i][col] != 0) else { continue };
        t.swap(prow, sel);
        let ic = inv(p, t[prow][col]);
        for v in t[prow].iter_mut() {
            *v = *v * ic % p;
        }
        for i in 0..ncols {
            if i != prow && t[i][col] != 0 {
                let f = t[i][col];
                for k in col..nrows {
                    let sub = f * t[prow][k] % p;
                    t[i][k] = (t[i][k] + p - sub) % p;
                }
            }
        }
        pivot_cols.push(col);
        prow += 1;
        if prow == ncols {
            break;
        }
    }
    let mut is_pivot = vec![false; nrows];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..nrows).filter(|&c| !is_pivot[c]) {
        let mut v = vec![(free, 1u64)];
        for (i, &pc) in pivot_cols.iter().enumerate() {
            let c = t[i][free];
            if c != 0 {
                v.push((pc, (p - c) % p));
            }
        }
        v.sort_unstable_by_key(|e| e.0);
        out.push(v);
    }
    out
}

pub fn rank(p: u64, rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new(p);
    rows.iter().filter(|r| e.insert(r)).count()
}
