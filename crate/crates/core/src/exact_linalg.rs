//! Exact sparse linear algebra over the rationals.
//!
//! Ranks are computed by sparse elimination modulo 31-bit primes, agreed
//! across two distinct primes, with a fraction-free Bareiss elimination as
//! the exact fallback and corroborator. Since the rank of a rational matrix
//! reduced modulo a prime can only undershoot the rational rank, a modular
//! rank that reaches the structural bound `min(rows, cols)` is already an
//! exact certificate; otherwise certification comes from agreement with a
//! Bareiss run on matrices small enough to afford one.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::Rat;

/// Odd 31-bit primes used by the modular rank protocol, drawn in order.
pub const PRIMES: [u64; 16] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
    2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
];

/// Cell-count guard for `rank_exact`.
pub const EXACT_GUARD_CELLS: usize = 1_000_000;

/// Cell count up to which `rank` corroborates the modular value with a
/// Bareiss run; above it only the structural full-rank certificate applies.
pub const AUTO_EXACT_CELLS: usize = 100_000;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("{rows}x{cols} matrix exceeds the exact-elimination guard of {guard} cells")]
    SizeGuard { rows: usize, cols: usize, guard: usize },
    #[error("prime {prime} divides a denominator")]
    BadPrime { prime: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Rank value together with its certification status.
///
/// `certified` means the value is proven equal to the rational rank: either
/// it reached `min(rows, cols)` modulo a prime, or it was reproduced by
/// fraction-free elimination over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankResult {
    pub value: usize,
    pub certified: bool,
}

/// Sparse rational matrix in canonical form: entries sorted by (col, row),
/// no duplicate positions, no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(u32, u32, Rat)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    /// Builds from (row, col, value) triplets; duplicates are summed and
    /// exact zeros dropped.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, Rat)>) -> Self {
        let mut entries: Vec<(u32, u32, Rat)> = triplets
            .into_iter()
            .inspect(|(r, c, _)| {
                assert!(*r < rows && *c < cols, "entry ({r},{c}) out of {rows}x{cols}");
            })
            .map(|(r, c, v)| (r as u32, c as u32, v))
            .collect();
        entries.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
        let mut canonical: Vec<(u32, u32, Rat)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match canonical.last_mut() {
                Some((lr, lc, lv)) if *lr == r && *lc == c => *lv += v,
                _ => canonical.push((r, c, v)),
            }
        }
        canonical.retain(|(_, _, v)| !v.is_zero());
        SparseMatrix { rows, cols, entries: canonical }
    }

    pub fn identity(n: usize) -> Self {
        let one = Rat::one();
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n as u32).map(|i| (i, i, one.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(r, c, v)| (*r as usize, *c as usize, v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries: Vec<(u32, u32, Rat)> =
            self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())).collect();
        entries.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
        SparseMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Offsets of each column's entry range in the canonical entry list.
    fn col_ranges(&self) -> Vec<(usize, usize)> {
        let mut ranges = vec![(0usize, 0usize); self.cols];
        let mut k = 0;
        for c in 0..self.cols {
            let start = k;
            while k < self.entries.len() && self.entries[k].1 as usize == c {
                k += 1;
            }
            ranges[c] = (start, k);
        }
        ranges
    }

    /// Sparse product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let ranges = self.col_ranges();
        let mut triplets = Vec::new();
        let rhs_ranges = rhs.col_ranges();
        for c in 0..rhs.cols {
            let mut acc: std::collections::BTreeMap<u32, Rat> = std::collections::BTreeMap::new();
            let (s, e) = rhs_ranges[c];
            for (mid, _, w) in &rhs.entries[s..e] {
                let (ls, le) = ranges[*mid as usize];
                for (r, _, v) in &self.entries[ls..le] {
                    let t = acc.entry(*r).or_insert_with(Rat::zero);
                    *t += v * w;
                }
            }
            for (r, v) in acc {
                if !v.is_zero() {
                    triplets.push((r as usize, c, v));
                }
            }
        }
        SparseMatrix::from_triplets(self.rows, rhs.cols, triplets)
    }

    /// Appends `v` as an extra column.
    pub fn augment_column(&self, v: &[(usize, Rat)]) -> SparseMatrix {
        let mut entries = self.entries.clone();
        for (r, val) in v {
            assert!(*r < self.rows, "augmented entry out of range");
            if !val.is_zero() {
                entries.push((*r as u32, self.cols as u32, val.clone()));
            }
        }
        SparseMatrix { rows: self.rows, cols: self.cols + 1, entries }
    }

    /// Text dump: header `rows cols nnz`, then 1-based `row col num/den`
    /// lines in canonical order.
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.entries.len());
        for (r, c, v) in &self.entries {
            let _ = writeln!(out, "{} {} {}/{}", r + 1, c + 1, v.numer(), v.denom());
        }
        out
    }

    /// Column-major image of the matrix modulo `prime`.
    fn columns_mod(&self, prime: u64) -> Result<Vec<Vec<(u32, u32)>>, LinalgError> {
        let mut cols: Vec<Vec<(u32, u32)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in &self.entries {
            let m = rat_mod(v, prime)?;
            if m != 0 {
                cols[*c as usize].push((*r, m as u32));
            }
        }
        Ok(cols)
    }

    /// Rank of the matrix reduced modulo `prime`, by sparse elimination with
    /// pivoting on the cheapest column and, within it, the cheapest row.
    /// Fails if a denominator is divisible by `prime`.
    pub fn rank_modular(&self, prime: u64) -> Result<usize, LinalgError> {
        debug_assert!(prime > (1 << 30) && prime % 2 == 1, "prime must be odd and > 2^30");
        let cols = self.columns_mod(prime)?;
        Ok(eliminate_mod(self.rows, cols, prime))
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    /// Ground truth for tests; guarded against accidental huge dense work.
    pub fn rank_exact(&self) -> Result<usize, LinalgError> {
        if self.rows * self.cols > EXACT_GUARD_CELLS {
            return Err(LinalgError::SizeGuard {
                rows: self.rows,
                cols: self.cols,
                guard: EXACT_GUARD_CELLS,
            });
        }
        if self.entries.is_empty() {
            return Ok(0);
        }
        // Row-scale by denominator lcms: rank is invariant and Bareiss wants integers.
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        let mut row_lcm = vec![BigInt::one(); self.rows];
        for (r, _, v) in &self.entries {
            let l = &row_lcm[*r as usize];
            row_lcm[*r as usize] = l.lcm(v.denom());
        }
        for (r, c, v) in &self.entries {
            let scale = &row_lcm[*r as usize] / v.denom();
            dense[*r as usize][*c as usize] = v.numer() * scale;
        }
        Ok(bareiss_rank(dense))
    }

    /// Certified-where-possible rank: two agreeing modular ranks, with a
    /// structural or Bareiss certificate attached when available.
    pub fn rank(&self) -> RankResult {
        if self.entries.is_empty() {
            return RankResult { value: 0, certified: true };
        }
        let bound = self.rows.min(self.cols);
        let mut seen: Option<usize> = None;
        for &p in PRIMES.iter() {
            let r = match self.rank_modular(p) {
                Ok(r) => r,
                Err(_) => continue,
            };
            match seen {
                Some(prev) if prev == r => return self.certify(r, bound),
                Some(prev) => seen = Some(prev.max(r)),
                None => seen = Some(r),
            }
        }
        // The prime list is exhausted without two agreeing values; fall back
        // to the exact rank when affordable, else report the best lower bound.
        if let Ok(exact) = self.rank_exact() {
            return RankResult { value: exact, certified: true };
        }
        RankResult { value: seen.unwrap_or(0), certified: false }
    }

    fn certify(&self, value: usize, bound: usize) -> RankResult {
        if value == bound {
            // Modular rank is a lower bound on the rational rank, which the
            // structural bound caps; equality pins it exactly.
            return RankResult { value, certified: true };
        }
        if self.rows * self.cols <= AUTO_EXACT_CELLS {
            if let Ok(exact) = self.rank_exact() {
                return RankResult { value: exact, certified: true };
            }
        }
        RankResult { value, certified: false }
    }

    /// Whether `v` lies in the column span of the matrix, decided by the
    /// same certified rank protocol on the matrix and its augmentation.
    pub fn in_column_span(&self, v: &[(usize, Rat)]) -> Result<bool, LinalgError> {
        for (r, _) in v {
            if *r >= self.rows {
                return Err(LinalgError::DimensionMismatch(format!(
                    "vector touches row {r} of a {}-row matrix",
                    self.rows
                )));
            }
        }
        if v.iter().all(|(_, x)| x.is_zero()) {
            return Ok(true);
        }
        if self.entries.is_empty() {
            return Ok(false);
        }
        let base = self.rank();
        let augmented = self.augment_column(v).rank();
        Ok(augmented.value == base.value)
    }
}

/// Reduce a rational modulo `prime`; fails when the denominator does.
fn rat_mod(v: &Rat, prime: u64) -> Result<u64, LinalgError> {
    let p = BigInt::from(prime);
    let den = v.denom().mod_floor(&p).to_u64().expect("residue fits u64");
    if den == 0 {
        return Err(LinalgError::BadPrime { prime });
    }
    let num = v.numer().mod_floor(&p).to_u64().expect("residue fits u64");
    Ok(mul_mod(num, mod_inverse(den, prime), prime))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse modulo an odd prime via the extended Euclid algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (p as i64, a as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1, "input not invertible");
    ((t % p as i64 + p as i64) % p as i64) as u64
}

/// Sparse elimination modulo `p` over column-major data.
///
/// Pivot selection is Markowitz-lite: cheapest column first, then the row of
/// that column present in the fewest other columns. Ties break on indices so
/// the procedure is deterministic.
fn eliminate_mod(nrows: usize, mut cols: Vec<Vec<(u32, u32)>>, p: u64) -> usize {
    let ncols = cols.len();
    let mut active = vec![true; ncols];
    let mut row_cnt = vec![0u32; nrows];
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();
    for (c, col) in cols.iter().enumerate() {
        for (r, _) in col {
            row_cnt[*r as usize] += 1;
            row_cols[*r as usize].push(c as u32);
        }
        heap.push(Reverse((col.len(), c as u32)));
    }

    let mut rank = 0usize;
    while let Some(Reverse((len, c))) = heap.pop() {
        let c = c as usize;
        if !active[c] || cols[c].len() != len {
            continue;
        }
        if cols[c].is_empty() {
            active[c] = false;
            continue;
        }
        // Pivot row: fewest active columns touched.
        let (&(pr, pv), _) = cols[c]
            .iter()
            .map(|e| (e, row_cnt[e.0 as usize]))
            .min_by_key(|(e, cnt)| (*cnt, e.0))
            .expect("nonempty column");
        rank += 1;
        active[c] = false;

        // Normalized pivot column with a 1 in the pivot row.
        let inv = mod_inverse(pv as u64, p);
        let pivot: Vec<(u32, u32)> =
            cols[c].iter().map(|(r, v)| (*r, mul_mod(*v as u64, inv, p) as u32)).collect();
        for (r, _) in &pivot {
            row_cnt[*r as usize] -= 1;
        }

        let victims = std::mem::take(&mut row_cols[pr as usize]);
        for vc in victims {
            let vc = vc as usize;
            if vc == c || !active[vc] {
                continue;
            }
            let Ok(pos) = cols[vc].binary_search_by_key(&pr, |e| e.0) else {
                continue; // stale pointer from an earlier cancellation
            };
            let factor = cols[vc][pos].1 as u64;
            let neg = p - factor; // column := column - factor * pivot
            let old = std::mem::take(&mut cols[vc]);
            let mut merged = Vec::with_capacity(old.len() + pivot.len());
            let (mut i, mut j) = (0usize, 0usize);
            while i < old.len() || j < pivot.len() {
                match (old.get(i), pivot.get(j)) {
                    (Some(&(ra, va)), Some(&(rb, vb))) if ra == rb => {
                        let v = (va as u64 + mul_mod(neg, vb as u64, p)) % p;
                        if v != 0 {
                            merged.push((ra, v as u32));
                        } else if ra != pr {
                            row_cnt[ra as usize] -= 1;
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(&(ra, va)), Some(&(rb, _))) if ra < rb => {
                        merged.push((ra, va));
                        i += 1;
                    }
                    (Some(&(ra, va)), None) => {
                        merged.push((ra, va));
                        i += 1;
                    }
                    (_, Some(&(rb, vb))) => {
                        let v = mul_mod(neg, vb as u64, p);
                        if v != 0 {
                            merged.push((rb, v as u32));
                            row_cnt[rb as usize] += 1;
                            row_cols[rb as usize].push(vc as u32);
                        }
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            cols[vc] = merged;
            heap.push(Reverse((cols[vc].len(), vc as u32)));
        }
        row_cnt[pr as usize] = 0;
    }
    rank
}

/// Fraction-free elimination rank of a dense integer matrix.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    let mut prev = BigInt::one();
    let mut k = 0usize;
    while k < rows && k < cols {
        // Find a pivot in the remaining submatrix.
        let mut found = None;
        'search: for j in k..cols {
            for i in k..rows {
                if !a[i][col_perm[j]].is_zero() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        a.swap(k, pi);
        col_perm.swap(k, pj);
        let pc = col_perm[k];
        for i in k + 1..rows {
            for j in k + 1..cols {
                let cj = col_perm[j];
                let num = &a[k][pc] * &a[i][cj] - &a[i][pc] * &a[k][cj];
                a[i][cj] = num / &prev; // exact by the Sylvester identity
            }
            a[i][pc] = BigInt::zero();
        }
        prev = a[k][pc].clone();
        k += 1;
    }
    k
}

/// Dense exact linear algebra over the rationals, for the small systems the
/// rest of the crate needs: kernels of adjoint matrices, basis expansions,
/// automorphism inverses.
pub mod dense {
    use super::Rat;
    use num_traits::{One, Zero};

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(mat: &mut [Vec<Rat>]) -> Vec<usize> {
        let rows = mat.len();
        let cols = if rows == 0 { 0 } else { mat[0].len() };
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
                continue;
            };
            mat.swap(r, pr);
            let inv = mat[r][c].clone();
            for j in c..cols {
                mat[r][j] = &mat[r][j] / &inv;
            }
            for i in 0..rows {
                if i != r && !mat[i][c].is_zero() {
                    let f = mat[i][c].clone();
                    for j in c..cols {
                        let sub = &f * &mat[r][j];
                        mat[i][j] = &mat[i][j] - &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(mat: &[Vec<Rat>]) -> usize {
        let mut work = mat.to_vec();
        rref(&mut work).len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn nullspace(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
        let cols = if mat.is_empty() { 0 } else { mat[0].len() };
        let mut work = mat.to_vec();
        let pivots = rref(&mut work);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[r][f].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b`, if the system is consistent.
    pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
        let rows = a.len();
        assert_eq!(rows, b.len(), "right-hand side length mismatch");
        let cols = if rows == 0 { 0 } else { a[0].len() };
        let mut work: Vec<Vec<Rat>> = a
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        let pivots = rref(&mut work);
        if pivots.contains(&cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rat::zero(); cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = work[r][cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if nonsingular.
    pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
        let n = a.len();
        let mut work: Vec<Vec<Rat>> = a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                assert_eq!(row.len(), n, "matrix must be square");
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                r
            })
            .collect();
        let pivots = rref(&mut work);
        if pivots.len() != n {
            return None;
        }
        Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    pub fn mat_vec(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
        a.iter()
            .map(|row| row.iter().zip(x).map(|(c, v)| c * v).fold(Rat::zero(), |s, t| s + t))
            .collect()
    }

    pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
        let inner = b.len();
        let cols = if inner == 0 { 0 } else { b[0].len() };
        a.iter()
            .map(|row| {
                assert_eq!(row.len(), inner, "inner dimensions must agree");
                (0..cols)
                    .map(|j| {
                        row.iter().zip(b).map(|(x, brow)| x * &brow[j]).fold(Rat::zero(), |s, t| s + t)
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sparse_from_dense(rows: usize, cols: usize, data: &[i64]) -> SparseMatrix {
        assert_eq!(data.len(), rows * cols);
        let triplets = data
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(k, v)| (k / cols, k % cols, q(*v)))
            .collect();
        SparseMatrix::from_triplets(rows, cols, triplets)
    }

    #[test]
    fn identity_rank() {
        let id = SparseMatrix::identity(3);
        assert_eq!(id.rank_modular(PRIMES[0]).unwrap(), 3);
        assert_eq!(id.rank_exact().unwrap(), 3);
        let id10 = SparseMatrix::identity(10);
        let r = id10.rank();
        assert_eq!(r.value, 10);
        assert!(r.certified);
    }

    #[test]
    fn zero_matrix_rank() {
        let z = SparseMatrix::zero(4, 7);
        assert_eq!(z.rank_modular(PRIMES[1]).unwrap(), 0);
        assert_eq!(z.rank_exact().unwrap(), 0);
        assert_eq!(z.rank(), RankResult { value: 0, certified: true });
    }

    #[test]
    fn bad_prime_signalled_and_skipped() {
        let p = PRIMES[0];
        let m = SparseMatrix::from_triplets(
            2,
            2,
            vec![
                (0, 0, Rat::new(1.into(), p.into())),
                (1, 1, q(1)),
            ],
        );
        assert!(matches!(m.rank_modular(p), Err(LinalgError::BadPrime { .. })));
        assert_eq!(m.rank_modular(PRIMES[1]).unwrap(), 2);
        // The protocol walks past the bad prime.
        assert_eq!(m.rank(), RankResult { value: 2, certified: true });
    }

    #[test]
    fn known_rank_product_construction() {
        // 50x30 times 30x50 has rank exactly 30 for generic integer factors.
        let mut rng = StdRng::seed_from_u64(7);
        let a: Vec<i64> = (0..50 * 30).map(|_| rng.gen_range(-9..=9)).collect();
        let b: Vec<i64> = (0..30 * 50).map(|_| rng.gen_range(-9..=9)).collect();
        let ma = sparse_from_dense(50, 30, &a);
        let mb = sparse_from_dense(30, 50, &b);
        let m = ma.mul(&mb);
        assert_eq!(m.rank_exact().unwrap(), 30);
        let r = m.rank();
        assert_eq!(r.value, 30);
        assert!(r.certified);
    }

    #[test]
    fn size_guard_enforced() {
        let m = SparseMatrix::from_triplets(2000, 2000, vec![(0, 0, q(1))]);
        assert!(matches!(m.rank_exact(), Err(LinalgError::SizeGuard { .. })));
    }

    #[test]
    fn span_membership_examples() {
        let m = sparse_from_dense(3, 2, &[1, 0, 2, 1, 3, 1]);
        // First column of m.
        let v = vec![(0, q(1)), (1, q(2)), (2, q(3))];
        assert!(m.in_column_span(&v).unwrap());
        // Zero matrix spans only zero.
        let z = SparseMatrix::zero(3, 2);
        assert!(!z.in_column_span(&v).unwrap());
        assert!(z.in_column_span(&[]).unwrap());
        // Out-of-range vector errors.
        assert!(m.in_column_span(&[(5, q(1))]).is_err());
    }

    #[test]
    fn matrix_market_format() {
        let m = SparseMatrix::from_triplets(2, 2, vec![(1, 0, q_frac(-1, 2)), (0, 1, q(3))]);
        assert_eq!(m.to_matrix_market(), "2 2 2\n2 1 -1/2\n1 2 3/1\n");
    }

    #[test]
    fn dense_helpers() {
        let a = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(dense::rank(&a), 2);
        let ns = dense::nullspace(&a);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row.iter().zip(&ns[0]).map(|(x, y)| x * y).fold(Rat::zero(), |s, t| s + t);
            assert!(dot.is_zero());
        }
        let inv = dense::invert(&[vec![q(2), q(1)], vec![q(1), q(1)]]).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(dense::invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
        let x = dense::solve(&[vec![q(1), q(1)], vec![q(1), q(-1)]], &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(dense::solve(&[vec![q(1)], vec![q(1)]], &[q(0), q(1)]).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-5i64..=5, r * c)
                .prop_map(move |data| sparse_from_dense(r, c, &data))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn modular_rank_never_exceeds_exact(m in arb_matrix()) {
            let exact = m.rank_exact().unwrap();
            for &p in &PRIMES[..3] {
                prop_assert!(m.rank_modular(p).unwrap() <= exact);
            }
        }

        #[test]
        fn rank_equals_transpose_rank(m in arb_matrix()) {
            prop_assert_eq!(m.rank().value, m.transpose().rank().value);
        }

        #[test]
        fn rank_of_self_concat(m in arb_matrix()) {
            // [M | M] has the same rank as M.
            let doubled = SparseMatrix::from_triplets(
                m.rows(),
                m.cols() * 2,
                m.entries()
                    .flat_map(|(r, c, v)| {
                        [(r, c, v.clone()), (r, c + m.cols(), v.clone())]
                    })
                    .collect(),
            );
            prop_assert_eq!(doubled.rank().value, m.rank().value);
        }

        #[test]
        fn rank_matches_dense(m in arb_matrix()) {
            let dense_mat: Vec<Vec<Rat>> = (0..m.rows()).map(|r| {
                (0..m.cols()).map(|c| {
                    m.entries().find(|(er, ec, _)| *er == r && *ec == c)
                        .map(|(_, _, v)| v.clone()).unwrap_or_else(Rat::zero)
                }).collect()
            }).collect();
            prop_assert_eq!(m.rank().value, dense::rank(&dense_mat));
        }
    }
}
