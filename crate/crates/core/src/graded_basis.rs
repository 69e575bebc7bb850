//! Monomial bases of the bigraded components of `S(g) ⊗ S(g) ⊗ Λ(g)`.
//!
//! An exterior generator carries bidegree `(1, 1)`, so the exterior-degree-`i`
//! component in bidegree `(p, q)` is `S^{p-i}(g) ⊗ S^{q-i}(g) ⊗ Λ^i(g)`. Basis
//! elements are ordered lexicographically on the triple (alpha, beta, J), with
//! exponent vectors and index subsets each in ascending lexicographic order,
//! which makes rank/unrank pure binomial arithmetic.

use std::fmt;

/// `binom(n, k)` as a `u64`; the component sizes in play stay far below 2^64.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as u64
}

/// Dimension of `S^a` of a `dim`-dimensional space: `binom(a+dim-1, dim-1)`
/// for `a >= 0`, and `0` for negative `a`.
pub fn sym_dimension(dim: usize, a: i64) -> u64 {
    assert!(dim >= 1, "symmetric powers need a positive dimension");
    if a < 0 {
        return 0;
    }
    binomial(a as usize + dim - 1, dim - 1)
}

/// One basis monomial: `x^alpha ⊗ y^beta ⊗ e_{j_1} ∧ … ∧ e_{j_i}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    /// Exponents of the left symmetric factor, length `dim`, degree `p - i`.
    pub alpha: Vec<u8>,
    /// Exponents of the right symmetric factor, length `dim`, degree `q - i`.
    pub beta: Vec<u8>,
    /// Strictly increasing exterior index subset, size `i`.
    pub j: Vec<u8>,
}

impl BasisIndex {
    pub fn degrees(&self) -> (usize, usize, usize) {
        let i = self.j.len();
        let pa: usize = self.alpha.iter().map(|&e| e as usize).sum();
        let pb: usize = self.beta.iter().map(|&e| e as usize).sum();
        (i, pa + i, pb + i)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?} y^{:?} e{:?}", self.alpha, self.beta, self.j)
    }
}

/// The ordered monomial basis of one bigraded component.
#[derive(Debug, Clone)]
pub struct ComponentBasis {
    dim: usize,
    i: usize,
    p: i64,
    q: i64,
    n_alpha: u64,
    n_beta: u64,
    n_j: u64,
}

/// Basis of the component of exterior degree `i` in bidegree `(p, q)`.
/// Degenerate inputs (negative symmetric degree, `i > dim`) give the empty
/// basis.
pub fn component_basis(dim: usize, i: usize, p: i64, q: i64) -> ComponentBasis {
    assert!(dim >= 1);
    let da = p - i as i64;
    let db = q - i as i64;
    let (n_alpha, n_beta, n_j) = if da < 0 || db < 0 || i > dim {
        (0, 0, 0)
    } else {
        (sym_dimension(dim, da), sym_dimension(dim, db), binomial(dim, i))
    };
    ComponentBasis { dim, i, p, q, n_alpha, n_beta, n_j }
}

impl ComponentBasis {
    pub fn dim_space(&self) -> usize {
        self.dim
    }

    pub fn exterior_degree(&self) -> usize {
        self.i
    }

    pub fn bidegree(&self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// Total dimension `s(p-i) * s(q-i) * binom(dim, i)`.
    pub fn len(&self) -> usize {
        (self.n_alpha * self.n_beta * self.n_j) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position of a basis element in the canonical order.
    pub fn rank_index(&self, b: &BasisIndex) -> Option<usize> {
        if b.alpha.len() != self.dim || b.beta.len() != self.dim || b.j.len() != self.i {
            return None;
        }
        let (i, p, q) = b.degrees();
        if i != self.i || p as i64 != self.p || q as i64 != self.q {
            return None;
        }
        let ra = composition_rank(&b.alpha);
        let rb = composition_rank(&b.beta);
        let rj = subset_rank(self.dim, &b.j)?;
        Some(((ra * self.n_beta + rb) * self.n_j + rj) as usize)
    }

    /// Basis element at a given position.
    pub fn unrank_index(&self, n: usize) -> Option<BasisIndex> {
        if n >= self.len() {
            return None;
        }
        let n = n as u64;
        let rj = n % self.n_j;
        let rest = n / self.n_j;
        let rb = rest % self.n_beta;
        let ra = rest / self.n_beta;
        Some(BasisIndex {
            alpha: composition_unrank(self.dim, (self.p - self.i as i64) as usize, ra),
            beta: composition_unrank(self.dim, (self.q - self.i as i64) as usize, rb),
            j: subset_unrank(self.dim, self.i, rj),
        })
    }

    /// Iterates the basis in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        (0..self.len()).map(move |n| self.unrank_index(n).expect("in range"))
    }

    /// Materialized ordered list.
    pub fn elements(&self) -> Vec<BasisIndex> {
        self.iter().collect()
    }
}

/// Number of exponent vectors of the given degree over `parts` slots.
fn composition_count(degree: usize, parts: usize) -> u64 {
    if parts == 0 {
        return (degree == 0) as u64;
    }
    binomial(degree + parts - 1, parts - 1)
}

/// Rank of an exponent vector among all of its degree, ascending lex.
fn composition_rank(v: &[u8]) -> u64 {
    let mut rem: usize = v.iter().map(|&e| e as usize).sum();
    let mut rank = 0u64;
    for (idx, &e) in v.iter().enumerate() {
        let tail = v.len() - idx - 1;
        for w in 0..e as usize {
            rank += composition_count(rem - w, tail);
        }
        rem -= e as usize;
    }
    rank
}

fn composition_unrank(parts: usize, degree: usize, mut rank: u64) -> Vec<u8> {
    let mut v = vec![0u8; parts];
    let mut rem = degree;
    for idx in 0..parts {
        let tail = parts - idx - 1;
        let mut w = 0usize;
        loop {
            let block = composition_count(rem - w, tail);
            if rank < block {
                break;
            }
            rank -= block;
            w += 1;
        }
        v[idx] = w as u8;
        rem -= w;
    }
    debug_assert_eq!(rem, 0);
    v
}

/// Rank of a strictly increasing subset of `{0, …, n-1}` in lex order.
fn subset_rank(n: usize, j: &[u8]) -> Option<u64> {
    let k = j.len();
    let mut rank = 0u64;
    let mut prev: i64 = -1;
    for (t, &jt) in j.iter().enumerate() {
        if (jt as i64) <= prev || jt as usize >= n {
            return None;
        }
        for v in (prev + 1) as usize..jt as usize {
            rank += binomial(n - 1 - v, k - 1 - t);
        }
        prev = jt as i64;
    }
    Some(rank)
}

fn subset_unrank(n: usize, k: usize, mut rank: u64) -> Vec<u8> {
    let mut j = Vec::with_capacity(k);
    let mut v = 0usize;
    for t in 0..k {
        loop {
            let block = binomial(n - 1 - v, k - 1 - t);
            if rank < block {
                break;
            }
            rank -= block;
            v += 1;
        }
        j.push(v as u8);
        v += 1;
    }
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sym_dimension_examples() {
        assert_eq!(sym_dimension(3, 2), 6);
        assert_eq!(sym_dimension(8, 0), 1);
        assert_eq!(sym_dimension(3, 5), 21);
        assert_eq!(sym_dimension(4, -1), 0);
    }

    #[test]
    fn component_dimensions() {
        // dim 3 stands in for sl2.
        assert_eq!(component_basis(3, 1, 1, 1).len(), 3);
        assert_eq!(component_basis(3, 1, 2, 1).len(), 9);
        assert_eq!(component_basis(3, 2, 1, 2).len(), 0); // p < i
        assert_eq!(component_basis(3, 4, 4, 4).len(), 0); // i > dim
        assert_eq!(component_basis(3, 0, 0, 0).len(), 1);
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for dim in [1usize, 2, 3, 6] {
            for i in 0..=dim + 1 {
                for p in 0..6i64 {
                    for q in 0..6i64 {
                        let basis = component_basis(dim, i, p, q);
                        assert_eq!(basis.iter().count(), basis.len());
                    }
                }
            }
        }
    }

    #[test]
    fn first_element_and_order() {
        let basis = component_basis(3, 0, 1, 1);
        let first = basis.unrank_index(0).unwrap();
        assert_eq!(basis.rank_index(&first), Some(0));
        // Ranks are strictly monotone in the canonical order, which agrees
        // with the derived lexicographic order on (alpha, beta, j).
        let elems = basis.elements();
        for w in elems.windows(2) {
            assert!(w[0] < w[1]);
            assert!(basis.rank_index(&w[0]).unwrap() < basis.rank_index(&w[1]).unwrap());
        }
    }

    #[test]
    fn round_trip_large_component() {
        // dim 8 stands in for sl3.
        let basis = component_basis(8, 2, 3, 2);
        assert_eq!(basis.len(), 8 * 1 * 28);
        for (n, b) in basis.iter().enumerate() {
            assert_eq!(basis.rank_index(&b), Some(n));
            assert_eq!(basis.unrank_index(n).unwrap(), b);
        }
    }

    #[test]
    fn out_of_component_lookup_fails() {
        let basis = component_basis(3, 1, 2, 2);
        let foreign = BasisIndex { alpha: vec![2, 0, 0], beta: vec![1, 0, 0], j: vec![0] };
        assert_eq!(basis.rank_index(&foreign), None);
        assert_eq!(basis.unrank_index(basis.len()), None);
    }

    #[test]
    fn alternating_sums_agree() {
        // Alternating sum of enumerated component sizes equals the same sum
        // of the closed-form products, for every catalog dimension.
        for dim in [1usize, 2, 3, 4, 6, 8] {
            for p in 0..=6i64 {
                for q in 0..=(6 - p) {
                    let enumerated: i64 = (0..=dim)
                        .map(|i| {
                            let len = component_basis(dim, i, p, q).iter().count() as i64;
                            if i % 2 == 0 {
                                len
                            } else {
                                -len
                            }
                        })
                        .sum();
                    let closed: i64 = (0..=dim)
                        .map(|i| {
                            let term = (sym_dimension(dim, p - i as i64)
                                * sym_dimension(dim, q - i as i64)
                                * binomial(dim, i)) as i64;
                            if i % 2 == 0 {
                                term
                            } else {
                                -term
                            }
                        })
                        .sum();
                    assert_eq!(enumerated, closed);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rank_unrank_inverse(dim in 1usize..6, i in 0usize..4, p in 0i64..7, q in 0i64..7) {
            let basis = component_basis(dim, i, p, q);
            for n in 0..basis.len() {
                let b = basis.unrank_index(n).unwrap();
                prop_assert_eq!(basis.rank_index(&b), Some(n));
            }
        }
    }
}
