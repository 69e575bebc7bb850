//! Reductive Lie algebras given by structure constants, with an invariant
//! nondegenerate bilinear form extending the Killing form of the semisimple
//! part.
//!
//! Catalog entries are built from an explicit basis of matrices in a defining
//! representation: structure constants come from expanding commutators in
//! that basis, the form is the Killing form on the derived part extended by
//! the identity on the center, and the stored rank is the textbook value,
//! cross-validated by sampled centralizer dimensions.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_linalg::dense;
use crate::rational::{q, Rat};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("unknown catalog algebra `{0}`")]
    UnknownCatalogName(String),
    #[error("dimension mismatch: expected vectors of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid algebra data: {0}")]
    InvalidData(String),
}

/// Which catalog family an algebra came from; drives the closed-form data
/// (invariant vector fields, regular samples, nilpotent directions) that the
/// cycle and equivariance machinery needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogClass {
    Abelian,
    Sl2,
    Sl3,
    Gl2,
    Sl2xSl2,
    So3,
}

/// A finite-dimensional Lie algebra over the rationals.
///
/// Basis convention: the derived-part basis vectors come first, the chosen
/// center basis last (`center_indices` records the center positions, so the
/// convention survives basis permutations).
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    /// `structure[a][b][k]` is the coefficient of `e_k` in `[e_a, e_b]`.
    structure: Vec<Vec<Vec<Rat>>>,
    /// The invariant form `B[a][b] = ⟨e_a, e_b⟩`.
    form: Vec<Vec<Rat>>,
    rank: usize,
    center_indices: Vec<usize>,
    class: Option<CatalogClass>,
    /// Basis matrices of the defining representation, for catalog entries.
    matrix_basis: Option<Vec<Vec<Vec<Rat>>>>,
}

impl LieAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn center_dim(&self) -> usize {
        self.center_indices.len()
    }

    pub fn center_indices(&self) -> &[usize] {
        &self.center_indices
    }

    pub fn class(&self) -> Option<CatalogClass> {
        self.class
    }

    pub fn structure_constant(&self, a: usize, b: usize, k: usize) -> &Rat {
        &self.structure[a][b][k]
    }

    pub fn form(&self, a: usize, b: usize) -> &Rat {
        &self.form[a][b]
    }

    pub fn matrix_basis(&self) -> Option<&[Vec<Vec<Rat>>]> {
        self.matrix_basis.as_deref()
    }

    /// `[x, y]` in basis coordinates.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: x.len().max(y.len()),
            });
        }
        let mut out = vec![Rat::zero(); self.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let xy = xa * yb;
                for (k, c) in self.structure[a][b].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x`, columns indexed by basis vectors.
    pub fn ad_matrix(&self, x: &[Rat]) -> Vec<Vec<Rat>> {
        let mut m = vec![vec![Rat::zero(); self.dim]; self.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..self.dim {
                for (k, c) in self.structure[a][b].iter().enumerate() {
                    if !c.is_zero() {
                        m[k][b] += xa * c;
                    }
                }
            }
        }
        m
    }

    /// Killing form `K(e_a, e_b) = trace(ad e_a ∘ ad e_b)` from the structure
    /// constants.
    pub fn killing_matrix(&self) -> Vec<Vec<Rat>> {
        let d = self.dim;
        let mut k = vec![vec![Rat::zero(); d]; d];
        for a in 0..d {
            for b in a..d {
                let mut acc = Rat::zero();
                for u in 0..d {
                    for w in 0..d {
                        let c1 = &self.structure[a][u][w];
                        if c1.is_zero() {
                            continue;
                        }
                        let c2 = &self.structure[b][w][u];
                        if !c2.is_zero() {
                            acc += c1 * c2;
                        }
                    }
                }
                k[a][b] = acc.clone();
                k[b][a] = acc;
            }
        }
        k
    }

    /// The same algebra in a permuted basis: `e'_a = e_{perm[a]}`.
    pub fn permuted(&self, perm: &[usize]) -> LieAlgebra {
        assert_eq!(perm.len(), self.dim, "permutation length mismatch");
        let d = self.dim;
        let mut inv = vec![0usize; d];
        for (a, &pa) in perm.iter().enumerate() {
            inv[pa] = a;
        }
        let mut structure = vec![vec![vec![Rat::zero(); d]; d]; d];
        let mut form = vec![vec![Rat::zero(); d]; d];
        for a in 0..d {
            for b in 0..d {
                form[a][b] = self.form[perm[a]][perm[b]].clone();
                for k in 0..d {
                    structure[a][b][k] = self.structure[perm[a]][perm[b]][perm[k]].clone();
                }
            }
        }
        LieAlgebra {
            name: format!("{}-permuted", self.name),
            dim: d,
            structure,
            form,
            rank: self.rank,
            center_indices: self.center_indices.iter().map(|&z| inv[z]).collect(),
            class: self.class,
            matrix_basis: self
                .matrix_basis
                .as_ref()
                .map(|mb| perm.iter().map(|&a| mb[a].clone()).collect()),
        }
    }

    /// The same algebra with the form rescaled by a nonzero constant. The
    /// result no longer matches the Killing form on the derived part, so it
    /// fails strict validation; homology dimensions must not change.
    pub fn with_scaled_form(&self, c: &Rat) -> LieAlgebra {
        assert!(!c.is_zero(), "scaling must be nonzero");
        let mut scaled = self.clone();
        scaled.name = format!("{}-scaled", self.name);
        for row in &mut scaled.form {
            for v in row.iter_mut() {
                *v *= c;
            }
        }
        scaled
    }
}

/// Names understood by [`build_catalog_algebra`].
pub fn catalog_names() -> Vec<&'static str> {
    vec!["abelian1", "abelian2", "abelian3", "abelian4", "sl2", "sl3", "gl2", "sl2xsl2", "so3"]
}

/// Builds and validates a catalog algebra.
///
/// Accepted names: `abelian1` … `abelian4` (also `abelian(n)`), `sl2`, `sl3`,
/// `gl2`, `sl2xsl2` (also `sl2×sl2`), `so3`.
pub fn build_catalog_algebra(name: &str) -> Result<LieAlgebra, AlgebraError> {
    let normalized = name.trim().to_lowercase();
    let (class, rank, center, mats, stored_name): (CatalogClass, usize, usize, _, String) =
        match normalized.as_str() {
            "abelian1" | "abelian(1)" => (CatalogClass::Abelian, 1, 1, abelian_basis(1), "abelian1".into()),
            "abelian2" | "abelian(2)" => (CatalogClass::Abelian, 2, 2, abelian_basis(2), "abelian2".into()),
            "abelian3" | "abelian(3)" => (CatalogClass::Abelian, 3, 3, abelian_basis(3), "abelian3".into()),
            "abelian4" | "abelian(4)" => (CatalogClass::Abelian, 4, 4, abelian_basis(4), "abelian4".into()),
            "sl2" => (CatalogClass::Sl2, 1, 0, sl2_basis(), "sl2".into()),
            "sl3" => (CatalogClass::Sl3, 2, 0, sl3_basis(), "sl3".into()),
            "gl2" => (CatalogClass::Gl2, 2, 1, gl2_basis(), "gl2".into()),
            "sl2xsl2" | "sl2×sl2" | "sl2xsl2 " => {
                (CatalogClass::Sl2xSl2, 2, 0, sl2xsl2_basis(), "sl2xsl2".into())
            }
            "so3" => (CatalogClass::So3, 1, 0, so3_basis(), "so3".into()),
            _ => return Err(AlgebraError::UnknownCatalogName(name.to_string())),
        };
    let algebra = from_matrix_basis(stored_name, mats, rank, center, class)?;
    let report = validate_algebra(&algebra);
    if !report.all_passed() {
        return Err(AlgebraError::InvalidData(format!(
            "catalog entry failed validation: {}",
            report.failures().join("; ")
        )));
    }
    Ok(algebra)
}

fn unit_matrix(n: usize, r: usize, c: usize) -> Vec<Vec<Rat>> {
    let mut m = vec![vec![Rat::zero(); n]; n];
    m[r][c] = Rat::one();
    m
}

fn mat_sub(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

fn abelian_basis(n: usize) -> Vec<Vec<Vec<Rat>>> {
    (0..n).map(|k| unit_matrix(n, k, k)).collect()
}

fn sl2_basis() -> Vec<Vec<Vec<Rat>>> {
    // (e, h, f)
    vec![
        unit_matrix(2, 0, 1),
        mat_sub(&unit_matrix(2, 0, 0), &unit_matrix(2, 1, 1)),
        unit_matrix(2, 1, 0),
    ]
}

fn sl3_basis() -> Vec<Vec<Vec<Rat>>> {
    // (E12, E13, E23, E21, E31, E32, H1, H2) with H1 = E11 - E22, H2 = E22 - E33.
    vec![
        unit_matrix(3, 0, 1),
        unit_matrix(3, 0, 2),
        unit_matrix(3, 1, 2),
        unit_matrix(3, 1, 0),
        unit_matrix(3, 2, 0),
        unit_matrix(3, 2, 1),
        mat_sub(&unit_matrix(3, 0, 0), &unit_matrix(3, 1, 1)),
        mat_sub(&unit_matrix(3, 1, 1), &unit_matrix(3, 2, 2)),
    ]
}

fn gl2_basis() -> Vec<Vec<Vec<Rat>>> {
    // (e, h, f, id) with the center last.
    let mut mats = sl2_basis();
    let mut id = vec![vec![Rat::zero(); 2]; 2];
    id[0][0] = Rat::one();
    id[1][1] = Rat::one();
    mats.push(id);
    mats
}

fn sl2xsl2_basis() -> Vec<Vec<Vec<Rat>>> {
    // Block-diagonal 4x4 copies: (e1, h1, f1, e2, h2, f2).
    let embed = |m: &[Vec<Rat>], off: usize| -> Vec<Vec<Rat>> {
        let mut out = vec![vec![Rat::zero(); 4]; 4];
        for r in 0..2 {
            for c in 0..2 {
                out[r + off][c + off] = m[r][c].clone();
            }
        }
        out
    };
    let sl2 = sl2_basis();
    let mut mats: Vec<_> = sl2.iter().map(|m| embed(m, 0)).collect();
    mats.extend(sl2.iter().map(|m| embed(m, 2)));
    mats
}

fn so3_basis() -> Vec<Vec<Vec<Rat>>> {
    // Rotation generators (L1, L2, L3) with [L1, L2] = L3 cyclically.
    vec![
        mat_sub(&unit_matrix(3, 2, 1), &unit_matrix(3, 1, 2)),
        mat_sub(&unit_matrix(3, 0, 2), &unit_matrix(3, 2, 0)),
        mat_sub(&unit_matrix(3, 1, 0), &unit_matrix(3, 0, 1)),
    ]
}

fn commutator(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = Rat::zero();
            for t in 0..n {
                acc += &a[r][t] * &b[t][c];
                acc -= &b[r][t] * &a[t][c];
            }
            out[r][c] = acc;
        }
    }
    out
}

fn flatten(m: &[Vec<Rat>]) -> Vec<Rat> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

/// Derives structure constants from a matrix basis and attaches the catalog
/// form: Killing on the derived part, identity on the center, zero across.
fn from_matrix_basis(
    name: String,
    mats: Vec<Vec<Vec<Rat>>>,
    rank: usize,
    center_dim: usize,
    class: CatalogClass,
) -> Result<LieAlgebra, AlgebraError> {
    let dim = mats.len();
    let flat: Vec<Vec<Rat>> = mats.iter().map(|m| flatten(m)).collect();
    // Columns of `span` are the basis matrices, flattened.
    let cells = flat[0].len();
    let span: Vec<Vec<Rat>> =
        (0..cells).map(|r| (0..dim).map(|c| flat[c][r].clone()).collect()).collect();
    let mut structure = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let comm = flatten(&commutator(&mats[a], &mats[b]));
            let coeffs = dense::solve(&span, &comm).ok_or_else(|| {
                AlgebraError::InvalidData("commutator leaves the span of the basis".into())
            })?;
            structure[a][b] = coeffs;
        }
    }
    let mut algebra = LieAlgebra {
        name,
        dim,
        structure,
        form: vec![vec![Rat::zero(); dim]; dim],
        rank,
        center_indices: (dim - center_dim..dim).collect(),
        class: Some(class),
        matrix_basis: Some(mats),
    };
    let killing = algebra.killing_matrix();
    let mut form = killing;
    for &z in &algebra.center_indices {
        for t in 0..dim {
            form[z][t] = Rat::zero();
            form[t][z] = Rat::zero();
        }
        form[z][z] = Rat::one();
    }
    algebra.form = form;
    Ok(algebra)
}

/// Outcome of one validation check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Exact validation report for every algebra axiom.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect()
    }
}

/// Checks every invariant of the algebra exactly; never panics on bad data.
pub fn validate_algebra(algebra: &LieAlgebra) -> ValidationReport {
    let d = algebra.dim;
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check { name: name.to_string(), passed, detail });
    };

    // Antisymmetry of the bracket.
    let mut anti_ok = true;
    'anti: for a in 0..d {
        for b in 0..d {
            for k in 0..d {
                if &algebra.structure[a][b][k] + &algebra.structure[b][a][k] != Rat::zero() {
                    anti_ok = false;
                    break 'anti;
                }
            }
        }
    }
    push("antisymmetry", anti_ok, "c[a][b][k] = -c[b][a][k]".into());

    // Jacobi identity on all basis triples.
    let mut jacobi_ok = true;
    'jac: for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for m in 0..d {
                    let mut acc = Rat::zero();
                    for k in 0..d {
                        acc += &algebra.structure[b][c][k] * &algebra.structure[a][k][m];
                        acc += &algebra.structure[c][a][k] * &algebra.structure[b][k][m];
                        acc += &algebra.structure[a][b][k] * &algebra.structure[c][k][m];
                    }
                    if !acc.is_zero() {
                        jacobi_ok = false;
                        break 'jac;
                    }
                }
            }
        }
    }
    push("jacobi", jacobi_ok, "cyclic sum of double brackets vanishes".into());

    // Form symmetry and nondegeneracy.
    let sym_ok = (0..d).all(|a| (0..d).all(|b| algebra.form[a][b] == algebra.form[b][a]));
    push("form_symmetric", sym_ok, "B[a][b] = B[b][a]".into());
    let nondeg = dense::rank(&algebra.form) == d;
    push("form_nondegenerate", nondeg, "det B != 0".into());

    // Invariance of the form.
    let mut inv_ok = true;
    'inv: for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let mut acc = Rat::zero();
                for k in 0..d {
                    acc += &algebra.structure[a][b][k] * &algebra.form[k][c];
                    acc += &algebra.structure[a][c][k] * &algebra.form[b][k];
                }
                if !acc.is_zero() {
                    inv_ok = false;
                    break 'inv;
                }
            }
        }
    }
    push("form_invariant", inv_ok, "<[x,y],z> + <y,[x,z]> = 0".into());

    // The form restricted to the derived part is the Killing form, the
    // center really is central, and the center is B-orthogonal to the rest.
    let killing = algebra.killing_matrix();
    let is_center = |t: usize| algebra.center_indices.contains(&t);
    let mut killing_ok = true;
    let mut center_ok = true;
    for a in 0..d {
        for b in 0..d {
            if !is_center(a) && !is_center(b) && algebra.form[a][b] != killing[a][b] {
                killing_ok = false;
            }
        }
        if is_center(a) {
            for b in 0..d {
                for k in 0..d {
                    if !algebra.structure[a][b][k].is_zero() {
                        center_ok = false;
                    }
                }
            }
        }
    }
    push("killing_extension", killing_ok, "B = Killing form on the derived part".into());
    push("center_central", center_ok, "ad z = 0 for the chosen center basis".into());

    // Sampled centralizer dimensions agree with the stored rank.
    let est = rank_estimate(algebra, 20, 0);
    push(
        "rank_estimate",
        est == algebra.rank,
        format!("min sampled dim ker(ad x) = {est}, stored rank = {}", algebra.rank),
    );

    ValidationReport { algebra: algebra.name.clone(), checks }
}

/// Minimum of `dim ker(ad x)` over deterministic random integer samples
/// with entries in `[-10, 10]`.
pub fn rank_estimate(algebra: &LieAlgebra, samples: usize, seed: u64) -> usize {
    assert!(samples >= 1, "need at least one sample");
    let mut rng = crate::seeded_rng(seed);
    let mut best = algebra.dim;
    for _ in 0..samples {
        let x: Vec<Rat> = (0..algebra.dim).map(|_| q(rng.gen_range(-10..=10))).collect();
        let ad = algebra.ad_matrix(&x);
        let kernel = algebra.dim - dense::rank(&ad);
        best = best.min(kernel);
    }
    best
}

/// JSON document form of an algebra: sparse structure constants as
/// `[a, b, k, num, den]` rows and form entries as `[a, b, num, den]`,
/// 0-based indices.
#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub center_dim: usize,
    pub structure_constants: Vec<(usize, usize, usize, i64, i64)>,
    pub form: Vec<(usize, usize, i64, i64)>,
}

pub fn to_document(algebra: &LieAlgebra) -> AlgebraDocument {
    let as_i64 = |v: &Rat| -> (i64, i64) {
        (
            v.numer().to_i64().expect("catalog numerators fit i64"),
            v.denom().to_i64().expect("catalog denominators fit i64"),
        )
    };
    let mut structure_constants = Vec::new();
    for a in 0..algebra.dim {
        for b in 0..algebra.dim {
            for k in 0..algebra.dim {
                let v = &algebra.structure[a][b][k];
                if !v.is_zero() {
                    let (n, d) = as_i64(v);
                    structure_constants.push((a, b, k, n, d));
                }
            }
        }
    }
    let mut form = Vec::new();
    for a in 0..algebra.dim {
        for b in 0..algebra.dim {
            let v = &algebra.form[a][b];
            if !v.is_zero() {
                let (n, d) = as_i64(v);
                form.push((a, b, n, d));
            }
        }
    }
    AlgebraDocument {
        name: algebra.name.clone(),
        dim: algebra.dim,
        rank: algebra.rank,
        center_dim: algebra.center_indices.len(),
        structure_constants,
        form,
    }
}

/// Rebuilds an algebra from its JSON document. The result carries no catalog
/// metadata (matrix basis, family), so catalog-only operations reject it.
pub fn from_document(doc: &AlgebraDocument) -> Result<LieAlgebra, AlgebraError> {
    let d = doc.dim;
    if d == 0 {
        return Err(AlgebraError::InvalidData("dimension must be positive".into()));
    }
    let mut structure = vec![vec![vec![Rat::zero(); d]; d]; d];
    for &(a, b, k, num, den) in &doc.structure_constants {
        if a >= d || b >= d || k >= d || den == 0 {
            return Err(AlgebraError::InvalidData(format!("bad structure row ({a},{b},{k})")));
        }
        structure[a][b][k] = Rat::new(num.into(), den.into());
    }
    let mut form = vec![vec![Rat::zero(); d]; d];
    for &(a, b, num, den) in &doc.form {
        if a >= d || b >= d || den == 0 {
            return Err(AlgebraError::InvalidData(format!("bad form row ({a},{b})")));
        }
        form[a][b] = Rat::new(num.into(), den.into());
    }
    if doc.center_dim > d || doc.rank == 0 || doc.rank > d {
        return Err(AlgebraError::InvalidData("rank/center out of range".into()));
    }
    Ok(LieAlgebra {
        name: doc.name.clone(),
        dim: d,
        structure,
        form,
        rank: doc.rank,
        center_indices: (d - doc.center_dim..d).collect(),
        class: None,
        matrix_basis: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;
    use proptest::prelude::*;

    #[test]
    fn abelian2_catalog() {
        let a = build_catalog_algebra("abelian(2)").unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.center_dim(), 2);
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(a.form(x, y), &if x == y { q(1) } else { q(0) });
                for k in 0..2 {
                    assert!(a.structure_constant(x, y, k).is_zero());
                }
            }
        }
    }

    #[test]
    fn sl2_killing_form() {
        let a = build_catalog_algebra("sl2").unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.rank(), 1);
        // Basis (e, h, f): <h,h> = 8, <e,f> = 4, everything else 0.
        assert_eq!(a.form(1, 1), &q(8));
        assert_eq!(a.form(0, 2), &q(4));
        assert_eq!(a.form(2, 0), &q(4));
        for (x, y) in [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)] {
            assert!(a.form(x, y).is_zero());
        }
        // [h,e] = 2e, [h,f] = -2f, [e,f] = h.
        let e = [q(1), q(0), q(0)];
        let h = [q(0), q(1), q(0)];
        let f = [q(0), q(0), q(1)];
        assert_eq!(a.bracket(&h, &e).unwrap(), vec![q(2), q(0), q(0)]);
        assert_eq!(a.bracket(&h, &f).unwrap(), vec![q(0), q(0), q(-2)]);
        assert_eq!(a.bracket(&e, &f).unwrap(), h.to_vec());
    }

    #[test]
    fn sl3_dimensions() {
        let a = build_catalog_algebra("sl3").unwrap();
        assert_eq!(a.dim(), 8);
        assert_eq!(a.rank(), 2);
        assert_eq!(rank_estimate(&a, 20, 1), 2);
    }

    #[test]
    fn catalog_validates() {
        for name in catalog_names() {
            let a = build_catalog_algebra(name).unwrap();
            let report = validate_algebra(&a);
            assert!(report.all_passed(), "{name}: {:?}", report.failures());
        }
        assert!(matches!(
            build_catalog_algebra("e8"),
            Err(AlgebraError::UnknownCatalogName(_))
        ));
    }

    #[test]
    fn corrupted_constants_fail_validation() {
        let mut a = build_catalog_algebra("sl2").unwrap();
        // Flip the sign of the e_h coefficient in [e, f].
        a.structure[0][2][1] = -a.structure[0][2][1].clone();
        a.structure[2][0][1] = -a.structure[2][0][1].clone();
        let report = validate_algebra(&a);
        assert!(!report.all_passed());
        assert!(report
            .failures()
            .iter()
            .any(|f| f.contains("jacobi") || f.contains("form_invariant") || f.contains("killing")));
    }

    #[test]
    fn abelian3_killing_is_zero() {
        let a = build_catalog_algebra("abelian3").unwrap();
        let k = a.killing_matrix();
        assert!(k.iter().all(|row| row.iter().all(|v| v.is_zero())));
        assert!(validate_algebra(&a).all_passed());
    }

    #[test]
    fn rank_estimates_match_catalog() {
        for name in catalog_names() {
            let a = build_catalog_algebra(name).unwrap();
            for seed in 0..10 {
                assert_eq!(rank_estimate(&a, 20, seed), a.rank(), "{name} seed {seed}");
            }
        }
    }

    #[test]
    fn direct_sum_rank_is_additive() {
        let a = build_catalog_algebra("sl2xsl2").unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.rank(), 2);
        assert_eq!(rank_estimate(&a, 20, 0), 2);
    }

    #[test]
    fn document_round_trip() {
        for name in ["sl2", "gl2", "abelian2"] {
            let a = build_catalog_algebra(name).unwrap();
            let doc = to_document(&a);
            let json = serde_json::to_string(&doc).unwrap();
            let parsed: AlgebraDocument = serde_json::from_str(&json).unwrap();
            let b = from_document(&parsed).unwrap();
            assert_eq!(a.dim(), b.dim());
            assert_eq!(a.rank(), b.rank());
            assert_eq!(a.center_dim(), b.center_dim());
            for x in 0..a.dim() {
                for y in 0..a.dim() {
                    assert_eq!(a.form(x, y), b.form(x, y));
                    for k in 0..a.dim() {
                        assert_eq!(a.structure_constant(x, y, k), b.structure_constant(x, y, k));
                    }
                }
            }
            assert!(validate_algebra(&b).all_passed());
        }
    }

    #[test]
    fn permuted_algebra_still_valid() {
        let a = build_catalog_algebra("sl3").unwrap();
        let p = a.permuted(&[3, 1, 4, 0, 6, 2, 7, 5]);
        assert!(validate_algebra(&p).all_passed());
        let g = build_catalog_algebra("gl2").unwrap().permuted(&[3, 0, 1, 2]);
        assert!(validate_algebra(&g).all_passed(), "{:?}", validate_algebra(&g).failures());
    }

    #[test]
    fn scaled_form_fails_only_killing_match() {
        let a = build_catalog_algebra("sl2").unwrap().with_scaled_form(&q(2));
        let report = validate_algebra(&a);
        let failed: Vec<_> =
            report.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
        assert_eq!(failed, vec!["killing_extension".to_string()]);
    }

    fn arb_vec(dim: usize) -> impl Strategy<Value = Vec<Rat>> {
        proptest::collection::vec((-6i64..=6, 1i64..=3), dim)
            .prop_map(|v| v.into_iter().map(|(n, d)| q_frac(n, d)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn bracket_bilinear_antisymmetric(x in arb_vec(3), y in arb_vec(3), s in -4i64..=4) {
            let a = build_catalog_algebra("sl2").unwrap();
            let xy = a.bracket(&x, &y).unwrap();
            let yx = a.bracket(&y, &x).unwrap();
            for (u, v) in xy.iter().zip(&yx) {
                prop_assert_eq!(u.clone(), -v.clone());
            }
            // [x, x] = 0 and [s*x, y] = s*[x, y].
            prop_assert!(a.bracket(&x, &x).unwrap().iter().all(|v| v.is_zero()));
            let sx: Vec<Rat> = x.iter().map(|v| v * q(s)).collect();
            let sxy = a.bracket(&sx, &y).unwrap();
            for (u, v) in sxy.iter().zip(&xy) {
                prop_assert_eq!(u.clone(), v * q(s));
            }
        }
    }
}
