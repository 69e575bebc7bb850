//! Small exact multivariate polynomials.
//!
//! Just enough arithmetic for the equivariant-map identities and automorphism
//! pullbacks: the polynomials in play are homogeneous of degree at most a
//! handful in at most eight variables.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rat;

/// Polynomial with rational coefficients; terms keyed by exponent vectors of
/// fixed length `vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u8>, Rat>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn var(vars: usize, idx: usize) -> Self {
        assert!(idx < vars);
        let mut exp = vec![0u8; vars];
        exp[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rat::from_integer(1.into()));
        Poly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: Vec<u8>, coeff: Rat) {
        assert_eq!(exp.len(), self.vars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            let keys: Vec<Vec<u8>> =
                self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in keys {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = Poly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Multiplies by the variable `idx`.
    pub fn mul_var(&self, idx: usize) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            exp[idx] += 1;
            out.add_term(exp, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &point[idx];
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes `x_i ↦ Σ_j m[i][j] x_j`.
    pub fn substitute_linear(&self, m: &[Vec<Rat>]) -> Poly {
        assert_eq!(m.len(), self.vars);
        let images: Vec<Poly> = (0..self.vars)
            .map(|i| {
                let mut p = Poly::zero(self.vars);
                for (j, c) in m[i].iter().enumerate() {
                    if !c.is_zero() {
                        p.add_term(
                            {
                                let mut e = vec![0u8; self.vars];
                                e[j] = 1;
                                e
                            },
                            c.clone(),
                        );
                    }
                }
                p
            })
            .collect();
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(self.vars, c.clone());
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&images[idx]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Total degree of the highest term, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn arithmetic_and_eval() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.eval(&[q(2), q(3)]), q(25));
        assert_eq!(sq.degree(), Some(2));
        let diff = sq.sub(&sq);
        assert!(diff.is_zero());
    }

    #[test]
    fn linear_substitution() {
        // p = x0 * x1, substitute x0 -> x0 + x1, x1 -> x1: p' = x0 x1 + x1^2.
        let p = Poly::var(2, 0).mul(&Poly::var(2, 1));
        let m = vec![vec![q(1), q(1)], vec![q(0), q(1)]];
        let sub = p.substitute_linear(&m);
        assert_eq!(sub.eval(&[q(1), q(2)]), q(2 + 4));
        // Substituting along the identity is a no-op.
        let id = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(p.substitute_linear(&id), p);
    }
}
