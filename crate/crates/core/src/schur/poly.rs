//! Sparse multivariate polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::pow_rational;

/// Exponent vectors of fixed length `nvars` mapped to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// `x_{i+1}`, with `i` zero-based.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, k) in &self.terms {
            p.add_term(e.clone(), k * c);
        }
        p
    }

    /// Re-reads the variables as `x_{offset+1}, ...` inside `nvars` variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= nvars, "embedding does not fit");
        let mut p = Self::zero(nvars);
        for (e, k) in &self.terms {
            let mut f = vec![0; nvars];
            f[offset..offset + self.nvars].copy_from_slice(e);
            p.add_term(f, k.clone());
        }
        p
    }

    /// Substitutes `x_i -> x_{perm[i]}` (zero-based).
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut p = Self::zero(self.nvars);
        for (e, k) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            p.add_term(f, k.clone());
        }
        p
    }

    pub fn total_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().sum())
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, k) in &self.terms {
            let mut t = BigRational::from_integer(k.clone());
            for (x, &p) in point.iter().zip(e) {
                t *= pow_rational(x, p as i64).expect("nonnegative power");
            }
            acc += t;
        }
        acc
    }

    /// Sum of the coefficients, i.e. the value at `x_i = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The first monomial (in canonical order) where the two differ.
    pub fn first_difference(&self, other: &Polynomial) -> Option<(Vec<u32>, BigInt, BigInt)> {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_by(|a, b| b.cmp(a));
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coefficient(e), other.coefficient(e));
            (a != b).then(|| (e.clone(), a, b))
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, k) in &rhs.terms {
            p.add_term(e.clone(), k.clone());
        }
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = Polynomial::zero(self.nvars);
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                let g = e.iter().zip(f).map(|(x, y)| x + y).collect();
                p.add_term(g, a * b);
            }
        }
        p
    }
}

/// Canonical text: monomials in descending lexicographic order of exponent
/// vectors, explicit coefficients, e.g. `2*x1^2*x2 + x1*x2^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
