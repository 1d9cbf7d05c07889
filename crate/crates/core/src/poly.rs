//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::rational::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Polynomial {
        Polynomial::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, k: usize) -> Polynomial {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Polynomial::monomial(e, Rat::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// The linear form `sum_k coeffs[k] * x_k`.
    pub fn linear(coeffs: &[Rat]) -> Polynomial {
        let n = coeffs.len();
        let mut p = Polynomial::zero(n);
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[k] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rat {
        self.terms.get(exponents).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: Rat) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degrees of the monomials present (empty for the zero polynomial).
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees().last().copied().unwrap_or(0)
    }

    pub fn scale(&self, s: &Rat) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (e, c)| {
            let m = e.iter().zip(x).fold(c.clone(), |m, (&k, xi)| m * num_traits::pow(xi.clone(), k as usize));
            acc + m
        })
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(rational::to_f64(c), |m, (&k, &xi)| m * xi.powi(k as i32)))
            .sum()
    }

    /// Substitute `x_k -> forms[k]`, where every form lives in the same ring.
    pub fn substitute(&self, forms: &[Polynomial]) -> Polynomial {
        assert_eq!(forms.len(), self.nvars);
        let target = forms.first().map_or(0, |f| f.nvars);
        let max_deg = self.terms.keys().flatten().copied().max().unwrap_or(0);
        // powers[k][d] = forms[k]^d
        let powers: Vec<Vec<Polynomial>> = forms
            .iter()
            .map(|f| {
                let mut v = vec![Polynomial::one(target)];
                for d in 1..=max_deg as usize {
                    let next = &v[d - 1] * f;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (k, &d) in e.iter().enumerate() {
                if d > 0 {
                    term = &term * &powers[k][d as usize];
                }
            }
            out = out + term;
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { nvars: self.nvars, terms: acc }
    }
}
