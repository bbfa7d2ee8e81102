//! Monomials (exponent vectors) and monomial orders.

use std::cmp::Ordering;

/// A total order on monomials, compatible with multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    GRevLex,
    /// Pure lexicographic.
    Lex,
    /// Block elimination order: total degree on the first `k` variables
    /// first, ties broken by GRevLex on all variables.
    Eliminate(usize),
}

/// An exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Monomial {
        Monomial {
            exps: vec![0; n],
            degree: 0,
        }
    }

    /// The monomial `x_i^e`.
    pub fn var_pow(n: usize, i: usize, e: u32) -> Monomial {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Total degree restricted to the first `k` variables.
    pub fn block_degree(&self, k: usize) -> u32 {
        self.exps[..k].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, or `None` when not divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exps)
    }

    /// True when the supports are disjoint.
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }
}

/// Compare two monomials of the same ring under `order`.
///
/// GRevLex: higher total degree wins; on ties the monomial with the smaller
/// exponent in the last variable where they differ is the larger one.
/// Lex: leftmost differing exponent, larger wins. Eliminate(k): total degree
/// on the first `k` variables first, then GRevLex over everything.
pub fn cmp_monomials(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    match order {
        MonomialOrder::Lex => cmp_lex(a, b),
        MonomialOrder::GRevLex => cmp_grevlex(a, b),
        MonomialOrder::Eliminate(k) => match a.block_degree(k).cmp(&b.block_degree(k)) {
            Ordering::Equal => cmp_grevlex(a, b),
            ord => ord,
        },
    }
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // Smaller exponent in the last differing variable wins.
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
