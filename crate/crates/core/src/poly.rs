//! Canonical sparse multivariate polynomials.
//!
//! A polynomial is a term list sorted strictly decreasing in its ring's
//! monomial order, with no zero coefficients; the empty list is zero. All
//! operations return canonical values, so structural equality is polynomial
//! equality.

use crate::error::{Error, Result};
use crate::monomial::{cmp_monomials, Monomial, MonomialOrder};
use crate::ring::{check_same_ring, Ring};
use crate::scalar::{gcd_all, Domain, Scalar};
use num_bigint::BigInt;
use num_traits::Signed;
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::constant(ring, Scalar::one(ring.domain()))
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Polynomial {
        debug_assert_eq!(c.domain(), ring.domain());
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                monomial: Monomial::one(ring.n_vars()),
                coeff: c,
            }],
        }
    }

    pub fn from_i64(ring: &Arc<Ring>, v: i64) -> Polynomial {
        Polynomial::constant(ring, Scalar::from_int(ring.domain(), BigInt::from(v)))
    }

    pub fn variable(ring: &Arc<Ring>, i: usize) -> Result<Polynomial> {
        if i >= ring.n_vars() {
            return Err(Error::IndexOutOfRange(format!(
                "variable {i} in {}-variable ring",
                ring.n_vars()
            )));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                monomial: Monomial::var_pow(ring.n_vars(), i, 1),
                coeff: Scalar::one(ring.domain()),
            }],
        })
    }

    /// Build a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts, combines duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let order = ring.order();
        let mut terms: Vec<(Monomial, Scalar)> = terms;
        terms.sort_by(|a, b| cmp_monomials(&b.0, &a.0, order));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (monomial, coeff) in terms {
            debug_assert_eq!(monomial.n_vars(), ring.n_vars());
            debug_assert_eq!(coeff.domain(), ring.domain());
            match out.last_mut() {
                Some(last) if last.monomial == monomial => {
                    last.coeff = last.coeff.add(&coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !coeff.is_zero() {
                        out.push(Term { monomial, coeff });
                    }
                }
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].monomial.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximum total degree over all terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.monomial.degree();
                self.terms.iter().all(|t| t.monomial.degree() == d)
            }
        }
    }

    /// True if no variable of the first `k` appears anywhere.
    pub fn free_of_first_block(&self, k: usize) -> bool {
        self.terms.iter().all(|t| t.monomial.block_degree(k) == 0)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring, "add")?;
        Ok(self.merged(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring, "sub")?;
        Ok(self.merged(other, true))
    }

    fn merged(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match cmp_monomials(&a.monomial, &b.monomial, order) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate { b.coeff.neg() } else { b.coeff.clone() };
                    out.push(Term { monomial: b.monomial.clone(), coeff });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if negate { a.coeff.sub(&b.coeff) } else { a.coeff.add(&b.coeff) };
                    if !coeff.is_zero() {
                        out.push(Term { monomial: a.monomial.clone(), coeff });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            let coeff = if negate { b.coeff.neg() } else { b.coeff.clone() };
            out.push(Term { monomial: b.monomial.clone(), coeff });
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { monomial: t.monomial.clone(), coeff: t.coeff.neg() })
                .collect(),
        }
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { monomial: t.monomial.clone(), coeff: t.coeff.mul(c) })
                .collect(),
        }
    }

    /// Multiply by a single term (used heavily by division and Buchberger).
    pub fn mul_term(&self, monomial: &Monomial, coeff: &Scalar) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.mul(monomial),
                    coeff: t.coeff.mul(coeff),
                })
                .collect(),
        }
    }

    /// Product, merging the partial products through a priority queue so the
    /// canonical term order comes out directly.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring, "mul")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        // Keep the heap as small as the shorter operand.
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let order = self.ring.order();

        struct Entry {
            monomial: Monomial,
            ai: usize,
            bi: usize,
            order: MonomialOrder,
        }
        impl PartialEq for Entry {
            fn eq(&self, other: &Self) -> bool {
                self.monomial == other.monomial
            }
        }
        impl Eq for Entry {}
        impl PartialOrd for Entry {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl Ord for Entry {
            fn cmp(&self, other: &Self) -> Ordering {
                cmp_monomials(&self.monomial, &other.monomial, self.order)
            }
        }

        let mut heap: BinaryHeap<Entry> = (0..a.terms.len())
            .map(|ai| Entry {
                monomial: a.terms[ai].monomial.mul(&b.terms[0].monomial),
                ai,
                bi: 0,
                order,
            })
            .collect();
        let mut out: Vec<Term> = Vec::with_capacity(a.terms.len() + b.terms.len());
        while let Some(top) = heap.pop() {
            let coeff = a.terms[top.ai].coeff.mul(&b.terms[top.bi].coeff);
            match out.last_mut() {
                Some(last) if last.monomial == top.monomial => {
                    last.coeff = last.coeff.add(&coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(Term { monomial: top.monomial.clone(), coeff }),
            }
            if top.bi + 1 < b.terms.len() {
                heap.push(Entry {
                    monomial: a.terms[top.ai].monomial.mul(&b.terms[top.bi + 1].monomial),
                    ai: top.ai,
                    bi: top.bi + 1,
                    order,
                });
            }
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Exact division: `self = q * g` or `Err(NotDivisible)`.
    ///
    /// Works over both domains; over ZZ the quotient must have integer
    /// coefficients.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &g.ring, "exact_div")?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g_lt = g.leading_term().unwrap();
        let mut rest = self.clone();
        let mut quotient: Vec<Term> = Vec::new();
        while let Some(lt) = rest.leading_term() {
            let monomial = lt
                .monomial
                .try_div(&g_lt.monomial)
                .ok_or(Error::NotDivisible)?;
            let coeff = lt.coeff.div_exact(&g_lt.coeff).map_err(|e| match e {
                Error::NotDivisible => Error::NotDivisible,
                other => other,
            })?;
            rest = rest.sub(&g.mul_term(&monomial, &coeff))?;
            // Quotient terms come out in decreasing order already.
            quotient.push(Term { monomial, coeff });
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.ring.n_vars() {
            return Err(Error::IndexOutOfRange(format!("variable {i}")));
        }
        let domain = self.ring.domain();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.monomial.exp(i) > 0)
            .map(|t| {
                let e = t.monomial.exp(i);
                let mut exps = t.monomial.exps().to_vec();
                exps[i] = e - 1;
                let factor = Scalar::from_int(domain, BigInt::from(e));
                (Monomial::new(exps), t.coeff.mul(&factor))
            })
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Substitute variables by polynomials of a (possibly different) target
    /// ring. Variables appearing in `self` but not in `assignment` must exist
    /// by name in the target ring. Coefficient domains must agree.
    pub fn substitute(
        &self,
        target: &Arc<Ring>,
        assignment: &HashMap<usize, Polynomial>,
    ) -> Result<Polynomial> {
        if target.domain() != self.ring.domain() {
            return Err(Error::DomainMismatch(
                "substitution must preserve the coefficient domain".into(),
            ));
        }
        for image in assignment.values() {
            check_same_ring(image.ring(), target, "substitution image")?;
        }
        // Resolve each used variable to its image up front.
        let n = self.ring.n_vars();
        let mut used = vec![false; n];
        for t in &self.terms {
            for i in t.monomial.support() {
                used[i] = true;
            }
        }
        let mut images: Vec<Option<Polynomial>> = vec![None; n];
        for i in 0..n {
            if !used[i] {
                continue;
            }
            images[i] = Some(match assignment.get(&i) {
                Some(p) => p.clone(),
                None => {
                    let j = target.var_index(self.ring.var_name(i)).ok_or_else(|| {
                        Error::UnknownVariable(format!(
                            "{} not in target ring {target}",
                            self.ring.var_name(i)
                        ))
                    })?;
                    Polynomial::variable(target, j)?
                }
            });
        }

        let mut power_cache: Vec<HashMap<u32, Polynomial>> = vec![HashMap::new(); n];
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for i in t.monomial.support() {
                let e = t.monomial.exp(i);
                let base = images[i].as_ref().unwrap();
                let powered = power_cache[i]
                    .entry(e)
                    .or_insert_with(|| base.pow(e))
                    .clone();
                prod = prod.mul(&powered)?;
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// Move a polynomial to another ring by variable positions: source
    /// variable `i` becomes target variable `map[i]`. Entries of `None` must
    /// not occur in the support.
    pub fn rename_positions(
        &self,
        target: &Arc<Ring>,
        map: &[Option<usize>],
    ) -> Result<Polynomial> {
        debug_assert_eq!(map.len(), self.ring.n_vars());
        if target.domain() != self.ring.domain() {
            return Err(Error::DomainMismatch("rename must preserve the domain".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u32; target.n_vars()];
            for i in t.monomial.support() {
                match map[i] {
                    Some(j) => exps[j] = t.monomial.exp(i),
                    None => {
                        return Err(Error::UnknownVariable(format!(
                            "variable {} has no image",
                            self.ring.var_name(i)
                        )))
                    }
                }
            }
            terms.push((Monomial::new(exps), t.coeff.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Collect `self` as a sum of subset-monomials times coefficient
    /// polynomials in the remaining variables:
    /// `f = sum_i  m_i * c_i` with pairwise distinct `m_i` listed decreasing
    /// in the ring order restricted to the subset.
    pub fn coefficients_in(&self, subset: &[usize]) -> Result<Vec<(Monomial, Polynomial)>> {
        let n = self.ring.n_vars();
        let mut in_subset = vec![false; n];
        for &i in subset {
            if i >= n {
                return Err(Error::IndexOutOfRange(format!("variable {i}")));
            }
            in_subset[i] = true;
        }
        let order = self.ring.order();
        // (subset part, complement part, coeff), sorted by subset part.
        let mut split: Vec<(Monomial, Monomial, Scalar)> = self
            .terms
            .iter()
            .map(|t| {
                let mut sub = vec![0u32; n];
                let mut rest = vec![0u32; n];
                for i in 0..n {
                    if in_subset[i] {
                        sub[i] = t.monomial.exp(i);
                    } else {
                        rest[i] = t.monomial.exp(i);
                    }
                }
                (Monomial::new(sub), Monomial::new(rest), t.coeff.clone())
            })
            .collect();
        split.sort_by(|a, b| cmp_monomials(&b.0, &a.0, order));
        let mut out: Vec<(Monomial, Polynomial)> = Vec::new();
        let mut i = 0;
        while i < split.len() {
            let mut j = i;
            let mut parts: Vec<(Monomial, Scalar)> = Vec::new();
            while j < split.len() && split[j].0 == split[i].0 {
                parts.push((split[j].1.clone(), split[j].2.clone()));
                j += 1;
            }
            out.push((split[i].0.clone(), Polynomial::from_terms(&self.ring, parts)));
            i = j;
        }
        Ok(out)
    }

    /// Content and primitive part over ZZ: `content > 0`,
    /// `content * primitive = self`, and the primitive part keeps the sign.
    pub fn content_and_primitive(&self) -> Result<(BigInt, Polynomial)> {
        if self.ring.domain() != Domain::Integer {
            return Err(Error::DomainMismatch("content is defined over ZZ".into()));
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("content of 0".into()));
        }
        let content = gcd_all(self.terms.iter().map(|t| t.coeff.as_int().unwrap()));
        debug_assert!(content.is_positive());
        let c = Scalar::Int(content.clone());
        let primitive = Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.clone(),
                    coeff: t.coeff.div_exact(&c).expect("content divides"),
                })
                .collect(),
        };
        Ok((content, primitive))
    }
}

// ---------------------------------------------------------------------------
// Text format: `^` power, `*` explicit multiplication, integer and `p/q`
// coefficients, whitespace-insensitive. The printer emits terms in ring
// order, so parse(print(f)) == f structurally.
// ---------------------------------------------------------------------------

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, term) in self.terms.iter().enumerate() {
            let neg = term.coeff.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = term.coeff.abs();
            if term.monomial.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                for i in term.monomial.support() {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    let e = term.monomial.exp(i);
                    if e == 1 {
                        write!(f, "{}", self.ring.var_name(i))?;
                    } else {
                        write!(f, "{}^{}", self.ring.var_name(i), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parse the flat polynomial text format in the given ring.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut pos = 0usize;
    let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
    let n = ring.n_vars();

    // leading sign
    let mut sign_negative = match tokens.get(pos) {
        Some(PTok::Plus) => {
            pos += 1;
            false
        }
        Some(PTok::Minus) => {
            pos += 1;
            true
        }
        _ => false,
    };

    loop {
        // one term: factor (* factor)*
        let mut coeff = Scalar::one(ring.domain());
        let mut exps = vec![0u32; n];
        let mut any_factor;
        loop {
            match tokens.get(pos) {
                Some(PTok::Number(v)) => {
                    pos += 1;
                    let c = if let Some(PTok::Slash) = tokens.get(pos) {
                        pos += 1;
                        let den = match tokens.get(pos) {
                            Some(PTok::Number(d)) => {
                                pos += 1;
                                d.clone()
                            }
                            _ => return Err(Error::Parse("expected denominator".into())),
                        };
                        if ring.domain() == Domain::Integer {
                            return Err(Error::DomainMismatch(
                                "fraction coefficient in an integer ring".into(),
                            ));
                        }
                        Scalar::from_fraction(v.clone(), den)?
                    } else {
                        Scalar::from_int(ring.domain(), v.clone())
                    };
                    coeff = coeff.mul(&c);
                }
                Some(PTok::Ident(name)) => {
                    pos += 1;
                    let i = ring
                        .var_index(name)
                        .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                    let e = if let Some(PTok::Caret) = tokens.get(pos) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(PTok::Number(d)) => {
                                pos += 1;
                                u32::try_from(d.clone())
                                    .map_err(|_| Error::Parse("exponent out of range".into()))?
                            }
                            _ => return Err(Error::Parse("expected exponent".into())),
                        }
                    } else {
                        1
                    };
                    exps[i] += e;
                }
                _ => return Err(Error::Parse("expected a number or variable".into())),
            }
            any_factor = true;
            if let Some(PTok::Star) = tokens.get(pos) {
                pos += 1;
                continue;
            }
            break;
        }
        if !any_factor {
            return Err(Error::Parse("empty term".into()));
        }
        if sign_negative {
            coeff = coeff.neg();
        }
        terms.push((Monomial::new(exps), coeff));

        match tokens.get(pos) {
            None => break,
            Some(PTok::Plus) => {
                pos += 1;
                sign_negative = false;
            }
            Some(PTok::Minus) => {
                pos += 1;
                sign_negative = true;
            }
            Some(_) => return Err(Error::Parse("expected `+` or `-` between terms".into())),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

enum PTok {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<PTok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(PTok::Plus);
                i += 1;
            }
            '-' => {
                out.push(PTok::Minus);
                i += 1;
            }
            '*' => {
                out.push(PTok::Star);
                i += 1;
            }
            '/' => {
                out.push(PTok::Slash);
                i += 1;
            }
            '^' => {
                out.push(PTok::Caret);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(PTok::Number(s.parse().unwrap()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push(PTok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn qring() -> Arc<Ring> {
        Ring::rational(vec!["x", "y", "z"]).unwrap()
    }

    fn p(ring: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let r = qring();
        let lhs = p(&r, "x+y").mul(&p(&r, "x-y")).unwrap();
        assert_eq!(lhs, p(&r, "x^2-y^2"));
    }

    #[test]
    fn add_negation_cancels() {
        let r = qring();
        let f = p(&r, "3*x^2*y - 7*z + 1/2");
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn cube_term_count_matches_multinomial_oracle() {
        // (x+y+z)^3 has C(3+2, 2) = 10 monomials.
        let r = qring();
        let f = p(&r, "x+y+z").pow(3);
        let oracle = (3 + 2) * (3 + 1) / 2;
        assert_eq!(f.n_terms(), oracle);
    }

    #[test]
    fn exact_division() {
        let r = qring();
        assert_eq!(p(&r, "x^2-y^2").exact_div(&p(&r, "x-y")).unwrap(), p(&r, "x+y"));
        assert_eq!(p(&r, "x^2+1").exact_div(&p(&r, "x")), Err(Error::NotDivisible));

        let zr = Ring::integer(vec!["x", "y", "z"]).unwrap();
        let f = p(&zr, "2*x+4*y").mul(&p(&zr, "3*x+6*z")).unwrap();
        let q = f.exact_div(&p(&zr, "2*x+4*y")).unwrap();
        assert_eq!(q, p(&zr, "3*x+6*z"));
        assert_eq!(q.mul(&p(&zr, "2*x+4*y")).unwrap(), f);
    }

    #[test]
    fn derivative_examples() {
        let r = qring();
        assert!(p(&r, "y^3").partial_derivative(0).unwrap().is_zero());
        assert_eq!(p(&r, "x^7").partial_derivative(0).unwrap(), p(&r, "7*x^6"));
    }

    #[test]
    fn derivative_is_linear_and_leibniz() {
        let r = qring();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..30 {
            let f = random_poly(&r, &mut rng);
            let g = random_poly(&r, &mut rng);
            for i in 0..3 {
                let sum_rule = f.add(&g).unwrap().partial_derivative(i).unwrap();
                let expect = f
                    .partial_derivative(i)
                    .unwrap()
                    .add(&g.partial_derivative(i).unwrap())
                    .unwrap();
                assert_eq!(sum_rule, expect);

                let prod_rule = f.mul(&g).unwrap().partial_derivative(i).unwrap();
                let expect = f
                    .partial_derivative(i)
                    .unwrap()
                    .mul(&g)
                    .unwrap()
                    .add(&f.mul(&g.partial_derivative(i).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(prod_rule, expect);
            }
        }
    }

    #[test]
    fn substitution_basics() {
        let r = Ring::rational(vec!["t", "x", "y"]).unwrap();
        let f = p(&r, "x^2 + t*y");
        let zero = Polynomial::zero(&r);
        let mut assign = HashMap::new();
        assign.insert(0usize, zero);
        assert_eq!(f.substitute(&r, &assign).unwrap(), p(&r, "x^2"));

        // swap x and y
        let g = p(&r, "x + y");
        let mut swap = HashMap::new();
        swap.insert(1usize, Polynomial::variable(&r, 2).unwrap());
        swap.insert(2usize, Polynomial::variable(&r, 1).unwrap());
        assert_eq!(g.substitute(&r, &swap).unwrap(), g);
    }

    #[test]
    fn coefficients_in_reads_off_structure() {
        let r = Ring::rational(vec!["u", "v", "a", "b", "c"]).unwrap();
        let f = p(&r, "u^2*a + u*v*b + u*v*c");
        let parts = f.coefficients_in(&[0, 1]).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, Monomial::new(vec![2, 0, 0, 0, 0]));
        assert_eq!(parts[0].1, p(&r, "a"));
        assert_eq!(parts[1].0, Monomial::new(vec![1, 1, 0, 0, 0]));
        assert_eq!(parts[1].1, p(&r, "b + c"));
        // reassembling gives f back
        let mut acc = Polynomial::zero(&r);
        for (m, c) in &parts {
            acc = acc
                .add(&c.mul_term(m, &Scalar::one(Domain::Rational)))
                .unwrap();
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn content_examples() {
        let zr = Ring::integer(vec!["x", "y", "z"]).unwrap();
        let (c, prim) = p(&zr, "6*x + 9*y").content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(prim, p(&zr, "2*x + 3*y"));

        let (c, prim) = p(&zr, "-4*x").content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(4));
        assert_eq!(prim, p(&zr, "-x"));

        let (c, prim) = p(&zr, "3*y*z").content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(prim, p(&zr, "y*z"));
    }

    fn random_poly(ring: &Arc<Ring>, rng: &mut StdRng) -> Polynomial {
        let n = ring.n_vars();
        let n_terms = rng.gen_range(0..6);
        let terms = (0..n_terms)
            .map(|_| {
                let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
                let c = rng.gen_range(-4i64..=4);
                (
                    Monomial::new(exps),
                    Scalar::from_int(ring.domain(), BigInt::from(c)),
                )
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    #[test]
    fn print_parse_round_trip_random() {
        let r = qring();
        let zr = Ring::integer(vec!["x", "y", "z"]).unwrap();
        let mut rng = StdRng::seed_from_u64(42);
        for ring in [&r, &zr] {
            for _ in 0..200 {
                let f = random_poly(ring, &mut rng);
                let text = f.to_string();
                assert_eq!(parse_polynomial(ring, &text).unwrap(), f, "text: {text}");
            }
        }
    }

    #[test]
    fn printer_format() {
        let r = qring();
        let f = p(&r, "2*y^2 - y*z + 2*z^2");
        assert_eq!(f.to_string(), "2*y^2 - y*z + 2*z^2");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "-3/2*x").to_string(), "-3/2*x");
        assert_eq!(p(&r, "x - 1").to_string(), "x - 1");
    }
}
