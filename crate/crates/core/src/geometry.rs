//! Scheme-theoretic invariants: Hilbert series, dimension, codimension,
//! degree, module degrees, Rees/blow-up ideals and flat limits.
//!
//! Hilbert data is computed from the leading-term ideal of a Groebner basis
//! and is defined over field coefficients only.

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{check_same_ring, Ring};
use crate::scalar::{Domain, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;

/// Hilbert series of a graded quotient `S/I`, reduced: the numerator is not
/// divisible by `(1 - t)` and the pole order equals the Krull dimension.
///
/// The unreduced form is `numerator(t) / (1-t)^n` with `n` the ambient
/// variable count; `pole_order = n - (number of (1-t) factors cancelled)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    pole_order: usize,
}

impl HilbertSeries {
    /// Numerator coefficients, ascending in the series variable.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Numerator evaluated at 1; for a nonzero quotient this is the degree.
    pub fn numerator_at_one(&self) -> BigInt {
        self.numerator.iter().sum()
    }

    /// Coefficient of `t^d` in the series expansion: the Hilbert function.
    pub fn hilbert_function(&self, degree: usize) -> BigInt {
        // numerator / (1-t)^p: expand via repeated prefix sums.
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for (i, c) in self.numerator.iter().enumerate() {
            if i <= degree {
                coeffs[i] = c.clone();
            }
        }
        for _ in 0..self.pole_order {
            for i in 1..=degree {
                let prev = coeffs[i - 1].clone();
                coeffs[i] += prev;
            }
        }
        coeffs[degree].clone()
    }
}

/// Minimal monomial generators of the leading-term ideal of `I`. Defined
/// over field coefficients only.
pub fn leading_term_ideal(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if ideal.ring().domain() != Domain::Rational {
        return Err(Error::RequiresField(
            "leading term ideals are only taken over QQ".into(),
        ));
    }
    let basis = ideal.groebner()?;
    let lms: Vec<Monomial> = basis
        .elements()
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    Ok(minimalize(lms))
}

fn minimalize(monomials: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for m in &monomials {
        let redundant = monomials
            .iter()
            .any(|other| other != m && other.divides(m));
        if !redundant && !out.contains(m) {
            out.push(m.clone());
        }
    }
    out
}

/// Hilbert series numerator of a monomial ideal by pivot recursion:
/// `HS(M) = HS(M + (p)) + t^deg(p) * HS(M : p)` with the pivot `p` a single
/// variable chosen as the most frequent one among the minimal generators.
/// Base cases: no generators (free ring) and pairwise-coprime generators
/// (complete intersection, numerator `prod (1 - t^deg)`).
pub fn hilbert_series_of_monomial_ideal(n_vars: usize, gens: &[Monomial]) -> HilbertSeries {
    let gens = minimalize(gens.to_vec());
    let numerator = hilbert_numerator(&gens, n_vars);
    reduce_series(numerator, n_vars)
}

fn hilbert_numerator(gens: &[Monomial], n_vars: usize) -> Vec<BigInt> {
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new(); // unit ideal: zero series
    }
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let pairwise_coprime = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| gens[i].is_coprime_with(&gens[j]))
    });
    if pairwise_coprime {
        // regular sequence of monomials
        let mut acc = vec![BigInt::one()];
        for g in gens {
            acc = mul_one_minus_power(&acc, g.degree() as usize);
        }
        return acc;
    }

    // Pivot: most frequent variable among minimal generators, power 1.
    let mut counts = vec![0usize; n_vars];
    for g in gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by(|(ia, ca), (ib, cb)| ca.cmp(cb).then(ib.cmp(ia)))
        .map(|(i, _)| i)
        .unwrap();

    // M + (x_pivot): keep generators free of the pivot.
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exp(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var_pow(n_vars, pivot, 1));

    // M : x_pivot
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) == 0 {
                m.clone()
            } else {
                let mut exps = m.exps().to_vec();
                exps[pivot] -= 1;
                Monomial::new(exps)
            }
        })
        .collect();

    let a = hilbert_numerator(&minimalize(plus), n_vars);
    let b = hilbert_numerator(&minimalize(colon), n_vars);
    add_shifted(a, b, 1)
}

/// `acc * (1 - t^d)`
fn mul_one_minus_power(acc: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); acc.len() + d];
    for (i, c) in acc.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    trim_trailing_zeros(out)
}

/// `a + t^shift * b`
fn add_shifted(a: Vec<BigInt>, b: Vec<BigInt>, shift: usize) -> Vec<BigInt> {
    let mut out = a;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + shift] += c;
    }
    trim_trailing_zeros(out)
}

fn trim_trailing_zeros(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Divide the numerator by `(1 - t)` as often as possible.
fn reduce_series(mut numerator: Vec<BigInt>, n_vars: usize) -> HilbertSeries {
    let mut pole_order = n_vars;
    if numerator.is_empty() {
        return HilbertSeries {
            numerator,
            pole_order: 0,
        };
    }
    loop {
        let at_one: BigInt = numerator.iter().sum();
        if !at_one.is_zero() || pole_order == 0 {
            break;
        }
        // synthetic division by (1 - t): q_i = sum_{j <= i} c_j
        let mut q = Vec::with_capacity(numerator.len().saturating_sub(1));
        let mut acc = BigInt::zero();
        for c in &numerator[..numerator.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        numerator = trim_trailing_zeros(q);
        pole_order -= 1;
        if numerator.is_empty() {
            pole_order = 0;
            break;
        }
    }
    HilbertSeries {
        numerator,
        pole_order,
    }
}

/// Hilbert series of `S/I` for an ideal over QQ.
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    let lt = leading_term_ideal(ideal)?;
    Ok(hilbert_series_of_monomial_ideal(ideal.ring().n_vars(), &lt))
}

/// Krull dimension of `S/I` and its codimension.
///
/// The dimension is the largest size of a variable subset containing the
/// support of no minimal generator of the leading-term ideal.
pub fn dim_and_codim(ideal: &Ideal) -> Result<(usize, usize)> {
    let lt = leading_term_ideal(ideal)?;
    let n = ideal.ring().n_vars();
    if lt.iter().any(|m| m.is_one()) {
        // unit ideal: empty scheme
        return Ok((0, n));
    }
    let supports: Vec<u64> = lt
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    // Complement view: the removed variables must hit every support.
    let dim = n - min_hitting_set(&supports, n);
    Ok((dim, n - dim))
}

fn min_hitting_set(supports: &[u64], n: usize) -> usize {
    fn rec(supports: &[u64], chosen: u64, n: usize, best: &mut usize) {
        let count = chosen.count_ones() as usize;
        if count >= *best {
            return;
        }
        match supports.iter().find(|s| *s & chosen == 0) {
            None => *best = count,
            Some(unhit) => {
                for i in 0..n {
                    if unhit & (1 << i) != 0 {
                        rec(supports, chosen | (1 << i), n, best);
                    }
                }
            }
        }
    }
    let mut best = n;
    rec(supports, 0, n, &mut best);
    best
}

/// Degree of `S/I`.
///
/// For homogeneous ideals this is the reduced Hilbert numerator at 1. For
/// inhomogeneous ideals it is the number of standard monomials, which is
/// only defined in the zero-dimensional case and requires the
/// degree-compatible GRevLex order.
pub fn degree(ideal: &Ideal) -> Result<BigInt> {
    if ideal.gens().iter().all(|g| g.is_homogeneous()) {
        let hs = hilbert_series(ideal)?;
        return Ok(hs.numerator_at_one());
    }
    if ideal.ring().order() != MonomialOrder::GRevLex {
        return Err(Error::DegreeUndefined(
            "inhomogeneous degree needs a degree-compatible order".into(),
        ));
    }
    let (dim, _) = dim_and_codim(ideal)?;
    if dim != 0 {
        return Err(Error::DegreeUndefined(
            "inhomogeneous ideal of positive dimension".into(),
        ));
    }
    let lt = leading_term_ideal(ideal)?;
    Ok(BigInt::from(count_standard_monomials(
        ideal.ring().n_vars(),
        &lt,
    )))
}

/// Count monomials outside the monomial ideal (finite for zero-dimensional
/// ideals).
pub fn count_standard_monomials(n_vars: usize, lt: &[Monomial]) -> u64 {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![Monomial::one(n_vars)];
    let mut count = 0u64;
    while let Some(m) = stack.pop() {
        if lt.iter().any(|g| g.divides(&m)) {
            continue;
        }
        if !seen.insert(m.exps().to_vec()) {
            continue;
        }
        count += 1;
        for i in 0..n_vars {
            let mut exps = m.exps().to_vec();
            exps[i] += 1;
            stack.push(Monomial::new(exps));
        }
    }
    count
}

/// Degree of the module `(I + J) / J` via the Hilbert series difference of
/// `S/J` and `S/(I+J)`. Both ideals must be homogeneous.
pub fn module_degree(i: &Ideal, j: &Ideal) -> Result<BigInt> {
    check_same_ring(i.ring(), j.ring(), "module degree")?;
    for g in i.gens().iter().chain(j.gens()) {
        if !g.is_homogeneous() {
            return Err(Error::DegreeUndefined(
                "module degree needs homogeneous ideals".into(),
            ));
        }
    }
    let n = i.ring().n_vars();
    let hs_j = hilbert_series(j)?;
    let hs_sum = hilbert_series(&i.sum(j)?)?;
    // Difference of the unreduced numerators over (1-t)^n.
    let num_j = unreduce(&hs_j, n);
    let num_sum = unreduce(&hs_sum, n);
    let mut delta = num_j;
    if delta.len() < num_sum.len() {
        delta.resize(num_sum.len(), BigInt::zero());
    }
    for (i, c) in num_sum.into_iter().enumerate() {
        delta[i] -= c;
    }
    let delta = reduce_series(trim_trailing_zeros(delta), n);
    if delta.is_zero() {
        return Ok(BigInt::zero());
    }
    let value = delta.numerator_at_one();
    debug_assert!(!value.is_negative());
    Ok(value)
}

/// Re-expand a reduced series numerator to the common denominator (1-t)^n.
fn unreduce(hs: &HilbertSeries, n: usize) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = hs.numerator().to_vec();
    for _ in hs.pole_order()..n {
        acc = mul_one_minus_power(&acc, 1);
    }
    acc
}

/// The ideal of relations of the Rees algebra of `I`: the blow-up of
/// `Spec(ring)` along `V(I)` lives in `Proj` of the result's ring, which is
/// the original ring extended by `new_vars` (one per generator).
///
/// In a scratch ring `(t, original vars, y_1..y_r)` with `Eliminate 1`, the
/// relations `y_j - t*f_j` are saturated of `t` by elimination, and the
/// `y_j` are renamed to `new_vars`. Fails with "not enough variables" when
/// fewer names than generators are supplied.
pub fn blowup_ideal(ideal: &Ideal, new_vars: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    let r = ideal.gens().len();
    if new_vars.len() < r {
        return Err(Error::NotEnoughVariables);
    }
    let mut scratch_names = vec!["@t".to_string()];
    scratch_names.extend(ring.var_names().iter().cloned());
    scratch_names.extend(new_vars.iter().map(|s| s.to_string()));
    let scratch = Ring::new(ring.domain(), scratch_names, MonomialOrder::Eliminate(1))?;

    let n = ring.n_vars();
    let embed: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
    let t = Polynomial::variable(&scratch, 0)?;
    let mut gens = Vec::with_capacity(r);
    for (j, f) in ideal.gens().iter().enumerate() {
        let y = Polynomial::variable(&scratch, 1 + n + j)?;
        gens.push(y.sub(&t.mul(&f.rename_positions(&scratch, &embed)?)?)?);
    }
    let basis = GroebnerBasis::compute(&scratch, &gens)?;

    let mut result_names: Vec<String> = ring.var_names().to_vec();
    result_names.extend(new_vars.iter().map(|s| s.to_string()));
    let result_ring = Ring::new(ring.domain(), result_names, MonomialOrder::GRevLex)?;
    let mut project: Vec<Option<usize>> = vec![None];
    project.extend((0..n + new_vars.len()).map(Some));
    let selected = basis
        .subring_elements()?
        .iter()
        .map(|g| g.rename_positions(&result_ring, &project))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&result_ring, selected)
}

/// Flat limit of a family over the parameter `t` (the ring's first
/// variable): saturate of `t`, specialize `t -> at`, drop the parameter and
/// trim. The result lives in the parameter-free ring.
pub fn flat_limit(family: &Ideal, at: &Scalar) -> Result<Ideal> {
    let ring = family.ring();
    if ring.n_vars() < 2 {
        return Err(Error::InvalidRing("flat limit needs a parameter and variables".into()));
    }
    let t = Polynomial::variable(ring, 0)?;
    let saturated = family.saturate_poly(&t)?;
    let constant = Polynomial::constant(ring, at.clone());
    let mut assignment = std::collections::HashMap::new();
    assignment.insert(0usize, constant);
    let target = Ring::new(
        ring.domain(),
        ring.var_names()[1..].to_vec(),
        MonomialOrder::GRevLex,
    )?;
    let mut project: Vec<Option<usize>> = vec![None];
    project.extend((0..ring.n_vars() - 1).map(Some));
    let gens = saturated
        .gens()
        .iter()
        .map(|g| {
            g.substitute(ring, &assignment)?
                .rename_positions(&target, &project)
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)?.trim()
}
