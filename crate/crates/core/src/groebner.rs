//! Division, normal forms and Buchberger completion.
//!
//! Over QQ the result is the unique reduced Groebner basis (monic, pairwise
//! interreduced). Over ZZ the result is a strong Groebner basis: completion
//! processes both S-polynomials (lcm of leading terms) and G-polynomials
//! (Bezout combination reaching the gcd of the leading coefficients), so the
//! leading term of every ideal element is divisible - monomial and
//! coefficient - by some basis leading term.
//!
//! Completion runs on integer coefficient lists in both cases. Rational
//! inputs are scaled primitive first; all intermediate polynomials stay
//! content-free (over QQ) with positive leading coefficients, which keeps
//! the arithmetic in BigInt and the output canonical.

use crate::error::{Error, Result};
use crate::monomial::{cmp_monomials, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{check_same_ring, Ring};
use crate::scalar::{
    denominator_lcm, div_exact_int, div_rem_least_nonneg, ext_gcd, gcd_all, Domain, Scalar,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

/// Print one summary line per completed basis to stderr.
static TRACE: AtomicBool = AtomicBool::new(false);

pub fn set_trace(enabled: bool) {
    TRACE.store(enabled, AtomicOrdering::Relaxed);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    FieldReduced,
    IntegerStrong,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
    kind: BasisKind,
}

impl GroebnerBasis {
    /// Compute the basis of the ideal generated by `gens`, dispatching on
    /// the ring's coefficient domain.
    pub fn compute(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
        for g in gens {
            check_same_ring(ring, g.ring(), "basis generator")?;
        }
        let kind = match ring.domain() {
            Domain::Rational => BasisKind::FieldReduced,
            Domain::Integer => BasisKind::IntegerStrong,
        };
        let mode = match kind {
            BasisKind::FieldReduced => Mode::Field,
            BasisKind::IntegerStrong => Mode::Integer,
        };
        let elements = completion(ring, gens, mode, true)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            elements,
            kind,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Remainder of `f` on division by the basis. No term of the result is
    /// reducible by any basis element, and `f - result` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, f.ring(), "normal_form")?;
        Ok(normal_form_impl(f, &self.elements))
    }

    /// Ideal membership. Exact over QQ and over ZZ (the ZZ basis is strong).
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The basis elements free of the elimination block. Requires the ring
    /// order to be `Eliminate(k)`; the returned elements generate the
    /// intersection of the ideal with the subring on the trailing variables.
    pub fn subring_elements(&self) -> Result<Vec<Polynomial>> {
        let k = match self.ring.order() {
            MonomialOrder::Eliminate(k) => k,
            _ => return Err(Error::NotEliminationOrder),
        };
        Ok(self
            .elements
            .iter()
            .filter(|g| g.free_of_first_block(k))
            .cloned()
            .collect())
    }
}

/// Check that every S-polynomial (and over ZZ every G-polynomial) of basis
/// pairs reduces to zero. This is the defining property of a (strong)
/// Groebner basis, re-verified directly.
pub fn all_syzygies_reduce_to_zero(basis: &GroebnerBasis) -> Result<bool> {
    let ord = basis.ring().order();
    let elems: Vec<IPoly> = basis
        .elements()
        .iter()
        .map(|g| to_int_terms(g))
        .collect();
    let mode = match basis.kind() {
        BasisKind::FieldReduced => Mode::Field,
        BasisKind::IntegerStrong => Mode::Integer,
    };
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            let s = s_polynomial(&elems[i], &elems[j], ord);
            if !reduce_full(s, &elems, mode, ord).is_empty() {
                return Ok(false);
            }
            if mode == Mode::Integer {
                if let Some(g) = g_polynomial(&elems[i], &elems[j], ord) {
                    if !reduce_full(g, &elems, mode, ord).is_empty() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Internal integer-coefficient polynomials.
// ---------------------------------------------------------------------------

type ITerm = (Monomial, BigInt);
type IPoly = Vec<ITerm>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Field,
    Integer,
}

fn lm(p: &IPoly) -> &Monomial {
    &p[0].0
}

fn lc(p: &IPoly) -> &BigInt {
    &p[0].1
}

/// Scale all coefficients to integers. Over QQ the common denominator is
/// cleared; the result is a positive rational multiple of the input.
fn to_int_terms(f: &Polynomial) -> IPoly {
    match f.ring().domain() {
        Domain::Integer => f
            .terms()
            .iter()
            .map(|t| (t.monomial.clone(), t.coeff.as_int().unwrap().clone()))
            .collect(),
        Domain::Rational => {
            let rats: Vec<&BigRational> = f
                .terms()
                .iter()
                .map(|t| match &t.coeff {
                    Scalar::Rat(r) => r,
                    Scalar::Int(_) => unreachable!("rational ring"),
                })
                .collect();
            let scale = denominator_lcm(rats.iter().copied());
            f.terms()
                .iter()
                .zip(&rats)
                .map(|(t, r)| {
                    let c = r.numer() * div_exact_int(&scale, r.denom()).unwrap();
                    (t.monomial.clone(), c)
                })
                .collect()
        }
    }
}

/// Normalize a completion element: positive leading coefficient, and over a
/// field also primitive (content 1).
fn normalize(mut p: IPoly, mode: Mode) -> IPoly {
    if p.is_empty() {
        return p;
    }
    if mode == Mode::Field {
        let content = gcd_all(p.iter().map(|(_, c)| c));
        if !content.is_one() {
            for (_, c) in p.iter_mut() {
                *c = div_exact_int(c, &content).unwrap();
            }
        }
    }
    if p[0].1.is_negative() {
        for (_, c) in p.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    p
}

/// `a*p + b*(x^shift)*g`, merged in decreasing order. `shift` may be the
/// constant monomial. Zero coefficients are dropped.
fn combine(
    p: &[ITerm],
    a: &BigInt,
    g: &[ITerm],
    b: &BigInt,
    shift: &Monomial,
    ord: MonomialOrder,
    out: &mut IPoly,
) {
    let (mut i, mut j) = (0, 0);
    let scale_p = !a.is_one();
    while i < p.len() && j < g.len() {
        let gm = g[j].0.mul(shift);
        match cmp_monomials(&p[i].0, &gm, ord) {
            Ordering::Greater => {
                let c = if scale_p { a * &p[i].1 } else { p[i].1.clone() };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, b * &g[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let c = if scale_p {
                    a * &p[i].1 + b * &g[j].1
                } else {
                    &p[i].1 + b * &g[j].1
                };
                if !c.is_zero() {
                    out.push((p[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &p[i..] {
        let c = if scale_p { a * &t.1 } else { t.1.clone() };
        out.push((t.0.clone(), c));
    }
    for t in &g[j..] {
        out.push((t.0.mul(shift), b * &t.1));
    }
}

/// S-polynomial with the lcm taken on both monomials and coefficients.
fn s_polynomial(f: &IPoly, g: &IPoly, ord: MonomialOrder) -> IPoly {
    let m = lm(f).lcm(lm(g));
    let d = lc(f).gcd(lc(g));
    let af = div_exact_int(lc(g), &d).unwrap();
    let bg = -div_exact_int(lc(f), &d).unwrap();
    let shift_f = m.try_div(lm(f)).unwrap();
    let shift_g = m.try_div(lm(g)).unwrap();
    // af*(x^shift_f)*f + bg*(x^shift_g)*g; reuse combine by shifting f first.
    let shifted_f: IPoly = f.iter().map(|(mo, c)| (mo.mul(&shift_f), c.clone())).collect();
    let mut out = Vec::with_capacity(f.len() + g.len());
    combine(&shifted_f, &af, g, &bg, &shift_g, ord, &mut out);
    out
}

/// G-polynomial: Bezout combination whose leading term is
/// `gcd(lc f, lc g) * lcm(lm f, lm g)`. Returns `None` when one leading
/// coefficient divides the other (the combination is then a multiple of one
/// element and reduces to zero trivially).
fn g_polynomial(f: &IPoly, g: &IPoly, ord: MonomialOrder) -> Option<IPoly> {
    let cf = lc(f);
    let cg = lc(g);
    if (cg % cf).is_zero() || (cf % cg).is_zero() {
        return None;
    }
    let (_, u, v) = ext_gcd(cf, cg).unwrap();
    let m = lm(f).lcm(lm(g));
    let shift_f = m.try_div(lm(f)).unwrap();
    let shift_g = m.try_div(lm(g)).unwrap();
    let shifted_f: IPoly = f.iter().map(|(mo, c)| (mo.mul(&shift_f), c.clone())).collect();
    let mut out = Vec::with_capacity(f.len() + g.len());
    combine(&shifted_f, &u, g, &v, &shift_g, ord, &mut out);
    Some(out)
}

/// Fully reduce `p` by `basis`. In field mode reductions cancel the whole
/// coefficient (cross-scaling the rest of `p`); in integer mode coefficients
/// are reduced into the least-nonnegative range `0 <= r < lc(g)`.
fn reduce_full(p: IPoly, basis: &[IPoly], mode: Mode, ord: MonomialOrder) -> IPoly {
    let mut r = p;
    let mut pos = 0usize;
    while pos < r.len() {
        let reducer = find_reducer(&r[pos], basis, mode);
        let Some(gi) = reducer else {
            pos += 1;
            continue;
        };
        let g = &basis[gi];
        let shift = r[pos].0.try_div(lm(g)).unwrap();
        let mut out: IPoly = Vec::with_capacity(r.len() + g.len());
        match mode {
            Mode::Field => {
                let d = r[pos].1.gcd(lc(g));
                let a = div_exact_int(lc(g), &d).unwrap();
                let b = -div_exact_int(&r[pos].1, &d).unwrap();
                if a.is_one() {
                    out.extend_from_slice(&r[..pos]);
                } else {
                    out.extend(r[..pos].iter().map(|(m, c)| (m.clone(), &a * c)));
                }
                combine(&r[pos..], &a, g, &b, &shift, ord, &mut out);
            }
            Mode::Integer => {
                let (q, _) = div_rem_least_nonneg(&r[pos].1, lc(g));
                debug_assert!(!q.is_zero());
                out.extend_from_slice(&r[..pos]);
                combine(&r[pos..], &BigInt::one(), g, &-q, &shift, ord, &mut out);
            }
        }
        r = out;
    }
    normalize(r, mode)
}

fn find_reducer(term: &ITerm, basis: &[IPoly], mode: Mode) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None; // (terms, index)
    for (gi, g) in basis.iter().enumerate() {
        if g.is_empty() || !lm(g).divides(&term.0) {
            continue;
        }
        if mode == Mode::Integer {
            let (q, _) = div_rem_least_nonneg(&term.1, lc(g));
            if q.is_zero() {
                continue;
            }
        }
        let key = (g.len(), gi);
        if best.map_or(true, |b| key < b) {
            best = Some(key);
        }
    }
    best.map(|(_, gi)| gi)
}

// ---------------------------------------------------------------------------
// Pair management.
// ---------------------------------------------------------------------------

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    need_s: bool,
    need_g: bool,
}

impl Pair {
    fn new(basis: &[IPoly], i: usize, j: usize) -> Pair {
        Pair {
            i,
            j,
            lcm: lm(&basis[i]).lcm(lm(&basis[j])),
            need_s: true,
            need_g: false,
        }
    }
}

/// Gebauer-Moller pair update for the field case: prune the candidate pairs
/// (new element `t` against everything) by the strict-divisor and
/// equal-lcm/product criteria, and drop superseded old pairs by the chain
/// criterion.
fn update_pairs_field(pairs: &mut Vec<Pair>, basis: &[IPoly], t: usize) {
    let lm_t = lm(&basis[t]).clone();
    let cand: Vec<Pair> = (0..t).map(|i| Pair::new(basis, i, t)).collect();

    // Strict-divisor criterion between new pairs.
    let keep: Vec<bool> = (0..cand.len())
        .map(|a| {
            !cand.iter().enumerate().any(|(b, other)| {
                b != a && other.lcm != cand[a].lcm && other.lcm.divides(&cand[a].lcm)
            })
        })
        .collect();

    // Group the survivors by equal lcm: drop groups containing a coprime
    // pair (product criterion), otherwise keep the lowest index.
    let mut kept: Vec<Pair> = Vec::new();
    let survivors: Vec<&Pair> = cand
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(p, _)| p)
        .collect();
    let mut used = vec![false; survivors.len()];
    for a in 0..survivors.len() {
        if used[a] {
            continue;
        }
        let mut group = vec![a];
        for b in (a + 1)..survivors.len() {
            if !used[b] && survivors[b].lcm == survivors[a].lcm {
                used[b] = true;
                group.push(b);
            }
        }
        let coprime = group
            .iter()
            .any(|&g| lm(&basis[survivors[g].i]).is_coprime_with(&lm_t));
        if !coprime {
            let pick = *group.iter().min_by_key(|&&g| survivors[g].i).unwrap();
            kept.push(Pair::new(basis, survivors[pick].i, t));
        }
    }

    // Chain criterion on old pairs.
    pairs.retain(|p| {
        if !lm_t.divides(&p.lcm) {
            return true;
        }
        let lcm_it = lm(&basis[p.i]).lcm(&lm_t);
        let lcm_jt = lm(&basis[p.j]).lcm(&lm_t);
        lcm_it == p.lcm || lcm_jt == p.lcm
    });
    pairs.extend(kept);
}

/// Pair update over ZZ. Only provably safe skips: the S-polynomial is
/// dropped when both the leading monomials and the leading coefficients are
/// coprime, the G-polynomial when one leading coefficient divides the other.
fn update_pairs_integer(pairs: &mut Vec<Pair>, basis: &[IPoly], t: usize) {
    for i in 0..t {
        let f = &basis[i];
        let g = &basis[t];
        let coeff_gcd = lc(f).gcd(lc(g));
        let need_s = !(lm(f).is_coprime_with(lm(g)) && coeff_gcd.is_one());
        let need_g = !((lc(f) % lc(g)).is_zero() || (lc(g) % lc(f)).is_zero());
        if need_s || need_g {
            let mut p = Pair::new(basis, i, t);
            p.need_s = need_s;
            p.need_g = need_g;
            pairs.push(p);
        }
    }
}

// ---------------------------------------------------------------------------
// Completion and final interreduction.
// ---------------------------------------------------------------------------

fn completion(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    mode: Mode,
    use_criteria: bool,
) -> Result<Vec<Polynomial>> {
    let ord = ring.order();
    let mut basis: Vec<IPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut stats = (0usize, 0usize); // (reductions, zero reductions)

    let add_element = |basis: &mut Vec<IPoly>, pairs: &mut Vec<Pair>, h: IPoly| {
        let t = basis.len();
        basis.push(h);
        match (mode, use_criteria) {
            (Mode::Field, true) => update_pairs_field(pairs, basis, t),
            (Mode::Integer, true) => update_pairs_integer(pairs, basis, t),
            (_, false) => {
                for i in 0..t {
                    let mut p = Pair::new(basis, i, t);
                    p.need_g = mode == Mode::Integer;
                    pairs.push(p);
                }
            }
        }
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let h = reduce_full(normalize(to_int_terms(g), mode), &basis, mode, ord);
        if !h.is_empty() {
            add_element(&mut basis, &mut pairs, h);
        }
    }

    while !pairs.is_empty() {
        // Normal strategy: minimal lcm degree, then fixed index tie-break.
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm.degree(), p.j, p.i))
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);

        let mut candidates: Vec<IPoly> = Vec::new();
        if pair.need_s {
            candidates.push(s_polynomial(&basis[pair.i], &basis[pair.j], ord));
        }
        if pair.need_g {
            if let Some(g) = g_polynomial(&basis[pair.i], &basis[pair.j], ord) {
                candidates.push(g);
            }
        }
        for c in candidates {
            stats.0 += 1;
            let h = reduce_full(c, &basis, mode, ord);
            if h.is_empty() {
                stats.1 += 1;
            } else {
                add_element(&mut basis, &mut pairs, h);
            }
        }
    }

    let final_elems = interreduce(ring, basis, mode, ord);
    if TRACE.load(AtomicOrdering::Relaxed) {
        eprintln!(
            "[gb] ring={} reductions={} zero_reductions={} basis={}",
            ring, stats.0, stats.1,
            final_elems.len()
        );
    }
    Ok(final_elems)
}

/// Minimize leading terms, tail-reduce every element against the rest, and
/// convert to the public form (monic over QQ, positive primitive-signed
/// leading coefficients over ZZ), sorted by decreasing leading monomial.
fn interreduce(
    ring: &Arc<Ring>,
    basis: Vec<IPoly>,
    mode: Mode,
    ord: MonomialOrder,
) -> Vec<Polynomial> {
    // Drop elements whose leading term is (strongly) divisible by another's.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let divides = lm(&basis[b]).divides(lm(&basis[a]))
                && (mode == Mode::Field || (lc(&basis[a]) % lc(&basis[b])).is_zero());
            // On exact ties keep the earlier element.
            if divides && !(lm(&basis[a]) == lm(&basis[b]) && lc(&basis[a]) == lc(&basis[b]) && b > a)
            {
                keep[a] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<IPoly> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();
    minimal.sort_by(|a, b| cmp_monomials(lm(b), lm(a), ord));

    // Tail reduction. Leading terms are mutually irreducible at this point,
    // so reducing whole elements only rewrites tails and a single pass gives
    // the reduced basis.
    for i in 0..minimal.len() {
        let current = std::mem::take(&mut minimal[i]);
        let others: Vec<IPoly> = minimal
            .iter()
            .filter(|p| !p.is_empty())
            .cloned()
            .collect();
        minimal[i] = reduce_full(current, &others, mode, ord);
        debug_assert!(!minimal[i].is_empty());
    }

    minimal
        .into_iter()
        .map(|p| from_int_terms(ring, p, mode))
        .collect()
}

fn from_int_terms(ring: &Arc<Ring>, p: IPoly, mode: Mode) -> Polynomial {
    match mode {
        Mode::Integer => Polynomial::from_terms(
            ring,
            p.into_iter().map(|(m, c)| (m, Scalar::Int(c))).collect(),
        ),
        Mode::Field => {
            let lead = p[0].1.clone();
            Polynomial::from_terms(
                ring,
                p.into_iter()
                    .map(|(m, c)| (m, Scalar::Rat(BigRational::new(c, lead.clone()))))
                    .collect(),
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Public normal form on canonical polynomials.
// ---------------------------------------------------------------------------

fn normal_form_impl(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut r = f.clone();
    let mut pos = 0usize;
    'next: while pos < r.terms().len() {
        let term = r.terms()[pos].clone();
        for g in basis {
            let Some(g_lt) = g.leading_term() else { continue };
            let Some(shift) = term.monomial.try_div(&g_lt.monomial) else {
                continue;
            };
            let factor = match ring.domain() {
                Domain::Rational => term.coeff.div_exact(&g_lt.coeff).unwrap(),
                Domain::Integer => {
                    let (q, _) = div_rem_least_nonneg(
                        term.coeff.as_int().unwrap(),
                        g_lt.coeff.as_int().unwrap(),
                    );
                    if q.is_zero() {
                        continue;
                    }
                    Scalar::Int(q)
                }
            };
            r = r.sub(&g.mul_term(&shift, &factor)).expect("same ring");
            continue 'next;
        }
        pos += 1;
    }
    r
}

/// Field-case completion without any pair criteria; used to check that the
/// optimizations do not change the computed reduced basis.
#[allow(dead_code)]
pub(crate) fn buchberger_field_unpruned(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    completion(ring, gens, Mode::Field, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::scalar::Domain;

    fn p(ring: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    fn gb(ring: &Arc<Ring>, gens: &[&str]) -> GroebnerBasis {
        let gens: Vec<Polynomial> = gens.iter().map(|s| p(ring, s)).collect();
        GroebnerBasis::compute(ring, &gens).unwrap()
    }

    #[test]
    fn normal_form_basics() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let basis = gb(&r, &["x"]);
        assert!(basis.normal_form(&p(&r, "x^2")).unwrap().is_zero());
        assert_eq!(basis.normal_form(&p(&r, "x^2 + y")).unwrap(), p(&r, "y"));
    }

    #[test]
    fn integer_normal_form_uses_least_nonneg_remainder() {
        let r = Ring::integer(vec!["x"]).unwrap();
        let basis = gb(&r, &["2*x"]);
        // 5 = 2*2 + 1
        assert_eq!(basis.normal_form(&p(&r, "5*x")).unwrap(), p(&r, "x"));
    }

    #[test]
    fn unit_ideal_basis() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let basis = gb(&r, &["1"]);
        assert!(basis.is_unit_ideal());
        let basis = gb(&r, &["x", "x + 1"]);
        assert!(basis.is_unit_ideal());
    }

    #[test]
    fn gcd_combination_over_integers() {
        let r = Ring::integer(vec!["x"]).unwrap();
        let basis = gb(&r, &["2*x", "3*x"]);
        assert_eq!(basis.elements(), &[p(&r, "x")]);
    }

    #[test]
    fn strong_basis_catches_mixed_products() {
        // <2x, 3y> needs the G-polynomial xy.
        let r = Ring::integer(vec!["x", "y"]).unwrap();
        let basis = gb(&r, &["2*x", "3*y"]);
        assert!(basis.contains(&p(&r, "x*y")).unwrap());
        assert!(all_syzygies_reduce_to_zero(&basis).unwrap());
    }

    #[test]
    fn elimination_examples() {
        // Square-root point: subring elements of gb(x-a, y-a, a^2-2).
        let s = Ring::new(
            Domain::Rational,
            vec!["a", "b", "x", "y"],
            MonomialOrder::Eliminate(2),
        )
        .unwrap();
        let basis = gb(&s, &["x - a", "y - a", "a^2 - 2"]);
        let sub = basis.subring_elements().unwrap();
        // Elements come out in decreasing leading-monomial order.
        assert_eq!(sub, vec![p(&s, "y^2 - 2"), p(&s, "x - y")]);

        // Fifth root of unity: eliminate a from (x - a, y - a^4, a^4+a^3+a^2+a+1).
        let basis = gb(&s, &["x - a", "y - a^4", "a^4 + a^3 + a^2 + a + 1"]);
        let sub = basis.subring_elements().unwrap();
        let expected = [
            "x*y - 1",
            "x^2 + y^2 + x + y + 1",
            "y^3 + y^2 + x + y + 1",
        ];
        assert_eq!(sub.len(), 3);
        for e in expected {
            assert!(sub.contains(&p(&s, e)), "missing {e}");
        }

        // Projective blow-up relation: eliminate t from (u - t*x, v - t*y).
        let r = Ring::new(
            Domain::Rational,
            vec!["t", "x", "y", "z", "u", "v"],
            MonomialOrder::Eliminate(1),
        )
        .unwrap();
        let basis = gb(&r, &["u - t*x", "v - t*y"]);
        assert_eq!(basis.subring_elements().unwrap(), vec![p(&r, "y*u - x*v")]);
    }

    #[test]
    fn unit_basis_subring_selection() {
        let s = Ring::new(
            Domain::Rational,
            vec!["a", "x"],
            MonomialOrder::Eliminate(1),
        )
        .unwrap();
        let basis = gb(&s, &["1"]);
        assert_eq!(basis.subring_elements().unwrap(), vec![p(&s, "1")]);
    }

    #[test]
    fn membership_basics() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let basis = gb(&r, &["x"]);
        assert!(basis.contains(&p(&r, "x*y")).unwrap());
        assert!(!basis.contains(&p(&r, "y")).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let basis = gb(&r, &["x^2 - y", "x*y - z"]);
        for s in ["x^5 + y^3", "x^4*y^2 - 3*z + 1", "x + y + z"] {
            let once = basis.normal_form(&p(&r, s)).unwrap();
            let twice = basis.normal_form(&once).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn syzygies_reduce_to_zero() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let basis = gb(&r, &["x^2 - y", "x*y - z", "y^3 - x*z"]);
        assert!(all_syzygies_reduce_to_zero(&basis).unwrap());

        let zr = Ring::integer(vec!["x", "y", "z"]).unwrap();
        let gens: Vec<Polynomial> = ["x+y+z", "x^2+y^2+z^2", "x^3+y^3+z^3"]
            .iter()
            .map(|s| p(&zr, s))
            .collect();
        let basis = GroebnerBasis::compute(&zr, &gens).unwrap();
        assert!(all_syzygies_reduce_to_zero(&basis).unwrap());
    }

    #[test]
    fn reduced_basis_independent_of_generator_order() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let gens = ["x^2 + y*z - 1", "x*z - y", "y^2 - z", "x*y + z^2"];
        let reference = gb(&r, &gens);
        // All cyclic rotations and the reversal.
        let mut variants: Vec<Vec<&str>> = (0..gens.len())
            .map(|k| {
                let mut v = gens.to_vec();
                v.rotate_left(k);
                v
            })
            .collect();
        variants.push(gens.iter().rev().copied().collect());
        for v in variants {
            let b = gb(&r, &v);
            assert_eq!(b.elements(), reference.elements());
        }
    }

    #[test]
    fn criteria_do_not_change_the_basis() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let gens: Vec<Polynomial> = ["x^2 - y", "x*y - z", "y^2 - x*z", "x*z^2 - y^2"]
            .iter()
            .map(|s| p(&r, s))
            .collect();
        let pruned = GroebnerBasis::compute(&r, &gens).unwrap();
        let unpruned = buchberger_field_unpruned(&r, &gens).unwrap();
        assert_eq!(pruned.elements(), &unpruned[..]);
    }
}
