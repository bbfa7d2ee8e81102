//! Ideals and ideal arithmetic.
//!
//! An ideal owns its generator list and lazily caches one Groebner basis in
//! its ring's order. Intersection goes through the standard auxiliary
//! variable `t*I + (1-t)*J` in a scratch elimination ring; quotients divide
//! the generators of `I ∩ (f)` by `f`; saturation iterates quotients to a
//! fixed point. Everything works over both QQ and ZZ (with strong bases).

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{check_same_ring, Ring};
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    basis: OnceLock<Arc<GroebnerBasis>>,
}

impl PartialEq for Ideal {
    /// Structural equality of the generator lists (not ideal equality; see
    /// [`Ideal::equals`]).
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Ideal {
    /// Build an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            check_same_ring(ring, g.ring(), "ideal generator")?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The cached Groebner basis in the ring's order.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(b) = self.basis.get() {
            return Ok(b.clone());
        }
        let computed = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens)?);
        // A concurrent computation may have won the race; either value is
        // the same canonical basis.
        let _ = self.basis.set(computed.clone());
        Ok(self.basis.get().cloned().unwrap_or(computed))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit_ideal())
    }

    /// Ideal equality by two-sided generator membership.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_same_ring(&self.ring, &other.ring, "ideal equality")?;
        if self.gens == other.gens {
            return Ok(true);
        }
        let mine = self.groebner()?;
        for g in &other.gens {
            if !mine.contains(g)? {
                return Ok(false);
            }
        }
        let theirs = other.groebner()?;
        for g in &self.gens {
            if !theirs.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I + J`: concatenated generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same_ring(&self.ring, &other.ring, "ideal sum")?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` via the auxiliary variable `t*I + (1-t)*J` and elimination.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_same_ring(&self.ring, &other.ring, "ideal intersection")?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let scratch = aux_elimination_ring(&self.ring)?;
        let embed: Vec<Option<usize>> = (0..self.ring.n_vars()).map(|i| Some(i + 1)).collect();
        let t = Polynomial::variable(&scratch, 0)?;
        let one_minus_t = Polynomial::one(&scratch).sub(&t)?;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(t.mul(&g.rename_positions(&scratch, &embed)?)?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.rename_positions(&scratch, &embed)?)?);
        }
        let basis = GroebnerBasis::compute(&scratch, &gens)?;
        let mut project: Vec<Option<usize>> = vec![None];
        project.extend((0..self.ring.n_vars()).map(Some));
        let result = basis
            .subring_elements()?
            .iter()
            .map(|g| g.rename_positions(&self.ring, &project))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, result)
    }

    /// Ideal quotient `I : f = { g : g*f in I }`, computed by dividing the
    /// generators of `I ∩ (f)` by `f`.
    pub fn quotient_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same_ring(&self.ring, f.ring(), "ideal quotient")?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("quotient by zero".into()));
        }
        if f.is_constant() && f.leading_coeff().map_or(false, |c| c.is_unit()) {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| g.exact_div(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I : J` as the intersection of the quotients by J's generators.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        check_same_ring(&self.ring, &other.ring, "ideal quotient")?;
        if other.is_zero_ideal() {
            return Err(Error::ZeroPolynomial("quotient by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation `I : f^∞` by iterated quotient until stabilization.
    pub fn saturate_poly(&self, f: &Polynomial) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.quotient_poly(f)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Saturation `I : J^∞`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Saturation with respect to the irrelevant ideal of all variables.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        let vars = (0..self.ring.n_vars())
            .map(|i| Polynomial::variable(&self.ring, i))
            .collect::<Result<Vec<_>>>()?;
        self.saturate(&Ideal::new(&self.ring, vars)?)
    }

    /// Generators of `I ∩ k[x_{k+1}, ..., x_n]`, returned in the ambient
    /// ring. Uses the cached basis when the ring order is already
    /// `Eliminate(k)`, otherwise recomputes in a scratch ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        if k == 0 || k >= self.ring.n_vars() {
            return Err(Error::IndexOutOfRange(format!(
                "eliminating {k} of {} variables",
                self.ring.n_vars()
            )));
        }
        let selected = if self.ring.order() == MonomialOrder::Eliminate(k) {
            self.groebner()?.subring_elements()?
        } else {
            let scratch = Ring::new(
                self.ring.domain(),
                self.ring.var_names().to_vec(),
                MonomialOrder::Eliminate(k),
            )?;
            let identity: Vec<Option<usize>> =
                (0..self.ring.n_vars()).map(Some).collect();
            let gens = self
                .gens
                .iter()
                .map(|g| g.rename_positions(&scratch, &identity))
                .collect::<Result<Vec<_>>>()?;
            GroebnerBasis::compute(&scratch, &gens)?
                .subring_elements()?
                .iter()
                .map(|g| g.rename_positions(&self.ring, &identity))
                .collect::<Result<Vec<_>>>()?
        };
        Ideal::new(&self.ring, selected)
    }

    /// Drop generators contained in the ideal of the others. Scan order is
    /// fixed: descending degree, then descending ring order of the leading
    /// monomial.
    pub fn trim(&self) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.sort_by(|a, b| cmp_for_trim(b, a));
        gens.dedup();
        let mut i = 0;
        while i < gens.len() {
            let mut rest = gens.clone();
            rest.remove(i);
            let candidate = Ideal::new(&self.ring, rest)?;
            if candidate.contains(&gens[i])? {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        Ideal::new(&self.ring, gens)
    }
}

/// Deterministic generator ordering for trim: larger degree first, then the
/// ring order on leading monomials, then term count.
fn cmp_for_trim(a: &Polynomial, b: &Polynomial) -> Ordering {
    let order = a.ring().order();
    let deg = a.total_degree().cmp(&b.total_degree());
    if deg != Ordering::Equal {
        return deg;
    }
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(ma), Some(mb)) => {
            let by_lm = crate::monomial::cmp_monomials(ma, mb, order);
            if by_lm != Ordering::Equal {
                return by_lm;
            }
            a.n_terms().cmp(&b.n_terms())
        }
        _ => Ordering::Equal,
    }
}

/// Scratch ring with a fresh auxiliary first variable and Eliminate(1).
fn aux_elimination_ring(ring: &Arc<Ring>) -> Result<Arc<Ring>> {
    let mut vars = vec!["@aux".to_string()];
    vars.extend(ring.var_names().iter().cloned());
    Ring::new(ring.domain(), vars, MonomialOrder::Eliminate(1))
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal (")?;
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        Ideal::new(ring, gens).unwrap()
    }

    fn p(ring: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn sum_and_equality() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let sum = ideal(&r, &["x"]).sum(&ideal(&r, &["y"])).unwrap();
        assert!(sum.equals(&ideal(&r, &["x", "y"])).unwrap());
        assert!(ideal(&r, &["x", "y"])
            .equals(&ideal(&r, &["y", "x + y"]))
            .unwrap());
        let i = ideal(&r, &["x^2 - y"]);
        assert!(i.sum(&Ideal::zero(&r)).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn intersect_basics() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let meet = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(meet.equals(&ideal(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn flat_family_intersection() {
        // intersect(ideal(x^2, y), ideal(x, y^2, z)) = (y*z, y^2, x*y, x^2)
        let r = Ring::rational(vec!["x", "y", "z", "w"]).unwrap();
        let meet = ideal(&r, &["x^2", "y"])
            .intersect(&ideal(&r, &["x", "y^2", "z"]))
            .unwrap();
        assert!(meet
            .equals(&ideal(&r, &["y*z", "y^2", "x*y", "x^2"]))
            .unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        // (x^2, xy) : x = (x, y)
        let q = ideal(&r, &["x^2", "x*y"]).quotient_poly(&p(&r, "x")).unwrap();
        assert!(q.equals(&ideal(&r, &["x", "y"])).unwrap());
        // brute-force sanity: both products land back in I
        let i = ideal(&r, &["x^2", "x*y"]);
        for g in q.gens() {
            assert!(i.contains(&g.mul(&p(&r, "x")).unwrap()).unwrap());
        }
        // I : 1 = I
        let q = i.quotient_poly(&p(&r, "1")).unwrap();
        assert!(q.equals(&i).unwrap());
    }

    #[test]
    fn saturation_over_integers_elementary_vs_power_sums() {
        let r = Ring::integer(vec!["x", "y", "z"]).unwrap();
        // Elementary symmetric functions saturate to the unit ideal.
        let e = ideal(&r, &["x + y + z", "x*y + x*z + y*z", "x*y*z"]);
        let sat = e.saturate_poly(&p(&r, "x")).unwrap();
        assert!(sat.is_unit().unwrap());

        // Power sums do not: the saturation is (6, x+y+z, 2y^2-yz+2z^2, 3yz).
        let ps = ideal(&r, &["x + y + z", "x^2 + y^2 + z^2", "x^3 + y^3 + z^3"]);
        let sat = ps.saturate_poly(&p(&r, "x")).unwrap();
        let expected = ideal(
            &r,
            &["6", "x + y + z", "2*y^2 - y*z + 2*z^2", "3*y*z"],
        );
        assert!(sat.equals(&expected).unwrap());
        assert!(!sat.is_unit().unwrap());
    }

    #[test]
    fn saturation_over_rationals_power_sums_unit() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let ps = ideal(&r, &["x + y + z", "x^2 + y^2 + z^2", "x^3 + y^3 + z^3"]);
        let sat = ps.saturate_poly(&p(&r, "x")).unwrap();
        assert!(sat.is_unit().unwrap());
    }

    #[test]
    fn saturate_unit_ideal_is_unit() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let sat = Ideal::unit(&r).saturate_poly(&p(&r, "x")).unwrap();
        assert!(sat.is_unit().unwrap());
    }

    #[test]
    fn saturation_stabilizes() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^2*y", "x*z^3"]);
        let sat = i.saturate_poly(&p(&r, "x")).unwrap();
        let again = sat.quotient_poly(&p(&r, "x")).unwrap();
        assert!(again.equals(&sat).unwrap());
        // I ⊆ saturate(I, f)
        for g in i.gens() {
            assert!(sat.contains(g).unwrap());
        }
    }

    #[test]
    fn eliminate_examples() {
        let s = Ring::new(
            crate::scalar::Domain::Rational,
            vec!["a", "b", "x", "y"],
            MonomialOrder::Eliminate(2),
        )
        .unwrap();
        let i = ideal(&s, &["x - a", "y - b", "a^2 - 2", "b^2 - 3"]);
        let elim = i.eliminate(2).unwrap();
        assert!(elim.equals(&ideal(&s, &["y^2 - 3", "x^2 - 2"])).unwrap());

        // Same ideal in a GRevLex ring goes through the scratch path.
        let g = Ring::rational(vec!["a", "b", "x", "y"]).unwrap();
        let i = ideal(&g, &["x - a", "y - b", "a^2 - 2", "b^2 - 3"]);
        let elim = i.eliminate(2).unwrap();
        assert!(elim.equals(&ideal(&g, &["y^2 - 3", "x^2 - 2"])).unwrap());
    }

    #[test]
    fn fractional_elimination() {
        // (a*x + b*y - 1, a^2 - 2, b^2 - 3) eliminates to the quartic with
        // coefficients 3/2, 9/4, 1/4.
        let s = Ring::new(
            crate::scalar::Domain::Rational,
            vec!["a", "b", "x", "y"],
            MonomialOrder::Eliminate(2),
        )
        .unwrap();
        let i = ideal(&s, &["a*x + b*y - 1", "a^2 - 2", "b^2 - 3"]);
        let elim = i.eliminate(2).unwrap();
        let expected = ideal(
            &s,
            &["x^4 - 3*x^2*y^2 + 9/4*y^4 - x^2 - 3/2*y^2 + 1/4"],
        );
        assert!(elim.equals(&expected).unwrap());
    }

    #[test]
    fn trim_drops_redundant_generators() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let i = ideal(&r, &["x", "x^2", "x"]);
        let trimmed = i.trim().unwrap();
        assert_eq!(trimmed.gens(), &[p(&r, "x")]);
        assert!(trimmed.equals(&i).unwrap());
    }

    #[test]
    fn quotient_respects_membership_products() {
        let r = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^2 - y*z", "y^2"]);
        let f = p(&r, "x*y");
        let q = i.quotient_poly(&f).unwrap();
        for g in q.gens() {
            assert!(i.contains(&g.mul(&f).unwrap()).unwrap());
        }
    }
}
