//! Ring homomorphisms between polynomial rings and quotient rings.
//!
//! A map sends each source variable to an image polynomial in the target.
//! When the target is a quotient ring, images and everything mapped through
//! them are kept in normal form against the defining ideal, so equality of
//! quotient elements is structural. Kernels go through the graph
//! construction: eliminate the target block from the defining ideal plus
//! `source_var - image` relations in a scratch ring.

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{check_same_ring, Ring};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial ring modulo a defining ideal. Elements are represented by
/// their normal forms against the ideal's Groebner basis.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    base: Arc<Ring>,
    defining: Ideal,
}

impl QuotientRing {
    pub fn new(base: &Arc<Ring>, defining: Ideal) -> Result<Arc<QuotientRing>> {
        check_same_ring(base, defining.ring(), "quotient ring")?;
        Ok(Arc::new(QuotientRing {
            base: base.clone(),
            defining,
        }))
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    /// Canonical representative of `f` in the quotient.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.defining.groebner()?.normal_form(f)
    }
}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.base, self.defining)
    }
}

/// Target of a ring map: a plain polynomial ring or a quotient ring.
#[derive(Debug, Clone)]
pub enum MapTarget {
    Ring(Arc<Ring>),
    Quotient(Arc<QuotientRing>),
}

impl MapTarget {
    pub fn base(&self) -> &Arc<Ring> {
        match self {
            MapTarget::Ring(r) => r,
            MapTarget::Quotient(q) => q.base(),
        }
    }

    fn reduce(&self, f: Polynomial) -> Result<Polynomial> {
        match self {
            MapTarget::Ring(_) => Ok(f),
            MapTarget::Quotient(q) => q.normal_form(&f),
        }
    }
}

/// A homomorphism given by one image per source variable.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: Arc<Ring>,
    target: MapTarget,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &Arc<Ring>, target: MapTarget, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.n_vars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} source variables",
                images.len(),
                source.n_vars()
            )));
        }
        if source.domain() != target.base().domain() {
            return Err(Error::DomainMismatch(
                "maps must preserve the coefficient domain".into(),
            ));
        }
        let images = images
            .into_iter()
            .map(|img| {
                check_same_ring(target.base(), img.ring(), "map image")?;
                target.reduce(img)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingMap {
            source: source.clone(),
            target,
            images,
        })
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &MapTarget {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of a polynomial, normal-formed when the target is a quotient.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.source, f.ring(), "map application")?;
        let assignment: HashMap<usize, Polynomial> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| (i, img.clone()))
            .collect();
        let image = f.substitute(self.target.base(), &assignment)?;
        self.target.reduce(image)
    }

    /// Ideal generated by the images of the generators.
    pub fn apply_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        check_same_ring(&self.source, ideal.ring(), "map application")?;
        let gens = ideal
            .gens()
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.target.base(), gens)
    }

    /// Kernel via the graph construction: in a scratch ring with the target
    /// variables as the eliminated block, take the target's defining ideal
    /// together with `s_i - image(s_i)` and eliminate the block.
    pub fn kernel(&self) -> Result<Ideal> {
        let target_base = self.target.base();
        let k = target_base.n_vars();
        let m = self.source.n_vars();
        let mut names: Vec<String> = (0..k).map(|i| format!("@t{i}")).collect();
        names.extend((0..m).map(|i| format!("@s{i}")));
        let scratch = Ring::new(self.source.domain(), names, MonomialOrder::Eliminate(k))?;

        let embed_target: Vec<Option<usize>> = (0..k).map(|i| Some(i)).collect();
        let mut gens: Vec<Polynomial> = Vec::new();
        if let MapTarget::Quotient(q) = &self.target {
            for g in q.defining_ideal().gens() {
                gens.push(g.rename_positions(&scratch, &embed_target)?);
            }
        }
        for (i, img) in self.images.iter().enumerate() {
            let s = Polynomial::variable(&scratch, k + i)?;
            gens.push(s.sub(&img.rename_positions(&scratch, &embed_target)?)?);
        }

        let basis = GroebnerBasis::compute(&scratch, &gens)?;
        let mut project: Vec<Option<usize>> = vec![None; k];
        project.extend((0..m).map(Some));
        let result = basis
            .subring_elements()?
            .iter()
            .map(|g| g.rename_positions(&self.source, &project))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.source, result)
    }

    /// `self ∘ inner`: apply `inner` first. `inner`'s target must be the
    /// plain ring equal to `self`'s source.
    pub fn compose(&self, inner: &RingMap) -> Result<RingMap> {
        match &inner.target {
            MapTarget::Ring(r) => check_same_ring(r, &self.source, "map composition")?,
            MapTarget::Quotient(_) => {
                return Err(Error::RingMismatch(
                    "cannot compose through a quotient ring".into(),
                ))
            }
        }
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(&inner.source, self.target.clone(), images)
    }
}

impl fmt::Display for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = match &self.target {
            MapTarget::Ring(r) => r.to_string(),
            MapTarget::Quotient(q) => q.to_string(),
        };
        write!(f, "map({}, {}, {{", target, self.source)?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "}})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(ring: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| p(ring, s)).collect()).unwrap()
    }

    #[test]
    fn apply_basics() {
        let s = Ring::rational(vec!["x", "y", "w"]).unwrap();
        let zero_x = RingMap::new(
            &s,
            MapTarget::Ring(s.clone()),
            vec![Polynomial::zero(&s), p(&s, "y"), p(&s, "w")],
        )
        .unwrap();
        assert_eq!(zero_x.apply(&p(&s, "x*w + y")).unwrap(), p(&s, "y"));

        let identity = RingMap::new(
            &s,
            MapTarget::Ring(s.clone()),
            vec![p(&s, "x"), p(&s, "y"), p(&s, "w")],
        )
        .unwrap();
        let f = p(&s, "x^3 - 2*y*w + 1");
        assert_eq!(identity.apply(&f).unwrap(), f);
    }

    #[test]
    fn kernel_of_injective_rename_is_zero() {
        let a = Ring::rational(vec!["x", "y"]).unwrap();
        let b = Ring::rational(vec!["u", "v"]).unwrap();
        let swap = RingMap::new(
            &a,
            MapTarget::Ring(b.clone()),
            vec![p(&b, "v"), p(&b, "u")],
        )
        .unwrap();
        let ker = swap.kernel().unwrap();
        assert!(ker.is_zero_ideal());
    }

    #[test]
    fn kernel_of_veronese_like_map() {
        // x -> u^2, y -> uv, z -> v^2 has kernel (y^2 - xz).
        let src = Ring::rational(vec!["x", "y", "z"]).unwrap();
        let tgt = Ring::rational(vec!["u", "v"]).unwrap();
        let phi = RingMap::new(
            &src,
            MapTarget::Ring(tgt.clone()),
            vec![p(&tgt, "u^2"), p(&tgt, "u*v"), p(&tgt, "v^2")],
        )
        .unwrap();
        let ker = phi.kernel().unwrap();
        assert!(ker.equals(&ideal(&src, &["y^2 - x*z"])).unwrap());
        // every kernel generator maps to zero
        for g in ker.gens() {
            assert!(phi.apply(g).unwrap().is_zero());
        }
    }

    #[test]
    fn segre_kernel_through_quotient() {
        // Blow-up of the plane in PP2 x PP1, Segre to PP5: the kernel is
        // (B - D, C*E - D*F, D^2 - A*E, C*D - A*F).
        let pp2xpp1 = Ring::rational(vec!["x", "y", "z", "u", "v"]).unwrap();
        let blow_up = QuotientRing::new(&pp2xpp1, ideal(&pp2xpp1, &["y*u - x*v"])).unwrap();
        let pp5 = Ring::rational(vec!["A", "B", "C", "D", "E", "F"]).unwrap();
        let segre = RingMap::new(
            &pp5,
            MapTarget::Quotient(blow_up),
            vec![
                p(&pp2xpp1, "x*u"),
                p(&pp2xpp1, "y*u"),
        p(&pp2xpp1, "z*u"),
                p(&pp2xpp1, "x*v"),
                p(&pp2xpp1, "y*v"),
                p(&pp2xpp1, "z*v"),
            ],
        )
        .unwrap();
        let ker = segre.kernel().unwrap();
        let expected = ideal(
            &pp5,
            &["B - D", "C*E - D*F", "D^2 - A*E", "C*D - A*F"],
        );
        assert!(ker.equals(&expected).unwrap());
        for g in ker.gens() {
            assert!(segre.apply(g).unwrap().is_zero());
        }
    }

    #[test]
    fn quotient_ring_normal_forms_are_well_defined() {
        let r = Ring::rational(vec!["x", "y"]).unwrap();
        let q = QuotientRing::new(&r, ideal(&r, &["x^2 - y"])).unwrap();
        let a = p(&r, "x^3 + x");
        let b = p(&r, "x*y - 1");
        // reduce-then-multiply equals multiply-then-reduce (after a final
        // reduction)
        let lhs = q
            .normal_form(&q.normal_form(&a).unwrap().mul(&q.normal_form(&b).unwrap()).unwrap())
            .unwrap();
        let rhs = q.normal_form(&a.mul(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_maps() {
        let a = Ring::rational(vec!["x", "y"]).unwrap();
        let sigma = RingMap::new(
            &a,
            MapTarget::Ring(a.clone()),
            vec![p(&a, "y"), p(&a, "x")],
        )
        .unwrap();
        let tau = sigma.compose(&sigma).unwrap();
        let f = p(&a, "x^2*y - y + 3");
        assert_eq!(tau.apply(&f).unwrap(), f);

        let identity = RingMap::new(
            &a,
            MapTarget::Ring(a.clone()),
            vec![p(&a, "x"), p(&a, "y")],
        )
        .unwrap();
        let composed = sigma.compose(&identity).unwrap();
        assert_eq!(composed.apply(&p(&a, "x")).unwrap(), p(&a, "y"));
    }

    #[test]
    fn image_of_kernel_is_contained_in_defining_ideal() {
        let pp2xpp1 = Ring::rational(vec!["x", "y", "u", "v"]).unwrap();
        let q = QuotientRing::new(&pp2xpp1, ideal(&pp2xpp1, &["y*u - x*v"])).unwrap();
        let src = Ring::rational(vec!["A", "B", "C", "D"]).unwrap();
        let phi = RingMap::new(
            &src,
            MapTarget::Quotient(q.clone()),
            vec![
                p(&pp2xpp1, "x*u"),
                p(&pp2xpp1, "y*u"),
                p(&pp2xpp1, "x*v"),
                p(&pp2xpp1, "y*v"),
            ],
        )
        .unwrap();
        let ker = phi.kernel().unwrap();
        let image = phi.apply_ideal(&ker).unwrap();
        for g in image.gens() {
            assert!(q.defining_ideal().contains(g).unwrap());
        }
    }
}
