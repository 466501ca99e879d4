use std::sync::Arc;

use super::{BinoidPresentation, Element};
use crate::error::{Error, Result};

/// A binoid homomorphism, given by the images of the generators.
#[derive(Debug, Clone)]
pub struct BinoidHom {
    pub source: Arc<BinoidPresentation>,
    pub target: Arc<BinoidPresentation>,
    images: Vec<Element>,
}

impl BinoidHom {
    /// Validates that every defining relation of the source holds in the
    /// target after substitution.
    pub fn new(
        source: Arc<BinoidPresentation>,
        target: Arc<BinoidPresentation>,
        images: Vec<Element>,
    ) -> Result<Self> {
        if images.len() != source.num_gens() {
            return Err(Error::NotAHomomorphism(format!(
                "{} images for {} generators",
                images.len(),
                source.num_gens()
            )));
        }
        let images = images
            .iter()
            .map(|e| target.normal_form(e))
            .collect::<Result<Vec<_>>>()?;
        source.rewrite_system()?;
        let f = BinoidHom { source, target, images };
        for r in f.source.all_relations() {
            let l = f.map_raw(&Element::Mono(r.lhs.clone()))?;
            let rhs = r.rhs.clone().map_or(Element::Zero, Element::Mono);
            let rr = f.map_raw(&rhs)?;
            if l != rr {
                let (a, b) = (f.source.display(&Element::Mono(r.lhs.clone())), f.source.display(&rhs));
                return Err(Error::NotAHomomorphism(format!(
                    "relation {a} = {b} maps to {} != {}",
                    f.target.display(&l),
                    f.target.display(&rr)
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(m: Arc<BinoidPresentation>) -> Self {
        let images = (0..m.num_gens()).map(|i| m.generator(i)).collect();
        BinoidHom::new(m.clone(), m, images).expect("identity respects all relations")
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    fn map_raw(&self, e: &Element) -> Result<Element> {
        let Some(m) = e.exponents() else {
            return Ok(Element::Zero);
        };
        let mut acc = self.target.one();
        for (i, &k) in m.iter().enumerate() {
            if k > 0 {
                acc = acc.mul(&self.images[i].pow(k));
            }
        }
        self.target.normal_form(&acc)
    }

    /// Image of `e`, in normal form.
    pub fn apply(&self, e: &Element) -> Result<Element> {
        if let Some(m) = e.exponents() {
            if m.len() != self.source.num_gens() {
                return Err(Error::InvalidPresentation("element from a different binoid".into()));
            }
        }
        self.map_raw(e)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &BinoidHom) -> Result<BinoidHom> {
        let images = self.images.iter().map(|e| g.apply(e)).collect::<Result<Vec<_>>>()?;
        BinoidHom::new(self.source.clone(), g.target.clone(), images)
    }

    /// Whether two homomorphisms with the same endpoints agree.
    pub fn agrees_with(&self, other: &BinoidHom) -> bool {
        self.images == other.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_violation_is_rejected() {
        let m: Arc<BinoidPresentation> = Arc::new("x, y | x^2 y = x".parse().unwrap());
        let n: Arc<BinoidPresentation> = Arc::new("t".parse().unwrap());
        let t = n.generator(0);
        assert!(matches!(
            BinoidHom::new(m.clone(), n.clone(), vec![t.clone(), t.clone()]),
            Err(Error::NotAHomomorphism(_))
        ));
        assert!(BinoidHom::new(m, n.clone(), vec![Element::Zero, t]).is_ok());
    }

    #[test]
    fn composition_and_identity() {
        let m: Arc<BinoidPresentation> = Arc::new("x, y | x y = 0".parse().unwrap());
        let id = BinoidHom::identity(m.clone());
        let f = BinoidHom::new(m.clone(), m.clone(), vec![m.parse_element("x^2").unwrap(), m.generator(1)]).unwrap();
        assert!(f.then(&id).unwrap().agrees_with(&f));
        assert!(id.then(&f).unwrap().agrees_with(&f));
        let ff = f.then(&f).unwrap();
        assert_eq!(m.display(&ff.images()[0]), "x^4");
    }
}
