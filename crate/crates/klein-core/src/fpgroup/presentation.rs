//! Presentations and their `Z/2Z`-augmentations.

use serde::{Deserialize, Serialize};

use super::word::Word;
use crate::error::{Error, Result};

/// An element of `Z/2Z`, serialized as `0` or `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Z2 {
    Zero,
    One,
}

impl Z2 {
    pub fn is_one(self) -> bool {
        self == Z2::One
    }
}

impl std::ops::Add for Z2 {
    type Output = Z2;
    fn add(self, rhs: Z2) -> Z2 {
        if self == rhs {
            Z2::Zero
        } else {
            Z2::One
        }
    }
}

impl std::ops::AddAssign for Z2 {
    fn add_assign(&mut self, rhs: Z2) {
        *self = *self + rhs;
    }
}

impl TryFrom<u8> for Z2 {
    type Error = Error;
    fn try_from(v: u8) -> Result<Z2> {
        match v {
            0 => Ok(Z2::Zero),
            1 => Ok(Z2::One),
            _ => Err(Error::domain("augmentation values must be 0 or 1")),
        }
    }
}

impl From<Z2> for u8 {
    fn from(z: Z2) -> u8 {
        match z {
            Z2::Zero => 0,
            Z2::One => 1,
        }
    }
}

/// A finite presentation: named generators and freely reduced, non-empty
/// relators over them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Presentation with default generator names `g1, ..., gn`.
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        let names = (1..=generator_count).map(|i| format!("g{i}")).collect();
        Presentation::with_names(names, relators)
    }

    pub fn with_names(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if generator_names.is_empty() {
            return Err(Error::domain("a presentation needs at least one generator"));
        }
        let p = Presentation {
            generator_names,
            relators,
        };
        for r in &p.relators {
            if r.is_empty() {
                return Err(Error::domain("relators must be non-empty"));
            }
            p.validate_word(r)?;
        }
        Ok(p)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Check that a word only uses this presentation's generators.
    pub fn validate_word(&self, w: &Word) -> Result<()> {
        if let Some(m) = w.max_generator() {
            if m >= self.generator_count() {
                return Err(Error::Domain(format!(
                    "word uses generator index {m} but the presentation has {}",
                    self.generator_count()
                )));
            }
        }
        Ok(())
    }

    /// Same generators and relators; names are ignored.
    pub fn same_group_data(&self, other: &Presentation) -> bool {
        self.generator_count() == other.generator_count() && self.relators == other.relators
    }
}

impl TryFrom<PresentationRepr> for Presentation {
    type Error = Error;
    fn try_from(r: PresentationRepr) -> Result<Self> {
        Presentation::with_names(r.generators, r.relators)
    }
}

impl From<Presentation> for PresentationRepr {
    fn from(p: Presentation) -> PresentationRepr {
        PresentationRepr {
            generators: p.generator_names,
            relators: p.relators,
        }
    }
}

/// A presentation together with a surjective homomorphism onto `Z/2Z`,
/// recorded by the generators' images.
///
/// Invariants: every relator has augmentation zero (so the augmentation is a
/// well-defined homomorphism) and at least one generator maps to one (so it
/// is onto).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AugmentedRepr", into = "AugmentedRepr")]
pub struct AugmentedPresentation {
    base: Presentation,
    augmentation: Vec<Z2>,
}

#[derive(Serialize, Deserialize)]
struct AugmentedRepr {
    #[serde(flatten)]
    base: PresentationRepr,
    augmentation: Vec<Z2>,
}

impl AugmentedPresentation {
    pub fn new(base: Presentation, augmentation: Vec<Z2>) -> Result<Self> {
        if augmentation.len() != base.generator_count() {
            return Err(Error::Domain(format!(
                "augmentation has {} entries for {} generators",
                augmentation.len(),
                base.generator_count()
            )));
        }
        if !augmentation.iter().any(|z| z.is_one()) {
            return Err(Error::domain(
                "augmentation not surjective: no generator maps to 1",
            ));
        }
        let ap = AugmentedPresentation { base, augmentation };
        for r in ap.base.relators() {
            if ap.word_augmentation(r).is_one() {
                return Err(Error::domain(
                    "relator has augmentation 1: the augmentation is not a homomorphism",
                ));
            }
        }
        Ok(ap)
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn augmentation(&self) -> &[Z2] {
        &self.augmentation
    }

    /// Sum of the letters' augmentations mod 2 (inverse signs are irrelevant).
    fn word_augmentation(&self, w: &Word) -> Z2 {
        let mut acc = Z2::Zero;
        for (g, _) in w.iter_letters() {
            acc += self.augmentation[g];
        }
        acc
    }

    /// Augmentation of an arbitrary word over this presentation's generators.
    pub fn augmentation_of_word(&self, w: &Word) -> Result<Z2> {
        self.base.validate_word(w)?;
        Ok(self.word_augmentation(w))
    }

    /// Index of the first generator with augmentation one. The constructor
    /// guarantees there is one; it serves as the Schreier transversal element.
    pub fn first_odd_generator(&self) -> usize {
        self.augmentation
            .iter()
            .position(|z| z.is_one())
            .expect("constructor enforces surjectivity")
    }
}

impl TryFrom<AugmentedRepr> for AugmentedPresentation {
    type Error = Error;
    fn try_from(r: AugmentedRepr) -> Result<Self> {
        AugmentedPresentation::new(Presentation::try_from(r.base)?, r.augmentation)
    }
}

impl From<AugmentedPresentation> for AugmentedRepr {
    fn from(ap: AugmentedPresentation) -> AugmentedRepr {
        AugmentedRepr {
            base: ap.base.into(),
            augmentation: ap.augmentation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::real_punctured_line_group;

    #[test]
    fn presentation_validation() {
        assert!(Presentation::new(0, vec![]).is_err());
        assert!(Presentation::new(1, vec![Word::empty()]).is_err());
        assert!(Presentation::new(1, vec![Word::gen(1)]).is_err());
        let p = Presentation::new(2, vec![Word::from_letters(&[1, 2]).unwrap()]).unwrap();
        assert_eq!(p.generator_names(), &["g1".to_string(), "g2".to_string()]);
    }

    #[test]
    fn augmentation_of_words() {
        let ap = real_punctured_line_group(3).unwrap();
        // b1 b2 lies in the kernel
        let w = Word::from_letters(&[1, 2]).unwrap();
        assert_eq!(ap.augmentation_of_word(&w).unwrap(), Z2::Zero);
        assert_eq!(ap.augmentation_of_word(&Word::gen(0)).unwrap(), Z2::One);
        assert_eq!(ap.augmentation_of_word(&Word::empty()).unwrap(), Z2::Zero);
        // inverse letters count the same mod 2
        let w = Word::from_letters(&[-1, 2]).unwrap();
        assert_eq!(ap.augmentation_of_word(&w).unwrap(), Z2::Zero);
    }

    #[test]
    fn augmented_invariants_enforced() {
        // relator with odd augmentation rejected
        let base = Presentation::new(2, vec![Word::from_letters(&[1, 2]).unwrap()]).unwrap();
        assert!(AugmentedPresentation::new(base.clone(), vec![Z2::One, Z2::Zero]).is_err());
        // non-surjective augmentation rejected
        assert!(AugmentedPresentation::new(base.clone(), vec![Z2::Zero, Z2::Zero]).is_err());
        assert!(AugmentedPresentation::new(base, vec![Z2::One, Z2::One]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let ap = real_punctured_line_group(3).unwrap();
        let s = serde_json::to_string(&ap).unwrap();
        assert!(s.contains("\"augmentation\":[1,1,1]"));
        let back: AugmentedPresentation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ap);
    }
}
