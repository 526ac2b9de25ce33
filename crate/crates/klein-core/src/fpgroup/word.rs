//! Freely reduced words over signed generator indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A freely reduced word in a free group.
///
/// Letters are nonzero integers: `+(i+1)` is generator `i`, `-(i+1)` its
/// inverse. The stored sequence never contains an adjacent cancelling pair;
/// every constructor reduces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    /// The empty word (identity).
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// The single-letter word for generator `index`.
    pub fn gen(index: usize) -> Self {
        Word {
            letters: vec![(index + 1) as i32],
        }
    }

    /// Freely reduce a raw letter sequence. Rejects zero letters, which
    /// denote no generator.
    pub fn from_letters(raw: &[i32]) -> Result<Self> {
        let mut letters: Vec<i32> = Vec::with_capacity(raw.len());
        for &l in raw {
            if l == 0 {
                return Err(Error::domain("word letter 0 is not a generator index"));
            }
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters
            .iter()
            .map(|l| (l.unsigned_abs() - 1) as usize)
            .max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Reduced concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    /// Iterate letters as `(generator index, is_inverse)`.
    pub fn iter_letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.letters
            .iter()
            .map(|&l| ((l.unsigned_abs() - 1) as usize, l < 0))
    }
}

impl TryFrom<Vec<i32>> for Word {
    type Error = Error;
    fn try_from(raw: Vec<i32>) -> Result<Self> {
        Word::from_letters(&raw)
    }
}

impl From<Word> for Vec<i32> {
    fn from(w: Word) -> Vec<i32> {
        w.letters
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert!(Word::from_letters(&[1, -1]).unwrap().is_empty());
        assert_eq!(
            Word::from_letters(&[1, 2, -2, 1]).unwrap().letters(),
            &[1, 1]
        );
        // nested cancellation
        assert!(Word::from_letters(&[1, 2, -2, -1]).unwrap().is_empty());
        let w = Word::from_letters(&[1, 2, -1]).unwrap();
        assert_eq!(Word::from_letters(w.letters()).unwrap(), w);
        assert!(Word::from_letters(&[0]).is_err());
    }

    #[test]
    fn inverse_and_concat() {
        let w = Word::from_letters(&[1, 2, -3]).unwrap();
        assert_eq!(w.inverse().letters(), &[3, -2, -1]);
        assert!(w.concat(&w.inverse()).is_empty());
        let u = Word::from_letters(&[3, 1]).unwrap();
        assert_eq!(w.concat(&u).letters(), &[1, 2, 1]);
    }
}
