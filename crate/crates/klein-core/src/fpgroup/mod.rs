//! Finitely presented groups with `Z/2Z`-augmentations.
//!
//! Words are stored freely reduced over signed generator indices. A
//! [`Presentation`] is a list of relators; an [`AugmentedPresentation`] adds a
//! surjection onto `Z/2Z`, the combinatorial shadow of the homotopy exact
//! sequence of a Klein surface. The index-two kernel of the augmentation is
//! split off by Reidemeister–Schreier rewriting over the transversal `{1, t}`.
//!
//! There is deliberately no general word-problem solver here: words are
//! compared either by free reduction or through a supplied action or
//! representation.

mod presentation;
mod rewrite;
mod snf;
mod word;

pub use presentation::{AugmentedPresentation, Presentation, Z2};
pub use rewrite::{kernel_presentation, rewrite_in_kernel, KernelPresentation};
pub use snf::{smith_normal_form, AbelianInvariants};
pub use word::Word;

use crate::error::{Error, Result};

/// The standard genus-`g` surface group presentation: generators
/// `a1, b1, ..., ag, bg` and the single product-of-commutators relator.
/// For `g = 0` the trivial group is returned as one generator with a
/// length-one relator.
pub fn surface_group(g: u32) -> Presentation {
    if g == 0 {
        return Presentation::with_names(vec!["a1".into()], vec![Word::gen(0)])
            .expect("trivial presentation is valid");
    }
    let g = g as usize;
    let mut names = Vec::with_capacity(2 * g);
    for i in 1..=g {
        names.push(format!("a{i}"));
        names.push(format!("b{i}"));
    }
    let mut letters = Vec::with_capacity(4 * g);
    for i in 0..g {
        let a = (2 * i + 1) as i32;
        let b = (2 * i + 2) as i32;
        letters.extend_from_slice(&[a, b, -a, -b]);
    }
    let relator = Word::from_letters(&letters).expect("commutator word is valid");
    Presentation::with_names(names, vec![relator]).expect("surface presentation is valid")
}

/// Fundamental group of the sphere minus `n >= 2` points:
/// `<a1, ..., an | a1 a2 ... an>`.
pub fn punctured_sphere_group(n: u32) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::domain("punctured sphere needs at least 2 punctures"));
    }
    let names = (1..=n).map(|i| format!("a{i}")).collect();
    let letters: Vec<i32> = (1..=n as i32).collect();
    let relator = Word::from_letters(&letters).expect("product word is valid");
    Presentation::with_names(names, vec![relator])
}

/// Fundamental group of the real projective line minus `n >= 2` real points,
/// as an augmented presentation: `<b1, ..., bn | b1^2, ..., bn^2>` with every
/// generator sent to the non-trivial element of `Z/2Z`.
pub fn real_punctured_line_group(n: u32) -> Result<AugmentedPresentation> {
    if n < 2 {
        return Err(Error::domain("real punctured line needs at least 2 punctures"));
    }
    let names = (1..=n).map(|i| format!("b{i}")).collect();
    let relators = (0..n as usize)
        .map(|i| {
            let l = (i + 1) as i32;
            Word::from_letters(&[l, l]).expect("square word is valid")
        })
        .collect();
    let base = Presentation::with_names(names, relators)?;
    AugmentedPresentation::new(base, vec![Z2::One; n as usize])
}

/// Extend `p` by an involution: a new generator `s` with `s^2 = 1` acting on
/// the old generators by `action`, giving the augmented presentation of
/// `p x| Z/2Z`.
///
/// `action[i]` is a word over `p`'s generators; conjugation by `s` realizes
/// it (`s action(g) s^-1 = g`). The action must be involutive at the level of
/// free words: substituting it into itself and reducing must return each
/// generator. Actions that are involutive only modulo the relators are
/// rejected.
pub fn semidirect_with_involution(
    p: &Presentation,
    action: &[Word],
) -> Result<AugmentedPresentation> {
    let n = p.generator_count();
    if action.len() != n {
        return Err(Error::Domain(format!(
            "action must assign a word to each of the {n} generators, got {}",
            action.len()
        )));
    }
    for w in action {
        p.validate_word(w)?;
    }
    for (i, w) in action.iter().enumerate() {
        let twice = substitute(action, w);
        if twice != Word::gen(i) {
            return Err(Error::domain("action not involutive at free level"));
        }
    }

    let s = n as i32 + 1;
    let mut names = p.generator_names().to_vec();
    names.push("s".to_string());
    let mut relators = p.relators().to_vec();
    relators.push(Word::from_letters(&[s, s]).expect("s^2 is valid"));
    for (i, w) in action.iter().enumerate() {
        // s * action(g_i) * s^-1 * g_i^-1
        let mut letters = vec![s];
        letters.extend_from_slice(w.letters());
        letters.push(-s);
        letters.push(-((i + 1) as i32));
        relators.push(Word::from_letters(&letters)?);
    }
    let base = Presentation::with_names(names, relators)?;
    let mut aug = vec![Z2::Zero; n];
    aug.push(Z2::One);
    AugmentedPresentation::new(base, aug)
}

/// Apply a generator substitution to a word and freely reduce.
pub(crate) fn substitute(images: &[Word], w: &Word) -> Word {
    let mut letters = Vec::new();
    for &l in w.letters() {
        let g = (l.unsigned_abs() - 1) as usize;
        if l > 0 {
            letters.extend_from_slice(images[g].letters());
        } else {
            letters.extend_from_slice(images[g].inverse().letters());
        }
    }
    Word::from_letters(&letters).expect("substitution of valid words is valid")
}

/// Abelianization invariants of a presented group: the free rank and the
/// torsion coefficients (each >= 2, in divisibility order), read off the
/// Smith normal form of the relator exponent-sum matrix.
pub fn abelianization_invariants(p: &Presentation) -> AbelianInvariants {
    let rows = p.relators().len();
    let cols = p.generator_count();
    let mut m = vec![vec![0i128; cols]; rows];
    for (r, rel) in p.relators().iter().enumerate() {
        for &l in rel.letters() {
            let g = (l.unsigned_abs() - 1) as usize;
            m[r][g] += if l > 0 { 1 } else { -1 };
        }
    }
    let diag = smith_normal_form(m, rows, cols);
    let nonzero = diag.iter().filter(|&&d| d != 0).count();
    let torsion = diag
        .iter()
        .filter(|&&d| d.abs() >= 2)
        .map(|&d| d.unsigned_abs() as u64)
        .collect();
    AbelianInvariants {
        free_rank: cols - nonzero,
        torsion,
    }
}
