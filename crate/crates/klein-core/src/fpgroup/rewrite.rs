//! Reidemeister–Schreier for the index-two kernel of an augmentation.
//!
//! The Schreier transversal is `{1, t}` with `t` the first generator of
//! augmentation one. Raw Schreier generators are the words
//! `rep(c) x rep(c')^-1` for coset `c` and generator `x` (the tree edge
//! `(1, t)` is skipped); raw relators are the base relators rewritten from
//! both cosets. A light Tietze pass then removes length-one and length-two
//! redundancies only, so kernel presentations may keep redundant generators;
//! the contract is that the result presents the kernel, which downstream
//! checks verify through abelianization and actions.

use super::presentation::{AugmentedPresentation, Presentation, Z2};
use super::word::Word;
use crate::error::{Error, Result};

/// The kernel of an augmentation, presented, with the bookkeeping needed to
/// rewrite kernel words and to push actions and representations down.
#[derive(Debug, Clone)]
pub struct KernelPresentation {
    /// Presentation of the kernel subgroup.
    pub presentation: Presentation,
    /// For each kernel generator, its expression as a word over the
    /// augmented presentation's generators.
    pub generator_words: Vec<Word>,
    /// The non-trivial transversal element `t`.
    pub transversal_rep: Word,
    aug: Vec<Z2>,
    /// `table[x][c]`: raw Schreier generator for (coset `c`, generator `x`);
    /// `None` marks the spanning-tree edge.
    table: Vec<[Option<usize>; 2]>,
    /// Raw Schreier generator -> word over the surviving kernel generators.
    raw_to_final: Vec<Word>,
}

/// Compute the kernel presentation of `ap`'s augmentation.
pub fn kernel_presentation(ap: &AugmentedPresentation) -> KernelPresentation {
    let n = ap.base().generator_count();
    let aug: Vec<Z2> = ap.augmentation().to_vec();
    let t = ap.first_odd_generator();

    // Raw Schreier generators and their expressions over ap's generators.
    let mut table = vec![[None, None]; n];
    let mut raw_exprs: Vec<Word> = Vec::new();
    for c in 0..2usize {
        for x in 0..n {
            if c == 0 && x == t {
                continue; // tree edge
            }
            let c2 = c ^ usize::from(aug[x].is_one());
            let mut letters = Vec::new();
            if c == 1 {
                letters.push((t + 1) as i32);
            }
            letters.push((x + 1) as i32);
            if c2 == 1 {
                letters.push(-((t + 1) as i32));
            }
            let expr = Word::from_letters(&letters).expect("schreier word is valid");
            table[x][c] = Some(raw_exprs.len());
            raw_exprs.push(expr);
        }
    }

    // Rewrite each base relator starting from both cosets.
    let mut relators: Vec<Vec<i32>> = Vec::new();
    for r in ap.base().relators() {
        for c in 0..2usize {
            let w = rewrite_raw(&table, &aug, c, r);
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }

    // Light Tietze pass: only length <= 2 redundancies.
    let raw_count = raw_exprs.len();
    let mut alive = vec![true; raw_count];
    let mut events: Vec<(usize, Vec<i32>)> = Vec::new();
    loop {
        let mut acted = false;
        // length-1 relators first
        if let Some(ri) = relators.iter().position(|r| r.len() == 1) {
            let j = (relators[ri][0].unsigned_abs() - 1) as usize;
            relators.remove(ri);
            substitute_everywhere(&mut relators, j, &[]);
            alive[j] = false;
            events.push((j, Vec::new()));
            acted = true;
        } else if let Some(ri) = relators.iter().position(|r| {
            r.len() == 2 && r[0].unsigned_abs() != r[1].unsigned_abs()
        }) {
            let (p, q) = (relators[ri][0], relators[ri][1]);
            let (jp, jq) = (
                (p.unsigned_abs() - 1) as usize,
                (q.unsigned_abs() - 1) as usize,
            );
            // eliminate the larger index; relator S_jp^sp S_jq^sq = 1
            let (elim, repl) = if jp > jq {
                // S_jp^sp = S_jq^-sq  =>  S_jp = S_jq^(-sq*sp)
                let l = if p > 0 { -q } else { q };
                (jp, vec![l])
            } else {
                let l = if q > 0 { -p } else { p };
                (jq, vec![l])
            };
            relators.remove(ri);
            substitute_everywhere(&mut relators, elim, &repl);
            alive[elim] = false;
            events.push((elim, repl));
            acted = true;
        }
        if !acted {
            break;
        }
    }

    // Resolve every raw generator to a word over the survivors.
    let mut raw_over_raw: Vec<Vec<i32>> =
        (0..raw_count).map(|j| vec![(j + 1) as i32]).collect();
    for (j, repl) in &events {
        for w in &mut raw_over_raw {
            *w = substitute_letters(w, *j, repl);
        }
    }

    let survivors: Vec<usize> = (0..raw_count).filter(|&j| alive[j]).collect();
    let mut final_index = vec![usize::MAX; raw_count];
    for (fi, &j) in survivors.iter().enumerate() {
        final_index[j] = fi;
    }
    let renumber = |w: &[i32]| -> Word {
        let letters: Vec<i32> = w
            .iter()
            .map(|&l| {
                let fi = final_index[(l.unsigned_abs() - 1) as usize] as i32 + 1;
                if l > 0 {
                    fi
                } else {
                    -fi
                }
            })
            .collect();
        Word::from_letters(&letters).expect("renumbered word is valid")
    };

    let raw_to_final: Vec<Word> = raw_over_raw.iter().map(|w| renumber(w)).collect();

    let transversal_rep = Word::gen(t);
    if survivors.is_empty() {
        // Trivial kernel: one dummy generator killed by its own relator,
        // expressed by the empty word.
        let presentation =
            Presentation::with_names(vec!["k1".into()], vec![Word::gen(0)])
                .expect("trivial kernel presentation is valid");
        return KernelPresentation {
            presentation,
            generator_words: vec![Word::empty()],
            transversal_rep,
            aug,
            table,
            raw_to_final,
        };
    }

    let names = (1..=survivors.len()).map(|i| format!("k{i}")).collect();
    let mut final_relators: Vec<Word> = Vec::new();
    for r in &relators {
        let w = renumber(r);
        if !w.is_empty() && !final_relators.contains(&w) {
            final_relators.push(w);
        }
    }
    let presentation = Presentation::with_names(names, final_relators)
        .expect("kernel presentation is valid");
    let generator_words = survivors.iter().map(|&j| raw_exprs[j].clone()).collect();

    KernelPresentation {
        presentation,
        generator_words,
        transversal_rep,
        aug,
        table,
        raw_to_final,
    }
}

impl KernelPresentation {
    /// Rewrite a kernel word of the augmented presentation as a word over
    /// the kernel generators. Errors if the word is not in the kernel.
    pub fn rewrite_word(&self, w: &Word) -> Result<Word> {
        if let Some(m) = w.max_generator() {
            if m >= self.aug.len() {
                return Err(Error::Domain(format!(
                    "word uses generator index {m} but the presentation has {}",
                    self.aug.len()
                )));
            }
        }
        let mut parity = Z2::Zero;
        for (g, _) in w.iter_letters() {
            parity += self.aug[g];
        }
        if parity.is_one() {
            return Err(Error::domain("word not in kernel: augmentation is 1"));
        }
        let raw = rewrite_raw(&self.table, &self.aug, 0, w);
        let mut out = Word::empty();
        for l in raw {
            let j = (l.unsigned_abs() - 1) as usize;
            let piece = &self.raw_to_final[j];
            out = if l > 0 {
                out.concat(piece)
            } else {
                out.concat(&piece.inverse())
            };
        }
        Ok(out)
    }

    /// Substitute the kernel generators' expressions into a kernel word,
    /// producing a word over the augmented presentation's generators.
    pub fn expand_word(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for (g, inv) in w.iter_letters() {
            let e = &self.generator_words[g];
            out = if inv {
                out.concat(&e.inverse())
            } else {
                out.concat(e)
            };
        }
        out
    }
}

/// Reidemeister rewriting of `w` starting at coset `c`, over the raw
/// Schreier generators (1-based signed indices). Tree edges emit nothing.
fn rewrite_raw(
    table: &[[Option<usize>; 2]],
    aug: &[Z2],
    start: usize,
    w: &Word,
) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    let mut c = start;
    for (x, inv) in w.iter_letters() {
        let step = usize::from(aug[x].is_one());
        if !inv {
            if let Some(j) = table[x][c] {
                push_reduced(&mut out, (j + 1) as i32);
            }
            c ^= step;
        } else {
            let c2 = c ^ step;
            if let Some(j) = table[x][c2] {
                push_reduced(&mut out, -((j + 1) as i32));
            }
            c = c2;
        }
    }
    out
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Replace every occurrence of generator `j` in `w` by `repl` (inverted for
/// negative occurrences) and freely reduce.
fn substitute_letters(w: &[i32], j: usize, repl: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    let jl = (j + 1) as i32;
    for &l in w {
        if l == jl {
            for &r in repl {
                push_reduced(&mut out, r);
            }
        } else if l == -jl {
            for &r in repl.iter().rev() {
                push_reduced(&mut out, -r);
            }
        } else {
            push_reduced(&mut out, l);
        }
    }
    out
}

fn substitute_everywhere(relators: &mut Vec<Vec<i32>>, j: usize, repl: &[i32]) {
    let mut out = Vec::with_capacity(relators.len());
    for r in relators.iter() {
        let w = substitute_letters(r, j, repl);
        if !w.is_empty() {
            out.push(w);
        }
    }
    *relators = out;
}

/// One-shot convenience for [`KernelPresentation::rewrite_word`].
pub fn rewrite_in_kernel(ap: &AugmentedPresentation, w: &Word) -> Result<Word> {
    kernel_presentation(ap).rewrite_word(w)
}
