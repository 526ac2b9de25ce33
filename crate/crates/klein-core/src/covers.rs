//! Finite covers as permutation actions of a presented group.
//!
//! A degree-`n` cover of a space with fundamental group `<X | R>` is a tuple
//! of permutations of `{0..n-1}`, one per generator, killing every relator.
//! Connected covers are transitive actions, Galois covers have point
//! stabilizers acting trivially, and a real cover restricts to its underlying
//! complex cover along the kernel of the augmentation.
//!
//! The left-action convention follows path composition "first travel the
//! right factor": the image of a product is the image of the left factor
//! applied after the image of the right factor.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::{
    kernel_presentation, AugmentedPresentation, KernelPresentation, Presentation, Word,
};

/// Default node budget for exhaustive enumeration.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A permutation of `{0..n-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn from_one_line(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::domain("not a permutation in one-line notation"));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.map
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Permutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.map
    }
}

/// A finite permutation action of a presentation: one permutation per
/// generator, satisfying every relator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationAction {
    pub degree: usize,
    pub images: Vec<Permutation>,
}

impl PermutationAction {
    /// Build an action of `p`, checking degrees and relators.
    pub fn new(p: &Presentation, degree: usize, images: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::domain("action degree must be positive"));
        }
        if images.len() != p.generator_count() {
            return Err(Error::Domain(format!(
                "expected {} generator images, got {}",
                p.generator_count(),
                images.len()
            )));
        }
        if images.iter().any(|im| im.degree() != degree) {
            return Err(Error::domain("generator image degree mismatch"));
        }
        let action = PermutationAction { degree, images };
        for r in p.relators() {
            if !evaluate_word_perm(&action, r)?.is_identity() {
                return Err(Error::Domain(format!(
                    "images do not satisfy relator {:?}",
                    r.letters()
                )));
            }
        }
        Ok(action)
    }
}

/// Evaluate `w` in the action; the image of a product applies its right
/// factor first.
pub fn evaluate_word_perm(action: &PermutationAction, w: &Word) -> Result<Permutation> {
    let mut acc = Permutation::identity(action.degree);
    for (g, inv) in w.iter_letters() {
        let img = action
            .images
            .get(g)
            .ok_or_else(|| Error::Domain(format!("word uses generator index {g}")))?;
        let factor = if inv { img.inverse() } else { img.clone() };
        acc = acc.compose(&factor);
    }
    Ok(acc)
}

/// Orbits of the action, i.e. connected components of the cover; blocks are
/// sorted and ordered by least element, and their sizes sum to the degree.
pub fn orbit_decomposition(action: &PermutationAction) -> Vec<Vec<usize>> {
    let n = action.degree;
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut block = vec![start];
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(q) = queue.pop() {
            for img in &action.images {
                for next in [img.apply(q), img.inverse().apply(q)] {
                    if !seen[next] {
                        seen[next] = true;
                        block.push(next);
                        queue.push(next);
                    }
                }
            }
        }
        block.sort_unstable();
        orbits.push(block);
    }
    orbits
}

/// Whether the cover is connected (the action has a single orbit).
pub fn is_transitive(action: &PermutationAction) -> bool {
    orbit_decomposition(action).len() == 1
}

/// Schreier generators of the stabilizer of `point`, as words over the
/// presentation's generators. Requires a transitive action; every returned
/// word evaluates to a permutation fixing `point`.
pub fn stabilizer_schreier_generators(
    action: &PermutationAction,
    point: usize,
) -> Result<Vec<Word>> {
    if point >= action.degree {
        return Err(Error::domain("stabilizer point out of range"));
    }
    if !is_transitive(action) {
        return Err(Error::domain(
            "stabilizer generators require a transitive action",
        ));
    }
    // breadth-first Schreier tree: transversal[q] maps `point` to q
    let n = action.degree;
    let mut transversal: Vec<Option<Word>> = vec![None; n];
    transversal[point] = Some(Word::empty());
    let mut queue = std::collections::VecDeque::from([point]);
    while let Some(q) = queue.pop_front() {
        for (x, img) in action.images.iter().enumerate() {
            let q2 = img.apply(q);
            if transversal[q2].is_none() {
                let tq = transversal[q].clone().expect("visited");
                transversal[q2] = Some(Word::gen(x).concat(&tq));
                queue.push_back(q2);
            }
        }
    }
    let mut out: Vec<Word> = Vec::new();
    for q in 0..n {
        for (x, img) in action.images.iter().enumerate() {
            let q2 = img.apply(q);
            let tq = transversal[q].as_ref().expect("transitive");
            let tq2 = transversal[q2].as_ref().expect("transitive");
            // t_{x.q}^-1 * x * t_q fixes `point`
            let s = tq2.inverse().concat(&Word::gen(x)).concat(tq);
            if !s.is_empty() && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Whether a transitive action corresponds to a Galois cover: the stabilizer
/// of a point is normal, equivalently every Schreier generator of the
/// stabilizer acts trivially on all points.
pub fn is_galois(action: &PermutationAction) -> Result<bool> {
    let gens = stabilizer_schreier_generators(action, 0)?;
    for w in &gens {
        if !evaluate_word_perm(action, w)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restrict an action of the augmented presentation to the kernel of the
/// augmentation: each kernel generator acts by its expression word. Orbits of
/// the result are the connected components of the underlying complex cover.
pub fn restrict_action_to_kernel(
    ap: &AugmentedPresentation,
    action: &PermutationAction,
) -> Result<PermutationAction> {
    for r in ap.base().relators() {
        if !evaluate_word_perm(action, r)?.is_identity() {
            return Err(Error::domain(
                "action does not satisfy the augmented presentation's relators",
            ));
        }
    }
    let kernel = kernel_presentation(ap);
    restrict_action(&kernel, action)
}

/// As [`restrict_action_to_kernel`], reusing a computed kernel presentation.
pub fn restrict_action(
    kernel: &KernelPresentation,
    action: &PermutationAction,
) -> Result<PermutationAction> {
    let images = kernel
        .generator_words
        .iter()
        .map(|w| evaluate_word_perm(action, w))
        .collect::<Result<Vec<_>>>()?;
    PermutationAction::new(&kernel.presentation, action.degree, images)
}

/// All degree-`n` actions of `p`, filling generator images in index order
/// and permutations in lexicographic one-line order, with incremental
/// relator pruning.
///
/// With `up_to_conjugacy`, only the lexicographically minimal representative
/// of each simultaneous-conjugation orbit under `Sym(n)` is kept. The search
/// counts node expansions against `budget` (default [`DEFAULT_BUDGET`]) and
/// returns a resource error carrying the partial count when exceeded.
pub fn enumerate_actions(
    p: &Presentation,
    n: usize,
    up_to_conjugacy: bool,
    budget: Option<u64>,
) -> Result<Vec<PermutationAction>> {
    if n == 0 {
        return Err(Error::domain("cover degree must be positive"));
    }
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let perms = all_permutations(n);
    let gens = p.generator_count();
    // relators checked as soon as their highest generator is assigned
    let mut relators_by_max: Vec<Vec<&Word>> = vec![Vec::new(); gens];
    for r in p.relators() {
        let m = r.max_generator().expect("relators are non-empty");
        relators_by_max[m].push(r);
    }

    let nodes = AtomicU64::new(0);
    let search_first = |first: &Permutation| -> Vec<PermutationAction> {
        let mut found = Vec::new();
        let mut stack: Vec<Permutation> = vec![first.clone()];
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            return found;
        }
        if check_level(&relators_by_max[0], &stack, n) {
            dfs(
                p,
                &perms,
                &relators_by_max,
                &mut stack,
                n,
                gens,
                &nodes,
                budget,
                up_to_conjugacy,
                &mut found,
            );
        }
        found
    };

    let branches: Vec<Vec<PermutationAction>> = if gens > 1 {
        perms.par_iter().map(search_first).collect()
    } else {
        perms.iter().map(search_first).collect()
    };
    let results: Vec<PermutationAction> = branches.into_iter().flatten().collect();
    if nodes.load(Ordering::Relaxed) >= budget {
        return Err(Error::Budget {
            found: results.len(),
        });
    }
    Ok(results)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    p: &Presentation,
    perms: &[Permutation],
    relators_by_max: &[Vec<&Word>],
    stack: &mut Vec<Permutation>,
    n: usize,
    gens: usize,
    nodes: &AtomicU64,
    budget: u64,
    up_to_conjugacy: bool,
    found: &mut Vec<PermutationAction>,
) {
    if stack.len() == gens {
        let action = PermutationAction {
            degree: n,
            images: stack.clone(),
        };
        if !up_to_conjugacy || is_canonical(&action, perms) {
            found.push(action);
        }
        return;
    }
    let level = stack.len();
    for perm in perms {
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            return;
        }
        stack.push(perm.clone());
        if check_level(&relators_by_max[level], stack, n) {
            dfs(
                p,
                perms,
                relators_by_max,
                stack,
                n,
                gens,
                nodes,
                budget,
                up_to_conjugacy,
                found,
            );
        }
        stack.pop();
    }
}

fn check_level(relators: &[&Word], images: &[Permutation], n: usize) -> bool {
    let action = PermutationAction {
        degree: n,
        images: images.to_vec(),
    };
    relators.iter().all(|r| {
        evaluate_word_perm(&action, r)
            .map(|p| p.is_identity())
            .unwrap_or(false)
    })
}

/// Whether the action is the lexicographically minimal element of its
/// simultaneous-conjugation orbit.
fn is_canonical(action: &PermutationAction, perms: &[Permutation]) -> bool {
    let current: Vec<&[usize]> = action.images.iter().map(|p| p.one_line()).collect();
    for sigma in perms {
        let conj: Vec<Permutation> = action
            .images
            .iter()
            .map(|g| sigma.compose(g).compose(&sigma.inverse()))
            .collect();
        let candidate: Vec<&[usize]> = conj.iter().map(|p| p.one_line()).collect();
        if candidate < current {
            return false;
        }
    }
    true
}

/// All permutations of degree `n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if current.len() == n {
            out.push(Permutation {
                map: current.clone(),
            });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
