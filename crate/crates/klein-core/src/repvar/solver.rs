//! Gradient descent on products of unitary groups.
//!
//! The objective is the sum over relators of the squared Frobenius distance
//! of the relator image to the identity. Words in `U(n) x| Z/2Z` are compiled
//! to factor sequences first: pushing the anti-linear twists through the
//! product leaves, for each letter, one of four shapes in the underlying
//! generator matrix `U`, namely `U`, `U^H`, `C conj(U) C^-1` or
//! `C U^T C^-1`.
//!
//! Descent uses the Euclidean gradient projected to the tangent space (the
//! skew-Hermitian part of `U^H G`), a polar-decomposition retraction, and a
//! fixed base step halved until the Armijo sufficient-decrease test accepts.

use num_complex::Complex64;

use super::linalg::{polar, CMatrix};
use crate::fpgroup::{AugmentedPresentation, Presentation};

/// Shape of one occurrence of a generator matrix inside an expanded relator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FactorKind {
    /// `U`
    Plain,
    /// `U^H`
    Adjoint,
    /// `C conj(U) C^-1`
    ConjTwist,
    /// `C U^T C^-1`
    AdjointTwist,
}

#[derive(Debug, Clone)]
pub(crate) struct CompiledObjective {
    dim: usize,
    generator_count: usize,
    relators: Vec<Vec<(usize, FactorKind)>>,
    c: CMatrix,
    c_inv: CMatrix,
}

/// Options controlling [`minimize`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Target residual: max over relators of the Frobenius distance to I.
    pub tol: f64,
    /// Iteration cap.
    pub max_iterations: usize,
    /// Base step of the halving line search.
    pub base_step: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tol: 1e-8,
            max_iterations: 10_000,
            base_step: 1.0,
        }
    }
}

pub(crate) struct SolveOutcome {
    pub matrices: Vec<CMatrix>,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl CompiledObjective {
    /// Plain unitary representations: inverses become adjoints.
    pub fn plain(p: &Presentation, dim: usize) -> Self {
        let relators = p
            .relators()
            .iter()
            .map(|r| {
                r.iter_letters()
                    .map(|(g, inv)| {
                        (
                            g,
                            if inv {
                                FactorKind::Adjoint
                            } else {
                                FactorKind::Plain
                            },
                        )
                    })
                    .collect()
            })
            .collect();
        CompiledObjective {
            dim,
            generator_count: p.generator_count(),
            relators,
            c: CMatrix::identity(dim, dim),
            c_inv: CMatrix::identity(dim, dim),
        }
    }

    /// Augmented representations: generator `g` carries the sign
    /// `(-1)^aug(g)` and products twist by `Ad_alpha`.
    pub fn augmented(ap: &AugmentedPresentation, c: &CMatrix, dim: usize) -> Self {
        let aug = ap.augmentation();
        let relators = ap
            .base()
            .relators()
            .iter()
            .map(|r| {
                let mut factors = Vec::with_capacity(r.len());
                let mut twist = false; // product of signs so far is -1?
                for (g, inv) in r.iter_letters() {
                    let minus = aug[g].is_one();
                    let kind = match (inv, minus, twist) {
                        (false, _, false) => FactorKind::Plain,
                        (false, _, true) => FactorKind::ConjTwist,
                        (true, false, false) => FactorKind::Adjoint,
                        (true, false, true) => FactorKind::AdjointTwist,
                        (true, true, false) => FactorKind::AdjointTwist,
                        (true, true, true) => FactorKind::Adjoint,
                    };
                    factors.push((g, kind));
                    twist ^= minus;
                }
                debug_assert!(!twist, "relators have augmentation zero");
                factors
            })
            .collect();
        CompiledObjective {
            dim,
            generator_count: ap.base().generator_count(),
            relators,
            c: c.clone(),
            c_inv: c.adjoint(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    fn factor(&self, kind: FactorKind, u: &CMatrix) -> CMatrix {
        match kind {
            FactorKind::Plain => u.clone(),
            FactorKind::Adjoint => u.adjoint(),
            FactorKind::ConjTwist => &self.c * u.conjugate() * &self.c_inv,
            FactorKind::AdjointTwist => &self.c * u.transpose() * &self.c_inv,
        }
    }

    /// Objective value and residual (max per-relator Frobenius distance).
    pub fn value_and_residual(&self, mats: &[CMatrix]) -> (f64, f64) {
        let n = self.dim;
        let eye = CMatrix::identity(n, n);
        let mut f = 0.0;
        let mut worst: f64 = 0.0;
        for factors in &self.relators {
            let mut m = eye.clone();
            for &(g, kind) in factors {
                m *= self.factor(kind, &mats[g]);
            }
            let d = (&m - &eye).norm();
            f += d * d;
            worst = worst.max(d);
        }
        (f, worst)
    }

    /// Euclidean gradient `G_g` with `df(D) = sum_g Re tr(G_g^H D_g)`.
    pub fn euclidean_gradient(&self, mats: &[CMatrix]) -> Vec<CMatrix> {
        let n = self.dim;
        let eye = CMatrix::identity(n, n);
        let mut grads = vec![CMatrix::zeros(n, n); self.generator_count];
        let two = Complex64::new(2.0, 0.0);
        for factors in &self.relators {
            let vals: Vec<CMatrix> = factors
                .iter()
                .map(|&(g, kind)| self.factor(kind, &mats[g]))
                .collect();
            let m = vals.len();
            let mut prefixes = Vec::with_capacity(m + 1);
            prefixes.push(eye.clone());
            for v in &vals {
                let last = prefixes.last().unwrap() * v;
                prefixes.push(last);
            }
            let mut suffixes = vec![eye.clone(); m + 1];
            for j in (0..m).rev() {
                suffixes[j] = &vals[j] * &suffixes[j + 1];
            }
            let e = &prefixes[m] - &eye;
            let e_h = e.adjoint();
            for (j, &(g, kind)) in factors.iter().enumerate() {
                let a = &prefixes[j];
                let b = &suffixes[j + 1];
                let contrib = match kind {
                    FactorKind::Plain => a.adjoint() * &e * b.adjoint(),
                    FactorKind::Adjoint => b * &e_h * a,
                    FactorKind::ConjTwist => {
                        (&self.c_inv * b * &e_h * a * &self.c).transpose()
                    }
                    FactorKind::AdjointTwist => {
                        (&self.c_inv * b * &e_h * a * &self.c).conjugate()
                    }
                };
                grads[g] += contrib * two;
            }
        }
        grads
    }

    /// Project the Euclidean gradient to the tangent space at `mats`:
    /// `U * skew(U^H G)`.
    pub fn riemannian_gradient(&self, mats: &[CMatrix]) -> Vec<CMatrix> {
        self.euclidean_gradient(mats)
            .iter()
            .zip(mats)
            .map(|(g, u)| {
                let s = u.adjoint() * g;
                let skew = (&s - s.adjoint()) * Complex64::new(0.5, 0.0);
                u * skew
            })
            .collect()
    }

    pub fn has_relators(&self) -> bool {
        !self.relators.is_empty()
    }
}

const ARMIJO_C1: f64 = 0.1;
const MAX_HALVINGS: usize = 60;

/// Riemannian gradient descent until the residual drops below `opts.tol` or
/// the iteration cap is reached.
pub(crate) fn minimize(
    obj: &CompiledObjective,
    mut mats: Vec<CMatrix>,
    opts: &SolveOptions,
) -> SolveOutcome {
    if !obj.has_relators() {
        return SolveOutcome {
            matrices: mats,
            residual: 0.0,
            iterations: 0,
            converged: true,
        };
    }
    let (mut f, mut residual) = obj.value_and_residual(&mats);
    let mut iterations = 0;
    while iterations < opts.max_iterations && residual >= opts.tol {
        let rgrads = obj.riemannian_gradient(&mats);
        let grad_sq: f64 = rgrads.iter().map(|g| g.norm_squared()).sum();
        if grad_sq < 1e-32 {
            break; // stationary point
        }
        let mut step = opts.base_step;
        let mut accepted = false;
        for _ in 0..MAX_HALVINGS {
            let candidate: Vec<CMatrix> = mats
                .iter()
                .zip(&rgrads)
                .map(|(u, r)| polar(&(u - r * Complex64::new(step, 0.0))))
                .collect();
            let (fc, rc) = obj.value_and_residual(&candidate);
            if fc <= f - ARMIJO_C1 * step * grad_sq {
                mats = candidate;
                f = fc;
                residual = rc;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        iterations += 1;
        if !accepted {
            break; // no sufficient decrease at any step size
        }
    }
    SolveOutcome {
        converged: residual < opts.tol,
        matrices: mats,
        residual,
        iterations,
    }
}
