//! Unitary representation varieties of augmented presentations.
//!
//! A representation of the fundamental group of a Klein surface lands in
//! `U(n) x| Z/2Z`: generators of augmentation one act by pairs `(U, -1)`
//! that compose through the anti-linear twist `Ad_alpha` of a linear real
//! structure `alpha(v) = C conj(v)`. The distinguished anti-linear element is
//! normalized to `(I, -1)`; an arbitrary `C` enters only through the twist.
//!
//! Restriction along the kernel of the augmentation lands in the plain
//! unitary representation variety of the kernel presentation, where the
//! involution [`kappa`] acts; restricted representations are certified fixed
//! points of kappa via the explicit conjugator `alpha rho(sigma)^-1`.
//!
//! All solvers are deterministic per seed and single-threaded; tolerance
//! conventions: solve 1e-8, certify 1e-6, unitarity 1e-10 (Frobenius norms
//! throughout). Reproducibility across platforms is tolerance-level, not
//! bit-exact.

mod linalg;
mod solver;

pub use linalg::{
    distance_to_identity, matrix_from_rowmajor, matrix_to_rowmajor, polar, random_unitary,
    unitarity_error, BoxMuller, CMatrix,
};
pub use solver::SolveOptions;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{BestIterate, Error, Result};
use crate::fpgroup::{kernel_presentation, AugmentedPresentation, Presentation, Word, Z2};
use solver::CompiledObjective;

/// Default solve tolerance on the relator residual.
pub const SOLVE_TOL: f64 = 1e-8;
/// Default certification tolerance.
pub const CERTIFY_TOL: f64 = 1e-6;
/// Unitarity tolerance after mandatory polar re-projection.
pub const UNITARITY_TOL: f64 = 1e-10;

/// Sign component of `U(n) x| Z/2Z`, serialized as `+1` / `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_augmentation(z: Z2) -> Sign {
        if z.is_one() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;
    fn try_from(v: i8) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::domain("signs must be +1 or -1")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A linear real structure `v -> C conj(v)`: `C` unitary with
/// `C conj(C) = I`, so the map is an anti-linear involutive isometry.
#[derive(Debug, Clone, PartialEq)]
pub struct RealStructureMatrix {
    c: CMatrix,
}

impl RealStructureMatrix {
    pub fn identity(n: usize) -> Self {
        RealStructureMatrix {
            c: CMatrix::identity(n, n),
        }
    }

    pub fn new(c: CMatrix) -> Result<Self> {
        if c.nrows() != c.ncols() || c.nrows() == 0 {
            return Err(Error::domain("real structure matrix must be square, n >= 1"));
        }
        if unitarity_error(&c) > UNITARITY_TOL {
            return Err(Error::domain("real structure matrix is not unitary"));
        }
        let n = c.nrows();
        let involutive = (&c * c.conjugate() - CMatrix::identity(n, n)).norm();
        if involutive > UNITARITY_TOL {
            return Err(Error::domain(
                "C conj(C) != I: the anti-linear map is not an involution",
            ));
        }
        Ok(RealStructureMatrix { c })
    }

    pub fn dim(&self) -> usize {
        self.c.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.c
    }

    /// `Ad_alpha(m) = C conj(m) C^-1`.
    pub fn ad(&self, m: &CMatrix) -> CMatrix {
        &self.c * m.conjugate() * self.c.adjoint()
    }
}

/// An element of `U(n) x| Z/2Z` as a matrix-sign pair.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPair {
    pub matrix: CMatrix,
    pub sign: Sign,
}

/// An assignment of unitary matrices to the generators of a presentation,
/// with the worst relator residual.
///
/// Matrices are polar re-projected on construction and the residual is
/// recomputed, so a deserialized value is always internally consistent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "UnitaryRepRepr", into = "UnitaryRepRepr")]
pub struct UnitaryRep {
    presentation: Presentation,
    dim: usize,
    matrices: Vec<CMatrix>,
    residual: f64,
}

#[derive(Serialize, Deserialize)]
struct UnitaryRepRepr {
    presentation: Presentation,
    dim: usize,
    matrices: Vec<Vec<[f64; 2]>>,
    residual: f64,
}

impl UnitaryRep {
    pub fn new(presentation: Presentation, matrices: Vec<CMatrix>) -> Result<Self> {
        let dim = check_matrices(&presentation, &matrices)?;
        let matrices: Vec<CMatrix> = matrices.iter().map(polar).collect();
        let obj = CompiledObjective::plain(&presentation, dim);
        let (_, residual) = obj.value_and_residual(&matrices);
        Ok(UnitaryRep {
            presentation,
            dim,
            matrices,
            residual,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// Max over relators of the Frobenius distance of the relator image to
    /// the identity (0 for a free group).
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Evaluate a word: inverses act by the conjugate transpose.
    pub fn evaluate_word(&self, w: &Word) -> Result<CMatrix> {
        self.presentation.validate_word(w)?;
        let mut acc = CMatrix::identity(self.dim, self.dim);
        for (g, inv) in w.iter_letters() {
            if inv {
                acc *= self.matrices[g].adjoint();
            } else {
                acc *= &self.matrices[g];
            }
        }
        Ok(acc)
    }
}

impl TryFrom<UnitaryRepRepr> for UnitaryRep {
    type Error = Error;
    fn try_from(r: UnitaryRepRepr) -> Result<Self> {
        let matrices = r
            .matrices
            .iter()
            .map(|m| matrix_from_rowmajor(r.dim, m))
            .collect::<Result<Vec<_>>>()?;
        UnitaryRep::new(r.presentation, matrices)
    }
}

impl From<UnitaryRep> for UnitaryRepRepr {
    fn from(rep: UnitaryRep) -> UnitaryRepRepr {
        UnitaryRepRepr {
            dim: rep.dim,
            matrices: rep.matrices.iter().map(matrix_to_rowmajor).collect(),
            presentation: rep.presentation,
            residual: rep.residual,
        }
    }
}

/// A representation of an augmented presentation into `U(n) x| Z/2Z`:
/// generator `g` acts by `(U_g, (-1)^aug(g))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "AugmentedUnitaryRepRepr", into = "AugmentedUnitaryRepRepr")]
pub struct AugmentedUnitaryRep {
    presentation: AugmentedPresentation,
    real_structure: RealStructureMatrix,
    dim: usize,
    matrices: Vec<CMatrix>,
    residual: f64,
}

#[derive(Serialize, Deserialize)]
struct AugmentedUnitaryRepRepr {
    presentation: AugmentedPresentation,
    real_structure: Vec<[f64; 2]>,
    dim: usize,
    matrices: Vec<Vec<[f64; 2]>>,
    signs: Vec<i8>,
    residual: f64,
}

impl AugmentedUnitaryRep {
    pub fn new(
        presentation: AugmentedPresentation,
        real_structure: RealStructureMatrix,
        matrices: Vec<CMatrix>,
    ) -> Result<Self> {
        let dim = check_matrices(presentation.base(), &matrices)?;
        if real_structure.dim() != dim {
            return Err(Error::domain("real structure dimension mismatch"));
        }
        let matrices: Vec<CMatrix> = matrices.iter().map(polar).collect();
        let obj = CompiledObjective::augmented(&presentation, real_structure.matrix(), dim);
        let (_, residual) = obj.value_and_residual(&matrices);
        Ok(AugmentedUnitaryRep {
            presentation,
            real_structure,
            dim,
            matrices,
            residual,
        })
    }

    pub fn presentation(&self) -> &AugmentedPresentation {
        &self.presentation
    }

    pub fn real_structure(&self) -> &RealStructureMatrix {
        &self.real_structure
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// Signs are determined by the augmentation.
    pub fn signs(&self) -> Vec<Sign> {
        self.presentation
            .augmentation()
            .iter()
            .map(|&z| Sign::from_augmentation(z))
            .collect()
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Evaluate a word under the semidirect law
    /// `(U, e)(V, h) = (U Ad^[e](V), e h)`.
    pub fn evaluate_word(&self, w: &Word) -> Result<MatrixPair> {
        self.presentation.base().validate_word(w)?;
        let aug = self.presentation.augmentation();
        let alpha = &self.real_structure;
        let mut acc = MatrixPair {
            matrix: CMatrix::identity(self.dim, self.dim),
            sign: Sign::Plus,
        };
        for (g, inv) in w.iter_letters() {
            let sign = Sign::from_augmentation(aug[g]);
            let factor = if !inv {
                MatrixPair {
                    matrix: self.matrices[g].clone(),
                    sign,
                }
            } else if sign == Sign::Plus {
                MatrixPair {
                    matrix: self.matrices[g].adjoint(),
                    sign,
                }
            } else {
                // (U, -1)^-1 = (Ad_alpha(U^-1), -1) = (C U^T C^-1, -1)
                MatrixPair {
                    matrix: alpha.c.clone() * self.matrices[g].transpose() * alpha.c.adjoint(),
                    sign,
                }
            };
            let twisted = if acc.sign == Sign::Minus {
                alpha.ad(&factor.matrix)
            } else {
                factor.matrix
            };
            acc = MatrixPair {
                matrix: acc.matrix * twisted,
                sign: acc.sign * factor.sign,
            };
        }
        Ok(acc)
    }
}

impl TryFrom<AugmentedUnitaryRepRepr> for AugmentedUnitaryRep {
    type Error = Error;
    fn try_from(r: AugmentedUnitaryRepRepr) -> Result<Self> {
        let expected: Vec<i8> = r
            .presentation
            .augmentation()
            .iter()
            .map(|&z| if z.is_one() { -1 } else { 1 })
            .collect();
        if r.signs != expected {
            return Err(Error::domain(
                "signs do not match the augmentation: expected (-1)^aug per generator",
            ));
        }
        let real_structure =
            RealStructureMatrix::new(matrix_from_rowmajor(r.dim, &r.real_structure)?)?;
        let matrices = r
            .matrices
            .iter()
            .map(|m| matrix_from_rowmajor(r.dim, m))
            .collect::<Result<Vec<_>>>()?;
        AugmentedUnitaryRep::new(r.presentation, real_structure, matrices)
    }
}

impl From<AugmentedUnitaryRep> for AugmentedUnitaryRepRepr {
    fn from(rep: AugmentedUnitaryRep) -> AugmentedUnitaryRepRepr {
        AugmentedUnitaryRepRepr {
            signs: rep.signs().iter().map(|&s| i8::from(s)).collect(),
            real_structure: matrix_to_rowmajor(rep.real_structure.matrix()),
            dim: rep.dim,
            matrices: rep.matrices.iter().map(matrix_to_rowmajor).collect(),
            presentation: rep.presentation,
            residual: rep.residual,
        }
    }
}

fn check_matrices(p: &Presentation, matrices: &[CMatrix]) -> Result<usize> {
    if matrices.len() != p.generator_count() {
        return Err(Error::Domain(format!(
            "expected {} generator matrices, got {}",
            p.generator_count(),
            matrices.len()
        )));
    }
    let dim = matrices.first().map_or(0, |m| m.nrows());
    if dim == 0 {
        return Err(Error::domain("representation dimension must be >= 1"));
    }
    if matrices.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
        return Err(Error::domain("generator matrices must all be n x n"));
    }
    Ok(dim)
}

fn seeded_unitaries(count: usize, dim: usize, seed: u64) -> Vec<CMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_unitary(dim, &mut rng)).collect()
}

/// Numerically solve for a unitary representation of `p` in dimension `n`.
/// Deterministic per seed; see [`SolveOptions`] for tolerances.
pub fn solve_rep(p: &Presentation, n: usize, seed: u64, opts: &SolveOptions) -> Result<UnitaryRep> {
    if n == 0 {
        return Err(Error::domain("representation dimension must be >= 1"));
    }
    let obj = CompiledObjective::plain(p, n);
    let init = seeded_unitaries(p.generator_count(), n, seed);
    let out = solver::minimize(&obj, init, opts);
    let rep = UnitaryRep::new(p.clone(), out.matrices)?;
    if out.converged {
        Ok(rep)
    } else {
        Err(Error::Convergence {
            residual: out.residual,
            tolerance: opts.tol,
            iterations: out.iterations,
            best: Box::new(BestIterate::Plain(rep)),
        })
    }
}

/// Solve for an augmented representation: signs are fixed by the
/// augmentation and matrices are optimized under semidirect evaluation.
pub fn solve_augmented_rep(
    ap: &AugmentedPresentation,
    n: usize,
    c: &RealStructureMatrix,
    seed: u64,
    opts: &SolveOptions,
) -> Result<AugmentedUnitaryRep> {
    if n == 0 {
        return Err(Error::domain("representation dimension must be >= 1"));
    }
    if c.dim() != n {
        return Err(Error::domain("real structure dimension mismatch"));
    }
    let obj = CompiledObjective::augmented(ap, c.matrix(), n);
    let init = seeded_unitaries(ap.base().generator_count(), n, seed);
    let out = solver::minimize(&obj, init, opts);
    let rep = AugmentedUnitaryRep::new(ap.clone(), c.clone(), out.matrices)?;
    if out.converged {
        Ok(rep)
    } else {
        Err(Error::Convergence {
            residual: out.residual,
            tolerance: opts.tol,
            iterations: out.iterations,
            best: Box::new(BestIterate::Augmented(rep)),
        })
    }
}

/// Restrict an augmented representation along the kernel of the
/// augmentation: each kernel generator receives the image of its expression
/// word. The resulting signs are all `+1` since kernel words have
/// augmentation zero.
pub fn restrict_rep(augrep: &AugmentedUnitaryRep) -> Result<UnitaryRep> {
    let kernel = kernel_presentation(augrep.presentation());
    let mut matrices = Vec::with_capacity(kernel.generator_words.len());
    for w in &kernel.generator_words {
        let pair = augrep.evaluate_word(w)?;
        debug_assert_eq!(pair.sign, Sign::Plus);
        matrices.push(pair.matrix);
    }
    UnitaryRep::new(kernel.presentation.clone(), matrices)
}

/// The involution of the kernel's unitary representation variety induced by
/// a lift `sigma` of the real structure (any word of augmentation one):
/// `kappa(chi) = Ad_alpha o chi o Ad_sigma^-1`, computed per kernel
/// generator through Reidemeister-Schreier rewriting.
pub fn kappa(
    chi: &UnitaryRep,
    ap: &AugmentedPresentation,
    c: &RealStructureMatrix,
    sigma: &Word,
) -> Result<UnitaryRep> {
    if ap.augmentation_of_word(sigma)? != Z2::One {
        return Err(Error::domain(
            "sigma must have augmentation 1 (a lift of the real structure)",
        ));
    }
    if c.dim() != chi.dim() {
        return Err(Error::domain("real structure dimension mismatch"));
    }
    let kernel = kernel_presentation(ap);
    if !chi
        .presentation()
        .same_group_data(&kernel.presentation)
    {
        return Err(Error::domain(
            "chi is not a representation of the kernel presentation of ap",
        ));
    }
    let sigma_inv = sigma.inverse();
    let mut matrices = Vec::with_capacity(kernel.generator_words.len());
    for w in &kernel.generator_words {
        let conjugated = sigma_inv.concat(w).concat(sigma);
        let rewritten = kernel.rewrite_word(&conjugated)?;
        let m = chi.evaluate_word(&rewritten)?;
        matrices.push(c.ad(&m));
    }
    UnitaryRep::new(chi.presentation().clone(), matrices)
}

/// Decide unitary equivalence `chi2 = Ad_W o chi1` numerically.
///
/// A trace comparison over short words short-circuits obvious
/// non-conjugacy; otherwise the stacked intertwiner system
/// `chi2(g) W = W chi1(g)` is solved by SVD, candidate nullspace vectors are
/// polar-projected to `U(n)` and verified. `None` means no verified
/// conjugator was found (for reducible representations this is not a proof
/// of non-conjugacy).
pub fn conjugator_search(
    chi1: &UnitaryRep,
    chi2: &UnitaryRep,
    tol: f64,
) -> Result<Option<CMatrix>> {
    if chi1.dim() != chi2.dim() {
        return Err(Error::domain("conjugator search needs equal dimensions"));
    }
    if !chi1.presentation().same_group_data(chi2.presentation()) {
        return Err(Error::domain("conjugator search needs the same presentation"));
    }
    let n = chi1.dim();
    let k = chi1.presentation().generator_count();

    // trace pre-test over reduced words of length <= 3
    let slack = (30.0 * (n as f64).sqrt() * tol).max(1e-4);
    for w in short_words(k, 3) {
        let t1 = chi1.evaluate_word(&w)?.trace();
        let t2 = chi2.evaluate_word(&w)?.trace();
        if (t1 - t2).norm() > slack {
            return Ok(None);
        }
    }

    // stacked intertwiner system: (I (x) chi2(g) - chi1(g)^T (x) I) vec(W) = 0
    let eye = CMatrix::identity(n, n);
    let mut stacked = CMatrix::zeros(k * n * n, n * n);
    for g in 0..k {
        let block = eye.kronecker(&chi2.matrices()[g]) - chi1.matrices()[g].transpose().kronecker(&eye);
        stacked.view_mut((g * n * n, 0), (n * n, n * n)).copy_from(&block);
    }
    let svd = stacked.svd(true, true);
    let v_t = svd.v_t.expect("svd with v_t");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[a]
            .partial_cmp(&svd.singular_values[b])
            .expect("singular values are finite")
    });
    let sigma_max = order
        .last()
        .map(|&i| svd.singular_values[i])
        .unwrap_or(0.0);
    let threshold = 1e-6 * sigma_max.max(1.0);

    for &i in &order {
        if svd.singular_values[i] > threshold {
            break;
        }
        // right singular vector = conj of row i of V^H, unvec column-major
        let row = v_t.row(i);
        let vecw: Vec<Complex64> = row.iter().map(|z| z.conj()).collect();
        let w = CMatrix::from_column_slice(n, n, &vecw);
        let w = polar(&w);
        let worst = intertwining_residual(chi1, chi2, &w);
        if worst < tol {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// `max_g ||W chi1(g) W^-1 - chi2(g)||_F`.
pub fn intertwining_residual(chi1: &UnitaryRep, chi2: &UnitaryRep, w: &CMatrix) -> f64 {
    chi1.matrices()
        .iter()
        .zip(chi2.matrices())
        .map(|(a, b)| (w * a * w.adjoint() - b).norm())
        .fold(0.0, f64::max)
}

fn short_words(generators: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut letters: Vec<i32> = Vec::new();
    fn rec(generators: usize, max_len: usize, letters: &mut Vec<i32>, out: &mut Vec<Word>) {
        if !letters.is_empty() {
            out.push(Word::from_letters(letters).expect("letters are nonzero"));
        }
        if letters.len() == max_len {
            return;
        }
        for g in 1..=generators as i32 {
            for l in [g, -g] {
                if letters.last() == Some(&-l) {
                    continue;
                }
                letters.push(l);
                rec(generators, max_len, letters, out);
                letters.pop();
            }
        }
    }
    rec(generators, max_len, &mut letters, &mut out);
    out
}

/// Certificate that a restricted representation is a fixed point of kappa.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "KappaCertificateRepr", into = "KappaCertificateRepr")]
pub struct KappaCertificate {
    /// The explicit conjugator `alpha rho(sigma)^-1 = U_sigma^-1`.
    pub conjugator: CMatrix,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Serialize, Deserialize)]
struct KappaCertificateRepr {
    #[serde(rename = "W")]
    w: Vec<[f64; 2]>,
    residual: f64,
    tolerance: f64,
    passed: bool,
}

impl TryFrom<KappaCertificateRepr> for KappaCertificate {
    type Error = Error;
    fn try_from(r: KappaCertificateRepr) -> Result<Self> {
        let n = (r.w.len() as f64).sqrt().round() as usize;
        Ok(KappaCertificate {
            conjugator: matrix_from_rowmajor(n, &r.w)?,
            residual: r.residual,
            tolerance: r.tolerance,
            passed: r.passed,
        })
    }
}

impl From<KappaCertificate> for KappaCertificateRepr {
    fn from(c: KappaCertificate) -> KappaCertificateRepr {
        KappaCertificateRepr {
            w: matrix_to_rowmajor(&c.conjugator),
            residual: c.residual,
            tolerance: c.tolerance,
            passed: c.passed,
        }
    }
}

/// Certify that the restriction of `augrep` is a fixed point of kappa, using
/// the explicit conjugator `W = U_sigma^-1` where
/// `(U_sigma, -1) = rho(sigma)`.
///
/// Returns a passing certificate or a verification-failure error carrying
/// the residual. For exact representations the theorem guarantees success,
/// so the certificate is allowed `tol` plus slack proportional to the
/// representation's own residual (rewriting amplifies it by word length).
pub fn verify_fix_kappa(
    augrep: &AugmentedUnitaryRep,
    sigma: &Word,
    tol: f64,
) -> Result<KappaCertificate> {
    let ap = augrep.presentation();
    if ap.augmentation_of_word(sigma)? != Z2::One {
        return Err(Error::domain(
            "sigma must have augmentation 1 (a lift of the real structure)",
        ));
    }
    let chi = restrict_rep(augrep)?;
    let kchi = kappa(&chi, ap, augrep.real_structure(), sigma)?;
    let pair = augrep.evaluate_word(sigma)?;
    debug_assert_eq!(pair.sign, Sign::Minus);
    let w = pair.matrix.adjoint();
    let residual = intertwining_residual(&chi, &kchi, &w);
    let allowed = tol + 100.0 * augrep.residual();
    if residual < allowed {
        Ok(KappaCertificate {
            conjugator: w,
            residual,
            tolerance: tol,
            passed: true,
        })
    } else {
        Err(Error::Verification {
            residual,
            tolerance: tol,
        })
    }
}

/// The word of augmentation one used as the default lift of the real
/// structure: the presentation's first odd generator.
pub fn default_sigma(ap: &AugmentedPresentation) -> Word {
    Word::gen(ap.first_odd_generator())
}

/// The solver objective exposed for verification: its value can be finite-
/// differenced independently of the analytic gradient the solver descends.
pub struct SolverObjective {
    inner: CompiledObjective,
}

impl SolverObjective {
    pub fn plain(p: &Presentation, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("representation dimension must be >= 1"));
        }
        Ok(SolverObjective {
            inner: CompiledObjective::plain(p, n),
        })
    }

    pub fn augmented(
        ap: &AugmentedPresentation,
        c: &RealStructureMatrix,
        n: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("representation dimension must be >= 1"));
        }
        if c.dim() != n {
            return Err(Error::domain("real structure dimension mismatch"));
        }
        Ok(SolverObjective {
            inner: CompiledObjective::augmented(ap, c.matrix(), n),
        })
    }

    pub fn generator_count(&self) -> usize {
        self.inner.generator_count()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Sum over relators of the squared Frobenius distance to the identity.
    pub fn value(&self, mats: &[CMatrix]) -> f64 {
        self.inner.value_and_residual(mats).0
    }

    /// The tangent-space gradient used by the solver.
    pub fn riemannian_gradient(&self, mats: &[CMatrix]) -> Vec<CMatrix> {
        self.inner.riemannian_gradient(mats)
    }
}
