//! Dense complex linear algebra helpers for the representation solver.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Unitary polar factor of `m` via the singular value decomposition.
pub fn polar(m: &CMatrix) -> CMatrix {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("svd with u");
    let v_t = svd.v_t.expect("svd with v_t");
    u * v_t
}

/// Frobenius distance of `m` to the identity.
pub fn distance_to_identity(m: &CMatrix) -> f64 {
    let n = m.nrows();
    (m - CMatrix::identity(n, n)).norm()
}

/// Frobenius norm of `m m^H - I`.
pub fn unitarity_error(m: &CMatrix) -> f64 {
    distance_to_identity(&(m * m.adjoint()))
}

/// Standard Gaussian sampler via the Box-Muller transform.
pub struct BoxMuller {
    spare: Option<f64>,
}

impl BoxMuller {
    pub fn new() -> Self {
        BoxMuller { spare: None }
    }

    pub fn sample<R: Rng>(&mut self, rng: &mut R) -> f64 {
        if let Some(s) = self.spare.take() {
            return s;
        }
        // u1 in (0, 1] so the logarithm is finite
        let u1: f64 = 1.0 - rng.gen::<f64>();
        let u2: f64 = rng.gen();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        let (s, c) = theta.sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

impl Default for BoxMuller {
    fn default() -> Self {
        BoxMuller::new()
    }
}

/// Random unitary: QR of a complex Gaussian matrix.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let mut bm = BoxMuller::new();
    let m = CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(bm.sample(rng), bm.sample(rng))
    });
    m.qr().q()
}

/// Row-major `[re, im]` encoding used by the JSON interfaces.
pub fn matrix_to_rowmajor(m: &CMatrix) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            out.push([z.re, z.im]);
        }
    }
    out
}

pub fn matrix_from_rowmajor(n: usize, data: &[[f64; 2]]) -> Result<CMatrix> {
    if data.len() != n * n {
        return Err(Error::Domain(format!(
            "matrix data has {} entries, expected {}",
            data.len(),
            n * n
        )));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| {
        let [re, im] = data[i * n + j];
        Complex64::new(re, im)
    }))
}
