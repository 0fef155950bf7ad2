//! Sparse heavy-tailed process regression over scalar inputs.
//!
//! One model regresses a scalar target on a scalar input through a squared
//! exponential kernel, a set of inducing inputs with a free-form Gaussian
//! variational distribution over the inducing values, and a Student-t
//! observation likelihood whose tail weight `nu` is learnable. Predictions
//! are Student-t posteriors whose scale both shrinks near data and widens
//! with the learned tail weight, which is what downstream link adaptation
//! consumes for risk-aware rate selection.
//!
//! The module splits into:
//! - this file: model types, kernel, log-likelihood, the sparse conditional
//!   posterior, a cached [`Predictor`] for repeated queries, persistence;
//! - [`elbo`]: the training objective and its analytic gradient;
//! - [`fit`]: the optimizer loop and trace-to-model builders.
//!
//! # Example
//!
//! ```
//! use subnetla::sptpr::{SptprModel, KernelParams};
//!
//! let model = SptprModel::from_parts(
//!     vec![0.0, 1.0, 2.0],
//!     vec![0.5, -0.2, 0.1],
//!     KernelParams::default(),
//!     4.0,   // tail weight
//!     0.01,  // noise variance
//! ).unwrap();
//! let post = model.sparse_conditional(1.0).unwrap();
//! assert!(post.scale > 0.0);
//! assert_eq!(post.nu, 4.0 + 3.0);
//! ```

pub mod elbo;
pub mod fit;

use std::fs;
use std::path::Path;

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

pub use fit::{fit_sptpr, build_vdssm_models, FitConfig, FitReport, NuMode, VdssmModels};

/// Squared exponential kernel hyper-parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    /// Signal variance; `k(x, x) = variance`.
    pub variance: f64,
    /// Correlation length in input units.
    pub lengthscale: f64,
    /// Diagonal stabilizer added when forming square self-covariance
    /// matrices over the inducing inputs.
    pub jitter: f64,
}

impl Default for KernelParams {
    fn default() -> Self {
        KernelParams {
            variance: 1.0,
            lengthscale: 1.0,
            jitter: 1e-6,
        }
    }
}

impl KernelParams {
    /// Validates positivity of every parameter.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("variance", self.variance),
            ("lengthscale", self.lengthscale),
            ("jitter", self.jitter),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Validation(format!(
                    "kernel {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Evaluates the squared exponential kernel
/// `variance * exp(-(x - y)^2 / (2 * lengthscale^2))`.
pub fn kernel_eval(x: f64, y: f64, params: &KernelParams) -> f64 {
    let d = x - y;
    params.variance * (-d * d / (2.0 * params.lengthscale * params.lengthscale)).exp()
}

/// Builds the rectangular kernel matrix `K[i, j] = k(xs[i], zs[j])`.
pub fn kernel_matrix(xs: &[f64], zs: &[f64], params: &KernelParams) -> DMatrix<f64> {
    DMatrix::from_fn(xs.len(), zs.len(), |i, j| kernel_eval(xs[i], zs[j], params))
}

/// Builds the square self-covariance over `zs` with the jitter stabilizer on
/// the diagonal. This jittered matrix is the definition of the prior
/// covariance used everywhere in this module.
pub fn kernel_gram(zs: &[f64], params: &KernelParams) -> DMatrix<f64> {
    let mut k = kernel_matrix(zs, zs, params);
    for i in 0..zs.len() {
        k[(i, i)] += params.jitter;
    }
    k
}

/// Log-density of a Student-t observation `y` with location `f`, tail weight
/// `nu` and scale `theta`.
pub fn student_t_logpdf(y: f64, f: f64, nu: f64, theta: f64) -> f64 {
    debug_assert!(nu > 0.0 && theta > 0.0, "logpdf needs nu > 0, theta > 0");
    let r = (y - f) / theta;
    ln_gamma((nu + 1.0) / 2.0)
        - ln_gamma(nu / 2.0)
        - 0.5 * (nu * std::f64::consts::PI).ln()
        - theta.ln()
        - 0.5 * (nu + 1.0) * (r * r / nu).ln_1p()
}

/// Student-t predictive posterior for a scalar quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StudentTPosterior {
    /// Location (posterior mean).
    pub mean: f64,
    /// Squared scale parameter (not the variance; see [`Self::variance`]).
    pub scale: f64,
    /// Tail weight.
    pub nu: f64,
}

impl StudentTPosterior {
    /// Degenerate point posterior (zero scale), used by oracle-style
    /// selectors that know the true value.
    pub fn point(mean: f64) -> Self {
        StudentTPosterior {
            mean,
            scale: 0.0,
            nu: f64::INFINITY,
        }
    }

    /// Second central moment `nu / (nu - 2) * scale`.
    ///
    /// Requires `nu > 2`; an infinite tail weight (Gaussian limit / point
    /// posterior) uses factor 1.
    pub fn variance(&self) -> f64 {
        if self.nu.is_finite() {
            debug_assert!(self.nu > 2.0, "variance needs nu > 2");
            self.nu / (self.nu - 2.0) * self.scale
        } else {
            self.scale
        }
    }
}

/// A scalar-input scalar-target training set.
#[derive(Debug, Clone, Default)]
pub struct TrainingSet {
    /// Regression inputs.
    pub inputs: Vec<f64>,
    /// Regression targets.
    pub targets: Vec<f64>,
}

impl TrainingSet {
    /// Builds a training set, checking shape and finiteness.
    pub fn new(inputs: Vec<f64>, targets: Vec<f64>) -> Result<Self> {
        if inputs.len() != targets.len() {
            return Err(Error::Contract(format!(
                "training set length mismatch: {} inputs vs {} targets",
                inputs.len(),
                targets.len()
            )));
        }
        if inputs.is_empty() {
            return Err(Error::Contract("training set is empty".into()));
        }
        if inputs.iter().chain(targets.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Contract(
                "training set contains non-finite values".into(),
            ));
        }
        Ok(TrainingSet { inputs, targets })
    }

    /// Number of samples.
    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    /// True when no samples are present.
    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }
}

/// Trained sparse regression model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SptprModel {
    /// Inducing input locations (fixed after initialization).
    pub inducing_inputs: Vec<f64>,
    /// Variational mean over the inducing values (offset-centered domain).
    pub variational_mean: DVector<f64>,
    /// Lower-triangular factor `C` of the variational covariance `C Cᵀ`.
    pub variational_cov_factor: DMatrix<f64>,
    /// Kernel hyper-parameters.
    pub kernel: KernelParams,
    /// Likelihood tail weight (must stay above 2 so second moments exist).
    pub nu: f64,
    /// Observation noise variance; its square root is the likelihood scale.
    pub noise_var: f64,
    /// Constant subtracted from targets before training and added back to
    /// predictive means; the zero-mean prior then only has to explain
    /// fluctuations around it.
    pub target_offset: f64,
}

impl SptprModel {
    /// Assembles a model with an identity-scaled variational covariance and
    /// zero target offset; mainly useful for tests and hand-built baselines.
    pub fn from_parts(
        inducing_inputs: Vec<f64>,
        variational_mean: Vec<f64>,
        kernel: KernelParams,
        nu: f64,
        noise_var: f64,
    ) -> Result<Self> {
        let l_e = inducing_inputs.len();
        if variational_mean.len() != l_e {
            return Err(Error::Contract(format!(
                "variational mean length {} does not match {} inducing inputs",
                variational_mean.len(),
                l_e
            )));
        }
        let model = SptprModel {
            inducing_inputs,
            variational_mean: DVector::from_vec(variational_mean),
            variational_cov_factor: DMatrix::identity(l_e, l_e) * 1e-4,
            kernel,
            nu,
            noise_var,
            target_offset: 0.0,
        };
        model.validate()?;
        Ok(model)
    }

    /// Number of inducing inputs.
    pub fn n_inducing(&self) -> usize {
        self.inducing_inputs.len()
    }

    /// Checks all structural invariants of the parameterization.
    pub fn validate(&self) -> Result<()> {
        self.kernel.validate()?;
        let l_e = self.inducing_inputs.len();
        if l_e == 0 {
            return Err(Error::Validation("model has no inducing inputs".into()));
        }
        if self.variational_mean.len() != l_e
            || self.variational_cov_factor.nrows() != l_e
            || self.variational_cov_factor.ncols() != l_e
        {
            return Err(Error::Validation(
                "variational parameter shapes do not match inducing inputs".into(),
            ));
        }
        if !(self.nu.is_finite() && self.nu > 2.0) {
            return Err(Error::Validation(format!(
                "tail weight must satisfy nu > 2, got {}",
                self.nu
            )));
        }
        if !(self.noise_var.is_finite() && self.noise_var > 0.0) {
            return Err(Error::Validation(format!(
                "noise variance must be positive, got {}",
                self.noise_var
            )));
        }
        for i in 0..l_e {
            if self.variational_cov_factor[(i, i)] <= 0.0 {
                return Err(Error::Validation(
                    "variational covariance factor needs a positive diagonal".into(),
                ));
            }
            for j in (i + 1)..l_e {
                if self.variational_cov_factor[(i, j)] != 0.0 {
                    return Err(Error::Validation(
                        "variational covariance factor must be lower triangular".into(),
                    ));
                }
            }
        }
        if self.inducing_inputs.iter().any(|z| !z.is_finite())
            || !self.target_offset.is_finite()
        {
            return Err(Error::Validation("model contains non-finite values".into()));
        }
        Ok(())
    }

    /// Cholesky factor of `K(Z, Z) + noise_var * I` (jitter included).
    fn smoothing_cholesky(&self) -> Result<Cholesky<f64, Dyn>> {
        let mut a = kernel_gram(&self.inducing_inputs, &self.kernel);
        for i in 0..a.nrows() {
            a[(i, i)] += self.noise_var;
        }
        Cholesky::new(a).ok_or_else(|| {
            Error::Numerical(
                "inducing self-covariance plus noise is not positive definite".into(),
            )
        })
    }

    /// Predictive Student-t posterior at a single query input.
    ///
    /// The location is `offset + k*ᵀ A⁻¹ m` with `A = K(Z,Z) + noise_var·I`;
    /// the raw spread is `k(x*,x*) − k*ᵀ A⁻¹ k* + (A⁻¹k*)ᵀ S (A⁻¹k*)`, scaled
    /// by `(nu + mᵀA⁻¹m − 2) / (nu + L_E − 2)`; the tail weight grows to
    /// `nu + L_E`.
    pub fn sparse_conditional(&self, x_star: f64) -> Result<StudentTPosterior> {
        self.predictor()?.posterior(x_star)
    }

    /// Builds the cached predictor for repeated queries.
    ///
    /// [`Predictor::posterior`] matches [`Self::sparse_conditional`] exactly;
    /// the cache turns per-query cost from cubic in the inducing count into
    /// quadratic (and linear for mean-only queries).
    pub fn predictor(&self) -> Result<Predictor> {
        self.validate()?;
        let l_e = self.n_inducing();
        let chol = self.smoothing_cholesky()?;
        let w = chol.solve(&self.variational_mean);
        let eta = self.variational_mean.dot(&w);
        // B = A^{-1} - A^{-1} S A^{-1}, so the raw spread is kss - k*ᵀ B k*.
        let a_inv = chol.inverse();
        let u = &a_inv * &self.variational_cov_factor; // A^{-1} C
        let b = &a_inv - &u * u.transpose();
        let t_factor = (self.nu + eta - 2.0) / (self.nu + l_e as f64 - 2.0);
        Ok(Predictor {
            inducing_inputs: self.inducing_inputs.clone(),
            kernel: self.kernel.clone(),
            nu_out: self.nu + l_e as f64,
            target_offset: self.target_offset,
            w,
            b,
            t_factor,
            scale_floor: self.kernel.jitter * 1e-6,
        })
    }
}

/// Precomputed query structure for one [`SptprModel`].
#[derive(Debug, Clone)]
pub struct Predictor {
    inducing_inputs: Vec<f64>,
    kernel: KernelParams,
    nu_out: f64,
    target_offset: f64,
    /// `A⁻¹ m`.
    w: DVector<f64>,
    /// `A⁻¹ − A⁻¹ S A⁻¹`.
    b: DMatrix<f64>,
    /// `(nu + η − 2) / (nu + L_E − 2)` with `η = mᵀ A⁻¹ m`.
    t_factor: f64,
    scale_floor: f64,
}

impl Predictor {
    /// Posterior tail weight (input tail weight plus inducing count).
    pub fn nu_out(&self) -> f64 {
        self.nu_out
    }

    fn cross_kernel(&self, x_star: f64) -> DVector<f64> {
        DVector::from_fn(self.inducing_inputs.len(), |i, _| {
            kernel_eval(x_star, self.inducing_inputs[i], &self.kernel)
        })
    }

    /// Predictive mean only; linear in the inducing count.
    pub fn predict_mean(&self, x_star: f64) -> f64 {
        self.target_offset + self.cross_kernel(x_star).dot(&self.w)
    }

    /// Full predictive Student-t posterior.
    pub fn posterior(&self, x_star: f64) -> Result<StudentTPosterior> {
        if !x_star.is_finite() {
            return Err(Error::Contract(format!(
                "query input must be finite, got {x_star}"
            )));
        }
        let ks = self.cross_kernel(x_star);
        let mean = self.target_offset + ks.dot(&self.w);
        let raw = self.kernel.variance - ks.dot(&(&self.b * &ks));
        // Exact cancellation can dip raw spread a hair below zero when the
        // query coincides with an inducing input at tiny noise; clamp to a
        // floor tied to the jitter so the posterior stays usable.
        let raw = raw.max(self.scale_floor);
        let scale = raw * self.t_factor;
        if !(mean.is_finite() && scale.is_finite() && scale > 0.0) {
            return Err(Error::Numerical(format!(
                "posterior degenerated at x* = {x_star} (mean {mean}, scale {scale})"
            )));
        }
        Ok(StudentTPosterior {
            mean,
            scale,
            nu: self.nu_out,
        })
    }
}

/// Current on-disk model format version.
const MODEL_FORMAT_VERSION: u32 = 1;

/// Versioned wrapper stored on disk.
#[derive(Debug, Serialize, Deserialize)]
struct ModelFile {
    format_version: u32,
    model: SptprModel,
}

/// Saves a model to a self-describing versioned JSON file.
///
/// Serialization is deterministic: saving the same model twice produces
/// byte-identical files, and loading restores every parameter exactly.
pub fn save_model(model: &SptprModel, path: &Path) -> Result<()> {
    model.validate()?;
    let wrapper = ModelFile {
        format_version: MODEL_FORMAT_VERSION,
        model: model.clone(),
    };
    let body = serde_json::to_string_pretty(&wrapper)?;
    fs::write(path, body).map_err(|e| {
        Error::Io(format!("cannot write model file {}: {e}", path.display()))
    })
}

/// Loads a model saved by [`save_model`], rejecting unknown format versions.
pub fn load_model(path: &Path) -> Result<SptprModel> {
    let body = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read model file {}: {e}", path.display())))?;
    let wrapper: ModelFile = serde_json::from_str(&body)
        .map_err(|e| Error::Io(format!("malformed model file {}: {e}", path.display())))?;
    if wrapper.format_version != MODEL_FORMAT_VERSION {
        return Err(Error::Io(format!(
            "unsupported model format version {} in {}",
            wrapper.format_version,
            path.display()
        )));
    }
    wrapper.model.validate()?;
    Ok(wrapper.model)
}
