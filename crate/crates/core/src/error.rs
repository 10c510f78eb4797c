use thiserror::Error;

/// Errors raised by the simulation library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    #[error("bracket [{lo}, {hi}] does not straddle a root: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("mode {mode} carries amplitude {found_re}{found_im:+}i, expected ±{expected_re}{expected_im:+}i")]
    AmplitudeMismatch {
        mode: char,
        found_re: f64,
        found_im: f64,
        expected_re: f64,
        expected_im: f64,
    },

    #[error("state corrupted: outcome probabilities sum to {0}")]
    Normalization(f64),

    #[error("imaginary residue {0:e} in an outcome probability")]
    ImaginaryResidue(f64),

    #[error("helper {helper} is not finite at theta = {theta}")]
    HelperOverflow { helper: &'static str, theta: f64 },

    #[error("quadrature not converged: order {order} gave {value}, order {next_order} gave {next_value}")]
    QuadratureNotConverged {
        order: usize,
        value: f64,
        next_order: usize,
        next_value: f64,
    },

    #[error("Fock truncation at N_max = {n_max} leaves coherent tail {tail:e} (limit 1e-12)")]
    Truncation { n_max: usize, tail: f64 },

    #[error("optimized |B| is not monotone in eta2 on the pre-scan {scan:?}")]
    NotMonotone { scan: Vec<(f64, f64)> },

    #[error("correlation failed at (theta_a, theta_b) = ({theta_a}, {theta_b}): {source}")]
    AtAngles {
        theta_a: f64,
        theta_b: f64,
        source: Box<Error>,
    },

    #[error("{engine} engine unavailable for {family}: {reason}")]
    EngineUnavailable {
        engine: &'static str,
        family: &'static str,
        reason: &'static str,
    },

    #[error("correlation is not a bilinear trigonometric form in the angles (residual {0:e})")]
    NotBilinear(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if value.is_finite() && (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value, min, max })
    }
}
