//! Scenario catalog: the wavefunction families the engine knows in closed
//! form, together with their physical parameters and derived constants.
//!
//! Every scenario is a solution of the one-dimensional Schrödinger equation
//! iħ ∂Ψ/∂t = -(ħ²/2m) ∂²Ψ/∂x² + VΨ, evaluated by analytic continuation at
//! complex position x. Units are configurable through [`PhysicalConstants`];
//! the default ħ = m = 1 is used throughout the tests.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point x = x_r + i·x_i in the complex position plane.
///
/// Trajectories of the velocity field ẋ = (ħ/im)(1/Ψ)∂Ψ/∂x live in this
/// plane; the observable ("physical") coordinate is the real part.
pub type ComplexPosition = Complex64;

/// ħ and m in whatever unit system the caller works in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub mass: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self { hbar: 1.0, mass: 1.0 }
    }
}

impl PhysicalConstants {
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::ParameterDomain {
                name: "hbar",
                reason: format!("must be finite and > 0, got {hbar}"),
            });
        }
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::ParameterDomain {
                name: "mass",
                reason: format!("must be finite and > 0, got {mass}"),
            });
        }
        Ok(Self { hbar, mass })
    }
}

/// The wavefunction family, with its family-specific parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WaveKind {
    /// Eigenstate n ∈ {0, 1, 2} of the harmonic oscillator with inverse
    /// length scale α (α² = mω₀/ħ, so ω₀ = ħα²/m).
    HarmonicOscillator { alpha: f64, n: u8 },
    /// Ψ = A e^{ikx} e^{-iEt/ħ} with E = ħ²k²/2m.
    PlaneWave { k: f64, amplitude_re: f64, amplitude_im: f64 },
    /// Scattering off V(x) = V₀·θ(x_r) in the transmission regime E > V₀ > 0.
    /// Region I (x_r < 0): e^{ikx} + R e^{-ikx}; region II: T e^{iqx}.
    PotentialStep { energy: f64, v0: f64 },
    /// Spreading Gaussian packet with initial width σ and mean wavenumber k̄.
    GaussianPacket { sigma: f64, kbar: f64 },
}

/// A fully specified physical situation: unit constants plus wave family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub constants: PhysicalConstants,
    #[serde(flatten)]
    pub kind: WaveKind,
}

impl Scenario {
    /// Harmonic oscillator eigenstate with default ħ = m = 1.
    pub fn harmonic_oscillator(alpha: f64, n: u8) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::ParameterDomain {
                name: "alpha",
                reason: format!("must be finite and > 0, got {alpha}"),
            });
        }
        if n > 2 {
            return Err(Error::ParameterDomain {
                name: "n",
                reason: format!("quantum number must be 0, 1 or 2, got {n}"),
            });
        }
        Ok(Self {
            constants: PhysicalConstants::default(),
            kind: WaveKind::HarmonicOscillator { alpha, n },
        })
    }

    /// Plane wave A e^{ikx} with default constants.
    pub fn plane_wave(k: f64, amplitude: Complex64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::ParameterDomain {
                name: "k",
                reason: format!("must be finite, got {k}"),
            });
        }
        if amplitude == Complex64::new(0.0, 0.0) || !amplitude.is_finite() {
            return Err(Error::ParameterDomain {
                name: "amplitude",
                reason: format!("must be finite and nonzero, got {amplitude}"),
            });
        }
        Ok(Self {
            constants: PhysicalConstants::default(),
            kind: WaveKind::PlaneWave {
                k,
                amplitude_re: amplitude.re,
                amplitude_im: amplitude.im,
            },
        })
    }

    /// Potential step in the transmission regime E > V₀ > 0.
    pub fn potential_step(energy: f64, v0: f64) -> Result<Self> {
        if !(v0 > 0.0) || !v0.is_finite() {
            return Err(Error::ParameterDomain {
                name: "v0",
                reason: format!("step height must be finite and > 0, got {v0}"),
            });
        }
        if !(energy > v0) || !energy.is_finite() {
            return Err(Error::ParameterDomain {
                name: "energy",
                reason: format!("transmission regime requires E > V0, got E = {energy}, V0 = {v0}"),
            });
        }
        Ok(Self {
            constants: PhysicalConstants::default(),
            kind: WaveKind::PotentialStep { energy, v0 },
        })
    }

    /// Gaussian packet with initial width σ > 0 and real mean wavenumber k̄.
    pub fn gaussian_packet(sigma: f64, kbar: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::ParameterDomain {
                name: "sigma",
                reason: format!("must be finite and > 0, got {sigma}"),
            });
        }
        if !kbar.is_finite() {
            return Err(Error::ParameterDomain {
                name: "kbar",
                reason: format!("must be finite, got {kbar}"),
            });
        }
        Ok(Self {
            constants: PhysicalConstants::default(),
            kind: WaveKind::GaussianPacket { sigma, kbar },
        })
    }

    pub fn with_constants(mut self, constants: PhysicalConstants) -> Self {
        self.constants = constants;
        self
    }

    /// Validate an already-built scenario (e.g. one deserialized from a
    /// config file). Returns the first violated parameter constraint.
    pub fn validate(&self) -> Result<()> {
        PhysicalConstants::new(self.constants.hbar, self.constants.mass)?;
        match self.kind {
            WaveKind::HarmonicOscillator { alpha, n } => {
                Self::harmonic_oscillator(alpha, n).map(|_| ())
            }
            WaveKind::PlaneWave { k, amplitude_re, amplitude_im } => {
                Self::plane_wave(k, Complex64::new(amplitude_re, amplitude_im)).map(|_| ())
            }
            WaveKind::PotentialStep { energy, v0 } => {
                Self::potential_step(energy, v0).map(|_| ())
            }
            WaveKind::GaussianPacket { sigma, kbar } => {
                Self::gaussian_packet(sigma, kbar).map(|_| ())
            }
        }
    }

    /// Whether |Ψ|² has unit integral over the real axis (Born sampling
    /// is only defined for these).
    pub fn is_normalizable(&self) -> bool {
        matches!(
            self.kind,
            WaveKind::HarmonicOscillator { .. } | WaveKind::GaussianPacket { .. }
        )
    }

    /// Plane-wave amplitude as a complex number.
    pub(crate) fn plane_wave_amplitude(&self) -> Complex64 {
        match self.kind {
            WaveKind::PlaneWave { amplitude_re, amplitude_im, .. } => {
                Complex64::new(amplitude_re, amplitude_im)
            }
            _ => unreachable!("not a plane wave"),
        }
    }

    /// Oscillator angular frequency ω₀ = ħα²/m.
    pub fn omega0(&self) -> Option<f64> {
        match self.kind {
            WaveKind::HarmonicOscillator { alpha, .. } => {
                Some(self.constants.hbar * alpha * alpha / self.constants.mass)
            }
            _ => None,
        }
    }

    /// Total energy of the stationary scenarios; `None` for the packet.
    pub fn energy(&self) -> Option<f64> {
        let PhysicalConstants { hbar, mass } = self.constants;
        match self.kind {
            WaveKind::HarmonicOscillator { alpha, n } => {
                let omega0 = hbar * alpha * alpha / mass;
                Some((f64::from(n) + 0.5) * hbar * omega0)
            }
            WaveKind::PlaneWave { k, .. } => Some(hbar * hbar * k * k / (2.0 * mass)),
            WaveKind::PotentialStep { energy, .. } => Some(energy),
            WaveKind::GaussianPacket { .. } => None,
        }
    }

    /// Step wavenumbers (k, q) with k = √(2mE)/ħ and q = √(2m(E−V₀))/ħ.
    pub fn step_wavenumbers(&self) -> Option<(f64, f64)> {
        match self.kind {
            WaveKind::PotentialStep { energy, v0 } => {
                let PhysicalConstants { hbar, mass } = self.constants;
                let k = (2.0 * mass * energy).sqrt() / hbar;
                let q = (2.0 * mass * (energy - v0)).sqrt() / hbar;
                Some((k, q))
            }
            _ => None,
        }
    }

    /// Reflection and transmission amplitudes (R, T) from continuity of
    /// ψ and ψ′ at x = 0: R = (k−q)/(k+q), T = 2k/(k+q).
    pub fn step_amplitudes(&self) -> Option<(f64, f64)> {
        self.step_wavenumbers().map(|(k, q)| ((k - q) / (k + q), 2.0 * k / (k + q)))
    }

    /// Complex packet width parameter s(t) = σ² + iħt/m.
    pub(crate) fn packet_s(&self, t: f64) -> Complex64 {
        match self.kind {
            WaveKind::GaussianPacket { sigma, .. } => Complex64::new(
                sigma * sigma,
                self.constants.hbar * t / self.constants.mass,
            ),
            _ => unreachable!("not a packet"),
        }
    }

    /// Standard deviation of the real-axis Born density at time t.
    /// HO: √((n+½))/α; packet: √((σ⁴ + (ħt/m)²)/(2σ²)).
    pub fn density_std(&self, t: f64) -> Option<f64> {
        match self.kind {
            WaveKind::HarmonicOscillator { alpha, n } => {
                Some((f64::from(n) + 0.5).sqrt() / alpha)
            }
            WaveKind::GaussianPacket { sigma, .. } => {
                let tau = self.constants.hbar * t / self.constants.mass;
                Some(((sigma.powi(4) + tau * tau) / (2.0 * sigma * sigma)).sqrt())
            }
            _ => None,
        }
    }

    /// Mean of the real-axis Born density at time t (normalizable scenarios).
    pub fn density_mean(&self, t: f64) -> Option<f64> {
        match self.kind {
            WaveKind::HarmonicOscillator { .. } => Some(0.0),
            WaveKind::GaussianPacket { kbar, .. } => {
                Some(self.constants.hbar * kbar * t / self.constants.mass)
            }
            _ => None,
        }
    }

    /// Interval [lo, hi] outside which the Born density is negligible
    /// (≥ 10 standard deviations), used for quadrature and CDF tables.
    pub fn sampling_domain(&self, t: f64) -> Option<(f64, f64)> {
        let mean = self.density_mean(t)?;
        let std = self.density_std(t)?;
        Some((mean - 10.0 * std, mean + 10.0 * std))
    }

    /// Short tag used in exports and reports.
    pub fn label(&self) -> String {
        match self.kind {
            WaveKind::HarmonicOscillator { alpha, n } => format!("ho_n{n}_alpha{alpha}"),
            WaveKind::PlaneWave { k, .. } => format!("plane_wave_k{k}"),
            WaveKind::PotentialStep { energy, v0 } => format!("step_E{energy}_V0{v0}"),
            WaveKind::GaussianPacket { sigma, kbar } => {
                format!("packet_sigma{sigma}_kbar{kbar}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(Scenario::harmonic_oscillator(0.0, 0).is_err());
        assert!(Scenario::harmonic_oscillator(1.0, 3).is_err());
        assert!(Scenario::plane_wave(1.0, Complex64::new(0.0, 0.0)).is_err());
        assert!(Scenario::potential_step(0.5, 0.5).is_err());
        assert!(Scenario::potential_step(0.5, -1.0).is_err());
        assert!(Scenario::gaussian_packet(-1.0, 0.0).is_err());
        assert!(PhysicalConstants::new(0.0, 1.0).is_err());
    }

    #[test]
    fn derived_constants() {
        let s = Scenario::harmonic_oscillator(2.0, 1).unwrap();
        assert_eq!(s.omega0(), Some(4.0));
        assert_eq!(s.energy(), Some(6.0)); // (1 + 1/2)·ħω₀ = 1.5·4

        let step = Scenario::potential_step(0.5, 0.375).unwrap();
        let (k, q) = step.step_wavenumbers().unwrap();
        assert!((k - 1.0).abs() < 1e-15);
        assert!((q - 0.5).abs() < 1e-15);
        let (r, t) = step.step_amplitudes().unwrap();
        assert!((r - 1.0 / 3.0).abs() < 1e-15);
        assert!((t - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn normalizability() {
        assert!(Scenario::harmonic_oscillator(1.0, 2).unwrap().is_normalizable());
        assert!(Scenario::gaussian_packet(1.0, 1.0).unwrap().is_normalizable());
        assert!(!Scenario::plane_wave(1.0, Complex64::new(1.0, 0.0))
            .unwrap()
            .is_normalizable());
        assert!(!Scenario::potential_step(1.0, 0.5).unwrap().is_normalizable());
    }
}
