//! Convolution categories `Hilb[G]`, the Fourier transform for abelian
//! groups, Gelfand transforms over spectrum points, and Tannaka
//! reconstruction at finite scale.

pub mod fourier;
pub mod gelfand;
pub mod graded;
pub mod tannaka;

pub use fourier::{
    bosonization_compatible, dual_group, DualGroup, Fourier, MonoidalReport, Transformed,
};
pub use gelfand::{
    full_faithfulness, gelfand_hat, hat_homomorphism, GelfandHat, HatReport, PointReport,
    SpectrumPoint,
};
pub use graded::GradedObject;
pub use tannaka::{check_injection, reconstruct_abelian, AbelianReconstruction, InjectionCheck};
