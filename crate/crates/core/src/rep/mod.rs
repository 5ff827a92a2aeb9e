//! Representation categories of finite groups, supergroups and groupoids.

pub mod adjunction;
pub mod catalog;
pub mod group;
pub mod groupoid;
pub mod homomorphism;
pub mod irreps;
pub mod object;
pub mod selfdual;
pub mod symmetrizer;

pub use adjunction::{balancing, invertibility_check, Adjunction};
pub use group::{FiniteGroup, FiniteSuperGroup};
pub use groupoid::{FiniteGroupoid, GroupoidComponent, GroupoidRep, RepGroupoid};
pub use homomorphism::{FunctorCheck, Restriction};
pub use irreps::{BraidingMode, RepCategory, UnitaryIrrep};
pub use object::{braiding, koszul_sign, Decomposition, IsotypicPart, RepObject};
pub use selfdual::{classify_self_dual, frobenius_schur, SelfDuality, SelfDualityReport};
pub use symmetrizer::{symmetrizer_power, symmetrizer_projections, Symmetrizers};
