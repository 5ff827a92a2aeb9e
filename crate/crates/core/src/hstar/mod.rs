//! Skeletal 2-Hilbert spaces and the H*-category of block morphisms.

mod algebra;
mod morphism;
mod space;

pub use algebra::{AmbroseBlock, AmbroseDecomposition, HStarAlgebraData};
pub use morphism::{direct_sum, direct_sum_many, scalar_tensor, BlockMorphism, DirectSum};
pub use space::{ObjectExpr, SpaceTable};
