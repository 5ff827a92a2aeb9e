//! The 2-categorical layer: functors between 2-Hilbert spaces as integer
//! matrices, natural transformations, adjoints, hom-spaces and tensor products.

mod functor;
mod spaces;

pub use functor::{
    adjoint_duality_holds, adjunction_data, associator, equivalence, hom_dim, triangle_defect,
    Equivalence, FusionFunctor, NatBlock,
};
pub use spaces::{
    braiding, braiding_natural, dual_basis_functor, dual_space, hom_space, hom_tensor_dims,
    involutor_holds, riesz_represent, tensor_functors, tensor_space, tensorator, HomSpace,
    TensorSpace, Tensorator,
};
