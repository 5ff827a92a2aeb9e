use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twohilb::hstar::{BlockMorphism, ObjectExpr, SpaceTable};
use twohilb::linalg::{self, CMat};

/// A space with the given weights and three random objects over it.
fn setup(weights: &[f64], mults: &[[usize; 3]]) -> (Arc<SpaceTable>, [ObjectExpr; 3]) {
    let space = SpaceTable::numbered(weights).unwrap().into_arc();
    let obj =
        |k: usize| ObjectExpr::new(space.clone(), mults.iter().map(|m| m[k]).collect()).unwrap();
    (space.clone(), [obj(0), obj(1), obj(2)])
}

fn random(rng: &mut ChaCha8Rng, x: &ObjectExpr, y: &ObjectExpr) -> BlockMorphism {
    let blocks = x
        .mult()
        .iter()
        .zip(y.mult())
        .map(|(&m, &n)| linalg::random_matrix(rng, n, m))
        .collect();
    BlockMorphism::new(x.clone(), y.clone(), blocks).unwrap()
}

/// The full matrix of a block morphism, simples stacked in order.
fn dense(f: &BlockMorphism) -> CMat {
    linalg::block_diag(f.blocks())
}

fn space_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<[usize; 3]>, u64)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            prop::collection::vec(0.2f64..5.0, n),
            prop::collection::vec(prop::array::uniform3(0usize..=3), n),
            any::<u64>(),
        )
    })
}

proptest! {
    #[test]
    fn inner_product_adjunction_identities((weights, mults, seed) in space_strategy()) {
        let (_, [x, y, z]) = setup(&weights, &mults);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random(&mut rng, &x, &y);
        let f = random(&mut rng, &y, &z);
        let h = random(&mut rng, &x, &z);
        let fg = g.compose(&f).unwrap();
        let lhs = fg.inner_product(&h).unwrap();
        let mid = g.inner_product(&h.compose(&f.star()).unwrap()).unwrap();
        let rhs = f.inner_product(&g.star().compose(&h).unwrap()).unwrap();
        let scale = 1.0 + lhs.norm();
        prop_assert!((lhs - mid).norm() < 1e-10 * scale);
        prop_assert!((lhs - rhs).norm() < 1e-10 * scale);
    }

    #[test]
    fn star_is_an_antiunitary_involution((weights, mults, seed) in space_strategy()) {
        let (_, [x, y, _]) = setup(&weights, &mults);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random(&mut rng, &x, &y);
        let b = random(&mut rng, &x, &y);
        let ab = a.inner_product(&b).unwrap();
        let stars = a.star().inner_product(&b.star()).unwrap();
        prop_assert!((stars - ab.conj()).norm() < 1e-10 * (1.0 + ab.norm()));
        prop_assert_eq!(a.star().star().deviation(&a), 0.0);
    }

    #[test]
    fn star_reverses_composition((weights, mults, seed) in space_strategy()) {
        let (_, [x, y, z]) = setup(&weights, &mults);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random(&mut rng, &x, &y);
        let f = random(&mut rng, &y, &z);
        let lhs = g.compose(&f).unwrap().star();
        let rhs = f.star().compose(&g.star()).unwrap();
        prop_assert!(lhs.deviation(&rhs) < 1e-12);
    }

    #[test]
    fn compose_matches_block_diagonal_product((weights, mults, seed) in space_strategy()) {
        let (_, [x, y, z]) = setup(&weights, &mults);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random(&mut rng, &x, &y);
        let f = random(&mut rng, &y, &z);
        let composite = dense(&g.compose(&f).unwrap());
        let oracle = dense(&f) * dense(&g);
        prop_assert_eq!(composite.shape(), oracle.shape());
        prop_assert!(linalg::deviation(&composite, &oracle) < 1e-12);
    }

    #[test]
    fn composition_is_associative_and_unital((weights, mults, seed) in space_strategy()) {
        let (_, [x, y, z]) = setup(&weights, &mults);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random(&mut rng, &x, &y);
        let b = random(&mut rng, &y, &z);
        let c = random(&mut rng, &z, &x);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(left.deviation(&right) < 1e-12);
        let unital = BlockMorphism::identity(&x).compose(&a).unwrap().compose(&BlockMorphism::identity(&y)).unwrap();
        prop_assert_eq!(unital.deviation(&a), 0.0);
    }

    #[test]
    fn norm_is_weighted_frobenius((weights, mults, seed) in space_strategy()) {
        // oracle: Σ_λ k_λ ‖f_λ‖²_F summed entry by entry
        let (space, [x, y, _]) = setup(&weights, &mults);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random(&mut rng, &x, &y);
        let expected: f64 = f
            .blocks()
            .iter()
            .zip(space.weights())
            .map(|(b, k)| k * b.iter().map(|z| z.norm_sqr()).sum::<f64>())
            .sum();
        prop_assert!((f.norm().powi(2) - expected).abs() < 1e-10 * (1.0 + expected));
    }
}
