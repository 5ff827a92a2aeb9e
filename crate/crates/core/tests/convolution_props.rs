use proptest::prelude::*;
use twohilb::linalg;
use twohilb::rep::{catalog, FiniteGroup};
use twohilb::transforms::GradedObject;

fn group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (2usize..=6).prop_map(|n| catalog::cyclic(n).unwrap()),
        Just(catalog::klein()),
        Just(catalog::symmetric(3).unwrap()),
    ]
}

fn graded(g: &FiniteGroup) -> impl Strategy<Value = GradedObject> {
    let g = g.clone();
    prop::collection::vec(0usize..=2, g.order())
        .prop_map(move |f| GradedObject::new(g.clone(), f).unwrap())
}

fn triple() -> impl Strategy<Value = (GradedObject, GradedObject, GradedObject)> {
    group().prop_flat_map(|g| (graded(&g), graded(&g), graded(&g)))
}

proptest! {
    #[test]
    fn convolution_is_associative((x, y, z) in triple()) {
        let left = x.convolution_tensor(&y).unwrap().convolution_tensor(&z).unwrap();
        let right = x.convolution_tensor(&y.convolution_tensor(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn unit_is_two_sided((x, _, _) in triple()) {
        let e = GradedObject::unit(x.group());
        prop_assert_eq!(e.convolution_tensor(&x).unwrap(), x.clone());
        prop_assert_eq!(x.convolution_tensor(&e).unwrap(), x);
    }

    #[test]
    fn fibers_follow_the_product((x, y, _) in triple()) {
        // oracle: count pairs (a, b) with ab = g directly from the table
        let g = x.group().clone();
        let xy = x.convolution_tensor(&y).unwrap();
        for target in 0..g.order() {
            let mut n = 0;
            for a in 0..g.order() {
                for b in 0..g.order() {
                    if g.table()[a][b] == target {
                        n += x.fiber(a) * y.fiber(b);
                    }
                }
            }
            prop_assert_eq!(xy.fiber(target), n);
        }
        prop_assert_eq!(xy.dim(), x.dim() * y.dim());
    }

    #[test]
    fn coordinates_are_a_degree_preserving_permutation((x, y, _) in triple()) {
        let p = x.convolution_coordinates(&y).unwrap();
        prop_assert!(linalg::unitarity_defect(&p) < 1e-15);
        // degree of the Kronecker coordinate (i, j) is deg(i)·deg(j)
        let xy = x.convolution_tensor(&y).unwrap();
        let (dx, dy, dxy) = (x.degrees(), y.degrees(), xy.degrees());
        for (i, &a) in dx.iter().enumerate() {
            for (j, &b) in dy.iter().enumerate() {
                let col = i * dy.len() + j;
                let row = (0..p.nrows()).find(|&r| p[(r, col)].norm() > 0.5).unwrap();
                prop_assert_eq!(dxy[row], x.group().mul(a, b));
            }
        }
    }

    #[test]
    fn abelian_braiding_is_involutive((x, y, _) in triple()) {
        prop_assume!(x.group().is_abelian());
        let bxy = x.braiding(&y).unwrap();
        let byx = y.braiding(&x).unwrap();
        let xy = x.convolution_tensor(&y).unwrap();
        prop_assert!(linalg::deviation(&(byx * &bxy), &linalg::identity(xy.dim())) < 1e-15);
        prop_assert!(GradedObject::grading_defect(&xy, &y.convolution_tensor(&x).unwrap(), &bxy) < 1e-15);
    }
}
