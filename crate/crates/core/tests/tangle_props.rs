use proptest::prelude::*;
use twohilb::linalg::{self, CMat};
use twohilb::rep::{RepCategory, RepObject};
use twohilb::tangle::moves::{ANTI_TWIST, TWIST};
use twohilb::tangle::{parse, EvalContext};

/// Closed-form-free leaves typed `(+) → (+)`.
const STRAND: &[&str] = &[
    "id+",
    TWIST,
    ANTI_TWIST,
    "coev | id+ ; id+ | ev",
    "id+ | ev* ; coev* | id+",
];
/// Leaves typed `(+,+) → (+,+)`.
const PAIR: &[&str] = &["b++", "B++", "id+ | id+", "b++ ; b++", "B++ ; b++ ; B++"];

/// A well-typed tangle tree: one strand or a pair of strands.
#[derive(Debug, Clone)]
enum Tree {
    Leaf(&'static str),
    Seq(Box<Tree>, Box<Tree>),
    Par(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn text(&self) -> String {
        match self {
            Tree::Leaf(s) => format!("({s})"),
            Tree::Seq(a, b) => format!("({} ; {})", a.text(), b.text()),
            Tree::Par(a, b) => format!("({} | {})", a.text(), b.text()),
        }
    }

    fn net_twists(&self) -> i32 {
        match self {
            Tree::Leaf(s) if *s == TWIST => 1,
            Tree::Leaf(s) if *s == ANTI_TWIST => -1,
            Tree::Leaf(_) => 0,
            Tree::Seq(a, b) | Tree::Par(a, b) => a.net_twists() + b.net_twists(),
        }
    }

    /// Oracle: evaluates leaves alone and assembles them with matrix
    /// products (diagrammatic order) and Kronecker products.
    fn assemble(&self, ctx: &EvalContext) -> CMat {
        match self {
            Tree::Leaf(s) => ctx.evaluate(&parse(s).unwrap()).unwrap(),
            Tree::Seq(a, b) => b.assemble(ctx) * a.assemble(ctx),
            Tree::Par(a, b) => linalg::kron(&a.assemble(ctx), &b.assemble(ctx)),
        }
    }
}

fn strand() -> impl Strategy<Value = Tree> {
    let leaf = prop::sample::select(STRAND).prop_map(Tree::Leaf);
    leaf.prop_recursive(3, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Tree::Seq(Box::new(a), Box::new(b)))
    })
}

fn pair() -> impl Strategy<Value = Tree> {
    let leaf = prop_oneof![
        prop::sample::select(PAIR).prop_map(Tree::Leaf),
        (strand(), strand()).prop_map(|(a, b)| Tree::Par(Box::new(a), Box::new(b))),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Seq(Box::new(a), Box::new(b))),
            (strand(), strand()).prop_map(|(a, b)| Tree::Par(Box::new(a), Box::new(b))),
        ]
    })
}

fn context(group: &str, irrep: &str, ambient: u8) -> EvalContext {
    let cat = RepCategory::catalog(group, 0).unwrap();
    let x = RepObject::irrep_named(&cat, irrep).unwrap();
    EvalContext::for_object(&x, ambient).unwrap()
}

fn object() -> impl Strategy<Value = (&'static str, &'static str)> {
    prop::sample::select(vec![
        ("S3", "std"),
        ("Q8", "std"),
        ("SuperHilb", "odd"),
        ("Z3", "chi1"),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_functorial(tree in pair(), (g, x) in object()) {
        let ctx = context(g, x, 3);
        let t = parse(&tree.text()).unwrap();
        let direct = ctx.evaluate(&t).unwrap();
        let oracle = tree.assemble(&ctx);
        prop_assert!(linalg::deviation(&direct, &oracle) < 1e-9);
    }

    #[test]
    fn printing_round_trips(tree in pair(), (g, x) in object()) {
        let ctx = context(g, x, 3);
        let t = parse(&tree.text()).unwrap();
        let again = parse(&t.to_string()).unwrap();
        prop_assert_eq!(&again.src, &t.src);
        prop_assert_eq!(&again.tgt, &t.tgt);
        prop_assert!(linalg::deviation(&ctx.evaluate(&t).unwrap(), &ctx.evaluate(&again).unwrap()) < 1e-12);
    }

    #[test]
    fn interchange_law(a in strand(), b in strand(), c in strand(), d in strand(), (g, x) in object()) {
        let ctx = context(g, x, 3);
        let lhs = format!("({} | {}) ; ({} | {})", a.text(), b.text(), c.text(), d.text());
        let rhs = format!("({} ; {}) | ({} ; {})", a.text(), c.text(), b.text(), d.text());
        let l = ctx.evaluate(&parse(&lhs).unwrap()).unwrap();
        let r = ctx.evaluate(&parse(&rhs).unwrap()).unwrap();
        prop_assert!(linalg::deviation(&l, &r) < 1e-9);
    }

    #[test]
    fn strands_are_powers_of_the_balancing(tree in strand(), (g, x) in object()) {
        // oracle: isotopy relative to the framing leaves b^(twists − anti-twists)
        let ctx = context(g, x, 3);
        let m = ctx.evaluate(&parse(&tree.text()).unwrap()).unwrap();
        let b = ctx.adjunction().balancing();
        let net = tree.net_twists();
        let step = if net >= 0 { b.clone() } else { b.try_inverse().unwrap() };
        let expected = (0..net.unsigned_abs()).fold(linalg::identity(m.nrows()), |acc, _| acc * &step);
        prop_assert!(linalg::deviation(&m, &expected) < 1e-9);
    }
}
