//! Reconstruction of a finite group from the unitary monoidal
//! self-transformations of the forgetful functor on `Rep(G)`.

use std::sync::Arc;

use serde::Serialize;

use super::fourier::dual_group;
use crate::error::Result;
use crate::linalg::{self, CMat, C64};
use crate::rep::{FiniteGroup, RepCategory, RepObject};

#[derive(Debug, Clone, Serialize)]
pub struct AbelianReconstruction {
    pub order: usize,
    pub cyclic: bool,
    /// Whether `t ↦ (λ ↦ χ_λ(t))` is a group isomorphism onto the result.
    pub evaluation_is_isomorphism: bool,
    #[serde(skip)]
    pub group: FiniteGroup,
    /// `transformations[k][λ]`: the scalar of transformation `k` on irrep `λ`.
    #[serde(skip)]
    pub transformations: Vec<Vec<C64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectionCheck {
    pub group_order: usize,
    pub distinct_images: usize,
    pub homomorphism_defect: f64,
    /// Compatibility of each image with the tensor decompositions of irreps.
    pub monoidal_defect: f64,
    pub injective: bool,
}

fn close(a: C64, b: C64) -> bool {
    (a - b).norm() < 1e-6
}

/// For abelian `G`: a monoidal unitary transformation of the forgetful
/// functor is a scalar `α_λ` per character with `α_{λμ} = α_λ α_μ`, i.e. a
/// homomorphism `Ĝ → U(1)`. All of them are enumerated by assigning roots of
/// unity on a generating set of `Ĝ` and closing multiplicatively.
pub fn reconstruct_abelian(cat: &RepCategory) -> Result<AbelianReconstruction> {
    let dual = dual_group(cat)?;
    let gh = &dual.group;
    let n = gh.order();
    // greedy generating set of Ĝ
    let mut gens = Vec::new();
    let mut span = vec![gh.identity()];
    for a in 0..n {
        if !span.contains(&a) {
            gens.push(a);
            span = closure(gh, &gens);
        }
    }
    let orders: Vec<usize> = gens.iter().map(|&g| gh.element_order(g)).collect();
    let mut transformations: Vec<Vec<C64>> = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(alpha) = extend(gh, &gens, &orders, &choice) {
            transformations.push(alpha);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return finish(cat, &dual.characters, transformations);
            }
            choice[k] += 1;
            if choice[k] < orders[k] {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut span = vec![g.identity()];
    let mut i = 0;
    while i < span.len() {
        for &s in gens {
            let next = g.mul(span[i], s);
            if !span.contains(&next) {
                span.push(next);
            }
        }
        i += 1;
    }
    span
}

/// The multiplicative extension of `gen_k ↦ exp(2πi choice_k / order_k)`,
/// or `None` if the assignment is inconsistent.
fn extend(g: &FiniteGroup, gens: &[usize], orders: &[usize], choice: &[usize]) -> Option<Vec<C64>> {
    let n = g.order();
    let mut alpha: Vec<Option<C64>> = vec![None; n];
    alpha[g.identity()] = Some(linalg::re(1.0));
    let mut queue = vec![g.identity()];
    while let Some(a) = queue.pop() {
        for (k, &s) in gens.iter().enumerate() {
            let phase = crate::rep::irreps::root_of_unity(choice[k] as i64, orders[k]);
            let value = alpha[a].expect("visited") * phase;
            let b = g.mul(a, s);
            match alpha[b] {
                Some(v) if !close(v, value) => return None,
                Some(_) => {}
                None => {
                    alpha[b] = Some(value);
                    queue.push(b);
                }
            }
        }
    }
    let alpha: Vec<C64> = alpha.into_iter().map(|v| v.expect("generated")).collect();
    let multiplicative =
        (0..n).all(|a| (0..n).all(|b| close(alpha[g.mul(a, b)], alpha[a] * alpha[b])));
    multiplicative.then_some(alpha)
}

fn finish(
    cat: &RepCategory,
    characters: &[Vec<C64>],
    transformations: Vec<Vec<C64>>,
) -> Result<AbelianReconstruction> {
    let m = transformations.len();
    let find = |v: &[C64]| {
        transformations
            .iter()
            .position(|t| t.iter().zip(v).all(|(a, b)| close(*a, *b)))
    };
    let mut table = vec![vec![0; m]; m];
    for a in 0..m {
        for b in 0..m {
            let prod: Vec<C64> = transformations[a]
                .iter()
                .zip(&transformations[b])
                .map(|(x, y)| x * y)
                .collect();
            table[a][b] = find(&prod)
                .ok_or_else(|| crate::Error::Numeric("transformations not closed".into()))?;
        }
    }
    let group = FiniteGroup::new(format!("U({})", cat.group().name()), table)?;
    // evaluation t ↦ (χ_λ(t))_λ
    let g = cat.group();
    let ev: Vec<Option<usize>> = (0..g.order())
        .map(|t| find(&characters.iter().map(|c| c[t]).collect::<Vec<_>>()))
        .collect();
    let evaluation_is_isomorphism = m == g.order() && ev.iter().all(Option::is_some) && {
        let phi: Vec<usize> = ev.iter().map(|v| v.expect("checked")).collect();
        let mut sorted = phi.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == m && g.is_homomorphism(&group, &phi)
    };
    Ok(AbelianReconstruction {
        order: m,
        cyclic: group.is_cyclic(),
        evaluation_is_isomorphism,
        group,
        transformations,
    })
}

/// For any `G`: `g ↦ (ρ_λ(g))_λ` is an injective homomorphism into the
/// unitary monoidal transformations of the forgetful functor.
pub fn check_injection(cat: &Arc<RepCategory>) -> Result<InjectionCheck> {
    let g = cat.group();
    let irreps = cat.irreps();
    let image = |a: usize| -> Vec<&CMat> { irreps.iter().map(|r| &r.matrices[a]).collect() };
    let mut homomorphism_defect = 0.0f64;
    for a in 0..g.order() {
        for b in 0..g.order() {
            for r in irreps {
                let lhs = &r.matrices[g.mul(a, b)];
                homomorphism_defect = homomorphism_defect
                    .max(linalg::deviation(lhs, &(&r.matrices[a] * &r.matrices[b])));
            }
        }
    }
    let mut distinct: Vec<usize> = Vec::new();
    for a in 0..g.order() {
        let is_new = distinct.iter().all(|&b| {
            image(a)
                .iter()
                .zip(image(b))
                .any(|(x, y)| linalg::deviation(x, y) > 1e-6)
        });
        if is_new {
            distinct.push(a);
        }
    }
    // naturality for the decomposition maps of every λ ⊗ μ
    let mut monoidal_defect = 0.0f64;
    for i in 0..irreps.len() {
        for j in 0..irreps.len() {
            let xy = RepObject::irrep(cat, i).tensor(&RepObject::irrep(cat, j))?;
            for part in xy.decompose().parts {
                if part.multiplicity == 0 {
                    continue;
                }
                for a in 0..g.order() {
                    let target = linalg::kron(
                        &linalg::identity(part.multiplicity),
                        &irreps[part.irrep].matrices[a],
                    );
                    let lhs = xy.matrix(a) * &part.embedding;
                    monoidal_defect =
                        monoidal_defect.max(linalg::deviation(&lhs, &(&part.embedding * target)));
                }
            }
        }
    }
    Ok(InjectionCheck {
        group_order: g.order(),
        distinct_images: distinct.len(),
        homomorphism_defect,
        monoidal_defect,
        injective: distinct.len() == g.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_klein() {
        for (name, order, cyclic) in [
            ("Z2", 2, true),
            ("Z3", 3, true),
            ("Z4", 4, true),
            ("Z2xZ2", 4, false),
            ("Z6", 6, true),
        ] {
            let cat = RepCategory::catalog(name, 0).unwrap();
            let r = reconstruct_abelian(&cat).unwrap();
            assert_eq!((r.order, r.cyclic), (order, cyclic), "{name}");
            assert!(r.evaluation_is_isomorphism, "{name}");
        }
    }

    #[test]
    fn s3_injects() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let r = check_injection(&cat).unwrap();
        assert_eq!(r.distinct_images, 6);
        assert!(r.injective);
        assert!(r.homomorphism_defect < 1e-9 && r.monoidal_defect < 1e-9);
    }
}
