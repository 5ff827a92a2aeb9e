//! Evaluation of tangles in a representation category with a chosen
//! adjunction on the generating object.

use super::syntax::{Generator, Node, Sign, Tangle, Word};
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, C64};
use crate::rep::{braiding, Adjunction, RepObject};

#[derive(Debug, Clone)]
pub struct EvalContext {
    adj: Adjunction,
    ambient: u8,
    tol: f64,
}

impl EvalContext {
    /// Validates the adjunction, and its well-balancedness when `ambient ≥ 3`.
    pub fn new(adj: Adjunction, ambient: u8, tol: f64) -> Result<Self> {
        let ctx = Self::unchecked(adj, ambient, tol)?;
        ctx.adj.validate(tol)?;
        if ambient >= 3 {
            let defect = linalg::unitarity_defect(&ctx.adj.balancing());
            if defect > tol {
                return Err(Error::validation("unitarity of the balancing", defect));
            }
        }
        Ok(ctx)
    }

    /// Skips adjunction validation; used to exhibit failures of ill-balanced data.
    pub fn unchecked(adj: Adjunction, ambient: u8, tol: f64) -> Result<Self> {
        if !(2..=4).contains(&ambient) {
            return Err(Error::Invalid(format!(
                "ambient dimension must be 2, 3 or 4, got {ambient}"
            )));
        }
        if tol <= 0.0 {
            return Err(Error::Invalid("tolerance must be positive".into()));
        }
        Ok(EvalContext { adj, ambient, tol })
    }

    /// Well-balanced context on `x`.
    pub fn for_object(x: &RepObject, ambient: u8) -> Result<Self> {
        Self::new(Adjunction::well_balanced(x), ambient, 1e-9)
    }

    pub fn adjunction(&self) -> &Adjunction {
        &self.adj
    }

    pub fn ambient(&self) -> u8 {
        self.ambient
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn with_ambient(&self, ambient: u8) -> Result<Self> {
        Self::unchecked(self.adj.clone(), ambient, self.tol)
    }

    fn strand(&self, s: Sign) -> &RepObject {
        match s {
            Sign::Plus => self.adj.object(),
            Sign::Minus => self.adj.dual(),
        }
    }

    /// Carrier dimension of the tensor word.
    pub fn word_dim(&self, w: &Word) -> usize {
        self.adj.object().dim().pow(w.len() as u32)
    }

    fn generator(&self, g: Generator) -> Result<CMat> {
        if g.is_crossing() && self.ambient < 3 {
            return Err(Error::Ambient(g.name()));
        }
        let d = self.adj.object().dim();
        Ok(match g {
            Generator::Id(_) => linalg::identity(d),
            Generator::Ev => self.adj.counit(),
            Generator::EvStar => self.adj.counit().adjoint(),
            Generator::Coev => self.adj.unit(),
            Generator::CoevStar => self.adj.unit().adjoint(),
            Generator::Cross(s, t) => braiding(self.strand(s), self.strand(t))?,
            Generator::InvCross(s, t) => braiding(self.strand(t), self.strand(s))?
                .try_inverse()
                .ok_or_else(|| Error::Numeric("braiding is not invertible".into()))?,
        })
    }

    /// The intertwiner between tensor words denoted by `t`.
    pub fn evaluate(&self, t: &Tangle) -> Result<CMat> {
        match &t.node {
            Node::Gen(g) => self.generator(*g),
            Node::Seq(parts) => {
                let mut m = linalg::identity(self.word_dim(&t.src));
                for p in parts {
                    m = self.evaluate(p)? * m;
                }
                Ok(m)
            }
            Node::Par(parts) => {
                let mut m = linalg::identity(1);
                for p in parts {
                    m = linalg::kron(&m, &self.evaluate(p)?);
                }
                Ok(m)
            }
        }
    }

    /// Value of a closed tangle in `end(1) = ℂ`.
    pub fn scalar(&self, t: &Tangle) -> Result<C64> {
        if !t.is_closed() {
            return Err(Error::Type(format!(
                "`{t}` is not closed: {} → {}",
                t.src, t.tgt
            )));
        }
        Ok(self.evaluate(t)?[(0, 0)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::re;
    use crate::rep::RepCategory;
    use crate::tangle::parse;

    fn ctx(group: &str, irrep: &str, ambient: u8) -> EvalContext {
        let cat = RepCategory::catalog(group, 0).unwrap();
        EvalContext::for_object(&RepObject::irrep_named(&cat, irrep).unwrap(), ambient).unwrap()
    }

    #[test]
    fn loop_is_dimension() {
        let c = ctx("S3", "std", 2);
        let v = c.scalar(&parse("coev ; coev*").unwrap()).unwrap();
        assert!((v - re(2.0)).norm() < 1e-12);
    }

    #[test]
    fn twist_is_balancing() {
        let c = ctx("S3", "std", 3);
        let twist = parse("ev* | id+ ; id- | b++ ; ev | id+").unwrap();
        let m = c.evaluate(&twist).unwrap();
        assert!(linalg::deviation(&m, &c.adjunction().balancing()) < 1e-12);
        assert!(linalg::deviation(&m, &linalg::identity(2)) < 1e-12);
    }

    #[test]
    fn kinked_odd_loop_is_minus_one() {
        let c = ctx("SuperHilb", "odd", 3);
        let t = parse("ev* ; id- | (ev* | id+ ; id- | b++ ; ev | id+) ; ev").unwrap();
        assert!((c.scalar(&t).unwrap() - re(-1.0)).norm() < 1e-12);
    }

    #[test]
    fn crossings_need_three_dimensions() {
        let c = ctx("S3", "std", 2);
        assert_eq!(
            c.evaluate(&parse("b++").unwrap()).unwrap_err(),
            Error::Ambient("b++".into())
        );
    }

    #[test]
    fn ill_balanced_context_is_rejected_in_three_dimensions() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let bad = Adjunction::mis_scaled(&x, 2.0);
        assert!(EvalContext::new(bad.clone(), 3, 1e-9).is_err());
        assert!(EvalContext::new(bad, 2, 1e-9).is_ok());
    }
}
