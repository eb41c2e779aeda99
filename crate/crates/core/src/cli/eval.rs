use crate::cli::parse::{BinaryOp, Expr, UnaryOp};
use crate::dualflag::{self, DualityConfig, DualityMode, TaggedMultivector};
use crate::duality::{hodge, hodge_inv, polarity};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::regressive::{self, Backend};
use crate::signature::Signature;

/// Settings shared by every evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalOptions {
    pub sig: Signature,
    pub cfg: DualityConfig,
    pub backend: Backend,
    /// Tag given to plain literals: `false` for a plane-based reading,
    /// `true` for a point-based one.
    pub literals_dual: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            sig: Signature::pga3(),
            cfg: DualityConfig::strict(),
            backend: Backend::default(),
            literals_dual: false,
        }
    }
}

/// Intermediate value. Number literals carry no tag until they meet a
/// tagged operand.
struct Value {
    mv: Multivector,
    tag: Option<bool>,
}

impl EvalOptions {
    fn resolve(&self, v: Value) -> TaggedMultivector {
        let tag = self.cfg.enabled && v.tag.unwrap_or(self.literals_dual);
        TaggedMultivector::new(v.mv, tag)
    }

    fn tagged(&self, x: TaggedMultivector) -> Value {
        Value {
            tag: Some(x.is_dual() && self.cfg.enabled),
            mv: x.into_payload(),
        }
    }

    /// Moves `x` into the algebra given by `want_dual` for the one-sided
    /// maps `J` and `J⁻¹`.
    fn require(&self, x: TaggedMultivector, want_dual: bool) -> Result<Multivector> {
        if x.is_dual() == want_dual {
            return Ok(x.into_payload());
        }
        match self.cfg.mode {
            DualityMode::Strict => Err(Error::TagMismatch {
                expected: want_dual,
                found: x.is_dual(),
            }),
            DualityMode::Lenient => Ok(dualflag::dual(&x, &self.cfg).into_payload()),
        }
    }

    fn unary(&self, op: UnaryOp, v: Value) -> Result<Value> {
        if op == UnaryOp::Neg {
            return Ok(Value {
                mv: -v.mv,
                tag: v.tag,
            });
        }
        let x = self.resolve(v);
        let out = match op {
            UnaryOp::Neg => unreachable!(),
            UnaryOp::Dual => dualflag::dual(&x, &self.cfg),
            UnaryOp::H => x.map(hodge),
            UnaryOp::Hinv => x.map(hodge_inv),
            UnaryOp::P => x.map(polarity),
            UnaryOp::J if !self.cfg.enabled => x.map(hodge),
            UnaryOp::Jinv if !self.cfg.enabled => x.map(hodge_inv),
            UnaryOp::J => TaggedMultivector::dual(hodge(&self.require(x, false)?)),
            UnaryOp::Jinv => TaggedMultivector::primal(hodge_inv(&self.require(x, true)?)),
        };
        Ok(self.tagged(out))
    }

    fn binary(&self, op: BinaryOp, l: Value, r: Value) -> Result<Value> {
        if l.tag.is_none() && r.tag.is_none() {
            let mv = match op {
                BinaryOp::Add => l.mv.try_add(&r.mv)?,
                BinaryOp::Sub => l.mv.try_sub(&r.mv)?,
                BinaryOp::Gp => l.mv.gp(&r.mv)?,
                BinaryOp::Wedge => l.mv.op(&r.mv)?,
                BinaryOp::Vee => regressive::vee(&l.mv, &r.mv, self.backend)?,
            };
            return Ok(Value { mv, tag: None });
        }
        let tag = l.tag.or(r.tag);
        let a = self.resolve(Value {
            tag: l.tag.or(tag),
            mv: l.mv,
        });
        let b = self.resolve(Value {
            tag: r.tag.or(tag),
            mv: r.mv,
        });
        let cfg = &self.cfg;
        let out = match op {
            BinaryOp::Add => dualflag::add_tagged(&a, &b, cfg)?,
            BinaryOp::Sub => dualflag::add_tagged(&a, &b.map(|m| -m), cfg)?,
            BinaryOp::Gp => dualflag::gp_tagged(&a, &b, cfg)?,
            BinaryOp::Wedge => dualflag::wedge_tagged(&a, &b, cfg)?,
            BinaryOp::Vee => dualflag::vee_tagged_with(&a, &b, cfg, self.backend)?,
        };
        Ok(self.tagged(out))
    }

    fn value(&self, expr: &Expr) -> Result<Value> {
        let sig = self.sig;
        Ok(match expr {
            Expr::Number(x) => Value {
                mv: Multivector::scalar(sig, *x),
                tag: None,
            },
            Expr::Blade { sign, blade, dual } => {
                if !sig.contains(*blade) {
                    return Err(Error::UnknownGenerator {
                        index: 31 - blade.mask().leading_zeros() as usize,
                        dim: sig.dim(),
                    });
                }
                Value {
                    mv: Multivector::blade(sig, *blade, *sign as f64),
                    tag: Some(*dual || self.literals_dual),
                }
            }
            Expr::Pseudoscalar => Value {
                mv: Multivector::pseudoscalar(sig),
                tag: Some(self.literals_dual),
            },
            Expr::Unary(op, arg) => self.unary(*op, self.value(arg)?)?,
            Expr::Binary(op, l, r) => self.binary(*op, self.value(l)?, self.value(r)?)?,
        })
    }
}

/// Evaluates a parsed expression. Untagged number-only results take the
/// literal tag.
pub fn eval(expr: &Expr, opts: &EvalOptions) -> Result<TaggedMultivector> {
    let v = opts.value(expr)?;
    Ok(opts.resolve(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse;

    fn run(src: &str, opts: &EvalOptions) -> Result<TaggedMultivector> {
        eval(&parse(src, opts.sig.dim()).unwrap(), opts)
    }

    fn show(src: &str, opts: &EvalOptions) -> String {
        run(src, opts).unwrap().to_string()
    }

    #[test]
    fn worked_examples() {
        let opts = EvalOptions::default();
        assert_eq!(show("e123 & e032", &opts), "e23");
        assert_eq!(show("e0 & e123", &opts), "1");
        assert_eq!(show("!(e0)", &opts), "e^123");
        assert_eq!(
            run("e1 * !(e0)", &opts),
            Err(Error::DualityMismatch {
                left: false,
                right: true
            })
        );
        let lenient = EvalOptions {
            cfg: DualityConfig::lenient(),
            ..opts
        };
        assert_eq!(show("e1 * !(e0)", &lenient), "-e01");
    }

    #[test]
    fn numbers_adopt_tags() {
        let opts = EvalOptions::default();
        assert_eq!(show("2 * e^03", &opts), "2*e^03");
        assert_eq!(show("3 + e^01", &opts), "3*e^ + e^01");
        assert_eq!(show("2 * 3 - 1", &opts), "5");
        assert_eq!(show("J(I)", &opts), "e^");
        assert_eq!(show("Jinv(e^)", &opts), "e0123");
    }

    #[test]
    fn one_sided_maps_check_tags() {
        let opts = EvalOptions::default();
        assert!(matches!(
            run("J(e^0)", &opts),
            Err(Error::TagMismatch { .. })
        ));
        assert!(matches!(
            run("Jinv(e0)", &opts),
            Err(Error::TagMismatch { .. })
        ));
        let lenient = EvalOptions {
            cfg: DualityConfig::lenient(),
            ..opts
        };
        assert_eq!(show("J(e^0)", &lenient), "e^0");
        assert_eq!(show("Jinv(J(e12))", &opts), "e12");
    }

    #[test]
    fn disabled_tags() {
        let opts = EvalOptions {
            cfg: DualityConfig::disabled(),
            ..EvalOptions::default()
        };
        assert_eq!(show("!(e0)", &opts), "e123");
        assert_eq!(show("e1 * !(e0)", &opts), "e23");
        assert_eq!(show("J(e12)", &opts), "e03");
        assert_eq!(show("e^03", &opts), "e03");
    }

    #[test]
    fn point_based_literals() {
        let opts = EvalOptions {
            literals_dual: true,
            ..EvalOptions::default()
        };
        assert_eq!(show("e0 ^ e3", &opts), "e^03");
        assert_eq!(show("!(e^123)", &opts), "e0");
        assert_eq!(show("2", &opts), "2*e^");
    }

    #[test]
    fn backends_and_metric() {
        let opts = EvalOptions {
            backend: Backend::Metric,
            ..EvalOptions::default()
        };
        assert_eq!(run("e1 & e2", &opts), Err(Error::DegenerateMetric));
        let shuffle = EvalOptions {
            backend: Backend::Shuffle,
            ..EvalOptions::default()
        };
        assert_eq!(show("e123 & e032", &shuffle), "e23");
        assert_eq!(show("P(e0)", &EvalOptions::default()), "0");
        assert_eq!(show("H(e123)", &EvalOptions::default()), "-e0");
    }
}
