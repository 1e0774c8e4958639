//! A small expression language over scalars, octonions and H₃(O).
//!
//! `*` multiplies scalars and octonions, `o` is the Jordan product, `x[ij]`
//! embeds an octonion in an off-diagonal slot. Functions: `theta conj n t T Q
//! trace U`. Bindings `name := expr;` may precede the final expression.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;

pub use ast::{Expr, Program};
pub use eval::{Evaluator, Value};
pub use parser::{parse_expr, parse_program};

use crate::error::Result;

/// Parses and evaluates `text`, returning the value and its rendering.
pub fn evaluate(text: &str) -> Result<(Value, String)> {
    let program = parse_program(text)?;
    let value = Evaluator::new().run(&program)?;
    let rendered = value.to_string();
    Ok((value, rendered))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::CliError;
    use albert_core::albert::{embed_offdiag, u_operator, AlbertElem};
    use albert_core::composition::vdbs::vdbs_build;
    use albert_core::composition::Oct;
    use albert_core::construct::example1::theta;
    use albert_core::Scalar;

    fn value(text: &str) -> Value {
        evaluate(text).unwrap().0
    }

    #[test]
    fn idempotent() {
        assert_eq!(value("E11 o E11"), Value::Albert(AlbertElem::e(1)));
    }

    #[test]
    fn null_entry() {
        assert_eq!(value("n(1 + i*v)"), Value::Scalar(Scalar::zero()));
    }

    #[test]
    fn u_operator_matches_direct_call() {
        let x0 = vdbs_build().unwrap().get(0).clone();
        let x = embed_offdiag(&(&x0 * &Oct::v()), 1, 2).unwrap();
        let b = AlbertElem::diag(1, -1, 0);
        let expected = u_operator(&x, &theta(&b));
        assert_eq!(value("U( (x0*v)[12] ; theta(b) )"), Value::Albert(expected));
    }

    #[test]
    fn trace_through_binding() {
        assert_eq!(value("x := i*v; t(x, 1)"), Value::Scalar(Scalar::zero()));
        assert_eq!(value("x := i*v; t(x, 1)"), value("t(i*v)"));
    }

    #[test]
    fn q_of_b_and_a() {
        assert_eq!(value("Q(b)"), Value::Scalar(Scalar::one()));
        assert_eq!(value("Q(a)"), Value::Scalar(Scalar::one()));
    }

    #[test]
    fn rational_scaling() {
        let Value::Albert(x) = value("(1/2) * E11") else { panic!() };
        assert_eq!(x.d[0], Scalar::frac(1, 2));
    }

    #[test]
    fn type_errors() {
        assert!(matches!(evaluate("1 o 2"), Err(CliError::Type { offset: 2, .. })));
        assert!(matches!(evaluate("E11 * E22"), Err(CliError::Type { .. })));
        assert!(matches!(evaluate("v + E11"), Err(CliError::Type { .. })));
        assert!(matches!(evaluate("n(E11)"), Err(CliError::Type { .. })));
        assert!(matches!(evaluate("t(1, 2, 3)"), Err(CliError::Type { .. })));
        assert!(matches!(evaluate("zz + 1"), Err(CliError::Unbound(_))));
        assert!(matches!(evaluate("v := 1; v"), Err(CliError::Reserved(_))));
        assert!(evaluate("1/0").is_err());
    }

    #[test]
    fn rendering_reparses() {
        for text in [
            "0",
            "1/3+2*s",
            "v",
            "3",
            "(0)*v",
            "1 + i*v",
            "x1 - y2",
            "a",
            "a o b + 1/3*E22",
            "(0)*E11",
            "(1+s)*theta(b)",
        ] {
            let (v, shown) = evaluate(text).unwrap();
            assert_eq!(value(&shown), v, "{text} -> {shown}");
        }
        assert_eq!(evaluate("1 + 0*v").unwrap().1, "(1) + (0) * v");
    }
}
