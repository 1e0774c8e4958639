use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use albert_core::albert::{self, embed_offdiag, AlbertElem};
use albert_core::composition::oct::CD_NAMES;
use albert_core::composition::vdbs::{self, StandardBasis};
use albert_core::composition::{Oct, Quat};
use albert_core::construct::example1::{build_ab, resolve_normalization, theta};
use albert_core::Scalar;

use super::ast::{BinOp, Expr, Func, Kind, Program};
use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Oct(Oct),
    Albert(AlbertElem),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Oct(_) => "octonion",
            Value::Albert(_) => "H3(O) element",
        }
    }
}

pub const CONSTANTS: [&str; 19] =
    ["s", "sqrt3", "i", "j", "k", "v", "x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3", "E11", "E22", "E33", "a", "b"];

/// Names that cannot be rebound: constants, `o` and function names.
pub fn is_reserved(name: &str) -> bool {
    CONSTANTS.contains(&name) || name == "o" || Func::from_name(name).is_some()
}

fn standard_basis() -> Result<&'static StandardBasis> {
    static BASIS: OnceLock<std::result::Result<StandardBasis, albert_core::AlgebraError>> = OnceLock::new();
    BASIS.get_or_init(vdbs::vdbs_build).as_ref().map_err(|e| CliError::Algebra(e.clone()))
}

/// `a` and `b` in the normalization that yields an automorphism.
fn ab() -> Result<&'static (AlbertElem, AlbertElem)> {
    static AB: OnceLock<std::result::Result<(AlbertElem, AlbertElem), albert_core::AlgebraError>> = OnceLock::new();
    AB.get_or_init(|| {
        let chosen = resolve_normalization()?.chosen.ok_or(albert_core::AlgebraError::NoAutomorphism)?;
        Ok(build_ab(chosen))
    })
    .as_ref()
    .map_err(|e| CliError::Algebra(e.clone()))
}

fn constant(name: &str) -> Result<Option<Value>> {
    let oct = |q: Quat| Value::Oct(Oct::from_quat(q));
    Ok(Some(match name {
        "s" | "sqrt3" => Value::Scalar(Scalar::sqrt3()),
        "i" => oct(Quat::i()),
        "j" => oct(Quat::j()),
        "k" => oct(Quat::k()),
        "v" => Value::Oct(Oct::v()),
        "E11" => Value::Albert(AlbertElem::e(1)),
        "E22" => Value::Albert(AlbertElem::e(2)),
        "E33" => Value::Albert(AlbertElem::e(3)),
        "a" => Value::Albert(ab()?.0.clone()),
        "b" => Value::Albert(ab()?.1.clone()),
        _ => {
            let Some(n) = vdbs::NAMES.iter().position(|&x| x == name) else { return Ok(None) };
            Value::Oct(standard_basis()?.get(n).clone())
        }
    }))
}

fn type_err<T>(offset: usize, message: String) -> Result<T> {
    Err(CliError::Type { offset, message })
}

fn as_oct(v: Value, offset: usize, what: &str) -> Result<Oct> {
    match v {
        Value::Scalar(k) => Ok(Oct::scalar(k)),
        Value::Oct(o) => Ok(o),
        Value::Albert(_) => type_err(offset, format!("{what} expects an octonion, got an H3(O) element")),
    }
}

fn as_albert(v: Value, offset: usize, what: &str) -> Result<AlbertElem> {
    match v {
        Value::Albert(x) => Ok(x),
        other => type_err(offset, format!("{what} expects an H3(O) element, got a {}", other.type_name())),
    }
}

fn add(l: Value, r: Value, negate: bool, offset: usize) -> Result<Value> {
    use Value::*;
    let r = if negate { neg(r) } else { r };
    Ok(match (l, r) {
        (Scalar(x), Scalar(y)) => Scalar(x + y),
        (Scalar(k), Oct(o)) | (Oct(o), Scalar(k)) => Oct(&o + &albert_core::Oct::scalar(k)),
        (Oct(x), Oct(y)) => Oct(&x + &y),
        (Scalar(k), Albert(x)) | (Albert(x), Scalar(k)) => Albert(&x + &AlbertElem::identity().scale(&k)),
        (Albert(x), Albert(y)) => Albert(&x + &y),
        (l, r) => return type_err(offset, format!("cannot add a {} and a {}", l.type_name(), r.type_name())),
    })
}

fn neg(v: Value) -> Value {
    match v {
        Value::Scalar(k) => Value::Scalar(-k),
        Value::Oct(o) => Value::Oct(-&o),
        Value::Albert(x) => Value::Albert(x.scale(&-Scalar::one())),
    }
}

fn mul(l: Value, r: Value, offset: usize) -> Result<Value> {
    use Value::*;
    Ok(match (l, r) {
        (Scalar(x), Scalar(y)) => Scalar(x * y),
        (Scalar(k), Oct(o)) | (Oct(o), Scalar(k)) => Oct(o.scale(&k)),
        (Scalar(k), Albert(x)) | (Albert(x), Scalar(k)) => Albert(x.scale(&k)),
        (Oct(x), Oct(y)) => Oct(&x * &y),
        (Albert(_), Albert(_)) => return type_err(offset, "use `o` for the Jordan product of H3(O) elements".into()),
        (l, r) => return type_err(offset, format!("cannot multiply a {} by a {}", l.type_name(), r.type_name())),
    })
}

pub struct Evaluator {
    env: HashMap<String, Value>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator { env: HashMap::new() }
    }

    pub fn bind(&mut self, name: &str, value: Value) -> Result<()> {
        if is_reserved(name) {
            return Err(CliError::Reserved(name.to_string()));
        }
        self.env.insert(name.to_string(), value);
        Ok(())
    }

    pub fn run(&mut self, program: &Program) -> Result<Value> {
        for (name, e) in &program.bindings {
            let v = self.eval(e)?;
            self.bind(name, v)?;
        }
        self.eval(&program.body)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        let at = e.offset;
        match &e.kind {
            Kind::Int(n) => Ok(Value::Scalar(n.parse::<Scalar>().map_err(CliError::Algebra)?)),
            Kind::Frac(n, d) => {
                let n: Scalar = n.parse()?;
                let d: Scalar = d.parse()?;
                Ok(Value::Scalar(n.checked_div(&d)?))
            }
            Kind::Name(name) => {
                if let Some(v) = self.env.get(name) {
                    return Ok(v.clone());
                }
                constant(name)?.ok_or_else(|| CliError::Unbound(name.clone()))
            }
            Kind::Neg(x) => Ok(neg(self.eval(x)?)),
            Kind::Bin(op, l, r) => {
                let (l, r) = (self.eval(l)?, self.eval(r)?);
                match op {
                    BinOp::Add => add(l, r, false, at),
                    BinOp::Sub => add(l, r, true, at),
                    BinOp::Mul => mul(l, r, at),
                    BinOp::Jordan => match (l, r) {
                        (Value::Albert(x), Value::Albert(y)) => Ok(Value::Albert(albert::try_jordan_mul(&x, &y)?)),
                        (l, r) => type_err(
                            at,
                            format!(
                                "Jordan product needs two H3(O) elements, got {} and {}",
                                l.type_name(),
                                r.type_name()
                            ),
                        ),
                    },
                }
            }
            Kind::Embed(x, i, j) => {
                let o = as_oct(self.eval(x)?, at, "[ij]")?;
                Ok(Value::Albert(embed_offdiag(&o, *i, *j)?))
            }
            Kind::Call(func, args) => self.call(*func, args, at),
        }
    }

    fn call(&self, func: Func, args: &[Expr], at: usize) -> Result<Value> {
        let arity: &[usize] = match func {
            Func::T => &[1, 2],
            Func::TraceForm | Func::U => &[2],
            _ => &[1],
        };
        if !arity.contains(&args.len()) {
            return type_err(at, format!("{} takes {:?} argument(s), got {}", func.name(), arity, args.len()));
        }
        let vals: Vec<Value> = args.iter().map(|a| self.eval(a)).collect::<Result<_>>()?;
        let mut it = vals.into_iter();
        let mut next = || it.next().expect("arity checked");
        let name = func.name();
        Ok(match func {
            Func::Theta => Value::Albert(theta(&as_albert(next(), at, name)?)),
            Func::Conj => Value::Oct(as_oct(next(), at, name)?.conj()),
            Func::N => Value::Scalar(as_oct(next(), at, name)?.norm()),
            Func::T if args.len() == 1 => Value::Scalar(as_oct(next(), at, name)?.trace()),
            Func::T => {
                let x = as_oct(next(), at, name)?;
                Value::Scalar(x.tform(&as_oct(next(), at, name)?))
            }
            Func::TraceForm => {
                let x = as_albert(next(), at, name)?;
                Value::Scalar(albert::trace_form(&x, &as_albert(next(), at, name)?))
            }
            Func::Q => Value::Scalar(albert::qform_q(&as_albert(next(), at, name)?)),
            Func::Trace => Value::Scalar(albert::gen_trace(&as_albert(next(), at, name)?)),
            Func::U => {
                let x = as_albert(next(), at, name)?;
                Value::Albert(albert::u_operator(&x, &as_albert(next(), at, name)?))
            }
        })
    }
}

fn coeff(k: &Scalar) -> String {
    format!("({k})")
}

fn render_oct(o: &Oct) -> String {
    let c = o.cd_coords();
    let mut terms: Vec<String> = Vec::new();
    for (n, k) in c.iter().enumerate() {
        if k.is_zero() {
            continue;
        }
        terms.push(if n == 0 { coeff(k) } else { format!("{} * {}", coeff(k), CD_NAMES[n]) });
    }
    // Keep the value an octonion when only the unit part is present.
    if c[1..].iter().all(Scalar::is_zero) {
        terms.push("(0) * v".into());
    }
    terms.join(" + ")
}

fn render_albert(x: &AlbertElem) -> String {
    let mut terms = Vec::new();
    for (n, d) in x.d.iter().enumerate() {
        if !d.is_zero() {
            terms.push(format!("{} * E{}{}", coeff(d), n + 1, n + 1));
        }
    }
    for (o, (i, j)) in x.o.iter().zip(albert::SLOTS) {
        if !o.is_zero() {
            terms.push(format!("({})[{i}{j}]", render_oct(o)));
        }
    }
    if terms.is_empty() {
        terms.push("(0) * E11".into());
    }
    terms.join(" + ")
}

/// Text that parses and evaluates back to the same value and type.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(k) => write!(f, "{k}"),
            Value::Oct(o) => f.write_str(&render_oct(o)),
            Value::Albert(x) => f.write_str(&render_albert(x)),
        }
    }
}
