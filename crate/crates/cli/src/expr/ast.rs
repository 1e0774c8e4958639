use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// Scalar or octonion multiplication.
    Mul,
    /// Jordan product `o`.
    Jordan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Theta,
    Conj,
    N,
    /// `t(x)` or `t(x, y)`.
    T,
    /// Generic trace form `T(X, Y)`.
    TraceForm,
    Q,
    Trace,
    /// `U(X; W)`.
    U,
}

impl Func {
    pub const ALL: [Func; 8] =
        [Func::Theta, Func::Conj, Func::N, Func::T, Func::TraceForm, Func::Q, Func::Trace, Func::U];

    pub fn name(self) -> &'static str {
        match self {
            Func::Theta => "theta",
            Func::Conj => "conj",
            Func::N => "n",
            Func::T => "t",
            Func::TraceForm => "T",
            Func::Q => "Q",
            Func::Trace => "trace",
            Func::U => "U",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Debug)]
pub enum Kind {
    /// Non-negative integer literal.
    Int(String),
    /// `n/d` literal.
    Frac(String, String),
    /// Named constant or bound variable.
    Name(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    /// `x[ij]`.
    Embed(Box<Expr>, usize, usize),
    Call(Func, Vec<Expr>),
}

/// Expression node; `offset` is the byte position in the source and is
/// ignored by equality.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: Kind,
    pub offset: usize,
}

impl PartialEq for Kind {
    fn eq(&self, other: &Self) -> bool {
        use Kind::*;
        match (self, other) {
            (Int(a), Int(b)) => a == b,
            (Frac(a, b), Frac(c, d)) => a == c && b == d,
            (Name(a), Name(b)) => a == b,
            (Neg(a), Neg(b)) => a == b,
            (Bin(o, a, b), Bin(p, c, d)) => o == p && a == c && b == d,
            (Embed(a, i, j), Embed(b, k, l)) => a == b && i == k && j == l,
            (Call(f, a), Call(g, b)) => f == g && a == b,
            _ => false,
        }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Program {
    pub bindings: Vec<(String, Expr)>,
    pub body: Expr,
}

const ADD: u8 = 1;
const MUL: u8 = 2;
const NEG: u8 = 3;
const POST: u8 = 4;

impl Expr {
    fn prec(&self) -> u8 {
        match &self.kind {
            Kind::Bin(BinOp::Add | BinOp::Sub, ..) => ADD,
            Kind::Bin(..) => MUL,
            Kind::Neg(_) => NEG,
            Kind::Embed(..) => POST,
            _ => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        let wrap = self.prec() < ctx;
        if wrap {
            f.write_str("(")?;
        }
        match &self.kind {
            Kind::Int(s) => f.write_str(s)?,
            Kind::Frac(n, d) => write!(f, "{n}/{d}")?,
            Kind::Name(s) => f.write_str(s)?,
            Kind::Neg(e) => {
                f.write_str("-")?;
                e.write(f, NEG)?;
            }
            Kind::Bin(op, l, r) => {
                let (sym, p) = match op {
                    BinOp::Add => (" + ", ADD),
                    BinOp::Sub => (" - ", ADD),
                    BinOp::Mul => (" * ", MUL),
                    BinOp::Jordan => (" o ", MUL),
                };
                l.write(f, p)?;
                f.write_str(sym)?;
                r.write(f, p + 1)?;
            }
            Kind::Embed(e, i, j) => {
                e.write(f, POST)?;
                write!(f, "[{i}{j}]")?;
            }
            Kind::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                let sep = if *func == Func::U { "; " } else { ", " };
                for (n, a) in args.iter().enumerate() {
                    if n > 0 {
                        f.write_str(sep)?;
                    }
                    a.write(f, 0)?;
                }
                f.write_str(")")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Canonical text with minimal parentheses; parses back to an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, e) in &self.bindings {
            write!(f, "{name} := {e}; ")?;
        }
        write!(f, "{}", self.body)
    }
}
