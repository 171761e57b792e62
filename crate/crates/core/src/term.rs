//! Terms, time terms and built-in values.
//!
//! Ground terms in evaluated ("normal") form contain only [`Term::Val`] and
//! [`Term::Ctor`] nodes. The derived `Ord` on normal terms is the canonical
//! term order used everywhere deterministic output or set canonicalization
//! is required: values sort before constructor terms, and within each kind
//! the order is structural.

use std::fmt;

use std::collections::BTreeSet;

/// A discrete time point. Datetime literals are encoded as epoch seconds
/// when facts are ingested, so the engine only ever sees integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimePoint(pub i64);

impl TimePoint {
    pub fn plus(self, k: u32) -> TimePoint {
        TimePoint(self.0 + i64::from(k))
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A possibly non-ground term over the time sub-signature: a variable, a
/// concrete time point, or a variable plus a non-negative increment.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TimeTerm {
    At(TimePoint),
    Var(String),
    /// `Offset(v, k)` denotes `v + k` with `k > 0`; an offset of zero is
    /// normalised to the bare variable by [`TimeTerm::offset`].
    Offset(String, u32),
}

impl TimeTerm {
    pub fn offset(var: impl Into<String>, k: u32) -> TimeTerm {
        let var = var.into();
        if k == 0 {
            TimeTerm::Var(var)
        } else {
            TimeTerm::Offset(var, k)
        }
    }

    pub fn is_ground(&self) -> bool {
        matches!(self, TimeTerm::At(_))
    }

    pub fn var_name(&self) -> Option<&str> {
        match self {
            TimeTerm::At(_) => None,
            TimeTerm::Var(v) | TimeTerm::Offset(v, _) => Some(v),
        }
    }
}

impl fmt::Display for TimeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeTerm::At(t) => write!(f, "{t}"),
            TimeTerm::Var(v) => write!(f, "{v}"),
            TimeTerm::Offset(v, k) => write!(f, "{v}+{k}"),
        }
    }
}

/// Built-in value payloads. Set and sequence payloads hold ground terms
/// only; sets are kept in canonical term order by construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Int(i64),
    Str(String),
    Bool(bool),
    Set(BTreeSet<Term>),
    Seq(Vec<Term>),
}

impl Value {
    pub fn is_ground(&self) -> bool {
        match self {
            Value::Int(_) | Value::Str(_) | Value::Bool(_) => true,
            Value::Set(els) => els.iter().all(Term::is_ground),
            Value::Seq(els) => els.iter().all(Term::is_ground),
        }
    }
}

fn fmt_str(s: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("\"")?;
    for c in s.chars() {
        match c {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            '\t' => f.write_str("\\t")?,
            c => write!(f, "{c}")?,
        }
    }
    f.write_str("\"")
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Str(s) => fmt_str(s, f),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Set(els) => {
                f.write_str("{")?;
                for (i, e) in els.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("}")
            }
            Value::Seq(els) => {
                f.write_str("[")?;
                for (i, e) in els.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// The built-in operators. The set is fixed: arithmetic, comparisons,
/// boolean connectives, and operations over sets and sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BuiltinOp {
    Add,
    Sub,
    Mul,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    And,
    Or,
    Not,
    Size,
    Contains,
    Member,
    ToSet,
    ToList,
    Union,
}

impl BuiltinOp {
    /// Function-call spelling, for the operators that have one.
    pub fn fn_name(self) -> Option<&'static str> {
        Some(match self {
            BuiltinOp::Size => "size",
            BuiltinOp::Contains => "contains",
            BuiltinOp::Member => "member",
            BuiltinOp::ToSet => "toSet",
            BuiltinOp::ToList => "toList",
            BuiltinOp::Union => "union",
            _ => return None,
        })
    }

    pub fn from_fn_name(name: &str) -> Option<BuiltinOp> {
        Some(match name {
            "size" => BuiltinOp::Size,
            "contains" => BuiltinOp::Contains,
            "member" => BuiltinOp::Member,
            "toSet" => BuiltinOp::ToSet,
            "toList" => BuiltinOp::ToList,
            "union" => BuiltinOp::Union,
            _ => return None,
        })
    }

    pub fn infix_symbol(self) -> Option<&'static str> {
        Some(match self {
            BuiltinOp::Add => "+",
            BuiltinOp::Sub => "-",
            BuiltinOp::Mul => "*",
            BuiltinOp::Lt => "<",
            BuiltinOp::Le => "<=",
            BuiltinOp::Gt => ">",
            BuiltinOp::Ge => ">=",
            BuiltinOp::Eq => "==",
            BuiltinOp::Ne => "!=",
            BuiltinOp::And => "&&",
            BuiltinOp::Or => "||",
            _ => return None,
        })
    }

    pub fn is_comparison(self) -> bool {
        matches!(
            self,
            BuiltinOp::Lt | BuiltinOp::Le | BuiltinOp::Gt | BuiltinOp::Ge | BuiltinOp::Eq
        )
    }
}

/// First-order terms. `Val` and `Ctor` are the normal-form constructors;
/// `Time` embeds a time term in an argument position, `App` is an
/// unevaluated built-in application. Grounding a term collapses `Time`
/// nodes to integer values and evaluates `App` nodes away.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Val(Value),
    Ctor(String, Vec<Term>),
    Var(String),
    Time(TimeTerm),
    App(BuiltinOp, Vec<Term>),
}

impl Term {
    pub fn int(n: i64) -> Term {
        Term::Val(Value::Int(n))
    }

    pub fn str(s: impl Into<String>) -> Term {
        Term::Val(Value::Str(s.into()))
    }

    pub fn bool(b: bool) -> Term {
        Term::Val(Value::Bool(b))
    }

    pub fn var(v: impl Into<String>) -> Term {
        Term::Var(v.into())
    }

    pub fn ctor(name: impl Into<String>, args: Vec<Term>) -> Term {
        Term::Ctor(name.into(), args)
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Val(v) => v.is_ground(),
            Term::Ctor(_, args) | Term::App(_, args) => args.iter().all(Term::is_ground),
            Term::Var(_) => false,
            Term::Time(t) => t.is_ground(),
        }
    }

    /// Normal-form ground terms contain no `Var`, `Time` or `App` nodes.
    pub fn is_normal(&self) -> bool {
        match self {
            Term::Val(v) => v.is_ground(),
            Term::Ctor(_, args) => args.iter().all(Term::is_normal),
            _ => false,
        }
    }

    pub fn vars_into(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Val(Value::Set(els)) => els.iter().for_each(|e| e.vars_into(out)),
            Term::Val(Value::Seq(els)) => els.iter().for_each(|e| e.vars_into(out)),
            Term::Val(_) => {}
            Term::Ctor(_, args) | Term::App(_, args) => {
                args.iter().for_each(|a| a.vars_into(out))
            }
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Time(t) => {
                if let Some(v) = t.var_name() {
                    out.insert(v.to_string());
                }
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.vars_into(&mut out);
        out
    }

    pub fn as_time_point(&self) -> Option<TimePoint> {
        match self {
            Term::Val(Value::Int(n)) => Some(TimePoint(*n)),
            Term::Time(TimeTerm::At(t)) => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Val(v) => write!(f, "{v}"),
            Term::Ctor(name, args) => {
                write!(f, "{name}")?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
            Term::Var(v) => write!(f, "{v}"),
            Term::Time(t) => write!(f, "{t}"),
            Term::App(op, args) => {
                if let Some(name) = op.fn_name() {
                    write!(f, "{name}(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")
                } else if *op == BuiltinOp::Not {
                    write!(f, "!{}", Paren(&args[0]))
                } else {
                    let sym = op.infix_symbol().expect("operator has a spelling");
                    write!(f, "{} {sym} {}", Paren(&args[0]), Paren(&args[1]))
                }
            }
        }
    }
}

/// Wraps nested applications in parentheses when printing infix chains, so
/// printed terms re-parse with the same structure.
struct Paren<'a>(&'a Term);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Term::App(op, _) if op.infix_symbol().is_some() => write!(f, "({})", self.0),
            t => write!(f, "{t}"),
        }
    }
}

pub use BuiltinOp as Op;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offset_zero_is_the_bare_variable() {
        assert_eq!(TimeTerm::offset("t", 0), TimeTerm::Var("t".into()));
        assert_eq!(TimeTerm::offset("t", 2), TimeTerm::Offset("t".into(), 2));
    }

    #[test]
    fn canonical_order_puts_values_before_constructors() {
        let v = Term::int(5);
        let c = Term::ctor("A", vec![]);
        assert!(v < c);
    }

    #[test]
    fn set_values_display_in_canonical_order() {
        let set: BTreeSet<Term> = [Term::int(2), Term::int(1)].into_iter().collect();
        assert_eq!(Term::Val(Value::Set(set)).to_string(), "{1, 2}");
    }

    #[test]
    fn ground_and_vars_agree() {
        let t = Term::ctor("Succ", vec![Term::var("r"), Term::str("a")]);
        assert!(!t.is_ground());
        assert_eq!(t.vars().into_iter().collect::<Vec<_>>(), vec!["r"]);
        let g = Term::ctor("Succ", vec![Term::str("f"), Term::str("a")]);
        assert!(g.is_ground() && g.is_normal());
        assert!(g.vars().is_empty());
    }

    #[test]
    fn infix_display_parenthesizes_nested_applications() {
        let t = Term::App(
            BuiltinOp::Lt,
            vec![
                Term::App(BuiltinOp::Add, vec![Term::var("x"), Term::int(1)]),
                Term::var("y"),
            ],
        );
        assert_eq!(t.to_string(), "(x + 1) < y");
    }
}
