//! Atoms, ground atoms and interpretations.

use std::collections::BTreeSet;
use std::fmt;

use crate::term::{Term, TimePoint, TimeTerm};

/// A predicate symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pred(pub String);

impl Pred {
    pub fn new(name: impl Into<String>) -> Pred {
        Pred(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Pred {
    fn from(s: &str) -> Pred {
        Pred(s.to_string())
    }
}

/// The engine-provided relation over consecutive generated time points.
/// `Step(t, prev)` holds when `prev` is the greatest generated time below
/// `t`. It is matched specially and never appears in the call graph.
pub const STEP_PRED: &str = "Step";

/// An ordinary atom: predicate, time term in the first argument position,
/// then the remaining arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub pred: Pred,
    pub time: TimeTerm,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: impl Into<String>, time: TimeTerm, args: Vec<Term>) -> Atom {
        Atom {
            pred: Pred::new(pred),
            time,
            args,
        }
    }

    /// Written arity: the time argument plus the remaining arguments.
    pub fn arity(&self) -> usize {
        1 + self.args.len()
    }

    pub fn vars_into(&self, out: &mut BTreeSet<String>) {
        if let Some(v) = self.time.var_name() {
            out.insert(v.to_string());
        }
        for a in &self.args {
            a.vars_into(out);
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.vars_into(&mut out);
        out
    }

    pub fn is_ground(&self) -> bool {
        self.time.is_ground() && self.args.iter().all(Term::is_ground)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}", self.pred, self.time)?;
        for a in &self.args {
            write!(f, ", {a}")?;
        }
        f.write_str(")")
    }
}

/// A ground atom in normal form. The field order gives the canonical
/// atom order: by time, then predicate, then arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundAtom {
    pub time: TimePoint,
    pub pred: Pred,
    pub args: Vec<Term>,
}

impl GroundAtom {
    pub fn new(pred: impl Into<String>, time: TimePoint, args: Vec<Term>) -> GroundAtom {
        let atom = GroundAtom {
            time,
            pred: Pred::new(pred),
            args,
        };
        debug_assert!(atom.args.iter().all(Term::is_normal));
        atom
    }

    pub fn arity(&self) -> usize {
        1 + self.args.len()
    }

    pub fn to_atom(&self) -> Atom {
        Atom {
            pred: self.pred.clone(),
            time: TimeTerm::At(self.time),
            args: self.args.clone(),
        }
    }
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}", self.pred, self.time)?;
        for a in &self.args {
            write!(f, ", {a}")?;
        }
        f.write_str(")")
    }
}

/// A finite set of ground atoms; the unit of model candidates. Iteration
/// follows the canonical atom order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interpretation {
    atoms: BTreeSet<GroundAtom>,
}

impl Interpretation {
    pub fn new() -> Interpretation {
        Interpretation::default()
    }

    pub fn insert(&mut self, atom: GroundAtom) -> bool {
        self.atoms.insert(atom)
    }

    pub fn contains(&self, atom: &GroundAtom) -> bool {
        self.atoms.contains(atom)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroundAtom> {
        self.atoms.iter()
    }

    /// Atoms of one predicate, in canonical order.
    // TODO: key a persistent index by predicate if interpretations ever get
    // large enough for the linear scan to matter.
    pub fn with_pred<'a>(&'a self, pred: &'a Pred) -> impl Iterator<Item = &'a GroundAtom> {
        self.atoms.iter().filter(move |a| &a.pred == pred)
    }

    /// The distinct time points of the member atoms, ascending.
    pub fn times(&self) -> BTreeSet<TimePoint> {
        self.atoms.iter().map(|a| a.time).collect()
    }
}

impl FromIterator<GroundAtom> for Interpretation {
    fn from_iter<I: IntoIterator<Item = GroundAtom>>(iter: I) -> Interpretation {
        Interpretation {
            atoms: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Value;

    #[test]
    fn ground_atom_order_is_time_major() {
        let a = GroundAtom::new("Zeta", TimePoint(1), vec![]);
        let b = GroundAtom::new("Alpha", TimePoint(2), vec![]);
        assert!(a < b);
    }

    #[test]
    fn atom_vars_cover_time_and_args() {
        let a = Atom::new(
            "p",
            TimeTerm::Var("t".into()),
            vec![Term::var("x"), Term::str("a")],
        );
        let vars: Vec<_> = a.vars().into_iter().collect();
        assert_eq!(vars, vec!["t", "x"]);
    }

    #[test]
    fn ground_atom_has_no_vars() {
        let a = Atom::new("p", TimeTerm::At(TimePoint(3)), vec![Term::int(1)]);
        assert!(a.is_ground());
        assert!(a.vars().is_empty());
    }

    #[test]
    fn interpretation_display_is_sorted() {
        let interp: Interpretation = [
            GroundAtom::new("q", TimePoint(2), vec![]),
            GroundAtom::new("p", TimePoint(1), vec![Term::Val(Value::Int(7))]),
        ]
        .into_iter()
        .collect();
        assert_eq!(interp.to_string(), "{p(1, 7), q(2)}");
    }
}
