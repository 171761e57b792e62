//! Grounding substitutions.
//!
//! A substitution maps variable names to ground terms in normal form, which
//! makes application idempotent by construction. Applying a substitution
//! resolves time offsets as soon as their variable becomes ground.

use std::collections::{btree_map, BTreeMap};
use std::fmt;

use crate::atom::Atom;
use crate::term::{Term, TimeTerm, Value};

/// A mapping from variable names to ground terms; the domain is exactly
/// the set of mapped variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subst {
    map: BTreeMap<String, Term>,
}

impl Subst {
    pub fn new() -> Subst {
        Subst::default()
    }

    /// Binds `var` to a ground term. Panics in debug builds when the term
    /// is not in normal form; callers normalise before binding.
    pub fn bind(&mut self, var: impl Into<String>, term: Term) {
        debug_assert!(term.is_normal(), "substitutions bind normal terms only");
        self.map.insert(var.into(), term);
    }

    pub fn with(mut self, var: impl Into<String>, term: Term) -> Subst {
        self.bind(var, term);
        self
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.map.get(var)
    }

    pub fn contains(&self, var: &str) -> bool {
        self.map.contains_key(var)
    }

    pub fn domain(&self) -> impl Iterator<Item = &String> {
        self.map.keys()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, String, Term> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Restricts the substitution to the given variables.
    pub fn restrict(&self, vars: &std::collections::BTreeSet<String>) -> Subst {
        Subst {
            map: self
                .map
                .iter()
                .filter(|(v, _)| vars.contains(*v))
                .map(|(v, t)| (v.clone(), t.clone()))
                .collect(),
        }
    }

    pub fn apply_term(&self, term: &Term) -> Term {
        match term {
            Term::Val(Value::Set(els)) => Term::Val(Value::Set(
                els.iter().map(|e| self.apply_term(e)).collect(),
            )),
            Term::Val(Value::Seq(els)) => Term::Val(Value::Seq(
                els.iter().map(|e| self.apply_term(e)).collect(),
            )),
            Term::Val(_) => term.clone(),
            Term::Ctor(name, args) => Term::Ctor(
                name.clone(),
                args.iter().map(|a| self.apply_term(a)).collect(),
            ),
            Term::Var(v) => match self.map.get(v) {
                Some(t) => t.clone(),
                None => term.clone(),
            },
            Term::Time(tt) => match self.apply_time(tt) {
                TimeTerm::At(p) => Term::int(p.0),
                other => Term::Time(other),
            },
            Term::App(op, args) => Term::App(
                *op,
                args.iter().map(|a| self.apply_term(a)).collect(),
            ),
        }
    }

    /// Applies the substitution to a time term, evaluating offsets once the
    /// variable is ground. A variable bound to a non-integer term is left
    /// in place; grounding catches the sort error later.
    pub fn apply_time(&self, tt: &TimeTerm) -> TimeTerm {
        match tt {
            TimeTerm::At(_) => tt.clone(),
            TimeTerm::Var(v) => match self.map.get(v).and_then(Term::as_time_point) {
                Some(p) => TimeTerm::At(p),
                None => tt.clone(),
            },
            TimeTerm::Offset(v, k) => match self.map.get(v).and_then(Term::as_time_point) {
                Some(p) => TimeTerm::At(p.plus(*k)),
                None => tt.clone(),
            },
        }
    }

    pub fn apply_atom(&self, atom: &Atom) -> Atom {
        Atom {
            pred: atom.pred.clone(),
            time: self.apply_time(&atom.time),
            args: atom.args.iter().map(|a| self.apply_term(a)).collect(),
        }
    }

    /// Union with a disjoint-or-agreeing extension.
    pub fn extended(&self, other: &Subst) -> Subst {
        let mut map = self.map.clone();
        for (v, t) in &other.map {
            map.insert(v.clone(), t.clone());
        }
        Subst { map }
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (v, t)) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} -> {t}")?;
        }
        f.write_str("]")
    }
}

impl FromIterator<(String, Term)> for Subst {
    fn from_iter<I: IntoIterator<Item = (String, Term)>>(iter: I) -> Subst {
        let mut s = Subst::new();
        for (v, t) in iter {
            s.bind(v, t);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::TimePoint;

    #[test]
    fn applies_direct_replacement() {
        let s = Subst::new().with("x", Term::int(5));
        let atom = Atom::new("p", TimeTerm::Var("t".into()), vec![Term::var("x")]);
        let out = s.apply_atom(&atom);
        assert_eq!(out.args, vec![Term::int(5)]);
        assert_eq!(out.time, TimeTerm::Var("t".into()));
    }

    #[test]
    fn empty_substitution_is_identity() {
        let s = Subst::new();
        let t = Term::ctor("Succ", vec![Term::var("r")]);
        assert_eq!(s.apply_term(&t), t);
    }

    #[test]
    fn grounding_a_time_variable_evaluates_offsets() {
        let s = Subst::new().with("t", Term::int(3));
        let tt = TimeTerm::offset("t", 1);
        assert_eq!(s.apply_time(&tt), TimeTerm::At(TimePoint(4)));
    }

    #[test]
    fn application_is_idempotent() {
        let s = Subst::new()
            .with("x", Term::str("a"))
            .with("t", Term::int(7));
        let t = Term::App(
            crate::term::BuiltinOp::Add,
            vec![Term::var("t"), Term::var("x"), Term::Time(TimeTerm::offset("t", 2))],
        );
        let once = s.apply_term(&t);
        assert_eq!(s.apply_term(&once), once);
    }
}
