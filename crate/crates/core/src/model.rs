//! Function-free clause data model.
//!
//! Terms, literals and clauses are immutable after construction. Clauses keep
//! the input order of their literals so that every algorithm iterating over
//! them is reproducible, while equality between clauses is set equality.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Interned identifier. Cloning is a reference-count bump.
pub type Symbol = Arc<str>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(Symbol),
    Var(Symbol),
}

impl Term {
    pub fn constant(symbol: &str) -> Self {
        Term::Const(Symbol::from(symbol))
    }

    pub fn var(symbol: &str) -> Self {
        Term::Var(Symbol::from(symbol))
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn symbol(&self) -> &Symbol {
        match self {
            Term::Const(s) | Term::Var(s) => s,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn is_negative(self) -> bool {
        self == Polarity::Negative
    }
}

/// A relation name together with the polarity it occurs with.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRelation {
    pub polarity: Polarity,
    pub relation: Symbol,
}

impl SignedRelation {
    pub fn new(polarity: Polarity, relation: &str) -> Self {
        SignedRelation {
            polarity,
            relation: Symbol::from(relation),
        }
    }

    pub fn pos(relation: &str) -> Self {
        Self::new(Polarity::Positive, relation)
    }

    pub fn neg(relation: &str) -> Self {
        Self::new(Polarity::Negative, relation)
    }
}

impl fmt::Display for SignedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Positive => write!(f, "+{}", self.relation),
            Polarity::Negative => write!(f, "~{}", self.relation),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    polarity: Polarity,
    relation: Symbol,
    args: Vec<Term>,
}

impl Literal {
    pub fn new(polarity: Polarity, relation: Symbol, args: Vec<Term>) -> Self {
        Literal {
            polarity,
            relation,
            args,
        }
    }

    /// Positive literal over terms given as symbols; upper-case initials are
    /// variables, everything else is a constant.
    pub fn pos(relation: &str, args: &[&str]) -> Self {
        Self::new(Polarity::Positive, relation.into(), lex_terms(args))
    }

    pub fn neg(relation: &str, args: &[&str]) -> Self {
        Self::new(Polarity::Negative, relation.into(), lex_terms(args))
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn relation(&self) -> &Symbol {
        &self.relation
    }

    pub fn args(&self) -> &[Term] {
        &self.args
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn signed(&self) -> SignedRelation {
        SignedRelation {
            polarity: self.polarity,
            relation: self.relation.clone(),
        }
    }

    pub fn has_signed(&self, name: &SignedRelation) -> bool {
        self.polarity == name.polarity && self.relation == name.relation
    }

    pub fn vars(&self) -> impl Iterator<Item = &Symbol> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v),
            Term::Const(_) => None,
        })
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| !t.is_var())
    }

    pub fn apply(&self, subst: &Substitution) -> Literal {
        Literal {
            polarity: self.polarity,
            relation: self.relation.clone(),
            args: self.args.iter().map(|t| subst.apply_term(t)).collect(),
        }
    }
}

fn lex_terms(args: &[&str]) -> Vec<Term> {
    args.iter()
        .map(|a| {
            if a.starts_with(|c: char| c.is_ascii_uppercase()) {
                Term::var(a)
            } else {
                Term::constant(a)
            }
        })
        .collect()
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polarity.is_negative() {
            f.write_str("~")?;
        }
        write!(f, "{}({})", self.relation, self.args.iter().join(","))
    }
}

/// A non-empty, duplicate-free set of literals read as their disjunction.
#[derive(Clone, Debug)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    /// Builds a clause, dropping repeated literals and keeping first occurrences
    /// in input order.
    pub fn new(literals: Vec<Literal>) -> Result<Self> {
        if literals.is_empty() {
            return Err(Error::EmptyClause);
        }
        Ok(Self::dedup(literals))
    }

    fn dedup(literals: Vec<Literal>) -> Self {
        let mut seen = HashSet::with_capacity(literals.len());
        let mut kept = Vec::with_capacity(literals.len());
        for lit in literals {
            if seen.insert(lit.clone()) {
                kept.push(lit);
            }
        }
        Clause { literals: kept }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Literal> {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn contains(&self, lit: &Literal) -> bool {
        self.literals.contains(lit)
    }

    pub fn is_ground(&self) -> bool {
        self.literals.iter().all(Literal::is_ground)
    }

    /// True iff no signed relation name occurs twice.
    pub fn is_straight(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.literals.len());
        self.literals
            .iter()
            .all(|l| seen.insert((l.polarity, l.relation.clone())))
    }

    pub fn signed_names(&self) -> BTreeSet<SignedRelation> {
        self.literals.iter().map(Literal::signed).collect()
    }

    pub fn vars(&self) -> BTreeSet<Symbol> {
        self.literals
            .iter()
            .flat_map(|l| l.vars().cloned())
            .collect()
    }

    /// Positive literal count at most one.
    pub fn is_horn(&self) -> bool {
        self.literals
            .iter()
            .filter(|l| l.polarity == Polarity::Positive)
            .count()
            <= 1
    }

    /// First literal carrying the signed relation name.
    pub fn occurrence(&self, name: &SignedRelation) -> Option<&Literal> {
        self.literals.iter().find(|l| l.has_signed(name))
    }

    /// A witnessing set of at most `k` literal indices whose variables cover
    /// every variable of the clause, if one exists.
    pub fn is_k_guarded(&self, k: usize) -> Option<Vec<usize>> {
        find_guard(self, k, &BTreeSet::new())
    }

    /// Clause with only the literals satisfying `keep`; `None` if nothing is left.
    pub fn retain(&self, mut keep: impl FnMut(&Literal) -> bool) -> Option<Clause> {
        let literals: Vec<Literal> = self.literals.iter().filter(|l| keep(l)).cloned().collect();
        if literals.is_empty() {
            None
        } else {
            Some(Clause { literals })
        }
    }

    fn sorted(&self) -> Vec<&Literal> {
        let mut v: Vec<&Literal> = self.literals.iter().collect();
        v.sort();
        v
    }
}

impl PartialEq for Clause {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.sorted() == other.sorted()
    }
}

impl Eq for Clause {}

impl Hash for Clause {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted().hash(state);
    }
}

impl<'a> IntoIterator for &'a Clause {
    type Item = &'a Literal;
    type IntoIter = std::slice::Iter<'a, Literal>;

    fn into_iter(self) -> Self::IntoIter {
        self.literals.iter()
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literals.iter().join("; "))
    }
}

/// Finds the lexicographically first set of at most `k` literals whose
/// variables cover all variables of `clause` outside `exempt`.
pub(crate) fn find_guard(
    clause: &Clause,
    k: usize,
    exempt: &BTreeSet<Symbol>,
) -> Option<Vec<usize>> {
    if k == 0 {
        return None;
    }
    let needed: BTreeSet<&Symbol> = clause
        .literals
        .iter()
        .flat_map(Literal::vars)
        .filter(|v| !exempt.contains(*v))
        .collect();
    if needed.is_empty() {
        return Some(vec![0]);
    }
    let lit_vars: Vec<BTreeSet<&Symbol>> =
        clause.literals.iter().map(|l| l.vars().collect()).collect();
    for size in 1..=k.min(clause.len()) {
        for combo in (0..clause.len()).combinations(size) {
            let covered = needed
                .iter()
                .all(|v| combo.iter().any(|&i| lit_vars[i].contains(v)));
            if covered {
                return Some(combo);
            }
        }
    }
    None
}

/// Variable substitution; the identity outside its domain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Substitution {
    map: BTreeMap<Symbol, Term>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Term)>) -> Self {
        Substitution {
            map: pairs
                .into_iter()
                .map(|(v, t)| (Symbol::from(v), t))
                .collect(),
        }
    }

    pub fn bind(&mut self, var: Symbol, term: Term) -> Option<Term> {
        self.map.insert(var, term)
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.map.get(var)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Term)> {
        self.map.iter()
    }

    pub fn apply_term(&self, term: &Term) -> Term {
        match term {
            Term::Var(v) => self.map.get(v).cloned().unwrap_or_else(|| term.clone()),
            Term::Const(_) => term.clone(),
        }
    }

    pub fn apply(&self, clause: &Clause) -> Clause {
        Clause::dedup(clause.literals.iter().map(|l| l.apply(self)).collect())
    }

    /// `outer ∘ inner`: applying the result equals applying `inner`, then `outer`.
    pub fn compose(outer: &Substitution, inner: &Substitution) -> Substitution {
        let mut map: BTreeMap<Symbol, Term> = inner
            .map
            .iter()
            .map(|(v, t)| (v.clone(), outer.apply_term(t)))
            .collect();
        for (v, t) in &outer.map {
            map.entry(v.clone()).or_insert_with(|| t.clone());
        }
        Substitution { map }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.map.iter().map(|(v, t)| format!("{v}->{t}")).join(", ")
        )
    }
}

/// A clause together with its guard literals and, for Datalog± rules, the
/// variables that are existentially quantified in the head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    clause: Clause,
    guard: Vec<usize>,
    existential: BTreeSet<Symbol>,
}

impl Hypothesis {
    pub fn new(clause: Clause, guard: Vec<usize>, existential: BTreeSet<Symbol>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidHypothesis(msg));
        if guard.is_empty() {
            return invalid("empty guard".into());
        }
        if guard.iter().any(|&g| g >= clause.len()) {
            return invalid(format!("guard index out of range in {clause}"));
        }
        if !guard.iter().all_unique() {
            return invalid("repeated guard index".into());
        }
        for lit in clause.iter() {
            if lit.polarity.is_negative() {
                if let Some(v) = lit.vars().find(|v| existential.contains(*v)) {
                    return invalid(format!(
                        "existential variable {v} in negative literal {lit}"
                    ));
                }
            }
        }
        let h = Hypothesis {
            clause,
            guard,
            existential,
        };
        h.check_guarded()?;
        Ok(h)
    }

    /// Hypothesis guarded by the first covering set of at most `k` literals.
    pub fn from_clause(clause: Clause, k: usize) -> Result<Self> {
        Self::with_existential(clause, k, BTreeSet::new())
    }

    pub fn with_existential(
        clause: Clause,
        k: usize,
        existential: BTreeSet<Symbol>,
    ) -> Result<Self> {
        match find_guard(&clause, k, &existential) {
            Some(guard) => Self::new(clause, guard, existential),
            None => Err(Error::NotGuarded {
                clause: clause.to_string(),
                k,
            }),
        }
    }

    /// Re-checks that the guard literals cover every non-existential variable.
    pub fn check_guarded(&self) -> Result<()> {
        let covered: BTreeSet<&Symbol> = self
            .guard
            .iter()
            .flat_map(|&g| self.clause.literals[g].vars())
            .collect();
        let uncovered = self
            .clause
            .iter()
            .flat_map(Literal::vars)
            .any(|v| !covered.contains(v) && !self.existential.contains(v));
        if uncovered || self.guard.iter().any(|&g| g >= self.clause.len()) {
            return Err(Error::NotGuarded {
                clause: self.clause.to_string(),
                k: self.guard.len(),
            });
        }
        Ok(())
    }

    pub fn clause(&self) -> &Clause {
        &self.clause
    }

    pub fn guard(&self) -> &[usize] {
        &self.guard
    }

    pub fn guard_literals(&self) -> impl Iterator<Item = &Literal> {
        self.guard.iter().map(|&g| &self.clause.literals[g])
    }

    pub fn existential(&self) -> &BTreeSet<Symbol> {
        &self.existential
    }

    /// Guard width.
    pub fn width(&self) -> usize {
        self.guard.len()
    }

    pub fn len(&self) -> usize {
        self.clause.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_guard(&self, index: usize) -> bool {
        self.guard.contains(&index)
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.clause.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Guarded,
    /// Horn examples, guards over negative literals, existential head variables.
    DatalogPm,
}

/// Positive and negative ground example clauses plus the hypothesis language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    positives: Vec<Clause>,
    negatives: Vec<Clause>,
    k: usize,
    mode: Mode,
    arities: BTreeMap<Symbol, usize>,
}

impl Instance {
    /// Instance of the straight setting: every positive example must be straight.
    pub fn new(
        positives: Vec<Clause>,
        negatives: Vec<Clause>,
        k: usize,
        mode: Mode,
    ) -> Result<Self> {
        let inst = Self::unrestricted(positives, negatives, k, mode)?;
        if let Some(c) = inst.positives.iter().find(|c| !c.is_straight()) {
            return Err(Error::NotStraight(c.to_string()));
        }
        Ok(inst)
    }

    /// Instance with ground examples but no straightness requirement.
    pub fn unrestricted(
        positives: Vec<Clause>,
        negatives: Vec<Clause>,
        k: usize,
        mode: Mode,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGuard("guard width must be positive".into()));
        }
        if positives.is_empty() {
            return Err(Error::NoPositiveExamples);
        }
        let mut arities: BTreeMap<Symbol, usize> = BTreeMap::new();
        for clause in positives.iter().chain(&negatives) {
            if !clause.is_ground() {
                return Err(Error::NonGroundExample(clause.to_string()));
            }
            for lit in clause {
                let expected = *arities.entry(lit.relation.clone()).or_insert(lit.arity());
                if expected != lit.arity() {
                    return Err(Error::ArityMismatch {
                        relation: lit.relation.to_string(),
                        expected,
                        found: lit.arity(),
                    });
                }
            }
        }
        Ok(Instance {
            positives,
            negatives,
            k,
            mode,
            arities,
        })
    }

    pub fn positives(&self) -> &[Clause] {
        &self.positives
    }

    pub fn negatives(&self) -> &[Clause] {
        &self.negatives
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn arity(&self, relation: &str) -> Option<usize> {
        self.arities.get(relation).copied()
    }

    pub fn arities(&self) -> &BTreeMap<Symbol, usize> {
        &self.arities
    }

    pub fn positives_straight(&self) -> bool {
        self.positives.iter().all(Clause::is_straight)
    }

    pub fn with_k(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGuard("guard width must be positive".into()));
        }
        Ok(Instance { k, ..self.clone() })
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        Instance {
            mode,
            ..self.clone()
        }
    }

    /// Total number of literals across all examples.
    pub fn size(&self) -> usize {
        self.positives
            .iter()
            .chain(&self.negatives)
            .map(Clause::len)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clause(lits: Vec<Literal>) -> Clause {
        Clause::new(lits).unwrap()
    }

    fn e1_pos() -> Clause {
        clause(vec![
            Literal::neg("TalkAbout", &["a", "b", "a"]),
            Literal::neg("FanOf", &["a", "a"]),
            Literal::neg("Influences", &["a", "b"]),
            Literal::pos("FanOf", &["b", "a"]),
        ])
    }

    #[test]
    fn ground_and_straight() {
        let c = e1_pos();
        assert!(c.is_ground());
        assert!(c.is_straight());
        assert!(!clause(vec![Literal::pos("P", &["X"])]).is_ground());
        assert!(!clause(vec![Literal::pos("P", &["a"]), Literal::pos("P", &["b"])]).is_straight());
        assert!(clause(vec![Literal::pos("P", &["a"]), Literal::neg("P", &["a"])]).is_straight());
    }

    #[test]
    fn empty_clause_rejected() {
        assert_eq!(Clause::new(vec![]), Err(Error::EmptyClause));
    }

    #[test]
    fn guards() {
        let c = clause(vec![
            Literal::neg("TalkAbout", &["X", "Y", "Z"]),
            Literal::neg("FanOf", &["X", "Z"]),
            Literal::pos("FanOf", &["Y", "Z"]),
        ]);
        assert_eq!(c.is_k_guarded(1), Some(vec![0]));

        let unguarded = clause(vec![
            Literal::neg("Influences", &["X", "Y"]),
            Literal::pos("FanOf", &["Y", "T"]),
        ]);
        assert_eq!(unguarded.is_k_guarded(1), None);

        let tc = clause(vec![
            Literal::neg("T", &["X", "Y"]),
            Literal::neg("R", &["Y", "Z"]),
            Literal::pos("T", &["X", "Z"]),
        ]);
        assert_eq!(tc.is_k_guarded(1), None);
        assert_eq!(tc.is_k_guarded(2), Some(vec![0, 1]));

        assert_eq!(e1_pos().is_k_guarded(1), Some(vec![0]));
    }

    #[test]
    fn substitution_application() {
        let s = Substitution::from_pairs([
            ("X", Term::constant("a")),
            ("Y", Term::constant("b")),
            ("Z", Term::constant("a")),
        ]);
        let c = clause(vec![Literal::neg("TalkAbout", &["X", "Y", "Z"])]);
        assert_eq!(
            s.apply(&c),
            clause(vec![Literal::neg("TalkAbout", &["a", "b", "a"])])
        );
        assert_eq!(Substitution::new().apply(&e1_pos()), e1_pos());

        let collapse = Substitution::from_pairs([("X", Term::var("Y"))]);
        let c = clause(vec![Literal::pos("P", &["X"]), Literal::pos("P", &["Y"])]);
        assert_eq!(collapse.apply(&c), clause(vec![Literal::pos("P", &["Y"])]));
    }

    #[test]
    fn signed_names_split_polarity() {
        let e1_neg = clause(vec![
            Literal::neg("TalkAbout", &["d", "b", "e"]),
            Literal::neg("Influences", &["d", "b"]),
            Literal::pos("FanOf", &["d", "e"]),
        ]);
        let expected: BTreeSet<_> = [
            SignedRelation::neg("TalkAbout"),
            SignedRelation::neg("Influences"),
            SignedRelation::pos("FanOf"),
        ]
        .into_iter()
        .collect();
        assert_eq!(e1_neg.signed_names(), expected);

        let both = clause(vec![Literal::pos("P", &["a"]), Literal::neg("P", &["a"])]);
        assert_eq!(both.signed_names().len(), 2);
    }

    #[test]
    fn clause_equality_is_set_based() {
        let a = clause(vec![Literal::pos("P", &["a"]), Literal::pos("Q", &["b"])]);
        let b = clause(vec![
            Literal::pos("Q", &["b"]),
            Literal::pos("P", &["a"]),
            Literal::pos("P", &["a"]),
        ]);
        assert_eq!(a, b);
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn instance_validation() {
        let p = clause(vec![Literal::pos("P", &["a"]), Literal::pos("P", &["b"])]);
        assert!(matches!(
            Instance::new(vec![p.clone()], vec![], 1, Mode::Guarded),
            Err(Error::NotStraight(_))
        ));
        assert!(Instance::unrestricted(vec![p], vec![], 1, Mode::Guarded).is_ok());

        let arity = Instance::new(
            vec![clause(vec![Literal::pos("P", &["a"])])],
            vec![clause(vec![Literal::pos("P", &["a", "b"])])],
            1,
            Mode::Guarded,
        );
        assert!(matches!(arity, Err(Error::ArityMismatch { .. })));

        let var = Instance::new(
            vec![clause(vec![Literal::pos("P", &["X"])])],
            vec![],
            1,
            Mode::Guarded,
        );
        assert!(matches!(var, Err(Error::NonGroundExample(_))));
    }

    #[test]
    fn hypothesis_invariants() {
        let c = clause(vec![
            Literal::neg("Person", &["X"]),
            Literal::pos("Ancestor", &["W", "X"]),
        ]);
        assert_eq!(Hypothesis::from_clause(c.clone(), 1).unwrap().guard(), &[1]);
        let ex: BTreeSet<Symbol> = [Symbol::from("W")].into_iter().collect();
        let h = Hypothesis::with_existential(c, 1, ex.clone()).unwrap();
        assert_eq!(h.guard(), &[0]);

        let bad = clause(vec![
            Literal::neg("Person", &["X"]),
            Literal::neg("Ancestor", &["W", "X"]),
        ]);
        assert!(Hypothesis::new(bad, vec![1], ex).is_err());
    }
}
