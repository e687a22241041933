//! θ-subsumption: does some substitution θ give `phi θ ⊆ psi`?
//!
//! Two procedures live here. [`subsumes_general`] is a plain backtracking
//! search over literal-to-literal matchings, choosing the most constrained
//! literal first. It is exponential in the worst case and serves as the oracle
//! path. [`subsumes_k_guarded`] exploits the guard: every consistent mapping of
//! the guard literals into `psi` fixes θ on all variables, so there are at most
//! `|psi|^k` candidates to test.
//!
//! Terms of `psi` are treated as rigid symbols, so a non-ground `psi` behaves
//! as if its variables were fresh constants.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::model::{Clause, Hypothesis, Literal, Polarity, Substitution, Symbol, Term};

#[derive(Debug, Clone)]
enum Slot {
    Var(usize),
    Fixed(Term),
}

#[derive(Debug)]
struct Pattern {
    polarity: Polarity,
    relation: Symbol,
    slots: Vec<Slot>,
}

/// `phi` with variables numbered densely.
struct Compiled {
    vars: Vec<Symbol>,
    patterns: Vec<Pattern>,
}

impl Compiled {
    fn new(phi: &[Literal]) -> Self {
        let mut index: HashMap<Symbol, usize> = HashMap::new();
        let mut vars = Vec::new();
        let patterns = phi
            .iter()
            .map(|lit| Pattern {
                polarity: lit.polarity(),
                relation: lit.relation().clone(),
                slots: lit
                    .args()
                    .iter()
                    .map(|t| match t {
                        Term::Var(v) => Slot::Var(*index.entry(v.clone()).or_insert_with(|| {
                            vars.push(v.clone());
                            vars.len() - 1
                        })),
                        Term::Const(_) => Slot::Fixed(t.clone()),
                    })
                    .collect(),
            })
            .collect();
        Compiled { vars, patterns }
    }

    fn substitution(&self, binding: &[Option<Term>]) -> Substitution {
        let mut s = Substitution::new();
        for (var, term) in self.vars.iter().zip(binding) {
            if let Some(t) = term {
                s.bind(var.clone(), t.clone());
            }
        }
        s
    }
}

/// Argument rows of one polarity and arity.
type Rows<'a> = (Polarity, usize, Vec<&'a [Term]>);

/// Target clause grouped by signed relation name and arity.
struct Target<'a> {
    groups: HashMap<&'a str, Vec<Rows<'a>>>,
}

impl<'a> Target<'a> {
    fn new(psi: &'a Clause) -> Self {
        let mut groups: HashMap<&str, Vec<Rows<'_>>> = HashMap::new();
        for lit in psi {
            let entry = groups.entry(&**lit.relation()).or_default();
            match entry
                .iter_mut()
                .find(|(pol, ar, _)| *pol == lit.polarity() && *ar == lit.arity())
            {
                Some((_, _, rows)) => rows.push(lit.args()),
                None => entry.push((lit.polarity(), lit.arity(), vec![lit.args()])),
            }
        }
        Target { groups }
    }

    fn candidates(&self, p: &Pattern) -> &[&'a [Term]] {
        self.groups
            .get(&*p.relation)
            .and_then(|g| {
                g.iter()
                    .find(|(pol, ar, _)| *pol == p.polarity && *ar == p.slots.len())
            })
            .map_or(&[], |(_, _, rows)| rows.as_slice())
    }
}

fn compatible(p: &Pattern, args: &[Term], binding: &[Option<Term>]) -> bool {
    // Repeated unbound variables inside one literal are handled by `bind`.
    p.slots.iter().zip(args).all(|(slot, t)| match slot {
        Slot::Fixed(c) => c == t,
        Slot::Var(v) => binding[*v].as_ref().is_none_or(|b| b == t),
    })
}

/// Binds the unbound variables of `p` to `args`; returns the newly bound
/// variables, or `None` (with nothing bound) on conflict.
fn bind(p: &Pattern, args: &[Term], binding: &mut [Option<Term>]) -> Option<Vec<usize>> {
    let mut fresh = Vec::new();
    for (slot, t) in p.slots.iter().zip(args) {
        let ok = match slot {
            Slot::Fixed(c) => c == t,
            Slot::Var(v) => match &binding[*v] {
                Some(b) => b == t,
                None => {
                    binding[*v] = Some(t.clone());
                    fresh.push(*v);
                    true
                }
            },
        };
        if !ok {
            unbind(&fresh, binding);
            return None;
        }
    }
    Some(fresh)
}

fn unbind(vars: &[usize], binding: &mut [Option<Term>]) {
    for &v in vars {
        binding[v] = None;
    }
}

/// Backtracking over `remaining` patterns, most constrained first. Leaves the
/// successful binding in place.
fn search(
    compiled: &Compiled,
    target: &Target<'_>,
    remaining: &mut Vec<usize>,
    binding: &mut [Option<Term>],
) -> bool {
    if remaining.is_empty() {
        return true;
    }
    let mut best: Option<(usize, usize)> = None;
    for (slot, &p) in remaining.iter().enumerate() {
        let pattern = &compiled.patterns[p];
        let n = target
            .candidates(pattern)
            .iter()
            .filter(|args| compatible(pattern, args, binding))
            .count();
        if n == 0 {
            return false;
        }
        if best.is_none_or(|(_, m)| n < m) {
            best = Some((slot, n));
        }
    }
    let (slot, _) = best.expect("remaining is non-empty");
    let p = remaining.swap_remove(slot);
    let pattern = &compiled.patterns[p];
    for args in target.candidates(pattern) {
        if let Some(fresh) = bind(pattern, args, binding) {
            if search(compiled, target, remaining, binding) {
                return true;
            }
            unbind(&fresh, binding);
        }
    }
    remaining.push(p);
    let last = remaining.len() - 1;
    remaining.swap(slot, last);
    false
}

/// General θ-subsumption by backtracking; worst-case exponential.
pub fn subsumes_general(phi: &Clause, psi: &Clause) -> Option<Substitution> {
    let compiled = Compiled::new(phi.literals());
    let target = Target::new(psi);
    let mut binding = vec![None; compiled.vars.len()];
    let mut remaining: Vec<usize> = (0..compiled.patterns.len()).collect();
    search(&compiled, &target, &mut remaining, &mut binding)
        .then(|| compiled.substitution(&binding))
}

/// Guard-anchored enumeration shared by the k-guarded checkers.
///
/// Calls `visit` with every complete binding for which the whole hypothesis
/// lands inside `psi`, in anchor order (guard literal by guard literal, `psi`
/// literals in input order).
fn for_each_witness(
    h: &Hypothesis,
    psi: &Clause,
    mut visit: impl FnMut(Substitution) -> ControlFlow<()>,
) -> Result<()> {
    h.check_guarded()?;
    let compiled = Compiled::new(h.clause().literals());
    let target = Target::new(psi);
    let guard: Vec<usize> = h.guard().to_vec();
    let rest: Vec<usize> = (0..compiled.patterns.len())
        .filter(|i| !h.is_guard(*i))
        .collect();
    let mut binding = vec![None; compiled.vars.len()];
    let _ = anchor(&compiled, &target, &guard, &rest, &mut binding, &mut visit);
    Ok(())
}

fn anchor(
    compiled: &Compiled,
    target: &Target<'_>,
    guard: &[usize],
    rest: &[usize],
    binding: &mut Vec<Option<Term>>,
    visit: &mut impl FnMut(Substitution) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let Some((&g, tail)) = guard.split_first() else {
        return complete(compiled, target, rest, binding, visit);
    };
    let pattern = &compiled.patterns[g];
    for args in target.candidates(pattern) {
        if let Some(fresh) = bind(pattern, args, binding) {
            let flow = anchor(compiled, target, tail, rest, binding, visit);
            unbind(&fresh, binding);
            flow?;
        }
    }
    ControlFlow::Continue(())
}

fn complete(
    compiled: &Compiled,
    target: &Target<'_>,
    rest: &[usize],
    binding: &mut [Option<Term>],
    visit: &mut impl FnMut(Substitution) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut open = Vec::new();
    for &p in rest {
        let pattern = &compiled.patterns[p];
        let bound = pattern.slots.iter().all(|s| match s {
            Slot::Var(v) => binding[*v].is_some(),
            Slot::Fixed(_) => true,
        });
        if bound {
            if !target
                .candidates(pattern)
                .iter()
                .any(|args| compatible(pattern, args, binding))
            {
                return ControlFlow::Continue(());
            }
        } else {
            open.push(p);
        }
    }
    if open.is_empty() {
        return visit(compiled.substitution(binding));
    }
    // Only existential variables are still open here.
    let snapshot: Vec<bool> = binding.iter().map(Option::is_some).collect();
    let found = search(compiled, target, &mut open, binding);
    let result = if found {
        visit(compiled.substitution(binding))
    } else {
        ControlFlow::Continue(())
    };
    for (b, was) in binding.iter_mut().zip(snapshot) {
        if !was {
            *b = None;
        }
    }
    result
}

fn reject_existential(h: &Hypothesis) -> Result<()> {
    if h.existential().is_empty() {
        Ok(())
    } else {
        Err(Error::Unsupported(
            "existential variables need subsumes_hypothesis".into(),
        ))
    }
}

/// Polynomial subsumption check for a k-guarded hypothesis without
/// existential variables. Returns the first witness in anchor order.
pub fn subsumes_k_guarded(h: &Hypothesis, psi: &Clause) -> Result<Option<Substitution>> {
    reject_existential(h)?;
    subsumes_hypothesis(h, psi)
}

/// Like [`subsumes_k_guarded`] but also accepts existential head variables,
/// which are matched by a backtracking extension of each guard anchor.
pub fn subsumes_hypothesis(h: &Hypothesis, psi: &Clause) -> Result<Option<Substitution>> {
    let mut found = None;
    for_each_witness(h, psi, |theta| {
        found = Some(theta);
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Every guard-anchored θ with `h θ ⊆ psi`; at most `|psi|^k` of them.
pub fn guard_anchor_witnesses(h: &Hypothesis, psi: &Clause) -> Result<Vec<Substitution>> {
    reject_existential(h)?;
    anchored_witnesses(h, psi)
}

/// One witness per subsuming guard anchor; existential variables allowed.
pub(crate) fn anchored_witnesses(h: &Hypothesis, psi: &Clause) -> Result<Vec<Substitution>> {
    let mut all = Vec::new();
    for_each_witness(h, psi, |theta| {
        all.push(theta);
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

/// Extends `theta` so that `pattern θ' = target`, if possible.
pub fn match_literal(
    pattern: &Literal,
    target: &Literal,
    theta: &Substitution,
) -> Option<Substitution> {
    if pattern.polarity() != target.polarity()
        || pattern.relation() != target.relation()
        || pattern.arity() != target.arity()
    {
        return None;
    }
    let mut out = theta.clone();
    for (p, t) in pattern.args().iter().zip(target.args()) {
        match p {
            Term::Const(_) if p != t => return None,
            Term::Const(_) => {}
            Term::Var(v) => match out.get(v) {
                Some(bound) if bound != t => return None,
                Some(_) => {}
                None => {
                    out.bind(v.clone(), t.clone());
                }
            },
        }
    }
    Some(out)
}
