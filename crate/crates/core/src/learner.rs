//! Guarded clause learning from straight positive examples.
//!
//! The probe clause is the first positive example (after deduplication and
//! pruning). Every literal, or for k-guards every set of at most `k` literals,
//! of the probe is tried as a guard in order: the guard is replaced by its
//! lgig and further probe literals are added through their lgig maps. Because
//! the positive examples are straight, the guard has exactly one anchor in
//! each of them, so adding a literal never interferes with another.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lgig::{rows_of, GuardSpec, Induced, MapSlot};
use crate::model::{Clause, Hypothesis, Instance, Literal, Mode, Substitution, Term};
use crate::subsumption::{anchored_witnesses, match_literal, subsumes_hypothesis};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LearnStats {
    pub guards_tried: usize,
    /// Per-example checks of a candidate literal against the positive examples.
    pub positive_checks: usize,
    /// Hypothesis-against-negative-example subsumption checks.
    pub negative_checks: usize,
}

impl LearnStats {
    pub fn subsumption_checks(&self) -> usize {
        self.positive_checks + self.negative_checks
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InconsistentCause {
    /// No signed relation name occurs in every positive example.
    NoCommonRelation,
    /// Every guard candidate was tried and rejected.
    AllGuardsRejected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Solution(Hypothesis),
    Inconsistent(InconsistentCause),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LearnResult {
    pub outcome: Outcome,
    pub stats: LearnStats,
}

impl LearnResult {
    pub fn solution(&self) -> Option<&Hypothesis> {
        match &self.outcome {
            Outcome::Solution(h) => Some(h),
            Outcome::Inconsistent(_) => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.solution().is_some()
    }

    pub fn guard_tried_count(&self) -> usize {
        self.stats.guards_tried
    }
}

/// The maximal lgig-guarded solutions, one per accepted guard candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSet {
    pub solutions: Vec<Hypothesis>,
    pub stats: LearnStats,
    pub cause: Option<InconsistentCause>,
}

/// Restricts every positive example to the signed relation names occurring
/// in all of them.
pub fn prune_relations(
    positives: &[Clause],
) -> std::result::Result<Vec<Clause>, InconsistentCause> {
    let Some((first, rest)) = positives.split_first() else {
        return Err(InconsistentCause::NoCommonRelation);
    };
    let mut common = first.signed_names();
    for c in rest {
        let names = c.signed_names();
        common.retain(|n| names.contains(n));
    }
    positives
        .iter()
        .map(|c| c.retain(|l| common.contains(&l.signed())))
        .collect::<Option<Vec<_>>>()
        .ok_or(InconsistentCause::NoCommonRelation)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strategy {
    /// Stop at the first accepted guard, including the guard-only early return.
    FirstSolution,
    /// Build the maximal hypothesis for every guard.
    Canonical,
}

struct Run {
    solutions: Vec<Hypothesis>,
    stats: LearnStats,
    cause: Option<InconsistentCause>,
}

fn rejects_negatives(h: &Hypothesis, negatives: &[Clause], stats: &mut LearnStats) -> Result<bool> {
    for neg in negatives {
        stats.negative_checks += 1;
        if subsumes_hypothesis(h, neg)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn run(instance: &Instance, strategy: Strategy) -> Result<Run> {
    if let Some(c) = instance.positives().iter().find(|c| !c.is_straight()) {
        return Err(Error::NotStraight(c.to_string()));
    }
    let mode = instance.mode();
    if mode == Mode::DatalogPm {
        if let Some(c) = instance.positives().iter().find(|c| !c.is_horn()) {
            return Err(Error::NotHorn(c.to_string()));
        }
    }
    let mut stats = LearnStats::default();

    let mut seen = HashSet::new();
    let deduped: Vec<Clause> = instance
        .positives()
        .iter()
        .filter(|c| seen.insert(*c))
        .cloned()
        .collect();
    let positives = match prune_relations(&deduped) {
        Ok(p) => p,
        Err(cause) => {
            return Ok(Run {
                solutions: vec![],
                stats,
                cause: Some(cause),
            })
        }
    };
    let probe = &positives[0];
    let k = instance.k();
    if k > probe.len() {
        return Err(Error::GuardWidthTooLarge {
            k,
            size: probe.len(),
        });
    }
    let rows: Vec<Vec<&[Term]>> = probe
        .iter()
        .map(|l| rows_of(&l.signed(), &positives))
        .collect::<Result<_>>()?;

    let eligible: Vec<usize> = (0..probe.len())
        .filter(|&i| mode == Mode::Guarded || probe.literals()[i].polarity().is_negative())
        .collect();
    let mut candidates: Vec<Vec<usize>> = (1..=k)
        .flat_map(|size| eligible.iter().copied().combinations(size))
        .collect();
    candidates.sort();

    let mut solutions = Vec::new();
    for guard in candidates {
        stats.guards_tried += 1;
        let spec = GuardSpec::from_literals(guard.iter().map(|&i| &probe.literals()[i]))?;
        let occurrences = (0..positives.len())
            .map(|c| {
                guard
                    .iter()
                    .flat_map(|&g| rows[g][c].iter().cloned())
                    .collect()
            })
            .collect();
        let induced = Induced::compute(spec, occurrences)?;
        let witnesses: Vec<Vec<Term>> = (0..positives.len()).map(|c| induced.witness(c)).collect();
        let guard_idx: Vec<usize> = (0..guard.len()).collect();

        let mut literals = induced.lgig.literals();
        if strategy == Strategy::FirstSolution {
            let h = Hypothesis::new(
                Clause::new(literals.clone())?,
                guard_idx.clone(),
                BTreeSet::new(),
            )?;
            if rejects_negatives(&h, instance.negatives(), &mut stats)? {
                solutions.push(h);
                break;
            }
        }

        let mut existential = BTreeSet::new();
        let mut next_fresh = 0;
        for (li, lit) in probe.iter().enumerate() {
            if guard.contains(&li) {
                continue;
            }
            let allow_fresh = mode == Mode::DatalogPm && !lit.polarity().is_negative();
            let Some(slots) = induced.map_rows(&rows[li], allow_fresh)? else {
                continue;
            };
            // H ∪ {μ(L)} ⊢ E⁺ reduces to μ(L) landing in every example under
            // that example's unique guard anchor.
            let mut covered = true;
            for (witness, row) in witnesses.iter().zip(&rows[li]) {
                stats.positive_checks += 1;
                if !lands(&slots, witness, row) {
                    covered = false;
                    break;
                }
            }
            if covered {
                let mapped = induced.realize(lit, &slots, &mut next_fresh);
                existential.extend(mapped.existential);
                literals.push(mapped.literal);
            }
        }
        let h = Hypothesis::new(Clause::new(literals)?, guard_idx, existential)?;
        if rejects_negatives(&h, instance.negatives(), &mut stats)? {
            solutions.push(h);
            if strategy == Strategy::FirstSolution {
                break;
            }
        }
    }
    let cause = solutions
        .is_empty()
        .then_some(InconsistentCause::AllGuardsRejected);
    Ok(Run {
        solutions,
        stats,
        cause,
    })
}

fn lands(slots: &[MapSlot], witness: &[Term], row: &[Term]) -> bool {
    slots.iter().zip(row).all(|(slot, t)| match slot {
        MapSlot::Guard(id) => &witness[*id] == t,
        // Every fresh variable occurs once, so it matches anything.
        MapSlot::Fresh => true,
    })
}

fn first_solution(instance: &Instance) -> Result<LearnResult> {
    let run = run(instance, Strategy::FirstSolution)?;
    let outcome = match run.solutions.into_iter().next() {
        Some(h) => Outcome::Solution(h),
        None => Outcome::Inconsistent(run.cause.unwrap_or(InconsistentCause::AllGuardsRejected)),
    };
    Ok(LearnResult {
        outcome,
        stats: run.stats,
    })
}

/// Decides consistency for guarded hypotheses (k = 1) and returns the first
/// solution in probe-literal order.
pub fn learn(instance: &Instance) -> Result<LearnResult> {
    if instance.k() != 1 || instance.mode() != Mode::Guarded {
        return Err(Error::Unsupported(
            "learn expects k = 1 in guarded mode; use learn_k_guarded or learn_datalog_pm".into(),
        ));
    }
    first_solution(instance)
}

/// Like [`learn`], with guards of up to `instance.k()` merged literals.
pub fn learn_k_guarded(instance: &Instance) -> Result<LearnResult> {
    if instance.mode() != Mode::Guarded {
        return Err(Error::Unsupported(
            "learn_k_guarded expects guarded mode".into(),
        ));
    }
    first_solution(instance)
}

/// Guarded Datalog± rules: guards over negative literals, head positions
/// without a shield become existential variables.
pub fn learn_datalog_pm(instance: &Instance) -> Result<LearnResult> {
    if instance.mode() != Mode::DatalogPm {
        return Err(Error::Unsupported(
            "learn_datalog_pm expects datalog± mode".into(),
        ));
    }
    first_solution(instance)
}

/// All canonical solutions, in guard-candidate order.
pub fn enumerate_canonical(instance: &Instance) -> Result<CanonicalSet> {
    let run = run(instance, Strategy::Canonical)?;
    Ok(CanonicalSet {
        solutions: run.solutions,
        stats: run.stats,
        cause: run.cause,
    })
}

/// `h` subsumes every positive and no negative example.
pub fn is_solution(h: &Hypothesis, instance: &Instance) -> Result<bool> {
    for pos in instance.positives() {
        if subsumes_hypothesis(h, pos)?.is_none() {
            return Ok(false);
        }
    }
    for neg in instance.negatives() {
        if subsumes_hypothesis(h, neg)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sub-hypothesis of `h` made of the literals at `indices`, which must
/// include the guard.
fn restrict(h: &Hypothesis, indices: &BTreeSet<usize>) -> Result<Hypothesis> {
    let literals: Vec<Literal> = indices
        .iter()
        .map(|&i| h.clause().literals()[i].clone())
        .collect();
    let guard = h
        .guard()
        .iter()
        .map(|g| indices.iter().position(|i| i == g).expect("guard kept"))
        .collect();
    let clause = Clause::new(literals)?;
    let vars = clause.vars();
    let existential = h
        .existential()
        .iter()
        .filter(|v| vars.contains(*v))
        .cloned()
        .collect();
    Hypothesis::new(clause, guard, existential)
}

/// `lit θ` cannot be matched into `neg`, however its existential variables
/// are chosen.
fn blocks(lit: &Literal, theta: &Substitution, neg: &Clause) -> bool {
    !neg.iter().any(|t| match_literal(lit, t, theta).is_some())
}

/// Shrinks a solution to a sub-solution with the same guard holding at most
/// one blocking literal per guard anchor in each negative example.
pub fn shrink_solution(h: &Hypothesis, instance: &Instance) -> Result<Hypothesis> {
    if !is_solution(h, instance)? {
        return Err(Error::NotASolution(h.to_string()));
    }
    let mut kept: BTreeSet<usize> = h.guard().iter().copied().collect();
    for neg in instance.negatives() {
        let current = restrict(h, &kept)?;
        let witnesses = anchored_witnesses(&current, neg)?;
        let mut added: Vec<usize> = Vec::new();
        for theta in witnesses {
            let guard_part = without(&theta, h);
            let literal = |i: usize| &h.clause().literals()[i];
            if added.iter().any(|&i| blocks(literal(i), &guard_part, neg)) {
                continue;
            }
            let blocker = (0..h.len())
                .filter(|i| !kept.contains(i))
                .find(|&i| blocks(literal(i), &guard_part, neg))
                .ok_or_else(|| {
                    Error::NotASolution(format!("no literal of {h} blocks {theta} on {neg}"))
                })?;
            added.push(blocker);
        }
        kept.extend(added);
    }
    restrict(h, &kept)
}

fn without(theta: &Substitution, h: &Hypothesis) -> Substitution {
    let mut out = Substitution::new();
    for (v, t) in theta.iter() {
        if !h.existential().contains(v) {
            out.bind(v.clone(), t.clone());
        }
    }
    out
}
