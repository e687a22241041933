//! Ground truth for small instances: an exhaustive consistency oracle, the
//! hitting-string reduction and instance generators.
//!
//! The oracle enumerates guard relation tuples and equality patterns over the
//! merged guard positions. For a fixed guard, pattern and choice of guard
//! anchor in every positive example, the candidate literals compatible with
//! all anchors form one maximal clause `M`: any solution using those anchors
//! is a subset of `M`, and a subset not subsuming a negative example implies
//! the same for `M`. So checking every `M` is exhaustive, and a solution is
//! then reduced by deleting literals.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lgig::lgig_var;
use crate::model::{
    Clause, Hypothesis, Instance, Literal, Mode, Polarity, SignedRelation, Symbol, Term,
};
use crate::subsumption::subsumes_general;

pub const DEFAULT_CEILING: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Cap on hypothesis size, on top of `k + Σ|E⁻|`.
    pub max_hypothesis_size: Option<usize>,
    /// Maximal number of enumerated candidates before giving up.
    pub ceiling: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_hypothesis_size: None,
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl OracleConfig {
    pub fn with_max_size(max: usize) -> Self {
        Self {
            max_hypothesis_size: Some(max),
            ..Self::default()
        }
    }

    fn bound(&self, instance: &Instance) -> usize {
        let bound = instance.k() + instance.negatives().iter().map(Clause::len).sum::<usize>();
        self.max_hypothesis_size.map_or(bound, |cap| cap.min(bound))
    }
}

/// Restricted growth strings of length `n`, one per set partition.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=next {
            prefix.push(b);
            grow(prefix, n, max.max(b), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::with_capacity(n), n, 0, &mut out);
    out
}

/// A guard with variable ids in place of terms.
struct GuardShape {
    components: Vec<(SignedRelation, Vec<usize>)>,
    var_count: usize,
}

impl GuardShape {
    fn literals(&self) -> Vec<Literal> {
        self.components
            .iter()
            .map(|(name, ids)| {
                Literal::new(
                    name.polarity,
                    name.relation.clone(),
                    ids.iter().map(|&v| Term::Var(lgig_var(v))).collect(),
                )
            })
            .collect()
    }

    /// Every assignment of the guard variables placing the guard inside `clause`.
    fn anchors(&self, clause: &Clause) -> Vec<Vec<Term>> {
        fn extend(
            shape: &GuardShape,
            clause: &Clause,
            at: usize,
            binding: &mut Vec<Option<Term>>,
            out: &mut Vec<Vec<Term>>,
        ) {
            let Some((name, ids)) = shape.components.get(at) else {
                out.push(
                    binding
                        .iter()
                        .map(|t| t.clone().expect("guard binds all"))
                        .collect(),
                );
                return;
            };
            for lit in clause
                .iter()
                .filter(|l| l.has_signed(name) && l.arity() == ids.len())
            {
                let saved = binding.clone();
                let ok = ids.iter().zip(lit.args()).all(|(&v, t)| match &binding[v] {
                    Some(b) => b == t,
                    None => {
                        binding[v] = Some(t.clone());
                        true
                    }
                });
                if ok {
                    extend(shape, clause, at + 1, binding, out);
                }
                *binding = saved;
            }
        }
        let mut out = Vec::new();
        extend(self, clause, 0, &mut vec![None; self.var_count], &mut out);
        out
    }
}

/// All literals over `vars` whose image under every assignment lies in the
/// matching clause. Assignments map variable ids to terms.
fn maximal_literals(vars: &[Symbol], clauses: &[Clause], assignments: &[&[Term]]) -> Vec<Literal> {
    let mut out: Vec<Literal> = Vec::new();
    for lit in clauses[0].iter() {
        let preimages: Vec<Vec<usize>> = lit
            .args()
            .iter()
            .map(|t| {
                (0..vars.len())
                    .filter(|&v| &assignments[0][v] == t)
                    .collect()
            })
            .collect();
        if preimages.iter().any(Vec::is_empty) {
            continue;
        }
        for choice in preimages
            .iter()
            .map(|p| p.iter().copied())
            .multi_cartesian_product()
        {
            let lands = clauses.iter().zip(assignments).skip(1).all(|(c, theta)| {
                c.iter().any(|t| {
                    t.polarity() == lit.polarity()
                        && t.relation() == lit.relation()
                        && t.arity() == lit.arity()
                        && choice.iter().zip(t.args()).all(|(&v, a)| &theta[v] == a)
                })
            });
            if lands {
                let candidate = Literal::new(
                    lit.polarity(),
                    lit.relation().clone(),
                    choice.iter().map(|&v| Term::Var(vars[v].clone())).collect(),
                );
                if !out.contains(&candidate) {
                    out.push(candidate);
                }
            }
        }
        // Zero-arity literals have exactly one (empty) choice.
        if lit.arity() == 0 && !out.contains(lit) && clauses.iter().all(|c| c.contains(lit)) {
            out.push(lit.clone());
        }
    }
    out
}

fn subsumes_none(clause: &Clause, negatives: &[Clause]) -> bool {
    negatives
        .iter()
        .all(|n| subsumes_general(clause, n).is_none())
}

/// Deletes literals outside `keep` while the clause stays clear of the
/// negatives. Positives stay subsumed since subsets keep the same anchors.
fn minimize(literals: &[Literal], keep: usize, negatives: &[Clause]) -> Vec<Literal> {
    let mut current = literals.to_vec();
    let mut i = keep;
    while i < current.len() {
        let mut trial = current.clone();
        trial.remove(i);
        if !trial.is_empty()
            && subsumes_none(&Clause::new(trial.clone()).expect("non-empty"), negatives)
        {
            current = trial;
        } else {
            i += 1;
        }
    }
    current
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc.saturating_mul(n as u128 - i) / (i + 1))
}

/// Smallest-first subset search below `bound` when deletion gets stuck above it.
fn bounded_subset(
    literals: &[Literal],
    keep: usize,
    bound: usize,
    negatives: &[Clause],
    ceiling: u128,
) -> Result<Option<Vec<Literal>>> {
    let rest = literals.len() - keep;
    let budget = bound.saturating_sub(keep).min(rest);
    let size: u128 = (0..=budget)
        .map(|s| binomial(rest, s))
        .fold(0, u128::saturating_add);
    if size > ceiling {
        return Err(Error::ResourceCap { size, ceiling });
    }
    for s in 0..=budget {
        for extra in (keep..literals.len()).combinations(s) {
            let mut chosen = literals[..keep].to_vec();
            chosen.extend(extra.iter().map(|&i| literals[i].clone()));
            if subsumes_none(&Clause::new(chosen.clone())?, negatives) {
                return Ok(Some(chosen));
            }
        }
    }
    Ok(None)
}

struct Candidate {
    shape: GuardShape,
    anchors: Vec<Vec<Vec<Term>>>,
}

fn candidates(instance: &Instance) -> Result<(Vec<Candidate>, u128)> {
    let positives = instance.positives();
    let mut common = positives[0].signed_names();
    for c in &positives[1..] {
        let names = c.signed_names();
        common.retain(|n| names.contains(n));
    }
    let arity = |name: &SignedRelation| {
        instance
            .arity(&name.relation)
            .expect("arity table covers examples")
    };
    let names: Vec<SignedRelation> = common.into_iter().collect();
    let mut out = Vec::new();
    let mut space: u128 = 0;
    for width in 1..=instance.k().min(names.len()) {
        for tuple in names.iter().combinations(width) {
            let merged: usize = tuple.iter().map(|n| arity(n)).sum();
            for pattern in set_partitions(merged) {
                let mut offset = 0;
                let components = tuple
                    .iter()
                    .map(|n| {
                        let ids = pattern[offset..offset + arity(n)].to_vec();
                        offset += arity(n);
                        ((*n).clone(), ids)
                    })
                    .collect();
                let shape = GuardShape {
                    components,
                    var_count: pattern.iter().max().map_or(0, |m| m + 1),
                };
                let anchors: Vec<_> = positives.iter().map(|c| shape.anchors(c)).collect();
                let count = anchors
                    .iter()
                    .fold(1u128, |acc, a| acc.saturating_mul(a.len() as u128));
                space = space.saturating_add(count);
                if count > 0 {
                    out.push(Candidate { shape, anchors });
                }
            }
        }
    }
    Ok((out, space))
}

fn guarded_search(
    instance: &Instance,
    config: &OracleConfig,
    first_only: bool,
) -> Result<Vec<Hypothesis>> {
    if instance.mode() != Mode::Guarded {
        return Err(Error::Unsupported(
            "the oracle covers guarded mode only".into(),
        ));
    }
    let (candidates, space) = candidates(instance)?;
    if space > config.ceiling {
        return Err(Error::ResourceCap {
            size: space,
            ceiling: config.ceiling,
        });
    }
    let bound = config.bound(instance);
    let positives = instance.positives();
    let negatives = instance.negatives();
    let mut found: Vec<Hypothesis> = Vec::new();
    let mut seen: HashSet<Clause> = HashSet::new();
    for cand in &candidates {
        let guard = cand.shape.literals();
        let keep = guard.len();
        if keep > bound {
            continue;
        }
        let vars: Vec<Symbol> = (0..cand.shape.var_count).map(lgig_var).collect();
        for pick in cand
            .anchors
            .iter()
            .map(|a| 0..a.len())
            .multi_cartesian_product()
        {
            let assignment: Vec<&[Term]> = pick
                .iter()
                .zip(&cand.anchors)
                .map(|(&i, a)| a[i].as_slice())
                .collect();
            let mut literals = guard.clone();
            for lit in maximal_literals(&vars, positives, &assignment) {
                if !literals.contains(&lit) {
                    literals.push(lit);
                }
            }
            let maximal = Clause::new(literals.clone())?;
            if !subsumes_none(&maximal, negatives) {
                continue;
            }
            let mut small = minimize(&literals, keep, negatives);
            if small.len() > bound {
                match bounded_subset(&literals, keep, bound, negatives, config.ceiling)? {
                    Some(s) => small = s,
                    None => continue,
                }
            }
            let mut results = vec![small];
            if !first_only {
                results.push(literals);
            }
            for lits in results {
                let clause = Clause::new(lits)?;
                if seen.insert(clause.clone()) {
                    debug_assert!(positives
                        .iter()
                        .all(|p| subsumes_general(&clause, p).is_some()));
                    found.push(Hypothesis::new(
                        clause,
                        (0..keep).collect(),
                        BTreeSet::new(),
                    )?);
                }
            }
            if first_only {
                return Ok(found);
            }
        }
    }
    Ok(found)
}

/// Exhaustive consistency check over k-guarded, constant-free hypotheses
/// whose guard relations are pairwise distinct. Returns the first solution in
/// enumeration order, reduced by literal deletion.
pub fn oracle_consistency(
    instance: &Instance,
    config: &OracleConfig,
) -> Result<Option<Hypothesis>> {
    Ok(guarded_search(instance, config, true)?.into_iter().next())
}

/// Every maximal solution together with its reduced form, deduplicated.
pub fn oracle_solutions(instance: &Instance, config: &OracleConfig) -> Result<Vec<Hypothesis>> {
    guarded_search(instance, config, false)
}

/// Stress variant ignoring guardedness: clauses over a pool of `pool`
/// variables, with every assignment of the pool into each positive example.
/// Returns the reduced solutions, deduplicated, in enumeration order.
pub fn oracle_unguarded_solutions(
    instance: &Instance,
    pool: usize,
    config: &OracleConfig,
) -> Result<Vec<Clause>> {
    let positives = instance.positives();
    let constants: Vec<Vec<Term>> = positives
        .iter()
        .map(|c| {
            c.iter()
                .flat_map(|l| l.args().iter().cloned())
                .unique()
                .collect()
        })
        .collect();
    let space = constants.iter().fold(1u128, |acc, c| {
        acc.saturating_mul((c.len() as u128).saturating_pow(pool as u32))
    });
    if space > config.ceiling {
        return Err(Error::ResourceCap {
            size: space,
            ceiling: config.ceiling,
        });
    }
    let bound = config.bound(instance);
    let vars: Vec<Symbol> = (0..pool).map(lgig_var).collect();
    let per_clause: Vec<Vec<Vec<Term>>> = constants
        .iter()
        .map(|c| {
            (0..pool)
                .map(|_| c.iter().cloned())
                .multi_cartesian_product()
                .collect::<Vec<_>>()
        })
        .map(|v| if v.is_empty() { vec![vec![]] } else { v })
        .collect();
    let mut seen_maximal: HashSet<Clause> = HashSet::new();
    let mut seen: HashSet<Clause> = HashSet::new();
    let mut out = Vec::new();
    for pick in per_clause
        .iter()
        .map(|a| 0..a.len())
        .multi_cartesian_product()
    {
        let assignment: Vec<&[Term]> = pick
            .iter()
            .zip(&per_clause)
            .map(|(&i, a)| a[i].as_slice())
            .collect();
        let literals = maximal_literals(&vars, positives, &assignment);
        let Ok(maximal) = Clause::new(literals.clone()) else {
            continue;
        };
        if !seen_maximal.insert(maximal.clone()) || !subsumes_none(&maximal, instance.negatives()) {
            continue;
        }
        let small = minimize(&literals, 0, instance.negatives());
        if small.len() > bound {
            continue;
        }
        let clause = Clause::new(small)?;
        if seen.insert(clause.clone()) {
            out.push(clause);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingStringInstance {
    n: usize,
    strings: Vec<String>,
}

impl HittingStringInstance {
    pub fn new(n: usize, strings: Vec<String>) -> Result<Self> {
        for s in &strings {
            if s.chars().count() != n {
                return Err(Error::InvalidHittingInstance(format!(
                    "{s:?} does not have length {n}"
                )));
            }
            if let Some(c) = s.chars().find(|c| !matches!(c, '0' | '1' | '*')) {
                return Err(Error::InvalidHittingInstance(format!(
                    "symbol {c:?} in {s:?}"
                )));
            }
        }
        Ok(Self { n, strings })
    }

    /// Takes the length from the first string.
    pub fn from_strings<S: Into<String>>(strings: impl IntoIterator<Item = S>) -> Result<Self> {
        let strings: Vec<String> = strings.into_iter().map(Into::into).collect();
        let n = strings.first().map_or(0, |s| s.chars().count());
        Self::new(n, strings)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.strings.len()
    }

    pub fn strings(&self) -> &[String] {
        &self.strings
    }

    /// `x` agrees with every string in some position; `*` agrees with nothing.
    pub fn is_hit_by(&self, x: &str) -> bool {
        self.strings
            .iter()
            .all(|s| s.chars().zip(x.chars()).any(|(a, b)| a != '*' && a == b))
    }
}

pub const HITTING_N_CEILING: usize = 24;

/// Lexicographically first binary hitting string.
pub fn brute_force_hitting(hs: &HittingStringInstance) -> Result<Option<String>> {
    if hs.n > HITTING_N_CEILING {
        return Err(Error::ResourceCap {
            size: 1u128 << hs.n.min(127),
            ceiling: 1u128 << HITTING_N_CEILING,
        });
    }
    Ok((0u64..1 << hs.n)
        .map(|bits| {
            (0..hs.n)
                .map(|j| {
                    if bits >> (hs.n - 1 - j) & 1 == 1 {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect::<String>()
        })
        .find(|x| hs.is_hit_by(x)))
}

/// Instance whose solvability coincides with that of `hs`. Positive examples
/// repeat relations, so only [`Instance::unrestricted`] accepts it.
pub fn gen_hitting_instance(hs: &HittingStringInstance) -> Result<Instance> {
    if hs.n == 0 || hs.strings.is_empty() {
        return Err(Error::InvalidHittingInstance(
            "need n ≥ 1 and at least one string".into(),
        ));
    }
    let n = hs.n;
    let g = |x: &str, y: &str| Literal::pos("G", &[x, y]);
    let a = |j: usize, x: &str| Literal::pos(&format!("A{j}"), &[x]);
    let b = |j: usize, x: &str| Literal::pos(&format!("B{j}"), &[x]);

    let mut positives = Vec::new();
    let mut c0 = vec![g("a", "b")];
    for j in 1..=n {
        c0.extend([a(j, "a"), b(j, "b")]);
    }
    positives.push(Clause::new(c0)?);
    for i in 1..=n {
        let mut ci = vec![g("a", "b"), g("b", "a"), a(i, "a"), b(i, "a")];
        for j in (1..=n).filter(|&j| j != i) {
            ci.extend([a(j, "a"), a(j, "b"), b(j, "a"), b(j, "b")]);
        }
        positives.push(Clause::new(ci)?);
    }

    let mut negatives = Vec::new();
    let d0 = (1..=n)
        .flat_map(|j| [a(j, "a"), a(j, "b"), b(j, "a"), b(j, "b")])
        .collect();
    negatives.push(Clause::new(d0)?);
    for i in 1..=n {
        let mut di = vec![g("a", "b")];
        for j in (1..=n).filter(|&j| j != i) {
            di.extend([a(j, "a"), b(j, "b")]);
        }
        negatives.push(Clause::new(di)?);
    }
    for s in &hs.strings {
        let sym: Vec<char> = s.chars().collect();
        let mut ni = vec![g("a", "b")];
        ni.extend((1..=n).filter(|&j| sym[j - 1] == '1').map(|j| b(j, "b")));
        ni.extend((1..=n).filter(|&j| sym[j - 1] == '0').map(|j| a(j, "a")));
        for j in (1..=n).filter(|&j| sym[j - 1] == '*') {
            ni.extend([a(j, "a"), b(j, "b")]);
        }
        negatives.push(Clause::new(ni)?);
    }
    Instance::unrestricted(positives, negatives, 1, Mode::Guarded)
}

/// Reads the string encoded by a solution of the form `G(x,y) ∨ ⋁ Γ_j`:
/// `1` where `A_j(x)` occurs, `0` where `B_j(y)` occurs.
pub fn decode_hitting_solution(clause: &Clause, n: usize) -> Option<String> {
    let g = clause.iter().find(|l| &**l.relation() == "G")?;
    let (x, y) = (&g.args()[0], &g.args()[1]);
    if x == y || clause.iter().filter(|l| &**l.relation() == "G").count() != 1 {
        return None;
    }
    let mut out = String::with_capacity(n);
    for j in 1..=n {
        let has = |rel: String, v: &Term| {
            clause
                .iter()
                .any(|l| **l.relation() == *rel && &l.args()[0] == v)
        };
        let (aj, bj) = (has(format!("A{j}"), x), has(format!("B{j}"), y));
        match (aj, bj) {
            (true, false) => out.push('1'),
            (false, true) => out.push('0'),
            _ => return None,
        }
    }
    (clause.len() == n + 1).then_some(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    pub relation_count: usize,
    pub max_arity: usize,
    pub clause_count_pos: usize,
    pub clause_count_neg: usize,
    pub constant_count: usize,
    pub literals_per_clause: usize,
    pub seed: u64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        Self {
            relation_count: 3,
            max_arity: 3,
            clause_count_pos: 3,
            clause_count_neg: 3,
            constant_count: 4,
            literals_per_clause: 4,
            seed: 0,
        }
    }
}

impl GeneratorParams {
    fn validate(&self) -> Result<()> {
        let fields = [
            ("relation_count", self.relation_count),
            ("max_arity", self.max_arity),
            ("clause_count_pos", self.clause_count_pos),
            ("clause_count_neg", self.clause_count_neg),
            ("constant_count", self.constant_count),
            ("literals_per_clause", self.literals_per_clause),
        ];
        match fields.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidParams(format!("{name} must be at least 1"))),
            None => Ok(()),
        }
    }
}

fn random_literal(
    rng: &mut ChaCha8Rng,
    name: &SignedRelation,
    arity: usize,
    constants: &[Term],
) -> Literal {
    let args = (0..arity)
        .map(|_| constants.choose(rng).expect("constants").clone())
        .collect();
    Literal::new(name.polarity, name.relation.clone(), args)
}

/// Seeded random instance with straight positive examples. One or two
/// signed relations occur in every positive example, and about half of the
/// negative examples are perturbed copies of positives, so that both
/// outcomes occur.
pub fn random_instance(p: &GeneratorParams) -> Result<Instance> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let relations: Vec<(Symbol, usize)> = (0..p.relation_count)
        .map(|i| {
            (
                Symbol::from(format!("R{i}")),
                rng.gen_range(1..=p.max_arity),
            )
        })
        .collect();
    let constants: Vec<Term> = (0..p.constant_count)
        .map(|i| Term::Const(format!("c{i}").into()))
        .collect();
    let names: Vec<(SignedRelation, usize)> = relations
        .iter()
        .flat_map(|(r, a)| {
            [Polarity::Negative, Polarity::Positive].map(|polarity| {
                (
                    SignedRelation {
                        polarity,
                        relation: r.clone(),
                    },
                    *a,
                )
            })
        })
        .collect();

    let max_len = p.literals_per_clause.min(names.len());
    let core_len = rng.gen_range(1..=max_len.min(2));
    let core: Vec<(SignedRelation, usize)> =
        names.choose_multiple(&mut rng, core_len).cloned().collect();
    let others: Vec<(SignedRelation, usize)> = names
        .iter()
        .filter(|n| !core.contains(n))
        .cloned()
        .collect();
    let positives: Vec<Clause> = (0..p.clause_count_pos)
        .map(|_| {
            let len = rng.gen_range(core_len..=max_len);
            let mut chosen = core.clone();
            chosen.extend(others.choose_multiple(&mut rng, len - core_len).cloned());
            chosen.shuffle(&mut rng);
            let literals = chosen
                .iter()
                .map(|(n, a)| random_literal(&mut rng, n, *a, &constants))
                .collect();
            Clause::new(literals)
        })
        .collect::<Result<_>>()?;

    let negatives: Vec<Clause> = (0..p.clause_count_neg)
        .map(|_| {
            let literals: Vec<Literal> = if rng.gen_bool(0.5) {
                let base = positives.choose(&mut rng).expect("positives");
                let renaming: Vec<Term> = (0..constants.len())
                    .map(|_| constants.choose(&mut rng).expect("c").clone())
                    .collect();
                let mut lits: Vec<Literal> = base
                    .iter()
                    .filter(|_| base.len() == 1 || rng.gen_bool(0.8))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .map(|l| {
                        let args = l
                            .args()
                            .iter()
                            .map(|t| {
                                if rng.gen_bool(0.5) {
                                    let idx = constants
                                        .iter()
                                        .position(|c| c == t)
                                        .expect("known constant");
                                    renaming[idx].clone()
                                } else {
                                    t.clone()
                                }
                            })
                            .collect();
                        Literal::new(l.polarity(), l.relation().clone(), args)
                    })
                    .collect();
                if lits.is_empty() || rng.gen_bool(0.3) {
                    let (n, a) = names.choose(&mut rng).expect("names");
                    lits.push(random_literal(&mut rng, n, *a, &constants));
                }
                lits
            } else {
                let len = rng.gen_range(1..=p.literals_per_clause);
                (0..len)
                    .map(|_| {
                        let (n, a) = names.choose(&mut rng).expect("names");
                        random_literal(&mut rng, n, *a, &constants)
                    })
                    .collect()
            };
            Clause::new(literals)
        })
        .collect::<Result<_>>()?;
    Instance::new(positives, negatives, 1, Mode::Guarded)
}

/// Straight instance for scaling runs: `relations` relations of arity
/// `arity`, `clauses` examples split evenly between the two sides.
///
/// Relations come in groups of five whose literals share one argument tuple
/// per example (each relation reading it in a rotated order), so every guard
/// maps its whole group. A `Head` literal on the last group separates the
/// positives from the negatives, which makes the last group the only source
/// of accepted guards.
pub fn scaling_instance(
    relations: usize,
    arity: usize,
    clauses: usize,
    seed: u64,
) -> Result<Instance> {
    if relations == 0 || arity == 0 || clauses < 2 {
        return Err(Error::InvalidParams(
            "need relations, arity ≥ 1 and at least two clauses".into(),
        ));
    }
    const GROUP: usize = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = relations.div_ceil(GROUP);
    let pool: Vec<Term> = (0..clauses * groups * arity)
        .map(|i| Term::Const(format!("c{i}").into()))
        .collect();
    let rels: Vec<Symbol> = (0..relations)
        .map(|i| Symbol::from(format!("R{i}")))
        .collect();
    let head = Symbol::from("Head");
    let example = |rng: &mut ChaCha8Rng, positive: bool| -> Result<Clause> {
        let tuples: Vec<Vec<Term>> = (0..groups)
            .map(|_| pool.choose_multiple(rng, arity).cloned().collect())
            .collect();
        let mut lits: Vec<Literal> = rels
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let tuple = &tuples[i / GROUP];
                let args = (0..arity).map(|j| tuple[(j + i) % arity].clone()).collect();
                Literal::new(Polarity::Negative, r.clone(), args)
            })
            .collect();
        let anchor = &tuples[groups - 1][0];
        let target = if positive {
            anchor.clone()
        } else {
            loop {
                let t = pool.choose(rng).expect("pool").clone();
                if &t != anchor {
                    break t;
                }
            }
        };
        lits.push(Literal::new(Polarity::Positive, head.clone(), vec![target]));
        Clause::new(lits)
    };
    let pos_count = clauses / 2;
    let positives = (0..pos_count)
        .map(|_| example(&mut rng, true))
        .collect::<Result<_>>()?;
    let negatives = (pos_count..clauses)
        .map(|_| example(&mut rng, false))
        .collect::<Result<_>>()?;
    Instance::new(positives, negatives, 1, Mode::Guarded)
}
