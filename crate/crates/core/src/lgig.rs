//! Relative shields and least general induced guards (lgigs).
//!
//! A guard is described by a [`GuardSpec`]: one signed relation name for a
//! plain guard, or several for a k-guard, in which case the components are
//! treated as a single merged literal whose argument list is the
//! concatenation of theirs. All positions here are 1-based merged positions.
//!
//! Over a set of straight ground clauses the lgig puts the same variable at
//! two positions exactly when those positions hold equal terms in every
//! clause. Once the lgig is fixed, the relative shields determine the only
//! way a literal of the examples can be rewritten over guard variables (the
//! lgig map).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{Clause, Hypothesis, Literal, SignedRelation, Substitution, Symbol, Term};

/// Signed relation names of a (possibly merged) guard, with their arities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GuardSpec {
    components: Vec<SignedRelation>,
    arities: Vec<usize>,
}

impl GuardSpec {
    pub fn new(components: Vec<(SignedRelation, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidGuard("no guard components".into()));
        }
        if !components.iter().map(|(s, _)| s).all_unique() {
            return Err(Error::InvalidGuard(format!(
                "repeated component in {}",
                components.iter().map(|(s, _)| s).join(", ")
            )));
        }
        let (components, arities) = components.into_iter().unzip();
        Ok(GuardSpec {
            components,
            arities,
        })
    }

    pub fn single(name: SignedRelation, arity: usize) -> Self {
        GuardSpec {
            components: vec![name],
            arities: vec![arity],
        }
    }

    pub fn from_literals<'a>(literals: impl IntoIterator<Item = &'a Literal>) -> Result<Self> {
        Self::new(
            literals
                .into_iter()
                .map(|l| (l.signed(), l.arity()))
                .collect(),
        )
    }

    pub fn components(&self) -> &[SignedRelation] {
        &self.components
    }

    pub fn arities(&self) -> &[usize] {
        &self.arities
    }

    pub fn width(&self) -> usize {
        self.components.len()
    }

    pub fn merged_arity(&self) -> usize {
        self.arities.iter().sum()
    }

    /// Concatenated arguments of the guard components in `clause`.
    pub fn occurrence(&self, clause: &Clause) -> Result<Vec<Term>> {
        let mut merged = Vec::with_capacity(self.merged_arity());
        for (name, &arity) in self.components.iter().zip(&self.arities) {
            let lit = unique_occurrence(clause, name)?;
            if lit.arity() != arity {
                return Err(Error::ArityMismatch {
                    relation: name.relation.to_string(),
                    expected: arity,
                    found: lit.arity(),
                });
            }
            merged.extend_from_slice(lit.args());
        }
        Ok(merged)
    }
}

impl fmt::Display for GuardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.components.iter().join(", "))
    }
}

/// The single occurrence of `name` in a straight clause.
pub(crate) fn unique_occurrence<'c>(
    clause: &'c Clause,
    name: &SignedRelation,
) -> Result<&'c Literal> {
    let mut found = clause.iter().filter(|l| l.has_signed(name));
    let first = found.next().ok_or_else(|| Error::MissingRelation {
        relation: name.to_string(),
        clause: clause.to_string(),
    })?;
    if found.next().is_some() {
        return Err(Error::AmbiguousOccurrence(name.to_string()));
    }
    Ok(first)
}

/// A set of 1-based merged guard positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ShieldSet(BTreeSet<usize>);

impl ShieldSet {
    pub fn positions(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.contains(&position)
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn intersect(&self, other: &ShieldSet) -> ShieldSet {
        ShieldSet(self.0.intersection(&other.0).copied().collect())
    }
}

impl FromIterator<usize> for ShieldSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ShieldSet(iter.into_iter().collect())
    }
}

/// Least general induced guard: the guard components with one variable per
/// merged position, shared exactly where the examples agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lgig {
    spec: GuardSpec,
    vars: Vec<Symbol>,
}

impl Lgig {
    pub fn spec(&self) -> &GuardSpec {
        &self.spec
    }

    pub fn vars(&self) -> &[Symbol] {
        &self.vars
    }

    /// Variable at a 1-based merged position.
    pub fn var_at(&self, position: usize) -> &Symbol {
        &self.vars[position - 1]
    }

    pub fn distinct_vars(&self) -> usize {
        self.vars.iter().unique().count()
    }

    /// The guard literals, one per component.
    pub fn literals(&self) -> Vec<Literal> {
        let mut offset = 0;
        self.spec
            .components
            .iter()
            .zip(&self.spec.arities)
            .map(|(name, &arity)| {
                let args = self.vars[offset..offset + arity]
                    .iter()
                    .map(|v| Term::Var(v.clone()))
                    .collect();
                offset += arity;
                Literal::new(name.polarity, name.relation.clone(), args)
            })
            .collect()
    }
}

impl fmt::Display for Lgig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literals().iter().join(", "))
    }
}

pub(crate) fn lgig_var(index: usize) -> Symbol {
    Symbol::from(format!("V{}", index + 1))
}

pub(crate) fn existential_var(index: usize) -> Symbol {
    Symbol::from(format!("W{}", index + 1))
}

/// How a position of a mapped literal is filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum MapSlot {
    /// Lgig variable by dense index.
    Guard(usize),
    /// Empty shield; only produced when fresh variables are allowed.
    Fresh,
}

/// An lgig together with its merged occurrence in each example, so that many
/// literals can be mapped without recomputing the guard side.
pub(crate) struct Induced {
    pub(crate) lgig: Lgig,
    var_ids: Vec<usize>,
    occurrences: Vec<Vec<Term>>,
}

impl Induced {
    /// Computes the lgig from per-example merged occurrences by refining the
    /// position partition one example at a time.
    pub(crate) fn compute(spec: GuardSpec, occurrences: Vec<Vec<Term>>) -> Result<Self> {
        if occurrences.is_empty() {
            return Err(Error::InvalidGuard("lgig over an empty example set".into()));
        }
        let m = spec.merged_arity();
        let mut classes = vec![0usize; m];
        for occ in &occurrences {
            debug_assert_eq!(occ.len(), m);
            let mut refine: HashMap<(usize, &Term), usize> = HashMap::with_capacity(m);
            for (i, term) in occ.iter().enumerate() {
                let next = refine.len();
                classes[i] = *refine.entry((classes[i], term)).or_insert(next);
            }
        }
        // Fresh ids were handed out in position order on the last pass, so they
        // already number the classes by first occurrence.
        let vars = classes.iter().map(|&c| lgig_var(c)).collect();
        Ok(Induced {
            lgig: Lgig { spec, vars },
            var_ids: classes,
            occurrences,
        })
    }

    /// Reuses a given lgig with occurrences taken from `examples`.
    pub(crate) fn from_lgig(lgig: &Lgig, examples: &[Clause]) -> Result<Self> {
        let occurrences = examples
            .iter()
            .map(|c| lgig.spec.occurrence(c))
            .collect::<Result<Vec<_>>>()?;
        let mut ids: HashMap<&Symbol, usize> = HashMap::new();
        let var_ids = lgig
            .vars
            .iter()
            .map(|v| {
                let next = ids.len();
                *ids.entry(v).or_insert(next)
            })
            .collect();
        Ok(Induced {
            lgig: lgig.clone(),
            var_ids,
            occurrences,
        })
    }

    pub(crate) fn var_count(&self) -> usize {
        self.var_ids.iter().max().map_or(0, |m| m + 1)
    }

    pub(crate) fn var_name(&self, id: usize) -> &Symbol {
        let pos = self
            .var_ids
            .iter()
            .position(|&v| v == id)
            .expect("known variable id");
        &self.lgig.vars[pos]
    }

    /// Term each lgig variable takes in example `c` under the unique guard
    /// anchor.
    pub(crate) fn witness(&self, c: usize) -> Vec<Term> {
        let mut out: Vec<Option<Term>> = vec![None; self.var_count()];
        for (pos, &id) in self.var_ids.iter().enumerate() {
            out[id].get_or_insert_with(|| self.occurrences[c][pos].clone());
        }
        out.into_iter()
            .map(|t| t.expect("every class has a position"))
            .collect()
    }

    /// Relative shield of position `i` (0-based) of a literal occurring with
    /// arguments `rows[c]` in example `c`, as a 0-based membership mask.
    fn shield_mask(&self, rows: &[&[Term]], i: usize) -> Vec<bool> {
        let mut mask = vec![true; self.var_ids.len()];
        let mut alive = mask.len();
        for (occ, row) in self.occurrences.iter().zip(rows) {
            let term = &row[i];
            for (keep, guard_term) in mask.iter_mut().zip(occ) {
                if *keep && guard_term != term {
                    *keep = false;
                    alive -= 1;
                }
            }
            if alive == 0 {
                break;
            }
        }
        mask
    }

    /// Lgig map of a literal given its argument rows across the examples.
    /// `None` if some shield is empty and fresh variables are not allowed.
    pub(crate) fn map_rows(
        &self,
        rows: &[&[Term]],
        allow_fresh: bool,
    ) -> Result<Option<Vec<MapSlot>>> {
        let arity = rows.first().map_or(0, |r| r.len());
        let mut slots = Vec::with_capacity(arity);
        for i in 0..arity {
            let mask = self.shield_mask(rows, i);
            let mut shielded = mask.iter().enumerate().filter(|(_, &k)| k).map(|(j, _)| j);
            match shielded.next() {
                None if allow_fresh => slots.push(MapSlot::Fresh),
                None => return Ok(None),
                Some(first) => {
                    let id = self.var_ids[first];
                    if let Some(j) = shielded.find(|&j| self.var_ids[j] != id) {
                        return Err(Error::IncoherentShield(format!(
                            "positions {} and {} of {} carry different variables",
                            first + 1,
                            j + 1,
                            self.lgig
                        )));
                    }
                    slots.push(MapSlot::Guard(id));
                }
            }
        }
        Ok(Some(slots))
    }

    /// Builds the literal for mapped slots, naming fresh variables from
    /// `next_fresh` onwards.
    pub(crate) fn realize(
        &self,
        template: &Literal,
        slots: &[MapSlot],
        next_fresh: &mut usize,
    ) -> MappedLiteral {
        let mut existential = Vec::new();
        let args = slots
            .iter()
            .map(|slot| match slot {
                MapSlot::Guard(id) => Term::Var(self.var_name(*id).clone()),
                MapSlot::Fresh => {
                    let v = existential_var(*next_fresh);
                    *next_fresh += 1;
                    existential.push(v.clone());
                    Term::Var(v)
                }
            })
            .collect();
        MappedLiteral {
            literal: Literal::new(template.polarity(), template.relation().clone(), args),
            existential,
        }
    }
}

/// Arguments of the literal named `name` in each example.
pub(crate) fn rows_of<'e>(
    name: &SignedRelation,
    examples: &'e [Clause],
) -> Result<Vec<&'e [Term]>> {
    examples
        .iter()
        .map(|c| unique_occurrence(c, name).map(Literal::args))
        .collect()
}

fn check_position(q: &SignedRelation, i: usize, arity: usize) -> Result<()> {
    if i == 0 || i > arity {
        return Err(Error::InvalidGuard(format!(
            "position {i} outside 1..={arity} of {q}"
        )));
    }
    Ok(())
}

/// Merged guard positions whose term in `clause` equals the term at
/// position `i` (1-based) of `q`'s occurrence.
pub fn relative_shield_clause(
    guard: &GuardSpec,
    q: &SignedRelation,
    i: usize,
    clause: &Clause,
) -> Result<ShieldSet> {
    let occ = guard.occurrence(clause)?;
    let lit = unique_occurrence(clause, q)?;
    check_position(q, i, lit.arity())?;
    let term = &lit.args()[i - 1];
    Ok(occ
        .iter()
        .enumerate()
        .filter(|(_, t)| *t == term)
        .map(|(j, _)| j + 1)
        .collect())
}

/// Intersection of the per-clause relative shields over `examples`.
pub fn relative_shield(
    guard: &GuardSpec,
    q: &SignedRelation,
    i: usize,
    examples: &[Clause],
) -> Result<ShieldSet> {
    let mut acc: Option<ShieldSet> = None;
    for c in examples {
        let s = relative_shield_clause(guard, q, i, c)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => prev.intersect(&s),
        });
    }
    acc.ok_or_else(|| Error::InvalidGuard("relative shield over an empty example set".into()))
}

/// The lgig of `guard` induced by `examples`. Variables are named `V1, V2, …`
/// in order of first distinct position.
pub fn compute_lgig(guard: &GuardSpec, examples: &[Clause]) -> Result<Lgig> {
    let occurrences = examples
        .iter()
        .map(|c| guard.occurrence(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Induced::compute(guard.clone(), occurrences)?.lgig)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MapMode {
    #[default]
    Strict,
    /// Positive literals get fresh existential variables at unshielded positions.
    Existential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappedLiteral {
    pub literal: Literal,
    pub existential: Vec<Symbol>,
}

/// Rewrites `literal` over the variables of `lgig` through the relative
/// shields w.r.t. `examples`. `lgig` must be the lgig induced by `examples`.
pub fn lgig_map(
    literal: &Literal,
    lgig: &Lgig,
    examples: &[Clause],
    mode: MapMode,
) -> Result<Option<MappedLiteral>> {
    let induced = Induced::from_lgig(lgig, examples)?;
    let rows = rows_of(&literal.signed(), examples)?;
    let allow_fresh = mode == MapMode::Existential && !literal.polarity().is_negative();
    Ok(induced
        .map_rows(&rows, allow_fresh)?
        .map(|slots| induced.realize(literal, &slots, &mut 0)))
}

/// Specialises the guard of `h` to the lgig induced by `examples` and applies
/// the same specialisation to the whole clause. Requires `h ⊢ examples`.
pub fn specialize_to_lgig(h: &Hypothesis, examples: &[Clause]) -> Result<Hypothesis> {
    let spec = GuardSpec::from_literals(h.guard_literals())?;
    let lgig = compute_lgig(&spec, examples)?;
    let merged: Vec<&Term> = h.guard_literals().flat_map(Literal::args).collect();

    let mut theta = Substitution::new();
    for (term, target) in merged.iter().zip(lgig.vars()) {
        let Term::Var(x) = term else {
            return Err(Error::SpecialisationConflict(format!(
                "constant {term} in guard of {h}"
            )));
        };
        let target = Term::Var(target.clone());
        if let Some(prev) = theta.bind(x.clone(), target.clone()) {
            if prev != target {
                return Err(Error::SpecialisationConflict(format!(
                    "{x} would map to both {prev} and {target}"
                )));
            }
        }
    }
    let mut existential = BTreeSet::new();
    for (n, e) in h.existential().iter().enumerate() {
        let fresh = existential_var(n);
        theta.bind(e.clone(), Term::Var(fresh.clone()));
        existential.insert(fresh);
    }

    let clause = theta.apply(h.clause());
    let guard = h
        .guard_literals()
        .map(|g| {
            let image = g.apply(&theta);
            clause
                .iter()
                .position(|l| *l == image)
                .expect("image of a guard literal")
        })
        .collect();
    Hypothesis::new(clause, guard, existential)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clause(lits: Vec<Literal>) -> Clause {
        Clause::new(lits).unwrap()
    }

    fn shield_example() -> Vec<Clause> {
        vec![
            clause(vec![
                Literal::pos("P", &["a", "a", "b", "a"]),
                Literal::pos("Q", &["a"]),
            ]),
            clause(vec![
                Literal::pos("P", &["a", "b", "a", "b"]),
                Literal::pos("Q", &["b"]),
            ]),
        ]
    }

    fn p_guard() -> GuardSpec {
        GuardSpec::single(SignedRelation::pos("P"), 4)
    }

    fn set(xs: &[usize]) -> ShieldSet {
        xs.iter().copied().collect()
    }

    fn fan_instance() -> Vec<Clause> {
        vec![
            clause(vec![
                Literal::neg("TalkAbout", &["a", "b", "a"]),
                Literal::neg("FanOf", &["a", "a"]),
                Literal::neg("Influences", &["a", "b"]),
                Literal::pos("FanOf", &["b", "a"]),
            ]),
            clause(vec![
                Literal::neg("TalkAbout", &["a", "c", "d"]),
                Literal::neg("FanOf", &["a", "d"]),
                Literal::neg("Influences", &["a", "c"]),
                Literal::pos("FanOf", &["c", "d"]),
            ]),
        ]
    }

    #[test]
    fn per_clause_shields() {
        let e = shield_example();
        let q = SignedRelation::pos("Q");
        assert_eq!(
            relative_shield_clause(&p_guard(), &q, 1, &e[0]).unwrap(),
            set(&[1, 2, 4])
        );
        assert_eq!(
            relative_shield_clause(&p_guard(), &q, 1, &e[1]).unwrap(),
            set(&[2, 4])
        );
        let own = relative_shield_clause(&p_guard(), &SignedRelation::pos("P"), 1, &e[0]).unwrap();
        assert!(own.contains(1));
    }

    #[test]
    fn set_shields() {
        let e = shield_example();
        let q = SignedRelation::pos("Q");
        assert_eq!(
            relative_shield(&p_guard(), &q, 1, &e).unwrap(),
            set(&[2, 4])
        );
        assert_eq!(
            relative_shield(&p_guard(), &q, 1, &e[..1]).unwrap(),
            relative_shield_clause(&p_guard(), &q, 1, &e[0]).unwrap()
        );
        let disjoint = vec![
            clause(vec![
                Literal::pos("P", &["a", "b"]),
                Literal::pos("Q", &["a"]),
            ]),
            clause(vec![
                Literal::pos("P", &["a", "b"]),
                Literal::pos("Q", &["b"]),
            ]),
        ];
        let g = GuardSpec::single(SignedRelation::pos("P"), 2);
        assert!(relative_shield(&g, &q, 1, &disjoint).unwrap().is_empty());
    }

    #[test]
    fn missing_relation_errors() {
        let c = clause(vec![Literal::pos("P", &["a", "a", "b", "a"])]);
        assert!(matches!(
            relative_shield_clause(&p_guard(), &SignedRelation::pos("Q"), 1, &c),
            Err(Error::MissingRelation { .. })
        ));
    }

    #[test]
    fn lgig_examples() {
        let g = compute_lgig(&p_guard(), &shield_example()).unwrap();
        assert_eq!(
            g.literals(),
            vec![Literal::pos("P", &["V1", "V2", "V3", "V2"])]
        );

        let single = vec![clause(vec![Literal::pos("P", &["a", "a"])])];
        let g = compute_lgig(&GuardSpec::single(SignedRelation::pos("P"), 2), &single).unwrap();
        assert_eq!(g.literals(), vec![Literal::pos("P", &["V1", "V1"])]);

        let tc = vec![
            clause(vec![
                Literal::neg("T", &["a", "b"]),
                Literal::neg("R", &["b", "c"]),
                Literal::pos("T", &["a", "c"]),
            ]),
            clause(vec![
                Literal::neg("T", &["d", "e"]),
                Literal::neg("R", &["e", "f"]),
                Literal::pos("T", &["d", "f"]),
            ]),
        ];
        let merged = GuardSpec::new(vec![
            (SignedRelation::neg("T"), 2),
            (SignedRelation::neg("R"), 2),
        ])
        .unwrap();
        let g = compute_lgig(&merged, &tc).unwrap();
        assert_eq!(
            g.vars().iter().map(|v| &**v).collect::<Vec<_>>(),
            ["V1", "V2", "V2", "V3"]
        );
        assert_eq!(
            g.literals(),
            vec![
                Literal::neg("T", &["V1", "V2"]),
                Literal::neg("R", &["V2", "V3"])
            ]
        );
        assert!(compute_lgig(&merged, &[]).is_err());
    }

    #[test]
    fn lgig_map_examples() {
        let e = shield_example();
        let g = compute_lgig(&p_guard(), &e).unwrap();
        let q = lgig_map(&Literal::pos("Q", &["a"]), &g, &e, MapMode::Strict)
            .unwrap()
            .unwrap();
        assert_eq!(q.literal, Literal::pos("Q", &["V2"]));

        let ex = fan_instance();
        let spec = GuardSpec::single(SignedRelation::neg("TalkAbout"), 3);
        let g = compute_lgig(&spec, &ex).unwrap();
        let fan = lgig_map(
            &Literal::neg("FanOf", &["a", "a"]),
            &g,
            &ex,
            MapMode::Strict,
        )
        .unwrap()
        .unwrap();
        assert_eq!(fan.literal, Literal::neg("FanOf", &["V1", "V3"]));
        let own = lgig_map(
            &Literal::neg("TalkAbout", &["a", "c", "d"]),
            &g,
            &ex,
            MapMode::Strict,
        )
        .unwrap()
        .unwrap();
        assert_eq!(own.literal, Literal::neg("TalkAbout", &["V1", "V2", "V3"]));
    }

    #[test]
    fn lgig_map_absent_and_existential() {
        let e = vec![
            clause(vec![
                Literal::neg("Person", &["a"]),
                Literal::pos("Ancestor", &["b", "a"]),
            ]),
            clause(vec![
                Literal::neg("Person", &["c"]),
                Literal::pos("Ancestor", &["d", "c"]),
            ]),
        ];
        let g = compute_lgig(&GuardSpec::single(SignedRelation::neg("Person"), 1), &e).unwrap();
        let head = Literal::pos("Ancestor", &["b", "a"]);
        assert_eq!(lgig_map(&head, &g, &e, MapMode::Strict).unwrap(), None);
        let mapped = lgig_map(&head, &g, &e, MapMode::Existential)
            .unwrap()
            .unwrap();
        assert_eq!(mapped.literal, Literal::pos("Ancestor", &["W1", "V1"]));
        assert_eq!(mapped.existential, vec![Symbol::from("W1")]);
    }

    #[test]
    fn lgig_map_detects_foreign_guard() {
        let e = shield_example();
        // Not the lgig: positions 2 and 4 carry different variables.
        let fake = Lgig {
            spec: p_guard(),
            vars: ["V1", "V2", "V3", "V4"]
                .into_iter()
                .map(Symbol::from)
                .collect(),
        };
        assert!(matches!(
            lgig_map(&Literal::pos("Q", &["a"]), &fake, &e, MapMode::Strict),
            Err(Error::IncoherentShield(_))
        ));
    }

    #[test]
    fn specialisation() {
        let e = shield_example();
        let h = Hypothesis::from_clause(
            clause(vec![
                Literal::pos("P", &["X1", "X2", "X3", "X4"]),
                Literal::pos("Q", &["X2"]),
            ]),
            1,
        )
        .unwrap();
        let s = specialize_to_lgig(&h, &e).unwrap();
        assert_eq!(
            s.clause(),
            &clause(vec![
                Literal::pos("P", &["V1", "V2", "V3", "V2"]),
                Literal::pos("Q", &["V2"])
            ])
        );
        assert_eq!(specialize_to_lgig(&s, &e).unwrap(), s);

        let distinct = vec![clause(vec![
            Literal::pos("P", &["a", "b"]),
            Literal::pos("Q", &["b"]),
        ])];
        let h = Hypothesis::from_clause(
            clause(vec![
                Literal::pos("P", &["X", "Y"]),
                Literal::pos("Q", &["Y"]),
            ]),
            1,
        )
        .unwrap();
        let s = specialize_to_lgig(&h, &distinct).unwrap();
        assert_eq!(
            s.clause(),
            &clause(vec![
                Literal::pos("P", &["V1", "V2"]),
                Literal::pos("Q", &["V2"])
            ])
        );
    }

    #[test]
    fn specialisation_conflict() {
        // P(X,X) cannot subsume P(a,b); the specialisation is undefined.
        let e = vec![clause(vec![Literal::pos("P", &["a", "b"])])];
        let h = Hypothesis::from_clause(clause(vec![Literal::pos("P", &["X", "X"])]), 1).unwrap();
        assert!(matches!(
            specialize_to_lgig(&h, &e),
            Err(Error::SpecialisationConflict(_))
        ));
    }
}
