#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use guarded_ilp::{Clause, Hypothesis, Instance, Literal, Mode, Polarity, Symbol, Term};

pub fn clause(lits: Vec<Literal>) -> Clause {
    Clause::new(lits).unwrap()
}

fn extend(a: &[Literal], b: &Clause, at: usize, map: &mut BTreeMap<Symbol, Symbol>) -> bool {
    let Some(lit) = a.get(at) else {
        return true;
    };
    for target in b.iter() {
        if target.polarity() != lit.polarity()
            || target.relation() != lit.relation()
            || target.arity() != lit.arity()
        {
            continue;
        }
        let saved = map.clone();
        let ok = lit
            .args()
            .iter()
            .zip(target.args())
            .all(|(s, t)| match (s, t) {
                (Term::Var(x), Term::Var(y)) => match map.get(x) {
                    Some(z) => z == y,
                    None if map.values().any(|z| z == y) => false,
                    None => {
                        map.insert(x.clone(), y.clone());
                        true
                    }
                },
                (Term::Const(c), Term::Const(d)) => c == d,
                _ => false,
            });
        if ok && extend(a, b, at + 1, map) {
            return true;
        }
        *map = saved;
    }
    false
}

/// `a` maps into `b` under an injective variable renaming.
pub fn embeds(a: &Clause, b: &Clause) -> bool {
    a.len() <= b.len() && extend(a.literals(), b, 0, &mut BTreeMap::new())
}

/// Equal up to a bijective renaming of variables.
pub fn isomorphic(a: &Clause, b: &Clause) -> bool {
    a.len() == b.len() && a.vars().len() == b.vars().len() && embeds(a, b)
}

pub fn fan_instance() -> Instance {
    guarded_ilp::io::parse_instance(include_str!("../data/fans.txt"), 1, Mode::Guarded).unwrap()
}

pub fn transitive(k: usize) -> Instance {
    guarded_ilp::io::parse_instance(include_str!("../data/transitive.txt"), k, Mode::Guarded)
        .unwrap()
}

pub fn ancestor(with_negative: bool) -> Instance {
    let inst =
        guarded_ilp::io::parse_instance(include_str!("../data/ancestor.txt"), 1, Mode::DatalogPm)
            .unwrap();
    let negatives = if with_negative {
        inst.negatives().to_vec()
    } else {
        vec![]
    };
    Instance::new(inst.positives().to_vec(), negatives, 1, Mode::DatalogPm).unwrap()
}

/// FanOf(y,z) ← TalkAbout(x,y,z), FanOf(x,z), Influences(x,y)
pub fn fan_rule() -> Clause {
    clause(vec![
        Literal::neg("TalkAbout", &["X", "Y", "Z"]),
        Literal::neg("FanOf", &["X", "Z"]),
        Literal::neg("Influences", &["X", "Y"]),
        Literal::pos("FanOf", &["Y", "Z"]),
    ])
}

pub fn shrink_bound(inst: &Instance) -> usize {
    inst.k() + inst.negatives().iter().map(Clause::len).sum::<usize>()
}

const SIGNATURE: [(&str, usize); 4] = [("P", 1), ("Q", 2), ("R", 2), ("S", 3)];

fn random_atom(rng: &mut ChaCha8Rng, terms: &[Term]) -> Literal {
    let (rel, arity) = *SIGNATURE.choose(rng).unwrap();
    let polarity = if rng.gen_bool(0.5) {
        Polarity::Positive
    } else {
        Polarity::Negative
    };
    let args = (0..arity)
        .map(|_| terms.choose(rng).unwrap().clone())
        .collect();
    Literal::new(polarity, Symbol::from(rel), args)
}

/// Random `k`-guarded hypothesis and ground clause; about half of the
/// clauses are built around an image of the hypothesis.
pub fn random_pair(rng: &mut ChaCha8Rng, k: usize) -> (Hypothesis, Clause) {
    let pool: Vec<Term> = (0..4).map(|i| Term::var(&format!("X{i}"))).collect();
    let constants: Vec<Term> = (0..3).map(|i| Term::constant(&format!("c{i}"))).collect();
    loop {
        let guard: Vec<Literal> = (0..k).map(|_| random_atom(rng, &pool)).collect();
        if guard.iter().collect::<BTreeSet<_>>().len() != k {
            continue;
        }
        let vars: Vec<Term> = guard
            .iter()
            .flat_map(|l| l.args().iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut lits = guard.clone();
        for _ in 0..rng.gen_range(0..=3) {
            let mut lit = random_atom(rng, &vars);
            if rng.gen_bool(0.1) {
                let args = lit
                    .args()
                    .iter()
                    .map(|_| constants.choose(rng).unwrap().clone())
                    .collect();
                lit = Literal::new(lit.polarity(), lit.relation().clone(), args);
            }
            if !lits.contains(&lit) {
                lits.push(lit);
            }
        }
        let h = Hypothesis::new(
            Clause::new(lits).unwrap(),
            (0..k).collect(),
            BTreeSet::new(),
        )
        .unwrap();

        let mut psi: Vec<Literal> = Vec::new();
        if rng.gen_bool(0.5) {
            let theta = guarded_ilp::Substitution::from_pairs(
                h.clause()
                    .vars()
                    .iter()
                    .map(|v| (&**v, constants.choose(rng).unwrap().clone())),
            );
            psi.extend(h.clause().iter().map(|l| l.apply(&theta)));
            if rng.gen_bool(0.3) {
                let i = rng.gen_range(0..psi.len());
                let l = &psi[i];
                let mut args = l.args().to_vec();
                let j = rng.gen_range(0..args.len());
                args[j] = constants.choose(rng).unwrap().clone();
                psi[i] = Literal::new(l.polarity(), l.relation().clone(), args);
            }
        }
        let noise = if psi.is_empty() {
            rng.gen_range(1..=8)
        } else {
            rng.gen_range(0..=4)
        };
        for _ in 0..noise {
            psi.push(random_atom(rng, &constants));
        }
        psi.shuffle(rng);
        return (h, Clause::new(psi).unwrap());
    }
}
