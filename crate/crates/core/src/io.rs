//! Clause files, hypothesis text and result rendering.
//!
//! Clause file lines look like `+ ~TalkAbout(a,b,a); FanOf(b,a)`: a label
//! (`+` positive, `-` negative) followed by `;`-separated literals, `~`
//! marking negation. Constants start lowercase, variables uppercase, `#`
//! starts a comment.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::learner::{CanonicalSet, InconsistentCause, LearnResult, LearnStats, Outcome};
use crate::model::{
    Clause, Hypothesis, Instance, Literal, Mode, Polarity, Substitution, Symbol, Term,
};
use crate::oracle::HittingStringInstance;

const EXISTENTIAL_PREFIX: &str = "E_";

/// Labeled example clauses in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClauseFile {
    pub positives: Vec<Clause>,
    pub negatives: Vec<Clause>,
}

struct Cursor<'t> {
    line: usize,
    text: &'t str,
    pos: usize,
    symbols: &'t mut HashMap<String, Symbol>,
}

impl Cursor<'_> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            column: self.text[..self.pos].chars().count() + 1,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.pos += expected.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: char) -> Result<()> {
        self.skip_ws();
        if self.eat(expected) {
            Ok(())
        } else {
            match self.peek() {
                Some(c) => self.error(format!("expected '{expected}', found '{c}'")),
                None => self.error(format!("expected '{expected}', found end of line")),
            }
        }
    }

    fn identifier(&mut self, what: &str) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            Some(c) => return self.error(format!("expected {what}, found '{c}'")),
            None => return self.error(format!("expected {what}, found end of line")),
        }
        while let Some(c) = self
            .peek()
            .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += c.len_utf8();
        }
        Ok(&self.text[start..self.pos])
    }

    fn intern(&mut self, name: &str) -> Symbol {
        if let Some(s) = self.symbols.get(name) {
            return s.clone();
        }
        let s = Symbol::from(name);
        self.symbols.insert(name.to_owned(), s.clone());
        s
    }

    fn term(&mut self) -> Result<Term> {
        let name = self.identifier("a term")?.to_owned();
        let symbol = self.intern(&name);
        Ok(if name.starts_with(|c: char| c.is_ascii_uppercase()) {
            Term::Var(symbol)
        } else {
            Term::Const(symbol)
        })
    }

    fn atom(&mut self, polarity: Polarity) -> Result<Literal> {
        let name = self.identifier("a relation name")?.to_owned();
        let relation = self.intern(&name);
        self.expect('(')?;
        let mut args = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.eat(',') {
                args.push(self.term()?);
            } else {
                self.expect(')')?;
                break;
            }
        }
        Ok(Literal::new(polarity, relation, args))
    }

    fn literal(&mut self) -> Result<Literal> {
        self.skip_ws();
        let polarity = if self.eat('~') {
            Polarity::Negative
        } else {
            Polarity::Positive
        };
        self.atom(polarity)
    }

    fn literals(&mut self, separator: char) -> Result<Vec<Literal>> {
        let mut out = vec![self.literal()?];
        loop {
            self.skip_ws();
            if self.at_end() || !self.eat(separator) {
                return Ok(out);
            }
            out.push(self.literal()?);
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }
}

/// Lines with the comment stripped, paired with their 1-based number;
/// blank lines are dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

pub fn parse_clause_file(text: &str) -> Result<ClauseFile> {
    let mut symbols = HashMap::new();
    let mut file = ClauseFile::default();
    for (line, body) in content_lines(text) {
        let mut cur = Cursor {
            line,
            text: body,
            pos: 0,
            symbols: &mut symbols,
        };
        cur.skip_ws();
        let positive = if cur.eat('+') {
            true
        } else if cur.eat('-') {
            false
        } else {
            return cur.error("expected '+' or '-' label");
        };
        let start = cur.pos;
        cur.skip_ws();
        if cur.pos == start && !cur.at_end() {
            return cur.error("expected whitespace after label");
        }
        let clause = Clause::new(cur.literals(';')?)?;
        cur.finish()?;
        if !clause.is_ground() {
            return Err(Error::NonGroundExample(format!("line {line}: {clause}")));
        }
        if positive {
            file.positives.push(clause);
        } else {
            file.negatives.push(clause);
        }
    }
    Ok(file)
}

/// Parses a clause file into an instance of the straight setting.
pub fn parse_instance(text: &str, k: usize, mode: Mode) -> Result<Instance> {
    let file = parse_clause_file(text)?;
    Instance::new(file.positives, file.negatives, k, mode)
}

/// Like [`parse_instance`] without the straightness requirement.
pub fn parse_instance_unrestricted(text: &str, k: usize, mode: Mode) -> Result<Instance> {
    let file = parse_clause_file(text)?;
    Instance::unrestricted(file.positives, file.negatives, k, mode)
}

pub fn write_clause_file(instance: &Instance) -> String {
    let mut out = String::new();
    for c in instance.positives() {
        let _ = writeln!(out, "+ {c}");
    }
    for c in instance.negatives() {
        let _ = writeln!(out, "- {c}");
    }
    out
}

/// Parses a single clause, `;`-separated, variables allowed.
pub fn parse_clause(text: &str) -> Result<Clause> {
    let mut symbols = HashMap::new();
    let mut cur = Cursor {
        line: 1,
        text,
        pos: 0,
        symbols: &mut symbols,
    };
    let lits = cur.literals(';')?;
    cur.finish()?;
    Clause::new(lits)
}

/// Parses the first non-comment line as a hypothesis, either in clause form
/// or as a rule `Head(..) :- Body(..), ...`. Variables starting with `E_`
/// are existential. The guard is the first covering set of at most `k`
/// literals.
pub fn parse_hypothesis(text: &str, k: usize) -> Result<Hypothesis> {
    let mut symbols = HashMap::new();
    let (line, body) = content_lines(text).next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "no hypothesis found".into(),
    })?;
    let mut cur = Cursor {
        line,
        text: body,
        pos: 0,
        symbols: &mut symbols,
    };
    let literals = match body.find(":-") {
        Some(split) => {
            cur.skip_ws();
            let mut lits = Vec::new();
            if cur.pos < split {
                lits.push(cur.atom(Polarity::Positive)?);
            }
            cur.skip_ws();
            if cur.pos != split {
                return cur.error("expected ':-' after the rule head");
            }
            cur.pos += 2;
            cur.skip_ws();
            if !cur.at_end() {
                lits.push(cur.atom(Polarity::Negative)?);
                loop {
                    cur.skip_ws();
                    if !cur.eat(',') {
                        break;
                    }
                    cur.skip_ws();
                    lits.push(cur.atom(Polarity::Negative)?);
                }
            }
            cur.skip_ws();
            cur.eat('.');
            lits
        }
        None => cur.literals(';')?,
    };
    cur.finish()?;
    let clause = Clause::new(literals)?;
    let existential: BTreeSet<Symbol> = clause
        .vars()
        .into_iter()
        .filter(|v| v.starts_with(EXISTENTIAL_PREFIX))
        .collect();
    Hypothesis::with_existential(clause, k, existential)
}

/// One string per line over `{0,1,*}`; `#` comments.
pub fn read_hitting_strings(text: &str) -> Result<HittingStringInstance> {
    let mut strings = Vec::new();
    for (line, body) in content_lines(text) {
        let s = body.trim();
        if let Some((col, c)) = s
            .char_indices()
            .find(|(_, c)| !matches!(c, '0' | '1' | '*'))
        {
            let offset = body.len() - body.trim_start().len();
            return Err(Error::Parse {
                line,
                column: offset + col + 1,
                message: format!("unexpected '{c}' in hitting string"),
            });
        }
        if let Some(first) = strings.first().map(String::len) {
            if s.len() != first {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!(
                        "string of length {} after strings of length {first}",
                        s.len()
                    ),
                });
            }
        }
        strings.push(s.to_owned());
    }
    HittingStringInstance::from_strings(strings)
}

pub fn write_hitting_strings(hs: &HittingStringInstance) -> String {
    hs.strings().iter().map(|s| format!("{s}\n")).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Naming {
    /// `X, Y, Z` for up to three variables, `V1, V2, …` beyond.
    #[default]
    Short,
    /// Variables as they occur in the hypothesis.
    Raw,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn renaming(h: &Hypothesis, naming: Naming) -> Substitution {
    let mut order: Vec<&Symbol> = Vec::new();
    for lit in h.clause() {
        for v in lit.vars() {
            if !order.contains(&v) {
                order.push(v);
            }
        }
    }
    let (existential, universal): (Vec<&Symbol>, Vec<&Symbol>) = order
        .into_iter()
        .partition(|v| h.existential().contains(*v));
    let mut out = Substitution::new();
    for (i, v) in universal.iter().enumerate() {
        let name = match naming {
            Naming::Raw => v.to_string(),
            Naming::Short if universal.len() <= 3 => ["X", "Y", "Z"][i].to_owned(),
            Naming::Short => format!("V{}", i + 1),
        };
        out.bind((*v).clone(), Term::var(&name));
    }
    for (i, v) in existential.iter().enumerate() {
        let name = match naming {
            Naming::Raw => format!("{EXISTENTIAL_PREFIX}{v}"),
            Naming::Short => format!("{EXISTENTIAL_PREFIX}{}", i + 1),
        };
        out.bind((*v).clone(), Term::var(&name));
    }
    out
}

/// Clause text and, for hypotheses with exactly one positive literal, rule
/// text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisText {
    pub clause: String,
    pub rule: Option<String>,
}

fn atom_text(lit: &Literal) -> String {
    let args: Vec<String> = lit.args().iter().map(Term::to_string).collect();
    format!("{}({})", lit.relation(), args.join(","))
}

pub fn render_hypothesis(h: &Hypothesis, naming: Naming) -> HypothesisText {
    let theta = renaming(h, naming);
    let lits: Vec<Literal> = h.clause().iter().map(|l| l.apply(&theta)).collect();
    let clause = lits
        .iter()
        .map(Literal::to_string)
        .collect::<Vec<_>>()
        .join("; ");
    let heads: Vec<&Literal> = lits
        .iter()
        .filter(|l| !l.polarity().is_negative())
        .collect();
    let rule = match heads.as_slice() {
        [head] => {
            let body: Vec<String> = lits
                .iter()
                .filter(|l| l.polarity().is_negative())
                .map(atom_text)
                .collect();
            Some(if body.is_empty() {
                atom_text(head)
            } else {
                format!("{} :- {}", atom_text(head), body.join(", "))
            })
        }
        _ => None,
    };
    HypothesisText { clause, rule }
}

#[derive(Serialize)]
struct JsonLiteral {
    neg: bool,
    rel: String,
    args: Vec<String>,
}

#[derive(Serialize)]
struct JsonHypothesis {
    literals: Vec<JsonLiteral>,
    guard: Vec<usize>,
    existential: Vec<String>,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    cause: Option<InconsistentCause>,
    hypotheses: Vec<JsonHypothesis>,
    stats: &'a LearnStats,
}

fn json_hypothesis(h: &Hypothesis, naming: Naming) -> JsonHypothesis {
    let theta = renaming(h, naming);
    JsonHypothesis {
        literals: h
            .clause()
            .iter()
            .map(|l| JsonLiteral {
                neg: l.polarity().is_negative(),
                rel: l.relation().to_string(),
                args: l
                    .args()
                    .iter()
                    .map(|t| theta.apply_term(t).to_string())
                    .collect(),
            })
            .collect(),
        guard: h.guard().to_vec(),
        existential: h
            .existential()
            .iter()
            .map(|v| theta.apply_term(&Term::Var(v.clone())).to_string())
            .collect(),
    }
}

fn cause_text(cause: InconsistentCause) -> &'static str {
    match cause {
        InconsistentCause::NoCommonRelation => {
            "no signed relation occurs in every positive example"
        }
        InconsistentCause::AllGuardsRejected => "every guard candidate was rejected",
    }
}

fn render(
    hypotheses: &[Hypothesis],
    cause: Option<InconsistentCause>,
    stats: &LearnStats,
    format: Format,
    naming: Naming,
) -> String {
    match format {
        Format::Json => {
            let result = JsonResult {
                outcome: if hypotheses.is_empty() {
                    "inconsistent"
                } else {
                    "solution"
                },
                cause: if hypotheses.is_empty() { cause } else { None },
                hypotheses: hypotheses
                    .iter()
                    .map(|h| json_hypothesis(h, naming))
                    .collect(),
                stats,
            };
            let mut s = serde_json::to_string_pretty(&result).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            if hypotheses.is_empty() {
                let why = cause.map_or("", cause_text);
                let _ = writeln!(out, "# outcome: inconsistent ({why})");
            } else {
                let _ = writeln!(out, "# outcome: solution");
            }
            let _ = writeln!(
                out,
                "# guards tried: {}, positive checks: {}, negative checks: {}",
                stats.guards_tried, stats.positive_checks, stats.negative_checks
            );
            for h in hypotheses {
                let text = render_hypothesis(h, naming);
                let guard: Vec<String> = h.guard().iter().map(|g| g.to_string()).collect();
                let _ = writeln!(out, "{}", text.clause);
                let _ = writeln!(out, "# guard: {}", guard.join(","));
                if let Some(rule) = text.rule {
                    let _ = writeln!(out, "# rule: {rule}");
                }
            }
            out
        }
    }
}

pub fn render_result(r: &LearnResult, format: Format, naming: Naming) -> String {
    match &r.outcome {
        Outcome::Solution(h) => render(std::slice::from_ref(h), None, &r.stats, format, naming),
        Outcome::Inconsistent(cause) => render(&[], Some(*cause), &r.stats, format, naming),
    }
}

pub fn render_canonical(set: &CanonicalSet, format: Format, naming: Naming) -> String {
    render(&set.solutions, set.cause, &set.stats, format, naming)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::learner::{enumerate_canonical, learn};

    const FANS: &str = "\
# fan example
+ ~TalkAbout(a,b,a); ~FanOf(a,a); ~Influences(a,b); FanOf(b,a)
+ ~TalkAbout(a,c,d); ~FanOf(a,d); ~Influences(a,c); FanOf(c,d); Parent(c,b)
- ~TalkAbout(d,b,e); ~Influences(d,b); FanOf(d,e)
";

    #[test]
    fn parses_fan_example() {
        let inst = parse_instance(FANS, 1, Mode::Guarded).unwrap();
        assert_eq!(inst.positives().len(), 2);
        assert_eq!(inst.negatives().len(), 1);
        assert_eq!(inst.positives()[1].len(), 5);
        assert_eq!(inst.arity("TalkAbout"), Some(3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_instance("+ P(a); P(b)", 1, Mode::Guarded),
            Err(Error::NotStraight(_))
        ));
        assert!(matches!(
            parse_instance("+ P(a)\n- P(a,b)", 1, Mode::Guarded),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            parse_instance("+ P(X)", 1, Mode::Guarded),
            Err(Error::NonGroundExample(_))
        ));
        assert_eq!(
            parse_clause_file("+ P(a)\n+ P(a b)").unwrap_err(),
            Error::Parse {
                line: 2,
                column: 7,
                message: "expected ')', found 'b'".into()
            }
        );
        assert!(matches!(
            parse_clause_file("* P(a)"),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_clause_file("+ 1P(a)"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_clause_file("+ P()"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_clause_file("+P(a)"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn clause_file_round_trip() {
        let inst = parse_instance(FANS, 1, Mode::Guarded).unwrap();
        let again = parse_instance(&write_clause_file(&inst), 1, Mode::Guarded).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn renders_learned_rule() {
        let inst = parse_instance(FANS, 1, Mode::Guarded).unwrap();
        let r = learn(&inst).unwrap();
        let h = r.solution().unwrap();
        assert_eq!(
            render_hypothesis(h, Naming::Raw).rule.unwrap(),
            "FanOf(V2,V3) :- TalkAbout(V1,V2,V3), FanOf(V1,V3), Influences(V1,V2)"
        );
        let short = render_hypothesis(h, Naming::Short);
        assert_eq!(
            short.clause,
            "~TalkAbout(X,Y,Z); ~FanOf(X,Z); ~Influences(X,Y); FanOf(Y,Z)"
        );
        assert_eq!(
            short.rule.unwrap(),
            "FanOf(Y,Z) :- TalkAbout(X,Y,Z), FanOf(X,Z), Influences(X,Y)"
        );

        let text = render_result(&r, Format::Text, Naming::Short);
        assert!(text
            .lines()
            .any(|l| l == "~TalkAbout(X,Y,Z); ~FanOf(X,Z); ~Influences(X,Y); FanOf(Y,Z)"));
    }

    #[test]
    fn guard_only_rendering() {
        let h = parse_hypothesis("~FanOf(X,Y)", 1).unwrap();
        let text = render_hypothesis(&h, Naming::Short);
        assert_eq!(text.clause, "~FanOf(X,Y)");
        assert_eq!(text.rule, None);
    }

    #[test]
    fn hypothesis_round_trip() {
        let inst = parse_instance(FANS, 1, Mode::Guarded).unwrap();
        for h in enumerate_canonical(&inst).unwrap().solutions {
            for naming in [Naming::Short, Naming::Raw] {
                let text = render_hypothesis(&h, naming);
                let back = parse_hypothesis(&text.clause, 1).unwrap();
                assert_eq!(back.clause(), &renaming(&h, naming).apply(h.clause()));
                if let Some(rule) = text.rule {
                    assert_eq!(parse_hypothesis(&rule, 1).unwrap().clause(), back.clause());
                }
            }
        }
    }

    #[test]
    fn existential_rendering() {
        let h = parse_hypothesis("Ancestor(E_1,X) :- Person(X)", 1).unwrap();
        assert_eq!(h.existential().len(), 1);
        let text = render_hypothesis(&h, Naming::Short);
        assert_eq!(text.rule.as_deref(), Some("Ancestor(E_1,X) :- Person(X)"));
        assert_eq!(text.clause, "Ancestor(E_1,X); ~Person(X)");
        let again = parse_hypothesis(&text.clause, 1).unwrap();
        assert_eq!(again.existential(), h.existential());
    }

    #[test]
    fn json_shape() {
        let inst = parse_instance("+ P(a)\n- P(b)", 1, Mode::Guarded).unwrap();
        let r = learn(&inst).unwrap();
        let json = render_result(&r, Format::Json, Naming::Short);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["outcome"], "inconsistent");
        assert_eq!(v["cause"], "all_guards_rejected");
        assert!(v["hypotheses"].as_array().unwrap().is_empty());
        assert!(json.find("\"outcome\"").unwrap() < json.find("\"stats\"").unwrap());

        let inst = parse_instance(FANS, 1, Mode::Guarded).unwrap();
        let json = render_result(&learn(&inst).unwrap(), Format::Json, Naming::Short);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["outcome"], "solution");
        assert_eq!(v["hypotheses"][0]["literals"][0]["rel"], "TalkAbout");
        assert_eq!(v["hypotheses"][0]["literals"][0]["neg"], true);
        assert_eq!(v["hypotheses"][0]["guard"][0], 0);
    }

    #[test]
    fn hitting_file() {
        let hs = read_hitting_strings("# strings\n1*\n*0\n").unwrap();
        assert_eq!((hs.n(), hs.m()), (2, 2));
        assert_eq!(write_hitting_strings(&hs), "1*\n*0\n");
        assert!(matches!(
            read_hitting_strings("10\n1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_hitting_strings("1x"),
            Err(Error::Parse {
                line: 1,
                column: 2,
                ..
            })
        ));
    }
}
