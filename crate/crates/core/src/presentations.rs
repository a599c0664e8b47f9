//! Relation sets, presentation checking and monoid coset enumeration.
//!
//! The presentation of PTₙ ≀ Tₘ on the seven symbols `pi rho tau sigma piB
//! rhoB tauB` splits into a part R_P presenting PTₙ, a part R_T presenting
//! Tₘ and the mixed families R₁, R₂, R₃ tying slot and tail generators
//! together. Adding [`extra_relation`] collapses the presentation onto the
//! block monoid PT_{n×m}.
//!
//! R_P and R_T are pluggable: any defining sets work, and
//! [`free_quotient_size`] is the self-check. The crate bundles
//! machine-derived candidates for small degrees (see [`bundled_rp`] and
//! [`bundled_rt`]), produced by [`derive_presentation`] followed by
//! [`prune_presentation`] over the right Cayley graph.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::element::MonoidElement;
use crate::enumeration::EnumeratedMonoid;
use crate::error::{Error, Result};
use crate::generators::{Alphabet, Word};

/// Which family a relation belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RelationLabel {
    RP,
    RT,
    R1,
    R2,
    R3,
    Extra,
    User,
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationLabel::RP => "R_P",
            RelationLabel::RT => "R_T",
            RelationLabel::R1 => "R1",
            RelationLabel::R2 => "R2",
            RelationLabel::R3 => "R3",
            RelationLabel::Extra => "extra",
            RelationLabel::User => "user",
        };
        f.write_str(s)
    }
}

/// A relation `lhs = rhs` between words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub label: RelationLabel,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(label: RelationLabel, lhs: Word, rhs: Word) -> Self {
        Relation { label, lhs, rhs }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// A finite monoid presentation: an ordered symbol list and relations over
/// it.
#[derive(Clone, Debug)]
pub struct Presentation {
    symbols: Vec<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    /// Checks symbols are distinct and every relation stays inside the
    /// alphabet.
    pub fn new(symbols: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if seen.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        for rel in &relations {
            for side in [&rel.lhs, &rel.rhs] {
                for sym in side.symbols() {
                    if !seen.contains_key(sym) {
                        return Err(Error::UnknownRelationSymbol {
                            symbol: sym.to_string(),
                        });
                    }
                }
            }
        }
        Ok(Presentation { symbols, relations })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Adds one more relation, re-checking its symbols.
    pub fn with(mut self, relation: Relation) -> Result<Self> {
        for side in [&relation.lhs, &relation.rhs] {
            for sym in side.symbols() {
                if !self.symbols.iter().any(|s| s == sym) {
                    return Err(Error::UnknownRelationSymbol {
                        symbol: sym.to_string(),
                    });
                }
            }
        }
        self.relations.push(relation);
        Ok(self)
    }
}

const SLOT_SYMBOLS: [&str; 4] = ["pi", "rho", "tau", "sigma"];

fn sp(name: &str, exp: u64) -> Word {
    Word::symbol(name).pow(exp)
}

/// R₁: for every ordered pair of distinct slots, conjugates of the four
/// slot symbols into those slots commute. `16·C(m,2)` relations, `m ≥ 2`.
pub fn build_r1(m: usize) -> Result<Vec<Relation>> {
    if m < 2 {
        return Err(Error::DegreeTooSmall { required: 2, got: m });
    }
    let mu = m as u64;
    let mut out = Vec::new();
    for j in 1..=mu {
        for k in j + 1..=mu {
            for u in SLOT_SYMBOLS {
                for v in SLOT_SYMBOLS {
                    let lhs = sp("rhoB", mu - j + 1)
                        .then(Word::symbol(u))
                        .then(sp("rhoB", mu + j - k))
                        .then(Word::symbol(v))
                        .then(sp("rhoB", k - 1));
                    let rhs = sp("rhoB", mu - k + 1)
                        .then(Word::symbol(v))
                        .then(sp("rhoB", mu + k - j))
                        .then(Word::symbol(u))
                        .then(sp("rhoB", j - 1));
                    out.push(Relation::new(RelationLabel::R1, lhs, rhs));
                }
            }
        }
    }
    Ok(out)
}

/// R₂: how `piB` moves past slot symbols in slots 2 and beyond.
/// `4 + 4(m−2)` relations, `m ≥ 2`.
pub fn build_r2(m: usize) -> Result<Vec<Relation>> {
    if m < 2 {
        return Err(Error::DegreeTooSmall { required: 2, got: m });
    }
    let mu = m as u64;
    let mut out = Vec::new();
    for u in SLOT_SYMBOLS {
        let lhs = Word::symbol("piB")
            .then(sp("rhoB", mu - 1))
            .then(Word::symbol(u))
            .then(Word::symbol("rhoB"));
        let rhs = Word::symbol(u).then(Word::symbol("piB"));
        out.push(Relation::new(RelationLabel::R2, lhs, rhs));
    }
    for j in 3..=mu {
        for u in SLOT_SYMBOLS {
            let conj = sp("rhoB", mu - j + 1)
                .then(Word::symbol(u))
                .then(sp("rhoB", j - 1));
            let lhs = Word::symbol("piB").then(conj.clone());
            let rhs = conj.then(Word::symbol("piB"));
            out.push(Relation::new(RelationLabel::R2, lhs, rhs));
        }
    }
    Ok(out)
}

/// R₃: how `tauB` absorbs slot-1 symbols and moves past the others.
/// `8 + 4(m−2)` relations, `m ≥ 2`.
pub fn build_r3(m: usize) -> Result<Vec<Relation>> {
    if m < 2 {
        return Err(Error::DegreeTooSmall { required: 2, got: m });
    }
    let mu = m as u64;
    let mut out = Vec::new();
    for u in SLOT_SYMBOLS {
        out.push(Relation::new(
            RelationLabel::R3,
            Word::symbol("tauB").then(Word::symbol(u)),
            Word::symbol("tauB"),
        ));
    }
    for u in SLOT_SYMBOLS {
        let conj = sp("rhoB", mu - 1)
            .then(Word::symbol(u))
            .then(Word::symbol("rhoB"));
        let lhs = Word::symbol("tauB").then(conj.clone());
        let rhs = Word::symbol(u).then(conj).then(Word::symbol("tauB"));
        out.push(Relation::new(RelationLabel::R3, lhs, rhs));
    }
    for j in 3..=mu {
        for u in SLOT_SYMBOLS {
            let conj = sp("rhoB", mu - j + 1)
                .then(Word::symbol(u))
                .then(sp("rhoB", j - 1));
            let lhs = Word::symbol("tauB").then(conj.clone());
            let rhs = conj.then(Word::symbol("tauB"));
            out.push(Relation::new(RelationLabel::R3, lhs, rhs));
        }
    }
    Ok(out)
}

/// The relation `(rho sigma)ⁿ = (rho sigma)ⁿ tauB` separating the wreath
/// product from the block monoid: `(rho sigma)ⁿ` has empty slot-1
/// component, so the block images agree, but the wreath tails differ.
pub fn extra_relation(n: usize) -> Relation {
    let base = Word::symbol("rho").then(Word::symbol("sigma")).pow(n as u64);
    Relation::new(
        RelationLabel::Extra,
        base.clone(),
        base.then(Word::symbol("tauB")),
    )
}

/// Applies a symbol-to-word substitution to every relation, keeping labels.
pub fn substitute(relations: &[Relation], table: &HashMap<String, Word>) -> Vec<Relation> {
    relations
        .iter()
        .map(|r| Relation {
            label: r.label,
            lhs: r.lhs.substitute(table),
            rhs: r.rhs.substitute(table),
        })
        .collect()
}

/// Outcome of evaluating one relation in a concrete monoid.
#[derive(Clone, Debug)]
pub struct RelationOutcome {
    pub label: RelationLabel,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    /// Evaluated sides, rendered; present only when the relation fails.
    pub lhs_value: Option<String>,
    pub rhs_value: Option<String>,
}

/// Evaluation results for a list of relations.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub outcomes: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationOutcome> {
        self.outcomes.iter().filter(|o| !o.holds)
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }
}

/// Evaluates every relation in the monoid named by `alphabet`.
pub fn check_relations<E: MonoidElement + fmt::Display>(
    alphabet: &Alphabet<E>,
    relations: &[Relation],
) -> Result<RelationReport> {
    let mut outcomes = Vec::with_capacity(relations.len());
    for rel in relations {
        let lhs = alphabet.eval(&rel.lhs)?;
        let rhs = alphabet.eval(&rel.rhs)?;
        let holds = lhs == rhs;
        outcomes.push(RelationOutcome {
            label: rel.label,
            lhs: rel.lhs.to_string(),
            rhs: rel.rhs.to_string(),
            holds,
            lhs_value: (!holds).then(|| lhs.to_string()),
            rhs_value: (!holds).then(|| rhs.to_string()),
        });
    }
    Ok(RelationReport { outcomes })
}

/// Parses a relation file: one `lhs = rhs` per line, `#` starts a comment,
/// blank lines are skipped, `1` is the empty word.
pub fn parse_relation_file(text: &str, label: RelationLabel) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!("line {}: expected `lhs = rhs`", lineno + 1))
        })?;
        out.push(Relation::new(label, lhs.parse()?, rhs.parse()?));
    }
    Ok(out)
}

/// Bundled defining relations for PTₙ on `pi rho tau sigma`, available for
/// `n ∈ {2, 3}`.
pub fn bundled_rp(n: usize) -> Option<&'static str> {
    match n {
        2 => Some(include_str!("../data/rp_n2.rel")),
        3 => Some(include_str!("../data/rp_n3.rel")),
        _ => None,
    }
}

/// Bundled defining relations for Tₘ on `piB rhoB tauB`, available for
/// `m ∈ {2, 3}`.
pub fn bundled_rt(m: usize) -> Option<&'static str> {
    match m {
        2 => Some(include_str!("../data/rt_m2.rel")),
        3 => Some(include_str!("../data/rt_m3.rel")),
        _ => None,
    }
}

/// Assembles the seven-symbol presentation R_P ∪ R_T ∪ R₁ ∪ R₂ ∪ R₃ of
/// PTₙ ≀ Tₘ from pluggable R_P and R_T parts.
pub fn wreath_presentation(
    rp: &[Relation],
    rt: &[Relation],
    m: usize,
) -> Result<Presentation> {
    let symbols = ["pi", "rho", "tau", "sigma", "piB", "rhoB", "tauB"]
        .map(String::from)
        .to_vec();
    let mut relations = Vec::new();
    relations.extend_from_slice(rp);
    relations.extend_from_slice(rt);
    relations.extend(build_r1(m)?);
    relations.extend(build_r2(m)?);
    relations.extend(build_r3(m)?);
    Presentation::new(symbols, relations)
}

const UNSET: usize = usize::MAX;

/// The word graph of a monoid coset enumeration over one vertex class.
struct WordGraph {
    ngens: usize,
    limit: usize,
    parent: Vec<usize>,
    edges: Vec<Vec<usize>>,
}

impl WordGraph {
    fn new(ngens: usize, limit: usize) -> Self {
        WordGraph {
            ngens,
            limit,
            parent: vec![0],
            edges: vec![vec![UNSET; ngens]],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn is_live(&mut self, x: usize) -> bool {
        self.find(x) == x
    }

    fn new_node(&mut self) -> Result<usize> {
        if self.parent.len() >= self.limit {
            return Err(Error::LimitExceeded { limit: self.limit });
        }
        let id = self.parent.len();
        self.parent.push(id);
        self.edges.push(vec![UNSET; self.ngens]);
        Ok(id)
    }

    /// Walks `word` from `node`, defining fresh targets for missing edges.
    fn trace_define(&mut self, node: usize, word: &[usize]) -> Result<usize> {
        let mut cur = self.find(node);
        for &g in word {
            cur = self.find(cur);
            let mut next = self.edges[cur][g];
            if next == UNSET {
                next = self.new_node()?;
                self.edges[cur][g] = next;
            }
            cur = self.find(next);
        }
        Ok(cur)
    }

    /// Identifies two nodes, keeping the smaller index, and resolves all
    /// induced coincidences.
    fn merge(&mut self, a: usize, b: usize) {
        let mut stack = vec![(a, b)];
        while let Some((x, y)) = stack.pop() {
            let mut x = self.find(x);
            let mut y = self.find(y);
            if x == y {
                continue;
            }
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            self.parent[y] = x;
            let row = std::mem::take(&mut self.edges[y]);
            for (g, target) in row.into_iter().enumerate() {
                if target == UNSET {
                    continue;
                }
                if self.edges[x][g] == UNSET {
                    self.edges[x][g] = target;
                } else {
                    stack.push((self.edges[x][g], target));
                }
            }
        }
    }

    fn live_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.is_live(i)).count()
    }
}

/// Size of the monoid presented by `p`, by coset enumeration over the
/// free monoid on `p`'s symbols.
///
/// Relation tracing and node definition alternate until the word graph is
/// complete, deterministic and stable; more than `limit` nodes at any
/// moment aborts with [`Error::LimitExceeded`], which is also how an
/// infinite quotient surfaces.
pub fn free_quotient_size(p: &Presentation, limit: usize) -> Result<BigUint> {
    let index: HashMap<&str, usize> = p
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let rels: Vec<(Vec<usize>, Vec<usize>)> = p
        .relations()
        .iter()
        .map(|r| {
            let side = |w: &Word| {
                w.letters()
                    .iter()
                    .map(|s| *index.get(s).expect("validated by Presentation::new"))
                    .collect::<Vec<_>>()
            };
            (side(&r.lhs), side(&r.rhs))
        })
        .collect();
    let mut graph = WordGraph::new(p.symbols().len(), limit);
    loop {
        let mut changed = false;
        let count = graph.parent.len();
        for v in 0..count {
            if !graph.is_live(v) {
                continue;
            }
            for (lhs, rhs) in &rels {
                if graph.find(v) != v {
                    break;
                }
                let before = graph.parent.len();
                let a = graph.trace_define(v, lhs)?;
                let b = graph.trace_define(v, rhs)?;
                if graph.find(a) != graph.find(b) {
                    graph.merge(a, b);
                    changed = true;
                }
                if graph.parent.len() != before {
                    changed = true;
                }
            }
        }
        let count = graph.parent.len();
        for v in 0..count {
            if graph.is_live(v) {
                for g in 0..graph.ngens {
                    if graph.edges[v][g] == UNSET {
                        let node = graph.new_node()?;
                        graph.edges[v][g] = node;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(BigUint::from(graph.live_count()))
}

/// Reads a defining presentation for `em` off its right Cayley graph: every
/// non-tree edge contributes `word(i) g = word(i g)` over the BFS words.
pub fn derive_presentation<E: MonoidElement>(
    em: &EnumeratedMonoid<E>,
    names: &[String],
) -> Result<Presentation> {
    if names.len() != em.generator_count() {
        return Err(Error::NameCount {
            names: names.len(),
            generators: em.generator_count(),
        });
    }
    let seqs: Vec<Vec<usize>> = (0..em.size()).map(|i| em.word_of(i)).collect();
    let to_word = |seq: &[usize]| {
        seq.iter()
            .fold(Word::empty(), |w, &g| w.then(Word::symbol(names[g].clone())))
    };
    let mut relations = Vec::new();
    for i in 0..em.size() {
        for g in 0..em.generator_count() {
            let j = em.right(i, g);
            let mut cand = seqs[i].clone();
            cand.push(g);
            if cand != seqs[j] {
                relations.push(Relation::new(
                    RelationLabel::User,
                    to_word(&cand),
                    to_word(&seqs[j]),
                ));
            }
        }
    }
    Presentation::new(names.to_vec(), relations)
}

/// Greedily drops relations (longest first) whose removal keeps the coset
/// enumeration at `target` within `limit` nodes. The result still presents
/// the same monoid; it just has no obvious redundancy left.
pub fn prune_presentation(
    p: &Presentation,
    target: &BigUint,
    limit: usize,
) -> Result<Presentation> {
    let index: HashMap<&str, usize> = p
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let key = |r: &Relation| {
        let seq = |w: &Word| {
            w.letters()
                .iter()
                .map(|s| index[s])
                .collect::<Vec<_>>()
        };
        (seq(&r.lhs), seq(&r.rhs))
    };
    let keys: Vec<_> = p.relations().iter().map(key).collect();
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| {
        let la = keys[a].0.len() + keys[a].1.len();
        let lb = keys[b].0.len() + keys[b].1.len();
        lb.cmp(&la).then_with(|| keys[a].cmp(&keys[b]))
    });
    let mut keep: Vec<Option<Relation>> = p.relations().iter().cloned().map(Some).collect();
    for i in order {
        let trial: Vec<Relation> = keep
            .iter()
            .enumerate()
            .filter(|&(j, r)| j != i && r.is_some())
            .map(|(_, r)| r.clone().unwrap())
            .collect();
        let trial = Presentation::new(p.symbols().to_vec(), trial)?;
        match free_quotient_size(&trial, limit) {
            Ok(q) if q == *target => keep[i] = None,
            Ok(_) => {}
            Err(Error::LimitExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Presentation::new(
        p.symbols().to_vec(),
        keep.into_iter().flatten().collect(),
    )
}
