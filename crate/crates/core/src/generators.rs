//! Named generating sets, words over them, and symbol bindings.
//!
//! Words follow a small grammar: juxtaposition is product, `^k` raises a
//! symbol or parenthesized group to a nonnegative power, and `1` is the
//! empty word. `( x1 x2^3 )^4 x1` parses, and [`Word`] values print back in
//! the same shape.
//!
//! The named generators of PTₙ ≀ Tₘ bound by [`build_named_generators`] are
//!
//! * `pi`, `rho`, `tau`, `sigma`: the transposition (1 2), the full cycle,
//!   the idempotent `[2,2,3,…,n]` and the rank-lowering `[-,2,3,…,n]`,
//!   embedded in slot 1;
//! * `piB`, `rhoB`, `tauB`: the analogous full maps on `m` points embedded
//!   as tails;
//! * `x1`, `x2`: the pair generating the unit group, from which `pi`, `rho`,
//!   `piB`, `rhoB` are recovered by the words of [`xi_words`].
//!
//! `{x1, x2, tau, tauB, sigma}` generates PTₙ ≀ Tₘ, and its image under the
//! block quotient generates PT_{n×m}.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::element::MonoidElement;
use crate::error::{Error, Result};
use crate::transform::{PartialMap, UNDEFINED};
use crate::wreath::WreathElement;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Base {
    Symbol(String),
    Group(Word),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Factor {
    base: Base,
    exponent: u64,
}

/// A word over symbol names, kept in factored form so large powers stay
/// cheap to store and evaluate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    factors: Vec<Factor>,
}

impl Word {
    /// The empty word, printed as `1`.
    pub fn empty() -> Self {
        Word { factors: Vec::new() }
    }

    /// The one-letter word `name`.
    pub fn symbol(name: impl Into<String>) -> Self {
        Word {
            factors: vec![Factor {
                base: Base::Symbol(name.into()),
                exponent: 1,
            }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `self` raised to `exp`; `pow(0)` is the empty word.
    pub fn pow(self, exp: u64) -> Self {
        if exp == 0 {
            return Word::empty();
        }
        if exp == 1 || self.is_empty() {
            return self;
        }
        if self.factors.len() == 1 {
            let f = &self.factors[0];
            if let Some(e) = f.exponent.checked_mul(exp) {
                return Word {
                    factors: vec![Factor {
                        base: f.base.clone(),
                        exponent: e,
                    }],
                };
            }
        }
        Word {
            factors: vec![Factor {
                base: Base::Group(self),
                exponent: exp,
            }],
        }
    }

    /// Concatenation: `self` followed by `rhs`.
    pub fn then(mut self, rhs: Word) -> Self {
        self.factors.extend(rhs.factors);
        self
    }

    /// The fully expanded sequence of letters. Length grows with the
    /// exponents, so keep those modest before calling this.
    pub fn letters(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters<'a>(&'a self, out: &mut Vec<&'a str>) {
        for f in &self.factors {
            if f.exponent == 0 {
                continue;
            }
            let start = out.len();
            match &f.base {
                Base::Symbol(s) => out.push(s.as_str()),
                Base::Group(w) => w.collect_letters(out),
            }
            let end = out.len();
            for _ in 1..f.exponent {
                for k in start..end {
                    let item = out[k];
                    out.push(item);
                }
            }
        }
    }

    /// The set of distinct symbols appearing in the word.
    pub fn symbols(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        for f in &self.factors {
            match &f.base {
                Base::Symbol(s) => {
                    out.insert(s.as_str());
                }
                Base::Group(w) => w.collect_symbols(out),
            }
        }
    }

    /// Replaces every symbol with its image under `table`, leaving symbols
    /// without an entry alone. Exponents are preserved, so substituting into
    /// `pi^k` yields `(w_pi)^k`.
    pub fn substitute(&self, table: &HashMap<String, Word>) -> Word {
        let factors = self
            .factors
            .iter()
            .map(|f| Factor {
                base: match &f.base {
                    Base::Symbol(s) => match table.get(s) {
                        Some(w) => Base::Group(w.clone()),
                        None => Base::Symbol(s.clone()),
                    },
                    Base::Group(w) => Base::Group(w.substitute(table)),
                },
                exponent: f.exponent,
            })
            .collect();
        Word { factors }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match &factor.base {
                Base::Symbol(s) => write!(f, "{s}")?,
                Base::Group(w) => write!(f, "( {w} )")?,
            }
            if factor.exponent != 1 {
                write!(f, "^{}", factor.exponent)?;
            }
        }
        Ok(())
    }
}

fn valid_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

#[derive(Debug, PartialEq)]
enum Token {
    LParen,
    RParen,
    Caret,
    Int(u64),
    Sym(String),
}

fn lex(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            c if c.is_ascii_digit() => {
                let mut v: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse("exponent too large".into()))?;
                    chars.next();
                }
                out.push(Token::Int(v));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Sym(name));
            }
            c => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct WordParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl WordParser {
    fn parse_word(&mut self) -> Result<Word> {
        let mut word = Word::empty();
        loop {
            match self.tokens.get(self.pos) {
                None | Some(Token::RParen) => return Ok(word),
                _ => {
                    if let Some(item) = self.parse_item()? {
                        word = word.then(item);
                    }
                }
            }
        }
    }

    fn parse_item(&mut self) -> Result<Option<Word>> {
        let base = match &self.tokens[self.pos] {
            Token::Sym(name) => {
                let w = Word::symbol(name.clone());
                self.pos += 1;
                Some(w)
            }
            Token::Int(1) => {
                self.pos += 1;
                None
            }
            Token::Int(v) => {
                return Err(Error::Parse(format!(
                    "unexpected integer {v}; only `1` names the empty word"
                )))
            }
            Token::LParen => {
                self.pos += 1;
                let w = self.parse_word()?;
                match self.tokens.get(self.pos) {
                    Some(Token::RParen) => self.pos += 1,
                    _ => return Err(Error::Parse("missing `)`".into())),
                }
                Some(w)
            }
            Token::Caret => return Err(Error::Parse("`^` needs a base".into())),
            Token::RParen => unreachable!("handled by parse_word"),
        };
        let exponent = if matches!(self.tokens.get(self.pos), Some(Token::Caret)) {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(v)) => {
                    self.pos += 1;
                    *v
                }
                _ => return Err(Error::Parse("`^` needs an integer exponent".into())),
            }
        } else {
            1
        };
        Ok(base.map(|w| w.pow(exponent)))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = WordParser {
            tokens: lex(s)?,
            pos: 0,
        };
        let word = parser.parse_word()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse("unbalanced `)`".into()));
        }
        Ok(word)
    }
}

/// An ordered list of named elements of one monoid, the evaluation context
/// for [`Word`]s.
#[derive(Clone, Debug)]
pub struct Alphabet<E> {
    names: Vec<String>,
    elements: Vec<E>,
    index: HashMap<String, usize>,
}

impl<E: MonoidElement> Alphabet<E> {
    /// Binds names to elements. Names must be distinct, valid word symbols,
    /// and all elements must share one shape.
    pub fn new(bindings: impl IntoIterator<Item = (String, E)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut elements: Vec<E> = Vec::new();
        let mut index = HashMap::new();
        for (name, element) in bindings {
            if !valid_symbol(&name) {
                return Err(Error::Parse(format!("invalid symbol name `{name}`")));
            }
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::DuplicateSymbol(name));
            }
            if let Some(first) = elements.first() {
                if !first.same_shape(&element) {
                    return Err(Error::ShapeMismatch { symbol: name });
                }
            }
            names.push(name);
            elements.push(element);
        }
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet {
            names,
            elements,
            index,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: construction rejects empty binding lists.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, name: &str) -> Option<&E> {
        self.index.get(name).map(|&i| &self.elements[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &E)> {
        self.names
            .iter()
            .map(String::as_str)
            .zip(self.elements.iter())
    }

    /// The identity of the underlying monoid.
    pub fn identity(&self) -> E {
        self.elements[0].identity_like()
    }

    /// Evaluates a word, using binary exponentiation per factor.
    pub fn eval(&self, word: &Word) -> Result<E> {
        let mut acc = self.identity();
        for f in &word.factors {
            let base = match &f.base {
                Base::Symbol(s) => self
                    .get(s)
                    .ok_or_else(|| Error::UnboundSymbol(s.clone()))?
                    .clone(),
                Base::Group(w) => self.eval(w)?,
            };
            acc = acc.multiply(&base.pow(f.exponent));
        }
        Ok(acc)
    }

    /// Applies `f` to every element, keeping names; the usual way to push an
    /// alphabet through the block quotient.
    pub fn map<T: MonoidElement>(&self, f: impl FnMut(&E) -> T) -> Result<Alphabet<T>> {
        Alphabet::new(self.names.iter().cloned().zip(self.elements.iter().map(f)))
    }
}

/// The standard rank-4 generating set of PTₙ.
#[derive(Clone, Debug)]
pub struct PtGenerators {
    /// The transposition (1 2).
    pub pi: PartialMap,
    /// The full cycle (1 2 … n).
    pub rho: PartialMap,
    /// The idempotent `[2,2,3,…,n]`.
    pub tau: PartialMap,
    /// The partial identity `[-,2,3,…,n]`.
    pub sigma: PartialMap,
}

/// Builds `pi`, `rho`, `tau`, `sigma` for PTₙ, `n ≥ 2`.
pub fn standard_generators_ptn(n: usize) -> Result<PtGenerators> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { required: 2, got: n });
    }
    let pi = PartialMap::cycle(n, &[1, 2])?;
    let rho = PartialMap::cycle(n, &(1..=n).collect::<Vec<_>>())?;
    let mut tau_images: Vec<usize> = (0..n).collect();
    tau_images[0] = 1;
    let tau = PartialMap::from_images(tau_images)?;
    let mut sigma_images: Vec<usize> = (0..n).collect();
    sigma_images[0] = UNDEFINED;
    let sigma = PartialMap::from_images(sigma_images)?;
    Ok(PtGenerators { pi, rho, tau, sigma })
}

/// The unit-group pair `(ξ₁, ξ₂)` of PTₙ ≀ Tₘ, `n, m ≥ 2`.
///
/// `ξ₂ = ((1 2 … n)ε₁)((1 2)ε̄)` always; `ξ₁` is `((1 2)ε₂)((2 3 … m)ε̄)`
/// when `n` and `m` are both even and `((1 2)ε₂)((1 2 … m)ε̄)` otherwise.
pub fn xi_generators(n: usize, m: usize) -> Result<(WreathElement, WreathElement)> {
    if n < 2 || m < 2 {
        return Err(Error::DegreeTooSmall {
            required: 2,
            got: n.min(m),
        });
    }
    let x1_tail = if n.is_multiple_of(2) && m.is_multiple_of(2) {
        PartialMap::cycle(m, &(2..=m).collect::<Vec<_>>())?
    } else {
        PartialMap::cycle(m, &(1..=m).collect::<Vec<_>>())?
    };
    let x1 = WreathElement::embed_slot(PartialMap::cycle(n, &[1, 2])?, 2, m)?
        .multiply(&WreathElement::embed_tail(x1_tail, n)?)?;
    let x2 = WreathElement::embed_slot(
        PartialMap::cycle(n, &(1..=n).collect::<Vec<_>>())?,
        1,
        m,
    )?
    .multiply(&WreathElement::embed_tail(PartialMap::cycle(m, &[1, 2])?, n)?)?;
    Ok((x1, x2))
}

/// Binds the nine named generators of PTₙ ≀ Tₘ, in the order `pi rho tau
/// sigma piB rhoB tauB x1 x2`.
pub fn build_named_generators(n: usize, m: usize) -> Result<Alphabet<WreathElement>> {
    if n < 2 || m < 2 {
        return Err(Error::DegreeTooSmall {
            required: 2,
            got: n.min(m),
        });
    }
    let inner = standard_generators_ptn(n)?;
    let outer = standard_generators_ptn(m)?;
    let (x1, x2) = xi_generators(n, m)?;
    let slot = |a: PartialMap| WreathElement::embed_slot(a, 1, m);
    let tail = |t: PartialMap| WreathElement::embed_tail(t, n);
    Alphabet::new([
        ("pi".to_string(), slot(inner.pi)?),
        ("rho".to_string(), slot(inner.rho)?),
        ("tau".to_string(), slot(inner.tau)?),
        ("sigma".to_string(), slot(inner.sigma)?),
        ("piB".to_string(), tail(outer.pi)?),
        ("rhoB".to_string(), tail(outer.rho)?),
        ("tauB".to_string(), tail(outer.tau)?),
        ("x1".to_string(), x1),
        ("x2".to_string(), x2),
    ])
}

/// Words recovering `pi`, `rho`, `piB`, `rhoB` from `{x1, x2}` alone.
#[derive(Clone, Debug)]
pub struct XiWords {
    pub pi: Word,
    pub rho: Word,
    pub pi_bar: Word,
    pub rho_bar: Word,
}

impl XiWords {
    /// The substitution table sending each recovered symbol to its word.
    pub fn substitution(&self) -> HashMap<String, Word> {
        HashMap::from([
            ("pi".to_string(), self.pi.clone()),
            ("rho".to_string(), self.rho.clone()),
            ("piB".to_string(), self.pi_bar.clone()),
            ("rhoB".to_string(), self.rho_bar.clone()),
        ])
    }
}

/// The words over `{x1, x2}` expressing `pi`, `rho`, `piB`, `rhoB` in
/// PTₙ ≀ Tₘ. Requires `n, m ≥ 2`; the shape differs between the case where
/// `n` and `m` are both even and all the others.
pub fn xi_words(n: usize, m: usize) -> XiWords {
    assert!(n >= 2 && m >= 2, "xi words need n, m >= 2");
    let n64 = n as u64;
    let m64 = m as u64;
    let x1 = || Word::symbol("x1");
    let x2 = || Word::symbol("x2");
    if n.is_multiple_of(2) && m.is_multiple_of(2) {
        let a = x1().pow(m64 - 1).then(x2().pow(2));
        let b = x1().then(x2().pow(2));
        let ab = a
            .pow((m64 - 2) * (n64 - 1) * (n64 - 1))
            .then(b.pow((m64 - 1) * (n64 * n64 - n64 - 1)));
        let x1x2m = x1().then(x2()).pow(m64);
        XiWords {
            pi: ab.clone().then(x1x2m.clone()),
            rho: ab.clone().pow(n64 - 1),
            pi_bar: x2().pow(2 * n64 - 1).then(ab.clone().pow(n64 - 1)),
            rho_bar: x2()
                .pow(2 * n64 - 1)
                .then(ab.pow(n64))
                .then(x1x2m)
                .then(x2().pow(2 * n64 - 1))
                .then(x1())
                .then(x2()),
        }
    } else {
        let c = x1().then(x2().pow(2 * n64 - 1));
        let d = x1().pow(m64 + 1).then(x2().pow(2 * n64 - 1));
        XiWords {
            pi: c
                .clone()
                .pow((m64 - 1) * n64)
                .then(d.clone().pow((m64 - 1) * (n64 - 1)))
                .then(x1().pow(m64)),
            rho: c
                .clone()
                .pow(n64 - 1)
                .then(d.clone().pow((m64 - 2) * (n64 - 1))),
            pi_bar: x1()
                .pow(2 * m64 - 1)
                .then(c.clone().pow(n64))
                .then(d.clone().pow((m64 - 2) * (n64 - 1))),
            rho_bar: x1()
                .pow(2 * m64 - 1)
                .then(c.pow((m64 - 1) * n64))
                .then(d.pow((m64 - 1) * (n64 - 1)))
                .then(x1().pow(m64 + 2)),
        }
    }
}

/// The pair whose generated congruence on PTₙ ≀ Tₘ is exactly the kernel of
/// the block quotient: the slot-1 embedding of the empty map, paired with
/// itself times `tauB`.
pub fn kernel_generating_pair(n: usize, m: usize) -> Result<(WreathElement, WreathElement)> {
    if n < 2 || m < 2 {
        return Err(Error::DegreeTooSmall {
            required: 2,
            got: n.min(m),
        });
    }
    let lhs = WreathElement::embed_slot(PartialMap::empty(n), 1, m)?;
    let tau_bar = WreathElement::embed_tail(standard_generators_ptn(m)?.tau, n)?;
    let rhs = lhs.multiply(&tau_bar)?;
    Ok((lhs, rhs))
}
