//! Expression syntax for regular languages.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+
//! factor := atom ('*' | '^' INT)*
//! atom   := LETTER | 'eps' | 'λ' | 'ε' | 'empty' | '∅'
//!         | '(' expr ')' | 'Fac(' expr ')' | '{' word (',' word)* '}'
//! word   := LETTER+ | 'eps' | 'λ' | 'ε'
//! ```
//!
//! Juxtaposition is catenation and `+` is union. Whitespace is ignored
//! between tokens. The keywords `eps` and `empty` are only recognized when
//! `e` is not a letter of the alphabet, and `Fac` only when `F` is not;
//! `λ`, `ε` and `∅` are always available. Printing uses `λ` and `∅` so the
//! printed form parses back under any alphabet.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::automata::Language;
use crate::error::{Error, Result};
use crate::factorial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Letter(Symbol),
    Empty,
    Epsilon,
    Union(Box<Expr>, Box<Expr>),
    Concat(Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
    Power(Box<Expr>, u32),
    Fac(Box<Expr>),
    WordSet(Vec<Word>),
}

impl Expr {
    pub fn parse(src: &str, sigma: &Alphabet) -> Result<Expr> {
        let mut p = Parser { chars: src.chars().collect(), pos: 0, sigma };
        p.skip_ws();
        if p.at_end() {
            return Err(p.error("empty expression"));
        }
        let e = p.expr()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error(&format!("unexpected '{}'", p.chars[p.pos])));
        }
        Ok(e)
    }

    /// The denoted language over `sigma`.
    pub fn build(&self, sigma: &Alphabet) -> Result<Language> {
        Ok(match self {
            Expr::Letter(a) => Language::letters(sigma, &Alphabet::from_symbols([*a]))?,
            Expr::Empty => Language::empty(sigma),
            Expr::Epsilon => Language::epsilon(sigma),
            Expr::Union(l, r) => l.build(sigma)?.union(&r.build(sigma)?)?,
            Expr::Concat(l, r) => l.build(sigma)?.concat(&r.build(sigma)?)?,
            Expr::Star(e) => e.build(sigma)?.star()?,
            Expr::Power(e, n) => e.build(sigma)?.power(*n)?,
            Expr::Fac(e) => factorial::closure_of(&e.build(sigma)?)?,
            Expr::WordSet(ws) => Language::from_words(sigma, ws)?,
        })
    }

    /// An expression denoting `lang`, by state elimination over the trimmed
    /// automaton. Correct but not short.
    pub fn from_language(lang: &Language) -> Expr {
        let sigma = lang.alphabet();
        let live = lang.live_states();
        if !live[0] {
            return Expr::Empty;
        }
        // Generalized automaton: states 0..n are the live states, then a
        // fresh start `s` and final `f`.
        let states: Vec<usize> = (0..lang.state_count()).filter(|&q| live[q]).collect();
        let n = states.len();
        let idx = |q: usize| states.iter().position(|&x| x == q);
        let (s, f) = (n, n + 1);
        let mut edge: Vec<Vec<Option<Expr>>> = vec![vec![None; n + 2]; n + 2];
        edge[s][idx(0).unwrap()] = Some(Expr::Epsilon);
        for (i, &q) in states.iter().enumerate() {
            if lang.is_accepting(q) {
                edge[i][f] = Some(Expr::Epsilon);
            }
            for (a, sym) in sigma.iter().enumerate() {
                if let Some(j) = idx(lang.step(q, a)) {
                    let e = edge[i][j].take();
                    edge[i][j] = Some(union_opt(e, Expr::Letter(sym)));
                }
            }
        }
        // Removing the start state last keeps its loop as a leading star.
        for k in (0..n).rev() {
            let loop_ = edge[k][k].take().map(star_simplified);
            let ins: Vec<usize> = (0..n + 2).filter(|&i| i != k && edge[i][k].is_some()).collect();
            let outs: Vec<usize> =
                (0..n + 2).filter(|&j| j != k && edge[k][j].is_some()).collect();
            for &i in &ins {
                for &j in &outs {
                    let mut path = edge[i][k].clone().unwrap();
                    if let Some(l) = &loop_ {
                        path = concat_simplified(path, l.clone());
                    }
                    path = concat_simplified(path, edge[k][j].clone().unwrap());
                    let e = edge[i][j].take();
                    edge[i][j] = Some(union_opt(e, path));
                }
            }
            for row in edge.iter_mut() {
                row[k] = None;
            }
            edge[k].fill(None);
        }
        edge[s][f].take().unwrap_or(Expr::Empty)
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Union(..) => 0,
            Expr::Concat(..) => 1,
            Expr::Star(_) | Expr::Power(..) => 2,
            _ => 3,
        }
    }
}

fn union_opt(e: Option<Expr>, x: Expr) -> Expr {
    match e {
        None => x,
        Some(e) if e == x => e,
        Some(Expr::Epsilon) if plus_body(&x).is_some() => star_simplified(plus_body(&x).unwrap().clone()),
        Some(e) if x == Expr::Epsilon && plus_body(&e).is_some() => {
            star_simplified(plus_body(&e).unwrap().clone())
        }
        Some(e) => match x {
            Expr::Union(l, r) => union_opt(Some(union_opt(Some(e), *l)), *r),
            x => Expr::Union(Box::new(e), Box::new(x)),
        },
    }
}

/// `y` when `e` is `yy*` or `y*y`.
fn plus_body(e: &Expr) -> Option<&Expr> {
    match e {
        Expr::Concat(l, r) => match (&**l, &**r) {
            (y, Expr::Star(z)) | (Expr::Star(z), y) if y == &**z => Some(y),
            _ => None,
        },
        _ => None,
    }
}

/// Catenation, dropping λ and associating to the left as the parser does.
fn concat_simplified(l: Expr, r: Expr) -> Expr {
    match (l, r) {
        (Expr::Epsilon, r) => r,
        (l, Expr::Epsilon) => l,
        (l, Expr::Concat(x, y)) => Expr::Concat(Box::new(concat_simplified(l, *x)), y),
        (l, r) => Expr::Concat(Box::new(l), Box::new(r)),
    }
}

fn star_simplified(e: Expr) -> Expr {
    match e {
        Expr::Epsilon => Expr::Epsilon,
        s @ Expr::Star(_) => s,
        e => Expr::Star(Box::new(e)),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Letter(a) => write!(f, "{a}"),
            Expr::Empty => f.write_str("∅"),
            Expr::Epsilon => f.write_str("λ"),
            Expr::Union(l, r) => {
                wrap(f, l, 0)?;
                f.write_str("+")?;
                wrap(f, r, 1)
            }
            Expr::Concat(l, r) => {
                wrap(f, l, 1)?;
                wrap(f, r, 2)
            }
            Expr::Star(e) => {
                wrap(f, e, 3)?;
                f.write_str("*")
            }
            Expr::Power(e, n) => {
                wrap(f, e, 3)?;
                write!(f, "^{n}")
            }
            Expr::Fac(e) => write!(f, "Fac({e})"),
            Expr::WordSet(ws) => {
                f.write_str("{")?;
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                f.write_str("}")
            }
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    sigma: &'a Alphabet,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: String::from(message) }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn keyword(&self, kw: &str) -> bool {
        let first = kw.chars().next().unwrap();
        !self.sigma.contains(first)
            && kw.chars().enumerate().all(|(i, c)| self.chars.get(self.pos + i) == Some(&c))
    }

    fn starts_atom(&mut self) -> bool {
        self.skip_ws();
        match self.peek() {
            Some(c) => c == '(' || c == '{' || c == 'λ' || c == 'ε' || c == '∅' || c.is_alphanumeric(),
            None => false,
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        while self.eat('+') {
            let r = self.term()?;
            e = Expr::Union(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Expr> {
        if !self.starts_atom() {
            return Err(self.error(match self.peek() {
                Some(_) => "expected an atom",
                None => "unexpected end of expression",
            }));
        }
        let mut e = self.factor()?;
        while self.starts_atom() {
            let r = self.factor()?;
            e = Expr::Concat(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        loop {
            if self.eat('*') {
                e = Expr::Star(Box::new(e));
            } else if self.eat('^') {
                self.skip_ws();
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error("expected an exponent"));
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n = digits.parse::<u32>().map_err(|_| Error::Syntax {
                    position: start,
                    message: String::from("exponent out of range"),
                })?;
                e = Expr::Power(Box::new(e), n);
            } else {
                return Ok(e);
            }
        }
    }

    fn epsilon_token(&mut self) -> bool {
        match self.peek() {
            Some('λ') | Some('ε') => {
                self.pos += 1;
                true
            }
            _ if self.keyword("eps") => {
                self.pos += 3;
                true
            }
            _ => false,
        }
    }

    fn letter(&mut self) -> Result<Symbol> {
        let c = self.peek().ok_or_else(|| self.error("unexpected end of expression"))?;
        if self.sigma.contains(c) {
            self.pos += 1;
            Ok(c)
        } else if c.is_alphanumeric() {
            Err(Error::UnknownSymbol { symbol: c, position: Some(self.pos) })
        } else {
            Err(self.error(&format!("unexpected '{c}'")))
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        if self.epsilon_token() {
            return Ok(Expr::Epsilon);
        }
        if self.peek() == Some('∅') {
            self.pos += 1;
            return Ok(Expr::Empty);
        }
        if self.keyword("empty") {
            self.pos += 5;
            return Ok(Expr::Empty);
        }
        if self.keyword("Fac") {
            self.pos += 3;
            self.expect('(')?;
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(Expr::Fac(Box::new(e)));
        }
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('{') => {
                self.pos += 1;
                let mut words = vec![self.word()?];
                while self.eat(',') {
                    words.push(self.word()?);
                }
                self.expect('}')?;
                Ok(Expr::WordSet(words))
            }
            _ => Ok(Expr::Letter(self.letter()?)),
        }
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        if self.epsilon_token() {
            return Ok(Word::empty());
        }
        let mut w = Word::new(vec![self.letter()?]);
        while self.peek().is_some_and(|c| self.sigma.contains(c)) {
            w.push(self.letter()?);
        }
        Ok(w)
    }
}
