//! Exact regular-language engine.
//!
//! Every [`Language`] is held as the minimal complete deterministic
//! automaton over its session alphabet, with states numbered in
//! breadth-first order from the initial state (successors visited in
//! alphabet order). Two languages over the same alphabet are equal exactly
//! when their tables are identical, so `==` is language equality.
//!
//! Catenation, star and factorial closure go through an internal
//! ε-NFA and the subset construction; boolean operations use the product
//! construction directly on the tables.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};

/// Cap on the number of states created by a single determinization or
/// product construction.
pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

/// A finite automaton in interchange form: possibly nondeterministic,
/// possibly incomplete, several initial states allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    pub alphabet: Alphabet,
    pub state_count: usize,
    pub initial: Vec<usize>,
    pub accepting: Vec<usize>,
    pub transitions: Vec<(usize, Symbol, usize)>,
}

impl Automaton {
    /// Checks that every state index is in range and every letter belongs
    /// to the alphabet.
    pub fn validate(&self) -> Result<()> {
        let n = self.state_count;
        let check = |q: usize, what: &str| {
            if q < n {
                Ok(())
            } else {
                Err(Error::InvalidAutomaton(format!("{what} state {q} out of range (states: {n})")))
            }
        };
        for &q in &self.initial {
            check(q, "initial")?;
        }
        for &q in &self.accepting {
            check(q, "accepting")?;
        }
        for &(p, a, q) in &self.transitions {
            check(p, "source")?;
            check(q, "target")?;
            if !self.alphabet.contains(a) {
                return Err(Error::UnknownSymbol { symbol: a, position: None });
            }
        }
        Ok(())
    }

    /// One initial state and at most one transition per (state, symbol).
    pub fn is_deterministic(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.initial.len() == 1 && self.transitions.iter().all(|&(p, a, _)| seen.insert((p, a)))
    }
}

const EPS: u32 = u32::MAX;

/// ε-NFA used as the intermediate form of the closure constructions.
#[derive(Clone, Debug)]
pub(crate) struct Nfa {
    k: usize,
    edges: Vec<Vec<(u32, u32)>>,
    initial: Vec<u32>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub(crate) fn new(k: usize) -> Self {
        Nfa { k, edges: Vec::new(), initial: Vec::new(), accepting: Vec::new() }
    }

    pub(crate) fn add_state(&mut self, accepting: bool) -> u32 {
        self.edges.push(Vec::new());
        self.accepting.push(accepting);
        (self.edges.len() - 1) as u32
    }

    pub(crate) fn add_edge(&mut self, from: u32, sym: usize, to: u32) {
        self.edges[from as usize].push((sym as u32, to));
    }

    pub(crate) fn add_eps(&mut self, from: u32, to: u32) {
        self.edges[from as usize].push((EPS, to));
    }

    pub(crate) fn add_initial(&mut self, q: u32) {
        self.initial.push(q);
    }

    pub(crate) fn set_accepting(&mut self, q: u32, accepting: bool) {
        self.accepting[q as usize] = accepting;
    }

    /// Copies the states of `lang`, dropping its dead states. Returns the
    /// new index of each original state (`None` for dropped ones).
    pub(crate) fn embed(&mut self, lang: &Language) -> Vec<Option<u32>> {
        let live = lang.live_states();
        let map: Vec<Option<u32>> = (0..lang.state_count())
            .map(|q| live[q].then(|| self.add_state(lang.accepting[q])))
            .collect();
        for q in 0..lang.state_count() {
            let Some(from) = map[q] else { continue };
            for a in 0..self.k {
                if let Some(to) = map[lang.step(q, a)] {
                    self.add_edge(from, a, to);
                }
            }
        }
        map
    }

    fn close(&self, set: &mut Vec<u32>) {
        let mut stack: Vec<u32> = set.clone();
        let mut seen: BTreeSet<u32> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &(s, t) in &self.edges[q as usize] {
                if s == EPS && seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        *set = seen.into_iter().collect();
    }

    /// Subset construction; the result is complete (the empty subset is the
    /// sink) and its initial state is 0.
    pub(crate) fn determinize(&self, limit: usize) -> Result<Table> {
        let k = self.k;
        let mut start = self.initial.clone();
        self.close(&mut start);
        let mut index: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        let mut sets: Vec<Vec<u32>> = Vec::new();
        index.insert(start.clone(), 0);
        sets.push(start);
        let mut next: Vec<u32> = Vec::new();
        let mut accepting = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            let set = sets[i].clone();
            accepting.push(set.iter().any(|&q| self.accepting[q as usize]));
            for a in 0..k {
                let mut target: Vec<u32> = Vec::new();
                for &q in &set {
                    for &(s, t) in &self.edges[q as usize] {
                        if s == a as u32 {
                            target.push(t);
                        }
                    }
                }
                target.sort_unstable();
                target.dedup();
                self.close(&mut target);
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        if sets.len() >= limit {
                            return Err(Error::StateLimit { limit });
                        }
                        let id = sets.len() as u32;
                        index.insert(target.clone(), id);
                        sets.push(target);
                        id
                    }
                };
                next.push(id);
            }
            i += 1;
        }
        Ok(Table { k, next, accepting })
    }
}

/// Complete deterministic transition table with initial state 0.
#[derive(Clone, Debug)]
pub(crate) struct Table {
    k: usize,
    next: Vec<u32>,
    accepting: Vec<bool>,
}

impl Table {
    fn len(&self) -> usize {
        self.accepting.len()
    }

    /// Keeps the states reachable from `start`, renumbered breadth-first
    /// with successors in alphabet order; `start` becomes 0.
    fn bfs_from(&self, start: usize) -> Table {
        let k = self.k;
        let mut order = vec![u32::MAX; self.len()];
        let mut queue = VecDeque::new();
        let mut visited = Vec::new();
        order[start] = 0;
        queue.push_back(start);
        while let Some(q) = queue.pop_front() {
            visited.push(q);
            for a in 0..k {
                let t = self.next[q * k + a] as usize;
                if order[t] == u32::MAX {
                    order[t] = (visited.len() + queue.len()) as u32;
                    queue.push_back(t);
                }
            }
        }
        let mut next = Vec::with_capacity(visited.len() * k);
        let mut accepting = Vec::with_capacity(visited.len());
        for &q in &visited {
            accepting.push(self.accepting[q]);
            for a in 0..k {
                next.push(order[self.next[q * k + a] as usize]);
            }
        }
        Table { k, next, accepting }
    }

    /// Moore partition refinement.
    fn minimize(&self) -> Table {
        let k = self.k;
        let n = self.len();
        let mut class: Vec<u32> = self.accepting.iter().map(|&b| b as u32).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
            let mut refined = Vec::with_capacity(n);
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                for a in 0..k {
                    sig.push(class[self.next[q * k + a] as usize]);
                }
                let fresh = ids.len() as u32;
                refined.push(*ids.entry(sig).or_insert(fresh));
            }
            let new_count = ids.len();
            class = refined;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut rep = vec![usize::MAX; count];
        for q in (0..n).rev() {
            rep[class[q] as usize] = q;
        }
        let mut next = Vec::with_capacity(count * k);
        let mut accepting = Vec::with_capacity(count);
        for &q in &rep {
            accepting.push(self.accepting[q]);
            for a in 0..k {
                next.push(class[self.next[q * k + a] as usize]);
            }
        }
        Table { k, next, accepting }.bfs_from(class[0] as usize)
    }
}

/// A regular language over a fixed session alphabet, held in canonical
/// minimal complete deterministic form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Language {
    sigma: Alphabet,
    next: Vec<u32>,
    accepting: Vec<bool>,
}

impl Language {
    fn from_table(sigma: Alphabet, table: Table) -> Language {
        let t = table.bfs_from(0).minimize();
        Language { sigma, next: t.next, accepting: t.accepting }
    }

    pub(crate) fn from_nfa(sigma: &Alphabet, nfa: &Nfa) -> Result<Language> {
        Ok(Self::from_table(sigma.clone(), nfa.determinize(DEFAULT_STATE_LIMIT)?))
    }

    /// ∅
    pub fn empty(sigma: &Alphabet) -> Language {
        let k = sigma.len();
        Language { sigma: sigma.clone(), next: vec![0; k], accepting: vec![false] }
    }

    /// {λ}
    pub fn epsilon(sigma: &Alphabet) -> Language {
        let k = sigma.len();
        let mut next = vec![1; k];
        next.extend(vec![1; k]);
        Self::from_table(sigma.clone(), Table { k, next, accepting: vec![true, false] })
    }

    /// Σ*
    pub fn universal(sigma: &Alphabet) -> Language {
        let k = sigma.len();
        Language { sigma: sigma.clone(), next: vec![0; k], accepting: vec![true] }
    }

    /// The finite language of the one-letter words of `letters`.
    pub fn letters(sigma: &Alphabet, letters: &Alphabet) -> Result<Language> {
        let mut nfa = Nfa::new(sigma.len());
        let s = nfa.add_state(false);
        let f = nfa.add_state(true);
        nfa.add_initial(s);
        for a in letters.iter() {
            nfa.add_edge(s, symbol_index(sigma, a)?, f);
        }
        Self::from_nfa(sigma, &nfa)
    }

    /// Γ* for a subalphabet Γ of Σ.
    pub fn star_of(sigma: &Alphabet, gamma: &Alphabet) -> Result<Language> {
        let mut nfa = Nfa::new(sigma.len());
        let s = nfa.add_state(true);
        nfa.add_initial(s);
        for a in gamma.iter() {
            nfa.add_edge(s, symbol_index(sigma, a)?, s);
        }
        Self::from_nfa(sigma, &nfa)
    }

    /// A finite set of words.
    pub fn from_words<'a, I>(sigma: &Alphabet, words: I) -> Result<Language>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut nfa = Nfa::new(sigma.len());
        let root = nfa.add_state(false);
        nfa.add_initial(root);
        for w in words {
            let mut q = root;
            for &a in w.symbols() {
                let t = nfa.add_state(false);
                nfa.add_edge(q, symbol_index(sigma, a)?, t);
                q = t;
            }
            nfa.set_accepting(q, true);
        }
        Self::from_nfa(sigma, &nfa)
    }

    /// Determinizes and canonicalizes an interchange automaton.
    pub fn from_automaton(aut: &Automaton) -> Result<Language> {
        aut.validate()?;
        let sigma = &aut.alphabet;
        let mut nfa = Nfa::new(sigma.len());
        for _ in 0..aut.state_count {
            nfa.add_state(false);
        }
        for &q in &aut.accepting {
            nfa.set_accepting(q as u32, true);
        }
        for &q in &aut.initial {
            nfa.add_initial(q as u32);
        }
        for &(p, a, q) in &aut.transitions {
            nfa.add_edge(p as u32, symbol_index(sigma, a)?, q as u32);
        }
        Self::from_nfa(sigma, &nfa)
    }

    /// The canonical table as an interchange automaton, transitions sorted
    /// by source state then alphabet order.
    pub fn to_automaton(&self) -> Automaton {
        let k = self.k();
        let mut transitions = Vec::with_capacity(self.next.len());
        for q in 0..self.state_count() {
            for (a, sym) in self.sigma.iter().enumerate() {
                transitions.push((q, sym, self.next[q * k + a] as usize));
            }
        }
        Automaton {
            alphabet: self.sigma.clone(),
            state_count: self.state_count(),
            initial: vec![0],
            accepting: (0..self.state_count()).filter(|&q| self.accepting[q]).collect(),
            transitions,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.sigma
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    fn k(&self) -> usize {
        self.sigma.len()
    }

    pub(crate) fn step(&self, q: usize, a: usize) -> usize {
        self.next[q * self.k() + a] as usize
    }

    pub(crate) fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    fn same_alphabet(&self, other: &Language) -> Result<()> {
        if self.sigma == other.sigma {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// States from which some accepting state is reachable.
    pub(crate) fn live_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let k = self.k();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..k {
                preds[self.step(q, a)].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    pub fn is_empty(&self) -> bool {
        !self.accepting.iter().any(|&b| b)
    }

    /// True for {λ}.
    pub fn is_epsilon(&self) -> bool {
        *self == Language::epsilon(&self.sigma)
    }

    pub fn contains(&self, word: &Word) -> bool {
        let mut q = 0;
        for &s in word.symbols() {
            match self.sigma.index_of(s) {
                Some(a) => q = self.step(q, a),
                None => return false,
            }
        }
        self.accepting[q]
    }

    /// Symbols that occur in some word of the language.
    pub fn occurring_symbols(&self) -> Alphabet {
        let live = self.live_states();
        let k = self.k();
        let mut used = vec![false; k];
        for q in 0..self.state_count() {
            if !live[q] {
                continue;
            }
            for (a, u) in used.iter_mut().enumerate() {
                if live[self.step(q, a)] {
                    *u = true;
                }
            }
        }
        self.sigma.iter().zip(used).filter(|&(_, u)| u).map(|(s, _)| s).collect()
    }

    fn product(&self, other: &Language, keep: impl Fn(bool, bool) -> bool) -> Result<Language> {
        self.same_alphabet(other)?;
        let k = self.k();
        let m = other.state_count();
        let total = self.state_count() * m;
        if total > DEFAULT_STATE_LIMIT {
            return Err(Error::StateLimit { limit: DEFAULT_STATE_LIMIT });
        }
        let mut id = vec![u32::MAX; total];
        let mut pairs = vec![(0usize, 0usize)];
        id[0] = 0;
        let mut next = Vec::new();
        let mut accepting = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            accepting.push(keep(self.accepting[p], other.accepting[q]));
            for a in 0..k {
                let t = (self.step(p, a), other.step(q, a));
                let slot = t.0 * m + t.1;
                if id[slot] == u32::MAX {
                    id[slot] = pairs.len() as u32;
                    pairs.push(t);
                }
                next.push(id[slot]);
            }
            i += 1;
        }
        Ok(Self::from_table(self.sigma.clone(), Table { k, next, accepting }))
    }

    pub fn union(&self, other: &Language) -> Result<Language> {
        self.product(other, |x, y| x || y)
    }

    pub fn intersection(&self, other: &Language) -> Result<Language> {
        self.product(other, |x, y| x && y)
    }

    pub fn difference(&self, other: &Language) -> Result<Language> {
        self.product(other, |x, y| x && !y)
    }

    pub fn complement(&self) -> Language {
        Language {
            sigma: self.sigma.clone(),
            next: self.next.clone(),
            accepting: self.accepting.iter().map(|&b| !b).collect(),
        }
    }

    /// `self · other`
    pub fn concat(&self, other: &Language) -> Result<Language> {
        self.same_alphabet(other)?;
        let mut nfa = Nfa::new(self.k());
        let left = nfa.embed(self);
        let right = nfa.embed(other);
        let (Some(l0), Some(r0)) = (left[0], right[0]) else {
            return Ok(Language::empty(&self.sigma));
        };
        nfa.add_initial(l0);
        for (q, mapped) in left.iter().enumerate() {
            if let Some(s) = *mapped {
                if self.accepting[q] {
                    nfa.set_accepting(s, false);
                    nfa.add_eps(s, r0);
                }
            }
        }
        Self::from_nfa(&self.sigma, &nfa)
    }

    /// Kleene closure.
    pub fn star(&self) -> Result<Language> {
        let mut nfa = Nfa::new(self.k());
        let hub = nfa.add_state(true);
        nfa.add_initial(hub);
        let map = nfa.embed(self);
        if let Some(s0) = map[0] {
            nfa.add_eps(hub, s0);
            for (q, mapped) in map.iter().enumerate() {
                if let Some(s) = *mapped {
                    if self.accepting[q] {
                        nfa.add_eps(s, hub);
                    }
                }
            }
        }
        Self::from_nfa(&self.sigma, &nfa)
    }

    /// `self^n`; `self^0` is {λ}.
    pub fn power(&self, n: u32) -> Result<Language> {
        let mut acc = Language::epsilon(&self.sigma);
        for _ in 0..n {
            acc = acc.concat(self)?;
        }
        Ok(acc)
    }

    /// Left quotient by one letter: `{w : a·w ∈ self}`.
    pub fn left_quotient(&self, a: Symbol) -> Result<Language> {
        let i = symbol_index(&self.sigma, a)?;
        let table = Table { k: self.k(), next: self.next.clone(), accepting: self.accepting.clone() };
        let t = table.bfs_from(self.step(0, i)).minimize();
        Ok(Language { sigma: self.sigma.clone(), next: t.next, accepting: t.accepting })
    }

    /// `self ⊆ other`, by a product walk looking for a word accepted by
    /// `self` and rejected by `other`.
    pub fn is_subset(&self, other: &Language) -> Result<bool> {
        self.same_alphabet(other)?;
        let k = self.k();
        let m = other.state_count();
        let mut seen = BTreeSet::new();
        let mut stack = vec![(0usize, 0usize)];
        seen.insert((0, 0));
        while let Some((p, q)) = stack.pop() {
            if self.accepting[p] && !other.accepting[q] {
                return Ok(false);
            }
            for a in 0..k {
                let t = (self.step(p, a), other.step(q, a));
                if seen.insert(t) {
                    stack.push(t);
                }
            }
            debug_assert!(seen.len() <= self.state_count() * m);
        }
        Ok(true)
    }

    pub fn is_proper_subset(&self, other: &Language) -> Result<bool> {
        Ok(self != other && self.is_subset(other)?)
    }

    pub fn equals(&self, other: &Language) -> Result<bool> {
        self.same_alphabet(other)?;
        Ok(self == other)
    }

    /// All members of length at most `n`, in shortlex order.
    pub fn enumerate_up_to(&self, n: usize) -> Vec<Word> {
        let live = self.live_states();
        let mut out = Vec::new();
        if !live[0] {
            return out;
        }
        let mut level: Vec<(Word, usize)> = vec![(Word::empty(), 0)];
        for len in 0..=n {
            for (w, q) in &level {
                if self.accepting[*q] {
                    out.push(w.clone());
                }
            }
            if len == n {
                break;
            }
            let mut next_level = Vec::new();
            for (w, q) in &level {
                for (a, sym) in self.sigma.iter().enumerate() {
                    let t = self.step(*q, a);
                    if live[t] {
                        let mut w2 = w.clone();
                        w2.push(sym);
                        next_level.push((w2, t));
                    }
                }
            }
            level = next_level;
        }
        out
    }
}

pub(crate) fn symbol_index(sigma: &Alphabet, a: Symbol) -> Result<usize> {
    sigma.index_of(a).ok_or(Error::UnknownSymbol { symbol: a, position: None })
}
