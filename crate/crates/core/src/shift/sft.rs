use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::{Ray, ShiftError};

/// Index of a symbol inside its system's lexicographically sorted table.
pub type SymbolId = usize;

/// A finite word together with the index of its first coordinate.
///
/// Windows matter for related-word computations: two words are only
/// comparable when they occupy the same window.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    pub start: i64,
    pub symbols: Vec<SymbolId>,
}

impl Word {
    pub fn new(start: i64, symbols: Vec<SymbolId>) -> Word {
        Word { start, symbols }
    }

    pub fn end(&self) -> i64 {
        self.start + self.symbols.len() as i64 - 1
    }

    /// Symbol at absolute index `i`, if the window covers it.
    pub fn at(&self, i: i64) -> Option<SymbolId> {
        if i < self.start {
            return None;
        }
        self.symbols.get((i - self.start) as usize).copied()
    }
}

/// A one-step shift of finite type: a vertex shift on a finite graph.
///
/// Symbols are stored sorted lexicographically by name and addressed by
/// their index, so all derived iteration orders are deterministic.  The
/// graph may be empty (the empty shift) and need not be essential;
/// operations that require every symbol to carry a bi-infinite orbit
/// state that precondition and check it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneStepSft {
    name: String,
    symbols: Vec<String>,
    transitions: BTreeSet<(SymbolId, SymbolId)>,
    succ: Vec<Vec<SymbolId>>,
    pred: Vec<Vec<SymbolId>>,
}

impl OneStepSft {
    /// Builds a system from symbol names and transitions given by name.
    pub fn new<S: AsRef<str>>(
        name: &str,
        symbols: &[S],
        edges: &[(S, S)],
    ) -> Result<OneStepSft, ShiftError> {
        let mut names: Vec<String> = Vec::with_capacity(symbols.len());
        for s in symbols {
            let s = s.as_ref();
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(ShiftError::BadSymbolName {
                    system: name.to_string(),
                    name: s.to_string(),
                });
            }
            names.push(s.to_string());
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(ShiftError::DuplicateSymbol {
                system: name.to_string(),
                name: w[0].clone(),
            });
        }
        let index: BTreeMap<&str, SymbolId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut transitions = BTreeSet::new();
        for (a, b) in edges {
            let a = *index.get(a.as_ref()).ok_or_else(|| ShiftError::UnknownSymbol {
                system: name.to_string(),
                name: a.as_ref().to_string(),
            })?;
            let b = *index.get(b.as_ref()).ok_or_else(|| ShiftError::UnknownSymbol {
                system: name.to_string(),
                name: b.as_ref().to_string(),
            })?;
            transitions.insert((a, b));
        }
        Ok(Self::from_parts(name.to_string(), names, transitions))
    }

    /// Builds a system from an already sorted symbol table and id pairs.
    pub(crate) fn from_parts(
        name: String,
        symbols: Vec<String>,
        transitions: BTreeSet<(SymbolId, SymbolId)>,
    ) -> OneStepSft {
        let n = symbols.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(a, b) in &transitions {
            succ[a].push(b);
            pred[b].push(a);
        }
        OneStepSft {
            name,
            symbols,
            transitions,
            succ,
            pred,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbol_count(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbol_name(&self, id: SymbolId) -> &str {
        &self.symbols[id]
    }

    pub fn symbol_names(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol_id(&self, name: &str) -> Option<SymbolId> {
        self.symbols.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    pub fn transitions(&self) -> &BTreeSet<(SymbolId, SymbolId)> {
        &self.transitions
    }

    pub fn has_transition(&self, a: SymbolId, b: SymbolId) -> bool {
        self.transitions.contains(&(a, b))
    }

    pub fn successors(&self, id: SymbolId) -> &[SymbolId] {
        &self.succ[id]
    }

    pub fn predecessors(&self, id: SymbolId) -> &[SymbolId] {
        &self.pred[id]
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Renders a word as the concatenation of its symbol names, using a
    /// separator when any name has more than one character.
    pub fn render_word(&self, word: &[SymbolId]) -> String {
        let sep = if self.symbols.iter().all(|s| s.chars().count() == 1) {
            ""
        } else {
            "."
        };
        word.iter()
            .map(|&s| self.symbols[s].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// The system with all transitions reversed (time reversal).
    pub fn transposed(&self) -> OneStepSft {
        let transitions = self.transitions.iter().map(|&(a, b)| (b, a)).collect();
        Self::from_parts(
            format!("{}~rev", self.name),
            self.symbols.clone(),
            transitions,
        )
    }

    /// Restriction to a symbol subset, reindexed; transitions between
    /// kept symbols survive.
    pub fn restriction(&self, keep: &BTreeSet<SymbolId>, name: &str) -> OneStepSft {
        let mut old_to_new = BTreeMap::new();
        let mut symbols = Vec::with_capacity(keep.len());
        for &s in keep {
            old_to_new.insert(s, symbols.len());
            symbols.push(self.symbols[s].clone());
        }
        let transitions = self
            .transitions
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .map(|(a, b)| (old_to_new[a], old_to_new[b]))
            .collect();
        Self::from_parts(name.to_string(), symbols, transitions)
    }

    /// Symbols that lie on a bi-infinite path.
    pub fn essential_symbols(&self) -> BTreeSet<SymbolId> {
        let mut alive: BTreeSet<SymbolId> = (0..self.symbols.len()).collect();
        loop {
            let dead: Vec<SymbolId> = alive
                .iter()
                .copied()
                .filter(|&s| {
                    !self.succ[s].iter().any(|t| alive.contains(t))
                        || !self.pred[s].iter().any(|t| alive.contains(t))
                })
                .collect();
            if dead.is_empty() {
                return alive;
            }
            for s in dead {
                alive.remove(&s);
            }
        }
    }

    pub fn is_essential(&self) -> bool {
        self.essential_symbols().len() == self.symbols.len()
    }

    pub fn ensure_essential(&self) -> Result<(), ShiftError> {
        let alive = self.essential_symbols();
        match (0..self.symbols.len()).find(|s| !alive.contains(s)) {
            None => Ok(()),
            Some(s) => Err(ShiftError::NotEssential {
                system: self.name.clone(),
                symbol: self.symbols[s].clone(),
            }),
        }
    }

    /// Removes every symbol with no bi-infinite orbit through it.  The
    /// result may be empty.
    pub fn trim_essential(&self) -> OneStepSft {
        let alive = self.essential_symbols();
        if alive.len() == self.symbols.len() {
            return self.clone();
        }
        self.restriction(&alive, &self.name)
    }

    /// Strongly connected components, each sorted, listed by smallest
    /// member.  Singleton components without a self-loop are included.
    pub fn strongly_connected_components(&self) -> Vec<Vec<SymbolId>> {
        let n = self.symbols.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<SymbolId> = Vec::new();
        let mut next_index = 0usize;
        let mut comps: Vec<Vec<SymbolId>> = Vec::new();

        // Iterative Tarjan; frames carry the next successor offset.
        let mut call: Vec<(SymbolId, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            call.push((root, 0));
            while let Some(frame) = call.last_mut() {
                let v = frame.0;
                if frame.1 == 0 {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if let Some(&w) = self.succ[v].get(frame.1) {
                    frame.1 += 1;
                    if index[w] == usize::MAX {
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                    call.pop();
                    if let Some(parent) = call.last() {
                        let u = parent.0;
                        low[u] = low[u].min(low[v]);
                    }
                }
            }
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// True when the graph is nonempty, essential, and a single
    /// strongly connected component.
    pub fn is_irreducible(&self) -> bool {
        !self.is_empty()
            && self.is_essential()
            && self.strongly_connected_components().len() == 1
    }

    /// All allowed words of length `n`, in lexicographic symbol order.
    pub fn words(&self, n: usize) -> Vec<Vec<SymbolId>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        for s in 0..self.symbols.len() {
            current.push(s);
            self.extend_words(n, &mut current, &mut out);
            current.pop();
        }
        out
    }

    fn extend_words(&self, n: usize, current: &mut Vec<SymbolId>, out: &mut Vec<Vec<SymbolId>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let last = *current.last().expect("nonempty prefix");
        for &next in &self.succ[last] {
            current.push(next);
            self.extend_words(n, current, out);
            current.pop();
        }
    }

    /// True when consecutive pairs of `word` are all transitions.
    pub fn word_allowed(&self, word: &[SymbolId]) -> bool {
        if word.iter().any(|&s| s >= self.symbols.len()) {
            return false;
        }
        word.windows(2).all(|w| self.has_transition(w[0], w[1]))
    }

    /// Shortest path `from .. to` (inclusive); `None` when unreachable.
    /// `from == to` yields the trivial one-symbol path.
    pub fn shortest_path(&self, from: SymbolId, to: SymbolId) -> Option<Vec<SymbolId>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut prev: Vec<Option<SymbolId>> = vec![None; self.symbols.len()];
        let mut seen = vec![false; self.symbols.len()];
        let mut queue = VecDeque::new();
        seen[from] = true;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![v];
                let mut cur = v;
                while let Some(p) = prev[cur] {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.succ[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Shortest cycle through `s`, returned as the cycle word starting
    /// at `s` (the closing transition back to `s` is implicit).
    pub fn cycle_through(&self, s: SymbolId) -> Option<Vec<SymbolId>> {
        // Shortest path from any successor of s back to s, prefixed by s.
        let mut best: Option<Vec<SymbolId>> = None;
        for &t in &self.succ[s] {
            if t == s {
                return Some(vec![s]);
            }
            if let Some(path) = self.shortest_path(t, s) {
                // path = t .. s; cycle word = s, t, .., (path minus final s)
                let mut cycle = Vec::with_capacity(path.len());
                cycle.push(s);
                cycle.extend_from_slice(&path[..path.len() - 1]);
                if best.as_ref().map_or(true, |b| cycle.len() < b.len()) {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// Validates that `ray` is an allowed point of this system.
    pub fn validate_ray(&self, ray: &Ray<SymbolId>) -> Result<(), ShiftError> {
        let check = |from: SymbolId, to: SymbolId, at: i64| -> Result<(), ShiftError> {
            if from >= self.symbols.len() || to >= self.symbols.len() {
                return Err(ShiftError::UnknownSymbol {
                    system: self.name.clone(),
                    name: format!("#{}", from.max(to)),
                });
            }
            if self.has_transition(from, to) {
                Ok(())
            } else {
                Err(ShiftError::NotAllowedPoint {
                    system: self.name.clone(),
                    from: self.symbols[from].clone(),
                    to: self.symbols[to].clone(),
                    at,
                })
            }
        };
        // One full left period, the transient, and one full right period
        // cover every distinct consecutive pair of the ray.
        let lo = ray.start() - ray.left_cycle().len() as i64;
        let hi = ray.end() + ray.right_cycle().len() as i64;
        for i in lo..hi {
            check(ray.at(i), ray.at(i + 1), i)?;
        }
        Ok(())
    }

    /// The higher-block system on allowed `n`-words together with the
    /// conjugacy that reads off the first coordinate of each block.
    pub fn higher_block(
        &self,
        n: usize,
    ) -> Result<(OneStepSft, super::OneBlockCode), ShiftError> {
        if n == 0 {
            return Err(ShiftError::InvalidArgument(
                "higher block window must be at least 1".to_string(),
            ));
        }
        self.ensure_essential()?;
        let blocks = self.words(n);
        if blocks.is_empty() {
            return Err(ShiftError::EmptySystem {
                system: self.name.clone(),
            });
        }
        let names: Vec<String> = blocks.iter().map(|b| self.render_word(b)).collect();
        let index: BTreeMap<&[SymbolId], usize> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.as_slice(), i))
            .collect();
        let sft_name = format!("{}_blk{}", self.name, n);
        let mut edges: Vec<(String, String)> = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            // Overlap rule: u -> v when u[1..] == v[..n-1] and the new
            // final pair of v is allowed (it is, v being an allowed word),
            // except that for n == 1 the original transitions apply.
            if n == 1 {
                for &t in &self.succ[b[0]] {
                    edges.push((names[i].clone(), names[index[&[t][..]]].clone()));
                }
            } else {
                let suffix = &b[1..];
                for &t in &self.succ[b[n - 1]] {
                    let mut v = suffix.to_vec();
                    v.push(t);
                    if let Some(&j) = index.get(v.as_slice()) {
                        edges.push((names[i].clone(), names[j].clone()));
                    }
                }
            }
        }
        let edge_refs: Vec<(&str, &str)> = edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let block_sft = OneStepSft::new(&sft_name, &name_refs, &edge_refs)?;
        // The conjugacy labels each block by its first coordinate.
        let assignments: Vec<(String, String)> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (names[i].clone(), self.symbols[b[0]].clone()))
            .collect();
        let assign_refs: Vec<(&str, &str)> = assignments
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let letters: Vec<&str> = self.symbols.iter().map(|s| s.as_str()).collect();
        let code = super::OneBlockCode::new(
            &format!("{}_blk{}_to_base", self.name, n),
            block_sft.clone(),
            &letters,
            &assign_refs,
        )?;
        Ok((block_sft, code))
    }

    /// Splices the future of `t` onto the past of `t_prime`; both must
    /// share the symbol at index 0.
    pub fn bracket(
        &self,
        t: &Ray<SymbolId>,
        t_prime: &Ray<SymbolId>,
    ) -> Result<Ray<SymbolId>, ShiftError> {
        self.validate_ray(t)?;
        self.validate_ray(t_prime)?;
        if t.at(0) != t_prime.at(0) {
            return Err(ShiftError::BracketUndefined {
                left: self.symbols[t.at(0)].clone(),
                right: self.symbols[t_prime.at(0)].clone(),
            });
        }
        // Past from t_prime, future from t.  Below a the output tiles
        // with t_prime's left cycle; from b on with t's right cycle.
        let a = t_prime.start().min(0);
        let b = t.end().max(0);
        let left_len = t_prime.left_cycle().len();
        let right_len = t.right_cycle().len();
        let left_cycle: Vec<SymbolId> = (0..left_len)
            .map(|j| t_prime.at(a - left_len as i64 + j as i64))
            .collect();
        let transient: Vec<SymbolId> = (a..b)
            .map(|i| if i < 0 { t_prime.at(i) } else { t.at(i) })
            .collect();
        let right_cycle: Vec<SymbolId> = (0..right_len)
            .map(|j| t.at(b + j as i64))
            .collect();
        let out = Ray::new(left_cycle, transient, right_cycle, a)?;
        self.validate_ray(&out)?;
        Ok(out)
    }
}

impl fmt::Display for OneStepSft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} symbols)", self.name, self.symbols.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden_mean() -> OneStepSft {
        OneStepSft::new("GM", &["a", "b"], &[("a", "a"), ("a", "b"), ("b", "a")]).unwrap()
    }

    #[test]
    fn symbols_sorted_and_indexed() {
        let s = OneStepSft::new("S", &["b", "a"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(s.symbol_names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(s.symbol_id("a"), Some(0));
        assert_eq!(s.symbol_id("b"), Some(1));
    }

    #[test]
    fn chain_trims_to_empty() {
        let s = OneStepSft::new("chain", &["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(!s.is_essential());
        let t = s.trim_essential();
        assert!(t.is_empty());
    }

    #[test]
    fn trim_keeps_cycle_and_drops_tail() {
        let s = OneStepSft::new(
            "tail",
            &["a", "b", "t"],
            &[("a", "b"), ("b", "a"), ("a", "t")],
        )
        .unwrap();
        let t = s.trim_essential();
        assert_eq!(t.symbol_names(), &["a".to_string(), "b".to_string()]);
        assert!(t.is_essential());
    }

    #[test]
    fn words_of_golden_mean() {
        let gm = golden_mean();
        let words = gm.words(2);
        let rendered: Vec<String> = words.iter().map(|w| gm.render_word(w)).collect();
        assert_eq!(rendered, vec!["aa", "ab", "ba"]);
        assert!(gm.word_allowed(&[0, 1, 0]));
        assert!(!gm.word_allowed(&[1, 1]));
    }

    #[test]
    fn higher_block_of_golden_mean() {
        let gm = golden_mean();
        let (blk, conj) = gm.higher_block(2).unwrap();
        assert_eq!(
            blk.symbol_names(),
            &["aa".to_string(), "ab".to_string(), "ba".to_string()]
        );
        // aa -> {aa, ab}, ab -> {ba}, ba -> {aa, ab}
        assert_eq!(blk.transitions().len(), 5);
        assert_eq!(conj.letter_name(conj.label(blk.symbol_id("ab").unwrap())), "a");
    }

    #[test]
    fn sccs_of_two_cycles_with_bridge() {
        let s = OneStepSft::new(
            "two",
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"), ("d", "c")],
        )
        .unwrap();
        let comps = s.strongly_connected_components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3]]);
        assert!(!s.is_irreducible());
        assert!(s.is_essential());
    }

    #[test]
    fn bracket_splices_past_and_future() {
        let gm = golden_mean();
        let a = gm.symbol_id("a").unwrap();
        let b = gm.symbol_id("b").unwrap();
        // t = ...aaa a bab..., t' = ...bab a aaa...
        let t = Ray::new(vec![a], vec![a], vec![b, a], 0).unwrap();
        let t_prime = Ray::new(vec![b, a], vec![a], vec![a], 0).unwrap();
        let out = gm.bracket(&t, &t_prime).unwrap();
        for i in -6..0 {
            assert_eq!(out.at(i), t_prime.at(i), "index {i}");
        }
        for i in 0..6 {
            assert_eq!(out.at(i), t.at(i), "index {i}");
        }
        gm.validate_ray(&out).unwrap();
    }

    #[test]
    fn bracket_requires_common_symbol() {
        let gm = golden_mean();
        let a = gm.symbol_id("a").unwrap();
        let b = gm.symbol_id("b").unwrap();
        let t = Ray::periodic(vec![a]).unwrap();
        let t_prime = Ray::new(vec![a], vec![b], vec![a], 0).unwrap();
        assert!(matches!(
            gm.bracket(&t, &t_prime),
            Err(ShiftError::BracketUndefined { .. })
        ));
    }
}
