use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{OneStepSft, Ray, ShiftError, SymbolId};

/// Index of a letter inside a code's sorted target alphabet.
pub type LetterId = usize;

/// A one-block code: a letter for every symbol of a one-step SFT.
///
/// The code presents its sofic image, the set of bi-infinite label
/// sequences of points of the domain.  Every declared letter must label
/// at least one symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneBlockCode {
    name: String,
    domain: OneStepSft,
    letters: Vec<String>,
    label: Vec<LetterId>,
}

impl OneBlockCode {
    /// Builds a code from `(symbol, letter)` assignments.  Every symbol
    /// needs exactly one assignment and every letter must be used.
    pub fn new<S: AsRef<str>>(
        name: &str,
        domain: OneStepSft,
        letters: &[S],
        assignments: &[(S, S)],
    ) -> Result<OneBlockCode, ShiftError> {
        let mut letter_names: Vec<String> = Vec::with_capacity(letters.len());
        for l in letters {
            let l = l.as_ref();
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(ShiftError::BadSymbolName {
                    system: name.to_string(),
                    name: l.to_string(),
                });
            }
            letter_names.push(l.to_string());
        }
        letter_names.sort();
        if let Some(w) = letter_names.windows(2).find(|w| w[0] == w[1]) {
            return Err(ShiftError::DuplicateSymbol {
                system: name.to_string(),
                name: w[0].clone(),
            });
        }
        let letter_index: BTreeMap<&str, LetterId> = letter_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut label: Vec<Option<LetterId>> = vec![None; domain.symbol_count()];
        for (sym, letter) in assignments {
            let s = domain
                .symbol_id(sym.as_ref())
                .ok_or_else(|| ShiftError::UnknownSymbol {
                    system: domain.name().to_string(),
                    name: sym.as_ref().to_string(),
                })?;
            let l = *letter_index
                .get(letter.as_ref())
                .ok_or_else(|| ShiftError::UnknownSymbol {
                    system: name.to_string(),
                    name: letter.as_ref().to_string(),
                })?;
            label[s] = Some(l);
        }
        let mut resolved = Vec::with_capacity(label.len());
        for (s, l) in label.iter().enumerate() {
            match l {
                Some(l) => resolved.push(*l),
                None => {
                    return Err(ShiftError::UnlabeledSymbol {
                        code: name.to_string(),
                        symbol: domain.symbol_name(s).to_string(),
                    })
                }
            }
        }
        for (l, letter) in letter_names.iter().enumerate() {
            if !resolved.contains(&l) {
                return Err(ShiftError::DeadLetter {
                    code: name.to_string(),
                    letter: letter.clone(),
                });
            }
        }
        Ok(OneBlockCode {
            name: name.to_string(),
            domain,
            letters: letter_names,
            label: resolved,
        })
    }

    /// Builds a code by evaluating `f` on each symbol id.
    pub fn from_fn(
        name: &str,
        domain: OneStepSft,
        letters: &[&str],
        f: impl Fn(SymbolId) -> String,
    ) -> Result<OneBlockCode, ShiftError> {
        let assignments: Vec<(String, String)> = (0..domain.symbol_count())
            .map(|s| (domain.symbol_name(s).to_string(), f(s)))
            .collect();
        let refs: Vec<(&str, &str)> = assignments
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        OneBlockCode::new(name, domain, letters, &refs)
    }

    /// The identity code: every symbol is its own letter.
    pub fn identity(domain: &OneStepSft) -> OneBlockCode {
        let letters: Vec<String> = domain.symbol_names().to_vec();
        let label: Vec<LetterId> = (0..domain.symbol_count()).collect();
        OneBlockCode {
            name: format!("id_{}", domain.name()),
            domain: domain.clone(),
            letters,
            label,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &OneStepSft {
        &self.domain
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_names(&self) -> &[String] {
        &self.letters
    }

    pub fn letter_name(&self, l: LetterId) -> &str {
        &self.letters[l]
    }

    pub fn letter_id(&self, name: &str) -> Option<LetterId> {
        self.letters.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    pub fn label(&self, s: SymbolId) -> LetterId {
        self.label[s]
    }

    pub fn label_word(&self, word: &[SymbolId]) -> Vec<LetterId> {
        word.iter().map(|&s| self.label[s]).collect()
    }

    /// Applies the code to a point coordinate-wise.
    pub fn apply(&self, ray: &Ray<SymbolId>) -> Ray<LetterId> {
        ray.map(|s| self.label[s])
    }

    /// Renders a letter word.
    pub fn render_letters(&self, word: &[LetterId]) -> String {
        let sep = if self.letters.iter().all(|s| s.chars().count() == 1) {
            ""
        } else {
            "."
        };
        word.iter()
            .map(|&l| self.letters[l].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// The same labeling on the transposed domain.
    pub fn transposed(&self) -> OneBlockCode {
        OneBlockCode {
            name: format!("{}~rev", self.name),
            domain: self.domain.transposed(),
            letters: self.letters.clone(),
            label: self.label.clone(),
        }
    }

    /// The set of all domain symbols.
    pub fn full_symbol_set(&self) -> BTreeSet<SymbolId> {
        (0..self.domain.symbol_count()).collect()
    }

    /// One deterministic step of the subset automaton: symbols labeled
    /// `a` with a predecessor in `set`.
    pub fn letter_step(&self, set: &BTreeSet<SymbolId>, a: LetterId) -> BTreeSet<SymbolId> {
        let mut out = BTreeSet::new();
        for &s in set {
            for &t in self.domain.successors(s) {
                if self.label[t] == a {
                    out.insert(t);
                }
            }
        }
        out
    }

    /// Runs the subset automaton over a letter word from the full set.
    pub fn subset_after(&self, word: &[LetterId]) -> BTreeSet<SymbolId> {
        let mut set: BTreeSet<SymbolId> = match word.first() {
            None => return self.full_symbol_set(),
            Some(&a) => (0..self.domain.symbol_count())
                .filter(|&s| self.label[s] == a && !self.domain.predecessors(s).is_empty())
                .collect(),
        };
        for &a in &word[1..] {
            set = self.letter_step(&set, a);
            if set.is_empty() {
                break;
            }
        }
        set
    }

    /// True when the letter word appears in the sofic image.  Requires
    /// an essential domain, where every finite path extends to a point.
    pub fn image_word_allowed(&self, word: &[LetterId]) -> Result<bool, ShiftError> {
        self.domain.ensure_essential()?;
        Ok(!self.subset_after(word).is_empty())
    }

    /// All distinct image words of length `n`, lexicographic in the
    /// letter order.
    pub fn image_words(&self, n: usize) -> Result<Vec<Vec<LetterId>>, ShiftError> {
        self.domain.ensure_essential()?;
        let mut out: BTreeSet<Vec<LetterId>> = BTreeSet::new();
        for w in self.domain.words(n) {
            out.insert(self.label_word(&w));
        }
        Ok(out.into_iter().collect())
    }

    /// Decides equality of the sofic images of two codes over the same
    /// alphabet by a product subset construction: explore reachable
    /// subset pairs and fail on any pair where exactly one side dies.
    pub fn image_equal(&self, other: &OneBlockCode) -> Result<bool, ShiftError> {
        if self.letters != other.letters {
            return Err(ShiftError::AlphabetMismatch {
                left: self.name.clone(),
                right: other.name.clone(),
            });
        }
        self.domain.ensure_essential()?;
        other.domain.ensure_essential()?;
        if self.domain.is_empty() || other.domain.is_empty() {
            return Ok(self.domain.is_empty() == other.domain.is_empty());
        }
        let start = (self.full_symbol_set(), other.full_symbol_set());
        let mut seen = BTreeSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some((sa, sb)) = queue.pop_front() {
            for a in 0..self.letters.len() {
                let ta = self.letter_step(&sa, a);
                let tb = other.letter_step(&sb, a);
                if ta.is_empty() != tb.is_empty() {
                    return Ok(false);
                }
                if ta.is_empty() {
                    continue;
                }
                let pair = (ta, tb);
                if seen.insert(pair.clone()) {
                    queue.push_back(pair);
                }
            }
        }
        Ok(true)
    }

    /// Composes two codes: `outer` relabels the letters of `inner`,
    /// which must coincide with the symbol names of `outer`'s domain.
    pub fn compose(outer: &OneBlockCode, inner: &OneBlockCode) -> Result<OneBlockCode, ShiftError> {
        if inner.letters != outer.domain.symbol_names() {
            return Err(ShiftError::AlphabetMismatch {
                left: outer.name.clone(),
                right: inner.name.clone(),
            });
        }
        let label = inner
            .label
            .iter()
            .map(|&l| {
                let sym = outer
                    .domain
                    .symbol_id(&inner.letters[l])
                    .expect("letters match outer domain symbols");
                outer.label[sym]
            })
            .collect();
        Ok(OneBlockCode {
            name: format!("{}*{}", outer.name, inner.name),
            domain: inner.domain.clone(),
            letters: outer.letters.clone(),
            label,
        })
    }
}

/// Recodes a sliding block map with the given memory and anticipation
/// into a one-block code on the higher-block system.  `block_label`
/// sees each allowed `(memory + anticipation + 1)`-block and must name
/// a declared letter; `None` reports a partial block map.
///
/// The induced code computes the original sliding block map composed
/// with the higher-block conjugacy and a shift by `memory` steps.
pub fn recode_one_block(
    sft: &OneStepSft,
    memory: usize,
    anticipation: usize,
    letters: &[&str],
    block_label: impl Fn(&[SymbolId]) -> Option<String>,
) -> Result<OneBlockCode, ShiftError> {
    let n = memory + anticipation + 1;
    let (block_sft, _conj) = sft.higher_block(n)?;
    let blocks = sft.words(n);
    let mut assignments: Vec<(String, String)> = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let letter = block_label(b).ok_or_else(|| ShiftError::PartialBlockMap {
            block: sft.render_word(b),
        })?;
        assignments.push((sft.render_word(b), letter));
    }
    let refs: Vec<(&str, &str)> = assignments
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    OneBlockCode::new(
        &format!("{}_recoded", sft.name()),
        block_sft,
        letters,
        &refs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn even_shift_rejects_lone_one() {
        let ev = fixtures::even_shift();
        let w: Vec<LetterId> = vec![
            ev.letter_id("1").unwrap(),
            ev.letter_id("0").unwrap(),
            ev.letter_id("1").unwrap(),
        ];
        assert!(!ev.image_word_allowed(&w).unwrap());
        let ok: Vec<LetterId> = vec![
            ev.letter_id("1").unwrap(),
            ev.letter_id("1").unwrap(),
            ev.letter_id("0").unwrap(),
        ];
        assert!(ev.image_word_allowed(&ok).unwrap());
    }

    #[test]
    fn xor_recoding_matches_expected_blocks() {
        let xor = fixtures::xor_code();
        assert_eq!(
            xor.domain().symbol_names(),
            &["00".to_string(), "01".to_string(), "10".to_string(), "11".to_string()]
        );
        let labels: Vec<&str> = (0..4)
            .map(|s| xor.letter_name(xor.label(s)))
            .collect();
        assert_eq!(labels, vec!["0", "1", "1", "0"]);
    }

    #[test]
    fn apply_commutes_with_shift_on_windows() {
        let xor = fixtures::xor_code();
        let s00 = xor.domain().symbol_id("00").unwrap();
        let s01 = xor.domain().symbol_id("01").unwrap();
        let s10 = xor.domain().symbol_id("10").unwrap();
        let s11 = xor.domain().symbol_id("11").unwrap();
        let ray = Ray::new(vec![s00], vec![s01, s11, s10], vec![s00], 0).unwrap();
        xor.domain().validate_ray(&ray).unwrap();
        for k in -3..4 {
            let a = xor.apply(&ray.shifted(k));
            let b = xor.apply(&ray).shifted(k);
            for i in -10..10 {
                assert_eq!(a.at(i), b.at(i));
            }
        }
    }

    #[test]
    fn image_equality_distinguishes_even_from_full() {
        let ev = fixtures::even_shift();
        let full = fixtures::full_two_shift_binary_code();
        assert!(!ev.image_equal(&full).unwrap());
        assert!(ev.image_equal(&ev).unwrap());
    }

    #[test]
    fn compose_relabels_through_matching_alphabets() {
        let gm = fixtures::golden_mean();
        let inner = OneBlockCode::identity(&gm);
        let outer = OneBlockCode::new(
            "collapse",
            gm.clone(),
            &["0", "1"],
            &[("a", "0"), ("b", "1")],
        )
        .unwrap();
        let composed = OneBlockCode::compose(&outer, &inner).unwrap();
        assert_eq!(composed.letter_name(composed.label(0)), "0");
        assert_eq!(composed.letter_name(composed.label(1)), "1");
    }
}
