use serde::Serialize;

use super::LinearExtension;
use crate::error::{Error, Result};
use crate::poset::{checked_product, Labeling, Poset};

/// Labels read along an element order.
pub fn word(order: &[usize], w: &Labeling) -> Vec<usize> {
    order.iter().map(|&e| w.label(e)).collect()
}

/// 1-based positions `j` with `word[j+1] < word[j]`.
pub fn descent_set(word: &[usize]) -> Vec<usize> {
    (1..word.len()).filter(|&j| word[j] < word[j - 1]).collect()
}

pub fn descent_count(word: &[usize]) -> usize {
    word.windows(2).filter(|p| p[1] < p[0]).count()
}

/// 1-based positions `j` with `word[j+1] <= word[j]`.
pub fn weak_descent_set(word: &[usize]) -> Vec<usize> {
    (1..word.len()).filter(|&j| word[j] <= word[j - 1]).collect()
}

pub fn weak_descent_count(word: &[usize]) -> usize {
    word.windows(2).filter(|p| p[1] <= p[0]).count()
}

/// A permutation of the multiset `{1^m, ..., n^m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultisetWord {
    letters: Vec<usize>,
    m: usize,
}

impl MultisetWord {
    pub fn new(letters: Vec<usize>, m: usize) -> Result<Self> {
        if m == 0 || !letters.len().is_multiple_of(m) {
            return Err(Error::InvalidWord(format!(
                "length {} is not a multiple of {m}",
                letters.len()
            )));
        }
        let n = letters.len() / m;
        let mut counts = vec![0usize; n];
        for &l in &letters {
            if l == 0 || l > n {
                return Err(Error::InvalidWord(format!("letter {l} outside 1..={n}")));
            }
            counts[l - 1] += 1;
        }
        if let Some(i) = counts.iter().position(|&c| c != m) {
            return Err(Error::InvalidWord(format!(
                "letter {} appears {} times, expected {m}",
                i + 1,
                counts[i]
            )));
        }
        Ok(MultisetWord { letters, m })
    }

    /// Parses single-digit letters, e.g. `"112122"`.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidWord(format!("{c:?} is not a digit")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters, m)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters.len() / self.m
    }

    /// Letters in the order of their `c`-th occurrences (`c` in `1..=m`).
    pub fn copy_pattern(&self, c: usize) -> Vec<usize> {
        let mut seen = vec![0usize; self.alphabet_size()];
        let mut pattern = Vec::with_capacity(self.alphabet_size());
        for &l in &self.letters {
            seen[l - 1] += 1;
            if seen[l - 1] == c {
                pattern.push(l);
            }
        }
        pattern
    }

    pub fn descents(&self) -> usize {
        descent_count(&self.letters)
    }

    pub fn weak_descents(&self) -> usize {
        weak_descent_count(&self.letters)
    }
}

impl std::fmt::Display for MultisetWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.alphabet_size() > 9 { "," } else { "" };
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Reads an extension of `P x [n]` under a canon labeling as a multiset
/// word: each label `v` becomes the letter `ceil(v / m)`.
pub fn multiset_word(pi: &LinearExtension, canon_label: &Labeling, m: usize) -> Result<MultisetWord> {
    canon_label.check_size(pi.len())?;
    let letters = pi.order().iter().map(|&e| canon_label.label(e).div_ceil(m)).collect();
    MultisetWord::new(letters, m)
}

/// True iff all `m` copy subsequences coincide.
pub fn is_canon_permutation(word: &MultisetWord) -> bool {
    let first = word.copy_pattern(1);
    (2..=word.multiplicity()).all(|c| word.copy_pattern(c) == first)
}

/// Maps a canon permutation of `{1^m, ..., n^m}` with copy pattern `sigma`
/// to an extension of the checked product `[m] (x) [n]`: the `i`-th
/// occurrence of letter `sigma(j)` becomes element `(i, j)`, and the top
/// elements follow in the order `mn + sigma(1), ..., mn + sigma(n)` of their
/// labels under the checked labeling.
pub fn canon_word_to_checked_extension(word: &MultisetWord) -> Result<LinearExtension> {
    if !is_canon_permutation(word) {
        return Err(Error::InvalidWord(format!("{word} is not a canon permutation")));
    }
    let m = word.multiplicity();
    let n = word.alphabet_size();
    let sigma = word.copy_pattern(1);
    let mut copy_of = vec![0usize; n];
    for (j, &letter) in sigma.iter().enumerate() {
        copy_of[letter - 1] = j;
    }
    let mut seen = vec![0usize; n];
    let mut order = Vec::with_capacity((m + 1) * n);
    for &letter in word.letters() {
        let j = copy_of[letter - 1];
        order.push(seen[j] + j * m);
        seen[j] += 1;
    }
    order.extend(sigma.iter().map(|&s| m * n + s - 1));
    LinearExtension::new(&checked_product(&Poset::chain(m), n), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::linext::enumerate_linear_extensions;
    use crate::poset::{canon_labeling, product_with_chain};

    #[test]
    fn descent_examples() {
        assert_eq!(descent_count(&[1, 2, 3]), 0);
        assert_eq!(descent_count(&[3, 2, 1]), 2);
        assert_eq!(descent_set(&[3, 2, 1]), vec![1, 2]);
        assert_eq!(descent_count(&[1, 1, 2, 1, 2, 2]), 1);
        assert_eq!(descent_set(&[1, 2, 4, 3]), vec![3]);
    }

    #[test]
    fn weak_descent_examples() {
        assert_eq!(weak_descent_count(&[1, 1, 2, 2]), 2);
        assert_eq!(weak_descent_set(&[1, 1, 2, 2]), vec![1, 3]);
        assert_eq!(weak_descent_count(&[1, 3, 5, 7]), 0);
        assert_eq!(weak_descent_count(&[2, 2, 1, 1]), 3);
    }

    #[test]
    fn canon_examples() {
        let w = MultisetWord::parse("223143213144", 3).unwrap();
        assert!(is_canon_permutation(&w));
        assert_eq!(w.copy_pattern(1), vec![2, 3, 1, 4]);
        assert_eq!(w.copy_pattern(3), vec![2, 3, 1, 4]);
        assert!(is_canon_permutation(&MultisetWord::parse("1122", 2).unwrap()));
        let bad = MultisetWord::parse("1221", 2).unwrap();
        assert!(!is_canon_permutation(&bad));
        assert_eq!(bad.copy_pattern(1), vec![1, 2]);
        assert_eq!(bad.copy_pattern(2), vec![2, 1]);
    }

    #[test]
    fn multiplicity_validation() {
        assert!(MultisetWord::parse("1112", 2).is_err());
        assert!(MultisetWord::parse("113", 1).is_err());
        assert!(MultisetWord::parse("12a", 1).is_err());
    }

    #[test]
    fn multiset_words_of_two_by_two() {
        let p = product_with_chain(&Poset::chain(2), 2);
        let exts = enumerate_linear_extensions(&p, &Limits::default()).unwrap();
        let id = canon_labeling(&Labeling::identity(2), &Labeling::identity(2));
        let words: Vec<String> =
            exts.iter().map(|e| multiset_word(e, &id, 2).unwrap().to_string()).collect();
        assert_eq!(words, vec!["1122", "1212"]);

        let swap = canon_labeling(&Labeling::identity(2), &Labeling::reverse(2));
        let mut words: Vec<String> =
            exts.iter().map(|e| multiset_word(e, &swap, 2).unwrap().to_string()).collect();
        words.sort();
        assert_eq!(words, vec!["2121", "2211"]);
    }

    #[test]
    fn canon_word_translation() {
        let w = MultisetWord::parse("112122", 3).unwrap();
        let ext = canon_word_to_checked_extension(&w).unwrap();
        let labels = Labeling::identity(8);
        assert_eq!(ext.word(&labels), vec![1, 2, 4, 3, 5, 6, 7, 8]);

        let w = MultisetWord::parse("221213133", 3).unwrap();
        let ext = canon_word_to_checked_extension(&w).unwrap();
        // copies: letter 2 -> copy 1, letter 1 -> copy 2, letter 3 -> copy 3
        assert_eq!(ext.word(&Labeling::identity(12)), vec![1, 2, 4, 3, 5, 7, 6, 8, 9, 11, 10, 12]);

        assert!(canon_word_to_checked_extension(&MultisetWord::parse("1221", 2).unwrap()).is_err());
    }
}
