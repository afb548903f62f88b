//! Words over a finite alphabet and their alternation semantics.
//!
//! For two letters `x`, `y` the restriction of a word to `{x, y}` decomposes
//! into maximal runs of equal letters; the longest alternating subsequence
//! over `{x, y}` has exactly as many letters as there are runs. Every
//! predicate in this module is phrased through that run count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<String>,
}

impl Word {
    pub fn new<I>(letters: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.iter().any(String::is_empty) {
            return Err(Error::EmptyLabel);
        }
        Ok(Word { letters })
    }

    /// One letter per `char`, e.g. `"156216326436546"`. Whitespace is ignored.
    pub fn from_compact(s: &str) -> Self {
        Word {
            letters: s.chars().filter(|c| !c.is_whitespace()).map(String::from).collect(),
        }
    }

    /// Parses one line of a word file.
    ///
    /// A line holding a single token longer than one character is compact
    /// (one letter per character); otherwise every whitespace-separated token
    /// is a letter.
    pub fn parse_line(line: &str) -> Self {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() == 1 && tokens[0].chars().count() > 1 {
            Word::from_compact(tokens[0])
        } else {
            Word {
                letters: tokens.into_iter().map(str::to_owned).collect(),
            }
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<&str> {
        i.checked_sub(1).and_then(|k| self.letters.get(k)).map(String::as_str)
    }

    pub fn alphabet(&self) -> BTreeSet<&str> {
        self.letters.iter().map(String::as_str).collect()
    }

    pub fn occurrences(&self) -> BTreeMap<&str, usize> {
        let mut counts = BTreeMap::new();
        for l in &self.letters {
            *counts.entry(l.as_str()).or_insert(0) += 1;
        }
        counts
    }

    pub fn push(&mut self, letter: impl Into<String>) {
        self.letters.push(letter.into());
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word {
            letters: self.letters.iter().chain(&other.letters).cloned().collect(),
        }
    }

    /// Restriction of the word to the letters in `keep`, in order.
    pub fn restrict(&self, keep: &[&str]) -> Vec<&str> {
        self.letters
            .iter()
            .map(String::as_str)
            .filter(|l| keep.contains(l))
            .collect()
    }

    /// Length of the longest alternating subsequence over `{x, y}`.
    pub fn max_alternation(&self, x: &str, y: &str) -> Result<usize> {
        if x == y {
            return Err(Error::SameLetter(x.to_owned()));
        }
        let mut runs = 0;
        let mut last: Option<&str> = None;
        for l in self.letters.iter().map(String::as_str) {
            if (l == x || l == y) && last != Some(l) {
                runs += 1;
                last = Some(l);
            }
        }
        Ok(runs)
    }

    pub fn is_d_intersecting(&self, x: &str, y: &str, d: usize) -> Result<bool> {
        Ok(self.max_alternation(x, y)? >= d + 2)
    }

    /// Graph on the alphabet with `{x, y}` an edge iff `x` and `y` are
    /// `d`-intersecting.
    pub fn induced_graph_general(&self, d: usize) -> Graph {
        let (labels, runs) = self.pair_runs();
        let n = labels.len();
        let mut g = Graph::new();
        for l in &labels {
            g.add_vertex(l).expect("word letters are non-empty");
        }
        for i in 0..n {
            for j in i + 1..n {
                if runs[i * n + j] >= d + 2 {
                    g.add_edge(labels[i], labels[j]).expect("distinct letters");
                }
            }
        }
        g
    }

    /// Classic word-representation: `{x, y}` is an edge iff the restriction to
    /// `{x, y}` strictly alternates.
    pub fn induced_graph_classic(&self) -> Graph {
        let (labels, runs) = self.pair_runs();
        let counts = self.occurrences();
        let n = labels.len();
        let mut g = Graph::new();
        for l in &labels {
            g.add_vertex(l).expect("word letters are non-empty");
        }
        for i in 0..n {
            for j in i + 1..n {
                if runs[i * n + j] == counts[labels[i]] + counts[labels[j]] {
                    g.add_edge(labels[i], labels[j]).expect("distinct letters");
                }
            }
        }
        g
    }

    /// Sorted alphabet and the `n x n` matrix of pair run counts, computed in
    /// one pass.
    fn pair_runs(&self) -> (Vec<&str>, Vec<usize>) {
        let labels: Vec<&str> = self.alphabet().into_iter().collect();
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let n = labels.len();
        let mut runs = vec![0usize; n * n];
        let mut last = vec![usize::MAX; n * n];
        for l in &self.letters {
            let x = index[l.as_str()];
            for y in 0..n {
                if y != x && last[x * n + y] != x {
                    last[x * n + y] = x;
                    last[y * n + x] = x;
                    runs[x * n + y] += 1;
                    runs[y * n + x] += 1;
                }
            }
        }
        (labels, runs)
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.occurrences().values().all(|&c| c == k)
    }

    /// Cyclic left rotation by `s` (negative values rotate right).
    pub fn rotate(&self, s: i64) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let k = s.rem_euclid(n as i64) as usize;
        let mut letters = self.letters.clone();
        letters.rotate_left(k);
        Word { letters }
    }

    /// Whether every letter is a single character, so the compact form is unambiguous.
    pub fn is_compactable(&self) -> bool {
        self.letters.iter().all(|l| l.chars().count() == 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compactable() && self.letters.len() > 1 {
            write!(f, "{}", self.letters.concat())
        } else {
            write!(f, "{}", self.letters.join(" "))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Word::parse_line(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn w(s: &str) -> Word {
        Word::from_compact(s)
    }

    /// Longest alternating subsequence over {x, y} by exhaustive subsequence scan.
    fn brute_alternation(word: &Word, x: &str, y: &str) -> usize {
        let n = word.len();
        assert!(n <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let sub: Vec<&str> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| word.letters()[i].as_str())
                .collect();
            let ok = sub.iter().all(|l| *l == x || *l == y) && sub.windows(2).all(|p| p[0] != p[1]);
            if ok {
                best = best.max(sub.len());
            }
        }
        best
    }

    #[test]
    fn alternation_examples() {
        assert_eq!(w("abab").max_alternation("a", "b").unwrap(), 4);
        assert_eq!(w("1616666").max_alternation("1", "6").unwrap(), 4);
        assert_eq!(w("11212").max_alternation("1", "2").unwrap(), 4);
        assert_eq!(brute_alternation(&w("11212"), "1", "2"), 4);
        assert_eq!(w("xyz").max_alternation("a", "b").unwrap(), 0);
        assert!(matches!(w("ab").max_alternation("a", "a"), Err(Error::SameLetter(_))));
    }

    #[test]
    fn alternation_matches_brute_force() {
        for word in ["", "a", "abcabcab", "aabbaabba", "abcbcacbab", "cccaaabbbaca", "121323"] {
            let word = w(word);
            for (x, y) in [("a", "b"), ("a", "c"), ("b", "c"), ("1", "2"), ("1", "3"), ("2", "3")] {
                assert_eq!(
                    word.max_alternation(x, y).unwrap(),
                    brute_alternation(&word, x, y),
                    "{word} {x}{y}"
                );
            }
        }
    }

    #[test]
    fn d_intersecting_examples() {
        assert!(w("12121").is_d_intersecting("1", "2", 3).unwrap());
        assert!(!w("11212").is_d_intersecting("1", "2", 3).unwrap());
        assert!(!w("ab").is_d_intersecting("a", "b", 1).unwrap());
    }

    #[test]
    fn general_graph_examples() {
        let g = w("156216326436546").induced_graph_general(2);
        assert_eq!(g, families::wheel(5));

        let k2 = w("12121").induced_graph_general(3);
        assert_eq!(k2, families::complete(2));

        for d in 1..5 {
            let g = w("aabb").induced_graph_general(d);
            assert_eq!(g, families::edgeless(&["a", "b"]));
        }
    }

    #[test]
    fn w5_pairs_by_alternation() {
        let word = w("156216326436546");
        let wheel = families::wheel(5);
        let letters = ["1", "2", "3", "4", "5", "6"];
        for i in 0..6 {
            for j in i + 1..6 {
                let alt = brute_alternation(&word, letters[i], letters[j]);
                assert_eq!(
                    alt >= 4,
                    wheel.has_edge(letters[i], letters[j]),
                    "{}{}",
                    letters[i],
                    letters[j]
                );
            }
        }
    }

    /// Naive classic graph: restrict and check that consecutive letters differ.
    fn classic_naive(word: &Word) -> Graph {
        let alpha: Vec<&str> = word.alphabet().into_iter().collect();
        let mut g = Graph::new();
        for a in &alpha {
            g.add_vertex(a).unwrap();
        }
        for i in 0..alpha.len() {
            for j in i + 1..alpha.len() {
                let r = word.restrict(&[alpha[i], alpha[j]]);
                if r.windows(2).all(|p| p[0] != p[1]) {
                    g.add_edge(alpha[i], alpha[j]).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn classic_graph_examples() {
        assert_eq!(
            w("ababab").induced_graph_classic(),
            Graph::from_edge_list(&[("a", "b")], &[] as &[&str]).unwrap()
        );
        assert_eq!(w("abba").induced_graph_classic().edge_count(), 0);
        let g = w("121323").induced_graph_classic();
        assert_eq!(g, classic_naive(&w("121323")));
        // restrictions: 1212 alternates, 2323 alternates, 1133 does not
        assert!(g.has_edge("1", "2") && g.has_edge("2", "3") && !g.has_edge("1", "3"));
    }

    #[test]
    fn uniformity() {
        assert!(w("abab").is_k_uniform(2));
        assert!(!w("aab").is_k_uniform(2));
        assert!(w("").is_k_uniform(3));
    }

    #[test]
    fn rotation() {
        assert_eq!(w("12121").rotate(1), w("21211"));
        assert_eq!(w("12121").rotate(0), w("12121"));
        assert_eq!(w("12121").rotate(5), w("12121"));
        assert_eq!(w("12121").rotate(-1), w("11212"));
        assert_eq!(Word::default().rotate(3), Word::default());
    }

    #[test]
    fn positions_are_one_based() {
        let word = w("abc");
        assert_eq!(word.at(0), None);
        assert_eq!(word.at(1), Some("a"));
        assert_eq!(word.at(3), Some("c"));
        assert_eq!(word.at(4), None);
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(Word::parse_line("12121"), w("12121"));
        assert_eq!(Word::parse_line("1 2 1 2 1"), w("12121"));
        let long = Word::parse_line("v1 u1 v1");
        assert_eq!(long.len(), 3);
        assert_eq!(long.to_string(), "v1 u1 v1");
        assert_eq!(w("ababcb").to_string(), "ababcb");
        assert_eq!(Word::parse_line("a").to_string(), "a");
    }
}
