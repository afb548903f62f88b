//! Bounded exhaustive search for general `d`-word-representants.
//!
//! Words are enumerated depth first by iterative deepening on their length,
//! letters tried in label order. Per-pair run counts are updated
//! incrementally, so appending a letter costs `O(|V|)`. Three cuts keep the
//! tree small:
//!
//! 1. a non-adjacent pair that already alternates `d + 2` times can never
//!    recover (run counts only grow under extension);
//! 2. an admissible lower bound on the letters still needed to lift every
//!    deficient edge to `d + 2` runs must fit in the remaining length and the
//!    per-letter copy budget;
//! 3. a letter may be introduced only after all of its smaller twins (equal
//!    neighbourhoods up to each other), since swapping twins is a graph
//!    automorphism.
//!
//! The tree of each length is split at a fixed prefix depth into independent
//! tasks. Task results are merged in prefix order, so the verdict, witness
//! and node count do not depend on the number of workers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::word::Word;

const SPLIT_DEPTH: usize = 4;
const NO_LETTER: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_copies_per_letter: usize,
    pub max_total_length: usize,
    pub node_limit: u64,
}

impl SearchBudget {
    pub fn new(max_copies_per_letter: usize, max_total_length: usize, node_limit: u64) -> Result<Self> {
        if max_copies_per_letter == 0 || max_total_length == 0 || node_limit == 0 {
            return Err(Error::invalid("search budget entries must be positive"));
        }
        if max_copies_per_letter > 200 || max_total_length > 4096 {
            return Err(Error::invalid("search budget too large for the enumerator"));
        }
        Ok(SearchBudget {
            max_copies_per_letter,
            max_total_length,
            node_limit,
        })
    }

    fn check_for(&self, g: &Graph) -> Result<()> {
        if self.max_total_length < g.vertex_count() {
            return Err(Error::invalid(format!(
                "max total length {} is shorter than the vertex count {}",
                self.max_total_length,
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Word),
    NotFoundWithinBudget,
    NodeLimitExceeded,
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::NotFoundWithinBudget => "not_found_within_budget",
            Outcome::NodeLimitExceeded => "node_limit_exceeded",
        }
    }

    pub fn witness(&self) -> Option<&Word> {
        match self {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchVerdict {
    pub d: usize,
    pub outcome: Outcome,
    pub nodes_explored: u64,
    pub budget: SearchBudget,
}

impl SearchVerdict {
    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }
}

/// Searches for a word `W` over `V(G)` with `induced_graph_general(W, d) = G`.
pub fn find_general_word(g: &Graph, d: usize, budget: SearchBudget) -> Result<SearchVerdict> {
    find_general_word_with(g, d, budget, Exec::Sequential)
}

pub fn find_general_word_with(g: &Graph, d: usize, budget: SearchBudget, exec: Exec) -> Result<SearchVerdict> {
    if g.vertex_count() == 0 {
        return Err(Error::invalid("cannot search for a word of the empty graph"));
    }
    if g.vertex_count() > 64 {
        return Err(Error::invalid("the enumerator supports at most 64 vertices"));
    }
    if d == 0 {
        return Err(Error::invalid("d must be at least 1"));
    }
    budget.check_for(g)?;
    let problem = Problem::new(g, d, budget);
    let (found, nodes) = problem.run(exec);
    let outcome = match found {
        Search::Found(letters) => {
            let labels: Vec<&str> = g.vertices().collect();
            let word = Word::new(letters.iter().map(|&x| labels[x as usize])).expect("graph labels");
            if word.induced_graph_general(d) != *g {
                return Err(Error::Invariant(format!(
                    "search returned {word}, which does not represent the graph"
                )));
            }
            Outcome::Found(word)
        }
        Search::Exhausted => Outcome::NotFoundWithinBudget,
        Search::Limit => Outcome::NodeLimitExceeded,
    };
    Ok(SearchVerdict {
        d,
        outcome,
        nodes_explored: nodes,
        budget,
    })
}

/// Verdicts for `d = 1..=max_d`, plus the least `d` with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepNumberReport {
    pub verdicts: Vec<SearchVerdict>,
    pub upper_bound: Option<usize>,
}

/// Runs [`find_general_word`] for every `d` in `1..=max_d`. Since a general
/// `d`-word-representable graph is also general `(d + 1)`-representable, the
/// least `d` with a witness is an upper bound on the representation number.
pub fn general_rep_number_bounded(g: &Graph, max_d: usize, budget: SearchBudget) -> Result<RepNumberReport> {
    general_rep_number_bounded_with(g, max_d, budget, Exec::Sequential)
}

pub fn general_rep_number_bounded_with(
    g: &Graph,
    max_d: usize,
    budget: SearchBudget,
    exec: Exec,
) -> Result<RepNumberReport> {
    if max_d == 0 {
        return Err(Error::invalid("max_d must be at least 1"));
    }
    let verdicts = (1..=max_d)
        .map(|d| find_general_word_with(g, d, budget, exec))
        .collect::<Result<Vec<_>>>()?;
    let upper_bound = verdicts.iter().find(|v| v.is_found()).map(|v| v.d);
    Ok(RepNumberReport { verdicts, upper_bound })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Search {
    Found(Vec<u8>),
    Exhausted,
    Limit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TaskEnd {
    Found(Vec<u8>),
    Exhausted,
    Limit,
    Cancelled,
}

struct Problem {
    n: usize,
    target: u32,
    adjacent: Vec<bool>,
    edges: Vec<(usize, usize)>,
    /// `smaller_twins[v]`: twins of `v` with a smaller label.
    smaller_twins: Vec<Vec<usize>>,
    max_copies: u32,
    max_len: usize,
    node_limit: u64,
}

#[derive(Clone)]
struct State {
    word: Vec<u8>,
    count: Vec<u32>,
    runs: Vec<u32>,
    last: Vec<u8>,
    undo: Vec<(usize, u32, u8)>,
    undo_marks: Vec<usize>,
}

impl Problem {
    fn new(g: &Graph, d: usize, budget: SearchBudget) -> Self {
        let n = g.vertex_count();
        let adj = g.adjacency_indices();
        let mut adjacent = vec![false; n * n];
        let mut edges = Vec::new();
        for (i, row) in adj.iter().enumerate() {
            for &j in row {
                adjacent[i * n + j] = true;
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        let mut smaller_twins = vec![Vec::new(); n];
        for v in 0..n {
            for u in 0..v {
                let twins = (0..n)
                    .filter(|&w| w != u && w != v)
                    .all(|w| adjacent[u * n + w] == adjacent[v * n + w]);
                if twins {
                    smaller_twins[v].push(u);
                }
            }
        }
        Problem {
            n,
            target: (d + 2) as u32,
            adjacent,
            edges,
            smaller_twins,
            max_copies: budget.max_copies_per_letter as u32,
            max_len: budget.max_total_length,
            node_limit: budget.node_limit,
        }
    }

    fn empty_state(&self) -> State {
        State {
            word: Vec::new(),
            count: vec![0; self.n],
            runs: vec![0; self.n * self.n],
            last: vec![NO_LETTER; self.n * self.n],
            undo: Vec::new(),
            undo_marks: Vec::new(),
        }
    }

    /// Appends `x` if allowed; returns false (leaving the state untouched)
    /// when the copy budget, the twin rule or the non-edge cut rejects it.
    fn push(&self, s: &mut State, x: usize) -> bool {
        if s.count[x] >= self.max_copies {
            return false;
        }
        if s.count[x] == 0 && self.smaller_twins[x].iter().any(|&t| s.count[t] == 0) {
            return false;
        }
        let n = self.n;
        s.undo_marks.push(s.undo.len());
        let mut ok = true;
        for y in 0..n {
            if y == x {
                continue;
            }
            let (k, k2) = (x * n + y, y * n + x);
            if s.last[k] != x as u8 {
                s.undo.push((k, s.runs[k], s.last[k]));
                s.undo.push((k2, s.runs[k2], s.last[k2]));
                s.runs[k] += 1;
                s.runs[k2] += 1;
                s.last[k] = x as u8;
                s.last[k2] = x as u8;
                if !self.adjacent[k] && s.runs[k] >= self.target {
                    ok = false;
                }
            }
        }
        s.count[x] += 1;
        s.word.push(x as u8);
        if !ok {
            self.pop(s);
        }
        ok
    }

    fn pop(&self, s: &mut State) {
        let x = s.word.pop().expect("pop on empty word") as usize;
        s.count[x] -= 1;
        let mark = s.undo_marks.pop().expect("undo mark");
        while s.undo.len() > mark {
            let (k, r, l) = s.undo.pop().unwrap();
            s.runs[k] = r;
            s.last[k] = l;
        }
    }

    /// Lower bound on further letters needed; `None` if the copy budget is
    /// already insufficient.
    fn letters_needed(&self, s: &State) -> Option<usize> {
        let n = self.n;
        let mut need: Vec<u32> = s.count.iter().map(|&c| u32::from(c == 0)).collect();
        for &(x, y) in &self.edges {
            let k = x * n + y;
            let r = s.runs[k];
            if r >= self.target {
                continue;
            }
            let deficit = self.target - r;
            let (lo, hi) = (deficit / 2, deficit.div_ceil(2));
            let last = s.last[k];
            // New runs alternate starting with the letter that is not last.
            let (nx, ny) = if last == x as u8 {
                (lo, hi)
            } else if last == y as u8 {
                (hi, lo)
            } else {
                (lo, lo)
            };
            need[x] = need[x].max(nx);
            need[y] = need[y].max(ny);
        }
        let mut total = 0usize;
        for v in 0..n {
            if s.count[v] + need[v] > self.max_copies {
                return None;
            }
            total += need[v] as usize;
        }
        Some(total)
    }

    fn is_solution(&self, s: &State) -> bool {
        s.count.iter().all(|&c| c > 0) && self.edges.iter().all(|&(x, y)| s.runs[x * self.n + y] >= self.target)
    }

    fn run(&self, exec: Exec) -> (Search, u64) {
        let root = self.empty_state();
        let Some(root_need) = self.letters_needed(&root) else {
            return (Search::Exhausted, 0);
        };
        let start = root_need.max(self.n).max(1);
        let mut used: u64 = 0;
        for len in start..=self.max_len {
            let remaining = self.node_limit - used;
            let (result, nodes) = self.run_length(len, remaining, exec);
            match result {
                Search::Found(w) => return (Search::Found(w), used + nodes),
                Search::Limit => return (Search::Limit, self.node_limit),
                Search::Exhausted => used += nodes,
            }
        }
        (Search::Exhausted, used)
    }

    /// Enumerates words of exactly `len` letters with at most `limit` nodes.
    fn run_length(&self, len: usize, limit: u64, exec: Exec) -> (Search, u64) {
        let depth = SPLIT_DEPTH.min(len - 1);
        let mut prefixes = Vec::new();
        let mut state = self.empty_state();
        let mut prefix_nodes = 0u64;
        if !self.collect_prefixes(&mut state, len, depth, &mut prefixes, &mut prefix_nodes, limit) {
            return (Search::Limit, limit);
        }
        let budget = limit - prefix_nodes;

        struct Merge {
            results: Vec<Option<(TaskEnd, u64)>>,
            frontier: usize,
            used: u64,
            decision: Option<(Search, u64)>,
        }
        let merge = Mutex::new(Merge {
            results: vec![None; prefixes.len()],
            frontier: 0,
            used: 0,
            decision: None,
        });
        let decided_at = AtomicUsize::new(usize::MAX);
        let indices: Vec<usize> = (0..prefixes.len()).collect();

        exec.map(&indices, |&i| {
            if decided_at.load(Ordering::Acquire) < i {
                return;
            }
            let local_limit = budget - merge.lock().unwrap().used;
            let mut s = self.empty_state();
            for &x in &prefixes[i] {
                let ok = self.push(&mut s, x as usize);
                debug_assert!(ok);
            }
            let mut nodes = 0u64;
            let end = self.dfs(&mut s, len, &mut nodes, local_limit, &|| {
                decided_at.load(Ordering::Relaxed) < i
            });

            let mut m = merge.lock().unwrap();
            m.results[i] = Some((end, nodes));
            while m.decision.is_none() && m.frontier < m.results.len() {
                let Some((end, nodes)) = m.results[m.frontier].clone() else {
                    break;
                };
                m.used += nodes;
                let over = m.used > budget;
                m.decision = match end {
                    _ if over => Some((Search::Limit, limit)),
                    TaskEnd::Limit => Some((Search::Limit, limit)),
                    TaskEnd::Found(w) => Some((Search::Found(w), prefix_nodes + m.used)),
                    TaskEnd::Exhausted => None,
                    TaskEnd::Cancelled => unreachable!("cancelled task before the decision point"),
                };
                if m.decision.is_some() {
                    decided_at.store(m.frontier, Ordering::Release);
                }
                m.frontier += 1;
            }
        });

        let m = merge.into_inner().unwrap();
        m.decision.unwrap_or((Search::Exhausted, prefix_nodes + m.used))
    }

    /// Collects all admissible prefixes of `depth` letters; false when the
    /// node limit is exceeded on the way.
    fn collect_prefixes(
        &self,
        s: &mut State,
        len: usize,
        depth: usize,
        out: &mut Vec<Vec<u8>>,
        nodes: &mut u64,
        limit: u64,
    ) -> bool {
        if s.word.len() == depth {
            out.push(s.word.clone());
            return true;
        }
        for x in 0..self.n {
            if !self.push(s, x) {
                continue;
            }
            *nodes += 1;
            if *nodes > limit {
                self.pop(s);
                return false;
            }
            let fits = self.letters_needed(s).is_some_and(|need| need <= len - s.word.len());
            let ok = !fits || self.collect_prefixes(s, len, depth, out, nodes, limit);
            self.pop(s);
            if !ok {
                return false;
            }
        }
        true
    }

    fn dfs(&self, s: &mut State, len: usize, nodes: &mut u64, limit: u64, cancelled: &dyn Fn() -> bool) -> TaskEnd {
        if s.word.len() == len {
            return if self.is_solution(s) {
                TaskEnd::Found(s.word.clone())
            } else {
                TaskEnd::Exhausted
            };
        }
        if *nodes & 0x3ff == 0 && cancelled() {
            return TaskEnd::Cancelled;
        }
        for x in 0..self.n {
            if !self.push(s, x) {
                continue;
            }
            *nodes += 1;
            if *nodes > limit {
                self.pop(s);
                return TaskEnd::Limit;
            }
            let fits = self.letters_needed(s).is_some_and(|need| need <= len - s.word.len());
            if fits {
                let end = self.dfs(s, len, nodes, limit, cancelled);
                if end != TaskEnd::Exhausted {
                    self.pop(s);
                    return end;
                }
            }
            self.pop(s);
        }
        TaskEnd::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle_chord_diagram, word_from_chord_diagram};
    use crate::graph::families;

    fn budget(copies: usize, len: usize) -> SearchBudget {
        SearchBudget::new(copies, len, 50_000_000).unwrap()
    }

    /// All words over `n` letters of length `len`, as index vectors.
    fn all_words(n: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..n).map(move |x| {
                        let mut w2 = w.clone();
                        w2.push(x);
                        w2
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn k2_at_d1() {
        let g = families::complete(2);
        let v = find_general_word(&g, 1, budget(2, 4)).unwrap();
        assert_eq!(v.outcome, Outcome::Found(Word::from_compact("121")));
        // brute force: length-3 words over two letters representing K2 at d = 1
        let reps = all_words(2, 3)
            .into_iter()
            .filter(|w| {
                let word = Word::new(w.iter().map(|x| (x + 1).to_string())).unwrap();
                word.induced_graph_general(1) == g
            })
            .count();
        assert_eq!(reps, 2);
    }

    #[test]
    fn k3_at_d1() {
        let g = families::complete(3);
        let v = find_general_word(&g, 1, budget(2, 8)).unwrap();
        let w = v.outcome.witness().unwrap();
        assert_eq!(w.induced_graph_general(1), g);
        let abcabc = Word::from_compact("abcabc");
        for (x, y) in [("a", "b"), ("a", "c"), ("b", "c")] {
            assert_eq!(abcabc.max_alternation(x, y).unwrap(), 4);
        }
    }

    #[test]
    fn c4_and_c5_at_d2() {
        for n in [4, 5] {
            let g = families::cycle(n);
            assert_eq!(
                word_from_chord_diagram(&cycle_chord_diagram(n)).induced_graph_general(2),
                g
            );
            let v = find_general_word(&g, 2, budget(3, 3 * n)).unwrap();
            assert!(v.is_found(), "C{n}");
        }
    }

    #[test]
    fn w5_at_d2_with_five_copies() {
        let g = families::wheel(5);
        let v = find_general_word(&g, 2, budget(5, 30)).unwrap();
        let w = v.outcome.witness().expect("W5 is general 2-word-representable");
        assert_eq!(w.induced_graph_general(2), g);
    }

    #[test]
    fn rep_numbers() {
        let r = general_rep_number_bounded(&families::cycle(4), 3, budget(3, 12)).unwrap();
        assert_eq!(r.upper_bound, Some(2));
        assert!(!r.verdicts[0].is_found());
        let r = general_rep_number_bounded(&families::complete(2), 2, budget(2, 4)).unwrap();
        assert_eq!(r.upper_bound, Some(1));
        let edgeless = families::edgeless(&["a", "b", "c"]);
        let r = general_rep_number_bounded(&edgeless, 1, budget(1, 3)).unwrap();
        assert_eq!(r.upper_bound, Some(1));
        assert_eq!(r.verdicts[0].outcome.witness().unwrap().to_string(), "abc");
    }

    #[test]
    fn node_limit() {
        let g = families::complete(2);
        let v = find_general_word(&g, 1, SearchBudget::new(2, 4, 1).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::NodeLimitExceeded);
        assert_eq!(v.nodes_explored, 1);
    }

    #[test]
    fn budget_validation() {
        assert!(SearchBudget::new(0, 3, 10).is_err());
        let g = families::complete(3);
        assert!(find_general_word(&g, 1, SearchBudget::new(2, 2, 10).unwrap()).is_err());
        assert!(find_general_word(&Graph::new(), 1, budget(2, 4)).is_err());
    }

    #[test]
    fn refutation_is_budget_relative() {
        // K2 at d = 3 needs 5 alternations, impossible with two copies each
        let v = find_general_word(&families::complete(2), 3, budget(2, 10)).unwrap();
        assert_eq!(v.outcome, Outcome::NotFoundWithinBudget);
        let v = find_general_word(&families::complete(2), 3, budget(3, 10)).unwrap();
        assert!(v.is_found());
    }

    #[test]
    fn parallel_matches_sequential() {
        for (g, d, copies) in [
            (families::cycle(5), 2, 3),
            (families::wheel(5), 2, 5),
            (families::complete_bipartite(2, 3), 2, 4),
        ] {
            let b = budget(copies, 30);
            let seq = find_general_word_with(&g, d, b, Exec::Sequential).unwrap();
            let par = find_general_word_with(&g, d, b, Exec::Parallel(4)).unwrap();
            assert_eq!(seq, par);
        }
        let tight = SearchBudget::new(5, 30, 500).unwrap();
        let g = families::wheel(5);
        assert_eq!(
            find_general_word_with(&g, 2, tight, Exec::Sequential).unwrap(),
            find_general_word_with(&g, 2, tight, Exec::Parallel(3)).unwrap()
        );
    }
}
