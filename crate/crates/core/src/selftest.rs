//! Oracle cross-check suites. Each check is deterministic for a given seed
//! and reports how many cases it ran and which ones disagreed.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::{word_any_graph, word_bipartite};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extend::{extend_coloring_2d, extend_coloring_bipartite, Extension};
use crate::fixtures;
use crate::geometry::gale::gale_facets;
use crate::geometry::hull::{breen_intersect, hulls_intersect};
use crate::geometry::moment::moment_point;
use crate::geometry::predicates::orientation;
use crate::geometry::rational::{int, Rational, RationalPoint};
use crate::graph::{families, Graph};
use crate::nerve::{nerve, nerve_with, realize_on_moment_curve, realize_with_params, ColoredConfig};
use crate::oracle;
use crate::search::{find_general_word_with, SearchBudget};
use crate::word::Word;

/// Outcome of one check suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.cases > 0 && self.failures.is_empty()
    }

    /// One line: `PASS name: cases, time` or `FAIL name: ... first failure`.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {}: {} cases, {} failures, {:.2}s",
            self.name,
            self.cases,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        );
        if let Some(first) = self.failures.first() {
            line.push_str(&format!(" (first: {first})"));
        }
        line
    }
}

struct Tally {
    name: String,
    cases: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String) {
        self.cases += 1;
        self.failures.push(what);
    }

    fn done(self) -> CheckReport {
        CheckReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

fn ints(xs: &[usize]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x as i64)).collect()
}

/// Splits `params` by the bits of `mask` and compares the combinatorial
/// and the exact geometric intersection test.
fn breen_case(params: &[Rational], mask: u32, d: usize) -> Result<(bool, bool)> {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, t) in params.iter().enumerate() {
        if mask & (1 << i) != 0 {
            a.push(t.clone());
        } else {
            b.push(t.clone());
        }
    }
    let combinatorial = breen_intersect(&a, &b, d)?;
    let to_points = |ts: &[Rational]| ts.iter().map(|t| moment_point(t, d)).collect::<Vec<_>>();
    let geometric = hulls_intersect(&[to_points(&a), to_points(&b)])?;
    Ok((combinatorial, geometric))
}

/// Breen's criterion against exact hull intersection for every bicoloring
/// with both classes nonempty (up to swapping them) of `x(1), ..., x(r)`.
pub fn breen_exhaustive(max_r: usize, dims: &[usize], exec: Exec) -> CheckReport {
    let mut t = Tally::new("breen vs exact hulls, exhaustive");
    let mut cases = Vec::new();
    for r in 2..=max_r {
        for &d in dims {
            // point 1 always in A removes the swap symmetry
            for half in 0u32..(1 << (r - 1)) - 1 {
                cases.push((r, d, (half << 1) | 1));
            }
        }
    }
    let results = exec.map(&cases, |&(r, d, mask)| {
        let params = ints(&(1..=r).collect::<Vec<_>>());
        breen_case(&params, mask, d)
    });
    for ((r, d, mask), res) in cases.into_iter().zip(results) {
        match res {
            Ok((c, g)) => t.check(c == g, || format!("r={r} d={d} mask={mask:b}: breen {c}, hulls {g}")),
            Err(e) => t.error(format!("r={r} d={d} mask={mask:b}: {e}")),
        }
    }
    t.done()
}

/// Same comparison on random rational parameters.
pub fn breen_random(instances: usize, max_r: usize, max_d: usize, seed: u64, exec: Exec) -> CheckReport {
    let mut t = Tally::new("breen vs exact hulls, random rational");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Vec<Rational>, u32, usize)> = (0..instances)
        .map(|_| {
            let r = rng.gen_range(2..=max_r);
            let d = rng.gen_range(1..=max_d);
            let params = fixtures::random_params(&mut rng, r);
            let mask = rng.gen_range(1..(1u32 << r) - 1);
            (params, mask, d)
        })
        .collect();
    let results = exec.map(&cases, |(params, mask, d)| breen_case(params, *mask, *d));
    for ((params, mask, d), res) in cases.iter().zip(results) {
        match res {
            Ok((c, g)) => t.check(c == g, || {
                format!("r={} d={d} mask={mask:b}: breen {c}, hulls {g}", params.len())
            }),
            Err(e) => t.error(format!("d={d} mask={mask:b}: {e}")),
        }
    }
    t.done()
}

/// Gale's evenness condition against the orientation-sign facet oracle.
pub fn gale_vs_oracle(max_r: usize, max_d: usize) -> CheckReport {
    let mut t = Tally::new("gale evenness vs facet oracle");
    for d in 2..=max_d {
        for r in (d + 1).max(3)..=max_r {
            match gale_facets(r, d) {
                Ok(f) => t.check(f == oracle::facets_by_orientation(r, d), || format!("r={r} d={d}")),
                Err(e) => t.error(format!("r={r} d={d}: {e}")),
            }
        }
    }
    let spot: Vec<Vec<usize>> = fixtures::CYCLIC_5_3_FACETS.iter().map(|f| f.to_vec()).collect();
    t.check(gale_facets(5, 3).ok() == Some(spot.clone()), || {
        "gale_facets(5, 3) spot value".into()
    });
    t.check(oracle::facets_by_orientation(5, 3) == spot, || {
        "oracle(5, 3) spot value".into()
    });
    t.done()
}

/// Fixed words: the wheel, the rotation pair and the pipeline on `W5`.
pub fn fixed_words() -> CheckReport {
    let mut t = Tally::new("fixed words");
    let w5 = fixtures::w5_word();
    t.check(w5.induced_graph_general(2) == fixtures::w5(), || {
        "W5 word does not induce W5".into()
    });
    match realize_on_moment_curve(&w5, 2).and_then(|c| nerve(&c, 2)) {
        Ok(n) => t.check(n.complex.one_skeleton() == fixtures::w5(), || {
            "W5 nerve skeleton".into()
        }),
        Err(e) => t.error(format!("W5 pipeline: {e}")),
    }
    let (edge, rotated) = fixtures::ROTATION_PAIR;
    t.check(
        Word::from_compact(edge).induced_graph_general(3).edge_count() == 1,
        || format!("{edge} at d=3"),
    );
    t.check(
        Word::from_compact(rotated).induced_graph_general(3).edge_count() == 0,
        || format!("{rotated} at d=3"),
    );
    t.done()
}

/// Rotating a word does not change the graph it induces at `d = 2`.
pub fn rotation_invariance(count: usize, seed: u64) -> CheckReport {
    let mut t = Tally::new("rotation invariance at d=2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let k = rng.gen_range(2..=6);
        let len = rng.gen_range(2..=16);
        let w = fixtures::random_word(&mut rng, k, len);
        let s = rng.gen_range(1..len as i64);
        let g = w.induced_graph_general(2);
        let rotated = w.rotate(s);
        t.check(
            rotated.induced_graph_general(2) == g && oracle::induced_graph_oracle(&rotated, 2) == g,
            || format!("{w} rotated by {s}"),
        );
    }
    t.done()
}

/// `word_any_graph` on every labeled graph with `1..=max_n` vertices and on
/// random graphs; `word_bipartite` on every bipartite labeled graph with at
/// most `max_bipartite_n` vertices.
pub fn construction_round_trips(
    max_n: usize,
    random: usize,
    random_max_n: usize,
    max_bipartite_n: usize,
    seed: u64,
) -> CheckReport {
    let mut t = Tally::new("construction round trips");
    let any = |t: &mut Tally, g: &Graph| {
        let (w, d) = word_any_graph(g);
        t.check(w.induced_graph_general(d) == *g, || format!("word_any_graph on {g}"));
    };
    for n in 1..=max_n {
        for g in oracle::all_labeled_graphs(n) {
            any(&mut t, &g);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let n = rng.gen_range(1..=random_max_n);
        let p = rng.gen_range(0.1..0.9);
        let g = fixtures::random_graph(&mut rng, n, p);
        any(&mut t, &g);
    }
    for n in 1..=max_bipartite_n {
        for g in oracle::all_labeled_graphs(n) {
            let expected = oracle::is_bipartite_brute(&g);
            match word_bipartite(&g) {
                Ok(bw) => t.check(expected && bw.word.induced_graph_general(bw.d) == g, || {
                    format!("word_bipartite on {g}")
                }),
                Err(Error::NotBipartite) => t.check(!expected, || format!("{g} wrongly rejected")),
                Err(e) => t.error(format!("word_bipartite on {g}: {e}")),
            }
        }
    }
    t.done()
}

/// The 1-skeleton of the nerve of a moment-curve realization equals the
/// induced graph; triangle-free graphs give no 2-faces.
pub fn pipeline_identity(count: usize, seed: u64, exec: Exec) -> CheckReport {
    let mut t = Tally::new("pipeline identity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Word, usize)> = (0..count)
        .map(|_| {
            let k = rng.gen_range(2..=6);
            let len = rng.gen_range(k..=14);
            (fixtures::random_word(&mut rng, k, len), rng.gen_range(1..=4))
        })
        .collect();
    let results = exec.map(&cases, |(w, d)| {
        realize_on_moment_curve(w, *d).and_then(|c| nerve(&c, 2))
    });
    let mut triangle_free = 0;
    for ((w, d), res) in cases.iter().zip(results) {
        let g = w.induced_graph_general(*d);
        match res {
            Ok(n) => {
                t.check(n.complex.one_skeleton() == g, || {
                    format!("{w} at d={d}: skeleton differs")
                });
                if g.is_triangle_free() {
                    triangle_free += 1;
                    t.check(n.complex.faces_of_dim(2).is_empty(), || format!("{w} at d={d}: 2-face"));
                }
            }
            Err(e) => t.error(format!("{w} at d={d}: {e}")),
        }
    }
    if triangle_free == 0 {
        t.error("no triangle-free instance was generated".into());
    }
    t.done()
}

/// Random point of the plane off the integer grid.
fn planar_extra<R: Rng>(rng: &mut R, hi_x: i64, hi_y: i64) -> RationalPoint {
    RationalPoint::new(vec![
        Rational::new(rng.gen_range(-7..(hi_x + 1) * 7).into(), 7.into()),
        Rational::new(rng.gen_range(-13..(hi_y + 4) * 13).into(), 13.into()),
    ])
}

fn extension_ok(t: &mut Tally, original: &ColoredConfig, res: Result<Extension>, what: impl Fn() -> String) {
    match res {
        Ok(ext) => {
            let kept = ext.config.colors()[..original.len()] == *original.colors()
                && ext.config.points()[..original.len()] == *original.points();
            t.check(kept && ext.before == ext.after, || {
                format!("{}: nerve or restriction changed", what())
            });
        }
        Err(e) => t.error(format!("{}: {e}", what())),
    }
}

/// Planar extension of triangle-free 2-word colorings on the parabola.
pub fn extension_planar(count: usize, max_extras: usize, seed: u64) -> CheckReport {
    let mut t = Tally::new("planar extension");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while t.cases < count {
        let k = rng.gen_range(2..=5);
        let len = rng.gen_range(k..=12);
        let w = fixtures::random_word(&mut rng, k, len);
        if w.alphabet().len() < 2 || !w.induced_graph_general(2).is_triangle_free() {
            continue;
        }
        let config = realize_on_moment_curve(&w, 2).expect("valid word");
        let n = w.len() as i64;
        // degenerate draws (collinear triples, repeated points) are redrawn
        let res = loop {
            let extras: Vec<RationalPoint> = (0..rng.gen_range(1..=max_extras))
                .map(|_| planar_extra(&mut rng, n, n * n))
                .collect();
            match extend_coloring_2d(&config, &extras) {
                Err(Error::Degenerate(_)) => continue,
                other => break other,
            }
        };
        extension_ok(&mut t, &config, res, || format!("word {w}"));
    }
    t.done()
}

/// Extras for a configuration in `R^d`: convex combinations of the
/// configuration and jittered points near the curve.
fn spatial_extras<R: Rng>(rng: &mut R, config: &ColoredConfig, count: usize) -> Vec<RationalPoint> {
    let d = config.dim();
    let n = config.len() as i64;
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                let picks: Vec<&RationalPoint> = config.points().choose_multiple(rng, 3.min(config.len())).collect();
                let weights: Vec<i64> = picks.iter().map(|_| rng.gen_range(1..10)).collect();
                let total: i64 = weights.iter().sum();
                let coords = (0..d)
                    .map(|k| {
                        picks
                            .iter()
                            .zip(&weights)
                            .map(|(p, &w)| &p.coords[k] * Rational::new(w.into(), total.into()))
                            .sum()
                    })
                    .collect();
                RationalPoint::new(coords)
            } else {
                let t = Rational::new(rng.gen_range(-14..(n + 2) * 7).into(), 7.into());
                let base = moment_point(&t, d);
                RationalPoint::new(
                    base.coords
                        .into_iter()
                        .map(|c| c + Rational::new(rng.gen_range(-40..40).into(), 11.into()))
                        .collect(),
                )
            }
        })
        .collect()
}

/// Bipartite extension on `K_{1,2}`, `K_{2,2}`, `K_{2,3}` and random
/// bipartite graphs whose smaller side has at most `max_v` vertices.
pub fn extension_bipartite(random: usize, max_v: usize, extras: usize, seed: u64) -> CheckReport {
    let mut t = Tally::new("bipartite extension");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = vec![
        families::complete_bipartite(1, 2),
        families::complete_bipartite(2, 2),
        families::complete_bipartite(2, 3),
    ];
    for _ in 0..random {
        let a = rng.gen_range(1..=max_v);
        let b = rng.gen_range(a..=max_v + 1);
        graphs.push(fixtures::random_bipartite(&mut rng, a, b, 0.6));
    }
    for g in graphs {
        let bw = match word_bipartite(&g) {
            Ok(bw) => bw,
            Err(e) => {
                t.error(format!("{g}: {e}"));
                continue;
            }
        };
        let config = realize_on_moment_curve(&bw.word, bw.d).expect("valid word");
        let res = loop {
            let pts = spatial_extras(&mut rng, &config, extras);
            match extend_coloring_bipartite(&g, &bw.word, &config, &pts) {
                Err(Error::Degenerate(_)) => continue,
                other => break other,
            }
        };
        extension_ok(&mut t, &config, res, || format!("{g}"));
    }
    t.done()
}

/// Witness recovery for small graphs, identical across worker counts.
pub fn search_witnesses(node_limit: u64) -> CheckReport {
    let mut t = Tally::new("search witnesses");
    let cases = [
        ("K2", families::complete(2), 1, 2),
        ("K3", families::complete(3), 1, 2),
        ("C4", families::cycle(4), 2, 3),
        ("C5", families::cycle(5), 2, 3),
        ("W5", families::wheel(5), 2, 5),
    ];
    for (name, g, d, copies) in cases {
        let budget = match SearchBudget::new(copies, copies * g.vertex_count(), node_limit) {
            Ok(b) => b,
            Err(e) => {
                t.error(format!("{name}: {e}"));
                continue;
            }
        };
        let one = find_general_word_with(&g, d, budget, Exec::Sequential);
        let four = find_general_word_with(&g, d, budget, Exec::Parallel(4));
        match (one, four) {
            (Ok(a), Ok(b)) => {
                let verified = a
                    .outcome
                    .witness()
                    .is_some_and(|w| oracle::induced_graph_oracle(w, d) == g);
                t.check(verified, || format!("{name} at d={d}: {}", a.outcome.name()));
                t.check(a == b, || format!("{name}: jobs 1 and 4 disagree"));
            }
            (Err(e), _) | (_, Err(e)) => t.error(format!("{name}: {e}")),
        }
    }
    t.done()
}

/// Every labeled graph induced by some word of length `<= max_len` over
/// three letters is found by the search within the same length budget.
pub fn search_completeness(max_len: usize, dims: &[usize]) -> CheckReport {
    let mut t = Tally::new("search completeness on short words");
    let letters = ["a", "b", "c"];
    for &d in dims {
        let mut achievable: BTreeSet<Vec<(String, String)>> = BTreeSet::new();
        let mut graphs = Vec::new();
        let mut frontier: Vec<Vec<&str>> = vec![Vec::new()];
        for _ in 0..max_len {
            frontier = frontier
                .into_iter()
                .flat_map(|w| {
                    letters.iter().map(move |l| {
                        let mut w2 = w.clone();
                        w2.push(l);
                        w2
                    })
                })
                .collect();
            for w in &frontier {
                let g = Word::new(w.iter().copied()).expect("letters").induced_graph_general(d);
                let key: Vec<(String, String)> = g
                    .vertices()
                    .map(|v| (v.to_string(), String::new()))
                    .chain(g.edges().map(|(a, b)| (a.to_string(), b.to_string())))
                    .collect();
                if achievable.insert(key) {
                    graphs.push(g);
                }
            }
        }
        for g in graphs {
            let budget = SearchBudget::new(max_len, max_len, 10_000_000).expect("positive");
            match find_general_word_with(&g, d, budget, Exec::Sequential) {
                Ok(v) => t.check(v.is_found(), || format!("{g} at d={d} not found")),
                Err(e) => t.error(format!("{g} at d={d}: {e}")),
            }
        }
    }
    t.done()
}

/// The three-color configuration in `R^3` gives the same nerve under
/// random reorderings of its points.
pub fn three_color_permutations(count: usize, seed: u64) -> CheckReport {
    let mut t = Tally::new("three-color R^3 fixture under permutation");
    let config = fixtures::three_color_moment_config();
    let base = match nerve(&config, 2) {
        Ok(n) => n,
        Err(e) => {
            t.error(format!("nerve: {e}"));
            return t.done();
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let mut perm: Vec<usize> = (0..config.len()).collect();
        perm.shuffle(&mut rng);
        match config.permuted(&perm).and_then(|c| nerve(&c, 2)) {
            Ok(n) => t.check(n == base, || format!("permutation {perm:?}")),
            Err(e) => t.error(format!("permutation {perm:?}: {e}")),
        }
    }
    t.done()
}

/// Integer and random rational parameters share the order type of the
/// moment curve and give the same nerve skeleton.
pub fn order_type_transfer(count: usize, seed: u64) -> CheckReport {
    let mut t = Tally::new("order-type transfer");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let k = rng.gen_range(2..=4);
        let len = rng.gen_range(k..=9);
        let w = fixtures::random_word(&mut rng, k, len);
        let d = rng.gen_range(2..=3);
        let params = fixtures::random_params(&mut rng, len);
        let (Ok(a), Ok(b)) = (realize_on_moment_curve(&w, d), realize_with_params(&w, d, &params)) else {
            t.error(format!("{w}: realization failed"));
            continue;
        };
        let same_orientation = subsets_of(len, d + 1).iter().all(|s| {
            let pick = |c: &ColoredConfig| s.iter().map(|&i| c.points()[i].clone()).collect::<Vec<_>>();
            orientation(&pick(&a)).ok() == orientation(&pick(&b)).ok()
        });
        let same_nerve = match (nerve(&a, 1), nerve(&b, 1)) {
            (Ok(x), Ok(y)) => x.complex.one_skeleton() == y.complex.one_skeleton(),
            _ => false,
        };
        t.check(same_orientation && same_nerve, || format!("{w} at d={d}"));
    }
    t.done()
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::geometry::gale::subsets(n, k)
        .into_iter()
        .map(|s| s.into_iter().map(|i| i - 1).collect())
        .collect()
}

/// Parallel and sequential nerve computation agree.
pub fn nerve_exec_agreement(count: usize, seed: u64, exec: Exec) -> CheckReport {
    let mut t = Tally::new("nerve sequential vs parallel");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let k = rng.gen_range(3..=6);
        let w = fixtures::random_word(&mut rng, k, 14);
        let c = realize_on_moment_curve(&w, 2).expect("valid word");
        match (nerve_with(&c, 3, Exec::Sequential), nerve_with(&c, 3, exec)) {
            (Ok(a), Ok(b)) => t.check(a == b, || format!("{w}")),
            (Err(e), _) | (_, Err(e)) => t.error(format!("{w}: {e}")),
        }
    }
    t.done()
}

/// The suite behind the CLI `selftest` command, at desk scale.
pub fn run_all(seed: u64, exec: Exec) -> Vec<CheckReport> {
    vec![
        breen_exhaustive(7, &[2, 3, 4], exec),
        breen_random(100, 10, 5, seed, exec),
        gale_vs_oracle(8, 4),
        fixed_words(),
        rotation_invariance(300, seed),
        construction_round_trips(4, 50, 9, 5, seed),
        pipeline_identity(60, seed, exec),
        extension_planar(30, 5, seed),
        extension_bipartite(5, 3, 6, seed),
        search_witnesses(50_000_000),
        search_completeness(5, &[1, 2]),
        three_color_permutations(5, seed),
        order_type_transfer(10, seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let reports = [
            breen_exhaustive(5, &[2, 3], Exec::Sequential),
            breen_random(20, 6, 4, 1, Exec::Sequential),
            gale_vs_oracle(6, 3),
            fixed_words(),
            rotation_invariance(50, 1),
            construction_round_trips(3, 10, 6, 4, 1),
            pipeline_identity(10, 1, Exec::Sequential),
            three_color_permutations(2, 1),
            order_type_transfer(3, 1),
            nerve_exec_agreement(2, 1, Exec::Parallel(2)),
        ];
        for r in &reports {
            assert!(r.passed(), "{}", r.summary());
        }
    }
}
