//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! printed by `cargo test`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use wordnerve::exec::Exec;
use wordnerve::fixtures;
use wordnerve::graph::{families, Graph};
use wordnerve::nerve::{nerve, verify_partition_induced};
use wordnerve::selftest::{self, CheckReport};
use wordnerve::Word;

const SEED: u64 = 20_240_601;

// Runtime ceilings for the criteria that state one.
const BREEN_EXHAUSTIVE_LIMIT: Duration = Duration::from_secs(60);
const GALE_LIMIT: Duration = Duration::from_secs(30);
const CONSTRUCTIONS_LIMIT: Duration = Duration::from_secs(120);

// Scales.
const BREEN_MAX_R: usize = 8;
const BREEN_DIMS: [usize; 3] = [2, 3, 4];
const BREEN_RANDOM: usize = 500;
const BREEN_RANDOM_MAX_R: usize = 10;
const BREEN_RANDOM_MAX_D: usize = 5;
const GALE_MAX_R: usize = 8;
const GALE_MAX_D: usize = 4;
const ROTATIONS: usize = 1000;
const EXHAUSTIVE_GRAPH_N: usize = 5;
const RANDOM_GRAPHS: usize = 200;
const RANDOM_GRAPH_MAX_N: usize = 9;
const BIPARTITE_N: usize = 6;
const PIPELINE_WORDS: usize = 300;
const PLANAR_EXTENSIONS: usize = 100;
const PLANAR_MAX_EXTRAS: usize = 5;
const BIPARTITE_RANDOM: usize = 20;
const BIPARTITE_MAX_V: usize = 3;
const BIPARTITE_EXTRAS: usize = 6;
const SEARCH_NODE_LIMIT: u64 = 200_000_000;
const FIXTURE_PERMUTATIONS: usize = 24;

struct Criterion {
    number: usize,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn from_reports(
    number: usize,
    title: &'static str,
    reports: &[CheckReport],
    limit: Option<(usize, Duration)>,
) -> Criterion {
    let mut passed = reports.iter().all(CheckReport::passed);
    let mut detail: Vec<String> = reports.iter().map(CheckReport::summary).collect();
    if let Some((k, ceiling)) = limit {
        let took = reports[k].elapsed;
        if took > ceiling {
            passed = false;
            detail.push(format!("took {:.1}s, limit {}s", took.as_secs_f64(), ceiling.as_secs()));
        }
    }
    Criterion {
        number,
        title,
        passed,
        detail: detail.join("; "),
    }
}

fn criterion_3() -> Criterion {
    let w = fixtures::w5_word();
    let exact = w.induced_graph_general(2) == families::wheel(5);
    let skeleton = verify_partition_induced(&families::wheel(5), &w, 2);
    let passed = exact && matches!(skeleton, Ok(true));
    Criterion {
        number: 3,
        title: "W5 word induces W5; nerve skeleton of its realization is W5",
        passed,
        detail: format!("induced exact: {exact}, skeleton check: {skeleton:?}"),
    }
}

fn criterion_4() -> Criterion {
    let (edge, rotated) = fixtures::ROTATION_PAIR;
    let k2 = Graph::from_edge_list(&[("1", "2")], &[] as &[&str]).unwrap();
    let edgeless = families::edgeless(&["1", "2"]);
    let a = Word::from_compact(edge).induced_graph_general(3) == k2;
    let b = Word::from_compact(rotated).induced_graph_general(3) == edgeless;
    let rot = selftest::rotation_invariance(ROTATIONS, SEED);
    Criterion {
        number: 4,
        title: "rotation fixture at d=3 and rotation invariance at d=2",
        passed: a && b && rot.passed(),
        detail: format!("{edge} -> K2: {a}, {rotated} -> edgeless: {b}; {}", rot.summary()),
    }
}

fn criterion_9() -> Criterion {
    let config = fixtures::three_color_moment_config();
    let computed = nerve(&config, 2);
    let perm = selftest::three_color_permutations(FIXTURE_PERMUTATIONS, SEED);
    let faces = computed
        .as_ref()
        .map(|n| n.complex.to_string())
        .unwrap_or_else(|e| format!("error: {e}"));
    Criterion {
        number: 9,
        title: "three-color R^3 fixture loads, nerve stable under permutation",
        passed: computed.is_ok() && perm.passed(),
        detail: format!("nerve {faces}; {}", perm.summary()),
    }
}

fn main() -> ExitCode {
    let exec = if Exec::parallel_available() {
        Exec::Parallel(0)
    } else {
        Exec::Sequential
    };
    let start = Instant::now();
    let criteria = vec![
        from_reports(
            1,
            "Breen criterion agrees with exact hull intersection",
            &[
                selftest::breen_exhaustive(BREEN_MAX_R, &BREEN_DIMS, exec),
                selftest::breen_random(BREEN_RANDOM, BREEN_RANDOM_MAX_R, BREEN_RANDOM_MAX_D, SEED, exec),
            ],
            Some((0, BREEN_EXHAUSTIVE_LIMIT)),
        ),
        from_reports(
            2,
            "Gale evenness matches the facet oracle",
            &[selftest::gale_vs_oracle(GALE_MAX_R, GALE_MAX_D)],
            Some((0, GALE_LIMIT)),
        ),
        criterion_3(),
        criterion_4(),
        from_reports(
            5,
            "construction round trips",
            &[selftest::construction_round_trips(
                EXHAUSTIVE_GRAPH_N,
                RANDOM_GRAPHS,
                RANDOM_GRAPH_MAX_N,
                BIPARTITE_N,
                SEED,
            )],
            Some((0, CONSTRUCTIONS_LIMIT)),
        ),
        from_reports(
            6,
            "nerve skeleton of the realization equals the induced graph",
            &[selftest::pipeline_identity(PIPELINE_WORDS, SEED, exec)],
            None,
        ),
        from_reports(
            7,
            "coloring extensions preserve the nerve",
            &[
                selftest::extension_planar(PLANAR_EXTENSIONS, PLANAR_MAX_EXTRAS, SEED),
                selftest::extension_bipartite(BIPARTITE_RANDOM, BIPARTITE_MAX_V, BIPARTITE_EXTRAS, SEED),
            ],
            None,
        ),
        from_reports(
            8,
            "search recovers verified witnesses, same verdicts for 1 and 4 jobs",
            &[selftest::search_witnesses(SEARCH_NODE_LIMIT)],
            None,
        ),
        criterion_9(),
    ];

    let mut failed = 0;
    for c in &criteria {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("criterion {} {status}: {} [{}]", c.number, c.title, c.detail);
        failed += usize::from(!c.passed);
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
