use std::collections::BTreeMap;

use crate::construct::{word_bipartite, BipartiteWord};
use crate::error::{Error, Result};
use crate::geometry::hyperplane::Hyperplane;
use crate::geometry::moment::moment_point;
use crate::geometry::rational::{int, Rational, RationalPoint};
use crate::graph::Graph;
use crate::nerve::{moment_params, ColoredConfig};
use crate::word::Word;

use super::{finish, Extension};

/// Separator hyperplane for one vertex `u_j` of the larger side.
#[derive(Debug, Clone)]
struct Separator {
    plane: Hyperplane,
    /// Side holding the points of the factors `F_i(u_j)`.
    positive: i8,
}

/// Extends the moment-curve coloring of the bipartite encoding of `g` to
/// `config ∪ extras` in `R^d`, `d = |V|`, without changing the nerve.
///
/// For each `u_j` but the last, `d` separators are placed on the curve next
/// to the factors `F_i(u_j)` (after them in odd blocks, before them in even
/// blocks), and the hyperplane `H_j` through them has every `F_i(u_j)`
/// point on its positive side. An extra takes the color `u_j` of the first
/// `H_j` with the extra on the positive side, and `u_m` otherwise.
pub fn extend_coloring_bipartite(
    g: &Graph,
    w: &Word,
    config: &ColoredConfig,
    extras: &[RationalPoint],
) -> Result<Extension> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::invalid(format!(
            "isolated vertex `{v}` is not supported by the extension"
        )));
    }
    let bw = word_bipartite(g)?;
    if bw.word != *w {
        return Err(Error::invalid("word is not the bipartite encoding of the graph"));
    }
    let d = bw.d;
    if config.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: config.dim(),
        });
    }
    if config.colors() != w.letters() {
        return Err(Error::invalid("configuration colors do not spell the word"));
    }
    let params = moment_params(config)
        .ok_or_else(|| Error::invalid("configuration is not on the moment curve in parameter order"))?;
    crate::geometry::predicates::check_dims(extras, d)?;

    let separators = (0..bw.u.len().saturating_sub(1))
        .map(|j| separator(&bw, config, &params, j))
        .collect::<Result<Vec<_>>>()?;

    for e in extras {
        if let Some(j) = separators.iter().position(|s| s.plane.side(e) == 0) {
            return Err(Error::Degenerate(format!(
                "extra point {e} lies on the separator hyperplane of `{}`",
                bw.u[j]
            )));
        }
    }
    let last = bw.u.last().expect("a graph without isolated vertices has edges");
    let colors = extras
        .iter()
        .map(|e| {
            let j = separators.iter().position(|s| s.plane.side(e) == s.positive);
            j.map_or(last, |j| &bw.u[j]).clone()
        })
        .collect();
    finish(config, extras, colors)
}

/// Builds `H_j` for the 0-based index `j` into `bw.u`.
fn separator(bw: &BipartiteWord, config: &ColoredConfig, params: &[Rational], j: usize) -> Result<Separator> {
    let d = bw.d;
    // gap g sits between word positions g - 1 and g (0-based)
    let gaps: Vec<usize> = (0..d)
        .map(|i| {
            let (start, len) = bw.spans[i][j];
            if i % 2 == 0 {
                start + len
            } else {
                start
            }
        })
        .collect();
    let mut per_gap: BTreeMap<usize, usize> = BTreeMap::new();
    for &g in &gaps {
        *per_gap.entry(g).or_default() += 1;
    }
    let n = params.len();
    let mut seps = Vec::with_capacity(d);
    for (&g, &count) in &per_gap {
        let lo = if g == 0 {
            &params[0] - int(1)
        } else {
            params[g - 1].clone()
        };
        let hi = if g == n {
            &params[n - 1] + int(1)
        } else {
            params[g].clone()
        };
        // several separators in one gap are spread evenly across it
        for k in 1..=count {
            let step = (&hi - &lo) * Rational::new(k.into(), (count + 1).into());
            seps.push(&lo + step);
        }
    }
    let plane = Hyperplane::through_moment_points(&seps, d)?;
    let probe = moment_point(&(&seps[0] - int(1)), d);
    let positive = plane.side(&probe);

    let u = &bw.u[j];
    for (p, c) in config.points().iter().zip(config.colors()) {
        if c == u && plane.side(p) != positive {
            return Err(Error::Invariant(format!(
                "point {p} of `{u}` is not on the positive side of its separator"
            )));
        }
    }
    Ok(Separator { plane, positive })
}
