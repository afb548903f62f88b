use crate::error::{Error, Result};

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Whether the index set `facet` (1-based, sorted) satisfies the evenness
/// condition inside `1..=r`: any two indices outside it are separated by an
/// even number of its members.
pub fn satisfies_evenness(facet: &[usize], r: usize) -> bool {
    let mut inside = vec![false; r + 1];
    for &i in facet {
        inside[i] = true;
    }
    // Parity of members seen so far must agree at every non-member.
    let mut parity = None;
    let mut count = 0usize;
    for &is_member in inside.iter().skip(1) {
        if is_member {
            count += 1;
        } else {
            match parity {
                None => parity = Some(count % 2),
                Some(p) if p != count % 2 => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// Facets of the cyclic polytope with `r` vertices in `R^d`, as sorted
/// 1-based index sets, listed lexicographically.
pub fn gale_facets(r: usize, d: usize) -> Result<Vec<Vec<usize>>> {
    if d < 2 {
        return Err(Error::invalid(format!("dimension must be at least 2, got {d}")));
    }
    if r <= d {
        return Err(Error::invalid(format!("need more than d = {d} vertices, got r = {r}")));
    }
    Ok(subsets(r, d).into_iter().filter(|s| satisfies_evenness(s, r)).collect())
}
