//! Smith normal form over the integers.

use serde::{Deserialize, Serialize};

/// Free rank and torsion coefficients of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Entries >= 2, each dividing the next.
    pub torsion: Vec<u64>,
}

/// Diagonal of the Smith normal form of an integer matrix given as rows.
///
/// Returns `min(rows, cols)` non-negative entries `d1 | d2 | ...` (trailing
/// zeros included). Elementary row and column operations only; transforms are
/// not tracked.
pub fn smith_normal_form(mut m: Vec<Vec<i128>>, rows: usize, cols: usize) -> Vec<i128> {
    let k = rows.min(cols);
    let mut diag = vec![0i128; k];
    for t in 0..k {
        loop {
            // smallest nonzero entry of the trailing submatrix to (t, t)
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0
                        && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return diag; // trailing submatrix is zero
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }

            // clear column t and row t by division steps
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t].div_euclid(m[t][t]);
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                    if m[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j].div_euclid(m[t][t]);
                    for i in t..rows {
                        m[i][j] -= q * m[i][t];
                    }
                    if m[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }

            // pivot must divide the rest of the submatrix
            let p = m[t][t];
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % p != 0 {
                        // fold the offending row into row t and restart
                        for jj in t..cols {
                            let add = m[i][jj];
                            m[t][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                diag[t] = p.abs();
                break;
            }
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(entries: &[&[i128]]) -> Vec<i128> {
        let rows = entries.len();
        let cols = if rows == 0 { 0 } else { entries[0].len() };
        smith_normal_form(
            entries.iter().map(|r| r.to_vec()).collect(),
            rows,
            cols,
        )
    }

    #[test]
    fn known_forms() {
        assert_eq!(snf(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]), vec![2, 2, 2]);
        assert_eq!(snf(&[&[1, 1, 1]]), vec![1]);
        assert_eq!(snf(&[&[0, 0, 0, 0]]), vec![0]);
        assert_eq!(snf(&[&[2, 4], &[6, 8]]), vec![2, 4]);
        // divisibility is enforced, not just diagonalization
        assert_eq!(snf(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    /// gcd of all k x k minors equals d1 * ... * dk; this is an independent
    /// characterization of the invariant factors.
    fn minor_gcd(m: &[Vec<i128>], k: usize) -> i128 {
        let rows = m.len();
        let cols = m[0].len();
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for rest in combos(n, k - 1) {
                    if rest.iter().all(|&r| r > first) {
                        let mut c = vec![first];
                        c.extend(rest);
                        out.push(c);
                    }
                }
            }
            out
        }
        fn det(m: &[Vec<i128>]) -> i128 {
            let n = m.len();
            if n == 1 {
                return m[0][0];
            }
            let mut acc = 0i128;
            for j in 0..n {
                let minor: Vec<Vec<i128>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&jj| jj != j)
                            .map(|jj| m[i][jj])
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                acc += s * m[0][j] * det(&minor);
            }
            acc
        }
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let mut g = 0i128;
        for ri in combos(rows, k) {
            for ci in combos(cols, k) {
                let sub: Vec<Vec<i128>> = ri
                    .iter()
                    .map(|&i| ci.iter().map(|&j| m[i][j]).collect())
                    .collect();
                g = gcd(g, det(&sub));
            }
        }
        g
    }

    #[test]
    fn invariant_factors_match_minor_gcds() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        let strat = (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                proptest::collection::vec(-6i128..=6, c),
                r,
            )
        });
        runner
            .run(&strat, |m| {
                let rows = m.len();
                let cols = m[0].len();
                let diag = smith_normal_form(m.clone(), rows, cols);
                let mut prod = 1i128;
                for (k, &d) in diag.iter().enumerate() {
                    if k > 0 {
                        if diag[k - 1] == 0 {
                            prop_assert_eq!(d, 0, "zeros must come last");
                        } else {
                            prop_assert_eq!(d % diag[k - 1], 0, "divisibility chain");
                        }
                    }
                    if d == 0 {
                        prod = 0;
                    } else {
                        prod *= d;
                    }
                    let mg = minor_gcd(&m, k + 1);
                    prop_assert_eq!(prod.abs(), mg, "k = {}", k + 1);
                }
                Ok(())
            })
            .unwrap();
    }
}
