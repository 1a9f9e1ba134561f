//! Cartan matrices and positive-root generation.
//!
//! Convention: `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`, i.e.
//! row i holds the pairings of all simple roots against the i-th simple
//! coroot. Exceptional diagrams use Bourbaki numbering (the branch node of
//! E_n is node 2, attached to node 4).

use std::collections::BTreeSet;

use super::{TypeLetter, WeylError};

pub fn cartan_matrix(letter: TypeLetter, rank: usize) -> Result<Vec<Vec<i64>>, WeylError> {
    let unsupported = || WeylError::Unsupported(format!("{letter:?}_{rank}"));
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    match (letter, rank) {
        (TypeLetter::A, n) if n >= 1 => Ok(chain(n)),
        (TypeLetter::B, n) if n >= 2 => {
            let mut a = chain(n);
            // alpha_n is short: its coroot pairs to -2 against alpha_{n-1}
            a[n - 1][n - 2] = -2;
            Ok(a)
        }
        (TypeLetter::C, n) if n >= 2 => {
            let mut a = chain(n);
            // alpha_n is long
            a[n - 2][n - 1] = -2;
            Ok(a)
        }
        (TypeLetter::D, n) if n >= 3 => {
            let mut a = chain(n - 1);
            for row in a.iter_mut() {
                row.push(0);
            }
            a.push(vec![0; n]);
            a[n - 1][n - 1] = 2;
            // the fork: alpha_n attaches to alpha_{n-2}
            a[n - 1][n - 3] = -1;
            a[n - 3][n - 1] = -1;
            Ok(a)
        }
        (TypeLetter::G, 2) => Ok(vec![vec![2, -3], vec![-1, 2]]),
        (TypeLetter::F, 4) => Ok(vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ]),
        (TypeLetter::E, n @ 6..=8) => {
            let mut a = vec![vec![0i64; n]; n];
            for i in 0..n {
                a[i][i] = 2;
            }
            // Bourbaki 1-based edges: 1-3, 2-4, 3-4, 4-5, 5-6 (, 6-7, 7-8)
            let mut edges = vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n >= 8 {
                edges.push((6, 7));
            }
            for (u, v) in edges {
                a[u][v] = -1;
                a[v][u] = -1;
            }
            Ok(a)
        }
        _ => Err(unsupported()),
    }
}

/// Positive roots in the simple-root basis, generated by root strings: for a
/// root beta and simple root alpha_i, beta + alpha_i is a root iff
/// p - <beta, alpha_i_check> > 0, where p is the depth of the string below
/// beta.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut alpha = vec![0i64; n];
        alpha[i] = 1;
        set.insert(alpha);
    }
    loop {
        let mut added = false;
        let snapshot: Vec<Vec<i64>> = set.iter().cloned().collect();
        for beta in &snapshot {
            for i in 0..n {
                // p = max k >= 0 with beta - k alpha_i a root
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().all(|&x| x == 0) || !set.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                // allow stepping down to the simple root itself
                if beta[i] > 0 {
                    let mut d = beta.clone();
                    d[i] -= 1;
                    if d.iter().all(|&x| x == 0) {
                        p = p.max(0);
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up) {
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let cases = [
            (TypeLetter::A, 4, 10),
            (TypeLetter::B, 2, 4),
            (TypeLetter::B, 3, 9),
            (TypeLetter::C, 3, 9),
            (TypeLetter::D, 4, 12),
            (TypeLetter::G, 2, 6),
            (TypeLetter::F, 4, 24),
            (TypeLetter::E, 6, 36),
            (TypeLetter::E, 7, 63),
            (TypeLetter::E, 8, 120),
        ];
        for (letter, rank, count) in cases {
            let c = cartan_matrix(letter, rank).unwrap();
            assert_eq!(positive_roots(&c).len(), count, "{letter:?}{rank}");
        }
    }

    #[test]
    fn highest_root_of_g2() {
        let c = cartan_matrix(TypeLetter::G, 2).unwrap();
        let roots = positive_roots(&c);
        // highest root of G2 is 3 alpha_1 + 2 alpha_2 in our numbering
        // (alpha_1 short)
        assert!(roots.contains(&vec![3, 2]));
    }
}
