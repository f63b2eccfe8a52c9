//! Exact rank computation over the rationals.

use crate::rat::Rat;

/// Rank of a matrix given as rows, by Gaussian elimination over Q.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for r in (rank + 1)..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            // row_r <- lead * row_r - factor * pivot row
            let factor = m[r][col].clone();
            for c in col..ncols {
                let delta = &m[rank][c] * &factor;
                m[r][c] = &(&m[r][c] * &lead) - &delta;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of an integer matrix.
pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    let as_rat: Vec<Vec<Rat>> =
        rows.iter().map(|r| r.iter().map(|&x| Rat::int(x)).collect()).collect();
    rank(&as_rat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_int(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_int(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank_int(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_int(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
    }

    #[test]
    fn rational_entries() {
        let rows = vec![
            vec![Rat::new(1, 2), Rat::new(1, 3)],
            vec![Rat::new(3, 2), Rat::int(1)],
        ];
        assert_eq!(rank(&rows), 1);
    }
}
