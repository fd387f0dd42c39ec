//! Exact Gaussian elimination over the Gaussian rationals.

use crate::coeff::Coefficient;

/// Reduced row echelon form; zero rows are dropped.
pub fn row_reduce(rows: &[Vec<Coefficient>]) -> Vec<Vec<Coefficient>> {
    let mut m: Vec<Vec<Coefficient>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&f * p);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

pub fn rank(rows: &[Vec<Coefficient>]) -> usize {
    row_reduce(rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coefficient {
        Coefficient::from_int(n)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), Coefficient::i(), c(1)],
        ];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn rref_is_reduced() {
        let rows = vec![vec![c(0), c(2)], vec![c(3), c(1)]];
        assert_eq!(row_reduce(&rows), vec![vec![c(1), c(0)], vec![c(0), c(1)]]);
        assert!(row_reduce(&[]).is_empty());
    }
}
