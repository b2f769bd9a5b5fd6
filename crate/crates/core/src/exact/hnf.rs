use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Int;
use crate::error::{Error, Result};

/// Row-style Hermite normal form of an integer lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    /// `r x r` upper triangular basis: positive pivots, entries above a
    /// pivot reduced into `[0, pivot)`.
    pub basis: Vec<Vec<Int>>,
    /// Unimodular `m x m` matrix with `transform * generators = [basis; 0]`.
    pub transform: Vec<Vec<Int>>,
}

/// Hermite normal form of the lattice spanned by the rows of `generators`.
///
/// The rows must span a lattice of full rank `r` (the column count);
/// otherwise [`Error::Rank`] is returned.
pub fn hnf_basis(generators: &[Vec<Int>]) -> Result<HnfResult> {
    let m = generators.len();
    let r = generators.first().map_or(0, Vec::len);
    if m == 0 || r == 0 {
        return Err(Error::Shape("empty generator matrix".into()));
    }
    if generators.iter().any(|g| g.len() != r) {
        return Err(Error::Shape("ragged generator rows".into()));
    }
    let mut a: Vec<Vec<Int>> = generators.to_vec();
    let mut u: Vec<Vec<Int>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();

    let mut row = 0;
    for col in 0..r {
        if row == m {
            break;
        }
        loop {
            // Smallest nonzero entry of the column below `row` becomes pivot.
            let Some(p) = (row..m)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()))
            else {
                break;
            };
            a.swap(row, p);
            u.swap(row, p);
            let mut done = true;
            for i in row + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[row][col]);
                sub_row(&mut a, i, row, &q);
                sub_row(&mut u, i, row, &q);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            a[row].iter_mut().for_each(|v| *v = -&*v);
            u[row].iter_mut().for_each(|v| *v = -&*v);
        }
        for i in 0..row {
            let q = a[i][col].div_floor(&a[row][col]);
            if !q.is_zero() {
                sub_row(&mut a, i, row, &q);
                sub_row(&mut u, i, row, &q);
            }
        }
        row += 1;
    }
    if row < r {
        return Err(Error::Rank {
            rank: row,
            expected: r,
        });
    }
    a.truncate(r);
    Ok(HnfResult {
        basis: a,
        transform: u,
    })
}

// rows[i] -= q * rows[j]
fn sub_row(rows: &mut [Vec<Int>], i: usize, j: usize, q: &Int) {
    let src = rows[j].clone();
    for (v, s) in rows[i].iter_mut().zip(&src) {
        *v -= q * s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect()
    }

    fn mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
        a.iter()
            .map(|row| {
                (0..b[0].len())
                    .map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn examples() {
        let g = mat(&[&[2, 0], &[0, 3], &[1, 1]]);
        let h = hnf_basis(&g).unwrap();
        // (1,1) and (2,0) already give (0,2); with (0,3) the lattice is Z^2.
        assert_eq!(h.basis, mat(&[&[1, 0], &[0, 1]]));
        let ug = mul(&h.transform, &g);
        assert_eq!(&ug[..2], &h.basis[..]);
        assert!(ug[2].iter().all(Zero::is_zero));

        let id = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(hnf_basis(&id).unwrap().basis, id);
        let d = mat(&[&[2, 0], &[0, 2]]);
        assert_eq!(hnf_basis(&d).unwrap().basis, d);
    }

    #[test]
    fn reduces_above_pivots() {
        let g = mat(&[&[3, 5], &[0, 2]]);
        assert_eq!(hnf_basis(&g).unwrap().basis, mat(&[&[3, 1], &[0, 2]]));
    }

    #[test]
    fn rank_deficient() {
        let g = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            hnf_basis(&g),
            Err(Error::Rank {
                rank: 1,
                expected: 2
            })
        );
    }
}
