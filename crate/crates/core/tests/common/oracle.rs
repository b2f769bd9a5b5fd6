//! Brute-force references for p-adic questions about diagonal integer
//! forms. They search for primitive solutions modulo a prime power large
//! enough for Hensel lifting and share no code with the library.

#![allow(dead_code)]

fn vp(mut n: i128, p: i128) -> u32 {
    assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Removes even powers of `p` from a coefficient by rescaling its variable.
fn strip_squares(mut a: i128, p: i128) -> i128 {
    while a % (p * p) == 0 {
        a /= p * p;
    }
    a
}

/// Whether `Σ a_i x_i² = 0` has a nontrivial solution over Q_p.
///
/// A primitive solution modulo `p^K` with `K = 2·max v_p(2a_i) + 1` lifts to
/// Z_p, so the search is a dynamic program over residues mod `p^K`.
pub fn isotropic_diag(a: &[i128], p: u64) -> bool {
    let p = p as i128;
    let a: Vec<i128> = a.iter().map(|&x| strip_squares(x, p)).collect();
    let m = a.iter().map(|&x| vp(2 * x, p)).max().unwrap_or(0);
    let k = 2 * m + 1;
    let modulus = p.pow(k) as usize;
    // reach[s][u]: residue s reachable, u = some coordinate was a unit
    let mut reach = vec![[false; 2]; modulus];
    reach[0][0] = true;
    for &ai in &a {
        let mut next = vec![[false; 2]; modulus];
        let mut values: Vec<(usize, bool)> = (0..modulus)
            .map(|x| {
                let x = x as i128;
                let val = (ai * x % modulus as i128 * x).rem_euclid(modulus as i128) as usize;
                (val, x % p != 0)
            })
            .collect();
        values.sort_unstable();
        values.dedup();
        for s in 0..modulus {
            for u in 0..2 {
                if !reach[s][u] {
                    continue;
                }
                for &(val, unit) in &values {
                    next[(s + val) % modulus][u | unit as usize] = true;
                }
            }
        }
        reach = next;
    }
    reach[0][1]
}

/// `(a, b)_p` from solubility of `a x² + b y² = z²`; `p = 0` is the real place.
pub fn hilbert_bruteforce(a: i128, b: i128, p: u64) -> i8 {
    let soluble = if p == 0 {
        a > 0 || b > 0
    } else {
        isotropic_diag(&[a, b, -1], p)
    };
    if soluble {
        1
    } else {
        -1
    }
}

/// Whether `a/b` is a square in Q_p, via isotropy of `⟨1, -ab⟩`.
pub fn same_square_class(a: i128, b: i128, p: u64) -> bool {
    isotropic_diag(&[1, -a * b], p)
}

/// Witt index over Q_p of a diagonal form of rank at most 4.
///
/// Rank 4 has index 2 exactly when `⟨a, b⟩ ≅ ⟨-c, -d⟩`, which holds when the
/// determinants agree up to squares and `⟨a, b⟩` represents `-c`.
pub fn witt_index_bruteforce(a: &[i128], p: u64) -> usize {
    assert!(a.len() <= 4);
    if a.len() < 2 || !isotropic_diag(a, p) {
        return 0;
    }
    if a.len() < 4 {
        return 1;
    }
    let split = same_square_class(a[0] * a[1], a[2] * a[3], p) && isotropic_diag(&a[..3], p);
    if split {
        2
    } else {
        1
    }
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn classical_cases() {
        assert!(!isotropic_diag(&[1, 1, 1], 2));
        assert!(isotropic_diag(&[1, 1, 1], 3));
        assert!(isotropic_diag(&[1, 1], 5));
        assert!(!isotropic_diag(&[1, 1], 3));
        assert!(!isotropic_diag(&[1, 1, 1, 1], 2));
        assert!(isotropic_diag(&[1, 1, 1, 1, 1], 2));
        assert_eq!(hilbert_bruteforce(-1, -1, 2), -1);
        assert_eq!(hilbert_bruteforce(2, 3, 3), -1);
        assert_eq!(witt_index_bruteforce(&[1, 1, 1, 1], 5), 2);
        assert_eq!(witt_index_bruteforce(&[1, -1, 1, -1], 2), 2);
    }
}
