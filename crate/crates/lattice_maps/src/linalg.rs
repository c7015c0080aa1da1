//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Matrices are row-major `Vec<Vec<BigInt>>`. Everything here is exact; the
//! matrices that arise from desk-scale dimer models are small enough that no
//! care is taken over coefficient growth beyond using big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type BigMatrix = Vec<Vec<BigInt>>;

/// Converts a machine-integer matrix to big integers.
pub fn to_big(a: &[Vec<i64>]) -> BigMatrix {
    a.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn transpose(a: &BigMatrix, cols: usize) -> BigMatrix {
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_vec(a: &BigMatrix, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

fn sub_row_multiple(m: &mut BigMatrix, target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src = m[source].clone();
    for (x, y) in m[target].iter_mut().zip(&src) {
        *x -= q * y;
    }
}

/// Reduces rows to echelon form with positive pivots and reduced entries above
/// pivots (row-style Hermite normal form), using only unimodular row operations.
/// Only columns in `0..width` are used as pivot columns. Returns the number of
/// pivot rows; rows from there on are zero in the pivot columns.
pub fn row_echelon(m: &mut BigMatrix, width: usize) -> usize {
    let mut p = 0;
    for c in 0..width {
        if p == m.len() {
            break;
        }
        loop {
            let best = (p..m.len())
                .filter(|&r| !m[r][c].is_zero())
                .min_by_key(|&r| m[r][c].abs());
            let Some(best) = best else { break };
            m.swap(p, best);
            let mut clean = true;
            for r in p + 1..m.len() {
                if !m[r][c].is_zero() {
                    let q = m[r][c].div_floor(&m[p][c]);
                    sub_row_multiple(m, r, p, &q);
                    clean &= m[r][c].is_zero();
                }
            }
            if clean {
                break;
            }
        }
        if m[p][c].is_zero() {
            continue;
        }
        if m[p][c].is_negative() {
            for x in m[p].iter_mut() {
                *x = -x.clone();
            }
        }
        for r in 0..p {
            let q = m[r][c].div_floor(&m[p][c]);
            sub_row_multiple(m, r, p, &q);
        }
        p += 1;
    }
    p
}

/// A basis of the integer kernel `{x ∈ ℤ^cols : a x = 0}`, in Hermite normal form.
///
/// Row reduction of `[aᵀ | I]` records a unimodular transformation, so the rows
/// whose `aᵀ` part vanishes form a basis of the full (saturated) kernel lattice.
pub fn kernel_basis(a: &BigMatrix, cols: usize) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let mut m: BigMatrix = (0..cols)
        .map(|j| {
            let mut row: Vec<BigInt> = a.iter().map(|r| r[j].clone()).collect();
            row.extend((0..cols).map(|t| {
                if t == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let rank = row_echelon(&mut m, rows);
    let mut kernel: BigMatrix = m.drain(rank..).map(|row| row[rows..].to_vec()).collect();
    let r = row_echelon(&mut kernel, cols);
    kernel.truncate(r);
    kernel
}

/// Nonzero invariant factors of the Smith normal form, positive and in divisibility order.
pub fn smith_invariants(a: &BigMatrix, cols: usize) -> Vec<BigInt> {
    let mut m = a.clone();
    let rows = m.len();
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // Clear the pivot column and row by Euclidean steps.
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&m[t][t]);
                sub_row_multiple(&mut m, i, t, &q);
                dirty |= !m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                }
                dirty |= !m[t][j].is_zero();
            }
            if dirty {
                let smaller = (t + 1..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)))
                    .filter(|&(i, j)| !m[i][j].is_zero())
                    .min_by_key(|&(i, j)| m[i][j].abs())
                    .expect("a nonzero remainder exists");
                if smaller.1 == t {
                    m.swap(t, smaller.0);
                } else {
                    for row in m.iter_mut() {
                        row.swap(t, smaller.1);
                    }
                }
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    let row = m[i].clone();
                    for (x, y) in m[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        factors.push(m[t][t].abs());
    }
    factors
}

fn to_rational(a: &BigMatrix) -> Vec<Vec<BigRational>> {
    a.iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Gaussian elimination in place; returns the pivot columns among the first `width`.
fn rational_echelon(m: &mut [Vec<BigRational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut p = 0;
    for c in 0..width {
        let Some(r) = (p..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[p][c].recip();
        for x in m[p].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != p && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let src = m[p].clone();
                for (x, y) in m[r].iter_mut().zip(&src) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        p += 1;
    }
    pivots
}

/// Rank over the rationals.
pub fn rank(a: &BigMatrix, cols: usize) -> usize {
    rational_echelon(&mut to_rational(a), cols).len()
}

/// Some rational solution of `a x = b`, with free variables set to zero, or `None` if inconsistent.
pub fn solve_rational(a: &BigMatrix, cols: usize, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let mut m = to_rational(a);
    for (row, rhs) in m.iter_mut().zip(b) {
        row.push(BigRational::from_integer(rhs.clone()));
    }
    let pivots = rational_echelon(&mut m, cols);
    if m.iter().skip(pivots.len()).any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// The unique integer solution of `a x = b` for square unimodular `a`, if it is integral.
pub fn solve_integer(a: &BigMatrix, cols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let x = solve_rational(a, cols, b)?;
    x.into_iter()
        .map(|q| q.is_integer().then(|| q.to_integer()))
        .collect()
}

/// Whether the columns of `b` generate exactly the kernel of `a` as lattices.
///
/// Holds iff `a b = 0`, the ranks match, and the column lattice of `b` is
/// saturated (all Smith invariant factors equal 1).
pub fn image_equals_kernel(a: &BigMatrix, a_cols: usize, b: &BigMatrix, b_cols: usize) -> bool {
    let bt = transpose(b, b_cols);
    let composite_zero = bt
        .iter()
        .all(|col| mat_vec(a, col).iter().all(Zero::is_zero));
    let kernel_rank = a_cols - rank(a, a_cols);
    let factors = smith_invariants(b, b_cols);
    composite_zero && factors.len() == kernel_rank && factors.iter().all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> BigMatrix {
        to_big(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn smith_of_diagonal_reorders_into_divisibility_chain() {
        assert_eq!(smith_invariants(&m(&[&[2, 0], &[0, 3]]), 2), ints(&[1, 6]));
        assert_eq!(
            smith_invariants(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3),
            ints(&[2, 6, 12])
        );
        assert_eq!(smith_invariants(&m(&[&[0, 0], &[0, 0]]), 2), ints(&[]));
    }

    #[test]
    fn kernel_of_sum_map_is_saturated() {
        let k = kernel_basis(&m(&[&[1, 1, 1]]), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v.iter().sum::<BigInt>(), BigInt::zero());
        }
        assert_eq!(smith_invariants(&k, 3), ints(&[1, 1]));
    }

    #[test]
    fn kernel_of_doubling_map_is_not_the_doubled_lattice() {
        // ker (2 2) is generated by (1,-1), not by (2,-2).
        let k = kernel_basis(&m(&[&[2, 2]]), 2);
        assert_eq!(k, vec![ints(&[1, -1])]);
    }

    #[test]
    fn solving() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(solve_integer(&a, 2, &ints(&[3, 2])), Some(ints(&[1, 1])));
        let b = m(&[&[2, 0], &[0, 1]]);
        assert_eq!(solve_integer(&b, 2, &ints(&[1, 0])), None);
        assert!(solve_rational(&m(&[&[1, 1], &[1, 1]]), 2, &ints(&[1, 2])).is_none());
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]]), 2), 1);
    }

    #[test]
    fn image_kernel_comparison() {
        let a = m(&[&[1, 1]]);
        assert!(image_equals_kernel(&a, 2, &m(&[&[1], &[-1]]), 1));
        assert!(!image_equals_kernel(&a, 2, &m(&[&[2], &[-2]]), 1));
        assert!(!image_equals_kernel(&a, 2, &m(&[&[1], &[0]]), 1));
    }
}
