//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Bilinear02;

/// Outcome of [`solve_linear_exact`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinearSolution {
    Unique {
        x: Vec<Scalar>,
    },
    /// Rank deficient but consistent; `x` sets every free variable to zero.
    Underdetermined {
        x: Vec<Scalar>,
        rank: usize,
    },
    /// `row` is the 0-based index (in the caller's numbering) of the first
    /// equation left as `0 = nonzero` after elimination.
    Infeasible {
        row: usize,
    },
}

impl LinearSolution {
    pub fn solution(&self) -> Option<&[Scalar]> {
        match self {
            LinearSolution::Unique { x } | LinearSolution::Underdetermined { x, .. } => Some(x),
            LinearSolution::Infeasible { .. } => None,
        }
    }
}

fn lcm_of_denominators<'a>(row: impl Iterator<Item = &'a Scalar>) -> BigInt {
    row.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Solves `A x = b` by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers; elimination then runs entirely in
/// `BigInt` with exact divisions by the previous pivot. Back substitution is
/// done in rationals.
pub fn solve_linear_exact(a: &[Vec<Scalar>], b: &[Scalar]) -> LinearSolution {
    let m = a.len();
    assert!(m >= 1, "system needs at least one equation");
    assert_eq!(m, b.len(), "right-hand side length mismatch");
    let k = a[0].len();
    assert!(k >= 1, "system needs at least one unknown");

    let mut rows: Vec<(usize, Vec<BigInt>)> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(idx, (row, rhs))| {
            assert_eq!(row.len(), k, "ragged coefficient matrix");
            let scale = lcm_of_denominators(row.iter().chain(std::iter::once(rhs)));
            let ints = row.iter().chain(std::iter::once(rhs)).map(|x| x.numer() * (&scale / x.denom())).collect();
            (idx, ints)
        })
        .collect();

    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i].1[c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r].1;
        for (_, row) in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..=k {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = rows[r].1[c].clone();
        pivots.push(c);
        r += 1;
    }

    if let Some(row) = rows[r..].iter().filter(|(_, v)| !v[k].is_zero()).map(|(idx, _)| *idx).min() {
        return LinearSolution::Infeasible { row };
    }

    let mut x = vec![Scalar::zero(); k];
    for (t, &c) in pivots.iter().enumerate().rev() {
        let row = &rows[t].1;
        let mut acc = Scalar::from(row[k].clone());
        for j in c + 1..k {
            if !row[j].is_zero() {
                acc -= Scalar::from(row[j].clone()) * &x[j];
            }
        }
        x[c] = acc.checked_div(&Scalar::from(row[c].clone())).expect("pivot is nonzero");
    }

    if r < k {
        LinearSolution::Underdetermined { x, rank: r }
    } else {
        LinearSolution::Unique { x }
    }
}

/// Why a matrix is not a Riemannian metric. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpdFailure {
    Asymmetric {
        i: usize,
        j: usize,
    },
    /// The leading principal minor of this order is not positive.
    Minor {
        order: usize,
        value: Scalar,
    },
}

impl std::fmt::Display for SpdFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpdFailure::Asymmetric { i, j } => write!(f, "metric not symmetric at ({i},{j})"),
            SpdFailure::Minor { order, value } => {
                write!(f, "leading principal minor {order} is {value}, not positive")
            }
        }
    }
}

/// Sylvester's criterion, exactly.
///
/// Elimination without row exchanges yields pivots `d_1..d_n` whose partial
/// products are the leading principal minors; the first non-positive one is
/// the witness.
pub fn spd_check(g: &Bilinear02) -> std::result::Result<(), SpdFailure> {
    if let Some((i, j)) = g.asymmetry() {
        return Err(SpdFailure::Asymmetric { i: i + 1, j: j + 1 });
    }
    let n = g.dim();
    let mut work = g.rows();
    let mut minor = Scalar::one();
    for t in 0..n {
        let pivot = work[t][t].clone();
        minor = &minor * &pivot;
        if !minor.is_positive() {
            return Err(SpdFailure::Minor { order: t + 1, value: minor });
        }
        for i in t + 1..n {
            let factor = work[i][t].checked_div(&pivot).expect("pivot is positive");
            for j in t..n {
                let delta = &factor * &work[t][j];
                work[i][j] -= delta;
            }
        }
    }
    Ok(())
}

/// Exact inverse by Gauss-Jordan elimination with row exchanges.
pub fn invert(m: &Bilinear02) -> Result<Bilinear02> {
    let n = m.dim();
    let mut left = m.rows();
    let mut right = Bilinear02::identity(n).rows();
    for c in 0..n {
        let p = (c..n).find(|&i| !left[i][c].is_zero()).ok_or_else(|| Error::Engine("matrix is singular".into()))?;
        left.swap(c, p);
        right.swap(c, p);
        let inv = left[c][c].recip()?;
        for j in 0..n {
            left[c][j] = &left[c][j] * &inv;
            right[c][j] = &right[c][j] * &inv;
        }
        for i in 0..n {
            if i == c || left[i][c].is_zero() {
                continue;
            }
            let factor = left[i][c].clone();
            for j in 0..n {
                let dl = &factor * &left[c][j];
                left[i][j] -= dl;
                let dr = &factor * &right[c][j];
                right[i][j] -= dr;
            }
        }
    }
    Bilinear02::from_rows(right)
}
