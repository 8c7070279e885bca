//! Decomposition of the squared l1 norm into the squared l2 norm plus a
//! cross term, checked through two independent routes.
//!
//! For a difference vector d, (sum |d_i|)^2 = sum d_i^2 + 2 sum_{i<j}
//! |d_i||d_j|. The direct route accumulates the cross term in O(n) with a
//! suffix sum; the matrix route reads the same two pieces off the rank-one
//! outer-product matrix of |d| as its trace and strict upper triangle. The
//! routes stay separate so each can catch a slip in the other.

use crate::error::{Error, Result};
use crate::vector::Vector;

/// Largest dimension for which the dense outer-product matrix is built.
/// Beyond this the quadratic storage stops being worth a cross-check.
pub const MAX_MATRIX_DIM: usize = 1024;

/// The three pieces of (sum a_i)^2 = sum a_i^2 + 2 sum_{i<j} a_i a_j.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionBreakdown {
    /// Left side: the square of the plain sum.
    pub square_of_sum: f64,
    /// First right-side piece: the sum of squared elements.
    pub sum_of_squares: f64,
    /// Second right-side piece: twice the sum over unordered pairs.
    pub cross_term: f64,
}

impl ExpansionBreakdown {
    /// Left side minus the recombined right side. Zero up to rounding.
    pub fn residual(&self) -> f64 {
        self.square_of_sum - (self.sum_of_squares + self.cross_term)
    }
}

/// The squared-norm identity for a difference vector: l1^2 = l2^2 + cross.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityBreakdown {
    /// Square of the city-block length of u - v.
    pub l1_square: f64,
    /// Square of the Euclidean length of u - v.
    pub l2_square: f64,
    /// Twice the sum of |d_i||d_j| over unordered pairs, always nonnegative.
    pub cross_term: f64,
}

impl IdentityBreakdown {
    /// Left side minus the recombined right side. Zero up to rounding.
    pub fn residual(&self) -> f64 {
        self.l1_square - (self.l2_square + self.cross_term)
    }
}

/// Expand the square of a sum into its squared and pairwise pieces.
///
/// Elements may be negative, so `cross_term` can have either sign. The
/// pairwise piece is accumulated with a right-to-left suffix sum, keeping
/// the whole expansion O(n).
pub fn expand_square_of_sum(elements: &[f64]) -> Result<ExpansionBreakdown> {
    if elements.is_empty() {
        return Err(Error::EmptyInput);
    }
    let total: f64 = elements.iter().sum();
    let sum_of_squares: f64 = elements.iter().map(|x| x * x).sum();
    let mut pair_sum = 0.0;
    let mut suffix = 0.0;
    for &x in elements.iter().rev() {
        pair_sum += x * suffix;
        suffix += x;
    }
    Ok(ExpansionBreakdown {
        square_of_sum: total * total,
        sum_of_squares,
        cross_term: 2.0 * pair_sum,
    })
}

/// Break the squared l1 distance between two vectors into the squared l2
/// distance plus the pairwise cross term.
///
/// Delegates to [`expand_square_of_sum`] on the absolute differences, so
/// every field matches the general expansion bit for bit.
pub fn identity_breakdown(u: &Vector, v: &Vector) -> Result<IdentityBreakdown> {
    let expansion = expand_square_of_sum(&abs_diffs(u, v)?)?;
    Ok(IdentityBreakdown {
        l1_square: expansion.square_of_sum,
        l2_square: expansion.sum_of_squares,
        cross_term: expansion.cross_term,
    })
}

fn abs_diffs(u: &Vector, v: &Vector) -> Result<Vec<f64>> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(u.components()
        .iter()
        .zip(v.components())
        .map(|(x, y)| (x - y).abs())
        .collect())
}

/// Dense outer product of the absolute difference vector with itself.
///
/// Entry (i, j) holds |d_i||d_j|, so the matrix has rank one, its trace is
/// the squared l2 distance, and its strict upper triangle sums to half the
/// cross term.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOneMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl RankOneMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Option<f64> {
        if row < self.dim && col < self.dim {
            Some(self.entries[row * self.dim + col])
        } else {
            None
        }
    }

    /// Sum of the diagonal, accumulated in index order so it reproduces the
    /// direct sum of squares exactly.
    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i]).sum()
    }

    /// Sum of the entries strictly above the diagonal, in row-major order.
    pub fn upper_triangle_sum(&self) -> f64 {
        let mut sum = 0.0;
        for row in 0..self.dim {
            for col in row + 1..self.dim {
                sum += self.entries[row * self.dim + col];
            }
        }
        sum
    }
}

/// Build the outer-product matrix of |u - v| with itself.
///
/// The dimension cap is checked before any quadratic allocation happens.
pub fn rank_one_matrix(u: &Vector, v: &Vector) -> Result<RankOneMatrix> {
    let abs = abs_diffs(u, v)?;
    let dim = abs.len();
    if dim > MAX_MATRIX_DIM {
        return Err(Error::MatrixTooLarge {
            dim,
            max: MAX_MATRIX_DIM,
        });
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for &row_value in &abs {
        for &col_value in &abs {
            entries.push(row_value * col_value);
        }
    }
    Ok(RankOneMatrix { dim, entries })
}

/// Both sides of the identity when every absolute difference equals |c|.
///
/// With n equal elements the left side is (n|c|)^2 and the right side is
/// n c^2 + n(n-1) c^2. Returns (left, right); for moderate integer-valued
/// inputs both sides are exact and compare equal bitwise.
pub fn equal_elements_check(c: f64, n: usize) -> (f64, f64) {
    if n == 0 {
        return (0.0, 0.0);
    }
    let n_f = n as f64;
    let magnitude = c.abs();
    let lhs = (n_f * magnitude) * (n_f * magnitude);
    let square = c * c;
    let rhs = n_f * square + n_f * (n_f - 1.0) * square;
    (lhs, rhs)
}
