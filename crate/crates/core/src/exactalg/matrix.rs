use rayon::prelude::*;

use super::scalar::Scalar;

/// Dense `order x order` matrix of [`Scalar`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    /// The empty matrix, whose determinant is 1.
    pub fn empty() -> Self {
        Self {
            order: 0,
            entries: Vec::new(),
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    /// Returns `None` unless every row has exactly `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Option<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return None;
        }
        Some(Self {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.order {
            self.entries.swap(a * self.order + j, b * self.order + j);
        }
    }

    /// Exact determinant by single-step fraction-free (Bareiss) elimination.
    ///
    /// After step `k` every remaining entry is a `(k+1) x (k+1)` minor of the input,
    /// so the division by the previous pivot is exact in the polynomial ring.
    pub fn det(&self) -> Scalar {
        let n = self.order;
        if n == 0 {
            return Scalar::one();
        }
        let mut rows: Vec<Vec<Scalar>> = self.rows().map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = Scalar::one();
        for k in 0..n - 1 {
            // Among the rows with a nonzero entry in column k take the sparsest.
            let pivot_row = (k..n)
                .filter(|&r| !rows[r][k].is_zero())
                .min_by_key(|&r| rows[r][k].num_terms());
            let Some(p) = pivot_row else {
                return Scalar::zero();
            };
            if p != k {
                rows.swap(p, k);
                negate = !negate;
            }
            let (head, tail) = rows.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let pivot = &pivot_row[k];
            tail.par_iter_mut().for_each(|row| {
                let factor = std::mem::take(&mut row[k]);
                for j in k + 1..n {
                    let cross = if factor.is_zero() {
                        pivot * &row[j]
                    } else {
                        &(pivot * &row[j]) - &(&factor * &pivot_row[j])
                    };
                    row[j] = cross
                        .exact_div(&prev)
                        .expect("Bareiss step divides exactly by the previous pivot");
                }
            });
            prev = rows[k][k].clone();
        }
        let det = rows[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Free-function form of [`SquareMatrix::det`].
pub fn det_fraction_free(m: &SquareMatrix) -> Scalar {
    m.det()
}
