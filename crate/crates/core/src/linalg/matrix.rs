use std::fmt;

use num_traits::{Num, NumCast, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense symmetric matrix storing each unordered pair once (packed lower
/// triangle, row major).
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricMatrix<T> {
    order: usize,
    packed: Vec<T>,
}

#[inline]
fn slot(i: usize, j: usize) -> usize {
    let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
    hi * (hi + 1) / 2 + lo
}

impl<T: Clone + Zero> SymmetricMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            packed: vec![T::zero(); order * (order + 1) / 2],
        }
    }

    /// Builds the matrix from `f(i, j)` evaluated for `j <= i` only.
    pub fn from_lower_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut packed = Vec::with_capacity(order * (order + 1) / 2);
        for i in 0..order {
            for j in 0..=i {
                packed.push(f(i, j));
            }
        }
        Self { order, packed }
    }

    /// Builds from a square row-major array, rejecting asymmetric input.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self>
    where
        T: PartialEq,
    {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InternalConsistency(format!("matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self::from_lower_fn(n, |i, j| rows[i][j].clone()))
    }

    pub fn diagonal_from(values: &[T]) -> Self {
        Self::from_lower_fn(values.len(), |i, j| if i == j { values[i].clone() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.packed[slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.packed[slot(i, j)] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> SymmetricMatrix<U> {
        SymmetricMatrix {
            order: self.order,
            packed: self.packed.iter().map(f).collect(),
        }
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.order).map(|i| self.get(i, i).clone()).collect()
    }
}

impl<T: Clone + Num> SymmetricMatrix<T> {
    pub fn identity(order: usize) -> Self {
        Self::from_lower_fn(order, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.order)
            .map(|i| (0..self.order).fold(T::zero(), |acc, j| acc + self.get(i, j).clone()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            packed: self
                .packed
                .iter()
                .zip(&other.packed)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// `self * x` for a dense vector.
    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: x.len(),
            });
        }
        Ok((0..self.order)
            .map(|i| {
                x.iter()
                    .enumerate()
                    .fold(T::zero(), |acc, (j, xj)| acc + self.get(i, j).clone() * xj.clone())
            })
            .collect())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: other.order,
            });
        }
        Ok(())
    }
}

impl<T: Clone + Zero + ToPrimitive> SymmetricMatrix<T> {
    /// Numeric conversion, e.g. an integer matrix to `f64`.
    pub fn cast<U: Clone + Zero + NumCast>(&self) -> SymmetricMatrix<U> {
        self.map(|a| U::from(a.clone()).expect("entry representable in target scalar"))
    }
}

impl<T: Real> SymmetricMatrix<T> {
    pub fn frobenius_norm(&self) -> T {
        let mut sum = T::zero();
        for i in 0..self.order {
            for j in 0..self.order {
                let a = *self.get(i, j);
                sum = sum + a * a;
            }
        }
        sum.sqrt()
    }

    /// `x^T M x`.
    pub fn quadratic_form(&self, x: &[T]) -> Result<T> {
        let mx = self.mul_vec(x)?;
        Ok(mx.iter().zip(x).map(|(a, b)| *a * *b).sum())
    }
}

impl<T: fmt::Debug + Clone + Zero> fmt::Debug for SymmetricMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl<T: Serialize + Clone + Zero> Serialize for SymmetricMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// The 0/1 vertex-by-edge incidence matrix B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl IncidenceMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, v: usize, e: usize) -> bool {
        self.bits[v * self.cols + e]
    }

    pub fn set(&mut self, v: usize, e: usize, value: bool) {
        self.bits[v * self.cols + e] = value;
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|v| (0..self.cols).filter(|&e| self.get(v, e)).count())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|e| (0..self.rows).filter(|&v| self.get(v, e)).count())
            .collect()
    }

    /// `B B^T`, computed by the definition of the matrix product.
    pub fn row_gram<T: Clone + Num>(&self) -> SymmetricMatrix<T> {
        SymmetricMatrix::from_lower_fn(self.rows, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, e| {
                if self.get(i, e) && self.get(j, e) {
                    acc + T::one()
                } else {
                    acc
                }
            })
        })
    }

    /// `B^T B`.
    pub fn col_gram<T: Clone + Num>(&self) -> SymmetricMatrix<T> {
        SymmetricMatrix::from_lower_fn(self.cols, |e, f| {
            (0..self.rows).fold(T::zero(), |acc, v| {
                if self.get(v, e) && self.get(v, f) {
                    acc + T::one()
                } else {
                    acc
                }
            })
        })
    }

    /// `B^T x`: entry `e` is x(e), the sum of x over the vertices of e.
    pub fn transpose_mul<T: Clone + Num>(&self, x: &[T]) -> Vec<T> {
        (0..self.cols)
            .map(|e| {
                (0..self.rows).fold(T::zero(), |acc, v| if self.get(v, e) { acc + x[v].clone() } else { acc })
            })
            .collect()
    }
}
