//! Exact characteristic polynomials by the Faddeev–LeVerrier trace
//! recursion, and the small amount of polynomial algebra the identity
//! checks need.

use std::fmt;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

use super::matrix::SymmetricMatrix;
use crate::error::{Error, Result};

/// Default order limit for [`char_poly_exact`].
pub const DEFAULT_ORDER_LIMIT: usize = 16;

/// Dense univariate polynomial, coefficients in ascending degree, no
/// trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The linear polynomial `x + a`.
    pub fn shifted_x(a: T) -> Self {
        Self::new(vec![a, T::one()])
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of x^i.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficients from the leading term down.
    pub fn descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(T::one()), |acc, _| acc.mul(self))
    }

    /// The polynomial `p(x + a)`, by Horner's scheme over polynomials.
    pub fn compose_shift(&self, a: T) -> Self {
        let lin = Self::shifted_x(a);
        let mut out = Self::new(Vec::new());
        for c in self.coeffs.iter().rev() {
            let mut next = out.mul(&lin).coeffs;
            if next.is_empty() {
                next.push(T::zero());
            }
            next[0] = next[0].clone() + c.clone();
            out = Self::new(next);
        }
        out
    }
}

impl<T: Clone + Num + ToPrimitive> Poly<T> {
    /// Evaluates at a float point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `sum |c_i| max(1,|x|)^i`, the scale against which an evaluation at a
    /// numerical root is judged.
    pub fn eval_scale(&self, x: f64) -> f64 {
        let r = x.abs().max(1.0);
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.to_f64().unwrap_or(f64::NAN).abs())
    }
}

impl<T: Clone + Num + fmt::Display + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let unit = a.is_one() && i > 0;
            if !unit {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `det(xI - M)` over an exact ring, with the default order limit.
pub fn char_poly_exact<T>(m: &SymmetricMatrix<T>) -> Result<Poly<T>>
where
    T: Clone + Num + FromPrimitive + Integer,
{
    char_poly_with_limit(m, DEFAULT_ORDER_LIMIT)
}

/// Faddeev–LeVerrier: `N_j = M N_{j-1} + c_{n-j+1} I`,
/// `c_{n-j} = -tr(M N_j) / j`. Every division is exact for integer input;
/// a nonzero remainder is reported as an internal error.
pub fn char_poly_with_limit<T>(m: &SymmetricMatrix<T>, limit: usize) -> Result<Poly<T>>
where
    T: Clone + Num + FromPrimitive + Integer,
{
    let n = m.order();
    if n > limit {
        return Err(Error::OrderLimitExceeded { order: n, limit });
    }
    let a = m.to_rows();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    // N_0 = 0, so N_1 = I.
    let mut acc: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for j in 1..=n {
        let mut next = mat_mul(&a, &acc);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].clone() + coeffs[n - j + 1].clone();
        }
        let mn = mat_mul(&a, &next);
        let trace = (0..n).fold(T::zero(), |s, i| s + mn[i][i].clone());
        let jj = T::from_usize(j).expect("order representable");
        let (q, r) = trace.div_rem(&jj);
        if !r.is_zero() {
            return Err(Error::InternalConsistency(format!(
                "non-integral Faddeev-LeVerrier coefficient at step {j}"
            )));
        }
        coeffs[n - j] = T::zero() - q;
        acc = next;
    }
    Ok(Poly::new(coeffs))
}

fn mat_mul<T: Clone + Num>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].clone() + aik.clone() * b[k][j].clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: &[Vec<i64>]) -> SymmetricMatrix<BigInt> {
        SymmetricMatrix::from_rows(rows).unwrap().map(|&x| BigInt::from(x))
    }

    fn ints(p: &Poly<BigInt>) -> Vec<i64> {
        p.descending().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    // Cofactor expansion, used only as an independent check.
    fn det(rows: &[Vec<i64>]) -> i64 {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * rows[0][c] * det(&minor)
            })
            .sum()
    }

    #[test]
    fn j2_gives_x2_minus_2x() {
        let p = char_poly_exact(&big(&[vec![1, 1], vec![1, 1]])).unwrap();
        assert_eq!(ints(&p), vec![1, -2, 0]);
        assert_eq!(p.to_string(), "x^2 - 2x");
    }

    #[test]
    fn complete_3_graph_q() {
        // Q = I + 2J on 4 vertices; (x-9)(x-1)^3 = x^4 - 12x^3 + 30x^2 - 28x + 9
        let q: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| if i == j { 3 } else { 2 }).collect()).collect();
        let p = char_poly_exact(&big(&q)).unwrap();
        let expected = Poly::shifted_x(BigInt::from(-9)).mul(&Poly::shifted_x(BigInt::from(-1)).pow(3));
        assert_eq!(p, expected);
        assert_eq!(ints(&p), vec![1, -12, 30, -28, 9]);
    }

    #[test]
    fn matches_cofactor_determinant() {
        let m: Vec<Vec<i64>> = vec![
            vec![2, 1, 0, 3],
            vec![1, 1, 1, 0],
            vec![0, 1, 3, 2],
            vec![3, 0, 2, 4],
        ];
        let p = char_poly_exact(&big(&m)).unwrap();
        for x in -3i64..=3 {
            let shifted: Vec<Vec<i64>> = (0..4)
                .map(|i| (0..4).map(|j| if i == j { x - m[i][j] } else { -m[i][j] }).collect())
                .collect();
            assert_eq!(p.eval_f64(x as f64), det(&shifted) as f64);
        }
        // the machine-integer path agrees
        let small = char_poly_exact(&SymmetricMatrix::from_rows(&m).unwrap()).unwrap();
        assert_eq!(small.descending(), ints(&p));
    }

    #[test]
    fn order_limit() {
        let m = SymmetricMatrix::<BigInt>::identity(3);
        assert_eq!(
            char_poly_with_limit(&m, 2).unwrap_err(),
            Error::OrderLimitExceeded { order: 3, limit: 2 }
        );
        assert_eq!(char_poly_with_limit(&SymmetricMatrix::<BigInt>::zeros(0), 2).unwrap().descending(), vec![BigInt::from(1)]);
    }

    #[test]
    fn shift_and_pow() {
        // p(x) = x^2 - 2x, p(x+3) = x^2 + 4x + 3
        let p = Poly::new(vec![0i64, -2, 1]);
        assert_eq!(p.compose_shift(3).coeffs(), &[3, 4, 1]);
        assert_eq!(Poly::shifted_x(1i64).pow(3).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(Poly::shifted_x(1i64).pow(0).coeffs(), &[1]);
        assert_eq!(p.eval_scale(0.5), 3.0);
    }
}
