//! Cyclic Jacobi eigensolver for dense symmetric matrices, plus the
//! [`Spectrum`] type with eigenvalue clustering.

use serde::Serialize;

use super::matrix::SymmetricMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Real, ResolvedTolerances, Tolerances};

/// One cluster of numerically equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenGroup<T> {
    /// Mean of the clustered eigenvalues.
    pub value: T,
    pub multiplicity: usize,
    /// Index of the first member in the descending eigenvalue list.
    pub start: usize,
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    vectors: Vec<Vec<T>>,
    groups: Vec<EigenGroup<T>>,
    tolerances: ResolvedTolerances<T>,
    sweeps: usize,
}

impl<T: Real> Spectrum<T> {
    /// Eigenvalues in descending order.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Unit eigenvector paired with `values()[i]`.
    pub fn vector(&self, i: usize) -> &[T] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    pub fn groups(&self) -> &[EigenGroup<T>] {
        &self.groups
    }

    pub fn tolerances(&self) -> &ResolvedTolerances<T> {
        &self.tolerances
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue (zero for the empty spectrum).
    pub fn largest(&self) -> T {
        self.values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn smallest(&self) -> T {
        self.values.last().copied().unwrap_or_else(T::zero)
    }

    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.groups.len()
    }

    pub fn is_zero(&self, value: T) -> bool {
        value.abs() <= self.tolerances.zero
    }

    /// Number of eigenvalues classified as nonzero (the rank).
    pub fn rank(&self) -> usize {
        self.values.iter().filter(|&&v| !self.is_zero(v)).count()
    }

    /// Indices of the eigenvalues classified as zero, in solver order.
    pub fn zero_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_zero(self.values[i])).collect()
    }
}

/// Clusters a descending list by single linkage: consecutive values whose
/// gap is at most `tol` share a group.
pub fn group_values<T: Real>(values: &[T], tol: T) -> Vec<EigenGroup<T>> {
    let mut groups: Vec<EigenGroup<T>> = Vec::new();
    let mut sum = T::zero();
    for (i, &v) in values.iter().enumerate() {
        let joins = i > 0 && (values[i - 1] - v).abs() <= tol;
        if joins {
            let g = groups.last_mut().expect("group exists");
            g.multiplicity += 1;
            sum = sum + v;
            g.value = sum / T::from_count(g.multiplicity);
        } else {
            sum = v;
            groups.push(EigenGroup {
                value: v,
                multiplicity: 1,
                start: i,
            });
        }
    }
    groups
}

/// Eigendecomposition by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm is at most
/// `tol.solve * ||M||_F`. Eigenvalues come out descending; each
/// eigenvector has its largest-magnitude entry positive (lowest index on
/// ties).
pub fn eigen_decompose<T: Real>(m: &SymmetricMatrix<T>, tol: &Tolerances<T>) -> Result<Spectrum<T>> {
    let n = m.order();
    let mut a = m.to_rows();
    let mut v: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let norm = m.frobenius_norm();
    let threshold = tol.solve * norm;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off.as_f64(),
                diagonal: (0..n).map(|i| a[i][i].as_f64()).collect(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap_or(std::cmp::Ordering::Equal).then(i.cmp(&j)));
    let values: Vec<T> = order.iter().map(|&i| a[i][i]).collect();
    let vectors: Vec<Vec<T>> = order
        .iter()
        .map(|&c| {
            let mut col: Vec<T> = (0..n).map(|r| v[r][c]).collect();
            fix_sign(&mut col);
            col
        })
        .collect();

    let rho = values.iter().fold(T::zero(), |acc, x| acc.max(x.abs()));
    let tolerances = tol.resolve(rho);
    let groups = group_values(&values, tolerances.group);
    Ok(Spectrum {
        values,
        vectors,
        groups,
        tolerances,
        sweeps,
    })
}

fn off_diagonal_norm<T: Real>(a: &[Vec<T>]) -> T {
    let mut sum = T::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i != j {
                sum = sum + x * x;
            }
        }
    }
    sum.sqrt()
}

// Annihilates a[p][q] with one plane rotation.
fn rotate<T: Real>(a: &mut [Vec<T>], v: &mut [Vec<T>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == T::zero() {
        return;
    }
    let two = T::lit(2.0);
    let theta = (a[q][q] - a[p][p]) / (two * apq);
    let t = {
        let t = T::one() / (theta.abs() + theta.hypot(T::one()));
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / t.hypot(T::one());
    let s = t * c;

    a[p][p] = a[p][p] - t * apq;
    a[q][q] = a[q][q] + t * apq;
    a[p][q] = T::zero();
    a[q][p] = T::zero();
    for r in 0..a.len() {
        if r == p || r == q {
            continue;
        }
        let arp = a[r][p];
        let arq = a[r][q];
        let new_p = c * arp - s * arq;
        let new_q = s * arp + c * arq;
        a[r][p] = new_p;
        a[p][r] = new_p;
        a[r][q] = new_q;
        a[q][r] = new_q;
    }
    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

/// Flips `x` so that its largest-magnitude entry is positive. Entries within
/// a relative 1e-9 of the maximum count as ties and the lowest index wins.
pub fn fix_sign<T: Real>(x: &mut [T]) {
    let max = x.iter().fold(T::zero(), |acc, e| acc.max(e.abs()));
    if max == T::zero() {
        return;
    }
    let cut = max * (T::one() - T::lit(1e-9));
    if let Some(lead) = x.iter().find(|e| e.abs() >= cut) {
        if *lead < T::zero() {
            x.iter_mut().for_each(|e| *e = -*e);
        }
    }
}

/// Compares two eigenvalue multisets: both sorted descending, equal length,
/// paired entries within `tol`.
pub fn multiset_close<T: Real>(a: &[T], b: &[T], tol: T) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let desc = |x: &T, y: &T| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal);
    a.sort_by(desc);
    b.sort_by(desc);
    a.iter().zip(&b).all(|(x, y)| (*x - *y).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn decompose(rows: &[Vec<f64>]) -> Spectrum<f64> {
        let m = SymmetricMatrix::from_rows(rows).unwrap();
        eigen_decompose(&m, &Tolerances::default()).unwrap()
    }

    fn residual(m: &SymmetricMatrix<f64>, spec: &Spectrum<f64>) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, &lambda) in spec.values().iter().enumerate() {
            let x = spec.vector(i);
            let mx = m.mul_vec(x).unwrap();
            let r: f64 = mx.iter().zip(x).map(|(a, b)| (a - lambda * b).powi(2)).sum::<f64>().sqrt();
            worst = worst.max(r);
        }
        worst
    }

    #[test]
    fn all_ones_matrix() {
        let spec = decompose(&vec![vec![1.0; 4]; 4]);
        assert_abs_diff_eq!(spec.values()[0], 4.0, epsilon = 1e-12);
        for &v in &spec.values()[1..] {
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-12);
        }
        assert_eq!(spec.groups().len(), 2);
        assert_eq!(spec.groups()[1].multiplicity, 3);
        for &x in spec.vector(0) {
            assert_abs_diff_eq!(x, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn path_p3_signless_laplacian() {
        // Q(P3): characteristic polynomial l^3 - 4l^2 + 3l = l(l-1)(l-3)
        let spec = decompose(&[vec![1.0, 1.0, 0.0], vec![1.0, 2.0, 1.0], vec![0.0, 1.0, 1.0]]);
        let expect = [3.0, 1.0, 0.0];
        for (v, e) in spec.values().iter().zip(expect) {
            assert_abs_diff_eq!(*v, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn diagonal_and_zero_matrices() {
        let spec = decompose(&[vec![2.0, 0.0], vec![0.0, 5.0]]);
        assert_eq!(spec.values(), &[5.0, 2.0]);
        assert_eq!(spec.sweeps(), 0);
        let zero = decompose(&[vec![0.0; 3], vec![0.0; 3], vec![0.0; 3]]);
        assert_eq!(zero.values(), &[0.0; 3]);
        assert_eq!(zero.rank(), 0);
        let empty = decompose(&[]);
        assert!(empty.is_empty());
    }

    #[test]
    fn residuals_and_orthonormality() {
        let rows: Vec<Vec<f64>> = (0..9)
            .map(|i| (0..9).map(|j| ((i * 7 + j * 7 + i * j) % 5) as f64 - 1.5).collect())
            .collect();
        let m = SymmetricMatrix::from_rows(&rows).unwrap();
        let spec = eigen_decompose(&m, &Tolerances::default()).unwrap();
        assert!(residual(&m, &spec) <= 1e-12 * m.frobenius_norm());
        for i in 0..9 {
            for j in 0..9 {
                let dot: f64 = spec.vector(i).iter().zip(spec.vector(j)).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(dot, want, epsilon = 1e-12);
            }
        }
        assert!(spec.values().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn sweep_cap_reports_partial_state() {
        let m = SymmetricMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        let tol = Tolerances {
            max_sweeps: 0,
            ..Tolerances::default()
        };
        match eigen_decompose(&m, &tol) {
            Err(Error::NoConvergence { sweeps, diagonal, .. }) => {
                assert_eq!(sweeps, 0);
                assert_eq!(diagonal, vec![1.0, 1.0]);
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn single_precision_works() {
        let m = SymmetricMatrix::from_rows(&[vec![2.0f32, 1.0], vec![1.0, 2.0]]).unwrap();
        let spec = eigen_decompose(&m, &Tolerances::default()).unwrap();
        assert!((spec.values()[0] - 3.0).abs() < 1e-5);
        assert!((spec.values()[1] - 1.0).abs() < 1e-5);
    }

    #[test]
    fn sign_convention() {
        let mut x = vec![0.1, -0.9, 0.3];
        fix_sign(&mut x);
        assert_eq!(x, vec![-0.1, 0.9, -0.3]);
        let mut tie = vec![-0.5, 0.5];
        fix_sign(&mut tie);
        assert_eq!(tie, vec![0.5, -0.5]);
    }

    #[test]
    fn grouping_is_single_linkage() {
        let g = group_values(&[3.0, 2.0 + 1e-10, 2.0, 2.0 - 1e-10, 0.0], 1e-8);
        let mults: Vec<usize> = g.iter().map(|g| g.multiplicity).collect();
        assert_eq!(mults, vec![1, 3, 1]);
        assert_eq!(g[1].start, 1);
        assert!(multiset_close(&[1.0, 2.0], &[2.0, 1.0 + 1e-12], 1e-10));
        assert!(!multiset_close(&[1.0, 2.0], &[2.0], 1e-10));
    }
}
