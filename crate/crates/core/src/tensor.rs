//! Dense frame-component containers.
//!
//! All indices are 0-based here; the 1-based convention only appears at the
//! document and report boundary. Components are taken with respect to the
//! fixed global frame `e_1..e_n`.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Engine(format!("{what}: expected {want} entries, got {got}")));
    }
    Ok(())
}

/// Row-major nested-array view used to serialize dense tensors.
struct Nested<'a> {
    dim: usize,
    rank: usize,
    data: &'a [Scalar],
}

impl Serialize for Nested<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        if self.rank == 1 {
            for x in self.data {
                seq.serialize_element(x)?;
            }
        } else {
            let stride = self.data.len() / self.dim.max(1);
            for chunk in self.data.chunks(stride.max(1)) {
                seq.serialize_element(&Nested { dim: self.dim, rank: self.rank - 1, data: chunk })?;
            }
        }
        seq.end()
    }
}

macro_rules! dense_common {
    ($ty:ident, $rank:expr) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                Nested { dim: self.dim, rank: $rank, data: &self.data }.serialize(serializer)
            }
        }

        impl $ty {
            pub fn zeros(dim: usize) -> Self {
                $ty { dim, data: vec![Scalar::zero(); dim.pow($rank)] }
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            /// Components in row-major order.
            pub fn as_slice(&self) -> &[Scalar] {
                &self.data
            }

            pub fn is_zero(&self) -> bool {
                self.data.iter().all(Scalar::is_zero)
            }

            pub fn scale(&self, factor: &Scalar) -> Self {
                $ty { dim: self.dim, data: self.data.iter().map(|x| x * factor).collect() }
            }

            fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
                assert_eq!(self.dim, other.dim, "dimension mismatch");
                $ty { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
            }

            fn unflatten(&self, mut flat: usize) -> Vec<usize> {
                let mut idx = vec![0; $rank];
                for slot in idx.iter_mut().rev() {
                    *slot = flat % self.dim;
                    flat /= self.dim;
                }
                idx
            }

            /// First nonzero component in row-major order.
            pub fn first_nonzero(&self) -> Option<(Vec<usize>, &Scalar)> {
                self.data.iter().position(|x| !x.is_zero()).map(|p| (self.unflatten(p), &self.data[p]))
            }

            /// First index where `self` and `other` differ, with both values.
            pub fn first_difference<'a>(&'a self, other: &'a Self) -> Option<(Vec<usize>, &'a Scalar, &'a Scalar)> {
                assert_eq!(self.dim, other.dim, "dimension mismatch");
                self.data
                    .iter()
                    .zip(&other.data)
                    .position(|(a, b)| a != b)
                    .map(|p| (self.unflatten(p), &self.data[p], &other.data[p]))
            }
        }

        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                self.zip_with(rhs, |a, b| a + b)
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self.zip_with(rhs, |a, b| a - b)
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { dim: self.dim, data: self.data.iter().map(|x| -x).collect() }
            }
        }
    };
}

/// Components of a constant vector field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FrameVector(Vec<Scalar>);

/// Components of a constant 1-form on the frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OneForm(Vec<Scalar>);

macro_rules! vector_like {
    ($ty:ident) => {
        impl $ty {
            pub fn new(components: Vec<Scalar>) -> Self {
                $ty(components)
            }

            pub fn zeros(dim: usize) -> Self {
                $ty(vec![Scalar::zero(); dim])
            }

            /// The `i`-th coordinate vector (or dual covector).
            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = Self::zeros(dim);
                v.0[i] = Scalar::one();
                v
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn components(&self) -> &[Scalar] {
                &self.0
            }

            pub fn into_components(self) -> Vec<Scalar> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Scalar::is_zero)
            }

            pub fn scale(&self, factor: &Scalar) -> Self {
                $ty(self.0.iter().map(|x| x * factor).collect())
            }
        }

        impl Index<usize> for $ty {
            type Output = Scalar;
            fn index(&self, i: usize) -> &Scalar {
                &self.0[i]
            }
        }

        impl IndexMut<usize> for $ty {
            fn index_mut(&mut self, i: usize) -> &mut Scalar {
                &mut self.0[i]
            }
        }

        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
                $ty(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
                $ty(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(self.0.iter().map(|x| -x).collect())
            }
        }
    };
}

vector_like!(FrameVector);
vector_like!(OneForm);

impl OneForm {
    pub fn apply(&self, v: &FrameVector) -> Scalar {
        assert_eq!(self.dim(), v.dim(), "dimension mismatch");
        self.0.iter().zip(v.components()).map(|(a, b)| a * b).sum()
    }
}

/// A (0,2) tensor; `[(i, j)]` is its value on `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bilinear02 {
    dim: usize,
    data: Vec<Scalar>,
}

dense_common!(Bilinear02, 2);

impl Bilinear02 {
    pub fn identity(dim: usize) -> Self {
        let mut b = Self::zeros(dim);
        for i in 0..dim {
            b[(i, i)] = Scalar::one();
        }
        b
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut b = Self::zeros(entries.len());
        for (i, x) in entries.iter().enumerate() {
            b[(i, i)] = x.clone();
        }
        b
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            check_len("bilinear row", row.len(), dim)?;
            data.extend(row);
        }
        Ok(Bilinear02 { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Bilinear02 { dim, data }
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.dim.max(1)).map(<[Scalar]>::to_vec).collect()
    }

    /// `a ⊗ b`, i.e. `(X, Y) ↦ a(X) b(Y)`.
    pub fn outer(a: &OneForm, b: &OneForm) -> Self {
        let n = a.dim();
        Self::from_fn(n, |i, j| &a[i] * &b[j])
    }

    /// `B(u, v)`.
    pub fn eval(&self, u: &FrameVector, v: &FrameVector) -> Scalar {
        let n = self.dim;
        let mut acc = Scalar::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            let row: Scalar = (0..n).map(|j| &self[(i, j)] * &v[j]).sum();
            acc += &u[i] * &row;
        }
        acc
    }

    /// The 1-form `B(·, v)`.
    pub fn contract_right(&self, v: &FrameVector) -> OneForm {
        let n = self.dim;
        OneForm::new((0..n).map(|i| (0..n).map(|j| &self[(i, j)] * &v[j]).sum()).collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    /// First `(i, j)` with `B(e_i, e_j) != B(e_j, e_i)`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.dim).flat_map(|i| (i + 1..self.dim).map(move |j| (i, j))).find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    /// `Σ_{ab} inverse^{ab} B_ab`, the trace against an inverse metric.
    pub fn trace_with(&self, inverse: &Bilinear02) -> Scalar {
        self.data.iter().zip(&inverse.data).map(|(a, b)| a * b).sum()
    }
}

impl Index<(usize, usize)> for Bilinear02 {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Bilinear02 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.dim + j]
    }
}

/// A (1,1) tensor; `[(a, b)]` is the `a`-th component of the image of `e_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endomorphism11 {
    dim: usize,
    data: Vec<Scalar>,
}

dense_common!(Endomorphism11, 2);

impl Endomorphism11 {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            check_len("endomorphism row", row.len(), dim)?;
            data.extend(row);
        }
        Ok(Endomorphism11 { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                data.push(f(a, b));
            }
        }
        Endomorphism11 { dim, data }
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.dim.max(1)).map(<[Scalar]>::to_vec).collect()
    }

    /// The image of `e_b`.
    pub fn column(&self, b: usize) -> FrameVector {
        FrameVector::new((0..self.dim).map(|a| self[(a, b)].clone()).collect())
    }

    pub fn apply(&self, v: &FrameVector) -> FrameVector {
        let n = self.dim;
        FrameVector::new((0..n).map(|a| (0..n).map(|b| &self[(a, b)] * &v[b]).sum()).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism11) -> Self {
        let n = self.dim;
        Self::from_fn(n, |a, b| (0..n).map(|m| &self[(a, m)] * &other[(m, b)]).sum())
    }

    /// `v ⊗ ω`, i.e. `X ↦ ω(X) v`.
    pub fn vector_times_form(v: &FrameVector, form: &OneForm) -> Self {
        Self::from_fn(v.dim(), |a, b| &v[a] * &form[b])
    }
}

impl Index<(usize, usize)> for Endomorphism11 {
    type Output = Scalar;
    fn index(&self, (a, b): (usize, usize)) -> &Scalar {
        &self.data[a * self.dim + b]
    }
}

impl IndexMut<(usize, usize)> for Endomorphism11 {
    fn index_mut(&mut self, (a, b): (usize, usize)) -> &mut Scalar {
        &mut self.data[a * self.dim + b]
    }
}

/// A (0,3) tensor indexed `(direction, slot1, slot2)`, e.g. `(∇_{e_i} S)(e_j, e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor03 {
    dim: usize,
    data: Vec<Scalar>,
}

dense_common!(Tensor03, 3);

impl Tensor03 {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim.pow(3));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor03 { dim, data }
    }
}

impl Index<(usize, usize, usize)> for Tensor03 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor03 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        &mut self.data[(i * self.dim + j) * self.dim + k]
    }
}

/// A vector-valued bilinear map indexed `(direction, slot, component)`;
/// used for `(∇_{e_i} φ) e_j` and for connection coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor12 {
    dim: usize,
    data: Vec<Scalar>,
}

dense_common!(Tensor12, 3);

impl Tensor12 {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim.pow(3));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor12 { dim, data }
    }

    /// The vector stored at `(i, j)`.
    pub fn vector(&self, i: usize, j: usize) -> FrameVector {
        let start = (i * self.dim + j) * self.dim;
        FrameVector::new(self.data[start..start + self.dim].to_vec())
    }
}

impl Index<(usize, usize, usize)> for Tensor12 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor12 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        &mut self.data[(i * self.dim + j) * self.dim + k]
    }
}

/// A (1,3) tensor; `[(i, j, k, l)]` is the `e_l` component of `R(e_i, e_j) e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor13 {
    dim: usize,
    data: Vec<Scalar>,
}

dense_common!(Tensor13, 4);

impl Tensor13 {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        data.push(f(i, j, k, l));
                    }
                }
            }
        }
        Tensor13 { dim, data }
    }

    /// `R(e_i, e_j) e_k` as a vector.
    pub fn vector(&self, i: usize, j: usize, k: usize) -> FrameVector {
        let start = ((i * self.dim + j) * self.dim + k) * self.dim;
        FrameVector::new(self.data[start..start + self.dim].to_vec())
    }

    /// `R(X, Y) Z` for arbitrary constant vectors, by multilinearity.
    pub fn apply(&self, x: &FrameVector, y: &FrameVector, z: &FrameVector) -> FrameVector {
        let n = self.dim;
        let mut out = FrameVector::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    if z[k].is_zero() {
                        continue;
                    }
                    let coeff = &xy * &z[k];
                    for l in 0..n {
                        out[l] += &coeff * &self[(i, j, k, l)];
                    }
                }
            }
        }
        out
    }
}

impl Index<(usize, usize, usize, usize)> for Tensor13 {
    type Output = Scalar;
    fn index(&self, (i, j, k, l): (usize, usize, usize, usize)) -> &Scalar {
        &self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }
}

impl IndexMut<(usize, usize, usize, usize)> for Tensor13 {
    fn index_mut(&mut self, (i, j, k, l): (usize, usize, usize, usize)) -> &mut Scalar {
        &mut self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn bilinear_eval_and_outer() {
        let g = Bilinear02::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(3)]]).unwrap();
        let u = FrameVector::new(vec![s(1), s(-1)]);
        assert_eq!(g.eval(&u, &u), s(3));
        let eta = OneForm::new(vec![s(0), s(1)]);
        let eta_eta = Bilinear02::outer(&eta, &eta);
        assert_eq!(eta_eta, Bilinear02::diagonal(&[s(0), s(1)]));
        assert!(g.is_symmetric());
        assert_eq!(g.contract_right(&u), OneForm::new(vec![s(1), s(-2)]));
    }

    #[test]
    fn endomorphism_column_convention() {
        // φ e1 = -e2, φ e2 = e1
        let phi = Endomorphism11::from_rows(vec![vec![s(0), s(1)], vec![s(-1), s(0)]]).unwrap();
        assert_eq!(phi.column(0), FrameVector::new(vec![s(0), s(-1)]));
        assert_eq!(phi.compose(&phi), -&Endomorphism11::identity(2));
    }

    #[test]
    fn differences_report_indices() {
        let a = Tensor03::zeros(2);
        let mut b = a.clone();
        b[(1, 0, 1)] = s(5);
        let (idx, x, y) = a.first_difference(&b).unwrap();
        assert_eq!(idx, vec![1, 0, 1]);
        assert!(x.is_zero());
        assert_eq!(y, &s(5));
        assert_eq!(b.first_nonzero().unwrap().0, vec![1, 0, 1]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Bilinear02::from_rows(vec![vec![s(1)], vec![s(1), s(2)]]).is_err());
    }
}
