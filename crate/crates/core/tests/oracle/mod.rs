//! Brute-force evaluator, independent of the engine's tensor code.
//!
//! Plain `BigRational` arrays, definitional formulas, direct summation over
//! every index tuple:
//! - Koszul formula lowered, then `G x = rhs` solved by its own elimination;
//! - `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]}Z` on basis fields;
//! - `S(Y,Z) = tr(X ↦ R(X,Y)Z)`, `r = tr(G⁻¹S)`;
//! - `(∇_X S)(Y,Z) = −S(∇_X Y, Z) − S(Y, ∇_X Z)`.
#![allow(dead_code, clippy::needless_range_loop)]

use kenmotsu_core::FrameManifoldSpec;
use num_rational::BigRational as Q;
use num_traits::{One, Zero};

pub type Vec1 = Vec<Q>;

pub struct Oracle {
    pub n: usize,
    pub g: Vec<Vec1>,
    pub c: Vec<Vec<Vec1>>,
    /// `gamma[i][j]` is `∇_{e_i} e_j`.
    pub gamma: Vec<Vec<Vec1>>,
    /// `riemann[i][j][k]` is `R(e_i,e_j)e_k`.
    pub riemann: Vec<Vec<Vec<Vec1>>>,
    pub ricci: Vec<Vec1>,
    pub scalar: Q,
    pub nabla_s: Vec<Vec<Vec1>>,
}

fn two() -> Q {
    Q::from_integer(2.into())
}

/// Solves `a x = b` by Gauss–Jordan on a copy; `a` must be invertible.
pub fn solve(a: &[Vec1], b: &[Q]) -> Vec1 {
    let n = a.len();
    let mut m: Vec<Vec1> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible");
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..=n {
                    let d = &f * &m[col][k];
                    m[r][k] = &m[r][k] - d;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n].clone()).collect()
}

impl Oracle {
    pub fn new(spec: &FrameManifoldSpec) -> Self {
        let n = spec.dim();
        let g: Vec<Vec1> =
            (0..n).map(|a| (0..n).map(|b| spec.metric()[(a, b)].as_rational().clone()).collect()).collect();
        let c: Vec<Vec<Vec1>> = (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).map(|k| spec.constants().get(i, j, k).as_rational().clone()).collect()).collect()
            })
            .collect();
        let mut o = Oracle {
            n,
            g,
            c,
            gamma: Vec::new(),
            riemann: Vec::new(),
            ricci: Vec::new(),
            scalar: Q::zero(),
            nabla_s: Vec::new(),
        };
        o.gamma = (0..n).map(|i| (0..n).map(|j| o.connection(i, j)).collect()).collect();
        o.riemann = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| o.curvature(i, j, k)).collect()).collect()).collect();
        o.ricci =
            (0..n).map(|j| (0..n).map(|k| (0..n).map(|i| o.riemann[i][j][k][i].clone()).sum()).collect()).collect();
        // r = tr(G⁻¹ S), one column at a time
        o.scalar = (0..n)
            .map(|col| {
                let s_col: Vec1 = (0..n).map(|r| o.ricci[r][col].clone()).collect();
                solve(&o.g, &s_col)[col].clone()
            })
            .sum();
        o.nabla_s = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                let a = o.bilinear(&o.ricci, &o.gamma[i][j], &o.basis(k));
                                let b = o.bilinear(&o.ricci, &o.basis(j), &o.gamma[i][k]);
                                -(a + b)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        o
    }

    pub fn basis(&self, i: usize) -> Vec1 {
        (0..self.n).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
    }

    pub fn bilinear(&self, m: &[Vec1], u: &[Q], v: &[Q]) -> Q {
        let mut acc = Q::zero();
        for a in 0..self.n {
            for b in 0..self.n {
                acc += &u[a] * &m[a][b] * &v[b];
            }
        }
        acc
    }

    /// `[u, v]` for constant-coefficient fields.
    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec1 {
        let n = self.n;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[k] += &u[i] * &v[j] * &self.c[i][j][k];
                }
            }
        }
        out
    }

    fn connection(&self, i: usize, j: usize) -> Vec1 {
        let ei = self.basis(i);
        let ej = self.basis(j);
        let rhs: Vec1 = (0..self.n)
            .map(|k| {
                let ek = self.basis(k);
                let t1 = self.bilinear(&self.g, &ei, &self.bracket(&ej, &ek));
                let t2 = self.bilinear(&self.g, &ej, &self.bracket(&ei, &ek));
                let t3 = self.bilinear(&self.g, &ek, &self.bracket(&ei, &ej));
                (-t1 - t2 + t3) / two()
            })
            .collect();
        solve(&self.g, &rhs)
    }

    /// `∇_u v` for constant-coefficient fields, from the basis table.
    pub fn nabla(&self, u: &[Q], v: &[Q]) -> Vec1 {
        let n = self.n;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let w = &u[i] * &v[j];
                if w.is_zero() {
                    continue;
                }
                for k in 0..n {
                    out[k] += &w * &self.gamma[i][j][k];
                }
            }
        }
        out
    }

    fn curvature(&self, i: usize, j: usize, k: usize) -> Vec1 {
        let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
        let a = self.nabla(&ei, &self.nabla(&ej, &ek));
        let b = self.nabla(&ej, &self.nabla(&ei, &ek));
        let c = self.nabla(&self.bracket(&ei, &ej), &ek);
        (0..self.n).map(|l| &a[l] - &b[l] - &c[l]).collect()
    }
}
