//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U · M · V = D` with `D` diagonal, `d_i | d_{i+1}`, `d_i >= 0`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    /// The `min(rows, cols)` diagonal entries of `D`.
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    /// Inverse of `u`; its first `rank` columns span the saturation of the
    /// column lattice of `M`.
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }

    pub fn d_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.u.rows(), self.v.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }

    /// Checks `U M V = D`, the divisibility chain, and `U U^-1 = V V^-1 = I`.
    pub fn verify(&self, m: &IntMatrix) -> Result<(), String> {
        if self.u.mul(m).mul(&self.v) != self.d_matrix() {
            return Err("U·M·V differs from D".into());
        }
        if self.diagonal.iter().any(|d| d.is_negative()) {
            return Err("negative diagonal entry".into());
        }
        for w in self.diagonal.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            if !ok {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        if self.u.mul(&self.u_inv) != IntMatrix::identity(self.u.rows()) {
            return Err("U is not unimodular".into());
        }
        if self.v.mul(&self.v_inv) != IntMatrix::identity(self.v.rows()) {
            return Err("V is not unimodular".into());
        }
        Ok(())
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.cols() {
                let t = m.get(j, k) * c;
                if !t.is_zero() {
                    *m.get_mut(i, k) += t;
                }
            }
        }
        // U^-1 <- U^-1 E^-1: col_j -= c * col_i
        for k in 0..self.u_inv.rows() {
            let t = self.u_inv.get(k, i) * c;
            if !t.is_zero() {
                *self.u_inv.get_mut(k, j) -= t;
            }
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for k in 0..m.rows() {
                let t = m.get(k, j) * c;
                if !t.is_zero() {
                    *m.get_mut(k, i) += t;
                }
            }
        }
        // V^-1 <- E^-1 V^-1: row_j -= c * row_i
        for k in 0..self.v_inv.cols() {
            let t = self.v_inv.get(i, k) * c;
            if !t.is_zero() {
                *self.v_inv.get_mut(j, k) -= t;
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.cols() {
                let t = m.get(i, k).clone();
                let s = m.get(j, k).clone();
                m.set(i, k, s);
                m.set(j, k, t);
            }
        }
        let m = &mut self.u_inv;
        for k in 0..m.rows() {
            let t = m.get(k, i).clone();
            let s = m.get(k, j).clone();
            m.set(k, i, s);
            m.set(k, j, t);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for k in 0..m.rows() {
                let t = m.get(k, i).clone();
                let s = m.get(k, j).clone();
                m.set(k, i, s);
                m.set(k, j, t);
            }
        }
        let m = &mut self.v_inv;
        for k in 0..m.cols() {
            let t = m.get(i, k).clone();
            let s = m.get(j, k).clone();
            m.set(i, k, s);
            m.set(j, k, t);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.cols() {
                let t = -m.get(i, k).clone();
                m.set(i, k, t);
            }
        }
        for k in 0..self.u_inv.rows() {
            let t = -self.u_inv.get(k, i).clone();
            self.u_inv.set(k, i, t);
        }
    }
}

/// Deterministic pivoting: the smallest nonzero absolute value in the
/// trailing block, first in row-major order on ties.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let size = rows.min(cols);
    'outer: for t in 0..size {
        loop {
            let mut pivot: Option<(usize, usize, BigInt)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = w.a.get(i, j);
                    if !x.is_zero() && pivot.as_ref().is_none_or(|p| x.abs() < p.2) {
                        pivot = Some((i, j, x.abs()));
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else { break 'outer };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(w.a.get(i, t).div_floor(w.a.get(t, t)));
                w.add_row(i, t, &q);
                clean &= w.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(w.a.get(t, j).div_floor(w.a.get(t, t)));
                w.add_col(j, t, &q);
                clean &= w.a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let pivot_value = w.a.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(w.a.get(i, j) % &pivot_value).is_zero()));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
    }
    let diagonal = (0..size).map(|i| w.a.get(i, i).clone()).collect();
    let result = SnfResult { diagonal, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv };
    #[cfg(debug_assertions)]
    if let Err(e) = result.verify(m) {
        panic!("Smith normal form self-check failed: {e}");
    }
    result
}
