//! The operator `r` on `V ⊗ V` attached to a σ-family and the commutator
//! `[R12, R23]` on `V ⊗ V ⊗ V`.
//!
//! The basis of `V` is `y_1..y_n, x_1..x_m` (indices `0..n` then
//! `n..n+m`); tensor words are indexed in base `g = m + n`.

use crate::rit::SigmaFamily;

/// Dense integer matrix acting on words of length `order`; entry
/// `(row, col)` is the coefficient of basis word `row` in the image of
/// basis word `col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    g: usize,
    order: usize,
    entries: Vec<i64>,
}

impl TensorOperator {
    pub fn zero(g: usize, order: usize) -> Self {
        let size = g.pow(order as u32);
        TensorOperator { g, order, entries: vec![0; size * size] }
    }

    pub fn identity(g: usize, order: usize) -> Self {
        let mut op = Self::zero(g, order);
        let size = op.size();
        for i in 0..size {
            op.entries[i * size + i] = 1;
        }
        op
    }

    pub fn dimension(&self) -> usize {
        self.g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of basis words, `g^order`.
    pub fn size(&self) -> usize {
        self.g.pow(self.order as u32)
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.size() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        let size = self.size();
        self.entries[row * size + col] = v;
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.size()).map(|r| self.get(r, col)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &TensorOperator) -> TensorOperator {
        assert_eq!((self.g, self.order), (other.g, other.order));
        let size = self.size();
        let mut out = Self::zero(self.g, self.order);
        for i in 0..size {
            for k in 0..size {
                let a = self.entries[i * size + k];
                if a == 0 {
                    continue;
                }
                for j in 0..size {
                    out.entries[i * size + j] += a * other.entries[k * size + j];
                }
            }
        }
        out
    }
}

/// `r(x_i ⊗ y_j) = y_j ⊗ x_i + |y_{σ_i(j)} ⊗ y_j|`, unequal `x ⊗ x` and
/// `y ⊗ y` pairs are put in ascending order, everything else is fixed.
pub fn build_r(fam: &SigmaFamily) -> TensorOperator {
    let (m, n) = (fam.m(), fam.n());
    let g = m + n;
    let mut r = TensorOperator::zero(g, 2);
    let idx = |a: usize, b: usize| a * g + b;
    for a in 0..g {
        for b in 0..g {
            let col = idx(a, b);
            let a_is_x = a >= n;
            let b_is_x = b >= n;
            if a_is_x && !b_is_x {
                let f = fam.apply(a - n, b as u32) as usize;
                r.set(idx(b, a), col, 1);
                let tail = idx(f.min(b), f.max(b));
                r.set(tail, col, r.get(tail, col) + 1);
            } else if a_is_x == b_is_x && a > b {
                r.set(idx(b, a), col, 1);
            } else {
                r.set(col, col, 1);
            }
        }
    }
    r
}

/// Applies `r` to tensor slots `(slot, slot + 1)` of a vector on `V^⊗3`.
fn apply_slot(r: &TensorOperator, slot: usize, v: &[i64]) -> Vec<i64> {
    let g = r.g;
    let mut out = vec![0i64; v.len()];
    for (w, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let (a, b, d) = (w / (g * g), (w / g) % g, w % g);
        let (pair, rebuild): (usize, Box<dyn Fn(usize) -> usize>) = if slot == 0 {
            (a * g + b, Box::new(move |p| p * g + d))
        } else {
            (b * g + d, Box::new(move |p| a * g * g + p))
        };
        for p in 0..g * g {
            let e = r.get(p, pair);
            if e != 0 {
                out[rebuild(p)] += c * e;
            }
        }
    }
    out
}

/// `R12 R23 - R23 R12` with `R12 = r1 r2 r1`, `R23 = r2 r1 r2`,
/// `r1 = r ⊗ 1`, `r2 = 1 ⊗ r`; built column by column.
pub fn gybe_commutator(fam: &SigmaFamily) -> (TensorOperator, bool) {
    let r = build_r(fam);
    let g = r.g;
    let mut out = TensorOperator::zero(g, 3);
    let r12 = |v: &[i64]| apply_slot(&r, 0, &apply_slot(&r, 1, &apply_slot(&r, 0, v)));
    let r23 = |v: &[i64]| apply_slot(&r, 1, &apply_slot(&r, 0, &apply_slot(&r, 1, v)));
    let size = g * g * g;
    for col in 0..size {
        let mut e = vec![0i64; size];
        e[col] = 1;
        let lhs = r12(&r23(&e));
        let rhs = r23(&r12(&e));
        for row in 0..size {
            out.set(row, col, lhs[row] - rhs[row]);
        }
    }
    let zero = out.is_zero();
    (out, zero)
}
