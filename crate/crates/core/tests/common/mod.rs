//! Brute-force reference computations shared by the integration tests.
//! None of these reuse the library's contraction code.

#![allow(dead_code)]

use djc::{FourQubitState, Mat2, C64};

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `|a − b| ≤ tol · max(|a|, |b|)`; two exact zeros compare equal.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

pub fn rel_close_c(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm())
}

fn eps2(r: usize, s: usize) -> f64 {
    match (r, s) {
        (0, 1) => 1.0,
        (1, 0) => -1.0,
        _ => 0.0,
    }
}

/// `Π_i ε_{r_i s_i}` over the four qubit slots of two basis indices.
fn eps_product(r: usize, s: usize) -> f64 {
    (0..4)
        .map(|bit| eps2((r >> bit) & 1, (s >> bit) & 1))
        .product()
}

/// Four-tangle from the full eightfold sum
/// `|Σ Υ_r Υ_s Υ_u Υ_v Π ε_{r_i s_i} Π ε_{u_i v_i}|` over all 16⁴ index tuples.
pub fn tangle_eightfold(state: &FourQubitState) -> f64 {
    let y = state.amps();
    let mut acc = c(0.0, 0.0);
    for r in 0..16 {
        for s in 0..16 {
            let e1 = eps_product(r, s);
            if e1 == 0.0 {
                continue;
            }
            let rs = y[r] * y[s] * e1;
            for u in 0..16 {
                for v in 0..16 {
                    let e2 = eps_product(u, v);
                    if e2 != 0.0 {
                        acc += rs * y[u] * y[v] * e2;
                    }
                }
            }
        }
    }
    acc.norm()
}

/// Determinant by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn det(mut m: Vec<Vec<C64>>) -> C64 {
    let n = m.len();
    let mut d = c(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return c(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            d = -d;
        }
        d *= m[col][col];
        for row in (col + 1)..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    d
}

/// 3×3 determinant by the rule of Sarrus.
pub fn det3(m: [[C64; 3]; 3]) -> C64 {
    m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1]
        - m[0][2] * m[1][1] * m[2][0]
        - m[0][0] * m[1][2] * m[2][1]
        - m[0][1] * m[1][0] * m[2][2]
}

/// `Σ_{βγδ} ε_{αβγδ} u^β v^γ w^δ` as `(−1)^α` times the 3×3 minor of the
/// rows `u, v, w` with column `α` removed.
pub fn triple_minor(alpha: usize, u: &[C64; 4], v: &[C64; 4], w: &[C64; 4]) -> C64 {
    let cols: Vec<usize> = (0..4).filter(|&k| k != alpha).collect();
    let row = |x: &[C64; 4]| [x[cols[0]], x[cols[1]], x[cols[2]]];
    let sign = if alpha.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * det3([row(u), row(v), row(w)])
}

/// Lowering with the explicit matrix `J ⊗ J`.
pub fn lower_kron(v: &[C64; 4]) -> [C64; 4] {
    let j = [[0.0, 1.0], [-1.0, 0.0]];
    let mut out = [c(0.0, 0.0); 4];
    for (a, o) in out.iter_mut().enumerate() {
        for b in 0..4 {
            let g = j[a >> 1][b >> 1] * j[a & 1][b & 1];
            *o += v[b] * g;
        }
    }
    out
}

/// Dense 16×16 Kronecker product `U4 ⊗ U3 ⊗ U2 ⊗ U1`.
pub fn kron4(f: &[Mat2; 4]) -> Vec<Vec<C64>> {
    let mut out = vec![vec![c(0.0, 0.0); 16]; 16];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let mut p = c(1.0, 0.0);
            for (slot, m) in f.iter().enumerate() {
                let bit = 3 - slot;
                p *= m.0[(i >> bit) & 1][(j >> bit) & 1];
            }
            *x = p;
        }
    }
    out
}

pub fn mat_vec(m: &[Vec<C64>], v: &[C64; 16]) -> [C64; 16] {
    let mut out = [c(0.0, 0.0); 16];
    for (i, o) in out.iter_mut().enumerate() {
        *o = m[i].iter().zip(v.iter()).map(|(a, b)| a * b).sum();
    }
    out
}

/// Haar-ish random SL(2,ℂ) element: a complex Gaussian matrix rescaled to det 1.
pub fn random_sl2(seed: u64) -> Mat2 {
    let a = djc::random_state(seed);
    let m = Mat2([[a[0] * 4.0, a[1] * 4.0], [a[2] * 4.0, a[3] * 4.0]]);
    let s = m.det().sqrt();
    Mat2([
        [m.0[0][0] / s, m.0[0][1] / s],
        [m.0[1][0] / s, m.0[1][1] / s],
    ])
}

/// Random normalized state supported on the given indices.
pub fn random_on_support(seed: u64, support: &[usize]) -> FourQubitState {
    let r = djc::random_state(seed);
    let mut amps = [c(0.0, 0.0); 16];
    for (i, &k) in support.iter().enumerate() {
        amps[k] = r[i];
    }
    FourQubitState::new(amps, true).unwrap()
}
