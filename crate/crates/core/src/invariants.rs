//! Four-qubit SLOCC invariants.
//!
//! The 16 amplitudes are split into four length-4 blocks
//! `A = (Υ0..Υ3)`, `B = (Υ4..Υ7)`, `C = (Υ8..Υ11)`, `D = (Υ12..Υ15)`, i.e. the
//! block label carries the two atom qubits and the position inside a block the
//! two cavity qubits. Raw amplitudes are contravariant components; indices are
//! lowered and raised with the symplectic-squared metric `g = J ⊗ J`, which is
//! its own inverse. The Levi-Civita symbol uses `ε_0123 = ε^0123 = +1`.

use num_complex::Complex64 as C64;

use crate::state::{FourQubitState, DIM};

pub type Vec4 = [C64; 4];

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// `g = J ⊗ J` with `J = [[0, 1], [−1, 0]]`.
pub const METRIC: [[f64; 4]; 4] = [
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
];

/// The four amplitude blocks of a state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockDecomposition {
    pub a: Vec4,
    pub b: Vec4,
    pub c: Vec4,
    pub d: Vec4,
}

impl BlockDecomposition {
    pub fn as_array(&self) -> [Vec4; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Concatenation `A ‖ B ‖ C ‖ D`.
    pub fn concat(&self) -> [C64; DIM] {
        let mut out = [ZERO; DIM];
        for (i, blk) in self.as_array().iter().enumerate() {
            out[4 * i..4 * i + 4].copy_from_slice(blk);
        }
        out
    }
}

pub fn blocks(state: &FourQubitState) -> BlockDecomposition {
    let amps = state.amps();
    let take = |i: usize| -> Vec4 {
        [
            amps[4 * i],
            amps[4 * i + 1],
            amps[4 * i + 2],
            amps[4 * i + 3],
        ]
    };
    BlockDecomposition {
        a: take(0),
        b: take(1),
        c: take(2),
        d: take(3),
    }
}

/// `v_α = g_αβ v^β`. Since `g² = 1` the same map also raises.
pub fn lower(v: &Vec4) -> Vec4 {
    let mut out = [ZERO; 4];
    for (alpha, o) in out.iter_mut().enumerate() {
        for beta in 0..4 {
            if METRIC[alpha][beta] != 0.0 {
                *o += v[beta] * METRIC[alpha][beta];
            }
        }
    }
    out
}

pub fn raise(v: &Vec4) -> Vec4 {
    lower(v)
}

/// `g(u, v) = u0 v3 − u1 v2 − u2 v1 + u3 v0`.
pub fn dot_g(u: &Vec4, v: &Vec4) -> C64 {
    u[0] * v[3] - u[1] * v[2] - u[2] * v[1] + u[3] * v[0]
}

/// Levi-Civita symbol on four indices in `0..4`.
pub fn levi_civita(i: usize, j: usize, k: usize, l: usize) -> i8 {
    let p = [i, j, k, l];
    for x in 0..4 {
        for y in (x + 1)..4 {
            if p[x] == p[y] {
                return 0;
            }
        }
    }
    let mut inversions = 0;
    for x in 0..4 {
        for y in (x + 1)..4 {
            if p[x] > p[y] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All 24 permutations of `0..4` with their signs.
fn permutations() -> impl Iterator<Item = ([usize; 4], f64)> {
    (0..4).flat_map(|i| {
        (0..4).flat_map(move |j| {
            (0..4).flat_map(move |k| {
                (0..4).filter_map(move |l| {
                    let s = levi_civita(i, j, k, l);
                    (s != 0).then_some(([i, j, k, l], s as f64))
                })
            })
        })
    })
}

/// `I1 = ½(A·D − B·C)`.
pub fn invariant_i1(state: &FourQubitState) -> C64 {
    let bl = blocks(state);
    0.5 * (dot_g(&bl.a, &bl.d) - dot_g(&bl.b, &bl.c))
}

/// Antisymmetric matrix `(u ∧ v)_αβ = u_α v_β − u_β v_α`.
fn wedge(u: &Vec4, v: &Vec4) -> [[C64; 4]; 4] {
    let mut w = [[ZERO; 4]; 4];
    for (alpha, row) in w.iter_mut().enumerate() {
        for (beta, x) in row.iter_mut().enumerate() {
            *x = u[alpha] * v[beta] - u[beta] * v[alpha];
        }
    }
    w
}

/// `(u ∧ v)·(x ∧ y)`: the first bivector is taken with lowered indices,
/// the second with raised ones, and both index pairs are contracted.
fn wedge_dot(u: &Vec4, v: &Vec4, x: &Vec4, y: &Vec4) -> C64 {
    let lo = wedge(&lower(u), &lower(v));
    let hi = wedge(x, y);
    lo.iter()
        .zip(hi.iter())
        .flat_map(|(r, s)| r.iter().zip(s.iter()))
        .map(|(p, q)| p * q)
        .sum()
}

/// `I2 = (1/6)[(A∧B)·(C∧D) + (A∧C)·(B∧D) − ½(A∧D)² − ½(B∧C)²]`.
pub fn invariant_i2_wedge(state: &FourQubitState) -> C64 {
    let BlockDecomposition { a, b, c, d } = blocks(state);
    (wedge_dot(&a, &b, &c, &d) + wedge_dot(&a, &c, &b, &d)
        - 0.5 * wedge_dot(&a, &d, &a, &d)
        - 0.5 * wedge_dot(&b, &c, &b, &c))
        / 6.0
}

/// `I2` from the Plücker coordinates `P_μναβ = Υ_μα Υ_νβ − Υ_μβ Υ_να` of the
/// 4×4 amplitude matrix (row = atom pair, column = cavity pair).
///
/// Each coordinate is labelled by an ordered row pair `μ < ν` and an ordered
/// column pair `α < β`; the contraction `(1/6) P^μναβ P_μναβ` runs over those
/// 36 coordinates with every index raised through `g`.
pub fn invariant_i2_plucker(state: &FourQubitState) -> C64 {
    let m = |row: usize, col: usize| state[4 * row + col];
    let p =
        |mu: usize, nu: usize, al: usize, be: usize| m(mu, al) * m(nu, be) - m(mu, be) * m(nu, al);
    // g has exactly one nonzero entry per row: partner index 3 − i, sign s_i.
    let sign = |i: usize| METRIC[i][3 - i];
    let mut acc = ZERO;
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            for al in 0..4 {
                for be in (al + 1)..4 {
                    let raised = p(3 - mu, 3 - nu, 3 - al, 3 - be)
                        * (sign(mu) * sign(nu) * sign(al) * sign(be));
                    acc += raised * p(mu, nu, al, be);
                }
            }
        }
    }
    acc / 6.0
}

/// Covectors built from triple ε-contractions of the blocks:
/// `𝔞_α = −ε_αβγδ B^β C^γ D^δ`, `𝔟_β = ε_αβγδ A^α C^γ D^δ`,
/// `𝔠_γ = ε_αβγδ A^α B^β D^δ`, `𝔡_δ = −ε_αβγδ A^α B^β C^γ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovectorQuad {
    pub a: Vec4,
    pub b: Vec4,
    pub c: Vec4,
    pub d: Vec4,
}

pub fn covectors(bl: &BlockDecomposition) -> CovectorQuad {
    let BlockDecomposition { a, b, c, d } = *bl;
    let mut out = CovectorQuad {
        a: [ZERO; 4],
        b: [ZERO; 4],
        c: [ZERO; 4],
        d: [ZERO; 4],
    };
    for ([i, j, k, l], s) in permutations() {
        out.a[i] -= s * b[j] * c[k] * d[l];
        out.b[j] += s * a[i] * c[k] * d[l];
        out.c[k] += s * a[i] * b[j] * d[l];
        out.d[l] -= s * a[i] * b[j] * c[k];
    }
    out
}

/// `I3 = ½(𝔞·𝔡 − 𝔟·𝔠)`, pairing covectors through the inverse metric.
pub fn invariant_i3(state: &FourQubitState) -> C64 {
    let q = covectors(&blocks(state));
    // g⁻¹ = g, so the covector pairing has the same form as dot_g.
    0.5 * (dot_g(&q.a, &q.d) - dot_g(&q.b, &q.c))
}

/// `I4 = ε^αβγδ A_α B_β C_γ D_δ` over the lowered blocks.
pub fn invariant_i4(state: &FourQubitState) -> C64 {
    let bl = blocks(state);
    i4_from_blocks(&bl.as_array())
}

/// ε-contraction of four lowered vectors given in contravariant form.
pub fn i4_from_blocks(blks: &[Vec4; 4]) -> C64 {
    let [a, b, c, d] = blks.map(|v| lower(&v));
    permutations()
        .map(|([i, j, k, l], s)| s * a[i] * b[j] * c[k] * d[l])
        .sum()
}

/// The auxiliary polynomials `S`, `T` and the four-determinant `D4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourDeterminant {
    pub s: C64,
    pub t: C64,
    pub d4: C64,
}

/// `S = (I4² − I2²) + 4(I2² − I1 I3)`, `T = (I4² − I2²)(I1² − I2) + (I3 − I1 I2)²`,
/// `D4 = (S³ − 27 T²)/256`.
pub fn four_determinant(i1: C64, i2: C64, i3: C64, i4: C64) -> FourDeterminant {
    let s = (i4 * i4 - i2 * i2) + 4.0 * (i2 * i2 - i1 * i3);
    let t = (i4 * i4 - i2 * i2) * (i1 * i1 - i2) + (i3 - i1 * i2).powi(2);
    let d4 = (s * s * s - 27.0 * t * t) / 256.0;
    FourDeterminant { s, t, d4 }
}

/// Absolute tolerance for comparing `D4` against zero or another value.
///
/// `S³` and `27T²` cancel, so the residual scales with `|S|³`.
pub fn d4_tolerance(s: C64) -> f64 {
    1e-10 * s.norm().powi(3).max(1.0)
}

/// Four-tangle `τ4 = |⟨Ψ|Ψ̃⟩|²` with `|Ψ̃⟩ = σy⊗⁴|Ψ*⟩`.
///
/// `⟨Ψ̃|` pairs each `Υ_k` with `Υ_{15−k}` through the product of four
/// `ε_{r s}` factors, whose sign is `(−1)^{popcount k}`.
pub fn four_tangle(state: &FourQubitState) -> f64 {
    let overlap: C64 = (0..DIM)
        .map(|k| {
            let sign = if k.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            sign * state[k] * state[15 - k]
        })
        .sum();
    overlap.norm_sqr()
}

/// Every invariant of one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantSet {
    pub i1: C64,
    pub i2: C64,
    pub i3: C64,
    pub i4: C64,
    pub s: C64,
    pub t: C64,
    pub d4: C64,
    pub tau4: f64,
}

impl InvariantSet {
    pub fn of(state: &FourQubitState) -> Self {
        let i1 = invariant_i1(state);
        let i2 = invariant_i2_wedge(state);
        let i3 = invariant_i3(state);
        let i4 = invariant_i4(state);
        Self::from_parts(i1, i2, i3, i4, four_tangle(state))
    }

    /// Assemble a set from the four invariants and τ4; `S`, `T`, `D4` are derived.
    pub fn from_parts(i1: C64, i2: C64, i3: C64, i4: C64, tau4: f64) -> Self {
        let FourDeterminant { s, t, d4 } = four_determinant(i1, i2, i3, i4);
        Self {
            i1,
            i2,
            i3,
            i4,
            s,
            t,
            d4,
            tau4,
        }
    }

    /// Largest absolute difference over I1..I4, D4 and τ4.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            (self.i1 - other.i1).norm(),
            (self.i2 - other.i2).norm(),
            (self.i3 - other.i3).norm(),
            (self.i4 - other.i4).norm(),
            (self.d4 - other.d4).norm(),
            (self.tau4 - other.tau4).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    /// Largest modulus over I1..I4, D4 and τ4.
    pub fn max_abs(&self) -> f64 {
        [
            self.i1.norm(),
            self.i2.norm(),
            self.i3.norm(),
            self.i4.norm(),
            self.d4.norm(),
            self.tau4,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}
