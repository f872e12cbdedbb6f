//! Abelianization through the exponent-sum matrix and its Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::FinitePresentation;

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flatten().map(|&x| x.into()).collect() }
    }

    /// Shape with an explicit column count, so `0 × n` matrices are expressible.
    pub fn with_shape(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| i64::try_from(x).ok()).collect()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| format!("[{}]", self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Entry `(i, j)` is the exponent sum of generator `j` in relator `i`.
pub fn exponent_matrix(p: &FinitePresentation) -> IntMatrix {
    let cols = p.generator_count();
    let data = p.relators().iter().flat_map(|r| (0..cols).map(move |g| BigInt::from(r.exponent_sum(g)))).collect();
    IntMatrix::with_shape(p.relators().len(), cols, data)
}

/// `d = u · a · v` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Diagonal entries, all nonnegative, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }
}

fn smallest_nonzero<I: Iterator<Item = (usize, usize)>>(a: &IntMatrix, cells: I) -> Option<(usize, usize)> {
    cells.filter(|&c| !a[c].is_zero()).min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()))
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&d, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Euclid on column t and row t until both are clear
            let mut clear = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clear &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clear &= d[(t, j)].is_zero();
            }
            if !clear {
                let cells = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = smallest_nonzero(&d, cells).expect("pivot is nonzero");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // divisibility: fold an offending row into row t and go again
            let pivot = d[(t, t)].clone();
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { u, d, v }
}

/// `Z^free_rank ⊕ Z/torsion[0] ⊕ ...`, torsion in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Abelianization {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".into());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelianization_invariants(p: &FinitePresentation) -> Abelianization {
    let smith = smith_normal_form(&exponent_matrix(p));
    let diag = smith.invariant_factors();
    let nonzero = diag.iter().filter(|x| !x.is_zero()).count();
    Abelianization {
        free_rank: p.generator_count() - nonzero,
        torsion: diag.into_iter().filter(|x| *x > BigInt::one()).collect(),
    }
}

/// True iff the abelianization is trivial.
pub fn is_perfect(p: &FinitePresentation) -> bool {
    abelianization_invariants(p).is_trivial()
}
