use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        Self { rows: r, cols: c, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row[dst] -= q * row[src], from column `from` on
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = &self.data[dst * self.cols + j] - q * s;
                self.data[dst * self.cols + j] = v;
            }
        }
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = &self.data[i * self.cols + dst] - q * s;
                self.data[i * self.cols + dst] = v;
            }
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Non-zero invariant factors d1 | d2 | ... of `m`, all positive.
///
/// Plain elimination, always pivoting on the entry of least magnitude.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(&p);
                    a.row_sub(i, t, &q, t);
                    clean &= a.get(i, t).is_zero();
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(&p);
                    a.col_sub(j, t, &q, t);
                    clean &= a.get(t, j).is_zero();
                }
            }
            if !clean {
                // a remainder is now smaller than the pivot; bring it up
                let col = smallest(&a, t..rows, t..t + 1).expect("pivot is nonzero");
                let row = smallest(&a, t..t + 1, t..cols).expect("pivot is nonzero");
                if a.get(col.0, col.1).magnitude() <= a.get(row.0, row.1).magnitude() {
                    a.swap_rows(t, col.0);
                } else {
                    a.swap_cols(t, row.1);
                }
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let one = -BigInt::one();
                    a.row_sub(t, i, &one, t);
                }
                None => break,
            }
        }
        out.push(a.get(t, t).abs());
        t += 1;
    }
    out
}

fn smallest(a: &IntegerMatrix, rs: std::ops::Range<usize>, cs: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rs {
        for j in cs.clone() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.magnitude() < a.get(bi, bj).magnitude()) {
                best = Some((i, j));
                if v.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}
