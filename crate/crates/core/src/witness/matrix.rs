//! Square integer matrices and division-free characteristic polynomials.

use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = IntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * n + j] = x.into();
            }
        }
        m
    }

    /// Companion matrix of a monic polynomial: ones below the diagonal and
    /// the negated low coefficients in the last column.
    pub fn companion(p: &IntPolynomial) -> Self {
        assert!(p.is_monic(), "companion of a non-monic polynomial");
        let k = p.degree().unwrap();
        let mut m = IntMatrix::zeros(k);
        for i in 1..k {
            m.set(i, i - 1, BigInt::one());
        }
        for i in 0..k {
            m.set(i, k - 1, -p.coeff(i));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.n + j] = x;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Principal submatrix on `indices`.
    pub fn principal(&self, indices: &[usize]) -> IntMatrix {
        let k = indices.len();
        let mut m = IntMatrix::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.data[a * k + b] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Index classes of the finest block-diagonal decomposition (under a
    /// simultaneous permutation of rows and columns), ordered by least index.
    pub fn diagonal_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.get(i, j).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r]].push(i);
        }
        blocks
    }

    /// `det(X·I - M)` by Berkowitz's algorithm (no divisions).
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        // Coefficients in descending degree.
        let mut v: Vec<BigInt> = vec![BigInt::one()];
        for r in 0..n {
            let a = self.get(r, r);
            let mut t: Vec<BigInt> = Vec::with_capacity(r + 2);
            t.push(BigInt::one());
            t.push(-a);
            // -R A_r^k C for k = 0..r-1
            let mut w: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let rw: BigInt = (0..r).map(|j| self.get(r, j) * &w[j]).sum();
                t.push(-rw);
                if k + 1 < r {
                    w = (0..r)
                        .map(|i| (0..r).map(|j| self.get(i, j) * &w[j]).sum())
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    *slot += &t[i - j] * vj;
                }
            }
            v = next;
        }
        v.reverse();
        IntPolynomial::new(v)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows()
                .map(|row| serde_json::Value::Array(row.iter().map(super::poly::big_to_json).collect()))
                .collect(),
        )
    }
}
