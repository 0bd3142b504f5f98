use super::FieldSpec;

/// Dense row-major matrix over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Self, field: FieldSpec) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let v = field.add(out.get(r, c), field.mul(a, b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination, scanning columns for a pivot.
    pub fn rank(&self, field: FieldSpec) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for k in c..cols {
                    m.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = field.inv(m[rank * cols + c]);
            for k in c..cols {
                m[rank * cols + k] = field.mul(m[rank * cols + k], inv);
            }
            for r in rank + 1..rows {
                let factor = m[r * cols + c];
                if factor == 0 {
                    continue;
                }
                for k in c..cols {
                    let v = field.sub(m[r * cols + k], field.mul(factor, m[rank * cols + k]));
                    m[r * cols + k] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel `{v : M v = 0}`, from the reduced row
    /// echelon form.
    pub fn kernel_basis(&self, field: FieldSpec) -> Vec<Vec<u32>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut pivots: Vec<usize> = Vec::new();
        for c in 0..cols {
            let r0 = pivots.len();
            if r0 == rows {
                break;
            }
            let Some(pr) = (r0..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                m.swap(pr * cols + k, r0 * cols + k);
            }
            let inv = field.inv(m[r0 * cols + c]);
            for k in 0..cols {
                m[r0 * cols + k] = field.mul(m[r0 * cols + k], inv);
            }
            for r in (0..rows).filter(|&r| r != r0) {
                let factor = m[r * cols + c];
                if factor != 0 {
                    for k in 0..cols {
                        m[r * cols + k] =
                            field.sub(m[r * cols + k], field.mul(factor, m[r0 * cols + k]));
                    }
                }
            }
            pivots.push(c);
        }
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u32; cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(m[r * cols + free]);
                }
                v
            })
            .collect()
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[u32], field: FieldSpec) -> Vec<u32> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(0, |acc, c| field.add(acc, field.mul(self.get(r, c), v[c])))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[u32]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows.first().map_or(0, |r| r.len()));
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let m = from_rows(&[&[1, 1], &[1, 3]]);
        assert_eq!(m.rank(FieldSpec::new(2).unwrap()), 1);
        assert_eq!(m.rank(FieldSpec::new(3).unwrap()), 2);
    }

    #[test]
    fn rank_edge_cases() {
        let f = FieldSpec::default();
        assert_eq!(Matrix::zeros(0, 3).rank(f), 0);
        assert_eq!(Matrix::zeros(3, 0).rank(f), 0);
        assert_eq!(Matrix::zeros(2, 2).rank(f), 0);
        assert_eq!(from_rows(&[&[0, 2, 4], &[0, 1, 2], &[1, 0, 0]]).rank(f), 2);
    }

    #[test]
    fn kernel_of_a_rank_one_matrix() {
        let f = FieldSpec::new(7).unwrap();
        let m = from_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = m.kernel_basis(f);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v, f).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn product() {
        let f = FieldSpec::new(5).unwrap();
        let a = from_rows(&[&[1, 2], &[3, 4]]);
        let b = from_rows(&[&[1], &[1]]);
        assert_eq!(a.mul(&b, f), from_rows(&[&[3], &[2]]));
    }
}
