//! Dense LU factorization with partial pivoting.

/// Square matrix stored row-major.
#[derive(Debug, Clone)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn add(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.n + c] += v;
    }

    #[cfg(test)]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.n + c] = v;
    }

    pub fn set_row(&mut self, r: usize, v: f64) {
        let n = self.n;
        self.data[r * n..(r + 1) * n].fill(v);
    }

    fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|r| {
                self.data[r * self.n..(r + 1) * self.n]
                    .iter()
                    .map(|v| v.abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }
}

/// Solves `a x = b`. Returns `None` when a pivot falls below the relative
/// singularity threshold.
pub fn lu_solve(mut a: Matrix, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = a.n;
    assert_eq!(b.len(), n);
    let tol = a.norm_inf().max(f64::MIN_POSITIVE) * 1e-13;

    for k in 0..n {
        let (p, pmax) = (k..n)
            .map(|r| (r, a.get(r, k).abs()))
            .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if pmax <= tol {
            return None;
        }
        if p != k {
            for c in 0..n {
                a.data.swap(k * n + c, p * n + c);
            }
            b.swap(k, p);
        }
        let pivot = a.get(k, k);
        let (upper, lower) = a.data.split_at_mut((k + 1) * n);
        let row_k = &upper[k * n..(k + 1) * n];
        for r in 0..(n - k - 1) {
            let row = &mut lower[r * n..(r + 1) * n];
            let f = row[k] / pivot;
            if f == 0.0 {
                continue;
            }
            row[k] = 0.0;
            for c in (k + 1)..n {
                row[c] -= f * row_k[c];
            }
            b[k + 1 + r] -= f * b[k];
        }
    }

    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = b[k];
        for c in (k + 1)..n {
            s -= a.get(k, c) * x[c];
        }
        x[k] = s / a.get(k, k);
    }
    Some(x)
}
