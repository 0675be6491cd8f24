//! Linear algebra over Q on vectors of [`PRational`].

use super::rat::PRational;

/// Reduced row echelon form over Q. Returns the nonzero rows and pivot columns.
pub fn rref_q(rows: &[Vec<PRational>]) -> (Vec<Vec<PRational>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the right nullspace `{x : A x = 0}`.
pub fn nullspace_q(rows: &[Vec<PRational>], width: usize) -> Vec<Vec<PRational>> {
    let (ech, pivots) = rref_q(rows);
    (0..width)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut x = vec![PRational::zero(); width];
            x[f] = PRational::one();
            for (row, &pc) in ech.iter().zip(&pivots) {
                x[pc] = -&row[f];
            }
            x
        })
        .collect()
}

/// Expresses vectors over Q in a fixed linearly independent list.
#[derive(Clone, Debug)]
pub struct QSolver {
    len: usize,
    width: usize,
    rows: Vec<Vec<PRational>>,
    pivots: Vec<usize>,
}

impl QSolver {
    /// `None` if the list is linearly dependent.
    pub fn new(basis: &[Vec<PRational>]) -> Option<Self> {
        let len = basis.len();
        let width = basis.first().map_or(0, Vec::len);
        let aug: Vec<Vec<PRational>> = basis
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.extend((0..len).map(|j| {
                    if i == j {
                        PRational::one()
                    } else {
                        PRational::zero()
                    }
                }));
                v
            })
            .collect();
        let (rows, pivots) = rref_q(&aug);
        if rows.len() != len || pivots.iter().any(|&c| c >= width) {
            return None;
        }
        Some(QSolver {
            len,
            width,
            rows,
            pivots,
        })
    }

    pub fn solve(&self, v: &[PRational]) -> Option<Vec<PRational>> {
        let mut acc = v.to_vec();
        acc.extend(std::iter::repeat_n(PRational::zero(), self.len));
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if acc[c].is_zero() {
                continue;
            }
            let f = acc[c].clone();
            for (x, y) in acc.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        if acc[..self.width].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(acc[self.width..].iter().map(|x| -x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<PRational> {
        xs.iter().map(|&x| PRational::from_int(x)).collect()
    }

    #[test]
    fn solver_and_nullspace() {
        let s = QSolver::new(&[v(&[1, 1, 0]), v(&[0, 2, 1])]).unwrap();
        let c = s.solve(&v(&[3, 7, 2])).unwrap();
        assert_eq!(c, v(&[3, 2]));
        assert!(s.solve(&v(&[1, 0, 0])).is_none());
        assert!(QSolver::new(&[v(&[1, 2]), v(&[2, 4])]).is_none());

        let ns = nullspace_q(&[v(&[1, 1, 0]), v(&[0, 2, 1])], 3);
        assert_eq!(ns.len(), 1);
        let x = &ns[0];
        assert!((&x[0] + &x[1]).is_zero());
        assert!((&(&x[1] * &PRational::from_int(2)) + &x[2]).is_zero());
    }
}
