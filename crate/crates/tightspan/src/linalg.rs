//! Exact linear algebra: matrices over the rationals, Gaussian
//! elimination, linear solving and kernels.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::num::Rational;
use crate::vector::QVector;

/// A rectangular matrix whose rows are vectors over a shared ground set.
#[derive(Clone, Debug)]
pub struct QMatrix {
    ground: Arc<GroundSet>,
    rows: Vec<QVector>,
}

impl QMatrix {
    pub fn new(ground: Arc<GroundSet>, rows: Vec<QVector>) -> Result<Self> {
        for r in &rows {
            if r.ground() != &ground {
                return Err(Error::Dimension(
                    "matrix rows must share the ground set".into(),
                ));
            }
        }
        Ok(QMatrix { ground, rows })
    }

    pub fn identity(ground: Arc<GroundSet>) -> Self {
        let rows = ground
            .iter()
            .map(|l| QVector::unit(ground.clone(), l).expect("label exists"))
            .collect();
        QMatrix { ground, rows }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        let mut data: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        row_reduce(&mut data).len()
    }
}

/// In-place fraction-free-ish Gauss-Jordan reduction.  Returns the pivot
/// column of each pivot row, in row order; rows are left in reduced row
/// echelon form with zero rows at the bottom.
pub fn row_reduce(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r][c..].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

/// Exact solve of `A x = b`.
///
/// Returns `None` if the system is inconsistent, otherwise a particular
/// solution (free variables set to zero) together with a canonical basis
/// of the kernel (one vector per free column, gcd-reduced with positive
/// leading entry).
pub fn solve_linear(a: &QMatrix, b: &[Rational]) -> Result<Option<(QVector, Vec<QVector>)>> {
    if a.row_count() != b.len() {
        return Err(Error::Dimension(format!(
            "matrix has {} rows but rhs has {} entries",
            a.row_count(),
            b.len()
        )));
    }
    let ncols = a.col_count();
    let mut aug: Vec<Vec<Rational>> = a
        .rows
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.coords().to_vec();
            row.push(v.clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    // inconsistent iff a pivot lands in the rhs column
    if pivots.last() == Some(&ncols) {
        return Ok(None);
    }
    let ground = a.ground.clone();
    let mut particular = QVector::zeros(ground.clone());
    for (row, &pc) in pivots.iter().enumerate() {
        *particular.coord_mut(pc) = aug[row][ncols].clone();
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = QVector::zeros(ground.clone());
        *v.coord_mut(free) = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            *v.coord_mut(pc) = -&aug[row][free];
        }
        kernel.push(canonical_direction(&v));
    }
    Ok(Some((particular, kernel)))
}

/// Scale a rational vector to a primitive integer vector with positive
/// first nonzero entry.
pub fn canonical_direction(v: &QVector) -> QVector {
    let (mut ints, _) = v.to_integers();
    crate::vector::primitive_signed(&mut ints);
    QVector::from_integers(v.ground().clone(), &ints)
}

/// Basis of the kernel of the matrix (canonicalized as above).
pub fn kernel_basis(a: &QMatrix) -> Vec<QVector> {
    let zeros = vec![Rational::zero(); a.row_count()];
    solve_linear(a, &zeros)
        .expect("dimensions agree")
        .expect("homogeneous systems are consistent")
        .1
}

/// Affine rank minus one of a point set: the dimension of its affine hull.
/// Returns -1 for the empty set.
pub fn affine_dim(points: &[QVector]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    if points.len() == 1 {
        return 0;
    }
    let diffs: Vec<QVector> = points[1..].iter().map(|p| p.sub(first)).collect();
    let m = QMatrix::new(first.ground().clone(), diffs).expect("same ground");
    m.rank() as isize
}

/// Rank of a set of vectors (linear span dimension).
pub fn linear_rank(ground: &Arc<GroundSet>, vectors: &[QVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::new(ground.clone(), vectors.to_vec())
        .expect("same ground")
        .rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec2(g: &Arc<GroundSet>, a: i64, b: i64) -> QVector {
        QVector::from_coords(g.clone(), vec![Rational::from_int(a), Rational::from_int(b)])
    }

    #[test]
    fn identity_solve() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        let a = QMatrix::identity(g.clone());
        let b = vec![Rational::from_int(1), Rational::from_int(2)];
        let (p, k) = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(p, vec2(&g, 1, 2));
        assert!(k.is_empty());
    }

    #[test]
    fn single_equation_kernel() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        let a = QMatrix::new(g.clone(), vec![vec2(&g, 1, 1)]).unwrap();
        let (p, k) = solve_linear(&a, &[Rational::from_int(2)])
            .unwrap()
            .unwrap();
        assert_eq!(p, vec2(&g, 2, 0));
        assert_eq!(k, vec![vec2(&g, 1, -1)]);
    }

    #[test]
    fn inconsistent_rows() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        let a = QMatrix::new(g.clone(), vec![vec2(&g, 1, 0), vec2(&g, 1, 0)]).unwrap();
        let r = solve_linear(&a, &[Rational::from_int(0), Rational::from_int(1)]).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn substituted_solution_satisfies_system() {
        // small deterministic pseudo-random systems
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let mut seed = 12345u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..50 {
            let rows: Vec<QVector> = (0..3)
                .map(|_| {
                    QVector::from_coords(
                        g.clone(),
                        (0..3).map(|_| Rational::from_int(next())).collect(),
                    )
                })
                .collect();
            let a = QMatrix::new(g.clone(), rows.clone()).unwrap();
            let b: Vec<Rational> = (0..3).map(|_| Rational::from_int(next())).collect();
            if let Some((p, kernel)) = solve_linear(&a, &b).unwrap() {
                for (row, rhs) in rows.iter().zip(&b) {
                    assert_eq!(&row.dot(&p), rhs);
                    for k in &kernel {
                        assert!(row.dot(k).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn affine_dims() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        assert_eq!(affine_dim(&[]), -1);
        assert_eq!(affine_dim(&[vec2(&g, 1, 1)]), 0);
        assert_eq!(affine_dim(&[vec2(&g, 0, 0), vec2(&g, 2, 2), vec2(&g, 1, 1)]), 1);
        assert_eq!(
            affine_dim(&[vec2(&g, 0, 0), vec2(&g, 1, 0), vec2(&g, 0, 1)]),
            2
        );
    }
}
