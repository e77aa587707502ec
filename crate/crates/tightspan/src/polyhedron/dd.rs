//! Exact double description: vertex/ray enumeration for H-polyhedra and
//! facet enumeration for V-polyhedra, via extreme rays of rational
//! polyhedral cones.  Insertion follows a fixed lexicographic order so
//! results are deterministic.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::bits::BitSet;
use super::hrep::HPolyhedron;
use crate::ground::GroundSet;
use crate::num::Rational;
use crate::vector::{primitive, primitive_signed, QVector};

/// Exact V-representation.  When the polyhedron has a nontrivial
/// lineality space, `vertices` and `rays` describe its canonical slice
/// by the orthogonal complement of that space, and
/// `conv(vertices) + cone(rays) + span(lineality)` equals the
/// polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRepresentation {
    pub ground: Arc<GroundSet>,
    pub vertices: Vec<QVector>,
    pub rays: Vec<QVector>,
    pub lineality: Vec<QVector>,
}

impl VRepresentation {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

type IntVec = Vec<BigInt>;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn to_rational_rows(rows: &[IntVec]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| Rational::from_big(x.clone(), BigInt::from(1)))
                .collect()
        })
        .collect()
}

/// Integer kernel basis of a set of integer rows in `dim` columns.
/// Empty row list yields the standard basis.
fn int_kernel(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    if dim == 0 {
        return Vec::new();
    }
    if rows.is_empty() {
        return (0..dim)
            .map(|i| {
                let mut v = vec![BigInt::zero(); dim];
                v[i] = BigInt::from(1);
                v
            })
            .collect();
    }
    let mut rat = to_rational_rows(rows);
    let pivots = crate::linalg::row_reduce(&mut rat);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); dim];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&rat[row][free];
        }
        let ground = GroundSet::new((0..dim).map(|i| i.to_string())).expect("nonempty");
        let qv = QVector::from_coords(ground, v);
        let (mut ints, _) = qv.to_integers();
        primitive_signed(&mut ints);
        basis.push(ints);
    }
    basis
}

/// `rows × basisᵀ`: express each row in the coordinates of a subspace
/// spanned by `basis`.
fn restrict_rows(rows: &[IntVec], basis: &[IntVec]) -> Vec<IntVec> {
    rows.iter()
        .map(|r| basis.iter().map(|b| dot(r, b)).collect())
        .collect()
}

/// Map a vector of subspace coordinates back to ambient coordinates.
fn expand(coeffs: &[BigInt], basis: &[IntVec], dim: usize) -> IntVec {
    let mut out = vec![BigInt::zero(); dim];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    out
}

fn lex_cmp_int(a: &[BigInt], b: &[BigInt]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Extreme rays and lineality of the cone
/// `{x : ⟨r, x⟩ ≥ 0 for r in ineq, ⟨r, x⟩ = 0 for r in eq}`.
///
/// Rays are primitive integer vectors of the cone sliced by the
/// orthogonal complement of its lineality space.
pub fn cone_extreme_rays(ineq: &[IntVec], eq: &[IntVec], dim: usize) -> (Vec<IntVec>, Vec<IntVec>) {
    // subspace satisfying the equalities
    let sub = int_kernel(eq, dim);
    if sub.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let reduced = restrict_rows(ineq, &sub);
    let k = sub.len();
    // lineality inside the subspace
    let lin_y = int_kernel(&reduced, k);
    let mut lineality: Vec<IntVec> = lin_y
        .iter()
        .map(|l| {
            let mut v = expand(l, &sub, dim);
            primitive_signed(&mut v);
            v
        })
        .collect();
    lineality.sort_by(|a, b| lex_cmp_int(a, b));

    // slice to the orthogonal complement of the lineality
    let (pointed_rows, pointed_basis): (Vec<IntVec>, Vec<IntVec>) = if lin_y.is_empty() {
        (reduced, sub.clone())
    } else {
        let comp = int_kernel(&lin_y, k);
        let rows = restrict_rows(&reduced, &comp);
        let basis: Vec<IntVec> = comp.iter().map(|c| expand(c, &sub, dim)).collect();
        (rows, basis)
    };
    let rays_z = pointed_extreme_rays(&pointed_rows, pointed_basis.len());
    let mut rays: Vec<IntVec> = rays_z
        .iter()
        .map(|z| {
            let mut v = expand(z, &pointed_basis, dim);
            primitive(&mut v);
            v
        })
        .collect();
    rays.sort_by(|a, b| lex_cmp_int(a, b));
    (rays, lineality)
}

struct Ray {
    coords: IntVec,
    zero: BitSet,
}

/// Double description for a pointed cone `{z : C z ≥ 0}` (the rows must
/// have a trivial kernel).  Returns the extreme rays.
fn pointed_extreme_rays(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    if dim == 0 {
        return Vec::new();
    }
    let mut rows: Vec<IntVec> = rows
        .iter()
        .filter(|r| !r.iter().all(|x| x.is_zero()))
        .cloned()
        .collect();
    rows.sort_by(|a, b| lex_cmp_int(a, b));
    rows.dedup();
    let m = rows.len();

    // greedy lexicographic initial basis of full rank
    let mut basis_idx = Vec::new();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if basis_idx.len() == dim {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(r.iter().map(|x| Rational::from_big(x.clone(), BigInt::from(1))).collect());
        let mut reduced = trial.clone();
        if crate::linalg::row_reduce(&mut reduced).len() == trial.len() {
            chosen = trial;
            basis_idx.push(i);
        }
    }
    assert_eq!(
        basis_idx.len(),
        dim,
        "cone must be pointed for double description"
    );

    // initial rays: columns of the inverse of the basis matrix
    let ground = GroundSet::new((0..dim).map(|i| i.to_string())).expect("nonempty");
    let basis_rows: Vec<QVector> = basis_idx
        .iter()
        .map(|&i| {
            QVector::from_coords(
                ground.clone(),
                rows[i]
                    .iter()
                    .map(|x| Rational::from_big(x.clone(), BigInt::from(1)))
                    .collect(),
            )
        })
        .collect();
    let mat = crate::linalg::QMatrix::new(ground.clone(), basis_rows).expect("same ground");
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut rhs = vec![Rational::zero(); dim];
        rhs[j] = Rational::one();
        let (sol, kernel) = crate::linalg::solve_linear(&mat, &rhs)
            .expect("square system")
            .expect("basis is invertible");
        debug_assert!(kernel.is_empty());
        let (mut ints, _) = sol.to_integers();
        primitive(&mut ints);
        let mut zero = BitSet::new(m);
        for (i, row) in rows.iter().enumerate() {
            if dot(row, &ints).is_zero() {
                zero.set(i);
            }
        }
        rays.push(Ray { coords: ints, zero });
    }

    let processed: Vec<usize> = basis_idx.clone();
    let mut processed_mask = BitSet::new(m);
    for &i in &processed {
        processed_mask.set(i);
    }

    for i in 0..m {
        if processed_mask.contains(i) {
            continue;
        }
        processed_mask.set(i);
        let row = rows[i].clone();
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&row, &r.coords)).collect();
        for (j, v) in vals.iter().enumerate() {
            if v.is_zero() {
                rays[j].zero.set(i);
            }
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();
        if neg.is_empty() {
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let mut new_rays = Vec::new();
        for &p in &pos {
            for &n in &neg {
                if !adjacent(&rays, p, n, dim) {
                    continue;
                }
                let mut coords = vec![BigInt::zero(); dim];
                for t in 0..dim {
                    coords[t] = &vals[p] * &rays[n].coords[t] - &vals[n] * &rays[p].coords[t];
                }
                primitive(&mut coords);
                let mut zero = BitSet::new(m);
                for (ri, r) in rows.iter().enumerate() {
                    if processed_mask.contains(ri) && dot(r, &coords).is_zero() {
                        zero.set(ri);
                    }
                }
                new_rays.push(Ray { coords, zero });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len());
        for (j, r) in rays.into_iter().enumerate() {
            if !vals[j].is_negative() {
                kept.push(r);
            }
        }
        kept.extend(new_rays);
        rays = kept;
    }
    rays.into_iter().map(|r| r.coords).collect()
}

/// Combinatorial adjacency: two extreme rays are adjacent iff no third
/// ray is tight on every processed constraint they are both tight on.
fn adjacent(rays: &[Ray], p: usize, n: usize, dim: usize) -> bool {
    let common = rays[p].zero.intersection(&rays[n].zero);
    if dim >= 2 && common.count() + 2 < dim {
        return false;
    }
    for (j, r) in rays.iter().enumerate() {
        if j != p && j != n && r.zero.is_superset(&common) {
            return false;
        }
    }
    true
}

fn scale_to_int_row(coords: &[Rational]) -> IntVec {
    let ground = GroundSet::new((0..coords.len()).map(|i| i.to_string())).expect("nonempty");
    let qv = QVector::from_coords(ground, coords.to_vec());
    let (mut ints, _) = qv.to_integers();
    primitive(&mut ints);
    ints
}

/// Exact vertex and ray enumeration of an H-polyhedron.
pub fn dd_convert(p: &HPolyhedron) -> VRepresentation {
    let ground = p.ground().clone();
    let d = ground.len();
    let mut ineq_rows: Vec<IntVec> = Vec::with_capacity(p.inequalities().len() + 1);
    for (a, b) in p.inequalities() {
        let mut coords = a.coords().to_vec();
        coords.push(-b);
        ineq_rows.push(scale_to_int_row(&coords));
    }
    let mut t_row = vec![BigInt::zero(); d + 1];
    t_row[d] = BigInt::from(1);
    ineq_rows.push(t_row);
    let eq_rows: Vec<IntVec> = p
        .equalities()
        .iter()
        .map(|(a, b)| {
            let mut coords = a.coords().to_vec();
            coords.push(-b);
            scale_to_int_row(&coords)
        })
        .collect();

    let (cone_rays, cone_lin) = cone_extreme_rays(&ineq_rows, &eq_rows, d + 1);

    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in cone_rays {
        let t = r[d].clone();
        debug_assert!(!t.is_negative());
        if t.is_zero() {
            let mut v = r[..d].to_vec();
            primitive(&mut v);
            rays.push(QVector::from_integers(ground.clone(), &v));
        } else {
            let den = Rational::from_big(t, BigInt::from(1));
            let coords = r[..d]
                .iter()
                .map(|x| Rational::from_big(x.clone(), BigInt::from(1)) / den.clone())
                .collect();
            vertices.push(QVector::from_coords(ground.clone(), coords));
        }
    }
    let lineality: Vec<QVector> = cone_lin
        .iter()
        .map(|l| {
            debug_assert!(l[d].is_zero(), "lineality cannot move the homogenizer");
            let mut v = l[..d].to_vec();
            primitive_signed(&mut v);
            QVector::from_integers(ground.clone(), &v)
        })
        .collect();
    if vertices.is_empty() {
        return VRepresentation {
            ground,
            vertices: Vec::new(),
            rays: Vec::new(),
            lineality: Vec::new(),
        };
    }
    vertices.sort_by(|a, b| a.lex_cmp(b));
    rays.sort_by(|a, b| a.lex_cmp(b));
    VRepresentation {
        ground,
        vertices,
        rays,
        lineality,
    }
}

/// Facet enumeration: the irredundant H-representation of
/// `conv(vertices) + cone(rays) + span(lineality)`.
pub fn facets_from_vrep(v: &VRepresentation) -> HPolyhedron {
    let ground = v.ground.clone();
    let d = ground.len();
    if v.vertices.is_empty() {
        return HPolyhedron::empty(ground);
    }
    let mut ineq_rows = Vec::new();
    for vert in &v.vertices {
        let mut coords = vert.coords().to_vec();
        coords.push(Rational::one());
        ineq_rows.push(scale_to_int_row(&coords));
    }
    for ray in &v.rays {
        let mut coords = ray.coords().to_vec();
        coords.push(Rational::zero());
        ineq_rows.push(scale_to_int_row(&coords));
    }
    let eq_rows: Vec<IntVec> = v
        .lineality
        .iter()
        .map(|l| {
            let mut coords = l.coords().to_vec();
            coords.push(Rational::zero());
            scale_to_int_row(&coords)
        })
        .collect();
    let (polar_rays, polar_lin) = cone_extreme_rays(&ineq_rows, &eq_rows, d + 1);

    let mut inequalities = Vec::new();
    for r in polar_rays {
        if r[..d].iter().all(|x| x.is_zero()) {
            continue; // the trivial valid inequality 1 ≥ 0
        }
        let normal = QVector::from_integers(ground.clone(), &r[..d]);
        let rhs = -Rational::from_big(r[d].clone(), BigInt::from(1));
        inequalities.push((normal, rhs));
    }
    let mut equalities = Vec::new();
    for l in polar_lin {
        let normal = QVector::from_integers(ground.clone(), &l[..d]);
        let rhs = -Rational::from_big(l[d].clone(), BigInt::from(1));
        equalities.push((normal, rhs));
    }
    inequalities.sort_by(|x, y| x.0.lex_cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    equalities.sort_by(|x, y| x.0.lex_cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    HPolyhedron::new(ground, inequalities, equalities)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gxy() -> Arc<GroundSet> {
        GroundSet::new(["x1", "x2"]).unwrap()
    }

    fn qv(g: &Arc<GroundSet>, coords: &[i64]) -> QVector {
        QVector::from_coords(
            g.clone(),
            coords.iter().map(|&c| Rational::from_int(c)).collect(),
        )
    }

    fn c(g: &Arc<GroundSet>, coords: &[i64], b: i64) -> (QVector, Rational) {
        (qv(g, coords), Rational::from_int(b))
    }

    #[test]
    fn unit_square() {
        let g = gxy();
        let p = HPolyhedron::new(
            g.clone(),
            vec![
                c(&g, &[1, 0], 0),
                c(&g, &[0, 1], 0),
                c(&g, &[-1, 0], -1),
                c(&g, &[0, -1], -1),
            ],
            vec![],
        );
        let v = dd_convert(&p);
        assert_eq!(v.vertices.len(), 4);
        assert!(v.rays.is_empty());
        assert!(v.lineality.is_empty());
        let expect: Vec<QVector> = vec![
            qv(&g, &[0, 0]),
            qv(&g, &[0, 1]),
            qv(&g, &[1, 0]),
            qv(&g, &[1, 1]),
        ];
        assert_eq!(v.vertices, expect);
    }

    #[test]
    fn quadrant_with_cut() {
        let g = gxy();
        // x1 >= 0, x2 >= 0, x1 + x2 >= 1
        let p = HPolyhedron::new(
            g.clone(),
            vec![c(&g, &[1, 0], 0), c(&g, &[0, 1], 0), c(&g, &[1, 1], 1)],
            vec![],
        );
        let v = dd_convert(&p);
        assert_eq!(v.vertices, vec![qv(&g, &[0, 1]), qv(&g, &[1, 0])]);
        assert_eq!(v.rays, vec![qv(&g, &[0, 1]), qv(&g, &[1, 0])]);
    }

    #[test]
    fn two_point_metric_envelope() {
        let g = gxy();
        // 2f1 >= 0, 2f2 >= 0, f1 + f2 >= 1: hand enumeration gives the
        // same vertex and ray sets as the quadrant-with-cut system.
        let p = HPolyhedron::new(
            g.clone(),
            vec![c(&g, &[2, 0], 0), c(&g, &[0, 2], 0), c(&g, &[1, 1], 1)],
            vec![],
        );
        let v = dd_convert(&p);
        assert_eq!(v.vertices, vec![qv(&g, &[0, 1]), qv(&g, &[1, 0])]);
        assert_eq!(v.rays, vec![qv(&g, &[0, 1]), qv(&g, &[1, 0])]);
    }

    #[test]
    fn empty_polyhedron() {
        let g = gxy();
        let p = HPolyhedron::new(g.clone(), vec![c(&g, &[1, 0], 1), c(&g, &[-1, 0], 0)], vec![]);
        let v = dd_convert(&p);
        assert!(v.is_empty());
        assert!(v.rays.is_empty());
    }

    #[test]
    fn halfplane_has_lineality() {
        let g = gxy();
        let p = HPolyhedron::new(g.clone(), vec![c(&g, &[1, 0], 0)], vec![]);
        let v = dd_convert(&p);
        assert_eq!(v.lineality, vec![qv(&g, &[0, 1])]);
        // canonical slice of the halfplane: the nonnegative x1-axis
        assert_eq!(v.vertices, vec![qv(&g, &[0, 0])]);
        assert_eq!(v.rays, vec![qv(&g, &[1, 0])]);
    }

    #[test]
    fn equalities_respected() {
        let g = gxy();
        // x1 + x2 = 1, x1 >= 0, x2 >= 0: a segment
        let p = HPolyhedron::new(
            g.clone(),
            vec![c(&g, &[1, 0], 0), c(&g, &[0, 1], 0)],
            vec![c(&g, &[1, 1], 1)],
        );
        let v = dd_convert(&p);
        assert_eq!(v.vertices, vec![qv(&g, &[0, 1]), qv(&g, &[1, 0])]);
        assert!(v.rays.is_empty());
    }

    #[test]
    fn round_trip_square() {
        let g = gxy();
        let p = HPolyhedron::new(
            g.clone(),
            vec![
                c(&g, &[1, 0], 0),
                c(&g, &[0, 1], 0),
                c(&g, &[-1, 0], -1),
                c(&g, &[0, -1], -1),
                c(&g, &[1, 1], 0), // redundant
            ],
            vec![],
        );
        let v = dd_convert(&p);
        let h = facets_from_vrep(&v);
        assert_eq!(h.inequalities().len(), 4);
        let v2 = dd_convert(&h);
        assert_eq!(v.vertices, v2.vertices);
        assert_eq!(v.rays, v2.rays);
    }

    /// Independent oracle: enumerate candidate vertices by solving all
    /// maximal square subsystems.
    fn brute_force_vertices(p: &HPolyhedron) -> Vec<QVector> {
        let g = p.ground().clone();
        let d = g.len();
        let all: Vec<(QVector, Rational)> = p
            .inequalities()
            .iter()
            .chain(p.equalities())
            .cloned()
            .collect();
        let n = all.len();
        let mut found: Vec<QVector> = Vec::new();
        let mut idx = vec![0usize; d];
        fn rec(
            all: &[(QVector, Rational)],
            p: &HPolyhedron,
            idx: &mut Vec<usize>,
            pos: usize,
            start: usize,
            n: usize,
            found: &mut Vec<QVector>,
        ) {
            let d = idx.len();
            if pos == d {
                let rows: Vec<QVector> = idx.iter().map(|&i| all[i].0.clone()).collect();
                let rhs: Vec<Rational> = idx.iter().map(|&i| all[i].1.clone()).collect();
                let m =
                    crate::linalg::QMatrix::new(p.ground().clone(), rows).expect("same ground");
                if let Some((sol, kernel)) = crate::linalg::solve_linear(&m, &rhs).unwrap() {
                    if kernel.is_empty() && p.contains(&sol) && !found.contains(&sol) {
                        found.push(sol);
                    }
                }
                return;
            }
            for i in start..n {
                idx[pos] = i;
                rec(all, p, idx, pos + 1, i + 1, n, found);
            }
        }
        rec(&all, p, &mut idx, 0, 0, n, &mut found);
        found.sort_by(|a, b| a.lex_cmp(b));
        found
    }

    #[test]
    fn matches_brute_force_on_random_systems() {
        let g = gxy();
        let mut seed = 99u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 9) as i64 - 4
        };
        let mut nonempty = 0;
        for _ in 0..40 {
            let m = 4;
            let ineqs: Vec<(QVector, Rational)> = (0..m)
                .map(|_| c(&g, &[next(), next()], next()))
                .collect();
            let p = HPolyhedron::new(g.clone(), ineqs, vec![]);
            let v = dd_convert(&p);
            if !v.lineality.is_empty() {
                continue; // brute force enumerates vertices of the full polyhedron only
            }
            let brute = brute_force_vertices(&p);
            assert_eq!(v.vertices, brute);
            if !brute.is_empty() {
                nonempty += 1;
            }
        }
        assert!(nonempty > 3, "random systems were almost all empty");
    }
}
