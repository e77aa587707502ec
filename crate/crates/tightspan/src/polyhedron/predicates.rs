//! LP-backed predicates that work in any dimension, independently of
//! full enumeration.

use super::dd::VRepresentation;
use super::hrep::HPolyhedron;
use crate::error::{Error, Result};
use crate::lp::{lp_solve_full, LpStatus, Sense};
use crate::num::Rational;
use crate::vector::QVector;

/// True iff `x` is a minimal element of `p`: no `y ∈ p` with `y ⪯ x`,
/// `y ≠ x`.  Decided by minimizing the coordinate sum over
/// `p ∩ {y ⪯ x}` and comparing against the coordinate sum of `x`.
pub fn is_minimal_element(p: &HPolyhedron, x: &QVector) -> Result<bool> {
    if !p.contains(x) {
        return Err(Error::Usage(
            "minimality is only defined for points of the polyhedron".into(),
        ));
    }
    let ground = p.ground().clone();
    let mut ineqs = p.inequalities().to_vec();
    for (i, label) in ground.iter().enumerate() {
        // y_i <= x_i encoded as -y_i >= -x_i
        let unit = QVector::unit(ground.clone(), label).expect("label exists");
        ineqs.push((unit.neg(), -x.coord(i)));
    }
    let ones = QVector::from_fn(ground.clone(), |_| Rational::one());
    let r = lp_solve_full(&ineqs, p.equalities(), &ones, Sense::Min);
    match r.status {
        LpStatus::Unbounded => Ok(false),
        LpStatus::Optimal => Ok(r.value.expect("optimal has value") == x.coord_sum()),
        LpStatus::Infeasible => Err(Error::Internal(
            "feasible point made the domination LP infeasible".into(),
        )),
    }
}

/// True iff every ray of the polyhedron is componentwise nonnegative
/// (and there is no lineality), i.e. the polyhedron is bounded from
/// below.
pub fn is_bounded_from_below(v: &VRepresentation) -> bool {
    v.lineality.is_empty() && v.rays.iter().all(QVector::is_nonnegative)
}

/// A rational point in the relative interior, or `None` when empty:
/// the barycenter of the vertices pushed along the sum of all rays.
pub fn relint_point(v: &VRepresentation) -> Option<QVector> {
    if v.vertices.is_empty() {
        return None;
    }
    let ground = v.ground.clone();
    let mut acc = QVector::zeros(ground);
    for vert in &v.vertices {
        acc = acc.add(vert);
    }
    let k = Rational::from_int(v.vertices.len() as i64);
    acc = acc.scale(&k.recip());
    for ray in &v.rays {
        acc = acc.add(ray);
    }
    Some(acc)
}

/// True iff `⟨a, x⟩ ≥ b` holds everywhere on `p` (vacuously on the
/// empty polyhedron).  Decided by one exact LP.
pub fn inequality_valid(p: &HPolyhedron, a: &QVector, b: &Rational) -> bool {
    let r = lp_solve_full(p.inequalities(), p.equalities(), a, Sense::Min);
    match r.status {
        LpStatus::Infeasible => true,
        LpStatus::Unbounded => false,
        LpStatus::Optimal => &r.value.expect("optimal has value") >= b,
    }
}

/// Membership in the affine hull plus strict satisfaction of every
/// constraint that is not tight on all of `p`; used by tests.
pub fn in_relative_interior(p: &HPolyhedron, v: &VRepresentation, x: &QVector) -> bool {
    if !p.contains(x) {
        return false;
    }
    for (a, b) in p.inequalities() {
        let everywhere_tight = v.vertices.iter().all(|w| &a.dot(w) == b)
            && v.rays.iter().all(|r| a.dot(r).is_zero())
            && v.lineality.iter().all(|l| a.dot(l).is_zero());
        if !everywhere_tight && &a.dot(x) == b {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::polyhedron::dd::dd_convert;
    use std::sync::Arc;

    fn gxy() -> Arc<GroundSet> {
        GroundSet::new(["f1", "f2"]).unwrap()
    }

    fn c(g: &Arc<GroundSet>, coords: &[i64], b: i64) -> (QVector, Rational) {
        (
            QVector::from_coords(
                g.clone(),
                coords.iter().map(|&x| Rational::from_int(x)).collect(),
            ),
            Rational::from_int(b),
        )
    }

    fn qv(g: &Arc<GroundSet>, coords: &[(i64, i64)]) -> QVector {
        QVector::from_coords(
            g.clone(),
            coords.iter().map(|&(n, d)| Rational::new(n, d)).collect(),
        )
    }

    fn two_point_envelope() -> (Arc<GroundSet>, HPolyhedron) {
        let g = gxy();
        let p = HPolyhedron::new(
            g.clone(),
            vec![c(&g, &[2, 0], 0), c(&g, &[0, 2], 0), c(&g, &[1, 1], 1)],
            vec![],
        );
        (g, p)
    }

    #[test]
    fn minimality_on_the_bounded_edge() {
        let (g, p) = two_point_envelope();
        assert!(is_minimal_element(&p, &qv(&g, &[(1, 1), (0, 1)])).unwrap());
        assert!(!is_minimal_element(&p, &qv(&g, &[(1, 1), (1, 1)])).unwrap());
        assert!(is_minimal_element(&p, &qv(&g, &[(1, 2), (1, 2)])).unwrap());
        // precondition: the point must lie in the polyhedron
        assert!(is_minimal_element(&p, &qv(&g, &[(0, 1), (0, 1)])).is_err());
    }

    #[test]
    fn bounded_from_below_checks() {
        let (_, p) = two_point_envelope();
        assert!(is_bounded_from_below(&dd_convert(&p)));
        let g = gxy();
        let q = HPolyhedron::new(g.clone(), vec![c(&g, &[1, 1], 0)], vec![]);
        assert!(!is_bounded_from_below(&dd_convert(&q)));
        let square = HPolyhedron::new(
            g.clone(),
            vec![
                c(&g, &[1, 0], 0),
                c(&g, &[0, 1], 0),
                c(&g, &[-1, 0], -1),
                c(&g, &[0, -1], -1),
            ],
            vec![],
        );
        assert!(is_bounded_from_below(&dd_convert(&square)));
    }

    #[test]
    fn relint_points() {
        let g = gxy();
        let square = HPolyhedron::new(
            g.clone(),
            vec![
                c(&g, &[1, 0], 0),
                c(&g, &[0, 1], 0),
                c(&g, &[-1, 0], -1),
                c(&g, &[0, -1], -1),
            ],
            vec![],
        );
        let v = dd_convert(&square);
        assert_eq!(relint_point(&v).unwrap(), qv(&g, &[(1, 2), (1, 2)]));
        assert!(in_relative_interior(&square, &v, &qv(&g, &[(1, 2), (1, 2)])));

        let point = HPolyhedron::new(
            g.clone(),
            vec![],
            vec![c(&g, &[1, 0], 1), c(&g, &[0, 1], 2)],
        );
        let v = dd_convert(&point);
        assert_eq!(relint_point(&v).unwrap(), qv(&g, &[(1, 1), (2, 1)]));

        let empty = HPolyhedron::empty(g);
        assert!(relint_point(&dd_convert(&empty)).is_none());
    }

    #[test]
    fn validity_lp() {
        let (g, p) = two_point_envelope();
        let ones = QVector::from_fn(g.clone(), |_| Rational::one());
        assert!(inequality_valid(&p, &ones, &Rational::one()));
        assert!(!inequality_valid(
            &p,
            &ones,
            &(Rational::one() + Rational::one())
        ));
        let e1 = QVector::unit(g, "f1").unwrap();
        assert!(inequality_valid(&p, &e1, &Rational::zero()));
    }
}
