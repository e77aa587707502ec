//! Inequality-described polyhedra and their canonical form.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::ground::GroundSet;
use crate::lp::{lp_solve_full, LpStatus, Sense};
use crate::num::Rational;
use crate::vector::{primitive, primitive_signed, QVector};

/// A polyhedron `{x : ⟨a, x⟩ ≥ b for all inequalities, ⟨a, x⟩ = b for
/// all equalities}`.  The empty polyhedron is a value (canonically the
/// single inequality `0 ≥ 1`), never an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    ground: Arc<GroundSet>,
    inequalities: Vec<(QVector, Rational)>,
    equalities: Vec<(QVector, Rational)>,
}

impl HPolyhedron {
    pub fn new(
        ground: Arc<GroundSet>,
        inequalities: Vec<(QVector, Rational)>,
        equalities: Vec<(QVector, Rational)>,
    ) -> Self {
        for (a, _) in inequalities.iter().chain(&equalities) {
            assert!(a.ground() == &ground, "constraint over a foreign ground set");
        }
        HPolyhedron {
            ground,
            inequalities,
            equalities,
        }
    }

    /// The canonical empty polyhedron over a ground set.
    pub fn empty(ground: Arc<GroundSet>) -> Self {
        let zero = QVector::zeros(ground.clone());
        HPolyhedron::new(ground, vec![(zero, Rational::one())], vec![])
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn inequalities(&self) -> &[(QVector, Rational)] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[(QVector, Rational)] {
        &self.equalities
    }

    pub fn dim_of_space(&self) -> usize {
        self.ground.len()
    }

    pub fn contains(&self, x: &QVector) -> bool {
        self.inequalities.iter().all(|(a, b)| &a.dot(x) >= b)
            && self.equalities.iter().all(|(a, b)| &a.dot(x) == b)
    }

    /// Intersect with additional equalities.
    pub fn with_equalities(&self, extra: &[(QVector, Rational)]) -> HPolyhedron {
        let mut eq = self.equalities.clone();
        eq.extend(extra.iter().cloned());
        HPolyhedron::new(self.ground.clone(), self.inequalities.clone(), eq)
    }

    pub fn is_feasible(&self) -> bool {
        crate::lp::feasible_point(&self.inequalities, &self.equalities, &self.ground).is_some()
    }

    /// Canonical form: integer-primitive constraints, duplicates removed,
    /// implicit equalities promoted, redundant inequalities dropped by
    /// exact LP, everything deterministically sorted.  Two polyhedra are
    /// equal as point sets iff their canonical forms are syntactically
    /// equal.
    pub fn canonicalized(&self) -> HPolyhedron {
        if !self.is_feasible() {
            return HPolyhedron::empty(self.ground.clone());
        }
        let mut ineqs: Vec<(QVector, Rational)> = self
            .inequalities
            .iter()
            .map(|c| scale_inequality(c))
            .collect();
        ineqs.sort_by(cmp_constraint);
        ineqs.dedup();
        // drop trivial `0 ≥ nonpositive`
        ineqs.retain(|(a, b)| !(a.is_zero() && !b.is_positive()));

        let mut eqs: Vec<(QVector, Rational)> = self.equalities.clone();

        // promote implicit equalities
        let mut promoted = Vec::new();
        for (a, b) in &ineqs {
            let r = lp_solve_full(&ineqs, &eqs, a, Sense::Max);
            if r.status == LpStatus::Optimal && r.value.as_ref() == Some(b) {
                promoted.push((a.clone(), b.clone()));
            }
        }
        eqs.extend(promoted);

        // canonical equality basis via row reduction of [normal | rhs]
        let eqs = canonical_equalities(&self.ground, &eqs);

        // an inequality tight on the whole affine hull is no constraint at all
        ineqs.retain(|(a, b)| {
            let r = lp_solve_full(&[], &eqs, a, Sense::Min);
            !(r.status == LpStatus::Optimal && r.value.as_ref() == Some(b))
        });

        // remove redundant inequalities one at a time
        let mut keep: Vec<(QVector, Rational)> = ineqs.clone();
        let mut i = 0;
        while i < keep.len() {
            let (a, b) = keep[i].clone();
            let mut others = keep.clone();
            others.remove(i);
            let r = lp_solve_full(&others, &eqs, &a, Sense::Min);
            let redundant = match r.status {
                LpStatus::Optimal => r.value.expect("optimal has value") >= b,
                LpStatus::Unbounded => false,
                LpStatus::Infeasible => true,
            };
            if redundant {
                keep.remove(i);
            } else {
                i += 1;
            }
        }
        keep.sort_by(cmp_constraint);
        HPolyhedron::new(self.ground.clone(), keep, eqs)
    }
}

/// Positive scaling to a primitive integer constraint (orientation kept).
fn scale_inequality((a, b): &(QVector, Rational)) -> (QVector, Rational) {
    let mut all = a.coords().to_vec();
    all.push(b.clone());
    let joint = QVector::from_coords(
        GroundSet::new((0..all.len()).map(|i| i.to_string())).expect("nonempty"),
        all,
    );
    let (mut ints, _) = joint.to_integers();
    primitive(&mut ints);
    let rhs = Rational::from_big(ints.pop().expect("rhs present"), BigInt::one());
    (QVector::from_integers(a.ground().clone(), &ints), rhs)
}

fn cmp_constraint(x: &(QVector, Rational), y: &(QVector, Rational)) -> Ordering {
    x.0.lex_cmp(&y.0).then_with(|| x.1.cmp(&y.1))
}

/// Reduced, deterministically ordered equality system.
fn canonical_equalities(
    ground: &Arc<GroundSet>,
    eqs: &[(QVector, Rational)],
) -> Vec<(QVector, Rational)> {
    if eqs.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Rational>> = eqs
        .iter()
        .map(|(a, b)| {
            let mut r = a.coords().to_vec();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = crate::linalg::row_reduce(&mut rows);
    let mut out = Vec::new();
    for (i, _) in pivots.iter().enumerate() {
        let mut coords = rows[i].clone();
        let rhs = coords.pop().expect("rhs column");
        let mut ints: Vec<BigInt> = Vec::with_capacity(coords.len() + 1);
        let v = QVector::from_coords(ground.clone(), coords);
        let mut all = v.coords().to_vec();
        all.push(rhs);
        let joint = QVector::from_coords(
            GroundSet::new((0..all.len()).map(|i| i.to_string())).expect("nonempty"),
            all,
        );
        let (j, _) = joint.to_integers();
        ints.extend(j);
        primitive_signed(&mut ints);
        let rhs = Rational::from_big(ints.pop().expect("rhs"), BigInt::one());
        out.push((QVector::from_integers(ground.clone(), &ints), rhs));
    }
    out.sort_by(cmp_constraint);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gxy() -> Arc<GroundSet> {
        GroundSet::new(["x", "y"]).unwrap()
    }

    fn c(g: &Arc<GroundSet>, x: i64, y: i64, b: i64) -> (QVector, Rational) {
        (
            QVector::from_coords(
                g.clone(),
                vec![Rational::from_int(x), Rational::from_int(y)],
            ),
            Rational::from_int(b),
        )
    }

    #[test]
    fn canonical_drops_redundant() {
        let g = gxy();
        // x >= 0, y >= 0, x + y >= -1 (redundant), 2x >= 0 (duplicate)
        let p = HPolyhedron::new(
            g.clone(),
            vec![c(&g, 1, 0, 0), c(&g, 0, 1, 0), c(&g, 1, 1, -1), c(&g, 2, 0, 0)],
            vec![],
        );
        let canon = p.canonicalized();
        assert_eq!(canon.inequalities().len(), 2);
        assert!(canon.equalities().is_empty());
    }

    #[test]
    fn canonical_empty_is_syntactic() {
        let g = gxy();
        let p = HPolyhedron::new(g.clone(), vec![c(&g, 1, 0, 2), c(&g, -1, 0, -1)], vec![]);
        let canon = p.canonicalized();
        assert_eq!(canon, HPolyhedron::empty(g));
    }

    #[test]
    fn implicit_equality_promoted() {
        let g = gxy();
        // x + y >= 1 and x + y <= 1
        let p = HPolyhedron::new(g.clone(), vec![c(&g, 1, 1, 1), c(&g, -1, -1, -1)], vec![]);
        let canon = p.canonicalized();
        assert!(canon.inequalities().is_empty());
        assert_eq!(canon.equalities().len(), 1);
    }

    #[test]
    fn membership() {
        let g = gxy();
        let p = HPolyhedron::new(g.clone(), vec![c(&g, 1, 1, 1)], vec![]);
        let inside = QVector::from_coords(g.clone(), vec![Rational::one(), Rational::one()]);
        let outside = QVector::zeros(g);
        assert!(p.contains(&inside));
        assert!(!p.contains(&outside));
    }
}
