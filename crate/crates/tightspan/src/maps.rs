//! Maps on ground sets: symmetric maps, distances and metrics, directed
//! maps, diversities and k-dissimilarities, together with their
//! validators, normalisation transforms and the weight functions they
//! induce on point configurations.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::config::{ConfigKind, PointConfiguration, WeightFunction};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::num::Rational;
use crate::vector::QVector;

/// A symmetric map on unordered pairs (diagonal included).
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMap {
    ground: Arc<GroundSet>,
    /// Upper-triangular storage: entry for `(i, j)` with `i <= j`.
    values: Vec<Rational>,
}

impl SymmetricMap {
    pub fn zero(ground: Arc<GroundSet>) -> Self {
        let n = ground.len();
        SymmetricMap {
            ground,
            values: vec![Rational::zero(); n * (n + 1) / 2],
        }
    }

    pub fn from_fn(ground: Arc<GroundSet>, f: impl Fn(usize, usize) -> Rational) -> Self {
        let n = ground.len();
        let mut values = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                values.push(f(i, j));
            }
        }
        SymmetricMap { ground, values }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let n = self.ground.len();
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * n - i * (i + 1) / 2 + j
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.values[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let k = self.idx(i, j);
        self.values[k] = v;
    }

    pub fn get_labels(&self, x: &str, y: &str) -> Result<&Rational> {
        Ok(self.get(self.ground.require(x)?, self.ground.require(y)?))
    }

    pub fn add(&self, other: &SymmetricMap) -> SymmetricMap {
        assert_eq!(self.ground, other.ground);
        SymmetricMap {
            ground: self.ground.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymmetricMap {
        SymmetricMap {
            ground: self.ground.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Violations of the distance axioms: zero diagonal, nonnegativity.
    pub fn validate_distance(&self) -> Vec<String> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for i in 0..n {
            if !self.get(i, i).is_zero() {
                out.push(format!(
                    "diagonal value at ({l},{l}) is {}, expected 0",
                    self.get(i, i),
                    l = self.ground.label(i)
                ));
            }
            for j in i..n {
                if self.get(i, j).is_negative() {
                    out.push(format!(
                        "negative value {} at ({},{})",
                        self.get(i, j),
                        self.ground.label(i),
                        self.ground.label(j)
                    ));
                }
            }
        }
        out
    }

    /// Distance axioms plus the triangle inequality.
    pub fn validate_metric(&self) -> Vec<String> {
        let mut out = self.validate_distance();
        let n = self.ground.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.get(x, z);
                    let rhs = self.get(x, y) + self.get(y, z);
                    if lhs > &rhs {
                        out.push(format!(
                            "triangle inequality fails: d({x0},{z0}) = {lhs} > {rhs} = d({x0},{y0}) + d({y0},{z0})",
                            x0 = self.ground.label(x),
                            y0 = self.ground.label(y),
                            z0 = self.ground.label(z),
                        ));
                    }
                }
            }
        }
        out
    }

    /// Violations of the four-point condition
    /// `d(x,y) + d(u,v) <= max(d(x,u) + d(y,v), d(x,v) + d(y,u))`.
    pub fn validate_four_point(&self) -> Vec<String> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x..n {
                for u in 0..n {
                    for v in u..n {
                        let s0 = self.get(x, y) + self.get(u, v);
                        let s1 = self.get(x, u) + self.get(y, v);
                        let s2 = self.get(x, v) + self.get(y, u);
                        let max = if s1 >= s2 { s1 } else { s2 };
                        if s0 > max {
                            out.push(format!(
                                "four-point condition fails on ({},{},{},{})",
                                self.ground.label(x),
                                self.ground.label(y),
                                self.ground.label(u),
                                self.ground.label(v)
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A map on ordered pairs `domain × codomain`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectedMap {
    domain: Arc<GroundSet>,
    codomain: Arc<GroundSet>,
    /// Row-major `|domain| × |codomain|`.
    values: Vec<Rational>,
}

impl DirectedMap {
    pub fn from_fn(
        domain: Arc<GroundSet>,
        codomain: Arc<GroundSet>,
        f: impl Fn(usize, usize) -> Rational,
    ) -> Self {
        let mut values = Vec::with_capacity(domain.len() * codomain.len());
        for i in 0..domain.len() {
            for j in 0..codomain.len() {
                values.push(f(i, j));
            }
        }
        DirectedMap {
            domain,
            codomain,
            values,
        }
    }

    pub fn square(ground: Arc<GroundSet>, f: impl Fn(usize, usize) -> Rational) -> Self {
        Self::from_fn(ground.clone(), ground, f)
    }

    pub fn domain(&self) -> &Arc<GroundSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<GroundSet> {
        &self.codomain
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.values[i * self.codomain.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.values[i * self.codomain.len() + j] = v;
    }

    /// Directed-distance axioms: square, zero diagonal, nonnegative.
    pub fn validate_distance(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.is_square() {
            out.push("directed distances need one set and its copy".into());
            return out;
        }
        let n = self.domain.len();
        for i in 0..n {
            if !self.get(i, i).is_zero() {
                out.push(format!(
                    "diagonal value at ({l},{l}) is {}, expected 0",
                    self.get(i, i),
                    l = self.domain.label(i)
                ));
            }
            for j in 0..n {
                if self.get(i, j).is_negative() {
                    out.push(format!(
                        "negative value {} at ({},{})",
                        self.get(i, j),
                        self.domain.label(i),
                        self.domain.label(j)
                    ));
                }
            }
        }
        out
    }

    /// Directed-distance axioms plus the triangle inequality.
    pub fn validate_metric(&self) -> Vec<String> {
        let mut out = self.validate_distance();
        if !self.is_square() {
            return out;
        }
        let n = self.domain.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.get(x, z);
                    let rhs = self.get(x, y) + self.get(y, z);
                    if lhs > &rhs {
                        out.push(format!(
                            "directed triangle inequality fails on ({},{},{})",
                            self.domain.label(x),
                            self.domain.label(y),
                            self.domain.label(z)
                        ));
                    }
                }
            }
        }
        out
    }
}

/// A set function on all subsets of a ground set, indexed by bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct Diversity {
    ground: Arc<GroundSet>,
    values: Vec<Rational>,
}

impl Diversity {
    pub fn new(ground: Arc<GroundSet>, values: Vec<Rational>) -> Result<Self> {
        if ground.len() > 16 {
            return Err(Error::CapExceeded("diversity base set too large".into()));
        }
        if values.len() != 1 << ground.len() {
            return Err(Error::Dimension(
                "diversity needs one value per subset".into(),
            ));
        }
        Ok(Diversity { ground, values })
    }

    pub fn zero(ground: Arc<GroundSet>) -> Self {
        let n = 1usize << ground.len();
        Diversity {
            ground,
            values: vec![Rational::zero(); n],
        }
    }

    pub fn from_fn(ground: Arc<GroundSet>, f: impl Fn(u64) -> Rational) -> Self {
        let n = 1u64 << ground.len();
        let values = (0..n).map(f).collect();
        Diversity { ground, values }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn get(&self, mask: u64) -> &Rational {
        &self.values[mask as usize]
    }

    pub fn set(&mut self, mask: u64, v: Rational) {
        self.values[mask as usize] = v;
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.ground.len()) - 1
    }

    /// Violations of the diversity axioms: zero on small sets, and the
    /// triangle-type axiom over all `A`, `C` and nonempty `B`.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let full = self.full_mask();
        if !self.get(0).is_zero() {
            out.push("value on the empty set must be 0".into());
        }
        for i in 0..self.ground.len() {
            if !self.get(1 << i).is_zero() {
                out.push(format!(
                    "value on singleton {{{}}} must be 0",
                    self.ground.label(i)
                ));
            }
        }
        for a in 0..=full {
            for c in 0..=full {
                for b in 1..=full {
                    let lhs = self.get(a | b) + self.get(b | c);
                    let rhs = self.get(a | c);
                    if &lhs < rhs {
                        out.push(format!(
                            "axiom fails: d({}) + d({}) < d({})",
                            self.ground.subset_label(a | b),
                            self.ground.subset_label(b | c),
                            self.ground.subset_label(a | c)
                        ));
                    }
                }
            }
        }
        out
    }

    /// Monotonicity `A ⊆ B ⇒ δ(A) ≤ δ(B)`, a consequence of the axioms;
    /// exposed so tests can check it exhaustively.
    pub fn validate_monotone(&self) -> Vec<String> {
        let full = self.full_mask();
        let mut out = Vec::new();
        for b in 0..=full {
            let mut a = b;
            loop {
                if self.get(a) > self.get(b) {
                    out.push(format!(
                        "monotonicity fails: {} over {}",
                        self.ground.subset_label(a),
                        self.ground.subset_label(b)
                    ));
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        out
    }
}

/// A map on the k-element subsets of a ground set.
#[derive(Clone, Debug, PartialEq)]
pub struct KDissimilarity {
    ground: Arc<GroundSet>,
    k: usize,
    values: BTreeMap<u64, Rational>,
}

impl KDissimilarity {
    pub fn from_fn(ground: Arc<GroundSet>, k: usize, f: impl Fn(u64) -> Rational) -> Result<Self> {
        if !(2..=ground.len()).contains(&k) {
            return Err(Error::Usage(format!(
                "k must lie in 2..={}, got {k}",
                ground.len()
            )));
        }
        let n = ground.len();
        let mut values = BTreeMap::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize == k {
                values.insert(mask, f(mask));
            }
        }
        Ok(KDissimilarity { ground, k, values })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, mask: u64) -> Result<&Rational> {
        self.values
            .get(&mask)
            .ok_or_else(|| Error::Usage("not a k-subset".into()))
    }
}

/// Zero-diagonal normalisation of a symmetric map:
/// `D'(x,y) = D(x,y) - (D(x,x) + D(y,y))/2`, with the shift vector
/// `v(x) = D(x,x)/2`.  The tight-span of `D` is the tight-span of `D'`
/// translated by `v`.
pub fn normalize_symmetric(d: &SymmetricMap) -> (SymmetricMap, QVector) {
    let half = Rational::new(1, 2);
    let ground = d.ground().clone();
    let shift = QVector::from_fn(ground.clone(), |l| {
        let i = ground.require(l).expect("own label");
        d.get(i, i) * &half
    });
    let normalized = SymmetricMap::from_fn(ground.clone(), |i, j| {
        d.get(i, j) - &(&(d.get(i, i) + d.get(j, j)) * &half)
    });
    (normalized, shift)
}

/// Pointwise maximum with zero.  For zero-diagonal symmetric maps and
/// for directed maps this does not change the tight-span.
pub fn positive_part(d: &SymmetricMap) -> SymmetricMap {
    SymmetricMap::from_fn(d.ground().clone(), |i, j| {
        let v = d.get(i, j);
        if v.is_negative() {
            Rational::zero()
        } else {
            v.clone()
        }
    })
}

/// As `positive_part`, for directed maps.
pub fn positive_part_directed(d: &DirectedMap) -> DirectedMap {
    DirectedMap::from_fn(d.domain().clone(), d.codomain().clone(), |i, j| {
        let v = d.get(i, j);
        if v.is_negative() {
            Rational::zero()
        } else {
            v.clone()
        }
    })
}

/// The symmetric distance on the doubled set induced by a square
/// directed map: `D(x,y)` across the copies, zero within each copy.
/// Its envelope equals the nonnegative envelope of the directed map.
pub fn undirect(d: &DirectedMap) -> Result<SymmetricMap> {
    if !d.is_square() {
        return Err(Error::Usage("undirect needs a square directed map".into()));
    }
    let n = d.domain().len();
    let (_, _, both) = d.domain().doubled();
    Ok(SymmetricMap::from_fn(both, |i, j| {
        // doubled ground lists the left copy first
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        if lo < n && hi >= n {
            d.get(lo, hi - n).clone()
        } else if hi < n || lo >= n {
            Rational::zero()
        } else {
            unreachable!()
        }
    }))
}

/// The symmetric map on nonempty subsets associated with a set
/// function: twice the value on the diagonal, the value of the union
/// off the diagonal.
pub fn diversity_to_sym(delta: &Diversity) -> SymmetricMap {
    let subsets = delta.ground().nonempty_subsets();
    let masks: Vec<u64> = subsets
        .labels()
        .iter()
        .map(|l| delta.ground().parse_subset_label(l).expect("own label"))
        .collect();
    SymmetricMap::from_fn(subsets.clone(), |i, j| {
        if i == j {
            delta.get(masks[i]) + delta.get(masks[i])
        } else {
            delta.get(masks[i] | masks[j]).clone()
        }
    })
}

/// Recover a set function from a symmetric map on nonempty subsets:
/// half the diagonal, zero on the empty set.
pub fn sym_to_diversity(d: &SymmetricMap, base: &Arc<GroundSet>) -> Result<Diversity> {
    let subsets = base.nonempty_subsets();
    if d.ground() != &subsets {
        return Err(Error::Usage(
            "map must live on the nonempty subsets of the base set".into(),
        ));
    }
    let half = Rational::new(1, 2);
    let mut delta = Diversity::zero(base.clone());
    for (i, l) in subsets.labels().iter().enumerate() {
        let mask = base.parse_subset_label(l)?;
        delta.set(mask, d.get(i, i) * &half);
    }
    Ok(delta)
}

/// Violations of the subset-map axioms: the triangle inequality, zero
/// on singleton diagonals, and the union identity
/// `D(A,B) = D(A∪B, A∪B)/2` for `A ≠ B`.
pub fn check_union_axioms(d: &SymmetricMap, base: &Arc<GroundSet>) -> Result<Vec<String>> {
    let subsets = base.nonempty_subsets();
    if d.ground() != &subsets {
        return Err(Error::Usage(
            "map must live on the nonempty subsets of the base set".into(),
        ));
    }
    let masks: Vec<u64> = subsets
        .labels()
        .iter()
        .map(|l| base.parse_subset_label(l).expect("own label"))
        .collect();
    let n = masks.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if d.get(x, z) > &(d.get(x, y) + d.get(y, z)) {
                    out.push(format!(
                        "triangle inequality fails on ({},{},{})",
                        subsets.label(x),
                        subsets.label(y),
                        subsets.label(z)
                    ));
                }
            }
        }
    }
    for (i, &m) in masks.iter().enumerate() {
        if m.count_ones() == 1 && !d.get(i, i).is_zero() {
            out.push(format!("nonzero diagonal on singleton {}", subsets.label(i)));
        }
    }
    let half = Rational::new(1, 2);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let union = masks[i] | masks[j];
            let u = masks.iter().position(|&m| m == union).expect("subset");
            if d.get(i, j) != &(d.get(u, u) * &half) {
                out.push(format!(
                    "union identity fails on ({},{})",
                    subsets.label(i),
                    subsets.label(j)
                ));
            }
        }
    }
    Ok(out)
}

/// The distance on nonempty subsets associated with a diversity:
/// `max(0, δ(A∪B) - δ(A) - δ(B))` off the diagonal, zero on it.  Equals
/// the positive part of the zero-diagonal normalisation of the
/// associated symmetric map.
pub fn diversity_distance(delta: &Diversity) -> SymmetricMap {
    let subsets = delta.ground().nonempty_subsets();
    let masks: Vec<u64> = subsets
        .labels()
        .iter()
        .map(|l| delta.ground().parse_subset_label(l).expect("own label"))
        .collect();
    SymmetricMap::from_fn(subsets.clone(), |i, j| {
        if i == j {
            return Rational::zero();
        }
        let v = &(delta.get(masks[i] | masks[j]) - delta.get(masks[i])) - delta.get(masks[j]);
        if v.is_positive() {
            v
        } else {
            Rational::zero()
        }
    })
}

/// Any of the supported map values, for dispatching.
#[derive(Clone, Debug)]
pub enum MapValue {
    Symmetric(SymmetricMap),
    Directed(DirectedMap),
    Diversity(Diversity),
    KDissimilarity(KDissimilarity),
}

/// The weight function a map induces on a configuration.
///
/// Symmetric maps weight the pair points by the negated values
/// (diagonal included on the `A` kind); directed maps weight the mixed
/// points by the negated values and any doubled points by zero;
/// diversities weight each 0/1 cube point by the negated value of the
/// union of its support; k-dissimilarities weight each hypersimplex
/// vertex by the negated value of its support.
pub fn make_weight(map: &MapValue, config: &Arc<PointConfiguration>) -> Result<WeightFunction> {
    match (map, &config.kind) {
        (MapValue::Symmetric(d), ConfigKind::A | ConfigKind::ABar) => {
            weight_of_symmetric(d, config)
        }
        (MapValue::Directed(d), ConfigKind::B | ConfigKind::BBar | ConfigKind::BDirected) => {
            weight_of_directed(d, config)
        }
        (MapValue::Diversity(delta), ConfigKind::Cube) => weight_of_diversity(delta, config),
        (MapValue::Diversity(delta), ConfigKind::A) => {
            weight_of_symmetric(&diversity_to_sym(delta), config)
        }
        (MapValue::KDissimilarity(d), ConfigKind::Hypersimplex(_)) => {
            weight_of_kdissimilarity(d, config)
        }
        _ => Err(Error::Usage(format!(
            "map kind does not match configuration kind {}",
            config.kind.name()
        ))),
    }
}

/// Support of a pair point: the one or two coordinates carrying it.
fn pair_support(p: &QVector) -> (usize, usize) {
    let mut found = Vec::new();
    for (i, c) in p.coords().iter().enumerate() {
        if c == &Rational::from_int(2) {
            return (i, i);
        }
        if c.is_positive() {
            found.push(i);
        }
    }
    assert_eq!(found.len(), 2, "pair points have one or two support coordinates");
    (found[0], found[1])
}

pub fn weight_of_symmetric(
    d: &SymmetricMap,
    config: &Arc<PointConfiguration>,
) -> Result<WeightFunction> {
    if d.ground() != &config.ground {
        return Err(Error::Usage("map and configuration grounds differ".into()));
    }
    let values = config
        .points
        .iter()
        .map(|(_, p)| {
            let (i, j) = pair_support(p);
            -d.get(i, j)
        })
        .collect();
    WeightFunction::new(config.clone(), values)
}

pub fn weight_of_directed(
    d: &DirectedMap,
    config: &Arc<PointConfiguration>,
) -> Result<WeightFunction> {
    let nx = config.left_len;
    let expect_doubled = matches!(config.kind, ConfigKind::BDirected)
        || (matches!(config.kind, ConfigKind::B | ConfigKind::BBar) && config.base.is_some());
    // map a left/right coordinate index to a domain/codomain index
    let left_of = |i: usize| -> usize { i };
    let right_of = |j: usize| -> usize { j - nx };
    let values = config
        .points
        .iter()
        .map(|(_, p)| {
            let (i, j) = pair_support(p);
            if i == j || (i < nx) == (j < nx) {
                // doubled points (and any same-side point) carry weight 0
                Rational::zero()
            } else {
                let (l, r) = if i < nx { (i, j) } else { (j, i) };
                let (di, dj) = if expect_doubled {
                    (left_of(l), right_of(r))
                } else {
                    (left_of(l), right_of(r))
                };
                -d.get(di, dj)
            }
        })
        .collect();
    // shape check
    let dn = d.domain().len();
    let cn = d.codomain().len();
    if dn != nx || cn != config.ground.len() - nx {
        return Err(Error::Usage(
            "directed map shape does not match the configuration".into(),
        ));
    }
    WeightFunction::new(config.clone(), values)
}

pub fn weight_of_diversity(
    delta: &Diversity,
    config: &Arc<PointConfiguration>,
) -> Result<WeightFunction> {
    let base = config
        .base
        .as_ref()
        .ok_or_else(|| Error::Usage("cube configuration lost its base set".into()))?;
    if base != delta.ground() {
        return Err(Error::Usage("diversity and cube base sets differ".into()));
    }
    let coord_masks: Vec<u64> = config
        .ground
        .labels()
        .iter()
        .map(|l| base.parse_subset_label(l))
        .collect::<Result<_>>()?;
    let values = config
        .points
        .iter()
        .map(|(_, p)| {
            let mut union = 0u64;
            for (i, c) in p.coords().iter().enumerate() {
                if c.is_positive() {
                    union |= coord_masks[i];
                }
            }
            -delta.get(union)
        })
        .collect();
    WeightFunction::new(config.clone(), values)
}

pub fn weight_of_kdissimilarity(
    d: &KDissimilarity,
    config: &Arc<PointConfiguration>,
) -> Result<WeightFunction> {
    if d.ground() != &config.ground {
        return Err(Error::Usage("map and configuration grounds differ".into()));
    }
    let values: Result<Vec<Rational>> = config
        .points
        .iter()
        .map(|(_, p)| {
            let mut mask = 0u64;
            for (i, c) in p.coords().iter().enumerate() {
                if c.is_positive() {
                    mask |= 1 << i;
                }
            }
            Ok(-d.get(mask)?)
        })
        .collect();
    WeightFunction::new(config.clone(), values?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::build_configuration;

    fn unit_metric(n: usize) -> SymmetricMap {
        SymmetricMap::from_fn(GroundSet::numbered(n), |i, j| {
            if i == j {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
    }

    #[test]
    fn unit_metric_is_valid() {
        let d = unit_metric(3);
        assert!(d.validate_metric().is_empty());
        assert!(d.validate_four_point().is_empty());
    }

    #[test]
    fn four_cycle_fails_four_point() {
        // cycle x-u-y-v with distance 1 on cycle edges, 2 on diagonals
        let g = GroundSet::new(["x", "y", "u", "v"]).unwrap();
        let d = SymmetricMap::from_fn(g, |i, j| {
            let diag = (i.min(j), i.max(j));
            if i == j {
                Rational::zero()
            } else if diag == (0, 1) || diag == (2, 3) {
                Rational::from_int(2)
            } else {
                Rational::one()
            }
        });
        assert!(d.validate_metric().is_empty());
        assert!(!d.validate_four_point().is_empty());
    }

    #[test]
    fn monotonicity_failure_is_an_axiom_failure() {
        let g = GroundSet::numbered(3);
        let mut delta = Diversity::zero(g.clone());
        delta.set(0b011, Rational::one());
        // strictly smaller value on a superset
        delta.set(0b111, Rational::zero());
        assert!(!delta.validate_monotone().is_empty());
        assert!(!delta.validate().is_empty());
    }

    #[test]
    fn normalisation_and_positive_part() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        let mut d = SymmetricMap::zero(g.clone());
        d.set(0, 0, Rational::from_int(2));
        d.set(0, 1, Rational::from_int(3));
        let (dp, shift) = normalize_symmetric(&d);
        assert_eq!(dp.get(0, 1), &Rational::from_int(2));
        assert!(dp.get(0, 0).is_zero() && dp.get(1, 1).is_zero());
        assert_eq!(shift.get("x").unwrap(), &Rational::one());
        assert_eq!(shift.get("y").unwrap(), &Rational::zero());
        // zero-diagonal maps are fixed points of the normalisation
        let u = unit_metric(2);
        let (up, us) = normalize_symmetric(&u);
        assert_eq!(up, u);
        assert!(us.is_zero());
        // positive part clamps only the negative entries
        let mut m = SymmetricMap::zero(g);
        m.set(0, 1, Rational::from_int(-1));
        let mp = positive_part(&m);
        assert!(mp.get(0, 1).is_zero());
        assert_eq!(positive_part(&u), u);
    }

    #[test]
    fn undirect_values() {
        let g = GroundSet::numbered(2);
        let mut d = DirectedMap::square(g.clone(), |_, _| Rational::zero());
        d.set(0, 1, Rational::one());
        let u = undirect(&d).unwrap();
        assert_eq!(u.get_labels("1@l", "2@r").unwrap(), &Rational::one());
        assert_eq!(u.get_labels("2@l", "1@r").unwrap(), &Rational::zero());
        assert_eq!(u.get_labels("1@l", "2@l").unwrap(), &Rational::zero());
        let nonzero = (0..4)
            .flat_map(|i| (i..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !u.get(i, j).is_zero())
            .count();
        assert_eq!(nonzero, 1);
    }

    /// The split diversity of a full split: 1 on subsets meeting both
    /// sides, 0 otherwise.
    fn split_diversity(g: &Arc<GroundSet>, a: u64) -> Diversity {
        let full = (1u64 << g.len()) - 1;
        let b = full & !a;
        Diversity::from_fn(g.clone(), move |m| {
            if m & a != 0 && m & b != 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    #[test]
    fn diversity_round_trips() {
        let g = GroundSet::numbered(3);
        let delta = split_diversity(&g, 0b001); // split {1 | 23}
        assert!(delta.validate().is_empty());
        let d = diversity_to_sym(&delta);
        // D({1},{2}) = delta({1,2}) = 1, D({1},{1}) = 0
        assert_eq!(d.get_labels("{1}", "{2}").unwrap(), &Rational::one());
        assert_eq!(d.get_labels("{1}", "{1}").unwrap(), &Rational::zero());
        let back = sym_to_diversity(&d, &g).unwrap();
        assert_eq!(back, delta);
        assert!(check_union_axioms(&d, &g).unwrap().is_empty());
        // a symmetric map violating the union identity does not round-trip
        let mut bad = d.clone();
        bad.set(0, 1, Rational::from_int(7));
        assert!(!check_union_axioms(&bad, &g).unwrap().is_empty());
        let bad_back = sym_to_diversity(&bad, &g).unwrap();
        assert_ne!(diversity_to_sym(&bad_back), bad);
    }

    #[test]
    fn diversity_distance_values() {
        let g = GroundSet::numbered(3);
        let delta = split_diversity(&g, 0b001);
        let d = diversity_distance(&delta);
        assert_eq!(d.get_labels("{1}", "{2}").unwrap(), &Rational::one());
        assert_eq!(d.get_labels("{2}", "{3}").unwrap(), &Rational::zero());
        assert_eq!(d.get_labels("{1,2}", "{3}").unwrap(), &Rational::zero());
        // zero whenever the arguments intersect
        assert_eq!(d.get_labels("{1}", "{1,2}").unwrap(), &Rational::zero());
        // matches positive_part of the normalisation of the associated map
        let via_sym = positive_part(&normalize_symmetric(&diversity_to_sym(&delta)).0);
        assert_eq!(d, via_sym);
    }

    #[test]
    fn weight_functions() {
        let g = GroundSet::numbered(3);
        let d = unit_metric(3);
        let cfg = build_configuration(crate::config::ConfigKind::A, &g, None, None).unwrap();
        let w = make_weight(&MapValue::Symmetric(d.clone()), &cfg).unwrap();
        for (i, (label, p)) in cfg.points.iter().enumerate() {
            let (a, b) = super::pair_support(p);
            if a == b {
                assert!(w.value(i).is_zero(), "doubled point {label}");
            } else {
                assert_eq!(w.value(i), &-Rational::one());
            }
        }
        // linearity in the map
        let e = unit_metric(3).scale(&Rational::from_int(3));
        let w_sum = make_weight(&MapValue::Symmetric(d.add(&e)), &cfg).unwrap();
        let w_e = make_weight(&MapValue::Symmetric(e), &cfg).unwrap();
        assert_eq!(w_sum.values, w.add(&w_e).values);
    }

    #[test]
    fn cube_weight_sign() {
        let g = GroundSet::numbered(3);
        let delta = split_diversity(&g, 0b001);
        let cube =
            build_configuration(crate::config::ConfigKind::Cube, &g, None, None).unwrap();
        let w = make_weight(&MapValue::Diversity(delta), &cube).unwrap();
        // the point e_{1} + e_{2} carries weight -delta({1,2}) = -1
        let i = cube
            .points
            .iter()
            .position(|(l, _)| l == "[{1};{2}]")
            .expect("point exists");
        assert_eq!(w.value(i), &-Rational::one());
    }
}
