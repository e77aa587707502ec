//! Point configurations: builders for the second-simplex, product, cube
//! and hypersimplex families, their edges, splits, split compatibility
//! and split weight functions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::linalg::{affine_dim, linear_rank, QMatrix};
use crate::lp::feasible_point;
use crate::num::Rational;
use crate::polyhedron::{dd_convert, facets_from_vrep, HPolyhedron, VRepresentation};
use crate::vector::{primitive_signed, QVector};

/// Which family a configuration belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigKind {
    /// All points `e_x + e_y` over a single set, diagonal included.
    A,
    /// As `A` but without the doubled points (second hypersimplex).
    ABar,
    /// Mixed points `e_x + e_y` for `x ∈ X`, `y ∈ Y`, plus all doubled
    /// points `2e_z`, `z ∈ X ∪ Y`.
    B,
    /// Only the mixed points: the vertex set of a product of simplices.
    BBar,
    /// `BBar` over two disjoint copies of one set.
    BDirected,
    /// All 0/1 points indexed by the nonempty subsets of a base set.
    Cube,
    /// All 0/1 points with coordinate sum `k`.
    Hypersimplex(usize),
}

impl ConfigKind {
    pub fn name(&self) -> String {
        match self {
            ConfigKind::A => "A".into(),
            ConfigKind::ABar => "A-bar".into(),
            ConfigKind::B => "B".into(),
            ConfigKind::BBar => "B-bar".into(),
            ConfigKind::BDirected => "B-directed".into(),
            ConfigKind::Cube => "cube".into(),
            ConfigKind::Hypersimplex(k) => format!("hypersimplex({k})"),
        }
    }
}

/// A finite labelled set of nonnegative integer points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration {
    pub kind: ConfigKind,
    /// Coordinate labels.
    pub ground: Arc<GroundSet>,
    /// Labelled points, in canonical construction order.
    pub points: Vec<(String, QVector)>,
    /// For the two-sided kinds: how many leading ground labels form `X`.
    pub left_len: usize,
    /// Base set for `Cube` (subsets index coordinates) and `BDirected`
    /// (the copied set).
    pub base: Option<Arc<GroundSet>>,
}

impl PointConfiguration {
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, i: usize) -> &QVector {
        &self.points[i].1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i].0
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|(l, _)| l == label)
    }

    pub fn left_labels(&self) -> &[String] {
        &self.ground.labels()[..self.left_len]
    }

    pub fn right_labels(&self) -> &[String] {
        &self.ground.labels()[self.left_len..]
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> isize {
        let pts: Vec<QVector> = self.points.iter().map(|(_, p)| p.clone()).collect();
        affine_dim(&pts)
    }

    /// Facet description of the convex hull of the points.
    pub fn hull(&self) -> HPolyhedron {
        let v = VRepresentation {
            ground: self.ground.clone(),
            vertices: self.points.iter().map(|(_, p)| p.clone()).collect(),
            rays: vec![],
            lineality: vec![],
        };
        facets_from_vrep(&v)
    }
}

fn pair_label(x: &str, y: &str) -> String {
    format!("{x},{y}")
}

fn two_unit(ground: &Arc<GroundSet>, i: usize, j: usize) -> QVector {
    let mut v = QVector::zeros(ground.clone());
    *v.coord_mut(i) = &*v.coord(i) + &Rational::one();
    *v.coord_mut(j) = &*v.coord(j) + &Rational::one();
    v
}

/// Build a configuration of the requested kind.
///
/// `B`/`BBar` need disjoint `x` and `y`; `BDirected` builds the two
/// copies itself; `Cube` takes the base set and indexes coordinates by
/// its nonempty subsets; `Hypersimplex(k)` needs `2 ≤ k ≤ |x|`.
pub fn build_configuration(
    kind: ConfigKind,
    x: &Arc<GroundSet>,
    y: Option<&Arc<GroundSet>>,
    k: Option<usize>,
) -> Result<Arc<PointConfiguration>> {
    match kind {
        ConfigKind::A | ConfigKind::ABar => {
            let n = x.len();
            let mut points = Vec::new();
            for i in 0..n {
                for j in i..n {
                    if i == j && kind == ConfigKind::ABar {
                        continue;
                    }
                    points.push((pair_label(x.label(i), x.label(j)), two_unit(x, i, j)));
                }
            }
            Ok(Arc::new(PointConfiguration {
                kind,
                ground: x.clone(),
                points,
                left_len: 0,
                base: None,
            }))
        }
        ConfigKind::B | ConfigKind::BBar => {
            let y = y.ok_or_else(|| Error::Usage("two-sided kinds need both sets".into()))?;
            let ground = GroundSet::union(x, y)?;
            let mut points = Vec::new();
            for i in 0..x.len() {
                for j in 0..y.len() {
                    let gi = ground.require(x.label(i))?;
                    let gj = ground.require(y.label(j))?;
                    points.push((
                        pair_label(x.label(i), y.label(j)),
                        two_unit(&ground, gi, gj),
                    ));
                }
            }
            if kind == ConfigKind::B {
                for z in 0..ground.len() {
                    points.push((
                        pair_label(ground.label(z), ground.label(z)),
                        two_unit(&ground, z, z),
                    ));
                }
            }
            Ok(Arc::new(PointConfiguration {
                kind,
                left_len: x.len(),
                ground,
                points,
                base: None,
            }))
        }
        ConfigKind::BDirected => {
            let (l, r, _) = x.doubled();
            let cfg = build_configuration(ConfigKind::BBar, &l, Some(&r), None)?;
            Ok(Arc::new(PointConfiguration {
                kind: ConfigKind::BDirected,
                ground: cfg.ground.clone(),
                points: cfg.points.clone(),
                left_len: cfg.left_len,
                base: Some(x.clone()),
            }))
        }
        ConfigKind::Cube => {
            if x.len() > 4 {
                return Err(Error::CapExceeded(format!(
                    "cube over {} elements has 2^{} points",
                    x.len(),
                    (1u64 << x.len()) - 1
                )));
            }
            let ground = x.nonempty_subsets();
            let n = ground.len();
            let mut points = Vec::new();
            for family in 0u64..(1 << n) {
                let mut v = QVector::zeros(ground.clone());
                let mut parts = Vec::new();
                for i in 0..n {
                    if family & (1 << i) != 0 {
                        *v.coord_mut(i) = Rational::one();
                        parts.push(ground.label(i).to_string());
                    }
                }
                points.push((format!("[{}]", parts.join(";")), v));
            }
            Ok(Arc::new(PointConfiguration {
                kind: ConfigKind::Cube,
                ground,
                points,
                left_len: 0,
                base: Some(x.clone()),
            }))
        }
        ConfigKind::Hypersimplex(k0) => {
            let kk = k.unwrap_or(k0);
            if !(2..=x.len()).contains(&kk) {
                return Err(Error::Usage(format!(
                    "hypersimplex parameter {kk} out of range 2..={}",
                    x.len()
                )));
            }
            let n = x.len();
            let mut points = Vec::new();
            for mask in 0u64..(1 << n) {
                if mask.count_ones() as usize != kk {
                    continue;
                }
                let mut v = QVector::zeros(x.clone());
                for i in 0..n {
                    if mask & (1 << i) != 0 {
                        *v.coord_mut(i) = Rational::one();
                    }
                }
                points.push((x.subset_label(mask), v));
            }
            Ok(Arc::new(PointConfiguration {
                kind: ConfigKind::Hypersimplex(kk),
                ground: x.clone(),
                points,
                left_len: 0,
                base: None,
            }))
        }
    }
}

/// Barred and unbarred configurations over the two disjoint copies of a
/// set: the first carries the joint envelope, the second the
/// nonnegative one.
pub fn build_directed_pair(
    x: &Arc<GroundSet>,
) -> Result<(Arc<PointConfiguration>, Arc<PointConfiguration>)> {
    let barred = build_configuration(ConfigKind::BDirected, x, None, None)?;
    let (l, r, _) = x.doubled();
    let full = build_configuration(ConfigKind::B, &l, Some(&r), None)?;
    let full = Arc::new(PointConfiguration {
        kind: ConfigKind::B,
        ground: full.ground.clone(),
        points: full.points.clone(),
        left_len: full.left_len,
        base: Some(x.clone()),
    });
    Ok((barred, full))
}

/// All 2-element faces of the configuration, as point index pairs,
/// decided by exact supporting-hyperplane LPs.
pub fn config_edges(config: &PointConfiguration) -> Vec<(usize, usize)> {
    let m = config.point_count();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            if pair_is_edge(config, i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn pair_is_edge(config: &PointConfiguration, i: usize, j: usize) -> bool {
    // variables (c, beta): require ⟨p_i, c⟩ = beta, ⟨p_j, c⟩ = beta and
    // beta - ⟨p_k, c⟩ >= 1 for every other point (margin 1 by scaling).
    let mut labels: Vec<String> = config.ground.labels().to_vec();
    labels.push("__beta".into());
    let lp_ground = GroundSet::new(labels).expect("nonempty");
    let lift = |p: &QVector, beta: i64| {
        let mut coords: Vec<Rational> = p.coords().to_vec();
        coords.push(Rational::from_int(beta));
        QVector::from_coords(lp_ground.clone(), coords)
    };
    let eqs = vec![
        (lift(config.point(i), -1), Rational::zero()),
        (lift(config.point(j), -1), Rational::zero()),
    ];
    let mut ineqs = Vec::new();
    for t in 0..config.point_count() {
        if t == i || t == j {
            continue;
        }
        ineqs.push((lift(&config.point(t).neg(), 1), Rational::one()));
    }
    feasible_point(&ineqs, &eqs, &lp_ground).is_some()
}

/// A split: a subdivision with exactly two maximal cells, stored with
/// its hyperplane and an optional combinatorial tag.
#[derive(Clone, Debug)]
pub struct ConfigSplit {
    /// Point indices weakly on the nonnegative side.
    pub plus: BTreeSet<usize>,
    /// Point indices weakly on the nonpositive side.
    pub minus: BTreeSet<usize>,
    /// Primitive integer hyperplane `⟨normal, x⟩ = rhs`, oriented so
    /// that `plus` is the nonnegative side.
    pub normal: QVector,
    pub rhs: Rational,
    pub tag: SplitTag,
}

/// Combinatorial description of where a split came from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SplitTag {
    None,
    /// Unordered pair of disjoint label sets of the base set.
    Partial {
        a: BTreeSet<String>,
        b: BTreeSet<String>,
    },
    /// Ordered pair of disjoint label sets of the base set.
    Directed {
        a: BTreeSet<String>,
        b: BTreeSet<String>,
    },
    /// Proper nonempty subsets of the two sides of a two-sided kind.
    TwoSided {
        a: BTreeSet<String>,
        b: BTreeSet<String>,
    },
}

impl ConfigSplit {
    /// Same split as a subdivision: equal unordered cell pair.
    pub fn same_cells(&self, other: &ConfigSplit) -> bool {
        (self.plus == other.plus && self.minus == other.minus)
            || (self.plus == other.minus && self.minus == other.plus)
    }

    pub fn display_tag(&self) -> String {
        fn join(s: &BTreeSet<String>) -> String {
            s.iter().cloned().collect::<Vec<_>>().join(",")
        }
        match &self.tag {
            SplitTag::None => "<untagged>".into(),
            SplitTag::Partial { a, b } => format!("{}|{}", join(a), join(b)),
            SplitTag::Directed { a, b } => format!("({})->({})", join(a), join(b)),
            SplitTag::TwoSided { a, b } => format!("{}~{}", join(a), join(b)),
        }
    }
}

/// Build the split determined by an oriented hyperplane.
pub fn split_from_hyperplane(
    config: &PointConfiguration,
    normal: QVector,
    rhs: Rational,
    tag: SplitTag,
) -> ConfigSplit {
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    for (i, (_, p)) in config.points.iter().enumerate() {
        let v = normal.dot(p);
        match v.cmp(&rhs) {
            Ordering::Greater => {
                plus.insert(i);
            }
            Ordering::Less => {
                minus.insert(i);
            }
            Ordering::Equal => {
                plus.insert(i);
                minus.insert(i);
            }
        }
    }
    ConfigSplit {
        plus,
        minus,
        normal,
        rhs,
        tag,
    }
}

/// Compare label subsets (as sorted index sequences) lexicographically.
fn cmp_mask_lex(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    while a != 0 && b != 0 {
        let ta = a.trailing_zeros();
        let tb = b.trailing_zeros();
        match ta.cmp(&tb) {
            Ordering::Equal => {
                a &= a - 1;
                b &= b - 1;
            }
            ord => return ord,
        }
    }
    a.count_ones().cmp(&b.count_ones())
}

fn mask_labels(ground: &GroundSet, mask: u64) -> BTreeSet<String> {
    (0..ground.len())
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| ground.label(i).to_string())
        .collect()
}

fn signed_indicator(
    ground: &Arc<GroundSet>,
    pos: &BTreeSet<String>,
    neg: &BTreeSet<String>,
) -> QVector {
    QVector::from_fn(ground.clone(), |l| {
        if pos.contains(l) {
            Rational::one()
        } else if neg.contains(l) {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Enumerate all splits of the configuration.
///
/// Closed forms exist for the `A`, `ABar`, `BBar` and `BDirected`
/// kinds; other kinds go through `enumerate_splits_brute`.
pub fn enumerate_splits(config: &PointConfiguration) -> Result<Vec<ConfigSplit>> {
    match config.kind {
        ConfigKind::A => {
            let base = config.ground.clone();
            let n = base.len();
            if n > 16 {
                return Err(Error::CapExceeded("too many partial splits".into()));
            }
            let mut out = Vec::new();
            for a in 1u64..(1 << n) {
                let rest = !a & ((1u64 << n) - 1);
                let mut b = rest;
                while b != 0 {
                    if cmp_mask_lex(a, b) == Ordering::Less {
                        let la = mask_labels(&base, a);
                        let lb = mask_labels(&base, b);
                        let normal = signed_indicator(&base, &la, &lb);
                        out.push(split_from_hyperplane(
                            config,
                            normal,
                            Rational::zero(),
                            SplitTag::Partial { a: la, b: lb },
                        ));
                    }
                    b = (b - 1) & rest;
                }
            }
            out.sort_by(|s, t| s.normal.lex_cmp(&t.normal));
            Ok(out)
        }
        ConfigKind::ABar => {
            // full splits with both sides of size >= 2
            let base = config.ground.clone();
            let n = base.len();
            if n > 16 {
                return Err(Error::CapExceeded("too many splits".into()));
            }
            let full = (1u64 << n) - 1;
            let mut out = Vec::new();
            for a in 1u64..full {
                let b = full & !a;
                if a.count_ones() < 2 || b.count_ones() < 2 {
                    continue;
                }
                if cmp_mask_lex(a, b) != Ordering::Less {
                    continue;
                }
                let la = mask_labels(&base, a);
                let lb = mask_labels(&base, b);
                let normal = signed_indicator(&base, &la, &lb);
                out.push(split_from_hyperplane(
                    config,
                    normal,
                    Rational::zero(),
                    SplitTag::Partial { a: la, b: lb },
                ));
            }
            out.sort_by(|s, t| s.normal.lex_cmp(&t.normal));
            Ok(out)
        }
        ConfigKind::BBar | ConfigKind::BDirected => {
            let nx = config.left_len;
            let ny = config.ground.len() - nx;
            if nx + ny > 16 {
                return Err(Error::CapExceeded("too many splits".into()));
            }
            let left_set = GroundSet::new(config.left_labels().to_vec())?;
            let right_set = GroundSet::new(config.right_labels().to_vec())?;
            let full_a = (1u64 << nx) - 1;
            let full_b = (1u64 << ny) - 1;
            let mut out = Vec::new();
            for a in 1u64..full_a {
                // canonical representative modulo simultaneous complement
                let ac = full_a & !a;
                if cmp_mask_lex(a, ac) == Ordering::Greater {
                    continue;
                }
                let half = a != ac && cmp_mask_lex(a, ac) == Ordering::Equal;
                debug_assert!(!half);
                for b in 1u64..full_b {
                    let la = mask_labels(&left_set, a);
                    let lb = mask_labels(&right_set, b);
                    let normal = signed_indicator(&config.ground, &la, &lb);
                    out.push(split_from_hyperplane(
                        config,
                        normal,
                        Rational::zero(),
                        SplitTag::TwoSided { a: la, b: lb },
                    ));
                }
            }
            out.sort_by(|s, t| s.normal.lex_cmp(&t.normal));
            Ok(out)
        }
        _ => Err(Error::Usage(format!(
            "no closed-form split enumeration for kind {}; use enumerate_splits_brute",
            config.kind.name()
        ))),
    }
}

/// Split of a doubled two-sided configuration induced by an ordered
/// pair of disjoint subsets of the base set: the hyperplane compares
/// the left-copy coordinates of `a` with the right-copy coordinates of
/// `b`.
pub fn split_from_directed_pair(
    config: &PointConfiguration,
    a: &BTreeSet<String>,
    b: &BTreeSet<String>,
) -> Result<ConfigSplit> {
    if a.is_empty() || b.is_empty() || a.intersection(b).next().is_some() {
        return Err(Error::Usage(
            "directed pair must consist of disjoint nonempty sets".into(),
        ));
    }
    let la: BTreeSet<String> = a.iter().map(|l| format!("{l}@l")).collect();
    let lb: BTreeSet<String> = b.iter().map(|l| format!("{l}@r")).collect();
    for l in la.iter().chain(&lb) {
        config.ground.require(l)?;
    }
    let normal = signed_indicator(&config.ground, &la, &lb);
    Ok(split_from_hyperplane(
        config,
        normal,
        Rational::zero(),
        SplitTag::Directed {
            a: a.clone(),
            b: b.clone(),
        },
    ))
}

/// Guarded brute-force split search: candidate hyperplanes are spanned
/// by affinely independent point subsets; each candidate is kept iff it
/// meets the relative interior and its two weak sides cover the hull.
pub fn enumerate_splits_brute(
    config: &PointConfiguration,
    guard: usize,
) -> Result<Vec<ConfigSplit>> {
    let pts: Vec<QVector> = config.points.iter().map(|(_, p)| p.clone()).collect();
    let dim = affine_dim(&pts);
    if dim < 1 {
        return Ok(Vec::new());
    }
    let d = dim as usize;
    let m = pts.len();
    let combos = binomial(m, d);
    if combos > guard as u128 {
        return Err(Error::CapExceeded(format!(
            "brute-force split search needs {combos} candidate subsets (guard {guard})"
        )));
    }
    let hull = config.hull();
    let mut seen: Vec<(QVector, Rational)> = Vec::new();
    let mut out: Vec<ConfigSplit> = Vec::new();
    for idx in combinations(m, d) {
        let Some((normal, rhs)) = hyperplane_through(config, &idx, &pts) else {
            continue;
        };
        if seen.iter().any(|(n, r)| n == &normal && r == &rhs) {
            continue;
        }
        seen.push((normal.clone(), rhs.clone()));
        let split = split_from_hyperplane(config, normal, rhs, SplitTag::None);
        if split_is_valid(config, &split, &hull) {
            out.push(split);
        }
    }
    out.sort_by(|s, t| s.normal.lex_cmp(&t.normal).then_with(|| s.rhs.cmp(&t.rhs)));
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k.min(n) {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > 1 << 60 {
            return r;
        }
    }
    r
}

/// Hyperplane (within the affine hull) through the given points, if
/// they span one; the normal is primitive with positive first nonzero
/// entry and lies in the direction space of the configuration.
fn hyperplane_through(
    config: &PointConfiguration,
    idx: &[usize],
    pts: &[QVector],
) -> Option<(QVector, Rational)> {
    let chosen: Vec<QVector> = idx.iter().map(|&i| pts[i].clone()).collect();
    let dim = affine_dim(pts);
    if affine_dim(&chosen) != dim - 1 {
        return None;
    }
    // a basis of the direction space of the whole configuration
    let base = &pts[0];
    let mut mrows: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| p.sub(base).coords().to_vec())
        .collect();
    let pivots = crate::linalg::row_reduce(&mut mrows);
    let mrows: Vec<QVector> = mrows[..pivots.len()]
        .iter()
        .map(|r| QVector::from_coords(config.ground.clone(), r.clone()))
        .collect();
    // find l = Σ beta_j M_j with ⟨l, q - q0⟩ = 0 for all chosen q
    let beta_ground = GroundSet::new((0..mrows.len()).map(|i| format!("b{i}"))).ok()?;
    let q0 = &chosen[0];
    let rows: Vec<QVector> = chosen[1..]
        .iter()
        .map(|q| {
            let dvec = q.sub(q0);
            QVector::from_coords(
                beta_ground.clone(),
                mrows.iter().map(|mj| mj.dot(&dvec)).collect(),
            )
        })
        .collect();
    let mat = QMatrix::new(beta_ground.clone(), rows).ok()?;
    let kernel = crate::linalg::kernel_basis(&mat);
    if kernel.len() != 1 {
        return None;
    }
    let beta = &kernel[0];
    let mut l = QVector::zeros(config.ground.clone());
    for (j, mj) in mrows.iter().enumerate() {
        if !beta.coord(j).is_zero() {
            l = l.add(&mj.scale(beta.coord(j)));
        }
    }
    if l.is_zero() {
        return None;
    }
    let (mut ints, _) = l.to_integers();
    primitive_signed(&mut ints);
    let l = QVector::from_integers(config.ground.clone(), &ints);
    let rhs = l.dot(q0);
    Some((l, rhs))
}

/// Full split validity: both open sides inhabited, the hyperplane meets
/// the relative interior of the hull, and the two weak sides cover the
/// hull (which also rules out separated edges).
pub fn split_is_valid(
    config: &PointConfiguration,
    split: &ConfigSplit,
    hull: &HPolyhedron,
) -> bool {
    let strict_plus = split.plus.difference(&split.minus).count();
    let strict_minus = split.minus.difference(&split.plus).count();
    if strict_plus == 0 || strict_minus == 0 {
        return false;
    }
    if !hyperplane_meets_relint(config, &split.normal, &split.rhs) {
        return false;
    }
    // coverage: every vertex of hull ∩ H must be a convex combination
    // of the configuration points lying on H
    let on_h: Vec<QVector> = split
        .plus
        .intersection(&split.minus)
        .map(|&i| config.point(i).clone())
        .collect();
    if on_h.is_empty() {
        return false;
    }
    let section = hull.with_equalities(&[(split.normal.clone(), split.rhs.clone())]);
    let v = dd_convert(&section);
    v.vertices.iter().all(|w| in_convex_hull(&on_h, w))
}

/// Does the hyperplane meet the relative interior of the hull?
pub fn hyperplane_meets_relint(
    config: &PointConfiguration,
    normal: &QVector,
    rhs: &Rational,
) -> bool {
    hyperplanes_meet_relint(config, &[(normal.clone(), rhs.clone())])
}

/// Do all the given hyperplanes meet the relative interior of the hull
/// simultaneously?  Exact LP over strictly positive convex weights.
pub fn hyperplanes_meet_relint(
    config: &PointConfiguration,
    hyperplanes: &[(QVector, Rational)],
) -> bool {
    let m = config.point_count();
    let lam_ground = GroundSet::new((0..m).map(|i| format!("l{i}"))).expect("nonempty");
    let mut ineqs = Vec::new();
    for i in 0..m {
        let u = QVector::unit(lam_ground.clone(), &format!("l{i}")).expect("label");
        ineqs.push((u, Rational::one()));
    }
    let mut eqs = Vec::new();
    for (normal, rhs) in hyperplanes {
        let row = QVector::from_coords(
            lam_ground.clone(),
            (0..m)
                .map(|i| &normal.dot(config.point(i)) - rhs)
                .collect(),
        );
        eqs.push((row, Rational::zero()));
    }
    feasible_point(&ineqs, &eqs, &lam_ground).is_some()
}

/// Exact membership of a point in the convex hull of a finite set.
pub fn in_convex_hull(points: &[QVector], target: &QVector) -> bool {
    let m = points.len();
    if m == 0 {
        return false;
    }
    let mu_ground = GroundSet::new((0..m).map(|i| format!("m{i}"))).expect("nonempty");
    let mut ineqs = Vec::new();
    for i in 0..m {
        let u = QVector::unit(mu_ground.clone(), &format!("m{i}")).expect("label");
        ineqs.push((u, Rational::zero()));
    }
    let mut eqs = Vec::new();
    let ones = QVector::from_fn(mu_ground.clone(), |_| Rational::one());
    eqs.push((ones, Rational::one()));
    for t in 0..target.dim() {
        let row = QVector::from_coords(
            mu_ground.clone(),
            (0..m).map(|i| points[i].coord(t).clone()).collect(),
        );
        eqs.push((row, target.coord(t).clone()));
    }
    feasible_point(&ineqs, &eqs, &mu_ground).is_some()
}

/// Method selector for split compatibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatMethod {
    Geometric,
    Combinatorial,
}

/// Are two splits of the same configuration compatible?
///
/// The geometric method decides whether the two split hyperplanes meet
/// inside the relative interior of the hull (empty intersection means
/// compatible); the combinatorial method evaluates the containment
/// condition lists on the tags.
pub fn splits_compatible(
    config: &PointConfiguration,
    s: &ConfigSplit,
    t: &ConfigSplit,
    method: CompatMethod,
) -> Result<bool> {
    match method {
        CompatMethod::Geometric => Ok(!hyperplanes_meet_relint(
            config,
            &[
                (s.normal.clone(), s.rhs.clone()),
                (t.normal.clone(), t.rhs.clone()),
            ],
        )),
        CompatMethod::Combinatorial => compatible_by_tags(config, s, t),
    }
}

fn compatible_by_tags(
    config: &PointConfiguration,
    s: &ConfigSplit,
    t: &ConfigSplit,
) -> Result<bool> {
    match (&s.tag, &t.tag) {
        (SplitTag::Partial { a, b }, SplitTag::Partial { a: c, b: d }) => {
            Ok(partial_splits_compatible(a, b, c, d))
        }
        (SplitTag::TwoSided { a, b }, SplitTag::TwoSided { a: c, b: d }) => {
            let x: BTreeSet<String> = config.left_labels().iter().cloned().collect();
            let y: BTreeSet<String> = config.right_labels().iter().cloned().collect();
            Ok(two_sided_splits_compatible(&x, &y, a, b, c, d))
        }
        (SplitTag::Directed { a, b }, SplitTag::Directed { a: c, b: d }) => {
            let x: BTreeSet<String> = config
                .base
                .as_ref()
                .map(|g| g.iter().map(str::to_owned).collect())
                .ok_or_else(|| Error::Usage("directed tags need a base set".into()))?;
            Ok(directed_partial_splits_compatible(&x, a, b, c, d))
        }
        _ => Err(Error::Usage(
            "combinatorial compatibility needs matching tags".into(),
        )),
    }
}

/// Containment condition list for unordered partial splits.
pub fn partial_splits_compatible(
    a: &BTreeSet<String>,
    b: &BTreeSet<String>,
    c: &BTreeSet<String>,
    d: &BTreeSet<String>,
) -> bool {
    (a.is_subset(c) && b.is_superset(d))
        || (a.is_subset(d) && b.is_superset(c))
        || (a.is_superset(c) && b.is_subset(d))
        || (a.is_superset(d) && b.is_subset(c))
}

/// Condition list for splits of a two-sided configuration given by
/// `(A ⊊ X, B ⊊ Y)` pairs, stated up to simultaneous complements:
/// nesting either way, or the two complement-nesting cases.
pub fn two_sided_splits_compatible(
    x: &BTreeSet<String>,
    y: &BTreeSet<String>,
    a: &BTreeSet<String>,
    b: &BTreeSet<String>,
    c: &BTreeSet<String>,
    d: &BTreeSet<String>,
) -> bool {
    let disj = |p: &BTreeSet<String>, q: &BTreeSet<String>| p.intersection(q).next().is_none();
    let cover = |p: &BTreeSet<String>, q: &BTreeSet<String>, univ: &BTreeSet<String>| {
        univ.iter().all(|e| p.contains(e) || q.contains(e))
    };
    (a.is_subset(c) && b.is_superset(d))
        || (disj(a, c) && cover(b, d, y))
        || (a.is_superset(c) && b.is_subset(d))
        || (cover(a, c, x) && disj(b, d))
}

/// Condition list for ordered pairs of disjoint subsets of one set.
pub fn directed_partial_splits_compatible(
    x: &BTreeSet<String>,
    a: &BTreeSet<String>,
    b: &BTreeSet<String>,
    c: &BTreeSet<String>,
    d: &BTreeSet<String>,
) -> bool {
    two_sided_splits_compatible(x, x, a, b, c, d)
}

/// The canonical lifting weight of a split: `w(p) = max(0, ⟨l, p⟩ - c)`
/// with the primitive hyperplane oriented positive on the plus side.
pub fn split_weight(config: &Arc<PointConfiguration>, split: &ConfigSplit) -> WeightFunction {
    let values = config
        .points
        .iter()
        .map(|(_, p)| {
            let v = &split.normal.dot(p) - &split.rhs;
            if v.is_positive() {
                v
            } else {
                Rational::zero()
            }
        })
        .collect();
    WeightFunction {
        config: config.clone(),
        values,
    }
}

/// A rational weight per configuration point.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightFunction {
    pub config: Arc<PointConfiguration>,
    pub values: Vec<Rational>,
}

impl WeightFunction {
    pub fn new(config: Arc<PointConfiguration>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != config.point_count() {
            return Err(Error::Dimension(
                "weight function must be total on the configuration".into(),
            ));
        }
        Ok(WeightFunction { config, values })
    }

    pub fn zero(config: Arc<PointConfiguration>) -> Self {
        let values = vec![Rational::zero(); config.point_count()];
        WeightFunction { config, values }
    }

    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn add(&self, other: &WeightFunction) -> WeightFunction {
        assert_eq!(self.values.len(), other.values.len());
        WeightFunction {
            config: self.config.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> WeightFunction {
        WeightFunction {
            config: self.config.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

/// Rank of the configuration's linear span (tests use this to check
/// affine-hull codimensions).
pub fn linear_span_rank(config: &PointConfiguration) -> usize {
    let pts: Vec<QVector> = config.points.iter().map(|(_, p)| p.clone()).collect();
    linear_rank(&config.ground, &pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_config(n: usize) -> Arc<PointConfiguration> {
        build_configuration(ConfigKind::A, &GroundSet::numbered(n), None, None).unwrap()
    }

    #[test]
    fn build_counts() {
        assert_eq!(a_config(3).point_count(), 6);
        let abar4 =
            build_configuration(ConfigKind::ABar, &GroundSet::numbered(4), None, None).unwrap();
        assert_eq!(abar4.point_count(), 6);
        // octahedron: 3-dimensional with 8 facets
        assert_eq!(abar4.affine_dim(), 3);
        assert_eq!(abar4.hull().inequalities().len(), 8);
        let y2 = GroundSet::numbered(2);
        let cube = build_configuration(ConfigKind::Cube, &y2, None, None).unwrap();
        assert_eq!(cube.ground.len(), 3);
        assert_eq!(cube.point_count(), 8);
        assert!(build_configuration(ConfigKind::Cube, &GroundSet::numbered(5), None, None)
            .is_err());
    }

    #[test]
    fn hypersimplex_counts() {
        let x5 = GroundSet::numbered(5);
        let h = build_configuration(ConfigKind::Hypersimplex(3), &x5, None, None).unwrap();
        assert_eq!(h.point_count(), 10);
        assert!(
            build_configuration(ConfigKind::Hypersimplex(1), &x5, None, None).is_err()
        );
    }

    #[test]
    fn directed_pair_shapes() {
        let x2 = GroundSet::numbered(2);
        let (barred, full) = build_directed_pair(&x2).unwrap();
        assert_eq!(barred.point_count(), 4); // a square
        assert_eq!(full.point_count(), 8); // square points + 4 doubled
        assert_eq!(barred.ground.len(), 4);
        assert_eq!(barred.left_len, 2);
    }

    #[test]
    fn edges_of_midpoint_triangle() {
        let abar3 =
            build_configuration(ConfigKind::ABar, &GroundSet::numbered(3), None, None).unwrap();
        assert_eq!(config_edges(&abar3).len(), 3);
    }

    #[test]
    fn edges_of_square_exclude_diagonals() {
        let x = GroundSet::new(["x1", "x2"]).unwrap();
        let y = GroundSet::new(["y1", "y2"]).unwrap();
        let sq = build_configuration(ConfigKind::BBar, &x, Some(&y), None).unwrap();
        let edges = config_edges(&sq);
        assert_eq!(edges.len(), 4);
        // adjacency iff the two points share a coordinate
        for (i, j) in edges {
            let a = sq.label(i);
            let b = sq.label(j);
            let (ax, ay) = a.split_once(',').unwrap();
            let (bx, by) = b.split_once(',').unwrap();
            assert!(ax == bx || ay == by, "{a} and {b} must share a side");
        }
    }

    #[test]
    fn product_adjacency_rule_at_3x2() {
        let x = GroundSet::new(["x1", "x2", "x3"]).unwrap();
        let y = GroundSet::new(["y1", "y2"]).unwrap();
        let cfg = build_configuration(ConfigKind::BBar, &x, Some(&y), None).unwrap();
        let edges = config_edges(&cfg);
        for i in 0..cfg.point_count() {
            for j in (i + 1)..cfg.point_count() {
                let (ax, ay) = cfg.label(i).split_once(',').unwrap();
                let (bx, by) = cfg.label(j).split_once(',').unwrap();
                let expected = ax == bx || ay == by;
                assert_eq!(edges.contains(&(i, j)), expected);
            }
        }
    }

    #[test]
    fn split_counts_small() {
        let a3 = a_config(3);
        assert_eq!(enumerate_splits(&a3).unwrap().len(), 6);
        let a4 = a_config(4);
        assert_eq!(enumerate_splits(&a4).unwrap().len(), 25);
        let x = GroundSet::new(["x1", "x2"]).unwrap();
        let y = GroundSet::new(["y1", "y2"]).unwrap();
        let sq = build_configuration(ConfigKind::BBar, &x, Some(&y), None).unwrap();
        assert_eq!(enumerate_splits(&sq).unwrap().len(), 2);
    }

    #[test]
    fn octahedron_has_three_splits() {
        let abar4 =
            build_configuration(ConfigKind::ABar, &GroundSet::numbered(4), None, None).unwrap();
        let splits = enumerate_splits(&abar4).unwrap();
        assert_eq!(splits.len(), 3);
        let brute = enumerate_splits_brute(&abar4, 100_000).unwrap();
        assert_eq!(brute.len(), 3);
        for s in &splits {
            assert!(brute.iter().any(|t| s.same_cells(t)));
        }
    }

    #[test]
    fn brute_force_matches_closed_form_a3() {
        let a3 = a_config(3);
        let splits = enumerate_splits(&a3).unwrap();
        let brute = enumerate_splits_brute(&a3, 100_000).unwrap();
        assert_eq!(brute.len(), splits.len());
        for s in &splits {
            assert!(brute.iter().any(|t| s.same_cells(t)));
        }
    }

    #[test]
    fn enumerated_splits_are_valid() {
        let a3 = a_config(3);
        let hull = a3.hull();
        let edges = config_edges(&a3);
        for s in enumerate_splits(&a3).unwrap() {
            assert!(split_is_valid(&a3, &s, &hull));
            assert!(hyperplane_meets_relint(&a3, &s.normal, &s.rhs));
            for &(i, j) in &edges {
                let vi = &s.normal.dot(a3.point(i)) - &s.rhs;
                let vj = &s.normal.dot(a3.point(j)) - &s.rhs;
                assert!(
                    !(vi.is_positive() && vj.is_negative())
                        && !(vi.is_negative() && vj.is_positive()),
                    "split separates an edge"
                );
            }
        }
    }

    fn tag_labels(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn compatibility_examples() {
        let a3 = a_config(3);
        let splits = enumerate_splits(&a3).unwrap();
        let find = |a: &[&str], b: &[&str]| {
            let (a, b) = (tag_labels(a), tag_labels(b));
            splits
                .iter()
                .find(|s| {
                    s.tag == SplitTag::Partial { a: a.clone(), b: b.clone() }
                        || s.tag == SplitTag::Partial { a: b.clone(), b: a.clone() }
                })
                .expect("split exists")
                .clone()
        };
        let s12 = find(&["1"], &["2"]);
        let s1_23 = find(&["1"], &["2", "3"]);
        let s23 = find(&["2"], &["3"]);
        for method in [CompatMethod::Geometric, CompatMethod::Combinatorial] {
            assert!(splits_compatible(&a3, &s12, &s1_23, method).unwrap());
            assert!(!splits_compatible(&a3, &s12, &s23, method).unwrap());
        }
        // the two diagonal splits of the square cross at its center
        let x = GroundSet::new(["x1", "x2"]).unwrap();
        let y = GroundSet::new(["y1", "y2"]).unwrap();
        let sq = build_configuration(ConfigKind::BBar, &x, Some(&y), None).unwrap();
        let diag = enumerate_splits(&sq).unwrap();
        assert_eq!(diag.len(), 2);
        for method in [CompatMethod::Geometric, CompatMethod::Combinatorial] {
            assert!(!splits_compatible(&sq, &diag[0], &diag[1], method).unwrap());
        }
    }

    #[test]
    fn split_weight_values() {
        let a3 = a_config(3);
        let splits = enumerate_splits(&a3).unwrap();
        let s = splits
            .iter()
            .find(|s| {
                s.tag
                    == SplitTag::Partial {
                        a: tag_labels(&["1"]),
                        b: tag_labels(&["2", "3"]),
                    }
            })
            .unwrap();
        let w = split_weight(&a3, s);
        // points in construction order: 1,1  1,2  1,3  2,2  2,3  3,3
        let expect: Vec<Rational> = [2, 0, 0, 0, 0, 0]
            .iter()
            .map(|&v| Rational::from_int(v))
            .collect();
        assert_eq!(w.values, expect);
        // the weight vanishes on the minus side
        for &i in s.minus.difference(&s.plus) {
            assert!(w.value(i).is_zero());
        }
    }

    #[test]
    fn square_diagonal_weight() {
        let x = GroundSet::new(["x1", "x2"]).unwrap();
        let y = GroundSet::new(["y1", "y2"]).unwrap();
        let sq = build_configuration(ConfigKind::BBar, &x, Some(&y), None).unwrap();
        let splits = enumerate_splits(&sq).unwrap();
        for s in &splits {
            let w = split_weight(&sq, s);
            let nonzero: Vec<usize> = (0..4).filter(|&i| !w.value(i).is_zero()).collect();
            assert_eq!(nonzero.len(), 1, "one vertex strictly across the diagonal");
            assert_eq!(w.value(nonzero[0]), &Rational::one());
        }
    }

    #[test]
    fn codimension_of_affine_hulls() {
        // one linear relation for the single-set kinds and the hypersimplex
        let a3 = a_config(3);
        assert_eq!(a3.affine_dim(), 2);
        let h = build_configuration(ConfigKind::Hypersimplex(2), &GroundSet::numbered(4), None, None)
            .unwrap();
        assert_eq!(h.affine_dim(), 3);
        // the product of simplices has codimension 2
        let x = GroundSet::new(["x1", "x2", "x3"]).unwrap();
        let y = GroundSet::new(["y1", "y2"]).unwrap();
        let bb = build_configuration(ConfigKind::BBar, &x, Some(&y), None).unwrap();
        assert_eq!(bb.affine_dim(), 3);
        // the cube spans its space
        let cube = build_configuration(ConfigKind::Cube, &GroundSet::numbered(2), None, None)
            .unwrap();
        assert_eq!(cube.affine_dim(), 3);
    }
}
