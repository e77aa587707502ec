//! The tight-span engine: envelopes of weighted point configurations,
//! their bounded-face complexes, regular subdivisions of the
//! configurations via lifted polyhedra, the duality between the two,
//! tree detection and exact split decomposition, plus the wrappers that
//! attach the right configuration to each map family.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::config::{
    build_configuration, build_directed_pair, enumerate_splits, enumerate_splits_brute,
    hyperplanes_meet_relint, split_from_directed_pair, split_weight, ConfigKind, ConfigSplit,
    PointConfiguration, WeightFunction,
};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::linalg::QMatrix;
use crate::maps::{diversity_to_sym, make_weight, MapValue};
use crate::num::Rational;
use crate::polyhedron::{
    complex_from_lattice, dd_convert, face_lattice, facets_from_vrep, is_bounded_from_below,
    is_minimal_element, BoundedComplex, FaceLattice, HPolyhedron, VRepresentation,
};
use crate::vector::QVector;

/// Knobs for the enumeration core.
#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Above this ambient dimension only LP predicates are offered.
    pub dim_cap: usize,
    /// Hard bound on the number of inequalities one enumeration may see.
    pub row_cap: usize,
    /// Check every complex vertex against the minimality LP when the
    /// envelope is bounded from below.  `None` = only at desk scale.
    pub verify_minimality: Option<bool>,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            dim_cap: crate::polyhedron::DEFAULT_DIM_CAP,
            row_cap: 40_000,
            verify_minimality: None,
        }
    }
}

/// The envelope polyhedron of a weighted configuration: one inequality
/// `⟨a, x⟩ ≥ -w(a)` per configuration point, in configuration order.
pub fn envelope(w: &WeightFunction) -> HPolyhedron {
    let config = &w.config;
    let ineqs = config
        .points
        .iter()
        .zip(&w.values)
        .map(|((_, p), wv)| (p.clone(), -wv))
        .collect();
    HPolyhedron::new(config.ground.clone(), ineqs, vec![])
}

/// A computed tight-span: the complex of bounded faces of the envelope.
///
/// When the envelope has a lineality space (this happens exactly when
/// the configuration does not span the ambient space linearly), the
/// complex describes the canonical slice by the orthogonal complement,
/// and the lineality generators are recorded.
#[derive(Clone, Debug)]
pub struct TightSpan {
    pub config: Arc<PointConfiguration>,
    pub weight: WeightFunction,
    pub envelope: HPolyhedron,
    /// Envelope with the slice equalities added (equals `envelope` when
    /// the envelope is pointed).
    pub sliced: HPolyhedron,
    pub vrep: VRepresentation,
    pub lattice: FaceLattice,
    pub complex: BoundedComplex,
    pub lineality: Vec<QVector>,
}

impl TightSpan {
    pub fn dim(&self) -> isize {
        self.complex.dim()
    }
}

fn check_caps(config: &PointConfiguration, opts: &EngineOptions) -> Result<()> {
    if config.ground.len() > opts.dim_cap {
        return Err(Error::CapExceeded(format!(
            "dimension {} exceeds the enumeration cap {}; only LP predicates are available (raise the cap to override)",
            config.ground.len(),
            opts.dim_cap
        )));
    }
    if config.point_count() > opts.row_cap {
        return Err(Error::CapExceeded(format!(
            "{} inequalities exceed the row cap {}",
            config.point_count(),
            opts.row_cap
        )));
    }
    Ok(())
}

/// Compute the tight-span of a weighted configuration.
pub fn tight_span(w: &WeightFunction, opts: &EngineOptions) -> Result<TightSpan> {
    let config = w.config.clone();
    check_caps(&config, opts)?;
    let env = envelope(w);
    let v0 = dd_convert(&env);
    let lineality = v0.lineality.clone();
    let (sliced, vrep) = if lineality.is_empty() {
        (env.clone(), v0)
    } else {
        let eqs: Vec<(QVector, Rational)> = lineality
            .iter()
            .map(|l| (l.clone(), Rational::zero()))
            .collect();
        let sliced = env.with_equalities(&eqs);
        let v = dd_convert(&sliced);
        (sliced, v)
    };
    let (lattice, complex) = if vrep.is_empty() {
        (
            FaceLattice { faces: Vec::new() },
            BoundedComplex::empty(),
        )
    } else {
        let lattice = face_lattice(&sliced, &vrep);
        let complex = complex_from_lattice(&lattice, &vrep);
        (lattice, complex)
    };
    let ts = TightSpan {
        config,
        weight: w.clone(),
        envelope: env,
        sliced,
        vrep,
        lattice,
        complex,
        lineality,
    };
    let verify = opts
        .verify_minimality
        .unwrap_or(ts.config.ground.len() <= 8 && ts.config.point_count() <= 40);
    if verify {
        verify_minimality(&ts)?;
    }
    Ok(ts)
}

/// When the envelope is bounded from below, its bounded-face vertices
/// must be exactly the envelope vertices that pass the minimality LP.
pub fn verify_minimality(ts: &TightSpan) -> Result<()> {
    if !is_bounded_from_below(&ts.vrep) {
        return Ok(());
    }
    for v in &ts.vrep.vertices {
        if !is_minimal_element(&ts.envelope, v)? {
            return Err(Error::Internal(format!(
                "bounded-face vertex {v:?} is not a minimal element"
            )));
        }
    }
    Ok(())
}

/// `w'(a) = w(a) + ⟨a, v⟩`.
pub fn shift_weight(w: &WeightFunction, v: &QVector) -> WeightFunction {
    let values = w
        .config
        .points
        .iter()
        .zip(&w.values)
        .map(|((_, p), wv)| wv + &p.dot(v))
        .collect();
    WeightFunction {
        config: w.config.clone(),
        values,
    }
}

/// Exact check of the shift identity: the tight-span of `w` equals the
/// tight-span of `w + ⟨·, v⟩` translated by `v`, compared on vertex
/// sets.
pub fn check_shift(w: &WeightFunction, v: &QVector, opts: &EngineOptions) -> Result<bool> {
    let t0 = tight_span(w, opts)?;
    let shifted = shift_weight(w, v);
    let t1 = tight_span(&shifted, opts)?;
    let mut translated: Vec<QVector> = t1.vrep.vertices.iter().map(|x| x.add(v)).collect();
    translated.sort_by(|a, b| a.lex_cmp(b));
    Ok(translated == t0.vrep.vertices)
}

/// One cell of a subdivision: a subconfiguration, closed under faces
/// within the cell list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionCell {
    pub points: BTreeSet<usize>,
    pub dim: isize,
    pub maximal: bool,
    /// Not entirely contained in the boundary of the hull.
    pub interior: bool,
}

/// The regular subdivision induced by a weight function: projections of
/// the bounded faces of the lifted polyhedron
/// `conv{(w(a), a)} + ray(1, 0)`.
#[derive(Clone, Debug)]
pub struct RegularSubdivision {
    pub config: Arc<PointConfiguration>,
    pub weight: WeightFunction,
    pub cells: Vec<SubdivisionCell>,
}

impl RegularSubdivision {
    pub fn maximal_cells(&self) -> impl Iterator<Item = &SubdivisionCell> {
        self.cells.iter().filter(|c| c.maximal)
    }

    pub fn interior_cells(&self) -> impl Iterator<Item = &SubdivisionCell> {
        self.cells.iter().filter(|c| c.interior)
    }

    /// Does every maximal cell lie weakly on one side of the split
    /// hyperplane?
    pub fn refines_split(&self, split: &ConfigSplit) -> bool {
        self.maximal_cells().all(|cell| {
            let mut pos = false;
            let mut neg = false;
            for &i in &cell.points {
                let v = &split.normal.dot(self.config.point(i)) - &split.rhs;
                if v.is_positive() {
                    pos = true;
                } else if v.is_negative() {
                    neg = true;
                }
            }
            !(pos && neg)
        })
    }
}

pub fn regular_subdivision(w: &WeightFunction, opts: &EngineOptions) -> Result<RegularSubdivision> {
    let config = w.config.clone();
    check_caps(&config, opts)?;
    let mut labels = vec!["__h".to_string()];
    labels.extend(config.ground.labels().iter().cloned());
    let lift_ground = GroundSet::new(labels)?;
    let lift = |wv: &Rational, p: &QVector| {
        let mut coords = Vec::with_capacity(lift_ground.len());
        coords.push(wv.clone());
        coords.extend(p.coords().iter().cloned());
        QVector::from_coords(lift_ground.clone(), coords)
    };
    let lifts: Vec<QVector> = config
        .points
        .iter()
        .zip(&w.values)
        .map(|((_, p), wv)| lift(wv, p))
        .collect();
    let mut up = QVector::zeros(lift_ground.clone());
    *up.coord_mut(0) = Rational::one();
    let vrep_gen = VRepresentation {
        ground: lift_ground.clone(),
        vertices: lifts.clone(),
        rays: vec![up],
        lineality: vec![],
    };
    let h = facets_from_vrep(&vrep_gen);
    let v = dd_convert(&h);
    let lattice = face_lattice(&h, &v);

    // a configuration point belongs to a face iff its lift is tight on
    // all of the face's active inequalities
    let tight_table: Vec<BTreeSet<usize>> = lifts
        .iter()
        .map(|lp| {
            h.inequalities()
                .iter()
                .enumerate()
                .filter(|(_, (a, b))| &a.dot(lp) == b)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let hull = config.hull();
    let hull_dim = config.affine_dim();
    let mut cells: Vec<SubdivisionCell> = Vec::new();
    for face in lattice.faces.iter().filter(|f| f.ray_ids.is_empty()) {
        let points: BTreeSet<usize> = (0..config.point_count())
            .filter(|&i| face.active.iter().all(|a| tight_table[i].contains(a)))
            .collect();
        debug_assert!(!points.is_empty());
        let pts: Vec<QVector> = points.iter().map(|&i| config.point(i).clone()).collect();
        let dim = crate::linalg::affine_dim(&pts);
        let interior = !hull.inequalities().iter().any(|(a, b)| {
            points.iter().all(|&i| &a.dot(config.point(i)) == b)
        });
        if cells.iter().any(|c| c.points == points) {
            continue;
        }
        cells.push(SubdivisionCell {
            points,
            dim,
            maximal: dim == hull_dim,
            interior,
        });
    }
    cells.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.points.cmp(&b.points)));
    Ok(RegularSubdivision {
        config,
        weight: w.clone(),
        cells,
    })
}

/// Duality report: the bijection between bounded envelope faces and
/// interior subdivision cells, with dimensions reversed.
#[derive(Clone, Debug)]
pub struct DualityReport {
    /// (complex face index, subdivision cell index) matched pairs.
    pub pairs: Vec<(usize, usize)>,
    pub max_tight_span_faces: usize,
    pub min_interior_cells: usize,
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Check the poset anti-isomorphism between the tight-span and the
/// interior part of the regular subdivision.  A failure indicates an
/// implementation bug, not bad input.
pub fn verify_duality(w: &WeightFunction, opts: &EngineOptions) -> Result<DualityReport> {
    let ts = tight_span(w, opts)?;
    let sd = regular_subdivision(w, opts)?;
    let config = &w.config;
    let hull_dim = config.affine_dim();
    let mut failures = Vec::new();

    // the tight inequality set of a bounded face, by construction, is a
    // set of configuration point indices
    let cell_of_face = |fi: usize| -> BTreeSet<usize> {
        ts.complex.faces[fi].active.clone()
    };

    let interior: Vec<(usize, &SubdivisionCell)> = sd
        .cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.interior)
        .collect();

    let mut pairs = Vec::new();
    for fi in 0..ts.complex.faces.len() {
        let cell = cell_of_face(fi);
        match interior.iter().find(|(_, c)| c.points == cell) {
            Some((ci, c)) => {
                if ts.complex.faces[fi].dim + c.dim != hull_dim {
                    failures.push(format!(
                        "dimensions do not complement: face dim {} cell dim {}",
                        ts.complex.faces[fi].dim, c.dim
                    ));
                }
                pairs.push((fi, *ci));
            }
            None => failures.push(format!(
                "no interior cell matches the tight set {cell:?}"
            )),
        }
    }
    // bijectivity
    let mut seen: Vec<usize> = pairs.iter().map(|&(_, c)| c).collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != pairs.len() {
        failures.push("tight-set map is not injective".into());
    }
    if seen.len() != interior.len() {
        failures.push(format!(
            "tight-set map is not onto: {} bounded faces vs {} interior cells",
            pairs.len(),
            interior.len()
        ));
    }
    // inclusion reversal
    for &(f1, c1) in &pairs {
        for &(f2, c2) in &pairs {
            let fsub = ts.complex.faces[f1]
                .vertex_ids
                .is_subset(&ts.complex.faces[f2].vertex_ids);
            let csup = sd.cells[c2].points.is_subset(&sd.cells[c1].points);
            if fsub != csup {
                failures.push(format!(
                    "inclusion not reversed between faces {f1} and {f2}"
                ));
            }
        }
    }
    let max_faces = {
        let faces = &ts.complex.faces;
        faces
            .iter()
            .enumerate()
            .filter(|(i, f)| {
                !faces
                    .iter()
                    .enumerate()
                    .any(|(j, g)| *i != j && f.vertex_ids.is_subset(&g.vertex_ids) && f.vertex_ids != g.vertex_ids)
            })
            .count()
    };
    let min_interior = interior
        .iter()
        .filter(|(_, c)| {
            !interior
                .iter()
                .any(|(_, d)| d.points != c.points && d.points.is_subset(&c.points))
        })
        .count();
    if max_faces != min_interior {
        failures.push(format!(
            "{max_faces} maximal tight-span faces vs {min_interior} minimal interior cells"
        ));
    }
    Ok(DualityReport {
        pairs,
        max_tight_span_faces: max_faces,
        min_interior_cells: min_interior,
        ok: failures.is_empty(),
        failures,
    })
}

/// A one-dimensional tight-span as a graph with exact edge data.
#[derive(Clone, Debug)]
pub struct ExtractedTree {
    pub vertices: Vec<QVector>,
    /// (endpoint ids, difference vector, max-norm length)
    pub edges: Vec<(usize, usize, QVector, Rational)>,
}

/// Extract the tree when every bounded face has dimension at most one.
/// Connectivity and acyclicity are asserted; they are guaranteed for
/// bounded-face complexes of envelopes.
pub fn is_tree(ts: &TightSpan) -> Result<Option<ExtractedTree>> {
    if ts.complex.dim() > 1 {
        return Ok(None);
    }
    let n = ts.complex.vertices.len();
    if n == 0 {
        return Ok(None);
    }
    let edges: Vec<(usize, usize, QVector, Rational)> = ts
        .complex
        .edges
        .iter()
        .map(|(a, b, diff)| (*a, *b, diff.clone(), diff.max_norm()))
        .collect();
    if edges.len() + 1 != n {
        return Err(Error::Internal(format!(
            "1-dimensional complex with {n} vertices and {} edges is not a tree",
            edges.len()
        )));
    }
    // connectivity via union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for (a, b, _, _) in &edges {
        let ra = find(&mut parent, *a);
        let rb = find(&mut parent, *b);
        if ra == rb {
            return Err(Error::Internal("cycle in a 1-dimensional tight-span".into()));
        }
        parent[ra] = rb;
    }
    Ok(Some(ExtractedTree {
        vertices: ts.complex.vertices.clone(),
        edges,
    }))
}

/// An exact decomposition of a weight function into split weights plus
/// an affine function.
#[derive(Clone, Debug)]
pub struct SplitDecomposition {
    pub splits: Vec<ConfigSplit>,
    pub alpha: Vec<Rational>,
    pub affine_vector: QVector,
    pub affine_constant: Rational,
}

impl SplitDecomposition {
    /// Evaluate `Σ α(T) w_T + affine` at a configuration point.
    pub fn evaluate(&self, config: &Arc<PointConfiguration>, i: usize) -> Rational {
        let p = config.point(i);
        let mut acc = &p.dot(&self.affine_vector) + &self.affine_constant;
        for (split, a) in self.splits.iter().zip(&self.alpha) {
            let v = &split.normal.dot(p) - &split.rhs;
            if v.is_positive() {
                acc += &(&v * a);
            }
        }
        acc
    }
}

/// Candidate splits for a configuration, used when collecting the
/// splits refined by a subdivision.
fn candidate_splits(config: &Arc<PointConfiguration>) -> Result<Vec<ConfigSplit>> {
    match config.kind {
        ConfigKind::A | ConfigKind::ABar | ConfigKind::BBar | ConfigKind::BDirected => {
            enumerate_splits(config)
        }
        ConfigKind::B if config.base.is_some() => {
            // doubled configuration: splits induced by ordered pairs of
            // disjoint subsets of the base set, validity-checked
            let base = config.base.as_ref().expect("checked");
            let n = base.len();
            let hull = config.hull();
            let mut out = Vec::new();
            for a in 1u64..(1 << n) {
                let rest = !a & ((1u64 << n) - 1);
                let mut b = rest;
                while b != 0 {
                    let la: BTreeSet<String> = (0..n)
                        .filter(|i| a & (1 << i) != 0)
                        .map(|i| base.label(i).to_string())
                        .collect();
                    let lb: BTreeSet<String> = (0..n)
                        .filter(|i| b & (1 << i) != 0)
                        .map(|i| base.label(i).to_string())
                        .collect();
                    let split = split_from_directed_pair(config, &la, &lb)?;
                    if crate::config::split_is_valid(config, &split, &hull) {
                        out.push(split);
                    }
                    b = (b - 1) & rest;
                }
            }
            Ok(out)
        }
        _ => enumerate_splits_brute(config, 200_000),
    }
}

/// Decompose a weight function along the splits its subdivision
/// refines.  Returns `None` when the subdivision is not the common
/// refinement of a compatible split set.
pub fn split_decomposition(
    w: &WeightFunction,
    opts: &EngineOptions,
) -> Result<Option<SplitDecomposition>> {
    let config = w.config.clone();
    let sd = regular_subdivision(w, opts)?;
    let candidates = candidate_splits(&config)?;
    let refined: Vec<ConfigSplit> = candidates
        .into_iter()
        .filter(|s| sd.refines_split(s))
        .collect();

    // pairwise compatibility (geometric form works for any tags)
    for i in 0..refined.len() {
        for j in (i + 1)..refined.len() {
            let meet = hyperplanes_meet_relint(
                &config,
                &[
                    (refined[i].normal.clone(), refined[i].rhs.clone()),
                    (refined[j].normal.clone(), refined[j].rhs.clone()),
                ],
            );
            if meet {
                return Ok(None);
            }
        }
    }

    // the subdivision must be the common refinement of the refined splits
    for cell in sd.maximal_cells() {
        let mut meet: Option<BTreeSet<usize>> = None;
        for s in &refined {
            let side = if cell.points.iter().all(|&i| s.plus.contains(&i)) {
                &s.plus
            } else {
                &s.minus
            };
            meet = Some(match meet {
                None => side.clone(),
                Some(m) => m.intersection(side).copied().collect(),
            });
        }
        let meet = meet.unwrap_or_else(|| (0..config.point_count()).collect());
        if &meet != &cell.points {
            return Ok(None);
        }
    }

    // solve w = Σ α_T w_T + ⟨·, u⟩ + c exactly
    let t = refined.len();
    let d = config.ground.len();
    let var_ground = GroundSet::new(
        (0..t)
            .map(|i| format!("a{i}"))
            .chain((0..d).map(|i| format!("u{i}")))
            .chain(std::iter::once("c".to_string())),
    )?;
    let weights: Vec<WeightFunction> = refined
        .iter()
        .map(|s| split_weight(&config, s))
        .collect();
    let rows: Vec<QVector> = (0..config.point_count())
        .map(|pi| {
            let mut coords: Vec<Rational> = Vec::with_capacity(t + d + 1);
            for wt in &weights {
                coords.push(wt.value(pi).clone());
            }
            coords.extend(config.point(pi).coords().iter().cloned());
            coords.push(Rational::one());
            QVector::from_coords(var_ground.clone(), coords)
        })
        .collect();
    let rhs: Vec<Rational> = w.values.clone();
    let mat = QMatrix::new(var_ground.clone(), rows)?;
    let Some((sol, kernel)) = crate::linalg::solve_linear(&mat, &rhs)? else {
        return Err(Error::Internal(
            "refinement checked but the decomposition system is inconsistent".into(),
        ));
    };
    for k in &kernel {
        for i in 0..t {
            if !k.coord(i).is_zero() {
                return Err(Error::Internal(
                    "split weights of a compatible family must be independent".into(),
                ));
            }
        }
    }
    let mut splits = Vec::new();
    let mut alpha = Vec::new();
    for (i, s) in refined.into_iter().enumerate() {
        let a = sol.coord(i).clone();
        if a.is_negative() {
            return Err(Error::Internal(
                "negative coefficient in a split decomposition".into(),
            ));
        }
        if a.is_positive() {
            splits.push(s);
            alpha.push(a);
        }
    }
    let affine_vector = QVector::from_coords(
        config.ground.clone(),
        (0..d).map(|i| sol.coord(t + i).clone()).collect(),
    );
    let affine_constant = sol.coord(t + d).clone();
    let out = SplitDecomposition {
        splits,
        alpha,
        affine_vector,
        affine_constant,
    };
    // re-verify the identity on every configuration point
    for i in 0..config.point_count() {
        if out.evaluate(&config, i) != w.values[i] {
            return Err(Error::Internal(
                "split decomposition identity failed re-evaluation".into(),
            ));
        }
    }
    Ok(Some(out))
}

/// The named tight-span objects per map family.
#[derive(Clone, Debug)]
pub enum NamedTightSpan {
    /// Over the pair configuration of one set (diagonal included).
    Symmetric(TightSpan),
    /// Joint envelope over the mixed points only, and the nonnegative
    /// envelope over mixed plus doubled points.
    Directed {
        joint: TightSpan,
        nonnegative: TightSpan,
    },
    /// Cube route and pairwise route for a set function.
    Diversity { cube: TightSpan, pairs: TightSpan },
    /// Over the hypersimplex.
    KDissimilarity(TightSpan),
}

/// Compute the tight-span(s) a map induces, with metadata on which
/// object each one is.
pub fn tight_span_of(map: &MapValue, opts: &EngineOptions) -> Result<NamedTightSpan> {
    match map {
        MapValue::Symmetric(d) => {
            let cfg = build_configuration(ConfigKind::A, d.ground(), None, None)?;
            let w = make_weight(map, &cfg)?;
            Ok(NamedTightSpan::Symmetric(tight_span(&w, opts)?))
        }
        MapValue::Directed(d) => {
            let (barred, full) = if d.is_square() {
                build_directed_pair(d.domain())?
            } else {
                (
                    build_configuration(ConfigKind::BBar, d.domain(), Some(d.codomain()), None)?,
                    build_configuration(ConfigKind::B, d.domain(), Some(d.codomain()), None)?,
                )
            };
            let wj = crate::maps::weight_of_directed(d, &barred)?;
            let wn = crate::maps::weight_of_directed(d, &full)?;
            Ok(NamedTightSpan::Directed {
                joint: tight_span(&wj, opts)?,
                nonnegative: tight_span(&wn, opts)?,
            })
        }
        MapValue::Diversity(delta) => {
            let cube = build_configuration(ConfigKind::Cube, delta.ground(), None, None)?;
            let wc = make_weight(map, &cube)?;
            let subsets = delta.ground().nonempty_subsets();
            let pairs_cfg = build_configuration(ConfigKind::A, &subsets, None, None)?;
            let wp = crate::maps::weight_of_symmetric(&diversity_to_sym(delta), &pairs_cfg)?;
            Ok(NamedTightSpan::Diversity {
                cube: tight_span(&wc, opts)?,
                pairs: tight_span(&wp, opts)?,
            })
        }
        MapValue::KDissimilarity(d) => {
            let cfg =
                build_configuration(ConfigKind::Hypersimplex(d.k()), d.ground(), None, Some(d.k()))?;
            let w = make_weight(map, &cfg)?;
            Ok(NamedTightSpan::KDissimilarity(tight_span(&w, opts)?))
        }
    }
}
