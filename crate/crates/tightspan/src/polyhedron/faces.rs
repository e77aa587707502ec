//! Face lattices and bounded-face complexes.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::dd::VRepresentation;
use super::hrep::HPolyhedron;
use crate::num::Rational;
use crate::vector::QVector;

/// A face given by its tight inequalities and its vertex/ray members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub active: BTreeSet<usize>,
    pub vertex_ids: BTreeSet<usize>,
    pub ray_ids: BTreeSet<usize>,
    pub dim: isize,
}

/// All nonempty faces of a pointed polyhedron, graded by dimension.  The
/// polyhedron itself is the top face.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
}

impl FaceLattice {
    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.dim).max().unwrap_or(-1)
    }

    /// Histogram of face counts per dimension, lowest dimension first.
    pub fn dim_histogram(&self) -> Vec<(isize, usize)> {
        let mut map: std::collections::BTreeMap<isize, usize> = Default::default();
        for f in &self.faces {
            *map.entry(f.dim).or_default() += 1;
        }
        map.into_iter().collect()
    }
}

/// Compute the face lattice of `p` from its V-representation.
/// The polyhedron must be pointed (slice away lineality first).
pub fn face_lattice(p: &HPolyhedron, v: &VRepresentation) -> FaceLattice {
    assert!(
        v.lineality.is_empty(),
        "face lattice requires a pointed polyhedron"
    );
    if v.is_empty() {
        return FaceLattice { faces: Vec::new() };
    }
    let ineqs = p.inequalities();
    let nv = v.vertices.len();
    let nr = v.rays.len();

    // tight sets per member
    let mut tight_v: Vec<BTreeSet<usize>> = Vec::with_capacity(nv);
    for vert in &v.vertices {
        tight_v.push(
            ineqs
                .iter()
                .enumerate()
                .filter(|(_, (a, b))| &a.dot(vert) == b)
                .map(|(i, _)| i)
                .collect(),
        );
    }
    let mut tight_r: Vec<BTreeSet<usize>> = Vec::with_capacity(nr);
    for ray in &v.rays {
        tight_r.push(
            ineqs
                .iter()
                .enumerate()
                .filter(|(_, (a, _))| a.dot(ray).is_zero())
                .map(|(i, _)| i)
                .collect(),
        );
    }

    let dim_of = |verts: &BTreeSet<usize>, rays: &BTreeSet<usize>| -> isize {
        let first = *verts.iter().next().expect("faces contain a vertex");
        let base = &v.vertices[first];
        let mut dirs: Vec<QVector> = verts
            .iter()
            .skip(1)
            .map(|&i| v.vertices[i].sub(base))
            .collect();
        dirs.extend(rays.iter().map(|&i| v.rays[i].clone()));
        if dirs.is_empty() {
            return 0;
        }
        crate::linalg::linear_rank(&v.ground, &dirs) as isize
    };

    let active_of = |verts: &BTreeSet<usize>, rays: &BTreeSet<usize>| -> BTreeSet<usize> {
        (0..ineqs.len())
            .filter(|i| {
                verts.iter().all(|vi| tight_v[*vi].contains(i))
                    && rays.iter().all(|ri| tight_r[*ri].contains(i))
            })
            .collect()
    };

    let top_verts: BTreeSet<usize> = (0..nv).collect();
    let top_rays: BTreeSet<usize> = (0..nr).collect();
    let top = Face {
        active: active_of(&top_verts, &top_rays),
        dim: dim_of(&top_verts, &top_rays),
        vertex_ids: top_verts,
        ray_ids: top_rays,
    };

    let mut seen: HashMap<(BTreeSet<usize>, BTreeSet<usize>), usize> = HashMap::new();
    let mut faces = vec![top.clone()];
    seen.insert((top.vertex_ids.clone(), top.ray_ids.clone()), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(fi) = queue.pop_front() {
        let current = faces[fi].clone();
        for i in 0..ineqs.len() {
            if current.active.contains(&i) {
                continue;
            }
            let verts: BTreeSet<usize> = current
                .vertex_ids
                .iter()
                .copied()
                .filter(|vi| tight_v[*vi].contains(&i))
                .collect();
            if verts.is_empty() {
                continue;
            }
            let rays: BTreeSet<usize> = current
                .ray_ids
                .iter()
                .copied()
                .filter(|ri| tight_r[*ri].contains(&i))
                .collect();
            let key = (verts.clone(), rays.clone());
            if seen.contains_key(&key) {
                continue;
            }
            let face = Face {
                active: active_of(&verts, &rays),
                dim: dim_of(&verts, &rays),
                vertex_ids: verts,
                ray_ids: rays,
            };
            seen.insert(key, faces.len());
            queue.push_back(faces.len());
            faces.push(face);
        }
    }
    faces.sort_by(|a, b| {
        a.dim
            .cmp(&b.dim)
            .then_with(|| a.vertex_ids.cmp(&b.vertex_ids))
            .then_with(|| a.ray_ids.cmp(&b.ray_ids))
    });
    FaceLattice { faces }
}

/// A face of the bounded sub-complex, given by vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFace {
    pub vertex_ids: BTreeSet<usize>,
    pub active: BTreeSet<usize>,
    pub dim: isize,
}

/// The polyhedral complex of bounded faces.
#[derive(Clone, Debug)]
pub struct BoundedComplex {
    pub vertices: Vec<QVector>,
    pub faces: Vec<ComplexFace>,
    /// Pairs of vertex ids spanning the 1-faces, with exact difference
    /// vectors.
    pub edges: Vec<(usize, usize, QVector)>,
}

impl BoundedComplex {
    pub fn empty() -> Self {
        BoundedComplex {
            vertices: Vec::new(),
            faces: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.dim).max().unwrap_or(-1)
    }

    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = &ComplexFace> {
        self.faces.iter().filter(move |f| f.dim == d)
    }
}

/// Bounded faces of `p`: exactly the faces with no rays, together with
/// all their subfaces.  A polyhedron with a nontrivial lineality space
/// has no bounded faces at all.
pub fn bounded_faces(p: &HPolyhedron) -> BoundedComplex {
    let v = super::dd::dd_convert(p);
    bounded_faces_from(p, &v)
}

pub fn bounded_faces_from(p: &HPolyhedron, v: &VRepresentation) -> BoundedComplex {
    if v.is_empty() || !v.lineality.is_empty() {
        return BoundedComplex::empty();
    }
    let lattice = face_lattice(p, v);
    complex_from_lattice(&lattice, v)
}

pub fn complex_from_lattice(lattice: &FaceLattice, v: &VRepresentation) -> BoundedComplex {
    let mut faces: Vec<ComplexFace> = lattice
        .faces
        .iter()
        .filter(|f| f.ray_ids.is_empty())
        .map(|f| ComplexFace {
            vertex_ids: f.vertex_ids.clone(),
            active: f.active.clone(),
            dim: f.dim,
        })
        .collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertex_ids.cmp(&b.vertex_ids)));
    let mut edges = Vec::new();
    for f in faces.iter().filter(|f| f.dim == 1) {
        let ids: Vec<usize> = f.vertex_ids.iter().copied().collect();
        debug_assert_eq!(ids.len(), 2, "bounded 1-faces are segments");
        let diff = v.vertices[ids[1]].sub(&v.vertices[ids[0]]);
        edges.push((ids[0], ids[1], diff));
    }
    BoundedComplex {
        vertices: v.vertices.clone(),
        faces,
        edges,
    }
}

/// Exact length convention for complex edges: the maximum norm of the
/// difference vector.
pub fn edge_length(diff: &QVector) -> Rational {
    diff.max_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use std::sync::Arc;

    fn gxy() -> Arc<GroundSet> {
        GroundSet::new(["x1", "x2"]).unwrap()
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

    #[test]
    fn unit_square_lattice_counts() {
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
        let v = super::super::dd::dd_convert(&p);
        let lattice = face_lattice(&p, &v);
        assert_eq!(lattice.dim_histogram(), vec![(0, 4), (1, 4), (2, 1)]);
        // bounded polytope: the whole lattice is the bounded complex
        let complex = bounded_faces(&p);
        assert_eq!(complex.faces.len(), 9);
        assert_eq!(complex.edges.len(), 4);
    }

    #[test]
    fn two_point_envelope_bounded_faces() {
        let g = gxy();
        let p = HPolyhedron::new(
            g.clone(),
            vec![c(&g, &[2, 0], 0), c(&g, &[0, 2], 0), c(&g, &[1, 1], 1)],
            vec![],
        );
        let complex = bounded_faces(&p);
        assert_eq!(complex.vertices.len(), 2);
        assert_eq!(complex.edges.len(), 1);
        assert_eq!(complex.dim(), 1);
        let (_, _, diff) = &complex.edges[0];
        assert_eq!(edge_length(diff), Rational::one());
    }

    #[test]
    fn halfplane_has_no_bounded_faces() {
        let g = gxy();
        let p = HPolyhedron::new(g.clone(), vec![c(&g, &[1, 0], 0)], vec![]);
        let complex = bounded_faces(&p);
        assert!(complex.vertices.is_empty());
        assert!(complex.faces.is_empty());
    }

    #[test]
    fn simplex_face_counts() {
        // conv{2e_x} for |X| = 3: a triangle in the plane x1+x2+x3 = 2
        let g = GroundSet::new(["x1", "x2", "x3"]).unwrap();
        let pts: Vec<QVector> = (0..3)
            .map(|i| {
                let mut v = QVector::zeros(g.clone());
                *v.coord_mut(i) = Rational::from_int(2);
                v
            })
            .collect();
        let vrep = VRepresentation {
            ground: g.clone(),
            vertices: pts,
            rays: vec![],
            lineality: vec![],
        };
        let h = super::super::dd::facets_from_vrep(&vrep);
        let v = super::super::dd::dd_convert(&h);
        let lattice = face_lattice(&h, &v);
        assert_eq!(lattice.dim_histogram(), vec![(0, 3), (1, 3), (2, 1)]);
    }
}
