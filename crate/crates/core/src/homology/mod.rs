//! Simplicial complexes and their reduced homology over a prime field.
//!
//! A complex is stored by its facets. Two degenerate complexes are kept
//! apart: the *void* complex has no faces at all, while the *irrelevant*
//! complex `{∅}` has only the empty face and reduced homology `k` in
//! dimension -1.

mod field;
mod matrix;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

pub use field::FieldSpec;
pub use matrix::Matrix;

/// A set of vertex labels (at most 63), ordered lexicographically on its
/// sorted vertex list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= 64 {
                return Err(Error::LabelTooLarge(v));
            }
            bits |= 1 << v;
        }
        Ok(Face(bits))
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn without(&self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        (0..64).filter(|&v| self.contains(v)).collect()
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(&other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: Vec<usize>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Complex generated by `faces`, which need not be downward closed.
    pub fn from_faces(universe: &[usize], faces: &[Vec<usize>]) -> Result<Self> {
        let uni = Face::from_vertices(universe)?;
        let mut list = Vec::with_capacity(faces.len());
        for f in faces {
            let face = Face::from_vertices(f)?;
            if !face.is_subset(&uni) {
                return Err(Error::FaceOutsideUniverse(f.clone()));
            }
            list.push(face);
        }
        Ok(Self::from_face_set(uni.vertices(), list))
    }

    /// Keeps the inclusion-maximal members of `faces` as facets.
    pub(crate) fn from_face_set(universe: Vec<usize>, mut faces: Vec<Face>) -> Self {
        faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(g)) {
                facets.push(f);
            }
        }
        facets.sort();
        Self { universe, facets }
    }

    pub fn void(universe: &[usize]) -> Self {
        Self {
            universe: universe.to_vec(),
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(universe: &[usize]) -> Self {
        Self {
            universe: universe.to_vec(),
            facets: vec![Face::EMPTY],
        }
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|g| face.is_subset(g))
    }

    /// Largest face dimension; -1 for `{∅}`, `None` when void.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Faces with `d + 1` vertices in lexicographic order.
    pub fn faces_of_dim(&self, d: isize) -> Vec<Face> {
        if self.is_void() || d < -1 {
            return Vec::new();
        }
        if d == -1 {
            return vec![Face::EMPTY];
        }
        self.universe
            .iter()
            .copied()
            .combinations(d as usize + 1)
            .map(|vs| Face(vs.iter().fold(0u64, |acc, &v| acc | 1 << v)))
            .filter(|f| self.contains(f))
            .collect()
    }

    /// Face counts `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(top) => (-1..=top).map(|d| self.faces_of_dim(d).len()).collect(),
        }
    }

    /// The augmented boundary map `C_d -> C_{d-1}`; `∂_0` sends every vertex
    /// to `∅`. Column faces drop their `k`-th smallest vertex with sign `(-1)^k`.
    pub fn boundary_matrix(&self, d: isize, field: FieldSpec) -> Matrix {
        let rows = self.faces_of_dim(d - 1);
        let cols = self.faces_of_dim(d);
        boundary_between(&rows, &cols, field)
    }

    /// Nonzero `dim H̃_d(Δ; GF(p))`, keyed by `d`.
    pub fn reduced_homology(&self, field: FieldSpec) -> BTreeMap<isize, usize> {
        let mut out = BTreeMap::new();
        let Some(top) = self.dim() else {
            return out;
        };
        let faces: Vec<Vec<Face>> = (-1..=top).map(|d| self.faces_of_dim(d)).collect();
        // ranks[k] = rank of ∂_{k} : C_k -> C_{k-1}, for k = 0..=top
        let ranks: Vec<usize> = (0..=top)
            .map(|d| {
                let idx = (d + 1) as usize;
                boundary_between(&faces[idx - 1], &faces[idx], field).rank(field)
            })
            .collect();
        for d in -1..=top {
            let count = faces[(d + 1) as usize].len();
            let out_rank = if d >= 0 { ranks[d as usize] } else { 0 };
            let in_rank = ranks.get((d + 1) as usize).copied().unwrap_or(0);
            let h = count - out_rank - in_rank;
            if h > 0 {
                out.insert(d, h);
            }
        }
        out
    }

    /// Smallest vertex lying in every facet.
    pub fn cone_apex(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        let common = self.facets.iter().fold(u64::MAX, |acc, f| acc & f.0);
        (common != 0).then(|| common.trailing_zeros() as usize)
    }

    /// `Σ (-1)^d f_d`, starting from `d = -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

fn boundary_between(rows: &[Face], cols: &[Face], field: FieldSpec) -> Matrix {
    let index: std::collections::HashMap<Face, usize> =
        rows.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (c, face) in cols.iter().enumerate() {
        for (k, v) in face.vertices().into_iter().enumerate() {
            if let Some(&r) = index.get(&face.without(v)) {
                m.set(r, c, field.sign(k % 2 == 1));
            }
        }
    }
    m
}
