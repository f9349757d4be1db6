//! Finite simplicial complexes and their combinatorial operations.
//!
//! A [`Complex`] is immutable. Vertices are dense indices `0..n` whose order
//! matches the lexicographic order of their string labels, so any complex
//! derived from another (link, deletion, contrastar, skeleton) orders its
//! shared vertices the same way. Homology relies on this: the orientation of
//! a face is the sorted order of its vertex indices, and that orientation is
//! then consistent between a complex and its subcomplexes.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits;

/// A face: a sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: u32) -> Self {
        Face(vec![v])
    }

    /// Builds a face from indices that are already strictly increasing.
    pub(crate) fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, `-1` for the empty face.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &v in &self.0 {
            for &w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// The faces obtained by dropping one vertex, in order of the dropped
    /// position.
    pub fn codim_one(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Face(v)
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

/// An immutable finite simplicial complex given by its facets.
///
/// The void complex (no faces at all) is not representable. The complex
/// `{∅}` whose only face is the empty face can arise from deletions but is
/// never produced by [`Complex::from_facets`].
#[derive(Clone)]
pub struct Complex {
    labels: Vec<String>,
    facets: Vec<Face>,
    /// `faces[k]` holds the faces with exactly `k` vertices, sorted.
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("n_vertices", &self.n_vertices())
            .field("dim", &self.dim())
            .field("facets", &self.labeled_facets())
            .finish()
    }
}

impl Complex {
    /// Builds a complex from facets given as label sets.
    ///
    /// Dominated and repeated faces are dropped, and labels are mapped to
    /// dense indices in lexicographic order.
    pub fn from_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let raw: Vec<Vec<String>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(|s| s.as_ref().to_string()).collect())
            .collect();
        let mut labels: Vec<String> = raw.iter().flatten().cloned().collect();
        labels.sort();
        labels.dedup();
        if labels.is_empty() {
            return Err(Error::NoFacets);
        }
        let faces = raw
            .iter()
            .map(|f| Face::new(f.iter().map(|l| labels.binary_search(l).unwrap() as u32)))
            .collect();
        Self::from_index_facets(&labels, faces)
    }

    /// Builds a complex from facets over the index space of `labels`.
    ///
    /// Labels of vertices that appear in no facet are dropped and the rest
    /// are re-indexed in label order. `labels` need not be sorted but must be
    /// distinct.
    pub fn from_index_facets(labels: &[String], facets: Vec<Face>) -> Result<Self> {
        Self::from_index_facets_limited(labels, facets, limits::max_faces())
    }

    /// [`Complex::from_index_facets`] with an explicit face-count limit.
    pub fn from_index_facets_limited(
        labels: &[String],
        facets: Vec<Face>,
        max_faces: usize,
    ) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::NoFacets);
        }
        let mut used: Vec<u32> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        if let Some(&bad) = used.iter().find(|&&v| v as usize >= labels.len()) {
            return Err(Error::InvalidArgument(format!(
                "vertex index {bad} has no label"
            )));
        }
        let mut order: Vec<u32> = used.clone();
        order.sort_by(|a, b| labels[*a as usize].cmp(&labels[*b as usize]));
        let mut remap: HashMap<u32, u32> = HashMap::with_capacity(order.len());
        for (new, &old) in order.iter().enumerate() {
            remap.insert(old, new as u32);
        }
        let new_labels: Vec<String> = order.iter().map(|&v| labels[v as usize].clone()).collect();
        if new_labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate vertex labels".into()));
        }
        let facets: Vec<Face> = facets
            .into_iter()
            .map(|f| Face::new(f.0.iter().map(|v| remap[v])))
            .collect();
        Self::build(new_labels, facets, max_faces)
    }

    /// Closure and facet extraction. Labels must already be sorted and every
    /// index must be used.
    fn build(labels: Vec<String>, generators: Vec<Face>, limit: usize) -> Result<Self> {
        let top = generators.iter().map(Face::len).max().unwrap_or(0);
        let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
        let mut total = 0usize;
        let mut stack: Vec<Face> = Vec::new();
        for g in generators {
            if sets[g.len()].contains(&g) {
                continue;
            }
            stack.push(g);
            while let Some(f) = stack.pop() {
                if !sets[f.len()].insert(f.clone()) {
                    continue;
                }
                total += 1;
                if total > limit {
                    return Err(Error::FaceLimit { limit });
                }
                if !f.is_empty() {
                    for sub in f.codim_one() {
                        if !sets[sub.len()].contains(&sub) {
                            stack.push(sub);
                        }
                    }
                }
            }
        }
        let faces: Vec<Vec<Face>> = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        // A face is a facet iff it is not a codimension-one face of anything.
        let mut covered: HashSet<&Face> = HashSet::new();
        let mut facets = Vec::new();
        for k in (0..faces.len()).rev() {
            for f in &faces[k] {
                if !covered.contains(f) {
                    facets.push(f.clone());
                }
            }
            if k > 0 {
                for f in &faces[k] {
                    for sub in f.codim_one() {
                        let s = faces[k - 1].binary_search(&sub).unwrap();
                        covered.insert(&faces[k - 1][s]);
                    }
                }
            }
        }
        facets.sort_unstable();
        let index = faces
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(i, f)| (f.clone(), i))
                    .collect()
            })
            .collect();
        Ok(Complex {
            labels,
            facets,
            faces,
            index,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Dimension, `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<u32> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(|i| i as u32)
    }

    /// Looks up a face by its vertex labels.
    pub fn face_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Option<Face> {
        let f = Face::new(
            labels
                .iter()
                .map(|l| self.vertex_by_label(l.as_ref()))
                .collect::<Option<Vec<u32>>>()?,
        );
        self.contains(&f).then_some(f)
    }

    pub fn face_labels(&self, face: &Face) -> Vec<String> {
        face.0
            .iter()
            .map(|&v| self.labels[v as usize].clone())
            .collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Facets as label lists, sorted.
    pub fn labeled_facets(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.face_labels(f)).collect()
    }

    /// All faces of dimension exactly `d`; empty when `d` is out of range.
    pub fn faces(&self, d: isize) -> &[Face] {
        let k = d + 1;
        if k < 0 || k as usize >= self.faces.len() {
            &[]
        } else {
            &self.faces[k as usize]
        }
    }

    /// Faces grouped by cardinality: entry `k` lists faces with `k` vertices.
    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        &self.faces
    }

    /// Every face, by increasing dimension and lexicographically within a
    /// dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    /// Every face except the empty one.
    pub fn nonempty_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().skip(1).flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// `f_{-1}, f_0, ..., f_{dim}`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces.iter().map(|l| l.len() as u64).collect()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.index_of(face).is_some()
    }

    /// Position of `face` within `faces(face.dim())`.
    pub fn index_of(&self, face: &Face) -> Option<usize> {
        self.index
            .get(face.len())
            .and_then(|m| m.get(face).copied())
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.labels.is_empty()
    }

    fn require_face(&self, s: &Face) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotAFace(self.describe(s)))
        }
    }

    /// Human-readable rendering of a face with labels.
    pub fn describe(&self, face: &Face) -> String {
        let names: Vec<&str> = face
            .0
            .iter()
            .map(|&v| {
                self.labels
                    .get(v as usize)
                    .map(String::as_str)
                    .unwrap_or("?")
            })
            .collect();
        format!("{{{}}}", names.join(","))
    }

    fn derive(&self, facets: Vec<Face>) -> Complex {
        Complex::from_index_facets(&self.labels, facets)
            .expect("subcomplex of a valid complex is valid")
    }

    /// `{τ : τ ∩ s = ∅, τ ∪ s ∈ c}` over its own vertex set.
    pub fn link(&self, s: &Face) -> Result<Complex> {
        self.require_face(s)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| s.is_subset_of(f))
            .map(|f| f.difference(s))
            .collect();
        Ok(self.derive(facets))
    }

    /// Faces disjoint from the vertex set `t`.
    pub fn deletion(&self, t: &Face) -> Result<Complex> {
        if let Some(&v) = t.0.iter().find(|&&v| v as usize >= self.n_vertices()) {
            return Err(Error::InvalidArgument(format!(
                "vertex index {v} out of range"
            )));
        }
        if t.is_empty() {
            return Ok(self.clone());
        }
        let facets = self.facets.iter().map(|f| f.difference(t)).collect();
        Ok(self.derive(facets))
    }

    /// Faces not containing `s`.
    pub fn contrastar(&self, s: &Face) -> Result<Complex> {
        if s.is_empty() {
            return Err(Error::EmptyContrastar);
        }
        self.require_face(s)?;
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            if s.is_subset_of(f) {
                facets.extend(s.0.iter().map(|&v| f.without(v)));
            } else {
                facets.push(f.clone());
            }
        }
        Ok(self.derive(facets))
    }

    /// Faces of dimension at most `i`. Returns `self` unchanged when
    /// `i >= dim`.
    pub fn skeleton(&self, i: isize) -> Result<Complex> {
        if i < -1 {
            return Err(Error::InvalidArgument(format!(
                "skeleton dimension {i} < -1"
            )));
        }
        if i >= self.dim() {
            return Ok(self.clone());
        }
        let mut facets: Vec<Face> = self.faces(i).to_vec();
        facets.extend(self.facets.iter().filter(|f| f.dim() < i).cloned());
        Ok(self.derive(facets))
    }

    /// Simplicial join on disjoint vertex sets.
    ///
    /// Labels are kept when the two label sets are disjoint; otherwise the
    /// left vertices are renamed `1:<label>` and the right ones `2:<label>`.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let clash = self
            .labels
            .iter()
            .any(|l| other.vertex_by_label(l).is_some());
        let (left, right): (Vec<String>, Vec<String>) = if clash {
            (
                self.labels.iter().map(|l| format!("1:{l}")).collect(),
                other.labels.iter().map(|l| format!("2:{l}")).collect(),
            )
        } else {
            (self.labels.clone(), other.labels.clone())
        };
        let offset = left.len() as u32;
        let mut labels = left;
        labels.extend(right);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(Face::new(
                    f.0.iter().copied().chain(g.0.iter().map(|&v| v + offset)),
                ));
            }
        }
        Complex::from_index_facets(&labels, facets)
    }

    /// Join with a single new vertex. The apex label is `apex`, primed as
    /// often as needed to avoid a clash.
    pub fn cone(&self) -> Result<Complex> {
        let mut apex = String::from("apex");
        while self.vertex_by_label(&apex).is_some() {
            apex.push('\'');
        }
        self.join(&Complex::from_facets([[apex]])?)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    /// Minimal non-faces: sets not in the complex all of whose proper subsets
    /// are faces. Vertices are never non-faces since the vertex set is the
    /// union of the facets.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        let n = self.n_vertices() as u32;
        let mut out = Vec::new();
        for k in 1..self.faces.len() {
            // Candidates with k + 1 vertices extend a k-face by a larger vertex.
            for f in &self.faces[k] {
                let start = f.0.last().map_or(0, |&m| m + 1);
                for v in start..n {
                    let mut cand = f.0.clone();
                    cand.push(v);
                    let cand = Face::from_sorted(cand);
                    if self.contains(&cand) {
                        continue;
                    }
                    if cand.codim_one().all(|sub| self.contains(&sub)) {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }

    /// Every minimal non-face has at most two vertices.
    pub fn is_flag(&self) -> bool {
        self.minimal_non_faces().iter().all(|f| f.len() <= 2)
    }

    /// The graph on the vertices whose edges are the 1-faces.
    pub fn graph(&self) -> Graph {
        let edges = self
            .faces(1)
            .iter()
            .map(|e| (e.0[0] as usize, e.0[1] as usize));
        Graph::new(self.n_vertices(), edges).expect("1-faces are simple edges")
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Complex> {
        let comp = self.graph().component_ids();
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut groups: Vec<Vec<Face>> = vec![Vec::new(); count];
        for f in &self.facets {
            if let Some(&v) = f.0.first() {
                groups[comp[v as usize]].push(f.clone());
            }
        }
        groups.into_iter().map(|g| self.derive(g)).collect()
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            is_pure: self.is_pure(),
            is_flag: self.is_flag(),
            components: self.components(),
            graph: self.graph(),
        }
    }

    /// Maps vertex indices of `self` to those of `ambient` by label.
    pub fn vertex_map_into(&self, ambient: &Complex) -> Result<Vec<u32>> {
        self.labels
            .iter()
            .map(|l| {
                ambient
                    .vertex_by_label(l)
                    .ok_or_else(|| Error::NotSubcomplex(format!("vertex {l} is missing")))
            })
            .collect()
    }

    /// Every face of `self`, translated into the index space of `ambient`.
    /// Fails unless `self` is a subcomplex of `ambient` (matching labels).
    pub fn embed_into(&self, ambient: &Complex) -> Result<Vec<Face>> {
        let map = self.vertex_map_into(ambient)?;
        let mut out = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            // The label order is shared, so the image stays sorted.
            let g = Face::from_sorted(f.0.iter().map(|&v| map[v as usize]).collect());
            if !ambient.contains(&g) {
                return Err(Error::NotSubcomplex(format!(
                    "{} is not a face",
                    self.describe(f)
                )));
            }
            out.push(g);
        }
        Ok(out)
    }

    pub fn is_subcomplex_of(&self, ambient: &Complex) -> bool {
        self.embed_into(ambient).is_ok()
    }

    /// The subcomplex of `self` generated by `faces` (indices of `self`).
    pub fn subcomplex(&self, faces: Vec<Face>) -> Result<Complex> {
        for f in &faces {
            self.require_face(f)?;
        }
        Complex::from_index_facets(&self.labels, faces)
    }
}

/// Summary predicates of a complex.
#[derive(Clone, Debug)]
pub struct Predicates {
    pub is_pure: bool,
    pub is_flag: bool,
    pub components: Vec<Complex>,
    pub graph: Graph,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[&str]]) -> Complex {
        Complex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn octahedron() -> Complex {
        let mut facets = Vec::new();
        for a in ["a", "A"] {
            for b in ["b", "B"] {
                for x in ["c", "C"] {
                    facets.push(vec![a, b, x]);
                }
            }
        }
        Complex::from_facets(facets).unwrap()
    }

    fn torus7() -> Complex {
        let mut facets = Vec::new();
        for i in 0..7u32 {
            facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
            facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
        }
        let labels: Vec<String> = (0..7).map(|i| i.to_string()).collect();
        Complex::from_index_facets(&labels, facets.into_iter().map(Face::new).collect()).unwrap()
    }

    /// Brute-force closure oracle: every subset of every input facet.
    fn brute_faces(facets: &[Vec<u32>], d: isize) -> HashSet<Vec<u32>> {
        let mut out = HashSet::new();
        for f in facets {
            for mask in 0u32..(1 << f.len()) {
                let s: Vec<u32> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                if s.len() as isize - 1 == d {
                    out.insert(s);
                }
            }
        }
        out
    }

    #[test]
    fn from_facets_drops_dominated_and_repeated() {
        let k = c(&[&["a", "b"], &["b", "c"], &["a", "b"], &["b"]]);
        assert_eq!(k.n_vertices(), 3);
        assert_eq!(k.facets(), &[Face::new([0, 1]), Face::new([1, 2])]);
    }

    #[test]
    fn full_triangle_has_seven_nonempty_faces() {
        let k = c(&[&["a", "b", "c"]]);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.nonempty_faces().count(), 7);
    }

    #[test]
    fn example_graph_counts() {
        let k = c(&[
            &["p", "a"],
            &["p", "b"],
            &["a", "b"],
            &["p", "c"],
            &["p", "d"],
            &["c", "d"],
        ]);
        assert_eq!((k.dim(), k.n_vertices(), k.facets().len()), (1, 5, 6));
    }

    #[test]
    fn empty_input_is_rejected() {
        let none: Vec<Vec<String>> = vec![];
        assert!(matches!(Complex::from_facets(none), Err(Error::NoFacets)));
        let only_empty: Vec<Vec<String>> = vec![vec![]];
        assert!(matches!(
            Complex::from_facets(only_empty),
            Err(Error::NoFacets)
        ));
    }

    #[test]
    fn face_enumeration_matches_brute_force() {
        let oct = octahedron();
        let facets: Vec<Vec<u32>> = oct.facets().iter().map(|f| f.vertices().to_vec()).collect();
        for d in -1..=2 {
            let got: HashSet<Vec<u32>> =
                oct.faces(d).iter().map(|f| f.vertices().to_vec()).collect();
            assert_eq!(got, brute_faces(&facets, d), "dimension {d}");
        }
        assert_eq!(oct.faces(2).len(), 8);
        assert_eq!(oct.faces(-1), &[Face::empty()]);
        assert!(oct.faces(3).is_empty());
        assert!(oct.faces(-2).is_empty());
    }

    #[test]
    fn links() {
        let oct = octahedron();
        for v in 0..6 {
            let lk = oct.link(&Face::vertex(v)).unwrap();
            assert_eq!(lk.f_vector(), vec![1, 4, 4]);
            assert!(lk.graph().degrees().iter().all(|&d| d == 2));
        }
        let tri = c(&[&["a", "b", "c"]]);
        let lk = tri.link(&Face::new([0, 1])).unwrap();
        assert_eq!(lk.labeled_facets(), vec![vec!["c".to_string()]]);
        let t = torus7();
        for v in 0..7 {
            let lk = t.link(&Face::vertex(v)).unwrap();
            assert_eq!(lk.f_vector(), vec![1, 6, 6]);
            assert!(lk.graph().is_connected());
            assert!(lk.graph().degrees().iter().all(|&d| d == 2));
        }
        assert_eq!(oct.link(&Face::empty()).unwrap(), oct);
    }

    #[test]
    fn link_of_non_face_errors() {
        let k = c(&[&["a", "b"], &["c", "d"]]);
        assert!(matches!(
            k.link(&Face::new([0, 2])),
            Err(Error::NotAFace(_))
        ));
    }

    #[test]
    fn deletion_and_contrastar() {
        let k = c(&[
            &["p", "a"],
            &["p", "b"],
            &["a", "b"],
            &["p", "c"],
            &["p", "d"],
            &["c", "d"],
        ]);
        let p = Face::vertex(k.vertex_by_label("p").unwrap());
        let del = k.deletion(&p).unwrap();
        assert_eq!(del.labeled_facets(), vec![vec!["a", "b"], vec!["c", "d"]]);
        assert_eq!(k.deletion(&Face::empty()).unwrap(), k);
        assert_eq!(k.contrastar(&p).unwrap(), del);

        let oct = octahedron();
        let d = oct.deletion(&Face::vertex(0)).unwrap();
        assert_eq!(d.f_vector(), vec![1, 5, 8, 4]);

        let tri = c(&[&["a", "b", "c"]]);
        let bd = tri.contrastar(&Face::new([0, 1, 2])).unwrap();
        assert_eq!(bd.f_vector(), vec![1, 3, 3]);
        assert!(matches!(
            tri.contrastar(&Face::empty()),
            Err(Error::EmptyContrastar)
        ));
    }

    #[test]
    fn deleting_everything_leaves_the_empty_complex() {
        let k = c(&[&["a", "b"]]);
        let e = k.deletion(&Face::new([0, 1])).unwrap();
        assert!(e.is_empty_complex());
        assert_eq!(e.dim(), -1);
        assert_eq!(e.f_vector(), vec![1]);
    }

    #[test]
    fn skeleta() {
        let tet = c(&[&["a", "b", "c", "d"]]);
        let s = tet.skeleton(2).unwrap();
        assert_eq!(s.f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(s.facets().len(), 4);
        let oct = octahedron();
        let g = oct.skeleton(1).unwrap();
        assert_eq!(g.f_vector(), vec![1, 6, 12]);
        assert_eq!(torus7().skeleton(1).unwrap().faces(1).len(), 21);
        assert_eq!(oct.skeleton(5).unwrap(), oct);
    }

    #[test]
    fn joins_and_cones() {
        let s0 = c(&[&["x"], &["y"]]);
        let sq = s0.join(&s0).unwrap();
        assert_eq!(sq.f_vector(), vec![1, 4, 4]);
        let oct = sq.join(&s0).unwrap();
        assert_eq!(oct.f_vector(), vec![1, 6, 12, 8]);
        let path = s0.cone().unwrap();
        assert_eq!(path.f_vector(), vec![1, 3, 2]);
        let cyc = c(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert_eq!(cyc.cone().unwrap().facets().len(), 3);
        let co = octahedron().cone().unwrap();
        assert_eq!((co.n_vertices(), co.dim()), (7, 3));
    }

    #[test]
    fn predicates() {
        let oct = octahedron();
        let p = oct.predicates();
        assert!(p.is_pure && p.is_flag);
        assert_eq!(p.components.len(), 1);
        assert_eq!(oct.minimal_non_faces().len(), 3);

        let t = torus7();
        assert!(t.is_pure());
        assert!(!t.is_flag());
        assert_eq!(t.faces(2).len(), 14);

        let two = c(&[&["a", "b"], &["c", "d"]]);
        let p = two.predicates();
        assert!(p.is_pure && p.is_flag);
        assert_eq!(p.components.len(), 2);
        assert_eq!(p.graph.edge_count(), 2);
    }

    #[test]
    fn non_pure_detection() {
        let k = c(&[&["a", "b", "c"], &["c", "d"]]);
        assert!(!k.is_pure());
    }

    #[test]
    fn face_limit_guard() {
        let labels: Vec<String> = (0..30).map(|i| format!("v{i:02}")).collect();
        let facet = Face::new(0..30);
        let err = Complex::from_index_facets_limited(&labels, vec![facet], 1000);
        assert!(matches!(err, Err(Error::FaceLimit { limit: 1000 })));
    }

    #[test]
    fn embedding_respects_labels() {
        let oct = octahedron();
        let lk = oct.link(&Face::vertex(0)).unwrap();
        assert!(lk.is_subcomplex_of(&oct));
        let other = c(&[&["zz", "a"]]);
        assert!(!other.is_subcomplex_of(&oct));
    }
}
