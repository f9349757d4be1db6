//! Reduced simplicial homology over a field, for complexes and pairs.
//!
//! Every computation runs on a set of faces of one ambient complex that is
//! closed under "taking a face, as long as it stays in the set" in the
//! quotient sense: the chains of a subcomplex (including the empty face, so
//! homology is reduced), or the faces of `c` outside a subcomplex `a` (the
//! relative chain complex). The boundary of a face drops one vertex at a time
//! with sign `(-1)^position`, and terms that leave the set are discarded.

use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::linalg::{self, in_column_space, nullspace_basis, with_field, Field, FieldSpec, Matrix};

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …, β̃_{dim}` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub field: FieldSpec,
    /// Entry `k` is `β̃_{k-1}`.
    pub betti: Vec<u64>,
}

impl BettiTable {
    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        let k = i + 1;
        if k < 0 {
            0
        } else {
            self.betti.get(k as usize).copied().unwrap_or(0)
        }
    }

    /// Highest stored degree.
    pub fn top(&self) -> isize {
        self.betti.len() as isize - 2
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^i β̃_i`.
    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Reduced Euler characteristic `Σ_{i≥-1} (-1)^i f_i`.
pub fn reduced_euler(c: &Complex) -> i64 {
    c.f_vector()
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Augmented simplicial chain complex of a complex with integer boundary
/// matrices.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    /// `faces[k]` lists the faces with `k` vertices (dimension `k - 1`).
    pub faces: Vec<Vec<Face>>,
    /// `boundaries[k]` maps chains on `faces[k + 1]` to chains on
    /// `faces[k]`; rows index `faces[k]`.
    pub boundaries: Vec<Matrix<i64>>,
}

pub fn chain_complex(c: &Complex) -> ChainComplexData {
    let chains = Chains::subcomplex(c);
    let sizes = c.faces_by_size().len();
    ChainComplexData {
        faces: c.faces_by_size().to_vec(),
        boundaries: (1..sizes).map(|k| chains.boundary(k)).collect(),
    }
}

/// A set of faces of `ambient`, stored as a mask per face size.
struct Chains<'a> {
    ambient: &'a Complex,
    /// `pos[k][j]` is the column of face `j` of size `k`, if it is kept.
    pos: Vec<Vec<Option<usize>>>,
    kept: Vec<Vec<usize>>,
}

impl<'a> Chains<'a> {
    fn from_predicate(ambient: &'a Complex, keep: impl Fn(&Face) -> bool) -> Self {
        let mut pos = Vec::new();
        let mut kept = Vec::new();
        for list in ambient.faces_by_size() {
            let mut p = vec![None; list.len()];
            let mut k = Vec::new();
            for (j, f) in list.iter().enumerate() {
                if keep(f) {
                    p[j] = Some(k.len());
                    k.push(j);
                }
            }
            pos.push(p);
            kept.push(k);
        }
        Chains { ambient, pos, kept }
    }

    fn subcomplex(c: &'a Complex) -> Self {
        Self::from_predicate(c, |_| true)
    }

    /// Faces of `ambient` outside the subcomplex `a`.
    fn quotient(ambient: &'a Complex, a: &Complex) -> Result<Self> {
        let map = a.vertex_map_into(ambient)?;
        let mut inside: Vec<Vec<bool>> = ambient
            .faces_by_size()
            .iter()
            .map(|l| vec![false; l.len()])
            .collect();
        for f in a.all_faces() {
            let g = Face::new(f.vertices().iter().map(|&v| map[v as usize]));
            let j = ambient
                .index_of(&g)
                .ok_or_else(|| Error::NotSubcomplex(format!("{} is not a face", a.describe(f))))?;
            inside[g.len()][j] = true;
        }
        Ok(Self::from_predicate(ambient, |f| {
            !inside[f.len()][ambient.index_of(f).unwrap()]
        }))
    }

    /// Faces containing `s` (for `s = ∅`, every face including the empty
    /// one). This is the quotient of `ambient` by the contrastar of `s`.
    fn star_quotient(ambient: &'a Complex, s: &Face) -> Self {
        Self::from_predicate(ambient, |f| s.is_subset_of(f))
    }

    fn count(&self, size: usize) -> usize {
        self.kept.get(size).map_or(0, Vec::len)
    }

    /// Boundary from kept faces of `size` vertices to kept faces of
    /// `size - 1` vertices.
    fn boundary(&self, size: usize) -> Matrix<i64> {
        let rows = self.count(size - 1);
        let cols = self.count(size);
        let mut m = Matrix::filled(rows, cols, 0i64);
        if rows == 0 || cols == 0 {
            return m;
        }
        let faces = &self.ambient.faces_by_size()[size];
        for (col, &j) in self.kept[size].iter().enumerate() {
            for (i, sub) in faces[j].codim_one().enumerate() {
                let idx = self.ambient.index_of(&sub).expect("closed under faces");
                if let Some(row) = self.pos[size - 1][idx] {
                    m.set(row, col, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    }

    /// Rank of the boundary out of faces of `size` vertices.
    fn boundary_rank(&self, field: FieldSpec, size: usize) -> Result<usize> {
        if size == 0 || size >= self.kept.len() {
            return Ok(0);
        }
        let m = self.boundary(size);
        if m.rows() == 0 || m.cols() == 0 {
            return Ok(0);
        }
        Ok(linalg::rank_over(field, &m)?)
    }

    /// `dim H_i` of this chain complex.
    fn betti(&self, field: FieldSpec, i: isize) -> Result<u64> {
        if i < -1 {
            return Ok(0);
        }
        let size = (i + 1) as usize;
        let n = self.count(size);
        if n == 0 {
            return Ok(0);
        }
        let out = self.boundary_rank(field, size)?;
        let inc = self.boundary_rank(field, size + 1)?;
        Ok((n - out - inc) as u64)
    }

    fn table(&self, field: FieldSpec) -> Result<BettiTable> {
        let sizes = self.kept.len();
        let ranks: Vec<usize> = (0..=sizes)
            .map(|k| self.boundary_rank(field, k))
            .collect::<Result<_>>()?;
        let betti = (0..sizes)
            .map(|k| (self.count(k) - ranks[k] - ranks[k + 1]) as u64)
            .collect();
        Ok(BettiTable { field, betti })
    }
}

/// Reduced Betti numbers of `c`.
pub fn betti(c: &Complex, field: FieldSpec) -> Result<BettiTable> {
    Chains::subcomplex(c).table(field)
}

/// `β̃_i(c)` alone, which needs only two ranks.
pub fn betti_number(c: &Complex, field: FieldSpec, i: isize) -> Result<u64> {
    Chains::subcomplex(c).betti(field, i)
}

/// `β̃_i(cost t)` for a nonempty face `t`, computed on the faces of `c`
/// without building the contrastar.
pub fn contrastar_betti_number(c: &Complex, t: &Face, field: FieldSpec, i: isize) -> Result<u64> {
    if t.is_empty() {
        return Err(Error::EmptyContrastar);
    }
    if !c.contains(t) {
        return Err(Error::NotAFace(c.describe(t)));
    }
    Chains::from_predicate(c, |f| !t.is_subset_of(f)).betti(field, i)
}

/// `dim H_i(c, a)` for a subcomplex `a` of `c` (matched by labels).
pub fn relative_betti(c: &Complex, a: &Complex, field: FieldSpec, i: isize) -> Result<u64> {
    Chains::quotient(c, a)?.betti(field, i)
}

/// All relative Betti numbers `H_i(c, a)` for `i = -1..=dim c`.
pub fn relative_betti_table(c: &Complex, a: &Complex, field: FieldSpec) -> Result<BettiTable> {
    Chains::quotient(c, a)?.table(field)
}

/// A chain with field coefficients, for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    /// Pairs of (face labels, coefficient rendered as a string).
    pub terms: Vec<(Vec<String>, String)>,
}

/// Whether `H̃_i(a) → H̃_i(c)` induced by inclusion is zero.
pub fn inclusion_induced_is_zero(
    a: &Complex,
    c: &Complex,
    i: isize,
    field: FieldSpec,
) -> Result<bool> {
    Ok(nonzero_inclusion_witness(a, c, i, field)?.is_none())
}

/// An `i`-cycle of `a` that is not a boundary in `c`, if the induced map on
/// `H̃_i` is nonzero.
pub fn nonzero_inclusion_witness(
    a: &Complex,
    c: &Complex,
    i: isize,
    field: FieldSpec,
) -> Result<Option<ChainWitness>> {
    let map = a.vertex_map_into(c)?;
    if !a.is_subcomplex_of(c) {
        return Err(Error::NotSubcomplex(
            "inclusion source is not a subcomplex".into(),
        ));
    }
    if i < -1 || i > a.dim() {
        return Ok(None);
    }
    let size = (i + 1) as usize;
    let sub = Chains::subcomplex(a);
    let ambient = Chains::subcomplex(c);
    let d_a = sub.boundary_or_zero(size);
    let d_c = ambient.boundary_or_zero(size + 1);
    // Position of each i-face of `a` among the i-faces of `c`.
    let rows: Vec<usize> = a.faces_by_size()[size]
        .iter()
        .map(|f| {
            let g = Face::new(f.vertices().iter().map(|&v| map[v as usize]));
            c.index_of(&g).expect("checked subcomplex")
        })
        .collect();
    let n_c = c.faces_by_size()[size].len();
    with_field!(field, |f| {
        for z in nullspace_basis(f, &d_a.over(f)) {
            let mut v = vec![f.zero(); n_c];
            #[allow(clippy::clone_on_copy)]
            for (k, x) in z.iter().enumerate() {
                v[rows[k]] = x.clone();
            }
            if !in_column_space(f, &d_c.over(f), &v)? {
                let terms = a.faces_by_size()[size]
                    .iter()
                    .zip(&z)
                    .filter(|(_, x)| !f.is_zero(x))
                    .map(|(face, x)| (a.face_labels(face), x.to_string()))
                    .collect();
                return Ok(Some(ChainWitness { terms }));
            }
        }
        Ok(None)
    })
}

impl Chains<'_> {
    /// Boundary matrix, or an empty matrix with the right shape when `size`
    /// is out of range.
    fn boundary_or_zero(&self, size: usize) -> Matrix<i64> {
        if size == 0 {
            return Matrix::filled(0, self.count(0), 0);
        }
        if size >= self.kept.len() {
            return Matrix::filled(self.count(size - 1), 0, 0);
        }
        self.boundary(size)
    }
}

/// Whether `H_{d-1}(c, cost s) → H_{d-1}(c, cost t)` is surjective, where
/// `d - 1 = dim c` and `s ⊆ t` are faces of `c`.
///
/// The relative chains of `(c, cost s)` are the faces containing `s`. For
/// `s = ∅` the contrastar is void and the source is the reduced homology of
/// `c` itself.
pub fn relative_surjectivity(c: &Complex, s: &Face, t: &Face, field: FieldSpec) -> Result<bool> {
    if !c.contains(s) || !c.contains(t) {
        return Err(Error::NotAFace(format!(
            "{} or {}",
            c.describe(s),
            c.describe(t)
        )));
    }
    if !s.is_subset_of(t) {
        return Err(Error::InvalidArgument(format!(
            "{} is not contained in {}",
            c.describe(s),
            c.describe(t)
        )));
    }
    if s == t {
        return Ok(true);
    }
    let top = c.faces_by_size().len() - 1;
    let src = Chains::star_quotient(c, s);
    let dst = Chains::star_quotient(c, t);
    let d_src = src.boundary_or_zero(top);
    let d_dst = dst.boundary_or_zero(top);
    // Top chains of the target are a subset of those of the source.
    let proj: Vec<Option<usize>> = src.kept[top].iter().map(|&j| dst.pos[top][j]).collect();
    with_field!(field, |f| {
        let z_dst = d_dst.cols() - f.rank_int(&d_dst)?;
        if z_dst == 0 {
            return Ok(true);
        }
        let images: Vec<Vec<_>> = nullspace_basis(f, &d_src.over(f))
            .into_iter()
            .map(|z| {
                let mut v = vec![f.zero(); d_dst.cols()];
                for (k, x) in z.into_iter().enumerate() {
                    if let Some(p) = proj[k] {
                        v[p] = x;
                    }
                }
                v
            })
            .collect();
        if images.is_empty() {
            return Ok(false);
        }
        let m = Matrix::from_columns(d_dst.cols(), &images);
        Ok(f.rank(&m)? == z_dst)
    })
}
