//! Deciders for the Cohen-Macaulay / Buchsbaum family of properties.
//!
//! Every decider reduces to reduced Betti numbers over one field. Recursive
//! definitions ("links of links are CM") are flattened: the link of a face in
//! a link is itself a link in the original complex, so it is enough to test
//! each link once.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::homology::{self, BettiTable};
use crate::limits;
use crate::linalg::FieldSpec;

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A facet whose dimension differs from the complex's.
    NotPure { facet: Vec<String>, dim: isize },
    /// The link of `face` has homology below its top dimension.
    LinkHomology {
        face: Vec<String>,
        degree: isize,
        betti: u64,
    },
    /// The link of `face` is not a homology sphere of the right dimension.
    NotSphereLink { face: Vec<String>, betti: Vec<u64> },
    /// The link of `face` is neither a homology sphere nor acyclic, or has
    /// the wrong dimension.
    NotManifoldLink {
        face: Vec<String>,
        dim: isize,
        betti: Vec<u64>,
    },
    /// Removing the open star of `face` changes `β̃_degree`.
    ContrastarJump {
        face: Vec<String>,
        degree: isize,
        complex: u64,
        contrastar: u64,
    },
    /// Deleting `deleted` lowers the dimension.
    DimensionDrop { deleted: Vec<String>, dim: isize },
    /// Deleting `deleted` breaks the property for the reason in `cause`.
    Deletion {
        deleted: Vec<String>,
        cause: Box<Witness>,
    },
    /// The faces with acyclic links do not form a closed homology manifold
    /// of one dimension less.
    BadBoundary { reason: String },
    /// Top homology does not match the number of components.
    NotOrientable { top: u64, components: usize },
}

fn names(v: &[String]) -> String {
    format!("{{{}}}", v.join(","))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotPure { facet, dim } => {
                write!(f, "facet {} has dimension {dim}", names(facet))
            }
            Witness::LinkHomology {
                face,
                degree,
                betti,
            } => {
                write!(f, "link of {} has β̃_{degree} = {betti}", names(face))
            }
            Witness::NotSphereLink { face, betti } => {
                write!(
                    f,
                    "link of {} is not a homology sphere (β̃ = {betti:?})",
                    names(face)
                )
            }
            Witness::NotManifoldLink { face, dim, betti } => write!(
                f,
                "link of {} has dimension {dim} and β̃ = {betti:?}",
                names(face)
            ),
            Witness::ContrastarJump {
                face,
                degree,
                complex,
                contrastar,
            } => {
                let what = if face.len() == 1 { "vertex" } else { "face" };
                let shown = if face.len() == 1 {
                    face[0].clone()
                } else {
                    names(face)
                };
                write!(
                    f,
                    "{what} {shown}: β̃_{degree} of the contrastar is {contrastar}, of the complex {complex}"
                )
            }
            Witness::DimensionDrop { deleted, dim } => {
                write!(f, "deleting {} leaves dimension {dim}", names(deleted))
            }
            Witness::Deletion { deleted, cause } => {
                write!(f, "after deleting {}: {cause}", names(deleted))
            }
            Witness::BadBoundary { reason } => write!(f, "boundary: {reason}"),
            Witness::NotOrientable { top, components } => {
                write!(
                    f,
                    "top homology has dimension {top} but there are {components} components"
                )
            }
        }
    }
}

/// A boolean verdict with an optional reason for failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_failure(w: Option<Witness>) -> Self {
        Verdict {
            holds: w.is_none(),
            witness: w,
        }
    }
}

type Check = Result<Option<Witness>>;

/// Runs `check` over `items` in parallel and returns the first failure in
/// input order, so the witness does not depend on scheduling.
fn first_failure<T: Sync>(items: &[T], check: impl Fn(&T) -> Check + Sync + Send) -> Check {
    items
        .par_iter()
        .map(check)
        .find_first(|r| !matches!(r, Ok(None)))
        .unwrap_or(Ok(None))
}

fn purity(c: &Complex) -> Option<Witness> {
    let d = c.dim();
    c.facets()
        .iter()
        .find(|f| f.dim() != d)
        .map(|f| Witness::NotPure {
            facet: c.face_labels(f),
            dim: f.dim(),
        })
}

/// Fails if the link of `s` has nonzero `β̃_i` for some `i < dim link`.
fn link_cm(c: &Complex, s: &Face, field: FieldSpec) -> Check {
    let lk = c.link(s)?;
    let b = homology::betti(&lk, field)?;
    Ok((-1..lk.dim())
        .find(|&i| b.get(i) != 0)
        .map(|i| Witness::LinkHomology {
            face: c.face_labels(s),
            degree: i,
            betti: b.get(i),
        }))
}

fn cm_failure(c: &Complex, field: FieldSpec) -> Check {
    let faces: Vec<&Face> = c.all_faces().collect();
    first_failure(&faces, |s| link_cm(c, s, field))
}

fn buchsbaum_failure(c: &Complex, field: FieldSpec) -> Check {
    if let Some(w) = purity(c) {
        return Ok(Some(w));
    }
    let faces: Vec<&Face> = c.nonempty_faces().collect();
    first_failure(&faces, |s| link_cm(c, s, field))
}

/// The contrastar condition alone, over the given faces.
fn contrastar_failure(c: &Complex, field: FieldSpec, faces: &[&Face]) -> Check {
    let degree = c.dim() - 1;
    let base = homology::betti_number(c, field, degree)?;
    first_failure(faces, |t| {
        let b = homology::contrastar_betti_number(c, t, field, degree)?;
        Ok((b != base).then(|| Witness::ContrastarJump {
            face: c.face_labels(t),
            degree,
            complex: base,
            contrastar: b,
        }))
    })
}

fn buchsbaum_star_failure(c: &Complex, field: FieldSpec) -> Check {
    if let Some(w) = buchsbaum_failure(c, field)? {
        return Ok(Some(w));
    }
    let faces: Vec<&Face> = c.nonempty_faces().collect();
    contrastar_failure(c, field, &faces)
}

/// Fails unless every link, including that of the empty face, is a
/// homology sphere of dimension `dim c - |s|`.
fn gorenstein_star_failure(c: &Complex, field: FieldSpec) -> Check {
    if let Some(w) = purity(c) {
        return Ok(Some(w));
    }
    let faces: Vec<&Face> = c.all_faces().collect();
    first_failure(&faces, |s| {
        let lk = c.link(s)?;
        let b = homology::betti(&lk, field)?;
        let sphere = (-1..lk.dim()).all(|i| b.get(i) == 0) && b.get(lk.dim()) == 1;
        Ok((!sphere).then(|| Witness::NotSphereLink {
            face: c.face_labels(s),
            betti: b.betti,
        }))
    })
}

/// Number of vertex subsets with fewer than `m` elements, checked against
/// the subset guard.
fn guard_subsets(n: usize, m: usize) -> Result<()> {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..m.min(n + 1) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((n - k) as u128) / (k as u128 + 1);
    }
    let limit = limits::max_subsets() as u128;
    if total > limit {
        return Err(Error::SubsetLimit {
            count: total,
            limit,
        });
    }
    Ok(())
}

/// Checks `property` on every deletion of fewer than `m` vertices, requiring
/// the dimension to stay put.
fn deletion_failure(
    c: &Complex,
    m: usize,
    property: impl Fn(&Complex) -> Check + Sync + Send,
) -> Check {
    guard_subsets(c.n_vertices(), m)?;
    let n = c.n_vertices() as u32;
    let subsets: Vec<Face> = (0..m)
        .flat_map(|k| (0..n).combinations(k).map(Face::new))
        .collect();
    first_failure(&subsets, |t| {
        let del = c.deletion(t)?;
        if del.dim() != c.dim() {
            return Ok(Some(Witness::DimensionDrop {
                deleted: c.face_labels(t),
                dim: del.dim(),
            }));
        }
        let inner = property(&del)?;
        Ok(inner.map(|w| {
            if t.is_empty() {
                w
            } else {
                Witness::Deletion {
                    deleted: c.face_labels(t),
                    cause: Box::new(w),
                }
            }
        }))
    })
}

pub fn is_cohen_macaulay(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    cm_failure(c, field).map(Verdict::from_failure)
}

/// Deleting any fewer than `m` vertices leaves a CM complex of the same
/// dimension. `m = 1` is plain CM and `m = 2` is doubly CM.
pub fn is_m_cohen_macaulay(c: &Complex, field: FieldSpec, m: usize) -> Result<Verdict> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "m-Cohen-Macaulay needs m >= 1".into(),
        ));
    }
    deletion_failure(c, m, |d| cm_failure(d, field)).map(Verdict::from_failure)
}

pub fn is_doubly_cohen_macaulay(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    is_m_cohen_macaulay(c, field, 2)
}

/// Pure, with every nonempty-face link CM.
pub fn is_buchsbaum(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    buchsbaum_failure(c, field).map(Verdict::from_failure)
}

pub fn is_m_buchsbaum(c: &Complex, field: FieldSpec, m: usize) -> Result<Verdict> {
    if m == 0 {
        return Err(Error::InvalidArgument("m-Buchsbaum needs m >= 1".into()));
    }
    deletion_failure(c, m, |d| buchsbaum_failure(d, field)).map(Verdict::from_failure)
}

pub fn is_doubly_buchsbaum(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    is_m_buchsbaum(c, field, 2)
}

/// Buchsbaum, and `β̃_{d-2}(cost τ) = β̃_{d-2}(c)` for every nonempty face
/// `τ`, where `d - 1 = dim c`. Removing a point in the relative interior of
/// `τ` deformation retracts onto the contrastar of `τ`, so faces stand in
/// for points.
pub fn is_buchsbaum_star(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    buchsbaum_star_failure(c, field).map(Verdict::from_failure)
}

/// The contrastar condition checked on facets only. Not a decider: used to
/// measure whether the facet shortcut agrees with the full check.
pub fn buchsbaum_star_on_facets(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    if let Some(w) = buchsbaum_failure(c, field)? {
        return Ok(Verdict::from_failure(Some(w)));
    }
    let facets: Vec<&Face> = c.facets().iter().collect();
    contrastar_failure(c, field, &facets).map(Verdict::from_failure)
}

/// Deleting any fewer than `m` vertices leaves a Buchsbaum* complex of the
/// same dimension. `m = 0` means Buchsbaum and `m = 1` Buchsbaum*.
pub fn is_m_buchsbaum_star(c: &Complex, field: FieldSpec, m: usize) -> Result<Verdict> {
    if m == 0 {
        return is_buchsbaum(c, field);
    }
    deletion_failure(c, m, |d| buchsbaum_star_failure(d, field)).map(Verdict::from_failure)
}

/// Every link, including the complex itself, is a homology sphere of the
/// complementary dimension.
pub fn is_gorenstein_star(c: &Complex, field: FieldSpec) -> Result<Verdict> {
    gorenstein_star_failure(c, field).map(Verdict::from_failure)
}

/// Result of the homology-manifold recognition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldInfo {
    pub manifold: bool,
    /// The subcomplex of faces whose links are acyclic; `None` when the
    /// manifold is closed or recognition failed.
    #[serde(serialize_with = "serialize_boundary")]
    pub boundary: Option<Complex>,
    pub orientable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn serialize_boundary<S: serde::Serializer>(
    b: &Option<Complex>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match b {
        None => s.serialize_none(),
        Some(c) => s.collect_seq(c.labeled_facets()),
    }
}

impl ManifoldInfo {
    pub fn is_closed(&self) -> bool {
        self.manifold && self.boundary.is_none()
    }

    fn failed(w: Witness) -> Self {
        ManifoldInfo {
            manifold: false,
            boundary: None,
            orientable: false,
            witness: Some(w),
        }
    }
}

fn is_sphere(b: &BettiTable, dim: isize) -> bool {
    (-1..=dim).all(|i| b.get(i) == u64::from(i == dim)) && b.top() == dim
}

/// Recognizes homology manifolds, possibly with boundary.
///
/// Every nonempty-face link must be a homology sphere or acyclic, of
/// dimension `dim c - |σ|`. The faces with acyclic links must form a closed
/// homology manifold of dimension `dim c - 1` whose faces are exactly those
/// faces. Orientability compares the top homology of `c` (relative to the
/// boundary, if any) with the number of components.
pub fn homology_manifold(c: &Complex, field: FieldSpec) -> Result<ManifoldInfo> {
    if purity(c).is_some() {
        return Err(Error::NotPure);
    }
    let d = c.dim();
    let faces: Vec<&Face> = c.nonempty_faces().collect();
    let links: Vec<Result<Option<bool>>> = faces
        .par_iter()
        .map(|s| {
            let lk = c.link(s)?;
            let expected = d - s.len() as isize;
            let b = homology::betti(&lk, field)?;
            if lk.dim() != expected {
                return Ok(None);
            }
            if is_sphere(&b, expected) {
                Ok(Some(false))
            } else if b.is_acyclic() {
                Ok(Some(true))
            } else {
                Ok(None)
            }
        })
        .collect();
    let mut boundary_faces = Vec::new();
    for (s, r) in faces.iter().zip(links) {
        match r? {
            Some(true) => boundary_faces.push((*s).clone()),
            Some(false) => {}
            None => {
                let lk = c.link(s)?;
                let b = homology::betti(&lk, field)?;
                return Ok(ManifoldInfo::failed(Witness::NotManifoldLink {
                    face: c.face_labels(s),
                    dim: lk.dim(),
                    betti: b.betti,
                }));
            }
        }
    }
    let components = c.components().len();
    if boundary_faces.is_empty() {
        let top = homology::betti_number(c, field, d)? + u64::from(d == 0);
        return Ok(orientability(None, top, components));
    }
    let bd = c.subcomplex(boundary_faces.clone())?;
    let bad = |reason: String| -> Result<ManifoldInfo> {
        Ok(ManifoldInfo::failed(Witness::BadBoundary { reason }))
    };
    if bd.num_faces() != boundary_faces.len() + 1 {
        return bad("faces with acyclic links are not closed under taking faces".into());
    }
    if bd.dim() != d - 1 || !bd.is_pure() {
        return bad(format!("expected a pure complex of dimension {}", d - 1));
    }
    // Purity of the boundary was checked just above.
    let inner = homology_manifold(&bd, field)?;
    if !inner.is_closed() {
        let why = inner
            .witness
            .map_or("it has a boundary itself".into(), |w| w.to_string());
        return bad(format!("not a closed homology manifold: {why}"));
    }
    let top = homology::relative_betti(c, &bd, field, d)?;
    Ok(orientability(Some(bd), top, components))
}

fn orientability(boundary: Option<Complex>, top: u64, components: usize) -> ManifoldInfo {
    let orientable = top == components as u64;
    ManifoldInfo {
        manifold: true,
        boundary,
        orientable,
        witness: (!orientable).then_some(Witness::NotOrientable { top, components }),
    }
}

/// Property names used in reports, in report order.
pub const PROPERTIES: &[&str] = &[
    "pure",
    "cohen_macaulay",
    "doubly_cohen_macaulay",
    "buchsbaum",
    "doubly_buchsbaum",
    "buchsbaum_star",
    "doubly_buchsbaum_star",
    "gorenstein_star",
    "homology_manifold",
    "orientable_homology_manifold",
];

/// Verdicts for every property over one field.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub field: FieldSpec,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Witness>,
    /// Implications between the verdicts that failed; always empty unless a
    /// decider is wrong.
    pub inconsistencies: Vec<String>,
    /// Wall-clock time per property in microseconds. Left out of the
    /// serialized form so that reports are reproducible byte for byte.
    #[serde(skip)]
    pub timings_us: BTreeMap<String, u64>,
}

impl PropertyReport {
    pub fn get(&self, property: &str) -> Option<bool> {
        self.verdicts.get(property).copied()
    }
}

/// Runs every decider. Properties requiring deletions are skipped with an
/// error only if the subset guard trips.
pub fn property_report(c: &Complex, field: FieldSpec) -> Result<PropertyReport> {
    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut timings = BTreeMap::new();
    let mut record = |name: &str, run: &dyn Fn() -> Result<Verdict>| -> Result<()> {
        let start = Instant::now();
        let v = run()?;
        timings.insert(name.to_string(), start.elapsed().as_micros() as u64);
        verdicts.insert(name.to_string(), v.holds);
        if let Some(w) = v.witness {
            witnesses.insert(name.to_string(), w);
        }
        Ok(())
    };
    record("pure", &|| Ok(Verdict::from_failure(purity(c))))?;
    record("cohen_macaulay", &|| is_cohen_macaulay(c, field))?;
    record("doubly_cohen_macaulay", &|| {
        is_doubly_cohen_macaulay(c, field)
    })?;
    record("buchsbaum", &|| is_buchsbaum(c, field))?;
    record("doubly_buchsbaum", &|| is_doubly_buchsbaum(c, field))?;
    record("buchsbaum_star", &|| is_buchsbaum_star(c, field))?;
    record("doubly_buchsbaum_star", &|| {
        is_m_buchsbaum_star(c, field, 2)
    })?;
    record("gorenstein_star", &|| is_gorenstein_star(c, field))?;
    let start = Instant::now();
    let mf = match homology_manifold(c, field) {
        Err(Error::NotPure) => ManifoldInfo::failed(purity(c).expect("impure")),
        other => other?,
    };
    let elapsed = start.elapsed().as_micros() as u64;
    timings.insert("homology_manifold".into(), elapsed);
    verdicts.insert("homology_manifold".into(), mf.manifold);
    verdicts.insert(
        "orientable_homology_manifold".into(),
        mf.manifold && mf.orientable,
    );
    if let Some(w) = mf.witness {
        let key = if mf.manifold {
            "orientable_homology_manifold"
        } else {
            "homology_manifold"
        };
        witnesses.insert(key.into(), w);
    }
    let inconsistencies = implication_violations(&verdicts);
    Ok(PropertyReport {
        field,
        verdicts,
        witnesses,
        inconsistencies,
        timings_us: timings,
    })
}

/// Implications that every report must satisfy.
pub const IMPLICATIONS: &[(&str, &str)] = &[
    ("cohen_macaulay", "buchsbaum"),
    ("doubly_cohen_macaulay", "cohen_macaulay"),
    ("doubly_cohen_macaulay", "buchsbaum_star"),
    ("doubly_buchsbaum", "buchsbaum"),
    ("buchsbaum_star", "buchsbaum"),
    ("buchsbaum_star", "doubly_buchsbaum"),
    ("doubly_buchsbaum_star", "buchsbaum_star"),
    ("gorenstein_star", "doubly_cohen_macaulay"),
    ("orientable_homology_manifold", "homology_manifold"),
];

pub fn implication_violations(verdicts: &BTreeMap<String, bool>) -> Vec<String> {
    IMPLICATIONS
        .iter()
        .filter(|(a, b)| verdicts.get(*a) == Some(&true) && verdicts.get(*b) == Some(&false))
        .map(|(a, b)| format!("{a} holds but {b} does not"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named;

    const Q: FieldSpec = FieldSpec::Rationals;
    const GF2: FieldSpec = FieldSpec::Prime(2);

    fn c(facets: &[&[&str]]) -> Complex {
        Complex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn holds(v: Result<Verdict>) -> bool {
        v.unwrap().holds
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(holds(is_cohen_macaulay(
            &named("simplex_boundary:3").unwrap(),
            Q
        )));
        let two_edges = c(&[&["a", "b"], &["c", "d"]]);
        let v = is_cohen_macaulay(&two_edges, Q).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::LinkHomology {
                face: vec![],
                degree: 0,
                betti: 1
            })
        );
        let t = named("torus7").unwrap();
        let v = is_cohen_macaulay(&t, Q).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::LinkHomology {
                face: vec![],
                degree: 1,
                betti: 2
            })
        );
    }

    #[test]
    fn doubly_cohen_macaulay_examples() {
        let oct = named("cross_polytope:3").unwrap();
        assert!(holds(is_m_cohen_macaulay(&oct, Q, 2)));
        assert!(holds(is_m_cohen_macaulay(&oct, Q, 1)));
        assert!(!holds(is_m_cohen_macaulay(&oct.cone().unwrap(), Q, 2)));
        for d in 1..=4 {
            assert!(holds(is_m_cohen_macaulay(
                &named(&format!("simplex_boundary:{d}")).unwrap(),
                Q,
                2
            )));
        }
        assert!(is_m_cohen_macaulay(&oct, Q, 0).is_err());
    }

    #[test]
    fn buchsbaum_examples() {
        assert!(holds(is_buchsbaum(&named("torus7").unwrap(), Q)));
        assert!(holds(is_buchsbaum(&named("example_2_10_i").unwrap(), Q)));
        let bowtie = named("bowtie").unwrap();
        let v = is_buchsbaum(&bowtie, Q).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::LinkHomology {
                face: vec!["0".into()],
                degree: 0,
                betti: 1
            })
        );
        let nonpure = c(&[&["a", "b", "c"], &["c", "d"]]);
        assert!(matches!(
            is_buchsbaum(&nonpure, Q).unwrap().witness,
            Some(Witness::NotPure { .. })
        ));
    }

    #[test]
    fn doubly_buchsbaum_examples() {
        assert!(holds(is_doubly_buchsbaum(
            &named("example_2_10_i").unwrap(),
            Q
        )));
        assert!(holds(is_doubly_buchsbaum(&named("rp2_6").unwrap(), Q)));
        assert!(holds(is_m_buchsbaum(&named("torus7").unwrap(), Q, 2)));
        assert!(!holds(is_doubly_buchsbaum(&named("bowtie").unwrap(), Q)));
        let star = c(&[&["p", "a"], &["p", "b"], &["p", "c"], &["p", "d"]]);
        assert!(!holds(is_m_buchsbaum(&star, Q, 2)));
    }

    #[test]
    fn buchsbaum_star_examples() {
        let ex = named("example_2_10_i").unwrap();
        for field in [Q, GF2] {
            let v = is_buchsbaum_star(&ex, field).unwrap();
            assert_eq!(
                v.witness,
                Some(Witness::ContrastarJump {
                    face: vec!["p".into()],
                    degree: 0,
                    complex: 0,
                    contrastar: 1
                })
            );
        }
        assert!(holds(is_buchsbaum_star(
            &named("cross_polytope:3").unwrap(),
            Q
        )));
        let rp2 = named("rp2_6").unwrap();
        assert!(holds(is_buchsbaum_star(&rp2, GF2)));
        assert!(!holds(is_buchsbaum_star(&rp2, Q)));
        // Zero-dimensional: needs at least two points.
        assert!(holds(is_buchsbaum_star(&named("s0").unwrap(), Q)));
        assert!(!holds(is_buchsbaum_star(&c(&[&["x"]]), Q)));
    }

    #[test]
    fn m_buchsbaum_star_examples() {
        let oct = named("cross_polytope:3").unwrap();
        assert!(holds(is_m_buchsbaum_star(&oct, Q, 0)));
        assert!(holds(is_m_buchsbaum_star(&oct, Q, 1)));
        assert!(!holds(is_m_buchsbaum_star(&oct, Q, 2)));
        assert!(holds(is_m_buchsbaum_star(&named("torus7").unwrap(), Q, 0)));
    }

    #[test]
    fn gorenstein_star_examples() {
        for d in 1..=4 {
            assert!(holds(is_gorenstein_star(
                &named(&format!("simplex_boundary:{d}")).unwrap(),
                Q
            )));
        }
        assert!(holds(is_gorenstein_star(
            &named("cross_polytope:3").unwrap(),
            Q
        )));
        assert!(holds(is_gorenstein_star(&named("s0").unwrap(), Q)));
        assert!(!holds(is_gorenstein_star(&named("torus7").unwrap(), Q)));
        assert!(!holds(is_gorenstein_star(&named("simplex:2").unwrap(), Q)));
    }

    #[test]
    fn manifolds() {
        let t = named("torus7").unwrap();
        let info = homology_manifold(&t, Q).unwrap();
        assert!(info.is_closed() && info.orientable);

        let rp2 = named("rp2_6").unwrap();
        let q = homology_manifold(&rp2, Q).unwrap();
        assert!(q.is_closed() && !q.orientable);
        let two = homology_manifold(&rp2, GF2).unwrap();
        assert!(two.is_closed() && two.orientable);

        let tri = named("simplex:2").unwrap();
        let info = homology_manifold(&tri, Q).unwrap();
        assert!(info.manifold && info.orientable);
        assert_eq!(info.boundary.unwrap().f_vector(), vec![1, 3, 3]);

        let bowtie = named("bowtie").unwrap();
        assert!(!homology_manifold(&bowtie, Q).unwrap().manifold);
        let pinched = c(&[&["a", "b"], &["a", "c"], &["a", "d"]]);
        assert!(!homology_manifold(&pinched, Q).unwrap().manifold);
    }

    #[test]
    fn reports() {
        let ex = property_report(&named("example_2_10_i").unwrap(), Q).unwrap();
        assert_eq!(ex.get("buchsbaum"), Some(true));
        assert_eq!(ex.get("doubly_buchsbaum"), Some(true));
        assert_eq!(ex.get("buchsbaum_star"), Some(false));
        assert_eq!(ex.get("cohen_macaulay"), Some(true));
        assert_eq!(ex.get("doubly_cohen_macaulay"), Some(false));
        assert!(ex.inconsistencies.is_empty());

        let oct = property_report(&named("cross_polytope:3").unwrap(), Q).unwrap();
        for p in [
            "cohen_macaulay",
            "doubly_cohen_macaulay",
            "buchsbaum",
            "buchsbaum_star",
            "gorenstein_star",
        ] {
            assert_eq!(oct.get(p), Some(true), "{p}");
        }
        let cone = property_report(&named("cross_polytope:3").unwrap().cone().unwrap(), Q).unwrap();
        assert_eq!(cone.get("cohen_macaulay"), Some(true));
        assert_eq!(cone.get("buchsbaum_star"), Some(false));
        assert!(cone.inconsistencies.is_empty());
        assert_eq!(oct.verdicts.len(), PROPERTIES.len());
    }

    #[test]
    fn subset_guard() {
        assert!(guard_subsets(10, 3).is_ok());
        assert!(matches!(
            guard_subsets(2000, 3),
            Err(Error::SubsetLimit { .. })
        ));
    }

    #[test]
    fn violation_detection() {
        let mut v = BTreeMap::new();
        v.insert("buchsbaum_star".to_string(), true);
        v.insert("doubly_buchsbaum".to_string(), false);
        assert_eq!(implication_violations(&v).len(), 1);
    }
}
