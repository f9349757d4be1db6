//! Named complexes, stacked spheres, product triangulations, and a checker
//! for the hypotheses of the generalized ear decomposition.

use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::homology::{self, ChainWitness};
use crate::linalg::FieldSpec;
use crate::properties;
use crate::report::Outcome;

/// Names accepted by [`named`]; `d` and `n` stand for integers.
pub const NAMED: &[&str] = &[
    "simplex:d",
    "simplex_boundary:d",
    "cross_polytope:d",
    "cycle:n",
    "path:n",
    "s0",
    "torus7",
    "rp2_6",
    "example_2_10_i",
    "example_2_10_iii",
    "bowtie",
];

fn numbered(facets: Vec<Vec<u32>>) -> Result<Complex> {
    Complex::from_facets(facets.iter().map(|f| f.iter().map(|v| v.to_string())))
}

fn lettered(facets: &[&str]) -> Result<Complex> {
    Complex::from_facets(facets.iter().map(|f| f.chars().map(String::from)))
}

/// The full simplex on `d + 1` vertices.
pub fn simplex(d: usize) -> Result<Complex> {
    numbered(vec![(0..=d as u32).collect()])
}

/// Boundary of the `d`-simplex, a `(d-1)`-sphere on `d + 1` vertices.
pub fn simplex_boundary(d: usize) -> Result<Complex> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "simplex_boundary needs d ≥ 1".into(),
        ));
    }
    let all: Vec<u32> = (0..=d as u32).collect();
    numbered(
        all.iter()
            .map(|&v| all.iter().copied().filter(|&u| u != v).collect())
            .collect(),
    )
}

/// Boundary of the `d`-dimensional cross-polytope. Antipodal vertices are
/// labelled `i+` and `i-`.
pub fn cross_polytope(d: usize) -> Result<Complex> {
    if d == 0 {
        return Err(Error::InvalidArgument("cross_polytope needs d ≥ 1".into()));
    }
    let facets = (0..1u64 << d).map(|signs| {
        (0..d)
            .map(|i| format!("{i}{}", if signs >> i & 1 == 0 { '+' } else { '-' }))
            .collect::<Vec<_>>()
    });
    Complex::from_facets(facets)
}

pub fn cycle(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "a cycle needs at least 3 vertices".into(),
        ));
    }
    numbered((0..n as u32).map(|i| vec![i, (i + 1) % n as u32]).collect())
}

/// Path with `n` vertices.
pub fn path(n: usize) -> Result<Complex> {
    match n {
        0 => Err(Error::InvalidArgument(
            "a path needs at least 1 vertex".into(),
        )),
        1 => numbered(vec![vec![0]]),
        _ => numbered((1..n as u32).map(|i| vec![i - 1, i]).collect()),
    }
}

/// The 7-vertex torus: facets `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> Result<Complex> {
    let facets = (0..7u32)
        .flat_map(|i| {
            [
                vec![i, (i + 1) % 7, (i + 3) % 7],
                vec![i, (i + 2) % 7, (i + 3) % 7],
            ]
        })
        .collect();
    numbered(facets)
}

/// The 6-vertex real projective plane (half of the icosahedron's boundary).
pub fn rp2_6() -> Result<Complex> {
    numbered(
        [
            "124", "126", "135", "136", "145", "234", "235", "256", "346", "456",
        ]
        .iter()
        .map(|f| f.chars().map(|c| c.to_digit(10).unwrap()).collect())
        .collect(),
    )
}

/// Two triangles `pab` and `pcd` with their interiors missing: a graph
/// whose links are fine but whose vertex `p` is a cut point.
pub fn example_2_10_i() -> Result<Complex> {
    lettered(&["pa", "pb", "ab", "pc", "pd", "cd"])
}

/// The 7-vertex torus with one extra triangle whose boundary is an
/// essential cycle: the lexicographically first non-facet triple whose
/// 3-cycle is nonzero in `H₁` of the torus over both the rationals and
/// GF(2).
pub fn example_2_10_iii() -> Result<Complex> {
    static TRIANGLE: OnceLock<Vec<u32>> = OnceLock::new();
    let torus = torus7()?;
    let tri = match TRIANGLE.get() {
        Some(t) => t.clone(),
        None => {
            let found = essential_triangle(&torus)?;
            TRIANGLE.get_or_init(|| found).clone()
        }
    };
    let mut facets: Vec<Vec<String>> = torus.labeled_facets();
    facets.push(tri.iter().map(|v| torus.label(*v).to_string()).collect());
    Complex::from_facets(facets)
}

fn essential_triangle(torus: &Complex) -> Result<Vec<u32>> {
    let gf2 = FieldSpec::prime(2)?;
    for t in (0..torus.n_vertices() as u32).combinations(3) {
        if torus.contains(&Face::new(t.iter().copied())) {
            continue;
        }
        let rim = torus.subcomplex(
            t.iter()
                .tuple_combinations()
                .map(|(&a, &b)| Face::new([a, b]))
                .collect(),
        )?;
        if !homology::inclusion_induced_is_zero(&rim, torus, 1, FieldSpec::Rationals)?
            && !homology::inclusion_induced_is_zero(&rim, torus, 1, gf2)?
        {
            return Ok(t);
        }
    }
    Err(Error::InvalidArgument(
        "no essential triangle in the torus".into(),
    ))
}

pub fn bowtie() -> Result<Complex> {
    numbered(vec![vec![0, 1, 2], vec![0, 3, 4]])
}

/// Looks up a complex by name; see [`NAMED`]. `name(d)` and `named` with
/// the number glued on (`cycle5`) are accepted as well as `name:d`.
pub fn named(name: &str) -> Result<Complex> {
    let unknown = || Error::UnknownName(name.to_string());
    let (base, arg) = match name
        .split_once(':')
        .or_else(|| name.strip_suffix(')').and_then(|s| s.split_once('(')))
    {
        Some((b, a)) => (b, Some(a.trim().parse::<usize>().map_err(|_| unknown())?)),
        None => {
            let digits = name.len() - name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
            let (b, a) = name.split_at(name.len() - digits);
            if [
                "simplex",
                "simplex_boundary",
                "cross_polytope",
                "cycle",
                "path",
            ]
            .contains(&b)
                && digits > 0
            {
                (b, Some(a.parse::<usize>().map_err(|_| unknown())?))
            } else {
                (name, None)
            }
        }
    };
    match (base, arg) {
        ("simplex", Some(d)) => simplex(d),
        ("simplex_boundary", Some(d)) => simplex_boundary(d),
        ("cross_polytope", Some(d)) => cross_polytope(d),
        ("cycle", Some(n)) => cycle(n),
        ("path", Some(n)) => path(n),
        ("s0", None) => numbered(vec![vec![0], vec![1]]),
        ("torus7", None) => torus7(),
        ("rp2_6", None) => rp2_6(),
        ("example_2_10_i", None) => example_2_10_i(),
        ("example_2_10_iii", None) => example_2_10_iii(),
        ("bowtie", None) => bowtie(),
        _ => Err(unknown()),
    }
}

/// A stacked `(d-1)`-sphere on `n` vertices: the boundary of the
/// `d`-simplex, with the lexicographically first facet stellarly
/// subdivided until there are `n` vertices.
pub fn stacked_sphere(n: usize, d: usize) -> Result<Complex> {
    if d < 2 || n < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "stacked sphere needs d ≥ 2 and n ≥ d + 1, got n = {n}, d = {d}"
        )));
    }
    let all: Vec<u32> = (0..=d as u32).collect();
    let mut facets: Vec<Vec<u32>> = all
        .iter()
        .map(|&v| all.iter().copied().filter(|&u| u != v).collect())
        .collect();
    for new in d as u32 + 1..n as u32 {
        facets.sort();
        let first = facets.remove(0);
        for &v in &first {
            let mut f: Vec<u32> = first.iter().copied().filter(|&u| u != v).collect();
            f.push(new);
            facets.push(f);
        }
    }
    numbered(facets)
}

/// Staircase triangulation of `|a| × |b|`.
///
/// Vertices are pairs labelled `(x,y)`, ordered lexicographically by
/// (index in `a`, index in `b`). Each pair of facets `σ × τ` contributes
/// one simplex per monotone lattice path through the `|σ| × |τ|` grid.
pub fn product(a: &Complex, b: &Complex) -> Result<Complex> {
    let nb = b.n_vertices() as u32;
    let labels: Vec<String> = (0..a.n_vertices() as u32)
        .cartesian_product(0..nb)
        .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
        .collect();
    let mut facets = Vec::new();
    for s in a.facets() {
        for t in b.facets() {
            let (p, q) = (s.len() - 1, t.len() - 1);
            // A path is determined by which of its p + q steps advance in `a`.
            for steps in (0..p + q).combinations(p) {
                let (mut i, mut j) = (0, 0);
                let mut verts = vec![s.vertices()[0] * nb + t.vertices()[0]];
                for k in 0..p + q {
                    if steps.contains(&k) {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    verts.push(s.vertices()[i] * nb + t.vertices()[j]);
                }
                facets.push(Face::new(verts));
            }
        }
    }
    Complex::from_index_facets(&labels, facets)
}

/// Candidate pieces `Δ_1, …, Δ_m` of an ear decomposition, each a
/// subcomplex of the ambient complex (matched by vertex labels).
#[derive(Clone, Debug)]
pub struct EarDecomposition {
    pub pieces: Vec<Complex>,
}

/// One checked hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    /// 1-based index of the piece, or 0 for conditions on the whole list.
    pub piece: usize,
    /// One of `i`, `ii`, `iii`, `iii(a)`, `iii(b)`, `iii(c)`.
    pub condition: &'static str,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ChainWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarReport {
    pub field: FieldSpec,
    pub checks: Vec<ConditionCheck>,
    pub hypotheses_hold: bool,
    /// Evaluated only when every hypothesis holds.
    pub buchsbaum_star: Option<bool>,
    /// Set when the hypotheses hold but the ambient complex is not
    /// Buchsbaum*; this indicates a bug.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconsistency: Option<String>,
}

impl EarReport {
    pub fn failures(&self) -> impl Iterator<Item = &ConditionCheck> {
        self.checks.iter().filter(|c| c.outcome.is_fail())
    }
}

fn sorted_facets(c: &Complex) -> Vec<Vec<String>> {
    let mut f = c.labeled_facets();
    f.sort();
    f
}

/// Union of complexes that share the ambient label space.
fn union_in(ambient: &Complex, parts: &[Complex]) -> Result<Complex> {
    let mut facets = Vec::new();
    for p in parts {
        facets.extend(p.embed_into(ambient)?);
    }
    Complex::from_index_facets(ambient.labels(), facets)
}

/// Faces common to `a` and `b`, as labelled facets (empty when only the
/// empty face is shared).
fn intersection(ambient: &Complex, a: &Complex, b: &Complex) -> Result<Vec<Vec<String>>> {
    let map = a.vertex_map_into(ambient)?;
    let b_map = b.vertex_map_into(ambient)?;
    let b_faces: std::collections::HashSet<Face> = b
        .nonempty_faces()
        .map(|f| Face::new(f.vertices().iter().map(|&v| b_map[v as usize])))
        .collect();
    let common: Vec<Face> = a
        .nonempty_faces()
        .map(|f| Face::new(f.vertices().iter().map(|&v| map[v as usize])))
        .filter(|f| b_faces.contains(f))
        .collect();
    if common.is_empty() {
        return Ok(Vec::new());
    }
    Ok(sorted_facets(&Complex::from_index_facets(
        ambient.labels(),
        common,
    )?))
}

/// Checks every hypothesis of the ear decomposition theorem for `e` and,
/// when all hold, confirms that `ambient` is Buchsbaum* over `field`.
/// The theorem is one-way, so failing hypotheses say nothing about the
/// ambient complex.
pub fn verify_ear_decomposition(
    ambient: &Complex,
    e: &EarDecomposition,
    field: FieldSpec,
) -> Result<EarReport> {
    if e.pieces.is_empty() {
        return Err(Error::InvalidArgument(
            "an ear decomposition needs at least one piece".into(),
        ));
    }
    for (i, p) in e.pieces.iter().enumerate() {
        if !p.is_subcomplex_of(ambient) {
            return Err(Error::NotSubcomplex(format!(
                "piece {} is not a subcomplex",
                i + 1
            )));
        }
    }
    let d = ambient.dim();
    let mut checks = Vec::new();
    let mut push = |piece, condition, outcome, witness| {
        checks.push(ConditionCheck {
            piece,
            condition,
            outcome,
            witness,
        })
    };

    let union = union_in(ambient, &e.pieces)?;
    push(
        0,
        "i",
        if sorted_facets(&union) == sorted_facets(ambient) {
            Outcome::Pass
        } else {
            Outcome::fail("the pieces do not cover the complex")
        },
        None,
    );

    let first = &e.pieces[0];
    let ii = if first.dim() != d {
        Outcome::fail(format!("dimension {} instead of {d}", first.dim()))
    } else if !first.is_pure() {
        Outcome::fail("not pure")
    } else {
        let m = properties::homology_manifold(first, field)?;
        if !m.is_closed() {
            Outcome::fail("not a closed homology manifold")
        } else if !m.orientable {
            Outcome::fail("not orientable")
        } else {
            Outcome::Pass
        }
    };
    push(1, "ii", ii, None);

    for i in 1..e.pieces.len() {
        let piece = &e.pieces[i];
        let n = i + 1;
        let info = if piece.dim() == d && piece.is_pure() {
            Some(properties::homology_manifold(piece, field)?)
        } else {
            None
        };
        let boundary = info.as_ref().and_then(|m| m.boundary.clone());
        let iii = match &info {
            None => Outcome::fail(format!("not pure of dimension {d}")),
            Some(m) if !m.manifold => Outcome::fail("not a homology manifold"),
            Some(_) if boundary.is_none() => Outcome::fail("has no boundary"),
            Some(_) if !piece.graph().is_connected() => Outcome::fail("not connected"),
            Some(m) if !m.orientable => Outcome::fail("not orientable"),
            Some(_) => Outcome::Pass,
        };
        push(n, "iii", iii, None);
        let Some(bd) = boundary else {
            continue;
        };

        let a = if bd.dim() != d - 1 || !bd.is_pure() {
            Outcome::fail(format!("boundary is not pure of dimension {}", d - 1))
        } else if !bd.graph().is_connected() {
            Outcome::fail("boundary is not connected")
        } else {
            let m = properties::homology_manifold(&bd, field)?;
            if !m.is_closed() {
                Outcome::fail("boundary is not a closed homology manifold")
            } else if !m.orientable {
                Outcome::fail("boundary is not orientable")
            } else {
                Outcome::Pass
            }
        };
        push(n, "iii(a)", a, None);

        let earlier = union_in(ambient, &e.pieces[..i])?;
        let b = if intersection(ambient, piece, &earlier)? == sorted_facets(&bd) {
            Outcome::Pass
        } else {
            Outcome::fail("boundary differs from the intersection with the earlier pieces")
        };
        push(n, "iii(b)", b, None);

        let mut c = (Outcome::Pass, None);
        if bd.is_subcomplex_of(&earlier) {
            for k in [d - 1, d - 2] {
                if k < 0 {
                    continue;
                }
                if let Some(w) = homology::nonzero_inclusion_witness(&bd, &earlier, k, field)? {
                    c = (
                        Outcome::fail(format!(
                            "H̃_{k} of the boundary maps nonzero into the earlier pieces"
                        )),
                        Some(w),
                    );
                    break;
                }
            }
        } else {
            c.0 = Outcome::fail("boundary is not contained in the earlier pieces");
        }
        push(n, "iii(c)", c.0, c.1);
    }

    let hypotheses_hold = checks.iter().all(|c| c.outcome.is_pass());
    let (buchsbaum_star, inconsistency) = if hypotheses_hold {
        let holds = properties::is_buchsbaum_star(ambient, field)?.holds;
        let bug = (!holds)
            .then(|| "BUG: every hypothesis holds but the complex is not Buchsbaum*".to_string());
        (Some(holds), bug)
    } else {
        (None, None)
    };
    Ok(EarReport {
        field,
        checks,
        hypotheses_hold,
        buchsbaum_star,
        inconsistency,
    })
}

/// The torus with a disc (cone over a bounding 3-cycle `{0,1,3}` with a
/// new apex) attached: an ear decomposition with two pieces whose
/// hypotheses all hold.
pub fn ear_example_cone_on_torus() -> Result<(Complex, EarDecomposition)> {
    let torus = torus7()?;
    let rim = ["0", "1", "3"];
    let disc = Complex::from_facets(rim.iter().tuple_combinations().map(|(a, b)| [*a, *b, "x"]))?;
    let mut facets = torus.labeled_facets();
    facets.extend(disc.labeled_facets());
    let ambient = Complex::from_facets(facets)?;
    Ok((
        ambient,
        EarDecomposition {
            pieces: vec![torus, disc],
        },
    ))
}

/// The torus plus one triangle whose boundary is essential: every
/// hypothesis holds except the vanishing of the induced map on `H̃_1`.
pub fn ear_example_essential_triangle() -> Result<(Complex, EarDecomposition)> {
    let ambient = example_2_10_iii()?;
    let torus = torus7()?;
    let extra = ambient
        .labeled_facets()
        .into_iter()
        .find(|f| torus.face_by_labels(f).is_none_or(|g| !torus.contains(&g)))
        .expect("the extra triangle");
    let disc = Complex::from_facets([extra])?;
    Ok((
        ambient,
        EarDecomposition {
            pieces: vec![torus, disc],
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn named_counts() {
        assert_eq!(
            named("cross_polytope:3").unwrap().f_vector(),
            vec![1, 6, 12, 8]
        );
        assert_eq!(
            named("cross_polytope(3)").unwrap().f_vector(),
            vec![1, 6, 12, 8]
        );
        assert_eq!(named("torus7").unwrap().f_vector(), vec![1, 7, 21, 14]);
        assert_eq!(named("rp2_6").unwrap().f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(
            named("simplex_boundary:3").unwrap().f_vector(),
            vec![1, 4, 6, 4]
        );
        assert_eq!(named("cycle3").unwrap().f_vector(), vec![1, 3, 3]);
        assert_eq!(named("path:3").unwrap().f_vector(), vec![1, 3, 2]);
        assert_eq!(named("s0").unwrap().f_vector(), vec![1, 2]);
        let ex = named("example_2_10_i").unwrap();
        assert_eq!((ex.n_vertices(), ex.facets().len(), ex.dim()), (5, 6, 1));
        assert!(matches!(named("klein"), Err(Error::UnknownName(_))));
        assert!(named("cycle:x").is_err());
        assert!(named("torus7:3").is_err());
    }

    #[test]
    fn torus_and_projective_plane_homology() {
        let t = named("torus7").unwrap();
        assert_eq!(homology::betti(&t, Q).unwrap().betti, vec![0, 0, 2, 1]);
        let rp2 = named("rp2_6").unwrap();
        assert_eq!(homology::betti(&rp2, Q).unwrap().betti, vec![0, 0, 0, 0]);
        assert_eq!(
            homology::betti(&rp2, gf2()).unwrap().betti,
            vec![0, 0, 1, 1]
        );
        // Every edge lies in exactly two triangles.
        for k in [&t, &rp2] {
            for e in k.faces(1) {
                assert_eq!(k.faces(2).iter().filter(|f| e.is_subset_of(f)).count(), 2);
            }
        }
    }

    #[test]
    fn essential_triangle_example() {
        let ex = named("example_2_10_iii").unwrap();
        assert_eq!(ex.facets().len(), 15);
        for field in [Q, gf2(), FieldSpec::prime(3).unwrap()] {
            assert_eq!(homology::betti_number(&ex, field, 1).unwrap(), 1);
            let worst = ex
                .facets()
                .iter()
                .map(|f| homology::contrastar_betti_number(&ex, f, field, 1).unwrap())
                .max();
            assert_eq!(worst, Some(2));
        }
    }

    #[test]
    fn stacked_spheres() {
        assert_eq!(
            sorted_facets(&stacked_sphere(4, 3).unwrap()),
            sorted_facets(&simplex_boundary(3).unwrap())
        );
        assert_eq!(stacked_sphere(6, 3).unwrap().f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(stacked_sphere(7, 3).unwrap().f_vector(), vec![1, 7, 15, 10]);
        assert!(stacked_sphere(3, 3).is_err());
        assert!(stacked_sphere(5, 1).is_err());
        let s = stacked_sphere(9, 4).unwrap();
        assert!(properties::is_gorenstein_star(&s, Q).unwrap().holds);
    }

    #[test]
    fn products() {
        let edge = simplex(1).unwrap();
        let sq = product(&edge, &edge).unwrap();
        assert_eq!(sq.facets().len(), 2);
        assert_eq!(sq.f_vector(), vec![1, 4, 5, 2]);
        let c3 = cycle(3).unwrap();
        let t = product(&c3, &c3).unwrap();
        assert_eq!(t.facets().len(), 18);
        assert_eq!(homology::betti(&t, Q).unwrap().betti, vec![0, 0, 2, 1]);
        assert!(properties::is_buchsbaum_star(&t, Q).unwrap().holds);
        assert!(t.labels().contains(&"(0,1)".to_string()));
    }

    #[test]
    fn euler_characteristic_multiplies() {
        let names = [
            "cycle:3",
            "s0",
            "simplex_boundary:2",
            "path:3",
            "bowtie",
            "rp2_6",
        ];
        for a in names {
            for b in names {
                let (x, y) = (named(a).unwrap(), named(b).unwrap());
                let chi = |k: &Complex| homology::reduced_euler(k) + 1;
                assert_eq!(
                    chi(&product(&x, &y).unwrap()),
                    chi(&x) * chi(&y),
                    "{a} × {b}"
                );
            }
        }
    }

    #[test]
    fn ear_single_piece() {
        let t = torus7().unwrap();
        let r = verify_ear_decomposition(
            &t,
            &EarDecomposition {
                pieces: vec![t.clone()],
            },
            Q,
        )
        .unwrap();
        assert!(r.hypotheses_hold);
        assert_eq!(r.buchsbaum_star, Some(true));
        assert_eq!(r.checks.len(), 2);
    }

    #[test]
    fn ear_two_pieces() {
        let (ambient, e) = ear_example_cone_on_torus().unwrap();
        let r = verify_ear_decomposition(&ambient, &e, Q).unwrap();
        assert!(r.hypotheses_hold, "{:?}", r.checks);
        assert_eq!(r.buchsbaum_star, Some(true));
        assert!(r.inconsistency.is_none());
    }

    #[test]
    fn ear_violation_reports_condition_c() {
        let (ambient, e) = ear_example_essential_triangle().unwrap();
        let r = verify_ear_decomposition(&ambient, &e, Q).unwrap();
        let failed: Vec<_> = r.failures().collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].condition, "iii(c)");
        assert_eq!(failed[0].witness.as_ref().unwrap().terms.len(), 3);
        assert_eq!(r.buchsbaum_star, None);
    }

    #[test]
    fn ear_rejects_foreign_pieces() {
        let t = torus7().unwrap();
        let other = cycle(5).unwrap().cone().unwrap();
        assert!(verify_ear_decomposition(
            &t,
            &EarDecomposition {
                pieces: vec![other]
            },
            Q
        )
        .is_err());
        let mut pieces = vec![t.clone()];
        pieces.clear();
        assert!(verify_ear_decomposition(&t, &EarDecomposition { pieces }, Q).is_err());
    }
}
