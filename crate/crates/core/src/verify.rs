//! The built-in corpus and the batch suite that checks every known
//! relation between the properties and vectors on it.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::constructions::{self, named, product, stacked_sphere, verify_ear_decomposition};
use crate::error::Result;
use crate::homology;
use crate::io;
use crate::linalg::FieldSpec;
use crate::macaulay::is_m_vector;
use crate::properties::{self as props, homology_manifold};
use crate::report::Outcome;
use crate::rigidity;
use crate::vectors::{self, lbt_bound};

pub const CORPUS_DIR: &str = "corpus-v1";

/// The built-in corpus, in a fixed order with file-safe names.
pub fn builtin_corpus() -> Result<Vec<(String, Complex)>> {
    let mut out: Vec<(String, Complex)> = Vec::new();
    let mut add = |name: &str, c: Complex| out.push((name.to_string(), c));
    for (file, name) in [
        ("s0", "s0"),
        ("path_3", "path:3"),
        ("cycle_4", "cycle:4"),
        ("cycle_5", "cycle:5"),
        ("simplex_2", "simplex:2"),
        ("simplex_3", "simplex:3"),
        ("simplex_boundary_2", "simplex_boundary:2"),
        ("simplex_boundary_3", "simplex_boundary:3"),
        ("simplex_boundary_4", "simplex_boundary:4"),
        ("cross_polytope_2", "cross_polytope:2"),
        ("cross_polytope_3", "cross_polytope:3"),
        ("cross_polytope_4", "cross_polytope:4"),
        ("torus7", "torus7"),
        ("rp2_6", "rp2_6"),
        ("example_2_10_i", "example_2_10_i"),
        ("example_2_10_iii", "example_2_10_iii"),
        ("bowtie", "bowtie"),
    ] {
        add(file, named(name)?);
    }
    add("stacked_sphere_7_3", stacked_sphere(7, 3)?);
    add("stacked_sphere_7_4", stacked_sphere(7, 4)?);
    add("cone_cross_polytope_3", named("cross_polytope:3")?.cone()?);
    add("cone_cycle_4", named("cycle:4")?.cone()?);
    let c3 = named("cycle:3")?;
    add("product_cycle_3_cycle_3", product(&c3, &c3)?);
    add(
        "product_cycle_3_simplex_boundary_3",
        product(&c3, &named("simplex_boundary:3")?)?,
    );
    add(
        "skeleton_cross_polytope_4_2",
        named("cross_polytope:4")?.skeleton(2)?,
    );
    add("skeleton_torus7_1", named("torus7")?.skeleton(1)?);
    add(
        "ear_cone_on_torus",
        constructions::ear_example_cone_on_torus()?.0,
    );
    add("join_s0_path_3", named("s0")?.join(&named("path:3")?)?);
    Ok(out)
}

/// Writes the built-in corpus as canonical JSON under `dir/corpus-v1/`.
pub fn write_builtin_corpus(dir: &Path) -> Result<Vec<PathBuf>> {
    let target = dir.join(CORPUS_DIR);
    std::fs::create_dir_all(&target)?;
    builtin_corpus()?
        .into_iter()
        .map(|(name, c)| {
            let path = target.join(format!("{name}.json"));
            std::fs::write(&path, io::to_json(&c))?;
            Ok(path)
        })
        .collect()
}

/// Reads every `.json` and `.txt` file of a corpus directory in name order.
/// A `corpus-v1` subdirectory is used when present. Unreadable or malformed
/// files are returned as errors in place.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<(String, Result<Complex>)>> {
    let sub = dir.join(CORPUS_DIR);
    let dir = if sub.is_dir() { sub } else { dir.to_path_buf() };
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file() && matches!(p.extension().and_then(|e| e.to_str()), Some("json" | "txt"))
        })
        .collect();
    files.sort();
    Ok(files
        .into_iter()
        .map(|p| {
            let name = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let c = std::fs::read_to_string(&p)
                .map_err(Into::into)
                .and_then(|t| io::parse(&t));
            (name, c)
        })
        .collect())
}

/// Buchsbaum, and every map `H_{d-1}(c, cost σ) → H_{d-1}(c, cost τ)` for
/// faces `σ ⊆ τ` is surjective (`σ = ∅` included). An independent route
/// to the Buchsbaum* property.
pub fn buchsbaum_star_by_surjectivity(c: &Complex, field: FieldSpec) -> Result<bool> {
    if !props::is_buchsbaum(c, field)?.holds {
        return Ok(false);
    }
    for t in c.nonempty_faces() {
        for k in 0..t.len() {
            for s in t.vertices().iter().copied().combinations(k) {
                if !homology::relative_surjectivity(c, &Face::new(s), t, field)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            trials: rigidity::DEFAULT_TRIALS,
        }
    }
}

fn implies(premise: bool, conclusion: bool, what: &str) -> Outcome {
    match (premise, conclusion) {
        (false, _) => Outcome::skip("hypothesis does not hold"),
        (true, true) => Outcome::Pass,
        (true, false) => Outcome::fail(what.to_string()),
    }
}

fn agree(a: bool, b: bool, what: &str) -> Outcome {
    if a == b {
        Outcome::Pass
    } else {
        Outcome::fail(format!("{what}: {a} vs {b}"))
    }
}

/// Every per-complex check over one field, keyed by check name.
pub fn entry_checks(
    c: &Complex,
    field: FieldSpec,
    opts: SuiteOptions,
) -> Result<BTreeMap<String, Outcome>> {
    let mut out: BTreeMap<String, Outcome> = BTreeMap::new();
    let mut put = |k: &str, o: Outcome| {
        out.insert(k.to_string(), o);
    };
    let d = (c.dim() + 1) as usize;
    let report = props::property_report(c, field)?;
    let has = |p: &str| report.get(p) == Some(true);
    let (cm, buch, star) = (
        has("cohen_macaulay"),
        has("buchsbaum"),
        has("buchsbaum_star"),
    );
    let connected = c.graph().is_connected();
    let betti = homology::betti(c, field)?;

    put(
        "report_implications",
        match report.inconsistencies.first() {
            Some(v) => Outcome::fail(v.clone()),
            None => Outcome::Pass,
        },
    );
    put(
        "cm_buchsbaum_star_iff_doubly_cm",
        if cm {
            agree(
                star,
                has("doubly_cohen_macaulay"),
                "Buchsbaum* vs doubly CM",
            )
        } else {
            Outcome::skip("not Cohen-Macaulay")
        },
    );
    let closed_orientable = c.is_pure() && {
        let m = homology_manifold(c, field)?;
        m.is_closed() && m.orientable
    };
    put(
        "orientable_manifold_is_buchsbaum_star",
        implies(
            closed_orientable,
            star,
            "orientable closed manifold is not Buchsbaum*",
        ),
    );
    put(
        "buchsbaum_star_top_homology_nonzero",
        implies(star, betti.get(d as isize - 1) > 0, "top homology vanishes"),
    );
    put(
        "buchsbaum_star_is_doubly_buchsbaum",
        implies(star, has("doubly_buchsbaum"), "not doubly Buchsbaum"),
    );
    put(
        "buchsbaum_star_links_doubly_cm",
        if star {
            let bad = c
                .nonempty_faces()
                .map(|f| {
                    Ok((
                        f,
                        props::is_doubly_cohen_macaulay(&c.link(f)?, field)?.holds,
                    ))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .find(|(_, ok)| !ok);
            match bad {
                Some((f, _)) => {
                    Outcome::fail(format!("link of {} is not doubly CM", c.describe(f)))
                }
                None => Outcome::Pass,
            }
        } else {
            Outcome::skip("not Buchsbaum*")
        },
    );
    put(
        "contrastar_matches_surjectivity",
        agree(
            star,
            buchsbaum_star_by_surjectivity(c, field)?,
            "contrastar vs surjectivity",
        ),
    );

    let v = vectors::face_vectors(c, field)?;
    put(
        "h_prime_top_is_top_betti",
        agree(
            true,
            v.h_prime[d] == betti.get(d as isize - 1) as i64,
            "h'_d = top Betti",
        ),
    );
    let del = vectors::deletion_identity_check(c, field)?;
    put("vertex_deletion_h", del.h_identity);
    put("vertex_deletion_h_prime", del.h_prime_identity);
    let fb = vectors::flag_bound_check(c, field)?;
    put("flag_h_prime_binomial", fb.h_prime_binomial.outcome);
    put(
        "flag_h_double_prime_binomial",
        fb.h_double_prime_binomial.outcome,
    );
    put("buchsbaum_h_prime_betti", fb.h_prime_betti.outcome);
    put(
        "lower_bound",
        if d >= 3 {
            vectors::lbt_check(c, field)?.outcome
        } else {
            Outcome::skip("dimension below 2")
        },
    );
    put(
        "g_prefix_m_vector",
        if star && connected && d >= 4 {
            let prefix: Vec<i64> = v.g.iter().take(3).copied().collect();
            if is_m_vector(&prefix) {
                Outcome::Pass
            } else {
                Outcome::fail(format!("{prefix:?} is not an M-vector"))
            }
        } else {
            Outcome::skip("needs connected Buchsbaum* with d >= 4")
        },
    );

    let g = c.graph();
    let kappa = if g.node_count() >= 2 {
        Some(rigidity::vertex_connectivity(&g)?)
    } else {
        None
    };
    let k_connected = |k: usize| g.node_count() > k && kappa.is_some_and(|x| x >= k);
    put(
        "buchsbaum_connectivity",
        implies(
            buch && connected && d >= 2,
            k_connected(d - 1),
            "not (d-1)-connected",
        ),
    );
    put(
        "buchsbaum_star_connectivity",
        implies(
            star && connected && d >= 2,
            k_connected(d),
            "not d-connected",
        ),
    );
    let rigid = if d >= 2 && g.node_count() > d {
        Some(rigidity::is_generically_d_rigid(
            &g,
            d,
            opts.trials,
            opts.seed,
        )?)
    } else {
        None
    };
    put(
        "buchsbaum_star_rigidity",
        implies(
            star && connected && d >= 3,
            rigid == Some(true),
            "not generically d-rigid",
        ),
    );
    put(
        "rigid_implies_connected",
        implies(
            rigid == Some(true),
            k_connected(d),
            "rigid but not d-connected",
        ),
    );

    put(
        "skeleton_buchsbaum_star",
        if buch && d >= 2 {
            let sk = c.skeleton(d as isize - 2)?;
            implies(
                true,
                props::is_buchsbaum_star(&sk, field)?.holds,
                "codimension-one skeleton not Buchsbaum*",
            )
        } else {
            Outcome::skip("needs Buchsbaum with d >= 2")
        },
    );
    put(
        "skeleton_doubly_buchsbaum_star",
        if star && d >= 2 {
            let sk = c.skeleton(d as isize - 2)?;
            implies(
                true,
                props::is_m_buchsbaum_star(&sk, field, 2)?.holds,
                "skeleton not 2-Buchsbaum*",
            )
        } else {
            Outcome::skip("needs Buchsbaum* with d >= 2")
        },
    );
    let mut hierarchy = Vec::new();
    let mut upward = Vec::new();
    for m in 0..=2 {
        let mstar = props::is_m_buchsbaum_star(c, field, m)?.holds;
        if cm {
            let mcm = props::is_m_cohen_macaulay(c, field, m + 1)?.holds;
            hierarchy.push(agree(
                mstar,
                mcm,
                &format!("m = {m}: m-Buchsbaum* vs (m+1)-CM"),
            ));
        }
        if mstar {
            let next = props::is_m_buchsbaum(c, field, m + 1)?.holds;
            upward.push(implies(
                true,
                next,
                &format!("{m}-Buchsbaum* but not {}-Buchsbaum", m + 1),
            ));
        }
    }
    put(
        "cm_m_buchsbaum_star_iff_m_plus_one_cm",
        if cm {
            Outcome::all(hierarchy)
        } else {
            Outcome::skip("not Cohen-Macaulay")
        },
    );
    put(
        "m_buchsbaum_star_implies_m_plus_one_buchsbaum",
        Outcome::all(upward),
    );
    Ok(out)
}

/// Checks that do not depend on the corpus.
pub fn global_checks(field: FieldSpec) -> Result<BTreeMap<String, Outcome>> {
    let mut out = BTreeMap::new();

    let mut stacked = Vec::new();
    for d in [3usize, 4] {
        for n in d + 1..=d + 6 {
            let f: Vec<i64> = stacked_sphere(n, d)?.f_vector()[1..]
                .iter()
                .map(|&x| x as i64)
                .collect();
            stacked.push(agree(
                true,
                f == lbt_bound(n as u64, d),
                &format!("stacked sphere n = {n}, d = {d}"),
            ));
        }
    }
    out.insert(
        "stacked_sphere_face_numbers".to_string(),
        Outcome::all(stacked),
    );

    let factors = [
        "s0",
        "cycle:3",
        "simplex_boundary:2",
        "path:2",
        "bowtie",
        "example_2_10_i",
    ];
    let mut buch = Vec::new();
    let mut star = Vec::new();
    let mut kunneth = Vec::new();
    for (a, b) in factors
        .iter()
        .cartesian_product(factors.iter())
        .filter(|(a, b)| a <= b)
    {
        let (x, y) = (named(a)?, named(b)?);
        let p = product(&x, &y)?;
        let tag = format!("{a} x {b}");
        let both = |f: &dyn Fn(&Complex) -> Result<bool>| -> Result<bool> { Ok(f(&x)? && f(&y)?) };
        buch.push(implies(
            both(&|k| Ok(props::is_buchsbaum(k, field)?.holds))?,
            props::is_buchsbaum(&p, field)?.holds,
            &tag,
        ));
        star.push(implies(
            both(&|k| Ok(props::is_buchsbaum_star(k, field)?.holds))?,
            props::is_buchsbaum_star(&p, field)?.holds,
            &tag,
        ));
        // Unreduced Betti numbers multiply as polynomials.
        let poly = |k: &Complex| -> Result<Vec<u64>> {
            let mut b: Vec<u64> = homology::betti(k, field)?.betti[1..].to_vec();
            b[0] += 1;
            Ok(b)
        };
        let (px, py, pp) = (poly(&x)?, poly(&y)?, poly(&p)?);
        let mut expected = vec![0u64; px.len() + py.len() - 1];
        for (i, a) in px.iter().enumerate() {
            for (j, b) in py.iter().enumerate() {
                expected[i + j] += a * b;
            }
        }
        kunneth.push(agree(true, pp == expected, &tag));
    }
    out.insert("product_buchsbaum".to_string(), Outcome::all(buch));
    out.insert("product_buchsbaum_star".to_string(), Outcome::all(star));
    out.insert("product_kunneth".to_string(), Outcome::all(kunneth));

    let grid = ["s0", "cycle:4", "path:3"];
    let mut joins = Vec::new();
    for (a, b) in grid.iter().cartesian_product(grid.iter()) {
        let (x, y) = (named(a)?, named(b)?);
        let j = x.join(&y)?;
        let one = props::is_buchsbaum_star(&j, field)?.holds;
        let two = props::is_doubly_cohen_macaulay(&j, field)?.holds;
        let three = props::is_doubly_cohen_macaulay(&x, field)?.holds
            && props::is_doubly_cohen_macaulay(&y, field)?.holds;
        joins.push(if one == two && two == three {
            Outcome::Pass
        } else {
            Outcome::fail(format!("{a} * {b}: {one}, {two}, {three}"))
        });
    }
    out.insert("join_equivalence".to_string(), Outcome::all(joins));

    let (amb, e) = constructions::ear_example_cone_on_torus()?;
    let r = verify_ear_decomposition(&amb, &e, field)?;
    out.insert(
        "ear_decomposition".to_string(),
        match (r.hypotheses_hold, r.buchsbaum_star) {
            (true, Some(true)) => Outcome::Pass,
            (false, _) => Outcome::skip("hypotheses fail over this field"),
            _ => Outcome::fail(r.inconsistency.unwrap_or_default()),
        },
    );
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Field, then check name.
    pub checks: BTreeMap<String, BTreeMap<String, Outcome>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<EntryReport>,
    pub global: BTreeMap<String, BTreeMap<String, Outcome>>,
    /// Check name to counts over every entry and field.
    pub summary: BTreeMap<String, Tally>,
    pub errors: usize,
    pub all_pass: bool,
}

/// Runs the full suite. Entries are evaluated in parallel; the report keeps
/// the input order.
pub fn run_suite(
    entries: Vec<(String, Result<Complex>)>,
    fields: &[FieldSpec],
    opts: SuiteOptions,
) -> SuiteReport {
    let reports: Vec<EntryReport> = entries
        .into_par_iter()
        .map(|(name, c)| {
            let mut checks = BTreeMap::new();
            let run = || -> Result<()> {
                let c = c?;
                for &f in fields {
                    checks.insert(f.to_string(), entry_checks(&c, f, opts)?);
                }
                Ok(())
            };
            let error = run().err().map(|e| e.to_string());
            EntryReport {
                name,
                error,
                checks,
            }
        })
        .collect();
    let mut global = BTreeMap::new();
    let mut errors = reports.iter().filter(|r| r.error.is_some()).count();
    for &f in fields {
        match global_checks(f) {
            Ok(g) => {
                global.insert(f.to_string(), g);
            }
            Err(e) => {
                errors += 1;
                let mut g = BTreeMap::new();
                g.insert("error".to_string(), Outcome::fail(e.to_string()));
                global.insert(f.to_string(), g);
            }
        }
    }
    let mut summary: BTreeMap<String, Tally> = BTreeMap::new();
    let all = reports
        .iter()
        .flat_map(|r| r.checks.values())
        .chain(global.values())
        .flat_map(|m| m.iter());
    for (k, o) in all {
        let t = summary.entry(k.clone()).or_default();
        match o {
            Outcome::Pass => t.pass += 1,
            Outcome::Fail { .. } => t.fail += 1,
            Outcome::Skipped { .. } => t.skipped += 1,
        }
    }
    let all_pass = errors == 0 && summary.values().all(|t| t.fail == 0);
    SuiteReport {
        entries: reports,
        global,
        summary,
        errors,
        all_pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn surjectivity_route_examples() {
        assert!(buchsbaum_star_by_surjectivity(&named("torus7").unwrap(), Q).unwrap());
        assert!(!buchsbaum_star_by_surjectivity(&named("example_2_10_i").unwrap(), Q).unwrap());
        assert!(!buchsbaum_star_by_surjectivity(&named("example_2_10_iii").unwrap(), Q).unwrap());
        assert!(buchsbaum_star_by_surjectivity(&named("s0").unwrap(), Q).unwrap());
        assert!(!buchsbaum_star_by_surjectivity(&named("simplex:0").unwrap(), Q).unwrap());
    }

    #[test]
    fn corpus_names_are_unique() {
        let corpus = builtin_corpus().unwrap();
        let names: std::collections::BTreeSet<_> = corpus.iter().map(|(n, _)| n.clone()).collect();
        assert_eq!(names.len(), corpus.len());
    }

    #[test]
    fn entry_checks_on_torus() {
        let checks = entry_checks(&named("torus7").unwrap(), Q, SuiteOptions::default()).unwrap();
        assert!(checks.values().all(|o| !o.is_fail()), "{checks:?}");
        assert!(checks["buchsbaum_star_rigidity"].is_pass());
        assert!(checks["vertex_deletion_h_prime"].is_pass());
    }

    #[test]
    fn global_checks_pass() {
        for field in [Q, FieldSpec::prime(2).unwrap()] {
            let g = global_checks(field).unwrap();
            assert!(g.values().all(Outcome::is_pass), "{g:?}");
        }
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let entries = vec![
            ("good".to_string(), named("cycle:4")),
            ("bad".to_string(), io::parse("{\"facets\": 1}")),
        ];
        let r = run_suite(entries, &[Q], SuiteOptions::default());
        assert_eq!(r.errors, 1);
        assert!(!r.all_pass);
        assert!(r.entries[0].error.is_none());
        assert!(r.entries[1].error.is_some());
    }
}
