//! Face-enumeration vectors (f, h, h′, h″, g, g′, g″) and the numerical
//! checks built on them.
//!
//! Throughout, `d = dim + 1`. Sequences are indexed from zero: `f[k]` is
//! `f_{k-1}`, so `f[0] = 1` counts the empty face.

use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::homology::{self, BettiTable};
use crate::linalg::FieldSpec;
use crate::macaulay::{binomial as ubinomial, is_m_vector};
use crate::properties;
use crate::report::Outcome;

fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        ubinomial(n as u128, k as u128) as i128
    }
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidArgument(format!("{v} overflows 64 bits")))
}

fn sign(e: i64) -> i128 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `h_j = Σ_{i=0}^{j} (-1)^{j-i} C(d-i, d-j) f_{i-1}` for `j = 0..=d`.
/// Entries of `f` beyond its length count as zero, so `d` may exceed the
/// complex's own `dim + 1`.
pub fn h_from_f(f: &[u64], d: usize) -> Result<Vec<i64>> {
    let d = d as i64;
    (0..=d)
        .map(|j| {
            let s: i128 = (0..=j)
                .map(|i| {
                    let fi = f.get(i as usize).copied().unwrap_or(0) as i128;
                    sign(j - i) * binomial(d - i, d - j) * fi
                })
                .sum();
            narrow(s)
        })
        .collect()
}

/// Inverse transform: `f_{j-1} = Σ_{i=0}^{j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Result<Vec<i64>> {
    let d = d as i64;
    (0..=d)
        .map(|j| {
            let s: i128 = (0..=j)
                .map(|i| binomial(d - i, j - i) * h.get(i as usize).copied().unwrap_or(0) as i128)
                .sum();
            narrow(s)
        })
        .collect()
}

/// `h′_j = h_j + C(d, j) Σ_{i=0}^{j-1} (-1)^{j-i-1} β̃_{i-1}`.
pub fn h_prime_from(h: &[i64], betti: &BettiTable, d: usize) -> Result<Vec<i64>> {
    let di = d as i64;
    (0..=di)
        .map(|j| {
            let corr: i128 = (0..j)
                .map(|i| sign(j - i - 1) * betti.get(i as isize - 1) as i128)
                .sum();
            narrow(h[j as usize] as i128 + binomial(di, j) * corr)
        })
        .collect()
}

/// `h″_i = h′_i - C(d, i) β̃_{i-1}` for `i < d`, and `h″_d = β̃_{d-1}`.
pub fn h_double_prime_from(h_prime: &[i64], betti: &BettiTable, d: usize) -> Result<Vec<i64>> {
    let di = d as i64;
    (0..=di)
        .map(|i| {
            if i == di {
                narrow(betti.get(i as isize - 1) as i128)
            } else {
                narrow(
                    h_prime[i as usize] as i128
                        - binomial(di, i) * betti.get(i as isize - 1) as i128,
                )
            }
        })
        .collect()
}

/// `(s_0, s_1 - s_0, …)` up to index `⌊d/2⌋`.
pub fn g_from(seq: &[i64], d: usize) -> Vec<i64> {
    (0..=d / 2)
        .map(|i| if i == 0 { seq[0] } else { seq[i] - seq[i - 1] })
        .collect()
}

/// Every face-enumeration vector of a complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceVectorBundle {
    pub field: FieldSpec,
    pub d: usize,
    /// `f_{-1}, …, f_{d-1}`.
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub h_prime: Vec<i64>,
    pub h_double_prime: Vec<i64>,
    pub g: Vec<i64>,
    pub g_prime: Vec<i64>,
    pub g_double_prime: Vec<i64>,
    pub betti: BettiTable,
}

fn dim_d(c: &Complex) -> usize {
    (c.dim() + 1) as usize
}

pub fn face_vectors(c: &Complex, field: FieldSpec) -> Result<FaceVectorBundle> {
    let betti = homology::betti(c, field)?;
    bundle_with(c, field, betti)
}

fn bundle_with(c: &Complex, field: FieldSpec, betti: BettiTable) -> Result<FaceVectorBundle> {
    let d = dim_d(c);
    let f = c.f_vector();
    let h = h_from_f(&f, d)?;
    let h_prime = h_prime_from(&h, &betti, d)?;
    let h_double_prime = h_double_prime_from(&h_prime, &betti, d)?;
    Ok(FaceVectorBundle {
        field,
        d,
        g: g_from(&h, d),
        g_prime: g_from(&h_prime, d),
        g_double_prime: g_from(&h_double_prime, d),
        f,
        h,
        h_prime,
        h_double_prime,
        betti,
    })
}

/// `h′` of `c` computed with an explicit `d`, which may exceed `dim c + 1`.
fn h_prime_with(c: &Complex, d: usize, field: FieldSpec) -> Result<Vec<i64>> {
    let betti = homology::betti(c, field)?;
    h_prime_from(&h_from_f(&c.f_vector(), d)?, &betti, d)
}

/// Outcome of the vertex deletion identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionIdentityReport {
    pub field: FieldSpec,
    /// `h_j(Δ) = h_j(Δ∖v) + h_{j-1}(lk v)`, with `d` and `d - 1` as the
    /// respective lengths; holds for every complex.
    pub h_identity: Outcome,
    /// The same identity with `h′` in place of `h` on both sides of the
    /// deletion; expected for Buchsbaum* complexes.
    pub h_prime_identity: Outcome,
}

pub fn deletion_identity_check(c: &Complex, field: FieldSpec) -> Result<DeletionIdentityReport> {
    let d = dim_d(c);
    let h = h_from_f(&c.f_vector(), d)?;
    let star = properties::is_buchsbaum_star(c, field)?.holds;
    let h_prime = if star {
        Some(face_vectors(c, field)?.h_prime)
    } else {
        None
    };
    let mut h_out = Outcome::Pass;
    let mut hp_out = if star {
        Outcome::Pass
    } else {
        Outcome::skip("not Buchsbaum* over this field")
    };
    for v in 0..c.n_vertices() as u32 {
        let vf = Face::vertex(v);
        let del = c.deletion(&vf)?;
        let lk = c.link(&vf)?;
        let h_del = h_from_f(&del.f_vector(), d)?;
        let h_lk = h_from_f(&lk.f_vector(), d - 1)?;
        let lk_term = |j: usize| if j == 0 { 0 } else { h_lk[j - 1] };
        if h_out.is_pass() {
            if let Some(j) = (0..=d).find(|&j| h[j] != h_del[j] + lk_term(j)) {
                h_out = Outcome::fail(format!(
                    "vertex {}, j = {j}: {} != {} + {}",
                    c.label(v),
                    h[j],
                    h_del[j],
                    lk_term(j)
                ));
            }
        }
        if let (Some(hp), true) = (&h_prime, hp_out.is_pass()) {
            let hp_del = h_prime_with(&del, d, field)?;
            if let Some(j) = (0..=d).find(|&j| hp[j] != hp_del[j] + lk_term(j)) {
                hp_out = Outcome::fail(format!(
                    "vertex {}, j = {j}: {} != {} + {}",
                    c.label(v),
                    hp[j],
                    hp_del[j],
                    lk_term(j)
                ));
            }
        }
    }
    Ok(DeletionIdentityReport {
        field,
        h_identity: h_out,
        h_prime_identity: hp_out,
    })
}

/// One row of an inequality table: `value ≥ bound` unless stated otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub i: usize,
    pub value: i64,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequalities {
    pub outcome: Outcome,
    pub rows: Vec<BoundRow>,
}

impl Inequalities {
    /// Checks `value ≥ bound` on every row, or records `skip` as the reason
    /// not to.
    fn at_least(rows: Vec<BoundRow>, skip: Option<&str>) -> Self {
        let outcome = match skip {
            Some(reason) => Outcome::skip(reason),
            None => match rows.iter().find(|r| r.value < r.bound) {
                Some(r) => Outcome::fail(format!("i = {}: {} < {}", r.i, r.value, r.bound)),
                None => Outcome::Pass,
            },
        };
        Inequalities { outcome, rows }
    }
}

/// Lower bounds on `h′` and `h″` for flag and Buchsbaum complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagBoundReport {
    pub field: FieldSpec,
    pub flag: bool,
    pub buchsbaum: bool,
    pub buchsbaum_star: bool,
    /// `h′_i ≥ C(d, i)` for `0 ≤ i ≤ d` (flag Buchsbaum*).
    pub h_prime_binomial: Inequalities,
    /// `h″_i ≥ C(d, i)` for `0 ≤ i ≤ d - 2` (flag Buchsbaum*).
    pub h_double_prime_binomial: Inequalities,
    /// `h′_i ≥ C(d, i) β̃_{i-1}` for `0 ≤ i ≤ d` (Buchsbaum).
    pub h_prime_betti: Inequalities,
    /// Whether `h′_i = C(d, i)` for every `i`.
    pub binomial_equality: bool,
}

pub fn flag_bound_check(c: &Complex, field: FieldSpec) -> Result<FlagBoundReport> {
    let v = face_vectors(c, field)?;
    let d = v.d;
    let flag = c.is_flag();
    let buchsbaum = properties::is_buchsbaum(c, field)?.holds;
    let buchsbaum_star = buchsbaum && properties::is_buchsbaum_star(c, field)?.holds;
    let binom = |i: usize| binomial(d as i64, i as i64) as i64;
    let flag_skip = match (flag, buchsbaum_star) {
        (true, true) => None,
        (false, _) => Some("not flag"),
        (true, false) => Some("not Buchsbaum* over this field"),
    };
    let rows = |seq: &[i64], upto: usize| -> Vec<BoundRow> {
        (0..=upto.min(d))
            .map(|i| BoundRow {
                i,
                value: seq[i],
                bound: binom(i),
            })
            .collect()
    };
    let h_prime_binomial = Inequalities::at_least(rows(&v.h_prime, d), flag_skip);
    let hdp_rows = if d >= 2 {
        rows(&v.h_double_prime, d - 2)
    } else {
        Vec::new()
    };
    let h_double_prime_binomial = Inequalities::at_least(hdp_rows, flag_skip);
    let betti_rows = (0..=d)
        .map(|i| BoundRow {
            i,
            value: v.h_prime[i],
            bound: binom(i) * v.betti.get(i as isize - 1) as i64,
        })
        .collect();
    let h_prime_betti = Inequalities::at_least(
        betti_rows,
        (!buchsbaum).then_some("not Buchsbaum over this field"),
    );
    let binomial_equality = (0..=d).all(|i| v.h_prime[i] == binom(i));
    Ok(FlagBoundReport {
        field,
        flag,
        buchsbaum,
        buchsbaum_star,
        h_prime_binomial,
        h_double_prime_binomial,
        h_prime_betti,
        binomial_equality,
    })
}

/// Face numbers `f_0, …, f_{d-1}` of a stacked `(d-1)`-sphere on `n`
/// vertices: `C(d, i) n - C(d+1, i+1) i` for `i ≤ d - 2` and
/// `(d-1) n - (d+1)(d-2)` for `i = d - 1`.
pub fn lbt_bound(n: u64, d: usize) -> Vec<i64> {
    let (n, d) = (n as i128, d as i64);
    (0..d)
        .map(|i| {
            let v = if i <= d - 2 {
                binomial(d, i) * n - binomial(d + 1, i + 1) * i as i128
            } else {
                (d as i128 - 1) * n - (d as i128 + 1) * (d as i128 - 2)
            };
            v as i64
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LbtReport {
    pub field: FieldSpec,
    pub n: usize,
    pub d: usize,
    /// `f_0, …, f_{d-1}`.
    pub f: Vec<u64>,
    pub bound: Vec<i64>,
    pub outcome: Outcome,
}

/// Compares the face numbers with the stacked-sphere bound. Requires
/// `d ≥ 3`; skipped unless `c` is Buchsbaum* over `field`.
pub fn lbt_check(c: &Complex, field: FieldSpec) -> Result<LbtReport> {
    let d = dim_d(c);
    if d < 3 {
        return Err(Error::InvalidArgument(format!(
            "the lower bound needs dimension at least 2, got {}",
            c.dim()
        )));
    }
    let n = c.n_vertices();
    let f: Vec<u64> = c.f_vector()[1..].to_vec();
    let bound = lbt_bound(n as u64, d);
    let outcome = if !properties::is_buchsbaum_star(c, field)?.holds {
        Outcome::skip("not Buchsbaum* over this field")
    } else {
        match (0..d).find(|&i| (f[i] as i64) < bound[i]) {
            Some(i) => Outcome::fail(format!("f_{i} = {} < {}", f[i], bound[i])),
            None => Outcome::Pass,
        }
    };
    Ok(LbtReport {
        field,
        n,
        d,
        f,
        bound,
        outcome,
    })
}

/// `h′_i(Γ) ≤ h′_i(Δ)` for a subcomplex `Γ` of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub field: FieldSpec,
    /// `dim Γ + 1`.
    pub e: usize,
    pub d: usize,
    /// No `e + 1` vertices of `Γ` span a face of `Δ`.
    pub hypothesis: bool,
    pub outcome: Outcome,
    /// `value = h′_i(Γ)` against `bound = h′_i(Δ)`.
    pub rows: Vec<BoundRow>,
}

pub fn monotonicity_check(
    c: &Complex,
    sub: &Complex,
    field: FieldSpec,
) -> Result<MonotonicityReport> {
    let map = sub.vertex_map_into(c)?;
    if !sub.is_subcomplex_of(c) {
        return Err(Error::NotSubcomplex("Γ is not a subcomplex".into()));
    }
    let (d, e) = (dim_d(c), dim_d(sub));
    let mut in_sub = vec![false; c.n_vertices()];
    for &v in &map {
        in_sub[v as usize] = true;
    }
    let offending = c
        .faces((e) as isize)
        .iter()
        .find(|f| f.vertices().iter().all(|&v| in_sub[v as usize]));
    let hypothesis = offending.is_none();
    let mut report = MonotonicityReport {
        field,
        e,
        d,
        hypothesis,
        outcome: Outcome::Pass,
        rows: Vec::new(),
    };
    if let Some(face) = offending {
        report.outcome = Outcome::skip(format!(
            "hypothesis fails: {} spans a face",
            c.describe(face)
        ));
        return Ok(report);
    }
    if !properties::is_buchsbaum(c, field)?.holds || !properties::is_buchsbaum(sub, field)?.holds {
        report.outcome = Outcome::skip("both complexes must be Buchsbaum over this field");
        return Ok(report);
    }
    let (hg, hd) = (
        face_vectors(sub, field)?.h_prime,
        face_vectors(c, field)?.h_prime,
    );
    report.rows = (0..=d)
        .map(|i| BoundRow {
            i,
            value: hg.get(i).copied().unwrap_or(0),
            bound: hd[i],
        })
        .collect();
    if let Some(r) = report.rows.iter().find(|r| r.value > r.bound) {
        report.outcome = Outcome::fail(format!("i = {}: {} > {}", r.i, r.value, r.bound));
    }
    Ok(report)
}

/// Empirical observations about open questions. Nothing here is a proof;
/// entries are `None` when the complex is not Buchsbaum* over the field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureProbe {
    pub field: FieldSpec,
    pub note: &'static str,
    pub buchsbaum_star: bool,
    pub connected: bool,
    /// Closed homology manifold that is orientable over the field; the class
    /// where `h″` symmetry is expected.
    pub orientable_closed_manifold: bool,
    /// `h″_i = h″_{d-i}` for `1 ≤ i ≤ d - 1`.
    pub h_double_prime_symmetric: Option<bool>,
    /// `h″_i ≤ h″_{d-i}` for `0 ≤ i ≤ ⌊d/2⌋`.
    pub h_double_prime_unimodal_half: Option<bool>,
    /// `(g″_0, …, g″_{⌊d/2⌋})` is an M-vector.
    pub g_double_prime_m_vector: Option<bool>,
    /// `(g_0, g_1, g_2)` is an M-vector; proven for connected complexes
    /// with `d ≥ 4`.
    pub g_prefix_m_vector: Option<bool>,
}

pub fn conjecture_probe(c: &Complex, field: FieldSpec) -> Result<ConjectureProbe> {
    let v = face_vectors(c, field)?;
    let d = v.d;
    let star = properties::is_buchsbaum_star(c, field)?.holds;
    let manifold = if c.is_pure() {
        properties::homology_manifold(c, field)?
    } else {
        properties::ManifoldInfo {
            manifold: false,
            boundary: None,
            orientable: false,
            witness: None,
        }
    };
    let hdp = &v.h_double_prime;
    let when = |x: bool| star.then_some(x);
    let prefix: Vec<i64> = v.g.iter().take(3).copied().collect();
    Ok(ConjectureProbe {
        field,
        note: "empirical observation, not a proof",
        buchsbaum_star: star,
        connected: c.graph().is_connected(),
        orientable_closed_manifold: manifold.is_closed() && manifold.orientable,
        h_double_prime_symmetric: when((1..d).all(|i| hdp[i] == hdp[d - i])),
        h_double_prime_unimodal_half: when((0..=d / 2).all(|i| hdp[i] <= hdp[d - i])),
        g_double_prime_m_vector: when(is_m_vector(&v.g_double_prime)),
        g_prefix_m_vector: (star && d >= 4).then(|| is_m_vector(&prefix)),
    })
}
