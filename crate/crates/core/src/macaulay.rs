//! Macaulay's characterization of M-vectors (Hilbert functions of standard
//! graded algebras).

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// The `i`-th binomial (Macaulay) representation of `a`: the unique
/// `k_i > k_{i-1} > … > k_j ≥ j ≥ 1` with `a = Σ C(k_t, t)`, listed from
/// `t = i` down. Empty for `a = 0`.
pub fn binomial_representation(mut a: u128, i: u32) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut t = i;
    while a > 0 && t >= 1 {
        // Largest k with C(k, t) <= a.
        let mut k = t as u128;
        while binomial(k + 1, t as u128) <= a {
            k += 1;
        }
        a -= binomial(k, t as u128);
        out.push((k, t));
        t -= 1;
    }
    out
}

/// `a^{<i>}`: the largest value allowed in degree `i + 1` after `a` in
/// degree `i`.
pub fn macaulay_bound(a: u128, i: u32) -> u128 {
    binomial_representation(a, i)
        .into_iter()
        .map(|(k, t)| binomial(k + 1, t as u128 + 1))
        .sum()
}

/// Whether `seq` is an M-vector: `a_0 = 1`, all entries nonnegative, and
/// `a_{i+1} ≤ a_i^{<i>}` for every `i ≥ 1`.
pub fn is_m_vector(seq: &[i64]) -> bool {
    if seq.first() != Some(&1) || seq.iter().any(|&a| a < 0) {
        return false;
    }
    seq.windows(2)
        .enumerate()
        .skip(1)
        .all(|(i, w)| (w[1] as u128) <= macaulay_bound(w[0] as u128, i as u32))
}
