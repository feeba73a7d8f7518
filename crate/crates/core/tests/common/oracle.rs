//! Order-theoretic predictions for chain instances, computed by brute force
//! over all self-maps, without any of the library's machinery.

/// Every map `0..k -> 0..n`, as a vector of images.
fn all_maps(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(k as u32)).map(move |mut code| {
        (0..k)
            .map(|_| {
                let y = code % n;
                code /= n;
                y
            })
            .collect()
    })
}

fn monotone(f: &[usize]) -> bool {
    f.windows(2).all(|w| w[0] <= w[1])
}

/// Monotone maps `0..k -> 0..n`, in lexicographic order.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    all_maps(k, n)
        .filter(|f| monotone(f))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Closure operators on the `n`-chain: monotone, inflationary, idempotent.
pub fn closures(n: usize) -> Vec<Vec<usize>> {
    monotone_maps(n, n)
        .into_iter()
        .filter(|c| (0..n).all(|i| c[i] >= i && c[c[i]] == c[i]))
        .collect()
}

/// Monotone `phi : 0..k -> 0..n` with `phi(0) = 0`; each gives the action
/// `m <> q = max(m, phi(q))` of the `k`-chain under `max`.
pub fn max_type_actions(n: usize, k: usize) -> Vec<Vec<usize>> {
    monotone_maps(k, n)
        .into_iter()
        .filter(|phi| phi[0] == 0)
        .collect()
}

/// Number of laws predicted for the closure `c` and the action given by
/// `phi`: one if `c(max(m, phi q)) <= max(c(m), phi q)` everywhere, else none.
pub fn poset_law_count(c: &[usize], phi: &[usize]) -> usize {
    let ok = (0..c.len()).all(|m| phi.iter().all(|&p| c[m.max(p)] <= c[m].max(p)));
    usize::from(ok)
}

/// Number of modules of a closure operator: its fixed points.
pub fn fixed_points(c: &[usize]) -> usize {
    (0..c.len()).filter(|&i| c[i] == i).count()
}
