//! Brute-force reference computations for tests. Everything here favors
//! exhaustive enumeration over clever algorithms so results cannot share a
//! bug with the code under test.

/// Minimum total within-group squared distance over every assignment of the
/// points to at most `k` groups, by trying all k^n assignments. Group means
/// are the optimal centroids for a fixed assignment, so this is the global
/// k-means optimum. Exponential; keep n small.
pub fn kmeans_optimum(points: &[Vec<f64>], k: usize) -> f64 {
    assert!(!points.is_empty(), "need at least one point");
    assert!(k >= 1, "need at least one group");
    let n = points.len();
    assert!(n <= 10, "exhaustive enumeration is exponential in n");
    let dim = points[0].len();
    let total = k.pow(n as u32);
    let mut assign = vec![0usize; n];
    let mut best = f64::INFINITY;
    for code in 0..total {
        let mut c = code;
        for slot in assign.iter_mut() {
            *slot = c % k;
            c /= k;
        }
        let mut inertia = 0.0;
        for group in 0..k {
            let members: Vec<&Vec<f64>> =
                points.iter().zip(&assign).filter(|(_, &a)| a == group).map(|(p, _)| p).collect();
            if members.is_empty() {
                continue;
            }
            let mut mean = vec![0.0; dim];
            for p in &members {
                for d in 0..dim {
                    mean[d] += p[d];
                }
            }
            for m in mean.iter_mut() {
                *m /= members.len() as f64;
            }
            for p in &members {
                for d in 0..dim {
                    let diff = p[d] - mean[d];
                    inertia += diff * diff;
                }
            }
        }
        if inertia < best {
            best = inertia;
        }
    }
    best
}

/// Calls `visit` with every permutation of `items` (Heap's algorithm).
pub fn for_each_permutation<T: Clone>(items: &[T], mut visit: impl FnMut(&[T])) {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Binary-gain DCG of the first `cutoff` positions with the log2 discount:
/// position i (1-based) contributes gain / log2(i + 1).
fn dcg_binary(rels: &[f64], cutoff: usize) -> f64 {
    rels.iter()
        .take(cutoff)
        .enumerate()
        .map(|(i, &r)| {
            let gain = if r > 0.0 { 1.0 } else { 0.0 };
            gain / ((i + 2) as f64).log2()
        })
        .sum()
}

/// Binary-gain NDCG where the ideal ranking is found by trying every
/// permutation of the relevance sequence rather than by sorting. Factorial;
/// keep the sequence short. An all-irrelevant sequence scores 0.
pub fn ndcg_binary_brute(rels: &[f64], cutoff: Option<usize>) -> f64 {
    assert!(rels.len() <= 8, "permutation search is factorial in length");
    let c = cutoff.unwrap_or(rels.len()).min(rels.len());
    let actual = dcg_binary(rels, c);
    let mut ideal: f64 = 0.0;
    for_each_permutation(rels, |perm| {
        let d = dcg_binary(perm, c);
        if d > ideal {
            ideal = d;
        }
    });
    if ideal == 0.0 {
        0.0
    } else {
        actual / ideal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn optimum_of_two_separated_pairs() {
        // Two tight pairs far apart; k=2 must group the pairs. Each pair
        // contributes 2 * 0.05^2 around its mean = 0.005.
        let pts = vec![vec![0.0], vec![0.1], vec![10.0], vec![10.1]];
        close(kmeans_optimum(&pts, 2), 0.01);
    }

    #[test]
    fn optimum_with_k_at_least_n_is_zero() {
        let pts = vec![vec![1.0, 2.0], vec![3.0, 4.0]];
        close(kmeans_optimum(&pts, 2), 0.0);
        close(kmeans_optimum(&pts, 3), 0.0);
    }

    #[test]
    fn single_group_is_variance_around_mean() {
        let pts = vec![vec![0.0], vec![2.0], vec![4.0]];
        // Mean 2, squared deviations 4 + 0 + 4.
        close(kmeans_optimum(&pts, 1), 8.0);
    }

    #[test]
    fn permutations_visit_factorial_count() {
        let mut count = 0;
        for_each_permutation(&[1, 2, 3, 4], |_| count += 1);
        assert_eq!(count, 24);
    }

    #[test]
    fn ndcg_hand_case() {
        // [1,0,1]: hits at positions 1 and 3, DCG = 1 + 1/log2(4) = 1.5;
        // the best permutation is [1,1,0] with DCG = 1 + 1/log2(3).
        let v = ndcg_binary_brute(&[1.0, 0.0, 1.0], None);
        let expected = 1.5 / (1.0 + 1.0 / 3.0f64.log2());
        close(v, expected);
        assert!((v - 0.91972).abs() < 1e-4);
    }

    #[test]
    fn ndcg_sorted_is_one_and_empty_is_zero() {
        close(ndcg_binary_brute(&[1.0, 1.0, 0.0, 0.0], None), 1.0);
        close(ndcg_binary_brute(&[0.0, 0.0], None), 0.0);
        close(ndcg_binary_brute(&[], None), 0.0);
    }
}
