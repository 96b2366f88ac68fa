//! Combinations, shuffles and permutation signs.

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples from `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=n.saturating_sub(need) {
            if i >= n {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Position of a strictly increasing tuple in [`combinations`]`(n, k)`.
pub fn combination_index(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut idx = 0;
    let mut next = 0;
    for (pos, &c) in tuple.iter().enumerate() {
        for skipped in next..c {
            idx += binomial(n - 1 - skipped, k - 1 - pos);
        }
        next = c + 1;
    }
    idx
}

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or `None` when an entry repeats.
pub fn sort_with_sign(tuple: &mut [usize]) -> Option<bool> {
    let mut even = true;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            even = !even;
            j -= 1;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(even)
    }
}

/// A `(p, q)`-shuffle: the positions sent to the first block, the positions
/// sent to the second block, and whether the shuffle is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub even: bool,
}

/// All `(p, q)`-shuffles of `0..p+q`, enumerated by choosing the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    combinations(p + q, p)
        .into_iter()
        .map(|first| {
            let second: Vec<usize> = (0..p + q).filter(|i| !first.contains(i)).collect();
            let inversions: usize = first.iter().enumerate().map(|(i, &f)| f - i).sum();
            Shuffle { first, second, even: inversions.is_multiple_of(2) }
        })
        .collect()
}
