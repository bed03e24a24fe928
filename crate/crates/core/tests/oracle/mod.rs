//! Independent reference computations for the integration tests. Nothing
//! here calls into the library's combinatorics beyond plain constructors.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `γ[A]` straight from its definition: for each part of `γ`, gather the
/// selected blocks, relabel their union increasingly from `offset + 1`, and
/// append. Blocks come back sorted by minima.
pub fn evaluate(gamma: &[Vec<u32>], a: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut offset = 0u32;
    for part in gamma {
        let chosen: Vec<&Vec<u32>> = part.iter().map(|&i| &a[i as usize - 1]).collect();
        let ground: BTreeSet<u32> = chosen.iter().flat_map(|b| b.iter().copied()).collect();
        let rank = |x: u32| offset + 1 + ground.iter().position(|&y| y == x).unwrap() as u32;
        for b in chosen {
            let mut nb: Vec<u32> = b.iter().map(|&x| rank(x)).collect();
            nb.sort_unstable();
            out.push(nb);
        }
        offset += ground.len() as u32;
    }
    out.sort_by_key(|b| b[0]);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Bell numbers by the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// Ordered Bell numbers: `F(n) = Σ_{k≥1} C(n,k) F(n-k)`.
pub fn fubini(n: usize) -> u64 {
    let mut f = vec![1u64];
    for m in 1..=n as u64 {
        let v = (1..=m).map(|k| binomial(m, k) * f[(m - k) as usize]).sum();
        f.push(v);
    }
    f[n]
}

pub fn delannoy(k: usize, l: usize) -> u64 {
    let mut d = vec![vec![1u64; l + 1]; k + 1];
    for i in 1..=k {
        for j in 1..=l {
            d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
        }
    }
    d[k][l]
}

/// Atomic counts from `B(x) = 1 / (1 - A(x))`.
pub fn atomic_count(n: usize) -> u64 {
    let mut a = vec![0u64; n + 1];
    for m in 1..=n {
        let rest: u64 = (1..m).map(|k| a[k] * bell(m - k)).sum();
        a[m] = bell(m) - rest;
    }
    a[n]
}

fn mobius(n: usize) -> i64 {
    let (mut m, mut sign, mut p) = (n, 1i64, 2);
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Lyndon words of total weight `n` over a graded alphabet with `letters(k)`
/// letters of weight `k`, by the weighted Witt formula.
pub fn lyndon_count(n: usize, letters: impl Fn(usize) -> u64) -> u64 {
    // c(m) = Σ_{d | m} d L(d), from the log-derivative of 1/(1 - A).
    let mut c = vec![0i64; n + 1];
    for m in 1..=n {
        c[m] = m as i64 * letters(m) as i64 + (1..m).map(|k| letters(k) as i64 * c[m - k]).sum::<i64>();
    }
    let total: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(n / d) * c[d])
        .sum();
    assert_eq!(total % n as i64, 0);
    (total / n as i64) as u64
}

#[test]
fn oracle_self_check() {
    assert_eq!((0..=5).map(bell).collect::<Vec<_>>(), [1, 1, 2, 5, 15, 52]);
    assert_eq!((0..=4).map(fubini).collect::<Vec<_>>(), [1, 1, 3, 13, 75]);
    assert_eq!(delannoy(2, 2), 13);
    assert_eq!((1..=5).map(atomic_count).collect::<Vec<_>>(), [1, 1, 2, 6, 22]);
    // Necklace numbers over two letters of weight 1.
    let two = |k| if k == 1 { 2 } else { 0 };
    assert_eq!(
        (1..=6).map(|n| lyndon_count(n, two)).collect::<Vec<_>>(),
        [2, 1, 2, 3, 6, 9]
    );
    assert_eq!(
        evaluate(
            &[vec![1, 3], vec![2]],
            &[vec![1, 3], vec![2, 9], vec![4, 5, 8], vec![7]]
        ),
        [vec![1, 2], vec![3, 4, 5], vec![6, 7]]
    );
}
