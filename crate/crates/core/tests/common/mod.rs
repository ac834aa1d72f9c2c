//! Independent oracles for the integration tests. Nothing here calls into
//! the library's solving code.
#![allow(dead_code)]

/// Nonnegative solutions of `a·x + b·y = m` by scanning `x`.
pub fn pairs(a: i64, b: i64, m: i64) -> Vec<(i64, i64)> {
    (0..=m / a)
        .filter(|x| (m - a * x) % b == 0)
        .map(|x| (x, (m - a * x) / b))
        .collect()
}

/// Nonnegative solutions of `p·x + q·y + l·z = n` by a triple loop, in
/// `(x, y, z)` lexicographic order.
pub fn triples(p: i64, q: i64, l: i64, n: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for x in 0..=n / p {
        for y in 0..=(n - p * x) / q {
            for z in 0..=(n - p * x - q * y) / l {
                if p * x + q * y + l * z == n {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// Is `n` a nonnegative combination of `a` and `b`?
pub fn representable(a: i64, b: i64, n: i64) -> bool {
    n >= 0 && (0..=n / a).any(|x| (n - a * x) % b == 0)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
