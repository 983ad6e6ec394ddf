//! Independent reference computations for the integration tests. Nothing
//! here calls into the library's number theory.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Prime factorization by trial division.
pub fn factor(mut n: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `N ∏ (1 + 1/p)`.
pub fn psi(n: i64) -> i64 {
    factor(n).iter().fold(n, |acc, &(p, _)| acc / p * (p + 1))
}

pub fn phi(n: i64) -> i64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as i64
}

/// `[SL2(Z) : (±I)Γ₁(N)]`.
pub fn index_gamma1(n: i64) -> i64 {
    if n <= 2 {
        psi(n)
    } else {
        psi(n) * phi(n) / 2
    }
}

/// `[SL2(Z) : (±I)Γ(N)]`.
pub fn index_gamma_full(n: i64) -> i64 {
    let sl2 = factor(n)
        .iter()
        .fold(n * n * n, |acc, &(p, _)| acc / (p * p) * (p * p - 1));
    if n <= 2 {
        sl2
    } else {
        sl2 / 2
    }
}

/// Symmetric representative in `[-(N-1)/2, N/2]`.
pub fn sym(x: i64, n: i64) -> i64 {
    let r = x.rem_euclid(n);
    if r > n / 2 {
        r - n
    } else {
        r
    }
}

/// Least `m >= 0` with `m·a - b` a unit mod N, by direct search.
pub fn brute_m(a: i64, b: i64, n: i64) -> Option<i64> {
    (0..n).find(|&m| gcd(m * a - b, n) == 1)
}

/// All classes of P¹(Z/NZ), each as its orbit under units (a sorted set of
/// pairs in `[0, N)`).
pub fn p1_orbits(n: i64) -> BTreeSet<Vec<(i64, i64)>> {
    let units: Vec<i64> = (1..n.max(2)).filter(|&u| gcd(u, n) == 1).collect();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if gcd(gcd(a, b), n) != 1 {
                continue;
            }
            let mut orbit: Vec<(i64, i64)> = units
                .iter()
                .map(|&u| ((u * a).rem_euclid(n), (u * b).rem_euclid(n)))
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            out.insert(orbit);
        }
    }
    out
}

pub type M2 = [[i64; 2]; 2];

pub fn mul(x: &M2, y: &M2) -> M2 {
    [
        [
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ],
        [
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ],
    ]
}

pub fn inv(x: &M2) -> M2 {
    [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]
}

pub const S: M2 = [[0, -1], [1, 0]];

pub fn t(e: i64) -> M2 {
    [[1, e], [0, 1]]
}

/// A matrix in SL2(Z) with first column `(p, q)`, for coprime `p, q`.
pub fn completion(p: i64, q: i64) -> M2 {
    // p*x + q*y = 1  =>  [[p, -y], [q, x]]
    let (mut r0, mut r1) = (p, q);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    if r0 < 0 {
        s0 = -s0;
        t0 = -t0;
    }
    assert_eq!(p * s0 + q * t0, 1, "({p}, {q}) not coprime");
    [[p, -t0], [q, s0]]
}

/// `p/q` in lowest terms with `q >= 0`; `(1, 0)` for infinity.
pub fn reduce(p: i64, q: i64) -> (i64, i64) {
    if q == 0 {
        return (1, 0);
    }
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    if q < 0 {
        (-p, -q)
    } else {
        (p, q)
    }
}

/// Whether some element of Γ₀(N) maps `c1` to `c2`. Every element of
/// SL2(Z) sending c1 to c2 is `±g2·T^h·g1⁻¹`, and its lower-left entry is
/// affine in h, so `h` mod N suffices.
pub fn transporter_equivalent(c1: (i64, i64), c2: (i64, i64), n: i64) -> bool {
    let g1 = completion(c1.0, c1.1);
    let g2 = completion(c2.0, c2.1);
    let g1i = inv(&g1);
    (0..n).any(|h| mul(&mul(&g2, &t(h)), &g1i)[1][0].rem_euclid(n) == 0)
}

/// Search of Γ₀(N) matrices `[[a, b], [c, d]]` with `|a|, |d| <= bound`
/// mapping `c1` to `c2`.
pub fn bounded_search_equivalent(c1: (i64, i64), c2: (i64, i64), n: i64, bound: i64) -> bool {
    let (p1, q1) = c1;
    let (p2, q2) = c2;
    for a in -bound..=bound {
        for d in -bound..=bound {
            let ad = a * d;
            // ad - bc = 1 with c = nk
            for k in -bound..=bound {
                let c = n * k;
                let (b, ok) = if c == 0 {
                    (0, ad == 1)
                } else {
                    ((ad - 1) / c, (ad - 1) % c == 0)
                };
                if !ok {
                    continue;
                }
                let bs: Vec<i64> = if c == 0 { (-bound..=bound).collect() } else { vec![b] };
                for b in bs {
                    let (x, y) = (a * p1 + b * q1, c * p1 + d * q1);
                    if reduce(x, y) == (p2, q2) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Least `h > 0` with `g·T^h·g⁻¹ ∈ Γ₀(N)`, where `g(∞)` is the cusp.
pub fn stabilizer_width(c: (i64, i64), n: i64) -> i64 {
    let g = completion(c.0, c.1);
    let gi = inv(&g);
    (1..=n)
        .find(|&h| mul(&mul(&g, &t(h)), &gi)[1][0].rem_euclid(n) == 0)
        .expect("T^N conjugates into Γ(N)")
}
