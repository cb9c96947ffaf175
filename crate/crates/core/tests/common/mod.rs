//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the Jacobi or Gram code paths of the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use tracenorm::Digraph;

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<f64>]) -> f64 {
    match m.len() {
        0 => 1.0,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<f64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// `e_k` of `M·Mᵀ` (sum of its principal k-minors) via Cauchy–Binet:
/// `Σ_{|S|=|T|=k} det(M[S,T])²`.
pub fn gram_coefficients(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut e = vec![1.0];
    for k in 1..=n {
        let sets = subsets(n, k);
        let mut total = 0.0;
        for rows in &sets {
            for cols in &sets {
                let sub: Vec<Vec<f64>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect();
                total += det(&sub).powi(2);
            }
        }
        e.push(total);
    }
    e
}

fn cbrt(x: f64) -> f64 {
    x.cbrt()
}

/// Real roots of a monic cubic `x³ + a x² + b x + c`, assuming all are real
/// when the discriminant says so; otherwise the single real root.
pub fn cubic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let scale = 1.0 + a.abs() + b.abs().sqrt() + c.abs().cbrt();
    if p.abs() <= 1e-14 * scale * scale {
        let t = cbrt(-q);
        return vec![t + shift; 3];
    }
    if disc > 0.0 {
        let s = disc.sqrt();
        let t = cbrt(-q / 2.0 + s) + cbrt(-q / 2.0 - s);
        return vec![t + shift];
    }
    let r = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    (0..3).map(|k| r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift).collect()
}

/// Roots of a monic quartic `x⁴ + a x³ + b x² + c x + d` with four real roots (Ferrari).
pub fn quartic_roots(a: f64, b: f64, c: f64, d: f64) -> Vec<f64> {
    let shift = -a / 4.0;
    let p = b - 3.0 * a * a / 8.0;
    let q = c - a * b / 2.0 + a * a * a / 8.0;
    let r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a.powi(4) / 256.0;
    let scale = 1.0 + a.abs();
    let ys: Vec<f64> = if q.abs() <= 1e-13 * scale.powi(3) {
        // Biquadratic: y² = (−p ± √(p² − 4r)) / 2.
        let disc = (p * p - 4.0 * r).max(0.0).sqrt();
        let mut v = Vec::new();
        for z in [(-p + disc) / 2.0, (-p - disc) / 2.0] {
            let s = z.max(0.0).sqrt();
            v.push(s);
            v.push(-s);
        }
        v
    } else {
        // (y² + p/2 + m)² = 2m y² − q y + m² + m p + p²/4 − r, with the
        // right side a perfect square when 8m³ + 8p m² + (2p² − 8r) m − q² = 0.
        let m =
            cubic_roots(p, (2.0 * p * p - 8.0 * r) / 8.0, -q * q / 8.0).into_iter().fold(f64::NEG_INFINITY, f64::max);
        let s = (2.0 * m).max(0.0).sqrt();
        let mut v = Vec::new();
        for sign in [1.0, -1.0] {
            let inner = -(2.0 * p + 2.0 * m + sign * 2.0 * q / s);
            let t = inner.max(0.0).sqrt();
            v.push((sign * s + t) / 2.0);
            v.push((sign * s - t) / 2.0);
        }
        v
    };
    ys.into_iter().map(|y| y + shift).collect()
}

fn horner(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Newton steps that are kept only while they shrink `|p(x)|`.
fn polish(coeffs: &[f64], mut x: f64) -> f64 {
    for _ in 0..30 {
        let (p, dp) = horner(coeffs, x);
        if p == 0.0 || dp == 0.0 {
            break;
        }
        let next = x - p / dp;
        if horner(coeffs, next).0.abs() >= p.abs() {
            break;
        }
        x = next;
    }
    x
}

/// Singular values of a matrix of order ≤ 4 from the roots of the
/// characteristic polynomial of `M·Mᵀ`, descending.
///
/// Exactly vanishing coefficients `e_k` (rank deficiency) are deflated as
/// zero roots before solving the remaining low-degree polynomial in closed form.
pub fn oracle_singular_values(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    assert!(n <= 4, "closed-form oracle handles order ≤ 4");
    let e = gram_coefficients(m);
    let scale = e[1].max(1.0);
    let rank = (1..=n).rev().find(|&k| e[k] > 1e-24 * scale.powi(k as i32)).unwrap_or(0);
    // μ^r − e1 μ^{r−1} + e2 μ^{r−2} − … ± e_r
    let coeffs: Vec<f64> = (0..=rank).map(|k| if k % 2 == 0 { e[k] } else { -e[k] }).collect();
    let raw = match rank {
        0 => vec![],
        1 => vec![e[1]],
        2 => {
            let disc = (e[1] * e[1] - 4.0 * e[2]).max(0.0).sqrt();
            let big = (e[1] + disc) / 2.0;
            vec![big, e[2] / big]
        }
        3 => cubic_roots(coeffs[1], coeffs[2], coeffs[3]),
        4 => quartic_roots(coeffs[1], coeffs[2], coeffs[3], coeffs[4]),
        _ => unreachable!(),
    };
    let mut roots: Vec<f64> = raw.into_iter().map(|x| polish(&coeffs, x)).collect();
    roots.resize(n, 0.0);
    let mut s: Vec<f64> = roots.into_iter().map(|mu| mu.max(0.0).sqrt()).collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Every `k`-subset of the ordered pairs on `n` vertices, as a digraph.
pub fn all_digraphs_with_arcs(n: usize, k: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    if k > pairs.len() {
        return out;
    }
    loop {
        out.push(Digraph::new(n, pick.iter().map(|&i| pairs[i])).unwrap());
        let mut i = k;
        while i > 0 && pick[i - 1] == pairs.len() - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        pick[i - 1] += 1;
        for j in i..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
    out
}

/// Weak connectivity by depth-first search over the underlying graph.
pub fn weakly_connected(d: &Digraph) -> bool {
    let n = d.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(w) = stack.pop() {
        for &(a, b) in d.arcs() {
            for (x, y) in [(a, b), (b, a)] {
                if x == w && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn no_symmetric_pair(d: &Digraph) -> bool {
    let set: BTreeSet<_> = d.arcs().iter().copied().collect();
    d.arcs().iter().all(|&(u, v)| !set.contains(&(v, u)))
}

pub fn arc_set(d: &Digraph) -> BTreeSet<(usize, usize)> {
    d.arcs().iter().copied().collect()
}

pub fn rows(m: &tracenorm::spectra::SquareMatrix) -> Vec<Vec<f64>> {
    (0..m.order()).map(|i| m.row(i).to_vec()).collect()
}

/// Uniformly random simple digraph: each ordered pair is an arc with probability `p`.
pub fn random_digraph<R: rand::Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let arcs: Vec<_> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v).filter(|_| rng.gen_bool(p)).collect();
    Digraph::new(n, arcs).unwrap()
}
