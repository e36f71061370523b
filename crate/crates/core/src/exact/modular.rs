//! Word-size modular images of rational polynomials, used only to certify
//! coprimality cheaply before falling back to exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::qpoly::QPoly;
use super::rational::Rational;

/// Primes just below 2^62.
const PRIMES: [u64; 3] = [4611686018427387847, 4611686018427387817, 4611686018427387787];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

fn rat_mod(q: &Rational, p: u64) -> Option<u64> {
    let d = int_mod(q.denom(), p);
    (d != 0).then(|| mul_mod(int_mod(q.numer(), p), inv_mod(d, p), p))
}

/// Image mod `p`, `None` if a denominator vanishes or the degree drops.
fn reduce(a: &QPoly, p: u64) -> Option<Vec<u64>> {
    let v: Option<Vec<u64>> = a.coeffs().iter().map(|c| rat_mod(c, p)).collect();
    let v = v?;
    (v.last().copied().unwrap_or(0) != 0).then_some(v)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap();
        let k = a.len() - 1 - db;
        if top != 0 {
            let t = mul_mod(top, inv, p);
            for (j, bj) in b.iter().enumerate() {
                let s = mul_mod(t, *bj, p);
                a[k + j] = (a[k + j] + p - s) % p;
            }
        }
        a.pop();
    }
    trim(a);
}

/// Degree of `gcd(a mod p, b mod p)`.
fn gcd_degree_mod(a: Vec<u64>, b: Vec<u64>, p: u64) -> usize {
    let (mut x, mut y) = (a, b);
    while !y.is_empty() {
        rem_mod(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    x.len().saturating_sub(1)
}

/// True when some good prime proves `gcd(a, b) = 1`. A `false` answer is
/// inconclusive. Sound because, when neither leading coefficient vanishes
/// mod `p`, the modular gcd has degree at least that of the true gcd.
pub fn certify_coprime(a: &QPoly, b: &QPoly) -> bool {
    PRIMES.iter().any(|&p| match (reduce(a, p), reduce(b, p)) {
        (Some(x), Some(y)) => gcd_degree_mod(x, y, p) == 0,
        _ => false,
    })
}
