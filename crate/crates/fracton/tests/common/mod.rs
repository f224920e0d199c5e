//! Shared oracles for the integration suites. These deliberately avoid the
//! library's generation paths: the Farey oracle enumerates and sorts, and
//! the counting oracle sieves Euler's totient.

use fracton::Fraction;

pub fn fr(p: i64, q: i64) -> Fraction {
    Fraction::new(p, q).unwrap()
}

/// Every reduced p/q in [0, 1] with q <= n, by exhaustive enumeration.
pub fn brute_force_farey(n: u64) -> Vec<Fraction> {
    let mut all = Vec::new();
    for q in 1..=n {
        for p in 0..=q {
            if gcd(p, q) == 1 {
                all.push(fr(p as i64, q as i64));
            }
        }
    }
    all.sort();
    all.dedup();
    all
}

/// |F_n| = 1 + sum of phi(k) for k = 1..n, via a totient sieve.
pub fn farey_size_from_totients(n: u64) -> usize {
    let n = n as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    1 + phi[1..=n].iter().sum::<u64>() as usize
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
