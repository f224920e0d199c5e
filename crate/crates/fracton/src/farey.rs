//! Farey series and their neighbor properties.
//!
//! `FareySequence::generate` produces the complete ascending series of
//! reduced fractions in [0, 1] with denominators up to the order, using the
//! standard next-term recurrence. The checkers below verify the two
//! classical neighbor identities on arbitrary fraction lists (so tampered
//! inputs can be probed in tests) and certify the mediant's
//! minimal-denominator property by exhaustive scan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::Fraction;

/// The Farey series of a given order: ascending reduced fractions in [0, 1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareySequence {
    order: u32,
    elements: Vec<Fraction>,
}

impl FareySequence {
    /// Generates the full series for `order >= 1`.
    ///
    /// Seeded with (0/1, 1/order); each successor p3/q3 follows from the
    /// two previous terms via k = floor((order + q1) / q2), p3 = k*p2 - p1,
    /// q3 = k*q2 - q1. The recurrence stops at 1/1.
    pub fn generate(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        let n = BigInt::from(order);
        let mut elements = vec![Fraction::zero()];
        let (mut p1, mut q1) = (BigInt::from(0), BigInt::from(1));
        let (mut p2, mut q2) = (BigInt::from(1), n.clone());
        while p2 <= q2 {
            elements.push(Fraction::new(p2.clone(), q2.clone()).expect("q2 >= 1"));
            let k = (&n + &q1).div_floor(&q2);
            let p3 = &k * &p2 - p1;
            let q3 = &k * &q2 - q1;
            (p1, q1) = (p2, q2);
            (p2, q2) = (p3, q3);
        }
        Ok(FareySequence { order, elements })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn elements(&self) -> &[Fraction] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements strictly between 0 and 1.
    pub fn interior(&self) -> &[Fraction] {
        &self.elements[1..self.elements.len() - 1]
    }
}

/// A failed unimodularity check: the adjacent pair at `index`, `index + 1`
/// and the determinant |p2*q1 - q2*p1| that should have been 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularViolation {
    pub index: usize,
    pub left: Fraction,
    pub right: Fraction,
    pub determinant: BigInt,
}

/// Checks |p2*q1 - q2*p1| = 1 for every adjacent pair.
///
/// Returns the first violation, or `None` when the identity holds
/// throughout. Never fails on well-formed input; lists shorter than two
/// elements hold vacuously.
pub fn check_unimodularity(elements: &[Fraction]) -> Option<UnimodularViolation> {
    for (index, pair) in elements.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        let determinant = (b.numer() * a.denom() - b.denom() * a.numer()).abs();
        if !determinant.is_one() {
            return Some(UnimodularViolation {
                index,
                left: a.clone(),
                right: b.clone(),
                determinant,
            });
        }
    }
    None
}

/// A failed mediant identity: the middle element at `index` differs from the
/// mediant of its neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MediantViolation {
    pub index: usize,
    pub expected: Fraction,
    pub found: Fraction,
}

/// Checks that every interior element equals the mediant of its neighbors.
pub fn check_mediant_identity(elements: &[Fraction]) -> Option<MediantViolation> {
    for (offset, triple) in elements.windows(3).enumerate() {
        let expected = triple[0].mediant(&triple[2]);
        if triple[1] != expected {
            return Some(MediantViolation {
                index: offset + 1,
                expected,
                found: triple[1].clone(),
            });
        }
    }
    None
}

/// Certificate that the mediant of two adjacent elements is the unique
/// smallest-denominator fraction strictly between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MediantCertificate {
    pub mediant: Fraction,
    /// Smallest-denominator fraction strictly between the pair, found by
    /// scanning every denominator up to q1 + q2.
    pub smallest_between: Fraction,
    /// Number of reduced fractions at that smallest denominator.
    pub count_at_smallest: usize,
}

impl MediantCertificate {
    /// True when the mediant is the unique minimal-denominator fraction.
    pub fn holds(&self) -> bool {
        self.smallest_between == self.mediant && self.count_at_smallest == 1
    }
}

/// Certifies the minimal-denominator property for a pair adjacent in `seq`.
///
/// Scans denominators 1..=q1+q2 exhaustively and reports the first hit, so
/// the certificate does not rest on the identity it is certifying.
pub fn certify_mediant_minimal(
    seq: &FareySequence,
    a: &Fraction,
    b: &Fraction,
) -> Result<MediantCertificate> {
    let adjacent = seq
        .elements()
        .windows(2)
        .any(|pair| &pair[0] == a && &pair[1] == b);
    if !adjacent {
        return Err(Error::NotAdjacent);
    }

    let mediant = a.mediant(b);
    let bound = (a.denom() + b.denom())
        .to_u64()
        .expect("mediant denominators stay small");
    for q in 1..=bound {
        let hits = fractions_strictly_between(a, b, q);
        if let Some(first) = hits.first() {
            return Ok(MediantCertificate {
                mediant,
                smallest_between: first.clone(),
                count_at_smallest: hits.len(),
            });
        }
    }
    unreachable!("the mediant itself lies in the scanned range");
}

/// All reduced fractions with denominator exactly `q` strictly inside (a, b).
fn fractions_strictly_between(a: &Fraction, b: &Fraction, q: u64) -> Vec<Fraction> {
    let q = BigInt::from(q);
    // smallest p with p/q > a, i.e. p > a*q
    let mut p: BigInt = (a.numer() * &q).div_floor(a.denom()) + 1;
    let mut found = Vec::new();
    // walk while p/q < b, i.e. p * b.denom < b.numer * q
    while &p * b.denom() < b.numer() * &q {
        if p.gcd(&q).is_one() {
            found.push(Fraction::new(p.clone(), q.clone()).expect("q >= 1"));
        }
        p += 1;
    }
    found
}
