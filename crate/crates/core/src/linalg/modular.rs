//! Multi-modular nullspace computation.
//!
//! The integer-scaled system is reduced modulo a deterministic descending
//! sequence of 64-bit primes. Each image yields a canonical echelon basis of
//! the nullspace mod p; images sharing the best rank and pivot pattern are
//! combined by CRT, lifted by rational reconstruction and then checked
//! exactly against the original system. Nothing unverified is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::echelon::{echelon_with, nullspace_with, Arith};
use crate::linalg::fraction_free::primitive_integer_row;
use crate::linalg::{Echelon, RowBasis, SparseRow};

#[derive(Clone, Copy, Debug)]
pub(crate) struct ModP {
    pub p: u64,
}

impl ModP {
    fn reduce(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    }
}

impl Arith for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut base, mut e, mut acc) = (*a, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The first `count` primes below 2^64, in descending order.
pub fn word_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = u64::MAX;
    while out.len() < count {
        if num_prime::nt_funcs::is_prime64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

/// Recovers n/d from a mod m with |n|, d ≤ sqrt(m/2).
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

struct Image {
    rank: usize,
    null_pivots: Vec<usize>,
    rows: Vec<Vec<u64>>,
}

fn solve_mod(p: u64, cols: usize, rows: &[Vec<(usize, BigInt)>]) -> Image {
    let ar = ModP { p };
    let reduced: Vec<Vec<(usize, u64)>> = rows
        .iter()
        .map(|r| r.iter().map(|(c, v)| (*c, ar.reduce(v))).collect())
        .collect();
    let ech = echelon_with(ar, cols, &reduced);
    let null: Echelon<u64> = nullspace_with(ar, &ech);
    let dense = null
        .rows
        .iter()
        .map(|r| {
            let mut d = vec![0u64; cols];
            for (c, v) in r {
                d[*c] = *v;
            }
            d
        })
        .collect();
    Image {
        rank: ech.pivots.len(),
        null_pivots: null.pivots,
        rows: dense,
    }
}

fn verify(rows: &[Vec<(usize, BigInt)>], candidate: &[Vec<BigRational>]) -> bool {
    let scaled: Vec<Vec<BigInt>> = candidate
        .iter()
        .map(|v| {
            let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    rows.iter().all(|r| {
        scaled.iter().all(|v| {
            r.iter()
                .fold(BigInt::zero(), |acc, (c, a)| acc + a * &v[*c])
                .is_zero()
        })
    })
}

/// CRT accumulator: (rank, pivot pattern, modulus, residues).
type Accumulator = (usize, Vec<usize>, BigInt, Vec<Vec<BigInt>>);

pub(crate) fn modular_nullspace(
    cols: usize,
    rows: &[SparseRow<BigRational>],
    prime_budget: usize,
) -> Result<RowBasis<BigRational>, Error> {
    let int_rows: Vec<Vec<(usize, BigInt)>> = rows
        .iter()
        .map(|r| primitive_integer_row(r))
        .filter(|r| !r.is_empty())
        .collect();
    if int_rows.is_empty() {
        return Ok(RowBasis::full(cols));
    }

    let primes = word_primes(prime_budget);
    let mut acc: Option<Accumulator> = None;

    for &p in &primes {
        let img = solve_mod(p, cols, &int_rows);
        let fresh = match &acc {
            None => true,
            Some((rank, pattern, _, _)) => {
                if img.rank < *rank || (img.rank == *rank && img.null_pivots != *pattern) {
                    continue;
                }
                img.rank > *rank
            }
        };
        let pb = BigInt::from(p);
        if fresh {
            let residues = img
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            acc = Some((img.rank, img.null_pivots, pb, residues));
        } else if let Some((_, _, modulus, residues)) = acc.as_mut() {
            let inv = BigInt::from(ModP { p }.inv(&ModP { p }.reduce(modulus)));
            for (res_row, img_row) in residues.iter_mut().zip(&img.rows) {
                for (a, &r) in res_row.iter_mut().zip(img_row) {
                    let diff = (BigInt::from(r) - &*a).mod_floor(&pb);
                    let t = (diff * &inv).mod_floor(&pb);
                    *a += &*modulus * t;
                }
            }
            *modulus *= &pb;
        }

        let (_, pattern, modulus, residues) = acc.as_ref().expect("accumulator set above");
        let candidate: Option<Vec<Vec<BigRational>>> = residues
            .iter()
            .map(|r| r.iter().map(|a| rational_reconstruct(a, modulus)).collect())
            .collect();
        if let Some(candidate) = candidate {
            if verify(&int_rows, &candidate) {
                return Ok(RowBasis::from_canonical(cols, candidate, pattern.clone()));
            }
        }
    }
    Err(Error::ReconstructionFailed {
        primes: primes.len(),
    })
}
