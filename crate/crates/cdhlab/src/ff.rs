//! Exact arithmetic in prime fields F_p and periodic binomial/multinomial
//! coefficients modulo a prime.
//!
//! Primality is certified by trial division at construction; the supported
//! range is capped at 97 because no larger prime appears in any use case.
//! Binomials are computed digit-by-digit via Lucas' theorem, multinomials as
//! the telescoping product of binomials.

use crate::{Error, Result};

/// A certified prime in `2..=97`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub const MAX: u64 = 97;

    pub fn new(value: u64) -> Result<Prime> {
        if value < 2 || value > Self::MAX {
            return Err(Error::NotPrime(value));
        }
        let mut k = 2;
        while k * k <= value {
            if value % k == 0 {
                return Err(Error::NotPrime(value));
            }
            k += 1;
        }
        Ok(Prime(value))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// All residues `0..p` as plain integers.
    pub fn residues(self) -> impl Iterator<Item = u64> {
        0..self.0
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of F_p, kept reduced to `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp {
    residue: u64,
    modulus: Prime,
}

impl Fp {
    pub fn new(value: u64, modulus: Prime) -> Fp {
        Fp {
            residue: value % modulus.get(),
            modulus,
        }
    }

    /// Embeds a signed integer, reducing into `[0, p)`.
    pub fn from_signed(value: i64, modulus: Prime) -> Fp {
        let p = modulus.get() as i64;
        Fp {
            residue: (value.rem_euclid(p)) as u64,
            modulus,
        }
    }

    #[inline]
    pub fn residue(self) -> u64 {
        self.residue
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn expect_same_field(self, other: Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "field mismatch: F_{} vs F_{}",
            self.modulus, other.modulus
        );
    }

    pub fn pow(self, mut exp: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(self) -> Result<Fp> {
        if self.residue == 0 {
            return Err(Error::ZeroInverse(self.modulus.get()));
        }
        // Fermat: a^(p-2) for prime p.
        Ok(self.pow(self.modulus.get() - 2))
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.expect_same_field(rhs);
        Fp::new(self.residue + rhs.residue, self.modulus)
    }
}

impl std::ops::Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.expect_same_field(rhs);
        Fp::new(self.residue + self.modulus.get() - rhs.residue, self.modulus)
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.expect_same_field(rhs);
        Fp::new(self.residue * rhs.residue, self.modulus)
    }
}

impl std::ops::Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::new(self.modulus.get() - self.residue, self.modulus)
    }
}

impl std::fmt::Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// `(a + b) mod p` on raw residues.
#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

/// `(a - b) mod p` on raw residues.
#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

/// `(a * b) mod p` on raw residues.
#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

/// Binomial coefficient `C(a, b) mod p` for `a, b < p`, by factorials.
fn binom_small(a: u64, b: u64, p: Prime) -> u64 {
    if b > a {
        return 0;
    }
    let m = p.get();
    let mut num = 1;
    let mut den = 1;
    for i in 0..b {
        num = num * ((a - i) % m) % m;
        den = den * ((i + 1) % m) % m;
    }
    (Fp::new(num, p) * Fp::new(den, p).inv().expect("den < p is nonzero"))
        .residue()
}

/// `C(m, s) mod p` by Lucas' theorem: the product of the digit binomials
/// in base p. Returns 0 whenever some digit of s exceeds the digit of m,
/// in particular for `s > m`.
pub fn binom_mod(mut m: u64, mut s: u64, p: Prime) -> Fp {
    let base = p.get();
    let mut acc = 1;
    while s > 0 || m > 0 {
        let md = m % base;
        let sd = s % base;
        if sd > md {
            return Fp::new(0, p);
        }
        acc = acc * binom_small(md, sd, p) % base;
        m /= base;
        s /= base;
    }
    Fp::new(acc, p)
}

/// Multinomial coefficient `m! / (parts_0! ... parts_k!) mod p`, as the
/// telescoping product `C(s_0, s_0) * C(s_0+s_1, s_1) * ...` with each
/// factor reduced by Lucas. Zero when the parts do not sum to `m`.
pub fn multinom_mod(m: u64, parts: &[u64], p: Prime) -> Fp {
    let total: u64 = parts.iter().sum();
    if total != m {
        return Fp::new(0, p);
    }
    let mut prefix = 0u64;
    let mut acc = Fp::new(1, p);
    for &part in parts {
        prefix += part;
        acc = acc * binom_mod(prefix, part, p);
        if acc.is_zero() {
            return acc;
        }
    }
    acc
}

/// The smallest power `p^k` with `p^k > s`. For fixed `s`, the map
/// `m -> C(m, s) mod p` is periodic with this period.
pub fn binom_period_bound(s: u64, p: Prime) -> u64 {
    let mut pk: u64 = 1;
    while pk <= s {
        pk = pk
            .checked_mul(p.get())
            .expect("period bound overflows u64");
    }
    pk
}

/// Smallest `r >= 1` with `values[m + r] == values[m]` for all
/// `m <= len - 1 - r`. Returns `len` (that is, n+1 for a sequence indexed
/// by 0..=n) when no `r <= n` qualifies; that vacuous shift always holds.
pub fn seq_min_period<T: PartialEq>(values: &[T]) -> Result<usize> {
    if values.is_empty() {
        return Err(Error::EmptySequence);
    }
    let len = values.len();
    for r in 1..len {
        if (0..len - r).all(|m| values[m + r] == values[m]) {
            return Ok(r);
        }
    }
    Ok(len)
}
