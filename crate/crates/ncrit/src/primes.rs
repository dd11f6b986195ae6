//! Number-theoretic kernel: primality, factorization, prime supports,
//! multiplicative orders, and exact divisor-containment checks for
//! values of the form `base^k ± 1`.
//!
//! Everything here is exact integer arithmetic. Primality and
//! factorization use deterministic trial division, which is the right
//! tool at the scale this crate targets (primes bounded by a few
//! thousand); there is deliberately no probabilistic machinery.
//!
//! The one place arbitrary precision is unavoidable is
//! [`divide_out`] / [`prime_divisors_within`]: the values whose prime
//! support gets tested there grow like `2^(2p)`, far past any machine
//! word, but they are only ever *divided* by the small primes of a
//! known set, never factored blindly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Errors from the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero has no prime factorization")]
    Zero,
    #[error("{modulus} divides {base}, so the multiplicative order is undefined")]
    OrderUndefined { base: u64, modulus: u64 },
}

/// A natural number validated to be prime at construction.
///
/// Validation is deterministic trial division up to the square root,
/// so constructing a `Prime` from a huge value is slow on purpose:
/// inputs are expected to be desk-scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);

    pub fn new(value: u64) -> Result<Self, NumberError> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(NumberError::NotPrime(value))
        }
    }

    /// Caller must have already proved primality (e.g. the value came
    /// out of a trial-division loop that removed all smaller factors).
    pub(crate) fn new_unchecked(value: u64) -> Self {
        debug_assert!(is_prime(value), "{value} is not prime");
        Prime(value)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }
}

impl TryFrom<u64> for Prime {
    type Error = NumberError;
    fn try_from(value: u64) -> Result<Self, Self::Error> {
        Prime::new(value)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of primes, stored in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeSet(std::collections::BTreeSet<Prime>);

impl PrimeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from raw values, validating each one.
    pub fn try_from_values<I>(values: I) -> Result<Self, NumberError>
    where
        I: IntoIterator<Item = u64>,
    {
        values.into_iter().map(Prime::new).collect()
    }

    pub fn insert(&mut self, p: Prime) -> bool {
        self.0.insert(p)
    }

    pub fn remove(&mut self, p: Prime) -> bool {
        self.0.remove(&p)
    }

    pub fn contains(&self, p: Prime) -> bool {
        self.0.contains(&p)
    }

    pub fn contains_value(&self, value: u64) -> bool {
        self.0.iter().any(|p| p.0 == value)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Iterates in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Prime> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn max(&self) -> Option<Prime> {
        self.0.iter().next_back().copied()
    }
}

impl FromIterator<Prime> for PrimeSet {
    fn from_iter<I: IntoIterator<Item = Prime>>(iter: I) -> Self {
        PrimeSet(iter.into_iter().collect())
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A complete prime factorization: `base` equals the product of
/// `prime^exponent` over all entries, and every exponent is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    base: BigUint,
    factors: BTreeMap<Prime, u32>,
}

impl Factorization {
    fn new(base: BigUint, factors: BTreeMap<Prime, u32>) -> Self {
        Factorization { base, factors }
    }

    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn exponent(&self, p: Prime) -> Option<u32> {
        self.factors.get(&p).copied()
    }

    /// The set of prime divisors, i.e. the support `pi(base)`.
    pub fn primes(&self) -> PrimeSet {
        self.factors.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Prime, u32)> + '_ {
        self.factors.iter().map(|(p, e)| (*p, *e))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= BigUint::from(p.get()).pow(*e);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m % 2 == 0 {
        return m == 2;
    }
    let mut d = 3u64;
    while d <= m / d {
        if m % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Full prime factorization of a machine-word value by trial division.
pub fn factorize(m: u64) -> Result<Factorization, NumberError> {
    if m == 0 {
        return Err(NumberError::Zero);
    }
    let base = BigUint::from(m);
    let mut rest = m;
    let mut factors = BTreeMap::new();
    let count_factor = |factors: &mut BTreeMap<Prime, u32>, rest: &mut u64, d: u64| {
        let mut e = 0u32;
        while *rest % d == 0 {
            *rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.insert(Prime::new_unchecked(d), e);
        }
    };
    count_factor(&mut factors, &mut rest, 2);
    let mut d = 3u64;
    while d <= rest / d {
        count_factor(&mut factors, &mut rest, d);
        d += 2;
    }
    if rest > 1 {
        // whatever survives trial division up to its own square root is prime
        factors.insert(Prime::new_unchecked(rest), 1);
    }
    Ok(Factorization::new(base, factors))
}

/// The set of prime divisors `pi(m)`.
pub fn prime_set(m: u64) -> Result<PrimeSet, NumberError> {
    Ok(factorize(m)?.primes())
}

/// Trial-division factorization of an arbitrary-precision value.
///
/// Test-support path only: cost grows with the square root of the
/// largest prime cofactor, so this is meant for the moderate magnitudes
/// exercised by the graph generators. Panics if a prime cofactor does
/// not fit in a machine word (unreachable at the intended scale).
pub fn factorize_big(m: &BigUint) -> Result<Factorization, NumberError> {
    if m.is_zero() {
        return Err(NumberError::Zero);
    }
    if let Some(v) = m.to_u64() {
        return factorize(v);
    }
    let mut rest = m.clone();
    let mut factors = BTreeMap::new();
    let divide_all = |factors: &mut BTreeMap<Prime, u32>, rest: &mut BigUint, d: u64| {
        let big_d = BigUint::from(d);
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&big_d);
            if !r.is_zero() {
                break;
            }
            *rest = q;
            e += 1;
        }
        if e > 0 {
            factors.insert(Prime::new_unchecked(d), e);
        }
    };
    divide_all(&mut factors, &mut rest, 2);
    let mut d = 3u64;
    let mut bound = rest.sqrt();
    while BigUint::from(d) <= bound && !rest.is_one() {
        let before = factors.len();
        divide_all(&mut factors, &mut rest, d);
        if factors.len() != before {
            bound = rest.sqrt();
        }
        d += 2;
    }
    if !rest.is_one() {
        let v = rest.to_u64().expect(
            "prime cofactor exceeds machine-word range; factorize_big is a test-scale helper",
        );
        factors.insert(Prime::new_unchecked(v), 1);
    }
    Ok(Factorization::new(m.clone(), factors))
}

/// Modular exponentiation with u128 intermediates.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "modulus must be positive");
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// The multiplicative order of `a` modulo the prime `q`: the smallest
/// `d >= 1` with `a^d = 1 (mod q)`.
///
/// By Fermat's little theorem the order divides `q - 1`, so only the
/// divisors of `q - 1` are tried, in increasing order.
pub fn multiplicative_order(a: u64, q: Prime) -> Result<u64, NumberError> {
    if a % q.get() == 0 {
        return Err(NumberError::OrderUndefined {
            base: a,
            modulus: q.get(),
        });
    }
    for d in sorted_divisors(q.get() - 1) {
        if mod_pow(a, d, q.get()) == 1 {
            return Ok(d);
        }
    }
    unreachable!("a^(q-1) = 1 mod q for gcd(a, q) = 1");
}

/// All divisors of `n`, in increasing order.
fn sorted_divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![];
    }
    let f = factorize(n).expect("n > 0");
    let mut divisors = vec![1u64];
    for (p, e) in f.iter() {
        let mut extended = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pk = 1u64;
            for _ in 0..=e {
                extended.push(d * pk);
                pk = pk.saturating_mul(p.get());
            }
        }
        divisors = extended;
    }
    divisors.sort_unstable();
    divisors
}

/// Does the prime `q` divide `base^k - 1`?
///
/// Decided through the multiplicative order of `base` mod `q` — the
/// divisibility holds exactly when the order divides `k` — so no
/// big-integer value is ever formed.
pub fn divides_mersenne_like(q: Prime, base: u64, k: u64) -> Result<bool, NumberError> {
    let order = multiplicative_order(base, q)?;
    Ok(k % order == 0)
}

/// Result of dividing every prime of a set out of a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivideOut {
    /// Exponent of each set member that divides the value.
    pub factors: BTreeMap<Prime, u32>,
    /// What is left after all set members are removed; `1` exactly when
    /// the whole prime support of the value lies in the set.
    pub residual: BigUint,
}

/// Divides every prime of `pi` out of `m` with multiplicity.
pub fn divide_out(m: &BigUint, pi: &PrimeSet) -> Result<DivideOut, NumberError> {
    if m.is_zero() {
        return Err(NumberError::Zero);
    }
    let mut residual = m.clone();
    let mut factors = BTreeMap::new();
    for p in pi.iter() {
        if residual.is_one() {
            break;
        }
        let d = BigUint::from(p.get());
        let mut e = 0u32;
        loop {
            let (q, r) = residual.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            residual = q;
            e += 1;
        }
        if e > 0 {
            factors.insert(p, e);
        }
    }
    Ok(DivideOut { factors, residual })
}

/// The exact containment check `pi(m) ⊆ pi`: returns the factorization
/// of `m` over `pi` when every prime divisor of `m` lies in `pi`, and
/// `None` otherwise.
pub fn prime_divisors_within(
    m: &BigUint,
    pi: &PrimeSet,
) -> Result<Option<Factorization>, NumberError> {
    let out = divide_out(m, pi)?;
    if out.residual.is_one() {
        Ok(Some(Factorization::new(m.clone(), out.factors)))
    } else {
        Ok(None)
    }
}
