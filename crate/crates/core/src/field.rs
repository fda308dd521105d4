//! Exact arithmetic in GF(p^m).
//!
//! An element is stored as its coefficient vector over GF(p) packed into a
//! base-p integer (little-endian), so `0` and `1` are the field's zero and
//! one and every element of the prime subfield keeps its integer value.
//! The modulus for a given `(p, m)` is always the monic irreducible polynomial
//! with the smallest coefficient code, which makes every fixture reproducible.
//!
//! Multiplication goes through log/antilog tables built at construction time;
//! addition uses a full table for fields up to [`ADD_TABLE_MAX`] elements and
//! digit-wise arithmetic above that.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default upper bound on the field size accepted by [`Field::new`].
pub const DEFAULT_MAX_FIELD_SIZE: u64 = 1 << 20;

/// Fields with at most this many elements get a dense addition table.
pub const ADD_TABLE_MAX: u32 = 1024;

/// A raw field element: the base-p packed coefficient vector.
///
/// A `Fe` carries no reference to its field; all arithmetic goes through a
/// [`Field`] handle. Use [`FieldElement`] when the pairing must be checked.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn repr(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus over GF(p), low degree first, length m + 1.
    modulus: Vec<u32>,
    generator: u32,
    /// exp[i] = g^i for i in 0..2(q-1).
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field GF(p^m) with precomputed tables.
///
/// Cloning is cheap (shared handle). Two handles compare equal when they
/// describe the same `(p, m)`, since the modulus is a function of both.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `n` into `(p, m)` with `n = p^m`, if `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Schoolbook product of packed GF(p^m) elements, reduced by `modulus`.
fn raw_mul(p: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
    let m = modulus.len() - 1;
    let da = digits(p, m, a);
    let db = digits(p, m, b);
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for deg in (m..2 * m).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // x^m = -(modulus[0] + ... + modulus[m-1] x^{m-1})
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let t = deg - m + i;
            prod[t] = (prod[t] + (p as u64 - c) * mc as u64) % p as u64;
        }
        prod[deg] = 0;
    }
    pack(p, &prod[..m])
}

fn digits(p: u32, m: usize, mut a: u32) -> Vec<u32> {
    let mut out = vec![0; m];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn pack(p: u32, ds: &[u64]) -> u32 {
    ds.iter().rev().fold(0u32, |acc, &d| acc * p + d as u32)
}

impl Field {
    /// GF(p^m) with the default size bound.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        Field::with_bound(p, m, DEFAULT_MAX_FIELD_SIZE)
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Field::new(p, m)
    }

    pub fn with_bound(p: u32, m: u32, bound: u64) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::InvalidDegree(m));
        }
        let size = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if size > bound || size > u32::MAX as u64 {
            return Err(Error::FieldTooLarge { size, bound });
        }
        let q = size as u32;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            let base = Field::new(p, 1)?;
            let count = (p as u64).pow(m);
            (0..count)
                .map(|idx| Poly::monic_from_index(&base, m as usize, idx))
                .find(|f| f.is_irreducible().unwrap_or(false))
                .expect("an irreducible polynomial of every degree exists")
                .coeffs()
                .iter()
                .map(|c| c.0)
                .collect()
        };

        let mul = |a: u32, b: u32| -> u32 {
            if m == 1 {
                ((a as u64 * b as u64) % p as u64) as u32
            } else {
                raw_mul(p, &modulus, a, b)
            }
        };
        let pow = |mut a: u32, mut e: u64| -> u32 {
            let mut acc = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul(acc, a);
                }
                a = mul(a, a);
                e >>= 1;
            }
            acc
        };

        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&l| pow(g, order / l) != 1))
            .expect("the multiplicative group is cyclic");

        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = mul(x, generator);
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q - 1) as usize];
        }

        let neg = (0..q)
            .map(|a| {
                let ds: Vec<u64> = digits(p, m as usize, a)
                    .into_iter()
                    .map(|d| ((p - d) % p) as u64)
                    .collect();
                pack(p, &ds)
            })
            .collect();

        let mut field = Inner {
            p,
            m,
            q,
            modulus,
            generator,
            exp,
            log,
            neg,
            add: None,
        };
        if q <= ADD_TABLE_MAX {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = digit_add(p, a, b);
                }
            }
            field.add = Some(table);
        }
        Ok(Field(Arc::new(field)))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    #[inline]
    pub fn is_even(&self) -> bool {
        self.0.p == 2
    }

    /// Modulus coefficients over GF(p), low degree first (monic, length m + 1).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The smallest-repr primitive element; log tables are built from it.
    pub fn generator(&self) -> Fe {
        Fe(self.0.generator)
    }

    /// `"p^m"`, as used in reports.
    pub fn label(&self) -> String {
        format!("{}^{}", self.0.p, self.0.m)
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.0.q
    }

    pub fn element(&self, repr: u32) -> Result<Fe> {
        if repr < self.0.q {
            Ok(Fe(repr))
        } else {
            Err(Error::ElementOutOfRange(repr))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Canonical order: nonzero elements by increasing repr, then zero.
    pub fn elements(&self) -> Vec<Fe> {
        (1..self.0.q).map(Fe).chain(std::iter::once(Fe::ZERO)).collect()
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> {
        (1..self.0.q).map(Fe)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.add {
            Some(t) => Fe(t[(a.0 * self.0.q + b.0) as usize]),
            None => Fe(digit_add(self.0.p, a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let i = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        Fe(self.0.exp[i as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let order = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Some(Fe(self.0.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// `a^n`, with `0^0 = 1`.
    pub fn pow(&self, a: Fe, n: u64) -> Fe {
        if n == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let order = (self.0.q - 1) as u64;
        let e = (self.0.log[a.0 as usize] as u64 * (n % order)) % order;
        Fe(self.0.exp[e as usize])
    }

    /// Whether `a = y^2` for some `y`. Zero is a square; in characteristic
    /// two every element is.
    pub fn is_square(&self, a: Fe) -> bool {
        a.0 == 0 || self.is_even() || self.0.log[a.0 as usize].is_multiple_of(2)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Some(n / gcd_u64(n, l))
    }

    pub fn is_generator(&self, g: Fe) -> bool {
        self.order(g) == Some((self.0.q - 1) as u64)
    }

    /// The exponent `e` in `[0, q-1)` with `g^e = a`.
    pub fn discrete_log(&self, a: Fe, g: Fe) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if !self.contains(a) {
            return Err(Error::ElementOutOfRange(a.0));
        }
        if !self.contains(g) || !self.is_generator(g) {
            return Err(Error::NotAGenerator(g.0));
        }
        let n = (self.0.q - 1) as u64;
        let la = self.0.log[a.0 as usize] as u64;
        let lg = self.0.log[g.0 as usize] as u64;
        // la = e * lg (mod n), lg invertible mod n
        Ok((la * mod_inverse_u64(lg, n)) % n)
    }

    /// Sum of all elements of `xs`.
    pub fn sum<I: IntoIterator<Item = Fe>>(&self, xs: I) -> Fe {
        xs.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }
}

fn digit_add(p: u32, mut a: u32, mut b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0u32;
    let mut place = 1u32;
    while a > 0 || b > 0 {
        let d = (a % p + b % p) % p;
        out += d * place;
        place = place.wrapping_mul(p);
        a /= p;
        b /= p;
    }
    out
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mod_inverse_u64(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, a as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    t.rem_euclid(n as i128) as u64
}

/// Operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element paired with its field, for checked mixed-field arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Fe,
}

impl FieldElement {
    pub fn new(field: &Field, repr: u32) -> Result<Self> {
        Ok(FieldElement {
            field: field.clone(),
            value: field.element(repr)?,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn repr(&self) -> u32 {
        self.value.0
    }

    pub fn pow(&self, n: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.pow(self.value, n),
        }
    }

    pub fn is_square(&self) -> bool {
        self.field.is_square(self.value)
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        let value = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }
}

/// Checked arithmetic on two bound elements.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.div(a.value, b.value)?,
    };
    Ok(FieldElement {
        field: f.clone(),
        value,
    })
}
