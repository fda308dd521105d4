//! Univariate polynomials over GF(q).
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and has no degree.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs.iter().map(|c| c.0).collect::<Vec<_>>())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.0) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, v) => write!(f, "{v}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.0))
    }
}

/// Polynomials of the same field order by degree, then by coefficients from
/// the top down. Within a degree this is the base-q code order used by
/// [`Poly::monic_from_index`].
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from coefficient reprs, low degree first.
    pub fn from_reprs(field: &Field, reprs: &[u32]) -> Result<Poly> {
        let coeffs = reprs
            .iter()
            .map(|&r| field.element(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(field: &Field, c: Fe) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Fe::ONE)
    }

    /// `c * x^d`.
    pub fn monomial(field: &Field, c: Fe, d: usize) -> Poly {
        let mut coeffs = vec![Fe::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Fe::ONE, 1)
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Fe) -> Poly {
        Poly::new(field, vec![field.neg(a), Fe::ONE])
    }

    /// The monic polynomial of degree `d` whose lower coefficients are the
    /// base-q digits of `index`, lowest degree first.
    pub fn monic_from_index(field: &Field, d: usize, mut index: u64) -> Poly {
        let q = field.q() as u64;
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(Fe((index % q) as u32));
            index /= q;
        }
        coeffs.push(Fe::ONE);
        Poly::new(field, coeffs)
    }

    /// All monic polynomials of degree `d`, in code order.
    pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
        let count = (field.q() as u64).pow(d as u32);
        (0..count).map(move |i| Poly::monic_from_index(field, d, i))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn reprs(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fe::ONE)
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Scales to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let f = &self.field;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[db]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(f), Poly::zero(f)));
        };
        if da < db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; da - db + 1];
        for i in (0..=da - db).rev() {
            let c = f.mul(rem[i + db], lead_inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Inverse of `self` modulo `modulus`, reduced below `deg modulus`.
    pub fn mod_inverse(&self, modulus: &Poly) -> Result<Poly> {
        let f = &self.field;
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // invariant: s_i * self == r_i (mod modulus)
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus)?);
        let (mut s0, mut s1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quot, rem) = r0.divmod(&r1)?;
            let s2 = s0.sub(&quot.mul(&s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        if r0.degree() != Some(0) {
            return Err(Error::NotCoprime);
        }
        let c = f.inv(r0.coeffs[0]).expect("nonzero constant");
        s0.scale(c).rem(modulus)
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `b^2 - 4ac` for a quadratic `a x^2 + b x + c`.
    pub fn discriminant(&self) -> Option<Fe> {
        if self.degree() != Some(2) {
            return None;
        }
        let f = &self.field;
        let (c, b, a) = (self.coeffs[0], self.coeffs[1], self.coeffs[2]);
        let four = f.from_int(4);
        Some(f.sub(f.mul(b, b), f.mul(four, f.mul(a, c))))
    }

    /// Irreducibility over GF(q) for a monic polynomial of degree at least one.
    ///
    /// Degrees two and three are decided by the absence of roots. Higher
    /// degrees use `gcd(x^{q^i} - x, f) = 1` for `i <= deg f / 2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            Some(d) if d >= 1 && self.is_monic() => d,
            _ => return Err(Error::NotMonic),
        };
        let f = &self.field;
        if d == 1 {
            return Ok(true);
        }
        if d <= 3 {
            let rootless = f.elements().into_iter().all(|x| !self.eval(x).is_zero());
            if d == 2 && !f.is_even() {
                let disc = self.discriminant().expect("quadratic");
                debug_assert_eq!(rootless, !f.is_square(disc));
            }
            return Ok(rootless);
        }
        let x = Poly::x(f);
        let mut frob = x.rem(self)?;
        for _ in 1..=d / 2 {
            frob = frob.pow_mod(f.q() as u64, self)?;
            let g = frob.sub(&x).gcd(self)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Roots in GF(q), in canonical element order.
    pub fn distinct_roots(&self) -> Result<Vec<Fe>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .field
            .elements()
            .into_iter()
            .filter(|&x| self.eval(x).is_zero())
            .collect())
    }

    /// True when `self` is a product of `deg self` distinct linear factors.
    pub fn splits_distinct_linear(&self) -> Result<bool> {
        let roots = self.distinct_roots()?;
        Ok(Some(roots.len()) == self.degree())
    }

    /// Lagrange interpolation through `points`; degree below `points.len()`.
    pub fn interpolate(field: &Field, points: &[(Fe, Fe)]) -> Result<Poly> {
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::DuplicateNode(xi.0));
            }
        }
        let mut acc = Poly::zero(field);
        for (i, &(xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::one(field);
            let mut denom = Fe::ONE;
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Poly::linear(field, xj));
                    denom = field.mul(denom, field.sub(xi, xj));
                }
            }
            let c = field.div(yi, denom)?;
            acc = acc.add(&basis.scale(c));
        }
        Ok(acc)
    }
}

/// Monic irreducible polynomials of degree `d`, in code order.
pub fn monic_irreducibles(field: &Field, d: usize) -> Vec<Poly> {
    Poly::monic_polys(field, d)
        .filter(|p| p.is_irreducible().expect("monic of positive degree"))
        .collect()
}

/// `x^q - x` over the given field.
pub fn field_polynomial(field: &Field) -> Poly {
    Poly::monomial(field, Fe::ONE, field.q() as usize).sub(&Poly::x(field))
}

/// A quotient of polynomials whose denominator is monic and nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Normalizes the denominator to be monic.
    pub fn new(num: Poly, den: Poly) -> Result<RationalFunction> {
        let lc = den.leading().ok_or(Error::DivisionByZero)?;
        let inv = den.field().inv(lc).expect("nonzero leading coefficient");
        Ok(RationalFunction {
            num: num.scale(inv),
            den: den.scale(inv),
        })
    }

    pub fn from_poly(num: Poly) -> RationalFunction {
        let den = Poly::one(num.field());
        RationalFunction { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn eval(&self, x: Fe) -> Result<Fe> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleInField(x.0));
        }
        self.num.field().div(self.num.eval(x), d)
    }

    /// True when the denominator has no root in GF(q).
    pub fn is_defined_everywhere(&self) -> bool {
        let f = self.den.field();
        f.elements().into_iter().all(|x| !self.den.eval(x).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    fn p(f: &Field, c: &[u32]) -> Poly {
        Poly::from_reprs(f, c).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = gf(5);
        assert_eq!(p(&f, &[2, 0, 1]).eval(Fe(1)), Fe(3));
        assert_eq!(Poly::zero(&f).eval(Fe(3)), Fe(0));
        assert_eq!(p(&f, &[0, 0, 0, 1]).eval(Fe(4)), Fe(4));
    }

    #[test]
    fn divmod_examples() {
        let f = gf(5);
        let (q, r) = p(&f, &[4, 0, 1]).divmod(&p(&f, &[4, 1])).unwrap();
        assert_eq!((q, r), (p(&f, &[1, 1]), Poly::zero(&f)));
        let (q, r) = p(&f, &[0, 0, 0, 1]).divmod(&p(&f, &[2, 0, 1])).unwrap();
        assert_eq!((q, r), (p(&f, &[0, 1]), p(&f, &[0, 3])));
        let c = p(&f, &[3, 1]);
        let (q, r) = c.divmod(&p(&f, &[1, 0, 1])).unwrap();
        assert_eq!((q, r), (Poly::zero(&f), c.clone()));
        assert_eq!(c.divmod(&Poly::zero(&f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let f = gf(5);
        // x^2 + 2 has no root mod 5, so it is coprime to x^5 - x
        assert!(f.elements().iter().all(|&x| !p(&f, &[2, 0, 1]).eval(x).is_zero()));
        let g = p(&f, &[2, 0, 1]).gcd(&field_polynomial(&f)).unwrap();
        assert_eq!(g, Poly::one(&f));
        let g = p(&f, &[4, 0, 1]).gcd(&p(&f, &[4, 1])).unwrap();
        assert_eq!(g, p(&f, &[4, 1]));
        let h = p(&f, &[1, 2, 3]);
        assert_eq!(h.gcd(&Poly::zero(&f)).unwrap(), h.monic());
        assert_eq!(Poly::zero(&f).gcd(&Poly::zero(&f)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn mod_inverse_examples() {
        let f = gf(5);
        let m = p(&f, &[2, 0, 1]);
        // x * 2x = 2x^2 = 2(-2) = -4 = 1
        assert_eq!(Poly::x(&f).mod_inverse(&m).unwrap(), p(&f, &[0, 2]));
        assert_eq!(Poly::one(&f).mod_inverse(&m).unwrap(), Poly::one(&f));
        let c = Poly::constant(&f, Fe(3));
        let expected = Poly::constant(&f, f.pow(Fe(3), 3));
        assert_eq!(c.mod_inverse(&m).unwrap(), expected);
        let bad = p(&f, &[4, 1]);
        assert_eq!(bad.mod_inverse(&p(&f, &[4, 0, 1])), Err(Error::NotCoprime));
    }

    #[test]
    fn mod_inverse_all_residues_small_fields() {
        for q in [2, 3, 4, 5, 7] {
            let f = gf(q);
            for m in monic_irreducibles(&f, 2) {
                for idx in 1..(q * q) {
                    let a = Poly::new(&f, vec![Fe((idx % q) as u32), Fe((idx / q) as u32)]);
                    let inv = a.mod_inverse(&m).unwrap();
                    assert!(inv.degree().is_none_or(|d| d < 2));
                    assert_eq!(a.mul_mod(&inv, &m).unwrap(), Poly::one(&f));
                }
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        let f5 = gf(5);
        assert!(p(&f5, &[2, 0, 1]).is_irreducible().unwrap());
        assert!(!f5.is_square(p(&f5, &[2, 0, 1]).discriminant().unwrap()));
        assert!(!p(&f5, &[4, 0, 1]).is_irreducible().unwrap());
        let f2 = gf(2);
        assert!(p(&f2, &[1, 1, 0, 1]).is_irreducible().unwrap());
        assert_eq!(p(&f5, &[2, 0, 2]).is_irreducible(), Err(Error::NotMonic));
        assert_eq!(Poly::one(&f5).is_irreducible(), Err(Error::NotMonic));
    }

    #[test]
    fn quadratic_irreducibility_matches_discriminant() {
        for q in [3, 5, 7, 9] {
            let f = gf(q);
            for poly in Poly::monic_polys(&f, 2) {
                let disc = poly.discriminant().unwrap();
                assert_eq!(poly.is_irreducible().unwrap(), !f.is_square(disc));
            }
        }
    }

    fn moebius(n: u64) -> i64 {
        let mut n = n;
        let mut sign = 1;
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                n /= d;
                if n.is_multiple_of(d) {
                    return 0;
                }
                sign = -sign;
            }
            d += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        sign
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for d in 1..=4u64 {
                if q.pow(d as u32) > 10_000 {
                    continue;
                }
                let necklace: i64 = (1..=d)
                    .filter(|e| d % e == 0)
                    .map(|e| moebius(e) * (q as i64).pow((d / e) as u32))
                    .sum::<i64>()
                    / d as i64;
                assert_eq!(monic_irreducibles(&f, d as usize).len() as i64, necklace, "q={q} d={d}");
            }
        }
    }

    #[test]
    fn monic_irreducible_examples() {
        assert_eq!(monic_irreducibles(&gf(5), 2).len(), 10);
        let f2 = gf(2);
        assert_eq!(
            monic_irreducibles(&f2, 3),
            vec![p(&f2, &[1, 1, 0, 1]), p(&f2, &[1, 0, 1, 1])]
        );
        assert_eq!(monic_irreducibles(&gf(5), 3).len(), (125 - 5) / 3);
        let list = monic_irreducibles(&gf(7), 2);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn roots_examples() {
        let f = gf(5);
        assert_eq!(field_polynomial(&f).distinct_roots().unwrap().len(), 5);
        assert!(p(&f, &[2, 0, 1]).distinct_roots().unwrap().is_empty());
        let g = Poly::linear(&f, Fe(1))
            .mul(&Poly::linear(&f, Fe(1)))
            .mul(&Poly::linear(&f, Fe(2)));
        assert_eq!(g.distinct_roots().unwrap(), vec![Fe(1), Fe(2)]);
        assert!(!g.splits_distinct_linear().unwrap());
        assert_eq!(Poly::zero(&f).distinct_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn interpolate_examples() {
        let f = gf(5);
        let pts: Vec<(Fe, Fe)> = [(1, 1), (2, 4), (3, 4), (4, 1), (0, 0)]
            .iter()
            .map(|&(x, y)| (Fe(x), Fe(y)))
            .collect();
        assert_eq!(Poly::interpolate(&f, &pts).unwrap(), p(&f, &[0, 0, 1]));
        assert_eq!(
            Poly::interpolate(&f, &[(Fe(3), Fe(2))]).unwrap(),
            Poly::constant(&f, Fe(2))
        );
        let cube = p(&f, &[0, 0, 0, 1]);
        let pts: Vec<_> = f.elements().into_iter().map(|x| (x, cube.eval(x))).collect();
        assert_eq!(Poly::interpolate(&f, &pts).unwrap(), cube);
        assert_eq!(
            Poly::interpolate(&f, &[(Fe(1), Fe(1)), (Fe(1), Fe(2))]),
            Err(Error::DuplicateNode(1))
        );
    }

    #[test]
    fn rational_function_eval() {
        let f = gf(5);
        let r = RationalFunction::new(Poly::one(&f), p(&f, &[2, 0, 1])).unwrap();
        let vals: Vec<u32> = f.elements().into_iter().map(|x| r.eval(x).unwrap().0).collect();
        assert_eq!(vals, vec![2, 1, 1, 2, 3]);
        let bad = RationalFunction::new(Poly::one(&f), p(&f, &[4, 1])).unwrap();
        assert_eq!(bad.eval(Fe(1)), Err(Error::PoleInField(1)));
        assert!(!bad.is_defined_everywhere());
        let scaled = RationalFunction::new(Poly::one(&f), p(&f, &[4, 0, 2])).unwrap();
        assert!(scaled.den().is_monic());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly_strategy(q: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
            prop::collection::vec(0..q, 0..max_len)
        }

        proptest! {
            #[test]
            fn divmod_round_trip(a in poly_strategy(9, 9), b in poly_strategy(9, 5)) {
                let f = gf(9);
                let a = p(&f, &a);
                let b = p(&f, &b);
                prop_assume!(!b.is_zero());
                let (quot, rem) = a.divmod(&b).unwrap();
                prop_assert_eq!(quot.mul(&b).add(&rem), a);
                prop_assert!(rem.degree().is_none_or(|d| d < b.degree().unwrap()));
            }

            #[test]
            fn interpolate_inverts_eval(c in poly_strategy(7, 7)) {
                let f = gf(7);
                let poly = p(&f, &c);
                let pts: Vec<_> = f.elements().into_iter().take(6)
                    .map(|x| (x, poly.eval(x))).collect();
                prop_assert_eq!(Poly::interpolate(&f, &pts).unwrap(), poly);
            }
        }
    }
}
