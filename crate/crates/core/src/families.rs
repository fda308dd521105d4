//! Explicit deep-hole families and the relations between them.
//!
//! A family is a set of cosets of a fixed code, each coset identified by its
//! raw syndrome. Every constructor checks its members against an exact
//! coset-leader table of the code ([`DeepHoleContext`]), so a family is only
//! ever returned after each coset has been confirmed to reach the covering
//! radius.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{Bounds, Code, CodeKind, CosetLeaderTable, DistanceMethod, Syndrome, Word};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::{field_polynomial, monic_irreducibles, Poly, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    DegreeK,
    InverseMonomial,
    ZeroSumFree,
    Quadratic,
    Cubic,
}

/// Construction parameters, serialized with polynomials as coefficient lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum FamilyParams {
    DegreeK { k: usize },
    InverseMonomial { delta: Fe },
    ZeroSumFree { set: Vec<Fe>, r: usize, sum: Fe },
    Quadratic { p: Poly },
    Cubic { p: Poly },
}

impl FamilyParams {
    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilyParams::DegreeK { .. } => FamilyTag::DegreeK,
            FamilyParams::InverseMonomial { .. } => FamilyTag::InverseMonomial,
            FamilyParams::ZeroSumFree { .. } => FamilyTag::ZeroSumFree,
            FamilyParams::Quadratic { .. } => FamilyTag::Quadratic,
            FamilyParams::Cubic { .. } => FamilyTag::Cubic,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DeepHoleFamily {
    pub params: FamilyParams,
    pub cosets: BTreeSet<Syndrome>,
    /// One representative per generator, in generation order.
    pub words: Vec<Word>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub tag: FamilyTag,
    pub params: FamilyParams,
    pub coset_count: usize,
    pub projective_count: usize,
    pub sample_words: Vec<Word>,
}

impl DeepHoleFamily {
    fn from_words(code: &Code, params: FamilyParams, words: Vec<Word>) -> Result<DeepHoleFamily> {
        let cosets = words
            .iter()
            .map(|w| code.syndrome(w))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(DeepHoleFamily { params, cosets, words })
    }

    pub fn tag(&self) -> FamilyTag {
        self.params.tag()
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Cosets up to nonzero scaling.
    pub fn projective_classes(&self, field: &Field) -> BTreeSet<Syndrome> {
        self.cosets.iter().map(|s| s.projective(field)).collect()
    }

    pub fn summary(&self, field: &Field, samples: usize) -> FamilySummary {
        FamilySummary {
            tag: self.tag(),
            params: self.params.clone(),
            coset_count: self.len(),
            projective_count: self.projective_classes(field).len(),
            sample_words: self.words.iter().take(samples).cloned().collect(),
        }
    }
}

/// A code together with the coset-leader weight of every syndrome.
#[derive(Clone, Debug)]
pub struct DeepHoleContext {
    code: Code,
    table: CosetLeaderTable,
    rho: usize,
}

impl DeepHoleContext {
    pub fn new(code: Code, bounds: &Bounds) -> Result<DeepHoleContext> {
        let table = CosetLeaderTable::build(&code, bounds)?;
        let rho = table.covering_radius();
        Ok(DeepHoleContext { code, table, rho })
    }

    pub fn projective(field: &Field, k: usize, bounds: &Bounds) -> Result<DeepHoleContext> {
        DeepHoleContext::new(Code::projective(field, k)?, bounds)
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    pub fn table(&self) -> &CosetLeaderTable {
        &self.table
    }

    pub fn covering_radius(&self) -> usize {
        self.rho
    }

    /// Fails unless the covering radius equals `expected`.
    pub fn require_radius(&self, expected: usize) -> Result<()> {
        if self.rho != expected {
            return Err(Error::HypothesisFailed(format!(
                "covering radius of the {} code with n={}, k={} over GF({}) is {}, not {}",
                kind_name(self.code.kind()),
                self.code.n(),
                self.code.k(),
                self.field().label(),
                self.rho,
                expected
            )));
        }
        Ok(())
    }

    /// `q - k` for projective codes, `n - k` for affine codes.
    pub fn expected_radius(&self) -> usize {
        match self.code.kind() {
            CodeKind::Projective => self.field().q() as usize - self.code.k(),
            CodeKind::Affine => self.code.n() - self.code.k(),
        }
    }

    pub fn syndrome_weight(&self, s: &Syndrome) -> usize {
        self.table.weight(s) as usize
    }

    pub fn distance(&self, w: &Word) -> Result<usize> {
        Ok(self.syndrome_weight(&self.code.syndrome(w)?))
    }

    pub fn is_deep_syndrome(&self, s: &Syndrome) -> bool {
        self.syndrome_weight(s) == self.rho
    }

    pub fn is_deep_hole(&self, w: &Word) -> Result<bool> {
        Ok(self.distance(w)? == self.rho)
    }

    /// All deep syndromes in index order.
    pub fn deep_syndromes(&self) -> BTreeSet<Syndrome> {
        self.table.syndromes_of_weight(self.rho as u8).collect()
    }

    /// Fails on the first coset of `family` below the covering radius.
    pub fn verify(&self, family: &DeepHoleFamily) -> Result<()> {
        match family.cosets.iter().find(|s| !self.is_deep_syndrome(s)) {
            None => Ok(()),
            Some(s) => Err(Error::HypothesisFailed(format!(
                "{:?} family has a coset with syndrome {:?} at distance {} < {}",
                family.tag(),
                s.reprs(),
                self.syndrome_weight(s),
                self.rho
            ))),
        }
    }

    fn require_projective(&self) -> Result<()> {
        if self.code.kind() != CodeKind::Projective {
            return Err(Error::WrongCodeKind("projective"));
        }
        Ok(())
    }

    fn require_affine(&self) -> Result<()> {
        if self.code.kind() != CodeKind::Affine {
            return Err(Error::WrongCodeKind("affine"));
        }
        Ok(())
    }
}

fn kind_name(kind: CodeKind) -> &'static str {
    match kind {
        CodeKind::Affine => "affine",
        CodeKind::Projective => "projective",
    }
}

fn require_irreducible(p: &Poly, degree: usize) -> Result<()> {
    if p.degree() != Some(degree) || !p.is_monic() {
        return Err(Error::InvalidSet(format!("expected a monic polynomial of degree {degree}")));
    }
    if !p.is_irreducible()? {
        return Err(Error::Reducible);
    }
    Ok(())
}

/// Words of polynomials of degree exactly `k`.
///
/// Projective codes: `(u_{e x^k + w x^{k-1}}, v)` over all `e != 0` and all
/// `w, v`, giving `q(q-1)` cosets. Affine codes: `u_{e x^k + w x^{k-1}}`,
/// giving `q - 1` cosets. Representatives kept are those with `w = 0`.
pub fn degree_k_family(ctx: &DeepHoleContext) -> Result<DeepHoleFamily> {
    ctx.require_radius(ctx.expected_radius())?;
    let code = ctx.code();
    let f = code.field();
    let k = code.k();
    let lasts: Vec<Fe> = match code.kind() {
        CodeKind::Projective => f.elements(),
        CodeKind::Affine => vec![Fe::ZERO],
    };
    let mut cosets = BTreeSet::new();
    let mut words = Vec::new();
    for e in f.nonzero_elements() {
        for w in f.elements() {
            let poly = Poly::monomial(f, e, k).add(&Poly::monomial(f, w, k - 1));
            for &v in &lasts {
                let word = code.word_from_poly(&poly, v)?;
                cosets.insert(code.syndrome(&word)?);
                if w.is_zero() {
                    words.push(word);
                }
            }
        }
    }
    let family = DeepHoleFamily {
        params: FamilyParams::DegreeK { k },
        cosets,
        words,
    };
    ctx.verify(&family)?;
    Ok(family)
}

/// Words `a (x - delta)^{q-2}` on the evaluation set of an affine code, `a != 0`.
pub fn inverse_monomial_family(ctx: &DeepHoleContext, delta: Fe) -> Result<DeepHoleFamily> {
    ctx.require_affine()?;
    let code = ctx.code();
    let f = code.field();
    if code.points().contains(&delta) {
        return Err(Error::PointInEvaluationSet(delta.0));
    }
    ctx.require_radius(ctx.expected_radius())?;
    let base = Poly::linear(f, delta);
    let mut power = Poly::one(f);
    for _ in 0..f.q() - 2 {
        power = power.mul(&base);
    }
    let words = f
        .nonzero_elements()
        .map(|a| code.word_from_poly(&power.scale(a), Fe::ZERO))
        .collect::<Result<Vec<_>>>()?;
    let family = DeepHoleFamily::from_words(code, FamilyParams::InverseMonomial { delta }, words)?;
    ctx.verify(&family)?;
    Ok(family)
}

/// The word of `x^{k+1} - (sum of D) x^k` for the affine code on an
/// `r`-zero-sum-free set `D` with `k = |D| - r - 1`.
pub fn zero_sum_free_family(field: &Field, set: &[Fe], r: usize, bounds: &Bounds) -> Result<(DeepHoleContext, DeepHoleFamily)> {
    if !crate::numtheory::is_zero_sum_free(field, set, r)? {
        return Err(Error::NotZeroSumFree { r });
    }
    if set.len() < r + 2 {
        return Err(Error::InvalidSet(format!("need |D| >= r + 2, got |D|={}, r={r}", set.len())));
    }
    let k = set.len() - r - 1;
    let ctx = DeepHoleContext::new(Code::affine(field, set.to_vec(), k)?, bounds)?;
    ctx.require_radius(ctx.expected_radius())?;
    let sum = field.sum(set.iter().copied());
    let poly = Poly::monomial(field, Fe::ONE, k + 1).sub(&Poly::monomial(field, sum, k));
    let word = ctx.code().word_from_poly(&poly, Fe::ZERO)?;
    let family = DeepHoleFamily::from_words(
        ctx.code(),
        FamilyParams::ZeroSumFree {
            set: set.to_vec(),
            r,
            sum,
        },
        vec![word],
    )?;
    ctx.verify(&family)?;
    Ok((ctx, family))
}

/// Cosets reachable from the degree-`k` and inverse-monomial families of the
/// same affine code, over every `delta` outside the evaluation set.
pub fn known_affine_cosets(ctx: &DeepHoleContext) -> Result<BTreeSet<Syndrome>> {
    let f = ctx.field();
    let mut out = degree_k_family(ctx)?.cosets;
    for delta in f.elements() {
        if !ctx.code().points().contains(&delta) {
            out.extend(inverse_monomial_family(ctx, delta)?.cosets);
        }
    }
    Ok(out)
}

/// Rational word of `num / p` with final coordinate zero.
fn rational_word(code: &Code, num: &Poly, p: &Poly) -> Result<Word> {
    code.word_from_rational(&RationalFunction::new(num.clone(), p.clone())?, Fe::ZERO)
}

/// `DH(p)`: words of `(a + b x) / p(x)` for `(a, b) != (0, 0)`.
pub fn quadratic_family(ctx: &DeepHoleContext, p: &Poly) -> Result<DeepHoleFamily> {
    ctx.require_projective()?;
    require_irreducible(p, 2)?;
    ctx.require_radius(ctx.expected_radius())?;
    let family = quadratic_family_unchecked(ctx.code(), p)?;
    ctx.verify(&family)?;
    Ok(family)
}

fn quadratic_family_unchecked(code: &Code, p: &Poly) -> Result<DeepHoleFamily> {
    let f = code.field();
    let words = f
        .elements()
        .into_iter()
        .cartesian_product(f.elements())
        .filter(|&(a, b)| !(a.is_zero() && b.is_zero()))
        .map(|(a, b)| rational_word(code, &Poly::new(f, vec![a, b]), p))
        .collect::<Result<Vec<_>>>()?;
    DeepHoleFamily::from_words(code, FamilyParams::Quadratic { p: p.clone() }, words)
}

/// Every `DH(p)` over all monic irreducible quadratics, in polynomial order.
pub fn all_quadratic_families(ctx: &DeepHoleContext) -> Result<Vec<DeepHoleFamily>> {
    monic_irreducibles(ctx.field(), 2)
        .iter()
        .map(|p| quadratic_family(ctx, p))
        .collect()
}

fn nonzero_quadratic_numerators(f: &Field) -> Vec<Poly> {
    (1..(f.q() as u64).pow(3))
        .map(|idx| Poly::new(f, Syndrome::from_index(f.q(), 3, idx).0))
        .collect()
}

/// Deep cosets among the words of `(a + b x + c x^2) / p(x)` on `PRS(q+1, q-3)`.
pub fn cubic_family(ctx: &DeepHoleContext, p: &Poly) -> Result<DeepHoleFamily> {
    Ok(cubic_split(ctx, p)?.0)
}

/// Numerators of the cubic construction whose word falls short of the
/// covering radius.
pub fn cubic_shallow_numerators(ctx: &DeepHoleContext, p: &Poly) -> Result<BTreeSet<Poly>> {
    Ok(cubic_split(ctx, p)?.1)
}

fn cubic_split(ctx: &DeepHoleContext, p: &Poly) -> Result<(DeepHoleFamily, BTreeSet<Poly>)> {
    ctx.require_projective()?;
    let code = ctx.code();
    let f = code.field();
    let q = f.q() as usize;
    if q < 4 || code.k() + 3 != q {
        return Err(Error::Unsupported(format!("cubic construction needs k = q - 3, got k={}", code.k())));
    }
    require_irreducible(p, 3)?;
    ctx.require_radius(3)?;
    let mut cosets = BTreeSet::new();
    let mut words = Vec::new();
    let mut shallow = BTreeSet::new();
    for num in nonzero_quadratic_numerators(f) {
        let word = rational_word(code, &num, p)?;
        let s = code.syndrome(&word)?;
        match ctx.syndrome_weight(&s) {
            3 => {
                cosets.insert(s);
                words.push(word);
            }
            // the supercode argument bounds every such word below by q - k - 1
            2 => {
                shallow.insert(num);
            }
            w => {
                return Err(Error::HypothesisFailed(format!(
                    "cubic word for numerator {num} has distance {w}, outside [2, 3]"
                )))
            }
        }
    }
    Ok((
        DeepHoleFamily {
            params: FamilyParams::Cubic { p: p.clone() },
            cosets,
            words,
        },
        shallow,
    ))
}

/// Numerators congruent to `d * prod_{s in S} (x - s)` modulo `p` for
/// `|S| in {q-2, q-1}` and `d != 0`. These are the numerators whose words
/// sit one below the covering radius.
pub fn cubic_splitting_numerators(field: &Field, p: &Poly) -> Result<BTreeSet<Poly>> {
    let q = field.q() as usize;
    let mut out = BTreeSet::new();
    for size in [q - 2, q - 1] {
        for subset in field.elements().into_iter().combinations(size) {
            let prod = subset
                .iter()
                .fold(Poly::one(field), |acc, &s| acc.mul(&Poly::linear(field, s)));
            let residue = prod.rem(p)?;
            for d in field.nonzero_elements() {
                out.insert(residue.scale(d));
            }
        }
    }
    Ok(out)
}

/// The cubic construction for every monic irreducible cubic, in polynomial order.
pub fn all_cubic_families(ctx: &DeepHoleContext) -> Result<Vec<DeepHoleFamily>> {
    let cubics = monic_irreducibles(ctx.field(), 3);
    cubics.par_iter().map(|p| cubic_family(ctx, p)).collect()
}

/// Union of the coset sets of `families`.
pub fn union_of(families: &[DeepHoleFamily]) -> BTreeSet<Syndrome> {
    families.iter().flat_map(|f| f.cosets.iter().cloned()).collect()
}

/// Exact deep-hole test: covering radius from the coset-leader table, word
/// distance by codeword enumeration when `q^k` is within bounds and by the
/// span search otherwise.
pub fn is_deep_hole(code: &Code, w: &Word, bounds: &Bounds) -> Result<bool> {
    let rho = code.covering_radius(bounds)?;
    let method = if (code.field().q() as u64).checked_pow(code.k() as u32).is_some_and(|c| c <= bounds.max_codewords) {
        DistanceMethod::Exhaustive
    } else {
        DistanceMethod::SyndromeSpan
    };
    Ok(code.error_distance(w, method, bounds)? == rho)
}

pub fn same_coset(code: &Code, w1: &Word, w2: &Word) -> Result<bool> {
    Ok(code.syndrome(w1)? == code.syndrome(w2)?)
}

/// Cosets shared by `DH(p1)` and `DH(p2)` on `PRS(q+1, q-2)`, built from
/// the congruence `a1 + b1 x = a (x^q - x) / p2 (mod p1)` for `a != 0`.
pub fn dh_intersection(ctx: &DeepHoleContext, p1: &Poly, p2: &Poly) -> Result<BTreeSet<Syndrome>> {
    ctx.require_projective()?;
    let code = ctx.code();
    let f = code.field();
    if f.is_even() || code.k() + 2 != f.q() as usize {
        return Err(Error::Unsupported("intersection congruence needs odd q and k = q - 2".into()));
    }
    if p1 == p2 {
        return Err(Error::InvalidSet("the two quadratics coincide".into()));
    }
    require_irreducible(p1, 2)?;
    require_irreducible(p2, 2)?;
    let base = field_polynomial(f).rem(p1)?.mul_mod(&p2.mod_inverse(p1)?, p1)?;
    f.nonzero_elements()
        .map(|a| code.syndrome(&rational_word(code, &base.scale(a), p1)?))
        .collect()
}

/// Containment of one coset set in another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub left: usize,
    pub right: usize,
    pub shared: usize,
}

impl Overlap {
    pub fn of(left: &BTreeSet<Syndrome>, right: &BTreeSet<Syndrome>) -> Overlap {
        Overlap {
            left: left.len(),
            right: right.len(),
            shared: left.intersection(right).count(),
        }
    }

    pub fn disjoint(&self) -> bool {
        self.shared == 0
    }

    pub fn left_contained(&self) -> bool {
        self.shared == self.left
    }
}

/// Degree-`k` family against the union of all quadratic families.
pub fn degree_k_vs_quadratic(ctx: &DeepHoleContext) -> Result<Overlap> {
    let deg = degree_k_family(ctx)?.cosets;
    let quad = union_of(&all_quadratic_families(ctx)?);
    Ok(Overlap::of(&deg, &quad))
}

/// Largest pairwise intersection among distinct quadratic families.
pub fn max_quadratic_pair_overlap(families: &[DeepHoleFamily]) -> usize {
    families
        .iter()
        .tuple_combinations()
        .map(|(a, b)| a.cosets.intersection(&b.cosets).count())
        .max()
        .unwrap_or(0)
}

/// Result of checking that deep holes of `RS(q, k)` are not deep holes of
/// `RS(q, k-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentReport {
    pub q: u32,
    pub k: usize,
    pub deep_cosets: usize,
    /// Largest distance to `RS(q, k-1)` over every word in every deep coset.
    pub max_distance_below: usize,
    pub radius_below: usize,
}

impl DescentReport {
    pub fn holds(&self) -> bool {
        self.max_distance_below + self.k <= self.q as usize && self.max_distance_below < self.radius_below
    }
}

/// Each coset of `RS(q, k)` splits into `q` cosets of `RS(q, k-1)`; with the
/// parity-check of the larger code a row prefix of the smaller one's, their
/// syndromes are the one-coordinate extensions of the larger syndrome.
pub fn deep_holes_descend(field: &Field, k: usize, bounds: &Bounds) -> Result<DescentReport> {
    if k < 2 {
        return Err(Error::InvalidCode("need k >= 2".into()));
    }
    let upper = DeepHoleContext::new(Code::full_affine(field, k)?, bounds)?;
    let lower = DeepHoleContext::new(Code::full_affine(field, k - 1)?, bounds)?;
    let hu = upper.code().parity_check_matrix();
    let hl = lower.code().parity_check_matrix();
    debug_assert!((0..hu.rows()).all(|i| hu.row(i) == hl.row(i)));
    let mut max_below = 0;
    let deep = upper.deep_syndromes();
    for s in &deep {
        for t in field.elements() {
            let mut ext = s.0.clone();
            ext.push(t);
            max_below = max_below.max(lower.syndrome_weight(&Syndrome(ext)));
        }
    }
    Ok(DescentReport {
        q: field.q(),
        k,
        deep_cosets: deep.len(),
        max_distance_below: max_below,
        radius_below: lower.covering_radius(),
    })
}

/// Degree-`k` cosets reached by the cubic construction for a fixed `p`,
/// next to the cosets `(u_{e x^k - e c x^{k-1}}, 0)` for `e != 0`, where `c`
/// is the `x^2` coefficient of `p`, and the cosets of the numerators
/// `-e (x^q - x) mod p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicDegreeKOverlap {
    pub observed: BTreeSet<Syndrome>,
    pub predicted: BTreeSet<Syndrome>,
    pub from_numerators: BTreeSet<Syndrome>,
}

pub fn cubic_degree_k_overlap(ctx: &DeepHoleContext, p: &Poly) -> Result<CubicDegreeKOverlap> {
    let code = ctx.code();
    let f = code.field();
    let k = code.k();
    let cubic = cubic_family(ctx, p)?.cosets;
    let degree = degree_k_family(ctx)?.cosets;
    let c = p.coeff(2);
    let reduced = field_polynomial(f).rem(p)?;
    let mut predicted = BTreeSet::new();
    let mut from_numerators = BTreeSet::new();
    for e in f.nonzero_elements() {
        let poly = Poly::monomial(f, e, k).sub(&Poly::monomial(f, f.mul(e, c), k - 1));
        predicted.insert(code.syndrome(&code.word_from_poly(&poly, Fe::ZERO)?)?);
        let num = reduced.scale(f.neg(e));
        from_numerators.insert(code.syndrome(&rational_word(code, &num, p)?)?);
    }
    Ok(CubicDegreeKOverlap {
        observed: cubic.intersection(&degree).cloned().collect(),
        predicted,
        from_numerators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DistanceMethod;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    fn p(f: &Field, c: &[u32]) -> Poly {
        Poly::from_reprs(f, c).unwrap()
    }

    fn w(v: &[u32]) -> Word {
        Word(v.iter().map(|&c| Fe(c)).collect())
    }

    fn fe(v: &[u32]) -> Vec<Fe> {
        v.iter().map(|&c| Fe(c)).collect()
    }

    fn ctx(q: u64, k: usize) -> DeepHoleContext {
        DeepHoleContext::projective(&gf(q), k, &Bounds::default()).unwrap()
    }

    #[test]
    fn degree_k_examples() {
        let c = ctx(5, 3);
        let fam = degree_k_family(&c).unwrap();
        assert_eq!(fam.len(), 20);
        let f = c.field();
        let word = c.code().word_from_poly(&Poly::monomial(f, Fe::ONE, 3), Fe(0)).unwrap();
        assert_eq!(word, w(&[1, 3, 2, 4, 0, 0]));
        let exh = c.code().error_distance(&word, DistanceMethod::Exhaustive, &Bounds::default()).unwrap();
        assert_eq!(exh, 2);
        for member in &fam.words {
            for s in f.nonzero_elements() {
                assert!(fam.cosets.contains(&c.code().syndrome(&member.scale(f, s)).unwrap()));
            }
        }
    }

    #[test]
    fn degree_k_hypothesis_is_checked() {
        // even q with k = q - 2 has radius q - k + 1
        let c = ctx(4, 2);
        assert_eq!(c.covering_radius(), 3);
        assert!(matches!(degree_k_family(&c), Err(Error::HypothesisFailed(_))));
    }

    #[test]
    fn inverse_monomial_examples() {
        let f = gf(5);
        let code = Code::affine(&f, fe(&[1, 2, 3, 4]), 2).unwrap();
        let c = DeepHoleContext::new(code, &Bounds::default()).unwrap();
        let fam = inverse_monomial_family(&c, Fe(0)).unwrap();
        assert_eq!(fam.words[0], w(&[1, 3, 2, 4]));
        assert_eq!(fam.len(), 4);
        let exh = c.code().error_distance(&fam.words[0], DistanceMethod::Exhaustive, &Bounds::default()).unwrap();
        assert_eq!(exh, 2);
        assert_eq!(inverse_monomial_family(&c, Fe(2)).unwrap_err(), Error::PointInEvaluationSet(2));
    }

    #[test]
    fn zero_sum_free_examples() {
        let f = gf(13);
        let set = fe(&[0, 1, 2, 3, 4]);
        let (c, fam) = zero_sum_free_family(&f, &set, 2, &Bounds::default()).unwrap();
        assert_eq!(c.code().k(), 2);
        let word = &fam.words[0];
        let direct = c
            .code()
            .word_from_poly(&p(&f, &[0, 0, 3, 1]), Fe(0))
            .unwrap();
        assert_eq!(word, &direct);
        let exh = c.code().error_distance(word, DistanceMethod::Exhaustive, &Bounds::default()).unwrap();
        assert_eq!(exh, 3);
        let known = known_affine_cosets(&c).unwrap();
        assert!(fam.cosets.is_disjoint(&known));
        let projective: BTreeSet<_> = known.iter().map(|s| s.projective(&f)).collect();
        assert!(!projective.contains(&fam.cosets.iter().next().unwrap().projective(&f)));

        let f7 = gf(7);
        assert!(matches!(
            zero_sum_free_family(&f7, &fe(&[0, 1, 2, 3, 4]), 2, &Bounds::default()),
            Err(Error::NotZeroSumFree { r: 2 })
        ));
    }

    #[test]
    fn quadratic_examples() {
        let c = ctx(5, 3);
        let f = c.field();
        let fam = quadratic_family(&c, &p(f, &[2, 0, 1])).unwrap();
        assert_eq!(fam.words.len(), 24);
        assert_eq!(fam.len(), 24);
        assert_eq!(fam.projective_classes(f).len(), 6);
        // (a, b) = (1, 0) is generated first after (0, b) pairs; look it up directly
        let hole = w(&[2, 1, 1, 2, 3, 0]);
        assert!(fam.cosets.contains(&c.code().syndrome(&hole).unwrap()));
        assert!(matches!(quadratic_family(&c, &p(f, &[4, 0, 1])), Err(Error::Reducible)));
    }

    #[test]
    fn quadratic_families_disjoint_below_q_minus_2() {
        for (q, k) in [(5, 2), (7, 4), (7, 3)] {
            let c = ctx(q, k);
            let fams = all_quadratic_families(&c).unwrap();
            assert_eq!(max_quadratic_pair_overlap(&fams), 0, "q={q} k={k}");
            let f = c.field();
            let a = &fams[0].words[0];
            let b = &fams[1].words[0];
            assert!(!same_coset(c.code(), a, b).unwrap());
            let _ = f;
        }
    }

    #[test]
    fn same_coset_examples() {
        let c = ctx(5, 3);
        let f = c.field();
        let hole = w(&[2, 1, 1, 2, 3, 0]);
        let shifted = hole.add(f, &c.code().encode(&p(f, &[1, 4, 2])).unwrap());
        assert!(same_coset(c.code(), &hole, &shifted).unwrap());
        let scaled = hole.scale(f, Fe(2));
        assert!(!same_coset(c.code(), &hole, &scaled).unwrap());
        let s1 = c.code().syndrome(&hole).unwrap().projective(f);
        let s2 = c.code().syndrome(&scaled).unwrap().projective(f);
        assert_eq!(s1, s2);
    }

    #[test]
    fn is_deep_hole_examples() {
        let b = Bounds::default();
        let f = gf(5);
        let prs = Code::projective(&f, 3).unwrap();
        assert!(is_deep_hole(&prs, &w(&[2, 1, 1, 2, 3, 0]), &b).unwrap());
        assert!(!is_deep_hole(&prs, &prs.encode(&p(&f, &[1, 2, 3])).unwrap(), &b).unwrap());
        let rs = Code::full_affine(&f, 2).unwrap();
        let u = rs.word_from_poly(&p(&f, &[0, 0, 0, 0, 1]), Fe(0)).unwrap();
        assert!(rs.error_distance(&u, DistanceMethod::Exhaustive, &b).unwrap() < 3);
        assert!(!is_deep_hole(&rs, &u, &b).unwrap());
    }

    #[test]
    fn intersections_at_q5() {
        let c = ctx(5, 3);
        let f = c.field();
        let quads = monic_irreducibles(f, 2);
        assert_eq!(quads.len(), 10);
        let fams = all_quadratic_families(&c).unwrap();
        let mut pairs = 0;
        for i in 0..quads.len() {
            for j in 0..quads.len() {
                if i == j {
                    continue;
                }
                let built = dh_intersection(&c, &quads[i], &quads[j]).unwrap();
                let brute: BTreeSet<_> = fams[i].cosets.intersection(&fams[j].cosets).cloned().collect();
                assert_eq!(built.len(), 4);
                assert_eq!(built, brute);
                pairs += (i < j) as usize;
            }
        }
        assert_eq!(pairs, 45);
        assert!(dh_intersection(&c, &quads[0], &quads[0]).is_err());
    }

    #[test]
    fn degree_k_relation_to_quadratic_families() {
        for q in [5, 7] {
            let contained = degree_k_vs_quadratic(&ctx(q, q as usize - 2)).unwrap();
            assert!(contained.left_contained(), "q={q}");
            let disjoint = degree_k_vs_quadratic(&ctx(q, q as usize - 3)).unwrap();
            assert!(disjoint.disjoint(), "q={q}");
        }
    }

    #[test]
    fn cubic_counts_and_splitting_cross_check() {
        for q in [5u64, 7] {
            let c = ctx(q, q as usize - 3);
            let f = c.field();
            let expect = (q - 1) * (q * q + q + 2) / 2;
            for cubic in monic_irreducibles(f, 3).iter().take(3) {
                let (fam, shallow) = cubic_split(&c, cubic).unwrap();
                assert_eq!(fam.len() as u64, expect);
                let split = cubic_splitting_numerators(f, cubic).unwrap();
                assert_eq!(split.len() as u64, (q - 1) * (q * (q - 1) / 2 + q));
                assert_eq!(shallow, split);
            }
        }
        let c = ctx(5, 3);
        assert!(matches!(cubic_family(&c, &p(c.field(), &[1, 1, 0, 1])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn descent_on_small_fields() {
        let b = Bounds::default();
        for (q, k) in [(5, 2), (5, 3), (7, 3), (7, 5), (8, 4)] {
            let report = deep_holes_descend(&gf(q), k, &b).unwrap();
            assert!(report.holds(), "{report:?}");
            assert_eq!(report.radius_below, q as usize - k + 1);
        }
    }
}
