//! Subset sums over GF(q) and the distribution of irreducible cubics
//! modulo an irreducible quadratic.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::{monic_irreducibles, Poly};

fn validate_set(field: &Field, set: &[Fe]) -> Result<()> {
    if let Some(&bad) = set.iter().find(|&&x| !field.contains(x)) {
        return Err(Error::ElementOutOfRange(bad.0));
    }
    let mut sorted = set.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSet("elements are not distinct".into()));
    }
    Ok(())
}

/// `N(k, g, D)` for every `g`, indexed by the repr of `g`.
///
/// Dynamic programme over (elements seen, subset size, partial sum).
pub fn subset_sum_counts(field: &Field, set: &[Fe], k: usize) -> Result<Vec<u64>> {
    validate_set(field, set)?;
    if k > set.len() {
        return Err(Error::InvalidSet(format!("subset size {k} exceeds |D| = {}", set.len())));
    }
    let q = field.q() as usize;
    // dp[c][s]: subsets of size c with sum repr s among elements seen so far
    let mut dp = vec![vec![0u64; q]; k + 1];
    dp[0][0] = 1;
    for (seen, &x) in set.iter().enumerate() {
        for c in (1..=k.min(seen + 1)).rev() {
            let (lo, hi) = dp.split_at_mut(c);
            let prev = &lo[c - 1];
            let cur = &mut hi[0];
            for s in 0..q {
                if prev[s] != 0 {
                    cur[field.add(Fe(s as u32), x).0 as usize] += prev[s];
                }
            }
        }
    }
    Ok(dp.swap_remove(k))
}

/// `N(k, g, D)`: number of `k`-subsets of `D` summing to `g`.
pub fn subset_sum_count(field: &Field, set: &[Fe], k: usize, g: Fe) -> Result<u64> {
    if !field.contains(g) {
        return Err(Error::ElementOutOfRange(g.0));
    }
    Ok(subset_sum_counts(field, set, k)?[g.0 as usize])
}

/// No `r`-subset of `D` sums to zero.
pub fn is_zero_sum_free(field: &Field, set: &[Fe], r: usize) -> Result<bool> {
    if r < 2 {
        return Err(Error::InvalidSet(format!("need r >= 2, got {r}")));
    }
    Ok(subset_sum_count(field, set, r, Fe::ZERO)? == 0)
}

/// Whether `x^{k+1} - a x^k + (lower terms)` fails to be a deep hole of
/// `RS(D, k)`, decided as `N(k+1, a, D) > 0`.
pub fn degree_k1_nondeephole(field: &Field, set: &[Fe], k: usize, a: Fe) -> Result<bool> {
    Ok(subset_sum_count(field, set, k + 1, a)? > 0)
}

/// `{0, 1, ..., floor(p/r) + r - 1}` as reprs, capped at `p - 1`.
pub fn consecutive_candidate(p: u32, r: u32) -> Vec<Fe> {
    let top = (p / r + r - 1).min(p - 1);
    (0..=top).map(Fe).collect()
}

/// A residue class `alpha` of `(GF(q)[x] / (qpoly))^*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicDistInstance {
    pub qpoly: Poly,
    pub alpha: Poly,
}

impl CubicDistInstance {
    pub fn new(qpoly: Poly, alpha: Poly) -> Result<CubicDistInstance> {
        if qpoly.degree() != Some(2) || !qpoly.is_monic() {
            return Err(Error::NotMonic);
        }
        if !qpoly.is_irreducible()? {
            return Err(Error::Reducible);
        }
        let alpha = alpha.rem(&qpoly)?;
        if alpha.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(CubicDistInstance { qpoly, alpha })
    }

    pub fn field(&self) -> &Field {
        self.qpoly.field()
    }
}

/// Pairs `(p, l)` with `p` a monic irreducible cubic, `l != 0` and
/// `p = l * alpha (mod qpoly)`, counted by enumeration.
pub fn n3_bruteforce(inst: &CubicDistInstance) -> Result<u64> {
    Ok(n3_bruteforce_among(inst, &monic_irreducibles(inst.field(), 3)))
}

/// As [`n3_bruteforce`], over a precomputed list of monic irreducible cubics.
pub fn n3_bruteforce_among(inst: &CubicDistInstance, cubics: &[Poly]) -> u64 {
    let f = inst.field();
    let mut count = 0;
    for p in cubics {
        let r = p.rem(&inst.qpoly).expect("qpoly is nonzero");
        count += f.nonzero_elements().filter(|&l| inst.alpha.scale(l) == r).count() as u64;
    }
    count
}

/// `GF(q^2)` with an explicit copy of `GF(q)` and a root of a fixed
/// irreducible quadratic, so that `GF(q)[x] / (qpoly)` maps isomorphically
/// via `x -> theta`.
#[derive(Clone, Debug)]
pub struct QuadraticExtension {
    small: Field,
    big: Field,
    zeta: Fe,
    theta: Fe,
}

impl QuadraticExtension {
    /// Uses the smallest-repr root of each polynomial involved.
    pub fn new(qpoly: &Poly) -> Result<QuadraticExtension> {
        Self::with_root_choice(qpoly, 0)
    }

    /// `choice` selects which root of `qpoly` (0 or 1, by repr) plays `x`.
    pub fn with_root_choice(qpoly: &Poly, choice: usize) -> Result<QuadraticExtension> {
        let small = qpoly.field().clone();
        let big = Field::new(small.p(), 2 * small.m())?;
        let modulus: Vec<Fe> = small.modulus().iter().map(|&c| Fe(c)).collect();
        let zeta = if small.m() == 1 {
            Fe::ZERO
        } else {
            big.elements()
                .into_iter()
                .find(|&z| Poly::new(&big, modulus.clone()).eval(z).is_zero())
                .ok_or_else(|| Error::Unsupported("modulus has no root in the extension".into()))?
        };
        let mut ext = QuadraticExtension {
            small,
            big: big.clone(),
            zeta,
            theta: Fe::ZERO,
        };
        let lifted = Poly::new(&big, qpoly.coeffs().iter().map(|&c| ext.embed(c)).collect());
        let mut roots: Vec<Fe> = big.elements().into_iter().filter(|&t| lifted.eval(t).is_zero()).collect();
        roots.sort();
        ext.theta = *roots
            .get(choice)
            .ok_or_else(|| Error::Unsupported("quadratic has no root in the extension".into()))?;
        Ok(ext)
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn theta(&self) -> Fe {
        self.theta
    }

    /// Image of an element of `GF(q)`.
    pub fn embed(&self, c: Fe) -> Fe {
        if self.small.m() == 1 {
            return c;
        }
        let p = self.small.p();
        let mut digits = c.0;
        let mut acc = Fe::ZERO;
        let mut power = Fe::ONE;
        while digits > 0 {
            acc = self.big.add(acc, self.big.mul(Fe(digits % p), power));
            power = self.big.mul(power, self.zeta);
            digits /= p;
        }
        acc
    }

    /// Image of the residue class of `a` modulo `qpoly`.
    pub fn residue(&self, a: &Poly) -> Fe {
        a.coeffs()
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| self.big.add(self.big.mul(acc, self.theta), self.embed(c)))
    }

    /// Whether the order-3 character trivial on `GF(q)^*` is trivial at `a`,
    /// judged with discrete logarithms to base `g`. `None` unless `3 | q + 1`.
    pub fn chi3_trivial_with(&self, a: Fe, g: Fe) -> Result<Option<bool>> {
        if !(self.small.q() + 1).is_multiple_of(3) {
            return Ok(None);
        }
        Ok(Some(self.big.discrete_log(a, g)? % 3 == 0))
    }

    pub fn chi3_trivial(&self, a: Fe) -> Result<Option<bool>> {
        self.chi3_trivial_with(a, self.big.generator())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct N3Formula {
    pub n3: u64,
    pub r3: i64,
    /// `None` when `q` is not 2 mod 3 and the character plays no role.
    pub chi3_trivial: Option<bool>,
}

/// `N3(alpha) = (q(q-1) - r3(alpha)) / 3`, with `r3 = 0` unless
/// `q = 2 (mod 3)`, in which case `r3 = 2` on the kernel of the cubic
/// character and `-1` off it.
pub fn n3_formula(inst: &CubicDistInstance) -> Result<N3Formula> {
    let ext = QuadraticExtension::new(&inst.qpoly)?;
    n3_formula_in(&ext, inst)
}

pub fn n3_formula_in(ext: &QuadraticExtension, inst: &CubicDistInstance) -> Result<N3Formula> {
    let q = inst.field().q() as i64;
    let chi = ext.chi3_trivial(ext.residue(&inst.alpha))?;
    let r3 = match chi {
        None => 0,
        Some(true) => 2,
        Some(false) => -1,
    };
    let num = q * (q - 1) - r3;
    debug_assert_eq!(num % 3, 0);
    Ok(N3Formula {
        n3: (num / 3) as u64,
        r3,
        chi3_trivial: chi,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct N3Row {
    pub qpoly: Poly,
    pub alpha: Poly,
    pub bruteforce: u64,
    pub formula: u64,
    pub r3: i64,
}

/// Both counts for every irreducible quadratic and every nonzero residue.
pub fn n3_sweep(field: &Field) -> Result<Vec<N3Row>> {
    let cubics = monic_irreducibles(field, 3);
    let quads = monic_irreducibles(field, 2);
    let per_quad: Vec<Vec<N3Row>> = quads
        .par_iter()
        .map(|qp| -> Result<Vec<N3Row>> {
            let ext = QuadraticExtension::new(qp)?;
            let mut rows = Vec::new();
            for a in field.elements() {
                for b in field.elements() {
                    if a.is_zero() && b.is_zero() {
                        continue;
                    }
                    let inst = CubicDistInstance::new(qp.clone(), Poly::new(field, vec![a, b]))?;
                    let formula = n3_formula_in(&ext, &inst)?;
                    rows.push(N3Row {
                        bruteforce: n3_bruteforce_among(&inst, &cubics),
                        formula: formula.n3,
                        r3: formula.r3,
                        qpoly: inst.qpoly,
                        alpha: inst.alpha,
                    });
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<N3Row> = per_quad.into_iter().flatten().collect();
    rows.sort_by(|x, y| x.qpoly.cmp(&y.qpoly).then_with(|| x.alpha.cmp(&y.alpha)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    fn p(f: &Field, c: &[u32]) -> Poly {
        Poly::from_reprs(f, c).unwrap()
    }

    fn enumerate_count(field: &Field, set: &[Fe], k: usize, g: Fe) -> u64 {
        set.iter()
            .copied()
            .combinations(k)
            .filter(|s| field.sum(s.iter().copied()) == g)
            .count() as u64
    }

    #[test]
    fn subset_sum_examples() {
        let f = gf(5);
        let all = f.elements();
        assert_eq!(enumerate_count(&f, &all, 2, Fe(0)), 2);
        assert_eq!(subset_sum_count(&f, &all, 2, Fe(0)).unwrap(), 2);
        assert_eq!(subset_sum_count(&f, &all, 0, Fe(0)).unwrap(), 1);
        assert_eq!(subset_sum_count(&f, &all, 0, Fe(3)).unwrap(), 0);
        for q in [3, 5, 7, 9] {
            let f = gf(q);
            for k in 1..q as usize {
                assert!(subset_sum_counts(&f, &f.elements(), k).unwrap().iter().all(|&n| n > 0));
            }
        }
        assert!(subset_sum_count(&f, &[Fe(1), Fe(1)], 1, Fe(1)).is_err());
        assert!(subset_sum_count(&f, &[Fe(1)], 2, Fe(1)).is_err());
    }

    #[test]
    fn zero_sum_free_examples() {
        let f13 = gf(13);
        let d: Vec<Fe> = (0..5).map(Fe).collect();
        assert!(is_zero_sum_free(&f13, &d, 2).unwrap());
        let f7 = gf(7);
        assert!(is_zero_sum_free(&f7, &[Fe(0), Fe(1), Fe(2), Fe(4)], 2).unwrap());
        assert!(!is_zero_sum_free(&f7, &d, 2).unwrap());
        let f8 = gf(8);
        assert!(is_zero_sum_free(&f8, &f8.elements(), 2).unwrap());
        assert!(is_zero_sum_free(&f7, &d, 1).is_err());
        assert!(is_zero_sum_free(&f7, &d[..1], 2).is_err());
    }

    #[test]
    fn consecutive_candidates_are_not_always_zero_sum_free() {
        let f7 = gf(7);
        assert_eq!(consecutive_candidate(7, 2), (0..=4).map(Fe).collect::<Vec<_>>());
        assert!(!is_zero_sum_free(&f7, &consecutive_candidate(7, 2), 2).unwrap());
        let f5 = gf(5);
        assert!(!is_zero_sum_free(&f5, &consecutive_candidate(5, 3), 3).unwrap());
    }

    #[test]
    fn degree_k1_examples() {
        let f = gf(5);
        let all = f.elements();
        for a in f.elements() {
            assert!(degree_k1_nondeephole(&f, &all, 2, a).unwrap());
        }
        let f13 = gf(13);
        let d: Vec<Fe> = (0..5).map(Fe).collect();
        assert!(!degree_k1_nondeephole(&f13, &d, 2, Fe(10)).unwrap());
        // |D| = k + 1: the single subset
        let three = [Fe(1), Fe(2), Fe(4)];
        assert!(degree_k1_nondeephole(&f, &three, 2, Fe(2)).unwrap());
        assert!(!degree_k1_nondeephole(&f, &three, 2, Fe(3)).unwrap());
    }

    #[test]
    fn n3_examples_over_gf2() {
        let f = gf(2);
        let qp = p(&f, &[1, 1, 1]);
        let x = CubicDistInstance::new(qp.clone(), p(&f, &[0, 1])).unwrap();
        let one = CubicDistInstance::new(qp, p(&f, &[1])).unwrap();
        assert_eq!(n3_bruteforce(&x).unwrap(), 1);
        assert_eq!(n3_bruteforce(&one).unwrap(), 0);
        let fx = n3_formula(&x).unwrap();
        assert_eq!((fx.n3, fx.r3, fx.chi3_trivial), (1, -1, Some(false)));
        let f1 = n3_formula(&one).unwrap();
        assert_eq!((f1.n3, f1.r3, f1.chi3_trivial), (0, 2, Some(true)));
    }

    #[test]
    fn n3_over_gf4_is_constant() {
        for row in n3_sweep(&gf(4)).unwrap() {
            assert_eq!(row.bruteforce, 4);
            assert_eq!(row.formula, 4);
        }
    }

    #[test]
    fn n3_over_gf5_takes_both_values() {
        let rows = n3_sweep(&gf(5)).unwrap();
        assert_eq!(rows.len(), 10 * 24);
        assert!(rows.iter().all(|r| r.bruteforce == r.formula));
        assert!(rows.iter().any(|r| r.formula == 7) && rows.iter().any(|r| r.formula == 6));
    }

    #[test]
    fn pair_totals_match_cubic_count() {
        for q in [2u64, 3, 4, 5] {
            let f = gf(q);
            let rows = n3_sweep(&f).unwrap();
            let quads = monic_irreducibles(&f, 2).len() as u64;
            let total: u64 = rows.iter().map(|r| r.bruteforce).sum();
            assert_eq!(total, quads * (q * q * q - q) / 3 * (q - 1));
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for q in [4, 8, 9] {
            let f = gf(q);
            let qp = monic_irreducibles(&f, 2)[0].clone();
            let ext = QuadraticExtension::new(&qp).unwrap();
            let big = ext.big();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(ext.embed(f.add(a, b)), big.add(ext.embed(a), ext.embed(b)));
                    assert_eq!(ext.embed(f.mul(a, b)), big.mul(ext.embed(a), ext.embed(b)));
                }
            }
            // residue map respects multiplication modulo qpoly
            let x = p(&f, &[0, 1]);
            let y = p(&f, &[1, 1]);
            let prod = x.mul_mod(&y, &qp).unwrap();
            assert_eq!(ext.residue(&prod), big.mul(ext.residue(&x), ext.residue(&y)));
        }
    }

    #[test]
    fn cubic_character_is_generator_and_root_independent() {
        for q in [2u64, 5, 8] {
            let f = gf(q);
            let order = q * q - 1;
            for qp in monic_irreducibles(&f, 2).iter().take(3) {
                let e0 = QuadraticExtension::with_root_choice(qp, 0).unwrap();
                let e1 = QuadraticExtension::with_root_choice(qp, 1).unwrap();
                assert_ne!(e0.theta(), e1.theta());
                let big = e0.big();
                let alt_gens: Vec<Fe> = (1..order)
                    .filter(|&j| gcd(j, order) == 1)
                    .map(|j| big.pow(big.generator(), j))
                    .collect();
                for c in f.nonzero_elements() {
                    assert_eq!(e0.chi3_trivial(e0.embed(c)).unwrap(), Some(true));
                }
                for a in f.elements() {
                    for b in f.elements() {
                        if a.is_zero() && b.is_zero() {
                            continue;
                        }
                        let alpha = Poly::new(&f, vec![a, b]);
                        let base = e0.chi3_trivial(e0.residue(&alpha)).unwrap();
                        assert_eq!(e1.chi3_trivial(e1.residue(&alpha)).unwrap(), base);
                        for &g in &alt_gens {
                            assert_eq!(e0.chi3_trivial_with(e0.residue(&alpha), g).unwrap(), base);
                        }
                    }
                }
            }
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn dp_matches_enumeration(mask in 0u32..(1 << 11), k in 0usize..7, g in 0u32..11) {
                let f = gf(11);
                let set: Vec<Fe> = (0..11).filter(|i| mask >> i & 1 == 1).map(Fe).collect();
                prop_assume!(k <= set.len());
                prop_assert_eq!(
                    subset_sum_count(&f, &set, k, Fe(g)).unwrap(),
                    enumerate_count(&f, &set, k, Fe(g))
                );
            }
        }
    }
}
