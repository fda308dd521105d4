//! Affine and projective Reed-Solomon codes.
//!
//! Both kinds evaluate on points listed in canonical field order (zero last)
//! unless an explicit evaluation set is given, so the generator and
//! parity-check matrices come out column for column as they are usually
//! written down. The projective code appends the coefficient of `x^{k-1}`.
//!
//! Error distances are computed two independent ways: by scanning every
//! codeword, and by finding the fewest parity-check columns whose span
//! contains the syndrome. [`CosetLeaderTable`] tabulates the second quantity
//! for the whole syndrome space at once.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{in_span, Matrix};
use crate::poly::{Poly, RationalFunction};

/// Limits enforced before any exhaustive enumeration starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Upper bound on `q^k` for codeword enumeration.
    pub max_codewords: u64,
    /// Upper bound on `q^(n-k)` for syndrome-space enumeration.
    pub max_syndromes: u64,
    /// Upper bound on `n-k` for the span-based distance of a single word.
    pub max_span_redundancy: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_codewords: 10_000_000,
            max_syndromes: 10_000_000,
            max_span_redundancy: 6,
        }
    }
}

impl Bounds {
    pub fn unlimited() -> Self {
        Bounds {
            max_codewords: u64::MAX,
            max_syndromes: u64::MAX,
            max_span_redundancy: usize::MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Affine,
    Projective,
}

/// Error-distance algorithm selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMethod {
    /// Minimum over all `q^k` codewords.
    Exhaustive,
    /// Fewest parity-check columns whose span contains the syndrome.
    SyndromeSpan,
}

/// A received word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Fe>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, field: &Field, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| field.add(a, b)).collect())
    }

    pub fn sub(&self, field: &Field, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| field.sub(a, b)).collect())
    }

    pub fn scale(&self, field: &Field, c: Fe) -> Word {
        Word(self.0.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn reprs(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.0).collect()
    }
}

/// `H w^T` for the code's fixed parity-check matrix `H`.
///
/// Raw syndromes identify cosets of the code exactly, so they double as
/// coset identifiers ([`CosetId`]). [`Syndrome::projective`] gives the
/// scalar-free class used when a family is closed under scaling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Syndrome(pub Vec<Fe>);

/// A coset of the code, identified by its raw syndrome.
pub type CosetId = Syndrome;

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Dense index: the syndrome read as a base-q number, first coordinate lowest.
    pub fn index(&self, q: u32) -> u64 {
        self.0.iter().rev().fold(0u64, |acc, c| acc * q as u64 + c.0 as u64)
    }

    pub fn from_index(q: u32, len: usize, mut idx: u64) -> Syndrome {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(Fe((idx % q as u64) as u32));
            idx /= q as u64;
        }
        Syndrome(out)
    }

    /// Scaled so that the first nonzero coordinate is one.
    pub fn projective(&self, field: &Field) -> Syndrome {
        match self.0.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(&lead) => {
                let inv = field.inv(lead).expect("nonzero");
                Syndrome(self.0.iter().map(|&c| field.mul(c, inv)).collect())
            }
        }
    }

    pub fn reprs(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.0).collect()
    }
}

/// An affine `RS_v(D, k)` or projective `PRS(q+1, k)` code.
#[derive(Clone, Debug)]
pub struct Code {
    field: Field,
    kind: CodeKind,
    k: usize,
    points: Vec<Fe>,
    scale: Vec<Fe>,
    generator: Matrix,
    parity: Matrix,
}

impl Code {
    /// `RS(D, k)` with the all-ones scale vector.
    pub fn affine(field: &Field, points: Vec<Fe>, k: usize) -> Result<Code> {
        let ones = vec![Fe::ONE; points.len()];
        Code::affine_scaled(field, points, ones, k)
    }

    /// `RS(GF(q), k)` with evaluation points in canonical order.
    pub fn full_affine(field: &Field, k: usize) -> Result<Code> {
        Code::affine(field, field.elements(), k)
    }

    pub fn affine_scaled(field: &Field, points: Vec<Fe>, scale: Vec<Fe>, k: usize) -> Result<Code> {
        let n = points.len();
        if k == 0 || k >= n {
            return Err(Error::InvalidCode(format!("need 0 < k < n, got k={k}, n={n}")));
        }
        if scale.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: scale.len(),
            });
        }
        if scale.iter().any(|c| c.is_zero()) {
            return Err(Error::InvalidCode("scale vector has a zero entry".into()));
        }
        if let Some(&bad) = points.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::ElementOutOfRange(bad.0));
        }
        if points.iter().duplicates().next().is_some() {
            return Err(Error::InvalidCode("evaluation points are not distinct".into()));
        }

        let gen_rows: Vec<Vec<Fe>> = (0..k)
            .map(|i| {
                points
                    .iter()
                    .zip(&scale)
                    .map(|(&x, &v)| field.mul(v, field.pow(x, i as u64)))
                    .collect()
            })
            .collect();
        // dual of a generalized RS code: column j scaled by
        // 1 / (v_j * prod_{l != j} (x_j - x_l))
        let col_scale: Vec<Fe> = points
            .iter()
            .enumerate()
            .map(|(j, &xj)| {
                let prod = points
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != j)
                    .fold(Fe::ONE, |acc, (_, &xl)| field.mul(acc, field.sub(xj, xl)));
                field.inv(field.mul(prod, scale[j])).expect("distinct points")
            })
            .collect();
        let par_rows: Vec<Vec<Fe>> = (0..n - k)
            .map(|i| {
                points
                    .iter()
                    .zip(&col_scale)
                    .map(|(&x, &u)| field.mul(u, field.pow(x, i as u64)))
                    .collect()
            })
            .collect();
        Ok(Code {
            field: field.clone(),
            kind: CodeKind::Affine,
            k,
            points,
            scale,
            generator: Matrix::from_rows(field, &gen_rows)?,
            parity: Matrix::from_rows(field, &par_rows)?,
        })
    }

    /// `PRS(q+1, k)` for `1 <= k <= q`.
    pub fn projective(field: &Field, k: usize) -> Result<Code> {
        let q = field.q() as usize;
        if k == 0 || k > q {
            return Err(Error::InvalidCode(format!("need 0 < k < q+1, got k={k}, q={q}")));
        }
        let points = field.elements();
        let power_rows = |count: usize| -> Vec<Vec<Fe>> {
            (0..count)
                .map(|i| {
                    let mut row: Vec<Fe> =
                        points.iter().map(|&x| field.pow(x, i as u64)).collect();
                    row.push(if i + 1 == count { Fe::ONE } else { Fe::ZERO });
                    row
                })
                .collect()
        };
        Ok(Code {
            field: field.clone(),
            kind: CodeKind::Projective,
            k,
            scale: vec![Fe::ONE; q],
            generator: Matrix::from_rows(field, &power_rows(k))?,
            parity: Matrix::from_rows(field, &power_rows(q + 1 - k))?,
            points,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn redundancy(&self) -> usize {
        self.n() - self.k
    }

    /// Affine evaluation points (all of GF(q) in canonical order for PRS).
    pub fn points(&self) -> &[Fe] {
        &self.points
    }

    pub fn scale(&self) -> &[Fe] {
        &self.scale
    }

    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check_matrix(&self) -> &Matrix {
        &self.parity
    }

    fn affine_part(&self, f: impl Fn(Fe) -> Result<Fe>) -> Result<Vec<Fe>> {
        self.points
            .iter()
            .zip(&self.scale)
            .map(|(&x, &v)| Ok(self.field.mul(v, f(x)?)))
            .collect()
    }

    /// Codeword of a polynomial of degree at most `k - 1`.
    pub fn encode(&self, f: &Poly) -> Result<Word> {
        if let Some(d) = f.degree() {
            if d >= self.k {
                return Err(Error::DegreeTooHigh { degree: d, k: self.k });
            }
        }
        let tail = f.coeff(self.k - 1);
        self.word_from_poly(f, tail)
    }

    /// `u_f` on the evaluation set, followed by `last` for projective codes
    /// (ignored for affine codes). Any degree is allowed.
    pub fn word_from_poly(&self, f: &Poly, last: Fe) -> Result<Word> {
        let mut w = self.affine_part(|x| Ok(f.eval(x)))?;
        if self.kind == CodeKind::Projective {
            w.push(last);
        }
        Ok(Word(w))
    }

    /// Pointwise evaluation of `r` on the evaluation set, with final
    /// coordinate `last` for projective codes.
    pub fn word_from_rational(&self, r: &RationalFunction, last: Fe) -> Result<Word> {
        let mut w = self.affine_part(|x| r.eval(x))?;
        if self.kind == CodeKind::Projective {
            w.push(last);
        }
        Ok(Word(w))
    }

    /// Word built from arbitrary values on the evaluation set.
    pub fn word_from_fn(&self, f: impl Fn(Fe) -> Fe, last: Fe) -> Word {
        let mut w = self.affine_part(|x| Ok(f(x))).expect("infallible");
        if self.kind == CodeKind::Projective {
            w.push(last);
        }
        Word(w)
    }

    pub fn check_len(&self, w: &Word) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: w.len(),
            });
        }
        Ok(())
    }

    pub fn syndrome(&self, w: &Word) -> Result<Syndrome> {
        self.check_len(w)?;
        Ok(Syndrome(self.parity.mul_vec(&w.0)?))
    }

    pub fn is_codeword(&self, w: &Word) -> Result<bool> {
        Ok(self.syndrome(w)?.is_zero())
    }

    /// Some word with the given syndrome.
    pub fn word_with_syndrome(&self, s: &Syndrome) -> Result<Word> {
        let x = self
            .parity
            .solve(&s.0)?
            .expect("parity-check matrix has full row rank");
        Ok(Word(x))
    }

    /// Codeword for the coefficient vector `coeffs` of the generator rows.
    pub fn codeword(&self, coeffs: &[Fe]) -> Word {
        let f = &self.field;
        let mut w = vec![Fe::ZERO; self.n()];
        for (i, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &g) in self.generator.row(i).iter().enumerate() {
                w[j] = f.add(w[j], f.mul(c, g));
            }
        }
        Word(w)
    }

    fn codeword_count(&self) -> u64 {
        (self.field.q() as u64).checked_pow(self.k as u32).unwrap_or(u64::MAX)
    }

    fn syndrome_count(&self) -> u64 {
        (self.field.q() as u64)
            .checked_pow(self.redundancy() as u32)
            .unwrap_or(u64::MAX)
    }

    fn check_codeword_bound(&self, bounds: &Bounds) -> Result<()> {
        let size = self.codeword_count();
        if size > bounds.max_codewords {
            return Err(Error::BoundExceeded {
                what: "q^k codewords",
                size,
                bound: bounds.max_codewords,
            });
        }
        Ok(())
    }

    fn check_syndrome_bound(&self, bounds: &Bounds) -> Result<()> {
        let size = self.syndrome_count();
        if size > bounds.max_syndromes {
            return Err(Error::BoundExceeded {
                what: "q^(n-k) syndromes",
                size,
                bound: bounds.max_syndromes,
            });
        }
        Ok(())
    }

    /// Exact Hamming distance from `w` to the code.
    pub fn error_distance(&self, w: &Word, method: DistanceMethod, bounds: &Bounds) -> Result<usize> {
        self.check_len(w)?;
        match method {
            DistanceMethod::Exhaustive => {
                self.check_codeword_bound(bounds)?;
                Ok(self.exhaustive_distance(w))
            }
            DistanceMethod::SyndromeSpan => {
                let r = self.redundancy();
                if r > bounds.max_span_redundancy {
                    return Err(Error::BoundExceeded {
                        what: "redundancy for span search",
                        size: r as u64,
                        bound: bounds.max_span_redundancy as u64,
                    });
                }
                self.span_distance(&self.syndrome(w)?)
            }
        }
    }

    /// Scans every codeword. The last generator row is handled in bulk: for
    /// each position the unique multiple of that row that matches `w` is
    /// tallied, so each outer combination costs `O(n + q)`.
    fn exhaustive_distance(&self, w: &Word) -> usize {
        let f = &self.field;
        let n = self.n();
        let k = self.k;
        let q = f.q() as usize;
        let scaled: Vec<Vec<Vec<Fe>>> = (0..k - 1)
            .map(|i| {
                (0..q as u32)
                    .map(|c| self.generator.row(i).iter().map(|&g| f.mul(Fe(c), g)).collect())
                    .collect()
            })
            .collect();
        let last_inv: Vec<Option<Fe>> = self.generator.row(k - 1).iter().map(|&g| f.inv(g)).collect();

        // partial[i] = sum of the first i scaled rows under the current digits
        let mut partial = vec![vec![Fe::ZERO; n]; k];
        let mut digits = vec![0usize; k - 1];
        let mut hist = vec![0usize; q];
        let mut best = 0usize;
        loop {
            let cur = &partial[k - 1];
            hist.iter_mut().for_each(|h| *h = 0);
            let mut always = 0usize;
            for j in 0..n {
                let d = f.sub(w.0[j], cur[j]);
                match last_inv[j] {
                    Some(inv) => hist[f.mul(d, inv).0 as usize] += 1,
                    None => always += (d.is_zero()) as usize,
                }
            }
            best = best.max(always + hist.iter().copied().max().unwrap_or(0));
            if best == n {
                return 0;
            }

            // advance the odometer, most significant digit first
            let Some(pos) = (0..k - 1).rev().find(|&i| digits[i] + 1 < q) else {
                break;
            };
            digits[pos] += 1;
            for d in digits.iter_mut().skip(pos + 1) {
                *d = 0;
            }
            for i in pos..k - 1 {
                let (lo, hi) = partial.split_at_mut(i + 1);
                let row = &scaled[i][digits[i]];
                for j in 0..n {
                    hi[0][j] = f.add(lo[i][j], row[j]);
                }
            }
        }
        n - best
    }

    /// Coset-leader weight of `s`: the least `m` such that `s` lies in the
    /// span of some `m` columns of `H`.
    pub fn span_distance(&self, s: &Syndrome) -> Result<usize> {
        if s.is_zero() {
            return Ok(0);
        }
        let cols: Vec<Vec<Fe>> = (0..self.n()).map(|j| self.parity.column(j)).collect();
        for m in 1..=self.n() {
            for subset in (0..self.n()).combinations(m) {
                let vs: Vec<&[Fe]> = subset.iter().map(|&j| cols[j].as_slice()).collect();
                if in_span(&self.field, &vs, &s.0) {
                    return Ok(m);
                }
            }
        }
        unreachable!("the columns of a full-rank parity-check matrix span everything")
    }

    /// Maximum coset-leader weight over the whole syndrome space.
    pub fn covering_radius(&self, bounds: &Bounds) -> Result<usize> {
        Ok(CosetLeaderTable::build(self, bounds)?.covering_radius())
    }

    /// Exact minimum distance: by codeword enumeration when `q^k` is within
    /// bounds, otherwise as the smallest dependent set of columns of `H`.
    pub fn minimum_distance(&self, bounds: &Bounds) -> Result<usize> {
        if self.check_codeword_bound(bounds).is_ok() {
            let q = self.field.q();
            let mut best = usize::MAX;
            for idx in 1..self.codeword_count() {
                let coeffs = Syndrome::from_index(q, self.k, idx).0;
                best = best.min(self.codeword(&coeffs).weight());
            }
            return Ok(best);
        }
        let cols: Vec<Vec<Fe>> = (0..self.n()).map(|j| self.parity.column(j)).collect();
        for m in 1..=self.n() {
            for subset in (0..self.n()).combinations(m) {
                let chosen: Vec<Vec<Fe>> = subset.iter().map(|&j| cols[j].clone()).collect();
                if Matrix::from_columns(&self.field, &chosen)?.rank() < m {
                    return Ok(m);
                }
            }
        }
        Err(Error::InvalidCode("no dependent column set".into()))
    }

    pub fn is_mds(&self, bounds: &Bounds) -> Result<bool> {
        Ok(self.minimum_distance(bounds)? == self.n() - self.k + 1)
    }
}

/// Coset-leader weight of every syndrome of a code.
///
/// Built layer by layer: layer `m` marks every sum of `m` nonzero multiples
/// of distinct parity-check columns not reached earlier. Enumeration stops
/// as soon as the whole syndrome space is covered.
#[derive(Clone, Debug)]
pub struct CosetLeaderTable {
    q: u32,
    r: usize,
    weights: Vec<u8>,
}

pub const UNREACHED: u8 = u8::MAX;

impl CosetLeaderTable {
    pub fn build(code: &Code, bounds: &Bounds) -> Result<CosetLeaderTable> {
        code.check_syndrome_bound(bounds)?;
        let cols: Vec<Vec<Fe>> = (0..code.n())
            .map(|j| code.parity_check_matrix().column(j))
            .collect();
        Ok(CosetLeaderTable::from_columns(code.field(), &cols, None))
    }

    /// Table for the code whose parity-check columns are `cols`, enumerating
    /// layers up to `max_layer` (all layers when `None`). Syndromes beyond
    /// the last enumerated layer are left at [`UNREACHED`].
    pub fn from_columns(field: &Field, cols: &[Vec<Fe>], max_layer: Option<usize>) -> CosetLeaderTable {
        let q = field.q();
        let r = cols.first().map_or(0, Vec::len);
        let total = (q as u64).pow(r as u32) as usize;
        let mut weights = vec![UNREACHED; total];
        weights[0] = 0;
        let n = cols.len();
        let scaled: Vec<Vec<Vec<Fe>>> = cols
            .iter()
            .map(|col| {
                field
                    .nonzero_elements()
                    .map(|c| col.iter().map(|&h| field.mul(c, h)).collect())
                    .collect()
            })
            .collect();
        let powers: Vec<u64> = (0..r).map(|i| (q as u64).pow(i as u32)).collect();

        let mut walker = LayerWalker {
            field,
            scaled: &scaled,
            powers: &powers,
            weights: &mut weights,
            covered: 1,
            total,
        };
        let last = max_layer.unwrap_or(n).min(n);
        for m in 1..=last {
            if walker.covered == walker.total {
                break;
            }
            let mut stack = vec![vec![Fe::ZERO; r]; m];
            walker.descend(m, 0, 0, &mut stack);
        }
        CosetLeaderTable { q, r, weights }
    }

    pub fn redundancy(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, s: &Syndrome) -> u8 {
        self.weights[s.index(self.q) as usize]
    }

    pub fn weight_at(&self, index: u64) -> u8 {
        self.weights[index as usize]
    }

    pub fn covering_radius(&self) -> usize {
        self.weights.iter().copied().max().unwrap_or(0) as usize
    }

    /// Number of syndromes of each weight, index = weight.
    pub fn histogram(&self) -> Vec<u64> {
        let top = self
            .weights
            .iter()
            .copied()
            .filter(|&w| w != UNREACHED)
            .max()
            .unwrap_or(0) as usize;
        let mut out = vec![0u64; top + 1];
        for &w in &self.weights {
            if w != UNREACHED {
                out[w as usize] += 1;
            }
        }
        out
    }

    /// All syndromes of exactly weight `w`, in index order.
    pub fn syndromes_of_weight(&self, w: u8) -> impl Iterator<Item = Syndrome> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(move |&(_, &x)| x == w)
            .map(move |(i, _)| Syndrome::from_index(self.q, self.r, i as u64))
    }
}

struct LayerWalker<'a> {
    field: &'a Field,
    scaled: &'a [Vec<Vec<Fe>>],
    powers: &'a [u64],
    weights: &'a mut [u8],
    covered: usize,
    total: usize,
}

impl LayerWalker<'_> {
    /// `stack[d]` holds the partial sum after `d` chosen columns.
    fn descend(&mut self, m: usize, depth: usize, start: usize, stack: &mut [Vec<Fe>]) {
        let n = self.scaled.len();
        let f = self.field;
        if depth + 1 == m {
            let base = &stack[depth];
            for j in start..n {
                for col in &self.scaled[j] {
                    let mut idx = 0u64;
                    for (i, (&b, &c)) in base.iter().zip(col).enumerate() {
                        idx += f.add(b, c).0 as u64 * self.powers[i];
                    }
                    let slot = &mut self.weights[idx as usize];
                    if *slot == UNREACHED {
                        *slot = m as u8;
                        self.covered += 1;
                        if self.covered == self.total {
                            return;
                        }
                    }
                }
            }
            return;
        }
        for j in start..=(n - (m - depth)) {
            for c in 0..self.scaled[j].len() {
                let (lo, hi) = stack.split_at_mut(depth + 1);
                for (i, slot) in hi[0].iter_mut().enumerate() {
                    *slot = f.add(lo[depth][i], self.scaled[j][c][i]);
                }
                self.descend(m, depth + 1, j + 1, stack);
                if self.covered == self.total {
                    return;
                }
            }
        }
    }
}
