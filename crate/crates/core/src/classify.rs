//! Classification of deep-hole cosets of `PRS(q+1, k)` at redundancy 3 and 4.
//!
//! With covering radius `q - k`, a syndrome is deep exactly when it avoids
//! the span of every `q - k - 1` columns of the parity-check matrix. Those
//! columns are the points of the normal rational curve, and the spans are
//! enumerated directly rather than through coset-leader layers.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{Bounds, Syndrome};
use crate::error::{Error, Result};
use crate::families::{all_cubic_families, all_quadratic_families, union_of, DeepHoleContext, DeepHoleFamily};
use crate::field::{Fe, Field};
use crate::linalg::Matrix;
use crate::poly::{monic_irreducibles, Poly};

/// `(1, x, ..., x^{r-1})` for `x` in canonical order, then `(0, ..., 0, 1)`.
pub fn nrc_points(field: &Field, r: usize) -> Vec<Vec<Fe>> {
    let mut pts: Vec<Vec<Fe>> = field
        .elements()
        .into_iter()
        .map(|x| (0..r).map(|i| field.pow(x, i as u64)).collect())
        .collect();
    let mut inf = vec![Fe::ZERO; r];
    inf[r - 1] = Fe::ONE;
    pts.push(inf);
    pts
}

/// Every `r` of the `q + 1` curve points are linearly independent.
pub fn nrc_independent(field: &Field, r: usize) -> bool {
    let pts = nrc_points(field, r);
    pts.iter().combinations(r).all(|cols| {
        let cols: Vec<Vec<Fe>> = cols.into_iter().cloned().collect();
        Matrix::from_columns(field, &cols).expect("equal lengths").rank() == r
    })
}

fn redundancy_for(field: &Field, k: usize) -> Result<usize> {
    let q = field.q() as usize;
    if k == 0 || k > q {
        return Err(Error::InvalidCode(format!("need 0 < k <= q, got k={k}")));
    }
    let r = q + 1 - k;
    if !(3..=4).contains(&r) {
        return Err(Error::Unsupported(format!("redundancy {r}; only 3 and 4 are classified")));
    }
    Ok(r)
}

/// Syndromes outside the span of every `q - k - 1` curve points, after
/// confirming that the covering radius is `q - k`.
pub fn deep_syndromes(field: &Field, k: usize, bounds: &Bounds) -> Result<BTreeSet<Syndrome>> {
    let r = redundancy_for(field, k)?;
    let ctx = DeepHoleContext::projective(field, k, bounds)?;
    ctx.require_radius(field.q() as usize - k)?;
    Ok(span_complement(field, r))
}

fn span_complement(field: &Field, r: usize) -> BTreeSet<Syndrome> {
    let q = field.q();
    let m = r - 2;
    let pts = nrc_points(field, r);
    let total = (q as u64).pow(r as u32);
    let mut covered = vec![false; total as usize];
    let coeff_count = (q as u64).pow(m as u32);
    for subset in pts.iter().combinations(m) {
        for idx in 0..coeff_count {
            let coeffs = Syndrome::from_index(q, m, idx).0;
            let mut v = vec![Fe::ZERO; r];
            for (c, pt) in coeffs.iter().zip(&subset) {
                for (slot, &x) in v.iter_mut().zip(pt.iter()) {
                    *slot = field.add(*slot, field.mul(*c, x));
                }
            }
            covered[Syndrome(v).index(q) as usize] = true;
        }
    }
    (0..total)
        .filter(|&i| !covered[i as usize])
        .map(|i| Syndrome::from_index(q, r, i))
        .collect()
}

pub fn count_deep_cosets(field: &Field, k: usize, bounds: &Bounds) -> Result<u64> {
    Ok(deep_syndromes(field, k, bounds)?.len() as u64)
}

/// `q^r` minus the size of the union of spans of `r - 2` curve points, in
/// closed form, for `r = q + 1 - k` in `{3, 4}`.
pub fn span_complement_formula(q: u64, k: usize) -> Option<u64> {
    match (q + 1).checked_sub(k as u64)? {
        3 => Some(q * q * q - (1 + (q + 1) * (q - 1))),
        4 => Some(q.pow(4) - ((q + 1) * q / 2 * (q - 1) * (q - 1) + (q + 1) * (q - 1) + 1)),
        _ => None,
    }
}

/// The deep-coset counts as usually stated: `(q-1) q^2` at `k = q - 2` and
/// `(q-1)(q^3/2 + q^2 + q/2)` at `k = q - 3`.
pub fn stated_deep_count(q: u64, k: usize) -> Option<u64> {
    match (q + 1).checked_sub(k as u64)? {
        3 => Some((q - 1) * q * q),
        4 => Some((q - 1) * (q * q * q + 2 * q * q + q) / 2),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Edge {
    pub p: Poly,
    pub vertices: BTreeSet<Syndrome>,
}

/// Vertices are projective deep cosets of `PRS(q+1, q-2)`; each edge is the
/// set of projective classes of one `DH(p)`.
#[derive(Clone, Debug, Serialize)]
pub struct Hypergraph {
    pub q: u32,
    pub vertices: BTreeSet<Syndrome>,
    pub edges: Vec<Edge>,
    #[serde(skip)]
    pub families: Vec<DeepHoleFamily>,
}

fn require_odd_q(field: &Field) -> Result<()> {
    if field.is_even() || field.q() < 5 {
        return Err(Error::Unsupported(format!("needs odd q >= 5, got q={}", field.q())));
    }
    Ok(())
}

pub fn build_hypergraph(field: &Field, bounds: &Bounds) -> Result<Hypergraph> {
    require_odd_q(field)?;
    let ctx = DeepHoleContext::projective(field, field.q() as usize - 2, bounds)?;
    let families = all_quadratic_families(&ctx)?;
    let edges: Vec<Edge> = families
        .iter()
        .map(|fam| Edge {
            p: match &fam.params {
                crate::families::FamilyParams::Quadratic { p } => p.clone(),
                _ => unreachable!("quadratic families only"),
            },
            vertices: fam.projective_classes(field),
        })
        .collect();
    let vertices = edges.iter().flat_map(|e| e.vertices.iter().cloned()).collect();
    Ok(Hypergraph {
        q: field.q(),
        vertices,
        edges,
        families,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypergraphStats {
    pub q: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Distinct edge sizes.
    pub edge_sizes: BTreeSet<usize>,
    /// Pairwise edge-intersection size -> number of edge pairs.
    pub pair_intersections: BTreeMap<usize, usize>,
    /// Vertex degree -> number of vertices.
    pub degree_histogram: BTreeMap<usize, usize>,
    /// Per edge: (vertices of degree (q-1)/2, vertices of degree (q+1)/2).
    pub edge_splits: Vec<(usize, usize)>,
    pub degree_sum: usize,
    /// Vertex count recovered from the multiset of edge memberships when
    /// half the memberships sit on each degree.
    pub vertex_count_from_multiset: Option<u64>,
}

impl HypergraphStats {
    /// Named structural checks and whether each holds.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let q = self.q as usize;
        let lo = (q - 1) / 2;
        let hi = q.div_ceil(2);
        vec![
            ("vertex count is q^2", self.vertex_count == q * q),
            ("edge count is (q^2-q)/2", self.edge_count == (q * q - q) / 2),
            ("every edge has q+1 vertices", self.edge_sizes == BTreeSet::from([q + 1])),
            (
                "every two edges share one vertex",
                self.pair_intersections.keys().copied().collect::<Vec<_>>() == vec![1],
            ),
            (
                "degrees are (q-1)/2 or (q+1)/2",
                self.degree_histogram.keys().all(|&d| d == lo || d == hi),
            ),
            (
                "each edge splits evenly between the two degrees",
                self.edge_splits.iter().all(|&(a, b)| a == hi && b == hi),
            ),
            ("degree sum is |E|(q+1)", self.degree_sum == self.edge_count * (q + 1)),
            (
                "multiset identity gives q^2 vertices",
                self.vertex_count_from_multiset == Some((q * q) as u64),
            ),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }
}

pub fn hypergraph_stats(h: &Hypergraph) -> HypergraphStats {
    let q = h.q as usize;
    let mut degree: BTreeMap<&Syndrome, usize> = BTreeMap::new();
    for e in &h.edges {
        for v in &e.vertices {
            *degree.entry(v).or_default() += 1;
        }
    }
    let mut degree_histogram = BTreeMap::new();
    for &d in degree.values() {
        *degree_histogram.entry(d).or_default() += 1;
    }
    let mut pair_intersections = BTreeMap::new();
    for (a, b) in h.edges.iter().tuple_combinations() {
        *pair_intersections
            .entry(a.vertices.intersection(&b.vertices).count())
            .or_default() += 1;
    }
    let edge_splits = h
        .edges
        .iter()
        .map(|e| {
            let lo = e.vertices.iter().filter(|v| degree[v] == (q - 1) / 2).count();
            let hi = e.vertices.iter().filter(|v| degree[v] == q.div_ceil(2)).count();
            (lo, hi)
        })
        .collect();
    let memberships = (h.edges.len() * (q + 1)) as u64;
    let half = memberships / 2;
    let vertex_count_from_multiset = (memberships.is_multiple_of(2)
        && (2 * half).is_multiple_of(q as u64 + 1)
        && (2 * half).is_multiple_of(q as u64 - 1))
        .then(|| 2 * half / (q as u64 + 1) + 2 * half / (q as u64 - 1));
    HypergraphStats {
        q: h.q,
        vertex_count: h.vertices.len(),
        edge_count: h.edges.len(),
        edge_sizes: h.edges.iter().map(|e| e.vertices.len()).collect(),
        pair_intersections,
        degree_histogram,
        edge_splits,
        degree_sum: degree.values().sum(),
        vertex_count_from_multiset,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub q: u32,
    pub k: usize,
    pub quadratics: usize,
    pub union_size: usize,
    pub total: usize,
    pub equal: bool,
}

/// Union of every `DH(p)` against all deep cosets of `PRS(q+1, q-2)`.
pub fn completeness_check(field: &Field, bounds: &Bounds) -> Result<CompletenessReport> {
    require_odd_q(field)?;
    let k = field.q() as usize - 2;
    let ctx = DeepHoleContext::projective(field, k, bounds)?;
    let families = all_quadratic_families(&ctx)?;
    let union = union_of(&families);
    let deep = deep_syndromes(field, k, bounds)?;
    Ok(CompletenessReport {
        q: field.q(),
        k,
        quadratics: families.len(),
        union_size: union.len(),
        total: deep.len(),
        equal: union == deep,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverageReport {
    pub q: u32,
    pub k: usize,
    pub cubics: usize,
    pub covered: usize,
    pub total: usize,
    pub fraction: f64,
}

/// Union of the cubic construction over every monic irreducible cubic
/// against all deep cosets of `PRS(q+1, q-3)`.
pub fn cubic_coverage(field: &Field, bounds: &Bounds) -> Result<CoverageReport> {
    let q = field.q() as usize;
    if q < 5 {
        return Err(Error::Unsupported("cubic coverage needs q >= 5".into()));
    }
    let k = q - 3;
    let ctx = DeepHoleContext::projective(field, k, bounds)?;
    let families = all_cubic_families(&ctx)?;
    let union = union_of(&families);
    let deep = deep_syndromes(field, k, bounds)?;
    debug_assert!(union.is_subset(&deep));
    let covered = union.intersection(&deep).count();
    Ok(CoverageReport {
        q: field.q(),
        k,
        cubics: families.len(),
        covered,
        total: deep.len(),
        fraction: covered as f64 / deep.len() as f64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    /// Ordered triples of distinct irreducible quadratics.
    pub triples: usize,
    pub nonempty: usize,
    pub dependent: usize,
    /// Nonempty triple intersection exactly when some `c` outside `{0, 1}`
    /// gives `p1 = c p2 + (1 - c) p3`.
    pub equivalence_holds: bool,
    /// Such a `c` is never ambiguous.
    pub unique: bool,
}

/// Triple intersections of `DH(p)` coset sets on `PRS(q+1, q-2)` against
/// affine dependence of the three quadratics.
pub fn triple_intersections(field: &Field, bounds: &Bounds) -> Result<TripleReport> {
    require_odd_q(field)?;
    let ctx = DeepHoleContext::projective(field, field.q() as usize - 2, bounds)?;
    let fams = all_quadratic_families(&ctx)?;
    let quads = monic_irreducibles(field, 2);
    let n = quads.len();
    let results: Vec<(bool, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let fams = &fams;
            let quads = &quads;
            (0..n).flat_map(move |j| (0..n).map(move |l| (i, j, l)))
                .filter(|&(i, j, l)| i != j && j != l && i != l)
                .map(move |(i, j, l)| {
                    let nonempty = fams[i]
                        .cosets
                        .iter()
                        .any(|s| fams[j].cosets.contains(s) && fams[l].cosets.contains(s));
                    let witnesses = field
                        .elements()
                        .into_iter()
                        .filter(|&c| c != Fe::ZERO && c != Fe::ONE)
                        .filter(|&c| {
                            quads[j].scale(c).add(&quads[l].scale(field.sub(Fe::ONE, c))) == quads[i]
                        })
                        .count();
                    (nonempty, witnesses)
                })
        })
        .collect();
    Ok(TripleReport {
        triples: results.len(),
        nonempty: results.iter().filter(|r| r.0).count(),
        dependent: results.iter().filter(|r| r.1 > 0).count(),
        equivalence_holds: results.iter().all(|&(ne, w)| ne == (w > 0)),
        unique: results.iter().all(|&(_, w)| w <= 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiIntersectionReport {
    /// Distinct edge sets (size >= 2) with nonempty common intersection.
    pub edge_sets: usize,
    /// Raw intersection size -> number of such edge sets.
    pub sizes: BTreeMap<usize, usize>,
}

impl MultiIntersectionReport {
    pub fn all_equal_to(&self, n: usize) -> bool {
        self.sizes.keys().copied().collect::<Vec<_>>() == vec![n]
    }
}

/// Every set of at least two edges sharing a vertex, with the size of the
/// common intersection of their raw coset sets. Edge sets with a nonempty
/// intersection are exactly subsets of the edges through some vertex.
pub fn multi_intersections(h: &Hypergraph) -> MultiIntersectionReport {
    let mut incident: BTreeMap<&Syndrome, Vec<usize>> = BTreeMap::new();
    for (i, e) in h.edges.iter().enumerate() {
        for v in &e.vertices {
            incident.entry(v).or_default().push(i);
        }
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for edges in incident.values() {
        for size in 2..=edges.len() {
            for subset in edges.iter().copied().combinations(size) {
                seen.insert(subset);
            }
        }
    }
    let mut sizes = BTreeMap::new();
    for subset in &seen {
        let first = &h.families[subset[0]].cosets;
        let common = first
            .iter()
            .filter(|s| subset[1..].iter().all(|&j| h.families[j].cosets.contains(*s)))
            .count();
        *sizes.entry(common).or_default() += 1;
    }
    MultiIntersectionReport {
        edge_sets: seen.len(),
        sizes,
    }
}
