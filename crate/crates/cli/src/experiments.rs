use std::collections::BTreeSet;

use deephole::classify::{
    build_hypergraph, completeness_check, cubic_coverage, hypergraph_stats, multi_intersections,
    stated_deep_count,
};
use deephole::families::{
    all_cubic_families, all_quadratic_families, known_affine_cosets, union_of, zero_sum_free_family,
};
use deephole::numtheory::{consecutive_candidate, is_zero_sum_free, n3_sweep, subset_sum_counts};
use deephole::{classify, Code, CodeKind, DeepHoleContext, DistanceMethod, Fe, Field, Syndrome};
use serde_json::{json, Value};

use crate::{CliError, CodeChoice, Command, ExperimentConfig, Report, Table};

pub(crate) fn dispatch(config: &ExperimentConfig, field: &Field) -> Result<Report, CliError> {
    let mut report = Report::new(config, field);
    match config.command {
        Command::CoveringRadius => covering_radius(config, field, &mut report)?,
        Command::EnumDeepCosets => enum_deep_cosets(config, field, &mut report)?,
        Command::Family => family(config, field, &mut report)?,
        Command::Completeness => completeness(config, field, &mut report)?,
        Command::Hypergraph => hypergraph(config, field, &mut report)?,
        Command::CubicCoverage => coverage(config, field, &mut report)?,
        Command::Ssp => ssp(config, field, &mut report)?,
        Command::N3 => n3(field, &mut report)?,
        Command::ZeroSumFree => zero_sum_free(config, field, &mut report)?,
    }
    Ok(report)
}

fn parse_set(field: &Field, reprs: &[u32]) -> Result<Vec<Fe>, CliError> {
    let set: Vec<Fe> = reprs.iter().map(|&r| field.element(r)).collect::<Result<_, _>>()?;
    if set.iter().collect::<BTreeSet<_>>().len() != set.len() {
        return Err(CliError::Usage("--set has repeated elements".into()));
    }
    Ok(set)
}

fn syndromes_json(set: &BTreeSet<Syndrome>) -> Value {
    Value::Array(set.iter().map(|s| json!(s.reprs())).collect())
}

/// Covering radius of `PRS(q+1, k)` where it is established: the boundary
/// dimensions, and `q - k` when `k + 1 <= p` or `2k >= q - 1` (excluding
/// `k = q - 2` in characteristic 2).
pub fn known_projective_radius(field: &Field, k: usize) -> Option<usize> {
    let q = field.q() as usize;
    let p = field.p() as usize;
    match k {
        1 => Some(q - 1),
        _ if k == q || k == q - 1 => Some(1),
        _ if k < p || 2 * k + 1 >= q => (!(p == 2 && k == q - 2)).then_some(q - k),
        _ => None,
    }
}

fn covering_radius(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let k = config.require_k()?;
    let choice = config.code.unwrap_or_default();
    let code = match (choice, &config.set) {
        (CodeChoice::Prs, Some(_)) => return Err(CliError::Usage("--set applies to --code rs only".into())),
        (CodeChoice::Prs, None) => Code::projective(field, k)?,
        (CodeChoice::Rs, None) => Code::full_affine(field, k)?,
        (CodeChoice::Rs, Some(s)) => Code::affine(field, parse_set(field, s)?, k)?,
    };
    let table = deephole::CosetLeaderTable::build(&code, &config.bounds())?;
    let rho = table.covering_radius();
    let expected = match code.kind() {
        CodeKind::Affine => Some(code.n() - k),
        CodeKind::Projective => known_projective_radius(field, k),
    };
    report.set("code", choice)?;
    report.set("n", code.n())?;
    report.set("k", k)?;
    report.set("rho", rho)?;
    report.set("expected", expected)?;
    if let Some(e) = expected {
        report.check("covering radius equals the established value", rho == e);
    }
    let mut t = Table::new(&["weight", "cosets"]);
    for (w, n) in table.histogram().iter().enumerate() {
        t.push(vec![json!(w), json!(n)]);
    }
    report.table = Some(t);
    Ok(())
}

fn enum_deep_cosets(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let k = config.require_k()?;
    let q = field.q() as u64;
    let expected = stated_deep_count(q, k);
    // the span enumeration covers redundancy 3 and 4; the coset table the rest
    let (method, deep) = if expected.is_some() {
        ("curve-span-complement", classify::deep_syndromes(field, k, &config.bounds())?)
    } else {
        let ctx = DeepHoleContext::projective(field, k, &config.bounds())?;
        ("coset-leader-table", ctx.deep_syndromes())
    };
    let classes: BTreeSet<Syndrome> = deep.iter().map(|s| s.projective(field)).collect();
    report.set("k", k)?;
    report.set("method", method)?;
    report.set("total", deep.len())?;
    report.set("expected", expected)?;
    report.set("projective_classes", classes.len())?;
    if let Some(e) = expected {
        report.check("deep-coset count equals the closed form", deep.len() as u64 == e);
    }
    let mut t = Table::new(&["index", "syndrome"]);
    for s in &deep {
        t.push(vec![json!(s.index(field.q())), json!(s.reprs())]);
    }
    report.table = Some(t);
    Ok(())
}

fn family(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let k = config.require_k()?;
    let degree = config.degree.unwrap_or(2);
    if degree != 2 && degree != 3 {
        return Err(CliError::Usage(format!("--degree must be 2 or 3, got {degree}")));
    }
    let q = field.q() as usize;
    let ctx = DeepHoleContext::projective(field, k, &config.bounds())?;
    let (families, per_family) = match degree {
        2 => (all_quadratic_families(&ctx)?, q * q - 1),
        _ => (all_cubic_families(&ctx)?, (q - 1) * (q * q + q + 2) / 2),
    };
    let mut t = Table::new(&["p", "cosets", "projective_classes", "all_deep", "min_span_distance"]);
    let mut all_deep = true;
    let mut sizes_match = true;
    for fam in &families {
        let deep = ctx.verify(fam).is_ok();
        all_deep &= deep;
        sizes_match &= fam.len() == per_family;
        let p = match &fam.params {
            deephole::FamilyParams::Quadratic { p } | deephole::FamilyParams::Cubic { p } => json!(p),
            other => json!(other),
        };
        let min_span = fam
            .cosets
            .iter()
            .map(|s| ctx.code().span_distance(s))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .min();
        t.push(vec![
            p,
            json!(fam.len()),
            json!(fam.projective_classes(field).len()),
            json!(deep),
            json!(min_span),
        ]);
    }
    let union = union_of(&families);
    report.set("k", k)?;
    report.set("degree", degree)?;
    report.set("rho", ctx.covering_radius())?;
    report.set("families", families.len())?;
    report.set("cosets_per_family", per_family)?;
    report.set("union", union.len())?;
    report.set("deep_total", ctx.deep_syndromes().len())?;
    report.check("covering radius is q - k", ctx.covering_radius() == q - k);
    report.check("every family coset is deep", all_deep);
    report.check("every family has the stated number of cosets", sizes_match);
    report.table = Some(t);
    Ok(())
}

fn completeness(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let r = completeness_check(field, &config.bounds())?;
    report.set("k", r.k)?;
    report.set("quadratics", r.quadratics)?;
    report.set("union", r.union_size)?;
    report.set("total", r.total)?;
    report.check("quadratic families cover every deep coset", r.equal);
    Ok(())
}

fn hypergraph(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let h = build_hypergraph(field, &config.bounds())?;
    let stats = hypergraph_stats(&h);
    let multi = multi_intersections(&h);
    report.set("vertices", stats.vertex_count)?;
    report.set("edges", stats.edge_count)?;
    report.set("edge_sizes", &stats.edge_sizes)?;
    report.set("pair_intersections", &stats.pair_intersections)?;
    report.set("degree_histogram", &stats.degree_histogram)?;
    report.set("multi_intersection_sizes", &multi.sizes)?;
    for (name, holds) in stats.checks() {
        report.check(name, holds);
    }
    report.check(
        "edges through a common vertex share exactly q - 1 raw cosets",
        multi.all_equal_to(field.q() as usize - 1),
    );
    let mut t = Table::new(&["p", "vertices"]);
    for e in &h.edges {
        t.push(vec![json!(e.p), syndromes_json(&e.vertices)]);
    }
    report.table = Some(t);
    Ok(())
}

fn coverage(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let r = cubic_coverage(field, &config.bounds())?;
    report.set("k", r.k)?;
    report.set("cubics", r.cubics)?;
    report.set("covered", r.covered)?;
    report.set("total", r.total)?;
    report.set("fraction", r.fraction)?;
    Ok(())
}

fn ssp(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let k = config.require_k()?;
    let set = match &config.set {
        Some(s) => parse_set(field, s)?,
        None => field.elements(),
    };
    let counts = subset_sum_counts(field, &set, k)?;
    let all_positive = counts.iter().all(|&n| n > 0);
    let q = field.q() as usize;
    let full = set.len() == q;
    let established = full && if field.is_even() { k >= 3 && k + 3 <= q } else { k >= 1 && k < q };
    report.set("k", k)?;
    report.set("set_size", set.len())?;
    report.set("min", counts.iter().min())?;
    report.set("all_positive", all_positive)?;
    if established {
        report.check("every element is a sum of k distinct field elements", all_positive);
    }
    let mut t = Table::new(&["g", "count"]);
    for (g, n) in counts.iter().enumerate() {
        t.push(vec![json!(g), json!(n)]);
    }
    report.table = Some(t);
    Ok(())
}

fn n3(field: &Field, report: &mut Report) -> Result<(), CliError> {
    let rows = n3_sweep(field)?;
    let mismatches = rows.iter().filter(|r| r.bruteforce != r.formula).count();
    report.set("pairs", rows.len())?;
    report.set("mismatches", mismatches)?;
    report.set("zero_count_classes", rows.iter().filter(|r| r.bruteforce == 0).count())?;
    report.check("formula equals brute force for every class", mismatches == 0);
    let mut t = Table::new(&["qpoly", "alpha", "bruteforce", "formula", "r3"]);
    for r in &rows {
        t.push(vec![json!(r.qpoly), json!(r.alpha), json!(r.bruteforce), json!(r.formula), json!(r.r3)]);
    }
    report.table = Some(t);
    Ok(())
}

fn zero_sum_free(config: &ExperimentConfig, field: &Field, report: &mut Report) -> Result<(), CliError> {
    let r = config.require_r()?;
    let set = match &config.set {
        Some(s) => parse_set(field, s)?,
        None if field.m() == 1 => consecutive_candidate(field.p(), r as u32),
        None => return Err(CliError::Usage("zero-sum-free over a non-prime field needs --set".into())),
    };
    let free = is_zero_sum_free(field, &set, r)?;
    report.set("set", set.iter().map(|x| x.0).collect::<Vec<_>>())?;
    report.set("r", r)?;
    report.set("zero_sum_free", free)?;
    if !free {
        return Ok(());
    }
    let (ctx, fam) = zero_sum_free_family(field, &set, r, &config.bounds())?;
    let word = &fam.words[0];
    let code = ctx.code();
    let distance = ctx.distance(word)?;
    let exhaustive = code.error_distance(word, DistanceMethod::Exhaustive, &config.bounds()).ok();
    let outside = fam.cosets.is_disjoint(&known_affine_cosets(&ctx)?);
    report.set("n", code.n())?;
    report.set("k", code.k())?;
    report.set("word", word.reprs())?;
    report.set("distance", distance)?;
    report.set("exhaustive_distance", exhaustive)?;
    report.set("outside_known_families", outside)?;
    report.check("word is a deep hole at distance n - k", distance == code.n() - code.k());
    if let Some(d) = exhaustive {
        report.check("codeword search agrees", d == distance);
    }
    report.check("coset differs from the degree-k and inverse-monomial families", outside);
    Ok(())
}
