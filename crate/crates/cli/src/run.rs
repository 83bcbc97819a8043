//! Executes a config and assembles the report.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use schreier_core::bounds::{derived_index_check, nilpotent_gap_bound, BoundReport, ThetaProfile, Verdict};
use schreier_core::format::{fmt_f64, write_multiset};
use schreier_core::montecarlo::verify_theorem1;
use schreier_core::permcore::{lower_central_series, FiniteGroup, Transversal};
use schreier_core::schreier::{dedup_counterexample_search, rs_induce, rs_induce_multiset, SchreierGraph, SearchOptions, SymmetricMultiset};
use schreier_core::spectral::{sym_eigenvalues_capped, SpectralSummary, EIGEN_TOL};
use schreier_core::sweep::run_all;

use crate::config::{Command, ExperimentConfig};
use crate::load::{cache_dir_from_env, load_group, load_sets, load_stabilizer, load_subgroup};

/// Tolerance for matching a Schreier eigenvalue against the Cayley spectrum.
const CONTAINMENT_TOL: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub order: usize,
    pub degree: usize,
    pub generators: Vec<String>,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub stabilizer_order: usize,
    pub omega_size: usize,
}

/// Everything a run produces.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub seed: u64,
    pub group: Option<GroupInfo>,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
    #[serde(skip)]
    pub table: Table,
}

/// Rows for the CSV rendering.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Table {
        Table { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

fn f(x: f64) -> String {
    fmt_f64(x)
}

fn opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

fn verdict(name: String, lhs: f64, rhs: f64, pass: bool) -> Verdict {
    Verdict { name, lhs, rhs, pass }
}

fn at_most(name: String, lhs: f64, rhs: f64, tol: f64) -> Verdict {
    verdict(name, lhs, rhs, lhs <= rhs + tol)
}

struct Ctx {
    g: FiniteGroup,
    y: FiniteGroup,
    cosets: Transversal,
}

impl Ctx {
    fn summary(&self, s: &SymmetricMultiset, cap: usize) -> Result<(SchreierGraph, SpectralSummary)> {
        let graph = SchreierGraph::on_cosets(&self.cosets, s)?;
        let ev = sym_eigenvalues_capped(&graph.walk(), cap)?;
        Ok((graph, SpectralSummary::from_eigenvalues(ev)))
    }
}

fn load_ctx(cfg: &ExperimentConfig) -> Result<Ctx> {
    let spec = cfg.group.as_deref().context("--group is required")?;
    let g = load_group(spec, cfg.caps.order, cache_dir_from_env().as_deref()).with_context(|| format!("--group {spec}"))?;
    let y = load_stabilizer(&g, &cfg.action).with_context(|| format!("--action {}", cfg.action))?;
    let cosets = Transversal::new(&g, &y).with_context(|| format!("--action {}", cfg.action))?;
    if cosets.index() > cfg.caps.dim {
        bail!("--cap-dim: {} cosets exceed the matrix dimension cap {}", cosets.index(), cfg.caps.dim);
    }
    Ok(Ctx { g, y, cosets })
}

fn group_info(ctx: &Ctx) -> GroupInfo {
    GroupInfo {
        order: ctx.g.order(),
        degree: ctx.g.degree(),
        generators: ctx.g.generators().iter().map(|p| p.to_string()).collect(),
        abelian: ctx.g.is_abelian(),
        nilpotency_class: lower_central_series(&ctx.g).class,
        stabilizer_order: ctx.y.order(),
        omega_size: ctx.cosets.index(),
    }
}

fn sets(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Vec<SymmetricMultiset>> {
    load_sets(&ctx.g, &cfg.set, cfg.symmetrize, cfg.seed).with_context(|| format!("--set {}", cfg.set))
}

fn dump_path(base: &Path, i: usize, count: usize) -> PathBuf {
    if count == 1 {
        base.to_path_buf()
    } else {
        let mut p = base.as_os_str().to_owned();
        p.push(format!(".{i}"));
        p.into()
    }
}

type Output = (Value, Vec<Verdict>, Table);

fn spectrum(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let sets = sets(cfg, ctx)?;
    let mut verdicts = Vec::new();
    let mut table = Table::new(&["index", "size", "connected", "bipartite", "gap", "lambda2", "lambda_min", "two_sided_lambda"]);
    let mut results = Vec::new();
    let trivial = FiniteGroup::trivial(ctx.g.degree());
    let regular = Transversal::new(&ctx.g, &trivial)?;
    for (i, s) in sets.iter().enumerate() {
        let (graph, summary) = ctx.summary(s, cfg.caps.dim)?;
        let conn = graph.connectivity();
        if let Some(base) = &cfg.dump_matrix {
            let path = dump_path(base, i, sets.len());
            fs::write(&path, graph.walk().to_dump()).with_context(|| format!("--dump-matrix {}", path.display()))?;
        }
        if !conn.connected {
            verdicts.push(at_most(format!("disconnected_gap[{i}]"), summary.gap, 0.0, EIGEN_TOL));
        }
        if ctx.g.order() <= cfg.caps.dim && ctx.y.order() > 1 {
            let cayley = sym_eigenvalues_capped(&SchreierGraph::on_cosets(&regular, s)?.walk(), cfg.caps.dim)?;
            let worst = summary
                .eigenvalues
                .iter()
                .map(|l| cayley.iter().map(|c| (c - l).abs()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            verdicts.push(at_most(format!("containment[{i}]"), worst, CONTAINMENT_TOL, 0.0));
        }
        table.push(vec![
            i.to_string(),
            s.size().to_string(),
            conn.connected.to_string(),
            conn.bipartite.to_string(),
            f(summary.gap),
            opt(summary.lambda2),
            opt(summary.lambda_min),
            f(summary.two_sided_lambda),
        ]);
        results.push(json!({
            "index": i,
            "multiset": write_multiset(s.as_multiset()),
            "size": s.size(),
            "connected": conn.connected,
            "components": conn.components,
            "bipartite": conn.bipartite,
            "spectrum": summary,
        }));
    }
    Ok((Value::Array(results), verdicts, table))
}

fn bounds(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let sets = sets(cfg, ctx)?;
    let profile = ThetaProfile::compute(&ctx.g, &ctx.y, cfg.caps.subgroups).context("--cap-subgroups")?;
    let class = lower_central_series(&ctx.g).class;
    let mut verdicts = Vec::new();
    let mut table = Table::new(&[
        "index", "size", "theta", "glwi_bound", "glwi_argmin_order", "abelian_bound", "nilpotent_bound", "nilpotent_class",
        "measured_gap", "measured_lambda", "min_set_size", "pass",
    ]);
    let mut results = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let (graph, summary) = ctx.summary(s, cfg.caps.dim)?;
        let report = BoundReport::assemble(
            &profile,
            ctx.g.is_abelian(),
            class,
            &graph,
            summary.gap,
            summary.two_sided_lambda,
            cfg.epsilon,
        )?;
        let vs = report.verdicts();
        table.push(vec![
            i.to_string(),
            s.size().to_string(),
            f(report.theta),
            f(report.glwi_bound),
            report.glwi_argmin_order.to_string(),
            opt(report.abelian_bound),
            opt(report.nilpotent_bound),
            report.nilpotent_class.map(|c| c.to_string()).unwrap_or_default(),
            f(report.measured_gap),
            f(report.measured_lambda),
            opt(report.min_set_size),
            vs.iter().all(|v| v.pass).to_string(),
        ]);
        verdicts.extend(vs.into_iter().map(|v| Verdict { name: format!("{}[{i}]", v.name), ..v }));
        results.push(json!({ "index": i, "multiset": write_multiset(s.as_multiset()), "report": report }));
    }
    Ok((Value::Array(results), verdicts, table))
}

fn theta(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let profile = ThetaProfile::compute(&ctx.g, &ctx.y, cfg.caps.subgroups).context("--cap-subgroups")?;
    let t = profile.theta();
    let omega = profile.omega_size as f64;
    let verdicts = vec![
        at_most("theta_range".into(), 1.0, t, 1e-12),
        at_most("theta_range".into(), t, omega, 1e-9),
    ];
    let mut table = Table::new(&["order", "index", "quotient", "log_term"]);
    for e in &profile.entries {
        table.push(vec![e.order.to_string(), e.index.to_string(), e.quotient.to_string(), f(e.log_term())]);
    }
    let argmax = profile.argmax();
    let results = json!({
        "theta": t,
        "log_theta": profile.log_theta(),
        "argmax": argmax,
        "argmax_order": profile.entries[argmax].order,
        "subgroups": profile.entries.len(),
        "entries": profile.entries,
    });
    Ok((results, verdicts, table))
}

fn induce(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let spec = cfg.subgroup.as_deref().context("--subgroup is required")?;
    let h = load_subgroup(&ctx.g, spec).with_context(|| format!("--subgroup {spec}"))?;
    if !ctx.y.is_subgroup_of(&h) {
        bail!("--subgroup {spec}: does not contain the stabilizer");
    }
    let t = Transversal::new(&ctx.g, &h)?;
    let h_cosets = Transversal::new(&h, &ctx.y)?;
    let sets = sets(cfg, ctx)?;
    let mut verdicts = Vec::new();
    let mut table = Table::new(&["index", "size", "induced_size", "gap_g", "gap_h", "lambda_g", "lambda_h"]);
    let mut results = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let bar = rs_induce(&t, s)?;
        let (_, big) = ctx.summary(s, cfg.caps.dim)?;
        let small_graph = SchreierGraph::on_cosets(&h_cosets, &bar)?;
        let small = SpectralSummary::from_eigenvalues(sym_eigenvalues_capped(&small_graph.walk(), cfg.caps.dim)?);
        let expected = t.index() * s.size();
        verdicts.push(verdict(format!("size_law[{i}]"), bar.size() as f64, expected as f64, bar.size() == expected));
        let inverse_ok = bar.as_multiset().inverse() == rs_induce_multiset(&t, &s.as_multiset().inverse())?;
        verdicts.push(verdict(format!("inverse_law[{i}]"), 0.0, 0.0, inverse_ok));
        verdicts.push(at_most(format!("induced_gap[{i}]"), big.gap, small.gap, EIGEN_TOL));
        verdicts.push(at_most(format!("induced_lambda[{i}]"), small.two_sided_lambda, big.two_sided_lambda, EIGEN_TOL));
        table.push(vec![
            i.to_string(),
            s.size().to_string(),
            bar.size().to_string(),
            f(big.gap),
            f(small.gap),
            f(big.two_sided_lambda),
            f(small.two_sided_lambda),
        ]);
        results.push(json!({
            "index": i,
            "multiset": write_multiset(s.as_multiset()),
            "induced": write_multiset(bar.as_multiset()),
            "gap_g": big.gap,
            "gap_h": small.gap,
            "lambda_g": big.two_sided_lambda,
            "lambda_h": small.two_sided_lambda,
        }));
    }
    let results = json!({
        "subgroup_order": h.order(),
        "transversal": t.reps().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "instances": results,
    });
    Ok((results, verdicts, table))
}

fn thm1(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let (eps, delta) = (cfg.epsilon_or_default(), cfg.delta_or_default());
    let stats = verify_theorem1(&ctx.g, &ctx.y, eps, delta, cfg.trials, cfg.seed).context("--epsilon/--delta")?;
    let verdicts = vec![
        at_most("tail".into(), stats.empirical_tail, stats.tail_threshold(), 0.0),
        at_most("mean".into(), stats.empirical_mean, 2.0 * eps, 0.0),
    ];
    let mut table = Table::new(&["trial", "lambda"]);
    for (i, l) in stats.lambdas.iter().enumerate() {
        table.push(vec![i.to_string(), f(*l)]);
    }
    Ok((serde_json::to_value(&stats)?, verdicts, table))
}

fn nilpotent(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let Some(class) = lower_central_series(&ctx.g).class else {
        bail!("--group {}: not nilpotent", cfg.group.as_deref().unwrap_or_default());
    };
    let sets = sets(cfg, ctx)?;
    let omega = ctx.cosets.index();
    let mut verdicts = Vec::new();
    let mut table = Table::new(&[
        "index", "size", "gap", "nilpotent_bound", "class", "generates", "d", "c", "beta", "derived_lhs", "derived_rhs",
        "derived_ok",
    ]);
    let mut results = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let (_, summary) = ctx.summary(s, cfg.caps.dim)?;
        let bound = if s.size() >= 2 { Some(nilpotent_gap_bound(omega, s.size(), class)?) } else { None };
        if let Some(b) = bound {
            verdicts.push(at_most(format!("nilpotent[{i}]"), summary.gap, b, EIGEN_TOL));
        }
        let check = derived_index_check(&ctx.g, &ctx.y, s)?;
        if let Some(rhs) = check.rhs.filter(|_| check.hypotheses_hold) {
            // |G:Y|^β ≤ |G:G'Y|, compared in log space
            verdicts.push(verdict(format!("derived_index[{i}]"), rhs.ln(), check.lhs.ln(), check.ok));
        }
        table.push(vec![
            i.to_string(),
            s.size().to_string(),
            f(summary.gap),
            opt(bound),
            class.to_string(),
            check.generates.to_string(),
            check.d.to_string(),
            check.c.map(|c| c.to_string()).unwrap_or_default(),
            opt(check.beta),
            f(check.lhs),
            opt(check.rhs),
            check.ok.to_string(),
        ]);
        results.push(json!({
            "index": i,
            "multiset": write_multiset(s.as_multiset()),
            "gap": summary.gap,
            "nilpotent_bound": bound,
            "derived_index": check,
        }));
    }
    Ok((json!({ "class": class, "instances": results }), verdicts, table))
}

fn search(cfg: &ExperimentConfig, ctx: &Ctx) -> Result<Output> {
    let spec = cfg.subgroup.as_deref().context("--subgroup is required")?;
    let h = load_subgroup(&ctx.g, spec).with_context(|| format!("--subgroup {spec}"))?;
    let outcome = dedup_counterexample_search(&ctx.g, &h, &ctx.y, &SearchOptions::default())
        .with_context(|| format!("--subgroup {spec}"))?;
    // witnesses are the point of the search; only the multiset law is asserted
    let verdicts = vec![at_most("multiset_law".into(), outcome.multiset_violations.len() as f64, 0.0, 0.0)];
    let mut table = Table::new(&["subset", "induced_size", "gap_g", "gap_h_set", "gap_h_multiset"]);
    for w in &outcome.witnesses {
        table.push(vec![
            w.subset.iter().map(|(p, _)| p.to_string()).collect::<Vec<_>>().join(" "),
            w.induced.size().to_string(),
            f(w.gap_g),
            f(w.gap_h_set),
            f(w.gap_h_multiset),
        ]);
    }
    let witnesses: Vec<Value> = outcome
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "subset": write_multiset(w.subset.as_multiset()),
                "induced": write_multiset(w.induced.as_multiset()),
                "gap_g": w.gap_g,
                "gap_h_set": w.gap_h_set,
                "gap_h_multiset": w.gap_h_multiset,
            })
        })
        .collect();
    let results = json!({
        "subgroup_order": h.order(),
        "instances": outcome.instances,
        "transversals_tried": outcome.transversals_tried,
        "transversal": outcome.transversal.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "witness_count": outcome.witnesses.len(),
        "witnesses": witnesses,
        "multiset_violations": outcome.multiset_violations.len(),
    });
    Ok((results, verdicts, table))
}

fn sweep(cfg: &ExperimentConfig) -> Result<Output> {
    let outcomes = run_all(cfg.seed);
    let verdicts = outcomes
        .iter()
        .map(|o| verdict(format!("criterion {}", o.id), o.violations as f64, 0.0, o.pass))
        .collect();
    let mut table = Table::new(&["id", "title", "instances", "violations", "pass", "elapsed_secs", "detail"]);
    for o in &outcomes {
        table.push(vec![
            o.id.to_string(),
            o.title.clone(),
            o.instances.to_string(),
            o.violations.to_string(),
            o.pass.to_string(),
            f(o.elapsed_secs),
            o.detail.clone(),
        ]);
    }
    Ok((serde_json::to_value(&outcomes)?, verdicts, table))
}

/// Runs the configured command.
pub fn run(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate().map_err(anyhow::Error::msg)?;
    let (group, (results, verdicts, table)) = if cfg.command == Command::Sweep {
        (None, sweep(cfg)?)
    } else {
        let ctx = load_ctx(cfg)?;
        let out = match cfg.command {
            Command::Spectrum => spectrum(cfg, &ctx)?,
            Command::Bounds => bounds(cfg, &ctx)?,
            Command::Theta => theta(cfg, &ctx)?,
            Command::RsInduce => induce(cfg, &ctx)?,
            Command::VerifyThm1 => thm1(cfg, &ctx)?,
            Command::VerifyNilpotent => nilpotent(cfg, &ctx)?,
            Command::SearchCounterexample => search(cfg, &ctx)?,
            Command::Sweep => unreachable!("handled above"),
        };
        (Some(group_info(&ctx)), out)
    };
    let pass = verdicts.iter().all(|v| v.pass);
    Ok(Report { config: cfg.clone(), seed: cfg.seed, group, results, verdicts, pass, table })
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// The table as CSV, preceded by a `#` line echoing the config.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!("# config: {}\n", serde_json::to_string(&self.config)?);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.table.header)?;
        for row in &self.table.rows {
            w.write_record(row)?;
        }
        out.push_str(&String::from_utf8(w.into_inner()?)?);
        Ok(out)
    }

    pub fn render(&self) -> Result<String> {
        match self.config.format {
            crate::config::OutputFormat::Json => self.to_json(),
            crate::config::OutputFormat::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SetSpec;

    fn cfg(command: Command, group: &str) -> ExperimentConfig {
        ExperimentConfig { group: Some(group.into()), ..ExperimentConfig::new(command) }
    }

    #[test]
    fn cyclic_six_spectrum() {
        let r = run(&cfg(Command::Spectrum, "cyclic:6")).unwrap();
        let gap = r.results[0]["spectrum"]["gap"].as_f64().unwrap();
        assert!((gap - 0.5).abs() < 1e-12);
        assert!(r.pass);
    }

    #[test]
    fn cyclic_four_bounds() {
        let r = run(&cfg(Command::Bounds, "cyclic:4")).unwrap();
        let report = &r.results[0]["report"];
        assert!((report["glwi_bound"].as_f64().unwrap() - 1.25).abs() < 1e-12);
        assert!((report["measured_gap"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert!(r.pass);
    }

    #[test]
    fn single_involution_fails_the_bounds() {
        let c = ExperimentConfig { set: SetSpec::Inline("(1 2)".into()), ..cfg(Command::Bounds, "cyclic:2") };
        let r = run(&c).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn sweep_table_has_twelve_rows() {
        let r = run(&ExperimentConfig::new(Command::Sweep)).unwrap();
        assert_eq!(r.table.rows.len(), 12);
        assert_eq!(r.pass, r.verdicts.iter().all(|v| v.pass));
    }
}
