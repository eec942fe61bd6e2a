//! The `simulate`, `compare` and `analyze` commands.

use std::fs;
use std::path::{Path, PathBuf};

use wsn_core::analytics::{
    ch_count_pmf, ch_stats, expected_dist_to_ch, expected_members, k_opt, ChStats, Kopt, KoptInputs,
};
use wsn_core::harness::{compare_protocols, run_simulation};
use wsn_core::model::deploy_network;
use wsn_core::protocols::echr::{echr_assign_levels, echr_select_root, scatter_pois};
use wsn_core::protocols::Protocol;

use crate::config::ResolvedConfig;
use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Comment block placed at the top of every output file.
pub fn provenance(command: &str, seed: &str, cfg: &ResolvedConfig) -> String {
    let mut s = format!("# wsnsim {VERSION}\n# command: {command}\n# seed: {seed}\n");
    for (k, v) in cfg.entries() {
        s.push_str(&format!("# config: {k} = {v}\n"));
    }
    s
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| CliError::Write {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Runs one protocol on the configured seed and writes
/// `<protocol>_seed<N>.csv`.
pub fn cmd_simulate(
    cfg: &ResolvedConfig,
    protocol: Protocol,
    out: &Path,
) -> Result<PathBuf, CliError> {
    let ts = run_simulation(&cfg.scenario, protocol)?;
    let seed = cfg.scenario.network.seed;
    let header = provenance(&format!("simulate {protocol}"), &seed.to_string(), cfg);
    write(
        out,
        &format!("{protocol}_seed{seed}.csv"),
        &(header + &ts.to_csv()),
    )
}

/// Runs every protocol over every seed and writes the per-run CSV, the
/// summary CSV and the text report. Returns the text report.
pub fn cmd_compare(
    cfg: &ResolvedConfig,
    protocols: &[Protocol],
    seeds: &[u64],
    out: &Path,
) -> Result<String, CliError> {
    if protocols.is_empty() || seeds.is_empty() {
        return Err(CliError::Usage(
            "compare needs at least one protocol and one seed".into(),
        ));
    }
    let report = compare_protocols(&cfg.scenario, protocols, seeds)?;
    let names: Vec<&str> = protocols.iter().map(|p| p.name()).collect();
    let header = provenance(
        &format!("compare {}", names.join(",")),
        &seed_label(seeds),
        cfg,
    );
    write(
        out,
        "compare_runs.csv",
        &(header.clone() + &report.runs_csv()),
    )?;
    write(
        out,
        "compare_summary.csv",
        &(header.clone() + &report.summary_csv()),
    )?;
    let text = report.to_text();
    write(out, "compare_report.txt", &(header + &text))?;
    Ok(text)
}

fn seed_label(seeds: &[u64]) -> String {
    let contiguous = seeds.windows(2).all(|w| w[1] == w[0] + 1);
    match seeds {
        [one] => one.to_string(),
        [first, .., last] if contiguous => format!("{first}..{last}"),
        _ => seeds
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EchrSummary {
    pub root: usize,
    pub weight: f64,
    pub max_level: u32,
    pub disconnected: usize,
}

/// Closed-form quantities for a resolved configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub half_side: f64,
    pub d_to_bs: f64,
    pub k_opt: Kopt,
    pub ch_n: usize,
    pub ch_p: f64,
    pub ch_stats: ChStats,
    pub expected_members: f64,
    pub expected_dist_to_ch: f64,
    /// `(k, expected_members, expected_dist_to_ch)`.
    pub table: Vec<(usize, f64, f64)>,
    pub echr: Option<EchrSummary>,
}

pub fn analyze(cfg: &ResolvedConfig) -> Result<Analysis, CliError> {
    let net = &cfg.scenario.network;
    let radio = &cfg.scenario.radio;
    // equal-area square for non-square fields
    let half_side = (net.field_width * net.field_height).sqrt() / 2.0;
    let d_to_bs = cfg.d_to_bs();
    let k = k_opt(&KoptInputs {
        n: net.node_count as f64,
        e_fs: radio.e_fs,
        e_mp: radio.e_mp,
        half_side,
        d_to_bs,
        e_elec: radio.e_elec,
    })?;
    let ch_n = cfg.analysis.ch_n.unwrap_or(net.node_count);
    let ch_p = cfg.analysis.ch_p.unwrap_or(net.p_opt);
    let stats = ch_stats(&ch_count_pmf(ch_n, ch_p));

    let n = net.node_count;
    let k_at = k.rounded.min(n);
    let k_max = (2 * k.rounded).max(10).min(n);
    let table = (1..=k_max)
        .map(|k| {
            Ok((
                k,
                expected_members(n, k)?,
                expected_dist_to_ch(half_side, k)?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut state = deploy_network(net)?;
    for node in &mut state.nodes {
        node.sensing_range = cfg.analysis.sensing_range;
    }
    let pois = scatter_pois(net.field(), cfg.analysis.poi_count, state.rng_mut());
    let echr = echr_select_root(
        &state,
        net.bs_position,
        &pois,
        cfg.analysis.tau1,
        cfg.analysis.tau2,
    )
    .map(|sel| {
        let levels = echr_assign_levels(&mut state, sel.root, cfg.analysis.comm_range);
        EchrSummary {
            root: sel.root,
            weight: sel.weight,
            max_level: levels.levels.iter().flatten().copied().max().unwrap_or(0),
            disconnected: levels.disconnected.len(),
        }
    });

    Ok(Analysis {
        half_side,
        d_to_bs,
        k_opt: k,
        ch_n,
        ch_p,
        ch_stats: stats,
        expected_members: expected_members(n, k_at)?,
        expected_dist_to_ch: expected_dist_to_ch(half_side, k_at)?,
        table,
        echr,
    })
}

/// Fixed-point with up to 12 decimals, trailing zeros removed; scientific
/// for small magnitudes.
pub fn fmt_num(v: f64) -> String {
    if v != 0.0 && v.abs() < 1e-3 {
        return format!("{v:e}");
    }
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            ("half_side", fmt_num(self.half_side)),
            ("d_to_bs", fmt_num(self.d_to_bs)),
            ("k_opt", fmt_num(self.k_opt.value)),
            ("k_opt_rounded", self.k_opt.rounded.to_string()),
            ("ch_n", self.ch_n.to_string()),
            ("ch_p", fmt_num(self.ch_p)),
            ("ch_ave", fmt_num(self.ch_stats.ave)),
            ("ch_dev", fmt_num(self.ch_stats.dev)),
            (
                "ch_cov",
                self.ch_stats
                    .cov
                    .map_or_else(|| "undefined".to_string(), fmt_num),
            ),
            ("expected_members", fmt_num(self.expected_members)),
            ("expected_dist_to_ch", fmt_num(self.expected_dist_to_ch)),
        ];
        match &self.echr {
            Some(e) => lines.extend([
                ("echr_root", e.root.to_string()),
                ("echr_root_weight", fmt_num(e.weight)),
                ("echr_max_level", e.max_level.to_string()),
                ("echr_disconnected", e.disconnected.to_string()),
            ]),
            None => lines.push(("echr_root", "none".into())),
        }
        lines.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
    }

    pub fn table_csv(&self) -> String {
        let mut s = String::from("k,expected_members,expected_dist_to_ch\n");
        for (k, m, d) in &self.table {
            s.push_str(&format!("{k},{},{}\n", fmt_num(*m), fmt_num(*d)));
        }
        s
    }
}

/// Writes `analysis.txt` and `analysis_k.csv`; returns the analysis.
pub fn cmd_analyze(cfg: &ResolvedConfig, out: &Path) -> Result<Analysis, CliError> {
    let a = analyze(cfg)?;
    let header = provenance("analyze", &cfg.scenario.network.seed.to_string(), cfg);
    write(out, "analysis.txt", &(header.clone() + &a.to_text()))?;
    write(out, "analysis_k.csv", &(header + &a.table_csv()))?;
    Ok(a)
}
