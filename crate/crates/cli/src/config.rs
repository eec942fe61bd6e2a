//! Flat `key = value` configuration.

use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use wsn_core::model::{NetworkConfig, Point, RadioEnergyParams, DEFAULT_SENSING_RANGE};
use wsn_core::protocols::echr::DEFAULT_TAU;
use wsn_core::protocols::{ProtocolOptions, Scenario};
use wsn_core::ConfigError;

use crate::error::CliError;

/// Every accepted key, in the order the resolved config is echoed.
/// `bs_x`, `bs_y` and `e_amp` are accepted as aliases.
pub const KEYS: &[&str] = &[
    "nodes",
    "field_width",
    "field_height",
    "bs",
    "initial_energy",
    "packet_bits",
    "control_bits",
    "p_opt",
    "p2",
    "max_rounds",
    "seed",
    "e_elec",
    "e_fs",
    "e_mp",
    "e_da",
    "p_drop_max",
    "d_ref",
    "d_to_bs",
    "ch_n",
    "ch_p",
    "tau1",
    "tau2",
    "sensing_range",
    "comm_range",
    "poi_count",
];

/// Inputs to the `analyze` command that the simulator itself does not use.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisParams {
    /// Distance to the sink used by k_opt; defaults to field center to BS.
    pub d_to_bs: Option<f64>,
    /// Head-count distribution parameters; default to `nodes` and `p_opt`.
    pub ch_n: Option<usize>,
    pub ch_p: Option<f64>,
    pub tau1: f64,
    pub tau2: f64,
    pub sensing_range: f64,
    pub comm_range: f64,
    pub poi_count: usize,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        Self {
            d_to_bs: None,
            ch_n: None,
            ch_p: None,
            tau1: DEFAULT_TAU,
            tau2: DEFAULT_TAU,
            sensing_range: DEFAULT_SENSING_RANGE,
            comm_range: 2.0 * DEFAULT_SENSING_RANGE,
            poi_count: 400,
        }
    }
}

impl AnalysisParams {
    fn validate(&self) -> Result<(), ConfigError> {
        if let Some(d) = self.d_to_bs {
            if !(d > 0.0 && d.is_finite()) {
                return Err(ConfigError::new("d_to_bs", d, "must be > 0"));
            }
        }
        if self.ch_n == Some(0) {
            return Err(ConfigError::new("ch_n", 0, "must be >= 1"));
        }
        if let Some(p) = self.ch_p {
            if !(0.0..=1.0).contains(&p) {
                return Err(ConfigError::new("ch_p", p, "must satisfy 0 <= ch_p <= 1"));
            }
        }
        for (key, v) in [("tau1", self.tau1), ("tau2", self.tau2)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(ConfigError::new(key, v, "must be >= 0"));
            }
        }
        for (key, v) in [
            ("sensing_range", self.sensing_range),
            ("comm_range", self.comm_range),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::new(key, v, "must be > 0"));
            }
        }
        Ok(())
    }
}

/// Fully resolved and validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedConfig {
    pub scenario: Scenario,
    pub analysis: AnalysisParams,
}

impl ResolvedConfig {
    /// `(key, value)` pairs for every key, re-parseable by [`parse_config`].
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let n = &self.scenario.network;
        let r = &self.scenario.radio;
        let o = &self.scenario.options;
        let a = &self.analysis;
        let auto = |v: Option<String>| v.unwrap_or_else(|| "auto".to_string());
        let values = [
            n.node_count.to_string(),
            n.field_width.to_string(),
            n.field_height.to_string(),
            n.bs_position.to_string(),
            n.initial_energy.to_string(),
            n.packet_bits.to_string(),
            o.control_bits.to_string(),
            n.p_opt.to_string(),
            auto(o.p2.map(|v| v.to_string())),
            n.max_rounds.to_string(),
            n.seed.to_string(),
            r.e_elec.to_string(),
            r.e_fs.to_string(),
            r.e_mp.to_string(),
            r.e_da.to_string(),
            o.drop_max.to_string(),
            auto(o.drop_ref.map(|v| v.to_string())),
            auto(a.d_to_bs.map(|v| v.to_string())),
            auto(a.ch_n.map(|v| v.to_string())),
            auto(a.ch_p.map(|v| v.to_string())),
            a.tau1.to_string(),
            a.tau2.to_string(),
            a.sensing_range.to_string(),
            a.comm_range.to_string(),
            a.poi_count.to_string(),
        ];
        KEYS.iter().copied().zip(values).collect()
    }

    /// Distance used for k_opt.
    pub fn d_to_bs(&self) -> f64 {
        let n = &self.scenario.network;
        self.analysis
            .d_to_bs
            .unwrap_or_else(|| n.field().center().distance(n.bs_position))
    }
}

struct Draft {
    network: NetworkConfig,
    radio: RadioEnergyParams,
    options: ProtocolOptions,
    analysis: AnalysisParams,
}

fn value<T: FromStr>(
    key: &'static str,
    raw: &str,
    constraint: &'static str,
) -> Result<T, ConfigError> {
    raw.parse()
        .map_err(|_| ConfigError::new(key, raw, constraint))
}

fn optional<T: FromStr>(
    key: &'static str,
    raw: &str,
    constraint: &'static str,
) -> Result<Option<T>, ConfigError> {
    if raw == "auto" {
        Ok(None)
    } else {
        value(key, raw, constraint).map(Some)
    }
}

fn point(key: &'static str, raw: &str) -> Result<Point, ConfigError> {
    let bad = || ConfigError::new(key, raw, "expected `x,y`");
    let (x, y) = raw.split_once(',').ok_or_else(bad)?;
    let x = x.trim().parse().map_err(|_| bad())?;
    let y = y.trim().parse().map_err(|_| bad())?;
    Ok(Point::new(x, y))
}

const NUM: &str = "expected a number";
const INT: &str = "expected a non-negative integer";

impl Draft {
    fn set(&mut self, key: &str, raw: &str, origin: &str) -> Result<(), CliError> {
        let (n, r, o, a) = (
            &mut self.network,
            &mut self.radio,
            &mut self.options,
            &mut self.analysis,
        );
        match key {
            "nodes" => n.node_count = value("nodes", raw, INT)?,
            "field_width" => n.field_width = value("field_width", raw, NUM)?,
            "field_height" => n.field_height = value("field_height", raw, NUM)?,
            "bs" => n.bs_position = point("bs", raw)?,
            "bs_x" => n.bs_position.x = value("bs_x", raw, NUM)?,
            "bs_y" => n.bs_position.y = value("bs_y", raw, NUM)?,
            "initial_energy" => n.initial_energy = value("initial_energy", raw, NUM)?,
            "packet_bits" => n.packet_bits = value("packet_bits", raw, INT)?,
            "control_bits" => o.control_bits = value("control_bits", raw, INT)?,
            "p_opt" => n.p_opt = value("p_opt", raw, NUM)?,
            "p2" => o.p2 = optional("p2", raw, NUM)?,
            "max_rounds" => n.max_rounds = value("max_rounds", raw, INT)?,
            "seed" => n.seed = value("seed", raw, INT)?,
            "e_elec" => r.e_elec = value("e_elec", raw, NUM)?,
            "e_fs" | "e_amp" => r.e_fs = value("e_fs", raw, NUM)?,
            "e_mp" => r.e_mp = value("e_mp", raw, NUM)?,
            "e_da" => r.e_da = value("e_da", raw, NUM)?,
            "p_drop_max" => o.drop_max = value("p_drop_max", raw, NUM)?,
            "d_ref" => o.drop_ref = optional("d_ref", raw, NUM)?,
            "d_to_bs" => a.d_to_bs = optional("d_to_bs", raw, NUM)?,
            "ch_n" => a.ch_n = optional("ch_n", raw, INT)?,
            "ch_p" => a.ch_p = optional("ch_p", raw, NUM)?,
            "tau1" => a.tau1 = value("tau1", raw, NUM)?,
            "tau2" => a.tau2 = value("tau2", raw, NUM)?,
            "sensing_range" => a.sensing_range = value("sensing_range", raw, NUM)?,
            "comm_range" => a.comm_range = value("comm_range", raw, NUM)?,
            "poi_count" => a.poi_count = value("poi_count", raw, INT)?,
            _ => {
                return Err(CliError::UnknownKey {
                    key: key.to_string(),
                    origin: origin.to_string(),
                })
            }
        }
        Ok(())
    }
}

fn split_pair<'a>(text: &'a str, origin: &str) -> Result<(&'a str, &'a str), CliError> {
    match text.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim(), v.trim())),
        _ => Err(CliError::Syntax {
            origin: origin.to_string(),
            text: text.to_string(),
        }),
    }
}

/// Parses config file text. Blank lines and `#` comments are ignored.
pub fn parse_config_text(text: &str, overrides: &[String]) -> Result<ResolvedConfig, CliError> {
    parse_with_origin(text, "config", overrides)
}

fn parse_with_origin(
    text: &str,
    name: &str,
    overrides: &[String],
) -> Result<ResolvedConfig, CliError> {
    let mut draft = Draft {
        network: NetworkConfig::default(),
        radio: RadioEnergyParams::default(),
        options: ProtocolOptions::default(),
        analysis: AnalysisParams::default(),
    };
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let origin = format!("{name} line {}", i + 1);
        let (k, v) = split_pair(line, &origin)?;
        draft.set(k, v, &origin)?;
    }
    for o in overrides {
        let (k, v) = split_pair(o, "--set")?;
        draft.set(k, v, "--set")?;
    }
    draft.analysis.validate()?;
    let scenario = Scenario::new(draft.network, draft.radio, draft.options)?;
    Ok(ResolvedConfig {
        scenario,
        analysis: draft.analysis,
    })
}

/// Reads the optional config file and applies `overrides` (`key=value`)
/// on top, in order.
pub fn parse_config(path: Option<&Path>, overrides: &[String]) -> Result<ResolvedConfig, CliError> {
    match path {
        None => parse_with_origin("", "config", overrides),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| CliError::Read {
                path: p.to_path_buf(),
                source,
            })?;
            parse_with_origin(&text, &p.display().to_string(), overrides)
        }
    }
}

/// `key=value` override string.
pub fn pair(key: &str, value: impl Display) -> String {
    format!("{key}={value}")
}
