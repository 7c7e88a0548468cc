//! Run configuration: built-in defaults, an INI-style config file, and
//! command-line flags, applied in that order so flags always win.

use std::path::{Path, PathBuf};

use clap::Args;
use vdw_core::constants::PhysicalConstants;
use vdw_core::polarizability::PolarizabilityModel;
use vdw_core::quadrature::QuadratureSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Units {
    Gaussian,
    Natural,
}

impl Units {
    pub fn constants(self) -> PhysicalConstants {
        match self {
            Units::Gaussian => PhysicalConstants::gaussian(),
            Units::Natural => PhysicalConstants::natural(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Units::Gaussian => "gaussian (cgs)",
            Units::Natural => "natural (hbar = c = kB = 1)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

impl Spacing {
    pub fn label(self) -> &'static str {
        match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let n = self.count as f64 - 1.0;
        match self.spacing {
            Spacing::Linear => {
                let step = (self.stop - self.start) / n;
                (0..self.count)
                    .map(|i| self.start + step * i as f64)
                    .collect()
            }
            Spacing::Log => {
                let ls = self.start.ln();
                let step = (self.stop.ln() - ls) / n;
                (0..self.count)
                    .map(|i| (ls + step * i as f64).exp())
                    .collect()
            }
        }
    }
}

/// Flags shared by every verb. Unset flags fall back to the config
/// file and then to the built-in defaults.
#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// INI-style config file; explicit flags override its values
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// First separation of the R grid
    #[arg(long = "R-start")]
    pub r_start: Option<f64>,
    /// Last separation of the R grid
    #[arg(long = "R-stop")]
    pub r_stop: Option<f64>,
    /// Number of R grid points
    #[arg(long = "R-count")]
    pub r_count: Option<usize>,
    /// R grid spacing: linear or log
    #[arg(long = "R-spacing")]
    pub r_spacing: Option<String>,
    /// Proper acceleration (cm/s^2 in gaussian units)
    #[arg(long)]
    pub a: Option<f64>,
    /// First lab time of the t grid
    #[arg(long = "t-start")]
    pub t_start: Option<f64>,
    /// Last lab time of the t grid
    #[arg(long = "t-stop")]
    pub t_stop: Option<f64>,
    /// Number of t grid points
    #[arg(long = "t-count")]
    pub t_count: Option<usize>,
    /// Unit system: gaussian or natural
    #[arg(long)]
    pub units: Option<String>,
    /// Atom A polarizability: static:a0 | lorentz:a0:k0 | table:PATH
    #[arg(long = "alphaA")]
    pub alpha_a: Option<String>,
    /// Atom B polarizability, same syntax as --alphaA
    #[arg(long = "alphaB")]
    pub alpha_b: Option<String>,
    /// Output path; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Relative quadrature tolerance
    #[arg(long = "rel-tol")]
    pub rel_tol: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub r_grid: Grid,
    pub t_grid: Grid,
    pub a: f64,
    pub units: Units,
    pub alpha_a_spec: String,
    pub alpha_b_spec: String,
    pub out: Option<PathBuf>,
    pub rel_tol: Option<f64>,
}

impl RunConfig {
    pub fn defaults() -> Self {
        Self {
            r_grid: Grid {
                start: 1.0,
                stop: 100.0,
                count: 5,
                spacing: Spacing::Log,
            },
            t_grid: Grid {
                start: 0.0,
                stop: 0.0,
                count: 1,
                spacing: Spacing::Linear,
            },
            a: 0.0,
            units: Units::Natural,
            alpha_a_spec: "static:1.0".into(),
            alpha_b_spec: "static:1.0".into(),
            out: None,
            rel_tol: None,
        }
    }

    /// Probe point for the consistency report: deep far zone, well
    /// inside the validity domain.
    pub fn consistency_defaults() -> Self {
        Self {
            r_grid: Grid {
                start: 100.0,
                stop: 100.0,
                count: 1,
                spacing: Spacing::Linear,
            },
            t_grid: Grid {
                start: 100.0,
                stop: 100.0,
                count: 1,
                spacing: Spacing::Linear,
            },
            a: 1e-3,
            ..Self::defaults()
        }
    }

    pub fn resolve(args: &CommonArgs, base: Self) -> Result<Self, String> {
        let mut cfg = base;
        if let Some(path) = &args.config {
            cfg.apply_file(path)?;
        }
        cfg.apply_flags(args)?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut section = String::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            let lineno = idx + 1;
            if let Some(inner) = line.strip_prefix('[') {
                let Some(name) = inner.strip_suffix(']') else {
                    return Err(format!("config line {lineno}: malformed section header"));
                };
                section = name.trim().to_string();
                if !matches!(section.as_str(), "run" | "grid" | "atomA" | "atomB") {
                    return Err(format!("config line {lineno}: unknown section [{section}]"));
                }
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("config line {lineno}: expected key = value"));
            };
            self.apply_kv(&section, key.trim(), value.trim())
                .map_err(|e| format!("config line {lineno}: {e}"))?;
        }
        Ok(())
    }

    fn apply_kv(&mut self, section: &str, key: &str, value: &str) -> Result<(), String> {
        match (section, key) {
            ("run", "a") => self.a = parse_f64(value, "a")?,
            ("run", "t_start") => self.t_grid.start = parse_f64(value, "t_start")?,
            ("run", "t_stop") => self.t_grid.stop = parse_f64(value, "t_stop")?,
            ("run", "t_count") => self.t_grid.count = parse_usize(value, "t_count")?,
            ("run", "units") => self.units = parse_units(value)?,
            ("run", "rel_tol") => self.rel_tol = Some(parse_f64(value, "rel_tol")?),
            ("run", "out") => self.out = Some(PathBuf::from(value)),
            ("grid", "r_start") => self.r_grid.start = parse_f64(value, "r_start")?,
            ("grid", "r_stop") => self.r_grid.stop = parse_f64(value, "r_stop")?,
            ("grid", "r_count") => self.r_grid.count = parse_usize(value, "r_count")?,
            ("grid", "r_spacing") => self.r_grid.spacing = parse_spacing(value)?,
            ("atomA", "model") => self.alpha_a_spec = value.to_string(),
            ("atomB", "model") => self.alpha_b_spec = value.to_string(),
            ("", k) => return Err(format!("key {k} appears before any section")),
            (s, k) => return Err(format!("unknown key {k} in section [{s}]")),
        }
        Ok(())
    }

    fn apply_flags(&mut self, args: &CommonArgs) -> Result<(), String> {
        if let Some(v) = args.r_start {
            self.r_grid.start = v;
        }
        if let Some(v) = args.r_stop {
            self.r_grid.stop = v;
        }
        if let Some(v) = args.r_count {
            self.r_grid.count = v;
        }
        if let Some(v) = &args.r_spacing {
            self.r_grid.spacing = parse_spacing(v)?;
        }
        if let Some(v) = args.a {
            self.a = v;
        }
        if let Some(v) = args.t_start {
            self.t_grid.start = v;
        }
        if let Some(v) = args.t_stop {
            self.t_grid.stop = v;
        }
        if let Some(v) = args.t_count {
            self.t_grid.count = v;
        }
        if let Some(v) = &args.units {
            self.units = parse_units(v)?;
        }
        if let Some(v) = &args.alpha_a {
            self.alpha_a_spec = v.clone();
        }
        if let Some(v) = &args.alpha_b {
            self.alpha_b_spec = v.clone();
        }
        if let Some(v) = &args.out {
            self.out = Some(v.clone());
        }
        if let Some(v) = args.rel_tol {
            self.rel_tol = Some(v);
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), String> {
        if self.r_grid.count < 1 {
            return Err("R grid count must be at least 1".into());
        }
        if !(self.r_grid.start > 0.0) {
            return Err("R grid start must be positive".into());
        }
        if self.r_grid.count > 1 && !(self.r_grid.stop > self.r_grid.start) {
            return Err("R grid must be strictly increasing".into());
        }
        if self.t_grid.count < 1 {
            return Err("t grid count must be at least 1".into());
        }
        if self.t_grid.start < 0.0 {
            return Err("t grid start must be nonnegative".into());
        }
        if self.t_grid.count > 1 && !(self.t_grid.stop > self.t_grid.start) {
            return Err("t grid must be strictly increasing".into());
        }
        if self.a < 0.0 {
            return Err("acceleration must be nonnegative".into());
        }
        if let Some(rt) = self.rel_tol {
            if !(rt > 0.0 && rt < 0.5) {
                return Err("rel-tol must lie in (0, 0.5)".into());
            }
        }
        Ok(())
    }

    pub fn models(&self) -> Result<(PolarizabilityModel, PolarizabilityModel), String> {
        Ok((
            parse_model_spec(&self.alpha_a_spec)?,
            parse_model_spec(&self.alpha_b_spec)?,
        ))
    }

    pub fn consts(&self) -> PhysicalConstants {
        self.units.constants()
    }

    pub fn quadrature(&self) -> QuadratureSpec {
        match self.rel_tol {
            Some(rt) => QuadratureSpec::with_rel_tol(rt),
            None => QuadratureSpec::default(),
        }
    }
}

pub fn parse_model_spec(spec: &str) -> Result<PolarizabilityModel, String> {
    let Some((tag, rest)) = spec.split_once(':') else {
        return Err(format!(
            "model spec '{spec}' must look like static:a0, lorentz:a0:k0, or table:PATH"
        ));
    };
    match tag {
        "static" => {
            let a0 = parse_f64(rest, "static alpha0")?;
            PolarizabilityModel::static_model(a0).map_err(|e| e.to_string())
        }
        "lorentz" => {
            let Some((a0, k0)) = rest.split_once(':') else {
                return Err(format!("model spec '{spec}' needs lorentz:a0:k0"));
            };
            let a0 = parse_f64(a0, "lorentz alpha0")?;
            let k0 = parse_f64(k0, "lorentz k0")?;
            PolarizabilityModel::lorentz(a0, k0).map_err(|e| e.to_string())
        }
        "table" => PolarizabilityModel::from_csv_path(rest).map_err(|e| e.to_string()),
        other => Err(format!("unknown polarizability model '{other}'")),
    }
}

fn parse_f64(value: &str, what: &str) -> Result<f64, String> {
    value
        .parse::<f64>()
        .map_err(|_| format!("cannot parse {what} from '{value}'"))
}

fn parse_usize(value: &str, what: &str) -> Result<usize, String> {
    value
        .parse::<usize>()
        .map_err(|_| format!("cannot parse {what} from '{value}'"))
}

fn parse_units(value: &str) -> Result<Units, String> {
    match value.to_ascii_lowercase().as_str() {
        "gaussian" => Ok(Units::Gaussian),
        "natural" => Ok(Units::Natural),
        other => Err(format!("unknown unit system '{other}'")),
    }
}

fn parse_spacing(value: &str) -> Result<Spacing, String> {
    match value.to_ascii_lowercase().as_str() {
        "linear" => Ok(Spacing::Linear),
        "log" => Ok(Spacing::Log),
        other => Err(format!("unknown grid spacing '{other}'")),
    }
}
