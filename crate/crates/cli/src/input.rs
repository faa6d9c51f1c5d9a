//! Scenario and report files.

use std::fs;
use std::path::Path;

use evifuse::neutro::{parse_component, NValue, SubsetU};
use evifuse::nfusion::{NItem, NReport};
use evifuse::{DomainMode, Frame, Granule};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Classical sources on the power set.
    Dst,
    /// Sources on the hyper-power set; totals other than one are allowed.
    Dsm,
}

impl Model {
    pub fn mode(self) -> DomainMode {
        match self {
            Self::Dst => DomainMode::PowerSet,
            Self::Dsm => DomainMode::HyperPowerSet,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Source {
    pub name: String,
    /// Expression to mass, as a number or a decimal string.
    pub masses: Map<String, Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub frame: Vec<String>,
    pub model: Model,
    pub sources: Vec<Source>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn number(v: &Value, what: &str) -> Result<f64> {
    let x = match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    };
    x.ok_or_else(|| CliError::Invalid(format!("{what}: `{v}` is not a number")))
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self> {
        parse_json(path)
    }

    pub fn frame(&self) -> Result<Frame> {
        Ok(Frame::new(self.frame.iter().cloned())?)
    }

    /// Validated granules in file order.
    pub fn granules(&self) -> Result<Vec<(String, Granule)>> {
        let frame = self.frame()?;
        self.sources
            .iter()
            .map(|s| {
                let mut entries = Vec::with_capacity(s.masses.len());
                for (expr, v) in &s.masses {
                    let p = frame.prop(expr).map_err(|e| {
                        CliError::Invalid(format!("source `{}`: `{expr}`: {e}", s.name))
                    })?;
                    entries.push((p, number(v, &format!("source `{}`", s.name))?));
                }
                let g = Granule::new(&frame, entries, self.model.mode(), self.model == Model::Dsm)
                    .map_err(|e| CliError::Invalid(format!("source `{}`: {e}", s.name)))?;
                Ok((s.name.clone(), g))
            })
            .collect()
    }

    /// One-source scenario holding `g`, with masses at full precision.
    pub fn from_granule(name: &str, g: &Granule) -> Self {
        let model = match g.mode() {
            DomainMode::PowerSet => Model::Dst,
            DomainMode::HyperPowerSet => Model::Dsm,
        };
        let masses = g
            .masses()
            .map(|(p, m)| (g.frame().describe(p), Value::from(m)))
            .collect();
        Self {
            frame: g.frame().labels().to_vec(),
            model,
            sources: vec![Source {
                name: name.to_string(),
                masses,
            }],
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
struct ItemFile {
    prop: String,
    #[serde(rename = "T")]
    t: Value,
    #[serde(rename = "I")]
    i: Value,
    #[serde(rename = "F")]
    f: Value,
}

#[derive(Debug, Clone, Deserialize)]
struct ReportFile {
    generators: Vec<String>,
    items: Vec<ItemFile>,
}

fn component(v: &Value, what: &str) -> Result<SubsetU> {
    match v {
        Value::Number(_) => Ok(SubsetU::point(number(v, what)?)),
        Value::String(s) => {
            parse_component(s, 0).map_err(|e| CliError::Invalid(format!("{what}: {e}")))
        }
        _ => Err(CliError::Invalid(format!(
            "{what}: expected a number or a string"
        ))),
    }
}

pub fn load_report(path: &Path) -> Result<NReport> {
    let file: ReportFile = parse_json(path)?;
    let items = file
        .items
        .iter()
        .map(|it| {
            let what = |c: &str| format!("item `{}` component {c}", it.prop);
            Ok(NItem {
                prop: it.prop.clone(),
                value: NValue::new(
                    component(&it.t, &what("T"))?,
                    component(&it.i, &what("I"))?,
                    component(&it.f, &what("F"))?,
                ),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NReport::new(file.generators, items)?)
}
