//! JSON file formats.
//!
//! Set systems: `{"ground": n, "feasible": [[ints]...]}` with 1-based
//! elements, the empty set written as `[]`. Ribbon graphs:
//! `{"edges": [{"twisted": bool}...], "vertices": [[half-edge ints]...]}`
//! with 0-based half-edge ids, edge `i` owning half-edges `2i` and `2i+1`.
//! Serialization always emits canonical order, so parse-then-serialize is
//! byte-identical on canonical files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monotone::{Script, ScriptStep, WidthTrace};
use crate::ribbon::{Edge, RibbonGraph};
use crate::set_system::{SetSystem, Subset};

#[derive(Serialize, Deserialize)]
struct SetSystemFile {
    ground: u32,
    feasible: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    twisted: bool,
}

#[derive(Serialize, Deserialize)]
struct RibbonGraphFile {
    edges: Vec<EdgeFile>,
    vertices: Vec<Vec<usize>>,
}

/// Trace output schema used by the CLI.
#[derive(Serialize, Deserialize)]
pub struct TraceFile {
    pub sequence: Vec<u32>,
    pub widths: Vec<u32>,
    pub max_twist_width: u32,
    pub feasible_final: bool,
}

#[derive(Serialize, Deserialize)]
struct ScriptStepFile {
    chosen_set: Vec<u32>,
    pick: u32,
}

#[derive(Serialize, Deserialize)]
struct ScriptFile {
    #[serde(default)]
    initial: Option<Vec<u32>>,
    steps: Vec<ScriptStepFile>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_set_system_str(text: &str) -> Result<SetSystem> {
    let file: SetSystemFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    SetSystem::from_element_lists(file.ground, &file.feasible)
}

pub fn parse_set_system_file(path: &Path) -> Result<SetSystem> {
    parse_set_system_str(&read(path)?)
}

/// Compact canonical JSON, without a trailing newline.
pub fn set_system_to_json(d: &SetSystem) -> String {
    let file = SetSystemFile {
        ground: d.ground_size(),
        feasible: d.family().iter().map(|s| s.elements()).collect(),
    };
    serde_json::to_string(&file).expect("set system serialization cannot fail")
}

pub fn write_set_system_file(path: &Path, d: &SetSystem) -> Result<()> {
    fs::write(path, set_system_to_json(d) + "\n")
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_ribbon_graph_str(text: &str) -> Result<RibbonGraph> {
    let file: RibbonGraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    RibbonGraph::new(
        file.edges.iter().map(|e| Edge { twisted: e.twisted }).collect(),
        file.vertices,
    )
}

pub fn parse_ribbon_graph_file(path: &Path) -> Result<RibbonGraph> {
    parse_ribbon_graph_str(&read(path)?)
}

pub fn ribbon_graph_to_json(g: &RibbonGraph) -> String {
    let file = RibbonGraphFile {
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeFile { twisted: e.twisted })
            .collect(),
        vertices: g.vertices().to_vec(),
    };
    serde_json::to_string(&file).expect("ribbon graph serialization cannot fail")
}

pub fn write_ribbon_graph_file(path: &Path, g: &RibbonGraph) -> Result<()> {
    fs::write(path, ribbon_graph_to_json(g) + "\n")
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn trace_to_json(trace: &WidthTrace, feasible_final: bool) -> String {
    let file = TraceFile {
        sequence: trace.sequence.clone(),
        widths: trace.widths.clone(),
        max_twist_width: trace.attained,
        feasible_final,
    };
    serde_json::to_string(&file).expect("trace serialization cannot fail")
}

pub fn parse_script_str(text: &str, ground: u32) -> Result<Script> {
    let file: ScriptFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let initial = file
        .initial
        .map(|elems| Subset::from_elements(&elems, ground))
        .transpose()?;
    let steps = file
        .steps
        .iter()
        .map(|s| {
            Ok(ScriptStep {
                chosen_set: Subset::from_elements(&s.chosen_set, ground)?,
                pick: s.pick,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Script { initial, steps })
}

pub fn parse_script_file(path: &Path, ground: u32) -> Result<Script> {
    parse_script_str(&read(path)?, ground)
}
