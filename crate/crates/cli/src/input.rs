use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use coalition_core::graph6::read_graph6_lines;
use coalition_core::{build_named, parse_graph6, Graph};

use crate::args::InputArgs;
use crate::CliError;

/// The graphs named by one input source, plus whether the source can hold several.
pub struct Loaded {
    pub graphs: Vec<Graph>,
    pub multi: bool,
}

pub fn load(input: &InputArgs) -> Result<Loaded, CliError> {
    if let Some(expr) = &input.named {
        return Ok(Loaded { graphs: vec![build_named(expr)?], multi: false });
    }
    if let Some(text) = &input.g6 {
        return Ok(Loaded { graphs: vec![parse_g6(text)?], multi: false });
    }
    if let Some(path) = &input.file {
        return Ok(Loaded { graphs: load_file(path)?, multi: true });
    }
    Err(CliError::Usage("one of --named, --g6 or --file is required".into()))
}

pub fn parse_g6(text: &str) -> Result<Graph, CliError> {
    Ok(parse_graph6(text.trim())?)
}

pub fn load_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let file = File::open(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let graphs = read_graph6_lines(BufReader::new(file))
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(CliError::Usage(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}
