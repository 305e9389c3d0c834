use std::io::Read;

use fox_coloring::diagram::{build_diagram, catalog, catalog_names, parse_pd, PlanarDiagram};

use crate::commands::Failure;

/// A diagram together with the name used for it in reports.
pub struct Target {
    pub name: String,
    pub diagram: PlanarDiagram,
}

pub fn resolve(arg: &str) -> Result<Target, Failure> {
    let (name, text) = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        ("stdin".to_string(), s)
    } else if let Some(path) = arg.strip_prefix('@') {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("reading {path}: {e}")))?;
        (path.to_string(), s)
    } else if catalog_names().contains(&arg) {
        let pd = catalog(arg)?;
        return Ok(Target {
            name: arg.to_string(),
            diagram: build_diagram(pd),
        });
    } else {
        let looks_like_pd =
            arg.trim_start().starts_with('[') || arg.trim().eq_ignore_ascii_case("unknot");
        if !looks_like_pd {
            return Err(Failure::input(format!(
                "`{arg}` is neither a catalog name nor a PD code (known: {})",
                catalog_names().join(", ")
            )));
        }
        ("input".to_string(), arg.to_string())
    };
    let pd = parse_pd(text.trim())?;
    Ok(Target {
        name,
        diagram: build_diagram(pd),
    })
}
