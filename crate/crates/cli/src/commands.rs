use std::fmt;

use serde_json::{json, Value};

use csl_core::links::{
    census, chain_link, cube_edge_link, cube_link, cyclic_braid_closure, five_cycle_braid,
    helical_link, icosahedral_link, menagerie, LinkBlueprint, Linking,
};
use csl_core::report::{json_num, sig15};
use csl_core::train_track::{biggs_substitution, dilatation_report, DEFAULT_TOL};
use csl_core::{biggs_map, Exec, FieldSpec};

use crate::{Command, FamilyArg, RunConfig};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

/// Result of one subcommand in every output format.
pub struct Outcome {
    pub json: Value,
    pub table: String,
    pub dot: Option<String>,
    /// All checks passed.
    pub ok: bool,
}

pub fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    match &config.command {
        Command::Map { n, p, k } => cmd_map(*n, *p, *k),
        Command::Transitivity { family, n, t, m } => cmd_transitivity(*family, *n, *t, *m),
        Command::Links => cmd_links(),
        Command::Dilatation => cmd_dilatation(config.tol),
        Command::Census { from, to } => cmd_census(*from, *to),
    }
}

fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([headers[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    out += &line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn field_for_map(n: Option<u32>, p: Option<u32>, k: Option<u32>) -> Result<FieldSpec, CliError> {
    let spec = match (n, p) {
        (Some(n), None) => FieldSpec::of_order(n),
        (None, Some(p)) => FieldSpec::new(p, k.unwrap_or(1)),
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give either --n or --p/--k, not both".into(),
            ))
        }
        (None, None) => return Err(CliError::Usage("missing --n (or --p/--k)".into())),
    };
    let spec = spec.map_err(|e| CliError::Usage(e.to_string()))?;
    if spec.order() <= 3 {
        return Err(CliError::Usage(format!(
            "field order must exceed 3, got {}",
            spec.order()
        )));
    }
    Ok(spec)
}

fn cmd_map(n: Option<u32>, p: Option<u32>, k: Option<u32>) -> Result<Outcome, CliError> {
    let spec = field_for_map(n, p, k)?;
    let map = biggs_map(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let s = map.summary();
    let adjacency = map.face_adjacency_complete();
    let matches = s.genus_matches();
    let json = json!({
        "n": s.n,
        "V": s.vertices,
        "E": s.edges,
        "F": s.faces,
        "genus": s.genus,
        "formula_genus": s.formula_genus,
        "vertex_degree": s.vertex_degree,
        "match": matches,
        "face_adjacency_complete": adjacency,
    });
    let opt = |x: Option<i64>| x.map_or("-".into(), |v| v.to_string());
    let table = table(
        &[
            "n",
            "V",
            "E",
            "F",
            "genus",
            "formula_genus",
            "vertex_degree",
            "match",
        ],
        &[vec![
            s.n.to_string(),
            s.vertices.to_string(),
            s.edges.to_string(),
            s.faces.to_string(),
            s.genus.to_string(),
            opt(s.formula_genus),
            opt(s.vertex_degree.map(|d| d as i64)),
            matches.to_string(),
        ]],
    );
    Ok(Outcome {
        json,
        table,
        dot: Some(map.face_adjacency_dot(Some(&spec))),
        ok: matches && adjacency,
    })
}

fn blueprint_for(
    family: FamilyArg,
    n: Option<u32>,
    t: Option<i64>,
    m: Option<usize>,
) -> Result<LinkBlueprint, CliError> {
    let usage = |e: csl_core::LinkError| CliError::Usage(e.to_string());
    Ok(match family {
        FamilyArg::Chain => chain_link(n.unwrap_or(6) as usize, t.unwrap_or(0)).map_err(usage)?,
        FamilyArg::Braid => {
            cyclic_braid_closure(&five_cycle_braid(), m.unwrap_or(1)).map_err(usage)?
        }
        FamilyArg::Cube => cube_link(),
        FamilyArg::CubeEdge => cube_edge_link(),
        FamilyArg::Icosahedral => icosahedral_link(),
        FamilyArg::Helical => {
            let spec =
                FieldSpec::of_order(n.unwrap_or(5)).map_err(|e| CliError::Usage(e.to_string()))?;
            helical_link(&spec).map_err(usage)?.0
        }
    })
}

fn cmd_transitivity(
    family: FamilyArg,
    n: Option<u32>,
    t: Option<i64>,
    m: Option<usize>,
) -> Result<Outcome, CliError> {
    let blueprint = blueprint_for(family, n, t, m)?;
    let group = blueprint
        .symmetry_group()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let degree = group.transitivity_degree();
    let invariants = blueprint.check_invariants();
    let json = json!({
        "family": blueprint.family,
        "n_components": blueprint.n_components(),
        "symmetry_order": group.order(),
        "transitivity_degree": degree,
        "invariants_hold": invariants,
    });
    let table = table(
        &["family", "components", "order", "degree"],
        &[vec![
            blueprint.family.name().to_string(),
            blueprint.n_components().to_string(),
            group.order().to_string(),
            degree.to_string(),
        ]],
    );
    Ok(Outcome {
        json,
        table,
        dot: None,
        ok: invariants,
    })
}

fn cmd_links() -> Result<Outcome, CliError> {
    let blueprints = menagerie().map_err(|e| CliError::Failed(e.to_string()))?;
    let mut exports = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for b in &blueprints {
        let v = b.export().map_err(|e| CliError::Failed(e.to_string()))?;
        ok &= b.check_invariants();
        rows.push(vec![
            b.family.name().to_string(),
            v["ambient"].as_str().unwrap_or_default().to_string(),
            b.n_components().to_string(),
            v["symmetry_order"].to_string(),
            v["transitivity_degree"].to_string(),
            match b.linking {
                Linking::Complete => "complete".to_string(),
                Linking::Matrix(_) => "matrix".to_string(),
            },
            v["hyperbolicity"]["status"]
                .as_str()
                .unwrap_or_default()
                .to_string(),
        ]);
        exports.push(v);
    }
    let table = table(
        &[
            "family",
            "ambient",
            "cusps",
            "order",
            "degree",
            "linking",
            "hyperbolicity",
        ],
        &rows,
    );
    Ok(Outcome {
        json: Value::Array(exports),
        table,
        dot: None,
        ok,
    })
}

fn cmd_dilatation(tol: Option<f64>) -> Result<Outcome, CliError> {
    let tol = tol.unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {tol}"
        )));
    }
    let r = dilatation_report(tol).map_err(|e| CliError::Failed(e.to_string()))?;
    // residuals scale with the requested tolerance
    let threshold = f64::max(1e-12, 100.0 * tol);
    let res = &r.residuals;
    let ok = res.max() <= threshold;
    let json = json!({
        "lambda": json_num(r.lambda),
        "lambda_inverse": json_num(r.lambda_inverse),
        "w": json_num(r.w),
        "z": json_num(r.z),
        "residuals": {
            "eq1": json_num(res.eq1),
            "eq2": json_num(res.eq2),
            "eq3": json_num(res.eq3),
            "char_poly": json_num(res.char_poly),
            "inverse": json_num(res.inverse),
            "transpose": json_num(res.transpose),
            "exact": json_num(res.exact),
        },
        "tol": json_num(tol),
        "pass": ok,
    });
    let rows = vec![
        vec!["lambda".to_string(), sig15(r.lambda)],
        vec!["lambda_inverse".to_string(), sig15(r.lambda_inverse)],
        vec!["w".to_string(), sig15(r.w)],
        vec!["z".to_string(), sig15(r.z)],
        vec!["max_residual".to_string(), sig15(res.max())],
    ];
    Ok(Outcome {
        json,
        table: table(&["quantity", "value"], &rows),
        dot: Some(biggs_substitution().to_dot()),
        ok,
    })
}

fn cmd_census(from: u32, to: u32) -> Result<Outcome, CliError> {
    if to > csl_core::field::DEFAULT_ORDER_CAP {
        return Err(CliError::Usage(format!(
            "--to must not exceed the field-order cap {}",
            csl_core::field::DEFAULT_ORDER_CAP
        )));
    }
    let rows = census(from, to, Exec::default()).map_err(|e| CliError::Failed(e.to_string()))?;
    let ok = rows.iter().all(|r| r.passes());
    let json = json!(rows
        .iter()
        .map(|r| json!({
            "n": r.n,
            "cusps": r.components,
            "complete_linking": r.complete_linking,
            "symmetry_order": r.symmetry_order,
            "transitivity_degree": r.transitivity_degree,
            "pass": r.passes(),
        }))
        .collect::<Vec<_>>());
    let text_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.components.to_string(),
                r.symmetry_order.to_string(),
                r.transitivity_degree.to_string(),
                r.complete_linking.to_string(),
                r.passes().to_string(),
            ]
        })
        .collect();
    let table = table(
        &["n", "cusps", "order", "degree", "complete", "pass"],
        &text_rows,
    );
    Ok(Outcome {
        json,
        table,
        dot: None,
        ok,
    })
}
