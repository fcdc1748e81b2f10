//! Command implementations behind the `crushtacean` binary. Every command
//! returns a JSON value for stdout (or raw text for DOT) and an exit status.

pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use crushtacean::automorphism::automorphisms;
use crushtacean::crushtacean::{nerve_check, symmetry_report, validate_crushtacean};
use crushtacean::families::{self, cycle_expand, generate_family, FamilySource};
use crushtacean::graph::{planar_embed, validate_basic, PaintedGraph, RotationSystem};
use crushtacean::{Error as CoreError, GraphDocument, GroupId};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for a negative verdict on a well-formed input, 2 for unreadable or
    /// unusable input, 3 when an internal size cap was hit.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::CapExceeded(_)) => 3,
            CliError::Core(
                CoreError::NotCrushtacean(_)
                | CoreError::Precondition(_)
                | CoreError::ProvenanceMismatch,
            ) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a successful command produced.
#[derive(Debug)]
pub struct Output {
    pub body: Body,
    pub exit_code: u8,
}

#[derive(Debug)]
pub enum Body {
    Json(Value),
    Text(String),
}

impl Output {
    fn ok(v: Value) -> Self {
        Output {
            body: Body::Json(v),
            exit_code: 0,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn read_document(path: &Path) -> CliResult<GraphDocument> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    Ok(GraphDocument::from_json(&text)?)
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(io_err(path))
}

/// The stored embedding if there is one, otherwise a computed one.
fn embedding(doc: &GraphDocument) -> CliResult<RotationSystem> {
    match &doc.rotation {
        Some(r) => Ok(r.clone()),
        None => Ok(planar_embed(&doc.graph)?),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn validate(path: &Path) -> CliResult<Output> {
    let doc = read_document(path)?;
    let g = &doc.graph;
    let v = validate_crushtacean(g);
    let mut out = json!({
        "structure": to_value(&validate_basic(g)),
        "crushtacean": to_value(&v),
    });
    if v.valid {
        let rot = match &doc.rotation {
            Some(r) => r.clone(),
            None => v.rotation.clone().expect("valid graphs are embedded"),
        };
        out["nerve"] = to_value(&nerve_check(g, &rot)?);
    }
    Ok(Output {
        body: Body::Json(out),
        exit_code: if v.valid { 0 } else { 1 },
    })
}

pub fn aut(path: &Path, painted: bool) -> CliResult<Output> {
    let doc = read_document(path)?;
    let group = automorphisms(&doc.graph, painted)?;
    let id = crushtacean::identify(&group);
    let generators: Vec<String> = group.generators().iter().map(|p| p.to_string()).collect();
    Ok(Output::ok(json!({
        "respect_painting": painted,
        "order": group.order(),
        "group": id.to_string(),
        "alias": id.geometric_alias(),
        "generators": generators,
    })))
}

fn classify_one(path: &Path, seed: Option<&PaintedGraph>) -> CliResult<Value> {
    let doc = read_document(path)?;
    Ok(to_value(&symmetry_report(&doc.graph, seed)?))
}

/// Classifies one file, or every `.json` file in a directory (in parallel,
/// reported in file-name order).
pub fn classify(path: &Path, seed: Option<&Path>) -> CliResult<Output> {
    let seed = seed.map(read_document).transpose()?.map(|d| d.graph);
    if !path.is_dir() {
        return Ok(Output::ok(classify_one(path, seed.as_ref())?));
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(io_err(path))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json") && p.is_file())
        .collect();
    files.sort();
    let results: Vec<(PathBuf, CliResult<Value>)> = files
        .into_par_iter()
        .map(|f| {
            let r = classify_one(&f, seed.as_ref());
            (f, r)
        })
        .collect();
    let mut exit_code = 0;
    let entries: Vec<Value> = results
        .into_iter()
        .map(|(f, r)| {
            let file = f.file_name().unwrap_or_default().to_string_lossy().into_owned();
            match r {
                Ok(report) => json!({ "file": file, "report": report }),
                Err(e) => {
                    exit_code = exit_code.max(e.exit_code());
                    json!({ "file": file, "error": e.to_string(), "exit_code": e.exit_code() })
                }
            }
        })
        .collect();
    Ok(Output {
        body: Body::Json(Value::Array(entries)),
        exit_code,
    })
}

/// Applies `iterations` cycle expansions; with `out` every step is written
/// as `expand-<i>.json`, otherwise the last one goes to stdout.
pub fn expand(path: &Path, iterations: usize, out: Option<&Path>) -> CliResult<Output> {
    if iterations == 0 {
        return Err(CliError::Usage("-n must be at least 1".into()));
    }
    let doc = read_document(path)?;
    let mut g = doc.graph.without_paint();
    let mut rot = embedding(&doc)?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let mut written = Vec::new();
    for i in 1..=iterations {
        (g, rot) = cycle_expand(&g, &rot)?;
        if let Some(dir) = out {
            let file = dir.join(format!("expand-{i}.json"));
            write_file(&file, &GraphDocument::with_rotation(g.clone(), rot.clone()).to_json())?;
            written.push(file.to_string_lossy().into_owned());
        }
    }
    Ok(match out {
        Some(_) => Output::ok(json!({ "written": written })),
        None => Output::ok(
            serde_json::from_str(&GraphDocument::with_rotation(g, rot).to_json())
                .expect("documents are JSON"),
        ),
    })
}

/// The graph generators available to `gen`.
pub fn generate(name: &str, n: Option<usize>) -> CliResult<PaintedGraph> {
    let need = || n.ok_or_else(|| CliError::Usage(format!("{name} needs a size parameter")));
    let g = match name {
        "borromean" => families::gamma_borromean(),
        "tetrahedron" => families::tetrahedron(),
        "cube" => families::cube(),
        "dodecahedron" => families::dodecahedron(),
        "pretzel" => families::gamma_pretzel(need()?)?,
        "ochain" => families::gamma_ochain(need()?)?,
        "wheel" => families::wheel(need()?)?,
        "prism" => families::prism(need()?)?,
        "antiprism" => families::antiprism(need()?)?,
        other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
    };
    Ok(g)
}

pub fn gen(name: &str, n: Option<usize>, out: Option<&Path>) -> CliResult<Output> {
    let g = generate(name, n)?;
    let rot = planar_embed(&g)?;
    let text = GraphDocument::with_rotation(g, rot).to_json();
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Output::ok(json!({ "written": [path.to_string_lossy()] })))
        }
        None => Ok(Output::ok(serde_json::from_str(&text).expect("documents are JSON"))),
    }
}

pub enum FamilyInput<'a> {
    Group(&'a str),
    Seed(&'a Path),
}

/// Writes `member-<k>.json` for each family member and `manifest.json`
/// into `out`; the manifest is also the command's output.
pub fn family(input: FamilyInput<'_>, count: usize, out: &Path) -> CliResult<Output> {
    let source = match input {
        FamilyInput::Group(s) => FamilySource::Target(s.parse::<GroupId>()?),
        FamilyInput::Seed(p) => FamilySource::Seed(read_document(p)?.graph),
    };
    let fam = generate_family(source, count)?;
    fs::create_dir_all(out).map_err(io_err(out))?;
    let width = count.to_string().len().max(2);
    let mut members = Vec::new();
    for (k, m) in fam.members.iter().enumerate() {
        let file = format!("member-{:0width$}.json", k + 1);
        let doc = GraphDocument::with_rotation(m.graph.clone(), m.rotation.clone());
        write_file(&out.join(&file), &doc.to_json())?;
        members.push(json!({
            "file": file,
            "expansions": m.index,
            "vertices": m.graph.vertex_count(),
            "edges": m.graph.edge_count(),
            "painted": m.graph.painted().len(),
            "aut_p_order": m.aut_p_order,
            "aut_p_group": m.aut_p_group.to_string(),
            "signature_screen": to_value(&m.screen),
        }));
    }
    let manifest = json!({
        "seed": fam.seed_name,
        "seed_vertices": fam.seed.vertex_count(),
        "seed_edges": fam.seed.edge_count(),
        "group": fam.seed_group.to_string(),
        "skipped_first": fam.skipped_first,
        "members": members,
    });
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    write_file(&out.join("manifest.json"), &text)?;
    Ok(Output::ok(manifest))
}

pub enum RenderTarget<'a> {
    Svg(&'a Path),
    Dot,
}

/// Draws the graph, or its nerve with `nerve`.
pub fn render(path: &Path, target: RenderTarget<'_>, nerve: bool) -> CliResult<Output> {
    let doc = read_document(path)?;
    let mut rot = embedding(&doc)?;
    let mut g = doc.graph;
    if nerve {
        let d = crushtacean::graph::dual(&g, &rot)?;
        g = d.graph;
        rot = d.rotation;
    }
    match target {
        RenderTarget::Dot => Ok(Output {
            body: Body::Text(render::to_dot(&g)),
            exit_code: 0,
        }),
        RenderTarget::Svg(out) => {
            let layout = render::tutte_layout(&g, &rot)?;
            write_file(out, &render::to_svg(&g, &layout))?;
            Ok(Output::ok(json!({ "written": [out.to_string_lossy()] })))
        }
    }
}
