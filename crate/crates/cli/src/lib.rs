//! Library side of the `surfcount` binary: argument types, configuration
//! merging, dispatch and output formatting.

pub mod args;
mod output;

use args::{
    AmbientArgs, BoundArgs, Cli, Command, ConfigFile, CurvesArgs, DehnArgs, DiagramArgs, FareyArgs,
    Format,
};
use output::{opt, Rendered};
use serde::Serialize;
use std::io::Read;
use std::path::Path;
use surfcount_core::bigint::{BigValue, DECIMAL_BIT_LIMIT};
use surfcount_core::bounds::{
    curve_bound, general_count, general_count_mi, sphere_count_general, sphere_count_mi,
    thickened_surface_counts, torus_chunk_counts, tubing_count, Factor, Inputs,
};
use surfcount_core::chunk::{build_chunks, edge_census};
use surfcount_core::curves::{
    area, assign_letters_to_curve, classify_area, curve_from_combination, AreaCategory, Combination,
};
use surfcount_core::dehn::{
    dehn_filling_bound, dehn_filling_terms, slope_length_lower_bound, DehnTerm, FillingQuery,
    LengthBound, SlopeLength,
};
use surfcount_core::farey::{band_surface, farey_path_from, BandSurface};
use surfcount_core::oracle::{
    enumerate_combinations, memory_estimate, zero_area_census, EnumerationOptions,
};
use surfcount_core::{
    parse_gauss, parse_pd, AmbientCase, AmbientContext, BoundReport, Diagram, Error,
    Representativity, Side, Slope, SurfaceClass,
};

/// Failure with a stable code and the process exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliError {
    pub code: String,
    pub message: String,
    #[serde(skip)]
    pub exit: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: "usage".into(),
            message: message.into(),
            exit: 1,
        }
    }

    fn io(message: impl Into<String>) -> CliError {
        CliError {
            code: "io".into(),
            message: message.into(),
            exit: 1,
        }
    }

    fn internal(message: impl Into<String>) -> CliError {
        CliError {
            code: "internal".into(),
            message: message.into(),
            exit: 1,
        }
    }

    /// `{"error": {"code": ..., "message": ...}}` on one line.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": { "code": self.code, "message": self.message } }).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError {
            code: e.code().into(),
            message: e.to_string(),
            exit: if e.is_domain() { 2 } else { 1 },
        }
    }
}

/// Fully resolved invocation: flags merged over the config file.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub workers: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, CliError> {
        let file = match &cli.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
                toml::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let mut command = cli.command;
        match &mut command {
            Command::Validate(a) => merge_diagram(&mut a.diagram, &file),
            Command::Chunk(a) => merge_diagram(&mut a.diagram, &file),
            Command::Curves(a) => merge_diagram(&mut a.diagram, &file),
            Command::Bound(a) => {
                merge_diagram(&mut a.diagram, &file);
                merge_ambient(&mut a.ambient, &file);
            }
            Command::Dehn(a) => {
                merge_diagram(&mut a.diagram, &file);
                merge_ambient(&mut a.ambient, &file);
            }
            Command::Farey(_) => {}
        }
        Ok(RunConfig {
            command,
            format: cli.format.or(file.format).unwrap_or_default(),
            workers: cli.workers.or(file.workers),
        })
    }
}

fn merge_diagram(d: &mut DiagramArgs, file: &ConfigFile) {
    if !d.is_given() {
        d.pd = file.pd.clone();
        if d.pd.is_none() {
            d.gauss = file.gauss.clone();
        }
    }
}

fn merge_ambient(a: &mut AmbientArgs, file: &ConfigFile) {
    a.ambient = a.ambient.take().or_else(|| file.ambient.clone());
    a.x = a.x.or(file.x);
    a.representativity = a
        .representativity
        .take()
        .or_else(|| file.representativity.clone());
}

/// Runs the command and returns what should go to stdout.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let exec = || -> Result<String, CliError> {
        let rendered = match &cfg.command {
            Command::Validate(a) => validate(&a.diagram, !a.skip_weakly_prime, a.ambient_genus)?,
            Command::Chunk(a) => chunk(&a.diagram)?,
            Command::Curves(a) => curves(a)?,
            Command::Bound(a) => bound(a)?,
            Command::Farey(a) => farey(a)?,
            Command::Dehn(a) => dehn(a)?,
        };
        rendered.render(cfg.format)
    };
    match cfg.workers {
        Some(0) => Err(CliError::usage("--workers must be positive")),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| CliError::internal(e.to_string()))?
            .install(exec),
        None => exec(),
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn load_diagram(d: &DiagramArgs) -> Result<Diagram, CliError> {
    let diagram = if let Some(p) = &d.pd {
        parse_pd(&read_source(p)?)
    } else if let Some(t) = &d.pd_text {
        parse_pd(t)
    } else if let Some(p) = &d.gauss {
        parse_gauss(&read_source(p)?)
    } else if let Some(t) = &d.gauss_text {
        parse_gauss(t)
    } else {
        return Err(CliError::usage(
            "a diagram is required: use --pd, --pd-text, --gauss or --gauss-text",
        ));
    };
    Ok(diagram.map_err(Error::from)?)
}

fn validate(
    d: &DiagramArgs,
    weakly_prime: bool,
    ambient_genus: Option<usize>,
) -> Result<Rendered, CliError> {
    let diagram = load_diagram(d)?;
    let r = diagram.validate(weakly_prime, ambient_genus);
    let fields = vec![
        ("crossings", diagram.crossing_count().to_string()),
        ("alternating", plain(&r.alternating)),
        ("cellular", plain(&r.cellular)),
        ("checkerboard_colorable", plain(&r.checkerboard_colorable)),
        ("weakly_prime", plain(&r.weakly_prime)),
        ("each_component_crossed", plain(&r.each_component_crossed)),
        ("genus", r.genus.to_string()),
        ("surface_components", r.surface_components.to_string()),
        ("link_components", r.link_components.to_string()),
        ("notes", r.notes.join("; ")),
    ];
    Rendered::fields(&r, fields)
}

/// Serde name of a unit enum value, without quotes.
fn plain<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v)
        .unwrap_or_default()
        .trim_matches('"')
        .to_string()
}

fn chunk(d: &DiagramArgs) -> Result<Rendered, CliError> {
    let diagram = load_diagram(d)?;
    let c = build_chunks(&diagram)?;
    let rows = edge_census(&c)
        .into_iter()
        .map(|(side, comp, e)| {
            vec![
                side.to_string(),
                comp.to_string(),
                e.interior.to_string(),
                e.truncation.to_string(),
                e.total.to_string(),
            ]
        })
        .collect();
    Rendered::new(
        &c,
        &["side", "component", "interior", "truncation", "total"],
        rows,
    )
}

fn parse_side(s: &str) -> Result<Side, CliError> {
    match s {
        "+" | "plus" => Ok(Side::Plus),
        "-" | "minus" => Ok(Side::Minus),
        _ => Err(CliError::usage(format!("side must be + or -, got `{s}`"))),
    }
}

#[derive(Serialize)]
struct CombinationReport {
    combination: Vec<String>,
    faces: Vec<usize>,
    word: String,
    piece_chi: i64,
    area: i64,
    category: AreaCategory,
    locally_normal: bool,
}

fn curves(a: &CurvesArgs) -> Result<Rendered, CliError> {
    let diagram = load_diagram(&a.diagram)?;
    let chunks = build_chunks(&diagram)?;
    let side = chunks
        .side(parse_side(&a.side)?, a.component)
        .ok_or_else(|| CliError::usage(format!("no surface component {}", a.component)))?;

    if let Some(text) = &a.combination {
        let comb = Combination::parse(text, side, &diagram)?;
        let curve = curve_from_combination(side, &comb)?;
        let word = assign_letters_to_curve(side, &curve, a.meridianal)?;
        let ar = area(&word, a.piece_chi);
        let report = CombinationReport {
            combination: comb
                .hits
                .iter()
                .map(|&h| side.edge_name(h, &diagram))
                .collect(),
            faces: curve.faces.clone(),
            word: word.word.clone(),
            piece_chi: a.piece_chi,
            area: ar,
            category: classify_area(a.piece_chi, ar)?,
            locally_normal: curve.is_locally_normal(side, &diagram),
        };
        let fields = vec![
            ("combination", report.combination.join(" ")),
            ("word", report.word.clone()),
            ("piece_chi", report.piece_chi.to_string()),
            ("area", report.area.to_string()),
            ("category", plain(&report.category)),
            ("locally_normal", report.locally_normal.to_string()),
        ];
        return Rendered::fields(&report, fields);
    }

    if a.census {
        let c = zero_area_census(side, &diagram, a.meridianal);
        let mut rows: Vec<Vec<String>> = c
            .classes
            .iter()
            .map(|(k, v)| vec![k.clone(), v.to_string()])
            .collect();
        rows.push(vec!["not_meridianal".into(), c.not_meridianal.to_string()]);
        rows.push(vec![
            "unclassified".into(),
            c.unclassified.len().to_string(),
        ]);
        return Rendered::new(&c, &["class", "count"], rows);
    }

    let opts = EnumerationOptions {
        max_hits: a.max_hits.unwrap_or(4),
        interior_only: a.interior_only,
        allow_large: a.allow_large,
    };
    if a.allow_large && opts.max_hits > surfcount_core::oracle::DESK_SCALE_MAX_HITS {
        eprintln!(
            "{}",
            serde_json::json!({ "memory_estimate_bytes": memory_estimate(side, opts.max_hits) })
        );
    }
    let r = enumerate_combinations(side, &diagram, &opts)?;
    let mut rows: Vec<Vec<String>> = r
        .by_length
        .iter()
        .map(|(k, v)| vec!["length".into(), k.to_string(), v.to_string()])
        .collect();
    rows.extend(
        r.by_word
            .iter()
            .map(|(k, v)| vec!["word".into(), k.clone(), v.to_string()]),
    );
    rows.push(vec!["total".into(), String::new(), r.count.to_string()]);
    rows.push(vec![
        "normal_candidates".into(),
        String::new(),
        r.normal_candidates.to_string(),
    ]);
    Rendered::new(&r, &["kind", "key", "count"], rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BoundKind {
    Curves,
    SphereMi,
    Sphere,
    GeneralMi,
    General,
    TorusMi,
    Torus,
    ThickenedSurfaceMi,
    ThickenedSurface,
    Tubing,
}

fn parse_bound_kind(s: &str) -> Result<BoundKind, CliError> {
    Ok(match s.replace('-', "_").as_str() {
        "5.4" | "curves" => BoundKind::Curves,
        "6.1" | "sphere_mi" => BoundKind::SphereMi,
        "6.3" | "sphere" => BoundKind::Sphere,
        "7.1" | "general_mi" => BoundKind::GeneralMi,
        "7.3" | "general" => BoundKind::General,
        "torus_mi" => BoundKind::TorusMi,
        "8.3" | "torus" => BoundKind::Torus,
        "thickened_surface_mi" => BoundKind::ThickenedSurfaceMi,
        "8.5" | "thickened_surface" => BoundKind::ThickenedSurface,
        "tubing" => BoundKind::Tubing,
        "9.1" | "dehn" => {
            return Err(CliError::usage(
                "the Dehn-filling count has its own subcommand: dehn",
            ))
        }
        other => return Err(CliError::usage(format!("unknown bound `{other}`"))),
    })
}

fn ambient_context(a: &AmbientArgs) -> Result<AmbientContext, CliError> {
    let case: AmbientCase = match &a.ambient {
        Some(s) => s.parse()?,
        None => AmbientCase::SphereInS3,
    };
    let mut ctx = AmbientContext::new(case);
    if let Some(x) = a.x {
        ctx = ctx.with_x(x);
    }
    if let Some(r) = &a.representativity {
        ctx = ctx.with_representativity(r.parse::<Representativity>()?);
    }
    Ok(ctx)
}

fn resolve_n(n: Option<u64>, d: &DiagramArgs) -> Result<(u64, Option<Diagram>), CliError> {
    let diagram = if d.is_given() {
        Some(load_diagram(d)?)
    } else {
        None
    };
    match (n, &diagram) {
        (Some(n), Some(dg)) if n != dg.crossing_count() as u64 => Err(CliError::usage(format!(
            "--n {n} disagrees with the diagram's {} crossings",
            dg.crossing_count()
        ))),
        (_, Some(dg)) => Ok((dg.crossing_count() as u64, diagram)),
        (Some(n), None) => Ok((n, None)),
        (None, None) => Err(CliError::usage("give a diagram or --n")),
    }
}

fn surface_class(a: &BoundArgs) -> Result<SurfaceClass, CliError> {
    if a.genus.is_some() || a.boundary.is_some() || a.nonorientable {
        let sc = SurfaceClass::new(
            a.genus.unwrap_or(0),
            a.boundary.unwrap_or(0),
            !a.nonorientable,
        )?;
        if let Some(chi) = a.chi {
            if chi != sc.chi() {
                return Err(CliError::usage(format!(
                    "--chi {chi} disagrees with the surface class, whose chi is {}",
                    sc.chi()
                )));
            }
        }
        return Ok(sc);
    }
    match a.chi {
        Some(chi) if chi <= 2 => Ok(SurfaceClass::orientable(0, (2 - chi) as u64)),
        Some(chi) => Err(Error::OutOfDomain(format!("no surface has chi {chi}")).into()),
        None => Err(CliError::usage("give --chi, or --genus and --boundary")),
    }
}

fn bound(a: &BoundArgs) -> Result<Rendered, CliError> {
    let kind = parse_bound_kind(&a.theorem)?;
    let (n, _) = resolve_n(a.n, &a.diagram)?;
    let sc = surface_class(a)?;
    let chi = sc.chi();
    let ctx = ambient_context(&a.ambient)?;
    let basic = || Inputs {
        n,
        chi,
        ..Inputs::default()
    };
    let report = match kind {
        BoundKind::Curves => {
            let value = curve_bound(n, chi)?;
            BoundReport {
                bound: "curves".into(),
                inputs: basic(),
                value,
                factors: vec![Factor::new("curves", 6 * n, (-20 * chi) as u64)],
                terms: Vec::new(),
            }
        }
        BoundKind::Tubing => BoundReport {
            bound: "tubing".into(),
            inputs: basic(),
            value: tubing_count(chi)?,
            factors: Vec::new(),
            terms: Vec::new(),
        },
        BoundKind::SphereMi => sphere_count_mi(n, chi)?,
        BoundKind::Sphere => sphere_count_general(n, chi)?,
        BoundKind::GeneralMi => general_count_mi(n, &sc, &ctx)?,
        BoundKind::General => general_count(n, &sc, &ctx)?,
        BoundKind::TorusMi => torus_chunk_counts(n, &sc, &ctx)?.0,
        BoundKind::Torus => torus_chunk_counts(n, &sc, &ctx)?.1,
        BoundKind::ThickenedSurfaceMi => thickened_surface_counts(n, &sc, &ctx)?.0,
        BoundKind::ThickenedSurface => thickened_surface_counts(n, &sc, &ctx)?.1,
    };
    Rendered::fields(&report, bound_fields(&report))
}

fn value_text(v: &BigValue) -> String {
    match (&v.decimal, &v.hex) {
        (Some(d), _) => d.clone(),
        (None, Some(h)) => format!("0x{h}"),
        (None, None) => String::new(),
    }
}

fn bound_fields(r: &BoundReport) -> Vec<(&'static str, String)> {
    let v = BigValue::new(&r.value);
    let i = &r.inputs;
    let mut f = vec![
        ("bound", r.bound.clone()),
        ("n", i.n.to_string()),
        ("chi", i.chi.to_string()),
        ("genus", opt(i.genus)),
        ("boundary", opt(i.boundary)),
        ("orientable", opt(i.orientable)),
        ("x", opt(i.x)),
        ("ambient", opt(i.ambient)),
    ];
    if i.slope.is_some() {
        f.push(("slope", opt(i.slope.clone())));
        f.push(("length", opt(i.length.clone())));
        f.push(("boundary_budget", opt(i.boundary_budget)));
    }
    f.extend([
        ("bits", v.bits.to_string()),
        ("log10", format!("{:.6}", v.log10)),
        ("value", value_text(&v)),
    ]);
    f
}

#[derive(Serialize)]
struct FareyReport {
    base: Slope,
    path: Vec<Slope>,
    edges: usize,
    surface: BandSurface,
}

fn farey(a: &FareyArgs) -> Result<Rendered, CliError> {
    let target: Slope = a.target.parse()?;
    let base: Slope = match &a.base {
        Some(b) => b.parse()?,
        None => Slope::ZERO,
    };
    let path = farey_path_from(base, target)?;
    let surface = band_surface(&path)?;
    let report = FareyReport {
        base,
        edges: path.edge_count(),
        path: path.vertices,
        surface,
    };
    let fields = vec![
        ("base", report.base.to_string()),
        (
            "path",
            report
                .path
                .iter()
                .map(Slope::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        ),
        ("edges", report.edges.to_string()),
        ("genus", report.surface.genus.to_string()),
        ("chi", report.surface.chi.to_string()),
        ("orientable", "false".into()),
    ];
    Rendered::fields(&report, fields)
}

#[derive(Serialize)]
struct DehnReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    length_bound: Option<LengthBound>,
    length: String,
    boundary_budget: u64,
    terms: Vec<DehnTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<BoundReport>,
}

fn dehn(a: &DehnArgs) -> Result<Rendered, CliError> {
    let (n, diagram) = resolve_n(a.n, &a.diagram)?;
    let chi_pi = match (&diagram, a.chi_pi) {
        (Some(d), _) => {
            if d.link_components.len() != 1 {
                return Err(Error::PreconditionFailed(format!(
                    "Dehn filling needs a knot, the diagram has {} components",
                    d.link_components.len()
                ))
                .into());
            }
            d.surface_euler_characteristic()
        }
        (None, c) => c.unwrap_or(2),
    };
    let slope: Slope = a.slope.parse()?;
    let x = ambient_context(&a.ambient)?.resolved_x()?;
    let (query, length_bound) = match &a.length {
        Some(l) => {
            let length: SlopeLength = l.parse()?;
            (
                FillingQuery {
                    n,
                    genus: a.genus,
                    x,
                    slope,
                    length,
                },
                None,
            )
        }
        None => {
            let lb = slope_length_lower_bound(n, chi_pi, slope.q)?;
            (
                FillingQuery::with_derived_length(n, a.genus, x, slope, chi_pi)?,
                Some(lb),
            )
        }
    };
    let terms = dehn_filling_terms(&query)?;
    let count = if a.terms_only {
        None
    } else {
        Some(dehn_filling_bound(&query)?)
    };
    let report = DehnReport {
        length_bound,
        length: query.length.to_string(),
        boundary_budget: terms.len() as u64 - 1,
        terms,
        count,
    };
    let rows = report
        .terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let value = report.count.as_ref().map(|c| {
                let v = &c.terms[i].value;
                if v.bits() > DECIMAL_BIT_LIMIT {
                    format!("~1e{:.3}", surfcount_core::bigint::log10(v))
                } else {
                    v.to_string()
                }
            });
            vec![
                t.b.to_string(),
                t.chi.to_string(),
                t.classes_exponent.to_string(),
                t.curves_exponent.to_string(),
                opt(value),
            ]
        })
        .collect();
    Rendered::new(
        &report,
        &["b", "chi", "classes_exponent", "curves_exponent", "value"],
        rows,
    )
}
